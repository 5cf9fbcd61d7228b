"""Skew-shape posets, Schur functions and symmetric group characters.

A (skew) Young diagram in English convention becomes a labeled poset with
one element per cell, weak edges along rows and strict edges down
columns; its generating function is the (skew) Schur function.  The
character value chi_lambda(mu) is then the PsiHat coefficient of any
rearrangement of mu, and is independently computable through border
strip tableaux.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .compositions import check_partition, partitions_of, z
from .mn import mn_expansion
from .posets import LabeledPoset, from_covers


@dataclass(frozen=True)
class SkewShape:
    outer: tuple
    inner: tuple = ()

    def __post_init__(self):
        outer = check_partition(self.outer)
        inner = tuple(self.inner)
        if inner:
            check_partition(inner)
        if len(inner) > len(outer):
            raise ValueError("inner shape is taller than outer")
        if any(inner[i] > outer[i] for i in range(len(inner))):
            raise ValueError("inner shape does not fit inside outer")
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)

    def cells(self):
        """Cells (row, col), 0-indexed, row 0 on top."""
        out = []
        for r, width in enumerate(self.outer):
            start = self.inner[r] if r < len(self.inner) else 0
            out.extend((r, c) for c in range(start, width))
        return out

    def size(self):
        return len(self.cells())


def shape_to_poset(shape: SkewShape) -> LabeledPoset:
    """One element per cell; row steps are weak edges, column steps strict.

    Labels run through the rows from the bottom row upward, left to right,
    so entries of a partition surjection weakly increase along rows and
    strictly increase down columns.  All weights are 1.
    """
    cells = shape.cells()
    if not cells:
        raise ValueError("shape has no cells")
    index = {cell: i for i, cell in enumerate(cells)}
    covers = []
    for (r, c), i in index.items():
        if (r, c + 1) in index:
            covers.append((i, index[(r, c + 1)]))
        if (r + 1, c) in index:
            covers.append((i, index[(r + 1, c)]))
    by_bottom_row = sorted(cells, key=lambda rc: (-rc[0], rc[1]))
    omega = [0] * len(cells)
    for rank, cell in enumerate(by_bottom_row, start=1):
        omega[index[cell]] = rank
    return from_covers(len(cells), covers, omega, [1] * len(cells))


@lru_cache(maxsize=None)
def _schur_psihat_terms(lam):
    return mn_expansion(shape_to_poset(SkewShape(lam))).terms


def chi(lam, mu) -> int:
    """Character value read off the poset expansion of the Schur function."""
    lam = check_partition(lam)
    mu = check_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError("lambda and mu must have the same size")
    value = _schur_psihat_terms(lam).get(mu, Fraction(0))
    if value.denominator != 1:
        raise ArithmeticError(f"non-integer character value {value}")
    return int(value)


def _skew_cells(outer, inner):
    inner = tuple(inner) + (0,) * (len(outer) - len(inner))
    return [(r, c) for r in range(len(outer)) for c in range(inner[r], outer[r])]


def _is_border_strip(outer, inner):
    """The skew diagram outer/inner is connected with no 2x2 block."""
    cells = set(_skew_cells(outer, inner))
    if not cells:
        return False
    if any({(r, c), (r, c + 1), (r + 1, c), (r + 1, c + 1)} <= cells for r, c in cells):
        return False
    seen = set()
    stack = [next(iter(cells))]
    while stack:
        r, c = stack.pop()
        if (r, c) in seen:
            continue
        seen.add((r, c))
        for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
            if nb in cells:
                stack.append(nb)
    return seen == cells


def _strip_height(outer, inner):
    return len({r for r, _ in _skew_cells(outer, inner)}) - 1


def _strip_removals(lam, size):
    """All (smaller shape, height) after removing one border strip of `size`."""
    lam = tuple(lam)
    total = sum(lam)
    out = []
    for smaller in partitions_of(total - size):
        padded = smaller + (0,) * (len(lam) - len(smaller))
        if len(smaller) > len(lam) or any(padded[i] > lam[i] for i in range(len(lam))):
            continue
        if _is_border_strip(lam, padded):
            out.append((smaller, _strip_height(lam, padded)))
    return out


@dataclass(frozen=True)
class BorderStripTableau:
    """A decomposition of a shape into border strips of prescribed sizes."""

    assignment: tuple  # ((row, col, strip_index), ...)
    heights: tuple  # per strip, row span minus one


def border_strip_tableaux(lam, mu):
    """All border strip tableaux of shape lam and type mu.

    Strips are removed in reverse type order (largest index first), so
    strip k occupies the cells of lam absent from the shape after k
    removals.
    """
    lam = check_partition(lam)
    mu = check_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError("lambda and mu must have the same size")

    out = []

    def peel(shape, k, removed, heights):
        if k == 0:
            if shape:
                return
            cells = tuple(sorted((r, c, idx) for (r, c), idx in removed.items()))
            out.append(BorderStripTableau(cells, tuple(heights)))
            return
        size = mu[k - 1]
        for smaller, height in _strip_removals(shape, size):
            strip = set(_skew_cells(shape, smaller + (0,) * (len(shape) - len(smaller))))
            assignment = dict(removed)
            assignment.update({cell: k for cell in strip})
            peel(smaller, k - 1, assignment, [height] + heights)

    peel(lam, len(mu), {}, [])
    return out


def chi_bst(lam, mu) -> int:
    """Character value via border strip removal; no poset machinery.

    Strips of sizes mu_k, ..., mu_1 are peeled off lam, each contributing
    (-1)^height.
    """
    lam = check_partition(lam)
    mu = check_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError("lambda and mu must have the same size")

    @lru_cache(maxsize=None)
    def rec(shape, k):
        if k == 0:
            return 1 if not shape else 0
        return sum(
            (-1) ** height * rec(smaller, k - 1)
            for smaller, height in _strip_removals(shape, mu[k - 1])
        )

    return rec(lam, len(mu))


def character_table(n: int):
    """All (lambda, mu, chi) triples for partitions of n, canonical order."""
    lams = partitions_of(n)
    return [(lam, mu, chi(lam, mu)) for lam in lams for mu in lams]


def orthogonality_check(n: int) -> bool:
    """Row orthogonality sum_mu chi_l(mu) chi_v(mu) / z_mu = [l == v]."""
    lams = partitions_of(n)
    for la in lams:
        for nu in lams:
            total = sum(Fraction(chi(la, mu) * chi(nu, mu), z(mu)) for mu in lams)
            if total != (1 if la == nu else 0):
                return False
    return True
