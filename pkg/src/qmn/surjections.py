"""Order-preserving surjections P -> [ell] and the brute-force expansion.

Two families are distinguished: plain order-preserving surjections (weak
order only, strict edges impose nothing) and partition surjections, which
additionally satisfy f(a) < f(b) across every strict relation.  The
latter read off the monomial coefficients of the generating function.

Internally a surjection is a chain of order ideals: the union of the
first k preimage blocks is always an order ideal, so enumeration walks
the ideal lattice.  Bitmasks over elements keep this fast.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .posets import LabeledPoset
from .qsym import QsymExpr

DEFAULT_MAX_N = 10


class PosetTooLarge(ValueError):
    """Raised when enumeration would exceed the size guard."""


def check_size_guard(p: LabeledPoset, max_n=None):
    limit = DEFAULT_MAX_N if max_n is None else max_n
    if p.n > limit:
        raise PosetTooLarge(f"poset has {p.n} elements, guard is {limit}")


@dataclass(frozen=True)
class OrderSurjection:
    """A level assignment P -> {1..ell} with derived block data.

    wt counts elements per level; wtd totals the element weights per level.
    """

    levels: tuple
    ell: int
    blocks: tuple
    wt: tuple
    wtd: tuple


def _surjection_from_blocks(p: LabeledPoset, blocks) -> OrderSurjection:
    levels = [0] * p.n
    for lvl, block in enumerate(blocks, start=1):
        for x in block:
            levels[x] = lvl
    wt = tuple(len(b) for b in blocks)
    wtd = tuple(sum(p.d[x] for x in b) for b in blocks)
    return OrderSurjection(tuple(levels), len(blocks), tuple(blocks), wt, wtd)


class ChainEngine:
    """Enumeration of ideal chains for one poset, with memoized successors."""

    def __init__(self, p: LabeledPoset):
        self.p = p
        self.n = p.n
        self.full = (1 << p.n) - 1
        self.preds = [0] * p.n
        for a, b in p.less:
            self.preds[b] |= 1 << a
        self._succ = {}

    def successors(self, ideal):
        """All nonempty blocks B such that ideal | B is again an ideal."""
        cached = self._succ.get(ideal)
        if cached is not None:
            return cached
        comp = self.full & ~ideal
        out = []
        # iterate over nonempty submasks of comp
        block = comp
        while block:
            merged = ideal | block
            if all(
                self.preds[b] & ~merged == 0
                for b in _bits(block)
            ):
                out.append(block)
            block = (block - 1) & comp
        out.sort()
        self._succ[ideal] = out
        return out

    def chains(self, length=None, block_ok=None):
        """Yield all chains of blocks partitioning P (as mask tuples).

        `length` restricts to exactly that many blocks; `block_ok` is an
        optional per-block predicate used for pruning.
        """
        n = self.n

        def walk(ideal, blocks):
            if ideal == self.full:
                if length is None or len(blocks) == length:
                    yield tuple(blocks)
                return
            if length is not None:
                remaining = n - _popcount(ideal)
                left = length - len(blocks)
                if left < 1 or remaining < left:
                    return
            for block in self.successors(ideal):
                if length is not None and len(blocks) + 1 == length and (ideal | block) != self.full:
                    continue
                if block_ok is not None and not block_ok(block):
                    continue
                blocks.append(block)
                yield from walk(ideal | block, blocks)
                blocks.pop()

        yield from walk(0, [])


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _popcount(mask):
    return bin(mask).count("1")


def mask_elements(mask):
    return tuple(_bits(mask))


def _strict_pair_masks(p: LabeledPoset):
    return [((1 << a) | (1 << b)) for a, b in p.strict_pairs]


def enumerate_order_surjections(p: LabeledPoset, ell, max_n=None):
    """All surjective maps P -> [ell] that weakly respect <_P.

    Strict edges impose no strict inequality here; deterministic order.
    """
    check_size_guard(p, max_n)
    if not 1 <= ell <= p.n:
        raise ValueError(f"ell must be in 1..{p.n}")
    engine = ChainEngine(p)
    out = [
        _surjection_from_blocks(p, [mask_elements(b) for b in chain])
        for chain in engine.chains(length=ell)
    ]
    out.sort(key=lambda f: f.levels)
    return out


def enumerate_partition_surjections(p: LabeledPoset, ell, max_n=None):
    """The order surjections with f(a) < f(b) across every strict relation."""
    return [
        f
        for f in enumerate_order_surjections(p, ell, max_n)
        if all(f.levels[a] < f.levels[b] for a, b in p.strict_pairs)
    ]


def monomial_expansion(p: LabeledPoset, max_n=None) -> QsymExpr:
    """Brute-force monomial expansion of the weighted generating function.

    The coefficient of M_beta counts partition surjections with weighted
    level composition beta; the result is homogeneous of degree sum(d).
    """
    check_size_guard(p, max_n)
    engine = ChainEngine(p)
    strict = _strict_pair_masks(p)

    def block_ok(block):
        return all(block & pair != pair for pair in strict)

    acc = {}
    for chain in engine.chains(block_ok=block_ok):
        wtd = tuple(sum(p.d[x] for x in _bits(block)) for block in chain)
        acc[wtd] = acc.get(wtd, 0) + 1
    return QsymExpr("M", {a: Fraction(c) for a, c in acc.items()})
