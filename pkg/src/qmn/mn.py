"""Generalized border strips, tagging, and the weighted power sum expansion.

A labeled poset is a generalized border strip when no chain a < b < c has
omega(a) < omega(b) > omega(c).  On such a poset every element gets a tag:
-1 if it is the bottom of a strict Hasse edge, +1 if it is the top of a
natural Hasse edge, and a star otherwise.  A strip with a unique starred
element is rooted; its sign is (-1)^(number of -1 tags).

The main expansion sums, over surjections whose preimage blocks are all
rooted, the product of block signs times root weights, indexed by the
weighted level composition.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .posets import LabeledPoset, induced_subposet, is_naturally_labeled
from .qsym import QsymExpr
from .surjections import (
    ChainEngine,
    OrderSurjection,
    _bits,
    _surjection_from_blocks,
    check_size_guard,
    mask_elements,
)

TAG_MINUS = -1
TAG_PLUS = 1
TAG_STAR = 0


@dataclass(frozen=True)
class StripData:
    """Tagging, rootedness, sign and root of a generalized border strip."""

    is_gbs: bool
    tags: tuple | None = None
    is_rooted: bool = False
    sign: int | None = None
    root: int | None = None


def is_generalized_border_strip(p: LabeledPoset) -> bool:
    """Chain criterion: no a < b < c with omega(a) < omega(b) > omega(c)."""
    for a, b in p.less:
        if p.omega[a] < p.omega[b]:
            for c in range(p.n):
                if (b, c) in p.less and p.omega[b] > p.omega[c]:
                    return False
    return True


def is_gbs_via_hasse(p: LabeledPoset) -> bool:
    """Hasse criterion: no element is both top of a natural edge and
    bottom of a strict edge."""
    tops_of_natural = set()
    bottoms_of_strict = set()
    for a, b in p.covers:
        if p.edge_is_strict(a, b):
            bottoms_of_strict.add(a)
        else:
            tops_of_natural.add(b)
    return not (tops_of_natural & bottoms_of_strict)


def strip_data(p: LabeledPoset) -> StripData:
    """Full tagging of p when it is a generalized border strip."""
    if not is_gbs_via_hasse(p):
        return StripData(is_gbs=False)
    tags = [TAG_STAR] * p.n
    for a, b in p.covers:
        if p.edge_is_strict(a, b):
            tags[a] = TAG_MINUS
        else:
            tags[b] = TAG_PLUS
    stars = [x for x in range(p.n) if tags[x] == TAG_STAR]
    minus_count = sum(1 for t in tags if t == TAG_MINUS)
    if len(stars) == 1:
        return StripData(True, tuple(tags), True, (-1) ** minus_count, stars[0])
    return StripData(True, tuple(tags), False, None, None)


def _block_contribution(p: LabeledPoset, preds, block_mask):
    """sign * d(root) of an induced block, or 0 if the block is not rooted.

    Works directly on the ambient poset: Hasse edges of the induced
    sub-poset are recomputed within the block, and tags follow from the
    ambient labels (only their relative order matters).
    """
    elements = list(_bits(block_mask))
    if len(elements) == 1:
        return p.d[elements[0]]
    in_block = lambda x: block_mask >> x & 1
    minus = set()
    conflict_top_natural = set()
    for a in elements:
        for b in elements:
            if (a, b) not in p.less:
                continue
            # cover within the block?
            if any(in_block(c) and (a, c) in p.less and (c, b) in p.less for c in elements):
                continue
            if p.omega[a] > p.omega[b]:
                minus.add(a)
            else:
                conflict_top_natural.add(b)
    if minus & conflict_top_natural:
        return 0  # not a generalized border strip
    stars = [x for x in elements if x not in minus and x not in conflict_top_natural]
    if len(stars) != 1:
        return 0
    return (-1) ** len(minus) * p.d[stars[0]]


def _block_minimum_weight(p: LabeledPoset, preds, block_mask):
    """d(min) if the block has a unique minimum, else 0."""
    minima = [b for b in _bits(block_mask) if preds[b] & block_mask == 0]
    if len(minima) != 1:
        return 0
    return p.d[minima[0]]


def _expansion(p, block_value, max_n):
    check_size_guard(p, max_n)
    engine = ChainEngine(p)
    cache = {}

    def value(block):
        v = cache.get(block)
        if v is None:
            v = block_value(p, engine.preds, block)
            cache[block] = v
        return v

    acc = {}

    def walk(ideal, wtd, coeff):
        if ideal == engine.full:
            acc[tuple(wtd)] = acc.get(tuple(wtd), 0) + coeff
            return
        for block in engine.successors(ideal):
            v = value(block)
            if v == 0:
                continue
            wtd.append(sum(p.d[x] for x in _bits(block)))
            walk(ideal | block, wtd, coeff * v)
            wtd.pop()

    walk(0, [], 1)
    return QsymExpr("PsiHat", {a: Fraction(c) for a, c in acc.items()})


def mn_expansion(p: LabeledPoset, max_n=None) -> QsymExpr:
    """Weighted power sum expansion via rooted order-preserving surjections.

    For each surjection whose blocks are all rooted border strips, the
    product of block signs times root weights lands on PsiHat indexed by
    the weighted level composition.
    """
    return _expansion(p, _block_contribution, max_n)


def natural_mn_expansion(p: LabeledPoset, max_n=None) -> QsymExpr:
    """Independent expansion for naturally labeled posets.

    Uses pointed surjections (every block has a unique minimum) with
    coefficient the product of minimum weights; no signs appear.
    """
    if not is_naturally_labeled(p):
        raise ValueError("poset is not naturally labeled")
    return _expansion(p, _block_minimum_weight, max_n)


def rooted_surjections(p: LabeledPoset, max_n=None):
    """All surjections whose blocks are rooted strips, with per-block data.

    Returns a list of (OrderSurjection, tuple of StripData) over all
    numbers of levels.  Roots in each StripData are indices into the
    induced sub-poset, whose elements are the sorted block elements.
    """
    check_size_guard(p, max_n)
    engine = ChainEngine(p)
    out = []
    for chain in engine.chains():
        data = []
        for block in chain:
            sd = strip_data(induced_subposet(p, mask_elements(block)))
            if not sd.is_rooted:
                break
            data.append(sd)
        else:
            blocks = [mask_elements(b) for b in chain]
            out.append((_surjection_from_blocks(p, blocks), tuple(data)))
    out.sort(key=lambda pair: (pair[0].ell, pair[0].levels))
    return out
