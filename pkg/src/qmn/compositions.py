"""Integer compositions, the refinement order, and the scalars z and pi.

Compositions are plain tuples of positive integers.  Partitions are
compositions with weakly decreasing parts.  All arithmetic is exact.
"""

from __future__ import annotations

import math
from collections import Counter
from itertools import permutations


def check_composition(alpha) -> tuple:
    """Validate and normalize a composition to a tuple of positive ints."""
    alpha = tuple(alpha)
    if not alpha:
        raise ValueError("composition must be nonempty")
    if any(not isinstance(a, int) or a < 1 for a in alpha):
        raise ValueError(f"composition parts must be positive integers: {alpha}")
    return alpha


def check_partition(mu) -> tuple:
    """Validate a partition (weakly decreasing composition)."""
    mu = check_composition(mu)
    if any(mu[i] < mu[i + 1] for i in range(len(mu) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {mu}")
    return mu


def parse_composition(text: str) -> tuple:
    """Parse the comma-joined text form, e.g. "1,5,2"."""
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse composition: {text!r}") from None
    return check_composition(parts)


def format_composition(alpha) -> str:
    return ",".join(str(a) for a in alpha)


def canonical_key(alpha):
    """Sort key: graded by weight, then lexicographic on parts."""
    return (sum(alpha), alpha)


def coarsenings(alpha) -> set:
    """All compositions obtained by summing consecutive runs of alpha.

    The result has 2^(len(alpha)-1) elements and contains both alpha itself
    and the one-part composition (sum(alpha),).
    """
    alpha = check_composition(alpha)
    k = len(alpha)
    out = set()
    for cuts in range(1 << (k - 1)):
        parts = []
        acc = alpha[0]
        for i in range(1, k):
            if cuts >> (i - 1) & 1:
                parts.append(acc)
                acc = alpha[i]
            else:
                acc += alpha[i]
        parts.append(acc)
        out.add(tuple(parts))
    return out


def refinement_blocks(alpha, beta) -> list:
    """Split alpha into consecutive blocks summing to the parts of beta.

    Raises ValueError if alpha does not refine beta.
    """
    alpha = check_composition(alpha)
    beta = check_composition(beta)
    blocks = []
    pos = 0
    for b in beta:
        block = []
        acc = 0
        while acc < b:
            if pos >= len(alpha):
                raise ValueError(f"{alpha} does not refine {beta}")
            block.append(alpha[pos])
            acc += alpha[pos]
            pos += 1
        if acc != b:
            raise ValueError(f"{alpha} does not refine {beta}")
        blocks.append(tuple(block))
    if pos != len(alpha):
        raise ValueError(f"{alpha} does not refine {beta}")
    return blocks


def is_refinement(alpha, beta) -> bool:
    """True iff beta is obtained from alpha by summing consecutive runs."""
    try:
        refinement_blocks(alpha, beta)
    except ValueError:
        return False
    return True


def z(alpha) -> int:
    """The scalar prod_i i^{m_i} m_i! over part multiplicities of alpha."""
    alpha = check_composition(alpha)
    result = 1
    for part, mult in Counter(alpha).items():
        result *= part**mult * math.factorial(mult)
    return result


def pi(alpha, beta) -> int:
    """Product over beta's parts of the running sums of the refining blocks."""
    result = 1
    for block in refinement_blocks(alpha, beta):
        acc = 0
        for a in block:
            acc += a
            result *= acc
    return result


def rearrangements(mu) -> set:
    """All distinct orderings of the parts of the partition mu."""
    mu = check_partition(mu)
    return set(permutations(mu))


def compositions_of(n: int):
    """All compositions of n, in canonical order."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def gen(rest):
        if rest == 0:
            yield ()
            return
        for first in range(1, rest + 1):
            for tail in gen(rest - first):
                yield (first,) + tail

    return sorted(gen(n))


def partitions_of(n: int, max_part: int | None = None):
    """All partitions of n with parts bounded by max_part, largest-first."""
    if max_part is None:
        max_part = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, max_part), 0, -1):
        for tail in partitions_of(n - first, first):
            out.append((first,) + tail)
    return out
