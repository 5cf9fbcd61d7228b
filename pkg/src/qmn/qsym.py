"""Quasisymmetric function expressions with exact rational coefficients.

Supported bases: 'M' (monomial), 'Psi' (quasisymmetric power sum) and
'PsiHat' (unnormalized quasisymmetric power sum, PsiHat = Psi / z).
The monomial basis is the canonical comparison basis; expressions in a
power sum basis are converted on demand.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .compositions import (
    canonical_key,
    check_composition,
    check_partition,
    coarsenings,
    format_composition,
    pi,
    rearrangements,
    z,
)

BASES = ("M", "Psi", "PsiHat")


@dataclass(frozen=True)
class QsymExpr:
    """A basis-tagged sparse map from compositions to exact rationals."""

    basis: str
    terms: dict = field(compare=False)
    _sorted: tuple = field(init=False, compare=True, repr=False)

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValueError(f"unknown basis {self.basis!r}")
        clean = {}
        for alpha, coeff in self.terms.items():
            alpha = check_composition(alpha)
            coeff = Fraction(coeff)
            if coeff != 0:
                clean[alpha] = coeff
        object.__setattr__(self, "terms", clean)
        object.__setattr__(
            self, "_sorted", tuple(sorted(clean.items(), key=lambda kv: canonical_key(kv[0])))
        )

    def items(self):
        """Terms in canonical composition order."""
        return self._sorted

    def coefficient(self, alpha) -> Fraction:
        return self.terms.get(tuple(alpha), Fraction(0))

    @property
    def degree(self):
        """Common weight of all keys, or None for the zero expression."""
        degrees = {sum(alpha) for alpha in self.terms}
        if len(degrees) > 1:
            raise ValueError("expression is not homogeneous")
        return degrees.pop() if degrees else None

    def scaled(self, factor) -> "QsymExpr":
        factor = Fraction(factor)
        return QsymExpr(self.basis, {a: c * factor for a, c in self.terms.items()})

    def __add__(self, other) -> "QsymExpr":
        if self.basis != other.basis:
            raise ValueError("cannot add expressions in different bases")
        acc = dict(self.terms)
        for alpha, coeff in other.terms.items():
            acc[alpha] = acc.get(alpha, Fraction(0)) + coeff
        return QsymExpr(self.basis, acc)

    def __sub__(self, other) -> "QsymExpr":
        return self + other.scaled(-1)

    def to_json_dict(self) -> dict:
        return {
            "basis": self.basis,
            "terms": [
                {
                    "alpha": format_composition(alpha),
                    "coeff": f"{coeff.numerator}/{coeff.denominator}",
                }
                for alpha, coeff in self.items()
            ],
        }


def psi_to_monomial(expr: QsymExpr) -> QsymExpr:
    """Expand a Psi- or PsiHat-basis expression in the monomial basis.

    Psi_alpha = z_alpha * sum over coarsenings beta of M_beta / pi(alpha, beta);
    PsiHat_alpha drops the z_alpha factor.
    """
    if expr.basis == "M":
        return expr
    acc = {}
    for alpha, coeff in expr.terms.items():
        scale = z(alpha) if expr.basis == "Psi" else 1
        for beta in coarsenings(alpha):
            acc[beta] = acc.get(beta, Fraction(0)) + coeff * Fraction(scale, pi(alpha, beta))
    return QsymExpr("M", acc)


def psihat_to_psi(expr: QsymExpr) -> QsymExpr:
    if expr.basis != "PsiHat":
        raise ValueError("expected a PsiHat-basis expression")
    return QsymExpr("Psi", {a: c / z(a) for a, c in expr.terms.items()})


def psi_to_psihat(expr: QsymExpr) -> QsymExpr:
    if expr.basis != "Psi":
        raise ValueError("expected a Psi-basis expression")
    return QsymExpr("PsiHat", {a: c * z(a) for a, c in expr.terms.items()})


def power_sum_symmetric(mu) -> QsymExpr:
    """The power sum symmetric function p_mu in the Psi basis.

    p_mu is the sum of Psi_alpha over all rearrangements alpha of mu.
    """
    mu = check_partition(mu)
    return QsymExpr("Psi", {alpha: Fraction(1) for alpha in rearrangements(mu)})


def evaluate(expr: QsymExpr, point) -> Fraction:
    """Substitute x_1..x_m for the given rationals; all later variables are 0.

    M_alpha maps to the sum over strictly increasing index tuples of the
    corresponding monomial; terms longer than the point vanish.
    """
    point = [Fraction(v) for v in point]
    m = len(point)
    total = Fraction(0)
    for alpha, coeff in psi_to_monomial(expr).terms.items():
        if len(alpha) > m:
            continue
        for idx in combinations(range(m), len(alpha)):
            term = Fraction(1)
            for i, a in zip(idx, alpha):
                term *= point[i] ** a
            total += coeff * term
    return total


def equals(a: QsymExpr, b: QsymExpr) -> bool:
    """True iff both expressions expand to the same monomial-basis map."""
    return psi_to_monomial(a).terms == psi_to_monomial(b).terms
