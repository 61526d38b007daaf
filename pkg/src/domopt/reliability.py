"""Domination reliability: probability that operational vertices dominate.

With each vertex independently operational with probability p, the
reliability equals sum_i d(G,i) p^i (1-p)^(n-i).  It is stored expanded in
the monomial basis of p with integer coefficients, so the same Sturm-based
comparison machinery decides reliability dominance on (0,1) exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .domination import DomPoly, domination_polynomial
from .enumeration import ATLAS_DEFAULT_BOUND, EnumerationBound, enumerate_class
from .optimality import WitnessPair, canonical_form
from .polynomials import CROSSING, IntPoly, compare_on_unit_interval, eval_rational


@dataclass(frozen=True)
class ReliabilityPoly:
    """Integer coefficients of the reliability polynomial in powers of p."""

    n: int
    c: tuple[int, ...]

    def __post_init__(self):
        if len(self.c) != self.n + 1:
            raise ValueError(f"need {self.n + 1} coefficients, got {len(self.c)}")

    @property
    def poly(self) -> IntPoly:
        return IntPoly(self.c)

    def to_json_dict(self) -> dict:
        return {"n": self.n, "coeffs": [str(a) for a in self.c]}

    @staticmethod
    def from_json_dict(data: dict) -> "ReliabilityPoly":
        return ReliabilityPoly(int(data["n"]), tuple(int(s) for s in data["coeffs"]))


def reliability_polynomial(dom: DomPoly) -> ReliabilityPoly:
    """Expand sum_i d(G,i) p^i (1-p)^(n-i) by binomial convolution."""
    n = dom.n
    one_minus_p = IntPoly((1, -1))
    acc = IntPoly.zero()
    for i, di in enumerate(dom.d):
        if di:
            acc = acc + di * (IntPoly.monomial(i) * one_minus_p ** (n - i))
    return ReliabilityPoly(n, tuple(acc[i] for i in range(n + 1)))


def eval_reliability(rel: ReliabilityPoly, p) -> Fraction:
    """Exact reliability value at rational p in [0, 1]."""
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise ValueError(f"probability {p} outside [0, 1]")
    return eval_rational(rel.poly, p)


def reliability_by_substitution(dom: DomPoly, p) -> Fraction:
    """Independent path: (1-p)^n * D(G, p/(1-p)), valid for p < 1.

    At p = 1 the substitution is singular; use the expanded form there.
    """
    p = Fraction(p)
    if not 0 <= p < 1:
        raise ValueError(f"substitution path needs 0 <= p < 1, got {p}")
    return (1 - p) ** dom.n * eval_rational(dom.poly, p / (1 - p))


def dominating_counts_from_reliability(rel: ReliabilityPoly) -> DomPoly:
    """Invert the binomial transform: D(G,x) = (1+x)^n * Drel(G, x/(1+x))."""
    n = rel.n
    one_plus_x = IntPoly((1, 1))
    acc = IntPoly.zero()
    for j, cj in enumerate(rel.c):
        if cj:
            acc = acc + cj * (IntPoly.monomial(j) * one_plus_x ** (n - j))
    return DomPoly(n, tuple(acc[i] for i in range(n + 1)))


# -- optimality transfer -------------------------------------------------------


def _extreme_side_on_unit(labels, polys, maximize: bool):
    """Reliability tournament on (0,1), mirroring the optimality classifier."""
    length = max(len(p.coeffs) for p in polys) + 1
    keys = [tuple(p[i] for i in range(length)) for p in polys]
    cand_key = max(keys) if maximize else min(keys)
    cand_idx = keys.index(cand_key)
    cand = polys[cand_idx]
    for i, p in enumerate(polys):
        if i == cand_idx:
            continue
        verdict = compare_on_unit_interval(cand, p)
        ok = verdict.dominates if maximize else verdict.dominated
        if not ok:
            assert verdict.relation == CROSSING
            return False, (), WitnessPair(labels[cand_idx], labels[i], verdict)
    members = tuple(labels[i] for i, k in enumerate(keys) if k == cand_key)
    return True, members, None


def verify_reliability_transfer(n: int) -> list[dict]:
    """Check, for every m, that reliability optimality on (0,1) names exactly
    the same members as domination-polynomial optimality on [0, inf).

    Decided independently on both sides: the reliability side compares the
    expanded p-polynomials with the interval comparison engine.
    """
    from math import comb

    from .optimality import classify_class

    if n > ATLAS_DEFAULT_BOUND:
        raise EnumerationBound(f"transfer check bounded at n <= {ATLAS_DEFAULT_BOUND}")
    rows = []
    for m in range(comb(n, 2) + 1):
        graphs = enumerate_class(n, m)
        labels = tuple(canonical_form(g) for g in graphs)
        dompolys = [domination_polynomial(g) for g in graphs]
        report = classify_class(n, m, graphs=graphs, precomputed=dompolys)
        relpolys = [reliability_polynomial(dp).poly for dp in dompolys]

        opt_exists, opt_members, opt_wit = _extreme_side_on_unit(labels, relpolys, True)
        lo_exists, lo_members, lo_wit = _extreme_side_on_unit(labels, relpolys, False)
        rows.append(
            {
                "m": m,
                "dom_optimal_exists": report.optimal_exists,
                "dom_optimal_members": list(report.optimal_members),
                "rel_optimal_exists": opt_exists,
                "rel_optimal_members": list(opt_members),
                "rel_optimal_witness": opt_wit.to_json_dict() if opt_wit else None,
                "dom_least_exists": report.least_optimal_exists,
                "dom_least_members": list(report.least_optimal_members),
                "rel_least_exists": lo_exists,
                "rel_least_members": list(lo_members),
                "agree": (
                    report.optimal_exists == opt_exists
                    and list(report.optimal_members) == list(opt_members)
                    and report.least_optimal_exists == lo_exists
                    and list(report.least_optimal_members) == list(lo_members)
                ),
            }
        )
    return rows
