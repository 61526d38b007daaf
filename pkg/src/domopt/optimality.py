"""Existence and uniqueness of optimal / least-optimal graphs in G(n,m).

A member H of a class is optimal when D(H,x) >= D(G,x) for every member G
and every x >= 0, and least-optimal under the mirrored inequality.  The
classifier ranks members by the near-zero coefficient order (a necessary
condition for optimality), then certifies the single surviving candidate
pointwise against the whole class, so nonexistence always comes with an
explicit crossing witness pair rather than by absence alone.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import comb

from .domination import DomPoly, domination_polynomial
from .enumeration import (
    ATLAS_DEFAULT_BOUND,
    EnumerationBound,
    canonical_form,
    enumerate_class,
)
from .graphs import (
    Graph,
    complete_graph,
    complete_minus_matching,
    complete_minus_path,
    complete_minus_template,
    join,
    matching_union,
    boundary_odd,
    parse_graph6,
)
from .polynomials import (
    CROSSING,
    ComparisonVerdict,
    IntPoly,
    compare_on_nonneg,
    lex_large_x_compare,
    lex_small_x_compare,
)

# Regime identifiers for the predicted characterization.
SPARSE_STRICT = "sparse-strict"
SPARSE_BOUNDARY_EVEN = "sparse-boundary-even"
SPARSE_BOUNDARY_ODD = "sparse-boundary-odd"
MID_NONEXISTENCE = "mid-nonexistence"
DENSE_NONEXISTENCE = "dense-nonexistence"
NEAR_COMPLETE = "near-complete-minus-one"
COMPLETE = "complete"
SMALL_N_EXCEPTION = "small-n-exception"


@dataclass(frozen=True)
class WitnessPair:
    """Certificate that no uniformly extreme member exists.

    holder is the member that wins the near-zero order; defeater beats it
    somewhere on (0, inf), as certified by the attached verdict.
    """

    holder: str
    defeater: str
    verdict: ComparisonVerdict

    def to_json_dict(self) -> dict:
        return {
            "holder": self.holder,
            "defeater": self.defeater,
            "verdict": self.verdict.to_json_dict(),
        }


@dataclass(frozen=True)
class ClassReport:
    """Full classification of one class G(n,m)."""

    n: int
    m: int
    members: tuple[str, ...]
    optimal_exists: bool
    optimal_members: tuple[str, ...]
    optimal_unique: bool
    optimal_shared_polynomial: bool
    optimal_witness: WitnessPair | None
    least_optimal_exists: bool
    least_optimal_members: tuple[str, ...]
    least_optimal_unique: bool
    least_optimal_shared_polynomial: bool
    least_optimal_witness: WitnessPair | None

    @property
    def count(self) -> int:
        return len(self.members)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "count": self.count,
            "optimal_exists": self.optimal_exists,
            "optimal_members": list(self.optimal_members),
            "optimal_unique": self.optimal_unique,
            "optimal_shared_polynomial": self.optimal_shared_polynomial,
            "optimal_witness": self.optimal_witness.to_json_dict() if self.optimal_witness else None,
            "least_optimal_exists": self.least_optimal_exists,
            "least_optimal_members": list(self.least_optimal_members),
            "least_optimal_unique": self.least_optimal_unique,
            "least_optimal_shared_polynomial": self.least_optimal_shared_polynomial,
            "least_optimal_witness": self.least_optimal_witness.to_json_dict()
            if self.least_optimal_witness
            else None,
        }


def _lex_key(p: IntPoly, length: int) -> tuple[int, ...]:
    return tuple(p[i] for i in range(length))


def _extreme_side(labels, polys, maximize: bool):
    """One side of the tournament: does a pointwise max (or min) exist?

    Returns (exists, members, shared, witness).  The candidate is the
    unique extreme coefficient vector under the near-zero order; it is
    then certified against every member, which is sound and complete
    because any pointwise-extreme member must carry that vector.
    """
    length = max(len(p.coeffs) for p in polys) + 1
    keys = [_lex_key(p, length) for p in polys]
    cand_key = max(keys) if maximize else min(keys)
    cand_idx = keys.index(cand_key)
    cand_poly = polys[cand_idx]
    for i, p in enumerate(polys):
        if i == cand_idx:
            continue
        verdict = compare_on_nonneg(cand_poly, p)
        ok = verdict.dominates if maximize else verdict.dominated
        if not ok:
            assert verdict.relation == CROSSING, (
                "a near-zero extreme candidate can only fail by crossing"
            )
            return False, (), False, WitnessPair(labels[cand_idx], labels[i], verdict)
    members = tuple(labels[i] for i, k in enumerate(keys) if k == cand_key)
    return True, members, len(members) > 1, None


def _count_label(label: str) -> tuple[str, DomPoly]:
    return label, domination_polynomial(parse_graph6(label))


def class_polynomials(graphs, jobs: int = 1) -> tuple[tuple[str, ...], list[DomPoly]]:
    """Canonical labels and domination polynomials for a list of members."""
    labels = tuple(canonical_form(g) for g in graphs)
    if jobs > 1 and len(labels) > 8:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            table = dict(pool.map(_count_label, labels, chunksize=16))
        polys = [table[lbl] for lbl in labels]
    else:
        polys = [domination_polynomial(g) for g in graphs]
    return labels, polys


def classify_class(
    n: int,
    m: int,
    graphs: list[Graph] | None = None,
    jobs: int = 1,
    precomputed: list[DomPoly] | None = None,
) -> ClassReport:
    """Classify G(n,m) exhaustively for optimal and least-optimal members."""
    if graphs is None:
        if n > ATLAS_DEFAULT_BOUND:
            raise EnumerationBound(
                f"classification enumerates the class; bounded at n <= {ATLAS_DEFAULT_BOUND}"
            )
        graphs = enumerate_class(n, m)
    if precomputed is not None:
        labels = tuple(canonical_form(g) for g in graphs)
        polys = [dp.poly for dp in precomputed]
    else:
        labels, dompolys = class_polynomials(graphs, jobs=jobs)
        polys = [dp.poly for dp in dompolys]

    opt_exists, opt_members, opt_shared, opt_wit = _extreme_side(labels, polys, True)
    lo_exists, lo_members, lo_shared, lo_wit = _extreme_side(labels, polys, False)
    return ClassReport(
        n=n,
        m=m,
        members=labels,
        optimal_exists=opt_exists,
        optimal_members=opt_members,
        optimal_unique=opt_exists and len(opt_members) == 1,
        optimal_shared_polynomial=opt_shared,
        optimal_witness=opt_wit,
        least_optimal_exists=lo_exists,
        least_optimal_members=lo_members,
        least_optimal_unique=lo_exists and len(lo_members) == 1,
        least_optimal_shared_polynomial=lo_shared,
        least_optimal_witness=lo_wit,
    )


# -- predicted characterization ------------------------------------------------


@dataclass(frozen=True)
class Prediction:
    """Claimed classification answer for one (n, m)."""

    n: int
    m: int
    regime: str
    predicted_label: str | None
    description: str

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "regime": self.regime,
            "predicted": self.predicted_label,
            "description": self.description,
        }


def predicted_optimal(n: int, m: int) -> Prediction:
    """The claimed unique optimal member of G(n,m), or none in the middle
    range, with the five-vertex six-edge exception."""
    if n < 2:
        raise ValueError("prediction defined for n >= 2")
    top = comb(n, 2)
    if not 0 <= m <= top:
        raise ValueError(f"size {m} outside [0, {top}]")
    half = (n + 1) // 2
    if m == top:
        return Prediction(n, m, COMPLETE, canonical_form(complete_graph(n)), "complete graph")
    if m == top - 1:
        return Prediction(
            n, m, NEAR_COMPLETE, canonical_form(complete_minus_matching(n, 1)),
            "complete graph minus one edge",
        )
    if n == 5 and m == 6:
        g = join(complete_graph(1), matching_union(2, 0))
        return Prediction(n, m, SMALL_N_EXCEPTION, canonical_form(g),
                          "universal vertex joined to two disjoint edges")
    if m < half:
        g = matching_union(m, n - 2 * m)
        return Prediction(n, m, SPARSE_STRICT, canonical_form(g),
                          f"{m} disjoint edges plus {n - 2 * m} isolated vertices")
    if m == half:
        if n % 2 == 0:
            return Prediction(n, m, SPARSE_BOUNDARY_EVEN,
                              canonical_form(matching_union(m, 0)), f"{m} disjoint edges")
        return Prediction(n, m, SPARSE_BOUNDARY_ODD, canonical_form(boundary_odd(m)),
                          f"{m - 2} disjoint edges plus a 2-star")
    if m <= n - 1:
        return Prediction(n, m, MID_NONEXISTENCE, None, "no optimal graph")
    return Prediction(n, m, DENSE_NONEXISTENCE, None, "no optimal graph")


def verify_characterization(n: int, jobs: int = 1) -> list[dict]:
    """Run the exhaustive classifier against the prediction for every m.

    Returns one row per m with the prediction, the exhaustive result and
    an agreement flag; callers check that no row disagrees.
    """
    rows = []
    for m in range(comb(n, 2) + 1):
        pred = predicted_optimal(n, m)
        rep = classify_class(n, m, jobs=jobs)
        if pred.predicted_label is None:
            agree = not rep.optimal_exists
        else:
            agree = (
                rep.optimal_exists
                and rep.optimal_unique
                and rep.optimal_members == (pred.predicted_label,)
            )
        rows.append(
            {
                "m": m,
                "regime": pred.regime,
                "predicted": pred.predicted_label,
                "optimal_exists": rep.optimal_exists,
                "optimal_members": list(rep.optimal_members),
                "agree": agree,
                "witness": rep.optimal_witness.to_json_dict() if rep.optimal_witness else None,
            }
        )
    return rows


def characterization_discrepancies(rows: list[dict]) -> list[dict]:
    return [row for row in rows if not row["agree"]]


# -- explicit counterexample constructions ----------------------------------------

# For m = C(n,2) - k, the graph with the most universal vertices.
_DENSE_SMALL_TEMPLATE = {2: "P3", 3: "K3", 4: "C4", 5: "diamond", 6: "K4"}


@dataclass(frozen=True)
class DenseCounterexample:
    """Pair certifying nonexistence of an optimal graph near the top.

    small_winner has the most universal vertices and wins the near-zero
    order; large_winner (complete minus a matching) wins the near-infinity
    order, so no member dominates the whole half-line.
    """

    n: int
    k: int
    small_winner: Graph
    large_winner: Graph
    small_poly: DomPoly
    large_poly: DomPoly
    small_x_order: int
    large_x_order: int
    verdict: ComparisonVerdict

    @property
    def certifies_nonexistence(self) -> bool:
        return self.small_x_order > 0 and self.large_x_order < 0

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "small_winner": canonical_form(self.small_winner),
            "large_winner": canonical_form(self.large_winner),
            "small_x_order": self.small_x_order,
            "large_x_order": self.large_x_order,
            "verdict": self.verdict.to_json_dict(),
        }


def dense_counterexample(n: int, k: int) -> DenseCounterexample:
    """Witness pair for m = C(n,2) - k, k in 2..6."""
    if n < 6:
        raise ValueError("dense construction needs n >= 6")
    if k not in _DENSE_SMALL_TEMPLATE:
        raise ValueError(f"k must be in 2..6, got {k}")
    if 2 * k > n:
        raise ValueError(f"a {k}-matching does not fit in {n} vertices")
    if comb(n, 2) - k < n - 1:
        raise ValueError(f"class C({n},2)-{k} below the dense range")
    g_small = complete_minus_template(n, _DENSE_SMALL_TEMPLATE[k])
    h_k = complete_minus_matching(n, k)
    p_small = domination_polynomial(g_small)
    p_large = domination_polynomial(h_k)
    small_order = lex_small_x_compare(p_small.poly, p_large.poly)
    large_order = lex_large_x_compare(p_small.poly, p_large.poly)
    verdict = compare_on_nonneg(p_small.poly, p_large.poly)
    return DenseCounterexample(
        n, k, g_small, h_k, p_small, p_large, small_order, large_order, verdict
    )


@dataclass(frozen=True)
class LeastOptimalCounterexample:
    """Pair certifying nonexistence of a least-optimal graph.

    matching_removal has the fewest universal vertices and loses the
    near-zero order; path_removal drops below it past the crossing, so no
    member stays minimal on all of [0, inf).  difference is
    D(matching_removal) - D(path_removal).
    """

    n: int
    k: int
    matching_removal: Graph
    path_removal: Graph
    matching_poly: DomPoly
    path_poly: DomPoly
    verdict: ComparisonVerdict
    difference: IntPoly
    note: str = ""

    @property
    def certifies_nonexistence(self) -> bool:
        return self.verdict.relation == CROSSING

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "matching_removal": canonical_form(self.matching_removal),
            "path_removal": canonical_form(self.path_removal),
            "verdict": self.verdict.to_json_dict(),
            "difference": self.difference.to_json(),
            "note": self.note,
        }


def least_optimal_counterexample(n: int, k: int) -> LeastOptimalCounterexample:
    """Witness pair for m = C(n,2) - k: matching removal vs path removal.

    For k = 2 the path degenerates to a 2-edge path and the pair coincides
    with the dense construction; a note records that."""
    if n < 7:
        raise ValueError("least-optimal construction needs n >= 7")
    if not 2 <= k <= n // 2:
        raise ValueError(f"k must be in 2..{n // 2}, got {k}")
    g_k = complete_minus_matching(n, k)
    h = complete_minus_path(n, k)
    p_g = domination_polynomial(g_k)
    p_h = domination_polynomial(h)
    verdict = compare_on_nonneg(p_g.poly, p_h.poly)
    note = "k=2: pair coincides with the dense construction" if k == 2 else ""
    return LeastOptimalCounterexample(
        n, k, g_k, h, p_g, p_h, verdict, p_g.poly - p_h.poly, note
    )


def structure_decomposition(g: Graph) -> tuple[int, Graph]:
    """Split off the universal vertices: g is the join of a complete graph
    on r vertices with the induced rest, which has no universal vertex."""
    universal = g.universal_vertices()
    r = len(universal)
    rest = [v for v in range(g.n) if v not in universal]
    return r, g.induced_subgraph(rest)
