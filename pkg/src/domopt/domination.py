"""Dominating-set counting: two independent exact engines plus closed forms.

d(G,i) is the number of vertex subsets of size i whose closed neighborhoods
cover all of V(G).  The subset engine walks an include/exclude tree over the
vertices with cover-based pruning; the inclusion-exclusion engine sums
signed binomials over all vertex subsets with a Gray-code update of the
covered set.  The two share nothing but the graph, so agreement is a strong
correctness check.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .graphs import Graph, complete_minus_template, min_degree_closed_neighborhood_count
from .polynomials import IntPoly

DEFAULT_ORDER_CAP = 24


class OrderCapExceeded(ValueError):
    """Counting requested beyond the configured order cap."""


@dataclass(frozen=True)
class DomPoly:
    """Exact coefficient vector d(G,0..n) of the domination polynomial.

    Index equals cardinality; d[0] is stored explicitly and is 0 for every
    n >= 1 (and, by the generating-polynomial convention that the sum
    starts at cardinality 1, also for n == 0).
    """

    n: int
    d: tuple[int, ...]

    def __post_init__(self):
        if len(self.d) != self.n + 1:
            raise ValueError(f"need {self.n + 1} coefficients, got {len(self.d)}")
        if any(not isinstance(a, int) for a in self.d):
            raise ValueError("coefficients must be ints")

    @property
    def gamma(self) -> int | None:
        """Domination number: least i with d(G,i) > 0; None for the empty graph."""
        for i, a in enumerate(self.d):
            if a:
                return i
        return None

    @property
    def poly(self) -> IntPoly:
        return IntPoly(self.d)

    @property
    def total(self) -> int:
        """Total number of dominating sets."""
        return sum(self.d)

    def validate(self) -> None:
        """Assert the structural invariants of a genuine count vector."""
        n, d = self.n, self.d
        if n == 0:
            assert d == (0,)
            return
        assert d[0] == 0, "empty set never dominates a nonempty graph"
        assert d[n] == 1, "the full vertex set always dominates"
        for i, a in enumerate(d):
            assert 0 <= a <= comb(n, i), f"d({i}) = {a} outside [0, C({n},{i})]"
        g = self.gamma
        assert g is not None
        for i in range(g, n + 1):
            assert d[i] >= 1, "supersets of dominating sets dominate"
        assert self.total % 2 == 1, "total dominating-set count must be odd"

    def to_json_dict(self) -> dict:
        return {"n": self.n, "gamma": self.gamma, "d": [str(a) for a in self.d]}

    @staticmethod
    def from_json_dict(data: dict) -> "DomPoly":
        return DomPoly(int(data["n"]), tuple(int(s) for s in data["d"]))


def count_by_subsets(g: Graph, cap: int = DEFAULT_ORDER_CAP) -> DomPoly:
    """Reference engine: include/exclude tree over vertices with pruning.

    A branch dies as soon as the vertices not yet decided cannot cover
    what is still uncovered; once the running union covers V, all
    completions dominate and are tallied with one binomial row.
    """
    n = g.n
    if n > cap:
        raise OrderCapExceeded(f"order {n} exceeds cap {cap}")
    if n == 0:
        return DomPoly(0, (0,))
    closed = g.closed
    full = g.full_mask
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] | closed[i]
    rows = [[comb(r, t) for t in range(r + 1)] for r in range(n + 1)]
    d = [0] * (n + 1)

    def walk(i: int, size: int, mask: int) -> None:
        if mask == full:
            row = rows[n - i]
            for t, c in enumerate(row):
                d[size + t] += c
            return
        if mask | suffix[i] != full:
            return
        walk(i + 1, size + 1, mask | closed[i])
        walk(i + 1, size, mask)

    walk(0, 0, 0)
    return DomPoly(n, tuple(d))


def count_by_inclusion_exclusion(g: Graph, cap: int = DEFAULT_ORDER_CAP) -> DomPoly:
    """Second engine: d(G,i) = sum over W of (-1)^|W| * C(n - |N[W]|, i).

    W runs over all vertex subsets in Gray-code order, so each step toggles
    one vertex and updates per-vertex cover counters incrementally.
    """
    n = g.n
    if n > cap:
        raise OrderCapExceeded(f"order {n} exceeds cap {cap}")
    if n == 0:
        return DomPoly(0, (0,))
    neighbors = [tuple(v for v in range(n) if g.closed[u] >> v & 1) for u in range(n)]
    cover = [0] * n
    covered = 0
    in_w = [False] * n
    w_size = 0
    # acc[c] accumulates the signed count of subsets W with n - |N[W]| = c
    acc = [0] * (n + 1)
    acc[n] += 1  # W = {} covers nothing
    for step in range(1, 1 << n):
        v = (step & -step).bit_length() - 1
        if in_w[v]:
            in_w[v] = False
            w_size -= 1
            for u in neighbors[v]:
                cover[u] -= 1
                if cover[u] == 0:
                    covered -= 1
        else:
            in_w[v] = True
            w_size += 1
            for u in neighbors[v]:
                cover[u] += 1
                if cover[u] == 1:
                    covered += 1
        acc[n - covered] += -1 if w_size & 1 else 1
    d = [sum(acc[c] * comb(c, i) for c in range(i, n + 1)) for i in range(n + 1)]
    return DomPoly(n, tuple(d))


@lru_cache(maxsize=None)
def domination_polynomial(g: Graph) -> DomPoly:
    """Cached counting entry point used by the atlas and reliability layers."""
    return count_by_subsets(g)


# -- closed-form coefficients -------------------------------------------------


def tail_coefficient(g: Graph, j: int) -> int:
    """d(G, n-j) for j <= delta(G): every (n-j)-subset dominates, so C(n,j)."""
    delta = g.min_degree()
    if not 0 <= j <= delta:
        raise ValueError(f"j = {j} exceeds minimum degree {delta}")
    return comb(g.n, j)


def delta_plus_one_coefficient(g: Graph) -> int:
    """d(G, n-delta-1): all but the complements of minimum-degree closed
    neighborhoods dominate."""
    delta = g.min_degree()
    return comb(g.n, delta + 1) - min_degree_closed_neighborhood_count(g)


def universal_vertex_coefficient(g: Graph) -> int:
    """d(G,1): exactly the universal vertices dominate alone."""
    if g.n == 0:
        raise ValueError("empty graph")
    return len(g.universal_vertices())


def join_polynomial(r: int, h_poly: DomPoly) -> DomPoly:
    """Domination polynomial of the join of a complete graph on r vertices
    with a graph having the given polynomial:
    ((1+x)^r - 1) * (1+x)^{n_H} + D(H,x)."""
    if r < 0:
        raise ValueError("negative join order")
    n = r + h_poly.n
    full = (IntPoly.one_plus_x_pow(r) - IntPoly.one()) * IntPoly.one_plus_x_pow(h_poly.n)
    p = full + h_poly.poly
    d = [p[i] for i in range(n + 1)]
    return DomPoly(n, tuple(d))


def disjoint_union_polynomial(parts) -> DomPoly:
    """Product rule: a set dominates a disjoint union iff its trace on each
    part dominates that part.  Zero-vertex parts act as the identity."""
    n = 0
    prod = IntPoly.one()
    for part in parts:
        if part.n == 0:
            continue
        n += part.n
        prod = prod * part.poly
    if n == 0:
        return DomPoly(0, (0,))
    return DomPoly(n, tuple(prod[i] for i in range(n + 1)))


# Defect polynomials (1+x)^n - 1 - D(G,x) for the near-complete templates,
# lowest degree first starting at x^1.  Each equals the count of
# non-dominating sets by size and is pinned to direct counting by tests.
DENSE_TEMPLATE_DEFECTS = {
    "P3": (3, 1),
    "K3": (3, 3),
    "C4": (4, 2),
    "paw": (4, 5, 1),
    "diamond": (4, 6, 2),
    "K4": (4, 6, 4),
}

# Edges removed by each template (k in m = C(n,2) - k).
DENSE_TEMPLATE_SIZES = {"P3": 2, "K3": 3, "C4": 4, "paw": 4, "diamond": 5, "K4": 6}


def dense_template_polynomial(n: int, template: str, k: int | None = None) -> DomPoly:
    """Closed-form DomPoly of K_n minus a small template or a k-matching."""
    if template == "matching":
        if k is None:
            raise ValueError("matching template needs k")
        if k < 0 or 2 * k > n:
            raise ValueError(f"{k}-matching does not fit in {n} vertices")
        defect = IntPoly((0, 2 * k))
    else:
        try:
            defect_coeffs = DENSE_TEMPLATE_DEFECTS[template]
        except KeyError:
            raise ValueError(f"unknown template {template!r}") from None
        need = 1 + max(max(e) for e in _template_edges(template))
        if n < need:
            raise ValueError(f"template {template} needs n >= {need}, got {n}")
        defect = IntPoly((0,) + defect_coeffs)
    p = IntPoly.one_plus_x_pow(n) - IntPoly.one() - defect
    return DomPoly(n, tuple(p[i] for i in range(n + 1)))


def _template_edges(template: str):
    from .graphs import _REMOVAL_TEMPLATES

    return _REMOVAL_TEMPLATES[template]


def template_graph(n: int, template: str, k: int | None = None) -> Graph:
    """The graph whose closed form dense_template_polynomial returns."""
    if template == "matching":
        from .graphs import complete_minus_matching

        if k is None:
            raise ValueError("matching template needs k")
        return complete_minus_matching(n, k)
    return complete_minus_template(n, template)


# -- rewiring certificate -------------------------------------------------------


@dataclass(frozen=True)
class RewireCertificate:
    """Coefficientwise comparison of D(G) against D(G - uv + ux).

    deltas[i] = d(H,i) - d(G,i); the construction guarantees every delta is
    nonnegative, with a strict gap at cardinality n-2 whenever the endpoint
    that loses the edge keeps degree >= 2.
    """

    before: DomPoly
    after: DomPoly
    deltas: tuple[int, ...]
    strict_expected: bool

    @property
    def coefficientwise_ge(self) -> bool:
        return all(x >= 0 for x in self.deltas)

    @property
    def strict_at_n_minus_2(self) -> bool:
        return self.deltas[self.before.n - 2] > 0


def rewire_dominance_certificate(g: Graph, e: tuple[int, int], x: int) -> RewireCertificate:
    """Count both sides of the edge-rewiring operation and compare.

    The rewired graph moves edge (u, v) to (u, x) for an isolated vertex x;
    its counts never drop, which certifies a uniform polynomial increase on
    [0, inf).  Raises AssertionError if the counted data ever contradicts
    that (it cannot for a correct engine).
    """
    from .graphs import rewire_isolated

    u, v = e
    h = rewire_isolated(g, e, x)
    before = domination_polynomial(g)
    after = domination_polynomial(h)
    deltas = tuple(a - b for a, b in zip(after.d, before.d))
    strict_expected = g.degree(v) >= 2
    cert = RewireCertificate(before, after, deltas, strict_expected)
    assert cert.coefficientwise_ge, f"rewiring lowered a coefficient: {deltas}"
    if strict_expected:
        assert cert.strict_at_n_minus_2, "expected strict gap at n-2"
    return cert
