"""Labeled simple graphs on at most 62 vertices, stored as adjacency bitmasks.

A vertex set is a plain Python int used as a bitmask (bit v set means
vertex v is in the set).  Every Graph is immutable after construction and
caches the closed neighborhood N[v] of each vertex, since dominating-set
checks reduce to OR-accumulation of those rows.

Vertex labels in family constructors are deterministic and documented per
constructor, so graph6 output is byte-for-byte reproducible.
"""

from __future__ import annotations

MAX_ORDER = 62


class GraphError(ValueError):
    """Invalid graph construction input."""


class Graph6ParseError(ValueError):
    """Malformed graph6 text."""


def bits_of(mask: int) -> list[int]:
    """Indices of set bits, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Simple graph: vertex count n and per-vertex neighbor bitmasks.

    The adjacency rows must be symmetric with zero diagonal; this is
    checked on every construction.
    """

    __slots__ = ("n", "adj", "closed", "_hash")

    def __init__(self, n: int, adj):
        if not 0 <= n <= MAX_ORDER:
            raise GraphError(f"order {n} outside [0, {MAX_ORDER}]")
        adj = tuple(adj)
        if len(adj) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(adj)}")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & (1 << v):
                raise GraphError(f"loop at vertex {v}")
            if row & ~full:
                raise GraphError(f"row {v} has bits beyond vertex {n - 1}")
        for v, row in enumerate(adj):
            for u in bits_of(row):
                if not adj[u] & (1 << v):
                    raise GraphError(f"adjacency not symmetric at ({u}, {v})")
        self.n = n
        self.adj = adj
        self.closed = tuple(row | (1 << v) for v, row in enumerate(adj))
        self._hash = hash((n, adj))

    # -- basic queries ----------------------------------------------------

    @property
    def m(self) -> int:
        """Edge count."""
        return sum(row.bit_count() for row in self.adj) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def min_degree(self) -> int:
        if self.n == 0:
            raise GraphError("minimum degree of the empty graph is undefined")
        return min(self.degrees())

    def max_degree(self) -> int:
        if self.n == 0:
            raise GraphError("maximum degree of the empty graph is undefined")
        return max(self.degrees())

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] & (1 << v))

    def edges(self) -> list[tuple[int, int]]:
        """Edge list as ordered pairs (u, v) with u < v, sorted."""
        out = []
        for v in range(self.n):
            row = self.adj[v] >> (v + 1)
            for u in bits_of(row):
                out.append((v, v + 1 + u))
        return out

    def closed_neighborhood(self, v: int) -> int:
        """N[v] as a bitmask."""
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for order {self.n}")
        return self.closed[v]

    def isolated_vertices(self) -> list[int]:
        return [v for v in range(self.n) if not self.adj[v]]

    def universal_vertices(self) -> list[int]:
        target = self.n - 1
        return [v for v in range(self.n) if self.adj[v].bit_count() == target]

    def components(self) -> list[int]:
        """Connected components as vertex bitmasks, in order of least vertex."""
        seen = 0
        comps = []
        for v in range(self.n):
            if seen & (1 << v):
                continue
            comp = 1 << v
            frontier = self.adj[v] & ~comp
            while frontier:
                comp |= frontier
                nxt = 0
                for u in bits_of(frontier):
                    nxt |= self.adj[u]
                frontier = nxt & ~comp
            seen |= comp
            comps.append(comp)
        return comps

    def induced_subgraph(self, vertices) -> "Graph":
        """Induced subgraph; kept vertices are relabeled in ascending order."""
        if isinstance(vertices, int):
            vertices = bits_of(vertices)
        vertices = sorted(vertices)
        pos = {v: i for i, v in enumerate(vertices)}
        k = len(vertices)
        rows = [0] * k
        for v in vertices:
            for u in bits_of(self.adj[v]):
                if u in pos:
                    rows[pos[v]] |= 1 << pos[u]
        return Graph(k, rows)

    def relabel(self, perm) -> "Graph":
        """Apply a vertex permutation: new vertex perm[v] plays the role of v."""
        rows = [0] * self.n
        for v in range(self.n):
            r = 0
            for u in bits_of(self.adj[v]):
                r |= 1 << perm[u]
            rows[perm[v]] = r
        return Graph(self.n, rows)

    def complement(self) -> "Graph":
        full = self.full_mask
        return Graph(self.n, [full & ~(self.closed[v]) for v in range(self.n)])

    # -- dunder -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# -- construction ----------------------------------------------------------


def from_edge_list(n: int, edges) -> Graph:
    """Graph with exactly the given edges; loops and duplicates are rejected."""
    rows = [0] * n
    seen = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has a vertex outside [0, {n})")
        if u == v:
            raise GraphError(f"loop edge ({u}, {v})")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphError(f"duplicate edge {key}")
        seen.add(key)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def parse_edge_list(text: str) -> Graph:
    """Parse the plain-text edge-list form "n; u v; u v; ..."."""
    parts = [p.strip() for p in text.strip().split(";")]
    if not parts or not parts[0]:
        raise GraphError("empty edge-list input")
    try:
        n = int(parts[0])
    except ValueError as exc:
        raise GraphError(f"bad vertex count {parts[0]!r}") from exc
    edges = []
    for chunk in parts[1:]:
        if not chunk:
            continue
        fields = chunk.split()
        if len(fields) != 2:
            raise GraphError(f"bad edge {chunk!r}")
        try:
            edges.append((int(fields[0]), int(fields[1])))
        except ValueError as exc:
            raise GraphError(f"bad edge {chunk!r}") from exc
    return from_edge_list(n, edges)


def min_degree_closed_neighborhood_count(g: Graph) -> int:
    """Number of distinct closed neighborhoods among minimum-degree vertices."""
    if g.n == 0:
        raise GraphError("empty graph")
    delta = g.min_degree()
    return len({g.closed[v] for v in range(g.n) if g.degree(v) == delta})


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Vertex-disjoint union; h's vertices are shifted above g's."""
    n = g.n + h.n
    if n > MAX_ORDER:
        raise GraphError(f"combined order {n} exceeds {MAX_ORDER}")
    rows = list(g.adj) + [row << g.n for row in h.adj]
    return Graph(n, rows)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus all edges between the two parts."""
    n = g.n + h.n
    if n > MAX_ORDER:
        raise GraphError(f"combined order {n} exceeds {MAX_ORDER}")
    g_mask = (1 << g.n) - 1
    h_mask = ((1 << h.n) - 1) << g.n
    rows = [row | h_mask for row in g.adj]
    rows += [(row << g.n) | g_mask for row in h.adj]
    return Graph(n, rows)


def rewire_isolated(g: Graph, e: tuple[int, int], x: int) -> Graph:
    """Remove edge e = (u, v) and add the edge from u to isolated vertex x.

    Order and size are preserved; the isolated-vertex count drops by one,
    except that v becomes isolated when it had degree 1.
    """
    u, v = e
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    if not 0 <= x < g.n:
        raise GraphError(f"vertex {x} out of range")
    if g.adj[x]:
        raise GraphError(f"vertex {x} is not isolated")
    rows = list(g.adj)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    rows[u] |= 1 << x
    rows[x] |= 1 << u
    return Graph(g.n, rows)


# -- standard families ------------------------------------------------------
# Labeling conventions: families are built on vertices 0..n-1; removal
# templates occupy the lowest labels; union parts are laid out left to right.


def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << v) for v in range(n)])


def path_graph(n: int) -> Graph:
    """P_n with vertices 0-1-...-(n-1)."""
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs at least 3 vertices, got {n}")
    edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    return from_edge_list(n, edges)


def star_graph(n: int) -> Graph:
    """K_{1,n-1} with center 0."""
    if n < 1:
        raise GraphError("star needs at least 1 vertex")
    return from_edge_list(n, [(0, i) for i in range(1, n)])


def matching_union(m: int, r: int) -> Graph:
    """mK_2 followed by r isolated vertices: edges (0,1), (2,3), ..."""
    if m < 0 or r < 0:
        raise GraphError("negative family parameter")
    return from_edge_list(2 * m + r, [(2 * i, 2 * i + 1) for i in range(m)])


def boundary_odd(m: int) -> Graph:
    """(m-2)K_2 followed by K_{1,2} with center at vertex 2m-4 (odd order 2m-1)."""
    if m < 2:
        raise GraphError(f"(m-2)K_2 + K_{{1,2}} needs m >= 2, got {m}")
    n = 2 * m - 1
    edges = [(2 * i, 2 * i + 1) for i in range(m - 2)]
    c = 2 * m - 4
    edges += [(c, c + 1), (c, c + 2)]
    return from_edge_list(n, edges)


def star_forest(r: int, n: int) -> Graph:
    """(r-1)K_2 followed by K_{1,n-2r+1} with center at vertex 2r-2."""
    if r < 1 or n < 2 * r:
        raise GraphError(f"(r-1)K_2 + star infeasible for r={r}, n={n}")
    edges = [(2 * i, 2 * i + 1) for i in range(r - 1)]
    c = 2 * r - 2
    edges += [(c, v) for v in range(c + 1, n)]
    return from_edge_list(n, edges)


def _complete_minus(n: int, removed) -> Graph:
    g = complete_graph(n)
    rows = list(g.adj)
    for u, v in removed:
        if not rows[u] & (1 << v):
            raise GraphError(f"removal edge ({u}, {v}) missing")
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
    return Graph(n, rows)


def complete_minus_matching(n: int, k: int) -> Graph:
    """K_n minus the k-matching (0,1), (2,3), ..., (2k-2, 2k-1)."""
    if k < 0 or 2 * k > n:
        raise GraphError(f"{k}-matching does not fit in {n} vertices")
    return _complete_minus(n, [(2 * i, 2 * i + 1) for i in range(k)])


def complete_minus_path(n: int, k: int) -> Graph:
    """K_n minus the edges of the path 0-1-...-k (k edges on k+1 vertices)."""
    if k < 1 or k + 1 > n:
        raise GraphError(f"path with {k} edges does not fit in {n} vertices")
    return _complete_minus(n, [(i, i + 1) for i in range(k)])


# Removal templates on low labels: used by the dense-regime constructions.
_REMOVAL_TEMPLATES = {
    "P3": ((0, 1), (1, 2)),
    "K3": ((0, 1), (0, 2), (1, 2)),
    "C4": ((0, 1), (1, 2), (2, 3), (0, 3)),
    "paw": ((0, 1), (0, 2), (1, 2), (2, 3)),
    "diamond": ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3)),
    "K4": ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)),
}


def complete_minus_template(n: int, template: str) -> Graph:
    """K_n minus the edge set of a small named template (P3, K3, C4, paw, diamond, K4)."""
    try:
        removed = _REMOVAL_TEMPLATES[template]
    except KeyError:
        raise GraphError(f"unknown removal template {template!r}") from None
    need = 1 + max(max(e) for e in removed)
    if n < need:
        raise GraphError(f"template {template} needs at least {need} vertices, got {n}")
    return _complete_minus(n, removed)


_FAMILY_BUILDERS = {
    "empty": empty_graph,
    "complete": complete_graph,
    "path": path_graph,
    "cycle": cycle_graph,
    "star": star_graph,
    "matching_union": matching_union,
    "boundary_odd": boundary_odd,
    "star_forest": star_forest,
    "complete_minus_matching": complete_minus_matching,
    "complete_minus_path": complete_minus_path,
    "complete_minus_template": complete_minus_template,
}


def family(name: str, **params) -> Graph:
    """Build a named family member, e.g. family("complete_minus_matching", n=6, k=2)."""
    try:
        builder = _FAMILY_BUILDERS[name]
    except KeyError:
        raise GraphError(f"unknown family {name!r}") from None
    return builder(**params)


# -- graph6 interchange ------------------------------------------------------


def to_graph6(g: Graph) -> str:
    """Encode in short graph6 (n <= 62): header byte then upper-triangle bits."""
    n = g.n
    out = [chr(n + 63)]
    buf = 0
    nbits = 0
    for j in range(1, n):
        for i in range(j):
            buf = (buf << 1) | ((g.adj[j] >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(buf + 63))
                buf = 0
                nbits = 0
    if nbits:
        buf <<= 6 - nbits
        out.append(chr(buf + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode one short-format graph6 line (optional ">>graph6<<" prefix)."""
    line = text.strip()
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    if not line:
        raise Graph6ParseError("empty graph6 line")
    for off, ch in enumerate(line):
        code = ord(ch)
        if not 63 <= code <= 126:
            raise Graph6ParseError(f"byte {code} at offset {off} outside graph6 range")
    head = ord(line[0]) - 63
    if head == 63:
        raise Graph6ParseError("extended graph6 formats (n > 62) not supported")
    n = head
    need_bits = n * (n - 1) // 2
    need_chars = (need_bits + 5) // 6
    body = line[1:]
    if len(body) != need_chars:
        raise Graph6ParseError(
            f"order {n} needs {need_chars} data characters, got {len(body)}"
        )
    bits = 0
    for ch in body:
        bits = (bits << 6) | (ord(ch) - 63)
    pad = 6 * need_chars - need_bits
    if bits & ((1 << pad) - 1):
        raise Graph6ParseError("nonzero padding bits")
    bits >>= pad
    rows = [0] * n
    pos = need_bits
    for j in range(1, n):
        for i in range(j):
            pos -= 1
            if (bits >> pos) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, rows)
