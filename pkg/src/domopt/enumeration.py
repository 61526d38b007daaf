"""Isomorphism-free enumeration of all graphs with n vertices and m edges.

Canonical labels are lexicographically least graph6 strings over the vertex
permutations consistent with an iteratively refined degree partition.  Two
graphs get the same label iff they are isomorphic, because the minimum is
taken over a label-invariant permutation class and the label itself encodes
the whole adjacency.

Classes are produced either by extending smaller canonical graphs one
vertex at a time (cached per order) or, for very sparse/dense sizes, by a
direct sweep over edge subsets; complementation maps a class to its mirror.
"""

from __future__ import annotations

import sys
import warnings
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .graphs import Graph, bits_of, parse_graph6, to_graph6

CANONICAL_ORDER_BOUND = 10
ATLAS_DEFAULT_BOUND = 8

# Below this many labeled graphs, a direct edge-subset sweep beats building
# the full atlas for the order.
_SWEEP_LIMIT = 60_000


class EnumerationBound(ValueError):
    """Requested order is beyond the supported enumeration bounds."""


def _refined_cells(g: Graph) -> list[list[int]]:
    """Partition vertices by iterated neighbor-color refinement.

    Colors start from degrees and are re-sorted every round, so the final
    cell order depends only on the isomorphism type.
    """
    n = g.n
    color = [0] * n
    ranks = {d: i for i, d in enumerate(sorted(set(g.degrees())))}
    for v in range(n):
        color[v] = ranks[g.degree(v)]
    while True:
        sigs = [
            (color[v], tuple(sorted(color[u] for u in bits_of(g.adj[v]))))
            for v in range(n)
        ]
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new_color = [ranks[sigs[v]] for v in range(n)]
        if len(set(new_color)) == len(set(color)):
            color = new_color
            break
        color = new_color
    cells: dict[int, list[int]] = {}
    for v in range(n):
        cells.setdefault(color[v], []).append(v)
    return [cells[c] for c in sorted(cells)]


def canonical_form(g: Graph) -> str:
    """Canonical label: the graph6 line of the lexicographically least
    relabeling consistent with the refined degree partition."""
    n = g.n
    if n > CANONICAL_ORDER_BOUND:
        raise EnumerationBound(f"canonical labeling bounded at n <= {CANONICAL_ORDER_BOUND}")
    if n <= 1:
        return to_graph6(g)

    cells = _refined_cells(g)
    # position p draws its vertex from cell_for_pos[p]
    cell_for_pos: list[int] = []
    for idx, cell in enumerate(cells):
        cell_for_pos.extend([idx] * len(cell))
    remaining = [list(cell) for cell in cells]

    best: list[int] | None = None
    placed: list[int] = []
    cols: list[list[int]] = []  # cols[p] = upper-triangle column bits of position p

    def walk(pos: int, tight: bool) -> None:
        nonlocal best
        if pos == n:
            if not tight or best is None:
                best = [b for col in cols for b in col]
            return
        bucket = remaining[cell_for_pos[pos]]
        base = sum(len(c) for c in cols)
        for i in range(len(bucket)):
            v = bucket.pop(i)
            col = [(g.adj[v] >> u) & 1 for u in placed]
            still_tight = tight
            if best is not None and still_tight:
                ref = best[base:base + pos]
                if col > ref:
                    bucket.insert(i, v)
                    continue
                if col < ref:
                    still_tight = False
            placed.append(v)
            cols.append(col)
            walk(pos + 1, still_tight)
            cols.pop()
            placed.pop()
            bucket.insert(i, v)

    walk(0, True)
    assert best is not None
    rows = [0] * n
    pos_bits = iter(best)
    for j in range(1, n):
        for i in range(j):
            if next(pos_bits):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return to_graph6(Graph(n, rows))


def canonical_graph(g: Graph) -> Graph:
    return parse_graph6(canonical_form(g))


# -- full atlas by vertex extension -----------------------------------------

_ATLAS: dict[int, list[str]] = {0: [to_graph6(Graph(0, ()))]}


def all_graph_labels(n: int) -> list[str]:
    """Canonical labels of every graph of order n, sorted.

    Built by attaching a new vertex with every possible neighborhood to
    every canonical graph of order n-1; deduplication by canonical label.
    """
    if n > CANONICAL_ORDER_BOUND:
        raise EnumerationBound(f"atlas bounded at n <= {CANONICAL_ORDER_BOUND}")
    if n > ATLAS_DEFAULT_BOUND:
        warnings.warn(
            f"building the full atlas for n = {n} may take a long time",
            RuntimeWarning,
            stacklevel=2,
        )
    if n in _ATLAS:
        return _ATLAS[n]
    seen: set[str] = set()
    for parent_label in all_graph_labels(n - 1):
        parent = parse_graph6(parent_label)
        for mask in range(1 << (n - 1)):
            rows = [row | ((mask >> v & 1) << (n - 1)) for v, row in enumerate(parent.adj)]
            rows.append(mask)
            seen.add(canonical_form(Graph(n, rows)))
    _ATLAS[n] = sorted(seen)
    return _ATLAS[n]


def _sweep_labels(n: int, m: int) -> list[str]:
    """Edge-subset sweep: canonicalize every m-subset of edge slots.

    Combinations whose degree sequence is not non-increasing are skipped;
    every isomorphism class keeps at least one degree-sorted labeling.
    """
    slots = [(i, j) for i in range(n) for j in range(i + 1, n)]
    seen: set[str] = set()
    for combo in combinations(slots, m):
        deg = [0] * n
        for u, v in combo:
            deg[u] += 1
            deg[v] += 1
        if any(deg[i] < deg[i + 1] for i in range(n - 1)):
            continue
        rows = [0] * n
        for u, v in combo:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        seen.add(canonical_form(Graph(n, rows)))
    return sorted(seen)


def enumerate_class(n: int, m: int) -> list[Graph]:
    """Exactly one representative per isomorphism class of (n, m) graphs,
    in sorted canonical-label order."""
    return [parse_graph6(lbl) for lbl in class_labels(n, m)]


def class_labels(n: int, m: int) -> list[str]:
    if n > CANONICAL_ORDER_BOUND:
        raise EnumerationBound(f"enumeration bounded at n <= {CANONICAL_ORDER_BOUND}")
    top = comb(n, 2)
    if not 0 <= m <= top:
        raise ValueError(f"size {m} outside [0, {top}] for order {n}")
    mirror = min(m, top - m)
    if comb(top, mirror) <= _SWEEP_LIMIT:
        labels = _sweep_labels(n, mirror)
    else:
        labels = [
            lbl
            for lbl in all_graph_labels(n)
            if parse_graph6(lbl).m == mirror
        ]
    if mirror != m:
        labels = sorted(canonical_form(parse_graph6(lbl).complement()) for lbl in labels)
    return labels


def class_size(n: int, m: int) -> int:
    return len(class_labels(n, m))


@dataclass(frozen=True)
class ClassIndex:
    """Manifest of one enumerated class."""

    n: int
    m: int
    members: tuple[str, ...]

    @property
    def count(self) -> int:
        return len(self.members)

    def to_json_dict(self) -> dict:
        return {"n": self.n, "m": self.m, "count": self.count, "members": list(self.members)}


def class_index(n: int, m: int) -> ClassIndex:
    return ClassIndex(n, m, tuple(class_labels(n, m)))


def read_graph6_class(lines, n: int, m: int) -> list[Graph]:
    """Ingest an externally generated class: validate order/size, then
    re-canonicalize and deduplicate rather than trusting input canonicity."""
    labels = set()
    for lineno, line in enumerate(lines, start=1):
        line = line.strip()
        if not line:
            continue
        g = parse_graph6(line)
        if g.n != n or g.m != m:
            raise ValueError(
                f"line {lineno}: graph has (n, m) = ({g.n}, {g.m}), expected ({n}, {m})"
            )
        labels.add(canonical_form(g))
    return [parse_graph6(lbl) for lbl in sorted(labels)]
