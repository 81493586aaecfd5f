"""The directed graph of a seed: acyclicity, 3-cycles, sink ordering.

Vertices are the mutable directions 1..n; there is an edge i -> j exactly
when b_{ij} > 0.  A seed is in acyclic (sink) order when b_{ij} >= 0 for all
i > j, i.e. every edge points from a higher index to a lower one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .laurent import LaurentPoly
from .seed import ExtendedMatrix, GeneralizedSeed, StringSet


@dataclass(frozen=True)
class SeedDigraph:
    n: int
    edges: frozenset[tuple[int, int]]

    def successors(self, i: int) -> list[int]:
        return sorted(j for (a, j) in self.edges if a == i)


def build_digraph(M: ExtendedMatrix) -> SeedDigraph:
    """Edges (i, j) with b_{ij} > 0 over the principal part."""
    n = M.n
    edges = frozenset(
        (i, j)
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        if i != j and M.entry(i, j) > 0
    )
    return SeedDigraph(n=n, edges=edges)


def is_acyclic(G: SeedDigraph) -> bool:
    """Depth-first search with three-color marking."""
    WHITE, GRAY, BLACK = 0, 1, 2
    color = {v: WHITE for v in range(1, G.n + 1)}
    adj = {v: G.successors(v) for v in range(1, G.n + 1)}
    for start in range(1, G.n + 1):
        if color[start] != WHITE:
            continue
        stack = [(start, iter(adj[start]))]
        color[start] = GRAY
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if color[w] == GRAY:
                    return False
                if color[w] == WHITE:
                    color[w] = GRAY
                    stack.append((w, iter(adj[w])))
                    advanced = True
                    break
            if not advanced:
                color[v] = BLACK
                stack.pop()
    return True


def find_three_cycles(G: SeedDigraph) -> list[tuple[int, int, int]]:
    """Oriented 3-cycles as triples (i, j, k) with edges i->k, k->j, j->i.

    Each cycle is reported once, rotated so the smallest vertex leads.
    """
    edges = G.edges
    found = []
    for a in range(1, G.n + 1):
        for b in range(a + 1, G.n + 1):
            for c in range(b + 1, G.n + 1):
                # orientation a -> b -> c -> a, reported as (a, c, b)
                if (a, b) in edges and (b, c) in edges and (c, a) in edges:
                    found.append((a, c, b))
                # orientation a -> c -> b -> a, reported as (a, b, c)
                if (a, c) in edges and (c, b) in edges and (b, a) in edges:
                    found.append((a, b, c))
    return sorted(found)


def acyclic_order(M: ExtendedMatrix) -> tuple[int, ...] | None:
    """A permutation sigma with b_{sigma(i) sigma(j)} >= 0 for i > j, or None.

    Positions are filled with sinks of the remaining graph; ties break toward
    the smallest original index, so the result is deterministic.
    """
    G = build_digraph(M)
    out_deg = {v: 0 for v in range(1, G.n + 1)}
    preds: dict[int, set[int]] = {v: set() for v in range(1, G.n + 1)}
    for (i, j) in G.edges:
        out_deg[i] += 1
        preds[j].add(i)
    available = sorted(v for v, dgr in out_deg.items() if dgr == 0)
    order: list[int] = []
    while available:
        v = available.pop(0)
        order.append(v)
        newly = []
        for u in preds[v]:
            out_deg[u] -= 1
            if out_deg[u] == 0:
                newly.append(u)
        if newly:
            available = sorted(available + newly)
    if len(order) != G.n:
        return None
    return tuple(order)


def reorder_seed(seed: GeneralizedSeed, sigma) -> GeneralizedSeed:
    """Relabel mutable directions by sigma: new index i holds old sigma(i).

    Rows and columns of the principal part, the divisor vector, the strings,
    the cluster list, and the variable labels inside every cluster polynomial
    move together; frozen rows keep their positions but follow sigma in the
    column order.
    """
    M = seed.matrix
    n, m = M.n, M.m
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(1, n + 1)):
        raise ValueError(f"{sigma} is not a permutation of 1..{n}")
    rows = []
    for j in range(1, m + 1):
        src = sigma[j - 1] if j <= n else j
        rows.append(tuple(M.entry(src, sigma[i - 1]) for i in range(1, n + 1)))
    d = tuple(M.d[sigma[i - 1] - 1] for i in range(1, n + 1))
    strings = StringSet(tuple(seed.strings.strings[sigma[i - 1] - 1] for i in range(1, n + 1)))

    # exponent coordinate i-1 receives old coordinate sigma(i)-1
    def relabel(p: LaurentPoly) -> LaurentPoly:
        out = {}
        for exp, c in p.terms.items():
            new = tuple(exp[sigma[i] - 1] for i in range(n)) + exp[n:]
            out[new] = c
        return LaurentPoly(m, n, out)

    cluster = tuple(relabel(seed.cluster[sigma[i - 1] - 1]) for i in range(1, n + 1))
    return GeneralizedSeed(
        matrix=ExtendedMatrix(m=m, n=n, b=tuple(rows), d=d),
        strings=strings,
        cluster=cluster,
        history=seed.history,
    )
