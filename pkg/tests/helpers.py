from collections import deque
from fractions import Fraction

from edgerake import build_graph

ACCEPTANCE_RESULTS = []


def record_acceptance(number, name, ok, detail=""):
    ACCEPTANCE_RESULTS.append((number, name, bool(ok), detail))


def path(n):
    return build_graph([(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return build_graph([(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return build_graph([(i, j) for i in range(n) for j in range(i + 1, n)])


def star(leaves):
    return build_graph([(0, i) for i in range(1, leaves + 1)])


def betweenness_by_enumeration(g):
    """Ordered-pair betweenness by enumerating every shortest edge path."""
    n = g.n
    inc = [[] for _ in range(n)]
    for e, (u, v, _) in enumerate(g.edges):
        inc[u].append((e, v))
        if not g.directed:
            inc[v].append((e, u))
    eb = [Fraction(0)] * g.m
    for s in range(n):
        dist = [-1] * n
        dist[s] = 0
        q = deque([s])
        while q:
            v = q.popleft()
            for _, w in inc[v]:
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    q.append(w)
        for t in range(n):
            if t == s or dist[t] < 0:
                continue
            paths = []
            stack = [(s, [])]
            while stack:
                v, used = stack.pop()
                if v == t:
                    paths.append(used)
                    continue
                for e, w in inc[v]:
                    if dist[w] == dist[v] + 1 and dist[w] <= dist[t]:
                        stack.append((w, used + [e]))
            for p in paths:
                for e in p:
                    eb[e] += Fraction(1, len(paths))
    return [float(x) for x in eb]
