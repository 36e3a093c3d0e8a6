"""Small graph builders and random instance generators shared by the tests."""
import random
from itertools import combinations

from minenum.model import EDGE, VERTEX, build_graph, build_hypergraph, canonicalize


def path(n):
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return build_graph(n, list(combinations(range(n), 2)))


def star(leaves):
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def vs(*ids):
    return canonicalize(ids, VERTEX)


def es(*ids):
    return canonicalize(ids, EDGE)


def random_graph(rng, n, m=None):
    pairs = list(combinations(range(n), 2))
    if m is None:
        m = rng.randint(0, len(pairs))
    return build_graph(n, rng.sample(pairs, min(m, len(pairs))))


def random_graphs(seed, count, n_max, m_max=None, n_min=1):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(n_min, n_max)
        top = n * (n - 1) // 2
        if m_max is not None:
            top = min(top, m_max)
        out.append(random_graph(rng, n, rng.randint(0, top)))
    return out


def random_hypergraph(rng, n, m, rank):
    edges = [rng.sample(range(n), rng.randint(1, min(rank, n))) for _ in range(m)]
    return build_hypergraph(n, edges, rank=rank)


def connected_component(g, v):
    seen, stack = {v}, [v]
    while stack:
        for w in g.adjacency[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen
