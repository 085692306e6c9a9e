"""Random dense families that reach the long-component machinery.

G(n, p) graphs small enough for exact alpha never contain a component of
diameter f(2) = 60, so these families plant long red paths inside cliques.
"""

import random

from monocover.cover import f_diameter
from monocover.graph import ColouredGraph, Mask


def clique_union(seed, k):
    """``k`` cliques, each carrying a red path of length f(k) + 1, with
    occasional red chords of span 2 and sparse random edges between cliques."""
    rng = random.Random(seed)
    length = f_diameter(k) + 1 + rng.randrange(4)
    size = length + 1
    n = k * size
    edges = []
    for b in range(k):
        off = b * size
        for i in range(size):
            for j in range(i + 1, size):
                if j == i + 1:
                    c = Mask.BOTH if rng.random() < 0.05 else Mask.RED
                elif j == i + 2 and rng.random() < 0.1:
                    c = Mask.RED
                else:
                    c = Mask.BLUE
                edges.append((off + i, off + j, c))
    p_cross = rng.choice([0.0, 0.002, 0.01])
    for u in range(n):
        for v in range(u + 1, n):
            if u // size != v // size and rng.random() < p_cross:
                edges.append((u, v, rng.choice([Mask.RED, Mask.BLUE, Mask.BOTH])))
    perm = list(range(n))
    if rng.random() < 0.5:
        rng.shuffle(perm)
    return ColouredGraph(n, tuple((perm[u], perm[v], c) for u, v, c in edges))


def path_and_pendants(seed, a):
    """A blue clique ``X`` carrying a red path, a blue clique ``Y`` whose
    vertices hang off random path vertices by single red edges, and ``a - 2``
    isolated vertices.  Every nonadjacent pair inside a red ball lies across
    ``X``/``Y`` where there is no blue edge at all, so no shortcut exists and
    the good-set phase runs, sometimes with swaps."""
    rng = random.Random(seed)
    length = f_diameter(a) + 1
    ys = rng.randrange(1, 6)
    n_x = length + 1
    n = n_x + ys + (a - 2)
    edges = []
    for i in range(n_x):
        for j in range(i + 1, n_x):
            edges.append((i, j, Mask.RED if j == i + 1 else Mask.BLUE))
    y_ids = range(n_x, n_x + ys)
    for y in y_ids:
        for w in y_ids:
            if w > y:
                edges.append((y, w, Mask.BLUE))
        spot = rng.randrange(1, min(length, 4 * a + 8))
        edges.append((spot, y, Mask.RED))
    perm = list(range(n))
    if rng.random() < 0.3:
        rng.shuffle(perm)
    return ColouredGraph(n, tuple((perm[u], perm[v], c) for u, v, c in edges))
