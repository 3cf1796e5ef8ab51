"""The chromatic polynomial through independent routes.

Engines: the independent-partition closed form, deletion-contraction, and
the character-expansion formula.  Brute-force coloring counts and the two
combinatorial interpretations of values at negative integers (block families
with acyclic orientations; monotone function/orientation pairs) serve as
cross-checks.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .graphs import (
    acyclic_orientation_count,
    acyclic_orientations,
    canonical_form,
    connected_components,
    contract_edge,
    delete_edge,
    restrict,
    set_partitions,
)
from .linear import Polynomial, falling_factorial


def is_valid_coloring(G, f):
    """f maps vertex i to f[i-1]; valid when adjacent vertices get distinct colors."""
    return all(f[i - 1] != f[j - 1] for i, j in G.edges)


def is_packed_coloring(f):
    """Packed: the image is exactly {1..k} for some k >= 0."""
    return set(f) == set(range(1, (max(f) if f else 0) + 1))


def independent_partitions(G):
    """Partitions of [n] whose blocks are independent (induce no edge)."""
    for p in set_partitions(G.n):
        if all(not restrict(G, b).edges for b in p.blocks):
            yield p


def pchr_partition(G):
    """Chromatic polynomial as the sum of falling factorials over independent partitions."""
    out = Polynomial.zero()
    for p in independent_partitions(G):
        out = out + falling_factorial(len(p))
    return out


def pchr_deletion_contraction(G):
    """Chromatic polynomial by deleting and contracting the smallest edge."""
    out = Polynomial.one()
    for comp in connected_components(G):
        out = out * _pchr_delcon(canonical_form(restrict(G, comp)))
    return out


@lru_cache(maxsize=None)
def _pchr_delcon(C):
    if not C.edges:
        return Polynomial.x() ** C.n
    e = C.edges[0]
    return (pchr_deletion_contraction(delete_edge(C, e))
            - pchr_deletion_contraction(contract_edge(C, e)))


def pchr_character_formula(G):
    """Chromatic polynomial as sum of chromatic-character values times X^(#blocks)."""
    from .characters import LAMBDA_CHR
    from .graphs import admissible_partitions, extract

    out = Polynomial.zero()
    for p in admissible_partitions(G):
        out = out + Polynomial.x() ** len(p) * LAMBDA_CHR(extract(G, p))
    return out


ENGINES = {
    "partition": pchr_partition,
    "delcon": pchr_deletion_contraction,
    "character": pchr_character_formula,
}


def count_valid_colorings(G, k):
    """Brute-force count of valid colorings with colors 1..k (backtracking)."""
    if k < 0:
        raise ValueError("color count must be >= 0")
    if G.n == 0:
        return 1
    if k == 0:
        return 0
    earlier = [[] for _ in range(G.n + 1)]
    for i, j in G.edges:
        earlier[max(i, j)].append(min(i, j))
    colors = [0] * (G.n + 1)

    def count(v):
        if v > G.n:
            return 1
        total = 0
        for c in range(1, k + 1):
            if all(colors[u] != c for u in earlier[v]):
                colors[v] = c
                total += count(v + 1)
        colors[v] = 0
        return total

    return count(1)


def phi_zero(G):
    """The homogeneous polynomial morphism: X^(vertex count)."""
    return Polynomial.x() ** G.n


# ---------------------------------------------------------------------------
# values at negative integers

def stanley_families(G, k):
    """Count ordered k-tuples of (possibly empty) blocks partitioning the
    vertices, each block carrying an acyclic orientation of its induced
    subgraph.  Equals (-1)^|G| P(-k)."""
    if k < 1:
        raise ValueError("need k >= 1")
    total = 0
    for assignment in itertools.product(range(k), repeat=G.n):
        product = 1
        for part in range(k):
            block = [v + 1 for v, q in enumerate(assignment) if q == part]
            product *= acyclic_orientation_count(restrict(G, block))
        total += product
    return total


def stanley_pairs(G, k):
    """Count pairs (f, O): f maps vertices to 1..k, O is an acyclic orientation
    of G, and f never decreases along oriented edges.  Equals (-1)^|G| P(-k)."""
    if k < 1:
        raise ValueError("need k >= 1")
    orientations = list(acyclic_orientations(G))
    total = 0
    for f in itertools.product(range(1, k + 1), repeat=G.n):
        for orient in orientations:
            if all(f[u - 1] <= f[v - 1] for u, v in orient):
                total += 1
    return total
