"""Word symmetric functions and the noncommutative chromatic morphisms.

A packed word is a finite sequence over positive integers whose letters are
exactly 1..k; its fiber partition groups positions by letter.  The W basis
is indexed by set partitions: the W element of a partition is the sum of the
k! packed words with that fiber partition.

Two morphisms from indexed graphs land here: the noncommutative chromatic
element (sum of W over independent partitions, equivalently the sum of all
packed valid colorings read as words) and the packed-coloring morphism,
which sums over *all* packed colorings after contracting the connected
components of each color fiber.  The word-level morphism is not supported
on the W basis termwise (its terms mix lengths), so it lives in word space;
the chromatic element is stored on the W basis and expanded on demand.

The projection onto univariate polynomials sends a packed word w to the
Hilbert polynomial of max(w); on the W basis this is k! times the k-th
Hilbert polynomial for a k-block partition, the normalization under which
the projection intertwines both chromatic morphisms exactly.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache

from .chromatic import independent_partitions
from .graphs import Partition, set_partitions
from .linear import Fraction, LinComb, Polynomial, bilinear, hilbert


def pack(word):
    """Standardize letters by the increasing bijection onto 1..k, preserving order."""
    letters = sorted(set(word))
    relabel = {x: i + 1 for i, x in enumerate(letters)}
    return tuple(relabel[x] for x in word)


def is_packed(word):
    return set(word) == set(range(1, (max(word) if word else 0) + 1))


def partition_of_word(w):
    """Fiber partition of a packed word: positions grouped by letter."""
    if not is_packed(w):
        raise ValueError(f"{w!r} is not packed")
    k = max(w) if w else 0
    fibers = [[] for _ in range(k)]
    for pos, letter in enumerate(w, start=1):
        fibers[letter - 1].append(pos)
    return Partition(len(w), fibers)


def expand_W(p):
    """The W basis element of a set partition: all block labelings as words."""
    k = len(p)
    out = LinComb.zero()
    for sigma in itertools.permutations(range(1, k + 1)):
        label = {block: sigma[i] for i, block in enumerate(p.blocks)}
        word = tuple(label[p.block_of(v)] for v in range(1, p.n + 1))
        out = out + LinComb.term(word)
    return out


def expand(x):
    """Word expansion of a W-basis element."""
    return x.bind(expand_W)


# ---------------------------------------------------------------------------
# Hopf structure on the W basis

def wsym_product(p, q):
    """Product of two W elements: all partitions of [k+l] whose packed
    restrictions to the first k and last l positions recover the factors."""
    k, l = p.n, q.n
    first, last = range(1, k + 1), range(k + 1, k + l + 1)
    out = LinComb.zero()
    for r in set_partitions(k + l):
        if r.packed_restriction(first) == p and r.packed_restriction(last) == q:
            out = out + LinComb.term(r)
    return out


def wsym_element_product(x, y):
    return bilinear(x, y, wsym_product)


def _pack_blocks(blocks):
    support = sorted(v for b in blocks for v in b)
    relabel = {v: i + 1 for i, v in enumerate(support)}
    return Partition(len(support), [[relabel[v] for v in b] for b in blocks])


def wsym_coproduct(p):
    """Coproduct on the W basis: split the block set and pack each side."""
    k = len(p)
    out = LinComb.zero()
    for r in range(k + 1):
        for chosen in itertools.combinations(range(k), r):
            left = _pack_blocks([p.blocks[i] for i in chosen])
            right = _pack_blocks([p.blocks[i] for i in range(k) if i not in chosen])
            out = out + LinComb.term((left, right))
    return out


def wsym_element_coproduct(x):
    return x.bind(wsym_coproduct)


# ---------------------------------------------------------------------------
# the two morphisms from indexed graphs

@lru_cache(maxsize=None)
def pchr_nc(G):
    """Noncommutative chromatic element: sum of W over independent partitions."""
    out = LinComb.zero()
    for p in independent_partitions(G):
        out = out + LinComb.term(p)
    return out


@lru_cache(maxsize=None)
def _packed_words(n):
    """All packed words of length n (one per ordered set partition)."""
    if n == 0:
        return ((),)
    return tuple(f for f in itertools.product(range(1, n + 1), repeat=n) if is_packed(f))


def packed_colorings(G):
    """All packed colorings of G (image exactly 1..k for some k)."""
    yield from _packed_words(G.n)


def packed_valid_colorings(G):
    from .chromatic import is_valid_coloring

    for f in packed_colorings(G):
        if is_valid_coloring(G, f):
            yield f


def coloring_fiber_partition(G, f):
    """Blocks are the connected components of the color fibers of f."""
    adj = {v: [] for v in range(1, G.n + 1)}
    for i, j in G.edges:
        adj[i].append(j)
        adj[j].append(i)
    blocks = []
    for color in sorted(set(f)):
        fiber = {v for v in range(1, G.n + 1) if f[v - 1] == color}
        while fiber:
            v = min(fiber)
            comp = {v}
            stack = [v]
            while stack:
                u = stack.pop()
                for w in adj[u]:
                    if w in fiber and w not in comp:
                        comp.add(w)
                        stack.append(w)
            fiber -= comp
            blocks.append(tuple(sorted(comp)))
    return Partition(G.n, blocks)


@lru_cache(maxsize=None)
def phi0_nc(G):
    """Packed-coloring morphism: for each packed coloring f, contract the
    connected components of its fibers and read off the induced word."""
    out = LinComb.zero()
    for f in packed_colorings(G):
        p = coloring_fiber_partition(G, f)
        word = tuple(f[block[0] - 1] for block in p.blocks)
        out = out + LinComb.term(word)
    return out


def act_nc(G, lam):
    """Right action of a character on the packed-coloring morphism, in word space."""
    from .characters import act

    return act(phi0_nc, lam)(G)


# ---------------------------------------------------------------------------
# projection onto univariate polynomials

def hilbert_morphism(x):
    """Linear projection to polynomials: word w -> H_max(w); W element of a
    k-block partition -> k! H_k.  Accepts word-space or W-basis elements."""
    weights = {}
    for key, coeff in x.items():
        if isinstance(key, Partition):
            k = len(key)
            coeff = coeff * math.factorial(k)
        else:
            k = max(key) if key else 0
        weights[k] = weights.get(k, Fraction(0)) + coeff
    out = Polynomial.zero()
    for k, coeff in sorted(weights.items()):
        out = out + hilbert(k) * coeff
    return out
