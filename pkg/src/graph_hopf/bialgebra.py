"""The two coproducts on graph algebras, the antipode, and the cointeraction.

Two parallel basis conventions:

* commutative: basis keys are *monomials*, sorted tuples of connected graphs
  in canonical form, realizing the free commutative algebra on connected
  isomorphism classes (unit = the empty tuple);
* noncommutative (indexed): basis keys are the indexed graphs themselves,
  multiplied by concatenation.

The restriction coproduct splits a graph over all ordered vertex-set
bipartitions; the contraction-extraction coproduct sums (G/p) (x) (G|p)
over admissible partitions p.  The quotient by the relation "isolated
vertex = 1" is represented by stripping single-vertex factors from
monomials; that quotient carries the antipode.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .graphs import (
    Graph,
    Partition,
    admissible_partitions,
    canonical_form,
    connected_components,
    contract,
    disjoint_union,
    extract,
    is_connected,
    nested_forests,
    forest_evaluate,
    restrict,
)
from .linear import Fraction, LinComb

UNIT = ()


def iso(G):
    """Project an indexed graph to its commutative monomial of component isoclasses."""
    return tuple(sorted(canonical_form(restrict(G, comp)) for comp in connected_components(G)))


def mono_mul(a, b):
    return tuple(sorted(a + b))


def mono_graph(mono):
    """A labeled representative of a monomial: the disjoint union of its factors."""
    out = Graph(0)
    for factor in mono:
        out = disjoint_union(out, factor)
    return out


def mono_vertices(mono):
    return sum(f.n for f in mono)


def mono_degree(mono):
    """Contraction-extraction grading: each connected factor counts n - 1."""
    return sum(f.n - 1 for f in mono)


def mono_totally_disconnected(mono):
    return all(not f.edges for f in mono)


def strip_units(mono):
    """Drop single-vertex factors: the quotient sending the one-vertex graph to 1."""
    return tuple(f for f in mono if f.n >= 2)


def as_element(x, indexed=False):
    """Coerce a Graph, basis key, or LinComb to a LinComb in the chosen basis."""
    if isinstance(x, LinComb):
        return x
    if isinstance(x, Graph):
        return LinComb.term(x if indexed else iso(x))
    if isinstance(x, tuple):
        return LinComb.term(x)
    raise TypeError(f"cannot interpret {x!r} as an algebra element")


def _bipartitions(n):
    verts = range(1, n + 1)
    for r in range(n + 1):
        for left in itertools.combinations(verts, r):
            right = tuple(v for v in verts if v not in left)
            yield left, right


# ---------------------------------------------------------------------------
# the restriction coproduct

def delta_big_graph(G, indexed=False):
    """Sum of G|I (x) G|J over ordered bipartitions V = I ⊔ J (2^n terms)."""
    proj = (lambda g: g) if indexed else iso
    out = LinComb.zero()
    for left, right in _bipartitions(G.n):
        out = out + LinComb.term((proj(restrict(G, left)), proj(restrict(G, right))))
    return out


def delta_big(x):
    return as_element(x).bind(lambda mono: delta_big_graph(mono_graph(mono)))


def delta_big_indexed(x):
    return as_element(x, indexed=True).bind(lambda G: delta_big_graph(G, indexed=True))


def counit_big(x):
    """Coefficient of the unit: 1 on the empty graph, 0 on everything else."""
    x = x if isinstance(x, LinComb) else as_element(x)
    return x.coeff(UNIT)


# ---------------------------------------------------------------------------
# the contraction-extraction coproduct

def delta_small_graph(G, indexed=False):
    """Sum of (G/p) (x) (G|p) over admissible partitions p."""
    proj = (lambda g: g) if indexed else iso
    out = LinComb.zero()
    for p in admissible_partitions(G):
        out = out + LinComb.term((proj(contract(G, p)), proj(extract(G, p))))
    return out


def delta_small(x):
    return as_element(x).bind(lambda mono: delta_small_graph(mono_graph(mono)))


def delta_small_indexed(x):
    return as_element(x, indexed=True).bind(lambda G: delta_small_graph(G, indexed=True))


def counit_small(x, indexed=False):
    """1 on totally disconnected basis keys, 0 elsewhere, extended linearly."""
    x = as_element(x, indexed=indexed)
    total = Fraction(0)
    for key, coeff in x.items():
        disconnected = (not key.edges) if isinstance(key, Graph) else mono_totally_disconnected(key)
        if disconnected:
            total += coeff
    return total


# ---------------------------------------------------------------------------
# antipode of the quotient bialgebra (isolated vertex = 1)

def antipode_forest(G):
    """Antipode of a connected graph with >= 2 vertices, by the nested-forest sum."""
    _require_antipode_arg(G)
    out = LinComb.zero()
    for forest in nested_forests(G):
        mono = strip_units(tuple(sorted(canonical_form(f) for f in forest_evaluate(G, forest))))
        out = out + LinComb.term(mono, Fraction(-1) ** len(forest))
    return out


def antipode_recursive(G):
    """Same antipode through the recursion that peels one contraction level."""
    _require_antipode_arg(G)
    return _antipode_rec(canonical_form(G))


def _require_antipode_arg(G):
    if G.n < 2 or not is_connected(G):
        raise ValueError("antipode is defined on connected graphs with >= 2 vertices")


@lru_cache(maxsize=None)
def _antipode_rec(C):
    out = LinComb.term(strip_units(iso(C)), -1)
    for p in admissible_partitions(C):
        if len(p) == C.n or len(p) == 1:
            continue
        factor = LinComb.term(strip_units(iso(contract(C, p))))
        inner = LinComb.term(UNIT)
        for block in p.blocks:
            if len(block) >= 2:
                inner = mono_element_mul(inner, _antipode_rec(canonical_form(restrict(C, block))))
        out = out - mono_element_mul(factor, inner)
    return out


def mono_element_mul(a, b):
    out = LinComb.zero()
    for ka, va in a.items():
        for kb, vb in b.items():
            out = out + LinComb.term(mono_mul(ka, kb), va * vb)
    return out


def antipode_element(x):
    """Multiplicative extension of the antipode to monomials without unit factors."""
    def on_mono(mono):
        acc = LinComb.term(UNIT)
        for factor in mono:
            acc = mono_element_mul(acc, antipode_recursive(factor))
        return acc

    return as_element(x).bind(lambda mono: on_mono(strip_units(mono)))


# ---------------------------------------------------------------------------
# cointeraction of the two coproducts

def cointeraction_lhs(x, indexed=False):
    """Route one: split first, then contract-extract each side and merge the
    extraction legs (a1 (x) b1 (x) a2 (x) b2 -> a1 (x) a2 (x) b1 b2)."""
    proj = (lambda g: g) if indexed else iso
    mul = disjoint_union

    def on_graph(G):
        out = LinComb.zero()
        for left, right in _bipartitions(G.n):
            GL, GR = restrict(G, left), restrict(G, right)
            parts_R = list(admissible_partitions(GR))
            for pl in admissible_partitions(GL):
                a1, b1 = contract(GL, pl), extract(GL, pl)
                for pr in parts_R:
                    a2, b2 = contract(GR, pr), extract(GR, pr)
                    out = out + LinComb.term((proj(a1), proj(a2), proj(mul(b1, b2))))
        return out

    if indexed:
        return as_element(x, indexed=True).bind(on_graph)
    return as_element(x).bind(lambda mono: on_graph(mono_graph(mono)))


def cointeraction_rhs(x, indexed=False):
    """Route two: contract-extract first, then split the contracted leg."""
    proj = (lambda g: g) if indexed else iso

    def on_graph(G):
        out = LinComb.zero()
        for p in admissible_partitions(G):
            contracted, extracted = contract(G, p), extract(G, p)
            for left, right in _bipartitions(contracted.n):
                out = out + LinComb.term(
                    (proj(restrict(contracted, left)),
                     proj(restrict(contracted, right)),
                     proj(extracted)))
        return out

    if indexed:
        return as_element(x, indexed=True).bind(on_graph)
    return as_element(x).bind(lambda mono: on_graph(mono_graph(mono)))


# ---------------------------------------------------------------------------
# from indexed graphs to isoclasses

def varpi(x):
    """Projection of an indexed-graph element onto commutative monomials."""
    return as_element(x, indexed=True).map_keys(iso)


def rho(x):
    """Coaction: contract-extract, then project the extraction leg."""
    def on_graph(G):
        out = LinComb.zero()
        for p in admissible_partitions(G):
            out = out + LinComb.term((contract(G, p), iso(extract(G, p))))
        return out

    return as_element(x, indexed=True).bind(on_graph)
