"""Indexed simple graphs on the vertex set [n] = {1, ..., n}.

Structural operations: restriction, contraction, extraction, admissible
partitions (every block induces a connected subgraph), nested forests,
acyclic orientations, and exact isomorphism canonicalization for small
graphs.

Vertices are the integers 1..n; an edge is an unordered pair stored as
(i, j) with i < j.  The degenerate graph with n = 0 is the unit of the
graph algebra and is accepted everywhere.

All values are immutable after construction and every operation is a pure
function, so values can be shared freely across threads.  Memo tables only
cache idempotent pure results.
"""

from __future__ import annotations

import itertools
import random
from functools import lru_cache


class Graph:
    """Simple graph on vertices 1..n, edges kept as a sorted tuple of pairs."""

    __slots__ = ("n", "edges", "_eset")

    def __init__(self, n, edges=()):
        if n < 0:
            raise ValueError("vertex count must be >= 0")
        normalized = set()
        for e in edges:
            i, j = e
            if i == j:
                raise ValueError(f"loop edge {i}-{j} not allowed")
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValueError(f"edge {i}-{j} out of range for n={n}")
            normalized.add((i, j) if i < j else (j, i))
        self.n = n
        self.edges = tuple(sorted(normalized))
        self._eset = frozenset(self.edges)

    def has_edge(self, i, j):
        return ((i, j) if i < j else (j, i)) in self._eset

    def _edge_set(self):
        return self._eset

    def neighbors(self, v):
        out = []
        for i, j in self.edges:
            if i == v:
                out.append(j)
            elif j == v:
                out.append(i)
        return tuple(sorted(out))

    def degree_of(self, v):
        return len(self.neighbors(v))

    def sort_key(self):
        return (self.n, self.edges)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        return format_graph(self)

    def __repr__(self):
        return f"Graph({format_graph(self)!r})"


class Partition:
    """Set partition of [n]: disjoint nonempty blocks covering 1..n.

    Canonical presentation: every block sorted, blocks ordered by their
    minimal element.  Doubles as an equivalence relation on vertices and
    as a basis key for word symmetric functions.
    """

    __slots__ = ("n", "blocks", "_lookup")

    def __init__(self, n, blocks):
        blocks = tuple(sorted(tuple(sorted(b)) for b in blocks))
        lookup = {}
        for b in blocks:
            if not b:
                raise ValueError("empty block")
            for v in b:
                if not (1 <= v <= n):
                    raise ValueError(f"element {v} out of range for n={n}")
                if v in lookup:
                    raise ValueError(f"element {v} in two blocks")
                lookup[v] = b
        if len(lookup) != n:
            raise ValueError("blocks do not cover [n]")
        self.n = n
        self.blocks = blocks
        self._lookup = lookup

    @classmethod
    def singletons(cls, n):
        return cls(n, [(v,) for v in range(1, n + 1)])

    @classmethod
    def one_block(cls, n):
        return cls(n, [tuple(range(1, n + 1))] if n else [])

    def block_of(self, v):
        return self._lookup[v]

    def __len__(self):
        return len(self.blocks)

    def refines(self, other):
        """True when every block of self lies inside a block of other."""
        if self.n != other.n:
            raise ValueError("partitions on different ground sets")
        return all(set(b) <= set(other.block_of(b[0])) for b in self.blocks)

    def packed_restriction(self, subset):
        """Restrict to a subset of [n] and relabel via the increasing bijection."""
        subset = sorted(subset)
        relabel = {v: i + 1 for i, v in enumerate(subset)}
        keep = set(subset)
        blocks = []
        for b in self.blocks:
            inter = [relabel[v] for v in b if v in keep]
            if inter:
                blocks.append(inter)
        return Partition(len(subset), blocks)

    def __eq__(self, other):
        return isinstance(other, Partition) and self.n == other.n and self.blocks == other.blocks

    def __hash__(self):
        return hash((self.n, self.blocks))

    def __lt__(self, other):
        return (self.n, self.blocks) < (other.n, other.blocks)

    def __str__(self):
        return "{" + ",".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks) + "}"

    def __repr__(self):
        return f"Partition({self.n}, {list(map(list, self.blocks))})"


# ---------------------------------------------------------------------------
# text format: "n: i-j, k-l"; "0:" is the empty graph

def parse_graph(text):
    """Parse the graph text format `n: i-j, k-l, ...`; rejects loops and duplicates."""
    if ":" not in text:
        raise ValueError(f"missing ':' in graph {text!r}")
    head, _, tail = text.partition(":")
    try:
        n = int(head.strip())
    except ValueError:
        raise ValueError(f"bad vertex count in graph {text!r}") from None
    edges = []
    seen = set()
    tail = tail.strip()
    if tail:
        for token in tail.split(","):
            parts = token.split("-")
            if len(parts) != 2:
                raise ValueError(f"bad edge {token.strip()!r} in graph {text!r}")
            try:
                i, j = int(parts[0]), int(parts[1])
            except ValueError:
                raise ValueError(f"bad edge {token.strip()!r} in graph {text!r}") from None
            key = (min(i, j), max(i, j))
            if key in seen:
                raise ValueError(f"duplicate edge {i}-{j} in graph {text!r}")
            seen.add(key)
            edges.append((i, j))
    return Graph(n, edges)


def format_graph(G):
    if not G.edges:
        return f"{G.n}:"
    return f"{G.n}: " + ", ".join(f"{i}-{j}" for i, j in G.edges)


# ---------------------------------------------------------------------------
# constructions

def edgeless(n):
    return Graph(n)


def complete(n):
    return Graph(n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n):
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def disjoint_union(G, H):
    """Concatenate: H's vertices are shifted by |G|.  This is the graph product."""
    k = G.n
    return Graph(k + H.n, list(G.edges) + [(i + k, j + k) for i, j in H.edges])


def relabel(G, perm):
    """Apply a bijection [n] -> [n] given as a dict or as a tuple with perm[v-1] = image."""
    if not isinstance(perm, dict):
        perm = {v: perm[v - 1] for v in range(1, G.n + 1)}
    return Graph(G.n, [(perm[i], perm[j]) for i, j in G.edges])


def random_graph(n, rng, p=0.5):
    """Erdos-Renyi style sample; rng is a random.Random for reproducibility."""
    return Graph(n, [e for e in complete(n).edges if rng.random() < p])


# ---------------------------------------------------------------------------
# restriction / contraction / extraction

def restrict(G, subset):
    """Induced subgraph on a subset of [n], relabeled to [k] by the increasing bijection."""
    subset = sorted(set(subset))
    for v in subset:
        if not (1 <= v <= G.n):
            raise ValueError(f"vertex {v} out of range for n={G.n}")
    relabeling = {v: i + 1 for i, v in enumerate(subset)}
    keep = set(subset)
    return Graph(len(subset),
                 [(relabeling[i], relabeling[j]) for i, j in G.edges if i in keep and j in keep])


def contract(G, p):
    """Collapse every block of p to one vertex, dropping loops and multi-edges.

    Blocks are indexed by their minimal elements: the block with the b-th
    smallest minimum becomes vertex b of the result.
    """
    if p.n != G.n:
        raise ValueError("partition does not match the vertex set")
    index = {b: i + 1 for i, b in enumerate(p.blocks)}
    edges = set()
    for i, j in G.edges:
        bi, bj = index[p.block_of(i)], index[p.block_of(j)]
        if bi != bj:
            edges.add((min(bi, bj), max(bi, bj)))
    return Graph(len(p.blocks), edges)


def extract(G, p):
    """Keep only the edges internal to blocks of p; vertex set unchanged."""
    if p.n != G.n:
        raise ValueError("partition does not match the vertex set")
    return Graph(G.n, [(i, j) for i, j in G.edges if p.block_of(i) is p.block_of(j)])


def _subset_connected(G, block):
    """Is the subgraph induced on `block` connected?  Empty blocks don't occur."""
    block = set(block)
    if not block:
        return False
    start = min(block)
    seen = {start}
    stack = [start]
    adj = {v: [] for v in block}
    for i, j in G.edges:
        if i in block and j in block:
            adj[i].append(j)
            adj[j].append(i)
    while stack:
        v = stack.pop()
        for u in adj[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return seen == block


def is_admissible(G, p):
    """True when every block of p induces a connected subgraph of G."""
    if p.n != G.n:
        raise ValueError("partition does not match the vertex set")
    return all(_subset_connected(G, b) for b in p.blocks)


@lru_cache(maxsize=None)
def _set_partitions_list(n):
    if n == 0:
        return (Partition(0, []),)
    labels = [0] * n
    out = []

    def rec(i, nmax):
        if i == n:
            blocks = [[] for _ in range(nmax)]
            for v in range(n):
                blocks[labels[v]].append(v + 1)
            out.append(Partition(n, blocks))
            return
        for v in range(nmax + 1):
            labels[i] = v
            rec(i + 1, max(nmax, v + 1))

    rec(0, 0)
    return tuple(out)


def set_partitions(n):
    """All set partitions of [n], generated from restricted-growth strings."""
    yield from _set_partitions_list(n)


@lru_cache(maxsize=None)
def _admissible_list(G):
    return tuple(p for p in _set_partitions_list(G.n)
                 if all(_subset_connected(G, b) for b in p.blocks))


def admissible_partitions(G):
    """Every partition of [n] whose blocks all induce connected subgraphs."""
    yield from _admissible_list(G)


# ---------------------------------------------------------------------------
# edge surgery

def _require_edge(G, e):
    i, j = e
    key = (min(i, j), max(i, j))
    if key not in G._edge_set():
        raise ValueError(f"edge {i}-{j} not in graph")
    return key


def delete_edge(G, e):
    key = _require_edge(G, e)
    return Graph(G.n, [f for f in G.edges if f != key])


def contract_edge(G, e):
    key = _require_edge(G, e)
    blocks = [key] + [(v,) for v in range(1, G.n + 1) if v not in key]
    return contract(G, Partition(G.n, blocks))


def is_bridge(G, e):
    return cc(delete_edge(G, e)) > cc(G)


# ---------------------------------------------------------------------------
# components and grading

def connected_components(G):
    """Vertex sets of the components, each sorted, listed by minimal element."""
    seen = set()
    comps = []
    adj = {v: [] for v in range(1, G.n + 1)}
    for i, j in G.edges:
        adj[i].append(j)
        adj[j].append(i)
    for v in range(1, G.n + 1):
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append(tuple(sorted(comp)))
    return comps


def cc(G):
    return len(connected_components(G))


def is_connected(G):
    return cc(G) == 1


def degree(G):
    """Grading of the contraction-extraction bialgebra: |G| - cc(G)."""
    return G.n - cc(G)


def components_partition(G):
    """The coarsest admissible partition: blocks are the connected components."""
    return Partition(G.n, connected_components(G))


# ---------------------------------------------------------------------------
# isomorphism canonicalization
#
# Exact scheme for desk-scale graphs (n <= 10): minimize the upper-triangular
# adjacency bitstring over vertex relabelings.  Candidate relabelings are cut
# down by an isomorphism-invariant vertex signature (degree, neighbor degrees,
# triangle count); the minimum over the remaining labelings is still a
# canonical representative because the candidate set itself is invariant.

@lru_cache(maxsize=None)
def _slot_table(n):
    table = {}
    k = 0
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            table[(i, j)] = k
            k += 1
    return table


def _vertex_signature(G):
    degs = {v: G.degree_of(v) for v in range(1, G.n + 1)}
    sig = {}
    for v in range(1, G.n + 1):
        nbrs = G.neighbors(v)
        tri = sum(1 for a, b in itertools.combinations(nbrs, 2) if G.has_edge(a, b))
        sig[v] = (degs[v], tuple(sorted(degs[u] for u in nbrs)), tri)
    return sig


def _canonical_connected(G):
    n = G.n
    slots = _slot_table(n)
    sig = _vertex_signature(G)
    classes = {}
    for v in range(1, n + 1):
        classes.setdefault(sig[v], []).append(v)
    ordered_classes = [classes[s] for s in sorted(classes)]
    best = None
    for parts in itertools.product(*(itertools.permutations(c) for c in ordered_classes)):
        order = [v for part in parts for v in part]
        pos = {v: i + 1 for i, v in enumerate(order)}
        mask = 0
        for i, j in G.edges:
            a, b = pos[i], pos[j]
            mask |= 1 << slots[(a, b) if a < b else (b, a)]
        if best is None or mask < best:
            best = mask
    edges = [e for e, k in _slot_table(n).items() if best >> k & 1]
    return Graph(n, edges)


@lru_cache(maxsize=None)
def canonical_form(G):
    """A canonical representative of the isomorphism class of G."""
    comps = connected_components(G)
    if len(comps) == 1 and G.n >= 1:
        return _canonical_connected(G)
    if G.n == 0:
        return G
    forms = sorted(_canonical_connected(restrict(G, comp)) for comp in comps)
    out = Graph(0)
    for f in forms:
        out = disjoint_union(out, f)
    return out


def canonical_key(G):
    """Opaque byte string identifying the isomorphism class of a connected graph."""
    if not is_connected(G):
        raise ValueError("canonical_key requires a connected graph")
    C = canonical_form(G)
    nslots = C.n * (C.n - 1) // 2
    slots = _slot_table(C.n)
    mask = 0
    for e in C.edges:
        mask |= 1 << slots[e]
    return bytes([C.n]) + mask.to_bytes((nslots + 7) // 8 or 1, "big")


def monomial_key(G):
    """Sorted multiset of component keys: the commutative monomial of G."""
    return tuple(sorted(canonical_key(restrict(G, comp)) for comp in connected_components(G)))


# ---------------------------------------------------------------------------
# enumeration of isomorphism classes

def all_graphs(n):
    """Every labeled graph on [n] (2^(n choose 2) of them)."""
    pairs = list(complete(n).edges)
    for mask in range(1 << len(pairs)):
        yield Graph(n, [e for k, e in enumerate(pairs) if mask >> k & 1])


@lru_cache(maxsize=None)
def graph_isoclasses(n):
    """Canonical representatives of all isomorphism classes on exactly n vertices."""
    pairs = list(complete(n).edges)
    reps = set()
    for mask in range(1 << len(pairs)):
        edges = [e for k, e in enumerate(pairs) if mask >> k & 1]
        degs = [0] * n
        for i, j in edges:
            degs[i - 1] += 1
            degs[j - 1] += 1
        # one representative per class has non-increasing labeled degrees
        if any(degs[i] < degs[i + 1] for i in range(n - 1)):
            continue
        reps.add(canonical_form(Graph(n, edges)))
    return tuple(sorted(reps))


def connected_isoclasses(n):
    return tuple(g for g in graph_isoclasses(n) if g.n and is_connected(g))


def isoclasses_up_to(n):
    """All isomorphism classes with 0..n vertices."""
    out = []
    for k in range(n + 1):
        out.extend(graph_isoclasses(k))
    return tuple(out)


# ---------------------------------------------------------------------------
# nested forests
#
# A nested forest of a connected graph is a family of vertex subsets that
# contains the full vertex set, is pairwise nested-or-disjoint, and whose
# members all induce connected subgraphs.  Proper members have size >= 2:
# allowing singleton proper members would break both the stated forest
# counts on small graphs and the antipode formula they feed.

@lru_cache(maxsize=None)
def _connected_subsets(G):
    """All subsets of [n] of size >= 2 inducing a connected subgraph, as frozensets."""
    out = []
    verts = list(range(1, G.n + 1))
    for r in range(2, G.n + 1):
        for sub in itertools.combinations(verts, r):
            if _subset_connected(G, sub):
                out.append(frozenset(sub))
    return tuple(out)


def nested_forests(G):
    """Yield every nested forest of a connected graph, each exactly once.

    A forest is returned as a tuple of sorted vertex tuples, ordered
    lexicographically.
    """
    if G.n == 0 or not is_connected(G):
        raise ValueError("nested forests are defined for nonempty connected graphs")
    subsets = _connected_subsets(G)
    memo = {}

    def families(S):
        # all forests of the induced subgraph on S (each contains S itself)
        if S in memo:
            return memo[S]
        proper = [C for C in subsets if C < S]
        results = []

        def antichains(start, chosen):
            yield tuple(chosen)
            for k in range(start, len(proper)):
                C = proper[k]
                if all(C.isdisjoint(D) for D in chosen):
                    chosen.append(C)
                    yield from antichains(k + 1, chosen)
                    chosen.pop()

        for chain_sets in antichains(0, []):
            for combo in itertools.product(*(families(C) for C in chain_sets)):
                members = [S]
                for forest in combo:
                    members.extend(forest)
                results.append(tuple(members))
        memo[S] = results
        return results

    full = frozenset(range(1, G.n + 1))
    for forest in families(full):
        yield tuple(sorted(tuple(sorted(S)) for S in forest))


def forest_evaluate(G, forest):
    """Factor graphs of a nested forest: for each member I, restrict to I and
    contract the maximal members strictly below I (other vertices stay single)."""
    members = [frozenset(S) for S in forest]
    factors = []
    for S in sorted(forest):
        I = frozenset(S)
        below = [J for J in members if J < I]
        maximal = [J for J in below if not any(J < K for K in below)]
        covered = set().union(*maximal) if maximal else set()
        ordered = sorted(I)
        pos = {v: i + 1 for i, v in enumerate(ordered)}
        blocks = [tuple(sorted(pos[v] for v in J)) for J in maximal]
        blocks += [(pos[v],) for v in I - covered]
        factors.append(contract(restrict(G, I), Partition(len(I), blocks)))
    return factors


# ---------------------------------------------------------------------------
# acyclic orientations

def acyclic_orientations(G):
    """Yield each acyclic orientation of E(G) exactly once.

    An orientation is a tuple of directed pairs, one per edge, aligned with
    the sorted edge list.  Every acyclic orientation is induced by at least
    one vertex order, so we sweep vertex orders and deduplicate.
    """
    seen = set()
    for perm in itertools.permutations(range(1, G.n + 1)):
        pos = {v: i for i, v in enumerate(perm)}
        orient = tuple((i, j) if pos[i] < pos[j] else (j, i) for i, j in G.edges)
        if orient not in seen:
            seen.add(orient)
            yield orient


def is_acyclic_orientation(G, orientation):
    directed = {v: [] for v in range(1, G.n + 1)}
    for u, v in orientation:
        directed[u].append(v)
    state = {}

    def dfs(v):
        state[v] = 1
        for w in directed[v]:
            if state.get(w) == 1:
                return False
            if state.get(w) is None and not dfs(w):
                return False
        state[v] = 2
        return True

    return all(state.get(v) == 2 or dfs(v) for v in range(1, G.n + 1))


@lru_cache(maxsize=None)
def _acyclic_count_canonical(C):
    return sum(1 for _ in acyclic_orientations(C))


def acyclic_orientation_count(G):
    return _acyclic_count_canonical(canonical_form(G))
