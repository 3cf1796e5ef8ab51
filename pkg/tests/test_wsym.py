import pytest

from graph_hopf import characters as ch
from graph_hopf import verify
from graph_hopf import wsym as ws
from graph_hopf.graphs import Graph, Partition, complete, edgeless, path_graph
from graph_hopf.linear import LinComb, Polynomial

K1, K2, K3 = complete(1), complete(2), complete(3)
P3 = path_graph(3)


def part(*blocks):
    n = sum(len(b) for b in blocks)
    return Partition(n, blocks)


class TestPackedWords:
    def test_pack(self):
        assert ws.pack((3, 5, 3)) == (1, 2, 1)
        assert ws.pack(()) == ()

    def test_fiber_partition(self):
        assert ws.partition_of_word((1, 2, 1)) == part((1, 3), (2,))
        assert ws.partition_of_word((1, 2)) == ws.partition_of_word((2, 1))

    def test_rejects_unpacked(self):
        with pytest.raises(ValueError):
            ws.partition_of_word((1, 3))

    def test_pack_then_fibers_round_trip(self):
        for w in [(2, 2, 5), (4, 1, 4, 2)]:
            p = ws.partition_of_word(ws.pack(w))
            assert ws.expand_W(p).coeff(ws.pack(w)) == 1


class TestWBasis:
    def test_two_singletons(self):
        assert ws.expand_W(part((1,), (2,))) == LinComb.term((1, 2)) + LinComb.term((2, 1))

    def test_one_block(self):
        assert ws.expand_W(part((1, 2))) == LinComb.term((1, 1))

    def test_split_block(self):
        assert ws.expand_W(part((1, 3), (2,))) == LinComb.term((1, 2, 1)) + LinComb.term((2, 1, 2))

    def test_empty(self):
        assert ws.expand_W(Partition(0, [])) == LinComb.term(())


class TestHopfStructure:
    def test_product_examples(self):
        assert not verify.check_wsym_examples()

    def test_product_noncommutative_witness(self):
        a, b = part((1, 2)), part((1,))
        assert ws.wsym_product(a, b) != ws.wsym_product(b, a)

    def test_product_matches_word_level(self):
        # oracle: multiply word expansions inside all words of the joint length
        import itertools
        for p, q in [(part((1,)), part((1, 2))), (part((1,), (2,)), part((1,)))]:
            got = ws.expand(ws.wsym_product(p, q))
            k = p.n
            want = LinComb.zero()
            for w in ws._packed_words(p.n + q.n):
                if ws.pack(w[:k]) in ws.expand_W(p) and ws.pack(w[k:]) in ws.expand_W(q):
                    want = want + LinComb.term(w)
            assert got == want

    def test_coproduct_point(self):
        empty = Partition(0, [])
        single = part((1,))
        assert ws.wsym_coproduct(single) == (LinComb.term((single, empty))
                                             + LinComb.term((empty, single)))

    def test_cocommutative(self):
        assert not verify.check_wsym_cocommutativity(4)


class TestChromaticElement:
    def test_edge(self):
        assert ws.pchr_nc(K2) == LinComb.term(part((1,), (2,)))

    def test_triangle(self):
        assert ws.pchr_nc(K3) == LinComb.term(part((1,), (2,), (3,)))

    def test_path(self):
        assert ws.pchr_nc(P3) == (LinComb.term(part((1,), (2,), (3,)))
                                  + LinComb.term(part((1, 3), (2,))))

    def test_depends_on_labeling(self):
        other = Graph(3, [(1, 3), (2, 3)])
        assert ws.pchr_nc(other) == (LinComb.term(part((1,), (2,), (3,)))
                                     + LinComb.term(part((1, 2), (3,))))

    def test_word_expansion_is_valid_colorings(self):
        assert not verify.check_wsym_words(4)

    def test_morphism_laws_small(self):
        assert not verify.check_wsym_algebra_morphism(4)
        assert not verify.check_wsym_coalgebra_morphism(3)

    def test_triangularity_small(self):
        assert not verify.check_wsym_triangularity(4)


class TestColoringMorphism:
    def test_point(self):
        assert ws.phi0_nc(K1) == LinComb.term((1,))

    def test_edge(self):
        want = LinComb.term((1,)) + LinComb.term((1, 2)) + LinComb.term((2, 1))
        assert ws.phi0_nc(K2) == want

    def test_edgeless_pair(self):
        want = LinComb.term((1, 1)) + LinComb.term((1, 2)) + LinComb.term((2, 1))
        assert ws.phi0_nc(edgeless(2)) == want

    def test_monochrome_path_contracts(self):
        # coloring (1, 1, 1) of the path collapses to the single word 1
        assert ws.phi0_nc(P3).coeff((1,)) == 1


class TestAction:
    def test_edge_by_hand(self):
        got = ws.act_nc(K2, ch.LAMBDA_CHR)
        assert got == LinComb.term((1, 2)) + LinComb.term((2, 1))
        assert got == ws.expand(ws.pchr_nc(K2))

    def test_point_identity(self):
        assert ws.act_nc(K1, ch.LAMBDA_CHR) == LinComb.term((1,))

    def test_path(self):
        assert ws.act_nc(P3, ch.LAMBDA_CHR) == ws.expand(ws.pchr_nc(P3))

    def test_all_indexed_graphs_small(self):
        assert not verify.check_wsym_action(4)


class TestHilbertProjection:
    def test_single_letter(self):
        assert ws.hilbert_morphism(LinComb.term((1,))) == Polynomial.x()

    def test_coloring_morphism_of_edgeless_pair(self):
        got = ws.hilbert_morphism(ws.phi0_nc(edgeless(2)))
        assert got == Polynomial.x() ** 2

    def test_chromatic_element_of_edge(self):
        got = ws.hilbert_morphism(ws.pchr_nc(K2))
        assert got == Polynomial([0, -1, 1])  # X(X-1)

    def test_word_and_w_basis_agree(self):
        for G in [K2, K3, P3, edgeless(3)]:
            element = ws.pchr_nc(G)
            assert ws.hilbert_morphism(element) == ws.hilbert_morphism(ws.expand(element))

    def test_intertwines_both_morphisms(self):
        assert not verify.check_projection_chromatic(4)

    def test_algebra_morphism(self):
        assert not verify.check_hilbert_algebra_morphism(4)
