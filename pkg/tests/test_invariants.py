import numpy as np
import pytest
from itertools import combinations
from math import comb

from ginshift.changes import CoordinateChange, SizeLimitError
from ginshift.fields import GFP, InvalidInputError
from ginshift.graphs import (Graph, complete_bipartite, cycle_graph,
                             disjoint_cliques, path_graph)
from ginshift.ideals import MonomialIdeal
from ginshift.invariants import (SQUAREFREE, STABLE_POLY, BettiTable, alpha,
                                 alpha_monomial, betti_stable,
                                 bipartite_profile, closed_form_profiles,
                                 edge_stat, gin_profile_max_ge, h_values,
                                 hyperplane_rank_oracle, index_profile,
                                 lex_rev_complement_identity, m_count,
                                 regularity_from_gin, resolution_oracle,
                                 shifted_graph_edges, two_cliques_profile,
                                 two_cliques_profile_from_h)
from ginshift.monomials import (EXT, POLY, all_monomials, ext_monomial,
                                poly_monomial, squarefree_poly)
from ginshift.orders import LEX, REVLEX


def P(exps, n):
    return MonomialIdeal.make(POLY, n, [poly_monomial(e) for e in exps])


# -- Betti tables -------------------------------------------------------


def test_betti_table_basics():
    t = BettiTable.make({(0, 2): 2, (1, 2): 1, (1, 3): 1, (2, 5): 0})
    assert t.get(0, 2) == 2
    assert t.get(2, 5) == 0  # zero entries are dropped
    assert t.regularity() == 3
    assert t.to_json()["convention"] == "ideal-indexed"
    assert "i\\j" in str(t)


def test_betti_stable_known_values():
    ideal = P([(2, 0), (1, 1), (0, 3)], 2)
    t = betti_stable(ideal, STABLE_POLY)
    assert t.as_dict() == {(0, 2): 2, (1, 2): 1, (0, 3): 1, (1, 3): 1}


def test_betti_squarefree_known_values():
    tri = MonomialIdeal.make(POLY, 3, [squarefree_poly(p, 3)
                                       for p in ((1, 2), (1, 3), (2, 3))])
    t = betti_stable(tri, SQUAREFREE)
    assert t.as_dict() == {(0, 2): 3, (1, 2): 2}


def test_betti_stable_rejects_unstable():
    with pytest.raises(InvalidInputError, match="x2\\^2"):
        betti_stable(P([(0, 2)], 2), STABLE_POLY)


def test_resolution_oracle_matches_closed_forms():
    cases = [P([(2, 0), (1, 1), (0, 3)], 2),
             P([(2, 0, 0), (1, 1, 0), (1, 0, 1)], 3)]
    for ideal in cases:
        assert resolution_oracle(ideal).as_dict() == \
            betti_stable(ideal, STABLE_POLY).as_dict()
    tri = MonomialIdeal.make(POLY, 3, [squarefree_poly(p, 3)
                                       for p in ((1, 2), (1, 3), (2, 3))])
    assert resolution_oracle(tri).as_dict() == \
        betti_stable(tri, SQUAREFREE).as_dict()


def test_resolution_oracle_two_disjoint_edges():
    ideal = MonomialIdeal.make(POLY, 4, [squarefree_poly((1, 2), 4),
                                         squarefree_poly((3, 4), 4)])
    # Koszul-type resolution: one first syzygy of total degree 4
    assert resolution_oracle(ideal).as_dict() == {(0, 2): 2, (1, 3): 1}


def test_resolution_oracle_caps_generators():
    too_big = MonomialIdeal.make(
        POLY, 14, [squarefree_poly((i, 14), 14) for i in range(1, 14)])
    with pytest.raises(SizeLimitError):
        resolution_oracle(too_big)


# -- the alpha map ------------------------------------------------------


def test_alpha_monomial():
    assert alpha_monomial(poly_monomial((2, 0, 0))) == squarefree_poly((1, 2), 3)
    assert alpha_monomial(poly_monomial((1, 1, 0, 0))) == \
        squarefree_poly((1, 3), 4)


def test_alpha_monomial_range_error():
    with pytest.raises(InvalidInputError):
        alpha_monomial(poly_monomial((0, 0, 2)))


def test_alpha_preserves_betti_numbers():
    ideal = P([(2, 0, 0, 0), (1, 1, 0, 0), (0, 3, 0, 0)], 4)
    image = alpha(ideal)
    assert image == MonomialIdeal.make(POLY, 4, [
        squarefree_poly((1, 2), 4), squarefree_poly((1, 3), 4),
        squarefree_poly((2, 3, 4), 4)])
    assert betti_stable(ideal, STABLE_POLY).as_dict() == \
        betti_stable(image, SQUAREFREE).as_dict()


def test_alpha_requires_stability():
    with pytest.raises(InvalidInputError):
        alpha(P([(0, 2, 0)], 3))


# -- the degree-3 distinguishing example --------------------------------


def _degree3_squarefree(extra):
    cubics = [(1, 2, 3), (1, 2, 4), (1, 2, 5), (1, 2, 6),
              (1, 3, 4), (1, 3, 5), (1, 3, 6),
              (2, 3, 4), (2, 3, 5), extra]
    quartics = list(combinations(range(1, 7), 4))
    return MonomialIdeal.make(POLY, 6, [squarefree_poly(s, 6)
                                        for s in cubics + quartics])


def test_degree3_betti_distinguishing_cell():
    lex_side = _degree3_squarefree((1, 4, 5))
    weight_side = _degree3_squarefree((2, 3, 6))
    b_lex = betti_stable(lex_side, SQUAREFREE)
    b_weight = betti_stable(weight_side, SQUAREFREE)
    assert b_lex.get(3, 3) == 2
    assert b_weight.get(3, 3) == 3


# -- positional statistics ---------------------------------------------


def test_index_profile():
    ideal = MonomialIdeal.make(EXT, 4, [ext_monomial(s, 4)
                                        for s in ([1, 2], [1, 3], [2, 3])])
    min_le, max_le = index_profile(ideal, 2)
    assert min_le == [2, 3, 3, 3]
    assert max_le == [0, 1, 3, 3]


def test_m_count():
    ideal = MonomialIdeal.make(EXT, 4, [ext_monomial(s, 4)
                                        for s in ([1, 2], [1, 3], [2, 3])])
    assert m_count(LEX, ideal, ext_monomial([1, 3], 4)) == 2
    assert m_count(LEX, ideal, ext_monomial([3, 4], 4)) == 3
    assert m_count(LEX, ideal, ext_monomial([1, 2], 4)) == 1


def test_edge_stat():
    edges = [(1, 2), (1, 4), (3, 4)]
    assert edge_stat(edges, "max", "ge", 4) == 2
    assert edge_stat(edges, "max", "le", 2) == 1
    assert edge_stat(edges, "min", "ge", 2) == 1
    assert edge_stat(edges, "min", "le", 1) == 2


# -- regularity ---------------------------------------------------------


def test_regularity():
    rei = MonomialIdeal.make(EXT, 4, [ext_monomial(s, 4)
                                      for s in ([1, 2], [1, 3], [3, 4])])
    assert regularity_from_gin(rei) == 2
    two_edges = MonomialIdeal.make(POLY, 4, [squarefree_poly((1, 2), 4),
                                             squarefree_poly((3, 4), 4)])
    assert regularity_from_gin(two_edges) == 3


# -- closed-form shifted-graph profiles ---------------------------------


@pytest.mark.parametrize("a,b", [(1, 1), (1, 3), (2, 2), (2, 3), (3, 3),
                                 (2, 4), (3, 4)])
def test_two_clique_profile_derivation_agrees(a, b):
    assert two_cliques_profile_from_h(a, b) == two_cliques_profile(a, b)


def test_h_values_small():
    # K3 u K2: strata h_1 = 3, h_2 = 1, rest 0
    assert h_values(2, 3) == [3, 1, 0, 0, 0]


@pytest.mark.parametrize("a,b", [(1, 2), (2, 2), (2, 3), (3, 3)])
def test_bipartite_profile_matches_engine(a, b):
    n = a + b
    edges = shifted_graph_edges(complete_bipartite(a, b), LEX, seed=0)
    got = [edge_stat(edges, "max", "ge", n + 1 - k) for k in range(1, n + 1)]
    assert got == bipartite_profile(a, b)


@pytest.mark.parametrize("a,b", [(1, 2), (2, 2), (2, 3), (3, 3)])
def test_two_cliques_profile_matches_engine(a, b):
    n = a + b
    edges = shifted_graph_edges(disjoint_cliques(a, b), REVLEX, seed=0)
    got = [edge_stat(edges, "min", "ge", n + 1 - k) for k in range(1, n + 1)]
    assert got == two_cliques_profile(a, b)


def test_closed_form_profiles_wrapper():
    bip, two = closed_form_profiles(2, 3)
    assert bip == bipartite_profile(2, 3)
    assert two == two_cliques_profile(2, 3)


# -- the lex/revlex complement identity ---------------------------------


@pytest.mark.parametrize("g", [path_graph(4), cycle_graph(5),
                               complete_bipartite(2, 3),
                               Graph.make(5, [(1, 2), (2, 3), (1, 3), (4, 5)])])
def test_lex_rev_complement_identity(g):
    assert lex_rev_complement_identity(g, seed=0)


# -- hyperplane rank oracle ---------------------------------------------


def test_hyperplane_rank_oracle_matches_engine():
    rng = np.random.default_rng(7)
    for trial in range(10):
        n = int(rng.integers(3, 7))
        ambient = all_monomials(EXT, n, 2)
        w = {m for m in ambient if rng.random() < 0.5}
        phi = CoordinateChange.random_dense(n, GFP, rng)
        for k in range(1, n + 1):
            oracle = hyperplane_rank_oracle(w, n, k, phi, sign=-1)
            engine = gin_profile_max_ge(REVLEX, w, EXT, n, k, seed=trial)
            assert oracle == engine
