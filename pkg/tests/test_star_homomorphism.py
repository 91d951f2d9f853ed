from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orientedline import (
    Coloring,
    Digraph,
    Graph,
    Orientation,
    StarConverseCounterexample,
    adjacency_matrix,
    charpoly_exact,
    check_lbh,
    check_onh,
    check_star_coloring,
    coloring_to_onih,
    complete_graph,
    cycle_graph,
    find_lbh,
    find_onh,
    find_star_coloring,
    is_lbh,
    is_onh,
    is_star_coloring,
    onih_to_coloring,
    path_graph,
    petersen_graph,
    poly_exact_divide,
    star_chromatic_number,
    symmetric_digraph,
    theorem7_check,
    theorem7_divisor,
    underlying_and_line_graph,
)
from orientedline.corpus import nonisomorphic_graphs
from orientedline.spectral_identities import formula_lstar, spectrum_handle
from orientedline.star_homomorphism import claw_witness


def brute_star_colorable(g, q):
    return any(is_star_coloring(Coloring(g, f, q)) for f in product(range(q), repeat=g.n))


def brute_lbh_exists(src, dst):
    return any(is_lbh(src, dst, psi) for psi in product(range(dst.n), repeat=src.n))


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, tuple(p for p, b in zip(pairs, mask) if b))


# -- star colorings -----------------------------------------------------------


def test_star_coloring_checker_examples():
    assert check_star_coloring(Coloring(complete_graph(4), (0, 1, 2, 3), 4)) is None
    bad = check_star_coloring(Coloring(path_graph(4), (1, 2, 1, 2), 3))
    assert bad.kind == "bicolored-path" and set(bad.vertices) == {0, 1, 2, 3}
    assert is_star_coloring(Coloring(path_graph(4), (0, 1, 2, 0), 3))
    improper = check_star_coloring(Coloring(path_graph(2), (0, 0), 1))
    assert improper.kind == "improper-edge"


def test_coloring_validates_range():
    with pytest.raises(ValueError):
        Coloring(path_graph(2), (0, 2), 2)
    with pytest.raises(ValueError):
        Coloring(path_graph(2), (0,), 2)


@pytest.mark.parametrize("g, expected", [(complete_graph(4), 4), (cycle_graph(5), 4), (path_graph(4), 3)])
def test_star_chromatic_number_examples(g, expected):
    c = star_chromatic_number(g, 6)
    assert c.q == expected and is_star_coloring(c)
    assert c.f[0] == 0 or g.degree(0) < max(g.degrees())
    assert not brute_star_colorable(g, expected - 1)


def test_star_chromatic_number_exceeds_qmax():
    assert star_chromatic_number(complete_graph(5), 4) is None


def test_star_search_matches_brute_force_on_all_small_graphs():
    for n in range(1, 6):
        for g in nonisomorphic_graphs(n):
            c = star_chromatic_number(g, n)
            assert c is not None and is_star_coloring(c)
            assert not brute_star_colorable(g, c.q - 1) if c.q > 1 else True


@given(graphs())
@settings(max_examples=30, deadline=None)
def test_star_search_agrees_with_brute_force(g):
    for q in range(1, 4):
        assert (find_star_coloring(g, q) is not None) == brute_star_colorable(g, q)


# -- LBH ------------------------------------------------------------------------


def test_lbh_examples():
    lstar, lg, proj = underlying_and_line_graph(complete_graph(4))
    assert check_lbh(lstar, lg, proj.psi) is None
    p = petersen_graph()
    assert is_lbh(p, p, list(range(10)))
    bad = check_lbh(complete_graph(2), Graph(1), [0, 0])
    assert bad.kind == "size-mismatch"
    bad = check_lbh(complete_graph(2), complete_graph(2), [0])
    assert bad.kind == "not-total"


def test_lbh_violation_kinds():
    c6, c3 = cycle_graph(6), cycle_graph(3)
    assert is_lbh(c6, c3, [0, 1, 2, 0, 1, 2])
    assert check_lbh(c6, c3, [0, 1, 0, 1, 2, 2]).kind in {"non-edge-image", "collision"}
    k4 = complete_graph(4)
    assert check_lbh(cycle_graph(4), complete_graph(3), [0, 1, 0, 2]) is not None
    assert check_lbh(k4, k4, [0, 1, 2, 2]).kind in {"non-edge-image", "collision"}


def test_find_lbh_examples():
    lstar, lg, _ = underlying_and_line_graph(complete_graph(4))
    psi = find_lbh(lstar, lg)
    assert psi is not None and is_lbh(lstar, lg, psi)
    assert find_lbh(complete_graph(4), complete_graph(3)) is None
    p = petersen_graph()
    assert is_lbh(p, p, find_lbh(p, p))


def test_find_lbh_is_exhaustive_on_small_pairs():
    small = [g for n in range(1, 5) for g in nonisomorphic_graphs(n)]
    for src in small:
        for dst in small:
            if dst.n > src.n:
                continue
            assert (find_lbh(src, dst) is not None) == brute_lbh_exists(src, dst)


def test_lbh_implies_charpoly_divisibility_small():
    for src in [cycle_graph(6), cycle_graph(8), complete_graph(4)]:
        for dst in [cycle_graph(3), cycle_graph(4), complete_graph(4), complete_graph(2)]:
            if find_lbh(src, dst) is not None:
                q = poly_exact_divide(charpoly_exact(adjacency_matrix(src)), charpoly_exact(adjacency_matrix(dst)))
                assert q


# -- out-neighbourhood homomorphisms ---------------------------------------------


def test_onh_examples():
    src = Digraph(2, ((0, 1),))
    dk2 = symmetric_digraph(complete_graph(2))
    assert is_onh(src, dk2, [0, 1], "injective")
    star = Digraph(3, ((0, 1), (0, 2)))
    bad = check_onh(star, symmetric_digraph(complete_graph(3)), [0, 1, 1], "injective")
    assert bad.kind == "collision"
    assert check_onh(src, dk2, [0, 0]).kind == "non-arc-image"
    with pytest.raises(ValueError):
        check_onh(src, dk2, [0, 1], "surjective")


@given(graphs(6), st.integers(0, 2**20), st.lists(st.integers(0, 3), min_size=6, max_size=6))
@settings(max_examples=60, deadline=None)
def test_bijective_implies_injective(g, bits, f):
    o = Orientation.from_bits(g, bits % (1 << g.m) if g.m else 0)
    dst = symmetric_digraph(complete_graph(4))
    psi = f[: g.n]
    if is_onh(o.digraph(), dst, psi, "bijective"):
        assert is_onh(o.digraph(), dst, psi, "injective")


def test_coloring_to_onih_examples():
    o, psi = coloring_to_onih(Coloring(complete_graph(2), (0, 1), 2))
    assert o.chosen == ((1, 0),) and psi == (0, 1)
    c = Coloring(path_graph(4), (0, 1, 2, 0), 3)
    o, psi = coloring_to_onih(c)
    assert is_onh(o.digraph(), symmetric_digraph(complete_graph(3)), psi)
    with pytest.raises(ValueError, match="not a star coloring"):
        coloring_to_onih(Coloring(path_graph(4), (1, 2, 1, 2), 3))


def test_coloring_to_onih_c5():
    c = star_chromatic_number(cycle_graph(5), 5)
    o, psi = coloring_to_onih(c)
    assert is_onh(o.digraph(), symmetric_digraph(complete_graph(c.q)), psi, "injective")
    assert onih_to_coloring(o, psi, c.q) == c


def test_round_trip_on_all_small_star_colorings():
    for n in range(1, 6):
        for g in nonisomorphic_graphs(n):
            for q in range(1, 4):
                for f in product(range(q), repeat=n):
                    c = Coloring(g, f, q)
                    if is_star_coloring(c):
                        o, psi = coloring_to_onih(c)
                        assert onih_to_coloring(o, psi, q) == c


def test_onih_to_coloring_surfaces_converse_counterexample():
    # directed path 0->1->2->3 colored 0,1,0,1 is an ONIH into D(K_2)
    g = path_graph(4)
    o = Orientation(g, ((0, 1), (1, 2), (2, 3)))
    assert is_onh(o.digraph(), symmetric_digraph(complete_graph(2)), [0, 1, 0, 1])
    with pytest.raises(StarConverseCounterexample) as info:
        onih_to_coloring(o, [0, 1, 0, 1], 2)
    assert info.value.violation.kind == "bicolored-path"


def test_onih_to_coloring_rejects_invalid_onih():
    g = path_graph(3)
    with pytest.raises(ValueError, match="not an ONIH"):
        onih_to_coloring(Orientation(g, ((1, 0), (1, 2))), [0, 1, 1], 2)


def test_find_onh():
    src = Orientation.auto(path_graph(4)).digraph()
    psi = find_onh(src, symmetric_digraph(complete_graph(2)))
    assert psi is not None and is_onh(src, symmetric_digraph(complete_graph(2)), psi)
    assert find_onh(symmetric_digraph(path_graph(3)), symmetric_digraph(complete_graph(2))) is None
    k3 = symmetric_digraph(complete_graph(3))
    assert is_onh(k3, k3, find_onh(k3, k3, "bijective"), "bijective")


# -- divisibility for K_{1,p+1}-free 2p-regular graphs ---------------------------


def test_divisor_degree_and_equality_with_lstar_formula():
    assert theorem7_divisor(2).degree == 1 + 2 + 3 + 3 + 3 == 12
    for p in range(2, 6):
        assert theorem7_divisor(p) == formula_lstar(spectrum_handle(complete_graph(p + 2)))
    with pytest.raises(ValueError):
        theorem7_divisor(1)


def test_theorem7_on_lstar_k4():
    lstar, _, _ = underlying_and_line_graph(complete_graph(4))
    r = theorem7_check(lstar, 2)
    assert r.hypotheses_hold
    assert r.divisible and r.quotient == 1
    assert is_star_coloring(r.star_colorable.witness)


def test_theorem7_rejects_c5():
    r = theorem7_check(cycle_graph(5), 2)
    assert not r.regular.holds and "not 4-regular" in r.regular.reason
    assert r.divisible is None
    forced = theorem7_check(cycle_graph(5), 2, force_divisibility=True)
    assert forced.divisible is False


def test_claw_witness():
    assert claw_witness(Graph(4, ((0, 1), (0, 2), (0, 3))), 3) == (0, (1, 2, 3))
    assert claw_witness(complete_graph(5), 2) is None
