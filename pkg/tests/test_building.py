from math import factorial

import pytest

from liepar.building import (
    ChamberSystem,
    IncidenceSystem,
    apartment_model_A,
    apartment_model_B,
    chambers_from_incidence,
    coresidues,
    delta_parabolic,
    ec_reconstruction_isomorphic,
    flags,
    full_flags,
    is_residually_connected,
    labelled_isomorphism,
    lie_apartment,
    to_dot,
    w_distance,
)
from liepar.catalog import (
    gl,
    incidence_model_admissible,
    incidence_model_subsets,
    so,
    standard_borel,
    standard_minimal_levi,
    standard_simple_system,
)
from liepar.errors import DomainError
from liepar.parabolic import opposite


def test_model_A_counts():
    for n in (1, 2, 3):
        thin = apartment_model_A(n)
        assert len(thin.chambers) == factorial(n + 1)
        assert sorted(thin.labels()) == list(range(n))
        group, _ = thin.structure_group()
        assert len(group) == factorial(n + 1)


def test_model_B_counts():
    for n in (1, 2, 3):
        thin = apartment_model_B(n)
        assert len(thin.chambers) == (1 << n) * factorial(n)
        group, _ = thin.structure_group()
        assert len(group) == (1 << n) * factorial(n)


def test_model_A2_distances():
    thin = apartment_model_A(2)
    wd = w_distance(thin)
    e = (0, 1, 2)
    assert wd.delta(e, e) == ()
    assert wd.delta(e, (1, 0, 2)) == (0,)
    # the longest element has length 3 and the word is shortlex-minimal
    longest = (2, 1, 0)
    assert wd.delta(e, longest) == (0, 1, 0)
    lengths = sorted(len(wd.delta(e, c)) for c in thin.chambers)
    assert lengths == [0, 1, 1, 2, 2, 3]


def test_delta_inverse_law():
    thin = apartment_model_B(2)
    wd = w_distance(thin)
    e = (1, 2)
    for c in thin.chambers:
        w = wd.delta(e, c)
        back = wd.delta(c, e)
        assert len(w) == len(back)
        assert thin.walk(e, w) == c and thin.walk(c, back) == e


def test_lie_apartments_match_models():
    cases = [
        (gl(2), apartment_model_A(1)),
        (gl(3), apartment_model_A(2)),
        (so(3, 2), apartment_model_B(2)),
    ]
    for g, model in cases:
        _, rd = standard_minimal_levi(g)
        ap = lie_apartment(g, rd)
        assert labelled_isomorphism(ap.thin, model) is not None
        # chambers round-trip through parabolics
        c = next(iter(ap.thin.chambers))
        assert ap.chamber_of(ap.parabolic(c)) == c


def test_delta_parabolic_gl3():
    g = gl(3)
    pb = standard_borel(g)
    ss = standard_simple_system(g)
    w = delta_parabolic(pb, opposite(pb), ss)
    assert len(w) == 3
    assert delta_parabolic(pb, pb, ss) == ()


def test_delta_parabolic_so32():
    g = so(3, 2)
    pb = standard_borel(g)
    ss = standard_simple_system(g)
    assert len(delta_parabolic(pb, opposite(pb), ss)) == 4


def triangle():
    # points 1..3, lines 4..6; line i+3 omits point i
    types = {1: "p", 2: "p", 3: "p", 4: "l", 5: "l", 6: "l"}
    edges = [
        (1, 5), (1, 6), (2, 4), (2, 6), (3, 4), (3, 5),
    ]
    return IncidenceSystem(types, edges)


def test_incidence_basics():
    gamma = triangle()
    assert gamma.type_set() == {"p", "l"}
    assert sorted(gamma.elements_of_type("p")) == [1, 2, 3]
    assert gamma.incident(1, 5) and not gamma.incident(1, 4)
    assert sorted(gamma.neighbors(1)) == [5, 6]


def test_incidence_rejects_same_type_edge():
    with pytest.raises(DomainError):
        IncidenceSystem({1: "p", 2: "p"}, [(1, 2)])


def test_flags_and_chambers():
    gamma = triangle()
    assert len(flags(gamma, {"p"})) == 3
    ff = full_flags(gamma)
    assert len(ff) == 6  # 3 points x 2 lines each
    cs = chambers_from_incidence(gamma)
    assert len(cs.chambers) == 6
    assert cs.is_connected()
    for label in cs.labels():
        for part in cs.panels[label]:
            assert len(part) == 2


def test_coresidues_recover_triangle():
    gamma = triangle()
    cs = chambers_from_incidence(gamma)
    back = coresidues(cs)
    assert len(back.elements()) == len(gamma.elements())
    assert is_residually_connected(gamma)
    assert ec_reconstruction_isomorphic(gamma)


def test_subset_models():
    gamma = incidence_model_subsets(2)
    # proper nonempty subsets of a 3-set
    assert len(gamma.elements()) == 6
    assert ec_reconstruction_isomorphic(gamma)
    adm = incidence_model_admissible(2)
    assert len(adm.elements()) == 8
    assert len(adm.edges) == 8


def test_subset_model_edges_n2():
    gamma = incidence_model_subsets(2)
    assert len(gamma.edges) == 6


def test_chamber_system_validation():
    with pytest.raises(DomainError):
        ChamberSystem(["a", "b"], {0: [frozenset(["a"])]})


def test_to_dot_runs():
    out = to_dot(triangle())
    assert out.startswith("graph")
    assert '"1" -- "5";' in out and 'type="l"' in out
