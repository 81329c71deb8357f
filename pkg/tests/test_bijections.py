import itertools
import math

import pytest
from hypothesis import given, strategies as st

from invseq.bijections import (
    GE_GT,
    GT_GE,
    SWAP_VARIANTS,
    Permutation,
    from_composition,
    from_dyck_path,
    gamma,
    gamma_inverse,
    path_dist,
    phi_last_preserving,
    phi_last_preserving_inverse,
    swap_occurrences,
    swap_occurrences_inverse,
    theta,
    theta_inverse,
    to_composition,
    to_dyck_path,
    upsilon,
    upsilon_inverse,
    varphi,
    varphi_inverse,
    varphi_multi,
    varphi_multi_inverse,
    varphi_multi_prime,
    varphi_multi_prime_inverse,
    varphi_prime,
    varphi_prime_inverse,
)
from invseq.core import (
    RelationPattern,
    TriplePattern,
    avoids,
    avoids_triple,
    dist,
    occurrence_set,
    parse_sequence as E,
)
from invseq.enumeration import enumerate_all, iter_avoiders, iter_avoiders_triple
from invseq.errors import PreconditionError
from invseq.paths import marked_dyck_paths, slanted_paths, unmarked_tail_paths
from invseq.permutations import involutions, permutations

P = RelationPattern.parse


def test_permutation_type():
    assert str(Permutation.parse("42513")) == "42513"
    with pytest.raises(ValueError):
        Permutation((1, 1))


def test_theta_examples():
    assert theta(Permutation.parse("42513")) == E("01032")
    assert theta_inverse(E("01032")) == (4, 2, 5, 1, 3)
    assert theta_inverse((0,) * 5) == (1, 2, 3, 4, 5)
    assert theta((5, 4, 3, 2, 1)) == (0, 1, 2, 3, 4)
    # the insertion inverse of 00114 is not the involution 42513
    assert theta_inverse(E("00114")) == (2, 5, 3, 4, 1)


@pytest.mark.parametrize("n", range(8))
def test_theta_is_a_bijection(n):
    images = {theta(p) for p in permutations(n)}
    assert images == set(enumerate_all(n))
    assert all(theta_inverse(theta(p)) == p for p in permutations(n))


def test_swap_examples():
    assert swap_occurrences(E("0110"), {2}, "EQGT_to_GTEQ") == E("0100")
    assert swap_occurrences(E("0110"), {2}, "GEGT_to_GTGE") == E("0100")
    for variant in SWAP_VARIANTS:
        assert swap_occurrences(E("0110"), set(), variant) == E("0110")
    with pytest.raises(PreconditionError):
        swap_occurrences(E("0110"), {1}, "EQGT_to_GTEQ")
    with pytest.raises(ValueError):
        swap_occurrences(E("0110"), {2}, "nope")


@pytest.mark.parametrize("variant", sorted(SWAP_VARIANTS))
def test_swap_is_a_bijection_for_every_set(variant):
    src, tgt = SWAP_VARIANTS[variant]
    for n in range(3, 7):
        seqs = list(enumerate_all(n))
        for r in range(n - 1):
            for S in itertools.combinations(range(1, n - 1), r):
                S = set(S)
                dom = [e for e in seqs if S <= occurrence_set(e, src)]
                img = {swap_occurrences(e, S, variant) for e in dom}
                assert img == {e for e in seqs if S <= occurrence_set(e, tgt)}
                for e in img:
                    assert swap_occurrences(swap_occurrences_inverse(e, S, variant), S, variant) == e


def test_phi_examples():
    assert phi_last_preserving(E("0100")) == E("0110")
    assert phi_last_preserving(tuple(range(6))) == tuple(range(6))
    assert phi_last_preserving((0,) * 6) == (0,) * 6
    with pytest.raises(PreconditionError):
        phi_last_preserving(E("0210"))


@pytest.mark.parametrize("n", range(1, 9))
def test_phi_preserves_last_entry_and_is_bijective(n):
    dom = list(iter_avoiders(GE_GT, n))
    img = [phi_last_preserving(e) for e in dom]
    assert sorted(img) == list(iter_avoiders(GT_GE, n))
    assert all(a[-1] == b[-1] for a, b in zip(dom, img))
    assert all(phi_last_preserving_inverse(b) == a for a, b in zip(dom, img))


def test_upsilon_examples():
    assert upsilon(E("00114")) == (4, 2, 5, 1, 3)
    assert upsilon(E("001")) == (3, 2, 1)
    assert upsilon((0,)) == (1,)
    with pytest.raises(PreconditionError):
        upsilon(E("012"))
    with pytest.raises(PreconditionError):
        upsilon_inverse((2, 3, 1))


@pytest.mark.parametrize("n", range(1, 9))
def test_upsilon_onto_involutions(n):
    dom = list(iter_avoiders(P("!=,!="), n))
    img = {upsilon(e) for e in dom}
    assert img == set(involutions(n))
    assert len(img) == len(dom)
    assert all(upsilon_inverse(upsilon(e)) == e for e in dom)


def test_gamma_examples():
    assert gamma(E("012322")) == {3, 2}
    assert gamma(E("012344")) == {4}
    assert gamma(tuple(range(5))) == set()
    assert gamma_inverse({3, 2}, 6) == E("012322")
    with pytest.raises(PreconditionError):
        gamma_inverse({1, 2, 3}, 6)


@pytest.mark.parametrize("n", range(1, 10))
def test_gamma_onto_small_subsets(n):
    dom = list(iter_avoiders(P(">=,!="), n))
    img = {gamma(e) for e in dom}
    expected = {frozenset(c) for r in range(3) for c in itertools.combinations(range(n - 1), r)}
    assert img == expected and len(dom) == len(img)
    assert all(gamma_inverse(gamma(e), n) == e for e in dom)


def test_composition_examples():
    assert to_composition(E("012210")) == (2, 2, 2)
    assert to_composition(E("012310")) == (2, 2, 1, 1)
    assert to_composition(tuple(range(4))) == (1, 1, 1, 1)
    assert from_composition((2, 2, 1, 1)) == E("012310")
    with pytest.raises(PreconditionError):
        from_composition((3,))


def _compositions_12(n):
    if n == 0:
        yield ()
        return
    for first in (1, 2):
        if first <= n:
            for rest in _compositions_12(n - first):
                yield (first,) + rest


@pytest.mark.parametrize("n", range(1, 10))
def test_composition_bijection(n):
    dom = list(iter_avoiders(P(">=,<="), n))
    img = {to_composition(e) for e in dom}
    assert img == set(_compositions_12(n)) and len(img) == len(dom)
    assert all(from_composition(to_composition(e)) == e for e in dom)


def test_dyck_examples():
    # one east step at height e_i per entry, north steps in between
    assert str(to_dyck_path(E("001123"))) == "EENEENENENNN"
    assert str(to_dyck_path((0,) * 4)) == "EEEENNNN"
    assert str(to_dyck_path(tuple(range(4)))) == "ENENENEN"
    assert from_dyck_path("EENEENENENNN") == E("001123")
    with pytest.raises(PreconditionError):
        from_dyck_path("EEN*N")


@pytest.mark.parametrize("n", range(1, 9))
def test_dyck_bijection(n):
    dom = list(iter_avoiders(P("<=,>"), n))
    img = {tuple(to_dyck_path(e)) for e in dom}
    assert img == {p for p in marked_dyck_paths(n) if 2 not in p}
    assert len(img) == len(dom) == math.comb(2 * n, n) // (n + 1)
    assert all(from_dyck_path(to_dyck_path(e)) == e for e in dom)


def test_varphi_examples():
    assert str(varphi(E("011344421"))) == "ENEEN*N*ENEEENNN"
    assert str(varphi((0,) * 4)) == "EEEENNNN"
    assert str(varphi(E("010"))) == "EN*EN"
    assert str(varphi_prime(E("011344421"))) == "ENEEDDENEE"
    assert str(varphi_prime((0,) * 4)) == "EEE"
    assert str(varphi_prime(E("010"))) == "ED"
    assert str(varphi_multi(E("011345442111"))) == "ENEEN*4N*2ENEN*3EN"
    assert str(varphi_multi(E("011344421"))) == "ENEEN*2N*2ENEEENNN"
    assert str(varphi_multi_prime(E("011345442111"))) == "ENEED4D2ENED3"
    assert str(varphi_multi_prime((0,) * 4)) == "EEE"
    assert str(varphi_multi_prime(E("010"))) == "ED2"
    assert varphi_inverse("ENEEN*N*ENEEENNN") == E("011344421")
    assert varphi_multi_prime_inverse("ENEED4D2ENED3") == E("011345442111")


def test_varphi_preconditions():
    with pytest.raises(PreconditionError):
        varphi(E("0101"))
    with pytest.raises(PreconditionError):
        varphi_prime(())
    with pytest.raises(PreconditionError):
        varphi_inverse("EEN*N")
    with pytest.raises(ValueError):
        varphi_inverse("EEN*3N")


def test_path_dist_examples():
    assert path_dist("ENEEN*N*ENEEENNN") == 5
    assert path_dist("EEENNN") == 1
    assert path_dist("ENENEN") == 3


@pytest.mark.parametrize("n", range(1, 9))
def test_path_bijections(n):
    gtle = TriplePattern.parse(">,<=,-")
    gtlt = TriplePattern.parse(">,<,-")
    dom = list(iter_avoiders_triple(gtle, n))
    dom_multi = list(iter_avoiders_triple(gtlt, n))
    cases = [
        (dom, varphi, varphi_inverse, set(unmarked_tail_paths(n))),
        (dom, varphi_prime, varphi_prime_inverse, set(slanted_paths(n - 1))),
        (dom_multi, varphi_multi, varphi_multi_inverse, set(unmarked_tail_paths(n, None))),
        (dom_multi, varphi_multi_prime, varphi_multi_prime_inverse, set(slanted_paths(n - 1, None))),
    ]
    for d, fwd, inv, family in cases:
        img = [fwd(e) for e in d]
        assert {tuple(p) for p in img} == family and len(family) == len(d)
        assert all(inv(p) == e for p, e in zip(img, d))
    assert all(path_dist(varphi(e)) == dist(e) for e in dom)
    assert all(path_dist(varphi_multi(e)) == dist(e) for e in dom_multi)


@st.composite
def inversion_sequences(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    return tuple(draw(st.integers(0, i)) for i in range(n))


@given(inversion_sequences())
def test_theta_round_trip_property(e):
    assert theta(theta_inverse(e)) == e


@given(inversion_sequences())
def test_varphi_round_trip_property(e):
    t = TriplePattern.parse(">,<,-")
    if avoids_triple(e, t):
        assert varphi_multi_inverse(varphi_multi(e)) == e
        assert varphi_multi_prime_inverse(varphi_multi_prime(e)) == e
    else:
        with pytest.raises(PreconditionError):
            varphi_multi(e)


@given(inversion_sequences())
def test_phi_round_trip_property(e):
    if avoids(e, GE_GT):
        assert phi_last_preserving_inverse(phi_last_preserving(e)) == e
