import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from multlab.arith import build_sieve
from multlab.hildebrand import (
    FOUND,
    SAT,
    UNKNOWN,
    UNSAT,
    AvoidanceCertificate,
    SearchOptions,
    avoidance_search,
    certificate_from_dict,
    certificate_to_dict,
    hildebrand_constant,
    verify_certificate,
)

from oracles import brute_force_avoidance

DET = SearchOptions(deterministic=True)


def test_forcing_constant_for_two_classes():
    res = hildebrand_constant(2, 20, options=DET)
    assert res.status == FOUND
    assert res.c == 9
    assert res.certificate_for == 8
    assert res.certificate.assignment == {2: 1, 3: 1, 5: 1, 7: 1}
    assert verify_certificate(res.certificate)


def test_trivial_modulus_forces_immediately():
    res = hildebrand_constant(1, 5, options=DET)
    assert res.status == FOUND
    assert res.c == 1
    assert res.certificate is None
    assert res.certificate_for == 0


def test_avoidance_matches_brute_force_for_two_classes():
    for B in range(1, 11):
        sat, least = brute_force_avoidance(2, 2, B)
        out = avoidance_search(2, 2, B, DET)
        assert (out.status == SAT) == sat
        if sat:
            assert out.certificate.assignment == least
            assert verify_certificate(out.certificate)


def test_avoidance_matches_brute_force_for_three_classes():
    for B in range(1, 9):
        sat, least = brute_force_avoidance(3, 2, B)
        out = avoidance_search(3, 2, B, DET)
        assert (out.status == SAT) == sat
        if sat:
            assert out.certificate.assignment == least


def test_triple_runs_avoidable_far_beyond_pair_bound():
    out = avoidance_search(2, 3, 50, DET)
    assert out.status == SAT
    assert verify_certificate(out.certificate)


def test_constant_gives_up_when_all_bounds_satisfiable():
    res = hildebrand_constant(2, 6, options=DET)
    assert res.status == UNKNOWN
    assert res.reason == "sat-at-bmax"
    assert res.certificate_for == 6
    assert verify_certificate(res.certificate)


def test_symmetry_reduction_preserves_lex_least_answers():
    red = SearchOptions(deterministic=True, symmetry_reduction=True)
    for k in (2, 3, 4):
        for B in range(1, 8):
            full = avoidance_search(k, 2, B, DET)
            reduced = avoidance_search(k, 2, B, red)
            assert full.status == reduced.status
            if full.status == SAT:
                assert full.certificate.assignment == reduced.certificate.assignment


def test_threaded_search_agrees_on_status():
    opts = SearchOptions(threads=4)
    for B in (4, 8, 9):
        seq = avoidance_search(2, 2, B, DET)
        par = avoidance_search(2, 2, B, opts)
        assert par.status == seq.status
        if par.status == SAT:
            assert verify_certificate(par.certificate)


def test_node_budget_yields_unknown():
    out = avoidance_search(2, 2, 8, SearchOptions(deterministic=True, node_budget=2))
    assert out.status == UNKNOWN
    assert out.reason == "node-budget"
    assert out.certificate is None
    res = hildebrand_constant(2, 20, options=SearchOptions(node_budget=3))
    assert res.status == UNKNOWN
    assert res.reason == "node-budget"


def test_stats_are_populated():
    out = avoidance_search(2, 2, 8, DET)
    assert out.stats.nodes > 0
    assert out.stats.depth_reached == 4
    assert out.stats.wall_time >= 0.0


def test_input_validation():
    with pytest.raises(ValueError):
        avoidance_search(0, 2, 5)
    with pytest.raises(ValueError):
        avoidance_search(2, 1, 5)
    with pytest.raises(ValueError):
        avoidance_search(2, 2, 0)
    with pytest.raises(ValueError):
        hildebrand_constant(2, 0)
    with pytest.raises(ValueError):
        SearchOptions(threads=0)
    with pytest.raises(ValueError):
        SearchOptions(node_budget=0)


def test_certificate_requires_complete_assignment():
    with pytest.raises(ValueError, match="misses"):
        AvoidanceCertificate(2, 2, 8, {2: 1, 3: 1, 5: 1})
    with pytest.raises(ValueError, match="not primes"):
        AvoidanceCertificate(2, 2, 8, {2: 1, 3: 1, 5: 1, 7: 1, 11: 1})
    with pytest.raises(ValueError, match="outside"):
        AvoidanceCertificate(2, 2, 8, {2: 1, 3: 1, 5: 1, 7: 2})


def test_certificate_dict_round_trip():
    cert = avoidance_search(2, 2, 8, DET).certificate
    doc = certificate_to_dict(cert)
    assert certificate_from_dict(doc) == cert
    with pytest.raises(ValueError, match="'k'"):
        certificate_from_dict({"k": None, "r": 2, "B": 8, "assignment": []})
    with pytest.raises(ValueError, match="repeats"):
        certificate_from_dict(
            {"k": 2, "r": 2, "B": 2, "assignment": [[2, 1], [2, 1], [3, 1]]}
        )


def test_known_triple_avoider_verifies_at_scale():
    primes = build_sieve(1002).primes()
    cert = AvoidanceCertificate(
        2, 3, 1000, {p: 0 if p % 3 == 1 else 1 for p in primes}
    )
    assert verify_certificate(cert)


def test_invalid_certificate_detected():
    # all primes in the kernel: every window is a kernel run
    primes = build_sieve(9).primes()
    cert = AvoidanceCertificate(2, 2, 8, {p: 0 for p in primes})
    assert not verify_certificate(cert)


@settings(max_examples=25)
@given(st.integers(1, 3), st.integers(2, 3), st.integers(1, 8))
def test_search_decision_matches_brute_force(k, r, B):
    sat, least = brute_force_avoidance(k, r, B)
    out = avoidance_search(k, r, B, DET)
    assert (out.status == SAT) == sat
    if sat:
        assert out.certificate.assignment == least
