import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from multlab.blockseq import generate_block_sequence, subset_sum
from multlab.multfunc import MultiplicativeFunction
from multlab.witness import (
    DIRECT_SEARCH,
    PROOF_PIPELINE,
    IPWitness,
    fs_closure,
    fs_multiplicities,
    ip_witness_direct,
    ip_witness_from_proof,
    verify_witness,
    witness_from_dict,
    witness_to_dict,
)

from oracles import brute_force_family, powerset_sums


def liouville_prefix(limit=31):
    return MultiplicativeFunction.sieve_bounded(2, {}, limit=limit, default_class=1)


def test_fs_closure_basic():
    assert fs_closure((9, 15)) == [9, 15, 24]
    assert fs_closure((5,)) == [5]
    with pytest.raises(ValueError):
        fs_closure(())


def test_fs_closure_deduplicates_collisions():
    assert fs_closure((1, 2, 3)) == [1, 2, 3, 4, 5, 6]
    counts = fs_multiplicities((1, 2, 3))
    assert counts[3] == 2  # 3 alone and 1 + 2


@given(st.lists(st.integers(1, 50), min_size=1, max_size=8, unique=True))
def test_fs_closure_matches_powerset_oracle(gens):
    gens = tuple(sorted(gens))
    assert fs_closure(gens) == sorted(set(powerset_sums(gens)))
    assert sum(fs_multiplicities(gens).values()) == 2 ** len(gens) - 1


def test_witness_validation():
    f = liouville_prefix()
    with pytest.raises(ValueError):
        IPWitness(f, 1, (), DIRECT_SEARCH)
    with pytest.raises(ValueError):
        IPWitness(f, 1, (15, 9), DIRECT_SEARCH)
    with pytest.raises(ValueError):
        IPWitness(f, 0, (9,), DIRECT_SEARCH)
    with pytest.raises(ValueError):
        IPWitness(f, 1, (9,), "folklore")


def test_direct_witness_on_omega_parity_prefix():
    w = ip_witness_direct(liouville_prefix(), 2, 30)
    assert w.generators == (9, 15)
    assert w.b1 == 1
    assert w.provenance == DIRECT_SEARCH
    assert verify_witness(w)
    assert fs_closure(w.generators) == [9, 15, 24]


def test_direct_witness_is_lex_least():
    # {9, 14} fails because 9 + 14 = 23 is prime, hence class 1
    f = liouville_prefix()
    w = ip_witness_direct(f, 2, 30)
    assert w.generators < (9, 24)
    assert ip_witness_direct(f, 3, 30) is None


def test_direct_witness_absent_when_no_closed_family_exists():
    # kernel pairs below 14 are {9, 14}, but 9 + 14 = 23 is prime
    f = liouville_prefix()
    assert ip_witness_direct(f, 2, 14) is None
    # and the mod-3 function has no kernel pair at all before 6
    from multlab.arith import build_sieve

    primes = build_sieve(7).primes()
    g = MultiplicativeFunction.sieve_bounded(
        2, {p: 0 if p % 3 == 1 else 1 for p in primes}, limit=7
    )
    assert ip_witness_direct(g, 1, 5) is None


def test_invalid_witness_rejected_by_verifier():
    f = liouville_prefix()
    bogus = IPWitness(f, 1, (9, 14), DIRECT_SEARCH)
    assert not verify_witness(bogus)


def test_pipeline_witness_trivial_modulus():
    f = MultiplicativeFunction.finite_support(1, {})
    w = ip_witness_from_proof(f, 3, 3)
    assert w.blocks == ((1,), (2,), (3,))
    assert w.b1 == 1
    assert w.generators == (2, 144)
    assert w.provenance == PROOF_PIPELINE
    assert verify_witness(w)


def test_pipeline_witness_dyadic_valuation_parity():
    f = MultiplicativeFunction.finite_support(2, {2: 1})
    w = ip_witness_from_proof(f, 2, 3)
    assert w.blocks == ((1,), (3,))
    assert w.generators == (144,)
    assert verify_witness(w)


def test_pipeline_quotients_and_classes_recheck():
    f = MultiplicativeFunction.finite_support(2, {2: 1})
    w = ip_witness_from_proof(f, 2, 4)
    seq = generate_block_sequence(4)
    b1 = subset_sum(seq, w.blocks[0])
    assert w.b1 == b1
    base = f.evaluate(b1)
    for block, g in zip(w.blocks[1:], w.generators):
        b = subset_sum(seq, block)
        assert b % b1 == 0
        assert b // b1 == g
        assert f.evaluate(b) == base


def test_pipeline_rejects_wrong_inputs():
    f = liouville_prefix()
    with pytest.raises(ValueError, match="finite-support"):
        ip_witness_from_proof(f, 2, 3)
    g = MultiplicativeFunction.finite_support(2, {})
    with pytest.raises(ValueError, match="m >= 2"):
        ip_witness_from_proof(g, 1, 3)
    with pytest.raises(ValueError):
        ip_witness_from_proof(g, 2, 0)


def test_pipeline_none_when_prefix_too_short():
    f = MultiplicativeFunction.finite_support(3, {2: 1, 3: 2, 5: 1})
    assert ip_witness_from_proof(f, 5, 2) is None


@settings(max_examples=40)
@given(st.integers(1, 4), st.data())
def test_pipeline_sound_and_complete_on_small_prefixes(k, data):
    assignment = {
        p: data.draw(st.integers(0, k - 1), label=f"class of {p}")
        for p in (2, 3, 5, 7)
    }
    f = MultiplicativeFunction.finite_support(k, assignment)
    w = ip_witness_from_proof(f, 2, 4)
    seq = generate_block_sequence(4)
    oracle = brute_force_family(
        lambda blk: 1 + f.evaluate(subset_sum(seq, blk)), 4, 2
    )
    if w is None:
        assert oracle is None
    else:
        assert w.blocks == oracle
        assert verify_witness(w)


def test_witness_dict_round_trip():
    f = MultiplicativeFunction.finite_support(2, {2: 1})
    w = ip_witness_from_proof(f, 2, 3)
    doc = witness_to_dict(w)
    assert doc["b1"] == "1"
    assert doc["generators"] == ["144"]
    assert doc["blocks"] == [[1], [3]]
    back = witness_from_dict(doc)
    assert back == w
    assert witness_to_dict(back) == doc


def test_witness_direct_dict_round_trip_omits_blocks():
    w = ip_witness_direct(liouville_prefix(), 2, 30)
    doc = witness_to_dict(w)
    assert "blocks" not in doc
    assert witness_from_dict(doc) == w


def test_witness_from_dict_diagnostics():
    f = MultiplicativeFunction.finite_support(2, {2: 1})
    doc = witness_to_dict(ip_witness_from_proof(f, 2, 3))
    bad = dict(doc, k=3)
    with pytest.raises(ValueError, match="'k'"):
        witness_from_dict(bad)
    bad = dict(doc, provenance="guess")
    with pytest.raises(ValueError, match="provenance"):
        witness_from_dict(bad)
    bad = dict(doc, generators=[])
    with pytest.raises(ValueError, match="generators"):
        witness_from_dict(bad)
    bad = dict(doc, b1="12x")
    with pytest.raises(ValueError, match="b1"):
        witness_from_dict(bad)
