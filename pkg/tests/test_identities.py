"""
WHY: To verify that the identity harness confirms the sound identities and pins down every printed error.
WHAT: Tests for the registry, point evaluation, grid verification, validity ranges, variant differences and the equivalence chain.
HOW: Evaluates identities against values derived by hand and from the reference table; follows Guard -> Do -> Verify.
"""

import pytest

from ktile.ktile_errors import (
    EvaluatorDisagreementError,
    InvalidArgumentError,
    NotApplicableError,
    UnknownIdentityError,
)
from ktile.ktile_identities import (
    CLASSIC,
    GENERALIZED,
    IdentityDescriptor,
    Variant,
    equivalence_chain,
    evaluate_identity,
    lookup,
    registry,
    validity_range,
    variant_difference,
    verify_grid,
)
from ktile.ktile_seqcore import SequenceCache

SOUND = ["I-3.1", "I-3.2", "I-3.3", "I-3.4", "I-3.5", "I-3.7", "I-3.8", "I-4.1", "I-3FN"]


def test_registry_contents():
    """Verify: Sixteen identities in report order, with both variants of the corrected ones."""
    assert [d.id for d in registry()] == [
        "I-3.1", "I-3.2", "I-3.3", "I-3.4", "I-3.5", "I-3.6", "I-3.7", "I-3.8",
        "I-4.1", "I-4.2p", "I-4.2c", "I-4.3p", "I-4.3c", "I-4.4p", "I-4.5p", "I-3FN",
    ]
    assert lookup("I-4.2c").variant is Variant.CORRECTED
    assert lookup("I-4.2p").variant is Variant.AS_PRINTED
    assert lookup("I-4.5p").conventions == (CLASSIC, GENERALIZED)


def test_lookup_unknown():
    """Guard: Unregistered id. Verify: UnknownIdentityError."""
    with pytest.raises(UnknownIdentityError):
        lookup("I-9.9")
    with pytest.raises(UnknownIdentityError):
        verify_grid(["I-3.1", "I-9.9"], [2], 10)


def test_sound_identities_hold():
    """Do: Verify the sound suite over k in 2..6, n <= 40. Verify: No counterexample."""
    report = verify_grid(SOUND, range(2, 7), 40, multiplier_limit=8)
    assert report.all_matched
    assert report.exit_code == 0
    assert all(s.passed > 0 for s in report.summaries if s.identity_id != "I-3.8")


def test_multiplier_identities_use_multiplier_range(monkeypatch):
    """Verify: nk-indexed identities iterate the multiplier, bounded by KTILE_MULTIPLIER_LIMIT."""
    monkeypatch.setenv("KTILE_MULTIPLIER_LIMIT", "3")
    report = verify_grid(["I-3.3"], [2], 10)
    assert report.grid.multiplier_limit == 3
    assert [(r.k, r.n) for r in report.records] == [(2, 2), (2, 3)]
    assert evaluate_identity(lookup("I-3.3"), 3, 3).lhs == 41


def test_lucas_recurrence_validity_range():
    """Verify: The Lucas recurrence holds at n = k and from 2k on, never in between."""
    d = lookup("I-3.6")
    for k in range(2, 7):
        assert validity_range(d, k, 40) == [k] + list(range(2 * k, 41))


def test_lucas_recurrence_exploration():
    """Do: Verify I-3.6 with exploration. Verify: Stated range passes, explored points fail except n = k."""
    report = verify_grid(["I-3.6"], range(2, 7), 40, explore=True)
    [summary] = report.summaries
    assert summary.failed == 0
    assert summary.explored_failed == sum(k - 1 for k in range(2, 7))
    assert summary.explored_holds == [(k, k) for k in range(2, 7)]
    assert report.exit_code == 0

    record = evaluate_identity(lookup("I-3.6"), 3, 4)
    assert record.exploratory
    assert (record.lhs, record.rhs) == (5, 6)


def test_printed_gray_count_identity_fails():
    """Verify: I-4.2p's first counterexample is k=2, n=4 with 8 against 5."""
    report = verify_grid(["I-4.2p"], [2], 10)
    assert report.exit_code == 1
    first = report.summaries[0].first_counterexample
    assert (first.k, first.n, first.lhs, first.rhs) == (2, 4, 8, 5)


def test_corrected_gray_count_identities_hold():
    """Verify: I-4.2c over k in 2..4 and I-4.3c up to n = 30 pass."""
    assert verify_grid(["I-4.2c"], range(2, 5), 30).exit_code == 0
    assert verify_grid(["I-4.3c"], [2], 30).exit_code == 0


def test_printed_k2_identity_fails_at_4():
    """Verify: I-4.3p gives 5 against F_4 = 8."""
    record = evaluate_identity(lookup("I-4.3p"), 2, 4)
    assert (record.lhs, record.rhs) == (8, 5)
    assert evaluate_identity(lookup("I-4.3c"), 2, 4).rhs == 8


def test_printed_lucas_gray_count_identity():
    """Verify: I-4.4p at k=2 matches at n=6 and misses at n=4, 5, 7."""
    d = lookup("I-4.4p")
    results = {n: evaluate_identity(d, 2, n) for n in (4, 5, 6, 7)}
    assert (results[4].lhs, results[4].rhs) == (7, 5)
    assert (results[5].lhs, results[5].rhs) == (11, 10)
    assert (results[6].lhs, results[6].rhs) == (18, 18)
    assert (results[7].lhs, results[7].rhs) == (29, 30)


def test_lucas_k2_identity_conventions():
    """Verify: Both Lucas readings of I-4.5p are evaluated and both fail at n=4."""
    d = lookup("I-4.5p")
    classic = evaluate_identity(d, 2, 4, convention=CLASSIC)
    generalized = evaluate_identity(d, 2, 4, convention=GENERALIZED)
    assert (classic.lhs, classic.rhs) == (7, 6)
    assert (generalized.lhs, generalized.rhs) == (7, 5)
    assert classic.label == "I-4.5p[classic]"

    report = verify_grid(["I-4.5p"], [2], 8)
    assert [s.label for s in report.summaries] == ["I-4.5p[classic]", "I-4.5p[generalized]"]
    only = verify_grid(["I-4.5p"], [2], 8, convention=GENERALIZED)
    assert [s.label for s in only.summaries] == ["I-4.5p[generalized]"]


def test_unknown_convention():
    """Guard: Convention the identity does not have. Verify: InvalidArgumentError."""
    with pytest.raises(InvalidArgumentError):
        evaluate_identity(lookup("I-4.5p"), 2, 5, convention="other")


def test_not_applicable():
    """Guard: Point outside every range. Verify: NotApplicableError."""
    with pytest.raises(NotApplicableError):
        evaluate_identity(lookup("I-3.1"), 2, 3)
    with pytest.raises(NotApplicableError):
        evaluate_identity(lookup("I-4.3p"), 3, 10)


def test_evaluator_disagreement():
    """Guard: Right-hand sides that differ. Verify: EvaluatorDisagreementError."""
    broken = IdentityDescriptor(
        id="X",
        argument="",
        statement="",
        variant=Variant.AS_PRINTED,
        applicable=lambda k, n: True,
        lhs=lambda k, n, c, _: 1,
        rhs=lambda k, n, c, _: 1,
        rhs_check=lambda k, n, _: 2,
    )
    with pytest.raises(EvaluatorDisagreementError):
        evaluate_identity(broken, 2, 2)


def test_variant_difference():
    """Verify: Corrected minus printed is n+1-k for I-4.2 and I-4.3."""
    for k in range(2, 5):
        for n in range(2 * k, 21):
            assert variant_difference("I-4.2", k, n) == n + 1 - k
    for n in range(4, 21):
        assert variant_difference("I-4.3", 2, n) == n - 1


def test_equivalence_chain():
    """Verify: The Lucas tail identity and the Fibonacci tail identity differ from their bases identically."""
    cache = SequenceCache()
    for k in range(2, 6):
        for n in range(2 * k, 31):
            assert equivalence_chain(k, n, cache)
    with pytest.raises(NotApplicableError):
        equivalence_chain(3, 5)


def test_k2_specialisations():
    """Verify: At k=2 the Fibonacci identities read as the classical ones."""
    # F_n = F_{n-1} + F_{n-2} through I-3.1 at n+1
    assert evaluate_identity(lookup("I-3.1"), 2, 7).lhs == 21
    # sum_{i=0}^{n-2} F_i = F_n - 2
    record = evaluate_identity(lookup("I-3.2"), 2, 6)
    assert record.lhs - 2 == record.rhs - 2 == 19
    # 1 + sum F_{2i-1} = F_{2n}
    assert evaluate_identity(lookup("I-3.3"), 2, 5).rhs == 144


def test_grid_is_deterministic_across_workers():
    """Do: Run the full registry with one and four workers. Verify: Identical reports."""
    single = verify_grid(None, range(2, 5), 20, cache=SequenceCache(), workers=1, explore=True)
    pooled = verify_grid(None, range(2, 5), 20, cache=SequenceCache(), workers=4, explore=True)
    assert single.to_dict() == pooled.to_dict()


def test_warm_cache_matches_cold():
    """Do: Reuse a warm cache. Verify: Same report as a cold run."""
    warm = SequenceCache()
    verify_grid(None, range(2, 5), 25, cache=warm)
    assert verify_grid(None, range(2, 5), 25, cache=warm).to_dict() == \
        verify_grid(None, range(2, 5), 25, cache=SequenceCache()).to_dict()


@pytest.mark.parametrize("k_range,n_limit", [([], 10), ([1, 2], 10), ([2], -1)])
def test_grid_guards(k_range, n_limit):
    """Guard: Empty or invalid grid. Verify: InvalidArgumentError."""
    with pytest.raises(InvalidArgumentError):
        verify_grid(None, k_range, n_limit)


def test_identity_without_grid_points_is_reported():
    """Guard: Selected identities with no applicable point. Verify: Empty summaries, not dropped."""
    report = verify_grid(["I-4.3p"], [3], 20)
    assert report.records == []
    [summary] = report.summaries
    assert (summary.label, summary.passed, summary.failed) == ("I-4.3p", 0, 0)
    assert not summary.evaluated
    assert report.to_dict()["summary"][0]["evaluated"] is False

    report = verify_grid(["I-3.8", "I-3.1"], [5, 6], 20)
    assert [(s.label, s.evaluated) for s in report.summaries] == [("I-3.1", True), ("I-3.8", False)]
