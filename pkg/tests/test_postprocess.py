import pytest

from helpers import reference_circuit, reference_mapping
from quditlift.errors import MappingError, SupportViolationError
from quditlift.mapping import Mapping
from quditlift.postprocess import (
    decode_counts,
    pullback_distribution,
    total_variation_distance,
    verify_consistency,
)
from quditlift.simulator import Counts, exact_distribution, run, sample
from quditlift.transpiler import transpile


def test_decode_counts_example():
    counts = Counts((4, 4, 4, 4), {"3111": 10}, 10, 7)
    decoded = decode_counts(counts, reference_mapping())
    assert decoded.counts == {"11111": 10}
    assert decoded.dims == (2,) * 5
    assert decoded.shots == 10
    assert decoded.seed == 7
    assert decoded.generator == counts.generator


def test_decode_counts_collects_all_violations():
    counts = Counts((4, 4, 4, 4), {"0200": 1, "3111": 3, "0030": 2}, 6, 0)
    with pytest.raises(SupportViolationError) as exc:
        decode_counts(counts, reference_mapping())
    assert exc.value.violations == {"0200": 1, "0030": 2}
    assert "0200" in str(exc.value)


def test_decode_counts_rejects_mismatched_dims():
    counts = Counts((4, 4), {"00": 1}, 1, 0)
    with pytest.raises(MappingError):
        decode_counts(counts, reference_mapping())


def test_decode_counts_preserves_totals():
    mapping = reference_mapping()
    lowered = transpile(reference_circuit(), mapping)
    counts = sample(run(lowered), 2048, 5)
    decoded = decode_counts(counts, mapping)
    assert sum(decoded.counts.values()) == 2048
    assert all(len(k) == 5 and set(k) <= {"0", "1"} for k in decoded.counts)


def test_pullback_distribution_splits_off_image_mass():
    mapping = reference_mapping()
    pulled, off = pullback_distribution({"2000": 0.5, "0200": 0.5}, mapping)
    assert pulled == {"01000": 0.5}
    assert off == 0.5


def test_verify_consistency_passes_on_matching_distributions():
    mapping = reference_mapping()
    lowered = transpile(reference_circuit(), mapping)
    qudit_dist = exact_distribution(run(lowered))
    qubit_dist = exact_distribution(run(reference_circuit()))
    report = verify_consistency(qudit_dist, qubit_dist, mapping)
    assert report.passed
    assert report.max_abs_diff <= 1e-12
    assert report.off_image_mass == 0.0


def test_verify_consistency_flags_corruption():
    mapping = Mapping(((0,),), (3,))
    report = verify_consistency({"0": 0.6, "1": 0.4}, {"0": 0.5, "1": 0.5}, mapping)
    assert not report.passed
    assert report.max_abs_diff == pytest.approx(0.1)

    # off-image mass alone also fails the check
    report = verify_consistency({"0": 0.5, "1": 0.25, "2": 0.25},
                                {"0": 0.5, "1": 0.5}, mapping)
    assert report.off_image_mass == pytest.approx(0.25)
    assert not report.passed


def test_verify_consistency_rejects_unnormalized_inputs():
    mapping = Mapping(((0,),), (3,))
    with pytest.raises(ValueError):
        verify_consistency({"0": 0.3}, {"0": 1.0}, mapping)
    with pytest.raises(ValueError):
        verify_consistency({"0": 1.0}, {"0": 0.7}, mapping)


def test_total_variation_distance():
    assert total_variation_distance({"0": 1.0}, {"0": 1.0}) == 0.0
    assert total_variation_distance({"0": 1.0}, {"1": 1.0}) == 1.0
    assert total_variation_distance(
        {"0": 0.75, "1": 0.25}, {"0": 0.5, "1": 0.5}
    ) == pytest.approx(0.25)
