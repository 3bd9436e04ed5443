import numpy as np
import pytest

from bellfacets import (
    SignFunction,
    UnsupportedSize,
    VariableAssignment,
    canonicalize,
    certify_tightness,
    chsh_pattern,
    enumerate_admissible,
    inequality_from_sign_function,
    is_factorable,
    lift,
    lifted_vertices,
    two_setting_reduction,
    vertex_tensor,
)
from bellfacets.lifting import lifted_matrix


# ── lifted vertices ─────────────────────────────────────────────────────────


def test_lifted_vertex_count_and_normalization():
    vertices = lifted_vertices(2)
    assert len(vertices) == 16
    assert len({v.tensor.tobytes() for v in vertices}) == 16
    for v in vertices:
        assert v.tensor[0, 0] == 1


def test_lifted_vertices_are_plain_vertices_with_positive_sign():
    for bits, lifted in enumerate(lifted_vertices(2)):
        plain = vertex_tensor(VariableAssignment(2, bits), 1)
        assert np.array_equal(lifted.tensor, plain.tensor)


def test_every_facet_holds_on_lifted_vertices():
    mat = lifted_matrix(2)
    for s in enumerate_admissible(2):
        values = mat @ inequality_from_sign_function(s).coeffs.ravel()
        assert np.abs(values).max() <= 16


# ── lifting ─────────────────────────────────────────────────────────────────


def test_lift_chsh(chsh_inequality):
    lifted = lift(chsh_inequality)
    assert lifted.bounds == (-16, 16)
    assert not lifted.degenerate
    assert lifted.constant == 8
    assert lifted.marginal_coeffs == ((8, 0), (8, 0))
    assert lifted.correlations == (((1, 1), -8),)
    values = lifted_matrix(2) @ chsh_inequality.coeffs.ravel()
    assert values.min() == -16 and values.max() == 16  # both bounds attained


def test_lift_of_constant_term_is_degenerate():
    ineq = inequality_from_sign_function(SignFunction(2, 0))
    lifted = lift(ineq)
    assert lifted.bounds == (16, 16)
    assert lifted.degenerate


def test_uniform_mixture_leaves_only_the_constant(chsh_inequality):
    values = lifted_matrix(2) @ chsh_inequality.coeffs.ravel()
    assert values.mean() == chsh_inequality.coeffs[0, 0]


def test_lift_bounds_attained_for_all_canonical_classes(census2):
    for cls in census2.canonical_classes:
        ineq = inequality_from_sign_function(cls.representative)
        lifted = lift(ineq)
        values = lifted_matrix(2) @ ineq.coeffs.ravel()
        assert lifted.bounds == (int(values.min()), int(values.max()))
        assert -16 <= lifted.bounds[0] <= lifted.bounds[1] <= 16


# ── two-setting reduction ───────────────────────────────────────────────────


def test_reduction_counts():
    assert len(two_setting_reduction(2)) == 16
    assert len(two_setting_reduction(3)) == 256


def test_reduction_rejects_large_sizes():
    with pytest.raises(UnsupportedSize):
        two_setting_reduction(4)


def test_reduction_support_stays_two_setting():
    for ineq in two_setting_reduction(2):
        support = np.argwhere(ineq.coeffs)
        assert support.size == 0 or support.max() <= 1


def test_reduction_two_observers_is_chsh_or_trivial():
    trivial = 0
    for ineq in two_setting_reduction(2):
        if is_factorable(ineq.provenance):
            trivial += 1
        else:
            assert chsh_pattern(ineq)
    assert trivial == 8  # +/- each of 1, a, c, ac


def test_reduction_contains_mermin(mermin_coeffs):
    found = [i for i in two_setting_reduction(3) if (i.coeffs == mermin_coeffs).all()]
    assert len(found) == 1


def test_reduced_inequalities_are_tight_in_the_full_space():
    for parties in (2, 3):
        for ineq in two_setting_reduction(parties):
            cert = certify_tightness(ineq)
            assert cert.tight
            assert cert.saturating_count == 1 << (2 * parties)
            assert cert.rank == 3 ** parties


def test_reduction_canonical_flags_are_consistent():
    reduced = two_setting_reduction(2)
    reps = {canonicalize(i.provenance).table for i in reduced}
    # the full census reaches every reduced orbit: constants, one-variable,
    # two-variable characters, and CHSH
    assert len(reps) == 4
