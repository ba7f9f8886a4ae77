import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clonebound.statespace import (
    Projector,
    angle,
    apply_projector,
    basis_state,
    check_unitary,
    gram_schmidt_residual,
    inner,
    measure_prob,
    normalize,
    operator_norm,
    random_projector,
    random_state,
    random_unitary,
    tensor,
)

seeds = st.integers(min_value=0, max_value=2 ** 32 - 1)
dims = st.sampled_from([2, 3, 4, 5, 8])


def test_inner_basis_cases():
    e1, e2 = basis_state(3, 0), basis_state(3, 1)
    assert inner(e1, e1) == 1
    assert inner(e1, e2) == 0
    assert inner([1, 0], [1 / np.sqrt(2), 1j / np.sqrt(2)]) == pytest.approx(
        1 / np.sqrt(2)
    )


def test_inner_is_conjugate_linear_in_first_argument():
    a = normalize([1j, 1])
    b = normalize([1, 1])
    assert inner(a, b) == pytest.approx(np.conj(inner(b, a)))


def test_inner_rejects_dimension_mismatch():
    with pytest.raises(ValueError, match="dimension mismatch"):
        inner([1, 0], [1, 0, 0])


def test_angle_examples():
    assert angle(basis_state(2, 0), basis_state(2, 1)) == pytest.approx(np.pi / 2)
    assert angle([1, 0], [0.5, np.sqrt(3) / 2]) == pytest.approx(np.pi / 3)


@given(seeds, dims, st.floats(0, 2 * np.pi))
@settings(max_examples=50, deadline=None)
def test_angle_global_phase_invariance(seed, dim, theta):
    rng = np.random.default_rng(seed)
    v = random_state(dim, rng)
    w = random_state(dim, rng)
    assert angle(v, np.exp(1j * theta) * v) == pytest.approx(0.0, abs=1e-7)
    assert abs(angle(v, np.exp(1j * theta) * w) - angle(v, w)) < 1e-14


@given(seeds, dims)
@settings(max_examples=50, deadline=None)
def test_angle_symmetric_and_in_range(seed, dim):
    rng = np.random.default_rng(seed)
    v, w = random_state(dim, rng), random_state(dim, rng)
    assert angle(v, w) == angle(w, v)
    assert 0.0 <= angle(v, w) <= np.pi / 2


def test_angle_rejects_non_unit_input():
    with pytest.raises(ValueError, match="unit vector"):
        angle([1, 1], [1, 0])


def test_tensor_basis_and_index_convention():
    a, b = basis_state(2, 1), basis_state(3, 2)
    out = tensor(a, b)
    assert out[1 * 3 + 2] == 1
    assert np.count_nonzero(out) == 1


@given(seeds, dims)
@settings(max_examples=50, deadline=None)
def test_tensor_norm_and_overlap_factorization(seed, dim):
    rng = np.random.default_rng(seed)
    a, b = random_state(dim, rng), random_state(dim, rng)
    assert np.linalg.norm(tensor(a, b)) == pytest.approx(1.0, abs=1e-12)
    lhs = abs(inner(tensor(a, a), tensor(b, b)))
    assert lhs == pytest.approx(abs(inner(a, b)) ** 2, abs=1e-12)


@given(seeds, dims)
@settings(max_examples=50, deadline=None)
def test_tensor_overlap_angle_identity(seed, dim):
    rng = np.random.default_rng(seed)
    a, b = random_state(dim, rng), random_state(dim, rng)
    expected = np.arccos(np.cos(angle(a, b)) ** 2)
    assert angle(tensor(a, a), tensor(b, b)) == pytest.approx(expected, abs=1e-12)


def test_gram_schmidt_residual_known_cases():
    e1, e2 = basis_state(2, 0), basis_state(2, 1)
    assert np.allclose(gram_schmidt_residual(e2, e1), e2)
    diag = normalize([1, 1])
    assert np.allclose(gram_schmidt_residual(diag, e1), e2, atol=1e-15)


@given(seeds, dims)
@settings(max_examples=100, deadline=None)
def test_gram_schmidt_residual_properties(seed, dim):
    rng = np.random.default_rng(seed)
    target, anchor = random_state(dim, rng), random_state(dim, rng)
    res = gram_schmidt_residual(target, anchor)
    assert abs(inner(anchor, res)) < 1e-12
    assert np.linalg.norm(res) == pytest.approx(1.0, abs=1e-12)
    # stays inside span{target, anchor}
    q = np.linalg.qr(np.stack([anchor, target]).T)[0]
    inside = q @ (q.conj().T @ res)
    assert np.linalg.norm(res - inside) < 1e-12


def test_gram_schmidt_residual_rejects_collinear():
    v = normalize([1, 1j])
    with pytest.raises(ValueError, match="collinear"):
        gram_schmidt_residual(v, np.exp(0.3j) * v)


def test_projector_requires_orthonormal_basis():
    with pytest.raises(ValueError, match="orthonormal"):
        Projector(np.array([[1.0, 1.0]]) / 1.0)


def test_projector_fixed_point_and_kill():
    p = Projector(basis_state(2, 0)[None, :])
    assert np.allclose(apply_projector(p, basis_state(2, 0)), basis_state(2, 0))
    assert np.allclose(apply_projector(p, basis_state(2, 1)), 0.0)


@given(seeds, dims)
@settings(max_examples=50, deadline=None)
def test_projector_idempotent(seed, dim):
    rng = np.random.default_rng(seed)
    rank = int(rng.integers(1, dim))
    p = random_projector(dim, rank, rng)
    v = random_state(dim, rng)
    once = apply_projector(p, v)
    twice = apply_projector(p, once)
    assert np.max(np.abs(twice - once)) < 1e-12
    assert np.linalg.norm(once) <= 1.0 + 1e-12


def test_measure_prob_examples():
    p = Projector(basis_state(2, 0)[None, :])
    assert measure_prob(p, basis_state(2, 0)) == pytest.approx(1.0)
    assert measure_prob(p, basis_state(2, 1)) == pytest.approx(0.0)
    assert measure_prob(p, [0.5, np.sqrt(3) / 2]) == pytest.approx(0.25, abs=1e-12)


@given(seeds, dims)
@settings(max_examples=50, deadline=None)
def test_projector_completeness(seed, dim):
    rng = np.random.default_rng(seed)
    rank = int(rng.integers(1, dim))
    p = random_projector(dim, rank, rng)
    s = random_state(dim, rng)
    total = measure_prob(p, s) + measure_prob(p.complement(), s)
    assert total == pytest.approx(1.0, abs=1e-12)


def test_projector_from_span_rejects_dependent_vectors():
    with pytest.raises(ValueError, match="dependent"):
        Projector.from_span([basis_state(3, 0), basis_state(3, 0)])


def test_check_unitary():
    rng = np.random.default_rng(11)
    u = random_unitary(5, rng)
    check_unitary(u)
    with pytest.raises(ValueError, match="not unitary"):
        check_unitary(1.001 * u)


def test_operator_norm_matches_svd():
    rng = np.random.default_rng(3)
    a = rng.standard_normal((6, 6)) + 1j * rng.standard_normal((6, 6))
    assert operator_norm(a) == pytest.approx(np.linalg.svd(a, compute_uv=False)[0])


def test_basis_state_bounds():
    with pytest.raises(ValueError):
        basis_state(2, 2)
