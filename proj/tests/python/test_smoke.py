import numpy as np
import pytest

import opcert


def test_counterexample_residuals_exact():
    report = opcert.verify_counterexample(5)
    assert report.forward_residual == 0.0
    assert report.adjoint_residual == 1.0
    assert report.x_norm == 1.0


def test_paper_t_section_matches_display():
    t = opcert.paper_t()
    section = t.section(2)
    expected = np.array([[1, 1], [0, 1], [0, 1]], dtype=complex)
    assert np.array_equal(section, expected)


def test_jordan_block_refuted_for_paranormality():
    jordan = np.array([[1, 1], [0, 1]], dtype=complex)
    cert = opcert.class_check(jordan, opcert.OperatorClass.Paranormal)
    assert cert.verdict == opcert.Verdict.Refuted
    assert cert.defect < -1e-3
    assert cert.witness is not None
    assert abs(np.linalg.norm(cert.witness) - 1.0) < 1e-12


def test_identity_certified_star_paranormal():
    identity = np.eye(3, dtype=complex)
    cert = opcert.class_check(identity, opcert.OperatorClass.StarParanormal)
    assert cert.verdict == opcert.Verdict.Certified
    assert abs(cert.defect) <= 1e-12


def test_kron_and_vec_conventions():
    a = np.array([[1, 2], [3, 4]], dtype=complex)
    b = np.eye(2, dtype=complex)
    assert np.array_equal(opcert.kron(a, b), np.kron(a, b))
    assert np.array_equal(opcert.vec(a), np.array([1, 3, 2, 4], dtype=complex))


def test_solve_intertwiner_fixed_space():
    a = np.diag([1.0, 0.5]).astype(complex)
    u = np.eye(1, dtype=complex)
    basis = opcert.solve_intertwiner(a, u)
    assert len(basis) == 1
    x = basis[0]
    assert abs(abs(x[0, 0]) - 1.0) < 1e-10
    report = opcert.pf_residual(a, u, x)
    assert report.forward_residual < 1e-9
    assert report.adjoint_residual < 1e-9


def test_dimension_error_maps_to_value_error():
    with pytest.raises(ValueError):
        opcert.self_commutator(np.zeros((2, 3), dtype=complex))


def test_seeded_determinism():
    rng = np.random.default_rng(0)
    t = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
    cfg = opcert.SphereOptConfig(seed=42)
    first = opcert.defect_min(t, opcert.OperatorClass.Paranormal, cfg)
    second = opcert.defect_min(t, opcert.OperatorClass.Paranormal, cfg)
    assert first.value == second.value
    assert np.array_equal(first.argmin, second.argmin)
