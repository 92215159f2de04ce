import cmath
import math

import numpy as np
import pytest

from rotinv import (
    DegenerateInputError,
    DomainError,
    ExponentVector,
    IncompleteTableError,
    MomentTable,
    PointCloud,
    RasterImage,
    central_moments,
    complex_moment_form,
    eigenvector,
    evaluate_form,
    evaluate_invariant,
    geometric_moments,
    moment_pipeline,
    normalized_moments,
    rotate_point_cloud,
    verify_invariance,
)

from conftest import random_cloud


# ---------------------------------------------------------------- geometric


def test_single_mass_at_origin():
    pc = PointCloud.from_points([(0.0, 0.0, 1.0)])
    m = geometric_moments(pc, 3)
    assert m.require(0, 0) == 1.0
    assert all(v == 0.0 for (p, q), v in m.entries.items() if p + q >= 1)


def test_two_point_hand_sum():
    pc = PointCloud.from_points([(1, 0, 1), (0, 1, 1)])
    m = geometric_moments(pc, 2)
    assert m.require(0, 0) == 2.0
    assert m.require(1, 0) == 1.0
    assert m.require(0, 1) == 1.0
    assert m.require(2, 0) == 1.0
    assert m.require(1, 1) == 0.0
    assert m.require(0, 2) == 1.0


def test_raster_all_ones():
    img = RasterImage(2, 2, np.ones((2, 2)))
    m = geometric_moments(img, 2)
    assert m.require(0, 0) == 4.0
    # pixel centers at 0.5 and 1.5 on both axes
    assert m.require(1, 0) == pytest.approx(4.0)
    assert m.require(0, 1) == pytest.approx(4.0)


def test_degenerate_sources():
    with pytest.raises(DegenerateInputError):
        geometric_moments(PointCloud.from_points([(1.0, 2.0, 0.0)]), 2)
    with pytest.raises(DegenerateInputError):
        geometric_moments(RasterImage(3, 3, np.zeros((3, 3))), 2)
    with pytest.raises(DomainError):
        geometric_moments(PointCloud.from_points([(0, 0, 1)]), 1)
    with pytest.raises(DomainError):
        geometric_moments(object(), 2)


# ---------------------------------------------------------------- central


def test_central_translation_invariance(rng):
    pc = random_cloud(rng)
    mu = central_moments(geometric_moments(pc, 4))
    mu_shift = central_moments(geometric_moments(pc.translated(3.7, -1.2), 4))
    for key, v in mu.entries.items():
        assert mu_shift.entries[key] == pytest.approx(v, rel=1e-10, abs=1e-12)


def test_central_single_point():
    mu = central_moments(geometric_moments(PointCloud.from_points([(2, 3, 1.5)]), 3))
    assert mu.require(0, 0) == 1.5
    for (p, q), v in mu.entries.items():
        if p + q >= 1:
            assert v == pytest.approx(0.0, abs=1e-12)


def test_central_symmetric_pair():
    pc = PointCloud.from_points([(-1, 0, 1), (1, 0, 1)])
    mu = central_moments(geometric_moments(pc, 2))
    assert mu.require(2, 0) == pytest.approx(2.0)
    assert mu.require(1, 1) == pytest.approx(0.0)
    assert mu.require(0, 2) == pytest.approx(0.0)
    assert mu.require(1, 0) == pytest.approx(0.0, abs=1e-14)
    assert mu.require(0, 1) == pytest.approx(0.0, abs=1e-14)


# ---------------------------------------------------------------- normalized


def test_normalized_unit_mass_is_identity(rng):
    pc = random_cloud(rng, n=8)
    pc.ws = pc.ws / pc.ws.sum()  # unit total mass
    mu = central_moments(geometric_moments(pc, 3))
    assert mu.require(0, 0) == pytest.approx(1.0)
    eta = normalized_moments(mu)
    for key, v in eta.entries.items():
        assert v == pytest.approx(mu.entries[key], rel=1e-12)


def test_normalized_scale_invariance(rng):
    pc = random_cloud(rng, n=10)
    eta = moment_pipeline(pc, 4)
    eta_s = moment_pipeline(pc.scaled(2.5), 4)
    for key, v in eta.entries.items():
        assert eta_s.entries[key] == pytest.approx(v, rel=1e-10, abs=1e-14)


def test_normalized_domain_rules(rng):
    eta = moment_pipeline(random_cloud(rng), 3)
    assert (1, 1) in eta.entries
    assert (1, 0) not in eta.entries
    assert (0, 0) not in eta.entries
    bad = MomentTable("central", {(0, 0): -1.0}, 2)
    with pytest.raises(DegenerateInputError):
        normalized_moments(bad)


def test_pipeline_similarity_invariance(rng):
    pc = random_cloud(rng)
    eta = moment_pipeline(pc, 4)
    eta_ts = moment_pipeline(pc.translated(5.0, -2.5).scaled(3.0), 4)
    for key, v in eta.entries.items():
        assert eta_ts.entries[key] == pytest.approx(v, rel=1e-10, abs=1e-13)


def test_scaled_rejects_nonpositive(rng):
    with pytest.raises(DomainError):
        random_cloud(rng).scaled(-1.0)


# ---------------------------------------------------------------- rotation


def test_rotate_identity_and_period(rng):
    pc = random_cloud(rng)
    r0 = rotate_point_cloud(pc, 0.0)
    assert np.allclose(r0.xs, pc.xs) and np.allclose(r0.ys, pc.ys)
    r_full = rotate_point_cloud(pc, 2 * math.pi)
    assert np.max(np.abs(r_full.xs - pc.xs)) < 1e-12
    assert np.max(np.abs(r_full.ys - pc.ys)) < 1e-12


def test_rotate_composition(rng):
    pc = random_cloud(rng)
    a = rotate_point_cloud(rotate_point_cloud(pc, 0.4), 0.9)
    b = rotate_point_cloud(pc, 1.3)
    assert np.max(np.abs(a.xs - b.xs)) < 1e-12
    assert np.max(np.abs(a.ys - b.ys)) < 1e-12
    assert np.all(a.ws == pc.ws)


# ---------------------------------------------------------------- evaluation


def test_evaluate_form_fixture(rng):
    eta = moment_pipeline(random_cloud(rng), 2)
    v = evaluate_form(eigenvector(2, 0), eta)
    assert v == pytest.approx(eta.entries[(2, 0)] + eta.entries[(0, 2)])


def test_evaluate_form_on_symmetric_cloud():
    # eight points of a regular octagon: every nonzero weight form vanishes
    pts = [
        (math.cos(2 * math.pi * k / 8), math.sin(2 * math.pi * k / 8), 1.0)
        for k in range(8)
    ]
    eta = moment_pipeline(PointCloud.from_points(pts), 2)
    assert abs(evaluate_form(eigenvector(2, 2), eta)) < 1e-10


def test_evaluate_form_zero_table():
    zero = MomentTable("normalized", {(2, 0): 0.0, (1, 1): 0.0, (0, 2): 0.0}, 2)
    assert evaluate_form(eigenvector(2, 2), zero) == 0


def test_evaluate_form_incomplete_table():
    t = MomentTable("normalized", {(2, 0): 1.0}, 2)
    with pytest.raises(IncompleteTableError):
        evaluate_form(eigenvector(2, 0), t)


def test_evaluate_invariant_empty_product(rng):
    eta = moment_pipeline(random_cloud(rng), 2)
    assert evaluate_invariant(ExponentVector.make({}), eta) == 1 + 0j


def test_evaluate_invariant_conjugate_pair_real(rng):
    pc = random_cloud(rng)
    eta = moment_pipeline(pc, 3)
    v = evaluate_invariant(ExponentVector.make({(3, 1): 1, (3, -1): 1}), eta)
    assert abs(v.imag) <= 1e-10 * max(1.0, abs(v))


def test_evaluate_invariant_rotation_invariance(rng):
    pc = random_cloud(rng)
    m = ExponentVector.make({(3, 1): 1, (3, -1): 1})  # b4
    base = evaluate_invariant(m, moment_pipeline(pc, 3))
    rot = evaluate_invariant(m, moment_pipeline(rotate_point_cloud(pc, 1.0), 3))
    assert abs(rot - base) <= 1e-10 * abs(base)


def test_complex_moment_phase_law(rng):
    # rotating the source by theta multiplies c_{p,q} by exp(i (p-q) theta)
    pc = random_cloud(rng)
    theta = 0.77
    for p, q in [(2, 0), (3, 0), (2, 1), (0, 2)]:
        base = evaluate_form(
            complex_moment_form(p, q), moment_pipeline(pc, p + q)
        )
        rot = evaluate_form(
            complex_moment_form(p, q),
            moment_pipeline(rotate_point_cloud(pc, theta), p + q),
        )
        want = cmath.exp(1j * (p - q) * theta) * base
        assert abs(rot - want) <= 1e-9 * max(abs(base), 1e-30)


# ---------------------------------------------------------------- harness


def test_verify_invariance_random_cloud(rng):
    rep = verify_invariance(random_cloud(rng), 4, 3, 1, [0.3, 1.0, 2.5])
    assert not rep.degenerate
    assert rep.max_rel_dev < 1e-9
    assert len(rep.rows) == 11
    assert [r.name for r in rep.rows] == [f"b{i}" for i in range(1, 12)]


def test_verify_invariance_single_point_flags_degenerate():
    rep = verify_invariance(
        PointCloud.from_points([(2.0, 1.0, 1.0)]), 3, 3, 1, [0.5]
    )
    assert rep.degenerate
    assert all(r.degenerate for r in rep.rows)


def test_verify_invariance_report_json(rng):
    rep = verify_invariance(random_cloud(rng), 3, 3, 1, [0.3])
    doc = rep.to_json()
    assert doc["d"] == 3 and doc["anchor"] == [3, 1]
    assert len(doc["generators"]) == 6
    assert all("max_rel_dev" in g for g in doc["generators"])


def test_raster_disk_verify():
    # symmetric disk: weight-carrying factors vanish, x20/x40 stay stable
    size = 96
    yy, xx = np.mgrid[0:size, 0:size]
    disk = (((xx - 48.0) ** 2 + (yy - 44.0) ** 2) < 700.0).astype(float)
    img = RasterImage(size, size, disk)
    rep = verify_invariance(img, 3, 3, 1, [0.4])
    assert rep.degenerate  # symmetry kills the pair/cross generators
    stable = [r for r in rep.rows if not r.degenerate]
    assert stable and all(r.max_rel_dev < 1e-2 for r in stable)
