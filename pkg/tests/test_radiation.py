import math
import warnings

import numpy as np
import pytest

import oracles
from slcap import (
    HERTZIAN_DIPOLE,
    ISOTROPIC,
    SPEED_OF_LIGHT,
    ArrayLayout,
    ElementModel,
    RadiationPattern,
    directivity,
    evaluate_pattern,
    find_lobes,
    gain,
    make_grid,
    polar_cut,
)

F0 = 1e9
LAMBDA = SPEED_OF_LIGHT / F0


def layout_of(positions_wl, weights=None, kind=ISOTROPIC, axis=(0.0, 0.0, 1.0)):
    pos = np.asarray(positions_wl, dtype=float) * LAMBDA
    if weights is None:
        weights = np.ones(len(pos), dtype=complex)
    return ArrayLayout(
        positions_m=pos,
        weights=np.asarray(weights, dtype=complex),
        frequency_hz=F0,
        element=ElementModel(kind=kind, axis=axis),
    )


def single_element(kind=ISOTROPIC, axis=(0.0, 0.0, 1.0), weight=1.0 + 0j):
    return layout_of([[0.0, 0.0, 0.0]], [weight], kind=kind, axis=axis)


def half_wave_pair():
    return layout_of([[0.0, 0.0, -0.25], [0.0, 0.0, 0.25]])


def full_wave_pair():
    return layout_of([[0.0, 0.0, -0.5], [0.0, 0.0, 0.5]])


def broadside_four():
    return layout_of(
        [[0.0, 0.0, -0.75], [0.0, 0.0, -0.25], [0.0, 0.0, 0.25], [0.0, 0.0, 0.75]]
    )


class TestGrid:
    def test_default_one_degree(self):
        theta, phi = make_grid()
        assert theta.size == 181 and phi.size == 360
        assert theta[0] == 0.0 and theta[-1] == pytest.approx(math.pi)
        assert phi[0] == 0.0 and phi[-1] < 2.0 * math.pi

    def test_coarser_grid(self):
        theta, phi = make_grid(5.0, 10.0)
        assert theta.size == 37 and phi.size == 36

    @pytest.mark.parametrize("steps", [(7.0, 1.0), (1.0, 7.0), (0.0, 1.0), (-1.0, 1.0)])
    def test_invalid_steps(self, steps):
        with pytest.raises(ValueError):
            make_grid(*steps)


class TestEvaluate:
    def test_single_isotropic_is_flat(self):
        pattern = evaluate_pattern(single_element(weight=2.0 + 0j))
        np.testing.assert_allclose(pattern.u, 4.0, rtol=1e-12)

    def test_dipole_z_axis_projection(self):
        pattern = evaluate_pattern(single_element(kind=HERTZIAN_DIPOLE))
        expected = np.sin(pattern.theta_rad)[:, None] ** 2
        np.testing.assert_allclose(pattern.u, np.broadcast_to(expected, pattern.u.shape),
                                    atol=1e-12)

    def test_dipole_x_axis_projection(self):
        pattern = evaluate_pattern(
            single_element(kind=HERTZIAN_DIPOLE, axis=(1.0, 0.0, 0.0))
        )
        st = np.sin(pattern.theta_rad)[:, None]
        cp = np.cos(pattern.phi_rad)[None, :]
        np.testing.assert_allclose(pattern.u, 1.0 - (st * cp) ** 2, atol=1e-12)

    def test_half_wave_pair_matches_hand_formula(self):
        pattern = evaluate_pattern(half_wave_pair())
        expected = oracles.pair_pattern_u(pattern.theta_rad, 0.5)[:, None]
        np.testing.assert_allclose(
            pattern.u, np.broadcast_to(expected, pattern.u.shape), atol=1e-9
        )

    def test_weight_scaling_squares(self):
        base = evaluate_pattern(half_wave_pair())
        scaled_layout = layout_of(
            [[0.0, 0.0, -0.25], [0.0, 0.0, 0.25]], [3.0 + 0j, 3.0 + 0j]
        )
        scaled = evaluate_pattern(scaled_layout)
        np.testing.assert_allclose(scaled.u, 9.0 * base.u, rtol=1e-12)

    def test_global_translation_leaves_intensity(self):
        moved = layout_of([[0.3, -0.2, -0.15], [0.3, -0.2, 0.35]])
        base = evaluate_pattern(half_wave_pair())
        shifted = evaluate_pattern(moved)
        np.testing.assert_allclose(shifted.u, base.u, atol=1e-9 * base.u.max())

    @pytest.mark.parametrize("chunk", [1, 7, 64, 181, 1000])
    def test_chunking_is_bit_identical(self, chunk):
        layout = broadside_four()
        reference = evaluate_pattern(layout, chunk_rows=181)
        chunked = evaluate_pattern(layout, chunk_rows=chunk)
        assert np.array_equal(chunked.u, reference.u)

    def test_bad_chunk_rows(self):
        with pytest.raises(ValueError):
            evaluate_pattern(single_element(), chunk_rows=0)

    def test_pattern_validation(self):
        theta, phi = make_grid()
        with pytest.raises(ValueError, match="shape"):
            RadiationPattern(
                theta_rad=theta, phi_rad=phi, u=np.ones((3, 3)), frequency_hz=F0
            )
        with pytest.raises(ValueError, match="non-negative"):
            RadiationPattern(
                theta_rad=theta,
                phi_rad=phi,
                u=-np.ones((theta.size, phi.size)),
                frequency_hz=F0,
            )


class TestElementAndLayout:
    def test_default_footprint_area(self):
        # 0.63 mm x 0.63 mm chip face
        assert ElementModel().area_mm2 == pytest.approx(0.3969, rel=1e-12)

    def test_axis_normalized(self):
        e = ElementModel(kind=HERTZIAN_DIPOLE, axis=(0.0, 0.0, 2.0))
        np.testing.assert_allclose(e.unit_axis(), [0.0, 0.0, 1.0])

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            ElementModel(kind="patch")

    def test_wavelength(self):
        assert half_wave_pair().wavelength_m == pytest.approx(LAMBDA)

    def test_mismatched_weights(self):
        with pytest.raises(ValueError):
            ArrayLayout(
                positions_m=np.zeros((2, 3)),
                weights=np.ones(3, dtype=complex),
                frequency_hz=F0,
                element=ElementModel(),
            )


class TestDirectivity:
    def test_isotropic_is_exactly_one(self):
        d = directivity(evaluate_pattern(single_element()))
        assert d == pytest.approx(1.0, abs=1e-6)

    def test_short_dipole(self):
        d = directivity(evaluate_pattern(single_element(kind=HERTZIAN_DIPOLE)))
        assert d == pytest.approx(1.5, rel=5e-3)

    def test_half_wave_pair(self):
        d = directivity(evaluate_pattern(half_wave_pair()))
        assert d == pytest.approx(2.0, rel=1e-2)

    def test_grid_refinement_converges(self):
        layout = half_wave_pair()
        coarse = directivity(evaluate_pattern(layout, *make_grid(1.0, 1.0)))
        fine = directivity(evaluate_pattern(layout, *make_grid(0.5, 0.5)))
        assert abs(fine - coarse) / fine < 1e-3

    def test_never_below_isotropic(self, rng):
        for _ in range(20):
            n = int(rng.integers(1, 5))
            layout = ArrayLayout(
                positions_m=rng.uniform(-LAMBDA, LAMBDA, size=(n, 3)),
                weights=rng.normal(size=n) + 1j * rng.normal(size=n),
                frequency_hz=F0,
                element=ElementModel(),
            )
            pattern = evaluate_pattern(layout, *make_grid(2.0, 2.0))
            try:
                d = directivity(pattern)
            except ValueError:
                continue  # fully cancelled pattern
            assert d >= 1.0 - 1e-12

    def test_repeat_calls_bit_identical(self):
        pattern = evaluate_pattern(broadside_four())
        assert directivity(pattern) == directivity(pattern)

    def test_zero_pattern_rejected(self):
        cancelled = layout_of(
            [[0.0, 0.0, 0.1], [0.0, 0.0, 0.1]], [1.0 + 0j, -1.0 + 0j]
        )
        pattern = evaluate_pattern(cancelled)
        assert pattern.u.max() == 0.0
        with pytest.raises(ValueError, match="zero mean"):
            directivity(pattern)

    def test_coarse_grid_at_sharp_peak_warns(self):
        pattern = evaluate_pattern(half_wave_pair(), *make_grid(15.0, 15.0))
        with pytest.warns(UserWarning, match="too coarse"):
            directivity(pattern)

    def test_standard_grid_does_not_warn(self):
        pattern = evaluate_pattern(half_wave_pair())
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            directivity(pattern)


class TestGain:
    def test_scales_directivity(self):
        assert gain(1.5, 0.98) == pytest.approx(1.47)

    def test_perfect_efficiency_is_identity(self):
        assert gain(2.0, 1.0) == 2.0

    @pytest.mark.parametrize("eff", [-0.1, 1.1])
    def test_efficiency_range(self, eff):
        with pytest.raises(ValueError):
            gain(1.5, eff)

    def test_directivity_floor(self):
        with pytest.raises(ValueError):
            gain(0.5, 1.0)
        assert gain(1.0, 0.5) == 0.5  # exactly isotropic is fine


class TestPolarCut:
    def test_circle_has_2n_minus_2_samples(self):
        pattern = evaluate_pattern(single_element(kind=HERTZIAN_DIPOLE))
        angles, values = polar_cut(pattern)
        assert angles.size == values.size == 360
        assert (np.diff(angles) > 0).all()
        assert angles[0] == 0.0 and angles[-1] < 2.0 * math.pi

    def test_values_stitch_the_two_half_planes(self):
        pattern = evaluate_pattern(
            single_element(kind=HERTZIAN_DIPOLE, axis=(1.0, 0.0, 0.0))
        )
        angles, values = polar_cut(pattern, phi_cut_rad=0.0)
        n = pattern.theta_rad.size
        assert np.array_equal(values[:n], pattern.u[:, 0])
        assert np.array_equal(values[n:], pattern.u[-2:0:-1, 180])

    def test_nearest_column_is_used(self):
        pattern = evaluate_pattern(
            single_element(kind=HERTZIAN_DIPOLE, axis=(1.0, 0.0, 0.0))
        )
        _, from_offset = polar_cut(pattern, phi_cut_rad=math.radians(0.4))
        _, from_zero = polar_cut(pattern, phi_cut_rad=0.0)
        assert np.array_equal(from_offset, from_zero)
        _, rounded_up = polar_cut(pattern, phi_cut_rad=math.radians(0.6))
        n = pattern.theta_rad.size
        assert np.array_equal(rounded_up[:n], pattern.u[:, 1])


class TestFindLobes:
    def test_dipole_has_two_main_lobes(self):
        pattern = evaluate_pattern(single_element(kind=HERTZIAN_DIPOLE))
        lobes = find_lobes(pattern)
        assert len(lobes) == 2
        assert [round(math.degrees(lb.angle_rad)) for lb in lobes] == [90, 270]
        assert all(lb.is_main for lb in lobes)
        assert all(lb.level_db == pytest.approx(0.0, abs=1e-9) for lb in lobes)

    def test_full_wave_pair_has_four_main_lobes(self):
        pattern = evaluate_pattern(full_wave_pair())
        lobes = find_lobes(pattern)
        main = [lb for lb in lobes if lb.is_main]
        assert len(main) == 4
        angles = sorted(round(math.degrees(lb.angle_rad)) for lb in main)
        assert angles == [0, 90, 180, 270]

    def test_broadside_four_sidelobe_classification(self):
        pattern = evaluate_pattern(broadside_four())
        lobes = find_lobes(pattern, main_threshold_db=10.0)
        assert len(lobes) == 6
        main = [lb for lb in lobes if lb.is_main]
        minor = [lb for lb in lobes if not lb.is_main]
        assert len(main) == 2 and len(minor) == 4
        assert sorted(round(math.degrees(lb.angle_rad)) for lb in main) == [90, 270]
        # Uniform four-element sidelobes sit near -11.3 dB.
        for lb in minor:
            assert lb.level_db == pytest.approx(-11.35, abs=0.2)

    def test_threshold_widens_main_class(self):
        pattern = evaluate_pattern(broadside_four())
        lobes = find_lobes(pattern, main_threshold_db=15.0)
        assert all(lb.is_main for lb in lobes)

    def test_threshold_sign_is_ignored(self):
        pattern = evaluate_pattern(broadside_four())
        a = find_lobes(pattern, main_threshold_db=12.0)
        b = find_lobes(pattern, main_threshold_db=-12.0)
        assert [(lb.angle_rad, lb.is_main) for lb in a] == [
            (lb.angle_rad, lb.is_main) for lb in b
        ]

    def test_uniform_cut_is_degenerate(self):
        pattern = evaluate_pattern(single_element())
        lobes = find_lobes(pattern)
        assert len(lobes) == 1
        assert lobes[0].degenerate and lobes[0].is_main
        assert lobes[0].level_db == 0.0

    def test_zero_cut_rejected(self):
        cancelled = layout_of(
            [[0.0, 0.0, 0.1], [0.0, 0.0, 0.1]], [1.0 + 0j, -1.0 + 0j]
        )
        with pytest.raises(ValueError, match="zero"):
            find_lobes(evaluate_pattern(cancelled))

    def test_plateau_merges_to_midpoint(self):
        theta, phi = make_grid()
        u = np.ones((theta.size, phi.size))
        u[89:92, :] = 2.0  # flat top spanning 89..91 degrees
        pattern = RadiationPattern(theta_rad=theta, phi_rad=phi, u=u, frequency_hz=F0)
        lobes = find_lobes(pattern)
        assert len(lobes) == 2  # the opposite half-plane shows the mirror lobe
        assert math.degrees(lobes[0].angle_rad) == pytest.approx(90.0, abs=1e-9)
        assert math.degrees(lobes[1].angle_rad) == pytest.approx(270.0, abs=1e-9)

    def test_plateau_across_the_wrap(self):
        theta, phi = make_grid()
        u = np.ones((theta.size, phi.size))
        u[0:3, :] = 2.0  # flat top straddling theta = 0
        pattern = RadiationPattern(theta_rad=theta, phi_rad=phi, u=u, frequency_hz=F0)
        lobes = find_lobes(pattern)
        near_zero = [
            lb
            for lb in lobes
            if min(math.degrees(lb.angle_rad), 360.0 - math.degrees(lb.angle_rad)) < 5.0
        ]
        assert len(near_zero) == 1
        wrapped = math.degrees(near_zero[0].angle_rad)
        assert min(wrapped, 360.0 - wrapped) == pytest.approx(0.0, abs=1e-9)
