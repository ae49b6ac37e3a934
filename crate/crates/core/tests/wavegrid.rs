use std::f64::consts::{PI, TAU};

use landauer::entropy::joint_information;
use landauer::wavegrid::{
    make_gaussian, make_uniform, measure_position, random_state, scale_state, to_momentum, to_position,
    window_sigma_for_target, Grid, PositionState, Side, Window,
};
use num_complex::Complex64;
use proptest::prelude::*;

fn grid() -> Grid {
    Grid::centered(4096, 0.01).unwrap()
}

fn max_abs_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

fn boosted(state: &PositionState, k: f64) -> PositionState {
    let g = *state.grid();
    let amps = g.coords().zip(state.amplitudes()).map(|(x, a)| a * Complex64::from_polar(1.0, TAU * k * x)).collect();
    PositionState::normalized(g, amps).unwrap()
}

#[test]
fn gaussian_variance_on_grid() {
    let s = make_gaussian(grid(), 1.0, 0.0, 0.0).unwrap();
    assert!((s.std_dev().powi(2) - 1.0).abs() < 1e-3);
}

#[test]
fn gaussian_momentum_spread_matches_closed_form() {
    let s = make_gaussian(grid(), 1.0, 0.0, 0.0).unwrap();
    let sp = to_momentum(&s).std_dev();
    let expected = landauer::analytic::min_uncertainty_sigma_p(1.0).unwrap();
    assert!((sp / expected - 1.0).abs() < 1e-3, "{sp} vs {expected}");
}

#[test]
fn translated_boosted_gaussian_keeps_entropies() {
    let base = joint_information(&make_gaussian(grid(), 1.0, 0.0, 0.0).unwrap()).unwrap();
    let moved = joint_information(&make_gaussian(grid(), 1.0, 3.0, 0.5).unwrap()).unwrap();
    assert!((base.h_x - moved.h_x).abs() < 1e-6);
    assert!((base.h_p - moved.h_p).abs() < 1e-6);
}

#[test]
fn uniform_entropies() {
    let h = |len: f64, w: f64| joint_information(&make_uniform(grid(), len, 0.0, w).unwrap()).unwrap().h_x;
    assert!(h(1.0, 0.0).abs() < 1e-3);
    assert!((h(2.0, 0.0) - 2f64.ln()).abs() < 1e-3);
    let smoothed = h(2.0, 0.1);
    assert!(smoothed > 0.60 && smoothed < 0.694, "{smoothed}");
}

/// Independent Riemann sum of the raised-cosine profile, straight from its definition.
fn smoothed_uniform_entropy_oracle(len: f64, w: f64, dx: f64) -> f64 {
    let half = len / 2.0;
    let flat = half - w;
    let xs: Vec<f64> = (-4000..=4000).map(|i| i as f64 * dx).collect();
    let profile: Vec<f64> = xs
        .iter()
        .map(|x| {
            let s = x.abs();
            if s <= flat {
                1.0
            } else if s < half {
                ((PI * (s - flat) / (2.0 * w)).cos()).powi(2)
            } else {
                0.0
            }
        })
        .collect();
    let mass: f64 = profile.iter().sum::<f64>() * dx;
    -profile.iter().filter(|&&f| f > 0.0).map(|&f| (f / mass) * (f / mass).ln()).sum::<f64>() * dx
}

#[test]
fn smoothed_uniform_matches_riemann_oracle() {
    let oracle = smoothed_uniform_entropy_oracle(2.0, 0.1, 0.01);
    // closed form ln(ℓ-w) - 2w(½-ln2)/(ℓ-w), 30-digit reference
    assert!((oracle - 0.662_185_168_336_599_5).abs() < 1e-4, "{oracle}");
    let numeric = joint_information(&make_uniform(grid(), 2.0, 0.0, 0.1).unwrap()).unwrap().h_x;
    assert!((numeric - oracle).abs() < 1e-6, "{numeric} vs {oracle}");
}

#[test]
fn scaling_theorem_in_momentum() {
    let s = random_state(5, grid(), 0.25).unwrap();
    let scaled = scale_state(&s, 2.0).unwrap();
    let m = to_momentum(&s);
    let ms = to_momentum(&scaled);
    let half = grid().n() as i64 / 2;
    // p_k/2 lands on the grid for even k - n/2
    for k in (half / 2..3 * half / 2).step_by(2) {
        let j = (half + (k - half) / 2) as usize;
        let k = k as usize;
        let lhs = ms.amplitudes()[k].norm_sqr();
        let rhs = 0.5 * m.amplitudes()[j].norm_sqr();
        assert!((lhs - rhs).abs() < 1e-8, "k {k}: {lhs} vs {rhs}");
    }
}

#[test]
fn scaling_gaussian_gives_narrower_gaussian() {
    let s = make_gaussian(grid(), 1.0, 0.0, 0.0).unwrap();
    let scaled = scale_state(&s, 2.0).unwrap();
    assert!((scaled.std_dev() - 0.5).abs() < 5e-4);
}

#[test]
fn scaling_shifts_entropies_by_ln_a() {
    for seed in [1, 2, 3] {
        let s = random_state(seed, grid(), 0.25).unwrap();
        let r0 = joint_information(&s).unwrap();
        let r1 = joint_information(&scale_state(&s, 2.0).unwrap()).unwrap();
        assert!((r1.h_x - r0.h_x + 2f64.ln()).abs() < 1e-3);
        assert!((r1.h_p - r0.h_p - 2f64.ln()).abs() < 1e-3);
    }
}

#[test]
fn gaussian_measurement_halves_width() {
    let s = make_gaussian(grid(), 1.0, 0.0, 0.0).unwrap();
    let w = window_sigma_for_target(1.0, 0.5).unwrap();
    let after = measure_position(&s, &Window::Gaussian { sigma: w, center: 0.0 }).unwrap();
    let sp = to_momentum(&after).std_dev();
    assert!((sp / (1.0 / (2.0 * PI)) - 1.0).abs() < 1e-2);
}

#[test]
fn half_box_measurement_drops_one_bit() {
    let s = make_uniform(grid(), 2.0, 1.0, 0.0).unwrap();
    let before = joint_information(&s).unwrap().h_x;
    let after = measure_position(&s, &Window::HalfBox { side: Side::Left, split: 1.0 }).unwrap();
    let h_after = joint_information(&after).unwrap().h_x;
    // Riemann-sum oracle: the surviving samples are flat, so H = ln(count·dx)
    let count = after.density().iter().filter(|&&p| p > 0.0).count();
    let oracle = (count as f64 * grid().dx()).ln();
    assert!((h_after - oracle).abs() < 1e-9);
    assert!((before - h_after - 2f64.ln()).abs() < 2e-2, "{}", before - h_after);
    let right = measure_position(&s, &Window::HalfBox { side: Side::Right, split: 1.0 }).unwrap();
    assert!((before - joint_information(&right).unwrap().h_x - 2f64.ln()).abs() < 2e-2);
}

#[test]
fn random_states_deterministic_and_distinct() {
    let a = random_state(1, grid(), 0.25).unwrap();
    assert_eq!(a, random_state(1, grid(), 0.25).unwrap());
    let b = random_state(2, grid(), 0.25).unwrap();
    let l1: f64 = a.density().iter().zip(b.density()).map(|(p, q)| (p - q).abs()).sum::<f64>() * grid().dx();
    assert!(l1 > 1e-3);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn round_trip_and_parseval(seed in any::<u64>()) {
        let s = random_state(seed, grid(), 0.25).unwrap();
        let m = to_momentum(&s);
        prop_assert!((s.norm() - m.norm()).abs() < 1e-10);
        let back = to_position(&m).unwrap();
        prop_assert!(max_abs_diff(back.amplitudes(), s.amplitudes()) < 1e-10);
    }

    #[test]
    fn grid_boost_keeps_both_entropies(seed in any::<u64>(), m in -60i32..60) {
        let s = random_state(seed, grid(), 0.25).unwrap();
        let k = f64::from(m) * grid().conjugate().dx();
        let r0 = joint_information(&s).unwrap();
        let r1 = joint_information(&boosted(&s, k)).unwrap();
        prop_assert!((r0.h_x - r1.h_x).abs() < 1e-6);
        prop_assert!((r0.h_p - r1.h_p).abs() < 1e-6);
    }

    // Off-grid boosts resample the interference fringes in momentum.
    #[test]
    fn subgrid_boost_keeps_both_entropies(seed in any::<u64>(), k in -1.5f64..1.5) {
        let s = random_state(seed, grid(), 0.25).unwrap();
        let r0 = joint_information(&s).unwrap();
        let r1 = joint_information(&boosted(&s, k)).unwrap();
        prop_assert!((r0.h_x - r1.h_x).abs() < 1e-6);
        prop_assert!((r0.h_p - r1.h_p).abs() < 5e-5);
    }

    #[test]
    fn gaussian_boost_keeps_both_entropies(sigma in 0.3f64..2.0, k in -1.5f64..1.5) {
        let s = make_gaussian(grid(), sigma, 0.0, 0.0).unwrap();
        let r0 = joint_information(&s).unwrap();
        let r1 = joint_information(&boosted(&s, k)).unwrap();
        prop_assert!((r0.h_x - r1.h_x).abs() < 1e-6);
        prop_assert!((r0.h_p - r1.h_p).abs() < 1e-6);
    }

    #[test]
    fn grid_translation_keeps_both_entropies(seed in any::<u64>(), m in -200i32..200) {
        let s = random_state(seed, grid(), 0.25).unwrap();
        let mut amps = s.amplitudes().to_vec();
        if m >= 0 { amps.rotate_right(m as usize) } else { amps.rotate_left((-m) as usize) }
        let moved = PositionState::new(*s.grid(), amps).unwrap();
        let r0 = joint_information(&s).unwrap();
        let r1 = joint_information(&moved).unwrap();
        prop_assert!((r0.h_x - r1.h_x).abs() < 1e-12);
        prop_assert!((r0.h_p - r1.h_p).abs() < 1e-12);
    }

    #[test]
    fn centred_gaussian_window_never_widens(
        sigma in 0.3f64..2.0,
        center in -3.0f64..3.0,
        sigma_w in 0.05f64..50.0,
    ) {
        let s = make_gaussian(grid(), sigma, center, 0.0).unwrap();
        let m = measure_position(&s, &Window::Gaussian { sigma: sigma_w, center: s.mean() }).unwrap();
        prop_assert!(m.std_dev() <= s.std_dev() * (1.0 + 1e-12));
    }

    #[test]
    fn ones_window_is_identity(seed in any::<u64>()) {
        let s = random_state(seed, grid(), 0.25).unwrap();
        let m = measure_position(&s, &Window::Ones).unwrap();
        prop_assert!(max_abs_diff(m.amplitudes(), s.amplitudes()) < 1e-14);
    }
}
