mod common;

use common::{kolmogorov_tail, simpson};
use firewsn_core::radius::HybridRadiusModel;
use firewsn_core::montecarlo::stream_rng;
use proptest::prelude::*;

fn quadrature_moments(m: &HybridRadiusModel) -> (f64, f64) {
    let w = m.tail_width();
    let pdf = |y: f64| m.tail_pdf(y).unwrap();
    let ri = m.r_in();
    let first = simpson(&|y| (ri + y) * pdf(y), 0.0, w, 1e-13);
    let second = simpson(&|y| (ri + y) * (ri + y) * pdf(y), 0.0, w, 1e-13);
    (first, second)
}

#[test]
fn moments_match_quadrature_on_grid() {
    let r_ins = [0.0, 0.5, 2.0, 5.0];
    let widths = [0.1, 1.0, 2.0, 5.0, 10.0];
    for &ri in &r_ins {
        for &w in &widths {
            let m = HybridRadiusModel::new(ri, ri + w).unwrap();
            let (e1, e2) = quadrature_moments(&m);
            let rel1 = (m.mean_radius() - e1).abs() / e1;
            let rel2 = (m.mean_radius_squared() - e2).abs() / e2;
            assert!(rel1 < 1e-8, "E[r] ({ri}, {}) rel err {rel1}", ri + w);
            assert!(rel2 < 1e-8, "E[r²] ({ri}, {}) rel err {rel2}", ri + w);
        }
    }
}

#[test]
fn moment_examples() {
    let m = HybridRadiusModel::new(2.0, 4.0).unwrap();
    assert!((m.mean_radius() - 2.686_964_714_5).abs() < 1e-8);
    assert!((m.mean_radius_squared() - 7.495_717_716).abs() < 1e-8);

    // Values from the quadrature oracle.
    let m = HybridRadiusModel::new(0.0, 1.0).unwrap();
    let (e1, e2) = quadrature_moments(&m);
    assert!((e1 - 0.418_023_293_1).abs() < 1e-9);
    assert!((e2 - 0.254_069_879_4).abs() < 1e-9);
    assert!((m.mean_radius() - e1).abs() < 1e-8);
    assert!((m.mean_radius_squared() - e2).abs() < 1e-8);
}

#[test]
fn published_second_moment_is_not_reproducible() {
    // The reference table's 5.49 m² for E[r²] disagrees with the density.
    let m = HybridRadiusModel::new(2.0, 4.0).unwrap();
    assert!((m.mean_radius_squared() - 5.49).abs() > 2.0);
}

#[test]
fn sample_mean_within_three_sigma() {
    let m = HybridRadiusModel::new(2.0, 4.0).unwrap();
    let n = 1_000_000;
    let mut rng = stream_rng(2024, 0);
    let sum: f64 = (0..n).map(|_| m.sample(&mut rng)).sum();
    let mean = sum / n as f64;
    let var = m.mean_radius_squared() - m.mean_radius().powi(2);
    let sigma = (var / n as f64).sqrt();
    assert!((mean - m.mean_radius()).abs() < 3.0 * sigma, "{mean}");
}

#[test]
fn kolmogorov_smirnov_against_cdf() {
    let m = HybridRadiusModel::new(2.0, 4.0).unwrap();
    let n = 1_000_000;
    let mut rng = stream_rng(77, 3);
    let mut ys: Vec<f64> = (0..n).map(|_| m.sample(&mut rng) - m.r_in()).collect();
    ys.sort_by(f64::total_cmp);
    let d = ys
        .iter()
        .enumerate()
        .map(|(i, &y)| {
            let f = m.tail_cdf(y);
            (f - i as f64 / n as f64).max((i + 1) as f64 / n as f64 - f)
        })
        .fold(0.0, f64::max);
    let stat = d * (n as f64).sqrt();
    // 1% critical value of the Kolmogorov distribution.
    assert!((kolmogorov_tail(1.6276) - 0.01).abs() < 1e-4);
    assert!(stat < 1.6276, "KS statistic {stat}");
}

#[test]
fn normalization_of_density() {
    for w in [0.1, 1.0, 2.0, 10.0] {
        let m = HybridRadiusModel::new(0.0, w).unwrap();
        let total = simpson(&|y| m.tail_pdf(y).unwrap(), 0.0, w, 1e-14);
        assert!((total - 1.0).abs() < 1e-9, "{w}: {total}");
    }
}

proptest! {
    #[test]
    fn jensen(ri in 0.0f64..20.0, w in 0.0f64..20.0) {
        let m = HybridRadiusModel::new(ri, ri + w).unwrap();
        prop_assert!(m.mean_radius_squared() >= m.mean_radius().powi(2) * (1.0 - 1e-12));
        prop_assert!(m.mean_radius() >= ri && m.mean_radius() <= ri + w + 1e-12);
    }

    #[test]
    fn samples_stay_in_support(ri in 0.0f64..10.0, w in 0.0f64..10.0, seed in any::<u64>()) {
        let m = HybridRadiusModel::new(ri, ri + w).unwrap();
        let mut rng = stream_rng(seed, 0);
        for _ in 0..200 {
            let r = m.sample(&mut rng);
            if w == 0.0 {
                prop_assert_eq!(r, ri);
            } else {
                prop_assert!(r > ri && r <= ri + w, "r = {}", r);
            }
        }
    }
}
