use std::f64::consts::PI;

use firewsn_core::{FireModelKind, FireScenario, HybridRadiusModel};
use proptest::prelude::*;

fn reference(kind: FireModelKind, density: f64) -> FireScenario {
    FireScenario::reference(kind, density).unwrap()
}

/// λπ[(αt)² + 2αt E[r] + E[r²]].
fn circular_hand_expanded(s: &FireScenario, t: f64) -> f64 {
    let at = s.growth.alpha * t;
    let (er, er2) = (s.radius.mean_radius(), s.radius.mean_radius_squared());
    s.density * PI * (at * at + 2.0 * at * er + er2)
}

/// λπ[(αt)²(1 + w) + E[r] αt (3(2 + w) − √((4 + w)(4 + 3w))) + E[r²]].
fn elliptical_hand_expanded(s: &FireScenario, t: f64) -> f64 {
    let at = s.growth.alpha * t;
    let w = s.growth.wind_x / s.growth.scale_speed;
    let (er, er2) = (s.radius.mean_radius(), s.radius.mean_radius_squared());
    let shape = 3.0 * (2.0 + w) - ((4.0 + w) * (4.0 + 3.0 * w)).sqrt();
    s.density * PI * (at * at * (1.0 + w) + er * at * shape + er2)
}

#[test]
fn steiner_expansion_matches_hand_expanded_forms() {
    for density in [0.01, 0.05, 0.1] {
        let c = reference(FireModelKind::Circular, density);
        let e = reference(FireModelKind::Elliptical, density);
        for k in 0..=40 {
            let t = k as f64 * 0.25;
            let (gc, hc) = (c.mean_detectors(t).unwrap(), circular_hand_expanded(&c, t));
            let (ge, he) = (e.mean_detectors(t).unwrap(), elliptical_hand_expanded(&e, t));
            assert!((gc - hc).abs() <= 1e-12 * hc.max(1.0), "circular t={t}");
            assert!((ge - he).abs() <= 1e-12 * he.max(1.0), "elliptical t={t}");
        }
    }
}

#[test]
fn density_round_trip() {
    for kind in FireModelKind::ALL {
        for tau in [0.5, 0.9, 0.99] {
            let mut s = reference(kind, 0.0);
            s.tau = tau;
            let s = s.with_density(s.critical_density());
            assert!((s.detection_probability() - tau).abs() < 1e-10, "{kind} {tau}");
        }
    }
}

#[test]
fn mean_detectors_at_critical_time() {
    let s = reference(FireModelKind::Circular, 0.1);
    let n = s.mean_detectors(s.critical_time()).unwrap();
    assert!((n - 8.60).abs() < 0.02, "{n}");
}

#[test]
fn model_orderings() {
    let c = reference(FireModelKind::Circular, 0.05);
    let e = reference(FireModelKind::Elliptical, 0.05);
    let p = reference(FireModelKind::Piriform, 0.05);
    let grid: Vec<f64> = (0..=50).map(|k| k as f64 * c.critical_time() / 50.0).collect();
    let (cc, ce, cp) = (
        c.coverage_curve(&grid).unwrap(),
        e.coverage_curve(&grid).unwrap(),
        p.coverage_curve(&grid).unwrap(),
    );
    for i in 0..grid.len() {
        assert!(cp.probabilities[i] >= ce.probabilities[i]);
        assert!(ce.probabilities[i] >= cc.probabilities[i]);
    }
    assert!(e.detection_probability() > c.detection_probability());
    assert!(p.critical_density() <= e.critical_density());
}

#[test]
fn elliptical_critical_density_falls_with_wind() {
    let mut s = reference(FireModelKind::Elliptical, 0.1);
    let mut prev = f64::INFINITY;
    for k in 0..=100 {
        s.growth.wind_x = k as f64 * 0.1;
        let lcr = s.critical_density();
        assert!(lcr <= prev, "v_x = {}", s.growth.wind_x);
        prev = lcr;
    }
}

#[test]
fn piriform_critical_density_is_not_monotone_in_wind() {
    let mut s = reference(FireModelKind::Piriform, 0.1);
    let curve: Vec<f64> = (0..=10)
        .map(|k| {
            s.growth.wind_x = k as f64;
            s.critical_density()
        })
        .collect();
    let rises = curve.windows(2).any(|w| w[1] > w[0]);
    let falls = curve.windows(2).any(|w| w[1] < w[0]);
    assert!(rises && falls, "{curve:?}");
}

#[test]
fn critical_density_increases_with_tau() {
    let mut s = reference(FireModelKind::Piriform, 0.1);
    let mut prev = 0.0;
    for tau in [0.5, 0.9, 0.99] {
        s.tau = tau;
        assert!(s.critical_density() > prev);
        prev = s.critical_density();
    }
}

proptest! {
    #[test]
    fn probability_monotone_in_density_and_time(
        kind in prop::sample::select(FireModelKind::ALL.to_vec()),
        l1 in 0.0f64..0.2, dl in 0.0f64..0.1,
        t1 in 0.0f64..10.0, dt in 0.0f64..5.0,
    ) {
        let s1 = reference(kind, l1);
        let s2 = reference(kind, l1 + dl);
        let p = |s: &FireScenario, t| s.sensing_probability(t).unwrap();
        prop_assert!(p(&s2, t1) >= p(&s1, t1));
        prop_assert!(p(&s1, t1 + dt) >= p(&s1, t1));
        prop_assert!(s2.detection_probability() >= s1.detection_probability());
        let v = p(&s1, t1);
        prop_assert!((0.0..=1.0).contains(&v));
    }

    #[test]
    fn probability_monotone_in_radius_moments(
        kind in prop::sample::select(FireModelKind::ALL.to_vec()),
        ri in 0.0f64..4.0, w in 0.0f64..4.0, dri in 0.0f64..1.0,
        t in 0.0f64..8.0,
    ) {
        // Shifting r_in up raises both E[r] and E[r²].
        let base = reference(kind, 0.05);
        let lo = FireScenario { radius: HybridRadiusModel::new(ri, ri + w).unwrap(), ..base };
        let hi = FireScenario { radius: HybridRadiusModel::new(ri + dri, ri + dri + w).unwrap(), ..base };
        prop_assert!(hi.radius.mean_radius() >= lo.radius.mean_radius());
        prop_assert!(hi.radius.mean_radius_squared() >= lo.radius.mean_radius_squared());
        prop_assert!(hi.sensing_probability(t).unwrap() >= lo.sensing_probability(t).unwrap());
        prop_assert!(hi.detection_probability() >= lo.detection_probability());
    }

    #[test]
    fn round_trip_any_scenario(
        kind in prop::sample::select(FireModelKind::ALL.to_vec()),
        tau in 0.01f64..0.999,
        alpha in 0.05f64..2.0,
        wind in 0.0f64..10.0,
        acr in 1.0f64..500.0,
    ) {
        let mut s = reference(kind, 0.0);
        s.tau = tau;
        s.growth.alpha = alpha;
        s.growth.wind_x = wind;
        s.critical_area = acr;
        let s = s.with_density(s.critical_density());
        prop_assert!((s.detection_probability() - tau).abs() < 1e-10);
    }
}
