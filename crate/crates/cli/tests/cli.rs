use std::path::PathBuf;
use std::process::{Command, Output};

use firewsn_cli::ScenarioConfig;
use proptest::prelude::*;

fn firewsn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_firewsn"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("firewsn-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn analyze_defaults_print_critical_times() {
    let out = firewsn(&["analyze"]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stdout.starts_with("model[-],t[s],"));
    assert!(stderr.contains("circular") && stderr.contains("t_cr = 7.64585613 s"), "{stderr}");
    assert!(stderr.contains("t_cr = 6.70585943 s"));
}

#[test]
fn model_flag_and_out_file() {
    let path = scratch("elliptical.csv");
    let out = firewsn(&["analyze", "--model", "elliptical", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let csv = std::fs::read_to_string(&path).unwrap();
    assert!(csv.lines().skip(1).all(|l| l.starts_with("elliptical,")));
    assert!(!csv.contains('\r'));
    assert!(String::from_utf8(out.stdout).unwrap().contains("t_cr = 6.70585943 s"));
}

#[test]
fn config_errors_exit_with_two() {
    let path = scratch("broken.toml");
    std::fs::write(&path, "[scenario]\ndensity = 0.1\nalpha = [\n").unwrap();
    let out = firewsn(&["analyze", "--config", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("line"), "{stderr}");

    std::fs::write(&path, "[scenario]\nalpha = -1.0\n").unwrap();
    let out = firewsn(&["sweep", "--config", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("alpha"));

    let out = firewsn(&["analyze", "--config", "/nonexistent/firewsn.toml"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_model_is_rejected() {
    let out = firewsn(&["analyze", "--model", "square"]);
    assert!(!out.status.success());
}

#[test]
fn density_sweep_endpoints() {
    let path = scratch("density.toml");
    std::fs::write(
        &path,
        "models = [\"circular\"]\n[sweep]\naxis = \"density\"\nstart = 0.01\nstop = 0.1\nsteps = 10\n",
    )
    .unwrap();
    let out = firewsn(&["sweep", "--config", path.to_str().unwrap()]);
    assert!(out.status.success());
    let csv = String::from_utf8(out.stdout).unwrap();
    assert!(csv.starts_with("model[-],lambda[1/m^2],t_cr[s],lambda_cr[1/m^2],p_f[1]\n"));
    let pf: Vec<f64> = csv
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(4).unwrap().parse().unwrap())
        .collect();
    assert!(pf.windows(2).all(|w| w[1] > w[0]));
    // 1 − exp(−λ E[A(K(t_cr) ⊕ S)]) with E[A(K(t_cr) ⊕ S)] = 86.1457741 m².
    assert!((pf[0] - 0.577_454_329).abs() < 1e-8);
    assert!((pf[9] - 0.999_818_559).abs() < 1e-8);
}

#[test]
fn simulate_small_run_passes_band() {
    let path = scratch("sim.toml");
    std::fs::write(&path, "[simulation]\nrealizations = 2000\n[time_grid]\nsteps = 6\n").unwrap();
    let out = firewsn(&["simulate", "--config", path.to_str().unwrap(), "--model", "circular", "--seed", "9"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let csv = String::from_utf8(out.stdout).unwrap();
    assert!(csv.starts_with("model[-],t[s],p_analytic[1],p_empirical[1],stderr[1],n[1],in_band[1]\n"));
    assert_eq!(csv.lines().count(), 7);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn config_round_trip(
        density in 0.0f64..1.0,
        r_in in 0.0f64..5.0,
        extra in 0.0f64..5.0,
        wind in 0.0f64..20.0,
        tau in 0.01f64..0.99,
        stop in proptest::option::of(0.0f64..20.0),
        steps in 1usize..100,
        seed in 0..=i64::MAX as u64,
        values in proptest::option::of(proptest::collection::vec(0.0f64..1.0, 1..5)),
    ) {
        let mut c = ScenarioConfig::default();
        c.scenario.density = density;
        c.scenario.r_in = r_in;
        c.scenario.r_out = r_in + extra;
        c.scenario.wind_x = wind;
        c.scenario.tau = tau;
        c.time_grid.stop = stop;
        c.time_grid.steps = steps;
        c.simulation.seed = seed;
        c.sweep.values = values;
        c.models = vec!["piriform".into()];
        let text = c.to_toml().unwrap();
        let back = ScenarioConfig::parse(&text, "<round-trip>").unwrap();
        prop_assert_eq!(&back, &c);
        prop_assert_eq!(back.to_toml().unwrap(), text);
    }
}
