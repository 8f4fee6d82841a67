//! Self-check suites run by `quasibell verify`.

use std::f64::consts::{FRAC_PI_2, PI, TAU};
use std::fmt::Write as _;

use quasibell::formulas::{analytic_average_fidelity, optimal_fidelity};
use quasibell::noise::{kraus_for, noisy_average_fidelity, noisy_average_fidelity_with, NoisyTeleportation};
use quasibell::protocol::teleport_joint;
use quasibell::quadrature::SphereQuadrature;
use quasibell::states::build_quasi_bell;
use quasibell::{Exposure, Family, InputQubit, NoiseKind, NoiseScenario, QuasiBellSpec};

use crate::grid::linspace;

/// Names accepted by `--suite`, in run order.
pub const SUITES: [&str; 9] = [
    "normalization",
    "kraus",
    "density",
    "probabilities",
    "quadrature",
    "swap",
    "optimality",
    "reduction",
    "equivalence",
];

const MAX_LISTED_FAILURES: usize = 5;

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub tolerance: f64,
    pub checks: usize,
    pub max_deviation: f64,
    pub failures: Vec<String>,
}

impl SuiteResult {
    fn new(name: &'static str, tolerance: f64) -> Self {
        Self {
            name,
            tolerance,
            checks: 0,
            max_deviation: 0.0,
            failures: Vec::new(),
        }
    }

    /// Records `deviation` for the case described by `case`.
    fn check(&mut self, deviation: f64, case: impl FnOnce() -> String) {
        self.checks += 1;
        if deviation.is_nan() || deviation > self.max_deviation {
            self.max_deviation = deviation;
        }
        if deviation.is_nan() || deviation >= self.tolerance {
            self.failures.push(format!("{} (deviation {deviation:.3e})", case()));
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn scenarios(etas: &[f64]) -> Vec<NoiseScenario> {
    let mut out = vec![NoiseScenario::noiseless()];
    for kind in [NoiseKind::AmplitudeDamping, NoiseKind::PhaseDamping] {
        for exposure in Exposure::ALL {
            for &eta in etas {
                out.push(NoiseScenario::new(kind, eta, exposure).expect("grid damping rates lie in [0, 1]"));
            }
        }
    }
    out
}

fn describe(spec: &QuasiBellSpec, sc: &NoiseScenario) -> String {
    if sc.is_noiseless() {
        format!("{} r={} theta={} noise=none", spec.family, spec.r(), spec.theta())
    } else {
        format!(
            "{} r={} theta={} noise={} eta={} exposure={}",
            spec.family,
            spec.r(),
            spec.theta(),
            sc.kind(),
            sc.damping(),
            sc.exposure()
        )
    }
}

/// Non-degenerate specs on an `r × θ` grid.
fn specs(family: Family, rs: &[f64], thetas: &[f64]) -> Vec<QuasiBellSpec> {
    let mut out = Vec::new();
    for &r in rs {
        for &t in thetas {
            if let Ok(s) = QuasiBellSpec::new(family, r, t) {
                out.push(s);
            }
        }
    }
    out
}

fn coarse_grid() -> (Vec<f64>, Vec<f64>, Vec<f64>) {
    (
        vec![0.0, 0.25, 0.5, 0.75, 0.95],
        vec![0.0, PI / 6.0, PI / 3.0, PI / 2.0, 2.0 * PI / 3.0],
        vec![0.0, 0.2, 0.5, 0.8, 1.0],
    )
}

/// The 21 × 24 grid `r ∈ [0, 0.95]`, `θ ∈ [0, 2π)`.
pub fn fine_grid() -> (Vec<f64>, Vec<f64>) {
    (
        linspace(0.0, 0.95, 21),
        (0..24).map(|k| TAU * k as f64 / 24.0).collect(),
    )
}

fn sample_inputs() -> Vec<InputQubit> {
    vec![
        InputQubit::new(0.0, 0.0),
        InputQubit::new(PI, 0.0),
        InputQubit::new(FRAC_PI_2, 0.0),
        InputQubit::new(FRAC_PI_2, FRAC_PI_2),
        InputQubit::new(1.1, 2.3),
        InputQubit::new(2.4, 5.0),
    ]
}

fn normalization() -> SuiteResult {
    let mut res = SuiteResult::new("normalization", 1e-12);
    let (rs, thetas) = fine_grid();
    for fam in Family::ALL {
        for spec in specs(fam, &rs, &thetas) {
            let chi = build_quasi_bell(&spec).expect("spec checked constructible");
            res.check((chi.norm_sqr() - 1.0).abs(), || {
                describe(&spec, &NoiseScenario::noiseless())
            });
        }
    }
    res
}

fn kraus() -> SuiteResult {
    let mut res = SuiteResult::new("kraus", 1e-12);
    for kind in [NoiseKind::AmplitudeDamping, NoiseKind::PhaseDamping] {
        for eta in linspace(0.0, 1.0, 101) {
            let err = kraus_for(kind, eta).map_or(f64::NAN, |k| k.completeness_error());
            res.check(err, || format!("{kind} eta={eta}"));
        }
    }
    res
}

fn noisy_cases() -> Vec<(QuasiBellSpec, NoiseScenario)> {
    let mut out = Vec::new();
    for fam in Family::ALL {
        for spec in specs(fam, &[0.0, 0.5, 0.9], &[0.0, PI / 3.0, 2.0]) {
            for sc in scenarios(&[0.0, 0.3, 0.7, 1.0]) {
                out.push((spec, sc));
            }
        }
    }
    out
}

fn density() -> SuiteResult {
    let mut res = SuiteResult::new("density", 1e-10);
    for (spec, sc) in noisy_cases() {
        let tel = NoisyTeleportation::new(&spec, &sc).expect("case built from valid parameters");
        for input in sample_inputs() {
            let rho = tel.joint(&input);
            let dev = (rho.trace().re - 1.0)
                .abs()
                .max(rho.trace().im.abs())
                .max(rho.hermiticity_error())
                .max((-rho.min_eigenvalue()).max(0.0));
            res.check(dev, || {
                format!("{} input=({}, {})", describe(&spec, &sc), input.theta_p, input.phi_p)
            });
        }
    }
    res
}

fn probabilities() -> SuiteResult {
    let mut res = SuiteResult::new("probabilities", 1e-12);
    for (spec, sc) in noisy_cases() {
        let tel = NoisyTeleportation::new(&spec, &sc).expect("case built from valid parameters");
        for input in sample_inputs() {
            let dev = match teleport_joint(&tel.joint(&input), &input, spec.family) {
                Ok(recs) => (recs.iter().map(|r| r.probability).sum::<f64>() - 1.0).abs(),
                Err(_) => f64::NAN,
            };
            res.check(dev, || {
                format!("{} input=({}, {})", describe(&spec, &sc), input.theta_p, input.phi_p)
            });
        }
    }
    res
}

fn quadrature() -> SuiteResult {
    let mut res = SuiteResult::new("quadrature", 1e-12);
    let base = SphereQuadrature::default();
    let doubled = SphereQuadrature::new(
        2 * SphereQuadrature::DEFAULT_THETA_NODES,
        2 * SphereQuadrature::DEFAULT_PHI_NODES,
    );
    for fam in Family::ALL {
        for spec in specs(fam, &[0.0, 0.5, 0.9], &[0.0, PI / 3.0]) {
            for sc in scenarios(&[0.5]) {
                let a = noisy_average_fidelity_with(&base, &spec, &sc).unwrap_or(f64::NAN);
                let b = noisy_average_fidelity_with(&doubled, &spec, &sc).unwrap_or(f64::NAN);
                res.check((a - b).abs(), || describe(&spec, &sc));
            }
        }
    }
    res
}

fn swap() -> SuiteResult {
    let mut res = SuiteResult::new("swap", 1e-9);
    let (rs, thetas, etas) = coarse_grid();
    for sc in scenarios(&etas) {
        for plus in specs(Family::PhiPlus, &rs, &thetas) {
            let Ok(minus) = QuasiBellSpec::new(Family::PhiMinus, plus.r(), plus.theta() + FRAC_PI_2) else {
                continue;
            };
            let ana = analytic_average_fidelity(&plus, &sc)
                .and_then(|a| Ok((a - analytic_average_fidelity(&minus, &sc)?).abs()))
                .unwrap_or(f64::NAN);
            let sim = noisy_average_fidelity(&plus, &sc)
                .and_then(|a| Ok((a - noisy_average_fidelity(&minus, &sc)?).abs()))
                .unwrap_or(f64::NAN);
            res.check(ana.max(sim), || describe(&plus, &sc));
        }
    }
    res
}

fn optimality() -> SuiteResult {
    let mut res = SuiteResult::new("optimality", 1e-9);
    let (rs, thetas) = fine_grid();
    let sc = NoiseScenario::noiseless();
    for fam in Family::ALL {
        for spec in specs(fam, &rs, &thetas) {
            let sim = noisy_average_fidelity(&spec, &sc).unwrap_or(f64::NAN);
            let opt = optimal_fidelity(&spec).unwrap_or(f64::NAN);
            res.check((sim - opt).abs(), || describe(&spec, &sc));
        }
    }
    res
}

fn reduction() -> SuiteResult {
    let mut res = SuiteResult::new("reduction", 1e-12);
    let (rs, thetas, _) = coarse_grid();
    for fam in Family::ALL {
        for spec in specs(fam, &rs, &thetas) {
            let clean = analytic_average_fidelity(&spec, &NoiseScenario::noiseless()).unwrap_or(f64::NAN);
            for sc in scenarios(&[0.0]).into_iter().skip(1) {
                let noisy = analytic_average_fidelity(&spec, &sc).unwrap_or(f64::NAN);
                res.check((noisy - clean).abs(), || describe(&spec, &sc));
            }
        }
    }
    res
}

fn equivalence() -> SuiteResult {
    let mut res = SuiteResult::new("equivalence", 1e-9);
    let (rs, thetas, etas) = coarse_grid();
    for fam in Family::ALL {
        for spec in specs(fam, &rs, &thetas) {
            for sc in scenarios(&etas) {
                let sim = noisy_average_fidelity(&spec, &sc).unwrap_or(f64::NAN);
                let ana = analytic_average_fidelity(&spec, &sc).unwrap_or(f64::NAN);
                res.check((sim - ana).abs(), || describe(&spec, &sc));
            }
        }
    }
    res
}

pub fn run_suite(name: &str) -> Option<SuiteResult> {
    Some(match name {
        "normalization" => normalization(),
        "kraus" => kraus(),
        "density" => density(),
        "probabilities" => probabilities(),
        "quadrature" => quadrature(),
        "swap" => swap(),
        "optimality" => optimality(),
        "reduction" => reduction(),
        "equivalence" => equivalence(),
        _ => return None,
    })
}

/// The pass/fail table followed by up to five failing cases per suite.
pub fn render(results: &[SuiteResult]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<14} {:>7} {:>10} {:>12}  status",
        "suite", "checks", "tolerance", "max_dev"
    );
    for r in results {
        let _ = writeln!(
            out,
            "{:<14} {:>7} {:>10.1e} {:>12.3e}  {}",
            r.name,
            r.checks,
            r.tolerance,
            r.max_deviation,
            if r.passed() { "PASS" } else { "FAIL" }
        );
    }
    for r in results.iter().filter(|r| !r.passed()) {
        let _ = writeln!(out, "\n{}: {} failing case(s)", r.name, r.failures.len());
        for f in r.failures.iter().take(MAX_LISTED_FAILURES) {
            let _ = writeln!(out, "  {f}");
        }
        if r.failures.len() > MAX_LISTED_FAILURES {
            let _ = writeln!(out, "  ... {} more", r.failures.len() - MAX_LISTED_FAILURES);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fast_suites_pass() {
        for name in ["normalization", "kraus", "reduction"] {
            let r = run_suite(name).unwrap();
            assert!(r.passed(), "{}", render(&[r]));
            assert!(r.checks > 0);
        }
        assert!(run_suite("nope").is_none());
    }

    #[test]
    fn failures_are_listed_with_parameters() {
        let mut r = SuiteResult::new("demo", 1e-9);
        r.check(1e-12, || "fine".into());
        r.check(1e-3, || "psi+ r=0.9".into());
        r.check(f64::NAN, || "broken".into());
        assert!(!r.passed());
        assert_eq!(r.checks, 3);
        let text = render(&[r]);
        assert!(text.contains("FAIL"));
        assert!(text.contains("psi+ r=0.9 (deviation 1.000e-3)"));
        assert!(text.contains("broken"));
    }
}
