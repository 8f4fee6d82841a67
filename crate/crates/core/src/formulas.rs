//! Closed-form entanglement and fidelity measures for quasi Bell channels.
//!
//! The noisy average fidelities are kept unsimplified, one match arm per
//! (noise, exposure, family) triple in [`analytic_average_fidelity`].

use serde::Serialize;

use crate::error::Result;
use crate::linalg;
use crate::noise::{self, Exposure, NoiseKind, NoiseScenario};
use crate::states::{build_quasi_bell, concurrence, Family, QuasiBellSpec};

/// Best average fidelity achievable with classical communication alone.
pub const CLASSICAL_FIDELITY: f64 = 2.0 / 3.0;

fn r2(spec: &QuasiBellSpec) -> f64 {
    spec.r() * spec.r()
}

fn cos2(spec: &QuasiBellSpec) -> f64 {
    (2.0 * spec.theta()).cos()
}

/// Closed-form concurrence of the (noiseless) quasi Bell state.
pub fn concurrence_closed_form(spec: &QuasiBellSpec) -> Result<f64> {
    spec.check_constructible()?;
    let r2 = r2(spec);
    let c = cos2(spec);
    Ok(match spec.family {
        Family::PsiPlus => (1.0 - r2) / (1.0 + r2),
        Family::PsiMinus => 1.0,
        Family::PhiPlus => (1.0 - r2) / (1.0 + r2 * c),
        Family::PhiMinus => (1.0 - r2) / (1.0 - r2 * c),
    })
}

/// Minimum assured fidelity, defined for optimal (channel-adapted) corrections.
pub fn masfi(spec: &QuasiBellSpec) -> Result<f64> {
    spec.check_constructible()?;
    let r2 = r2(spec);
    let t = spec.theta();
    Ok(match spec.family {
        Family::PsiPlus => 1.0 - r2,
        Family::PsiMinus => 1.0,
        Family::PhiPlus => (1.0 - r2) / (1.0 - r2 * t.sin().powi(2)),
        Family::PhiMinus => (1.0 - r2) / (1.0 - r2 * t.cos().powi(2)),
    })
}

/// `2C/(1+C)`, the compact form of [`masfi`].
pub fn masfi_from_concurrence(c: f64) -> f64 {
    2.0 * c / (1.0 + c)
}

/// Squared overlap of the channel state with each Bell state, in
/// [`Family::ALL`] order.
pub fn bell_overlaps(spec: &QuasiBellSpec) -> Result<[f64; 4]> {
    let chi = build_quasi_bell(spec)?;
    Ok(Family::ALL.map(|b| b.bell_state().inner(&chi).norm_sqr()))
}

/// Maximal singlet fraction: the largest of the four Bell overlaps.
pub fn singlet_fraction(spec: &QuasiBellSpec) -> Result<f64> {
    Ok(bell_overlaps(spec)?.into_iter().fold(0.0, f64::max).min(1.0))
}

/// Overlap with the Bell state the family is named after.
pub fn partner_fraction(spec: &QuasiBellSpec) -> Result<f64> {
    let idx = Family::ALL.iter().position(|&f| f == spec.family).unwrap();
    Ok(bell_overlaps(spec)?[idx])
}

/// Closed-form singlet fraction.
///
/// This is the overlap with the partner Bell state. It coincides with
/// [`singlet_fraction`] only while that overlap is the largest of the four,
/// e.g. for ψ+ only when `r² ≤ 1/2`.
pub fn singlet_fraction_closed_form(spec: &QuasiBellSpec) -> Result<f64> {
    spec.check_constructible()?;
    let r2 = r2(spec);
    let r4 = r2 * r2;
    let c = cos2(spec);
    Ok(match spec.family {
        Family::PsiPlus => (1.0 - r2) / (1.0 + r2),
        Family::PsiMinus => 1.0,
        Family::PhiPlus => (2.0 - 2.0 * r2 + r4 + c * (2.0 * r2 - r4)) / (2.0 * (1.0 + r2 * c)),
        Family::PhiMinus => (2.0 - 2.0 * r2 + r4 - c * (2.0 * r2 - r4)) / (2.0 * (1.0 - r2 * c)),
    })
}

/// `(2f + 1)/3` for a singlet fraction `f`.
pub fn optimal_fidelity_from_fraction(f: f64) -> f64 {
    (2.0 * f + 1.0) / 3.0
}

/// Optimal average fidelity from the maximal singlet fraction.
pub fn optimal_fidelity(spec: &QuasiBellSpec) -> Result<f64> {
    Ok(optimal_fidelity_from_fraction(singlet_fraction(spec)?))
}

/// Closed-form minimum of `F^tel` under the standard corrections (noiseless).
pub fn mfi_closed_form(spec: &QuasiBellSpec) -> Result<f64> {
    spec.check_constructible()?;
    let r2 = r2(spec);
    let c = cos2(spec);
    let t = spec.theta();
    Ok(match spec.family {
        Family::PsiPlus => (1.0 - r2) / (1.0 + r2),
        Family::PsiMinus => 1.0,
        Family::PhiPlus => (1.0 - r2 * (2.0 - r2) * t.sin().powi(2)) / (1.0 + r2 * c),
        Family::PhiMinus => (1.0 - r2 * (2.0 - r2) * t.cos().powi(2)) / (1.0 - r2 * c),
    })
}

/// `½|k± + m±|²` from the φ± expansion coefficients; equals [`mfi_closed_form`].
pub fn phi_half_k_plus_m(spec: &QuasiBellSpec) -> Result<f64> {
    let plus = match spec.family {
        Family::PhiPlus => true,
        Family::PhiMinus => false,
        _ => return singlet_fraction_closed_form(spec),
    };
    let c = crate::states::phi_coefficients(plus, spec.nonorth)?;
    Ok(0.5 * (c.k + c.m).norm_sqr())
}

/// Noiseless average fidelity under the standard corrections.
pub fn noiseless_average_fidelity(spec: &QuasiBellSpec) -> Result<f64> {
    spec.check_constructible()?;
    let r2 = r2(spec);
    let r4 = r2 * r2;
    let c = cos2(spec);
    Ok(match spec.family {
        Family::PsiPlus => (3.0 - r2) / (3.0 * (1.0 + r2)),
        Family::PsiMinus => 1.0,
        Family::PhiPlus => (3.0 - 2.0 * r2 + r4 - r2 * (r2 - 3.0) * c) / (3.0 * (1.0 + r2 * c)),
        Family::PhiMinus => (3.0 - 2.0 * r2 + r4 + r2 * (r2 - 3.0) * c) / (3.0 * (1.0 - r2 * c)),
    })
}

/// Closed-form average fidelity for any family and noise scenario.
pub fn analytic_average_fidelity(spec: &QuasiBellSpec, scenario: &NoiseScenario) -> Result<f64> {
    if scenario.is_noiseless() {
        return noiseless_average_fidelity(spec);
    }
    spec.check_constructible()?;
    Ok(noisy_closed_form(
        spec.family,
        scenario.kind(),
        scenario.exposure(),
        spec.r(),
        spec.theta(),
        scenario.damping(),
    ))
}

/// The Bob-only φ+ AD expression, evaluated as if it also covered all three
/// qubits. It does not: [`analytic_average_fidelity`] uses the φ− all-three
/// entry at θ + π/2, which the simulation confirms.
pub fn phi_plus_ad_all_three_bob_only_form(r: f64, theta: f64, eta: f64) -> f64 {
    noisy_closed_form(
        Family::PhiPlus,
        NoiseKind::AmplitudeDamping,
        Exposure::BobOnly,
        r,
        theta,
        eta,
    )
}

#[allow(clippy::too_many_lines)]
fn noisy_closed_form(family: Family, kind: NoiseKind, exposure: Exposure, r: f64, theta: f64, e: f64) -> f64 {
    use Exposure::*;
    use Family::*;
    use NoiseKind::*;

    let r2 = r * r;
    let r4 = r2 * r2;
    let c = (2.0 * theta).cos();
    let s = (1.0 - e).max(0.0).sqrt();
    let s3 = (1.0 - e).max(0.0).powf(1.5);

    match (kind, exposure, family) {
        (None, _, _) => unreachable!("noiseless scenarios are dispatched earlier"),

        // Bob's qubit under AD.
        (AmplitudeDamping, BobOnly, PhiPlus) => {
            -1.0 / (2.0 * (3.0 + 3.0 * r2 * c))
                * (-4.0 + r2 * (2.0 + 2.0 * s - 3.0 * e) - 2.0 * s
                    + 2.0 * r4 * (-1.0 + e)
                    + e
                    + 2.0 * r2 * (-2.0 - s + r2 * s) * c)
        }
        (AmplitudeDamping, BobOnly, PhiMinus) => {
            1.0 / (-6.0 + 6.0 * r2 * c)
                * (-4.0 + r2 * (2.0 + 2.0 * s - 3.0 * e) - 2.0 * s + 2.0 * r4 * (-1.0 + e) + e
                    - 2.0 * r2 * (-2.0 - s + r2 * s) * c)
        }
        (AmplitudeDamping, BobOnly, PsiPlus) => (4.0 + 2.0 * s - e + r2 * (-2.0 * s + e)) / (6.0 * (1.0 + r2)),
        // r-independent, with limit 1 at η = 0.
        (AmplitudeDamping, BobOnly, PsiMinus) => (4.0 + 2.0 * s - e) / 6.0,

        // Bob's qubit under PD.
        (PhaseDamping, BobOnly, PhiPlus) => (2.0 + s + r2 * (-s + (-1.0 + r2) / (1.0 + r2 * c))) / 3.0,
        (PhaseDamping, BobOnly, PhiMinus) => (2.0 + s - r2 * s + (r2 - r4) / (-1.0 + r2 * c)) / 3.0,
        (PhaseDamping, BobOnly, PsiPlus) => (2.0 + s - r2 * s) / (3.0 + 3.0 * r2),
        (PhaseDamping, BobOnly, PsiMinus) => (2.0 + s) / 3.0,

        // Both channel qubits under AD.
        (AmplitudeDamping, AliceAndBob, PhiPlus) => {
            1.0 / (3.0 + 3.0 * r2 * c)
                * (3.0 - 2.0 * r2 * (-1.0 + e).powi(2) + r4 * (-1.0 + e).powi(2) - 2.0 * e
                    + e * e
                    + r2 * (3.0 + r2 * (-1.0 + e) - e) * c)
        }
        (AmplitudeDamping, AliceAndBob, PhiMinus) => {
            -1.0 / (-3.0 + 3.0 * r2 * c)
                * (3.0 - 2.0 * r2 * (-1.0 + e).powi(2)
                    + r4 * (-1.0 + e).powi(2)
                    + (-2.0 + e) * e
                    + r2 * (-3.0 - r2 * (-1.0 + e) + e) * c)
        }
        (AmplitudeDamping, AliceAndBob, PsiPlus) => (3.0 - 2.0 * e + r2 * (-1.0 + 2.0 * e)) / (3.0 * (1.0 + r2)),
        (AmplitudeDamping, AliceAndBob, PsiMinus) => 1.0 - 2.0 * e / 3.0,

        // Both channel qubits under PD.
        (PhaseDamping, AliceAndBob, PhiPlus) => (3.0 - e + r2 * (-1.0 + e + (-1.0 + r2) / (1.0 + r2 * c))) / 3.0,
        (PhaseDamping, AliceAndBob, PhiMinus) => (3.0 + r2 * (-1.0 + e) - e + (r2 - r4) / (-1.0 + r2 * c)) / 3.0,
        (PhaseDamping, AliceAndBob, PsiPlus) => (3.0 + r2 * (-1.0 + e) - e) / (3.0 * (1.0 + r2)),
        (PhaseDamping, AliceAndBob, PsiMinus) => 1.0 - e / 3.0,

        // All three qubits under AD.
        (AmplitudeDamping, AllThree, PhiPlus) => ad_all_three_phi_minus(r2, r4, -c, s, e),
        (AmplitudeDamping, AllThree, PhiMinus) => ad_all_three_phi_minus(r2, r4, c, s, e),
        (AmplitudeDamping, AllThree, PsiPlus) => {
            1.0 / (6.0 * (1.0 + r2))
                * (2.0 * (2.0 + s) + e * (-3.0 - 2.0 * s + 2.0 * e) + r2 * (-2.0 * s + (5.0 + 2.0 * s - 2.0 * e) * e))
        }
        (AmplitudeDamping, AllThree, PsiMinus) => (4.0 + 2.0 * s - 3.0 * e - 2.0 * s * e + 2.0 * e * e) / 6.0,

        // All three qubits under PD.
        (PhaseDamping, AllThree, PhiPlus) => {
            1.0 / (3.0 + 3.0 * r2 * c)
                * (2.0 + r4 + s - s * e + r2 * (-1.0 - s + s * e) + r2 * (2.0 + s - r2 * s3 - s * e) * c)
        }
        (PhaseDamping, AllThree, PhiMinus) => {
            (2.0 + s - r2 * s - s * e + r2 * s * e + (r2 - r4) / (-1.0 + r2 * c)) / 3.0
        }
        (PhaseDamping, AllThree, PsiPlus) => (2.0 + s + s * (r2 * (-1.0 + e) - e)) / (3.0 * (1.0 + r2)),
        (PhaseDamping, AllThree, PsiMinus) => (2.0 + s3) / 3.0,
    }
}

/// The φ− all-three AD expression; `c` is `cos 2θ`.
fn ad_all_three_phi_minus(r2: f64, r4: f64, c: f64, s: f64, e: f64) -> f64 {
    1.0 / (2.0 * (-3.0 + 3.0 * r2 * c))
        * (-2.0 * (2.0 + s) + e * (3.0 + 2.0 * s + 2.0 * (-2.0 + e) * e)
            - 2.0 * r2 * (-1.0 + e) * (1.0 + s + e * (-3.0 + 2.0 * e))
            + 2.0 * r4 * (-1.0 + e).powi(3)
            + r2 * (4.0 + 2.0 * s + 2.0 * s * (r2 * (-1.0 + e) - e) - e) * c)
}

/// Every measure for one channel and noise scenario.
///
/// `concurrence`, `masfi`, `singlet_fraction` and `f_opt` describe the ideal
/// channel state. `f_ave` is the closed form for the scenario. `mfi` is the
/// closed form when noiseless and the simulated minimum otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FidelityReport {
    pub spec: QuasiBellSpec,
    pub scenario: NoiseScenario,
    pub concurrence: f64,
    pub masfi: f64,
    pub mfi: f64,
    pub f_ave: f64,
    pub singlet_fraction: f64,
    pub f_opt: f64,
}

impl FidelityReport {
    pub fn evaluate(spec: &QuasiBellSpec, scenario: &NoiseScenario) -> Result<Self> {
        let chi = build_quasi_bell(spec)?;
        // Keep the channel valid as a density operator before reporting on it.
        linalg::projector(&chi)?;
        let concurrence = concurrence(&chi)?;
        let singlet_fraction = singlet_fraction(spec)?;
        let mfi = if scenario.is_noiseless() {
            mfi_closed_form(spec)?
        } else {
            noise::noisy_min_fidelity(spec, scenario)?.0
        };
        Ok(Self {
            spec: *spec,
            scenario: *scenario,
            concurrence,
            masfi: masfi(spec)?,
            mfi,
            f_ave: analytic_average_fidelity(spec, scenario)?,
            singlet_fraction,
            f_opt: optimal_fidelity_from_fraction(singlet_fraction),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, PI};

    fn spec(f: Family, r: f64, t: f64) -> QuasiBellSpec {
        QuasiBellSpec::new(f, r, t).unwrap()
    }

    #[test]
    fn masfi_point_values() {
        assert_eq!(masfi(&spec(Family::PsiPlus, 0.5, 0.0)).unwrap(), 0.75);
        assert_eq!(masfi(&spec(Family::PsiPlus, 1.0, 0.0)).unwrap(), 0.0);
        for r in [0.0, 0.4, 0.99] {
            assert!((masfi(&spec(Family::PhiPlus, r, FRAC_PI_2)).unwrap() - 1.0).abs() < 1e-12);
        }
        assert_eq!(masfi(&spec(Family::PsiMinus, 0.7, 1.0)).unwrap(), 1.0);
    }

    #[test]
    fn masfi_is_compact_form_of_concurrence() {
        for fam in Family::ALL {
            for r in [0.0, 0.3, 0.6, 0.9] {
                for t in [0.0, 0.5, FRAC_PI_3, 2.5] {
                    let s = spec(fam, r, t);
                    let c = concurrence_closed_form(&s).unwrap();
                    assert!((masfi(&s).unwrap() - masfi_from_concurrence(c)).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn singlet_fraction_examples() {
        assert!((singlet_fraction(&spec(Family::PsiPlus, 0.5, 0.0)).unwrap() - 0.6).abs() < 1e-12);
        assert!((singlet_fraction(&spec(Family::PsiMinus, 0.8, 2.0)).unwrap() - 1.0).abs() < 1e-12);
        let s = spec(Family::PhiPlus, 0.5, FRAC_PI_3);
        assert!((singlet_fraction(&s).unwrap() - singlet_fraction_closed_form(&s).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn closed_form_fraction_is_the_partner_overlap() {
        for fam in Family::ALL {
            for r in [0.0, 0.3, 0.6, 0.8, 0.95] {
                for t in [0.0, 0.5, FRAC_PI_3, FRAC_PI_2, 2.5, 4.0] {
                    let s = spec(fam, r, t);
                    let a = singlet_fraction_closed_form(&s).unwrap();
                    let b = partner_fraction(&s).unwrap();
                    assert!((a - b).abs() < 1e-12, "{fam} r={r} t={t}: {a} vs {b}");
                }
            }
        }
    }

    #[test]
    fn closed_form_fraction_is_maximal_only_for_small_overlap() {
        // ψ+ at r = 0.9: the φ± overlaps r²/(1+r²) exceed (1−r²)/(1+r²).
        let s = spec(Family::PsiPlus, 0.9, 0.0);
        let max = singlet_fraction(&s).unwrap();
        assert!((max - 0.81 / 1.81).abs() < 1e-12);
        assert!(max > singlet_fraction_closed_form(&s).unwrap() + 0.1);
        for r in [0.0, 0.3, 0.5, 0.7] {
            let s = spec(Family::PsiPlus, r, 1.0);
            assert!((singlet_fraction(&s).unwrap() - singlet_fraction_closed_form(&s).unwrap()).abs() < 1e-12);
        }
    }

    #[test]
    fn optimal_fidelity_examples() {
        let f = optimal_fidelity(&spec(Family::PsiPlus, 0.5, 0.0)).unwrap();
        assert!((f - 11.0 / 15.0).abs() < 1e-12);
        assert!((optimal_fidelity(&spec(Family::PsiMinus, 0.5, 0.0)).unwrap() - 1.0).abs() < 1e-12);
        let s = spec(Family::PhiMinus, 0.5, 0.0);
        let f_opt = optimal_fidelity(&s).unwrap();
        assert!((f_opt - noiseless_average_fidelity(&s).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn noiseless_average_examples() {
        let s = spec(Family::PsiPlus, 0.5, 0.0);
        assert!((noiseless_average_fidelity(&s).unwrap() - 11.0 / 15.0).abs() < 1e-15);
        for r in [0.2, 0.6, 0.9] {
            let s = spec(Family::PhiPlus, r, 0.0);
            let expected = (3.0 + r * r) / (3.0 * (1.0 + r * r));
            assert!((noiseless_average_fidelity(&s).unwrap() - expected).abs() < 1e-14);
        }
    }

    #[test]
    fn noisy_point_values() {
        let s = spec(Family::PsiMinus, 0.4, 0.0);
        let sc = |k, e, x| NoiseScenario::new(k, e, x).unwrap();
        for eta in [0.0, 0.25, 1.0] {
            let got =
                analytic_average_fidelity(&s, &sc(NoiseKind::AmplitudeDamping, eta, Exposure::AliceAndBob)).unwrap();
            assert!((got - (1.0 - 2.0 * eta / 3.0)).abs() < 1e-15);
            let got = analytic_average_fidelity(&s, &sc(NoiseKind::PhaseDamping, eta, Exposure::AllThree)).unwrap();
            assert!((got - (2.0 + (1.0 - eta).powf(1.5)) / 3.0).abs() < 1e-15);
        }
        let got = analytic_average_fidelity(&s, &sc(NoiseKind::AmplitudeDamping, 1.0, Exposure::BobOnly)).unwrap();
        assert!((got - 0.5).abs() < 1e-15);
        for r in [0.0, 0.5, 0.9] {
            let p = spec(Family::PsiPlus, r, 0.3);
            let got =
                analytic_average_fidelity(&p, &sc(NoiseKind::AmplitudeDamping, 1.0, Exposure::AliceAndBob)).unwrap();
            assert!((got - 1.0 / 3.0).abs() < 1e-15);
        }
    }

    #[test]
    fn every_noisy_form_reduces_at_zero_damping() {
        for fam in Family::ALL {
            for kind in [NoiseKind::AmplitudeDamping, NoiseKind::PhaseDamping] {
                for exp in Exposure::ALL {
                    for r in [0.0, 0.25, 0.5, 0.75, 0.95] {
                        for t in [0.0, PI / 6.0, FRAC_PI_3, FRAC_PI_2, 2.0 * FRAC_PI_3] {
                            let Ok(s) = QuasiBellSpec::new(fam, r, t) else { continue };
                            let clean = analytic_average_fidelity(&s, &NoiseScenario::noiseless()).unwrap();
                            let noisy =
                                analytic_average_fidelity(&s, &NoiseScenario::new(kind, 0.0, exp).unwrap()).unwrap();
                            assert!((clean - noisy).abs() < 1e-12, "{fam} {kind} {exp} r={r} t={t}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn phi_forms_swap_under_quarter_turn() {
        for kind in [NoiseKind::AmplitudeDamping, NoiseKind::PhaseDamping] {
            for exp in Exposure::ALL {
                for eta in [0.0, 0.3, 0.8, 1.0] {
                    for t in [0.1, 0.7, 2.0] {
                        let sc = NoiseScenario::new(kind, eta, exp).unwrap();
                        let a = analytic_average_fidelity(&spec(Family::PhiPlus, 0.6, t), &sc).unwrap();
                        let b = analytic_average_fidelity(&spec(Family::PhiMinus, 0.6, t + FRAC_PI_2), &sc).unwrap();
                        assert!((a - b).abs() < 1e-12, "{kind} {exp} eta={eta} t={t}");
                    }
                }
            }
        }
    }

    #[test]
    fn bob_only_form_is_wrong_for_all_three() {
        let (r, t, eta) = (0.5, FRAC_PI_3, 0.5);
        let bob = NoiseScenario::new(NoiseKind::AmplitudeDamping, eta, Exposure::BobOnly).unwrap();
        let all = NoiseScenario::new(NoiseKind::AmplitudeDamping, eta, Exposure::AllThree).unwrap();
        let s = spec(Family::PhiPlus, r, t);
        let reused = phi_plus_ad_all_three_bob_only_form(r, t, eta);
        assert_eq!(reused, analytic_average_fidelity(&s, &bob).unwrap());
        assert!((reused - analytic_average_fidelity(&s, &all).unwrap()).abs() > 1e-3);
    }

    #[test]
    fn half_k_plus_m_matches_minimum_and_partner_overlap() {
        for fam in [Family::PhiPlus, Family::PhiMinus] {
            for r in [0.0, 0.3, 0.5, 0.8, 0.95] {
                for t in [0.0, 0.3, FRAC_PI_3, 1.2, 2.5] {
                    let Ok(s) = QuasiBellSpec::new(fam, r, t) else { continue };
                    let half = phi_half_k_plus_m(&s).unwrap();
                    assert!((half - singlet_fraction_closed_form(&s).unwrap()).abs() < 1e-12);
                    assert!((half - mfi_closed_form(&s).unwrap()).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn degenerate_specs_propagate() {
        let s = QuasiBellSpec {
            family: Family::PhiMinus,
            nonorth: crate::states::NonOrthogonality::new(1.0, 0.0).unwrap(),
        };
        assert!(masfi(&s).is_err());
        assert!(singlet_fraction(&s).is_err());
        assert!(analytic_average_fidelity(&s, &NoiseScenario::noiseless()).is_err());
        assert!(FidelityReport::evaluate(&s, &NoiseScenario::noiseless()).is_err());
    }

    #[test]
    fn report_bundles_measures() {
        let rep = FidelityReport::evaluate(&spec(Family::PsiPlus, 0.5, 0.0), &NoiseScenario::noiseless()).unwrap();
        assert_eq!(rep.masfi, 0.75);
        assert!((rep.f_ave - 11.0 / 15.0).abs() < 1e-15);
        assert!((rep.concurrence - 0.6).abs() < 1e-12);
        assert!((rep.mfi - 0.6).abs() < 1e-12);
        assert!((rep.f_opt - (2.0 * rep.singlet_fraction + 1.0) / 3.0).abs() < 1e-12);
    }
}
