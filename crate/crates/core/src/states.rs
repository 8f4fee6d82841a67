//! Quasi Bell states and general entangled non-orthogonal states, expressed
//! in the orthonormal logical basis `|0⟩ = |α⟩`, `|1⟩ ∝ |β⟩ - ⟨α|β⟩|α⟩`.

use std::f64::consts::{FRAC_1_SQRT_2, TAU};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{StateVector, C64};

/// Normalization denominators at or below this value are rejected.
pub const DEGENERACY_THRESHOLD: f64 = 1e-12;

/// The four Bell-type families, in the order ψ+, ψ−, φ+, φ−.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "psi+")]
    PsiPlus,
    #[serde(rename = "psi-")]
    PsiMinus,
    #[serde(rename = "phi+")]
    PhiPlus,
    #[serde(rename = "phi-")]
    PhiMinus,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::PsiPlus, Family::PsiMinus, Family::PhiPlus, Family::PhiMinus];

    pub fn name(self) -> &'static str {
        match self {
            Family::PsiPlus => "psi+",
            Family::PsiMinus => "psi-",
            Family::PhiPlus => "phi+",
            Family::PhiMinus => "phi-",
        }
    }

    /// The orthogonal Bell state `(|01⟩ ± |10⟩)/√2` or `(|00⟩ ± |11⟩)/√2`.
    pub fn bell_state(self) -> StateVector {
        let h = C64::new(FRAC_1_SQRT_2, 0.0);
        let z = C64::new(0.0, 0.0);
        let amps = match self {
            Family::PsiPlus => vec![z, h, h, z],
            Family::PsiMinus => vec![z, h, -h, z],
            Family::PhiPlus => vec![h, z, z, h],
            Family::PhiMinus => vec![h, z, z, -h],
        };
        StateVector::new(amps).expect("Bell states are well formed")
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "psi+" => Ok(Family::PsiPlus),
            "psi-" => Ok(Family::PsiMinus),
            "phi+" => Ok(Family::PhiPlus),
            "phi-" => Ok(Family::PhiMinus),
            _ => Err(format!("unknown family `{s}` (expected psi+, psi-, phi+ or phi-)")),
        }
    }
}

/// Overlap `⟨α|β⟩ = r e^{iθ}` of the two non-orthogonal single-system states.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NonOrthogonality {
    r: f64,
    theta: f64,
}

impl NonOrthogonality {
    pub fn new(r: f64, theta: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&r) {
            return Err(Error::InvalidParameter {
                name: "r",
                value: r,
                domain: "[0, 1]",
            });
        }
        if !theta.is_finite() {
            return Err(Error::InvalidParameter {
                name: "theta",
                value: theta,
                domain: "finite reals",
            });
        }
        Ok(Self { r, theta })
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    /// θ exactly as given.
    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// θ reduced into `[0, 2π)`, for display.
    pub fn theta_reduced(&self) -> f64 {
        let t = self.theta.rem_euclid(TAU);
        if t >= TAU {
            0.0
        } else {
            t
        }
    }

    pub fn overlap(&self) -> C64 {
        C64::from_polar(self.r, self.theta)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuasiBellSpec {
    pub family: Family,
    pub nonorth: NonOrthogonality,
}

impl QuasiBellSpec {
    pub fn new(family: Family, r: f64, theta: f64) -> Result<Self> {
        let spec = Self {
            family,
            nonorth: NonOrthogonality::new(r, theta)?,
        };
        spec.check_constructible()?;
        Ok(spec)
    }

    pub fn r(&self) -> f64 {
        self.nonorth.r
    }

    pub fn theta(&self) -> f64 {
        self.nonorth.theta
    }

    /// The squared inverse normalization of the family: `2(1 ± r²)` for ψ±,
    /// `2(1 ± r² cos 2θ)` for φ±.
    pub fn normalization_denominator(&self) -> f64 {
        let r2 = self.r() * self.r();
        let c2 = (2.0 * self.theta()).cos();
        match self.family {
            Family::PsiPlus => 2.0 * (1.0 + r2),
            Family::PsiMinus => 2.0 * (1.0 - r2),
            Family::PhiPlus => 2.0 * (1.0 + r2 * c2),
            Family::PhiMinus => 2.0 * (1.0 - r2 * c2),
        }
    }

    pub fn check_constructible(&self) -> Result<()> {
        let d = self.normalization_denominator();
        if d <= DEGENERACY_THRESHOLD {
            return Err(Error::DegenerateState {
                normalization: match self.family {
                    Family::PsiPlus => "N+^-2 = 2(1+r^2)",
                    Family::PsiMinus => "N-^-2 = 2(1-r^2)",
                    Family::PhiPlus => "M+^-2 = 2(1+r^2 cos 2theta)",
                    Family::PhiMinus => "M-^-2 = 2(1-r^2 cos 2theta)",
                },
                value: d,
                threshold: DEGENERACY_THRESHOLD,
            });
        }
        Ok(())
    }
}

/// Coefficients `(k, l, m)` of `|φ±⟩ = k|00⟩ ± l(|01⟩+|10⟩) ± m|11⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhiCoefficients {
    pub k: C64,
    pub l: C64,
    pub m: C64,
}

/// Evaluates k±, l±, m± for the φ+ (`plus = true`) or φ− family.
pub fn phi_coefficients(plus: bool, nonorth: NonOrthogonality) -> Result<PhiCoefficients> {
    let family = if plus { Family::PhiPlus } else { Family::PhiMinus };
    let spec = QuasiBellSpec { family, nonorth };
    spec.check_constructible()?;
    let (r, theta) = (nonorth.r, nonorth.theta);
    let sign = if plus { 1.0 } else { -1.0 };
    let d = spec.normalization_denominator().sqrt();
    let r2 = r * r;
    let k = (C64::new(1.0, 0.0) + sign * C64::from_polar(r2, 2.0 * theta)) / d;
    let l = C64::from_polar((1.0 - r2).sqrt() * r, theta) / d;
    let m = C64::new((1.0 - r2) / d, 0.0);
    Ok(PhiCoefficients { k, l, m })
}

/// Writes a quasi Bell state in the logical basis.
pub fn build_quasi_bell(spec: &QuasiBellSpec) -> Result<StateVector> {
    spec.check_constructible()?;
    let r = spec.r();
    let r2 = r * r;
    let z = C64::new(0.0, 0.0);
    let amps = match spec.family {
        Family::PsiPlus => {
            let d = (2.0 * (1.0 + r2)).sqrt();
            let eta_amp = C64::from_polar(2.0 * r / d, spec.theta());
            let eps = C64::new(((1.0 - r2) / (2.0 * (1.0 + r2))).sqrt(), 0.0);
            vec![eta_amp, eps, eps, z]
        }
        Family::PsiMinus => {
            let h = C64::new(FRAC_1_SQRT_2, 0.0);
            vec![z, h, -h, z]
        }
        Family::PhiPlus => {
            let PhiCoefficients { k, l, m } = phi_coefficients(true, spec.nonorth)?;
            vec![k, l, l, m]
        }
        Family::PhiMinus => {
            let PhiCoefficients { k, l, m } = phi_coefficients(false, spec.nonorth)?;
            vec![k, -l, -l, -m]
        }
    };
    StateVector::normalized(amps)
}

/// `μ|α⟩|β⟩ + ν|γ⟩|δ⟩` with `p1 = ⟨α|γ⟩`, `p2 = ⟨δ|β⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneralBipartiteSpec {
    pub mu: C64,
    pub nu: C64,
    pub p1: C64,
    pub p2: C64,
}

impl GeneralBipartiteSpec {
    pub fn new(mu: C64, nu: C64, p1: C64, p2: C64) -> Result<Self> {
        for (name, p) in [("|p1|", p1), ("|p2|", p2)] {
            if p.norm().is_nan() || p.norm() > 1.0 {
                return Err(Error::InvalidParameter {
                    name,
                    value: p.norm(),
                    domain: "[0, 1]",
                });
            }
        }
        if mu.norm_sqr() + nu.norm_sqr() == 0.0 {
            return Err(Error::InvalidParameter {
                name: "|mu|^2 + |nu|^2",
                value: 0.0,
                domain: "(0, inf)",
            });
        }
        Ok(Self { mu, nu, p1, p2 })
    }

    /// `N12^{-2} = |μ|² + |ν|² + μν*⟨γ|α⟩⟨δ|β⟩ + μ*ν⟨α|γ⟩⟨β|δ⟩`.
    pub fn inverse_sq_normalization(&self) -> f64 {
        let Self { mu, nu, p1, p2 } = *self;
        let cross = mu * nu.conj() * p1.conj() * p2 + mu.conj() * nu * p1 * p2.conj();
        mu.norm_sqr() + nu.norm_sqr() + cross.re
    }
}

/// Expands a general entangled non-orthogonal state as `a|00⟩ + b|01⟩ + c|10⟩`.
pub fn build_general(spec: &GeneralBipartiteSpec) -> Result<StateVector> {
    let inv = spec.inverse_sq_normalization();
    if inv <= DEGENERACY_THRESHOLD {
        return Err(Error::DegenerateState {
            normalization: "N12^-2",
            value: inv,
            threshold: DEGENERACY_THRESHOLD,
        });
    }
    let n12 = inv.sqrt().recip();
    let n1 = (1.0 - spec.p1.norm_sqr()).max(0.0).sqrt();
    let n2 = (1.0 - spec.p2.norm_sqr()).max(0.0).sqrt();
    let a = (spec.mu * spec.p2 + spec.nu * spec.p1) * n12;
    let b = spec.mu * n2 * n12;
    let c = spec.nu * n1 * n12;
    StateVector::normalized(vec![a, b, c, C64::new(0.0, 0.0)])
}

/// Pure-state concurrence `2|a00·a11 − a01·a10|`.
pub fn concurrence(state: &StateVector) -> Result<f64> {
    if state.dim() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            found: state.dim(),
        });
    }
    state.check_normalized()?;
    let a = state.amps();
    let det = a[0] * a[3] - a[1] * a[2];
    Ok((2.0 * det.norm()).min(1.0))
}
