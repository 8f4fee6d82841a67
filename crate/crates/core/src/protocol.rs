//! Standard one-qubit teleportation over an arbitrary two-qubit resource.
//!
//! Qubit 0 carries the input, qubit 1 is Alice's half of the channel and
//! qubit 2 is Bob's. Alice measures qubits 0 and 1 in the Bell basis and Bob
//! applies the Pauli correction that the standard protocol prescribes for
//! the Bell state named by the correction frame.

use std::f64::consts::{PI, TAU};

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, pauli, DensityOperator, StateVector, C64, ZERO};
use crate::quadrature::SphereQuadrature;
use crate::states::Family;

/// Outcome probabilities below this are treated as impossible.
pub const MIN_OUTCOME_PROBABILITY: f64 = 1e-14;

/// `|I⟩ = cos(θ′/2)|0⟩ + e^{iφ′} sin(θ′/2)|1⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InputQubit {
    pub theta_p: f64,
    pub phi_p: f64,
}

impl InputQubit {
    pub fn new(theta_p: f64, phi_p: f64) -> Self {
        Self { theta_p, phi_p }
    }

    /// Maps arbitrary angles onto `θ′ ∈ [0, π]`, `φ′ ∈ [0, 2π)` without
    /// changing the state (up to global phase).
    pub fn canonical(self) -> Self {
        let mut t = self.theta_p.rem_euclid(TAU);
        let mut p = self.phi_p;
        if t > PI {
            t = TAU - t;
            p += PI;
        }
        let mut p = p.rem_euclid(TAU);
        if p >= TAU {
            p = 0.0;
        }
        Self { theta_p: t, phi_p: p }
    }

    pub fn amplitudes(&self) -> [C64; 2] {
        let h = self.theta_p / 2.0;
        [C64::new(h.cos(), 0.0), C64::from_polar(h.sin(), self.phi_p)]
    }

    pub fn state(&self) -> StateVector {
        StateVector::new(self.amplitudes().to_vec()).expect("two finite amplitudes")
    }

    pub fn density(&self) -> DensityOperator {
        linalg::projector(&self.state()).expect("input qubit is normalized")
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OutcomeRecord {
    /// 1 = ψ+, 2 = ψ−, 3 = φ+, 4 = φ−.
    pub outcome_index: usize,
    pub outcome: Family,
    pub probability: f64,
    /// Bob's qubit after the correction, renormalized.
    pub corrected_state: DensityOperator,
    /// `⟨I|ρ_i|I⟩`
    pub overlap: f64,
}

/// Unitary part of the Pauli products used as corrections.
fn outcome_base(outcome: Family) -> DMatrix<C64> {
    match outcome {
        Family::PhiPlus => pauli::identity(),
        Family::PhiMinus => pauli::z(),
        Family::PsiPlus => pauli::x(),
        Family::PsiMinus => pauli::z() * pauli::x(),
    }
}

/// The channel-side Pauli taking `|φ+⟩` to the Bell state of `frame` (on Bob's qubit).
fn frame_pauli(frame: Family) -> DMatrix<C64> {
    match frame {
        Family::PhiPlus => pauli::identity(),
        Family::PhiMinus => pauli::z(),
        Family::PsiPlus => pauli::x(),
        Family::PsiMinus => pauli::x() * pauli::z(),
    }
}

/// Bob's correction for Bell outcome `outcome` when the resource is meant to
/// be the Bell state of `frame`. For the φ+ frame this is the familiar table
/// φ+ → 1, φ− → Z, ψ+ → X, ψ− → ZX.
pub fn correction(frame: Family, outcome: Family) -> DMatrix<C64> {
    frame_pauli(frame) * outcome_base(outcome)
}

fn correction_array(frame: Family, outcome: Family) -> [[C64; 2]; 2] {
    let m = correction(frame, outcome);
    [[m[(0, 0)], m[(0, 1)]], [m[(1, 0)], m[(1, 1)]]]
}

fn check_channel(channel: &DensityOperator) -> Result<()> {
    if channel.dim() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            found: channel.dim(),
        });
    }
    channel.validate()
}

fn check_joint(joint: &DensityOperator) -> Result<()> {
    if joint.dim() != 8 {
        return Err(Error::DimensionMismatch {
            expected: 8,
            found: joint.dim(),
        });
    }
    Ok(())
}

/// `|I⟩⟨I| ⊗ channel` on qubits (0, 1, 2).
pub fn joint_state(channel: &DensityOperator, input: &InputQubit) -> DensityOperator {
    input.density().tensor(channel)
}

/// Runs the protocol once for a fixed input, returning one record per Bell outcome.
pub fn teleport_once(channel: &DensityOperator, input: &InputQubit, frame: Family) -> Result<Vec<OutcomeRecord>> {
    check_channel(channel)?;
    teleport_joint(&joint_state(channel, input), input, frame)
}

/// As [`teleport_once`], starting from an already prepared (possibly noisy)
/// three-qubit state. Uses explicit 8×8 projectors and a partial trace.
pub fn teleport_joint(joint: &DensityOperator, input: &InputQubit, frame: Family) -> Result<Vec<OutcomeRecord>> {
    check_joint(joint)?;
    let id2 = pauli::identity();
    let target = input.state();
    let mut records = Vec::with_capacity(4);
    for (idx, outcome) in Family::ALL.into_iter().enumerate() {
        let bell = linalg::projector(&outcome.bell_state())?;
        let m = bell.matrix().kronecker(&id2);
        let projected = &m * joint.matrix() * &m;
        let probability = projected.trace().re;
        let (corrected_state, overlap, probability) = if probability < MIN_OUTCOME_PROBABILITY {
            (DensityOperator::maximally_mixed(2), 0.0, 0.0)
        } else {
            let post = DensityOperator::from_matrix_unchecked(projected / C64::new(probability, 0.0))?;
            let bob = linalg::partial_trace(&post, &[2], &[2, 2, 2])?;
            let corrected = bob.conjugate_by(&correction(frame, outcome));
            let overlap = corrected.expectation(&target);
            (corrected, overlap, probability)
        };
        records.push(OutcomeRecord {
            outcome_index: idx + 1,
            outcome,
            probability,
            corrected_state,
            overlap,
        });
    }
    Ok(records)
}

/// `Σ_i P_i ⟨I|ρ_i|I⟩` for a two-qubit channel.
pub fn fidelity_tel(channel: &DensityOperator, input: &InputQubit, frame: Family) -> Result<f64> {
    check_channel(channel)?;
    Ok(fidelity_tel_joint(&joint_state(channel, input), input, frame))
}

/// Teleportation fidelity from a prepared three-qubit state.
///
/// Contracts Alice's qubits against each Bell vector directly, so each
/// outcome contributes `⟨I|U_i σ_i U_i†|I⟩` with `σ_i` the unnormalized
/// conditional state of Bob; this equals `P_i · overlap_i`.
pub fn fidelity_tel_joint(joint: &DensityOperator, input: &InputQubit, frame: Family) -> f64 {
    debug_assert_eq!(joint.dim(), 8);
    let rho = joint.matrix();
    let target = input.amplitudes();
    let mut total = 0.0;
    for outcome in Family::ALL {
        let bell = outcome.bell_state();
        let b = bell.amps();
        let mut sigma = [[ZERO; 2]; 2];
        for (x, row) in sigma.iter_mut().enumerate() {
            for (y, entry) in row.iter_mut().enumerate() {
                let mut acc = ZERO;
                for j in 0..4 {
                    if b[j] == ZERO {
                        continue;
                    }
                    for k in 0..4 {
                        if b[k] == ZERO {
                            continue;
                        }
                        acc += b[j].conj() * b[k] * rho[(2 * j + x, 2 * k + y)];
                    }
                }
                *entry = acc;
            }
        }
        // w = U†|I⟩, contribution = w† σ w.
        let u = correction_array(frame, outcome);
        let w = [
            u[0][0].conj() * target[0] + u[1][0].conj() * target[1],
            u[0][1].conj() * target[0] + u[1][1].conj() * target[1],
        ];
        let mut c = ZERO;
        for x in 0..2 {
            for y in 0..2 {
                c += w[x].conj() * sigma[x][y] * w[y];
            }
        }
        total += c.re;
    }
    total
}

/// Uniform Bloch-sphere average of `f` using the default product rule.
pub fn average_over_sphere<F: FnMut(&InputQubit) -> f64>(f: F) -> f64 {
    average_over_sphere_with(&SphereQuadrature::default(), f)
}

pub fn average_over_sphere_with<F: FnMut(&InputQubit) -> f64>(rule: &SphereQuadrature, mut f: F) -> f64 {
    rule.average(|t, p| f(&InputQubit::new(t, p)))
}

/// Bloch average of [`fidelity_tel`].
pub fn average_fidelity(channel: &DensityOperator, frame: Family) -> Result<f64> {
    average_fidelity_with(&SphereQuadrature::default(), channel, frame)
}

pub fn average_fidelity_with(rule: &SphereQuadrature, channel: &DensityOperator, frame: Family) -> Result<f64> {
    check_channel(channel)?;
    Ok(average_over_sphere_with(rule, |input| {
        fidelity_tel_joint(&joint_state(channel, input), input, frame)
    }))
}

/// Grid resolution of the global search in [`minimize_over_sphere`].
pub const MIN_GRID_THETA: usize = 181;
pub const MIN_GRID_PHI: usize = 360;

/// Global minimum of `f` over the Bloch sphere: exhaustive grid, then a
/// Nelder–Mead polish from the best grid point. Grid ties go to the
/// smallest θ′, then the smallest φ′.
pub fn minimize_over_sphere<F: FnMut(&InputQubit) -> f64>(mut f: F) -> (f64, InputQubit) {
    let mut best = (f64::INFINITY, InputQubit::new(0.0, 0.0));
    for i in 0..MIN_GRID_THETA {
        let t = PI * i as f64 / (MIN_GRID_THETA - 1) as f64;
        for j in 0..MIN_GRID_PHI {
            let p = TAU * j as f64 / MIN_GRID_PHI as f64;
            let input = InputQubit::new(t, p);
            let v = f(&input);
            if v < best.0 {
                best = (v, input);
            }
        }
    }
    let step = PI / (MIN_GRID_THETA - 1) as f64;
    let (v, x) = nelder_mead(
        |x: [f64; 2]| f(&InputQubit::new(x[0], x[1])),
        [best.1.theta_p, best.1.phi_p],
        step,
    );
    if v < best.0 {
        best = (v, InputQubit::new(x[0], x[1]).canonical());
    }
    best
}

fn nelder_mead<F: FnMut([f64; 2]) -> f64>(mut f: F, start: [f64; 2], step: f64) -> (f64, [f64; 2]) {
    let mut simplex = [start, [start[0] + step, start[1]], [start[0], start[1] + step]];
    let mut values = simplex.map(&mut f);
    for _ in 0..2000 {
        let mut order = [0usize, 1, 2];
        order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
        simplex = order.map(|i| simplex[i]);
        values = order.map(|i| values[i]);
        let spread = (values[2] - values[0]).abs();
        let size = (0..2)
            .map(|d| {
                (simplex[1][d] - simplex[0][d])
                    .abs()
                    .max((simplex[2][d] - simplex[0][d]).abs())
            })
            .fold(0.0, f64::max);
        if spread < 1e-15 && size < 1e-10 {
            break;
        }
        let centroid = [
            (simplex[0][0] + simplex[1][0]) / 2.0,
            (simplex[0][1] + simplex[1][1]) / 2.0,
        ];
        let along = |c: f64| {
            [
                centroid[0] + c * (simplex[2][0] - centroid[0]),
                centroid[1] + c * (simplex[2][1] - centroid[1]),
            ]
        };
        let reflected = along(-1.0);
        let fr = f(reflected);
        if fr < values[0] {
            let expanded = along(-2.0);
            let fe = f(expanded);
            if fe < fr {
                simplex[2] = expanded;
                values[2] = fe;
            } else {
                simplex[2] = reflected;
                values[2] = fr;
            }
        } else if fr < values[1] {
            simplex[2] = reflected;
            values[2] = fr;
        } else {
            let contracted = if fr < values[2] { along(-0.5) } else { along(0.5) };
            let fc = f(contracted);
            if fc < values[2].min(fr) {
                simplex[2] = contracted;
                values[2] = fc;
            } else {
                for i in 1..3 {
                    simplex[i] = [
                        simplex[0][0] + 0.5 * (simplex[i][0] - simplex[0][0]),
                        simplex[0][1] + 0.5 * (simplex[i][1] - simplex[0][1]),
                    ];
                    values[i] = f(simplex[i]);
                }
            }
        }
    }
    let best = (0..3).min_by(|&a, &b| values[a].total_cmp(&values[b])).unwrap();
    (values[best], simplex[best])
}

/// Minimum of [`fidelity_tel`] over all inputs, with an argmin witness.
pub fn min_fidelity(channel: &DensityOperator, frame: Family) -> Result<(f64, InputQubit)> {
    check_channel(channel)?;
    Ok(minimize_over_sphere(|input| {
        fidelity_tel_joint(&joint_state(channel, input), input, frame)
    }))
}
