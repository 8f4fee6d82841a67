//! Amplitude- and phase-damping channels on the teleportation register.

use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, DensityOperator, C64, ONE, ZERO};
use crate::protocol::{self, InputQubit};
use crate::quadrature::SphereQuadrature;
use crate::states::{build_quasi_bell, QuasiBellSpec};

/// Tolerance on `K0†K0 + K1†K1 = 1`.
pub const COMPLETENESS_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NoiseKind {
    #[serde(rename = "none")]
    None,
    #[serde(rename = "ad")]
    AmplitudeDamping,
    #[serde(rename = "pd")]
    PhaseDamping,
}

impl NoiseKind {
    pub fn name(self) -> &'static str {
        match self {
            NoiseKind::None => "none",
            NoiseKind::AmplitudeDamping => "ad",
            NoiseKind::PhaseDamping => "pd",
        }
    }
}

impl fmt::Display for NoiseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NoiseKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "none" => Ok(NoiseKind::None),
            "ad" => Ok(NoiseKind::AmplitudeDamping),
            "pd" => Ok(NoiseKind::PhaseDamping),
            _ => Err(format!("unknown noise `{s}` (expected none, ad or pd)")),
        }
    }
}

/// Which qubits of the register pass through the noisy channel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Exposure {
    #[serde(rename = "bob")]
    BobOnly,
    #[serde(rename = "alice-bob")]
    AliceAndBob,
    #[serde(rename = "all")]
    AllThree,
}

impl Exposure {
    pub const ALL: [Exposure; 3] = [Exposure::BobOnly, Exposure::AliceAndBob, Exposure::AllThree];

    pub fn name(self) -> &'static str {
        match self {
            Exposure::BobOnly => "bob",
            Exposure::AliceAndBob => "alice-bob",
            Exposure::AllThree => "all",
        }
    }

    /// Register indices: 0 = input, 1 = Alice, 2 = Bob.
    pub fn qubits(self) -> &'static [usize] {
        match self {
            Exposure::BobOnly => &[2],
            Exposure::AliceAndBob => &[1, 2],
            Exposure::AllThree => &[0, 1, 2],
        }
    }
}

impl fmt::Display for Exposure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Exposure {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "bob" => Ok(Exposure::BobOnly),
            "alice-bob" => Ok(Exposure::AliceAndBob),
            "all" => Ok(Exposure::AllThree),
            _ => Err(format!("unknown exposure `{s}` (expected bob, alice-bob or all)")),
        }
    }
}

/// One noise model applied with a single damping rate to every exposed qubit.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NoiseScenario {
    kind: NoiseKind,
    damping: f64,
    exposure: Exposure,
}

impl NoiseScenario {
    pub fn new(kind: NoiseKind, damping: f64, exposure: Exposure) -> Result<Self> {
        check_damping(damping)?;
        Ok(Self {
            kind,
            damping,
            exposure,
        })
    }

    pub fn noiseless() -> Self {
        Self {
            kind: NoiseKind::None,
            damping: 0.0,
            exposure: Exposure::BobOnly,
        }
    }

    pub fn kind(&self) -> NoiseKind {
        self.kind
    }

    pub fn damping(&self) -> f64 {
        self.damping
    }

    pub fn exposure(&self) -> Exposure {
        self.exposure
    }

    pub fn is_noiseless(&self) -> bool {
        self.kind == NoiseKind::None
    }
}

fn check_damping(damping: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&damping) {
        return Err(Error::InvalidParameter {
            name: "eta",
            value: damping,
            domain: "[0, 1]",
        });
    }
    Ok(())
}

/// The two Kraus operators of a single-qubit damping channel.
#[derive(Debug, Clone, PartialEq)]
pub struct KrausPair {
    pub k0: DMatrix<C64>,
    pub k1: DMatrix<C64>,
}

impl KrausPair {
    /// Largest entry of `K0†K0 + K1†K1 − 1`.
    pub fn completeness_error(&self) -> f64 {
        let sum = self.k0.adjoint() * &self.k0 + self.k1.adjoint() * &self.k1;
        (sum - DMatrix::<C64>::identity(2, 2))
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    fn arrays(&self) -> [[[C64; 2]; 2]; 2] {
        let a = |m: &DMatrix<C64>| [[m[(0, 0)], m[(0, 1)]], [m[(1, 0)], m[(1, 1)]]];
        [a(&self.k0), a(&self.k1)]
    }
}

/// `K0 = |0⟩⟨0| + √(1−η)|1⟩⟨1|` for both kinds; `K1 = √η|0⟩⟨1|` (AD) or `√η|1⟩⟨1|` (PD).
pub fn kraus_for(kind: NoiseKind, damping: f64) -> Result<KrausPair> {
    check_damping(damping)?;
    let s = C64::new((1.0 - damping).sqrt(), 0.0);
    let g = C64::new(damping.sqrt(), 0.0);
    let k0 = DMatrix::from_row_slice(2, 2, &[ONE, ZERO, ZERO, s]);
    let k1 = match kind {
        NoiseKind::AmplitudeDamping => DMatrix::from_row_slice(2, 2, &[ZERO, g, ZERO, ZERO]),
        NoiseKind::PhaseDamping => DMatrix::from_row_slice(2, 2, &[ZERO, ZERO, ZERO, g]),
        NoiseKind::None => {
            return Err(Error::InvalidParameter {
                name: "kind",
                value: f64::NAN,
                domain: "{ad, pd}",
            })
        }
    };
    Ok(KrausPair { k0, k1 })
}

/// `Σ_k K_k ρ K_k†` with the pair acting on `target` of an `n`-qubit state.
fn apply_single(m: &DMatrix<C64>, kraus: &[[[C64; 2]; 2]; 2], target: usize, n: usize) -> DMatrix<C64> {
    let dim = 1usize << n;
    let bit = 1usize << (n - 1 - target);
    let mut out = DMatrix::from_element(dim, dim, ZERO);
    for i in 0..dim {
        let bi = (i & bit != 0) as usize;
        let i0 = i & !bit;
        for j in 0..dim {
            let bj = (j & bit != 0) as usize;
            let j0 = j & !bit;
            let mut acc = ZERO;
            for k in kraus {
                for a in 0..2 {
                    let ka = k[bi][a];
                    if ka == ZERO {
                        continue;
                    }
                    for b in 0..2 {
                        let kb = k[bj][b];
                        if kb == ZERO {
                            continue;
                        }
                        acc += ka * m[(i0 | (a * bit), j0 | (b * bit))] * kb.conj();
                    }
                }
            }
            out[(i, j)] = acc;
        }
    }
    out
}

/// Applies the scenario's channel independently to each exposed qubit of a
/// three-qubit register.
pub fn apply_noise(rho: &DensityOperator, scenario: &NoiseScenario) -> Result<DensityOperator> {
    if scenario.is_noiseless() {
        return Ok(rho.clone());
    }
    if rho.dim() != 8 {
        return Err(Error::DimensionMismatch {
            expected: 8,
            found: rho.dim(),
        });
    }
    apply_noise_to(rho, scenario.kind, scenario.damping, scenario.exposure.qubits())
}

/// Applies one damping channel to the listed qubits, in order.
pub fn apply_noise_to(
    rho: &DensityOperator,
    kind: NoiseKind,
    damping: f64,
    qubits: &[usize],
) -> Result<DensityOperator> {
    if kind == NoiseKind::None {
        return Ok(rho.clone());
    }
    let n = rho.num_qubits();
    if let Some(&q) = qubits.iter().find(|&&q| q >= n) {
        return Err(Error::InvalidSubsystems(format!("qubit {q} of a {n}-qubit state")));
    }
    let kraus = kraus_for(kind, damping)?.arrays();
    let mut m = rho.matrix().clone();
    for &q in qubits {
        m = apply_single(&m, &kraus, q, n);
    }
    DensityOperator::from_matrix_unchecked(m)
}

/// Reference route: lift every Kraus operator to the full register and sum
/// `K ρ K†` over all combinations of Kraus indices on the exposed qubits.
pub fn apply_noise_lifted(
    rho: &DensityOperator,
    kind: NoiseKind,
    damping: f64,
    qubits: &[usize],
) -> Result<DensityOperator> {
    if kind == NoiseKind::None {
        return Ok(rho.clone());
    }
    let n = rho.num_qubits();
    let pair = kraus_for(kind, damping)?;
    let ops = [&pair.k0, &pair.k1];
    let dim = rho.dim();
    let mut acc = DMatrix::from_element(dim, dim, ZERO);
    for combo in 0..(1usize << qubits.len()) {
        let mut k = DMatrix::<C64>::identity(dim, dim);
        for (slot, &q) in qubits.iter().enumerate() {
            let which = (combo >> slot) & 1;
            k = linalg::lift(ops[which], q, n) * k;
        }
        acc += &k * rho.matrix() * k.adjoint();
    }
    DensityOperator::from_matrix_unchecked(acc)
}

/// Simulated Bloch-averaged fidelity of teleporting through a noisy quasi Bell channel.
pub fn noisy_average_fidelity(spec: &QuasiBellSpec, scenario: &NoiseScenario) -> Result<f64> {
    noisy_average_fidelity_with(&SphereQuadrature::default(), spec, scenario)
}

pub fn noisy_average_fidelity_with(
    rule: &SphereQuadrature,
    spec: &QuasiBellSpec,
    scenario: &NoiseScenario,
) -> Result<f64> {
    let prepare = NoisyTeleportation::new(spec, scenario)?;
    Ok(protocol::average_over_sphere_with(rule, |input| {
        prepare.fidelity(input)
    }))
}

/// Minimum over inputs of the noisy teleportation fidelity.
pub fn noisy_min_fidelity(spec: &QuasiBellSpec, scenario: &NoiseScenario) -> Result<(f64, InputQubit)> {
    let prepare = NoisyTeleportation::new(spec, scenario)?;
    Ok(protocol::minimize_over_sphere(|input| prepare.fidelity(input)))
}

/// A quasi Bell channel under a fixed noise scenario, ready to evaluate
/// `F^tel` for any input.
///
/// The damping maps act qubit by qubit on a product state, so the channel
/// pair is damped once up front and only the input is damped per call.
#[derive(Debug, Clone)]
pub struct NoisyTeleportation {
    spec: QuasiBellSpec,
    scenario: NoiseScenario,
    channel: DensityOperator,
    noisy_channel: DensityOperator,
    input_exposed: bool,
}

impl NoisyTeleportation {
    pub fn new(spec: &QuasiBellSpec, scenario: &NoiseScenario) -> Result<Self> {
        let channel = linalg::projector(&build_quasi_bell(spec)?)?;
        let exposed = scenario.exposure.qubits();
        let pair_qubits: Vec<usize> = exposed.iter().filter(|&&q| q > 0).map(|&q| q - 1).collect();
        let noisy_channel = apply_noise_to(&channel, scenario.kind, scenario.damping, &pair_qubits)?;
        Ok(Self {
            spec: *spec,
            scenario: *scenario,
            channel,
            noisy_channel,
            input_exposed: !scenario.is_noiseless() && exposed.contains(&0),
        })
    }

    /// The ideal channel state `|χ⟩⟨χ|`.
    pub fn channel(&self) -> &DensityOperator {
        &self.channel
    }

    /// `|I⟩⟨I| ⊗ |χ⟩⟨χ|` after the scenario's noise.
    pub fn joint(&self, input: &InputQubit) -> DensityOperator {
        let mut rho = input.density();
        if self.input_exposed {
            rho = apply_noise_to(&rho, self.scenario.kind, self.scenario.damping, &[0])
                .expect("scenario validated at construction");
        }
        rho.tensor(&self.noisy_channel)
    }

    pub fn fidelity(&self, input: &InputQubit) -> f64 {
        protocol::fidelity_tel_joint(&self.joint(input), input, self.spec.family)
    }
}
