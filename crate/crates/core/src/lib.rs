//! Teleportation of a qubit through entangled non-orthogonal (quasi Bell)
//! channels.
//!
//! The crate computes entanglement and fidelity measures two ways: by
//! simulating the standard Bell-measurement protocol on density operators
//! (optionally with amplitude- or phase-damping noise on selected qubits)
//! and from closed-form expressions. The two routes are meant to agree.
//!
//! ```
//! use quasibell::{formulas, noise::NoiseScenario, states::{Family, QuasiBellSpec}};
//!
//! let spec = QuasiBellSpec::new(Family::PsiPlus, 0.5, 0.0).unwrap();
//! let simulated = quasibell::noise::noisy_average_fidelity(&spec, &NoiseScenario::noiseless()).unwrap();
//! let analytic = formulas::analytic_average_fidelity(&spec, &NoiseScenario::noiseless()).unwrap();
//! assert!((simulated - analytic).abs() < 1e-12);
//! ```

pub mod error;
pub mod formulas;
pub mod linalg;
pub mod noise;
pub mod protocol;
pub mod quadrature;
pub mod states;

pub use error::{Error, Result};
pub use formulas::FidelityReport;
pub use noise::{Exposure, NoiseKind, NoiseScenario};
pub use protocol::InputQubit;
pub use states::{Family, QuasiBellSpec};
