//! Dense complex linear algebra for systems of at most three qubits.
//!
//! Basis labels are big-endian: in a tensor product the first operand is the
//! most significant subsystem, so `|q0 q1 q2⟩` has index `4*q0 + 2*q1 + q2`.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;

/// Tolerance on the squared norm of a normalized state.
pub const NORM_TOL: f64 = 1e-12;
/// Tolerance on Hermiticity and unit trace of a density operator.
pub const DENSITY_TOL: f64 = 1e-12;
/// Smallest admitted eigenvalue of a density operator.
pub const PSD_TOL: f64 = -1e-10;

pub(crate) const ZERO: C64 = C64 { re: 0.0, im: 0.0 };
pub(crate) const ONE: C64 = C64 { re: 1.0, im: 0.0 };

/// A pure state over `dim` basis states.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amps: DVector<C64>,
}

impl StateVector {
    pub fn new(amps: Vec<C64>) -> Result<Self> {
        if amps.is_empty() || !amps.len().is_power_of_two() {
            return Err(Error::DimensionMismatch {
                expected: amps.len().next_power_of_two().max(1),
                found: amps.len(),
            });
        }
        if amps.iter().any(|a| !a.re.is_finite() || !a.im.is_finite()) {
            return Err(Error::NonFinite("state vector"));
        }
        Ok(Self {
            amps: DVector::from_vec(amps),
        })
    }

    /// Like [`StateVector::new`], but also requires unit norm.
    pub fn normalized(amps: Vec<C64>) -> Result<Self> {
        let v = Self::new(amps)?;
        v.check_normalized()?;
        Ok(v)
    }

    /// Computational basis state `|index⟩` of dimension `dim`.
    pub fn basis(dim: usize, index: usize) -> Self {
        assert!(dim.is_power_of_two() && index < dim);
        let mut amps = DVector::from_element(dim, ZERO);
        amps[index] = ONE;
        Self { amps }
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn num_qubits(&self) -> usize {
        self.dim().trailing_zeros() as usize
    }

    pub fn amps(&self) -> &[C64] {
        self.amps.as_slice()
    }

    pub fn amp(&self, index: usize) -> C64 {
        self.amps[index]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn check_normalized(&self) -> Result<()> {
        let n = self.norm_sqr();
        if (n - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized { norm_sqr: n });
        }
        Ok(())
    }

    /// `⟨self|other⟩`
    pub fn inner(&self, other: &StateVector) -> C64 {
        assert_eq!(self.dim(), other.dim());
        self.amps.dotc(&other.amps)
    }

    pub fn tensor(&self, other: &StateVector) -> StateVector {
        StateVector {
            amps: self.amps.kronecker(&other.amps),
        }
    }

    pub(crate) fn as_vector(&self) -> &DVector<C64> {
        &self.amps
    }
}

/// A mixed state: Hermitian, positive semidefinite, unit trace.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityOperator {
    m: DMatrix<C64>,
}

impl DensityOperator {
    /// Validates `m` against every density-operator invariant.
    pub fn new(m: DMatrix<C64>) -> Result<Self> {
        let rho = Self::from_matrix_unchecked(m)?;
        rho.validate()?;
        Ok(rho)
    }

    /// Checks shape and finiteness only; used for intermediate results whose
    /// validity follows from the operation that produced them.
    pub(crate) fn from_matrix_unchecked(m: DMatrix<C64>) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::DimensionMismatch {
                expected: m.nrows(),
                found: m.ncols(),
            });
        }
        if !m.nrows().is_power_of_two() {
            return Err(Error::DimensionMismatch {
                expected: m.nrows().next_power_of_two(),
                found: m.nrows(),
            });
        }
        if m.iter().any(|a| !a.re.is_finite() || !a.im.is_finite()) {
            return Err(Error::NonFinite("density operator"));
        }
        Ok(Self { m })
    }

    pub fn maximally_mixed(dim: usize) -> Self {
        assert!(dim.is_power_of_two());
        let m = DMatrix::from_diagonal_element(dim, dim, C64::new(1.0 / dim as f64, 0.0));
        Self { m }
    }

    pub fn dim(&self) -> usize {
        self.m.nrows()
    }

    pub fn num_qubits(&self) -> usize {
        self.dim().trailing_zeros() as usize
    }

    pub fn matrix(&self) -> &DMatrix<C64> {
        &self.m
    }

    pub fn into_matrix(self) -> DMatrix<C64> {
        self.m
    }

    pub fn get(&self, row: usize, col: usize) -> C64 {
        self.m[(row, col)]
    }

    pub fn trace(&self) -> C64 {
        self.m.trace()
    }

    /// Largest `|m[i,j] - conj(m[j,i])|`.
    pub fn hermiticity_error(&self) -> f64 {
        let n = self.dim();
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in i..n {
                worst = worst.max((self.m[(i, j)] - self.m[(j, i)].conj()).norm());
            }
        }
        worst
    }

    /// Eigenvalues of the Hermitian part, ascending.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let herm = (&self.m + self.m.adjoint()) * C64::new(0.5, 0.0);
        let mut ev: Vec<f64> = herm.symmetric_eigenvalues().iter().copied().collect();
        ev.sort_by(f64::total_cmp);
        ev
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues()[0]
    }

    pub fn validate(&self) -> Result<()> {
        let h = self.hermiticity_error();
        if h > DENSITY_TOL {
            return Err(Error::InvalidDensity(format!("hermiticity error {h:e}")));
        }
        let tr = self.trace();
        if (tr.re - 1.0).abs() > DENSITY_TOL || tr.im.abs() > DENSITY_TOL {
            return Err(Error::InvalidDensity(format!("trace {tr}")));
        }
        let lmin = self.min_eigenvalue();
        if lmin < PSD_TOL {
            return Err(Error::InvalidDensity(format!("eigenvalue {lmin:e}")));
        }
        Ok(())
    }

    /// `⟨v|ρ|v⟩`, real part.
    pub fn expectation(&self, v: &StateVector) -> f64 {
        assert_eq!(self.dim(), v.dim());
        let a = v.as_vector();
        (a.adjoint() * &self.m * a)[(0, 0)].re
    }

    pub fn tensor(&self, other: &DensityOperator) -> DensityOperator {
        DensityOperator {
            m: self.m.kronecker(&other.m),
        }
    }

    /// `U ρ U†` for a unitary (or Kraus) operator `u` of matching dimension.
    pub fn conjugate_by(&self, u: &DMatrix<C64>) -> DensityOperator {
        DensityOperator {
            m: u * &self.m * u.adjoint(),
        }
    }

    /// Entrywise maximum distance.
    pub fn max_abs_diff(&self, other: &DensityOperator) -> f64 {
        assert_eq!(self.dim(), other.dim());
        self.m
            .iter()
            .zip(other.m.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// Either a pure or a mixed state; the operand type of [`tensor`].
#[derive(Debug, Clone, PartialEq)]
pub enum Operand {
    Pure(StateVector),
    Mixed(DensityOperator),
}

impl From<StateVector> for Operand {
    fn from(v: StateVector) -> Self {
        Operand::Pure(v)
    }
}

impl From<DensityOperator> for Operand {
    fn from(r: DensityOperator) -> Self {
        Operand::Mixed(r)
    }
}

/// Kronecker product with the first operand as the most significant subsystem.
pub fn tensor(a: &Operand, b: &Operand) -> Result<Operand> {
    match (a, b) {
        (Operand::Pure(x), Operand::Pure(y)) => Ok(Operand::Pure(x.tensor(y))),
        (Operand::Mixed(x), Operand::Mixed(y)) => Ok(Operand::Mixed(x.tensor(y))),
        _ => Err(Error::InvalidSubsystems(
            "cannot tensor a state vector with a density operator".into(),
        )),
    }
}

/// `|v⟩⟨v|` for a normalized `v`.
pub fn projector(v: &StateVector) -> Result<DensityOperator> {
    v.check_normalized()?;
    let a = v.as_vector();
    Ok(DensityOperator { m: a * a.adjoint() })
}

/// Traces out every subsystem not listed in `keep`.
///
/// `dims` gives the dimension of each subsystem, most significant first.
/// Kept subsystems appear in the result in ascending index order.
pub fn partial_trace(rho: &DensityOperator, keep: &[usize], dims: &[usize]) -> Result<DensityOperator> {
    if dims.is_empty() || dims.contains(&0) {
        return Err(Error::InvalidSubsystems("empty or zero subsystem dimension".into()));
    }
    let total: usize = dims.iter().product();
    if total != rho.dim() {
        return Err(Error::DimensionMismatch {
            expected: rho.dim(),
            found: total,
        });
    }
    let mut kept = keep.to_vec();
    kept.sort_unstable();
    kept.dedup();
    if kept.len() != keep.len() {
        return Err(Error::InvalidSubsystems(format!("repeated index in {keep:?}")));
    }
    if let Some(&bad) = kept.iter().find(|&&k| k >= dims.len()) {
        return Err(Error::InvalidSubsystems(format!(
            "index {bad} out of range for {} subsystems",
            dims.len()
        )));
    }
    let traced: Vec<usize> = (0..dims.len()).filter(|i| !kept.contains(i)).collect();
    let kept_dims: Vec<usize> = kept.iter().map(|&i| dims[i]).collect();
    let traced_dims: Vec<usize> = traced.iter().map(|&i| dims[i]).collect();
    let out_dim: usize = kept_dims.iter().product();
    let env_dim: usize = traced_dims.iter().product();

    // Strides of each subsystem in the full big-endian index.
    let mut strides = vec![1usize; dims.len()];
    for i in (0..dims.len().saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * dims[i + 1];
    }
    let compose = |sub_idx: usize, which: &[usize], which_dims: &[usize]| -> usize {
        let mut rem = sub_idx;
        let mut full = 0;
        for (k, &sys) in which.iter().enumerate().rev() {
            let d = which_dims[k];
            full += (rem % d) * strides[sys];
            rem /= d;
        }
        full
    };

    let mut out = DMatrix::from_element(out_dim, out_dim, ZERO);
    for i in 0..out_dim {
        let fi = compose(i, &kept, &kept_dims);
        for j in 0..out_dim {
            let fj = compose(j, &kept, &kept_dims);
            let mut acc = ZERO;
            for e in 0..env_dim {
                let fe = compose(e, &traced, &traced_dims);
                acc += rho.m[(fi + fe, fj + fe)];
            }
            out[(i, j)] = acc;
        }
    }
    Ok(DensityOperator { m: out })
}

/// Single-qubit Pauli and identity matrices.
pub mod pauli {
    use super::*;

    pub fn identity() -> DMatrix<C64> {
        DMatrix::identity(2, 2)
    }

    pub fn x() -> DMatrix<C64> {
        DMatrix::from_row_slice(2, 2, &[ZERO, ONE, ONE, ZERO])
    }

    pub fn z() -> DMatrix<C64> {
        DMatrix::from_row_slice(2, 2, &[ONE, ZERO, ZERO, -ONE])
    }
}

/// Lifts a single-qubit operator onto qubit `target` of an `n`-qubit register.
pub fn lift(op: &DMatrix<C64>, target: usize, n: usize) -> DMatrix<C64> {
    assert!(target < n && op.nrows() == 2 && op.ncols() == 2);
    let id = pauli::identity();
    let mut acc = DMatrix::from_element(1, 1, ONE);
    for q in 0..n {
        acc = acc.kronecker(if q == target { op } else { &id });
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    fn plus() -> StateVector {
        StateVector::normalized(vec![c(FRAC_1_SQRT_2), c(FRAC_1_SQRT_2)]).unwrap()
    }

    fn bell_psi_plus() -> StateVector {
        StateVector::normalized(vec![c(0.0), c(FRAC_1_SQRT_2), c(FRAC_1_SQRT_2), c(0.0)]).unwrap()
    }

    #[test]
    fn tensor_basis_states() {
        let v = StateVector::basis(2, 0).tensor(&StateVector::basis(2, 1));
        assert_eq!(v.amps(), &[c(0.0), c(1.0), c(0.0), c(0.0)]);
    }

    #[test]
    fn tensor_plus_plus_is_uniform() {
        let v = plus().tensor(&plus());
        for a in v.amps() {
            assert!((a - c(0.5)).norm() < 1e-15);
        }
        assert!((v.norm_sqr() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn tensor_rejects_mixed_kinds() {
        let a = Operand::from(plus());
        let b = Operand::from(projector(&plus()).unwrap());
        assert!(matches!(tensor(&a, &b), Err(Error::InvalidSubsystems(_))));
        assert!(matches!(tensor(&a, &a), Ok(Operand::Pure(_))));
        assert!(matches!(tensor(&b, &b), Ok(Operand::Mixed(_))));
    }

    #[test]
    fn partial_trace_of_product_state() {
        let rho = projector(&StateVector::basis(4, 1)).unwrap();
        let a = partial_trace(&rho, &[0], &[2, 2]).unwrap();
        assert_eq!(a, projector(&StateVector::basis(2, 0)).unwrap());
        let b = partial_trace(&rho, &[1], &[2, 2]).unwrap();
        assert_eq!(b, projector(&StateVector::basis(2, 1)).unwrap());
    }

    #[test]
    fn partial_trace_of_bell_state_is_maximally_mixed() {
        let rho = projector(&bell_psi_plus()).unwrap();
        let b = partial_trace(&rho, &[1], &[2, 2]).unwrap();
        assert!(b.max_abs_diff(&DensityOperator::maximally_mixed(2)) < 1e-15);
    }

    #[test]
    fn partial_trace_rejects_bad_selections() {
        let rho = projector(&bell_psi_plus()).unwrap();
        assert!(partial_trace(&rho, &[2], &[2, 2]).is_err());
        assert!(partial_trace(&rho, &[0, 0], &[2, 2]).is_err());
        assert!(partial_trace(&rho, &[0], &[2, 4]).is_err());
        assert!(partial_trace(&rho, &[0], &[]).is_err());
    }

    #[test]
    fn partial_trace_keeps_middle_qubit() {
        // |0⟩ ⊗ |+⟩ ⊗ |1⟩: keeping qubit 1 must give |+⟩⟨+|.
        let v = StateVector::basis(2, 0)
            .tensor(&plus())
            .tensor(&StateVector::basis(2, 1));
        let rho = projector(&v).unwrap();
        let mid = partial_trace(&rho, &[1], &[2, 2, 2]).unwrap();
        assert!(mid.max_abs_diff(&projector(&plus()).unwrap()) < 1e-15);
        let outer = partial_trace(&rho, &[2, 0], &[2, 2, 2]).unwrap();
        assert!(outer.max_abs_diff(&projector(&StateVector::basis(4, 1)).unwrap()) < 1e-15);
    }

    #[test]
    fn projector_examples() {
        let p0 = projector(&StateVector::basis(2, 0)).unwrap();
        assert_eq!(p0.get(0, 0), ONE);
        assert_eq!(p0.get(1, 1), ZERO);
        let phi = StateVector::normalized(vec![c(FRAC_1_SQRT_2), c(0.0), c(0.0), c(FRAC_1_SQRT_2)]).unwrap();
        assert!((projector(&phi).unwrap().trace() - ONE).norm() < 1e-15);
    }

    #[test]
    fn projector_rejects_unnormalized() {
        let v = StateVector::new(vec![c(1.0), c(1.0)]).unwrap();
        assert!(matches!(projector(&v), Err(Error::NotNormalized { .. })));
    }

    #[test]
    fn state_vector_rejects_bad_input() {
        assert!(StateVector::new(vec![c(1.0); 3]).is_err());
        assert!(StateVector::new(vec![]).is_err());
        assert!(matches!(
            StateVector::new(vec![c(f64::NAN), c(0.0)]),
            Err(Error::NonFinite(_))
        ));
    }

    #[test]
    fn density_validation_catches_violations() {
        let mut m = DMatrix::from_element(2, 2, ZERO);
        m[(0, 0)] = c(1.5);
        m[(1, 1)] = c(-0.5);
        assert!(DensityOperator::new(m).is_err());
        let mut m = DMatrix::from_element(2, 2, ZERO);
        m[(0, 0)] = c(1.0);
        m[(0, 1)] = C64::new(0.0, 0.1);
        assert!(DensityOperator::new(m).is_err());
        assert!(DensityOperator::new(DensityOperator::maximally_mixed(4).into_matrix()).is_ok());
    }

    #[test]
    fn lift_places_operator_on_target() {
        let zx = lift(&pauli::x(), 0, 3);
        // X on the most significant qubit maps |000⟩ to |100⟩.
        assert_eq!(zx[(4, 0)], ONE);
        let zz = lift(&pauli::z(), 2, 3);
        assert_eq!(zz[(1, 1)], -ONE);
        assert_eq!(zz[(2, 2)], ONE);
    }
}
