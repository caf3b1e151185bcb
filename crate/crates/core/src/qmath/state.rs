//! Density operators and pure qubit states.

use num_complex::Complex64;

use super::eigen::eig_hermitian;
use super::matrix::{inner, kron, outer, CMatrix, ONE, ZERO};
use crate::error::{Error, Result};

/// Validation thresholds for density operators: Hermiticity and unit trace
/// at 1e-12, minimum eigenvalue at -1e-10. Quadrature and channel
/// construction are required to stay inside these.
pub const STATE_HERMITICITY_TOL: f64 = 1e-12;
pub const STATE_TRACE_TOL: f64 = 1e-12;
pub const STATE_MIN_EIGENVALUE: f64 = -1e-10;

/// A positive semidefinite, unit-trace Hermitian matrix.
#[derive(Clone, Debug)]
pub struct DensityOperator {
    matrix: CMatrix,
}

impl DensityOperator {
    /// Validates Hermiticity, trace and positivity before wrapping.
    pub fn new(matrix: CMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::NotSquare {
                rows: matrix.rows(),
                cols: matrix.cols(),
            });
        }
        let dev = matrix.hermitian_deviation();
        if dev > STATE_HERMITICITY_TOL {
            return Err(Error::InvalidState {
                reason: format!("Hermiticity deviation {dev:.3e}"),
            });
        }
        let tr = matrix.trace();
        if (tr.re - 1.0).abs() > STATE_TRACE_TOL || tr.im.abs() > STATE_TRACE_TOL {
            return Err(Error::InvalidState {
                reason: format!("trace {tr} is not 1"),
            });
        }
        let eig = eig_hermitian(&matrix)?;
        let min = eig.values.last().copied().unwrap_or(0.0);
        if min < STATE_MIN_EIGENVALUE {
            return Err(Error::InvalidState {
                reason: format!("minimum eigenvalue {min:.3e}"),
            });
        }
        Ok(DensityOperator { matrix })
    }

    /// Skips validation; for internal paths that construct states from
    /// already-verified pieces (tensor products of valid states, Kraus
    /// applications).
    pub fn new_unchecked(matrix: CMatrix) -> Self {
        debug_assert!(matrix.is_square());
        DensityOperator { matrix }
    }

    pub fn from_pure(amplitudes: &[Complex64]) -> Result<Self> {
        let norm: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if (norm - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidState {
                reason: format!("pure-state norm² = {norm}"),
            });
        }
        Ok(DensityOperator {
            matrix: outer(amplitudes, amplitudes),
        })
    }

    /// Detector ground state |g⟩⟨g| in the basis {|e⟩, |g⟩} fixed by the
    /// free Hamiltonian Ω(σ^z + 1)/2 (so |g⟩ is the σ^z = -1 vector).
    pub fn ground_qubit() -> Self {
        DensityOperator::from_pure(&[ZERO, ONE]).expect("ground state")
    }

    /// Detector excited state |e⟩⟨e|.
    pub fn excited_qubit() -> Self {
        DensityOperator::from_pure(&[ONE, ZERO]).expect("excited state")
    }

    pub fn maximally_mixed(dim: usize) -> Self {
        DensityOperator {
            matrix: CMatrix::identity(dim).scale(Complex64::new(1.0 / dim as f64, 0.0)),
        }
    }

    /// Qubit state (I + r·σ)/2 from a Bloch vector with |r| ≤ 1.
    pub fn from_bloch(x: f64, y: f64, z: f64) -> Result<Self> {
        let r = (x * x + y * y + z * z).sqrt();
        if r > 1.0 + 1e-12 {
            return Err(Error::InvalidState {
                reason: format!("Bloch radius {r} > 1"),
            });
        }
        let m = CMatrix::from_rows(&[
            vec![
                Complex64::new(0.5 * (1.0 + z), 0.0),
                Complex64::new(0.5 * x, -0.5 * y),
            ],
            vec![
                Complex64::new(0.5 * x, 0.5 * y),
                Complex64::new(0.5 * (1.0 - z), 0.0),
            ],
        ]);
        Ok(DensityOperator { matrix: m })
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn tensor(&self, other: &DensityOperator) -> DensityOperator {
        DensityOperator {
            matrix: kron(&self.matrix, &other.matrix),
        }
    }

    /// Bloch components (x, y, z); only meaningful for qubits.
    pub fn bloch(&self) -> (f64, f64, f64) {
        debug_assert_eq!(self.dim(), 2);
        let m = &self.matrix;
        let x = 2.0 * m.get(1, 0).re;
        let y = 2.0 * m.get(1, 0).im;
        let z = m.get(0, 0).re - m.get(1, 1).re;
        (x, y, z)
    }
}

/// Normalized single-qubit amplitudes (α, β) for α|0⟩ + β|1⟩.
#[derive(Clone, Copy, Debug)]
pub struct PureQubit {
    pub alpha: Complex64,
    pub beta: Complex64,
}

impl PureQubit {
    /// Requires |α|² + |β|² = 1 within 1e-12.
    pub fn new(alpha: Complex64, beta: Complex64) -> Result<Self> {
        let n = alpha.norm_sqr() + beta.norm_sqr();
        if (n - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidState {
                reason: format!("qubit norm² = {n}"),
            });
        }
        Ok(PureQubit { alpha, beta })
    }

    /// Rescales arbitrary nonzero amplitudes to unit norm.
    pub fn normalized(alpha: Complex64, beta: Complex64) -> Result<Self> {
        let n = (alpha.norm_sqr() + beta.norm_sqr()).sqrt();
        if n <= 0.0 {
            return Err(Error::InvalidState {
                reason: "zero amplitude vector".into(),
            });
        }
        Ok(PureQubit {
            alpha: alpha / n,
            beta: beta / n,
        })
    }

    /// Bloch-sphere parameterization (cos(θ/2), e^{iφ} sin(θ/2)).
    pub fn from_angles(theta: f64, phi: f64) -> Self {
        PureQubit {
            alpha: Complex64::new((theta / 2.0).cos(), 0.0),
            beta: Complex64::from_polar((theta / 2.0).sin(), phi),
        }
    }

    pub fn amplitudes(&self) -> [Complex64; 2] {
        [self.alpha, self.beta]
    }

    pub fn density(&self) -> DensityOperator {
        DensityOperator::new_unchecked(outer(&self.amplitudes(), &self.amplitudes()))
    }
}

/// ⟨ψ|ρ|ψ⟩, clamped into [0, 1] against rounding.
pub fn fidelity(rho: &DensityOperator, psi: &PureQubit) -> f64 {
    assert_eq!(rho.dim(), 2, "fidelity expects a qubit state");
    let v = psi.amplitudes();
    let rv = rho.matrix().mul_vec(&v);
    inner(&v, &rv).re.clamp(0.0, 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qmath::matrix::pauli_x;

    #[test]
    fn fidelity_with_itself_is_one() {
        let z = PureQubit::normalized(Complex64::new(0.6, 0.2), Complex64::new(0.0, -0.77)).unwrap();
        assert!((fidelity(&z.density(), &z) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn fidelity_with_maximally_mixed_is_half() {
        let z = PureQubit::from_angles(1.1, 2.3);
        let f = fidelity(&DensityOperator::maximally_mixed(2), &z);
        assert!((f - 0.5).abs() < 1e-12);
    }

    #[test]
    fn fidelity_orthogonal_flip_is_zero() {
        // σ^x |0><0| σ^x = |1><1| is orthogonal to |0>.
        let z = PureQubit::new(ONE, ZERO).unwrap();
        let rho = pauli_x().matmul(z.density().matrix()).matmul(&pauli_x());
        let rho = DensityOperator::new(rho).unwrap();
        assert!(fidelity(&rho, &z) < 1e-12);
    }

    #[test]
    fn density_validation_rejects_bad_trace() {
        let m = CMatrix::identity(2);
        assert!(DensityOperator::new(m).is_err());
    }

    #[test]
    fn bloch_roundtrip() {
        let rho = DensityOperator::from_bloch(0.3, -0.4, 0.5).unwrap();
        let (x, y, z) = rho.bloch();
        assert!((x - 0.3).abs() < 1e-14 && (y + 0.4).abs() < 1e-14 && (z - 0.5).abs() < 1e-14);
    }
}
