//! Entropies and relative entropies, all in bits (log base 2).

use super::eigen::eig_hermitian;
use super::matrix::inner;
use super::state::DensityOperator;
use crate::error::{Error, Result};

/// Eigenvalues below this are treated as outside the support.
pub const SUPPORT_EIGENVALUE_TOL: f64 = 1e-12;

/// Binary Shannon entropy H(p) = -p log₂ p - (1-p) log₂(1-p), with
/// 0 log 0 := 0. Inputs within 1e-12 of the boundary are clamped.
pub fn binary_entropy(p: f64) -> Result<f64> {
    if !(-1e-12..=1.0 + 1e-12).contains(&p) {
        return Err(Error::OutOfRange {
            name: "p",
            value: p,
            range: "[0, 1]",
        });
    }
    let p = p.clamp(0.0, 1.0);
    Ok(plog(p) + plog(1.0 - p))
}

fn plog(p: f64) -> f64 {
    if p <= 0.0 {
        0.0
    } else {
        -p * p.log2()
    }
}

/// Von Neumann entropy S(ρ) = -Σ λ log₂ λ in bits.
pub fn von_neumann_entropy(rho: &DensityOperator) -> f64 {
    let eig = eig_hermitian(rho.matrix()).expect("density operators are Hermitian");
    eig.values.iter().map(|&l| plog(l.max(0.0))).sum()
}

/// Quantum relative entropy D(ρ‖σ) = tr ρ(log₂ ρ - log₂ σ) in bits;
/// +∞ when the support of ρ leaks outside the support of σ.
pub fn relative_entropy(rho: &DensityOperator, sigma: &DensityOperator) -> f64 {
    assert_eq!(rho.dim(), sigma.dim(), "relative_entropy dimension mismatch");
    let er = eig_hermitian(rho.matrix()).expect("rho Hermitian");
    let es = eig_hermitian(sigma.matrix()).expect("sigma Hermitian");

    // Mass of ρ outside supp(σ) decides the infinite branch.
    let mut outside = 0.0;
    for (j, &mu) in es.values.iter().enumerate() {
        if mu <= SUPPORT_EIGENVALUE_TOL {
            let w = es.vectors.column(j);
            let rw = rho.matrix().mul_vec(&w);
            outside += inner(&w, &rw).re;
        }
    }
    if outside > SUPPORT_EIGENVALUE_TOL {
        return f64::INFINITY;
    }

    let mut d = 0.0;
    for (i, &lam) in er.values.iter().enumerate() {
        if lam <= SUPPORT_EIGENVALUE_TOL {
            continue;
        }
        d += lam * lam.log2();
        let v = er.vectors.column(i);
        for (j, &mu) in es.values.iter().enumerate() {
            if mu <= SUPPORT_EIGENVALUE_TOL {
                continue;
            }
            let overlap = inner(&es.vectors.column(j), &v).norm_sqr();
            d -= lam * overlap * mu.log2();
        }
    }
    d.max(0.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qmath::matrix::{CMatrix, ONE, ZERO};
    use num_complex::Complex64;

    #[test]
    fn binary_entropy_reference_points() {
        assert!((binary_entropy(0.5).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(binary_entropy(0.0).unwrap(), 0.0);
        assert_eq!(binary_entropy(1.0).unwrap(), 0.0);
        assert!(binary_entropy(1.5).is_err());
        assert!(binary_entropy(-1e-6).is_err());
        for &p in &[0.1, 0.25, 0.37, 0.8] {
            let a = binary_entropy(p).unwrap();
            let b = binary_entropy(1.0 - p).unwrap();
            assert!((a - b).abs() < 1e-15, "H symmetry at {p}");
        }
    }

    #[test]
    fn entropy_of_pure_and_mixed() {
        let pure = DensityOperator::ground_qubit();
        assert!(von_neumann_entropy(&pure).abs() < 1e-12);
        let mixed = DensityOperator::maximally_mixed(2);
        assert!((von_neumann_entropy(&mixed) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn entropy_diagonal_case_matches_binary_entropy() {
        let m = CMatrix::from_rows(&[
            vec![Complex64::new(0.9, 0.0), ZERO],
            vec![ZERO, Complex64::new(0.1, 0.0)],
        ]);
        let rho = DensityOperator::new(m).unwrap();
        let s = von_neumann_entropy(&rho);
        assert!((s - binary_entropy(0.9).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn relative_entropy_reference_points() {
        let rho = DensityOperator::from_bloch(0.2, 0.5, -0.3).unwrap();
        assert!(relative_entropy(&rho, &rho).abs() < 1e-10);

        let zero = DensityOperator::from_pure(&[ONE, ZERO]).unwrap();
        let mixed = DensityOperator::maximally_mixed(2);
        assert!((relative_entropy(&zero, &mixed) - 1.0).abs() < 1e-12);

        let one = DensityOperator::from_pure(&[ZERO, ONE]).unwrap();
        assert!(relative_entropy(&zero, &one).is_infinite());
    }

    #[test]
    fn relative_entropy_nonnegative_on_samples() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(11);
        let mut bloch = |rng: &mut rand_chacha::ChaCha12Rng| {
            DensityOperator::from_bloch(
                rng.gen_range(-0.57..0.57),
                rng.gen_range(-0.57..0.57),
                rng.gen_range(-0.57..0.57),
            )
            .unwrap()
        };
        for _ in 0..40 {
            let a = bloch(&mut rng);
            let b = bloch(&mut rng);
            let d = relative_entropy(&a, &b);
            assert!(d >= 0.0, "relative entropy must be nonnegative");
            let same = relative_entropy(&a, &a);
            assert!(same.abs() < 1e-10);
        }
    }
}
