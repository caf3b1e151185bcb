//! Dense complex linear algebra and information-theoretic primitives.
//!
//! Exact small-dimension paths cover the 2×2 and 4×4 operators of the
//! protocol; the same routines scale to the ~2^12-dimensional tensor powers
//! needed by the hypothesis-testing convergence checks. Logarithms are base
//! 2 throughout, so every entropy and capacity is in bits.

mod eigen;
mod info;
mod matrix;
mod state;

pub use eigen::{eig_hermitian, Eigensystem};
pub use info::{
    binary_entropy, relative_entropy, von_neumann_entropy, SUPPORT_EIGENVALUE_TOL,
};
pub use matrix::{
    inner, kron, monopole, outer, partial_trace, pauli_x, pauli_y, pauli_z, trace_norm, CMatrix,
    Subsystem, I, ONE, ZERO,
};
pub use state::{
    fidelity, DensityOperator, PureQubit, STATE_HERMITICITY_TOL, STATE_MIN_EIGENVALUE,
    STATE_TRACE_TOL,
};
