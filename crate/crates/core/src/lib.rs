//! Riley polynomials of 2-bridge knots and the bound
//! `#{real roots of λ_K} ≥ |σ(K)| / 2`.
//!
//! * [`twobridge`]: fractions `p/q`, sign sequences, signature.
//! * [`riley`]: the parabolic word, `λ_K`, verification and certification.
//! * [`sturmvar`]: sign variations and the generalized Sturm bound.
//! * [`deform`]: the two-variable deformation `ψ(s, x)` and its continuation
//!   to elliptic traces.
//! * [`exactpoly`]: exact integer polynomials and real-root isolation.

pub mod deform;
pub mod exactpoly;
pub mod riley;
pub mod sturmvar;
pub mod twobridge;

pub use deform::{continue_root, psi_of, verify_representation, LaurentBi, SymPoly, Witness};
pub use exactpoly::{count_real_roots, isolate_real_roots, IntPoly, Interval, PolyError, Sign};
pub use riley::{
    certify_parabolic, lemma31_check, riley_polynomial, riley_polynomial_of, riley_sequence,
    verify_conjecture, RileyError, RileySequence, VerificationReport, Verifier,
};
pub use sturmvar::{check_hypotheses, lower_bound, PolySeq};
pub use twobridge::{
    enumerate, enumerate_dedup, normalize, sign_sequences, signature, Fraction, KnotError,
    KnotInvariants, SignData,
};
