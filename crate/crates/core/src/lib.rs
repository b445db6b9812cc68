//! Exact Grassmann-Berezin calculus and a verifier for fermionic solutions of
//! the pentagon equation attached to the 2-3 Pachner move.
//!
//! The layers build on each other:
//!
//! * [`coeffs`]: coefficient rings. Exact rational functions in the vertex
//!   coordinates `z1..z5` (plus the deformation parameters), localized at the
//!   differences `z_i - z_j`, and prime fields for randomized testing.
//! * [`grassmann`]: anticommuting generators, Berezin integrals, exponentials.
//! * [`weights`]: tetrahedron weights `f`, `g = f + eps*lambda*c*(faces)` and
//!   `h = f + eps*mu`.
//! * [`gaussian`]: the same weights as Gaussian integrals over auxiliary
//!   generators, and coefficient extraction through matrix minors.
//! * [`pentagon`]: both sides of the pentagon equation, residuals, and the
//!   single-monomial and degree-structure checks.

pub mod coeffs;
pub mod error;
pub mod gaussian;
pub mod grassmann;
pub mod par;
pub mod pentagon;
pub mod weights;

pub use coeffs::{Fp, PrimeField, RationalFunctions, Ring, Scalar};
pub use error::{Error, Result};
pub use grassmann::{GeneratorId, GrassmannElement, Monomial};
pub use par::Exec;
pub use pentagon::Side;
pub use weights::{DeformationParams, ModPoint, Param, Setting, Tetrahedron, WeightKind};
