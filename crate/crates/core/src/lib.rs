//! Computation of c-nilpotent multipliers of finite-dimensional nilpotent Lie
//! algebras from first principles: free presentations over Hall bases, exact
//! rational linear algebra, and combinatorial cross-checks.
//!
//! The crate is organized bottom-up:
//!
//! * [`rational`] / [`linalg`] - exact scalars, RREF, kernels, canonical
//!   subspaces;
//! * [`witt`] / [`lyndon`] - Möbius function, Witt numbers `l_d(n)`, and an
//!   independent Lyndon-word enumeration used only for cross-checking;
//! * [`hall`] - basic commutators on an ordered (optionally grouped) alphabet;
//! * [`tensor`] / [`frame`] - the free Lie algebra embedded in the graded
//!   tensor algebra, Hall-coordinate solvers, free nilpotent structure
//!   constants;
//! * [`algebra`] - structure-constant Lie algebras: validation, lower central
//!   series, centers, quotients, direct sums, the `T (+) A` splitting, and a
//!   catalog (`A(n)`, `H(m)`, `f(d,k)`);
//! * [`multiplier`] - the multiplier pipeline: brute-force
//!   `dim M^(c)(L)` from a free presentation, the tau tensor-dimension
//!   formula, the closed form for direct sums, and the verification harness
//!   comparing them;
//! * [`capability`] - the epicenter dimension criterion and capability
//!   reduction rules over direct-sum expressions.

pub mod algebra;
pub mod capability;
pub mod error;
pub mod frame;
pub mod hall;
pub mod linalg;
pub mod lyndon;
pub mod multiplier;
pub mod rational;
pub mod tensor;
pub mod witt;

pub use error::Error;

/// Default cap on the dimension of a free Hall frame built by the multiplier
/// pipeline or the catalog.
pub const DEFAULT_BUDGET: usize = 2000;
