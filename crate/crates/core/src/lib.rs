//! Exact computations for the two-parameter quantum algebra `U_{r,s}(sl_n)`,
//! its Hecke algebra `H_m(r,s)` and the fusion procedure for primitive
//! idempotents.
//!
//! Everything is computed over arbitrary-precision rationals. The main entry
//! points are:
//!
//! - [`tableaux`]: partitions, standard tableaux, contents, permutations.
//! - [`exactring`]: rationals, the parameter pair, polynomial fractions with
//!   factored linear denominators and the consecutive-evaluation engine.
//! - [`hecke`]: normal-form arithmetic in `H_m(r,s)`, Jucys–Murphy elements and
//!   the inductive idempotents.
//! - [`fusion`]: Baxterized generators, `Ψ(u_1, …, u_m)` and fused idempotents.
//! - [`qalgebra`]: the defining representation, coproduct actions and R-matrices.
//! - [`schurweyl`]: images of idempotents on `V^{⊗m}` and the duality audit.
//! - [`cli`]: the command-line front end.

pub mod check;
pub mod cli;
pub mod error;
pub mod exactring;
pub mod fusion;
pub mod hecke;
pub mod linalg;
pub mod qalgebra;
pub mod schurweyl;
pub mod tableaux;

pub use error::{Error, Result};
pub use exactring::{Params, Rational};
