//! Exact computations with dual mock-Lie algebras: anticommutative algebras
//! satisfying `(xy)z = -x(yz)`.
//!
//! The crate is layered bottom-up:
//!
//! - [`exact`]: rationals, Laurent polynomials and rational functions in `t`,
//!   dense matrices, subspaces.
//! - [`algcore`]: algebras as structure-constant tensors, identities,
//!   annihilators, derivations, basis changes.
//! - [`cohom`]: cocycles, coboundaries and the second cohomology `H²`.
//! - [`ext`]: central extensions and the automorphism action on cocycles.
//! - [`degen`]: parametric bases, limits at `t = 0`, degeneration graphs.
//! - [`shell`]: the built-in catalog, text parsers, reports and the CLI.
//!
//! ```
//! use dualmock::shell::catalog;
//! use dualmock::cohom::h2_basis;
//!
//! let a = catalog::get("D5_03").unwrap();
//! assert_eq!(h2_basis(&a.algebra).h2_reps.len(), 1);
//! ```

pub mod algcore;
pub mod cohom;
pub mod degen;
pub mod error;
pub mod exact;
pub mod ext;
pub mod shell;

pub use error::{Error, Result};
