//! Exact-arithmetic toolkit for intersection theory on moduli of genus-zero
//! stable maps to the projective line.
//!
//! Everything is computed over the rationals with no floating point. The crate
//! provides:
//!
//! * [`rat`]: arbitrary-precision rational numbers with canonical `p/q` text form.
//! * [`poly`]: multivariate polynomials over the rationals with a fixed,
//!   ordered generator list.
//! * [`matrix`]: dense rational matrices, reduced row echelon form, kernels.
//! * [`qpoly`]: single-variable Serre/Poincare polynomials in `q`, Gaussian
//!   binomials, and symmetric/exterior square operations for involution-equivariant
//!   classes.
//! * [`serre`]: closed-form and stratumwise Serre polynomial computations for
//!   the one- and two-pointed degree-two moduli spaces, plus Betti number formulas.
//! * [`graphs`]: enumeration and automorphisms of torus fixed-point graphs.
//! * [`localization`]: equivariant Euler classes of fixed-locus normal bundles,
//!   divisor restrictions, and Bott-style integration of divisor monomials.
//! * [`chow`]: finite graded presentations of the Chow rings, normal forms,
//!   and ring-side integration.
//! * [`relations`]: recovery of ring relations from integral constraint matrices.
//! * [`correlators`]: gravitational descendant correlators computed two
//!   independent ways (ring side and axiom recursion) and cross-checked.
//! * [`verify`]: the end-to-end verification battery used by the CLI.

pub mod chow;
pub mod correlators;
pub mod golden;
pub mod graphs;
pub mod localization;
pub mod matrix;
pub mod poly;
pub mod qpoly;
pub mod rat;
pub mod relations;
pub mod serre;
pub mod verify;

pub use poly::{MultiPoly, VarSet};
pub use qpoly::QPoly;
pub use rat::Rat;
