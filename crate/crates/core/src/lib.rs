//! Exact-arithmetic invariants of long virtual and long flat knots.
//!
//! A biquandle switch `S = [[A,B],[C,D]]`, given as d×d matrices over a
//! commutative Laurent polynomial ring Λ, assigns linear relations to the
//! crossings of a long knot diagram. Four modules arise from the resulting
//! presentation matrix — the plain module, the closure (x0 = xn), and the
//! two one-ended quotients (x0 = 0 / xn = 0) — and each yields a family of
//! codimension-r determinant invariants: gcds of the determinants of all
//! submatrices obtained by deleting r block rows and r (or r+1) block
//! columns. Everything is computed exactly; results are polynomials defined
//! up to units and compared through canonical forms.

pub mod cli;
pub mod diagram;
pub mod error;
pub mod invariants;
pub mod matrix;
pub mod ring;
pub mod switch;

pub use error::{Error, Result};
