//! Approximation by integer-coefficient polynomials on compact subsets of ℝ.
//!
//! The library works with compacts given as finite unions of closed intervals
//! and provides:
//!
//! * monic minimax (Chebyshev) polynomials of a compact, with closed forms on
//!   single intervals and a certified exchange solver on unions ([`chebyshev`]);
//! * capacity (transfinite diameter) estimation from Chebyshev norms and from
//!   Fekete point products ([`capacity`]);
//! * construction of integer polynomials of sup-norm `< 1` when the capacity
//!   is below one ([`smallnorm`]);
//! * the Fekete kernel `J(K)` — the common zeros in `K` of all integer
//!   polynomials of sup-norm `< 1` — as certified conjugate classes of totally
//!   real algebraic integers ([`kernel`]);
//! * the decision procedure for approximability and the explicit construction
//!   of an integer polynomial within `ε` of a target function ([`approximate`]).

pub mod approximate;
pub mod capacity;
pub mod chebyshev;
pub mod error;
pub mod kernel;
pub mod poly;
pub mod selftest;
pub mod set;
pub mod smallnorm;
pub mod sturm;
pub mod supnorm;

pub use error::Error;
pub use poly::{IntPoly, RealPoly};
pub use set::CompactSet;
pub use supnorm::{sup_norm, SupNormResult};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
