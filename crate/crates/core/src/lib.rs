//! Exact computation of non-unique factorization invariants.
//!
//! The crate covers zero-sum monoids over finite abelian groups, tiled
//! orders over `Z_p` at finite precision, a generic factorization engine
//! for atomic monoids with finite divisor enumeration, and T-block monoids.

pub mod abelian;
pub mod codec;
pub mod error;
pub mod factor;
pub mod padic;
pub mod tblock;
pub mod tiled;
pub mod zerosum;

pub use error::{Error, Result};
