//! Truncated discrete valuation ring arithmetic: the `p`-adic integers
//! modulo `p^N`, and square matrices over them (the split case, where the
//! reduced norm is the determinant).

mod divisors;
mod matrix;

pub use divisors::{
    enumerate_hnfs, left_divisors, left_divisors_exhaustive, FullMatrixRing, LeftDivisor, MatrixOrder,
    OrbitKey, OrderArithmetic, UnitCosets,
};
pub use matrix::{unit_recovery, DvrMatrix};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest modulus we allow; keeps sums in `u64` and products in `u128`.
const MAX_MODULUS: u64 = 1 << 62;

/// A prime `p` and a working precision `N`: all arithmetic is modulo `p^N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DvrContext {
    p: u64,
    precision: u32,
    modulus: u64,
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl DvrContext {
    pub fn new(p: u64, precision: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::invalid(format!("{p} is not prime")));
        }
        if precision < 1 {
            return Err(Error::invalid("precision must be at least 1"));
        }
        let mut modulus: u64 = 1;
        for _ in 0..precision {
            modulus = modulus
                .checked_mul(p)
                .filter(|&m| m <= MAX_MODULUS)
                .ok_or_else(|| Error::invalid(format!("{p}^{precision} does not fit the 62-bit modulus")))?;
        }
        Ok(DvrContext { p, precision, modulus })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    /// `p^N`.
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn with_precision(&self, precision: u32) -> Result<Self> {
        DvrContext::new(self.p, precision)
    }

    /// `p^k` as an integer; `k` must not exceed the precision.
    pub fn pow_p(&self, k: u32) -> u64 {
        debug_assert!(k <= self.precision);
        self.p.pow(k)
    }

    pub fn reduce(&self, x: i128) -> u64 {
        x.rem_euclid(self.modulus as i128) as u64
    }

    pub(crate) fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.modulus {
            s - self.modulus
        } else {
            s
        }
    }

    pub(crate) fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.modulus - b
        }
    }

    pub(crate) fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.modulus as u128) as u64
    }

    pub(crate) fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.modulus - a
        }
    }

    /// Valuation of a residue; `N` when the residue is zero.
    pub(crate) fn val(&self, mut x: u64) -> u32 {
        if x == 0 {
            return self.precision;
        }
        let mut v = 0;
        while x % self.p == 0 {
            x /= self.p;
            v += 1;
        }
        v
    }

    /// Inverse of a residue prime to `p`.
    pub(crate) fn inv(&self, a: u64) -> Option<u64> {
        if a % self.p == 0 {
            return None;
        }
        let (mut old_r, mut r) = (a as i128, self.modulus as i128);
        let (mut old_s, mut s) = (1i128, 0i128);
        while r != 0 {
            let q = old_r / r;
            (old_r, r) = (r, old_r - q * r);
            (old_s, s) = (s, old_s - q * s);
        }
        debug_assert_eq!(old_r, 1);
        Some(self.reduce(old_s))
    }
}

impl fmt::Display for DvrContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z_{}/({}^{})", self.p, self.p, self.precision)
    }
}

/// A valuation truncated at the working precision.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Valuation {
    pub value: u32,
    /// Set when the element is zero at the working precision, so `value == N`
    /// is only a lower bound.
    pub at_precision: bool,
}

/// An element of `Z_p / p^N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DvrElement {
    ctx: DvrContext,
    residue: u64,
}

impl DvrElement {
    pub fn new(ctx: DvrContext, value: i64) -> Self {
        DvrElement { ctx, residue: ctx.reduce(value as i128) }
    }

    pub fn from_residue(ctx: DvrContext, residue: u64) -> Result<Self> {
        if residue >= ctx.modulus {
            return Err(Error::invalid(format!("residue {residue} is outside [0, {})", ctx.modulus)));
        }
        Ok(DvrElement { ctx, residue })
    }

    pub fn context(&self) -> DvrContext {
        self.ctx
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn valuation(&self) -> Valuation {
        Valuation { value: self.ctx.val(self.residue), at_precision: self.residue == 0 }
    }

    pub fn is_unit(&self) -> bool {
        self.residue % self.ctx.p != 0
    }

    pub fn inverse(&self) -> Option<Self> {
        self.ctx.inv(self.residue).map(|r| DvrElement { ctx: self.ctx, residue: r })
    }
}

impl Add for DvrElement {
    type Output = DvrElement;
    fn add(self, rhs: Self) -> Self {
        debug_assert_eq!(self.ctx, rhs.ctx);
        DvrElement { ctx: self.ctx, residue: self.ctx.add(self.residue, rhs.residue) }
    }
}

impl Sub for DvrElement {
    type Output = DvrElement;
    fn sub(self, rhs: Self) -> Self {
        debug_assert_eq!(self.ctx, rhs.ctx);
        DvrElement { ctx: self.ctx, residue: self.ctx.sub(self.residue, rhs.residue) }
    }
}

impl Mul for DvrElement {
    type Output = DvrElement;
    fn mul(self, rhs: Self) -> Self {
        debug_assert_eq!(self.ctx, rhs.ctx);
        DvrElement { ctx: self.ctx, residue: self.ctx.mul(self.residue, rhs.residue) }
    }
}

impl Neg for DvrElement {
    type Output = DvrElement;
    fn neg(self) -> Self {
        DvrElement { ctx: self.ctx, residue: self.ctx.neg(self.residue) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn context_validation() {
        assert!(DvrContext::new(4, 3).is_err());
        assert!(DvrContext::new(1, 3).is_err());
        assert!(DvrContext::new(2, 0).is_err());
        assert!(DvrContext::new(2, 63).is_err());
        assert_eq!(DvrContext::new(3, 4).unwrap().modulus(), 81);
    }

    #[test]
    fn valuation_examples() {
        let c24 = DvrContext::new(2, 4).unwrap();
        assert_eq!(DvrElement::new(c24, 12).valuation(), Valuation { value: 2, at_precision: false });
        let c33 = DvrContext::new(3, 3).unwrap();
        assert_eq!(DvrElement::new(c33, 1).valuation(), Valuation { value: 0, at_precision: false });
        assert_eq!(DvrElement::new(c24, 0).valuation(), Valuation { value: 4, at_precision: true });
        assert_eq!(DvrElement::new(c24, 16).valuation().at_precision, true);
    }

    #[test]
    fn inverses() {
        let ctx = DvrContext::new(3, 5).unwrap();
        for x in 0..ctx.modulus() as i64 {
            let e = DvrElement::new(ctx, x);
            match e.inverse() {
                Some(inv) => assert_eq!((e * inv).residue(), 1),
                None => assert!(!e.is_unit()),
            }
        }
        assert_eq!(DvrElement::new(ctx, -1).residue(), 242);
    }
}
