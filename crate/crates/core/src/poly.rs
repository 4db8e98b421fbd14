//! Exact univariate polynomials in `t` with arbitrary-precision integer
//! coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Coefficient `i` is the coefficient of `t^i`. Trailing zeros are always
/// trimmed, so the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly::default()
    }

    pub fn one() -> Self {
        IntPoly::from_i64s(&[1])
    }

    /// `c * t^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        IntPoly::new(coeffs)
    }

    /// `(1 - t)^k`.
    pub fn one_minus_t_pow(k: usize) -> Self {
        // binomial row with alternating signs
        let mut coeffs = Vec::with_capacity(k + 1);
        let mut c = BigInt::one();
        for i in 0..=k {
            coeffs.push(if i % 2 == 0 { c.clone() } else { -c.clone() });
            c = c * BigInt::from(k - i) / BigInt::from(i + 1);
        }
        IntPoly::new(coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Exact quotient by `(1 - t)`.
    pub fn div_one_minus_t(&self) -> Result<IntPoly> {
        if !self.eval_at_one().is_zero() {
            return Err(Error::Inconsistent(format!(
                "{self} is not divisible by (1-t)"
            )));
        }
        // p = (1 - t) q  =>  q_i = p_i + q_{i-1}
        let mut q = Vec::with_capacity(self.coeffs.len());
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().take(self.coeffs.len().saturating_sub(1)) {
            acc += c;
            q.push(acc.clone());
        }
        Ok(IntPoly::new(q))
    }

    /// Exact quotient by `(1 - t)^k`; fails if the division leaves a remainder.
    pub fn div_one_minus_t_pow(&self, k: usize) -> Result<IntPoly> {
        let mut p = self.clone();
        for _ in 0..k {
            p = p.div_one_minus_t()?;
        }
        Ok(p)
    }

    /// Largest `k` with `(1 - t)^k` dividing a nonzero polynomial.
    pub fn one_minus_t_multiplicity(&self) -> usize {
        if self.is_zero() {
            return 0;
        }
        let mut p = self.clone();
        let mut k = 0;
        while let Ok(q) = p.div_one_minus_t() {
            if q.is_zero() {
                break;
            }
            p = q;
            k += 1;
        }
        k
    }

    /// Coefficients as `i64`, for display and tests; `None` on overflow.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(|c| i64::try_from(c).ok()).collect()
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Renders as `1+3t-2t^2-t^3`; the zero polynomial renders as `0`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else if first { "" } else { "+" };
            let mag = c.abs();
            let mag_str = if i > 0 && mag.is_one() { String::new() } else { mag.to_string() };
            let var = match i {
                0 => String::new(),
                1 => "t".to_owned(),
                _ => format!("t^{i}"),
            };
            write!(f, "{sign}{mag_str}{var}")?;
            first = false;
        }
        Ok(())
    }
}
