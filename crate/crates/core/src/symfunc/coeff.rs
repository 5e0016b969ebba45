use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::Value;

/// Exact coefficient ring used by expansions and polynomials.
pub trait Coefficient:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + From<i64>
{
}

impl<T> Coefficient for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
        + From<i64>
{
}

/// JSON field name and value for a coefficient.
pub trait JsonCoeff {
    const KEY: &'static str;
    fn to_json(&self) -> Value;
}

pub(crate) fn bigint_json(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(v) => Value::from(v),
        None => Value::String(c.to_string()),
    }
}

impl JsonCoeff for BigInt {
    const KEY: &'static str = "coeff";
    fn to_json(&self) -> Value {
        bigint_json(self)
    }
}

impl JsonCoeff for i64 {
    const KEY: &'static str = "coeff";
    fn to_json(&self) -> Value {
        Value::from(*self)
    }
}

/// Dense polynomial in `t` with integer coefficients, `c[k]` the coefficient of `t^k`.
/// Trailing zeros are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct TPoly {
    c: Vec<BigInt>,
}

impl TPoly {
    pub fn from_coeffs<I: IntoIterator<Item = BigInt>>(it: I) -> Self {
        let mut p = Self { c: it.into_iter().collect() };
        p.trim();
        p
    }

    pub fn monomial(deg: usize, coeff: BigInt) -> Self {
        let mut c = vec![BigInt::zero(); deg + 1];
        c[deg] = coeff;
        Self::from_coeffs(c)
    }

    pub fn t() -> Self {
        Self::monomial(1, BigInt::one())
    }

    fn trim(&mut self) {
        while self.c.last().is_some_and(|x| x.is_zero()) {
            self.c.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.c
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.c.get(k).cloned().unwrap_or_default()
    }

    pub fn eval_one(&self) -> BigInt {
        self.c.iter().sum()
    }

    pub fn all_nonnegative(&self) -> bool {
        self.c.iter().all(|x| !x.is_negative())
    }

    /// Palindromic about `center_twice / 2`, i.e. `c[k] = c[center_twice - k]`.
    pub fn is_palindromic_about(&self, center_twice: usize) -> bool {
        (0..=center_twice.max(self.c.len())).all(|k| {
            let mirror = center_twice.checked_sub(k);
            match mirror {
                Some(m) => self.coeff(k) == self.coeff(m),
                None => self.coeff(k).is_zero(),
            }
        })
    }
}

impl fmt::Debug for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let neg = a.is_negative();
            let mag = a.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if k == 1 {
                        f.write_str("t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl From<i64> for TPoly {
    fn from(v: i64) -> Self {
        Self::from_coeffs([BigInt::from(v)])
    }
}

impl From<BigInt> for TPoly {
    fn from(v: BigInt) -> Self {
        Self::from_coeffs([v])
    }
}

impl Add for TPoly {
    type Output = TPoly;
    fn add(self, rhs: TPoly) -> TPoly {
        let (mut long, short) = if self.c.len() >= rhs.c.len() { (self, rhs) } else { (rhs, self) };
        for (a, b) in long.c.iter_mut().zip(short.c) {
            *a += b;
        }
        long.trim();
        long
    }
}

impl Neg for TPoly {
    type Output = TPoly;
    fn neg(mut self) -> TPoly {
        for a in &mut self.c {
            *a = -std::mem::take(a);
        }
        self
    }
}

impl Sub for TPoly {
    type Output = TPoly;
    fn sub(self, rhs: TPoly) -> TPoly {
        self + (-rhs)
    }
}

impl Mul for TPoly {
    type Output = TPoly;
    fn mul(self, rhs: TPoly) -> TPoly {
        if self.c.is_empty() || rhs.c.is_empty() {
            return TPoly::default();
        }
        let mut c = vec![BigInt::zero(); self.c.len() + rhs.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        TPoly::from_coeffs(c)
    }
}

impl Zero for TPoly {
    fn zero() -> Self {
        TPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
}

impl One for TPoly {
    fn one() -> Self {
        TPoly::from(1)
    }
}

impl JsonCoeff for TPoly {
    const KEY: &'static str = "coeff_t";
    fn to_json(&self) -> Value {
        Value::Array(self.c.iter().map(bigint_json).collect())
    }
}
