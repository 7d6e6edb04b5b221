//! Exact quaternion scalars over the rationals.
//!
//! A [`Quaternion`] is `w + x*i + y*j + z*k` with arbitrary-precision
//! rational coefficients. Multiplication follows the Hamilton table
//! `i^2 = j^2 = k^2 = ijk = -1`; it is associative and distributive but not
//! commutative. Values are immutable and every operation is a pure function,
//! so they can be shared freely between threads.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar, always in lowest terms with a positive denominator.
/// Equality is structural.
pub type Rational = num_rational::BigRational;

/// Builds the rational `num/den`. Panics if `den == 0`.
pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// A quaternion `w + x*i + y*j + z*k` with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quaternion {
    /// Coefficient of 1.
    pub w: Rational,
    /// Coefficient of i.
    pub x: Rational,
    /// Coefficient of j.
    pub y: Rational,
    /// Coefficient of k.
    pub z: Rational,
}

impl Quaternion {
    pub fn new(w: Rational, x: Rational, y: Rational, z: Rational) -> Self {
        Self { w, x, y, z }
    }

    /// Quaternion with integer coefficients of 1, i, j, k.
    pub fn from_ints(w: i64, x: i64, y: i64, z: i64) -> Self {
        Self::new(rat_int(w), rat_int(x), rat_int(y), rat_int(z))
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::new(r, Rational::zero(), Rational::zero(), Rational::zero())
    }

    pub fn zero() -> Self {
        Self::from_ints(0, 0, 0, 0)
    }

    pub fn one() -> Self {
        Self::from_ints(1, 0, 0, 0)
    }

    pub fn unit_i() -> Self {
        Self::from_ints(0, 1, 0, 0)
    }

    pub fn unit_j() -> Self {
        Self::from_ints(0, 0, 1, 0)
    }

    pub fn unit_k() -> Self {
        Self::from_ints(0, 0, 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.w.is_zero() && self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    /// True when the i, j, k parts all vanish.
    pub fn is_real(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    /// Conjugate: the i, j, k parts change sign.
    pub fn conj(&self) -> Self {
        Self::new(self.w.clone(), -self.x.clone(), -self.y.clone(), -self.z.clone())
    }

    /// Squared norm `w^2 + x^2 + y^2 + z^2`, the real value of `q * conj(q)`.
    pub fn norm_sq(&self) -> Rational {
        &self.w * &self.w + &self.x * &self.x + &self.y * &self.y + &self.z * &self.z
    }

    /// Multiplicative inverse `conj(q) / |q|^2`.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let inv_norm = self.norm_sq().recip();
        Ok(self.conj().scale(&inv_norm))
    }

    /// Multiplies every coefficient by the rational `r`. Rationals are
    /// central in the quaternions, so left and right scaling coincide.
    pub fn scale(&self, r: &Rational) -> Self {
        Self::new(&self.w * r, &self.x * r, &self.y * r, &self.z * r)
    }
}

impl Add for &Quaternion {
    type Output = Quaternion;

    fn add(self, rhs: &Quaternion) -> Quaternion {
        Quaternion::new(
            &self.w + &rhs.w,
            &self.x + &rhs.x,
            &self.y + &rhs.y,
            &self.z + &rhs.z,
        )
    }
}

impl Sub for &Quaternion {
    type Output = Quaternion;

    fn sub(self, rhs: &Quaternion) -> Quaternion {
        Quaternion::new(
            &self.w - &rhs.w,
            &self.x - &rhs.x,
            &self.y - &rhs.y,
            &self.z - &rhs.z,
        )
    }
}

impl Mul for &Quaternion {
    type Output = Quaternion;

    fn mul(self, rhs: &Quaternion) -> Quaternion {
        let (a0, a1, a2, a3) = (&self.w, &self.x, &self.y, &self.z);
        let (b0, b1, b2, b3) = (&rhs.w, &rhs.x, &rhs.y, &rhs.z);
        Quaternion::new(
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        )
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;

    fn neg(self) -> Quaternion {
        Quaternion::new(-self.w.clone(), -self.x.clone(), -self.y.clone(), -self.z.clone())
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: Quaternion) -> Quaternion {
        &self + &rhs
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, rhs: Quaternion) -> Quaternion {
        &self - &rhs
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: Quaternion) -> Quaternion {
        &self * &rhs
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        -&self
    }
}

/// Parses a quaternion literal.
///
/// An entry is one or more signed terms with no internal whitespace. Each
/// term is `[sign] [rational-coefficient] [unit]` where the coefficient is
/// an integer or `integer/positive-integer` and the unit is one of `i`,
/// `j`, `k` (absent for a real term). An omitted coefficient means 1, so
/// `-j` and `2-3i+j-k` are both valid. Repeated units accumulate.
pub fn parse_quat(text: &str) -> Result<Quaternion> {
    let bytes = text.as_bytes();
    let err = |position: usize, message: &str| Error::Parse {
        position,
        message: message.to_string(),
    };
    if bytes.is_empty() {
        return Err(err(1, "empty entry"));
    }
    let mut parts = [
        Rational::zero(),
        Rational::zero(),
        Rational::zero(),
        Rational::zero(),
    ];
    let mut pos = 0usize;
    let mut first = true;
    while pos < bytes.len() {
        // Sign: optional on the first term, mandatory separators afterwards.
        let negative = match bytes[pos] {
            b'+' => {
                pos += 1;
                false
            }
            b'-' => {
                pos += 1;
                true
            }
            _ if first => false,
            _ => return Err(err(pos + 1, "expected '+' or '-' between terms")),
        };
        first = false;
        if pos >= bytes.len() {
            return Err(err(pos + 1, "expected a term after sign"));
        }

        let mut coeff = None;
        if bytes[pos].is_ascii_digit() {
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            let numer = BigInt::from_str(&text[start..pos]).expect("digits");
            let mut denom = BigInt::one();
            if pos < bytes.len() && bytes[pos] == b'/' {
                pos += 1;
                let dstart = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                if dstart == pos {
                    return Err(err(pos + 1, "expected digits after '/'"));
                }
                denom = BigInt::from_str(&text[dstart..pos]).expect("digits");
                if denom.is_zero() {
                    return Err(err(dstart + 1, "zero denominator"));
                }
            }
            coeff = Some(Rational::new(numer, denom));
        }

        let slot = if pos < bytes.len() {
            match bytes[pos] {
                b'i' => {
                    pos += 1;
                    1
                }
                b'j' => {
                    pos += 1;
                    2
                }
                b'k' => {
                    pos += 1;
                    3
                }
                _ if coeff.is_some() => 0,
                _ => return Err(err(pos + 1, "expected a coefficient or unit")),
            }
        } else if coeff.is_some() {
            0
        } else {
            return Err(err(pos + 1, "expected a term"));
        };

        let mut value = coeff.unwrap_or_else(Rational::one);
        if negative {
            value = -value;
        }
        parts[slot] = &parts[slot] + &value;
    }
    let [w, x, y, z] = parts;
    Ok(Quaternion::new(w, x, y, z))
}

/// Canonical literal form of a quaternion: signed terms in the order
/// 1, i, j, k with zero terms skipped and every coefficient written out
/// explicitly (`-1+1i`, `3/2j`), or `0` for the zero quaternion.
pub fn format_quat(q: &Quaternion) -> String {
    let mut out = String::new();
    let units = ["", "i", "j", "k"];
    for (coeff, unit) in [&q.w, &q.x, &q.y, &q.z].into_iter().zip(units) {
        if coeff.is_zero() {
            continue;
        }
        if coeff.is_negative() {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        out.push_str(&coeff.abs().to_string());
        out.push_str(unit);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl FromStr for Quaternion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_quat(s)
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_quat(self))
    }
}
