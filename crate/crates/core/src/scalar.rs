// Copyright 2026 The scv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Gaussian rationals, the exact coefficient field used everywhere.
//!
//! Values are `a + b·i` with `a, b ∈ ℚ`. Both parts are kept in lowest terms
//! by `num_rational`, so structural equality is numerical equality.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An element of ℚ[i].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Gq {
    pub re: Rational64,
    pub im: Rational64,
}

impl Gq {
    pub const fn new(re: Rational64, im: Rational64) -> Self {
        Gq { re, im }
    }

    pub fn int(n: i64) -> Self {
        Gq::new(Rational64::from_integer(n), Rational64::zero())
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Gq::new(Rational64::new(num, den), Rational64::zero())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Gq::new(Rational64::zero(), Rational64::one())
    }

    /// `n·i`.
    pub fn imag(n: i64) -> Self {
        Gq::new(Rational64::zero(), Rational64::from_integer(n))
    }

    /// `(num/den)·i`.
    pub fn imag_ratio(num: i64, den: i64) -> Self {
        Gq::new(Rational64::zero(), Rational64::new(num, den))
    }

    pub fn from_sign(s: i8) -> Self {
        Gq::int(s as i64)
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Gq::new(self.re, -self.im)
    }

    /// `|re| + |im|`, an exact norm used for residual bookkeeping.
    pub fn l1(&self) -> Rational64 {
        self.re.abs() + self.im.abs()
    }

    /// Multiply by ±1 without going through rational multiplication.
    #[inline]
    pub fn signed(self, s: i8) -> Self {
        if s < 0 {
            -self
        } else {
            self
        }
    }

    /// Whether the value is exactly `+1` or `-1`.
    pub fn is_unit_sign(&self) -> bool {
        self.im.is_zero() && self.re.abs().is_one()
    }
}

impl Zero for Gq {
    fn zero() -> Self {
        Gq::new(Rational64::zero(), Rational64::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for Gq {
    fn one() -> Self {
        Gq::int(1)
    }
}

impl Add for Gq {
    type Output = Gq;
    #[inline]
    fn add(self, o: Gq) -> Gq {
        Gq::new(self.re + o.re, self.im + o.im)
    }
}

impl Sub for Gq {
    type Output = Gq;
    #[inline]
    fn sub(self, o: Gq) -> Gq {
        Gq::new(self.re - o.re, self.im - o.im)
    }
}

impl Neg for Gq {
    type Output = Gq;
    #[inline]
    fn neg(self) -> Gq {
        Gq::new(-self.re, -self.im)
    }
}

impl Mul for Gq {
    type Output = Gq;
    #[inline]
    fn mul(self, o: Gq) -> Gq {
        // Purely real operands are by far the most common case.
        if self.im.is_zero() && o.im.is_zero() {
            return Gq::new(self.re * o.re, Rational64::zero());
        }
        Gq::new(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )
    }
}

impl Div for Gq {
    type Output = Gq;
    fn div(self, o: Gq) -> Gq {
        assert!(!o.is_zero(), "division by zero in Q[i]");
        let den = o.re * o.re + o.im * o.im;
        let num = self * o.conj();
        Gq::new(num.re / den, num.im / den)
    }
}

impl AddAssign for Gq {
    #[inline]
    fn add_assign(&mut self, o: Gq) {
        self.re += o.re;
        self.im += o.im;
    }
}

impl SubAssign for Gq {
    #[inline]
    fn sub_assign(&mut self, o: Gq) {
        self.re -= o.re;
        self.im -= o.im;
    }
}

impl MulAssign for Gq {
    fn mul_assign(&mut self, o: Gq) {
        *self = *self * o;
    }
}

impl Sum for Gq {
    fn sum<I: Iterator<Item = Gq>>(iter: I) -> Gq {
        iter.fold(Gq::zero(), |a, b| a + b)
    }
}

impl From<i64> for Gq {
    fn from(n: i64) -> Self {
        Gq::int(n)
    }
}

impl From<Rational64> for Gq {
    fn from(r: Rational64) -> Self {
        Gq::new(r, Rational64::zero())
    }
}

impl fmt::Display for Gq {
    /// Canonical text form: `0`, `3/2`, `-i`, `1/2+3i`, `2-1/3i`.
    /// A rational in front of `i` multiplies it, so `1/3i` reads `(1/3)·i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let im_text = |v: Rational64| -> String {
            if v.abs().is_one() {
                "i".to_string()
            } else {
                format!("{}i", v.abs())
            }
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.re),
            (true, false) => {
                let sign = if self.im.is_negative() { "-" } else { "" };
                write!(f, "{}{}", sign, im_text(self.im))
            }
            (false, false) => {
                let sign = if self.im.is_negative() { "-" } else { "+" };
                write!(f, "{}{}{}", self.re, sign, im_text(self.im))
            }
        }
    }
}

impl fmt::Debug for Gq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed Gaussian rational: {0:?}")]
pub struct ParseGqError(pub String);

fn parse_rational(s: &str) -> Option<Rational64> {
    if s.is_empty() {
        return None;
    }
    Rational64::from_str(s).ok()
}

impl FromStr for Gq {
    type Err = ParseGqError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseGqError(s.to_string());
        let t = s.trim();
        if !t.ends_with('i') {
            return parse_rational(t).map(Gq::from).ok_or_else(err);
        }
        let body = &t[..t.len() - 1];
        // The split point is the last sign that is not the leading character.
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(k, _)| k)
            .last();
        let (re_part, im_part) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("", body),
        };
        let re = if re_part.is_empty() {
            Rational64::zero()
        } else {
            parse_rational(re_part).ok_or_else(err)?
        };
        let im = match im_part {
            "" | "+" => Rational64::one(),
            "-" => -Rational64::one(),
            other => parse_rational(other.trim_start_matches('+')).ok_or_else(err)?,
        };
        Ok(Gq::new(re, im))
    }
}

impl Serialize for Gq {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Gq {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn display_forms() {
        assert_eq!(Gq::zero().to_string(), "0");
        assert_eq!(Gq::ratio(3, 2).to_string(), "3/2");
        assert_eq!((-Gq::i()).to_string(), "-i");
        assert_eq!(Gq::imag_ratio(1, 3).to_string(), "1/3i");
        assert_eq!((Gq::int(2) - Gq::imag_ratio(1, 3)).to_string(), "2-1/3i");
        assert_eq!((Gq::ratio(-1, 2) + Gq::imag(3)).to_string(), "-1/2+3i");
    }

    #[test]
    fn i_squared_is_minus_one() {
        assert_eq!(Gq::i() * Gq::i(), Gq::int(-1));
        assert_eq!(Gq::int(1) / Gq::i(), -Gq::i());
    }

    fn gq() -> impl Strategy<Value = Gq> {
        (-50i64..50, 1i64..12, -50i64..50, 1i64..12)
            .prop_map(|(a, b, c, d)| Gq::new(Rational64::new(a, b), Rational64::new(c, d)))
    }

    proptest! {
        #[test]
        fn text_round_trip(x in gq()) {
            let back: Gq = x.to_string().parse().unwrap();
            prop_assert_eq!(back, x);
        }

        #[test]
        fn field_axioms(a in gq(), b in gq(), c in gq()) {
            prop_assert_eq!(a * (b + c), a * b + a * c);
            prop_assert_eq!((a * b) * c, a * (b * c));
            prop_assert_eq!(a * b, b * a);
            if !b.is_zero() {
                prop_assert_eq!((a / b) * b, a);
            }
        }
    }
}
