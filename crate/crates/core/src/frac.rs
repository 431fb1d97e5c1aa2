//! Exact rational arithmetic on `i128`.
//!
//! The closed-form counts mix integers with terms like `(1+(-1)^{n-1})·2^{(n-5)/2}`
//! whose intermediate values are fractional for small `n`, and the chain-map
//! solver needs exact pivots. Everything here stays far below `i128` range for
//! the ranks the engine accepts.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// A reduced fraction with positive denominator.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Frac {
    num: i128,
    den: i128,
}

impl Frac {
    pub const ZERO: Frac = Frac { num: 0, den: 1 };
    pub const ONE: Frac = Frac { num: 1, den: 1 };

    pub fn new(num: i128, den: i128) -> Frac {
        assert!(den != 0, "zero denominator");
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd(num, den).max(1);
        Frac { num: sign * num / g, den: sign * den / g }
    }

    pub fn int(n: i128) -> Frac {
        Frac { num: n, den: 1 }
    }

    /// `2^k` for possibly negative `k`.
    pub fn pow2(k: i64) -> Frac {
        if k >= 0 {
            Frac::int(1i128 << k)
        } else {
            Frac::new(1, 1i128 << (-k))
        }
    }

    pub fn num(&self) -> i128 {
        self.num
    }

    pub fn den(&self) -> i128 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    /// The integer value, if integral.
    pub fn to_integer(&self) -> Option<i128> {
        self.is_integer().then_some(self.num)
    }

    pub fn abs(&self) -> Frac {
        Frac { num: self.num.abs(), den: self.den }
    }

    pub fn recip(&self) -> Frac {
        assert!(self.num != 0, "reciprocal of zero");
        Frac::new(self.den, self.num)
    }
}

impl Add for Frac {
    type Output = Frac;
    fn add(self, rhs: Frac) -> Frac {
        Frac::new(self.num * rhs.den + rhs.num * self.den, self.den * rhs.den)
    }
}

impl Sub for Frac {
    type Output = Frac;
    fn sub(self, rhs: Frac) -> Frac {
        Frac::new(self.num * rhs.den - rhs.num * self.den, self.den * rhs.den)
    }
}

impl Mul for Frac {
    type Output = Frac;
    fn mul(self, rhs: Frac) -> Frac {
        Frac::new(self.num * rhs.num, self.den * rhs.den)
    }
}

impl Div for Frac {
    type Output = Frac;
    fn div(self, rhs: Frac) -> Frac {
        assert!(rhs.num != 0, "division by zero");
        Frac::new(self.num * rhs.den, self.den * rhs.num)
    }
}

impl Neg for Frac {
    type Output = Frac;
    fn neg(self) -> Frac {
        Frac { num: -self.num, den: self.den }
    }
}

impl fmt::Display for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Frac {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Frac {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Frac, D::Error> {
        let text = String::deserialize(d)?;
        let parse = |v: &str| v.trim().parse::<i128>().map_err(serde::de::Error::custom);
        match text.split_once('/') {
            Some((n, m)) => Ok(Frac::new(parse(n)?, parse(m)?)),
            None => Ok(Frac::int(parse(&text)?)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_and_arithmetic() {
        assert_eq!(Frac::new(2, 4), Frac::new(1, 2));
        assert_eq!(Frac::new(1, -2), Frac::new(-1, 2));
        assert_eq!(Frac::new(1, 2) + Frac::new(1, 3), Frac::new(5, 6));
        assert_eq!(Frac::new(1, 2) * Frac::int(4), Frac::int(2));
        assert_eq!(Frac::pow2(-2), Frac::new(1, 4));
        assert_eq!((Frac::int(3) - Frac::new(1, 2)).to_string(), "5/2");
    }

    #[test]
    fn integrality() {
        assert_eq!(Frac::new(6, 3).to_integer(), Some(2));
        assert_eq!(Frac::new(1, 2).to_integer(), None);
    }
}
