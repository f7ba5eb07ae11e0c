//! Arbitrary-precision rational numbers.
//!
//! Thin wrapper around `num::BigRational` that pins down the canonical form
//! used everywhere in this crate: lowest terms, positive denominator, and the
//! text serialization `"p/q"` (or just `"p"` for integers).

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

/// Exact rational number in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(BigRational);

impl Rat {
    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    /// `n/d` reduced to lowest terms. Panics if `d == 0`.
    pub fn new(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        Rat(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// Integer value if the denominator is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        if self.0.is_integer() {
            Some(self.0.to_integer())
        } else {
            None
        }
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rat(self.0.recip())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Rat::one();
        for _ in 0..e {
            acc *= self.clone();
        }
        acc
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Parse `"p"` or `"p/q"` with optional leading sign.
impl FromStr for Rat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let n = BigInt::from_str(n.trim()).map_err(|e| format!("bad numerator {n:?}: {e}"))?;
        let d = BigInt::from_str(d.trim()).map_err(|e| format!("bad denominator {d:?}: {e}"))?;
        if d.is_zero() {
            return Err("zero denominator".into());
        }
        Ok(Rat(BigRational::new(n, d)))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((self.0).$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: &'a Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div for Rat {
    type Output = Rat;
    fn div(self, rhs: Rat) -> Rat {
        assert!(!rhs.is_zero(), "division by zero");
        Rat(self.0 / rhs.0)
    }
}

impl<'a> Div<&'a Rat> for &'a Rat {
    type Output = Rat;
    fn div(self, rhs: &'a Rat) -> Rat {
        assert!(!rhs.is_zero(), "division by zero");
        Rat(&self.0 / &rhs.0)
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl<'a> Neg for &'a Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl AddAssign for Rat {
    fn add_assign(&mut self, rhs: Rat) {
        self.0 += rhs.0;
    }
}

impl SubAssign for Rat {
    fn sub_assign(&mut self, rhs: Rat) {
        self.0 -= rhs.0;
    }
}

impl MulAssign for Rat {
    fn mul_assign(&mut self, rhs: Rat) {
        self.0 *= rhs.0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn canonical_form() {
        assert_eq!(Rat::new(2, 4).to_string(), "1/2");
        assert_eq!(Rat::new(3, -6).to_string(), "-1/2");
        assert_eq!(Rat::new(-20, 1).to_string(), "-20");
        assert_eq!(Rat::new(0, 7).to_string(), "0");
    }

    #[test]
    fn parse_roundtrip() {
        for s in ["3/4", "-3/4", "0", "17", "-20", "1/16"] {
            let r: Rat = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
        }
        assert_eq!("6/8".parse::<Rat>().unwrap().to_string(), "3/4");
        assert!("1/0".parse::<Rat>().is_err());
        assert!("x".parse::<Rat>().is_err());
    }

    #[test]
    fn arithmetic() {
        let a = Rat::new(1, 4);
        let b = Rat::new(1, 2);
        assert_eq!(&a + &b, Rat::new(3, 4));
        assert_eq!(&a * &b, Rat::new(1, 8));
        assert_eq!(&a - &b, Rat::new(-1, 4));
        assert_eq!(&a / &b, Rat::new(1, 2));
        assert_eq!(a.pow(3), Rat::new(1, 64));
        assert_eq!(Rat::new(-2, 3).recip(), Rat::new(-3, 2));
    }

    fn arb_rat() -> impl Strategy<Value = Rat> {
        (-50i64..50, 1i64..20).prop_map(|(n, d)| Rat::new(n, d))
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_rat(), b in arb_rat(), c in arb_rat()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.recip(), Rat::one());
            }
        }

        #[test]
        fn display_parse_roundtrip(a in arb_rat()) {
            let s = a.to_string();
            prop_assert_eq!(s.parse::<Rat>().unwrap(), a);
        }
    }
}
