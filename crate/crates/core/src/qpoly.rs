//! Polynomials in the single variable `q`: Serre/Poincare polynomials,
//! Gaussian integers and binomials, and the symmetric/exterior square
//! operations used for spaces carrying a two-element symmetry.

use crate::rat::Rat;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Polynomial in `q`, coefficients ascending from the constant term.
#[derive(Clone, PartialEq, Eq)]
pub struct QPoly {
    coeffs: Vec<Rat>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_ints(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| Rat::from_int(c)).collect())
    }

    pub fn zero() -> Self {
        QPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::from_ints(&[1])
    }

    /// `q^k`.
    pub fn qpow(k: usize) -> Self {
        let mut cs = vec![Rat::zero(); k + 1];
        cs[k] = Rat::one();
        QPoly { coeffs: cs }
    }

    /// `q^a + q^(a+1) + ... + q^b`; zero when `a > b`.
    pub fn qrange(a: usize, b: i64) -> Self {
        if b < a as i64 {
            return Self::zero();
        }
        let mut cs = vec![Rat::zero(); b as usize + 1];
        for c in cs.iter_mut().take(b as usize + 1).skip(a) {
            *c = Rat::one();
        }
        QPoly { coeffs: cs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn scale(&self, k: &Rat) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Value at `q = 1`; for a Serre polynomial this is the Euler characteristic.
    pub fn eval_one(&self) -> Rat {
        let mut acc = Rat::zero();
        for c in &self.coeffs {
            acc += c.clone();
        }
        acc
    }

    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    pub fn has_nonneg_integer_coeffs(&self) -> bool {
        self.coeffs
            .iter()
            .all(|c| c.is_integer() && !c.is_negative())
    }

    /// Exact quotient `self / den`; error when the division leaves a remainder.
    pub fn div_exact(&self, den: &QPoly) -> Result<QPoly, String> {
        if den.is_zero() {
            return Err("division by the zero polynomial".into());
        }
        if self.is_zero() {
            return Ok(QPoly::zero());
        }
        let dn = self.degree().unwrap();
        let dd = den.degree().unwrap();
        if dn < dd {
            return Err(format!("non-exact division: {self} / {den}"));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); dn - dd + 1];
        let lead = den.coeffs[dd].clone();
        for k in (0..=dn - dd).rev() {
            let c = &rem[k + dd] / &lead;
            quot[k] = c.clone();
            for j in 0..=dd {
                let v = &rem[k + j] - &(&c * &den.coeffs[j]);
                rem[k + j] = v;
            }
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(format!("non-exact division: {self} / {den}"));
        }
        Ok(QPoly::new(quot))
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::new((0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::new((0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect())
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut cs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                cs[i + j] += a * b;
            }
        }
        QPoly::new(cs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let show_coeff = mag != Rat::one() || i == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Gaussian integer `[n] = 1 + q + ... + q^(n-1)`; `[0] = 0`.
pub fn q_int(n: u32) -> QPoly {
    QPoly::new(vec![Rat::one(); n as usize])
}

/// `[n]! = [1][2]...[n]`.
pub fn q_factorial(n: u32) -> QPoly {
    let mut acc = QPoly::one();
    for i in 1..=n {
        acc = &acc * &q_int(i);
    }
    acc
}

/// Gaussian binomial `[n choose k] = [n]! / ([k]! [n-k]!)`.
/// Returns the zero polynomial when `k > n`.
pub fn q_binom(n: u32, k: u32) -> QPoly {
    if k > n {
        return QPoly::zero();
    }
    let num = q_factorial(n);
    let den = &q_factorial(k) * &q_factorial(n - k);
    num.div_exact(&den)
        .expect("Gaussian binomial division is exact")
}

fn choose2(a: &Rat) -> Rat {
    // a*(a-1)/2
    &(a * &(a - &Rat::one())) * &Rat::new(1, 2)
}

/// Symmetric square: for `p = sum a_i q^i` with nonnegative integer
/// coefficients, `sigma2(p) = sum C(a_i + 1, 2) q^(2i) + sum_{i<j} a_i a_j q^(i+j)`.
pub fn sigma2(p: &QPoly) -> Result<QPoly, String> {
    square_op(p, true)
}

/// Exterior square: same shape with `C(a_i, 2)` on the diagonal.
pub fn lambda2(p: &QPoly) -> Result<QPoly, String> {
    square_op(p, false)
}

fn square_op(p: &QPoly, symmetric: bool) -> Result<QPoly, String> {
    if !p.has_nonneg_integer_coeffs() {
        return Err(format!(
            "square operations need nonnegative integer coefficients, got {p}"
        ));
    }
    let cs = p.coeffs();
    let n = cs.len();
    let mut out = vec![Rat::zero(); if n == 0 { 0 } else { 2 * n - 1 }];
    for (i, a) in cs.iter().enumerate() {
        let diag = if symmetric {
            choose2(&(a + &Rat::one()))
        } else {
            choose2(a)
        };
        out[2 * i] += diag;
        for (j, b) in cs.iter().enumerate().skip(i + 1) {
            out[i + j] += a * b;
        }
    }
    Ok(QPoly::new(out))
}

/// Class in the representation ring of the two-element group with polynomial
/// coefficients: `triv * 1 + sign * e`, where `e` is the sign character.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EquivClass {
    pub triv: QPoly,
    pub sign: QPoly,
}

impl EquivClass {
    pub fn new(triv: QPoly, sign: QPoly) -> Self {
        EquivClass { triv, sign }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        EquivClass::new(&self.triv + &rhs.triv, &self.sign + &rhs.sign)
    }

    /// Multiplication uses `e * e = 1`.
    pub fn mul(&self, rhs: &Self) -> Self {
        EquivClass::new(
            &(&self.triv * &rhs.triv) + &(&self.sign * &rhs.sign),
            &(&self.triv * &rhs.sign) + &(&self.sign * &rhs.triv),
        )
    }

    pub fn scale_poly(&self, p: &QPoly) -> Self {
        EquivClass::new(&self.triv * p, &self.sign * p)
    }

    /// Invariant (trivial) part: the Serre polynomial of the quotient.
    pub fn augmentation(&self) -> QPoly {
        self.triv.clone()
    }

    /// Forget the action: the Serre polynomial of the underlying space.
    pub fn nonequivariant(&self) -> QPoly {
        &self.triv + &self.sign
    }

    pub fn div_exact(&self, den: &QPoly) -> Result<Self, String> {
        Ok(EquivClass::new(
            self.triv.div_exact(den)?,
            self.sign.div_exact(den)?,
        ))
    }
}

/// Equivariant Serre class of a square `X x X` under the factor swap,
/// given the Serre polynomial of `X`.
pub fn equiv_square(p: &QPoly) -> Result<EquivClass, String> {
    Ok(EquivClass::new(sigma2(p)?, lambda2(p)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Ascending-coefficient division oracle: solves for the quotient term by
    /// term from the constant coefficient up, assuming exactness.
    fn naive_exact_div(num: &QPoly, den: &QPoly) -> QPoly {
        let dn = num.degree().unwrap();
        let dd = den.degree().unwrap();
        assert!(!den.coeff(0).is_zero(), "oracle needs a unit constant term");
        let mut q = vec![Rat::zero(); dn - dd + 1];
        for i in 0..q.len() {
            let mut acc = num.coeff(i);
            for j in 0..i {
                acc -= &q[j] * &den.coeff(i - j);
            }
            q[i] = &acc / &den.coeff(0);
        }
        QPoly::new(q)
    }

    #[test]
    fn gaussian_integers() {
        assert_eq!(q_int(0), QPoly::zero());
        assert_eq!(q_int(1), QPoly::one());
        assert_eq!(q_int(4).to_string(), "1+q+q^2+q^3");
        assert_eq!(q_int(5).eval_one(), Rat::from_int(5));
    }

    #[test]
    fn gaussian_binomial_golden() {
        // [4 choose 2] = [4][3]/[2], checked against the ascending-division
        // oracle and by multiplying back.
        let expect = QPoly::from_ints(&[1, 1, 2, 1, 1]);
        assert_eq!(q_binom(4, 2), expect);
        let num = &q_int(4) * &q_int(3);
        let den = q_int(2);
        assert_eq!(naive_exact_div(&num, &den), expect);
        assert_eq!(&expect * &den, num);

        assert_eq!(q_binom(3, 1), q_int(3));
        assert_eq!(q_binom(7, 0), QPoly::one());
        assert_eq!(q_binom(2, 5), QPoly::zero());
    }

    #[test]
    fn gaussian_binomial_symmetry_and_counting() {
        fn binom(n: u64, k: u64) -> Rat {
            if k > n {
                return Rat::zero();
            }
            let mut acc = Rat::one();
            for i in 0..k {
                acc = &acc * &Rat::new((n - i) as i64, (i + 1) as i64);
            }
            acc
        }
        for n in 0..=8u32 {
            for k in 0..=n {
                assert_eq!(q_binom(n, k), q_binom(n, n - k));
                assert_eq!(q_binom(n, k).eval_one(), binom(n as u64, k as u64));
                assert!(q_binom(n, k).has_nonneg_integer_coeffs());
                assert!(q_binom(n, k).is_palindromic());
            }
        }
    }

    #[test]
    fn div_exact_rejects_remainders() {
        let p = QPoly::from_ints(&[1, 1, 1]);
        assert!(p.div_exact(&QPoly::from_ints(&[1, 1])).is_err());
        assert_eq!(
            QPoly::from_ints(&[0, -1, 0, 1])
                .div_exact(&QPoly::from_ints(&[-1, 1]))
                .unwrap(),
            QPoly::from_ints(&[0, 1, 1])
        );
    }

    #[test]
    fn square_operations() {
        // sigma2([2]) = [3], lambda2([2]) = q.
        assert_eq!(sigma2(&q_int(2)).unwrap(), q_int(3));
        assert_eq!(lambda2(&q_int(2)).unwrap(), QPoly::qpow(1));
        // sigma2([n]) = [n+1 choose 2], lambda2([n]) = q * [n choose 2].
        for n in 1..=6 {
            assert_eq!(sigma2(&q_int(n)).unwrap(), q_binom(n + 1, 2));
            assert_eq!(
                lambda2(&q_int(n)).unwrap(),
                &QPoly::qpow(1) * &q_binom(n, 2)
            );
        }
        assert!(sigma2(&QPoly::from_ints(&[1, -1])).is_err());
    }

    #[test]
    fn display_format() {
        assert_eq!(QPoly::from_ints(&[1, 4, 6, 4, 1]).to_string(), "1+4q+6q^2+4q^3+q^4");
        assert_eq!(QPoly::from_ints(&[0, -1, 0, 1]).to_string(), "-q+q^3");
        assert_eq!(QPoly::from_ints(&[-2, 1]).to_string(), "-2+q");
        assert_eq!(QPoly::zero().to_string(), "0");
    }

    #[test]
    fn equiv_class_algebra() {
        // ((q-1) - e) * (q^3 - q) componentwise scaling.
        let m04 = EquivClass::new(QPoly::from_ints(&[-1, 1]), QPoly::from_ints(&[-1]));
        let prod = m04.scale_poly(&QPoly::from_ints(&[0, -1, 0, 1]));
        assert_eq!(prod.triv, QPoly::from_ints(&[0, 1, -1, -1, 1]));
        assert_eq!(prod.sign, QPoly::from_ints(&[0, 1, 0, -1]));
        // e * e = 1.
        let e = EquivClass::new(QPoly::zero(), QPoly::one());
        assert_eq!(e.mul(&e), EquivClass::new(QPoly::one(), QPoly::zero()));
        assert_eq!(m04.nonequivariant(), QPoly::from_ints(&[-2, 1]));
        assert_eq!(m04.augmentation(), QPoly::from_ints(&[-1, 1]));
    }

    fn arb_nonneg_poly() -> impl Strategy<Value = QPoly> {
        prop::collection::vec(0i64..5, 0..6)
            .prop_map(|cs| QPoly::new(cs.into_iter().map(Rat::from_int).collect()))
    }

    proptest! {
        #[test]
        fn squares_partition_the_full_square(p in arb_nonneg_poly()) {
            // sigma2(p) + lambda2(p) evaluated at 1 equals p(1)^2 ... not quite:
            // it equals C(m+1,2) + C(m,2) = m^2 summed correctly, i.e. (p(1))^2.
            let s = sigma2(&p).unwrap();
            let l = lambda2(&p).unwrap();
            let total = &s + &l;
            prop_assert_eq!(total.eval_one(), &p.eval_one() * &p.eval_one());
            // And as polynomials, sigma2 + lambda2 = (p^2 + p(q -> q^2))/2 + ... :
            // check the cleaner identity sigma2 - lambda2 = p(q^2).
            let diff = &s - &l;
            let mut sq = vec![Rat::zero(); 2 * p.coeffs().len().max(1) - 1];
            for (i, c) in p.coeffs().iter().enumerate() {
                sq[2 * i] = c.clone();
            }
            prop_assert_eq!(diff, QPoly::new(sq));
        }

        #[test]
        fn mul_commutes(a in arb_nonneg_poly(), b in arb_nonneg_poly()) {
            prop_assert_eq!(&a * &b, &b * &a);
        }
    }
}
