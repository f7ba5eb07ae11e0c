//! Multivariate polynomials over the rationals.
//!
//! A polynomial is attached to a fixed ordered list of generator names (its
//! [`VarSet`]); all generators have degree one. Monomials are dense exponent
//! vectors over that list. Canonical text form of a monomial follows the
//! generator order: `"D1^2*H1"`, with `"1"` for the empty product. Term order
//! everywhere is graded lexicographic: lower total degree first, and within a
//! degree, lexicographically larger exponent vector (earlier generators heavier)
//! first.

use crate::rat::Rat;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// Ordered list of generator names shared by all polynomials of one ring.
pub type VarSet = Arc<Vec<String>>;

pub fn varset(names: &[&str]) -> VarSet {
    Arc::new(names.iter().map(|s| s.to_string()).collect())
}

/// Exponent vector; one entry per generator.
pub type Mono = Vec<u32>;

pub fn mono_degree(m: &Mono) -> u32 {
    m.iter().sum()
}

/// Render an exponent vector against a generator list: `[2,0,1]` -> `"A^2*C"`.
pub fn mono_to_string(m: &Mono, vars: &VarSet) -> String {
    let mut parts = Vec::new();
    for (e, name) in m.iter().zip(vars.iter()) {
        match e {
            0 => {}
            1 => parts.push(name.clone()),
            _ => parts.push(format!("{name}^{e}")),
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

/// Parse `"D1^2*H1"` (or `"1"`) back into an exponent vector.
pub fn parse_mono(s: &str, vars: &VarSet) -> Result<Mono, String> {
    let mut m = vec![0u32; vars.len()];
    let s = s.trim();
    if s == "1" {
        return Ok(m);
    }
    for factor in s.split('*') {
        let factor = factor.trim();
        let (name, exp) = match factor.split_once('^') {
            Some((n, e)) => {
                let e: u32 = e
                    .trim()
                    .parse()
                    .map_err(|_| format!("bad exponent in {factor:?}"))?;
                (n.trim(), e)
            }
            None => (factor, 1),
        };
        let idx = vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| format!("unknown generator {name:?}"))?;
        m[idx] += exp;
    }
    Ok(m)
}

/// All exponent vectors of total degree `d` over `nvars` generators, in
/// lexicographically descending order (earliest generator heaviest first).
pub fn monos_of_degree(nvars: usize, d: u32) -> Vec<Mono> {
    fn rec(nvars: usize, d: u32, prefix: &mut Mono, out: &mut Vec<Mono>) {
        if nvars == 1 {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            rec(nvars - 1, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(nvars, d, &mut Vec::new(), &mut out);
    out
}

/// Graded-lex comparison used for canonical term order.
fn term_key(m: &Mono) -> (u32, Vec<i64>) {
    // Negated entries make larger exponent vectors sort first within a degree.
    (mono_degree(m), m.iter().map(|&e| -(e as i64)).collect())
}

/// Polynomial with rational coefficients over a fixed generator list.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    pub vars: VarSet,
    /// Nonzero terms only.
    pub terms: BTreeMap<Mono, Rat>,
}

impl MultiPoly {
    pub fn zero(vars: &VarSet) -> Self {
        MultiPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &VarSet, c: Rat) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    pub fn one(vars: &VarSet) -> Self {
        Self::constant(vars, Rat::one())
    }

    /// The `i`-th generator as a polynomial.
    pub fn var(vars: &VarSet, i: usize) -> Self {
        let mut m = vec![0; vars.len()];
        m[i] = 1;
        Self::from_terms(vars, vec![(m, Rat::one())])
    }

    /// Generator looked up by name. Panics on unknown names.
    pub fn named_var(vars: &VarSet, name: &str) -> Self {
        let i = vars
            .iter()
            .position(|v| v == name)
            .unwrap_or_else(|| panic!("unknown generator {name:?}"));
        Self::var(vars, i)
    }

    pub fn monomial(vars: &VarSet, m: Mono, c: Rat) -> Self {
        Self::from_terms(vars, vec![(m, c)])
    }

    pub fn from_terms(vars: &VarSet, terms: Vec<(Mono, Rat)>) -> Self {
        let mut p = Self::zero(vars);
        for (m, c) in terms {
            assert_eq!(m.len(), vars.len(), "exponent vector length mismatch");
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Mono, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m.clone()).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn assert_same_vars(&self, other: &Self) {
        assert_eq!(
            self.vars, other.vars,
            "operands belong to different generator lists"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_vars(other);
        let mut p = self.clone();
        for (m, c) in &other.terms {
            p.add_term(m.clone(), c.clone());
        }
        p
    }

    pub fn neg(&self) -> Self {
        let mut p = self.clone();
        for c in p.terms.values_mut() {
            *c = -c.clone();
        }
        p
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &Rat) -> Self {
        if k.is_zero() {
            return Self::zero(&self.vars);
        }
        let mut p = self.clone();
        for c in p.terms.values_mut() {
            *c = &*c * k;
        }
        p
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_vars(other);
        let mut p = Self::zero(&self.vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m: Mono = ma.iter().zip(mb.iter()).map(|(a, b)| a + b).collect();
                p.add_term(m, ca * cb);
            }
        }
        p
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.vars);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Total degree of each term if they all agree.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut deg = None;
        for m in self.terms.keys() {
            let d = mono_degree(m);
            match deg {
                None => deg = Some(d),
                Some(prev) if prev != d => return None,
                _ => {}
            }
        }
        deg.or(Some(0))
    }

    /// Terms of one total degree as a separate polynomial.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| mono_degree(m) == d)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        MultiPoly {
            vars: self.vars.clone(),
            terms,
        }
    }

    pub fn coeff(&self, m: &Mono) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    /// Substitute generators by polynomials in another ring.
    pub fn substitute(&self, images: &[MultiPoly], target: &VarSet) -> MultiPoly {
        assert_eq!(images.len(), self.vars.len(), "one image per generator");
        let mut out = MultiPoly::zero(target);
        for (m, c) in &self.terms {
            let mut term = MultiPoly::constant(target, c.clone());
            for (i, &e) in m.iter().enumerate() {
                if e > 0 {
                    term = term.mul(&images[i].pow(e));
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// Terms in canonical graded-lex order.
    pub fn ordered_terms(&self) -> Vec<(&Mono, &Rat)> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|(m, _)| term_key(m));
        terms
    }

    /// Serialize as monomial-string -> coefficient-string pairs in canonical order.
    pub fn to_string_map(&self) -> Vec<(String, String)> {
        self.ordered_terms()
            .into_iter()
            .map(|(m, c)| (mono_to_string(m, &self.vars), c.to_string()))
            .collect()
    }

    /// Build from monomial-string -> coefficient-string pairs.
    pub fn from_string_map<'a>(
        vars: &VarSet,
        entries: impl IntoIterator<Item = (&'a str, &'a str)>,
    ) -> Result<Self, String> {
        let mut p = Self::zero(vars);
        for (ms, cs) in entries {
            let m = parse_mono(ms, vars)?;
            let c: Rat = cs.parse()?;
            p.add_term(m, c);
        }
        Ok(p)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.ordered_terms().into_iter().enumerate() {
            let mono = mono_to_string(m, &self.vars);
            let mag = c.abs();
            let sign = c.is_negative();
            if i == 0 {
                if sign {
                    write!(f, "-")?;
                }
            } else if sign {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mono == "1" {
                write!(f, "{mag}")?;
            } else if mag == Rat::one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Brute-force expansion of a product of identical multinomials: walks all
    /// factor-choice sequences instead of using polynomial multiplication.
    fn oracle_pow(base: &[(Mono, Rat)], n: u32, nvars: usize) -> BTreeMap<Mono, Rat> {
        let mut out: BTreeMap<Mono, Rat> = BTreeMap::new();
        let k = base.len();
        let mut choice = vec![0usize; n as usize];
        loop {
            let mut m = vec![0u32; nvars];
            let mut c = Rat::one();
            for &sel in &choice {
                for (i, e) in base[sel].0.iter().enumerate() {
                    m[i] += e;
                }
                c *= base[sel].1.clone();
            }
            let entry = out.entry(m.clone()).or_insert_with(Rat::zero);
            *entry += c;
            if entry.is_zero() {
                out.remove(&m);
            }
            // Odometer over factor choices.
            let mut pos = 0;
            loop {
                if pos == choice.len() {
                    return out;
                }
                choice[pos] += 1;
                if choice[pos] < k {
                    break;
                }
                choice[pos] = 0;
                pos += 1;
            }
        }
    }

    #[test]
    fn cube_of_divisor_sum_matches_oracle() {
        let vars = varset(&["D1", "D2"]);
        let d1 = MultiPoly::var(&vars, 0);
        let d2 = MultiPoly::var(&vars, 1);
        let cube = d1.add(&d2).pow(3);
        let oracle = oracle_pow(
            &[(vec![1, 0], Rat::one()), (vec![0, 1], Rat::one())],
            3,
            2,
        );
        assert_eq!(cube.terms, oracle);
        assert_eq!(cube.to_string(), "D1^3 + 3*D1^2*D2 + 3*D1*D2^2 + D2^3");
    }

    #[test]
    fn trinomial_power_matches_oracle() {
        let vars = varset(&["a", "b", "c"]);
        let p = MultiPoly::from_terms(
            &vars,
            vec![
                (vec![1, 0, 0], Rat::from_int(2)),
                (vec![0, 1, 0], Rat::from_int(-1)),
                (vec![0, 0, 1], Rat::new(1, 2)),
            ],
        );
        let oracle = oracle_pow(
            &[
                (vec![1, 0, 0], Rat::from_int(2)),
                (vec![0, 1, 0], Rat::from_int(-1)),
                (vec![0, 0, 1], Rat::new(1, 2)),
            ],
            4,
            3,
        );
        assert_eq!(p.pow(4).terms, oracle);
    }

    #[test]
    fn monomial_string_roundtrip() {
        let vars = varset(&["D0", "D1", "D2", "H1", "H2"]);
        for (m, s) in [
            (vec![0, 2, 0, 1, 0], "D1^2*H1"),
            (vec![0, 0, 0, 0, 0], "1"),
            (vec![1, 1, 1, 1, 1], "D0*D1*D2*H1*H2"),
            (vec![0, 4, 0, 0, 0], "D1^4"),
        ] {
            assert_eq!(mono_to_string(&m, &vars), s);
            assert_eq!(parse_mono(s, &vars).unwrap(), m);
        }
        assert!(parse_mono("Q^2", &vars).is_err());
    }

    #[test]
    fn degree_enumeration_order() {
        let monos = monos_of_degree(3, 2);
        assert_eq!(
            monos,
            vec![
                vec![2, 0, 0],
                vec![1, 1, 0],
                vec![1, 0, 1],
                vec![0, 2, 0],
                vec![0, 1, 1],
                vec![0, 0, 2],
            ]
        );
        assert_eq!(monos_of_degree(5, 4).len(), 70);
        assert_eq!(monos_of_degree(2, 3).len(), 4);
    }

    #[test]
    fn display_signs_and_fractions() {
        let vars = varset(&["D", "H1"]);
        let p = MultiPoly::from_terms(
            &vars,
            vec![
                (vec![1, 0], Rat::new(1, 4)),
                (vec![0, 1], Rat::from_int(-1)),
            ],
        );
        assert_eq!(p.to_string(), "1/4*D - H1");
    }

    fn arb_poly(vars: &VarSet) -> impl Strategy<Value = MultiPoly> {
        let vars = vars.clone();
        let n = vars.len();
        prop::collection::vec(
            (prop::collection::vec(0u32..3, n), -9i64..9),
            0..6,
        )
        .prop_map(move |terms| {
            MultiPoly::from_terms(
                &vars,
                terms
                    .into_iter()
                    .map(|(m, c)| (m, Rat::from_int(c)))
                    .collect(),
            )
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(
            a in arb_poly(&varset(&["x", "y", "z"])),
            b in arb_poly(&varset(&["x", "y", "z"])),
            c in arb_poly(&varset(&["x", "y", "z"])),
        ) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b.mul(&c)), a.mul(&b).mul(&c));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.add(&b).sub(&b), a.clone());
        }
    }
}
