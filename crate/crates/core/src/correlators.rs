//! Gravitational correlators of the line at low degree, computed two ways:
//! a recursion on the standard axioms (string, dilaton, divisor, splitting)
//! and, at degree two with two insertions, direct integration of cotangent
//! monomials in the presented ring.

use std::collections::HashMap;
use std::fmt;

use crate::chow::GradedQuotient;
use crate::poly::MultiPoly;
use crate::rat::Rat;

/// Primary insertion class on a line target: the fundamental class or a point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum InsClass {
    One,
    H,
}

impl InsClass {
    fn codim(self) -> i64 {
        match self {
            InsClass::One => 0,
            InsClass::H => 1,
        }
    }
}

impl fmt::Display for InsClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InsClass::One => write!(f, "1"),
            InsClass::H => write!(f, "H"),
        }
    }
}

/// One insertion: a cotangent power and a primary class.
pub type Insertion = (i64, InsClass);

/// Render insertions as `tau2(H),tau1(1)`.
pub fn insertions_to_string(ins: &[Insertion]) -> String {
    ins.iter()
        .map(|(t, c)| format!("tau{t}({c})"))
        .collect::<Vec<_>>()
        .join(",")
}

/// Parse the `tau2(H),tau1(1)` form.
pub fn parse_insertions(s: &str) -> Result<Vec<Insertion>, String> {
    s.split(',')
        .map(|part| {
            let part = part.trim();
            let rest = part
                .strip_prefix("tau")
                .ok_or_else(|| format!("expected tauN(class), got {part}"))?;
            let open = rest.find('(').ok_or_else(|| format!("missing ( in {part}"))?;
            if !rest.ends_with(')') {
                return Err(format!("missing ) in {part}"));
            }
            let t: i64 = rest[..open]
                .parse()
                .map_err(|_| format!("bad cotangent power in {part}"))?;
            let class = match &rest[open + 1..rest.len() - 1] {
                "1" => InsClass::One,
                "H" => InsClass::H,
                other => return Err(format!("unknown class {other}")),
            };
            Ok((t, class))
        })
        .collect()
}

/// Memoizing evaluator for the axiom recursion.
pub struct Engine {
    memo: HashMap<(u32, Vec<Insertion>), Rat>,
}

impl Default for Engine {
    fn default() -> Self {
        Engine::new()
    }
}

impl Engine {
    pub fn new() -> Engine {
        Engine {
            memo: HashMap::new(),
        }
    }

    /// Correlator of the given insertions at the given curve degree.
    pub fn eval(&mut self, d: u32, ins: &[Insertion]) -> Rat {
        if ins.iter().any(|&(t, _)| t < 0) {
            return Rat::zero();
        }
        let n = ins.len() as i64;
        let total: i64 = ins.iter().map(|&(t, c)| t + c.codim()).sum();
        if total != 2 * d as i64 + n - 2 {
            return Rat::zero();
        }
        let mut key: Vec<Insertion> = ins.to_vec();
        key.sort_by(|a, b| b.cmp(a));
        if let Some(v) = self.memo.get(&(d, key.clone())) {
            return v.clone();
        }
        let value = self.eval_uncached(d, &key);
        self.memo.insert((d, key), value.clone());
        value
    }

    fn eval_uncached(&mut self, d: u32, key: &[Insertion]) -> Rat {
        match key.len() {
            1 => self.one_point(d, key[0]),
            2 => self.two_point(d, key),
            3 => self.three_point(d, key),
            _ => panic!("correlators with 1..=3 insertions only"),
        }
    }

    /// Closed forms with a single insertion.
    fn one_point(&mut self, d: u32, (t, class): Insertion) -> Rat {
        if d == 0 {
            return Rat::zero();
        }
        let dfact: i64 = (1..=d as i64).product();
        let norm = Rat::new(1, dfact * dfact);
        match class {
            InsClass::H => {
                debug_assert_eq!(t, 2 * d as i64 - 2);
                norm
            }
            InsClass::One => {
                debug_assert_eq!(t, 2 * d as i64 - 1);
                let mut harmonic = Rat::zero();
                for k in 1..=d as i64 {
                    harmonic = &harmonic + &Rat::new(1, k);
                }
                -&(&(&norm * &Rat::from_int(2)) * &harmonic)
            }
        }
    }

    fn two_point(&mut self, d: u32, key: &[Insertion]) -> Rat {
        if d == 0 {
            return Rat::zero();
        }
        let (a, b) = (key[0], key[1]);
        // String equation.
        if let Some((other, _)) = pick(key, (0, InsClass::One)) {
            return self.eval(d, &[(other.0 - 1, other.1)]);
        }
        // Dilaton equation: one remaining mark gives factor -1.
        if let Some((other, _)) = pick(key, (1, InsClass::One)) {
            return -&self.eval(d, &[other]);
        }
        // Divisor equation on a pure point insertion.
        if let Some((other, _)) = pick(key, (0, InsClass::H)) {
            let mut v = &Rat::from_int(d as i64) * &self.eval(d, &[other]);
            if other.1 == InsClass::One {
                v = &v + &self.eval(d, &[(other.0 - 1, InsClass::H)]);
            }
            return v;
        }
        // Both cotangent powers positive: trade one power for a divisor
        // insertion and push it back out.
        let three = self.eval(d, &[(0, InsClass::H), a, b]);
        let mut v = three;
        if a.1 == InsClass::One {
            v = &v - &self.eval(d, &[(a.0 - 1, InsClass::H), b]);
        }
        if b.1 == InsClass::One {
            v = &v - &self.eval(d, &[a, (b.0 - 1, InsClass::H)]);
        }
        &v / &Rat::from_int(d as i64)
    }

    fn three_point(&mut self, d: u32, key: &[Insertion]) -> Rat {
        if d == 0 {
            // Triple pairing on the target.
            let all_primary = key.iter().all(|&(t, _)| t == 0);
            let points = key.iter().filter(|&&(_, c)| c == InsClass::H).count();
            return if all_primary && points == 1 {
                Rat::one()
            } else {
                Rat::zero()
            };
        }
        // String equation.
        if let Some((x, y)) = pick3(key, (0, InsClass::One)) {
            let mut v = self.eval(d, &[(x.0 - 1, x.1), y]);
            v = &v + &self.eval(d, &[x, (y.0 - 1, y.1)]);
            return v;
        }
        // Dilaton equation: factor 2g - 2 + n = 0 with two remaining marks.
        if key.contains(&(1, InsClass::One)) {
            return Rat::zero();
        }
        // Splitting off the largest cotangent insertion.
        if key[0].0 >= 1 {
            let pivot = key[0];
            let (y, z) = (key[1], key[2]);
            let mut total = Rat::zero();
            for b1 in 1..=d {
                let b2 = d - b1;
                for (da, db) in [(InsClass::One, InsClass::H), (InsClass::H, InsClass::One)] {
                    let left = self.eval(b1, &[(pivot.0 - 1, pivot.1), (0, da)]);
                    if left.is_zero() {
                        continue;
                    }
                    let right = self.eval(b2, &[(0, db), y, z]);
                    total = &total + &(&left * &right);
                }
            }
            return total;
        }
        // All primary with a point insertion: divisor equation.
        let (y, z) = pick3(key, (0, InsClass::H)).expect("degree forces a point class");
        &Rat::from_int(d as i64) * &self.eval(d, &[y, z])
    }
}

/// Split a two-insertion key at the first occurrence of `what`.
fn pick(key: &[Insertion], what: Insertion) -> Option<(Insertion, Insertion)> {
    key.iter()
        .position(|&i| i == what)
        .map(|i| (key[1 - i], key[i]))
}

/// Remove `what` from a three-insertion key, returning the other two.
fn pick3(key: &[Insertion], what: Insertion) -> Option<(Insertion, Insertion)> {
    let i = key.iter().position(|&x| x == what)?;
    let rest: Vec<Insertion> = key
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != i)
        .map(|(_, &x)| x)
        .collect();
    Some((rest[0], rest[1]))
}

/// Degree-two two-point correlator as a ring integral of a cotangent
/// monomial.
pub fn via_ring(q: &GradedQuotient, d: u32, ins: &[Insertion]) -> Result<Rat, String> {
    if d != 2 || ins.len() != 2 {
        return Err("ring route covers two insertions at degree two".into());
    }
    if ins.iter().any(|&(t, _)| t < 0) {
        return Ok(Rat::zero());
    }
    let total: i64 = ins.iter().map(|&(t, c)| t + c.codim()).sum();
    if total != 4 {
        return Ok(Rat::zero());
    }
    let gens = &q.pres.gens;
    let v = |n: &str| MultiPoly::named_var(gens, n);
    let mut p = MultiPoly::one(gens);
    for (i, &(t, c)) in ins.iter().enumerate() {
        let psi = v(if i == 0 { "psi1" } else { "psi2" });
        p = p.mul(&psi.pow(t as u32));
        if c == InsClass::H {
            p = p.mul(&v(if i == 0 { "H1" } else { "H2" }));
        }
    }
    q.integrate(&p)
}

/// The sixteen degree-two two-point correlators, evaluated through both
/// routes, checked against each other and returned with their keys.
pub fn cross_check_all(q: &GradedQuotient) -> Vec<(String, Rat)> {
    let mut engine = Engine::new();
    let golden: Vec<(String, Rat)> = crate::golden::GRAVITATIONAL_CORRELATORS
        .iter()
        .map(|&(k, v)| (k.to_string(), v.parse().unwrap()))
        .collect();
    let mut out = Vec::with_capacity(golden.len());
    for (key, want) in golden {
        let ins = parse_insertions(&key).unwrap();
        let axioms = engine.eval(2, &ins);
        let ring = via_ring(q, 2, &ins).unwrap();
        assert_eq!(axioms, ring, "routes disagree at {key}");
        assert_eq!(axioms, want, "value changed at {key}");
        out.push((key, axioms));
    }
    out
}
