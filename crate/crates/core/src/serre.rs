//! Serre (equal here to Poincare) polynomials of the moduli spaces in play,
//! computed two independent ways:
//!
//! * closed-form products of Gaussian integers, and
//! * a sum over the locally closed strata of the two-pointed space, with the
//!   two symmetric strata handled equivariantly and then passed to invariants.
//!
//! Also hosts the Betti number formulas for the two-pointed space and the
//! expected-dimension count.

use crate::qpoly::{equiv_square, q_binom, q_int, EquivClass, QPoly};
use crate::rat::Rat;

/// Descriptor of a space whose Serre polynomial has a closed form depending on
/// the target dimension `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpaceDesc {
    /// Target projective space `P^r`.
    Proj,
    /// Point-line incidence variety in `P^r`.
    Flag01,
    /// Grassmannian of lines in an `n`-dimensional vector space.
    Grass2 { n: u32 },
    /// Unmarked maps of degree `d >= 1` with irreducible domain.
    M00Open { d: u32 },
    /// Maps of degree `d >= 1` with irreducible domain and `n` distinct marks.
    MSmooth { n: u32, d: u32 },
    /// Degree-zero stable maps with `n` marks (product of a fixed curve moduli
    /// space and the target). Supported for `n = 3, 4`.
    M0nTrivial { n: u32 },
    /// Ordered configurations of `k` distinct points on a line.
    ConfigP1 { k: u32 },
    /// Automorphism group of the line.
    PGL2,
}

/// Serre polynomial of a descriptor at target dimension `r >= 1`.
pub fn serre_space(desc: &SpaceDesc, r: u32) -> QPoly {
    match desc {
        SpaceDesc::Proj => q_int(r + 1),
        SpaceDesc::Flag01 => &q_int(r + 1) * &q_int(r),
        SpaceDesc::Grass2 { n } => q_binom(*n, 2),
        SpaceDesc::M00Open { d } => {
            assert!(*d >= 1, "irreducible-domain locus needs positive degree");
            &QPoly::qpow(((d - 1) * (r + 1)) as usize) * &q_binom(r + 1, 2)
        }
        SpaceDesc::MSmooth { n, d } => {
            &serre_space(&SpaceDesc::ConfigP1 { k: *n }, r)
                * &serre_space(&SpaceDesc::M00Open { d: *d }, r)
        }
        SpaceDesc::M0nTrivial { n } => {
            let curve_factor = match n {
                3 => QPoly::one(),
                4 => q_int(2),
                _ => panic!("degree-zero locus supported for 3 or 4 marks"),
            };
            &curve_factor * &q_int(r + 1)
        }
        SpaceDesc::ConfigP1 { k } => {
            let mut acc = QPoly::one();
            for i in 0..*k {
                acc = &acc * &(&q_int(2) - &QPoly::from_ints(&[i as i64]));
            }
            acc
        }
        SpaceDesc::PGL2 => {
            let two = q_int(2);
            &q_int(4) - &(&two * &two)
        }
    }
}

/// Shape of one locally closed stratum of the two-pointed degree-two space.
#[derive(Clone, Debug)]
pub enum StratumShape {
    /// Plain fiber product: multiply factor polynomials, divide by base ones.
    Product {
        factors: Vec<SpaceDesc>,
        bases: Vec<SpaceDesc>,
    },
    /// Two identical arms swapped by the stratum symmetry, fibered over a
    /// shared factor. `m04_center` multiplies in the equivariant class of a
    /// four-marked degree-zero center whose two attaching nodes are exchanged.
    SymmetricPair {
        arm_factors: Vec<SpaceDesc>,
        arm_bases: Vec<SpaceDesc>,
        shared: Vec<SpaceDesc>,
        m04_center: bool,
    },
}

#[derive(Clone, Debug)]
pub struct Stratum {
    pub name: &'static str,
    pub shape: StratumShape,
    pub multiplicity: u32,
}

fn product(factors: &[SpaceDesc], bases: &[SpaceDesc], r: u32) -> QPoly {
    let mut num = QPoly::one();
    for f in factors {
        num = &num * &serre_space(f, r);
    }
    for b in bases {
        num = num
            .div_exact(&serre_space(b, r))
            .expect("fiber-product base divides exactly");
    }
    num
}

/// The stratification of the two-pointed degree-two space: nine shapes, one of
/// which occurs twice (mark exchanged between the two arms of the chain).
pub fn two_point_strata() -> Vec<Stratum> {
    use SpaceDesc::*;
    vec![
        Stratum {
            // Both marks move on an irreducible double cover.
            name: "marks on irreducible domain",
            shape: StratumShape::Product {
                factors: vec![ConfigP1 { k: 2 }, M00Open { d: 2 }],
                bases: vec![],
            },
            multiplicity: 1,
        },
        Stratum {
            // Marks sit on a contracted bubble attached to an irreducible cover.
            name: "mark bubble on irreducible domain",
            shape: StratumShape::Product {
                factors: vec![MSmooth { n: 1, d: 2 }, M0nTrivial { n: 3 }],
                bases: vec![Proj],
            },
            multiplicity: 1,
        },
        Stratum {
            // Two-line chain, both marks interior to the same line.
            name: "marks interior to one line of a chain",
            shape: StratumShape::Product {
                factors: vec![MSmooth { n: 3, d: 1 }, Flag01],
                bases: vec![Proj],
            },
            multiplicity: 1,
        },
        Stratum {
            // Two-line chain, one mark interior to each line.
            name: "one mark interior to each line",
            shape: StratumShape::Product {
                factors: vec![MSmooth { n: 2, d: 1 }, MSmooth { n: 2, d: 1 }],
                bases: vec![Proj],
            },
            multiplicity: 1,
        },
        Stratum {
            // Chain with a mark bubble at the junction node.
            name: "mark bubble at the chain node",
            shape: StratumShape::Product {
                factors: vec![M0nTrivial { n: 3 }, MSmooth { n: 2, d: 1 }, Flag01],
                bases: vec![Proj, Proj],
            },
            multiplicity: 1,
        },
        Stratum {
            // Chain with one interior mark and one mark bubbled off the far
            // line; occurs twice by exchanging which mark bubbles.
            name: "interior mark plus far-end mark bubble",
            shape: StratumShape::Product {
                factors: vec![MSmooth { n: 2, d: 1 }, M0nTrivial { n: 3 }, Flag01],
                bases: vec![Proj, Proj],
            },
            multiplicity: 2,
        },
        Stratum {
            // Both marks bubbled off interior points of the two lines.
            name: "mark bubbles on both lines",
            shape: StratumShape::Product {
                factors: vec![Flag01, M0nTrivial { n: 3 }, M0nTrivial { n: 3 }, Flag01],
                bases: vec![Proj, Proj, Proj],
            },
            multiplicity: 1,
        },
        Stratum {
            // Two lines meeting a central mark-carrying bubble; the swap
            // exchanges the (bubble, line) arms.
            name: "central bubble chain, arms swapped",
            shape: StratumShape::SymmetricPair {
                arm_factors: vec![M0nTrivial { n: 3 }, Flag01],
                arm_bases: vec![Proj, Proj],
                shared: vec![Proj],
                m04_center: false,
            },
            multiplicity: 1,
        },
        Stratum {
            // Four-special-point center with two line arms; the swap exchanges
            // the arms and the two attaching nodes of the center.
            name: "moving center with swapped line arms",
            shape: StratumShape::SymmetricPair {
                arm_factors: vec![Flag01],
                arm_bases: vec![Proj],
                shared: vec![Proj],
                m04_center: true,
            },
            multiplicity: 1,
        },
    ]
}

/// Serre polynomial of one stratum (invariants taken for symmetric strata).
pub fn stratum_serre(s: &Stratum, r: u32) -> QPoly {
    match &s.shape {
        StratumShape::Product { factors, bases } => {
            // Open strata may carry negative coefficients (configuration
            // factors are falling products); only the total is effective.
            product(factors, bases, r)
        }
        StratumShape::SymmetricPair {
            arm_factors,
            arm_bases,
            shared,
            m04_center,
        } => {
            let arm = product(arm_factors, arm_bases, r);
            let shared = product(shared, &[], r);
            let mut eq = equiv_square(&arm).expect("arm has nonnegative integer coefficients");
            if *m04_center {
                eq = eq.mul(&equiv_serre_m04());
            }
            let inv = &eq.augmentation() * &shared;
            if !*m04_center {
                assert!(
                    inv.has_nonneg_integer_coeffs(),
                    "untwisted symmetric stratum must be effective: {inv}"
                );
            }
            inv
        }
    }
}

/// Equivariant Serre class of the four-marked degree-zero curve moduli under
/// the swap of two marks, derived from ordered four-point configurations of a
/// line. Each intermediate is cross-checked against its nonequivariant value.
pub fn equiv_serre_m04() -> EquivClass {
    // Configurations of four ordered points: inclusion-exclusion over the
    // partial diagonals of the fourth power of a line, as equivariant classes
    // under the swap of the last two points.
    let pieces: [(EquivClass, QPoly); 4] = [
        (
            // Full fourth power.
            EquivClass::new(
                QPoly::from_ints(&[1, 3, 4, 3, 1]),
                QPoly::from_ints(&[0, 1, 2, 1]),
            ),
            {
                let p = q_int(2);
                &(&p * &p) * &(&p * &p)
            },
        ),
        (
            // Six pairwise diagonals, signed.
            EquivClass::new(
                QPoly::from_ints(&[0, 4, 0, -4]),
                QPoly::from_ints(&[0, 2, 0, -2]),
            ),
            QPoly::from_ints(&[0, 6, 0, -6]),
        ),
        (
            // Seven loci where at least two coincidences overlap, signed.
            EquivClass::new(
                QPoly::from_ints(&[0, -5, -5]),
                QPoly::from_ints(&[0, -2, -2]),
            ),
            QPoly::from_ints(&[0, -7, -7]),
        ),
        (
            // Small diagonal, signed.
            EquivClass::new(QPoly::from_ints(&[-1, -1]), QPoly::zero()),
            QPoly::from_ints(&[-1, -1]),
        ),
    ];
    let mut config4 = EquivClass::new(QPoly::zero(), QPoly::zero());
    for (piece, nonequiv) in &pieces {
        assert_eq!(
            &piece.nonequivariant(),
            nonequiv,
            "piece disagrees with its nonequivariant value"
        );
        config4 = config4.add(piece);
    }
    assert_eq!(config4.triv, QPoly::from_ints(&[0, 1, -1, -1, 1]));
    assert_eq!(config4.sign, QPoly::from_ints(&[0, 1, 0, -1]));

    // Quotient by the line automorphisms, which act freely: divide by their
    // Serre polynomial componentwise.
    let pgl2 = serre_space(&SpaceDesc::PGL2, 1);
    let m04 = config4
        .div_exact(&pgl2)
        .expect("automorphism class divides the configuration class");
    assert_eq!(m04.triv, QPoly::from_ints(&[-1, 1]));
    assert_eq!(m04.sign, QPoly::from_ints(&[-1]));
    // Multiplying back must reproduce the configuration class.
    assert_eq!(m04.scale_poly(&pgl2), config4);
    // Underlying space is a line minus three points.
    assert_eq!(m04.nonequivariant(), QPoly::from_ints(&[-2, 1]));
    assert_eq!(m04.nonequivariant().eval_one(), Rat::from_int(-1));
    m04
}

fn third_factor(r: u32, doubled: bool) -> QPoly {
    // q^0..q^(r+2), plus q^1..q^(r+1), plus q^2..q^r, the latter two once or twice.
    let w = if doubled { 2 } else { 1 };
    let a = QPoly::qrange(0, r as i64 + 2);
    let b = QPoly::qrange(1, r as i64 + 1).scale(&Rat::from_int(w));
    let c = QPoly::qrange(2, r as i64).scale(&Rat::from_int(w));
    &(&a + &b) + &c
}

fn closed_form_m02(r: u32) -> QPoly {
    let head = &QPoly::qrange(0, r as i64) * &QPoly::qrange(0, r as i64 - 1);
    &head * &third_factor(r, true)
}

/// Poincare polynomial of the two-pointed degree-two space over `P^r`,
/// computed by the stratum sum and checked against the closed form.
pub fn poincare_m02(r: u32) -> QPoly {
    assert!(r >= 1);
    let mut sum = QPoly::zero();
    for s in two_point_strata() {
        let val = stratum_serre(&s, r);
        for _ in 0..s.multiplicity {
            sum = &sum + &val;
        }
    }
    let closed = closed_form_m02(r);
    assert_eq!(sum, closed, "stratum sum disagrees with the closed form");
    assert!(sum.has_nonneg_integer_coeffs());
    sum
}

fn even_powers(m: u32) -> QPoly {
    // 1 + q^2 + q^4 + ... + q^(2m)
    let mut cs = vec![Rat::zero(); 2 * m as usize + 1];
    for i in 0..=m as usize {
        cs[2 * i] = Rat::one();
    }
    QPoly::new(cs)
}

/// Poincare polynomial of the one-pointed degree-two space over `P^r`.
pub fn poincare_m01(r: u32) -> QPoly {
    assert!(r >= 1);
    let tail = third_factor(r, false);
    if r % 2 == 0 {
        let head = &QPoly::qrange(0, r as i64) * &even_powers((r - 2) / 2);
        &head * &tail
    } else {
        let head = &QPoly::qrange(0, r as i64 - 1) * &even_powers((r - 1) / 2);
        &head * &tail
    }
}

/// Betti numbers of the point-line incidence variety: coefficient formula
/// `alpha_i = r + 1/2 - |r - 1/2 - i|` on `0 <= i <= 2r-1`, zero outside.
pub fn flag_betti(r: u32, i: i64) -> i64 {
    if i < 0 || i > 2 * r as i64 - 1 {
        return 0;
    }
    let two_alpha = 2 * r as i64 + 1 - (2 * r as i64 - 1 - 2 * i).abs();
    debug_assert!(two_alpha % 2 == 0);
    two_alpha / 2
}

fn alpha_sum(r: u32, lo: i64, hi: i64) -> i64 {
    (lo..=hi).map(|i| flag_betti(r, i)).sum()
}

/// Betti numbers of the two-pointed degree-two space by the piecewise window
/// sums over the incidence-variety Betti numbers.
pub fn betti_m02(r: u32, j: i64) -> i64 {
    let r_i = r as i64;
    if !(0..=3 * r_i + 1).contains(&j) {
        return 0;
    }
    let b1 = if j <= r_i + 2 {
        alpha_sum(r, 0, j)
    } else if j <= 2 * r_i - 1 {
        alpha_sum(r, j - r_i - 2, j)
    } else {
        alpha_sum(r, j - r_i - 2, 2 * r_i - 1)
    };
    let b2 = 2 * if j <= r_i + 1 {
        alpha_sum(r, 0, j - 1)
    } else if j <= 2 * r_i {
        alpha_sum(r, j - r_i - 1, j - 1)
    } else {
        alpha_sum(r, j - r_i - 1, 2 * r_i - 1)
    };
    let b3 = 2 * if j <= r_i {
        alpha_sum(r, 0, j - 2)
    } else if j <= 2 * r_i + 1 {
        alpha_sum(r, j - r_i, j - 2)
    } else {
        alpha_sum(r, j - r_i, 2 * r_i - 1)
    };
    b1 + b2 + b3
}

/// Closed form for the Betti numbers below the middle: `(5j^2 + 3j + 2)/2`
/// for `j < r`, and `(5r^2 + 3r)/2` at `j = r`.
pub fn betti_m02_small(r: u32, j: i64) -> Option<i64> {
    let r = r as i64;
    if j < r {
        Some((5 * j * j + 3 * j + 2) / 2)
    } else if j == r {
        Some((5 * r * r + 3 * r) / 2)
    } else {
        None
    }
}

/// Dimension count for the space of degree-`d` maps to `P^r` with `n` marks.
pub fn expected_dim(r: u32, d: u32, n: u32) -> i64 {
    d as i64 + r as i64 + (d * r) as i64 + n as i64 - 3
}
