//! Recovering the linear relations among divisor monomials on the two-point
//! degree-two space from integral data alone: a monomial combination is a
//! relation exactly when it pairs to zero against every complementary-degree
//! monomial.

use std::collections::BTreeMap;

use once_cell::sync::Lazy;

use crate::localization::{integrals_table, Space};
use crate::matrix::Mat;
use crate::poly::{monos_of_degree, varset, Mono, MultiPoly, VarSet};
use crate::rat::Rat;

/// Symbol order used throughout: `D0, D1, D2, H1, H2`.
pub fn divisor_vars() -> VarSet {
    varset(&["D0", "D1", "D2", "H1", "H2"])
}

static INTEGRALS: Lazy<BTreeMap<Mono, Rat>> = Lazy::new(|| {
    let values = integrals_table(Space::TwoPoint);
    monos_of_degree(5, 4)
        .into_iter()
        .zip(values.into_iter().map(|(_, v)| v))
        .collect()
});

fn mono_mul(a: &Mono, b: &Mono) -> Mono {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Candidate spanning monomials per degree, in a fixed order.
pub fn spanning_monomials(degree: u32) -> Vec<Mono> {
    let m = |d0: u32, d1: u32, d2: u32, h1: u32, h2: u32| vec![d0, d1, d2, h1, h2];
    match degree {
        0 => vec![m(0, 0, 0, 0, 0)],
        1 => vec![
            m(0, 0, 0, 1, 0),
            m(0, 0, 0, 0, 1),
            m(1, 0, 0, 0, 0),
            m(0, 1, 0, 0, 0),
            m(0, 0, 1, 0, 0),
        ],
        2 => vec![
            m(0, 2, 0, 0, 0),
            m(1, 1, 0, 0, 0),
            m(0, 1, 0, 1, 0),
            m(0, 1, 0, 0, 1),
            m(2, 0, 0, 0, 0),
            m(1, 0, 0, 1, 0),
            m(0, 0, 0, 1, 1),
        ],
        3 => vec![
            m(0, 3, 0, 0, 0),
            m(0, 2, 0, 1, 0),
            m(0, 2, 0, 0, 1),
            m(0, 1, 0, 1, 1),
            m(3, 0, 0, 0, 0),
            m(2, 0, 0, 1, 0),
        ],
        4 => vec![m(0, 2, 0, 1, 1)],
        _ => panic!("degrees 0..=4 only"),
    }
}

/// Outcome of the kernel computation in one degree.
pub struct RelationSearch {
    pub degree: u32,
    pub spanning: Vec<Mono>,
    pub multipliers: Vec<Mono>,
    pub matrix: Mat,
    /// Kernel basis, each vector scaled so its first nonzero entry is 1.
    pub kernel: Vec<Vec<Rat>>,
}

/// Pair the spanning monomials of the given degree against every monomial of
/// complementary degree and extract the kernel.
pub fn find_relations(degree: u32) -> RelationSearch {
    let spanning = spanning_monomials(degree);
    let multipliers = monos_of_degree(5, 4 - degree);
    let rows: Vec<Vec<Rat>> = multipliers
        .iter()
        .map(|mult| {
            spanning
                .iter()
                .map(|s| INTEGRALS[&mono_mul(mult, s)].clone())
                .collect()
        })
        .collect();
    let matrix = Mat::from_rows(rows);
    let kernel = matrix
        .kernel_basis()
        .into_iter()
        .map(|v| normalize_first_one(v))
        .collect();
    RelationSearch {
        degree,
        spanning,
        multipliers,
        matrix,
        kernel,
    }
}

fn normalize_first_one(mut v: Vec<Rat>) -> Vec<Rat> {
    if let Some(lead) = v.iter().find(|x| !x.is_zero()).cloned() {
        let inv = lead.recip();
        for x in &mut v {
            *x = &*x * &inv;
        }
    }
    v
}

/// Turn a kernel vector into a polynomial over the divisor symbols.
pub fn relation_polynomial(coeffs: &[Rat], spanning: &[Mono]) -> MultiPoly {
    let vars = divisor_vars();
    let mut p = MultiPoly::zero(&vars);
    for (c, m) in coeffs.iter().zip(spanning) {
        if !c.is_zero() {
            p = p.add(&MultiPoly::monomial(&vars, m.clone(), c.clone()));
        }
    }
    p
}

/// Per-degree summary confirming that the spanning count minus the relation
/// count reproduces the Betti numbers.
pub struct DegreeCheck {
    pub degree: u32,
    pub spanning: usize,
    pub kernel_dim: usize,
    pub betti: i64,
}

pub fn verify_completeness() -> Vec<DegreeCheck> {
    let betti = crate::serre::poincare_m02(1);
    (0..=4u32)
        .map(|k| {
            let search = find_relations(k);
            let check = DegreeCheck {
                degree: k,
                spanning: search.spanning.len(),
                kernel_dim: search.kernel.len(),
                betti: {
                    let c = betti.coeff(k as usize);
                    assert!(c.is_integer());
                    c.to_integer().unwrap().try_into().unwrap()
                },
            };
            assert_eq!(
                check.spanning - check.kernel_dim,
                check.betti as usize,
                "rank mismatch in degree {k}"
            );
            check
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chow::{by_name, GradedQuotient};
    use crate::poly::mono_to_string;

    fn ints(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| Rat::from_int(x)).collect()
    }

    #[test]
    fn degree_one_kernel_is_the_linear_relation() {
        let search = find_relations(1);
        assert_eq!(search.kernel.len(), 1);
        // First-nonzero normalization of 2H1 + 2H2 - 4D0 - D1 + D2.
        let want = vec![
            Rat::one(),
            Rat::one(),
            Rat::from_int(-2),
            Rat::new(-1, 2),
            Rat::new(1, 2),
        ];
        assert_eq!(search.kernel[0], want);
        // Rescaled to coefficient 1 on the last symbol.
        let scaled: Vec<Rat> = search.kernel[0]
            .iter()
            .map(|c| c * &Rat::from_int(2))
            .collect();
        assert_eq!(scaled, ints(&[2, 2, -4, -1, 1]));
    }

    #[test]
    fn degree_one_matrix_has_expected_rows() {
        let search = find_relations(1);
        let row_for = |name: &str| -> Vec<Rat> {
            let idx = search
                .multipliers
                .iter()
                .position(|m| mono_to_string(m, &divisor_vars()) == name)
                .unwrap();
            (0..search.spanning.len())
                .map(|c| search.matrix.at(idx, c).clone())
                .collect()
        };
        assert_eq!(row_for("D2^2*H1"), ints(&[0, 2, 0, 0, -4]));
        assert_eq!(row_for("D2^2*H2"), ints(&[2, 0, 0, 0, -4]));
        assert_eq!(row_for("D0*D1*H1"), ints(&[0, 0, -1, 4, 0]));
        assert_eq!(row_for("D1*H1*H2"), ints(&[0, 0, 0, 2, 2]));
    }

    #[test]
    fn degree_two_kernel() {
        let search = find_relations(2);
        assert_eq!(search.kernel.len(), 1);
        // D1*D0 + 4*D0^2 - 4*D0*H1 in the spanning order.
        assert_eq!(search.kernel[0], ints(&[0, 1, 0, 0, 4, -4, 0]));
    }

    #[test]
    fn degree_three_kernel_spans_the_two_cubics() {
        let search = find_relations(3);
        assert_eq!(search.kernel.len(), 2);
        let c1 = ints(&[1, -3, -3, 6, 56, -72]);
        let c2 = vec![
            Rat::new(1, 4),
            Rat::from_int(-1),
            Rat::from_int(-1),
            Rat::new(5, 2),
            Rat::from_int(16),
            Rat::from_int(-16),
        ];
        // Both cubics are annihilated by the full pairing matrix.
        for v in [&c1, &c2] {
            let image = search.matrix.mul_vec(v);
            assert!(image.iter().all(|x| x.is_zero()));
        }
        // And they span the same space as the computed kernel.
        let kernel_mat = Mat::from_rows(search.kernel.clone());
        let cubic_mat = Mat::from_rows(vec![c1, c2]);
        assert!(crate::matrix::same_row_span(&kernel_mat, &cubic_mat));
    }

    #[test]
    fn outer_degrees_have_no_relations() {
        assert_eq!(find_relations(0).kernel.len(), 0);
        assert_eq!(find_relations(4).kernel.len(), 0);
    }

    #[test]
    fn completeness_reproduces_betti_numbers() {
        let checks = verify_completeness();
        let dims: Vec<usize> = checks
            .iter()
            .map(|c| c.spanning - c.kernel_dim)
            .collect();
        assert_eq!(dims, vec![1, 4, 6, 4, 1]);
    }

    #[test]
    fn recovered_relations_hold_in_the_presented_ring() {
        let q = GradedQuotient::build(by_name("m02d2").unwrap()).unwrap();
        let gens = q.pres.gens.clone();
        let images: Vec<MultiPoly> = ["D0", "D1", "D2", "H1", "H2"]
            .iter()
            .map(|n| MultiPoly::named_var(&gens, n))
            .collect();
        for degree in 1..=3u32 {
            let search = find_relations(degree);
            for v in &search.kernel {
                let rel = relation_polynomial(v, &search.spanning);
                let mapped = rel.substitute(&images, &gens);
                assert!(q.is_zero_mod(&mapped), "degree {degree}");
            }
        }
    }
}
