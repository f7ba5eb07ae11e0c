//! Frozen reference values used across the test suite and the verification
//! battery. Everything here is plain data; the modules that compute these
//! quantities must reproduce them exactly.

/// Poincare polynomial coefficients of the one-pointed degree-two space over
/// `P^r`, rows `r = 1..=8`, ascending powers.
pub const POINCARE_M01: [&[i64]; 8] = [
    &[1, 2, 2, 1],
    &[1, 3, 6, 7, 6, 3, 1],
    &[1, 3, 7, 11, 14, 14, 11, 7, 3, 1],
    &[1, 3, 7, 12, 18, 22, 24, 22, 18, 12, 7, 3, 1],
    &[1, 3, 7, 12, 19, 26, 32, 35, 35, 32, 26, 19, 12, 7, 3, 1],
    &[
        1, 3, 7, 12, 19, 27, 36, 43, 48, 49, 48, 43, 36, 27, 19, 12, 7, 3, 1,
    ],
    &[
        1, 3, 7, 12, 19, 27, 37, 47, 56, 62, 65, 65, 62, 56, 47, 37, 27, 19, 12, 7, 3, 1,
    ],
    &[
        1, 3, 7, 12, 19, 27, 37, 48, 60, 70, 78, 82, 84, 82, 78, 70, 60, 48, 37, 27, 19, 12, 7, 3,
        1,
    ],
];

/// Poincare polynomial coefficients of the two-pointed degree-two space over
/// `P^r`, rows `r = 1..=8`, ascending powers.
pub const POINCARE_M02: [&[i64]; 8] = [
    &[1, 4, 6, 4, 1],
    &[1, 5, 13, 20, 20, 13, 5, 1],
    &[1, 5, 14, 27, 39, 44, 39, 27, 14, 5, 1],
    &[1, 5, 14, 28, 46, 63, 73, 73, 63, 46, 28, 14, 5, 1],
    &[
        1, 5, 14, 28, 47, 70, 92, 107, 112, 107, 92, 70, 47, 28, 14, 5, 1,
    ],
    &[
        1, 5, 14, 28, 47, 71, 99, 126, 146, 156, 156, 146, 126, 99, 71, 47, 28, 14, 5, 1,
    ],
    &[
        1, 5, 14, 28, 47, 71, 100, 133, 165, 190, 205, 210, 205, 190, 165, 133, 100, 71, 47, 28,
        14, 5, 1,
    ],
    &[
        1, 5, 14, 28, 47, 71, 100, 134, 172, 209, 239, 259, 269, 269, 259, 239, 209, 172, 134,
        100, 71, 47, 28, 14, 5, 1,
    ],
];

/// Euler characteristics of the one-pointed rows above.
pub const CHI_M01: [i64; 8] = [6, 27, 72, 150, 270, 441, 672, 972];

/// Euler characteristics of the two-pointed rows above.
pub const CHI_M02: [i64; 8] = [16, 78, 216, 460, 840, 1386, 2128, 3096];

/// Stable (large `r`) Betti numbers of the two-pointed space in degrees 0..=5.
pub const STABLE_BETTI: [i64; 6] = [1, 5, 14, 28, 47, 71];

/// Nonzero top-degree integrals on the two-pointed degree-two space over the
/// line, keyed by monomials in the divisor symbols `D0, D1, D2, H1, H2`.
/// Every degree-four monomial absent from this list integrates to zero.
pub const DEG4_INTEGRALS_M02D2: &[(&str, &str)] = &[
    ("D2^4", "12"),
    ("D2^3*H1", "-4"),
    ("D2^3*H2", "-4"),
    ("D1*D2^3", "-4"),
    ("D1*D2^2*H1", "0"),
    ("D1*D2^2*H2", "0"),
    ("D1^2*D2^2", "-4"),
    ("D1^2*D2*H1", "4"),
    ("D1^2*D2*H2", "4"),
    ("D1^3*D2", "12"),
    ("D1^3*H1", "-8"),
    ("D1^3*H2", "-8"),
    ("D1^4", "-20"),
    ("D0*D1^2*H1", "4"),
    ("D0*D1^2*H2", "4"),
    ("D0*D1^2*D2", "0"),
    ("D0*D1*D2^2", "0"),
    ("D0*D2^3", "0"),
    ("D0*D1^3", "0"),
    ("D0^2*D1*H1", "-1"),
    ("D0^2*D1*H2", "-1"),
    ("D0^2*D1^2", "4"),
    ("D0^2*D1*D2", "0"),
    ("D0^2*D2^2", "0"),
    ("D0^3*H1", "1/4"),
    ("D0^3*H2", "1/4"),
    ("D0^3*D1", "-2"),
    ("D0^3*D2", "0"),
    ("D0^4", "3/4"),
    ("D0*D2^2*H1", "0"),
    ("D0*D2^2*H2", "0"),
    ("D0*D1*D2*H1", "0"),
    ("D0*D1*D2*H2", "0"),
    ("D0^2*D2*H1", "0"),
    ("D0^2*D2*H2", "0"),
    ("D1*D2*H1*H2", "2"),
    ("D2^2*H1*H2", "2"),
    ("D1^2*H1*H2", "2"),
];

/// Top-degree integrals on the one-pointed degree-two space over the line,
/// keyed by monomials in `D, H1`.
pub const DEG3_INTEGRALS_M01D2: &[(&str, &str)] = &[
    ("D^3", "0"),
    ("D^2*H1", "4"),
    ("D*H1^2", "0"),
    ("H1^3", "0"),
];

/// Two-point gravitational correlators at degree two, both orders of each
/// asymmetric pair. Keys use descending `(tau, class)` order.
pub const GRAVITATIONAL_CORRELATORS: &[(&str, &str)] = &[
    ("tau4(1),tau0(1)", "-3/4"),
    ("tau0(1),tau4(1)", "-3/4"),
    ("tau3(1),tau1(1)", "3/4"),
    ("tau1(1),tau3(1)", "3/4"),
    ("tau2(1),tau2(1)", "5/4"),
    ("tau3(H),tau0(1)", "1/4"),
    ("tau0(1),tau3(H)", "1/4"),
    ("tau2(H),tau1(1)", "-1/4"),
    ("tau1(1),tau2(H)", "-1/4"),
    ("tau1(H),tau2(1)", "-3/4"),
    ("tau2(1),tau1(H)", "-3/4"),
    ("tau0(H),tau3(1)", "-5/4"),
    ("tau3(1),tau0(H)", "-5/4"),
    ("tau2(H),tau0(H)", "1/2"),
    ("tau0(H),tau2(H)", "1/2"),
    ("tau1(H),tau1(H)", "1/2"),
];

/// Normal forms of the degree-four cotangent-class monomials in the
/// seven-generator presentation: each reduces to a rational multiple of
/// `D1^4`. Monomial keys use that presentation's generator order.
pub const PSI_MONOMIAL_NF: &[(&str, &str)] = &[
    ("psi1^4", "3/80"),
    ("H1*psi1^3", "-1/80"),
    ("H2*psi1^3", "1/16"),
    ("psi1^3*psi2", "-3/80"),
    ("H1*psi1^2*psi2", "1/80"),
    ("H1*H2*psi1^2", "-1/40"),
    ("psi1^2*psi2^2", "-1/16"),
    ("H2*psi1^2*psi2", "3/80"),
    ("H1*H2*psi1*psi2", "-1/40"),
];

/// Graded dimensions of the presentation catalog.
pub const GRADED_DIMS: &[(&str, &[usize])] = &[
    ("m01d1", &[1, 1]),
    ("m02d1", &[1, 2, 1]),
    ("m03d1", &[1, 4, 4, 1]),
    ("m03d0", &[1, 1]),
    ("m01d2", &[1, 2, 2, 1]),
    ("m02d2", &[1, 4, 6, 4, 1]),
    ("m02d2min", &[1, 4, 6, 4, 1]),
];
