//! Reference closed forms for the quotient characteristic polynomials and
//! their values at the degree thresholds, written out term by term.
//!
//! These exist only to be compared against [`crate::quotient::charpoly`];
//! no verdict anywhere in the crate is derived from them. Some of these
//! forms disagree with the determinant, which the comparison surfaces.

use crate::polynomial::{IntPolynomial, Rational};

fn i(x: usize) -> i128 {
    x as i128
}

/// Reference quintic for the `H(p,r,s)` quotient.
pub fn h_quintic(p: usize, r: usize, s: usize) -> IntPolynomial {
    let (p, r, s) = (i(p), i(r), i(s));
    IntPolynomial::from_descending(&[
        1,
        -(s + r + p + 6),
        (r + p + 3) * s + (p + 3) * r + p * p + 6 * p + 5,
        (-2 * r - p - 4) * s + (-2 * p - 2) * r - 2 * p * p - 6 * p - 2,
        (s + r) * p + p * p + 2 * p,
        0,
    ])
}

/// Reference quartic for the `H(p,r,0)` quotient.
pub fn h_s0_quartic(p: usize, r: usize) -> IntPolynomial {
    let (p, r) = (i(p), i(r));
    IntPolynomial::from_descending(&[
        1,
        -r - 2 * p - 3,
        (p + 2) * r + p * p + 4 * p + 2,
        -p * r - p * p - 2 * p,
        0,
    ])
}

/// Reference quartic for the `G(0,r,s)` quotient.
pub fn g_p0_quartic(r: usize, s: usize) -> IntPolynomial {
    let (r, s) = (i(r), i(s));
    IntPolynomial::from_descending(&[1, -r - s - 4, (r + 2) * s + 2 * r + 5, -r - s - 2, 0])
}

/// Reference quintic for the `G(p,r,s)` quotient.
pub fn g_quintic(p: usize, r: usize, s: usize) -> IntPolynomial {
    let (p, r, s) = (i(p), i(r), i(s));
    IntPolynomial::from_descending(&[
        1,
        -s - r - 2 * p - 6,
        (r + p + 4) * s + (p + 4) * r + p * p + 8 * p + 13,
        (-2 * r - 2 * p - 5) * s + (-2 * p - 5) * r - 2 * p * p - 14 * p - 12,
        (p + 2) * s + (p + 2) * r + p * p + 12 * p + 4,
        -4 * p,
    ])
}

/// Reference value of the `H(p,r,0)` quartic at `x = p`: `r p^2`.
pub fn h_s0_value_at_p(p: usize, r: usize) -> i128 {
    i(r) * i(p) * i(p)
}

/// Reference value of the `G(0,r,s)` quartic at `x = s + 1`: `s(s+1)(r-s)`.
pub fn g_p0_value_at_s_plus_1(r: usize, s: usize) -> i128 {
    let (r, s) = (i(r), i(s));
    s * (s + 1) * (r - s)
}

/// Reference factorization of the `H(p,s+k,s)` quintic at `x = p + s`.
pub fn h_value_at_p_plus_s(p: usize, s: usize, k: usize) -> i128 {
    let (p, s, k) = (i(p), i(s), i(k));
    (s + p) * (k * s * s + s * s + 2 * k * p * s + 2 * p - 2 * k * s - 2 * s + k * p * p - k * p)
}

/// Reference `G(1,r,r)` quintic value at `x = d1 + 3/2`.
pub fn g_case_i_upper(r: usize) -> Rational {
    let r = i(r);
    Rational::new(-(6 * r + 25) * (4 * r * r + 12 * r + 25), 32).unwrap()
}

/// Reference `G(1,r,r)` quintic value at `x = d2 - 1/2`.
pub fn g_case_i_lower(r: usize) -> Rational {
    let r = i(r);
    Rational::new((2 * r - 1) * (20 * r * r + 12 * r + 5), 32).unwrap()
}

/// Reference `G(p,r,r)` quintic value at `x = d1 + 2`.
pub fn g_case_ii(p: usize, r: usize) -> i128 {
    let (p, r) = (i(p), i(r));
    -(2 * r + 3 * p + 6) * (p * r - 2 * r + p * p + p - 2)
}

/// Reference `G(p,s+k,s)` quintic value at `x = d2`.
pub fn g_case_iii(p: usize, s: usize, k: usize) -> i128 {
    let (p, s, k) = (i(p), i(s), i(k));
    k * s * s * s + (3 * k - 2) * p * s * s + ((3 * k - 5) * p * p + (k + 2) * p - k) * s
        + (k - 3) * p * p * p
        + (k + 1) * p * p
}

fn poly2(terms: &[(i128, u32, u32)], p: i128, s: i128) -> i128 {
    terms.iter().map(|&(c, ep, es)| c * p.pow(ep) * s.pow(es)).sum()
}

/// Reference `G(p,s+2,s)` quintic value at `x = d1 + 1 + p/n`.
pub fn g_case_iv_upper_r_s2(p: usize, s: usize) -> Rational {
    let (p, s) = (i(p), i(s));
    #[rustfmt::skip]
    let num: &[(i128, u32, u32)] = &[
        (32, 0, 8),
        (208, 1, 7), (512, 0, 7),
        (568, 2, 6), (2992, 1, 6), (3456, 0, 6),
        (836, 3, 5), (7120, 2, 5), (18048, 1, 5), (12800, 0, 5),
        (720, 4, 4), (8764, 3, 4), (36536, 2, 4), (59136, 1, 4), (28160, 0, 4),
        (370, 5, 3), (5976, 4, 3), (36036, 3, 3), (98144, 2, 3), (113408, 1, 3), (36864, 0, 3),
        (110, 6, 2), (2240, 5, 2), (18104, 4, 2), (72468, 3, 2), (145280, 2, 2), (126720, 1, 2), (26624, 0, 2),
        (17, 7, 1), (420, 6, 1), (4326, 5, 1), (23576, 4, 1), (71008, 3, 1), (112000, 2, 1), (75776, 1, 1), (8192, 0, 1),
        (1, 8, 0), (29, 7, 0), (368, 6, 0), (2616, 5, 0), (11024, 4, 0), (26960, 3, 0), (34944, 2, 0), (18432, 1, 0),
    ];
    #[rustfmt::skip]
    let den: &[(i128, u32, u32)] = &[
        (32, 0, 5),
        (80, 1, 4), (320, 0, 4),
        (80, 2, 3), (640, 1, 3), (1280, 0, 3),
        (40, 3, 2), (480, 2, 2), (1920, 1, 2), (2560, 0, 2),
        (10, 4, 1), (160, 3, 1), (960, 2, 1), (2560, 1, 1), (2560, 0, 1),
        (1, 5, 0), (20, 4, 0), (160, 3, 0), (640, 2, 0), (1280, 1, 0), (1024, 0, 0),
    ];
    Rational::new(-poly2(num, p, s), poly2(den, p, s)).unwrap()
}

/// Reference `G(p,s+2,s)` quintic value at `x = d2 - p/n`.
pub fn g_case_iv_lower_r_s2(p: usize, s: usize) -> Rational {
    let (p, s) = (i(p), i(s));
    #[rustfmt::skip]
    let num: &[(i128, u32, u32)] = &[
        (64, 0, 8),
        (352, 1, 7), (640, 0, 7),
        (840, 2, 6), (3136, 1, 6), (2496, 0, 6),
        (1156, 3, 5), (6360, 2, 5), (11040, 1, 5), (4480, 0, 5),
        (1014, 4, 4), (7104, 3, 4), (18712, 2, 4), (19200, 1, 4), (2560, 0, 4),
        (581, 5, 3), (4814, 4, 3), (16220, 3, 3), (27048, 2, 3), (16640, 1, 3), (-3072, 0, 3),
        (211, 6, 2), (1998, 5, 2), (7832, 4, 2), (17128, 3, 2), (20400, 2, 2), (6144, 1, 2), (-5120, 0, 2),
        (44, 7, 1), (470, 6, 1), (2044, 5, 1), (5120, 4, 1), (8720, 3, 1), (8288, 2, 1), (512, 1, 1), (-2048, 0, 1),
        (4, 8, 0), (48, 7, 0), (228, 6, 0), (600, 5, 0), (1200, 4, 0), (2016, 3, 0), (1728, 2, 0),
    ];
    let den = (p + 2 * s + 4).pow(5);
    Rational::new(poly2(num, p, s), den).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(h_s0_value_at_p(3, 2), 18);
        assert_eq!(g_p0_value_at_s_plus_1(5, 2), 18);
        assert_eq!(g_case_ii(2, 1), -14 * 4);
        assert_eq!(g_case_i_upper(1), Rational::new(-31 * 41, 32).unwrap());
    }

    #[test]
    fn case_iv_denominator_is_a_fifth_power() {
        for p in 1..5 {
            for s in 1..5 {
                let v = g_case_iv_upper_r_s2(p, s);
                let n = (p + 2 * s + 4) as i128;
                // value * n^5 is an integer
                assert_eq!((v * Rational::integer(n.pow(5))).denom(), 1);
            }
        }
    }
}
