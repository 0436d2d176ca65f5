//! Exact integer polynomials and rational evaluation points.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact rational number in lowest terms with a positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(Ratio<i128>);

impl Rational {
    pub fn new(numer: i128, denom: i128) -> Result<Self> {
        if denom == 0 {
            return Err(Error::param("zero denominator"));
        }
        Ok(Rational(Ratio::new(numer, denom)))
    }

    pub fn integer(value: i128) -> Self {
        Rational(Ratio::from_integer(value))
    }

    pub fn numer(&self) -> i128 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i128 {
        *self.0.denom()
    }

    pub fn signum(&self) -> Ordering {
        self.numer().cmp(&0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        self.numer() as f64 / self.denom() as f64
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::integer(v as i128)
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        Rational(self.0 + rhs.0)
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        Rational(self.0 - rhs.0)
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        Rational(self.0 * rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom() == 1 {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

/// Univariate polynomial with exact integer coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntPolynomial {
    coeffs: Vec<i128>,
}

impl IntPolynomial {
    /// Trailing zero coefficients are dropped; the zero polynomial keeps one.
    pub fn new(mut coeffs: Vec<i128>) -> Self {
        while coeffs.len() > 1 && *coeffs.last().unwrap() == 0 {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0);
        }
        IntPolynomial { coeffs }
    }

    /// Builds from coefficients listed highest degree first.
    pub fn from_descending(coeffs: &[i128]) -> Self {
        IntPolynomial::new(coeffs.iter().rev().copied().collect())
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> i128 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> i128 {
        *self.coeffs.last().unwrap()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    /// Exact Horner evaluation.
    pub fn eval_at(&self, x: Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::integer(0), |acc, &c| acc * x + Rational::integer(c))
    }

    pub fn eval_int(&self, x: i128) -> i128 {
        self.coeffs.iter().rev().fold(0i128, |acc, &c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c as f64)
    }

    /// `(x - root)^power`, used for identity-matrix checks.
    pub fn linear_power(root: i128, power: usize) -> Self {
        let mut coeffs = vec![1i128];
        for _ in 0..power {
            let mut next = vec![0i128; coeffs.len() + 1];
            for (i, &c) in coeffs.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= root * c;
            }
            coeffs = next;
        }
        IntPolynomial::new(coeffs)
    }

    /// Canonical ascii form `c0 + c1*x + c2*x^2 + ...` with every
    /// coefficient written out, signs attached to the numbers.
    pub fn to_ascii(&self) -> String {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("{c}*x"),
                _ => format!("{c}*x^{i}"),
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_ascii())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_normalizes() {
        let r = Rational::new(6, -4).unwrap();
        assert_eq!((r.numer(), r.denom()), (-3, 2));
        assert_eq!(r.to_string(), "-3/2");
        assert!(Rational::new(1, 0).is_err());
        assert_eq!(Rational::new(0, 5).unwrap().denom(), 1);
    }

    #[test]
    fn rational_ordering() {
        let a = Rational::new(1, 3).unwrap();
        let b = Rational::new(1, 2).unwrap();
        assert!(a < b);
        assert_eq!((a - b).signum(), Ordering::Less);
    }

    #[test]
    fn horner_matches_direct_sum() {
        let f = IntPolynomial::new(vec![-4, 3, 0, 1]);
        let x = Rational::new(5, 3).unwrap();
        let direct = Rational::integer(-4)
            + Rational::integer(3) * x
            + x * x * x;
        assert_eq!(f.eval_at(x), direct);
        assert_eq!(f.eval_int(2), -4 + 6 + 8);
        assert!((f.eval_f64(2.0) - 10.0).abs() < 1e-12);
    }

    #[test]
    fn ascii_form() {
        let f = IntPolynomial::from_descending(&[1, -6, 10, -4, 0]);
        assert_eq!(f.to_ascii(), "0 + -4*x + 10*x^2 + -6*x^3 + 1*x^4");
        assert_eq!(IntPolynomial::new(vec![]).to_ascii(), "0");
    }

    #[test]
    fn binomial_expansion() {
        let f = IntPolynomial::linear_power(1, 4);
        assert_eq!(f.coeffs(), &[1, -4, 6, -4, 1]);
        assert!(f.is_monic());
        assert_eq!(f.degree(), 4);
    }
}
