//! Dense univariate polynomials over arbitrary-precision rationals.
//!
//! Coefficient `k` of a [`UniPoly`] multiplies `x^k`. Trailing zeros are
//! stripped after every operation, so the zero polynomial is the empty
//! coefficient vector and structural equality is polynomial equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `C(m, 0), ..., C(m, m)`.
pub fn binomial_row(m: usize) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(m + 1);
    let mut c = BigInt::one();
    for j in 0..=m {
        row.push(c.clone());
        c = c * (m - j) / (j + 1);
    }
    row
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut p = Self { coeffs };
        p.normalize();
        p
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn from_integers<I: IntoIterator<Item = BigInt>>(coeffs: I) -> Self {
        Self::from_coeffs(coeffs.into_iter().map(Rational::from_integer).collect())
    }

    /// `(1+x)^m`, built from the binomial row.
    pub fn one_plus_x_pow(m: usize) -> Self {
        Self::from_integers(binomial_row(m))
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^k`; zero beyond the degree.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * rat(k as i64))
                .collect(),
        )
    }

    /// `x^n f(1/x)`: coefficient `k` of the result is coefficient `n - k` of `self`.
    pub fn reverse(&self, n: usize) -> Result<Self> {
        match self.degree() {
            Some(d) if d > n => Err(Error::DegreeTooLarge {
                degree: d,
                bound: n,
            }),
            _ => Ok(Self::from_coeffs(
                (0..=n).map(|k| self.coeff(n - k)).collect(),
            )),
        }
    }

    /// Exact quotient by `1 - x`, or [`Error::NotDivisible`] when `f(1) != 0`.
    pub fn div_one_minus_x(&self) -> Result<Self> {
        // f = (1 - x) g  =>  g_k = f_0 + ... + f_k, and the full sum must vanish.
        let mut acc = Rational::zero();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            acc += c;
            out.push(acc.clone());
        }
        if !acc.is_zero() {
            return Err(Error::NotDivisible);
        }
        out.pop();
        Ok(Self::from_coeffs(out))
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if nd < dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let c = &rem[i + dd] / &lead;
            if !c.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] -= &c * d;
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Sum of coefficients, i.e. `f(1)`.
    pub fn coeff_sum(&self) -> Rational {
        self.coeffs.iter().sum()
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Coefficients as integers, failing on the first fractional one.
    pub fn to_integers(&self) -> Result<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::NonIntegral(c.to_string()))
                }
            })
            .collect()
    }

    /// True when every coefficient is `>= 0`.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for UniPoly {
            type Output = UniPoly;
            fn $m(self, rhs: UniPoly) -> UniPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let show_coeff = k == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn binomial_square() {
        assert_eq!(&p(&[1, 1]) * &p(&[1, 1]), p(&[1, 2, 1]));
    }

    #[test]
    fn second_multiset_step() {
        // (1+2x)(1+x) + 1/2 * x(1-x) * 2
        let q1 = p(&[1, 2]);
        let lhs = &p(&[1, 1]) * &q1;
        let rhs = (&p(&[0, 1, -1]) * &q1.derivative()).scale(&ratio(1, 2));
        assert_eq!(&lhs + &rhs, p(&[1, 4, 1]));
    }

    #[test]
    fn add_zero_is_identity() {
        let f = p(&[3, 0, -2, 7]);
        assert_eq!(&f + &UniPoly::zero(), f);
    }

    #[test]
    fn trailing_zeros_are_stripped() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(&p(&[1, 1]) - &p(&[1, 1]), UniPoly::zero());
    }

    #[test]
    fn derivatives() {
        assert_eq!(p(&[1, 4, 1]).derivative(), p(&[4, 2]));
        assert_eq!(p(&[5]).derivative(), UniPoly::zero());
        assert_eq!(p(&[1, 12, 15, 2]).derivative(), p(&[12, 30, 6]));
    }

    #[test]
    fn reversal() {
        assert_eq!(p(&[1, 4, 1]).reverse(2).unwrap(), p(&[1, 4, 1]));
        assert_eq!(p(&[1, 12, 15, 2]).reverse(3).unwrap(), p(&[2, 15, 12, 1]));
        assert_eq!(p(&[1]).reverse(3).unwrap(), p(&[0, 0, 0, 1]));
        assert_eq!(
            p(&[1, 1, 1]).reverse(1),
            Err(Error::DegreeTooLarge {
                degree: 2,
                bound: 1
            })
        );
    }

    #[test]
    fn division_by_one_minus_x() {
        assert_eq!(
            p(&[1, 10, 0, -10, -1]).div_one_minus_x().unwrap(),
            p(&[1, 11, 11, 1])
        );
        assert_eq!(p(&[1, -1]).div_one_minus_x().unwrap(), p(&[1]));
        assert_eq!(p(&[1, 1]).div_one_minus_x(), Err(Error::NotDivisible));
        assert_eq!(UniPoly::zero().div_one_minus_x().unwrap(), UniPoly::zero());
    }

    #[test]
    fn euclidean_division() {
        let f = p(&[1, 4, 1]);
        let g = p(&[1, 2]);
        let (q, r) = f.div_rem(&g);
        assert_eq!(&(&q * &g) + &r, f);
        assert!(r.degree().unwrap_or(0) < 1);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, 4, 1]).to_string(), "1 + 4x + x^2");
        assert_eq!(p(&[0, -1, 0, 3]).to_string(), "-x + 3x^3");
        assert_eq!(UniPoly::zero().to_string(), "0");
    }

    fn small_poly() -> impl Strategy<Value = UniPoly> {
        prop::collection::vec(-20i64..=20, 0..8).prop_map(|c| UniPoly::from_ints(&c))
    }

    proptest! {
        #[test]
        fn reverse_is_an_involution(f in small_poly(), extra in 0usize..4) {
            let n = f.degree().unwrap_or(0) + extra;
            prop_assert_eq!(f.reverse(n).unwrap().reverse(n).unwrap(), f);
        }

        #[test]
        fn one_minus_x_division_undoes_multiplication(g in small_poly()) {
            let f = &g * &p(&[1, -1]);
            prop_assert_eq!(f.div_one_minus_x().unwrap(), g);
        }

        #[test]
        fn derivative_is_linear(f in small_poly(), g in small_poly()) {
            prop_assert_eq!((&f + &g).derivative(), &f.derivative() + &g.derivative());
        }
    }
}
