//! Truncated power series checks of the rational generating functions.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::enumeration::{multiset_descent_poly, Caps};
use crate::error::Result;
use crate::exactpoly::{rat, ratio, Rational, UniPoly};

/// Coefficients `c_0..=c_order` of a power series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<Rational>,
}

impl TruncSeries {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a truncated series has at least one term"
        );
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, t: usize) -> &Rational {
        &self.coeffs[t]
    }
}

/// First `order + 1` coefficients of `f(x) / (1-x)^m`, by `m` prefix-sum passes.
pub fn expand_over_one_minus_x_pow(f: &UniPoly, m: usize, order: usize) -> TruncSeries {
    let mut c: Vec<Rational> = (0..=order).map(|k| f.coeff(k)).collect();
    for _ in 0..m {
        let mut acc = Rational::zero();
        for v in c.iter_mut() {
            acc += &*v;
            *v = acc.clone();
        }
    }
    TruncSeries::new(c)
}

fn binom(n: u64, k: u64) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `sum_k C(k+2,2)^n x^k = P_n(x) / (1-x)^(2n+1)` through `order`.
pub fn check_p_identity_with(p_n: &UniPoly, n: usize, order: usize) -> bool {
    let s = expand_over_one_minus_x_pow(p_n, 2 * n + 1, order);
    (0..=order)
        .all(|t| *s.coeff(t) == Rational::from_integer(num_traits::pow(binom(t as u64 + 2, 2), n)))
}

/// `sum_t (t+1)^(n+1) ((t+2)/2)^n x^t = Q_n(x) / (1-x)^(2n+2)` through `order`.
pub fn check_q_identity_with(q_n: &UniPoly, n: usize, order: usize) -> bool {
    let s = expand_over_one_minus_x_pow(q_n, 2 * n + 2, order);
    (0..=order).all(|t| {
        let t = t as i64;
        let rhs = num_traits::pow(rat(t + 1), n + 1) * num_traits::pow(ratio(t + 2, 2), n);
        *s.coeff(t as usize) == rhs
    })
}

/// Checks the `P_n` identity with `P_n` from the coefficient recurrence.
pub fn check_p_identity(n: usize, order: usize) -> bool {
    let p = crate::recurrences::pnk_rows(n).poly(n);
    check_p_identity_with(&p, n, order)
}

/// Checks the `Q_n` identity with `Q_n` from the coefficient recurrence.
pub fn check_q_identity(n: usize, order: usize) -> bool {
    let q = crate::recurrences::qnk_via_r(n).1.poly(n);
    check_q_identity_with(&q, n, order)
}

/// `sum_t prod_i C(t+p_i, p_i) x^t = W(x) / (1-x)^(1 + sum p_i)`, with `W`
/// the brute-force multiset descent polynomial.
pub fn check_macmahon(mults: &[usize], order: usize, caps: &Caps) -> Result<bool> {
    let w = multiset_descent_poly(mults, caps)?;
    let total: usize = mults.iter().sum();
    let s = expand_over_one_minus_x_pow(&w, 1 + total, order);
    Ok((0..=order).all(|t| {
        let rhs: BigInt = mults
            .iter()
            .map(|&p| binom((t + p) as u64, p as u64))
            .product();
        *s.coeff(t) == Rational::from_integer(rhs)
    }))
}
