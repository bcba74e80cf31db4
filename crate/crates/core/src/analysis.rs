//! Structural analysis of polynomials: symmetric decomposition, gamma
//! vectors, unimodality reports, and exact real-root certification via
//! Sturm sequences.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactpoly::{binomial_row, Rational, UniPoly};

/// `f = a + x b` with `a` symmetric about `center/2` and `b` about `(center-1)/2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricDecomposition {
    pub a: UniPoly,
    pub b: UniPoly,
    pub center: usize,
}

pub fn symmetric_decompose(f: &UniPoly, n: usize) -> Result<SymmetricDecomposition> {
    // a = (f - x^{n+1} f(1/x)) / (1-x),  b = (x^n f(1/x) - f) / (1-x)
    let a = (f - &f.reverse(n + 1)?).div_one_minus_x()?;
    let b = (&f.reverse(n)? - f).div_one_minus_x()?;
    Ok(SymmetricDecomposition { a, b, center: n })
}

/// Coordinates of a symmetric polynomial in the basis `x^k (1+x)^(center-2k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaVector {
    pub center: usize,
    pub gammas: Vec<Rational>,
}

impl GammaVector {
    pub fn is_nonnegative(&self) -> bool {
        self.gammas.iter().all(|g| !g.is_negative())
    }

    pub fn expand(&self) -> UniPoly {
        self.gammas
            .iter()
            .enumerate()
            .fold(UniPoly::zero(), |acc, (k, g)| {
                &acc + &UniPoly::one_plus_x_pow(self.center - 2 * k)
                    .shift(k)
                    .scale(g)
            })
    }
}

pub fn is_symmetric(f: &UniPoly, n: usize) -> bool {
    f.reverse(n).is_ok_and(|r| &r == f)
}

pub fn gamma_vector(f: &UniPoly, n: usize) -> Result<GammaVector> {
    if !is_symmetric(f, n) {
        return Err(Error::NotSymmetric(n));
    }
    // peel on the integer multiple `lcm * f`, then scale the coordinates back
    let lcm = f
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut residual: Vec<BigInt> = (0..=n)
        .map(|k| (f.coeff(k) * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let mut gammas = Vec::with_capacity(n / 2 + 1);
    for k in 0..=n / 2 {
        let g = residual[k].clone();
        if !g.is_zero() {
            for (j, b) in binomial_row(n - 2 * k).into_iter().enumerate() {
                residual[k + j] -= &g * b;
            }
        }
        gammas.push(Rational::new(g, lcm.clone()));
    }
    if residual.iter().any(|c| !c.is_zero()) {
        return Err(Error::NonzeroResidual);
    }
    Ok(GammaVector { center: n, gammas })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositivityReport {
    /// `None` when the polynomial is not symmetric about `center/2`.
    pub gamma_positive: Option<bool>,
    pub bi_gamma_positive: bool,
    pub alternatingly_increasing: bool,
    pub unimodal: bool,
    /// Every index attaining the maximal coefficient.
    pub mode_set: Vec<usize>,
}

impl PositivityReport {
    /// bi-gamma => alternatingly increasing => unimodal.
    pub fn implications_hold(&self) -> bool {
        (!self.bi_gamma_positive || self.alternatingly_increasing)
            && (!self.alternatingly_increasing || self.unimodal)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "gamma_positive": self.gamma_positive,
            "bi_gamma_positive": self.bi_gamma_positive,
            "alternatingly_increasing": self.alternatingly_increasing,
            "unimodal": self.unimodal,
            "mode_set": self.mode_set,
        })
    }
}

pub fn is_unimodal(f: &UniPoly) -> bool {
    let c = f.coeffs();
    let mut i = 1;
    while i < c.len() && c[i - 1] <= c[i] {
        i += 1;
    }
    while i < c.len() && c[i - 1] >= c[i] {
        i += 1;
    }
    i >= c.len()
}

pub fn mode_set(f: &UniPoly) -> Vec<usize> {
    let Some(max) = f.coeffs().iter().max() else {
        return Vec::new();
    };
    f.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| *c == max)
        .map(|(k, _)| k)
        .collect()
}

/// `f_0 <= f_n <= f_1 <= f_{n-1} <= ...`.
pub fn is_alternatingly_increasing(f: &UniPoly, n: usize) -> bool {
    let mut order = Vec::with_capacity(n + 1);
    let (mut lo, mut hi) = (0usize, n);
    loop {
        order.push(f.coeff(lo));
        if lo == hi {
            break;
        }
        order.push(f.coeff(hi));
        lo += 1;
        hi -= 1;
        if lo > hi {
            break;
        }
    }
    order.windows(2).all(|w| w[0] <= w[1])
}

/// Modes within `{floor(d/2), ceil(d/2)}` for `d = deg f`.
pub fn modes_in_middle(f: &UniPoly) -> bool {
    let d = f.degree().unwrap_or(0);
    mode_set(f)
        .iter()
        .all(|&m| m == d / 2 || m == d.div_ceil(2))
}

pub fn positivity_report(f: &UniPoly, n: usize) -> Result<PositivityReport> {
    if let Some(c) = f.coeffs().iter().find(|c| c.is_negative()) {
        return Err(Error::NegativeCoefficient(c.to_string()));
    }
    let gamma_positive = if is_symmetric(f, n) {
        Some(gamma_vector(f, n)?.is_nonnegative())
    } else {
        None
    };
    let dec = symmetric_decompose(f, n)?;
    let a_ok = gamma_vector(&dec.a, n)?.is_nonnegative();
    let b_ok = if n == 0 {
        dec.b.is_zero()
    } else {
        gamma_vector(&dec.b, n - 1)?.is_nonnegative()
    };
    Ok(PositivityReport {
        gamma_positive,
        bi_gamma_positive: a_ok && b_ok,
        alternatingly_increasing: is_alternatingly_increasing(f, n),
        unimodal: is_unimodal(f),
        mode_set: mode_set(f),
    })
}

// ---------------------------------------------------------------------------
// Integer polynomial helpers for remainder sequences.

type IntPoly = Vec<BigInt>;

fn trim(p: &mut IntPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

/// Positive rational multiple of `f` with coprime integer coefficients.
fn primitive(f: &UniPoly) -> IntPoly {
    let lcm = f
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: IntPoly = f
        .coeffs()
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    make_primitive(ints)
}

fn make_primitive(mut p: IntPoly) -> IntPoly {
    trim(&mut p);
    let g = p.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !g.is_zero() && !g.is_one() {
        for c in &mut p {
            *c /= &g;
        }
    }
    p
}

/// A positive multiple of the remainder of `a` by `b`.
fn pseudo_rem(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let db = b.len() - 1;
    let lc = &b[db];
    let (lc_abs, lc_neg) = (lc.abs(), lc.is_negative());
    let mut r = a.clone();
    trim(&mut r);
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let lr = r.last().unwrap().clone();
        let factor = if lc_neg { -lr } else { lr };
        for c in r.iter_mut() {
            *c *= &lc_abs;
        }
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] -= &factor * bj;
        }
        trim(&mut r);
    }
    r
}

fn int_derivative(p: &IntPoly) -> IntPoly {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * BigInt::from(k))
        .collect()
}

fn int_gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let (mut a, mut b) = (make_primitive(a.clone()), make_primitive(b.clone()));
    while !b.is_empty() {
        let r = make_primitive(pseudo_rem(&a, &b));
        a = b;
        b = r;
    }
    a
}

fn to_uni(p: &IntPoly) -> UniPoly {
    UniPoly::from_integers(p.iter().cloned())
}

/// Greatest common divisor, normalized to be monic.
pub fn poly_gcd(f: &UniPoly, g: &UniPoly) -> UniPoly {
    let d = to_uni(&int_gcd(&primitive(f), &primitive(g)));
    match d.leading() {
        Some(lc) => d.scale(&lc.recip()),
        None => d,
    }
}

/// Square-free factors `(g_i, i)` with `f = c * prod g_i^i` (Yun's algorithm).
pub fn square_free_decomposition(f: &UniPoly) -> Vec<(UniPoly, usize)> {
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let fp = f.derivative();
    let a0 = poly_gcd(f, &fp);
    let mut b = f.div_rem(&a0).0;
    let mut c = fp.div_rem(&a0).0;
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = poly_gcd(&b, &d);
        if a.degree().unwrap_or(0) > 0 {
            out.push((a.clone(), i));
        }
        b = b.div_rem(&a).0;
        c = d.div_rem(&a).0;
        d = &c - &b.derivative();
        i += 1;
    }
    out
}

/// Cauchy's bound `1 + max |a_i| / |a_d|`: every root lies strictly inside `(-B, B)`.
pub fn cauchy_bound(f: &UniPoly) -> Rational {
    let lc = f.leading().expect("nonzero polynomial").abs();
    let max = f.coeffs()[..f.coeffs().len() - 1]
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(Rational::zero);
    Rational::one() + max / lc
}

/// Sign of `q^d f(p/q)` for `q > 0`.
fn sign_at(f: &IntPoly, p: &BigInt, q: &BigInt) -> Ordering {
    let Some(lead) = f.last() else {
        return Ordering::Equal;
    };
    let d = f.len() - 1;
    let mut acc = lead.clone();
    let mut qpow = BigInt::one();
    for i in (0..d).rev() {
        qpow *= q;
        acc = acc * p + &f[i] * &qpow;
    }
    acc.sign().cmp_zero()
}

trait SignExt {
    fn cmp_zero(self) -> Ordering;
}

impl SignExt for num_bigint::Sign {
    fn cmp_zero(self) -> Ordering {
        match self {
            num_bigint::Sign::Minus => Ordering::Less,
            num_bigint::Sign::NoSign => Ordering::Equal,
            num_bigint::Sign::Plus => Ordering::Greater,
        }
    }
}

fn variations<I: Iterator<Item = Ordering>>(signs: I) -> usize {
    let mut last = Ordering::Equal;
    let mut v = 0;
    for s in signs {
        if s == Ordering::Equal {
            continue;
        }
        if last != Ordering::Equal && s != last {
            v += 1;
        }
        last = s;
    }
    v
}

/// Sturm sequence of a square-free polynomial.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<IntPoly>,
}

impl SturmChain {
    /// Builds the chain `f, f', -rem(f, f'), ...` with content removed at each step.
    pub fn new(f: &UniPoly) -> Self {
        let f0 = primitive(f);
        let mut chain = vec![f0.clone()];
        let f1 = make_primitive(int_derivative(&f0));
        if !f1.is_empty() {
            chain.push(f1);
        }
        while chain.len() >= 2 {
            let n = chain.len();
            let r = pseudo_rem(&chain[n - 2], &chain[n - 1]);
            if r.is_empty() {
                break;
            }
            chain.push(make_primitive(r.into_iter().map(|c| -c).collect()));
        }
        Self { chain }
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    /// Sign variations at `x`.
    pub fn variations_at(&self, x: &Rational) -> usize {
        variations(self.chain.iter().map(|p| sign_at(p, x.numer(), x.denom())))
    }

    fn variations_at_infinity(&self, positive: bool) -> usize {
        variations(self.chain.iter().map(|p| {
            let s = p.last().map_or(Ordering::Equal, |c| c.sign().cmp_zero());
            if !positive && (p.len() - 1) % 2 == 1 {
                s.reverse()
            } else {
                s
            }
        }))
    }

    /// Number of distinct real roots.
    pub fn total_real_roots(&self) -> usize {
        self.variations_at_infinity(false) - self.variations_at_infinity(true)
    }

    /// Number of distinct roots in `(lo, hi]`.
    pub fn count_in(&self, lo: &Rational, hi: &Rational) -> usize {
        self.variations_at(lo)
            .saturating_sub(self.variations_at(hi))
    }
}

/// A half-open interval `(lo, hi]` holding exactly one root of multiplicity `mult`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: Rational,
    pub hi: Rational,
    pub mult: usize,
}

impl RootInterval {
    pub fn to_json(&self) -> Value {
        json!({
            "lo": format!("{}/{}", self.lo.numer(), self.lo.denom()),
            "hi": format!("{}/{}", self.hi.numer(), self.hi.denom()),
            "mult": self.mult,
        })
    }
}

/// Disjoint isolating intervals in increasing order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RootIsolation {
    pub intervals: Vec<RootInterval>,
}

impl RootIsolation {
    pub fn root_count(&self) -> usize {
        self.intervals.iter().map(|i| i.mult).sum()
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.intervals.iter().map(RootInterval::to_json).collect())
    }
}

#[derive(Clone, Debug)]
pub struct RootCertificate {
    pub is_real_rooted: bool,
    pub isolation: RootIsolation,
}

/// An isolating interval tied to the Sturm chain that can refine it.
struct Tracked<'a> {
    lo: Rational,
    hi: Rational,
    owner: usize,
    mult: usize,
    chain: &'a SturmChain,
}

impl Tracked<'_> {
    fn bisect(&mut self) {
        let mid = (&self.lo + &self.hi) / Rational::from_integer(BigInt::from(2));
        if self.chain.count_in(&self.lo, &mid) == 1 {
            self.hi = mid;
        } else {
            self.lo = mid;
        }
    }
}

/// Smallest power of two that is at least `b`.
fn dyadic_at_least(b: &Rational) -> Rational {
    let mut p = Rational::one();
    while &p < b {
        p *= Rational::from_integer(BigInt::from(2));
    }
    p
}

fn isolate_chain(chain: &SturmChain, bound: &Rational) -> Vec<(Rational, Rational)> {
    let lo = -bound.clone();
    let hi = bound.clone();
    let mut out = Vec::new();
    let mut stack = vec![(
        lo.clone(),
        hi.clone(),
        chain.variations_at(&lo),
        chain.variations_at(&hi),
    )];
    while let Some((lo, hi, vlo, vhi)) = stack.pop() {
        let count = vlo.saturating_sub(vhi);
        if count == 0 {
            continue;
        }
        if count == 1 {
            out.push((lo, hi));
            continue;
        }
        let mid = (&lo + &hi) / Rational::from_integer(BigInt::from(2));
        let vmid = chain.variations_at(&mid);
        stack.push((mid.clone(), hi, vmid, vhi));
        stack.push((lo, mid, vlo, vmid));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// Refines intervals from coprime chains until they are pairwise disjoint; returns them sorted.
fn separate(mut items: Vec<Tracked<'_>>) -> Vec<Tracked<'_>> {
    loop {
        items.sort_by(|a, b| a.lo.cmp(&b.lo).then(a.hi.cmp(&b.hi)));
        let mut clash = None;
        for i in 1..items.len() {
            if items[i].lo < items[i - 1].hi {
                clash = Some(i);
                break;
            }
        }
        let Some(i) = clash else {
            return items;
        };
        // distinct roots, so halving both eventually separates them
        items[i - 1].bisect();
        items[i].bisect();
    }
}

/// Square-free decomposition, Sturm counts over `(-B, B]`, and bisection
/// down to one root per interval.
pub fn real_root_certificate(f: &UniPoly) -> Result<RootCertificate> {
    let deg = f.degree().ok_or(Error::ZeroPolynomial)?;
    let factors = square_free_decomposition(f);
    let chains: Vec<(SturmChain, usize, Rational)> = factors
        .iter()
        .map(|(g, m)| (SturmChain::new(g), *m, dyadic_at_least(&cauchy_bound(g))))
        .collect();
    let real: usize = chains
        .iter()
        .map(|(c, m, _)| c.total_real_roots() * m)
        .sum();
    let mut tracked = Vec::new();
    for (owner, (chain, mult, bound)) in chains.iter().enumerate() {
        for (lo, hi) in isolate_chain(chain, bound) {
            tracked.push(Tracked {
                lo,
                hi,
                owner,
                mult: *mult,
                chain,
            });
        }
    }
    let intervals = separate(tracked)
        .into_iter()
        .map(|t| RootInterval {
            lo: t.lo,
            hi: t.hi,
            mult: t.mult,
        })
        .collect();
    Ok(RootCertificate {
        is_real_rooted: real == deg,
        isolation: RootIsolation { intervals },
    })
}

/// True when `p`'s roots strictly separate `q`'s: `t_1 < s_1 < t_2 < ... < s_n < t_{n+1}`.
pub fn strictly_interlaces(p: &UniPoly, q: &UniPoly) -> Result<bool> {
    let dp = p.degree().ok_or(Error::ZeroPolynomial)?;
    let dq = q.degree().ok_or(Error::ZeroPolynomial)?;
    if dq != dp + 1 {
        return Err(Error::DegreeMismatch { p: dp, q: dq });
    }
    for f in [p, q] {
        if poly_gcd(f, &f.derivative()).degree().unwrap_or(0) > 0 {
            return Err(Error::MultipleRoot);
        }
    }
    if poly_gcd(p, q).degree().unwrap_or(0) > 0 {
        return Err(Error::CommonRoot);
    }
    if dp == 0 {
        return Ok(real_root_certificate(q)?.is_real_rooted);
    }
    let cp = SturmChain::new(p);
    let cq = SturmChain::new(q);
    if cp.total_real_roots() != dp || cq.total_real_roots() != dq {
        return Ok(false);
    }
    let mut tracked = Vec::new();
    for (owner, chain, f) in [(0usize, &cp, p), (1, &cq, q)] {
        for (lo, hi) in isolate_chain(chain, &dyadic_at_least(&cauchy_bound(f))) {
            tracked.push(Tracked {
                lo,
                hi,
                owner,
                mult: 1,
                chain,
            });
        }
    }
    let order: Vec<usize> = separate(tracked).iter().map(|t| t.owner).collect();
    Ok(order.len() == dp + dq && order.iter().enumerate().all(|(i, &o)| o == (i + 1) % 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::{rat, ratio};
    use proptest::prelude::*;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn decompose_q2() {
        let d = symmetric_decompose(&p(&[1, 12, 15, 2]), 3).unwrap();
        assert_eq!(d.a, p(&[1, 11, 11, 1]));
        assert_eq!(d.b, p(&[1, 4, 1]));
    }

    #[test]
    fn decompose_symmetric_input() {
        let d = symmetric_decompose(&p(&[1, 4, 1]), 2).unwrap();
        assert_eq!(d.a, p(&[1, 4, 1]));
        assert!(d.b.is_zero());
    }

    #[test]
    fn decompose_s1() {
        let d = symmetric_decompose(&p(&[1, 3]), 1).unwrap();
        assert_eq!(d.a, p(&[1, 1]));
        assert_eq!(d.b, p(&[2]));
    }

    #[test]
    fn gamma_vectors() {
        let g = gamma_vector(&p(&[1, 4, 1]), 2).unwrap();
        assert_eq!(g.gammas, vec![rat(1), rat(2)]);
        let g = gamma_vector(&p(&[1, 3, 3, 1]), 3).unwrap();
        assert_eq!(g.gammas, vec![rat(1), rat(0)]);
        let g = gamma_vector(&p(&[1, 11, 11, 1]), 3).unwrap();
        assert_eq!(g.gammas, vec![rat(1), rat(8)]);
        assert_eq!(g.expand(), p(&[1, 11, 11, 1]));
        assert_eq!(gamma_vector(&p(&[1, 2]), 1), Err(Error::NotSymmetric(1)));
    }

    #[test]
    fn reports() {
        let r = positivity_report(&p(&[1, 12, 15, 2]), 3).unwrap();
        assert!(r.bi_gamma_positive && r.unimodal && r.alternatingly_increasing);
        assert_eq!(r.gamma_positive, None);
        assert_eq!(r.mode_set, vec![2]);
        let r = positivity_report(&p(&[1, 66, 258, 146, 9]), 4).unwrap();
        assert_eq!(r.mode_set, vec![2]);
        let r = positivity_report(&p(&[1, 1, 0, 1]), 3).unwrap();
        assert!(!r.unimodal);
        assert!(r.implications_hold());
        assert!(matches!(
            positivity_report(&p(&[1, -1]), 1),
            Err(Error::NegativeCoefficient(_))
        ));
        let r = positivity_report(&p(&[1, 4, 1]), 2).unwrap();
        assert_eq!(r.gamma_positive, Some(true));
    }

    #[test]
    fn alternating_order() {
        assert!(is_alternatingly_increasing(&p(&[1, 12, 15, 2]), 3));
        assert!(!is_alternatingly_increasing(&p(&[2, 12, 15, 1]), 3));
        assert!(is_alternatingly_increasing(&p(&[1, 66, 258, 146, 9]), 4));
    }

    #[test]
    fn real_roots_of_p2() {
        let c = real_root_certificate(&p(&[1, 4, 1])).unwrap();
        assert!(c.is_real_rooted);
        assert_eq!(c.isolation.intervals.len(), 2);
        // roots -2 +- sqrt 3
        for iv in &c.isolation.intervals {
            assert!(iv.lo >= rat(-4) && iv.hi <= rat(0));
            assert_eq!(iv.mult, 1);
        }
        let a = &c.isolation.intervals;
        assert!(a[0].hi <= a[1].lo);
        assert!(a[0].lo < ratio(-37, 10) && a[0].hi > ratio(-38, 10));
    }

    #[test]
    fn no_real_roots() {
        let c = real_root_certificate(&p(&[1, 0, 1])).unwrap();
        assert!(!c.is_real_rooted);
        assert!(c.isolation.intervals.is_empty());
    }

    #[test]
    fn s3_has_five_negative_roots() {
        let c = real_root_certificate(&p(&[1, 209, 1884, 2828, 811, 27])).unwrap();
        assert!(c.is_real_rooted);
        assert_eq!(c.isolation.intervals.len(), 5);
        assert!(c.isolation.intervals.iter().all(|iv| iv.hi <= rat(0)));
    }

    #[test]
    fn repeated_roots_carry_multiplicity() {
        // (x+1)^2 (x-2)
        let f = &p(&[1, 2, 1]) * &p(&[-2, 1]);
        let c = real_root_certificate(&f).unwrap();
        assert!(c.is_real_rooted);
        assert_eq!(c.isolation.root_count(), 3);
        assert_eq!(c.isolation.intervals.len(), 2);
        assert_eq!(c.isolation.intervals[0].mult, 2);
        let sf = square_free_decomposition(&f);
        assert_eq!(sf.len(), 2);
    }

    #[test]
    fn exact_root_at_bisection_point() {
        // roots 0 and -1; 0 is a dyadic midpoint
        let c = real_root_certificate(&p(&[0, 1, 1])).unwrap();
        assert!(c.is_real_rooted);
        assert_eq!(c.isolation.intervals.len(), 2);
    }

    #[test]
    fn interlacing() {
        assert!(strictly_interlaces(&p(&[1]), &p(&[1, 2])).unwrap());
        assert!(strictly_interlaces(&p(&[1, 2]), &p(&[1, 4, 1])).unwrap());
        assert_eq!(
            strictly_interlaces(&p(&[1, 2]), &(&p(&[1, 2]) * &p(&[1, 1]))),
            Err(Error::CommonRoot)
        );
        assert_eq!(
            strictly_interlaces(&p(&[1, 2]), &p(&[1, 2, 3, 4])),
            Err(Error::DegreeMismatch { p: 1, q: 3 })
        );
        assert_eq!(
            strictly_interlaces(&p(&[1, 2, 1]), &p(&[1, 0, 0, 5])),
            Err(Error::MultipleRoot)
        );
        // roots of p (-3) outside q's roots (-1, -2): not interlacing
        assert!(!strictly_interlaces(&p(&[3, 1]), &p(&[2, 3, 1])).unwrap());
    }

    #[test]
    fn sturm_counts() {
        let ch = SturmChain::new(&p(&[1, 4, 1]));
        assert_eq!(ch.total_real_roots(), 2);
        assert_eq!(ch.count_in(&rat(-1), &rat(0)), 1);
        assert_eq!(ch.count_in(&rat(-4), &rat(-1)), 1);
        assert_eq!(ch.count_in(&rat(0), &rat(5)), 0);
    }

    fn small_poly() -> impl Strategy<Value = UniPoly> {
        prop::collection::vec(-9i64..=9, 1..7).prop_map(|c| UniPoly::from_ints(&c))
    }

    proptest! {
        #[test]
        fn decomposition_is_unique_and_symmetric(f in small_poly(), extra in 0usize..3) {
            let n = f.degree().unwrap_or(0) + extra;
            let d = symmetric_decompose(&f, n).unwrap();
            prop_assert_eq!(&d.a + &d.b.shift(1), f);
            prop_assert!(is_symmetric(&d.a, n));
            if n > 0 {
                prop_assert!(is_symmetric(&d.b, n - 1));
            }
        }

        #[test]
        fn gamma_reassembly(f in small_poly(), extra in 0usize..3) {
            let n = f.degree().unwrap_or(0) + extra;
            let a = symmetric_decompose(&f, n).unwrap().a;
            prop_assert_eq!(gamma_vector(&a, n).unwrap().expand(), a);
        }

        #[test]
        fn product_of_linear_factors_is_real_rooted(roots in prop::collection::vec(-6i64..=6, 1..5)) {
            let f = roots.iter().fold(UniPoly::one(), |acc, &r| &acc * &p(&[-r, 1]));
            let c = real_root_certificate(&f).unwrap();
            prop_assert!(c.is_real_rooted);
            prop_assert_eq!(c.isolation.root_count(), roots.len());
        }
    }
}
