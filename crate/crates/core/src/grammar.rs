//! Context-free grammar calculus over the commutative alphabet `{x, y, w, q}`.
//!
//! A [`Grammar`] assigns every letter a substitution rule; its formal
//! derivative is the derivation that sends each letter to its rule and obeys
//! the Leibniz rule. Formal polynomials are Laurent in every letter so that
//! rules such as `x -> x^2 y^2 / (2w)` are ordinary terms with a `w^-1`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactpoly::{rat, ratio, Rational, UniPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    X,
    Y,
    W,
    Q,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::X, Letter::Y, Letter::W, Letter::Q];

    pub fn symbol(self) -> char {
        match self {
            Letter::X => 'x',
            Letter::Y => 'y',
            Letter::W => 'w',
            Letter::Q => 'q',
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

/// Exponent vector indexed in the fixed letter order `(x, y, w, q)`.
pub type Exponents = [i32; 4];

/// A single term `coeff * x^a y^b w^c q^d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub exps: Exponents,
    pub coeff: Rational,
}

impl Monomial {
    pub fn new(exps: Exponents, coeff: Rational) -> Self {
        Self { exps, coeff }
    }

    /// A monomial with coefficient one.
    pub fn unit(exps: Exponents) -> Self {
        Self::new(exps, Rational::one())
    }

    pub fn letter(l: Letter) -> Self {
        let mut exps = [0; 4];
        exps[l.index()] = 1;
        Self::unit(exps)
    }

    pub fn exponent(&self, l: Letter) -> i32 {
        self.exps[l.index()]
    }
}

/// Normalized sum of monomials; the map key order is lexicographic over `(x, y, w, q)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FormalPoly {
    terms: BTreeMap<Exponents, Rational>,
}

impl FormalPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_monomial(Monomial::new([0; 4], c))
    }

    pub fn letter(l: Letter) -> Self {
        Self::from_monomial(Monomial::letter(l))
    }

    pub fn from_monomial(m: Monomial) -> Self {
        let mut p = Self::zero();
        p.add_term(m.exps, m.coeff);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = Monomial>>(terms: I) -> Self {
        let mut p = Self::zero();
        for m in terms {
            p.add_term(m.exps, m.coeff);
        }
        p
    }

    pub fn add_term(&mut self, exps: Exponents, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exps).or_insert_with(Rational::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &Exponents) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.terms.iter().map(|(e, c)| Monomial::new(*e, c.clone()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(self.terms().map(|m| Monomial::new(m.exps, m.coeff * c)))
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Self::from_terms(self.terms().map(|t| {
            let mut exps = t.exps;
            for (e, d) in exps.iter_mut().zip(m.exps) {
                *e += d;
            }
            Monomial::new(exps, t.coeff * &m.coeff)
        }))
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::constant(Rational::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Letters occurring with a nonzero exponent in some term.
    pub fn letters(&self) -> Vec<Letter> {
        Letter::ALL
            .into_iter()
            .filter(|l| self.terms.keys().any(|e| e[l.index()] != 0))
            .collect()
    }

    /// Substitutes constants for letters and renormalizes.
    pub fn specialize(&self, bindings: &[(Letter, Rational)]) -> Result<Self> {
        let mut out = Self::zero();
        for mut m in self.terms() {
            for (l, v) in bindings {
                let e = m.exps[l.index()];
                if e < 0 && v.is_zero() {
                    return Err(Error::DivisionByZero(l.symbol()));
                }
                if e != 0 {
                    let p = num_traits::pow::pow(v.clone(), e.unsigned_abs() as usize);
                    m.coeff *= if e < 0 { p.recip() } else { p };
                }
                m.exps[l.index()] = 0;
            }
            out.add_term(m.exps, m.coeff);
        }
        Ok(out)
    }

    /// Divides by `divisor`, sets the letters in `set_one` to 1 and reads the
    /// result as a polynomial in `collect` with nonnegative integer coefficients.
    pub fn extract_univariate(
        &self,
        divisor: &Monomial,
        collect: Letter,
        set_one: &[Letter],
    ) -> Result<UniPoly> {
        let mut coeffs: Vec<Rational> = Vec::new();
        for m in self.terms() {
            let mut exps = m.exps;
            for (e, d) in exps.iter_mut().zip(divisor.exps) {
                *e -= d;
                if *e < 0 {
                    return Err(Error::NotDivisible);
                }
            }
            for l in set_one {
                exps[l.index()] = 0;
            }
            if Letter::ALL
                .iter()
                .any(|&l| l != collect && exps[l.index()] != 0)
            {
                return Err(Error::ResidualLetters);
            }
            let k = exps[collect.index()] as usize;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, Rational::zero());
            }
            coeffs[k] += m.coeff / &divisor.coeff;
        }
        for c in &coeffs {
            if !c.is_integer() {
                return Err(Error::NonIntegral(c.to_string()));
            }
            if c.is_negative() {
                return Err(Error::NegativeCoefficient(c.to_string()));
            }
        }
        Ok(UniPoly::from_coeffs(coeffs))
    }

    /// Sorted list of `{"coeff": "p/q", "exps": {...}}` records.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(exps, c)| {
                    let mut e = serde_json::Map::new();
                    for l in Letter::ALL {
                        if exps[l.index()] != 0 {
                            e.insert(l.symbol().to_string(), json!(exps[l.index()]));
                        }
                    }
                    json!({
                        "coeff": format!("{}/{}", c.numer(), c.denom()),
                        "exps": e,
                    })
                })
                .collect(),
        )
    }
}

impl Add for &FormalPoly {
    type Output = FormalPoly;
    fn add(self, rhs: &FormalPoly) -> FormalPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &FormalPoly {
    type Output = FormalPoly;
    fn sub(self, rhs: &FormalPoly) -> FormalPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Mul for &FormalPoly {
    type Output = FormalPoly;
    fn mul(self, rhs: &FormalPoly) -> FormalPoly {
        let mut out = FormalPoly::zero();
        for m in rhs.terms() {
            for t in self.mul_monomial(&m).terms() {
                out.add_term(t.exps, t.coeff);
            }
        }
        out
    }
}

impl fmt::Display for FormalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (exps, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let mut factors = Vec::new();
            if !c.is_one() || exps.iter().all(|&e| e == 0) {
                factors.push(format!("({c})"));
            }
            for l in Letter::ALL {
                match exps[l.index()] {
                    0 => {}
                    1 => factors.push(l.symbol().to_string()),
                    e => factors.push(format!("{}^{}", l.symbol(), e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

/// A set of substitution rules, one per letter.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Grammar {
    rules: BTreeMap<Letter, FormalPoly>,
}

/// The six built-in labeling grammars.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrammarId {
    G1,
    G2,
    G3,
    G4,
    G5,
    G6,
}

impl FromStr for GrammarId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "G1" => Ok(GrammarId::G1),
            "G2" => Ok(GrammarId::G2),
            "G3" => Ok(GrammarId::G3),
            "G4" => Ok(GrammarId::G4),
            "G5" => Ok(GrammarId::G5),
            "G6" => Ok(GrammarId::G6),
            _ => Err(Error::UnknownGrammar(s.to_string())),
        }
    }
}

fn term(c: Rational, x: i32, y: i32, w: i32, q: i32) -> Monomial {
    Monomial::new([x, y, w, q], c)
}

impl Grammar {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_rule(mut self, l: Letter, rhs: FormalPoly) -> Self {
        self.rules.insert(l, rhs);
        self
    }

    pub fn rule(&self, l: Letter) -> Option<&FormalPoly> {
        self.rules.get(&l)
    }

    /// `{x -> xy, y -> y}`, whose iterates on `x` generate Stirling numbers of the second kind.
    pub fn stirling() -> Self {
        Self::new()
            .with_rule(
                Letter::X,
                FormalPoly::from_monomial(term(rat(1), 1, 1, 0, 0)),
            )
            .with_rule(Letter::Y, FormalPoly::letter(Letter::Y))
    }

    pub fn builtin(id: GrammarId) -> Self {
        let w = FormalPoly::letter(Letter::W);
        // q is a passive marker in every grammar
        let base = Self::new().with_rule(Letter::Q, FormalPoly::zero());
        match id {
            GrammarId::G1 | GrammarId::G3 | GrammarId::G5 => {
                base.with_rule(Letter::X, w.clone()).with_rule(Letter::Y, w)
            }
            GrammarId::G2 => {
                // (1+q)^2 x^2 y^2 / (2w)
                let xy = FormalPoly::from_terms([
                    term(ratio(1, 2), 2, 2, -1, 0),
                    term(rat(1), 2, 2, -1, 1),
                    term(ratio(1, 2), 2, 2, -1, 2),
                ]);
                // xy(q(x+y) + (1+q^2)y)
                let wr = FormalPoly::from_terms([
                    term(rat(1), 2, 1, 0, 1),
                    term(rat(1), 1, 2, 0, 1),
                    term(rat(1), 1, 2, 0, 0),
                    term(rat(1), 1, 2, 0, 2),
                ]);
                base.with_rule(Letter::X, xy.clone())
                    .with_rule(Letter::Y, xy)
                    .with_rule(Letter::W, wr)
            }
            GrammarId::G4 => {
                let xy = FormalPoly::from_monomial(term(ratio(1, 2), 2, 2, -1, 0));
                base.with_rule(Letter::X, xy.clone())
                    .with_rule(Letter::Y, xy)
                    .with_rule(
                        Letter::W,
                        FormalPoly::from_monomial(term(rat(1), 1, 2, 0, 0)),
                    )
            }
            GrammarId::G6 => {
                let xy = FormalPoly::from_monomial(term(rat(2), 2, 2, -1, 0));
                let wr =
                    FormalPoly::from_terms([term(rat(1), 2, 1, 0, 0), term(rat(3), 1, 2, 0, 0)]);
                base.with_rule(Letter::X, xy.clone())
                    .with_rule(Letter::Y, xy)
                    .with_rule(Letter::W, wr)
            }
        }
    }

    /// The formal derivative `D_G(f)`.
    pub fn derive(&self, f: &FormalPoly) -> Result<FormalPoly> {
        let mut out = FormalPoly::zero();
        for m in f.terms() {
            for l in Letter::ALL {
                let e = m.exponent(l);
                if e == 0 {
                    continue;
                }
                let rule = self.rule(l).ok_or(Error::MissingRule(l.symbol()))?;
                if rule.is_zero() {
                    continue;
                }
                let mut exps = m.exps;
                exps[l.index()] -= 1;
                let factor = Monomial::new(exps, &m.coeff * rat(e as i64));
                out = &out + &rule.mul_monomial(&factor);
            }
        }
        Ok(out)
    }

    pub fn derive_n(&self, f: &FormalPoly, n: usize) -> Result<FormalPoly> {
        let mut cur = f.clone();
        for _ in 0..n {
            cur = self.derive(&cur)?;
        }
        Ok(cur)
    }
}

/// Starting from `x`, applies `D_a` then `D_b` for `rounds` rounds, then
/// `D_a` once more when `trailing_a` is set.
pub fn iterate_pair(
    ga: &Grammar,
    gb: &Grammar,
    rounds: usize,
    trailing_a: bool,
) -> Result<FormalPoly> {
    if rounds == 0 {
        return Err(Error::Invalid(
            "iterate_pair needs at least one round".into(),
        ));
    }
    let mut cur = FormalPoly::letter(Letter::X);
    for _ in 0..rounds {
        cur = gb.derive(&ga.derive(&cur)?)?;
    }
    if trailing_a {
        cur = ga.derive(&cur)?;
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t(c: i64, x: i32, y: i32, w: i32, q: i32) -> Monomial {
        term(rat(c), x, y, w, q)
    }

    fn fp(ts: &[Monomial]) -> FormalPoly {
        FormalPoly::from_terms(ts.iter().cloned())
    }

    fn g(id: GrammarId) -> Grammar {
        Grammar::builtin(id)
    }

    #[test]
    fn builtin_rules() {
        assert_eq!(
            g(GrammarId::G4).rule(Letter::W).unwrap(),
            &fp(&[t(1, 1, 2, 0, 0)])
        );
        assert_eq!(
            g(GrammarId::G6).rule(Letter::W).unwrap(),
            &fp(&[t(1, 2, 1, 0, 0), t(3, 1, 2, 0, 0)])
        );
        let at_zero = g(GrammarId::G2)
            .rule(Letter::X)
            .unwrap()
            .specialize(&[(Letter::Q, rat(0))])
            .unwrap();
        assert_eq!(&at_zero, g(GrammarId::G4).rule(Letter::X).unwrap());
        assert!("G7".parse::<GrammarId>().is_err());
    }

    #[test]
    fn stirling_second_iterate() {
        let d2 = Grammar::stirling()
            .derive_n(&FormalPoly::letter(Letter::X), 2)
            .unwrap();
        assert_eq!(d2, fp(&[t(1, 1, 1, 0, 0), t(1, 1, 2, 0, 0)]));
    }

    #[test]
    fn g3_then_g4_on_x() {
        let d = g(GrammarId::G4)
            .derive(
                &g(GrammarId::G3)
                    .derive(&FormalPoly::letter(Letter::X))
                    .unwrap(),
            )
            .unwrap();
        assert_eq!(d, fp(&[t(1, 1, 2, 0, 0)]));
    }

    #[test]
    fn g5_g6_g5_on_x() {
        let d = iterate_pair(&g(GrammarId::G5), &g(GrammarId::G6), 1, true).unwrap();
        // w(x^2 + 8xy + 3y^2)
        assert_eq!(
            d,
            fp(&[t(1, 2, 0, 1, 0), t(8, 1, 1, 1, 0), t(3, 0, 2, 1, 0)])
        );
    }

    #[test]
    fn signed_grammar_first_round() {
        let d = iterate_pair(&g(GrammarId::G1), &g(GrammarId::G2), 1, false).unwrap();
        // xy(q(x+y) + (1+q^2)y)
        let expected = fp(&[
            t(1, 2, 1, 0, 1),
            t(1, 1, 2, 0, 1),
            t(1, 1, 2, 0, 0),
            t(1, 1, 2, 0, 2),
        ]);
        assert_eq!(d, expected);
    }

    #[test]
    fn signed_grammar_first_round_trailing() {
        let d = iterate_pair(&g(GrammarId::G1), &g(GrammarId::G2), 1, true).unwrap();
        // w(q(x+y)^2 + (1+q)^2 xy + y(1+q^2)(x+y)), built independently
        let x = FormalPoly::letter(Letter::X);
        let y = FormalPoly::letter(Letter::Y);
        let q = FormalPoly::letter(Letter::Q);
        let w = FormalPoly::letter(Letter::W);
        let one = FormalPoly::constant(rat(1));
        let s = &x + &y;
        let inner = &(&(&q * &s.pow(2)) + &(&(&one + &q).pow(2) * &(&x * &y)))
            + &(&(&y * &(&one + &q.pow(2))) * &s);
        assert_eq!(d, &w * &inner);
    }

    #[test]
    fn g5_g6_first_round() {
        let d = iterate_pair(&g(GrammarId::G5), &g(GrammarId::G6), 1, false).unwrap();
        assert_eq!(d, fp(&[t(1, 2, 1, 0, 0), t(3, 1, 2, 0, 0)]));
    }

    #[test]
    fn missing_rule_is_reported() {
        let f = FormalPoly::letter(Letter::W);
        assert_eq!(g(GrammarId::G1).derive(&f), Err(Error::MissingRule('w')));
    }

    #[test]
    fn specialization() {
        let d = iterate_pair(&g(GrammarId::G1), &g(GrammarId::G2), 1, false).unwrap();
        assert_eq!(
            d.specialize(&[(Letter::Q, rat(0))]).unwrap(),
            fp(&[t(1, 1, 2, 0, 0)])
        );
        assert_eq!(
            d.specialize(&[(Letter::Q, rat(1))]).unwrap(),
            fp(&[t(1, 2, 1, 0, 0), t(3, 1, 2, 0, 0)])
        );
        let m = fp(&[t(1, 2, 1, 0, 0)]);
        assert_eq!(
            m.specialize(&[(Letter::X, rat(1)), (Letter::Y, rat(1))])
                .unwrap(),
            FormalPoly::constant(rat(1))
        );
        let inv = fp(&[t(1, 0, 0, -1, 0)]);
        assert_eq!(
            inv.specialize(&[(Letter::W, rat(0))]),
            Err(Error::DivisionByZero('w'))
        );
        assert_eq!(
            inv.specialize(&[(Letter::W, rat(2))]).unwrap(),
            FormalPoly::constant(ratio(1, 2))
        );
    }

    #[test]
    fn extraction() {
        let (g3, g4) = (g(GrammarId::G3), g(GrammarId::G4));
        let p2 = iterate_pair(&g3, &g4, 2, false)
            .unwrap()
            .extract_univariate(&Monomial::letter(Letter::X), Letter::X, &[Letter::Y])
            .unwrap();
        assert_eq!(p2, UniPoly::from_ints(&[1, 4, 1]));
        let q1 = iterate_pair(&g3, &g4, 1, true)
            .unwrap()
            .extract_univariate(&Monomial::letter(Letter::W), Letter::X, &[Letter::Y])
            .unwrap();
        assert_eq!(q1, UniPoly::from_ints(&[1, 2]));
        let unit = fp(&[t(1, 1, 2, 0, 0)])
            .extract_univariate(&Monomial::unit([1, 2, 0, 0]), Letter::X, &[])
            .unwrap();
        assert_eq!(unit, UniPoly::one());
    }

    #[test]
    fn extraction_errors() {
        let f = fp(&[t(1, 1, 2, 0, 0)]);
        assert_eq!(
            f.extract_univariate(&Monomial::letter(Letter::W), Letter::X, &[Letter::Y]),
            Err(Error::NotDivisible)
        );
        assert_eq!(
            f.extract_univariate(&Monomial::letter(Letter::X), Letter::X, &[]),
            Err(Error::ResidualLetters)
        );
        let half = FormalPoly::from_monomial(term(ratio(1, 2), 1, 0, 0, 0));
        assert!(matches!(
            half.extract_univariate(&Monomial::unit([0; 4]), Letter::X, &[]),
            Err(Error::NonIntegral(_))
        ));
    }

    #[test]
    fn json_dump_is_sorted() {
        let f = fp(&[t(3, 1, 2, 0, 0), t(1, 2, 1, -1, 0)]);
        let v = f.to_json();
        assert_eq!(v[0]["coeff"], "3/1");
        assert_eq!(v[0]["exps"]["y"], 2);
        assert_eq!(v[1]["exps"]["w"], -1);
    }

    fn small_formal() -> impl Strategy<Value = FormalPoly> {
        prop::collection::vec(
            ((-5i64..=5), (0i32..3), (0i32..3), (-1i32..2), (0i32..2)),
            0..5,
        )
        .prop_map(|ts| {
            FormalPoly::from_terms(ts.into_iter().map(|(c, x, y, w, q)| t(c, x, y, w, q)))
        })
    }

    proptest! {
        #[test]
        fn derivation_is_linear(f in small_formal(), h in small_formal()) {
            let gr = g(GrammarId::G2);
            prop_assert_eq!(
                gr.derive(&(&f + &h)).unwrap(),
                &gr.derive(&f).unwrap() + &gr.derive(&h).unwrap()
            );
        }

        #[test]
        fn derivation_obeys_leibniz(f in small_formal(), h in small_formal()) {
            let gr = g(GrammarId::G6);
            let lhs = gr.derive(&(&f * &h)).unwrap();
            let rhs = &(&gr.derive(&f).unwrap() * &h) + &(&f * &gr.derive(&h).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }
}
