//! Verification suites: each gathers a family of exact checks into a report.
//! Failures are data, never errors.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::analysis::{
    cauchy_bound, gamma_vector, is_symmetric, modes_in_middle, positivity_report,
    real_root_certificate, strictly_interlaces, symmetric_decompose, SturmChain,
};
use crate::enumeration::{distribution, joint_distribution, tally, Caps, Stat, WordFamily};
use crate::error::{Error, Result};
use crate::exactpoly::{rat, UniPoly};
use crate::grammar::{iterate_pair, FormalPoly, Grammar, GrammarId, Letter, Monomial};
use crate::methods::{family_poly, grammar_iterate, Method};
use crate::recurrences::{
    diff_system, family_table, gamma_expand, qnk_via_r, Assembly, GammaTables,
};
use crate::series::{check_macmahon, check_p_identity, check_q_identity};
use crate::Family;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Cross,
    Gamma,
    Unimodal,
    Roots,
    Interlace,
    Genfun,
    Corollary,
    GrammarLemmas,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Cross,
        Suite::Gamma,
        Suite::Unimodal,
        Suite::Roots,
        Suite::Interlace,
        Suite::Genfun,
        Suite::Corollary,
        Suite::GrammarLemmas,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Cross => "cross",
            Suite::Gamma => "gamma",
            Suite::Unimodal => "unimodal",
            Suite::Roots => "roots",
            Suite::Interlace => "interlace",
            Suite::Genfun => "genfun",
            Suite::Corollary => "corollary",
            Suite::GrammarLemmas => "grammarlemmas",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown suite {s}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub status: Status,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl Check {
    fn new(name: &str, family: Option<Family>, n: Option<usize>) -> Self {
        Self {
            name: name.to_string(),
            family: family.map(|f| f.to_string()),
            n,
            status: Status::Pass,
            detail: String::new(),
        }
    }

    fn judge(mut self, ok: bool, detail: impl Into<String>) -> Self {
        self.status = if ok { Status::Pass } else { Status::Fail };
        if !ok {
            self.detail = detail.into();
        }
        self
    }

    fn settle(self, r: Result<bool>, detail: impl Into<String>) -> Self {
        match r {
            Ok(ok) => self.judge(ok, detail),
            Err(Error::CapExceeded { .. }) => Self {
                status: Status::Skip,
                detail: "enumeration cap".into(),
                ..self
            },
            Err(e) => self.judge(false, e.to_string()),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: Suite,
    pub max_n: usize,
    pub checks: Vec<Check>,
    pub elapsed_ms: u128,
}

impl SuiteReport {
    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn passed(&self) -> bool {
        self.count(Status::Fail) == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema": 1,
            "suite": self.suite.name(),
            "max_n": self.max_n,
            "passed": self.passed(),
            "counts": {
                "total": self.checks.len(),
                "pass": self.count(Status::Pass),
                "fail": self.count(Status::Fail),
                "skip": self.count(Status::Skip),
            },
            "elapsed_ms": self.elapsed_ms as u64,
            "checks": self.checks,
        })
    }
}

pub fn verify_suite(suite: Suite, max_n: usize, caps: &Caps) -> SuiteReport {
    let start = Instant::now();
    let max_n = max_n.max(1);
    let mut checks = match suite {
        Suite::Cross => cross(max_n, caps),
        Suite::Gamma => gamma(max_n),
        Suite::Unimodal => unimodal(max_n),
        Suite::Roots => roots(max_n),
        Suite::Interlace => interlace(max_n),
        Suite::Genfun => genfun(max_n, caps),
        Suite::Corollary => corollary(max_n, caps),
        Suite::GrammarLemmas => grammar_lemmas(max_n, caps),
    };
    checks.sort_by(|a, b| (&a.family, a.n, &a.name).cmp(&(&b.family, b.n, &b.name)));
    SuiteReport {
        suite,
        max_n,
        checks,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

fn grid(max_n: usize) -> Vec<(Family, usize)> {
    Family::ALL
        .into_iter()
        .flat_map(|f| (1..=max_n).map(move |n| (f, n)))
        .collect()
}

/// Largest rank at which enumeration, grammar and inversion sequences join the cross check.
pub fn five_way_max(family: Family) -> usize {
    match family {
        Family::P | Family::Q => 5,
        Family::S | Family::T => 4,
    }
}

fn cross(max_n: usize, caps: &Caps) -> Vec<Check> {
    let reference: Vec<_> = Family::ALL
        .iter()
        .map(|&f| (f, family_table(f, max_n)))
        .collect();
    let sys = diff_system(max_n);
    let gammas = GammaTables::build(max_n);
    grid(max_n)
        .into_par_iter()
        .flat_map_iter(|(family, n)| {
            let rec = reference
                .iter()
                .find(|(f, _)| *f == family)
                .unwrap()
                .1
                .poly(n);
            let mut out = Vec::new();
            for method in [
                Method::Enum,
                Method::DiffSys,
                Method::Grammar,
                Method::InvSeq,
            ] {
                let name = format!("rec=={method}");
                if method != Method::DiffSys && n > five_way_max(family) && !caps.unlimited {
                    out.push(Check {
                        status: Status::Skip,
                        detail: "beyond five-way range".into(),
                        ..Check::new(&name, Some(family), Some(n))
                    });
                    continue;
                }
                let got = match method {
                    Method::DiffSys => sys
                        .as_ref()
                        .map(|s| s.get(family, n).clone())
                        .map_err(Clone::clone),
                    _ => family_poly(family, n, method, caps),
                };
                out.push(
                    Check::new(&name, Some(family), Some(n))
                        .settle(got.map(|g| g == rec), "coefficients differ"),
                );
            }
            let assembled = gammas
                .as_ref()
                .map(|g| g.family(family, n) == rec)
                .map_err(Clone::clone);
            out.push(
                Check::new("rec==gamma", Some(family), Some(n))
                    .settle(assembled, "coefficients differ"),
            );
            out
        })
        .collect()
}

fn gamma(max_n: usize) -> Vec<Check> {
    let tables = match GammaTables::build(max_n) {
        Ok(t) => t,
        Err(e) => {
            return vec![
                Check::new("gamma tables nonnegative", None, None).judge(false, e.to_string())
            ]
        }
    };
    let mut out = vec![Check::new("gamma tables nonnegative", None, None)];
    let (r_tab, q_tab) = qnk_via_r(max_n);
    let p_tab = family_table(Family::P, max_n);
    let s_tab = family_table(Family::S, max_n);
    let t_tab = family_table(Family::T, max_n);
    let x = UniPoly::x();
    for n in 1..=max_n {
        let (p, r, q) = (p_tab.poly(n), r_tab.poly(n), q_tab.poly(n));
        out.push(
            Check::new("R==sum r x^k(1+x)^(2n-1-2k)", None, Some(n)).judge(
                gamma_expand(tables.r.row(n), 2 * n - 1) == r,
                "reassembly differs",
            ),
        );
        out.push(
            Check::new("Q==R+xP", Some(Family::Q), Some(n))
                .judge(q == &r + &(&x * &p), "identity fails"),
        );
        out.push(Check::new("P,R symmetric", None, Some(n)).judge(
            is_symmetric(&p, 2 * n - 2) && is_symmetric(&r, 2 * n - 1),
            "asymmetric row",
        ));
        let pg = gamma_vector(&p, 2 * n - 2).map(|g| g.gammas == int_row(tables.p.row(n)));
        out.push(
            Check::new("gamma(P)==p row", Some(Family::P), Some(n))
                .settle(pg, "gamma vector differs"),
        );
        let rg = gamma_vector(&r, 2 * n - 1).map(|g| g.gammas == int_row(tables.r.row(n)));
        out.push(Check::new("gamma(R)==r row", None, Some(n)).settle(rg, "gamma vector differs"));
        let cases = [
            (Family::Q, q.clone(), 2 * n - 1, r.clone(), p.clone()),
            (
                Family::S,
                s_tab.poly(n),
                2 * n - 1,
                tables.assemble(Assembly::SPlus, n),
                tables.assemble(Assembly::SMinus, n),
            ),
            (
                Family::T,
                t_tab.poly(n),
                2 * n,
                tables.assemble(Assembly::TPlus, n),
                tables.assemble(Assembly::TMinus, n),
            ),
        ];
        for (family, f, center, a, b) in cases {
            let dec = symmetric_decompose(&f, center).map(|d| d.a == a && d.b == b);
            out.push(
                Check::new("decomposition==gamma parts", Some(family), Some(n))
                    .settle(dec, "decomposition differs"),
            );
        }
    }
    out
}

fn int_row(row: &[BigInt]) -> Vec<crate::Rational> {
    row.iter()
        .cloned()
        .map(crate::Rational::from_integer)
        .collect()
}

fn unimodal(max_n: usize) -> Vec<Check> {
    let tables: Vec<_> = Family::ALL
        .iter()
        .map(|&f| (f, family_table(f, max_n)))
        .collect();
    grid(max_n)
        .into_par_iter()
        .map(|(family, n)| {
            let f = tables.iter().find(|(g, _)| *g == family).unwrap().1.poly(n);
            let c = Check::new("unimodal, modes in middle", Some(family), Some(n));
            match positivity_report(&f, family.degree(n)) {
                Ok(r) => c.judge(
                    r.unimodal
                        && r.bi_gamma_positive
                        && r.implications_hold()
                        && modes_in_middle(&f),
                    format!("report {}", r.to_json()),
                ),
                Err(e) => c.judge(false, e.to_string()),
            }
        })
        .collect()
}

fn roots(max_n: usize) -> Vec<Check> {
    let tables: Vec<_> = Family::ALL
        .iter()
        .map(|&f| (f, family_table(f, max_n)))
        .collect();
    grid(max_n)
        .into_par_iter()
        .map(|(family, n)| {
            let f = tables.iter().find(|(g, _)| *g == family).unwrap().1.poly(n);
            let cert = real_root_certificate(&f).map(|c| {
                c.is_real_rooted
                    && c.isolation.root_count() == family.degree(n)
                    && f.eval(&rat(0)) != rat(0)
                    && SturmChain::new(&f).count_in(&-cauchy_bound(&f), &rat(0)) == family.degree(n)
            });
            Check::new("all roots real", Some(family), Some(n))
                .settle(cert, "non-real or positive roots")
        })
        .collect()
}

fn interlace(max_n: usize) -> Vec<Check> {
    let p = family_table(Family::P, max_n + 1);
    let q = family_table(Family::Q, max_n);
    let s = family_table(Family::S, max_n + 1);
    let t = family_table(Family::T, max_n);
    let mut pairs = Vec::new();
    for n in 1..=max_n {
        pairs.push(("P_n<Q_n", Family::P, n, p.poly(n), q.poly(n)));
        pairs.push(("Q_n<P_n+1", Family::Q, n, q.poly(n), p.poly(n + 1)));
        pairs.push(("S_n<T_n", Family::S, n, s.poly(n), t.poly(n)));
        pairs.push(("T_n<S_n+1", Family::T, n, t.poly(n), s.poly(n + 1)));
    }
    pairs
        .into_par_iter()
        .map(|(name, family, n, a, b)| {
            Check::new(name, Some(family), Some(n))
                .settle(strictly_interlaces(&a, &b), "not interlacing")
        })
        .collect()
}

/// Nonincreasing vectors of positive integers with sum at most `max_sum`.
pub fn partitions_up_to(max_sum: usize) -> Vec<Vec<usize>> {
    fn go(remaining: usize, max_part: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        for part in (1..=max_part.min(remaining)).rev() {
            cur.push(part);
            go(remaining - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(max_sum, max_sum, &mut Vec::new(), &mut out);
    out
}

pub const SERIES_ORDER: usize = 30;
pub const MACMAHON_MAX_SUM: usize = 10;

fn genfun(max_n: usize, caps: &Caps) -> Vec<Check> {
    let mut out: Vec<Check> = (1..=max_n)
        .into_par_iter()
        .flat_map_iter(|n| {
            [
                Check::new("P identity", Some(Family::P), Some(n))
                    .judge(check_p_identity(n, SERIES_ORDER), "series differ"),
                Check::new("Q identity", Some(Family::Q), Some(n))
                    .judge(check_q_identity(n, SERIES_ORDER), "series differ"),
            ]
        })
        .collect();
    let shapes = partitions_up_to(MACMAHON_MAX_SUM);
    out.extend(
        shapes
            .into_par_iter()
            .map(|p| {
                Check::new(&format!("MacMahon {p:?}"), None, None)
                    .settle(check_macmahon(&p, SERIES_ORDER, caps), "series differ")
            })
            .collect::<Vec<_>>(),
    );
    out
}

/// Type-B descent distribution split by the sign of the last entry:
/// `(sum_{last>0} x^des_B, sum_{last<0} x^des_B)`.
pub fn sign_split(family: WordFamily, n: usize, caps: &Caps) -> Result<(UniPoly, UniPoly)> {
    let part = |positive: bool| {
        tally(family, n, caps, move |w| {
            ((*w.0.last().unwrap() > 0) == positive).then(|| w.stats().des_b)
        })
    };
    Ok((part(true)?, part(false)?))
}

fn corollary(max_n: usize, caps: &Caps) -> Vec<Check> {
    let gammas = GammaTables::build(max_n).expect("gamma tables");
    let mut out = Vec::new();
    for n in 1..=max_n {
        for (family, wf, plus, minus, center) in [
            (
                Family::S,
                WordFamily::Cpm,
                Assembly::SPlus,
                Assembly::SMinus,
                2 * n - 1,
            ),
            (
                Family::T,
                WordFamily::Dpm,
                Assembly::TPlus,
                Assembly::TMinus,
                2 * n,
            ),
        ] {
            let f = family_table(family, n).poly(n);
            let split = sign_split(wf, n, caps).and_then(|(a, b)| {
                let d = symmetric_decompose(&f, center)?;
                Ok(a == d.a
                    && b == d.b.shift(1)
                    && a == gammas.assemble(plus, n)
                    && d.b == gammas.assemble(minus, n))
            });
            out.push(
                Check::new("last-entry sign split", Some(family), Some(n))
                    .settle(split, "split differs"),
            );
            let star = distribution(wf, n, Stat::DesStar, caps)
                .and_then(|d| Ok(d == f.reverse(center + 1)?));
            out.push(
                Check::new("des* == reversed", Some(family), Some(n))
                    .settle(star, "distribution differs"),
            );
        }
        let revneg = tally(WordFamily::Dpm, n, caps, |w| {
            Some(w.reverse_negate().stats().des_r)
        })
        .and_then(|a| Ok(a == distribution(WordFamily::Dpm, n, Stat::DesB, caps)?));
        out.push(
            Check::new(
                "des_r on reversed negation == des_B",
                Some(Family::T),
                Some(n),
            )
            .settle(revneg, "distribution differs"),
        );
        let comp = distribution(WordFamily::C, n, Stat::Des, caps)
            .and_then(|a| Ok(a == distribution(WordFamily::C, n, Stat::Asc, caps)?));
        out.push(
            Check::new("des ~ asc", Some(Family::P), Some(n)).settle(comp, "distribution differs"),
        );
        let (r_tab, _) = qnk_via_r(n);
        let first = tally(WordFamily::D, n, caps, |w| {
            (w.0[0] != n as i32 + 1).then(|| w.stats().des)
        })
        .and_then(|a| {
            let b = tally(WordFamily::D, n, caps, |w| {
                (w.0[0] == n as i32 + 1).then(|| w.stats().des)
            })?;
            Ok(a == r_tab.poly(n) && b == family_table(Family::P, n).poly(n).shift(1))
        });
        out.push(
            Check::new("first-entry split R, xP", Some(Family::Q), Some(n))
                .settle(first, "split differs"),
        );
    }
    out
}

/// Stirling numbers of the second kind `S(n, k)`, `k = 0..=n`.
fn stirling2_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::from(1)];
    for m in 1..=n {
        let mut next = vec![BigInt::from(0); m + 1];
        for k in 1..=m {
            let carry = row.get(k).cloned().unwrap_or_default() * k;
            next[k] = carry + &row[k - 1];
        }
        row = next;
    }
    row
}

fn grammar_lemmas(max_n: usize, caps: &Caps) -> Vec<Check> {
    let g = Grammar::builtin;
    let (g1, g2) = (g(GrammarId::G1), g(GrammarId::G2));
    let mut out = Vec::new();
    let shift = Monomial::unit([-1, -1, 1, 0]);
    for n in 1..=max_n {
        let joint_c = joint_distribution(WordFamily::Cpm, n, caps)
            .and_then(|j| Ok(j == iterate_pair(&g1, &g2, n, false)?));
        out.push(
            Check::new("joint C^pm == (D2 D1)^n x", Some(Family::S), Some(n))
                .settle(joint_c, "differs"),
        );
        let joint_d = joint_distribution(WordFamily::Dpm, n, caps)
            .and_then(|j| Ok(j.mul_monomial(&shift) == iterate_pair(&g1, &g2, n, true)?));
        out.push(
            Check::new("joint D^pm == D1 (D2 D1)^n x", Some(Family::T), Some(n))
                .settle(joint_d, "differs"),
        );
        for trailing in [false, true] {
            let label = if trailing { "trailing" } else { "plain" };
            let r: Result<bool> = (|| {
                let full = iterate_pair(&g1, &g2, n, trailing)?;
                let at0 = full.specialize(&[(Letter::Q, rat(0))])?;
                let at1 = full.specialize(&[(Letter::Q, rat(1))])?;
                Ok(
                    at0 == iterate_pair(&g(GrammarId::G3), &g(GrammarId::G4), n, trailing)?
                        && at1 == iterate_pair(&g(GrammarId::G5), &g(GrammarId::G6), n, trailing)?,
                )
            })();
            out.push(
                Check::new(
                    &format!("q->0, q->1 specializations ({label})"),
                    None,
                    Some(n),
                )
                .settle(r, "differs"),
            );
        }
        let sum = grammar_iterate(Family::P, n).and_then(|f| {
            let p = f.extract_univariate(&Monomial::letter(Letter::X), Letter::X, &[Letter::Y])?;
            let expected: BigInt = (1..=2 * n as u64).product::<BigInt>() >> n;
            Ok(p.coeff_sum() == crate::Rational::from_integer(expected))
        });
        out.push(
            Check::new("(D4 D3)^n x coefficient sum", Some(Family::P), Some(n))
                .settle(sum, "differs"),
        );
    }
    let stirling = Grammar::stirling();
    let mut cur = FormalPoly::letter(Letter::X);
    for n in 1..=8 {
        let r = stirling.derive(&cur).map(|d| {
            cur = d.clone();
            let expected =
                FormalPoly::from_terms(stirling2_row(n).into_iter().enumerate().map(|(k, s)| {
                    Monomial::new([1, k as i32, 0, 0], crate::Rational::from_integer(s))
                }));
            d == expected
        });
        out.push(Check::new("Stirling grammar", None, Some(n)).settle(r, "differs"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stirling_rows() {
        let r: Vec<i64> = stirling2_row(4)
            .iter()
            .map(|v| i64::try_from(v).unwrap())
            .collect();
        assert_eq!(r, vec![0, 1, 7, 6, 1]);
    }

    #[test]
    fn partition_listing() {
        assert_eq!(partitions_up_to(3).len(), 1 + 2 + 3);
        assert!(partitions_up_to(10).contains(&vec![2, 2, 2, 2, 2]));
        assert!(partitions_up_to(10).contains(&vec![2, 2, 2, 2, 1]));
    }

    #[test]
    fn small_suites_pass() {
        for suite in Suite::ALL {
            let r = verify_suite(suite, 2, &Caps::default());
            assert!(
                r.passed(),
                "{suite}: {:?}",
                r.failures().collect::<Vec<_>>()
            );
        }
    }
}
