//! The five independent constructions of `P_n`, `Q_n`, `S_n`, `T_n`.

use std::fmt;
use std::str::FromStr;

use crate::enumeration::{distribution, inv_seq_eulerian, s_sequence, Caps};
use crate::error::{Error, Result};
use crate::exactpoly::UniPoly;
use crate::grammar::{iterate_pair, FormalPoly, Grammar, GrammarId, Letter, Monomial};
use crate::recurrences::{diff_system, family_table};
use crate::Family;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    /// Brute-force enumeration of words.
    Enum,
    /// Coefficient recurrences.
    Rec,
    /// The coupled differential system.
    DiffSys,
    /// Grammar iterates.
    Grammar,
    /// Ascents of s-inversion sequences.
    InvSeq,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::Enum,
        Method::Rec,
        Method::DiffSys,
        Method::Grammar,
        Method::InvSeq,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Enum => "enum",
            Method::Rec => "rec",
            Method::DiffSys => "diffsys",
            Method::Grammar => "grammar",
            Method::InvSeq => "invseq",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown method {s}")))
    }
}

/// The raw grammar iterate whose coefficients carry the family polynomial.
pub fn grammar_iterate(family: Family, n: usize) -> Result<FormalPoly> {
    let (a, b) = match family {
        Family::P | Family::Q => (GrammarId::G3, GrammarId::G4),
        Family::S | Family::T => (GrammarId::G5, GrammarId::G6),
    };
    iterate_pair(
        &Grammar::builtin(a),
        &Grammar::builtin(b),
        n,
        matches!(family, Family::Q | Family::T),
    )
}

/// Reads the family polynomial off its grammar iterate.
pub fn extract_family(family: Family, f: &FormalPoly) -> Result<UniPoly> {
    match family {
        Family::P => f.extract_univariate(&Monomial::letter(Letter::X), Letter::X, &[Letter::Y]),
        Family::Q => f.extract_univariate(&Monomial::letter(Letter::W), Letter::X, &[Letter::Y]),
        Family::S => f.extract_univariate(&Monomial::letter(Letter::Y), Letter::Y, &[Letter::X]),
        Family::T => f.extract_univariate(&Monomial::letter(Letter::W), Letter::Y, &[Letter::X]),
    }
}

/// The rank-`n` polynomial of `family` built by `method`.
pub fn family_poly(family: Family, n: usize, method: Method, caps: &Caps) -> Result<UniPoly> {
    if n == 0 {
        return Err(Error::Invalid("rank must be positive".into()));
    }
    match method {
        Method::Enum => distribution(family.word_family(), n, family.statistic(), caps),
        Method::Rec => Ok(family_table(family, n).poly(n)),
        Method::DiffSys => Ok(diff_system(n)?.get(family, n).clone()),
        Method::Grammar => extract_family(family, &grammar_iterate(family, n)?),
        Method::InvSeq => inv_seq_eulerian(&s_sequence(family, n), caps),
    }
}
