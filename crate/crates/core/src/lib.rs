//! Descent polynomials of permutations and signed permutations of the
//! multiset `{1,1,2,2,...,n,n}`, built exactly by several independent
//! methods, plus certificates for their structural properties.

use std::fmt;
use std::str::FromStr;

pub mod analysis;
pub mod cli;
pub mod enumeration;
pub mod error;
pub mod exactpoly;
pub mod grammar;
pub mod methods;
pub mod recurrences;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use exactpoly::{Rational, UniPoly};

/// The four polynomial families.
///
/// * `P`: descents over permutations of `{1,1,...,n,n}`
/// * `Q`: descents over permutations of `{1,1,...,n,n,n+1}`
/// * `S`: type-B descents over signed permutations of `{1,1,...,n,n}`
/// * `T`: type-B descents over signed permutations of `{1,1,...,n,n,n+1}` with `n+1` positive
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    P,
    Q,
    S,
    T,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::P, Family::Q, Family::S, Family::T];

    /// Degree of the rank-`n` polynomial (`n >= 1`).
    pub fn degree(self, n: usize) -> usize {
        match self {
            Family::P => 2 * n - 2,
            Family::Q | Family::S => 2 * n - 1,
            Family::T => 2 * n,
        }
    }

    pub fn word_family(self) -> enumeration::WordFamily {
        use enumeration::WordFamily;
        match self {
            Family::P => WordFamily::C,
            Family::Q => WordFamily::D,
            Family::S => WordFamily::Cpm,
            Family::T => WordFamily::Dpm,
        }
    }

    /// The statistic whose distribution defines the family.
    pub fn statistic(self) -> enumeration::Stat {
        match self {
            Family::P | Family::Q => enumeration::Stat::Des,
            Family::S | Family::T => enumeration::Stat::DesB,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "P" | "p" => Ok(Family::P),
            "Q" | "q" => Ok(Family::Q),
            "S" | "s" => Ok(Family::S),
            "T" | "t" => Ok(Family::T),
            _ => Err(Error::Invalid(format!("unknown family {s}"))),
        }
    }
}
