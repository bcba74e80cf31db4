//! Brute-force generation of (signed) multiset permutations and
//! s-inversion sequences, together with every descent-type statistic.
//!
//! Everything here is deliberately naive: it is the ground truth the
//! recurrences, grammars and differential system are checked against.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactpoly::{rat, UniPoly};
use crate::grammar::FormalPoly;
use crate::Family;

/// The four word families: permutations of `{1,1,...,n,n}` (`C`), of the same
/// multiset plus one `n+1` (`D`), and their signed versions. In `Dpm` the
/// entry `n+1` is always positive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WordFamily {
    C,
    D,
    Cpm,
    Dpm,
}

impl WordFamily {
    pub fn is_signed(self) -> bool {
        matches!(self, WordFamily::Cpm | WordFamily::Dpm)
    }

    fn has_extra(self) -> bool {
        matches!(self, WordFamily::D | WordFamily::Dpm)
    }

    /// Number of words for rank `n`.
    pub fn cardinality(self, n: usize) -> u128 {
        let fact = |m: usize| (1..=m as u128).product::<u128>();
        let c = fact(2 * n) >> n;
        match self {
            WordFamily::C => c,
            WordFamily::D => c * (2 * n as u128 + 1),
            WordFamily::Cpm => fact(2 * n) << n,
            WordFamily::Dpm => (fact(2 * n) << n) * (2 * n as u128 + 1),
        }
    }
}

impl FromStr for WordFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "C" => Ok(WordFamily::C),
            "D" => Ok(WordFamily::D),
            "Cpm" => Ok(WordFamily::Cpm),
            "Dpm" => Ok(WordFamily::Dpm),
            _ => Err(Error::Invalid(format!("unknown word family {s}"))),
        }
    }
}

/// Enumeration limits. Exceeding one is an error unless `unlimited` is set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub unsigned_max_n: usize,
    pub signed_max_n: usize,
    pub max_items: u128,
    pub unlimited: bool,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            unsigned_max_n: 6,
            signed_max_n: 4,
            max_items: 10_000_000,
            unlimited: false,
        }
    }
}

impl Caps {
    pub fn unlimited() -> Self {
        Self {
            unlimited: true,
            ..Self::default()
        }
    }

    fn check_family(&self, family: WordFamily, n: usize) -> Result<()> {
        let cap = if family.is_signed() {
            self.signed_max_n
        } else {
            self.unsigned_max_n
        };
        if !self.unlimited && n > cap {
            return Err(Error::CapExceeded {
                what: format!("{family:?} rank"),
                size: n as u128,
                cap: cap as u128,
            });
        }
        Ok(())
    }

    fn check_items(&self, what: &str, size: u128) -> Result<()> {
        if !self.unlimited && size > self.max_items {
            return Err(Error::CapExceeded {
                what: what.to_string(),
                size,
                cap: self.max_items,
            });
        }
        Ok(())
    }
}

/// A word over `±[n+1]`; a negative entry `-i` stands for `i` barred.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<i32>);

impl Word {
    pub fn stats(&self) -> StatRecord {
        word_stats(&self.0)
    }

    /// Reverses the word and negates every entry.
    pub fn reverse_negate(&self) -> Word {
        Word(self.0.iter().rev().map(|v| -v).collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i32::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        s.split_whitespace()
            .map(|t| {
                t.parse::<i32>()
                    .ok()
                    .filter(|&v| v != 0)
                    .ok_or_else(|| Error::Invalid(format!("bad word entry {t:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

/// All descent-type statistics of one word.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct StatRecord {
    pub des: usize,
    pub asc: usize,
    pub plat: usize,
    /// With a leading 0.
    pub des_b: usize,
    pub asc_b: usize,
    /// With a leading 0 and a trailing 0.
    pub des_star: usize,
    pub asc_star: usize,
    /// With a trailing 0 only.
    pub des_r: usize,
    pub neg: usize,
}

/// Single statistics that can be tallied into a descent polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stat {
    Des,
    Asc,
    Plat,
    DesB,
    AscB,
    DesStar,
    AscStar,
    DesR,
    Neg,
}

impl StatRecord {
    pub fn get(&self, stat: Stat) -> usize {
        match stat {
            Stat::Des => self.des,
            Stat::Asc => self.asc,
            Stat::Plat => self.plat,
            Stat::DesB => self.des_b,
            Stat::AscB => self.asc_b,
            Stat::DesStar => self.des_star,
            Stat::AscStar => self.asc_star,
            Stat::DesR => self.des_r,
            Stat::Neg => self.neg,
        }
    }
}

pub fn word_stats(w: &[i32]) -> StatRecord {
    let mut s = StatRecord::default();
    for pair in w.windows(2) {
        match pair[0].cmp(&pair[1]) {
            std::cmp::Ordering::Greater => s.des += 1,
            std::cmp::Ordering::Less => s.asc += 1,
            std::cmp::Ordering::Equal => s.plat += 1,
        }
    }
    s.neg = w.iter().filter(|&&v| v < 0).count();
    let (first_neg, last_pos) = match (w.first(), w.last()) {
        (Some(&a), Some(&b)) => (usize::from(a < 0), usize::from(b > 0)),
        _ => (0, 0),
    };
    let (first_pos, last_neg) = match (w.first(), w.last()) {
        (Some(&a), Some(&b)) => (usize::from(a > 0), usize::from(b < 0)),
        _ => (0, 0),
    };
    s.des_b = s.des + first_neg;
    s.asc_b = s.asc + first_pos;
    s.des_star = s.des_b + last_pos;
    s.asc_star = s.asc_b + last_neg;
    s.des_r = s.des + last_pos;
    s
}

/// Advances `v` to the next lexicographic permutation; false after the last one.
fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v
        .iter()
        .rposition(|x| *x > v[i])
        .expect("pivot has a successor");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Streams every word of a family exactly once: unsigned words in
/// lexicographic order, each followed by all of its admissible sign patterns.
pub struct FamilyIter {
    base: Vec<i32>,
    signable: Vec<usize>,
    mask: u64,
    signed: bool,
    extra: i32,
    done: bool,
}

impl FamilyIter {
    fn new(family: WordFamily, n: usize) -> Self {
        let mut base: Vec<i32> = (1..=n as i32).flat_map(|i| [i, i]).collect();
        if family.has_extra() {
            base.push(n as i32 + 1);
        }
        let mut it = Self {
            base,
            signable: Vec::new(),
            mask: 0,
            signed: family.is_signed(),
            extra: n as i32 + 1,
            done: false,
        };
        it.reset_signs();
        it
    }

    fn reset_signs(&mut self) {
        self.mask = 0;
        if self.signed {
            self.signable = (0..self.base.len())
                .filter(|&i| self.base[i] != self.extra)
                .collect();
        }
    }
}

impl Iterator for FamilyIter {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.done {
            return None;
        }
        let mut word = self.base.clone();
        for (bit, &pos) in self.signable.iter().enumerate() {
            if self.mask >> bit & 1 == 1 {
                word[pos] = -word[pos];
            }
        }
        self.mask += 1;
        if self.mask >> self.signable.len() != 0 {
            if next_permutation(&mut self.base) {
                self.reset_signs();
            } else {
                self.done = true;
            }
        }
        Some(Word(word))
    }
}

pub fn gen_family(family: WordFamily, n: usize, caps: &Caps) -> Result<FamilyIter> {
    if n == 0 {
        return Err(Error::Invalid("rank must be positive".into()));
    }
    caps.check_family(family, n)?;
    caps.check_items(&format!("{family:?} words"), family.cardinality(n))?;
    Ok(FamilyIter::new(family, n))
}

/// Tallies `value(word)` over the family, skipping words where it is `None`.
pub fn tally<F>(family: WordFamily, n: usize, caps: &Caps, value: F) -> Result<UniPoly>
where
    F: Fn(&Word) -> Option<usize>,
{
    let mut counts: Vec<u64> = Vec::new();
    for w in gen_family(family, n, caps)? {
        if let Some(k) = value(&w) {
            if counts.len() <= k {
                counts.resize(k + 1, 0);
            }
            counts[k] += 1;
        }
    }
    Ok(UniPoly::from_integers(counts.into_iter().map(BigInt::from)))
}

/// Distribution polynomial of one statistic over a family.
pub fn distribution(family: WordFamily, n: usize, stat: Stat, caps: &Caps) -> Result<UniPoly> {
    tally(family, n, caps, |w| Some(w.stats().get(stat)))
}

/// `sum x^des* y^(asc*+plat) q^N` over a family, as a formal polynomial.
pub fn joint_distribution(family: WordFamily, n: usize, caps: &Caps) -> Result<FormalPoly> {
    let mut out = FormalPoly::zero();
    for w in gen_family(family, n, caps)? {
        let s = w.stats();
        let exps = [
            s.des_star as i32,
            (s.asc_star + s.plat) as i32,
            0,
            s.neg as i32,
        ];
        out.add_term(exps, rat(1));
    }
    Ok(out)
}

/// The `s` sequence whose inversion-sequence Eulerian polynomial is the family polynomial.
pub fn s_sequence(family: Family, n: usize) -> Vec<u64> {
    let n = n as u64;
    let mut s = Vec::with_capacity(2 * n as usize + 1);
    for i in 1..=n {
        s.push(2 * i - 1);
        s.push(match family {
            Family::P | Family::Q => i,
            Family::S | Family::T => 4 * i,
        });
    }
    if matches!(family, Family::Q | Family::T) {
        s.push(2 * n + 1);
    }
    s
}

/// An s-inversion sequence: `0 <= e_i < s_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvSeq {
    s: Vec<u64>,
    e: Vec<u64>,
}

impl InvSeq {
    pub fn new(s: Vec<u64>, e: Vec<u64>) -> Result<Self> {
        if s.len() != e.len() || s.iter().zip(&e).any(|(si, ei)| *si == 0 || ei >= si) {
            return Err(Error::Invalid("not an inversion sequence".into()));
        }
        Ok(Self { s, e })
    }

    pub fn ascents(&self) -> usize {
        inv_seq_ascents(&self.s, &self.e)
    }
}

/// Ascents `e_i/s_i < e_{i+1}/s_{i+1}` for `0 <= i < len`, with `e_0 = 0, s_0 = 1`.
fn inv_seq_ascents(s: &[u64], e: &[u64]) -> usize {
    let mut prev = (0u64, 1u64);
    let mut asc = 0;
    for (&si, &ei) in s.iter().zip(e) {
        if prev.0 * si < ei * prev.1 {
            asc += 1;
        }
        prev = (ei, si);
    }
    asc
}

pub fn inv_seq_eulerian(s: &[u64], caps: &Caps) -> Result<UniPoly> {
    if s.contains(&0) {
        return Err(Error::Invalid("s entries must be positive".into()));
    }
    let total = s
        .iter()
        .try_fold(1u128, |acc, &v| acc.checked_mul(v as u128))
        .unwrap_or(u128::MAX);
    caps.check_items("inversion sequences", total)?;
    let mut counts = vec![0u64; s.len() + 1];
    let mut e = vec![0u64; s.len()];
    loop {
        counts[inv_seq_ascents(s, &e)] += 1;
        // odometer, last position fastest
        let mut i = s.len();
        loop {
            if i == 0 {
                return Ok(UniPoly::from_integers(counts.into_iter().map(BigInt::from)));
            }
            i -= 1;
            e[i] += 1;
            if e[i] < s[i] {
                break;
            }
            e[i] = 0;
        }
    }
}

/// Descent polynomial over all permutations of `{1^p1, 2^p2, ...}`.
pub fn multiset_descent_poly(mults: &[usize], caps: &Caps) -> Result<UniPoly> {
    let total: usize = mults.iter().sum();
    let mut size = BigInt::from(1u32);
    let mut placed = 0usize;
    for &p in mults {
        for j in 1..=p {
            placed += 1;
            size = size * placed / j;
        }
    }
    let size = u128::try_from(size).unwrap_or(u128::MAX);
    caps.check_items("multiset permutations", size)?;
    let mut word: Vec<u32> = mults
        .iter()
        .enumerate()
        .flat_map(|(i, &p)| std::iter::repeat_n(i as u32 + 1, p))
        .collect();
    let mut counts = vec![0u64; total.max(1)];
    loop {
        let des = word.windows(2).filter(|p| p[0] > p[1]).count();
        counts[des] += 1;
        if !next_permutation(&mut word) {
            break;
        }
    }
    Ok(UniPoly::from_integers(counts.into_iter().map(BigInt::from)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::Monomial;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn words(family: WordFamily, n: usize) -> Vec<Word> {
        gen_family(family, n, &Caps::default()).unwrap().collect()
    }

    #[test]
    fn signed_extra_family_rank_one() {
        let mut got = words(WordFamily::Dpm, 1);
        got.sort();
        let mut expected: Vec<Word> = [
            "1 1 2", "-1 1 2", "1 -1 2", "-1 -1 2", "1 2 1", "-1 2 1", "1 2 -1", "-1 2 -1",
            "2 1 1", "2 -1 1", "2 1 -1", "2 -1 -1",
        ]
        .iter()
        .map(|s| w(s))
        .collect();
        expected.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn signed_family_rank_one() {
        let mut got = words(WordFamily::Cpm, 1);
        got.sort();
        let mut expected = vec![w("1 1"), w("-1 1"), w("1 -1"), w("-1 -1")];
        expected.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn unsigned_rank_two_has_six_words() {
        let got = words(WordFamily::C, 2);
        assert_eq!(got.len(), 6);
        let mut dedup = got.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), 6);
    }

    #[test]
    fn family_cardinalities() {
        for n in 1..=3 {
            for f in [
                WordFamily::C,
                WordFamily::D,
                WordFamily::Cpm,
                WordFamily::Dpm,
            ] {
                assert_eq!(words(f, n).len() as u128, f.cardinality(n), "{f:?} {n}");
            }
        }
        assert_eq!(WordFamily::Dpm.cardinality(1), 12);
    }

    #[test]
    fn caps_are_enforced() {
        assert!(matches!(
            gen_family(WordFamily::Cpm, 5, &Caps::default()),
            Err(Error::CapExceeded { .. })
        ));
        assert!(gen_family(WordFamily::Cpm, 5, &Caps::unlimited()).is_ok());
        assert!(gen_family(WordFamily::C, 0, &Caps::default()).is_err());
    }

    #[test]
    fn stats_of_small_words() {
        let s = word_stats(&[-1, 1]);
        assert_eq!((s.des_star, s.asc_star, s.plat, s.neg), (2, 1, 0, 1));
        let s = word_stats(&[1, 1]);
        assert_eq!((s.des_star, s.asc_star, s.plat, s.neg), (1, 1, 1, 0));
        let s = word_stats(&[2, -1, 1]);
        assert_eq!((s.des_b, s.asc_b, s.neg), (1, 2, 1));
    }

    #[test]
    fn stat_balance_invariants() {
        for word in words(WordFamily::Dpm, 2) {
            let s = word.stats();
            let len = word.0.len();
            assert_eq!(s.des + s.asc + s.plat, len - 1);
            assert_eq!(s.des_b + s.asc_b + s.plat, len);
            assert_eq!(s.des_star + s.asc_star + s.plat, len + 1);
        }
    }

    #[test]
    fn small_distributions() {
        let caps = Caps::default();
        assert_eq!(
            distribution(WordFamily::Cpm, 1, Stat::DesB, &caps).unwrap(),
            UniPoly::from_ints(&[1, 3])
        );
        assert_eq!(
            distribution(WordFamily::Dpm, 2, Stat::DesB, &caps).unwrap(),
            UniPoly::from_ints(&[1, 66, 258, 146, 9])
        );
    }

    #[test]
    fn joint_rank_one() {
        // xy^2 + q x^2 y + q x y^2 + q^2 x y^2
        let got = joint_distribution(WordFamily::Cpm, 1, &Caps::default()).unwrap();
        let expected = FormalPoly::from_terms([
            Monomial::unit([1, 2, 0, 0]),
            Monomial::unit([2, 1, 0, 1]),
            Monomial::unit([1, 2, 0, 1]),
            Monomial::unit([1, 2, 0, 2]),
        ]);
        assert_eq!(got, expected);
    }

    #[test]
    fn s_sequences() {
        assert_eq!(s_sequence(Family::P, 2), vec![1, 1, 3, 2]);
        assert_eq!(s_sequence(Family::S, 2), vec![1, 4, 3, 8]);
        assert_eq!(s_sequence(Family::T, 1), vec![1, 4, 3]);
        assert_eq!(s_sequence(Family::Q, 1), vec![1, 1, 3]);
    }

    #[test]
    fn inversion_sequence_polys() {
        let caps = Caps::default();
        assert_eq!(
            inv_seq_eulerian(&[1, 1, 3, 2], &caps).unwrap(),
            UniPoly::from_ints(&[1, 4, 1])
        );
        assert_eq!(
            inv_seq_eulerian(&[1, 4], &caps).unwrap(),
            UniPoly::from_ints(&[1, 3])
        );
        assert_eq!(inv_seq_eulerian(&[1], &caps).unwrap(), UniPoly::one());
        let tight = Caps {
            max_items: 5,
            ..Caps::default()
        };
        assert!(inv_seq_eulerian(&[1, 4, 3], &tight).is_err());
        assert_eq!(
            InvSeq::new(vec![1, 4, 3], vec![0, 1, 1]).unwrap().ascents(),
            2
        );
        assert!(InvSeq::new(vec![1, 4], vec![1, 0]).is_err());
    }

    #[test]
    fn multiset_polys() {
        let caps = Caps::default();
        assert_eq!(
            multiset_descent_poly(&[2, 2], &caps).unwrap(),
            UniPoly::from_ints(&[1, 4, 1])
        );
        assert_eq!(
            multiset_descent_poly(&[1, 1], &caps).unwrap(),
            UniPoly::from_ints(&[1, 1])
        );
        assert_eq!(
            multiset_descent_poly(&[2, 2, 1], &caps).unwrap(),
            UniPoly::from_ints(&[1, 12, 15, 2])
        );
    }

    #[test]
    fn word_text_round_trip() {
        let word = w("2 -1 1");
        assert_eq!(word.to_string(), "2 -1 1");
        assert!("1 0".parse::<Word>().is_err());
        assert_eq!(word.reverse_negate(), w("-1 1 -2"));
    }
}
