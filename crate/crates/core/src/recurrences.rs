//! Coefficient triangles, the polynomial differential system, and the gamma
//! tables `p`, `r`, `eta+`, `eta-`.
//!
//! Every table reads out-of-range indices as zero, so each recurrence is
//! written once without boundary cases.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactpoly::{binomial_row, rat, ratio, UniPoly};
use crate::Family;

fn binom2(m: i64) -> i64 {
    if m < 2 {
        0
    } else {
        m * (m - 1) / 2
    }
}

/// Which triangle a [`TriTable`] holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableKind {
    P,
    Q,
    S,
    T,
    R,
}

/// Rows `n = 1..=n_max` of a coefficient triangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriTable {
    pub kind: TableKind,
    rows: Vec<Vec<BigInt>>,
}

impl TriTable {
    pub fn n_max(&self) -> usize {
        self.rows.len()
    }

    /// Row `n` (1-based).
    pub fn row(&self, n: usize) -> &[BigInt] {
        &self.rows[n - 1]
    }

    pub fn get(&self, n: usize, k: i64) -> BigInt {
        if n == 0 || k < 0 {
            return BigInt::zero();
        }
        self.rows
            .get(n - 1)
            .and_then(|r| r.get(k as usize))
            .cloned()
            .unwrap_or_default()
    }

    pub fn poly(&self, n: usize) -> UniPoly {
        UniPoly::from_integers(self.row(n).iter().cloned())
    }

    pub fn rows(&self) -> impl Iterator<Item = (usize, &[BigInt])> {
        self.rows
            .iter()
            .enumerate()
            .map(|(i, r)| (i + 1, r.as_slice()))
    }
}

/// `P_{n+1,k} = C(k+2,2) P_{n,k} + (k+1)(2n-k+1) P_{n,k-1} + C(2n-k+2,2) P_{n,k-2}`.
pub fn pnk_rows(n_max: usize) -> TriTable {
    let mut t = TriTable {
        kind: TableKind::P,
        rows: vec![vec![BigInt::from(1)]],
    };
    for n in 1..n_max {
        let ni = n as i64;
        let row = (0..=2 * ni)
            .map(|k| {
                t.get(n, k) * binom2(k + 2)
                    + t.get(n, k - 1) * ((k + 1) * (2 * ni - k + 1))
                    + t.get(n, k - 2) * binom2(2 * ni - k + 2)
            })
            .collect();
        t.rows.push(row);
    }
    t.rows.truncate(n_max.max(1));
    t
}

/// `R_{n,k} = (k+1) P_{n,k} + (2n-k) P_{n,k-1}` and `Q_{n,k} = R_{n,k} + P_{n,k-1}`.
pub fn qnk_via_r(n_max: usize) -> (TriTable, TriTable) {
    let p = pnk_rows(n_max);
    let mut r = TriTable {
        kind: TableKind::R,
        rows: Vec::new(),
    };
    let mut q = TriTable {
        kind: TableKind::Q,
        rows: Vec::new(),
    };
    for n in 1..=p.n_max() {
        let ni = n as i64;
        let r_row: Vec<BigInt> = (0..2 * ni)
            .map(|k| p.get(n, k) * (k + 1) + p.get(n, k - 1) * (2 * ni - k))
            .collect();
        let q_row = r_row
            .iter()
            .enumerate()
            .map(|(k, v)| v + p.get(n, k as i64 - 1))
            .collect();
        r.rows.push(r_row);
        q.rows.push(q_row);
    }
    (r, q)
}

/// `S_{n+1,i} = C(2i+2,2) S_{n,i} + (2i(4n-2i+3)+2n+1) S_{n,i-1} + C(4n-2i+5,2) S_{n,i-2}`.
pub fn snk_rows(n_max: usize) -> TriTable {
    let mut t = TriTable {
        kind: TableKind::S,
        rows: vec![vec![BigInt::from(1), BigInt::from(3)]],
    };
    for n in 1..n_max {
        let ni = n as i64;
        let row = (0..=2 * ni + 1)
            .map(|i| {
                t.get(n, i) * binom2(2 * i + 2)
                    + t.get(n, i - 1) * (2 * i * (4 * ni - 2 * i + 3) + 2 * ni + 1)
                    + t.get(n, i - 2) * binom2(4 * ni - 2 * i + 5)
            })
            .collect();
        t.rows.push(row);
    }
    t.rows.truncate(n_max.max(1));
    t
}

/// `T_{n,k} = (k+1) S_{n,k} + (2n-k+1) S_{n,k-1}`.
pub fn tnk_from_s(s: &TriTable) -> TriTable {
    let rows = (1..=s.n_max())
        .map(|n| {
            let ni = n as i64;
            (0..=2 * ni)
                .map(|k| s.get(n, k) * (k + 1) + s.get(n, k - 1) * (2 * ni - k + 1))
                .collect()
        })
        .collect();
    TriTable {
        kind: TableKind::T,
        rows,
    }
}

/// Coefficient rows of a family by recurrence, `n = 1..=n_max`.
pub fn family_table(family: Family, n_max: usize) -> TriTable {
    match family {
        Family::P => pnk_rows(n_max),
        Family::Q => qnk_via_r(n_max).1,
        Family::S => snk_rows(n_max),
        Family::T => tnk_from_s(&snk_rows(n_max)),
    }
}

/// Solutions of the coupled differential system, indexed from 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffSystem {
    pub p: Vec<UniPoly>,
    pub q: Vec<UniPoly>,
    pub s: Vec<UniPoly>,
    pub t: Vec<UniPoly>,
}

impl DiffSystem {
    pub fn get(&self, family: Family, n: usize) -> &UniPoly {
        match family {
            Family::P => &self.p[n],
            Family::Q => &self.q[n],
            Family::S => &self.s[n],
            Family::T => &self.t[n],
        }
    }
}

fn checked_integral(f: UniPoly) -> Result<UniPoly> {
    f.to_integers()?;
    Ok(f)
}

/// Runs
///
/// ```text
/// Q_n     = (1 + 2n x) P_n + x(1-x) P_n'
/// P_{n+1} = (1 + n x) Q_n + 1/2 x(1-x) Q_n'
/// T_n     = (1 + 2n x) S_n + x(1-x) S_n'
/// S_{n+1} = (1 + 3x + 4n x) T_n + 2x(1-x) T_n'
/// ```
///
/// from `P_0 = Q_0 = S_0 = T_0 = 1`, producing `P_0..P_{n_max+1}`,
/// `Q_0..Q_{n_max}` and likewise for `S`, `T`. Every step is checked to be integral.
pub fn diff_system(n_max: usize) -> Result<DiffSystem> {
    let x1mx = UniPoly::from_ints(&[0, 1, -1]);
    let mut sys = DiffSystem {
        p: vec![UniPoly::one()],
        q: Vec::new(),
        s: vec![UniPoly::one()],
        t: Vec::new(),
    };
    for n in 0..=n_max as i64 {
        let p = sys.p.last().unwrap();
        let q = &(&UniPoly::from_ints(&[1, 2 * n]) * p) + &(&x1mx * &p.derivative());
        let p_next =
            &(&UniPoly::from_ints(&[1, n]) * &q) + &(&x1mx * &q.derivative()).scale(&ratio(1, 2));
        let s = sys.s.last().unwrap();
        let t = &(&UniPoly::from_ints(&[1, 2 * n]) * s) + &(&x1mx * &s.derivative());
        let s_next = &(&UniPoly::from_ints(&[1, 3 + 4 * n]) * &t)
            + &(&x1mx * &t.derivative()).scale(&rat(2));
        sys.q.push(checked_integral(q)?);
        sys.p.push(checked_integral(p_next)?);
        sys.t.push(checked_integral(t)?);
        sys.s.push(checked_integral(s_next)?);
    }
    Ok(sys)
}

/// Which gamma table a [`GammaTable`] holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GammaKind {
    P,
    R,
    EtaPlus,
    EtaMinus,
}

impl GammaKind {
    pub fn name(self) -> &'static str {
        match self {
            GammaKind::P => "p",
            GammaKind::R => "r",
            GammaKind::EtaPlus => "eta_plus",
            GammaKind::EtaMinus => "eta_minus",
        }
    }
}

/// Gamma coefficients. Rows are 1-based: `n` for `p`/`r`, the combined index
/// `m` for the eta tables (`m = 2n` is the `S_n` level, `m = 2n+1` the `T_n` level).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaTable {
    pub kind: GammaKind,
    rows: Vec<Vec<BigInt>>,
}

impl GammaTable {
    pub fn n_max(&self) -> usize {
        self.rows.len()
    }

    pub fn row(&self, n: usize) -> &[BigInt] {
        &self.rows[n - 1]
    }

    pub fn get(&self, n: usize, k: i64) -> BigInt {
        if n == 0 || k < 0 {
            return BigInt::zero();
        }
        self.rows
            .get(n - 1)
            .and_then(|r| r.get(k as usize))
            .cloned()
            .unwrap_or_default()
    }

    pub fn rows(&self) -> impl Iterator<Item = (usize, &[BigInt])> {
        self.rows
            .iter()
            .enumerate()
            .map(|(i, r)| (i + 1, r.as_slice()))
    }

    fn push_checked(&mut self, row: Vec<BigInt>) -> Result<()> {
        if let Some((k, v)) = row.iter().enumerate().find(|(_, v)| v.is_negative()) {
            return Err(Error::NegativeEntry {
                table: self.kind.name(),
                row: self.rows.len() + 1,
                k,
                value: v.to_string(),
            });
        }
        self.rows.push(row);
        Ok(())
    }
}

/// `p_{n+1,k} = C(k+2,2) p_{n,k} + (k+1)(4n-4k+1) p_{n,k-1} + 4 C(2n-2k+2,2) p_{n,k-2}`.
pub fn gamma_p_rows(n_max: usize) -> Result<GammaTable> {
    let mut t = GammaTable {
        kind: GammaKind::P,
        rows: Vec::new(),
    };
    t.push_checked(vec![BigInt::from(1)])?;
    for n in 1..n_max {
        let ni = n as i64;
        let row = (0..=ni)
            .map(|k| {
                t.get(n, k) * binom2(k + 2)
                    + t.get(n, k - 1) * ((k + 1) * (4 * ni - 4 * k + 1))
                    + t.get(n, k - 2) * (4 * binom2(2 * ni - 2 * k + 2))
            })
            .collect();
        t.push_checked(row)?;
    }
    Ok(t)
}

/// `r_{n,k} = (k+1) p_{n,k} + 4(n-k) p_{n,k-1}`.
pub fn gamma_r_from_p(p: &GammaTable) -> Result<GammaTable> {
    let mut t = GammaTable {
        kind: GammaKind::R,
        rows: Vec::new(),
    };
    for n in 1..=p.n_max() {
        let ni = n as i64;
        let row = (0..ni)
            .map(|k| p.get(n, k) * (k + 1) + p.get(n, k - 1) * (4 * (ni - k)))
            .collect();
        t.push_checked(row)?;
    }
    Ok(t)
}

/// Both eta tables for `m = 1..=m_max`, via the alternating odd and even steps.
pub fn eta_rows(m_max: usize) -> Result<(GammaTable, GammaTable)> {
    if m_max < 2 {
        return Err(Error::Invalid("eta tables need m_max >= 2".into()));
    }
    let mut plus = GammaTable {
        kind: GammaKind::EtaPlus,
        rows: Vec::new(),
    };
    let mut minus = GammaTable {
        kind: GammaKind::EtaMinus,
        rows: Vec::new(),
    };
    plus.push_checked(vec![BigInt::from(1)])?;
    minus.push_checked(vec![BigInt::from(0)])?;
    plus.push_checked(vec![BigInt::from(1)])?;
    minus.push_checked(vec![BigInt::from(2)])?;
    for m_next in 3..=m_max {
        let len = (m_next - 1) / 2 + 1;
        let (p_row, m_row): (Vec<BigInt>, Vec<BigInt>) = if m_next % 2 == 1 {
            // 2m -> 2m+1
            let src = m_next - 1;
            let m = (src / 2) as i64;
            (0..len as i64)
                .map(|k| {
                    let ep = plus.get(src, k) * (1 + k)
                        + plus.get(src, k - 1) * (2 * (2 * m - 2 * k + 1))
                        + minus.get(src, k - 1);
                    let em = minus.get(src, k) * (1 + k) + minus.get(src, k - 1) * (4 * (m - k));
                    (ep, em)
                })
                .unzip()
        } else {
            // 2m+1 -> 2m+2
            let src = m_next - 1;
            let m = (src / 2) as i64;
            (0..len as i64)
                .map(|k| {
                    let ep =
                        plus.get(src, k) * (1 + 2 * k) + plus.get(src, k - 1) * (8 * (m - k + 1));
                    let em = minus.get(src, k) * (3 + 2 * k)
                        + minus.get(src, k - 1) * (4 * (2 * m - 2 * k + 1))
                        + plus.get(src, k) * 2;
                    (ep, em)
                })
                .unzip()
        };
        plus.push_checked(p_row)?;
        minus.push_checked(m_row)?;
    }
    Ok((plus, minus))
}

/// `sum_k gamma_k x^k (1+x)^(center - 2k)`; zero entries past the center are skipped.
pub fn gamma_expand(gammas: &[BigInt], center: usize) -> UniPoly {
    let mut out = vec![BigInt::zero(); center + 1];
    for (k, g) in gammas.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        assert!(2 * k <= center, "gamma index {k} beyond center {center}");
        for (j, b) in binomial_row(center - 2 * k).into_iter().enumerate() {
            out[k + j] += g * b;
        }
    }
    UniPoly::from_integers(out)
}

/// Polynomials reassembled from gamma tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Assembly {
    P,
    R,
    Q,
    SPlus,
    SMinus,
    S,
    TPlus,
    TMinus,
    T,
}

/// All four gamma tables up to a common rank.
#[derive(Clone, Debug)]
pub struct GammaTables {
    pub p: GammaTable,
    pub r: GammaTable,
    pub eta_plus: GammaTable,
    pub eta_minus: GammaTable,
}

impl GammaTables {
    /// Tables sufficient for ranks `1..=n_max`.
    pub fn build(n_max: usize) -> Result<Self> {
        let p = gamma_p_rows(n_max)?;
        let r = gamma_r_from_p(&p)?;
        let (eta_plus, eta_minus) = eta_rows(2 * n_max + 1)?;
        Ok(Self {
            p,
            r,
            eta_plus,
            eta_minus,
        })
    }

    pub fn assemble(&self, kind: Assembly, n: usize) -> UniPoly {
        let x = UniPoly::x();
        match kind {
            Assembly::P => gamma_expand(self.p.row(n), 2 * n - 2),
            Assembly::R => gamma_expand(self.r.row(n), 2 * n - 1),
            Assembly::Q => &self.assemble(Assembly::R, n) + &(&x * &self.assemble(Assembly::P, n)),
            Assembly::SPlus => gamma_expand(self.eta_plus.row(2 * n), 2 * n - 1),
            Assembly::SMinus => gamma_expand(self.eta_minus.row(2 * n), 2 * n - 2),
            Assembly::S => {
                &self.assemble(Assembly::SPlus, n) + &(&x * &self.assemble(Assembly::SMinus, n))
            }
            Assembly::TPlus => gamma_expand(self.eta_plus.row(2 * n + 1), 2 * n),
            Assembly::TMinus => gamma_expand(self.eta_minus.row(2 * n + 1), 2 * n - 1),
            Assembly::T => {
                &self.assemble(Assembly::TPlus, n) + &(&x * &self.assemble(Assembly::TMinus, n))
            }
        }
    }

    pub fn family(&self, family: Family, n: usize) -> UniPoly {
        self.assemble(
            match family {
                Family::P => Assembly::P,
                Family::Q => Assembly::Q,
                Family::S => Assembly::S,
                Family::T => Assembly::T,
            },
            n,
        )
    }
}
