//! Polynomial Cunningham chains `f_i = x f_{i-1} + eps`.

mod family;
pub mod roots;

use std::fmt;

use rayon::prelude::*;

use crate::certify::{decide_irreducible, IrreducibilityVerdict};
use crate::error::{Error, Result};
use crate::polyz::Polynomial;

pub use family::{
    auxiliary_f, closed_form_term, eisenstein_on_split_ii, family_seed, infinite_seed,
    product_formula_kind1, proof_gadget_g, FamilyParams,
};
pub use roots::{find_roots, min_root_modulus, positive_real_root_count, RootReport};

/// Margin above 1 used when accepting the zero-location claim `|z| > 1`.
pub const UNIT_CIRCLE_MARGIN: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ChainKind {
    /// `eps = +1`
    First,
    /// `eps = -1`
    Second,
}

impl ChainKind {
    pub fn eps(self) -> i64 {
        match self {
            ChainKind::First => 1,
            ChainKind::Second => -1,
        }
    }

    pub fn from_eps(eps: i64) -> Result<Self> {
        match eps {
            1 => Ok(ChainKind::First),
            -1 => Ok(ChainKind::Second),
            _ => Err(Error::InvalidParams(format!(
                "eps must be +1 or -1, got {eps}"
            ))),
        }
    }

    pub fn other(self) -> Self {
        match self {
            ChainKind::First => ChainKind::Second,
            ChainKind::Second => ChainKind::First,
        }
    }
}

impl fmt::Display for ChainKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ChainKind::First => "1",
            ChainKind::Second => "2",
        })
    }
}

/// The first `count` terms `f_1 = seed, f_2, ...` of the chain. No sign check
/// on the seed, so this also produces mirrored chains.
pub fn chain_terms(seed: &Polynomial, kind: ChainKind, count: usize) -> Vec<Polynomial> {
    let mut out: Vec<Polynomial> = Vec::with_capacity(count);
    for i in 0..count {
        let next = match i {
            0 => seed.clone(),
            _ => out[i - 1].chain_step(kind.eps()),
        };
        out.push(next);
    }
    out
}

#[derive(Clone, Debug)]
pub struct ChainEntry {
    /// 1-based index in the chain.
    pub index: usize,
    pub poly: Polynomial,
    pub verdict: IrreducibilityVerdict,
}

#[derive(Clone, Debug)]
pub struct ChainReport {
    pub seed: Polynomial,
    pub kind: ChainKind,
    pub entries: Vec<ChainEntry>,
}

impl ChainReport {
    pub fn reducible_indices(&self) -> Vec<usize> {
        self.entries
            .iter()
            .filter(|e| e.verdict.is_reducible())
            .map(|e| e.index)
            .collect()
    }

    /// Checks every entry against the recurrence and re-verifies its verdict.
    pub fn verify(&self) -> bool {
        let terms = chain_terms(&self.seed, self.kind, self.entries.len());
        self.entries
            .iter()
            .zip(&terms)
            .enumerate()
            .all(|(i, (e, t))| e.index == i + 1 && &e.poly == t && e.verdict.verify(&e.poly))
    }
}

fn check_seed(seed: &Polynomial) -> Result<()> {
    match seed.leading_coeff() {
        None => return Err(Error::ZeroPolynomial),
        Some(lc) if lc.sign() != num_bigint::Sign::Plus => return Err(Error::NonPositiveLeading),
        Some(_) => {}
    }
    Ok(())
}

/// Verdicts for `f_1 .. f_N`. Terms are decided in parallel.
pub fn chain_report(seed: &Polynomial, kind: ChainKind, n: usize) -> Result<ChainReport> {
    check_seed(seed)?;
    let entries = chain_terms(seed, kind, n)
        .into_par_iter()
        .enumerate()
        .map(|(i, poly)| {
            let verdict = decide_irreducible(&poly)?;
            Ok(ChainEntry {
                index: i + 1,
                poly,
                verdict,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ChainReport {
        seed: seed.clone(),
        kind,
        entries,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChainLength {
    Exactly(usize),
    /// No reducible term among the first `cap` terms.
    AtLeast(usize),
}

/// Length of the chain: `k` when `f_{k+1}` is the first reducible term.
pub fn chain_length(seed: &Polynomial, kind: ChainKind, cap: usize) -> Result<ChainLength> {
    check_seed(seed)?;
    let mut f = seed.clone();
    for i in 1..=cap {
        if i > 1 {
            f = f.chain_step(kind.eps());
        }
        if decide_irreducible(&f)?.is_reducible() {
            return Ok(ChainLength::Exactly(i - 1));
        }
    }
    Ok(ChainLength::AtLeast(cap))
}

/// Family chain report through `n` terms.
pub fn family_report(params: &FamilyParams, n: usize) -> Result<ChainReport> {
    chain_report(&family_seed(params), params.kind(), n)
}

/// Report for the chain restarted at `g_1 = f_{k+2}`.
pub fn restart_report(params: &FamilyParams, n: usize) -> Result<ChainReport> {
    let g1 = closed_form_term(params, params.reducible_index() + 1)?;
    chain_report(&g1, params.kind(), n)
}

/// Runs `f` over every valid `(m, k)` pair of the grid, one task per pair.
/// Pairs violating the family constraints are skipped. Results come back in
/// grid order.
pub fn grid_map<T, F>(kind: ChainKind, ms: &[u64], ks: &[u64], f: F) -> Vec<(FamilyParams, T)>
where
    T: Send,
    F: Fn(&FamilyParams) -> T + Sync,
{
    let params: Vec<FamilyParams> = ms
        .iter()
        .flat_map(|&m| ks.iter().map(move |&k| (m, k)))
        .filter_map(|(m, k)| FamilyParams::new(kind, m, k).ok())
        .collect();
    params
        .into_par_iter()
        .map(|p| {
            let t = f(&p);
            (p, t)
        })
        .collect()
}
