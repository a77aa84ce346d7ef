//! Scans of `x^j + x^{j-1} + ... + x + m` around `j = t`, where
//! `t = 2 ceil((k+1)/2) + 1` and `m = 2 (2^t + 1) / 3`.

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;

use crate::certify::{decide_irreducible, IrreducibilityVerdict};
use crate::error::{Error, Result};
use crate::polyz::Polynomial;

pub const DEFAULT_EXTRA: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureParams {
    pub k: usize,
    pub t: usize,
    pub m: BigInt,
}

pub fn conjecture_params(k: usize) -> Result<ConjectureParams> {
    if k < 1 {
        return Err(Error::InvalidParams("k must be at least 1".into()));
    }
    let t = 2 * (k + 1).div_ceil(2) + 1;
    let m = ((BigInt::one() << t) + 1) / 3 * 2;
    Ok(ConjectureParams { k, t, m })
}

/// `x^j + ... + x + m`.
pub fn conjecture_poly(j: usize, m: &BigInt) -> Result<Polynomial> {
    if j < 1 {
        return Err(Error::InvalidParams("j must be at least 1".into()));
    }
    let mut coeffs = vec![BigInt::one(); j + 1];
    coeffs[0] = m.clone();
    Ok(Polynomial::from_coeffs(coeffs))
}

#[derive(Clone, Debug)]
pub struct ScanEntry {
    pub j: usize,
    pub poly: Polynomial,
    pub verdict: IrreducibilityVerdict,
}

impl ScanEntry {
    /// Whether the verdict agrees with "reducible iff j = t".
    pub fn matches_pattern(&self, t: usize) -> bool {
        self.verdict.is_reducible() == (self.j == t)
    }
}

#[derive(Clone, Debug)]
pub struct ConjectureScan {
    pub params: ConjectureParams,
    pub entries: Vec<ScanEntry>,
}

impl ConjectureScan {
    /// Entries whose verdict departs from the conjectured pattern.
    pub fn deviations(&self) -> Vec<&ScanEntry> {
        self.entries
            .iter()
            .filter(|e| !e.matches_pattern(self.params.t))
            .collect()
    }

    pub fn reducible_js(&self) -> Vec<usize> {
        self.entries
            .iter()
            .filter(|e| e.verdict.is_reducible())
            .map(|e| e.j)
            .collect()
    }
}

/// Verdicts for `j = t - k ..= t + extra`, decided in parallel.
pub fn conjecture_scan(k: usize, extra: usize) -> Result<ConjectureScan> {
    let params = conjecture_params(k)?;
    let entries = (params.t - k..=params.t + extra)
        .into_par_iter()
        .map(|j| {
            let poly = conjecture_poly(j, &params.m)?;
            let verdict = decide_irreducible(&poly)?;
            Ok(ScanEntry { j, poly, verdict })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ConjectureScan { params, entries })
}
