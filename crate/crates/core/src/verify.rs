//! Exact verification of the character identities and dimension counts.
//!
//! Every check builds both sides as truncated series and compares them term by term.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::characters::{default_rank, enright_schur_sum, hs_series, hs_series_at_rank, invariants_character, super_factor, trivial_hs};
use crate::classical::{o_character, o_dimension, sp_dimension, sp_group_character, weyl_dimension, Family, RootSystemCase};
use crate::combinatorics::{count_ssyt, enumerate_partitions, Partition, PartitionConstraints};
use crate::error::{Error, Result};
use crate::symfunc::{duality_lhs, hook_schur_expand, schur_in, Alphabet, PowerSeries, Slot};
use crate::tensor::exterior_weight;
use crate::{IdentityId, Pair};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    ExactMatch,
    Mismatch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub monomial: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub params: Value,
    pub status: Status,
    pub first_mismatch: Option<Mismatch>,
    pub terms_checked: usize,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::ExactMatch
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }

    fn exact(identity: &str, params: Value, terms_checked: usize) -> Self {
        VerificationReport { identity: identity.into(), params, status: Status::ExactMatch, first_mismatch: None, terms_checked }
    }

    fn failed(identity: &str, params: Value, terms_checked: usize, monomial: String, lhs: String, rhs: String) -> Self {
        VerificationReport {
            identity: identity.into(),
            params,
            status: Status::Mismatch,
            first_mismatch: Some(Mismatch { monomial, lhs, rhs }),
            terms_checked,
        }
    }
}

/// Compares two series exactly.
pub fn compare_series(identity: &str, params: Value, lhs: &PowerSeries, rhs: &PowerSeries) -> VerificationReport {
    let mut keys: Vec<_> = lhs.terms().keys().chain(rhs.terms().keys()).collect();
    keys.sort();
    keys.dedup();
    match lhs.first_difference(rhs) {
        None => VerificationReport::exact(identity, params, keys.len()),
        Some((mono, a, b)) => {
            let name = mono.render(lhs.alphabet());
            VerificationReport::failed(identity, params, keys.len(), name, a.to_string(), b.to_string())
        }
    }
}

/// Both sides of an identity, truncated at `cap`.
///
/// Not defined for `hs-stability`, which compares two ranks instead.
pub fn identity_sides(id: IdentityId, d: u32, m: usize, n: usize, cap: u32) -> Result<(PowerSeries, PowerSeries)> {
    if d == 0 {
        return Err(Error::InvalidParameters("d must be positive".into()));
    }
    match id {
        IdentityId::Glgl => {
            let lhs = duality_lhs(id, d, m, n, cap)?;
            let alph = *lhs.alphabet();
            let c = PartitionConstraints { max_length: Some(d as usize), hook: Some((m, n)), ..Default::default() };
            let mut rhs = PowerSeries::zero(alph, Some(cap));
            for lam in enumerate_partitions(cap, &c) {
                let s = schur_in(&lam, d as usize, alph, Slot::X, Some(cap));
                let hs = hook_schur_expand(&lam, m, n).embed(alph)?;
                rhs = rhs.add(&s.mul(&hs)?)?;
            }
            Ok((lhs, rhs))
        }
        IdentityId::OSp | IdentityId::SpSo => {
            let lhs = duality_lhs(id, d, m, n, cap)?;
            let alph = *lhs.alphabet();
            let pair = if id == IdentityId::OSp { Pair::Osp } else { Pair::SpO };
            let mut inner = PowerSeries::zero(alph, Some(cap));
            for lam in group_labels(pair, d, cap, Some((m, 0))) {
                let chi = group_series(pair, d, &lam, alph, cap)?;
                let e = enright_schur_sum(&lam, d, m, pair)?.schur_series(m, Some(cap)).embed(alph)?;
                inner = inner.add(&chi.mul(&e)?)?;
            }
            let rhs = inner.mul(&super_factor(pair, m, 0, cap)?.embed(alph)?)?;
            Ok((lhs, rhs))
        }
        IdentityId::OSpo | IdentityId::SpOsp => {
            let lhs = duality_lhs(id, d, m, n, cap)?;
            let alph = *lhs.alphabet();
            let pair = if id == IdentityId::OSpo { Pair::Osp } else { Pair::SpO };
            let mut inner = PowerSeries::zero(alph, Some(cap));
            for lam in group_labels(pair, d, cap, Some((m, n))) {
                let chi = group_series(pair, d, &lam, alph, cap)?;
                let hs = hs_series(&lam, d, m, n, cap, pair)?.series.embed(alph)?;
                inner = inner.add(&chi.mul(&hs)?)?;
            }
            let rhs = inner.mul(&super_factor(pair, m, n, cap)?.embed(alph)?)?;
            Ok((lhs, rhs))
        }
        IdentityId::OInvariants | IdentityId::SpInvariants => {
            let pair = if id == IdentityId::OInvariants { Pair::Osp } else { Pair::SpO };
            let lhs = trivial_hs(pair, d, m, n, cap)?.series.mul(&super_factor(pair, m, n, cap)?)?;
            let rhs = invariants_character(pair, d, m, n, cap)?;
            Ok((lhs, rhs))
        }
        IdentityId::HsStability => Err(Error::InvalidParameters("hs-stability compares ranks, not two sides".into())),
    }
}

/// Group labels λ with |λ| ≤ cap, optionally restricted to a hook.
fn group_labels(pair: Pair, d: u32, cap: u32, hook: Option<(usize, usize)>) -> Vec<Partition> {
    let c = match pair {
        Pair::Osp => PartitionConstraints { col_sum_bound: Some(d), hook, ..Default::default() },
        Pair::SpO => PartitionConstraints { max_length: Some((d / 2) as usize), hook, ..Default::default() },
    };
    enumerate_partitions(cap, &c)
}

fn group_series(pair: Pair, d: u32, lam: &Partition, alph: Alphabet, cap: u32) -> Result<PowerSeries> {
    let ch = match pair {
        Pair::Osp => o_character(d, lam, d % 2 == 1)?,
        Pair::SpO => sp_group_character(d, lam)?,
    };
    ch.to_series(alph, Some(cap))
}

fn identity_params(d: u32, m: usize, n: usize, cap: u32) -> Value {
    json!({"d": d, "m": m, "n": n, "degree": cap})
}

/// Checks one identity at the given parameters.
pub fn verify_identity(id: IdentityId, d: u32, m: usize, n: usize, cap: u32) -> Result<VerificationReport> {
    let params = identity_params(d, m, n, cap);
    if id == IdentityId::HsStability {
        return verify_hs_stability(d, m, n, cap);
    }
    let (lhs, rhs) = identity_sides(id, d, m, n, cap)?;
    Ok(compare_series(id.name(), params, &lhs, &rhs))
}

/// HS^λ at the default rank k and at k+2, for every λ with |λ| ≤ cap in the hook.
///
/// Both pairs are swept when d is even, only O(d) otherwise.
pub fn verify_hs_stability(d: u32, m: usize, n: usize, cap: u32) -> Result<VerificationReport> {
    if d == 0 {
        return Err(Error::InvalidParameters("d must be positive".into()));
    }
    let params = identity_params(d, m, n, cap);
    let name = IdentityId::HsStability.name();
    let pairs: &[Pair] = if d % 2 == 0 { &[Pair::Osp, Pair::SpO] } else { &[Pair::Osp] };
    let mut checked = 0;
    for &pair in pairs {
        for lam in group_labels(pair, d, cap, Some((m, n))) {
            let k = default_rank(&lam, d, cap, pair);
            let a = hs_series_at_rank(&lam, d, m, n, cap, pair, k)?;
            let b = hs_series_at_rank(&lam, d, m, n, cap, pair, k + 2)?;
            let label = format!("{pair} {lam}");
            let mut rep = compare_series(name, params.clone(), &a.series, &b.series);
            if rep.passed() && a.terms != b.terms {
                rep = VerificationReport::failed(name, params.clone(), 0, label.clone(), a.terms.to_string(), b.terms.to_string());
            }
            checked += rep.terms_checked;
            if let Some(mm) = rep.first_mismatch {
                return Ok(VerificationReport::failed(
                    name,
                    params,
                    checked,
                    format!("{label}: {}", mm.monomial),
                    mm.lhs,
                    mm.rhs,
                ));
            }
        }
    }
    Ok(VerificationReport::exact(name, params, checked))
}

fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// dim S^N(C^d ⊗ C^{m|n}) against Σ_λ dim V^λ_d · dim V^λ_{m|n}, for every N ≤ `max_n`.
pub fn graded_dimension_check(d: u32, m: usize, n: usize, max_n: u32) -> Result<VerificationReport> {
    let params = json!({"d": d, "m": m, "n": n, "max_degree": max_n});
    let name = "graded-dimension";
    let (dm, dn) = (d as u64 * m as u64, d as u64 * n as u64);
    let c = PartitionConstraints { max_length: Some(d as usize), hook: Some((m, n)), ..Default::default() };
    let labels = enumerate_partitions(max_n, &c);
    for big_n in 0..=max_n {
        let mut lhs = BigInt::zero();
        for a in 0..=big_n as u64 {
            let b = big_n as u64 - a;
            let sym = if dm == 0 { BigInt::from((a == 0) as u8) } else { binomial(dm + a - 1, a) };
            lhs += sym * binomial(dn, b);
        }
        let mut rhs = BigInt::zero();
        for lam in labels.iter().filter(|l| l.size() == big_n) {
            rhs += BigInt::from(count_ssyt(lam, d as usize)) * hook_schur_expand(lam, m, n).total();
        }
        if lhs != rhs {
            return Ok(VerificationReport::failed(
                name,
                params,
                big_n as usize,
                format!("N={big_n}"),
                lhs.to_string(),
                rhs.to_string(),
            ));
        }
    }
    Ok(VerificationReport::exact(name, params, max_n as usize + 1))
}

/// Which group acts on Λ(C^d ⊗ C^k).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ExteriorBranch {
    /// O(d) with so(2k).
    O,
    /// Sp(d) with sp(2k).
    Sp,
}

/// Σ_λ dim V^λ_G · dim V_g = 2^{dk} for the exterior algebra Λ(C^d ⊗ C^k).
pub fn exterior_dimension_check(d: u32, k: usize, branch: ExteriorBranch) -> Result<VerificationReport> {
    if d == 0 || k == 0 {
        return Err(Error::InvalidParameters("d and k must be positive".into()));
    }
    if branch == ExteriorBranch::Sp && d % 2 == 1 {
        return Err(Error::InvalidParameters(format!("the Sp branch needs d even, got {d}")));
    }
    let params = json!({"d": d, "k": k, "branch": branch});
    let (family, c) = match branch {
        ExteriorBranch::O => (
            Family::D,
            PartitionConstraints { max_length: Some(d as usize), col_sum_bound: Some(d), max_first_row: Some(k as u32), ..Default::default() },
        ),
        ExteriorBranch::Sp => (
            Family::C,
            PartitionConstraints { max_length: Some((d / 2) as usize), max_first_row: Some(k as u32), ..Default::default() },
        ),
    };
    let case = RootSystemCase::new(family, k);
    let mut total = BigInt::zero();
    let mut count = 0;
    for lam in enumerate_partitions(d * k as u32, &c) {
        let g = match branch {
            ExteriorBranch::O => o_dimension(d, &lam)?,
            ExteriorBranch::Sp => sp_dimension(d, &lam)?,
        };
        total += g * weyl_dimension(&case, &exterior_weight(&lam, d, k)?)?;
        count += 1;
    }
    let expected = BigInt::one() << (d as usize * k);
    if total == expected {
        Ok(VerificationReport::exact("exterior-dimension", params, count))
    } else {
        Ok(VerificationReport::failed("exterior-dimension", params, count, "total".into(), expected.to_string(), total.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn glgl_small() {
        let r = verify_identity(IdentityId::Glgl, 1, 1, 1, 3).unwrap();
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn odd_classical_small() {
        let r = verify_identity(IdentityId::OSp, 1, 1, 0, 6).unwrap();
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn exterior_examples() {
        assert!(exterior_dimension_check(1, 1, ExteriorBranch::O).unwrap().passed());
        assert!(exterior_dimension_check(2, 1, ExteriorBranch::Sp).unwrap().passed());
        let r = exterior_dimension_check(2, 2, ExteriorBranch::O).unwrap();
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn graded_small() {
        assert!(graded_dimension_check(2, 1, 1, 4).unwrap().passed());
    }
}
