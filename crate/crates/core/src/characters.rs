//! Characters of the unitarizable spo(2m|2n) and osp(2m|2n) modules in the Howe decompositions.
//!
//! A character is (y z^{-1})^{d/2} · HS^λ(y,z) · F(y,z), where HS^λ is a signed sum
//! of hook Schur functions and F is the pair's product factor. The prefactor is
//! kept symbolic. For osp the even variables are also placed in the y group.

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::combinatorics::{bar_partition, enumerate_partitions, half_to_string, Partition, PartitionConstraints};
use crate::error::{precondition, Error, Result};
use crate::symfunc::{product_of_geometrics, product_of_linears, Alphabet, Monomial, PowerSeries, SchurExpansion, Slot};
use crate::wgroups::enright_terms;
use crate::{Pair, SuperKind};

/// Exponents of the symbolic prefactor, doubled.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Prefactor {
    pub y_doubled: i64,
    pub z_doubled: i64,
}

impl Prefactor {
    pub fn for_d(d: u32) -> Self {
        Prefactor { y_doubled: d as i64, z_doubled: -(d as i64) }
    }

    pub fn to_json(&self) -> Value {
        json!({"y": half_to_string(self.y_doubled), "z": half_to_string(self.z_doubled)})
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterResult {
    pub pair: Pair,
    pub lambda: Partition,
    pub d: u32,
    pub m: usize,
    pub n: usize,
    pub cap: u32,
    pub rank_used: Option<usize>,
    pub prefactor: Prefactor,
    /// For O(d) with d even: the character of the sum of the λ and λ̄ modules.
    pub combined_pair: bool,
    pub hs_terms: SchurExpansion,
    pub series: PowerSeries,
}

impl CharacterResult {
    pub fn to_json(&self) -> Value {
        json!({
            "algebra": self.pair.super_kind().name(),
            "lambda": self.lambda,
            "d": self.d,
            "m": self.m,
            "n": self.n,
            "degree": self.cap,
            "prefactor": self.prefactor.to_json(),
            "combined_pair": self.combined_pair,
            "rank_used": self.rank_used,
            "hs_terms": self.hs_terms.to_json(),
            "series": self.series.to_json(),
        })
    }
}

/// Signed hook Schur sum HS^λ together with its expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HsSeries {
    pub terms: SchurExpansion,
    pub series: PowerSeries,
    pub rank_used: Option<usize>,
}

/// Σ_w sign(w) s_{Λ_w} over the cosets at rank m, dropping Λ_w with more than m rows.
pub fn enright_schur_sum(lambda: &Partition, d: u32, m: usize, pair: Pair) -> Result<SchurExpansion> {
    pair.check(lambda, d)?;
    if lambda.len() > m {
        return Err(Error::InvalidParameters(format!("{lambda} has more than m={m} rows")));
    }
    let mut out = SchurExpansion::new(None);
    for (big, sign) in enright_terms(lambda, d, m, pair)? {
        if big.len() <= m {
            out.add(big, BigInt::from(sign));
        }
    }
    Ok(out)
}

/// ∏(1+y_i z_l) over the even-even and odd-odd denominators of the pair.
///
/// `Osp` (spo side): ∏_{i≤j} 1/(1-y_i y_j) · ∏_{l<k} 1/(1-z_l z_k).
/// `SpO` (osp side): ∏_{i<j} 1/(1-y_i y_j) · ∏_{l≤k} 1/(1-z_l z_k).
pub fn super_factor(pair: Pair, m: usize, n: usize, cap: u32) -> Result<PowerSeries> {
    let alph = Alphabet::yz(m, n);
    let y = |i| Monomial::var(&alph, Slot::Y, i);
    let z = |i| Monomial::var(&alph, Slot::Z, i);
    let lin: Vec<Monomial> = (0..m).flat_map(|i| (0..n).map(move |l| (i, l))).map(|(i, l)| y(i).mul(&z(l))).collect();
    let (y_diag, z_diag) = match pair {
        Pair::Osp => (true, false),
        Pair::SpO => (false, true),
    };
    let mut geo = Vec::new();
    for i in 0..m {
        for j in i..m {
            if i < j || y_diag {
                geo.push(y(i).mul(&y(j)));
            }
        }
    }
    for l in 0..n {
        for k in l..n {
            if l < k || z_diag {
                geo.push(z(l).mul(&z(k)));
            }
        }
    }
    product_of_linears(alph, cap, &lin)?.mul(&product_of_geometrics(alph, cap, &geo)?)
}

/// The sp(2m) (pair `Osp`) or so(2m) (pair `SpO`) character of highest weight λ + d/2.
pub fn classical_unitary_character(lambda: &Partition, d: u32, m: usize, pair: Pair, cap: u32) -> Result<CharacterResult> {
    let sum = enright_schur_sum(lambda, d, m, pair)?;
    let series = sum.schur_series(m, Some(cap)).mul(&super_factor(pair, m, 0, cap)?)?;
    Ok(CharacterResult {
        pair,
        lambda: lambda.clone(),
        d,
        m,
        n: 0,
        cap,
        rank_used: Some(m),
        prefactor: Prefactor { y_doubled: d as i64, z_doubled: 0 },
        combined_pair: false,
        hs_terms: sum,
        series,
    })
}

/// Degree below which rank-k truncation is exact.
pub fn truncation_bound(lambda: &Partition, d: u32, k: usize, pair: Pair) -> i64 {
    let (k, size, s, d) = (k as i64, lambda.size() as i64, lambda.len() as i64, d as i64);
    match pair {
        Pair::Osp if 2 * s > d => 2 * k + size - 2 * s - 1,
        Pair::Osp => 2 * k + size - d,
        // index d/2+1 has μ = 0 so its sign change costs nothing; one less than the naive bound
        Pair::SpO => 2 * k + size - d - 2,
    }
}

/// Smallest k > d with truncation bound above `cap`.
pub fn default_rank(lambda: &Partition, d: u32, cap: u32, pair: Pair) -> usize {
    let mut k = d as usize + 1;
    while truncation_bound(lambda, d, k, pair) <= cap as i64 {
        k += 1;
    }
    k
}

/// HS^λ(y,z) truncated at degree `cap`, using the smallest admissible rank.
pub fn hs_series(lambda: &Partition, d: u32, m: usize, n: usize, cap: u32, pair: Pair) -> Result<HsSeries> {
    pair.check(lambda, d)?;
    hs_series_at_rank(lambda, d, m, n, cap, pair, default_rank(lambda, d, cap, pair))
}

/// HS^λ(y,z) truncated at `cap` from the cosets at rank k-1.
pub fn hs_series_at_rank(
    lambda: &Partition,
    d: u32,
    m: usize,
    n: usize,
    cap: u32,
    pair: Pair,
    k: usize,
) -> Result<HsSeries> {
    pair.check(lambda, d)?;
    if k <= d as usize || truncation_bound(lambda, d, k, pair) <= cap as i64 {
        return precondition(format!("rank {k} is too small for degree {cap}"));
    }
    let mut terms = SchurExpansion::new(Some(cap));
    for (big, sign) in enright_terms(lambda, d, k - 1, pair)? {
        if big == *lambda {
            if sign != 1 {
                return Err(Error::LogicFault("identity coset has negative sign".into()));
            }
        } else if big.size() <= lambda.size() {
            return Err(Error::LogicFault(format!("{big} is not larger than {lambda}")));
        }
        if big.size() <= cap && big.in_hook(m, n) {
            terms.add(big, BigInt::from(sign));
        }
    }
    let series = terms.hook_series(m, n, Some(cap));
    Ok(HsSeries { terms, series, rank_used: Some(k) })
}

fn check_hook(lambda: &Partition, m: usize, n: usize) -> Result<()> {
    if !lambda.in_hook(m, n) {
        return precondition(format!("{lambda} is outside the ({m}|{n}) hook"));
    }
    Ok(())
}

/// Character of the spo(2m|2n)-module paired with the O(d)-module λ.
///
/// For d even and λ ≠ λ̄ only the sum of the λ and λ̄ characters is returned.
pub fn spo_character(lambda: &Partition, d: u32, m: usize, n: usize, cap: u32) -> Result<CharacterResult> {
    Pair::Osp.check(lambda, d)?;
    check_hook(lambda, m, n)?;
    let hs = hs_series(lambda, d, m, n, cap, Pair::Osp)?;
    let mut terms = hs.terms;
    let mut rank = hs.rank_used;
    let mut combined = false;
    if d % 2 == 0 {
        let bar = bar_partition(lambda, d)?;
        if bar != *lambda {
            let other = hs_series(&bar, d, m, n, cap, Pair::Osp)?;
            terms.merge(&other.terms);
            rank = rank.max(other.rank_used);
            combined = true;
        }
    }
    assemble(Pair::Osp, lambda, d, m, n, cap, rank, combined, terms)
}

/// Character of the osp(2m|2n)-module paired with the Sp(d)-module λ.
pub fn osp_character(lambda: &Partition, d: u32, m: usize, n: usize, cap: u32) -> Result<CharacterResult> {
    Pair::SpO.check(lambda, d)?;
    check_hook(lambda, m, n)?;
    let hs = hs_series(lambda, d, m, n, cap, Pair::SpO)?;
    assemble(Pair::SpO, lambda, d, m, n, cap, hs.rank_used, false, hs.terms)
}

/// Dispatches on the superalgebra.
pub fn super_character(kind: SuperKind, lambda: &Partition, d: u32, m: usize, n: usize, cap: u32) -> Result<CharacterResult> {
    match kind {
        SuperKind::Spo => spo_character(lambda, d, m, n, cap),
        SuperKind::Osp => osp_character(lambda, d, m, n, cap),
    }
}

#[allow(clippy::too_many_arguments)]
fn assemble(
    pair: Pair,
    lambda: &Partition,
    d: u32,
    m: usize,
    n: usize,
    cap: u32,
    rank_used: Option<usize>,
    combined_pair: bool,
    terms: SchurExpansion,
) -> Result<CharacterResult> {
    let series = terms.hook_series(m, n, Some(cap)).mul(&super_factor(pair, m, n, cap)?)?;
    if !series.all_nonnegative() {
        return Err(Error::LogicFault(format!("character of {lambda} has a negative coefficient")));
    }
    Ok(CharacterResult {
        pair,
        lambda: lambda.clone(),
        d,
        m,
        n,
        cap,
        rank_used,
        prefactor: Prefactor::for_d(d),
        combined_pair,
        hs_terms: terms,
        series,
    })
}

/// The partition attached to a tuple i_1 < … < i_l.
///
/// Its first l rows are i_{l-j} - d + shift + j for j = 0..l-1, followed by the
/// value l-t repeated i_{t+1} - i_t - 1 times (i_0 = 0).
pub fn tuple_shape(tuple: &[u32], d: u32, shift: i64) -> Result<Partition> {
    let l = tuple.len();
    let mut rows = Vec::new();
    for j in 0..l {
        let v = tuple[l - 1 - j] as i64 - d as i64 + shift + j as i64;
        if v < 0 {
            return Err(Error::LogicFault(format!("negative row from tuple {tuple:?}")));
        }
        rows.push(v as u32);
    }
    let mut prev = 0;
    for (t, &i) in tuple.iter().enumerate() {
        for _ in 0..(i - prev - 1) {
            rows.push((l - t) as u32);
        }
        prev = i;
    }
    Partition::new(rows).map_err(|_| Error::LogicFault(format!("tuple {tuple:?} gives a non-partition")))
}

fn tuples(lo: u32, hi: u32, even_only: bool, f: &mut dyn FnMut(&[u32]) -> Result<()>) -> Result<()> {
    fn rec(next: u32, hi: u32, even_only: bool, cur: &mut Vec<u32>, f: &mut dyn FnMut(&[u32]) -> Result<()>) -> Result<()> {
        if !even_only || cur.len() % 2 == 0 {
            f(cur)?;
        }
        for v in next..=hi {
            cur.push(v);
            rec(v + 1, hi, even_only, cur, f)?;
            cur.pop();
        }
        Ok(())
    }
    rec(lo, hi, even_only, &mut Vec::new(), f)
}

/// HS^∅ from the explicit tuple sums.
///
/// `Osp`: tuples of even length with d ≤ i_1; `SpO`: tuples of any length with
/// d+2 ≤ i_1. The sign is (-1)^{l + Σ i}. Tuples stop at `cap` because the
/// shape has at least max(i) boxes, which is asserted.
pub fn trivial_hs(pair: Pair, d: u32, m: usize, n: usize, cap: u32) -> Result<HsSeries> {
    pair.check(&Partition::empty(), d)?;
    let (lo, shift, even) = match pair {
        Pair::Osp => (d, 1, true),
        Pair::SpO => (d + 2, -1, false),
    };
    let mut terms = SchurExpansion::new(Some(cap));
    tuples(lo.max(1), cap, even, &mut |t| {
        let shape = tuple_shape(t, d, shift)?;
        if let Some(&top) = t.last() {
            if shape.size() < top {
                return Err(Error::LogicFault(format!("tuple {t:?} has fewer than {top} boxes")));
            }
        }
        if shape.size() <= cap && shape.in_hook(m, n) {
            let s: u32 = t.iter().sum::<u32>() + t.len() as u32;
            terms.add(shape, BigInt::from(if s % 2 == 0 { 1 } else { -1 }));
        }
        Ok(())
    })?;
    let series = terms.hook_series(m, n, Some(cap));
    Ok(HsSeries { terms, series, rank_used: None })
}

/// Σ HS_λ over even-row (O) or even-column (Sp) partitions with at most d rows.
pub fn invariants_character(group: Pair, d: u32, m: usize, n: usize, cap: u32) -> Result<PowerSeries> {
    group.check(&Partition::empty(), d)?;
    let c = PartitionConstraints {
        max_length: Some(d as usize),
        even_rows: group == Pair::Osp,
        even_cols: group == Pair::SpO,
        hook: Some((m, n)),
        ..Default::default()
    };
    let mut sum = SchurExpansion::new(Some(cap));
    for lam in enumerate_partitions(cap, &c) {
        sum.add(lam, BigInt::from(1));
    }
    Ok(sum.hook_series(m, n, Some(cap)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn enright_examples() {
        let e = enright_schur_sum(&p(&[]), 1, 2, Pair::Osp).unwrap();
        assert_eq!(e, SchurExpansion::from_pairs([(p(&[]), 1), (p(&[2, 2]), -1)]));
        // μ = (1,0,-1): index 3 is excluded, so only the identity survives
        let e = enright_schur_sum(&p(&[]), 2, 3, Pair::SpO).unwrap();
        assert_eq!(e, SchurExpansion::from_pairs([(p(&[]), 1)]));
        let e = enright_schur_sum(&p(&[3]), 2, 1, Pair::Osp).unwrap();
        assert_eq!(e, SchurExpansion::from_pairs([(p(&[3]), 1)]));
    }

    #[test]
    fn classical_examples() {
        let c = classical_unitary_character(&p(&[]), 1, 1, Pair::Osp, 6).unwrap();
        assert_eq!(c.series.to_string(), "1 + y1^2 + y1^4 + y1^6");
        let c = classical_unitary_character(&p(&[1]), 2, 1, Pair::SpO, 2).unwrap();
        assert_eq!(c.series.to_string(), "y1");
        let c = classical_unitary_character(&p(&[]), 3, 0, Pair::Osp, 4).unwrap();
        assert_eq!(c.series.to_string(), "1");
    }

    #[test]
    fn hs_examples() {
        let h = hs_series(&p(&[]), 1, 1, 0, 6, Pair::Osp).unwrap();
        assert_eq!(h.series.to_string(), "1");
        let h = hs_series(&p(&[]), 1, 1, 1, 3, Pair::Osp).unwrap();
        assert_eq!(h.series.to_string(), "1");
    }

    #[test]
    fn character_examples() {
        let c = spo_character(&p(&[]), 1, 1, 1, 4).unwrap();
        assert_eq!(c.series.to_string(), "1 + y1*z1 + y1^2 + y1^3*z1 + y1^4");
        assert_eq!(c.prefactor.to_json(), json!({"y": "1/2", "z": "-1/2"}));
        let c = osp_character(&p(&[1]), 2, 1, 1, 2).unwrap();
        assert_eq!(c.series.to_string(), "z1 + y1");
        let c = spo_character(&p(&[]), 2, 1, 0, 4).unwrap();
        assert!(c.combined_pair);
    }

    #[test]
    fn trivial_examples() {
        let t = trivial_hs(Pair::Osp, 1, 1, 0, 6).unwrap();
        assert_eq!(t.series.to_string(), "1");
        assert_eq!(tuple_shape(&[3, 4], 3, 1).unwrap(), p(&[2, 2, 2, 2]));
        assert_eq!(tuple_shape(&[1, 2], 1, 1).unwrap(), p(&[2, 2]));
        assert_eq!(tuple_shape(&[4, 5], 2, -1).unwrap(), p(&[2, 2, 2, 2, 2]));
    }

    #[test]
    fn invariants_examples() {
        let s = invariants_character(Pair::Osp, 1, 1, 0, 6).unwrap();
        assert_eq!(s.to_string(), "1 + y1^2 + y1^4 + y1^6");
        let s = invariants_character(Pair::SpO, 2, 0, 1, 4).unwrap();
        assert_eq!(s.to_string(), "1 + z1^2");
        let s = invariants_character(Pair::Osp, 3, 0, 0, 4).unwrap();
        assert_eq!(s.to_string(), "1");
    }
}
