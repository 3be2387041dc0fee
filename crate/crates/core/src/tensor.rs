//! Tensor products of the unitarizable modules through the exterior-algebra duality.
//!
//! The coefficient of λ in V^μ ⊗ V^γ is read off from a tensor product of
//! so(2k) modules (spo side) or sp(2k) modules (osp side), decomposed by peeling
//! Weyl characters.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::characters::{hs_series, osp_character, spo_character, super_factor};
use crate::classical::{dominant_multiplicities, weyl_character_by_orbits, Family, RootSystemCase};
use crate::combinatorics::{bar_partition, GeneralizedVector, Partition};
use crate::error::{precondition, Error, Result};
use crate::symfunc::{Alphabet, PowerSeries};
use crate::verify::{compare_series, VerificationReport};
use crate::SuperKind;

/// Multiplicities of highest weights in a classical tensor product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightTable {
    pub case: RootSystemCase,
    pub entries: BTreeMap<GeneralizedVector, BigInt>,
}

impl WeightTable {
    pub fn get(&self, w: &GeneralizedVector) -> BigInt {
        self.entries.get(w).cloned().unwrap_or_default()
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.entries
                .iter()
                .map(|(w, c)| json!({"weight": w.to_strings(), "mult": c.to_string()}))
                .collect(),
        )
    }
}

/// Coefficients c_λ of V^{λ+(d+r)/2} in V^{μ+d/2} ⊗ V^{γ+r/2}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorTable {
    pub kind: SuperKind,
    pub mu: Partition,
    pub gamma: Partition,
    pub d: u32,
    pub r: u32,
    pub k: usize,
    pub hook: Option<(usize, usize)>,
    pub entries: BTreeMap<Partition, BigInt>,
}

impl TensorTable {
    pub fn get(&self, lambda: &Partition) -> BigInt {
        self.entries.get(lambda).cloned().unwrap_or_default()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "algebra": self.kind.name(),
            "mu": self.mu,
            "gamma": self.gamma,
            "d": self.d,
            "r": self.r,
            "rank": self.k,
            "m": self.hook.map(|h| h.0),
            "n": self.hook.map(|h| h.1),
            "coefficients": self.entries.iter().map(|(p, c)| json!({"lambda": p, "coeff": c.to_string()})).collect::<Vec<_>>(),
        })
    }
}

/// Decomposes V(w1) ⊗ V(w2) for type C or D of rank k.
///
/// The lex-largest dominant weight left over is always a highest weight, since
/// every positive root is lex-positive in these coordinates.
pub fn tensor_decompose_classical(
    family: Family,
    k: usize,
    w1: &GeneralizedVector,
    w2: &GeneralizedVector,
) -> Result<WeightTable> {
    if family == Family::B {
        return precondition("tensor decomposition is implemented for types C and D");
    }
    let case = RootSystemCase::new(family, k);
    for w in [w1, w2] {
        if w.len() != k || !case.is_dominant(w.doubled()) {
            return precondition(format!("{w} is not dominant for {case}"));
        }
    }
    // only the dominant part of the product is needed
    let left = weyl_character_by_orbits(&case, w1)?;
    let right = weyl_character_by_orbits(&case, w2)?;
    let mut rest: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
    for ((a, _), x) in left.terms() {
        for ((b, _), y) in right.terms() {
            let s: Vec<i64> = a.iter().zip(b).map(|(p, q)| p + q).collect();
            if case.is_dominant(&s) {
                *rest.entry(s).or_insert_with(BigInt::zero) += x * y;
            }
        }
    }
    rest.retain(|_, c| !c.is_zero());
    let mut cache: HashMap<Vec<i64>, BTreeMap<Vec<i64>, i64>> = HashMap::new();
    let mut entries = BTreeMap::new();
    let mut last: Option<Vec<i64>> = None;
    while let Some((top, c)) = rest.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
        if !c.is_positive() {
            return Err(Error::LogicFault(format!("peeling met coefficient {c} at {top:?}")));
        }
        if last.as_ref().is_some_and(|l| *l <= top) {
            return Err(Error::LogicFault("peeling did not descend".into()));
        }
        if !cache.contains_key(&top) {
            let dom = dominant_multiplicities(&case, &GeneralizedVector::from_doubled(top.clone())?)?;
            cache.insert(top.clone(), dom);
        }
        for (e, m) in &cache[&top] {
            let entry = rest.entry(e.clone()).or_insert_with(BigInt::zero);
            *entry -= &c * *m;
            if entry.is_zero() {
                rest.remove(e);
            }
        }
        entries.insert(GeneralizedVector::from_doubled(top.clone())?, c);
        last = Some(top);
    }
    Ok(WeightTable { case, entries })
}

/// Highest weight of the so(2k) or sp(2k) module paired with λ on Λ(C^d ⊗ C^k).
///
/// The weight λ' - d/2 is written against the opposite Borel, so it is reversed and negated.
pub fn exterior_weight(lambda: &Partition, d: u32, k: usize) -> Result<GeneralizedVector> {
    if lambda.first_row() as usize > k {
        return precondition(format!("{lambda} has more than k={k} columns"));
    }
    let conj = lambda.conjugate();
    let w: Vec<i64> = (0..k).rev().map(|i| d as i64 - 2 * conj.row(i) as i64).collect();
    GeneralizedVector::from_doubled(w)
}

/// Inverse of `exterior_weight` for the total dimension d.
fn partition_from_weight(w: &GeneralizedVector, d: u32) -> Result<Partition> {
    let k = w.len();
    let mut cols = Vec::with_capacity(k);
    for i in 0..k {
        let twice = d as i64 - w.doubled()[k - 1 - i];
        if twice < 0 || twice % 2 != 0 {
            return Err(Error::LogicFault(format!("{w} does not come from a partition")));
        }
        cols.push((twice / 2) as u32);
    }
    Partition::new(cols).map(|c| c.conjugate()).map_err(|_| Error::LogicFault(format!("{w} does not come from a partition")))
}

fn check_factor(kind: SuperKind, nu: &Partition, d: u32, hook: Option<(usize, usize)>) -> Result<()> {
    kind.pair().check(nu, d)?;
    if let Some((m, n)) = hook {
        if !nu.in_hook(m, n) {
            return precondition(format!("{nu} is outside the ({m}|{n}) hook"));
        }
    }
    Ok(())
}

fn table_at_rank(
    mu: &Partition,
    gamma: &Partition,
    d: u32,
    r: u32,
    kind: SuperKind,
    k: usize,
    hook: Option<(usize, usize)>,
) -> Result<TensorTable> {
    check_factor(kind, mu, d, hook)?;
    check_factor(kind, gamma, r, hook)?;
    if k < (mu.first_row().max(gamma.first_row()) as usize).max(1) {
        return precondition(format!("rank {k} is below max(μ_1, γ_1, 1)"));
    }
    let family = match kind {
        SuperKind::Spo => Family::D,
        SuperKind::Osp => Family::C,
    };
    let classical = tensor_decompose_classical(family, k, &exterior_weight(mu, d, k)?, &exterior_weight(gamma, r, k)?)?;
    let total = d + r;
    let mut entries = BTreeMap::new();
    for (w, c) in classical.entries {
        let lam = partition_from_weight(&w, total)?;
        let keep = kind.pair().admits(&lam, total) && hook.map_or(true, |(m, n)| lam.in_hook(m, n));
        if keep {
            entries.insert(lam, c);
        }
    }
    Ok(TensorTable { kind, mu: mu.clone(), gamma: gamma.clone(), d, r, k, hook, entries })
}

/// c_λ for V^{μ+d/2} ⊗ V^{γ+r/2}, read off at rank k (default max(μ_1, γ_1)).
///
/// The table at rank k lists exactly the λ with λ_1 ≤ k.
#[allow(clippy::too_many_arguments)]
pub fn super_tensor_coeffs(
    mu: &Partition,
    gamma: &Partition,
    d: u32,
    r: u32,
    m: usize,
    n: usize,
    kind: SuperKind,
    k: Option<usize>,
) -> Result<TensorTable> {
    let k = k.unwrap_or_else(|| (mu.first_row().max(gamma.first_row()) as usize).max(1));
    table_at_rank(mu, gamma, d, r, kind, k, Some((m, n)))
}

/// Tables at ranks k and k+1 agree on every λ with λ_1 ≤ k.
pub fn verify_stability(mu: &Partition, gamma: &Partition, d: u32, r: u32, kind: SuperKind, k: usize) -> Result<VerificationReport> {
    let params = json!({"algebra": kind.name(), "mu": mu, "gamma": gamma, "d": d, "r": r, "k": k});
    let a = table_at_rank(mu, gamma, d, r, kind, k, None)?;
    let b = table_at_rank(mu, gamma, d, r, kind, k + 1, None)?;
    let low: BTreeMap<_, _> = b.entries.into_iter().filter(|(l, _)| l.first_row() as usize <= k).collect();
    let keys: std::collections::BTreeSet<&Partition> = a.entries.keys().chain(low.keys()).collect();
    for lam in &keys {
        let (x, y) = (a.entries.get(*lam).cloned().unwrap_or_default(), low.get(*lam).cloned().unwrap_or_default());
        if x != y {
            return Ok(VerificationReport {
                identity: "tensor-stability".into(),
                params,
                status: crate::verify::Status::Mismatch,
                first_mismatch: Some(crate::verify::Mismatch { monomial: lam.to_string(), lhs: x.to_string(), rhs: y.to_string() }),
                terms_checked: keys.len(),
            });
        }
    }
    Ok(VerificationReport {
        identity: "tensor-stability".into(),
        params,
        status: crate::verify::Status::ExactMatch,
        first_mismatch: None,
        terms_checked: keys.len(),
    })
}

fn spo_or_zero(nu: &Partition, d: u32, m: usize, n: usize, cap: u32) -> Result<PowerSeries> {
    if nu.in_hook(m, n) {
        Ok(spo_character(nu, d, m, n, cap)?.series)
    } else {
        Ok(PowerSeries::zero(Alphabet::yz(m, n), Some(cap)))
    }
}

/// Truncated check of ch(μ)·ch(γ) = Σ c_λ ch(λ).
///
/// For spo, d and r must be odd. Then only the λ, λ̄ sums are known on the
/// right, so the check pairs μ with μ̄ and γ with γ̄ on the left. For osp, d and
/// r must be even and the check is direct. The prefactors cancel.
#[allow(clippy::too_many_arguments)]
pub fn verify_character_product(
    mu: &Partition,
    gamma: &Partition,
    d: u32,
    r: u32,
    m: usize,
    n: usize,
    kind: SuperKind,
    cap: u32,
) -> Result<VerificationReport> {
    let params = json!({"algebra": kind.name(), "mu": mu, "gamma": gamma, "d": d, "r": r, "m": m, "n": n, "degree": cap});
    let k = (mu.first_row().max(gamma.first_row()).max(cap + 1)) as usize;
    let table = super_tensor_coeffs(mu, gamma, d, r, m, n, kind, Some(k))?;
    let pair = kind.pair();
    let total = d + r;
    let factor = super_factor(pair, m, n, cap)?;
    let (lhs, mut inner) = match kind {
        SuperKind::Spo => {
            if d % 2 == 0 || r % 2 == 0 {
                return precondition("the spo product check needs d and r odd");
            }
            let direct = spo_or_zero(mu, d, m, n, cap)?.mul(&spo_or_zero(gamma, r, m, n, cap)?)?;
            let barred = spo_or_zero(&bar_partition(mu, d)?, d, m, n, cap)?
                .mul(&spo_or_zero(&bar_partition(gamma, r)?, r, m, n, cap)?)?;
            (direct.add(&barred)?, PowerSeries::zero(Alphabet::yz(m, n), Some(cap)))
        }
        SuperKind::Osp => {
            if d % 2 == 1 || r % 2 == 1 {
                return precondition("the osp product check needs d and r even");
            }
            let lhs = osp_character(mu, d, m, n, cap)?.series.mul(&osp_character(gamma, r, m, n, cap)?.series)?;
            (lhs, PowerSeries::zero(Alphabet::yz(m, n), Some(cap)))
        }
    };
    for (lam, c) in &table.entries {
        let mut labels = vec![lam.clone()];
        if kind == SuperKind::Spo {
            // λ̄ can be much smaller than λ, e.g. (1^{d+r}) against ()
            labels.push(bar_partition(lam, total)?);
        }
        for nu in labels.iter().filter(|nu| nu.size() <= cap) {
            inner.add_scaled(&hs_series(nu, total, m, n, cap, pair)?.series, c)?;
        }
    }
    let rhs = inner.mul(&factor)?;
    Ok(compare_series("tensor-character-product", params, &lhs, &rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn gv(v: &[i64]) -> GeneralizedVector {
        GeneralizedVector::from_integers(v)
    }

    #[test]
    fn classical_examples() {
        let t = tensor_decompose_classical(Family::C, 1, &gv(&[1]), &gv(&[1])).unwrap();
        assert_eq!(t.entries.len(), 2);
        assert_eq!(t.get(&gv(&[2])), BigInt::from(1));
        assert_eq!(t.get(&gv(&[0])), BigInt::from(1));
        let t = tensor_decompose_classical(Family::D, 2, &gv(&[1, 0]), &gv(&[0, 0])).unwrap();
        assert_eq!(t.entries.len(), 1);
        assert_eq!(t.get(&gv(&[1, 0])), BigInt::from(1));
        let t = tensor_decompose_classical(Family::C, 1, &gv(&[1]), &gv(&[2])).unwrap();
        assert_eq!(t.entries.keys().cloned().collect::<Vec<_>>(), vec![gv(&[1]), gv(&[3])]);
    }

    #[test]
    fn rank_one_spo() {
        // so(2): (1/2) ⊗ (1/2) is the single weight 1, which is λ' = (2)
        let t = super_tensor_coeffs(&p(&[1]), &p(&[1]), 1, 1, 1, 1, SuperKind::Spo, Some(1)).unwrap();
        assert_eq!(t.entries, BTreeMap::from([(p(&[1, 1]), BigInt::from(1))]));
        let t = super_tensor_coeffs(&p(&[1]), &p(&[1]), 1, 1, 1, 1, SuperKind::Spo, Some(2)).unwrap();
        assert_eq!(t.entries.get(&p(&[2])), Some(&BigInt::from(1)));
        assert_eq!(t.entries.get(&p(&[1, 1])), Some(&BigInt::from(1)));
    }

    #[test]
    fn trivial_factor() {
        for kind in [SuperKind::Spo, SuperKind::Osp] {
            let t = super_tensor_coeffs(&p(&[1]), &p(&[]), 2, 2, 2, 2, kind, None).unwrap();
            assert_eq!(t.entries, BTreeMap::from([(p(&[1]), BigInt::from(1))]));
        }
    }
}
