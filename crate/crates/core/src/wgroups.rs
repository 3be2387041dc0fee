//! The integral Weyl groups W_{λ+d/2} of the Enright side and their coset data.
//!
//! For the pair `Osp` the Enright algebra is sp(2m) with ρ = (-1,…,-m); for
//! `SpO` it is so(2m) with ρ = (0,-1,…,-(m-1)). The weight examined is
//! μ = λ + d/2 + ρ, stored doubled.

use std::collections::BTreeSet;

use serde::Serialize;
use serde_json::{json, Value};

use crate::classical::permutation_sign;
use crate::combinatorics::Partition;
use crate::error::{precondition, Error, Result};
use crate::Pair;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    /// All sign changes on the index set.
    Full,
    /// Sign changes of even size only.
    Even,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignGroupSpec {
    /// Sorted, 1-based.
    pub index_set: Vec<usize>,
    pub parity: Parity,
    pub pair: Pair,
    pub d: u32,
    pub m: usize,
    pub lambda: Partition,
}

impl SignGroupSpec {
    /// Normal form under which two descriptions of the same coset structure agree.
    ///
    /// An even sign group on at most one index is trivial, and so is a full one on none.
    pub fn canonical(&self) -> (Vec<usize>, Parity) {
        match self.parity {
            Parity::Even if self.index_set.len() <= 1 => (Vec::new(), Parity::Even),
            Parity::Full if self.index_set.is_empty() => (Vec::new(), Parity::Even),
            p => (self.index_set.clone(), p),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "index_set": self.index_set,
            "parity": self.parity,
            "pair": self.pair.to_string(),
            "d": self.d,
            "m": self.m,
            "lambda": self.lambda,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CosetElement {
    /// Positions (1-based) whose sign is changed.
    pub flip: Vec<usize>,
    /// `sorting[t]` is the position of I that lands t-th after sorting τ(μ) on I decreasingly.
    #[serde(skip)]
    pub sorting: Vec<usize>,
    pub sign: i64,
}

impl CosetElement {
    pub fn identity() -> Self {
        CosetElement { flip: Vec::new(), sorting: Vec::new(), sign: 1 }
    }
}

/// μ = λ + d/2 + ρ at rank k, doubled.
pub fn mu_doubled(lambda: &Partition, d: u32, k: usize, pair: Pair) -> Vec<i64> {
    let shift = match pair {
        Pair::Osp => 0,
        Pair::SpO => 2,
    };
    (1..=k)
        .map(|i| 2 * lambda.row(i - 1) as i64 + d as i64 - 2 * i as i64 + shift)
        .collect()
}

/// ρ at rank k, doubled.
pub fn rho_doubled(k: usize, pair: Pair) -> Vec<i64> {
    match pair {
        Pair::Osp => (1..=k).map(|i| -2 * i as i64).collect(),
        Pair::SpO => (0..k).map(|i| -2 * i as i64).collect(),
    }
}

fn range_set(lo: i64, hi: i64) -> BTreeSet<i64> {
    (lo..=hi).collect()
}

/// The index set and parity read off from λ, d and the pair.
///
/// For O(d) with d odd and at least (d+1)/2 rows, the set is
/// ({d-s+1} ∪ {s+1..m}) minus {λ_i+d-i : i ≤ d-s}, the same shape as for d even
/// and more than d/2 rows; this agrees with the root-system scan.
pub fn closed_index_set(lambda: &Partition, d: u32, m: usize, pair: Pair) -> Result<SignGroupSpec> {
    pair.check(lambda, d)?;
    let s = lambda.len() as i64;
    let di = d as i64;
    let row = |i: i64| lambda.row((i - 1) as usize) as i64;
    let universe = range_set(1, m as i64);
    let complement = |j: BTreeSet<i64>| -> Vec<usize> {
        universe.difference(&j).map(|&i| i as usize).collect()
    };
    let tail = |lo: i64, hi: i64, shift: i64| -> BTreeSet<i64> { (lo..=hi).map(|i| row(i) + di - i + shift).collect() };
    let (index_set, parity) = match pair {
        Pair::SpO => {
            let mut j = range_set(1, di / 2);
            j.extend(tail(1, di / 2, 2));
            (complement(j), Parity::Even)
        }
        Pair::Osp => {
            let exclusion_case = if d % 2 == 0 { 2 * s > di } else { 2 * s >= di + 1 };
            if d % 2 == 0 && 2 * s == di {
                let mut j = range_set(1, di / 2);
                j.extend(tail(1, di / 2, 0));
                (complement(j), Parity::Full)
            } else if exclusion_case {
                let mut i_set: BTreeSet<i64> = range_set(s + 1, m as i64);
                i_set.insert(di - s + 1);
                for v in tail(1, di - s, 0) {
                    i_set.remove(&v);
                }
                (i_set.intersection(&universe).map(|&i| i as usize).collect(), Parity::Even)
            } else {
                let mut j = range_set(1, di - s - 1);
                j.extend(tail(1, s, 0));
                (complement(j), Parity::Even)
            }
        }
    };
    Ok(SignGroupSpec { index_set, parity, pair, d, m, lambda: lambda.clone() })
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn all_roots(m: usize, pair: Pair) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            for a in [1, -1] {
                for b in [1, -1] {
                    let mut v = vec![0; m];
                    v[i] = a;
                    v[j] = b;
                    out.push(v);
                }
            }
        }
    }
    if pair == Pair::Osp {
        for i in 0..m {
            for a in [2, -2] {
                let mut v = vec![0; m];
                v[i] = a;
                out.push(v);
            }
        }
    }
    out
}

fn expected_roots(index: &[usize], m: usize, full: bool) -> Vec<BTreeSet<Vec<i64>>> {
    let mut forms = Vec::new();
    let mut dset = BTreeSet::new();
    for (p, &a) in index.iter().enumerate() {
        for &b in &index[p + 1..] {
            for s in [1, -1] {
                for t in [1, -1] {
                    let mut v = vec![0; m];
                    v[a - 1] = s;
                    v[b - 1] = t;
                    dset.insert(v);
                }
            }
        }
    }
    if full {
        let mut c = dset;
        for &a in index {
            for s in [2, -2] {
                let mut v = vec![0; m];
                v[a - 1] = s;
                c.insert(v);
            }
        }
        forms.push(c);
        return forms;
    }
    if index.len() == 2 {
        let mut a1 = BTreeSet::new();
        for s in [1, -1] {
            let mut v = vec![0; m];
            v[index[0] - 1] = s;
            v[index[1] - 1] = s;
            a1.insert(v);
        }
        forms.push(a1);
    }
    forms.push(dset);
    forms
}

/// Scans the roots of the Enright nilradical for the integrality conditions and
/// closes the result under reflections.
///
/// A root α = -ε_i-ε_j or -2ε_i is kept when ⟨μ,α̌⟩ is a positive integer, α is
/// orthogonal to every root orthogonal to μ, and (type C only) α is short
/// whenever some long root is orthogonal to μ.
pub fn bruteforce_wlambda(lambda: &Partition, d: u32, m: usize, pair: Pair) -> Result<SignGroupSpec> {
    pair.check(lambda, d)?;
    let mu = mu_doubled(lambda, d, m, pair);
    let roots = all_roots(m, pair);
    let zero: Vec<&Vec<i64>> = roots.iter().filter(|b| dot(&mu, b) == 0).collect();
    let long_zero = pair == Pair::Osp && zero.iter().any(|b| dot(b, b) == 4);
    let mut phi: BTreeSet<Vec<i64>> = BTreeSet::new();
    for a in &roots {
        if a.iter().any(|&x| x > 0) {
            continue;
        }
        let aa = dot(a, a);
        // μ is doubled, so 2(μ,α)/(α,α) = (2μ,α)/(α,α)
        let num = dot(&mu, a);
        if num <= 0 || num % aa != 0 {
            continue;
        }
        if zero.iter().any(|b| dot(a, b) != 0) {
            continue;
        }
        if long_zero && aa == 4 {
            continue;
        }
        phi.insert(a.clone());
        phi.insert(a.iter().map(|x| -x).collect());
    }
    loop {
        let mut added = Vec::new();
        for g in &phi {
            let gg = dot(g, g);
            for h in &phi {
                let c = 2 * dot(h, g);
                if c % gg != 0 {
                    return Err(Error::LogicFault("non-integral reflection in the generated set".into()));
                }
                let c = c / gg;
                let r: Vec<i64> = h.iter().zip(g).map(|(x, y)| x - c * y).collect();
                if !phi.contains(&r) {
                    added.push(r);
                }
            }
        }
        if added.is_empty() {
            break;
        }
        phi.extend(added);
    }
    let mut spec = SignGroupSpec {
        index_set: Vec::new(),
        parity: Parity::Even,
        pair,
        d,
        m,
        lambda: lambda.clone(),
    };
    if phi.is_empty() {
        return Ok(spec);
    }
    let index: Vec<usize> = (0..m).filter(|&i| phi.iter().any(|g| g[i] != 0)).map(|i| i + 1).collect();
    let full = phi.iter().any(|g| dot(g, g) == 4 && g.iter().filter(|&&x| x != 0).count() == 1);
    if !expected_roots(&index, m, full).iter().any(|f| *f == phi) {
        return Err(Error::LogicFault(format!(
            "generated root set for {lambda}, d={d}, m={m} is not of sign-group type"
        )));
    }
    spec.index_set = index;
    spec.parity = if full { Parity::Full } else { Parity::Even };
    Ok(spec)
}

fn subsets(items: &[usize], even_only: bool) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for size in 0..=items.len() {
        if even_only && size % 2 == 1 {
            continue;
        }
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            out.push(idx.iter().map(|&i| items[i]).collect());
            let mut t = size;
            while t > 0 && idx[t - 1] == items.len() - size + t - 1 {
                t -= 1;
            }
            if t == 0 {
                break;
            }
            idx[t - 1] += 1;
            for u in t..size {
                idx[u] = idx[u - 1] + 1;
            }
        }
    }
    out
}

/// Coset representatives at rank k, one per (even) sign change of the index set.
///
/// The index set is recomputed at rank k from the data in `spec`.
pub fn coset_elements(spec: &SignGroupSpec, k: usize) -> Result<Vec<CosetElement>> {
    if k < spec.m {
        return precondition(format!("rank {k} is below the sign group's rank {}", spec.m));
    }
    if spec.lambda.len() > k {
        return precondition(format!("{} has more than {k} rows", spec.lambda));
    }
    let at_k = if k == spec.m { spec.clone() } else { closed_index_set(&spec.lambda, spec.d, k, spec.pair)? };
    let mu = mu_doubled(&spec.lambda, spec.d, k, spec.pair);
    let even = at_k.parity == Parity::Even;
    Ok(subsets(&at_k.index_set, even)
        .into_iter()
        .map(|flip| element_for(&at_k.index_set, &mu, flip))
        .collect())
}

fn element_for(index: &[usize], mu: &[i64], flip: Vec<usize>) -> CosetElement {
    let tau: Vec<i64> = index
        .iter()
        .map(|&i| if flip.contains(&i) { -mu[i - 1] } else { mu[i - 1] })
        .collect();
    let mut order: Vec<usize> = (0..index.len()).collect();
    order.sort_by(|&a, &b| tau[b].cmp(&tau[a]));
    let sign = permutation_sign(&order) * if flip.len() % 2 == 1 { -1 } else { 1 };
    CosetElement { sorting: order.iter().map(|&t| index[t]).collect(), flip, sign }
}

/// Same sign, computed by sorting τ(ρ) on the index set instead of τ(μ).
pub fn sign_via_rho(index: &[usize], k: usize, pair: Pair, flip: &[usize]) -> i64 {
    let rho = rho_doubled(k, pair);
    element_for(index, &rho, flip.to_vec()).sign
}

/// Flip, sort, and subtract ρ + d/2.
pub fn lambda_w(lambda: &Partition, d: u32, k: usize, w: &CosetElement, pair: Pair) -> Result<(Partition, i64)> {
    if lambda.len() > k {
        return precondition(format!("{lambda} has more than {k} rows"));
    }
    if w.flip.iter().any(|&i| i == 0 || i > k) {
        return precondition(format!("flip set {:?} is outside 1..{k}", w.flip));
    }
    let mu = mu_doubled(lambda, d, k, pair);
    let rho = rho_doubled(k, pair);
    let mut tau: Vec<i64> = mu
        .iter()
        .enumerate()
        .map(|(i, &v)| if w.flip.contains(&(i + 1)) { -v } else { v })
        .collect();
    tau.sort_unstable_by(|a, b| b.cmp(a));
    let mut rows = Vec::with_capacity(k);
    for i in 0..k {
        let v = tau[i] - rho[i] - d as i64;
        if v < 0 || v % 2 != 0 {
            return Err(Error::LogicFault(format!(
                "flipping {:?} for {lambda}, d={d}, k={k} does not give a partition",
                w.flip
            )));
        }
        rows.push((v / 2) as u32);
    }
    let p = Partition::new(rows).map_err(|_| {
        Error::LogicFault(format!("flipping {:?} for {lambda}, d={d}, k={k} does not give a partition", w.flip))
    })?;
    Ok((p, w.sign))
}

/// All (Λ_w, sign) at rank k.
pub fn enright_terms(lambda: &Partition, d: u32, k: usize, pair: Pair) -> Result<Vec<(Partition, i64)>> {
    let spec = closed_index_set(lambda, d, k, pair)?;
    coset_elements(&spec, k)?
        .iter()
        .map(|w| lambda_w(lambda, d, k, w, pair))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn closed_examples() {
        let s = closed_index_set(&p(&[]), 2, 4, Pair::Osp).unwrap();
        assert_eq!((s.index_set, s.parity), (vec![2, 3, 4], Parity::Even));
        let s = closed_index_set(&p(&[1]), 2, 5, Pair::SpO).unwrap();
        assert_eq!((s.index_set, s.parity), (vec![2, 3, 5], Parity::Even));
        let s = closed_index_set(&p(&[1]), 2, 4, Pair::Osp).unwrap();
        assert_eq!((s.index_set, s.parity), (vec![3, 4], Parity::Full));
        assert!(closed_index_set(&p(&[1, 1]), 2, 4, Pair::SpO).is_err());
    }

    #[test]
    fn brute_examples() {
        let s = bruteforce_wlambda(&p(&[]), 2, 3, Pair::Osp).unwrap();
        assert_eq!(s.canonical(), (vec![2, 3], Parity::Even));
        let s = bruteforce_wlambda(&p(&[1]), 2, 5, Pair::SpO).unwrap();
        assert_eq!(s.canonical(), (vec![2, 3, 5], Parity::Even));
        let a = bruteforce_wlambda(&p(&[4]), 2, 3, Pair::Osp).unwrap();
        let b = closed_index_set(&p(&[4]), 2, 3, Pair::Osp).unwrap();
        assert_eq!(a.canonical(), b.canonical());
    }

    #[test]
    fn odd_d_many_rows() {
        // one row and d = 1: every index carries an integral root
        let a = bruteforce_wlambda(&p(&[1]), 1, 8, Pair::Osp).unwrap();
        let b = closed_index_set(&p(&[1]), 1, 8, Pair::Osp).unwrap();
        assert_eq!(a.canonical(), (vec![1, 2, 3, 4, 5, 6, 7, 8], Parity::Even));
        assert_eq!(a.canonical(), b.canonical());
    }

    #[test]
    fn coset_examples() {
        let mk = |i: Vec<usize>, parity| SignGroupSpec { index_set: i, parity, pair: Pair::Osp, d: 1, m: 4, lambda: p(&[]) };
        let flips = |s: &SignGroupSpec| -> Vec<Vec<usize>> {
            subsets(&s.index_set, s.parity == Parity::Even)
        };
        assert_eq!(flips(&mk(vec![2, 3], Parity::Even)), vec![vec![], vec![2, 3]]);
        assert_eq!(flips(&mk(vec![3, 4], Parity::Full)), vec![vec![], vec![3], vec![4], vec![3, 4]]);
        assert_eq!(flips(&mk(vec![], Parity::Even)), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn lambda_w_examples() {
        let id = CosetElement::identity();
        assert_eq!(lambda_w(&p(&[2, 1]), 3, 3, &id, Pair::Osp).unwrap(), (p(&[2, 1]), 1));
        let spec = closed_index_set(&p(&[]), 3, 4, Pair::Osp).unwrap();
        let w = coset_elements(&spec, 4).unwrap().into_iter().find(|w| w.flip == vec![3, 4]).unwrap();
        assert_eq!(lambda_w(&p(&[]), 3, 4, &w, Pair::Osp).unwrap().0, p(&[2, 2, 2, 2]));
        let spec = closed_index_set(&p(&[]), 1, 2, Pair::Osp).unwrap();
        let w = coset_elements(&spec, 2).unwrap().into_iter().find(|w| w.flip == vec![1, 2]).unwrap();
        assert_eq!(lambda_w(&p(&[]), 1, 2, &w, Pair::Osp).unwrap(), (p(&[2, 2]), -1));
    }
}
