//! Weyl characters of so(2k+1), sp(2k), so(2k) and the O(d), Sp(d) group characters.
//!
//! Weights are in the standard basis ε_1..ε_k with doubled entries, dominant
//! meaning λ_1 ≥ … ≥ λ_k ≥ 0 (B, C) or λ_1 ≥ … ≥ λ_{k-1} ≥ |λ_k| (D).

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::combinatorics::{bar_partition, GeneralizedVector, Partition};
use crate::error::{precondition, Error, Result};
use crate::symfunc::{Alphabet, Monomial, PowerSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    B,
    C,
    D,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RootSystemCase {
    pub family: Family,
    pub rank: usize,
}

impl RootSystemCase {
    pub fn new(family: Family, rank: usize) -> Self {
        RootSystemCase { family, rank }
    }

    /// Half the sum of positive roots, doubled.
    pub fn rho_doubled(&self) -> Vec<i64> {
        let k = self.rank as i64;
        (0..k)
            .map(|i| match self.family {
                Family::B => 2 * (k - i) - 1,
                Family::C => 2 * (k - i),
                Family::D => 2 * (k - i - 1),
            })
            .collect()
    }

    pub fn weyl_group_order(&self) -> u64 {
        let fact: u64 = (1..=self.rank as u64).product();
        let signs = match self.family {
            Family::D if self.rank > 0 => 1u64 << (self.rank - 1),
            _ => 1u64 << self.rank,
        };
        fact * signs
    }

    /// Every element as (permutation, sign vector, determinant).
    pub fn weyl_group(&self) -> Vec<(Vec<usize>, Vec<i64>, i64)> {
        let k = self.rank;
        let mut out = Vec::new();
        for perm in permutations(k) {
            let ps = permutation_sign(&perm);
            for mask in 0u32..(1u32 << k) {
                let negs = mask.count_ones();
                if self.family == Family::D && negs % 2 == 1 {
                    continue;
                }
                let signs: Vec<i64> = (0..k).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
                let det = ps * if negs % 2 == 1 { -1 } else { 1 };
                out.push((perm.clone(), signs, det));
            }
        }
        out
    }

    pub fn is_dominant(&self, w: &[i64]) -> bool {
        if w.len() != self.rank || !same_parity(w) {
            return false;
        }
        if self.family == Family::C && w.iter().any(|v| v % 2 != 0) {
            return false;
        }
        let k = self.rank;
        if k == 0 {
            return true;
        }
        match self.family {
            Family::B | Family::C => w.windows(2).all(|p| p[0] >= p[1]) && w[k - 1] >= 0,
            Family::D => k == 1 || (w[..k - 1].windows(2).all(|p| p[0] >= p[1]) && w[k - 2] >= w[k - 1].abs()),
        }
    }

    /// Positive roots, undoubled.
    pub fn positive_roots(&self) -> Vec<Vec<i64>> {
        let k = self.rank;
        let mut out = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                for s in [1, -1] {
                    let mut v = vec![0; k];
                    v[i] = 1;
                    v[j] = s;
                    out.push(v);
                }
            }
            match self.family {
                Family::B => {
                    let mut v = vec![0; k];
                    v[i] = 1;
                    out.push(v);
                }
                Family::C => {
                    let mut v = vec![0; k];
                    v[i] = 2;
                    out.push(v);
                }
                Family::D => {}
            }
        }
        out
    }
}

impl fmt::Display for RootSystemCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

fn same_parity(w: &[i64]) -> bool {
    w.first().map_or(true, |f| w.iter().all(|v| v.rem_euclid(2) == f.rem_euclid(2)))
}

pub(crate) fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    heap_permute(k, &mut cur, &mut out);
    out.sort();
    out
}

fn heap_permute(n: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if n <= 1 {
        out.push(a.clone());
        return;
    }
    for i in 0..n - 1 {
        heap_permute(n - 1, a, out);
        if n % 2 == 0 {
            a.swap(i, n - 1);
        } else {
            a.swap(0, n - 1);
        }
    }
    heap_permute(n - 1, a, out);
}

pub(crate) fn permutation_sign(p: &[usize]) -> i64 {
    let mut s = 1;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                s = -s;
            }
        }
    }
    s
}

/// A finite Laurent polynomial in doubled exponents with an optional eps bit.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentCharacter {
    rank: usize,
    terms: BTreeMap<(Vec<i64>, u8), BigInt>,
}

impl LaurentCharacter {
    pub fn zero(rank: usize) -> Self {
        LaurentCharacter { rank, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize) -> Self {
        let mut c = LaurentCharacter::zero(rank);
        c.add_term(vec![0; rank], 0, BigInt::one());
        c
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> &BTreeMap<(Vec<i64>, u8), BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, doubled: Vec<i64>, eps: u8, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let key = (doubled, eps & 1);
        let e = self.terms.entry(key.clone()).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn coeff(&self, doubled: &[i64], eps: u8) -> BigInt {
        self.terms.get(&(doubled.to_vec(), eps)).cloned().unwrap_or_default()
    }

    pub fn add(&self, other: &LaurentCharacter) -> LaurentCharacter {
        let mut out = self.clone();
        for ((e, s), c) in &other.terms {
            out.add_term(e.clone(), *s, c.clone());
        }
        out
    }

    pub fn scale(&self, k: &BigInt) -> LaurentCharacter {
        let mut out = LaurentCharacter::zero(self.rank);
        for ((e, s), c) in &self.terms {
            out.add_term(e.clone(), *s, c * k);
        }
        out
    }

    pub fn mul(&self, other: &LaurentCharacter) -> LaurentCharacter {
        let mut out = LaurentCharacter::zero(self.rank);
        for ((ea, sa), ca) in &self.terms {
            for ((eb, sb), cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, sa ^ sb, ca * cb);
            }
        }
        out
    }

    /// Multiplies by eps^t.
    pub fn twist(&self, t: u8) -> LaurentCharacter {
        let mut out = LaurentCharacter::zero(self.rank);
        for ((e, s), c) in &self.terms {
            out.add_term(e.clone(), s ^ (t & 1), c.clone());
        }
        out
    }

    /// Forgets eps (evaluates it at 1).
    pub fn drop_eps(&self) -> LaurentCharacter {
        self.twist(0).terms.iter().fold(LaurentCharacter::zero(self.rank), |mut acc, ((e, _), c)| {
            acc.add_term(e.clone(), 0, c.clone());
            acc
        })
    }

    /// Sum of coefficients.
    pub fn dimension(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn all_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Whether every Weyl group generator of `family` fixes the polynomial.
    pub fn is_weyl_invariant(&self, family: Family) -> bool {
        let k = self.rank;
        let mut gens: Vec<Box<dyn Fn(&[i64]) -> Vec<i64>>> = Vec::new();
        for i in 0..k.saturating_sub(1) {
            gens.push(Box::new(move |v: &[i64]| {
                let mut w = v.to_vec();
                w.swap(i, i + 1);
                w
            }));
        }
        if k >= 1 {
            match family {
                Family::B | Family::C => gens.push(Box::new(move |v: &[i64]| {
                    let mut w = v.to_vec();
                    w[k - 1] = -w[k - 1];
                    w
                })),
                Family::D if k >= 2 => gens.push(Box::new(move |v: &[i64]| {
                    let mut w = v.to_vec();
                    let (a, b) = (w[k - 2], w[k - 1]);
                    w[k - 2] = -b;
                    w[k - 1] = -a;
                    w
                })),
                Family::D => {}
            }
        }
        gens.iter().all(|g| {
            self.terms
                .iter()
                .all(|((e, s), c)| self.terms.get(&(g(e), *s)) == Some(c))
        })
    }

    /// Converts to a series in the x group; exponents must be integral.
    pub fn to_series(&self, alph: Alphabet, cap: Option<u32>) -> Result<PowerSeries> {
        if alph.x != self.rank {
            return Err(Error::AlphabetMismatch(format!("rank {} into {} x-variables", self.rank, alph.x)));
        }
        let mut out = PowerSeries::zero(alph, cap);
        let zeros_y = vec![0; alph.y];
        let zeros_z = vec![0; alph.z];
        for ((e, s), c) in &self.terms {
            if e.iter().any(|v| v % 2 != 0) {
                return precondition("half-integral exponents cannot be placed in a series");
            }
            let x: Vec<i32> = e.iter().map(|v| (v / 2) as i32).collect();
            let mono = Monomial::new(&alph, &x, &zeros_y, &zeros_z, *s)?;
            out.add_term(mono, c.clone());
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|((e, s), c)| {
                    let ex: Vec<String> = e.iter().map(|&v| crate::combinatorics::half_to_string(v)).collect();
                    json!({"exp": {"x": ex, "eps": s}, "coeff": c.to_string()})
                })
                .collect(),
        )
    }
}

impl fmt::Display for LaurentCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|((e, s), c)| {
                let mut factors = Vec::new();
                if *s == 1 {
                    factors.push("eps".to_string());
                }
                for (i, &v) in e.iter().enumerate() {
                    match v {
                        0 => {}
                        2 => factors.push(format!("x{}", i + 1)),
                        _ => factors.push(format!("x{}^{}", i + 1, crate::combinatorics::half_to_string(v))),
                    }
                }
                let mono = if factors.is_empty() { "1".to_string() } else { factors.join("*") };
                if c.is_one() {
                    mono
                } else {
                    format!("{c}*{mono}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn alternant(case: &RootSystemCase, v: &[i64]) -> BTreeMap<Vec<i64>, i64> {
    let mut out: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    for (perm, signs, det) in case.weyl_group() {
        let w: Vec<i64> = (0..case.rank).map(|i| signs[i] * v[perm[i]]).collect();
        *out.entry(w).or_insert(0) += det;
    }
    out.retain(|_, c| *c != 0);
    out
}

fn sub_vec(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Exact division by repeated elimination of the lex-leading term.
fn divide(num: BTreeMap<Vec<i64>, i64>, den: &BTreeMap<Vec<i64>, i64>) -> Result<BTreeMap<Vec<i64>, i64>> {
    let mut num = num;
    let mut quot = BTreeMap::new();
    let (dlead, dc) = den.iter().next_back().map(|(k, v)| (k.clone(), *v)).ok_or_else(|| {
        Error::LogicFault("empty denominator".into())
    })?;
    let floor = match (num.keys().next(), den.keys().next()) {
        (Some(a), Some(b)) => sub_vec(a, b),
        _ => return Ok(quot),
    };
    while let Some((lead, c)) = num.iter().next_back().map(|(k, v)| (k.clone(), *v)) {
        if c % dc != 0 {
            return Err(Error::LogicFault("alternant division left a remainder".into()));
        }
        let q = c / dc;
        let e = sub_vec(&lead, &dlead);
        if e < floor {
            return Err(Error::LogicFault("alternant division did not terminate exactly".into()));
        }
        for (de, dv) in den {
            let key: Vec<i64> = e.iter().zip(de).map(|(a, b)| a + b).collect();
            let entry = num.entry(key.clone()).or_insert(0);
            *entry = entry
                .checked_sub(q.checked_mul(*dv).ok_or_else(|| Error::LogicFault("overflow".into()))?)
                .ok_or_else(|| Error::LogicFault("overflow".into()))?;
            if *entry == 0 {
                num.remove(&key);
            }
        }
        quot.insert(e, q);
    }
    Ok(quot)
}

/// Weyl character as an alternant quotient, exponents doubled.
pub fn weyl_character(case: &RootSystemCase, lambda: &GeneralizedVector) -> Result<LaurentCharacter> {
    let w = lambda.doubled();
    if !case.is_dominant(w) {
        return precondition(format!("{lambda} is not dominant for {case}"));
    }
    let mut out = LaurentCharacter::zero(case.rank);
    if case.rank == 0 {
        out.add_term(Vec::new(), 0, BigInt::one());
        return Ok(out);
    }
    let rho = case.rho_doubled();
    let shifted: Vec<i64> = w.iter().zip(&rho).map(|(a, b)| a + b).collect();
    let q = divide(alternant(case, &shifted), &alternant(case, &rho))?;
    for (e, c) in q {
        out.add_term(e, 0, BigInt::from(c));
    }
    Ok(out)
}

/// Dominant representative of the W-orbit of a doubled weight.
pub fn dominant_representative(case: &RootSystemCase, w: &[i64]) -> Vec<i64> {
    if case.family == Family::D && case.rank == 1 {
        return w.to_vec();
    }
    let mut v: Vec<i64> = w.iter().map(|x| x.abs()).collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    if case.family == Family::D && !v.is_empty() && !w.contains(&0) {
        let negatives = w.iter().filter(|x| **x < 0).count();
        if negatives % 2 == 1 {
            let last = v.len() - 1;
            v[last] = -v[last];
        }
    }
    v
}

/// The W-orbit of a doubled weight.
pub fn weyl_orbit(case: &RootSystemCase, w: &[i64]) -> Vec<Vec<i64>> {
    let k = case.rank;
    let mut seen = std::collections::BTreeSet::new();
    let mut stack = vec![w.to_vec()];
    seen.insert(w.to_vec());
    while let Some(v) = stack.pop() {
        let mut next = Vec::new();
        for i in 0..k.saturating_sub(1) {
            let mut u = v.clone();
            u.swap(i, i + 1);
            next.push(u);
        }
        if k >= 1 {
            match case.family {
                Family::B | Family::C => {
                    let mut u = v.clone();
                    u[k - 1] = -u[k - 1];
                    next.push(u);
                }
                Family::D if k >= 2 => {
                    let mut u = v.clone();
                    let (a, b) = (u[k - 2], u[k - 1]);
                    u[k - 2] = -b;
                    u[k - 1] = -a;
                    next.push(u);
                }
                Family::D => {}
            }
        }
        for u in next {
            if seen.insert(u.clone()) {
                stack.push(u);
            }
        }
    }
    seen.into_iter().collect()
}

/// Multiplicities of the dominant weights of V(λ), by Freudenthal's recursion.
///
/// Works in doubled coordinates, where the recursion stays integral:
/// m(μ) = 2 Σ_{α>0} Σ_{j≥1} m(μ+jα)(μ+jα, α) / (|λ+ρ|² - |μ+ρ|²).
pub fn dominant_multiplicities(case: &RootSystemCase, lambda: &GeneralizedVector) -> Result<BTreeMap<Vec<i64>, i64>> {
    let top = lambda.doubled().to_vec();
    if !case.is_dominant(&top) {
        return precondition(format!("{lambda} is not dominant for {case}"));
    }
    // D1 is a torus, its only weight is λ itself
    if case.rank == 0 || (case.family == Family::D && case.rank == 1) {
        return Ok(BTreeMap::from([(top, 1)]));
    }
    let roots: Vec<Vec<i64>> = case.positive_roots().into_iter().map(|r| r.iter().map(|x| 2 * x).collect()).collect();
    let mut weights = std::collections::BTreeSet::new();
    let mut stack = vec![top.clone()];
    weights.insert(top.clone());
    while let Some(mu) = stack.pop() {
        for a in &roots {
            let nu = sub_vec(&mu, a);
            if case.is_dominant(&nu) && weights.insert(nu.clone()) {
                stack.push(nu);
            }
        }
    }
    let k = case.rank as i64;
    let level = |v: &[i64]| -> i64 { v.iter().enumerate().map(|(i, x)| (k - i as i64) * x).sum() };
    let mut order: Vec<Vec<i64>> = weights.into_iter().collect();
    order.sort_by_key(|v| std::cmp::Reverse(level(v)));
    let rho = case.rho_doubled();
    let norm = |v: &[i64]| -> i64 { v.iter().zip(&rho).map(|(x, p)| (x + p) * (x + p)).sum() };
    let dot = |a: &[i64], b: &[i64]| -> i64 { a.iter().zip(b).map(|(x, y)| x * y).sum() };
    let top_norm = norm(&top);
    let mut mult: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    mult.insert(top.clone(), 1);
    for mu in order.iter().skip(1) {
        let mut acc: i64 = 0;
        for a in &roots {
            let mut j = 1;
            loop {
                let v: Vec<i64> = mu.iter().zip(a).map(|(x, y)| x + j * y).collect();
                match mult.get(&dominant_representative(case, &v)) {
                    Some(m) => {
                        acc = m
                            .checked_mul(dot(&v, a))
                            .and_then(|t| acc.checked_add(t))
                            .ok_or_else(|| Error::LogicFault("multiplicity overflow".into()))?;
                    }
                    None => break,
                }
                j += 1;
            }
        }
        let den = top_norm - norm(mu);
        if den <= 0 || (2 * acc) % den != 0 {
            return Err(Error::LogicFault(format!("Freudenthal recursion is not integral at {mu:?}")));
        }
        let m = 2 * acc / den;
        if m > 0 {
            mult.insert(mu.clone(), m);
        }
    }
    Ok(mult)
}

/// Weyl character assembled from dominant multiplicities and orbits.
pub fn weyl_character_by_orbits(case: &RootSystemCase, lambda: &GeneralizedVector) -> Result<LaurentCharacter> {
    let mut out = LaurentCharacter::zero(case.rank);
    for (mu, m) in dominant_multiplicities(case, lambda)? {
        for w in weyl_orbit(case, &mu) {
            out.add_term(w, 0, BigInt::from(m));
        }
    }
    Ok(out)
}

/// Dimension by the Weyl product formula.
pub fn weyl_dimension(case: &RootSystemCase, lambda: &GeneralizedVector) -> Result<BigInt> {
    let w = lambda.doubled();
    if !case.is_dominant(w) {
        return precondition(format!("{lambda} is not dominant for {case}"));
    }
    let rho = case.rho_doubled();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for alpha in case.positive_roots() {
        let a: i64 = alpha.iter().zip(w.iter().zip(&rho)).map(|(r, (x, p))| r * (x + p)).sum();
        let b: i64 = alpha.iter().zip(&rho).map(|(r, p)| r * p).sum();
        num *= a;
        den *= b;
    }
    if (&num % &den) != BigInt::zero() {
        return Err(Error::LogicFault("Weyl dimension is not an integer".into()));
    }
    Ok(num / den)
}

fn padded_doubled(lambda: &Partition, k: usize) -> Vec<i64> {
    (0..k).map(|i| 2 * lambda.row(i) as i64).collect()
}

/// Character of the O(d)-module labelled by λ on the maximal torus of SO(d).
///
/// For d odd and `with_eps` the result is multiplied by eps^{|λ|}.
pub fn o_character(d: u32, lambda: &Partition, with_eps: bool) -> Result<LaurentCharacter> {
    if d == 0 || lambda.two_column_sum() > d {
        return precondition(format!("{lambda} needs its first two columns to sum to at most d={d}"));
    }
    let k = (d / 2) as usize;
    let rep = if lambda.column(0) as usize > k { bar_partition(lambda, d)? } else { lambda.clone() };
    if d % 2 == 1 {
        let ch = weyl_character(&RootSystemCase::new(Family::B, k), &GeneralizedVector::from_doubled(padded_doubled(&rep, k))?)?;
        let t = if with_eps { (lambda.size() % 2) as u8 } else { 0 };
        return Ok(ch.twist(t));
    }
    let case = RootSystemCase::new(Family::D, k);
    let w = padded_doubled(&rep, k);
    let ch = weyl_character(&case, &GeneralizedVector::from_doubled(w.clone())?)?;
    if k > 0 && rep.len() == k {
        let mut w2 = w;
        w2[k - 1] = -w2[k - 1];
        let ch2 = weyl_character(&case, &GeneralizedVector::from_doubled(w2)?)?;
        return Ok(ch.add(&ch2));
    }
    Ok(ch)
}

/// Dimension of the O(d)-module labelled by λ.
pub fn o_dimension(d: u32, lambda: &Partition) -> Result<BigInt> {
    if d == 0 || lambda.two_column_sum() > d {
        return precondition(format!("{lambda} needs its first two columns to sum to at most d={d}"));
    }
    let k = (d / 2) as usize;
    let rep = if lambda.column(0) as usize > k { bar_partition(lambda, d)? } else { lambda.clone() };
    let fam = if d % 2 == 1 { Family::B } else { Family::D };
    let dim = weyl_dimension(&RootSystemCase::new(fam, k), &GeneralizedVector::from_doubled(padded_doubled(&rep, k))?)?;
    if d % 2 == 0 && k > 0 && rep.len() == k {
        Ok(dim * 2)
    } else {
        Ok(dim)
    }
}

/// Character of the Sp(d)-module labelled by λ.
pub fn sp_group_character(d: u32, lambda: &Partition) -> Result<LaurentCharacter> {
    if d == 0 || d % 2 == 1 {
        return precondition(format!("Sp(d) needs d even and positive, got {d}"));
    }
    let k = (d / 2) as usize;
    if lambda.len() > k {
        return precondition(format!("{lambda} has more than d/2={k} rows"));
    }
    weyl_character(&RootSystemCase::new(Family::C, k), &GeneralizedVector::from_doubled(padded_doubled(lambda, k))?)
}

pub fn sp_dimension(d: u32, lambda: &Partition) -> Result<BigInt> {
    if d == 0 || d % 2 == 1 || lambda.len() > (d / 2) as usize {
        return precondition(format!("{lambda} is not a Sp({d}) label"));
    }
    let k = (d / 2) as usize;
    weyl_dimension(&RootSystemCase::new(Family::C, k), &GeneralizedVector::from_doubled(padded_doubled(lambda, k))?)
}
