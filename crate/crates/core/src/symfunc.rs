//! Truncated multivariate series, Schur and hook Schur polynomials.
//!
//! A series lives on three variable groups: `x` (Laurent, never truncated),
//! `y` and `z` (power series, truncated by their joint total degree), plus an
//! optional sign variable with eps^2 = 1.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::combinatorics::{enumerate_hook_tableaux, subpartitions, Letter, Partition};
use crate::error::{precondition, Error, Result};
use crate::IdentityId;

/// Sizes of the three variable groups and whether eps is present.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Default)]
pub struct Alphabet {
    pub x: usize,
    pub y: usize,
    pub z: usize,
    pub eps: bool,
}

impl Alphabet {
    pub fn new(x: usize, y: usize, z: usize, eps: bool) -> Self {
        Alphabet { x, y, z, eps }
    }

    pub fn yz(y: usize, z: usize) -> Self {
        Alphabet { x: 0, y, z, eps: false }
    }

    pub fn width(&self) -> usize {
        self.x + self.y + self.z
    }

    fn fits_in(&self, other: &Alphabet) -> bool {
        self.x <= other.x && self.y <= other.y && self.z <= other.z && (!self.eps || other.eps)
    }
}

/// Variable group selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Slot {
    X,
    Y,
    Z,
}

/// Exponent vector ordered by capped degree, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    deg: u32,
    exps: Vec<i32>,
    eps: u8,
}

impl Monomial {
    pub fn one(alph: &Alphabet) -> Self {
        Monomial { deg: 0, exps: vec![0; alph.width()], eps: 0 }
    }

    pub fn new(alph: &Alphabet, x: &[i32], y: &[i32], z: &[i32], eps: u8) -> Result<Self> {
        if x.len() != alph.x || y.len() != alph.y || z.len() != alph.z {
            return Err(Error::AlphabetMismatch(format!(
                "exponent lengths ({},{},{}) against alphabet ({},{},{})",
                x.len(),
                y.len(),
                z.len(),
                alph.x,
                alph.y,
                alph.z
            )));
        }
        if y.iter().chain(z).any(|&e| e < 0) {
            return precondition("negative exponent in a power-series variable");
        }
        if eps > 1 || (eps == 1 && !alph.eps) {
            return Err(Error::AlphabetMismatch("eps used outside an eps alphabet".into()));
        }
        let mut exps = Vec::with_capacity(alph.width());
        exps.extend_from_slice(x);
        exps.extend_from_slice(y);
        exps.extend_from_slice(z);
        let deg = y.iter().chain(z).map(|&e| e as u32).sum();
        Ok(Monomial { deg, exps, eps })
    }

    /// A single variable to the first power.
    pub fn var(alph: &Alphabet, slot: Slot, i: usize) -> Self {
        let mut m = Monomial::one(alph);
        let pos = match slot {
            Slot::X => i,
            Slot::Y => alph.x + i,
            Slot::Z => alph.x + alph.y + i,
        };
        m.exps[pos] = 1;
        if slot != Slot::X {
            m.deg = 1;
        }
        m
    }

    pub fn with_eps(mut self, eps: u8) -> Self {
        self.eps = eps & 1;
        self
    }

    /// Total degree in the y and z groups.
    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn exponents(&self) -> &[i32] {
        &self.exps
    }

    pub fn eps(&self) -> u8 {
        self.eps
    }

    pub fn part<'a>(&'a self, alph: &Alphabet, slot: Slot) -> &'a [i32] {
        match slot {
            Slot::X => &self.exps[..alph.x],
            Slot::Y => &self.exps[alph.x..alph.x + alph.y],
            Slot::Z => &self.exps[alph.x + alph.y..],
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            deg: self.deg + other.deg,
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
            eps: self.eps ^ other.eps,
        }
    }

    pub fn pow(&self, t: u32) -> Monomial {
        Monomial {
            deg: self.deg * t,
            exps: self.exps.iter().map(|e| e * t as i32).collect(),
            eps: if t % 2 == 0 { 0 } else { self.eps },
        }
    }

    pub fn render(&self, alph: &Alphabet) -> String {
        let mut parts = Vec::new();
        if self.eps == 1 {
            parts.push("eps".to_string());
        }
        for (slot, name) in [(Slot::X, "x"), (Slot::Y, "y"), (Slot::Z, "z")] {
            for (i, &e) in self.part(alph, slot).iter().enumerate() {
                match e {
                    0 => {}
                    1 => parts.push(format!("{name}{}", i + 1)),
                    _ => parts.push(format!("{name}{}^{e}", i + 1)),
                }
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    pub fn to_json(&self, alph: &Alphabet) -> Value {
        json!({
            "x": self.part(alph, Slot::X),
            "y": self.part(alph, Slot::Y),
            "z": self.part(alph, Slot::Z),
            "eps": self.eps,
        })
    }
}

/// Exact series with integer coefficients, truncated above `cap` in y,z-degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    alph: Alphabet,
    cap: Option<u32>,
    terms: BTreeMap<Monomial, BigInt>,
}

impl PowerSeries {
    pub fn zero(alph: Alphabet, cap: Option<u32>) -> Self {
        PowerSeries { alph, cap, terms: BTreeMap::new() }
    }

    pub fn one(alph: Alphabet, cap: Option<u32>) -> Self {
        let mut s = PowerSeries::zero(alph, cap);
        s.terms.insert(Monomial::one(&alph), BigInt::one());
        s
    }

    pub fn from_monomial(alph: Alphabet, cap: Option<u32>, mono: Monomial, coeff: BigInt) -> Self {
        let mut s = PowerSeries::zero(alph, cap);
        s.add_term(mono, coeff);
        s
    }

    /// 1 + mono.
    pub fn one_plus(alph: Alphabet, cap: Option<u32>, mono: Monomial) -> Self {
        let mut s = PowerSeries::one(alph, cap);
        s.add_term(mono, BigInt::one());
        s
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alph
    }

    pub fn cap(&self) -> Option<u32> {
        self.cap
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, BigInt> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mono: &Monomial) -> BigInt {
        self.terms.get(mono).cloned().unwrap_or_default()
    }

    fn within_cap(&self, deg: u32) -> bool {
        self.cap.map_or(true, |c| deg <= c)
    }

    pub fn add_term(&mut self, mono: Monomial, coeff: BigInt) {
        debug_assert_eq!(mono.exps.len(), self.alph.width());
        if coeff.is_zero() || !self.within_cap(mono.deg) {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_alphabet(&self, other: &PowerSeries) -> Result<()> {
        if self.alph != other.alph {
            return Err(Error::AlphabetMismatch(format!("{:?} vs {:?}", self.alph, other.alph)));
        }
        Ok(())
    }

    fn joint_cap(&self, other: &PowerSeries) -> Option<u32> {
        match (self.cap, other.cap) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, None) => a,
            (None, b) => b,
        }
    }

    pub fn add(&self, other: &PowerSeries) -> Result<PowerSeries> {
        self.check_alphabet(other)?;
        let mut out = self.clone();
        out.cap = self.joint_cap(other);
        out.terms.retain(|m, _| out.cap.map_or(true, |c| m.deg <= c));
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &PowerSeries) -> Result<PowerSeries> {
        self.add(&other.neg())
    }

    pub fn add_scaled(&mut self, other: &PowerSeries, k: &BigInt) -> Result<()> {
        self.check_alphabet(other)?;
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c * k);
        }
        Ok(())
    }

    pub fn neg(&self) -> PowerSeries {
        self.scale(&BigInt::from(-1))
    }

    pub fn scale(&self, k: &BigInt) -> PowerSeries {
        let mut out = PowerSeries::zero(self.alph, self.cap);
        if k.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect();
        out
    }

    /// Multiplies every term by a monomial.
    pub fn shift(&self, mono: &Monomial) -> PowerSeries {
        let mut out = PowerSeries::zero(self.alph, self.cap);
        for (m, c) in &self.terms {
            out.add_term(m.mul(mono), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &PowerSeries) -> Result<PowerSeries> {
        self.check_alphabet(other)?;
        let cap = self.joint_cap(other);
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (ma, ca) in &self.terms {
            if cap.map_or(false, |c| ma.deg > c) {
                break;
            }
            for (mb, cb) in &other.terms {
                if cap.map_or(false, |c| ma.deg + mb.deg > c) {
                    break;
                }
                *acc.entry(ma.mul(mb)).or_default() += ca * cb;
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(PowerSeries { alph: self.alph, cap, terms })
    }

    pub fn truncate(&self, cap: u32) -> PowerSeries {
        let cap = self.cap.map_or(cap, |c| c.min(cap));
        PowerSeries {
            alph: self.alph,
            cap: Some(cap),
            terms: self.terms.iter().filter(|(m, _)| m.deg <= cap).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// 1/(1 - mono) expanded up to the cap.
    pub fn geometric(alph: Alphabet, cap: u32, mono: &Monomial) -> Result<PowerSeries> {
        if mono.deg == 0 {
            return Err(Error::NotInvertible(format!(
                "1/(1-{}) has no y,z-degree to truncate by",
                mono.render(&alph)
            )));
        }
        let mut s = PowerSeries::zero(alph, Some(cap));
        let mut t = 0u32;
        while t * mono.deg <= cap {
            s.add_term(mono.pow(t), BigInt::one());
            t += 1;
        }
        Ok(s)
    }

    /// Places the series in a larger alphabet, keeping each group's variables in order.
    pub fn embed(&self, target: Alphabet) -> Result<PowerSeries> {
        if !self.alph.fits_in(&target) {
            return Err(Error::AlphabetMismatch(format!("cannot embed {:?} into {:?}", self.alph, target)));
        }
        if self.alph == target {
            return Ok(self.clone());
        }
        let mut out = PowerSeries::zero(target, self.cap);
        for (m, c) in &self.terms {
            let mut exps = vec![0; target.width()];
            for (slot, off) in [(Slot::X, 0), (Slot::Y, target.x), (Slot::Z, target.x + target.y)] {
                for (i, &e) in m.part(&self.alph, slot).iter().enumerate() {
                    exps[off + i] = e;
                }
            }
            out.terms.insert(Monomial { deg: m.deg, exps, eps: m.eps }, c.clone());
        }
        Ok(out)
    }

    /// Moves the y group onto the z group (both must have the same size).
    pub fn y_to_z(&self) -> PowerSeries {
        let a = self.alph;
        let target = Alphabet { x: a.x, y: a.z, z: a.y, eps: a.eps };
        let mut out = PowerSeries::zero(target, self.cap);
        for (m, c) in &self.terms {
            let mut exps = m.part(&a, Slot::X).to_vec();
            exps.extend_from_slice(m.part(&a, Slot::Z));
            exps.extend_from_slice(m.part(&a, Slot::Y));
            out.terms.insert(Monomial { deg: m.deg, exps, eps: m.eps }, c.clone());
        }
        out
    }

    /// Value at x = y = z = eps = 1.
    pub fn total(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn all_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// First monomial, in series order, where the two series differ.
    pub fn first_difference(&self, other: &PowerSeries) -> Option<(Monomial, BigInt, BigInt)> {
        let keys: std::collections::BTreeSet<&Monomial> = self.terms.keys().chain(other.terms.keys()).collect();
        for k in keys {
            let (a, b) = (self.coeff(k), other.coeff(k));
            if a != b {
                return Some((k.clone(), a, b));
            }
        }
        None
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(m, c)| json!({"exp": m.to_json(&self.alph), "coeff": c.to_string()}))
                .collect(),
        )
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mono = m.render(&self.alph);
            if mono == "1" {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

/// Weight counts of semistandard fillings of the skew shape `outer / inner` in `k` letters.
pub fn skew_ssyt_weights(outer: &Partition, inner: &Partition, k: usize) -> Result<BTreeMap<Vec<u32>, u64>> {
    if !outer.contains(inner) {
        return precondition(format!("{inner} is not contained in {outer}"));
    }
    let cells: Vec<(usize, usize)> = (0..outer.len())
        .flat_map(|i| (inner.row(i) as usize..outer.row(i) as usize).map(move |j| (i, j)))
        .collect();
    let mut grid: Vec<Vec<u32>> = (0..outer.len()).map(|i| vec![0; outer.row(i) as usize]).collect();
    let mut out = BTreeMap::new();
    let mut weight = vec![0u32; k];
    fill_skew(inner, &cells, 0, k as u32, &mut grid, &mut weight, &mut out);
    Ok(out)
}

fn fill_skew(
    inner: &Partition,
    cells: &[(usize, usize)],
    t: usize,
    k: u32,
    grid: &mut Vec<Vec<u32>>,
    weight: &mut Vec<u32>,
    out: &mut BTreeMap<Vec<u32>, u64>,
) {
    if t == cells.len() {
        *out.entry(weight.clone()).or_insert(0) += 1;
        return;
    }
    let (i, j) = cells[t];
    let mut lo = 1;
    if j > inner.row(i) as usize {
        lo = lo.max(grid[i][j - 1]);
    }
    if i > 0 && j >= inner.row(i - 1) as usize {
        lo = lo.max(grid[i - 1][j] + 1);
    }
    // leave room for the cells below in this column
    let below = (i + 1..grid.len()).take_while(|&r| grid[r].len() > j).count() as u32;
    for v in lo..=k.saturating_sub(below) {
        grid[i][j] = v;
        weight[v as usize - 1] += 1;
        fill_skew(inner, cells, t + 1, k, grid, weight, out);
        weight[v as usize - 1] -= 1;
    }
    grid[i][j] = 0;
}

fn weights_to_series(
    weights: &BTreeMap<Vec<u32>, u64>,
    alph: Alphabet,
    cap: Option<u32>,
    slot: Slot,
) -> PowerSeries {
    let mut s = PowerSeries::zero(alph, cap);
    for (w, &c) in weights {
        let mut mono = Monomial::one(&alph);
        let off = match slot {
            Slot::X => 0,
            Slot::Y => alph.x,
            Slot::Z => alph.x + alph.y,
        };
        let mut deg = 0;
        for (i, &e) in w.iter().enumerate() {
            mono.exps[off + i] = e as i32;
            deg += e;
        }
        if slot != Slot::X {
            mono.deg = deg;
        }
        s.add_term(mono, BigInt::from(c));
    }
    s
}

/// s_λ in the first k variables of `slot` inside a larger alphabet.
pub fn schur_in(lambda: &Partition, k: usize, alph: Alphabet, slot: Slot, cap: Option<u32>) -> PowerSeries {
    if lambda.len() > k {
        return PowerSeries::zero(alph, cap);
    }
    let w = skew_ssyt_weights(lambda, &Partition::empty(), k).expect("empty inner shape");
    weights_to_series(&w, alph, cap, slot)
}

/// The Schur polynomial s_λ in k variables, placed in the y group.
pub fn schur_expand(lambda: &Partition, k: usize) -> PowerSeries {
    let alph = Alphabet::yz(k, 0);
    if lambda.len() > k {
        return PowerSeries::zero(alph, None);
    }
    let w = skew_ssyt_weights(lambda, &Partition::empty(), k).expect("empty inner shape");
    weights_to_series(&w, alph, None, Slot::Y)
}

/// The skew Schur polynomial s_{λ/μ} in k variables, placed in the y group.
pub fn skew_schur_expand(lambda: &Partition, mu: &Partition, k: usize) -> Result<PowerSeries> {
    let w = skew_ssyt_weights(lambda, mu, k)?;
    Ok(weights_to_series(&w, Alphabet::yz(k, 0), None, Slot::Y))
}

type HookKey = (Partition, usize, usize);

fn hook_cache() -> &'static Mutex<HashMap<HookKey, Arc<PowerSeries>>> {
    static CACHE: OnceLock<Mutex<HashMap<HookKey, Arc<PowerSeries>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// HS_λ(y;z) = Σ_{μ⊆λ} s_μ(y) s_{λ'/μ'}(z), memoised.
pub fn hook_schur_expand(lambda: &Partition, m: usize, n: usize) -> Arc<PowerSeries> {
    let key = (lambda.clone(), m, n);
    if let Some(s) = hook_cache().lock().unwrap().get(&key) {
        return Arc::clone(s);
    }
    let s = Arc::new(hook_schur_uncached(lambda, m, n));
    hook_cache().lock().unwrap().insert(key, Arc::clone(&s));
    s
}

fn hook_schur_uncached(lambda: &Partition, m: usize, n: usize) -> PowerSeries {
    let alph = Alphabet::yz(m, n);
    let mut out = PowerSeries::zero(alph, None);
    if !lambda.in_hook(m, n) {
        return out;
    }
    let lc = lambda.conjugate();
    for mu in subpartitions(lambda) {
        if mu.len() > m {
            continue;
        }
        let a = skew_ssyt_weights(&mu, &Partition::empty(), m).expect("empty inner shape");
        let b = skew_ssyt_weights(&lc, &mu.conjugate(), n).expect("conjugates preserve containment");
        for (wa, ca) in &a {
            for (wb, cb) in &b {
                let mut mono = Monomial::one(&alph);
                for (i, &e) in wa.iter().chain(wb).enumerate() {
                    mono.exps[i] = e as i32;
                }
                mono.deg = lambda.size();
                out.add_term(mono, BigInt::from(ca * cb));
            }
        }
    }
    out
}

/// Weight generating function of the (m|n)-semistandard tableaux of shape λ.
pub fn hook_schur_by_tableaux(lambda: &Partition, m: usize, n: usize) -> PowerSeries {
    let alph = Alphabet::yz(m, n);
    let mut out = PowerSeries::zero(alph, None);
    for t in enumerate_hook_tableaux(lambda, m, n) {
        let mut mono = Monomial::one(&alph);
        for l in t.rows.iter().flatten() {
            match *l {
                Letter::Even(i) => mono.exps[i as usize - 1] += 1,
                Letter::Odd(k) => mono.exps[m + k as usize - 1] += 1,
            }
        }
        mono.deg = lambda.size();
        out.add_term(mono, BigInt::one());
    }
    out
}

/// A finite signed combination of partitions, standing for Schur or hook Schur functions.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SchurExpansion {
    terms: BTreeMap<Partition, BigInt>,
    degree_cap: Option<u32>,
}

impl SchurExpansion {
    pub fn new(degree_cap: Option<u32>) -> Self {
        SchurExpansion { terms: BTreeMap::new(), degree_cap }
    }

    pub fn single(p: Partition) -> Self {
        let mut e = SchurExpansion::new(None);
        e.add(p, BigInt::one());
        e
    }

    pub fn from_pairs<I: IntoIterator<Item = (Partition, i64)>>(pairs: I) -> Self {
        let mut e = SchurExpansion::new(None);
        for (p, c) in pairs {
            e.add(p, BigInt::from(c));
        }
        e
    }

    pub fn degree_cap(&self) -> Option<u32> {
        self.degree_cap
    }

    pub fn terms(&self) -> &BTreeMap<Partition, BigInt> {
        &self.terms
    }

    pub fn coeff(&self, p: &Partition) -> BigInt {
        self.terms.get(p).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&mut self, p: Partition, c: BigInt) {
        if self.degree_cap.map_or(false, |cap| p.size() > cap) || c.is_zero() {
            return;
        }
        let e = self.terms.entry(p.clone()).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&p);
        }
    }

    pub fn merge(&mut self, other: &SchurExpansion) {
        for (p, c) in &other.terms {
            self.add(p.clone(), c.clone());
        }
    }

    /// s_λ ↦ s_λ' termwise.
    pub fn omega(&self) -> SchurExpansion {
        SchurExpansion {
            terms: self.terms.iter().map(|(p, c)| (p.conjugate(), c.clone())).collect(),
            degree_cap: self.degree_cap,
        }
    }

    /// Σ c_λ s_λ(y_1..y_k).
    pub fn schur_series(&self, k: usize, cap: Option<u32>) -> PowerSeries {
        let alph = Alphabet::yz(k, 0);
        let mut out = PowerSeries::zero(alph, cap);
        for (p, c) in &self.terms {
            if cap.map_or(false, |l| p.size() > l) {
                continue;
            }
            out.add_scaled(&schur_expand(p, k), c).expect("same alphabet");
        }
        out
    }

    /// Σ c_λ HS_λ(y;z), truncated at `cap`.
    pub fn hook_series(&self, m: usize, n: usize, cap: Option<u32>) -> PowerSeries {
        let mut out = PowerSeries::zero(Alphabet::yz(m, n), cap);
        for (p, c) in &self.terms {
            if cap.map_or(false, |l| p.size() > l) {
                continue;
            }
            out.add_scaled(&hook_schur_expand(p, m, n), c).expect("same alphabet");
        }
        out
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(p, c)| json!({"partition": p, "coeff": c.to_string()}))
                .collect(),
        )
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(p, c)| format!("{c}*{p}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Product of 1/(1-m) over the given monomials, truncated at `cap`.
pub fn product_of_geometrics(alph: Alphabet, cap: u32, monos: &[Monomial]) -> Result<PowerSeries> {
    let mut acc = PowerSeries::one(alph, Some(cap));
    for m in monos {
        acc = acc.mul(&PowerSeries::geometric(alph, cap, m)?)?;
    }
    Ok(acc)
}

/// Product of (1+m) over the given monomials, truncated at `cap`.
pub fn product_of_linears(alph: Alphabet, cap: u32, monos: &[Monomial]) -> Result<PowerSeries> {
    let mut acc = PowerSeries::one(alph, Some(cap));
    for m in monos {
        acc = acc.mul(&PowerSeries::one_plus(alph, Some(cap), m.clone()))?;
    }
    Ok(acc)
}

/// The product side of an identity in the group variables x and the y,z variables.
///
/// For O(d) with d odd every eigenvalue of the torus carries eps, including the
/// extra eigenvalue 1 of the odd orthogonal group.
pub fn duality_lhs(which: IdentityId, d: u32, m: usize, n: usize, cap: u32) -> Result<PowerSeries> {
    if d == 0 {
        return Err(Error::InvalidParameters("d must be positive".into()));
    }
    let du = d as usize;
    match which {
        IdentityId::Glgl => {
            let alph = Alphabet::new(du, m, n, false);
            let mut geo = Vec::new();
            let mut lin = Vec::new();
            for i in 0..du {
                let xi = Monomial::var(&alph, Slot::X, i);
                for j in 0..m {
                    geo.push(xi.mul(&Monomial::var(&alph, Slot::Y, j)));
                }
                for l in 0..n {
                    lin.push(xi.mul(&Monomial::var(&alph, Slot::Z, l)));
                }
            }
            product_of_geometrics(alph, cap, &geo)?.mul(&product_of_linears(alph, cap, &lin)?)
        }
        IdentityId::OSp | IdentityId::OSpo | IdentityId::SpSo | IdentityId::SpOsp => {
            let orth = matches!(which, IdentityId::OSp | IdentityId::OSpo);
            let sup = matches!(which, IdentityId::OSpo | IdentityId::SpOsp);
            if !orth && d % 2 == 1 {
                return Err(Error::InvalidParameters(format!("{which} needs d even, got {d}")));
            }
            if !sup && n > 0 {
                return Err(Error::InvalidParameters(format!("{which} has no odd variables, got n={n}")));
            }
            let odd = orth && d % 2 == 1;
            let alph = Alphabet::new(du / 2, m, if sup { n } else { 0 }, odd);
            let e = odd as u8;
            let mut eigen = Vec::new();
            for i in 0..du / 2 {
                let xi = Monomial::var(&alph, Slot::X, i);
                eigen.push(xi.clone().with_eps(e));
                let mut inv = xi;
                inv.exps[i] = -1;
                eigen.push(inv.with_eps(e));
            }
            if odd {
                eigen.push(Monomial::one(&alph).with_eps(1));
            }
            let mut geo = Vec::new();
            let mut lin = Vec::new();
            for t in &eigen {
                for j in 0..m {
                    geo.push(t.mul(&Monomial::var(&alph, Slot::Y, j)));
                }
                for l in 0..alph.z {
                    lin.push(t.mul(&Monomial::var(&alph, Slot::Z, l)));
                }
            }
            product_of_geometrics(alph, cap, &geo)?.mul(&product_of_linears(alph, cap, &lin)?)
        }
        other => Err(Error::InvalidParameters(format!("{other} has no product side"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn render(s: &PowerSeries) -> String {
        s.to_string()
    }

    #[test]
    fn schur_examples() {
        assert_eq!(render(&schur_expand(&p(&[2, 1]), 2)), "y1*y2^2 + y1^2*y2");
        assert_eq!(render(&schur_expand(&p(&[1]), 3)), "y3 + y2 + y1");
        assert!(schur_expand(&p(&[1, 1, 1]), 2).is_zero());
    }

    #[test]
    fn skew_examples() {
        assert_eq!(render(&skew_schur_expand(&p(&[1]), &p(&[1]), 1).unwrap()), "1");
        assert_eq!(render(&skew_schur_expand(&p(&[2]), &p(&[1]), 2).unwrap()), "y2 + y1");
        assert_eq!(render(&skew_schur_expand(&p(&[2, 1]), &p(&[1]), 1).unwrap()), "y1^2");
        assert!(skew_schur_expand(&p(&[1]), &p(&[2]), 1).is_err());
    }

    #[test]
    fn hook_examples() {
        assert_eq!(render(&hook_schur_expand(&p(&[1]), 1, 1)), "z1 + y1");
        assert_eq!(render(&hook_schur_expand(&p(&[2]), 1, 1)), "y1*z1 + y1^2");
        assert_eq!(render(&hook_schur_expand(&p(&[1, 1]), 1, 1)), "z1^2 + y1*z1");
    }

    #[test]
    fn omega_examples() {
        let e = SchurExpansion::from_pairs([(p(&[2]), 1)]);
        assert_eq!(e.omega(), SchurExpansion::from_pairs([(p(&[1, 1]), 1)]));
        let e = SchurExpansion::from_pairs([(p(&[]), 1)]);
        assert_eq!(e.omega(), e);
        let e = SchurExpansion::from_pairs([(p(&[2, 1]), -1)]);
        assert_eq!(e.omega(), e);
    }

    #[test]
    fn mul_examples() {
        let a = Alphabet::yz(1, 1);
        let y = Monomial::var(&a, Slot::Y, 0);
        let z = Monomial::var(&a, Slot::Z, 0);
        let one_plus = PowerSeries::one_plus(a, Some(2), y.clone());
        let one_minus = PowerSeries::one(a, Some(2)).sub(&PowerSeries::from_monomial(a, Some(2), y.clone(), BigInt::one())).unwrap();
        assert_eq!(render(&one_plus.mul(&one_minus).unwrap()), "1 - y1^2");
        let c1 = PowerSeries::one_plus(a, Some(1), y.clone());
        assert_eq!(render(&c1.mul(&c1).unwrap()), "1 + 2*y1");
        let ys = PowerSeries::from_monomial(a, Some(2), y, BigInt::one());
        let zs = PowerSeries::from_monomial(a, Some(2), z, BigInt::one());
        assert_eq!(render(&ys.mul(&zs).unwrap()), "y1*z1");
        assert!(ys.mul(&PowerSeries::one(Alphabet::yz(2, 0), None)).is_err());
    }

    #[test]
    fn geometric_examples() {
        let a = Alphabet::new(1, 1, 1, false);
        let y2 = Monomial::var(&a, Slot::Y, 0).pow(2);
        assert_eq!(render(&PowerSeries::geometric(a, 5, &y2).unwrap()), "1 + y1^2 + y1^4");
        let yz = Monomial::var(&a, Slot::Y, 0).mul(&Monomial::var(&a, Slot::Z, 0));
        assert_eq!(render(&PowerSeries::geometric(a, 2, &yz).unwrap()), "1 + y1*z1");
        let x = Monomial::var(&a, Slot::X, 0);
        assert!(matches!(PowerSeries::geometric(a, 2, &x), Err(Error::NotInvertible(_))));
    }

    #[test]
    fn lhs_examples() {
        let s = duality_lhs(IdentityId::Glgl, 1, 1, 1, 2).unwrap();
        assert_eq!(render(&s), "1 + x1*z1 + x1*y1 + x1^2*y1*z1 + x1^2*y1^2");
        let s = duality_lhs(IdentityId::OSp, 1, 1, 0, 2).unwrap();
        assert_eq!(render(&s), "1 + eps*y1 + y1^2");
        let s = duality_lhs(IdentityId::OSp, 2, 1, 0, 1).unwrap();
        assert_eq!(render(&s), "1 + x1^-1*y1 + x1*y1");
        assert!(duality_lhs(IdentityId::SpSo, 3, 1, 0, 1).is_err());
        assert!(duality_lhs(IdentityId::HsStability, 2, 1, 0, 1).is_err());
    }

    #[test]
    fn json_shape() {
        let s = hook_schur_expand(&p(&[2]), 1, 1);
        let v = s.to_json();
        assert_eq!(v[0]["exp"]["y"], json!([1]));
        assert_eq!(v[0]["coeff"], json!("1"));
    }
}
