//! Partitions, half-integer weight vectors, hook tableaux and label conversions.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{precondition, Error, Result};
use crate::SuperKind;

/// A weakly decreasing list of positive rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    rows: Vec<u32>,
}

impl Partition {
    pub fn new(mut rows: Vec<u32>) -> Result<Self> {
        while rows.last() == Some(&0) {
            rows.pop();
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return precondition(format!("rows {rows:?} are not weakly decreasing"));
        }
        Ok(Partition { rows })
    }

    pub fn empty() -> Self {
        Partition { rows: Vec::new() }
    }

    /// Sorts the input into decreasing order first.
    pub fn from_unsorted(mut rows: Vec<u32>) -> Self {
        rows.sort_unstable_by(|a, b| b.cmp(a));
        while rows.last() == Some(&0) {
            rows.pop();
        }
        Partition { rows }
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.rows.iter().sum()
    }

    /// Row `i` counted from zero, zero past the end.
    pub fn row(&self, i: usize) -> u32 {
        self.rows.get(i).copied().unwrap_or(0)
    }

    pub fn first_row(&self) -> u32 {
        self.row(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.first_row() as usize;
        let mut cols = vec![0u32; width];
        for &r in &self.rows {
            for c in cols.iter_mut().take(r as usize) {
                *c += 1;
            }
        }
        Partition { rows: cols }
    }

    /// Column `j` counted from zero.
    pub fn column(&self, j: usize) -> u32 {
        self.rows.iter().filter(|&&r| r as usize > j).count() as u32
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.rows.iter().zip(&self.rows).all(|(a, b)| a <= b)
    }

    pub fn in_hook(&self, m: usize, n: usize) -> bool {
        self.row(m) as usize <= n
    }

    /// Sum of the first two column lengths.
    pub fn two_column_sum(&self) -> u32 {
        self.column(0) + self.column(1)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .or_else(|| t.strip_prefix('(').and_then(|s| s.strip_suffix(')')))
            .unwrap_or(t);
        let inner = inner.trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let mut rows = Vec::new();
        for part in inner.split(',') {
            let v: u32 = part
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad partition entry {:?} in {text:?}", part.trim())))?;
            rows.push(v);
        }
        Partition::new(rows).map_err(|_| Error::Parse(format!("{text:?} is not weakly decreasing")))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.rows.cmp(&self.rows))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "]")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<u32>::deserialize(d)?;
        Partition::new(rows).map_err(serde::de::Error::custom)
    }
}

/// Weight vector stored as doubled integers so half-integers stay exact.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GeneralizedVector {
    doubled: Vec<i64>,
}

impl GeneralizedVector {
    pub fn from_doubled(doubled: Vec<i64>) -> Result<Self> {
        if let Some(first) = doubled.first() {
            let p = first.rem_euclid(2);
            if doubled.iter().any(|v| v.rem_euclid(2) != p) {
                return precondition(format!("mixed integer and half-integer entries {doubled:?}"));
            }
        }
        Ok(GeneralizedVector { doubled })
    }

    pub fn from_integers(values: &[i64]) -> Self {
        GeneralizedVector { doubled: values.iter().map(|v| 2 * v).collect() }
    }

    pub fn doubled(&self) -> &[i64] {
        &self.doubled
    }

    pub fn len(&self) -> usize {
        self.doubled.len()
    }

    pub fn is_empty(&self) -> bool {
        self.doubled.is_empty()
    }

    pub fn is_integral(&self) -> bool {
        self.doubled.iter().all(|v| v % 2 == 0)
    }

    pub fn is_generalized_partition(&self) -> bool {
        self.doubled.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn add(&self, other: &GeneralizedVector) -> Result<GeneralizedVector> {
        if self.len() != other.len() {
            return precondition("vector lengths differ");
        }
        GeneralizedVector::from_doubled(self.doubled.iter().zip(&other.doubled).map(|(a, b)| a + b).collect())
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.doubled.iter().map(|&v| half_to_string(v)).collect()
    }
}

impl fmt::Display for GeneralizedVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(","))
    }
}

/// Renders a doubled integer as `n` or `n/2`.
pub fn half_to_string(doubled: i64) -> String {
    if doubled % 2 == 0 {
        format!("{}", doubled / 2)
    } else {
        format!("{doubled}/2")
    }
}

/// Replaces the first column of length c by one of length d - c.
pub fn bar_partition(lambda: &Partition, d: u32) -> Result<Partition> {
    if lambda.two_column_sum() > d {
        return precondition(format!("{lambda} has first two columns summing past d={d}"));
    }
    let mut cols = lambda.conjugate().rows;
    if cols.is_empty() {
        cols.push(0);
    }
    cols[0] = d - cols[0];
    Ok(Partition::from_unsorted(cols).conjugate())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GlmnLabels {
    pub even: Vec<u32>,
    pub odd: Vec<u32>,
}

/// The gl(m|n) highest weight of the module labelled by a hook diagram.
pub fn glmn_labels(lambda: &Partition, m: usize, n: usize) -> Result<GlmnLabels> {
    if !lambda.in_hook(m, n) {
        return precondition(format!("{lambda} is outside the ({m}|{n}) hook"));
    }
    let even = (0..m).map(|i| lambda.row(i)).collect();
    let odd = (0..n)
        .map(|j| lambda.column(j).saturating_sub(m as u32))
        .collect();
    Ok(GlmnLabels { even, odd })
}

/// The gl(m|n) weight of a hook diagram shifted by d times (1/2,...,1/2;-1/2,...,-1/2).
pub fn shifted_weight(lambda: &Partition, d: u32, m: usize, n: usize) -> Result<GeneralizedVector> {
    let labels = glmn_labels(lambda, m, n)?;
    let mut doubled: Vec<i64> = labels.even.iter().map(|&v| 2 * v as i64 + d as i64).collect();
    doubled.extend(labels.odd.iter().map(|&v| 2 * v as i64 - d as i64));
    Ok(GeneralizedVector { doubled })
}

/// Labels on the simple roots of the distinguished Borel, doubled.
pub fn dynkin_labels(mu: &GeneralizedVector, m: usize, n: usize, kind: SuperKind) -> Result<Vec<i64>> {
    if mu.len() != m + n {
        return precondition(format!("weight has {} entries, expected m+n={}", mu.len(), m + n));
    }
    let v = mu.doubled();
    let mut labels = Vec::with_capacity(m + n);
    match kind {
        SuperKind::Spo => {
            if m < 1 {
                return precondition("spo labels need m >= 1");
            }
            labels.push(-v[0]);
        }
        SuperKind::Osp => {
            if m < 2 {
                return precondition("osp labels need m >= 2");
            }
            labels.push(-v[0] - v[1]);
        }
    }
    for i in 1..m {
        labels.push(v[i - 1] - v[i]);
    }
    if n > 0 {
        labels.push(v[m - 1] + v[m]);
        for j in 1..n {
            labels.push(v[m + j - 1] - v[m + j]);
        }
    }
    Ok(labels)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PartitionConstraints {
    pub max_length: Option<usize>,
    pub col_sum_bound: Option<u32>,
    pub even_rows: bool,
    pub even_cols: bool,
    pub hook: Option<(usize, usize)>,
    pub max_first_row: Option<u32>,
}

impl PartitionConstraints {
    pub fn admits(&self, p: &Partition) -> bool {
        if let Some(l) = self.max_length {
            if p.len() > l {
                return false;
            }
        }
        if let Some(d) = self.col_sum_bound {
            if p.two_column_sum() > d {
                return false;
            }
        }
        if self.even_rows && p.rows().iter().any(|r| r % 2 == 1) {
            return false;
        }
        if self.even_cols && p.conjugate().rows().iter().any(|c| c % 2 == 1) {
            return false;
        }
        if let Some((m, n)) = self.hook {
            if !p.in_hook(m, n) {
                return false;
            }
        }
        if let Some(w) = self.max_first_row {
            if p.first_row() > w {
                return false;
            }
        }
        true
    }
}

/// Partitions of exactly `n`, lexicographically descending.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { rows: cur.clone() });
            return;
        }
        for k in (1..=rest.min(max)).rev() {
            cur.push(k);
            rec(rest - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn enumerate_partitions(max_size: u32, constraints: &PartitionConstraints) -> Vec<Partition> {
    (0..=max_size)
        .flat_map(partitions_of)
        .filter(|p| constraints.admits(p))
        .collect()
}

/// Sub-diagrams of `lambda`, including the empty one and `lambda` itself.
pub fn subpartitions(lambda: &Partition) -> Vec<Partition> {
    fn rec(lambda: &Partition, i: usize, prev: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if i == lambda.len() {
            out.push(Partition::from_unsorted(cur.clone()));
            return;
        }
        for v in (0..=prev.min(lambda.row(i))).rev() {
            cur.push(v);
            rec(lambda, i + 1, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(lambda, 0, lambda.first_row(), &mut Vec::new(), &mut out);
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Letter {
    Even(u32),
    Odd(u32),
}

impl Letter {
    pub fn is_odd(self) -> bool {
        matches!(self, Letter::Odd(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct HookTableau {
    pub shape: Partition,
    pub rows: Vec<Vec<Letter>>,
}

impl HookTableau {
    /// Letters of column `j` read top to bottom.
    pub fn column(&self, j: usize) -> Vec<Letter> {
        self.rows.iter().filter_map(|r| r.get(j).copied()).collect()
    }

    /// Counts of each even letter and each odd letter.
    pub fn weight(&self, m: usize, n: usize) -> (Vec<u32>, Vec<u32>) {
        let mut ev = vec![0u32; m];
        let mut od = vec![0u32; n];
        for l in self.rows.iter().flatten() {
            match *l {
                Letter::Even(i) => ev[i as usize - 1] += 1,
                Letter::Odd(k) => od[k as usize - 1] += 1,
            }
        }
        (ev, od)
    }
}

/// All (m|n)-semistandard fillings of `lambda`, even letters before odd ones.
pub fn enumerate_hook_tableaux(lambda: &Partition, m: usize, n: usize) -> Vec<HookTableau> {
    let mut out = Vec::new();
    if !lambda.in_hook(m, n) {
        return out;
    }
    let alphabet: Vec<Letter> = (1..=m as u32)
        .map(Letter::Even)
        .chain((1..=n as u32).map(Letter::Odd))
        .collect();
    let cells: Vec<(usize, usize)> = lambda
        .rows()
        .iter()
        .enumerate()
        .flat_map(|(i, &r)| (0..r as usize).map(move |j| (i, j)))
        .collect();
    let mut rows: Vec<Vec<Letter>> = lambda.rows().iter().map(|&r| Vec::with_capacity(r as usize)).collect();
    fill(lambda, &alphabet, &cells, 0, &mut rows, &mut out);
    out
}

fn fill(
    lambda: &Partition,
    alphabet: &[Letter],
    cells: &[(usize, usize)],
    t: usize,
    rows: &mut Vec<Vec<Letter>>,
    out: &mut Vec<HookTableau>,
) {
    if t == cells.len() {
        out.push(HookTableau { shape: lambda.clone(), rows: rows.clone() });
        return;
    }
    let (i, j) = cells[t];
    let left = if j > 0 { Some(rows[i][j - 1]) } else { None };
    let up = if i > 0 { Some(rows[i - 1][j]) } else { None };
    for &v in alphabet {
        if let Some(a) = left {
            if v < a || (v == a && v.is_odd()) {
                continue;
            }
        }
        if let Some(b) = up {
            if v < b || (v == b && !v.is_odd()) {
                continue;
            }
        }
        rows[i].push(v);
        fill(lambda, alphabet, cells, t + 1, rows, out);
        rows[i].pop();
    }
}

/// Number of semistandard tableaux of shape `lambda` in `k` letters.
pub fn count_ssyt(lambda: &Partition, k: usize) -> u64 {
    enumerate_hook_tableaux(lambda, k, 0).len() as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[]).conjugate(), p(&[]));
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
    }

    #[test]
    fn hook_membership() {
        assert!(!p(&[3, 3]).in_hook(1, 2));
        assert!(p(&[3, 3]).in_hook(2, 0));
        assert!(p(&[1, 1, 1]).in_hook(0, 1));
    }

    #[test]
    fn bar_examples() {
        assert_eq!(bar_partition(&p(&[1]), 3).unwrap(), p(&[1, 1]));
        // columns (3,1) become (1,1)
        assert_eq!(bar_partition(&p(&[2, 1, 1]), 4).unwrap(), p(&[2]));
        assert_eq!(bar_partition(&p(&[]), 2).unwrap(), p(&[1, 1]));
        assert!(bar_partition(&p(&[2, 2]), 3).is_err());
    }

    #[test]
    fn glmn_examples() {
        let l = glmn_labels(&p(&[2, 1]), 1, 1).unwrap();
        assert_eq!((l.even, l.odd), (vec![2], vec![1]));
        let l = glmn_labels(&p(&[1]), 2, 1).unwrap();
        assert_eq!((l.even, l.odd), (vec![1, 0], vec![0]));
        let l = glmn_labels(&p(&[]), 1, 2).unwrap();
        assert_eq!((l.even, l.odd), (vec![0], vec![0, 0]));
        assert!(glmn_labels(&p(&[2, 2]), 1, 1).is_err());
    }

    #[test]
    fn dynkin_patterns() {
        let (a, b, c, e) = (7i64, 3, 5, 2);
        let mu = GeneralizedVector::from_doubled(vec![a, b, c, e]).unwrap_or_else(|_| {
            GeneralizedVector { doubled: vec![a, b, c, e] }
        });
        assert_eq!(dynkin_labels(&mu, 2, 2, SuperKind::Spo).unwrap(), vec![-a, a - b, b + c, c - e]);
        assert_eq!(dynkin_labels(&mu, 2, 2, SuperKind::Osp).unwrap(), vec![-a - b, a - b, b + c, c - e]);
        let zero = GeneralizedVector::from_integers(&[0, 0, 0, 0]);
        assert_eq!(dynkin_labels(&zero, 2, 2, SuperKind::Spo).unwrap(), vec![0, 0, 0, 0]);
        assert!(dynkin_labels(&zero, 0, 4, SuperKind::Spo).is_err());
        assert!(dynkin_labels(&zero, 1, 3, SuperKind::Osp).is_err());
    }

    #[test]
    fn shifted_weight_first_label() {
        for d in 1..5u32 {
            for lam in enumerate_partitions(5, &PartitionConstraints { hook: Some((2, 2)), ..Default::default() }) {
                let w = shifted_weight(&lam, d, 2, 2).unwrap();
                let labels = dynkin_labels(&w, 2, 2, SuperKind::Spo).unwrap();
                assert_eq!(labels[0], -2 * lam.first_row() as i64 - d as i64);
            }
            let w = shifted_weight(&Partition::empty(), d, 2, 2).unwrap();
            let labels = dynkin_labels(&w, 2, 2, SuperKind::Spo).unwrap();
            assert_eq!(labels, vec![-(d as i64), 0, 0, 0]);
        }
    }

    #[test]
    fn enumeration_examples() {
        let c = PartitionConstraints { col_sum_bound: Some(1), ..Default::default() };
        assert_eq!(enumerate_partitions(2, &c), vec![p(&[]), p(&[1])]);
        let c = PartitionConstraints { even_rows: true, hook: Some((1, 0)), ..Default::default() };
        assert_eq!(enumerate_partitions(4, &c), vec![p(&[]), p(&[2]), p(&[4])]);
        let c = PartitionConstraints { max_length: Some(0), ..Default::default() };
        assert_eq!(enumerate_partitions(2, &c), vec![p(&[])]);
        let all = enumerate_partitions(3, &PartitionConstraints::default());
        assert_eq!(all, vec![p(&[]), p(&[1]), p(&[2]), p(&[1, 1]), p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
    }

    #[test]
    fn hook_tableaux_examples() {
        use Letter::*;
        let t = enumerate_hook_tableaux(&p(&[2]), 1, 1);
        let rows: Vec<_> = t.iter().map(|t| t.rows.clone()).collect();
        assert_eq!(rows, vec![vec![vec![Even(1), Even(1)]], vec![vec![Even(1), Odd(1)]]]);
        let t = enumerate_hook_tableaux(&p(&[1, 1]), 1, 1);
        let rows: Vec<_> = t.iter().map(|t| t.rows.clone()).collect();
        assert_eq!(rows, vec![vec![vec![Even(1)], vec![Odd(1)]], vec![vec![Odd(1)], vec![Odd(1)]]]);
        assert!(enumerate_hook_tableaux(&p(&[2, 2]), 0, 1).is_empty());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(Partition::parse("[3,1]").unwrap(), p(&[3, 1]));
        assert_eq!(Partition::parse("[]").unwrap(), p(&[]));
        assert_eq!(Partition::parse("[2,0]").unwrap(), p(&[2]));
        assert!(Partition::parse("[1,2]").is_err());
        assert!(Partition::parse("[a]").is_err());
        assert_eq!(p(&[3, 1]).to_string(), "[3,1]");
        assert_eq!(serde_json::to_string(&p(&[3, 1])).unwrap(), "[3,1]");
    }

    #[test]
    fn half_strings() {
        assert_eq!(half_to_string(3), "3/2");
        assert_eq!(half_to_string(-4), "-2");
    }
}
