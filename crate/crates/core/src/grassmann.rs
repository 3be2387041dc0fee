//! Supercommutative polynomials in x_l^i (even) and η_k^i (odd).
//!
//! Lower indices run over the gl(m|n) side (l ≤ m, k ≤ n), upper ones over the
//! gl(d) side (i ≤ d). Odd generators are kept sorted by (k, i) with the sign
//! of the reordering folded into the coefficient. Odd derivatives act from the left.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::classical::{permutation_sign, permutations};
use crate::combinatorics::{enumerate_hook_tableaux, HookTableau, Letter, Partition};
use crate::error::{precondition, Error, Result};
use crate::Pair;

/// A generator. `row` is the gl(m|n) index, `col` the gl(d) index, both 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X { row: usize, col: usize },
    Eta { row: usize, col: usize },
}

impl Var {
    pub fn from_letter(l: Letter, col: usize) -> Var {
        match l {
            Letter::Even(r) => Var::X { row: r as usize, col },
            Letter::Odd(k) => Var::Eta { row: k as usize, col },
        }
    }

    pub fn is_odd(self) -> bool {
        matches!(self, Var::Eta { .. })
    }

    fn name(self) -> String {
        match self {
            Var::X { row, col } => format!("x_{row}^{col}"),
            Var::Eta { row, col } => format!("eta_{row}^{col}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Dims {
    pub d: usize,
    pub m: usize,
    pub n: usize,
}

impl Dims {
    pub fn new(d: usize, m: usize, n: usize) -> Self {
        Dims { d, m, n }
    }

    fn even_slot(&self, row: usize, col: usize) -> usize {
        (row - 1) * self.d + (col - 1)
    }

    fn odd_slot(&self, row: usize, col: usize) -> u16 {
        ((row - 1) * self.d + (col - 1)) as u16
    }

    fn check(&self, v: Var) -> Result<()> {
        let ok = match v {
            Var::X { row, col } => (1..=self.m).contains(&row) && (1..=self.d).contains(&col),
            Var::Eta { row, col } => (1..=self.n).contains(&row) && (1..=self.d).contains(&col),
        };
        if ok {
            Ok(())
        } else {
            precondition(format!("{} is out of range for d={}, m={}, n={}", v.name(), self.d, self.m, self.n))
        }
    }

    /// All generators, even ones first.
    pub fn all_vars(&self) -> Vec<Var> {
        let mut out = Vec::new();
        for row in 1..=self.m {
            for col in 1..=self.d {
                out.push(Var::X { row, col });
            }
        }
        for row in 1..=self.n {
            for col in 1..=self.d {
                out.push(Var::Eta { row, col });
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct SuperMonomial {
    even: Vec<u16>,
    odd: Vec<u16>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperPoly {
    dims: Dims,
    terms: BTreeMap<SuperMonomial, BigInt>,
}

/// Sign of merging two sorted odd lists, or None when a generator repeats.
fn merge_odd(a: &[u16], b: &[u16]) -> Option<(Vec<u16>, bool)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let mut neg = false;
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i] < b[j]) {
            out.push(a[i]);
            i += 1;
        } else if i < a.len() && a[i] == b[j] {
            return None;
        } else {
            // b[j] jumps over the a.len() - i generators still waiting
            if (a.len() - i) % 2 == 1 {
                neg = !neg;
            }
            out.push(b[j]);
            j += 1;
        }
    }
    Some((out, neg))
}

impl SuperPoly {
    pub fn zero(dims: Dims) -> Self {
        SuperPoly { dims, terms: BTreeMap::new() }
    }

    pub fn one(dims: Dims) -> Self {
        let mut p = SuperPoly::zero(dims);
        p.terms.insert(SuperMonomial { even: vec![0; dims.m * dims.d], odd: Vec::new() }, BigInt::one());
        p
    }

    pub fn var(dims: Dims, v: Var) -> Result<Self> {
        dims.check(v)?;
        let mut mono = SuperMonomial { even: vec![0; dims.m * dims.d], odd: Vec::new() };
        match v {
            Var::X { row, col } => mono.even[dims.even_slot(row, col)] = 1,
            Var::Eta { row, col } => mono.odd.push(dims.odd_slot(row, col)),
        }
        let mut p = SuperPoly::zero(dims);
        p.terms.insert(mono, BigInt::one());
        Ok(p)
    }

    pub fn dims(&self) -> Dims {
        self.dims
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    fn add_mono(&mut self, mono: SuperMonomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(mono.clone()).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&mono);
        }
    }

    fn check_dims(&self, other: &SuperPoly) -> Result<()> {
        if self.dims != other.dims {
            return precondition("polynomials live in different algebras");
        }
        Ok(())
    }

    pub fn add(&self, other: &SuperPoly) -> Result<SuperPoly> {
        self.check_dims(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_mono(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, k: &BigInt) -> SuperPoly {
        let mut out = SuperPoly::zero(self.dims);
        for (m, c) in &self.terms {
            out.add_mono(m.clone(), c * k);
        }
        out
    }

    pub fn sub(&self, other: &SuperPoly) -> Result<SuperPoly> {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    /// Supercommutative product.
    pub fn mul(&self, other: &SuperPoly) -> Result<SuperPoly> {
        self.check_dims(other)?;
        let mut out = SuperPoly::zero(self.dims);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some((odd, neg)) = merge_odd(&ma.odd, &mb.odd) {
                    let even = ma.even.iter().zip(&mb.even).map(|(a, b)| a + b).collect();
                    let c = ca * cb;
                    out.add_mono(SuperMonomial { even, odd }, if neg { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    /// Derivative by `v`, acting from the left for odd generators.
    pub fn derive(&self, v: Var) -> Result<SuperPoly> {
        self.dims.check(v)?;
        let mut out = SuperPoly::zero(self.dims);
        match v {
            Var::X { row, col } => {
                let s = self.dims.even_slot(row, col);
                for (m, c) in &self.terms {
                    let e = m.even[s];
                    if e > 0 {
                        let mut nm = m.clone();
                        nm.even[s] -= 1;
                        out.add_mono(nm, c * BigInt::from(e));
                    }
                }
            }
            Var::Eta { row, col } => {
                let s = self.dims.odd_slot(row, col);
                for (m, c) in &self.terms {
                    if let Some(pos) = m.odd.iter().position(|&o| o == s) {
                        let mut nm = m.clone();
                        nm.odd.remove(pos);
                        out.add_mono(nm, if pos % 2 == 1 { -c.clone() } else { c.clone() });
                    }
                }
            }
        }
        Ok(out)
    }

    /// Coefficients keyed by a printable monomial, for rank computations.
    fn keyed(&self) -> impl Iterator<Item = (&SuperMonomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(m, c)| {
                    let mut even = Map::new();
                    for row in 1..=self.dims.m {
                        for col in 1..=self.dims.d {
                            let e = m.even[self.dims.even_slot(row, col)];
                            if e > 0 {
                                even.insert(Var::X { row, col }.name(), json!(e));
                            }
                        }
                    }
                    let odd: Vec<String> = m.odd.iter().map(|&o| self.odd_var(o).name()).collect();
                    json!({"even": even, "odd": odd, "coeff": c.to_string()})
                })
                .collect(),
        )
    }

    fn odd_var(&self, slot: u16) -> Var {
        let s = slot as usize;
        Var::Eta { row: s / self.dims.d + 1, col: s % self.dims.d + 1 }
    }

    fn even_var(&self, slot: usize) -> Var {
        Var::X { row: slot / self.dims.d + 1, col: slot % self.dims.d + 1 }
    }
}

impl fmt::Display for SuperPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let mut factors = Vec::new();
            for (s, &e) in m.even.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.even_var(s).name()),
                    _ => factors.push(format!("({})^{e}", self.even_var(s).name())),
                }
            }
            for &o in &m.odd {
                factors.push(self.odd_var(o).name());
            }
            let body = if factors.is_empty() { "1".to_string() } else { factors.join("*") };
            let abs = c.abs();
            let lead = if c.is_negative() { if first { "-" } else { " - " } } else if first { "" } else { " + " };
            if abs.is_one() {
                write!(f, "{lead}{body}")?;
            } else {
                write!(f, "{lead}{abs}*{body}")?;
            }
            first = false;
        }
        Ok(())
    }
}

/// Σ_σ sign(σ) a_1^{σ(1)} ⋯ a_r^{σ(r)}, multiplied in row order.
///
/// Row t uses the generator family `rows[t]` and the columns are `cols`.
pub fn row_determinant(dims: Dims, rows: &[Letter], cols: &[usize]) -> Result<SuperPoly> {
    if rows.len() != cols.len() {
        return precondition("determinant needs as many rows as columns");
    }
    let mut out = SuperPoly::zero(dims);
    for perm in permutations(rows.len()) {
        let mut term = SuperPoly::one(dims);
        for (t, &p) in perm.iter().enumerate() {
            term = term.mul(&SuperPoly::var(dims, Var::from_letter(rows[t], cols[p]))?)?;
            if term.is_zero() {
                break;
            }
        }
        out = out.add(&term.scale(&BigInt::from(permutation_sign(&perm))))?;
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DeterminantKind {
    /// Rows x_1..x_r, columns 1..r; needs r ≤ min(d, m).
    Delta { r: usize },
    /// Rows x_1..x_m then η_k repeated, columns 1..r; needs m < r ≤ d.
    DeltaOdd { k: usize, r: usize },
    /// Column `i` (1-based) of an (m|n)-tableau, columns 1..c of gl(d).
    TableauColumn { tableau: HookTableau, i: usize },
    /// Column `i` of T with the gl(d) indices read from column `i` of T'.
    PairColumn { tableau: HookTableau, dual: HookTableau, i: usize },
}

pub fn build_determinant(kind: &DeterminantKind, dims: Dims) -> Result<SuperPoly> {
    match kind {
        DeterminantKind::Delta { r } => {
            if *r == 0 || *r > dims.d.min(dims.m) {
                return precondition(format!("Δ_r needs 1 ≤ r ≤ min(d,m), got r={r}"));
            }
            let rows: Vec<Letter> = (1..=*r as u32).map(Letter::Even).collect();
            row_determinant(dims, &rows, &(1..=*r).collect::<Vec<_>>())
        }
        DeterminantKind::DeltaOdd { k, r } => {
            if *r <= dims.m || *r > dims.d || *k == 0 || *k > dims.n {
                return precondition(format!("Δ_(k,r) needs m < r ≤ d and 1 ≤ k ≤ n, got k={k}, r={r}"));
            }
            let mut rows: Vec<Letter> = (1..=dims.m as u32).map(Letter::Even).collect();
            rows.extend(std::iter::repeat(Letter::Odd(*k as u32)).take(r - dims.m));
            row_determinant(dims, &rows, &(1..=*r).collect::<Vec<_>>())
        }
        DeterminantKind::TableauColumn { tableau, i } => {
            let col = tableau_column(tableau, *i)?;
            if col.len() > dims.d {
                return precondition("column longer than d");
            }
            row_determinant(dims, &col, &(1..=col.len()).collect::<Vec<_>>())
        }
        DeterminantKind::PairColumn { tableau, dual, i } => {
            if tableau.shape != dual.shape {
                return precondition("the two tableaux must have the same shape");
            }
            let col = tableau_column(tableau, *i)?;
            let idx: Vec<usize> = tableau_column(dual, *i)?
                .into_iter()
                .map(|l| match l {
                    Letter::Even(v) => Ok(v as usize),
                    Letter::Odd(_) => precondition("the gl(d) tableau must use even letters only"),
                })
                .collect::<Result<_>>()?;
            row_determinant(dims, &col, &idx)
        }
    }
}

fn tableau_column(t: &HookTableau, i: usize) -> Result<Vec<Letter>> {
    if i == 0 || i > t.shape.first_row() as usize {
        return precondition(format!("column {i} is outside the shape {}", t.shape));
    }
    Ok(t.column(i - 1))
}

/// Product of the column determinants of T.
pub fn delta_tableau(t: &HookTableau, dims: Dims) -> Result<SuperPoly> {
    let mut acc = SuperPoly::one(dims);
    for i in 1..=t.shape.first_row() as usize {
        acc = acc.mul(&build_determinant(&DeterminantKind::TableauColumn { tableau: t.clone(), i }, dims)?)?;
    }
    Ok(acc)
}

/// Product of the column determinants of (T, T').
pub fn delta_pair(t: &HookTableau, dual: &HookTableau, dims: Dims) -> Result<SuperPoly> {
    let mut acc = SuperPoly::one(dims);
    for i in 1..=t.shape.first_row() as usize {
        let kind = DeterminantKind::PairColumn { tableau: t.clone(), dual: dual.clone(), i };
        acc = acc.mul(&build_determinant(&kind, dims)?)?;
    }
    Ok(acc)
}

/// Joint highest weight vector: Δ_{λ'_j} for short columns, Δ_{(j,λ'_j)} for columns longer than m.
pub fn hwv_vector(lambda: &Partition, d: usize, m: usize, n: usize) -> Result<SuperPoly> {
    if lambda.len() > d {
        return precondition(format!("{lambda} has more than d={d} rows"));
    }
    if !lambda.in_hook(m, n) {
        return precondition(format!("{lambda} is outside the ({m}|{n}) hook"));
    }
    let dims = Dims::new(d, m, n);
    let mut acc = SuperPoly::one(dims);
    for (j, &c) in lambda.conjugate().rows().iter().enumerate() {
        let c = c as usize;
        let kind = if c <= m { DeterminantKind::Delta { r: c } } else { DeterminantKind::DeltaOdd { k: j + 1, r: c } };
        acc = acc.mul(&build_determinant(&kind, dims)?)?;
    }
    if acc.is_zero() {
        return Err(Error::LogicFault(format!("highest weight vector of {lambda} vanished")));
    }
    Ok(acc)
}

/// c · (multiplied generators) · ∂_{derivs[0]} ⋯ ∂_{derivs[last]}; the last derivative acts first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpTerm {
    pub coeff: i64,
    pub mult: Vec<Var>,
    pub derivs: Vec<Var>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieOperator {
    pub name: String,
    pub terms: Vec<OpTerm>,
}

impl LieOperator {
    pub fn apply(&self, p: &SuperPoly) -> Result<SuperPoly> {
        let dims = p.dims();
        let mut out = SuperPoly::zero(dims);
        for t in &self.terms {
            let mut q = p.clone();
            for &v in t.derivs.iter().rev() {
                q = q.derive(v)?;
                if q.is_zero() {
                    break;
                }
            }
            if q.is_zero() {
                continue;
            }
            for &v in t.mult.iter().rev() {
                q = SuperPoly::var(dims, v)?.mul(&q)?;
            }
            out = out.add(&q.scale(&BigInt::from(t.coeff)))?;
        }
        Ok(out)
    }

    /// [A, B] applied to p.
    pub fn commutator_on(&self, other: &LieOperator, p: &SuperPoly) -> Result<SuperPoly> {
        self.apply(&other.apply(p)?)?.sub(&other.apply(&self.apply(p)?)?)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum OperatorFamily {
    /// Σ v_l^a ∂/∂v_l^b over all generators, a < b.
    GlDRaise,
    /// Σ_j v_a^j ∂/∂v_b^j with a < b in the combined index 1..m+n.
    GlmnRaise,
    /// Σ_j ∂/∂v_a^j ∂/∂v_b^{d+1-j}.
    OLaplacian,
    /// Σ_j s(j) ∂/∂v_a^j ∂/∂v_b^{d+1-j} with s(j) = 1 for j ≤ d/2 and -1 otherwise.
    SpLaplacian,
    /// Σ_j v_a^j v_b^{d+1-j}.
    OInvariant,
    /// Σ_j s(j) v_a^j v_b^{d+1-j}.
    SpInvariant,
    /// Σ_j η_1^j ∂/∂x_a^j.
    Gamma,
}

fn combined_var(a: usize, col: usize, m: usize) -> Var {
    if a <= m {
        Var::X { row: a, col }
    } else {
        Var::Eta { row: a - m, col }
    }
}

/// The operator of `family` at indices (a, b); `Gamma` ignores b.
pub fn lie_operator(family: OperatorFamily, a: usize, b: usize, d: usize, m: usize, n: usize) -> Result<LieOperator> {
    let in_super = |i: usize| (1..=m + n).contains(&i);
    let sym_sign = |j: usize| if 2 * j <= d { 1 } else { -1 };
    let name = format!("{family:?}({a},{b})");
    let terms = match family {
        OperatorFamily::GlDRaise => {
            if !(1..=d).contains(&a) || !(1..=d).contains(&b) || a >= b {
                return precondition(format!("gl(d) raise needs 1 ≤ a < b ≤ {d}"));
            }
            (1..=m + n)
                .map(|l| OpTerm { coeff: 1, mult: vec![combined_var(l, a, m)], derivs: vec![combined_var(l, b, m)] })
                .collect()
        }
        OperatorFamily::GlmnRaise => {
            if !in_super(a) || !in_super(b) || a >= b {
                return precondition(format!("gl(m|n) raise needs 1 ≤ a < b ≤ {}", m + n));
            }
            (1..=d)
                .map(|j| OpTerm { coeff: 1, mult: vec![combined_var(a, j, m)], derivs: vec![combined_var(b, j, m)] })
                .collect()
        }
        OperatorFamily::OLaplacian | OperatorFamily::SpLaplacian | OperatorFamily::OInvariant | OperatorFamily::SpInvariant => {
            if !in_super(a) || !in_super(b) {
                return precondition(format!("indices must lie in 1..{}", m + n));
            }
            if matches!(family, OperatorFamily::SpLaplacian | OperatorFamily::SpInvariant) && d % 2 == 1 {
                return precondition("the symplectic form needs d even");
            }
            let sp = matches!(family, OperatorFamily::SpLaplacian | OperatorFamily::SpInvariant);
            let diff = matches!(family, OperatorFamily::OLaplacian | OperatorFamily::SpLaplacian);
            (1..=d)
                .map(|j| {
                    let pair = vec![combined_var(a, j, m), combined_var(b, d + 1 - j, m)];
                    let coeff = if sp { sym_sign(j) } else { 1 };
                    if diff {
                        OpTerm { coeff, mult: vec![], derivs: pair }
                    } else {
                        OpTerm { coeff, mult: pair, derivs: vec![] }
                    }
                })
                .collect()
        }
        OperatorFamily::Gamma => {
            if n == 0 || !(1..=m).contains(&a) {
                return precondition("Γ needs n ≥ 1 and an even index a ≤ m");
            }
            (1..=d)
                .map(|j| OpTerm { coeff: 1, mult: vec![Var::Eta { row: 1, col: j }], derivs: vec![Var::X { row: a, col: j }] })
                .collect()
        }
    };
    Ok(LieOperator { name, terms })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HarmonicReport {
    pub lambda: Partition,
    pub d: usize,
    pub m: usize,
    pub n: usize,
    pub pair: Pair,
    pub operators_checked: usize,
    pub all_zero: bool,
    pub offending: Option<String>,
}

/// Applies every gl(d) raise, every gl(m|n) raise and every Laplacian of the pair.
pub fn check_highest_harmonic(lambda: &Partition, d: usize, m: usize, n: usize, pair: Pair) -> Result<HarmonicReport> {
    pair.check(lambda, d as u32)?;
    let v = hwv_vector(lambda, d, m, n)?;
    let mut ops = Vec::new();
    for a in 1..=d {
        for b in a + 1..=d {
            ops.push(lie_operator(OperatorFamily::GlDRaise, a, b, d, m, n)?);
        }
    }
    for a in 1..=m + n {
        for b in a + 1..=m + n {
            ops.push(lie_operator(OperatorFamily::GlmnRaise, a, b, d, m, n)?);
        }
    }
    let lap = match pair {
        Pair::Osp => OperatorFamily::OLaplacian,
        Pair::SpO => OperatorFamily::SpLaplacian,
    };
    for a in 1..=m + n {
        for b in a..=m + n {
            ops.push(lie_operator(lap, a, b, d, m, n)?);
        }
    }
    let mut offending = None;
    for op in &ops {
        if !op.apply(&v)?.is_zero() {
            offending = Some(op.name.clone());
            break;
        }
    }
    Ok(HarmonicReport {
        lambda: lambda.clone(),
        d,
        m,
        n,
        pair,
        operators_checked: ops.len(),
        all_zero: offending.is_none(),
        offending,
    })
}

/// Rank over Q of the coefficient vectors, by fraction-free elimination.
pub fn span_rank(polys: &[SuperPoly]) -> usize {
    let keys: BTreeSet<&SuperMonomial> = polys.iter().flat_map(|p| p.keyed().map(|(k, _)| k)).collect();
    let index: BTreeMap<&SuperMonomial, usize> = keys.iter().enumerate().map(|(i, k)| (*k, i)).collect();
    let mut rows: Vec<Vec<BigInt>> = polys
        .iter()
        .map(|p| {
            let mut r = vec![BigInt::zero(); index.len()];
            for (k, c) in p.keyed() {
                r[index[k]] = c.clone();
            }
            r
        })
        .collect();
    bareiss_rank(&mut rows)
}

fn bareiss_rank(rows: &mut [Vec<BigInt>]) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, piv);
        for r in rank + 1..rows.len() {
            for c in col + 1..ncols {
                let v = (&rows[rank][col] * &rows[r][c] - &rows[r][col] * &rows[rank][c]) / &prev;
                rows[r][c] = v;
            }
            rows[r][col] = BigInt::zero();
        }
        prev = rows[rank][col].clone();
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// {Δ^T} over the (m|n)-tableaux of shape λ.
pub fn tableau_family(lambda: &Partition, d: usize, m: usize, n: usize) -> Result<Vec<SuperPoly>> {
    let dims = Dims::new(d, m, n);
    enumerate_hook_tableaux(lambda, m, n).iter().map(|t| delta_tableau(t, dims)).collect()
}

/// {Δ^(T,T')} over (m|n)-tableaux T and d-letter tableaux T' of shape λ.
pub fn pair_family(lambda: &Partition, d: usize, m: usize, n: usize) -> Result<Vec<SuperPoly>> {
    let dims = Dims::new(d, m, n);
    let duals = enumerate_hook_tableaux(lambda, d, 0);
    let mut out = Vec::new();
    for t in enumerate_hook_tableaux(lambda, m, n) {
        for u in &duals {
            out.push(delta_pair(&t, u, dims)?);
        }
    }
    Ok(out)
}

/// Every monomial of total degree ≤ `max_deg`.
pub fn monomial_basis(dims: Dims, max_deg: usize) -> Vec<SuperPoly> {
    let vars = dims.all_vars();
    let mut out = Vec::new();
    fn rec(vars: &[Var], start: usize, left: usize, cur: SuperPoly, out: &mut Vec<SuperPoly>) {
        out.push(cur.clone());
        if left == 0 {
            return;
        }
        for i in start..vars.len() {
            // odd generators can appear once, so skip repeating them
            let next_start = if vars[i].is_odd() { i + 1 } else { i };
            let p = cur.mul(&SuperPoly::var(cur.dims(), vars[i]).unwrap()).unwrap();
            if !p.is_zero() {
                rec(vars, next_start, left - 1, p, out);
            }
        }
    }
    rec(&vars, 0, max_deg, SuperPoly::one(dims), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn odd_rules() {
        let dims = Dims::new(2, 1, 2);
        let e11 = SuperPoly::var(dims, Var::Eta { row: 1, col: 1 }).unwrap();
        let e21 = SuperPoly::var(dims, Var::Eta { row: 2, col: 1 }).unwrap();
        assert!(e11.mul(&e11).unwrap().is_zero());
        assert!(e11.mul(&e21).unwrap().add(&e21.mul(&e11).unwrap()).unwrap().is_zero());
        let x = SuperPoly::var(dims, Var::X { row: 1, col: 1 }).unwrap();
        let x2 = x.mul(&x).unwrap();
        assert_eq!(x2.derive(Var::X { row: 1, col: 1 }).unwrap(), x.scale(&BigInt::from(2)));
        // left derivative: ∂_{η21}(η11 η21) = -η11
        let prod = e11.mul(&e21).unwrap();
        assert_eq!(prod.derive(Var::Eta { row: 2, col: 1 }).unwrap(), e11.scale(&BigInt::from(-1)));
    }

    #[test]
    fn determinant_examples() {
        let dims = Dims::new(2, 1, 1);
        assert_eq!(build_determinant(&DeterminantKind::Delta { r: 1 }, dims).unwrap().to_string(), "x_1^1");
        let d12 = build_determinant(&DeterminantKind::DeltaOdd { k: 1, r: 2 }, dims).unwrap();
        assert_eq!(d12.to_string(), "x_1^1*eta_1^2 - x_1^2*eta_1^1");
        let t = HookTableau { shape: p(&[1, 1]), rows: vec![vec![Letter::Even(1)], vec![Letter::Odd(1)]] };
        let u = HookTableau { shape: p(&[1, 1]), rows: vec![vec![Letter::Even(1)], vec![Letter::Even(2)]] };
        let pc = build_determinant(&DeterminantKind::PairColumn { tableau: t, dual: u, i: 1 }, dims).unwrap();
        assert_eq!(pc, d12);
    }

    #[test]
    fn hwv_examples() {
        assert_eq!(hwv_vector(&p(&[2]), 2, 1, 1).unwrap().to_string(), "(x_1^1)^2");
        assert_eq!(hwv_vector(&p(&[1, 1]), 2, 1, 1).unwrap().to_string(), "x_1^1*eta_1^2 - x_1^2*eta_1^1");
        assert_eq!(hwv_vector(&p(&[1]), 1, 1, 0).unwrap().to_string(), "x_1^1");
    }

    #[test]
    fn operator_examples() {
        let op = lie_operator(OperatorFamily::GlDRaise, 1, 2, 2, 1, 1).unwrap();
        assert_eq!(op.terms.len(), 2);
        let lap = lie_operator(OperatorFamily::OLaplacian, 1, 1, 2, 1, 1).unwrap();
        assert!(lap.apply(&hwv_vector(&p(&[2]), 2, 1, 1).unwrap()).unwrap().is_zero());
        let mixed = lie_operator(OperatorFamily::OLaplacian, 1, 2, 2, 1, 1).unwrap();
        assert!(mixed.apply(&hwv_vector(&p(&[1, 1]), 2, 1, 1).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn harmonic_examples() {
        assert!(check_highest_harmonic(&p(&[1, 1]), 2, 1, 1, Pair::Osp).unwrap().all_zero);
        assert!(check_highest_harmonic(&p(&[2]), 2, 1, 1, Pair::Osp).unwrap().all_zero);
        assert!(check_highest_harmonic(&p(&[1]), 2, 1, 1, Pair::SpO).unwrap().all_zero);
    }

    #[test]
    fn rank_examples() {
        let fam = tableau_family(&p(&[2]), 1, 1, 1).unwrap();
        assert_eq!(span_rank(&fam), 2);
        let x = hwv_vector(&p(&[1]), 1, 1, 0).unwrap();
        assert_eq!(span_rank(&[x.clone(), x]), 1);
        assert_eq!(span_rank(&[]), 0);
    }
}
