//! Test-side oracles, written without the library's character code.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use superchar::classical::Family;

/// Positive roots in doubled coordinates.
fn positive_roots(family: Family, k: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            for s in [2, -2] {
                let mut v = vec![0; k];
                v[i] = 2;
                v[j] = s;
                out.push(v);
            }
        }
        let mut v = vec![0; k];
        match family {
            Family::B => v[i] = 2,
            Family::C => v[i] = 4,
            Family::D => continue,
        }
        out.push(v);
    }
    out
}

fn rho(family: Family, k: usize) -> Vec<i64> {
    (0..k as i64)
        .map(|i| {
            let r = k as i64 - 1 - i;
            match family {
                Family::B => 2 * r + 1,
                Family::C => 2 * r + 2,
                Family::D => 2 * r,
            }
        })
        .collect()
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn add(a: &[i64], b: &[i64], t: i64) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + t * y).collect()
}

/// Every weight multiplicity of V(λ), by Freudenthal over the full weight set.
pub fn weight_multiplicities(family: Family, lambda: &[i64]) -> BTreeMap<Vec<i64>, i64> {
    let k = lambda.len();
    let roots = positive_roots(family, k);
    let bound = dot(lambda, lambda);
    let mut seen = BTreeSet::from([lambda.to_vec()]);
    let mut stack = vec![lambda.to_vec()];
    while let Some(v) = stack.pop() {
        for a in &roots {
            let u = add(&v, a, -1);
            if dot(&u, &u) <= bound && seen.insert(u.clone()) {
                stack.push(u);
            }
        }
    }
    let height = |v: &[i64]| -> i64 { v.iter().enumerate().map(|(i, x)| (k - i) as i64 * x).sum() };
    let mut order: Vec<Vec<i64>> = seen.into_iter().collect();
    order.sort_by_key(|v| -height(v));
    let r = rho(family, k);
    let lr = add(lambda, &r, 1);
    let mut mult: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    for mu in order {
        if mu == lambda {
            mult.insert(mu, 1);
            continue;
        }
        let mut acc = 0;
        for a in &roots {
            let mut j = 1;
            loop {
                let v = add(&mu, a, j);
                match mult.get(&v) {
                    Some(m) => acc += m * dot(&v, a),
                    None if dot(&v, &v) > bound => break,
                    None => {}
                }
                j += 1;
            }
        }
        let mr = add(&mu, &r, 1);
        let den = dot(&lr, &lr) - dot(&mr, &mr);
        if den == 0 {
            continue;
        }
        assert_eq!((2 * acc) % den, 0, "non-integral multiplicity at {mu:?}");
        let m = 2 * acc / den;
        if m > 0 {
            mult.insert(mu, m);
        }
    }
    mult
}

/// Moves a regular weight into the dominant chamber, returning it with det(w).
fn reflect_to_dominant(family: Family, v: &[i64]) -> Option<(Vec<i64>, i64)> {
    let k = v.len();
    let mut abs: Vec<(i64, usize)> = v.iter().enumerate().map(|(i, x)| (x.abs(), i)).collect();
    abs.sort_by(|a, b| b.cmp(a));
    let mut sign = 1;
    for i in 0..k {
        for j in i + 1..k {
            if abs[i].1 > abs[j].1 {
                sign = -sign;
            }
        }
    }
    let vals: Vec<i64> = abs.iter().map(|p| p.0).collect();
    if vals.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    let negatives = v.iter().filter(|x| **x < 0).count();
    match family {
        Family::B | Family::C => {
            if vals.last() == Some(&0) {
                return None;
            }
            if negatives % 2 == 1 {
                sign = -sign;
            }
            Some((vals, sign))
        }
        Family::D => {
            let mut out = vals;
            if negatives % 2 == 1 && out[k - 1] != 0 {
                out[k - 1] = -out[k - 1];
            }
            Some((out, sign))
        }
    }
}

/// V(λ) ⊗ V(μ) by the Racah–Speiser reflection rule.
pub fn racah_speiser(family: Family, lambda: &[i64], mu: &[i64]) -> BTreeMap<Vec<i64>, i64> {
    let k = lambda.len();
    let r = rho(family, k);
    let mut out: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    for (nu, m) in weight_multiplicities(family, mu) {
        let shifted = add(&add(lambda, &nu, 1), &r, 1);
        if let Some((dom, s)) = reflect_to_dominant(family, &shifted) {
            *out.entry(add(&dom, &r, -1)).or_insert(0) += s * m;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Dominant weights (doubled) of rank k with entries of absolute value at most `max`.
pub fn dominant_weights(family: Family, k: usize, max: i64, half: bool) -> Vec<Vec<i64>> {
    let vals: Vec<i64> = (-2 * max..=2 * max).filter(|v| v.rem_euclid(2) == half as i64).collect();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(family: Family, k: usize, vals: &[i64], cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == k {
            let ok = match family {
                Family::B | Family::C => cur.windows(2).all(|w| w[0] >= w[1]) && cur[k - 1] >= 0,
                Family::D => k < 2 || (cur[..k - 1].windows(2).all(|w| w[0] >= w[1]) && cur[k - 2] >= cur[k - 1].abs()),
            };
            if ok {
                out.push(cur.clone());
            }
            return;
        }
        for &v in vals {
            cur.push(v);
            rec(family, k, vals, cur, out);
            cur.pop();
        }
    }
    rec(family, k, &vals, &mut cur, &mut out);
    out
}
