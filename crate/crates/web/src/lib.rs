//! Browser bindings. Every entry point takes plain strings and numbers and
//! returns a JSON string, either the result or `{"error": ...}`.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use superchar::characters::super_character;
use superchar::symfunc::hook_schur_expand;
use superchar::tensor::super_tensor_coeffs;
use superchar::{Partition, Result, SuperKind};

// Keeps a single click from locking up the tab.
const MAX_DEGREE: u32 = 10;
const MAX_VARS: usize = 4;

fn respond(r: Result<Value>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => json!({"error": e.to_string()}).to_string(),
    }
}

fn limits(m: usize, n: usize) -> Result<()> {
    if m > MAX_VARS || n > MAX_VARS {
        return Err(superchar::Error::InvalidParameters(format!("the demo allows m, n ≤ {MAX_VARS}")));
    }
    Ok(())
}

/// Hook Schur polynomial HS_λ(y1..ym; z1..zn).
#[wasm_bindgen]
pub fn hook_schur(lambda: &str, m: usize, n: usize) -> String {
    respond((|| {
        limits(m, n)?;
        let lam = Partition::parse(lambda)?;
        if lam.size() > MAX_DEGREE {
            return Err(superchar::Error::InvalidParameters(format!("the demo allows |λ| ≤ {MAX_DEGREE}")));
        }
        let s = hook_schur_expand(&lam, m, n);
        Ok(json!({"lambda": lam, "m": m, "n": n, "text": s.to_string(), "terms": s.len()}))
    })())
}

/// Truncated character of the spo or osp module labelled by λ.
#[wasm_bindgen]
pub fn character(algebra: &str, lambda: &str, d: u32, m: usize, n: usize, degree: u32) -> String {
    respond((|| {
        limits(m, n)?;
        if degree > MAX_DEGREE {
            return Err(superchar::Error::InvalidParameters(format!("the demo allows degree ≤ {MAX_DEGREE}")));
        }
        let kind: SuperKind = algebra.parse()?;
        let c = super_character(kind, &Partition::parse(lambda)?, d, m, n, degree)?;
        let mut v = c.to_json();
        v["hs_text"] = json!(c.hs_terms.to_string());
        v["text"] = json!(c.series.to_string());
        Ok(v)
    })())
}

/// Tensor product multiplicities. A rank of 0 means the default.
#[wasm_bindgen]
pub fn tensor(algebra: &str, mu: &str, gamma: &str, d: u32, r: u32, m: usize, n: usize, rank: usize) -> String {
    respond((|| {
        limits(m, n)?;
        if d + r > 12 || rank > 6 {
            return Err(superchar::Error::InvalidParameters("the demo allows d + r ≤ 12 and rank ≤ 6".into()));
        }
        let kind: SuperKind = algebra.parse()?;
        let (mu, gamma) = (Partition::parse(mu)?, Partition::parse(gamma)?);
        if mu.first_row().max(gamma.first_row()) > 6 {
            return Err(superchar::Error::InvalidParameters("the demo allows first rows ≤ 6".into()));
        }
        let t = super_tensor_coeffs(&mu, &gamma, d, r, m, n, kind, (rank > 0).then_some(rank))?;
        Ok(t.to_json())
    })())
}
