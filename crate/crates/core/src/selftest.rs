//! Built-in consistency suite, in a quick and a full size.

use serde::Serialize;
use serde_json::{json, Value};

use crate::characters::{hs_series, trivial_hs};
use crate::combinatorics::{count_ssyt, enumerate_hook_tableaux, enumerate_partitions, Partition, PartitionConstraints};
use crate::error::Result;
use crate::grassmann::{check_highest_harmonic, pair_family, span_rank, tableau_family};
use crate::tensor::{verify_character_product, verify_stability};
use crate::verify::{exterior_dimension_check, graded_dimension_check, verify_identity, ExteriorBranch, VerificationReport};
use crate::wgroups::{bruteforce_wlambda, closed_index_set};
use crate::{IdentityId, Pair, SuperKind};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub cases: usize,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SelftestReport {
    pub quick: bool,
    pub checks: Vec<CheckOutcome>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> Value {
        json!({"quick": self.quick, "passed": self.passed(), "checks": self.checks})
    }
}

/// Running tally for one check; stops at the first failure.
struct Tally {
    cases: usize,
    failure: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Tally { cases: 0, failure: None }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }

    fn report(&mut self, r: Result<VerificationReport>) {
        match r {
            Ok(rep) => {
                let ok = rep.passed();
                self.record(ok, || format!("{} {} at {:?}", rep.identity, rep.params, rep.first_mismatch));
            }
            Err(e) => self.record(false, || e.to_string()),
        }
    }

    fn finish(self, name: &str) -> CheckOutcome {
        CheckOutcome { name: name.into(), passed: self.failure.is_none(), cases: self.cases, detail: self.failure }
    }
}

fn partitions(max: u32) -> Vec<Partition> {
    enumerate_partitions(max, &PartitionConstraints::default())
}

/// Runs every check. The quick suite shrinks the parameter ranges.
pub fn run_selftest(quick: bool) -> SelftestReport {
    let cap = if quick { 4 } else { 6 };
    let super_cap = if quick { 4 } else { 5 };
    let mut checks = Vec::new();

    let mut t = Tally::new();
    let glgl: &[(u32, usize, usize)] = if quick { &[(1, 1, 1), (2, 1, 1)] } else { &[(1, 1, 1), (2, 1, 1), (2, 2, 1), (3, 1, 2)] };
    for &(d, m, n) in glgl {
        t.report(verify_identity(IdentityId::Glgl, d, m, n, cap));
    }
    checks.push(t.finish("glgl identity"));

    let mut t = Tally::new();
    let max_m = if quick { 2 } else { 3 };
    for d in 1..=5 {
        for m in 1..=max_m {
            t.report(verify_identity(IdentityId::OSp, d, m, 0, cap));
        }
    }
    for d in [2, 4] {
        for m in 1..=max_m {
            t.report(verify_identity(IdentityId::SpSo, d, m, 0, cap));
        }
    }
    checks.push(t.finish("classical identities"));

    let mut t = Tally::new();
    for d in 1..=4 {
        for m in 1..=2 {
            for n in 1..=2 {
                t.report(verify_identity(IdentityId::OSpo, d, m, n, super_cap));
                if d % 2 == 0 {
                    t.report(verify_identity(IdentityId::SpOsp, d, m, n, super_cap));
                }
            }
        }
    }
    checks.push(t.finish("super identities"));

    let mut t = Tally::new();
    let wmax = if quick { 4 } else { 5 };
    for pair in [Pair::Osp, Pair::SpO] {
        for d in 1..=5 {
            for lam in partitions(wmax).iter().filter(|l| pair.admits(l, d)) {
                let ok = match (closed_index_set(lam, d, 8, pair), bruteforce_wlambda(lam, d, 8, pair)) {
                    (Ok(a), Ok(b)) => a.canonical() == b.canonical(),
                    _ => false,
                };
                t.record(ok, || format!("{pair} d={d} {lam}"));
            }
        }
    }
    checks.push(t.finish("sign group closed form against root scan"));

    let mut t = Tally::new();
    for d in [1, 3] {
        for m in 0..=2 {
            for n in 0..=2 {
                let ok = match (trivial_hs(Pair::Osp, d, m, n, cap), hs_series(&Partition::empty(), d, m, n, cap, Pair::Osp)) {
                    (Ok(a), Ok(b)) => a.terms == b.terms,
                    _ => false,
                };
                t.record(ok, || format!("trivial sums differ for d={d} m={m} n={n}"));
                t.report(verify_identity(IdentityId::OInvariants, d, m, n, cap));
            }
        }
    }
    checks.push(t.finish("trivial character"));

    let mut t = Tally::new();
    for d in 1..=3 {
        for m in 0..=2 {
            for n in 0..=2 {
                t.report(verify_identity(IdentityId::HsStability, d, m, n, super_cap));
            }
        }
    }
    checks.push(t.finish("truncation stability"));

    let mut t = Tally::new();
    let hmax = if quick { 3 } else { 4 };
    for d in 1..=3usize {
        for m in 0..=2 {
            for n in 0..=2 {
                let c = PartitionConstraints { max_length: Some(d), hook: Some((m, n)), ..Default::default() };
                for lam in enumerate_partitions(hmax, &c) {
                    for pair in [Pair::Osp, Pair::SpO] {
                        if pair.admits(&lam, d as u32) {
                            let ok = check_highest_harmonic(&lam, d, m, n, pair).map(|r| r.all_zero).unwrap_or(false);
                            t.record(ok, || format!("{pair} {lam} d={d} m={m} n={n}"));
                        }
                    }
                }
            }
        }
    }
    for d in 1..=2usize {
        for m in 0..=2 {
            for n in 0..=2 {
                let c = PartitionConstraints { max_length: Some(d), hook: Some((m, n)), ..Default::default() };
                for lam in enumerate_partitions(3, &c) {
                    let tabs = enumerate_hook_tableaux(&lam, m, n).len();
                    let r1 = tableau_family(&lam, d, m, n).map(|f| span_rank(&f));
                    let r2 = pair_family(&lam, d, m, n).map(|f| span_rank(&f));
                    let ok = r1 == Ok(tabs) && r2 == Ok(tabs * count_ssyt(&lam, d) as usize);
                    t.record(ok, || format!("rank of {lam} d={d} m={m} n={n}"));
                }
            }
        }
    }
    checks.push(t.finish("highest weight vectors"));

    let mut t = Tally::new();
    for d in 1..=3 {
        for m in 0..=3 {
            for n in 0..=3 {
                t.report(graded_dimension_check(d, m, n, cap));
            }
        }
    }
    for d in 1..=3 {
        for k in 1..=3 {
            t.report(exterior_dimension_check(d, k, ExteriorBranch::O));
        }
    }
    for d in [2, 4] {
        for k in 1..=2 {
            t.report(exterior_dimension_check(d, k, ExteriorBranch::Sp));
        }
    }
    checks.push(t.finish("dimension counts"));

    let mut t = Tally::new();
    let small = partitions(if quick { 2 } else { 3 });
    let spo_dims: &[u32] = if quick { &[1, 2] } else { &[1, 2, 3] };
    for (kind, dims) in [(SuperKind::Spo, spo_dims), (SuperKind::Osp, &[2u32, 4][..])] {
        for &d in dims {
            for &r in dims {
                for mu in small.iter().filter(|p| kind.pair().admits(p, d)) {
                    for ga in small.iter().filter(|p| kind.pair().admits(p, r)) {
                        let k = (mu.first_row().max(ga.first_row()).max(1)) as usize;
                        t.report(verify_stability(mu, ga, d, r, kind, k));
                    }
                }
            }
        }
    }
    let hooks: &[(usize, usize)] = if quick { &[(1, 1)] } else { &[(1, 1), (1, 2), (2, 1)] };
    for (kind, dims) in [(SuperKind::Spo, [1u32, 3]), (SuperKind::Osp, [2, 4])] {
        for d in dims {
            for r in dims {
                for &(m, n) in hooks {
                    let c = PartitionConstraints { hook: Some((m, n)), ..Default::default() };
                    let labels = enumerate_partitions(if quick { 1 } else { 2 }, &c);
                    for mu in labels.iter().filter(|p| kind.pair().admits(p, d)) {
                        for ga in labels.iter().filter(|p| kind.pair().admits(p, r)) {
                            t.report(verify_character_product(mu, ga, d, r, m, n, kind, 4));
                        }
                    }
                }
            }
        }
    }
    checks.push(t.finish("tensor products"));

    SelftestReport { quick, checks }
}
