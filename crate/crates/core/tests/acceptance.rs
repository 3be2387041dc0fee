//! Acceptance gate: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the lines always reach stdout.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use superchar::characters::{hs_series, trivial_hs};
use superchar::classical::Family;
use superchar::combinatorics::{count_ssyt, enumerate_hook_tableaux, enumerate_partitions, Partition, PartitionConstraints};
use superchar::grassmann::{check_highest_harmonic, pair_family, span_rank, tableau_family};
use superchar::tensor::{tensor_decompose_classical, verify_character_product, verify_stability};
use superchar::verify::{exterior_dimension_check, graded_dimension_check, verify_identity, ExteriorBranch, VerificationReport};
use superchar::wgroups::{bruteforce_wlambda, closed_index_set};
use superchar::{GeneralizedVector, IdentityId, Pair, SuperKind};

type Outcome = Result<String, String>;

fn expect(rep: superchar::Result<VerificationReport>) -> Result<usize, String> {
    match rep {
        Ok(r) if r.passed() => Ok(r.terms_checked),
        Ok(r) => Err(format!("{} {} mismatch at {:?}", r.identity, r.params, r.first_mismatch)),
        Err(e) => Err(e.to_string()),
    }
}

fn within(t: Instant, limit: Duration, what: &str) -> Result<(), String> {
    if t.elapsed() > limit {
        Err(format!("{what} took {:?}, limit {limit:?}", t.elapsed()))
    } else {
        Ok(())
    }
}

fn partitions(max: u32) -> Vec<Partition> {
    enumerate_partitions(max, &PartitionConstraints::default())
}

fn glgl() -> Outcome {
    let mut terms = 0;
    for (d, m, n, l) in [(1, 1, 1, 6), (2, 1, 1, 6), (2, 2, 1, 6), (3, 1, 2, 5)] {
        let t = Instant::now();
        terms += expect(verify_identity(IdentityId::Glgl, d, m, n, l))?;
        within(t, Duration::from_secs(30), "one glgl check")?;
    }
    Ok(format!("4 parameter sets, {terms} terms"))
}

fn orthogonal_classical() -> Outcome {
    let t = Instant::now();
    let mut terms = 0;
    for d in 1..=5 {
        for m in 1..=3 {
            terms += expect(verify_identity(IdentityId::OSp, d, m, 0, 6))?;
        }
    }
    within(t, Duration::from_secs(120), "the O(d) sweep")?;
    Ok(format!("15 parameter sets, {terms} terms"))
}

fn symplectic_classical() -> Outcome {
    let mut terms = 0;
    for d in [2, 4] {
        for m in 1..=3 {
            terms += expect(verify_identity(IdentityId::SpSo, d, m, 0, 6))?;
        }
    }
    Ok(format!("6 parameter sets, {terms} terms"))
}

fn super_identities() -> Outcome {
    let t = Instant::now();
    let (mut sets, mut terms) = (0, 0);
    for d in 1..=4 {
        for m in 1..=2 {
            for n in 1..=2 {
                terms += expect(verify_identity(IdentityId::OSpo, d, m, n, 5))?;
                sets += 1;
                if d % 2 == 0 {
                    terms += expect(verify_identity(IdentityId::SpOsp, d, m, n, 5))?;
                    sets += 1;
                }
            }
        }
    }
    within(t, Duration::from_secs(300), "the super sweep")?;
    Ok(format!("{sets} parameter sets, {terms} terms"))
}

fn sign_groups() -> Outcome {
    let mut cases = 0;
    for pair in [Pair::Osp, Pair::SpO] {
        for d in 1..=5 {
            for lam in partitions(5).iter().filter(|l| pair.admits(l, d)) {
                let a = closed_index_set(lam, d, 8, pair).map_err(|e| e.to_string())?;
                let b = bruteforce_wlambda(lam, d, 8, pair).map_err(|e| e.to_string())?;
                if a.canonical() != b.canonical() {
                    return Err(format!("{pair} d={d} {lam}: {:?} against {:?}", a.canonical(), b.canonical()));
                }
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} cases, zero discrepancies"))
}

fn trivial_character() -> Outcome {
    let mut cases = 0;
    for d in [1, 3] {
        for m in 0..=2 {
            for n in 0..=2 {
                let a = trivial_hs(Pair::Osp, d, m, n, 6).map_err(|e| e.to_string())?;
                let b = hs_series(&Partition::empty(), d, m, n, 6, Pair::Osp).map_err(|e| e.to_string())?;
                if a.terms != b.terms || a.series != b.series {
                    return Err(format!("d={d} m={m} n={n}: {} against {}", a.terms, b.terms));
                }
                expect(verify_identity(IdentityId::OInvariants, d, m, n, 6))?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} cases, three paths agree"))
}

fn truncation_stability() -> Outcome {
    let mut terms = 0;
    for d in 1..=3 {
        for m in 0..=2 {
            for n in 0..=2 {
                // every λ with |λ| ≤ 4 is covered by the sweep at degree 5
                terms += expect(verify_identity(IdentityId::HsStability, d, m, n, 5))?;
            }
        }
    }
    Ok(format!("27 parameter sets, {terms} terms"))
}

fn harmonicity() -> Outcome {
    let mut harmonic = 0;
    for d in 1..=3usize {
        for m in 0..=2 {
            for n in 0..=2 {
                let c = PartitionConstraints { max_length: Some(d), hook: Some((m, n)), ..Default::default() };
                for lam in enumerate_partitions(4, &c) {
                    for pair in [Pair::Osp, Pair::SpO] {
                        if !pair.admits(&lam, d as u32) {
                            continue;
                        }
                        let r = check_highest_harmonic(&lam, d, m, n, pair).map_err(|e| e.to_string())?;
                        if !r.all_zero {
                            return Err(format!("{pair} {lam} d={d} m={m} n={n}: {:?}", r.offending));
                        }
                        harmonic += 1;
                    }
                }
            }
        }
    }
    let mut ranks = 0;
    for d in 1..=2usize {
        for m in 0..=2 {
            for n in 0..=2 {
                let c = PartitionConstraints { max_length: Some(d), hook: Some((m, n)), ..Default::default() };
                for lam in enumerate_partitions(3, &c) {
                    let tabs = enumerate_hook_tableaux(&lam, m, n).len();
                    let r1 = span_rank(&tableau_family(&lam, d, m, n).map_err(|e| e.to_string())?);
                    let r2 = span_rank(&pair_family(&lam, d, m, n).map_err(|e| e.to_string())?);
                    let want = tabs * count_ssyt(&lam, d) as usize;
                    if r1 != tabs || r2 != want {
                        return Err(format!("{lam} d={d} m={m} n={n}: ranks {r1}/{tabs}, {r2}/{want}"));
                    }
                    ranks += 1;
                }
            }
        }
    }
    Ok(format!("{harmonic} harmonic checks, {ranks} rank checks"))
}

fn dimensions() -> Outcome {
    let mut cases = 0;
    for d in 1..=3 {
        for m in 0..=3 {
            for n in 0..=3 {
                expect(graded_dimension_check(d, m, n, 6))?;
                cases += 1;
            }
        }
    }
    for d in 1..=3 {
        for k in 1..=3 {
            expect(exterior_dimension_check(d, k, ExteriorBranch::O))?;
            cases += 1;
        }
    }
    for d in [2, 4] {
        for k in 1..=2 {
            expect(exterior_dimension_check(d, k, ExteriorBranch::Sp))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} counts"))
}

fn tensor_suite() -> Outcome {
    let small = partitions(3);
    let mut stability = 0;
    for (kind, dims) in [(SuperKind::Spo, &[1u32, 2, 3][..]), (SuperKind::Osp, &[2, 4][..])] {
        for &d in dims {
            for &r in dims {
                for mu in small.iter().filter(|p| kind.pair().admits(p, d)) {
                    for ga in small.iter().filter(|p| kind.pair().admits(p, r)) {
                        let k = (mu.first_row().max(ga.first_row()).max(1)) as usize;
                        expect(verify_stability(mu, ga, d, r, kind, k))?;
                        stability += 1;
                    }
                }
            }
        }
    }
    let mut peeled = 0;
    for (family, k) in [(Family::C, 1), (Family::C, 2), (Family::D, 2)] {
        let mut weights = common::dominant_weights(family, k, 3, false);
        if family == Family::D {
            weights.extend(common::dominant_weights(family, k, 3, true));
        }
        for a in &weights {
            for b in &weights {
                if (a[0] - b[0]).rem_euclid(2) != 0 {
                    continue;
                }
                let ga = GeneralizedVector::from_doubled(a.clone()).unwrap();
                let gb = GeneralizedVector::from_doubled(b.clone()).unwrap();
                let got = tensor_decompose_classical(family, k, &ga, &gb).map_err(|e| e.to_string())?;
                let want = common::racah_speiser(family, a, b);
                let got: std::collections::BTreeMap<Vec<i64>, i64> = got
                    .entries
                    .iter()
                    .map(|(w, c)| (w.doubled().to_vec(), i64::try_from(c).unwrap()))
                    .collect();
                if got != want {
                    return Err(format!("{family:?}{k} {a:?} x {b:?}: {got:?} against {want:?}"));
                }
                peeled += 1;
            }
        }
    }
    let mut products = 0;
    for (kind, dims) in [(SuperKind::Spo, [1u32, 3]), (SuperKind::Osp, [2, 4])] {
        for d in dims {
            for r in dims {
                for (m, n) in [(1, 1), (1, 2), (2, 1)] {
                    let c = PartitionConstraints { hook: Some((m, n)), ..Default::default() };
                    let labels = enumerate_partitions(2, &c);
                    for mu in labels.iter().filter(|p| kind.pair().admits(p, d)) {
                        for ga in labels.iter().filter(|p| kind.pair().admits(p, r)) {
                            expect(verify_character_product(mu, ga, d, r, m, n, kind, 4))?;
                            products += 1;
                        }
                    }
                }
            }
        }
    }
    Ok(format!("{stability} stability checks, {peeled} peelings against Racah-Speiser, {products} character products"))
}

/// No floating point type appears anywhere in the library source.
fn exact_arithmetic() -> Result<(), String> {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("src");
    for entry in std::fs::read_dir(&dir).map_err(|e| e.to_string())? {
        let path = entry.map_err(|e| e.to_string())?.path();
        let text = std::fs::read_to_string(&path).map_err(|e| e.to_string())?;
        for token in ["f32", "f64"] {
            if text.split(|c: char| !c.is_alphanumeric() && c != '_').any(|w| w == token) {
                return Err(format!("{} uses {token}", path.display()));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let start = Instant::now();
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("gl(d) x gl(m|n) identity", glgl),
        ("O(d) x sp(2m) identities", orthogonal_classical),
        ("Sp(d) x so(2m) identity", symplectic_classical),
        ("super identities", super_identities),
        ("closed-form sign groups against root scan", sign_groups),
        ("trivial character, three paths", trivial_character),
        ("truncation stability", truncation_stability),
        ("harmonicity and highest weight vectors", harmonicity),
        ("dimension identities", dimensions),
        ("tensor products", tensor_suite),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        match run() {
            Ok(detail) => println!("PASS criterion {}: {name} ({detail}; {:.2?})", i + 1, t.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {why}", i + 1);
            }
        }
    }
    let total = start.elapsed();
    match exact_arithmetic().and_then(|_| within(start, Duration::from_secs(600), "the full suite")) {
        Ok(()) => println!("PASS criterion 11: wall clock and exact arithmetic ({total:.2?}, no floating point in the library)"),
        Err(why) => {
            failed += 1;
            println!("FAIL criterion 11: wall clock and exact arithmetic: {why}");
        }
    }
    if failed == 0 {
        println!("acceptance: 11 of 11 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of 11 criteria fail");
        ExitCode::FAILURE
    }
}
