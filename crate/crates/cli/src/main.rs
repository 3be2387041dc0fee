use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use superchar::characters::{super_character, super_factor, trivial_hs, Prefactor};
use superchar::combinatorics::half_to_string;
use superchar::grassmann::check_highest_harmonic;
use superchar::selftest::run_selftest;
use superchar::symfunc::hook_schur_expand;
use superchar::tensor::super_tensor_coeffs;
use superchar::verify::verify_identity;
use superchar::wgroups::{bruteforce_wlambda, closed_index_set, coset_elements, lambda_w};
use superchar::{Error, IdentityId, Pair, Partition, SuperKind};

const SCHEMA: &str = "superchar/1";

#[derive(Parser)]
#[command(name = "superchar", version, about = "Exact characters for the Howe dualities on S(C^d ⊗ C^{m|n})")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Expand the hook Schur polynomial HS_λ(y1..ym; z1..zn).
    Hookschur {
        #[arg(value_parser = parse_partition)]
        lambda: Partition,
        m: usize,
        n: usize,
    },
    /// Character of the spo or osp module labelled by λ, truncated at the given degree.
    Character {
        #[arg(value_parser = parse_kind)]
        algebra: SuperKind,
        #[arg(value_parser = parse_partition)]
        lambda: Partition,
        d: u32,
        m: usize,
        n: usize,
        #[arg(long, default_value_t = 6)]
        degree: u32,
    },
    /// Character of the module carrying the group invariants.
    TrivialCharacter {
        /// O or Sp.
        #[arg(value_parser = parse_group)]
        group: Pair,
        d: u32,
        m: usize,
        n: usize,
        #[arg(long, default_value_t = 6)]
        degree: u32,
    },
    /// Check one identity exactly up to the given degree.
    Verify {
        /// glgl, o-sp, sp-so, o-spo, sp-osp, o-invariants, sp-invariants or hs-stability.
        #[arg(value_parser = parse_identity)]
        identity: IdentityId,
        d: u32,
        m: usize,
        n: usize,
        #[arg(long, default_value_t = 6)]
        degree: u32,
    },
    /// Multiplicities in the tensor product of two modules.
    Tensor {
        #[arg(value_parser = parse_kind)]
        algebra: SuperKind,
        #[arg(value_parser = parse_partition)]
        mu: Partition,
        #[arg(value_parser = parse_partition)]
        gamma: Partition,
        d: u32,
        r: u32,
        m: usize,
        n: usize,
        /// Rank of the auxiliary classical algebra; defaults to max(μ1, γ1, 1).
        #[arg(long)]
        rank: Option<usize>,
    },
    /// Sign group on the Enright side and its coset data.
    Wgroup {
        /// osp for O(d) with sp(2m), spo for Sp(d) with so(2m).
        #[arg(value_parser = parse_pair)]
        pair: Pair,
        #[arg(value_parser = parse_partition)]
        lambda: Partition,
        d: u32,
        m: usize,
        /// Scan the roots instead of using the closed form.
        #[arg(long)]
        bruteforce: bool,
    },
    /// Check that the determinantal vector is a harmonic highest weight vector.
    HwvCheck {
        #[arg(value_parser = parse_partition)]
        lambda: Partition,
        d: usize,
        m: usize,
        n: usize,
        /// O or Sp.
        #[arg(value_parser = parse_group)]
        group: Pair,
    },
    /// Run the built-in consistency suite.
    Selftest {
        #[arg(long)]
        quick: bool,
    },
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    Partition::parse(s).map_err(|e| e.to_string())
}

fn parse_kind(s: &str) -> Result<SuperKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_identity(s: &str) -> Result<IdentityId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_pair(s: &str) -> Result<Pair, String> {
    match s.to_ascii_lowercase().as_str() {
        "osp" => Ok(Pair::Osp),
        "spo" => Ok(Pair::SpO),
        _ => Err(format!("unknown pair {s:?}, expected osp or spo")),
    }
}

fn parse_group(s: &str) -> Result<Pair, String> {
    match s.to_ascii_lowercase().as_str() {
        "o" => Ok(Pair::Osp),
        "sp" => Ok(Pair::SpO),
        _ => Err(format!("unknown group {s:?}, expected O or Sp")),
    }
}

/// What a subcommand produced: the JSON payload, a text rendering and whether it counts as a pass.
struct Outcome {
    payload: Value,
    text: String,
    ok: bool,
}

fn prefactor_text(p: &Prefactor) -> String {
    format!("(y1...ym)^({}) (z1...zn)^({})", half_to_string(p.y_doubled), half_to_string(p.z_doubled))
}

fn run(cmd: &Command) -> Result<Outcome, Error> {
    let mut text = String::new();
    let out = match cmd {
        Command::Hookschur { lambda, m, n } => {
            let s = hook_schur_expand(lambda, *m, *n);
            let _ = writeln!(text, "HS_{lambda}(m={m}, n={n}) = {s}");
            Outcome {
                payload: json!({"command": "hookschur", "lambda": lambda, "m": m, "n": n, "series": s.to_json(), "text": s.to_string()}),
                text,
                ok: true,
            }
        }
        Command::Character { algebra, lambda, d, m, n, degree } => {
            let c = super_character(*algebra, lambda, *d, *m, *n, *degree)?;
            let mut payload = c.to_json();
            payload["command"] = json!("character");
            payload["text"] = json!(c.series.to_string());
            let _ = writeln!(text, "{} character of {lambda}, d={d} m={m} n={n}, degree {degree}", algebra.name());
            let _ = writeln!(text, "prefactor: {}", prefactor_text(&c.prefactor));
            if c.combined_pair {
                let _ = writeln!(text, "note: sum of the characters for λ and its bar");
            }
            let _ = writeln!(text, "HS terms: {}", c.hs_terms);
            let _ = writeln!(text, "series: {}", c.series);
            Outcome { payload, text, ok: true }
        }
        Command::TrivialCharacter { group, d, m, n, degree } => {
            let hs = trivial_hs(*group, *d, *m, *n, *degree)?;
            let series = hs.series.mul(&super_factor(*group, *m, *n, *degree)?)?;
            let pre = Prefactor::for_d(*d);
            let _ = writeln!(text, "trivial {} character for {}({d}), m={m} n={n}, degree {degree}", group.super_kind().name(), group.group_name());
            let _ = writeln!(text, "prefactor: {}", prefactor_text(&pre));
            let _ = writeln!(text, "HS terms: {}", hs.terms);
            let _ = writeln!(text, "series: {series}");
            Outcome {
                payload: json!({
                    "command": "trivial-character",
                    "group": group.group_name(),
                    "algebra": group.super_kind().name(),
                    "d": d, "m": m, "n": n, "degree": degree,
                    "prefactor": pre.to_json(),
                    "hs_terms": hs.terms.to_json(),
                    "series": series.to_json(),
                    "text": series.to_string(),
                }),
                text,
                ok: true,
            }
        }
        Command::Verify { identity, d, m, n, degree } => {
            let r = verify_identity(*identity, *d, *m, *n, *degree)?;
            let _ = writeln!(text, "{} {}: {} terms checked", r.identity, r.params, r.terms_checked);
            match &r.first_mismatch {
                None => {
                    let _ = writeln!(text, "exact match");
                }
                Some(mm) => {
                    let _ = writeln!(text, "mismatch at {}: lhs {} rhs {}", mm.monomial, mm.lhs, mm.rhs);
                }
            }
            let mut payload = r.to_json();
            payload["command"] = json!("verify");
            Outcome { payload, text, ok: r.passed() }
        }
        Command::Tensor { algebra, mu, gamma, d, r, m, n, rank } => {
            let t = super_tensor_coeffs(mu, gamma, *d, *r, *m, *n, *algebra, *rank)?;
            let _ = writeln!(text, "{} {mu} ⊗ {gamma}, d={d} r={r} m={m} n={n}, rank {}", algebra.name(), t.k);
            let _ = writeln!(text, "{:<16} coeff", "lambda");
            for (lam, c) in &t.entries {
                let _ = writeln!(text, "{:<16} {c}", lam.to_string());
            }
            let mut payload = t.to_json();
            payload["command"] = json!("tensor");
            Outcome { payload, text, ok: true }
        }
        Command::Wgroup { pair, lambda, d, m, bruteforce } => {
            let spec = if *bruteforce {
                bruteforce_wlambda(lambda, *d, *m, *pair)?
            } else {
                closed_index_set(lambda, *d, *m, *pair)?
            };
            let mut cosets = Vec::new();
            let _ = writeln!(text, "index set {:?}, {:?} sign changes", spec.index_set, spec.parity);
            let _ = writeln!(text, "{:<12} {:<5} Lambda_w", "flip", "sign");
            for w in coset_elements(&spec, *m)? {
                let (shape, sign) = lambda_w(lambda, *d, *m, &w, *pair)?;
                let _ = writeln!(text, "{:<12} {:<5} {shape}", format!("{:?}", w.flip), sign);
                cosets.push(json!({"flip": w.flip, "sign": sign, "lambda_w": shape}));
            }
            let mut payload = spec.to_json();
            payload["command"] = json!("wgroup");
            payload["method"] = json!(if *bruteforce { "bruteforce" } else { "closed-form" });
            payload["cosets"] = Value::Array(cosets);
            Outcome { payload, text, ok: true }
        }
        Command::HwvCheck { lambda, d, m, n, group } => {
            let r = check_highest_harmonic(lambda, *d, *m, *n, *group)?;
            let _ = writeln!(text, "{lambda} d={d} m={m} n={n} {}: {} operators applied", group.group_name(), r.operators_checked);
            match &r.offending {
                None => {
                    let _ = writeln!(text, "all annihilate the vector");
                }
                Some(op) => {
                    let _ = writeln!(text, "{op} does not annihilate the vector");
                }
            }
            Outcome {
                payload: json!({
                    "command": "hwv-check",
                    "lambda": r.lambda,
                    "d": r.d, "m": r.m, "n": r.n,
                    "group": group.group_name(),
                    "operators_checked": r.operators_checked,
                    "all_zero": r.all_zero,
                    "offending": r.offending,
                }),
                text,
                ok: r.all_zero,
            }
        }
        Command::Selftest { quick } => {
            let r = run_selftest(*quick);
            for c in &r.checks {
                let _ = writeln!(text, "{} {} ({} cases){}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.cases,
                    c.detail.as_ref().map(|d| format!(": {d}")).unwrap_or_default());
            }
            let mut payload = r.to_json();
            payload["command"] = json!("selftest");
            Outcome { payload, text, ok: r.passed() }
        }
    };
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(out) => {
            match cli.format {
                Format::Json => {
                    let mut payload = json!({"schema": SCHEMA});
                    if let (Value::Object(dst), Value::Object(src)) = (&mut payload, out.payload) {
                        dst.extend(src);
                    }
                    println!("{}", serde_json::to_string_pretty(&payload).expect("json"));
                }
                Format::Text => print!("{}", out.text),
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::LogicFault(_) | Error::NotInvertible(_) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}
