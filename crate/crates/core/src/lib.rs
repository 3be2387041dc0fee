//! Exact characters for the Howe dualities on S(C^d ⊗ C^{m|n}).
//!
//! Two dual pairs are covered: (O(d), spo(2m|2n)) and (Sp(d), osp(2m|2n)).
//! Everything is computed over the integers. Half-integers are stored doubled.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

pub mod characters;
pub mod classical;
pub mod combinatorics;
pub mod error;
pub mod grassmann;
pub mod selftest;
pub mod symfunc;
pub mod tensor;
pub mod verify;
pub mod wgroups;

pub use combinatorics::{GeneralizedVector, HookTableau, Letter, Partition};
pub use error::{Error, Result};
pub use symfunc::{Alphabet, Monomial, PowerSeries, SchurExpansion};

/// The superalgebra side of a duality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SuperKind {
    /// spo(2m|2n), dual to O(d).
    Spo,
    /// osp(2m|2n), dual to Sp(d).
    Osp,
}

impl SuperKind {
    pub fn pair(self) -> Pair {
        match self {
            SuperKind::Spo => Pair::Osp,
            SuperKind::Osp => Pair::SpO,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SuperKind::Spo => "spo",
            SuperKind::Osp => "osp",
        }
    }
}

impl FromStr for SuperKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "spo" => Ok(SuperKind::Spo),
            "osp" => Ok(SuperKind::Osp),
            _ => Err(Error::Parse(format!("unknown superalgebra {s:?}, expected spo or osp"))),
        }
    }
}

/// A dual pair, named after the group and the type of the Enright side.
///
/// `Osp` is O(d) with sp(2m) (type C), `SpO` is Sp(d) with so(2m) (type D).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Pair {
    Osp,
    SpO,
}

impl Pair {
    pub fn super_kind(self) -> SuperKind {
        match self {
            Pair::Osp => SuperKind::Spo,
            Pair::SpO => SuperKind::Osp,
        }
    }

    pub fn group_name(self) -> &'static str {
        match self {
            Pair::Osp => "O",
            Pair::SpO => "Sp",
        }
    }

    /// Whether `lambda` labels a module of the group in this pair.
    pub fn admits(self, lambda: &Partition, d: u32) -> bool {
        match self {
            Pair::Osp => lambda.two_column_sum() <= d,
            Pair::SpO => d % 2 == 0 && lambda.len() as u32 <= d / 2,
        }
    }

    pub(crate) fn check(self, lambda: &Partition, d: u32) -> Result<()> {
        if d == 0 {
            return error::precondition("d must be positive");
        }
        match self {
            Pair::Osp if !self.admits(lambda, d) => error::precondition(format!(
                "{lambda} needs its first two columns to sum to at most d={d}"
            )),
            Pair::SpO if d % 2 == 1 => error::precondition(format!("Sp(d) needs d even, got {d}")),
            Pair::SpO if !self.admits(lambda, d) => {
                error::precondition(format!("{lambda} has more than d/2={} rows", d / 2))
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pair::Osp => write!(f, "Osp"),
            Pair::SpO => write!(f, "SpO"),
        }
    }
}

impl FromStr for Pair {
    type Err = Error;
    /// Accepts the pair names `osp`/`spo` and the group names `O`/`Sp`.
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "osp" | "o" => Ok(Pair::Osp),
            "spo" | "sp" => Ok(Pair::SpO),
            _ => Err(Error::Parse(format!("unknown pair {s:?}, expected osp, spo, O or Sp"))),
        }
    }
}

/// Names of the identities the harness can check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum IdentityId {
    /// (gl(d), gl(m|n)) super Cauchy identity.
    #[serde(rename = "glgl")]
    Glgl,
    /// O(d) x sp(2m) on S(C^d ⊗ C^m).
    #[serde(rename = "o-sp")]
    OSp,
    /// Sp(d) x so(2m) on S(C^d ⊗ C^m).
    #[serde(rename = "sp-so")]
    SpSo,
    /// O(d) x spo(2m|2n).
    #[serde(rename = "o-spo")]
    OSpo,
    /// Sp(d) x osp(2m|2n).
    #[serde(rename = "sp-osp")]
    SpOsp,
    /// Trivial spo character against the O(d)-invariants.
    #[serde(rename = "o-invariants")]
    OInvariants,
    /// Trivial osp character against the Sp(d)-invariants.
    #[serde(rename = "sp-invariants")]
    SpInvariants,
    /// Truncated hook Schur sums at two ranks above the bound.
    #[serde(rename = "hs-stability")]
    HsStability,
}

impl IdentityId {
    pub const ALL: [IdentityId; 8] = [
        IdentityId::Glgl,
        IdentityId::OSp,
        IdentityId::SpSo,
        IdentityId::OSpo,
        IdentityId::SpOsp,
        IdentityId::OInvariants,
        IdentityId::SpInvariants,
        IdentityId::HsStability,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::Glgl => "glgl",
            IdentityId::OSp => "o-sp",
            IdentityId::SpSo => "sp-so",
            IdentityId::OSpo => "o-spo",
            IdentityId::SpOsp => "sp-osp",
            IdentityId::OInvariants => "o-invariants",
            IdentityId::SpInvariants => "sp-invariants",
            IdentityId::HsStability => "hs-stability",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = IdentityId::ALL.iter().map(|i| i.name()).collect();
                Error::Parse(format!("unknown identity {s:?}, expected one of {}", names.join(", ")))
            })
    }
}
