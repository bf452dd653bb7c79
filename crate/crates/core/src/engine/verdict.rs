use std::fmt;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::intlin::bigint_json;

/// Why a group was shown not to be adorable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NotAdorableReason {
    NontrivialAlexanderPolynomial,
    NonabelianFree,
}

/// Why exploration stopped without a decision.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Stall {
    InfiniteAbelianization,
    DepthBudget,
    SizeBudget,
}

/// Witness attached to an adorable verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// Orders of the successive derived quotients of a presented group,
    /// ending with the trivial quotient.
    DerivedQuotients(Vec<BigInt>),
    /// Orders `|G^0|, …, |G^d|` of the derived series of a finite group.
    FiniteDerivedSeries(Vec<usize>),
    TrivialAlexanderPolynomial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Evidence {
    /// A derived subgroup presented with this many generators and no relators.
    FreeOfRank {
        depth: usize,
        rank: usize,
    },
    AlexanderPolynomial {
        polynomial: String,
        degree: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Adorable {
        doa: usize,
        certificate: Certificate,
    },
    NotAdorable {
        reason: NotAdorableReason,
        evidence: Evidence,
    },
    Unknown {
        depth: usize,
        stall: Stall,
    },
}

impl NotAdorableReason {
    pub fn name(self) -> &'static str {
        match self {
            NotAdorableReason::NontrivialAlexanderPolynomial => "NontrivialAlexanderPolynomial",
            NotAdorableReason::NonabelianFree => "NonabelianFree",
        }
    }
}

impl Stall {
    pub fn name(self) -> &'static str {
        match self {
            Stall::InfiniteAbelianization => "InfiniteAbelianization",
            Stall::DepthBudget => "DepthBudget",
            Stall::SizeBudget => "SizeBudget",
        }
    }
}

impl Certificate {
    pub fn to_json(&self) -> Value {
        match self {
            Certificate::DerivedQuotients(orders) => json!({
                "kind": "derived_quotients",
                "quotient_orders": orders.iter().map(bigint_json).collect::<Vec<_>>(),
            }),
            Certificate::FiniteDerivedSeries(orders) => json!({
                "kind": "finite_derived_series",
                "subgroup_orders": orders,
            }),
            Certificate::TrivialAlexanderPolynomial => {
                json!({ "kind": "trivial_alexander_polynomial" })
            }
        }
    }
}

impl Evidence {
    pub fn to_json(&self) -> Value {
        match self {
            Evidence::FreeOfRank { depth, rank } => json!({ "depth": depth, "free_rank": rank }),
            Evidence::AlexanderPolynomial { polynomial, degree } => {
                json!({ "polynomial": polynomial, "degree": degree })
            }
        }
    }
}

impl Verdict {
    pub fn is_unknown(&self) -> bool {
        matches!(self, Verdict::Unknown { .. })
    }

    pub fn doa(&self) -> Option<usize> {
        match self {
            Verdict::Adorable { doa, .. } => Some(*doa),
            _ => None,
        }
    }

    /// Short label used as an aggregation key, e.g. `Unknown:DepthBudget`.
    pub fn label(&self) -> String {
        match self {
            Verdict::Adorable { .. } => "Adorable".into(),
            Verdict::NotAdorable { reason, .. } => format!("NotAdorable:{}", reason.name()),
            Verdict::Unknown { stall, .. } => format!("Unknown:{}", stall.name()),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Verdict::Adorable { doa, certificate } => json!({
                "verdict": "Adorable",
                "doa": doa,
                "certificate": certificate.to_json(),
            }),
            Verdict::NotAdorable { reason, evidence } => json!({
                "verdict": "NotAdorable",
                "reason": reason.name(),
                "evidence": evidence.to_json(),
            }),
            Verdict::Unknown { depth, stall } => json!({
                "verdict": "Unknown",
                "depth": depth,
                "stall": stall.name(),
            }),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Adorable { doa, .. } => write!(f, "Adorable (doa {doa})"),
            Verdict::NotAdorable { reason, evidence } => {
                write!(f, "NotAdorable ({})", reason.name())?;
                match evidence {
                    Evidence::FreeOfRank { depth, rank } => {
                        write!(f, ": derived series stage {depth} is free of rank {rank}")
                    }
                    Evidence::AlexanderPolynomial { polynomial, degree } => {
                        write!(f, ": {polynomial} (degree {degree})")
                    }
                }
            }
            Verdict::Unknown { depth, stall } => {
                write!(f, "Unknown ({} at depth {depth})", stall.name())
            }
        }
    }
}
