//! Degenerations `A → B`: verification of parametric-basis witnesses,
//! invariant screening, and the degeneration graph.

mod graph;
mod parametric;

pub use graph::{build_graph, DegenerationGraph, EdgeStatus, GraphEdge, GraphNode, Refutation};
pub use parametric::{limit_algebra, parametric_constants, ParametricBasis, ParametricConstants};

use crate::algcore::{fingerprint, verify_isomorphism, Algebra, InvariantFingerprint};
use crate::error::{Error, Result};
use crate::exact::MatrixQ;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Anything that can turn a catalog id into an algebra.
pub trait AlgebraSource {
    fn algebra(&self, id: &str) -> Result<Algebra>;
}

impl AlgebraSource for BTreeMap<String, Algebra> {
    fn algebra(&self, id: &str) -> Result<Algebra> {
        self.get(id).cloned().ok_or_else(|| Error::UnknownId(id.to_string()))
    }
}

/// A claimed degeneration `source → target`.
///
/// `basis: None` marks a claim imported without a witness.
#[derive(Clone, Debug, PartialEq)]
pub struct DegenerationClaim {
    pub source_id: String,
    pub target_id: String,
    pub basis: Option<ParametricBasis>,
    /// `P` with `apply_basis_change(limit, P) == target`, when the limit is
    /// not literally the target table.
    pub target_map: Option<MatrixQ>,
    /// `P` with `apply_basis_change(source, P) == target`: the two ends are
    /// isomorphic and the degeneration is improper.
    pub isomorphism: Option<MatrixQ>,
}

impl DegenerationClaim {
    pub fn witnessed(source: &str, target: &str, basis: ParametricBasis) -> Self {
        DegenerationClaim {
            source_id: source.into(),
            target_id: target.into(),
            basis: Some(basis),
            target_map: None,
            isomorphism: None,
        }
    }

    pub fn imported(source: &str, target: &str) -> Self {
        DegenerationClaim {
            source_id: source.into(),
            target_id: target.into(),
            basis: None,
            target_map: None,
            isomorphism: None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING-KEBAB-CASE")]
pub enum ClaimStatus {
    Verified,
    VerifiedViaIsomorphism,
    VerifiedUpToFingerprint,
    Failed,
    Unwitnessed,
}

impl ClaimStatus {
    /// Backed by an exact witness.
    pub fn is_verified(self) -> bool {
        matches!(self, ClaimStatus::Verified | ClaimStatus::VerifiedViaIsomorphism)
    }
}

impl fmt::Display for ClaimStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ClaimStatus::Verified => "VERIFIED",
            ClaimStatus::VerifiedViaIsomorphism => "VERIFIED-VIA-ISOMORPHISM",
            ClaimStatus::VerifiedUpToFingerprint => "VERIFIED-UP-TO-FINGERPRINT",
            ClaimStatus::Failed => "FAILED",
            ClaimStatus::Unwitnessed => "UNWITNESSED",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClaimReport {
    pub source_id: String,
    pub target_id: String,
    pub status: ClaimStatus,
    pub limit: Option<Algebra>,
    pub literal: bool,
    /// Only computed when the literal comparison fails.
    pub fingerprint_match: Option<bool>,
    /// Source and target are isomorphic via the recorded matrix.
    pub improper: bool,
}

/// Computes the limit along the witness and compares it with the target.
pub fn verify_claim(claim: &DegenerationClaim, catalog: &impl AlgebraSource) -> Result<ClaimReport> {
    let source = catalog.algebra(&claim.source_id)?;
    let target = catalog.algebra(&claim.target_id)?;
    if source.dim() != target.dim() {
        return Err(Error::DimensionMismatch { expected: source.dim(), found: target.dim() });
    }
    let improper = claim.isomorphism.as_ref().is_some_and(|p| verify_isomorphism(&source, &target, p));
    let mut report = ClaimReport {
        source_id: claim.source_id.clone(),
        target_id: claim.target_id.clone(),
        status: ClaimStatus::Unwitnessed,
        limit: None,
        literal: false,
        fingerprint_match: None,
        improper,
    };
    let Some(basis) = &claim.basis else {
        return Ok(report);
    };
    let limit = limit_algebra(&source, basis)?;
    report.literal = limit == target;
    report.status = if report.literal {
        ClaimStatus::Verified
    } else if claim.target_map.as_ref().is_some_and(|p| verify_isomorphism(&limit, &target, p)) {
        ClaimStatus::VerifiedViaIsomorphism
    } else {
        let same = fingerprint(&limit) == fingerprint(&target);
        report.fingerprint_match = Some(same);
        if same {
            ClaimStatus::VerifiedUpToFingerprint
        } else {
            ClaimStatus::Failed
        }
    };
    report.limit = Some(limit);
    Ok(report)
}

/// One semicontinuity test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NecessaryReport {
    pub checks: Vec<InvariantCheck>,
}

impl NecessaryReport {
    pub fn refuted(&self) -> bool {
        self.checks.iter().any(|c| !c.passed)
    }

    /// Names of the failing checks.
    pub fn fired(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect()
    }
}

pub const CHECK_DER: &str = "der_dim strict";
pub const CHECK_ANN: &str = "ann_dim";
pub const CHECK_LCS: &str = "lcs_dims";
pub const CHECK_PRODUCTS: &str = "product_dims";

/// Checks that must hold for a proper degeneration `a → b`.
pub fn necessary_conditions(a: &Algebra, b: &Algebra) -> Result<NecessaryReport> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), found: b.dim() });
    }
    Ok(compare_fingerprints(&fingerprint(a), &fingerprint(b)))
}

/// [`necessary_conditions`] on precomputed fingerprints.
pub fn compare_fingerprints(fa: &InvariantFingerprint, fb: &InvariantFingerprint) -> NecessaryReport {
    let mut checks = vec![
        InvariantCheck {
            name: CHECK_DER.into(),
            passed: fa.der_dim < fb.der_dim,
            detail: format!("{} < {}", fa.der_dim, fb.der_dim),
        },
        InvariantCheck {
            name: CHECK_ANN.into(),
            passed: fa.ann_dim <= fb.ann_dim,
            detail: format!("{} <= {}", fa.ann_dim, fb.ann_dim),
        },
    ];
    let depth = fa.lcs_dims.len().max(fb.lcs_dims.len());
    let bad_lcs: Vec<usize> = (1..=depth).filter(|&k| fb.lcs_dim(k) > fa.lcs_dim(k)).collect();
    checks.push(InvariantCheck {
        name: CHECK_LCS.into(),
        passed: bad_lcs.is_empty(),
        detail: match bad_lcs.first() {
            None => "ok".into(),
            Some(&k) => format!("dim B^{k} = {} > dim A^{k} = {}", fb.lcs_dim(k), fa.lcs_dim(k)),
        },
    });
    let mut bad_prod = None;
    'outer: for k in 1..=depth {
        for l in 1..=depth {
            if fb.product_dim(k, l) > fa.product_dim(k, l) {
                bad_prod = Some((k, l));
                break 'outer;
            }
        }
    }
    checks.push(InvariantCheck {
        name: CHECK_PRODUCTS.into(),
        passed: bad_prod.is_none(),
        detail: match bad_prod {
            None => "ok".into(),
            Some((k, l)) => format!(
                "dim B^{k}B^{l} = {} > dim A^{k}A^{l} = {}",
                fb.product_dim(k, l),
                fa.product_dim(k, l)
            ),
        },
    });
    NecessaryReport { checks }
}
