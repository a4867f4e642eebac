use super::{compare_fingerprints, verify_claim, AlgebraSource, ClaimStatus, DegenerationClaim, InvariantCheck};
use crate::algcore::{fingerprint, InvariantFingerprint};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphNode {
    pub id: String,
    pub fingerprint: InvariantFingerprint,
    /// `n² - dim Der`, the dimension of the orbit.
    pub orbit_dim: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING-KEBAB-CASE")]
pub enum EdgeStatus {
    /// A verified parametric basis.
    Witnessed,
    /// Imported without a witness.
    Unwitnessed,
    /// Implied by a chain of witnessed edges.
    Transitive,
    /// Implied only through chains containing an unwitnessed edge.
    TransitiveUnwitnessed,
}

impl EdgeStatus {
    pub fn is_direct(self) -> bool {
        matches!(self, EdgeStatus::Witnessed | EdgeStatus::Unwitnessed)
    }

    pub fn is_witnessed(self) -> bool {
        matches!(self, EdgeStatus::Witnessed | EdgeStatus::Transitive)
    }
}

impl fmt::Display for EdgeStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EdgeStatus::Witnessed => "WITNESSED",
            EdgeStatus::Unwitnessed => "UNWITNESSED",
            EdgeStatus::Transitive => "TRANSITIVE",
            EdgeStatus::TransitiveUnwitnessed => "TRANSITIVE-UNWITNESSED",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphEdge {
    pub source: String,
    pub target: String,
    pub status: EdgeStatus,
    /// Source and target are isomorphic.
    #[serde(default)]
    pub improper: bool,
}

/// A pair shown not to degenerate, with the failing checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Refutation {
    pub source: String,
    pub target: String,
    pub fired: Vec<String>,
    pub checks: Vec<InvariantCheck>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegenerationGraph {
    pub nodes: Vec<GraphNode>,
    pub edges: Vec<GraphEdge>,
    #[serde(default)]
    pub refutations: Vec<Refutation>,
}

/// Verifies every claim and closes the edge set under transitivity.
///
/// Claims that fail, or only match up to fingerprint, abort with
/// [`Error::UnverifiedClaim`]. Claims without a witness enter as
/// [`EdgeStatus::Unwitnessed`].
pub fn build_graph(
    catalog: &impl AlgebraSource,
    node_ids: &[&str],
    claims: &[DegenerationClaim],
) -> Result<DegenerationGraph> {
    let mut nodes = Vec::new();
    let mut seen = BTreeSet::new();
    let ids = node_ids.iter().copied().chain(claims.iter().flat_map(|c| [c.source_id.as_str(), c.target_id.as_str()]));
    for id in ids {
        if seen.insert(id.to_string()) {
            let a = catalog.algebra(id)?;
            let fp = fingerprint(&a);
            nodes.push(GraphNode { id: id.to_string(), orbit_dim: a.dim() * a.dim() - fp.der_dim, fingerprint: fp });
        }
    }
    let mut edges = Vec::new();
    for c in claims {
        let r = verify_claim(c, catalog)?;
        let status = match r.status {
            ClaimStatus::Verified | ClaimStatus::VerifiedViaIsomorphism => EdgeStatus::Witnessed,
            ClaimStatus::Unwitnessed => EdgeStatus::Unwitnessed,
            ClaimStatus::VerifiedUpToFingerprint | ClaimStatus::Failed => {
                return Err(Error::UnverifiedClaim { source_id: c.source_id.clone(), target_id: c.target_id.clone() })
            }
        };
        edges.push(GraphEdge { source: c.source_id.clone(), target: c.target_id.clone(), status, improper: r.improper });
    }
    let mut g = DegenerationGraph { nodes, edges, refutations: Vec::new() };
    g.close();
    Ok(g)
}

fn reach(adj: &BTreeMap<&str, Vec<&str>>, from: &str) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    let mut stack = vec![from];
    while let Some(x) = stack.pop() {
        for &y in adj.get(x).map(Vec::as_slice).unwrap_or_default() {
            if out.insert(y.to_string()) {
                stack.push(y);
            }
        }
    }
    out
}

impl DegenerationGraph {
    pub fn node(&self, id: &str) -> Option<&GraphNode> {
        self.nodes.iter().find(|n| n.id == id)
    }

    pub fn edge(&self, source: &str, target: &str) -> Option<&GraphEdge> {
        self.edges.iter().find(|e| e.source == source && e.target == target)
    }

    pub fn direct_edges(&self) -> impl Iterator<Item = &GraphEdge> {
        self.edges.iter().filter(|e| e.status.is_direct())
    }

    /// Recomputes the transitive edges from the direct ones. Idempotent.
    pub fn close(&mut self) {
        let direct: Vec<GraphEdge> = self.direct_edges().cloned().collect();
        let mut all: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
        let mut witnessed: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
        for e in &direct {
            all.entry(&e.source).or_default().push(&e.target);
            if e.status == EdgeStatus::Witnessed {
                witnessed.entry(&e.source).or_default().push(&e.target);
            }
        }
        let known: BTreeSet<(&str, &str)> = direct.iter().map(|e| (e.source.as_str(), e.target.as_str())).collect();
        let mut extra = Vec::new();
        for n in &self.nodes {
            let w = reach(&witnessed, &n.id);
            for t in reach(&all, &n.id) {
                if t == n.id || known.contains(&(n.id.as_str(), t.as_str())) {
                    continue;
                }
                let status = if w.contains(&t) { EdgeStatus::Transitive } else { EdgeStatus::TransitiveUnwitnessed };
                extra.push(GraphEdge { source: n.id.clone(), target: t, status, improper: false });
            }
        }
        self.edges = direct;
        self.edges.extend(extra);
        let pos: BTreeMap<&str, usize> = self.nodes.iter().enumerate().map(|(i, n)| (n.id.as_str(), i)).collect();
        let key = |e: &GraphEdge| (pos.get(e.source.as_str()).copied(), pos.get(e.target.as_str()).copied());
        self.edges.sort_by(|a, b| (a.status, key(a)).cmp(&(b.status, key(b))));
    }

    /// Nodes without incoming edges.
    pub fn rigid_candidates(&self) -> Vec<&str> {
        let hit: BTreeSet<&str> = self.edges.iter().map(|e| e.target.as_str()).collect();
        self.nodes.iter().map(|n| n.id.as_str()).filter(|id| !hit.contains(id)).collect()
    }

    /// No node reaches itself.
    pub fn is_acyclic(&self) -> bool {
        self.edges.iter().all(|e| e.source != e.target)
            && self.edges.iter().all(|e| self.edge(&e.target, &e.source).is_none())
    }

    /// Screens `source → target` with the invariant checks and records the
    /// outcome when at least one check fails.
    pub fn refute(&mut self, source: &str, target: &str) -> Result<Option<&Refutation>> {
        let fa = &self.node(source).ok_or_else(|| Error::UnknownId(source.into()))?.fingerprint;
        let fb = &self.node(target).ok_or_else(|| Error::UnknownId(target.into()))?.fingerprint;
        let report = compare_fingerprints(fa, fb);
        if !report.refuted() {
            return Ok(None);
        }
        self.refutations.push(Refutation {
            source: source.into(),
            target: target.into(),
            fired: report.fired().into_iter().map(String::from).collect(),
            checks: report.checks,
        });
        Ok(self.refutations.last())
    }
}
