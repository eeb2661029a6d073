//! The JSON space-file format: a universe, a primal, an optional topology,
//! and a relation rule, parsed into a checkable [`Instance`].
//!
//! Subsets on the wire are label lists, never masks. Structural validity of
//! the primal and topology is checked when building an `Instance`; the raw
//! families stay reachable so the `check` command can report a FAIL verdict
//! instead of a parse error.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::checker::Instance;
use crate::primal::{mk_empty, mk_maximal, mk_principal, Primal};
use crate::proximity::{from_kind, ProximityRelation, RuleKind};
use crate::sets::{SubsetFamily, Universe};
use crate::topology::Topology;

#[derive(Debug, Error)]
pub enum SpaceError {
    #[error("{path}: {reason}")]
    Invalid { path: String, reason: String },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
}

fn invalid(path: &str, reason: impl ToString) -> SpaceError {
    SpaceError::Invalid {
        path: path.to_string(),
        reason: reason.to_string(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceFile {
    pub universe: Vec<String>,
    pub primal: PrimalSpec,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub topology: Option<TopologySpec>,
    pub relation: RelationSpec,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum PrimalSpec {
    Explicit { sets: Vec<Vec<String>> },
    Maximal,
    Principal { element: String },
    Empty,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum TopologySpec {
    Explicit { opens: Vec<Vec<String>> },
    Discrete,
    Indiscrete,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum RelationSpec {
    Explicit { pairs: Vec<(Vec<String>, Vec<String>)> },
    DoubleComplement,
    IntersectionComplement,
    ClosureOverlap,
    PointClosure,
    PointDiamond,
    DiamondOverlap,
}

impl RelationSpec {
    pub fn rule_kind(&self) -> RuleKind {
        match self {
            RelationSpec::Explicit { .. } => RuleKind::Explicit,
            RelationSpec::DoubleComplement => RuleKind::DoubleComplement,
            RelationSpec::IntersectionComplement => RuleKind::IntersectionComplement,
            RelationSpec::ClosureOverlap => RuleKind::ClosureOverlap,
            RelationSpec::PointClosure => RuleKind::PointClosure,
            RelationSpec::PointDiamond => RuleKind::PointDiamond,
            RelationSpec::DiamondOverlap => RuleKind::DiamondOverlap,
        }
    }
}

fn decode_family(
    u: &Universe,
    sets: &[Vec<String>],
    path: &str,
) -> Result<SubsetFamily, SpaceError> {
    let mut family = SubsetFamily::empty();
    for (i, names) in sets.iter().enumerate() {
        let s = u
            .decode(names)
            .map_err(|e| invalid(&format!("{path}[{i}]"), e))?;
        family.insert(s);
    }
    Ok(family)
}

impl SpaceFile {
    pub fn from_json_str(text: &str) -> Result<SpaceFile, SpaceError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("space files always serialize")
    }

    pub fn universe(&self) -> Result<Universe, SpaceError> {
        Universe::new(self.universe.clone()).map_err(|e| invalid("universe", e))
    }

    /// The primal family as written, unvalidated.
    pub fn primal_family(&self, u: &Universe) -> Result<SubsetFamily, SpaceError> {
        match &self.primal {
            PrimalSpec::Explicit { sets } => decode_family(u, sets, "primal.sets"),
            PrimalSpec::Maximal => Ok(mk_maximal(u).family()),
            PrimalSpec::Principal { element } => Ok(mk_principal(u, element)
                .map_err(|e| invalid("primal.element", e))?
                .family()),
            PrimalSpec::Empty => Ok(mk_empty(u).family()),
        }
    }

    /// The open-set family as written, unvalidated; `None` when the file has
    /// no topology section.
    pub fn topology_family(&self, u: &Universe) -> Result<Option<SubsetFamily>, SpaceError> {
        match &self.topology {
            None => Ok(None),
            Some(TopologySpec::Explicit { opens }) => {
                Ok(Some(decode_family(u, opens, "topology.opens")?))
            }
            Some(TopologySpec::Discrete) => Ok(Some(Topology::discrete(u).opens())),
            Some(TopologySpec::Indiscrete) => Ok(Some(Topology::indiscrete(u).opens())),
        }
    }

    /// Builds the validated instance: the primal must satisfy its three
    /// conditions and an explicit topology its axioms. The relation itself is
    /// not checked here; `check proximity` and the theorem requirements do
    /// that.
    pub fn to_instance(&self) -> Result<Instance, SpaceError> {
        let u = self.universe()?;
        let family = self.primal_family(&u)?;
        let primal = Primal::new(u.clone(), family)
            .map_err(|v| invalid("primal", v.render(&u)))?;
        let topology = match self.topology_family(&u)? {
            None => None,
            Some(opens) => Some(
                Topology::new(u.clone(), opens)
                    .map_err(|v| invalid("topology", v.render(&u)))?,
            ),
        };
        let relation = self.build_relation(&u, &primal, topology.as_ref())?;
        Ok(Instance::new(primal, relation, topology))
    }

    fn build_relation(
        &self,
        u: &Universe,
        primal: &Primal,
        topology: Option<&Topology>,
    ) -> Result<ProximityRelation, SpaceError> {
        if let RelationSpec::Explicit { pairs } = &self.relation {
            let mut decoded = Vec::with_capacity(pairs.len());
            for (i, (a, b)) in pairs.iter().enumerate() {
                let path = format!("relation.pairs[{i}]");
                let a = u.decode(a).map_err(|e| invalid(&path, e))?;
                let b = u.decode(b).map_err(|e| invalid(&path, e))?;
                decoded.push((a, b));
            }
            return Ok(ProximityRelation::explicit_from_pairs(u, &decoded));
        }
        let kind = self.relation.rule_kind();
        if kind.needs_topology() && topology.is_none() {
            return Err(invalid(
                "relation.kind",
                format!("the {} rule requires a topology section", kind.name()),
            ));
        }
        Ok(from_kind(kind, topology, primal).expect("constructor kind with parts present"))
    }
}
