//! A checkable instance: one universe, primal, relation, and optionally a
//! topology, with lazily cached derived data.

use std::sync::OnceLock;

use sha2::{Digest, Sha256};

use crate::operators;
use crate::primal::Primal;
use crate::proximity::{check_primal_proximity, AxiomReport, ProximityRelation};
use crate::sets::{Subset, SubsetFamily, Universe};
use crate::topology::{self, Topology};

#[derive(Debug, Clone)]
pub struct Instance {
    universe: Universe,
    primal: Primal,
    relation: ProximityRelation,
    topology: Option<Topology>,
    id: OnceLock<String>,
    axiom_report: OnceLock<AxiomReport>,
    tau_hat: OnceLock<SubsetFamily>,
    tau_star: OnceLock<SubsetFamily>,
    tau_diamond: OnceLock<SubsetFamily>,
}

impl Instance {
    pub fn new(
        primal: Primal,
        relation: ProximityRelation,
        topology: Option<Topology>,
    ) -> Instance {
        let universe = primal.universe().clone();
        debug_assert_eq!(&universe, relation.universe());
        relation.materialize();
        Instance {
            universe,
            primal,
            relation,
            topology,
            id: OnceLock::new(),
            axiom_report: OnceLock::new(),
            tau_hat: OnceLock::new(),
            tau_star: OnceLock::new(),
            tau_diamond: OnceLock::new(),
        }
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn primal(&self) -> &Primal {
        &self.primal
    }

    pub fn relation(&self) -> &ProximityRelation {
        &self.relation
    }

    pub fn topology(&self) -> Option<&Topology> {
        self.topology.as_ref()
    }

    /// Stable content hash of all parts (hex, 16 chars).
    pub fn id(&self) -> &str {
        self.id.get_or_init(|| {
            let mut hasher = Sha256::new();
            hasher.update(self.universe.labels().join(",").as_bytes());
            hasher.update(b"|primal=");
            hasher.update(self.primal.family().bits().to_le_bytes());
            hasher.update(b"|relation=");
            hasher.update(self.relation.kind().name().as_bytes());
            for row in self.relation.matrix() {
                hasher.update(row.to_le_bytes());
            }
            hasher.update(b"|topology=");
            match &self.topology {
                Some(t) => hasher.update(t.opens().bits().to_le_bytes()),
                None => hasher.update(b"none"),
            }
            let digest = hasher.finalize();
            digest[..8].iter().map(|b| format!("{b:02x}")).collect()
        })
    }

    /// Human-readable one-line description, deterministic.
    pub fn describe(&self) -> String {
        let u = &self.universe;
        let topo = match &self.topology {
            Some(t) => u.family_to_string(t.opens()),
            None => "-".to_string(),
        };
        format!(
            "n={} primal={} relation={} topology={}",
            u.n(),
            u.family_to_string(self.primal.family()),
            self.relation.kind().name(),
            topo
        )
    }

    pub fn axiom_report(&self) -> &AxiomReport {
        self.axiom_report
            .get_or_init(|| check_primal_proximity(&self.relation, &self.primal))
    }

    /// True iff the relation passed all five primal-proximity axioms.
    pub fn relation_valid(&self) -> bool {
        self.axiom_report().all_pass()
    }

    pub fn rel(&self, a: Subset, b: Subset) -> bool {
        self.relation.related(a, b)
    }

    pub fn in_primal(&self, s: Subset) -> bool {
        self.primal.contains(s)
    }

    pub fn comp(&self, s: Subset) -> Subset {
        self.universe.complement(s)
    }

    pub fn maximal_primal(&self) -> bool {
        self.primal.is_maximal()
    }

    pub fn pp(&self, a: Subset) -> Subset {
        operators::point_primal(&self.relation, a)
    }

    pub fn cls(&self, a: Subset) -> Subset {
        operators::cl_star(&self.relation, a)
    }

    pub fn tau_hat_family(&self) -> SubsetFamily {
        *self
            .tau_hat
            .get_or_init(|| topology::tau_hat_family(&self.relation))
    }

    pub fn tau_star_family(&self) -> SubsetFamily {
        *self
            .tau_star
            .get_or_init(|| topology::tau_star_family(&self.relation))
    }

    /// `tau_diamond` of the carried topology; panics without one (callers
    /// gate on the topology requirement first).
    pub fn tau_diamond_family(&self) -> SubsetFamily {
        *self.tau_diamond.get_or_init(|| {
            let t = self.topology.as_ref().expect("instance lacks a topology");
            topology::tau_diamond_family(t, &self.primal)
        })
    }

    /// Closure with respect to `tau_hat`.
    pub fn clh(&self, a: Subset) -> Subset {
        operators::closure_in_family(&self.universe, self.tau_hat_family(), a)
    }

    /// Interior with respect to `tau_hat`.
    pub fn inth(&self, a: Subset) -> Subset {
        operators::interior_in_family(&self.universe, self.tau_hat_family(), a)
    }
}
