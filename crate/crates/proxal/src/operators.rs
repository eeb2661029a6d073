//! Closure-type operators: the point-primal operator, `cl*`, the primal
//! local function and `cl_diamond`, Kuratowski validation, and the
//! operator-to-topology conversion.

use crate::primal::Primal;
use crate::proximity::ProximityRelation;
use crate::sets::{Subset, SubsetFamily, Universe, Verdict, Witness};
use crate::topology::Topology;

/// A total map `2^X -> 2^X`, fully materialized in ascending mask order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureMap {
    universe: Universe,
    table: Vec<Subset>,
}

impl ClosureMap {
    pub fn from_fn(u: &Universe, f: impl Fn(Subset) -> Subset) -> Self {
        ClosureMap {
            universe: u.clone(),
            table: u.subsets().map(f).collect(),
        }
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn apply(&self, a: Subset) -> Subset {
        self.table[a.mask() as usize]
    }

    pub fn table(&self) -> &[Subset] {
        &self.table
    }

    pub fn identity(u: &Universe) -> Self {
        ClosureMap::from_fn(u, |a| a)
    }
}

/// The point-primal operator: `{x ∈ X : {x} ~ A}`.
pub fn point_primal(r: &ProximityRelation, a: Subset) -> Subset {
    let u = r.universe();
    let mut out = 0u32;
    for x in 0..u.n() {
        if r.related(u.singleton(x), a) {
            out |= 1 << x;
        }
    }
    Subset(out)
}

/// `cl*(A) = A ∪ point_primal(A)`; always a Kuratowski closure operator on a
/// valid primal-proximity.
pub fn cl_star(r: &ProximityRelation, a: Subset) -> Subset {
    a.union(point_primal(r, a))
}

pub fn point_primal_map(r: &ProximityRelation) -> ClosureMap {
    ClosureMap::from_fn(r.universe(), |a| point_primal(r, a))
}

pub fn cl_star_map(r: &ProximityRelation) -> ClosureMap {
    ClosureMap::from_fn(r.universe(), |a| cl_star(r, a))
}

/// The primal local function: `x ∈ A_diamond` iff every open `U ∋ x` has
/// `U^c ∪ A^c` in the primal.
pub fn local_function(t: &Topology, p: &Primal, a: Subset) -> Subset {
    let u = t.universe();
    let ac = u.complement(a);
    let mut out = 0u32;
    'points: for x in 0..u.n() {
        for open in t.opens().iter(u) {
            if open.contains_point(x) && !p.contains(u.complement(open).union(ac)) {
                continue 'points;
            }
        }
        out |= 1 << x;
    }
    Subset(out)
}

/// Same quantifier evaluated only at each point's minimal open neighborhood.
/// The primal is downward closed, so this must agree with [`local_function`];
/// kept as an independent route for tests.
pub fn local_function_minimal_opens(t: &Topology, p: &Primal, a: Subset) -> Subset {
    let u = t.universe();
    let ac = u.complement(a);
    let mut out = 0u32;
    for x in 0..u.n() {
        let mut min_open = u.full();
        for open in t.opens().iter(u) {
            if open.contains_point(x) {
                min_open = min_open.inter(open);
            }
        }
        if p.contains(u.complement(min_open).union(ac)) {
            out |= 1 << x;
        }
    }
    Subset(out)
}

/// `cl_diamond(A) = A ∪ A_diamond`.
pub fn cl_diamond(t: &Topology, p: &Primal, a: Subset) -> Subset {
    a.union(local_function(t, p, a))
}

pub fn cl_diamond_map(t: &Topology, p: &Primal) -> ClosureMap {
    ClosureMap::from_fn(t.universe(), |a| cl_diamond(t, p, a))
}

/// Checks the four Kuratowski closure axioms.
pub fn check_kuratowski(c: &ClosureMap) -> Verdict {
    let u = c.universe();
    if !c.apply(u.empty()).is_empty() {
        return Verdict::fail(
            "(1) image of empty set not empty",
            Witness::new().set("A", u.empty()),
        );
    }
    for a in u.subsets() {
        if !a.is_subset_of(c.apply(a)) {
            return Verdict::fail("(2) not extensive", Witness::new().set("A", a));
        }
    }
    for a in u.subsets() {
        for b in u.subsets() {
            if c.apply(a.union(b)) != c.apply(a).union(c.apply(b)) {
                return Verdict::fail(
                    "(3) not union-additive",
                    Witness::new().set("A", a).set("B", b),
                );
            }
        }
    }
    for a in u.subsets() {
        if c.apply(c.apply(a)) != c.apply(a) {
            return Verdict::fail("(4) not idempotent", Witness::new().set("A", a));
        }
    }
    Verdict::Pass
}

/// Fixed-point family `{A : c(A^c) = A^c}`. No topology validation here;
/// the caller decides whether to validate.
pub fn operator_to_topology(c: &ClosureMap) -> SubsetFamily {
    let u = c.universe();
    SubsetFamily::from_subsets(
        u.subsets()
            .filter(|a| c.apply(u.complement(*a)) == u.complement(*a)),
    )
}

/// Smallest closed superset of `a` in `t`.
pub fn closure_in(t: &Topology, a: Subset) -> Subset {
    closure_in_family(t.universe(), t.opens(), a)
}

/// Largest open subset of `a` in `t`.
pub fn interior_in(t: &Topology, a: Subset) -> Subset {
    interior_in_family(t.universe(), t.opens(), a)
}

/// Closure against a raw open family (no topology validation required).
pub fn closure_in_family(u: &Universe, opens: SubsetFamily, a: Subset) -> Subset {
    let mut out = u.full();
    for open in opens.iter(u) {
        let closed = u.complement(open);
        if a.is_subset_of(closed) {
            out = out.inter(closed);
        }
    }
    out
}

/// Interior against a raw open family.
pub fn interior_in_family(u: &Universe, opens: SubsetFamily, a: Subset) -> Subset {
    let mut out = u.empty();
    for open in opens.iter(u) {
        if open.is_subset_of(a) {
            out = out.union(open);
        }
    }
    out
}
