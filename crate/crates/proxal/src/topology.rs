//! Finite topologies, the induced topologies `tau_hat` / `tau_star` /
//! `tau_diamond`, and the separation predicates.

use crate::operators;
use crate::primal::Primal;
use crate::proximity::ProximityRelation;
use crate::sets::{SetError, Subset, SubsetFamily, Universe, Verdict, Witness};

/// A topology on a finite universe, as its family of open sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Topology {
    universe: Universe,
    opens: SubsetFamily,
}

impl Topology {
    pub fn new(universe: Universe, opens: SubsetFamily) -> Result<Self, Verdict> {
        match check_topology(&universe, opens) {
            Verdict::Pass => Ok(Topology { universe, opens }),
            fail => Err(fail),
        }
    }

    pub fn discrete(u: &Universe) -> Topology {
        Topology {
            universe: u.clone(),
            opens: SubsetFamily::power_set(u),
        }
    }

    pub fn indiscrete(u: &Universe) -> Topology {
        Topology {
            universe: u.clone(),
            opens: SubsetFamily::from_subsets([u.empty(), u.full()]),
        }
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn opens(&self) -> SubsetFamily {
        self.opens
    }

    pub fn is_open(&self, s: Subset) -> bool {
        self.opens.contains(s)
    }

    pub fn is_closed(&self, s: Subset) -> bool {
        self.opens.contains(self.universe.complement(s))
    }

    /// Closed sets in ascending mask order.
    pub fn closed_sets(&self) -> Vec<Subset> {
        self.universe
            .subsets()
            .filter(|s| self.is_closed(*s))
            .collect()
    }

    /// Open sets in ascending mask order.
    pub fn open_sets(&self) -> Vec<Subset> {
        self.universe
            .subsets()
            .filter(|s| self.is_open(*s))
            .collect()
    }
}

/// Checks the (finite) topology axioms: `∅` and `X` open, opens closed under
/// binary union and intersection.
pub fn check_topology(u: &Universe, f: SubsetFamily) -> Verdict {
    if !f.contains(u.empty()) {
        return Verdict::fail("empty set not open", Witness::new().set("A", u.empty()));
    }
    if !f.contains(u.full()) {
        return Verdict::fail("X not open", Witness::new().set("A", u.full()));
    }
    for a in f.iter(u) {
        for b in f.iter(u) {
            if !f.contains(a.union(b)) {
                return Verdict::fail(
                    "union of opens not open",
                    Witness::new().set("A", a).set("B", b),
                );
            }
            if !f.contains(a.inter(b)) {
                return Verdict::fail(
                    "intersection of opens not open",
                    Witness::new().set("A", a).set("B", b),
                );
            }
        }
    }
    Verdict::Pass
}

/// `F` is proximity-closed iff `{x} ~ F` forces `x ∈ F`.
pub fn is_proximity_closed(r: &ProximityRelation, f: Subset) -> bool {
    let u = r.universe();
    (0..u.n()).all(|x| !r.related(u.singleton(x), f) || f.contains_point(x))
}

/// The topology whose closed sets are exactly the proximity-closed sets.
pub fn tau_hat(r: &ProximityRelation) -> Result<Topology, Verdict> {
    let u = r.universe();
    let opens = SubsetFamily::from_subsets(
        u.subsets()
            .filter(|a| is_proximity_closed(r, u.complement(*a))),
    );
    Topology::new(u.clone(), opens)
}

/// The family of `tau_hat` opens, without topology validation (for reporting
/// which axiom fails on exotic inputs).
pub fn tau_hat_family(r: &ProximityRelation) -> SubsetFamily {
    let u = r.universe();
    SubsetFamily::from_subsets(
        u.subsets()
            .filter(|a| is_proximity_closed(r, u.complement(*a))),
    )
}

/// Fixed-point topology of `cl*`: `{A : cl*(A^c) = A^c}`.
pub fn tau_star(r: &ProximityRelation) -> Result<Topology, Verdict> {
    let map = operators::cl_star_map(r);
    Topology::new(r.universe().clone(), operators::operator_to_topology(&map))
}

pub fn tau_star_family(r: &ProximityRelation) -> SubsetFamily {
    operators::operator_to_topology(&operators::cl_star_map(r))
}

/// Fixed-point topology of `cl_diamond` for a primal topological space.
pub fn tau_diamond(t: &Topology, p: &Primal) -> Result<Topology, Verdict> {
    Topology::new(
        t.universe().clone(),
        operators::operator_to_topology(&operators::cl_diamond_map(t, p)),
    )
}

pub fn tau_diamond_family(t: &Topology, p: &Primal) -> SubsetFamily {
    operators::operator_to_topology(&operators::cl_diamond_map(t, p))
}

/// Finite T1 criterion: every singleton is closed.
pub fn is_t1(t: &Topology) -> bool {
    let u = t.universe();
    u.points().all(|x| t.is_closed(x))
}

/// Every pair of disjoint closed sets has disjoint open supersets.
pub fn is_normal(t: &Topology) -> bool {
    let closed = t.closed_sets();
    let opens = t.open_sets();
    for &f1 in &closed {
        for &f2 in &closed {
            if !f1.inter(f2).is_empty() {
                continue;
            }
            let separated = opens.iter().any(|&h| {
                f1.is_subset_of(h)
                    && opens
                        .iter()
                        .any(|&g| f2.is_subset_of(g) && h.inter(g).is_empty())
            });
            if !separated {
                return false;
            }
        }
    }
    true
}

/// Primal-regular: for every point `x` and `tau_diamond`-closed `F` with
/// `({x} ∩ F)^c ∉ P`, some opens `H ∋ x`, `G ⊇ F` have `(H ∩ G)^c ∉ P`.
pub fn is_primal_regular(t: &Topology, p: &Primal) -> Verdict {
    let u = t.universe();
    let td = tau_diamond_family(t, p);
    let opens = t.open_sets();
    for x in 0..u.n() {
        let sx = u.singleton(x);
        for f in u.subsets() {
            if !td.contains(u.complement(f)) {
                continue; // not tau_diamond-closed
            }
            if p.contains(u.complement(sx.inter(f))) {
                continue;
            }
            let ok = opens.iter().any(|&h| {
                h.contains_point(x)
                    && opens.iter().any(|&g| {
                        f.is_subset_of(g) && !p.contains(u.complement(h.inter(g)))
                    })
            });
            if !ok {
                return Verdict::fail(
                    "no open separation",
                    Witness::new().element("x", x).set("F", f),
                );
            }
        }
    }
    Verdict::Pass
}

/// Primal-normal: analogous with pairs of `tau_diamond`-closed sets.
pub fn is_primal_normal(t: &Topology, p: &Primal) -> Verdict {
    let u = t.universe();
    let td = tau_diamond_family(t, p);
    let opens = t.open_sets();
    for f1 in u.subsets() {
        if !td.contains(u.complement(f1)) {
            continue;
        }
        for f2 in u.subsets() {
            if !td.contains(u.complement(f2)) {
                continue;
            }
            if p.contains(u.complement(f1.inter(f2))) {
                continue;
            }
            let ok = opens.iter().any(|&h| {
                f1.is_subset_of(h)
                    && opens.iter().any(|&g| {
                        f2.is_subset_of(g) && !p.contains(u.complement(h.inter(g)))
                    })
            });
            if !ok {
                return Verdict::fail(
                    "no open separation",
                    Witness::new().set("F1", f1).set("F2", f2),
                );
            }
        }
    }
    Verdict::Pass
}

/// All topologies on `u`, ascending by open-family table value.
///
/// `n <= 3` brute-forces all `2^(2^n)` families; `n = 4` generates topologies
/// from specialization preorders (finite topologies correspond exactly to
/// reflexive transitive relations, with opens the up-closed sets).
pub fn enumerate_topologies(u: &Universe) -> Result<Vec<Topology>, SetError> {
    let fams = match u.n() {
        1..=3 => enumerate_topology_families_brute(u),
        4 => enumerate_topology_families_preorder(u),
        n => {
            return Err(SetError::SizeCap(format!(
                "topology enumeration capped at n=4, got n={n}"
            )))
        }
    };
    Ok(fams
        .into_iter()
        .map(|opens| Topology {
            universe: u.clone(),
            opens,
        })
        .collect())
}

pub fn enumerate_topology_families_brute(u: &Universe) -> Vec<SubsetFamily> {
    assert!(u.n() <= 3, "brute-force topology enumeration capped at n=3");
    (0..(1u64 << u.subset_count()))
        .map(|bits| SubsetFamily(bits as u32))
        .filter(|f| check_topology(u, *f).is_pass())
        .collect()
}

/// Generation path via specialization preorders. `rel[x]` is the mask of
/// points reachable from `x`; opens are the sets closed under reachability.
pub fn enumerate_topology_families_preorder(u: &Universe) -> Vec<SubsetFamily> {
    let n = u.n();
    let full = u.full().0;
    let mut out = Vec::new();
    // each candidate packs n rows of n bits; reflexivity forced
    let row_bits = n as u32;
    let total = 1u64 << (row_bits * row_bits as u32);
    for packed in 0..total {
        let mut rows = [0u32; crate::sets::MAX_UNIVERSE];
        for (x, row) in rows.iter_mut().enumerate().take(n) {
            *row = (((packed >> (x as u32 * row_bits)) as u32) & full) | (1 << x);
        }
        // diagonal bits are forced on; visit each relation once by skipping
        // encodings that set them explicitly
        if (0..n).any(|x| (packed >> (x as u32 * row_bits + x as u32)) & 1 == 1) {
            continue;
        }
        let transitive = (0..n).all(|x| {
            (0..n).all(|y| rows[x] >> y & 1 == 0 || rows[y] & !rows[x] == 0)
        });
        if !transitive {
            continue;
        }
        let opens = SubsetFamily::from_subsets(u.subsets().filter(|s| {
            (0..n).all(|x| !s.contains_point(x) || Subset(rows[x]).is_subset_of(*s))
        }));
        out.push(opens);
    }
    out.sort();
    out.dedup();
    out
}
