//! Binary relations on `2^X`: primal-proximities and Efremovic proximities,
//! their rule-backed constructors, and the axiom checkers.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::operators;
use crate::primal::Primal;
use crate::sets::{Subset, Universe, Verdict, Witness};
use crate::topology::Topology;

/// Wire names of the relation rule kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RuleKind {
    Explicit,
    DoubleComplement,
    IntersectionComplement,
    ClosureOverlap,
    PointClosure,
    PointDiamond,
    DiamondOverlap,
}

impl RuleKind {
    pub fn name(self) -> &'static str {
        match self {
            RuleKind::Explicit => "explicit",
            RuleKind::DoubleComplement => "double-complement",
            RuleKind::IntersectionComplement => "intersection-complement",
            RuleKind::ClosureOverlap => "closure-overlap",
            RuleKind::PointClosure => "point-closure",
            RuleKind::PointDiamond => "point-diamond",
            RuleKind::DiamondOverlap => "diamond-overlap",
        }
    }

    /// The six rule-backed constructor kinds, in sweep order.
    pub const CONSTRUCTORS: [RuleKind; 6] = [
        RuleKind::DoubleComplement,
        RuleKind::IntersectionComplement,
        RuleKind::ClosureOverlap,
        RuleKind::PointClosure,
        RuleKind::PointDiamond,
        RuleKind::DiamondOverlap,
    ];

    pub fn parse(s: &str) -> Option<RuleKind> {
        match s {
            "explicit" => Some(RuleKind::Explicit),
            "double-complement" => Some(RuleKind::DoubleComplement),
            "intersection-complement" => Some(RuleKind::IntersectionComplement),
            "closure-overlap" => Some(RuleKind::ClosureOverlap),
            "point-closure" => Some(RuleKind::PointClosure),
            "point-diamond" => Some(RuleKind::PointDiamond),
            "diamond-overlap" => Some(RuleKind::DiamondOverlap),
            _ => None,
        }
    }

    /// Rule kinds that evaluate a topology as well as a primal.
    pub fn needs_topology(self) -> bool {
        matches!(
            self,
            RuleKind::ClosureOverlap
                | RuleKind::PointClosure
                | RuleKind::PointDiamond
                | RuleKind::DiamondOverlap
        )
    }
}

#[derive(Debug, Clone)]
enum Rule {
    /// Explicit `2^n x 2^n` bit matrix, row indexed by the first argument.
    /// Never auto-symmetrized: axiom 1 is checked, not imposed.
    Explicit(Vec<u32>),
    DoubleComplement(Primal),
    IntersectionComplement(Primal),
    ClosureOverlap(Topology, Primal),
    PointClosure(Topology, Primal),
    PointDiamond(Topology, Primal),
    DiamondOverlap(Topology, Primal),
}

/// A total binary relation on `2^X`, either explicit or rule-backed. Rule
/// relations evaluate lazily and cache the full matrix on first sweep.
#[derive(Debug)]
pub struct ProximityRelation {
    universe: Universe,
    rule: Rule,
    cache: OnceLock<Vec<u32>>,
}

impl Clone for ProximityRelation {
    fn clone(&self) -> Self {
        let cache = OnceLock::new();
        if let Some(m) = self.cache.get() {
            let _ = cache.set(m.clone());
        }
        ProximityRelation {
            universe: self.universe.clone(),
            rule: self.rule.clone(),
            cache,
        }
    }
}

impl ProximityRelation {
    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn kind(&self) -> RuleKind {
        match &self.rule {
            Rule::Explicit(_) => RuleKind::Explicit,
            Rule::DoubleComplement(_) => RuleKind::DoubleComplement,
            Rule::IntersectionComplement(_) => RuleKind::IntersectionComplement,
            Rule::ClosureOverlap(..) => RuleKind::ClosureOverlap,
            Rule::PointClosure(..) => RuleKind::PointClosure,
            Rule::PointDiamond(..) => RuleKind::PointDiamond,
            Rule::DiamondOverlap(..) => RuleKind::DiamondOverlap,
        }
    }

    /// Explicit relation from a matrix of rows (bit `B` of `rows[A]` set iff
    /// `A ~ B`).
    pub fn explicit(u: &Universe, rows: Vec<u32>) -> Self {
        assert_eq!(rows.len(), u.subset_count() as usize);
        ProximityRelation {
            universe: u.clone(),
            rule: Rule::Explicit(rows),
            cache: OnceLock::new(),
        }
    }

    /// Explicit relation from a list of related pairs.
    pub fn explicit_from_pairs(u: &Universe, pairs: &[(Subset, Subset)]) -> Self {
        let mut rows = vec![0u32; u.subset_count() as usize];
        for (a, b) in pairs {
            rows[a.mask() as usize] |= 1 << b.mask();
        }
        Self::explicit(u, rows)
    }

    fn eval_rule(&self, a: Subset, b: Subset) -> bool {
        let u = &self.universe;
        match &self.rule {
            Rule::Explicit(rows) => rows[a.mask() as usize] >> b.mask() & 1 == 1,
            Rule::DoubleComplement(p) => {
                p.contains(u.complement(a)) && p.contains(u.complement(b))
            }
            Rule::IntersectionComplement(p) => p.contains(u.complement(a.inter(b))),
            Rule::ClosureOverlap(t, p) => p.contains(
                u.complement(operators::closure_in(t, a).inter(operators::closure_in(t, b))),
            ),
            Rule::PointClosure(t, p) => {
                p.contains(u.complement(a.inter(operators::closure_in(t, b))))
            }
            Rule::PointDiamond(t, p) => {
                p.contains(u.complement(a.inter(operators::cl_diamond(t, p, b))))
            }
            Rule::DiamondOverlap(t, p) => p.contains(u.complement(
                operators::cl_diamond(t, p, a).inter(operators::cl_diamond(t, p, b)),
            )),
        }
    }

    pub fn related(&self, a: Subset, b: Subset) -> bool {
        match self.cache.get() {
            Some(rows) => rows[a.mask() as usize] >> b.mask() & 1 == 1,
            None => self.eval_rule(a, b),
        }
    }

    /// Fills the matrix cache by evaluating the rule on all pairs.
    /// Idempotent; safe to call from concurrent workers.
    pub fn materialize(&self) -> &[u32] {
        self.cache.get_or_init(|| {
            self.universe
                .subsets()
                .map(|a| {
                    let mut row = 0u32;
                    for b in self.universe.subsets() {
                        if self.eval_rule(a, b) {
                            row |= 1 << b.mask();
                        }
                    }
                    row
                })
                .collect()
        })
    }

    pub fn matrix(&self) -> Vec<u32> {
        self.materialize().to_vec()
    }
}

/// `A ~ B` iff both complements are members of the primal.
pub fn from_double_complement(p: &Primal) -> ProximityRelation {
    ProximityRelation {
        universe: p.universe().clone(),
        rule: Rule::DoubleComplement(p.clone()),
        cache: OnceLock::new(),
    }
}

/// `A ~ B` iff `(A ∩ B)^c` is a member of the primal.
pub fn from_intersection_complement(p: &Primal) -> ProximityRelation {
    ProximityRelation {
        universe: p.universe().clone(),
        rule: Rule::IntersectionComplement(p.clone()),
        cache: OnceLock::new(),
    }
}

/// `A ~ B` iff `(cl(A) ∩ cl(B))^c` is a member of the primal.
pub fn from_closure_overlap(t: &Topology, p: &Primal) -> ProximityRelation {
    ProximityRelation {
        universe: p.universe().clone(),
        rule: Rule::ClosureOverlap(t.clone(), p.clone()),
        cache: OnceLock::new(),
    }
}

/// `A ~ B` iff `(A ∩ cl(B))^c` is a member of the primal.
pub fn from_point_closure(t: &Topology, p: &Primal) -> ProximityRelation {
    ProximityRelation {
        universe: p.universe().clone(),
        rule: Rule::PointClosure(t.clone(), p.clone()),
        cache: OnceLock::new(),
    }
}

/// `A ~ B` iff `(A ∩ cl_diamond(B))^c` is a member of the primal.
pub fn from_point_diamond(t: &Topology, p: &Primal) -> ProximityRelation {
    ProximityRelation {
        universe: p.universe().clone(),
        rule: Rule::PointDiamond(t.clone(), p.clone()),
        cache: OnceLock::new(),
    }
}

/// `A ~ B` iff `(cl_diamond(A) ∩ cl_diamond(B))^c` is a member of the primal.
pub fn from_diamond_overlap(t: &Topology, p: &Primal) -> ProximityRelation {
    ProximityRelation {
        universe: p.universe().clone(),
        rule: Rule::DiamondOverlap(t.clone(), p.clone()),
        cache: OnceLock::new(),
    }
}

/// Builds the rule-backed relation named by `kind` over `(t, p)`.
pub fn from_kind(kind: RuleKind, t: Option<&Topology>, p: &Primal) -> Option<ProximityRelation> {
    match kind {
        RuleKind::Explicit => None,
        RuleKind::DoubleComplement => Some(from_double_complement(p)),
        RuleKind::IntersectionComplement => Some(from_intersection_complement(p)),
        RuleKind::ClosureOverlap => t.map(|t| from_closure_overlap(t, p)),
        RuleKind::PointClosure => t.map(|t| from_point_closure(t, p)),
        RuleKind::PointDiamond => t.map(|t| from_point_diamond(t, p)),
        RuleKind::DiamondOverlap => t.map(|t| from_diamond_overlap(t, p)),
    }
}

/// Per-axiom verdicts for a five-axiom system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub axioms: [Verdict; 5],
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.axioms.iter().all(Verdict::is_pass)
    }

    pub fn passing(&self) -> Vec<usize> {
        (0..5).filter(|i| self.axioms[*i].is_pass()).collect()
    }
}

/// Searches for `(C, D)` with `A !~ C^c`, `D^c !~ B`, `(C ∩ D)^c ∉ P`, in
/// ascending `(C, D)` mask order.
pub fn find_separators(
    r: &ProximityRelation,
    p: &Primal,
    a: Subset,
    b: Subset,
) -> Option<(Subset, Subset)> {
    let u = r.universe();
    for c in u.subsets() {
        if r.related(a, u.complement(c)) {
            continue;
        }
        for d in u.subsets() {
            if !r.related(u.complement(d), b) && !p.contains(u.complement(c.inter(d))) {
                return Some((c, d));
            }
        }
    }
    None
}

/// Checks the five primal-proximity axioms: (1) symmetry, (2) union
/// equivalence, (3) non-member complement forces unrelatedness, (4) member
/// intersection complement forces relatedness, (5) the strong axiom with the
/// exhaustive `(C, D)` search.
pub fn check_primal_proximity(r: &ProximityRelation, p: &Primal) -> AxiomReport {
    let u = r.universe();
    r.materialize();

    let ax1 = 'a1: {
        for a in u.subsets() {
            for b in u.subsets() {
                if r.related(a, b) && !r.related(b, a) {
                    break 'a1 Verdict::fail(
                        "axiom 1: not symmetric",
                        Witness::new().set("A", a).set("B", b),
                    );
                }
            }
        }
        Verdict::Pass
    };

    let ax2 = 'a2: {
        for a in u.subsets() {
            for b in u.subsets() {
                for c in u.subsets() {
                    if r.related(a, b.union(c)) != (r.related(a, b) || r.related(a, c)) {
                        break 'a2 Verdict::fail(
                            "axiom 2: union equivalence",
                            Witness::new().set("A", a).set("B", b).set("C", c),
                        );
                    }
                }
            }
        }
        Verdict::Pass
    };

    let ax3 = 'a3: {
        for a in u.subsets() {
            if p.contains(u.complement(a)) {
                continue;
            }
            for b in u.subsets() {
                if r.related(a, b) {
                    break 'a3 Verdict::fail(
                        "axiom 3: related despite non-member complement",
                        Witness::new().set("A", a).set("B", b),
                    );
                }
            }
        }
        Verdict::Pass
    };

    let ax4 = 'a4: {
        for a in u.subsets() {
            for b in u.subsets() {
                if p.contains(u.complement(a.inter(b))) && !r.related(a, b) {
                    break 'a4 Verdict::fail(
                        "axiom 4: unrelated despite member intersection complement",
                        Witness::new().set("A", a).set("B", b),
                    );
                }
            }
        }
        Verdict::Pass
    };

    let ax5 = 'a5: {
        for a in u.subsets() {
            for b in u.subsets() {
                if r.related(a, b) {
                    continue;
                }
                if find_separators(r, p, a, b).is_none() {
                    break 'a5 Verdict::fail(
                        "axiom 5: no separating pair exists",
                        Witness::new().set("A", a).set("B", b),
                    );
                }
            }
        }
        Verdict::Pass
    };

    AxiomReport {
        axioms: [ax1, ax2, ax3, ax4, ax5],
    }
}

/// Checks the five Efremovic proximity axioms (the strong axiom requires
/// disjoint `C`, `D`).
pub fn check_ef_proximity(r: &ProximityRelation) -> AxiomReport {
    let u = r.universe();
    r.materialize();

    let ax1 = 'a1: {
        for a in u.subsets() {
            for b in u.subsets() {
                if r.related(a, b) && !r.related(b, a) {
                    break 'a1 Verdict::fail(
                        "axiom 1: not symmetric",
                        Witness::new().set("A", a).set("B", b),
                    );
                }
            }
        }
        Verdict::Pass
    };

    let ax2 = 'a2: {
        for a in u.subsets() {
            for b in u.subsets() {
                for c in u.subsets() {
                    if r.related(a, b.union(c)) != (r.related(a, b) || r.related(a, c)) {
                        break 'a2 Verdict::fail(
                            "axiom 2: union equivalence",
                            Witness::new().set("A", a).set("B", b).set("C", c),
                        );
                    }
                }
            }
        }
        Verdict::Pass
    };

    let ax3 = 'a3: {
        for a in u.subsets() {
            for b in u.subsets() {
                if r.related(a, b) && (a.is_empty() || b.is_empty()) {
                    break 'a3 Verdict::fail(
                        "axiom 3: empty set related",
                        Witness::new().set("A", a).set("B", b),
                    );
                }
            }
        }
        Verdict::Pass
    };

    let ax4 = 'a4: {
        for a in u.subsets() {
            for b in u.subsets() {
                if !a.inter(b).is_empty() && !r.related(a, b) {
                    break 'a4 Verdict::fail(
                        "axiom 4: overlapping sets unrelated",
                        Witness::new().set("A", a).set("B", b),
                    );
                }
            }
        }
        Verdict::Pass
    };

    let ax5 = 'a5: {
        for a in u.subsets() {
            for b in u.subsets() {
                if r.related(a, b) {
                    continue;
                }
                let mut found = false;
                'search: for c in u.subsets() {
                    if r.related(a, u.complement(c)) {
                        continue;
                    }
                    for d in u.subsets() {
                        if c.inter(d).is_empty() && !r.related(u.complement(d), b) {
                            found = true;
                            break 'search;
                        }
                    }
                }
                if !found {
                    break 'a5 Verdict::fail(
                        "axiom 5: no disjoint separating pair exists",
                        Witness::new().set("A", a).set("B", b),
                    );
                }
            }
        }
        Verdict::Pass
    };

    AxiomReport {
        axioms: [ax1, ax2, ax3, ax4, ax5],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::primal::{enumerate_primals, mk_empty, mk_maximal, mk_principal};
    use crate::topology::{enumerate_topologies, is_normal, Topology};

    fn abc() -> Universe {
        Universe::alphabetic(3).unwrap()
    }

    #[test]
    fn related_examples() {
        let u = abc();
        let r = from_intersection_complement(&mk_principal(&u, "a").unwrap());
        // ({b}∩{b})^c = {a,c} ∉ P
        assert!(!r.related(Subset(0b010), Subset(0b010)));
        // under the maximal primal the rule degenerates to overlap
        let rm = from_intersection_complement(&mk_maximal(&u));
        for a in u.subsets() {
            for b in u.subsets() {
                assert_eq!(rm.related(a, b), !a.inter(b).is_empty());
            }
        }
        let rd = from_double_complement(&mk_principal(&u, "a").unwrap());
        for b in u.subsets() {
            assert!(!rd.related(u.empty(), b));
        }
    }

    #[test]
    fn double_complement_maximal_is_nonempty_overlap() {
        let u2 = Universe::alphabetic(2).unwrap();
        let r = from_double_complement(&mk_maximal(&u2));
        for a in u2.subsets() {
            for b in u2.subsets() {
                assert_eq!(r.related(a, b), !a.is_empty() && !b.is_empty());
            }
        }
        let re = from_double_complement(&mk_empty(&u2));
        assert!(u2.subsets().all(|a| u2.subsets().all(|b| !re.related(a, b))));
    }

    #[test]
    fn constructors_pass_axioms_for_all_primals() {
        for n in 1..=3 {
            let u = Universe::alphabetic(n).unwrap();
            for p in enumerate_primals(&u).unwrap() {
                let r1 = from_double_complement(&p);
                assert!(check_primal_proximity(&r1, &p).all_pass(), "dc n={n}");
                let r2 = from_intersection_complement(&p);
                assert!(check_primal_proximity(&r2, &p).all_pass(), "ic n={n}");
            }
        }
    }

    #[test]
    fn closure_overlap_on_normal_spaces_with_maximal_primal() {
        for n in 1..=3 {
            let u = Universe::alphabetic(n).unwrap();
            let p = mk_maximal(&u);
            for t in enumerate_topologies(&u).unwrap() {
                if !is_normal(&t) {
                    continue;
                }
                let r = from_closure_overlap(&t, &p);
                assert!(check_primal_proximity(&r, &p).all_pass(), "n={n}");
            }
        }
    }

    #[test]
    fn closure_overlap_shapes() {
        let u = abc();
        let p = mk_maximal(&u);
        let rd = from_closure_overlap(&Topology::discrete(&u), &p);
        for a in u.subsets() {
            for b in u.subsets() {
                assert_eq!(rd.related(a, b), !a.inter(b).is_empty());
            }
        }
        let ri = from_closure_overlap(&Topology::indiscrete(&u), &p);
        for a in u.subsets() {
            for b in u.subsets() {
                assert_eq!(ri.related(a, b), !a.is_empty() && !b.is_empty());
            }
        }
    }

    #[test]
    fn explicit_relation_axiom4_failure() {
        let u2 = Universe::alphabetic(2).unwrap();
        // only ({a},{a}) related
        let r = ProximityRelation::explicit_from_pairs(&u2, &[(Subset(0b01), Subset(0b01))]);
        let report = check_primal_proximity(&r, &mk_maximal(&u2));
        match &report.axioms[3] {
            Verdict::Fail { witness, .. } => {
                assert_eq!(witness.get_set("A"), Some(Subset(0b01)));
            }
            _ => panic!("expected axiom 4 failure"),
        }
    }

    #[test]
    fn empty_relation_with_empty_primal_passes() {
        let u2 = Universe::alphabetic(2).unwrap();
        let r = ProximityRelation::explicit(&u2, vec![0; 4]);
        assert!(check_primal_proximity(&r, &mk_empty(&u2)).all_pass());
    }

    #[test]
    fn ef_proximity_examples() {
        let u2 = Universe::alphabetic(2).unwrap();
        // overlap relation
        let rows: Vec<u32> = u2
            .subsets()
            .map(|a| {
                let mut row = 0u32;
                for b in u2.subsets() {
                    if !a.inter(b).is_empty() {
                        row |= 1 << b.mask();
                    }
                }
                row
            })
            .collect();
        let r = ProximityRelation::explicit(&u2, rows);
        assert!(check_ef_proximity(&r).all_pass());

        // asymmetric relation fails axiom 1
        let ra = ProximityRelation::explicit_from_pairs(&u2, &[(Subset(0b01), Subset(0b10))]);
        assert!(!check_ef_proximity(&ra).axioms[0].is_pass());

        // empty relation on a singleton fails axiom 4 at A=B=X
        let u1 = Universe::alphabetic(1).unwrap();
        let re = ProximityRelation::explicit(&u1, vec![0, 0]);
        match &check_ef_proximity(&re).axioms[3] {
            Verdict::Fail { witness, .. } => {
                assert_eq!(witness.get_set("A"), Some(u1.full()));
                assert_eq!(witness.get_set("B"), Some(u1.full()));
            }
            _ => panic!("expected axiom 4 failure"),
        }
    }

    #[test]
    fn point_closure_symmetric_under_discrete_maximal() {
        let u = abc();
        let p = mk_maximal(&u);
        let r = from_point_closure(&Topology::discrete(&u), &p);
        let report = check_primal_proximity(&r, &p);
        assert!(report.all_pass());
    }

    #[test]
    fn point_closure_breaks_symmetry_somewhere() {
        // counterexample search over topologies x primals, n <= 3
        let mut found = false;
        'outer: for n in 1..=3usize {
            let u = Universe::alphabetic(n).unwrap();
            for t in enumerate_topologies(&u).unwrap() {
                for p in enumerate_primals(&u).unwrap() {
                    let r = from_point_closure(&t, &p);
                    if !check_primal_proximity(&r, &p).axioms[0].is_pass() {
                        found = true;
                        break 'outer;
                    }
                }
            }
        }
        assert!(found, "point-closure should fail symmetry on some instance");
    }

    #[test]
    fn diamond_overlap_satisfies_first_four_axioms() {
        for n in 1..=3usize {
            let u = Universe::alphabetic(n).unwrap();
            for t in enumerate_topologies(&u).unwrap() {
                for p in enumerate_primals(&u).unwrap() {
                    let r = from_diamond_overlap(&t, &p);
                    let report = check_primal_proximity(&r, &p);
                    for i in 0..4 {
                        assert!(report.axioms[i].is_pass(), "axiom {} n={n}", i + 1);
                    }
                }
            }
        }
    }

    #[test]
    fn materialize_is_idempotent_and_faithful() {
        let u = abc();
        let r = from_intersection_complement(&mk_principal(&u, "a").unwrap());
        let m1 = r.matrix();
        let m2 = r.matrix();
        assert_eq!(m1, m2);
        for a in u.subsets() {
            for b in u.subsets() {
                assert_eq!(
                    r.related(a, b),
                    m1[a.mask() as usize] >> b.mask() & 1 == 1
                );
            }
        }
    }

    #[test]
    fn separators_recheck_on_pass() {
        // whenever axiom 5 passes, a separator pair exists for every
        // unrelated pair and re-checks against all three conjuncts
        let u = abc();
        let p = mk_principal(&u, "a").unwrap();
        let r = from_intersection_complement(&p);
        assert!(check_primal_proximity(&r, &p).all_pass());
        for a in u.subsets() {
            for b in u.subsets() {
                if r.related(a, b) {
                    continue;
                }
                let (c, d) = find_separators(&r, &p, a, b).expect("separator must exist");
                assert!(!r.related(a, u.complement(c)));
                assert!(!r.related(u.complement(d), b));
                assert!(!p.contains(u.complement(c.inter(d))));
            }
        }
    }
}
