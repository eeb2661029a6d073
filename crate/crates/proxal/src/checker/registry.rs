//! The theorem registry: one entry per verified claim. Each body is a pure
//! function of the instance and one assignment of the declared set variables;
//! the driver in the parent module exhausts the assignments.

use crate::checker::instance::Instance;
use crate::operators;
use crate::proximity::{find_separators, RuleKind};
use crate::sets::{Subset, Verdict, Witness};
use crate::topology;

/// Outcome of a theorem body on a single variable assignment.
pub enum BodyOutcome {
    /// The assignment does not meet the hypotheses.
    Vacuous,
    /// Hypotheses met, conclusion holds.
    Holds,
    /// Hypotheses met, conclusion violated. Carries witness data beyond the
    /// variable bindings themselves (sub-part labels, computed sets).
    Violated(Witness),
}

fn violated_part(part: &str) -> BodyOutcome {
    BodyOutcome::Violated(Witness::new().note("part", part))
}

fn violated_plain() -> BodyOutcome {
    BodyOutcome::Violated(Witness::new())
}

/// Standing hypotheses an instance must meet before a theorem's variables are
/// quantified at all; unmet requirements make the whole theorem VACUOUS.
pub enum Requirement {
    ValidRelation,
    ValidRelationMaximalPrimal,
    Kind(RuleKind),
    KindPrimalRegular(RuleKind),
    KindPrimalNormalT1(RuleKind),
}

impl Requirement {
    pub fn met(&self, inst: &Instance) -> bool {
        match self {
            Requirement::ValidRelation => inst.relation_valid(),
            Requirement::ValidRelationMaximalPrimal => {
                inst.relation_valid() && inst.maximal_primal()
            }
            Requirement::Kind(k) => inst.relation().kind() == *k,
            Requirement::KindPrimalRegular(k) => {
                inst.relation().kind() == *k
                    && inst
                        .topology()
                        .is_some_and(|t| topology::is_primal_regular(t, inst.primal()).is_pass())
            }
            Requirement::KindPrimalNormalT1(k) => {
                inst.relation().kind() == *k
                    && inst.topology().is_some_and(|t| {
                        topology::is_t1(t) && topology::is_primal_normal(t, inst.primal()).is_pass()
                    })
            }
        }
    }
}

pub struct TheoremDef {
    pub id: &'static str,
    pub statement: &'static str,
    pub vars: &'static [&'static str],
    pub requirement: Requirement,
    pub body: fn(&Instance, &[Subset]) -> BodyOutcome,
}

/// Theorems allowed to FAIL: each has a reproducible counterexample and the
/// suite treats their failures as expected.
pub const KNOWN_GAPS: &[&str] = &["C4.12", "T5.4", "T5.19"];

fn r3_3(inst: &Instance, v: &[Subset]) -> BodyOutcome {
    let (a, b) = (v[0], v[1]);
    let u = inst.universe();
    for x in 0..u.n() {
        if a.contains_point(x) && !inst.rel(u.singleton(x), a) {
            return BodyOutcome::Violated(Witness::new().note("part", "(1)").element("x", x));
        }
    }
    if !inst.rel(a, b) && !a.inter(b).is_empty() {
        return violated_part("(2)");
    }
    BodyOutcome::Holds
}

fn c3_4(inst: &Instance, v: &[Subset]) -> BodyOutcome {
    let (a, b, c) = (v[0], v[1], v[2]);
    if !inst.rel(b, a) && inst.rel(a, b) {
        return violated_part("(1)");
    }
    if !inst.rel(a, b.union(c)) != (!inst.rel(a, b) && !inst.rel(a, c)) {
        return violated_part("(2)");
    }
    if inst.rel(a, b) && !inst.in_primal(inst.comp(a)) {
        return violated_part("(3)");
    }
    if !inst.rel(a, b) && inst.in_primal(inst.comp(a.inter(b))) {
        return violated_part("(4)");
    }
    if !inst.rel(a, b) && find_separators(inst.relation(), inst.primal(), a, b).is_none() {
        return violated_part("(5)");
    }
    BodyOutcome::Holds
}

fn l_mono(inst: &Instance, v: &[Subset]) -> BodyOutcome {
    let (a, b, c, d) = (v[0], v[1], v[2], v[3]);
    if !(inst.rel(a, b) && a.is_subset_of(c) && b.is_subset_of(d)) {
        return BodyOutcome::Vacuous;
    }
    if inst.rel(c, d) {
        BodyOutcome::Holds
    } else {
        violated_plain()
    }
}

fn l4_2(inst: &Instance, v: &[Subset]) -> BodyOutcome {
    let (a, b) = (v[0], v[1]);
    if inst.rel(b, a) {
        return BodyOutcome::Vacuous;
    }
    if inst.pp(a).is_subset_of(inst.comp(b)) {
        BodyOutcome::Holds
    } else {
        BodyOutcome::Violated(Witness::new().set("point-primal", inst.pp(a)))
    }
}

fn t4_5(inst: &Instance, v: &[Subset]) -> BodyOutcome {
    let (a, b) = (v[0], v[1]);
    if inst.rel(b, a) {
        return BodyOutcome::Vacuous;
    }
    if !inst.rel(b, inst.pp(a)) {
        BodyOutcome::Holds
    } else {
        BodyOutcome::Violated(Witness::new().set("point-primal", inst.pp(a)))
    }
}

fn c4_5(inst: &Instance, v: &[Subset]) -> BodyOutcome {
    let (a, b) = (v[0], v[1]);
    if inst.rel(b, a) {
        return BodyOutcome::Vacuous;
    }
    if !inst.rel(inst.pp(b), inst.pp(a)) {
        BodyOutcome::Holds
    } else {
        violated_plain()
    }
}

fn t4_6(inst: &Instance, v: &[Subset]) -> BodyOutcome {
    let (a, b) = (v[0], v[1]);
    let u = inst.universe();
    let (pa, pb) = (inst.pp(a), inst.pp(b));
    if a.is_subset_of(b) && !pa.is_subset_of(pb) {
        return violated_part("(1)");
    }
    if !inst.pp(a.inter(b)).is_subset_of(pa.inter(pb)) {
        return violated_part("(2)");
    }
    if pa.union(pb) != inst.pp(a.union(b)) {
        return violated_part("(3)");
    }
    if !inst.pp(pa).is_subset_of(pa) {
        return violated_part("(4)");
    }
    if !inst.in_primal(inst.comp(a)) && !pa.is_empty() {
        return violated_part("(5)");
    }
    if !inst.pp(u.empty()).is_empty() {
        return violated_part("(6)");
    }
    if !pa.minus(pb).is_subset_of(inst.pp(a.minus(b))) {
        return violated_part("(7)");
    }
    if !inst.in_primal(inst.comp(b))
        && (inst.pp(a.union(b)) != pa || pa != inst.pp(a.minus(b)))
    {
        return violated_part("(8)");
    }
    if !inst.in_primal(inst.comp(a.minus(b).union(b.minus(a)))) && pa != pb {
        return violated_part("(9)");
    }
    BodyOutcome::Holds
}

fn t4_9(inst: &Instance, v: &[Subset]) -> BodyOutcome {
    let (a, b) = (v[0], v[1]);
    let u = inst.universe();
    if !inst.in_primal(inst.comp(a)) && !a.inter(inst.pp(b)).is_empty() {
        return violated_part("(1)");
    }
    let all_points_related = u.points().all(|s| inst.rel(s, u.full()));
    if all_points_related != inst.maximal_primal() {
        return violated_part("(2)");
    }
    if inst.maximal_primal() && inst.pp(u.full()) != u.full() {
        return violated_part("(3)");
    }
    BodyOutcome::Holds
}

fn t4_10(inst: &Instance, v: &[Subset]) -> BodyOutcome {
    let (a, b, c) = (v[0], v[1], v[2]);
    if !(b.is_subset_of(c) && b != c && !inst.rel(a, b) && inst.rel(a, c)) {
        return BodyOutcome::Vacuous;
    }
    if inst.rel(a, c.minus(b)) {
        BodyOutcome::Holds
    } else {
        violated_plain()
    }
}

fn t4_11(inst: &Instance, v: &[Subset]) -> BodyOutcome {
    let (a, b) = (v[0], v[1]);
    if inst.rel(a, b) {
        return BodyOutcome::Vacuous;
    }
    let u = inst.universe();
    for c in u.subsets() {
        if !inst.rel(a, c) && !inst.rel(b, inst.comp(c)) {
            return BodyOutcome::Holds;
        }
    }
    violated_plain()
}

fn c4_12(inst: &Instance, v: &[Subset]) -> BodyOutcome {
    let (a, b, c) = (v[0], v[1], v[2]);
    if !(!inst.rel(a, b) && inst.rel(b, c)) {
        return BodyOutcome::Vacuous;
    }
    if !inst.rel(a, c) {
        BodyOutcome::Holds
    } else {
        violated_plain()
    }
}

fn l5_2(inst: &Instance, v: &[Subset]) -> BodyOutcome {
    let (a, b) = (v[0], v[1]);
    let u = inst.universe();
    let link = (0..u.n())
        .find(|x| inst.rel(a, u.singleton(*x)) && inst.rel(u.singleton(*x), b));
    match link {
        None => BodyOutcome::Vacuous,
        Some(x) => {
            if inst.rel(a, b) {
                BodyOutcome::Holds
            } else {
                BodyOutcome::Violated(Witness::new().element("x", x))
            }
        }
    }
}

fn verdict_to_outcome(v: Verdict) -> BodyOutcome {
    match v {
        Verdict::Pass => BodyOutcome::Holds,
        Verdict::Fail { condition, witness } => {
            let mut w = Witness::new().note("condition", &condition);
            w.items.extend(witness.items);
            BodyOutcome::Violated(w)
        }
    }
}

fn t5_3(inst: &Instance, _v: &[Subset]) -> BodyOutcome {
    verdict_to_outcome(topology::check_topology(
        inst.universe(),
        inst.tau_hat_family(),
    ))
}

fn t5_4(inst: &Instance, v: &[Subset]) -> BodyOutcome {
    let a = v[0];
    let cl = inst.clh(a);
    let op = inst.pp(a);
    if cl == op {
        BodyOutcome::Holds
    } else {
        BodyOutcome::Violated(Witness::new().set("closure", cl).set("point-primal", op))
    }
}

fn t5_6(inst: &Instance, _v: &[Subset]) -> BodyOutcome {
    verdict_to_outcome(operators::check_kuratowski(&operators::point_primal_map(
        inst.relation(),
    )))
}

fn t5_7(inst: &Instance, _v: &[Subset]) -> BodyOutcome {
    verdict_to_outcome(operators::check_kuratowski(&operators::cl_star_map(
        inst.relation(),
    )))
}

fn t5_8(inst: &Instance, v: &[Subset]) -> BodyOutcome {
    let (a, b) = (v[0], v[1]);
    let pa = inst.pp(a);
    if inst.rel(b, a) != inst.rel(b, inst.cls(a)) {
        return violated_part("(1)");
    }
    if inst.cls(pa) != pa {
        return violated_part("(2)");
    }
    if inst.cls(pa) != inst.pp(inst.cls(a)) {
        return violated_part("(3)");
    }
    BodyOutcome::Holds
}

fn t5_9(inst: &Instance, v: &[Subset]) -> BodyOutcome {
    let (a, b, h) = (v[0], v[1], v[2]);
    let u = inst.universe();
    let hyp = a.is_subset_of(b)
        && inst.rel(a, b)
        && (0..u.n()).all(|x| !b.contains_point(x) || inst.rel(u.singleton(x), h));
    if !hyp {
        return BodyOutcome::Vacuous;
    }
    if inst.rel(a, h) {
        BodyOutcome::Holds
    } else {
        violated_plain()
    }
}

fn partial_axioms(inst: &Instance, indices: &[usize]) -> Option<BodyOutcome> {
    let report = inst.axiom_report();
    for &i in indices {
        if let Verdict::Fail { witness, .. } = &report.axioms[i] {
            let mut w = Witness::new().note("part", &format!("axiom {}", i + 1));
            w.items.extend(witness.items.clone());
            return Some(BodyOutcome::Violated(w));
        }
    }
    None
}

fn e5_10(inst: &Instance, _v: &[Subset]) -> BodyOutcome {
    if let Some(out) = partial_axioms(inst, &[1, 2, 3, 4]) {
        return out;
    }
    let u = inst.universe();
    let t = inst.topology().expect("point-closure carries a topology");
    let ts = inst.tau_star_family();
    for open in t.opens().iter(u) {
        if !ts.contains(open) {
            return BodyOutcome::Violated(
                Witness::new()
                    .note("part", "base open missing from tau-star")
                    .set("U", open),
            );
        }
    }
    BodyOutcome::Holds
}

fn e5_11(inst: &Instance, _v: &[Subset]) -> BodyOutcome {
    if let Some(out) = partial_axioms(inst, &[1, 2, 3, 4]) {
        return out;
    }
    let u = inst.universe();
    let td = inst.tau_diamond_family();
    let ts = inst.tau_star_family();
    for open in td.iter(u) {
        if !ts.contains(open) {
            return BodyOutcome::Violated(
                Witness::new()
                    .note("part", "tau-diamond open missing from tau-star")
                    .set("U", open),
            );
        }
    }
    BodyOutcome::Holds
}

fn e5_15(inst: &Instance, _v: &[Subset]) -> BodyOutcome {
    match partial_axioms(inst, &[0, 1, 2, 3]) {
        Some(out) => out,
        None => BodyOutcome::Holds,
    }
}

fn tau_diamond_equals_tau_star(inst: &Instance, _v: &[Subset]) -> BodyOutcome {
    let u = inst.universe();
    let td = inst.tau_diamond_family();
    let ts = inst.tau_star_family();
    if td == ts {
        return BodyOutcome::Holds;
    }
    let diff = u
        .subsets()
        .find(|s| td.contains(*s) != ts.contains(*s))
        .expect("families differ");
    BodyOutcome::Violated(Witness::new().set("U", diff))
}

fn t5_18(inst: &Instance, v: &[Subset]) -> BodyOutcome {
    let a = v[0];
    let u = inst.universe();
    let open = inst.tau_hat_family().contains(a);
    let no_inner_relates =
        (0..u.n()).all(|x| !a.contains_point(x) || !inst.rel(u.singleton(x), inst.comp(a)));
    if open == no_inner_relates {
        BodyOutcome::Holds
    } else {
        violated_plain()
    }
}

fn t5_19(inst: &Instance, v: &[Subset]) -> BodyOutcome {
    let (a, b) = (v[0], v[1]);
    if inst.rel(a, b) {
        return BodyOutcome::Vacuous;
    }
    let clb = inst.clh(b);
    if !clb.is_subset_of(inst.comp(a)) {
        return BodyOutcome::Violated(Witness::new().note("part", "(1)").set("closure", clb));
    }
    if inst.maximal_primal() {
        let interior = inst.inth(inst.comp(a));
        if !b.is_subset_of(interior) {
            return BodyOutcome::Violated(
                Witness::new().note("part", "(2)").set("interior", interior),
            );
        }
    }
    BodyOutcome::Holds
}

fn t5_20(inst: &Instance, v: &[Subset]) -> BodyOutcome {
    let (a, b) = (v[0], v[1]);
    if inst.rel(a, b) == inst.rel(inst.clh(a), inst.clh(b)) {
        BodyOutcome::Holds
    } else {
        violated_plain()
    }
}

pub static REGISTRY: &[TheoremDef] = &[
    TheoremDef {
        id: "R3.3",
        statement: "under the maximal primal, x in A gives {x} related to A, and unrelated sets are disjoint",
        vars: &["A", "B"],
        requirement: Requirement::ValidRelationMaximalPrimal,
        body: r3_3,
    },
    TheoremDef {
        id: "C3.4",
        statement: "five consequences of the relation axioms, stated for unrelated pairs",
        vars: &["A", "B", "C"],
        requirement: Requirement::ValidRelation,
        body: c3_4,
    },
    TheoremDef {
        id: "L-mono",
        statement: "relatedness is monotone: supersets of related sets are related",
        vars: &["A", "B", "C", "D"],
        requirement: Requirement::ValidRelation,
        body: l_mono,
    },
    TheoremDef {
        id: "L4.2",
        statement: "if B is unrelated to A then the point-primal of A avoids B",
        vars: &["A", "B"],
        requirement: Requirement::ValidRelation,
        body: l4_2,
    },
    TheoremDef {
        id: "T4.5",
        statement: "if B is unrelated to A then B is unrelated to the point-primal of A",
        vars: &["A", "B"],
        requirement: Requirement::ValidRelation,
        body: t4_5,
    },
    TheoremDef {
        id: "C4.5",
        statement: "if B is unrelated to A then their point-primals are unrelated",
        vars: &["A", "B"],
        requirement: Requirement::ValidRelation,
        body: c4_5,
    },
    TheoremDef {
        id: "T4.6",
        statement: "nine algebraic laws of the point-primal operator",
        vars: &["A", "B"],
        requirement: Requirement::ValidRelation,
        body: t4_6,
    },
    TheoremDef {
        id: "T4.9",
        statement: "point-primal images under non-member complements; the maximal primal relates every singleton to X",
        vars: &["A", "B"],
        requirement: Requirement::ValidRelation,
        body: t4_9,
    },
    TheoremDef {
        id: "T4.10",
        statement: "a set related to C but not to a proper subset B of C relates to C minus B",
        vars: &["A", "B", "C"],
        requirement: Requirement::ValidRelation,
        body: t4_10,
    },
    TheoremDef {
        id: "T4.11",
        statement: "every unrelated pair admits a one-set separator C",
        vars: &["A", "B"],
        requirement: Requirement::ValidRelation,
        body: t4_11,
    },
    TheoremDef {
        id: "C4.12",
        statement: "unrelatedness to A propagates from B to anything B relates to",
        vars: &["A", "B", "C"],
        requirement: Requirement::ValidRelation,
        body: c4_12,
    },
    TheoremDef {
        id: "L5.2",
        statement: "a point related to both sides links A to B",
        vars: &["A", "B"],
        requirement: Requirement::ValidRelation,
        body: l5_2,
    },
    TheoremDef {
        id: "T5.3",
        statement: "complements of the proximity-closed sets form a topology",
        vars: &[],
        requirement: Requirement::ValidRelation,
        body: t5_3,
    },
    TheoremDef {
        id: "T5.4",
        statement: "the point-primal of A equals the closure of A in the induced topology",
        vars: &["A"],
        requirement: Requirement::ValidRelation,
        body: t5_4,
    },
    TheoremDef {
        id: "T5.6",
        statement: "under the maximal primal the point-primal operator is a Kuratowski closure",
        vars: &[],
        requirement: Requirement::ValidRelationMaximalPrimal,
        body: t5_6,
    },
    TheoremDef {
        id: "T5.7",
        statement: "cl-star is a Kuratowski closure operator",
        vars: &[],
        requirement: Requirement::ValidRelation,
        body: t5_7,
    },
    TheoremDef {
        id: "T5.8",
        statement: "cl-star preserves unrelatedness and fixes point-primal images",
        vars: &["A", "B"],
        requirement: Requirement::ValidRelation,
        body: t5_8,
    },
    TheoremDef {
        id: "T5.9",
        statement: "relatedness transfers to H when every point of B relates to H",
        vars: &["A", "B", "H"],
        requirement: Requirement::ValidRelation,
        body: t5_9,
    },
    TheoremDef {
        id: "E5.10",
        statement: "the point-closure rule satisfies axioms 2 to 5 and every base open is tau-star open",
        vars: &[],
        requirement: Requirement::Kind(RuleKind::PointClosure),
        body: e5_10,
    },
    TheoremDef {
        id: "E5.11",
        statement: "the point-diamond rule satisfies axioms 2 to 5 and tau-diamond is contained in tau-star",
        vars: &[],
        requirement: Requirement::Kind(RuleKind::PointDiamond),
        body: e5_11,
    },
    TheoremDef {
        id: "T5.14",
        statement: "on a primal-regular space the point-diamond rule gives tau-diamond equal to tau-star",
        vars: &[],
        requirement: Requirement::KindPrimalRegular(RuleKind::PointDiamond),
        body: tau_diamond_equals_tau_star,
    },
    TheoremDef {
        id: "E5.15",
        statement: "the diamond-overlap rule satisfies axioms 1 to 4",
        vars: &[],
        requirement: Requirement::Kind(RuleKind::DiamondOverlap),
        body: e5_15,
    },
    TheoremDef {
        id: "T5.17",
        statement: "on a primal-normal T1 space the diamond-overlap rule gives tau-diamond equal to tau-star",
        vars: &[],
        requirement: Requirement::KindPrimalNormalT1(RuleKind::DiamondOverlap),
        body: tau_diamond_equals_tau_star,
    },
    TheoremDef {
        id: "T5.18",
        statement: "a set is open in the induced topology iff no inner point relates to the complement",
        vars: &["A"],
        requirement: Requirement::ValidRelation,
        body: t5_18,
    },
    TheoremDef {
        id: "T5.19",
        statement: "for an unrelated pair the closure of B avoids A; under the maximal primal B sits in the interior of the complement of A",
        vars: &["A", "B"],
        requirement: Requirement::ValidRelation,
        body: t5_19,
    },
    TheoremDef {
        id: "T5.20",
        statement: "relatedness is invariant under closure in the induced topology",
        vars: &["A", "B"],
        requirement: Requirement::ValidRelation,
        body: t5_20,
    },
];

pub fn lookup(id: &str) -> Option<&'static TheoremDef> {
    REGISTRY.iter().find(|d| d.id == id)
}

pub fn all_ids() -> Vec<&'static str> {
    REGISTRY.iter().map(|d| d.id).collect()
}
