//! Primals: construction, validation, and exhaustive enumeration.
//!
//! A primal on `X` is a family `P` of subsets with `X ∉ P`, downward closed,
//! and such that `A∩B ∈ P` forces `A ∈ P` or `B ∈ P`. The empty family
//! satisfies all three conditions vacuously and is accepted here as a
//! degenerate primal.

use crate::sets::{is_downward_closed, SetError, Subset, SubsetFamily, Universe, Verdict, Witness};

/// A validated primal `(X, P)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Primal {
    universe: Universe,
    family: SubsetFamily,
}

impl Primal {
    /// Validates `f` against the three primal conditions.
    pub fn new(universe: Universe, family: SubsetFamily) -> Result<Self, Verdict> {
        match check_primal(&universe, family) {
            Verdict::Pass => Ok(Primal { universe, family }),
            fail => Err(fail),
        }
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn family(&self) -> SubsetFamily {
        self.family
    }

    pub fn contains(&self, s: Subset) -> bool {
        self.family.contains(s)
    }

    /// True iff `P = 2^X \ {X}`.
    pub fn is_maximal(&self) -> bool {
        let mut max = SubsetFamily::power_set(&self.universe);
        max.remove(self.universe.full());
        self.family == max
    }

    /// True iff `P = ∅` (the degenerate primal).
    pub fn is_degenerate(&self) -> bool {
        self.family.is_empty()
    }
}

/// Checks the three primal conditions, naming the first violated one.
pub fn check_primal(u: &Universe, f: SubsetFamily) -> Verdict {
    if f.contains(u.full()) {
        return Verdict::fail("(i) X is a member", Witness::new().set("A", u.full()));
    }
    if let Verdict::Fail { witness, .. } = is_downward_closed(u, f) {
        return Verdict::fail("(ii) not downward closed", witness);
    }
    for a in u.subsets() {
        for b in u.subsets() {
            if f.contains(a.inter(b)) && !f.contains(a) && !f.contains(b) {
                return Verdict::fail(
                    "(iii) intersection member without a member factor",
                    Witness::new().set("A", a).set("B", b),
                );
            }
        }
    }
    Verdict::Pass
}

/// Checks the equivalent contrapositive form: (i) X not a member,
/// (ii) supersets of non-members are non-members, (iii) non-members are
/// closed under intersection. Agrees with [`check_primal`] on every family.
pub fn check_primal_alt(u: &Universe, f: SubsetFamily) -> Verdict {
    if f.contains(u.full()) {
        return Verdict::fail("(i) X is a member", Witness::new().set("A", u.full()));
    }
    for b in u.subsets() {
        if f.contains(b) {
            continue;
        }
        for a in u.subsets() {
            if b.is_subset_of(a) && f.contains(a) {
                return Verdict::fail(
                    "(ii) member above a non-member",
                    Witness::new().set("B", b).set("A", a),
                );
            }
        }
    }
    for a in u.subsets() {
        for b in u.subsets() {
            if !f.contains(a) && !f.contains(b) && f.contains(a.inter(b)) {
                return Verdict::fail(
                    "(iii) non-members not intersection-closed",
                    Witness::new().set("A", a).set("B", b),
                );
            }
        }
    }
    Verdict::Pass
}

/// The maximal primal `2^X \ {X}`.
pub fn mk_maximal(u: &Universe) -> Primal {
    let mut f = SubsetFamily::power_set(u);
    f.remove(u.full());
    Primal {
        universe: u.clone(),
        family: f,
    }
}

/// The principal primal `{A : x ∉ A}`.
pub fn mk_principal(u: &Universe, x: &str) -> Result<Primal, SetError> {
    let i = u
        .index_of(x)
        .ok_or_else(|| SetError::UnknownLabel(x.to_string()))?;
    let f = SubsetFamily::from_subsets(u.subsets().filter(|s| !s.contains_point(i)));
    Ok(Primal {
        universe: u.clone(),
        family: f,
    })
}

/// The degenerate empty primal.
pub fn mk_empty(u: &Universe) -> Primal {
    Primal {
        universe: u.clone(),
        family: SubsetFamily::empty(),
    }
}

/// `{A : |A^c| ≥ ℵ₀}` (or `> ℵ₀` when `strict`) evaluated on a finite
/// universe. No finite set has an infinite complement, so the result is
/// always the empty family; the constructor exists for coverage and is
/// documented as degenerate.
pub fn mk_cocardinal(_u: &Universe, _strict: bool) -> SubsetFamily {
    SubsetFamily::empty()
}

/// All primals on `u`, ascending by family table value.
///
/// For `n <= 4` this filters all `2^(2^n)` families directly; `n = 5` first
/// generates the downward-closed candidates (a Dedekind-number-sized set)
/// and filters those.
pub fn enumerate_primals(u: &Universe) -> Result<Vec<Primal>, SetError> {
    let fams = if u.n() <= 4 {
        enumerate_primal_families_brute(u)
    } else {
        enumerate_primal_families_generated(u)
    };
    Ok(fams
        .into_iter()
        .map(|family| Primal {
            universe: u.clone(),
            family,
        })
        .collect())
}

/// Raw brute-force path: every family over `2^X`, filtered by the axioms.
/// Only feasible for `n <= 4`.
pub fn enumerate_primal_families_brute(u: &Universe) -> Vec<SubsetFamily> {
    assert!(u.n() <= 4, "brute-force primal enumeration capped at n=4");
    let table_bits = 1u64 << u.subset_count();
    (0..table_bits)
        .map(|bits| SubsetFamily(bits as u32))
        .filter(|f| check_primal(u, *f).is_pass())
        .collect()
}

/// Candidate-generation path: enumerate downward-closed families by depth
/// first search (a mask may join only once all its subsets have), then filter
/// by conditions (i) and (iii). Returns the same list as the brute path where
/// both run.
pub fn enumerate_primal_families_generated(u: &Universe) -> Vec<SubsetFamily> {
    let count = u.subset_count();
    let mut down = Vec::new();
    // masks in ascending order; every proper subset of m has a smaller mask,
    // so membership of all subsets is already decided when m is considered
    fn rec(u: &Universe, count: u32, next: u32, f: SubsetFamily, out: &mut Vec<SubsetFamily>) {
        if next == count {
            out.push(f);
            return;
        }
        let m = Subset(next);
        rec(u, count, next + 1, f, out);
        if m.subsets().all(|b| b == m || f.contains(b)) {
            let mut g = f;
            g.insert(m);
            rec(u, count, next + 1, g, out);
        }
    }
    rec(u, count, 0, SubsetFamily::empty(), &mut down);
    let mut primals: Vec<SubsetFamily> = down
        .into_iter()
        .filter(|f| !f.contains(u.full()))
        .filter(|f| {
            u.subsets().all(|a| {
                u.subsets()
                    .all(|b| !(f.contains(a.inter(b)) && !f.contains(a) && !f.contains(b)))
            })
        })
        .collect();
    primals.sort();
    primals
}

/// The complement family `{A : A ∉ P}`, for the duality cross-check.
pub fn dual_family(p: &Primal) -> SubsetFamily {
    SubsetFamily::from_subsets(p.universe().subsets().filter(|s| !p.contains(*s)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc() -> Universe {
        Universe::alphabetic(3).unwrap()
    }

    #[test]
    fn principal_matches_worked_example() {
        let u = abc();
        let p = mk_principal(&u, "a").unwrap();
        // {∅,{b},{c},{b,c}}
        let expect = SubsetFamily::from_subsets([Subset(0), Subset(2), Subset(4), Subset(6)]);
        assert_eq!(p.family(), expect);
        assert!(check_primal(&u, p.family()).is_pass());
        assert!(check_primal_alt(&u, p.family()).is_pass());
    }

    #[test]
    fn principal_small_cases() {
        let u1 = Universe::alphabetic(1).unwrap();
        assert_eq!(mk_principal(&u1, "a").unwrap().family(), SubsetFamily(0b1));
        let u2 = Universe::alphabetic(2).unwrap();
        // {∅,{a}}
        assert_eq!(mk_principal(&u2, "b").unwrap().family(), SubsetFamily(0b11));
        assert!(mk_principal(&u2, "z").is_err());
    }

    #[test]
    fn maximal_cases() {
        let u1 = Universe::alphabetic(1).unwrap();
        assert_eq!(mk_maximal(&u1).family(), SubsetFamily(0b01));
        let u2 = Universe::alphabetic(2).unwrap();
        assert_eq!(mk_maximal(&u2).family(), SubsetFamily(0b0111));
        let u3 = abc();
        assert_eq!(mk_maximal(&u3).family().len(), 7);
        assert!(check_primal(&u3, mk_maximal(&u3).family()).is_pass());
        assert!(mk_maximal(&u3).is_maximal());
    }

    #[test]
    fn family_with_x_fails_condition_i() {
        let u = abc();
        let mut f = SubsetFamily::power_set(&u);
        f.remove(Subset(0b11));
        match check_primal(&u, f) {
            Verdict::Fail { condition, .. } => assert!(condition.starts_with("(i)")),
            _ => panic!("expected condition (i) failure"),
        }
    }

    #[test]
    fn cocardinal_is_degenerate() {
        let u = abc();
        assert!(mk_cocardinal(&u, false).is_empty());
        assert!(mk_cocardinal(&u, true).is_empty());
        assert!(check_primal(&u, mk_cocardinal(&u, false)).is_pass());
    }

    #[test]
    fn enumeration_counts() {
        for (n, expect) in [(1usize, 2usize), (2, 4), (3, 8)] {
            let u = Universe::alphabetic(n).unwrap();
            assert_eq!(enumerate_primals(&u).unwrap().len(), expect, "n={n}");
        }
    }

    #[test]
    fn enumeration_paths_agree() {
        for n in 1..=4 {
            let u = Universe::alphabetic(n).unwrap();
            assert_eq!(
                enumerate_primal_families_brute(&u),
                enumerate_primal_families_generated(&u),
                "n={n}"
            );
        }
    }

    #[test]
    fn both_primal_checks_agree_exhaustively() {
        for n in 1..=3 {
            let u = Universe::alphabetic(n).unwrap();
            for bits in 0..(1u64 << u.subset_count()) {
                let f = SubsetFamily(bits as u32);
                assert_eq!(
                    check_primal(&u, f).is_pass(),
                    check_primal_alt(&u, f).is_pass(),
                    "n={n} family={bits:#b}"
                );
            }
        }
    }

    #[test]
    fn duality_cross_check() {
        // f is a primal iff its complement family contains X, is upward
        // closed, and is closed under binary intersection
        for n in 1..=3 {
            let u = Universe::alphabetic(n).unwrap();
            for bits in 0..(1u64 << u.subset_count()) {
                let f = SubsetFamily(bits as u32);
                let dual =
                    SubsetFamily::from_subsets(u.subsets().filter(|s| !f.contains(*s)));
                let filter_like = dual.contains(u.full())
                    && u.subsets().all(|a| {
                        !dual.contains(a)
                            || u.subsets()
                                .all(|b| !a.is_subset_of(b) || dual.contains(b))
                    })
                    && dual
                        .iter(&u)
                        .all(|a| dual.iter(&u).all(|b| dual.contains(a.inter(b))));
                assert_eq!(check_primal(&u, f).is_pass(), filter_like, "n={n} f={bits:#b}");
            }
        }
    }

    #[test]
    fn dual_family_examples() {
        let u = abc();
        let p = mk_principal(&u, "a").unwrap();
        let d = dual_family(&p);
        // {A : a ∈ A}
        for s in u.subsets() {
            assert_eq!(d.contains(s), s.contains_point(0));
        }
        assert_eq!(dual_family(&mk_maximal(&u)).len(), 1);
        assert!(dual_family(&mk_maximal(&u)).contains(u.full()));
        assert_eq!(dual_family(&mk_empty(&u)), SubsetFamily::power_set(&u));
    }

    #[test]
    fn empty_family_is_accepted() {
        let u = abc();
        assert!(check_primal(&u, SubsetFamily::empty()).is_pass());
        assert!(mk_empty(&u).is_degenerate());
    }
}
