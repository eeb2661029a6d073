//! Universes, subsets, and subset families on at most [`MAX_UNIVERSE`] points.
//!
//! A subset of an `n`-point universe is an `n`-bit mask (bit `i` set means
//! `labels[i]` is a member). A family of subsets is a `2^n`-bit table indexed
//! by subset mask. With `n <= 5` both fit in a `u32`, which keeps every
//! structure in this crate exhaustively enumerable.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Hard cap on universe size. Relation matrices are `2^n x 2^n` bits and the
/// strong-axiom searches are `O(4^n * 4^n)` per unrelated pair, so 5 is the
/// last size that stays interactive.
pub const MAX_UNIVERSE: usize = 5;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SetError {
    #[error("universe must have between 1 and {MAX_UNIVERSE} elements, got {0}")]
    BadUniverseSize(usize),
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("size cap exceeded: {0}")]
    SizeCap(String),
}

/// The ambient set `X`: an ordered list of distinct element names.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Universe {
    labels: Vec<String>,
}

impl Universe {
    pub fn new<I, S>(labels: I) -> Result<Self, SetError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() || labels.len() > MAX_UNIVERSE {
            return Err(SetError::BadUniverseSize(labels.len()));
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(SetError::DuplicateLabel(l.clone()));
            }
        }
        Ok(Universe { labels })
    }

    /// A universe labelled `a`, `b`, ... with `n` points.
    pub fn alphabetic(n: usize) -> Result<Self, SetError> {
        if n == 0 || n > MAX_UNIVERSE {
            return Err(SetError::BadUniverseSize(n));
        }
        Universe::new((0..n).map(|i| ((b'a' + i as u8) as char).to_string()))
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == name)
    }

    /// The full subset `X`.
    pub fn full(&self) -> Subset {
        Subset((1u32 << self.n()) - 1)
    }

    pub fn empty(&self) -> Subset {
        Subset(0)
    }

    /// Number of subsets, `2^n`.
    pub fn subset_count(&self) -> u32 {
        1 << self.n()
    }

    /// All subsets in ascending mask order.
    pub fn subsets(&self) -> impl Iterator<Item = Subset> {
        (0..self.subset_count()).map(Subset)
    }

    /// Singletons `{x}` in label order.
    pub fn points(&self) -> impl Iterator<Item = Subset> {
        (0..self.n()).map(|i| Subset(1 << i))
    }

    pub fn singleton(&self, i: usize) -> Subset {
        debug_assert!(i < self.n());
        Subset(1 << i)
    }

    pub fn complement(&self, s: Subset) -> Subset {
        Subset(self.full().0 & !s.0)
    }

    /// Translate label names to a subset. Duplicate or unknown names are
    /// input errors.
    pub fn decode(&self, names: &[String]) -> Result<Subset, SetError> {
        let mut mask = 0u32;
        for name in names {
            let i = self
                .index_of(name)
                .ok_or_else(|| SetError::UnknownLabel(name.clone()))?;
            if mask >> i & 1 == 1 {
                return Err(SetError::DuplicateLabel(name.clone()));
            }
            mask |= 1 << i;
        }
        Ok(Subset(mask))
    }

    /// Translate a subset back to its sorted label list.
    pub fn encode(&self, s: Subset) -> Vec<String> {
        (0..self.n())
            .filter(|i| s.contains_point(*i))
            .map(|i| self.labels[i].clone())
            .collect()
    }

    /// Render a subset as `{a,b}`.
    pub fn set_to_string(&self, s: Subset) -> String {
        format!("{{{}}}", self.encode(s).join(","))
    }

    /// Render a family as `{{},{a},...}` in ascending mask order.
    pub fn family_to_string(&self, f: SubsetFamily) -> String {
        let parts: Vec<String> = self
            .subsets()
            .filter(|s| f.contains(*s))
            .map(|s| self.set_to_string(s))
            .collect();
        format!("{{{}}}", parts.join(","))
    }
}

/// A subset of some universe, as a little-endian bit mask over label indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Subset(pub u32);

impl Subset {
    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn inter(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn minus(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn contains_point(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    /// Proper and improper subsets of `self`, ascending by mask.
    pub fn subsets(self) -> impl Iterator<Item = Subset> {
        let of = self.0;
        (0..=of).filter(move |m| m & !of == 0).map(Subset)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#b}", self.0)
    }
}

/// A set of subsets, as a `2^n`-bit membership table indexed by subset mask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SubsetFamily(pub u32);

impl SubsetFamily {
    pub fn empty() -> Self {
        SubsetFamily(0)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn contains(self, s: Subset) -> bool {
        self.0 >> s.0 & 1 == 1
    }

    pub fn insert(&mut self, s: Subset) {
        self.0 |= 1 << s.0;
    }

    pub fn remove(&mut self, s: Subset) {
        self.0 &= !(1 << s.0);
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Members in ascending mask order.
    pub fn iter(self, u: &Universe) -> impl Iterator<Item = Subset> {
        let bits = self.0;
        u.subsets().filter(move |s| bits >> s.0 & 1 == 1)
    }

    pub fn from_subsets<I: IntoIterator<Item = Subset>>(subsets: I) -> Self {
        let mut f = SubsetFamily::empty();
        for s in subsets {
            f.insert(s);
        }
        f
    }

    /// The power set `2^X`.
    pub fn power_set(u: &Universe) -> Self {
        let count = u.subset_count();
        if count == 32 {
            SubsetFamily(u32::MAX)
        } else {
            SubsetFamily((1u32 << count) - 1)
        }
    }
}

/// A single named value in a witness: a subset, a point, or a free-form note
/// (e.g. the identifier of the violated sub-property).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessValue {
    Set(Subset),
    Element(usize),
    Note(String),
}

/// A named assignment that exhibits the violation of an axiom or theorem.
/// Entries keep insertion order; names are unique.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Witness {
    pub items: Vec<(String, WitnessValue)>,
}

impl Witness {
    pub fn new() -> Self {
        Witness { items: Vec::new() }
    }

    pub fn set(mut self, name: &str, s: Subset) -> Self {
        self.items.push((name.to_string(), WitnessValue::Set(s)));
        self
    }

    pub fn element(mut self, name: &str, i: usize) -> Self {
        self.items
            .push((name.to_string(), WitnessValue::Element(i)));
        self
    }

    pub fn note(mut self, name: &str, text: &str) -> Self {
        self.items
            .push((name.to_string(), WitnessValue::Note(text.to_string())));
        self
    }

    pub fn get_set(&self, name: &str) -> Option<Subset> {
        self.items.iter().find_map(|(n, v)| match v {
            WitnessValue::Set(s) if n == name => Some(*s),
            _ => None,
        })
    }

    pub fn render(&self, u: &Universe) -> String {
        self.items
            .iter()
            .map(|(n, v)| match v {
                WitnessValue::Set(s) => format!("{}={}", n, u.set_to_string(*s)),
                WitnessValue::Element(i) => format!("{}={}", n, u.label(*i)),
                WitnessValue::Note(t) => format!("{}={}", n, t),
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Outcome of a structural check: pass, or fail with the violated condition
/// and a re-checkable witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail { condition: String, witness: Witness },
}

impl Verdict {
    pub fn fail(condition: &str, witness: Witness) -> Self {
        Verdict::Fail {
            condition: condition.to_string(),
            witness,
        }
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn render(&self, u: &Universe) -> String {
        match self {
            Verdict::Pass => "PASS".to_string(),
            Verdict::Fail { condition, witness } => {
                format!("FAIL {} [{}]", condition, witness.render(u))
            }
        }
    }
}

/// Checks that every subset of every member is itself a member.
pub fn is_downward_closed(u: &Universe, f: SubsetFamily) -> Verdict {
    for a in f.iter(u) {
        for b in a.subsets() {
            if !f.contains(b) {
                return Verdict::fail(
                    "downward closure",
                    Witness::new().set("A", a).set("B", b),
                );
            }
        }
    }
    Verdict::Pass
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc() -> Universe {
        Universe::alphabetic(3).unwrap()
    }

    #[test]
    fn complement_examples() {
        let u = abc();
        let b = u.decode(&["b".into()]).unwrap();
        assert_eq!(u.complement(b), u.decode(&["a".into(), "c".into()]).unwrap());
        assert_eq!(u.complement(u.empty()), u.full());
        assert_eq!(u.complement(u.full()), u.empty());
    }

    #[test]
    fn encode_decode() {
        let u = abc();
        let bc = u.decode(&["b".into(), "c".into()]).unwrap();
        assert_eq!(bc.mask(), 0b110);
        assert_eq!(u.decode(&[]).unwrap().mask(), 0);
        assert!(matches!(
            u.decode(&["a".into(), "a".into()]),
            Err(SetError::DuplicateLabel(_))
        ));
        assert!(matches!(
            u.decode(&["z".into()]),
            Err(SetError::UnknownLabel(_))
        ));
        for s in u.subsets() {
            assert_eq!(u.decode(&u.encode(s)).unwrap(), s);
        }
    }

    #[test]
    fn downward_closed_examples() {
        let u = abc();
        // {∅,{b},{c},{b,c}}
        let f = SubsetFamily::from_subsets([Subset(0), Subset(2), Subset(4), Subset(6)]);
        assert!(is_downward_closed(&u, f).is_pass());
        // {{a,b}} is missing its subsets
        let g = SubsetFamily::from_subsets([Subset(0b11)]);
        match is_downward_closed(&u, g) {
            Verdict::Fail { witness, .. } => {
                assert_eq!(witness.get_set("A"), Some(Subset(0b11)));
                assert_eq!(witness.get_set("B"), Some(Subset(0)));
            }
            _ => panic!("expected failure"),
        }
        assert!(is_downward_closed(&u, SubsetFamily::empty()).is_pass());
    }

    #[test]
    fn universe_validation() {
        assert!(Universe::new(Vec::<String>::new()).is_err());
        assert!(Universe::new(vec!["a", "a"]).is_err());
        assert!(Universe::alphabetic(6).is_err());
        assert!(Universe::alphabetic(5).is_ok());
    }

    #[test]
    fn complement_involution_and_de_morgan_exhaustive() {
        for n in 1..=4 {
            let u = Universe::alphabetic(n).unwrap();
            for a in u.subsets() {
                assert_eq!(u.complement(u.complement(a)), a);
                for b in u.subsets() {
                    assert_eq!(
                        u.complement(a.union(b)),
                        u.complement(a).inter(u.complement(b))
                    );
                    assert_eq!(
                        u.complement(a.inter(b)),
                        u.complement(a).union(u.complement(b))
                    );
                }
            }
        }
    }
}
