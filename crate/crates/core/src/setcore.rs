//! Strengthening of equivalence relations over the subsets of a finite universe.
//!
//! Subsets are bitmasks over the universe's element order. A relation is
//! stored as a map from each subset to the smallest subset of its class, so
//! two relations are equal exactly when their maps are.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;
use thiserror::Error;

/// Largest universe accepted; all `2^n` subsets are enumerated.
pub const MAX_ELEMENTS: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SetError {
    #[error("universe has {0} elements; at most {MAX_ELEMENTS} are supported")]
    TooManyElements(usize),
    #[error("element {0:?} listed twice")]
    DuplicateElement(String),
    #[error("element {0:?} is not in the universe")]
    UnknownElement(String),
    #[error("subset mask {0:#x} lies outside the universe")]
    SubsetOutOfRange(u32),
    #[error("relations are over different universes")]
    MismatchedUniverse,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct FiniteUniverse {
    elements: Vec<String>,
}

impl FiniteUniverse {
    pub fn new<S: Into<String>>(elements: impl IntoIterator<Item = S>) -> Result<Self, SetError> {
        let elements: Vec<String> = elements.into_iter().map(Into::into).collect();
        if elements.len() > MAX_ELEMENTS {
            return Err(SetError::TooManyElements(elements.len()));
        }
        let mut seen = BTreeSet::new();
        for e in &elements {
            if !seen.insert(e) {
                return Err(SetError::DuplicateElement(e.clone()));
            }
        }
        Ok(FiniteUniverse { elements })
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Number of subsets, `2^n`.
    pub fn subset_count(&self) -> usize {
        1 << self.elements.len()
    }

    pub fn full(&self) -> u32 {
        (self.subset_count() - 1) as u32
    }

    pub fn mask_of<S: AsRef<str>>(&self, subset: impl IntoIterator<Item = S>) -> Result<u32, SetError> {
        subset.into_iter().try_fold(0u32, |m, s| {
            let s = s.as_ref();
            self.elements
                .iter()
                .position(|e| e == s)
                .map(|i| m | 1 << i)
                .ok_or_else(|| SetError::UnknownElement(s.to_string()))
        })
    }

    pub fn labels_of(&self, mask: u32) -> BTreeSet<String> {
        self.elements
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, e)| e.clone())
            .collect()
    }

    fn check(&self, mask: u32) -> Result<u32, SetError> {
        if mask & !self.full() != 0 {
            Err(SetError::SubsetOutOfRange(mask))
        } else {
            Ok(mask)
        }
    }
}

/// A property as an explicit family of member subsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetProperty {
    universe: FiniteUniverse,
    member: Vec<bool>,
}

impl SubsetProperty {
    pub fn new(
        universe: FiniteUniverse,
        members: impl IntoIterator<Item = u32>,
    ) -> Result<Self, SetError> {
        let mut member = vec![false; universe.subset_count()];
        for m in members {
            member[universe.check(m)? as usize] = true;
        }
        Ok(SubsetProperty { universe, member })
    }

    pub fn from_predicate(universe: FiniteUniverse, pred: impl Fn(u32) -> bool) -> Self {
        let member = (0..universe.subset_count() as u32).map(pred).collect();
        SubsetProperty { universe, member }
    }

    pub fn universe(&self) -> &FiniteUniverse {
        &self.universe
    }

    pub fn contains(&self, subset: u32) -> bool {
        self.member[subset as usize]
    }

    pub fn members(&self) -> impl Iterator<Item = u32> + '_ {
        (0..self.member.len() as u32).filter(|&s| self.member[s as usize])
    }
}

/// An equivalence relation on all subsets of a universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationTable {
    universe: FiniteUniverse,
    rep: Vec<u32>,
}

impl RelationTable {
    /// Relates two subsets iff `key` agrees on them.
    pub fn from_key<K: Eq + std::hash::Hash>(universe: FiniteUniverse, key: impl Fn(u32) -> K) -> Self {
        let mut first: HashMap<K, u32> = HashMap::new();
        let rep = (0..universe.subset_count() as u32)
            .map(|s| *first.entry(key(s)).or_insert(s))
            .collect();
        RelationTable { universe, rep }
    }

    pub fn total(universe: FiniteUniverse) -> Self {
        RelationTable::from_key(universe, |_| ())
    }

    pub fn identity(universe: FiniteUniverse) -> Self {
        RelationTable::from_key(universe, |s| s)
    }

    pub fn universe(&self) -> &FiniteUniverse {
        &self.universe
    }

    /// Smallest subset in the class of `s`.
    pub fn representative(&self, s: u32) -> u32 {
        self.rep[s as usize]
    }

    pub fn related(&self, a: u32, b: u32) -> bool {
        self.rep[a as usize] == self.rep[b as usize]
    }

    /// Classes in order of their smallest member, members ascending.
    pub fn classes(&self) -> Vec<Vec<u32>> {
        let mut out: Vec<Vec<u32>> = Vec::new();
        let mut slot: HashMap<u32, usize> = HashMap::new();
        for (s, &r) in self.rep.iter().enumerate() {
            let i = *slot.entry(r).or_insert_with(|| {
                out.push(Vec::new());
                out.len() - 1
            });
            out[i].push(s as u32);
        }
        out
    }

    /// Intersection of two relations.
    pub fn meet(&self, other: &RelationTable) -> Result<RelationTable, SetError> {
        if self.universe != other.universe {
            return Err(SetError::MismatchedUniverse);
        }
        Ok(RelationTable::from_key(self.universe.clone(), |s| {
            (self.rep[s as usize], other.rep[s as usize])
        }))
    }

    /// Whether every pair related here is related in `other`.
    pub fn is_subrelation_of(&self, other: &RelationTable) -> bool {
        self.universe == other.universe
            && (0..self.rep.len()).all(|s| other.rep[s] == other.rep[self.rep[s] as usize])
    }
}

/// The two-class relation "both in `prop` or both outside it".
pub fn equiv_from_property(prop: &SubsetProperty) -> RelationTable {
    RelationTable::from_key(prop.universe.clone(), |s| prop.contains(s))
}

/// `G ~ H` iff `G ∪ F` and `H ∪ F` are related for every subset `F`.
pub fn bounded_strengthen(rel: &RelationTable) -> RelationTable {
    let n = rel.universe.subset_count() as u32;
    RelationTable::from_key(rel.universe.clone(), |g| {
        (0..n).map(|f| rel.rep[(g | f) as usize]).collect::<Vec<u32>>()
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum ThresholdForm {
    /// `{S : S ∩ X ≠ ∅}`
    Intersecting(BTreeSet<String>),
    /// `{S : S ⊆ X}`
    Subset(BTreeSet<String>),
    Neither,
}

/// Recognizes the two property shapes whose induced relation is already strong.
///
/// In both shapes `X` is the set of elements whose singleton has the property.
pub fn classify_threshold_form(prop: &SubsetProperty) -> ThresholdForm {
    let u = &prop.universe;
    let x = (0..u.len()).filter(|&i| prop.contains(1 << i)).fold(0u32, |m, i| m | 1 << i);
    let all = 0..u.subset_count() as u32;
    if all.clone().all(|s| prop.contains(s) == (s & x != 0)) {
        ThresholdForm::Intersecting(u.labels_of(x))
    } else if all.clone().all(|s| prop.contains(s) == (s & !x == 0)) {
        ThresholdForm::Subset(u.labels_of(x))
    } else {
        ThresholdForm::Neither
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc(n: usize) -> FiniteUniverse {
        FiniteUniverse::new(["a", "b", "c", "d"].into_iter().take(n)).unwrap()
    }

    fn set(xs: &[&str]) -> BTreeSet<String> {
        xs.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn universe_validation() {
        assert_eq!(
            FiniteUniverse::new(["a", "a"]),
            Err(SetError::DuplicateElement("a".into()))
        );
        let many: Vec<String> = (0..17).map(|i| format!("e{i}")).collect();
        assert_eq!(FiniteUniverse::new(many), Err(SetError::TooManyElements(17)));
        let u = abc(2);
        assert_eq!(u.mask_of(["b"]), Ok(0b10));
        assert_eq!(u.mask_of(["z"]), Err(SetError::UnknownElement("z".into())));
        assert!(SubsetProperty::new(u, [0b100]).is_err());
    }

    #[test]
    fn relation_from_property() {
        let u = abc(2);
        let phi = SubsetProperty::new(u.clone(), [0b01, 0b11]).unwrap();
        assert_eq!(equiv_from_property(&phi).classes(), vec![vec![0, 0b10], vec![0b01, 0b11]]);

        let empty = SubsetProperty::new(abc(1), []).unwrap();
        assert_eq!(equiv_from_property(&empty).classes(), vec![vec![0, 1]]);

        let has_a = SubsetProperty::from_predicate(abc(3), |s| s & 1 != 0);
        let classes = equiv_from_property(&has_a).classes();
        assert_eq!(classes.len(), 2);
        assert!(classes.iter().all(|c| c.len() == 4));
    }

    #[test]
    fn strengthening_examples() {
        let total = RelationTable::total(abc(2));
        assert_eq!(bounded_strengthen(&total), total);

        let has_a = equiv_from_property(&SubsetProperty::from_predicate(abc(3), |s| s & 1 != 0));
        assert_eq!(bounded_strengthen(&has_a), has_a);

        let ab = equiv_from_property(&SubsetProperty::new(abc(2), [0b11]).unwrap());
        let s = bounded_strengthen(&ab);
        assert!(s.is_subrelation_of(&ab));
        assert_ne!(s, ab);
        // ∅ and {a} are related by the property but separated by F = {b}
        assert!(ab.related(0, 0b01));
        assert!(!s.related(0, 0b01));
    }

    #[test]
    fn threshold_forms() {
        let u = abc(3);
        let p = SubsetProperty::from_predicate(u.clone(), |s| s & 0b011 != 0);
        assert_eq!(classify_threshold_form(&p), ThresholdForm::Intersecting(set(&["a", "b"])));
        let q = SubsetProperty::from_predicate(abc(2), |s| s & !0b01 == 0);
        assert_eq!(classify_threshold_form(&q), ThresholdForm::Subset(set(&["a"])));
        let r = SubsetProperty::new(u, [0b011]).unwrap();
        assert_eq!(classify_threshold_form(&r), ThresholdForm::Neither);
    }

    #[test]
    fn meet_and_inclusion() {
        let u = abc(2);
        let a = RelationTable::from_key(u.clone(), |s| s & 1);
        let b = RelationTable::from_key(u.clone(), |s| s & 2);
        let m = a.meet(&b).unwrap();
        assert_eq!(m, RelationTable::identity(u.clone()));
        assert!(m.is_subrelation_of(&a));
        assert!(!a.is_subrelation_of(&b));
        assert!(a.is_subrelation_of(&RelationTable::total(u)));
    }
}
