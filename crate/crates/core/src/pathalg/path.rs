use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::exactlin::{Elem, FieldSpec};

/// A path in the quiver, stored in traversal order: `arrows[0]` is applied
/// first. The trivial path at a vertex has no arrows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path { source: v, target: v, arrows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `self` followed by `then` (in product notation: `then * self`).
    pub fn then(&self, then: &Path) -> Option<Path> {
        if self.target != then.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&then.arrows);
        Some(Path { source: self.source, target: then.target, arrows })
    }

    /// Position of the first occurrence of `pat` as a contiguous subpath.
    pub fn find(&self, pat: &[usize]) -> Option<usize> {
        if pat.is_empty() || pat.len() > self.arrows.len() {
            return None;
        }
        self.arrows.windows(pat.len()).position(|w| w == pat)
    }

    pub fn reversed(&self) -> Path {
        let mut arrows = self.arrows.clone();
        arrows.reverse();
        Path { source: self.target, target: self.source, arrows }
    }
}

/// Length-lexicographic order, arrows compared by declaration index.
impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.arrows
            .len()
            .cmp(&other.arrows.len())
            .then_with(|| self.arrows.cmp(&other.arrows))
            .then_with(|| self.source.cmp(&other.source))
            .then_with(|| self.target.cmp(&other.target))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A linear combination of paths, keyed in monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PathElem {
    pub terms: BTreeMap<Path, Elem>,
}

impl PathElem {
    pub fn zero() -> Self {
        PathElem::default()
    }

    pub fn monomial(field: FieldSpec, p: Path) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(p, field.one());
        PathElem { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, field: FieldSpec, p: Path, c: &Elem) {
        if field.is_zero(c) {
            return;
        }
        match self.terms.get_mut(&p) {
            Some(v) => {
                *v = field.add(v, c);
                if field.is_zero(v) {
                    self.terms.remove(&p);
                }
            }
            None => {
                self.terms.insert(p, c.clone());
            }
        }
    }

    pub fn add(&self, field: FieldSpec, other: &PathElem) -> PathElem {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(field, p.clone(), c);
        }
        out
    }

    pub fn scale(&self, field: FieldSpec, s: &Elem) -> PathElem {
        if field.is_zero(s) {
            return PathElem::zero();
        }
        PathElem { terms: self.terms.iter().map(|(p, c)| (p.clone(), field.mul(c, s))).collect() }
    }

    pub fn leading(&self) -> Option<(&Path, &Elem)> {
        self.terms.iter().next_back()
    }

    pub fn monic(&self, field: FieldSpec) -> PathElem {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => self.scale(field, &field.inv(c)),
        }
    }

    /// Multiply every term by fixed paths before and after (traversal order).
    pub fn wrap(&self, before: &[usize], after: &[usize], source: usize, target: usize) -> PathElem {
        let terms = self
            .terms
            .iter()
            .map(|(p, c)| {
                let mut arrows = before.to_vec();
                arrows.extend_from_slice(&p.arrows);
                arrows.extend_from_slice(after);
                (Path { source, target, arrows }, c.clone())
            })
            .collect();
        PathElem { terms }
    }
}
