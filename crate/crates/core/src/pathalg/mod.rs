//! Bound quiver algebras `kQ/I`: quivers, admissible relations, normal
//! forms, the path basis with its multiplication, and the opposite algebra.
//!
//! Paths are written in product notation, `p*q` meaning "first `q`, then
//! `p`", so `g*b*a` along `1 -a-> 2 -b-> 3 -g-> 1` is the path that starts
//! with `a`. Internally paths are stored in traversal order.

mod groebner;
pub mod parse;
mod path;

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::{Arc, OnceLock, Weak};

use crate::error::{Error, Result};
use crate::exactlin::{Elem, FieldSpec, Mat};

pub use groebner::Rule;
pub use parse::{parse_algebra, parse_algebra_with_cap, AlgebraFile, ModuleDecl, ModuleExpr};
pub use path::{Path, PathElem};

/// Default bound on path lengths during completion and basis enumeration.
pub const DEFAULT_PATH_CAP: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Self> {
        for (i, v) in vertices.iter().enumerate() {
            if vertices[..i].contains(v) {
                return Err(Error::Quiver(format!("duplicate vertex label {v}")));
            }
        }
        for (i, a) in arrows.iter().enumerate() {
            if arrows[..i].iter().any(|b| b.name == a.name) {
                return Err(Error::Quiver(format!("duplicate arrow name {}", a.name)));
            }
            if a.source >= vertices.len() || a.target >= vertices.len() {
                return Err(Error::Quiver(format!("arrow {} has an undeclared endpoint", a.name)));
            }
        }
        Ok(Quiver { vertices, arrows })
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    /// Path from arrow names in product notation (`["g","b","a"]` for `g*b*a`).
    pub fn path_from_product(&self, names: &[&str]) -> Result<Path> {
        let mut arrows = Vec::with_capacity(names.len());
        for n in names.iter().rev() {
            arrows.push(
                self.arrow_index(n).ok_or_else(|| Error::IllFormedPath(format!("unknown arrow {n}")))?,
            );
        }
        self.path_from_arrows(arrows)
    }

    pub fn path_from_arrows(&self, arrows: Vec<usize>) -> Result<Path> {
        let Some(&first) = arrows.first() else {
            return Err(Error::IllFormedPath("empty arrow sequence".into()));
        };
        for w in arrows.windows(2) {
            if self.arrows[w[0]].target != self.arrows[w[1]].source {
                return Err(Error::IllFormedPath(format!(
                    "{} cannot follow {}",
                    self.arrows[w[1]].name, self.arrows[w[0]].name
                )));
            }
        }
        let last = *arrows.last().unwrap();
        Ok(Path { source: self.arrows[first].source, target: self.arrows[last].target, arrows })
    }

    /// Product-notation rendering: `g*b*a`, or `e1` for a trivial path.
    pub fn path_name(&self, p: &Path) -> String {
        if p.is_trivial() {
            return format!("e{}", self.vertices[p.source]);
        }
        p.arrows.iter().rev().map(|&a| self.arrows[a].name.as_str()).collect::<Vec<_>>().join("*")
    }

    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow { name: a.name.clone(), source: a.target, target: a.source })
                .collect(),
        }
    }
}

/// A relation `sum c_k p_k = 0` with parallel paths of length at least 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(Elem, Path)>,
}

impl Relation {
    pub fn to_elem(&self, field: FieldSpec) -> PathElem {
        let mut e = PathElem::zero();
        for (c, p) in &self.terms {
            e.add_term(field, p.clone(), c);
        }
        e
    }
}

/// A finite dimensional bound quiver algebra with its normal-word basis and
/// structure constants.
pub struct Algebra {
    field: FieldSpec,
    quiver: Quiver,
    relations: Vec<Relation>,
    rules: Vec<Rule>,
    basis: Vec<Path>,
    index: HashMap<Path, usize>,
    /// `mult[i][j]` = product basis[i] * basis[j] ("first j, then i").
    mult: Vec<Vec<Vec<(usize, Elem)>>>,
    loewy_length: usize,
    path_cap: usize,
    op_cache: OnceLock<Arc<Algebra>>,
    op_origin: OnceLock<Weak<Algebra>>,
}

impl std::fmt::Debug for Algebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Algebra")
            .field("field", &self.field)
            .field("vertices", &self.quiver.vertices)
            .field("arrows", &self.quiver.arrows.len())
            .field("dim", &self.basis.len())
            .finish()
    }
}

impl Algebra {
    pub fn new(field: FieldSpec, quiver: Quiver, relations: Vec<Relation>, path_cap: usize) -> Result<Arc<Self>> {
        for (i, r) in relations.iter().enumerate() {
            let Some((_, first)) = r.terms.first() else {
                return Err(Error::NotAdmissible(format!("relation {} has no terms", i + 1)));
            };
            for (c, p) in &r.terms {
                if !field.owns(c) {
                    return Err(Error::InvalidField(format!("coefficient {c} not in {field}")));
                }
                if p.len() < 2 {
                    return Err(Error::NotAdmissible(format!(
                        "relation {} contains the path {} of length {} < 2",
                        i + 1,
                        quiver.path_name(p),
                        p.len()
                    )));
                }
                if p.source != first.source || p.target != first.target {
                    return Err(Error::NonParallel {
                        index: i + 1,
                        msg: format!("{} and {} have different endpoints", quiver.path_name(first), quiver.path_name(p)),
                    });
                }
            }
        }
        let gens: Vec<PathElem> = relations.iter().map(|r| r.to_elem(field)).collect();
        let rules = groebner::complete(field, &gens, path_cap)?;
        let basis = normal_words(&quiver, &rules, path_cap)?;
        let index: HashMap<Path, usize> = basis.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mut alg = Algebra {
            field,
            quiver,
            relations,
            rules,
            basis,
            index,
            mult: Vec::new(),
            loewy_length: 0,
            path_cap,
            op_cache: OnceLock::new(),
            op_origin: OnceLock::new(),
        };
        alg.mult = alg.build_mult();
        alg.loewy_length = alg.radical_nilpotency()?;
        Ok(Arc::new(alg))
    }

    fn build_mult(&self) -> Vec<Vec<Vec<(usize, Elem)>>> {
        let n = self.basis.len();
        let mut m = vec![vec![Vec::new(); n]; n];
        for (i, p) in self.basis.iter().enumerate() {
            for (j, q) in self.basis.iter().enumerate() {
                if let Some(pq) = q.then(p) {
                    let nf = groebner::reduce(self.field, &self.rules, &PathElem::monomial(self.field, pq));
                    m[i][j] = nf.terms.iter().map(|(w, c)| (self.index[w], c.clone())).collect();
                }
            }
        }
        m
    }

    /// Smallest `k` with `J^k = 0`, checked up to the path cap.
    fn radical_nilpotency(&self) -> Result<usize> {
        let n = self.basis.len();
        let f = self.field;
        let arrow_vecs: Vec<Vec<Elem>> = (0..self.quiver.arrows.len())
            .map(|a| {
                let p = Path {
                    source: self.quiver.arrows[a].source,
                    target: self.quiver.arrows[a].target,
                    arrows: vec![a],
                };
                self.vector_of(&self.normal_form_path(&p))
            })
            .collect();
        let mut current = arrow_vecs.clone();
        let mut k = 1;
        loop {
            let span = Mat::from_columns(f, n, &current).column_space();
            if span.cols() == 0 {
                return Ok(k);
            }
            if k > self.path_cap {
                return Err(Error::NotAdmissible(format!(
                    "the arrow ideal is not nilpotent within path length {}",
                    self.path_cap
                )));
            }
            let mut next = Vec::new();
            for c in 0..span.cols() {
                let v = span.column(c);
                for a in &arrow_vecs {
                    next.push(self.mul_vec(a, &v));
                }
            }
            current = next;
            k += 1;
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    /// Reduced Gröbner basis of the relation ideal.
    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.quiver.vertices.len()
    }

    /// Nilpotency index of the radical.
    pub fn loewy_length(&self) -> usize {
        self.loewy_length
    }

    pub fn path_cap(&self) -> usize {
        self.path_cap
    }

    pub fn basis_index(&self, p: &Path) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Basis indices of normal words starting at `source` and ending at `target`.
    pub fn words_between(&self, source: usize, target: usize) -> Vec<usize> {
        (0..self.basis.len())
            .filter(|&i| self.basis[i].source == source && self.basis[i].target == target)
            .collect()
    }

    pub fn normal_form(&self, x: &PathElem) -> Result<PathElem> {
        for p in x.terms.keys() {
            self.check_path(p)?;
        }
        Ok(groebner::reduce(self.field, &self.rules, x))
    }

    fn normal_form_path(&self, p: &Path) -> PathElem {
        groebner::reduce(self.field, &self.rules, &PathElem::monomial(self.field, p.clone()))
    }

    fn check_path(&self, p: &Path) -> Result<()> {
        let q = &self.quiver;
        if p.source >= q.num_vertices() || p.target >= q.num_vertices() {
            return Err(Error::IllFormedPath("vertex out of range".into()));
        }
        if p.is_trivial() {
            if p.source != p.target {
                return Err(Error::IllFormedPath("trivial path with distinct endpoints".into()));
            }
            return Ok(());
        }
        if p.arrows.iter().any(|&a| a >= q.arrows.len()) {
            return Err(Error::IllFormedPath("arrow out of range".into()));
        }
        let expect = q.path_from_arrows(p.arrows.clone())?;
        if expect.source != p.source || expect.target != p.target {
            return Err(Error::IllFormedPath("endpoints do not match the arrows".into()));
        }
        Ok(())
    }

    /// Coordinates of a normal-form element in the path basis.
    pub fn vector_of(&self, x: &PathElem) -> Vec<Elem> {
        let mut v = vec![self.field.zero(); self.basis.len()];
        for (p, c) in &x.terms {
            let i = self.index.get(p).copied().expect("element is not in normal form");
            v[i] = c.clone();
        }
        v
    }

    /// Product of two coordinate vectors, `x * y` ("first y, then x").
    pub fn mul_vec(&self, x: &[Elem], y: &[Elem]) -> Vec<Elem> {
        let f = self.field;
        let mut out = vec![f.zero(); self.basis.len()];
        for (i, a) in x.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if f.is_zero(b) {
                    continue;
                }
                let ab = f.mul(a, b);
                for (k, c) in &self.mult[i][j] {
                    f.add_mul_assign(&mut out[*k], &ab, c);
                }
            }
        }
        out
    }

    /// Product of basis elements `i * j` as sparse coordinates.
    pub fn mul_basis(&self, i: usize, j: usize) -> &[(usize, Elem)] {
        &self.mult[i][j]
    }

    pub fn unit_vector(&self, i: usize) -> Vec<Elem> {
        let mut v = vec![self.field.zero(); self.basis.len()];
        v[i] = self.field.one();
        v
    }

    /// Index of the trivial path at vertex `v`.
    pub fn idempotent(&self, v: usize) -> usize {
        self.index[&Path::trivial(v)]
    }

    /// Basis index of the single-arrow path.
    pub fn arrow_basis_index(&self, a: usize) -> Option<usize> {
        let ar = &self.quiver.arrows[a];
        self.index.get(&Path { source: ar.source, target: ar.target, arrows: vec![a] }).copied()
    }

    /// True when the two handles denote the same algebra.
    pub fn same(&self, other: &Algebra) -> bool {
        std::ptr::eq(self, other)
            || (self.field == other.field
                && self.quiver == other.quiver
                && self.rules.len() == other.rules.len()
                && self.rules.iter().zip(&other.rules).all(|(a, b)| a.elem == b.elem))
    }

    /// The opposite algebra. Taking the opposite twice returns the original handle.
    pub fn opposite(self: &Arc<Self>) -> Arc<Algebra> {
        if let Some(orig) = self.op_origin.get().and_then(|w| w.upgrade()) {
            return orig;
        }
        self.op_cache
            .get_or_init(|| {
                let quiver = self.quiver.opposite();
                let relations = self
                    .relations
                    .iter()
                    .map(|r| Relation { terms: r.terms.iter().map(|(c, p)| (c.clone(), p.reversed())).collect() })
                    .collect();
                let op = Algebra::new(self.field, quiver, relations, self.path_cap)
                    .expect("opposite of an admissible presentation is admissible");
                let _ = op.op_origin.set(Arc::downgrade(self));
                op
            })
            .clone()
    }

    /// True when every vertex has at most one incoming and one outgoing arrow
    /// and the ideal is generated by paths.
    pub fn is_nakayama(&self) -> bool {
        let n = self.num_vertices();
        let mut inc = vec![0; n];
        let mut out = vec![0; n];
        for a in &self.quiver.arrows {
            inc[a.target] += 1;
            out[a.source] += 1;
        }
        inc.iter().all(|&c| c <= 1)
            && out.iter().all(|&c| c <= 1)
            && self.rules.iter().all(|r| r.elem.terms.len() == 1)
    }

    /// Serialize in the algebra file format.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "field {}", self.field);
        let _ = writeln!(s, "vertices {}", self.quiver.vertices.join(" "));
        for a in &self.quiver.arrows {
            let _ = writeln!(
                s,
                "arrow {} : {} -> {}",
                a.name, self.quiver.vertices[a.source], self.quiver.vertices[a.target]
            );
        }
        for r in &self.relations {
            let _ = writeln!(s, "relation {}", self.relation_text(r));
        }
        s
    }

    /// Relation in product notation, as written in algebra files.
    pub fn relation_text(&self, r: &Relation) -> String {
        let mut s = String::new();
        for (k, (c, p)) in r.terms.iter().enumerate() {
            let (neg, abs) = match self.field {
                FieldSpec::Rationals => c.sign_split(),
                FieldSpec::Prime(_) => (false, c.to_string()),
            };
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if abs != "1" {
                s.push_str(&abs);
                s.push('*');
            }
            s.push_str(&self.quiver.path_name(p));
        }
        s
    }
}

fn normal_words(quiver: &Quiver, rules: &[Rule], cap: usize) -> Result<Vec<Path>> {
    let mut out: Vec<Path> = (0..quiver.num_vertices()).map(Path::trivial).collect();
    let mut frontier = out.clone();
    let mut len = 0;
    while !frontier.is_empty() {
        len += 1;
        let mut next = Vec::new();
        for p in &frontier {
            for (ai, a) in quiver.arrows.iter().enumerate() {
                if a.source != p.target {
                    continue;
                }
                let mut arrows = p.arrows.clone();
                arrows.push(ai);
                let q = Path { source: p.source, target: a.target, arrows };
                let reducible = rules.iter().any(|r| q.arrows.ends_with(&r.tip.arrows));
                if !reducible {
                    next.push(q);
                }
            }
        }
        if !next.is_empty() && len > cap {
            return Err(Error::BasisCap { cap });
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out.sort();
    Ok(out)
}
