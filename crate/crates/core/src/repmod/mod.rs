//! Finite-dimensional left modules as representations of a bound quiver.

mod decompose;
mod hom;
mod structure;

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlin::{Elem, FieldSpec, Mat};
use crate::pathalg::{parse::ModuleBody, Algebra, AlgebraFile, ModuleExpr, Path};

pub use decompose::{union_of_summands, DecompositionCert, Summand};
pub use structure::Hull;
pub use hom::HomSpace;

/// A representation: a vector space per vertex and a matrix per arrow,
/// `action[a]` of shape `dims[target] x dims[source]`.
#[derive(Clone)]
pub struct Rep {
    alg: Arc<Algebra>,
    dims: Vec<usize>,
    action: Arc<Vec<Mat>>,
}

/// A morphism of representations given by one matrix per vertex.
#[derive(Clone)]
pub struct RepMap {
    pub src: Rep,
    pub dst: Rep,
    pub comps: Vec<Mat>,
}

impl fmt::Debug for Rep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rep{:?}", self.dims)?;
        let q = self.alg.quiver();
        for (a, m) in self.action.iter().enumerate() {
            if !m.is_zero() {
                write!(f, " {}={:?}", q.arrows[a].name, m.to_strings())?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RepMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RepMap {:?} -> {:?}", self.src.dims, self.dst.dims)
    }
}

impl PartialEq for Rep {
    fn eq(&self, other: &Self) -> bool {
        self.alg.same(&other.alg) && self.dims == other.dims && self.action == other.action
    }
}

impl Eq for Rep {}

impl Rep {
    /// Validated construction from dimensions and arrow matrices.
    pub fn new(alg: &Arc<Algebra>, dims: Vec<usize>, action: Vec<Mat>) -> Result<Rep> {
        let q = alg.quiver();
        if dims.len() != q.num_vertices() {
            return Err(Error::Shape(format!("{} dimensions for {} vertices", dims.len(), q.num_vertices())));
        }
        if action.len() != q.arrows.len() {
            return Err(Error::Shape(format!("{} matrices for {} arrows", action.len(), q.arrows.len())));
        }
        for (a, m) in action.iter().enumerate() {
            let ar = &q.arrows[a];
            if m.rows() != dims[ar.target] || m.cols() != dims[ar.source] {
                return Err(Error::Shape(format!(
                    "arrow {} acts by a {}x{} matrix, expected {}x{}",
                    ar.name,
                    m.rows(),
                    m.cols(),
                    dims[ar.target],
                    dims[ar.source]
                )));
            }
            if m.field() != alg.field() {
                return Err(Error::FieldMismatch);
            }
        }
        let rep = Rep { alg: alg.clone(), dims, action: Arc::new(action) };
        for r in alg.relations() {
            let (_, first) = &r.terms[0];
            let mut sum = Mat::zeros(alg.field(), rep.dims[first.target], rep.dims[first.source]);
            for (c, p) in &r.terms {
                sum.add_scaled(c, &rep.path_action(p));
            }
            if !sum.is_zero() {
                return Err(Error::RelationViolated(alg.relation_text(r)));
            }
        }
        Ok(rep)
    }

    /// Construction without relation checks, for results of exact operations.
    pub(crate) fn trusted(alg: &Arc<Algebra>, dims: Vec<usize>, action: Vec<Mat>) -> Rep {
        debug_assert_eq!(action.len(), alg.quiver().arrows.len());
        Rep { alg: alg.clone(), dims, action: Arc::new(action) }
    }

    pub fn zero(alg: &Arc<Algebra>) -> Rep {
        let dims = vec![0; alg.num_vertices()];
        let f = alg.field();
        let action = alg.quiver().arrows.iter().map(|_| Mat::zeros(f, 0, 0)).collect();
        Rep::trusted(alg, dims, action)
    }

    pub fn simple(alg: &Arc<Algebra>, v: usize) -> Result<Rep> {
        check_vertex(alg, v)?;
        let mut dims = vec![0; alg.num_vertices()];
        dims[v] = 1;
        Ok(Rep::trusted(alg, dims.clone(), zero_action(alg, &dims)))
    }

    /// `A e_v`: basis the normal words starting at `v`.
    pub fn projective(alg: &Arc<Algebra>, v: usize) -> Result<Rep> {
        check_vertex(alg, v)?;
        let n = alg.num_vertices();
        let words: Vec<Vec<usize>> =
            (0..n).map(|t| alg.words_between(v, t)).collect();
        let dims: Vec<usize> = words.iter().map(Vec::len).collect();
        let f = alg.field();
        let q = alg.quiver();
        let mut action = Vec::with_capacity(q.arrows.len());
        for (ai, ar) in q.arrows.iter().enumerate() {
            let mut m = Mat::zeros(f, dims[ar.target], dims[ar.source]);
            let ab = alg.arrow_basis_index(ai).expect("arrows are normal words");
            for (col, &w) in words[ar.source].iter().enumerate() {
                for (k, c) in alg.mul_basis(ab, w) {
                    let row = words[ar.target].iter().position(|x| x == k).expect("product stays in A e_v");
                    m.set(row, col, c.clone());
                }
            }
            action.push(m);
        }
        Ok(Rep::trusted(alg, dims, action))
    }

    /// `D(e_v A)`: at vertex `u` the dual of the normal words from `u` to `v`.
    pub fn injective(alg: &Arc<Algebra>, v: usize) -> Result<Rep> {
        check_vertex(alg, v)?;
        let n = alg.num_vertices();
        let words: Vec<Vec<usize>> = (0..n).map(|s| alg.words_between(s, v)).collect();
        let dims: Vec<usize> = words.iter().map(Vec::len).collect();
        let f = alg.field();
        let q = alg.quiver();
        let mut action = Vec::with_capacity(q.arrows.len());
        for (ai, ar) in q.arrows.iter().enumerate() {
            // (a.phi)(w) = phi(w a) for w from target(a) to v
            let mut m = Mat::zeros(f, dims[ar.target], dims[ar.source]);
            let ab = alg.arrow_basis_index(ai).expect("arrows are normal words");
            for (row, &w) in words[ar.target].iter().enumerate() {
                for (k, c) in alg.mul_basis(w, ab) {
                    let col = words[ar.source].iter().position(|x| x == k).expect("product stays in e_v A");
                    m.set(row, col, c.clone());
                }
            }
            action.push(m);
        }
        Ok(Rep::trusted(alg, dims, action))
    }

    pub fn regular(alg: &Arc<Algebra>) -> Rep {
        let parts: Vec<Rep> =
            (0..alg.num_vertices()).map(|v| Rep::projective(alg, v).expect("vertex in range")).collect();
        Rep::direct_sum(alg, &parts).expect("same algebra")
    }

    pub fn dual_regular(alg: &Arc<Algebra>) -> Rep {
        let parts: Vec<Rep> =
            (0..alg.num_vertices()).map(|v| Rep::injective(alg, v).expect("vertex in range")).collect();
        Rep::direct_sum(alg, &parts).expect("same algebra")
    }

    /// Block-diagonal sum; the empty sum is the zero module.
    pub fn direct_sum(alg: &Arc<Algebra>, parts: &[Rep]) -> Result<Rep> {
        if parts.iter().any(|p| !p.alg.same(alg)) {
            return Err(Error::AlgebraMismatch);
        }
        let f = alg.field();
        let n = alg.num_vertices();
        let dims: Vec<usize> = (0..n).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
        let action = (0..alg.quiver().arrows.len())
            .map(|a| {
                let blocks: Vec<&Mat> = parts.iter().map(|p| &p.action[a]).collect();
                Mat::block_diag(&blocks, f)
            })
            .collect();
        Ok(Rep::trusted(alg, dims, action))
    }

    /// Direct sum with its canonical injections and projections.
    pub fn direct_sum_with_maps(alg: &Arc<Algebra>, parts: &[Rep]) -> Result<(Rep, Vec<RepMap>, Vec<RepMap>)> {
        let sum = Rep::direct_sum(alg, parts)?;
        let f = alg.field();
        let n = alg.num_vertices();
        let mut offs = vec![0usize; n];
        let mut inj = Vec::new();
        let mut proj = Vec::new();
        for p in parts {
            let mut ic = Vec::with_capacity(n);
            let mut pc = Vec::with_capacity(n);
            for v in 0..n {
                let mut i = Mat::zeros(f, sum.dims[v], p.dims[v]);
                let mut q = Mat::zeros(f, p.dims[v], sum.dims[v]);
                for k in 0..p.dims[v] {
                    i.set(offs[v] + k, k, f.one());
                    q.set(k, offs[v] + k, f.one());
                }
                ic.push(i);
                pc.push(q);
                offs[v] += p.dims[v];
            }
            inj.push(RepMap { src: p.clone(), dst: sum.clone(), comps: ic });
            proj.push(RepMap { src: sum.clone(), dst: p.clone(), comps: pc });
        }
        Ok((sum, inj, proj))
    }

    /// `k` copies of `self`.
    pub fn power(&self, k: usize) -> Rep {
        Rep::direct_sum(&self.alg, &vec![self.clone(); k]).expect("same algebra")
    }

    pub fn alg(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn field(&self) -> FieldSpec {
        self.alg.field()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn action(&self, arrow: usize) -> &Mat {
        &self.action[arrow]
    }

    pub fn actions(&self) -> &[Mat] {
        &self.action
    }

    /// Matrix of a path, applied in traversal order.
    pub fn path_action(&self, p: &Path) -> Mat {
        let mut m = Mat::identity(self.field(), self.dims[p.source]);
        for &a in &p.arrows {
            m = self.action[a].mul(&m);
        }
        m
    }

    /// Matrix by which an algebra element (coordinates in the path basis)
    /// acts, with block rows and columns ordered by vertex.
    pub fn element_action(&self, x: &[Elem]) -> Mat {
        let f = self.field();
        let offs = self.offsets();
        let total = self.dim();
        let mut out = Mat::zeros(f, total, total);
        for (i, c) in x.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            let p = &self.alg.basis()[i];
            let m = self.path_action(p).scale(c);
            let mut block = out.block(offs[p.target], self.dims[p.target], offs[p.source], self.dims[p.source]);
            block.add_scaled(&f.one(), &m);
            out.paste(offs[p.target], offs[p.source], &block);
        }
        out
    }

    /// Start of each vertex block in the total space.
    pub fn offsets(&self) -> Vec<usize> {
        let mut offs = Vec::with_capacity(self.dims.len());
        let mut acc = 0;
        for &d in &self.dims {
            offs.push(acc);
            acc += d;
        }
        offs
    }

    /// Deterministic byte key used for canonical ordering.
    pub fn sort_key(&self) -> (Vec<usize>, String) {
        let mut s = String::new();
        for m in self.action.iter() {
            for e in m.entries() {
                s.push_str(&e.to_string());
                s.push(',');
            }
            s.push(';');
        }
        (self.dims.clone(), s)
    }

    /// Module declaration text in the algebra file format.
    pub fn to_decl(&self, name: &str) -> String {
        let q = self.alg.quiver();
        let mut s = format!(
            "module {name} {{ dim {}",
            self.dims.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" ")
        );
        for (a, m) in self.action.iter().enumerate() {
            if m.is_zero() {
                continue;
            }
            let rows: Vec<String> = m.to_strings().into_iter().map(|r| format!("[{}]", r.join(","))).collect();
            s.push_str(&format!(" ; map {} = [{}]", q.arrows[a].name, rows.join(",")));
        }
        s.push_str(" }");
        s
    }
}

fn check_vertex(alg: &Algebra, v: usize) -> Result<()> {
    if v >= alg.num_vertices() {
        return Err(Error::UnknownVertex(v.to_string()));
    }
    Ok(())
}

fn zero_action(alg: &Algebra, dims: &[usize]) -> Vec<Mat> {
    let f = alg.field();
    alg.quiver().arrows.iter().map(|a| Mat::zeros(f, dims[a.target], dims[a.source])).collect()
}

/// Build every module declared in a parsed file, in declaration order.
pub fn file_modules(file: &AlgebraFile) -> Result<Vec<(String, Rep)>> {
    let alg = &file.algebra;
    let mut built: Vec<(String, Rep)> = Vec::new();
    for decl in &file.modules {
        let rep = match &decl.body {
            ModuleBody::Explicit { dims, maps } => {
                let mut action = zero_action(alg, dims);
                for (a, m) in maps {
                    action[*a] = m.clone();
                }
                Rep::new(alg, dims.clone(), action)?
            }
            ModuleBody::Expr(parts) => {
                let mut reps = Vec::new();
                for part in parts {
                    reps.push(match part {
                        ModuleExpr::Simple(v) => Rep::simple(alg, *v)?,
                        ModuleExpr::Projective(v) => Rep::projective(alg, *v)?,
                        ModuleExpr::Injective(v) => Rep::injective(alg, *v)?,
                        ModuleExpr::Regular => Rep::regular(alg),
                        ModuleExpr::Dual => Rep::dual_regular(alg),
                        ModuleExpr::Named(n) => built
                            .iter()
                            .find(|(m, _)| m == n)
                            .map(|(_, r)| r.clone())
                            .ok_or_else(|| Error::UnknownModule(n.clone()))?,
                    });
                }
                Rep::direct_sum(alg, &reps)?
            }
        };
        built.push((decl.name.clone(), rep));
    }
    Ok(built)
}

/// Look up a module by name: a declared module or one of `S(i)`, `P(i)`,
/// `I(i)`, `A`, `DA` with `i` a vertex label.
pub fn resolve_module(file: &AlgebraFile, name: &str) -> Result<Rep> {
    let alg = &file.algebra;
    let name = name.trim();
    if name.contains('+') {
        let parts = name.split('+').map(|p| resolve_module(file, p)).collect::<Result<Vec<_>>>()?;
        return Rep::direct_sum(alg, &parts);
    }
    if name == "A" {
        return Ok(Rep::regular(alg));
    }
    if name == "DA" {
        return Ok(Rep::dual_regular(alg));
    }
    for (prefix, ctor) in [
        ("S(", Rep::simple as fn(&Arc<Algebra>, usize) -> Result<Rep>),
        ("P(", Rep::projective),
        ("I(", Rep::injective),
    ] {
        if let Some(rest) = name.strip_prefix(prefix).and_then(|r| r.strip_suffix(')')) {
            let v = alg.quiver().vertex_index(rest.trim()).ok_or_else(|| Error::UnknownVertex(rest.to_string()))?;
            return ctor(alg, v);
        }
    }
    file_modules(file)?
        .into_iter()
        .find(|(n, _)| n == name)
        .map(|(_, r)| r)
        .ok_or_else(|| Error::UnknownModule(name.to_string()))
}

impl RepMap {
    pub fn new(src: &Rep, dst: &Rep, comps: Vec<Mat>) -> Result<RepMap> {
        if !src.alg.same(&dst.alg) {
            return Err(Error::AlgebraMismatch);
        }
        let n = src.dims.len();
        if comps.len() != n {
            return Err(Error::Shape(format!("{} components for {n} vertices", comps.len())));
        }
        for (v, c) in comps.iter().enumerate() {
            if c.rows() != dst.dims[v] || c.cols() != src.dims[v] {
                return Err(Error::Shape(format!("component at vertex {v} has the wrong shape")));
            }
        }
        let f = RepMap { src: src.clone(), dst: dst.clone(), comps };
        if !f.commutes() {
            return Err(Error::Precondition("components do not commute with the arrow actions".into()));
        }
        Ok(f)
    }

    pub fn commutes(&self) -> bool {
        self.src.alg.quiver().arrows.iter().enumerate().all(|(a, ar)| {
            self.comps[ar.target].mul(&self.src.action[a]) == self.dst.action[a].mul(&self.comps[ar.source])
        })
    }

    pub fn identity(x: &Rep) -> RepMap {
        let f = x.field();
        RepMap { src: x.clone(), dst: x.clone(), comps: x.dims.iter().map(|&d| Mat::identity(f, d)).collect() }
    }

    pub fn zero(src: &Rep, dst: &Rep) -> RepMap {
        let f = src.field();
        RepMap {
            src: src.clone(),
            dst: dst.clone(),
            comps: src.dims.iter().zip(&dst.dims).map(|(&s, &d)| Mat::zeros(f, d, s)).collect(),
        }
    }

    /// `self` after `first`.
    pub fn compose(&self, first: &RepMap) -> RepMap {
        debug_assert_eq!(self.src.dims, first.dst.dims);
        RepMap {
            src: first.src.clone(),
            dst: self.dst.clone(),
            comps: self.comps.iter().zip(&first.comps).map(|(g, f)| g.mul(f)).collect(),
        }
    }

    pub fn add(&self, other: &RepMap) -> RepMap {
        RepMap {
            src: self.src.clone(),
            dst: self.dst.clone(),
            comps: self.comps.iter().zip(&other.comps).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn scale(&self, s: &Elem) -> RepMap {
        RepMap { src: self.src.clone(), dst: self.dst.clone(), comps: self.comps.iter().map(|m| m.scale(s)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Mat::is_zero)
    }

    pub fn is_iso(&self) -> bool {
        self.comps.iter().all(Mat::is_invertible)
    }

    pub fn is_mono(&self) -> bool {
        self.comps.iter().all(|m| m.rank() == m.cols())
    }

    pub fn is_epi(&self) -> bool {
        self.comps.iter().all(|m| m.rank() == m.rows())
    }

    pub fn inverse(&self) -> Option<RepMap> {
        let comps = self.comps.iter().map(Mat::inverse).collect::<Option<Vec<_>>>()?;
        Some(RepMap { src: self.dst.clone(), dst: self.src.clone(), comps })
    }

    /// Coordinates of the components, vertex by vertex, row-major.
    pub fn flatten(&self) -> Vec<Elem> {
        self.comps.iter().flat_map(|m| m.entries().iter().cloned()).collect()
    }

    /// Block-diagonal total matrix.
    pub fn total(&self) -> Mat {
        let parts: Vec<&Mat> = self.comps.iter().collect();
        Mat::block_diag(&parts, self.src.field())
    }

    pub fn rank(&self) -> usize {
        self.comps.iter().map(Mat::rank).sum()
    }

    /// The map `src -> sum dst_k` with components `maps[k]`; all maps share a source.
    pub fn into_sum(src: &Rep, maps: &[RepMap]) -> Result<RepMap> {
        let alg = src.alg.clone();
        let targets: Vec<Rep> = maps.iter().map(|m| m.dst.clone()).collect();
        let sum = Rep::direct_sum(&alg, &targets)?;
        let f = alg.field();
        let comps = (0..src.dims.len())
            .map(|v| {
                let parts: Vec<&Mat> = maps.iter().map(|m| &m.comps[v]).collect();
                Mat::vstack(&parts, f, src.dims[v])
            })
            .collect();
        Ok(RepMap { src: src.clone(), dst: sum, comps })
    }

    /// The map `sum src_k -> dst` with components `maps[k]`; all maps share a target.
    pub fn from_sum(dst: &Rep, maps: &[RepMap]) -> Result<RepMap> {
        let alg = dst.alg.clone();
        let sources: Vec<Rep> = maps.iter().map(|m| m.src.clone()).collect();
        let sum = Rep::direct_sum(&alg, &sources)?;
        let f = alg.field();
        let comps = (0..dst.dims.len())
            .map(|v| {
                let parts: Vec<&Mat> = maps.iter().map(|m| &m.comps[v]).collect();
                Mat::hstack(&parts, f, dst.dims[v])
            })
            .collect();
        Ok(RepMap { src: sum, dst: dst.clone(), comps })
    }

    /// Block-diagonal sum of maps.
    pub fn direct_sum(maps: &[RepMap], alg: &Arc<Algebra>) -> Result<RepMap> {
        let src = Rep::direct_sum(alg, &maps.iter().map(|m| m.src.clone()).collect::<Vec<_>>())?;
        let dst = Rep::direct_sum(alg, &maps.iter().map(|m| m.dst.clone()).collect::<Vec<_>>())?;
        let f = alg.field();
        let comps = (0..alg.num_vertices())
            .map(|v| Mat::block_diag(&maps.iter().map(|m| &m.comps[v]).collect::<Vec<_>>(), f))
            .collect();
        Ok(RepMap { src, dst, comps })
    }
}

#[cfg(test)]
mod tests;
