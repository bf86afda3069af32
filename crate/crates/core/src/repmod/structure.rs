use crate::exactlin::{Mat, FieldSpec};

use super::{Rep, RepMap};

/// A projective cover or injective envelope together with the vertex of
/// each indecomposable summand of the projective or injective module.
#[derive(Clone, Debug)]
pub struct Hull {
    pub map: RepMap,
    pub vertices: Vec<usize>,
}

impl Hull {
    /// How many times each vertex occurs.
    pub fn multiplicities(&self, n: usize) -> Vec<usize> {
        let mut m = vec![0; n];
        for &v in &self.vertices {
            m[v] += 1;
        }
        m
    }
}

/// Columns of `base` followed by enough unit vectors to span the space;
/// returns only the added unit vectors.
fn complement(field: FieldSpec, base: &Mat, dim: usize) -> Vec<Vec<crate::exactlin::Elem>> {
    let id = Mat::identity(field, dim);
    let all = Mat::hstack(&[base, &id], field, dim);
    all.echelon()
        .pivots
        .into_iter()
        .filter(|&p| p >= base.cols())
        .map(|p| id.column(p - base.cols()))
        .collect()
}

impl Rep {
    /// The submodule spanned at each vertex by the columns of `bases[v]`,
    /// which must be independent and closed under the action.
    pub fn submodule(&self, bases: Vec<Mat>) -> (Rep, RepMap) {
        let alg = self.alg.clone();
        let dims: Vec<usize> = bases.iter().map(Mat::cols).collect();
        let action = alg
            .quiver()
            .arrows
            .iter()
            .enumerate()
            .map(|(a, ar)| {
                bases[ar.target]
                    .solve(&self.action[a].mul(&bases[ar.source]))
                    .expect("field")
                    .expect("subspace is a submodule")
            })
            .collect();
        let sub = Rep::trusted(&alg, dims, action);
        (sub.clone(), RepMap { src: sub, dst: self.clone(), comps: bases })
    }

    /// `rad X`: the span of the arrow images.
    pub fn radical(&self) -> (Rep, RepMap) {
        let f = self.field();
        let q = self.alg.quiver();
        let bases = (0..self.dims.len())
            .map(|v| {
                let parts: Vec<&Mat> =
                    q.arrows.iter().enumerate().filter(|(_, a)| a.target == v).map(|(i, _)| &self.action[i]).collect();
                Mat::hstack(&parts, f, self.dims[v]).column_space()
            })
            .collect();
        self.submodule(bases)
    }

    /// `soc X`: at each vertex the joint kernel of all outgoing arrows.
    pub fn socle(&self) -> (Rep, RepMap) {
        let f = self.field();
        let q = self.alg.quiver();
        let bases = (0..self.dims.len())
            .map(|v| {
                let parts: Vec<&Mat> =
                    q.arrows.iter().enumerate().filter(|(_, a)| a.source == v).map(|(i, _)| &self.action[i]).collect();
                Mat::vstack(&parts, f, self.dims[v]).kernel_basis()
            })
            .collect();
        self.submodule(bases)
    }

    /// `top X = X / rad X` with the projection.
    pub fn top(&self) -> (Rep, RepMap) {
        self.radical().1.cokernel()
    }

    pub fn top_dims(&self) -> Vec<usize> {
        let r = self.radical().0;
        self.dims.iter().zip(&r.dims).map(|(a, b)| a - b).collect()
    }

    pub fn socle_dims(&self) -> Vec<usize> {
        self.socle().0.dims
    }

    pub fn is_semisimple(&self) -> bool {
        self.actions().iter().all(Mat::is_zero)
    }

    /// The map `P(v) -> X` sending `e_v` to `x`.
    pub fn map_from_projective(&self, v: usize, x: &[crate::exactlin::Elem]) -> RepMap {
        let alg = &self.alg;
        let f = self.field();
        let p = Rep::projective(alg, v).expect("vertex in range");
        let xv = Mat::from_columns(f, self.dims[v], &[x.to_vec()]);
        let comps = (0..self.dims.len())
            .map(|u| {
                let cols: Vec<_> = alg
                    .words_between(v, u)
                    .into_iter()
                    .map(|w| self.path_action(&alg.basis()[w]).mul(&xv).column(0))
                    .collect();
                Mat::from_columns(f, self.dims[u], &cols)
            })
            .collect();
        RepMap { src: p, dst: self.clone(), comps }
    }

    /// The map `X -> I(v)` induced by the functional `phi` on `X_v`.
    pub fn map_to_injective(&self, v: usize, phi: &[crate::exactlin::Elem]) -> RepMap {
        let alg = &self.alg;
        let f = self.field();
        let inj = Rep::injective(alg, v).expect("vertex in range");
        let row = Mat::from_vec(f, 1, self.dims[v], phi.to_vec()).expect("functional length");
        let comps = (0..self.dims.len())
            .map(|u| {
                let rows: Vec<Mat> =
                    alg.words_between(u, v).into_iter().map(|w| row.mul(&self.path_action(&alg.basis()[w]))).collect();
                let refs: Vec<&Mat> = rows.iter().collect();
                Mat::vstack(&refs, f, self.dims[u])
            })
            .collect();
        RepMap { src: self.clone(), dst: inj, comps }
    }

    /// Minimal epimorphism from a projective, summands ordered by vertex.
    pub fn projective_cover(&self) -> Hull {
        let f = self.field();
        let (_, rad_inc) = self.radical();
        let mut maps = Vec::new();
        let mut vertices = Vec::new();
        for v in 0..self.dims.len() {
            for x in complement(f, &rad_inc.comps[v], self.dims[v]) {
                maps.push(self.map_from_projective(v, &x));
                vertices.push(v);
            }
        }
        Hull { map: RepMap::from_sum(self, &maps).expect("same algebra"), vertices }
    }

    /// Minimal monomorphism into an injective, summands ordered by vertex.
    pub fn injective_envelope(&self) -> Hull {
        let f = self.field();
        let (_, soc_inc) = self.socle();
        let mut maps = Vec::new();
        let mut vertices = Vec::new();
        for v in 0..self.dims.len() {
            let s = &soc_inc.comps[v];
            if s.cols() == 0 {
                continue;
            }
            let phis = s.transpose().solve(&Mat::identity(f, s.cols())).expect("field").expect("socle basis");
            for k in 0..s.cols() {
                maps.push(self.map_to_injective(v, &phis.column(k)));
                vertices.push(v);
            }
        }
        Hull { map: RepMap::into_sum(self, &maps).expect("same algebra"), vertices }
    }

    /// `D X`, a module over the opposite algebra.
    pub fn dual(&self) -> Rep {
        let op = self.alg.opposite();
        let action = self.action.iter().map(Mat::transpose).collect();
        Rep::trusted(&op, self.dims.clone(), action)
    }
}

impl RepMap {
    /// `D f : D dst -> D src`.
    pub fn dual(&self) -> RepMap {
        RepMap { src: self.dst.dual(), dst: self.src.dual(), comps: self.comps.iter().map(Mat::transpose).collect() }
    }
}
