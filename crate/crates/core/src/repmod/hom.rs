use crate::error::{Error, Result};
use crate::exactlin::{Elem, Mat};

use super::{Rep, RepMap};

/// `Hom(src, dst)` as a linear space. Each basis element is stored flattened
/// (vertex by vertex, row-major) as a column of `coords`.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub src: Rep,
    pub dst: Rep,
    pub basis: Vec<RepMap>,
    coords: Mat,
    /// Rows of `coords` forming an invertible square block, and its inverse.
    probe: Vec<usize>,
    probe_inv: Mat,
}

fn offsets(x: &Rep, y: &Rep) -> (Vec<usize>, usize) {
    let mut offs = Vec::with_capacity(x.dims.len());
    let mut acc = 0;
    for v in 0..x.dims.len() {
        offs.push(acc);
        acc += x.dims[v] * y.dims[v];
    }
    (offs, acc)
}

impl HomSpace {
    /// Canonical basis: the kernel of the commuting-square system, read off
    /// its reduced echelon form.
    pub fn new(x: &Rep, y: &Rep) -> Result<HomSpace> {
        if !x.alg.same(&y.alg) {
            return Err(Error::AlgebraMismatch);
        }
        let f = x.field();
        let (offs, unknowns) = offsets(x, y);
        let q = x.alg.quiver();
        let eqs: usize = q.arrows.iter().map(|a| y.dims[a.target] * x.dims[a.source]).sum();
        let mut sys = Mat::zeros(f, eqs, unknowns);
        let mut row = 0;
        for (ai, ar) in q.arrows.iter().enumerate() {
            let (s, t) = (ar.source, ar.target);
            let xa = &x.action[ai];
            let ya = &y.action[ai];
            // (F_t X_a - Y_a F_s)[r, c] = 0
            for r in 0..y.dims[t] {
                for c in 0..x.dims[s] {
                    for k in 0..x.dims[t] {
                        let v = xa.get(k, c);
                        if !f.is_zero(v) {
                            let idx = offs[t] + r * x.dims[t] + k;
                            let cur = sys.get(row, idx).clone();
                            sys.set(row, idx, f.add(&cur, v));
                        }
                    }
                    for k in 0..y.dims[s] {
                        let v = ya.get(r, k);
                        if !f.is_zero(v) {
                            let idx = offs[s] + k * x.dims[s] + c;
                            let cur = sys.get(row, idx).clone();
                            sys.set(row, idx, f.sub(&cur, v));
                        }
                    }
                    row += 1;
                }
            }
        }
        let coords = sys.kernel_basis();
        let basis = (0..coords.cols()).map(|j| unflatten(x, y, &coords.column(j))).collect();
        let probe = coords.transpose().echelon().pivots;
        let probe_inv = coords.select_rows(&probe).inverse().expect("independent rows");
        Ok(HomSpace { src: x.clone(), dst: y.clone(), basis, coords, probe, probe_inv })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of `f` in the basis, or `None` when `f` is not a morphism.
    pub fn coordinates(&self, f: &RepMap) -> Option<Vec<Elem>> {
        let fl = f.flatten();
        let field = self.src.field();
        if fl.len() != self.coords.rows() {
            return None;
        }
        let sampled: Vec<Elem> = self.probe.iter().map(|&i| fl[i].clone()).collect();
        let c = self.probe_inv.mul(&Mat::from_columns(field, sampled.len(), &[sampled])).column(0);
        let back = self.coords.mul(&Mat::from_columns(field, c.len(), &[c.clone()])).column(0);
        (back == fl).then_some(c)
    }

    /// The morphism with the given coordinates.
    pub fn element(&self, c: &[Elem]) -> RepMap {
        let f = self.src.field();
        let mut out = RepMap::zero(&self.src, &self.dst);
        for (b, x) in self.basis.iter().zip(c) {
            if !f.is_zero(x) {
                out = out.add(&b.scale(x));
            }
        }
        out
    }

    /// Matrix of `g -> post * g` from `self` to `target = Hom(src, post.dst)`.
    pub fn postcompose_matrix(&self, post: &RepMap, target: &HomSpace) -> Mat {
        let f = self.src.field();
        let cols: Vec<Vec<Elem>> = self
            .basis
            .iter()
            .map(|g| target.coordinates(&post.compose(g)).expect("composite is a morphism"))
            .collect();
        Mat::from_columns(f, target.dim(), &cols)
    }

    /// Matrix of `g -> g * pre` from `self` to `target = Hom(pre.src, dst)`.
    pub fn precompose_matrix(&self, pre: &RepMap, target: &HomSpace) -> Mat {
        let f = self.src.field();
        let cols: Vec<Vec<Elem>> = self
            .basis
            .iter()
            .map(|g| target.coordinates(&g.compose(pre)).expect("composite is a morphism"))
            .collect();
        Mat::from_columns(f, target.dim(), &cols)
    }
}

fn unflatten(x: &Rep, y: &Rep, v: &[Elem]) -> RepMap {
    let f = x.field();
    let mut comps = Vec::with_capacity(x.dims.len());
    let mut off = 0;
    for k in 0..x.dims.len() {
        let (r, c) = (y.dims[k], x.dims[k]);
        comps.push(Mat::from_vec(f, r, c, v[off..off + r * c].to_vec()).expect("shape"));
        off += r * c;
    }
    RepMap { src: x.clone(), dst: y.clone(), comps }
}

impl Rep {
    pub fn hom(&self, other: &Rep) -> Result<HomSpace> {
        HomSpace::new(self, other)
    }

    pub fn hom_dim(&self, other: &Rep) -> Result<usize> {
        Ok(HomSpace::new(self, other)?.dim())
    }

    /// Endomorphism space.
    pub fn end(&self) -> HomSpace {
        HomSpace::new(self, self).expect("same algebra")
    }
}

/// Solve `basis_t * m = rhs` exactly; the caller guarantees solvability.
fn solve_exact(basis_t: &Mat, rhs: &Mat) -> Mat {
    basis_t.solve(rhs).expect("field").expect("induced action exists")
}

impl RepMap {
    /// Kernel with its inclusion into `src`.
    pub fn kernel(&self) -> (Rep, RepMap) {
        let x = &self.src;
        let alg = x.alg.clone();
        let bases: Vec<Mat> = self.comps.iter().map(Mat::kernel_basis).collect();
        let dims: Vec<usize> = bases.iter().map(Mat::cols).collect();
        let action = alg
            .quiver()
            .arrows
            .iter()
            .enumerate()
            .map(|(a, ar)| solve_exact(&bases[ar.target], &x.action[a].mul(&bases[ar.source])))
            .collect();
        let k = Rep::trusted(&alg, dims, action);
        let inc = RepMap { src: k.clone(), dst: x.clone(), comps: bases };
        (k, inc)
    }

    /// Image with the corestriction `src -> im` and the inclusion `im -> dst`.
    pub fn image(&self) -> (Rep, RepMap, RepMap) {
        let y = &self.dst;
        let alg = y.alg.clone();
        let bases: Vec<Mat> = self.comps.iter().map(Mat::column_space).collect();
        let dims: Vec<usize> = bases.iter().map(Mat::cols).collect();
        let action = alg
            .quiver()
            .arrows
            .iter()
            .enumerate()
            .map(|(a, ar)| solve_exact(&bases[ar.target], &y.action[a].mul(&bases[ar.source])))
            .collect();
        let im = Rep::trusted(&alg, dims, action);
        let coro = self.comps.iter().zip(&bases).map(|(c, b)| solve_exact(b, c)).collect();
        (
            im.clone(),
            RepMap { src: self.src.clone(), dst: im.clone(), comps: coro },
            RepMap { src: im, dst: y.clone(), comps: bases },
        )
    }

    /// Cokernel with its projection from `dst`.
    pub fn cokernel(&self) -> (Rep, RepMap) {
        let y = &self.dst;
        let alg = y.alg.clone();
        let projs: Vec<Mat> = self.comps.iter().map(Mat::left_kernel_basis).collect();
        let dims: Vec<usize> = projs.iter().map(Mat::rows).collect();
        // M_a Q_s = Q_t Y_a, solved through transposes
        let action = alg
            .quiver()
            .arrows
            .iter()
            .enumerate()
            .map(|(a, ar)| {
                let rhs = projs[ar.target].mul(&y.action[a]).transpose();
                solve_exact(&projs[ar.source].transpose(), &rhs).transpose()
            })
            .collect();
        let c = Rep::trusted(&alg, dims, action);
        let proj = RepMap { src: y.clone(), dst: c.clone(), comps: projs };
        (c, proj)
    }

    /// Some `h` with `self = along * h`, if one exists (a lift through `along`).
    pub fn lift_through(&self, along: &RepMap) -> Result<Option<RepMap>> {
        let hs = HomSpace::new(&self.src, &along.src)?;
        let target = HomSpace::new(&self.src, &along.dst)?;
        let m = hs.postcompose_matrix(along, &target);
        let Some(c) = target.coordinates(self) else {
            return Err(Error::Precondition("map is not a morphism".into()));
        };
        let b = Mat::from_columns(self.src.field(), c.len(), &[c]);
        Ok(m.solve(&b)?.map(|s| hs.element(&s.column(0))))
    }

    /// Some `h` with `self = h * along`, if one exists (an extension along `along`).
    pub fn extend_along(&self, along: &RepMap) -> Result<Option<RepMap>> {
        let hs = HomSpace::new(&along.dst, &self.dst)?;
        let target = HomSpace::new(&along.src, &self.dst)?;
        let m = hs.precompose_matrix(along, &target);
        let Some(c) = target.coordinates(self) else {
            return Err(Error::Precondition("map is not a morphism".into()));
        };
        let b = Mat::from_columns(self.src.field(), c.len(), &[c]);
        Ok(m.solve(&b)?.map(|s| hs.element(&s.column(0))))
    }
}
