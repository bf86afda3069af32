//! `add M` closures, minimal approximations, coresolutions and
//! (co)tilting checks.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlin::Mat;
use crate::homology::{
    ext_table, injective_dimension, projective_dimension, DimValue, Resolution, ResolutionKind,
};
use crate::pathalg::Algebra;
use crate::repmod::{HomSpace, Rep, RepMap};

/// Default bound on coresolution lengths.
pub const DEFAULT_CODIM_CAP: usize = 8;

/// `add M`, stored through a basic list of indecomposables together with
/// bases of the radical morphisms between them.
#[derive(Clone, Debug)]
pub struct AddClosure {
    pub generator: Rep,
    pub indecomposables: Vec<Rep>,
    /// `rad[j][k]`: basis of the non-invertible maps `N_j -> N_k`.
    rad: Vec<Vec<Vec<RepMap>>>,
}

fn radical_basis(u: &Rep, v: &Rep, same: bool) -> Vec<RepMap> {
    let hom = u.hom(v).expect("same algebra");
    if !same {
        return hom.basis;
    }
    // the trace-form kernel of the local ring End(u)
    let f = u.field();
    let n = hom.dim();
    let totals: Vec<Mat> = hom.basis.iter().map(RepMap::total).collect();
    let mut gram = Mat::zeros(f, n, n);
    for i in 0..n {
        for j in 0..n {
            gram.set(i, j, totals[i].mul(&totals[j]).trace());
        }
    }
    let ker = gram.kernel_basis();
    (0..ker.cols()).map(|c| hom.element(&ker.column(c))).collect()
}

impl AddClosure {
    pub fn new(m: &Rep) -> Result<AddClosure> {
        let indecs = m.indecomposable_summands()?;
        Ok(AddClosure::from_indecomposables(m.clone(), indecs))
    }

    /// Closure of several modules.
    pub fn of(alg: &Arc<Algebra>, mods: &[Rep]) -> Result<AddClosure> {
        let indecs = crate::repmod::union_of_summands(mods)?;
        let generator = Rep::direct_sum(alg, &indecs)?;
        Ok(AddClosure::from_indecomposables(generator, indecs))
    }

    /// The caller guarantees the list is basic and consists of indecomposables.
    pub fn from_indecomposables(generator: Rep, indecomposables: Vec<Rep>) -> AddClosure {
        let r = indecomposables.len();
        let rad = (0..r)
            .map(|j| (0..r).map(|k| radical_basis(&indecomposables[j], &indecomposables[k], j == k)).collect())
            .collect();
        AddClosure { generator, indecomposables, rad }
    }

    /// The closure of the members listed in `idx`, reusing stored radicals.
    pub fn subset(&self, idx: &[usize]) -> Result<AddClosure> {
        let indecomposables: Vec<Rep> = idx.iter().map(|&i| self.indecomposables[i].clone()).collect();
        let generator = Rep::direct_sum(self.alg(), &indecomposables)?;
        let rad = idx.iter().map(|&j| idx.iter().map(|&k| self.rad[j][k].clone()).collect()).collect();
        Ok(AddClosure { generator, indecomposables, rad })
    }

    pub fn len(&self) -> usize {
        self.indecomposables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indecomposables.is_empty()
    }

    pub fn alg(&self) -> &Arc<Algebra> {
        self.generator.alg()
    }

    /// Basis of the non-invertible maps from member `j` to member `k`.
    pub fn radical(&self, j: usize, k: usize) -> &[RepMap] {
        &self.rad[j][k]
    }

    pub fn contains(&self, x: &Rep) -> Result<bool> {
        x.in_add_of(&self.indecomposables)
    }

    /// Index of the member isomorphic to the indecomposable `x`.
    pub fn position(&self, x: &Rep) -> Result<Option<usize>> {
        x.iso_to_any(&self.indecomposables)
    }

    /// Minimal left approximation `X -> C_X`.
    pub fn left_approximation(&self, x: &Rep) -> Result<Approximation> {
        let alg = x.alg().clone();
        let mut maps = Vec::new();
        let mut members = Vec::new();
        let homs: Vec<HomSpace> = self.indecomposables.iter().map(|n| x.hom(n)).collect::<Result<_>>()?;
        for k in 0..self.indecomposables.len() {
            let target = &homs[k];
            if target.dim() == 0 {
                continue;
            }
            // maps X -> N_k through radical maps N_j -> N_k
            let mut cols = Vec::new();
            for (j, hj) in homs.iter().enumerate() {
                for g in &self.rad[j][k] {
                    for h in &hj.basis {
                        cols.push(target.coordinates(&g.compose(h)).expect("morphism"));
                    }
                }
            }
            let f = alg.field();
            let mut all = cols;
            let base = all.len();
            all.extend((0..target.dim()).map(|i| {
                let mut e = vec![f.zero(); target.dim()];
                e[i] = f.one();
                e
            }));
            let piv = crate::exactlin::independent_subset(f, target.dim(), &all);
            for p in piv.into_iter().filter(|&p| p >= base) {
                maps.push(target.basis[p - base].clone());
                members.push(k);
            }
        }
        let map = if maps.is_empty() {
            RepMap::zero(x, &Rep::zero(&alg))
        } else {
            RepMap::into_sum(x, &maps)?
        };
        Ok(Approximation { map, members })
    }

    /// Minimal right approximation `C_X -> X`.
    pub fn right_approximation(&self, x: &Rep) -> Result<Approximation> {
        let alg = x.alg().clone();
        let f = alg.field();
        let mut maps = Vec::new();
        let mut members = Vec::new();
        let homs: Vec<HomSpace> = self.indecomposables.iter().map(|n| n.hom(x)).collect::<Result<_>>()?;
        for k in 0..self.indecomposables.len() {
            let target = &homs[k];
            if target.dim() == 0 {
                continue;
            }
            let mut cols = Vec::new();
            for (j, hj) in homs.iter().enumerate() {
                for g in &self.rad[k][j] {
                    for h in &hj.basis {
                        cols.push(target.coordinates(&h.compose(g)).expect("morphism"));
                    }
                }
            }
            let base = cols.len();
            let mut all = cols;
            all.extend((0..target.dim()).map(|i| {
                let mut e = vec![f.zero(); target.dim()];
                e[i] = f.one();
                e
            }));
            let piv = crate::exactlin::independent_subset(f, target.dim(), &all);
            for p in piv.into_iter().filter(|&p| p >= base) {
                maps.push(target.basis[p - base].clone());
                members.push(k);
            }
        }
        let map = if maps.is_empty() {
            RepMap::zero(&Rep::zero(&alg), x)
        } else {
            RepMap::from_sum(x, &maps)?
        };
        Ok(Approximation { map, members })
    }

    /// Whether `f: X -> C` induces surjections `Hom(C, N) -> Hom(X, N)`
    /// for every member `N`.
    pub fn is_left_approximation(&self, f: &RepMap) -> Result<bool> {
        for n in &self.indecomposables {
            let hx = f.src.hom(n)?;
            let hc = f.dst.hom(n)?;
            if hc.precompose_matrix(f, &hx).rank() != hx.dim() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether `g: C -> X` induces surjections `Hom(N, C) -> Hom(N, X)`.
    pub fn is_right_approximation(&self, g: &RepMap) -> Result<bool> {
        for n in &self.indecomposables {
            let hx = n.hom(&g.dst)?;
            let hc = n.hom(&g.src)?;
            if hc.postcompose_matrix(g, &hx).rank() != hx.dim() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Minimal `add M`-coresolution `0 -> X -> C_0 -> C_1 -> ...`.
    pub fn coresolution(&self, x: &Rep, cap: usize) -> Result<Resolution> {
        let mut terms = Vec::new();
        let mut labels = Vec::new();
        let mut diffs = Vec::new();
        let mut syzygies = Vec::new();
        let first = self.left_approximation(x)?;
        if !first.map.is_mono() {
            return Err(Error::ApproxNotInjective { stage: 0 });
        }
        let edge = first.map.clone();
        let mut current = first;
        let mut truncated_at = None;
        loop {
            let k = terms.len();
            terms.push(current.map.dst.clone());
            labels.push(current.members.clone());
            let (cok, proj) = current.map.cokernel();
            syzygies.push((cok.clone(), proj.clone()));
            if cok.is_zero() {
                break;
            }
            if k >= cap {
                truncated_at = Some(cap);
                break;
            }
            let next = self.left_approximation(&cok)?;
            if !next.map.is_mono() {
                return Err(Error::ApproxNotInjective { stage: k + 1 });
            }
            diffs.push(next.map.compose(&proj));
            current = next;
        }
        if x.is_zero() {
            terms.clear();
            labels.clear();
        }
        Ok(Resolution {
            kind: ResolutionKind::Coresolution,
            module: x.clone(),
            terms,
            edge,
            diffs,
            syzygies,
            labels,
            truncated_at,
            minimal: true,
        })
    }

    /// `add M`-resolution `... -> C_1 -> C_0 -> X -> 0` by minimal right
    /// approximations; fails when an approximation is not surjective.
    pub fn resolution(&self, x: &Rep, cap: usize) -> Result<Resolution> {
        let mut terms = Vec::new();
        let mut labels = Vec::new();
        let mut diffs = Vec::new();
        let mut syzygies = Vec::new();
        let first = self.right_approximation(x)?;
        if !first.map.is_epi() {
            return Err(Error::Precondition("right approximation is not surjective at stage 0".into()));
        }
        let edge = first.map.clone();
        let mut current = first;
        let mut truncated_at = None;
        loop {
            let k = terms.len();
            terms.push(current.map.src.clone());
            labels.push(current.members.clone());
            let (ker, inc) = current.map.kernel();
            syzygies.push((ker.clone(), inc.clone()));
            if ker.is_zero() {
                break;
            }
            if k >= cap {
                truncated_at = Some(cap);
                break;
            }
            let next = self.right_approximation(&ker)?;
            if !next.map.is_epi() {
                return Err(Error::Precondition(format!(
                    "right approximation is not surjective at stage {}",
                    k + 1
                )));
            }
            diffs.push(inc.compose(&next.map));
            current = next;
        }
        if x.is_zero() {
            terms.clear();
            labels.clear();
        }
        Ok(Resolution {
            kind: ResolutionKind::FResolution,
            module: x.clone(),
            terms,
            edge,
            diffs,
            syzygies,
            labels,
            truncated_at,
            minimal: true,
        })
    }

    /// Length of the minimal coresolution.
    pub fn codim(&self, x: &Rep, cap: usize) -> Result<DimValue> {
        Ok(self.coresolution(x, cap)?.length())
    }
}

/// A minimal approximation together with the member index of each
/// indecomposable summand of the approximating module.
#[derive(Clone, Debug)]
pub struct Approximation {
    pub map: RepMap,
    pub members: Vec<usize>,
}

impl Approximation {
    /// Deleting any single summand destroys the approximation property.
    pub fn is_minimal_left(&self, c: &AddClosure) -> Result<bool> {
        self.deletion_test(c, true)
    }

    pub fn is_minimal_right(&self, c: &AddClosure) -> Result<bool> {
        self.deletion_test(c, false)
    }

    fn deletion_test(&self, c: &AddClosure, left: bool) -> Result<bool> {
        let alg = c.alg().clone();
        let n = self.members.len();
        let parts: Vec<Rep> = self.members.iter().map(|&k| c.indecomposables[k].clone()).collect();
        let (_, inj, proj) = Rep::direct_sum_with_maps(&alg, &parts)?;
        for skip in 0..n {
            let keep: Vec<usize> = (0..n).filter(|&i| i != skip).collect();
            let ok = if left {
                let comps: Vec<RepMap> = keep.iter().map(|&i| proj[i].compose(&self.map)).collect();
                let g = if comps.is_empty() {
                    RepMap::zero(&self.map.src, &Rep::zero(&alg))
                } else {
                    RepMap::into_sum(&self.map.src, &comps)?
                };
                c.is_left_approximation(&g)?
            } else {
                let comps: Vec<RepMap> = keep.iter().map(|&i| self.map.compose(&inj[i])).collect();
                let g = if comps.is_empty() {
                    RepMap::zero(&Rep::zero(&alg), &self.map.dst)
                } else {
                    RepMap::from_sum(&self.map.dst, &comps)?
                };
                c.is_right_approximation(&g)?
            };
            if ok {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `M`-codimension of `X` with `M` given as a module.
pub fn m_codim(x: &Rep, m: &Rep, cap: usize) -> Result<DimValue> {
    AddClosure::new(m)?.codim(x, cap)
}

/// Whether `X` (a summand of `Y`) dualizes `Y`: there is an exact
/// `0 -> Y -> X^0 -> X^1` built from left `add X`-approximations.
pub fn is_dualizing_summand(x: &Rep, y: &Rep) -> Result<bool> {
    let cy = AddClosure::new(y)?;
    for u in x.indecomposable_summands()? {
        if cy.position(&u)?.is_none() {
            return Err(Error::NotSummand(format!("summand of dimension vector {:?}", u.dims())));
        }
    }
    let cx = AddClosure::new(x)?;
    let f0 = cx.left_approximation(y)?;
    if !f0.map.is_mono() {
        return Ok(false);
    }
    let (cok, _) = f0.map.cokernel();
    let f1 = cx.left_approximation(&cok)?;
    Ok(f1.map.is_mono())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TiltKind {
    Tilting,
    Cotilting,
}

/// Classical tilting (finite projective dimension) or cotilting (finite
/// injective dimension) check, with the (co)resolution of `A` (resp. `DA`)
/// by `add T` built as a certificate.
pub fn is_tilting(t: &Rep, kind: TiltKind, cap: usize) -> Result<bool> {
    let alg = t.alg().clone();
    let c = AddClosure::new(t)?;
    if c.len() != alg.num_vertices() {
        return Ok(false);
    }
    let dim = match kind {
        TiltKind::Tilting => projective_dimension(t, cap),
        TiltKind::Cotilting => injective_dimension(t, cap),
    };
    let Some(d) = dim.finite() else { return Ok(false) };
    if d > 0 && ext_table(t, t, d)?[1..].iter().any(|&e| e != 0) {
        return Ok(false);
    }
    match kind {
        TiltKind::Tilting => match c.coresolution(&Rep::regular(&alg), cap) {
            Ok(res) => Ok(res.truncated_at.is_none() && res.verify()),
            Err(Error::ApproxNotInjective { .. }) => Ok(false),
            Err(e) => Err(e),
        },
        TiltKind::Cotilting => match c.resolution(&Rep::dual_regular(&alg), cap) {
            Ok(res) => Ok(res.truncated_at.is_none() && res.verify()),
            Err(Error::Precondition(_)) => Ok(false),
            Err(e) => Err(e),
        },
    }
}

#[cfg(test)]
mod tests;
