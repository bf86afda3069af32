//! Relative homological algebra for the sub-bifunctors `F^M` and `F_M` of
//! `Ext^1`.

use std::sync::Arc;

use crate::approx::AddClosure;
use crate::error::{Error, Result};
use crate::homology::{tau, tau_inverse, DimValue, Resolution, ResolutionKind};
use crate::pathalg::Algebra;
use crate::repmod::{Rep, RepMap};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FKind {
    /// `F^M`: sequences on which every `Hom(-, N)`, `N` in `add M`, is exact.
    Upper,
    /// `F_M`: sequences on which every `Hom(N, -)`, `N` in `add M`, is exact.
    Lower,
}

/// A sub-bifunctor `F^M` or `F_M` together with its relative projectives
/// and injectives.
#[derive(Clone, Debug)]
pub struct SubBifunctor {
    pub kind: FKind,
    pub m: Rep,
    pub closure: AddClosure,
    pub projectives: AddClosure,
    pub injectives: AddClosure,
}

impl SubBifunctor {
    pub fn new(kind: FKind, m: &Rep) -> Result<SubBifunctor> {
        if m.is_zero() {
            return Err(Error::Precondition("the defining module must be nonzero".into()));
        }
        let alg = m.alg().clone();
        let closure = AddClosure::new(m)?;
        let (projectives, injectives) = match kind {
            FKind::Upper => {
                let tm: Vec<Rep> = closure.indecomposables.iter().map(tau_inverse).collect();
                let mut p = vec![Rep::regular(&alg)];
                p.extend(tm);
                (AddClosure::of(&alg, &p)?, AddClosure::of(&alg, &[Rep::dual_regular(&alg), m.clone()])?)
            }
            FKind::Lower => {
                let tm: Vec<Rep> = closure.indecomposables.iter().map(tau).collect();
                let mut i = vec![Rep::dual_regular(&alg)];
                i.extend(tm);
                (AddClosure::of(&alg, &[Rep::regular(&alg), m.clone()])?, AddClosure::of(&alg, &i)?)
            }
        };
        Ok(SubBifunctor { kind, m: m.clone(), closure, projectives, injectives })
    }

    pub fn upper(m: &Rep) -> Result<SubBifunctor> {
        SubBifunctor::new(FKind::Upper, m)
    }

    pub fn lower(m: &Rep) -> Result<SubBifunctor> {
        SubBifunctor::new(FKind::Lower, m)
    }

    pub fn alg(&self) -> &Arc<Algebra> {
        self.m.alg()
    }

    /// Whether the exact sequence `0 -> X -i-> Y -p-> Z -> 0` is F-exact.
    pub fn is_exact(&self, i: &RepMap, p: &RepMap) -> Result<bool> {
        for n in &self.closure.indecomposables {
            let ok = match self.kind {
                FKind::Upper => {
                    let hy = i.dst.hom(n)?;
                    let hx = i.src.hom(n)?;
                    hy.precompose_matrix(i, &hx).rank() == hx.dim()
                }
                FKind::Lower => {
                    let hy = n.hom(&p.src)?;
                    let hz = n.hom(&p.dst)?;
                    hy.postcompose_matrix(p, &hz).rank() == hz.dim()
                }
            };
            if !ok {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Minimal F-projective resolution; every stage is certified F-exact.
    pub fn projective_resolution(&self, x: &Rep, cap: usize) -> Result<Resolution> {
        let mut res = self.projectives.resolution(x, cap)?;
        for k in 0..res.syzygies.len() {
            let (_, inc) = &res.syzygies[k];
            let p = if k == 0 { res.edge.clone() } else { res.diffs[k - 1].image().1 };
            if !self.is_exact(inc, &p)? {
                return Err(Error::Defect(format!("F-projective resolution stage {k} is not F-exact")));
            }
        }
        res.kind = ResolutionKind::FResolution;
        Ok(res)
    }

    /// Minimal F-injective coresolution; every stage is certified F-exact.
    pub fn injective_coresolution(&self, x: &Rep, cap: usize) -> Result<Resolution> {
        let mut res = self.injectives.coresolution(x, cap)?;
        for k in 0..res.syzygies.len() {
            let (_, proj) = &res.syzygies[k];
            let i = if k == 0 { res.edge.clone() } else { res.diffs[k - 1].image().2 };
            if !self.is_exact(&i, proj)? {
                return Err(Error::Defect(format!("F-injective coresolution stage {k} is not F-exact")));
            }
        }
        res.kind = ResolutionKind::FCoresolution;
        Ok(res)
    }

    pub fn pd(&self, x: &Rep, cap: usize) -> Result<DimValue> {
        Ok(self.projective_resolution(x, cap)?.length())
    }

    pub fn id(&self, x: &Rep, cap: usize) -> Result<DimValue> {
        Ok(self.injective_coresolution(x, cap)?.length())
    }

    /// `dim Ext_F^i(X, Y)` for `0 <= i <= max` from the F-projective
    /// resolution of `X`.
    pub fn ext_table(&self, x: &Rep, y: &Rep, max: usize) -> Result<Vec<usize>> {
        let res = self.projective_resolution(x, max)?;
        let zero = Rep::zero(x.alg());
        let omega = |k: usize| -> &Rep {
            if k == 0 {
                x
            } else {
                res.syzygies.get(k - 1).map(|s| &s.0).unwrap_or(&zero)
            }
        };
        let mut out = vec![x.hom_dim(y)?];
        let mut prev = out[0];
        for i in 1..=max {
            let hp = res.terms.get(i - 1).map_or(Ok(0), |t| t.hom_dim(y))?;
            let next = omega(i).hom_dim(y)?;
            out.push(next + prev - hp);
            prev = next;
        }
        Ok(out)
    }

    /// The same dimensions from the F-injective coresolution of `Y`.
    pub fn ext_table_injective(&self, x: &Rep, y: &Rep, max: usize) -> Result<Vec<usize>> {
        let res = self.injective_coresolution(y, max)?;
        let zero = Rep::zero(x.alg());
        let sigma = |k: usize| -> &Rep {
            if k == 0 {
                y
            } else {
                res.syzygies.get(k - 1).map(|s| &s.0).unwrap_or(&zero)
            }
        };
        let mut out = vec![x.hom_dim(y)?];
        let mut prev = out[0];
        for i in 1..=max {
            let hi = res.terms.get(i - 1).map_or(Ok(0), |t| x.hom_dim(t))?;
            let next = x.hom_dim(sigma(i))?;
            out.push(next + prev - hi);
            prev = next;
        }
        Ok(out)
    }

    pub fn ext(&self, x: &Rep, y: &Rep, i: usize) -> Result<usize> {
        Ok(self.ext_table(x, y, i)?[i])
    }

    /// Relative global dimension over a complete list of indecomposables.
    pub fn global_dimension(&self, indecomposables: &[Rep], cap: usize) -> Result<DimValue> {
        let mut best = DimValue::Finite(0);
        for x in indecomposables {
            best = best.max(self.pd(x, cap)?);
        }
        Ok(best)
    }

    /// F-cotilting: finite `id_F`, vanishing `Ext_F^{>0}(T, T)`, and every
    /// indecomposable F-injective has a finite F-exact `add T`-resolution.
    pub fn is_cotilting(&self, t: &Rep, cap: usize) -> Result<bool> {
        let Some(d) = self.id(t, cap)?.finite() else { return Ok(false) };
        if d > 0 && self.ext_table(t, t, d)?[1..].iter().any(|&e| e != 0) {
            return Ok(false);
        }
        let ct = AddClosure::new(t)?;
        for inj in &self.injectives.indecomposables {
            let res = match ct.resolution(inj, cap) {
                Ok(r) => r,
                Err(Error::Precondition(_)) => return Ok(false),
                Err(e) => return Err(e),
            };
            if res.truncated_at.is_some() {
                return Ok(false);
            }
            for k in 0..res.syzygies.len() {
                let (_, inc) = &res.syzygies[k];
                let p = if k == 0 { res.edge.clone() } else { res.diffs[k - 1].image().1 };
                if !self.is_exact(inc, &p)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// F-tilting, the dual notion.
    pub fn is_tilting(&self, t: &Rep, cap: usize) -> Result<bool> {
        let Some(d) = self.pd(t, cap)?.finite() else { return Ok(false) };
        if d > 0 && self.ext_table(t, t, d)?[1..].iter().any(|&e| e != 0) {
            return Ok(false);
        }
        let ct = AddClosure::new(t)?;
        for proj in &self.projectives.indecomposables {
            let res = match ct.coresolution(proj, cap) {
                Ok(r) => r,
                Err(Error::ApproxNotInjective { .. }) => return Ok(false),
                Err(e) => return Err(e),
            };
            if res.truncated_at.is_some() {
                return Ok(false);
            }
            for k in 0..res.syzygies.len() {
                let (_, pr) = &res.syzygies[k];
                let i = if k == 0 { res.edge.clone() } else { res.diffs[k - 1].image().2 };
                if !self.is_exact(&i, pr)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests;
