//! Minimal resolutions, homological dimensions, Ext, transpose, the
//! Nakayama functor, Auslander–Reiten translates and dominant dimensions.

mod resolution;
mod translate;

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::pathalg::Algebra;
use crate::repmod::Rep;

pub use resolution::{
    cosyzygy, injective_resolution, projective_resolution, syzygy, DimValue, Resolution, ResolutionKind,
    DEFAULT_CAP,
};
pub use translate::{hom_to_regular, nakayama, tau, tau_inverse, transpose};

fn projective_dim_vector(alg: &Algebra, v: usize) -> usize {
    (0..alg.num_vertices()).map(|u| alg.words_between(v, u).len()).sum()
}

fn injective_dim_vector(alg: &Algebra, v: usize) -> usize {
    (0..alg.num_vertices()).map(|u| alg.words_between(u, v).len()).sum()
}

/// `X` is projective iff it has the dimension of the projective cover of its top.
pub fn is_projective(x: &Rep) -> bool {
    let alg = x.alg();
    let top = x.top_dims();
    let predicted: usize = top.iter().enumerate().map(|(v, &t)| t * projective_dim_vector(alg, v)).sum();
    predicted == x.dim()
}

/// `X` is injective iff it has the dimension of the injective envelope of its socle.
pub fn is_injective(x: &Rep) -> bool {
    let alg = x.alg();
    let soc = x.socle_dims();
    let predicted: usize = soc.iter().enumerate().map(|(v, &s)| s * injective_dim_vector(alg, v)).sum();
    predicted == x.dim()
}

/// Vertices `v` with `I(v)` projective, i.e. the summands of the maximal
/// projective-injective summand of `DA`.
pub fn projective_injective_vertices(alg: &Arc<Algebra>) -> Vec<usize> {
    (0..alg.num_vertices())
        .filter(|&v| is_projective(&Rep::injective(alg, v).expect("vertex")))
        .collect()
}

pub fn without_projective_summands(x: &Rep) -> Result<Rep> {
    if is_projective(x) {
        return Ok(Rep::zero(x.alg()));
    }
    let cert = x.decompose()?;
    let keep: Vec<Rep> = cert
        .summands
        .iter()
        .filter(|s| !is_projective(&s.module))
        .flat_map(|s| std::iter::repeat(s.module.clone()).take(s.multiplicity))
        .collect();
    Rep::direct_sum(x.alg(), &keep)
}

pub fn without_injective_summands(x: &Rep) -> Result<Rep> {
    if is_injective(x) {
        return Ok(Rep::zero(x.alg()));
    }
    let cert = x.decompose()?;
    let keep: Vec<Rep> = cert
        .summands
        .iter()
        .filter(|s| !is_injective(&s.module))
        .flat_map(|s| std::iter::repeat(s.module.clone()).take(s.multiplicity))
        .collect();
    Rep::direct_sum(x.alg(), &keep)
}

pub fn projective_dimension(x: &Rep, cap: usize) -> DimValue {
    projective_resolution(x, cap).length()
}

pub fn injective_dimension(x: &Rep, cap: usize) -> DimValue {
    injective_resolution(x, cap).length()
}

/// `dim Ext^i(X, Y)` for `0 <= i <= max`, from the minimal projective
/// resolution of `X`.
pub fn ext_table(x: &Rep, y: &Rep, max: usize) -> Result<Vec<usize>> {
    if !x.alg().same(y.alg()) {
        return Err(Error::AlgebraMismatch);
    }
    let mut out = vec![x.hom_dim(y)?];
    if max == 0 {
        return Ok(out);
    }
    let res = projective_resolution(x, max);
    let zero = Rep::zero(x.alg());
    let omega = |k: usize| -> &Rep {
        if k == 0 {
            x
        } else {
            res.syzygies.get(k - 1).map(|s| &s.0).unwrap_or(&zero)
        }
    };
    let mut hom_prev = out[0];
    for i in 1..=max {
        let hom_p: usize = res.labels.get(i - 1).map_or(0, |l| l.iter().map(|&v| y.dims()[v]).sum());
        let hom_next = omega(i).hom_dim(y)?;
        // 0 -> Hom(Omega^{i-1}, Y) -> Hom(P_{i-1}, Y) -> Hom(Omega^i, Y) -> Ext^i -> 0
        out.push(hom_next + hom_prev - hom_p);
        hom_prev = hom_next;
    }
    Ok(out)
}

pub fn ext(x: &Rep, y: &Rep, i: usize) -> Result<usize> {
    Ok(ext_table(x, y, i)?[i])
}

/// `dim Ext^i(X, Y)` for `0 <= i <= max` from the minimal injective
/// resolution of `Y`.
pub fn ext_table_injective(x: &Rep, y: &Rep, max: usize) -> Result<Vec<usize>> {
    if !x.alg().same(y.alg()) {
        return Err(Error::AlgebraMismatch);
    }
    let mut out = vec![x.hom_dim(y)?];
    if max == 0 {
        return Ok(out);
    }
    let res = injective_resolution(y, max);
    let zero = Rep::zero(x.alg());
    let sigma = |k: usize| -> &Rep {
        if k == 0 {
            y
        } else {
            res.syzygies.get(k - 1).map(|s| &s.0).unwrap_or(&zero)
        }
    };
    let mut hom_prev = out[0];
    for i in 1..=max {
        let hom_i: usize = res.labels.get(i - 1).map_or(0, |l| l.iter().map(|&v| x.dims()[v]).sum());
        let hom_next = x.hom_dim(sigma(i))?;
        out.push(hom_next + hom_prev - hom_i);
        hom_prev = hom_next;
    }
    Ok(out)
}

/// Which Auslander–Reiten translate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TauKind {
    Tau,
    TauInverse,
    /// `tau_n = tau Omega^{n-1}`
    Higher(usize),
    /// `tau_n^- = tau^- Omega^{-(n-1)}`
    HigherInverse(usize),
}

pub fn ar_translate(x: &Rep, kind: TauKind) -> Result<Rep> {
    match kind {
        TauKind::Tau => Ok(tau(&without_projective_summands(x)?)),
        TauKind::TauInverse => Ok(tau_inverse(&without_injective_summands(x)?)),
        TauKind::Higher(n) => {
            if n == 0 {
                return Err(Error::Precondition("n must be at least 1".into()));
            }
            let base = if n == 1 { without_projective_summands(x)? } else { syzygy(x, n - 1)? };
            Ok(tau(&base))
        }
        TauKind::HigherInverse(n) => {
            if n == 0 {
                return Err(Error::Precondition("n must be at least 1".into()));
            }
            let base = if n == 1 { without_injective_summands(x)? } else { cosyzygy(x, n - 1)? };
            Ok(tau_inverse(&base))
        }
    }
}

/// Vertices of the indecomposable summands of an injective module, or an
/// error when it is not injective.
pub fn injective_support(inj: &Rep) -> Result<Vec<usize>> {
    if !is_injective(inj) {
        return Err(Error::NotInjective(format!("dimension vector {:?}", inj.dims())));
    }
    Ok(inj.socle_dims().iter().enumerate().filter(|(_, &d)| d > 0).map(|(v, _)| v).collect())
}

/// Number of leading terms of the minimal injective resolution of `target`
/// lying in `add inj`.
pub fn rel_domdim(target: &Rep, inj: &Rep, cap: usize) -> Result<DimValue> {
    let support = injective_support(inj)?;
    let res = injective_resolution(target, cap);
    for (k, labels) in res.labels.iter().enumerate() {
        if !labels.iter().all(|v| support.contains(v)) {
            return Ok(DimValue::Finite(k.min(cap)));
        }
    }
    Ok(DimValue::InfinityAtCap(cap))
}

/// Classical dominant dimension of the algebra.
pub fn domdim(alg: &Arc<Algebra>, cap: usize) -> Result<DimValue> {
    let pi = projective_injective_vertices(alg);
    let parts: Vec<Rep> = pi.iter().map(|&v| Rep::injective(alg, v).expect("vertex")).collect();
    let inj = Rep::direct_sum(alg, &parts)?;
    rel_domdim(&Rep::regular(alg), &inj, cap)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// `pd I_j <= m` for the first `n+1` terms of the minimal injective
/// resolution of the regular module on the chosen side.
pub fn condition_mn(alg: &Arc<Algebra>, m: usize, n: usize, side: Side) -> bool {
    let alg = match side {
        Side::Left => alg.clone(),
        Side::Right => alg.opposite(),
    };
    let res = injective_resolution(&Rep::regular(&alg), n);
    let mut pd_cache: Vec<Option<bool>> = vec![None; alg.num_vertices()];
    for labels in res.labels.iter().take(n + 1) {
        for &v in labels {
            let ok = *pd_cache[v].get_or_insert_with(|| {
                projective_dimension(&Rep::injective(&alg, v).expect("vertex"), m).at_most(m)
            });
            if !ok {
                return false;
            }
        }
    }
    true
}
