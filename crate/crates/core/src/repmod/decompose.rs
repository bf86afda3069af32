//! Krull–Schmidt decomposition through the trace-form radical of the
//! endomorphism ring and Fitting splitting.

use crate::error::{Error, Result};
use crate::exactlin::poly::{charpoly, roots_in_field};
use crate::exactlin::{Elem, FieldSpec, Mat};

use super::{Rep, RepMap};

/// One isomorphism class of indecomposable summands.
#[derive(Clone, Debug)]
pub struct Summand {
    pub module: Rep,
    pub multiplicity: usize,
}

/// Summands in canonical order and an isomorphism from their direct sum
/// (each class repeated by multiplicity) onto the decomposed module.
#[derive(Clone, Debug)]
pub struct DecompositionCert {
    pub summands: Vec<Summand>,
    pub witness: RepMap,
}

impl DecompositionCert {
    /// Number of pairwise non-isomorphic indecomposable summands.
    pub fn distinct(&self) -> usize {
        self.summands.len()
    }

    pub fn total(&self) -> usize {
        self.summands.iter().map(|s| s.multiplicity).sum()
    }

    pub fn modules(&self) -> Vec<Rep> {
        self.summands.iter().map(|s| s.module.clone()).collect()
    }
}

/// Number of candidate endomorphisms tried before giving up on a split.
const CANDIDATES: usize = 48;

fn check_characteristic(x: &Rep) -> Result<()> {
    if let FieldSpec::Prime(p) = x.field() {
        let bound = (x.dim() + x.alg.dim()) as u64;
        if p <= bound {
            return Err(Error::Precondition(format!(
                "characteristic {p} must exceed dim X + dim A = {bound}"
            )));
        }
    }
    Ok(())
}

/// Dimension of `End(X) / rad End(X)` and the endomorphism basis.
fn semisimple_quotient_dim(x: &Rep) -> (usize, Vec<RepMap>) {
    let f = x.field();
    let end = x.end();
    let n = end.dim();
    let totals: Vec<Mat> = end.basis.iter().map(RepMap::total).collect();
    let mut gram = Mat::zeros(f, n, n);
    for i in 0..n {
        for j in i..n {
            let t = totals[i].mul(&totals[j]).trace();
            gram.set(i, j, t.clone());
            gram.set(j, i, t);
        }
    }
    (gram.rank(), end.basis)
}

fn candidate(f: FieldSpec, basis: &[RepMap], t: usize) -> RepMap {
    if t < basis.len() {
        return basis[t].clone();
    }
    let mut out = basis[0].scale(&f.zero());
    let mut state = (t as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(1);
    for b in basis {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        let c = (state % 7) as i64 - 3;
        if c != 0 {
            out = out.add(&b.scale(&f.from_i64(c)));
        }
    }
    out
}

/// Split `X` into two nonzero complementary summands, when it decomposes.
fn split_once(x: &Rep) -> Result<Option<(RepMap, RepMap)>> {
    if x.is_zero() {
        return Ok(None);
    }
    let (ss, basis) = semisimple_quotient_dim(x);
    if ss <= 1 {
        return Ok(None);
    }
    let f = x.field();
    let big = x.dims.iter().copied().max().unwrap_or(0).max(1);
    for t in 0..CANDIDATES {
        let phi = candidate(f, &basis, t);
        let mut roots: Vec<Elem> = Vec::new();
        for m in &phi.comps {
            if m.rows() == 0 {
                continue;
            }
            for r in roots_in_field(&charpoly(m), f) {
                if !roots.contains(&r) {
                    roots.push(r);
                }
            }
        }
        for lam in roots {
            let psi = phi.add(&RepMap::identity(x).scale(&f.neg(&lam)));
            let power = RepMap {
                src: x.clone(),
                dst: x.clone(),
                comps: psi.comps.iter().map(|m| m.pow(big)).collect(),
            };
            if power.is_zero() {
                continue;
            }
            let (_, k) = power.kernel();
            let (_, _, i) = power.image();
            return Ok(Some((k, i)));
        }
    }
    Err(Error::Split(format!(
        "module of dimension vector {:?} has a non-split semisimple endomorphism quotient of dimension {ss}",
        x.dims
    )))
}

/// Inclusions of indecomposable modules whose sum is `X`.
fn split_all(x: &Rep) -> Result<Vec<RepMap>> {
    let mut done = Vec::new();
    let mut work = vec![RepMap::identity(x)];
    while let Some(inc) = work.pop() {
        match split_once(&inc.src)? {
            None => {
                if !inc.src.is_zero() {
                    done.push(inc);
                }
            }
            Some((a, b)) => {
                work.push(inc.compose(&a));
                work.push(inc.compose(&b));
            }
        }
    }
    Ok(done)
}

/// An isomorphism between indecomposables, if one exists.
pub(crate) fn iso_indecomposable(u: &Rep, v: &Rep) -> Result<Option<RepMap>> {
    if u.dims != v.dims {
        return Ok(None);
    }
    let hom = u.hom(v)?;
    Ok(hom.basis.iter().find(|h| h.is_iso()).cloned())
}

impl Rep {
    pub fn decompose(&self) -> Result<DecompositionCert> {
        check_characteristic(self)?;
        let parts = split_all(self)?;
        // group into isomorphism classes: (representative, members with iso rep -> member)
        let mut classes: Vec<(Rep, Vec<RepMap>)> = Vec::new();
        for inc in parts {
            let u = inc.src.clone();
            let mut placed = false;
            for (rep, members) in classes.iter_mut() {
                if let Some(h) = iso_indecomposable(rep, &u)? {
                    members.push(inc.compose(&h));
                    placed = true;
                    break;
                }
            }
            if !placed {
                classes.push((u.clone(), vec![inc]));
            }
        }
        classes.sort_by(|a, b| a.0.sort_key().cmp(&b.0.sort_key()));
        let maps: Vec<RepMap> = classes.iter().flat_map(|(_, m)| m.iter().cloned()).collect();
        let witness = RepMap::from_sum(self, &maps)?;
        debug_assert!(witness.is_iso());
        let summands =
            classes.into_iter().map(|(module, m)| Summand { module, multiplicity: m.len() }).collect();
        Ok(DecompositionCert { summands, witness })
    }

    pub fn is_indecomposable(&self) -> Result<bool> {
        check_characteristic(self)?;
        Ok(!self.is_zero() && split_once(self)?.is_none())
    }

    /// Representatives of the isomorphism classes of indecomposable summands.
    pub fn indecomposable_summands(&self) -> Result<Vec<Rep>> {
        Ok(self.decompose()?.modules())
    }

    /// Number of pairwise non-isomorphic indecomposable summands.
    pub fn distinct_summands(&self) -> Result<usize> {
        Ok(self.decompose()?.distinct())
    }

    /// Decomposition-based isomorphism test with a witness `self -> other`.
    pub fn isomorphism(&self, other: &Rep) -> Result<Option<RepMap>> {
        if !self.alg.same(&other.alg) {
            return Err(Error::AlgebraMismatch);
        }
        if self.dims != other.dims {
            return Ok(None);
        }
        let dx = self.decompose()?;
        let dy = other.decompose()?;
        if dx.summands.len() != dy.summands.len() {
            return Ok(None);
        }
        // match classes of self to classes of other
        let mut matched: Vec<(usize, RepMap)> = Vec::new();
        let mut used = vec![false; dy.summands.len()];
        for sx in &dx.summands {
            let mut found = None;
            for (j, sy) in dy.summands.iter().enumerate() {
                if used[j] || sx.multiplicity != sy.multiplicity {
                    continue;
                }
                if let Some(h) = iso_indecomposable(&sx.module, &sy.module)? {
                    found = Some((j, h));
                    break;
                }
            }
            let Some((j, h)) = found else { return Ok(None) };
            used[j] = true;
            matched.push((j, h));
        }
        let alg = self.alg.clone();
        let expand = |d: &DecompositionCert| -> Vec<Rep> {
            d.summands.iter().flat_map(|s| std::iter::repeat(s.module.clone()).take(s.multiplicity)).collect()
        };
        let (_, _, proj_x) = Rep::direct_sum_with_maps(&alg, &expand(&dx))?;
        let (_, inj_y, _) = Rep::direct_sum_with_maps(&alg, &expand(&dy))?;
        let start_y: Vec<usize> = dy
            .summands
            .iter()
            .scan(0, |acc, s| {
                let here = *acc;
                *acc += s.multiplicity;
                Some(here)
            })
            .collect();
        let wx_inv = dx.witness.inverse().ok_or_else(|| Error::Defect("witness not invertible".into()))?;
        let mut total = RepMap::zero(self, other);
        let mut pos = 0;
        for (i, sx) in dx.summands.iter().enumerate() {
            let (j, h) = &matched[i];
            for k in 0..sx.multiplicity {
                let piece = dy.witness.compose(&inj_y[start_y[*j] + k]).compose(h).compose(&proj_x[pos]).compose(&wx_inv);
                total = total.add(&piece);
                pos += 1;
            }
        }
        debug_assert!(total.is_iso() && total.commutes());
        Ok(Some(total))
    }

    pub fn is_isomorphic(&self, other: &Rep) -> Result<bool> {
        Ok(self.isomorphism(other)?.is_some())
    }

    /// Whether every indecomposable summand of `self` is isomorphic to one of `pool`.
    pub fn in_add_of(&self, pool: &[Rep]) -> Result<bool> {
        for u in self.indecomposable_summands()? {
            let mut hit = false;
            for p in pool {
                if iso_indecomposable(&u, p)?.is_some() {
                    hit = true;
                    break;
                }
            }
            if !hit {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether the indecomposable `self` is isomorphic to a member of `pool`.
    pub fn iso_to_any(&self, pool: &[Rep]) -> Result<Option<usize>> {
        for (i, p) in pool.iter().enumerate() {
            if iso_indecomposable(self, p)?.is_some() {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }
}

/// Basic representatives of the union of the indecomposable summands.
pub fn union_of_summands(mods: &[Rep]) -> Result<Vec<Rep>> {
    let mut out: Vec<Rep> = Vec::new();
    for m in mods {
        for u in m.indecomposable_summands()? {
            if u.iso_to_any(&out)?.is_none() {
                out.push(u);
            }
        }
    }
    out.sort_by_key(Rep::sort_key);
    Ok(out)
}
