use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::repmod::{Rep, RepMap};

/// Default bound on resolution lengths.
pub const DEFAULT_CAP: usize = 32;

/// A homological dimension, possibly unbounded within the cap it was
/// computed under.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DimValue {
    Finite(usize),
    InfinityAtCap(usize),
}

impl DimValue {
    pub fn is_finite(&self) -> bool {
        matches!(self, DimValue::Finite(_))
    }

    pub fn finite(&self) -> Option<usize> {
        match self {
            DimValue::Finite(v) => Some(*v),
            DimValue::InfinityAtCap(_) => None,
        }
    }

    /// `self <= bound`, treating infinity as larger than every integer.
    pub fn at_most(&self, bound: usize) -> bool {
        matches!(self, DimValue::Finite(v) if *v <= bound)
    }

    /// `self >= bound`.
    pub fn at_least(&self, bound: usize) -> bool {
        match self {
            DimValue::Finite(v) => *v >= bound,
            DimValue::InfinityAtCap(_) => true,
        }
    }

    pub fn max(self, other: DimValue) -> DimValue {
        match (self, other) {
            (DimValue::Finite(a), DimValue::Finite(b)) => DimValue::Finite(a.max(b)),
            (DimValue::InfinityAtCap(a), DimValue::InfinityAtCap(b)) => DimValue::InfinityAtCap(a.min(b)),
            (DimValue::InfinityAtCap(c), _) | (_, DimValue::InfinityAtCap(c)) => DimValue::InfinityAtCap(c),
        }
    }

    pub fn min(self, other: DimValue) -> DimValue {
        match (self, other) {
            (DimValue::Finite(a), DimValue::Finite(b)) => DimValue::Finite(a.min(b)),
            (DimValue::Finite(a), _) | (_, DimValue::Finite(a)) => DimValue::Finite(a),
            (DimValue::InfinityAtCap(a), DimValue::InfinityAtCap(b)) => DimValue::InfinityAtCap(a.max(b)),
        }
    }
}

impl fmt::Display for DimValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DimValue::Finite(v) => write!(f, "{v}"),
            DimValue::InfinityAtCap(c) => write!(f, "inf (cap {c})"),
        }
    }
}

impl Serialize for DimValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            DimValue::Finite(v) => s.serialize_u64(*v as u64),
            DimValue::InfinityAtCap(c) => {
                use serde::ser::SerializeMap;
                let mut m = s.serialize_map(Some(1))?;
                m.serialize_entry("infinity_at_cap", c)?;
                m.end()
            }
        }
    }
}

impl<'de> Deserialize<'de> for DimValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<DimValue, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Wire {
            Finite(usize),
            Capped { infinity_at_cap: usize },
        }
        Ok(match Wire::deserialize(d)? {
            Wire::Finite(v) => DimValue::Finite(v),
            Wire::Capped { infinity_at_cap } => DimValue::InfinityAtCap(infinity_at_cap),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ResolutionKind {
    Projective,
    Injective,
    Coresolution,
    FResolution,
    FCoresolution,
}

/// A (co)resolution `... -> T_1 -> T_0 -> X` or `X -> T_0 -> T_1 -> ...`.
///
/// `diffs[k]` joins `terms[k+1]` and `terms[k]` (in the direction of the
/// resolution), `edge` joins `terms[0]` and the resolved module, and
/// `syzygies[k]` is the (co)kernel reached after `k+1` steps with its map
/// to or from `terms[k]`.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub kind: ResolutionKind,
    pub module: Rep,
    pub terms: Vec<Rep>,
    pub edge: RepMap,
    pub diffs: Vec<RepMap>,
    pub syzygies: Vec<(Rep, RepMap)>,
    /// Vertex of each indecomposable summand of each term, when the terms
    /// are projective or injective.
    pub labels: Vec<Vec<usize>>,
    /// Set when the cap was reached before the resolution terminated.
    pub truncated_at: Option<usize>,
    /// Set when every step is a projective cover, injective envelope or
    /// minimal approximation.
    pub minimal: bool,
}

impl Resolution {
    /// Index of the last nonzero term, or `None` when `X = 0`.
    pub fn length(&self) -> DimValue {
        match self.truncated_at {
            Some(c) => DimValue::InfinityAtCap(c),
            None => DimValue::Finite(self.terms.len().saturating_sub(1)),
        }
    }

    pub fn is_coresolution(&self) -> bool {
        matches!(self.kind, ResolutionKind::Injective | ResolutionKind::Coresolution | ResolutionKind::FCoresolution)
    }

    /// Composites of consecutive maps vanish and every interior position is
    /// exact, verified by image containment plus equal dimensions.
    pub fn verify(&self) -> bool {
        let mut chain: Vec<RepMap> = Vec::new();
        if self.is_coresolution() {
            // X -> T_0 -> T_1 -> ...
            chain.push(self.edge.clone());
            chain.extend(self.diffs.iter().cloned());
            if !self.edge.is_mono() {
                return false;
            }
        } else {
            // ... -> T_1 -> T_0 -> X, written in the direction of the maps
            let mut rev: Vec<RepMap> = self.diffs.iter().rev().cloned().collect();
            rev.push(self.edge.clone());
            chain = rev;
            if !self.edge.is_epi() {
                return false;
            }
            if self.truncated_at.is_none() {
                if let Some(first) = chain.first() {
                    if !first.is_mono() {
                        return false;
                    }
                }
            }
        }
        if !chain.iter().all(RepMap::commutes) {
            return false;
        }
        for w in chain.windows(2) {
            let (f, g) = (&w[0], &w[1]);
            if !g.compose(f).is_zero() {
                return false;
            }
            // rank f + rank g = dim of the middle term (per vertex) with g f = 0
            for v in 0..f.dst.dims().len() {
                if f.comps[v].rank() + g.comps[v].rank() != f.dst.dims()[v] {
                    return false;
                }
            }
        }
        if self.is_coresolution() && self.truncated_at.is_none() {
            if let Some(last) = chain.last() {
                if !last.is_epi() {
                    return false;
                }
            }
        }
        true
    }
}

/// Minimal projective resolution computed through at most `cap + 1` terms.
pub fn projective_resolution(x: &Rep, cap: usize) -> Resolution {
    let mut terms = Vec::new();
    let mut labels = Vec::new();
    let mut diffs = Vec::new();
    let mut syzygies: Vec<(Rep, RepMap)> = Vec::new();
    let cover = x.projective_cover();
    let edge = cover.map.clone();
    let mut current = cover;
    let mut truncated_at = None;
    loop {
        let k = terms.len();
        terms.push(current.map.src.clone());
        labels.push(current.vertices.clone());
        let (ker, inc) = current.map.kernel();
        syzygies.push((ker.clone(), inc.clone()));
        if ker.is_zero() {
            break;
        }
        if k >= cap {
            truncated_at = Some(cap);
            break;
        }
        let next = ker.projective_cover();
        diffs.push(inc.compose(&next.map));
        current = next;
    }
    if x.is_zero() {
        terms.clear();
        labels.clear();
    }
    Resolution {
        kind: ResolutionKind::Projective,
        module: x.clone(),
        terms,
        edge,
        diffs,
        syzygies,
        labels,
        truncated_at,
        minimal: true,
    }
}

/// Minimal injective resolution computed through at most `cap + 1` terms.
pub fn injective_resolution(x: &Rep, cap: usize) -> Resolution {
    let mut terms = Vec::new();
    let mut labels = Vec::new();
    let mut diffs = Vec::new();
    let mut syzygies: Vec<(Rep, RepMap)> = Vec::new();
    let env = x.injective_envelope();
    let edge = env.map.clone();
    let mut current = env;
    let mut truncated_at = None;
    loop {
        let k = terms.len();
        terms.push(current.map.dst.clone());
        labels.push(current.vertices.clone());
        let (cok, proj) = current.map.cokernel();
        syzygies.push((cok.clone(), proj.clone()));
        if cok.is_zero() {
            break;
        }
        if k >= cap {
            truncated_at = Some(cap);
            break;
        }
        let next = cok.injective_envelope();
        diffs.push(next.map.compose(&proj));
        current = next;
    }
    if x.is_zero() {
        terms.clear();
        labels.clear();
    }
    Resolution {
        kind: ResolutionKind::Injective,
        module: x.clone(),
        terms,
        edge,
        diffs,
        syzygies,
        labels,
        truncated_at,
        minimal: true,
    }
}

/// `k`-th syzygy. `Omega^0 X` is `X` with its projective summands removed.
pub fn syzygy(x: &Rep, k: usize) -> crate::error::Result<Rep> {
    if k == 0 {
        return super::without_projective_summands(x);
    }
    let res = projective_resolution(x, k);
    Ok(res.syzygies.get(k - 1).map(|s| s.0.clone()).unwrap_or_else(|| Rep::zero(x.alg())))
}

/// `k`-th cosyzygy. At `k = 0` the injective summands are removed.
pub fn cosyzygy(x: &Rep, k: usize) -> crate::error::Result<Rep> {
    if k == 0 {
        return super::without_injective_summands(x);
    }
    let res = injective_resolution(x, k);
    Ok(res.syzygies.get(k - 1).map(|s| s.0.clone()).unwrap_or_else(|| Rep::zero(x.alg())))
}
