use serde::Serialize;

use crate::error::{Error, Result};
use crate::homology::{ar_translate, ext_table, projective_resolution, TauKind};
use crate::repmod::{Rep, RepMap};

/// Dimension bookkeeping for
/// `0 -> Hom(M,M) -> Hom(P_0,M) -> ... -> Hom(P_n,M) -> D Hom(M, tau_n M) -> 0`
/// built from the minimal projective resolution of `M`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomSequence {
    pub n: usize,
    /// `dim Hom(M,M), dim Hom(P_0,M), ..., dim Hom(P_n,M)`.
    pub node_dims: Vec<usize>,
    /// `ranks[k]` is the rank of the map leaving node `k`.
    pub ranks: Vec<usize>,
    /// `dim Hom(M, tau_n M)`.
    pub tail_dim: usize,
}

impl HomSequence {
    /// Injective at the first node, exact at each interior node, and the
    /// last cokernel has the dimension of the tail.
    pub fn is_exact(&self) -> bool {
        let k = self.node_dims.len();
        self.ranks[0] == self.node_dims[0]
            && (1..k - 1).all(|i| self.node_dims[i] - self.ranks[i] == self.ranks[i - 1])
            && self.node_dims[k - 1] - self.ranks[k - 2] == self.tail_dim
    }
}

/// Requires `Ext^i(M,M) = 0` for `1 <= i <= n-1` and `n >= 1`.
pub fn hom_sequence(m: &Rep, n: usize, cap: usize) -> Result<HomSequence> {
    if n == 0 {
        return Err(Error::Precondition("n must be at least 1".into()));
    }
    if n >= 2 && ext_table(m, m, n - 1)?[1..].iter().any(|&e| e != 0) {
        return Err(Error::Precondition("Ext^i(M,M) must vanish for 1 <= i <= n-1".into()));
    }
    let alg = m.alg();
    let res = projective_resolution(m, cap.max(n + 1));
    let zero = Rep::zero(alg);
    let term = |k: usize| res.terms.get(k).cloned().unwrap_or_else(|| zero.clone());
    // maps P_0 -> M and P_k -> P_{k-1}
    let mut maps: Vec<RepMap> = vec![res.edge.clone()];
    for k in 1..=n {
        maps.push(res.diffs.get(k - 1).cloned().unwrap_or_else(|| RepMap::zero(&term(k), &term(k - 1))));
    }
    let mut spaces = vec![m.hom(m)?];
    for k in 0..=n {
        spaces.push(term(k).hom(m)?);
    }
    let ranks = (0..=n).map(|k| spaces[k].precompose_matrix(&maps[k], &spaces[k + 1]).rank()).collect();
    let tn = ar_translate(m, TauKind::Higher(n))?;
    Ok(HomSequence { n, node_dims: spaces.iter().map(|h| h.dim()).collect(), ranks, tail_dim: m.hom_dim(&tn)? })
}
