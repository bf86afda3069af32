use std::sync::Arc;

use crate::exactlin::Elem;
use crate::pathalg::{Algebra, PathElem};
use crate::repmod::{Rep, RepMap};

use super::resolution::projective_resolution;

/// Coordinates in the opposite algebra of the reversal of an element.
pub(crate) fn reverse_coords(alg: &Algebra, op: &Algebra, x: &[Elem]) -> Vec<Elem> {
    let f = alg.field();
    let mut acc = PathElem::zero();
    for (i, c) in x.iter().enumerate() {
        if f.is_zero(c) {
            continue;
        }
        let rev = alg.basis()[i].reversed();
        acc = acc.add(f, &PathElem::monomial(f, rev).scale(f, c));
    }
    let nf = op.normal_form(&acc).expect("reversed words are paths of the opposite quiver");
    op.vector_of(&nf)
}

/// `Hom(-, A)` applied to a map between projectives, as a map between
/// projectives over the opposite algebra. The map `d` goes from the
/// projective with summand vertices `src_labels` to the one with `dst_labels`.
pub(crate) fn dualize_projective_map(
    alg: &Arc<Algebra>,
    d: &RepMap,
    src_labels: &[usize],
    dst_labels: &[usize],
) -> RepMap {
    let op = alg.opposite();
    let f = alg.field();
    let n = alg.num_vertices();
    // offset of each summand of a projective sum at each vertex
    let offsets = |labels: &[usize]| -> Vec<Vec<usize>> {
        let mut acc = vec![0usize; n];
        labels
            .iter()
            .map(|&lv| {
                let here = acc.clone();
                for (u, slot) in acc.iter_mut().enumerate() {
                    *slot += alg.words_between(lv, u).len();
                }
                here
            })
            .collect()
    };
    let src_off = offsets(src_labels);
    let dst_off = offsets(dst_labels);
    let op_src: Vec<Rep> = dst_labels.iter().map(|&v| Rep::projective(&op, v).expect("vertex")).collect();
    let op_dst: Vec<Rep> = src_labels.iter().map(|&v| Rep::projective(&op, v).expect("vertex")).collect();
    let target = Rep::direct_sum(&op, &op_dst).expect("same algebra");
    let mut columns = Vec::with_capacity(dst_labels.len());
    for (b, &ib) in dst_labels.iter().enumerate() {
        let mut blocks = Vec::with_capacity(src_labels.len());
        for (a, &ja) in src_labels.iter().enumerate() {
            let e = alg.words_between(ja, ja).iter().position(|&w| w == alg.idempotent(ja)).expect("trivial path");
            let col = src_off[a][ja] + e;
            let words = alg.words_between(ib, ja);
            let mut c = vec![f.zero(); alg.dim()];
            for (r, &w) in words.iter().enumerate() {
                c[w] = d.comps[ja].get(dst_off[b][ja] + r, col).clone();
            }
            let rc = reverse_coords(alg, &op, &c);
            let in_target: Vec<Elem> = op.words_between(ja, ib).iter().map(|&w| rc[w].clone()).collect();
            blocks.push(op_dst[a].map_from_projective(ib, &in_target));
        }
        let into = if blocks.is_empty() {
            RepMap::zero(&op_src[b], &target)
        } else {
            RepMap::into_sum(&op_src[b], &blocks).expect("same algebra")
        };
        columns.push(RepMap { src: into.src, dst: target.clone(), comps: into.comps });
    }
    if columns.is_empty() {
        let src = Rep::zero(&op);
        return RepMap::zero(&src, &target);
    }
    RepMap::from_sum(&target, &columns).expect("same algebra")
}

/// The map `Hom(P_0, A) -> Hom(P_1, A)` from a minimal presentation.
fn presentation_dual(x: &Rep) -> RepMap {
    let alg = x.alg();
    let res = projective_resolution(x, 1);
    let op = alg.opposite();
    if res.terms.is_empty() {
        let z = Rep::zero(&op);
        return RepMap::zero(&z, &z);
    }
    let p0_labels = &res.labels[0];
    let (p1_labels, d) = match (res.labels.get(1), res.diffs.first()) {
        (Some(l), Some(d)) => (l.clone(), d.clone()),
        _ => {
            let p0 = Rep::direct_sum(
                &op,
                &p0_labels.iter().map(|&v| Rep::projective(&op, v).expect("vertex")).collect::<Vec<_>>(),
            )
            .expect("same algebra");
            return RepMap::zero(&p0, &Rep::zero(&op));
        }
    };
    dualize_projective_map(alg, &d, &p1_labels, p0_labels)
}

/// `Tr X`, a module over the opposite algebra.
pub fn transpose(x: &Rep) -> Rep {
    presentation_dual(x).cokernel().0
}

/// `nu X = D Hom(X, A)`.
pub fn nakayama(x: &Rep) -> Rep {
    presentation_dual(x).kernel().0.dual()
}

/// `tau X = D Tr X`.
pub fn tau(x: &Rep) -> Rep {
    transpose(x).dual()
}

/// `tau^- X = Tr D X`.
pub fn tau_inverse(x: &Rep) -> Rep {
    transpose(&x.dual())
}

/// `Hom(X, A)` as a module over the opposite algebra.
pub fn hom_to_regular(x: &Rep) -> Rep {
    presentation_dual(x).kernel().0
}
