//! Properties of relative homology, approximations and endomorphism
//! algebras, checked on every almost precluster tilting module found by a
//! small Nakayama sweep.

mod common;

use std::sync::{Arc, OnceLock};

use arthom::approx::{is_dualizing_summand, m_codim, AddClosure, TiltKind};
use arthom::classify::sweep::{sweep_nakayama, AlgebraTables, SweepConfig};
use arthom::classify::{
    self, almost_split_sequence, enumerate_indecomposables, is_almost_cluster, perp_category, Caps, IndecList,
    PerpSide,
};
use arthom::endocat::{endo_algebra, EndoPresentation};
use arthom::error::Error;
use arthom::exactlin::FieldSpec;
use arthom::fixtures;
use arthom::homology::{ext_table, injective_dimension, is_projective, projective_dimension, rel_domdim, DimValue};
use arthom::pathalg::{parse_algebra, Algebra};
use arthom::relhom::SubBifunctor;
use arthom::repmod::{Rep, RepMap};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{add_equal, sum_of};

const CAP: usize = 16;
const EXT_BOUND: usize = 6;

struct Instance {
    alg: Arc<Algebra>,
    universe: IndecList,
    m: Rep,
    n: usize,
    cluster: bool,
    pres: EndoPresentation,
}

fn instances() -> &'static [Instance] {
    static S: OnceLock<Vec<Instance>> = OnceLock::new();
    S.get_or_init(|| {
        let config =
            SweepConfig { max_vertices: 3, max_loewy: 4, degrees: vec![1, 2, 3], field: FieldSpec::Rationals, ..SweepConfig::default() };
        let out = sweep_nakayama(&config).unwrap();
        out.instances
            .iter()
            .map(|inst| {
                let alg = classify::nakayama_algebra(FieldSpec::Rationals, &inst.kupisch).unwrap();
                let universe = AlgebraTables::new(&alg, 512).unwrap().universe;
                let m = sum_of(&alg, &universe, &inst.members);
                let cluster = is_almost_cluster(&m, inst.n, &Caps::default()).unwrap().verdict.is_true();
                let pres = endo_algebra(&m).unwrap();
                Instance { alg, universe, m, n: inst.n, cluster, pres }
            })
            .collect()
    })
}

/// `X` with `Ext_F^i(M, X) = 0` for `1 <= i <= EXT_BOUND`.
fn relative_perp(f: &SubBifunctor, inst: &Instance) -> Vec<Rep> {
    inst.universe
        .items
        .iter()
        .filter(|x| f.ext_table(&inst.m, x, EXT_BOUND).unwrap()[1..].iter().all(|&e| e == 0))
        .cloned()
        .collect()
}

/// Exactness of `0 -> T(Z) -> T(Y) -> T(X) -> 0` for `0 -> X -i-> Y -p-> Z -> 0`.
fn transport_is_exact(pres: &EndoPresentation, i: &RepMap, p: &RepMap) -> bool {
    let tp = pres.transport_map(p).unwrap();
    let ti = pres.transport_map(i).unwrap();
    let middle = tp.dst.dim();
    ti.compose(&tp).is_zero() && tp.is_mono() && ti.is_epi() && tp.rank() + ti.rank() == middle
}

#[test]
fn sweep_provides_instances_of_every_degree() {
    let all = instances();
    for n in 1..=3 {
        assert!(all.iter().any(|i| i.n == n), "no instances of degree {n}");
        assert!(all.iter().any(|i| i.n == n && i.cluster), "no almost {n}-cluster instances");
    }
}

#[test]
fn relative_projective_dimension_and_perp_of_preclusters() {
    for inst in instances().iter().filter(|i| i.n >= 2) {
        let f = SubBifunctor::upper(&inst.m).unwrap();
        assert!(f.pd(&inst.m, CAP).unwrap().at_most(inst.n - 1), "pd_F M over {:?}", inst.alg.to_text());
        let perp_f = relative_perp(&f, inst);
        let perp = perp_category(&inst.m, inst.n - 1, PerpSide::Right, &inst.universe).unwrap();
        assert!(add_equal(&perp_f, &perp));
    }
}

#[test]
fn finite_global_dimension_iff_perp_is_add_m() {
    for inst in instances().iter().filter(|i| i.n >= 2) {
        let f = SubBifunctor::upper(&inst.m).unwrap();
        let perp_f = relative_perp(&f, inst);
        let add_m = inst.m.indecomposable_summands().unwrap();
        let finite = classify::global_dimension(&inst.pres.lambda, CAP).is_finite();
        assert_eq!(finite, add_equal(&perp_f, &add_m), "n = {} over {}", inst.n, inst.alg.to_text());
    }
}

#[test]
fn relative_global_dimension_of_almost_clusters() {
    for inst in instances().iter().filter(|i| i.cluster) {
        let f = SubBifunctor::upper(&inst.m).unwrap();
        let g = f.global_dimension(&inst.universe.items, CAP).unwrap();
        assert!(g.at_most(inst.n - 1), "gld_F = {g} for n = {}", inst.n);
    }
}

#[test]
fn perp_objects_have_relative_add_m_covers() {
    for inst in instances().iter().filter(|i| i.n >= 2) {
        let f = SubBifunctor::upper(&inst.m).unwrap();
        assert!(f.is_tilting(&inst.m, CAP).unwrap());
        for x in relative_perp(&f, inst) {
            let g = f.closure.right_approximation(&x).unwrap();
            assert!(g.map.is_epi());
            let (_, inc) = g.map.kernel();
            assert!(f.is_exact(&inc, &g.map).unwrap(), "cover of {:?}", x.dims());
        }
    }
}

#[test]
fn transport_identifies_perp_with_gorenstein_projectives() {
    for inst in instances().iter().filter(|i| i.n >= 2) {
        let f = SubBifunctor::upper(&inst.m).unwrap();
        let lambda = &inst.pres.lambda;
        let g = classify::gorenstein_dimension(lambda, CAP).unwrap();
        let perp = relative_perp(&f, inst);
        let ts: Vec<Rep> = perp.iter().map(|x| inst.pres.transport(x).unwrap()).collect();
        for (i, t) in ts.iter().enumerate() {
            assert!(classify::is_gorenstein_projective(t, CAP).unwrap(), "g = {g}");
            for (j, u) in ts.iter().enumerate() {
                assert_eq!(t.is_isomorphic(u).unwrap(), i == j);
                assert_eq!(perp[i].hom_dim(&perp[j]).unwrap(), u.hom_dim(t).unwrap());
            }
        }
        // every indecomposable non-Gorenstein-projective transport comes from outside the perp
        for x in &inst.universe.items {
            let t = inst.pres.transport(x).unwrap();
            let in_perp = x.iso_to_any(&perp).unwrap().is_some();
            assert_eq!(classify::is_gorenstein_projective(&t, CAP).unwrap(), in_perp);
        }
    }
}

#[test]
fn almost_two_clusters_transport_onto_projective_dimension_one() {
    let twos: Vec<&Instance> = instances().iter().filter(|i| i.n == 2 && i.cluster).collect();
    assert!(!twos.is_empty());
    for inst in &twos {
        let ts: Vec<Rep> = inst.universe.items.iter().map(|x| inst.pres.transport(x).unwrap()).collect();
        for (i, t) in ts.iter().enumerate() {
            assert!(projective_dimension(t, CAP).at_most(1));
            assert!(ts[..i].iter().all(|u| !u.is_isomorphic(t).unwrap()));
        }
        match enumerate_indecomposables(&inst.pres.lambda, 512) {
            Ok(lu) => {
                let small: Vec<Rep> =
                    lu.items.iter().filter(|y| projective_dimension(y, CAP).at_most(1)).cloned().collect();
                assert!(add_equal(&small, &ts));
            }
            Err(Error::EnumerationUnavailable(_)) => {}
            Err(e) => panic!("{e}"),
        }
    }
    // pairs over the same algebra
    for a in &twos {
        for b in twos.iter().filter(|b| b.alg.same(&a.alg)) {
            let t = a.pres.transport(&b.m).unwrap();
            assert_eq!(a.m.distinct_summands().unwrap(), b.m.distinct_summands().unwrap());
            assert!(arthom::approx::is_tilting(&t, TiltKind::Tilting, CAP).unwrap());
            assert!(projective_dimension(&t, CAP).at_most(1));
            assert_eq!(t.end().dim(), b.pres.lambda.dim());
        }
    }
}

#[test]
fn opposite_endomorphism_algebra_under_small_coresolutions() {
    let mut checked = 0;
    for inst in instances().iter().filter(|i| i.n >= 2) {
        let closure = AddClosure::new(&inst.m).unwrap();
        let res = closure.coresolution(&Rep::regular(&inst.alg), CAP).unwrap();
        let terms: Vec<Rep> = res.terms.iter().take(2).cloned().collect();
        let sum = Rep::direct_sum(&inst.alg, &terms).unwrap();
        if !projective_dimension(&sum, CAP).at_most(1) {
            continue;
        }
        let op = inst.pres.lambda.opposite();
        let report = classify::classify_algebra(&op, inst.n, &Caps::default()).unwrap();
        assert!(report.verdict.is_true(), "n = {}: {:?}", inst.n, report.conditions);
        checked += 1;
    }
    assert!(checked > 0);
}

#[test]
fn relative_ext_agrees_from_both_sides_and_is_bounded_by_ext() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for inst in instances().choose_multiple(&mut rng, 24) {
        for f in [SubBifunctor::upper(&inst.m).unwrap(), SubBifunctor::lower(&inst.m).unwrap()] {
            for _ in 0..6 {
                let x = inst.universe.items.choose(&mut rng).unwrap();
                let y = inst.universe.items.choose(&mut rng).unwrap();
                let proj = f.ext_table(x, y, 3).unwrap();
                assert_eq!(proj, f.ext_table_injective(x, y, 3).unwrap());
                assert!(proj[1] <= ext_table(x, y, 1).unwrap()[1]);
                assert_eq!(proj[0], x.hom_dim(y).unwrap());
            }
        }
    }
}

#[test]
fn transport_detects_relative_exactness() {
    let mut exact = 0;
    let mut other = 0;
    for inst in instances() {
        let f = SubBifunctor::upper(&inst.m).unwrap();
        for z in inst.universe.items.iter().filter(|z| !is_projective(z)) {
            let s = almost_split_sequence(z).unwrap();
            let rel = f.is_exact(&s.mono, &s.epi).unwrap();
            assert_eq!(rel, transport_is_exact(&inst.pres, &s.mono, &s.epi));
            if rel {
                exact += 1;
            } else {
                other += 1;
            }
        }
        for x in &inst.universe.items {
            let res = f.projective_resolution(x, 1).unwrap();
            if let Some((_, inc)) = res.syzygies.first() {
                assert!(transport_is_exact(&inst.pres, inc, &res.edge));
            }
        }
    }
    assert!(exact > 0 && other > 0);
}

#[test]
fn endomorphism_algebra_dimension_and_text_form() {
    for inst in instances() {
        let s = &inst.pres.summands;
        let total: usize = s.iter().flat_map(|a| s.iter().map(move |b| a.hom_dim(b).unwrap())).sum();
        assert_eq!(inst.pres.lambda.dim(), total);
        assert_eq!(inst.pres.lambda.num_vertices(), inst.m.distinct_summands().unwrap());
        let back = parse_algebra(&inst.pres.to_text()).unwrap().algebra;
        assert!(back.same(&inst.pres.lambda));
    }
}

#[test]
fn codimension_over_injectives_is_injective_dimension() {
    for alg in [fixtures::a2(), fixtures::gamma(), fixtures::c3(), fixtures::commutative_square()] {
        let u = enumerate_indecomposables(&alg, 512).unwrap();
        for x in &u.items {
            assert_eq!(m_codim(x, &Rep::dual_regular(&alg), CAP).unwrap(), injective_dimension(x, CAP));
        }
    }
}

#[test]
fn approximations_are_certified_and_minimal() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for inst in instances().choose_multiple(&mut rng, 20) {
        let u = &inst.universe.items;
        let pool: Vec<Rep> = (0..rng.gen_range(1..=3)).map(|_| u.choose(&mut rng).unwrap().clone()).collect();
        let c = AddClosure::of(&inst.alg, &pool).unwrap();
        for x in u.choose_multiple(&mut rng, 4) {
            let l = c.left_approximation(x).unwrap();
            assert!(c.is_left_approximation(&l.map).unwrap() && l.is_minimal_left(&c).unwrap());
            let r = c.right_approximation(x).unwrap();
            assert!(c.is_right_approximation(&r.map).unwrap() && r.is_minimal_right(&c).unwrap());
        }
    }
}

#[test]
fn small_injectives_dualize_when_relative_domdim_is_two() {
    let mut seen = 0;
    // decomposing `A + I` dominates the cost, so only small endomorphism algebras
    for inst in instances().iter().filter(|i| i.pres.lambda.dim() <= 32) {
        let lambda = &inst.pres.lambda;
        let inj = classify::small_injective(lambda, 2);
        if !rel_domdim(&Rep::regular(lambda), &inj, 2).unwrap().at_least(2) {
            continue;
        }
        let y = Rep::direct_sum(lambda, &[Rep::regular(lambda), inj.clone()]).unwrap();
        assert!(is_dualizing_summand(&inj, &y).unwrap());
        seen += 1;
    }
    assert!(seen > 0);
    assert_eq!(DimValue::Finite(2).max(DimValue::InfinityAtCap(3)), DimValue::InfinityAtCap(3));
}

