mod common;

use std::sync::{Arc, OnceLock};

use arthom::classify::{enumerate_indecomposables, IndecList};
use arthom::exactlin::Mat;
use arthom::fixtures;
use arthom::pathalg::{parse_algebra, Algebra};
use arthom::repmod::{resolve_module, Rep, RepMap};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{multiplicities, scramble, sum_of};

struct Setting {
    alg: Arc<Algebra>,
    universe: IndecList,
    text: &'static str,
}

fn settings() -> &'static [Setting] {
    static S: OnceLock<Vec<Setting>> = OnceLock::new();
    S.get_or_init(|| {
        [(fixtures::A2, fixtures::a2()), (fixtures::GAMMA, fixtures::gamma()), (fixtures::C3, fixtures::c3()), (fixtures::SQUARE, fixtures::commutative_square())]
            .into_iter()
            .map(|(text, alg)| {
                let universe = enumerate_indecomposables(&alg, 512).unwrap();
                universe.require_complete().unwrap();
                Setting { alg, universe, text }
            })
            .collect()
    })
}

fn random_sum(rng: &mut ChaCha8Rng, s: &Setting, max: usize) -> (Vec<usize>, Rep) {
    let idx: Vec<usize> = (0..rng.gen_range(1..=max)).map(|_| rng.gen_range(0..s.universe.len())).collect();
    let x = scramble(rng, &sum_of(&s.alg, &s.universe, &idx));
    (idx, x)
}

/// A random combination of a Hom basis.
fn random_map(rng: &mut ChaCha8Rng, x: &Rep, y: &Rep) -> RepMap {
    let hom = x.hom(y).unwrap();
    let f = x.field();
    let c: Vec<_> = (0..hom.dim()).map(|_| f.from_i64(rng.gen_range(-2..=2))).collect();
    hom.element(&c)
}

fn setting(k: usize) -> &'static Setting {
    &settings()[k % settings().len()]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn hom_into_injectives_and_out_of_projectives_counts_dimensions(k in 0usize..4, seed in any::<u64>()) {
        let s = setting(k);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (_, x) = random_sum(&mut rng, s, 3);
        for v in 0..s.alg.num_vertices() {
            prop_assert_eq!(x.hom_dim(&Rep::injective(&s.alg, v).unwrap()).unwrap(), x.dims()[v]);
            prop_assert_eq!(Rep::projective(&s.alg, v).unwrap().hom_dim(&x).unwrap(), x.dims()[v]);
        }
    }

    #[test]
    fn decomposition_witness_is_an_isomorphism(k in 0usize..4, seed in any::<u64>()) {
        let s = setting(k);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (idx, x) = random_sum(&mut rng, s, 4);
        let cert = x.decompose().unwrap();
        prop_assert!(cert.witness.is_iso());
        prop_assert_eq!(cert.total(), idx.len());
        let parts: Vec<Rep> = cert.summands.iter().flat_map(|p| std::iter::repeat(p.module.clone()).take(p.multiplicity)).collect();
        prop_assert!(Rep::direct_sum(&s.alg, &parts).unwrap().is_isomorphic(&x).unwrap());
        for p in &cert.summands {
            prop_assert!(p.module.is_indecomposable().unwrap());
        }
    }

    #[test]
    fn krull_schmidt_is_additive(k in 0usize..4, seed in any::<u64>()) {
        let s = setting(k);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (ix, x) = random_sum(&mut rng, s, 3);
        let (iy, y) = random_sum(&mut rng, s, 3);
        let xy = scramble(&mut rng, &Rep::direct_sum(&s.alg, &[x.clone(), y.clone()]).unwrap());
        let mut expected = vec![0; s.universe.len()];
        for i in ix.iter().chain(&iy) {
            expected[*i] += 1;
        }
        prop_assert_eq!(multiplicities(&s.universe, &xy), expected);
    }

    #[test]
    fn kernel_image_cokernel_dimensions_add_up(k in 0usize..4, seed in any::<u64>()) {
        let s = setting(k);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (_, x) = random_sum(&mut rng, s, 3);
        let (_, y) = random_sum(&mut rng, s, 3);
        let f = random_map(&mut rng, &x, &y);
        prop_assert!(f.commutes());
        let (ker, inc) = f.kernel();
        let (im, coro, im_inc) = f.image();
        let (cok, proj) = f.cokernel();
        for v in 0..s.alg.num_vertices() {
            prop_assert_eq!(ker.dims()[v] + im.dims()[v], x.dims()[v]);
            prop_assert_eq!(im.dims()[v] + cok.dims()[v], y.dims()[v]);
        }
        prop_assert!(f.compose(&inc).is_zero());
        prop_assert!(proj.compose(&f).is_zero());
        prop_assert!(inc.is_mono() && proj.is_epi() && coro.is_epi() && im_inc.is_mono());
        prop_assert_eq!(im_inc.compose(&coro).comps, f.comps);
    }

    #[test]
    fn subquotients_satisfy_the_relations(k in 0usize..4, seed in any::<u64>()) {
        let s = setting(k);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (_, x) = random_sum(&mut rng, s, 3);
        let (_, y) = random_sum(&mut rng, s, 3);
        let f = random_map(&mut rng, &x, &y);
        for m in [f.kernel().0, f.cokernel().0, f.image().0] {
            let again = Rep::new(&s.alg, m.dims().to_vec(), m.actions().to_vec());
            prop_assert!(again.is_ok());
        }
    }

    #[test]
    fn covers_and_envelopes_are_minimal(k in 0usize..4, seed in any::<u64>()) {
        let s = setting(k);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (_, x) = random_sum(&mut rng, s, 3);
        let cover = x.projective_cover();
        prop_assert!(cover.map.is_epi());
        prop_assert_eq!(cover.multiplicities(x.dims().len()), x.top_dims());
        // the kernel lies in the radical of the cover
        let p = cover.map.src.clone();
        let (kernel, inc) = cover.map.kernel();
        let (_, rad_inc) = p.radical();
        if !kernel.is_zero() {
            prop_assert!(inc.lift_through(&rad_inc).unwrap().is_some());
        }
        let env = x.injective_envelope();
        prop_assert!(env.map.is_mono());
        prop_assert_eq!(env.multiplicities(x.dims().len()), x.socle_dims());
        // the image contains the socle of the envelope
        let (_, soc_inc) = env.map.dst.socle();
        prop_assert!(soc_inc.lift_through(&env.map).unwrap().is_some());
    }

    #[test]
    fn declarations_round_trip_through_the_parser(k in 0usize..4, seed in any::<u64>()) {
        let s = setting(k);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (_, x) = random_sum(&mut rng, s, 3);
        let text = format!("{}{}\n", s.text, x.to_decl("Y"));
        let file = parse_algebra(&text).unwrap();
        let y = resolve_module(&file, "Y").unwrap();
        prop_assert_eq!(y.dims(), x.dims());
        prop_assert_eq!(y.actions(), x.actions());
    }

    #[test]
    fn random_actions_are_accepted_exactly_when_relations_vanish(k in 0usize..4, seed in any::<u64>()) {
        let s = setting(k);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = s.alg.field();
        let dims: Vec<usize> = (0..s.alg.num_vertices()).map(|_| rng.gen_range(0..=2)).collect();
        let action: Vec<Mat> = s.alg.quiver().arrows.iter().map(|a| {
            let rows: Vec<Vec<i64>> = (0..dims[a.target]).map(|_| (0..dims[a.source]).map(|_| rng.gen_range(-1..=1)).collect()).collect();
            if rows.is_empty() { Mat::zeros(f, 0, dims[a.source]) } else { Mat::from_i64_rows(f, &rows) }
        }).collect();
        let tentative = s.alg.relations().iter().all(|r| {
            let (src, tgt) = (r.terms[0].1.source, r.terms[0].1.target);
            let mut total = Mat::zeros(f, dims[tgt], dims[src]);
            for (c, p) in &r.terms {
                let mut m = Mat::identity(f, dims[src]);
                for &a in &p.arrows {
                    m = action[a].mul(&m);
                }
                total.add_scaled(c, &m);
            }
            total.is_zero()
        });
        prop_assert_eq!(Rep::new(&s.alg, dims, action).is_ok(), tentative);
    }
}

#[test]
fn zero_module_is_a_unit_for_direct_sums() {
    for s in settings() {
        let x = &s.universe.items[s.universe.len() - 1];
        let z = Rep::zero(&s.alg);
        assert!(Rep::direct_sum(&s.alg, &[x.clone(), z.clone()]).unwrap().is_isomorphic(x).unwrap());
        assert!(z.in_add_of(&[]).unwrap());
        assert_eq!(z.decompose().unwrap().total(), 0);
    }
}
