use super::*;
use crate::fixtures;

fn c3_module(dims: Vec<usize>, maps: &[(&str, Vec<Vec<i64>>)]) -> Rep {
    let alg = fixtures::c3();
    let f = alg.field();
    let q = alg.quiver();
    let mut action: Vec<Mat> = q.arrows.iter().map(|a| Mat::zeros(f, dims[a.target], dims[a.source])).collect();
    for (name, rows) in maps {
        action[q.arrow_index(name).unwrap()] = Mat::from_i64_rows(f, rows);
    }
    Rep::new(&alg, dims, action).unwrap()
}

#[test]
fn standard_dimensions() {
    let a2 = fixtures::a2();
    assert_eq!(Rep::projective(&a2, 0).unwrap().dims(), &[1, 1]);
    assert_eq!(Rep::injective(&a2, 0).unwrap(), Rep::simple(&a2, 0).unwrap());
    let c3 = fixtures::c3();
    assert_eq!(Rep::projective(&c3, 1).unwrap().dims(), &[1, 1, 1]);
    assert_eq!(Rep::projective(&c3, 2).unwrap().dims(), &[1, 1, 2]);
    assert_eq!(Rep::injective(&c3, 2).unwrap().dims(), &[1, 1, 2]);
    for alg in [a2, c3, fixtures::gamma(), fixtures::commutative_square()] {
        assert_eq!(Rep::regular(&alg).dim(), alg.dim());
        assert_eq!(Rep::dual_regular(&alg).dim(), alg.dim());
    }
}

#[test]
fn relation_violation_is_named() {
    let alg = fixtures::c3();
    let f = alg.field();
    let one = Mat::from_i64_rows(f, &[vec![1]]);
    let err = Rep::new(&alg, vec![1, 1, 1], vec![one.clone(), one.clone(), one]).unwrap_err();
    match err {
        Error::RelationViolated(r) => assert_eq!(r, "g*b*a"),
        other => panic!("{other}"),
    }
    assert!(Rep::new(&alg, vec![0, 0, 0], zero_action(&alg, &[0, 0, 0])).is_ok());
}

#[test]
fn hom_dimensions() {
    let c3 = fixtures::c3();
    let p1 = Rep::projective(&c3, 0).unwrap();
    let i1 = Rep::injective(&c3, 0).unwrap();
    assert_eq!(p1.hom_dim(&i1).unwrap(), 1);
    let a2 = fixtures::a2();
    let s1 = Rep::simple(&a2, 0).unwrap();
    let s2 = Rep::simple(&a2, 1).unwrap();
    assert_eq!(s1.hom_dim(&s2).unwrap(), 0);
    for alg in [fixtures::c3(), fixtures::gamma(), fixtures::commutative_square()] {
        let x = Rep::regular(&alg).power(1);
        let d = Rep::dual_regular(&alg);
        for j in 0..alg.num_vertices() {
            let ij = Rep::injective(&alg, j).unwrap();
            let pj = Rep::projective(&alg, j).unwrap();
            assert_eq!(x.hom_dim(&ij).unwrap(), x.dims()[j]);
            assert_eq!(pj.hom_dim(&d).unwrap(), d.dims()[j]);
        }
    }
}

#[test]
fn cokernel_of_envelope_in_c3() {
    let c3 = fixtures::c3();
    let p1 = Rep::projective(&c3, 0).unwrap();
    let env = p1.injective_envelope();
    assert_eq!(env.vertices, vec![2]);
    assert!(env.map.is_mono() && env.map.commutes());
    let (c, proj) = env.map.cokernel();
    assert_eq!(c.dims(), &[0, 0, 1]);
    assert!(proj.commutes() && proj.is_epi());
    assert!(c.is_isomorphic(&Rep::simple(&c3, 2).unwrap()).unwrap());
}

#[test]
fn kernel_image_dims_add() {
    let c3 = fixtures::c3();
    let x = Rep::regular(&c3);
    let y = Rep::dual_regular(&c3);
    for h in x.hom(&y).unwrap().basis.iter().take(6) {
        let (k, inc) = h.kernel();
        let (im, co, inc2) = h.image();
        let (c, _) = h.cokernel();
        assert!(inc.commutes() && co.commutes() && inc2.commutes());
        for v in 0..3 {
            assert_eq!(k.dims()[v] + im.dims()[v], x.dims()[v]);
            assert_eq!(im.dims()[v] + c.dims()[v], y.dims()[v]);
        }
        assert_eq!(inc2.compose(&co).comps, h.comps);
    }
    let id = RepMap::identity(&x);
    assert!(id.kernel().0.is_zero());
}

#[test]
fn decompose_regular() {
    let c3 = fixtures::c3();
    let cert = Rep::regular(&c3).decompose().unwrap();
    assert_eq!(cert.summands.len(), 3);
    assert!(cert.summands.iter().all(|s| s.multiplicity == 1));
    assert!(cert.witness.is_iso() && cert.witness.commutes());
    for v in 0..3 {
        let p = Rep::projective(&c3, v).unwrap();
        assert!(p.iso_to_any(&cert.modules()).unwrap().is_some());
    }
    let a2 = fixtures::a2();
    let da = Rep::dual_regular(&a2).power(2);
    let cert = da.decompose().unwrap();
    assert_eq!(cert.summands.len(), 2);
    assert!(cert.summands.iter().all(|s| s.multiplicity == 2));
}

#[test]
fn isomorphisms() {
    let c3 = fixtures::c3();
    let p2 = Rep::projective(&c3, 1).unwrap();
    let i1 = Rep::injective(&c3, 0).unwrap();
    let w = p2.isomorphism(&i1).unwrap().expect("P(2) and I(1) are isomorphic");
    assert!(w.is_iso() && w.commutes());
    let s1 = Rep::simple(&c3, 0).unwrap();
    let s2 = Rep::simple(&c3, 1).unwrap();
    assert!(!s1.is_isomorphic(&s2).unwrap());
    let x = Rep::direct_sum(&c3, &[s1.clone(), i1.clone()]).unwrap();
    assert_eq!(x.dims(), &[2, 1, 1]);
    let y = Rep::direct_sum(&c3, &[p2, s1]).unwrap();
    let w = x.isomorphism(&y).unwrap().unwrap();
    assert!(w.is_iso() && w.commutes());
}

#[test]
fn fixture_modules() {
    let x31 = c3_module(vec![1, 0, 1], &[("g", vec![vec![1]])]);
    assert!(x31.is_indecomposable().unwrap());
    let x12 = c3_module(vec![1, 1, 0], &[("a", vec![vec![1]])]);
    assert!(x12.is_indecomposable().unwrap());
    assert_eq!(x12.top_dims(), vec![1, 0, 0]);
}

#[test]
fn covers_and_socles() {
    for alg in [fixtures::c3(), fixtures::gamma(), fixtures::commutative_square()] {
        for v in 0..alg.num_vertices() {
            let s = Rep::simple(&alg, v).unwrap();
            let cov = s.projective_cover();
            assert_eq!(cov.vertices, vec![v]);
            assert!(cov.map.is_epi() && cov.map.commutes());
            let p = Rep::projective(&alg, v).unwrap();
            let pc = p.projective_cover();
            assert!(pc.map.is_iso());
            let i = Rep::injective(&alg, v).unwrap();
            let mut e = vec![0; alg.num_vertices()];
            e[v] = 1;
            assert_eq!(i.socle_dims(), e);
            assert_eq!(p.top_dims(), e);
            let env = i.injective_envelope();
            assert!(env.map.is_iso() && env.map.commutes());
        }
        let da = Rep::dual_regular(&alg);
        let cov = da.projective_cover();
        let (_, inc) = cov.map.kernel();
        let (_, rad_inc) = cov.map.src.radical();
        // the kernel of a projective cover lies in the radical
        for v in 0..alg.num_vertices() {
            let d = cov.map.src.dims()[v];
            let both = Mat::hstack(&[&rad_inc.comps[v], &inc.comps[v]], alg.field(), d);
            assert_eq!(both.rank(), rad_inc.comps[v].rank());
        }
    }
}

#[test]
fn duality() {
    let g = fixtures::gamma();
    for v in 0..g.num_vertices() {
        let p = Rep::projective(&g, v).unwrap();
        let dp = p.dual();
        assert_eq!(dp.dim(), p.dim());
        let iop = Rep::injective(dp.alg(), v).unwrap();
        assert!(dp.is_isomorphic(&iop).unwrap());
        assert_eq!(dp.dual(), p);
        let s = Rep::simple(&g, v).unwrap().dual();
        assert_eq!(s, Rep::simple(&g.opposite(), v).unwrap());
    }
}

#[test]
fn file_modules_build() {
    let file = crate::pathalg::parse_algebra(fixtures::C3).unwrap();
    let mods = file_modules(&file).unwrap();
    assert_eq!(mods.len(), 2);
    let m = resolve_module(&file, "M").unwrap();
    assert_eq!(m.dim(), 1 + 2 + 10);
    assert_eq!(m.distinct_summands().unwrap(), 5);
    let s = resolve_module(&file, "S(2)").unwrap();
    assert_eq!(s.dims(), &[0, 1, 0]);
    assert!(matches!(resolve_module(&file, "Q"), Err(Error::UnknownModule(_))));
}

#[test]
fn small_characteristic_rejected() {
    let text = "field GF 3\nvertices 1 2\narrow a : 1 -> 2\n";
    let alg = crate::pathalg::parse_algebra(text).unwrap().algebra;
    let p = Rep::projective(&alg, 0).unwrap();
    assert!(matches!(p.decompose(), Err(Error::Precondition(_))));
    let text = "field GF 101\nvertices 1 2\narrow a : 1 -> 2\n";
    let alg = crate::pathalg::parse_algebra(text).unwrap().algebra;
    assert_eq!(Rep::regular(&alg).decompose().unwrap().summands.len(), 2);
}

#[test]
fn sum_expressions_split_before_atoms() {
    let file = crate::pathalg::parse_algebra(fixtures::GAMMA).unwrap();
    let x = resolve_module(&file, "I(2)+I(3) + S(1)").unwrap();
    let parts = ["I(2)", "I(3)", "S(1)"].map(|n| resolve_module(&file, n).unwrap());
    assert!(x.is_isomorphic(&Rep::direct_sum(&file.algebra, &parts).unwrap()).unwrap());
}
