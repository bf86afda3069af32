use super::*;
use crate::fixtures;
use crate::homology::{injective_dimension, DEFAULT_CAP};

fn c3_m() -> (Arc<Algebra>, Rep, Rep) {
    let file = crate::pathalg::parse_algebra(fixtures::C3).unwrap();
    let m = crate::repmod::resolve_module(&file, "M").unwrap();
    let x31 = crate::repmod::resolve_module(&file, "X31").unwrap();
    (file.algebra, m, x31)
}

#[test]
fn membership() {
    let g = fixtures::gamma();
    let parts: Vec<Rep> = (1..6).map(|v| Rep::injective(&g, v).unwrap()).collect();
    let i = AddClosure::of(&g, &parts).unwrap();
    assert!(!i.contains(&Rep::injective(&g, 0).unwrap()).unwrap());
    assert!(i.contains(&Rep::zero(&g)).unwrap());
    let c3 = fixtures::c3();
    let da = AddClosure::new(&Rep::dual_regular(&c3)).unwrap();
    assert!(da.contains(&Rep::projective(&c3, 1).unwrap()).unwrap());
}

#[test]
fn left_approximation_of_p1() {
    let (c3, m, _) = c3_m();
    let c = AddClosure::new(&m).unwrap();
    assert_eq!(c.len(), 5);
    let p1 = Rep::projective(&c3, 0).unwrap();
    let ap = c.left_approximation(&p1).unwrap();
    assert!(c.is_left_approximation(&ap.map).unwrap());
    assert!(ap.is_minimal_left(&c).unwrap());
    let target = Rep::direct_sum(&c3, &[Rep::injective(&c3, 2).unwrap(), Rep::simple(&c3, 0).unwrap()]).unwrap();
    assert!(ap.map.dst.is_isomorphic(&target).unwrap());
    assert!(ap.map.is_mono());
    let zero = c.left_approximation(&Rep::zero(&c3)).unwrap();
    assert!(zero.map.dst.is_zero());
    // a member approximates to an isomorphism
    let s1 = Rep::simple(&c3, 0).unwrap();
    assert!(c.left_approximation(&s1).unwrap().map.is_iso());
}

#[test]
fn coresolution_of_a() {
    let (c3, m, x31) = c3_m();
    let c = AddClosure::new(&m).unwrap();
    let res = c.coresolution(&Rep::regular(&c3), DEFAULT_CODIM_CAP).unwrap();
    assert!(res.verify());
    assert_eq!(res.length(), DimValue::Finite(1));
    let c0 = Rep::direct_sum(
        &c3,
        &[
            Rep::projective(&c3, 1).unwrap(),
            Rep::projective(&c3, 2).unwrap(),
            Rep::injective(&c3, 2).unwrap(),
            Rep::simple(&c3, 0).unwrap(),
        ],
    )
    .unwrap();
    assert!(res.terms[0].is_isomorphic(&c0).unwrap());
    assert!(res.terms[1].is_isomorphic(&x31).unwrap());
    assert_eq!(m_codim(&m, &m, 4).unwrap(), DimValue::Finite(0));
}

#[test]
fn codim_over_injectives_is_injective_dimension() {
    for alg in [fixtures::c3(), fixtures::gamma(), fixtures::commutative_square()] {
        let da = AddClosure::new(&Rep::dual_regular(&alg)).unwrap();
        for v in 0..alg.num_vertices() {
            for x in [Rep::simple(&alg, v).unwrap(), Rep::projective(&alg, v).unwrap()] {
                assert_eq!(da.codim(&x, DEFAULT_CAP).unwrap(), injective_dimension(&x, DEFAULT_CAP));
            }
        }
    }
}

#[test]
fn right_approximations() {
    let (c3, m, _) = c3_m();
    let c = AddClosure::new(&m).unwrap();
    for v in 0..3 {
        let x = Rep::projective(&c3, v).unwrap().radical().0;
        let ap = c.right_approximation(&x).unwrap();
        assert!(c.is_right_approximation(&ap.map).unwrap());
        assert!(ap.is_minimal_right(&c).unwrap());
    }
}

#[test]
fn non_cogenerator_reports_stage() {
    let c3 = fixtures::c3();
    let c = AddClosure::new(&Rep::simple(&c3, 0).unwrap()).unwrap();
    let err = c.coresolution(&Rep::projective(&c3, 0).unwrap(), 4).unwrap_err();
    assert!(matches!(err, Error::ApproxNotInjective { stage: 0 }));
}

#[test]
fn dualizing_summands() {
    let g = fixtures::gamma();
    let parts: Vec<Rep> = (1..6).map(|v| Rep::injective(&g, v).unwrap()).collect();
    let i = Rep::direct_sum(&g, &parts).unwrap();
    let y = Rep::direct_sum(&g, &[Rep::regular(&g), i.clone()]).unwrap();
    assert!(is_dualizing_summand(&i, &y).unwrap());
    assert!(is_dualizing_summand(&y, &y).unwrap());
    let s = Rep::simple(&g, 0).unwrap();
    assert!(matches!(is_dualizing_summand(&s, &y), Err(Error::NotSummand(_))));
    // Y = S(1) + S(2) over A2: Hom(S(1), S(2)) = 0 so S(2) cannot dualize
    let a2 = fixtures::a2();
    let s1 = Rep::simple(&a2, 0).unwrap();
    let s2 = Rep::simple(&a2, 1).unwrap();
    let y = Rep::direct_sum(&a2, &[s1, s2.clone()]).unwrap();
    assert!(!is_dualizing_summand(&s2, &y).unwrap());
}

#[test]
fn tilting_checks() {
    for alg in [fixtures::a2(), fixtures::c3(), fixtures::gamma()] {
        assert!(is_tilting(&Rep::regular(&alg), TiltKind::Tilting, 8).unwrap());
        assert!(is_tilting(&Rep::dual_regular(&alg), TiltKind::Cotilting, 8).unwrap());
    }
    let c3 = fixtures::c3();
    assert!(!is_tilting(&Rep::simple(&c3, 0).unwrap(), TiltKind::Tilting, 8).unwrap());
    assert!(!is_tilting(&Rep::simple(&c3, 0).unwrap(), TiltKind::Cotilting, 8).unwrap());
    // APR-style tilt over A2: P(1) + S(1)
    let a2 = fixtures::a2();
    let t = Rep::direct_sum(&a2, &[Rep::projective(&a2, 0).unwrap(), Rep::simple(&a2, 0).unwrap()]).unwrap();
    assert!(is_tilting(&t, TiltKind::Tilting, 8).unwrap());
}
