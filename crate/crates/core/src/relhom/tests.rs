use super::*;
use crate::exactlin::Elem;
use crate::fixtures;
use crate::homology::{ext_table, injective_dimension, projective_dimension, DEFAULT_CAP};

fn c3_file(text: &str) -> (Arc<Algebra>, Rep) {
    let file = crate::pathalg::parse_algebra(text).unwrap();
    let m = crate::repmod::resolve_module(&file, "M").unwrap();
    (file.algebra, m)
}

fn small_modules(alg: &Arc<Algebra>) -> Vec<Rep> {
    let mut out = Vec::new();
    for v in 0..alg.num_vertices() {
        out.push(Rep::simple(alg, v).unwrap());
        out.push(Rep::projective(alg, v).unwrap());
        out.push(Rep::injective(alg, v).unwrap());
    }
    out
}

#[test]
fn absolute_case_collapses() {
    let g = fixtures::gamma();
    let f = SubBifunctor::upper(&Rep::dual_regular(&g)).unwrap();
    assert_eq!(f.projectives.len(), g.num_vertices());
    for x in small_modules(&g) {
        assert_eq!(f.pd(&x, DEFAULT_CAP).unwrap(), projective_dimension(&x, DEFAULT_CAP));
        assert_eq!(f.id(&x, DEFAULT_CAP).unwrap(), injective_dimension(&x, DEFAULT_CAP));
        for y in small_modules(&g) {
            assert_eq!(f.ext_table(&x, &y, 3).unwrap(), ext_table(&x, &y, 3).unwrap());
        }
    }
    let lower = SubBifunctor::lower(&Rep::regular(&g)).unwrap();
    let s = Rep::simple(&g, 3).unwrap();
    assert_eq!(lower.pd(&s, DEFAULT_CAP).unwrap(), projective_dimension(&s, DEFAULT_CAP));
}

#[test]
fn c3_injectives_are_add_m() {
    let (c3, m) = c3_file(fixtures::C3);
    let f = SubBifunctor::upper(&m).unwrap();
    assert_eq!(f.injectives.len(), 5);
    for n in &f.injectives.indecomposables {
        assert!(f.closure.position(n).unwrap().is_some());
    }
    let res = f.injective_coresolution(&Rep::regular(&c3), DEFAULT_CAP).unwrap();
    assert!(res.verify());
    assert!(res.length().at_most(1));
    for t in &res.terms {
        assert!(f.closure.contains(t).unwrap());
    }
}

#[test]
fn m_is_relative_cotilting_and_tilting() {
    let (_, m) = c3_file(fixtures::C3);
    let f = SubBifunctor::upper(&m).unwrap();
    assert_eq!(f.id(&m, DEFAULT_CAP).unwrap(), DimValue::Finite(0));
    assert!(f.is_cotilting(&m, DEFAULT_CAP).unwrap());
    assert!(f.is_tilting(&m, DEFAULT_CAP).unwrap());
}

#[test]
fn relative_ext_against_m_agrees_with_absolute_in_degree_one() {
    let (c3, m) = c3_file(fixtures::C3);
    let f = SubBifunctor::upper(&m).unwrap();
    for x in small_modules(&c3) {
        assert_eq!(f.ext(&m, &x, 1).unwrap(), ext_table(&m, &x, 1).unwrap()[1]);
    }
}

#[test]
fn relative_projectives_have_no_higher_ext() {
    let (c3, m) = c3_file(fixtures::C3);
    let f = SubBifunctor::upper(&m).unwrap();
    for p in &f.projectives.indecomposables {
        assert_eq!(f.pd(p, DEFAULT_CAP).unwrap(), DimValue::Finite(0));
        for y in small_modules(&c3) {
            assert!(f.ext_table(p, &y, 2).unwrap()[1..].iter().all(|&e| e == 0));
        }
    }
}

#[test]
fn projective_and_injective_sides_agree() {
    let (c3, m) = c3_file(fixtures::C3);
    for kind in [FKind::Upper, FKind::Lower] {
        let f = SubBifunctor::new(kind, &m).unwrap();
        for x in small_modules(&c3) {
            for y in small_modules(&c3) {
                assert_eq!(f.ext_table(&x, &y, 2).unwrap(), f.ext_table_injective(&x, &y, 2).unwrap());
            }
        }
    }
}

/// Count the extension classes in `Ext^1(Z, X)` whose pushout sequences are
/// F-exact, by enumerating every class over a prime field.
fn brute_force_relative_classes(f: &SubBifunctor, z: &Rep, x: &Rep) -> (usize, usize) {
    let fld = z.field();
    let p = fld.characteristic() as usize;
    let cover = z.projective_cover();
    let (k, inc) = cover.map.kernel();
    let hom_kx = k.hom(x).unwrap();
    let hom_px = cover.map.src.hom(x).unwrap();
    let mut cols: Vec<Vec<Elem>> = hom_px.basis.iter().map(|h| hom_kx.coordinates(&h.compose(&inc)).unwrap()).collect();
    let base = cols.len();
    cols.extend((0..hom_kx.dim()).map(|i| {
        let mut e = vec![fld.zero(); hom_kx.dim()];
        e[i] = fld.one();
        e
    }));
    let classes: Vec<RepMap> = crate::exactlin::independent_subset(fld, hom_kx.dim(), &cols)
        .into_iter()
        .filter(|&i| i >= base)
        .map(|i| hom_kx.basis[i - base].clone())
        .collect();
    let d = classes.len();
    let alg = z.alg();
    let (_, inj, _) = Rep::direct_sum_with_maps(alg, &[cover.map.src.clone(), x.clone()]).unwrap();
    let mut exact = 0;
    for code in 0..p.pow(d as u32) {
        let mut fm = RepMap::zero(&k, x);
        let mut c = code;
        for cls in &classes {
            fm = fm.add(&cls.scale(&fld.from_i64((c % p) as i64)));
            c /= p;
        }
        // E = coker(K -> P + X), k |-> (inc k, -f k)
        let into = inj[0].compose(&inc).add(&inj[1].compose(&fm).scale(&fld.from_i64(-1)));
        let (e, q) = into.cokernel();
        let i_x = q.compose(&inj[1]);
        let i_x = RepMap { src: x.clone(), dst: e.clone(), comps: i_x.comps };
        let (_, to_z) = i_x.cokernel();
        if f.is_exact(&i_x, &to_z).unwrap() {
            exact += 1;
        }
    }
    (exact, d)
}

#[test]
fn relative_extensions_match_brute_force() {
    let text = fixtures::C3.replace("field Q", "field GF 29");
    let (c3, m) = c3_file(&text);
    let mods = small_modules(&c3);
    let mut proper = 0;
    for kind in [FKind::Upper, FKind::Lower] {
        let f = SubBifunctor::new(kind, &m).unwrap();
        for z in &mods {
            for x in &mods {
                if z.dim() + x.dim() > 6 {
                    continue;
                }
                let (count, d) = brute_force_relative_classes(&f, z, x);
                let rel = f.ext(z, x, 1).unwrap();
                assert!(rel <= d);
                if rel < d {
                    proper += 1;
                }
                assert_eq!(count, 29usize.pow(rel as u32), "{:?} {:?} {kind:?}", z.dims(), x.dims());
            }
        }
    }
    // some pair has F strictly smaller than Ext^1
    assert!(proper > 0);
}

#[test]
fn relative_global_dimension_over_semisimple_list() {
    let a2 = fixtures::a2();
    let f = SubBifunctor::upper(&Rep::dual_regular(&a2)).unwrap();
    let indecs = vec![
        Rep::simple(&a2, 0).unwrap(),
        Rep::simple(&a2, 1).unwrap(),
        Rep::projective(&a2, 0).unwrap(),
    ];
    assert_eq!(f.global_dimension(&indecs, DEFAULT_CAP).unwrap(), DimValue::Finite(1));
}
