use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::{independent_subset, Elem, FieldSpec, Mat};
use crate::homology::{is_injective, is_projective, tau, tau_inverse};
use crate::pathalg::{Algebra, Arrow, Path, Quiver, Relation};
use crate::repmod::{Rep, RepMap};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EnumMethod {
    NakayamaUniserial,
    Knitting,
}

/// Indecomposables up to isomorphism, sorted by their canonical key.
#[derive(Clone, Debug)]
pub struct IndecList {
    pub items: Vec<Rep>,
    pub method: EnumMethod,
    /// Set when the list is certified to contain every indecomposable.
    pub complete: bool,
}

impl IndecList {
    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn position(&self, x: &Rep) -> Result<Option<usize>> {
        x.iso_to_any(&self.items)
    }

    pub fn require_complete(&self) -> Result<()> {
        if self.complete {
            Ok(())
        } else {
            Err(Error::EnumerationUnavailable("the indecomposable list is not certified complete".into()))
        }
    }
}

/// Uniserial census for Nakayama algebras, knitting from the projectives and
/// injectives otherwise. `cap` bounds the number of modules found.
pub fn enumerate_indecomposables(alg: &Arc<Algebra>, cap: usize) -> Result<IndecList> {
    if alg.is_nakayama() {
        return Ok(nakayama_census(alg));
    }
    knit(alg, cap)
}

/// `P(v) / rad^l P(v)` for every vertex and admissible length.
fn nakayama_census(alg: &Arc<Algebra>) -> IndecList {
    let mut items = Vec::new();
    for v in 0..alg.num_vertices() {
        let p = Rep::projective(alg, v).expect("vertex");
        // rad^l P as submodules of P, l = 1, 2, ...
        let mut current: Option<RepMap> = None;
        loop {
            let inc = match &current {
                None => p.radical().1,
                Some(prev) => {
                    let (_, r) = prev.src.radical();
                    prev.compose(&r)
                }
            };
            items.push(inc.cokernel().0);
            let done = inc.src.is_zero();
            current = Some(inc);
            if done {
                break;
            }
        }
    }
    items.sort_by_key(Rep::sort_key);
    IndecList { items, method: EnumMethod::NakayamaUniserial, complete: true }
}

struct Knitter {
    found: Vec<Rep>,
    queue: Vec<Rep>,
    cap: usize,
}

impl Knitter {
    fn offer(&mut self, x: Rep) -> Result<()> {
        if x.is_zero() {
            return Ok(());
        }
        let pool: Vec<Rep> = self.found.iter().chain(self.queue.iter()).cloned().collect();
        if x.iso_to_any(&pool)?.is_none() {
            if self.found.len() + self.queue.len() >= self.cap {
                return Err(Error::EnumerationUnavailable(format!("knitting exceeded {} modules", self.cap)));
            }
            self.queue.push(x);
        }
        Ok(())
    }

    fn offer_summands(&mut self, x: &Rep) -> Result<()> {
        if x.is_zero() {
            return Ok(());
        }
        for s in x.indecomposable_summands()? {
            self.offer(s)?;
        }
        Ok(())
    }
}

/// Closure of the projectives and injectives under `tau`, `tau^-` and
/// neighbours in the Auslander-Reiten quiver. A finite closure is a union of
/// finite components meeting every block, hence everything.
pub(crate) fn knit(alg: &Arc<Algebra>, cap: usize) -> Result<IndecList> {
    let mut k = Knitter { found: Vec::new(), queue: Vec::new(), cap };
    for v in 0..alg.num_vertices() {
        k.offer(Rep::projective(alg, v)?)?;
        k.offer(Rep::injective(alg, v)?)?;
    }
    while let Some(x) = k.queue.pop() {
        k.found.push(x.clone());
        if is_projective(&x) {
            k.offer_summands(&x.radical().0)?;
        } else {
            let seq = almost_split_sequence(&x)?;
            k.offer(seq.left.clone())?;
            k.offer_summands(&seq.middle)?;
        }
        if is_injective(&x) {
            let (_, inc) = x.socle();
            k.offer_summands(&inc.cokernel().0)?;
        } else {
            k.offer(tau_inverse(&x))?;
        }
    }
    let mut items = k.found;
    items.sort_by_key(Rep::sort_key);
    Ok(IndecList { items, method: EnumMethod::Knitting, complete: true })
}

/// `0 -> tau Z -> E -> Z -> 0`.
#[derive(Clone, Debug)]
pub struct AlmostSplit {
    pub left: Rep,
    pub middle: Rep,
    pub mono: RepMap,
    pub epi: RepMap,
}

/// The almost split sequence ending in the indecomposable non-projective
/// `Z`, built as the pushout of the class spanning the socle of
/// `Ext^1(Z, tau Z)` over `End(tau Z)`.
pub fn almost_split_sequence(z: &Rep) -> Result<AlmostSplit> {
    let alg = z.alg().clone();
    let f = alg.field();
    let x = tau(z);
    if x.is_zero() {
        return Err(Error::Precondition("almost split sequences end in non-projective modules".into()));
    }
    let cover = z.projective_cover();
    let (k, inc) = cover.map.kernel();
    let hom_kx = k.hom(&x)?;
    let hom_px = cover.map.src.hom(&x)?;
    let d = hom_kx.dim();
    let trivial: Vec<Vec<Elem>> =
        hom_px.basis.iter().map(|h| hom_kx.coordinates(&h.compose(&inc)).expect("morphism")).collect();
    let mut cols = trivial.clone();
    let base = cols.len();
    cols.extend((0..d).map(|i| unit(f, d, i)));
    let classes: Vec<usize> =
        independent_subset(f, d, &cols).into_iter().filter(|&i| i >= base).map(|i| i - base).collect();
    if classes.is_empty() {
        return Err(Error::Defect("Ext^1(Z, tau Z) vanishes".into()));
    }
    // reduce modulo the trivial classes: coordinates of a map in the class basis
    let span = Mat::from_columns(f, d, &[trivial.clone(), classes.iter().map(|&i| unit(f, d, i)).collect()].concat());
    let to_class = |c: Vec<Elem>| -> Vec<Elem> {
        let sol = span.solve(&Mat::from_columns(f, d, &[c])).expect("field").expect("spanning set");
        (0..classes.len()).map(|j| sol.get(trivial.len() + j, 0).clone()).collect()
    };
    let end = x.end();
    let rad = radical_endomorphisms(&end);
    let mut rows = Vec::new();
    for r in &rad {
        let block: Vec<Vec<Elem>> = classes
            .iter()
            .map(|&i| to_class(hom_kx.coordinates(&r.compose(&hom_kx.basis[i])).expect("morphism")))
            .collect();
        rows.push(Mat::from_columns(f, classes.len(), &block));
    }
    let soc = if rows.is_empty() {
        Mat::identity(f, classes.len())
    } else {
        let refs: Vec<&Mat> = rows.iter().collect();
        Mat::vstack(&refs, f, classes.len()).kernel_basis()
    };
    if soc.cols() != 1 {
        return Err(Error::EnumerationUnavailable(format!(
            "socle of Ext^1(Z, tau Z) has dimension {}",
            soc.cols()
        )));
    }
    let mut xi = RepMap::zero(&k, &x);
    for (j, &i) in classes.iter().enumerate() {
        xi = xi.add(&hom_kx.basis[i].scale(soc.get(j, 0)));
    }
    let (_, inj, _) = Rep::direct_sum_with_maps(&alg, &[cover.map.src.clone(), x.clone()])?;
    let into = inj[0].compose(&inc).add(&inj[1].compose(&xi).scale(&f.from_i64(-1)));
    let (middle, q) = into.cokernel();
    let mono = q.compose(&inj[1]);
    let mono = RepMap { src: x.clone(), dst: middle.clone(), comps: mono.comps };
    let (_, epi) = mono.cokernel();
    Ok(AlmostSplit { left: x, middle, mono, epi })
}

fn unit(f: FieldSpec, d: usize, i: usize) -> Vec<Elem> {
    let mut e = vec![f.zero(); d];
    e[i] = f.one();
    e
}

/// Basis of the radical of a local endomorphism ring: the trace-form kernel.
fn radical_endomorphisms(end: &crate::repmod::HomSpace) -> Vec<RepMap> {
    let f = end.src.field();
    let n = end.dim();
    let totals: Vec<Mat> = end.basis.iter().map(RepMap::total).collect();
    let mut gram = Mat::zeros(f, n, n);
    for i in 0..n {
        for j in 0..n {
            gram.set(i, j, totals[i].mul(&totals[j]).trace());
        }
    }
    let ker = gram.kernel_basis();
    (0..ker.cols()).map(|c| end.element(&ker.column(c))).collect()
}

/// The Nakayama algebra with the given Kupisch series: `c[i]` is the length
/// of `P(i)`. Linear when the last entry is 1, cyclic otherwise.
pub fn nakayama_algebra(field: FieldSpec, kupisch: &[usize]) -> Result<Arc<Algebra>> {
    let n = kupisch.len();
    if n == 0 || kupisch.contains(&0) {
        return Err(Error::Precondition("Kupisch series entries must be positive".into()));
    }
    let cyclic = kupisch[n - 1] != 1;
    let next = |i: usize| if cyclic { (i + 1) % n } else { i + 1 };
    for i in 0..n {
        if !cyclic && i + 1 == n {
            continue;
        }
        if kupisch[i] < 2 || kupisch[i] > kupisch[next(i)] + 1 {
            return Err(Error::Precondition(format!("{kupisch:?} is not a Kupisch series")));
        }
    }
    let vertices: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let arrow_count = if cyclic { n } else { n - 1 };
    let arrows: Vec<Arrow> =
        (0..arrow_count).map(|i| Arrow { name: format!("a{}", i + 1), source: i, target: next(i) }).collect();
    let quiver = Quiver::new(vertices, arrows)?;
    let mut relations = Vec::new();
    for i in 0..n {
        let c = kupisch[i];
        // the path of length c from i vanishes; it is a minimal relation
        // when it exists and the path of length c - 1 from i + 1 does not vanish
        if !cyclic && i + c >= n {
            continue;
        }
        if kupisch[next(i)] < c {
            continue;
        }
        let arrows: Vec<usize> = (0..c).map(|k| (i + k) % n).collect();
        let target = (i + c) % n;
        relations.push(Relation { terms: vec![(field.one(), Path { source: i, target, arrows })] });
    }
    let cap = crate::pathalg::DEFAULT_PATH_CAP;
    let alg = Algebra::new(field, quiver, relations, cap)?;
    let got: Vec<usize> = (0..n).map(|v| Rep::projective(&alg, v).expect("vertex").dim()).collect();
    if got != kupisch {
        return Err(Error::Defect(format!("Kupisch series {got:?} differs from {kupisch:?}")));
    }
    Ok(alg)
}

/// All Kupisch series with `n` entries and maximal entry at most `loewy`,
/// one per rotation class in the cyclic case.
pub fn kupisch_series(n: usize, loewy: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0; n];
    fn rec(i: usize, cur: &mut Vec<usize>, loewy: usize, out: &mut Vec<Vec<usize>>) {
        let n = cur.len();
        if i == n {
            out.push(cur.clone());
            return;
        }
        for c in 1..=loewy {
            cur[i] = c;
            rec(i + 1, cur, loewy, out);
        }
    }
    rec(0, &mut cur, loewy, &mut out);
    let valid = |c: &Vec<usize>| -> bool {
        let cyclic = c[n - 1] != 1;
        (0..n).all(|i| {
            if !cyclic && i + 1 == n {
                return true;
            }
            let nx = if cyclic { c[(i + 1) % n] } else { c[i + 1] };
            c[i] >= 2 && c[i] <= nx + 1
        })
    };
    let canonical = |c: &Vec<usize>| -> bool {
        if c[n - 1] == 1 {
            return true;
        }
        (1..n).all(|r| {
            let rot: Vec<usize> = (0..n).map(|i| c[(i + r) % n]).collect();
            *c <= rot
        })
    };
    out.into_iter().filter(|c| valid(c) && canonical(c)).collect()
}
