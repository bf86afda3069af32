//! Endomorphism algebras as bound quiver algebras and the transport functor
//! `Hom_A(-, M)`.
//!
//! Convention: `Lambda = End_A(M)` multiplies by composition, `f.g = f o g`,
//! and acts on `Hom_A(X, M)` by post-composition. Vertex `i` of `Lambda`
//! is the `i`-th basic summand `N_i`, an arrow `i -> j` is a radical map
//! `N_i -> N_j`, and `transport(X)` has `Hom_A(X, N_i)` at vertex `i`. With
//! this choice `transport(M)` is the regular module and `End_A(A)` is the
//! opposite algebra of `A`.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::sync::Arc;

use crate::approx::AddClosure;
use crate::error::{Error, Result};
use crate::exactlin::{independent_subset, Elem, Mat};
use crate::pathalg::{Algebra, Arrow, Path, Quiver, Relation, DEFAULT_PATH_CAP};
use crate::repmod::{HomSpace, Rep, RepMap};

/// `End_A(M)` presented by a quiver with relations, together with the
/// morphism realizing each arrow.
#[derive(Clone, Debug)]
pub struct EndoPresentation {
    pub lambda: Arc<Algebra>,
    /// `summands[i]` is the summand at vertex `i`.
    pub summands: Vec<Rep>,
    /// `arrow_maps[k]` realizes arrow `k`.
    pub arrow_maps: Vec<RepMap>,
    /// `word_maps[b]` realizes basis word `b` of `lambda`.
    pub word_maps: Vec<RepMap>,
}

/// Presentation of `End_A(M)` for the basic module with the same summands
/// as `M`.
pub fn endo_algebra(m: &Rep) -> Result<EndoPresentation> {
    let closure = AddClosure::new(m)?;
    from_closure(&closure)
}

pub fn from_closure(closure: &AddClosure) -> Result<EndoPresentation> {
    let alg = closure.alg().clone();
    let f = alg.field();
    let summands = closure.indecomposables.clone();
    let r = summands.len();
    if r == 0 {
        return Err(Error::Precondition("the module must be nonzero".into()));
    }
    let homs: Vec<Vec<HomSpace>> =
        (0..r).map(|i| (0..r).map(|j| summands[i].hom(&summands[j])).collect::<Result<_>>()).collect::<Result<_>>()?;

    // arrows: radical maps independent modulo rad^2
    let mut arrows = Vec::new();
    let mut arrow_maps = Vec::new();
    for i in 0..r {
        for j in 0..r {
            let target = &homs[i][j];
            let mut cols = Vec::new();
            for k in 0..r {
                for h in closure.radical(i, k) {
                    for g in closure.radical(k, j) {
                        cols.push(target.coordinates(&g.compose(h)).expect("morphism"));
                    }
                }
            }
            let base = cols.len();
            let rad = closure.radical(i, j);
            cols.extend(rad.iter().map(|g| target.coordinates(g).expect("morphism")));
            for p in independent_subset(f, target.dim(), &cols).into_iter().filter(|&p| p >= base) {
                arrows.push(Arrow { name: format!("x{}", arrows.len() + 1), source: i, target: j });
                arrow_maps.push(rad[p - base].clone());
            }
        }
    }
    let quiver = Quiver::new((1..=r).map(|i| i.to_string()).collect(), arrows)?;

    // Standard words in length-lex order: a word is standard when its image
    // is independent of the images of smaller words with the same ends. The
    // minimal non-standard words are the tips of a Groebner basis of the
    // kernel of the path algebra onto End_A(M).
    let mut standard: HashSet<Path> = HashSet::new();
    let mut images: Vec<Vec<(Path, RepMap, Vec<Elem>)>> = vec![Vec::new(); r * r];
    let mut relations = Vec::new();
    let mut layer: Vec<(Path, RepMap)> = Vec::new();
    for (i, summand) in summands.iter().enumerate() {
        let id = RepMap::identity(summand);
        let c = homs[i][i].coordinates(&id).expect("identity");
        standard.insert(Path::trivial(i));
        images[i * r + i].push((Path::trivial(i), id.clone(), c));
        layer.push((Path::trivial(i), id));
    }
    let mut longest = 0;
    while !layer.is_empty() {
        let mut candidates: Vec<(Path, RepMap)> = Vec::new();
        for (w, phi) in &layer {
            for (k, a) in quiver.arrows.iter().enumerate() {
                if a.source != w.target {
                    continue;
                }
                let mut arrows = w.arrows.clone();
                arrows.push(k);
                let p = Path { source: w.source, target: a.target, arrows };
                let suffix = Path {
                    source: quiver.arrows[p.arrows[0]].target,
                    target: p.target,
                    arrows: p.arrows[1..].to_vec(),
                };
                if !w.arrows.is_empty() && !standard.contains(&suffix) {
                    continue;
                }
                candidates.push((p, arrow_maps[k].compose(phi)));
            }
        }
        candidates.sort_by(|x, y| x.0.cmp(&y.0));
        let mut next = Vec::new();
        for (p, phi) in candidates {
            let slot = p.source * r + p.target;
            let target = &homs[p.source][p.target];
            let c = target.coordinates(&phi).expect("morphism");
            let known = &images[slot];
            let cols: Vec<Vec<Elem>> = known.iter().map(|k| k.2.clone()).collect();
            let basis = Mat::from_columns(f, target.dim(), &cols);
            let rhs = Mat::from_columns(f, target.dim(), &[c.clone()]);
            match basis.solve(&rhs)? {
                None => {
                    standard.insert(p.clone());
                    longest = longest.max(p.len());
                    images[slot].push((p.clone(), phi.clone(), c));
                    next.push((p, phi));
                }
                Some(sol) => {
                    let mut terms = vec![(f.one(), p)];
                    for (idx, entry) in known.iter().enumerate() {
                        let coeff = sol.get(idx, 0);
                        if !f.is_zero(coeff) {
                            terms.push((f.neg(coeff), entry.0.clone()));
                        }
                    }
                    relations.push(Relation { terms });
                }
            }
        }
        layer = next;
    }
    let cap = DEFAULT_PATH_CAP.max(longest + 2);
    let lambda = Algebra::new(f, quiver, relations, cap)?;
    let total: usize = homs.iter().flatten().map(HomSpace::dim).sum();
    if lambda.dim() != total {
        return Err(Error::Defect(format!("presentation has dimension {} but End has {total}", lambda.dim())));
    }
    let lookup: Vec<&(Path, RepMap, Vec<Elem>)> = images.iter().flatten().collect();
    let word_maps = lambda
        .basis()
        .iter()
        .map(|w| {
            lookup
                .iter()
                .find(|e| &e.0 == w)
                .map(|e| e.1.clone())
                .ok_or_else(|| Error::Defect("normal word outside the standard words".into()))
        })
        .collect::<Result<_>>()?;
    Ok(EndoPresentation { lambda, summands, arrow_maps, word_maps })
}

impl EndoPresentation {
    pub fn alg(&self) -> &Arc<Algebra> {
        self.summands[0].alg()
    }

    /// The presentation in the algebra file format, with one comment line
    /// per vertex naming the dimension vector of its summand.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (i, n) in self.summands.iter().enumerate() {
            let dims: Vec<String> = n.dims().iter().map(usize::to_string).collect();
            let _ = writeln!(s, "# vertex {} : summand with dimension vector {}", i + 1, dims.join(" "));
        }
        s.push_str(&self.lambda.to_text());
        s
    }

    fn hom_spaces(&self, x: &Rep) -> Result<Vec<HomSpace>> {
        if !x.alg().same(self.alg()) {
            return Err(Error::AlgebraMismatch);
        }
        self.summands.iter().map(|n| x.hom(n)).collect()
    }

    /// `Hom_A(X, M)` as a representation of `lambda`.
    pub fn transport(&self, x: &Rep) -> Result<Rep> {
        let homs = self.hom_spaces(x)?;
        self.transport_from(&homs)
    }

    fn transport_from(&self, homs: &[HomSpace]) -> Result<Rep> {
        let dims = homs.iter().map(HomSpace::dim).collect();
        let action = self
            .lambda
            .quiver()
            .arrows
            .iter()
            .zip(&self.arrow_maps)
            .map(|(a, phi)| homs[a.source].postcompose_matrix(phi, &homs[a.target]))
            .collect();
        Rep::new(&self.lambda, dims, action)
    }

    /// `Hom_A(f, M): transport(Y) -> transport(X)` for `f: X -> Y`.
    pub fn transport_map(&self, f: &RepMap) -> Result<RepMap> {
        let hx = self.hom_spaces(&f.src)?;
        let hy = self.hom_spaces(&f.dst)?;
        let src = self.transport_from(&hy)?;
        let dst = self.transport_from(&hx)?;
        let comps = hy.iter().zip(&hx).map(|(y, x)| y.precompose_matrix(f, x)).collect();
        RepMap::new(&src, &dst, comps)
    }

    /// `transport(A)` as an `A`-module: `transport(P(u))` at vertex `u`, with
    /// each arrow `u -> w` acting through the transported right
    /// multiplication `P(w) -> P(u)`. Isomorphic to the basic module of `M`.
    pub fn recovered_module(&self) -> Result<Rep> {
        let alg = self.alg().clone();
        let n = alg.num_vertices();
        let proj: Vec<Rep> = (0..n).map(|v| Rep::projective(&alg, v)).collect::<Result<_>>()?;
        let trans: Vec<Rep> = proj.iter().map(|p| self.transport(p)).collect::<Result<_>>()?;
        let dims = trans.iter().map(Rep::dim).collect();
        let f = alg.field();
        let mut action = Vec::with_capacity(alg.quiver().arrows.len());
        for (a, arrow) in alg.quiver().arrows.iter().enumerate() {
            let (u, w) = (arrow.source, arrow.target);
            let mut x = vec![f.zero(); proj[u].dims()[w]];
            if let Some(b) = alg.arrow_basis_index(a) {
                let at = alg.words_between(u, w).iter().position(|&k| k == b).expect("arrow word");
                x[at] = f.one();
            }
            let rho = proj[u].map_from_projective(w, &x);
            action.push(self.transport_map(&rho)?.total());
        }
        Rep::new(&alg, dims, action)
    }

    /// Certifies that `a |-> Hom_A(- . a, M)` maps `A` bijectively onto
    /// `End_lambda(transport(A))`.
    pub fn natural_eval(&self) -> Result<EvalCertificate> {
        let alg = self.alg().clone();
        let reg = Rep::regular(&alg);
        let homs = self.hom_spaces(&reg)?;
        let t = self.transport_from(&homs)?;
        let end = t.end();
        let mut cols = Vec::with_capacity(alg.dim());
        for b in 0..alg.dim() {
            let rho = right_multiplication(&alg, &reg, b);
            let comps = homs.iter().map(|h| h.precompose_matrix(&rho, h)).collect();
            let endo = RepMap::new(&t, &t, comps)?;
            cols.push(end.coordinates(&endo).ok_or_else(|| Error::Defect("evaluation is not lambda-linear".into()))?);
        }
        let matrix = Mat::from_columns(alg.field(), end.dim(), &cols);
        Ok(EvalCertificate { source_dim: alg.dim(), target_dim: end.dim(), rank: matrix.rank(), matrix })
    }
}

/// Matrix of a natural evaluation map with its rank.
#[derive(Clone, Debug)]
pub struct EvalCertificate {
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
    pub matrix: Mat,
}

impl EvalCertificate {
    pub fn is_bijective(&self) -> bool {
        self.rank == self.source_dim && self.rank == self.target_dim
    }
}

/// `x |-> x * b` on the regular module, for the basis word `b`.
fn right_multiplication(alg: &Arc<Algebra>, reg: &Rep, b: usize) -> RepMap {
    let f = alg.field();
    let n = alg.num_vertices();
    // position of each word inside the regular module at its target
    let mut pos = vec![0usize; alg.dim()];
    for u in 0..n {
        let mut at = 0;
        for v in 0..n {
            for w in alg.words_between(v, u) {
                pos[w] = at;
                at += 1;
            }
        }
    }
    let mut comps: Vec<Mat> = (0..n).map(|u| Mat::zeros(f, reg.dims()[u], reg.dims()[u])).collect();
    for (w, word) in alg.basis().iter().enumerate() {
        for (k, c) in alg.mul_basis(w, b) {
            comps[word.target].set(pos[*k], pos[w], c.clone());
        }
    }
    RepMap { src: reg.clone(), dst: reg.clone(), comps }
}
