//! Classifiers for (almost) precluster and cluster tilting modules and for
//! almost minimal Auslander-Gorenstein algebras, Gorenstein projectives,
//! perpendicular categories and indecomposable enumeration.

mod enumerate;
mod report;
mod sequence;
pub mod sweep;

use std::sync::Arc;
use std::time::Instant;

use serde_json::json;

use crate::approx::AddClosure;
use crate::endocat::EndoPresentation;
use crate::error::{Error, Result};
use crate::homology::{
    ar_translate, domdim, ext_table, injective_dimension, is_projective, projective_dimension, rel_domdim,
    tau, DimValue, TauKind,
};
use crate::pathalg::{Algebra, DEFAULT_PATH_CAP};
use crate::repmod::Rep;

pub use enumerate::{
    almost_split_sequence, enumerate_indecomposables, kupisch_series, nakayama_algebra, AlmostSplit, EnumMethod,
    IndecList,
};
pub use report::{ClassifierReport, Condition, Verdict};
pub use sequence::{hom_sequence, HomSequence};

/// Computation bounds shared by the classifiers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub resolution: usize,
    pub enumeration: usize,
    pub path: usize,
    pub codim: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            resolution: crate::homology::DEFAULT_CAP,
            enumeration: 512,
            path: DEFAULT_PATH_CAP,
            codim: crate::approx::DEFAULT_CODIM_CAP,
        }
    }
}

impl Caps {
    fn to_json(self) -> serde_json::Value {
        json!({
            "resolution": self.resolution,
            "enumeration": self.enumeration,
            "path": self.path,
            "codim": self.codim,
        })
    }
}

fn dims_text(x: &Rep) -> String {
    let d: Vec<String> = x.dims().iter().map(usize::to_string).collect();
    format!("({})", d.join(","))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PerpSide {
    /// `M^perp`: `Ext^i(M, X) = 0`.
    Right,
    /// `^perp M`: `Ext^i(X, M) = 0`.
    Left,
}

/// Members `X` of a complete universe with `Ext^i = 0` against `M` for
/// `1 <= i <= n` on the chosen side.
pub fn perp_category(m: &Rep, n: usize, side: PerpSide, universe: &IndecList) -> Result<Vec<Rep>> {
    universe.require_complete()?;
    let mut out = Vec::new();
    for x in &universe.items {
        let table = match side {
            PerpSide::Right => ext_table(m, x, n)?,
            PerpSide::Left => ext_table(x, m, n)?,
        };
        if table[1..].iter().all(|&e| e == 0) {
            out.push(x.clone());
        }
    }
    Ok(out)
}

/// The four defining conditions of an almost `n`-precluster tilting module,
/// evaluated against a precomputed closure of `M`.
pub(crate) fn precluster_conditions(closure: &AddClosure, n: usize, caps: &Caps) -> Result<Vec<Condition>> {
    let m = &closure.generator;
    let alg = m.alg().clone();
    let da = Rep::dual_regular(&alg);
    let cogen = da.in_add_of(&closure.indecomposables)?;
    let exts = if n >= 2 { ext_table(m, m, n - 1)? } else { vec![0] };
    let ext_ok = exts[1..].iter().all(|&e| e == 0);
    let tn = ar_translate(m, TauKind::Higher(n))?;
    let tn_ok = tn.in_add_of(&closure.indecomposables)?;
    let (codim_ok, codim_detail) = match closure.coresolution(&Rep::regular(&alg), caps.codim.max(1)) {
        Ok(res) => {
            let len = res.length();
            (len.at_most(1), format!("M-codim A = {len}"))
        }
        Err(Error::ApproxNotInjective { stage }) => (false, format!("approximation not injective at stage {stage}")),
        Err(e) => return Err(e),
    };
    Ok(vec![
        Condition::new("cogenerator", cogen, "DA in add M"),
        Condition::new("ext-vanishing", ext_ok, format!("dim Ext^i(M,M), i = 1..{}: {:?}", n.saturating_sub(1), &exts[1..])),
        Condition::new("tau-n-in-add", tn_ok, format!("tau_{n} M has dimension vector {}", dims_text(&tn))),
        Condition::new("codim-at-most-1", codim_ok, codim_detail),
    ])
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::Precondition("n must be at least 1".into()))
    } else {
        Ok(())
    }
}

fn module_parameters(m: &Rep, n: usize, caps: &Caps) -> serde_json::Map<String, serde_json::Value> {
    let mut p = serde_json::Map::new();
    p.insert("n".into(), json!(n));
    p.insert("module_dims".into(), json!(m.dims()));
    p.insert("caps".into(), caps.to_json());
    p
}

pub fn is_almost_precluster(m: &Rep, n: usize, caps: &Caps) -> Result<ClassifierReport> {
    check_n(n)?;
    let start = Instant::now();
    let closure = AddClosure::new(m)?;
    let conditions = precluster_conditions(&closure, n, caps)?;
    let mut params = module_parameters(m, n, caps);
    params.insert("summands".into(), json!(closure.len()));
    Ok(ClassifierReport::from_conditions(conditions, params).timed("total", start))
}

/// Almost precluster plus `A in add M`.
pub fn is_precluster(m: &Rep, n: usize, caps: &Caps) -> Result<ClassifierReport> {
    check_n(n)?;
    let start = Instant::now();
    let closure = AddClosure::new(m)?;
    let mut conditions = precluster_conditions(&closure, n, caps)?;
    let gen = Rep::regular(m.alg()).in_add_of(&closure.indecomposables)?;
    conditions.push(Condition::new("generator", gen, "A in add M"));
    Ok(ClassifierReport::from_conditions(conditions, module_parameters(m, n, caps)).timed("total", start))
}

/// `add M = M^perp_{n-1}`, `tau_n M in add M` and `M-codim A <= 1`. The
/// verdict is unknown when the indecomposables cannot be enumerated.
pub fn is_almost_cluster(m: &Rep, n: usize, caps: &Caps) -> Result<ClassifierReport> {
    check_n(n)?;
    let start = Instant::now();
    let alg = m.alg().clone();
    let params = module_parameters(m, n, caps);
    let universe = match enumerate_indecomposables(&alg, caps.enumeration) {
        Ok(u) => u,
        Err(Error::EnumerationUnavailable(reason)) => return Ok(ClassifierReport::unknown(reason, params)),
        Err(e) => return Err(e),
    };
    let closure = AddClosure::new(m)?;
    let perp = perp_category(m, n - 1, PerpSide::Right, &universe)?;
    let mut equal = perp.len() == closure.len();
    if equal {
        for x in &perp {
            if closure.position(x)?.is_none() {
                equal = false;
                break;
            }
        }
    }
    let base = precluster_conditions(&closure, n, caps)?;
    let mut conditions = vec![Condition::new(
        "add-equals-perp",
        equal,
        format!("{} indecomposables in the perpendicular category, {} in add M", perp.len(), closure.len()),
    )];
    conditions.extend(base.into_iter().filter(|c| c.label == "tau-n-in-add" || c.label == "codim-at-most-1"));
    let mut params = params;
    params.insert("universe".into(), json!(universe.len()));
    Ok(ClassifierReport::from_conditions(conditions, params).timed("total", start))
}

/// Vertices `v` with `pd I(v) <= 1`.
pub fn small_injective_vertices(alg: &Arc<Algebra>, cap: usize) -> Vec<usize> {
    (0..alg.num_vertices())
        .filter(|&v| projective_dimension(&Rep::injective(alg, v).expect("vertex"), cap).at_most(1))
        .collect()
}

/// The direct sum of the indecomposable injectives of projective dimension
/// at most 1.
pub fn small_injective(alg: &Arc<Algebra>, cap: usize) -> Rep {
    let parts: Vec<Rep> =
        small_injective_vertices(alg, cap).into_iter().map(|v| Rep::injective(alg, v).expect("vertex")).collect();
    Rep::direct_sum(alg, &parts).expect("same algebra")
}

pub fn global_dimension(alg: &Arc<Algebra>, cap: usize) -> DimValue {
    (0..alg.num_vertices())
        .map(|v| projective_dimension(&Rep::simple(alg, v).expect("vertex"), cap))
        .fold(DimValue::Finite(0), DimValue::max)
}

/// Homological invariants of the algebra and its class memberships at `n`.
pub fn classify_algebra(alg: &Arc<Algebra>, n: usize, caps: &Caps) -> Result<ClassifierReport> {
    let start = Instant::now();
    let cap = caps.resolution;
    let inj = small_injective(alg, cap);
    let id_left = injective_dimension(&Rep::regular(alg), cap);
    let id_right = injective_dimension(&Rep::regular(&alg.opposite()), cap);
    let gld = global_dimension(alg, cap);
    let idom = rel_domdim(&Rep::regular(alg), &inj, cap)?;
    let dd = domdim(alg, cap)?;
    let bound = n + 1;
    let amag = id_left.at_most(bound) && idom.at_least(bound);
    let aa = gld.at_most(bound) && idom.at_least(bound);
    let mag = id_left.at_most(bound) && dd.at_least(bound);
    let gorenstein = id_left.is_finite() && id_left == id_right;
    let conditions = vec![
        Condition::new("id-at-most-n-plus-1", id_left.at_most(bound), format!("id = {id_left}")),
        Condition::new("relative-domdim-at-least-n-plus-1", idom.at_least(bound), format!("I-domdim = {idom}")),
    ];
    let labels: Vec<&str> = small_injective_vertices(alg, cap)
        .into_iter()
        .map(|v| alg.quiver().vertices[v].as_str())
        .collect();
    let mut params = serde_json::Map::new();
    params.insert("n".into(), json!(n));
    params.insert("caps".into(), caps.to_json());
    params.insert("small_injective_vertices".into(), json!(labels));
    params.insert("id_left".into(), json!(id_left));
    params.insert("id_right".into(), json!(id_right));
    params.insert("global_dimension".into(), json!(gld));
    params.insert("relative_domdim".into(), json!(idom));
    params.insert("domdim".into(), json!(dd));
    params.insert(
        "classes".into(),
        json!({
            "almost_minimal_auslander_gorenstein": amag,
            "almost_auslander": aa,
            "minimal_auslander_gorenstein": mag,
            "gorenstein": gorenstein,
        }),
    );
    Ok(ClassifierReport::from_conditions(conditions, params).timed("total", start))
}

/// The common injective dimension of both regular modules.
pub fn gorenstein_dimension(alg: &Arc<Algebra>, cap: usize) -> Result<usize> {
    let left = injective_dimension(&Rep::regular(alg), cap);
    let right = injective_dimension(&Rep::regular(&alg.opposite()), cap);
    match (left.finite(), right.finite()) {
        (Some(a), Some(b)) if a == b => Ok(a),
        _ => Err(Error::NotGorenstein(cap)),
    }
}

/// Over a Gorenstein algebra of dimension `g`: `Ext^i(X, A) = 0` for
/// `1 <= i <= g`.
pub fn is_gorenstein_projective(x: &Rep, cap: usize) -> Result<bool> {
    let g = gorenstein_dimension(x.alg(), cap)?;
    if g == 0 || is_projective(x) {
        return Ok(true);
    }
    Ok(ext_table(x, &Rep::regular(x.alg()), g)?[1..].iter().all(|&e| e == 0))
}

pub fn gorenstein_projectives(universe: &IndecList, cap: usize) -> Result<Vec<Rep>> {
    universe.require_complete()?;
    let mut out = Vec::new();
    for x in &universe.items {
        if is_gorenstein_projective(x, cap)? {
            out.push(x.clone());
        }
    }
    Ok(out)
}

/// For `n = 1`: `DA in add M` with `M-codim A <= 1`, and `Hom_A(M, tau M)`
/// projective as a right module over `End_A(M)`.
pub fn n1_correspondence_conditions(m: &Rep, caps: &Caps) -> Result<ClassifierReport> {
    let start = Instant::now();
    let closure = AddClosure::new(m)?;
    let base = precluster_conditions(&closure, 1, caps)?;
    let cogen = base.iter().any(|c| c.label == "cogenerator" && c.ok);
    let codim = base.iter().any(|c| c.label == "codim-at-most-1" && c.ok);
    let pres = crate::endocat::from_closure(&closure)?;
    let right = right_hom_module(&pres, &tau(m))?;
    let proj = is_projective(&right);
    let conditions = vec![
        Condition::new("cogenerator-codim-at-most-1", cogen && codim, "DA in add M and M-codim A <= 1"),
        Condition::new("endomorphism-presentation", true, format!("{} vertices", pres.lambda.num_vertices())),
        Condition::new("hom-to-tau-projective", proj, format!("dimension vector {}", dims_text(&right))),
    ];
    Ok(ClassifierReport::from_conditions(conditions, module_parameters(m, 1, caps))
        .with_label("n1-correspondence-conditions")
        .timed("total", start))
}

/// `Hom_A(M, Y)` as a right module over the endomorphism algebra, i.e. a
/// representation of its opposite.
pub fn right_hom_module(pres: &EndoPresentation, y: &Rep) -> Result<Rep> {
    let op = pres.lambda.opposite();
    let homs: Vec<_> = pres.summands.iter().map(|n| n.hom(y)).collect::<Result<_>>()?;
    let dims = homs.iter().map(|h| h.dim()).collect();
    let action = op
        .quiver()
        .arrows
        .iter()
        .zip(&pres.arrow_maps)
        .map(|(a, phi)| homs[a.source].precompose_matrix(phi, &homs[a.target]))
        .collect();
    Rep::new(&op, dims, action)
}
