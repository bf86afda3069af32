//! Golden scenarios on the embedded fixtures. Each scenario recomputes a
//! fixed list of quantities and compares them with their expected values.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use crate::classify::{
    enumerate_indecomposables, hom_sequence, is_almost_precluster, is_precluster, small_injective, Caps,
};
use crate::endocat::endo_algebra;
use crate::error::{Error, Result};
use crate::exactlin::{FieldSpec, Mat};
use crate::homology::{ar_translate, injective_dimension, projective_dimension, rel_domdim, TauKind};
use crate::pathalg::parse_algebra;
use crate::relhom::SubBifunctor;
use crate::repmod::{resolve_module, union_of_summands, Rep};
use crate::{classify, fixtures};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Fixture {
    /// Relative dominant dimension of the six-vertex tree algebra.
    GammaRelativeDomdim,
    /// The almost 2-precluster tilting module over the three-cycle.
    C3AlmostPrecluster,
    /// Endomorphism algebra of that module and back.
    EndoRoundTrip,
    /// Exactness of the Hom sequence ending in `D Hom(M, tau_n M)`.
    HomSequence,
    /// `add M = add(tau_n M + DA)`.
    TauClosure,
    /// The perpendicular category against Gorenstein projectives.
    PerpDuality,
}

impl Fixture {
    pub const ALL: [Fixture; 6] = [
        Fixture::GammaRelativeDomdim,
        Fixture::C3AlmostPrecluster,
        Fixture::EndoRoundTrip,
        Fixture::HomSequence,
        Fixture::TauClosure,
        Fixture::PerpDuality,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Fixture::GammaRelativeDomdim => "gamma-relative-domdim",
            Fixture::C3AlmostPrecluster => "c3-almost-precluster",
            Fixture::EndoRoundTrip => "endo-roundtrip",
            Fixture::HomSequence => "hom-sequence",
            Fixture::TauClosure => "tau-closure",
            Fixture::PerpDuality => "perp-duality",
        }
    }
}

impl fmt::Display for Fixture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Fixture {
    type Err = Error;

    fn from_str(s: &str) -> Result<Fixture> {
        Fixture::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown fixture {s}")))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Assertion {
    pub label: String,
    pub expected: Value,
    pub actual: Value,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct FixtureReport {
    pub fixture: String,
    pub assertions: Vec<Assertion>,
    pub elapsed_ms: f64,
}

impl FixtureReport {
    pub fn passed(&self) -> bool {
        self.assertions.iter().all(|a| a.ok)
    }
}

#[derive(Default)]
struct Checks(Vec<Assertion>);

impl Checks {
    fn eq(&mut self, label: &str, expected: impl Serialize, actual: impl Serialize) {
        let (e, a) = (json!(expected), json!(actual));
        let ok = e == a;
        self.0.push(Assertion { label: label.to_string(), expected: e, actual: a, ok });
    }
}

/// Run one golden scenario.
pub fn verify_fixture(fixture: Fixture) -> Result<FixtureReport> {
    let start = Instant::now();
    let mut c = Checks::default();
    match fixture {
        Fixture::GammaRelativeDomdim => gamma_relative_domdim(&mut c)?,
        Fixture::C3AlmostPrecluster => c3_almost_precluster(&mut c)?,
        Fixture::EndoRoundTrip => endo_roundtrip(&mut c)?,
        Fixture::HomSequence => {
            let (_, m) = c3_module()?;
            let seq = hom_sequence(&m, 2, crate::homology::DEFAULT_CAP)?;
            c.eq("sequence exact", true, seq.is_exact());
            c.eq("cokernel dimension", seq.tail_dim, seq.node_dims[3] - seq.ranks[2]);
        }
        Fixture::TauClosure => {
            let (alg, m) = c3_module()?;
            let t2 = ar_translate(&m, TauKind::Higher(2))?;
            let lhs = union_of_summands(&[m.clone()])?;
            let rhs = union_of_summands(&[t2, Rep::dual_regular(&alg)])?;
            c.eq("same number of indecomposables", lhs.len(), rhs.len());
            c.eq("same indecomposables", true, same_summands(&lhs, &rhs)?);
        }
        Fixture::PerpDuality => perp_duality(&mut c)?,
    }
    Ok(FixtureReport {
        fixture: fixture.name().to_string(),
        assertions: c.0,
        elapsed_ms: start.elapsed().as_secs_f64() * 1000.0,
    })
}

fn c3_module() -> Result<(std::sync::Arc<crate::pathalg::Algebra>, Rep)> {
    let file = parse_algebra(fixtures::C3)?;
    let m = resolve_module(&file, "M")?;
    Ok((file.algebra, m))
}

fn same_summands(a: &[Rep], b: &[Rep]) -> Result<bool> {
    for x in a {
        if x.iso_to_any(b)?.is_none() {
            return Ok(false);
        }
    }
    for y in b {
        if y.iso_to_any(a)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn gamma_relative_domdim(c: &mut Checks) -> Result<()> {
    let g = fixtures::gamma();
    let cap = crate::homology::DEFAULT_CAP;
    let parts: Vec<Rep> = (1..6).map(|v| Rep::injective(&g, v)).collect::<Result<_>>()?;
    let inj = Rep::direct_sum(&g, &parts)?;
    let i1 = Rep::injective(&g, 0)?;
    c.eq("pd I", 2, projective_dimension(&inj, cap));
    c.eq("I-domdim", 2, rel_domdim(&Rep::regular(&g), &inj, cap)?);
    c.eq("pd I(1)", 2, projective_dimension(&i1, cap));
    c.eq("I(1) in add I", false, i1.in_add_of(&parts)?);
    Ok(())
}

fn c3_almost_precluster(c: &mut Checks) -> Result<()> {
    let (alg, m) = c3_module()?;
    let caps = Caps::default();
    let r = is_almost_precluster(&m, 2, &caps)?;
    c.eq("almost 2-precluster", true, r.verdict.is_true());
    for cond in &r.conditions {
        c.eq(&cond.label, true, cond.ok);
    }
    c.eq("2-precluster", false, is_precluster(&m, 2, &caps)?.verdict.is_true());
    let up = ar_translate(&Rep::simple(&alg, 0)?, TauKind::HigherInverse(2))?;
    let expected = Rep::new(
        &alg,
        vec![1, 1, 0],
        vec![
            Mat::from_i64_rows(FieldSpec::Rationals, &[vec![1]]),
            Mat::zeros(FieldSpec::Rationals, 0, 1),
            Mat::zeros(FieldSpec::Rationals, 1, 0),
        ],
    )?;
    c.eq("inverse tau_2 S(1) dims", vec![1, 1, 0], up.dims());
    c.eq("inverse tau_2 S(1) is 1 over 2", true, up.is_isomorphic(&expected)?);
    c.eq("inverse tau_2 S(1) in add M", false, up.in_add_of(&m.indecomposable_summands()?)?);
    Ok(())
}

fn endo_roundtrip(c: &mut Checks) -> Result<()> {
    let (alg, m) = c3_module()?;
    let cap = crate::homology::DEFAULT_CAP;
    let pres = endo_algebra(&m)?;
    let lambda = pres.lambda.clone();
    let inj = small_injective(&lambda, cap);
    c.eq("simples of the endomorphism algebra", 5, lambda.num_vertices());
    c.eq("id", 3, injective_dimension(&Rep::regular(&lambda), cap));
    c.eq("I-domdim", 3, rel_domdim(&Rep::regular(&lambda), &inj, cap)?);
    c.eq("transport(A) is I", true, pres.transport(&Rep::regular(&alg))?.is_isomorphic(&inj)?);
    let eval = pres.natural_eval()?;
    c.eq("evaluation source dimension", 10, eval.source_dim);
    c.eq("evaluation target dimension", 10, eval.target_dim);
    c.eq("evaluation bijective", true, eval.is_bijective());
    let back = union_of_summands(&[pres.recovered_module()?])?;
    c.eq("recovered module add-equal to M", true, same_summands(&back, &m.indecomposable_summands()?)?);
    Ok(())
}

fn perp_duality(c: &mut Checks) -> Result<()> {
    let (alg, m) = c3_module()?;
    let cap = crate::homology::DEFAULT_CAP;
    let universe = enumerate_indecomposables(&alg, 512)?;
    let f = SubBifunctor::upper(&m)?;
    let pres = endo_algebra(&m)?;
    let lambda = pres.lambda.clone();
    let reg = Rep::regular(&lambda);
    let inj = small_injective(&lambda, cap);
    let perp1 = classify::perp_category(&m, 1, classify::PerpSide::Right, &universe)?;
    let mut perp_f = Vec::new();
    for x in &universe.items {
        if f.ext_table(&m, x, 4)?[1..].iter().all(|&e| e == 0) {
            perp_f.push(x.clone());
        }
    }
    c.eq("relative perp equals Ext^1 perp", true, same_summands(&perp_f, &perp1)?);
    let mut gp = true;
    let mut dom = true;
    for x in &perp_f {
        let t = pres.transport(x)?;
        gp &= crate::homology::ext_table(&t, &reg, 3)?[1..].iter().all(|&e| e == 0);
        dom &= rel_domdim(&t, &inj, cap)?.at_least(3);
    }
    c.eq("transports are Gorenstein projective", true, gp);
    c.eq("transports have I-domdim at least 3", true, dom);
    let ts: Vec<Rep> = universe.items.iter().map(|x| pres.transport(x)).collect::<Result<_>>()?;
    let mut duality = true;
    for (i, x) in universe.items.iter().enumerate() {
        for (j, y) in universe.items.iter().enumerate() {
            duality &= x.hom_dim(y)? == ts[j].hom_dim(&ts[i])?;
        }
    }
    c.eq("Hom dimensions dualize", true, duality);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fixture_passes() {
        for f in Fixture::ALL {
            let r = verify_fixture(f).unwrap();
            assert!(r.passed(), "{f}: {:#?}", r.assertions);
            assert_eq!(f.name().parse::<Fixture>().unwrap(), f);
        }
        assert!("nope".parse::<Fixture>().is_err());
    }
}
