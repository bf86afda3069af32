//! Exhaustive search for almost precluster tilting modules over small
//! Nakayama algebras.
//!
//! Candidates are `M = DA + (sum of a subset of the non-injective
//! indecomposables)`. Additivity of `Ext` and of `tau_n` reduces the first
//! three defining conditions to tables over the indecomposables; the
//! codimension condition is checked per candidate by an exact coresolution.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::approx::AddClosure;
use crate::error::Result;
use crate::exactlin::FieldSpec;
use crate::homology::{ar_translate, ext_table, is_injective, is_projective, TauKind};
use crate::pathalg::Algebra;
use crate::repmod::Rep;

use super::{enumerate_indecomposables, kupisch_series, nakayama_algebra, IndecList};

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub max_vertices: usize,
    pub max_loewy: usize,
    pub degrees: Vec<usize>,
    pub field: FieldSpec,
    pub threads: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_vertices: 4,
            max_loewy: 5,
            degrees: vec![1, 2],
            field: FieldSpec::Prime(2_147_483_647),
            threads: std::thread::available_parallelism().map_or(1, |n| n.get()),
        }
    }
}

/// One almost `n`-precluster tilting module found by the sweep.
#[derive(Clone, Debug)]
pub struct SweepInstance {
    pub kupisch: Vec<usize>,
    pub n: usize,
    /// Indices into the universe of the algebra, sorted.
    pub members: Vec<usize>,
    /// `A in add M`.
    pub generator: bool,
    /// `add M = add(tau_n M + DA)` as sets of indecomposables.
    pub tau_closure_equal: bool,
}

#[derive(Clone, Debug, Default)]
pub struct SweepOutcome {
    pub algebras: usize,
    pub candidates: usize,
    pub instances: Vec<SweepInstance>,
}

/// Tables over the indecomposables of one algebra.
pub struct AlgebraTables {
    pub alg: Arc<Algebra>,
    pub universe: IndecList,
    pub closure: AddClosure,
    pub injective: Vec<usize>,
    pub projective: Vec<usize>,
}

impl AlgebraTables {
    pub fn new(alg: &Arc<Algebra>, cap: usize) -> Result<AlgebraTables> {
        let universe = enumerate_indecomposables(alg, cap)?;
        universe.require_complete()?;
        let generator = Rep::direct_sum(alg, &universe.items)?;
        let closure = AddClosure::from_indecomposables(generator, universe.items.clone());
        let injective = (0..universe.len()).filter(|&i| is_injective(&universe.items[i])).collect();
        let projective = (0..universe.len()).filter(|&i| is_projective(&universe.items[i])).collect();
        Ok(AlgebraTables { alg: alg.clone(), universe, closure, injective, projective })
    }

    /// Universe indices of the indecomposable summands of `tau_n U_i`.
    pub fn tau_n_table(&self, n: usize) -> Result<Vec<Vec<usize>>> {
        let mut out = Vec::with_capacity(self.universe.len());
        for x in &self.universe.items {
            let t = ar_translate(x, TauKind::Higher(n))?;
            let mut idx = Vec::new();
            if !t.is_zero() {
                for s in t.indecomposable_summands()? {
                    idx.push(self.universe.position(&s)?.expect("complete universe"));
                }
            }
            out.push(idx);
        }
        Ok(out)
    }

    /// `bad[i][j]`: some `Ext^t(U_i, U_j)`, `1 <= t <= n - 1`, is nonzero.
    pub fn ext_table(&self, n: usize) -> Result<Vec<Vec<bool>>> {
        let k = self.universe.len();
        let mut bad = vec![vec![false; k]; k];
        if n < 2 {
            return Ok(bad);
        }
        for i in 0..k {
            for j in 0..k {
                let t = ext_table(&self.universe.items[i], &self.universe.items[j], n - 1)?;
                bad[i][j] = t[1..].iter().any(|&e| e != 0);
            }
        }
        Ok(bad)
    }

    /// `M-codim A <= 1` for the module with the listed summands.
    pub fn codim_at_most_one(&self, members: &[usize]) -> Result<bool> {
        let sub = self.closure.subset(members)?;
        match sub.coresolution(&Rep::regular(&self.alg), 1) {
            Ok(res) => Ok(res.length().at_most(1)),
            Err(crate::error::Error::ApproxNotInjective { .. }) => Ok(false),
            Err(e) => Err(e),
        }
    }
}

/// All almost `n`-precluster tilting modules with `DA` as a summand over
/// one algebra.
pub fn sweep_algebra(tables: &AlgebraTables, n: usize) -> Result<(usize, Vec<Vec<usize>>)> {
    let k = tables.universe.len();
    let tn = tables.tau_n_table(n)?;
    let bad = tables.ext_table(n)?;
    let inj: BTreeSet<usize> = tables.injective.iter().copied().collect();
    let free: Vec<usize> = (0..k).filter(|i| !inj.contains(i)).collect();
    // injective summands must already be Ext-orthogonal to each other
    if tables.injective.iter().any(|&i| tables.injective.iter().any(|&j| bad[i][j])) {
        return Ok((0, Vec::new()));
    }
    let mut candidates = 0;
    let mut found = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    fn compatible(bad: &[Vec<bool>], inj: &BTreeSet<usize>, chosen: &[usize], x: usize) -> bool {
        if bad[x][x] {
            return false;
        }
        chosen.iter().chain(inj.iter()).all(|&y| !bad[x][y] && !bad[y][x])
    }
    #[allow(clippy::too_many_arguments)]
    fn rec(
        pos: usize,
        free: &[usize],
        bad: &[Vec<bool>],
        inj: &BTreeSet<usize>,
        tn: &[Vec<usize>],
        tables: &AlgebraTables,
        chosen: &mut Vec<usize>,
        candidates: &mut usize,
        found: &mut Vec<Vec<usize>>,
    ) -> Result<()> {
        if pos == free.len() {
            let members: BTreeSet<usize> = chosen.iter().chain(inj.iter()).copied().collect();
            if !members.iter().all(|&i| tn[i].iter().all(|j| members.contains(j))) {
                return Ok(());
            }
            *candidates += 1;
            let list: Vec<usize> = members.into_iter().collect();
            if tables.codim_at_most_one(&list)? {
                found.push(list);
            }
            return Ok(());
        }
        rec(pos + 1, free, bad, inj, tn, tables, chosen, candidates, found)?;
        let x = free[pos];
        if compatible(bad, inj, chosen, x) {
            chosen.push(x);
            rec(pos + 1, free, bad, inj, tn, tables, chosen, candidates, found)?;
            chosen.pop();
        }
        Ok(())
    }
    rec(0, &free, &bad, &inj, &tn, tables, &mut chosen, &mut candidates, &mut found)?;
    Ok((candidates, found))
}

fn sweep_one(kupisch: &[usize], config: &SweepConfig) -> Result<(usize, Vec<SweepInstance>)> {
    let alg = nakayama_algebra(config.field, kupisch)?;
    let tables = AlgebraTables::new(&alg, 512)?;
    let mut candidates = 0;
    let mut out = Vec::new();
    for &n in &config.degrees {
        let (c, found) = sweep_algebra(&tables, n)?;
        candidates += c;
        let tn = tables.tau_n_table(n)?;
        for members in found {
            let set: BTreeSet<usize> = members.iter().copied().collect();
            let mut closure: BTreeSet<usize> = tables.injective.iter().copied().collect();
            for &i in &members {
                closure.extend(tn[i].iter().copied());
            }
            out.push(SweepInstance {
                kupisch: kupisch.to_vec(),
                n,
                generator: tables.projective.iter().all(|p| set.contains(p)),
                tau_closure_equal: closure == set,
                members,
            });
        }
    }
    Ok((candidates, out))
}

/// Sweep every Nakayama algebra within the configured bounds.
pub fn sweep_nakayama(config: &SweepConfig) -> Result<SweepOutcome> {
    let mut series = Vec::new();
    for n in 1..=config.max_vertices {
        series.extend(kupisch_series(n, config.max_loewy));
    }
    let threads = config.threads.max(1);
    let chunks: Vec<Vec<(usize, Vec<usize>)>> = (0..threads)
        .map(|t| series.iter().cloned().enumerate().filter(|(i, _)| i % threads == t).collect())
        .collect();
    let results: Vec<Result<Vec<(usize, usize, Vec<SweepInstance>)>>> = std::thread::scope(|s| {
        let handles: Vec<_> = chunks
            .iter()
            .map(|chunk| {
                s.spawn(move || {
                    chunk
                        .iter()
                        .map(|(i, k)| sweep_one(k, config).map(|(c, inst)| (*i, c, inst)))
                        .collect::<Result<Vec<_>>>()
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("sweep worker")).collect()
    });
    let mut all = Vec::new();
    for r in results {
        all.extend(r?);
    }
    all.sort_by_key(|(i, _, _)| *i);
    let mut outcome = SweepOutcome { algebras: series.len(), ..Default::default() };
    for (_, c, inst) in all {
        outcome.candidates += c;
        outcome.instances.extend(inst);
    }
    Ok(outcome)
}
