//! Buchberger completion for two-sided ideals of a path algebra under the
//! length-lexicographic order.

use crate::error::{Error, Result};
use crate::exactlin::FieldSpec;

use super::path::{Path, PathElem};

/// Upper bound on the number of S-elements processed before giving up.
const MAX_STEPS: usize = 200_000;

/// A monic element together with its tip.
#[derive(Clone, Debug)]
pub struct Rule {
    pub tip: Path,
    pub elem: PathElem,
}

impl Rule {
    fn new(field: FieldSpec, elem: PathElem) -> Option<Rule> {
        let elem = elem.monic(field);
        let tip = elem.leading()?.0.clone();
        Some(Rule { tip, elem })
    }
}

/// Reduce `x` modulo the rules until no term contains a tip.
pub fn reduce(field: FieldSpec, rules: &[Rule], x: &PathElem) -> PathElem {
    let mut work = x.clone();
    let mut done = PathElem::zero();
    while let Some((p, c)) = work.terms.iter().next_back().map(|(p, c)| (p.clone(), c.clone())) {
        work.terms.remove(&p);
        let hit = rules.iter().find_map(|r| p.find(&r.tip.arrows).map(|pos| (r, pos)));
        match hit {
            None => done.add_term(field, p, &c),
            Some((r, pos)) => {
                let before = &p.arrows[..pos];
                let after = &p.arrows[pos + r.tip.len()..];
                // tip = -(rest), so c * u tip v becomes -c * u rest v
                let nc = field.neg(&c);
                for (q, qc) in r.elem.terms.iter() {
                    if q == &r.tip {
                        continue;
                    }
                    let mut arrows = before.to_vec();
                    arrows.extend_from_slice(&q.arrows);
                    arrows.extend_from_slice(after);
                    let np = Path { source: p.source, target: p.target, arrows };
                    work.add_term(field, np, &field.mul(&nc, qc));
                }
            }
        }
    }
    done
}

fn overlaps(field: FieldSpec, g: &Rule, h: &Rule) -> Vec<PathElem> {
    // suffix of tip(g) of length k equals prefix of tip(h)
    let (tg, th) = (&g.tip.arrows, &h.tip.arrows);
    let mut out = Vec::new();
    for k in 1..tg.len().min(th.len()) {
        if tg[tg.len() - k..] == th[..k] {
            let g_ext = g.elem.wrap(&[], &th[k..], g.tip.source, h.tip.target);
            let h_ext = h.elem.wrap(&tg[..tg.len() - k], &[], g.tip.source, h.tip.target);
            out.push(g_ext.add(field, &h_ext.scale(field, &field.neg(&field.one()))));
        }
    }
    out
}

/// Complete `gens` to a reduced Gröbner basis. Fails when a tip longer than
/// `cap` appears or the step budget is exhausted.
pub fn complete(field: FieldSpec, gens: &[PathElem], cap: usize) -> Result<Vec<Rule>> {
    let mut rules: Vec<Rule> = Vec::new();
    let mut queue: Vec<PathElem> = gens.to_vec();
    let mut steps = 0usize;
    while !queue.is_empty() {
        // smallest leading term first
        queue.sort_by(|a, b| b.leading().map(|l| l.0).cmp(&a.leading().map(|l| l.0)));
        let next = queue.pop().unwrap();
        steps += 1;
        if steps > MAX_STEPS {
            return Err(Error::BasisCap { cap });
        }
        let red = reduce(field, &rules, &next);
        let Some(rule) = Rule::new(field, red) else {
            continue;
        };
        if rule.tip.len() > cap {
            return Err(Error::BasisCap { cap });
        }
        let mut kept = Vec::with_capacity(rules.len());
        for r in rules.drain(..) {
            if r.tip.find(&rule.tip.arrows).is_some() {
                queue.push(r.elem);
            } else {
                kept.push(r);
            }
        }
        rules = kept;
        for r in &rules {
            queue.extend(overlaps(field, r, &rule));
            queue.extend(overlaps(field, &rule, r));
        }
        queue.extend(overlaps(field, &rule, &rule));
        rules.push(rule);
    }
    // inter-reduce tails
    let mut out: Vec<Rule> = Vec::with_capacity(rules.len());
    for i in 0..rules.len() {
        let others: Vec<Rule> =
            rules.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, r)| r.clone()).collect();
        let tail = PathElem {
            terms: rules[i].elem.terms.iter().filter(|(p, _)| **p != rules[i].tip).map(|(p, c)| (p.clone(), c.clone())).collect(),
        };
        let tail = reduce(field, &others, &tail);
        let mut elem = tail;
        elem.add_term(field, rules[i].tip.clone(), &field.one());
        out.push(Rule { tip: rules[i].tip.clone(), elem });
    }
    out.sort_by(|a, b| a.tip.cmp(&b.tip));
    Ok(out)
}
