#![allow(dead_code)]

use std::collections::HashSet;
use std::sync::Arc;

use arthom::classify::IndecList;
use arthom::exactlin::{Elem, Mat};
use arthom::pathalg::Algebra;
use arthom::repmod::Rep;
use rand::Rng;

const P: i64 = 3;

type Small = Vec<Vec<i64>>;

fn residue(e: &Elem) -> i64 {
    let s = e.to_string();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.parse::<i64>().unwrap(), d.parse::<i64>().unwrap()),
        None => (s.parse::<i64>().unwrap(), 1),
    };
    assert!(d.rem_euclid(P) != 0, "denominator divisible by {P}");
    let inv = (1..P).find(|k| (k * d).rem_euclid(P) == 1).unwrap();
    (n * inv).rem_euclid(P)
}

fn small(m: &Mat) -> Small {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| residue(m.get(i, j))).collect()).collect()
}

fn mul(a: &Small, b: &Small, inner: usize, cols: usize) -> Small {
    a.iter()
        .map(|row| (0..cols).map(|j| (0..inner).map(|k| row[k] * b[k][j]).sum::<i64>().rem_euclid(P)).collect())
        .collect()
}

fn identity(n: usize) -> Small {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

/// Counts Yoneda extension classes `0 -> Y -> E -> X -> 0` over GF(3) by
/// enumerating every cochain and every coboundary, with `E_a` the block
/// matrix `[[Y_a, h_a], [0, X_a]]`. Returns `None` when the search space
/// exceeds `3^limit`. Requires every matrix entry to reduce mod 3.
pub fn brute_force_extension_classes(x: &Rep, y: &Rep, limit: usize) -> Option<u64> {
    let alg = x.alg();
    let q = alg.quiver();
    let (dx, dy) = (x.dims(), y.dims());
    let xa: Vec<Small> = x.actions().iter().map(small).collect();
    let ya: Vec<Small> = y.actions().iter().map(small).collect();
    let cochain_len: usize = q.arrows.iter().map(|a| dy[a.target] * dx[a.source]).sum();
    let gauge_len: usize = (0..dx.len()).map(|v| dx[v] * dy[v]).sum();
    if cochain_len > limit || gauge_len > limit {
        return None;
    }
    let d = |v: usize| dx[v] + dy[v];
    let block = |a: usize, h: &[i64]| -> Small {
        let (s, t) = (q.arrows[a].source, q.arrows[a].target);
        let mut e = vec![vec![0; d(s)]; d(t)];
        for r in 0..dy[t] {
            for c in 0..dy[s] {
                e[r][c] = ya[a][r][c];
            }
            for c in 0..dx[s] {
                e[r][dy[s] + c] = h[r * dx[s] + c];
            }
        }
        for r in 0..dx[t] {
            for c in 0..dx[s] {
                e[dy[t] + r][dy[s] + c] = xa[a][r][c];
            }
        }
        e
    };
    let offsets: Vec<usize> = q
        .arrows
        .iter()
        .scan(0, |acc, a| {
            let o = *acc;
            *acc += dy[a.target] * dx[a.source];
            Some(o)
        })
        .collect();
    let satisfies = |h: &[i64]| -> bool {
        let blocks: Vec<Small> = (0..q.arrows.len())
            .map(|a| block(a, &h[offsets[a]..offsets[a] + dy[q.arrows[a].target] * dx[q.arrows[a].source]]))
            .collect();
        alg.relations().iter().all(|rel| {
            let (s, t) = (rel.terms[0].1.source, rel.terms[0].1.target);
            let mut total = vec![vec![0i64; d(s)]; d(t)];
            for (c, path) in &rel.terms {
                let mut m = identity(d(s));
                let mut at = s;
                for &a in &path.arrows {
                    let nt = q.arrows[a].target;
                    m = mul(&blocks[a], &m, d(at), d(s));
                    at = nt;
                }
                let c = residue(c);
                for r in 0..d(t) {
                    for k in 0..d(s) {
                        total[r][k] = (total[r][k] + c * m[r][k]).rem_euclid(P);
                    }
                }
            }
            total.iter().all(|row| row.iter().all(|&v| v == 0))
        })
    };
    let mut cocycles = 0u64;
    let mut h = vec![0i64; cochain_len];
    loop {
        if satisfies(&h) {
            cocycles += 1;
        }
        if !odometer(&mut h) {
            break;
        }
    }
    // coboundaries h_a = Y_a g_s - g_t X_a
    let goff: Vec<usize> = (0..dx.len()).scan(0, |acc, v| {
        let o = *acc;
        *acc += dx[v] * dy[v];
        Some(o)
    }).collect();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut g = vec![0i64; gauge_len];
    loop {
        let gv = |v: usize| -> Small {
            (0..dy[v]).map(|r| (0..dx[v]).map(|c| g[goff[v] + r * dx[v] + c]).collect()).collect()
        };
        let mut cob = Vec::with_capacity(cochain_len);
        for (a, arrow) in q.arrows.iter().enumerate() {
            let (s, t) = (arrow.source, arrow.target);
            let left = mul(&ya[a], &gv(s), dy[s], dx[s]);
            let right = mul(&gv(t), &xa[a], dx[t], dx[s]);
            for r in 0..dy[t] {
                for c in 0..dx[s] {
                    cob.push((left[r][c] - right[r][c]).rem_euclid(P));
                }
            }
        }
        debug_assert!(satisfies(&cob));
        seen.insert(cob);
        if !odometer(&mut g) {
            break;
        }
    }
    let boundaries = seen.len() as u64;
    assert_eq!(cocycles % boundaries, 0, "coboundaries form a subgroup of the cocycles");
    Some(cocycles / boundaries)
}

fn odometer(v: &mut [i64]) -> bool {
    for e in v.iter_mut() {
        *e += 1;
        if *e < P {
            return true;
        }
        *e = 0;
    }
    false
}

/// Every multiset of universe members with total dimension at most `max_dim`,
/// as sorted index lists.
pub fn multisets_up_to(universe: &IndecList, max_dim: usize) -> Vec<Vec<usize>> {
    fn rec(u: &[Rep], start: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        for i in start..u.len() {
            if u[i].dim() <= left {
                cur.push(i);
                rec(u, i, left - u[i].dim(), cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(&universe.items, 0, max_dim, &mut Vec::new(), &mut out);
    out
}

pub fn sum_of(alg: &Arc<Algebra>, universe: &IndecList, idx: &[usize]) -> Rep {
    let parts: Vec<Rep> = idx.iter().map(|&i| universe.items[i].clone()).collect();
    Rep::direct_sum(alg, &parts).unwrap()
}

/// Multiplicity of each universe member among the indecomposable summands.
pub fn multiplicities(universe: &IndecList, x: &Rep) -> Vec<usize> {
    let mut m = vec![0; universe.len()];
    for s in x.decompose().unwrap().summands {
        m[universe.position(&s.module).unwrap().expect("summand in universe")] += s.multiplicity;
    }
    m
}

fn random_invertible<R: Rng>(rng: &mut R, alg: &Arc<Algebra>, n: usize) -> (Mat, Mat) {
    let f = alg.field();
    loop {
        let rows: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(-2..=2)).collect()).collect();
        let m = Mat::from_i64_rows(f, &rows);
        if n == 0 {
            return (m.clone(), m);
        }
        if let Some(inv) = m.inverse() {
            return (m, inv);
        }
    }
}

/// The same module written in a random basis at every vertex.
pub fn scramble<R: Rng>(rng: &mut R, x: &Rep) -> Rep {
    let alg = x.alg();
    let bases: Vec<(Mat, Mat)> = x.dims().iter().map(|&d| random_invertible(rng, alg, d)).collect();
    let action = alg
        .quiver()
        .arrows
        .iter()
        .enumerate()
        .map(|(a, ar)| bases[ar.target].0.mul(x.action(a)).mul(&bases[ar.source].1))
        .collect();
    Rep::new(alg, x.dims().to_vec(), action).unwrap()
}

/// Sorted indices of modules from `pool` isomorphic to summands of `x`,
/// without multiplicity.
pub fn summand_set(pool: &[Rep], x: &Rep) -> Vec<usize> {
    let mut out: Vec<usize> = x
        .indecomposable_summands()
        .unwrap()
        .iter()
        .map(|s| s.iso_to_any(pool).unwrap().expect("summand in pool"))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Same indecomposables up to isomorphism, ignoring multiplicity.
pub fn add_equal(a: &[Rep], b: &[Rep]) -> bool {
    a.iter().all(|x| x.iso_to_any(b).unwrap().is_some()) && b.iter().all(|y| y.iso_to_any(a).unwrap().is_some())
}
