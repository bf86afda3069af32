//! Univariate polynomials over a [`FieldSpec`], just enough to find the
//! eigenvalues of an endomorphism that lie in the base field.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::field::{Elem, FieldSpec};
use super::mat::Mat;

/// Coefficients from the constant term upwards, without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    pub coeffs: Vec<Elem>,
}

impl Poly {
    fn trim(mut coeffs: Vec<Elem>, f: FieldSpec) -> Poly {
        while coeffs.last().is_some_and(|c| f.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, f: FieldSpec, x: &Elem) -> Elem {
        let mut acc = f.zero();
        for c in self.coeffs.iter().rev() {
            acc = f.add(&f.mul(&acc, x), c);
        }
        acc
    }

    fn sub(&self, other: &Poly, f: FieldSpec) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = f.zero();
        let c = (0..n)
            .map(|i| f.sub(self.coeffs.get(i).unwrap_or(&z), other.coeffs.get(i).unwrap_or(&z)))
            .collect();
        Poly::trim(c, f)
    }

    fn mul(&self, other: &Poly, f: FieldSpec) -> Poly {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Poly { coeffs: vec![] };
        }
        let mut c = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                f.add_mul_assign(&mut c[i + j], a, b);
            }
        }
        Poly::trim(c, f)
    }

    fn rem(&self, m: &Poly, f: FieldSpec) -> Poly {
        let dm = m.degree().expect("division by zero polynomial");
        let lead_inv = f.inv(&m.coeffs[dm]);
        let mut r = self.coeffs.clone();
        while r.len() > dm && !r.is_empty() {
            let top = r.len() - 1;
            let q = f.mul(&r[top], &lead_inv);
            if !f.is_zero(&q) {
                let nq = f.neg(&q);
                for (i, c) in m.coeffs.iter().enumerate() {
                    f.add_mul_assign(&mut r[top - dm + i], &nq, c);
                }
            }
            r.pop();
            while r.last().is_some_and(|c| f.is_zero(c)) {
                r.pop();
            }
        }
        Poly::trim(r, f)
    }

    fn gcd(&self, other: &Poly, f: FieldSpec) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.coeffs.is_empty() {
            let r = a.rem(&b, f);
            a = b;
            b = r;
        }
        a.monic(f)
    }

    fn monic(&self, f: FieldSpec) -> Poly {
        match self.coeffs.last() {
            None => self.clone(),
            Some(l) => {
                let inv = f.inv(l);
                Poly { coeffs: self.coeffs.iter().map(|c| f.mul(c, &inv)).collect() }
            }
        }
    }

    fn powmod(&self, mut e: u64, m: &Poly, f: FieldSpec) -> Poly {
        let mut base = self.rem(m, f);
        let mut acc = Poly { coeffs: vec![f.one()] }.rem(m, f);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, f).rem(m, f);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base, f).rem(m, f);
            }
        }
        acc
    }
}

/// Characteristic polynomial `det(x I - m)` via reduction to Hessenberg form.
pub fn charpoly(m: &Mat) -> Poly {
    let f = m.field();
    let n = m.rows();
    assert_eq!(n, m.cols());
    let mut a: Vec<Vec<Elem>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    for j in 0..n.saturating_sub(2) {
        let Some(p) = (j + 1..n).find(|&i| !f.is_zero(&a[i][j])) else {
            continue;
        };
        if p != j + 1 {
            a.swap(p, j + 1);
            for row in a.iter_mut() {
                row.swap(p, j + 1);
            }
        }
        let inv = f.inv(&a[j + 1][j]);
        for k in j + 2..n {
            if f.is_zero(&a[k][j]) {
                continue;
            }
            let u = f.mul(&a[k][j], &inv);
            let nu = f.neg(&u);
            let pivot_row = a[j + 1].clone();
            for (c, v) in pivot_row.iter().enumerate() {
                f.add_mul_assign(&mut a[k][c], &nu, v);
            }
            for row in a.iter_mut() {
                let v = row[k].clone();
                f.add_mul_assign(&mut row[j + 1], &u, &v);
            }
        }
    }
    // p[k] = characteristic polynomial of the leading k x k block.
    let mut p: Vec<Poly> = vec![Poly { coeffs: vec![f.one()] }];
    for mm in 1..=n {
        let x_minus = Poly::trim(vec![f.neg(&a[mm - 1][mm - 1]), f.one()], f);
        let mut next = x_minus.mul(&p[mm - 1], f);
        let mut prod = f.one();
        for i in (1..mm).rev() {
            prod = f.mul(&prod, &a[i][i - 1]);
            let coef = f.mul(&a[i - 1][mm - 1], &prod);
            if !f.is_zero(&coef) {
                let scaled = Poly {
                    coeffs: p[i - 1].coeffs.iter().map(|c| f.mul(c, &coef)).collect(),
                };
                next = next.sub(&scaled, f);
            }
        }
        p.push(next);
    }
    p.pop().unwrap()
}

/// Distinct roots of `poly` lying in the base field, sorted. Over the
/// rationals the search through candidate numerators and denominators is
/// bounded; roots beyond that bound are not reported.
pub fn roots_in_field(poly: &Poly, f: FieldSpec) -> Vec<Elem> {
    if poly.coeffs.is_empty() {
        return Vec::new();
    }
    let mut out = match f {
        FieldSpec::Rationals => rational_roots(poly),
        FieldSpec::Prime(p) => prime_roots(poly, f, p),
    };
    out.sort();
    out.dedup();
    out
}

fn prime_roots(poly: &Poly, f: FieldSpec, p: u64) -> Vec<Elem> {
    if p <= 4096 {
        return (0..p).map(Elem::Mod).filter(|x| f.is_zero(&poly.eval(f, x))).collect();
    }
    let x = Poly { coeffs: vec![f.zero(), f.one()] };
    let xp = x.powmod(p, poly, f);
    let split = poly.gcd(&xp.sub(&x, f), f);
    let mut out = Vec::new();
    split_linear(&split, f, p, 0, &mut out);
    out
}

/// Splits a product of distinct linear factors.
fn split_linear(g: &Poly, f: FieldSpec, p: u64, shift: u64, out: &mut Vec<Elem>) {
    match g.degree() {
        None | Some(0) => {}
        Some(1) => out.push(f.neg(&f.div(&g.coeffs[0], &g.coeffs[1]))),
        Some(_) => {
            let mut a = shift;
            loop {
                let h = Poly { coeffs: vec![Elem::Mod(a % p), f.one()] };
                let pw = h.powmod((p - 1) / 2, g, f);
                let d = g.gcd(&pw.sub(&Poly { coeffs: vec![f.one()] }, f), f);
                let dd = d.degree().unwrap_or(0);
                if dd > 0 && dd < g.degree().unwrap() {
                    let q = poly_div_exact(g, &d, f);
                    split_linear(&d, f, p, a + 1, out);
                    split_linear(&q, f, p, a + 1, out);
                    return;
                }
                a += 1;
            }
        }
    }
}

fn poly_div_exact(a: &Poly, b: &Poly, f: FieldSpec) -> Poly {
    let db = b.degree().unwrap();
    let mut r = a.coeffs.clone();
    let da = r.len() - 1;
    let mut q = vec![f.zero(); da - db + 1];
    let inv = f.inv(&b.coeffs[db]);
    for k in (0..=da - db).rev() {
        let c = f.mul(&r[k + db], &inv);
        if !f.is_zero(&c) {
            let nc = f.neg(&c);
            for (i, bc) in b.coeffs.iter().enumerate() {
                f.add_mul_assign(&mut r[k + i], &nc, bc);
            }
        }
        q[k] = c;
    }
    Poly::trim(q, f)
}

const DIVISOR_SEARCH_LIMIT: u64 = 2_000_000;

fn divisors(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.abs().to_u64()?;
    if n == 0 {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d.saturating_mul(d) <= n {
        if d > DIVISOR_SEARCH_LIMIT {
            return None;
        }
        if n % d == 0 {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    Some(out)
}

fn rational_roots(poly: &Poly) -> Vec<Elem> {
    let f = FieldSpec::Rationals;
    let rats: Vec<_> = poly
        .coeffs
        .iter()
        .map(|c| match c {
            Elem::Rat(r) => r.clone(),
            Elem::Mod(_) => unreachable!("prime element in rational polynomial"),
        })
        .collect();
    let lcm = rats.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let mut ints: Vec<BigInt> = rats.iter().map(|r| (r * &lcm).to_integer()).collect();
    let mut out = Vec::new();
    let lead = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
    if lead > 0 {
        out.push(f.zero());
        ints.drain(0..lead);
    }
    if ints.len() <= 1 {
        return out;
    }
    let (Some(num_div), Some(den_div)) = (divisors(&ints[0]), divisors(ints.last().unwrap()))
    else {
        return out;
    };
    let candidate_poly = Poly {
        coeffs: ints.iter().map(|c| Elem::Rat(num_rational::BigRational::from_integer(c.clone()))).collect(),
    };
    for &u in &num_div {
        for &v in &den_div {
            for sign in [1i64, -1] {
                let x = f
                    .from_ratio(&BigInt::from(sign * u as i64), &BigInt::from(v as i64))
                    .expect("nonzero divisor");
                if f.is_zero(&candidate_poly.eval(f, &x)) {
                    out.push(x);
                }
            }
        }
    }
    out
}
