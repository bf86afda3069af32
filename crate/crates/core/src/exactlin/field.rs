use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The base field of every computation: the rationals or a prime field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

/// A field element. `Rat` values are always in lowest terms, `Mod` values
/// are residues in `0..p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Elem {
    Rat(BigRational),
    Mod(u64),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if p == 0 || !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not a prime")));
        }
        if p >= 1 << 31 {
            return Err(Error::InvalidField(format!("prime {p} exceeds 2^31")));
        }
        Ok(FieldSpec::Prime(p))
    }

    /// Characteristic, with 0 for the rationals.
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Elem {
        match self {
            FieldSpec::Rationals => Elem::Rat(BigRational::zero()),
            FieldSpec::Prime(_) => Elem::Mod(0),
        }
    }

    pub fn one(&self) -> Elem {
        match self {
            FieldSpec::Rationals => Elem::Rat(BigRational::one()),
            FieldSpec::Prime(_) => Elem::Mod(1),
        }
    }

    pub fn from_i64(&self, v: i64) -> Elem {
        match self {
            FieldSpec::Rationals => Elem::Rat(BigRational::from_integer(BigInt::from(v))),
            FieldSpec::Prime(p) => Elem::Mod(v.rem_euclid(*p as i64) as u64),
        }
    }

    /// `num / den` in the field; fails when `den` vanishes in the field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Elem> {
        match self {
            FieldSpec::Rationals => {
                if den.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(Elem::Rat(BigRational::new(num.clone(), den.clone())))
            }
            FieldSpec::Prime(p) => {
                let pb = BigInt::from(*p);
                let n = num.mod_floor(&pb).to_u64().unwrap_or(0);
                let d = den.mod_floor(&pb).to_u64().unwrap_or(0);
                if d == 0 {
                    return Err(Error::DivisionByZero);
                }
                Ok(Elem::Mod(mulmod(n, inv_mod(d, *p), *p)))
            }
        }
    }

    pub fn is_zero(&self, a: &Elem) -> bool {
        match a {
            Elem::Rat(r) => r.is_zero(),
            Elem::Mod(v) => *v == 0,
        }
    }

    pub fn is_one(&self, a: &Elem) -> bool {
        match a {
            Elem::Rat(r) => r.is_one(),
            Elem::Mod(v) => *v == 1,
        }
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        match (a, b, self) {
            (Elem::Rat(x), Elem::Rat(y), _) => Elem::Rat(x + y),
            (Elem::Mod(x), Elem::Mod(y), FieldSpec::Prime(p)) => Elem::Mod((x + y) % p),
            _ => panic!("field element kind mismatch"),
        }
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        match (a, b, self) {
            (Elem::Rat(x), Elem::Rat(y), _) => Elem::Rat(x - y),
            (Elem::Mod(x), Elem::Mod(y), FieldSpec::Prime(p)) => Elem::Mod((x + p - y) % p),
            _ => panic!("field element kind mismatch"),
        }
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        match (a, self) {
            (Elem::Rat(x), _) => Elem::Rat(-x),
            (Elem::Mod(x), FieldSpec::Prime(p)) => Elem::Mod((p - x) % p),
            _ => panic!("field element kind mismatch"),
        }
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        match (a, b, self) {
            (Elem::Rat(x), Elem::Rat(y), _) => Elem::Rat(x * y),
            (Elem::Mod(x), Elem::Mod(y), FieldSpec::Prime(p)) => Elem::Mod(mulmod(*x, *y, *p)),
            _ => panic!("field element kind mismatch"),
        }
    }

    /// Multiplicative inverse. Panics on zero; callers check first.
    pub fn inv(&self, a: &Elem) -> Elem {
        match (a, self) {
            (Elem::Rat(x), _) => {
                assert!(!x.is_zero(), "inverse of zero");
                Elem::Rat(x.recip())
            }
            (Elem::Mod(x), FieldSpec::Prime(p)) => {
                assert!(*x != 0, "inverse of zero");
                Elem::Mod(inv_mod(*x, *p))
            }
            _ => panic!("field element kind mismatch"),
        }
    }

    pub fn div(&self, a: &Elem, b: &Elem) -> Elem {
        self.mul(a, &self.inv(b))
    }

    /// `a += b * c`, the elimination inner loop.
    #[inline]
    pub fn add_mul_assign(&self, a: &mut Elem, b: &Elem, c: &Elem) {
        match (a, b, c, self) {
            (Elem::Mod(x), Elem::Mod(y), Elem::Mod(z), FieldSpec::Prime(p)) => {
                *x = ((*x as u128 + (*y as u128) * (*z as u128)) % (*p as u128)) as u64;
            }
            (Elem::Rat(x), Elem::Rat(y), Elem::Rat(z), _) => {
                if !y.is_zero() && !z.is_zero() {
                    *x += y * z;
                }
            }
            _ => panic!("field element kind mismatch"),
        }
    }

    /// True when `a` belongs to this field's representation.
    pub fn owns(&self, a: &Elem) -> bool {
        match (a, self) {
            (Elem::Rat(_), FieldSpec::Rationals) => true,
            (Elem::Mod(v), FieldSpec::Prime(p)) => v < p,
            _ => false,
        }
    }

    /// Small integer elements in a fixed order, used when searching for
    /// generic linear combinations.
    pub fn small_scalars(&self, count: usize) -> Vec<Elem> {
        (1..=count as i64).map(|v| self.from_i64(v)).collect()
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "GF {p}"),
        }
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elem::Rat(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Elem::Mod(v) => write!(f, "{v}"),
        }
    }
}

impl Elem {
    /// Sign-aware rendering helper: returns (is_negative, absolute value text).
    pub fn sign_split(&self) -> (bool, String) {
        match self {
            Elem::Rat(r) if r.is_negative() => (true, Elem::Rat(-r.clone()).to_string()),
            other => (false, other.to_string()),
        }
    }
}

#[inline]
pub(crate) fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1);
    t.rem_euclid(p as i128) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_validation() {
        assert!(FieldSpec::prime(7).is_ok());
        assert!(FieldSpec::prime(0).is_err());
        assert!(FieldSpec::prime(1).is_err());
        assert!(FieldSpec::prime(9).is_err());
    }

    #[test]
    fn modular_inverse() {
        let f = FieldSpec::Prime(7);
        for v in 1..7 {
            let e = f.from_i64(v);
            assert!(f.is_one(&f.mul(&e, &f.inv(&e))));
        }
    }

    #[test]
    fn ratio_in_prime_field() {
        let f = FieldSpec::Prime(5);
        let e = f.from_ratio(&BigInt::from(3), &BigInt::from(2)).unwrap();
        assert_eq!(e, Elem::Mod(4));
        assert!(f.from_ratio(&BigInt::from(1), &BigInt::from(5)).is_err());
    }
}
