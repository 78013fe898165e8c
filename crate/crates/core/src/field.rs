//! Arithmetic in the prime field Z_p.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A residue mod p, always kept in `[0, p)`.
pub type Residue = u32;

pub const MAX_PRIME: u32 = 251;

/// A prime modulus `2 <= p <= 251`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct PrimeModulus(u32);

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2;
    while k * k <= n {
        if n.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

impl PrimeModulus {
    pub fn new(p: u64) -> Result<Self> {
        if p > MAX_PRIME as u64 || !is_prime(p) {
            return Err(Error::InvalidPrime(p));
        }
        Ok(PrimeModulus(p as u32))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn reduce(self, x: u64) -> Residue {
        (x % self.0 as u64) as Residue
    }

    #[inline]
    pub fn reduce_signed(self, x: i64) -> Residue {
        x.rem_euclid(self.0 as i64) as Residue
    }

    #[inline]
    pub fn add(self, a: Residue, b: Residue) -> Residue {
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: Residue, b: Residue) -> Residue {
        if a >= b {
            a - b
        } else {
            a + self.0 - b
        }
    }

    #[inline]
    pub fn neg(self, a: Residue) -> Residue {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    #[inline]
    pub fn mul(self, a: Residue, b: Residue) -> Residue {
        (a * b) % self.0
    }

    pub fn pow(self, mut base: Residue, mut exp: u64) -> Residue {
        let mut acc = 1 % self.0;
        base %= self.0;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(self, a: Residue) -> Option<Residue> {
        let a = a % self.0;
        if a == 0 {
            None
        } else {
            Some(self.pow(a, self.0 as u64 - 2))
        }
    }

    /// The nonzero residues `1..p`.
    pub fn units(self) -> impl Iterator<Item = Residue> {
        1..self.0
    }

    /// Smallest generator of the multiplicative group.
    pub fn primitive_root(self) -> Residue {
        let p = self.0;
        if p == 2 {
            return 1;
        }
        let order = p - 1;
        let mut factors = Vec::new();
        let mut n = order;
        let mut k = 2;
        while k * k <= n {
            if n.is_multiple_of(k) {
                factors.push(k);
                while n.is_multiple_of(k) {
                    n /= k;
                }
            }
            k += 1;
        }
        if n > 1 {
            factors.push(n);
        }
        (2..p)
            .find(|&g| factors.iter().all(|&q| self.pow(g, (order / q) as u64) != 1))
            .expect("every prime field has a primitive root")
    }
}

impl TryFrom<u32> for PrimeModulus {
    type Error = Error;
    fn try_from(p: u32) -> Result<Self> {
        PrimeModulus::new(p as u64)
    }
}

impl From<PrimeModulus> for u32 {
    fn from(p: PrimeModulus) -> u32 {
        p.0
    }
}

impl fmt::Display for PrimeModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The smaller square root of -1 mod p, if one exists.
///
/// Present exactly when `p = 2` or `p ≡ 1 (mod 4)`.
pub fn sqrt_minus_one(p: PrimeModulus) -> Option<Residue> {
    let minus_one = p.neg(1);
    (1..p.get()).find(|&i| p.mul(i, i) == minus_one)
}

/// Coefficients `c_0..c_{p-1}` of the unique polynomial of degree `< p`
/// agreeing with `values` on all of Z_p, built from the Lagrange basis.
pub fn interpolate(p: PrimeModulus, values: &BTreeMap<Residue, Residue>) -> Result<Vec<Residue>> {
    let q = p.get();
    for x in 0..q {
        if !values.contains_key(&x) {
            return Err(Error::IncompleteFunction { missing: x });
        }
    }
    if let Some((&x, _)) = values.iter().find(|(&x, &y)| x >= q || y >= q) {
        return Err(Error::ResidueOutOfRange { value: x as u64, p: q });
    }

    let mut coeffs = vec![0; q as usize];
    for (&k, &fk) in values {
        if fk == 0 {
            continue;
        }
        // numerator: prod_{j != k} (x - j), built up one linear factor at a time
        let mut basis = vec![1 % q];
        let mut denom = 1;
        for j in (0..q).filter(|&j| j != k) {
            let mut next = vec![0; basis.len() + 1];
            for (deg, &c) in basis.iter().enumerate() {
                next[deg + 1] = p.add(next[deg + 1], c);
                next[deg] = p.sub(next[deg], p.mul(c, j));
            }
            basis = next;
            denom = p.mul(denom, p.sub(k, j));
        }
        let scale = p.mul(fk, p.inv(denom).expect("distinct nodes"));
        for (deg, &c) in basis.iter().enumerate() {
            coeffs[deg] = p.add(coeffs[deg], p.mul(scale, c));
        }
    }
    Ok(coeffs)
}

/// Horner evaluation of `sum c_k x^k` mod p.
pub fn evaluate_polynomial(p: PrimeModulus, coeffs: &[Residue], x: Residue) -> Residue {
    coeffs.iter().rev().fold(0, |acc, &c| p.add(p.mul(acc, x), c))
}
