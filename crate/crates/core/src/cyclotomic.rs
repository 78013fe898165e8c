//! Exact arithmetic in Z[ξ], ξ = e^{-2πi/p}.
//!
//! Values are stored as `p` integer coordinates against `1, ξ, ..., ξ^{p-1}`
//! and kept canonical by the relation `1 + ξ + ... + ξ^{p-1} = 0`: the last
//! coordinate is subtracted from all of them, so it is always zero. Equality
//! is then coordinate-wise, and a raw vector is zero exactly when all of its
//! coordinates are equal.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::field::PrimeModulus;

pub type ComplexApprox = Complex64;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclotomicValue {
    p: PrimeModulus,
    coeffs: Vec<i64>,
}

impl CyclotomicValue {
    /// Canonicalizes raw coordinates against `1, ξ, ..., ξ^{p-1}`.
    pub fn from_raw(p: PrimeModulus, mut raw: Vec<i64>) -> Self {
        assert_eq!(raw.len(), p.get() as usize, "one coordinate per power of ξ");
        let last = raw[raw.len() - 1];
        if last != 0 {
            for c in &mut raw {
                *c -= last;
            }
        }
        CyclotomicValue { p, coeffs: raw }
    }

    pub fn zero(p: PrimeModulus) -> Self {
        CyclotomicValue { p, coeffs: vec![0; p.get() as usize] }
    }

    pub fn constant(p: PrimeModulus, c: i64) -> Self {
        let mut v = CyclotomicValue::zero(p);
        v.coeffs[0] = c;
        CyclotomicValue::from_raw(p, v.coeffs)
    }

    /// ξ^k.
    pub fn monomial(p: PrimeModulus, k: u64) -> Self {
        let mut raw = vec![0; p.get() as usize];
        raw[(k % p.get() as u64) as usize] = 1;
        CyclotomicValue::from_raw(p, raw)
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.p
    }

    /// Canonical coordinates; the last one is always 0.
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Multiplies by ξ^k.
    pub fn rotate(&self, k: u64) -> Self {
        let n = self.coeffs.len();
        let k = (k % n as u64) as usize;
        let mut raw = vec![0; n];
        for (t, &c) in self.coeffs.iter().enumerate() {
            raw[(t + k) % n] = c;
        }
        CyclotomicValue::from_raw(self.p, raw)
    }

    pub fn scale(&self, s: i64) -> Self {
        CyclotomicValue {
            p: self.p,
            coeffs: self.coeffs.iter().map(|&c| c.checked_mul(s).expect("coefficient overflow")).collect(),
        }
    }

    /// `Σ c_t e^{-2πit/p}` in double precision.
    pub fn evaluate_complex(&self) -> ComplexApprox {
        let p = self.p.get() as f64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(t, &c)| Complex64::from_polar(c as f64, -2.0 * std::f64::consts::PI * t as f64 / p))
            .sum()
    }

    fn same_field(&self, other: &Self) {
        assert_eq!(self.p, other.p, "cyclotomic values over different primes");
    }
}

impl Add for &CyclotomicValue {
    type Output = CyclotomicValue;
    fn add(self, rhs: Self) -> CyclotomicValue {
        self.same_field(rhs);
        let raw = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.checked_add(*b).expect("coefficient overflow")).collect();
        CyclotomicValue::from_raw(self.p, raw)
    }
}

impl Sub for &CyclotomicValue {
    type Output = CyclotomicValue;
    fn sub(self, rhs: Self) -> CyclotomicValue {
        self.same_field(rhs);
        let raw = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.checked_sub(*b).expect("coefficient overflow")).collect();
        CyclotomicValue::from_raw(self.p, raw)
    }
}

impl Neg for &CyclotomicValue {
    type Output = CyclotomicValue;
    fn neg(self) -> CyclotomicValue {
        CyclotomicValue::from_raw(self.p, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &CyclotomicValue {
    type Output = CyclotomicValue;
    /// Cyclic convolution mod `u^p - 1`, then reduction mod `1 + u + ... + u^{p-1}`.
    fn mul(self, rhs: Self) -> CyclotomicValue {
        self.same_field(rhs);
        let n = self.coeffs.len();
        let mut acc = vec![0i128; n];
        for (i, &a) in self.coeffs.iter().enumerate().filter(|(_, &a)| a != 0) {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                acc[(i + j) % n] += a as i128 * b as i128;
            }
        }
        let raw = acc.into_iter().map(|c| i64::try_from(c).expect("coefficient overflow")).collect();
        CyclotomicValue::from_raw(self.p, raw)
    }
}

impl fmt::Display for CyclotomicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pm(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    #[test]
    fn canonical_form() {
        let p = pm(3);
        assert_eq!(CyclotomicValue::from_raw(p, vec![3, 0, 0]).coeffs(), &[3, 0, 0]);
        assert!(CyclotomicValue::from_raw(p, vec![1, 1, 1]).is_zero());
        assert_eq!(CyclotomicValue::from_raw(p, vec![1, 1, 0]).coeffs(), &[1, 1, 0]);
        assert_eq!(CyclotomicValue::from_raw(p, vec![2, 1, 1]).coeffs(), &[1, 0, 0]);
    }

    #[test]
    fn evaluate_examples() {
        let p = pm(3);
        let z = CyclotomicValue::zero(p).evaluate_complex();
        assert!(z.norm() < 1e-12);
        let three = CyclotomicValue::from_raw(p, vec![3, 0, 0]).evaluate_complex();
        assert!((three - Complex64::new(3.0, 0.0)).norm() < 1e-12);
        // the raw form (not canonicalized) of 1 + ξ + ξ² also evaluates to zero
        let raw_sum: Complex64 = (0..3)
            .map(|t| Complex64::from_polar(1.0, -2.0 * std::f64::consts::PI * t as f64 / 3.0))
            .sum();
        assert!(raw_sum.norm() < 1e-12);
    }

    #[test]
    fn xi_has_order_p() {
        for q in [2, 3, 5, 7, 11] {
            let p = pm(q);
            let xi = CyclotomicValue::monomial(p, 1);
            let mut acc = CyclotomicValue::constant(p, 1);
            for k in 1..=q {
                acc = &acc * &xi;
                assert!(!acc.is_zero());
                assert_eq!(acc == CyclotomicValue::constant(p, 1), k == q);
            }
            let ev = xi.evaluate_complex();
            let expect = Complex64::from_polar(1.0, -2.0 * std::f64::consts::PI / q as f64);
            assert!((ev - expect).norm() < 1e-12);
        }
    }

    #[test]
    fn multiplication_matches_numeric() {
        let p = pm(7);
        let a = CyclotomicValue::from_raw(p, vec![1, -2, 0, 3, 5, 0, 1]);
        let b = CyclotomicValue::from_raw(p, vec![0, 4, 4, -1, 0, 2, 0]);
        let prod = (&a * &b).evaluate_complex();
        let expect = a.evaluate_complex() * b.evaluate_complex();
        assert!((prod - expect).norm() < 1e-9);
        assert_eq!(&(&a + &b) - &b, a);
        assert!((&a + &(-&a)).is_zero());
    }
}
