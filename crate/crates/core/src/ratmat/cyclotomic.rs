//! Polynomial arithmetic modulo the m-th cyclotomic polynomial.
//!
//! Elements of ℚ(ζ_m) are stored as coefficient vectors of length φ(m) in the
//! power basis 1, ζ, …, ζ^{φ(m)-1}.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// The field ℚ(ζ_m) presented as ℚ[x]/(Φ_m).
#[derive(Debug)]
pub struct CycloField {
    order: u32,
    /// Monic Φ_m, ascending coefficients, length `degree + 1`.
    modulus: Vec<BigRational>,
}

impl CycloField {
    /// Shared handle for the field of order `m` (m ≥ 1).
    pub fn get(m: u32) -> Arc<CycloField> {
        assert!(m >= 1, "cyclotomic order must be positive");
        static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CycloField>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = cache.lock().expect("cyclotomic cache poisoned");
        guard
            .entry(m)
            .or_insert_with(|| {
                let modulus = cyclotomic_polynomial(m)
                    .into_iter()
                    .map(BigRational::from_integer)
                    .collect();
                Arc::new(CycloField { order: m, modulus })
            })
            .clone()
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// φ(m), the dimension of the field over ℚ.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[BigRational] {
        &self.modulus
    }

    /// Reduce an arbitrary polynomial modulo Φ_m into a vector of length φ(m).
    pub fn reduce(&self, mut poly: Vec<BigRational>) -> Vec<BigRational> {
        let deg = self.degree();
        while poly.len() > deg {
            let lead = poly.pop().expect("nonempty");
            if lead.is_zero() {
                continue;
            }
            let shift = poly.len() - deg;
            for (k, c) in self.modulus[..deg].iter().enumerate() {
                if !c.is_zero() {
                    poly[shift + k] -= &lead * c;
                }
            }
        }
        poly.resize(deg, BigRational::zero());
        poly
    }

    pub fn mul(&self, a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        let mut prod = vec![BigRational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        self.reduce(prod)
    }

    /// x^k reduced, for any integer k (negative powers use ζ^m = 1).
    pub fn power_of_generator(&self, k: i64) -> Vec<BigRational> {
        let m = self.order as i64;
        let e = k.rem_euclid(m) as usize;
        let mut poly = vec![BigRational::zero(); e + 1];
        poly[e] = BigRational::one();
        self.reduce(poly)
    }

    /// Multiplicative inverse of a nonzero element via the extended Euclidean
    /// algorithm against Φ_m.
    pub fn inverse(&self, a: &[BigRational]) -> Option<Vec<BigRational>> {
        let a = trim(a.to_vec());
        if a.is_empty() {
            return None;
        }
        // Invariant: s_k * a ≡ r_k (mod Φ_m).
        let mut r0 = self.modulus.clone();
        let mut r1 = a;
        let mut s0: Vec<BigRational> = Vec::new();
        let mut s1: Vec<BigRational> = vec![BigRational::one()];
        while r1.len() > 1 {
            let (q, r) = poly_divrem(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        if r1.is_empty() {
            // gcd is nontrivial; cannot happen for nonzero input since Φ_m is irreducible
            return None;
        }
        let c = r1[0].clone();
        let inv: Vec<BigRational> = s1.into_iter().map(|x| x / &c).collect();
        Some(self.reduce(inv))
    }
}

fn trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out = vec![BigRational::zero(); n];
    for (k, x) in a.iter().enumerate() {
        out[k] += x;
    }
    for (k, y) in b.iter().enumerate() {
        out[k] -= y;
    }
    trim(out)
}

/// Division with remainder; `den` must be nonzero and trimmed.
fn poly_divrem(num: &[BigRational], den: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = trim(num.to_vec());
    let dl = den.len();
    if rem.len() < dl {
        return (Vec::new(), rem);
    }
    let lead = den[dl - 1].clone();
    let mut quot = vec![BigRational::zero(); rem.len() - dl + 1];
    while rem.len() >= dl {
        let shift = rem.len() - dl;
        let c = rem[rem.len() - 1].clone() / &lead;
        for (k, d) in den.iter().enumerate() {
            rem[shift + k] -= &c * d;
        }
        quot[shift] = c;
        rem.pop();
        rem = trim(rem);
    }
    (trim(quot), rem)
}

/// Integer coefficients (ascending) of the m-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(m: u32) -> Vec<BigInt> {
    // Φ_m = (x^m - 1) / ∏_{d | m, d < m} Φ_d
    let mut num = vec![BigInt::zero(); m as usize + 1];
    num[0] = -BigInt::one();
    num[m as usize] = BigInt::one();
    for d in 1..m {
        if m.is_multiple_of(d) {
            num = exact_div_monic(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

fn exact_div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dl = den.len();
    let mut quot = vec![BigInt::zero(); num.len() - dl + 1];
    for shift in (0..quot.len()).rev() {
        let c = rem[shift + dl - 1].clone();
        for (k, d) in den.iter().enumerate() {
            rem[shift + k] -= &c * d;
        }
        quot[shift] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

/// Euler's totient.
pub fn totient(m: u32) -> usize {
    (1..=m).filter(|k| num_integer::gcd(*k, m) == 1).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), ints(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(3), ints(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn degree_is_totient() {
        for m in 1..=24 {
            assert_eq!(CycloField::get(m).degree(), totient(m), "m = {m}");
        }
    }

    #[test]
    fn generator_has_order_m() {
        for m in [3u32, 4, 5, 6, 8] {
            let f = CycloField::get(m);
            let one = f.power_of_generator(0);
            assert_eq!(f.power_of_generator(m as i64), one);
            assert_ne!(f.power_of_generator(1), one);
        }
    }
}
