//! Integer and rational polynomial helpers backing the power-basis
//! representation: cyclotomic polynomials Phi_n (cached), exact division,
//! and the extended Euclidean algorithm used for field inversion.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use once_cell::sync::Lazy;

/// All divisors of `n` in ascending order.
pub fn divisors(n: u32) -> Vec<u32> {
    let mut divs = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            divs.push(i);
            if i != n / i {
                divs.push(n / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}

/// Euler's totient.
pub fn euler_phi(n: u32) -> u32 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

static PHI_CACHE: Lazy<Mutex<HashMap<u32, Arc<Vec<BigInt>>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// The n-th cyclotomic polynomial, monic with ascending integer
/// coefficients, so `result.len() == euler_phi(n) + 1`.
///
/// Computed as (x^n - 1) / prod_{d | n, d < n} Phi_d and memoized, since the
/// reduction step of every arithmetic operation consults it.
pub fn cyclotomic_polynomial(n: u32) -> Arc<Vec<BigInt>> {
    assert!(n > 0, "cyclotomic polynomial needs n >= 1");
    if let Some(p) = PHI_CACHE.lock().unwrap().get(&n) {
        return Arc::clone(p);
    }
    let poly = if n == 1 {
        vec![BigInt::from(-1), BigInt::one()]
    } else {
        // x^n - 1
        let mut acc = vec![BigInt::zero(); n as usize + 1];
        acc[0] = BigInt::from(-1);
        acc[n as usize] = BigInt::one();
        for d in divisors(n) {
            if d == n {
                continue;
            }
            let phi_d = cyclotomic_polynomial(d);
            acc = exact_div_monic(&acc, &phi_d);
        }
        acc
    };
    let arc = Arc::new(poly);
    PHI_CACHE.lock().unwrap().insert(n, Arc::clone(&arc));
    arc
}

/// Exact division of integer polynomials where `b` is monic; the remainder
/// is known to vanish.
fn exact_div_monic(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    debug_assert!(b.last().map(|c| c.is_one()).unwrap_or(false));
    let mut rem: Vec<BigInt> = a.to_vec();
    let db = b.len() - 1;
    let da = a.len() - 1;
    let mut quot = vec![BigInt::zero(); da - db + 1];
    for deg in (db..=da).rev() {
        if rem[deg].is_zero() {
            continue;
        }
        let c = std::mem::take(&mut rem[deg]);
        for (i, bi) in b.iter().enumerate().take(db) {
            let t = &c * bi;
            rem[deg - db + i] -= t;
        }
        quot[deg - db] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

/// Degree of a rational polynomial (`None` for the zero polynomial).
pub fn rat_deg(p: &[BigRational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

fn rat_trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.len() > 1 && p.last().map(Zero::is_zero).unwrap_or(false) {
        p.pop();
    }
    p
}

/// Quotient and remainder of rational polynomials, `b` nonzero.
pub fn rat_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let db = rat_deg(b).expect("division by zero polynomial");
    let lead = b[db].clone();
    let mut rem: Vec<BigRational> = a.to_vec();
    let da = match rat_deg(&rem) {
        Some(d) if d >= db => d,
        _ => return (vec![BigRational::zero()], rat_trim(rem)),
    };
    let mut quot = vec![BigRational::zero(); da - db + 1];
    for deg in (db..=da).rev() {
        if rem[deg].is_zero() {
            continue;
        }
        let c = std::mem::take(&mut rem[deg]) / &lead;
        for (i, bi) in b.iter().enumerate().take(db) {
            if !bi.is_zero() {
                let t = &c * bi;
                rem[deg - db + i] -= t;
            }
        }
        quot[deg - db] = c;
    }
    (rat_trim(quot), rat_trim(rem))
}

fn rat_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                let t = ai * bj;
                out[i + j] += t;
            }
        }
    }
    rat_trim(out)
}

fn rat_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, ai) in a.iter().enumerate() {
        out[i] = ai.clone();
    }
    for (i, bi) in b.iter().enumerate() {
        out[i] -= bi;
    }
    rat_trim(out)
}

/// Bezout coefficient for inversion: returns `(g, u)` with
/// `u * a = g  (mod b)` and `g = gcd(a, b)` up to a rational unit.
pub fn rat_half_ext_gcd(
    a: &[BigRational],
    b: &[BigRational],
) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r0 = rat_trim(a.to_vec());
    let mut r1 = rat_trim(b.to_vec());
    let mut s0 = vec![BigRational::one()];
    let mut s1 = vec![BigRational::zero()];
    while rat_deg(&r1).is_some() {
        let (q, r) = rat_divmod(&r0, &r1);
        let s = rat_sub(&s0, &rat_mul(&q, &s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    (r0, s0)
}

/// Euclidean gcd / lcm on u64, saturating-free (desk-scale conductors).
pub fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

pub fn lcm_u64(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd_u64(a, b) * b
}

/// Signed magnitude bound helper used by the approximation layer.
pub fn rat_abs(r: &BigRational) -> BigRational {
    if r.is_negative() {
        -r.clone()
    } else {
        r.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeffs(p: &[i64]) -> Vec<BigInt> {
        p.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(*cyclotomic_polynomial(1), coeffs(&[-1, 1]));
        assert_eq!(*cyclotomic_polynomial(2), coeffs(&[1, 1]));
        assert_eq!(*cyclotomic_polynomial(3), coeffs(&[1, 1, 1]));
        assert_eq!(*cyclotomic_polynomial(4), coeffs(&[1, 0, 1]));
        assert_eq!(*cyclotomic_polynomial(6), coeffs(&[1, -1, 1]));
        assert_eq!(*cyclotomic_polynomial(8), coeffs(&[1, 0, 0, 0, 1]));
        assert_eq!(*cyclotomic_polynomial(12), coeffs(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn phi_degree_matches_totient() {
        for n in 1..=60 {
            assert_eq!(
                cyclotomic_polynomial(n).len() as u32 - 1,
                euler_phi(n),
                "degree of Phi_{n}"
            );
        }
    }

    #[test]
    fn totient_values() {
        let expect = [1u32, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4];
        for (i, e) in expect.iter().enumerate() {
            assert_eq!(euler_phi(i as u32 + 1), *e);
        }
    }
}
