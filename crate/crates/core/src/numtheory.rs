//! Elementary prime arithmetic: factorization, p-parts, Zsigmondy primes,
//! Mersenne recognition, and Bertrand-interval primes.
//!
//! Everything here is deterministic trial division or modular arithmetic on
//! `u64`; inputs at desk scale never get anywhere near the 64-bit limit.

use crate::{Error, Result};

/// Canonical factorization of a positive integer.
///
/// Primes are strictly increasing and exponents are at least 1, so the
/// factored value is reconstructible as the product of `prime^exponent`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeFactorization {
    pairs: Vec<(u64, u32)>,
}

impl PrimeFactorization {
    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.pairs
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.pairs.iter().map(|&(p, _)| p)
    }

    /// Product of `prime^exponent`; the value that was factored.
    pub fn value(&self) -> u64 {
        self.pairs
            .iter()
            .map(|&(p, e)| p.pow(e))
            .product::<u64>()
            .max(1)
    }
}

/// Factor `n >= 1` by trial division. `factorize(1)` has an empty pair list.
pub fn factorize(n: u64) -> Result<PrimeFactorization> {
    if n == 0 {
        return Err(Error::InvalidInput("factorize requires n >= 1".into()));
    }
    let mut pairs = Vec::new();
    let mut m = n;
    let mut d = 2u64;
    while d * d <= m {
        if m % d == 0 {
            let mut e = 0u32;
            while m % d == 0 {
                m /= d;
                e += 1;
            }
            pairs.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if m > 1 {
        pairs.push((m, 1));
    }
    Ok(PrimeFactorization { pairs })
}

/// Set of prime divisors of `n`, ascending.
pub fn prime_divisors(n: u64) -> Result<Vec<u64>> {
    Ok(factorize(n)?.primes().collect())
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Largest power of the prime `v` dividing `n >= 1`.
pub fn v_part(n: u64, v: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidInput("v_part requires n >= 1".into()));
    }
    if !is_prime(v) {
        return Err(Error::NotPrime(v));
    }
    let mut part = 1u64;
    let mut m = n;
    while m % v == 0 {
        part *= v;
        m /= v;
    }
    Ok(part)
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, m);
        }
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    acc
}

/// Smallest generator of the multiplicative group mod the odd prime `p`.
pub fn primitive_root_mod(p: u64) -> Result<u64> {
    if !is_prime(p) || p < 3 {
        return Err(Error::NotPrime(p));
    }
    let divisors = prime_divisors(p - 1)?;
    'cand: for g in 2..p {
        for &q in &divisors {
            if pow_mod(g, (p - 1) / q, p) == 1 {
                continue 'cand;
            }
        }
        return Ok(g);
    }
    Err(Error::Internal(format!("no primitive root mod {p}")))
}

/// Multiplicative order of `a` modulo the prime `q`, where `q` does not
/// divide `a`.
fn ord_mod(a: u64, q: u64) -> u64 {
    // The order divides q - 1; peel prime factors off q - 1.
    let mut ord = q - 1;
    for (p, _) in factorize(q - 1).expect("q >= 2").pairs() {
        while ord % p == 0 && pow_mod(a, ord / p, q) == 1 {
            ord /= p;
        }
    }
    ord
}

/// Smallest primitive prime divisor of `a^n - 1`: a prime dividing `a^n - 1`
/// but none of `a^e - 1` for `1 <= e <= n-1`. Absent exactly in the
/// exceptional cases `(a, n) = (2, 6)` and `n = 2` with `a + 1` a power of 2.
pub fn zsigmondy(a: u64, n: u64) -> Result<Option<u64>> {
    if a < 2 || n < 2 {
        return Err(Error::InvalidInput("zsigmondy requires a >= 2, n >= 2".into()));
    }
    // Exceptional cases of the existence theorem.
    if a == 2 && n == 6 {
        return Ok(None);
    }
    if n == 2 && (a + 1).is_power_of_two() {
        return Ok(None);
    }
    // A primitive prime divisor q is exactly a prime with ord_q(a) = n, and
    // then n | q - 1, so it suffices to scan primes q = 1 + k*n.
    let mut q = n + 1;
    loop {
        if is_prime(q) && a % q != 0 && ord_mod(a, q) == n {
            return Ok(Some(q));
        }
        q = q
            .checked_add(n)
            .ok_or_else(|| Error::Internal("zsigmondy scan overflowed".into()))?;
    }
}

/// True iff the prime `p` equals `2^s - 1` for some `s >= 2`.
pub fn is_mersenne_prime(p: u64) -> Result<bool> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok((p + 1).is_power_of_two() && p >= 3)
}

/// Largest prime divisor `t` of `p - 1` with `t` not dividing `p + 1`, if any.
///
/// Scans the prime divisors of `p - 1` literally; for odd divisors the second
/// condition is automatic, so the result is the largest odd prime divisor of
/// `p - 1` and is absent exactly when `p - 1` is a power of 2.
pub fn largest_t(p: u64) -> Result<Option<u64>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p < 5 {
        return Err(Error::InvalidInput("largest_t requires p >= 5".into()));
    }
    let mut best = None;
    for t in prime_divisors(p - 1)? {
        if (p + 1) % t != 0 {
            best = best.max(Some(t));
        }
    }
    Ok(best)
}

/// Smallest prime `l` with `(p+1)/2 < l < p-1`, for a prime `p > 11`.
///
/// Existence in this range is guaranteed by Bertrand's postulate at this
/// size; running out of range is an internal error.
pub fn bertrand_prime(p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p <= 11 {
        return Err(Error::InvalidInput("bertrand_prime requires p > 11".into()));
    }
    let lo = (p + 1) / 2;
    for l in (lo + 1)..(p - 1) {
        if is_prime(l) {
            return Ok(l);
        }
    }
    Err(Error::Internal(format!(
        "no prime strictly between {lo} and {}",
        p - 1
    )))
}

/// Ascending primes in `[lo, hi]`.
pub fn primes_in(lo: u64, hi: u64) -> Vec<u64> {
    (lo..=hi).filter(|&n| is_prime(n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorize_examples() {
        assert_eq!(factorize(1).unwrap().pairs(), &[]);
        assert_eq!(factorize(12).unwrap().pairs(), &[(2, 2), (3, 1)]);
        assert_eq!(
            factorize(660).unwrap().pairs(),
            &[(2, 2), (3, 1), (5, 1), (11, 1)]
        );
        assert!(factorize(0).is_err());
    }

    #[test]
    fn factorize_reconstructs() {
        for n in 1..5000u64 {
            assert_eq!(factorize(n).unwrap().value(), n);
        }
        for n in [999_983, 1_000_000, 123_456_789] {
            assert_eq!(factorize(n).unwrap().value(), n);
        }
    }

    #[test]
    fn v_part_examples() {
        assert_eq!(v_part(12, 2).unwrap(), 4);
        assert_eq!(v_part(7, 2).unwrap(), 1);
        assert_eq!(v_part(660, 11).unwrap(), 11);
        assert!(v_part(12, 4).is_err());
    }

    #[test]
    fn zsigmondy_exceptions_and_values() {
        assert_eq!(zsigmondy(2, 6).unwrap(), None);
        assert_eq!(zsigmondy(7, 2).unwrap(), None); // 7 = 2^3 - 1
        assert_eq!(zsigmondy(11, 2).unwrap(), Some(3));
        assert_eq!(zsigmondy(13, 2).unwrap(), Some(7));
        assert_eq!(zsigmondy(2, 4).unwrap(), Some(5));
        assert!(zsigmondy(1, 5).is_err());
    }

    #[test]
    fn zsigmondy_is_primitive() {
        // Directly check the defining property on a grid of small cases.
        use num_bigint::BigUint;
        use num_traits::One;
        for a in 2u64..12 {
            for n in 2u64..9 {
                let Some(q) = zsigmondy(a, n).unwrap() else {
                    continue;
                };
                let q_big = BigUint::from(q);
                let pow = |e: u64| BigUint::from(a).pow(e as u32) - BigUint::one();
                assert!((pow(n) % &q_big) == BigUint::from(0u32), "q | a^n - 1");
                for e in 1..n {
                    assert!(
                        (pow(e) % &q_big) != BigUint::from(0u32),
                        "q must not divide a^{e} - 1 for a={a}, n={n}, q={q}"
                    );
                }
            }
        }
    }

    #[test]
    fn zsigmondy_for_non_mersenne_primes() {
        for p in primes_in(5, 1000) {
            let z = zsigmondy(p, 2).unwrap();
            if is_mersenne_prime(p).unwrap() {
                assert_eq!(z, None, "Mersenne prime {p} has no Zsigmondy prime");
            } else {
                let q = z.expect("non-Mersenne prime must have a Zsigmondy prime");
                assert!(q % 2 == 1);
                assert_eq!((p + 1) % q, 0, "q | p + 1 for p = {p}");
                assert_ne!((p - 1) % q, 0, "q must not divide p - 1 for p = {p}");
            }
        }
    }

    #[test]
    fn mersenne_examples() {
        assert!(is_mersenne_prime(7).unwrap());
        assert!(!is_mersenne_prime(13).unwrap());
        assert!(is_mersenne_prime(31).unwrap());
        assert!(is_mersenne_prime(3).unwrap());
        assert!(!is_mersenne_prime(5).unwrap());
        assert!(is_mersenne_prime(8).is_err());
    }

    #[test]
    fn largest_t_examples() {
        assert_eq!(largest_t(11).unwrap(), Some(5));
        assert_eq!(largest_t(13).unwrap(), Some(3));
        assert_eq!(largest_t(17).unwrap(), None); // 16 = 2^4; the paper gap
        assert_eq!(largest_t(23).unwrap(), Some(11));
    }

    #[test]
    fn largest_t_equals_largest_odd_prime_divisor() {
        // The paper's wording is equivalent to "largest odd prime divisor of
        // p - 1": an odd prime dividing both p - 1 and p + 1 would divide 2.
        for p in primes_in(5, 2000) {
            let odd = prime_divisors(p - 1)
                .unwrap()
                .into_iter()
                .filter(|&q| q % 2 == 1)
                .max();
            assert_eq!(largest_t(p).unwrap(), odd, "p = {p}");
            if let Some(t) = largest_t(p).unwrap() {
                assert!(t % 2 == 1);
            }
        }
    }

    #[test]
    fn bertrand_examples() {
        assert_eq!(bertrand_prime(23).unwrap(), 13);
        assert_eq!(bertrand_prime(13).unwrap(), 11);
        assert_eq!(bertrand_prime(19).unwrap(), 11);
        assert!(bertrand_prime(11).is_err());
        for p in primes_in(13, 5000) {
            let l = bertrand_prime(p).unwrap();
            assert!((p + 1) / 2 < l && l < p - 1);
        }
    }
}
