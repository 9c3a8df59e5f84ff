//! Deterministic 64-bit number theory: primality, factoring, and the
//! prime-power conditions used by the PSL(2,q) cograph classification.

use crate::error::{Error, Result};

const TRIAL_LIMIT: u64 = 10_000;

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

/// Miller–Rabin with the first twelve primes as witnesses, which is exact
/// for every 64-bit input.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Brent's variant of Pollard rho. `n` must be odd, composite and not a
/// perfect power of a small prime; returns a non-trivial divisor.
fn rho(n: u64) -> u64 {
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut y, m) = (2u64, 128u64);
        let (mut g, mut r, mut q) = (1u64, 1u64, 1u64);
        let (mut x, mut ys) = (0u64, 0u64);
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..m.min(r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = gcd(q, n);
                k += m;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = gcd(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
        c += 1;
    }
}

fn factor_into(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

/// Prime factorization with multiplicity, ascending.
pub fn factorize(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    if n <= 1 {
        return out;
    }
    while n % 2 == 0 {
        out.push(2);
        n /= 2;
    }
    let mut p = 3;
    while p <= TRIAL_LIMIT && p * p <= n {
        while n % p == 0 {
            out.push(p);
            n /= p;
        }
        p += 2;
    }
    factor_into(n, &mut out);
    out.sort_unstable();
    out
}

/// Distinct prime divisors, ascending.
pub fn prime_divisors(n: u64) -> Vec<u64> {
    let mut f = factorize(n);
    f.dedup();
    f
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FactorKind {
    Unit,
    PrimePower,
    TwoDistinctPrimes,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorClass {
    pub value: u64,
    pub factors: Vec<u64>,
    pub kind: FactorKind,
}

impl FactorClass {
    /// Prime power (including 1 = p⁰) or a product of two distinct primes.
    pub fn is_pp_or_pq(&self) -> bool {
        self.kind != FactorKind::Other
    }
}

pub fn factor_classify(n: u64) -> FactorClass {
    let factors = factorize(n);
    let kind = match factors.as_slice() {
        [] => FactorKind::Unit,
        [first, ..] if factors.iter().all(|p| p == first) => FactorKind::PrimePower,
        [p, q] if p != q => FactorKind::TwoDistinctPrimes,
        _ => FactorKind::Other,
    };
    FactorClass {
        value: n,
        factors,
        kind,
    }
}

/// Returns `(p, k)` with `q = p^k`, or `None` if `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    let f = factorize(q);
    let p = *f.first()?;
    f.iter().all(|x| *x == p).then_some((p, f.len() as u32))
}

/// The two numbers whose factorization shape decides whether Pow(PSL(2,q))
/// is a cograph: `q∓1` for even `q`, `(q∓1)/2` for odd `q`.
pub fn psl2_condition_pair(q: u64) -> (u64, u64) {
    if q % 2 == 0 {
        (q - 1, q + 1)
    } else {
        ((q - 1) / 2, (q + 1) / 2)
    }
}

fn condition_holds(q: u64) -> bool {
    let (a, b) = psl2_condition_pair(q);
    factor_classify(a).is_pp_or_pq() && factor_classify(b).is_pp_or_pq()
}

pub fn psl2_cograph_condition(q: u64) -> Result<bool> {
    if q < 4 {
        return Err(Error::Unsupported(format!("q = {q} is below 4")));
    }
    if prime_power(q).is_none() {
        return Err(Error::NotPrimePower(q));
    }
    Ok(condition_holds(q))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConditionList {
    /// Exponents `d` with `q = 2^d` satisfying the condition.
    EvenExponents(u32),
    /// Odd prime powers `q` satisfying the condition.
    OddPrimePowers(u64),
}

pub const MAX_EVEN_EXPONENT: u32 = 63;
pub const MAX_ODD_Q: u64 = 1_000_000;

pub fn enumerate_condition_values(kind: ConditionList) -> Result<Vec<u64>> {
    match kind {
        ConditionList::EvenExponents(max) => {
            if max > MAX_EVEN_EXPONENT {
                return Err(Error::BoundExceeded {
                    got: max as u64,
                    max: MAX_EVEN_EXPONENT as u64,
                });
            }
            Ok((1..=max)
                .filter(|&d| condition_holds(1u64 << d))
                .map(u64::from)
                .collect())
        }
        ConditionList::OddPrimePowers(max) => {
            if max > MAX_ODD_Q {
                return Err(Error::BoundExceeded {
                    got: max,
                    max: MAX_ODD_Q,
                });
            }
            Ok((3..=max)
                .step_by(2)
                .filter(|&q| prime_power(q).is_some() && condition_holds(q))
                .collect())
        }
    }
}

pub fn euler_phi(m: u64) -> u64 {
    let mut r = m;
    for p in prime_divisors(m) {
        r = r / p * (p - 1);
    }
    r
}

/// lcm(1, …, m), failing on 64-bit overflow.
pub fn lcm_upto(m: u64) -> Result<u64> {
    let mut acc = 1u64;
    for k in 2..=m {
        let g = gcd(acc, k);
        acc = (acc / g)
            .checked_mul(k)
            .ok_or(Error::Overflow("lcm(1..m)"))?;
    }
    Ok(acc)
}

pub fn phi_and_lcm(m: u64) -> Result<(u64, u64)> {
    if m == 0 {
        return Err(Error::Unsupported("m must be positive".into()));
    }
    Ok((euler_phi(m), lcm_upto(m)?))
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    gcd(a, b)
}

/// Successive primes starting at `from`.
pub(crate) fn primes_from(from: u64) -> impl Iterator<Item = u64> {
    (from.max(2)..).filter(|n| is_prime(*n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial_division(mut n: u64) -> Vec<u64> {
        let mut out = Vec::new();
        let mut p = 2;
        while p * p <= n {
            while n % p == 0 {
                out.push(p);
                n /= p;
            }
            p += 1;
        }
        if n > 1 {
            out.push(n);
        }
        out
    }

    #[test]
    fn classify_examples() {
        let c = factor_classify(12);
        assert_eq!(c.factors, vec![2, 2, 3]);
        assert_eq!(c.kind, FactorKind::Other);
        assert_eq!(factor_classify(9).kind, FactorKind::PrimePower);
        assert_eq!(factor_classify(6).kind, FactorKind::TwoDistinctPrimes);
        assert_eq!(factor_classify(1).kind, FactorKind::Unit);
        let m61 = (1u64 << 61) - 1;
        assert!(is_prime(m61));
        assert_eq!(factor_classify(m61).kind, FactorKind::PrimePower);
    }

    #[test]
    fn factorization_matches_trial_division_below_1e5() {
        // the full 1e6 sweep runs in the acceptance suite
        for n in 1..100_000u64 {
            assert_eq!(factorize(n), trial_division(n), "n = {n}");
        }
    }

    #[test]
    fn large_semiprimes() {
        let p = 4_294_967_291u64; // largest prime below 2^32
        let q = 4_294_967_279u64;
        assert_eq!(factorize(p * q), vec![q, p]);
        assert_eq!(factorize((1u64 << 63) + 1).iter().product::<u64>(), (1u64 << 63) + 1);
    }

    #[test]
    fn psl2_condition_examples() {
        assert!(psl2_cograph_condition(8).unwrap());
        assert!(!psl2_cograph_condition(23).unwrap());
        assert!(psl2_cograph_condition(13).unwrap());
        assert!(!psl2_cograph_condition(25).unwrap());
        assert!(matches!(psl2_cograph_condition(12), Err(Error::NotPrimePower(12))));
        assert!(psl2_cograph_condition(3).is_err());
    }

    #[test]
    fn small_odd_list() {
        assert_eq!(
            enumerate_condition_values(ConditionList::OddPrimePowers(10)).unwrap(),
            vec![3, 5, 7, 9]
        );
        assert!(enumerate_condition_values(ConditionList::EvenExponents(64)).is_err());
    }

    #[test]
    fn phi_lcm() {
        assert_eq!(phi_and_lcm(6).unwrap(), (2, 60));
        assert_eq!(phi_and_lcm(1).unwrap(), (1, 1));
        assert!(lcm_upto(42).is_ok());
        assert!(lcm_upto(60).is_err());
    }
}
