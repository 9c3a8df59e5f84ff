//! Small finite fields GF(p^k) with table-driven arithmetic.
//!
//! Elements are integers `0..q` encoding coefficient tuples in base `p`
//! (constant term least significant). The modulus is the monic irreducible
//! polynomial of degree `k` with the smallest such encoding.

use crate::arith;
use crate::error::{Error, Result};

/// Largest field order supported (tables are `q × q`).
pub const MAX_FIELD_ORDER: u64 = 1024;

#[derive(Debug, Clone)]
pub struct FiniteField {
    p: u32,
    k: u32,
    q: u32,
    modulus: Vec<u32>,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
    generator: u32,
}

fn digits(x: u32, p: u32, k: u32) -> Vec<u32> {
    let mut v = Vec::with_capacity(k as usize);
    let mut x = x;
    for _ in 0..k {
        v.push(x % p);
        x /= p;
    }
    v
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, c| acc * p + c)
}

/// Remainder of `a` modulo the monic polynomial `m` over GF(p); both given
/// as coefficient vectors, constant term first.
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for (i, c) in m.iter().enumerate() {
                let idx = i + shift;
                r[idx] = (r[idx] + p - (lead * c) % p) % p;
            }
        }
        r.pop();
    }
    r
}

fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

fn is_irreducible(m: &[u32], p: u32) -> bool {
    let k = m.len() - 1;
    for d in 1..=k / 2 {
        // every monic polynomial of degree d
        for low in 0..p.pow(d as u32) {
            let mut f = digits(low, p, d as u32);
            f.push(1);
            if poly_rem(m, &f, p).iter().all(|c| *c == 0) {
                return false;
            }
        }
    }
    true
}

impl FiniteField {
    pub fn new(q: u64) -> Result<Self> {
        let (p, k) = arith::prime_power(q).ok_or(Error::NotPrimePower(q))?;
        if q > MAX_FIELD_ORDER {
            return Err(Error::SizeGuard {
                what: "field order",
                limit: MAX_FIELD_ORDER as usize,
                got: q as usize,
            });
        }
        let (p, q) = (p as u32, q as u32);
        let modulus = (0..q)
            .map(|low| {
                let mut m = digits(low, p, k);
                m.push(1);
                m
            })
            .find(|m| is_irreducible(m, p))
            .expect("an irreducible polynomial of every degree exists");

        let n = q as usize;
        let mut add = vec![0u16; n * n];
        let mut mul = vec![0u16; n * n];
        let polys: Vec<Vec<u32>> = (0..q).map(|x| digits(x, p, k)).collect();
        for a in 0..n {
            for b in 0..n {
                let s: Vec<u32> = polys[a]
                    .iter()
                    .zip(&polys[b])
                    .map(|(x, y)| (x + y) % p)
                    .collect();
                add[a * n + b] = undigits(&s, p) as u16;
                let prod = poly_rem(&poly_mul(&polys[a], &polys[b], p), &modulus, p);
                let mut prod = prod;
                prod.resize(k as usize, 0);
                mul[a * n + b] = undigits(&prod, p) as u16;
            }
        }
        let mut neg = vec![0u16; n];
        let mut inv = vec![0u16; n];
        for a in 0..n {
            for b in 0..n {
                if add[a * n + b] == 0 {
                    neg[a] = b as u16;
                }
                if mul[a * n + b] == 1 {
                    inv[a] = b as u16;
                }
            }
        }
        let mut f = FiniteField {
            p,
            k,
            q,
            modulus,
            add,
            mul,
            neg,
            inv,
            generator: 1,
        };
        f.generator = (1..q)
            .find(|&g| f.mult_order(g) == q - 1)
            .ok_or_else(|| Error::Unsupported("multiplicative group not cyclic".into()))?;
        Ok(f)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Modulus coefficients, constant term first, monic.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// A generator of the multiplicative group.
    pub fn generator(&self) -> u32 {
        self.generator
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[(a * self.q + b) as usize] as u32
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[(a * self.q + b) as usize] as u32
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        self.neg[a as usize] as u32
    }

    /// Multiplicative inverse; `inv(0)` is 0.
    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize] as u32
    }

    pub fn mult_order(&self, a: u32) -> u32 {
        assert!(a != 0);
        let mut x = a;
        let mut k = 1;
        while x != 1 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Coefficient tuple of an element, constant term first.
    pub fn coefficients(&self, a: u32) -> Vec<u32> {
        digits(a, self.p, self.k)
    }
}
