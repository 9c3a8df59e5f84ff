//! Permutations on `0..degree` stored as image vectors.

use crate::error::{Error, Result};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u16>);

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm((0..degree as u16).collect())
    }

    pub fn from_images(images: Vec<u16>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            let i = i as usize;
            if i >= images.len() || seen[i] {
                return Err(Error::Unsupported("image vector is not a bijection".into()));
            }
            seen[i] = true;
        }
        Ok(Perm(images))
    }

    /// Builds a permutation of `degree` points from 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut img: Vec<u16> = (0..degree as u16).collect();
        let mut used = vec![false; degree];
        for c in cycles {
            for (i, &x) in c.iter().enumerate() {
                if x >= degree || used[x] {
                    return Err(Error::Unsupported(format!("bad cycle point {x}")));
                }
                used[x] = true;
                img[x] = c[(i + 1) % c.len()] as u16;
            }
        }
        Ok(Perm(img))
    }

    /// Parses cycle notation with 1-based points, e.g. `(1,2)(3,4)`.
    /// Returns the 0-based cycles; the identity is `()`.
    pub fn parse_cycles(text: &str) -> Result<Vec<Vec<usize>>> {
        let bad = |m: &str| Error::Parse {
            line: 0,
            msg: format!("{m} in `{text}`"),
        };
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(|| bad("expected `(`"))?;
            let close = body.find(')').ok_or_else(|| bad("unclosed cycle"))?;
            let inner = body[..close].trim();
            if !inner.is_empty() {
                let pts = inner
                    .split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|s| !s.is_empty())
                    .map(|s| {
                        s.parse::<usize>()
                            .ok()
                            .filter(|v| *v >= 1)
                            .map(|v| v - 1)
                            .ok_or_else(|| bad("bad point"))
                    })
                    .collect::<Result<Vec<_>>>()?;
                cycles.push(pts);
            }
            rest = body[close + 1..].trim_start();
        }
        Ok(cycles)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u16] {
        &self.0
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.0[x] as usize
    }

    /// `self * other`: apply `self` first, then `other` (left-to-right, as in GAP).
    pub fn then(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&x| other.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut r = vec![0u16; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            r[x as usize] = i as u16;
        }
        Perm(r)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// Non-trivial cycles, each starting at its least point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut c = vec![s];
            seen[s] = true;
            let mut x = self.apply(s);
            while x != s {
                seen[x] = true;
                c.push(x);
                x = self.apply(x);
            }
            if c.len() > 1 {
                out.push(c);
            }
        }
        out
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.apply(i) != i).collect()
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1, |acc, c| crate::arith::lcm(acc, c.len() as u64))
    }

    pub fn pow(&self, e: u64) -> Perm {
        let mut r = Perm::identity(self.degree());
        let mut b = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                r = r.then(&b);
            }
            b = b.then(&b);
            e >>= 1;
        }
        r
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let pts: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", pts.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_roundtrip_and_composition() {
        let c = Perm::parse_cycles("(1,2,3)(4,5)").unwrap();
        let p = Perm::from_cycles(5, &c).unwrap();
        assert_eq!(p.to_string(), "(1,2,3)(4,5)");
        assert_eq!(p.order(), 6);
        assert!(!p.is_even());
        assert!(p.then(&p.inverse()).is_identity());
        assert_eq!(p.pow(6), Perm::identity(5));
        let a = Perm::from_cycles(3, &[vec![0, 1]]).unwrap();
        let b = Perm::from_cycles(3, &[vec![1, 2]]).unwrap();
        // apply a then b: 0 -> 1 -> 2
        assert_eq!(a.then(&b).apply(0), 2);
        assert!(Perm::parse_cycles("()").unwrap().is_empty());
        assert!(Perm::parse_cycles("(1,2").is_err());
    }
}
