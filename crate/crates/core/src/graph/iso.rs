//! Isomorphism of small graphs by colour refinement with individualization.

use super::Graph;
use crate::error::{Error, Result};

pub const MAX_ISO_VERTICES: usize = 64;

struct Pair<'a> {
    a: &'a Graph,
    b: &'a Graph,
    n: usize,
}

impl Pair<'_> {
    fn neighbors(&self, v: usize) -> Vec<usize> {
        if v < self.n {
            self.a.neighbors(v).collect()
        } else {
            self.b.neighbors(v - self.n).map(|u| u + self.n).collect()
        }
    }

    /// Refines to the coarsest equitable colouring of the disjoint union;
    /// colour names depend only on signatures, so both halves stay comparable.
    fn refine(&self, colours: &mut Vec<u32>) {
        let nbrs: Vec<Vec<usize>> = (0..2 * self.n).map(|v| self.neighbors(v)).collect();
        let mut classes = distinct(colours);
        loop {
            let sigs: Vec<(u32, Vec<u32>)> = (0..2 * self.n)
                .map(|v| {
                    let mut s: Vec<u32> = nbrs[v].iter().map(|&u| colours[u]).collect();
                    s.sort_unstable();
                    (colours[v], s)
                })
                .collect();
            let mut uniq = sigs.clone();
            uniq.sort();
            uniq.dedup();
            *colours = sigs
                .iter()
                .map(|s| uniq.binary_search(s).unwrap() as u32)
                .collect();
            let now = uniq.len();
            if now == classes {
                return;
            }
            classes = now;
        }
    }

    fn balanced(&self, colours: &[u32]) -> bool {
        let mut x = colours[..self.n].to_vec();
        let mut y = colours[self.n..].to_vec();
        x.sort_unstable();
        y.sort_unstable();
        x == y
    }

    fn search(&self, mut colours: Vec<u32>) -> bool {
        self.refine(&mut colours);
        if !self.balanced(&colours) {
            return false;
        }
        let mut size = vec![0usize; 2 * self.n + 1];
        for &c in &colours[..self.n] {
            size[c as usize] += 1;
        }
        let target = (0..self.n)
            .filter(|&v| size[colours[v] as usize] > 1)
            .min_by_key(|&v| (size[colours[v] as usize], v));
        let Some(v) = target else {
            let mut image = vec![0usize; self.n];
            for x in 0..self.n {
                image[x] = (self.n..2 * self.n).find(|&y| colours[y] == colours[x]).unwrap() - self.n;
            }
            return self
                .a
                .edges()
                .all(|(x, y)| self.b.has_edge(image[x], image[y]));
        };
        let fresh = colours.iter().max().unwrap() + 1;
        for w in self.n..2 * self.n {
            if colours[w] != colours[v] {
                continue;
            }
            let mut c = colours.clone();
            c[v] = fresh;
            c[w] = fresh;
            if self.search(c) {
                return true;
            }
        }
        false
    }
}

fn distinct(c: &[u32]) -> usize {
    let mut v = c.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

pub fn isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    let n = a.order().max(b.order());
    if n > MAX_ISO_VERTICES {
        return Err(Error::SizeGuard {
            what: "isomorphism test vertices",
            limit: MAX_ISO_VERTICES,
            got: n,
        });
    }
    if a.order() != b.order() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    let p = Pair { a, b, n: a.order() };
    Ok(p.search(vec![0; 2 * a.order()]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small() {
        assert!(!isomorphic(&Graph::path(4), &Graph::cycle(4)).unwrap());
        assert!(isomorphic(&Graph::cycle(6), &Graph::cycle(6).permuted(&[3, 1, 5, 0, 2, 4])).unwrap());
        // C6 vs two triangles: both 2-regular
        let tt = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]);
        assert!(!isomorphic(&Graph::cycle(6), &tt).unwrap());
        assert!(isomorphic(&Graph::new(0), &Graph::new(0)).unwrap());
    }
}
