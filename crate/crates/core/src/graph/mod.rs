//! Dense loop-free graphs and digraphs with one adjacency bit row per vertex.

mod cliques;
mod classes;
mod io;
mod iso;

pub use classes::{class_test, find_induced, ClassKind, ClassResult};
pub use cliques::{chromatic_number, clique_number, clique_params, max_cliques, CliqueParams, DEFAULT_CLIQUE_CAP, MAX_EXACT_CHI};
pub use io::{parse_edge_list, write_dot, write_edge_list};
pub use iso::{isomorphic, MAX_ISO_VERTICES};

use crate::bits::{self, BitSet};
use crate::error::{Error, Result};
use crate::par::Exec;
use std::collections::VecDeque;

/// Largest vertex count accepted by [`strong_product`].
pub const MAX_PRODUCT_VERTICES: usize = 100_000;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    w: usize,
    rows: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

impl Graph {
    pub fn new(n: usize) -> Self {
        let w = bits::words_for(n);
        Graph {
            n,
            w,
            rows: vec![0; n * w],
        }
    }

    pub fn complete(n: usize) -> Self {
        Graph::new(n).complement()
    }

    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::path(n);
        if n > 2 {
            g.add_edge(0, n - 1);
        }
        g
    }

    /// `K_{1,k}` with centre 0.
    pub fn star(k: usize) -> Self {
        Graph::from_edges(k + 1, (1..=k).map(|i| (0, i)))
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Builds a graph from per-vertex rows; `row(v)` may contain `v`, which is dropped.
    pub fn from_row_fn<F>(n: usize, exec: Exec, row: F) -> Self
    where
        F: Fn(usize, &mut [u64]) + Sync + Send,
    {
        let mut g = Graph::new(n);
        let w = g.w;
        exec.for_each_chunk(&mut g.rows, w.max(1), |v, r| {
            if v < n {
                row(v, r);
                bits::clear(r, v);
            }
        });
        g
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub(crate) fn words(&self) -> usize {
        self.w
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.w..(v + 1) * self.w]
    }

    #[inline]
    pub(crate) fn row_mut(&mut self, v: usize) -> &mut [u64] {
        &mut self.rows[v * self.w..(v + 1) * self.w]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        bits::get(self.row(u), v)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u != v {
            bits::set(self.row_mut(u), v);
            bits::set(self.row_mut(v), u);
        }
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        bits::clear(self.row_mut(u), v);
        bits::clear(self.row_mut(v), u);
    }

    pub fn neighbors(&self, v: usize) -> bits::Ones<'_> {
        bits::ones(self.row(v))
    }

    pub fn neighbor_set(&self, v: usize) -> BitSet {
        BitSet::from_words(self.n, self.row(v).to_vec())
    }

    pub fn degree(&self, v: usize) -> usize {
        bits::count(self.row(v))
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn complement(&self) -> Graph {
        let mut g = self.clone();
        for v in 0..self.n {
            let r = g.row_mut(v);
            r.iter_mut().for_each(|x| *x = !*x);
            bits::clear(r, v);
            bits::trim(r, self.n);
        }
        g
    }

    /// The induced subgraph on `vs`, vertex `i` of the result being `vs[i]`.
    pub fn induced(&self, vs: &[usize]) -> Result<Graph> {
        if let Some(&bad) = vs.iter().find(|&&v| v >= self.n) {
            return Err(Error::Unsupported(format!("vertex {bad} out of range")));
        }
        let mut g = Graph::new(vs.len());
        for (i, &u) in vs.iter().enumerate() {
            for (j, &v) in vs.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Removes the listed vertices, keeping the others in order.
    pub fn without(&self, removed: &[usize]) -> Graph {
        let gone = BitSet::from_indices(self.n, removed.iter().copied());
        let keep: Vec<usize> = (0..self.n).filter(|&v| !gone.contains(v)).collect();
        self.induced(&keep).unwrap()
    }

    fn zip_rows(&self, other: &Graph, f: impl Fn(u64, u64) -> u64) -> Result<Graph> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(self.n, other.n));
        }
        let mut g = self.clone();
        for (a, b) in g.rows.iter_mut().zip(&other.rows) {
            *a = f(*a, *b);
        }
        Ok(g)
    }

    /// Edges of `self` that are not edges of `other`.
    pub fn difference(&self, other: &Graph) -> Result<Graph> {
        self.zip_rows(other, |a, b| a & !b)
    }

    pub fn union(&self, other: &Graph) -> Result<Graph> {
        self.zip_rows(other, |a, b| a | b)
    }

    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.n == other.n && self.rows.iter().zip(&other.rows).all(|(a, b)| a & !b == 0)
    }

    /// Vertices adjacent to every other vertex.
    pub fn universal_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) + 1 == self.n).collect()
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) == 0).collect()
    }

    /// Connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = BitSet::new(self.n);
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen.contains(s) {
                continue;
            }
            seen.insert(s);
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                for u in self.neighbors(v) {
                    if seen.insert(u) {
                        comp.push(u);
                    }
                }
                i += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Breadth-first distances from `s`; unreachable vertices get `usize::MAX`.
    pub fn distances(&self, s: usize) -> Vec<usize> {
        let mut d = vec![usize::MAX; self.n];
        let mut q = VecDeque::new();
        d[s] = 0;
        q.push_back(s);
        while let Some(v) = q.pop_front() {
            for u in self.neighbors(v) {
                if d[u] == usize::MAX {
                    d[u] = d[v] + 1;
                    q.push_back(u);
                }
            }
        }
        d
    }

    /// Components with the diameter of each.
    pub fn metrics(&self) -> Metrics {
        self.metrics_with(Exec::default())
    }

    pub fn metrics_with(&self, exec: Exec) -> Metrics {
        let components = self.components();
        let ecc = exec.map(self.n, |v| {
            self.distances(v)
                .into_iter()
                .filter(|&d| d != usize::MAX)
                .max()
                .unwrap_or(0)
        });
        let diameters = components
            .iter()
            .map(|c| c.iter().map(|&v| ecc[v]).max().unwrap_or(0))
            .collect();
        Metrics {
            components,
            diameters,
        }
    }

    /// Every `k`-set of vertices (`k` = 1 or 2) has a common neighbour.
    pub fn has_spread(&self, k: usize) -> bool {
        match k {
            1 => self.n > 0 && (0..self.n).all(|v| self.degree(v) > 0),
            2 => (0..self.n).all(|u| ((u + 1)..self.n).all(|v| bits::intersects(self.row(u), self.row(v)))),
            _ => panic!("spread is only defined here for k = 1, 2"),
        }
    }

    /// Vertex `(v, w)` of the result is `v·b.order() + w`.
    pub fn strong_product(&self, b: &Graph) -> Result<Graph> {
        let nm = self.n.checked_mul(b.n).unwrap_or(usize::MAX);
        if nm > MAX_PRODUCT_VERTICES {
            return Err(Error::SizeGuard {
                what: "strong product vertices",
                limit: MAX_PRODUCT_VERTICES,
                got: nm,
            });
        }
        let m = b.n;
        let mut g = Graph::new(nm);
        for v1 in 0..self.n {
            for w1 in 0..m {
                let x = v1 * m + w1;
                for v2 in (0..self.n).filter(|&v2| v2 == v1 || self.has_edge(v1, v2)) {
                    for w2 in (0..m).filter(|&w2| w2 == w1 || b.has_edge(w1, w2)) {
                        let y = v2 * m + w2;
                        if x != y {
                            bits::set(g.row_mut(x), y);
                        }
                    }
                }
            }
        }
        Ok(g)
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        Graph::from_edges(self.n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() * 2 == self.n * self.n.saturating_sub(1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Metrics {
    pub components: Vec<Vec<usize>>,
    pub diameters: Vec<usize>,
}

impl Metrics {
    pub fn connected(&self) -> bool {
        self.components.len() <= 1
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    w: usize,
    rows: Vec<u64>,
}

impl std::fmt::Debug for Digraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Digraph(n={}, arcs={})", self.n, self.arc_count())
    }
}

impl Digraph {
    pub fn new(n: usize) -> Self {
        let w = bits::words_for(n);
        Digraph {
            n,
            w,
            rows: vec![0; n * w],
        }
    }

    pub fn from_arcs(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut d = Digraph::new(n);
        for (u, v) in arcs {
            d.add_arc(u, v);
        }
        d
    }

    pub fn from_row_fn<F>(n: usize, exec: Exec, row: F) -> Self
    where
        F: Fn(usize, &mut [u64]) + Sync + Send,
    {
        let mut d = Digraph::new(n);
        let w = d.w;
        exec.for_each_chunk(&mut d.rows, w.max(1), |v, r| {
            if v < n {
                row(v, r);
                bits::clear(r, v);
            }
        });
        d
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn out_row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.w..(v + 1) * self.w]
    }

    pub fn add_arc(&mut self, u: usize, v: usize) {
        if u != v {
            let w = self.w;
            bits::set(&mut self.rows[u * w..(u + 1) * w], v);
        }
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        bits::get(self.out_row(u), v)
    }

    pub fn out_degree(&self, v: usize) -> usize {
        bits::count(self.out_row(v))
    }

    pub fn in_degree(&self, v: usize) -> usize {
        (0..self.n).filter(|&u| self.has_arc(u, v)).count()
    }

    pub fn arc_count(&self) -> usize {
        (0..self.n).map(|v| self.out_degree(v)).sum()
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits::ones(self.out_row(u)).map(move |v| (u, v)))
    }

    /// `u → v → w` with `w ≠ u` implies `u → w`.
    pub fn is_transitive(&self) -> bool {
        (0..self.n).all(|u| {
            bits::ones(self.out_row(u)).all(|v| {
                self.out_row(v)
                    .iter()
                    .zip(self.out_row(u))
                    .enumerate()
                    .all(|(i, (&a, &b))| {
                        let self_bit = if u / 64 == i { 1u64 << (u % 64) } else { 0 };
                        a & !b & !self_bit == 0
                    })
            })
        })
    }

    /// The graph joining vertices with an arc in either direction.
    pub fn underlying(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for (u, v) in self.arcs() {
            g.add_edge(u, v);
        }
        g
    }
}

/// True iff `d` is transitive and `g` is its underlying graph.
pub fn comparability_check(d: &Digraph, g: &Graph) -> Result<bool> {
    if d.order() != g.order() {
        return Err(Error::SizeMismatch(d.order(), g.order()));
    }
    Ok(d.is_transitive() && d.underlying() == *g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algebra() {
        assert_eq!(Graph::complete(4).complement(), Graph::new(4));
        let c5 = Graph::cycle(5);
        assert_eq!(c5.complement().complement(), c5);
        assert_eq!(c5.induced(&[0, 1, 2]).unwrap(), Graph::path(3));
        assert!(matches!(c5.union(&Graph::new(4)), Err(Error::SizeMismatch(5, 4))));
        let k2 = Graph::complete(2);
        assert_eq!(k2.strong_product(&k2).unwrap(), Graph::complete(4));
        assert_eq!(Graph::new(1).strong_product(&c5).unwrap(), c5);
    }

    #[test]
    fn metrics_small() {
        let m = Graph::cycle(5).metrics();
        assert_eq!((m.components.len(), m.diameters[0]), (1, 2));
        let m = Graph::new(3).metrics();
        assert_eq!(m.components.len(), 3);
        assert_eq!(m.diameters, vec![0, 0, 0]);
        for n in 3..12 {
            assert_eq!(Graph::cycle(n).metrics().diameters, vec![n / 2]);
        }
    }

    #[test]
    fn spread() {
        assert!(!Graph::new(3).has_spread(1));
        let s = Graph::star(3);
        assert!(s.has_spread(1));
        assert!(!s.has_spread(2));
        assert!(Graph::complete(4).has_spread(2));
    }

    #[test]
    fn transitivity() {
        let d = Digraph::from_arcs(3, [(0, 1), (1, 2), (0, 2)]);
        assert!(comparability_check(&d, &Graph::complete(3)).unwrap());
        let bad = Digraph::from_arcs(3, [(0, 1), (1, 2)]);
        assert!(!bad.is_transitive());
        // mutual arcs do not force a loop
        let both = Digraph::from_arcs(2, [(0, 1), (1, 0)]);
        assert!(both.is_transitive());
    }
}
