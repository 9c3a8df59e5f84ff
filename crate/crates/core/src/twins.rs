//! Twin detection and twin reduction to the cokernel.
//!
//! Each live vertex carries an XOR hash of its open neighbourhood (random
//! 64-bit key per vertex); the closed hash adds the vertex's own key. Twins
//! share a hash, candidates are confirmed by exact row comparison, and a
//! merge only touches the hashes of the removed vertex's neighbours.

use crate::bits;
use crate::error::{Error, Result};
use crate::graph::{isomorphic, Graph, MAX_ISO_VERTICES};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeSet, HashMap};
use std::fmt::{self, Write};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TwinKind {
    Open,
    Closed,
}

impl fmt::Display for TwinKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TwinKind::Open => "open",
            TwinKind::Closed => "closed",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MergeStep {
    pub kept: usize,
    pub merged: usize,
    pub kind: TwinKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReductionOrder {
    /// Always merge the lexicographically least twin pair.
    Deterministic,
    /// The deterministic order on a randomly relabeled copy of the graph.
    SeededRandom(u64),
    /// Exhaust open-twin merges, then closed-twin merges, and repeat.
    AlternatingRounds,
}

#[derive(Clone, Debug)]
pub struct ReductionTrace {
    pub start: Graph,
    pub steps: Vec<MergeStep>,
    pub result: Graph,
    /// Vertex of `result` absorbing each vertex of `start`.
    pub class_map: Vec<usize>,
}

/// Vertices whose open (or closed) neighbourhoods coincide; classes sorted,
/// ordered by least member.
pub fn twin_classes(g: &Graph, kind: TwinKind) -> Vec<Vec<usize>> {
    let mut groups: HashMap<Vec<u64>, Vec<usize>> = HashMap::new();
    for v in 0..g.order() {
        let mut row = g.row(v).to_vec();
        if kind == TwinKind::Closed {
            bits::set(&mut row, v);
        }
        groups.entry(row).or_default().push(v);
    }
    let mut out: Vec<Vec<usize>> = groups.into_values().collect();
    out.sort();
    for c in out.iter().filter(|c| c.len() > 1) {
        debug_assert_eq!(g.has_edge(c[0], c[1]), kind == TwinKind::Closed);
    }
    out
}

fn exact_twins(g: &Graph, u: usize, v: usize, kind: TwinKind) -> bool {
    let (ru, rv) = (g.row(u), g.row(v));
    let (wu, wv) = (u / 64, v / 64);
    ru.iter().zip(rv).enumerate().all(|(i, (&a, &b))| {
        let (mut a, mut b) = (a, b);
        if kind == TwinKind::Closed {
            if i == wu {
                a |= 1 << (u % 64);
            }
            if i == wv {
                b |= 1 << (v % 64);
            }
        }
        a == b
    })
}

struct Reducer {
    g: Graph,
    alive: Vec<bool>,
    keys: Vec<u64>,
    hash: [Vec<u64>; 2],
    buckets: [HashMap<u64, BTreeSet<u32>>; 2],
    cand: [BTreeSet<(u32, u32)>; 2],
}

fn slot(kind: TwinKind) -> usize {
    match kind {
        TwinKind::Open => 0,
        TwinKind::Closed => 1,
    }
}

const KINDS: [TwinKind; 2] = [TwinKind::Open, TwinKind::Closed];

impl Reducer {
    fn new(g: Graph, seed: u64) -> Self {
        let n = g.order();
        let mut r = Reducer {
            g,
            alive: vec![true; n],
            keys: Vec::new(),
            hash: [vec![0; n], vec![0; n]],
            buckets: [HashMap::new(), HashMap::new()],
            cand: [BTreeSet::new(), BTreeSet::new()],
        };
        r.rehash(seed);
        r
    }

    fn rehash(&mut self, seed: u64) {
        let n = self.g.order();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        self.keys = (0..n).map(|_| rng.gen()).collect();
        for k in 0..2 {
            self.buckets[k].clear();
            self.cand[k].clear();
        }
        for v in 0..n {
            if !self.alive[v] {
                continue;
            }
            let h = self.g.neighbors(v).fold(0u64, |h, u| h ^ self.keys[u]);
            self.hash[0][v] = h;
            self.hash[1][v] = h ^ self.keys[v];
            for k in 0..2 {
                self.buckets[k].entry(self.hash[k][v]).or_default().insert(v as u32);
            }
        }
        for k in 0..2 {
            for b in self.buckets[k].values() {
                if let Some(p) = first_pair(b) {
                    self.cand[k].insert(p);
                }
            }
        }
    }

    fn bucket_edit(&mut self, k: usize, h: u64, v: u32, insert: bool) {
        let b = self.buckets[k].entry(h).or_default();
        if let Some(p) = first_pair(b) {
            self.cand[k].remove(&p);
        }
        if insert {
            b.insert(v);
        } else {
            b.remove(&v);
        }
        if let Some(p) = first_pair(b) {
            self.cand[k].insert(p);
        }
        if b.is_empty() {
            self.buckets[k].remove(&h);
        }
    }

    fn remove_vertex(&mut self, v: usize) {
        for k in 0..2 {
            self.bucket_edit(k, self.hash[k][v], v as u32, false);
        }
        let nbrs: Vec<usize> = self.g.neighbors(v).collect();
        for w in nbrs {
            for k in 0..2 {
                let old = self.hash[k][w];
                self.bucket_edit(k, old, w as u32, false);
                self.hash[k][w] = old ^ self.keys[v];
                self.bucket_edit(k, old ^ self.keys[v], w as u32, true);
            }
            self.g.remove_edge(v, w);
        }
        self.alive[v] = false;
    }

    /// Least candidate pair among the allowed kinds, confirmed exactly; on a
    /// hash collision the keys are redrawn.
    fn next_pair(&mut self, allowed: &[TwinKind], reseed: &mut u64) -> Option<MergeStep> {
        loop {
            let best = allowed
                .iter()
                .filter_map(|&kind| self.cand[slot(kind)].first().map(|&(u, v)| (u, v, kind)))
                .min()?;
            let (u, v, kind) = (best.0 as usize, best.1 as usize, best.2);
            if exact_twins(&self.g, u, v, kind) {
                return Some(MergeStep {
                    kept: u,
                    merged: v,
                    kind,
                });
            }
            *reseed = reseed.wrapping_add(0x9e37_79b9_7f4a_7c15);
            self.rehash(*reseed);
        }
    }
}

fn first_pair(b: &BTreeSet<u32>) -> Option<(u32, u32)> {
    let mut it = b.iter();
    match (it.next(), it.next()) {
        (Some(&a), Some(&c)) => Some((a, c)),
        _ => None,
    }
}

fn reduce_deterministic(g: &Graph, alternating: bool) -> Vec<MergeStep> {
    let mut seed = 0x7717_2025u64;
    let mut r = Reducer::new(g.clone(), seed);
    let mut steps = Vec::new();
    let mut phase = 0usize;
    let mut idle = 0;
    loop {
        let step = if alternating {
            let s = r.next_pair(&KINDS[phase..phase + 1], &mut seed);
            if s.is_none() {
                idle += 1;
                if idle == 2 {
                    break;
                }
                phase ^= 1;
                continue;
            }
            idle = 0;
            s
        } else {
            r.next_pair(&KINDS, &mut seed)
        };
        let Some(step) = step else { break };
        r.remove_vertex(step.merged);
        steps.push(step);
    }
    steps
}

/// Exhaustive twin reduction.
pub fn cokernel(g: &Graph, order: ReductionOrder) -> ReductionTrace {
    let steps = match order {
        ReductionOrder::Deterministic => reduce_deterministic(g, false),
        ReductionOrder::AlternatingRounds => reduce_deterministic(g, true),
        ReductionOrder::SeededRandom(seed) => {
            let n = g.order();
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
            let mut back = vec![0; n];
            for (v, &p) in perm.iter().enumerate() {
                back[p] = v;
            }
            reduce_deterministic(&g.permuted(&perm), false)
                .into_iter()
                .map(|s| MergeStep {
                    kept: back[s.kept],
                    merged: back[s.merged],
                    kind: s.kind,
                })
                .collect()
        }
    };
    ReductionTrace::from_steps(g.clone(), steps)
}

impl ReductionTrace {
    fn from_steps(start: Graph, steps: Vec<MergeStep>) -> Self {
        let n = start.order();
        let mut parent: Vec<usize> = (0..n).collect();
        for s in &steps {
            parent[s.merged] = s.kept;
        }
        let survivors: Vec<usize> = (0..n).filter(|&v| parent[v] == v).collect();
        let mut rank = vec![usize::MAX; n];
        for (i, &v) in survivors.iter().enumerate() {
            rank[v] = i;
        }
        let class_map = (0..n)
            .map(|v| {
                let mut x = v;
                while parent[x] != x {
                    x = parent[x];
                }
                rank[x]
            })
            .collect();
        let result = start.induced(&survivors).unwrap();
        ReductionTrace {
            start,
            steps,
            result,
            class_map,
        }
    }

    pub fn size(&self) -> usize {
        self.result.order()
    }

    /// Replays the steps on `start`, checking each merged pair was a twin of
    /// the recorded kind, and that the final graph is `result` and twin-free.
    pub fn verify(&self) -> bool {
        let mut g = self.start.clone();
        let mut alive = vec![true; g.order()];
        for s in &self.steps {
            if !alive[s.kept] || !alive[s.merged] || !exact_twins(&g, s.kept, s.merged, s.kind) {
                return false;
            }
            let nbrs: Vec<usize> = g.neighbors(s.merged).collect();
            for w in nbrs {
                g.remove_edge(s.merged, w);
            }
            alive[s.merged] = false;
        }
        let survivors: Vec<usize> = (0..g.order()).filter(|&v| alive[v]).collect();
        let end = g.induced(&survivors).unwrap();
        end == self.result && is_twin_free(&end)
    }

    /// `MERGE kept merged open|closed` lines.
    pub fn export_steps(&self) -> String {
        let mut s = String::new();
        for m in &self.steps {
            writeln!(s, "MERGE {} {} {}", m.kept, m.merged, m.kind).unwrap();
        }
        s
    }

    /// `orig -> reduced` lines.
    pub fn export_class_map(&self) -> String {
        let mut s = String::new();
        for (v, c) in self.class_map.iter().enumerate() {
            writeln!(s, "{v} -> {c}").unwrap();
        }
        s
    }
}

pub fn is_twin_free(g: &Graph) -> bool {
    KINDS
        .iter()
        .all(|&k| twin_classes(g, k).iter().all(|c| c.len() == 1))
}

/// Runs `trials` seeded random reduction orders and checks that all the
/// cokernels are isomorphic.
pub fn confluence_test(g: &Graph, trials: usize, seed: u64) -> Result<bool> {
    if g.order() > MAX_ISO_VERTICES {
        return Err(Error::SizeGuard {
            what: "confluence test vertices",
            limit: MAX_ISO_VERTICES,
            got: g.order(),
        });
    }
    let first = cokernel(g, ReductionOrder::Deterministic).result;
    for t in 0..trials as u64 {
        let r = cokernel(g, ReductionOrder::SeededRandom(seed.wrapping_add(t))).result;
        if !isomorphic(&first, &r)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_classes() {
        assert_eq!(twin_classes(&Graph::complete(4), TwinKind::Closed), vec![vec![0, 1, 2, 3]]);
        assert_eq!(twin_classes(&Graph::new(3), TwinKind::Open), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn p4_is_twin_free() {
        let t = cokernel(&Graph::path(4), ReductionOrder::Deterministic);
        assert!(t.steps.is_empty());
        assert_eq!(t.size(), 4);
    }

    #[test]
    fn cograph_reduces_to_point() {
        let g = Graph::star(5).complement().union(&Graph::new(6)).unwrap();
        for order in [
            ReductionOrder::Deterministic,
            ReductionOrder::AlternatingRounds,
            ReductionOrder::SeededRandom(3),
        ] {
            let t = cokernel(&g, order);
            assert_eq!(t.size(), 1);
            assert!(t.verify());
        }
    }

    #[test]
    fn deterministic_picks_least_pair() {
        // 0 and 2 are open twins in P3; 0-1 are not twins
        let t = cokernel(&Graph::path(3), ReductionOrder::Deterministic);
        assert_eq!(
            t.steps[0],
            MergeStep {
                kept: 0,
                merged: 2,
                kind: TwinKind::Open
            }
        );
        assert_eq!(t.export_steps().lines().next(), Some("MERGE 0 2 open"));
    }
}
