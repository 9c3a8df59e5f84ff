//! Recognition of graph classes defined by forbidden induced subgraphs.

use super::Graph;
use crate::bits;
use std::collections::VecDeque;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassKind {
    Cograph,
    Chordal,
    Split,
    Threshold,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassResult {
    pub member: bool,
    /// A forbidden induced subgraph (in path/cycle order where applicable)
    /// when the graph is not in the class.
    pub witness: Option<Vec<usize>>,
}

impl ClassResult {
    fn yes() -> Self {
        ClassResult {
            member: true,
            witness: None,
        }
    }

    fn no(w: Vec<usize>) -> Self {
        ClassResult {
            member: false,
            witness: Some(w),
        }
    }
}

pub fn class_test(g: &Graph, kind: ClassKind) -> ClassResult {
    match kind {
        ClassKind::Cograph => match find_p4(g) {
            Some(w) => ClassResult::no(w),
            None => ClassResult::yes(),
        },
        ClassKind::Chordal => {
            if is_chordal(g) {
                ClassResult::yes()
            } else {
                ClassResult::no(chordless_cycle(g).expect("non-chordal graph has a long hole"))
            }
        }
        ClassKind::Split => {
            if is_split(g) {
                ClassResult::yes()
            } else {
                let w = [Graph::cycle(4), Graph::cycle(5), two_k2()]
                    .iter()
                    .find_map(|h| find_induced(g, h))
                    .expect("non-split graph contains C4, C5 or 2K2");
                ClassResult::no(w)
            }
        }
        ClassKind::Threshold => {
            if let Some(w) = find_p4(g) {
                return ClassResult::no(w);
            }
            match [Graph::cycle(4), two_k2()].iter().find_map(|h| find_induced(g, h)) {
                Some(w) => ClassResult::no(w),
                None => ClassResult::yes(),
            }
        }
    }
}

fn two_k2() -> Graph {
    Graph::from_edges(4, [(0, 1), (2, 3)])
}

/// An induced path `a-b-c-d`, found by scanning middle edges.
fn find_p4(g: &Graph) -> Option<Vec<usize>> {
    let w = g.words();
    let mut a_set = vec![0u64; w];
    let mut d_set = vec![0u64; w];
    for (b, c) in g.edges() {
        for (b, c) in [(b, c), (c, b)] {
            let (rb, rc) = (g.row(b), g.row(c));
            for i in 0..w {
                a_set[i] = rb[i] & !rc[i];
                d_set[i] = rc[i] & !rb[i];
            }
            bits::clear(&mut a_set, c);
            bits::clear(&mut d_set, b);
            for a in bits::ones(&a_set) {
                let ra = g.row(a);
                if let Some(d) = (0..w)
                    .find(|&i| d_set[i] & !ra[i] != 0)
                    .map(|i| i * 64 + (d_set[i] & !ra[i]).trailing_zeros() as usize)
                {
                    return Some(vec![a, b, c, d]);
                }
            }
        }
    }
    None
}

/// Maximum cardinality search order, then a perfect-elimination check.
fn is_chordal(g: &Graph) -> bool {
    let n = g.order();
    let mut weight = vec![0usize; n];
    let mut numbered = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !numbered[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .unwrap();
        numbered[v] = true;
        order.push(v);
        for u in g.neighbors(v) {
            if !numbered[u] {
                weight[u] += 1;
            }
        }
    }
    // reverse of the MCS order is a perfect elimination ordering iff chordal
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for &v in &order {
        let earlier: Vec<usize> = g.neighbors(v).filter(|&u| pos[u] < pos[v]).collect();
        if let Some(&parent) = earlier.iter().max_by_key(|&&u| pos[u]) {
            if earlier
                .iter()
                .any(|&u| u != parent && !g.has_edge(u, parent))
            {
                return false;
            }
        }
    }
    true
}

/// An induced cycle of length at least 4: for a vertex `v` with
/// non-adjacent neighbours `a`, `b`, a shortest `a`–`b` path avoiding the
/// rest of `N[v]` closes a chordless cycle through `v`.
fn chordless_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.order();
    for v in 0..n {
        let nb: Vec<usize> = g.neighbors(v).collect();
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                if g.has_edge(a, b) {
                    continue;
                }
                let blocked = |u: usize| u == v || (g.has_edge(v, u) && u != a && u != b);
                let mut prev = vec![usize::MAX; n];
                let mut q = VecDeque::from([a]);
                prev[a] = a;
                while let Some(x) = q.pop_front() {
                    if x == b {
                        break;
                    }
                    for y in g.neighbors(x) {
                        if prev[y] == usize::MAX && !blocked(y) {
                            prev[y] = x;
                            q.push_back(y);
                        }
                    }
                }
                if prev[b] != usize::MAX {
                    let mut cyc = vec![v];
                    let mut path = vec![b];
                    let mut x = b;
                    while x != a {
                        x = prev[x];
                        path.push(x);
                    }
                    path.reverse();
                    cyc.extend(path);
                    return Some(cyc);
                }
            }
        }
    }
    None
}

/// Degree-sequence characterization of split graphs.
fn is_split(g: &Graph) -> bool {
    let mut d: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
    d.sort_unstable_by(|a, b| b.cmp(a));
    let m = (0..d.len()).take_while(|&i| d[i] >= i).count();
    let head: usize = d[..m].iter().sum();
    let tail: usize = d[m..].iter().sum();
    head == m * m.saturating_sub(1) + tail
}

/// Finds vertices `w` with `g[w]` equal to `h` under the map `i ↦ w[i]`.
pub fn find_induced(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let k = h.order();
    let mut map = Vec::with_capacity(k);
    fn extend(g: &Graph, h: &Graph, map: &mut Vec<usize>) -> bool {
        let i = map.len();
        if i == h.order() {
            return true;
        }
        for v in 0..g.order() {
            if map.contains(&v) {
                continue;
            }
            if map
                .iter()
                .enumerate()
                .all(|(j, &u)| g.has_edge(u, v) == h.has_edge(j, i))
            {
                map.push(v);
                if extend(g, h, map) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    extend(g, h, &mut map).then_some(map)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_classes() {
        for n in 1..6 {
            for kind in [ClassKind::Cograph, ClassKind::Chordal, ClassKind::Split, ClassKind::Threshold] {
                assert!(class_test(&Graph::complete(n), kind).member);
            }
        }
        let c4 = class_test(&Graph::cycle(4), ClassKind::Split);
        assert!(!c4.member);
        assert_eq!(c4.witness.unwrap().len(), 4);
        let p4 = class_test(&Graph::path(4), ClassKind::Cograph);
        assert_eq!(p4.witness, Some(vec![0, 1, 2, 3]));
        let c6 = class_test(&Graph::cycle(6), ClassKind::Chordal);
        assert_eq!(c6.witness.unwrap().len(), 6);
        assert!(class_test(&Graph::cycle(5), ClassKind::Split).witness.is_some());
        assert!(class_test(&Graph::star(4), ClassKind::Threshold).member);
    }
}
