//! Pairwise sweeps over cyclic-subgroup classes and conjugacy classes.
//!
//! A predicate that depends only on `⟨x⟩` and `⟨y⟩` is evaluated once per
//! pair of classes. When it is also invariant under conjugation, only one
//! class per conjugation orbit is swept and the other rows are transported.

use crate::bits;
use crate::group::{ClosureScratch, Group};
use crate::par::Exec;
use crate::Graph;
use std::cell::RefCell;

thread_local! {
    static SCRATCH: RefCell<ClosureScratch> = RefCell::new(ClosureScratch::new(0));
}

/// Runs `f` with a per-thread closure scratch sized for `n` elements.
pub(crate) fn with_scratch<T>(n: usize, f: impl FnOnce(&mut ClosureScratch) -> T) -> T {
    SCRATCH.with(|s| {
        let mut s = s.borrow_mut();
        if s.capacity() != n {
            *s = ClosureScratch::new(n);
        }
        f(&mut s)
    })
}

/// Orbits of cyclic subgroups under conjugation: for each class `c`, the
/// orbit representative `r` and an element `t` with `⟨r⟩^t = ⟨c⟩`.
pub(crate) fn class_orbits(g: &Group) -> (Vec<u32>, Vec<u32>) {
    let k = g.cyclic_class_count();
    let mut rep = vec![u32::MAX; k];
    let mut trans = vec![0u32; k];
    for r in 0..k as u32 {
        if rep[r as usize] != u32::MAX {
            continue;
        }
        rep[r as usize] = r;
        let base = g.class_rep(r);
        let mut queue = vec![r];
        let mut i = 0;
        while i < queue.len() {
            let c = queue[i] as usize;
            let x = g.conj(base, trans[c]);
            for &s in g.generators() {
                let d = g.cyclic_class(g.conj(x, s)) as usize;
                if rep[d] == u32::MAX {
                    rep[d] = r;
                    trans[d] = g.mul(trans[c], s);
                    queue.push(d as u32);
                }
            }
            i += 1;
        }
    }
    (rep, trans)
}

/// Adjacency between cyclic classes, diagonal included (the diagonal says
/// whether distinct generators of one cyclic subgroup are joined).
pub(crate) fn class_adjacency<P>(g: &Group, exec: Exec, transport: bool, pred: P) -> Vec<Vec<u64>>
where
    P: Fn(u32, u32) -> bool + Sync + Send,
{
    let k = g.cyclic_class_count();
    let w = bits::words_for(k);
    let reps: Vec<u32> = (0..k as u32).map(|c| g.class_rep(c)).collect();
    let sweep_row = |c: usize| {
        let mut row = vec![0u64; w];
        for d in 0..k {
            if pred(reps[c], reps[d]) {
                bits::set(&mut row, d);
            }
        }
        row
    };
    if !transport {
        return exec.map(k, sweep_row);
    }
    let (orbit, trans) = class_orbits(g);
    let roots: Vec<usize> = (0..k).filter(|&c| orbit[c] as usize == c).collect();
    let mut root_rows: Vec<Vec<u64>> = vec![Vec::new(); k];
    for &r in &roots {
        let row = exec.map(k, |d| pred(reps[r], reps[d]));
        let mut bitrow = vec![0u64; w];
        for (d, &b) in row.iter().enumerate() {
            if b {
                bits::set(&mut bitrow, d);
            }
        }
        root_rows[r] = bitrow;
    }
    exec.map(k, |c| {
        let r = orbit[c] as usize;
        if r == c {
            return root_rows[r].clone();
        }
        let ti = g.inv(trans[c]);
        let mut row = vec![0u64; w];
        for d in 0..k {
            let e = g.cyclic_class(g.conj(reps[d], ti)) as usize;
            if bits::get(&root_rows[r], e) {
                bits::set(&mut row, d);
            }
        }
        row
    })
}

/// Expands class adjacency to a graph on all elements.
pub(crate) fn expand_classes(g: &Group, exec: Exec, adj: &[Vec<u64>]) -> Graph {
    let n = g.order();
    let classes = g.cyclic_classes();
    let w = bits::words_for(n);
    let class_rows: Vec<Vec<u64>> = exec.map(adj.len(), |c| {
        let mut row = vec![0u64; w];
        for d in bits::ones(&adj[c]) {
            for &m in &classes[d] {
                bits::set(&mut row, m as usize);
            }
        }
        row
    });
    Graph::from_row_fn(n, exec, |v, row| {
        row.copy_from_slice(&class_rows[g.cyclic_class(v as u32) as usize]);
    })
}

/// Conjugacy-class representatives with, for every element `x`, the
/// representative `r` and an element `t` with `r^t = x`.
pub(crate) fn element_orbits(g: &Group) -> (Vec<u32>, Vec<u32>) {
    let n = g.order();
    let mut rep = vec![u32::MAX; n];
    let mut trans = vec![0u32; n];
    for r in 0..n as u32 {
        if rep[r as usize] != u32::MAX {
            continue;
        }
        rep[r as usize] = r;
        let mut queue = vec![r];
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            for &s in g.generators() {
                let y = g.conj(x, s);
                if rep[y as usize] == u32::MAX {
                    rep[y as usize] = r;
                    trans[y as usize] = g.mul(trans[x as usize], s);
                    queue.push(y);
                }
            }
            i += 1;
        }
    }
    (rep, trans)
}

/// Rows `row[x] = {y : pred(x, y)}` for a conjugation-invariant predicate,
/// sweeping only conjugacy-class representatives.
pub(crate) fn element_rows<P>(g: &Group, exec: Exec, pred: P) -> Vec<Vec<u64>>
where
    P: Fn(u32, u32) -> bool + Sync + Send,
{
    let n = g.order();
    let w = bits::words_for(n);
    let (rep, trans) = element_orbits(g);
    let roots: Vec<u32> = (0..n as u32).filter(|&x| rep[x as usize] == x).collect();
    let root_rows: Vec<Vec<u64>> = exec.map_slice(&roots, |&r| {
        let mut row = vec![0u64; w];
        for y in 0..n as u32 {
            if pred(r, y) {
                bits::set(&mut row, y as usize);
            }
        }
        row
    });
    let mut slot = vec![usize::MAX; n];
    for (i, &r) in roots.iter().enumerate() {
        slot[r as usize] = i;
    }
    exec.map(n, |x| {
        let r = rep[x] as usize;
        let src = &root_rows[slot[r]];
        if r == x {
            return src.clone();
        }
        let t = trans[x];
        let mut row = vec![0u64; w];
        for y in bits::ones(src) {
            bits::set(&mut row, g.conj(y as u32, t) as usize);
        }
        row
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group;

    #[test]
    fn transport_matches_direct_sweep() {
        let g = group::symmetric(4).unwrap();
        let pred = |a: u32, b: u32| g.generates_whole(a, b);
        let direct = class_adjacency(&g, Exec::Sequential, false, pred);
        let moved = class_adjacency(&g, Exec::Sequential, true, pred);
        assert_eq!(direct, moved);
        let rows = element_rows(&g, Exec::Sequential, |x, y| g.commutes(x, y));
        for x in 0..24u32 {
            for y in 0..24u32 {
                assert_eq!(bits::get(&rows[x as usize], y as usize), g.commutes(x, y));
            }
        }
    }
}
