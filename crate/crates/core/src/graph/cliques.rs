use super::Graph;
use crate::bits;
use crate::error::{Error, Result};

pub const DEFAULT_CLIQUE_CAP: usize = 1_000_000;

/// Exact chromatic numbers are computed up to this many vertices.
pub const MAX_EXACT_CHI: usize = 64;

/// All inclusion-maximal cliques (pivoting Bron–Kerbosch), each sorted,
/// in lexicographic order.
pub fn max_cliques(g: &Graph, cap: usize) -> Result<Vec<Vec<usize>>> {
    let w = g.words();
    let mut p = vec![0u64; w];
    for v in 0..g.order() {
        bits::set(&mut p, v);
    }
    let mut out = Vec::new();
    let mut r = Vec::new();
    bron_kerbosch(g, &mut r, p, vec![0u64; w], &mut out, cap)?;
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    Ok(out)
}

fn bron_kerbosch(
    g: &Graph,
    r: &mut Vec<usize>,
    mut p: Vec<u64>,
    mut x: Vec<u64>,
    out: &mut Vec<Vec<usize>>,
    cap: usize,
) -> Result<()> {
    if p.iter().all(|&w| w == 0) {
        if x.iter().all(|&w| w == 0) && !r.is_empty() {
            if out.len() >= cap {
                return Err(Error::CapExceeded(cap));
            }
            out.push(r.clone());
        }
        return Ok(());
    }
    let pivot = bits::ones(&p)
        .chain(bits::ones(&x))
        .max_by_key(|&u| {
            p.iter()
                .zip(g.row(u))
                .map(|(a, b)| (a & b).count_ones())
                .sum::<u32>()
        })
        .unwrap();
    let outside: Vec<u64> = p.iter().zip(g.row(pivot)).map(|(a, b)| a & !b).collect();
    let cand: Vec<usize> = bits::ones(&outside).collect();
    for v in cand {
        let row = g.row(v);
        let np = p.iter().zip(row).map(|(a, b)| a & b).collect();
        let nx = x.iter().zip(row).map(|(a, b)| a & b).collect();
        r.push(v);
        bron_kerbosch(g, r, np, nx, out, cap)?;
        r.pop();
        bits::clear(&mut p, v);
        bits::set(&mut x, v);
    }
    Ok(())
}

/// Greedy colouring of the candidate set: vertices in colour order and the
/// colour (1-based) of each.
fn colour_sort(g: &Graph, p: &[u64]) -> (Vec<usize>, Vec<usize>) {
    let mut uncoloured = p.to_vec();
    let mut order = Vec::new();
    let mut colours = Vec::new();
    let mut k = 0;
    while uncoloured.iter().any(|&w| w != 0) {
        k += 1;
        let mut q = uncoloured.clone();
        while let Some(v) = bits::first(&q) {
            bits::clear(&mut q, v);
            bits::clear(&mut uncoloured, v);
            for (a, b) in q.iter_mut().zip(g.row(v)) {
                *a &= !b;
            }
            order.push(v);
            colours.push(k);
        }
    }
    (order, colours)
}

fn expand(g: &Graph, size: usize, mut p: Vec<u64>, best: &mut usize) {
    let (order, colours) = colour_sort(g, &p);
    for i in (0..order.len()).rev() {
        if size + colours[i] <= *best {
            return;
        }
        let v = order[i];
        let np: Vec<u64> = p.iter().zip(g.row(v)).map(|(a, b)| a & b).collect();
        if np.iter().all(|&w| w == 0) {
            *best = (*best).max(size + 1);
        } else {
            expand(g, size + 1, np, best);
        }
        bits::clear(&mut p, v);
    }
}

/// Clique number by colour-bounded branch and bound.
pub fn clique_number(g: &Graph) -> usize {
    let mut p = vec![0u64; g.words()];
    for v in 0..g.order() {
        bits::set(&mut p, v);
    }
    let mut best = 0;
    expand(g, 0, p, &mut best);
    best
}

fn colourable(g: &Graph, k: usize, colour: &mut [usize], nbr: &[u64]) -> bool {
    let n = g.order();
    // pick the uncoloured vertex of largest saturation
    let mut pick = None;
    let mut best = (0usize, 0usize);
    for v in 0..n {
        if colour[v] != usize::MAX {
            continue;
        }
        let mut used = 0u64;
        for u in bits::ones(&nbr[v..v + 1]) {
            if colour[u] != usize::MAX {
                used |= 1 << colour[u];
            }
        }
        let key = (used.count_ones() as usize, nbr[v].count_ones() as usize);
        if pick.is_none() || key > best {
            pick = Some((v, used));
            best = key;
        }
    }
    let Some((v, used)) = pick else {
        return true;
    };
    let max_used = (0..n)
        .filter(|&u| colour[u] != usize::MAX)
        .map(|u| colour[u] + 1)
        .max()
        .unwrap_or(0);
    for c in 0..k.min(max_used + 1) {
        if used >> c & 1 == 0 {
            colour[v] = c;
            if colourable(g, k, colour, nbr) {
                return true;
            }
            colour[v] = usize::MAX;
        }
    }
    false
}

/// Exact chromatic number for graphs with at most 64 vertices.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    let n = g.order();
    if n > MAX_EXACT_CHI {
        return Err(Error::SizeGuard {
            what: "exact chromatic number vertices",
            limit: MAX_EXACT_CHI,
            got: n,
        });
    }
    if n == 0 {
        return Ok(0);
    }
    let nbr: Vec<u64> = (0..n).map(|v| g.row(v)[0]).collect();
    let mut k = clique_number(g);
    loop {
        let mut colour = vec![usize::MAX; n];
        if colourable(g, k, &mut colour, &nbr) {
            return Ok(k);
        }
        k += 1;
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CliqueParams {
    pub omega: usize,
    pub alpha: usize,
    pub chi: Option<usize>,
    pub theta: Option<usize>,
}

/// ω and α always; χ and θ when the graph is small enough for exact colouring.
pub fn clique_params(g: &Graph) -> CliqueParams {
    let comp = g.complement();
    let omega = clique_number(g);
    let alpha = clique_number(&comp);
    let chi = chromatic_number(g).ok();
    let theta = chromatic_number(&comp).ok();
    if let (Some(c), Some(t)) = (chi, theta) {
        assert!(omega <= c && alpha <= t);
    }
    CliqueParams {
        omega,
        alpha,
        chi,
        theta,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let c5 = Graph::cycle(5);
        let mc = max_cliques(&c5, 100).unwrap();
        assert_eq!(mc.len(), 5);
        assert!(mc.iter().all(|c| c.len() == 2));
        let p = clique_params(&c5);
        assert_eq!((p.omega, p.alpha, p.chi, p.theta), (2, 2, Some(3), Some(3)));
        let null = Graph::new(4);
        let p = clique_params(&null);
        assert_eq!((p.omega, p.alpha), (1, 4));
        assert!(matches!(max_cliques(&Graph::new(5), 3), Err(Error::CapExceeded(3))));
        assert!(chromatic_number(&Graph::new(65)).is_err());
    }
}
