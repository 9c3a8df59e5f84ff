//! The graphs of the hierarchy built from a group, and their satellites.
//!
//! Every graph except [`GraphKind::Dep`] has the group elements as vertices,
//! vertex `v` being element `v`. The dual enhanced power graph lives on the
//! non-identity elements: vertex `v` is element `v + 1`. The deep commuting
//! graph is built on the quotient of the supplied cover, see [`deep_commuting`].

mod analysis;
mod sweep;

pub use analysis::{
    com_minus_pow_connectivity, epow_bounds, gk_graph, graph_centre, hierarchy_report, CentreReport,
    ComMinusPow, EpowBounds, GkGraph, HierarchyReport, Inclusion,
};

use crate::bits;
use crate::error::{Error, Result};
use crate::group::{Closure, Group, Subgroup};
use crate::par::Exec;
use crate::{Digraph, Graph};
use std::fmt;
use std::str::FromStr;

/// Default bound on the group order for pairwise sweeps.
pub const DEFAULT_MAX_PAIR_ORDER: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GraphKind {
    Null,
    Pow,
    EPow,
    DCom,
    Com,
    Gen,
    NGen,
    Nilp,
    Sol,
    Engel,
    Dep,
    Complete,
}

impl GraphKind {
    pub const ALL: [GraphKind; 12] = [
        GraphKind::Null,
        GraphKind::Pow,
        GraphKind::EPow,
        GraphKind::DCom,
        GraphKind::Com,
        GraphKind::Gen,
        GraphKind::NGen,
        GraphKind::Nilp,
        GraphKind::Sol,
        GraphKind::Engel,
        GraphKind::Dep,
        GraphKind::Complete,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GraphKind::Null => "null",
            GraphKind::Pow => "pow",
            GraphKind::EPow => "epow",
            GraphKind::DCom => "dcom",
            GraphKind::Com => "com",
            GraphKind::Gen => "gen",
            GraphKind::NGen => "ngen",
            GraphKind::Nilp => "nilp",
            GraphKind::Sol => "sol",
            GraphKind::Engel => "engel",
            GraphKind::Dep => "dep",
            GraphKind::Complete => "complete",
        }
    }

    /// Kinds built by testing pairs of elements one at a time.
    pub fn is_pair_sweep(self) -> bool {
        matches!(
            self,
            GraphKind::Gen | GraphKind::NGen | GraphKind::Nilp | GraphKind::Sol | GraphKind::Engel
        )
    }

    /// The group element sitting at vertex `v`.
    pub fn vertex_element(self, v: usize) -> u32 {
        match self {
            GraphKind::Dep => v as u32 + 1,
            _ => v as u32,
        }
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.to_ascii_lowercase();
        GraphKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidSpec(format!("unknown graph kind `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuildOptions {
    pub exec: Exec,
    /// Largest group order accepted by the pair-sweep kinds.
    pub max_pair_order: usize,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            exec: Exec::default(),
            max_pair_order: DEFAULT_MAX_PAIR_ORDER,
        }
    }
}

impl BuildOptions {
    pub fn with_exec(exec: Exec) -> Self {
        BuildOptions {
            exec,
            ..Default::default()
        }
    }

    fn guard(&self, g: &Group, what: &'static str) -> Result<()> {
        if g.order() > self.max_pair_order {
            return Err(Error::SizeGuard {
                what,
                limit: self.max_pair_order,
                got: g.order(),
            });
        }
        Ok(())
    }
}

/// A central extension `H` with central subgroup `Z`.
#[derive(Clone, Debug)]
pub struct Cover {
    pub group: Group,
    pub center: Subgroup,
}

impl Cover {
    pub fn new(group: Group, center: Subgroup) -> Result<Cover> {
        let central = center
            .members()
            .iter()
            .all(|&z| group.generators().iter().all(|&h| group.commutes(z, h)));
        if !central {
            return Err(Error::InvalidCover(format!(
                "subgroup of order {} is not central in {}",
                center.len(),
                group.label()
            )));
        }
        Ok(Cover { group, center })
    }

    /// The cover with `Z = 1`.
    pub fn trivial(g: &Group) -> Cover {
        Cover {
            group: g.clone(),
            center: g.trivial_subgroup(),
        }
    }

    pub fn parse(spec: &str) -> Result<Cover> {
        let (h, z) = crate::group::parse_cover(spec)?;
        Cover::new(h, z)
    }

    pub fn quotient_order(&self) -> usize {
        self.group.order() / self.center.len()
    }
}

/// The built-in cover for the groups that have one: `SL(2,q)` over
/// `PSL(2,q)` for odd `q ≠ 9`, and the trivial cover for groups whose
/// multiplier is trivial (`PSL(2,2^k)` with `k ≥ 3`, `PSL(3,3)`, `M11`).
pub fn builtin_cover(spec: &str) -> Result<Option<Cover>> {
    let s = spec.trim();
    if let Some(q) = s.strip_prefix("psl2:").and_then(|q| q.parse::<u64>().ok()) {
        if q % 2 == 1 && q != 9 {
            let h = crate::group::sl2(q)?;
            let z = h.center();
            return Cover::new(h, z).map(Some);
        }
        if q.is_power_of_two() && q >= 8 {
            return Ok(Some(Cover::trivial(&crate::group::psl2(q)?)));
        }
        return Ok(None);
    }
    match s {
        "alt:5" => builtin_cover("psl2:5"),
        "psl3:3" | "m11" => Ok(Some(Cover::trivial(&crate::group::parse_group(s)?))),
        _ => Ok(None),
    }
}

/// Cyclic subgroups containing each cyclic subgroup, by class index.
pub(crate) fn containing_classes(g: &Group) -> Vec<Vec<u32>> {
    let k = g.cyclic_class_count();
    let mut up: Vec<Vec<u32>> = vec![Vec::new(); k];
    for d in 0..k as u32 {
        for &y in g.class_subgroup(d) {
            let c = g.cyclic_class(y) as usize;
            if up[c].last() != Some(&d) {
                up[c].push(d);
            }
        }
    }
    up
}

fn set_all(row: &mut [u64], items: &[u32]) {
    for &m in items {
        bits::set(row, m as usize);
    }
}

fn pow_graph(g: &Group, exec: Exec) -> Graph {
    let classes = g.cyclic_classes();
    let up = containing_classes(g);
    Graph::from_row_fn(g.order(), exec, |v, row| {
        let c = g.cyclic_class(v as u32);
        set_all(row, g.class_subgroup(c));
        for &d in &up[c as usize] {
            set_all(row, &classes[d as usize]);
        }
    })
}

fn epow_graph(g: &Group, exec: Exec) -> Graph {
    let up = containing_classes(g);
    Graph::from_row_fn(g.order(), exec, |v, row| {
        for &d in &up[g.cyclic_class(v as u32) as usize] {
            set_all(row, g.class_subgroup(d));
        }
    })
}

fn dep_graph(g: &Group, exec: Exec) -> Graph {
    let n = g.order();
    let classes = g.cyclic_classes();
    let up = containing_classes(g);
    let w = bits::words_for(n);
    let k = classes.len();
    let is_prime_class = |c: usize| crate::arith::is_prime(g.class_subgroup(c as u32).len() as u64);
    // elements whose cyclic subgroup contains the prime-order subgroup p
    let above: Vec<Option<Vec<u64>>> = exec.map(k, |p| {
        is_prime_class(p).then(|| {
            let mut row = vec![0u64; w];
            for &d in &up[p] {
                set_all(&mut row, &classes[d as usize]);
            }
            row
        })
    });
    let full = Graph::from_row_fn(n, exec, |v, row| {
        for &y in g.cyclic_subgroup(v as u32) {
            if let Some(r) = &above[g.cyclic_class(y) as usize] {
                for (a, b) in row.iter_mut().zip(r) {
                    *a |= b;
                }
            }
        }
    });
    full.without(&[0])
}

fn com_graph(g: &Group, exec: Exec) -> Graph {
    let adj = sweep::class_adjacency(g, exec, false, |a, b| g.commutes(a, b));
    sweep::expand_classes(g, exec, &adj)
}

fn generation_graph(g: &Group, exec: Exec, want: bool) -> Graph {
    let n = g.order();
    let adj = sweep::class_adjacency(g, exec, true, |a, b| {
        let top = n == 1 || sweep::with_scratch(n, |s| g.closure_size_or_top(&[a, b], s).is_none());
        top == want
    });
    sweep::expand_classes(g, exec, &adj)
}

fn nilp_graph(g: &Group, exec: Exec) -> Graph {
    let n = g.order();
    if g.is_nilpotent_members(&(0..n as u32).collect::<Vec<_>>()) {
        return Graph::complete(n);
    }
    let adj = sweep::class_adjacency(g, exec, true, |a, b| {
        sweep::with_scratch(n, |s| match g.closure_size_or_top(&[a, b], s) {
            None => false,
            Some(_) => g.is_nilpotent_members(g.scratch_members(s)),
        })
    });
    sweep::expand_classes(g, exec, &adj)
}

fn sol_graph(g: &Group, exec: Exec) -> Graph {
    let n = g.order();
    if g.subgroup_is(&g.whole(), crate::group::SubgroupKind::Solvable) {
        return Graph::complete(n);
    }
    let adj = sweep::class_adjacency(g, exec, true, |a, b| match g.generated_closure(&[a, b]) {
        Closure::Top => false,
        Closure::Proper(h) => g.is_solvable_members(h.members(), &[a, b]),
    });
    sweep::expand_classes(g, exec, &adj)
}

/// Engel graph; with `level = Some(k)` only relations `[x, ₘy] = 1` with
/// `m ≤ k` count.
pub fn engel_graph(g: &Group, level: Option<u32>, opts: &BuildOptions) -> Result<Graph> {
    opts.guard(g, "engel sweep group order")?;
    let related = |x, y| match g.engel_related(x, y) {
        Some(k) => level.map_or(true, |l| k <= l),
        None => false,
    };
    let rows = sweep::element_rows(g, opts.exec, |x, y| related(x, y) || related(y, x));
    Ok(Graph::from_row_fn(g.order(), opts.exec, |v, row| {
        row.copy_from_slice(&rows[v])
    }))
}

/// Arc `x → y` iff `[y, ₖx] = 1` for some `k`.
pub fn engel_digraph(g: &Group, opts: &BuildOptions) -> Result<Digraph> {
    opts.guard(g, "engel sweep group order")?;
    let rows = sweep::element_rows(g, opts.exec, |x, y| g.engel_related(y, x).is_some());
    Ok(Digraph::from_row_fn(g.order(), opts.exec, |v, row| {
        row.copy_from_slice(&rows[v])
    }))
}

/// Arc `x → y` iff `y` is a power of `x` other than `x`.
pub fn directed_power(g: &Group) -> Digraph {
    let d = Digraph::from_row_fn(g.order(), Exec::default(), |v, row| {
        set_all(row, g.cyclic_subgroup(v as u32));
    });
    debug_assert!(d.is_transitive());
    d
}

/// The deep commuting graph of `H/Z`: cosets are joined when their lifts
/// commute in `H`. Returns the quotient group together with the graph.
pub fn deep_commuting(cover: &Cover, exec: Exec) -> Result<(Group, Graph)> {
    let h = &cover.group;
    let q = h.quotient(&cover.center)?;
    let (reps, _) = h.cosets(&cover.center);
    let adj = sweep::class_adjacency(&q, exec, false, |a, b| {
        h.commutes(reps[a as usize], reps[b as usize])
    });
    let graph = sweep::expand_classes(&q, exec, &adj);
    Ok((q, graph))
}

/// Builds `kind` on `g`. The deep commuting graph needs a cover with
/// `|H/Z| = |G|` and is returned on the vertex numbering of `H/Z`.
pub fn build(g: &Group, kind: GraphKind, cover: Option<&Cover>, opts: &BuildOptions) -> Result<Graph> {
    let n = g.order();
    let exec = opts.exec;
    Ok(match kind {
        GraphKind::Null => Graph::new(n),
        GraphKind::Complete => Graph::complete(n),
        GraphKind::Pow => pow_graph(g, exec),
        GraphKind::EPow => epow_graph(g, exec),
        GraphKind::Com => com_graph(g, exec),
        GraphKind::Dep => dep_graph(g, exec),
        GraphKind::DCom => {
            let cover = cover.ok_or_else(|| Error::InvalidCover("deep commuting graph needs a cover".into()))?;
            if cover.quotient_order() != n {
                return Err(Error::InvalidCover(format!(
                    "cover quotient has order {}, group has order {}",
                    cover.quotient_order(),
                    n
                )));
            }
            deep_commuting(cover, exec)?.1
        }
        GraphKind::Gen | GraphKind::NGen => {
            opts.guard(g, "generation sweep group order")?;
            generation_graph(g, exec, kind == GraphKind::Gen)
        }
        GraphKind::Nilp => {
            opts.guard(g, "nilpotency sweep group order")?;
            nilp_graph(g, exec)
        }
        GraphKind::Sol => {
            opts.guard(g, "solvability sweep group order")?;
            sol_graph(g, exec)
        }
        GraphKind::Engel => engel_graph(g, None, opts)?,
    })
}

/// Which vertices a reduced graph drops.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reduction {
    None,
    /// The identity vertex.
    Identity,
    /// Every vertex joined to all others.
    Centre,
}

impl FromStr for Reduction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "none" => Ok(Reduction::None),
            "identity" => Ok(Reduction::Identity),
            "centre" | "center" => Ok(Reduction::Centre),
            _ => Err(Error::InvalidSpec(format!("unknown reduction `{s}`"))),
        }
    }
}

/// The reduced graph and the surviving original vertices, in order.
pub fn reduce(graph: &Graph, kind: GraphKind, how: Reduction) -> (Graph, Vec<usize>) {
    let removed: Vec<usize> = match how {
        Reduction::None => Vec::new(),
        Reduction::Identity if kind == GraphKind::Dep => Vec::new(),
        Reduction::Identity => vec![0],
        Reduction::Centre => graph.universal_vertices(),
    };
    let kept = (0..graph.order()).filter(|v| !removed.contains(v)).collect();
    (graph.without(&removed), kept)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group;

    fn brute(g: &Group, pred: impl Fn(u32, u32) -> bool) -> Graph {
        let n = g.order();
        let mut out = Graph::new(n);
        for x in 0..n {
            for y in x + 1..n {
                if pred(x as u32, y as u32) {
                    out.add_edge(x, y);
                }
            }
        }
        out
    }

    #[test]
    fn builds_match_definitions() {
        let opts = BuildOptions::default();
        for g in [group::symmetric(4).unwrap(), group::quaternion().unwrap(), group::cyclic(12).unwrap()] {
            let cyc = |x: u32| g.cyclic_subgroup(x).to_vec();
            let pow = brute(&g, |x, y| cyc(x).contains(&y) || cyc(y).contains(&x));
            assert_eq!(build(&g, GraphKind::Pow, None, &opts).unwrap(), pow);
            let epow = brute(&g, |x, y| {
                let h = g.closure(&[x, y]);
                g.subgroup_is(&h, crate::group::SubgroupKind::Cyclic)
            });
            assert_eq!(build(&g, GraphKind::EPow, None, &opts).unwrap(), epow);
            let com = brute(&g, |x, y| g.commutes(x, y));
            assert_eq!(build(&g, GraphKind::Com, None, &opts).unwrap(), com);
            let gen = brute(&g, |x, y| g.closure(&[x, y]).len() == g.order());
            assert_eq!(build(&g, GraphKind::Gen, None, &opts).unwrap(), gen);
            assert_eq!(build(&g, GraphKind::NGen, None, &opts).unwrap(), gen.complement());
            let nilp = brute(&g, |x, y| g.subgroup_is(&g.closure(&[x, y]), crate::group::SubgroupKind::Nilpotent));
            assert_eq!(build(&g, GraphKind::Nilp, None, &opts).unwrap(), nilp);
            let sol = brute(&g, |x, y| g.subgroup_is(&g.closure(&[x, y]), crate::group::SubgroupKind::Solvable));
            assert_eq!(build(&g, GraphKind::Sol, None, &opts).unwrap(), sol);
            let engel = brute(&g, |x, y| g.engel_related(x, y).is_some() || g.engel_related(y, x).is_some());
            assert_eq!(build(&g, GraphKind::Engel, None, &opts).unwrap(), engel);
            let dep = build(&g, GraphKind::Dep, None, &opts).unwrap();
            for u in 0..dep.order() {
                for v in 0..dep.order() {
                    let (x, y) = (u as u32 + 1, v as u32 + 1);
                    let meet = cyc(x).iter().any(|&a| a != 0 && cyc(y).contains(&a));
                    assert_eq!(dep.has_edge(u, v), u != v && meet);
                }
            }
        }
    }

    #[test]
    fn klein_star_from_covers() {
        let v4 = group::klein_four().unwrap();
        for spec in ["dihedral:8,center", "q8,center"] {
            let cover = Cover::parse(spec).unwrap();
            let g = build(&v4, GraphKind::DCom, Some(&cover), &BuildOptions::default()).unwrap();
            assert!(crate::graph::isomorphic(&g, &Graph::star(3)).unwrap());
        }
        let bad = Cover::parse("q8,trivial").unwrap();
        assert!(build(&v4, GraphKind::DCom, Some(&bad), &BuildOptions::default()).is_err());
    }

    #[test]
    fn directed_power_degrees() {
        let q8 = group::quaternion().unwrap();
        let d = directed_power(&q8);
        let inv = (1..8).find(|&x| q8.element_order(x) == 2).unwrap();
        assert_eq!(d.in_degree(inv as usize), 6);
        assert_eq!(d.out_degree(0), 0);
        assert_eq!(d.in_degree(0), 7);
        assert!(crate::graph::comparability_check(&d, &build(&q8, GraphKind::Pow, None, &BuildOptions::default()).unwrap()).unwrap());
    }

    #[test]
    fn engel_arcs_in_s3() {
        let s3 = group::symmetric(3).unwrap();
        let d = engel_digraph(&s3, &BuildOptions::default()).unwrap();
        for x in 1..6u32 {
            for y in 1..6u32 {
                let (ox, oy) = (s3.element_order(x), s3.element_order(y));
                if x == y {
                    continue;
                }
                let expect = ox == oy && s3.commutes(x, y) || (ox == 3 && oy == 2);
                assert_eq!(d.has_arc(x as usize, y as usize), expect, "{x} -> {y}");
            }
        }
    }

    #[test]
    fn pair_sweep_guard() {
        let g = group::cyclic(50).unwrap();
        let opts = BuildOptions {
            max_pair_order: 10,
            ..Default::default()
        };
        assert!(build(&g, GraphKind::NGen, None, &opts).unwrap_err().is_size_guard());
        assert!(build(&g, GraphKind::Com, None, &opts).is_ok());
    }
}
