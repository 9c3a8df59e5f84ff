//! Centres, the Gruenberg–Kegel graph and the equality checks along the chain.

use super::{build, deep_commuting, BuildOptions, Cover, GraphKind};
use crate::arith;
use crate::error::Result;
use crate::graph::clique_number;
use crate::group::{Group, SeriesKind};
use crate::Graph;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GkGraph {
    pub primes: Vec<u64>,
    /// Pairs `p < q`, sorted.
    pub edges: Vec<(u64, u64)>,
}

impl GkGraph {
    pub fn is_null(&self) -> bool {
        self.edges.is_empty()
    }

    /// The graph on prime indices.
    pub fn to_graph(&self) -> Graph {
        let idx = |p: u64| self.primes.iter().position(|&x| x == p).unwrap();
        Graph::from_edges(self.primes.len(), self.edges.iter().map(|&(p, q)| (idx(p), idx(q))))
    }

    pub fn is_connected(&self) -> bool {
        self.to_graph().is_connected()
    }

    /// Prime-labeled edge list: one `p q` line per edge after a `primes` line.
    pub fn export(&self) -> String {
        let mut s = String::from("primes");
        for p in &self.primes {
            s += &format!(" {p}");
        }
        s.push('\n');
        for (p, q) in &self.edges {
            s += &format!("{p} {q}\n");
        }
        s
    }
}

impl fmt::Display for GkGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let primes: Vec<String> = self.primes.iter().map(u64::to_string).collect();
        let edges: Vec<String> = self.edges.iter().map(|(p, q)| format!("{{{p},{q}}}")).collect();
        write!(f, "primes {}; edges {}", primes.join(" "), edges.join(" "))
    }
}

pub fn gk_graph(g: &Group) -> GkGraph {
    let primes = arith::prime_divisors(g.order() as u64);
    let mut orders: Vec<u64> = g.element_orders().iter().map(|&o| o as u64).collect();
    orders.sort_unstable();
    orders.dedup();
    let mut edges = Vec::new();
    for (i, &p) in primes.iter().enumerate() {
        for &q in &primes[i + 1..] {
            if orders.iter().any(|&o| o % (p * q) == 0) {
                edges.push((p, q));
            }
        }
    }
    GkGraph { primes, edges }
}

/// Generators of the prime-order cyclic subgroups, with their orders.
fn prime_order_reps(g: &Group) -> Vec<(u32, u64)> {
    (0..g.cyclic_class_count() as u32)
        .map(|c| (g.class_rep(c), g.class_subgroup(c).len() as u64))
        .filter(|&(_, p)| arith::is_prime(p))
        .collect()
}

/// Commuting elements of distinct prime orders: a subgroup `C_p × C_q`.
pub(crate) fn cpcq_witness(g: &Group) -> Option<(u32, u32)> {
    let reps = prime_order_reps(g);
    reps.iter().enumerate().find_map(|(i, &(x, p))| {
        reps[i + 1..]
            .iter()
            .find(|&&(y, q)| p != q && g.commutes(x, y))
            .map(|&(y, _)| (x, y))
    })
}

/// Commuting elements of one prime order generating different subgroups:
/// a subgroup `C_p × C_p`. Restricted to `p` when given.
pub(crate) fn cpcp_witness(g: &Group, only: Option<u64>) -> Option<(u32, u32)> {
    let reps: Vec<(u32, u64)> = prime_order_reps(g)
        .into_iter()
        .filter(|&(_, p)| only.map_or(true, |o| o == p))
        .collect();
    reps.iter().enumerate().find_map(|(i, &(x, p))| {
        reps[i + 1..]
            .iter()
            .find(|&&(y, q)| p == q && g.commutes(x, y))
            .map(|&(y, _)| (x, y))
    })
}

pub(crate) fn is_generalized_quaternion(g: &Group) -> bool {
    let n = g.order();
    n >= 8
        && n.is_power_of_two()
        && !g.is_cyclic()
        && g.element_orders().iter().filter(|&&o| o == 2).count() == 1
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentreReport {
    pub kind: GraphKind,
    /// Elements (of the quotient, for the deep commuting graph) joined to
    /// every other vertex.
    pub members: Vec<u32>,
    pub is_subgroup: bool,
    /// The set predicted by the structure of the group, when known.
    pub expected: Option<Vec<u32>>,
}

impl CentreReport {
    pub fn consistent(&self) -> Option<bool> {
        self.expected.as_ref().map(|e| *e == self.members)
    }
}

fn predicted_pow_centre(g: &Group) -> Vec<u32> {
    let n = g.order();
    if g.is_cyclic() {
        if arith::prime_power(n as u64).is_some() || n == 1 {
            return (0..n as u32).collect();
        }
        return (0..n as u32)
            .filter(|&x| x == 0 || g.element_order(x) as usize == n)
            .collect();
    }
    if is_generalized_quaternion(g) {
        return g.center().members().to_vec();
    }
    vec![0]
}

/// Central elements whose order involves only primes `p` for which the
/// group has no `C_p × C_p`.
fn predicted_epow_centre(g: &Group) -> Vec<u32> {
    let good: Vec<u64> = arith::prime_divisors(g.order() as u64)
        .into_iter()
        .filter(|&p| cpcp_witness(g, Some(p)).is_none())
        .collect();
    g.center()
        .members()
        .iter()
        .copied()
        .filter(|&z| {
            arith::prime_divisors(g.element_order(z) as u64)
                .iter()
                .all(|p| good.contains(p))
        })
        .collect()
}

pub fn graph_centre(g: &Group, kind: GraphKind, cover: Option<&Cover>, opts: &BuildOptions) -> Result<CentreReport> {
    let (ambient, graph) = match (kind, cover) {
        (GraphKind::DCom, Some(c)) => deep_commuting(c, opts.exec)?,
        _ => (g.clone(), build(g, kind, cover, opts)?),
    };
    let mut members: Vec<u32> = graph
        .universal_vertices()
        .into_iter()
        .map(|v| kind.vertex_element(v))
        .collect();
    members.sort_unstable();
    let is_subgroup = ambient.subgroup_from_members(members.clone()).is_ok();
    let expected = match kind {
        GraphKind::Pow => Some(predicted_pow_centre(g)),
        GraphKind::EPow => Some(predicted_epow_centre(g)),
        GraphKind::Com => Some(g.center().members().to_vec()),
        GraphKind::Nilp => Some(
            g.series(&g.whole(), SeriesKind::UpperCentral)
                .last()
                .unwrap()
                .members()
                .to_vec(),
        ),
        GraphKind::DCom => cover.map(|c| {
            let (_, coset_of) = c.group.cosets(&c.center);
            let mut z: Vec<u32> = c
                .group
                .center()
                .members()
                .iter()
                .map(|&x| coset_of[x as usize])
                .collect();
            z.sort_unstable();
            z.dedup();
            z
        }),
        _ => None,
    };
    Ok(CentreReport {
        kind,
        members,
        is_subgroup,
        expected,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inclusion {
    pub lower: GraphKind,
    pub upper: GraphKind,
    pub holds: bool,
    pub equal: bool,
    /// Whether the inclusion is guaranteed for this group.
    pub required: bool,
}

#[derive(Clone, Debug)]
pub struct HierarchyReport {
    pub label: String,
    pub order: usize,
    pub abelian: bool,
    pub two_generated: bool,
    pub gk: GkGraph,
    pub cpcq_witness: Option<(u32, u32)>,
    pub cpcp_witness: Option<(u32, u32)>,
    /// Inclusions along the chain; those involving the deep commuting graph
    /// are evaluated on the cover quotient.
    pub inclusions: Vec<Inclusion>,
}

impl HierarchyReport {
    fn equal(&self, a: GraphKind, b: GraphKind) -> Option<bool> {
        self.inclusions
            .iter()
            .find(|i| i.lower == a && i.upper == b)
            .map(|i| i.equal)
    }

    pub fn pow_eq_epow(&self) -> bool {
        self.equal(GraphKind::Pow, GraphKind::EPow).unwrap()
    }

    pub fn epow_eq_com(&self) -> bool {
        self.equal(GraphKind::EPow, GraphKind::Com).unwrap()
    }

    /// `Pow = EPow` exactly when the Gruenberg–Kegel graph is null.
    pub fn pow_epow_criterion(&self) -> bool {
        self.pow_eq_epow() == self.gk.is_null() && self.gk.is_null() == self.cpcq_witness.is_none()
    }

    /// `EPow = Com` exactly when there is no `C_p × C_p`.
    pub fn epow_com_criterion(&self) -> bool {
        self.epow_eq_com() == self.cpcp_witness.is_none()
    }

    pub fn all_hold(&self) -> bool {
        self.inclusions.iter().all(|i| i.holds || !i.required)
            && self.pow_epow_criterion()
            && self.epow_com_criterion()
    }

    /// Ordered `key=value` facts.
    pub fn facts(&self) -> Vec<(String, String)> {
        let mut f = vec![
            ("group".to_string(), self.label.clone()),
            ("order".to_string(), self.order.to_string()),
            ("abelian".to_string(), self.abelian.to_string()),
            ("two_generated".to_string(), self.two_generated.to_string()),
            ("gk".to_string(), self.gk.to_string()),
            ("gk_null".to_string(), self.gk.is_null().to_string()),
            ("cpcq_witness".to_string(), witness(self.cpcq_witness)),
            ("cpcp_witness".to_string(), witness(self.cpcp_witness)),
        ];
        for i in &self.inclusions {
            let key = format!("{}_in_{}", i.lower, i.upper);
            f.push((
                key,
                format!("holds={} equal={} required={}", i.holds, i.equal, i.required),
            ));
        }
        f.push(("pow_epow_criterion".into(), self.pow_epow_criterion().to_string()));
        f.push(("epow_com_criterion".into(), self.epow_com_criterion().to_string()));
        f
    }
}

fn witness(w: Option<(u32, u32)>) -> String {
    match w {
        Some((x, y)) => format!("{x},{y}"),
        None => "none".into(),
    }
}

fn inclusion(a: &Graph, b: &Graph, lower: GraphKind, upper: GraphKind, required: bool) -> Inclusion {
    Inclusion {
        lower,
        upper,
        holds: a.is_subgraph_of(b),
        equal: a == b,
        required,
    }
}

pub fn hierarchy_report(g: &Group, cover: Option<&Cover>, opts: &BuildOptions) -> Result<HierarchyReport> {
    use GraphKind::*;
    let n = g.order();
    let graphs: Vec<Graph> = [Pow, EPow, Com, NGen, Nilp, Sol]
        .iter()
        .map(|&k| build(g, k, None, opts))
        .collect::<Result<_>>()?;
    let [pow, epow, com, ngen, nilp, sol] = &graphs[..] else {
        unreachable!()
    };
    let abelian = g.is_abelian();
    let two_generated = n == 1 || !ngen.is_complete();
    let mut inclusions = vec![
        inclusion(&Graph::new(n), pow, Null, Pow, true),
        inclusion(pow, epow, Pow, EPow, true),
        inclusion(epow, com, EPow, Com, true),
        inclusion(com, ngen, Com, NGen, !abelian || !two_generated),
        inclusion(ngen, &Graph::complete(n), NGen, Complete, true),
        inclusion(com, nilp, Com, Nilp, true),
        inclusion(nilp, sol, Nilp, Sol, true),
    ];
    if let Some(c) = cover {
        let (q, dcom) = deep_commuting(c, opts.exec)?;
        let qe = build(&q, EPow, None, opts)?;
        let qc = build(&q, Com, None, opts)?;
        inclusions.push(inclusion(&qe, &dcom, EPow, DCom, true));
        inclusions.push(inclusion(&dcom, &qc, DCom, Com, true));
    }
    Ok(HierarchyReport {
        label: g.label().to_string(),
        order: n,
        abelian,
        two_generated,
        gk: gk_graph(g),
        cpcq_witness: cpcq_witness(g),
        cpcp_witness: cpcp_witness(g, None),
        inclusions,
    })
}

/// `(Com − Pow)` on the non-identity elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComMinusPow {
    pub gk_connected: bool,
    /// Isolated vertices, as group elements.
    pub isolated: Vec<u32>,
    /// Components once isolated vertices are removed.
    pub components: usize,
}

impl ComMinusPow {
    /// The dichotomy: an isolated vertex, or connected.
    pub fn isolated_or_connected(&self) -> bool {
        !self.isolated.is_empty() || self.components <= 1
    }
}

pub fn com_minus_pow_connectivity(g: &Group, opts: &BuildOptions) -> Result<ComMinusPow> {
    opts.guard(g, "com minus pow group order")?;
    let com = build(g, GraphKind::Com, None, opts)?;
    let pow = build(g, GraphKind::Pow, None, opts)?;
    let diff = com.difference(&pow)?.without(&[0]);
    let iso = diff.isolated_vertices();
    let rest = diff.without(&iso);
    Ok(ComMinusPow {
        gk_connected: gk_graph(g).is_connected(),
        isolated: iso.iter().map(|&v| v as u32 + 1).collect(),
        components: rest.components().len(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpowBounds {
    pub omega: usize,
    pub max_order: usize,
    /// `Σ φ(m)` over the element orders `m`.
    pub chi_bound: u64,
    /// `lcm(1..m)` for the largest prime-power element order `m`, when it
    /// fits 64 bits.
    pub lcm_bound: Option<u64>,
}

impl EpowBounds {
    pub fn holds(&self) -> bool {
        self.omega == self.max_order
            && self.omega as u64 <= self.chi_bound
            && self.lcm_bound.map_or(true, |f| self.omega as u64 <= f)
    }
}

pub fn epow_bounds(g: &Group, opts: &BuildOptions) -> Result<EpowBounds> {
    let epow = build(g, GraphKind::EPow, None, opts)?;
    let mut orders: Vec<u64> = g.element_orders().iter().map(|&o| o as u64).collect();
    orders.sort_unstable();
    orders.dedup();
    let m = orders
        .iter()
        .copied()
        .filter(|&o| o == 1 || arith::prime_power(o).is_some())
        .max()
        .unwrap_or(1);
    Ok(EpowBounds {
        omega: clique_number(&epow),
        max_order: *orders.last().unwrap() as usize,
        chi_bound: orders.iter().map(|&o| arith::euler_phi(o)).sum(),
        lcm_bound: arith::lcm_upto(m).ok(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group;

    #[test]
    fn gk_examples() {
        let g = group::psl2(11).unwrap();
        assert_eq!(gk_graph(&g).to_string(), "primes 2 3 5 11; edges {2,3}");
        assert_eq!(gk_graph(&group::cyclic(6).unwrap()).edges, vec![(2, 3)]);
        let s4 = gk_graph(&group::symmetric(4).unwrap());
        assert!(s4.is_null() && s4.primes == vec![2, 3]);
    }

    #[test]
    fn centres() {
        let opts = BuildOptions::default();
        let s4 = group::symmetric(4).unwrap();
        let z = graph_centre(&s4, GraphKind::NGen, None, &opts).unwrap();
        assert_eq!(z.members.len(), 4);
        assert!(z.is_subgroup);
        let c6 = group::cyclic(6).unwrap();
        let c66 = group::direct_product(&c6, &c6).unwrap();
        let z = graph_centre(&c66, GraphKind::NGen, None, &opts).unwrap();
        assert!(!z.is_subgroup);
        assert!(z.members.iter().all(|&x| c66.element_order(x) != 6));
        assert_eq!(z.members.len(), 36 - c66.element_orders().iter().filter(|&&o| o == 6).count());
        let q8 = group::quaternion().unwrap();
        for kind in [GraphKind::Pow, GraphKind::EPow, GraphKind::Com, GraphKind::Nilp] {
            let r = graph_centre(&q8, kind, None, &opts).unwrap();
            assert_eq!(r.consistent(), Some(true), "{kind}");
        }
        assert_eq!(graph_centre(&q8, GraphKind::Pow, None, &opts).unwrap().members.len(), 2);
    }

    #[test]
    fn report_examples() {
        let opts = BuildOptions::default();
        let q8 = hierarchy_report(&group::quaternion().unwrap(), None, &opts).unwrap();
        assert!(q8.pow_eq_epow() && q8.all_hold());
        let s4 = hierarchy_report(&group::symmetric(4).unwrap(), None, &opts).unwrap();
        assert!(s4.pow_eq_epow() && !s4.epow_eq_com() && s4.all_hold());
        let c6 = hierarchy_report(&group::cyclic(6).unwrap(), None, &opts).unwrap();
        assert!(!c6.pow_eq_epow() && c6.all_hold());
    }

    #[test]
    fn bounds_and_differences() {
        let opts = BuildOptions::default();
        let b = epow_bounds(&group::cyclic(6).unwrap(), &opts).unwrap();
        assert_eq!((b.omega, b.chi_bound), (6, 6));
        assert!(b.holds());
        assert_eq!(epow_bounds(&group::alternating(5).unwrap(), &opts).unwrap().omega, 5);
        let t = epow_bounds(&group::cyclic(1).unwrap(), &opts).unwrap();
        assert_eq!((t.omega, t.chi_bound, t.lcm_bound), (1, 1, Some(1)));
        let cp = com_minus_pow_connectivity(&group::cyclic(7).unwrap(), &opts).unwrap();
        assert_eq!(cp.isolated.len(), 6);
        let s3 = com_minus_pow_connectivity(&group::symmetric(3).unwrap(), &opts).unwrap();
        assert!(!s3.gk_connected);
    }
}
