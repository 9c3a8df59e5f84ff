//! Corpus, brute-force oracles and the property checks shared by the
//! integration tests and the acceptance report.
#![allow(dead_code)]

use grouptrix::arith;
use grouptrix::graph::{class_test, max_cliques, ClassKind, DEFAULT_CLIQUE_CAP};
use grouptrix::group::{self, SeriesKind, SubgroupKind};
use grouptrix::hierarchy::{build, engel_graph, gk_graph, graph_centre, BuildOptions, GraphKind};
use grouptrix::subgroups::{enumerate_subgroups, intersection_graph, FamilyKind, SubgroupFamily};
use grouptrix::twins::{cokernel, confluence_test, ReductionOrder};
use grouptrix::{Graph, Group};
use std::collections::BTreeSet;

/// Constructor groups of order at most 660.
pub const BASE: &[&str] = &[
    "trivial", "cyclic:2", "cyclic:3", "cyclic:4", "cyclic:5", "cyclic:6", "cyclic:7", "cyclic:8",
    "cyclic:9", "cyclic:10", "cyclic:12", "cyclic:15", "cyclic:16", "cyclic:30", "cyclic:60",
    "dihedral:6", "dihedral:8", "dihedral:10", "dihedral:12", "dihedral:14", "dihedral:16",
    "dihedral:18", "dihedral:20", "dihedral:24", "dihedral:30", "dihedral:42", "dihedral:60",
    "q8", "genq:12", "genq:16", "genq:20", "genq:24", "genq:32", "v4", "elab:2^3", "elab:2^4",
    "elab:3^2", "elab:3^3", "elab:5^2", "sym:3", "sym:4", "sym:5", "alt:4", "alt:5", "alt:6",
    "psl2:7", "psl2:8", "psl2:11", "sl2:3", "sl2:5", "sl2:7", "modp3:3", "modp3:5",
];

/// Direct products of order at most 2000.
pub const PRODUCTS: &[&str] = &[
    "prod(sym:3,cyclic:2)", "prod(cyclic:6,cyclic:6)", "prod(sym:3,sym:3)", "prod(q8,cyclic:3)",
    "prod(sym:4,cyclic:3)", "prod(alt:5,cyclic:2)", "prod(psl2:7,cyclic:2)", "prod(alt:5,sym:3)",
    "prod(sym:4,sym:4)", "prod(dihedral:10,alt:5)", "prod(sym:5,sym:3)", "prod(alt:5,alt:4)",
    "prod(psl2:7,cyclic:5)", "prod(psl2:8,cyclic:3)", "prod(psl2:11,cyclic:3)",
];

pub fn corpus(max_order: usize) -> Vec<Group> {
    BASE.iter()
        .chain(PRODUCTS)
        .map(|s| group::parse_group(s).unwrap())
        .filter(|g| g.order() <= max_order)
        .collect()
}

pub fn brute(g: &Group, pred: impl Fn(u32, u32) -> bool) -> Graph {
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

pub fn in_cyclic(g: &Group, x: u32, y: u32) -> bool {
    let k = g.element_order(y) as u64;
    (0..k).any(|e| g.pow(y, e) == x)
}

/// Element orders with two distinct prime divisors exist.
pub fn gk_has_edge_oracle(g: &Group) -> bool {
    g.element_orders()
        .iter()
        .any(|&o| arith::prime_divisors(o as u64).len() >= 2)
}

/// Commuting elements of the same prime order generating a non-cyclic group.
pub fn cpcp_oracle(g: &Group) -> bool {
    let n = g.order() as u32;
    let prime: Vec<u32> = (1..n).filter(|&x| arith::is_prime(g.element_order(x) as u64)).collect();
    prime.iter().any(|&x| {
        prime.iter().any(|&y| {
            g.element_order(x) == g.element_order(y) && g.commutes(x, y) && !in_cyclic(g, y, x)
        })
    })
}

pub fn component_count(g: &Graph) -> usize {
    g.components().len()
}

pub struct Graphs {
    pub pow: Graph,
    pub epow: Graph,
    pub com: Graph,
    pub nilp: Graph,
    pub sol: Graph,
    pub ngen: Graph,
}

impl Graphs {
    pub fn build(g: &Group, opts: &BuildOptions) -> Graphs {
        let b = |k| build(g, k, None, opts).unwrap();
        Graphs {
            pow: b(GraphKind::Pow),
            epow: b(GraphKind::EPow),
            com: b(GraphKind::Com),
            nilp: b(GraphKind::Nilp),
            sol: b(GraphKind::Sol),
            ngen: b(GraphKind::NGen),
        }
    }
}

fn sets(v: Vec<Vec<usize>>) -> BTreeSet<Vec<usize>> {
    v.into_iter()
        .map(|mut c| {
            c.sort_unstable();
            c
        })
        .collect()
}

fn family_sets(f: &SubgroupFamily) -> BTreeSet<Vec<usize>> {
    f.members
        .iter()
        .map(|h| h.members().iter().map(|&x| x as usize).collect())
        .collect()
}

/// Runs every per-group property on `g`; returns one message per violation.
pub fn group_properties(g: &Group, opts: &BuildOptions) -> Vec<String> {
    let mut bad = Vec::new();
    let label = g.label().to_string();
    let mut fail = |what: &str| bad.push(format!("{label}: {what}"));
    let n = g.order();
    let gr = Graphs::build(g, opts);
    let trivial_centre = g.center().len() == 1;
    let gk = gk_graph(g);

    // inclusion chain
    let two_generated = n == 1 || !gr.ngen.is_complete();
    if !(gr.pow.is_subgraph_of(&gr.epow)
        && gr.epow.is_subgraph_of(&gr.com)
        && gr.com.is_subgraph_of(&gr.nilp)
        && gr.nilp.is_subgraph_of(&gr.sol))
    {
        fail("Pow ⊆ EPow ⊆ Com ⊆ Nilp ⊆ Sol");
    }
    if (!g.is_abelian() || !two_generated) && !gr.com.is_subgraph_of(&gr.ngen) {
        fail("Com ⊆ NGen");
    }

    // equalities against independent criteria
    if (gr.pow == gr.epow) != !gk_has_edge_oracle(g) {
        fail("Pow = EPow iff GK null");
    }
    if gk.is_null() == gk_has_edge_oracle(g) {
        fail("GK graph agrees with element orders");
    }
    if (gr.epow == gr.com) != !cpcp_oracle(g) {
        fail("EPow = Com iff no C_p x C_p");
    }

    // maximal cliques
    if n <= 700 {
        let ep = sets(max_cliques(&gr.epow, DEFAULT_CLIQUE_CAP).unwrap());
        let mc = family_sets(&enumerate_subgroups(g, FamilyKind::MaximalCyclic, opts).unwrap());
        let expected: BTreeSet<Vec<usize>> = if n == 1 { [vec![0]].into() } else { mc };
        if ep != expected {
            fail("maximal EPow cliques are the maximal cyclic subgroups");
        }
        for c in sets(max_cliques(&gr.com, DEFAULT_CLIQUE_CAP).unwrap()) {
            let h = g.closure(&c.iter().map(|&x| x as u32).collect::<Vec<_>>());
            if h.len() != c.len() || !g.subgroup_is(&h, SubgroupKind::Abelian) {
                fail("maximal Com cliques are abelian subgroups");
                break;
            }
        }
        for &(p, q) in gk.edges.iter() {
            if !ep.iter().any(|c| c.len() as u64 % (p * q) == 0) {
                fail("GK edge has an EPow clique of size divisible by pq");
            }
        }
        let pairs: Vec<(u64, u64)> = gk
            .primes
            .iter()
            .flat_map(|&p| gk.primes.iter().filter(move |&&q| q > p).map(move |&q| (p, q)))
            .filter(|&(p, q)| ep.iter().any(|c| c.len() as u64 % (p * q) == 0))
            .collect();
        if pairs != gk.edges {
            fail("EPow clique sizes give exactly the GK edges");
        }
    }

    // connectivity on centreless groups
    if trivial_centre && n > 1 {
        let com = gr.com.without(&[0]);
        if com.is_connected() != gk.is_connected() {
            fail("reduced Com connected iff GK connected");
        }
        let (pm, em) = (gr.pow.without(&[0]).metrics(), gr.epow.without(&[0]).metrics());
        if pm.connected() != em.connected() {
            fail("reduced Pow connected iff reduced EPow connected");
        }
        if pm.connected() && em.connected() {
            let (dp, de) = (pm.diameters[0], em.diameters[0]);
            if dp < de || dp > 2 * de {
                fail("diam EPow ≤ diam Pow ≤ 2 diam EPow");
            }
        }
        if n <= 400 {
            let all = enumerate_subgroups(g, FamilyKind::All, opts).unwrap();
            let abelian = SubgroupFamily {
                members: all
                    .members
                    .iter()
                    .filter(|h| g.subgroup_is(h, SubgroupKind::Abelian))
                    .cloned()
                    .collect(),
                ..all
            };
            let maxab = enumerate_subgroups(g, FamilyKind::MaximalAbelian, opts).unwrap();
            let c = intersection_graph(&abelian).is_connected();
            let d = intersection_graph(&maxab).is_connected();
            if ![com.is_connected(), c, d].iter().all(|&x| x == gk.is_connected()) {
                fail("four-way connectivity equivalence");
            }
        }
        let dep = build(g, GraphKind::Dep, None, opts).unwrap();
        if !dep.is_subgraph_of(&gr.ngen.without(&[0])) {
            fail("DEP ⊆ reduced NGen");
        }
    }
    if n > 1 {
        let dep = build(g, GraphKind::Dep, None, opts).unwrap();
        if !gr.pow.without(&[0]).is_subgraph_of(&dep) {
            fail("reduced Pow ⊆ DEP");
        }
    }

    // hypercentre and Engel level 1
    if n <= 500 {
        let z = graph_centre(g, GraphKind::Nilp, None, opts).unwrap();
        let upper = g.series(&g.whole(), SeriesKind::UpperCentral);
        let hyper: Vec<u32> = upper.last().unwrap().members().to_vec();
        let mut members = z.members.clone();
        members.sort_unstable();
        if members != hyper {
            fail("Nilp centre is the hypercentre");
        }
        if engel_graph(g, Some(1), opts).unwrap() != gr.com {
            fail("level-1 Engel graph is Com");
        }
    }

    // twins
    for (name, graph) in [("pow", &gr.pow), ("epow", &gr.epow), ("com", &gr.com), ("ngen", &gr.ngen)] {
        if n <= 64 && !confluence_test(graph, 20, 7).unwrap() {
            fail(&format!("twin reduction confluent on {name}"));
        }
        if n <= 700 {
            let one = cokernel(graph, ReductionOrder::Deterministic).size() == 1;
            if one != class_test(graph, ClassKind::Cograph).member {
                fail(&format!("cokernel size 1 iff P4-free on {name}"));
            }
        }
    }
    bad
}

/// Product identities for `Com` always and for `EPow` under coprime orders.
pub fn product_properties(a: &str, b: &str, opts: &BuildOptions) -> Vec<String> {
    let (g, h) = (group::parse_group(a).unwrap(), group::parse_group(b).unwrap());
    let gh = group::direct_product(&g, &h).unwrap();
    let mut bad = Vec::new();
    let com = |x: &Group| build(x, GraphKind::Com, None, opts).unwrap();
    if com(&gh) != com(&g).strong_product(&com(&h)).unwrap() {
        bad.push(format!("Com({a} x {b}) is the strong product"));
    }
    if arith::gcd_u64(g.order() as u64, h.order() as u64) == 1 {
        let epow = |x: &Group| build(x, GraphKind::EPow, None, opts).unwrap();
        if epow(&gh) != epow(&g).strong_product(&epow(&h)).unwrap() {
            bad.push(format!("EPow({a} x {b}) is the strong product"));
        }
    }
    bad
}

pub const PRODUCT_PAIRS: &[(&str, &str)] = &[
    ("sym:3", "cyclic:2"),
    ("sym:3", "cyclic:5"),
    ("q8", "cyclic:3"),
    ("dihedral:8", "sym:3"),
    ("alt:4", "cyclic:5"),
    ("cyclic:4", "cyclic:6"),
    ("alt:5", "cyclic:7"),
    ("dihedral:10", "cyclic:3"),
];

/// Structural checks on simple groups and on 2-generated p-groups.
pub fn special_properties(opts: &BuildOptions) -> Vec<String> {
    let mut bad = Vec::new();
    for spec in ["alt:5", "psl2:7", "psl2:8", "psl2:11"] {
        let g = group::parse_group(spec).unwrap();
        let gen = build(&g, GraphKind::Gen, None, opts).unwrap().without(&[0]);
        if !gen.has_spread(2) {
            bad.push(format!("{spec}: reduced Gen has spread 2"));
        }
        let ngen = build(&g, GraphKind::NGen, None, opts).unwrap();
        if class_test(&ngen, ClassKind::Cograph).member {
            bad.push(format!("{spec}: NGen is not a cograph"));
        }
    }
    for p in [3usize, 5] {
        let g = group::modular_p3(p as u64).unwrap();
        let ngen = build(&g, GraphKind::NGen, None, opts).unwrap();
        let cliques = max_cliques(&ngen, DEFAULT_CLIQUE_CAP).unwrap();
        let sizes_ok = cliques.len() == p + 1 && cliques.iter().all(|c| c.len() == p * p);
        let meet_ok = cliques.iter().enumerate().all(|(i, a)| {
            cliques[i + 1..]
                .iter()
                .all(|b| a.iter().filter(|x| b.contains(x)).count() == p)
        });
        if !(sizes_ok && meet_ok) {
            bad.push(format!("modp3:{p}: NGen is p+1 cliques of size p² meeting in p points"));
        }
    }
    bad
}

/// Random graph on `n` vertices from a seed.
pub fn random_graph(n: usize, density: f64, rng: &mut impl rand::Rng) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Exhaustive search over all orientations of the edges.
pub fn has_transitive_orientation(g: &Graph) -> bool {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let n = g.order();
    (0u64..1 << edges.len()).any(|mask| {
        let mut arc = vec![vec![false; n]; n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                arc[u][v] = true;
            } else {
                arc[v][u] = true;
            }
        }
        (0..n).all(|a| (0..n).all(|b| !arc[a][b] || (0..n).all(|c| !arc[b][c] || arc[a][c])))
    })
}

pub mod embeddings {
    use super::*;
    use grouptrix::embed::{
        embed, perm_generates_alternating, transitive_orientation, verify_embedding, Colour,
        ColouredComplete, EmbedKind, Instance, Poset,
    };
    use grouptrix::perm::Perm;
    use grouptrix::Error;
    use rand::seq::SliceRandom;
    use rand::Rng;

    pub fn random_poset(n: usize, density: f64, rng: &mut impl Rng) -> Poset {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(rng);
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(density) {
                    pairs.push((order[i], order[j]));
                }
            }
        }
        Poset::from_relation(n, &pairs).unwrap()
    }

    pub fn random_coloured(n: usize, rng: &mut impl Rng) -> ColouredComplete {
        ColouredComplete::new(n, |_, _| [Colour::Red, Colour::Green, Colour::Blue][rng.gen_range(0..3)])
    }

    fn round_trip(kind: EmbedKind, inst: Instance) -> Option<String> {
        match embed(kind, &inst) {
            Ok(cert) => {
                let v = verify_embedding(&cert);
                (!v.holds()).then(|| format!("{kind}: verification failed at {:?}", v.failure))
            }
            Err(e) => Some(format!("{kind}: {e}")),
        }
    }

    /// Round trips through every construction; returns the failures.
    pub fn round_trips(rng: &mut impl Rng, graphs: usize, posets: usize, coloured: usize, gen: usize) -> Vec<String> {
        let mut bad = Vec::new();
        for _ in 0..graphs {
            let n = rng.gen_range(1..=8);
            let g = random_graph(n, rng.gen_range(0.1..0.9), rng);
            for kind in [EmbedKind::Com, EmbedKind::EPow, EmbedKind::Dep] {
                bad.extend(round_trip(kind, Instance::Graph(g.clone())));
            }
        }
        for _ in 0..posets {
            let n = rng.gen_range(1..=8);
            let p = random_poset(n, rng.gen_range(0.1..0.7), rng);
            bad.extend(round_trip(EmbedKind::Pow, Instance::Poset(p)));
        }
        for _ in 0..coloured {
            let n = rng.gen_range(1..=6);
            bad.extend(round_trip(EmbedKind::ThreeColoured, Instance::Coloured(random_coloured(n, rng))));
        }
        for _ in 0..gen {
            let n = rng.gen_range(1..=5);
            let g = random_graph(n, rng.gen_range(0.2..0.9), rng);
            bad.extend(round_trip(EmbedKind::Gen, Instance::Graph(g)));
        }
        bad
    }

    /// POW accepts exactly the comparability graphs; returns the disagreements.
    pub fn pow_refusals(rng: &mut impl Rng, count: usize) -> (Vec<String>, usize) {
        let mut bad = Vec::new();
        let mut refused = 0;
        for _ in 0..count {
            let n = rng.gen_range(4..=6);
            let g = random_graph(n, rng.gen_range(0.3..0.7), rng);
            let oracle = has_transitive_orientation(&g);
            let got = match embed(EmbedKind::Pow, &Instance::Graph(g.clone())) {
                Ok(cert) => verify_embedding(&cert).holds(),
                Err(Error::NoTransitiveOrientation { .. }) => {
                    refused += 1;
                    false
                }
                Err(e) => {
                    bad.push(format!("unexpected error {e}"));
                    continue;
                }
            };
            if got != oracle || transitive_orientation(&g).is_ok() != oracle {
                bad.push(format!("orientation disagreement on {:?}", g.edges().collect::<Vec<_>>()));
            }
        }
        (bad, refused)
    }

    fn random_even(m: usize, rng: &mut impl Rng) -> Perm {
        loop {
            let mut img: Vec<u16> = (0..m as u16).collect();
            img.shuffle(rng);
            let p = Perm::from_images(img).unwrap();
            if p.is_even() {
                return p;
            }
        }
    }

    fn random_cycle(m: usize, len: usize, rng: &mut impl Rng) -> Perm {
        let mut pts: Vec<usize> = (0..m).collect();
        pts.shuffle(rng);
        pts.truncate(len);
        Perm::from_cycles(m, &[pts]).unwrap()
    }

    fn pick(m: usize, rng: &mut impl Rng) -> Perm {
        match rng.gen_range(0..3) {
            0 => random_even(m, rng),
            1 => random_cycle(m, 5, rng),
            _ => random_cycle(m, 3, rng),
        }
    }

    /// Full closure by breadth-first search over image vectors.
    fn closure_contains_alternating(perms: &[Perm], m: usize) -> bool {
        let start: Vec<u16> = (0..m as u16).collect();
        let mut seen = std::collections::HashSet::from([start.clone()]);
        let mut queue = vec![start];
        while let Some(x) = queue.pop() {
            for p in perms {
                let y: Vec<u16> = x.iter().map(|&i| p.images()[i as usize]).collect();
                if seen.insert(y.clone()) {
                    queue.push(y);
                }
            }
        }
        let half: usize = (3..=m).product();
        seen.len() >= half
    }

    /// Compares the Jordan certificate with the closure order on random
    /// pairs of degree 7 and 8. Returns (disagreements, decided count).
    pub fn jordan_vs_closure(rng: &mut impl Rng, pairs: usize) -> (Vec<String>, usize) {
        let mut bad = Vec::new();
        let mut decided = 0;
        for _ in 0..pairs {
            let m = rng.gen_range(7..=8);
            let perms = [pick(m, rng), pick(m, rng)];
            match perm_generates_alternating(&perms, m) {
                Ok(v) => {
                    decided += 1;
                    if v != closure_contains_alternating(&perms, m) {
                        bad.push(format!("Jordan verdict {v} wrong for {} and {}", perms[0], perms[1]));
                    }
                }
                Err(Error::Indeterminate) => {}
                Err(e) => bad.push(format!("unexpected error {e}")),
            }
        }
        (bad, decided)
    }
}
