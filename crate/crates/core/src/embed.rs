//! Realizing graphs, posets and 3-coloured complete graphs as induced
//! subgraphs of graphs on groups, together with an independent verifier.
//!
//! Symbolic ambients are direct products of groups of pairwise coprime
//! order. Elements are tuples of factor indices and every predicate is
//! evaluated factor by factor, so the product itself is never enumerated.

use crate::arith;
use crate::error::{Error, Result};
use crate::group::{self, Group, Oracle, SubgroupKind};
use crate::perm::Perm;
use crate::{Digraph, Graph};
use std::fmt::{self, Write};
use std::str::FromStr;
use std::sync::Arc;

/// Largest graph embedded in the commuting graph (the ambient has `2^{n+1}` elements).
pub const MAX_COM: usize = 14;
/// Largest instance for the symbolic constructions.
pub const MAX_SYMBOLIC: usize = 12;
/// Largest graph searched for a transitive orientation.
pub const MAX_ORIENT: usize = 8;
/// Largest graph embedded in the generating graph.
pub const MAX_GEN: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EmbedKind {
    Com,
    Pow,
    EPow,
    Dep,
    Gen,
    ThreeColoured,
}

impl EmbedKind {
    pub const ALL: [EmbedKind; 6] = [
        EmbedKind::Com,
        EmbedKind::Pow,
        EmbedKind::EPow,
        EmbedKind::Dep,
        EmbedKind::Gen,
        EmbedKind::ThreeColoured,
    ];

    pub fn name(self) -> &'static str {
        match self {
            EmbedKind::Com => "com",
            EmbedKind::Pow => "pow",
            EmbedKind::EPow => "epow",
            EmbedKind::Dep => "dep",
            EmbedKind::Gen => "gen",
            EmbedKind::ThreeColoured => "three_coloured",
        }
    }
}

impl fmt::Display for EmbedKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for EmbedKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        EmbedKind::ALL
            .into_iter()
            .find(|k| k.name() == s.to_ascii_lowercase())
            .ok_or_else(|| Error::InvalidSpec(format!("unknown embedding kind `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Colour {
    Red,
    Green,
    Blue,
}

/// A complete graph with every edge coloured.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColouredComplete {
    n: usize,
    colours: Vec<Colour>,
}

impl ColouredComplete {
    /// `f(u, v)` is called once per pair with `u < v`.
    pub fn new(n: usize, mut f: impl FnMut(usize, usize) -> Colour) -> Self {
        let mut colours = vec![Colour::Red; n * n];
        for u in 0..n {
            for v in u + 1..n {
                let c = f(u, v);
                colours[u * n + v] = c;
                colours[v * n + u] = c;
            }
        }
        ColouredComplete { n, colours }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn colour(&self, u: usize, v: usize) -> Colour {
        self.colours[u * self.n + v]
    }
}

/// A strict partial order on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    /// `below[x][y]` iff `y < x`.
    below: Vec<Vec<bool>>,
}

impl Poset {
    /// Transitive closure of the pairs `(a, b)` read as `a < b`.
    pub fn from_relation(n: usize, pairs: &[(usize, usize)]) -> Result<Poset> {
        let mut below = vec![vec![false; n]; n];
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::InvalidSpec(format!("poset pair ({a}, {b}) out of range")));
            }
            below[b][a] = true;
        }
        for k in 0..n {
            for x in 0..n {
                if below[x][k] {
                    for y in 0..n {
                        if below[k][y] {
                            below[x][y] = true;
                        }
                    }
                }
            }
        }
        if let Some(x) = (0..n).find(|&x| below[x][x]) {
            return Err(Error::InvalidSpec(format!("relation has a cycle through {x}")));
        }
        Ok(Poset { n, below })
    }

    /// The order in which `u → v` means `v < u`; the digraph must be transitive and acyclic.
    pub fn from_digraph(d: &Digraph) -> Result<Poset> {
        let pairs: Vec<(usize, usize)> = d.arcs().map(|(u, v)| (v, u)).collect();
        let p = Poset::from_relation(d.order(), &pairs)?;
        if pairs.len() != p.relation_count() {
            return Err(Error::InvalidSpec("digraph is not transitive".into()));
        }
        Ok(p)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn less(&self, a: usize, b: usize) -> bool {
        self.below[b][a]
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.less(a, b) || self.less(b, a)
    }

    fn relation_count(&self) -> usize {
        self.below.iter().flatten().filter(|&&b| b).count()
    }

    /// `x` together with every element below it.
    pub fn down_set(&self, x: usize) -> Vec<usize> {
        (0..self.n).filter(|&y| y == x || self.less(y, x)).collect()
    }

    pub fn comparability_graph(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for a in 0..self.n {
            for b in a + 1..self.n {
                if self.comparable(a, b) {
                    g.add_edge(a, b);
                }
            }
        }
        g
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Graph(Graph),
    Poset(Poset),
    Coloured(ColouredComplete),
}

impl Instance {
    pub fn order(&self) -> usize {
        match self {
            Instance::Graph(g) => g.order(),
            Instance::Poset(p) => p.order(),
            Instance::Coloured(c) => c.order(),
        }
    }

    fn describe(&self) -> String {
        match self {
            Instance::Graph(g) => format!("graph n={} m={}", g.order(), g.edge_count()),
            Instance::Poset(p) => format!("poset n={} relations={}", p.order(), p.relation_count()),
            Instance::Coloured(c) => format!("coloured complete graph n={}", c.order()),
        }
    }

    /// Adjacency in the instance, for the graph and poset forms.
    fn joined(&self, u: usize, v: usize) -> bool {
        match self {
            Instance::Graph(g) => g.has_edge(u, v),
            Instance::Poset(p) => p.comparable(u, v),
            Instance::Coloured(_) => unreachable!(),
        }
    }
}

/// Direct product of groups with pairwise coprime orders.
#[derive(Clone, Debug)]
pub struct SymbolicProduct {
    factors: Vec<Group>,
}

impl SymbolicProduct {
    pub fn new(factors: Vec<Group>) -> Result<Self> {
        for (i, a) in factors.iter().enumerate() {
            for b in &factors[i + 1..] {
                if arith::gcd_u64(a.order() as u64, b.order() as u64) != 1 {
                    return Err(Error::InvalidSpec(format!(
                        "factor orders {} and {} are not coprime",
                        a.order(),
                        b.order()
                    )));
                }
            }
        }
        Ok(SymbolicProduct { factors })
    }

    pub fn factors(&self) -> &[Group] {
        &self.factors
    }

    /// Order of the product, `None` past `u128`.
    pub fn order(&self) -> Option<u128> {
        self.factors
            .iter()
            .try_fold(1u128, |acc, f| acc.checked_mul(f.order() as u128))
    }

    pub fn descriptor(&self) -> String {
        let names: Vec<&str> = self.factors.iter().map(Group::label).collect();
        names.join(" x ")
    }

    fn valid(&self, x: &[u32]) -> bool {
        x.len() == self.factors.len() && x.iter().zip(&self.factors).all(|(&c, f)| (c as usize) < f.order())
    }

    pub fn is_identity(&self, x: &[u32]) -> bool {
        x.iter().all(|&c| c == 0)
    }

    pub fn commute(&self, x: &[u32], y: &[u32]) -> bool {
        self.factors
            .iter()
            .zip(x.iter().zip(y))
            .all(|(f, (&a, &b))| f.commutes(a, b))
    }

    /// `⟨x, y⟩` is cyclic.
    pub fn cyclic_pair(&self, x: &[u32], y: &[u32]) -> bool {
        self.factors.iter().zip(x.iter().zip(y)).all(|(f, (&a, &b))| {
            f.cyclic_subgroup(a).contains(&b)
                || f.cyclic_subgroup(b).contains(&a)
                || f.subgroup_is(&f.closure(&[a, b]), SubgroupKind::Cyclic)
        })
    }

    /// `x ∈ ⟨y⟩`.
    pub fn in_cyclic(&self, x: &[u32], y: &[u32]) -> bool {
        self.factors
            .iter()
            .zip(x.iter().zip(y))
            .all(|(f, (&a, &b))| f.cyclic_subgroup(b).contains(&a))
    }

    pub fn power_adjacent(&self, x: &[u32], y: &[u32]) -> bool {
        self.in_cyclic(x, y) || self.in_cyclic(y, x)
    }

    /// `⟨x⟩ ∩ ⟨y⟩` is non-trivial.
    pub fn cyclic_meet(&self, x: &[u32], y: &[u32]) -> bool {
        self.factors.iter().zip(x.iter().zip(y)).any(|(f, (&a, &b))| {
            let cb = f.cyclic_subgroup(b);
            f.cyclic_subgroup(a).iter().any(|&z| z != 0 && cb.contains(&z))
        })
    }
}

#[derive(Clone, Debug)]
pub enum Ambient {
    Group(Group),
    Symbolic(SymbolicProduct),
    Perms { degree: usize },
}

impl Ambient {
    pub fn descriptor(&self) -> String {
        match self {
            Ambient::Group(g) => format!("group {} order {}", g.label(), g.order()),
            Ambient::Symbolic(s) => match s.order() {
                Some(o) => format!("product {} order {o}", s.descriptor()),
                None => format!("product {}", s.descriptor()),
            },
            Ambient::Perms { degree } => format!("alternating degree {degree}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum VertexImage {
    Element(u32),
    Tuple(Vec<u32>),
    Perm(Perm),
}

impl fmt::Display for VertexImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexImage::Element(x) => write!(f, "{x}"),
            VertexImage::Tuple(t) => {
                let parts: Vec<String> = t.iter().enumerate().map(|(i, c)| format!("f{}:{c}", i + 1)).collect();
                write!(f, "({})", parts.join(", "))
            }
            VertexImage::Perm(p) => write!(f, "{p}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairRecord {
    pub u: usize,
    pub v: usize,
    pub predicate: &'static str,
    pub result: bool,
}

#[derive(Clone, Debug)]
pub struct EmbeddingCertificate {
    pub kind: EmbedKind,
    pub instance: Instance,
    pub ambient: Ambient,
    pub vertex_map: Vec<VertexImage>,
    pub transcript: Vec<PairRecord>,
}

impl EmbeddingCertificate {
    pub fn export(&self) -> String {
        let mut s = String::new();
        writeln!(s, "kind {}", self.kind).unwrap();
        writeln!(s, "instance {}", self.instance.describe()).unwrap();
        writeln!(s, "ambient {}", self.ambient.descriptor()).unwrap();
        for (v, img) in self.vertex_map.iter().enumerate() {
            writeln!(s, "{v} → {img}").unwrap();
        }
        for r in &self.transcript {
            writeln!(s, "pair ({},{}): predicate={} result={}", r.u, r.v, r.predicate, r.result).unwrap();
        }
        s
    }
}

/// Outcome of [`verify_embedding`]; `failure` is the first pair that
/// disagrees with the instance (`(v, v)` for a malformed image).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Verification {
    pub failure: Option<(usize, usize)>,
}

impl Verification {
    pub fn holds(&self) -> bool {
        self.failure.is_none()
    }
}

fn guard(what: &'static str, limit: usize, got: usize) -> Result<()> {
    if got > limit {
        return Err(Error::SizeGuard { what, limit, got });
    }
    Ok(())
}

fn graph_of(kind: EmbedKind, inst: &Instance) -> Result<&Graph> {
    match inst {
        Instance::Graph(g) => Ok(g),
        _ => Err(Error::InvalidSpec(format!("{kind} embedding needs a graph instance"))),
    }
}

/// Successive primes from `from`, skipping primes already handed out.
struct PrimeSupply {
    iter: Box<dyn Iterator<Item = u64>>,
}

impl PrimeSupply {
    fn from(start: u64) -> Self {
        PrimeSupply {
            iter: Box::new(arith::primes_from(start)),
        }
    }

    fn take(&mut self, k: usize) -> Vec<u64> {
        (&mut self.iter).take(k).collect()
    }
}

pub fn embed(kind: EmbedKind, instance: &Instance) -> Result<EmbeddingCertificate> {
    let n = instance.order();
    let (ambient, vertex_map) = match kind {
        EmbedKind::Com => {
            let g = graph_of(kind, instance)?;
            guard("commuting embedding vertices", MAX_COM, n)?;
            embed_com(g)?
        }
        EmbedKind::Pow => {
            guard("power embedding vertices", MAX_SYMBOLIC, n)?;
            let poset = match instance {
                Instance::Poset(p) => p.clone(),
                Instance::Graph(g) => transitive_orientation(g)?,
                _ => return Err(Error::InvalidSpec("pow embedding needs a poset or graph".into())),
            };
            embed_pow(&poset)?
        }
        EmbedKind::EPow => {
            let g = graph_of(kind, instance)?;
            guard("enhanced power embedding vertices", MAX_SYMBOLIC, n)?;
            embed_epow(g)?
        }
        EmbedKind::Dep => {
            let g = graph_of(kind, instance)?;
            guard("dual enhanced power embedding vertices", MAX_SYMBOLIC, n)?;
            embed_dep(g)?
        }
        EmbedKind::Gen => {
            let g = graph_of(kind, instance)?;
            guard("generating embedding vertices", MAX_GEN, n)?;
            embed_gen(g)?
        }
        EmbedKind::ThreeColoured => {
            let Instance::Coloured(c) = instance else {
                return Err(Error::InvalidSpec("three_coloured embedding needs a coloured complete graph".into()));
            };
            guard("three-coloured embedding vertices", MAX_SYMBOLIC, n)?;
            embed_coloured(c)?
        }
    };
    let mut cert = EmbeddingCertificate {
        kind,
        instance: instance.clone(),
        ambient,
        vertex_map,
        transcript: Vec::new(),
    };
    let mut transcript = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            for (predicate, result) in evaluate(&cert, u, v).unwrap_or_default() {
                transcript.push(PairRecord { u, v, predicate, result });
            }
        }
    }
    cert.transcript = transcript;
    Ok(cert)
}

/// Elements `(v, a)` of `F_2^n × F_2` at index `v + 2^n a`, multiplied by
/// `(v, a)(w, b) = (v + w, a + b + B(v, w))`.
fn embed_com(g: &Graph) -> Result<(Ambient, Vec<VertexImage>)> {
    let n = g.order();
    // lower[i]: the j < i not joined to i, where B(e_i, e_j) = 1
    let lower: Vec<u32> = (0..n)
        .map(|i| (0..i).filter(|&j| !g.has_edge(i, j)).fold(0, |m, j| m | 1 << j))
        .collect();
    let vmask = (1u32 << n) - 1;
    let form = move |v: u32, w: u32| {
        let mut acc = 0u32;
        let mut rest = v;
        while rest != 0 {
            acc ^= lower[rest.trailing_zeros() as usize];
            rest &= rest - 1;
        }
        (acc & w).count_ones() & 1
    };
    let mul = move |x: u32, y: u32| {
        let (v, w) = (x & vmask, y & vmask);
        let a = (x >> n) ^ (y >> n) ^ form(v, w);
        (v ^ w) | a << n
    };
    let gens: Vec<u32> = (0..=n).map(|i| 1 << i).collect();
    let grp = Group::from_oracle(
        format!("bilinear:{n}"),
        1 << (n + 1),
        Oracle::Fn(Arc::new(mul)),
        Some(gens),
    )?;
    let map = (0..n).map(|i| VertexImage::Element(1 << i)).collect();
    Ok((Ambient::Group(grp), map))
}

fn embed_pow(p: &Poset) -> Result<(Ambient, Vec<VertexImage>)> {
    let n = p.order();
    let primes = PrimeSupply::from(2).take(n);
    let factors = primes.iter().map(|&q| group::cyclic(q)).collect::<Result<Vec<_>>>()?;
    let map = (0..n)
        .map(|x| VertexImage::Tuple((0..n).map(|y| u32::from(y == x || p.less(y, x))).collect()))
        .collect();
    Ok((Ambient::Symbolic(SymbolicProduct::new(factors)?), map))
}

fn embed_epow(g: &Graph) -> Result<(Ambient, Vec<VertexImage>)> {
    let n = g.order();
    let primes = PrimeSupply::from(3).take(n);
    let mut factors = Vec::with_capacity(n);
    for &q in &primes {
        let c = group::cyclic(q)?;
        factors.push(group::direct_product(&c, &c)?);
    }
    // in C_q × C_q, a = (1, 0) sits at q and b = (0, 1) at 1
    let map = (0..n)
        .map(|i| {
            let t = (0..n)
                .map(|j| match j {
                    _ if j == i => 1,
                    _ if j > i && !g.has_edge(i, j) => primes[j] as u32,
                    _ => 0,
                })
                .collect();
            VertexImage::Tuple(t)
        })
        .collect();
    Ok((Ambient::Symbolic(SymbolicProduct::new(factors)?), map))
}

fn embed_dep(g: &Graph) -> Result<(Ambient, Vec<VertexImage>)> {
    let n = g.order();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let primes = PrimeSupply::from(3).take(edges.len() + n);
    let factors = primes.iter().map(|&q| group::cyclic(q)).collect::<Result<Vec<_>>>()?;
    let m = edges.len();
    let map = (0..n)
        .map(|v| {
            let mut t: Vec<u32> = edges.iter().map(|&(a, b)| u32::from(a == v || b == v)).collect();
            t.extend((0..n).map(|w| u32::from(w == v)));
            debug_assert_eq!(t.len(), m + n);
            VertexImage::Tuple(t)
        })
        .collect();
    Ok((Ambient::Symbolic(SymbolicProduct::new(factors)?), map))
}

/// Point sets `T(v)` of the generating construction and the degree `m`.
fn gen_supports(g: &Graph) -> (Vec<Vec<usize>>, usize) {
    let n = g.order();
    let comp = g.complement();
    let edges: Vec<(usize, usize)> = comp.edges().collect();
    let k = (0..n).map(|v| comp.degree(v)).max().unwrap_or(0).max(3);
    let mut sets: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            edges
                .iter()
                .enumerate()
                .filter(|(_, &(a, b))| a == v || b == v)
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    let mut next = edges.len();
    for s in &mut sets {
        while s.len() < k {
            s.push(next);
            next += 1;
        }
    }
    let mut m = next;
    while !(m > 2 * k && arith::is_prime((m - k) as u64)) {
        m += 1;
    }
    let supports = sets
        .iter()
        .map(|s| (0..m).filter(|x| !s.contains(x)).collect())
        .collect();
    (supports, m)
}

fn embed_gen(g: &Graph) -> Result<(Ambient, Vec<VertexImage>)> {
    let (supports, m) = gen_supports(g);
    let map = supports
        .into_iter()
        .map(|t| Perm::from_cycles(m, &[t]).map(VertexImage::Perm))
        .collect::<Result<Vec<_>>>()?;
    Ok((Ambient::Perms { degree: m }, map))
}

fn embed_coloured(c: &ColouredComplete) -> Result<(Ambient, Vec<VertexImage>)> {
    let n = c.order();
    let primes = PrimeSupply::from(3).take(n);
    let factors = primes.iter().map(|&q| group::modular_p3(q)).collect::<Result<Vec<_>>>()?;
    // a^i b^j sits at i + p²j
    let map = (0..n)
        .map(|i| {
            let t = (0..n)
                .map(|j| {
                    let p = primes[j] as u32;
                    match j {
                        _ if j == i => p * p,
                        _ if j > i => match c.colour(i, j) {
                            Colour::Red => 0,
                            Colour::Green => p,
                            Colour::Blue => 1,
                        },
                        _ => 0,
                    }
                })
                .collect();
            VertexImage::Tuple(t)
        })
        .collect();
    Ok((Ambient::Symbolic(SymbolicProduct::new(factors)?), map))
}

/// Predicate values for the pair `(u, v)`, or `None` if an image is malformed.
fn evaluate(cert: &EmbeddingCertificate, u: usize, v: usize) -> Option<Vec<(&'static str, bool)>> {
    let (x, y) = (cert.vertex_map.get(u)?, cert.vertex_map.get(v)?);
    match (&cert.ambient, x, y) {
        (Ambient::Group(g), VertexImage::Element(a), VertexImage::Element(b)) => {
            if *a as usize >= g.order() || *b as usize >= g.order() {
                return None;
            }
            Some(vec![("com", g.commutes(*a, *b))])
        }
        (Ambient::Symbolic(s), VertexImage::Tuple(a), VertexImage::Tuple(b)) => {
            if !s.valid(a) || !s.valid(b) {
                return None;
            }
            Some(match cert.kind {
                EmbedKind::Pow => vec![("pow", s.power_adjacent(a, b))],
                EmbedKind::EPow => vec![("epow", s.cyclic_pair(a, b))],
                EmbedKind::Dep => vec![("dep", s.cyclic_meet(a, b))],
                EmbedKind::ThreeColoured => vec![("epow", s.cyclic_pair(a, b)), ("com", s.commute(a, b))],
                _ => return None,
            })
        }
        (Ambient::Perms { degree }, VertexImage::Perm(a), VertexImage::Perm(b)) => {
            if a.degree() != *degree || b.degree() != *degree {
                return None;
            }
            let r = perm_generates_alternating(&[a.clone(), b.clone()], *degree).ok()?;
            Some(vec![("gen", r)])
        }
        _ => None,
    }
}

fn expected(cert: &EmbeddingCertificate, u: usize, v: usize) -> Vec<(&'static str, bool)> {
    match (&cert.instance, cert.kind) {
        (Instance::Coloured(c), _) => {
            let col = c.colour(u, v);
            vec![("epow", col == Colour::Red), ("com", col != Colour::Blue)]
        }
        (inst, kind) => {
            let name = match kind {
                EmbedKind::Com => "com",
                EmbedKind::Pow => "pow",
                EmbedKind::EPow => "epow",
                EmbedKind::Dep => "dep",
                EmbedKind::Gen => "gen",
                EmbedKind::ThreeColoured => "epow",
            };
            vec![(name, inst.joined(u, v))]
        }
    }
}

/// Re-evaluates the defining predicate on every vertex pair and compares it
/// with the instance; also checks that the map is injective, that no vertex
/// of the dual enhanced power graph lands on the identity, and that the
/// transcript agrees.
pub fn verify_embedding(cert: &EmbeddingCertificate) -> Verification {
    let n = cert.instance.order();
    let fail = |u, v| Verification { failure: Some((u, v)) };
    if cert.vertex_map.len() != n {
        return fail(n.min(cert.vertex_map.len()), n.min(cert.vertex_map.len()));
    }
    let matches_kind = matches!(
        (&cert.instance, cert.kind),
        (Instance::Coloured(_), EmbedKind::ThreeColoured)
            | (Instance::Graph(_), EmbedKind::Com | EmbedKind::EPow | EmbedKind::Dep | EmbedKind::Gen)
            | (Instance::Graph(_) | Instance::Poset(_), EmbedKind::Pow)
    );
    if !matches_kind {
        return fail(0, 0);
    }
    for u in 0..n {
        if cert.kind == EmbedKind::Dep {
            if let (Ambient::Symbolic(s), VertexImage::Tuple(t)) = (&cert.ambient, &cert.vertex_map[u]) {
                if s.is_identity(t) {
                    return fail(u, u);
                }
            }
        }
        for v in u + 1..n {
            if cert.vertex_map[u] == cert.vertex_map[v] {
                return fail(u, v);
            }
            let Some(got) = evaluate(cert, u, v) else {
                return fail(u, v);
            };
            if got != expected(cert, u, v) {
                return fail(u, v);
            }
            let recorded: Vec<(&str, bool)> = cert
                .transcript
                .iter()
                .filter(|r| (r.u, r.v) == (u, v))
                .map(|r| (r.predicate, r.result))
                .collect();
            if recorded != got {
                return fail(u, v);
            }
        }
    }
    Verification { failure: None }
}

/// A transitive orientation of `g`, returned as the partial order in which
/// `u → v` means `v < u`. Refusals carry two orientations of edges that one
/// implication class forces against each other.
pub fn transitive_orientation(g: &Graph) -> Result<Poset> {
    let n = g.order();
    guard("transitive orientation vertices", MAX_ORIENT, n)?;
    let empty = Orient::new(n);
    for (u, v) in g.edges() {
        let mut o = empty.clone();
        if let Err(clash) = o.force(g, u, v, false) {
            return Err(Error::NoTransitiveOrientation {
                witness: vec![(u, v), clash],
            });
        }
    }
    match search(g, empty) {
        Some(o) => {
            let mut pairs = Vec::new();
            for u in 0..n {
                for v in 0..n {
                    if o.dir[u][v] == 1 {
                        pairs.push((v, u));
                    }
                }
            }
            Poset::from_relation(n, &pairs)
        }
        None => Err(Error::NoTransitiveOrientation { witness: Vec::new() }),
    }
}

#[derive(Clone)]
struct Orient {
    /// `dir[u][v]`: 1 for `u → v`, -1 for `v → u`, 0 when open.
    dir: Vec<Vec<i8>>,
}

impl Orient {
    fn new(n: usize) -> Self {
        Orient {
            dir: vec![vec![0; n]; n],
        }
    }

    /// Sets `u → v` and everything it forces. With `triangles`, arcs
    /// `a → b → c` also force `a → c`. On a clash returns the edge that
    /// was forced both ways, oriented as first set.
    fn force(&mut self, g: &Graph, u: usize, v: usize, triangles: bool) -> std::result::Result<(), (usize, usize)> {
        let n = g.order();
        let mut queue = vec![(u, v)];
        while let Some((a, b)) = queue.pop() {
            match self.dir[a][b] {
                1 => continue,
                -1 => return Err((b, a)),
                _ => {}
            }
            self.dir[a][b] = 1;
            self.dir[b][a] = -1;
            for c in 0..n {
                if c == a || c == b {
                    continue;
                }
                let (ca, cb) = (g.has_edge(c, a), g.has_edge(c, b));
                if cb && !ca {
                    queue.push((c, b));
                }
                if ca && !cb {
                    queue.push((a, c));
                }
                if triangles && ca && cb {
                    if self.dir[b][c] == 1 {
                        queue.push((a, c));
                    }
                    if self.dir[c][a] == 1 {
                        queue.push((c, b));
                    }
                }
            }
        }
        Ok(())
    }

    fn transitive(&self) -> bool {
        let n = self.dir.len();
        (0..n).all(|a| {
            (0..n).all(|b| self.dir[a][b] != 1 || (0..n).all(|c| self.dir[b][c] != 1 || self.dir[a][c] == 1))
        })
    }
}

fn search(g: &Graph, o: Orient) -> Option<Orient> {
    let open = g.edges().find(|&(u, v)| o.dir[u][v] == 0);
    let Some((u, v)) = open else {
        return o.transitive().then_some(o);
    };
    for (a, b) in [(u, v), (v, u)] {
        let mut next = o.clone();
        if next.force(g, a, b, true).is_ok() {
            if let Some(done) = search(g, next) {
                return Some(done);
            }
        }
    }
    None
}

/// Decides whether even permutations of degree `m` generate a group
/// containing `A_m` without listing its elements.
///
/// An intransitive or imprimitive group is refused. A primitive group is
/// accepted once a short word in the generators has a power that is a
/// single cycle of prime length at most `m - 3` (Jordan). Anything else is
/// reported as [`Error::Indeterminate`].
pub fn perm_generates_alternating(perms: &[Perm], m: usize) -> Result<bool> {
    if m < 3 || perms.is_empty() {
        return Err(Error::InvalidSpec(format!("need generators of degree at least 3, got {m}")));
    }
    if let Some(p) = perms.iter().find(|p| p.degree() != m || !p.is_even()) {
        return Err(Error::InvalidSpec(format!("{p} is not an even permutation of degree {m}")));
    }
    let mut moved = vec![false; m];
    for p in perms {
        for x in p.support() {
            moved[x] = true;
        }
    }
    if moved.contains(&false) || orbit_size(perms, m) < m {
        return Ok(false);
    }
    if (1..m).any(|beta| minimal_block_size(perms, m, beta) < m) {
        return Ok(false);
    }
    if jordan_element(perms, m) {
        return Ok(true);
    }
    Err(Error::Indeterminate)
}

fn orbit_size(perms: &[Perm], m: usize) -> usize {
    let mut seen = vec![false; m];
    seen[0] = true;
    let mut queue = vec![0];
    while let Some(x) = queue.pop() {
        for p in perms {
            let y = p.apply(x);
            if !seen[y] {
                seen[y] = true;
                queue.push(y);
            }
        }
    }
    seen.iter().filter(|&&s| s).count()
}

/// Size of the smallest block containing `0` and `beta`.
fn minimal_block_size(perms: &[Perm], m: usize, beta: usize) -> usize {
    let mut parent: Vec<usize> = (0..m).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut queue = vec![(0, beta)];
    parent[beta] = 0;
    while let Some((a, b)) = queue.pop() {
        for p in perms {
            let (x, y) = (find(&mut parent, p.apply(a)), find(&mut parent, p.apply(b)));
            if x != y {
                parent[y] = x;
                queue.push((p.apply(a), p.apply(b)));
            }
        }
    }
    let root = find(&mut parent, 0);
    (0..m).filter(|&x| find(&mut parent, x) == root).count()
}

/// Looks for a prime cycle of length at most `m - 3` among powers of words
/// of length at most four in the generators and their inverses.
fn jordan_element(perms: &[Perm], m: usize) -> bool {
    let mut letters: Vec<Perm> = perms.to_vec();
    letters.extend(perms.iter().map(Perm::inverse));
    let mut layer: Vec<Perm> = letters.clone();
    for _ in 0..4 {
        if layer.iter().any(|x| has_prime_cycle_power(x, m)) {
            return true;
        }
        layer = layer
            .iter()
            .flat_map(|w| letters.iter().map(move |l| w.then(l)))
            .collect();
    }
    false
}

fn has_prime_cycle_power(x: &Perm, m: usize) -> bool {
    let o = x.order();
    arith::prime_divisors(o).into_iter().any(|q| {
        let y = x.pow(o / q);
        q as usize + 3 <= m && y.support().len() == q as usize
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn com_path() {
        let cert = embed(EmbedKind::Com, &Instance::Graph(Graph::path(4))).unwrap();
        let Ambient::Group(g) = &cert.ambient else { panic!() };
        assert_eq!(g.order(), 32);
        assert!(verify_embedding(&cert).holds());
    }

    #[test]
    fn pow_chain_lands_in_c6() {
        let p = Poset::from_relation(2, &[(0, 1)]).unwrap();
        let cert = embed(EmbedKind::Pow, &Instance::Poset(p)).unwrap();
        let Ambient::Symbolic(s) = &cert.ambient else { panic!() };
        assert_eq!(s.order(), Some(6));
        assert_eq!(cert.vertex_map[0], VertexImage::Tuple(vec![1, 0]));
        assert_eq!(cert.vertex_map[1], VertexImage::Tuple(vec![1, 1]));
        assert!(verify_embedding(&cert).holds());
    }

    #[test]
    fn pow_refuses_c5() {
        let e = embed(EmbedKind::Pow, &Instance::Graph(Graph::cycle(5))).unwrap_err();
        let Error::NoTransitiveOrientation { witness } = e else { panic!("{e}") };
        assert_eq!(witness.len(), 2);
        let cert = embed(EmbedKind::EPow, &Instance::Graph(Graph::cycle(5))).unwrap();
        assert!(verify_embedding(&cert).holds());
    }

    #[test]
    fn gen_k2_and_jordan() {
        let cert = embed(EmbedKind::Gen, &Instance::Graph(Graph::complete(2))).unwrap();
        assert!(verify_embedding(&cert).holds());
        let seven: Vec<Perm> = [vec![0, 1, 2, 3, 4], vec![2, 3, 4, 5, 6]]
            .iter()
            .map(|c| Perm::from_cycles(7, &[c.clone()]).unwrap())
            .collect();
        assert!(perm_generates_alternating(&seven, 7).unwrap());
        let miss: Vec<Perm> = [vec![0, 1, 2, 3, 4], vec![1, 2, 3, 4, 5]]
            .iter()
            .map(|c| Perm::from_cycles(7, &[c.clone()]).unwrap())
            .collect();
        assert!(!perm_generates_alternating(&miss, 7).unwrap());
    }

    #[test]
    fn three_colours() {
        let c = ColouredComplete::new(3, |u, v| match (u, v) {
            (0, 1) => Colour::Red,
            (0, 2) => Colour::Green,
            _ => Colour::Blue,
        });
        let cert = embed(EmbedKind::ThreeColoured, &Instance::Coloured(c)).unwrap();
        assert!(verify_embedding(&cert).holds());
        let mut bad = cert.clone();
        bad.vertex_map[2] = bad.vertex_map[1].clone();
        assert_eq!(verify_embedding(&bad).failure, Some((0, 2)));
    }
}
