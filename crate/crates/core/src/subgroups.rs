//! Families of subgroups, their intersection graphs and dual pairs.

use crate::bits;
use crate::error::{Error, Result};
use crate::graph::{max_cliques, DEFAULT_CLIQUE_CAP};
use crate::group::{Group, Subgroup, SubgroupKind};
use crate::hierarchy::{build, containing_classes, BuildOptions, GraphKind};
use crate::Graph;
use std::collections::HashSet;
use std::fmt::Write;
use std::str::FromStr;

/// Largest group order for enumerating all subgroups.
pub const MAX_ALL_ORDER: usize = 400;

/// Largest family produced by the join closure.
pub const MAX_FAMILY: usize = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Cyclic,
    MaximalCyclic,
    MaximalAbelian,
    /// All non-trivial proper subgroups.
    All,
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cyclic" => Ok(FamilyKind::Cyclic),
            "maximal_cyclic" => Ok(FamilyKind::MaximalCyclic),
            "maximal_abelian" => Ok(FamilyKind::MaximalAbelian),
            "all" => Ok(FamilyKind::All),
            _ => Err(Error::InvalidSpec(format!("unknown subgroup family `{s}`"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SubgroupFamily {
    pub group: Group,
    pub kind: FamilyKind,
    /// Distinct non-trivial subgroups, ordered by size then members.
    pub members: Vec<Subgroup>,
}

impl SubgroupFamily {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// One `H<i>: {a, b, ...}` line per member.
    pub fn export(&self) -> String {
        let mut s = String::new();
        for (i, h) in self.members.iter().enumerate() {
            let m: Vec<String> = h.members().iter().map(u32::to_string).collect();
            writeln!(s, "H{i}: {{{}}}", m.join(", ")).unwrap();
        }
        s
    }
}

fn sorted(mut v: Vec<Subgroup>) -> Vec<Subgroup> {
    v.sort_by(|a, b| (a.len(), a.members()).cmp(&(b.len(), b.members())));
    v
}

fn cyclic_family(g: &Group, maximal_only: bool) -> Vec<Subgroup> {
    let up = containing_classes(g);
    let n = g.order();
    let out = (0..g.cyclic_class_count() as u32)
        .filter(|&c| g.class_subgroup(c).len() > 1)
        .filter(|&c| !maximal_only || up[c as usize] == [c])
        .map(|c| Subgroup::new(n, g.class_subgroup(c).to_vec(), vec![g.class_rep(c)]))
        .collect();
    sorted(out)
}

fn abelian_family(g: &Group, opts: &BuildOptions) -> Result<Vec<Subgroup>> {
    let com = build(g, GraphKind::Com, None, opts)?;
    let mut out = Vec::new();
    for clique in max_cliques(&com, DEFAULT_CLIQUE_CAP)? {
        let h = g.subgroup_from_members(clique.into_iter().map(|v| v as u32).collect())?;
        assert!(g.subgroup_is(&h, SubgroupKind::Abelian));
        if !h.is_trivial() {
            out.push(h);
        }
    }
    Ok(sorted(out))
}

fn all_family(g: &Group) -> Result<Vec<Subgroup>> {
    let n = g.order();
    if n > MAX_ALL_ORDER {
        return Err(Error::SizeGuard {
            what: "subgroup enumeration group order",
            limit: MAX_ALL_ORDER,
            got: n,
        });
    }
    let atoms = cyclic_family(g, false);
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut list: Vec<Subgroup> = Vec::new();
    for a in &atoms {
        if a.len() < n && seen.insert(a.members().to_vec()) {
            list.push(a.clone());
        }
    }
    let mut i = 0;
    while i < list.len() {
        let s = list[i].clone();
        for a in &atoms {
            if s.contains(a.generators()[0]) {
                continue;
            }
            let mut seeds = s.generators().to_vec();
            seeds.push(a.generators()[0]);
            let j = g.closure(&seeds);
            if j.len() < n && seen.insert(j.members().to_vec()) {
                if list.len() >= MAX_FAMILY {
                    return Err(Error::CapExceeded(MAX_FAMILY));
                }
                list.push(j);
            }
        }
        i += 1;
    }
    Ok(sorted(list))
}

pub fn enumerate_subgroups(g: &Group, kind: FamilyKind, opts: &BuildOptions) -> Result<SubgroupFamily> {
    let members = match kind {
        FamilyKind::Cyclic => cyclic_family(g, false),
        FamilyKind::MaximalCyclic => cyclic_family(g, true),
        FamilyKind::MaximalAbelian => abelian_family(g, opts)?,
        FamilyKind::All => all_family(g)?,
    };
    Ok(SubgroupFamily {
        group: g.clone(),
        kind,
        members,
    })
}

/// Members joined when they share a non-identity element.
pub fn intersection_graph(fam: &SubgroupFamily) -> Graph {
    let k = fam.len();
    let mut g = Graph::new(k);
    for i in 0..k {
        for j in i + 1..k {
            if fam.members[i].mask().intersection_count(fam.members[j].mask()) > 1 {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// The element–subgroup incidence graph of a covering family and its two
/// halved graphs.
#[derive(Clone, Debug)]
pub struct DualPair {
    /// Non-identity elements, in the order of the element-side vertices.
    pub elements: Vec<u32>,
    /// Element vertices first, then one vertex per family member.
    pub bipartite: Graph,
    pub element_half: Graph,
    pub subgroup_half: Graph,
}

impl DualPair {
    /// Bipartite edge list with side markers: `e<element> s<member>`.
    pub fn export(&self) -> String {
        let m = self.elements.len();
        let mut s = String::new();
        for (u, v) in self.bipartite.edges() {
            writeln!(s, "e{} s{}", self.elements[u], v - m).unwrap();
        }
        s
    }
}

pub fn dual_pair(g: &Group, fam: &SubgroupFamily) -> Result<DualPair> {
    let n = g.order();
    let elements: Vec<u32> = (1..n as u32).collect();
    if let Some(&x) = elements
        .iter()
        .find(|&&x| !fam.members.iter().any(|h| h.contains(x)))
    {
        return Err(Error::CoverageViolation(x as usize));
    }
    let m = elements.len();
    let k = fam.len();
    let mut bipartite = Graph::new(m + k);
    for (j, h) in fam.members.iter().enumerate() {
        for &x in h.members() {
            if x != 0 {
                bipartite.add_edge(x as usize - 1, m + j);
            }
        }
    }
    let w = bits::words_for(n);
    let element_half = Graph::from_row_fn(m, Default::default(), |v, row| {
        let x = v as u32 + 1;
        let mut full = vec![0u64; w];
        for h in fam.members.iter().filter(|h| h.contains(x)) {
            for (a, b) in full.iter_mut().zip(h.mask().words()) {
                *a |= b;
            }
        }
        for y in bits::ones(&full).filter(|&y| y != 0) {
            bits::set(row, y - 1);
        }
    });
    Ok(DualPair {
        elements,
        bipartite,
        element_half,
        subgroup_half: intersection_graph(fam),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualPairReport {
    /// Component structure of both halves follows that of the incidence graph.
    pub components_match: bool,
    /// Per component of the incidence graph: diameters of the element part
    /// and of the subgroup part.
    pub diameters: Vec<(usize, usize)>,
}

impl DualPairReport {
    pub fn ok(&self) -> bool {
        self.components_match && self.diameters.iter().all(|&(a, b)| a.abs_diff(b) <= 1)
    }
}

pub fn dual_pair_verify(dp: &DualPair) -> DualPairReport {
    let m = dp.elements.len();
    let em = dp.element_half.metrics();
    let sm = dp.subgroup_half.metrics();
    let mut e_comp = vec![usize::MAX; m];
    for (i, c) in em.components.iter().enumerate() {
        for &v in c {
            e_comp[v] = i;
        }
    }
    let mut s_comp = vec![usize::MAX; dp.subgroup_half.order()];
    for (i, c) in sm.components.iter().enumerate() {
        for &v in c {
            s_comp[v] = i;
        }
    }
    let mut matched = em.components.len() == sm.components.len();
    let mut diameters = Vec::new();
    for comp in dp.bipartite.components() {
        let (es, ss): (Vec<usize>, Vec<usize>) = comp.iter().partition(|&&v| v < m);
        let ss: Vec<usize> = ss.into_iter().map(|v| v - m).collect();
        if es.is_empty() || ss.is_empty() {
            matched = false;
            continue;
        }
        let ei = e_comp[es[0]];
        let si = s_comp[ss[0]];
        matched &= es.iter().all(|&v| e_comp[v] == ei) && em.components[ei].len() == es.len();
        matched &= ss.iter().all(|&v| s_comp[v] == si) && sm.components[si].len() == ss.len();
        diameters.push((em.diameters[ei], sm.diameters[si]));
    }
    DualPairReport {
        components_match: matched,
        diameters,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group;

    #[test]
    fn families() {
        let opts = BuildOptions::default();
        let a5 = group::alternating(5).unwrap();
        assert_eq!(enumerate_subgroups(&a5, FamilyKind::Cyclic, &opts).unwrap().len(), 31);
        let q8 = group::quaternion().unwrap();
        let mc = enumerate_subgroups(&q8, FamilyKind::MaximalCyclic, &opts).unwrap();
        assert_eq!(mc.members.iter().map(Subgroup::len).collect::<Vec<_>>(), vec![4, 4, 4]);
        let cyc = enumerate_subgroups(&q8, FamilyKind::Cyclic, &opts).unwrap();
        assert_eq!(intersection_graph(&cyc), Graph::complete(4));
        let s3 = group::symmetric(3).unwrap();
        assert_eq!(enumerate_subgroups(&s3, FamilyKind::All, &opts).unwrap().len(), 4);
        let s4 = group::symmetric(4).unwrap();
        // 30 subgroups in total, minus the trivial one and S4 itself
        assert_eq!(enumerate_subgroups(&s4, FamilyKind::All, &opts).unwrap().len(), 28);
    }

    #[test]
    fn a5_dual_pairs() {
        let opts = BuildOptions::default();
        let a5 = group::alternating(5).unwrap();
        let fam = enumerate_subgroups(&a5, FamilyKind::MaximalAbelian, &opts).unwrap();
        let dp = dual_pair(&a5, &fam).unwrap();
        let com = build(&a5, GraphKind::Com, None, &opts).unwrap().without(&[0]);
        assert_eq!(dp.element_half, com);
        let rep = dual_pair_verify(&dp);
        assert!(rep.ok());
        assert!(rep.diameters.len() > 1);
        let all = enumerate_subgroups(&a5, FamilyKind::All, &opts).unwrap();
        let dp = dual_pair(&a5, &all).unwrap();
        let ngen = build(&a5, GraphKind::NGen, None, &opts).unwrap().without(&[0]);
        assert_eq!(dp.element_half, ngen);
        assert!(dual_pair_verify(&dp).ok());
        let c6 = group::cyclic(6).unwrap();
        let fam = enumerate_subgroups(&c6, FamilyKind::All, &opts).unwrap();
        assert!(matches!(dual_pair(&c6, &fam), Err(Error::CoverageViolation(_))));
    }
}
