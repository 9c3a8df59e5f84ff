use super::Group;
use crate::arith;
use crate::bits::BitSet;
use crate::error::{Error, Result};

/// A subgroup given by its sorted member list and a generating set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    members: Vec<u32>,
    mask: BitSet,
    gens: Vec<u32>,
}

impl Subgroup {
    pub(crate) fn new(n: usize, mut members: Vec<u32>, gens: Vec<u32>) -> Self {
        members.sort_unstable();
        let mask = BitSet::from_indices(n, members.iter().map(|&m| m as usize));
        Subgroup { members, mask, gens }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn mask(&self) -> &BitSet {
        &self.mask
    }

    pub fn generators(&self) -> &[u32] {
        &self.gens
    }

    #[inline]
    pub fn contains(&self, g: u32) -> bool {
        self.mask.contains(g as usize)
    }
}

/// Outcome of a closure with early exit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Closure {
    /// The closure exceeded half the group, so it is the whole group.
    Top,
    Proper(Subgroup),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeriesKind {
    Derived,
    LowerCentral,
    UpperCentral,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SubgroupKind {
    Abelian,
    Cyclic,
    Nilpotent,
    Solvable,
}

/// Reusable buffers for repeated closures over one group.
pub struct ClosureScratch {
    stamp: Vec<u32>,
    epoch: u32,
    queue: Vec<u32>,
}

impl ClosureScratch {
    pub fn new(n: usize) -> Self {
        ClosureScratch {
            stamp: vec![0; n],
            epoch: 0,
            queue: Vec::with_capacity(n),
        }
    }

    pub(crate) fn capacity(&self) -> usize {
        self.stamp.len()
    }

    fn reset(&mut self) {
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.epoch = 1;
        }
        self.queue.clear();
    }
}

impl Group {
    /// Breadth-first closure; stops early once more than `limit` elements
    /// have been found and returns `None`.
    fn closure_bfs(&self, seeds: &[u32], limit: usize, s: &mut ClosureScratch) -> Option<usize> {
        s.reset();
        let e = s.epoch;
        s.stamp[0] = e;
        s.queue.push(0);
        let mut i = 0;
        while i < s.queue.len() {
            let x = s.queue[i];
            for &g in seeds {
                let y = self.mul(x, g);
                if s.stamp[y as usize] != e {
                    s.stamp[y as usize] = e;
                    s.queue.push(y);
                    if s.queue.len() > limit {
                        return None;
                    }
                }
            }
            i += 1;
        }
        Some(s.queue.len())
    }

    /// `⟨seeds⟩` without early exit.
    pub fn closure(&self, seeds: &[u32]) -> Subgroup {
        let mut s = ClosureScratch::new(self.order());
        self.closure_bfs(seeds, usize::MAX, &mut s);
        let gens = seeds.iter().copied().filter(|&g| g != 0).collect();
        Subgroup::new(self.order(), s.queue.clone(), gens)
    }

    /// `⟨seeds⟩`, or [`Closure::Top`] as soon as the partial closure exceeds
    /// half the group order.
    pub fn generated_closure(&self, seeds: &[u32]) -> Closure {
        let mut s = ClosureScratch::new(self.order());
        match self.closure_bfs(seeds, self.order() / 2, &mut s) {
            None => Closure::Top,
            Some(k) if k == self.order() => Closure::Top,
            Some(_) => {
                let gens = seeds.iter().copied().filter(|&g| g != 0).collect();
                Closure::Proper(Subgroup::new(self.order(), s.queue.clone(), gens))
            }
        }
    }

    /// Size of `⟨seeds⟩`, or `None` once it is known to be the whole group.
    pub fn closure_size_or_top(&self, seeds: &[u32], scratch: &mut ClosureScratch) -> Option<usize> {
        match self.closure_bfs(seeds, self.order() / 2, scratch) {
            Some(k) if k < self.order() => Some(k),
            _ => None,
        }
    }

    /// Members of the last closure run with `scratch`.
    pub(crate) fn scratch_members<'a>(&self, scratch: &'a ClosureScratch) -> &'a [u32] {
        &scratch.queue
    }

    pub fn generates_whole(&self, x: u32, y: u32) -> bool {
        if self.order() == 1 {
            return true;
        }
        matches!(self.generated_closure(&[x, y]), Closure::Top)
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::new(
            self.order(),
            (0..self.order() as u32).collect(),
            self.generators().to_vec(),
        )
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::new(self.order(), vec![0], Vec::new())
    }

    /// Wraps an element set, checking closure under multiplication.
    pub fn subgroup_from_members(&self, members: Vec<u32>) -> Result<Subgroup> {
        let n = self.order();
        if !members.contains(&0) {
            return Err(Error::Unsupported("subgroup must contain the identity".into()));
        }
        let mask = BitSet::from_indices(n, members.iter().map(|&m| m as usize));
        let set: Vec<u32> = mask.iter().map(|m| m as u32).collect();
        for &a in &set {
            for &b in &set {
                if !mask.contains(self.mul(a, b) as usize) {
                    return Err(Error::Unsupported("element set is not closed".into()));
                }
            }
        }
        if n % set.len() != 0 {
            return Err(Error::Unsupported("subgroup order does not divide group order".into()));
        }
        let gens = self.subgroup_generators(&set);
        Ok(Subgroup::new(n, set, gens))
    }

    fn subgroup_generators(&self, members: &[u32]) -> Vec<u32> {
        let mut cand: Vec<u32> = members.iter().copied().filter(|&g| g != 0).collect();
        cand.sort_by_key(|&g| (std::cmp::Reverse(self.element_order(g)), g));
        let mut gens = Vec::new();
        let mut h = self.closure(&[]);
        for g in cand {
            if h.len() == members.len() {
                break;
            }
            if !h.contains(g) {
                gens.push(g);
                h = self.closure(&gens);
            }
        }
        gens
    }

    pub fn center(&self) -> Subgroup {
        let gens = self.generators();
        let members: Vec<u32> = (0..self.order() as u32)
            .filter(|&z| gens.iter().all(|&g| self.commutes(z, g)))
            .collect();
        let sg = self.subgroup_generators(&members);
        Subgroup::new(self.order(), members, sg)
    }

    pub fn centralizer(&self, g: u32) -> Subgroup {
        let members: Vec<u32> = (0..self.order() as u32)
            .filter(|&h| self.commutes(h, g))
            .collect();
        let sg = self.subgroup_generators(&members);
        Subgroup::new(self.order(), members, sg)
    }

    /// Smallest subgroup of `⟨within⟩` containing `seeds` and normalized by
    /// every element of `within`.
    pub fn normal_closure(&self, within: &[u32], seeds: &[u32]) -> Subgroup {
        let mut gens: Vec<u32> = Vec::new();
        for &s in seeds {
            if s != 0 && !gens.contains(&s) {
                gens.push(s);
            }
        }
        let mut k = self.closure(&gens);
        let mut i = 0;
        while i < gens.len() {
            for &h in within {
                let c = self.conj(gens[i], h);
                if !k.contains(c) {
                    gens.push(c);
                    k = self.closure(&gens);
                }
            }
            i += 1;
        }
        k
    }

    pub fn is_normal(&self, n: &Subgroup) -> bool {
        self.generators()
            .iter()
            .all(|&g| n.generators().iter().all(|&x| n.contains(self.conj(x, g))))
    }

    pub fn series(&self, h: &Subgroup, kind: SeriesKind) -> Vec<Subgroup> {
        let mut out = vec![match kind {
            SeriesKind::UpperCentral => self.trivial_subgroup(),
            _ => h.clone(),
        }];
        loop {
            let last = out.last().unwrap();
            let next = match kind {
                SeriesKind::Derived => {
                    let g = last.generators();
                    let comms: Vec<u32> = g
                        .iter()
                        .flat_map(|&a| g.iter().map(move |&b| (a, b)))
                        .map(|(a, b)| self.comm(a, b))
                        .collect();
                    self.normal_closure(g, &comms)
                }
                SeriesKind::LowerCentral => {
                    let comms: Vec<u32> = last
                        .generators()
                        .iter()
                        .flat_map(|&a| h.generators().iter().map(move |&b| (a, b)))
                        .map(|(a, b)| self.comm(a, b))
                        .collect();
                    self.normal_closure(h.generators(), &comms)
                }
                SeriesKind::UpperCentral => {
                    let members: Vec<u32> = h
                        .members()
                        .iter()
                        .copied()
                        .filter(|&x| h.generators().iter().all(|&g| last.contains(self.comm(x, g))))
                        .collect();
                    let gens = self.subgroup_generators(&members);
                    Subgroup::new(self.order(), members, gens)
                }
            };
            if next.members() == last.members() {
                break;
            }
            out.push(next);
        }
        out
    }

    pub fn subgroup_is(&self, h: &Subgroup, kind: SubgroupKind) -> bool {
        match kind {
            SubgroupKind::Abelian => {
                let g = h.generators();
                g.iter().all(|&a| g.iter().all(|&b| self.commutes(a, b)))
            }
            SubgroupKind::Cyclic => h
                .members()
                .iter()
                .any(|&g| self.element_order(g) as usize == h.len()),
            SubgroupKind::Nilpotent => self
                .series(h, SeriesKind::LowerCentral)
                .last()
                .unwrap()
                .is_trivial(),
            SubgroupKind::Solvable => self
                .series(h, SeriesKind::Derived)
                .last()
                .unwrap()
                .is_trivial(),
        }
    }

    /// Nilpotency via Sylow counting: a finite group is nilpotent exactly
    /// when, for each prime p, its p-elements number the p-part of its order.
    pub fn is_nilpotent_members(&self, members: &[u32]) -> bool {
        let n = members.len() as u64;
        arith::prime_divisors(n).into_iter().all(|p| {
            let mut part = 1;
            while n % (part * p) == 0 {
                part *= p;
            }
            let count = members
                .iter()
                .filter(|&&g| is_power_of(self.element_order(g) as u64, p))
                .count() as u64;
            count == part
        })
    }

    /// Solvability of the subgroup with the given members and generators.
    pub(crate) fn is_solvable_members(&self, members: &[u32], gens: &[u32]) -> bool {
        let h = Subgroup::new(self.order(), members.to_vec(), gens.iter().copied().filter(|&g| g != 0).collect());
        self.subgroup_is(&h, SubgroupKind::Solvable)
    }

    /// Iterates `c₁ = [x,y]`, `c_{k+1} = [c_k, y]`; returns the first `k` with
    /// `c_k = 1`, or `None` if the sequence cycles without reaching 1.
    pub fn engel_related(&self, x: u32, y: u32) -> Option<u32> {
        let mut c = self.comm(x, y);
        let mut k = 1u32;
        // Brent cycle detection over the deterministic sequence
        let mut saved = c;
        let mut power = 1u32;
        let mut lam = 0u32;
        loop {
            if c == 0 {
                return Some(k);
            }
            c = self.comm(c, y);
            k += 1;
            lam += 1;
            if c == saved && c != 0 {
                return None;
            }
            if lam == power {
                saved = c;
                power *= 2;
                lam = 0;
            }
        }
    }

    /// The quotient by a normal subgroup; cosets are numbered by least member.
    pub fn quotient(&self, n: &Subgroup) -> Result<Group> {
        if !self.is_normal(n) {
            return Err(Error::NotNormal);
        }
        let (reps, coset_of) = self.cosets(n);
        let parent = self.clone();
        let reps = std::sync::Arc::new(reps);
        let coset_of = std::sync::Arc::new(coset_of);
        let q = reps.len();
        let f = move |a: u32, b: u32| coset_of[parent.mul(reps[a as usize], reps[b as usize]) as usize];
        Group::from_oracle(
            format!("{}/N{}", self.label(), n.len()),
            q,
            super::Oracle::Fn(std::sync::Arc::new(f)),
            None,
        )
    }

    /// Left cosets `gN`: representatives (least member of each coset, in
    /// increasing order) and the coset index of every element.
    pub fn cosets(&self, n: &Subgroup) -> (Vec<u32>, Vec<u32>) {
        let mut coset_of = vec![u32::MAX; self.order()];
        let mut reps = Vec::new();
        for g in 0..self.order() as u32 {
            if coset_of[g as usize] != u32::MAX {
                continue;
            }
            let c = reps.len() as u32;
            reps.push(g);
            for &m in n.members() {
                coset_of[self.mul(g, m) as usize] = c;
            }
        }
        (reps, coset_of)
    }
}

fn is_power_of(mut m: u64, p: u64) -> bool {
    while m % p == 0 {
        m /= p;
    }
    m == 1
}
