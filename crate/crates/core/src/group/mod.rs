//! Finite groups on dense element indices `0..n`, identity at index 0.
//!
//! Small groups carry a full Cayley table. Larger ones multiply through the
//! underlying representation (permutations keyed by base images, or a
//! closure over component groups) and keep only the per-element caches.

mod construct;
mod io;
mod spec;
mod subgroup;

pub use construct::*;
pub use io::{parse_cayley_table, parse_permutations};
pub use spec::{parse_cover, parse_group};
pub use subgroup::{Closure, ClosureScratch, SeriesKind, Subgroup, SubgroupKind};

use crate::arith;
use crate::error::{Error, Result};
use crate::par::Exec;
use crate::perm::Perm;
use std::fmt;
use std::sync::Arc;

/// Groups up to this order store a Cayley table.
pub const TABLE_LIMIT: usize = 4096;

/// Largest order any constructor will enumerate.
pub const MAX_ORDER: usize = 1_000_000;

pub(crate) type MulFn = dyn Fn(u32, u32) -> u32 + Send + Sync;

pub(crate) enum Oracle {
    Perm(PermIndex),
    Fn(Arc<MulFn>),
}

impl Oracle {
    #[inline]
    fn mul(&self, a: u32, b: u32) -> u32 {
        match self {
            Oracle::Perm(p) => p.mul(a, b),
            Oracle::Fn(f) => f(a, b),
        }
    }
}

/// Permutation images for every element, with a base whose images identify
/// each element uniquely.
pub(crate) struct PermIndex {
    degree: usize,
    images: Vec<u16>,
    base: Vec<u16>,
    bits: u32,
    keys: Vec<u128>,
    key_idx: Vec<u32>,
}

impl PermIndex {
    /// `perms[0]` must be the identity.
    fn new(perms: &[Perm]) -> Result<Self> {
        let degree = perms.first().map_or(0, Perm::degree);
        let images: Vec<u16> = perms.iter().flat_map(|p| p.images().iter().copied()).collect();
        let img = |g: usize, x: usize| images[g * degree + x];

        let mut base = Vec::new();
        let mut stab: Vec<usize> = (1..perms.len()).collect();
        while let Some(&s) = stab.first() {
            let x = (0..degree).find(|&x| img(s, x) as usize != x).unwrap();
            base.push(x as u16);
            stab.retain(|&g| img(g, x) as usize == x);
        }
        let bits = usize::BITS - degree.max(2).saturating_sub(1).leading_zeros();
        if bits as usize * base.len() > 128 {
            return Err(Error::Unsupported(format!(
                "base of length {} on {} points does not fit a 128-bit key",
                base.len(),
                degree
            )));
        }
        let mut keyed: Vec<(u128, u32)> = (0..perms.len())
            .map(|g| {
                let k = base
                    .iter()
                    .fold(0u128, |k, &b| (k << bits) | img(g, b as usize) as u128);
                (k, g as u32)
            })
            .collect();
        keyed.sort_unstable();
        Ok(PermIndex {
            degree,
            base,
            bits,
            keys: keyed.iter().map(|k| k.0).collect(),
            key_idx: keyed.iter().map(|k| k.1).collect(),
            images,
        })
    }

    #[inline]
    fn image(&self, g: u32, x: usize) -> usize {
        self.images[g as usize * self.degree + x] as usize
    }

    #[inline]
    fn mul(&self, a: u32, b: u32) -> u32 {
        let mut key = 0u128;
        for &x in &self.base {
            key = (key << self.bits) | self.image(b, self.image(a, x as usize)) as u128;
        }
        let pos = self.keys.binary_search(&key).expect("product lies in the group");
        self.key_idx[pos]
    }

    fn perm(&self, g: u32) -> Perm {
        let s = g as usize * self.degree;
        Perm::from_images(self.images[s..s + self.degree].to_vec()).expect("stored bijection")
    }
}

struct Data {
    label: String,
    n: usize,
    table: Option<Vec<u16>>,
    oracle: Option<Oracle>,
    inv: Vec<u32>,
    order: Vec<u32>,
    class_of: Vec<u32>,
    exp_of: Vec<u32>,
    class_powers: Vec<Vec<u32>>,
    gens: Vec<u32>,
}

/// A finite group. Cloning is cheap; all caches are shared and immutable.
#[derive(Clone)]
pub struct Group(Arc<Data>);

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Group({}, order {})", self.0.label, self.0.n)
    }
}

impl Group {
    /// Builds the caches for a group given by a multiplication oracle whose
    /// identity is index 0. `gens` defaults to a greedy generating set.
    pub(crate) fn from_oracle(
        label: impl Into<String>,
        n: usize,
        oracle: Oracle,
        gens: Option<Vec<u32>>,
    ) -> Result<Group> {
        if n == 0 {
            return Err(Error::NotAGroup("empty element set".into()));
        }
        if n > MAX_ORDER {
            return Err(Error::SizeGuard {
                what: "group order",
                limit: MAX_ORDER,
                got: n,
            });
        }
        let table = (n <= TABLE_LIMIT).then(|| {
            Exec::default()
                .map(n, |a| {
                    (0..n as u32)
                        .map(|b| oracle.mul(a as u32, b) as u16)
                        .collect::<Vec<_>>()
                })
                .concat()
        });
        let keep_oracle = table.is_none() || matches!(oracle, Oracle::Perm(_));
        let mut data = Data {
            label: label.into(),
            n,
            table,
            oracle: keep_oracle.then_some(oracle),
            inv: Vec::new(),
            order: Vec::new(),
            class_of: Vec::new(),
            exp_of: Vec::new(),
            class_powers: Vec::new(),
            gens: Vec::new(),
        };
        build_classes(&mut data)?;
        let mut g = Group(Arc::new(data));
        let gens = match gens {
            Some(gs) => gs.into_iter().filter(|&x| x != 0).collect(),
            None => g.greedy_generators(),
        };
        Arc::get_mut(&mut g.0).expect("unshared during construction").gens = gens;
        Ok(g)
    }

    pub(crate) fn from_table(label: impl Into<String>, n: usize, table: Vec<u32>) -> Result<Group> {
        let t = Arc::new(table);
        let f = move |a: u32, b: u32| t[a as usize * n + b as usize];
        Group::from_oracle(label, n, Oracle::Fn(Arc::new(f)), None)
    }

    pub(crate) fn from_perms(label: impl Into<String>, perms: &[Perm], gens: Vec<u32>) -> Result<Group> {
        let idx = PermIndex::new(perms)?;
        Group::from_oracle(label, perms.len(), Oracle::Perm(idx), Some(gens))
    }

    pub fn label(&self) -> &str {
        &self.0.label
    }

    pub fn order(&self) -> usize {
        self.0.n
    }

    pub fn identity(&self) -> u32 {
        0
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match &self.0.table {
            Some(t) => t[a as usize * self.0.n + b as usize] as u32,
            None => self.0.oracle.as_ref().unwrap().mul(a, b),
        }
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.0.inv[a as usize]
    }

    /// `[x, y] = x⁻¹ y⁻¹ x y`.
    #[inline]
    pub fn comm(&self, x: u32, y: u32) -> u32 {
        let xy = self.mul(x, y);
        let yx = self.mul(y, x);
        self.mul(self.inv(yx), xy)
    }

    /// `g⁻¹ x g`.
    #[inline]
    pub fn conj(&self, x: u32, g: u32) -> u32 {
        self.mul(self.inv(g), self.mul(x, g))
    }

    #[inline]
    pub fn commutes(&self, x: u32, y: u32) -> bool {
        self.mul(x, y) == self.mul(y, x)
    }

    #[inline]
    pub fn element_order(&self, g: u32) -> u32 {
        self.0.order[g as usize]
    }

    pub fn element_orders(&self) -> &[u32] {
        &self.0.order
    }

    pub fn pow(&self, g: u32, e: u64) -> u32 {
        let c = self.0.class_of[g as usize] as usize;
        let p = &self.0.class_powers[c];
        let k = p.len() as u64;
        p[((self.0.exp_of[g as usize] as u64 * (e % k)) % k) as usize]
    }

    /// Index of the cyclic subgroup `⟨g⟩` among all cyclic subgroups.
    #[inline]
    pub fn cyclic_class(&self, g: u32) -> u32 {
        self.0.class_of[g as usize]
    }

    /// Number of cyclic subgroups, the identity subgroup included.
    pub fn cyclic_class_count(&self) -> usize {
        self.0.class_powers.len()
    }

    /// A generator of the cyclic subgroup with index `c`.
    pub fn class_rep(&self, c: u32) -> u32 {
        let p = &self.0.class_powers[c as usize];
        if p.len() > 1 {
            p[1]
        } else {
            0
        }
    }

    /// Elements of the cyclic subgroup with index `c`, in power order of the
    /// class representative.
    pub fn class_subgroup(&self, c: u32) -> &[u32] {
        &self.0.class_powers[c as usize]
    }

    /// `⟨g⟩` in power order of the class representative.
    pub fn cyclic_subgroup(&self, g: u32) -> &[u32] {
        self.class_subgroup(self.cyclic_class(g))
    }

    /// The generators of the cyclic subgroup with index `c`.
    pub fn class_members(&self, c: u32) -> Vec<u32> {
        let p = &self.0.class_powers[c as usize];
        let k = p.len() as u64;
        if k == 1 {
            return vec![0];
        }
        (1..k)
            .filter(|&e| arith::gcd_u64(e, k) == 1)
            .map(|e| p[e as usize])
            .collect()
    }

    /// Partition of the elements by the relation `⟨x⟩ = ⟨y⟩`.
    pub fn cyclic_classes(&self) -> Vec<Vec<u32>> {
        (0..self.cyclic_class_count() as u32)
            .map(|c| self.class_members(c))
            .collect()
    }

    pub fn generators(&self) -> &[u32] {
        &self.0.gens
    }

    pub fn is_abelian(&self) -> bool {
        let g = self.generators();
        g.iter().all(|&a| g.iter().all(|&b| self.commutes(a, b)))
    }

    pub fn is_cyclic(&self) -> bool {
        self.0.order.iter().any(|&o| o as usize == self.0.n)
    }

    pub fn element_label(&self, g: u32) -> String {
        format!("g{}:ord{}", g, self.element_order(g))
    }

    /// The permutation realizing `g`, for permutation groups.
    pub fn perm(&self, g: u32) -> Option<Perm> {
        match &self.0.oracle {
            Some(Oracle::Perm(p)) => Some(p.perm(g)),
            _ => None,
        }
    }

    /// Locates a permutation among the elements of a permutation group.
    pub fn find_perm(&self, p: &Perm) -> Option<u32> {
        match &self.0.oracle {
            Some(Oracle::Perm(idx)) if p.degree() == idx.degree => {
                let key = idx
                    .base
                    .iter()
                    .fold(0u128, |k, &b| (k << idx.bits) | p.apply(b as usize) as u128);
                let pos = idx.keys.binary_search(&key).ok()?;
                let g = idx.key_idx[pos];
                (idx.perm(g) == *p).then_some(g)
            }
            _ => None,
        }
    }

    /// Conjugacy classes of elements, each sorted; ordered by least member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<u32>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for x in 0..n as u32 {
            if seen[x as usize] {
                continue;
            }
            seen[x as usize] = true;
            let mut orbit = vec![x];
            let mut i = 0;
            while i < orbit.len() {
                for &s in self.generators() {
                    let y = self.conj(orbit[i], s);
                    if !seen[y as usize] {
                        seen[y as usize] = true;
                        orbit.push(y);
                    }
                }
                i += 1;
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    fn greedy_generators(&self) -> Vec<u32> {
        let n = self.order();
        let mut cand: Vec<u32> = (1..n as u32).collect();
        cand.sort_by_key(|&g| (std::cmp::Reverse(self.element_order(g)), g));
        let mut gens = Vec::new();
        let mut h = self.closure(&[]);
        for g in cand {
            if h.len() == n {
                break;
            }
            if !h.contains(g) {
                gens.push(g);
                h = self.closure(&gens);
            }
        }
        gens
    }

    /// True if the group multiplication is associative: exhaustively up to
    /// order 256, on `samples` seeded random triples above.
    pub fn check_associative(&self, samples: usize, seed: u64) -> Option<(u32, u32, u32)> {
        use rand::{Rng, SeedableRng};
        let n = self.order() as u32;
        let assoc = |a, b, c| self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c));
        if n <= 256 {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if !assoc(a, b, c) {
                            return Some((a, b, c));
                        }
                    }
                }
            }
            return None;
        }
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        (0..samples).find_map(|_| {
            let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
            (!assoc(a, b, c)).then_some((a, b, c))
        })
    }
}

fn build_classes(d: &mut Data) -> Result<()> {
    let n = d.n;
    let mul = |a: u32, b: u32| match &d.table {
        Some(t) => t[a as usize * n + b as usize] as u32,
        None => d.oracle.as_ref().unwrap().mul(a, b),
    };
    let unset = u32::MAX;
    let mut order = vec![0u32; n];
    let mut class_of = vec![unset; n];
    let mut exp_of = vec![0u32; n];
    let mut class_powers: Vec<Vec<u32>> = Vec::new();
    for g in 0..n as u32 {
        if class_of[g as usize] != unset {
            continue;
        }
        let mut seq = vec![0u32];
        let mut x = g;
        while x != 0 {
            if seq.len() > n {
                return Err(Error::NotAGroup(format!("element {g} has no finite order")));
            }
            seq.push(x);
            x = mul(x, g);
        }
        let k = seq.len() as u64;
        let c = class_powers.len() as u32;
        for (e, &y) in seq.iter().enumerate() {
            let e = e as u64;
            let gcd = arith::gcd_u64(e, k);
            order[y as usize] = (k / gcd) as u32;
            if gcd == 1 || k == 1 {
                class_of[y as usize] = c;
                exp_of[y as usize] = e as u32;
            }
        }
        class_powers.push(seq);
    }
    if mul(0, 0) != 0 {
        return Err(Error::NotAGroup("index 0 is not the identity".into()));
    }
    d.inv = (0..n)
        .map(|g| {
            let p = &class_powers[class_of[g] as usize];
            let k = p.len() as u32;
            p[((k - exp_of[g] % k) % k) as usize]
        })
        .collect();
    d.order = order;
    d.class_of = class_of;
    d.exp_of = exp_of;
    d.class_powers = class_powers;
    Ok(())
}
