use super::{Group, Oracle, MAX_ORDER};
use crate::arith;
use crate::error::{Error, Result};
use crate::field::FiniteField;
use crate::perm::Perm;
use std::collections::HashMap;
use std::sync::Arc;

fn guard(n: u64) -> Result<usize> {
    if n > MAX_ORDER as u64 {
        return Err(Error::SizeGuard {
            what: "group order",
            limit: MAX_ORDER,
            got: n.min(usize::MAX as u64) as usize,
        });
    }
    Ok(n as usize)
}

fn formula(label: String, n: usize, f: impl Fn(u32, u32) -> u32 + Send + Sync + 'static) -> Result<Group> {
    Group::from_oracle(label, n, Oracle::Fn(Arc::new(f)), None)
}

pub fn cyclic(n: u64) -> Result<Group> {
    if n == 0 {
        return Err(Error::InvalidSpec("cyclic:0".into()));
    }
    let n32 = guard(n)? as u32;
    formula(format!("cyclic:{n}"), n32 as usize, move |a, b| (a + b) % n32)
}

/// Dihedral group of the given order (an even number); rotations
/// `r^i` are indices `0..n/2`, reflections `r^i s` follow.
pub fn dihedral(order: u64) -> Result<Group> {
    if order < 2 || order % 2 == 1 {
        return Err(Error::InvalidSpec(format!("dihedral:{order}")));
    }
    let n = guard(order)?;
    let m = (order / 2) as u32;
    formula(format!("dihedral:{order}"), n, move |a, b| {
        let (i, j) = (a % m, a / m);
        let (k, l) = (b % m, b / m);
        let r = if j == 0 { (i + k) % m } else { (i + m - k) % m };
        r + m * ((j + l) % 2)
    })
}

/// Generalized quaternion group of order `4m`, `m ≥ 2`:
/// `⟨a, b | a^{2m} = 1, b² = a^m, b⁻¹ab = a⁻¹⟩`, element `a^i b^j` at `i + 2m·j`.
pub fn generalized_quaternion(order: u64) -> Result<Group> {
    if order < 8 || order % 4 != 0 {
        return Err(Error::InvalidSpec(format!("genq:{order}")));
    }
    let n = guard(order)?;
    let h = (order / 2) as u32;
    let m = h / 2;
    formula(format!("genq:{order}"), n, move |a, b| {
        let (i, j) = (a % h, a / h);
        let (k, l) = (b % h, b / h);
        let k = if j == 0 { k } else { (h - k) % h };
        if j == 1 && l == 1 {
            (i + k + m) % h
        } else {
            (i + k) % h + h * (j + l)
        }
    })
}

pub fn quaternion() -> Result<Group> {
    generalized_quaternion(8)
}

pub fn klein_four() -> Result<Group> {
    elementary_abelian(2, 2)
}

/// `C_p^k`, elements as base-p digit vectors.
pub fn elementary_abelian(p: u64, k: u32) -> Result<Group> {
    if !arith::is_prime(p) {
        return Err(Error::InvalidSpec(format!("elab:{p}^{k}")));
    }
    let n = guard(p.checked_pow(k).ok_or(Error::Overflow("p^k"))?)?;
    let p = p as u32;
    formula(format!("elab:{p}^{k}"), n, move |a, b| {
        let (mut a, mut b, mut r, mut place) = (a, b, 0, 1);
        while a > 0 || b > 0 {
            r += ((a % p + b % p) % p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        r
    })
}

/// The non-abelian group of order p³ and exponent p² for an odd prime p,
/// with `(a^i b^j)(a^k b^l) = a^{i + k(1+p)^j} b^{j+l}`; `a^i b^j` at `i + p²j`.
pub fn modular_p3(p: u64) -> Result<Group> {
    if p == 2 || !arith::is_prime(p) {
        return Err(Error::InvalidSpec(format!("modp3:{p}")));
    }
    let n = guard(p * p * p)?;
    let p = p as u32;
    let p2 = p * p;
    let mut rpow = vec![1u32; p as usize];
    for j in 1..p as usize {
        rpow[j] = rpow[j - 1] * (1 + p) % p2;
    }
    formula(format!("modp3:{p}"), n, move |a, b| {
        let (i, j) = (a % p2, a / p2);
        let (k, l) = (b % p2, b / p2);
        (i + k * rpow[j as usize]) % p2 + p2 * ((j + l) % p)
    })
}

/// The elements `(a, b)` of `G × H` are indexed `a·|H| + b`.
pub fn direct_product(g: &Group, h: &Group) -> Result<Group> {
    let n = guard(g.order() as u64 * h.order() as u64)?;
    let m = h.order() as u32;
    let (g2, h2) = (g.clone(), h.clone());
    formula(format!("prod({},{})", g.label(), h.label()), n, move |a, b| {
        g2.mul(a / m, b / m) * m + h2.mul(a % m, b % m)
    })
}

/// Next permutation in lexicographic order; false after the last.
fn next_permutation(v: &mut [u16]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn all_perms(n: usize, even_only: bool) -> Vec<Perm> {
    let mut v: Vec<u16> = (0..n as u16).collect();
    let mut out = Vec::new();
    loop {
        let p = Perm::from_images(v.clone()).unwrap();
        if !even_only || p.is_even() {
            out.push(p);
        }
        if !next_permutation(&mut v) {
            return out;
        }
    }
}

fn symmetric_like(n: u64, even: bool) -> Result<Group> {
    let name = if even { "alt" } else { "sym" };
    if n == 0 || n > 9 {
        return Err(Error::InvalidSpec(format!("{name}:{n}")));
    }
    let n = n as usize;
    let perms = all_perms(n, even);
    let mut gens = Vec::new();
    // a long cycle and a short cycle generate
    let gen_cycles: Vec<Vec<usize>> = match (even, n) {
        (_, 1) => vec![],
        (false, _) => vec![(0..n).collect(), vec![0, 1]],
        (true, 2) => vec![],
        (true, _) => {
            let long: Vec<usize> = if n % 2 == 1 { (0..n).collect() } else { (1..n).collect() };
            vec![long, vec![0, 1, 2]]
        }
    };
    for c in gen_cycles {
        let p = Perm::from_cycles(n, &[c]).unwrap();
        gens.push(perms.iter().position(|q| *q == p).unwrap() as u32);
    }
    Group::from_perms(format!("{name}:{n}"), &perms, gens)
}

pub fn symmetric(n: u64) -> Result<Group> {
    symmetric_like(n, false)
}

pub fn alternating(n: u64) -> Result<Group> {
    symmetric_like(n, true)
}

/// Enumerates the group generated by the given permutations; the identity
/// gets index 0 and the rest follow in breadth-first order.
pub fn from_permutations(label: impl Into<String>, gens: &[Perm]) -> Result<Group> {
    let degree = gens.iter().map(Perm::degree).max().unwrap_or(1).max(1);
    let gens: Vec<Perm> = gens
        .iter()
        .map(|g| {
            let mut img = g.images().to_vec();
            img.extend(g.degree() as u16..degree as u16);
            Perm::from_images(img)
        })
        .collect::<Result<_>>()?;
    let mut index: HashMap<Perm, u32> = HashMap::new();
    let mut elems = vec![Perm::identity(degree)];
    index.insert(elems[0].clone(), 0);
    let mut i = 0;
    while i < elems.len() {
        for g in &gens {
            let y = elems[i].then(g);
            if !index.contains_key(&y) {
                if elems.len() >= MAX_ORDER {
                    return Err(Error::SizeGuard {
                        what: "generated group order",
                        limit: MAX_ORDER,
                        got: MAX_ORDER + 1,
                    });
                }
                index.insert(y.clone(), elems.len() as u32);
                elems.push(y);
            }
        }
        i += 1;
    }
    let gen_idx = gens.iter().map(|g| index[g]).collect();
    Group::from_perms(label, &elems, gen_idx)
}

fn check_order(g: Group, expected: u64) -> Result<Group> {
    if g.order() as u64 != expected {
        return Err(Error::Unsupported(format!(
            "{} enumerated to order {} instead of {}",
            g.label(),
            g.order(),
            expected
        )));
    }
    Ok(g)
}

/// PSL(2,q) acting on the projective line, points `0..q` for the field
/// elements and `q` for infinity, generated by `x ↦ x+1`, `x ↦ λ²x` and
/// `x ↦ −1/x` with λ a primitive element.
pub fn psl2(q: u64) -> Result<Group> {
    let f = FiniteField::new(q)?;
    let expected = q * (q * q - 1) / arith::gcd_u64(2, q - 1);
    guard(expected)?;
    let qq = q as u32;
    let inf = qq as usize;
    let lam2 = f.mul(f.generator(), f.generator());
    let mk = |m: &dyn Fn(u32) -> u32| {
        let mut img: Vec<u16> = (0..qq).map(|x| m(x) as u16).collect();
        img.push(inf as u16);
        img
    };
    let translate = mk(&|x| f.add(x, 1));
    let scale = mk(&|x| f.mul(lam2, x));
    let mut invert: Vec<u16> = (0..qq)
        .map(|x| if x == 0 { inf as u16 } else { f.neg(f.inv(x)) as u16 })
        .collect();
    invert.push(0);
    let gens = [translate, scale, invert]
        .into_iter()
        .map(Perm::from_images)
        .collect::<Result<Vec<_>>>()?;
    check_order(from_permutations(format!("psl2:{q}"), &gens)?, expected)
}

/// Index of a nonzero vector with coordinates in GF(q) (first coordinate least significant).
fn vec_index(v: &[u32], q: u32) -> usize {
    v.iter().rev().fold(0usize, |acc, &c| acc * q as usize + c as usize) - 1
}

/// SL(d,q) acting on the nonzero vectors of GF(q)^d, generated by the
/// elementary transvections `I + c·E_ij` with `c` running over an additive
/// basis of the field.
pub fn special_linear(d: usize, q: u64) -> Result<Group> {
    let f = FiniteField::new(q)?;
    let qq = q as u32;
    let mut expected = 1u64;
    for i in 2..=d as u32 {
        expected = expected
            .checked_mul(q.pow(i) - 1)
            .and_then(|e| e.checked_mul(q.pow(i - 1)))
            .ok_or(Error::Overflow("|SL(d,q)|"))?;
    }
    guard(expected)?;
    let points = (qq as usize).pow(d as u32) - 1;
    // powers of x form an additive basis; x^i is encoded as p^i
    let basis: Vec<u32> = (0..f.degree()).map(|i| f.characteristic().pow(i)).collect();
    let mut gens = Vec::new();
    for i in 0..d {
        for j in 0..d {
            if i == j {
                continue;
            }
            for &c in &basis {
                let img: Vec<u16> = (1..=points)
                    .map(|v| {
                        let mut coords: Vec<u32> = (0..d)
                            .map(|t| (v / (qq as usize).pow(t as u32) % qq as usize) as u32)
                            .collect();
                        coords[i] = f.add(coords[i], f.mul(c, coords[j]));
                        vec_index(&coords, qq) as u16
                    })
                    .collect();
                gens.push(Perm::from_images(img)?);
            }
        }
    }
    let label = if d == 2 { format!("sl2:{q}") } else { format!("sl{d}:{q}") };
    check_order(from_permutations(label, &gens)?, expected)
}

pub fn sl2(q: u64) -> Result<Group> {
    special_linear(2, q)
}

/// PSL(3,q) as the image of SL(3,q) acting on the projective plane.
pub fn psl3(q: u64) -> Result<Group> {
    let f = FiniteField::new(q)?;
    let qq = q as u32;
    let d = 3usize;
    let sl_order = q.pow(3) * (q * q - 1) * (q.pow(3) - 1);
    let expected = sl_order / arith::gcd_u64(3, q - 1);
    guard(expected)?;
    // normalized projective points: last nonzero coordinate is 1
    let mut pts: Vec<Vec<u32>> = Vec::new();
    for v in 1..(qq as usize).pow(3) {
        let c: Vec<u32> = (0..d).map(|t| (v / (qq as usize).pow(t as u32) % qq as usize) as u32).collect();
        if *c.iter().rev().find(|&&x| x != 0).unwrap() == 1 {
            pts.push(c);
        }
    }
    let index: HashMap<Vec<u32>, u16> = pts.iter().enumerate().map(|(i, p)| (p.clone(), i as u16)).collect();
    let normalize = |mut c: Vec<u32>| {
        let lead = *c.iter().rev().find(|&&x| x != 0).unwrap();
        let li = f.inv(lead);
        c.iter_mut().for_each(|x| *x = f.mul(*x, li));
        index[&c]
    };
    let basis: Vec<u32> = (0..f.degree()).map(|i| f.characteristic().pow(i)).collect();
    let mut gens = Vec::new();
    for i in 0..d {
        for j in 0..d {
            if i == j {
                continue;
            }
            for &c in &basis {
                let img: Vec<u16> = pts
                    .iter()
                    .map(|p| {
                        let mut x = p.clone();
                        x[i] = f.add(x[i], f.mul(c, x[j]));
                        normalize(x)
                    })
                    .collect();
                gens.push(Perm::from_images(img)?);
            }
        }
    }
    check_order(from_permutations(format!("psl3:{q}"), &gens)?, expected)
}

/// The Mathieu group M11 on 11 points.
pub fn mathieu11() -> Result<Group> {
    let cyc = |s: &str| Perm::from_cycles(11, &Perm::parse_cycles(s)?);
    let gens = [cyc("(1,2,3,4,5,6,7,8,9,10,11)")?, cyc("(3,7,11,8)(4,10,5,6)")?];
    check_order(from_permutations("m11", &gens)?, 7920)
}

/// A group from a validated Cayley table `rows[g][h] = g·h`. Indices are
/// relabeled by swapping the identity with index 0 when needed.
pub fn from_cayley_table(rows: &[Vec<u32>]) -> Result<Group> {
    let n = rows.len();
    if n == 0 {
        return Err(Error::NotAGroup("empty table".into()));
    }
    guard(n as u64)?;
    let mut seen = vec![0u32; n];
    for (g, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NotAGroup(format!("row {g} has {} entries", row.len())));
        }
        for &x in row {
            if x as usize >= n {
                return Err(Error::NotAGroup(format!("entry {x} out of range")));
            }
            if seen[x as usize] == g as u32 + 1 {
                return Err(Error::NotAGroup(format!("row {g} repeats {x}")));
            }
            seen[x as usize] = g as u32 + 1;
        }
    }
    for h in 0..n {
        let mut col = vec![false; n];
        for row in rows {
            let x = row[h] as usize;
            if col[x] {
                return Err(Error::NotAGroup(format!("column {h} repeats {x}")));
            }
            col[x] = true;
        }
    }
    let e = (0..n)
        .find(|&e| (0..n).all(|g| rows[e][g] as usize == g && rows[g][e] as usize == g))
        .ok_or_else(|| Error::NotAGroup("no identity".into()))?;
    let swap = |x: usize| {
        if x == e {
            0
        } else if x == 0 {
            e
        } else {
            x
        }
    };
    let mut table = vec![0u32; n * n];
    for a in 0..n {
        for b in 0..n {
            table[a * n + b] = swap(rows[swap(a)][swap(b)] as usize) as u32;
        }
    }
    let g = Group::from_table(format!("cayley:{n}"), n, table)?;
    if let Some((a, b, c)) = g.check_associative(100_000, 0x5eed) {
        return Err(Error::NotAGroup(format!("({a}·{b})·{c} ≠ {a}·({b}·{c})")));
    }
    Ok(g)
}
