//! The group descriptor mini-language, e.g. `psl2:7`, `prod(cyclic:2,sym:3)`.

use super::{construct as c, io, Group, Subgroup};
use crate::error::{Error, Result};

fn num(spec: &str, arg: &str) -> Result<u64> {
    arg.trim()
        .parse()
        .map_err(|_| Error::InvalidSpec(spec.to_string()))
}

/// Splits at the last comma that is not nested inside parentheses.
fn split_top_comma(s: &str) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    let mut at = None;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => at = Some(i),
            _ => {}
        }
    }
    at.map(|i| (&s[..i], &s[i + 1..]))
}

pub fn parse_group(spec: &str) -> Result<Group> {
    let s = spec.trim();
    let bad = || Error::InvalidSpec(spec.to_string());
    if let Some(inner) = s.strip_prefix("prod(").and_then(|r| r.strip_suffix(')')) {
        let (a, b) = split_top_comma(inner).ok_or_else(bad)?;
        return c::direct_product(&parse_group(a)?, &parse_group(b)?);
    }
    match s {
        "q8" => return c::quaternion(),
        "v4" => return c::klein_four(),
        "m11" => return c::mathieu11(),
        "trivial" => return c::cyclic(1),
        _ => {}
    }
    let (kind, arg) = s.split_once(':').ok_or_else(bad)?;
    match kind {
        "cyclic" => c::cyclic(num(spec, arg)?),
        "dihedral" => c::dihedral(num(spec, arg)?),
        "genq" => c::generalized_quaternion(num(spec, arg)?),
        "sym" => c::symmetric(num(spec, arg)?),
        "alt" => c::alternating(num(spec, arg)?),
        "psl2" => c::psl2(num(spec, arg)?),
        "sl2" => c::sl2(num(spec, arg)?),
        "psl3" => c::psl3(num(spec, arg)?),
        "modp3" => c::modular_p3(num(spec, arg)?),
        "elab" => {
            let (p, k) = arg.split_once('^').ok_or_else(bad)?;
            let k = u32::try_from(num(spec, k)?).map_err(|_| bad())?;
            c::elementary_abelian(num(spec, p)?, k)
        }
        "file" => io::parse_cayley_table(&std::fs::read_to_string(arg)?),
        "perm" => io::parse_permutations(&std::fs::read_to_string(arg)?),
        _ => Err(bad()),
    }
}

/// Parses a central cover `<group>,<subgroup>` where the subgroup is
/// `center` or `trivial`; the subgroup is checked to be central.
pub fn parse_cover(spec: &str) -> Result<(Group, Subgroup)> {
    let (g, z) = split_top_comma(spec.trim()).ok_or_else(|| Error::InvalidSpec(spec.to_string()))?;
    let h = parse_group(g)?;
    let z = match z.trim() {
        "center" | "centre" => h.center(),
        "trivial" => h.trivial_subgroup(),
        _ => return Err(Error::InvalidSpec(spec.to_string())),
    };
    Ok((h, z))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descriptors() {
        assert_eq!(parse_group("prod(cyclic:2,prod(cyclic:3,q8))").unwrap().order(), 48);
        assert_eq!(parse_group("elab:2^3").unwrap().order(), 8);
        assert_eq!(parse_group("genq:12").unwrap().order(), 12);
        assert!(matches!(parse_group("cyclic:x"), Err(Error::InvalidSpec(_))));
        assert!(matches!(parse_group("nonsense"), Err(Error::InvalidSpec(_))));
        let (h, z) = parse_cover("dihedral:8,center").unwrap();
        assert_eq!((h.order(), z.len()), (8, 2));
    }
}
