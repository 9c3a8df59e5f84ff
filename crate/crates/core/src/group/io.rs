use super::{construct, Group};
use crate::error::{Error, Result};
use crate::perm::Perm;

/// Reads `n` on the first line followed by `n` rows of `n` indices.
pub fn parse_cayley_table(text: &str) -> Result<Group> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (l0, first) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing order line".into(),
    })?;
    let n: usize = first.trim().parse().map_err(|_| Error::Parse {
        line: l0 + 1,
        msg: format!("bad order `{}`", first.trim()),
    })?;
    let rows = lines
        .map(|(i, l)| {
            l.split_whitespace()
                .map(|t| {
                    t.parse::<u32>().map_err(|_| Error::Parse {
                        line: i + 1,
                        msg: format!("bad index `{t}`"),
                    })
                })
                .collect::<Result<Vec<u32>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    if rows.len() != n {
        return Err(Error::Parse {
            line: rows.len() + 1,
            msg: format!("expected {n} rows, found {}", rows.len()),
        });
    }
    construct::from_cayley_table(&rows)
}

/// One generator per line in 1-based cycle notation; the degree is the
/// largest point mentioned.
pub fn parse_permutations(text: &str) -> Result<Group> {
    let mut cycles = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let c = Perm::parse_cycles(line).map_err(|e| match e {
            Error::Parse { msg, .. } => Error::Parse { line: i + 1, msg },
            e => e,
        })?;
        cycles.push(c);
    }
    let degree = cycles
        .iter()
        .flatten()
        .flatten()
        .map(|&x| x + 1)
        .max()
        .unwrap_or(1);
    let gens = cycles
        .iter()
        .map(|c| Perm::from_cycles(degree, c))
        .collect::<Result<Vec<_>>>()?;
    construct::from_permutations(format!("perm:{degree}"), &gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cayley_file() {
        let g = parse_cayley_table("2\n0 1\n1 0\n").unwrap();
        assert_eq!(g.order(), 2);
        assert!(matches!(parse_cayley_table("2\n0 1\n"), Err(Error::Parse { .. })));
    }

    #[test]
    fn perm_file() {
        let g = parse_permutations("(1,2)\n(1,2,3,4)\n").unwrap();
        assert_eq!(g.order(), 24);
        assert!(matches!(parse_permutations("(1,2\n"), Err(Error::Parse { line: 1, .. })));
    }
}
