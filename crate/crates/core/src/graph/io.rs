use super::Graph;
use crate::error::{Error, Result};
use std::fmt::Write;

/// `n m` on the first line, then one `u v` line per edge.
pub fn write_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(s, "{u} {v}").unwrap();
    }
    s
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let err = |line: usize, msg: &str| Error::Parse {
        line: line + 1,
        msg: msg.to_string(),
    };
    let (l0, head) = lines.next().ok_or_else(|| err(0, "missing header"))?;
    let nums = |l: usize, s: &str| -> Result<Vec<usize>> {
        s.split_whitespace()
            .map(|t| t.parse().map_err(|_| err(l, "bad integer")))
            .collect()
    };
    let h = nums(l0, head)?;
    let [n, m] = h[..] else {
        return Err(err(l0, "header must be `n m`"));
    };
    let mut g = Graph::new(n);
    let mut count = 0;
    for (l, line) in lines {
        let e = nums(l, line)?;
        match e[..] {
            [u, v] if u < n && v < n && u != v => g.add_edge(u, v),
            _ => return Err(err(l, "edge must be two distinct vertices below n")),
        }
        count += 1;
    }
    if count != m {
        return Err(err(l0, "edge count does not match header"));
    }
    Ok(g)
}

/// Undirected DOT; vertices are labeled when `labels` is given.
pub fn write_dot(g: &Graph, labels: Option<&dyn Fn(usize) -> String>) -> String {
    let mut s = String::from("graph {\n");
    if let Some(f) = labels {
        for v in 0..g.order() {
            writeln!(s, "  {v} [label=\"{}\"];", f(v)).unwrap();
        }
    }
    for (u, v) in g.edges() {
        writeln!(s, "  {u} -- {v};").unwrap();
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        let g = Graph::cycle(5);
        let text = write_edge_list(&g);
        assert!(text.starts_with("5 5\n0 1\n"));
        assert_eq!(parse_edge_list(&text).unwrap(), g);
        assert!(parse_edge_list("3 1\n0 3\n").is_err());
        assert!(write_dot(&Graph::path(2), None).contains("0 -- 1;"));
    }
}
