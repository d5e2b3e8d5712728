//! Path decompositions and their one-bag-per-line sidecar format.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::{full, mis_size};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathDecomposition {
    pub bags: Vec<Vec<usize>>,
}

impl PathDecomposition {
    /// Sorts and deduplicates every bag.
    pub fn new(bags: Vec<Vec<usize>>) -> Self {
        let bags = bags
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b.dedup();
                b
            })
            .collect();
        PathDecomposition { bags }
    }

    pub fn max_bag(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Largest bag size minus one; 0 for a decomposition without vertices.
    pub fn width(&self) -> usize {
        self.max_bag().saturating_sub(1)
    }

    /// Checks the three axioms: every vertex in a bag, every edge in a bag,
    /// and the bags holding a vertex are consecutive.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let n = g.n();
        let mut first = vec![usize::MAX; n];
        let mut last = vec![0usize; n];
        let mut count = vec![0usize; n];
        for (t, bag) in self.bags.iter().enumerate() {
            for &v in bag {
                if v >= n {
                    return Err(Error::InvalidDecomposition(format!("bag {t} names vertex {v}, graph has {n}")));
                }
                first[v] = first[v].min(t);
                last[v] = t;
                count[v] += 1;
            }
        }
        if let Some(v) = (0..n).find(|&v| count[v] == 0) {
            return Err(Error::InvalidDecomposition(format!("vertex {v} lies in no bag")));
        }
        if let Some(v) = (0..n).find(|&v| last[v] - first[v] + 1 != count[v]) {
            return Err(Error::InvalidDecomposition(format!("bags containing vertex {v} are not consecutive")));
        }
        for (u, v) in g.edges() {
            if first[u].max(first[v]) > last[u].min(last[v]) {
                return Err(Error::InvalidDecomposition(format!("edge {u} {v} lies in no bag")));
            }
        }
        Ok(())
    }

    /// Largest independence number of `g` restricted to a bag.
    pub fn independence_number(&self, g: &Graph) -> Result<usize> {
        if g.n() > 128 {
            return Err(Error::CapExceeded { what: "bag independence number", size: g.n(), cap: 128 });
        }
        let adj = g.masks();
        Ok(self
            .bags
            .iter()
            .map(|b| mis_size(&adj, b.iter().fold(0, |m, &v| m | 1 << v) & full(g.n())))
            .max()
            .unwrap_or(0))
    }
}

/// One bag per line, vertices separated by whitespace. A line holding only
/// `-` is an empty bag; blank lines and `#` comments are skipped.
pub fn parse_decomposition(text: &str) -> Result<PathDecomposition> {
    let mut bags = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if line == "-" {
            bags.push(Vec::new());
            continue;
        }
        let bag = line
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| Error::parse(i + 1, format!("not a vertex id: {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        bags.push(bag);
    }
    Ok(PathDecomposition::new(bags))
}

pub fn write_decomposition(pd: &PathDecomposition) -> String {
    let mut out = String::new();
    for bag in &pd.bags {
        if bag.is_empty() {
            out.push_str("-\n");
        } else {
            let items: Vec<String> = bag.iter().map(|v| v.to_string()).collect();
            writeln!(out, "{}", items.join(" ")).unwrap();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_named_graph, Family};

    #[test]
    fn axioms() {
        let p4 = make_named_graph(Family::Path, &[4]).unwrap();
        let pd = PathDecomposition::new(vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
        pd.validate(&p4).unwrap();
        assert_eq!(pd.width(), 1);
        assert_eq!(pd.independence_number(&p4).unwrap(), 1);

        let gap = PathDecomposition::new(vec![vec![0, 1], vec![2, 3], vec![1, 2]]);
        assert!(gap.validate(&p4).unwrap_err().to_string().contains("consecutive"));
        let missing_edge = PathDecomposition::new(vec![vec![0, 1], vec![2, 3]]);
        assert!(missing_edge.validate(&p4).unwrap_err().to_string().contains("edge 1 2"));
        let missing_vertex = PathDecomposition::new(vec![vec![0, 1], vec![1, 2]]);
        assert!(missing_vertex.validate(&p4).unwrap_err().to_string().contains("vertex 3"));
    }

    #[test]
    fn sidecar_round_trip() {
        let pd = PathDecomposition::new(vec![vec![1, 0], vec![], vec![2]]);
        let text = write_decomposition(&pd);
        assert_eq!(text, "0 1\n-\n2\n");
        assert_eq!(parse_decomposition(&text).unwrap(), pd);
        assert!(parse_decomposition("0 x").is_err());
    }
}
