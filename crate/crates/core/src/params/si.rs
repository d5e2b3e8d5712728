//! Exact simultaneous interval number and path-independence number by
//! searching over interval supergraphs.

use rayon::prelude::*;

use super::layouts::{check_layout_cap, interval_supergraphs, Supergraph};
use crate::construct::checked;
use crate::cover::constrained_cover;
use crate::error::Result;
use crate::graph::Graph;
use crate::labels::LabelSet;
use crate::oracle::{full, mis_size};
use crate::simrep::SimRep;

/// Pairs that may share a label when the intervals come from `f`: edges of
/// `g` and pairs whose intervals are disjoint.
fn compatibility(g: &Graph, f: &Supergraph) -> Vec<u128> {
    let all = full(g.n());
    (0..g.n()).map(|v| g.mask(v) | (!f.adj[v] & all & !(1 << v))).collect()
}

fn build(g: &Graph, f: &Supergraph, cover: &[Vec<usize>], d: usize) -> Result<SimRep> {
    let mut labels = vec![LabelSet::EMPTY; g.n()];
    for (t, c) in cover.iter().enumerate() {
        for &v in c {
            labels[v].insert(t + 1);
        }
    }
    let rep = SimRep::new(d, f.intervals(), labels)?;
    checked(g, rep, "simultaneous interval search")
}

/// Whether `g` has a representation with `d` labels, with one on success.
/// Supergraphs are tried concurrently; the first one in enumeration order
/// that works supplies the witness.
pub fn si_decide(g: &Graph, d: usize) -> Result<Option<SimRep>> {
    check_layout_cap("si_decide vertex count", g.n())?;
    let fs = interval_supergraphs(g)?;
    let edges = g.edges();
    let hit = fs.par_iter().find_map_first(|f| constrained_cover(&edges, &compatibility(g, f), d).map(|c| (f, c)));
    hit.map(|(f, c)| build(g, f, &c, d)).transpose()
}

/// The simultaneous interval number of `g` with a witness using exactly that
/// many labels.
pub fn si_exact(g: &Graph) -> Result<(usize, SimRep)> {
    check_layout_cap("si_exact vertex count", g.n())?;
    let fs = interval_supergraphs(g)?;
    let edges = g.edges();
    let mut best: Option<(usize, &Supergraph, Vec<Vec<usize>>)> = None;
    for f in &fs {
        let limit = match &best {
            Some((0, _, _)) => break,
            Some((b, _, _)) => b - 1,
            None => edges.len(),
        };
        if let Some(c) = constrained_cover(&edges, &compatibility(g, f), limit) {
            best = Some((c.len(), f, c));
        }
    }
    let (d, f, c) = best.expect("single edges always give a cover");
    Ok((d, build(g, f, &c, d)?))
}

/// Minimum over interval supergraphs `F` of `g` of the largest independence
/// number of `g` inside a maximal clique of `F`.
pub fn path_alpha_exact(g: &Graph) -> Result<usize> {
    check_layout_cap("path_alpha_exact vertex count", g.n())?;
    let fs = interval_supergraphs(g)?;
    let adj = g.masks();
    Ok(fs.par_iter().map(|f| f.bags().into_iter().map(|b| mis_size(&adj, b)).max().unwrap_or(0)).min().unwrap_or(0))
}
