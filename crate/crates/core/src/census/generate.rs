//! Simple-graph census by vertex augmentation with canonical deduplication.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::canon::{canonical, CanonicalCode};
use crate::error::{Error, Result};
use crate::graph::Multigraph;

pub const MAX_GENERATED_N: usize = 9;

/// One canonical representative of every simple graph on `n` vertices
/// (connected or not), sorted by canonical code.
pub fn enumerate_simple(n: usize) -> Result<Vec<Multigraph>> {
    if n > MAX_GENERATED_N {
        return Err(Error::TooLarge { n, max: MAX_GENERATED_N });
    }
    let mut level: Vec<CanonicalCode> = vec![canonical(&Multigraph::empty(0)?)];
    for k in 1..=n {
        let children: Vec<CanonicalCode> = level
            .par_iter()
            .flat_map_iter(|code| {
                let parent = code.to_graph();
                let base = parent.add_vertex().expect("k ≤ 9");
                let new = k - 1;
                (0u32..1 << (k - 1)).map(move |mask| {
                    let mut g = base.clone();
                    for u in 0..new {
                        if mask & (1 << u) != 0 {
                            g.set(u, new, 1);
                        }
                    }
                    canonical(&g)
                })
            })
            .collect();
        let mut seen: HashSet<CanonicalCode> = HashSet::with_capacity(children.len() / 4);
        let mut next = Vec::new();
        for c in children {
            if seen.insert(c.clone()) {
                next.push(c);
            }
        }
        next.sort();
        level = next;
    }
    Ok(level.into_iter().map(|c| c.to_graph()).collect())
}

/// Connected simple graphs on `n` vertices, one per isomorphism class.
pub fn enumerate_simple_connected(n: usize) -> Result<Vec<Multigraph>> {
    Ok(enumerate_simple(n)?.into_iter().filter(Multigraph::is_connected).collect())
}

/// Reads simple graphs from graph6 lines (blank lines and `#`/`>` comments skipped).
pub fn read_graph6_list(text: &str) -> Result<Vec<Multigraph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        })
        .map(|(i, l)| {
            crate::format::parse_graph6(l).map_err(|e| match e {
                Error::Parse { msg, .. } => Error::Parse { line: i + 1, msg },
                other => other,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        // all graphs: 1, 2, 4, 11, 34, 156
        let all: Vec<usize> = (1..=6).map(|n| enumerate_simple(n).unwrap().len()).collect();
        assert_eq!(all, vec![1, 2, 4, 11, 34, 156]);
        let conn: Vec<usize> = (1..=6).map(|n| enumerate_simple_connected(n).unwrap().len()).collect();
        assert_eq!(conn, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn guard() {
        assert!(enumerate_simple(10).is_err());
    }

    #[test]
    fn graph6_list_reading() {
        let gs = read_graph6_list("# header\nC~\n\nBw\n").unwrap();
        assert_eq!(gs.len(), 2);
        assert!(read_graph6_list("C~\n!!\n").is_err());
    }
}
