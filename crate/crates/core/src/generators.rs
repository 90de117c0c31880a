//! Standard graph families, seeded random graphs and exhaustive labeled
//! enumeration.

use alloc::format;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by [`labeled_graphs`].
pub const EXHAUSTIVE_CAP: usize = 7;

fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Graph {
    let mut g = Graph::empty(n);
    for (u, v) in pairs {
        g.add_edge_unchecked(u, v);
    }
    g.finish();
    g
}

pub fn path(n: usize) -> Graph {
    from_pairs(n, (1..n).map(|v| (v - 1, v)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::BadArgument(format!("cycle needs at least 3 vertices, got {n}")));
    }
    Ok(from_pairs(n, (0..n).map(|v| (v, (v + 1) % n))))
}

pub fn complete(n: usize) -> Graph {
    from_pairs(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    from_pairs(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

/// `K_{1,k}` with center 0.
pub fn star(k: usize) -> Graph {
    from_pairs(k + 1, (1..=k).map(|v| (0, v)))
}

/// Triangle `{0, 1, 2}` with the pendant path `2 - 3 - 4`: it has an empty
/// 2-bicritical core but a core that differs from its nucleus.
pub fn figure1() -> Graph {
    from_pairs(5, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)])
}

fn rng_for(n: usize, p: f64, seed: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // one stream per (n, p) so corpora with different shapes never share draws
    let key = (n as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ p.to_bits();
    rng.set_stream(key);
    rng
}

fn check_p(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::BadArgument(format!("edge probability {p} outside [0, 1]")))
    }
}

fn draw(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random::<f64>() < p {
                g.add_edge_unchecked(u, v);
            }
        }
    }
    g.finish();
    g
}

/// Erdős–Rényi `G(n, p)`, deterministic in `(n, p, seed)`. Equal to the
/// first graph of `gnp_corpus(n, p, _, seed)`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    check_p(p)?;
    Ok(draw(n, p, &mut rng_for(n, p, seed)))
}

/// `count` successive `G(n, p)` draws from one seeded stream.
pub fn gnp_corpus(n: usize, p: f64, count: usize, seed: u64) -> Result<impl Iterator<Item = Graph>> {
    check_p(p)?;
    let mut rng = rng_for(n, p, seed);
    Ok((0..count).map(move |_| draw(n, p, &mut rng)))
}

/// Every labeled simple graph on `n` vertices, once each.
///
/// Graph `k` contains the `i`-th vertex pair exactly when bit `i` of `k` is
/// set, pairs being listed column by column (`01, 02, 12, 03, 13, 23, ..`).
pub fn labeled_graphs(n: usize) -> Result<LabeledGraphs> {
    if n > EXHAUSTIVE_CAP {
        return Err(Error::cap("exhaustive enumeration", n, EXHAUSTIVE_CAP));
    }
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    Ok(LabeledGraphs {
        n,
        end: 1u64 << pairs.len(),
        pairs,
        next: 0,
    })
}

#[derive(Clone, Debug)]
pub struct LabeledGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

impl LabeledGraphs {
    /// The graph with enumeration index `code`.
    pub fn graph(&self, code: u64) -> Graph {
        from_pairs(
            self.n,
            self.pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| code >> i & 1 == 1)
                .map(|(_, &p)| p),
        )
    }

    pub fn total(&self) -> u64 {
        self.end
    }
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next == self.end {
            return None;
        }
        let g = self.graph(self.next);
        self.next += 1;
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for LabeledGraphs {}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    #[test]
    fn families() {
        assert_eq!(cycle(5).unwrap().size(), 5);
        assert!(cycle(2).is_err());
        let s = star(3);
        assert_eq!((s.order(), s.degree(0)), (4, 3));
        assert_eq!(complete_bipartite(3, 3).size(), 9);
        assert_eq!(complete(4).size(), 6);
        assert_eq!(path(0).order(), 0);
        assert_eq!(figure1(), Graph::new(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)]).unwrap());
    }

    #[test]
    fn gnp_is_deterministic() {
        assert_eq!(gnp(8, 0.5, 42).unwrap(), gnp(8, 0.5, 42).unwrap());
        assert_eq!(gnp(8, 0.0, 1).unwrap().size(), 0);
        assert_eq!(gnp(8, 1.0, 1).unwrap().size(), 28);
        assert!(gnp(8, 1.5, 1).is_err());
        let first = gnp_corpus(8, 0.5, 3, 42).unwrap().next().unwrap();
        assert_eq!(first, gnp(8, 0.5, 42).unwrap());
    }

    #[test]
    fn labeled_counts_and_distinctness() {
        assert_eq!(labeled_graphs(2).unwrap().count(), 2);
        assert_eq!(labeled_graphs(3).unwrap().count(), 8);
        assert_eq!(labeled_graphs(4).unwrap().count(), 64);
        let all: BTreeSet<Vec<(usize, usize)>> =
            labeled_graphs(4).unwrap().map(|g| g.edges().collect()).collect();
        assert_eq!(all.len(), 64);
        assert!(labeled_graphs(8).unwrap_err().is_cap());
    }
}
