//! Canonical labeling for graphs on at most eight vertices.
//!
//! The canonical form is the lexicographically smallest upper-triangle bit
//! string (graph6 column order) over all vertex relabelings. The search walks
//! permutations one position at a time and cuts any branch whose fixed prefix
//! already exceeds the best string found, so the result is exactly the
//! brute-force minimum without scanning all `n!` orders on most graphs.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

/// Largest order covered by the canonical-form guarantee.
pub const CANON_MAX_ORDER: usize = 8;

/// Largest order whose upper triangle fits in one `u64`.
pub const PACKED_MAX_ORDER: usize = 11;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("canonical forms are only computed for n <= {CANON_MAX_ORDER}, got {0}")]
pub struct CanonError(pub usize);

/// Upper-triangle bit string of the minimal relabeling.
///
/// Bits are packed most-significant first, so comparing `bits` numerically is
/// the same as comparing the strings lexicographically.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalForm {
    n: u8,
    bits: u64,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n as usize
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// The bit string, one `0`/`1` byte per pair.
    pub fn bytes(&self) -> Vec<u8> {
        let len = pair_count(self.order());
        (0..len).rev().map(|k| (self.bits >> k & 1) as u8).collect()
    }

    /// The canonically labeled representative of the class.
    pub fn to_graph(&self) -> Graph {
        graph_from_packed(self.order(), self.bits)
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.bytes().iter().map(|&b| if b == 1 { '1' } else { '0' }).collect();
        write!(f, "CanonicalForm(n={}, {s})", self.n)
    }
}

pub(crate) fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Packs the upper triangle of `g` in graph6 order, first pair most significant.
///
/// # Panics
/// If `g` has more than [`PACKED_MAX_ORDER`] vertices.
pub fn packed_bits(g: &Graph) -> u64 {
    let n = g.order();
    assert!(n <= PACKED_MAX_ORDER, "packed form needs n <= {PACKED_MAX_ORDER}");
    let mut bits = 0u64;
    for j in 1..n {
        for i in 0..j {
            bits = bits << 1 | g.has_edge(i, j) as u64;
        }
    }
    bits
}

/// Inverse of [`packed_bits`].
pub fn graph_from_packed(n: usize, bits: u64) -> Graph {
    assert!(
        (1..=PACKED_MAX_ORDER).contains(&n),
        "packed form needs 1 <= n <= {PACKED_MAX_ORDER}"
    );
    let mut adj = vec![0u64; n];
    let mut k = pair_count(n);
    for j in 1..n {
        for i in 0..j {
            k -= 1;
            if bits >> k & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    Graph::from_adjacency_unchecked(adj)
}

/// Exact canonical form; rejects graphs above [`CANON_MAX_ORDER`].
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, CanonError> {
    let n = g.order();
    if n > CANON_MAX_ORDER {
        return Err(CanonError(n));
    }
    let mut search = Search::new(g);
    search.minimize(0);
    let bits = search
        .best
        .iter()
        .enumerate()
        .take(n)
        .skip(1)
        .fold(0u64, |acc, (j, &col)| acc << j | col);
    Ok(CanonicalForm { n: n as u8, bits })
}

/// True when `g`'s own labeling is already canonical. Exits on the first
/// relabeling that beats it, which is fast for the typical non-canonical graph.
pub fn is_canonical(g: &Graph) -> Result<bool, CanonError> {
    let n = g.order();
    if n > CANON_MAX_ORDER {
        return Err(CanonError(n));
    }
    let mut search = Search::new(g);
    for j in 1..n {
        let row = g.neighbors(j);
        search.best[j] = (0..j).fold(0, |acc, i| acc << 1 | (row >> i & 1));
    }
    search.have_best = true;
    Ok(!search.find_smaller(0))
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    perm: [usize; CANON_MAX_ORDER],
    used: u64,
    cur: [u64; CANON_MAX_ORDER],
    best: [u64; CANON_MAX_ORDER],
    have_best: bool,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph) -> Self {
        Search {
            g,
            n: g.order(),
            perm: [0; CANON_MAX_ORDER],
            used: 0,
            cur: [0; CANON_MAX_ORDER],
            best: [0; CANON_MAX_ORDER],
            have_best: false,
        }
    }

    /// Column `j` of the relabeled matrix: bits `x(0,j) .. x(j-1,j)`.
    #[inline]
    fn column(&self, j: usize) -> u64 {
        let row = self.g.neighbors(self.perm[j]);
        (0..j).fold(0, |acc, i| acc << 1 | (row >> self.perm[i] & 1))
    }

    #[inline]
    fn compare_prefix(&self, upto: usize) -> std::cmp::Ordering {
        self.cur[1..=upto].cmp(&self.best[1..=upto])
    }

    fn minimize(&mut self, level: usize) {
        if level == self.n {
            if !self.have_best || self.compare_prefix(self.n - 1).is_lt() {
                self.best = self.cur;
                self.have_best = true;
            }
            return;
        }
        for v in 0..self.n {
            if self.used >> v & 1 == 1 {
                continue;
            }
            self.perm[level] = v;
            self.cur[level] = self.column(level);
            if self.have_best && level > 0 && self.compare_prefix(level).is_gt() {
                continue;
            }
            self.used |= 1 << v;
            self.minimize(level + 1);
            self.used &= !(1 << v);
        }
    }

    fn find_smaller(&mut self, level: usize) -> bool {
        if level == self.n {
            return false;
        }
        for v in 0..self.n {
            if self.used >> v & 1 == 1 {
                continue;
            }
            self.perm[level] = v;
            self.cur[level] = self.column(level);
            if level > 0 {
                match self.compare_prefix(level) {
                    std::cmp::Ordering::Less => return true,
                    std::cmp::Ordering::Greater => continue,
                    std::cmp::Ordering::Equal => {}
                }
            }
            self.used |= 1 << v;
            let found = self.find_smaller(level + 1);
            self.used &= !(1 << v);
            if found {
                return true;
            }
        }
        false
    }
}
