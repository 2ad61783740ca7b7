//! Graph constructors: the full sign-vector graph in dimension `n`, its
//! all-positive restriction, signplace-constrained subgraphs, and DIMACS
//! interchange.

use std::fmt;

use crate::error::{Error, Result};
use crate::model::{Graph, GraphOrigin, Vertex, MAX_DIM};

/// Canonical multiset of signplaces: `doubles` places carrying both signs,
/// then `singles` places carrying only `+`.
///
/// Negating a single coordinate and permuting coordinates preserve all
/// pairwise scalar products, so any set of `m` signplaces on `l` places is
/// equivalent to exactly one such canonical form with `m = 2d + s` and
/// `l = d + s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignplaceConfig {
    pub doubles: usize,
    pub singles: usize,
}

impl SignplaceConfig {
    pub fn new(doubles: usize, singles: usize) -> Self {
        SignplaceConfig { doubles, singles }
    }

    /// Signplace count `m = 2d + s`.
    pub fn signplaces(&self) -> usize {
        2 * self.doubles + self.singles
    }

    /// Place count `l = d + s`.
    pub fn places(&self) -> usize {
        self.doubles + self.singles
    }
}

impl fmt::Display for SignplaceConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(d={}, s={})", self.doubles, self.singles)
    }
}

/// All vertices of dimension `n` in canonical order: bases ascending, then
/// the eight sign patterns. `keep` filters patterns per base place.
fn generate_vertices<F: Fn(usize, bool) -> bool>(n: usize, keep: F) -> Vec<Vertex> {
    let mut out = Vec::new();
    if n < 3 {
        return out;
    }
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                'pattern: for pat in 0..8u8 {
                    let places = [a, b, c];
                    let mut pos = 0u64;
                    let mut neg = 0u64;
                    for (k, &p) in places.iter().enumerate() {
                        let minus = pat >> k & 1 == 1;
                        if !keep(p, minus) {
                            continue 'pattern;
                        }
                        if minus {
                            neg |= 1 << p;
                        } else {
                            pos |= 1 << p;
                        }
                    }
                    out.push(Vertex::new(n, pos, neg).expect("generated vertex is valid"));
                }
            }
        }
    }
    out
}

/// The graph on all vectors of dimension `n` with coordinates in `{-1,0,1}`
/// and three non-zero entries; edges join pairs with scalar product 1.
///
/// Has exactly `8 * C(n,3)` vertices; empty for `n < 3`.
pub fn build_gn(n: usize) -> Result<Graph> {
    if n > MAX_DIM {
        return Err(Error::DimensionTooLarge(n));
    }
    Graph::from_vertices(generate_vertices(n, |_, _| true), GraphOrigin::Gn { n })
}

/// The restriction to 0/1 vectors of weight 3: `C(n,3)` vertices, edges join
/// supports meeting in exactly one place.
pub fn build_nagy(n: usize) -> Result<Graph> {
    if n > MAX_DIM {
        return Err(Error::DimensionTooLarge(n));
    }
    Graph::from_vertices(generate_vertices(n, |_, minus| !minus), GraphOrigin::Nagy { n })
}

/// The subgraph induced by all vertices whose three signplaces lie inside the
/// canonical configuration. Ambient dimension is the place count.
pub fn build_config(cfg: SignplaceConfig) -> Result<Graph> {
    let l = cfg.places();
    if l > MAX_DIM {
        return Err(Error::DimensionTooLarge(l));
    }
    let d = cfg.doubles;
    Graph::from_vertices(
        generate_vertices(l, |place, minus| !minus || place < d),
        GraphOrigin::Config { doubles: cfg.doubles, singles: cfg.singles },
    )
}

/// Complement on the same vertex set.
pub fn complement(g: &Graph) -> Graph {
    g.complement()
}

/// Parses a DIMACS undirected graph: a `p edge <order> <edges>` header,
/// `e <u> <v>` lines with 1-based endpoints, `c` comment lines. Duplicate
/// edges are tolerated.
pub fn from_dimacs(text: &str) -> Result<Graph> {
    let mut order: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let l = raw.trim();
        if l.is_empty() || l.starts_with('c') {
            continue;
        }
        let mut fields = l.split_whitespace();
        match fields.next() {
            Some("p") => {
                if order.is_some() {
                    return Err(Error::Dimacs { line, message: "duplicate problem line".into() });
                }
                let format = fields.next().unwrap_or("");
                if format != "edge" && format != "col" {
                    return Err(Error::Dimacs {
                        line,
                        message: format!("expected 'p edge', got 'p {format}'"),
                    });
                }
                let n: usize = fields
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| Error::Dimacs { line, message: "bad vertex count".into() })?;
                let _m: usize = fields
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| Error::Dimacs { line, message: "bad edge count".into() })?;
                order = Some(n);
            }
            Some("e") => {
                let n = order.ok_or_else(|| Error::Dimacs {
                    line,
                    message: "edge before problem line".into(),
                })?;
                let u: usize = fields
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| Error::Dimacs { line, message: "bad endpoint".into() })?;
                let v: usize = fields
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| Error::Dimacs { line, message: "bad endpoint".into() })?;
                if u < 1 || u > n || v < 1 || v > n {
                    return Err(Error::Dimacs {
                        line,
                        message: format!("endpoint out of range 1..={n}"),
                    });
                }
                if u == v {
                    return Err(Error::Dimacs { line, message: "self-loop".into() });
                }
                edges.push((u - 1, v - 1));
            }
            Some(other) => {
                return Err(Error::Dimacs {
                    line,
                    message: format!("unrecognized line kind '{other}'"),
                });
            }
            None => unreachable!(),
        }
    }
    let order = order.ok_or_else(|| Error::Dimacs { line: 0, message: "missing problem line".into() })?;
    Graph::from_edges(order, &edges)
}

/// Writes the adjacency relation in DIMACS format with 1-based indices.
pub fn to_dimacs(g: &Graph) -> String {
    let mut out = String::new();
    out.push_str(&format!("p edge {} {}\n", g.order(), g.edge_count()));
    for i in 0..g.order() {
        for j in g.neighbors(i) {
            if j > i {
                out.push_str(&format!("e {} {}\n", i + 1, j + 1));
            }
        }
    }
    out
}
