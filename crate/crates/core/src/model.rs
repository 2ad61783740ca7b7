//! Core vocabulary: sign vectors with three-place support, scalar products,
//! places/signplaces, and the immutable dense graph container.
//!
//! A vertex is a vector in `R^n` with coordinates in `{-1, 0, 1}` and exactly
//! three non-zero coordinates (squared norm 3). Two vertices are adjacent when
//! their scalar product equals 1. Vertices are stored as two disjoint support
//! masks so that a scalar product reduces to four popcounts.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use crate::bits;
use crate::error::{Error, Result};

/// Largest ambient dimension representable by the one-word support masks.
pub const MAX_DIM: usize = 64;

/// Coordinate sign carried by a signplace.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// A coordinate position together with a fixed sign, e.g. `3+` or `7-`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Signplace {
    pub place: usize,
    pub sign: Sign,
}

impl Signplace {
    pub fn plus(place: usize) -> Self {
        Signplace { place, sign: Sign::Plus }
    }

    pub fn minus(place: usize) -> Self {
        Signplace { place, sign: Sign::Minus }
    }
}

/// A vector with coordinates in `{-1, 0, 1}` and exactly three non-zero
/// coordinates, stored as disjoint positive/negative support masks.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Vertex {
    dim: u32,
    pos: u64,
    neg: u64,
}

impl Vertex {
    /// Builds a vertex from its support masks, validating the support size.
    pub fn new(dim: usize, pos: u64, neg: u64) -> Result<Self> {
        if dim > MAX_DIM {
            return Err(Error::DimensionTooLarge(dim));
        }
        if pos & neg != 0 {
            return Err(Error::OverlappingSupports);
        }
        let support = (pos | neg).count_ones() as usize;
        if support != 3 {
            return Err(Error::InvalidSupport(support));
        }
        let extent = 64 - (pos | neg).leading_zeros() as usize;
        if extent > dim {
            return Err(Error::PlaceOutOfRange { place: extent - 1, dim });
        }
        Ok(Vertex { dim: dim as u32, pos, neg })
    }

    /// Builds a vertex from `(place, sign)` pairs.
    pub fn from_signed_places(dim: usize, places: &[(usize, Sign)]) -> Result<Self> {
        let mut pos = 0u64;
        let mut neg = 0u64;
        for &(place, sign) in places {
            if place >= dim.min(MAX_DIM) {
                return Err(Error::PlaceOutOfRange { place, dim });
            }
            match sign {
                Sign::Plus => pos |= 1 << place,
                Sign::Minus => neg |= 1 << place,
            }
        }
        Vertex::new(dim, pos, neg)
    }

    /// Builds a vertex from a full coordinate array of `-1/0/1` entries.
    pub fn from_coords(coords: &[i8]) -> Result<Self> {
        if coords.len() > MAX_DIM {
            return Err(Error::DimensionTooLarge(coords.len()));
        }
        let mut pos = 0u64;
        let mut neg = 0u64;
        for (i, &c) in coords.iter().enumerate() {
            match c {
                0 => {}
                1 => pos |= 1 << i,
                -1 => neg |= 1 << i,
                _ => return Err(Error::InvalidSupport(usize::MAX)),
            }
        }
        Vertex::new(coords.len(), pos, neg)
    }

    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    /// Mask of coordinates equal to +1.
    pub fn pos_mask(&self) -> u64 {
        self.pos
    }

    /// Mask of coordinates equal to -1.
    pub fn neg_mask(&self) -> u64 {
        self.neg
    }

    /// The base: the set of non-zero coordinate positions.
    pub fn base_mask(&self) -> u64 {
        self.pos | self.neg
    }

    /// The three base places in ascending order.
    pub fn base(&self) -> [usize; 3] {
        let mut out = [0usize; 3];
        for (slot, place) in out.iter_mut().zip(bits::iter(&[self.base_mask()])) {
            *slot = place;
        }
        out
    }

    /// Coordinate value at `place`: -1, 0 or 1.
    pub fn coord(&self, place: usize) -> i32 {
        if place >= 64 {
            return 0;
        }
        let bit = 1u64 << place;
        if self.pos & bit != 0 {
            1
        } else if self.neg & bit != 0 {
            -1
        } else {
            0
        }
    }

    /// Whether the vertex intersects the given signplace.
    pub fn intersects(&self, sp: Signplace) -> bool {
        if sp.place >= 64 {
            return false;
        }
        let bit = 1u64 << sp.place;
        match sp.sign {
            Sign::Plus => self.pos & bit != 0,
            Sign::Minus => self.neg & bit != 0,
        }
    }

    /// Euclidean scalar product; an integer in `[-3, 3]`.
    pub fn dot(&self, other: &Vertex) -> Result<i32> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim(), other.dim()));
        }
        Ok(self.dot_raw(other))
    }

    /// Scalar product without the dimension check. Hot path for graph builds.
    #[inline(always)]
    pub(crate) fn dot_raw(&self, other: &Vertex) -> i32 {
        let agree = (self.pos & other.pos).count_ones() + (self.neg & other.neg).count_ones();
        let differ = (self.pos & other.neg).count_ones() + (self.neg & other.pos).count_ones();
        agree as i32 - differ as i32
    }

    /// Whether `self` and `other` are adjacent, i.e. their scalar product is 1.
    pub fn is_edge(&self, other: &Vertex) -> Result<bool> {
        Ok(self.dot(other)? == 1)
    }

    /// Applies a coordinate permutation followed by per-place sign flips.
    ///
    /// `perm[i]` is the new place of old place `i`; `flips` is a mask of new
    /// places whose sign is negated. Both operations preserve all pairwise
    /// scalar products, so they are automorphisms of every generated graph.
    pub fn permute_and_flip(&self, perm: &[usize], flips: u64) -> Result<Self> {
        if perm.len() != self.dim() {
            return Err(Error::DimensionMismatch(perm.len(), self.dim()));
        }
        let mut pos = 0u64;
        let mut neg = 0u64;
        for old in bits::iter(&[self.pos]) {
            let new = perm[old];
            if new >= self.dim() {
                return Err(Error::PlaceOutOfRange { place: new, dim: self.dim() });
            }
            if flips >> new & 1 == 0 {
                pos |= 1 << new;
            } else {
                neg |= 1 << new;
            }
        }
        for old in bits::iter(&[self.neg]) {
            let new = perm[old];
            if new >= self.dim() {
                return Err(Error::PlaceOutOfRange { place: new, dim: self.dim() });
            }
            if flips >> new & 1 == 0 {
                neg |= 1 << new;
            } else {
                pos |= 1 << new;
            }
        }
        Vertex::new(self.dim(), pos, neg)
    }

    /// Deterministic ordering key: base places ascending, then the sign
    /// pattern (bit k set when the k-th smallest base place is negative).
    pub fn sort_key(&self) -> ([u8; 3], u8) {
        let base = self.base();
        let mut pattern = 0u8;
        for (k, &place) in base.iter().enumerate() {
            if self.neg >> place & 1 == 1 {
                pattern |= 1 << k;
            }
        }
        ([base[0] as u8, base[1] as u8, base[2] as u8], pattern)
    }
}

impl fmt::Display for Vertex {
    /// Signed 1-based place list, e.g. `+1 -2 +4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for place in bits::iter(&[self.base_mask()]) {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            let sign = if self.pos >> place & 1 == 1 { '+' } else { '-' };
            write!(f, "{sign}{}", place + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Vertex({self}; dim {})", self.dim)
    }
}

/// Number of vertices of a set `W` intersecting the given signplace.
pub fn degree_of_signplace(set: &[Vertex], sp: Signplace) -> usize {
    set.iter().filter(|v| v.intersects(sp)).count()
}

/// Provenance tag of a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphOrigin {
    /// Full graph on all sign vectors of dimension `n`.
    Gn { n: usize },
    /// Restriction to all-positive vectors (0/1 coordinates) of dimension `n`.
    Nagy { n: usize },
    /// Canonical signplace configuration: `doubles` places carrying both
    /// signs followed by `singles` places carrying only `+`.
    Config { doubles: usize, singles: usize },
    /// Anything else: parsed files, complements, induced or derived graphs.
    Imported,
}

impl GraphOrigin {
    /// Stable descriptor used in cache keys and reports.
    pub fn descriptor(&self) -> String {
        match self {
            GraphOrigin::Gn { n } => format!("gn:n={n}"),
            GraphOrigin::Nagy { n } => format!("nagy:n={n}"),
            GraphOrigin::Config { doubles, singles } => {
                format!("config:d={doubles},s={singles}")
            }
            GraphOrigin::Imported => "imported".to_string(),
        }
    }
}

static NEXT_GRAPH_ID: AtomicU64 = AtomicU64::new(1);

/// Immutable dense graph: one bit-row per vertex, optional vertex labels.
///
/// When labels are present, `adjacent(i, j)` holds exactly when
/// `labels[i] . labels[j] = 1`; this is checked exhaustively in tests for
/// small dimensions and maintained by construction everywhere else.
#[derive(Clone)]
pub struct Graph {
    id: u64,
    order: usize,
    words: usize,
    adj: Box<[u64]>,
    labels: Option<Box<[Vertex]>>,
    origin: GraphOrigin,
}

impl Graph {
    /// Builds a labelled graph whose edges are the pairs with scalar product 1.
    ///
    /// Vertices are sorted into the canonical order (base ascending, then sign
    /// pattern) so indices are deterministic for a given vertex set.
    pub fn from_vertices(mut vertices: Vec<Vertex>, origin: GraphOrigin) -> Result<Graph> {
        if let Some(first) = vertices.first() {
            let dim = first.dim();
            for v in &vertices {
                if v.dim() != dim {
                    return Err(Error::DimensionMismatch(dim, v.dim()));
                }
            }
        }
        vertices.sort_by_key(Vertex::sort_key);
        vertices.dedup();
        let order = vertices.len();
        let words = bits::words_for(order);
        let mut adj = vec![0u64; order * words].into_boxed_slice();
        for i in 0..order {
            for j in i + 1..order {
                if vertices[i].dot_raw(&vertices[j]) == 1 {
                    bits::set(&mut adj[i * words..(i + 1) * words], j);
                    bits::set(&mut adj[j * words..(j + 1) * words], i);
                }
            }
        }
        Ok(Graph {
            id: NEXT_GRAPH_ID.fetch_add(1, Ordering::Relaxed),
            order,
            words,
            adj,
            labels: Some(vertices.into_boxed_slice()),
            origin,
        })
    }

    /// Builds an unlabelled graph from an edge predicate evaluated on `i < j`.
    pub fn from_predicate<F: FnMut(usize, usize) -> bool>(order: usize, mut pred: F) -> Graph {
        let words = bits::words_for(order);
        let mut adj = vec![0u64; order * words].into_boxed_slice();
        for i in 0..order {
            for j in i + 1..order {
                if pred(i, j) {
                    bits::set(&mut adj[i * words..(i + 1) * words], j);
                    bits::set(&mut adj[j * words..(j + 1) * words], i);
                }
            }
        }
        Graph {
            id: NEXT_GRAPH_ID.fetch_add(1, Ordering::Relaxed),
            order,
            words,
            adj,
            labels: None,
            origin: GraphOrigin::Imported,
        }
    }

    /// Builds an unlabelled graph from an edge list. Duplicate edges are
    /// tolerated; self-loops and out-of-range endpoints are rejected.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let words = bits::words_for(order);
        let mut adj = vec![0u64; order * words].into_boxed_slice();
        for &(u, v) in edges {
            if u >= order {
                return Err(Error::IndexOutOfRange { index: u, order });
            }
            if v >= order || u == v {
                return Err(Error::IndexOutOfRange { index: v, order });
            }
            bits::set(&mut adj[u * words..(u + 1) * words], v);
            bits::set(&mut adj[v * words..(v + 1) * words], u);
        }
        Ok(Graph {
            id: NEXT_GRAPH_ID.fetch_add(1, Ordering::Relaxed),
            order,
            words,
            adj,
            labels: None,
            origin: GraphOrigin::Imported,
        })
    }

    /// Unique id of this graph value; independent sets carry it as their
    /// certificate binding.
    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn origin(&self) -> GraphOrigin {
        self.origin
    }

    pub fn labels(&self) -> Option<&[Vertex]> {
        self.labels.as_deref()
    }

    /// Whether this is a generated product-1 graph over labelled vertices.
    pub fn is_product_graph(&self) -> bool {
        self.labels.is_some()
    }

    #[inline]
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.order && j < self.order);
        bits::test(self.row(i), j)
    }

    /// Adjacency bit-row of vertex `i`.
    #[inline]
    pub fn row(&self, i: usize) -> &[u64] {
        &self.adj[i * self.words..(i + 1) * self.words]
    }

    pub(crate) fn words(&self) -> usize {
        self.words
    }

    pub fn degree(&self, i: usize) -> usize {
        bits::count(self.row(i))
    }

    pub fn edge_count(&self) -> usize {
        (0..self.order).map(|i| self.degree(i)).sum::<usize>() / 2
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        bits::iter(self.row(i))
    }

    /// Complement on the same vertex set. Labels are dropped: the result is
    /// not a product-1 graph.
    pub fn complement(&self) -> Graph {
        let words = self.words;
        let mut adj = vec![0u64; self.order * words].into_boxed_slice();
        for i in 0..self.order {
            let row = &mut adj[i * words..(i + 1) * words];
            for (w, &orig) in row.iter_mut().zip(self.row(i)) {
                *w = !orig;
            }
            let tail = self.order % bits::WORD_BITS;
            if tail != 0 {
                row[words - 1] &= (1u64 << tail) - 1;
            }
            bits::clear(row, i);
        }
        Graph {
            id: NEXT_GRAPH_ID.fetch_add(1, Ordering::Relaxed),
            order: self.order,
            words,
            adj,
            labels: None,
            origin: GraphOrigin::Imported,
        }
    }

    /// Induced subgraph on the given vertices (deduplicated, sorted).
    /// Labels are kept when present.
    pub fn induced(&self, keep: &[usize]) -> Result<Graph> {
        let mut keep: Vec<usize> = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if let Some(&max) = keep.last() {
            if max >= self.order {
                return Err(Error::IndexOutOfRange { index: max, order: self.order });
            }
        }
        let order = keep.len();
        let words = bits::words_for(order);
        let mut adj = vec![0u64; order * words].into_boxed_slice();
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.adjacent(u, v) {
                    bits::set(&mut adj[i * words..(i + 1) * words], j);
                    bits::set(&mut adj[j * words..(j + 1) * words], i);
                }
            }
        }
        let labels = self
            .labels
            .as_ref()
            .map(|ls| keep.iter().map(|&u| ls[u]).collect::<Vec<_>>().into_boxed_slice());
        Ok(Graph {
            id: NEXT_GRAPH_ID.fetch_add(1, Ordering::Relaxed),
            order,
            words,
            adj,
            labels,
            origin: GraphOrigin::Imported,
        })
    }

    /// Content descriptor for cache keys: origin parameters for generated
    /// graphs, an adjacency digest for imported ones.
    pub fn descriptor(&self) -> String {
        match self.origin {
            GraphOrigin::Imported => {
                use sha2::{Digest, Sha256};
                let mut h = Sha256::new();
                h.update((self.order as u64).to_le_bytes());
                for w in self.adj.iter() {
                    h.update(w.to_le_bytes());
                }
                format!("imported:sha256={:x}", h.finalize())
            }
            origin => format!("{}:order={}", origin.descriptor(), self.order),
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph({}, order {}, {} edges)",
            self.origin.descriptor(),
            self.order,
            self.edge_count()
        )
    }
}

/// A set of vertex indices certified independent in a specific graph value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependentSet {
    graph_id: u64,
    members: Vec<u32>,
}

impl IndependentSet {
    /// Validates pairwise non-adjacency and builds the certificate.
    pub fn new(graph: &Graph, members: impl IntoIterator<Item = u32>) -> Result<Self> {
        let mut members: Vec<u32> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        for &i in &members {
            if i as usize >= graph.order() {
                return Err(Error::IndexOutOfRange { index: i as usize, order: graph.order() });
            }
        }
        for (k, &i) in members.iter().enumerate() {
            for &j in &members[k + 1..] {
                if graph.adjacent(i as usize, j as usize) {
                    return Err(Error::NotIndependent { u: i as usize, v: j as usize });
                }
            }
        }
        Ok(IndependentSet { graph_id: graph.id(), members })
    }

    pub fn graph_id(&self) -> u64 {
        self.graph_id
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Whether this certificate was issued for the given graph value.
    pub fn certifies(&self, graph: &Graph) -> bool {
        self.graph_id == graph.id()
    }
}
