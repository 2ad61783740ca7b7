//! Generators and verifiers for the extremal independent sets: quad packings,
//! snakes, cobras, the double cobra, the all-positive block packing, scalar
//! product spectra, and exact minimum removals for a given scalar product.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::formulas::c_const;
use crate::model::{Graph, Sign, Vertex, MAX_DIM};
use crate::solver::{max_independent_set, SolveOptions, SolveOutcome};

/// The four sign patterns with coordinate product +1; any two vectors carrying
/// them on a common base have scalar product -1 or 3, never 1.
pub const QUAD_PATTERNS: [[Sign; 3]; 4] = {
    use Sign::{Minus as M, Plus as P};
    [[P, P, P], [P, M, M], [M, P, M], [M, M, P]]
};

/// Families of generated independent sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstructionKind {
    QuadPacking,
    Snake,
    Cobra,
    DoubleCobra,
    NagySet,
}

impl ConstructionKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ConstructionKind::QuadPacking => "quad-packing",
            ConstructionKind::Snake => "snake",
            ConstructionKind::Cobra => "cobra",
            ConstructionKind::DoubleCobra => "double-cobra",
            ConstructionKind::NagySet => "nagy-set",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "quad-packing" | "quad" => ConstructionKind::QuadPacking,
            "snake" => ConstructionKind::Snake,
            "cobra" => ConstructionKind::Cobra,
            "double-cobra" => ConstructionKind::DoubleCobra,
            "nagy-set" | "nagy" => ConstructionKind::NagySet,
            _ => return None,
        })
    }
}

impl fmt::Display for ConstructionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A generated vertex set in ambient dimension `n`, tagged with its family.
#[derive(Debug, Clone)]
pub struct Construction {
    kind: ConstructionKind,
    n: usize,
    vertices: Vec<Vertex>,
}

impl Construction {
    pub fn kind(&self) -> ConstructionKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Pairwise scalar products never equal 1, i.e. the set is independent in
    /// the ambient product-1 graph.
    pub fn is_independent(&self) -> bool {
        for (i, a) in self.vertices.iter().enumerate() {
            for b in &self.vertices[i + 1..] {
                if a.dot_raw(b) == 1 {
                    return false;
                }
            }
        }
        true
    }

    /// The set of scalar products over all unordered pairs.
    pub fn spectrum(&self) -> BTreeSet<i32> {
        let mut out = BTreeSet::new();
        for (i, a) in self.vertices.iter().enumerate() {
            for b in &self.vertices[i + 1..] {
                out.insert(a.dot_raw(b));
            }
        }
        out
    }

    /// Number of distinct signplaces intersected by the vertices.
    pub fn signplace_count(&self) -> usize {
        let mut pos = 0u64;
        let mut neg = 0u64;
        for v in &self.vertices {
            pos |= v.pos_mask();
            neg |= v.neg_mask();
        }
        (pos.count_ones() + neg.count_ones()) as usize
    }

    /// Line-based text form: header `kind n size`, then one vertex per line
    /// as signed 1-based places, e.g. `+1 -2 +4`.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {} {}\n", self.kind, self.n, self.len());
        for v in &self.vertices {
            out.push_str(&v.to_string());
            out.push('\n');
        }
        out
    }

    /// Parses the text form produced by [`Construction::to_text`].
    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate();
        let (_, header) = lines
            .next()
            .ok_or(Error::ConstructionParse { line: 1, message: "empty input".into() })?;
        let mut fields = header.split_whitespace();
        let kind = fields
            .next()
            .and_then(ConstructionKind::parse)
            .ok_or_else(|| Error::ConstructionParse { line: 1, message: "bad kind".into() })?;
        let n: usize = fields
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::ConstructionParse { line: 1, message: "bad dimension".into() })?;
        let size: usize = fields
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::ConstructionParse { line: 1, message: "bad size".into() })?;
        let mut vertices = Vec::with_capacity(size);
        for (idx, raw) in lines {
            let line = idx + 1;
            let l = raw.trim();
            if l.is_empty() {
                continue;
            }
            let mut places = Vec::with_capacity(3);
            for token in l.split_whitespace() {
                let (sign, digits) = match token.as_bytes().first() {
                    Some(b'+') => (Sign::Plus, &token[1..]),
                    Some(b'-') => (Sign::Minus, &token[1..]),
                    _ => {
                        return Err(Error::ConstructionParse {
                            line,
                            message: format!("token '{token}' lacks a sign"),
                        })
                    }
                };
                let place: usize = digits.parse().map_err(|_| Error::ConstructionParse {
                    line,
                    message: format!("bad place in '{token}'"),
                })?;
                if place == 0 {
                    return Err(Error::ConstructionParse {
                        line,
                        message: "places are 1-based".into(),
                    });
                }
                places.push((place - 1, sign));
            }
            let v = Vertex::from_signed_places(n, &places).map_err(|e| {
                Error::ConstructionParse { line, message: e.to_string() }
            })?;
            vertices.push(v);
        }
        if vertices.len() != size {
            return Err(Error::ConstructionParse {
                line: 1,
                message: format!("header promises {size} vertices, found {}", vertices.len()),
            });
        }
        Ok(Construction { kind, n, vertices })
    }

    /// The labelled product-1 graph on exactly these vertices.
    pub fn to_graph(&self) -> Result<Graph> {
        Graph::from_vertices(self.vertices.clone(), crate::model::GraphOrigin::Imported)
    }
}

fn check_dim(n: usize, least: usize, required: &'static str) -> Result<()> {
    if n < least {
        return Err(Error::DimensionTooSmall { required, n });
    }
    if n > MAX_DIM {
        return Err(Error::DimensionTooLarge(n));
    }
    Ok(())
}

/// All four quad patterns on a base of three places (ascending order).
fn quad_vectors(n: usize, base: [usize; 3]) -> Vec<Vertex> {
    QUAD_PATTERNS
        .iter()
        .map(|pat| {
            let places: Vec<(usize, Sign)> =
                base.iter().copied().zip(pat.iter().copied()).collect();
            Vertex::from_signed_places(n, &places).expect("quad vertex is valid")
        })
        .collect()
}

/// Disjoint quads on consecutive 4-place blocks; when three places remain,
/// the four patterns on that final base are appended. The result has exactly
/// `4n - 4c(n)` vertices and is independent.
pub fn quad_packing(n: usize) -> Result<Construction> {
    check_dim(n, 3, "n >= 3 for a quad packing")?;
    let mut vertices = Vec::new();
    for block in 0..n / 4 {
        let p = 4 * block;
        for skip in 0..4 {
            let base: Vec<usize> = (p..p + 4).filter(|&q| q != p + skip).collect();
            vertices.extend(quad_vectors(n, [base[0], base[1], base[2]]));
        }
    }
    if n % 4 == 3 {
        vertices.extend(quad_vectors(n, [n - 3, n - 2, n - 1]));
    }
    debug_assert_eq!(vertices.len(), 4 * n - 4 * c_const(n));
    Ok(Construction { kind: ConstructionKind::QuadPacking, n, vertices })
}

/// A snake: one vertex per tail place, each carrying the two head signplaces
/// plus `tail_sign` at that tail place.
pub fn snake(
    n: usize,
    head_plus: usize,
    head_minus: usize,
    tail: &[usize],
    tail_sign: Sign,
) -> Result<Construction> {
    check_dim(n, 3, "n >= 3 for a snake")?;
    let vertices = snake_vertices(n, head_plus, head_minus, tail, tail_sign)?;
    Ok(Construction { kind: ConstructionKind::Snake, n, vertices })
}

fn snake_vertices(
    n: usize,
    head_plus: usize,
    head_minus: usize,
    tail: &[usize],
    tail_sign: Sign,
) -> Result<Vec<Vertex>> {
    if head_plus == head_minus
        || head_plus >= n
        || head_minus >= n
        || tail.iter().any(|&t| t >= n || t == head_plus || t == head_minus)
    {
        return Err(Error::BadCobraLayout);
    }
    tail.iter()
        .map(|&t| {
            Vertex::from_signed_places(
                n,
                &[(head_plus, Sign::Plus), (head_minus, Sign::Minus), (t, tail_sign)],
            )
        })
        .collect()
}

/// Three snakes with a common tail and pairwise intersecting heads, plus the
/// four quad vectors on the head base. Head pairs `(h1,h2)`, `(h2,h3)`,
/// `(h1,h3)` carry the patterns `(+,-)`, `(+,-)`, `(-,+)`. The result has
/// `3 * tail.len() + 4` vertices on `6 + tail.len()` signplaces.
pub fn cobra_with(
    n: usize,
    head: [usize; 3],
    tail: &[usize],
    tail_sign: Sign,
) -> Result<Construction> {
    check_dim(n, 3, "n >= 3 for a cobra")?;
    let [h1, h2, h3] = head;
    if h1 == h2 || h2 == h3 || h1 == h3 {
        return Err(Error::BadCobraLayout);
    }
    let mut tail_sorted = tail.to_vec();
    tail_sorted.sort_unstable();
    tail_sorted.dedup();
    if tail_sorted.len() != tail.len() {
        return Err(Error::BadCobraLayout);
    }
    let mut vertices = Vec::with_capacity(3 * tail.len() + 4);
    vertices.extend(snake_vertices(n, h1, h2, tail, tail_sign)?);
    vertices.extend(snake_vertices(n, h2, h3, tail, tail_sign)?);
    vertices.extend(snake_vertices(n, h3, h1, tail, tail_sign)?);
    // quad patterns follow the head order as given
    for pat in QUAD_PATTERNS {
        let places: Vec<(usize, Sign)> = head.iter().copied().zip(pat).collect();
        vertices.push(Vertex::from_signed_places(n, &places)?);
    }
    Ok(Construction { kind: ConstructionKind::Cobra, n, vertices })
}

/// The standard cobra layout: head on the first three places, `+` tail on
/// places `3..n-3`, leaving the last three places untouched. Contains exactly
/// `3n - 14` vertices; requires `n >= 7`.
pub fn cobra(n: usize) -> Result<Construction> {
    check_dim(n, 7, "n >= 7 for the standard cobra layout")?;
    let tail: Vec<usize> = (3..n - 3).collect();
    cobra_with(n, [0, 1, 2], &tail, Sign::Plus)
}

/// The standard cobra together with its mirror: head on the last three
/// places and `-1` tail entries over the same middle places. Contains exactly
/// `6n - 28` vertices, is independent, and its spectrum avoids both 1 and -3.
pub fn double_cobra(n: usize) -> Result<Construction> {
    check_dim(n, 7, "n >= 7 for a double cobra")?;
    let tail: Vec<usize> = (3..n - 3).collect();
    let first = cobra_with(n, [0, 1, 2], &tail, Sign::Plus)?;
    let second = cobra_with(n, [n - 3, n - 2, n - 1], &tail, Sign::Minus)?;
    let mut vertices = first.vertices;
    vertices.extend(second.vertices);
    debug_assert_eq!(vertices.len(), 6 * n - 28);
    Ok(Construction { kind: ConstructionKind::DoubleCobra, n, vertices })
}

/// Largest independent set of the all-positive restriction: the four weight-3
/// supports inside each consecutive 4-place block, plus the final base when
/// three places remain. Contains exactly `n - c(n)` vertices; independent in
/// both the 0/1 restriction and the full graph.
pub fn nagy_set(n: usize) -> Result<Construction> {
    check_dim(n, 3, "n >= 3 for the all-positive packing")?;
    let all_plus = [Sign::Plus; 3];
    let mut vertices = Vec::new();
    for block in 0..n / 4 {
        let p = 4 * block;
        for skip in 0..4 {
            let base: Vec<usize> = (p..p + 4).filter(|&q| q != p + skip).collect();
            let places: Vec<(usize, Sign)> = base.into_iter().zip(all_plus).collect();
            vertices.push(Vertex::from_signed_places(n, &places)?);
        }
    }
    if n % 4 == 3 {
        let places: Vec<(usize, Sign)> = (n - 3..n).zip(all_plus).collect();
        vertices.push(Vertex::from_signed_places(n, &places)?);
    }
    debug_assert_eq!(vertices.len(), n - c_const(n));
    Ok(Construction { kind: ConstructionKind::NagySet, n, vertices })
}

/// Result of a minimum-removal computation for one scalar product value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinRemoval {
    /// Removing exactly these vertices (indices into the construction)
    /// eliminates every pair with the requested product, and no smaller
    /// removal does.
    Exact { count: usize, removed: Vec<u32> },
    /// The underlying solve ran out of budget; the minimum removal size lies
    /// in `lower..=upper`.
    Incomplete { lower: usize, upper: usize },
}

/// Minimum number of vertices whose removal eliminates every pair with scalar
/// product `p`, computed exactly as a minimum vertex cover of the p-conflict
/// graph via a maximum independent set on it.
pub fn min_removal_for_product(c: &Construction, p: i32, opts: SolveOptions) -> MinRemoval {
    let vs = c.vertices();
    let conflict = Graph::from_predicate(vs.len(), |i, j| vs[i].dot_raw(&vs[j]) == p);
    if conflict.edge_count() == 0 {
        return MinRemoval::Exact { count: 0, removed: Vec::new() };
    }
    let report = max_independent_set(&conflict, opts);
    match report.outcome {
        SolveOutcome::Exact { alpha } => {
            let keep: std::collections::HashSet<u32> =
                report.witness.members().iter().copied().collect();
            let removed: Vec<u32> =
                (0..vs.len() as u32).filter(|i| !keep.contains(i)).collect();
            debug_assert_eq!(removed.len(), vs.len() - alpha);
            MinRemoval::Exact { count: vs.len() - alpha, removed }
        }
        SolveOutcome::Incomplete { lower, upper } => {
            // cover size = order - independent set size
            MinRemoval::Incomplete { lower: vs.len() - upper, upper: vs.len() - lower }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build::build_gn;
    use crate::formulas::alpha_formula;
    use crate::solver::verify_independent;

    #[test]
    fn quad_packing_sizes_and_independence() {
        for (n, expect) in [(3, 4), (4, 16), (7, 20), (9, 32)] {
            let c = quad_packing(n).unwrap();
            assert_eq!(c.len(), expect, "n = {n}");
            assert_eq!(c.len(), 4 * n - 4 * c_const(n));
            assert!(c.is_independent());
        }
        assert!(quad_packing(2).is_err());
    }

    #[test]
    fn quad_packing_verifies_inside_ambient_graph() {
        for n in [4, 7] {
            let g = build_gn(n).unwrap();
            let c = quad_packing(n).unwrap();
            let labels = g.labels().unwrap();
            let members: Vec<u32> = c
                .vertices()
                .iter()
                .map(|v| labels.binary_search_by_key(&v.sort_key(), Vertex::sort_key).unwrap() as u32)
                .collect();
            assert!(verify_independent(&g, &members).unwrap());
        }
    }

    #[test]
    fn single_quad_spectrum() {
        let c = quad_packing(4).unwrap();
        assert_eq!(c.len(), 16);
        let spec = c.spectrum();
        for value in &spec {
            assert!([-2, -1, 0, 2].contains(value), "unexpected product {value}");
        }
    }

    #[test]
    fn standard_cobra_size() {
        for n in [7, 10, 12, 20] {
            let c = cobra(n).unwrap();
            assert_eq!(c.len(), 3 * n - 14, "n = {n}");
            assert!(c.is_independent());
            assert_eq!(c.signplace_count(), 6 + (n - 6));
        }
        assert!(cobra(6).is_err());
    }

    #[test]
    fn cobra_shape_vertices_vs_signplaces() {
        // t signplaces always carry 3t - 14 vertices
        for n in 7..=20 {
            let c = cobra(n).unwrap();
            let t = c.signplace_count();
            assert_eq!(c.len(), 3 * t - 14);
        }
    }

    #[test]
    fn degenerate_cobra_is_one_quad_base() {
        let c = cobra_with(9, [2, 5, 7], &[], Sign::Plus).unwrap();
        assert_eq!(c.len(), 4);
        assert!(c.is_independent());
        assert_eq!(c.spectrum(), [-1].into_iter().collect());
    }

    #[test]
    fn cobra_rejects_overlapping_places() {
        assert!(cobra_with(8, [0, 1, 2], &[2, 4], Sign::Plus).is_err());
        assert!(cobra_with(8, [0, 0, 2], &[4], Sign::Plus).is_err());
        assert!(cobra_with(8, [0, 1, 2], &[4, 4], Sign::Plus).is_err());
        assert!(cobra_with(8, [0, 1, 2], &[9], Sign::Plus).is_err());
    }

    #[test]
    fn cobra_pairwise_products_in_dimension_ten() {
        let c = cobra(10).unwrap();
        assert_eq!(c.len(), 16);
        for (i, a) in c.vertices().iter().enumerate() {
            for b in &c.vertices()[i + 1..] {
                assert_ne!(a.dot(b).unwrap(), 1);
            }
        }
    }

    #[test]
    fn double_cobra_sizes() {
        for (n, expect) in [(7, 14), (11, 38), (13, 50), (14, 56)] {
            let c = double_cobra(n).unwrap();
            assert_eq!(c.len(), expect, "n = {n}");
            assert_eq!(c.len(), 6 * n - 28);
            assert!(c.is_independent());
        }
        assert!(double_cobra(6).is_err());
    }

    #[test]
    fn double_cobra_spectrum_avoids_one_and_minus_three() {
        for n in 7..=20 {
            let spec = double_cobra(n).unwrap().spectrum();
            assert!(!spec.contains(&1), "n = {n}");
            assert!(!spec.contains(&-3), "n = {n}");
        }
    }

    #[test]
    fn two_disjoint_bases_spectrum() {
        let a = Vertex::from_coords(&[1, 1, 1, 0, 0, 0]).unwrap();
        let b = Vertex::from_coords(&[0, 0, 0, 1, -1, 1]).unwrap();
        let c = Construction { kind: ConstructionKind::Snake, n: 6, vertices: vec![a, b] };
        assert_eq!(c.spectrum(), [0].into_iter().collect());
    }

    #[test]
    fn nagy_set_sizes() {
        for n in 3..=20 {
            let c = nagy_set(n).unwrap();
            assert_eq!(c.len(), n - c_const(n), "n = {n}");
            assert!(c.is_independent());
            // independent in the 0/1 restriction too: no pair of supports meets in one place
            for (i, a) in c.vertices().iter().enumerate() {
                for b in &c.vertices()[i + 1..] {
                    let meet = (a.base_mask() & b.base_mask()).count_ones();
                    assert_ne!(meet, 1);
                }
            }
        }
    }

    #[test]
    fn witness_completeness_against_formula() {
        for n in 7..=40 {
            let quad = quad_packing(n).unwrap().len();
            let dc = double_cobra(n).unwrap().len();
            assert_eq!(quad.max(dc), alpha_formula(n), "n = {n}");
        }
    }

    #[test]
    fn text_roundtrip() {
        let c = double_cobra(9).unwrap();
        let text = c.to_text();
        assert!(text.starts_with("double-cobra 9 26\n"));
        let parsed = Construction::from_text(&text).unwrap();
        assert_eq!(parsed.kind(), c.kind());
        assert_eq!(parsed.n(), 9);
        assert_eq!(parsed.vertices(), c.vertices());
    }

    #[test]
    fn text_parse_errors() {
        assert!(Construction::from_text("").is_err());
        assert!(Construction::from_text("bogus 5 0\n").is_err());
        assert!(Construction::from_text("cobra 7 2\n+1 -2 +4\n").is_err());
        assert!(Construction::from_text("cobra 7 1\n1 -2 +4\n").is_err());
        assert!(Construction::from_text("cobra 7 1\n+0 -2 +4\n").is_err());
    }

    #[test]
    fn min_removal_trivial_when_product_absent() {
        let c = quad_packing(4).unwrap();
        // spectrum of a quad block is within {-2,-1,0,2}; product 3 never occurs
        let r = min_removal_for_product(&c, 3, SolveOptions::default());
        assert_eq!(r, MinRemoval::Exact { count: 0, removed: vec![] });
    }

    #[test]
    fn min_removal_eliminates_product() {
        let c = double_cobra(10).unwrap();
        let r = min_removal_for_product(&c, -2, SolveOptions::default());
        let MinRemoval::Exact { count, removed } = r else {
            panic!("expected exact outcome");
        };
        assert!(count <= 6);
        assert_eq!(count, removed.len());
        let kept: Vec<Vertex> = c
            .vertices()
            .iter()
            .enumerate()
            .filter(|(i, _)| !removed.contains(&(*i as u32)))
            .map(|(_, v)| *v)
            .collect();
        for (i, a) in kept.iter().enumerate() {
            for b in &kept[i + 1..] {
                assert_ne!(a.dot(b).unwrap(), -2);
            }
        }
    }

    #[test]
    fn min_removal_exact_value_for_dimension_14() {
        // the -2-conflict graph of the double cobra is six disjoint stars,
        // one per snake, so the exact minimum removal is 6 (matching the
        // upper bound of 6 and proving it tight)
        let c = double_cobra(14).unwrap();
        let r = min_removal_for_product(&c, -2, SolveOptions::default());
        let MinRemoval::Exact { count, removed } = r else { panic!("expected exact") };
        assert_eq!(count, 6);
        assert_eq!(removed.len(), 6);
    }

    #[test]
    fn min_removal_is_minimal_on_small_instances() {
        // compare against exhaustive subset search on the conflict graph
        let c = double_cobra(8).unwrap();
        let vs = c.vertices();
        let conflict: Vec<(usize, usize)> = (0..vs.len())
            .flat_map(|i| (i + 1..vs.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| vs[i].dot_raw(&vs[j]) == -2)
            .collect();
        let n = vs.len();
        assert!(n <= 24);
        let mut best = usize::MAX;
        'subset: for mask in 0u32..(1 << n) {
            let size = mask.count_ones() as usize;
            if size >= best {
                continue;
            }
            for &(i, j) in &conflict {
                if mask >> i & 1 == 0 && mask >> j & 1 == 0 {
                    continue 'subset;
                }
            }
            best = size;
        }
        let r = min_removal_for_product(&c, -2, SolveOptions::default());
        let MinRemoval::Exact { count, .. } = r else { panic!("expected exact outcome") };
        assert_eq!(count, best);
    }
}
