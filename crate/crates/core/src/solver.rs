//! Exact maximum independent set.
//!
//! The main routine runs a branch-and-bound maximum-clique search on the
//! complement graph: candidates are greedily colored at every node and the
//! color count prunes branches that cannot beat the incumbent. Top-level
//! branches follow a degeneracy order of the complement and are independent
//! subproblems, distributed over a worker pool that shares a monotonically
//! improving incumbent through an atomic. The exact value never depends on
//! the thread budget; only node counts and the witness choice may.
//!
//! A separate brute-force routine with no pruning beyond feasibility serves
//! as an independent oracle for small graphs.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use crate::bits;
use crate::error::{Error, Result};
use crate::model::{Graph, IndependentSet};

/// Solver revision; recorded in reports and cache keys.
pub const SOLVER_VERSION: &str = "1.0";

/// Largest order accepted by [`brute_force_mis`].
pub const BRUTE_FORCE_LIMIT: usize = 25;

/// Optional work limits for a solve session.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Budget {
    pub time: Option<Duration>,
    pub nodes: Option<u64>,
}

impl Budget {
    pub const UNLIMITED: Budget = Budget { time: None, nodes: None };

    pub fn time_limit(limit: Duration) -> Budget {
        Budget { time: Some(limit), nodes: None }
    }

    pub fn node_limit(limit: u64) -> Budget {
        Budget { time: None, nodes: Some(limit) }
    }

    pub fn is_unlimited(&self) -> bool {
        self.time.is_none() && self.nodes.is_none()
    }
}

/// Parameters of a solve session.
#[derive(Debug, Clone, Copy, Default)]
pub struct SolveOptions {
    pub budget: Budget,
    /// Worker count; `None` uses the available parallelism.
    pub threads: Option<usize>,
}

impl SolveOptions {
    pub fn single_threaded() -> Self {
        SolveOptions { budget: Budget::UNLIMITED, threads: Some(1) }
    }
}

/// Result value of a solve: exact, or a bound pair when the budget ran out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveOutcome {
    Exact { alpha: usize },
    /// The budget was exhausted; the independence number lies in
    /// `lower..=upper` and the witness attains `lower`.
    Incomplete { lower: usize, upper: usize },
}

impl SolveOutcome {
    pub fn is_exact(&self) -> bool {
        matches!(self, SolveOutcome::Exact { .. })
    }

    /// The exact value, if the solve completed.
    pub fn alpha(&self) -> Option<usize> {
        match self {
            SolveOutcome::Exact { alpha } => Some(*alpha),
            SolveOutcome::Incomplete { .. } => None,
        }
    }

    /// Best proven lower bound (the witness size).
    pub fn lower(&self) -> usize {
        match self {
            SolveOutcome::Exact { alpha } => *alpha,
            SolveOutcome::Incomplete { lower, .. } => *lower,
        }
    }

    /// Best proven upper bound.
    pub fn upper(&self) -> usize {
        match self {
            SolveOutcome::Exact { alpha } => *alpha,
            SolveOutcome::Incomplete { upper, .. } => *upper,
        }
    }
}

/// Fixed description of the search strategy for a session.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverSettings {
    pub ordering: &'static str,
    pub branch_rule: &'static str,
    pub threads: usize,
    pub version: &'static str,
}

impl SolverSettings {
    pub fn new(threads: usize) -> Self {
        SolverSettings {
            ordering: "complement-degeneracy",
            branch_rule: "greedy-color-cut",
            threads,
            version: SOLVER_VERSION,
        }
    }

    /// Thread-independent identity of the algorithm, for cache keys.
    pub fn algorithm_id() -> String {
        format!("v{SOLVER_VERSION}:complement-degeneracy:greedy-color-cut")
    }
}

/// Outcome of a solve session together with its certificate and statistics.
#[derive(Debug, Clone)]
pub struct SolveReport {
    pub outcome: SolveOutcome,
    /// Best independent set found; attains `outcome.lower()`.
    pub witness: IndependentSet,
    /// Search tree nodes visited.
    pub nodes: u64,
    pub elapsed: Duration,
    pub settings: SolverSettings,
}

/// Worker count used when none is requested.
pub fn default_threads() -> usize {
    std::thread::available_parallelism().map(|p| p.get()).unwrap_or(1)
}

/// True iff no two of the given indices are adjacent in `g`.
pub fn verify_independent(g: &Graph, members: &[u32]) -> Result<bool> {
    for &i in members {
        if i as usize >= g.order() {
            return Err(Error::IndexOutOfRange { index: i as usize, order: g.order() });
        }
    }
    for (k, &i) in members.iter().enumerate() {
        for &j in &members[k + 1..] {
            if i != j && g.adjacent(i as usize, j as usize) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Exhaustive include/exclude recursion with no pruning beyond feasibility.
/// Rejects graphs larger than [`BRUTE_FORCE_LIMIT`] vertices.
pub fn brute_force_mis(g: &Graph) -> Result<usize> {
    let n = g.order();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLargeForBruteForce { order: n, limit: BRUTE_FORCE_LIMIT });
    }
    let mut nbr = [0u32; BRUTE_FORCE_LIMIT];
    for (i, slot) in nbr.iter_mut().enumerate().take(n) {
        for j in g.neighbors(i) {
            *slot |= 1 << j;
        }
    }

    fn recurse(nbr: &[u32], pending: u32) -> usize {
        if pending == 0 {
            return 0;
        }
        let v = pending.trailing_zeros() as usize;
        let without = recurse(nbr, pending & !(1 << v));
        let with = 1 + recurse(nbr, pending & !nbr[v] & !(1 << v));
        without.max(with)
    }

    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    Ok(recurse(&nbr[..n], full))
}

// ---------------------------------------------------------------------------
// Branch-and-bound clique search on the complement
// ---------------------------------------------------------------------------

struct Shared {
    best: Mutex<(usize, Vec<u32>)>,
    best_size: AtomicUsize,
    abort: AtomicBool,
    next_branch: AtomicUsize,
    global_nodes: AtomicU64,
    done: Vec<AtomicBool>,
}

impl Shared {
    fn improve(&self, clique: &[u32]) {
        let size = clique.len();
        if size > self.best_size.load(Ordering::Relaxed) {
            let mut guard = self.best.lock().unwrap();
            if size > guard.0 {
                guard.0 = size;
                guard.1 = clique.to_vec();
                self.best_size.store(size, Ordering::Release);
            }
        }
    }
}

/// Per-depth reusable buffers.
struct Level {
    candidates: Vec<u64>,
    uncolored: Vec<u64>,
    class_pool: Vec<u64>,
    order: Vec<u32>,
    bounds: Vec<u32>,
}

impl Level {
    fn new(words: usize) -> Self {
        Level {
            candidates: vec![0; words],
            uncolored: vec![0; words],
            class_pool: vec![0; words],
            order: Vec::new(),
            bounds: Vec::new(),
        }
    }
}

struct Searcher<'a> {
    words: usize,
    comp: &'a [u64],
    levels: Vec<Level>,
    clique: Vec<u32>,
    local_nodes: u64,
    check_tick: u32,
    check_every: u32,
    deadline: Option<Instant>,
    node_limit: Option<u64>,
    shared: &'a Shared,
}

impl<'a> Searcher<'a> {
    fn comp_row(&self, v: u32) -> &'a [u64] {
        &self.comp[v as usize * self.words..(v as usize + 1) * self.words]
    }

    fn ensure_level(&mut self, depth: usize) {
        while self.levels.len() <= depth {
            self.levels.push(Level::new(self.words));
        }
    }

    /// Checks the time/node budget; sets the shared abort flag on exhaustion.
    fn budget_ok(&mut self) -> bool {
        self.check_tick += 1;
        if self.check_tick >= self.check_every {
            self.shared.global_nodes.fetch_add(self.check_tick as u64, Ordering::Relaxed);
            self.check_tick = 0;
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    self.shared.abort.store(true, Ordering::Relaxed);
                }
            }
            if let Some(limit) = self.node_limit {
                if self.shared.global_nodes.load(Ordering::Relaxed) >= limit {
                    self.shared.abort.store(true, Ordering::Relaxed);
                }
            }
        }
        !self.shared.abort.load(Ordering::Relaxed)
    }

    /// Greedy coloring of `levels[depth].candidates`; fills `order` with the
    /// vertices grouped by color class (ascending) and `bounds[i]` with the
    /// class number of `order[i]`. Deterministic: classes are filled in
    /// vertex-index order.
    fn color_sort(&mut self, depth: usize) {
        let level = &mut self.levels[depth];
        level.order.clear();
        level.bounds.clear();
        level.uncolored.copy_from_slice(&level.candidates);
        let mut color = 0u32;
        while !bits::is_empty(&level.uncolored) {
            color += 1;
            level.class_pool.copy_from_slice(&level.uncolored);
            loop {
                // first remaining vertex of this class
                let mut v = None;
                for (w, &word) in level.class_pool.iter().enumerate() {
                    if word != 0 {
                        v = Some((w * bits::WORD_BITS) as u32 + word.trailing_zeros());
                        break;
                    }
                }
                let Some(v) = v else { break };
                bits::clear(&mut level.class_pool, v as usize);
                bits::clear(&mut level.uncolored, v as usize);
                let row = &self.comp[v as usize * self.words..(v as usize + 1) * self.words];
                bits::subtract(&mut level.class_pool, row);
                level.order.push(v);
                level.bounds.push(color);
            }
        }
    }

    /// Expands the node whose candidate set is `levels[depth].candidates`.
    /// The current clique is `self.clique` (of size `depth`). Returns false
    /// when the session aborted.
    fn expand(&mut self, depth: usize) -> bool {
        self.local_nodes += 1;
        if !self.budget_ok() {
            return false;
        }
        if bits::is_empty(&self.levels[depth].candidates) {
            self.shared.improve(&self.clique);
            return true;
        }
        self.color_sort(depth);
        self.ensure_level(depth + 1);
        let len = self.levels[depth].order.len();
        for idx in (0..len).rev() {
            let (v, bound) = {
                let level = &self.levels[depth];
                (level.order[idx], level.bounds[idx])
            };
            // all remaining candidates have bound <= this one
            if self.clique.len() + bound as usize <= self.shared.best_size.load(Ordering::Relaxed)
            {
                return true;
            }
            {
                let row = self.comp_row(v);
                let (cur, rest) = self.levels.split_at_mut(depth + 1);
                bits::intersect_into(&mut rest[0].candidates, &cur[depth].candidates, row);
            }
            self.clique.push(v);
            let ok = self.expand(depth + 1);
            self.clique.pop();
            if !ok {
                return false;
            }
            bits::clear(&mut self.levels[depth].candidates, v as usize);
        }
        true
    }
}

/// Greedy independent set in `g`: repeatedly take a vertex of minimum
/// residual degree. Seeds the incumbent.
fn greedy_independent_set(g: &Graph) -> Vec<u32> {
    let n = g.order();
    let words = g.words();
    let mut avail = vec![0u64; words];
    for i in 0..n {
        bits::set(&mut avail, i);
    }
    let mut scratch = vec![0u64; words];
    let mut out = Vec::new();
    while !bits::is_empty(&avail) {
        let mut best_v = usize::MAX;
        let mut best_deg = usize::MAX;
        for v in bits::iter(&avail) {
            bits::intersect_into(&mut scratch, g.row(v), &avail);
            let deg = bits::count(&scratch);
            if deg < best_deg {
                best_deg = deg;
                best_v = v;
                if deg == 0 {
                    break;
                }
            }
        }
        out.push(best_v as u32);
        bits::subtract(&mut avail, g.row(best_v));
        bits::clear(&mut avail, best_v);
    }
    out.sort_unstable();
    out
}

/// Degeneracy order of the graph given by bit rows: repeatedly remove a
/// vertex of minimum residual degree, smallest index first on ties.
fn degeneracy_order(rows: &[u64], n: usize, words: usize) -> Vec<u32> {
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = (0..n).map(|i| bits::count(&rows[i * words..(i + 1) * words])).collect();
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let mut v = usize::MAX;
        let mut vd = usize::MAX;
        for (u, &a) in alive.iter().enumerate() {
            if a && deg[u] < vd {
                vd = deg[u];
                v = u;
            }
        }
        order.push(v as u32);
        alive[v] = false;
        for u in bits::iter(&rows[v * words..(v + 1) * words]) {
            if alive[u] {
                deg[u] -= 1;
            }
        }
    }
    order
}

/// Number of classes used by a greedy coloring of the whole row set;
/// an upper bound on its clique number.
fn greedy_coloring_bound(rows: &[u64], n: usize, words: usize) -> usize {
    let mut uncolored = vec![0u64; words];
    for i in 0..n {
        bits::set(&mut uncolored, i);
    }
    let mut pool = vec![0u64; words];
    let mut colors = 0;
    while !bits::is_empty(&uncolored) {
        colors += 1;
        pool.copy_from_slice(&uncolored);
        while let Some(v) = bits::iter(&pool).next() {
            bits::clear(&mut pool, v);
            bits::clear(&mut uncolored, v);
            bits::subtract(&mut pool, &rows[v * words..(v + 1) * words]);
        }
    }
    colors
}

/// Computes the exact independence number of `g` with a witness, or a bound
/// pair when the budget runs out. See the module docs for the strategy.
pub fn max_independent_set(g: &Graph, opts: SolveOptions) -> SolveReport {
    let start = Instant::now();
    let threads = opts.threads.unwrap_or_else(default_threads).max(1);
    let settings = SolverSettings::new(threads);
    let n = g.order();
    if n == 0 {
        return SolveReport {
            outcome: SolveOutcome::Exact { alpha: 0 },
            witness: IndependentSet::new(g, []).expect("empty set is independent"),
            nodes: 0,
            elapsed: start.elapsed(),
            settings,
        };
    }

    // clique search runs on the complement
    let words = bits::words_for(n);
    let mut comp = vec![0u64; n * words];
    let tail = n % bits::WORD_BITS;
    for i in 0..n {
        let row = &mut comp[i * words..(i + 1) * words];
        for (w, &orig) in row.iter_mut().zip(g.row(i)) {
            *w = !orig;
        }
        if tail != 0 {
            row[words - 1] &= (1u64 << tail) - 1;
        }
        bits::clear(row, i);
    }

    let seed = greedy_independent_set(g);
    let root_bound = greedy_coloring_bound(&comp, n, words);
    let order = degeneracy_order(&comp, n, words);
    let mut rank = vec![0u32; n];
    for (i, &v) in order.iter().enumerate() {
        rank[v as usize] = i as u32;
    }

    let shared = Shared {
        best_size: AtomicUsize::new(seed.len()),
        best: Mutex::new((seed.len(), seed)),
        abort: AtomicBool::new(false),
        next_branch: AtomicUsize::new(0),
        global_nodes: AtomicU64::new(0),
        done: (0..n).map(|_| AtomicBool::new(false)).collect(),
    };
    let deadline = opts.budget.time.map(|d| start + d);
    let node_limit = opts.budget.nodes;
    let total_nodes = AtomicU64::new(0);

    let branch_candidates = |i: usize, buf: &mut [u64]| {
        let v = order[i];
        buf.fill(0);
        for u in bits::iter(&comp[v as usize * words..(v as usize + 1) * words]) {
            if rank[u] > i as u32 {
                bits::set(buf, u);
            }
        }
    };

    std::thread::scope(|scope| {
        for _ in 0..threads.min(n) {
            scope.spawn(|| {
                let mut searcher = Searcher {
                    words,
                    comp: &comp,
                    levels: (0..root_bound + 2).map(|_| Level::new(words)).collect(),
                    clique: Vec::with_capacity(root_bound + 2),
                    local_nodes: 0,
                    check_tick: 0,
                    // node limits need a fine-grained check to be meaningful
                    check_every: if node_limit.is_some() { 16 } else { 1024 },
                    deadline,
                    node_limit,
                    shared: &shared,
                };
                loop {
                    let i = shared.next_branch.fetch_add(1, Ordering::Relaxed);
                    if i >= n || shared.abort.load(Ordering::Relaxed) {
                        break;
                    }
                    let v = order[i];
                    searcher.ensure_level(1);
                    branch_candidates(i, &mut searcher.levels[1].candidates);
                    let reachable = 1 + bits::count(&searcher.levels[1].candidates);
                    if reachable <= shared.best_size.load(Ordering::Relaxed) {
                        shared.done[i].store(true, Ordering::Relaxed);
                        continue;
                    }
                    searcher.clique.clear();
                    searcher.clique.push(v);
                    if searcher.expand(1) {
                        shared.done[i].store(true, Ordering::Relaxed);
                    }
                }
                total_nodes.fetch_add(searcher.local_nodes, Ordering::Relaxed);
            });
        }
    });

    let (best_size, best_members) = {
        let guard = shared.best.lock().unwrap();
        (guard.0, guard.1.clone())
    };
    let all_done = shared.done.iter().all(|d| d.load(Ordering::Relaxed));
    let outcome = if all_done {
        SolveOutcome::Exact { alpha: best_size }
    } else {
        // unfinished top-level branches bound what remains unexplored
        let mut scratch = vec![0u64; words];
        let mut upper = best_size;
        for i in 0..n {
            if !shared.done[i].load(Ordering::Relaxed) {
                branch_candidates(i, &mut scratch);
                upper = upper.max(1 + bits::count(&scratch));
            }
        }
        upper = upper.min(root_bound);
        if upper == best_size {
            SolveOutcome::Exact { alpha: best_size }
        } else {
            SolveOutcome::Incomplete { lower: best_size, upper }
        }
    };

    let witness = IndependentSet::new(g, best_members)
        .expect("solver witness must verify as independent");
    SolveReport {
        outcome,
        witness,
        nodes: total_nodes.load(Ordering::Relaxed),
        elapsed: start.elapsed(),
        settings,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build::{build_gn, build_nagy};
    use crate::model::Graph;

    fn solve(g: &Graph) -> SolveReport {
        max_independent_set(g, SolveOptions::default())
    }

    /// Independent subset-enumeration oracle, distinct from both solver paths.
    fn subsets_mis(g: &Graph) -> usize {
        let n = g.order();
        assert!(n <= 16);
        let mut best = 0;
        'subset: for mask in 0u32..(1 << n) {
            let size = mask.count_ones() as usize;
            if size <= best {
                continue;
            }
            for i in 0..n {
                if mask >> i & 1 == 0 {
                    continue;
                }
                for j in i + 1..n {
                    if mask >> j & 1 == 1 && g.adjacent(i, j) {
                        continue 'subset;
                    }
                }
            }
            best = size;
        }
        best
    }

    #[test]
    fn brute_force_examples() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(brute_force_mis(&k4).unwrap(), 1);
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(brute_force_mis(&c5).unwrap(), 2);
        let cube = build_gn(3).unwrap();
        assert_eq!(brute_force_mis(&cube).unwrap(), 4);
        assert_eq!(subsets_mis(&cube), 4);
    }

    #[test]
    fn brute_force_rejects_large_graphs() {
        let g = Graph::from_edges(26, &[]).unwrap();
        assert!(matches!(brute_force_mis(&g), Err(Error::TooLargeForBruteForce { .. })));
    }

    #[test]
    fn verify_independent_basics() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(verify_independent(&g, &[2]).unwrap());
        assert!(!verify_independent(&g, &[0, 1]).unwrap());
        assert!(verify_independent(&g, &[0, 2]).unwrap());
        assert!(verify_independent(&g, &[5]).is_err());
    }

    #[test]
    fn solver_on_trivial_graphs() {
        let empty = Graph::from_edges(0, &[]).unwrap();
        assert_eq!(solve(&empty).outcome, SolveOutcome::Exact { alpha: 0 });
        let edgeless = Graph::from_edges(7, &[]).unwrap();
        let r = solve(&edgeless);
        assert_eq!(r.outcome, SolveOutcome::Exact { alpha: 7 });
        assert_eq!(r.witness.len(), 7);
    }

    #[test]
    fn solver_matches_cube() {
        let g = build_gn(3).unwrap();
        let r = solve(&g);
        assert_eq!(r.outcome, SolveOutcome::Exact { alpha: 4 });
        assert!(verify_independent(&g, r.witness.members()).unwrap());
    }

    #[test]
    fn solver_matches_brute_force_on_random_graphs() {
        use rand::prelude::*;
        use rand_chacha::ChaCha8Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(20240901);
        for round in 0..60 {
            let n = rng.gen_range(1..=16);
            let density: f64 = rng.gen_range(0.05..0.95);
            let g = Graph::from_predicate(n, |_, _| rng.gen_bool(density));
            let expect = brute_force_mis(&g).unwrap();
            let r = solve(&g);
            assert_eq!(r.outcome, SolveOutcome::Exact { alpha: expect }, "round {round}");
            assert_eq!(r.witness.len(), expect);
            assert!(verify_independent(&g, r.witness.members()).unwrap());
            if n <= 16 {
                assert_eq!(subsets_mis(&g), expect);
            }
        }
    }

    #[test]
    fn alpha_equals_complement_clique_number() {
        use rand::prelude::*;
        use rand_chacha::ChaCha8Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(7);

        // exhaustive clique search on the complement, independent route
        fn max_clique_by_subsets(g: &Graph) -> usize {
            let n = g.order();
            let mut best = 0;
            'subset: for mask in 0u32..(1 << n) {
                let size = mask.count_ones() as usize;
                if size <= best {
                    continue;
                }
                for i in 0..n {
                    if mask >> i & 1 == 0 {
                        continue;
                    }
                    for j in i + 1..n {
                        if mask >> j & 1 == 1 && !g.adjacent(i, j) {
                            continue 'subset;
                        }
                    }
                }
                best = size;
            }
            best
        }

        for _ in 0..20 {
            let g = Graph::from_predicate(15, |_, _| rng.gen_bool(0.4));
            let alpha = brute_force_mis(&g).unwrap();
            assert_eq!(alpha, max_clique_by_subsets(&g.complement()));
        }
    }

    #[test]
    fn node_budget_yields_incomplete_outcome() {
        let g = build_gn(5).unwrap();
        let r = max_independent_set(
            &g,
            SolveOptions { budget: Budget::node_limit(1), threads: Some(1) },
        );
        match r.outcome {
            SolveOutcome::Incomplete { lower, upper } => {
                assert!(lower <= upper);
                assert_eq!(r.witness.len(), lower);
                assert!(verify_independent(&g, r.witness.members()).unwrap());
            }
            SolveOutcome::Exact { .. } => panic!("expected incomplete under a 1-node budget"),
        }
    }

    #[test]
    fn nagy_alpha_small() {
        // alpha of the 0/1 restriction is n - c(n)
        for (n, expect) in [(4, 4), (7, 5), (8, 8)] {
            let g = build_nagy(n).unwrap();
            let r = solve(&g);
            assert_eq!(r.outcome, SolveOutcome::Exact { alpha: expect }, "n = {n}");
        }
    }

    #[test]
    fn value_is_thread_independent() {
        let g = build_gn(4).unwrap();
        let mut values = Vec::new();
        for threads in [1, 2, default_threads()] {
            let r = max_independent_set(
                &g,
                SolveOptions { budget: Budget::UNLIMITED, threads: Some(threads) },
            );
            values.push(r.outcome.alpha().unwrap());
        }
        assert!(values.windows(2).all(|w| w[0] == w[1]));
        assert_eq!(values[0], 16);
    }
}
