//! Orbit closure under pivot or local complementation, labelled and up to
//! isomorphism, together with universe generation and whole-universe
//! classification.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::orbit::canonical::{canonical_form, CanonicalForm};
use crate::par;

/// The move generating the orbit.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MoveSet {
    Pivot,
    Lc,
}

impl MoveSet {
    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "pivot" => Ok(MoveSet::Pivot),
            "lc" => Ok(MoveSet::Lc),
            other => Err(Error::Parse(format!("unknown move `{other}`"))),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            MoveSet::Pivot => "pivot",
            MoveSet::Lc => "lc",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Mode {
    Unlabelled,
    Labelled,
}

impl Mode {
    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "unlabelled" | "unlabeled" => Ok(Mode::Unlabelled),
            "labelled" | "labeled" => Ok(Mode::Labelled),
            other => Err(Error::Parse(format!("unknown mode `{other}`"))),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Unlabelled => "unlabelled",
            Mode::Labelled => "labelled",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Universe {
    All,
    Connected,
    BipartiteConnected,
    BipartiteAll,
}

impl Universe {
    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "all" => Ok(Universe::All),
            "connected" => Ok(Universe::Connected),
            "bipartite-connected" => Ok(Universe::BipartiteConnected),
            "bipartite-all" => Ok(Universe::BipartiteAll),
            other => Err(Error::Parse(format!("unknown universe `{other}`"))),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Universe::All => "all",
            Universe::Connected => "connected",
            Universe::BipartiteConnected => "bipartite-connected",
            Universe::BipartiteAll => "bipartite-all",
        }
    }

    fn bipartite(self) -> bool {
        matches!(self, Universe::BipartiteConnected | Universe::BipartiteAll)
    }

    fn connected(self) -> bool {
        matches!(self, Universe::Connected | Universe::BipartiteConnected)
    }
}

fn apply_moves(g: &Graph, moves: MoveSet, out: &mut Vec<Graph>) {
    out.clear();
    match moves {
        MoveSet::Pivot => {
            for (u, v) in g.edges() {
                out.push(g.pivot(u, v, true).expect("edge exists"));
            }
        }
        MoveSet::Lc => {
            for i in 0..g.n() {
                out.push(g.local_complement(i).expect("vertex exists"));
            }
        }
    }
}

/// Everything the orbit walk learns about one orbit.
#[derive(Clone, Debug)]
pub struct OrbitReport {
    /// Number of isomorphism classes in the orbit.
    pub unlabelled_size: u64,
    /// Number of labelled graphs in the orbit (swap convention for pivot);
    /// only filled in labelled mode.
    pub labelled_size: Option<u64>,
    /// Least canonical member: the deterministic orbit representative.
    pub representative: CanonicalForm,
    /// Member with the fewest edges, ties broken canonically.
    pub min_edge_representative: CanonicalForm,
    /// Partition sizes (small, large) when the orbit is bipartite; the
    /// sizes are orbit invariants.
    pub bipartite_sides: Option<(usize, usize)>,
}

/// Closure of the graph under pivots on every edge.
pub fn pivot_orbit(g: &Graph, mode: Mode) -> OrbitReport {
    orbit(g, MoveSet::Pivot, mode, 1)
}

/// Closure of the graph under local complementation at every vertex.
pub fn lc_orbit(g: &Graph, mode: Mode) -> OrbitReport {
    orbit(g, MoveSet::Lc, mode, 1)
}

pub fn orbit(g: &Graph, moves: MoveSet, mode: Mode, threads: usize) -> OrbitReport {
    let members = orbit_members(g, moves, threads);
    let representative = members.iter().min().expect("orbit is nonempty").clone();
    let min_edge_representative = members
        .iter()
        .min_by_key(|f| (f.edge_count(), (*f).clone()))
        .expect("orbit is nonempty")
        .clone();
    let bipartite_sides = representative.graph().bipartition().map(|(a, b)| {
        (a.len().min(b.len()), a.len().max(b.len()))
    });
    let labelled_size = match mode {
        Mode::Unlabelled => None,
        Mode::Labelled => Some(labelled_orbit_size(g, moves)),
    };
    OrbitReport {
        unlabelled_size: members.len() as u64,
        labelled_size,
        representative,
        min_edge_representative,
        bipartite_sides,
    }
}

/// All isomorphism classes reachable from g, as canonical forms.
pub fn orbit_members(g: &Graph, moves: MoveSet, threads: usize) -> Vec<CanonicalForm> {
    let start = canonical_form(g);
    let mut seen: HashSet<CanonicalForm> = HashSet::new();
    let mut frontier: Vec<Graph> = vec![start.graph()];
    seen.insert(start);
    while !frontier.is_empty() {
        let produced: Vec<Vec<CanonicalForm>> = par::map_slice(&frontier, threads, |member| {
            let mut children = Vec::new();
            apply_moves(member, moves, &mut children);
            children.iter().map(canonical_form).collect()
        });
        let mut next = Vec::new();
        for child in produced.into_iter().flatten() {
            if !seen.contains(&child) {
                next.push(child.graph());
                seen.insert(child);
            }
        }
        frontier = next;
    }
    let mut members: Vec<CanonicalForm> = seen.into_iter().collect();
    members.sort();
    members
}

/// Number of labelled graphs reachable from g. Pivot uses the endpoint
/// swap convention, matching the ANF pivot formula.
pub fn labelled_orbit_size(g: &Graph, moves: MoveSet) -> u64 {
    labelled_orbit_members(g, moves).len() as u64
}

pub fn labelled_orbit_members(g: &Graph, moves: MoveSet) -> Vec<Graph> {
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut stack = vec![g.clone()];
    seen.insert(g.rows().to_vec());
    let mut scratch = Vec::new();
    while let Some(member) = stack.pop() {
        apply_moves(&member, moves, &mut scratch);
        for child in scratch.drain(..) {
            if seen.insert(child.rows().to_vec()) {
                stack.push(child);
            }
        }
    }
    let mut members: Vec<Graph> = seen.into_iter().map(|rows| {
        Graph::from_rows(rows).expect("stored rows are valid")
    }).collect();
    members.sort_by(|a, b| a.rows().cmp(b.rows()));
    members
}

/// One representative per isomorphism class of connected graphs on n
/// vertices, grown by attaching a fresh vertex to every nonempty subset of
/// every class on n-1 vertices. Every connected graph has a non-cut
/// vertex, so nothing is missed.
pub fn connected_graph_reps(n: usize, threads: usize) -> Vec<Graph> {
    assert!(n >= 1);
    let mut reps = vec![Graph::empty(1)];
    for size in 2..=n {
        reps = extend_reps(&reps, size, threads, false);
    }
    reps
}

/// One representative per isomorphism class of all graphs on n vertices
/// (the empty attachment set keeps disconnected classes).
pub fn all_graph_reps(n: usize, threads: usize) -> Vec<Graph> {
    assert!(n >= 1);
    let mut reps = vec![Graph::empty(1)];
    for size in 2..=n {
        reps = extend_reps(&reps, size, threads, true);
    }
    reps
}

fn extend_reps(prev: &[Graph], size: usize, threads: usize, allow_empty: bool) -> Vec<Graph> {
    let lo = if allow_empty { 0u32 } else { 1u32 };
    let forms: Vec<Vec<CanonicalForm>> = par::map_slice(prev, threads, |base| {
        let mut local = Vec::new();
        for mask in lo..1u32 << (size - 1) {
            let mut rows: Vec<u32> = base.rows().to_vec();
            rows.push(mask);
            for (i, row) in rows.iter_mut().enumerate().take(size - 1) {
                if mask >> i & 1 == 1 {
                    *row |= 1 << (size - 1);
                }
            }
            let g = Graph::from_rows(rows).expect("extension stays symmetric");
            local.push(canonical_form(&g));
        }
        local
    });
    let mut set: HashSet<CanonicalForm> = HashSet::new();
    for form in forms.into_iter().flatten() {
        set.insert(form);
    }
    let mut out: Vec<CanonicalForm> = set.into_iter().collect();
    out.sort();
    out.into_iter().map(|f| f.graph()).collect()
}

/// A classified orbit: its representative and the data the tables need.
#[derive(Clone, Debug)]
pub struct OrbitClass {
    pub rep: Graph,
    /// Orbit size in the relevant mode (isomorphism classes, or labelled
    /// graphs for labelled classification).
    pub size: u64,
    pub connected: bool,
    pub bipartite_sides: Option<(usize, usize)>,
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub n: usize,
    pub moves: MoveSet,
    pub universe: Universe,
    pub mode: Mode,
    pub classes: Vec<OrbitClass>,
}

impl Classification {
    pub fn orbit_count(&self) -> u64 {
        self.classes.len() as u64
    }
}

/// Partitions the chosen universe of graphs on n vertices into orbits.
///
/// Unlabelled universes run over isomorphism-class representatives; the
/// `all` variants derive their disconnected part from multisets of
/// connected orbits, since moves never leave a component. Labelled
/// universes are walked directly. Bipartite universes are only closed
/// under pivot, so LC there is rejected.
pub fn classify(
    n: usize,
    moves: MoveSet,
    universe: Universe,
    mode: Mode,
    threads: usize,
) -> Result<Classification> {
    if universe.bipartite() && moves == MoveSet::Lc {
        return Err(Error::InvalidInput(
            "local complementation does not preserve bipartiteness".into(),
        ));
    }
    let classes = match (mode, universe) {
        (Mode::Unlabelled, Universe::Connected) => {
            classify_reps(&connected_graph_reps(n, threads), moves, threads)
        }
        (Mode::Unlabelled, Universe::BipartiteConnected) => {
            bipartite_connected_classes(n, threads)
        }
        (Mode::Unlabelled, Universe::All) => {
            let connected: Vec<Vec<OrbitClass>> = (1..=n)
                .map(|k| classify_reps(&connected_graph_reps(k, threads), moves, threads))
                .collect();
            assemble_disconnected(n, &connected)
        }
        (Mode::Unlabelled, Universe::BipartiteAll) => {
            let connected: Vec<Vec<OrbitClass>> =
                (1..=n).map(|k| bipartite_connected_classes(k, threads)).collect();
            assemble_disconnected(n, &connected)
        }
        (Mode::Labelled, _) => classify_labelled(n, moves, universe)?,
    };
    Ok(Classification { n, moves, universe, mode, classes })
}

/// Partitions the given isomorphism-class representatives into orbits.
pub fn classify_reps(reps: &[Graph], moves: MoveSet, threads: usize) -> Vec<OrbitClass> {
    let mut sorted: Vec<CanonicalForm> = reps.iter().map(canonical_form).collect();
    sorted.sort();
    let mut seen: HashSet<CanonicalForm> = HashSet::new();
    let mut classes = Vec::new();
    for form in &sorted {
        if seen.contains(form) {
            continue;
        }
        let rep_graph = form.graph();
        let members = orbit_members(&rep_graph, moves, threads);
        let size = members.len() as u64;
        for m in members {
            seen.insert(m);
        }
        let sides = rep_graph
            .bipartition()
            .map(|(a, b)| (a.len().min(b.len()), a.len().max(b.len())));
        classes.push(OrbitClass {
            connected: rep_graph.is_connected(),
            bipartite_sides: sides,
            rep: rep_graph,
            size,
        });
    }
    classes
}

/// Connected bipartite orbits via the extension method: grow candidate
/// sets from the previous size's orbit representatives, attaching a new
/// vertex to every nonempty subset of one side. An (a,b)-bipartite graph
/// yields 2^a + 2^b - 2 extensions, and every orbit at the next size is
/// hit.
pub fn bipartite_connected_classes(n: usize, threads: usize) -> Vec<OrbitClass> {
    let mut classes = vec![OrbitClass {
        rep: Graph::empty(1),
        size: 1,
        connected: true,
        bipartite_sides: Some((0, 1)),
    }];
    for size in 2..=n {
        let prev_reps: Vec<Graph> = classes.iter().map(|c| c.rep.clone()).collect();
        let candidates = extend_bipartite(&prev_reps);
        classes = classify_candidates(&candidates, size, threads);
    }
    classes
}

fn classify_candidates(candidates: &[Graph], n: usize, threads: usize) -> Vec<OrbitClass> {
    let mut forms: Vec<CanonicalForm> =
        par::map_slice(candidates, threads, canonical_form);
    forms.sort();
    forms.dedup();
    let mut seen: HashSet<CanonicalForm> = HashSet::new();
    let mut classes = Vec::new();
    for form in &forms {
        if seen.contains(form) {
            continue;
        }
        debug_assert_eq!(form.n(), n);
        let rep_graph = form.graph();
        let members = orbit_members(&rep_graph, MoveSet::Pivot, threads);
        let size = members.len() as u64;
        for m in members {
            seen.insert(m);
        }
        let sides = rep_graph
            .bipartition()
            .map(|(a, b)| (a.len().min(b.len()), a.len().max(b.len())));
        classes.push(OrbitClass {
            connected: rep_graph.is_connected(),
            bipartite_sides: sides,
            rep: rep_graph,
            size,
        });
    }
    classes
}

/// All one-vertex extensions of the given connected bipartite graphs: the
/// new vertex joins every nonempty subset of one side and lands on the
/// other side.
pub fn extend_bipartite(reps: &[Graph]) -> Vec<Graph> {
    let mut out = Vec::new();
    for g in reps {
        let (side_a, side_b) = g
            .bipartition()
            .expect("extension inputs are bipartite");
        let n = g.n();
        for side in [&side_a, &side_b] {
            if side.is_empty() {
                continue;
            }
            for mask in 1u32..1 << side.len() {
                let mut rows: Vec<u32> = g.rows().to_vec();
                rows.push(0);
                for (bit, &v) in side.iter().enumerate() {
                    if mask >> bit & 1 == 1 {
                        rows[v] |= 1 << n;
                        rows[n] |= 1 << v;
                    }
                }
                out.push(Graph::from_rows(rows).expect("extension stays symmetric"));
            }
        }
    }
    out
}

/// Number of extensions the formula promises for an (a,b)-bipartite graph.
pub fn extension_count(a: usize, b: usize) -> u64 {
    (1u64 << a) + (1u64 << b) - 2
}

/// Orbit counts for graphs with several components: every orbit is a
/// multiset of connected orbits, assembled here both as counts and as
/// disjoint-union representatives.
fn assemble_disconnected(n: usize, connected_by_size: &[Vec<OrbitClass>]) -> Vec<OrbitClass> {
    let mut out = Vec::new();
    let mut partition: Vec<usize> = Vec::new();
    build_partitions(n, n, &mut partition, &mut |sizes| {
        let mut choices: Vec<Vec<usize>> = Vec::new();
        pick_multisets(sizes, 0, connected_by_size, &mut Vec::new(), &mut choices);
        for combo in choices {
            let parts: Vec<Graph> = sizes
                .iter()
                .zip(&combo)
                .map(|(&s, &idx)| connected_by_size[s - 1][idx].rep.clone())
                .collect();
            let rep = Graph::disjoint_union(&parts).expect("sizes sum to n <= 31");
            let size: u64 = sizes
                .iter()
                .zip(&combo)
                .map(|(&s, &idx)| connected_by_size[s - 1][idx].size)
                .product();
            let sides = rep
                .bipartition()
                .map(|(a, b)| (a.len().min(b.len()), a.len().max(b.len())));
            out.push(OrbitClass {
                connected: sizes.len() == 1,
                bipartite_sides: sides,
                rep,
                size,
            });
        }
    });
    out
}

fn build_partitions(
    remaining: usize,
    max_part: usize,
    current: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    if remaining == 0 {
        visit(current);
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        current.push(part);
        build_partitions(remaining - part, part, current, visit);
        current.pop();
    }
}

/// Index multisets: for equal sizes the indices are non-decreasing, so
/// each multiset of orbits appears once.
fn pick_multisets(
    sizes: &[usize],
    pos: usize,
    pool: &[Vec<OrbitClass>],
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if pos == sizes.len() {
        out.push(current.clone());
        return;
    }
    let lo = if pos > 0 && sizes[pos] == sizes[pos - 1] {
        current[pos - 1]
    } else {
        0
    };
    for idx in lo..pool[sizes[pos] - 1].len() {
        current.push(idx);
        pick_multisets(sizes, pos + 1, pool, current, out);
        current.pop();
    }
}

/// Total orbit counts for graphs allowed several components, from the
/// connected counts per size: the coefficient extraction of the product
/// over sizes k of (1 - x^k)^(-i_k).
pub fn euler_transform(connected: &[u64]) -> Vec<u64> {
    let n = connected.len();
    let mut coeff = vec![0u128; n + 1];
    coeff[0] = 1;
    for k in 1..=n {
        let types = connected[k - 1] as u128;
        if types == 0 {
            continue;
        }
        let mut next = vec![0u128; n + 1];
        for s in 0..=n {
            if coeff[s] == 0 {
                continue;
            }
            let mut m = 0usize;
            let mut ways = 1u128; // C(types + m - 1, m)
            while s + k * m <= n {
                next[s + k * m] += coeff[s] * ways;
                m += 1;
                ways = ways * (types + m as u128 - 1) / m as u128;
            }
        }
        coeff = next;
    }
    coeff[1..].iter().map(|&c| c as u64).collect()
}

const LABELLED_MAX_N: usize = 7;

fn classify_labelled(n: usize, moves: MoveSet, universe: Universe) -> Result<Vec<OrbitClass>> {
    if n > LABELLED_MAX_N {
        return Err(Error::BudgetExceeded(format!(
            "labelled classification walks all 2^(n(n-1)/2) graphs; n <= {LABELLED_MAX_N}"
        )));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let bits = pairs.len();
    let decode = |code: u64| -> Graph {
        let mut rows = vec![0u32; n];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if code >> i & 1 == 1 {
                rows[u] |= 1 << v;
                rows[v] |= 1 << u;
            }
        }
        Graph::from_rows(rows).expect("decoded adjacency is symmetric")
    };
    let encode = |g: &Graph| -> u64 {
        let mut code = 0u64;
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if g.has_edge(u, v) {
                code |= 1 << i;
            }
        }
        code
    };
    let total = 1u64 << bits;
    let in_universe = |g: &Graph| -> bool {
        (!universe.bipartite() || g.is_bipartite())
            && (!universe.connected() || g.is_connected())
    };
    let mut visited = vec![false; total as usize];
    let mut classes = Vec::new();
    let mut scratch = Vec::new();
    for code in 0..total {
        if visited[code as usize] {
            continue;
        }
        let seed = decode(code);
        if !in_universe(&seed) {
            // Do not mark: membership is orbit invariant, so anything
            // outside the universe is simply skipped.
            continue;
        }
        visited[code as usize] = true;
        let mut stack = vec![seed.clone()];
        let mut size = 1u64;
        let mut least = code;
        while let Some(member) = stack.pop() {
            apply_moves(&member, moves, &mut scratch);
            for child in scratch.drain(..) {
                let child_code = encode(&child);
                if !visited[child_code as usize] {
                    visited[child_code as usize] = true;
                    size += 1;
                    least = least.min(child_code);
                    stack.push(child);
                }
            }
        }
        let rep = decode(least);
        debug_assert_eq!(rep.is_connected(), seed.is_connected());
        let sides = rep
            .bipartition()
            .map(|(a, b)| (a.len().min(b.len()), a.len().max(b.len())));
        classes.push(OrbitClass {
            connected: rep.is_connected(),
            bipartite_sides: sides,
            rep,
            size,
        });
    }
    Ok(classes)
}

/// Writes orbit representatives in the database format: one canonical
/// hex-row line per orbit, sorted.
pub fn reps_to_database(classes: &[OrbitClass]) -> String {
    let mut lines: Vec<String> = classes
        .iter()
        .map(|c| canonical_form(&c.rep).to_line())
        .collect();
    lines.sort();
    let mut out = lines.join("\n");
    out.push('\n');
    out
}

/// Reads a representative database back into graphs.
pub fn reps_from_database(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| Ok(CanonicalForm::parse_line(l.trim())?.graph()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_is_a_pivot_fixed_point() {
        let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let report = pivot_orbit(&k3, Mode::Unlabelled);
        assert_eq!(report.unlabelled_size, 1);
    }

    #[test]
    fn star_orbit_counts_information_sets() {
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let report = pivot_orbit(&star, Mode::Labelled);
        assert_eq!(report.labelled_size, Some(4));
    }

    #[test]
    fn labelled_size_dominates_unlabelled_size() {
        let mut rng = crate::rng::SplitMix64::new(55);
        for _ in 0..40 {
            let n = 3 + rng.below(3) as usize;
            let pairs = n * (n - 1) / 2;
            let code = rng.below(1 << pairs);
            let mut edges = Vec::new();
            let mut idx = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if code >> idx & 1 == 1 {
                        edges.push((u, v));
                    }
                    idx += 1;
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            for moves in [MoveSet::Pivot, MoveSet::Lc] {
                let report = orbit(&g, moves, Mode::Labelled, 1);
                assert!(report.labelled_size.unwrap() >= report.unlabelled_size);
            }
        }
    }

    #[test]
    fn path_and_triangle_share_an_lc_orbit() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let members = orbit_members(&p3, MoveSet::Lc, 1);
        assert!(members.contains(&canonical_form(&k3)));
    }

    #[test]
    fn connected_rep_counts_match_the_census() {
        let expected = [1u64, 1, 2, 6, 21, 112];
        for (i, &want) in expected.iter().enumerate() {
            let reps = connected_graph_reps(i + 1, 1);
            assert_eq!(reps.len() as u64, want, "n={}", i + 1);
            assert!(reps.iter().all(|g| g.is_connected()));
        }
    }

    #[test]
    fn all_graph_rep_counts_match_the_census() {
        let expected = [1u64, 2, 4, 11, 34, 156];
        for (i, &want) in expected.iter().enumerate() {
            let reps = all_graph_reps(i + 1, 1);
            assert_eq!(reps.len() as u64, want, "n={}", i + 1);
        }
    }

    #[test]
    fn small_pivot_classification() {
        let c = classify(3, MoveSet::Pivot, Universe::Connected, Mode::Unlabelled, 1).unwrap();
        assert_eq!(c.orbit_count(), 2);
        let c = classify(4, MoveSet::Pivot, Universe::Connected, Mode::Unlabelled, 1).unwrap();
        assert_eq!(c.orbit_count(), 4);
        let c = classify(3, MoveSet::Pivot, Universe::All, Mode::Unlabelled, 1).unwrap();
        assert_eq!(c.orbit_count(), 4);
    }

    #[test]
    fn small_lc_classification() {
        let c = classify(4, MoveSet::Lc, Universe::Connected, Mode::Unlabelled, 1).unwrap();
        assert_eq!(c.orbit_count(), 2);
        let c = classify(5, MoveSet::Lc, Universe::Connected, Mode::Unlabelled, 1).unwrap();
        assert_eq!(c.orbit_count(), 4);
    }

    #[test]
    fn labelled_pivot_classification_small() {
        let c = classify(3, MoveSet::Pivot, Universe::All, Mode::Labelled, 1).unwrap();
        assert_eq!(c.orbit_count(), 6);
        let connected = c.classes.iter().filter(|cl| cl.connected).count();
        assert_eq!(connected, 2);
        let c = classify(4, MoveSet::Pivot, Universe::Connected, Mode::Labelled, 1).unwrap();
        assert_eq!(c.orbit_count(), 11);
    }

    #[test]
    fn bipartite_classification_small() {
        let c = classify(4, MoveSet::Pivot, Universe::BipartiteConnected, Mode::Unlabelled, 1)
            .unwrap();
        assert_eq!(c.orbit_count(), 2);
        let c = classify(6, MoveSet::Pivot, Universe::BipartiteConnected, Mode::Unlabelled, 1)
            .unwrap();
        assert_eq!(c.orbit_count(), 8);
        assert!(classify(4, MoveSet::Lc, Universe::BipartiteAll, Mode::Unlabelled, 1).is_err());
    }

    #[test]
    fn extension_counts_match_the_formula() {
        let k11 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let exts = extend_bipartite(std::slice::from_ref(&k11));
        assert_eq!(exts.len() as u64, extension_count(1, 1));
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let exts = extend_bipartite(&[p3]);
        assert_eq!(exts.len() as u64, extension_count(2, 1));
        assert!(exts.iter().all(|g| g.is_connected() && g.is_bipartite()));
    }

    #[test]
    fn euler_transform_reproduces_totals() {
        // Connected pivot orbit counts for n = 1..5 give the totals.
        assert_eq!(euler_transform(&[1, 1, 2, 4, 10]), vec![1, 2, 4, 9, 21]);
        assert_eq!(euler_transform(&[1, 1, 1, 2, 4]), vec![1, 2, 3, 6, 11]);
    }

    #[test]
    fn orbit_closure_stays_inside_the_member_set() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        for moves in [MoveSet::Pivot, MoveSet::Lc] {
            let members = orbit_members(&g, moves, 1);
            let set: HashSet<&CanonicalForm> = members.iter().collect();
            let mut scratch = Vec::new();
            for form in &members {
                apply_moves(&form.graph(), moves, &mut scratch);
                for child in scratch.drain(..) {
                    assert!(set.contains(&canonical_form(&child)));
                }
            }
        }
    }

    #[test]
    fn unlabelled_counts_ignore_the_swap_convention() {
        // Orbits computed with swap=false agree in size for n <= 6; the
        // no-swap walk is spliced in here by hand.
        for n in 4..=6usize {
            for rep in connected_graph_reps(n, 1).iter().take(12) {
                let with_swap = orbit_members(rep, MoveSet::Pivot, 1).len();
                let mut seen: HashSet<CanonicalForm> = HashSet::new();
                let start = canonical_form(rep);
                let mut frontier = vec![start.graph()];
                seen.insert(start);
                while let Some(member) = frontier.pop() {
                    for (u, v) in member.edges() {
                        let child = canonical_form(&member.pivot(u, v, false).unwrap());
                        if !seen.contains(&child) {
                            frontier.push(child.graph());
                            seen.insert(child);
                        }
                    }
                }
                assert_eq!(seen.len(), with_swap);
            }
        }
    }

    #[test]
    fn database_round_trip() {
        let classes = classify(4, MoveSet::Pivot, Universe::Connected, Mode::Unlabelled, 1)
            .unwrap()
            .classes;
        let text = reps_to_database(&classes);
        let graphs = reps_from_database(&text).unwrap();
        assert_eq!(graphs.len(), classes.len());
        assert_eq!(reps_to_database(&classify_reps(&graphs, MoveSet::Pivot, 1)), text);
    }

    #[test]
    fn consistency_between_connected_and_all_counts() {
        for n in 1..=5usize {
            let per_size: Vec<u64> = (1..=n)
                .map(|k| {
                    classify(k, MoveSet::Pivot, Universe::Connected, Mode::Unlabelled, 1)
                        .unwrap()
                        .orbit_count()
                })
                .collect();
            let all = classify(n, MoveSet::Pivot, Universe::All, Mode::Unlabelled, 1)
                .unwrap()
                .orbit_count();
            assert_eq!(euler_transform(&per_size)[n - 1], all);
        }
    }
}
