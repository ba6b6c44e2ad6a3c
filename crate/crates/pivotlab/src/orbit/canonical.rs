//! Canonical labelling: the vertex ordering minimizing the column-wise
//! upper-triangle bit string of the permuted adjacency matrix.
//!
//! The search places one vertex per position. Only candidates whose
//! adjacency column to the placed prefix is minimal can reach the minimum,
//! ties collapse further when two candidates are twins, and a global
//! best-prefix bound prunes the rest. A full permutation sweep is kept as
//! the correctness oracle for small sizes.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::Result;
use crate::graph::Graph;

/// Canonically relabelled adjacency plus a certificate hash. Isomorphic
/// graphs produce identical values; the rows are the all-permutations
/// lexicographic minimum of the encoding.
#[derive(Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    n: usize,
    rows: Vec<u32>,
    cert: u64,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn cert(&self) -> u64 {
        self.cert
    }

    pub fn graph(&self) -> Graph {
        Graph::from_rows(self.rows.clone()).expect("canonical rows are a valid graph")
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Database line `<n>:<hex row>,...`, bit j of a row = adjacency to j.
    pub fn to_line(&self) -> String {
        let rows: Vec<String> = self.rows.iter().map(|r| format!("{r:x}")).collect();
        format!("{}:{}", self.n, rows.join(","))
    }

    /// Reads a database line back; the input is re-canonicalized, so a
    /// line written from any labelling of the same graph parses equal.
    pub fn parse_line(line: &str) -> Result<Self> {
        let g = Graph::parse_hex(line)?;
        Ok(canonical_form(&g))
    }
}

impl PartialOrd for CanonicalForm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CanonicalForm {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| self.rows.cmp(&other.rows))
    }
}

impl Hash for CanonicalForm {
    fn hash<H: Hasher>(&self, state: &mut H) {
        // The certificate is the hash; equality still compares the full
        // encoding, so collisions only cost a probe.
        state.write_u64(self.cert);
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.to_line())
    }
}

fn fnv1a(rows: &[u32], n: usize) -> u64 {
    let mut h = 0xcbf2_9ce4_8422_2325u64;
    let mut mix = |v: u64| {
        h ^= v;
        h = h.wrapping_mul(0x1000_0000_01b3);
    };
    mix(n as u64);
    for &r in rows {
        mix(r as u64);
    }
    h
}

/// Canonical form ignoring any colouring.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let n = g.n();
    let order = minimal_order(g, &[(0..n).collect()]);
    form_from_order(g, &order)
}

/// Canonical form of a vertex-coloured graph: only orderings listing the
/// colour classes in ascending colour value are considered, so two
/// coloured graphs with the same class sizes compare equal exactly when a
/// colour-preserving isomorphism exists.
pub fn canonical_form_colored(g: &Graph, colors: &[u32]) -> CanonicalForm {
    let n = g.n();
    assert_eq!(colors.len(), n);
    let mut values: Vec<u32> = colors.to_vec();
    values.sort_unstable();
    values.dedup();
    let classes: Vec<Vec<usize>> = values
        .iter()
        .map(|&c| (0..n).filter(|&v| colors[v] == c).collect())
        .collect();
    let order = minimal_order(g, &classes);
    form_from_order(g, &order)
}

fn form_from_order(g: &Graph, order: &[usize]) -> CanonicalForm {
    let n = g.n();
    let mut position = vec![0usize; n];
    for (pos, &v) in order.iter().enumerate() {
        position[v] = pos;
    }
    let mut rows = vec![0u32; n];
    for (pos, &v) in order.iter().enumerate() {
        for (w, &target) in position.iter().enumerate() {
            if g.has_edge(v, w) {
                rows[pos] |= 1 << target;
            }
        }
    }
    let cert = fnv1a(&rows, n);
    CanonicalForm { n, rows, cert }
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    /// Vertices still to place once the current class is exhausted.
    classes: &'a [Vec<usize>],
    best_key: Option<Vec<u64>>,
    best_order: Vec<usize>,
}

fn minimal_order(g: &Graph, classes: &[Vec<usize>]) -> Vec<usize> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let mut search = Search { g, n, classes, best_key: None, best_order: Vec::new() };
    let mut order = Vec::with_capacity(n);
    let key = vec![0u64; (n * (n - 1) / 2).div_ceil(64).max(1)];
    search.place(&mut order, 0, &key, 0);
    search.best_order
}

impl Search<'_> {
    fn place(&mut self, order: &mut Vec<usize>, used: u32, key: &[u64], bits: usize) {
        if order.len() == self.n {
            let better = match &self.best_key {
                None => true,
                Some(best) => key < &best[..],
            };
            if better {
                self.best_key = Some(key.to_vec());
                self.best_order = order.clone();
            }
            return;
        }
        // The active colour class is the first one not fully placed;
        // orderings never interleave classes.
        let class = self
            .classes
            .iter()
            .find(|c| c.iter().any(|&v| used >> v & 1 == 0))
            .expect("some vertex remains");
        let t = order.len();

        // Column of a candidate: its adjacency to the placed prefix, most
        // recent placement in the least significant bit... the packing
        // below writes bits prefix-first, so compare as plain integers
        // built prefix-first.
        let column = |v: usize| -> u64 {
            let mut c = 0u64;
            for (pos, &w) in order.iter().enumerate() {
                if self.g.has_edge(v, w) {
                    c |= 1 << (t - 1 - pos);
                }
            }
            c
        };
        let mut candidates: Vec<(u64, usize)> = class
            .iter()
            .filter(|&&v| used >> v & 1 == 0)
            .map(|&v| (column(v), v))
            .collect();
        let min_col = candidates.iter().map(|&(c, _)| c).min().expect("nonempty");
        candidates.retain(|&(c, _)| c == min_col);
        candidates.sort_unstable_by_key(|&(_, v)| v);

        // Twin skipping: tied candidates with identical neighbourhoods on
        // the unplaced region are exchanged by an automorphism, so one
        // subtree stands for both.
        let full = if self.n == 32 { u32::MAX } else { (1u32 << self.n) - 1 };
        let unplaced = full & !used;
        let mut kept: Vec<usize> = Vec::with_capacity(candidates.len());
        'cand: for &(_, v) in &candidates {
            for &u in &kept {
                let rest = unplaced & !(1 << u) & !(1 << v);
                if self.g.neighbours(u) & rest == self.g.neighbours(v) & rest {
                    continue 'cand;
                }
            }
            kept.push(v);
        }

        for v in kept {
            // Append this column to the key, prefix-first packing.
            let mut scratch = key.to_vec();
            let mut pos_bits = bits;
            for &w in order.iter() {
                if self.g.has_edge(v, w) {
                    scratch[pos_bits / 64] |= 1u64 << (63 - pos_bits % 64);
                }
                pos_bits += 1;
            }
            if let Some(best) = &self.best_key {
                if prefix_cmp(&scratch, best, pos_bits) == Ordering::Greater {
                    continue;
                }
            }
            order.push(v);
            self.place(order, used | 1 << v, &scratch, pos_bits);
            order.pop();
        }
    }
}

fn prefix_cmp(a: &[u64], b: &[u64], bits: usize) -> Ordering {
    let full = bits / 64;
    for i in 0..full {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => {}
            other => return other,
        }
    }
    let rem = bits % 64;
    if rem == 0 {
        return Ordering::Equal;
    }
    let mask = !0u64 << (64 - rem);
    (a[full] & mask).cmp(&(b[full] & mask))
}

/// Packs the column-wise upper triangle of the ordered adjacency into
/// words, most significant bit first.
fn pack_key(g: &Graph, order: &[usize]) -> Vec<u64> {
    let t = order.len();
    let bits = t * t.saturating_sub(1) / 2;
    let mut key = vec![0u64; bits.div_ceil(64).max(1)];
    let mut pos = 0usize;
    for col in 1..t {
        for row in 0..col {
            if g.has_edge(order[row], order[col]) {
                key[pos / 64] |= 1u64 << (63 - pos % 64);
            }
            pos += 1;
        }
    }
    key
}

/// Minimum over every permutation; the independent oracle for the search.
pub fn brute_force_canonical(g: &Graph) -> CanonicalForm {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    let mut best: Option<(Vec<u64>, Vec<usize>)> = None;
    permute(&mut order, 0, &mut |perm| {
        let key = pack_key(g, perm);
        let better = match &best {
            None => true,
            Some((bk, _)) => key < *bk,
        };
        if better {
            best = Some((key, perm.to_vec()));
        }
    });
    let (_, order) = best.expect("at least one permutation");
    form_from_order(g, &order)
}

fn permute(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_graphs(n: usize) -> Vec<Graph> {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .collect();
        (0u32..1 << pairs.len())
            .map(|code| {
                let edges: Vec<(usize, usize)> = pairs
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| code >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                Graph::from_edges(n, &edges).unwrap()
            })
            .collect()
    }

    #[test]
    fn all_labelings_of_a_path_agree() {
        let p = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let forms: Vec<CanonicalForm> = [
            vec![0, 1, 2],
            vec![0, 2, 1],
            vec![1, 0, 2],
            vec![2, 1, 0],
            vec![1, 2, 0],
            vec![2, 0, 1],
        ]
        .iter()
        .map(|perm| canonical_form(&p.relabel(perm)))
        .collect();
        assert!(forms.windows(2).all(|w| w[0] == w[1]));
    }

    #[test]
    fn k4_minus_edge_has_one_form() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let base = canonical_form(&g);
        let order: Vec<usize> = (0..4).collect();
        permute(&mut order.clone(), 0, &mut |perm| {
            assert_eq!(canonical_form(&g.relabel(perm)), base);
        });
        assert_eq!(base, brute_force_canonical(&g));
    }

    #[test]
    fn search_matches_brute_force_exhaustively_small() {
        for n in 1..=5usize {
            for g in all_graphs(n) {
                assert_eq!(canonical_form(&g), brute_force_canonical(&g), "{g:?}");
            }
        }
    }

    #[test]
    fn search_matches_brute_force_exhaustively_n6() {
        // Every labelled graph on six vertices against all 720
        // permutations.
        for g in all_graphs(6) {
            assert_eq!(canonical_form(&g), brute_force_canonical(&g), "{g:?}");
        }
    }

    #[test]
    fn search_matches_brute_force_sampled_n7() {
        let mut rng = crate::rng::SplitMix64::new(123);
        for n in [7usize] {
            for _ in 0..300 {
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
                assert_eq!(canonical_form(&g), brute_force_canonical(&g));
            }
        }
    }

    #[test]
    fn highly_symmetric_graphs_terminate_quickly() {
        let empty = Graph::empty(12);
        assert_eq!(canonical_form(&empty).edge_count(), 0);
        let complete = Graph::from_quadratic(&crate::anf::clique_function(12)).unwrap();
        assert_eq!(canonical_form(&complete).edge_count(), 66);
        // Balanced complete bipartite: the twin classes keep this cheap.
        let mut edges = Vec::new();
        for u in 0..6 {
            for v in 6..12 {
                edges.push((u, v));
            }
        }
        let kb = Graph::from_edges(12, &edges).unwrap();
        assert_eq!(canonical_form(&kb).edge_count(), 36);
    }

    #[test]
    fn colored_form_separates_sides() {
        // Rotating C4 maps the colouring {0,2} onto {1,3}, so the forms
        // agree; the sides of P3 have different sizes, so they cannot.
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let f1 = canonical_form_colored(&c4, &[0, 1, 0, 1]);
        let f2 = canonical_form_colored(&c4, &[1, 0, 1, 0]);
        assert_eq!(f1, f2);
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let a = canonical_form_colored(&p3, &[0, 1, 0]);
        let b = canonical_form_colored(&p3, &[1, 0, 1]);
        assert_ne!(a, b);
    }

    #[test]
    fn colored_form_invariant_under_color_preserving_relabel() {
        let g = Graph::from_edges(5, &[(0, 3), (1, 3), (1, 4), (2, 4)]).unwrap();
        let colors = [0u32, 0, 0, 1, 1];
        let base = canonical_form_colored(&g, &colors);
        // Relabel within the classes {0,1,2} and {3,4}.
        for perm in [[1, 2, 0, 4, 3], [2, 0, 1, 3, 4], [1, 0, 2, 4, 3]] {
            let h = g.relabel(&perm);
            let mut moved = [0u32; 5];
            for (from, &to) in perm.iter().enumerate() {
                moved[to] = colors[from];
            }
            assert_eq!(canonical_form_colored(&h, &moved), base);
        }
    }

    #[test]
    fn colored_brute_force_agreement_small() {
        // Exhaustive n <= 4 with a 2-colouring: compare against the
        // minimum over colour-respecting permutations.
        for n in 2..=4usize {
            for g in all_graphs(n) {
                for color_mask in 0u32..1 << n {
                    let colors: Vec<u32> = (0..n).map(|v| color_mask >> v & 1).collect();
                    let fast = canonical_form_colored(&g, &colors);
                    // Brute force over permutations sending class 0 first.
                    let mut best: Option<Vec<u64>> = None;
                    let mut best_rows: Option<Vec<u32>> = None;
                    let mut order: Vec<usize> = (0..n).collect();
                    permute(&mut order, 0, &mut |perm| {
                        let mut last = 0u32;
                        for &v in perm {
                            if colors[v] < last {
                                return;
                            }
                            last = colors[v];
                        }
                        let key = pack_key(&g, perm);
                        if best.is_none() || key < *best.as_ref().unwrap() {
                            best = Some(key);
                            best_rows = Some(form_from_order(&g, perm).rows.clone());
                        }
                    });
                    assert_eq!(fast.rows(), best_rows.unwrap());
                }
            }
        }
    }

    #[test]
    fn database_line_round_trip() {
        let g = Graph::from_edges(5, &[(0, 2), (1, 4), (2, 3)]).unwrap();
        let form = canonical_form(&g);
        let parsed = CanonicalForm::parse_line(&form.to_line()).unwrap();
        assert_eq!(parsed, form);
        // Any labelling parses to the same canonical line.
        let relabeled = g.relabel(&[4, 2, 0, 1, 3]);
        assert_eq!(CanonicalForm::parse_line(&relabeled.to_hex()).unwrap(), form);
    }
}
