//! Binary linear codes, standard form, the bipartite-graph correspondence,
//! and code classification through pivot orbits.

use std::collections::HashSet;
use std::fmt;

use crate::anf::MAX_VARS;
use crate::error::{Error, Result};
use crate::gf2;
use crate::graph::Graph;
use crate::orbit::{
    bipartite_connected_classes, canonical_form_colored, euler_transform, CanonicalForm,
};

/// An `[n,k]` binary linear code given by k independent generator rows, each
/// an n-bit word (bit j = coordinate j).
#[derive(Clone, PartialEq, Eq)]
pub struct LinearCode {
    n: usize,
    k: usize,
    rows: Vec<u32>,
}

impl LinearCode {
    pub fn new(n: usize, rows: Vec<u32>) -> Result<Self> {
        if n > MAX_VARS {
            return Err(Error::TooManyVariables { n });
        }
        let k = rows.len();
        if k > n || gf2::rank(&rows) != k {
            return Err(Error::RankDeficient);
        }
        if rows.iter().any(|&r| n < 32 && r >> n != 0) {
            return Err(Error::InvalidInput("generator bits beyond length".into()));
        }
        Ok(LinearCode { n, k, rows })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    /// Equality as codes: the row spaces agree.
    pub fn same_code(&self, other: &LinearCode) -> bool {
        self.n == other.n && gf2::same_row_space(&self.rows, &other.rows, self.n)
    }

    /// Applies a coordinate permutation: coordinate j moves to `perm[j]`.
    pub fn permute(&self, perm: &[usize]) -> LinearCode {
        assert_eq!(perm.len(), self.n);
        let rows = self
            .rows
            .iter()
            .map(|&r| {
                let mut out = 0u32;
                for (from, &to) in perm.iter().enumerate() {
                    if r >> from & 1 == 1 {
                        out |= 1 << to;
                    }
                }
                out
            })
            .collect();
        LinearCode { n: self.n, k: self.k, rows }
    }

    /// The dual code: generated by the parity rows (P^T | I) carried back
    /// through the standard-form column permutation.
    pub fn dual(&self) -> LinearCode {
        let sf = self.standard_form().expect("constructor enforced full rank");
        let m = self.n - self.k;
        let mut rows = vec![0u32; m];
        for (j, row) in rows.iter_mut().enumerate() {
            // In permuted order: P^T row j, then identity at position k+j.
            for i in 0..self.k {
                if sf.p[i] >> j & 1 == 1 {
                    *row |= 1 << sf.col_perm[i];
                }
            }
            *row |= 1 << sf.col_perm[self.k + j];
        }
        LinearCode { n: self.n, k: m, rows }
    }

    /// Text form: `n k` then k rows of 0/1 characters, coordinate 0 first.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.k);
        for &row in &self.rows {
            for j in 0..self.n {
                s.push(if row >> j & 1 == 1 { '1' } else { '0' });
            }
            s.push('\n');
        }
        s
    }

    pub fn parse(input: &str) -> Result<Self> {
        let mut lines = input.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty code text".into()))?;
        let mut it = header.split_whitespace();
        let n: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse("bad length".into()))?;
        let k: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse("bad dimension".into()))?;
        let mut rows = Vec::with_capacity(k);
        for _ in 0..k {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse("missing generator row".into()))?
                .trim();
            if line.len() != n {
                return Err(Error::Parse(format!("row `{line}` is not {n} characters")));
            }
            let mut row = 0u32;
            for (j, c) in line.chars().enumerate() {
                match c {
                    '1' => row |= 1 << j,
                    '0' => {}
                    other => return Err(Error::Parse(format!("bad character `{other}`"))),
                }
            }
            rows.push(row);
        }
        Self::new(n, rows)
    }

    /// Row reduction to (I | P) with the information-set columns recorded.
    pub fn standard_form(&self) -> Result<StandardForm> {
        let mut rows = self.rows.clone();
        let pivots = gf2::rref(&mut rows, self.n);
        if pivots.len() != self.k {
            return Err(Error::RankDeficient);
        }
        let nonpivots: Vec<usize> = (0..self.n).filter(|c| !pivots.contains(c)).collect();
        // Order rows by pivot column so the identity block reads off.
        let mut ordered = vec![0u32; self.k];
        for &row in &rows {
            if row == 0 {
                continue;
            }
            let lead = row.trailing_zeros() as usize;
            let idx = pivots.iter().position(|&c| c == lead).expect("lead is a pivot");
            ordered[idx] = row;
        }
        let p = ordered
            .iter()
            .map(|&row| {
                let mut bits = 0u32;
                for (jj, &c) in nonpivots.iter().enumerate() {
                    if row >> c & 1 == 1 {
                        bits |= 1 << jj;
                    }
                }
                bits
            })
            .collect();
        let mut col_perm = pivots;
        col_perm.extend(nonpivots);
        Ok(StandardForm { k: self.k, m: self.n - self.k, p, col_perm })
    }
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearCode[{},{}]", self.n, self.k)?;
        for &row in &self.rows {
            write!(f, " {row:b}")?;
        }
        Ok(())
    }
}

/// Standard form (I | P) together with the column permutation that reaches
/// it: `col_perm[i]` is the original coordinate sitting at permuted
/// position i (the first k entries are the information set).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardForm {
    pub k: usize,
    pub m: usize,
    /// k rows of m bits.
    pub p: Vec<u32>,
    pub col_perm: Vec<usize>,
}

impl StandardForm {
    /// The generator (I | P) as a code on the permuted coordinates.
    pub fn code(&self) -> LinearCode {
        let rows: Vec<u32> = (0..self.k)
            .map(|i| (1u32 << i) | (self.p[i] << self.k))
            .collect();
        LinearCode::new(self.k + self.m, rows).expect("standard form has full rank")
    }

    /// The bipartite block graph: rows 0..k-1 on one side, columns
    /// k..n-1 on the other, adjacency P.
    pub fn graph(&self) -> Graph {
        block_graph(self.k, self.m, &self.p)
    }
}

fn block_graph(k: usize, m: usize, p: &[u32]) -> Graph {
    let mut rows = vec![0u32; k + m];
    for i in 0..k {
        for j in 0..m {
            if p[i] >> j & 1 == 1 {
                rows[i] |= 1 << (k + j);
                rows[k + j] |= 1 << i;
            }
        }
    }
    Graph::from_rows(rows).expect("block construction is symmetric")
}

/// The (k, n-k)-bipartite graph of the code's standard form.
pub fn graph_from_code(c: &LinearCode) -> Result<Graph> {
    Ok(c.standard_form()?.graph())
}

/// Reads a code off a bipartite graph: the listed vertices become the
/// information set (rows), every other vertex a redundancy coordinate.
/// Coordinates are ordered side_a then the rest.
pub fn code_from_graph(g: &Graph, side_a: &[usize]) -> Result<LinearCode> {
    let k = side_a.len();
    let n = g.n();
    let side_b: Vec<usize> = (0..n).filter(|v| !side_a.contains(v)).collect();
    for (x, &u) in side_a.iter().enumerate() {
        for &v in &side_a[x + 1..] {
            if g.has_edge(u, v) {
                return Err(Error::NotBipartite);
            }
        }
    }
    for (x, &u) in side_b.iter().enumerate() {
        for &v in &side_b[x + 1..] {
            if g.has_edge(u, v) {
                return Err(Error::NotBipartite);
            }
        }
    }
    let rows: Vec<u32> = side_a
        .iter()
        .enumerate()
        .map(|(i, &u)| {
            let mut row = 1u32 << i;
            for (j, &v) in side_b.iter().enumerate() {
                if g.has_edge(u, v) {
                    row |= 1 << (k + j);
                }
            }
            row
        })
        .collect();
    LinearCode::new(n, rows)
}

/// Pivot on entry (u, v) of the block matrix P (row u, column v), the
/// matrix image of pivoting the block graph on that edge and swapping the
/// endpoints: save column v, add row u to every other row carrying a 1 in
/// column v, put column v back.
pub fn pivot_p(p: &[u32], u: usize, v: usize) -> Result<Vec<u32>> {
    if p[u] >> v & 1 != 1 {
        return Err(Error::NotAnEdge { u, v });
    }
    let saved: Vec<bool> = p.iter().map(|&row| row >> v & 1 == 1).collect();
    let mut out: Vec<u32> = p
        .iter()
        .enumerate()
        .map(|(r, &row)| if r != u && row >> v & 1 == 1 { row ^ p[u] } else { row })
        .collect();
    for (r, row) in out.iter_mut().enumerate() {
        if saved[r] {
            *row |= 1 << v;
        } else {
            *row &= !(1 << v);
        }
    }
    Ok(out)
}

/// Least colour-respecting canonical form over the pivot orbit of the
/// code's block graph, rows side coloured 0. Two codes are equivalent
/// exactly when these agree, because pivoting tracks every move between
/// standard forms and the colouring pins which side carries the dimension.
fn colored_orbit_min(c: &LinearCode) -> Result<CanonicalForm> {
    let sf = c.standard_form()?;
    let (k, m) = (sf.k, sf.m);
    let colors: Vec<u32> = (0..k + m).map(|v| u32::from(v >= k)).collect();
    let start = sf.p.clone();
    let form_of = |p: &Vec<u32>| canonical_form_colored(&block_graph(k, m, p), &colors);
    let mut seen: HashSet<CanonicalForm> = HashSet::new();
    let mut stack = vec![start.clone()];
    seen.insert(form_of(&start));
    while let Some(p) = stack.pop() {
        for u in 0..k {
            for v in 0..m {
                if p[u] >> v & 1 == 1 {
                    let child = pivot_p(&p, u, v)?;
                    let form = form_of(&child);
                    if !seen.contains(&form) {
                        seen.insert(form);
                        stack.push(child);
                    }
                }
            }
        }
    }
    Ok(seen.into_iter().min().expect("orbit is nonempty"))
}

/// Code equivalence up to coordinate permutation, decided through the
/// pivot orbit of the side-coloured block graph.
pub fn equivalent(c1: &LinearCode, c2: &LinearCode) -> Result<bool> {
    if c1.n() != c2.n() || c1.k() != c2.k() {
        return Ok(false);
    }
    Ok(colored_orbit_min(c1)? == colored_orbit_min(c2)?)
}

/// A code equivalent to its dual.
pub fn is_isodual(c: &LinearCode) -> Result<bool> {
    if 2 * c.k() != c.n() {
        return Ok(false);
    }
    equivalent(c, &c.dual())
}

/// Number of information sets, walked as the basis-exchange closure: every
/// pivot replaces the row coordinate by the column coordinate, so each
/// state is an information set with its standard form attached.
pub fn information_set_count(c: &LinearCode) -> Result<u64> {
    let sf = c.standard_form()?;
    let (k, m) = (sf.k, sf.m);
    let mask_of = |cols: &[usize]| -> u32 { cols.iter().fold(0u32, |acc, &c| acc | 1 << c) };
    // coords[0..k-1] = original coordinate at each row, coords[k..] per column.
    let start_coords: Vec<usize> = sf.col_perm.clone();
    let mut seen: HashSet<u32> = HashSet::new();
    seen.insert(mask_of(&start_coords[..k]));
    let mut stack = vec![(sf.p.clone(), start_coords)];
    while let Some((p, coords)) = stack.pop() {
        for u in 0..k {
            for v in 0..m {
                if p[u] >> v & 1 == 1 {
                    let mut next_coords = coords.clone();
                    next_coords.swap(u, k + v);
                    let set = mask_of(&next_coords[..k]);
                    if seen.insert(set) {
                        stack.push((pivot_p(&p, u, v)?, next_coords));
                    }
                }
            }
        }
    }
    Ok(seen.len() as u64)
}

/// Direct enumeration oracle: k-subsets of coordinates with full rank.
pub fn information_set_count_brute(c: &LinearCode) -> u64 {
    let n = c.n();
    let k = c.k();
    let mut count = 0u64;
    for mask in 0u32..1 << n {
        if mask.count_ones() as usize != k {
            continue;
        }
        let restricted: Vec<u32> = c.rows().iter().map(|&r| r & mask).collect();
        if gf2::rank(&restricted) == k {
            count += 1;
        }
    }
    count
}

/// Classification of binary linear codes of length n from the pivot orbits
/// of connected bipartite graphs.
#[derive(Clone, Debug)]
pub struct CodeClassification {
    pub n: usize,
    /// Connected bipartite pivot orbits on n vertices.
    pub orbit_count: u64,
    /// Indecomposable codes of length n (all dimensions).
    pub indecomposable: u64,
    /// Indecomposable isodual codes of length n.
    pub isodual: u64,
    /// Indecomposable counts per dimension k (index k, length n+1).
    pub per_k: Vec<u64>,
    /// One representative code per orbit reading (code, then its dual for
    /// unequal sides).
    pub representatives: Vec<LinearCode>,
}

/// Each connected bipartite orbit with sides (a, b) carries an `[n,a]` code
/// and its `[n,b]` dual: two codes per orbit, collapsing to one when the
/// code is isodual (only possible for a = b). Orbits with an empty side
/// (the single vertex) only carry the k=1 reading.
pub fn classify_codes(n: usize, threads: usize) -> Result<CodeClassification> {
    let classes = bipartite_connected_classes(n, threads);
    let orbit_count = classes.len() as u64;
    let mut indecomposable = 0u64;
    let mut isodual = 0u64;
    let mut per_k = vec![0u64; n + 1];
    let mut representatives = Vec::new();
    for class in &classes {
        let (side_a, side_b) = class
            .rep
            .bipartition()
            .expect("orbit representatives are bipartite");
        let (small, large) = if side_a.len() <= side_b.len() {
            (side_a, side_b)
        } else {
            (side_b, side_a)
        };
        if small.is_empty() {
            // The single vertex: only the [1,1] reading is a code.
            let c = code_from_graph(&class.rep, &large)?;
            per_k[large.len()] += 1;
            indecomposable += 1;
            representatives.push(c);
            continue;
        }
        let code_small = code_from_graph(&class.rep, &small)?;
        if small.len() == large.len() {
            if is_isodual(&code_small)? {
                per_k[small.len()] += 1;
                indecomposable += 1;
                isodual += 1;
                representatives.push(code_small);
            } else {
                per_k[small.len()] += 2;
                indecomposable += 2;
                representatives.push(code_small.clone());
                representatives.push(code_small.dual());
            }
        } else {
            per_k[small.len()] += 1;
            per_k[large.len()] += 1;
            indecomposable += 2;
            representatives.push(code_small.clone());
            representatives.push(code_small.dual());
        }
    }
    Ok(CodeClassification { n, orbit_count, indecomposable, isodual, per_k, representatives })
}

/// Counts of codes decomposable into (positive-dimension) indecomposable
/// pieces, derived from the indecomposable counts per length: a direct sum
/// is a multiset of indecomposable codes.
pub fn total_code_counts(indecomposable_by_length: &[u64]) -> Vec<u64> {
    euler_transform(indecomposable_by_length)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbit::canonical_form;

    fn code(n: usize, rows: &[u32]) -> LinearCode {
        LinearCode::new(n, rows.to_vec()).unwrap()
    }

    #[test]
    fn standard_form_examples() {
        // Repetition [3,1]: already standard, P = (1 1).
        let c = code(3, &[0b111]);
        let sf = c.standard_form().unwrap();
        assert_eq!(sf.p, vec![0b11]);
        assert_eq!(sf.col_perm, vec![0, 1, 2]);

        // Rows 1100, 0111 reduce with pivots {0,1}.
        let c = code(4, &[0b0011, 0b1110]);
        let sf = c.standard_form().unwrap();
        assert_eq!(sf.col_perm[..2], [0, 1]);
        let std_code = sf.code();
        let perm_back: Vec<usize> = {
            let mut p = vec![0usize; 4];
            for (pos, &orig) in sf.col_perm.iter().enumerate() {
                p[pos] = orig;
            }
            p
        };
        assert!(std_code.permute(&perm_back).same_code(&c));

        // Already standard input returns P verbatim.
        let c = code(4, &[0b0101, 0b1010]);
        let sf = c.standard_form().unwrap();
        assert_eq!(sf.p, vec![0b01, 0b10]);
    }

    #[test]
    fn rank_deficiency_is_rejected() {
        assert!(LinearCode::new(3, vec![0b101, 0b101]).is_err());
    }

    #[test]
    fn def8_graphs() {
        // [3,1] repetition: star with centre 0.
        let g = graph_from_code(&code(3, &[0b111])).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (0, 2)]);
        // [2,1]: a single edge.
        let g = graph_from_code(&code(2, &[0b11])).unwrap();
        assert_eq!(g.edges(), vec![(0, 1)]);
    }

    #[test]
    fn code_graph_round_trip() {
        let c = code(5, &[0b10011, 0b01101]);
        let g = graph_from_code(&c).unwrap();
        let back = code_from_graph(&g, &[0, 1]).unwrap();
        // Equivalent up to the standard-form column permutation.
        assert!(equivalent(&c, &back).unwrap());
        assert!(code_from_graph(
            &Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap(),
            &[0, 1]
        )
        .is_err());
    }

    #[test]
    fn dual_relations() {
        let samples = [
            code(3, &[0b111]),
            code(4, &[0b0011, 0b1110]),
            code(5, &[0b10011, 0b01101]),
            code(7, &[0b1110000, 0b0011100, 0b0000111]),
        ];
        for c in &samples {
            let d = c.dual();
            assert_eq!(d.k(), c.n() - c.k());
            // Every generator row is orthogonal to every dual row.
            for &g in c.rows() {
                for &h in d.rows() {
                    assert_eq!((g & h).count_ones() % 2, 0);
                }
            }
            assert!(d.dual().same_code(c));
            // Code and dual share the same graph up to the choice of
            // information set, hence up to pivots.
            let orbit_min = |g: &Graph| {
                crate::orbit::orbit_members(g, crate::orbit::MoveSet::Pivot, 1)
                    .into_iter()
                    .min()
                    .unwrap()
            };
            assert_eq!(
                orbit_min(&graph_from_code(c).unwrap()),
                orbit_min(&graph_from_code(&d).unwrap())
            );
        }
    }

    #[test]
    fn pivot_p_examples() {
        assert_eq!(pivot_p(&[0b1], 0, 0).unwrap(), vec![0b1]);
        assert!(pivot_p(&[0b0], 0, 0).is_err());
        // P = {11, 01} (rows of bits v0 v1), pivot on (0,0): row 1 has 1
        // in column 0.
        let p = vec![0b11u32, 0b01];
        let out = pivot_p(&p, 0, 0).unwrap();
        assert_eq!(out, vec![0b11, 0b11]);
    }

    #[test]
    fn pivot_p_matches_graph_pivot() {
        // The matrix algorithm folds the endpoint swap back in, so it
        // equals the toggle-only graph pivot and keeps the block sides.
        let mut rng = crate::rng::SplitMix64::new(7);
        for _ in 0..200 {
            let k = 1 + rng.below(4) as usize;
            let m = 1 + rng.below(4) as usize;
            let p: Vec<u32> = (0..k).map(|_| rng.mask(m)).collect();
            let g = block_graph(k, m, &p);
            for u in 0..k {
                for v in 0..m {
                    if p[u] >> v & 1 == 1 {
                        let via_matrix = pivot_p(&p, u, v).unwrap();
                        let toggled = g.pivot(u, k + v, false).unwrap();
                        assert_eq!(block_graph(k, m, &via_matrix), toggled);
                        // With the swap it is the same graph relabelled.
                        let swapped = g.pivot(u, k + v, true).unwrap();
                        assert_eq!(
                            canonical_form(&toggled),
                            canonical_form(&swapped)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn coordinate_interchange_is_pivot_exhaustive_4x4() {
        // For every standard form P up to 4x4 and every 1-entry (u, v):
        // swapping coordinates u and k+v of (I | P) and re-standardizing
        // equals the matrix pivot.
        for k in 1..=4usize {
            for m in 1..=4usize {
                for codebits in 0u64..1 << (k * m) {
                    let p: Vec<u32> = (0..k)
                        .map(|i| ((codebits >> (i * m)) & ((1 << m) - 1)) as u32)
                        .collect();
                    let gen: Vec<u32> = (0..k)
                        .map(|i| (1u32 << i) | (p[i] << k))
                        .collect();
                    let c = LinearCode::new(k + m, gen).unwrap();
                    for u in 0..k {
                        for v in 0..m {
                            if p[u] >> v & 1 != 1 {
                                continue;
                            }
                            let mut perm: Vec<usize> = (0..k + m).collect();
                            perm.swap(u, k + v);
                            let swapped = c.permute(&perm);
                            let sf = swapped.standard_form().unwrap();
                            assert_eq!(sf.col_perm, (0..k + m).collect::<Vec<_>>());
                            assert_eq!(sf.p, pivot_p(&p, u, v).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn equivalence_under_random_permutation() {
        let mut rng = crate::rng::SplitMix64::new(99);
        let samples = [
            code(4, &[0b0011, 0b1110]),
            code(5, &[0b10011, 0b01101]),
            code(6, &[0b100110, 0b010101, 0b001011]),
        ];
        for c in &samples {
            let mut perm: Vec<usize> = (0..c.n()).collect();
            for i in (1..perm.len()).rev() {
                let j = rng.below(i as u64 + 1) as usize;
                perm.swap(i, j);
            }
            let shuffled = c.permute(&perm);
            assert!(equivalent(c, &shuffled).unwrap());
        }
    }

    #[test]
    fn duals_of_unequal_dimension_are_inequivalent() {
        let rep = code(3, &[0b111]);
        let parity = rep.dual();
        assert_eq!(parity.k(), 2);
        assert!(!equivalent(&rep, &parity).unwrap());
    }

    #[test]
    fn distinct_classification_members_are_inequivalent() {
        // Any two [6,3] representatives from the classification are
        // mutually inequivalent by construction.
        let result = classify_codes(6, 1).unwrap();
        let threes: Vec<&LinearCode> =
            result.representatives.iter().filter(|c| c.k() == 3).collect();
        assert_eq!(threes.len(), 5);
        for (i, a) in threes.iter().enumerate() {
            for b in threes.iter().skip(i + 1) {
                assert!(!equivalent(a, b).unwrap());
            }
        }
    }

    #[test]
    fn isodual_detection() {
        // [2,1] repetition is isodual.
        assert!(is_isodual(&code(2, &[0b11])).unwrap());
        // [4,2] with P = I is a direct sum of two of those: still isodual.
        assert!(is_isodual(&code(4, &[0b0101, 0b1010])).unwrap());
        // [4,2] even-weight-ish code with P = (11, 10):
        let c = code(4, &[0b0111, 0b1010]);
        let d = c.dual();
        assert_eq!(equivalent(&c, &d).unwrap(), is_isodual(&c).unwrap());
    }

    #[test]
    fn information_sets_small_codes() {
        assert_eq!(information_set_count(&code(3, &[0b111])).unwrap(), 3);
        assert_eq!(information_set_count(&code(2, &[0b11])).unwrap(), 2);
        // [7,4] Hamming code.
        let hamming = code(7, &[0b1101000, 0b0110100, 0b1110010, 0b1010001]);
        let brute = information_set_count_brute(&hamming);
        assert_eq!(information_set_count(&hamming).unwrap(), brute);
        assert!(brute > 0);
    }

    #[test]
    fn information_sets_match_brute_force_randomized() {
        let mut rng = crate::rng::SplitMix64::new(2718);
        let mut tried = 0;
        while tried < 60 {
            let n = 3 + rng.below(5) as usize;
            let k = 1 + rng.below(n as u64 - 1) as usize;
            let rows: Vec<u32> = (0..k).map(|_| rng.mask(n)).collect();
            let Ok(c) = LinearCode::new(n, rows) else { continue };
            tried += 1;
            assert_eq!(
                information_set_count(&c).unwrap(),
                information_set_count_brute(&c),
                "{c:?}"
            );
        }
    }

    #[test]
    fn classify_codes_small_lengths() {
        let expect_indec = [1u64, 1, 2, 3, 6, 13];
        for n in 1..=6usize {
            let result = classify_codes(n, 1).unwrap();
            assert_eq!(result.indecomposable, expect_indec[n - 1], "n={n}");
        }
        let n6 = classify_codes(6, 1).unwrap();
        assert_eq!(n6.isodual, 3);
        assert_eq!(n6.orbit_count, 8);
        let n2 = classify_codes(2, 1).unwrap();
        assert_eq!((n2.indecomposable, n2.isodual), (1, 1));
    }

    #[test]
    fn total_counts_come_from_indecomposable_ones() {
        // Multisets of indecomposables: {1}; {2},{1,1}; {3},{2,1},{1,1,1};
        // {4},{3,1},{2,2},{2,1,1},{1,1,1,1} with 3,2,1,1,1 choices.
        let totals = total_code_counts(&[1, 1, 2, 3]);
        assert_eq!(totals, vec![1, 2, 4, 8]);
    }

    #[test]
    fn text_round_trip() {
        let c = code(5, &[0b10011, 0b01101]);
        let parsed = LinearCode::parse(&c.to_text()).unwrap();
        assert_eq!(parsed, c);
        assert!(LinearCode::parse("3 1\n12x\n").is_err());
        assert!(LinearCode::parse("3 2\n111\n111\n").is_err());
    }
}
