//! Simple undirected graphs with bit-row adjacency, the local
//! complementation and pivot operations, and the hypergraph pivot carried
//! out on ANF.

use std::fmt;

use crate::anf::{BooleanFunction, Monomial, MAX_VARS};
use crate::error::{Error, Result};

/// Simple undirected graph on up to 31 vertices. Row i holds the
/// neighbourhood of i as a bitmask; the matrix stays symmetric with a zero
/// diagonal. Ordering compares (n, rows) and only serves determinism.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u32>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VARS, "at most {MAX_VARS} vertices supported");
        Graph { n, rows: vec![0; n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::InvalidInput(format!("loop at vertex {u}")));
            }
            g.rows[u] |= 1 << v;
            g.rows[v] |= 1 << u;
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, validating symmetry.
    pub fn from_rows(rows: Vec<u32>) -> Result<Self> {
        let n = rows.len();
        if n > MAX_VARS {
            return Err(Error::TooManyVariables { n });
        }
        for i in 0..n {
            if rows[i] >> n != 0 {
                return Err(Error::InvalidInput(format!("row {i} has bits beyond n")));
            }
            if rows[i] >> i & 1 == 1 {
                return Err(Error::InvalidInput(format!("nonzero diagonal at {i}")));
            }
            for j in 0..i {
                if rows[i] >> j & 1 != rows[j] >> i & 1 {
                    return Err(Error::InvalidInput(format!("asymmetry at ({i},{j})")));
                }
            }
        }
        Ok(Graph { n, rows })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn neighbours(&self, i: usize) -> u32 {
        self.rows[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.rows[i].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.rows[u] >> v & 1 == 1
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    fn check_vertex(&self, i: usize) -> Result<()> {
        if i < self.n {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: i, n: self.n })
        }
    }

    /// Complements the subgraph induced on the neighbourhood of i.
    pub fn local_complement(&self, i: usize) -> Result<Self> {
        self.check_vertex(i)?;
        let nb = self.rows[i];
        let mut out = self.clone();
        let mut rest = nb;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            out.rows[u] ^= nb & !(1 << u);
        }
        Ok(out)
    }

    /// Pivot on the edge uv: toggles every pair lying in two distinct
    /// classes among N(u)\N(v), N(v)\N(u), and N(u) n N(v). With `swap` the
    /// labels of u and v are exchanged afterwards, which matches the
    /// composition LC(u) LC(v) LC(u).
    pub fn pivot(&self, u: usize, v: usize, swap: bool) -> Result<Self> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge { u, v });
        }
        let bu = 1u32 << u;
        let bv = 1u32 << v;
        let only_u = self.rows[u] & !self.rows[v] & !bv;
        let only_v = self.rows[v] & !self.rows[u] & !bu;
        let both = self.rows[u] & self.rows[v];
        let mut out = self.clone();
        for (class, others) in [
            (only_u, only_v | both),
            (only_v, only_u | both),
            (both, only_u | only_v),
        ] {
            let mut rest = class;
            while rest != 0 {
                let x = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                out.rows[x] ^= others;
            }
        }
        if swap {
            out.swap_labels(u, v);
        }
        Ok(out)
    }

    fn swap_labels(&mut self, u: usize, v: usize) {
        self.rows.swap(u, v);
        let bu = 1u32 << u;
        let bv = 1u32 << v;
        for row in &mut self.rows {
            let u_bit = *row & bu != 0;
            let v_bit = *row & bv != 0;
            *row &= !(bu | bv);
            if u_bit {
                *row |= bv;
            }
            if v_bit {
                *row |= bu;
            }
        }
    }

    /// Relabels vertices: vertex i moves to position `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        let mut rows = vec![0u32; self.n];
        for i in 0..self.n {
            for j in 0..self.n {
                if self.rows[i] >> j & 1 == 1 {
                    rows[perm[i]] |= 1 << perm[j];
                }
            }
        }
        Graph { n: self.n, rows }
    }

    /// A proper 2-coloring if one exists. Each component is colored by BFS
    /// with its smallest vertex on the first side, so the output is
    /// deterministic.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let mut color = vec![u8::MAX; self.n];
        for start in 0..self.n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = vec![start];
            while let Some(v) = queue.pop() {
                for w in 0..self.n {
                    if self.has_edge(v, w) {
                        if color[w] == u8::MAX {
                            color[w] = 1 - color[v];
                            queue.push(w);
                        } else if color[w] == color[v] {
                            return None;
                        }
                    }
                }
            }
        }
        let side_a = (0..self.n).filter(|&i| color[i] == 0).collect();
        let side_b = (0..self.n).filter(|&i| color[i] == 1).collect();
        Some((side_a, side_b))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = vec![start];
            seen[start] = true;
            while let Some(v) = queue.pop() {
                comp.push(v);
                let mut rest = self.rows[v];
                while rest != 0 {
                    let w = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    if !seen[w] {
                        seen[w] = true;
                        queue.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Induced subgraph; vertex `vertices[i]` becomes vertex i.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let mut g = Self::empty(vertices.len());
        for (a, &u) in vertices.iter().enumerate() {
            for (b, &v) in vertices.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    g.rows[a] |= 1 << b;
                    g.rows[b] |= 1 << a;
                }
            }
        }
        g
    }

    pub fn disjoint_union(parts: &[Graph]) -> Result<Self> {
        let n: usize = parts.iter().map(|g| g.n).sum();
        if n > MAX_VARS {
            return Err(Error::TooManyVariables { n });
        }
        let mut g = Self::empty(n);
        let mut offset = 0;
        for part in parts {
            for i in 0..part.n {
                g.rows[offset + i] = part.rows[i] << offset;
            }
            offset += part.n;
        }
        Ok(g)
    }

    /// Exact clique number by branch and bound over candidate bitmasks.
    pub fn max_clique_size(&self) -> usize {
        fn grow(g: &Graph, current: usize, candidates: u32, best: &mut usize) {
            if current + candidates.count_ones() as usize <= *best {
                return;
            }
            if candidates == 0 {
                *best = (*best).max(current);
                return;
            }
            let v = candidates.trailing_zeros() as usize;
            // Branch: v in the clique, then v excluded.
            grow(g, current + 1, candidates & g.rows[v], best);
            grow(g, current, candidates & !(1 << v), best);
        }
        let mut best = 0;
        let all = if self.n == 32 { u32::MAX } else { (1u32 << self.n) - 1 };
        grow(self, 0, all, &mut best);
        best
    }

    /// True when `clique` induces a complete subgraph.
    pub fn is_clique(&self, clique: &[usize]) -> Result<()> {
        for (a, &u) in clique.iter().enumerate() {
            for &v in &clique[a + 1..] {
                if !self.has_edge(u, v) {
                    return Err(Error::NotAClique { u, v });
                }
            }
        }
        Ok(())
    }

    /// Quadratic Boolean function whose terms are the edges.
    pub fn to_quadratic(&self) -> BooleanFunction {
        BooleanFunction::from_terms(
            self.n,
            self.edges()
                .into_iter()
                .map(|(u, v)| Monomial(1 << u | 1 << v)),
        )
    }

    /// Graph of a quadratic function; affine terms are ignored.
    pub fn from_quadratic(f: &BooleanFunction) -> Result<Self> {
        if f.degree() > 2 {
            return Err(Error::InvalidInput(format!(
                "degree {} function has no graph",
                f.degree()
            )));
        }
        let mut g = Self::empty(f.n());
        for t in f.terms() {
            if t.degree() == 2 {
                let mut vars = t.vars();
                let u = vars.next().unwrap();
                let v = vars.next().unwrap();
                g.rows[u] |= 1 << v;
                g.rows[v] |= 1 << u;
            }
        }
        Ok(g)
    }

    /// Text form: first line `n=<int>`, then one `u v` line per edge in
    /// lexicographic order. `parse` also accepts the hex-row form emitted
    /// by the orbit representative files.
    pub fn to_text(&self) -> String {
        let mut s = format!("n={}\n", self.n);
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    pub fn to_hex(&self) -> String {
        let rows: Vec<String> = self.rows.iter().map(|r| format!("{r:x}")).collect();
        format!("{}:{}", self.n, rows.join(","))
    }

    pub fn parse(input: &str) -> Result<Self> {
        let trimmed = input.trim();
        if trimmed.lines().next().is_some_and(|l| l.contains(':')) {
            return Self::parse_hex(trimmed);
        }
        let mut lines = trimmed.lines();
        let header = lines.next().ok_or_else(|| Error::Parse("empty graph text".into()))?;
        let n: usize = header
            .trim()
            .strip_prefix("n=")
            .ok_or_else(|| Error::Parse("expected `n=<int>` header".into()))?
            .trim()
            .parse()
            .map_err(|_| Error::Parse("bad vertex count".into()))?;
        if n > MAX_VARS {
            return Err(Error::TooManyVariables { n });
        }
        let mut edges = Vec::new();
        for line in lines {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let mut it = line.split_whitespace();
            let u: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad edge line `{line}`")))?;
            let v: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad edge line `{line}`")))?;
            if it.next().is_some() {
                return Err(Error::Parse(format!("trailing tokens in `{line}`")));
            }
            edges.push((u, v));
        }
        Self::from_edges(n, &edges)
    }

    pub fn parse_hex(input: &str) -> Result<Self> {
        let (n_str, rows_str) = input
            .trim()
            .split_once(':')
            .ok_or_else(|| Error::Parse("expected `<n>:<hex rows>`".into()))?;
        let n: usize = n_str
            .parse()
            .map_err(|_| Error::Parse("bad vertex count".into()))?;
        let rows: Vec<u32> = rows_str
            .split(',')
            .map(|t| u32::from_str_radix(t.trim(), 16))
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::Parse("bad hex row".into()))?;
        if rows.len() != n {
            return Err(Error::Parse(format!("expected {n} rows, got {}", rows.len())));
        }
        Self::from_rows(rows)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({})", self.to_hex())
    }
}

/// Predicted clique sizes after pivoting on uv, for a clique contained in
/// the graph. Serves as an oracle against the actual pivot output:
/// endpoints inside the clique (or both outside) leave it invariant, one
/// endpoint inside splits it in two.
pub fn clique_split_predict(
    g: &Graph,
    clique: &[usize],
    u: usize,
    v: usize,
) -> Result<Vec<usize>> {
    g.is_clique(clique)?;
    if !g.has_edge(u, v) {
        return Err(Error::NotAnEdge { u, v });
    }
    let in_clique = |x: usize| clique.contains(&x);
    let mut sizes = match (in_clique(u), in_clique(v)) {
        (true, true) | (false, false) => vec![clique.len()],
        (a_in, _) => {
            let (a, b) = if a_in { (u, v) } else { (v, u) };
            let common = g.neighbours(a) & g.neighbours(b);
            let m = clique
                .iter()
                .filter(|&&x| common >> x & 1 == 1)
                .count();
            let r = clique.len();
            vec![r - m, m + 2]
        }
    };
    sizes.sort_unstable();
    Ok(sizes)
}

/// A hypergraph: a Boolean function with the affine part stripped. Every
/// monomial of degree at least two is a hyperedge.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    f: BooleanFunction,
}

impl Hypergraph {
    /// Wraps a function, dropping constant and linear terms.
    pub fn from_function(f: &BooleanFunction) -> Self {
        Hypergraph { f: f.strip_affine() }
    }

    pub fn function(&self) -> &BooleanFunction {
        &self.f
    }

    pub fn n(&self) -> usize {
        self.f.n()
    }

    /// The admissibility condition for pivot on uv: x_u x_v must be a term,
    /// and must not divide any other term.
    pub fn admissible_edge(&self, u: usize, v: usize) -> bool {
        edge_admissible(&self.f, u, v)
    }

    /// All admissible edges.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut out = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if self.admissible_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn hyper_pivot(&self, u: usize, v: usize) -> Result<Self> {
        Ok(Hypergraph { f: pivot_anf(&self.f, u, v)?.strip_affine() })
    }

    /// For quadratic content, the ordinary graph.
    pub fn as_graph(&self) -> Result<Graph> {
        Graph::from_quadratic(&self.f)
    }

    /// Checks that every hyperedge meets both sides of the given split.
    pub fn bipartite_with(&self, side_a: u32) -> bool {
        self.f.terms().iter().all(|t| {
            t.degree() < 2 || (t.0 & side_a != 0 && t.0 & !side_a != 0)
        })
    }
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hypergraph({})", self.f)
    }
}

fn edge_admissible(f: &BooleanFunction, u: usize, v: usize) -> bool {
    if u == v || u >= f.n() || v >= f.n() {
        return false;
    }
    let edge = Monomial(1 << u | 1 << v);
    f.contains_term(edge)
        && !f
            .terms()
            .iter()
            .any(|&t| t != edge && edge.divides(t))
}

/// The ANF pivot p + (x_u + x_v)(N_u + N_v) + N_u N_v, keeping any affine
/// terms the rewrite produces. The neighbourhood functions are taken from
/// p without the pivot edge itself.
pub fn pivot_anf(p: &BooleanFunction, u: usize, v: usize) -> Result<BooleanFunction> {
    if u >= p.n() || v >= p.n() {
        return Err(Error::IndexOutOfRange { index: u.max(v), n: p.n() });
    }
    if u == v || !p.contains_term(Monomial(1 << u | 1 << v)) {
        return Err(Error::NotAnEdge { u, v });
    }
    if !edge_admissible(p, u, v) {
        return Err(Error::InadmissibleEdge { u, v });
    }
    let n = p.n();
    let edge = BooleanFunction::from_terms(n, [Monomial(1 << u | 1 << v)]);
    let rest = p.add(&edge)?;
    let nb_u = rest.neighbourhood(u)?;
    let nb_v = rest.neighbourhood(v)?;
    let xu_xv = BooleanFunction::variable(n, u).add(&BooleanFunction::variable(n, v))?;
    let cross = xu_xv.multiply(&nb_u.add(&nb_v)?)?;
    let prod = nb_u.multiply(&nb_v)?;
    p.add(&cross)?.add(&prod)
}
