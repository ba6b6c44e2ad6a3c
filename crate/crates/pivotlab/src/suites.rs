//! Verification batteries behind `pivotlab verify` and the acceptance
//! tests: each suite sweeps a structured exhaustive tier plus a seeded
//! randomized tier and reports exact pass/fail with counterexamples.

use crate::anf::{BooleanFunction, Monomial, Z4Function};
use crate::error::{Error, Result};
use crate::graph::{Graph, Hypergraph};
use crate::rng::SplitMix64;
use crate::spectral::{
    count_flat_quadratic, flat_h_masks, spec_is_flat_quadratic, verify_h_identities,
    verify_lc_chain, verify_napf, verify_pivot_identity, Family, HBranch, Kernel, SpectralVector,
    TransformSpec,
};

/// Outcome of one suite run.
#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: &'static str,
    pub cases: u64,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        SuiteReport { name, cases: 0, failures: Vec::new() }
    }

    fn fail(&mut self, msg: String) {
        if self.failures.len() < 12 {
            self.failures.push(msg);
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// All labelled graphs on n vertices.
fn labelled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len()).map(move |code| {
        let mut rows = vec![0u32; n];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if code >> i & 1 == 1 {
                rows[u] |= 1 << v;
                rows[v] |= 1 << u;
            }
        }
        Graph::from_rows(rows).expect("symmetric by construction")
    })
}

fn random_function_of_degree(rng: &mut SplitMix64, n: usize, max_deg: usize) -> BooleanFunction {
    let mut terms = Vec::new();
    let count = 1 + rng.below(7) as usize;
    for _ in 0..count {
        let deg = 1 + rng.below(max_deg as u64) as usize;
        let mut mask = 0u32;
        for _ in 0..deg {
            mask |= 1 << rng.below(n as u64);
        }
        terms.push(Monomial(mask));
    }
    BooleanFunction::from_terms(n, terms)
}

fn random_quadratic(rng: &mut SplitMix64, n: usize) -> BooleanFunction {
    let mut terms = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.bool() {
                terms.push(Monomial(1 << u | 1 << v));
            }
        }
    }
    for i in 0..n {
        if rng.bool() {
            terms.push(Monomial(1 << i));
        }
    }
    if rng.bool() {
        terms.push(Monomial::ONE);
    }
    BooleanFunction::from_terms(n, terms)
}

/// The pivot identity H_u H_v (-1)^p = (-1)^{pivot(p)}: exhaustive over
/// every connected labelled graph with at most `exhaustive_max_n`
/// vertices, then over admissible edges of seeded random hypergraphs of
/// degree at most 4.
pub fn pivot_identity_suite(
    exhaustive_max_n: usize,
    random_hypergraphs: u64,
    seed: u64,
) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("pivot-identity");
    for n in 2..=exhaustive_max_n {
        for g in labelled_graphs(n) {
            if !g.is_connected() {
                continue;
            }
            let p = g.to_quadratic();
            for (u, v) in g.edges() {
                report.cases += 1;
                if !verify_pivot_identity(&p, u, v)? {
                    report.fail(format!("graph {} edge ({u},{v})", g.to_hex()));
                }
            }
        }
    }
    let mut rng = SplitMix64::new(seed);
    let mut produced = 0u64;
    while produced < random_hypergraphs {
        let n = 3 + rng.below(4) as usize;
        let f = random_function_of_degree(&mut rng, n, 4).strip_affine();
        if f.degree() < 2 {
            continue;
        }
        produced += 1;
        let h = Hypergraph::from_function(&f);
        for (u, v) in h.edges() {
            report.cases += 1;
            if !verify_pivot_identity(h.function(), u, v)? {
                report.fail(format!("hypergraph {} edge ({u},{v})", h.function()));
            }
        }
    }
    Ok(report)
}

/// For quadratics, the set of H-position subsets giving a flat spectrum
/// equals the identity plus everything reachable by pivot sequences, each
/// pivot toggling its two positions.
pub fn quadpiv_suite(max_n: usize) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("quadpiv");
    for n in 2..=max_n {
        for rep in crate::orbit::connected_graph_reps(n, 1) {
            report.cases += 1;
            let flats: std::collections::BTreeSet<u32> =
                flat_h_masks(&rep.to_quadratic())?.into_iter().collect();
            let mut reachable = std::collections::BTreeSet::new();
            reachable.insert((rep.clone(), 0u32));
            let mut masks = std::collections::BTreeSet::new();
            masks.insert(0u32);
            let mut stack: Vec<(Graph, u32)> = vec![(rep.clone(), 0)];
            while let Some((g, mask)) = stack.pop() {
                for (u, v) in g.edges() {
                    let next = (
                        g.pivot(u, v, true).expect("edge exists"),
                        mask ^ (1 << u) ^ (1 << v),
                    );
                    if !reachable.contains(&next) {
                        masks.insert(next.1);
                        reachable.insert(next.clone());
                        stack.push(next);
                    }
                }
            }
            if flats != masks {
                report.fail(format!(
                    "graph {}: flat sets {flats:?} vs pivot-reachable {masks:?}",
                    rep.to_hex()
                ));
            }
        }
    }
    Ok(report)
}

/// Two-place flatness detects exactly the admissible edges: H_i H_j flat
/// iff x_i x_j is a term and divides no other term. Seeded random cubics.
pub fn onlypivot_suite(random_cubics: u64, seed: u64) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("onlypivot");
    let mut rng = SplitMix64::new(seed);
    let mut produced = 0u64;
    while produced < random_cubics {
        let n = 3 + rng.below(4) as usize;
        let f = random_function_of_degree(&mut rng, n, 3).strip_affine();
        if f.degree() < 2 {
            continue;
        }
        produced += 1;
        let h = Hypergraph::from_function(&f);
        let base = SpectralVector::bipolar(&f);
        for i in 0..n {
            for j in i + 1..n {
                report.cases += 1;
                let flat = base
                    .clone()
                    .apply_kernel(i, Kernel::H)?
                    .apply_kernel(j, Kernel::H)?
                    .is_flat();
                let admissible = h.admissible_edge(i, j);
                if flat != admissible {
                    report.fail(format!(
                        "{f}: pair ({i},{j}) flat={flat} admissible={admissible}"
                    ));
                }
            }
        }
    }
    Ok(report)
}

/// The single-kernel closed forms and the local complementation chain.
///
/// Exhaustive tiers: the negahadamard split over every (m, p) pair for
/// n <= 2 and every Boolean m with doubled-Boolean p at n = 3; the H
/// closed forms over every graph quadratic with affine probes against
/// factor lists drawn from all affine functions and quadratic monomials
/// (all three branches fire); the chain over every Boolean function on up
/// to 4 variables at every admissible edge. A seeded randomized tier
/// extends all three to n <= 6.
pub fn transform_identity_suite(random_cases: u64, seed: u64) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("transform-identities");
    napf_exhaustive(&mut report)?;
    h_identities_exhaustive(&mut report)?;
    lc_chain_exhaustive(&mut report)?;
    randomized_identities(&mut report, random_cases, seed)?;
    Ok(report)
}

fn napf_exhaustive(report: &mut SuiteReport) -> Result<()> {
    // n <= 2: every m truth table against every Z4 table.
    for n in 1..=2usize {
        let points = 1usize << n;
        for m_code in 0u32..1 << points {
            let m_table: Vec<bool> = (0..points).map(|k| m_code >> k & 1 == 1).collect();
            let m = BooleanFunction::from_truth_table(n, &m_table);
            for p_code in 0u64..1 << (2 * points) {
                let table: Vec<u8> =
                    (0..points).map(|k| (p_code >> (2 * k) & 3) as u8).collect();
                let p = Z4Function::from_table(n, table);
                for j in 0..n {
                    report.cases += 1;
                    if !verify_napf(&m, &p, j)? {
                        report.fail(format!("napf n={n} m_code={m_code} p_code={p_code} j={j}"));
                    }
                }
            }
        }
    }
    // n = 3: every Boolean m against every doubled Boolean p.
    let n = 3usize;
    let points = 1usize << n;
    for m_code in 0u32..1 << points {
        let m_table: Vec<bool> = (0..points).map(|k| m_code >> k & 1 == 1).collect();
        let m = BooleanFunction::from_truth_table(n, &m_table);
        for p_code in 0u32..1 << points {
            let p_table: Vec<bool> = (0..points).map(|k| p_code >> k & 1 == 1).collect();
            let p = Z4Function::from_boolean_doubled(&BooleanFunction::from_truth_table(
                n, &p_table,
            ));
            for j in 0..n {
                report.cases += 1;
                if !verify_napf(&m, &p, j)? {
                    report.fail(format!("napf n=3 m_code={m_code} p_code={p_code} j={j}"));
                }
            }
        }
    }
    // n = 4: affine m against every doubled quadratic, and the reverse.
    let n = 4usize;
    let affines: Vec<BooleanFunction> = (0..1u32 << (n + 1))
        .map(|code| {
            let mut terms = Vec::new();
            for i in 0..n {
                if code >> i & 1 == 1 {
                    terms.push(Monomial(1 << i));
                }
            }
            if code >> n & 1 == 1 {
                terms.push(Monomial::ONE);
            }
            BooleanFunction::from_terms(n, terms)
        })
        .collect();
    let quadratics: Vec<BooleanFunction> = labelled_graphs(n)
        .map(|g| g.to_quadratic())
        .collect();
    for m in &affines {
        for q in &quadratics {
            let p = Z4Function::from_boolean_doubled(q);
            for j in 0..n {
                report.cases += 1;
                if !verify_napf(m, &p, j)? {
                    report.fail(format!("napf n=4 m={m} q={q} j={j}"));
                }
            }
        }
    }
    for q in &quadratics {
        for a in &affines {
            let p = Z4Function::from_boolean_doubled(a);
            for j in 0..n {
                report.cases += 1;
                if !verify_napf(q, &p, j)? {
                    report.fail(format!("napf n=4 m={q} p=2({a}) j={j}"));
                }
            }
        }
    }
    Ok(())
}

fn h_identities_exhaustive(report: &mut SuiteReport) -> Result<()> {
    for n in 2..=4usize {
        // Factor pool: all affine functions plus quadratic monomials with
        // an optional +1; pairs of affines exercise the linear branch,
        // quadratic factors force the general one.
        let mut pool: Vec<BooleanFunction> = Vec::new();
        for code in 0..1u32 << (n + 1) {
            let mut terms = Vec::new();
            for i in 0..n {
                if code >> i & 1 == 1 {
                    terms.push(Monomial(1 << i));
                }
            }
            if code >> n & 1 == 1 {
                terms.push(Monomial::ONE);
            }
            let f = BooleanFunction::from_terms(n, terms);
            if !f.is_zero() {
                pool.push(f);
            }
        }
        for u in 0..n {
            for v in u + 1..n {
                let quad = Monomial(1 << u | 1 << v);
                pool.push(BooleanFunction::from_terms(n, [quad]));
                pool.push(BooleanFunction::from_terms(n, [quad, Monomial::ONE]));
            }
        }
        let mut factor_lists: Vec<Vec<BooleanFunction>> = vec![vec![]];
        for f in &pool {
            factor_lists.push(vec![f.clone()]);
        }
        for (a, fa) in pool.iter().enumerate() {
            for fb in pool.iter().skip(a) {
                factor_lists.push(vec![fa.clone(), fb.clone()]);
            }
        }
        let affine_probes = [
            BooleanFunction::zero(n),
            BooleanFunction::one(n),
            BooleanFunction::variable(n, 0),
            BooleanFunction::variable(n, 0)
                .add(&BooleanFunction::variable(n, n - 1))
                .unwrap(),
        ];
        let mut branch_seen = [false; 3];
        for g in labelled_graphs(n) {
            let quad = g.to_quadratic();
            for probe in &affine_probes {
                let p = quad.add(probe)?;
                for factors in &factor_lists {
                    for i in 0..n {
                        report.cases += 1;
                        let out = verify_h_identities(factors, &p, i)?;
                        branch_seen[match out.branch {
                            HBranch::NotInM => 0,
                            HBranch::InM => 1,
                            HBranch::General => 2,
                        }] = true;
                        if !out.holds {
                            report.fail(format!(
                                "h-identity {:?} p={p} i={i} factors={factors:?}",
                                out.branch
                            ));
                        }
                    }
                }
            }
            // One probe per graph keeps the n=4 tier tractable.
            if n == 4 {
                break;
            }
        }
        if n == 4 {
            // Cover the remaining n=4 graphs with the empty and the
            // identity-adjacent factor lists only.
            let light_lists: Vec<&Vec<BooleanFunction>> =
                factor_lists.iter().filter(|fl| fl.len() <= 1).collect();
            for g in labelled_graphs(4) {
                let p = g.to_quadratic();
                for factors in &light_lists {
                    for i in 0..4 {
                        report.cases += 1;
                        let out = verify_h_identities(factors, &p, i)?;
                        if !out.holds {
                            report.fail(format!(
                                "h-identity {:?} p={p} i={i} factors={factors:?}",
                                out.branch
                            ));
                        }
                    }
                }
            }
        }
        if !branch_seen.iter().all(|&b| b) {
            report.fail(format!("n={n}: some closed-form branch never fired"));
        }
    }
    Ok(())
}

fn lc_chain_exhaustive(report: &mut SuiteReport) -> Result<()> {
    // Every Boolean function on up to 4 variables, every admissible edge.
    for n in 2..=4usize {
        let points = 1usize << n;
        for code in 0u64..1 << points {
            let table: Vec<bool> = (0..points).map(|k| code >> k & 1 == 1).collect();
            let f = BooleanFunction::from_truth_table(n, &table);
            if f.degree() < 2 {
                continue;
            }
            let h = Hypergraph::from_function(&f);
            for (l, j) in h.edges() {
                for (a, b) in [(l, j), (j, l)] {
                    report.cases += 1;
                    let chain = verify_lc_chain(&f, a, b)?;
                    if !chain.all_hold() {
                        report.fail(format!("lc-chain {f} edge ({a},{b}): {chain:?}"));
                    }
                }
            }
        }
    }
    Ok(())
}

fn randomized_identities(report: &mut SuiteReport, cases: u64, seed: u64) -> Result<()> {
    let mut rng = SplitMix64::new(seed);
    let per_family = cases / 3;
    // Negahadamard split with arbitrary Z4 tables.
    for _ in 0..per_family {
        let n = 1 + rng.below(6) as usize;
        let points = 1usize << n;
        let m_table: Vec<bool> = (0..points).map(|_| rng.bool()).collect();
        let m = BooleanFunction::from_truth_table(n, &m_table);
        let table: Vec<u8> = (0..points).map(|_| rng.below(4) as u8).collect();
        let p = Z4Function::from_table(n, table);
        let j = rng.below(n as u64) as usize;
        report.cases += 1;
        if !verify_napf(&m, &p, j)? {
            report.fail(format!("random napf n={n} m={m} j={j}"));
        }
    }
    // H closed forms with random factor lists over random quadratics.
    for _ in 0..per_family {
        let n = 2 + rng.below(5) as usize;
        let p = random_quadratic(&mut rng, n);
        let list_len = rng.below(3) as usize + 1;
        let factors: Vec<BooleanFunction> = (0..list_len)
            .map(|_| random_function_of_degree(&mut rng, n, 2))
            .collect();
        let i = rng.below(n as u64) as usize;
        report.cases += 1;
        let out = verify_h_identities(&factors, &p, i)?;
        if !out.holds {
            report.fail(format!(
                "random h-identity {:?} n={n} p={p} i={i} factors={factors:?}",
                out.branch
            ));
        }
    }
    // Chains over random admissible hypergraph edges.
    let mut done = 0u64;
    while done < cases - 2 * per_family {
        let n = 2 + rng.below(5) as usize;
        let f = random_function_of_degree(&mut rng, n, 3).strip_affine();
        let h = Hypergraph::from_function(&f);
        let edges = h.edges();
        if edges.is_empty() {
            continue;
        }
        let (l, j) = edges[rng.below(edges.len() as u64) as usize];
        done += 1;
        report.cases += 1;
        let chain = verify_lc_chain(&f, l, j)?;
        if !chain.all_hold() {
            report.fail(format!("random lc-chain {f} edge ({l},{j}): {chain:?}"));
        }
    }
    Ok(())
}

/// The rank criterion against the transform sweep: exhaustive over every
/// graph up to `exhaustive_max_n` and all 3^n specs, randomized IH checks
/// at n = 6 and 7.
pub fn rank_criterion_suite(exhaustive_max_n: usize, seed: u64) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("rank-criterion");
    for n in 1..=exhaustive_max_n {
        for g in labelled_graphs(n) {
            let p = g.to_quadratic();
            let base = SpectralVector::bipolar(&p);
            for idx in 0..Family::IHN.size(n) {
                let spec = Family::IHN.member(n, idx);
                report.cases += 1;
                let direct = base.clone().apply(&spec)?.is_flat();
                let by_rank = spec_is_flat_quadratic(&g, &spec);
                if direct != by_rank {
                    report.fail(format!("graph {} spec {spec}", g.to_hex()));
                }
            }
        }
    }
    let mut rng = SplitMix64::new(seed);
    for n in [6usize, 7] {
        for _ in 0..40 {
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
            let g = Graph::from_edges(n, &edges).expect("valid edges");
            let p = g.to_quadratic();
            let base = SpectralVector::bipolar(&p);
            for _ in 0..64 {
                let spec = TransformSpec::h_at(n, rng.mask(n));
                report.cases += 1;
                let direct = base.clone().apply(&spec)?.is_flat();
                if direct != spec_is_flat_quadratic(&g, &spec) {
                    report.fail(format!("graph {} spec {spec}", g.to_hex()));
                }
            }
        }
    }
    Ok(report)
}

/// Flat-count lower bounds of the bipartite-plus-clique family, with the
/// tight case at h = x_0...x_{t-1}. The t = 2 member with that h is the
/// complete graph, whose count strictly beats the bound, so equality is
/// asserted for t outside {2} only.
pub fn family_bound_suite(max_n: usize, seed: u64) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("family-bounds");
    let mut rng = SplitMix64::new(seed);
    for n in 2..=max_n {
        for t in 0..n {
            let product_h = if t == 0 {
                BooleanFunction::one(n)
            } else {
                BooleanFunction::from_terms(n, [Monomial((1u32 << t) - 1)])
            };
            let mut hs = vec![BooleanFunction::zero(n), product_h.clone()];
            for _ in 0..2 {
                if t >= 1 {
                    let table: Vec<bool> = (0..1usize << t).map(|_| rng.bool()).collect();
                    let on_t = BooleanFunction::from_truth_table(t, &table);
                    let lifted = BooleanFunction::from_terms(
                        n,
                        on_t.terms().iter().copied(),
                    );
                    hs.push(lifted);
                }
            }
            for h in &hs {
                report.cases += 1;
                match crate::spectral::family_flat_counts(n, t, h) {
                    Ok(counts) => {
                        if *h == product_h && t != 2 && counts.ih_count != counts.ih_bound {
                            report.fail(format!(
                                "n={n} t={t} h=x0..x{}: count {} != tight bound {}",
                                t.saturating_sub(1),
                                counts.ih_count,
                                counts.ih_bound
                            ));
                        }
                    }
                    Err(Error::InvalidInput(msg)) => {
                        report.fail(format!("n={n} t={t} h={h}: {msg}"));
                    }
                    Err(other) => return Err(other),
                }
            }
        }
    }
    Ok(report)
}

/// The clique law: 2^(n-1) flat IH spectra, by direct transforms up to
/// `direct_max_n` and by the rank fast path up to `rank_max_n`.
pub fn clique_law_suite(direct_max_n: usize, rank_max_n: usize, threads: usize) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("clique-law");
    for n in 2..=direct_max_n {
        report.cases += 1;
        let count = crate::spectral::count_flat_threaded(
            &crate::anf::clique_function(n),
            Family::IH,
            threads,
        )?;
        if count != 1 << (n - 1) {
            report.fail(format!("direct K_{n}: {count}"));
        }
    }
    for n in 2..=rank_max_n {
        report.cases += 1;
        let g = Graph::from_quadratic(&crate::anf::clique_function(n))
            .expect("clique is quadratic");
        let count = crate::spectral::count_flat_quadratic_threaded(&g, Family::IH, threads);
        if count != 1 << (n - 1) {
            report.fail(format!("rank K_{n}: {count}"));
        }
    }
    Ok(report)
}

/// The 16-term homogeneous cubic on six variables whose only flat IH
/// spectra are the identity and the full transform (it is bent but has no
/// quadratic terms, so no pivot reaches the second one).
pub fn homogeneous_bent_cubic_6() -> BooleanFunction {
    let triples = [
        (0, 1, 2),
        (0, 1, 3),
        (0, 1, 5),
        (0, 2, 4),
        (0, 2, 5),
        (0, 3, 4),
        (0, 3, 5),
        (0, 4, 5),
        (1, 2, 3),
        (1, 2, 4),
        (1, 2, 5),
        (1, 3, 4),
        (1, 4, 5),
        (2, 3, 4),
        (2, 3, 5),
        (3, 4, 5),
    ];
    BooleanFunction::from_terms(
        6,
        triples
            .iter()
            .map(|&(a, b, c)| Monomial(1 << a | 1 << b | 1 << c)),
    )
}

/// Flat IH masks of the witness cubic; the property suite asserts this is
/// exactly {identity, all-H}.
pub fn bent_cubic_flat_masks() -> Result<Vec<u32>> {
    flat_h_masks(&homogeneous_bent_cubic_6())
}

/// Structural audit of the clique bound n_x <= floor(log2 K_IH) over every
/// graph up to max_n: the bound is evaluated as stated on each pivot-orbit
/// member and violations are returned rather than asserted away.
pub fn clique_bound_audit(max_n: usize) -> Result<Vec<String>> {
    let mut violations = Vec::new();
    for n in 2..=max_n {
        for rep in crate::orbit::connected_graph_reps(n, 1) {
            let k_ih = count_flat_quadratic(&rep, Family::IH);
            let bound = crate::spectral::clique_upper_bound(k_ih);
            for member in crate::orbit::orbit_members(&rep, crate::orbit::MoveSet::Pivot, 1) {
                let clique = member.graph().max_clique_size() as u32;
                if clique > bound {
                    violations.push(format!(
                        "graph {}: clique {clique} > floor(log2 {k_ih}) = {bound}",
                        member.to_line()
                    ));
                }
            }
        }
    }
    Ok(violations)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bent_cubic_has_sixteen_terms_of_degree_three() {
        let f = homogeneous_bent_cubic_6();
        assert_eq!(f.terms().len(), 16);
        assert!(f.terms().iter().all(|t| t.degree() == 3));
    }

    #[test]
    fn bent_cubic_flat_set_is_identity_and_full() {
        let masks = bent_cubic_flat_masks().unwrap();
        assert_eq!(masks, vec![0, 0b111111]);
    }

    #[test]
    fn small_pivot_identity_run() {
        let report = pivot_identity_suite(4, 50, 7).unwrap();
        assert!(report.passed(), "{:?}", report.failures);
        assert!(report.cases > 100);
    }

    #[test]
    fn small_quadpiv_run() {
        let report = quadpiv_suite(5).unwrap();
        assert!(report.passed(), "{:?}", report.failures);
    }

    #[test]
    fn small_onlypivot_run() {
        let report = onlypivot_suite(150, 11).unwrap();
        assert!(report.passed(), "{:?}", report.failures);
    }

    #[test]
    fn small_rank_criterion_run() {
        let report = rank_criterion_suite(4, 3).unwrap();
        assert!(report.passed(), "{:?}", report.failures);
    }

    #[test]
    fn small_family_run() {
        let report = family_bound_suite(5, 5).unwrap();
        assert!(report.passed(), "{:?}", report.failures);
    }

    #[test]
    fn clique_law_small() {
        let report = clique_law_suite(6, 10, 1).unwrap();
        assert!(report.passed(), "{:?}", report.failures);
    }

    #[test]
    fn clique_bound_audit_reports_as_data() {
        // The bound as stated can fail on cliques themselves; the audit
        // returns what it finds instead of asserting.
        let violations = clique_bound_audit(4).unwrap();
        for v in &violations {
            assert!(v.contains("clique"));
        }
    }
}
