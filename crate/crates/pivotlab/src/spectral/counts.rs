//! Flat-spectra counting: the direct transform sweep, the GF(2) rank fast
//! path for quadratics, and the structural lower bounds.

use crate::anf::BooleanFunction;
use crate::error::{Error, Result};
use crate::gf2;
use crate::graph::Graph;
use crate::par;
use crate::spectral::vector::{Family, SpectralVector, TransformSpec};

/// Direct-evaluation budget guards: beyond these the sweeps stop being
/// interactive on a desk machine.
pub const DIRECT_IH_MAX_N: usize = 14;
pub const DIRECT_IHN_MAX_N: usize = 9;

fn check_budget(n: usize, family: Family) -> Result<()> {
    let limit = match family {
        Family::IH | Family::HN => DIRECT_IH_MAX_N,
        Family::IHN => DIRECT_IHN_MAX_N,
    };
    if n > limit {
        return Err(Error::BudgetExceeded(format!(
            "direct {} sweep needs n <= {limit}, got {n}",
            family.as_str()
        )));
    }
    Ok(())
}

/// Number of transforms in the family whose spectrum of (-1)^p is flat,
/// found by applying every member exactly.
pub fn count_flat(p: &BooleanFunction, family: Family) -> Result<u64> {
    count_flat_threaded(p, family, 1)
}

pub fn count_flat_threaded(p: &BooleanFunction, family: Family, threads: usize) -> Result<u64> {
    check_budget(p.n(), family)?;
    let base = SpectralVector::bipolar(p);
    let total = family.size(p.n());
    let counts = par::map_chunks(total, threads, |range| {
        let mut count = 0u64;
        for idx in range {
            let spec = family.member(p.n(), idx);
            let transformed = base.clone().apply(&spec).expect("dimensions agree");
            if transformed.is_flat() {
                count += 1;
            }
        }
        count
    });
    Ok(counts.into_iter().sum())
}

/// The flat members themselves, in enumeration order.
pub fn flat_specs(p: &BooleanFunction, family: Family) -> Result<Vec<TransformSpec>> {
    check_budget(p.n(), family)?;
    let base = SpectralVector::bipolar(p);
    let mut out = Vec::new();
    for idx in 0..family.size(p.n()) {
        let spec = family.member(p.n(), idx);
        if base.clone().apply(&spec)?.is_flat() {
            out.push(spec);
        }
    }
    Ok(out)
}

/// The set of H-position masks X for which applying H exactly at X is
/// flat. The empty mask (identity) is always a member.
pub fn flat_h_masks(p: &BooleanFunction) -> Result<Vec<u32>> {
    check_budget(p.n(), Family::IH)?;
    let base = SpectralVector::bipolar(p);
    let mut out = Vec::new();
    for mask in 0..1u32 << p.n() {
        let spec = TransformSpec::h_at(p.n(), mask);
        if base.clone().apply(&spec)?.is_flat() {
            out.push(mask);
        }
    }
    Ok(out)
}

/// Rank criterion for one spec on a graph: take the adjacency matrix, set
/// the diagonal to 1 at the N positions, and test the principal submatrix
/// on the H and N positions for invertibility. The empty submatrix counts
/// as invertible, so the identity spec is always flat.
pub fn spec_is_flat_quadratic(g: &Graph, spec: &TransformSpec) -> bool {
    let (h_mask, n_mask) = spec.masks();
    mask_is_flat_quadratic(g, h_mask, n_mask)
}

fn mask_is_flat_quadratic(g: &Graph, h_mask: u32, n_mask: u32) -> bool {
    let sub = h_mask | n_mask;
    if sub == 0 {
        return true;
    }
    let mut rows: Vec<u32> = Vec::with_capacity(sub.count_ones() as usize);
    let mut rest = sub;
    while rest != 0 {
        let i = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let mut row = g.neighbours(i);
        if n_mask >> i & 1 == 1 {
            row |= 1 << i;
        }
        rows.push(row & sub);
    }
    gf2::nonsingular(&rows)
}

/// Flat-spectra count of the graph's quadratic via the rank criterion; no
/// transform is ever materialized, so this scales to every subset of up to
/// 31 vertices.
pub fn count_flat_quadratic(g: &Graph, family: Family) -> u64 {
    count_flat_quadratic_threaded(g, family, 1)
}

pub fn count_flat_quadratic_threaded(g: &Graph, family: Family, threads: usize) -> u64 {
    let n = g.n();
    match family {
        Family::IH => par::map_chunks(1u64 << n, threads, |range| {
            range
                .filter(|&mask| mask_is_flat_quadratic(g, mask as u32, 0))
                .count() as u64
        })
        .into_iter()
        .sum(),
        Family::HN => par::map_chunks(1u64 << n, threads, |range| {
            let full = (1u32 << n) - 1;
            range
                .filter(|&mask| mask_is_flat_quadratic(g, full & !(mask as u32), mask as u32))
                .count() as u64
        })
        .into_iter()
        .sum(),
        Family::IHN => par::map_chunks(3u64.pow(n as u32), threads, |range| {
            range
                .filter(|&idx| {
                    let mut h_mask = 0u32;
                    let mut n_mask = 0u32;
                    let mut rest = idx;
                    for i in 0..n {
                        match rest % 3 {
                            1 => h_mask |= 1 << i,
                            2 => n_mask |= 1 << i,
                            _ => {}
                        }
                        rest /= 3;
                    }
                    mask_is_flat_quadratic(g, h_mask, n_mask)
                })
                .count() as u64
        })
        .into_iter()
        .sum(),
    }
}

/// Product of the per-component flat counts: a lower bound for the whole
/// graph (met with equality for the rank criterion, since the matrix is
/// block diagonal).
pub fn component_bound(g: &Graph, family: Family) -> u64 {
    g.components()
        .iter()
        .map(|comp| count_flat_quadratic(&g.induced(comp), family))
        .product()
}

/// Clique bound: no pivot-orbit member has a clique larger than
/// floor(log2 of the IH flat count). Checked as stated, violations are the
/// caller's to report.
pub fn clique_upper_bound(k_ih: u64) -> u32 {
    assert!(k_ih > 0);
    63 - k_ih.leading_zeros()
}

/// Counts and bounds for the bipartite-plus-clique family member built
/// from (n, t, h): actual IH and IHN counts by direct sweep, next to the
/// structural lower bounds (t+1) 2^(n-t-1) and (n+1)(t+1) 2^(n-t-1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyFlatCounts {
    pub ih_count: u64,
    pub ihn_count: u64,
    pub ih_bound: u64,
    pub ihn_bound: u64,
}

pub fn family_flat_counts(n: usize, t: usize, h: &BooleanFunction) -> Result<FamilyFlatCounts> {
    let zero = BooleanFunction::zero(n);
    let f = crate::anf::family_member(n, t, h, &zero)?;
    let ih_count = count_flat(&f, Family::IH)?;
    let ihn_count = count_flat(&f, Family::IHN)?;
    let ih_bound = (t as u64 + 1) << (n - t - 1);
    let ihn_bound = (n as u64 + 1) * ih_bound;
    if ih_count < ih_bound || ihn_count < ihn_bound {
        return Err(Error::InvalidInput(format!(
            "flat counts fell below the guaranteed bounds for n={n}, t={t}: \
             IH {ih_count} vs {ih_bound}, IHN {ihn_count} vs {ihn_bound}"
        )));
    }
    Ok(FamilyFlatCounts { ih_count, ihn_count, ih_bound, ihn_bound })
}

/// Average IH flat count over every Boolean function on n variables,
/// computed exhaustively on truth tables. Returns (total, function count).
pub fn average_flat_all_functions(n: usize, threads: usize) -> Result<(u64, u64)> {
    if n > 4 {
        return Err(Error::BudgetExceeded(format!(
            "exhaustive function sweep needs n <= 4, got {n}"
        )));
    }
    let points = 1usize << n;
    let functions = 1u64 << points;
    let totals = par::map_chunks(functions, threads, |range| {
        let mut scratch = vec![0i64; points];
        let mut total = 0u64;
        for code in range {
            for h_mask in 0..1u32 << n {
                for (k, slot) in scratch.iter_mut().enumerate() {
                    *slot = if code >> k & 1 == 1 { -1 } else { 1 };
                }
                let mut rest = h_mask;
                while rest != 0 {
                    let i = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    let stride = 1usize << i;
                    let mut base = 0;
                    while base < points {
                        for k0 in base..base + stride {
                            let k1 = k0 + stride;
                            let a = scratch[k0];
                            let b = scratch[k1];
                            scratch[k0] = a + b;
                            scratch[k1] = a - b;
                        }
                        base += stride << 1;
                    }
                }
                let first = scratch[0] * scratch[0];
                if scratch.iter().all(|&v| v * v == first) {
                    total += 1;
                }
            }
        }
        total
    });
    Ok((totals.into_iter().sum(), functions))
}

/// Average IH flat count over every graph quadratic on n vertices via the
/// rank criterion. Returns (total, graph count).
pub fn average_flat_all_quadratics(n: usize, threads: usize) -> Result<(u64, u64)> {
    if n > 7 {
        return Err(Error::BudgetExceeded(format!(
            "exhaustive quadratic sweep needs n <= 7, got {n}"
        )));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let graphs = 1u64 << pairs.len();
    let totals = par::map_chunks(graphs, threads, |range| {
        let mut total = 0u64;
        for code in range {
            let mut rows = vec![0u32; n];
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if code >> i & 1 == 1 {
                    rows[u] |= 1 << v;
                    rows[v] |= 1 << u;
                }
            }
            let g = Graph::from_rows(rows).expect("constructed symmetric");
            total += count_flat_quadratic(&g, Family::IH);
        }
        total
    });
    Ok((totals.into_iter().sum(), graphs))
}

/// Same average computed without touching individual graphs: group the
/// (graph, subset) pairs by subset size, so only the count of invertible
/// zero-diagonal symmetric matrices per size is needed. Independent route
/// used to cross-check the sweep.
pub fn average_flat_all_quadratics_by_size(n: usize) -> (u64, u64) {
    // alternating_invertible[s] = number of invertible s x s symmetric
    // GF(2) matrices with zero diagonal.
    let inv_counts: Vec<u64> = (0..=n)
        .map(|s| {
            let pairs: Vec<(usize, usize)> = (0..s)
                .flat_map(|u| ((u + 1)..s).map(move |v| (u, v)))
                .collect();
            (0u64..1 << pairs.len())
                .filter(|code| {
                    let mut rows = vec![0u32; s];
                    for (i, &(u, v)) in pairs.iter().enumerate() {
                        if code >> i & 1 == 1 {
                            rows[u] |= 1 << v;
                            rows[v] |= 1 << u;
                        }
                    }
                    gf2::nonsingular(&rows)
                })
                .count() as u64
        })
        .collect();
    // total over graphs of flat counts = sum over sizes s of
    // C(n, s) * inv_counts[s] * 2^(pairs(n) - pairs(s)).
    let pairs_of = |m: usize| m * (m.saturating_sub(1)) / 2;
    let mut total = 0u64;
    for (s, &inv) in inv_counts.iter().enumerate() {
        let mut binom = 1u64;
        for i in 0..s {
            binom = binom * (n - i) as u64 / (i + 1) as u64;
        }
        total += binom * inv * (1u64 << (pairs_of(n) - pairs_of(s)));
    }
    (total, 1u64 << pairs_of(n))
}

/// Rounds num/den to three decimals, half away from zero, as a string.
pub fn round3(num: u64, den: u64) -> String {
    let scaled = num as u128 * 2000 + den as u128;
    let milli = scaled / (2 * den as u128);
    format!("{}.{:03}", milli / 1000, milli % 1000)
}
