//! Reference tables and their recomputation.
//!
//! Every table command recomputes the requested rows from scratch, checks
//! internal consistency, and diffs against the embedded reference values;
//! a mismatch is reported, never patched.

use crate::error::{Error, Result};
use crate::orbit::{classify, euler_transform, Mode, MoveSet, Universe};
use crate::par;
use crate::rng::SplitMix64;
use crate::spectral::{
    average_flat_all_functions, average_flat_all_quadratics_by_size, round3,
};

/// Average flat IH counts: (random functions, random quadratics), n = 2..9.
pub const TABLE1_RANDOM: [&str; 8] =
    ["1.500", "1.750", "1.390", "1.039", "1.000", "1.000", "1.000", "1.000"];
pub const TABLE1_QUAD: [&str; 8] =
    ["1.500", "2.500", "4.438", "8.188", "15.486", "29.726", "57.918", "113.227"];
/// Exhaustive reach of the two averages. The quadratic column is exact
/// through n = 6: at n = 7 the exact average is 29.779, so the tabulated
/// 29.726 must come from sampling and is not reproduced. The random
/// column's n = 4 entry has the same flavour: the exact average is
/// 91008/65536 = 1.389 after rounding, one off the tabulated last digit
/// (see `KNOWN_TABLE1_DISCREPANCY`).
pub const TABLE1_RANDOM_EXACT_MAX_N: usize = 4;
pub const TABLE1_QUAD_EXACT_MAX_N: usize = 6;

/// The one reference cell exact recomputation contradicts: the n = 4
/// random average. Both the direct sweep and an independent blockwise
/// count give 91008 flat spectra over 65536 functions.
pub const KNOWN_TABLE1_DISCREPANCY: (usize, &str, &str, &str) =
    (4, "random", "1.389", "1.390");

/// LC orbit counts (connected, all), n = 1..12.
pub const TABLE2_I: [u64; 12] = [1, 1, 1, 2, 4, 11, 26, 101, 440, 3132, 40457, 1274068];
pub const TABLE2_T: [u64; 12] = [1, 2, 3, 6, 11, 26, 59, 182, 675, 3990, 45144, 1323363];

/// Pivot orbit counts (connected, all), n = 1..12, and the bipartite
/// columns, n = 1..13.
pub const TABLE3_I: [u64; 12] =
    [1, 1, 2, 4, 10, 35, 134, 777, 6702, 104825, 3370317, 231557290];
pub const TABLE3_T: [u64; 12] =
    [1, 2, 4, 9, 21, 64, 218, 1068, 8038, 114188, 3493965, 235176097];
pub const TABLE3_IB: [u64; 13] = [1, 1, 1, 2, 3, 8, 15, 43, 110, 370, 1260, 5366, 25684];
pub const TABLE3_TB: [u64; 13] = [1, 2, 3, 6, 10, 22, 43, 104, 250, 720, 2229, 8361, 36441];

/// Indecomposable binary linear codes and the isodual ones, n = 1..13.
pub const TABLE4_IC: [u64; 13] = [1, 1, 2, 3, 6, 13, 30, 76, 220, 700, 2520, 10503, 51368];
pub fn table4_isodual(n: usize) -> Option<u64> {
    match n {
        2 => Some(1),
        4 => Some(1),
        6 => Some(3),
        8 => Some(10),
        10 => Some(40),
        12 => Some(229),
        _ => None,
    }
}

/// Labelled pivot orbit counts, n = 1..7.
pub const TABLE5_IL: [u64; 7] = [1, 1, 2, 11, 119, 2303, 80923];
pub const TABLE5_TL: [u64; 7] = [1, 2, 6, 29, 240, 3623, 105564];
pub const TABLE5_IBL: [u64; 7] = [1, 1, 1, 4, 26, 251, 3412];
pub const TABLE5_TBL: [u64; 7] = [1, 2, 5, 18, 92, 693, 7613];

/// Default recompute budgets per table (desk scale).
pub const TABLE2_DEFAULT_MAX_N: usize = 8;
pub const TABLE3_DEFAULT_MAX_N: usize = 8;
pub const TABLE3_BIPARTITE_MAX_N: usize = 9;
pub const TABLE4_DEFAULT_MAX_N: usize = 9;
pub const TABLE5_DEFAULT_MAX_N: usize = 6;
pub const TABLE5_BIPARTITE_MAX_N: usize = 7;

/// One recomputed cell: column name, computed value, reference value when
/// one is embedded, and whether they agree.
#[derive(Clone, Debug)]
pub struct Cell {
    pub column: &'static str,
    pub computed: String,
    pub golden: Option<String>,
    pub sampled: bool,
}

impl Cell {
    pub fn matches(&self) -> bool {
        self.sampled || self.golden.as_deref().is_none_or(|g| g == self.computed)
    }

    fn exact(column: &'static str, computed: impl ToString, golden: Option<String>) -> Self {
        Cell { column, computed: computed.to_string(), golden, sampled: false }
    }
}

#[derive(Clone, Debug)]
pub struct TableRow {
    pub n: usize,
    pub cells: Vec<Cell>,
}

impl TableRow {
    pub fn matches(&self) -> bool {
        self.cells.iter().all(Cell::matches)
    }
}

#[derive(Clone, Debug)]
pub struct TableResult {
    pub table: u8,
    pub rows: Vec<TableRow>,
}

impl TableResult {
    pub fn all_match(&self) -> bool {
        self.rows.iter().all(TableRow::matches)
    }
}

/// Recomputes a table up to max_n. `sample` adds seeded estimates for the
/// averages beyond exhaustive reach; estimates are marked and never
/// diffed.
pub fn table(
    id: u8,
    max_n: usize,
    threads: usize,
    sample: Option<(u64, u64)>,
) -> Result<TableResult> {
    match id {
        1 => table1(max_n, threads, sample),
        2 => table2(max_n, threads),
        3 => table3(max_n, threads),
        4 => table4(max_n, threads),
        5 => table5(max_n),
        other => Err(Error::InvalidInput(format!("no table {other}"))),
    }
}

fn golden_str(values: &[u64], n: usize) -> Option<String> {
    values.get(n - 1).map(|v| v.to_string())
}

fn table1(max_n: usize, threads: usize, sample: Option<(u64, u64)>) -> Result<TableResult> {
    if max_n > 9 {
        return Err(Error::BudgetExceeded("table 1 is tabulated for n <= 9".into()));
    }
    let mut rows = Vec::new();
    for n in 2..=max_n {
        let mut cells = Vec::new();
        let golden_random = TABLE1_RANDOM.get(n - 2).map(|s| s.to_string());
        let golden_quad = TABLE1_QUAD.get(n - 2).map(|s| s.to_string());
        if n <= TABLE1_RANDOM_EXACT_MAX_N {
            let (total, count) = average_flat_all_functions(n, threads)?;
            cells.push(Cell::exact("random", round3(total, count), golden_random));
        } else if let Some((samples, seed)) = sample {
            let value = sampled_random_average(n, samples, seed)?;
            cells.push(Cell { column: "random", computed: value, golden: golden_random, sampled: true });
        }
        if n <= TABLE1_QUAD_EXACT_MAX_N {
            let (total, count) = average_flat_all_quadratics_by_size(n);
            cells.push(Cell::exact("random_quad", round3(total, count), golden_quad));
        } else if let Some((samples, seed)) = sample {
            let value = sampled_quad_average(n, samples, seed)?;
            cells.push(Cell { column: "random_quad", computed: value, golden: golden_quad, sampled: true });
        }
        if !cells.is_empty() {
            rows.push(TableRow { n, cells });
        }
    }
    Ok(TableResult { table: 1, rows })
}

fn sampled_random_average(n: usize, samples: u64, seed: u64) -> Result<String> {
    let points = 1usize << n;
    let results = par::map_chunks(samples, 1, |range| {
        let mut rng = SplitMix64::new(seed ^ range.start);
        let mut total = 0u64;
        let mut scratch = vec![0i64; points];
        for _ in range {
            let table: Vec<bool> = (0..points).map(|_| rng.bool()).collect();
            for h_mask in 0..1u32 << n {
                for (k, slot) in scratch.iter_mut().enumerate() {
                    *slot = if table[k] { -1 } else { 1 };
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
    Ok(round3(results.into_iter().sum(), samples))
}

fn sampled_quad_average(n: usize, samples: u64, seed: u64) -> Result<String> {
    let mut rng = SplitMix64::new(seed);
    let mut total = 0u64;
    for _ in 0..samples {
        let mut rows = vec![0u32; n];
        for u in 0..n {
            for v in u + 1..n {
                if rng.bool() {
                    rows[u] |= 1 << v;
                    rows[v] |= 1 << u;
                }
            }
        }
        let g = crate::graph::Graph::from_rows(rows).expect("random adjacency is symmetric");
        total += crate::spectral::count_flat_quadratic(&g, crate::spectral::Family::IH);
    }
    Ok(round3(total, samples))
}

fn connected_counts(
    max_n: usize,
    moves: MoveSet,
    universe: Universe,
    threads: usize,
) -> Result<Vec<u64>> {
    (1..=max_n)
        .map(|k| Ok(classify(k, moves, universe, Mode::Unlabelled, threads)?.orbit_count()))
        .collect()
}

fn table2(max_n: usize, threads: usize) -> Result<TableResult> {
    if max_n > 9 {
        return Err(Error::BudgetExceeded(
            "LC classification beyond n = 9 is out of desk scale".into(),
        ));
    }
    let i = connected_counts(max_n, MoveSet::Lc, Universe::Connected, threads)?;
    let t = euler_transform(&i);
    let mut rows = Vec::new();
    for n in 1..=max_n {
        if i[n - 1] > t[n - 1] {
            return Err(Error::InvalidInput(format!(
                "internal inconsistency at n={n}: connected count exceeds total"
            )));
        }
        rows.push(TableRow {
            n,
            cells: vec![
                Cell::exact("i_lc", i[n - 1], golden_str(&TABLE2_I, n)),
                Cell::exact("t_lc", t[n - 1], golden_str(&TABLE2_T, n)),
            ],
        });
    }
    Ok(TableResult { table: 2, rows })
}

fn table3(max_n: usize, threads: usize) -> Result<TableResult> {
    if max_n > 10 {
        return Err(Error::BudgetExceeded(
            "pivot classification beyond n = 10 is out of desk scale".into(),
        ));
    }
    let general_max = max_n.min(9);
    let i = connected_counts(general_max, MoveSet::Pivot, Universe::Connected, threads)?;
    let t = euler_transform(&i);
    let ib = connected_counts(max_n, MoveSet::Pivot, Universe::BipartiteConnected, threads)?;
    let tb = euler_transform(&ib);
    let mut rows = Vec::new();
    for n in 1..=max_n {
        let mut cells = Vec::new();
        if n <= general_max {
            if i[n - 1] > t[n - 1] {
                return Err(Error::InvalidInput(format!(
                    "internal inconsistency at n={n}: connected count exceeds total"
                )));
            }
            cells.push(Cell::exact("i_p", i[n - 1], golden_str(&TABLE3_I, n)));
            cells.push(Cell::exact("t_p", t[n - 1], golden_str(&TABLE3_T, n)));
        }
        cells.push(Cell::exact("i_pb", ib[n - 1], golden_str(&TABLE3_IB, n)));
        cells.push(Cell::exact("t_pb", tb[n - 1], golden_str(&TABLE3_TB, n)));
        rows.push(TableRow { n, cells });
    }
    Ok(TableResult { table: 3, rows })
}

fn table4(max_n: usize, threads: usize) -> Result<TableResult> {
    if max_n > 10 {
        return Err(Error::BudgetExceeded(
            "code classification beyond n = 10 is out of desk scale".into(),
        ));
    }
    let mut rows = Vec::new();
    for n in 1..=max_n {
        let result = crate::code::classify_codes(n, threads)?;
        let mut cells = vec![
            Cell::exact("i_pb", result.orbit_count, golden_str(&TABLE3_IB, n)),
            Cell::exact("i_c", result.indecomposable, golden_str(&TABLE4_IC, n)),
        ];
        if n % 2 == 0 {
            cells.push(Cell::exact(
                "i_c_iso",
                result.isodual,
                table4_isodual(n).map(|v| v.to_string()),
            ));
        }
        rows.push(TableRow { n, cells });
    }
    Ok(TableResult { table: 4, rows })
}

fn table5(max_n: usize) -> Result<TableResult> {
    if max_n > 7 {
        return Err(Error::BudgetExceeded(
            "labelled classification beyond n = 7 is out of desk scale".into(),
        ));
    }
    let mut rows = Vec::new();
    for n in 1..=max_n {
        let mut cells = Vec::new();
        if n <= 7 {
            let all = classify(n, MoveSet::Pivot, Universe::All, Mode::Labelled, 1)?;
            let connected = all.classes.iter().filter(|c| c.connected).count() as u64;
            let bip = classify(n, MoveSet::Pivot, Universe::BipartiteAll, Mode::Labelled, 1)?;
            let bip_connected = bip.classes.iter().filter(|c| c.connected).count() as u64;
            if connected > all.orbit_count() || bip_connected > bip.orbit_count() {
                return Err(Error::InvalidInput(format!(
                    "internal inconsistency at n={n}: connected count exceeds total"
                )));
            }
            cells.push(Cell::exact("i_pl", connected, golden_str(&TABLE5_IL, n)));
            cells.push(Cell::exact("t_pl", all.orbit_count(), golden_str(&TABLE5_TL, n)));
            cells.push(Cell::exact("i_pbl", bip_connected, golden_str(&TABLE5_IBL, n)));
            cells.push(Cell::exact("t_pbl", bip.orbit_count(), golden_str(&TABLE5_TBL, n)));
        }
        rows.push(TableRow { n, cells });
    }
    Ok(TableResult { table: 5, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table1_matches_except_the_known_cell() {
        let result = table(1, 6, 2, None).unwrap();
        let mut mismatches = Vec::new();
        for row in &result.rows {
            for cell in &row.cells {
                if !cell.matches() {
                    mismatches.push((row.n, cell.column, cell.computed.clone()));
                }
            }
        }
        let (n, col, computed, _) = KNOWN_TABLE1_DISCREPANCY;
        assert_eq!(mismatches, vec![(n, col, computed.to_string())]);
    }

    #[test]
    fn table2_small_matches() {
        let result = table(2, 6, 2, None).unwrap();
        assert!(result.all_match(), "{result:?}");
    }

    #[test]
    fn table3_small_matches() {
        let result = table(3, 6, 2, None).unwrap();
        assert!(result.all_match(), "{result:?}");
    }

    #[test]
    fn table4_small_matches() {
        let result = table(4, 6, 2, None).unwrap();
        assert!(result.all_match(), "{result:?}");
    }

    #[test]
    fn table5_small_matches() {
        let result = table(5, 5, 1, None).unwrap();
        assert!(result.all_match(), "{result:?}");
    }

    #[test]
    fn unknown_table_is_rejected() {
        assert!(table(9, 3, 1, None).is_err());
    }
}
