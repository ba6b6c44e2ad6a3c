//! Command-line surface: argument parsing, budget guards, and JSON-lines
//! report emission. The binary stays a two-line wrapper around `run`.

use std::fmt::Write as _;
use std::time::Instant;

use crate::anf::BooleanFunction;
use crate::error::Error;
use crate::graph::{Graph, Hypergraph};
use crate::orbit::{classify, orbit, reps_to_database, Mode, MoveSet, Universe};
use crate::spectral::{
    component_bound, count_flat_quadratic_threaded, count_flat_threaded, flat_specs, Family,
};
use crate::suites;
use crate::tables;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_GOLDEN_MISMATCH: i32 = 4;
pub const EXIT_OTHER: i32 = 1;

/// Desk-scale budget ceilings; anything beyond needs --force.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub threads: usize,
    pub ih_direct_max_n: usize,
    pub ihn_direct_max_n: usize,
    pub classify_max_n: usize,
    pub bipartite_max_n: usize,
    pub labelled_max_n: usize,
    pub lc_max_n: usize,
    pub force: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        let threads = std::env::var("PIVOTLAB_THREADS")
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or_else(|| {
                std::thread::available_parallelism().map(|p| p.get().min(8)).unwrap_or(1)
            });
        RunConfig {
            threads,
            ih_direct_max_n: 14,
            ihn_direct_max_n: 9,
            classify_max_n: 8,
            bipartite_max_n: 9,
            labelled_max_n: 6,
            lc_max_n: 8,
            force: false,
        }
    }
}

/// Tiny JSON writer; all emitted strings are printable ASCII but escaping
/// is handled anyway.
fn json_str(out: &mut String, s: &str) {
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
}

struct JsonObject {
    buf: String,
    first: bool,
}

impl JsonObject {
    fn new() -> Self {
        JsonObject { buf: String::from("{"), first: true }
    }

    fn key(&mut self, key: &str) {
        if !self.first {
            self.buf.push(',');
        }
        self.first = false;
        json_str(&mut self.buf, key);
        self.buf.push(':');
    }

    fn string(mut self, key: &str, value: &str) -> Self {
        self.key(key);
        json_str(&mut self.buf, value);
        self
    }

    fn number(mut self, key: &str, value: impl ToString) -> Self {
        self.key(key);
        self.buf.push_str(&value.to_string());
        self
    }

    fn bool(mut self, key: &str, value: bool) -> Self {
        self.key(key);
        self.buf.push_str(if value { "true" } else { "false" });
        self
    }

    fn raw(mut self, key: &str, value: &str) -> Self {
        self.key(key);
        self.buf.push_str(value);
        self
    }

    fn string_array(mut self, key: &str, values: &[String]) -> Self {
        self.key(key);
        self.buf.push('[');
        for (i, v) in values.iter().enumerate() {
            if i > 0 {
                self.buf.push(',');
            }
            json_str(&mut self.buf, v);
        }
        self.buf.push(']');
        self
    }

    fn finish(mut self) -> String {
        self.buf.push('}');
        self.buf
    }
}

fn emit(line: String) {
    println!("{line}");
}

fn fail(kind: &str, msg: &str, code: i32) -> i32 {
    emit(JsonObject::new().string("error", msg).string("kind", kind).finish());
    eprintln!("pivotlab: {msg}");
    code
}

fn error_exit(err: Error) -> i32 {
    match err {
        Error::BudgetExceeded(msg) => fail("budget", &msg, EXIT_BUDGET),
        Error::Parse(msg) => fail("usage", &msg, EXIT_USAGE),
        other => fail("error", &other.to_string(), EXIT_OTHER),
    }
}

/// Flag/value argument splitter: `--key value` pairs plus bare flags.
struct Args {
    items: Vec<String>,
    used: Vec<bool>,
}

impl Args {
    fn new(items: &[String]) -> Self {
        Args { used: vec![false; items.len()], items: items.to_vec() }
    }

    fn value(&mut self, key: &str) -> Option<String> {
        for i in 0..self.items.len() {
            if self.items[i] == key && i + 1 < self.items.len() {
                self.used[i] = true;
                self.used[i + 1] = true;
                return Some(self.items[i + 1].clone());
            }
        }
        None
    }

    fn flag(&mut self, key: &str) -> bool {
        for i in 0..self.items.len() {
            if self.items[i] == key {
                self.used[i] = true;
                return true;
            }
        }
        false
    }

    fn unused(&self) -> Option<&str> {
        self.items
            .iter()
            .zip(&self.used)
            .find(|(_, &u)| !u)
            .map(|(s, _)| s.as_str())
    }
}

const USAGE: &str = "usage: pivotlab <command> [options]
commands:
  spectra count     --anf \"n=3; x0*x1+...\" --family IH|IHN|HN [--witnesses] [--rank]
  pivot             --anf \"...\" --edge u,v | --graph FILE --edge u,v [--no-swap] | --lc i
  orbit             --graph FILE | --hex \"n:rows\" [--move pivot|lc] [--mode unlabelled|labelled]
  classify          --n N --move pivot|lc --universe all|connected|bipartite-connected|bipartite-all
                    --mode unlabelled|labelled [--out FILE]
  codes classify    --n N
  codes infosets    --file FILE
  tables            --table 1..5 --max-n N [--pretty] [--sample S] [--seed K]
  verify            --suite transform-identities|pivot-identity|quadpiv|onlypivot|
                            rank-criterion|family-bounds|clique-law|all
                    [--n N] [--seed K] [--cases C]
global options: --threads N (or PIVOTLAB_THREADS), --force";

/// Entry point used by the binary; returns the process exit code.
pub fn run(argv: &[String]) -> i32 {
    let mut config = RunConfig::default();
    if argv.is_empty() {
        eprintln!("{USAGE}");
        return EXIT_USAGE;
    }
    let (command, rest) = argv.split_first().expect("nonempty");
    let mut rest: Vec<String> = rest.to_vec();
    // `codes` has two-level subcommands.
    let command = if command == "codes" {
        if rest.is_empty() {
            eprintln!("{USAGE}");
            return EXIT_USAGE;
        }
        let sub = rest.remove(0);
        format!("codes {sub}")
    } else {
        command.clone()
    };
    let mut args = Args::new(&rest);
    if let Some(t) = args.value("--threads") {
        match t.parse() {
            Ok(v) if v >= 1 => config.threads = v,
            _ => return fail("usage", "--threads needs a positive integer", EXIT_USAGE),
        }
    }
    config.force = args.flag("--force");

    let started = Instant::now();
    let code = match command.as_str() {
        "spectra" => cmd_spectra(&mut args, &config, started),
        "pivot" => cmd_pivot(&mut args, started),
        "orbit" => cmd_orbit(&mut args, &config, started),
        "classify" => cmd_classify(&mut args, &config, started),
        "codes classify" => cmd_codes_classify(&mut args, &config, started),
        "codes infosets" => cmd_codes_infosets(&mut args, started),
        "tables" => cmd_tables(&mut args, &config, started),
        "verify" => cmd_verify(&mut args, &config, started),
        other => {
            eprintln!("unknown command `{other}`\n{USAGE}");
            EXIT_USAGE
        }
    };
    if code == EXIT_OK {
        if let Some(stray) = args.unused() {
            return fail("usage", &format!("unrecognized argument `{stray}`"), EXIT_USAGE);
        }
    }
    code
}

fn load_graph(args: &mut Args) -> Result<Graph, Error> {
    if let Some(path) = args.value("--graph") {
        let text = std::fs::read_to_string(&path)
            .map_err(|e| Error::Parse(format!("cannot read {path}: {e}")))?;
        Graph::parse(&text)
    } else if let Some(hex) = args.value("--hex") {
        Graph::parse_hex(&hex)
    } else {
        Err(Error::Parse("need --graph FILE or --hex \"n:rows\"".into()))
    }
}

fn cmd_spectra(args: &mut Args, config: &RunConfig, started: Instant) -> i32 {
    // `count` is the only spectra verb; accept and consume it.
    args.flag("count");
    let Some(anf_text) = args.value("--anf") else {
        return fail("usage", "spectra needs --anf", EXIT_USAGE);
    };
    let family = match args.value("--family").as_deref().map(Family::parse) {
        Some(Ok(f)) => f,
        Some(Err(e)) => return error_exit(e),
        None => Family::IH,
    };
    let function = match BooleanFunction::parse(&anf_text) {
        Ok(f) => f,
        Err(e) => return error_exit(e),
    };
    let wants_witnesses = args.flag("--witnesses");
    let use_rank = args.flag("--rank");
    let budget = match family {
        Family::IH | Family::HN => config.ih_direct_max_n,
        Family::IHN => config.ihn_direct_max_n,
    };
    if !use_rank && function.n() > budget && !config.force {
        return error_exit(Error::BudgetExceeded(format!(
            "direct sweep at n={} exceeds the default budget {budget}; pass --force or --rank",
            function.n()
        )));
    }
    if function.n() > budget {
        eprintln!("pivotlab: n={} exceeds the desk-scale budget, expect a long run", function.n());
    }
    let quadratic = Graph::from_quadratic(&function).ok();
    let count = if use_rank {
        match &quadratic {
            Some(g) => count_flat_quadratic_threaded(g, family, config.threads),
            None => {
                return fail("usage", "--rank needs a quadratic function", EXIT_USAGE);
            }
        }
    } else {
        match count_flat_threaded(&function, family, config.threads) {
            Ok(c) => c,
            Err(e) => return error_exit(e),
        }
    };
    let mut obj = JsonObject::new()
        .string("function", &function.to_string())
        .string("family", family.as_str())
        .number("count", count);
    if let Some(g) = &quadratic {
        obj = obj.number("bound", component_bound(g, family));
    }
    if wants_witnesses {
        match flat_specs(&function, family) {
            Ok(specs) => {
                let strings: Vec<String> = specs.iter().map(|s| s.to_string()).collect();
                obj = obj.string_array("witnesses", &strings);
            }
            Err(e) => return error_exit(e),
        }
    }
    emit(obj.number("elapsed_ms", started.elapsed().as_millis()).finish());
    EXIT_OK
}

fn cmd_pivot(args: &mut Args, started: Instant) -> i32 {
    let lc = args.value("--lc");
    let edge = args.value("--edge");
    if let Some(anf_text) = args.value("--anf") {
        let function = match BooleanFunction::parse(&anf_text) {
            Ok(f) => f,
            Err(e) => return error_exit(e),
        };
        let Some(edge) = edge else {
            return fail("usage", "pivot --anf needs --edge u,v", EXIT_USAGE);
        };
        let Some((u, v)) = parse_edge(&edge) else {
            return fail("usage", "--edge wants `u,v`", EXIT_USAGE);
        };
        let h = Hypergraph::from_function(&function);
        match h.hyper_pivot(u, v) {
            Ok(out) => {
                emit(
                    JsonObject::new()
                        .string("input", &function.to_string())
                        .string("operation", &format!("hyper_pivot({u},{v})"))
                        .string("result", &out.function().to_string())
                        .number("elapsed_ms", started.elapsed().as_millis())
                        .finish(),
                );
                EXIT_OK
            }
            Err(e) => error_exit(e),
        }
    } else {
        let g = match load_graph(args) {
            Ok(g) => g,
            Err(e) => return error_exit(e),
        };
        let result = if let Some(lc_vertex) = lc {
            let Ok(i) = lc_vertex.parse::<usize>() else {
                return fail("usage", "--lc wants a vertex index", EXIT_USAGE);
            };
            g.local_complement(i).map(|out| (format!("lc({i})"), out))
        } else {
            let Some(edge) = edge else {
                return fail("usage", "pivot needs --edge u,v or --lc i", EXIT_USAGE);
            };
            let Some((u, v)) = parse_edge(&edge) else {
                return fail("usage", "--edge wants `u,v`", EXIT_USAGE);
            };
            let swap = !args.flag("--no-swap");
            g.pivot(u, v, swap).map(|out| (format!("pivot({u},{v},swap={swap})"), out))
        };
        match result {
            Ok((op, out)) => {
                emit(
                    JsonObject::new()
                        .string("input", &g.to_hex())
                        .string("operation", &op)
                        .string("result", &out.to_hex())
                        .number("elapsed_ms", started.elapsed().as_millis())
                        .finish(),
                );
                EXIT_OK
            }
            Err(e) => error_exit(e),
        }
    }
}

fn parse_edge(text: &str) -> Option<(usize, usize)> {
    let (a, b) = text.split_once(',')?;
    Some((a.trim().parse().ok()?, b.trim().parse().ok()?))
}

fn cmd_orbit(args: &mut Args, config: &RunConfig, started: Instant) -> i32 {
    let g = match load_graph(args) {
        Ok(g) => g,
        Err(e) => return error_exit(e),
    };
    let moves = match args.value("--move").as_deref().map(MoveSet::parse) {
        Some(Ok(m)) => m,
        Some(Err(e)) => return error_exit(e),
        None => MoveSet::Pivot,
    };
    let mode = match args.value("--mode").as_deref().map(Mode::parse) {
        Some(Ok(m)) => m,
        Some(Err(e)) => return error_exit(e),
        None => Mode::Unlabelled,
    };
    if mode == Mode::Labelled && g.n() > config.labelled_max_n + 1 && !config.force {
        return error_exit(Error::BudgetExceeded(format!(
            "labelled orbits default to n <= {}; pass --force",
            config.labelled_max_n + 1
        )));
    }
    let report = orbit(&g, moves, mode, config.threads);
    let mut obj = JsonObject::new()
        .string("input", &g.to_hex())
        .string("move", moves.as_str())
        .number("unlabelled_size", report.unlabelled_size);
    if let Some(l) = report.labelled_size {
        obj = obj.number("labelled_size", l);
    }
    obj = obj
        .string("representative", &report.representative.to_line())
        .string("min_edge_representative", &report.min_edge_representative.to_line());
    if let Some((a, b)) = report.bipartite_sides {
        obj = obj.raw("bipartite_sides", &format!("[{a},{b}]"));
    }
    emit(obj.number("elapsed_ms", started.elapsed().as_millis()).finish());
    EXIT_OK
}

fn cmd_classify(args: &mut Args, config: &RunConfig, started: Instant) -> i32 {
    let Some(n): Option<usize> = args.value("--n").and_then(|v| v.parse().ok()) else {
        return fail("usage", "classify needs --n N", EXIT_USAGE);
    };
    let moves = match args.value("--move").as_deref().map(MoveSet::parse) {
        Some(Ok(m)) => m,
        Some(Err(e)) => return error_exit(e),
        None => MoveSet::Pivot,
    };
    let universe = match args.value("--universe").as_deref().map(Universe::parse) {
        Some(Ok(u)) => u,
        Some(Err(e)) => return error_exit(e),
        None => Universe::Connected,
    };
    let mode = match args.value("--mode").as_deref().map(Mode::parse) {
        Some(Ok(m)) => m,
        Some(Err(e)) => return error_exit(e),
        None => Mode::Unlabelled,
    };
    let budget = match (mode, universe, moves) {
        (Mode::Labelled, Universe::BipartiteAll | Universe::BipartiteConnected, _) => {
            config.labelled_max_n + 1
        }
        (Mode::Labelled, _, _) => config.labelled_max_n,
        (_, Universe::BipartiteAll | Universe::BipartiteConnected, _) => config.bipartite_max_n,
        (_, _, MoveSet::Lc) => config.lc_max_n,
        _ => config.classify_max_n,
    };
    if n > budget {
        if !config.force {
            return error_exit(Error::BudgetExceeded(format!(
                "classify at n={n} exceeds the default budget {budget}; pass --force"
            )));
        }
        eprintln!("pivotlab: n={n} exceeds the desk-scale budget {budget}, expect a long run");
    }
    let out_path = args.value("--out");
    match classify(n, moves, universe, mode, config.threads) {
        Ok(result) => {
            for class in &result.classes {
                let mut obj = JsonObject::new()
                    .string("rep", &crate::orbit::canonical_form(&class.rep).to_line())
                    .number("size", class.size)
                    .bool("connected", class.connected);
                if let Some((a, b)) = class.bipartite_sides {
                    obj = obj.raw("bipartite_sides", &format!("[{a},{b}]"));
                }
                emit(obj.finish());
            }
            emit(
                JsonObject::new()
                    .number("n", n)
                    .string("move", moves.as_str())
                    .string("universe", universe.as_str())
                    .string("mode", mode.as_str())
                    .number("orbits", result.orbit_count())
                    .number("elapsed_ms", started.elapsed().as_millis())
                    .finish(),
            );
            if let Some(path) = out_path {
                let text = reps_to_database(&result.classes);
                if let Err(e) = std::fs::write(&path, text) {
                    return fail("io", &format!("cannot write {path}: {e}"), EXIT_OTHER);
                }
            }
            EXIT_OK
        }
        Err(e) => error_exit(e),
    }
}

fn cmd_codes_classify(args: &mut Args, config: &RunConfig, started: Instant) -> i32 {
    let Some(n): Option<usize> = args.value("--n").and_then(|v| v.parse().ok()) else {
        return fail("usage", "codes classify needs --n N", EXIT_USAGE);
    };
    if n > config.bipartite_max_n && !config.force {
        return error_exit(Error::BudgetExceeded(format!(
            "code classification at n={n} exceeds the default budget {}; pass --force",
            config.bipartite_max_n
        )));
    }
    match crate::code::classify_codes(n, config.threads) {
        Ok(result) => {
            let per_k: Vec<String> = result.per_k.iter().map(|v| v.to_string()).collect();
            emit(
                JsonObject::new()
                    .number("n", n)
                    .number("orbits", result.orbit_count)
                    .number("indecomposable", result.indecomposable)
                    .number("isodual", result.isodual)
                    .raw("per_k", &format!("[{}]", per_k.join(",")))
                    .number("elapsed_ms", started.elapsed().as_millis())
                    .finish(),
            );
            EXIT_OK
        }
        Err(e) => error_exit(e),
    }
}

fn cmd_codes_infosets(args: &mut Args, started: Instant) -> i32 {
    let Some(path) = args.value("--file") else {
        return fail("usage", "codes infosets needs --file FILE", EXIT_USAGE);
    };
    let text = match std::fs::read_to_string(&path) {
        Ok(t) => t,
        Err(e) => return fail("io", &format!("cannot read {path}: {e}"), EXIT_OTHER),
    };
    let code = match crate::code::LinearCode::parse(&text) {
        Ok(c) => c,
        Err(e) => return error_exit(e),
    };
    match crate::code::information_set_count(&code) {
        Ok(count) => {
            emit(
                JsonObject::new()
                    .number("n", code.n())
                    .number("k", code.k())
                    .number("information_sets", count)
                    .number("elapsed_ms", started.elapsed().as_millis())
                    .finish(),
            );
            EXIT_OK
        }
        Err(e) => error_exit(e),
    }
}

fn cmd_tables(args: &mut Args, config: &RunConfig, started: Instant) -> i32 {
    let Some(id): Option<u8> = args.value("--table").and_then(|v| v.parse().ok()) else {
        return fail("usage", "tables needs --table 1..5", EXIT_USAGE);
    };
    let default_max = match id {
        1 => 6,
        2 => tables::TABLE2_DEFAULT_MAX_N,
        3 => tables::TABLE3_DEFAULT_MAX_N,
        4 => tables::TABLE4_DEFAULT_MAX_N,
        5 => tables::TABLE5_DEFAULT_MAX_N,
        _ => 6,
    };
    let max_n: usize = match args.value("--max-n") {
        Some(v) => match v.parse() {
            Ok(m) => m,
            Err(_) => return fail("usage", "--max-n wants an integer", EXIT_USAGE),
        },
        None => default_max,
    };
    if max_n > default_max {
        if !config.force {
            return error_exit(Error::BudgetExceeded(format!(
                "table {id} defaults to max n {default_max}; pass --force"
            )));
        }
        eprintln!("pivotlab: recomputing table {id} to n={max_n}, expect a long run");
    }
    let sample = args.value("--sample").and_then(|s| s.parse::<u64>().ok()).map(|s| {
        let seed = args.value("--seed").and_then(|v| v.parse().ok()).unwrap_or(1);
        (s, seed)
    });
    let pretty = args.flag("--pretty");
    match tables::table(id, max_n, config.threads, sample) {
        Ok(result) => {
            if pretty {
                print_pretty_table(&result);
            } else {
                for row in &result.rows {
                    let mut obj = JsonObject::new().number("table", id).number("n", row.n);
                    for cell in &row.cells {
                        let mut inner = JsonObject::new()
                            .string("computed", &cell.computed)
                            .bool("match", cell.matches());
                        if let Some(g) = &cell.golden {
                            inner = inner.string("golden", g);
                        }
                        if cell.sampled {
                            inner = inner.bool("sampled", true);
                        }
                        obj = obj.raw(cell.column, &inner.finish());
                    }
                    emit(obj.finish());
                }
                emit(
                    JsonObject::new()
                        .number("table", id)
                        .bool("all_match", result.all_match())
                        .number("elapsed_ms", started.elapsed().as_millis())
                        .finish(),
                );
            }
            if result.all_match() {
                EXIT_OK
            } else {
                eprintln!("pivotlab: table {id} has cells differing from the reference values");
                EXIT_GOLDEN_MISMATCH
            }
        }
        Err(e) => error_exit(e),
    }
}

fn print_pretty_table(result: &tables::TableResult) {
    let mut columns: Vec<&str> = Vec::new();
    for row in &result.rows {
        for cell in &row.cells {
            if !columns.contains(&cell.column) {
                columns.push(cell.column);
            }
        }
    }
    print!("{:>4}", "n");
    for col in &columns {
        print!("  {col:>12}");
    }
    println!();
    for row in &result.rows {
        print!("{:>4}", row.n);
        for col in &columns {
            match row.cells.iter().find(|c| &c.column == col) {
                Some(cell) => {
                    let marker = if !cell.matches() {
                        "!"
                    } else if cell.sampled {
                        "~"
                    } else {
                        ""
                    };
                    print!("  {:>12}", format!("{}{}", cell.computed, marker));
                }
                None => print!("  {:>12}", "-"),
            }
        }
        println!();
    }
}

fn cmd_verify(args: &mut Args, config: &RunConfig, started: Instant) -> i32 {
    let suite = args.value("--suite").unwrap_or_else(|| "all".into());
    let n: usize = args.value("--n").and_then(|v| v.parse().ok()).unwrap_or(5);
    let seed: u64 = args.value("--seed").and_then(|v| v.parse().ok()).unwrap_or(7);
    let cases: u64 = args.value("--cases").and_then(|v| v.parse().ok()).unwrap_or(1000);
    let mut reports = Vec::new();
    let run_one = |name: &str, reports: &mut Vec<suites::SuiteReport>| -> Result<(), Error> {
        match name {
            "pivot-identity" => {
                reports.push(suites::pivot_identity_suite(n.min(6), cases, seed)?)
            }
            "quadpiv" => reports.push(suites::quadpiv_suite(n.min(6))?),
            "onlypivot" => reports.push(suites::onlypivot_suite(cases, seed)?),
            "transform-identities" => {
                reports.push(suites::transform_identity_suite(cases.max(3), seed)?)
            }
            "rank-criterion" => reports.push(suites::rank_criterion_suite(n.min(5), seed)?),
            "family-bounds" => reports.push(suites::family_bound_suite(n.min(7), seed)?),
            "clique-law" => {
                reports.push(suites::clique_law_suite(n.clamp(2, 10), 20, config.threads)?)
            }
            other => return Err(Error::Parse(format!("unknown suite `{other}`"))),
        }
        Ok(())
    };
    let result = if suite == "all" {
        [
            "pivot-identity",
            "quadpiv",
            "onlypivot",
            "transform-identities",
            "rank-criterion",
            "family-bounds",
            "clique-law",
        ]
        .iter()
        .try_for_each(|name| run_one(name, &mut reports))
    } else {
        run_one(&suite, &mut reports)
    };
    if let Err(e) = result {
        return error_exit(e);
    }
    let mut all_passed = true;
    for report in &reports {
        all_passed &= report.passed();
        emit(
            JsonObject::new()
                .string("suite", report.name)
                .number("cases", report.cases)
                .bool("passed", report.passed())
                .string_array("failures", &report.failures)
                .finish(),
        );
    }
    emit(
        JsonObject::new()
            .bool("all_passed", all_passed)
            .number("seed", seed)
            .number("elapsed_ms", started.elapsed().as_millis())
            .finish(),
    );
    if all_passed {
        EXIT_OK
    } else {
        EXIT_OTHER
    }
}
