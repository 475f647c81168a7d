mod support;

use std::collections::BTreeMap;
use std::path::Path;
use std::time::{Duration, Instant};

use oopsie_core::checker::render::{render_json, render_text};
use oopsie_core::constprop::solve_values;
use oopsie_core::javafront::{build_cfg, parse_java, MethodBody};
use oopsie_core::oracle::Execution;
use oopsie_core::schema::load_schema;
use oopsie_core::{synth, Code, Mode, Report, Severity, SourceFile};
use rand::rngs::StdRng;
use rand::SeedableRng;
use rayon::prelude::*;

use support::{category, check, corpus, diagnostics_of, fixtures, schema, sources, Program};

const CORPUS_SECONDS: f64 = 10.0;
const LATTICE_SECONDS: f64 = 60.0;
const THROUGHPUT_SECONDS: f64 = 5.0;
const THROUGHPUT_LINES: usize = 5_000;
const MIN_POSITIVE: usize = 31;
const MIN_NEGATIVE: usize = 40;
const RANDOM_METHODS: u64 = 1_000;
const MAX_BLOCKS: usize = 12;

struct Outcome {
    pass: bool,
    summary: String,
    details: Vec<String>,
}

struct CorpusRun {
    programs: Vec<Program>,
    results: Vec<(Execution, Report)>,
    elapsed: Duration,
}

fn main() {
    let start = Instant::now();
    let (catalog, programs) = corpus();
    let results: Vec<(Execution, Report)> = programs
        .par_iter()
        .map(|p| (support::run_oracle(p), check(std::slice::from_ref(&p.source), &catalog, Mode::Sound, 1)))
        .collect();
    let run = CorpusRun { programs, results, elapsed: start.elapsed() };

    let outcomes = [
        ("confusion matrix on the corpus", confusion(&run)),
        ("differential soundness against the oracle", differential(&run)),
        ("degraded-mode locality under SQL mutation", locality(&run)),
        ("gallery reproduction", gallery()),
        ("qualifier lattice laws", lattice()),
        ("constant propagation path soundness", paths()),
        ("determinism across worker counts", determinism(&run)),
        ("throughput on generated code", throughput()),
    ];
    let mut failed = 0;
    for (i, (name, o)) in outcomes.iter().enumerate() {
        println!("{} criterion {}: {name}: {}", if o.pass { "PASS" } else { "FAIL" }, i + 1, o.summary);
        for d in o.details.iter().take(12) {
            println!("      {d}");
        }
        failed += usize::from(!o.pass);
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", outcomes.len());
        std::process::exit(1);
    }
}

fn errors(report: &Report) -> usize {
    report.count(Severity::Error)
}

fn confusion(run: &CorpusRun) -> Outcome {
    let (mut tp, mut fn_, mut fp, mut tn) = (0, 0, 0, 0);
    let mut details = Vec::new();
    for (p, (exec, report)) in run.programs.iter().zip(&run.results) {
        let name = p.source.path.display();
        if exec.sites() != p.expect {
            details.push(format!("{name}: oracle raised {:?}, fixture expects {:?}", exec.sites(), p.expect));
        }
        let positive = !exec.exceptions.is_empty();
        let flagged = errors(report) > 0;
        match (positive, flagged) {
            (true, true) => tp += 1,
            (true, false) => fn_ += 1,
            (false, true) => fp += 1,
            (false, false) => tn += 1,
        }
        if positive != flagged {
            details.push(format!("{name}: oracle positive = {positive}, checker errors = {}", errors(report)));
        }
        for e in &exec.exceptions {
            let hit = report
                .diagnostics
                .iter()
                .any(|d| d.severity == Severity::Error && d.span == e.span && category(d.code) == Some(e.category));
            if !hit {
                details.push(format!("{name}: no matching error for category {} at {}", e.category, e.span));
            }
        }
    }
    let secs = run.elapsed.as_secs_f64();
    let pass = details.is_empty()
        && fn_ == 0
        && fp == 0
        && tp >= MIN_POSITIVE
        && tn >= MIN_NEGATIVE
        && secs < CORPUS_SECONDS;
    Outcome {
        pass,
        summary: format!(
            "TP {tp}, FN {fn_}, FP {fp}, TN {tn} (need TP+FN >= {MIN_POSITIVE}, FP+TN >= {MIN_NEGATIVE}, FN = FP = 0); {secs:.2} s < {CORPUS_SECONDS} s"
        ),
        details,
    }
}

fn differential(run: &CorpusRun) -> Outcome {
    let mut clean = 0;
    let mut details = Vec::new();
    let (mut paths, mut limits, mut unmodeled) = (0, 0, 0);
    for (p, (exec, report)) in run.programs.iter().zip(&run.results) {
        paths += exec.paths;
        limits += exec.limit_hits;
        unmodeled += exec.unmodeled;
        if errors(report) == 0 {
            clean += 1;
            for e in &exec.exceptions {
                details.push(format!("{}: category {} at {} ({})", p.source.path.display(), e.category, e.span, e.detail));
            }
        }
    }
    Outcome {
        pass: details.is_empty() && clean > 0,
        summary: format!(
            "{clean} error-free programs, {} modeled exceptions among them; {paths} paths explored, {limits} cut at the loop budget, {unmodeled} unmodeled",
            details.len()
        ),
        details,
    }
}

/// Replaces the first SQL string literal with a call the checker cannot see through.
fn mutate(text: &str) -> Option<String> {
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] == b'"' {
            let mut j = i + 1;
            while j < bytes.len() && bytes[j] != b'"' {
                j += if bytes[j] == b'\\' { 2 } else { 1 };
            }
            let body = text[i + 1..j].trim_start().to_ascii_uppercase();
            if ["SELECT", "INSERT", "UPDATE", "DELETE"].iter().any(|k| body.starts_with(k)) {
                return Some(format!("{}Queries.lookup(){}", &text[..i], &text[j + 1..]));
            }
            i = j + 1;
        } else {
            i += 1;
        }
    }
    None
}

fn per_file(report: &Report, files: &[SourceFile]) -> BTreeMap<String, String> {
    files
        .iter()
        .map(|f| {
            let ds: Vec<_> = diagnostics_of(report, &f.path).into_iter().cloned().collect();
            (f.path.display().to_string(), render_text(&ds, false))
        })
        .collect()
}

fn locality(run: &CorpusRun) -> Outcome {
    let dir = fixtures().join("corpus");
    let catalog = schema(&dir);
    let files: Vec<SourceFile> = run.programs.iter().map(|p| p.source.clone()).collect();
    let base = per_file(&check(&files, &catalog, Mode::Degraded, 0), &files);
    let mut details = Vec::new();
    let mut mutated = 0;
    for (k, (_, (exec, _))) in run.programs.iter().zip(&run.results).enumerate() {
        if !exec.exceptions.is_empty() {
            continue;
        }
        let name = files[k].path.display().to_string();
        let Some(text) = mutate(&files[k].text) else {
            details.push(format!("{name}: no SQL literal to replace"));
            continue;
        };
        mutated += 1;
        let mut changed = files.clone();
        changed[k].text = text;
        let report = check(&changed, &catalog, Mode::Degraded, 0);
        let own = diagnostics_of(&report, &files[k].path);
        if own.len() != 1 || own[0].code != Code::UnextractableSql || own[0].severity != Severity::Warning {
            let got: Vec<String> = own.iter().map(|d| d.to_string()).collect();
            details.push(format!("{name}: expected one OOPS003 warning, got {got:?}"));
        }
        for (file, text) in per_file(&report, &files) {
            if file != name && text != base[&file] {
                details.push(format!("{name}: diagnostics of {file} changed"));
            }
        }
    }
    Outcome {
        pass: details.is_empty() && mutated >= MIN_NEGATIVE,
        summary: format!("{mutated} negative programs mutated, {} locality violations", details.len()),
        details,
    }
}

/// Expected findings for one gallery program: code plus a snippet that
/// identifies the line.
type Expectation = (&'static str, Mode, &'static [(Code, &'static str)]);

const GALLERY: &[Expectation] = &[
    ("LowEarners", Mode::Sound, &[(Code::GetterTypeMismatch, "rs.getInt(\"name\")")]),
    (
        "GetterMismatch",
        Mode::Sound,
        &[
            (Code::GetterTypeMismatch, "rs.getInt(1)"),
            (Code::ColumnIndexOob, "rs.getString(3)"),
            (Code::ColumnNameUnknown, "rs.getString(\"id\")"),
        ],
    ),
    (
        "SetterMismatch",
        Mode::Sound,
        &[(Code::SetterTypeMismatch, "ps.setString(1, \"5\")"), (Code::ParamIndexOob, "ps.setString(2, \"abc\")")],
    ),
    ("StockLevel", Mode::Sound, &[]),
    ("ReassignedStatement", Mode::Sound, &[]),
    ("CounterIndex", Mode::Sound, &[]),
    (
        "AnnotatedRooms",
        Mode::Sound,
        &[
            // ID is DECIMAL(10,0) in the schema, so setInt is not recommended either.
            (Code::SetterTypeMismatch, "statement.setInt(1, id)"),
            (Code::GetterTypeMismatch, "resultSet.getInt(\"ID\")"),
            (Code::GetterTypeMismatch, "resultSet.getBoolean(\"BOOKED\")"),
        ],
    ),
    (
        "GenreInsert",
        Mode::Sound,
        &[
            (Code::SetterTypeMismatch, "ps.setString(1,"),
            (Code::SetterTypeMismatch, "ps.setInt(2, 1)"),
            (Code::ParamIndexOob, "ps.setString(3,"),
        ],
    ),
    ("EmployeTypo", Mode::Sound, &[(Code::MalformedSql, "\"Select * from employe\"")]),
    ("RoomInsert", Mode::Sound, &[(Code::SetterTypeMismatch, "ps.setBoolean(4,")]),
    (
        "CountStar",
        Mode::Sound,
        &[
            (Code::UnsupportedSql, "prepareStatement(sql)"),
            (Code::UncheckedAccess, "ps.executeQuery()"),
            (Code::UncheckedAccess, "resultSet.getInt(1)"),
        ],
    ),
    ("CountStar", Mode::Degraded, &[(Code::UnsupportedSql, "prepareStatement(sql)")]),
    ("FormTypo", Mode::Sound, &[(Code::MalformedSql, "SELECT * FORM warehouse")]),
    ("ExecuteRefine", Mode::Sound, &[]),
    ("AnnotatedStatements", Mode::Sound, &[]),
    ("BindParam", Mode::Sound, &[(Code::NonlocalAccess, "ps.setString(parameterIndex")]),
    ("BindParam", Mode::Degraded, &[(Code::OutOfScope, "ps.setString(parameterIndex")]),
];

fn line_of(text: &str, snippet: &str) -> Option<u32> {
    let hits: Vec<usize> = text.lines().enumerate().filter(|(_, l)| l.contains(snippet)).map(|(i, _)| i + 1).collect();
    match hits.as_slice() {
        [one] => Some(*one as u32),
        _ => None,
    }
}

fn gallery() -> Outcome {
    let dir = fixtures().join("gallery");
    let catalog = schema(&dir);
    let all = sources(&dir);
    let mut details = Vec::new();
    for (name, mode, expected) in GALLERY {
        let file = format!("{name}.java");
        let Some(src) = all.iter().find(|f| f.path == Path::new(&file)) else {
            details.push(format!("{file}: missing"));
            continue;
        };
        let mut want = Vec::new();
        for (code, snippet) in expected.iter() {
            match line_of(&src.text, snippet) {
                Some(l) => want.push((*code, l)),
                None => details.push(format!("{file}: snippet `{snippet}` does not identify one line")),
            }
        }
        let report = check(std::slice::from_ref(src), &catalog, *mode, 1);
        let mut got: Vec<(Code, u32)> = report.diagnostics.iter().map(|d| (d.code, d.span.line)).collect();
        want.sort();
        got.sort();
        if got != want {
            details.push(format!("{file} ({mode:?}): expected {want:?}, got {got:?}"));
        }
    }
    Outcome {
        pass: details.is_empty(),
        summary: format!("{} program/mode pairs, {} mismatches", GALLERY.len(), details.len()),
        details,
    }
}

fn lattice() -> Outcome {
    let start = Instant::now();
    let u = support::lattice::universe();
    let r = support::lattice::check_laws(&u);
    let secs = start.elapsed().as_secs_f64();
    Outcome {
        pass: r.violations == 0 && secs < LATTICE_SECONDS,
        summary: format!(
            "{} qualifiers, {} triples, {} violations; {secs:.1} s < {LATTICE_SECONDS} s",
            r.elements, r.triples, r.violations
        ),
        details: r.first,
    }
}

fn paths() -> Outcome {
    let mut details = Vec::new();
    let (mut probes, mut observations, mut total_paths, mut max_blocks) = (0, 0, 0, 0);
    for seed in 0..RANDOM_METHODS {
        let mut rng = StdRng::seed_from_u64(seed);
        let (unit, blocks) = loop {
            let src = support::paths::generate(&mut rng);
            let unit = parse_java(&src, format!("R{seed}.java")).expect("generated code parses");
            let blocks = build_cfg(&unit.classes[0].methods[0]).blocks.len();
            if blocks <= MAX_BLOCKS {
                break (unit, blocks);
            }
        };
        max_blocks = max_blocks.max(blocks);
        let m = &unit.classes[0].methods[0];
        let MethodBody::Block(body) = &m.body else { unreachable!() };
        let cfg = build_cfg(m);
        let facts = solve_values(m, &cfg);
        let probe_map = support::paths::probes(body);
        let (seen, n) = support::paths::enumerate(m, body);
        total_paths += n;
        probes += probe_map.len();
        observations += seen.values().map(Vec::len).sum::<usize>();
        for v in support::paths::violations(&facts, &probe_map, &seen) {
            details.push(format!("seed {seed}: {v}"));
        }
    }
    Outcome {
        pass: details.is_empty(),
        summary: format!(
            "{RANDOM_METHODS} methods (at most {max_blocks} blocks), {total_paths} paths, {probes} probes, {observations} observed values, {} violations",
            details.len()
        ),
        details,
    }
}

fn determinism(run: &CorpusRun) -> Outcome {
    let catalog = schema(&fixtures().join("corpus"));
    let files: Vec<SourceFile> = run.programs.iter().map(|p| p.source.clone()).collect();
    let mut details = Vec::new();
    let mut count = 0;
    for mode in [Mode::Sound, Mode::Degraded] {
        let one = check(&files, &catalog, mode, 1);
        let four = check(&files, &catalog, mode, 4);
        count = count.max(one.diagnostics.len());
        if render_text(&one.diagnostics, false) != render_text(&four.diagnostics, false) {
            details.push(format!("{mode:?}: text output differs"));
        }
        if render_json(&one.diagnostics) != render_json(&four.diagnostics) {
            details.push(format!("{mode:?}: JSON output differs"));
        }
    }
    Outcome {
        pass: details.is_empty(),
        summary: format!("{} files, {count} diagnostics, 1 vs 4 workers, text and JSON identical in both modes", files.len()),
        details,
    }
}

fn throughput() -> Outcome {
    let catalog = load_schema(synth::SCHEMA).unwrap();
    let mut classes = 64;
    let files = loop {
        let files = synth::generate(42, classes, 0.05);
        if synth::line_count(&files) >= THROUGHPUT_LINES {
            break files;
        }
        classes *= 2;
    };
    let lines = synth::line_count(&files);
    let start = Instant::now();
    let report = check(&files, &catalog, Mode::Sound, 0);
    let secs = start.elapsed().as_secs_f64();
    Outcome {
        pass: lines >= THROUGHPUT_LINES && secs < THROUGHPUT_SECONDS,
        summary: format!(
            "{lines} lines in {} files analyzed in {secs:.3} s < {THROUGHPUT_SECONDS} s ({} diagnostics)",
            files.len(),
            report.diagnostics.len()
        ),
        details: Vec::new(),
    }
}
