//! Self-check suite behind `decindex verify`: closed forms against the
//! brute-force oracle, round trips, and the published reference rows.

use std::collections::HashSet;
use std::fmt::Write as _;

use decindex::oracle::{oracle_index_of, oracle_stream, OracleConfig};
use decindex::{
    canonicalize, cumulative_before, cumulative_upto, decode, decode_text, encode_text,
    level_count, parse_decimal, reconstruct, strict_cumulative_upto, strict_level_count, BigIndex,
    BigTuple, BigUint, Index, Mode, Sign, DEFAULT_MAX_RENDER_DIGITS,
};

/// Index the published high-precision example claims for `-47.0000000011`.
pub const PUBLISHED_HIGH_PRECISION_INDEX: &str = "443730799861852551";

/// Reference rows: index and the exact value it must decode to.
pub const REFERENCE_ROWS: [(u64, &str); 6] = [
    (1, "0"),
    (2, "0.1"),
    (10, "1.1"),
    (100, "1.0002"),
    (1000, "2.00008"),
    (10000, "0.00000000022"),
];

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{status} {}: {}", c.name, c.detail);
        }
        for note in &self.notes {
            let _ = writeln!(out, "NOTE {note}");
        }
        let passed = self.checks.iter().filter(|c| c.passed).count();
        let _ = writeln!(
            out,
            "summary: {passed}/{} checks passed{}",
            self.checks.len(),
            if self.passed() { "" } else { " (FAILED)" }
        );
        out
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub max_index: u64,
    pub max_level: u64,
    pub mode: Mode,
}

fn index(n: u64) -> BigIndex {
    Index::new(BigUint::from(n)).expect("indices start at 1")
}

fn level_counts(report: &mut VerifyReport, opts: &VerifyOptions) {
    let mut per_level = vec![0u64; opts.max_level as usize + 1];
    for t in oracle_stream::<u64>(OracleConfig::new(opts.max_level, opts.mode)) {
        per_level[(t.n1() + t.n2() + t.n3()) as usize] += 1;
    }
    let mismatches: Vec<usize> = per_level
        .iter()
        .enumerate()
        .filter(|&(k, &count)| {
            let k = k as u64;
            let formula = match opts.mode {
                Mode::Tuple => level_count(&k),
                Mode::Strict => strict_level_count(&k),
            };
            formula != count
        })
        .map(|(k, _)| k)
        .collect();
    report.check(
        format!("level counts vs oracle (K <= {})", opts.max_level),
        mismatches.is_empty(),
        if mismatches.is_empty() {
            format!("{}/{} levels agree", per_level.len(), per_level.len())
        } else {
            format!("mismatched levels {mismatches:?}")
        },
    );

    let table: Vec<u64> = (1..=7u64).map(|k| level_count(&k)).collect();
    report.check(
        "formula accuracy K=1..7",
        table == [4, 8, 14, 22, 32, 44, 58],
        format!("{table:?}"),
    );
}

fn oracle_agreement(report: &mut VerifyReport, opts: &VerifyOptions) {
    let total = match opts.mode {
        Mode::Tuple => cumulative_upto(&opts.max_level),
        Mode::Strict => strict_cumulative_upto(&opts.max_level),
    };
    let mut agree = 0u64;
    let mut first_bad = None;
    for (i, tuple) in oracle_stream::<BigUint>(OracleConfig::new(opts.max_level, opts.mode)).enumerate() {
        let n = index(i as u64 + 1);
        if opts.mode.decode(&n) == tuple {
            agree += 1;
        } else if first_bad.is_none() {
            first_bad = Some(n.to_string());
        }
    }
    report.check(
        "decode vs oracle",
        agree == total,
        match first_bad {
            None => format!("{agree}/{total} indices agree"),
            Some(n) => format!("{agree}/{total} indices agree, first mismatch at {n}"),
        },
    );
}

fn round_trips(report: &mut VerifyReport, opts: &VerifyOptions) {
    let mode = opts.mode;
    let mut tuple_ok = 0u64;
    let mut value_checked = 0u64;
    let mut value_ok = 0u64;
    let mut seen = HashSet::new();
    let mut distinct = true;
    for n in 1..=opts.max_index {
        let idx = index(n);
        let tuple = mode.decode(&idx);
        if mode.encode(&tuple).as_ref() == Ok(&idx) {
            tuple_ok += 1;
        }
        let Ok(text) = reconstruct(&tuple, DEFAULT_MAX_RENDER_DIGITS) else {
            continue;
        };
        if mode == Mode::Strict || tuple.is_strict_canonical() {
            value_checked += 1;
            if encode_text::<BigUint>(&text, mode).as_ref() == Ok(&idx) {
                value_ok += 1;
            }
        }
        if mode == Mode::Strict {
            distinct &= seen.insert(text);
        }
    }
    report.check(
        "round trips",
        tuple_ok == opts.max_index,
        format!("{tuple_ok}/{} round trips", opts.max_index),
    );
    report.check(
        "value round trips",
        value_ok == value_checked,
        format!("{value_ok}/{value_checked} decimal texts re-encode to their index"),
    );
    if mode == Mode::Strict {
        report.check(
            "strict values distinct",
            distinct,
            format!("indices 1..={} render to distinct values", opts.max_index),
        );
    }
}

fn reference_rows(report: &mut VerifyReport) {
    let mut failures = Vec::new();
    for (n, text) in REFERENCE_ROWS {
        let encoded = encode_text::<BigUint>(text, Mode::Tuple).ok();
        let decoded = decode_text(&index(n), Mode::Tuple, DEFAULT_MAX_RENDER_DIGITS).ok();
        if encoded != Some(index(n)) || decoded.as_deref() != Some(text) {
            failures.push(n);
        }
    }
    report.check(
        "reference rows",
        failures.is_empty(),
        if failures.is_empty() {
            format!("{} rows encode and decode exactly", REFERENCE_ROWS.len())
        } else {
            format!("failing indices {failures:?}")
        },
    );

    let deep = decode(&index(500_000));
    let text = reconstruct(&deep, DEFAULT_MAX_RENDER_DIGITS).unwrap_or_default();
    let expected_prefix = format!("29.{}4", "0".repeat(81));
    let level = decindex::complexity(&deep);
    report.check(
        "index 500000",
        level == BigUint::from(114u32) && text == expected_prefix,
        format!("level {level}, value {text}"),
    );
}

fn high_precision_example(report: &mut VerifyReport) {
    let text = "-47.0000000011";
    let tuple: BigTuple = canonicalize(&parse_decimal(text).expect("literal parses")).expect("fits");
    let formula = encode_text::<BigUint>(text, Mode::Tuple).expect("encodes");
    let scanned = oracle_index_of(&tuple, OracleConfig::new(66, Mode::Tuple)).ok();
    let level = decindex::complexity(&tuple);
    report.check(
        "high-precision example",
        scanned.as_ref() == Some(&formula),
        format!("{text} -> {tuple}, formula index {formula}, oracle scan {}", scanned.map_or("none".into(), |s| s.to_string())),
    );
    if formula.to_string() != PUBLISHED_HIGH_PRECISION_INDEX {
        report.notes.push(format!(
            "published index {PUBLISHED_HIGH_PRECISION_INDEX} for {text} is INCONSISTENT with the closed forms \
             (cumulative_before({level}) = {}, position {}, index {formula})",
            cumulative_before(&level),
            decindex::locate(&formula).position,
        ));
    }
}

fn collision_exhibit(report: &mut VerifyReport) {
    let tuple = BigTuple::new(
        Sign::Positive,
        BigUint::from(0u32),
        BigUint::from(0u32),
        BigUint::from(10u32),
    )
    .expect("valid composition");
    let tuple_index = decindex::encode(&tuple);
    let a = parse_decimal(&reconstruct(&tuple, 64).expect("short")).expect("parses");
    let b = parse_decimal(&decode_text(&index(2), Mode::Tuple, 64).expect("short")).expect("parses");
    let collide = a.same_value(&b);
    report.check(
        "tuple-mode value collision",
        collide,
        format!("index {tuple_index} {tuple} renders to the same value as index 2"),
    );
    report.notes.push(format!(
        "tuple mode enumerates tuples, not values: index {tuple_index} and index 2 both denote 0.1; use --strict for a value bijection"
    ));
}

pub fn run_verification(opts: VerifyOptions) -> VerifyReport {
    let mut report = VerifyReport::default();
    level_counts(&mut report, &opts);
    oracle_agreement(&mut report, &opts);
    round_trips(&mut report, &opts);
    reference_rows(&mut report);
    high_precision_example(&mut report);
    if opts.mode == Mode::Tuple {
        collision_exhibit(&mut report);
    }
    report
}
