//! Acceptance criteria 1 to 6, run against the default window N = 16.
//!
//! Prints one PASS/FAIL line per criterion and exits non-zero if any fails.

use std::process::ExitCode;

use jwcat_core::homotopy::Verdict;
use jwcat_core::verify::{run_suite, Check, Report, VerificationConfig, DEFAULT_WINDOW};

struct Criterion {
    id: u8,
    title: &'static str,
    /// Check names, or `group:` prefixes meaning every check in the group.
    checks: &'static [&'static str],
    /// Series rows that must agree through at least this order.
    min_series_order: Option<i32>,
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        id: 1,
        title: "DP(P(i)) ≅ CKD(P(i)) for i = 1, 2 and naturality for c, a, b, e(1), e(2)",
        checks: &["group:objects", "group:morphisms"],
        min_series_order: None,
    },
    Criterion {
        id: 2,
        title: "P(P(1)) is P(2)<2k+1> in degree -k with maps c; DP(P(1)) matches the sl2 columns; J, K, L, M split",
        checks: &["p.P(2)", "p.P(1)", "p.idempotent", "group:sl2-diagram"],
        min_series_order: None,
    },
    Criterion {
        id: 3,
        title: "CK(P(2)) reduces to 0; CK(P(1)) matches its model; βα = γβ = βγ = 0",
        checks: &["group:ck-projectives", "group:ck-complex", "group:theta-projectives", "group:ck-dual-p2"],
        min_series_order: None,
    },
    Criterion {
        id: 4,
        title: "Koszul duality isomorphisms, the dual of P(1), and shift laws for r in -3..3",
        checks: &["group:kdm", "group:dual-p1", "group:duality-shifts"],
        min_series_order: None,
    },
    Criterion {
        id: 5,
        title: "[P(P(1))] = q/(1+q²)[P(2)] through order 33; p₂ idempotent; classes invariant under reduction",
        checks: &["group:decat"],
        min_series_order: Some(33),
    },
    Criterion {
        id: 6,
        title: "d² = 0, reduction preserves homology, minimality, associativity of B and B^!, φ an isomorphism",
        checks: &["group:properties", "group:algebra", "group:modules"],
        min_series_order: None,
    },
];

fn selected<'a>(report: &'a Report, pattern: &str) -> Vec<&'a Check> {
    match pattern.strip_prefix("group:") {
        Some(g) => report.group(g),
        None => report.find(pattern).into_iter().collect(),
    }
}

fn evaluate(report: &Report, c: &Criterion) -> Result<usize, String> {
    let mut count = 0;
    let mut problems = Vec::new();
    for pattern in c.checks {
        let found = selected(report, pattern);
        if found.is_empty() {
            problems.push(format!("no checks for {pattern}"));
        }
        for check in found {
            count += 1;
            if check.verdict != Verdict::Pass {
                problems.push(format!("{} is {}: {}", check.name, check.verdict, check.notes));
            }
            if let Some(min) = c.min_series_order {
                for row in check.series.iter().filter(|r| !r.label.contains("partial")) {
                    if row.agreement_order.is_none_or(|o| o < min) {
                        problems.push(format!("{} / {} agrees only to {:?}", check.name, row.label, row.agreement_order));
                    }
                }
            }
        }
    }
    if problems.is_empty() {
        Ok(count)
    } else {
        Err(problems.join("; "))
    }
}

fn main() -> ExitCode {
    let cfg = VerificationConfig::new(DEFAULT_WINDOW);
    assert_eq!(cfg.order, 33);
    let report = run_suite(&cfg);
    let mut failed = 0;
    for c in CRITERIA {
        match evaluate(&report, c) {
            Ok(n) => println!("PASS criterion {}: {} ({n} checks)", c.id, c.title),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {}\n    {why}", c.id, c.title);
            }
        }
    }
    if failed > 0 || report.exit_code() != 0 {
        println!("\n{}", report.render_text());
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
