//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Tolerances are exact throughout: zero disagreements, zero indeterminate
//! oracle outcomes, `trials = 5` and the default seed.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use nicepar::classify::{
    count_even_orbits, exceptional_table, genfun_coefficients, is_nice, nice_c_with, nice_d_with,
    printed_exceptional_count, printed_exceptional_table, coloring_bits, OddReading,
};
use nicepar::jordan::{dimension_report, generic_rank, jordan_form};
use nicepar::oracle::matrix_model::MatrixModel;
use nicepar::oracle::{self, GradedAlgebra, RankReport, DEFAULT_SEED, DEFAULT_TRIALS};
use nicepar::parabolic::{blocks_to_coloring, coloring_to_blocks, levi_dim};
use nicepar::richardson::build_matrix;
use nicepar::{BlockSequence, LieType, ParabolicSpec};

const MAX_RANK: usize = 7;
const EQUIVALENCE_SAMPLES: usize = 240;
const GENFUN_DEGREE: usize = 40;
const GENFUN_COUNT_UP_TO: usize = 25;

/// Criteria that cannot pass as stated, with the reason. They still print
/// FAIL; only an unexpected failure makes the run exit nonzero.
const KNOWN_FAILURES: &[(usize, &str)] = &[(
    1,
    "the printed tables list G2 with the long root first, have 1001 for 1000 in F4, and give 28 E8 entries against a claimed 29",
)];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn classical_specs() -> Vec<ParabolicSpec> {
    let mut out = Vec::new();
    for t in [LieType::A, LieType::B, LieType::C, LieType::D] {
        for n in t.min_rank()..=MAX_RANK {
            out.extend(ParabolicSpec::all(t, n).unwrap());
        }
    }
    out
}

fn exceptional_tables() -> Outcome {
    let mut mismatches = Vec::new();
    let mut corrected_ok = true;
    let mut counts = Vec::new();
    for t in [LieType::G2, LieType::F4, LieType::E6, LieType::E7, LieType::E8] {
        let n = t.fixed_rank().unwrap();
        let mut found = BTreeSet::new();
        for s in ParabolicSpec::all(t, n).unwrap() {
            match oracle::is_nice_oracle(&s, DEFAULT_TRIALS, DEFAULT_SEED) {
                Ok(v) if v.nice => {
                    found.insert(coloring_bits(s.coloring()));
                }
                Ok(_) => {}
                Err(e) => return outcome(false, format!("oracle indeterminate: {e}")),
            }
        }
        let printed: BTreeSet<String> = printed_exceptional_table(t).unwrap().iter().map(|s| s.to_string()).collect();
        let embedded: BTreeSet<String> = exceptional_table(t).unwrap().iter().map(|s| s.to_string()).collect();
        corrected_ok &= found == embedded;
        for extra in found.difference(&printed) {
            mismatches.push(format!("{t} {extra} nice but not listed"));
        }
        for missing in printed.difference(&found) {
            mismatches.push(format!("{t} {missing} listed but not nice"));
        }
        let claimed = printed_exceptional_count(t).unwrap();
        if found.len() != claimed {
            mismatches.push(format!("{t} has {} nice, claimed {claimed}", found.len()));
        }
        counts.push(format!("{t} {}/{}", found.len(), 1 << n));
    }
    let detail = format!(
        "oracle counts [{}]; oracle equals corrected tables: {corrected_ok}; mismatches vs printed tables: {}",
        counts.join(", "),
        if mismatches.is_empty() { "none".to_string() } else { mismatches.join("; ") }
    );
    outcome(mismatches.is_empty() && corrected_ok, detail)
}

fn three_way_agreement(specs: &[ParabolicSpec]) -> Outcome {
    let mut disagreements = Vec::new();
    let mut indeterminate = 0;
    for s in specs {
        let blocks = coloring_to_blocks(s).unwrap();
        let closed = is_nice(s).nice;
        let dim_route = dimension_report(&blocks).unwrap().nice();
        match oracle::is_nice_oracle(s, DEFAULT_TRIALS, DEFAULT_SEED) {
            Ok(v) if v.nice == closed && dim_route == closed => {}
            Ok(v) => disagreements.push(format!("{s}: classify {closed}, dimension {dim_route}, oracle {}", v.nice)),
            Err(_) => indeterminate += 1,
        }
    }
    outcome(
        disagreements.is_empty() && indeterminate == 0,
        format!(
            "{} colorings of A/B/C/D up to rank {MAX_RANK}; disagreements {}; indeterminate {indeterminate}{}",
            specs.len(),
            disagreements.len(),
            disagreements.first().map(|d| format!("; first: {d}")).unwrap_or_default()
        ),
    )
}

/// `dim g^X` of the Richardson matrix, through the graded root-space oracle.
fn richardson_centralizer(b: &BlockSequence) -> usize {
    let model = MatrixModel::new(b.lie_type(), b.rank()).unwrap();
    let x = model.decompose(&build_matrix(b).unwrap().to_exact()).unwrap();
    let alg = GradedAlgebra::new(&blocks_to_coloring(b)).unwrap();
    RankReport::compute(&alg, &x).unwrap().centralizer_dim()
}

fn golden_examples() -> Outcome {
    let mut failures = Vec::new();
    let mut check = |label: &str, ok: bool| {
        if !ok {
            failures.push(label.to_string());
        }
    };
    let bs = |t, b: &[usize]| BlockSequence::new(t, b.to_vec()).unwrap();
    let cases: [(&str, BlockSequence, Option<&[usize]>, Option<&[usize]>, usize); 5] = [
        ("C5 (3,4,3)", bs(LieType::C, &[3, 4, 3]), Some(&[3, 3, 2, 2]), Some(&[4, 4, 2]), 19),
        ("C6 (2,4,4,2)", bs(LieType::C, &[2, 4, 4, 2]), Some(&[4, 4, 2, 2]), None, 20),
        ("B5 (3,5,3)", bs(LieType::B, &[3, 5, 3]), Some(&[3, 3, 3, 1, 1]), Some(&[5, 3, 3]), 19),
        ("D5 (2,3,3,2)", bs(LieType::D, &[2, 3, 3, 2]), Some(&[4, 4, 1, 1]), None, 13),
        ("D11 (1,3,5,4,5,3,1)", bs(LieType::D, &[1, 3, 5, 4, 5, 3, 1]), None, None, 41),
    ];
    for (label, b, partition, dual, dim) in cases {
        let r = dimension_report(&b).unwrap();
        if let Some(p) = partition {
            check(&format!("{label} partition"), r.partition.parts() == p);
        }
        if let Some(d) = dual {
            check(&format!("{label} dual"), r.dual.parts() == d);
        }
        check(&format!("{label} dim m"), levi_dim(&b) == dim);
        check(&format!("{label} closed-form centralizer"), r.centralizer_dim == dim);
        check(&format!("{label} dim g^X_R"), richardson_centralizer(&b) == dim);
    }
    let detail = if failures.is_empty() {
        "C5 19, C6 20, B5 19, D5 13, D11 41; partitions (3,3,2,2), (4,4,2,2), (3,3,3,1,1), (4,4,1,1)".to_string()
    } else {
        format!("failed: {}", failures.join(", "))
    };
    outcome(failures.is_empty(), detail)
}

fn richardson_validity(specs: &[ParabolicSpec]) -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    let mut models = std::collections::HashMap::new();
    for s in specs {
        if !is_nice(s).nice {
            continue;
        }
        checked += 1;
        let b = coloring_to_blocks(s).unwrap();
        let model = models.entry((s.lie_type(), s.rank())).or_insert_with(|| MatrixModel::new(s.lie_type(), s.rank()).unwrap());
        let m = match build_matrix(&b) {
            Ok(m) => m,
            Err(e) => {
                failures.push(format!("{s}: {e}"));
                continue;
            }
        };
        let x = m.to_exact();
        let member = model.contains(&x);
        let degree_one = m.degree_one_support();
        let dim_m = levi_dim(&b);
        let centralizer = model
            .decompose(&x)
            .ok()
            .and_then(|el| RankReport::compute(&GradedAlgebra::new(&blocks_to_coloring(&b)).unwrap(), &el).ok())
            .map(|r| r.centralizer_dim());
        let ranks_ok = m.power_ranks().iter().enumerate().all(|(j, &r)| r == generic_rank(&b, j + 1))
            && jordan_form(&b).unwrap().ranks == m.power_ranks();
        if !(member && degree_one && centralizer == Some(dim_m) && ranks_ok) {
            failures.push(format!(
                "{s} {b}: member {member}, degree-1 {degree_one}, dim g^X {centralizer:?} vs {dim_m}, ranks {ranks_ok}"
            ));
        }
    }
    outcome(
        failures.is_empty(),
        format!(
            "{checked} nice classical specs up to rank {MAX_RANK}; failures {}{}",
            failures.len(),
            failures.first().map(|d| format!("; first: {d}")).unwrap_or_default()
        ),
    )
}

fn generating_function() -> Outcome {
    let (lhs, rhs) = genfun_coefficients(GENFUN_DEGREE);
    let first_diff = lhs.iter().zip(&rhs).position(|(a, b)| a != b);
    let mut count_mismatch = None;
    for n in 1..=GENFUN_COUNT_UP_TO {
        let (count, _) = count_even_orbits(LieType::A, n - 1).unwrap();
        if lhs[n - 1] != count as i64 {
            count_mismatch = Some(n);
            break;
        }
    }
    outcome(
        first_diff.is_none() && count_mismatch.is_none(),
        format!(
            "sides agree to degree {GENFUN_DEGREE}: {}; coefficients equal even-orbit counts of sl_n for n <= {GENFUN_COUNT_UP_TO}: {}",
            first_diff.map_or("yes".to_string(), |d| format!("no, first difference at degree {}", d + 1)),
            count_mismatch.map_or("yes".to_string(), |n| format!("no, n = {n}"))
        ),
    )
}

fn surjective_injective_equivalence() -> Outcome {
    let mut specs = Vec::new();
    for t in [LieType::A, LieType::B, LieType::C, LieType::D, LieType::G2, LieType::F4] {
        let lo = t.min_rank();
        let hi = t.fixed_rank().unwrap_or(5);
        for n in lo..=hi.min(5) {
            specs.extend(ParabolicSpec::all(t, n).unwrap().into_iter().filter(|s| s.coloring().contains(&1)));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let (mut agree, mut onto) = (0, 0);
    let mut first_bad = None;
    for _ in 0..EQUIVALENCE_SAMPLES {
        let s = &specs[rng.gen_range(0..specs.len())];
        let alg = GradedAlgebra::new(s).unwrap();
        // sparse samples reach non-generic elements as well
        let keep = rng.gen_range(1..=4);
        let mut terms = Vec::new();
        for &b in alg.piece(1) {
            if rng.gen_range(0..4) < keep {
                terms.push((b, rng.gen_range(-3i64..=3)));
            }
        }
        let x = oracle::int_element(&terms);
        let surjective = oracle::surjectivity_check(&alg, &x).unwrap();
        let injective = oracle::injectivity_check(&alg, &x).unwrap();
        if surjective == injective {
            agree += 1;
        } else if first_bad.is_none() {
            first_bad = Some(s.to_string());
        }
        onto += usize::from(surjective);
    }
    outcome(
        agree == EQUIVALENCE_SAMPLES,
        format!(
            "{agree}/{EQUIVALENCE_SAMPLES} sampled (spec, x) pairs agree ({onto} surjective, {} not){}",
            EQUIVALENCE_SAMPLES - onto,
            first_bad.map(|s| format!("; first disagreement {s}")).unwrap_or_default()
        ),
    )
}

fn arbitration(specs: &[ParabolicSpec]) -> Outcome {
    let (mut exact_bad, mut at_most_bad, mut compared) = (0, 0, 0);
    for s in specs.iter().filter(|s| matches!(s.lie_type(), LieType::C | LieType::D)) {
        let b = coloring_to_blocks(s).unwrap();
        let Ok(v) = oracle::is_nice_oracle(s, DEFAULT_TRIALS, DEFAULT_SEED) else {
            return outcome(false, format!("oracle indeterminate on {s}"));
        };
        let verdict = |r| match s.lie_type() {
            LieType::C => nice_c_with(b.blocks(), r).nice,
            _ => nice_d_with(b.blocks(), r).unwrap().nice,
        };
        compared += 1;
        exact_bad += usize::from(verdict(OddReading::ExactlyTwice) != v.nice);
        at_most_bad += usize::from(verdict(OddReading::AtMostTwice) != v.nice);
    }
    let readings_resolved = exact_bad == 0 && at_most_bad == 0;

    // the worked B example: its numbers fit B5 (3,5,3), not the B4 label (2,5,2)
    let fits = |s: &str| {
        let b = coloring_to_blocks(&s.parse().unwrap()).unwrap();
        let r = dimension_report(&b).unwrap();
        r.partition.parts() == [3, 3, 3, 1, 1] && r.dual.parts() == [5, 3, 3] && r.centralizer_dim == 19
    };
    let label_resolved = fits("B5:0,0,1,0,0") && !fits("B4:0,1,0,0");
    outcome(
        readings_resolved && label_resolved,
        format!(
            "odd-length readings on {compared} C/D specs: exactly-twice {exact_bad} disagreements, \
             at-most-twice {at_most_bad} (readings coincide); worked B example is B5 (3,5,3): {label_resolved}"
        ),
    )
}

fn main() -> ExitCode {
    println!("acceptance: seed {DEFAULT_SEED:#x}, trials {DEFAULT_TRIALS}, exact arithmetic, zero tolerance");
    let specs = classical_specs();
    let criteria: [(&str, Box<dyn Fn() -> Outcome>); 7] = [
        ("exceptional tables reproduced by the oracle", Box::new(exceptional_tables)),
        ("classical three-way agreement", Box::new(|| three_way_agreement(&specs))),
        ("golden worked examples", Box::new(golden_examples)),
        ("Richardson matrix validity", Box::new(|| richardson_validity(&specs))),
        ("generating-function identity", Box::new(generating_function)),
        ("surjectivity/injectivity equivalence", Box::new(surjective_injective_equivalence)),
        ("open-question arbitration", Box::new(|| arbitration(&specs))),
    ];
    let (mut failed, mut unexpected) = (0, 0);
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        let known = KNOWN_FAILURES.iter().find(|(c, _)| *c == i + 1).map(|(_, why)| *why);
        if !o.pass {
            failed += 1;
            unexpected += usize::from(known.is_none());
        }
        println!(
            "{} criterion {}: {name} ({:.1}s): {}",
            if o.pass { "PASS" } else { "FAIL" },
            i + 1,
            start.elapsed().as_secs_f64(),
            o.detail
        );
        if let (false, Some(why)) = (o.pass, known) {
            println!("     known failure: {why}");
        }
    }
    println!("acceptance: {} passed, {failed} failed ({unexpected} unexpected)", criteria.len() - failed);
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
