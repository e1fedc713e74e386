//! The verification suite behind `gallai verify`.
//!
//! Every check recomputes some published quantity from scratch through the
//! library and compares it against the frozen tables in [`crate::golden`].
//! Checks never panic on expected-shape failures; they come back red with a
//! detail string instead.

use std::collections::BTreeSet;

use gallai::{bounds, enumerate, extension};
use gallai::{
    make_special, parse_coloring, CanonicalCode, ClassFilter, ClassKind, Color, SpecialForm,
};
use num::{BigRational, BigUint};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::golden::{self, CountRow};

/// Seed for the sampled checks, fixed so reruns see the same draws.
const SAMPLE_SEED: u64 = 0x9e37_79b9_7f4a_7c15;

/// How many random `K_5` colorings the sampled doubling check draws.
const DOUBLING_SAMPLES: usize = 1000;

/// Outcome of one named verification.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Check {
    /// Stable machine-readable name.
    pub name: &'static str,
    pub passed: bool,
    /// What was checked on success; what went wrong on failure.
    pub detail: String,
}

impl Check {
    fn outcome(name: &'static str, failures: Vec<String>, ok_detail: String) -> Check {
        if failures.is_empty() {
            Check { name, passed: true, detail: ok_detail }
        } else {
            Check { name, passed: false, detail: failures.join("; ") }
        }
    }
}

/// Whether every check in a finished suite passed.
pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|check| check.passed)
}

/// Runs the whole suite. `deep` adds the `n = 8` census row, which dominates
/// the runtime; `threads` is the census thread budget.
pub fn run_suite(deep: bool, threads: usize) -> Vec<Check> {
    vec![
        census_table(&golden::EXACT_COUNTS, deep, threads),
        census_extension_recount(&golden::EXACT_COUNTS),
        monochromatic_extension_formula(),
        two_color_special_extension_formula(),
        three_color_special_extension_formula(),
        reference_extension_counts(),
        mono_vertex_k5_extension_cap(),
        extremal_classes(2),
        extremal_classes(3),
        class_catalogs(),
        doubling_exhaustive(),
        doubling_sampled_k5(),
        color_retaining_vertex(),
        bound_table(&golden::EXACT_COUNTS),
        recurrence_sandwich(&golden::EXACT_COUNTS),
        closed_form_majorant(&golden::EXACT_COUNTS),
    ]
}

/// Recounts the census and compares each row of `table`. Skips `n = 8`
/// unless `deep` is set.
pub fn census_table(table: &[CountRow], deep: bool, threads: usize) -> Check {
    let mut failures = Vec::new();
    let mut covered = 0;
    for row in table {
        if row.n == 8 && !deep {
            continue;
        }
        covered += 1;
        match enumerate::count_gallai(row.n, threads) {
            Ok(record) if row.matches(&record) => {}
            Ok(record) => failures.push(format!(
                "n = {}: counted {:?} = {}, expected {:?} = {}",
                row.n, record.by_colors, record.total, row.by_colors, row.total
            )),
            Err(err) => failures.push(format!("n = {}: {err}", row.n)),
        }
    }
    Check::outcome(
        "census-table",
        failures,
        format!("recounted {covered} census rows by direct enumeration"),
    )
}

/// Recounts the census a second way — extension counts summed over the
/// census one size down — and compares each row with `3 <= n <= 7`.
pub fn census_extension_recount(table: &[CountRow]) -> Check {
    let mut failures = Vec::new();
    let mut covered = 0;
    for row in table.iter().filter(|row| (3..=7).contains(&row.n)) {
        covered += 1;
        match enumerate::count_gallai_by_extension(row.n) {
            Ok(record) if row.matches(&record) => {}
            Ok(record) => failures.push(format!(
                "n = {}: recounted {:?} = {}, expected {:?} = {}",
                row.n, record.by_colors, record.total, row.by_colors, row.total
            )),
            Err(err) => failures.push(format!("n = {}: {err}", row.n)),
        }
    }
    Check::outcome(
        "census-extension-recount",
        failures,
        format!("recounted {covered} census rows via one-vertex extensions"),
    )
}

fn formula_check(
    name: &'static str,
    cases: impl Iterator<Item = (String, gallai::EdgeColoring, u64)>,
) -> Check {
    let mut failures = Vec::new();
    let mut covered = 0;
    for (label, coloring, expected) in cases {
        covered += 1;
        match extension::count_extensions(&coloring) {
            Ok(count) if count.total == expected => {}
            Ok(count) => failures.push(format!(
                "{label}: counted {}, formula gives {expected}",
                count.total
            )),
            Err(err) => failures.push(format!("{label}: {err}")),
        }
    }
    Check::outcome(name, failures, format!("{covered} cases match the closed form"))
}

/// Monochromatic bases: `2^(n+1) - 1` extensions for `2 <= n <= 10`.
pub fn monochromatic_extension_formula() -> Check {
    let cases = (2..=10u8).map(|n| {
        let coloring = make_special(n, SpecialForm::Monochromatic { color: Color::Red })
            .expect("monochromatic colorings exist for every supported n");
        (format!("n = {n}"), coloring, (1u64 << (n + 1)) - 1)
    });
    formula_check("monochromatic-extension-formula", cases)
}

/// Two-color special bases, both shapes: `3 * 2^(n-1) + 1` extensions for
/// `3 <= n <= 10`.
pub fn two_color_special_extension_formula() -> Check {
    let cases = (3..=10u8).flat_map(|n| {
        let expected = 3 * (1u64 << (n - 1)) + 1;
        let vertex = make_special(
            n,
            SpecialForm::TwoColorVertexSpecial { star: Color::Red, rest: Color::Blue },
        )
        .expect("vertex-special shapes exist for n >= 3");
        let edge = make_special(
            n,
            SpecialForm::TwoColorEdgeSpecial { lone: Color::Green, rest: Color::Red },
        )
        .expect("edge-special shapes exist for n >= 3");
        [
            (format!("vertex-special n = {n}"), vertex, expected),
            (format!("edge-special n = {n}"), edge, expected),
        ]
    });
    formula_check("two-color-special-extension-formula", cases)
}

/// Three-color special bases, both shapes: `2^n + 3` extensions for
/// `4 <= n <= 10`.
pub fn three_color_special_extension_formula() -> Check {
    let cases = (4..=10u8).flat_map(|n| {
        let expected = (1u64 << n) + 3;
        let vertex = make_special(
            n,
            SpecialForm::ThreeColorVertexSpecial {
                star: Color::Red,
                lone: Color::Green,
                rest: Color::Blue,
            },
        )
        .expect("three-color vertex-special shapes exist for n >= 4");
        let edge = make_special(
            n,
            SpecialForm::ThreeColorEdgeSpecial { first: Color::Red, second: Color::Green },
        )
        .expect("three-color edge-special shapes exist for n >= 4");
        [
            (format!("vertex-special n = {n}"), vertex, expected),
            (format!("edge-special n = {n}"), edge, expected),
        ]
    });
    formula_check("three-color-special-extension-formula", cases)
}

/// Extension counts (and a few finer splits) of the frozen reference
/// colorings in [`crate::golden`].
pub fn reference_extension_counts() -> Check {
    let mut failures = Vec::new();

    for (index, (text, expected)) in golden::PLAIN_TWO_COLOR_K4.iter().enumerate() {
        match parse_coloring(text).and_then(|c| extension::count_extensions_with_profile(&c)) {
            Ok(count) => {
                if count.total != *expected {
                    failures.push(format!("{text:?}: counted {}, expected {expected}", count.total));
                }
                // Regroup the (reds, greens, blues) profile by green count.
                let mut by_green = [0u64; 5];
                for (split, stars) in count.by_color_counts.as_ref().into_iter().flatten() {
                    by_green[split[1] as usize] += stars;
                }
                let expected_split = golden::PLAIN_TWO_COLOR_K4_GREEN_SPLIT[index];
                if by_green != expected_split {
                    failures.push(format!(
                        "{text:?}: green split {by_green:?}, expected {expected_split:?}"
                    ));
                }
            }
            Err(err) => failures.push(format!("{text:?}: {err}")),
        }
    }

    let singles = golden::PLAIN_THREE_COLOR_K5
        .iter()
        .copied()
        .chain([golden::RED_TRIANGLE_K5, golden::MATCHING_OVER_RED_K6]);
    for (text, expected) in singles {
        match parse_coloring(text).and_then(|c| extension::count_extensions(&c)) {
            Ok(count) if count.total == expected => {}
            Ok(count) => {
                failures.push(format!("{text:?}: counted {}, expected {expected}", count.total))
            }
            Err(err) => failures.push(format!("{text:?}: {err}")),
        }
    }

    let (text, expected_total, expected_mono) = golden::EDGE_SPECIAL_K4;
    match parse_coloring(text).and_then(|c| extension::list_extensions(&c)) {
        Ok(stars) => {
            let total = stars.len() as u64;
            let mono = stars.iter().filter(|star| star.colors_used().len() == 1).count() as u64;
            if total != expected_total || mono != expected_mono {
                failures.push(format!(
                    "{text:?}: {total} extensions ({mono} monochromatic stars), \
                     expected {expected_total} ({expected_mono})"
                ));
            }
        }
        Err(err) => failures.push(format!("{text:?}: {err}")),
    }

    Check::outcome(
        "reference-extension-counts",
        failures,
        format!(
            "{} reference colorings match, including star-color splits",
            golden::PLAIN_TWO_COLOR_K4.len() + golden::PLAIN_THREE_COLOR_K5.len() + 3
        ),
    )
}

/// Three-colored `K_5` colorings that are not special but do have a
/// monochromatic vertex never beat 31 extensions, and 31 is attained.
pub fn mono_vertex_k5_extension_cap() -> Check {
    let mut failures = Vec::new();
    let mut max = 0u64;
    let mut candidates = 0u64;
    let walk = enumerate::for_each_gallai(5, |coloring| {
        if coloring.colors_used().len() != 3 {
            return;
        }
        let class = coloring.classify().expect("census members are rainbow-free");
        if class.kind.is_special() || coloring.monochromatic_vertices().is_empty() {
            return;
        }
        candidates += 1;
        let count = extension::count_extensions(coloring)
            .expect("census members are rainbow-free")
            .total;
        max = max.max(count);
    });
    if let Err(err) = walk {
        failures.push(err.to_string());
    } else if max != 31 {
        failures.push(format!("maximum over {candidates} candidates is {max}, expected 31"));
    }
    Check::outcome(
        "mono-vertex-k5-extension-cap",
        failures,
        format!("{candidates} candidate colorings stay at or below 31 extensions"),
    )
}

/// Canonical codes of the two special shapes for `colors` colors on `K_n`.
fn special_class_codes(n: u8, colors: u8) -> BTreeSet<CanonicalCode> {
    let forms: [SpecialForm; 2] = match colors {
        2 => [
            SpecialForm::TwoColorVertexSpecial { star: Color::Red, rest: Color::Blue },
            SpecialForm::TwoColorEdgeSpecial { lone: Color::Red, rest: Color::Blue },
        ],
        _ => [
            SpecialForm::ThreeColorVertexSpecial {
                star: Color::Red,
                lone: Color::Green,
                rest: Color::Blue,
            },
            SpecialForm::ThreeColorEdgeSpecial { first: Color::Red, second: Color::Green },
        ],
    };
    forms
        .iter()
        .map(|form| {
            make_special(n, *form)
                .expect("special shapes exist for n >= 4")
                .canonical_code()
                .expect("canonical form supports n <= 8")
        })
        .collect()
}

/// For `4 <= n <= 6`, the colorings with the most extensions among those
/// using exactly `colors` colors are precisely the two special shapes, and
/// the maximum equals the closed form.
pub fn extremal_classes(colors: u8) -> Check {
    let name = match colors {
        2 => "extremal-two-color-classes",
        _ => "extremal-three-color-classes",
    };
    let mut failures = Vec::new();
    for n in 4..=6u8 {
        let expected_max = match colors {
            2 => 3 * (1u64 << (n - 1)) + 1,
            _ => (1u64 << n) + 3,
        };
        let expected_classes = special_class_codes(n, colors);
        match extension::max_extensions_by_class(n, colors) {
            Ok(found) => {
                if found.max != expected_max {
                    failures.push(format!(
                        "n = {n}: maximum {} differs from the closed form {expected_max}",
                        found.max
                    ));
                }
                let found_classes: BTreeSet<CanonicalCode> = found.classes.into_iter().collect();
                if found_classes != expected_classes {
                    failures.push(format!(
                        "n = {n}: {} maximizing classes, expected exactly the two special shapes",
                        found_classes.len()
                    ));
                }
            }
            Err(err) => failures.push(format!("n = {n}: {err}")),
        }
    }
    Check::outcome(
        name,
        failures,
        "maxima and maximizing classes match the special shapes for n = 4, 5, 6".to_string(),
    )
}

/// Class catalogs of the small censuses match the frozen references.
pub fn class_catalogs() -> Check {
    let mut failures = Vec::new();

    let canon = |text: &str| {
        parse_coloring(text)
            .expect("reference colorings parse")
            .canonical_code()
            .expect("reference colorings stay within canonical-form support")
    };
    let extensions = |rep: &gallai::EdgeColoring| {
        extension::count_extensions(rep).expect("class representatives are rainbow-free").total
    };

    // Two-colored K_4, special shapes excluded: the three reference classes.
    let filter = ClassFilter { colors_used: Some(2), special: Some(false), ..Default::default() };
    match enumerate::enumerate_classes(4, &filter) {
        Ok(classes) => {
            let found: BTreeSet<CanonicalCode> = classes
                .iter()
                .map(|rep| rep.coloring.canonical_code().expect("representatives are canonical"))
                .collect();
            let expected: BTreeSet<CanonicalCode> =
                golden::PLAIN_TWO_COLOR_K4.iter().map(|(text, _)| canon(text)).collect();
            if found != expected {
                failures.push(format!(
                    "two-colored K4: {} plain classes, expected the 3 reference shapes",
                    classes.len()
                ));
            }
            let mut counts: Vec<u64> = classes.iter().map(|r| extensions(&r.coloring)).collect();
            counts.sort_unstable();
            if counts != [21, 23, 23] {
                failures.push(format!("two-colored K4: extension counts {counts:?}"));
            }
        }
        Err(err) => failures.push(format!("two-colored K4: {err}")),
    }

    // Two-colored K_3: every coloring is special, so the plain catalog is empty.
    let filter = ClassFilter { colors_used: Some(2), special: Some(false), ..Default::default() };
    match enumerate::enumerate_classes(3, &filter) {
        Ok(classes) if classes.is_empty() => {}
        Ok(classes) => failures.push(format!(
            "two-colored K3: {} non-special classes, expected none",
            classes.len()
        )),
        Err(err) => failures.push(format!("two-colored K3: {err}")),
    }

    // Three-colored K_4: exactly the two special shapes.
    let filter = ClassFilter { colors_used: Some(3), ..Default::default() };
    match enumerate::enumerate_classes(4, &filter) {
        Ok(classes) => {
            let kinds: BTreeSet<ClassKind> = classes.iter().map(|rep| rep.class.kind).collect();
            let expected = BTreeSet::from([
                ClassKind::ThreeColorVertexSpecial,
                ClassKind::ThreeColorEdgeSpecial,
            ]);
            if classes.len() != 2 || kinds != expected {
                failures.push(format!(
                    "three-colored K4: {} classes of kinds {kinds:?}, expected the two special shapes",
                    classes.len()
                ));
            }
        }
        Err(err) => failures.push(format!("three-colored K4: {err}")),
    }

    // Three-colored K_5 with no special shape and no monochromatic vertex:
    // the five reference classes.
    let filter = ClassFilter {
        colors_used: Some(3),
        special: Some(false),
        monochromatic_vertex: Some(false),
    };
    match enumerate::enumerate_classes(5, &filter) {
        Ok(classes) => {
            let found: BTreeSet<CanonicalCode> = classes
                .iter()
                .map(|rep| rep.coloring.canonical_code().expect("representatives are canonical"))
                .collect();
            let expected: BTreeSet<CanonicalCode> =
                golden::PLAIN_THREE_COLOR_K5.iter().map(|(text, _)| canon(text)).collect();
            if found != expected {
                failures.push(format!(
                    "three-colored K5: {} plain classes, expected the 5 reference shapes",
                    classes.len()
                ));
            }
            let mut counts: Vec<u64> = classes.iter().map(|r| extensions(&r.coloring)).collect();
            counts.sort_unstable();
            if counts != [25, 25, 29, 29, 31] {
                failures.push(format!("three-colored K5: extension counts {counts:?}"));
            }
        }
        Err(err) => failures.push(format!("three-colored K5: {err}")),
    }

    Check::outcome(
        "class-catalogs",
        failures,
        "small-census class catalogs match the reference shapes".to_string(),
    )
}

/// Exhaustive doubling bound on `K_2` through `K_4`: adding a vertex never
/// more than doubles-plus-one the extension count, and the `+1` is attained.
pub fn doubling_exhaustive() -> Check {
    let mut failures = Vec::new();
    let mut checked = 0u64;
    let mut violations = 0u64;
    let mut max_slack = i64::MIN;
    for n in 2..=4u8 {
        let walk = enumerate::for_each_gallai(n, |coloring| {
            let outcome =
                extension::verify_doubling(coloring).expect("census members are rainbow-free");
            checked += 1;
            max_slack = max_slack.max(outcome.max_count as i64 - 2 * outcome.base_count as i64);
            if !outcome.holds {
                violations += 1;
            }
        });
        if let Err(err) = walk {
            failures.push(format!("n = {n}: {err}"));
        }
    }
    if violations > 0 {
        failures.push(format!("{violations} of {checked} colorings beat the doubling bound"));
    }
    if failures.is_empty() && max_slack != 1 {
        failures.push(format!(
            "largest extension-count excess over doubling is {max_slack}, expected exactly 1"
        ));
    }
    Check::outcome(
        "doubling-exhaustive",
        failures,
        format!("{checked} colorings of K2..K4 checked; the +1 slack is attained"),
    )
}

/// Seeded random sample of the doubling bound over the `K_5` census.
pub fn doubling_sampled_k5() -> Check {
    let mut failures = Vec::new();
    let mut census = Vec::new();
    if let Err(err) = enumerate::for_each_gallai(5, |coloring| census.push(*coloring)) {
        failures.push(err.to_string());
        return Check::outcome("doubling-sampled-k5", failures, String::new());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
    let mut violations = 0u64;
    for _ in 0..DOUBLING_SAMPLES {
        let pick = census[rng.random_range(0..census.len())];
        match extension::verify_doubling(&pick) {
            Ok(outcome) if outcome.holds => {}
            Ok(_) => violations += 1,
            Err(err) => failures.push(format!("{pick:?}: {err}")),
        }
    }
    if violations > 0 {
        failures.push(format!(
            "{violations} of {DOUBLING_SAMPLES} sampled colorings beat the doubling bound"
        ));
    }
    Check::outcome(
        "doubling-sampled-k5",
        failures,
        format!("{DOUBLING_SAMPLES} seeded samples from {} K5 colorings", census.len()),
    )
}

/// Among all colorings (rainbow triangles included) using exactly `k`
/// colors, some vertex can always be dropped without losing a color.
pub fn color_retaining_vertex() -> Check {
    let mut failures = Vec::new();
    let cases = [(4u8, 1u8), (4, 2), (5, 2), (5, 3), (6, 3)];
    for (n, k) in cases {
        match enumerate::verify_color_retaining_vertex(n, k) {
            Ok(true) => {}
            Ok(false) => failures.push(format!("counterexample exists for n = {n}, k = {k}")),
            Err(err) => failures.push(format!("n = {n}, k = {k}: {err}")),
        }
    }
    Check::outcome(
        "color-retaining-vertex",
        failures,
        format!("{} (n, colors) cases verified exhaustively", cases.len()),
    )
}

/// The bound table brackets the exact counts and reproduces the frozen
/// truncated ratio columns.
pub fn bound_table(table: &[CountRow]) -> Check {
    let mut failures = Vec::new();
    let exact: std::collections::BTreeMap<u32, BigUint> = table
        .iter()
        .map(|row| (u32::from(row.n), BigUint::from(row.total)))
        .collect();
    match bounds::bound_table(8, &exact) {
        Ok(rows) => {
            for row in &rows {
                let Some(total) = row.exact.as_ref() else {
                    failures.push(format!("n = {}: no exact census total", row.n));
                    continue;
                };
                if !(&row.lower <= total && total <= &row.upper) {
                    failures.push(format!(
                        "n = {}: exact count {total} escapes [{}, {}]",
                        row.n, row.lower, row.upper
                    ));
                }
                let expected = golden::BOUND_RATIOS.iter().find(|(n, _, _)| u32::from(*n) == row.n);
                let Some((_, upper_ratio, lower_ratio)) = expected else {
                    failures.push(format!("n = {}: no frozen ratio row", row.n));
                    continue;
                };
                let found_upper = row.upper_over_exact.as_deref().unwrap_or("-");
                let found_lower = row.exact_over_lower.as_deref().unwrap_or("-");
                if found_upper != *upper_ratio || found_lower != *lower_ratio {
                    failures.push(format!(
                        "n = {}: ratios {found_upper}/{found_lower}, expected {upper_ratio}/{lower_ratio}",
                        row.n
                    ));
                }
            }
        }
        Err(err) => failures.push(err.to_string()),
    }
    Check::outcome(
        "bound-table",
        failures,
        "bounds bracket all 7 exact counts and both ratio columns match".to_string(),
    )
}

/// The three-color recurrences majorize the exact three-color counts, in
/// order, and hit their frozen iterates.
pub fn recurrence_sandwich(table: &[CountRow]) -> Check {
    let mut failures = Vec::new();
    for row in table.iter().filter(|row| row.n >= 4) {
        let n = u32::from(row.n);
        let three_color = BigUint::from(row.by_colors[2]);
        let recurrence = match bounds::c3_recurrence_bound(n) {
            Ok(recurrence) => recurrence,
            Err(err) => {
                failures.push(format!("n = {n}: {err}"));
                continue;
            }
        };
        let f = match bounds::f_recursion(n) {
            Ok(f) => f,
            Err(err) => {
                failures.push(format!("n = {n}: {err}"));
                continue;
            }
        };
        if !(three_color <= recurrence.tight
            && recurrence.tight <= recurrence.relaxed
            && recurrence.relaxed <= f)
        {
            failures.push(format!(
                "n = {n}: expected {three_color} <= {} <= {} <= {f}",
                recurrence.tight, recurrence.relaxed
            ));
        }
    }
    for (n, expected) in golden::RECURRENCE_TIGHT {
        match bounds::c3_recurrence_bound(n) {
            Ok(recurrence) if recurrence.tight == BigUint::from(expected) => {}
            Ok(recurrence) => failures.push(format!(
                "n = {n}: tight iterate {} differs from frozen {expected}",
                recurrence.tight
            )),
            Err(err) => failures.push(format!("n = {n}: {err}")),
        }
    }
    for (n, expected) in golden::RECURRENCE_RELAXED {
        match bounds::c3_recurrence_bound(n) {
            Ok(recurrence) if recurrence.relaxed == BigUint::from(expected) => {}
            Ok(recurrence) => failures.push(format!(
                "n = {n}: relaxed iterate {} differs from frozen {expected}",
                recurrence.relaxed
            )),
            Err(err) => failures.push(format!("n = {n}: {err}")),
        }
    }
    for (n, expected) in golden::F_VALUES {
        match bounds::f_recursion(n) {
            Ok(f) if f == BigUint::from(expected) => {}
            Ok(f) => failures.push(format!("n = {n}: f {f} differs from frozen {expected}")),
            Err(err) => failures.push(format!("n = {n}: {err}")),
        }
    }
    Check::outcome(
        "recurrence-sandwich",
        failures,
        "three-color counts <= tight <= relaxed <= f, with frozen iterates".to_string(),
    )
}

/// The linear-times-exponential majorant dominates everything it should,
/// and the induction step behind it closes for every checked size.
pub fn closed_form_majorant(table: &[CountRow]) -> Check {
    let mut failures = Vec::new();
    for row in table {
        let n = u32::from(row.n);
        match bounds::c3_claim_bound(n) {
            Ok(bound) if BigUint::from(row.by_colors[2]) <= bound => {}
            Ok(bound) => failures.push(format!(
                "n = {n}: three-color count {} beats the claimed bound {bound}",
                row.by_colors[2]
            )),
            Err(err) => failures.push(format!("n = {n}: {err}")),
        }
    }
    match bounds::f_recursion(1) {
        Ok(f) if f == BigUint::from(0u8) => {}
        Ok(f) => failures.push(format!("f starts at {f}, expected 0")),
        Err(err) => failures.push(format!("n = 1: {err}")),
    }
    for n in 2..=64u32 {
        let dominated =
            bounds::f_recursion(n).and_then(|f| Ok(f <= bounds::c3_claim_bound(n)?));
        match dominated {
            Ok(true) => {}
            Ok(false) => failures.push(format!("n = {n}: f escapes the claimed bound")),
            Err(err) => failures.push(format!("n = {n}: {err}")),
        }
    }
    for n in 4..=64u32 {
        match bounds::induction_step_holds(n) {
            Ok(true) => {}
            Ok(false) => failures.push(format!("induction step fails at n = {n}")),
            Err(err) => failures.push(format!("n = {n}: {err}")),
        }
    }
    match bounds::k_value(4) {
        Ok(k) if k == BigRational::from_integer(3.into()) => {}
        Ok(k) => failures.push(format!("normalized f at n = 4 is {k}, expected 3")),
        Err(err) => failures.push(format!("n = 4: {err}")),
    }
    match bounds::k_value(5) {
        Ok(k) if k == BigRational::new(105.into(), 16.into()) => {}
        Ok(k) => failures.push(format!("normalized f at n = 5 is {k}, expected 105/16")),
        Err(err) => failures.push(format!("n = 5: {err}")),
    }
    Check::outcome(
        "closed-form-majorant",
        failures,
        "majorant dominates f up to n = 64 and the induction step closes".to_string(),
    )
}
