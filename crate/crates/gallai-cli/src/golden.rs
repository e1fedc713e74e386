//! Frozen reference data for the verification suite.
//!
//! Everything in this module is an *expected* value: the suite recomputes the
//! quantities from scratch and compares against these tables, so corrupting
//! any entry here must turn `gallai verify` red.

use std::collections::BTreeMap;

use num::BigUint;

/// One census row: counts of rainbow-triangle-free colorings of `K_n` split
/// by the exact number of colors used.
#[derive(Debug, Clone, Copy)]
pub struct CountRow {
    pub n: u8,
    /// `by_colors[k - 1]` counts colorings using exactly `k` colors.
    pub by_colors: [u64; 3],
    pub total: u64,
}

impl CountRow {
    pub fn matches(&self, computed: &gallai::CountsRecord) -> bool {
        self.n == computed.n && self.by_colors == computed.by_colors && self.total == computed.total
    }
}

/// Exact census totals for `2 <= n <= 8`.
pub const EXACT_COUNTS: [CountRow; 7] = [
    CountRow { n: 2, by_colors: [3, 0, 0], total: 3 },
    CountRow { n: 3, by_colors: [3, 18, 0], total: 21 },
    CountRow { n: 4, by_colors: [3, 186, 90], total: 279 },
    CountRow { n: 5, by_colors: [3, 3066, 3060], total: 6129 },
    CountRow { n: 6, by_colors: [3, 98298, 112686], total: 210987 },
    CountRow { n: 7, by_colors: [3, 6291450, 5522496], total: 11813949 },
    CountRow { n: 8, by_colors: [3, 805306362, 407207826], total: 1212514191 },
];

/// Looks up the expected census row for `n`, if we have one.
pub fn count_row(n: u8) -> Option<&'static CountRow> {
    EXACT_COUNTS.iter().find(|row| row.n == n)
}

/// The exact totals as arbitrary-precision integers, keyed by `n`, in the
/// shape the bound-table builder expects.
pub fn exact_totals() -> BTreeMap<u32, BigUint> {
    EXACT_COUNTS
        .iter()
        .map(|row| (u32::from(row.n), BigUint::from(row.total)))
        .collect()
}

/// Expected bound-table ratio columns, truncated to two decimals:
/// `(n, upper / total, total / lower)`.
pub const BOUND_RATIOS: [(u8, &str, &str); 7] = [
    (2, "14.00", "1.00"),
    (3, "10.66", "1.00"),
    (4, "8.02", "1.47"),
    (5, "7.01", "1.99"),
    (6, "7.61", "2.14"),
    (7, "9.94", "1.87"),
    (8, "13.94", "1.50"),
];

/// Frozen iterates of the tight three-color recurrence (the one fed by the
/// exact two-color census).
pub const RECURRENCE_TIGHT: [(u32, u64); 5] =
    [(4, 90), (5, 3384), (6, 170562), (7, 14671488), (8, 2330909178)];

/// Frozen iterates of the relaxed recurrence (two-color census replaced by
/// its lower-bound closed form).
pub const RECURRENCE_RELAXED: [(u32, u64); 3] = [(4, 120), (5, 4008), (6, 192504)];

/// Frozen iterates of the majorizing recursion `f`.
pub const F_VALUES: [(u32, u64); 4] = [(4, 192), (5, 6720), (6, 333504), (7, 28636224)];

/// The three isomorphism classes of two-colored `K_4` colorings that are not
/// special, with their extension counts.
pub const PLAIN_TWO_COLOR_K4: [(&str, u64); 3] = [
    ("4\nbbbbrr", 23),
    ("4\nrbrbbr", 21),
    ("4\nrbbbbr", 23),
];

/// Split of each `PLAIN_TWO_COLOR_K4` extension count by how many green
/// edges the new star carries (green appears on none of the base edges).
pub const PLAIN_TWO_COLOR_K4_GREEN_SPLIT: [[u64; 5]; 3] = [
    [16, 4, 1, 1, 1],
    [16, 4, 0, 0, 1],
    [16, 4, 2, 0, 1],
];

/// A red triangle under an otherwise blue `K_5`, and its extension count.
pub const RED_TRIANGLE_K5: (&str, u64) = ("5\nrrrbbbbbbb", 45);

/// Two disjoint blue edges plus one green edge over a red `K_6`, and its
/// extension count.
pub const MATCHING_OVER_RED_K6: (&str, u64) = ("6\nbrrrrbrrrrrrrrg", 53);

/// The five isomorphism classes of three-colored `K_5` colorings that are
/// neither special nor contain a monochromatic vertex, with extension counts.
/// The largest count, 31, is the ceiling for this whole family.
pub const PLAIN_THREE_COLOR_K5: [(&str, u64); 5] = [
    ("5\nrrbbbrbbrg", 25),
    ("5\nrbbbbrbbrg", 29),
    ("5\ngbbbbrbbrg", 25),
    ("5\ngrrrrbrrbr", 29),
    ("5\ngrrrrbrrbb", 31),
];

/// A three-color edge-special `K_4`: `(text, extensions, monochromatic
/// stars among those extensions)`.
pub const EDGE_SPECIAL_K4: (&str, u64, u64) = ("4\nrrgbrr", 19, 3);
