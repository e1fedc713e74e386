//! Counting the rainbow-free one-vertex extensions of a coloring.
//!
//! Extending a coloring of `K_n` to `K_{n+1}` means coloring the `n` edges
//! of the star at the new vertex. A star assignment survives exactly when
//! no triangle through the new vertex becomes rainbow, which depends only
//! on the base edge `{u, v}` and the two star colors at `u` and `v`. The
//! search below walks star vertices in order keeping, per color, the bitmask
//! of vertices already assigned that color; a candidate color `c` at vertex
//! `v` is legal iff no earlier vertex `u` holds one of the other two colors
//! while base edge `{u, v}` holds the remaining one. That is two mask
//! intersections per candidate.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::coloring::{
    edge_index_unchecked, CanonicalCode, Color, ColorSet, EdgeColoring, MAX_VERTICES,
};
use crate::enumerate;
use crate::error::{Error, Result};

/// Colors of the star at a new vertex: entry `i` colors edge `{i, new}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StarColoring {
    colors: Vec<Color>,
}

impl StarColoring {
    pub fn new(colors: Vec<Color>) -> StarColoring {
        StarColoring { colors }
    }

    /// Number of base vertices (= number of star edges).
    pub fn n(&self) -> usize {
        self.colors.len()
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    /// The set of colors on the star.
    pub fn colors_used(&self) -> ColorSet {
        self.colors.iter().copied().collect()
    }
}

impl fmt::Display for StarColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.colors {
            write!(f, "{}", c.as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for StarColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StarColoring(\"{self}\")")
    }
}

/// Extension counts of one base coloring.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExtensionCount {
    /// Number of rainbow-free extensions.
    pub total: u64,
    /// Extensions whose union with the base uses all three colors.
    pub all_three_colors: u64,
    /// Extensions grouped by how many star edges take each color
    /// (key indexed by color code). Populated by
    /// [`count_extensions_with_profile`] only.
    pub by_color_counts: Option<BTreeMap<[u8; 3], u64>>,
}

/// Outcome of checking the extension doubling bound for one coloring: every
/// one-vertex extension has at most twice as many extensions as the base,
/// plus one.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DoublingCheck {
    /// Whether `max_count <= 2 * base_count + 1`.
    pub holds: bool,
    /// Extension count of the base coloring.
    pub base_count: u64,
    /// Largest extension count among the one-vertex extensions.
    pub max_count: u64,
    /// Lexicographically first star achieving `max_count`.
    pub witness: StarColoring,
}

/// The largest extension count within one color class, together with every
/// isomorphism class attaining it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExtremalClasses {
    pub max: u64,
    /// Canonical codes of the attaining classes, ascending.
    pub classes: Vec<CanonicalCode>,
}

/// Depth-first star search state for one base coloring.
struct StarSearch {
    n: usize,
    /// `rows[v][c]` has bit `u` set iff base edge `{u, v}` has color `c`.
    rows: [[u16; 3]; MAX_VERTICES as usize],
}

impl StarSearch {
    fn new(base: &EdgeColoring) -> StarSearch {
        let n = base.n() as usize;
        let mut rows = [[0u16; 3]; MAX_VERTICES as usize];
        for j in 1..n {
            for i in 0..j {
                let c = base.edge_color(edge_index_unchecked(i as u8, j as u8)).code() as usize;
                rows[i][c] |= 1 << j;
                rows[j][c] |= 1 << i;
            }
        }
        StarSearch { n, rows }
    }

    /// Visits every rainbow-free star in lexicographic order (red before
    /// green before blue at each vertex).
    fn visit_all<F: FnMut(&[Color], ColorSet)>(&self, mut f: F) {
        let mut star = [Color::Red; MAX_VERTICES as usize];
        let mut masks = [0u16; 3];
        self.recurse(0, &mut star, &mut masks, 0, &mut f);
    }

    fn recurse<F: FnMut(&[Color], ColorSet)>(
        &self,
        v: usize,
        star: &mut [Color; MAX_VERTICES as usize],
        masks: &mut [u16; 3],
        used: u8,
        f: &mut F,
    ) {
        if v == self.n {
            f(&star[..self.n], ColorSet::from_bits(used));
            return;
        }
        for color in Color::ALL {
            let (a, b) = color.others();
            let (a, b) = (a.code() as usize, b.code() as usize);
            // A triangle {u, v, new} goes rainbow iff star[u] and the base
            // edge {u, v} carry the two colors other than `color`.
            let conflicts =
                (masks[a] & self.rows[v][b]) | (masks[b] & self.rows[v][a]);
            if conflicts == 0 {
                let c = color.code() as usize;
                star[v] = color;
                masks[c] |= 1 << v;
                self.recurse(v + 1, star, masks, used | (1 << c), f);
                masks[c] &= !(1 << v);
            }
        }
    }
}

/// Validates that `base` is rainbow-free and returns its search state.
fn checked_search(base: &EdgeColoring) -> Result<StarSearch> {
    if let Some((i, j, k)) = base.first_rainbow_triangle() {
        return Err(Error::RainbowTriangle(i, j, k));
    }
    Ok(StarSearch::new(base))
}

/// Extension count of `base` without the per-profile breakdown.
pub fn count_extensions(base: &EdgeColoring) -> Result<ExtensionCount> {
    let search = checked_search(base)?;
    let base_used = base.colors_used();
    let mut total = 0u64;
    let mut all_three = 0u64;
    search.visit_all(|_, star_used| {
        total += 1;
        if ColorSet::from_bits(base_used.bits() | star_used.bits()) == ColorSet::ALL {
            all_three += 1;
        }
    });
    Ok(ExtensionCount {
        total,
        all_three_colors: all_three,
        by_color_counts: None,
    })
}

/// Extension count of `base` including the breakdown by how many star edges
/// take each color.
pub fn count_extensions_with_profile(base: &EdgeColoring) -> Result<ExtensionCount> {
    let search = checked_search(base)?;
    let base_used = base.colors_used();
    let mut total = 0u64;
    let mut all_three = 0u64;
    let mut profile: BTreeMap<[u8; 3], u64> = BTreeMap::new();
    search.visit_all(|star, star_used| {
        total += 1;
        if ColorSet::from_bits(base_used.bits() | star_used.bits()) == ColorSet::ALL {
            all_three += 1;
        }
        let mut counts = [0u8; 3];
        for c in star {
            counts[c.code() as usize] += 1;
        }
        *profile.entry(counts).or_insert(0) += 1;
    });
    Ok(ExtensionCount {
        total,
        all_three_colors: all_three,
        by_color_counts: Some(profile),
    })
}

/// Extension counts of `base` grouped by the full color set of the extended
/// coloring (base colors united with star colors). Index with
/// [`ColorSet::bits`]; entries at non-superset masks of the base colors are
/// zero. Summing entries whose mask has `k` bits gives the number of
/// extensions using exactly `k` colors, which is what links the census of
/// `K_n` to the census of `K_{n+1}`.
pub fn count_extensions_by_color_usage(base: &EdgeColoring) -> Result<[u64; 8]> {
    let search = checked_search(base)?;
    let base_bits = base.colors_used().bits();
    let mut by_usage = [0u64; 8];
    search.visit_all(|_, star_used| {
        by_usage[(base_bits | star_used.bits()) as usize] += 1;
    });
    Ok(by_usage)
}

/// Every rainbow-free star of `base`, in lexicographic order.
pub fn list_extensions(base: &EdgeColoring) -> Result<Vec<StarColoring>> {
    let search = checked_search(base)?;
    let mut stars = Vec::new();
    search.visit_all(|star, _| stars.push(StarColoring::new(star.to_vec())));
    Ok(stars)
}

/// Checks the doubling bound `w(extension) <= 2 * w(base) + 1` over every
/// one-vertex extension of `base`, reporting the extremal extension. The
/// extension itself must stay within [`MAX_VERTICES`], so `base` has at
/// most [`MAX_VERTICES`]` - 1` vertices.
pub fn verify_doubling(base: &EdgeColoring) -> Result<DoublingCheck> {
    if base.n() >= MAX_VERTICES {
        return Err(Error::too_big(format!(
            "doubling check materializes extensions and needs at most {} base vertices, got {}",
            MAX_VERTICES - 1,
            base.n()
        )));
    }
    let base_count = count_extensions(base)?.total;
    let search = StarSearch::new(base);
    let mut max_count = 0u64;
    let mut witness: Option<StarColoring> = None;
    let mut deferred: Result<()> = Ok(());
    search.visit_all(|star, _| {
        if deferred.is_err() {
            return;
        }
        let extended = match base.extended(star) {
            Ok(c) => c,
            Err(e) => {
                deferred = Err(e);
                return;
            }
        };
        // The extension is rainbow-free by construction of the search.
        let count = StarSearch::new(&extended).count();
        if count > max_count {
            max_count = count;
            witness = Some(StarColoring::new(star.to_vec()));
        }
    });
    deferred?;
    let witness = witness.expect("every rainbow-free coloring has a monochromatic-star extension");
    Ok(DoublingCheck {
        holds: max_count <= 2 * base_count + 1,
        base_count,
        max_count,
        witness,
    })
}

impl StarSearch {
    fn count(&self) -> u64 {
        let mut total = 0u64;
        self.visit_all(|_, _| total += 1);
        total
    }
}

/// Largest extension count among colorings of `K_n` using exactly
/// `colors` colors, with all attaining isomorphism classes. Exhaustive over
/// the census of `K_n`, hence the vertex guard. An empty color class (for
/// example three colors on `K_3`) yields `max = 0` and no classes.
pub fn max_extensions_by_class(n: u8, colors: u8) -> Result<ExtremalClasses> {
    extremal_scan(n, colors, |_, count| count.total)
}

/// Largest count of extensions forming a three-colored union, among
/// colorings of `K_n` using exactly `colors` colors.
pub fn max_all_color_extensions_by_class(n: u8, colors: u8) -> Result<u64> {
    Ok(extremal_scan(n, colors, |_, count| count.all_three_colors)?.max)
}

fn extremal_scan(
    n: u8,
    colors: u8,
    score: impl Fn(&EdgeColoring, &ExtensionCount) -> u64,
) -> Result<ExtremalClasses> {
    if !(1..=3).contains(&colors) {
        return Err(Error::invalid(format!(
            "color class must be 1, 2 or 3, got {colors}"
        )));
    }
    if !(2..=enumerate::MAX_SCAN_VERTICES).contains(&n) {
        return Err(Error::too_big(format!(
            "extremal scan enumerates the full census and supports 2 to {} vertices, got {n}",
            enumerate::MAX_SCAN_VERTICES
        )));
    }
    let mut max = 0u64;
    let mut classes: BTreeSet<CanonicalCode> = BTreeSet::new();
    enumerate::for_each_gallai(n, |coloring| {
        if coloring.colors_used().len() != colors {
            return;
        }
        let base_used = coloring.colors_used();
        let search = StarSearch::new(coloring);
        let mut count = ExtensionCount {
            total: 0,
            all_three_colors: 0,
            by_color_counts: None,
        };
        search.visit_all(|_, star_used| {
            count.total += 1;
            if base_used.bits() | star_used.bits() == ColorSet::ALL.bits() {
                count.all_three_colors += 1;
            }
        });
        let value = score(coloring, &count);
        if value > max {
            max = value;
            classes.clear();
        }
        if value == max && max > 0 {
            let code = coloring
                .canonical_code()
                .expect("scan sizes stay within canonical-form support");
            classes.insert(code);
        }
    })?;
    Ok(ExtremalClasses {
        max,
        classes: classes.into_iter().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{make_special, parse_coloring, SpecialForm};

    fn coloring(text: &str) -> EdgeColoring {
        parse_coloring(text).expect("test coloring must parse")
    }

    #[test]
    fn single_vertex_base_extends_three_ways() {
        let k1 = EdgeColoring::new(1, &[]).unwrap();
        let stars = list_extensions(&k1).unwrap();
        let rendered: Vec<String> = stars.iter().map(|s| s.to_string()).collect();
        assert_eq!(rendered, ["r", "g", "b"]);
    }

    #[test]
    fn single_edge_base_has_seven_extensions() {
        let k2 = EdgeColoring::monochromatic(2, Color::Red).unwrap();
        let stars = list_extensions(&k2).unwrap();
        let rendered: Vec<String> = stars.iter().map(|s| s.to_string()).collect();
        // Lexicographic, and missing exactly the two rainbow stars gb, bg.
        assert_eq!(rendered, ["rr", "rg", "rb", "gr", "gg", "br", "bb"]);
        assert_eq!(count_extensions(&k2).unwrap().total, 7);
    }

    #[test]
    fn monochromatic_bases_follow_the_power_formula() {
        for n in 2..=7u8 {
            let mono = EdgeColoring::monochromatic(n, Color::Green).unwrap();
            let count = count_extensions(&mono).unwrap();
            assert_eq!(count.total, (1 << (n as u64 + 1)) - 1, "n = {n}");
            // A monochromatic base can never reach three colors: two new
            // star colors on any base edge already form a rainbow triangle.
            assert_eq!(count.all_three_colors, 0);
        }
    }

    #[test]
    fn rainbow_bases_are_rejected() {
        let bad = coloring("3\nrgb");
        assert_eq!(
            count_extensions(&bad),
            Err(Error::RainbowTriangle(0, 1, 2))
        );
    }

    #[test]
    fn profile_partitions_the_total() {
        let c = coloring("4\nrbrbbr");
        let count = count_extensions_with_profile(&c).unwrap();
        assert_eq!(count.total, 21);
        let profile = count.by_color_counts.as_ref().unwrap();
        let sum: u64 = profile.values().sum();
        assert_eq!(sum, count.total);
        // Grouping by the green coordinate recovers the hand-computed
        // split: 16 green-free stars, 4 with one green edge, 1 all green.
        let mut by_green = [0u64; 5];
        for (counts, k) in profile {
            by_green[counts[Color::Green.code() as usize] as usize] += k;
        }
        assert_eq!(by_green, [16, 4, 0, 0, 1]);
    }

    #[test]
    fn color_usage_counts_partition_the_total() {
        let mono = EdgeColoring::monochromatic(3, Color::Red).unwrap();
        let usage = count_extensions_by_color_usage(&mono).unwrap();
        // Unions: {r} once (all-red star), {r,g} and {r,b} seven ways each;
        // a star with both green and blue makes some triangle rainbow.
        let r = ColorSet::EMPTY.with(Color::Red).bits() as usize;
        let rg = ColorSet::EMPTY.with(Color::Red).with(Color::Green).bits() as usize;
        let rb = ColorSet::EMPTY.with(Color::Red).with(Color::Blue).bits() as usize;
        let mut expected = [0u64; 8];
        expected[r] = 1;
        expected[rg] = 7;
        expected[rb] = 7;
        assert_eq!(usage, expected);
        assert_eq!(usage.iter().sum::<u64>(), 15);
    }

    #[test]
    fn three_colored_bases_make_every_union_three_colored() {
        let c = coloring("4\nrrgbrr");
        let count = count_extensions(&c).unwrap();
        assert_eq!(count.total, 19);
        assert_eq!(count.all_three_colors, 19);
    }

    #[test]
    fn special_two_color_formula_holds_on_small_cases() {
        for n in 3..=6u8 {
            for form in [
                SpecialForm::TwoColorVertexSpecial {
                    star: Color::Red,
                    rest: Color::Blue,
                },
                SpecialForm::TwoColorEdgeSpecial {
                    lone: Color::Green,
                    rest: Color::Red,
                },
            ] {
                let c = make_special(n, form).unwrap();
                assert_eq!(
                    count_extensions(&c).unwrap().total,
                    3 * (1 << (n as u64 - 1)) + 1,
                    "n = {n}, {form:?}"
                );
            }
        }
    }

    #[test]
    fn doubling_bound_on_a_single_edge() {
        let k2 = EdgeColoring::monochromatic(2, Color::Red).unwrap();
        let check = verify_doubling(&k2).unwrap();
        assert!(check.holds);
        assert_eq!(check.base_count, 7);
        // The monochromatic extension attains equality 15 = 2 * 7 + 1.
        assert_eq!(check.max_count, 15);
        assert_eq!(check.witness.to_string(), "rr");
    }

    #[test]
    fn extremal_scan_finds_the_special_classes() {
        let two = max_extensions_by_class(4, 2).unwrap();
        assert_eq!(two.max, 25);
        assert_eq!(two.classes.len(), 2);
        let three = max_extensions_by_class(4, 3).unwrap();
        assert_eq!(three.max, 19);
        assert_eq!(three.classes.len(), 2);
        let mono = max_extensions_by_class(4, 1).unwrap();
        assert_eq!(mono.max, 31);
        assert_eq!(mono.classes.len(), 1);
        // No coloring of K3 uses three colors without a rainbow triangle.
        let empty = max_extensions_by_class(3, 3).unwrap();
        assert_eq!(empty.max, 0);
        assert!(empty.classes.is_empty());
    }

    #[test]
    fn all_color_extension_maxima() {
        assert_eq!(max_all_color_extensions_by_class(3, 2).unwrap(), 5);
        assert_eq!(max_all_color_extensions_by_class(4, 2).unwrap(), 9);
        assert_eq!(max_all_color_extensions_by_class(4, 3).unwrap(), 19);
        assert_eq!(max_all_color_extensions_by_class(4, 1).unwrap(), 0);
    }

    #[test]
    fn guards_reject_out_of_range_sizes() {
        assert!(matches!(
            max_extensions_by_class(7, 2),
            Err(Error::UnsupportedSize(_))
        ));
        assert!(matches!(
            verify_doubling(&EdgeColoring::monochromatic(12, Color::Red).unwrap()),
            Err(Error::UnsupportedSize(_))
        ));
    }
}
