//! Exhaustive census of rainbow-free colorings of `K_n`.
//!
//! Edges are assigned in index order, which grows the graph one vertex at a
//! time. When edge `{i, j}` (with `i < j`) gets its color, every edge inside
//! `{0..j} \ {i}` that could close a triangle through it is already colored,
//! so a per-vertex, per-color neighbor bitmask turns the rainbow check into
//! two mask intersections — the same trick the star search uses. Pruned
//! this way, the census of `K_8` walks about 1.2 billion leaves instead of
//! 3^28, and splits cleanly across threads on a fixed prefix of edges.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use crate::coloring::{
    edge_count, endpoints_unchecked, CanonicalCode, Color, ColoringClass, EdgeColoring,
};
use crate::error::{Error, Result};
use crate::extension;

/// Largest `n` for which the full census is enumerated.
pub const MAX_COUNT_VERTICES: u8 = 8;

/// Largest `n` for per-coloring scans over the census (class catalogs,
/// extremal searches): each member costs a classification or a canonical
/// form, so the limit sits below the raw counting limit.
pub const MAX_SCAN_VERTICES: u8 = 6;

/// Number of leading edges fixed per task when counting in parallel.
/// Nine edges cover `K_4` plus three more, giving a few thousand tasks.
const SPLIT_DEPTH: usize = 9;

/// Census totals for one `n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CountsRecord {
    pub n: u8,
    /// Colorings using exactly 1, 2 and 3 colors, in that order.
    pub by_colors: [u64; 3],
    /// Sum of `by_colors`.
    pub total: u64,
    pub elapsed: Duration,
    /// Worker threads that actually ran (1 for the serial path).
    pub workers: usize,
}

/// Census DFS state: per-vertex colored-neighbor masks plus the packed
/// coloring being built.
struct Census {
    coloring: EdgeColoring,
    /// `rows[v][c]` has bit `u` set iff the already-assigned edge `{u, v}`
    /// has color `c`.
    rows: [[u16; 3]; MAX_COUNT_VERTICES as usize],
}

impl Census {
    fn new(n: u8) -> Census {
        Census {
            coloring: EdgeColoring::monochromatic(n, Color::Red)
                .expect("callers validate the vertex count"),
            rows: [[0u16; 3]; MAX_COUNT_VERTICES as usize],
        }
    }

    #[inline(always)]
    fn assign(&mut self, e: usize, color: Color) {
        let (i, j) = endpoints_unchecked(e);
        let c = color.code() as usize;
        self.rows[i as usize][c] |= 1 << j;
        self.rows[j as usize][c] |= 1 << i;
        self.coloring.set_edge_color(e, color);
    }

    #[inline(always)]
    fn unassign(&mut self, e: usize, color: Color) {
        let (i, j) = endpoints_unchecked(e);
        let c = color.code() as usize;
        self.rows[i as usize][c] &= !(1 << j);
        self.rows[j as usize][c] &= !(1 << i);
    }

    /// Walks all rainbow-free assignments of edges `e..until`, calling `f`
    /// with the coloring and the used-color mask accumulated so far.
    fn walk<F: FnMut(&EdgeColoring, u8)>(&mut self, e: usize, until: usize, used: u8, f: &mut F) {
        if e == until {
            f(&self.coloring, used);
            return;
        }
        let (i, j) = endpoints_unchecked(e);
        let (i, j) = (i as usize, j as usize);
        for color in Color::ALL {
            let (a, b) = color.others();
            let (a, b) = (a.code() as usize, b.code() as usize);
            let conflicts =
                (self.rows[i][a] & self.rows[j][b]) | (self.rows[i][b] & self.rows[j][a]);
            if conflicts == 0 {
                self.assign(e, color);
                self.walk(e + 1, until, used | (1 << color.code()), f);
                self.unassign(e, color);
            }
        }
    }
}

fn check_census_size(n: u8, max: u8, what: &str) -> Result<()> {
    if !(2..=max).contains(&n) {
        return Err(Error::too_big(format!(
            "{what} supports 2 to {max} vertices, got {n}"
        )));
    }
    Ok(())
}

/// Calls `f` for every rainbow-free coloring of `K_n`, in lexicographic
/// order of the color string.
pub fn for_each_gallai<F: FnMut(&EdgeColoring)>(n: u8, mut f: F) -> Result<()> {
    check_census_size(n, MAX_COUNT_VERTICES, "the census")?;
    let total = edge_count(n);
    Census::new(n).walk(0, total, 0, &mut |coloring, _| f(coloring));
    Ok(())
}

/// Counts the census of `K_n` split by number of colors used, running on up
/// to `threads` worker threads. Totals are independent of the thread
/// budget; a budget of zero means one.
pub fn count_gallai(n: u8, threads: usize) -> Result<CountsRecord> {
    check_census_size(n, MAX_COUNT_VERTICES, "the census")?;
    let started = Instant::now();
    let total_edges = edge_count(n);
    let (by_colors, workers) = if threads > 1 && total_edges > SPLIT_DEPTH {
        count_parallel(n, threads)
    } else {
        let mut tally = [0u64; 3];
        Census::new(n).walk(0, total_edges, 0, &mut |_, used| {
            tally[used.count_ones() as usize - 1] += 1;
        });
        (tally, 1)
    };
    Ok(CountsRecord {
        n,
        by_colors,
        total: by_colors.iter().sum(),
        elapsed: started.elapsed(),
        workers,
    })
}

fn count_parallel(n: u8, threads: usize) -> ([u64; 3], usize) {
    let total_edges = edge_count(n);
    // Fix the first SPLIT_DEPTH edges serially; each valid prefix becomes
    // one task.
    let mut prefixes: Vec<([Color; SPLIT_DEPTH], u8)> = Vec::new();
    Census::new(n).walk(0, SPLIT_DEPTH, 0, &mut |coloring, used| {
        let mut prefix = [Color::Red; SPLIT_DEPTH];
        for (e, slot) in prefix.iter_mut().enumerate() {
            *slot = coloring.edge_color(e);
        }
        prefixes.push((prefix, used));
    });
    let workers = threads.min(prefixes.len()).max(1);
    let next = AtomicUsize::new(0);
    let by_colors = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|_| {
                let prefixes = &prefixes;
                let next = &next;
                scope.spawn(move || {
                    let mut local = [0u64; 3];
                    loop {
                        let task = next.fetch_add(1, Ordering::Relaxed);
                        let Some(&(prefix, used)) = prefixes.get(task) else {
                            break;
                        };
                        let mut census = Census::new(n);
                        for (e, &color) in prefix.iter().enumerate() {
                            census.assign(e, color);
                        }
                        census.walk(SPLIT_DEPTH, total_edges, used, &mut |_, used| {
                            local[used.count_ones() as usize - 1] += 1;
                        });
                    }
                    local
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("census worker panicked"))
            .fold([0u64; 3], |mut acc, local| {
                for (slot, v) in acc.iter_mut().zip(local) {
                    *slot += v;
                }
                acc
            })
    });
    (by_colors, workers)
}

/// Recounts the census of `K_n` through the extension identity: the number
/// of colorings of `K_n` using exactly `k` colors equals, summed over the
/// census of `K_{n-1}`, the number of extensions whose union uses exactly
/// `k` colors. An independent route to the same totals as
/// [`count_gallai`].
pub fn count_gallai_by_extension(n: u8) -> Result<CountsRecord> {
    if !(3..=MAX_COUNT_VERTICES - 1).contains(&n) {
        return Err(Error::too_big(format!(
            "extension recounting supports 3 to {} vertices, got {n}",
            MAX_COUNT_VERTICES - 1
        )));
    }
    let started = Instant::now();
    let mut by_colors = [0u64; 3];
    for_each_gallai(n - 1, |base| {
        let by_usage = extension::count_extensions_by_color_usage(base)
            .expect("census colorings are rainbow-free and within size limits");
        for (mask, &count) in by_usage.iter().enumerate().skip(1) {
            by_colors[mask.count_ones() as usize - 1] += count;
        }
    })?;
    Ok(CountsRecord {
        n,
        by_colors,
        total: by_colors.iter().sum(),
        elapsed: started.elapsed(),
        workers: 1,
    })
}

/// Predicate over census members used by [`enumerate_classes`]. Every field
/// is optional; `None` means "don't care".
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct ClassFilter {
    /// Exact number of colors used.
    pub colors_used: Option<u8>,
    /// Whether the coloring is one of the special shapes.
    pub special: Option<bool>,
    /// Whether some vertex sees only one color.
    pub monochromatic_vertex: Option<bool>,
}

impl ClassFilter {
    /// Whether a rainbow-free coloring passes the filter.
    fn matches(&self, coloring: &EdgeColoring) -> bool {
        if let Some(k) = self.colors_used {
            if coloring.colors_used().len() != k {
                return false;
            }
        }
        if let Some(want) = self.monochromatic_vertex {
            if coloring.monochromatic_vertices().is_empty() == want {
                return false;
            }
        }
        if let Some(want) = self.special {
            let class = coloring
                .classify()
                .expect("filters are applied to census members, which are rainbow-free");
            if class.kind.is_special() != want {
                return false;
            }
        }
        true
    }
}

/// One isomorphism class of the census.
#[derive(Clone, Debug)]
pub struct ClassRepresentative {
    /// The canonical representative.
    pub coloring: EdgeColoring,
    pub class: ColoringClass,
    /// Number of labeled census members in the class (after filtering the
    /// census, before grouping).
    pub members: u64,
}

/// Groups the filtered census of `K_n` into isomorphism classes under
/// vertex and color relabeling, ascending by canonical code.
pub fn enumerate_classes(n: u8, filter: &ClassFilter) -> Result<Vec<ClassRepresentative>> {
    check_census_size(n, MAX_SCAN_VERTICES, "class enumeration")?;
    let mut classes: BTreeMap<CanonicalCode, u64> = BTreeMap::new();
    for_each_gallai(n, |coloring| {
        if filter.matches(coloring) {
            let code = coloring
                .canonical_code()
                .expect("scan sizes stay within canonical-form support");
            *classes.entry(code).or_insert(0) += 1;
        }
    })?;
    Ok(classes
        .into_iter()
        .map(|(code, members)| {
            let coloring = code.coloring();
            let class = coloring
                .classify()
                .expect("class representatives are rainbow-free");
            ClassRepresentative {
                coloring,
                class,
                members,
            }
        })
        .collect())
}

/// Checks, over **all** `3^|E|` colorings of `K_n` (rainbow triangles
/// included) that use exactly `k` colors, that some vertex can be removed
/// without losing any color. The underlying fact requires
/// `n >= max(4, 2k - 1)`; smaller `n` is rejected as out of scope rather
/// than reported as a counterexample.
pub fn verify_color_retaining_vertex(n: u8, k: u8) -> Result<bool> {
    if !(1..=3).contains(&k) {
        return Err(Error::invalid(format!(
            "number of colors must be 1, 2 or 3, got {k}"
        )));
    }
    let min_n = 4u8.max(2 * k - 1);
    if n < min_n {
        return Err(Error::invalid(format!(
            "the color-retaining-vertex property concerns n >= {min_n} for {k} colors, got {n}"
        )));
    }
    if n > MAX_SCAN_VERTICES {
        return Err(Error::too_big(format!(
            "the color-retaining-vertex scan visits all 3^(n(n-1)/2) colorings and supports \
             at most {MAX_SCAN_VERTICES} vertices, got {n}"
        )));
    }
    let total = edge_count(n);
    let full = (1u16 << n) - 1;
    // edge_bits[e] = the two endpoints of edge e as a vertex mask.
    let edge_bits: Vec<u16> = (0..total)
        .map(|e| {
            let (i, j) = endpoints_unchecked(e);
            (1 << i) | (1 << j)
        })
        .collect();

    // survivors[c] = vertices whose removal would erase color c entirely,
    // i.e. the intersection of all c-edges. Passed by value so backtracking
    // is free.
    fn all_colorings_ok(
        e: usize,
        survivors: [u16; 3],
        used: u8,
        k: u8,
        full: u16,
        edge_bits: &[u16],
    ) -> bool {
        if e == edge_bits.len() {
            if used.count_ones() != k as u32 {
                return true;
            }
            let mut critical = 0u16;
            for (c, &mask) in survivors.iter().enumerate() {
                if used & (1 << c) != 0 {
                    critical |= mask;
                }
            }
            return critical != full;
        }
        for c in 0..3usize {
            let mut next = survivors;
            next[c] &= edge_bits[e];
            if !all_colorings_ok(e + 1, next, used | (1 << c), k, full, edge_bits) {
                return false;
            }
        }
        true
    }

    Ok(all_colorings_ok(0, [full; 3], 0, k, full, &edge_bits))
}
