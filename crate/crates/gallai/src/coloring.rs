//! Edge colorings of complete graphs and their structure.
//!
//! Vertices of `K_n` are `0..n`. The edge `{i, j}` with `i < j` lives at
//! index `j(j-1)/2 + i`, so growing the graph by one vertex appends the new
//! star as a contiguous suffix and never renumbers existing edges. Colors
//! are packed two bits per edge, which keeps a coloring of up to `K_12`
//! (66 edges) in three words and makes copies free.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Largest complete graph an [`EdgeColoring`] can represent.
pub const MAX_VERTICES: u8 = 12;

/// Number of edges of `K_12`, the largest supported graph.
pub const MAX_EDGES: usize = (MAX_VERTICES as usize * (MAX_VERTICES as usize - 1)) / 2;

/// Largest `n` for which canonical forms are computed (brute force over
/// `n! * 3!` relabelings).
pub const MAX_CANONICAL_VERTICES: u8 = 8;

/// One of the three edge colors. The numeric codes (`r = 0`, `g = 1`,
/// `b = 2`) are fixed and shared by the text format, packed storage and
/// canonical forms.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
#[repr(u8)]
pub enum Color {
    Red = 0,
    Green = 1,
    Blue = 2,
}

impl Color {
    /// All colors in code order.
    pub const ALL: [Color; 3] = [Color::Red, Color::Green, Color::Blue];

    /// The fixed numeric code of this color.
    #[inline]
    pub const fn code(self) -> u8 {
        self as u8
    }

    /// Inverse of [`Color::code`].
    #[inline]
    pub const fn from_code(code: u8) -> Option<Color> {
        match code {
            0 => Some(Color::Red),
            1 => Some(Color::Green),
            2 => Some(Color::Blue),
            _ => None,
        }
    }

    /// Single-letter form used by the text format.
    #[inline]
    pub const fn as_char(self) -> char {
        match self {
            Color::Red => 'r',
            Color::Green => 'g',
            Color::Blue => 'b',
        }
    }

    /// Inverse of [`Color::as_char`].
    #[inline]
    pub const fn from_char(ch: char) -> Option<Color> {
        match ch {
            'r' => Some(Color::Red),
            'g' => Some(Color::Green),
            'b' => Some(Color::Blue),
            _ => None,
        }
    }

    /// The two colors other than `self`, in code order.
    #[inline]
    pub const fn others(self) -> (Color, Color) {
        match self {
            Color::Red => (Color::Green, Color::Blue),
            Color::Green => (Color::Red, Color::Blue),
            Color::Blue => (Color::Red, Color::Green),
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::Red => "red",
            Color::Green => "green",
            Color::Blue => "blue",
        })
    }
}

/// A subset of the three colors, kept as a 3-bit mask (bit `c` set means
/// color with code `c` is present).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ColorSet(u8);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);
    pub const ALL: ColorSet = ColorSet(0b111);

    /// Builds a set from a raw 3-bit mask. Bits above the third are ignored.
    #[inline]
    pub const fn from_bits(bits: u8) -> ColorSet {
        ColorSet(bits & 0b111)
    }

    /// The raw 3-bit mask.
    #[inline]
    pub const fn bits(self) -> u8 {
        self.0
    }

    #[inline]
    pub const fn contains(self, color: Color) -> bool {
        self.0 & (1 << color.code()) != 0
    }

    #[inline]
    pub const fn with(self, color: Color) -> ColorSet {
        ColorSet(self.0 | (1 << color.code()))
    }

    #[inline]
    pub fn insert(&mut self, color: Color) {
        self.0 |= 1 << color.code();
    }

    /// Number of colors present.
    #[inline]
    pub const fn len(self) -> u8 {
        self.0.count_ones() as u8
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = Color> {
        Color::ALL.into_iter().filter(move |c| self.contains(*c))
    }
}

impl FromIterator<Color> for ColorSet {
    fn from_iter<T: IntoIterator<Item = Color>>(iter: T) -> Self {
        let mut set = ColorSet::EMPTY;
        for c in iter {
            set.insert(c);
        }
        set
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ColorSet{{")?;
        for c in self.iter() {
            write!(f, "{}", c.as_char())?;
        }
        write!(f, "}}")
    }
}

/// Endpoints `(i, j)` with `i < j` of every edge index up to `K_12`. The
/// encoding is independent of `n`, so one table serves all sizes.
const ENDPOINTS: [(u8, u8); MAX_EDGES] = {
    let mut table = [(0u8, 0u8); MAX_EDGES];
    let mut j = 1usize;
    while j < MAX_VERTICES as usize {
        let mut i = 0usize;
        while i < j {
            table[j * (j - 1) / 2 + i] = (i as u8, j as u8);
            i += 1;
        }
        j += 1;
    }
    table
};

/// Index of edge `{i, j}` in the fixed edge order (`i != j`, both `< n`).
pub fn edge_index(i: u8, j: u8, n: u8) -> Result<usize> {
    if i == j || i >= n || j >= n {
        return Err(Error::invalid(format!(
            "edge ({i}, {j}) is not an edge of a complete graph on {n} vertices"
        )));
    }
    let (lo, hi) = if i < j { (i, j) } else { (j, i) };
    Ok(edge_index_unchecked(lo, hi))
}

#[inline(always)]
pub(crate) const fn edge_index_unchecked(i: u8, j: u8) -> usize {
    debug_assert!(i < j);
    (j as usize * (j as usize - 1)) / 2 + i as usize
}

/// Endpoints `(i, j)`, `i < j`, of the edge at `index`.
pub fn edge_endpoints(index: usize) -> Result<(u8, u8)> {
    ENDPOINTS
        .get(index)
        .copied()
        .ok_or_else(|| Error::invalid(format!("edge index {index} out of range")))
}

#[inline(always)]
pub(crate) const fn endpoints_unchecked(index: usize) -> (u8, u8) {
    ENDPOINTS[index]
}

/// Number of edges of `K_n`.
#[inline]
pub const fn edge_count(n: u8) -> usize {
    (n as usize * (n as usize - 1)) / 2
}

/// An edge coloring of `K_n` in colors red, green, blue.
///
/// Supports `1 <= n <= 12`; `n = 1` is the degenerate edgeless base from
/// which every one-vertex extension is trivially rainbow-free. The type
/// stores any coloring, rainbow triangles included — operations that
/// require a rainbow-free coloring check and report otherwise.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    n: u8,
    words: [u64; 3],
}

impl EdgeColoring {
    /// Builds a coloring of `K_n` from colors listed in edge-index order.
    pub fn new(n: u8, colors: &[Color]) -> Result<EdgeColoring> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::invalid(format!(
                "vertex count must be between 1 and {MAX_VERTICES}, got {n}"
            )));
        }
        let expected = edge_count(n);
        if colors.len() != expected {
            return Err(Error::invalid(format!(
                "a coloring of a complete graph on {n} vertices needs {expected} edge colors, got {}",
                colors.len()
            )));
        }
        let mut coloring = EdgeColoring { n, words: [0; 3] };
        for (e, &c) in colors.iter().enumerate() {
            coloring.set_edge_color(e, c);
        }
        Ok(coloring)
    }

    /// The all-`color` coloring of `K_n`.
    pub fn monochromatic(n: u8, color: Color) -> Result<EdgeColoring> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::invalid(format!(
                "vertex count must be between 1 and {MAX_VERTICES}, got {n}"
            )));
        }
        let mut coloring = EdgeColoring { n, words: [0; 3] };
        for e in 0..edge_count(n) {
            coloring.set_edge_color(e, color);
        }
        Ok(coloring)
    }

    #[inline]
    pub fn n(&self) -> u8 {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        edge_count(self.n)
    }

    /// Color of the edge at `index` (must be `< self.edge_count()`).
    #[inline(always)]
    pub fn edge_color(&self, index: usize) -> Color {
        debug_assert!(index < self.edge_count());
        let code = (self.words[index >> 5] >> ((index & 31) * 2)) & 0b11;
        match Color::from_code(code as u8) {
            Some(c) => c,
            // Unreachable: constructors only ever store codes 0..=2.
            None => unreachable!("corrupt packed color"),
        }
    }

    #[inline(always)]
    pub(crate) fn set_edge_color(&mut self, index: usize, color: Color) {
        debug_assert!(index < self.edge_count());
        let word = &mut self.words[index >> 5];
        let shift = (index & 31) * 2;
        *word = (*word & !(0b11 << shift)) | ((color.code() as u64) << shift);
    }

    /// Color of edge `{i, j}` with endpoint validation.
    pub fn color(&self, i: u8, j: u8) -> Result<Color> {
        Ok(self.edge_color(edge_index(i, j, self.n)?))
    }

    /// Colors in edge-index order.
    pub fn edge_colors(&self) -> impl Iterator<Item = Color> + '_ {
        (0..self.edge_count()).map(move |e| self.edge_color(e))
    }

    /// The set of colors appearing on at least one edge.
    pub fn colors_used(&self) -> ColorSet {
        self.edge_colors().collect()
    }

    /// How many edges carry each color, indexed by color code.
    pub fn color_counts(&self) -> [usize; 3] {
        let mut counts = [0usize; 3];
        for c in self.edge_colors() {
            counts[c.code() as usize] += 1;
        }
        counts
    }

    /// Whether triangle `{i, j, k}` carries three distinct colors.
    pub fn is_rainbow_triangle(&self, i: u8, j: u8, k: u8) -> Result<bool> {
        if i == j || i == k || j == k {
            return Err(Error::invalid(format!(
                "triangle vertices must be distinct, got ({i}, {j}, {k})"
            )));
        }
        let a = self.color(i, j)?;
        let b = self.color(i, k)?;
        let c = self.color(j, k)?;
        Ok(a != b && a != c && b != c)
    }

    /// First rainbow triangle in lexicographic vertex order, if any.
    pub fn first_rainbow_triangle(&self) -> Option<(u8, u8, u8)> {
        for k in 2..self.n {
            for j in 1..k {
                for i in 0..j {
                    let a = self.edge_color(edge_index_unchecked(i, j));
                    let b = self.edge_color(edge_index_unchecked(i, k));
                    let c = self.edge_color(edge_index_unchecked(j, k));
                    if a != b && a != c && b != c {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// Whether no triangle carries three distinct colors.
    pub fn is_gallai(&self) -> bool {
        self.first_rainbow_triangle().is_none()
    }

    /// Vertices whose incident edges all share one color, with that color.
    pub fn monochromatic_vertices(&self) -> Vec<(u8, Color)> {
        let mut result = Vec::new();
        if self.n < 2 {
            return result;
        }
        'vertices: for v in 0..self.n {
            let first = if v == 0 {
                self.edge_color(edge_index_unchecked(0, 1))
            } else {
                self.edge_color(edge_index_unchecked(0, v))
            };
            for u in 0..self.n {
                if u == v {
                    continue;
                }
                let e = if u < v {
                    edge_index_unchecked(u, v)
                } else {
                    edge_index_unchecked(v, u)
                };
                if self.edge_color(e) != first {
                    continue 'vertices;
                }
            }
            result.push((v, first));
        }
        result
    }

    /// The induced coloring on `K_{n-1}` after deleting vertex `v`;
    /// remaining vertices keep their relative order.
    pub fn restrict(&self, v: u8) -> Result<EdgeColoring> {
        if v >= self.n {
            return Err(Error::invalid(format!(
                "vertex {v} out of range for a graph on {} vertices",
                self.n
            )));
        }
        if self.n == 1 {
            return Err(Error::invalid(
                "cannot delete the only vertex of a one-vertex graph".to_string(),
            ));
        }
        let mut restricted = EdgeColoring {
            n: self.n - 1,
            words: [0; 3],
        };
        let keep = |u: u8| if u < v { u } else { u - 1 };
        for j in 0..self.n {
            if j == v {
                continue;
            }
            for i in 0..j {
                if i == v {
                    continue;
                }
                let color = self.edge_color(edge_index_unchecked(i, j));
                restricted.set_edge_color(edge_index_unchecked(keep(i), keep(j)), color);
            }
        }
        Ok(restricted)
    }

    /// The coloring of `K_{n+1}` obtained by adding vertex `n` and coloring
    /// edge `{i, n}` with `star[i]`. Purely structural: the result may
    /// contain rainbow triangles.
    pub fn extended(&self, star: &[Color]) -> Result<EdgeColoring> {
        if self.n >= MAX_VERTICES {
            return Err(Error::too_big(format!(
                "cannot extend beyond {MAX_VERTICES} vertices"
            )));
        }
        if star.len() != self.n as usize {
            return Err(Error::invalid(format!(
                "star must color {} edges, got {}",
                self.n,
                star.len()
            )));
        }
        let mut extended = EdgeColoring {
            n: self.n + 1,
            words: self.words,
        };
        let base = self.edge_count();
        for (i, &c) in star.iter().enumerate() {
            extended.set_edge_color(base + i, c);
        }
        Ok(extended)
    }

    /// The coloring with vertices and colors relabeled: edge `{i, j}` of the
    /// result takes the recolored color of edge `{perm[i], perm[j]}`.
    /// Both maps must be bijections.
    pub fn permuted(&self, perm: &[u8], recolor: [Color; 3]) -> Result<EdgeColoring> {
        if perm.len() != self.n as usize {
            return Err(Error::invalid(format!(
                "permutation must list {} vertices, got {}",
                self.n,
                perm.len()
            )));
        }
        let mut seen = 0u16;
        for &v in perm {
            if v >= self.n || seen & (1 << v) != 0 {
                return Err(Error::invalid(format!(
                    "vertex map {perm:?} is not a permutation of 0..{}",
                    self.n
                )));
            }
            seen |= 1 << v;
        }
        if recolor[0] == recolor[1] || recolor[0] == recolor[2] || recolor[1] == recolor[2] {
            return Err(Error::invalid(format!(
                "color map {recolor:?} is not a permutation of the three colors"
            )));
        }
        let mut result = EdgeColoring {
            n: self.n,
            words: [0; 3],
        };
        for j in 1..self.n {
            for i in 0..j {
                let (pi, pj) = (perm[i as usize], perm[j as usize]);
                let e = if pi < pj {
                    edge_index_unchecked(pi, pj)
                } else {
                    edge_index_unchecked(pj, pi)
                };
                let color = recolor[self.edge_color(e).code() as usize];
                result.set_edge_color(edge_index_unchecked(i, j), color);
            }
        }
        Ok(result)
    }

    /// Classifies a rainbow-free coloring by shape. See [`ClassKind`].
    pub fn classify(&self) -> Result<ColoringClass> {
        if self.n < 2 {
            return Err(Error::invalid(
                "classification needs at least one edge".to_string(),
            ));
        }
        if let Some((i, j, k)) = self.first_rainbow_triangle() {
            return Err(Error::RainbowTriangle(i, j, k));
        }
        let used = self.colors_used();
        let class = match used.len() {
            1 => ColoringClass {
                kind: ClassKind::Monochromatic,
                colors_used: used,
                witness: None,
            },
            2 => self.classify_two_colored(used),
            _ => self.classify_three_colored(used),
        };
        Ok(class)
    }

    /// Two-colored case: a monochromatic vertex over a monochromatic rest,
    /// or a single off-color edge, or neither. When `n = 3` the two shapes
    /// coincide as sets of colorings; the vertex form wins.
    fn classify_two_colored(&self, used: ColorSet) -> ColoringClass {
        for (v, _) in self.monochromatic_vertices() {
            if let Some(_rest) = self.uniform_color_avoiding(v) {
                return ColoringClass {
                    kind: ClassKind::TwoColorVertexSpecial,
                    colors_used: used,
                    witness: Some(SpecialWitness::Vertex(v)),
                };
            }
        }
        let counts = self.color_counts();
        let total = self.edge_count();
        for c in Color::ALL {
            if counts[c.code() as usize] == 1 {
                // The other used color necessarily covers the remaining
                // total - 1 edges.
                debug_assert!(counts.iter().any(|&k| k == total - 1));
                let e = self.find_edge_with_color(c);
                let (i, j) = ENDPOINTS[e];
                return ColoringClass {
                    kind: ClassKind::TwoColorEdgeSpecial,
                    colors_used: used,
                    witness: Some(SpecialWitness::Edge(i, j)),
                };
            }
        }
        ColoringClass {
            kind: ClassKind::NonSpecial,
            colors_used: used,
            witness: None,
        }
    }

    /// Three-colored case: a monochromatic vertex whose removal leaves a
    /// single-off-edge two-coloring in the remaining colors, or two disjoint
    /// singleton-color edges over a third-colored rest, or neither.
    fn classify_three_colored(&self, used: ColorSet) -> ColoringClass {
        for (v, vc) in self.monochromatic_vertices() {
            let mut counts = [0usize; 3];
            for j in 1..self.n {
                for i in 0..j {
                    if i != v && j != v {
                        counts[self.edge_color(edge_index_unchecked(i, j)).code() as usize] += 1;
                    }
                }
            }
            let rest_total = edge_count(self.n - 1);
            let off_star: Vec<usize> = (0..3)
                .filter(|&c| c != vc.code() as usize && counts[c] > 0)
                .collect();
            if counts[vc.code() as usize] == 0
                && off_star.len() == 2
                && off_star.iter().any(|&c| counts[c] == 1)
                && counts[off_star[0]] + counts[off_star[1]] == rest_total
            {
                return ColoringClass {
                    kind: ClassKind::ThreeColorVertexSpecial,
                    colors_used: used,
                    witness: Some(SpecialWitness::Vertex(v)),
                };
            }
        }
        let counts = self.color_counts();
        let singles: Vec<Color> = Color::ALL
            .into_iter()
            .filter(|c| counts[c.code() as usize] == 1)
            .collect();
        if singles.len() == 2 {
            let e1 = self.find_edge_with_color(singles[0]);
            let e2 = self.find_edge_with_color(singles[1]);
            let (a, b) = ENDPOINTS[e1.min(e2)];
            let (c, d) = ENDPOINTS[e1.max(e2)];
            if a != c && a != d && b != c && b != d {
                return ColoringClass {
                    kind: ClassKind::ThreeColorEdgeSpecial,
                    colors_used: used,
                    witness: Some(SpecialWitness::EdgePair((a, b), (c, d))),
                };
            }
        }
        ColoringClass {
            kind: ClassKind::NonSpecial,
            colors_used: used,
            witness: None,
        }
    }

    /// If all edges avoiding vertex `v` share one color, returns it.
    /// `None` for `n = 2` (no such edge exists).
    fn uniform_color_avoiding(&self, v: u8) -> Option<Color> {
        let mut color = None;
        for j in 1..self.n {
            for i in 0..j {
                if i == v || j == v {
                    continue;
                }
                let c = self.edge_color(edge_index_unchecked(i, j));
                match color {
                    None => color = Some(c),
                    Some(prev) if prev != c => return None,
                    Some(_) => {}
                }
            }
        }
        color
    }

    /// Index of the first edge with the given color. Callers guarantee one
    /// exists.
    fn find_edge_with_color(&self, color: Color) -> usize {
        (0..self.edge_count())
            .find(|&e| self.edge_color(e) == color)
            .expect("color counted as used must appear on an edge")
    }

    /// The least packed code over all `n! * 3!` relabelings; two colorings
    /// get the same code exactly when some vertex-and-color relabeling maps
    /// one onto the other. Supported for `n <= 8`.
    pub fn canonical_code(&self) -> Result<CanonicalCode> {
        if self.n > MAX_CANONICAL_VERTICES {
            return Err(Error::too_big(format!(
                "canonical form is computed by brute force over all relabelings and is limited \
                 to {MAX_CANONICAL_VERTICES} vertices, got {}",
                self.n
            )));
        }
        let total = self.edge_count();
        let mut best = [u8::MAX; MAX_EDGES];
        for table in vertex_permutation_tables(self.n) {
            for recolor in COLOR_RELABELINGS {
                // Lexicographic compare against the best code so far, bailing
                // out at the first position that is strictly worse.
                let mut strictly_less = false;
                for e in 0..total {
                    let code = recolor[self.edge_color(table[e] as usize).code() as usize];
                    if strictly_less {
                        best[e] = code;
                    } else if code < best[e] {
                        strictly_less = true;
                        best[e] = code;
                    } else if code > best[e] {
                        break;
                    }
                }
            }
        }
        let mut bits = 0u128;
        for &code in best.iter().take(total) {
            bits = (bits << 2) | code as u128;
        }
        Ok(CanonicalCode { n: self.n, bits })
    }
}

/// `Debug` shows the vertex count and the color string, which is what you
/// want to see in a failing assertion.
impl fmt::Debug for EdgeColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EdgeColoring(n={}, \"", self.n)?;
        for c in self.edge_colors() {
            write!(f, "{}", c.as_char())?;
        }
        write!(f, "\")")
    }
}

impl fmt::Display for EdgeColoring {
    /// Writes the text format: the vertex count, a newline, then one
    /// character per edge in edge-index order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n)?;
        for c in self.edge_colors() {
            write!(f, "{}", c.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for EdgeColoring {
    type Err = Error;

    fn from_str(s: &str) -> Result<EdgeColoring> {
        parse_coloring(s)
    }
}

/// Serializes a coloring in the two-line text format (no trailing newline).
pub fn format_coloring(coloring: &EdgeColoring) -> String {
    coloring.to_string()
}

/// Parses the two-line text format: vertex count (`2..=12`), a newline,
/// then one `r`/`g`/`b` per edge in edge-index order. A single trailing
/// newline is tolerated; anything else is an error with a 1-based position.
pub fn parse_coloring(text: &str) -> Result<EdgeColoring> {
    let Some(break_at) = text.find('\n') else {
        return Err(Error::parse(
            1,
            text.chars().count() + 1,
            "expected a newline after the vertex count",
        ));
    };
    let header = &text[..break_at];
    let n: u8 = header.parse().map_err(|_| {
        Error::parse(1, 1, format!("invalid vertex count {header:?}"))
    })?;
    if !(2..=MAX_VERTICES).contains(&n) {
        return Err(Error::parse(
            1,
            1,
            format!("vertex count must be between 2 and {MAX_VERTICES}, got {n}"),
        ));
    }
    let mut body = &text[break_at + 1..];
    if let Some(stripped) = body.strip_suffix('\n') {
        body = stripped;
    }
    let expected = edge_count(n);
    let mut colors = Vec::with_capacity(expected);
    for (pos, ch) in body.chars().enumerate() {
        if colors.len() == expected {
            return Err(Error::parse(2, pos + 1, "unexpected trailing input"));
        }
        match Color::from_char(ch) {
            Some(c) => colors.push(c),
            None => {
                return Err(Error::parse(
                    2,
                    pos + 1,
                    format!("invalid color character {ch:?} (expected 'r', 'g' or 'b')"),
                ))
            }
        }
    }
    if colors.len() < expected {
        return Err(Error::parse(
            2,
            colors.len() + 1,
            format!("expected {expected} edge colors, found {}", colors.len()),
        ));
    }
    EdgeColoring::new(n, &colors)
}

/// Structural shape of a rainbow-free coloring. The first five shapes are
/// exactly the ones that maximize the number of one-vertex extensions among
/// colorings with the same number of colors.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ClassKind {
    /// Every edge one color.
    Monochromatic,
    /// Two colors: one vertex's star in one color, all remaining edges in
    /// the other.
    TwoColorVertexSpecial,
    /// Two colors: a single edge in one color, all remaining edges in the
    /// other.
    TwoColorEdgeSpecial,
    /// Three colors: one vertex's star in one color, the rest a
    /// single-off-edge two-coloring in the remaining colors.
    ThreeColorVertexSpecial,
    /// Three colors: two disjoint edges in two distinct colors, all
    /// remaining edges in the third.
    ThreeColorEdgeSpecial,
    /// None of the above.
    NonSpecial,
}

impl ClassKind {
    pub fn is_special(self) -> bool {
        self != ClassKind::NonSpecial
    }

    /// Stable machine-readable name.
    pub fn label(self) -> &'static str {
        match self {
            ClassKind::Monochromatic => "monochromatic",
            ClassKind::TwoColorVertexSpecial => "two-color-vertex-special",
            ClassKind::TwoColorEdgeSpecial => "two-color-edge-special",
            ClassKind::ThreeColorVertexSpecial => "three-color-vertex-special",
            ClassKind::ThreeColorEdgeSpecial => "three-color-edge-special",
            ClassKind::NonSpecial => "non-special",
        }
    }
}

/// The structure that makes a coloring special, pinned to concrete
/// vertices or edges.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SpecialWitness {
    /// The monochromatic vertex of a vertex-special coloring.
    Vertex(u8),
    /// The unique off-color edge of a two-color edge-special coloring.
    Edge(u8, u8),
    /// The two disjoint singleton-color edges of a three-color
    /// edge-special coloring, ordered by edge index.
    EdgePair((u8, u8), (u8, u8)),
}

/// Result of [`EdgeColoring::classify`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ColoringClass {
    pub kind: ClassKind,
    pub colors_used: ColorSet,
    /// Present exactly when the kind is special and not monochromatic.
    pub witness: Option<SpecialWitness>,
}

/// Recipe for building a special coloring with explicit colors. The
/// distinguished vertex is always vertex `0` and distinguished edges sit at
/// the smallest edge indices.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SpecialForm {
    /// Every edge `color`.
    Monochromatic { color: Color },
    /// Star of vertex `0` in `star`, every other edge `rest` (`n >= 3`).
    TwoColorVertexSpecial { star: Color, rest: Color },
    /// Edge `{0, 1}` in `lone`, every other edge `rest` (`n >= 3`).
    TwoColorEdgeSpecial { lone: Color, rest: Color },
    /// Star of vertex `0` in `star`, edge `{1, 2}` in `lone`, every other
    /// edge `rest` (`n >= 4`).
    ThreeColorVertexSpecial { star: Color, lone: Color, rest: Color },
    /// Edge `{0, 1}` in `first`, edge `{2, 3}` in `second`, every other
    /// edge in the remaining color (`n >= 4`).
    ThreeColorEdgeSpecial { first: Color, second: Color },
}

/// Builds the special coloring of `K_n` described by `form`.
pub fn make_special(n: u8, form: SpecialForm) -> Result<EdgeColoring> {
    let distinct2 = |a: Color, b: Color, what: &str| {
        if a == b {
            Err(Error::invalid(format!("{what} must use two distinct colors")))
        } else {
            Ok(())
        }
    };
    let min_n = match form {
        SpecialForm::Monochromatic { .. } => 2,
        SpecialForm::TwoColorVertexSpecial { .. } | SpecialForm::TwoColorEdgeSpecial { .. } => 3,
        SpecialForm::ThreeColorVertexSpecial { .. } | SpecialForm::ThreeColorEdgeSpecial { .. } => 4,
    };
    if n < min_n || n > MAX_VERTICES {
        return Err(Error::invalid(format!(
            "a {form:?} coloring needs between {min_n} and {MAX_VERTICES} vertices, got {n}"
        )));
    }
    match form {
        SpecialForm::Monochromatic { color } => EdgeColoring::monochromatic(n, color),
        SpecialForm::TwoColorVertexSpecial { star, rest } => {
            distinct2(star, rest, "a vertex-special coloring")?;
            let mut coloring = EdgeColoring::monochromatic(n, rest)?;
            for j in 1..n {
                coloring.set_edge_color(edge_index_unchecked(0, j), star);
            }
            Ok(coloring)
        }
        SpecialForm::TwoColorEdgeSpecial { lone, rest } => {
            distinct2(lone, rest, "an edge-special coloring")?;
            let mut coloring = EdgeColoring::monochromatic(n, rest)?;
            coloring.set_edge_color(edge_index_unchecked(0, 1), lone);
            Ok(coloring)
        }
        SpecialForm::ThreeColorVertexSpecial { star, lone, rest } => {
            if star == lone || star == rest || lone == rest {
                return Err(Error::invalid(
                    "a three-color vertex-special coloring needs three distinct colors"
                        .to_string(),
                ));
            }
            let mut coloring = EdgeColoring::monochromatic(n, rest)?;
            for j in 1..n {
                coloring.set_edge_color(edge_index_unchecked(0, j), star);
            }
            coloring.set_edge_color(edge_index_unchecked(1, 2), lone);
            Ok(coloring)
        }
        SpecialForm::ThreeColorEdgeSpecial { first, second } => {
            distinct2(first, second, "a three-color edge-special coloring")?;
            let rest = Color::ALL
                .into_iter()
                .find(|&c| c != first && c != second)
                .expect("two distinct colors leave exactly one remaining");
            let mut coloring = EdgeColoring::monochromatic(n, rest)?;
            coloring.set_edge_color(edge_index_unchecked(0, 1), first);
            coloring.set_edge_color(edge_index_unchecked(2, 3), second);
            Ok(coloring)
        }
    }
}

/// Canonical form of a coloring under vertex and color relabeling: the
/// smallest packed code over the orbit. Codes order first by `n`, then by
/// the packed bits, with edge `0` in the most significant position so that
/// integer order equals lexicographic order on color strings.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalCode {
    n: u8,
    bits: u128,
}

impl CanonicalCode {
    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    /// The canonical representative coloring itself.
    pub fn coloring(&self) -> EdgeColoring {
        let total = edge_count(self.n);
        let mut coloring = EdgeColoring {
            n: self.n,
            words: [0; 3],
        };
        for e in 0..total {
            let code = ((self.bits >> (2 * (total - 1 - e))) & 0b11) as u8;
            let color = Color::from_code(code).expect("canonical codes store valid colors");
            coloring.set_edge_color(e, color);
        }
        coloring
    }
}

/// All six bijections of color codes, as `map[old_code] = new_code`.
const COLOR_RELABELINGS: [[u8; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

/// For each vertex permutation of `0..n`, the table mapping target edge
/// position to source edge index. Built once per `n` and cached; the
/// `n = 8` table is the largest at 40320 x 28 bytes.
fn vertex_permutation_tables(n: u8) -> &'static [Box<[u8]>] {
    static TABLES: [OnceLock<Vec<Box<[u8]>>>; MAX_CANONICAL_VERTICES as usize + 1] =
        [const { OnceLock::new() }; MAX_CANONICAL_VERTICES as usize + 1];
    TABLES[n as usize].get_or_init(|| {
        let mut tables = Vec::new();
        let mut perm: Vec<u8> = (0..n).collect();
        permutations(&mut perm, 0, &mut |perm| {
            let mut table = vec![0u8; edge_count(n)];
            for (e, slot) in table.iter_mut().enumerate() {
                let (i, j) = ENDPOINTS[e];
                let (pi, pj) = (perm[i as usize], perm[j as usize]);
                *slot = if pi < pj {
                    edge_index_unchecked(pi, pj) as u8
                } else {
                    edge_index_unchecked(pj, pi) as u8
                };
            }
            tables.push(table.into_boxed_slice());
        });
        tables
    })
}

/// Classic swap-based enumeration of all permutations of `items[at..]`.
fn permutations(items: &mut [u8], at: usize, visit: &mut impl FnMut(&[u8])) {
    if at == items.len() {
        visit(items);
        return;
    }
    for k in at..items.len() {
        items.swap(at, k);
        permutations(items, at + 1, visit);
        items.swap(at, k);
    }
}
