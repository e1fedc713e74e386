//! Exact counting and verification engine for rainbow-triangle-free
//! 3-colorings of complete graphs.
//!
//! An edge coloring of the complete graph `K_n` with colors red, green and
//! blue is *Gallai* if no triangle receives three distinct colors. This
//! crate provides:
//!
//! * [`coloring`] — a compact edge-coloring representation, rainbow-triangle
//!   checks, classification into the special shapes that turn out to be
//!   extremal, canonical forms under vertex and color relabeling, and a
//!   plain-text serialization format;
//! * [`extension`] — counting and listing the ways a coloring of `K_n`
//!   extends to `K_{n+1}` (coloring the star at a new vertex) without
//!   creating a rainbow triangle;
//! * [`enumerate`] — exhaustive, optionally parallel enumeration of all
//!   Gallai colorings of `K_n`, split by number of colors actually used,
//!   plus catalogs of isomorphism classes;
//! * [`bounds`] — exact big-integer bounds on the number of Gallai
//!   colorings and the recurrences that prove them.
//!
//! Everything is exact: counts are integers, bound checks are big-integer
//! comparisons, and the only approximation anywhere is the deliberately
//! truncated two-decimal ratio display in [`bounds::bound_table`].

pub mod bounds;
pub mod coloring;
pub mod enumerate;
pub mod extension;

mod error;

pub use error::{Error, Result};

pub use coloring::{
    edge_index, make_special, parse_coloring, CanonicalCode, ClassKind, Color, ColorSet,
    ColoringClass, EdgeColoring, SpecialForm, SpecialWitness,
};
pub use enumerate::{ClassFilter, ClassRepresentative, CountsRecord};
pub use extension::{DoublingCheck, ExtensionCount, ExtremalClasses, StarColoring};
