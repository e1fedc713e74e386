//! Property tests for the structural invariants: serialization round-trips,
//! invariance under relabeling, agreement with brute force on random
//! rainbow-free colorings, and soundness of classification witnesses.

mod common;

use common::naive_extensions;
use gallai::coloring::edge_count;
use gallai::extension::{
    count_extensions, count_extensions_by_color_usage, list_extensions, verify_doubling,
};
use gallai::{parse_coloring, Color, ColorSet, EdgeColoring, SpecialWitness};
use proptest::prelude::*;

const RECOLORINGS: [[Color; 3]; 6] = [
    [Color::Red, Color::Green, Color::Blue],
    [Color::Red, Color::Blue, Color::Green],
    [Color::Green, Color::Red, Color::Blue],
    [Color::Green, Color::Blue, Color::Red],
    [Color::Blue, Color::Red, Color::Green],
    [Color::Blue, Color::Green, Color::Red],
];

fn arb_color() -> impl Strategy<Value = Color> {
    (0u8..3).prop_map(|code| Color::from_code(code).unwrap())
}

/// Any coloring at all, rainbow triangles included.
fn arb_coloring(max_n: u8) -> impl Strategy<Value = EdgeColoring> {
    (2..=max_n).prop_flat_map(|n| {
        prop::collection::vec(arb_color(), edge_count(n))
            .prop_map(move |colors| EdgeColoring::new(n, &colors).unwrap())
    })
}

/// A rainbow-free coloring, built by chaining uniformly picked rainbow-free
/// one-vertex extensions up from a single random edge. Every rainbow-free
/// coloring is reachable this way because restriction preserves the
/// property.
fn arb_gallai(max_n: u8) -> impl Strategy<Value = EdgeColoring> {
    (2..=max_n).prop_flat_map(|n| {
        (arb_color(), prop::collection::vec(any::<u32>(), (n - 2) as usize)).prop_map(
            move |(first, picks)| {
                let mut coloring = EdgeColoring::monochromatic(2, first).unwrap();
                for pick in picks {
                    let options = list_extensions(&coloring).unwrap();
                    let star = &options[pick as usize % options.len()];
                    coloring = coloring.extended(star.colors()).unwrap();
                }
                coloring
            },
        )
    })
}

/// A rainbow-free coloring together with a shuffled vertex relabeling and a
/// color relabeling.
fn arb_relabeling(max_n: u8) -> impl Strategy<Value = (EdgeColoring, Vec<u8>, [Color; 3])> {
    arb_gallai(max_n).prop_flat_map(|coloring| {
        let n = coloring.n();
        (
            Just(coloring),
            Just((0..n).collect::<Vec<u8>>()).prop_shuffle(),
            (0usize..6).prop_map(|i| RECOLORINGS[i]),
        )
    })
}

proptest! {
    #[test]
    fn format_then_parse_is_identity(coloring in arb_coloring(8)) {
        let text = coloring.to_string();
        prop_assert_eq!(parse_coloring(&text).unwrap(), coloring);
        prop_assert_eq!(text.parse::<EdgeColoring>().unwrap(), coloring);
    }

    #[test]
    fn relabeling_preserves_structure(
        (coloring, perm, recolor) in arb_relabeling(6)
    ) {
        let moved = coloring.permuted(&perm, recolor).unwrap();
        prop_assert!(moved.is_gallai());
        prop_assert_eq!(
            moved.classify().unwrap().kind,
            coloring.classify().unwrap().kind
        );
        prop_assert_eq!(
            count_extensions(&moved).unwrap().total,
            count_extensions(&coloring).unwrap().total
        );
        prop_assert_eq!(
            moved.canonical_code().unwrap(),
            coloring.canonical_code().unwrap()
        );
    }

    #[test]
    fn extension_count_agrees_with_brute_force(coloring in arb_gallai(5)) {
        let count = count_extensions(&coloring).unwrap();
        let naive = naive_extensions(&coloring);
        prop_assert_eq!(count.total, naive.len() as u64);
    }

    #[test]
    fn usage_split_partitions_the_extension_count(coloring in arb_gallai(6)) {
        let count = count_extensions(&coloring).unwrap();
        let by_usage = count_extensions_by_color_usage(&coloring).unwrap();
        prop_assert_eq!(by_usage.iter().sum::<u64>(), count.total);
        prop_assert_eq!(
            by_usage[ColorSet::ALL.bits() as usize],
            count.all_three_colors
        );
        // No extension can use fewer colors than the base.
        let base = coloring.colors_used().bits();
        for (mask, &entry) in by_usage.iter().enumerate() {
            if (mask as u8) & base != base {
                prop_assert_eq!(entry, 0);
            }
        }
    }

    #[test]
    fn doubling_bound_holds_on_random_colorings(coloring in arb_gallai(5)) {
        let check = verify_doubling(&coloring).unwrap();
        prop_assert!(check.holds);
        prop_assert!(check.max_count <= 2 * check.base_count + 1);
    }

    #[test]
    fn restricting_an_extension_recovers_the_base(
        (coloring, pick) in arb_gallai(5).prop_flat_map(|c| (Just(c), any::<u32>()))
    ) {
        let options = list_extensions(&coloring).unwrap();
        let star = &options[pick as usize % options.len()];
        let extended = coloring.extended(star.colors()).unwrap();
        prop_assert!(extended.is_gallai());
        prop_assert_eq!(extended.restrict(coloring.n()).unwrap(), coloring);
    }

    #[test]
    fn classification_witnesses_are_sound(coloring in arb_gallai(6)) {
        let class = coloring.classify().unwrap();
        prop_assert_eq!(
            class.colors_used.len(),
            coloring.colors_used().len()
        );
        match class.witness {
            Some(SpecialWitness::Vertex(v)) => {
                prop_assert!(coloring
                    .monochromatic_vertices()
                    .iter()
                    .any(|&(u, _)| u == v));
            }
            Some(SpecialWitness::Edge(i, j)) => {
                let lone = coloring.color(i, j).unwrap();
                let count = coloring.edge_colors().filter(|&c| c == lone).count();
                prop_assert_eq!(count, 1);
            }
            Some(SpecialWitness::EdgePair((a, b), (c, d))) => {
                prop_assert!(a != c && a != d && b != c && b != d);
                let first = coloring.color(a, b).unwrap();
                let second = coloring.color(c, d).unwrap();
                prop_assert_ne!(first, second);
                for color in [first, second] {
                    let count = coloring.edge_colors().filter(|&x| x == color).count();
                    prop_assert_eq!(count, 1);
                }
            }
            None => {}
        }
    }
}
