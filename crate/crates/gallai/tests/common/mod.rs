//! Brute-force reference implementations shared by the integration tests.
//!
//! Everything here enumerates blindly and checks triangles one by one —
//! deliberately none of the bitmask pruning the library uses — so that
//! agreement between the two is meaningful evidence.

// Each integration test target compiles this module separately and uses a
// different subset of it.
#![allow(dead_code)]

use gallai::{Color, EdgeColoring};

/// Triangle-by-triangle rainbow check through the public accessor.
pub fn naive_is_gallai(coloring: &EdgeColoring) -> bool {
    let n = coloring.n();
    for k in 2..n {
        for j in 1..k {
            for i in 0..j {
                let a = coloring.color(i, j).unwrap();
                let b = coloring.color(i, k).unwrap();
                let c = coloring.color(j, k).unwrap();
                if a != b && a != c && b != c {
                    return false;
                }
            }
        }
    }
    true
}

/// Calls `f` with every length-`len` color vector, in code order.
pub fn for_each_color_vector(len: usize, mut f: impl FnMut(&[Color])) {
    let mut digits = vec![0u8; len];
    loop {
        let colors: Vec<Color> = digits
            .iter()
            .map(|&d| Color::from_code(d).unwrap())
            .collect();
        f(&colors);
        // Odometer increment, most significant digit first so the order is
        // lexicographic.
        let mut at = len;
        loop {
            if at == 0 {
                return;
            }
            at -= 1;
            if digits[at] == 2 {
                digits[at] = 0;
            } else {
                digits[at] += 1;
                break;
            }
        }
    }
}

/// All rainbow-free colorings of `K_n` by filtering the full `3^E` space.
pub fn naive_census(n: u8) -> Vec<EdgeColoring> {
    let edges = (n as usize) * (n as usize - 1) / 2;
    let mut result = Vec::new();
    for_each_color_vector(edges, |colors| {
        let coloring = EdgeColoring::new(n, colors).unwrap();
        if naive_is_gallai(&coloring) {
            result.push(coloring);
        }
    });
    result
}

/// All stars extending `base` without a rainbow triangle, found by building
/// each candidate extension and re-checking every triangle from scratch.
pub fn naive_extensions(base: &EdgeColoring) -> Vec<Vec<Color>> {
    let mut result = Vec::new();
    for_each_color_vector(base.n() as usize, |star| {
        let extended = base.extended(star).unwrap();
        if naive_is_gallai(&extended) {
            result.push(star.to_vec());
        }
    });
    result
}
