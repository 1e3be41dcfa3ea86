//! Printed reference data shared by the golden and acceptance tests.
#![allow(dead_code)]

use num_complex::Complex64;

use mubforge::bases::BasisFamily;

pub fn omega(n: usize, k: usize) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * (k % n) as f64 / n as f64)
}

pub fn zero() -> Complex64 {
    Complex64::new(0.0, 0.0)
}

/// Largest entrywise difference between a constructed state and `want`.
pub fn max_diff(family: &BasisFamily, basis: usize, label: &[usize], want: &[Complex64]) -> f64 {
    let st = family.bases[basis].state(label).expect("label present");
    st.amplitudes()
        .iter()
        .zip(want)
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max)
}

// Developments of rows 0..5 of the (12,6,1) matrix, with (i,j) written 6i+j.
pub const L: [[[usize; 12]; 12]; 6] = [
    [
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
        [2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2],
        [3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3],
        [4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4],
        [5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5],
        [6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6],
        [7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7],
        [8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8],
        [9, 9, 9, 9, 9, 9, 9, 9, 9, 9, 9, 9],
        [10, 10, 10, 10, 10, 10, 10, 10, 10, 10, 10, 10],
        [11, 11, 11, 11, 11, 11, 11, 11, 11, 11, 11, 11],
    ],
    [
        [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11],
        [1, 2, 3, 4, 5, 0, 7, 8, 9, 10, 11, 6],
        [2, 3, 4, 5, 0, 1, 8, 9, 10, 11, 6, 7],
        [3, 4, 5, 0, 1, 2, 9, 10, 11, 6, 7, 8],
        [4, 5, 0, 1, 2, 3, 10, 11, 6, 7, 8, 9],
        [5, 0, 1, 2, 3, 4, 11, 6, 7, 8, 9, 10],
        [6, 7, 8, 9, 10, 11, 0, 1, 2, 3, 4, 5],
        [7, 8, 9, 10, 11, 6, 1, 2, 3, 4, 5, 0],
        [8, 9, 10, 11, 6, 7, 2, 3, 4, 5, 0, 1],
        [9, 10, 11, 6, 7, 8, 3, 4, 5, 0, 1, 2],
        [10, 11, 6, 7, 8, 9, 4, 5, 0, 1, 2, 3],
        [11, 6, 7, 8, 9, 10, 5, 0, 1, 2, 3, 4],
    ],
    [
        [0, 3, 6, 1, 9, 11, 2, 8, 5, 4, 7, 10],
        [1, 4, 7, 2, 10, 6, 3, 9, 0, 5, 8, 11],
        [2, 5, 8, 3, 11, 7, 4, 10, 1, 0, 9, 6],
        [3, 0, 9, 4, 6, 8, 5, 11, 2, 1, 10, 7],
        [4, 1, 10, 5, 7, 9, 0, 6, 3, 2, 11, 8],
        [5, 2, 11, 0, 8, 10, 1, 7, 4, 3, 6, 9],
        [6, 9, 0, 7, 3, 5, 8, 2, 11, 10, 1, 4],
        [7, 10, 1, 8, 4, 0, 9, 3, 6, 11, 2, 5],
        [8, 11, 2, 9, 5, 1, 10, 4, 7, 6, 3, 0],
        [9, 6, 3, 10, 0, 2, 11, 5, 8, 7, 4, 1],
        [10, 7, 4, 11, 1, 3, 6, 0, 9, 8, 5, 2],
        [11, 8, 5, 6, 2, 4, 7, 1, 10, 9, 0, 3],
    ],
    [
        [0, 8, 1, 11, 5, 9, 3, 10, 2, 7, 6, 4],
        [1, 9, 2, 6, 0, 10, 4, 11, 3, 8, 7, 5],
        [2, 10, 3, 7, 1, 11, 5, 6, 4, 9, 8, 0],
        [3, 11, 4, 8, 2, 6, 0, 7, 5, 10, 9, 1],
        [4, 6, 5, 9, 3, 7, 1, 8, 6, 11, 10, 2],
        [5, 7, 0, 10, 4, 8, 2, 9, 1, 6, 11, 3],
        [6, 2, 7, 5, 11, 3, 9, 4, 8, 1, 0, 10],
        [7, 3, 8, 0, 6, 4, 10, 5, 9, 2, 1, 11],
        [8, 4, 9, 1, 7, 5, 11, 0, 10, 3, 2, 6],
        [9, 5, 10, 2, 8, 0, 6, 1, 11, 4, 3, 7],
        [10, 0, 11, 3, 9, 1, 7, 2, 6, 5, 4, 8],
        [11, 1, 6, 4, 10, 2, 8, 3, 7, 0, 5, 9],
    ],
    [
        [0, 4, 11, 10, 2, 7, 8, 6, 9, 1, 3, 5],
        [1, 5, 6, 11, 3, 8, 9, 7, 10, 2, 4, 0],
        [2, 0, 7, 6, 4, 9, 10, 8, 11, 3, 5, 1],
        [3, 1, 8, 7, 5, 10, 11, 9, 6, 4, 0, 2],
        [4, 2, 9, 8, 0, 11, 6, 10, 7, 5, 1, 3],
        [5, 3, 10, 9, 1, 6, 7, 11, 8, 0, 2, 4],
        [6, 10, 5, 4, 8, 1, 2, 0, 3, 7, 9, 11],
        [7, 11, 0, 5, 9, 2, 3, 1, 4, 8, 10, 6],
        [8, 6, 1, 0, 10, 3, 4, 2, 5, 9, 11, 7],
        [9, 7, 2, 1, 11, 4, 5, 3, 0, 10, 6, 8],
        [10, 8, 3, 2, 6, 5, 0, 4, 1, 11, 7, 9],
        [11, 9, 4, 3, 7, 0, 1, 5, 2, 6, 8, 10],
    ],
    [
        [0, 6, 8, 2, 7, 1, 9, 11, 4, 10, 5, 3],
        [1, 7, 9, 3, 8, 2, 10, 6, 5, 11, 0, 4],
        [2, 8, 10, 4, 9, 3, 11, 7, 0, 6, 1, 5],
        [3, 9, 11, 5, 10, 4, 6, 8, 1, 7, 2, 0],
        [4, 10, 6, 0, 11, 5, 7, 9, 2, 8, 3, 1],
        [5, 11, 7, 1, 6, 0, 8, 10, 3, 9, 4, 2],
        [6, 0, 2, 8, 1, 7, 3, 5, 10, 4, 11, 9],
        [7, 1, 3, 9, 2, 8, 4, 0, 11, 5, 6, 10],
        [8, 2, 4, 10, 3, 9, 5, 1, 6, 0, 7, 11],
        [9, 3, 5, 11, 4, 10, 0, 2, 7, 1, 8, 6],
        [10, 4, 0, 6, 5, 11, 1, 3, 8, 2, 9, 7],
        [11, 5, 1, 7, 0, 6, 2, 4, 9, 3, 10, 8],
    ],
];

/// The tables with their one misprint fixed: row 4 of the fourth table
/// repeats 6 at column 8, and the Latin property forces 0 there.
pub fn tables() -> [[[usize; 12]; 12]; 6] {
    let mut t = L;
    assert_eq!(t[3][4][8], 6);
    assert_eq!(t[3][4].iter().filter(|&&e| e == 6).count(), 2);
    t[3][4][8] = 0;
    t
}

// Product basis of C^3⊗C^6: (i, j) -> the pair x0, x1 in |j⟩(|x0⟩ ± |x1⟩)/√2.
pub const C6_PRODUCT: [((usize, usize), (usize, usize)); 9] = [
    ((0, 0), (0, 1)),
    ((0, 1), (2, 3)),
    ((0, 2), (4, 5)),
    ((1, 0), (4, 5)),
    ((1, 1), (0, 1)),
    ((1, 2), (2, 3)),
    ((2, 0), (2, 3)),
    ((2, 1), (4, 5)),
    ((2, 2), (0, 1)),
];

// Entangled bases of C^3⊗C^6: [basis - 1][i][k] = pair in |k⟩(|x0⟩ ± |x1⟩).
pub const C6_MEB: [[[(usize, usize); 3]; 3]; 4] = [
    [
        [(0, 2), (1, 5), (3, 4)],
        [(3, 4), (0, 2), (1, 5)],
        [(1, 5), (3, 4), (0, 2)],
    ],
    [
        [(0, 3), (1, 4), (2, 5)],
        [(2, 5), (0, 3), (1, 4)],
        [(1, 4), (2, 5), (0, 3)],
    ],
    [
        [(0, 5), (2, 4), (1, 3)],
        [(1, 3), (0, 5), (2, 4)],
        [(2, 4), (1, 3), (0, 5)],
    ],
    [
        [(0, 4), (3, 5), (1, 2)],
        [(1, 2), (0, 4), (3, 5)],
        [(3, 5), (1, 2), (0, 4)],
    ],
];

pub fn sign(l: usize) -> f64 {
    if l == 0 {
        1.0
    } else {
        -1.0
    }
}

// C^3⊗C^9: [basis][i][k] = triple in |k⟩(|x0⟩ + ω^l|x1⟩ + ω^{2l}|x2⟩).
pub const C9_MEB: [[[[usize; 3]; 3]; 3]; 3] = [
    [
        [[0, 3, 6], [1, 4, 7], [2, 5, 8]],
        [[2, 5, 8], [0, 3, 6], [1, 4, 7]],
        [[1, 4, 7], [2, 5, 8], [0, 3, 6]],
    ],
    [
        [[0, 5, 7], [1, 3, 8], [2, 4, 6]],
        [[2, 4, 6], [0, 5, 7], [1, 3, 8]],
        [[1, 3, 8], [2, 4, 6], [0, 5, 7]],
    ],
    [
        [[0, 4, 8], [2, 3, 7], [1, 5, 6]],
        [[1, 5, 6], [0, 4, 8], [2, 3, 7]],
        [[2, 3, 7], [1, 5, 6], [0, 4, 8]],
    ],
];

// Product basis of C^3⊗C^9: (i, j) -> the triple in |j⟩(|x0⟩ + ω^l|x1⟩ + ω^{2l}|x2⟩)/√3.
pub const C9_PRODUCT: [[[usize; 3]; 3]; 3] = [
    [[0, 1, 2], [3, 4, 5], [6, 7, 8]],
    [[6, 7, 8], [0, 1, 2], [3, 4, 5]],
    [[3, 4, 5], [6, 7, 8], [0, 1, 2]],
];

// Phase exponent of |k⟩ in basis r: kj + r·n_k with D = diag(1, ω, ω).
pub fn c9_phase(r: usize, k: usize, j: usize) -> usize {
    let n = [0, 1, 1];
    k * j + r * n[k]
}
/// Largest deviation of the C^3⊗C^6 family from every printed state.
pub fn c6_deviation(fam: &BasisFamily) -> f64 {
    let mut worst = 0.0f64;
    let c = 1.0 / 2f64.sqrt();
    for ((i, j), (x0, x1)) in C6_PRODUCT {
        for l in 0..2 {
            let mut want = vec![zero(); 18];
            want[j * 6 + x0] = Complex64::new(c, 0.0);
            want[j * 6 + x1] = Complex64::new(c * sign(l), 0.0);
            worst = worst.max(max_diff(fam, 0, &[i, j, l], &want));
        }
    }
    let c = 1.0 / 6f64.sqrt();
    for (b, per_i) in C6_MEB.iter().enumerate() {
        for (i, pairs) in per_i.iter().enumerate() {
            for j in 0..3 {
                for l in 0..2 {
                    let mut want = vec![zero(); 18];
                    for (k, &(x0, x1)) in pairs.iter().enumerate() {
                        let w = omega(3, k * j) * c;
                        want[k * 6 + x0] = w;
                        want[k * 6 + x1] = w * sign(l);
                    }
                    worst = worst.max(max_diff(fam, b + 1, &[i, j, l], &want));
                }
            }
        }
    }
    worst
}

/// Largest deviation of the C^3⊗C^9 family from every printed state.
pub fn c9_deviation(fam: &BasisFamily) -> f64 {
    let mut worst = 0.0f64;
    let c = 1.0 / 3f64.sqrt();
    for (i, per_j) in C9_PRODUCT.iter().enumerate() {
        for (j, xs) in per_j.iter().enumerate() {
            for l in 0..3 {
                let mut want = vec![zero(); 27];
                for (rank, &x) in xs.iter().enumerate() {
                    want[j * 9 + x] = omega(3, rank * l) * c;
                }
                worst = worst.max(max_diff(fam, 0, &[i, j, l], &want));
            }
        }
    }
    for (b, per_i) in C9_MEB.iter().enumerate() {
        let r = b + 1;
        for (i, per_k) in per_i.iter().enumerate() {
            for j in 0..3 {
                for l in 0..3 {
                    let mut want = vec![zero(); 27];
                    for (k, xs) in per_k.iter().enumerate() {
                        for (rank, &x) in xs.iter().enumerate() {
                            want[k * 9 + x] = omega(3, c9_phase(r, k, j) + rank * l) / 3.0;
                        }
                    }
                    worst = worst.max(max_diff(fam, r, &[i, j, l], &want));
                }
            }
        }
    }
    worst
}
