//! Values produced by an independent computer-algebra computation (symbolic
//! matrix products, exact real-root counting and high-precision root finding)
//! and frozen here.

use num_bigint::BigInt;
use riley_core::deform::{continue_root, psi_of};
use riley_core::exactpoly::rational_to_f64;
use riley_core::{
    count_real_roots, isolate_real_roots, normalize, riley_polynomial_of, sign_sequences,
    signature, IntPoly, Verifier,
};

/// `(p, q, distinct real roots of λ, σ)` for every canonical fraction with `p ≤ 31`.
const COUNTS: &[(i64, i64, usize, i64)] = &[
    (3, 1, 1, 2),
    (3, -1, 1, -2),
    (5, 1, 2, 4),
    (5, -1, 2, -4),
    (5, 3, 0, 0),
    (5, -3, 0, 0),
    (7, 1, 3, 6),
    (7, -1, 3, -6),
    (7, 3, 1, 2),
    (7, -3, 1, -2),
    (7, 5, 1, 2),
    (7, -5, 1, -2),
    (9, 1, 4, 8),
    (9, -1, 4, -8),
    (9, 5, 0, 0),
    (9, -5, 0, 0),
    (9, 7, 0, 0),
    (9, -7, 0, 0),
    (11, 1, 5, 10),
    (11, -1, 5, -10),
    (11, 3, 1, 2),
    (11, -3, 1, -2),
    (11, 5, 1, 2),
    (11, -5, 1, -2),
    (11, 7, 1, -2),
    (11, -7, 1, 2),
    (11, 9, 1, 2),
    (11, -9, 1, -2),
    (13, 1, 6, 12),
    (13, -1, 6, -12),
    (13, 3, 2, 4),
    (13, -3, 2, -4),
    (13, 5, 0, 0),
    (13, -5, 0, 0),
    (13, 7, 0, 0),
    (13, -7, 0, 0),
    (13, 9, 2, 4),
    (13, -9, 2, -4),
    (13, 11, 0, 0),
    (13, -11, 0, 0),
    (15, 1, 7, 14),
    (15, -1, 7, -14),
    (15, 7, 1, 2),
    (15, -7, 1, -2),
    (15, 11, 1, 2),
    (15, -11, 1, -2),
    (15, 13, 1, 2),
    (15, -13, 1, -2),
    (17, 1, 8, 16),
    (17, -1, 8, -16),
    (17, 3, 2, 4),
    (17, -3, 2, -4),
    (17, 5, 2, 4),
    (17, -5, 2, -4),
    (17, 7, 2, 4),
    (17, -7, 2, -4),
    (17, 9, 0, 0),
    (17, -9, 0, 0),
    (17, 11, 2, -4),
    (17, -11, 2, 4),
    (17, 13, 0, 0),
    (17, -13, 0, 0),
    (17, 15, 0, 0),
    (17, -15, 0, 0),
    (19, 1, 9, 18),
    (19, -1, 9, -18),
    (19, 3, 3, 6),
    (19, -3, 3, -6),
    (19, 5, 1, 2),
    (19, -5, 1, -2),
    (19, 7, 1, 2),
    (19, -7, 1, -2),
    (19, 9, 1, 2),
    (19, -9, 1, -2),
    (19, 11, 1, 2),
    (19, -11, 1, -2),
    (19, 13, 3, 6),
    (19, -13, 3, -6),
    (19, 15, 1, -2),
    (19, -15, 1, 2),
    (19, 17, 1, 2),
    (19, -17, 1, -2),
    (21, 1, 10, 20),
    (21, -1, 10, -20),
    (21, 5, 2, 4),
    (21, -5, 2, -4),
    (21, 11, 0, 0),
    (21, -11, 0, 0),
    (21, 13, 0, 0),
    (21, -13, 0, 0),
    (21, 17, 2, 4),
    (21, -17, 2, -4),
    (21, 19, 0, 0),
    (21, -19, 0, 0),
    (23, 1, 11, 22),
    (23, -1, 11, -22),
    (23, 3, 3, 6),
    (23, -3, 3, -6),
    (23, 5, 1, 2),
    (23, -5, 1, -2),
    (23, 7, 1, 2),
    (23, -7, 1, -2),
    (23, 9, 1, -2),
    (23, -9, 1, 2),
    (23, 11, 1, 2),
    (23, -11, 1, -2),
    (23, 13, 1, -2),
    (23, -13, 1, 2),
    (23, 15, 3, -6),
    (23, -15, 3, 6),
    (23, 17, 1, 2),
    (23, -17, 1, -2),
    (23, 19, 1, 2),
    (23, -19, 1, -2),
    (23, 21, 1, 2),
    (23, -21, 1, -2),
    (25, 1, 12, 24),
    (25, -1, 12, -24),
    (25, 3, 4, 8),
    (25, -3, 4, -8),
    (25, 7, 0, 0),
    (25, -7, 0, 0),
    (25, 9, 0, 0),
    (25, -9, 0, 0),
    (25, 11, 0, 0),
    (25, -11, 0, 0),
    (25, 13, 0, 0),
    (25, -13, 0, 0),
    (25, 17, 4, 8),
    (25, -17, 4, -8),
    (25, 19, 0, 0),
    (25, -19, 0, 0),
    (25, 21, 0, 0),
    (25, -21, 0, 0),
    (25, 23, 0, 0),
    (25, -23, 0, 0),
    (27, 1, 13, 26),
    (27, -1, 13, -26),
    (27, 5, 3, 6),
    (27, -5, 3, -6),
    (27, 7, 1, 2),
    (27, -7, 1, -2),
    (27, 11, 3, 6),
    (27, -11, 3, -6),
    (27, 13, 1, 2),
    (27, -13, 1, -2),
    (27, 17, 1, -2),
    (27, -17, 1, 2),
    (27, 19, 1, 2),
    (27, -19, 1, -2),
    (27, 23, 1, -2),
    (27, -23, 1, 2),
    (27, 25, 1, 2),
    (27, -25, 1, -2),
    (29, 1, 14, 28),
    (29, -1, 14, -28),
    (29, 3, 4, 8),
    (29, -3, 4, -8),
    (29, 5, 2, 4),
    (29, -5, 2, -4),
    (29, 7, 2, 4),
    (29, -7, 2, -4),
    (29, 9, 2, 4),
    (29, -9, 2, -4),
    (29, 11, 0, 0),
    (29, -11, 0, 0),
    (29, 13, 2, 4),
    (29, -13, 2, -4),
    (29, 15, 0, 0),
    (29, -15, 0, 0),
    (29, 17, 0, 0),
    (29, -17, 0, 0),
    (29, 19, 4, -8),
    (29, -19, 4, 8),
    (29, 21, 0, 0),
    (29, -21, 0, 0),
    (29, 23, 2, -4),
    (29, -23, 2, 4),
    (29, 25, 2, 4),
    (29, -25, 2, -4),
    (29, 27, 0, 0),
    (29, -27, 0, 0),
    (31, 1, 15, 30),
    (31, -1, 15, -30),
    (31, 3, 5, 10),
    (31, -3, 5, -10),
    (31, 5, 3, 6),
    (31, -5, 3, -6),
    (31, 7, 3, 6),
    (31, -7, 3, -6),
    (31, 9, 3, 6),
    (31, -9, 3, -6),
    (31, 11, 1, 2),
    (31, -11, 1, -2),
    (31, 13, 1, 2),
    (31, -13, 1, -2),
    (31, 15, 1, 2),
    (31, -15, 1, -2),
    (31, 17, 1, 2),
    (31, -17, 1, -2),
    (31, 19, 1, -2),
    (31, -19, 1, 2),
    (31, 21, 5, 10),
    (31, -21, 5, -10),
    (31, 23, 1, 2),
    (31, -23, 1, -2),
    (31, 25, 3, 6),
    (31, -25, 3, -6),
    (31, 27, 1, 2),
    (31, -27, 1, -2),
    (31, 29, 1, 2),
    (31, -29, 1, -2),
];

/// Ascending coefficients of `λ`.
const LAMBDAS: &[(i64, i64, &[i64])] = &[
    (3, 1, &[1, 1]),
    (3, -1, &[1, 1]),
    (5, 1, &[1, 3, 1]),
    (5, -1, &[1, 3, 1]),
    (5, 3, &[1, -1, 1]),
    (5, -3, &[1, -1, 1]),
    (7, 1, &[1, 6, 5, 1]),
    (7, 3, &[1, 2, 1, 1]),
    (7, -3, &[1, 2, 1, 1]),
    (9, 1, &[1, 10, 15, 7, 1]),
    (9, 5, &[1, -2, 3, -1, 1]),
    (11, -3, &[1, -1, 3, 8, 5, 1]),
    (13, 5, &[1, 1, 2, 4, 5, 3, 1]),
    (15, 7, &[1, 4, 6, 10, 5, 6, 1, 1]),
    (17, -5, &[1, 4, -6, -14, 3, 22, 19, 7, 1]),
];

const LAMBDA_69_29: &[&str] = &["1", "-1", "-3", "12", "84", "236", "340", "128", "-294", "994", "9690", "36340", "94642", "196006", "342032", "518732", "696703", "838821", "912715", "902408", "813526", "669974", "504316", "346736", "217319", "123753", "63713", "29452", "12107", "4367", "1356", "352", "73", "11", "1"];

/// `(x0, n, x_n)` along the two real branches of `ψ = 0` for `5/1`.
const BRANCHES_5_1: &[(f64, usize, f64)] = &[
    (-2.618033988749895, 64, -2.5796045495563558),
    (-2.618033988749895, 48, -2.5498856413280313),
    (-2.618033988749895, 32, -2.4657930537724684),
    (-2.618033988749895, 24, -2.350084796318772),
    (-2.618033988749895, 16, -2.03224755112299),
    (-2.618033988749895, 12, -1.618033988749895),
    (-2.618033988749895, 8, -0.6180339887498949),
    (-2.618033988749895, 7, -0.17299212083726603),
    (-0.38196601125010515, 64, -0.34353657205656607),
    (-0.38196601125010515, 48, -0.3138176638282417),
    (-0.38196601125010515, 32, -0.22972507627267866),
    (-0.38196601125010515, 24, -0.11401681881898244),
    (-0.38196601125010515, 16, 0.2038204263767998),
    (-0.38196601125010515, 12, 0.6180339887498949),
    (-0.38196601125010515, 8, 1.618033988749895),
    (-0.38196601125010515, 7, 2.0630758566625236),
];

#[test]
fn root_counts_and_signatures_up_to_31() {
    let verifier = Verifier::new();
    for &(p, q, count, sigma) in COUNTS {
        let k = normalize(p, q).unwrap();
        assert_eq!(k.q(), q, "{p}/{q} is already canonical");
        let sd = sign_sequences(&k).unwrap();
        assert_eq!(signature(&sd), sigma, "{k}");
        let rep = verifier.verify(&k).unwrap();
        assert_eq!(rep.real_root_count, count, "{k}");
        assert!(rep.satisfied);
    }
    assert_eq!(COUNTS.len(), 212);
}

#[test]
fn riley_polynomials() {
    for &(p, q, coeffs) in LAMBDAS {
        let sd = sign_sequences(&normalize(p, q).unwrap()).unwrap();
        assert_eq!(riley_polynomial_of(&sd).unwrap(), IntPoly::from_i64s(coeffs), "{p}/{q}");
    }
    let sd = sign_sequences(&normalize(69, 29).unwrap()).unwrap();
    let expected: Vec<BigInt> = LAMBDA_69_29.iter().map(|c| c.parse().unwrap()).collect();
    let lambda = riley_polynomial_of(&sd).unwrap();
    assert_eq!(lambda, IntPoly::new(expected));
    assert_eq!(signature(&sd), 0);
    assert_eq!(count_real_roots(&lambda), Ok(2));
}

#[test]
fn psi_closed_forms() {
    // ψ as Σ s^i g_i(x), listed by i
    let cases: &[(i64, i64, &[&[i64]])] = &[
        (3, 1, &[&[-3, 1], &[], &[1]]),
        (5, 1, &[&[5, -5, 1], &[], &[-5, 2], &[], &[1]]),
        (5, 3, &[&[5, -5, 1], &[], &[-1, 1]]),
        (7, 3, &[&[-7, 14, -7, 1], &[], &[2, -7, 2], &[], &[0, 1]]),
    ];
    for &(p, q, g) in cases {
        let psi = psi_of(&sign_sequences(&normalize(p, q).unwrap()).unwrap()).unwrap();
        let expected: Vec<IntPoly> = g.iter().map(|c| IntPoly::from_i64s(c)).collect();
        assert_eq!(psi.s_coeffs(), &expected[..], "{p}/{q}");
    }
}

#[test]
fn continuation_follows_branches() {
    let psi = psi_of(&sign_sequences(&normalize(5, 1).unwrap()).unwrap()).unwrap();
    let roots = isolate_real_roots(&psi.at_two()).unwrap();
    for &(x0, n, x_n) in BRANCHES_5_1 {
        let root = roots
            .iter()
            .find(|iv| rational_to_f64(iv.lo()) < x0 && x0 < rational_to_f64(iv.hi()))
            .unwrap();
        let w = continue_root(&psi, root, n).unwrap();
        assert!(w.converged, "x0 = {x0}, n = {n}");
        assert!((w.x0 - x0).abs() < 1e-9);
        assert!((w.x_n - x_n).abs() < 1e-9, "x0 = {x0}, n = {n}: {} vs {x_n}", w.x_n);
    }
}
