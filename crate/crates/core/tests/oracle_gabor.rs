//! Dense-matrix oracles for the transforms and the frame algebra.

mod common;

use common::*;
use nalgebra::{Complex, DVector};
use neartight_core::gabor::{
    canonical_dual, dgt, frame_bounds, frame_operator_matrix, idgt, idgt_complex, GaborParams,
    Window,
};
use neartight_core::spectral::hann_window;
use rand::Rng;

#[test]
fn dgt_matches_explicit_matrix() {
    let mut r = rng(1);
    for &(a, m, l, k) in &[(2usize, 4usize, 16usize, 6usize), (3, 4, 24, 9), (4, 8, 32, 8)] {
        let params = GaborParams::new(a, m, l).unwrap();
        let g = random_window(&mut r, k, "probe");
        let f = random_signal(&mut r, l);
        let c = dgt(&f, &g, &params).unwrap();
        let oracle = gabor_matrix(&g, &params) * to_cvector(&f);
        for (idx, z) in c.flat().iter().enumerate() {
            let o = oracle[idx];
            assert!(
                (z.re - o.re).abs() < 1e-11 && (z.im - o.im).abs() < 1e-11,
                "a={a} M={m} L={l} index {idx}: {z} vs {o}"
            );
        }
    }
}

#[test]
fn idgt_is_the_adjoint_of_dgt() {
    // <G f, c> = <f, G* c> for random real f and random complex c.
    let mut r = rng(2);
    let params = GaborParams::new(2, 4, 16).unwrap();
    let g = random_window(&mut r, 6, "adj");
    let f = random_signal(&mut r, 16);
    let c_raw: Vec<Complex<f64>> = (0..params.coefficient_count())
        .map(|_| Complex::new(r.gen_range(-1.0..1.0), r.gen_range(-1.0..1.0)))
        .collect();
    let c = neartight_core::gabor::GaborCoefficients::from_flat(c_raw.clone(), 4, 8).unwrap();

    let analysis = dgt(&f, &g, &params).unwrap();
    let lhs: Complex<f64> = analysis
        .flat()
        .iter()
        .zip(&c_raw)
        .map(|(a, b)| a * b.conj())
        .sum();
    let synthesis = idgt_complex(&c, &g, &params).unwrap();
    let rhs: Complex<f64> = f
        .iter()
        .zip(&synthesis)
        .map(|(&x, s)| s.conj() * x)
        .sum();
    assert!((lhs - rhs).norm() < 1e-12, "{lhs} vs {rhs}");
}

#[test]
fn frame_operator_matches_dense_product() {
    let mut r = rng(3);
    // Painless and non-painless instances, L <= 64.
    for &(a, m, l, k) in &[(2usize, 4usize, 16usize, 4usize), (2, 4, 16, 6), (4, 8, 64, 20)] {
        let params = GaborParams::new(a, m, l).unwrap();
        let g = random_window(&mut r, k, "walnut");
        let s = frame_operator_matrix(&g, &params).unwrap();
        let gm = gabor_matrix(&g, &params);
        let dense = gm.adjoint() * &gm;
        for i in 0..l {
            for j in 0..l {
                let d = dense[(i, j)];
                assert!(d.im.abs() < 1e-12, "imaginary part at ({i},{j})");
                assert!(
                    (s[(i, j)] - d.re).abs() < 1e-12,
                    "a={a} M={m} L={l} K={k} at ({i},{j}): {} vs {}",
                    s[(i, j)],
                    d.re
                );
            }
        }
    }
}

#[test]
fn frame_bounds_match_singular_values() {
    let mut r = rng(4);
    let cases: Vec<(GaborParams, Window<f64>)> = vec![
        // Reduced instance of the experiment lattice: Hann, K=M=32, a=16.
        (GaborParams::new(16, 32, 64).unwrap(), hann_window(32).unwrap()),
        (GaborParams::new(2, 4, 16).unwrap(), random_window(&mut r, 6, "rw1")),
        (GaborParams::new(4, 8, 64).unwrap(), random_window(&mut r, 12, "rw2")),
    ];
    for (params, g) in cases {
        let (a, b) = frame_bounds(&g, &params).unwrap();
        let (oa, ob) = oracle_frame_bounds(&g, &params);
        assert!((a - oa).abs() <= 1e-8 * oa, "lower: {a} vs {oa}");
        assert!((b - ob).abs() <= 1e-8 * ob, "upper: {b} vs {ob}");
    }
}

#[test]
fn painless_dual_matches_dense_linear_solve() {
    // Hann K=M=8, a=4, L=16: elementwise formula against a dense solve.
    let params = GaborParams::new(4, 8, 16).unwrap();
    let g = hann_window::<f64>(8).unwrap();
    let dual = canonical_dual(&g, &params).unwrap();
    let dual_emb = dual.embedded(16).unwrap();

    let gm = gabor_matrix(&g, &params);
    let s = (gm.adjoint() * &gm).map(|z| z.re);
    let rhs = DVector::from_vec(g.embedded(16).unwrap());
    let solved = s.lu().solve(&rhs).expect("frame operator is invertible");
    for (l, &x) in dual_emb.iter().enumerate() {
        assert!((x - solved[l]).abs() < 1e-12, "index {l}: {x} vs {}", solved[l]);
    }
}

#[test]
fn dual_synthesis_is_the_least_squares_solution() {
    // Masked/perturbed coefficients resolved by SVD least squares on the
    // explicit matrix must agree with idgt under the canonical dual.
    let mut r = rng(5);
    let params = GaborParams::new(2, 4, 16).unwrap();
    let g = random_window(&mut r, 6, "ls");
    let f = random_signal(&mut r, 16);
    let mut c = dgt(&f, &g, &params).unwrap();

    // Conjugate-symmetric perturbation keeps the least-squares solution real.
    let m = params.channels();
    for n in 0..params.time_shifts() {
        let mut eps = vec![Complex::new(0.0, 0.0); m];
        for i in 0..=m / 2 {
            let re = r.gen_range(-0.3..0.3);
            let im = if i == 0 || (m % 2 == 0 && i == m / 2) {
                0.0
            } else {
                r.gen_range(-0.3..0.3)
            };
            eps[i] = Complex::new(re, im);
            eps[(m - i) % m] = Complex::new(re, -im);
        }
        for i in 0..m {
            let z = c.get(i, n) + eps[i];
            c.set(i, n, z);
        }
    }

    let via_dual = idgt(&c, &canonical_dual(&g, &params).unwrap(), &params).unwrap();

    let gm = gabor_matrix(&g, &params);
    let target = DVector::from_vec(c.flat().to_vec());
    let ls = gm.svd(true, true).solve(&target, 1e-12).expect("svd solve");
    for l in 0..16 {
        assert!(ls[l].im.abs() < 1e-10, "least-squares solution must be real");
        assert!(
            (via_dual[l] - ls[l].re).abs() < 1e-8,
            "index {l}: {} vs {}",
            via_dual[l],
            ls[l].re
        );
    }
}
