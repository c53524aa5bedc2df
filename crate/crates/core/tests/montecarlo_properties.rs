use nalgebra::DMatrix;
use num_complex::Complex64;
use num_traits::ToPrimitive;
use proptest::prelude::*;
use rand::Rng;
use rand_distr::StandardNormal;
use tdbound_core::bounds::{total_bound, GateSetKind, Method};
use tdbound_core::montecarlo::{
    estimate_delta, estimate_delta_with, estimate_fs_indicator_mc, run_trials, sample_haar, su2_irrep_matrix,
    trial_rng, CMatrix, GateSetSample, HaarProjector, MomentOperator, PowerIteration, TailEstimate, TrialSpec,
};
use tdbound_core::rep::{fs_indicator, DynkinLabel};

fn random_vector(dim: usize, seed: u64) -> Vec<Complex64> {
    let mut rng = trial_rng(seed, 7);
    (0..dim)
        .map(|_| {
            let re: f64 = rng.sample(StandardNormal);
            let im: f64 = rng.sample(StandardNormal);
            Complex64::new(re, im)
        })
        .collect()
}

fn distance(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm_sqr()).sum::<f64>().sqrt()
}

fn single_gate(u: CMatrix) -> GateSetSample {
    GateSetSample { unitaries: vec![u], kind: GateSetKind::Plain, seed: 0, trial: 0 }
}

#[test]
fn projector_is_an_orthogonal_projection() {
    for (d, t) in [(2usize, 1u32), (2, 2), (3, 2), (2, 3), (3, 3)] {
        let proj = HaarProjector::new(d, t).unwrap();
        let p: DMatrix<Complex64> = proj.to_dense();
        assert!((&p * &p - &p).norm() < 1e-10, "d={d} t={t}");
        assert!((p.adjoint() - &p).norm() < 1e-10);
        assert!((p.trace().re - proj.rank() as f64).abs() < 1e-9);
    }
}

#[test]
fn projector_commutes_with_tensor_powers() {
    for (d, t) in [(2usize, 2u32), (3, 2), (2, 3), (4, 2)] {
        let proj = HaarProjector::new(d, t).unwrap();
        for trial in 0..3 {
            let mut rng = trial_rng(11, trial);
            let op = MomentOperator::new(&single_gate(sample_haar(d, &mut rng, false)), t).unwrap();
            let v = random_vector(op.dim(), trial);
            let (mut a, mut b, mut c) = (
                vec![Complex64::default(); op.dim()],
                vec![Complex64::default(); op.dim()],
                vec![Complex64::default(); op.dim()],
            );
            op.apply(&v, &mut a);
            proj.apply(&a, &mut b);
            proj.apply(&v, &mut a);
            op.apply(&a, &mut c);
            assert!(distance(&b, &c) < 1e-8, "d={d} t={t}");
            // Π is fixed by every U^{t,t}.
            op.apply(&a, &mut b);
            assert!(distance(&a, &b) < 1e-8);
        }
    }
}

#[test]
fn symmetric_sets_give_hermitian_moments() {
    for (d, t, size) in [(2usize, 2u32, 10u64), (3, 2, 6), (2, 3, 4)] {
        let sample = GateSetSample::sample(d, GateSetKind::Symmetric, size, 5, 1).unwrap();
        let op = MomentOperator::new(&sample, t).unwrap();
        for probe in 0..3 {
            let v = random_vector(op.dim(), probe);
            let mut a = vec![Complex64::default(); op.dim()];
            let mut b = vec![Complex64::default(); op.dim()];
            op.apply(&v, &mut a);
            op.apply_adjoint(&v, &mut b);
            assert!(distance(&a, &b) < 1e-10);
        }
    }
}

#[test]
fn single_gate_has_unit_gap() {
    for trial in 0..5 {
        let sample = GateSetSample::sample(2, GateSetKind::Plain, 1, 3, trial).unwrap();
        let est = estimate_delta(&sample, 1).unwrap();
        assert!((est.delta - 1.0).abs() < 1e-7);
    }
    for t in 1..=3 {
        let est = estimate_delta(&GateSetSample::identity(3), t).unwrap();
        assert!((est.delta - 1.0).abs() < 1e-7);
    }
}

#[test]
fn gap_grows_with_moment_order() {
    for trial in 0..6 {
        let sample = GateSetSample::sample(2, GateSetKind::Plain, 6, 99, trial).unwrap();
        let tight = PowerIteration { tolerance: 1e-13, ..PowerIteration::default() };
        let mut last = 0.0;
        for t in 1..=4 {
            let op = MomentOperator::new(&sample, t).unwrap();
            let proj = HaarProjector::new(2, t).unwrap();
            let delta = estimate_delta_with(&op, &proj, &tight, trial).unwrap().delta;
            assert!(delta >= last - 1e-8, "trial={trial} t={t}: {delta} < {last}");
            last = delta;
        }
    }
}

#[test]
fn haar_trace_moments() {
    // For Haar U(d) with d ≥ k, E|tr U|^{2k} = k!.
    let n = 20_000u64;
    let d = 3;
    let (mut m2, mut m4, mut corner) = (0.0, 0.0, 0.0);
    for k in 0..n {
        let u = sample_haar(d, &mut trial_rng(2, k), false);
        let tr = u.trace().norm_sqr();
        m2 += tr;
        m4 += tr * tr;
        corner += u[(0, 0)].norm_sqr();
    }
    let n = n as f64;
    assert!((m2 / n - 1.0).abs() < 0.05, "{}", m2 / n);
    assert!((m4 / n - 2.0).abs() < 0.15, "{}", m4 / n);
    assert!((corner / n - 1.0 / 3.0).abs() < 0.01);
}

#[test]
fn trials_are_reproducible() {
    let spec = TrialSpec { d: 2, t: 2, kind: GateSetKind::Plain, size: 8, seed: 77 };
    let a = run_trials(&spec, 10).unwrap();
    let b = run_trials(&spec, 10).unwrap();
    assert_eq!(a, b);
    assert_ne!(a[0].delta, a[1].delta);
    let tail = TailEstimate::from_records(&a, 0.0);
    assert_eq!(tail.fraction, 1.0);
    assert_eq!(TailEstimate::from_records(&a, 1.0 + 1e-6).fraction, 0.0);
}

fn plain_master_half_point(size: u64) -> f64 {
    let (mut lo, mut hi) = (1e-6, 1.0 - 1e-9);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let p = total_bound(2, 2, GateSetKind::Plain, size, mid, Method::MasterPlain).unwrap().raw();
        if p > 0.5 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    hi
}

#[test]
fn mean_gap_sits_below_the_bound_median() {
    let spec = TrialSpec { d: 2, t: 2, kind: GateSetKind::Plain, size: 50, seed: 4242 };
    let records = run_trials(&spec, 100).unwrap();
    let deltas: Vec<f64> = records.iter().map(|r| r.delta).collect();
    let mean = deltas.iter().sum::<f64>() / deltas.len() as f64;
    let var = deltas.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (deltas.len() - 1) as f64;
    let stderr = (var / deltas.len() as f64).sqrt();
    let half = plain_master_half_point(50);
    assert!(mean - 3.0 * stderr < half, "mean {mean} ± {stderr} vs {half}");
    assert!(mean < half);
}

#[test]
fn su2_characters_match_weyl_formula() {
    for j2 in 0..=6u32 {
        for k in 0..5 {
            let phi = 0.3 + 0.61 * f64::from(k);
            let u = CMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![
                Complex64::from_polar(1.0, phi),
                Complex64::from_polar(1.0, -phi),
            ]));
            let chi = su2_irrep_matrix(j2, &u).unwrap().trace();
            let expected = (f64::from(j2 + 1) * phi).sin() / phi.sin();
            assert!((chi.re - expected).abs() < 1e-10 && chi.im.abs() < 1e-10);
        }
    }
}

#[test]
fn su2_indicator_cases_at_scale() {
    for (j2, n, expected) in [(2u32, 2i32, 1.0 / 3.0), (1, 2, -0.5), (1, 3, 0.0)] {
        let (mean, stderr) = estimate_fs_indicator_mc(j2, n, 100_000, 31).unwrap();
        assert!((mean - expected).abs() <= 3.0 * stderr.max(1e-12), "j2={j2} n={n}: {mean} ± {stderr}");
    }
}

#[test]
fn su2_indicator_agrees_with_exact_values() {
    for j2 in 0..=4u64 {
        let weight = DynkinLabel::new(vec![j2]).unwrap().to_u_weight(0);
        for n in -4..=4i64 {
            let exact = fs_indicator(&weight, n).unwrap().to_f64().unwrap();
            let (mean, stderr) = estimate_fs_indicator_mc(j2 as u32, n as i32, 20_000, 5 + j2).unwrap();
            assert!((mean - exact).abs() <= 4.0 * stderr + 1e-9, "j2={j2} n={n}: {mean} ± {stderr} vs {exact}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn gap_lies_in_unit_interval(
        d in 2usize..=3,
        t in 1u32..=2,
        size in 1u64..=6,
        symmetric in any::<bool>(),
        seed in any::<u64>(),
    ) {
        let (kind, size) = if symmetric { (GateSetKind::Symmetric, 2 * size) } else { (GateSetKind::Plain, size) };
        let sample = GateSetSample::sample(d, kind, size, seed, 0).unwrap();
        prop_assert!(sample.unitarity_defect() < 1e-12);
        let delta = estimate_delta(&sample, t).unwrap().delta;
        prop_assert!((0.0..=1.0 + 1e-8).contains(&delta));
    }

    #[test]
    fn lifted_sets_stay_unitary(d in 3usize..=4, size in 1u64..=3, seed in any::<u64>()) {
        let sample = GateSetSample::sample(d, GateSetKind::BeamsplitterLifted, size, seed, 0).unwrap();
        prop_assert_eq!(sample.unitaries.len() as u64, size * (d * (d - 1)) as u64);
        prop_assert!(sample.unitarity_defect() < 1e-12);
        let delta = estimate_delta(&sample, 1).unwrap().delta;
        prop_assert!((0.0..=1.0 + 1e-8).contains(&delta));
    }
}
