// Copyright 2026 The spinsym Authors
// SPDX-License-Identifier: Apache-2.0

//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so that every criterion is evaluated and
//! reported even when an earlier one fails. The process exits non-zero if any
//! criterion fails.

use std::f64::consts::{PI, TAU};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spinsym_core::analysis::SqueezingAnalysis;
use spinsym_core::dense::DenseMatrix;
use spinsym_core::evolve::phase_aligned_deviation;
use spinsym_core::tables::match_coefficients;
use spinsym_core::{
    collective_operator, commutator_norm, dicke_state, evolve_closed_form_n4,
    heisenberg_symmetry_scan, invariant_symmetric_subspace, ising_hamiltonian, j_squared,
    spin_squeezing_xi2, symmetric_decomposition, symmetry_retention_report, Axis, ChainModel,
    ClaimVerdict, CoefficientTable, Complex64, DensePropagator, Error, OperatorSpec,
    SpinProjection, StateVector, ThetaGrid, Transcription, XDiagPropagator,
};

const TOL: f64 = 1e-10;

/// Outcome of one criterion: the named sub-checks and a detail string.
struct Criterion {
    id: u32,
    title: &'static str,
    checks: Vec<(String, bool)>,
    detail: Vec<String>,
}

impl Criterion {
    fn new(id: u32, title: &'static str) -> Self {
        Self {
            id,
            title,
            checks: Vec::new(),
            detail: Vec::new(),
        }
    }

    fn check(&mut self, label: impl Into<String>, ok: bool) {
        self.checks.push((label.into(), ok));
    }

    fn note(&mut self, text: impl Into<String>) {
        self.detail.push(text.into());
    }

    fn timed(&mut self, label: &str, elapsed: Duration, limit: Duration) {
        self.check(
            format!(
                "{label} runtime {:.2} s < {:.0} s",
                elapsed.as_secs_f64(),
                limit.as_secs_f64()
            ),
            elapsed < limit,
        );
    }

    fn passed(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }

    fn line(&self) -> String {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let failed: Vec<&str> = self
            .checks
            .iter()
            .filter(|(_, ok)| !ok)
            .map(|(l, _)| l.as_str())
            .collect();
        let mut parts = self.detail.clone();
        if !failed.is_empty() {
            parts.push(format!("failed: {}", failed.join("; ")));
        }
        format!(
            "criterion {} {status} {}: {}",
            self.id,
            self.title,
            parts.join("; ")
        )
    }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_state(rng: &mut impl Rng, n: usize) -> StateVector {
    let amps = (0..1usize << n)
        .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
        .collect();
    StateVector::normalized(n, amps).unwrap()
}

fn max_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// Largest phase-aligned deviation of one table row from the numeric
/// coefficients, and the largest |Σ|c_m|² − w| against `weight`.
fn table_row_errors(
    table: CoefficientTable,
    row: usize,
    transcription: Transcription,
    grid: &ThetaGrid,
    weight: impl Fn(f64) -> f64,
) -> (f64, f64) {
    let input = table.input_state(row).unwrap();
    let engine = XDiagPropagator::new(&ChainModel::IsingX, table.n_qubits()).unwrap();
    let mut coeff = 0.0f64;
    let mut sum = 0.0f64;
    for &theta in grid.points() {
        let (tab, _) = table.row(row, theta, transcription).unwrap();
        let numeric = symmetric_decomposition(&engine.evolve(&input, theta).unwrap());
        coeff = coeff.max(match_coefficients(&tab, &numeric.coefficients).deviation);
        sum = sum.max((numeric.symmetric_weight - weight(theta)).abs());
    }
    (coeff, sum)
}

fn criterion_1() -> Criterion {
    let mut c = Criterion::new(1, "Table I reproduction");
    let start = Instant::now();
    let grid = ThetaGrid::standard_with_special_values();
    let mut worst_coeff = 0.0f64;
    let mut worst_sum = 0.0f64;
    for row in 1..=4 {
        let (dev, sum) = table_row_errors(
            CoefficientTable::I,
            row,
            Transcription::Corrected,
            &grid,
            |_| 1.0,
        );
        worst_coeff = worst_coeff.max(dev);
        worst_sum = worst_sum.max(sum);
    }
    let elapsed = start.elapsed();
    c.check(
        format!("coefficient deviation {worst_coeff:.1e} <= 1e-10"),
        worst_coeff <= TOL,
    );
    c.check(
        format!("|sum |c|^2 - 1| {worst_sum:.1e} <= 1e-10"),
        worst_sum <= TOL,
    );
    c.timed("table", elapsed, Duration::from_secs(1));

    // The printed off-diagonal phase: moduli agree, phases do not.
    let engine = XDiagPropagator::new(&ChainModel::IsingX, 3).unwrap();
    let mut modulus = 0.0f64;
    let mut printed = 0.0f64;
    for row in 1..=4 {
        let input = CoefficientTable::I.input_state(row).unwrap();
        for &theta in grid.points() {
            let (tab, _) = CoefficientTable::I
                .row(row, theta, Transcription::Printed)
                .unwrap();
            let numeric =
                symmetric_decomposition(&engine.evolve(&input, theta).unwrap()).coefficients;
            for (a, b) in tab.iter().zip(&numeric) {
                modulus = modulus.max((a.norm() - b.norm()).abs());
            }
            printed = printed.max(match_coefficients(&tab, &numeric).deviation);
        }
    }
    c.check(
        format!("printed-form moduli deviation {modulus:.1e} <= 1e-10"),
        modulus <= TOL,
    );
    c.check(
        format!("printed-form phase deviation {printed:.2} > 1e-10"),
        printed > TOL,
    );
    c.note(format!(
        "4 rows x {} theta, deviation {worst_coeff:.1e}, weight error {worst_sum:.1e}, {:.3} s; \
         printed off-diagonal phase e^(-i theta/4) deviates by up to {printed:.2} (moduli to {modulus:.1e})",
        grid.len(),
        elapsed.as_secs_f64()
    ));
    c
}

fn criterion_2() -> Criterion {
    let mut c = Criterion::new(2, "Table II reproduction");
    let grid = ThetaGrid::standard_with_special_values();
    let weights: [fn(f64) -> f64; 5] = [
        |t| (5.0 + t.cos()) / 6.0,
        |_| 1.0,
        |t| (8.0 + t.cos()) / 9.0,
        |_| 1.0,
        |t| (5.0 + t.cos()) / 6.0,
    ];
    let mut worst_sum = 0.0f64;
    for (row, w) in (1..=5).zip(weights) {
        let (_, sum) = table_row_errors(
            CoefficientTable::II,
            row,
            Transcription::Corrected,
            &grid,
            w,
        );
        c.check(
            format!("phi{row} weight error {sum:.1e} <= 1e-10"),
            sum <= TOL,
        );
        worst_sum = worst_sum.max(sum);
    }

    let input = CoefficientTable::II.input_state(1).unwrap();
    let out = XDiagPropagator::new(&ChainModel::IsingX, 4)
        .unwrap()
        .evolve(&input, PI)
        .unwrap();
    let w_pi = symmetric_decomposition(&out).symmetric_weight;
    c.check(
        format!("phi1 weight at pi {w_pi:.12} = 2/3 +- 1e-10"),
        (w_pi - 2.0 / 3.0).abs() <= TOL,
    );

    let (corrected, _) = table_row_errors(
        CoefficientTable::II,
        3,
        Transcription::Corrected,
        &grid,
        |_| 0.0,
    );
    let (printed, _) = table_row_errors(
        CoefficientTable::II,
        3,
        Transcription::Printed,
        &grid,
        |_| 0.0,
    );
    c.check(
        format!("phi3 with /6 deviation {corrected:.1e} <= 1e-10"),
        corrected <= TOL,
    );
    c.check(
        format!("phi3 with /sqrt6 deviation {printed:.2} > 1e-10"),
        printed > TOL,
    );
    c.note(format!(
        "weights within {worst_sum:.1e} over {} theta; phi1(pi) = {w_pi:.15}; phi3 coefficients: /6 {corrected:.1e}, /sqrt6 {printed:.2}",
        grid.len()
    ));
    c
}

fn criterion_3() -> Criterion {
    let mut c = Criterion::new(3, "Closed-form propagator");
    let mut rng = rng(3);
    let xdiag = XDiagPropagator::new(&ChainModel::IsingX, 4).unwrap();
    let dense = DensePropagator::new(&ChainModel::IsingX, 4).unwrap();
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let psi = random_state(&mut rng, 4);
        let theta = rng.random_range(-4.0 * PI..4.0 * PI);
        let closed = evolve_closed_form_n4(&psi, theta).unwrap();
        worst = worst.max(max_diff(
            closed.amplitudes(),
            xdiag.evolve(&psi, theta).unwrap().amplitudes(),
        ));
        worst = worst.max(max_diff(
            closed.amplitudes(),
            dense.evolve(&psi, theta).unwrap().amplitudes(),
        ));
    }
    let a = DenseMatrix::from_operator(&ising_hamiltonian(4).unwrap()).unwrap();
    let cube = (&a.matmul(&a).matmul(&a) - &a).frobenius_norm();
    c.check(
        format!("engine deviation {worst:.1e} <= 1e-11"),
        worst <= 1e-11,
    );
    c.check(format!("||A^3 - A||_F {cube:.1e} <= 1e-12"), cube <= 1e-12);
    c.note(format!(
        "100 random states, max deviation {worst:.1e}; ||A^3 - A||_F = {cube:.1e}"
    ));
    c
}

fn criterion_4() -> Criterion {
    let mut c = Criterion::new(4, "Retention verdicts");
    let start = Instant::now();
    let grid = ThetaGrid::standard();
    let expected_retained: [(usize, Vec<i32>); 5] = [
        (2, vec![2, 0, -2]),
        (3, vec![3, 1, -1, -3]),
        (4, vec![2, -2]),
        (5, vec![]),
        (6, vec![]),
    ];
    let mut observed = Vec::new();
    for (n, expected) in &expected_retained {
        let report = symmetry_retention_report(*n, &ChainModel::IsingX, &grid, TOL).unwrap();
        let retained: Vec<i32> = report
            .retained_projections()
            .iter()
            .map(|m| m.twice())
            .collect();
        c.check(
            format!("N={n} retained 2m = {retained:?}, expected {expected:?}"),
            &retained == expected,
        );
        observed.push(format!("N={n}: {}/{}", retained.len(), n + 1));
    }
    let stated = [3usize, 4, 2, 0, 0];
    let mut dims = Vec::new();
    for (n, want) in (2..=6).zip(stated) {
        let sub = invariant_symmetric_subspace(n, &ChainModel::IsingX, TOL).unwrap();
        dims.push(sub.dimension());
        c.check(
            format!("N={n} invariant dimension {} = {want}", sub.dimension()),
            sub.dimension() == want,
        );
    }
    let elapsed = start.elapsed();
    c.timed("criterion", elapsed, Duration::from_secs(10));
    c.note(format!(
        "retained {}; invariant dimensions {dims:?} (stated {stated:?}); {:.2} s",
        observed.join(", "),
        elapsed.as_secs_f64()
    ));
    c
}

fn criterion_5() -> Criterion {
    let mut c = Criterion::new(5, "Constants of motion");
    let mut worst = 0.0f64;
    for n in 2..=8 {
        let v = commutator_norm(
            &ising_hamiltonian(n).unwrap(),
            &collective_operator(n, Axis::X).unwrap(),
        )
        .unwrap();
        worst = worst.max(v);
    }
    let three = commutator_norm(&ising_hamiltonian(3).unwrap(), &j_squared(3).unwrap()).unwrap();
    let four = commutator_norm(&ising_hamiltonian(4).unwrap(), &j_squared(4).unwrap()).unwrap();
    c.check(
        format!("max ||[A, Jx]||_F {worst:.1e} <= 1e-12"),
        worst <= 1e-12,
    );
    c.check(
        format!("||[A_3, J^2]||_F {three:.1e} <= 1e-12"),
        three <= 1e-12,
    );
    c.check(format!("||[A_4, J^2]||_F {four:.3} > 1e-6"), four > 1e-6);
    c.note(format!(
        "||[A, Jx]|| <= {worst:.1e} for N=2..8; ||[A_3, J^2]|| = {three:.1e}; ||[A_4, J^2]|| = {four:.6}"
    ));
    c
}

fn criterion_6() -> Criterion {
    let mut c = Criterion::new(6, "Engine cross-validation");
    let mut rng = rng(6);
    let mut agree = 0.0f64;
    let mut defect = 0.0f64;
    let mut group = 0.0f64;
    for n in 2..=8 {
        let xdiag = XDiagPropagator::new(&ChainModel::IsingX, n).unwrap();
        let dense = DensePropagator::new(&ChainModel::IsingX, n).unwrap();
        for _ in 0..100 {
            let psi = random_state(&mut rng, n);
            let theta = rng.random_range(-4.0 * PI..4.0 * PI);
            let u = dense.unitary(theta);
            defect = defect.max(u.unitarity_defect());
            let a = xdiag.evolve(&psi, theta).unwrap();
            let b = dense.apply_unitary(&u, &psi).unwrap();
            agree = agree.max(phase_aligned_deviation(a.amplitudes(), b.amplitudes()));
            defect = defect.max((a.norm() - 1.0).abs());

            let t2 = rng.random_range(-4.0 * PI..4.0 * PI);
            let twice = xdiag.evolve(&a, t2).unwrap();
            let once = xdiag.evolve(&psi, theta + t2).unwrap();
            group = group.max(max_diff(twice.amplitudes(), once.amplitudes()));
        }
    }
    c.check(format!("XDiag vs dense {agree:.1e} <= 1e-10"), agree <= TOL);
    c.check(
        format!("unitarity defect {defect:.1e} <= 1e-11"),
        defect <= 1e-11,
    );
    c.check(format!("group law {group:.1e} <= 1e-10"), group <= TOL);
    c.note(format!(
        "100 (psi, theta) per N=2..8: agreement {agree:.1e}, unitarity defect {defect:.1e}, group law {group:.1e}"
    ));
    c
}

fn criterion_7() -> Criterion {
    let mut c = Criterion::new(7, "Anisotropic Heisenberg chains");
    let grid = ThetaGrid::standard();
    let mut iso_worst = 0.0f64;
    for n in 2..=6 {
        let scan = heisenberg_symmetry_scan(n, 1.0, 1.0, 1.0, &grid, TOL).unwrap();
        for s in &scan.report.states {
            iso_worst = iso_worst.max(s.max_leakage);
        }
        c.check(
            format!(
                "isotropic N={n} retains {}/{}",
                scan.report.retained_count(),
                n + 1
            ),
            scan.report.retained_count() == n + 1,
        );
    }
    c.check(
        format!("isotropic leakage {iso_worst:.1e} <= 1e-10"),
        iso_worst <= TOL,
    );

    let x = heisenberg_symmetry_scan(5, 2.0, 1.0, 1.0, &grid, TOL).unwrap();
    let x_max = x
        .report
        .states
        .iter()
        .map(|s| s.max_leakage)
        .fold(0.0, f64::max);
    c.check(
        format!("x-anisotropic N=5 max leakage {x_max:.3} > 1e-3"),
        x_max > 1e-3,
    );

    let z = heisenberg_symmetry_scan(4, 1.0, 1.0, 2.0, &grid, TOL).unwrap();
    let definite = matches!(z.verdict, ClaimVerdict::Agree | ClaimVerdict::Disagree);
    c.check(
        format!("z-anisotropic verdict {} is definite", z.verdict),
        definite,
    );
    c.note(format!(
        "isotropic leakage <= {iso_worst:.1e} (N=2..6); x-anisotropic N=5 max leakage {x_max:.3}; {}",
        z.summary
    ));
    c
}

/// `Var(J·n(φ))` for the perpendicular direction at angle `φ`.
fn perpendicular_variance(analysis: &SqueezingAnalysis, psi: &StateVector, phi: f64) -> f64 {
    let n = psi.n_qubits();
    let mut op = OperatorSpec::new(n, vec![]).unwrap();
    for (axis, w) in Axis::ALL.iter().zip(analysis.direction(phi)) {
        op = op
            .sum(
                &collective_operator(n, *axis)
                    .unwrap()
                    .scaled(Complex64::new(w, 0.0)),
            )
            .unwrap();
    }
    let image = op.apply(psi).unwrap();
    let dot = |a: &[Complex64], b: &[Complex64]| -> Complex64 {
        a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
    };
    let mean = dot(psi.amplitudes(), &image).re;
    dot(&image, &image).re - mean * mean
}

fn golden_section(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    let g = (5f64.sqrt() - 1.0) / 2.0;
    for _ in 0..200 {
        let (x, y) = (b - g * (b - a), a + g * (b - a));
        if f(x) < f(y) {
            b = y;
        } else {
            a = x;
        }
    }
    f(0.5 * (a + b))
}

fn criterion_8() -> Criterion {
    let mut c = Criterion::new(8, "Spin squeezing");
    let mut coherent = 0.0f64;
    for n in 2..=8 {
        let xi2 = spin_squeezing_xi2(&StateVector::basis_index(n, 0).unwrap()).unwrap();
        coherent = coherent.max((xi2 - 1.0).abs());
    }
    c.check(
        format!("|xi2(|0..0>) - 1| {coherent:.1e} <= 1e-10"),
        coherent <= TOL,
    );

    // 360-point grid over one full turn of φ.
    let step = TAU / 360.0;
    let mut rng = rng(8);
    let mut grid_gap = 0.0f64;
    let mut refined_gap = 0.0f64;
    let mut states = 0;
    while states < 50 {
        let n = rng.random_range(2..=8);
        let psi = random_state(&mut rng, n);
        let theta = rng.random_range(0.0..TAU);
        let out = XDiagPropagator::new(&ChainModel::IsingX, n)
            .unwrap()
            .evolve(&psi, theta)
            .unwrap();
        let Ok(analysis) = SqueezingAnalysis::compute(&out) else {
            continue;
        };
        let (k, grid_min) = (0..360)
            .map(|k| (k, perpendicular_variance(&analysis, &out, k as f64 * step)))
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .unwrap();
        let centre = k as f64 * step;
        let refined = golden_section(
            |p| perpendicular_variance(&analysis, &out, p),
            centre - step,
            centre + step,
        );
        grid_gap = grid_gap.max((grid_min - analysis.min_variance).abs());
        refined_gap = refined_gap.max((refined - analysis.min_variance).abs());
        states += 1;
    }
    c.check(
        format!("closed form vs 360-point grid minimum {grid_gap:.1e} <= 1e-9"),
        grid_gap <= 1e-9,
    );
    c.check(
        format!("closed form vs refined grid minimum {refined_gap:.1e} <= 1e-9"),
        refined_gap <= 1e-9,
    );

    let mut degenerate = true;
    for n in [2, 4, 6] {
        let d = dicke_state(n, SpinProjection::from_twice(0)).unwrap();
        degenerate &= matches!(
            spin_squeezing_xi2(&d),
            Err(Error::DegenerateDirection { .. })
        );
    }
    c.check(
        "zero mean spin raises the degenerate-direction error",
        degenerate,
    );
    c.note(format!(
        "coherent |xi2 - 1| <= {coherent:.1e}; 50 evolved random states: raw grid gap {grid_gap:.1e}, \
         golden-section refined gap {refined_gap:.1e}"
    ));
    c
}

fn run_leakage_12() -> (Duration, Vec<u8>, bool) {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_spinsym"))
        .args(["leakage", "--n", "12"])
        .output()
        .expect("spawn spinsym");
    (start.elapsed(), out.stdout, out.status.success())
}

fn criterion_9() -> Criterion {
    let mut c = Criterion::new(9, "Determinism and performance");
    let (t1, first, ok1) = run_leakage_12();
    let (t2, second, ok2) = run_leakage_12();
    c.check("both runs exit 0", ok1 && ok2);
    c.timed("leakage --n 12", t1.max(t2), Duration::from_secs(60));
    c.check(
        "byte-identical output",
        first == second && !first.is_empty(),
    );
    let rows = first.iter().filter(|&&b| b == b'\n').count();
    c.note(format!(
        "leakage --n 12: {:.2} s and {:.2} s, {} bytes, {rows} lines, identical: {}",
        t1.as_secs_f64(),
        t2.as_secs_f64(),
        first.len(),
        first == second
    ));
    c
}

fn main() -> ExitCode {
    let criteria: [fn() -> Criterion; 9] = [
        criterion_1,
        criterion_2,
        criterion_3,
        criterion_4,
        criterion_5,
        criterion_6,
        criterion_7,
        criterion_8,
        criterion_9,
    ];
    let mut passed = 0;
    for run in criteria {
        let c = run();
        println!("{}", c.line());
        passed += c.passed() as usize;
    }
    println!("acceptance: {passed} of {} criteria passed", criteria.len());
    if passed == criteria.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
