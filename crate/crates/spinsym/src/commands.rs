// Copyright 2026 The spinsym Authors
// SPDX-License-Identifier: Apache-2.0

//! The five subcommands, each producing a [`Report`].

use spinsym_core::analysis::SqueezingAnalysis;
use spinsym_core::evolve::Propagator;
use spinsym_core::tables::match_coefficients;
use spinsym_core::{
    collective_operator, commutator_norm, invariant_symmetric_subspace, j_squared,
    symmetric_decomposition, symmetry_retention_report, Axis, ChainModel, CoefficientTable, Error,
    SpinProjection, Transcription, XDiagPropagator,
};

use crate::config::{CommandConfig, RunConfig, StateSpec, ThetaSpec};
use crate::error::CliError;
use crate::format::{Report, Section};

/// Largest deviation `tables` accepts between tabulated and numeric rows.
pub const TABLE_TOLERANCE: f64 = 1e-9;

/// Subspaces up to this dimension have their basis printed.
pub const MAX_PRINTED_DIMENSION: usize = 8;

pub const TABLES_HEADER: &[&str] = &[
    "table",
    "state",
    "theta",
    "m",
    "re_c_analytic",
    "im_c_analytic",
    "re_c_numeric",
    "im_c_numeric",
    "weight_analytic",
    "weight_numeric",
    "deviation",
];
pub const LEAKAGE_HEADER: &[&str] = &["state", "theta", "leakage"];
pub const SUMMARY_HEADER: &[&str] = &["state", "max_leakage", "retained"];
pub const INVARIANT_HEADER: &[&str] = &["n", "model", "dimension", "iterations"];
pub const BASIS_HEADER: &[&str] = &["vector", "m", "re_c", "im_c"];
pub const COMMUTATORS_HEADER: &[&str] = &["pair", "frobenius_norm"];
pub const SQUEEZE_HEADER: &[&str] = &[
    "state",
    "theta",
    "xi2",
    "min_variance",
    "mean_jx",
    "mean_jy",
    "mean_jz",
];

pub fn run(config: &RunConfig) -> Result<Report, CliError> {
    config.validate()?;
    match &config.command {
        CommandConfig::Tables {
            table,
            transcription,
            theta,
        } => tables(*table, *transcription, theta),
        CommandConfig::Leakage {
            n_qubits,
            model,
            theta,
            tol,
        } => leakage(*n_qubits, model, theta, *tol),
        CommandConfig::Invariant {
            n_qubits,
            model,
            tol,
        } => invariant(*n_qubits, model, *tol),
        CommandConfig::Commutators { n_qubits, model } => commutators(*n_qubits, model),
        CommandConfig::Squeeze {
            n_qubits,
            model,
            state,
            theta,
        } => squeeze(*n_qubits, model, state, theta),
    }
}

fn table_name(table: CoefficientTable) -> &'static str {
    match table {
        CoefficientTable::I => "I",
        CoefficientTable::II => "II",
    }
}

/// `psi1…psi4` for the 3-qubit table, `phi1…phi5` for the 4-qubit one.
pub fn row_label(table: CoefficientTable, row: usize) -> String {
    match table {
        CoefficientTable::I => format!("psi{row}"),
        CoefficientTable::II => format!("phi{row}"),
    }
}

pub fn tables(
    table: CoefficientTable,
    transcription: Transcription,
    theta: &ThetaSpec,
) -> Result<Report, CliError> {
    let grid = theta.grid()?;
    let n = table.n_qubits();
    let propagator = XDiagPropagator::new(&ChainModel::IsingX, n)?;
    let mut section = Section::new("tables", TABLES_HEADER);
    let mut worst = 0.0f64;
    for row in 1..=table.rows() {
        let input = table.input_state(row)?;
        let label = row_label(table, row);
        for &t in grid.points() {
            let (analytic, weight) = table.row(row, t, transcription)?;
            let numeric = symmetric_decomposition(&propagator.evolve(&input, t)?);
            let deviation = match_coefficients(&analytic, &numeric.coefficients).deviation;
            worst = worst.max(deviation);
            for ((m, a), c) in SpinProjection::descending(n)
                .zip(&analytic)
                .zip(&numeric.coefficients)
            {
                section.push(vec![
                    table_name(table).into(),
                    label.clone().into(),
                    t.into(),
                    m.to_string().into(),
                    a.re.into(),
                    a.im.into(),
                    c.re.into(),
                    c.im.into(),
                    weight.into(),
                    numeric.symmetric_weight.into(),
                    deviation.into(),
                ]);
            }
        }
    }
    let failure = (worst > TABLE_TOLERANCE).then(|| {
        format!(
            "table {}: maximum deviation {worst:e} exceeds {TABLE_TOLERANCE:e}",
            table_name(table)
        )
    });
    Ok(Report {
        command: "tables",
        sections: vec![section],
        failure,
    })
}

pub fn leakage(
    n_qubits: usize,
    model: &ChainModel,
    theta: &ThetaSpec,
    tol: f64,
) -> Result<Report, CliError> {
    let report = symmetry_retention_report(n_qubits, model, &theta.grid()?, tol)?;
    let mut series = Section::new("leakage", LEAKAGE_HEADER);
    let mut summary = Section::new("summary", SUMMARY_HEADER);
    for state in &report.states {
        for (&t, &l) in report.theta_grid.iter().zip(&state.leakage) {
            series.push(vec![state.label.clone().into(), t.into(), l.into()]);
        }
        summary.push(vec![
            state.label.clone().into(),
            state.max_leakage.into(),
            state.retained.into(),
        ]);
    }
    Ok(Report {
        command: "leakage",
        sections: vec![series, summary],
        failure: None,
    })
}

pub fn invariant(n_qubits: usize, model: &ChainModel, tol: f64) -> Result<Report, CliError> {
    let sub = invariant_symmetric_subspace(n_qubits, model, tol)?;
    let mut head = Section::new("invariant", INVARIANT_HEADER);
    head.push(vec![
        n_qubits.into(),
        model.to_string().into(),
        sub.dimension().into(),
        sub.iterations.into(),
    ]);
    let mut sections = vec![head];
    if sub.dimension() <= MAX_PRINTED_DIMENSION {
        let mut basis = Section::new("basis", BASIS_HEADER);
        for (v, coeffs) in sub.coefficients.iter().enumerate() {
            for (m, c) in SpinProjection::descending(n_qubits).zip(coeffs) {
                basis.push(vec![
                    (v + 1).into(),
                    m.to_string().into(),
                    c.re.into(),
                    c.im.into(),
                ]);
            }
        }
        sections.push(basis);
    }
    Ok(Report {
        command: "invariant",
        sections,
        failure: None,
    })
}

pub fn commutators(n_qubits: usize, model: &ChainModel) -> Result<Report, CliError> {
    let a = model.hamiltonian(n_qubits)?;
    let mut section = Section::new("commutators", COMMUTATORS_HEADER);
    let partners = [
        ("A_Jx", collective_operator(n_qubits, Axis::X)?),
        ("A_Jy", collective_operator(n_qubits, Axis::Y)?),
        ("A_Jz", collective_operator(n_qubits, Axis::Z)?),
        ("A_J2", j_squared(n_qubits)?),
    ];
    for (name, b) in &partners {
        section.push(vec![(*name).into(), commutator_norm(&a, b)?.into()]);
    }
    Ok(Report {
        command: "commutators",
        sections: vec![section],
        failure: None,
    })
}

pub fn squeeze(
    n_qubits: usize,
    model: &ChainModel,
    state: &StateSpec,
    theta: &ThetaSpec,
) -> Result<Report, CliError> {
    let grid = theta.grid()?;
    let psi = state.build(n_qubits)?;
    let propagator = Propagator::new(model, n_qubits)?;
    let mut section = Section::new("squeeze", SQUEEZE_HEADER);
    for &t in grid.points() {
        let evolved = propagator.evolve(&psi, t)?;
        let analysis = SqueezingAnalysis::compute(&evolved).map_err(|e| match e {
            Error::DegenerateDirection { norm } => CliError::Degenerate(format!(
                "{state} at theta={t}: mean spin |<J>| = {norm:e} vanishes, so the squeezing \
                 parameter has no perpendicular plane"
            )),
            other => other.into(),
        })?;
        let [jx, jy, jz] = analysis.mean_spin;
        section.push(vec![
            state.to_string().into(),
            t.into(),
            analysis.xi2.into(),
            analysis.min_variance.into(),
            jx.into(),
            jy.into(),
            jz.into(),
        ]);
    }
    Ok(Report {
        command: "squeeze",
        sections: vec![section],
        failure: None,
    })
}
