//! Embedded reference tables and their recomputation.
//!
//! `paper_tables.json` carries the published values of the χ(λ) comparison
//! grid (table 1) and of the λ = 1 spectra under the four approximations
//! (table 2), so deviations can be printed without network access. The
//! `compute_*` functions regenerate both tables from this crate's solvers.

use crate::closed_form::{self, CoeffFamily};
use crate::error::Result;
use crate::fit::{self, ReferenceGrid};
use crate::potentials::{DimensionlessPotential, QuantumNumbers};
use serde::Deserialize;
use std::sync::OnceLock;

#[derive(Debug, Clone, Deserialize)]
pub struct ReferenceTables {
    pub version: u32,
    pub source: String,
    pub table1: Vec<Table1Row>,
    pub table2: Table2,
}

#[derive(Debug, Clone, Deserialize)]
pub struct Table1Row {
    pub lambda: f64,
    pub log: bool,
    pub chi_hyperbola_airy: f64,
    pub chi_hyperbola_fit: f64,
    pub chi_wkb: Option<f64>,
}

impl Table1Row {
    pub fn potential(&self) -> DimensionlessPotential {
        if self.log {
            DimensionlessPotential::Log
        } else {
            DimensionlessPotential::PowerLaw(self.lambda)
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
pub struct Table2 {
    pub lambda: f64,
    pub blocks: Vec<Table2Block>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct Table2Block {
    pub ell: u32,
    pub numeric: [f64; 4],
    pub hyperbola_airy: [f64; 4],
    pub hyperbola_fit: [f64; 4],
    pub wkb: [f64; 4],
}

static TABLES: OnceLock<ReferenceTables> = OnceLock::new();

/// The embedded reference values.
pub fn reference_tables() -> &'static ReferenceTables {
    TABLES.get_or_init(|| {
        serde_json::from_str(include_str!("../data/paper_tables.json"))
            .expect("embedded paper_tables.json is well-formed")
    })
}

/// The λ grid of table 1, in row order.
pub fn table1_potentials() -> Vec<DimensionlessPotential> {
    reference_tables()
        .table1
        .iter()
        .map(Table1Row::potential)
        .collect()
}

/// One recomputed χ row: this crate's numbers next to the published ones.
#[derive(Debug, Clone)]
pub struct Table1Computed {
    pub potential: DimensionlessPotential,
    pub chi_hyperbola_airy: Result<f64>,
    pub chi_hyperbola_fit: Result<f64>,
    pub chi_wkb: Option<Result<f64>>,
    pub reference: Table1Row,
}

/// Recompute every χ entry of table 1 against freshly solved oracle grids.
pub fn compute_table1(mesh_size: usize) -> Vec<Table1Computed> {
    reference_tables()
        .table1
        .iter()
        .map(|row| {
            let potential = row.potential();
            let grid = grid_with_mesh(potential, mesh_size);
            let chi_wkb = match potential {
                DimensionlessPotential::Log => None,
                DimensionlessPotential::PowerLaw(_) => Some(fit::chi_wkb(&grid)),
            };
            Table1Computed {
                potential,
                chi_hyperbola_airy: fit::chi_family(CoeffFamily::HyperbolaAiry, &grid),
                chi_hyperbola_fit: fit::chi_family(CoeffFamily::HyperbolaFit, &grid),
                chi_wkb,
                reference: row.clone(),
            }
        })
        .collect()
}

fn grid_with_mesh(potential: DimensionlessPotential, mesh_size: usize) -> ReferenceGrid {
    let slices: Vec<_> = (0..=fit::GRID_MAX)
        .map(|ell| {
            let problem = crate::oracle::RadialProblem::auto(potential, ell, fit::GRID_MAX)
                .mesh_size(mesh_size);
            crate::oracle::solve_radial(&problem, fit::GRID_MAX).ok()
        })
        .collect();
    ReferenceGrid::from_fn(potential, |n, ell| {
        slices[ell as usize]
            .as_ref()
            .map(|s| s.eigenvalues[n as usize])
    })
}

/// Recomputed λ = 1 table: one 4×4 grid per method, n across, ℓ down.
#[derive(Debug, Clone)]
pub struct Table2Computed {
    pub numeric: Vec<[Result<f64>; 4]>,
    pub hyperbola_airy: Vec<[Result<f64>; 4]>,
    pub hyperbola_fit: Vec<[Result<f64>; 4]>,
    pub wkb: Vec<[Result<f64>; 4]>,
}

pub fn compute_table2(mesh_size: usize) -> Table2Computed {
    let lambda = reference_tables().table2.lambda;
    let potential = DimensionlessPotential::PowerLaw(lambda);
    let mut numeric = Vec::new();
    let mut bc3 = Vec::new();
    let mut bc4 = Vec::new();
    let mut wkb = Vec::new();
    for ell in 0..=fit::GRID_MAX {
        let problem =
            crate::oracle::RadialProblem::auto(potential, ell, fit::GRID_MAX).mesh_size(mesh_size);
        let slice = crate::oracle::solve_radial(&problem, fit::GRID_MAX);
        numeric.push(std::array::from_fn(|n| {
            slice
                .as_ref()
                .map(|s| s.eigenvalues[n])
                .map_err(|e| e.clone())
        }));
        bc3.push(std::array::from_fn(|n| {
            closed_form::improved_epsilon(
                lambda,
                QuantumNumbers::new(n as u32, ell),
                CoeffFamily::HyperbolaAiry,
            )
        }));
        bc4.push(std::array::from_fn(|n| {
            closed_form::improved_epsilon(
                lambda,
                QuantumNumbers::new(n as u32, ell),
                CoeffFamily::HyperbolaFit,
            )
        }));
        wkb.push(std::array::from_fn(|n| {
            closed_form::wkb_epsilon(lambda, QuantumNumbers::new(n as u32, ell))
        }));
    }
    Table2Computed {
        numeric,
        hyperbola_airy: bc3,
        hyperbola_fit: bc4,
        wkb,
    }
}
