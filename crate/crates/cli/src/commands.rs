use std::fs;
use std::path::Path;
use std::time::Instant;

use ratbound_core::bound::{BoundValue, RationalMethod};
use ratbound_core::rational::to_numerator_polynomial;
use ratbound_core::schema::{matrix_to_data, MatrixData};
use ratbound_core::{companion, matrix_bounds, scalar_bounds, spectrum};
use ratbound_core::{Error, InstanceFile, Mode, Norm, RationalMatrix, ScalarRationalFunction};
use serde::Serialize;

use crate::output::{matrix_market, render_table, round2};
use crate::{CliError, Format, MatrixFormat};

pub struct Loaded {
    pub name: String,
    pub r: RationalMatrix,
}

/// Reads, probes for non-regularity, and validates an instance file.
pub fn load(path: &Path, mode: Option<Mode>) -> Result<Loaded, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let mut file = InstanceFile::from_json(&text)?;
    if let Some(m) = mode {
        file.mode = m;
    }
    let (poly, terms) = file.to_parts()?;
    spectrum::regularity_probe(&poly, &terms)?;
    let r = file.validate()?;
    let name = file
        .name
        .clone()
        .unwrap_or_else(|| path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default());
    Ok(Loaded { name, r })
}

#[derive(Debug, Clone, Serialize)]
pub struct Row {
    pub method: String,
    pub norm: Option<Norm>,
    pub value: f64,
    pub sound: Option<bool>,
    pub runtime_ms: f64,
    pub notes: String,
}

fn timed(f: impl FnOnce() -> Result<Vec<BoundValue>, Error>) -> Result<(Vec<BoundValue>, f64), Error> {
    let start = Instant::now();
    let v = f()?;
    let ms = start.elapsed().as_secs_f64() * 1e3 / v.len().max(1) as f64;
    Ok((v, ms))
}

fn push(rows: &mut Vec<Row>, prefix: &str, norm: Option<Norm>, (values, ms): (Vec<BoundValue>, f64)) {
    for b in values {
        rows.push(Row {
            method: format!("{prefix}{}", b.method.name()),
            norm,
            value: b.value,
            sound: None,
            runtime_ms: ms,
            notes: b.notes,
        });
    }
}

/// Every bound that applies to `r`: the matrix-level bounds once per norm,
/// then (for scalar instances) the companion bounds and the polynomial bounds
/// applied to the expanded numerator.
pub fn collect_bounds(r: &RationalMatrix, norms: &[Norm]) -> Result<Vec<Row>, Error> {
    let mut rows = Vec::new();
    for &norm in norms {
        push(&mut rows, "", Some(norm), timed(|| matrix_bounds::all_matrix_bounds(r, norm))?);
    }
    if let Ok(s) = ScalarRationalFunction::new(r.clone()) {
        let scalar = timed(|| {
            let mut v = RationalMethod::ALL
                .iter()
                .map(|&m| scalar_bounds::rational_zero_bound(&s, m))
                .collect::<Result<Vec<_>, _>>()?;
            if s.degree() == 1 {
                v.push(scalar_bounds::linear_case_bound(&s)?);
            }
            Ok(v)
        })?;
        push(&mut rows, "", None, scalar);
        let num = timed(|| Ok(scalar_bounds::all_poly_bounds(&to_numerator_polynomial(&s))))?;
        push(&mut rows, "numerator:", None, num);
    }
    Ok(rows)
}

pub fn mark_soundness(rows: &mut [Row], oracle: f64) {
    for row in rows {
        row.sound = Some(row.value >= oracle - 1e-7);
    }
}

#[derive(Serialize)]
struct BoundReport<'a> {
    instance: &'a str,
    mode: Mode,
    norms: &'a [Norm],
    rows: &'a [Row],
    oracle_max_modulus: f64,
    input: &'a InstanceFile,
}

pub fn bounds(path: &Path, norms: &[Norm], mode: Option<Mode>, methods: &[String], format: Format) -> Result<(), CliError> {
    let loaded = load(path, mode)?;
    let r = &loaded.r;
    let mut rows = collect_bounds(r, norms)?;
    if !methods.is_empty() {
        if let Some(bad) = methods.iter().find(|m| !rows.iter().any(|row| &row.method == *m)) {
            return Err(Error::Parse(format!("no applicable method named `{bad}`")).into());
        }
        rows.retain(|row| methods.contains(&row.method));
    }
    let oracle = spectrum::eigenvalues_rational(r, spectrum::DEFAULT_TOL)?.max_modulus();
    mark_soundness(&mut rows, oracle);

    match format {
        Format::Json => {
            let report = BoundReport {
                instance: &loaded.name,
                mode: r.mode(),
                norms,
                rows: &rows,
                oracle_max_modulus: oracle,
                input: &InstanceFile::from_instance(r),
            };
            println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(std::io::stdout());
            w.write_record(["method", "norm", "value", "sound", "runtime_ms"]).map_err(csv_err)?;
            for row in &rows {
                w.write_record([
                    row.method.clone(),
                    row.norm.map(|n| n.to_string()).unwrap_or_default(),
                    format!("{:?}", row.value),
                    row.sound.map(|s| s.to_string()).unwrap_or_default(),
                    format!("{:.3}", row.runtime_ms),
                ])
                .map_err(csv_err)?;
            }
            w.flush().map_err(|e| CliError::Input(e.to_string()))?;
        }
        Format::Table => {
            println!("instance: {} ({}, {}x{}, degree {})", loaded.name, r.mode(), r.size(), r.size(), r.degree());
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|row| {
                    vec![
                        row.method.clone(),
                        row.norm.map(|n| n.to_string()).unwrap_or_else(|| "-".into()),
                        round2(row.value),
                        if row.sound == Some(true) { "yes" } else { "NO" }.into(),
                    ]
                })
                .collect();
            print!("{}", render_table(&["method", "norm", "bound", "sound"], &body));
            println!("oracle max modulus: {}", round2(oracle));
        }
    }
    Ok(())
}

pub fn csv_err(e: csv::Error) -> CliError {
    CliError::Input(e.to_string())
}

pub fn spectrum(path: &Path, tol: f64, mode: Option<Mode>, format: Format) -> Result<(), CliError> {
    let loaded = load(path, mode)?;
    let s = spectrum::eigenvalues_rational(&loaded.r, tol)?;
    match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Dump<'a> {
                instance: &'a str,
                max_modulus: f64,
                #[serde(flatten)]
                result: &'a spectrum::SpectrumResult,
            }
            let dump = Dump {
                instance: &loaded.name,
                max_modulus: s.max_modulus(),
                result: &s,
            };
            println!("{}", serde_json::to_string_pretty(&dump).expect("spectrum serializes"));
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(std::io::stdout());
            w.write_record(["re", "im", "modulus", "residual"]).map_err(csv_err)?;
            for (z, res) in s.eigenvalues.iter().zip(&s.residuals) {
                w.write_record([format!("{:?}", z.re), format!("{:?}", z.im), format!("{:?}", z.norm()), format!("{res:e}")])
                    .map_err(csv_err)?;
            }
            w.flush().map_err(|e| CliError::Input(e.to_string()))?;
        }
        Format::Table => {
            println!("instance: {}", loaded.name);
            let body: Vec<Vec<String>> = s
                .eigenvalues
                .iter()
                .zip(&s.residuals)
                .map(|(z, res)| vec![format!("{:.6}", z.re), format!("{:.6}", z.im), format!("{:.6}", z.norm()), format!("{res:.1e}")])
                .collect();
            print!("{}", render_table(&["re", "im", "|λ|", "residual"], &body));
            println!("accepted {}, rejected {}", s.eigenvalues.len(), s.rejected.len());
            println!("max modulus: {}", round2(s.max_modulus()));
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct BlockDump {
    pole: [f64; 2],
    power: usize,
    offset: usize,
}

#[derive(Serialize)]
struct CompanionDump {
    dimension: usize,
    size: usize,
    degree: usize,
    trailing_offset: usize,
    blocks: Vec<BlockDump>,
    matrix: MatrixData,
}

pub fn companion(path: &Path, mode: Option<Mode>, format: MatrixFormat) -> Result<(), CliError> {
    let loaded = load(path, mode)?;
    let cm = companion::build(&loaded.r)?;
    match format {
        MatrixFormat::Mtx => print!("{}", matrix_market(&cm.matrix)),
        MatrixFormat::Json => {
            let dump = CompanionDump {
                dimension: cm.dimension(),
                size: cm.size,
                degree: cm.degree,
                trailing_offset: cm.trailing_offset,
                blocks: cm
                    .blocks
                    .iter()
                    .map(|b| BlockDump {
                        pole: [b.pole.re, b.pole.im],
                        power: b.power,
                        offset: b.offset,
                    })
                    .collect(),
                matrix: matrix_to_data(&cm.matrix),
            };
            println!("{}", serde_json::to_string(&dump).expect("companion serializes"));
        }
    }
    Ok(())
}
