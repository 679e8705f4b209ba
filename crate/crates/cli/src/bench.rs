use std::collections::BTreeMap;

use rayon::prelude::*;
use ratbound_core::random::{random_instance, InstanceParams, Sampler};
use ratbound_core::spectrum::{eigenvalues_rational, DEFAULT_TOL};
use ratbound_core::{Error, Norm};

use crate::commands::{collect_bounds, csv_err, mark_soundness, Row};
use crate::output::{render_table, round2};
use crate::{BenchFormat, CliError};

pub struct BenchArgs {
    pub count: usize,
    pub seed: u64,
    pub p: Option<usize>,
    pub m: Option<usize>,
    pub poles: Option<usize>,
    pub norms: Vec<Norm>,
    pub format: BenchFormat,
}

#[derive(Default)]
struct Stats {
    runs: usize,
    ratio_sum: f64,
    ratio_max: f64,
    ratios: usize,
    violations: usize,
}

fn params(args: &BenchArgs) -> InstanceParams {
    let fixed = |v: Option<usize>, range: (usize, usize)| v.map_or(range, |x| (x, x));
    let d = InstanceParams::default();
    InstanceParams {
        size: fixed(args.p, d.size),
        degree: fixed(args.m, d.degree),
        poles: fixed(args.poles, d.poles),
        ..d
    }
}

fn evaluate(seed: u64, index: usize, params: &InstanceParams, norms: &[Norm]) -> Result<(f64, Vec<Row>), Error> {
    let r = random_instance(&mut Sampler::for_instance(seed, index), params);
    let oracle = eigenvalues_rational(&r, DEFAULT_TOL)?.max_modulus();
    let mut rows = collect_bounds(&r, norms)?;
    mark_soundness(&mut rows, oracle);
    Ok((oracle, rows))
}

fn pool() -> Result<rayon::ThreadPool, CliError> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var("RATBOUND_THREADS") {
        let n: usize = v
            .parse()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| CliError::Input(format!("RATBOUND_THREADS must be a positive integer, got `{v}`")))?;
        b = b.num_threads(n);
    }
    b.build().map_err(|e| CliError::Input(e.to_string()))
}

pub fn run(args: &BenchArgs) -> Result<(), CliError> {
    if args.p == Some(0) || args.m == Some(0) {
        return Err(CliError::Input("--p and --m must be at least 1".into()));
    }
    let params = params(args);
    let results: Vec<_> = pool()?.install(|| {
        (0..args.count)
            .into_par_iter()
            .map(|i| evaluate(args.seed, i, &params, &args.norms))
            .collect::<Result<_, _>>()
    })?;

    let mut stats: BTreeMap<(String, String), Stats> = BTreeMap::new();
    let mut order = Vec::new();
    for (oracle, rows) in &results {
        for row in rows {
            let key = (row.method.clone(), row.norm.map(|n| n.to_string()).unwrap_or_else(|| "-".into()));
            let s = stats.entry(key.clone()).or_insert_with(|| {
                order.push(key);
                Stats::default()
            });
            s.runs += 1;
            s.violations += usize::from(row.sound == Some(false));
            if *oracle > 0.0 {
                let ratio = row.value / oracle;
                s.ratio_sum += ratio;
                s.ratio_max = s.ratio_max.max(ratio);
                s.ratios += 1;
            }
        }
    }

    let lines: Vec<(&(String, String), &Stats)> = order.iter().map(|k| (k, &stats[k])).collect();
    let mean = |s: &Stats| if s.ratios == 0 { f64::NAN } else { s.ratio_sum / s.ratios as f64 };
    match args.format {
        BenchFormat::Csv => {
            let mut w = csv::Writer::from_writer(std::io::stdout());
            w.write_record(["method", "norm", "instances", "mean_ratio", "max_ratio", "violations"]).map_err(csv_err)?;
            for ((method, norm), s) in &lines {
                w.write_record([
                    method.clone(),
                    norm.clone(),
                    s.runs.to_string(),
                    format!("{:?}", mean(s)),
                    format!("{:?}", s.ratio_max),
                    s.violations.to_string(),
                ])
                .map_err(csv_err)?;
            }
            w.flush().map_err(|e| CliError::Input(e.to_string()))?;
        }
        BenchFormat::Table => {
            println!("{} instances, seed {}", args.count, args.seed);
            let body: Vec<Vec<String>> = lines
                .iter()
                .map(|((method, norm), s)| {
                    vec![
                        method.clone(),
                        norm.clone(),
                        s.runs.to_string(),
                        round2(mean(s)),
                        round2(s.ratio_max),
                        s.violations.to_string(),
                    ]
                })
                .collect();
            print!("{}", render_table(&["method", "norm", "n", "mean", "max", "violations"], &body));
        }
    }
    let violations: usize = stats.values().map(|s| s.violations).sum();
    if violations == 0 {
        Ok(())
    } else {
        Err(CliError::Mismatch(format!("{violations} unsound bounds")))
    }
}
