use std::fs::File;
use std::path::Path;
use std::time::Instant;

use kselect::evaluate::mean_ari;
use kselect::selection::run_method;
use kselect::simulate::{replicate_seed, run_scenario, ScenarioConfig, ScenarioSummary};
use kselect::{
    df_vs_kprime_curve, fit_series, generate, ideal_selection, normalized_regret, oracle_comparison, select_all,
    standardize, DataMatrix, LloydOptions, Method, MixtureSpec, OracleRow, Result as CoreResult, Scheme,
    SelectionResult, SelectorConfig,
};
use serde::Serialize;

use crate::args::{DfCurveArgs, FitArgs, Format, MixtureArgs, OracleArgs, SelectArgs, SelectorArgs, SimulateArgs};
use crate::error::{CliError, CliResult};
use crate::input::{read_csv, Dataset, LabelColumns};
use crate::output::{json, num, opt_num, Table, SCHEMA};

fn millis(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1e3
}

fn load(path: &Path, labels: &LabelColumns, scale: bool) -> CliResult<Dataset> {
    let file = File::open(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let mut data = read_csv(file, labels)?;
    if scale {
        data.x = standardize(&data.x, true)?;
    }
    Ok(data)
}

fn check_fit(fit: &FitArgs, n: usize) -> CliResult<()> {
    if fit.kmin < 1 || fit.kmin > fit.kmax {
        return Err(CliError::Config(format!("need 1 <= kmin <= kmax, got {}..{}", fit.kmin, fit.kmax)));
    }
    if fit.inits < 1 {
        return Err(CliError::Config("--inits must be at least 1".into()));
    }
    if fit.kmax + 1 > n {
        return Err(CliError::Config(format!("kmax + 1 = {} exceeds the {n} rows", fit.kmax + 1)));
    }
    Ok(())
}

fn selector_config(s: &SelectorArgs, seed: u64) -> CliResult<SelectorConfig> {
    if s.methods.is_empty() {
        return Err(CliError::Config("no selection methods requested".into()));
    }
    if !(s.bandwidth >= 0.0) {
        return Err(CliError::Config("--bandwidth must be nonnegative".into()));
    }
    if s.methods.contains(&Method::Gap) && s.gap_b < 2 {
        return Err(CliError::Config("--gap-B must be at least 2".into()));
    }
    let mut methods = s.methods.clone();
    let mut seen = Vec::new();
    methods.retain(|m| {
        let fresh = !seen.contains(m);
        seen.push(*m);
        fresh
    });
    Ok(SelectorConfig {
        methods,
        bandwidth: s.bandwidth,
        use_smoothed: !s.raw_df,
        gap_b: s.gap_b,
        jump_power: s.jump_power,
        seed,
    })
}

#[derive(Serialize)]
struct MethodReport {
    method: Method,
    k_hat: Option<usize>,
    ks: Vec<usize>,
    scores: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    aux: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ari: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    normalized_regret: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    runtime_ms: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

#[derive(Serialize)]
struct Ideal {
    k: usize,
    ari: f64,
}

#[derive(Serialize)]
struct InputSummary {
    n: usize,
    d: usize,
    standardized: bool,
    label_columns: usize,
}

#[derive(Serialize)]
struct RunSummary {
    k_min: usize,
    k_max: usize,
    n_init: usize,
    seed: u64,
    bandwidth: f64,
    smoothed_df: bool,
    gap_b: usize,
    methods: Vec<Method>,
}

#[derive(Serialize)]
struct SelectReport {
    schema: &'static str,
    command: &'static str,
    input: InputSummary,
    config: RunSummary,
    methods: Vec<MethodReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ideal: Option<Ideal>,
    #[serde(skip_serializing_if = "Option::is_none")]
    fit_runtime_ms: Option<f64>,
}

pub fn select(args: &SelectArgs) -> CliResult<String> {
    let scale = args.input.standardize();
    let data = load(&args.input.input, &args.input.labels, scale)?;
    let x = &data.x;
    check_fit(&args.fit, x.n())?;
    let cfg = selector_config(&args.selectors, args.fit.seed)?;
    let timings = args.output.timings;

    let t = Instant::now();
    let series = fit_series(x, args.fit.kmin, args.fit.kmax, args.fit.inits, args.fit.seed, LloydOptions::default())?;
    let fit_ms = timings.then(|| millis(t));

    let results: Vec<(Method, CoreResult<SelectionResult>, Option<f64>)> = if timings {
        cfg.methods
            .iter()
            .map(|&m| {
                let t = Instant::now();
                let r = run_method(x, &series, m, &cfg);
                (m, r, Some(millis(t)))
            })
            .collect()
    } else {
        select_all(x, &series, &cfg).into_iter().map(|(m, r)| (m, r, None)).collect()
    };

    let ideal = if data.truths.is_empty() {
        None
    } else {
        let (k, ari) = ideal_selection(&series, &data.truths)?;
        Some(Ideal { k, ari })
    };

    let mut methods = Vec::with_capacity(results.len());
    for (method, r, runtime_ms) in results {
        methods.push(match r {
            Ok(r) => {
                let ari = match &ideal {
                    Some(_) => Some(mean_ari(&series.fit(r.k_hat).assignments, &data.truths)?),
                    None => None,
                };
                let regret = match (&ideal, ari) {
                    (Some(best), Some(a)) => normalized_regret(best.ari, a).ok(),
                    _ => None,
                };
                MethodReport {
                    method,
                    k_hat: Some(r.k_hat),
                    ks: r.ks,
                    scores: r.scores,
                    aux: r.aux,
                    ari,
                    normalized_regret: regret,
                    runtime_ms,
                    error: None,
                }
            }
            Err(e) => MethodReport {
                method,
                k_hat: None,
                ks: vec![],
                scores: vec![],
                aux: None,
                ari: None,
                normalized_regret: None,
                runtime_ms,
                error: Some(e.to_string()),
            },
        });
    }

    let report = SelectReport {
        schema: SCHEMA,
        command: "select",
        input: InputSummary { n: x.n(), d: x.d(), standardized: scale, label_columns: data.truths.len() },
        config: RunSummary {
            k_min: args.fit.kmin,
            k_max: args.fit.kmax,
            n_init: args.fit.inits,
            seed: args.fit.seed,
            bandwidth: cfg.bandwidth,
            smoothed_df: cfg.use_smoothed,
            gap_b: cfg.gap_b,
            methods: cfg.methods.clone(),
        },
        methods,
        ideal,
        fit_runtime_ms: fit_ms,
    };
    match args.output.format {
        Format::Json => json(&report),
        Format::Csv => select_csv(&report, timings),
    }
}

fn select_csv(report: &SelectReport, timings: bool) -> CliResult<String> {
    let mut header = vec!["method", "k_hat", "ari", "normalized_regret", "scores"];
    if timings {
        header.push("runtime_ms");
    }
    let mut table = Table::new(&header)?;
    for m in &report.methods {
        let scores = m.scores.iter().map(|&v| num(v)).collect::<Vec<_>>().join(";");
        let mut row = vec![
            m.method.as_str().to_string(),
            m.k_hat.map(|k| k.to_string()).unwrap_or_default(),
            opt_num(m.ari),
            opt_num(m.normalized_regret),
            scores,
        ];
        if timings {
            row.push(opt_num(m.runtime_ms));
        }
        table.row(&row)?;
    }
    if let Some(best) = &report.ideal {
        let mut row = vec!["ideal".to_string(), best.k.to_string(), num(best.ari), "0".into(), String::new()];
        if timings {
            row.push(String::new());
        }
        table.row(&row)?;
    }
    table.finish()
}

fn mixture_specs(m: &MixtureArgs, seed: u64) -> Vec<MixtureSpec> {
    let mut specs = Vec::new();
    for &scheme in &m.scheme {
        for &k in &m.clusters {
            for &d in &m.dims {
                for &n in &m.n {
                    specs.push(MixtureSpec {
                        separation: m.separation,
                        base_sigma: m.sigma,
                        ..MixtureSpec::new(scheme, k, d, n, seed)
                    });
                }
            }
        }
    }
    specs
}

fn single_spec(m: &MixtureArgs, seed: u64) -> CliResult<MixtureSpec> {
    let mut specs = mixture_specs(m, seed);
    if specs.len() != 1 {
        return Err(CliError::Config("this command takes a single mixture setting".into()));
    }
    let spec = specs.remove(0);
    spec.validate()?;
    Ok(spec)
}

#[derive(Serialize)]
struct ScenarioReport {
    #[serde(flatten)]
    summary: ScenarioSummary,
    replicate_seeds: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    runtime_ms: Option<f64>,
}

#[derive(Serialize)]
struct SimulateReport {
    schema: &'static str,
    command: &'static str,
    seed: u64,
    k_min: usize,
    k_max: usize,
    n_init: usize,
    scenarios: Vec<ScenarioReport>,
}

fn write_labeled(path: &Path, x: &DataMatrix, labels: &[usize]) -> CliResult<()> {
    let mut header: Vec<String> = (1..=x.d()).map(|j| format!("x{j}")).collect();
    header.push("label".into());
    let mut table = Table::new(&header)?;
    for (row, label) in x.rows().zip(labels) {
        let mut fields: Vec<String> = row.iter().map(|&v| num(v)).collect();
        fields.push(label.to_string());
        table.row(&fields)?;
    }
    crate::output::emit(&table.finish()?, Some(path))
}

pub fn simulate(args: &SimulateArgs) -> CliResult<String> {
    if args.reps < 1 {
        return Err(CliError::Config("--reps must be at least 1".into()));
    }
    let seed = args.fit.seed;
    let specs = mixture_specs(&args.mixture, seed);
    if args.dump.is_some() && specs.len() != 1 {
        return Err(CliError::Config("--dump needs exactly one scenario".into()));
    }
    let selectors = selector_config(&args.selectors, seed)?;
    let cfg = ScenarioConfig {
        k_min: args.fit.kmin,
        k_max: args.fit.kmax,
        n_init: args.fit.inits,
        selectors,
        lloyd: LloydOptions::default(),
    };
    for spec in &specs {
        spec.validate()?;
        check_fit(&args.fit, spec.n)?;
    }

    let mut scenarios = Vec::with_capacity(specs.len());
    for spec in &specs {
        let t = Instant::now();
        let summary = run_scenario(spec, args.reps, &cfg, seed)?;
        let runtime_ms = args.output.timings.then(|| millis(t));
        let replicate_seeds = (0..args.reps).map(|r| replicate_seed(seed, r)).collect();
        scenarios.push(ScenarioReport { summary, replicate_seeds, runtime_ms });
    }
    if let Some(path) = &args.dump {
        let first = generate(&MixtureSpec { seed: replicate_seed(seed, 0), ..specs[0].clone() })?;
        write_labeled(path, &first.x, &first.labels)?;
    }

    let report = SimulateReport {
        schema: SCHEMA,
        command: "simulate",
        seed,
        k_min: cfg.k_min,
        k_max: cfg.k_max,
        n_init: cfg.n_init,
        scenarios,
    };
    match args.output.format {
        Format::Json => json(&report),
        Format::Csv => simulate_csv(&report, &cfg.selectors.methods, args.output.timings),
    }
}

fn simulate_csv(report: &SimulateReport, methods: &[Method], timings: bool) -> CliResult<String> {
    let mut header: Vec<String> =
        ["scheme", "k", "d", "n", "separation", "sigma", "reps"].iter().map(|s| s.to_string()).collect();
    for m in methods {
        for stat in ["k_median", "k_p10", "k_p90", "ari_median", "ari_p10", "ari_p90"] {
            header.push(format!("{}_{stat}", m.as_str()));
        }
    }
    if timings {
        header.push("runtime_ms".into());
    }
    let mut table = Table::new(&header)?;
    for sc in &report.scenarios {
        let s = &sc.summary;
        let mut row = vec![
            s.spec.scheme.as_str().to_string(),
            s.spec.k.to_string(),
            s.spec.d.to_string(),
            s.spec.n.to_string(),
            num(s.spec.separation),
            num(s.spec.base_sigma),
            s.reps.to_string(),
        ];
        for m in &s.methods {
            for v in [m.k_hat.median, m.k_hat.p10, m.k_hat.p90, m.ari.median, m.ari.p10, m.ari.p90] {
                row.push(num(v));
            }
        }
        if timings {
            row.push(opt_num(sc.runtime_ms));
        }
        table.row(&row)?;
    }
    table.finish()
}

#[derive(Serialize)]
struct CurvePoint {
    k: usize,
    k_prime: usize,
    df_hat: f64,
}

#[derive(Serialize)]
struct CurveReport {
    schema: &'static str,
    command: &'static str,
    n: usize,
    d: usize,
    seed: u64,
    rows: Vec<CurvePoint>,
    #[serde(skip_serializing_if = "Option::is_none")]
    runtime_ms: Option<f64>,
}

pub fn df_curve(args: &DfCurveArgs) -> CliResult<String> {
    let x = match &args.input {
        Some(path) => load(path, &args.labels, !args.no_standardize)?.x,
        None => generate(&single_spec(&args.mixture, args.seed)?)?.x,
    };
    if args.inits < 1 {
        return Err(CliError::Config("--inits must be at least 1".into()));
    }
    if args.ks.is_empty() {
        return Err(CliError::Config("--ks is empty".into()));
    }
    if let Some(&bad) = args.ks.iter().find(|&&k| k < 1 || k >= x.n()) {
        return Err(CliError::Config(format!("k = {bad} must lie within 1..={}", x.n() - 1)));
    }
    if *args.kprime.start() < 1 || *args.kprime.end() >= x.n() {
        return Err(CliError::Config(format!("k' range must lie within 1..={}", x.n() - 1)));
    }
    let t = Instant::now();
    let mut rows = Vec::new();
    for &k in &args.ks {
        let curve = df_vs_kprime_curve(&x, k, args.kprime.clone(), args.inits, args.seed, LloydOptions::default())?;
        rows.extend(curve.into_iter().map(|(k_prime, df_hat)| CurvePoint { k, k_prime, df_hat }));
    }
    let runtime_ms = args.output.timings.then(|| millis(t));
    match args.output.format {
        Format::Json => json(&CurveReport {
            schema: SCHEMA,
            command: "df-curve",
            n: x.n(),
            d: x.d(),
            seed: args.seed,
            rows,
            runtime_ms,
        }),
        Format::Csv => {
            let mut table = Table::new(&["k", "k_prime", "df_hat"])?;
            for r in &rows {
                table.row(&[r.k.to_string(), r.k_prime.to_string(), num(r.df_hat)])?;
            }
            table.finish()
        }
    }
}

#[derive(Serialize)]
struct OracleReport {
    schema: &'static str,
    command: &'static str,
    spec: MixtureSpec,
    k_prime: usize,
    reps: usize,
    n_init: usize,
    rows: Vec<OracleRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    runtime_ms: Option<f64>,
}

pub fn oracle(args: &OracleArgs) -> CliResult<String> {
    let spec = single_spec(&args.mixture, args.seed)?;
    if spec.scheme != Scheme::AssumptionsMet {
        return Err(CliError::Config("the sampling oracle needs the assumptions_met scheme".into()));
    }
    if args.reps < 2 {
        return Err(CliError::Config("--reps must be at least 2".into()));
    }
    if args.inits < 1 {
        return Err(CliError::Config("--inits must be at least 1".into()));
    }
    let ks: Vec<usize> = args.ks.clone().collect();
    let k_max = *args.ks.end();
    let k_prime = args.kprime.unwrap_or(k_max + 1);
    if *args.ks.start() < 1 || k_prime >= spec.n || k_max >= spec.n {
        return Err(CliError::Config(format!("k and k' must lie within 1..={}", spec.n - 1)));
    }
    let t = Instant::now();
    let data = generate(&spec)?;
    let rows = oracle_comparison(
        &data.mean_matrix(),
        spec.base_sigma,
        &ks,
        k_prime,
        args.reps,
        args.inits,
        args.seed,
        LloydOptions::default(),
    )?;
    let runtime_ms = args.output.timings.then(|| millis(t));
    match args.output.format {
        Format::Json => json(&OracleReport {
            schema: SCHEMA,
            command: "oracle",
            spec,
            k_prime,
            reps: args.reps,
            n_init: args.inits,
            rows,
            runtime_ms,
        }),
        Format::Csv => {
            let mut table = Table::new(&["k", "df_oracle", "df_hat", "kd"])?;
            for r in &rows {
                table.row(&[r.k.to_string(), num(r.df_oracle), num(r.df_hat), num(r.kd)])?;
            }
            table.finish()
        }
    }
}
