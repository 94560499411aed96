//! `hpsim` command-line driver: experiment runs, parameter sweeps, gauge
//! model dumps, and a fast self-validation suite.

mod config;
mod runner;

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hpsim::circuits::{ising_hamiltonian, Circuit, IsingParams};
use hpsim::engine::{sample_haar_unitary, RngStream};
use hpsim::gauge::{
    dual_spin_map, electric_matrix, enumerate_physical_basis, magnetic_matrix,
    ym_ising_closed_form, HalfInt,
};
use hpsim::protocol::{
    haar_baselines, make_layout, run_hp_channel_exact, run_hp_ideal, Evolution, HpRecord, Model,
    NoiseScope, NoiseSpec, Placement,
};

use config::{ExperimentConfig, PlacementConfig};
use runner::{evolution_for, run_grid, run_otoc_grid, run_teleport_grid, AnyError, RunKind};

#[derive(Parser)]
#[command(name = "hpsim", version, about = "Scrambling-teleportation experiment driver")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Noiseless run over the time grid.
    HpIdeal(RunArgs),
    /// Trajectory-sampled per-CNOT noise over the time grid.
    HpNoisy(RunArgs),
    /// Exact density-matrix channel run with entropy diagnostics.
    HpChannel(RunArgs),
    /// Teleport Haar-random input states; reports sample means.
    TeleportState(RunArgs),
    /// Monte-Carlo averaged OTOC over random Pauli pairs.
    OtocMc(OtocArgs),
    /// Dump the gauge-ladder basis and Hamiltonians.
    YmBuild(YmBuildArgs),
    /// Cross-product sweep over one axis with optional aggregation.
    Sweep(SweepArgs),
    /// Fast invariant suite; nonzero exit on any failure.
    Validate(ValidateArgs),
}

/// Flags mirroring the experiment-config fields; `--config` loads a JSON
/// file first and the flags override it.
#[derive(Args, Clone)]
struct ConfigArgs {
    #[arg(long)]
    config: Option<PathBuf>,
    /// ising, ym, or haar.
    #[arg(long, value_parser = parse_model)]
    model: Option<Model>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    n_a: Option<usize>,
    #[arg(long)]
    n_d: Option<usize>,
    /// Placement name: ising_default or ym_default (site lists go in the
    /// config file).
    #[arg(long)]
    placement: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    h: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    m: Option<f64>,
    #[arg(long)]
    k: Option<f64>,
    #[arg(long)]
    dt: Option<f64>,
    #[arg(long)]
    m_steps: Option<usize>,
    /// Comma-separated list of times.
    #[arg(long, value_delimiter = ',')]
    t_grid: Option<Vec<f64>>,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long)]
    scope: Option<ScopeArg>,
    #[arg(long)]
    n_traj: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
}

fn parse_model(s: &str) -> Result<Model, String> {
    match s {
        "ising" => Ok(Model::Ising),
        "ym" => Ok(Model::Ym),
        "haar" => Ok(Model::Haar),
        other => Err(format!("unknown model `{other}` (expected ising, ym, or haar)")),
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ScopeArg {
    AllCnots,
    EvolutionOnly,
    WholeUnitary,
}

impl From<ScopeArg> for NoiseScope {
    fn from(s: ScopeArg) -> Self {
        match s {
            ScopeArg::AllCnots => NoiseScope::AllCnots,
            ScopeArg::EvolutionOnly => NoiseScope::EvolutionOnly,
            ScopeArg::WholeUnitary => NoiseScope::WholeUnitary,
        }
    }
}

impl ConfigArgs {
    fn resolve(&self) -> Result<ExperimentConfig, AnyError> {
        let mut cfg = match &self.config {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
                ExperimentConfig::from_json(&text)?
            }
            None => {
                let missing = |name: &str| format!("missing required flag --{name} (or --config)");
                ExperimentConfig {
                    model: self.model.ok_or_else(|| missing("model"))?,
                    n: self.n.ok_or_else(|| missing("n"))?,
                    n_a: self.n_a.ok_or_else(|| missing("n-a"))?,
                    n_d: self.n_d.ok_or_else(|| missing("n-d"))?,
                    placement: None,
                    h: None,
                    m: None,
                    k: None,
                    dt: None,
                    m_steps: None,
                    t_grid: self.t_grid.clone().ok_or_else(|| missing("t-grid"))?,
                    p: 0.0,
                    scope: NoiseScope::AllCnots,
                    n_traj: 1000,
                    seed: 0,
                }
            }
        };
        if let Some(v) = self.model {
            cfg.model = v;
        }
        if let Some(v) = self.n {
            cfg.n = v;
        }
        if let Some(v) = self.n_a {
            cfg.n_a = v;
        }
        if let Some(v) = self.n_d {
            cfg.n_d = v;
        }
        if let Some(v) = &self.placement {
            cfg.placement = Some(PlacementConfig::Named(v.clone()));
        }
        if let Some(v) = self.h {
            cfg.h = Some(v);
        }
        if let Some(v) = self.m {
            cfg.m = Some(v);
        }
        if let Some(v) = self.k {
            cfg.k = Some(v);
        }
        if let Some(v) = self.dt {
            cfg.dt = Some(v);
        }
        if let Some(v) = self.m_steps {
            cfg.m_steps = Some(v);
        }
        if let Some(v) = &self.t_grid {
            cfg.t_grid = v.clone();
        }
        if let Some(v) = self.p {
            cfg.p = v;
        }
        if let Some(v) = self.scope {
            cfg.scope = v.into();
        }
        if let Some(v) = self.n_traj {
            cfg.n_traj = v;
        }
        if let Some(v) = self.seed {
            cfg.seed = v;
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Csv,
    Json,
}

#[derive(Args, Clone)]
struct OutputArgs {
    /// Output file; stdout when omitted.
    #[arg(long, short)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

impl OutputArgs {
    fn write(&self, text: &str) -> Result<(), AnyError> {
        match &self.output {
            Some(path) => std::fs::write(path, text)
                .map_err(|e| format!("cannot write {}: {e}", path.display()).into()),
            None => {
                std::io::stdout().write_all(text.as_bytes())?;
                Ok(())
            }
        }
    }
}

#[derive(Args)]
struct RunArgs {
    #[command(flatten)]
    cfg: ConfigArgs,
    #[command(flatten)]
    out: OutputArgs,
    /// Print the evolution circuit text instead of running (needs a
    /// single-point time grid and a gate-level model).
    #[arg(long)]
    dump_circuit: bool,
    /// Print the model Hamiltonian text instead of running.
    #[arg(long)]
    dump_hamiltonian: bool,
}

#[derive(Args)]
struct OtocArgs {
    #[command(flatten)]
    cfg: ConfigArgs,
    #[command(flatten)]
    out: OutputArgs,
    /// Number of random Pauli-pair samples per grid point.
    #[arg(long, default_value_t = 2000)]
    samples: usize,
}

#[derive(Args)]
struct YmBuildArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 2.0)]
    k: f64,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum SweepAxis {
    T,
    K,
    P,
    N,
    M,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum SweepKind {
    Ideal,
    Noisy,
    Channel,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    cfg: ConfigArgs,
    #[command(flatten)]
    out: OutputArgs,
    #[arg(long, value_enum)]
    axis: SweepAxis,
    /// Comma-separated axis values.
    #[arg(long, value_delimiter = ',', required = true)]
    values: Vec<f64>,
    #[arg(long, value_enum, default_value_t = SweepKind::Ideal)]
    kind: SweepKind,
    /// Append summary rows with the value at the final grid time.
    #[arg(long)]
    aggregate_final: bool,
    /// Append summary rows time-averaged over `lo,hi` (in t, or in K*t for
    /// the K axis).
    #[arg(long, value_delimiter = ',')]
    aggregate_window: Option<Vec<f64>>,
}

#[derive(Args)]
struct ValidateArgs {
    /// Optional config to check on top of the built-in invariant suite.
    #[arg(long)]
    config: Option<PathBuf>,
}

fn records_text(records: &[HpRecord], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Csv => {
            let with_diag = records.iter().any(|r| r.diagnostics.is_some());
            let _ = writeln!(out, "{}", HpRecord::csv_header(with_diag));
            for r in records {
                let _ = writeln!(out, "{}", r.to_csv_row());
            }
        }
        Format::Json => {
            for r in records {
                let _ = writeln!(out, "{}", r.to_json());
            }
        }
    }
    out
}

fn dump_for(args: &RunArgs, cfg: &ExperimentConfig) -> Result<Option<String>, AnyError> {
    if args.dump_hamiltonian {
        let text = match cfg.model {
            Model::Ising => {
                let (h, m) = cfg.ising_fields();
                ising_hamiltonian(&IsingParams::new(cfg.n, h, m)?).to_text()
            }
            Model::Ym => {
                let k = cfg.k.ok_or("config field `k`: required for model ym")?;
                ym_ising_closed_form(cfg.n, k)?.to_text()
            }
            Model::Haar => return Err("model haar has no Hamiltonian to dump".into()),
        };
        return Ok(Some(text));
    }
    if args.dump_circuit {
        if cfg.t_grid.len() != 1 {
            return Err("--dump-circuit needs a single-point t_grid".into());
        }
        let (ev, _) = evolution_for(cfg, 0, cfg.t_grid[0])?;
        return match ev {
            Evolution::Circuit(c) => Ok(Some(c.to_text())),
            Evolution::Dense(_) => Err("model haar has no gate-level circuit to dump".into()),
        };
    }
    Ok(None)
}

fn cmd_run(args: &RunArgs, kind: Option<RunKind>) -> Result<(), AnyError> {
    let cfg = args.cfg.resolve()?;
    if let Some(text) = dump_for(args, &cfg)? {
        return args.out.write(&text);
    }
    let records = match kind {
        Some(k) => run_grid(&cfg, k)?,
        None => run_teleport_grid(&cfg)?,
    };
    args.out.write(&records_text(&records, args.out.format))
}

fn cmd_otoc(args: &OtocArgs) -> Result<(), AnyError> {
    let cfg = args.cfg.resolve()?;
    let rows = run_otoc_grid(&cfg, args.samples)?;
    let mut out = String::new();
    let layout = cfg.layout()?;
    let _ = writeln!(out, "model,N,N_A,N_D,placement,t,M,n_samples,otoc,otoc_err,seed");
    for (t, m_steps, est, err) in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{}",
            cfg.model,
            cfg.n,
            cfg.n_a,
            cfg.n_d,
            layout.placement_label(),
            t,
            m_steps,
            args.samples,
            est,
            err,
            cfg.seed
        );
    }
    args.out.write(&out)
}

fn cmd_ym_build(args: &YmBuildArgs) -> Result<(), AnyError> {
    let basis = enumerate_physical_basis(args.n, HalfInt::from_twice(1))?;
    let mut out = String::new();
    let _ = writeln!(out, "# basis N={} j_max=1/2 ({} states)", args.n, basis.len());
    let fmt_spins = |v: &[HalfInt]| {
        v.iter()
            .map(|j| format!("{}", j.as_f64()))
            .collect::<Vec<_>>()
            .join(" ")
    };
    for (i, st) in basis.iter().enumerate() {
        let bits: String = dual_spin_map(st)?
            .iter()
            .map(|&b| if b { '1' } else { '0' })
            .collect();
        let _ = writeln!(
            out,
            "{i} j=[{}] j'=[{}] j''=[{}] spins={bits}",
            fmt_spins(&st.j),
            fmt_spins(&st.j_prime),
            fmt_spins(&st.j_dprime)
        );
    }
    let _ = writeln!(out, "# electric (row col value)");
    out.push_str(&electric_matrix(&basis).to_text());
    let _ = writeln!(out, "# magnetic K={} (row col value)", args.k);
    out.push_str(&magnetic_matrix(&basis, args.k).to_text());
    let _ = writeln!(out, "# spin-chain closed form (coefficient pauli_string)");
    out.push_str(&ym_ising_closed_form(args.n, args.k)?.to_text());
    args.out.write(&out)
}

fn sweep_configs(
    base: &ExperimentConfig,
    axis: SweepAxis,
    values: &[f64],
) -> Result<Vec<ExperimentConfig>, AnyError> {
    if values.is_empty() {
        return Err("sweep needs at least one axis value".into());
    }
    let mut out = Vec::with_capacity(values.len());
    for &v in values {
        let mut cfg = base.clone();
        match axis {
            SweepAxis::T => {
                cfg.t_grid = vec![v];
            }
            SweepAxis::K => {
                cfg.k = Some(v);
            }
            SweepAxis::P => {
                cfg.p = v;
            }
            SweepAxis::N => {
                if v.fract() != 0.0 || v < 1.0 {
                    return Err(format!("axis value {v} is not a valid N").into());
                }
                cfg.n = v as usize;
            }
            SweepAxis::M => {
                if v.fract() != 0.0 || v < 1.0 {
                    return Err(format!("axis value {v} is not a valid M").into());
                }
                cfg.m_steps = Some(v as usize);
            }
        }
        cfg.validate()?;
        out.push(cfg);
    }
    Ok(out)
}

fn cmd_sweep(args: &SweepArgs) -> Result<(), AnyError> {
    let base = if args.axis == SweepAxis::T && args.cfg.t_grid.is_none() {
        // a t-axis sweep supplies the grid through --values
        let mut with_grid = args.cfg.clone();
        with_grid.t_grid = Some(args.values.clone());
        let mut cfg = with_grid.resolve()?;
        cfg.t_grid = vec![args.values[0]];
        cfg
    } else {
        args.cfg.resolve()?
    };
    let kind = match args.kind {
        SweepKind::Ideal => RunKind::Ideal,
        SweepKind::Noisy => RunKind::Noisy,
        SweepKind::Channel => RunKind::Channel,
    };
    let axis_name = ["t", "K", "p", "N", "M"][args.axis as usize];
    let mut rows: Vec<(f64, HpRecord)> = Vec::new();
    for cfg in sweep_configs(&base, args.axis, &args.values)? {
        let axis_value = match args.axis {
            SweepAxis::T => cfg.t_grid[0],
            SweepAxis::K => cfg.k.unwrap_or(0.0),
            SweepAxis::P => cfg.p,
            SweepAxis::N => cfg.n as f64,
            SweepAxis::M => cfg.m_steps.unwrap_or(0) as f64,
        };
        for rec in run_grid(&cfg, kind)? {
            rows.push((axis_value, rec));
        }
    }
    let mut out = String::new();
    let with_diag = rows.iter().any(|(_, r)| r.diagnostics.is_some());
    let _ = writeln!(
        out,
        "{},axis,axis_value,kt",
        HpRecord::csv_header(with_diag)
    );
    for (v, rec) in &rows {
        let kt = rec.k.map(|k| (k * rec.t).to_string()).unwrap_or_default();
        let _ = writeln!(out, "{},{axis_name},{v},{kt}", rec.to_csv_row());
    }
    if args.aggregate_final || args.aggregate_window.is_some() {
        let _ = writeln!(out, "# summary: axis,axis_value,mode,p_epr,f_epr");
        // the t axis is one curve; other axes get one summary per value
        let groups: Vec<(String, Vec<&HpRecord>)> = if args.axis == SweepAxis::T {
            vec![("all".to_string(), rows.iter().map(|(_, r)| r).collect())]
        } else {
            let mut by_value: Vec<f64> = rows.iter().map(|(v, _)| *v).collect();
            by_value.dedup();
            by_value
                .into_iter()
                .map(|v| {
                    (
                        v.to_string(),
                        rows.iter().filter(|(w, _)| *w == v).map(|(_, r)| r).collect(),
                    )
                })
                .collect()
        };
        for (v, group) in groups {
            if args.aggregate_final {
                let last = group.last().expect("group is nonempty");
                let _ = writeln!(
                    out,
                    "# {axis_name},{v},final_t,{},{}",
                    last.p_epr, last.f_epr
                );
            }
            if let Some(w) = &args.aggregate_window {
                if w.len() != 2 || w[0] >= w[1] {
                    return Err("--aggregate-window needs `lo,hi` with lo < hi".into());
                }
                let (lo, hi) = (w[0], w[1]);
                let in_window: Vec<&&HpRecord> = group
                    .iter()
                    .filter(|r| {
                        let x = match args.axis {
                            SweepAxis::K => r.k.unwrap_or(0.0) * r.t,
                            _ => r.t,
                        };
                        (lo..=hi).contains(&x)
                    })
                    .collect();
                if in_window.is_empty() {
                    return Err(format!(
                        "aggregation window [{lo}, {hi}] contains no grid points for {axis_name}={v}"
                    )
                    .into());
                }
                let mean = |f: fn(&HpRecord) -> f64| {
                    in_window.iter().map(|r| f(r)).sum::<f64>() / in_window.len() as f64
                };
                let _ = writeln!(
                    out,
                    "# {axis_name},{v},window[{lo},{hi}],{},{}",
                    mean(|r| r.p_epr),
                    mean(|r| r.f_epr)
                );
            }
        }
    }
    args.out.write(&out)
}

fn cmd_validate(args: &ValidateArgs) -> Result<(), AnyError> {
    let mut failures = 0usize;
    let mut check = |name: &str, result: Result<(), String>| match result {
        Ok(()) => println!("PASS {name}"),
        Err(msg) => {
            failures += 1;
            println!("FAIL {name}: {msg}");
        }
    };

    check("haar_baselines_closed_form", (|| {
        let b = haar_baselines(2, 128, 64, 4).map_err(|e| e.to_string())?;
        let p_want = 19455.0 / 65535.0;
        let f_want = 65535.0 / 77820.0;
        if (b.p_exact - p_want).abs() < 1e-14 && (b.f_exact - f_want).abs() < 1e-14 {
            Ok(())
        } else {
            Err(format!("p = {}, f = {}", b.p_exact, b.f_exact))
        }
    })());

    check("identity_circuit_anchor", (|| {
        let layout = make_layout(4, 1, 2, Placement::IsingDefault).map_err(|e| e.to_string())?;
        let u = Evolution::Circuit(Circuit::new(4, "identity"));
        let res = run_hp_ideal(&layout, &u).map_err(|e| e.to_string())?;
        if (res.p_epr - 1.0).abs() < 1e-12 && (res.f_epr - 0.25).abs() < 1e-12 {
            Ok(())
        } else {
            Err(format!("p = {}, f = {}", res.p_epr, res.f_epr))
        }
    })());

    check("ideal_run_identities", (|| {
        let layout = make_layout(4, 1, 2, Placement::IsingDefault).map_err(|e| e.to_string())?;
        for s in 0..5u64 {
            let u = Evolution::Dense(sample_haar_unitary(4, RngStream::new(99, s)));
            let res = run_hp_ideal(&layout, &u).map_err(|e| e.to_string())?;
            let d_a2 = (layout.d_a() * layout.d_a()) as f64;
            let product = res.f_epr * res.p_epr * d_a2;
            if (product - 1.0).abs() > 1e-9 {
                return Err(format!("f*p*d_A^2 = {product}"));
            }
            let lower = (1.0 / d_a2).max(1.0 / (layout.d_d() * layout.d_d()) as f64);
            if res.p_epr < lower - 1e-9 {
                return Err(format!("p = {} below {lower}", res.p_epr));
            }
        }
        Ok(())
    })());

    check("cnot_count_formulas", (|| {
        use hpsim::circuits::{build_trotter_ising, build_trotter_ym, TrotterSpec, YmParams};
        for n in 2..=6usize {
            let spec = TrotterSpec::new(1.0, 3).map_err(|e| e.to_string())?;
            let ci = build_trotter_ising(
                &IsingParams::new(n, -1.05, 0.5).map_err(|e| e.to_string())?,
                &spec,
            )
            .map_err(|e| e.to_string())?;
            if ci.cnot_count() != 3 * 2 * (n - 1) {
                return Err(format!("ising N={n}: {} CNOTs", ci.cnot_count()));
            }
            let cy = build_trotter_ym(&YmParams::new(n, 2.0).map_err(|e| e.to_string())?, &spec)
                .map_err(|e| e.to_string())?;
            if cy.cnot_count() != 3 * (10 * n - 14) {
                return Err(format!("ym N={n}: {} CNOTs", cy.cnot_count()));
            }
        }
        Ok(())
    })());

    check("gauge_closed_form_equivalence", (|| {
        for n in 1..=4usize {
            let basis = enumerate_physical_basis(n, HalfInt::from_twice(1))
                .map_err(|e| e.to_string())?;
            let mut dense = electric_matrix(&basis).to_dense();
            dense += magnetic_matrix(&basis, 2.0).to_dense();
            let spin = ym_ising_closed_form(n, 2.0).map_err(|e| e.to_string())?.dense();
            let mut max_err = 0.0f64;
            for (a, st_a) in basis.iter().enumerate() {
                let bits_a = dual_spin_map(st_a).map_err(|e| e.to_string())?;
                let ia = bits_a.iter().fold(0usize, |acc, &b| (acc << 1) | b as usize);
                for (b, st_b) in basis.iter().enumerate() {
                    let bits_b = dual_spin_map(st_b).map_err(|e| e.to_string())?;
                    let ib = bits_b.iter().fold(0usize, |acc, &b| (acc << 1) | b as usize);
                    max_err = max_err.max((dense[(a, b)] - spin[(ia, ib)].re).abs());
                }
            }
            if max_err > 1e-12 {
                return Err(format!("N={n}: max error {max_err}"));
            }
        }
        Ok(())
    })());

    check("channel_matches_ideal_at_p0", (|| {
        let layout = make_layout(3, 1, 1, Placement::IsingDefault).map_err(|e| e.to_string())?;
        let u = Evolution::Dense(sample_haar_unitary(3, RngStream::new(7, 0)));
        let ideal = run_hp_ideal(&layout, &u).map_err(|e| e.to_string())?;
        let noise = NoiseSpec::new(0.0, NoiseScope::WholeUnitary, 0, RngStream::new(0, 0))
            .map_err(|e| e.to_string())?;
        let chan = run_hp_channel_exact(&layout, &u, &noise).map_err(|e| e.to_string())?;
        if (chan.p_epr - ideal.p_epr).abs() < 1e-10 && (chan.f_epr - ideal.f_epr).abs() < 1e-10 {
            Ok(())
        } else {
            Err(format!(
                "channel ({}, {}) vs ideal ({}, {})",
                chan.p_epr, chan.f_epr, ideal.p_epr, ideal.f_epr
            ))
        }
    })());

    if let Some(path) = &args.config {
        check("config_file", (|| {
            let text =
                std::fs::read_to_string(path).map_err(|e| format!("cannot read file: {e}"))?;
            ExperimentConfig::from_json(&text)
                .map(|_| ())
                .map_err(|e| e.to_string())
        })());
    }

    if failures > 0 {
        return Err(format!("{failures} check(s) failed").into());
    }
    println!("all checks passed");
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.cmd {
        Cmd::HpIdeal(a) => cmd_run(a, Some(RunKind::Ideal)),
        Cmd::HpNoisy(a) => cmd_run(a, Some(RunKind::Noisy)),
        Cmd::HpChannel(a) => cmd_run(a, Some(RunKind::Channel)),
        Cmd::TeleportState(a) => cmd_run(a, None),
        Cmd::OtocMc(a) => cmd_otoc(a),
        Cmd::YmBuild(a) => cmd_ym_build(a),
        Cmd::Sweep(a) => cmd_sweep(a),
        Cmd::Validate(a) => cmd_validate(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
