//! Grid execution and record assembly shared by the subcommands.

use hpsim::circuits::{
    build_trotter_ising, build_trotter_ym, Circuit, IsingParams, TrotterSpec, YmParams,
};
use hpsim::engine::{sample_haar_state, sample_haar_unitary, RngStream};
use hpsim::protocol::{
    averaged_otoc_mc, run_hp_channel_exact, run_hp_ideal, run_hp_trajectories,
    run_state_teleportation, Evolution, HpRecord, HpResult, Model, NoiseSpec, ProtocolLayout,
};

use crate::config::ExperimentConfig;

/// Stream-index bases keeping RNG consumers disjoint: trajectory streams of
/// grid point i occupy `i << 32 .. (i << 32) + n_traj` (plus the bootstrap
/// offset), Haar unitaries and input states live in their own blocks.
const GRID_STREAM_STRIDE: u64 = 1 << 32;
const HAAR_UNITARY_BASE: u64 = 1 << 48;
const INPUT_STATE_BASE: u64 = 1 << 49;

pub type AnyError = Box<dyn std::error::Error>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RunKind {
    Ideal,
    Noisy,
    Channel,
}

/// Build the evolution for grid point `(idx, t)`.
pub fn evolution_for(
    cfg: &ExperimentConfig,
    idx: usize,
    t: f64,
) -> Result<(Evolution, usize), AnyError> {
    if cfg.model == Model::Haar {
        let u = sample_haar_unitary(
            cfg.n,
            RngStream::new(cfg.seed, HAAR_UNITARY_BASE + idx as u64),
        );
        return Ok((Evolution::Dense(u), 0));
    }
    let Some(m_steps) = cfg.steps_for(t) else {
        return Ok((Evolution::Circuit(Circuit::new(cfg.n, "identity")), 0));
    };
    let spec = TrotterSpec::new(t, m_steps)?;
    let circuit = match cfg.model {
        Model::Ising => {
            let (h, m) = cfg.ising_fields();
            build_trotter_ising(&IsingParams::new(cfg.n, h, m)?, &spec)?
        }
        Model::Ym => {
            let k = cfg.k.ok_or("config field `k`: required for model ym")?;
            build_trotter_ym(&YmParams::new(cfg.n, k)?, &spec)?
        }
        Model::Haar => unreachable!(),
    };
    Ok((Evolution::Circuit(circuit), m_steps))
}

fn record(cfg: &ExperimentConfig, layout: &ProtocolLayout, res: HpResult, m_steps: usize, noisy: bool) -> HpRecord {
    let (k, h, m) = match cfg.model {
        Model::Ising => {
            let (h, m) = cfg.ising_fields();
            (None, Some(h), Some(m))
        }
        Model::Ym => (cfg.k, None, None),
        Model::Haar => (None, None, None),
    };
    HpRecord::from_result(&res).build(
        cfg.model,
        cfg.n,
        cfg.n_a,
        cfg.n_d,
        layout.placement_label().to_string(),
        cfg.dt(),
        m_steps,
        k,
        h,
        m,
        if noisy { cfg.p } else { 0.0 },
        if noisy { Some(cfg.scope) } else { None },
        cfg.seed,
    )
}

/// Run the full time grid with the requested run kind.
pub fn run_grid(cfg: &ExperimentConfig, kind: RunKind) -> Result<Vec<HpRecord>, AnyError> {
    let layout = cfg.layout()?;
    let mut out = Vec::with_capacity(cfg.t_grid.len());
    for (i, &t) in cfg.t_grid.iter().enumerate() {
        let (ev, m_steps) = evolution_for(cfg, i, t)?;
        let res = match kind {
            RunKind::Ideal => run_hp_ideal(&layout, &ev)?,
            RunKind::Noisy => {
                let noise = NoiseSpec::new(
                    cfg.p,
                    cfg.scope,
                    cfg.n_traj,
                    RngStream::new(cfg.seed, (i as u64) * GRID_STREAM_STRIDE),
                )?;
                run_hp_trajectories(&layout, ev.as_trajectory_circuit()?, &noise)?
            }
            RunKind::Channel => {
                let noise = NoiseSpec::new(cfg.p, cfg.scope, 0, RngStream::new(cfg.seed, 0))?;
                run_hp_channel_exact(&layout, &ev, &noise)?
            }
        };
        out.push(record(cfg, &layout, res.with_time(t), m_steps, kind != RunKind::Ideal));
    }
    Ok(out)
}

/// Teleport `n_traj` Haar-random input states per grid point; the row carries
/// the sample means of p and f with their standard errors.
pub fn run_teleport_grid(cfg: &ExperimentConfig) -> Result<Vec<HpRecord>, AnyError> {
    let layout = cfg.layout()?;
    let n_psi = cfg.n_traj.max(1);
    let mut out = Vec::with_capacity(cfg.t_grid.len());
    for (i, &t) in cfg.t_grid.iter().enumerate() {
        let (ev, m_steps) = evolution_for(cfg, i, t)?;
        let mut ps = Vec::with_capacity(n_psi);
        let mut fs = Vec::with_capacity(n_psi);
        for j in 0..n_psi {
            let psi = sample_haar_state(
                cfg.n_a,
                RngStream::new(
                    cfg.seed,
                    INPUT_STATE_BASE + (i as u64) * GRID_STREAM_STRIDE + j as u64,
                ),
            );
            let (p, f) = run_state_teleportation(&layout, &ev, &psi)?;
            ps.push(p);
            fs.push(f);
        }
        let stats = |xs: &[f64]| {
            let mean = xs.iter().sum::<f64>() / xs.len() as f64;
            let var = xs.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>()
                / (xs.len().max(2) - 1) as f64;
            (mean, (var / xs.len() as f64).sqrt())
        };
        let (p_mean, p_err) = stats(&ps);
        let (f_mean, f_err) = stats(&fs);
        let res = HpResult {
            t,
            p_epr: p_mean,
            f_epr: f_mean,
            p_err,
            f_err,
            n_traj: n_psi,
            diagnostics: None,
        };
        out.push(record(cfg, &layout, res, m_steps, false));
    }
    Ok(out)
}

/// Averaged-OTOC rows: `(t, m_steps, estimate, stderr)` per grid point.
pub fn run_otoc_grid(
    cfg: &ExperimentConfig,
    n_samples: usize,
) -> Result<Vec<(f64, usize, f64, f64)>, AnyError> {
    let layout = cfg.layout()?;
    let mut out = Vec::with_capacity(cfg.t_grid.len());
    for (i, &t) in cfg.t_grid.iter().enumerate() {
        let (ev, m_steps) = evolution_for(cfg, i, t)?;
        let (est, err) = averaged_otoc_mc(
            &layout,
            &ev,
            n_samples,
            RngStream::new(cfg.seed, (i as u64) * GRID_STREAM_STRIDE),
        )?;
        out.push((t, m_steps, est, err));
    }
    Ok(out)
}

trait EvolutionExt {
    fn as_trajectory_circuit(&self) -> Result<&Circuit, AnyError>;
}

impl EvolutionExt for Evolution {
    fn as_trajectory_circuit(&self) -> Result<&Circuit, AnyError> {
        match self {
            Evolution::Circuit(c) => Ok(c),
            Evolution::Dense(_) => {
                Err("trajectory noise needs a gate-level circuit; model haar has none".into())
            }
        }
    }
}
