use rayon::prelude::*;
use rdv_core::stats::{mean_estimate, proportion_estimate};
use rdv_core::{sample_uniform_permutation, Estimate};
use rdv_graphs::{graph_rendezvous_time, sample_automorphism, GraphSampler};
use rdv_strategies::{Sampler, Strategy};
use serde::{Deserialize, Serialize};

use crate::seeds::{stream_key, stream_rng, Stream};
use crate::{config_err, Setting, SimConfig, SimError};

/// Expected-time runs are censored at this multiple of n steps.
pub const EXPECTED_TIME_CAP_FACTOR: usize = 20;

/// An expected-meeting-time estimate with explicit censoring accounting.
/// `estimate` averages the uncensored trials only.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExpectedTime {
    pub estimate: Estimate,
    /// Trials that did not meet within `cap` steps.
    pub censored: u64,
    pub cap: usize,
    /// Set when more than 10% of trials were censored.
    pub unreliable: bool,
}

enum Engine {
    Complete { sx: Sampler, sy: Sampler },
    Graph { sampler: GraphSampler, edge_meeting: bool },
}

fn build_engine(cfg: &SimConfig, horizon: usize) -> Result<Engine, SimError> {
    cfg.validate()?;
    match &cfg.setting {
        Setting::Complete {
            strategy,
            strategy2,
        } => {
            let sx = Sampler::new(strategy, cfg.n)?;
            let sy = Sampler::new(strategy2.as_ref().unwrap_or(strategy), cfg.n)?;
            Ok(Engine::Complete { sx, sy })
        }
        Setting::Graph {
            graph,
            strategy,
            edge_meeting,
        } => Ok(Engine::Graph {
            sampler: GraphSampler::new(graph, strategy, horizon)?,
            edge_meeting: *edge_meeting,
        }),
    }
}

impl Engine {
    /// Plays trial `trial` out to `horizon` steps and returns the meeting
    /// time if one occurred.
    fn play(&self, n: usize, seed: u64, trial: u64, horizon: usize) -> Option<usize> {
        let mut r1 = stream_rng(seed, trial, Stream::Player1);
        let mut r2 = stream_rng(seed, trial, Stream::Player2);
        let mut ra = stream_rng(seed, trial, Stream::Adversary);
        match self {
            Engine::Complete { sx, sy } => {
                let key = stream_key(seed, trial, Stream::Common);
                let pi = sample_uniform_permutation(n, &mut ra);
                let mut x: Vec<u32> = Vec::new();
                let mut y: Vec<u32> = Vec::new();
                let (mut bx, mut by) = (0usize, 0usize);
                let mut scanned = 0usize;
                // Schedules grow lazily block by block; only the steps up
                // to the first meeting are ever materialized.
                while scanned < horizon {
                    while x.len() <= scanned {
                        x.extend(sx.sample_block(bx, key, &mut r1));
                        bx += 1;
                    }
                    while y.len() <= scanned {
                        y.extend(sy.sample_block(by, key, &mut r2));
                        by += 1;
                    }
                    let limit = x.len().min(y.len()).min(horizon);
                    for t in scanned..limit {
                        let xv = if x[t] == 0 { n } else { x[t] as usize };
                        let yv = if y[t] == 0 { n } else { y[t] as usize };
                        if xv == pi.apply(yv) {
                            return Some(t + 1);
                        }
                    }
                    scanned = limit;
                }
                None
            }
            Engine::Graph {
                sampler,
                edge_meeting,
            } => {
                let wx = sampler.sample(&mut r1);
                let wy = sampler.sample(&mut r2);
                let phi = sample_automorphism(sampler.graph(), &mut ra);
                let rec = graph_rendezvous_time(&wx, &wy, &phi, *edge_meeting)
                    .expect("sampled walks share the graph");
                // Walk positions are 0-based; tau - 1 is the move count.
                rec.tau().map(|tau| tau - 1).filter(|&m| m <= horizon)
            }
        }
    }
}

/// Fraction of trials that fail to meet within cfg.t steps, with a 95%
/// Wilson interval. Deterministic given the config, independent of the
/// worker count.
pub fn estimate_failure(cfg: &SimConfig) -> Result<Estimate, SimError> {
    let engine = build_engine(cfg, cfg.t)?;
    let failures: u64 = (0..cfg.trials)
        .into_par_iter()
        .map(|trial| u64::from(engine.play(cfg.n, cfg.seed, trial, cfg.t).is_none()))
        .sum();
    Ok(proportion_estimate(failures, cfg.trials, cfg.seed))
}

/// Mean meeting time over trials that met within 20n steps, with a
/// normal 95% interval; censored trials are counted, never averaged in.
pub fn estimate_expected_time(cfg: &SimConfig) -> Result<ExpectedTime, SimError> {
    let cap = EXPECTED_TIME_CAP_FACTOR * cfg.n;
    let engine = build_engine(cfg, cap)?;
    // Integer accumulators keep the parallel reduction exact.
    let (sum, sum_sq, censored) = (0..cfg.trials)
        .into_par_iter()
        .map(|trial| match engine.play(cfg.n, cfg.seed, trial, cap) {
            Some(tau) => (tau as u128, (tau as u128) * (tau as u128), 0u64),
            None => (0, 0, 1),
        })
        .reduce(
            || (0u128, 0u128, 0u64),
            |a, b| (a.0 + b.0, a.1 + b.1, a.2 + b.2),
        );
    let met = cfg.trials - censored;
    if met == 0 {
        return Err(config_err(format!(
            "all {} trials were censored at {} steps",
            cfg.trials, cap
        )));
    }
    Ok(ExpectedTime {
        estimate: mean_estimate(sum as f64, sum_sq as f64, met, cfg.seed),
        censored,
        cap,
        unreliable: censored as f64 > 0.10 * cfg.trials as f64,
    })
}

/// The swept parameter: either the horizon T or the Anderson-Weber wait
/// probability.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum SweepAxis {
    Horizon(Vec<usize>),
    Theta(Vec<f64>),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepPoint {
    pub param: f64,
    pub estimate: Estimate,
}

/// Failure estimates across a parameter grid. Each point runs under its
/// own derived seed.
pub fn sweep(template: &SimConfig, axis: &SweepAxis) -> Result<Vec<SweepPoint>, SimError> {
    let points: Vec<(f64, SimConfig)> = match axis {
        SweepAxis::Horizon(ts) => {
            if ts.is_empty() {
                return Err(config_err("empty horizon grid"));
            }
            ts.iter()
                .map(|&t| {
                    let mut cfg = template.clone();
                    cfg.t = t;
                    (t as f64, cfg)
                })
                .collect()
        }
        SweepAxis::Theta(thetas) => {
            if thetas.is_empty() {
                return Err(config_err("empty theta grid"));
            }
            thetas
                .iter()
                .map(|&theta| {
                    let mut cfg = template.clone();
                    match &mut cfg.setting {
                        Setting::Complete {
                            strategy: Strategy::AndersonWeber { theta: th, .. },
                            ..
                        } => *th = theta,
                        _ => return Err(config_err("theta sweep needs an aw strategy")),
                    }
                    Ok((theta, cfg))
                })
                .collect::<Result<_, _>>()?
        }
    };
    points
        .into_iter()
        .enumerate()
        .map(|(i, (param, mut cfg))| {
            cfg.seed = stream_key(template.seed, i as u64, Stream::Point);
            Ok(SweepPoint {
                param,
                estimate: estimate_failure(&cfg)?,
            })
        })
        .collect()
}
