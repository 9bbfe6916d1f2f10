use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_chacha::rand_core::SeedableRng;
use rdv_core::WalkSchedule;
use rdv_codes::{build_base_b_code, build_binary_code, build_padded_code};

use crate::{Role, Strategy, StrategyError};

/// A strategy compiled against a fixed vertex count, ready to draw
/// schedules. Schedules are produced block by block so simulations can
/// extend a walk lazily instead of materializing a long horizon up front.
#[derive(Debug, Clone)]
pub struct Sampler {
    n: usize,
    kind: Kind,
}

#[derive(Debug, Clone)]
enum Kind {
    Aw { theta: f64, rounds: usize },
    Code {
        rows: Vec<WalkSchedule>,
        t_len: usize,
        shuffle_seed: Option<u64>,
    },
    Uniform,
    Finite {
        schedules: Vec<WalkSchedule>,
        cumulative: Vec<f64>,
        t_len: usize,
    },
    Waiter,
    Wanderer,
}

impl Sampler {
    pub fn new(strategy: &Strategy, n: usize) -> Result<Self, StrategyError> {
        if let Some(expected) = strategy.implied_n() {
            if expected != n {
                return Err(StrategyError::MismatchedN { expected, got: n });
            }
        }
        if n == 0 {
            return Err(StrategyError::MismatchedN { expected: 1, got: 0 });
        }
        let kind = match strategy {
            Strategy::AndersonWeber { theta, rounds } => {
                if !(0.0..=1.0).contains(theta) {
                    return Err(StrategyError::BadTheta(*theta));
                }
                Kind::Aw {
                    theta: *theta,
                    rounds: *rounds,
                }
            }
            Strategy::Binary { d } => code_kind(build_binary_code(*d)?, None),
            Strategy::Padded { n } => code_kind(build_padded_code(*n)?, None),
            Strategy::BaseB {
                a,
                b,
                k,
                shuffle_seed,
            } => code_kind(build_base_b_code(*a, *b, *k, None)?, *shuffle_seed),
            Strategy::Uniform => Kind::Uniform,
            Strategy::FiniteSupport {
                schedules,
                probabilities,
            } => {
                if schedules.is_empty() || schedules.len() != probabilities.len() {
                    return Err(StrategyError::BadSupport(
                        "schedule and probability counts differ".into(),
                    ));
                }
                let t_len = schedules[0].len();
                if schedules.iter().any(|s| s.n() != n || s.len() != t_len) {
                    return Err(StrategyError::BadSupport(
                        "schedules must share one n and one length".into(),
                    ));
                }
                if probabilities.iter().any(|&p| !(0.0..=1.0).contains(&p)) {
                    return Err(StrategyError::BadSupport("probability outside [0, 1]".into()));
                }
                let mut cumulative = Vec::with_capacity(probabilities.len());
                let mut acc = 0.0;
                for p in probabilities {
                    acc += p;
                    cumulative.push(acc);
                }
                if (acc - 1.0).abs() > 1e-9 {
                    return Err(StrategyError::BadSupport(format!(
                        "probabilities sum to {acc}"
                    )));
                }
                Kind::Finite {
                    schedules: schedules.clone(),
                    cumulative,
                    t_len,
                }
            }
            Strategy::WaitForMommy { role } => match role {
                Role::Waiter => Kind::Waiter,
                Role::Wanderer => Kind::Wanderer,
            },
        };
        Ok(Sampler { n, kind })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Natural block length; the sampler's randomness is i.i.d. across
    /// blocks of this many steps.
    pub fn block_len(&self) -> usize {
        match &self.kind {
            Kind::Code { t_len, .. } => *t_len,
            Kind::Finite { t_len, .. } => *t_len,
            _ => self.n,
        }
    }

    /// One block of raw labels. `trial_key` selects the shared-randomness
    /// stream (common column shuffles); two players in the same trial must
    /// pass the same key.
    pub fn sample_block(&self, block: usize, trial_key: u64, rng: &mut impl Rng) -> Vec<u32> {
        let n = self.n;
        match &self.kind {
            Kind::Aw { theta, rounds } => {
                if *rounds > 0 && block >= *rounds {
                    return vec![0; n];
                }
                if rng.gen::<f64>() < *theta {
                    vec![0; n]
                } else {
                    random_ordering(n, rng)
                }
            }
            Kind::Code {
                rows,
                t_len,
                shuffle_seed,
            } => {
                let row = &rows[rng.gen_range(0..rows.len())];
                match shuffle_seed {
                    None => row.steps().to_vec(),
                    Some(seed) => {
                        let order = common_column_order(*t_len, *seed, trial_key, block);
                        order.iter().map(|&t| row.step(t)).collect()
                    }
                }
            }
            Kind::Uniform => (0..n).map(|_| rng.gen_range(1..=n) as u32).collect(),
            Kind::Finite {
                schedules,
                cumulative,
                ..
            } => {
                let r = rng.gen::<f64>();
                let idx = cumulative
                    .iter()
                    .position(|&c| r < c)
                    .unwrap_or(schedules.len() - 1);
                schedules[idx].steps().to_vec()
            }
            Kind::Waiter => vec![0; n],
            Kind::Wanderer => random_ordering(n, rng),
        }
    }

    /// A full schedule of exactly `horizon` steps.
    pub fn sample_with_key(
        &self,
        horizon: usize,
        trial_key: u64,
        rng: &mut impl Rng,
    ) -> WalkSchedule {
        let mut steps = Vec::with_capacity(horizon);
        let mut block = 0;
        while steps.len() < horizon {
            steps.extend(self.sample_block(block, trial_key, rng));
            block += 1;
        }
        steps.truncate(horizon);
        WalkSchedule::new(self.n, steps).expect("sampler emits in-range labels")
    }

    pub fn sample(&self, horizon: usize, rng: &mut impl Rng) -> WalkSchedule {
        self.sample_with_key(horizon, 0, rng)
    }
}

fn code_kind(code: rdv_codes::RendezvousCode, shuffle_seed: Option<u64>) -> Kind {
    Kind::Code {
        t_len: code.t_len(),
        rows: code.rows().to_vec(),
        shuffle_seed,
    }
}

/// Uniformly random ordering of 1..=n.
fn random_ordering(n: usize, rng: &mut impl Rng) -> Vec<u32> {
    let mut labels: Vec<u32> = (1..=n as u32).collect();
    labels.shuffle(rng);
    labels
}

/// Column permutation shared by every player holding the same
/// (shuffle seed, trial key, block) triple.
fn common_column_order(t_len: usize, shuffle_seed: u64, trial_key: u64, block: usize) -> Vec<usize> {
    let mut z = shuffle_seed
        .wrapping_add(trial_key.wrapping_mul(0x9E3779B97F4A7C15))
        .wrapping_add((block as u64).wrapping_mul(0xBF58476D1CE4E5B9));
    // splitmix64 finalizer decorrelates nearby keys.
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^= z >> 31;
    let mut rng = ChaCha8Rng::seed_from_u64(z);
    let mut order: Vec<usize> = (0..t_len).collect();
    order.shuffle(&mut rng);
    order
}

/// Draws one schedule of `horizon` steps from the strategy on n vertices.
pub fn sample_schedule(
    strategy: &Strategy,
    n: usize,
    horizon: usize,
    rng: &mut impl Rng,
) -> Result<WalkSchedule, StrategyError> {
    if horizon == 0 {
        return Err(StrategyError::BadHorizon {
            t: 0,
            max: usize::MAX,
        });
    }
    Ok(Sampler::new(strategy, n)?.sample(horizon, rng))
}
