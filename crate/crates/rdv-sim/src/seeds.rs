//! Per-trial randomness streams. Every rng is derived from
//! (master seed, index, stream tag) by hashing, so results never depend
//! on scheduling order or worker count.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

/// Independent randomness streams inside one trial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stream {
    Player1,
    Player2,
    Adversary,
    /// Shared randomness both players see (common column shuffles).
    Common,
    /// Per-point seeds for parameter sweeps.
    Point,
}

impl Stream {
    fn tag(self) -> &'static [u8] {
        match self {
            Stream::Player1 => b"player1",
            Stream::Player2 => b"player2",
            Stream::Adversary => b"adversary",
            Stream::Common => b"common",
            Stream::Point => b"point",
        }
    }
}

fn digest(master: u64, index: u64, stream: Stream) -> [u8; 32] {
    let mut h = Sha256::new();
    h.update(master.to_le_bytes());
    h.update(index.to_le_bytes());
    h.update(stream.tag());
    h.finalize().into()
}

/// A fresh rng for one (trial, stream) pair.
pub fn stream_rng(master: u64, index: u64, stream: Stream) -> ChaCha8Rng {
    ChaCha8Rng::from_seed(digest(master, index, stream))
}

/// A derived 64-bit key for one (index, stream) pair.
pub fn stream_key(master: u64, index: u64, stream: Stream) -> u64 {
    let d = digest(master, index, stream);
    u64::from_le_bytes(d[..8].try_into().expect("8 bytes"))
}
