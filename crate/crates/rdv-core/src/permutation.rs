use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::CoreError;

/// A bijection on `{1, ..., n}`, stored as 1-based images.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, CoreError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(CoreError::NotAPermutation { len: n });
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based vertex `v`.
    pub fn apply(&self, v: usize) -> usize {
        self.images[v - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { images: inv }
    }

    pub fn fixed_points(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &v)| v == i + 1)
            .count()
    }

    pub fn is_derangement(&self) -> bool {
        self.fixed_points() == 0
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = CoreError;
    fn try_from(images: Vec<usize>) -> Result<Self, CoreError> {
        Permutation::new(images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.images
    }
}

/// Uniform sample via Fisher-Yates; deterministic given the rng state.
pub fn sample_uniform_permutation<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Permutation {
    let mut images: Vec<usize> = (1..=n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        images.swap(i, j);
    }
    Permutation { images }
}

impl Permutation {
    pub fn sample_uniform<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Permutation {
        sample_uniform_permutation(n, rng)
    }
}
