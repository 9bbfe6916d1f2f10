use rand::seq::SliceRandom;
use rand::Rng;

use crate::Graph;

/// An automorphism of one of the supported graph families: a dihedral
/// element for cycles and circulants, a signed coordinate permutation for
/// hypercubes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphAutomorphism {
    Dihedral { n: usize, shift: usize, flip: bool },
    Signed { perm: Vec<usize>, mask: usize },
}

impl GraphAutomorphism {
    pub fn apply(&self, v: usize) -> usize {
        match self {
            GraphAutomorphism::Dihedral { n, shift, flip } => {
                let v = if *flip { (*n - v) % *n } else { v };
                (v + *shift) % *n
            }
            GraphAutomorphism::Signed { perm, mask } => {
                let mut out = 0usize;
                for (j, &src) in perm.iter().enumerate() {
                    out |= ((v >> src) & 1) << j;
                }
                out ^ mask
            }
        }
    }

    pub fn is_identity(&self, graph: &Graph) -> bool {
        (0..graph.num_vertices()).all(|v| self.apply(v) == v)
    }
}

/// Uniform draw from the automorphism group: the 2n dihedral elements for
/// cycle and circulant, the 2^dim * dim! signed permutations for the cube.
pub fn sample_automorphism(graph: &Graph, rng: &mut impl Rng) -> GraphAutomorphism {
    match graph {
        Graph::Cycle { n } | Graph::Circulant { n, .. } => GraphAutomorphism::Dihedral {
            n: *n,
            shift: rng.gen_range(0..*n),
            flip: rng.gen(),
        },
        Graph::Hypercube { dim } => {
            let mut perm: Vec<usize> = (0..*dim as usize).collect();
            perm.shuffle(rng);
            GraphAutomorphism::Signed {
                perm,
                mask: rng.gen_range(0..(1usize << dim)),
            }
        }
    }
}
