use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rdv_core::WalkSchedule;

use crate::{CodeError, CodeMeta, RendezvousCode};

/// Binary construction: `n = 2^d`, `T = 4n`, size `d+2`.
///
/// Column `t` of the underlying matrix is the `(d+2)`-bit binary
/// representation of `t`, most significant bit first. Zero bits become
/// waiting steps; the 1-columns of row `i` come in complementary pairs
/// sharing the rare label `min(w, 2^{d+1}-1-w) + 1`, where `w` is the
/// integer read from the column with row `i` deleted.
pub fn build_binary_code(d: u32) -> Result<RendezvousCode, CodeError> {
    if d < 1 {
        return Err(CodeError::BadBinaryParam(d));
    }
    let s = (d + 2) as usize;
    let n = 1usize << d;
    let t_len = 1usize << (d + 2);
    let half = 1u32 << (d + 1); // 2^{d+1}
    let mut rows = Vec::with_capacity(s);
    for i in 0..s {
        let mut steps = Vec::with_capacity(t_len);
        for t in 0..t_len {
            let bit = (t >> (s - 1 - i)) & 1;
            if bit == 0 {
                steps.push(0);
            } else {
                let mut w: u32 = 0;
                for j in 0..s {
                    if j != i {
                        w = (w << 1) | ((t >> (s - 1 - j)) & 1) as u32;
                    }
                }
                let comp = half - 1 - w;
                steps.push(w.min(comp) + 1);
            }
        }
        rows.push(WalkSchedule::new(n, steps)?);
    }
    RendezvousCode::from_rows(n, rows, CodeMeta::Binary { d })
}

/// Padded construction with explicit parameters: repeat each binary row
/// `k` times with per-copy label offsets of `2^d`, then replace entries
/// greater than `n` with 0. Requires `k * 2^d >= n`.
pub fn build_padded_code_with(n: usize, d: u32, k: u32) -> Result<RendezvousCode, CodeError> {
    let block = 1usize << d;
    if n < 4 || k == 0 || (k as usize) * block < n {
        return Err(CodeError::BadPaddedParam(n));
    }
    let base = build_binary_code(d)?;
    let mut rows = Vec::with_capacity(base.size());
    for row in base.rows() {
        let mut steps = Vec::with_capacity(row.len() * k as usize);
        for copy in 0..k as usize {
            let offset = (copy * block) as u32;
            for &e in row.steps() {
                let label = if e == 0 { 0 } else { e + offset };
                steps.push(if label as usize > n { 0 } else { label });
            }
        }
        rows.push(WalkSchedule::new(n, steps)?);
    }
    RendezvousCode::from_rows(n, rows, CodeMeta::Padded { n, d, k })
}

/// Padded construction for arbitrary `n >= 4`, choosing
/// `d = ceil(log2(n) / 2)` and `k = ceil(n / 2^d)`, so length `4k·2^d >= 4n`.
pub fn build_padded_code(n: usize) -> Result<RendezvousCode, CodeError> {
    if n < 4 {
        return Err(CodeError::BadPaddedParam(n));
    }
    let log2n = (usize::BITS - (n - 1).leading_zeros()) as u32; // ceil(log2 n)
    let d = log2n.div_ceil(2).max(1);
    let k = n.div_ceil(1usize << d) as u32;
    build_padded_code_with(n, d, k)
}

/// Base-B construction: `n = (B-A) B^{k-1}`, `T = B^{k+1}`, size `k+1`.
///
/// Columns are base-B digit strings of `t`. A digit in `1..=B-A` wanders
/// within its block of `B^{k-1}` labels; the remaining `A` digit values
/// wait at 0. Column classes are orbits under adding a constant to every
/// remaining digit mod B; the class representative with leading remaining
/// digit 0 fixes the rare label.
///
/// `shuffle_seed` applies a common random permutation of the T columns.
pub fn build_base_b_code(
    a: u32,
    b: u32,
    k: u32,
    shuffle_seed: Option<u64>,
) -> Result<RendezvousCode, CodeError> {
    if a == 0 || a >= b || k < 2 {
        return Err(CodeError::BadBaseBParam { a, b, k });
    }
    let s = (k + 1) as usize;
    let base = b as usize;
    let block = base.pow(k - 1); // B^{k-1}
    let n = (b - a) as usize * block;
    let t_len = base.pow(k + 1);

    // digits[t] = base-B digits of t, most significant first, length s.
    let digit_of = |t: usize, pos: usize| -> usize {
        (t / base.pow((s - 1 - pos) as u32)) % base
    };

    let mut rows = Vec::with_capacity(s);
    for i in 0..s {
        let mut steps = Vec::with_capacity(t_len);
        for t in 0..t_len {
            let m = digit_of(t, i);
            if m == 0 || m > (b - a) as usize {
                steps.push(0);
                continue;
            }
            // Remaining k digits with row i deleted, most significant first.
            let mut digits = Vec::with_capacity(s - 1);
            for j in 0..s {
                if j != i {
                    digits.push(digit_of(t, j));
                }
            }
            // Shift all digits by z so the leading one becomes 0.
            let z = (base - digits[0]) % base;
            let mut w = 0usize;
            for &dgt in &digits {
                w = w * base + (dgt + z) % base;
            }
            debug_assert!(w < block);
            let label = (m - 1) * block + w + 1;
            steps.push(label as u32);
        }
        rows.push(WalkSchedule::new(n, steps)?);
    }

    if let Some(seed) = shuffle_seed {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut order: Vec<usize> = (0..t_len).collect();
        order.shuffle(&mut rng);
        rows = rows
            .into_iter()
            .map(|row| {
                let steps: Vec<u32> = order.iter().map(|&t| row.step(t)).collect();
                WalkSchedule::new(n, steps)
            })
            .collect::<Result<Vec<_>, _>>()?;
    }

    RendezvousCode::from_rows(
        n,
        rows,
        CodeMeta::BaseB {
            a,
            b,
            k,
            shuffle_seed,
        },
    )
}

/// Product code `{r1 r2 : r1 in R1, r2 in R2}`; |R1|·|R2| rows of length
/// `T1 + T2`.
pub fn concatenate_codes(
    r1: &RendezvousCode,
    r2: &RendezvousCode,
) -> Result<RendezvousCode, CodeError> {
    if r1.n() != r2.n() {
        return Err(CodeError::MismatchedN(r1.n(), r2.n()));
    }
    let n = r1.n();
    let mut rows = Vec::with_capacity(r1.size() * r2.size());
    for x in r1.rows() {
        for y in r2.rows() {
            let mut steps = Vec::with_capacity(x.len() + y.len());
            steps.extend_from_slice(x.steps());
            steps.extend_from_slice(y.steps());
            rows.push(WalkSchedule::new(n, steps)?);
        }
    }
    RendezvousCode::from_rows(n, rows, CodeMeta::Concat)
}

#[cfg(test)]
mod tests {
    use super::*;

    // The 4x16 matrix printed for d=2.
    const M_PRIME_D2: [[u32; 16]; 4] = [
        [0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 3, 4, 4, 3, 2, 1],
        [0, 0, 0, 0, 1, 2, 3, 4, 0, 0, 0, 0, 4, 3, 2, 1],
        [0, 0, 1, 2, 0, 0, 3, 4, 0, 0, 4, 3, 0, 0, 2, 1],
        [0, 1, 0, 2, 0, 3, 0, 4, 0, 4, 0, 3, 0, 2, 0, 1],
    ];

    #[test]
    fn binary_d2_matches_printed_matrix() {
        let code = build_binary_code(2).unwrap();
        assert_eq!(code.size(), 4);
        assert_eq!(code.t_len(), 16);
        assert_eq!(code.n(), 4);
        for (i, row) in code.rows().iter().enumerate() {
            assert_eq!(row.steps(), &M_PRIME_D2[i], "row {i}");
        }
    }

    #[test]
    fn binary_rows_have_2n_zeros_and_each_label_twice() {
        for d in 1..=6u32 {
            let code = build_binary_code(d).unwrap();
            let n = code.n();
            for row in code.rows() {
                let zeros = row.steps().iter().filter(|&&s| s == 0).count();
                assert_eq!(zeros, 2 * n);
                for label in 1..=n as u32 {
                    let count = row.steps().iter().filter(|&&s| s == label).count();
                    assert_eq!(count, 2, "d={d} label={label}");
                }
            }
        }
    }

    // Rare labels occur at complementary column pairs: the columns agree
    // with bitwise complement on all rows other than the one in question.
    #[test]
    fn binary_labels_sit_at_complementary_columns() {
        for d in 1..=5u32 {
            let code = build_binary_code(d).unwrap();
            let s = code.size();
            for (i, row) in code.rows().iter().enumerate() {
                for label in 1..=code.n() as u32 {
                    let cols: Vec<usize> = (0..code.t_len())
                        .filter(|&t| row.step(t) == label)
                        .collect();
                    assert_eq!(cols.len(), 2);
                    let (t, tp) = (cols[0], cols[1]);
                    for j in 0..s {
                        let bj = (t >> (s - 1 - j)) & 1;
                        let bjp = (tp >> (s - 1 - j)) & 1;
                        if j == i {
                            assert_eq!(bj, 1);
                            assert_eq!(bjp, 1);
                        } else {
                            assert_eq!(bj, 1 - bjp);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn padded_with_k1_degenerates_to_binary() {
        for d in 2..=5u32 {
            let n = 1usize << d;
            let padded = build_padded_code_with(n, d, 1).unwrap();
            let binary = build_binary_code(d).unwrap();
            assert_eq!(padded.rows(), binary.rows());
        }
    }

    #[test]
    fn padded_parameter_rule() {
        // n=100: d=4, k=7, so T = 4*7*16 = 448 <= 512, size 6 >= 5.
        let code = build_padded_code(100).unwrap();
        assert!(code.t_len() <= 512, "T = {}", code.t_len());
        assert!(code.size() >= 5);
        // Each label 1..=n appears exactly twice per row.
        for row in code.rows() {
            for label in 1..=100u32 {
                assert_eq!(row.steps().iter().filter(|&&s| s == label).count(), 2);
            }
        }
    }

    #[test]
    fn base_b_binary_case_matches_binary_builder() {
        // B=2, A=1, k=d+1 reproduces the binary code for n=2^d.
        for d in 1..=4u32 {
            let bb = build_base_b_code(1, 2, d + 1, None).unwrap();
            let bin = build_binary_code(d).unwrap();
            assert_eq!(bb.rows(), bin.rows(), "d={d}");
        }
    }

    #[test]
    fn base_b_dimensions_and_waiting_fraction() {
        // A=1, B=4, k=3: n = 3*16 = 48, T = 256.
        let code = build_base_b_code(1, 4, 3, None).unwrap();
        assert_eq!(code.n(), 48);
        assert_eq!(code.t_len(), 256);
        // A=2, B=3, k=2: n=3, T=27, waiting fraction 2/3 per row.
        let code = build_base_b_code(2, 3, 2, None).unwrap();
        assert_eq!(code.n(), 3);
        assert_eq!(code.t_len(), 27);
        for waits in code.waits_per_row() {
            assert_eq!(waits * 3, 2 * code.t_len());
        }
    }

    #[test]
    fn base_b_rejects_bad_params() {
        assert!(build_base_b_code(0, 3, 2, None).is_err());
        assert!(build_base_b_code(3, 3, 2, None).is_err());
        assert!(build_base_b_code(4, 3, 2, None).is_err());
        assert!(build_base_b_code(1, 2, 1, None).is_err());
    }

    #[test]
    fn shuffle_permutes_columns_consistently() {
        let plain = build_base_b_code(1, 2, 3, None).unwrap();
        let shuffled = build_base_b_code(1, 2, 3, Some(99)).unwrap();
        assert_eq!(plain.t_len(), shuffled.t_len());
        // Same multiset of columns: check by sorting column tuples.
        let columns = |c: &RendezvousCode| {
            let mut v: Vec<Vec<u32>> = (0..c.t_len())
                .map(|t| c.rows().iter().map(|r| r.step(t)).collect())
                .collect();
            v.sort();
            v
        };
        assert_eq!(columns(&plain), columns(&shuffled));
        assert_ne!(plain.rows(), shuffled.rows());
    }

    #[test]
    fn concat_dimensions() {
        let r = build_binary_code(2).unwrap();
        let rr = concatenate_codes(&r, &r).unwrap();
        assert_eq!(rr.size(), 16);
        assert_eq!(rr.t_len(), 32);

        let single = RendezvousCode::from_rows(
            4,
            vec![r.row(0).clone()],
            CodeMeta::Custom,
        )
        .unwrap();
        let with_single = concatenate_codes(&r, &single).unwrap();
        assert_eq!(with_single.size(), r.size());
    }

    #[test]
    fn json_round_trip() {
        let code = build_binary_code(2).unwrap();
        let json = serde_json::to_string(&code).unwrap();
        assert!(json.contains("\"T\":16"));
        let back: RendezvousCode = serde_json::from_str(&json).unwrap();
        assert_eq!(back, code);
    }
}
