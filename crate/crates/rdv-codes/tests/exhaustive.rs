//! Exhaustive verification of every constructed code family at desk scale.

use rdv_codes::{
    build_base_b_code, build_binary_code, build_padded_code, concatenate_codes,
    verify_rendezvous_code, RendezvousCode,
};

#[test]
fn binary_family_verifies() {
    for d in 1..=8u32 {
        let code = build_binary_code(d).unwrap();
        assert!(verify_rendezvous_code(&code).is_valid(), "d = {d}");
    }
}

#[test]
fn padded_family_verifies() {
    for n in 4..=64usize {
        let code = build_padded_code(n).unwrap();
        assert!(verify_rendezvous_code(&code).is_valid(), "n = {n}");
        assert!(code.t_len() % 4 == 0);
    }
}

/// All (A, B, k) with 0 < A < B, k >= 2, T = B^{k+1} <= 4096.
fn base_b_params(max_t: usize) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for b in 2..=16u32 {
        for k in 2..=12u32 {
            let t = (b as u64).checked_pow(k + 1);
            match t {
                Some(t) if t as usize <= max_t => {
                    for a in 1..b {
                        out.push((a, b, k));
                    }
                }
                _ => break,
            }
        }
    }
    out
}

#[test]
fn base_b_family_verifies() {
    for (a, b, k) in base_b_params(4096) {
        let code = build_base_b_code(a, b, k, None).unwrap();
        assert!(
            verify_rendezvous_code(&code).is_valid(),
            "A={a} B={b} k={k}"
        );
        // Waiting fraction is exactly A/B in every row.
        for waits in code.waits_per_row() {
            assert_eq!(waits as u64 * b as u64, a as u64 * code.t_len() as u64);
        }
    }
}

#[test]
fn shuffled_base_b_still_verifies() {
    let code = build_base_b_code(1, 2, 5, Some(7)).unwrap();
    assert!(verify_rendezvous_code(&code).is_valid());
}

#[test]
fn concatenation_closure_over_pool() {
    // Pool of small valid codes over matching n where possible.
    let pool: Vec<RendezvousCode> = vec![
        build_binary_code(2).unwrap(),
        build_base_b_code(1, 2, 3, None).unwrap(),
        build_base_b_code(3, 4, 2, None).unwrap(),
        build_base_b_code(1, 2, 3, Some(5)).unwrap(),
        build_binary_code(3).unwrap(),
        build_padded_code(8).unwrap(),
    ];
    let mut checked = 0;
    for r1 in &pool {
        for r2 in &pool {
            if r1.n() != r2.n() {
                assert!(concatenate_codes(r1, r2).is_err());
                continue;
            }
            let cat = concatenate_codes(r1, r2).unwrap();
            assert!(verify_rendezvous_code(&cat).is_valid());
            checked += 1;
        }
    }
    assert!(checked >= 10);
}
