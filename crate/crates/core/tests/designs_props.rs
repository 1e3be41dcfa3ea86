use proptest::prelude::*;

use mubforge::algebra::FiniteGroup;
use mubforge::designs::{
    builtin, lemma_qq_case_check, mwols_from_dm, translate_intersections, wols_check,
    DifferenceMatrix, IntersectionCase,
};

/// Independent difference count over the raw rows.
fn oracle_valid(m: &DifferenceMatrix) -> bool {
    let g = m.group();
    let d = g.order();
    for i in 0..m.n_rows() {
        for j in i + 1..m.n_rows() {
            let mut counts = vec![0usize; d];
            for l in 0..m.n_cols() {
                counts[g.op(m.entry(i, l), g.inverse(m.entry(j, l)))] += 1;
            }
            if counts.iter().any(|&c| c != m.lambda()) {
                return false;
            }
        }
    }
    true
}

fn lambda_one_matrices() -> Vec<DifferenceMatrix> {
    let mut out = vec![builtin("12-6-1").unwrap()];
    for q in [2, 3, 4, 5, 7, 8, 9] {
        out.push(DifferenceMatrix::gf_mult(q).unwrap());
    }
    for d in [2, 6, 15, 35] {
        out.push(DifferenceMatrix::cyclic_smallest_prime(d).unwrap());
    }
    out
}

#[test]
fn intersection_cases_hold_exhaustively() {
    for p in [2, 3, 5, 7] {
        let mut seen = [0usize; 3];
        for r in 1..=p {
            for r2 in 1..=p {
                if r == r2 {
                    continue;
                }
                for s in 0..p {
                    for s2 in 0..p {
                        let rep = lemma_qq_case_check(p, r, r2, s, s2).unwrap();
                        assert!(
                            rep.holds(),
                            "p={p} ({r},{s}) vs ({r2},{s2}): {:?}",
                            rep.failures
                        );
                        let mut values = rep.intersections.values();
                        values.sort_unstable();
                        assert_eq!(values, (0..p).collect::<Vec<_>>());
                        seen[rep.case.number() as usize - 1] += 1;
                    }
                }
            }
        }
        // case 1 only for the pair {1,2}; case 3 needs two rows >= 2
        assert!(seen[0] > 0, "p={p}");
        if p > 2 {
            assert!(seen[1] > 0 && seen[2] > 0, "p={p}");
        }
    }
}

#[test]
fn fixed_step_is_inverse_of_g_minus_one() {
    // r = 1, r' = 4 over GF(5): g = 3 and (g-1)^{-1} = 3
    for s in 0..5 {
        for s2 in 0..5 {
            let rep = lemma_qq_case_check(5, 1, 4, s, s2).unwrap();
            assert_eq!(rep.case, IntersectionCase::FixedStep);
            let mut pts = rep.intersections.points.clone();
            pts.sort_by_key(|pt| pt.block.unwrap().block);
            for w in pts.windows(2) {
                let diff = (w[1].value + 5 - w[0].value) % 5;
                assert!(diff == 3 || diff == 2, "s={s} s'={s2}: step {diff}");
            }
        }
    }
}

#[test]
fn prime_powers_refused_by_case_check() {
    assert!(lemma_qq_case_check(4, 1, 2, 0, 0).is_err());
    assert!(lemma_qq_case_check(9, 1, 2, 0, 0).is_err());
}

#[test]
fn qq1_translates_meet_p_times() {
    for p in [2, 3, 5] {
        let m = DifferenceMatrix::qq1(p).unwrap();
        for r in 0..=p {
            for r2 in 0..=p {
                if r == r2 {
                    continue;
                }
                for s in 0..p {
                    for s2 in 0..p {
                        let rep = translate_intersections(&m, r, s, r2, s2).unwrap();
                        assert_eq!(rep.points.len(), p);
                    }
                }
            }
        }
    }
}

#[test]
fn dm12_translates_meet_exactly_once() {
    let m = builtin("12-6-1").unwrap();
    for r in 1..6 {
        for r2 in 1..6 {
            if r == r2 {
                continue;
            }
            for s in 0..12 {
                for s2 in 0..12 {
                    let rep = translate_intersections(&m, r, s, r2, s2).unwrap();
                    assert_eq!(rep.points.len(), 1, "({r},{s}) vs ({r2},{s2})");
                }
            }
        }
    }
}

#[test]
fn developments_form_mwols() {
    for m in lambda_one_matrices() {
        let squares = mwols_from_dm(&m).unwrap();
        assert_eq!(squares.len(), m.n_rows() - 1);
        for (a, l) in squares.iter().enumerate() {
            for (b, k) in squares.iter().enumerate() {
                assert_eq!(wols_check(l, k).unwrap(), a != b, "{:?}", m.params());
            }
        }
    }
}

#[test]
fn normalized_rows_are_balanced() {
    let mut all = lambda_one_matrices();
    for q in [2, 3, 4, 5, 7] {
        all.push(DifferenceMatrix::qq1(q).unwrap().normalize().unwrap());
    }
    all.push(builtin("3-5-2").unwrap().normalize().unwrap());
    for m in all {
        assert!(m.is_normalized());
        for r in 1..m.n_rows() {
            let mut counts = vec![0; m.order()];
            for &e in m.row(r).unwrap() {
                counts[e] += 1;
            }
            assert!(
                counts.iter().all(|&c| c == m.lambda()),
                "{:?} row {r}",
                m.params()
            );
        }
    }
}

#[test]
fn qq1_valid_for_field_orders() {
    for q in [2, 3, 4, 5, 7, 8, 9] {
        let m = DifferenceMatrix::qq1(q).unwrap();
        assert_eq!(m.params(), (q, q + 1, q));
        assert!(!m.is_normalized());
        assert!(m.is_valid());
        assert!(oracle_valid(&m));
    }
}

#[test]
fn verifier_agrees_with_oracle_on_every_single_entry_change() {
    for name in ["12-6-1", "3-5-2", "3-4-3"] {
        let m = builtin(name).unwrap();
        let d = m.order();
        for r in 0..m.n_rows() {
            for c in 0..m.n_cols() {
                for v in 0..d {
                    if v == m.entry(r, c) {
                        continue;
                    }
                    let t = m.with_entry(r, c, v).unwrap();
                    assert!(!t.is_valid(), "{name} ({r},{c}) -> {v}");
                    assert!(!oracle_valid(&t));
                }
            }
        }
    }
}

/// A valid matrix moved around by operations that preserve the difference
/// property: column permutation, per-row translation, per-column translation.
fn scrambled(
    base: &DifferenceMatrix,
    perm: &[usize],
    row_shift: &[usize],
    col_shift: &[usize],
) -> DifferenceMatrix {
    let g: &FiniteGroup = base.group();
    let rows = base
        .rows()
        .iter()
        .enumerate()
        .map(|(r, row)| {
            perm.iter()
                .enumerate()
                .map(|(c, &src)| g.op(g.op(row[src], row_shift[r]), col_shift[c]))
                .collect()
        })
        .collect();
    DifferenceMatrix::new(g.clone(), base.lambda(), rows).unwrap()
}

fn bases_for_props() -> Vec<DifferenceMatrix> {
    vec![
        builtin("12-6-1").unwrap(),
        builtin("3-5-2").unwrap(),
        builtin("3-4-3").unwrap(),
        DifferenceMatrix::gf_mult(9).unwrap(),
        DifferenceMatrix::qq1(4).unwrap(),
        DifferenceMatrix::cyclic_smallest_prime(15).unwrap(),
    ]
}

fn scramble_strategy() -> impl Strategy<Value = DifferenceMatrix> {
    (0..bases_for_props().len()).prop_flat_map(|k| {
        let base = bases_for_props().swap_remove(k);
        let (d, n, lambda) = base.params();
        let cols = lambda * d;
        (
            Just(base),
            Just((0..cols).collect::<Vec<_>>()).prop_shuffle(),
            proptest::collection::vec(0..d, n),
            proptest::collection::vec(0..d, cols),
        )
            .prop_map(|(base, perm, rs, cs)| scrambled(&base, &perm, &rs, &cs))
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn normalization_preserves_validity_and_is_idempotent(m in scramble_strategy()) {
        prop_assert!(m.is_valid());
        prop_assert!(oracle_valid(&m));
        let n = m.normalize().unwrap();
        prop_assert!(n.is_normalized());
        prop_assert!(n.is_valid());
        prop_assert_eq!(n.normalize().unwrap(), n);
    }

    #[test]
    fn verifier_matches_oracle_on_random_edits(
        m in scramble_strategy(),
        r in any::<prop::sample::Index>(),
        c in any::<prop::sample::Index>(),
        v in any::<prop::sample::Index>(),
    ) {
        let t = m
            .with_entry(r.index(m.n_rows()), c.index(m.n_cols()), v.index(m.order()))
            .unwrap();
        prop_assert_eq!(t.is_valid(), oracle_valid(&t));
    }
}
