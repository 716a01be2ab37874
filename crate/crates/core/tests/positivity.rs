use std::collections::BTreeSet;

use cubinv_core::cubic::DegreeSpec;
use cubinv_core::positivity::*;
use cubinv_core::BigInt;
use proptest::prelude::*;

fn spec(d1: u32, d2: u32, d3: u32) -> DegreeSpec {
    DegreeSpec::new(d1, d2, d3).unwrap()
}

fn m(s: &str) -> ExponentMatrix {
    s.parse().unwrap()
}

/// Every matrix with column sums 4 and the row sums of `S`, listed without
/// any symmetry reduction.
fn all_s_matrices(spec: &DegreeSpec) -> Vec<ExponentMatrix> {
    let rows = [0, 1, 2].map(|p| spec.s_row_degree(p));
    let cols = columns_with_sum(4);
    let r = spec.r() as usize;
    let mut out = Vec::new();
    let mut idx = vec![0usize; r];
    loop {
        let chosen: Vec<[u8; 3]> = idx.iter().map(|&i| cols[i]).collect();
        let sums = [0, 1, 2].map(|p| chosen.iter().map(|c| c[p] as u32).sum::<u32>());
        if sums == rows {
            out.push(ExponentMatrix::from_columns(chosen));
        }
        let mut j = 0;
        while j < r {
            idx[j] += 1;
            if idx[j] < cols.len() {
                break;
            }
            idx[j] = 0;
            j += 1;
        }
        if j == r {
            return out;
        }
    }
}

#[test]
fn types_and_orbits_match_brute_force() {
    for sp in [spec(2, 1, 1), spec(2, 2, 2), spec(3, 2, 2), spec(2, 2, 1), spec(3, 3, 2)] {
        let all = all_s_matrices(&sp);
        let types = enumerate_s_types(&sp, TypeFilter::default());
        let distinct: BTreeSet<ExponentMatrix> = all.iter().map(|x| canonicalize(x, &sp).unwrap().matrix).collect();
        assert_eq!(distinct.len(), types.len(), "{sp}");
        assert_eq!(orbit_total(&types), all.len() as u128, "{sp}");
        for t in &types {
            let members = all.iter().filter(|x| canonicalize(x, &sp).unwrap().matrix == t.matrix).count();
            assert_eq!(members as u128, t.orbit_size, "{sp} {}", t.matrix);
        }
    }
}

#[test]
fn filtered_types_drop_fourth_powers() {
    let sp = spec(3, 3, 3);
    let all = enumerate_s_types(&sp, TypeFilter::default());
    let kept = enumerate_s_types(&sp, TypeFilter { no_full_powers: true });
    let expect: Vec<_> = all.into_iter().filter(|t| !t.matrix.has_full_power()).collect();
    assert_eq!(kept, expect);
}

#[test]
fn row_group_respects_unequal_degrees() {
    assert_eq!(row_group(&spec(2, 2, 2)).len(), 6);
    assert_eq!(row_group(&spec(3, 2, 2)), vec![[0, 1, 2], [0, 2, 1]]);
    assert_eq!(row_group(&spec(3, 2, 1)), vec![[0, 1, 2]]);
}

#[test]
fn nonnegative_at_222_with_cross_check() {
    let rep = check_conjecture_2_1(&spec(2, 2, 2), TypeFilter::default()).unwrap();
    assert!(rep.holds());
    assert_eq!(rep.n_types, 9);
    assert_eq!(rep.n_nonzero, 108);
    assert_eq!(rep.zeros.len(), 2);
    let check = rep.cross_check.as_ref().unwrap();
    assert!(check.passed());
    assert_eq!(check.expanded_terms, 108);
}

#[test]
fn nonnegative_at_333() {
    let rep = check_conjecture_2_1(&spec(3, 3, 3), TypeFilter::default()).unwrap();
    assert!(rep.holds());
    assert_eq!(rep.n_types, 123);
    assert_eq!(rep.n_nonzero, 209_520);
    let max = rep.max.as_ref().unwrap();
    assert_eq!(max.value, BigInt::from(356));
    assert_eq!(rep.value_of(&m("2,2,1,1,1,1;1,1,2,2,1,1;1,1,1,1,2,2")).unwrap(), Some(&BigInt::from(356)));
    for z in ["4,2,1,1,0,0;0,1,2,1,4,0;0,1,1,2,0,4", "4,2,2,0,0,0;0,2,0,4,2,0;0,0,2,0,2,4"] {
        assert_eq!(rep.value_of(&m(z)).unwrap(), Some(&BigInt::from(0)), "{z}");
    }
    let top: Vec<i64> = rep.largest(8).iter().map(|(v, _)| v.try_into().unwrap()).collect();
    assert_eq!(top, [356, 280, 214, 176, 164, 128, 106, 98]);
}

#[test]
fn filtered_minima_at_333() {
    let rep = check_conjecture_2_1(&spec(3, 3, 3), TypeFilter { no_full_powers: true }).unwrap();
    assert_eq!(rep.n_types, 55);
    let low: Vec<i64> = rep.smallest(4).iter().map(|(v, _)| v.try_into().unwrap()).collect();
    assert_eq!(low, [4, 6, 8, 9]);
    for (s, v) in [
        ("3,0,1,3,0,1;1,3,0,1,3,0;0,1,3,0,1,3", 4),
        ("3,3,0,0,2,0;1,1,3,1,0,2;0,0,1,3,2,2", 6),
        ("3,0,1,3,0,1;1,3,0,0,1,3;0,1,3,1,3,0", 9),
    ] {
        assert_eq!(rep.value_of(&m(s)).unwrap(), Some(&BigInt::from(v)), "{s}");
    }
}

#[test]
fn bound_polynomial_small_cases() {
    let rep = check_conjecture_2_2(&spec(1, 1, 1), TypeFilter::default()).unwrap();
    assert_eq!(rep.n_nonzero, 0);
    let rep = check_conjecture_2_2(&spec(2, 1, 1), TypeFilter::default()).unwrap();
    assert!(rep.holds());
    assert_eq!(rep.n_nonzero, 4);
    let rep = check_conjecture_2_2(&spec(2, 2, 2), TypeFilter::default()).unwrap();
    assert!(rep.holds());
    assert_eq!(rep.n_nonzero, 7984);
    assert!(rep.cross_check.unwrap().passed());
}

#[test]
fn cofactor_and_hessian_signs() {
    for sp in [spec(1, 1, 1), spec(2, 1, 1), spec(2, 2, 2)] {
        let b = check_theorem_3_1(&sp).unwrap();
        assert!(b.holds(), "{sp}");
        assert_eq!(b.entries.len(), 6);
        let h = check_theorem_3_2(&sp).unwrap();
        assert!(h.holds(), "{sp}");
        assert_eq!(h.adjoint_identity, Some(true));
    }
}

fn s_matrix_333() -> impl Strategy<Value = ExponentMatrix> {
    let all = enumerate_s_types(&spec(3, 3, 3), TypeFilter::default());
    (0..all.len()).prop_map(move |i| all[i].matrix.clone())
}

proptest! {
    #[test]
    fn canonical_form_is_a_class_invariant(
        base in s_matrix_333(),
        cols in Just((0..6usize).collect::<Vec<_>>()).prop_shuffle(),
        row in 0usize..6,
    ) {
        let sp = spec(3, 3, 3);
        let perm = row_group(&sp)[row];
        let moved = ExponentMatrix::from_columns(cols.iter().map(|&j| base.columns()[j]).collect()).permute_rows(perm);
        let a = canonicalize(&base, &sp).unwrap();
        let b = canonicalize(&moved, &sp).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(canonicalize(&a.matrix, &sp).unwrap(), a.clone());
        prop_assert!(is_canonical(&a.matrix, a.x, &row_group(&sp)));
    }

    #[test]
    fn text_form_round_trips(entries in prop::collection::vec(prop::array::uniform3(0u8..5), 1..8)) {
        let mat = ExponentMatrix::from_columns(entries);
        prop_assert_eq!(mat.to_string().parse::<ExponentMatrix>().unwrap(), mat);
    }
}
