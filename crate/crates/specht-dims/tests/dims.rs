use exact_rings::{parse_element, FieldElement, Matrix};
use specht_dims::{
    check_hecke_relations, dim_gap_check, dim_gaps, hook_dim, partitions, seed_matrices, sym_dims, verify_seed_matrices, Partition, SeedFamily,
};

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

/// Number of standard Young tableaux by removing the largest entry from
/// each corner in turn.
fn syt_count(parts: &[usize]) -> u128 {
    if parts.iter().sum::<usize>() <= 1 {
        return 1;
    }
    let mut total = 0;
    for i in 0..parts.len() {
        let is_corner = parts[i] > 0 && (i + 1 == parts.len() || parts[i + 1] < parts[i]);
        if is_corner {
            let mut smaller = parts.to_vec();
            smaller[i] -= 1;
            while smaller.last() == Some(&0) {
                smaller.pop();
            }
            total += syt_count(&smaller);
        }
    }
    total
}

#[test]
fn sym7_table() {
    let table = [(&[5, 2][..], 14), (&[5, 1, 1], 15), (&[4, 3], 14), (&[4, 2, 1], 35), (&[4, 1, 1, 1], 20), (&[3, 3, 1], 21)];
    for (parts, d) in table {
        assert_eq!(hook_dim(&p(parts)), d, "{parts:?}");
    }
}

#[test]
fn sym8_table() {
    let table = [
        (&[6, 2][..], 20),
        (&[6, 1, 1], 21),
        (&[5, 3], 28),
        (&[5, 2, 1], 64),
        (&[5, 1, 1, 1], 35),
        (&[4, 4], 14),
        (&[4, 3, 1], 70),
        (&[4, 2, 2], 56),
        (&[4, 2, 1, 1], 90),
        (&[3, 3, 2], 42),
    ];
    for (parts, d) in table {
        assert_eq!(hook_dim(&p(parts)), d, "{parts:?}");
        assert_eq!(hook_dim(&p(parts).conjugate()), d, "conjugate of {parts:?}");
    }
}

#[test]
fn trivial_and_sign_modules() {
    for n in 1..=12 {
        assert_eq!(hook_dim(&p(&[n])), 1);
        assert_eq!(hook_dim(&p(&vec![1; n])), 1);
    }
}

#[test]
fn sum_of_squares_is_factorial() {
    for n in 1..=10usize {
        let total: u128 = sym_dims(n).iter().map(|(_, d)| d * d).sum();
        assert_eq!(total, (1..=n as u128).product::<u128>(), "n = {n}");
    }
}

#[test]
fn hook_formula_matches_tableau_count() {
    for n in 1..=9 {
        for lambda in partitions(n) {
            assert_eq!(hook_dim(&lambda), syt_count(lambda.parts()), "{lambda}");
        }
    }
}

#[test]
fn conjugation_invariance_and_partition_counts() {
    let counts = [1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77];
    for n in 1..=12 {
        let ps = partitions(n);
        assert_eq!(ps.len(), counts[n - 1]);
        for lambda in &ps {
            assert_eq!(lambda.n(), n);
            assert_eq!(lambda.conjugate().conjugate(), *lambda);
            assert_eq!(hook_dim(lambda), hook_dim(&lambda.conjugate()));
        }
    }
}

#[test]
fn two_row_and_hook_shapes() {
    for n in 4..=12usize {
        assert_eq!(hook_dim(&p(&[n - 2, 2])) as usize, n * (n - 3) / 2);
        assert_eq!(hook_dim(&p(&[n - 2, 1, 1])) as usize, (n - 1) * (n - 2) / 2);
    }
}

#[test]
fn sym7_small_dimensions() {
    let mut dims: Vec<u128> = sym_dims(7).into_iter().map(|(_, d)| d).collect();
    dims.sort();
    assert_eq!(&dims[..5], &[1, 1, 6, 6, 14]);
    assert!(dims.contains(&15));
}

#[test]
fn gap_check() {
    for n in [7, 9, 10, 11, 12] {
        assert!(dim_gap_check(n), "n = {n}: {:?}", dim_gaps(n));
    }
    assert!(!dim_gap_check(8));
    let gaps = dim_gaps(8);
    assert!(gaps.iter().all(|(_, d)| *d == 14));
    assert!(gaps.iter().any(|(l, _)| *l == p(&[4, 4])));
}

#[test]
fn invalid_partitions() {
    assert!(Partition::new(vec![]).is_err());
    assert!(Partition::new(vec![2, 3]).is_err());
    assert!(Partition::new(vec![2, 0]).is_err());
    assert_eq!(p(&[3, 2, 2]).to_string(), "(3,2,2)");
}

#[test]
fn seed_relations() {
    for n in 4..=8 {
        for family in [SeedFamily::M, SeedFamily::N] {
            let report = verify_seed_matrices(family, n);
            assert!(report.all_pass(), "{family} n = {n}: {:?}", report.checks);
        }
    }
    for family in [SeedFamily::P, SeedFamily::Q] {
        let report = verify_seed_matrices(family, 5);
        assert!(report.all_pass(), "{family}: {:?}", report.checks);
    }
}

/// Q is P with r replaced by -1/r.
#[test]
fn q_is_the_conjugate_of_p() {
    let ps = seed_matrices(SeedFamily::P, 5);
    let qs = seed_matrices(SeedFamily::Q, 5);
    let conj = |a: &FieldElement| {
        let s = a.to_canonical_string().replace('r', "(-1/r)");
        parse_element(&s).unwrap()
    };
    for (pm, qm) in ps.iter().zip(&qs) {
        let mapped: Matrix<FieldElement> = pm.map(conj);
        assert_eq!(&mapped, qm);
    }
}

#[test]
fn a_broken_seed_fails() {
    let report = verify_seed_matrices(SeedFamily::M, 5);
    assert_eq!(report.checks.iter().map(|c| c.name).collect::<Vec<_>>(), ["braid", "commute", "quadratic"]);
    assert_eq!(report.checks[0].instances, 3);
    let mut h = seed_matrices(SeedFamily::M, 5);
    h[1].set(0, 0, parse_element("r + 1").unwrap());
    let report = check_hecke_relations(SeedFamily::M, 5, &h);
    assert!(!report.all_pass());
    assert_eq!(report.checks[2].failures, vec![vec![2]]);
}
