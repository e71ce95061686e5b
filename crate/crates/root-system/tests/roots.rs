use root_system::{num_roots, roots, Dir, RootError, RootIndex};

/// `2(β|α_k)` from the Cartan matrix of type A, summed over the support of β.
fn inner2_bruteforce(beta: RootIndex, k: usize) -> i32 {
    (beta.i()..beta.j())
        .map(|a| match a.abs_diff(k) {
            0 => 2,
            1 => -1,
            _ => 0,
        })
        .sum()
}

/// The basis listing, built by counting: roots ending at node 2, then at node
/// 3 by increasing height, and so on.
fn listing(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for j in 2..=n {
        for h in 1..j {
            out.push((j - h, j));
        }
    }
    out
}

#[test]
fn position_examples() {
    assert_eq!(RootIndex::new(2, 4).position(), 5);
    assert_eq!(RootIndex::at(1, 5).unwrap(), RootIndex::new(1, 2));
    assert_eq!(RootIndex::new(1, 5).position(), 10);
    assert_eq!(
        RootIndex::at(11, 5).unwrap_err(),
        RootError::PositionOutOfRange { pos: 11, max: 10, n: 5 }
    );
    assert!(RootIndex::at(0, 5).is_err());
}

#[test]
fn position_is_a_bijection_up_to_12() {
    for n in 2..=12 {
        let expected = listing(n);
        assert_eq!(expected.len(), num_roots(n));
        for (k, &(i, j)) in expected.iter().enumerate() {
            let r = RootIndex::new(i, j);
            assert_eq!(r.position(), k + 1);
            assert_eq!(RootIndex::at(k + 1, n).unwrap(), r);
        }
        let listed: Vec<(usize, usize)> = roots(n).map(|r| (r.i(), r.j())).collect();
        assert_eq!(listed, expected);
    }
}

#[test]
fn inner2_examples() {
    assert_eq!(RootIndex::new(1, 3).inner2(2), 1);
    assert_eq!(RootIndex::new(3, 4).inner2(1), 0);
    assert_eq!(RootIndex::new(2, 4).inner2(4), -1);
}

#[test]
fn inner2_matches_bilinear_form() {
    for n in 2..=12 {
        for beta in roots(n) {
            for k in 1..n {
                assert_eq!(beta.inner2(k), inner2_bruteforce(beta, k), "{beta} k={k}");
            }
        }
    }
}

#[test]
fn shift_examples() {
    assert_eq!(RootIndex::new(2, 5).shift(2, Dir::Minus).unwrap(), RootIndex::new(3, 5));
    assert!(RootIndex::new(1, 3).precedes(&RootIndex::new(3, 4)));
    assert_eq!(RootIndex::new(2, 4).shift(4, Dir::Plus).unwrap(), RootIndex::new(2, 5));
    let err = RootIndex::new(3, 4).shift(1, Dir::Minus).unwrap_err();
    assert!(matches!(err, RootError::IllegalShift { inner: 0, .. }), "{err}");
}

#[test]
fn shifts_change_inner_product_by_two() {
    for n in 3..=10 {
        for beta in roots(n) {
            for k in 1..n {
                let v = beta.inner2(k);
                match v {
                    1 => {
                        let g = beta.shift(k, Dir::Minus).unwrap();
                        assert_eq!(g.inner2(k), v - 2);
                        assert_eq!(g.height() + 1, beta.height());
                        assert!(g.j() <= n);
                        assert!(beta.shift(k, Dir::Plus).is_err());
                    }
                    -1 => {
                        let g = beta.shift(k, Dir::Plus).unwrap();
                        assert_eq!(g.inner2(k), v + 2);
                        assert_eq!(g.height(), beta.height() + 1);
                        assert!(g.j() <= n);
                        assert!(beta.shift(k, Dir::Minus).is_err());
                    }
                    _ => {
                        assert!(beta.shift(k, Dir::Plus).is_err());
                        assert!(beta.shift(k, Dir::Minus).is_err());
                    }
                }
            }
        }
    }
}

#[test]
fn height_counts_the_support() {
    for beta in roots(9) {
        let support = (1..9).filter(|&k| (beta.i()..beta.j()).contains(&k)).count();
        assert_eq!(beta.height(), support);
    }
}

#[test]
fn order_matches_listing() {
    let order = [(1, 2), (2, 3), (1, 3), (3, 4)];
    for w in order.windows(2) {
        assert!(RootIndex::new(w[0].0, w[0].1).precedes(&RootIndex::new(w[1].0, w[1].1)));
    }
}
