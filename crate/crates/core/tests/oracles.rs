// Independent checks: root counts by brute force over the symmetric form
// of hand-built Cartan matrices, and coefficient vectors read off by hand.

use rootforge::rootsys::{Family, Root, RootSystem};

fn path(n: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0; n]; n];
    for i in 0..n {
        a[i][i] = 2;
        if i + 1 < n {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
    }
    a
}

fn attach(mut a: Vec<Vec<i64>>, to: usize) -> Vec<Vec<i64>> {
    let n = a.len();
    for row in a.iter_mut() {
        row.push(0);
    }
    let mut last = vec![0; n + 1];
    last[n] = 2;
    last[to] = -1;
    a[to][n] = -1;
    a.push(last);
    a
}

/// Nonzero integer vectors `x` with entries in `-bound..=bound` of one sign
/// and `x^T A x = 2`, for a symmetric `A`.
fn count_norm_two(a: &[Vec<i64>], bound: i64) -> usize {
    let n = a.len();
    let mut x = vec![0i64; n];
    let mut count = 0;
    loop {
        let q: i64 = (0..n).map(|i| (0..n).map(|j| x[i] * a[i][j] * x[j]).sum::<i64>()).sum();
        if q == 2 {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == n {
                return 2 * count;
            }
            x[i] += 1;
            if x[i] <= bound {
                break;
            }
            x[i] = 0;
            i += 1;
        }
    }
}

#[test]
fn root_counts_match_brute_force() {
    for n in 1..=7 {
        let s = RootSystem::family(Family::A, n).unwrap();
        assert_eq!(s.len(), count_norm_two(&path(n), 2));
        assert_eq!(s.len(), n * (n + 1));
    }
    for n in 4..=7 {
        let s = RootSystem::family(Family::D, n).unwrap();
        let d = attach(path(n - 1), n - 3);
        assert_eq!(s.len(), count_norm_two(&d, 3));
        assert_eq!(s.len(), 2 * n * (n - 1));
    }
    let e6 = attach(path(5), 2);
    let e7 = attach(path(6), 3);
    assert_eq!(count_norm_two(&e6, 3), 72);
    assert_eq!(count_norm_two(&e7, 4), 126);
    assert_eq!(RootSystem::family(Family::E, 6).unwrap().len(), 72);
    assert_eq!(RootSystem::family(Family::E, 7).unwrap().len(), 126);
}

#[test]
fn hand_built_cartan_matches_library() {
    let e6 = RootSystem::family(Family::E, 6).unwrap();
    assert_eq!(e6.cartan().entries(), attach(path(5), 2).as_slice());
    let e7 = RootSystem::family(Family::E, 7).unwrap();
    assert_eq!(e7.cartan().entries(), attach(path(6), 3).as_slice());
}

#[test]
fn non_simply_laced_counts() {
    // |Phi| = rank * Coxeter number
    for (f, n, h) in [(Family::B, 3, 6), (Family::C, 4, 8), (Family::F, 4, 12), (Family::G, 2, 6)] {
        assert_eq!(RootSystem::family(f, n).unwrap().len(), n * h, "{f}{n}");
    }
}

#[test]
fn highest_roots() {
    let e6 = RootSystem::family(Family::E, 6).unwrap();
    assert_eq!(e6.highest_root(), &Root::from([1, 2, 3, 2, 1, 2]));
    let e7 = RootSystem::family(Family::E, 7).unwrap();
    assert_eq!(e7.highest_root(), &Root::from([1, 2, 3, 4, 3, 2, 2]));
}

#[test]
fn reflection_by_hand() {
    // s_{a4+a5}(a2+2a3+a4+a6): pairing is -1, so a4+a5 is added
    let e6 = RootSystem::family(Family::E, 6).unwrap();
    let b = Root::from([0, 0, 0, 1, 1, 0]);
    let r = e6.reflect(&b, &Root::from([0, 1, 2, 1, 0, 1])).unwrap();
    assert_eq!(r, Root::from([0, 1, 2, 2, 1, 1]));
    assert_eq!(e6.reflect(&b, &Root::from([1, 0, 0, 0, 0, 0])).unwrap(), Root::from([1, 0, 0, 0, 0, 0]));
}
