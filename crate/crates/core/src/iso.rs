//! Isomorphism search and canonical forms for small semigroups and biacts.

use crate::actions::Actions;
use crate::biact::FiniteBiact;
use crate::semigroup::FiniteSemigroup;

/// Backtracking search for a bijection `phi` with
/// `phi(x*y) = phi(x)*phi(y)`. Returns `phi` as `phi[x]`.
pub fn find_isomorphism(a: &FiniteSemigroup, b: &FiniteSemigroup) -> Option<Vec<usize>> {
    let n = a.order();
    if n != b.order() {
        return None;
    }
    let idem_a: Vec<bool> = (0..n).map(|x| a.is_idempotent(x)).collect();
    let idem_b: Vec<bool> = (0..n).map(|x| b.is_idempotent(x)).collect();
    if idem_a.iter().filter(|&&i| i).count() != idem_b.iter().filter(|&&i| i).count() {
        return None;
    }
    let mut phi = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn consistent(a: &FiniteSemigroup, b: &FiniteSemigroup, phi: &[usize], upto: usize) -> bool {
        for x in 0..=upto {
            for y in 0..=upto {
                let p = a.mul(x, y);
                if phi[p] != usize::MAX && phi[p] != b.mul(phi[x], phi[y]) {
                    return false;
                }
            }
        }
        true
    }

    fn go(
        a: &FiniteSemigroup,
        b: &FiniteSemigroup,
        idem: (&[bool], &[bool]),
        phi: &mut Vec<usize>,
        used: &mut Vec<bool>,
        x: usize,
    ) -> bool {
        let n = a.order();
        if x == n {
            return true;
        }
        for y in 0..n {
            if used[y] || idem.0[x] != idem.1[y] {
                continue;
            }
            phi[x] = y;
            used[y] = true;
            if consistent(a, b, phi, x) && go(a, b, idem, phi, used, x + 1) {
                return true;
            }
            phi[x] = usize::MAX;
            used[y] = false;
        }
        false
    }

    if go(a, b, (&idem_a, &idem_b), &mut phi, &mut used, 0) {
        Some(phi)
    } else {
        None
    }
}

/// Carrier bijection commuting with both actions. The two biacts must have
/// the same acting semigroups (compared as tables).
pub fn find_biact_isomorphism(a: &FiniteBiact, b: &FiniteBiact) -> Option<Vec<usize>> {
    if a.size() != b.size() || a.left() != b.left() || a.right() != b.right() {
        return None;
    }
    let m = a.size();
    let mut phi = vec![usize::MAX; m];
    let mut used = vec![false; m];

    fn consistent(a: &FiniteBiact, b: &FiniteBiact, phi: &[usize]) -> bool {
        for x in 0..a.size() {
            if phi[x] == usize::MAX {
                continue;
            }
            for s in 0..a.left_order() {
                let img = phi[a.act_left(s, x)];
                if img != usize::MAX && img != b.act_left(s, phi[x]) {
                    return false;
                }
            }
            for t in 0..a.right_order() {
                let img = phi[a.act_right(x, t)];
                if img != usize::MAX && img != b.act_right(phi[x], t) {
                    return false;
                }
            }
        }
        true
    }

    fn go(
        a: &FiniteBiact,
        b: &FiniteBiact,
        phi: &mut Vec<usize>,
        used: &mut Vec<bool>,
        x: usize,
    ) -> bool {
        if x == a.size() {
            return true;
        }
        for y in 0..a.size() {
            if used[y] {
                continue;
            }
            phi[x] = y;
            used[y] = true;
            if consistent(a, b, phi) && go(a, b, phi, used, x + 1) {
                return true;
            }
            phi[x] = usize::MAX;
            used[y] = false;
        }
        false
    }

    if go(a, b, &mut phi, &mut used, 0) {
        Some(phi)
    } else {
        None
    }
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

/// Lexicographically least table over all relabelings.
pub fn canonical_table(s: &FiniteSemigroup) -> Vec<usize> {
    permutations(s.order())
        .iter()
        .map(|p| s.relabel(p).table().to_vec())
        .min()
        .expect("at least one permutation")
}

/// Lexicographically least `(left action, right action)` over all carrier
/// relabelings.
pub fn canonical_biact(b: &FiniteBiact) -> (Vec<usize>, Vec<usize>) {
    permutations(b.size())
        .iter()
        .map(|p| {
            let r = b.relabel(p);
            (r.left_action().to_vec(), r.right_action().to_vec())
        })
        .min()
        .expect("at least one permutation")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::named;

    #[test]
    fn permutation_counts() {
        assert_eq!(permutations(0).len(), 1);
        assert_eq!(permutations(3).len(), 6);
        assert_eq!(permutations(4).len(), 24);
    }

    #[test]
    fn relabeled_copy_is_isomorphic() {
        let t2 = named::t2();
        let p = vec![2, 0, 3, 1];
        let q = t2.relabel(&p);
        let phi = find_isomorphism(&t2, &q).unwrap();
        for x in 0..4 {
            for y in 0..4 {
                assert_eq!(phi[t2.mul(x, y)], q.mul(phi[x], phi[y]));
            }
        }
        assert_eq!(canonical_table(&t2), canonical_table(&q));
    }

    #[test]
    fn left_and_right_zero_differ() {
        assert!(find_isomorphism(&named::left_zero(2), &named::right_zero(2)).is_none());
    }
}
