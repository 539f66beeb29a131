//! Independent checks of the closed-form deciders on short words.
//!
//! The bicyclic monoid is modelled as words over `a, b` modulo `ab = 1`,
//! reduced by literal rewriting; preorders are decided by searching for
//! multipliers. Free-semigroup factors are found by enumerating every
//! candidate prefix and suffix.

use super::{Bicyclic, Elem, FreeSemigroup, SymbolicObject, SymbolicSemigroup};
use crate::error::Result;
use crate::green::Preorder;

const A: u8 = 0;
const B: u8 = 1;

/// All words over `letters` letters of length `min..=max`, shortest first.
pub fn words(letters: u8, min: usize, max: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<u8>> = vec![Vec::new()];
    for len in 0..=max {
        if len >= min {
            out.extend(layer.iter().cloned());
        }
        layer = layer
            .iter()
            .flat_map(|w| {
                (0..letters).map(move |c| {
                    let mut v = w.clone();
                    v.push(c);
                    v
                })
            })
            .collect();
    }
    out
}

/// Deletes the leftmost `ab` until none is left.
pub fn rewrite(word: &[u8]) -> Vec<u8> {
    let mut w = word.to_vec();
    while let Some(i) = w.windows(2).position(|p| p == [A, B]) {
        w.drain(i..i + 2);
    }
    w
}

/// A reduced word `b^m a^n` read as the pair `(m, n)`.
pub fn reduced_pair(word: &[u8]) -> (u64, u64) {
    let r = rewrite(word);
    let m = r.iter().take_while(|&&c| c == B).count();
    assert!(r[m..].iter().all(|&c| c == A), "rewriting left {r:?}");
    (m as u64, (r.len() - m) as u64)
}

fn reduced_word(m: u64, n: u64) -> Vec<u8> {
    std::iter::repeat(B)
        .take(m as usize)
        .chain(std::iter::repeat(A).take(n as usize))
        .collect()
}

fn cat(x: &[u8], y: &[u8]) -> Vec<u8> {
    [x, y].concat()
}

fn multipliers(bound: u64) -> impl Iterator<Item = Vec<u8>> {
    (0..=bound).flat_map(move |m| (0..=bound).map(move |n| reduced_word(m, n)))
}

/// `u ≤_K v` by searching multipliers `b^x a^y` with `x, y ≤ |u| + |v|`.
pub fn search_le(k: Preorder, u: &[u8], v: &[u8]) -> bool {
    let target = rewrite(u);
    let bound = (u.len() + v.len()) as u64;
    match k {
        Preorder::L => multipliers(bound).any(|w| rewrite(&cat(&w, v)) == target),
        Preorder::R => multipliers(bound).any(|w| rewrite(&cat(v, &w)) == target),
        Preorder::J => multipliers(bound).any(|w| {
            let z = rewrite(&cat(v, &w));
            search_le(Preorder::L, u, &z)
        }),
    }
}

fn generator_pair(c: u8) -> Elem {
    if c == A {
        Elem::Pair(0, 1)
    } else {
        Elem::Pair(1, 0)
    }
}

fn closed_form(word: &[u8]) -> Elem {
    word.iter().fold(Elem::Pair(0, 0), |acc, &c| {
        Bicyclic.mul(&acc, &generator_pair(c))
    })
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Agreement {
    pub checked: usize,
    pub mismatches: Vec<String>,
}

impl Agreement {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares the bicyclic product and all three preorders with the
/// rewriting model on every pair of words of length `≤ max_len`,
/// the empty word included.
pub fn bicyclic_agreement(max_len: usize) -> Result<Agreement> {
    let ws = words(2, 0, max_len);
    let mut out = Agreement::default();
    for u in &ws {
        let (m, n) = reduced_pair(u);
        if closed_form(u) != Elem::Pair(m, n) {
            out.mismatches
                .push(format!("word {u:?} reduces to ({m},{n})"));
        }
        for v in &ws {
            out.checked += 1;
            let (p, q) = reduced_pair(&cat(u, v));
            if Bicyclic.mul(&closed_form(u), &closed_form(v)) != Elem::Pair(p, q) {
                out.mismatches.push(format!("product {u:?}·{v:?}"));
            }
        }
    }
    let mut elems: Vec<Vec<u8>> = ws.iter().map(|w| rewrite(w)).collect();
    elems.sort();
    elems.dedup();
    for u in &elems {
        for v in &elems {
            for k in Preorder::ALL {
                let want = search_le(k, u, v);
                if Bicyclic.le(k, &closed_form(u), &closed_form(v))? != want {
                    out.mismatches
                        .push(format!("{k:?} on {u:?}, {v:?}: rewriting says {want}"));
                }
            }
        }
    }
    Ok(out)
}

/// `u = x v y` for some possibly empty words `x, y`, found by trying
/// every candidate `x` and `y` over the alphabet.
pub fn brute_factor(letters: u8, u: &[u8], v: &[u8]) -> bool {
    if v.len() > u.len() {
        return false;
    }
    let spare = u.len() - v.len();
    (0..=spare).any(|i| {
        words(letters, i, i).iter().any(|x| {
            words(letters, spare - i, spare - i)
                .iter()
                .any(|y| [x.as_slice(), v, y].concat() == u)
        })
    })
}

/// Checks the free-semigroup J decider against [`brute_factor`] and that
/// mutual factors are equal, on all nonempty words of length `≤ max_len`.
pub fn free_j_agreement(letters: u8, max_len: usize) -> Result<Agreement> {
    let f = FreeSemigroup::new(letters);
    let ws = words(letters, 1, max_len);
    let mut out = Agreement::default();
    for u in &ws {
        for v in &ws {
            out.checked += 1;
            let want = brute_factor(letters, u, v);
            if f.le(Preorder::J, &Elem::Word(u.clone()), &Elem::Word(v.clone()))? != want {
                out.mismatches
                    .push(format!("J on {u:?}, {v:?}: brute force says {want}"));
            }
            if u != v && want && brute_factor(letters, v, u) {
                out.mismatches
                    .push(format!("distinct J-related words {u:?}, {v:?}"));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rewriting() {
        assert_eq!(reduced_pair(&[A, B]), (0, 0));
        assert_eq!(reduced_pair(&[B, A, A, B, B]), (1, 0));
        assert_eq!(words(2, 0, 2).len(), 7);
    }

    #[test]
    fn bicyclic_matches_rewriting_up_to_four() {
        let a = bicyclic_agreement(4).unwrap();
        assert!(a.ok(), "{:?}", a.mismatches);
    }

    #[test]
    fn free_matches_brute_force_up_to_four() {
        let a = free_j_agreement(2, 4).unwrap();
        assert!(a.ok(), "{:?}", a.mismatches);
    }
}
