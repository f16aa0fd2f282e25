//! Burrows-Wheeler transform and clustering detection.
//!
//! `B(w)` is read off the last column after sorting all `n` rotations of
//! `w` (non-strictly, so non-primitive words keep their duplicate
//! rotations). A word clusters for a pair of orders `(<_A, <_D)` when the
//! rotations are sorted by `<_D` and the last column comes out as one
//! block per letter with the blocks in `<_A`-ascending order; letters
//! that do not occur impose no constraint.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::alphabet::{Alphabet, OrderPair, TotalOrder};
use crate::word::Word;
use crate::Result;
use crate::error::Error;

/// Burrows-Wheeler transform of `w` with rotations sorted by `order`.
pub fn bwt(w: &Word, order: &TotalOrder) -> Result<Word> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    order.alphabet().check_word(w)?;
    let letters = w.letters();
    let n = letters.len();
    let mut rotations: Vec<usize> = (0..n).collect();
    rotations.sort_by(|&i, &j| {
        (0..n)
            .map(|k| order.cmp_letters(letters[(i + k) % n], letters[(j + k) % n]))
            .find(|&o| o != Ordering::Equal)
            .unwrap_or(Ordering::Equal)
    });
    Ok(Word::new(rotations.iter().map(|&i| letters[(i + n - 1) % n]).collect()))
}

/// True iff `w` clusters for the pair: `bwt(w, <_D)` is non-decreasing
/// under `<_A`, i.e. grouped blocks in `<_A`-ascending order.
pub fn clusters_for(w: &Word, pair: &OrderPair) -> Result<bool> {
    let b = bwt(w, pair.order_d())?;
    let letters = b.letters();
    Ok(letters
        .windows(2)
        .all(|p| pair.order_a().cmp_letters(p[0], p[1]) != Ordering::Greater))
}

/// All order pairs on the alphabet of `w` for which `w` clusters.
pub fn clustering_pairs(w: &Word) -> Result<Vec<OrderPair>> {
    let alphabet = Alphabet::of_word(w)?;
    let mut out = Vec::new();
    for pair in OrderPair::all_pairs(&alphabet)? {
        if clusters_for(w, &pair)? {
            out.push(pair);
        }
    }
    Ok(out)
}

/// Clustering for the symmetric permutation: `<_A` taken as the reverse
/// of the given defining order.
pub fn is_perfectly_clustering(w: &Word, order_d: &TotalOrder) -> Result<bool> {
    let pair = OrderPair::new(order_d.reversed(), order_d.clone())?;
    clusters_for(w, &pair)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn order(s: &str) -> TotalOrder {
        s.parse().unwrap()
    }

    fn pair(s: &str) -> OrderPair {
        s.parse().unwrap()
    }

    #[test]
    fn bwt_examples() {
        assert_eq!(bwt(&Word::from("1312"), &order("123")).unwrap(), Word::from("3211"));
        assert_eq!(bwt(&Word::from("11"), &order("12")).unwrap(), Word::from("11"));
        // non-primitive: B(v^m) expands each letter of B(v) m times in place
        assert_eq!(bwt(&Word::from("1212"), &order("12")).unwrap(), Word::from("2211"));
        assert_eq!(bwt(&Word::from("12"), &order("12")).unwrap(), Word::from("21"));
    }

    #[test]
    fn bwt_rejects_bad_input() {
        assert_eq!(bwt(&Word::empty(), &order("12")), Err(Error::EmptyWord));
        assert_eq!(
            bwt(&Word::from("13"), &order("12")),
            Err(Error::LetterOutsideAlphabet { letter: '3' })
        );
    }

    #[test]
    fn clustering_examples() {
        assert!(clusters_for(&Word::from("1312"), &pair("321|123")).unwrap());
        assert!(!clusters_for(&Word::from("bc"), &pair("bca|abc")).unwrap());
        let a = Word::from("a");
        for p in OrderPair::all_pairs(&Alphabet::of_word(&a).unwrap()).unwrap() {
            assert!(clusters_for(&a, &p).unwrap());
        }
    }

    #[test]
    fn perfectly_clustering_examples() {
        assert!(is_perfectly_clustering(&Word::from("1312"), &order("123")).unwrap());
        // B("bc") = "cb", and the reverse order c<b<a asks for exactly that
        // grouping, so "bc" is perfectly clustering.
        assert!(is_perfectly_clustering(&Word::from("bc"), &order("abc")).unwrap());
        assert!(is_perfectly_clustering(&Word::from("11"), &order("12")).unwrap());
    }

    #[test]
    fn clustering_pairs_of_two_letter_word() {
        // B("12") is "21" under 1<2 and "12" under 2<1, so exactly the
        // pairs whose <_A matches that grouping survive.
        let mut found = clustering_pairs(&Word::from("12")).unwrap();
        found.sort_by_key(|p| alloc::format!("{p}"));
        assert_eq!(found, vec![pair("12|21"), pair("21|12")]);
        let one = clustering_pairs(&Word::from("1")).unwrap();
        assert_eq!(one.len(), 1);
    }

    #[test]
    fn bwt_is_permutation_of_input() {
        let words = ["1312", "121", "332211", "a", "2121313"];
        for s in words {
            let w = Word::from(s);
            let alphabet = Alphabet::of_word(&w).unwrap();
            for o in TotalOrder::all_orders(&alphabet).unwrap() {
                let b = bwt(&w, &o).unwrap();
                let mut x = w.letters().to_vec();
                let mut y = b.letters().to_vec();
                x.sort_unstable();
                y.sort_unstable();
                assert_eq!(x, y);
            }
        }
    }

    #[test]
    fn power_expansion_rule() {
        // B(v^m) is B(v) with each letter repeated m times in place, and
        // clustering of v^m is equivalent to clustering of v.
        let alphabet = Alphabet::new("12".chars()).unwrap();
        let orders = TotalOrder::all_orders(&alphabet).unwrap();
        let pairs = OrderPair::all_pairs(&alphabet).unwrap();
        let mut words = vec![Word::from("1"), Word::from("2")];
        for len in 2..=4 {
            let mut next = Vec::new();
            for w in &words {
                if w.len() == len - 1 {
                    for &c in alphabet.letters() {
                        let mut v = w.letters().to_vec();
                        v.push(c);
                        next.push(Word::new(v));
                    }
                }
            }
            words.extend(next);
        }
        for v in &words {
            if !v.is_primitive().unwrap() {
                continue;
            }
            for m in 2..=4 {
                let vm = v.repeat(m);
                for o in &orders {
                    let b = bwt(v, o).unwrap();
                    let expanded: Vec<char> = b
                        .letters()
                        .iter()
                        .flat_map(|&c| std::iter::repeat_n(c, m))
                        .collect();
                    assert_eq!(bwt(&vm, o).unwrap(), Word::new(expanded));
                }
                for p in &pairs {
                    assert_eq!(clusters_for(&vm, p).unwrap(), clusters_for(v, p).unwrap());
                }
            }
        }
    }
}
