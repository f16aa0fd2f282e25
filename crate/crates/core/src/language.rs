//! Factorial languages materialized to an explicit depth.
//!
//! A language is built from one of four sources: the factors `F(W)` of a
//! finite word set (non-extendable), the factors `L_w` of a periodic word
//! `w^ω`, the factors of a list of eventually periodic bi-infinite words,
//! or the natural coding of an interval exchange. All queries state their
//! depth requirements and fail loudly instead of silently truncating.

use alloc::boxed::Box;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use alloc::vec;
use core::fmt;

use crate::alphabet::{Alphabet, OrderPair};
use crate::error::Error;
use crate::iet::PiecewiseAffineIet;
use crate::word::Word;
use crate::Result;

/// Default cap on materialization depth.
pub const DEPTH_CAP: usize = 64;

/// `leftPeriod^{ω-} · center · rightPeriod^{ω+}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EventuallyPeriodicWord {
    left: Word,
    center: Word,
    right: Word,
}

impl EventuallyPeriodicWord {
    pub fn new(left: Word, center: Word, right: Word) -> Result<Self> {
        if left.is_empty() || right.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok(Self { left, center, right })
    }

    pub fn left(&self) -> &Word {
        &self.left
    }

    pub fn center(&self) -> &Word {
        &self.center
    }

    pub fn right(&self) -> &Word {
        &self.right
    }

    /// Finite truncation `left^k · center · right^k` whose factors of
    /// length up to `depth` are exactly those of the bi-infinite word.
    pub fn truncate(&self, depth: usize) -> Word {
        let min_period = self.left.len().min(self.right.len());
        let k = depth.div_ceil(min_period) + 1;
        self.left.repeat(k).concat(&self.center).concat(&self.right.repeat(k))
    }
}

/// What a [`FactorialLanguage`] is generated from.
#[derive(Clone, Debug)]
pub enum LanguageSource {
    /// `F(W)`: all factors of the given words; non-extendable.
    FiniteWords(Vec<Word>),
    /// `L_w`: all factors of `w^ω`.
    PowerWord(Word),
    /// Factors of a list of eventually periodic bi-infinite words.
    BiInfinite(Vec<EventuallyPeriodicWord>),
    /// Natural coding of an interval exchange (words with nonempty cylinder).
    IetCoding(Box<PiecewiseAffineIet>),
}

/// A factor-closed language materialized for lengths `0..=depth`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorialLanguage {
    alphabet: Alphabet,
    depth: usize,
    extendable: bool,
    sets: Vec<BTreeSet<Word>>,
}

/// Materialize a language from its source.
pub fn build_language(source: &LanguageSource, depth: usize) -> Result<FactorialLanguage> {
    if depth == 0 {
        return Err(Error::InsufficientDepth { needed: 1, depth: 0 });
    }
    if depth > DEPTH_CAP {
        return Err(Error::DepthCap { requested: depth, cap: DEPTH_CAP });
    }
    match source {
        LanguageSource::FiniteWords(words) => {
            if words.is_empty() {
                return Err(Error::EmptyWordSet);
            }
            let alphabet = Alphabet::of_words(words.iter())?;
            let sets = collect_factors(words, depth);
            FactorialLanguage::from_sets(alphabet, sets, false)
        }
        LanguageSource::PowerWord(w) => {
            if w.is_empty() {
                return Err(Error::EmptyWord);
            }
            let alphabet = Alphabet::of_word(w)?;
            let copies = (depth + w.len()).div_ceil(w.len());
            let unrolled = w.repeat(copies);
            let sets = collect_factors(&[unrolled], depth);
            FactorialLanguage::from_sets(alphabet, sets, true)
        }
        LanguageSource::BiInfinite(entries) => {
            if entries.is_empty() {
                return Err(Error::EmptyWordSet);
            }
            let truncations: Vec<Word> = entries.iter().map(|e| e.truncate(depth)).collect();
            let alphabet = Alphabet::of_words(truncations.iter())?;
            let sets = collect_factors(&truncations, depth);
            FactorialLanguage::from_sets(alphabet, sets, true)
        }
        LanguageSource::IetCoding(iet) => {
            let sets = iet.coding_factors(depth)?;
            FactorialLanguage::from_sets(iet.alphabet().clone(), sets, true)
        }
    }
}

fn collect_factors(words: &[Word], depth: usize) -> Vec<BTreeSet<Word>> {
    let mut sets: Vec<BTreeSet<Word>> = vec![BTreeSet::new(); depth + 1];
    sets[0].insert(Word::empty());
    for w in words {
        for n in 1..=depth.min(w.len()) {
            for i in 0..=w.len() - n {
                sets[n].insert(w.subword(i, i + n));
            }
        }
    }
    sets
}

impl FactorialLanguage {
    /// Wrap explicit factor sets, validating factor closure.
    pub fn from_sets(
        alphabet: Alphabet,
        sets: Vec<BTreeSet<Word>>,
        extendable: bool,
    ) -> Result<Self> {
        if sets.is_empty() || sets[0] != BTreeSet::from([Word::empty()]) {
            return Err(Error::Internal { message: String::from("length-0 set must be {ε}") });
        }
        for (n, set) in sets.iter().enumerate().skip(1) {
            for w in set {
                if w.len() != n {
                    return Err(Error::Internal {
                        message: alloc::format!("word \"{w}\" stored at length {n}"),
                    });
                }
                alphabet.check_word(w)?;
                let prefix = w.subword(0, n - 1);
                let suffix = w.subword(1, n);
                if !sets[n - 1].contains(&prefix) || !sets[n - 1].contains(&suffix) {
                    return Err(Error::Internal {
                        message: alloc::format!("factor closure broken at \"{w}\""),
                    });
                }
            }
        }
        let depth = sets.len() - 1;
        Ok(Self { alphabet, depth, extendable, sets })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn is_extendable(&self) -> bool {
        self.extendable
    }

    pub fn factor_set(&self, n: usize) -> Result<&BTreeSet<Word>> {
        self.sets
            .get(n)
            .ok_or(Error::InsufficientDepth { needed: n, depth: self.depth })
    }

    pub fn contains(&self, w: &Word) -> bool {
        w.len() <= self.depth && self.sets[w.len()].contains(w)
    }

    /// Number of factors of length `n`.
    pub fn factor_complexity(&self, n: usize) -> Result<usize> {
        Ok(self.factor_set(n)?.len())
    }

    /// Number of palindromic factors of length `n`.
    pub fn palindromic_complexity(&self, n: usize) -> Result<usize> {
        Ok(self.factor_set(n)?.iter().filter(|w| w.is_palindrome()).count())
    }

    /// The observed one-letter extensions `{x : xw ∈ L}` and `{y : wy ∈ L}`.
    pub fn extensions(&self, w: &Word) -> Result<(BTreeSet<char>, BTreeSet<char>)> {
        let n = w.len();
        if n + 1 > self.depth {
            return Err(Error::InsufficientDepth { needed: n + 1, depth: self.depth });
        }
        let mut left = BTreeSet::new();
        let mut right = BTreeSet::new();
        for z in &self.sets[n + 1] {
            let letters = z.letters();
            if letters[1..] == *w.letters() {
                left.insert(letters[0]);
            }
            if letters[..n] == *w.letters() {
                right.insert(letters[n]);
            }
        }
        Ok((left, right))
    }

    /// All bispecial words of length at most `maxlen` (at least two left
    /// and two right extensions), including `ε` when `#L_1 > 1`.
    pub fn bispecials(&self, maxlen: usize) -> Result<Vec<Word>> {
        if maxlen + 2 > self.depth {
            return Err(Error::InsufficientDepth { needed: maxlen + 2, depth: self.depth });
        }
        let mut out = Vec::new();
        for n in 0..=maxlen {
            let (lefts, rights) = self.extension_maps(n);
            for (w, ls) in &lefts {
                if ls.len() >= 2 && rights.get(w).is_some_and(|rs| rs.len() >= 2) {
                    out.push(w.clone());
                }
            }
        }
        Ok(out)
    }

    fn extension_maps(
        &self,
        n: usize,
    ) -> (BTreeMap<Word, BTreeSet<char>>, BTreeMap<Word, BTreeSet<char>>) {
        let mut lefts: BTreeMap<Word, BTreeSet<char>> = BTreeMap::new();
        let mut rights: BTreeMap<Word, BTreeSet<char>> = BTreeMap::new();
        for z in &self.sets[n + 1] {
            let letters = z.letters();
            lefts.entry(z.subword(1, n + 1)).or_default().insert(letters[0]);
            rights.entry(z.subword(0, n)).or_default().insert(letters[n]);
        }
        (lefts, rights)
    }

    /// The ordered bilateral extension graph of `w`.
    pub fn extension_graph(&self, w: &Word, pair: &OrderPair) -> Result<ExtensionGraph> {
        if w.len() + 2 > self.depth {
            return Err(Error::InsufficientDepth { needed: w.len() + 2, depth: self.depth });
        }
        if !self.alphabet.is_subset_of(pair.alphabet()) {
            return Err(Error::AlphabetMismatch);
        }
        let (left, right) = self.extensions(w)?;
        let n = w.len();
        let mut edges = BTreeSet::new();
        for z in &self.sets[n + 2] {
            let letters = z.letters();
            if letters[1..n + 1] == *w.letters() {
                edges.insert((letters[0], letters[n + 1]));
            }
        }
        ExtensionGraph::new(
            w.clone(),
            pair.clone(),
            left.into_iter().collect(),
            right.into_iter().collect(),
            edges,
        )
    }

    /// Check the order condition on every bispecial of length at most
    /// `maxlen`.
    pub fn order_condition(&self, pair: &OrderPair, maxlen: usize) -> Result<OcVerdict> {
        if maxlen + 2 > self.depth {
            return Err(Error::InsufficientDepth { needed: maxlen + 2, depth: self.depth });
        }
        if !self.alphabet.is_subset_of(pair.alphabet()) {
            return Err(Error::AlphabetMismatch);
        }
        for w in self.bispecials(maxlen)? {
            let graph = self.extension_graph(&w, pair)?;
            if let Some((first, second)) = graph.find_crossing() {
                return Ok(OcVerdict::Violated(OcViolation { bispecial: w, first, second }));
            }
        }
        Ok(OcVerdict::Holds)
    }

    /// All order pairs on the language's alphabet satisfying the order
    /// condition up to `maxlen`.
    pub fn order_pairs_satisfying(&self, maxlen: usize) -> Result<Vec<OrderPair>> {
        let mut out = Vec::new();
        for pair in OrderPair::all_pairs(&self.alphabet)? {
            if self.order_condition(&pair, maxlen)? == OcVerdict::Holds {
                out.push(pair);
            }
        }
        Ok(out)
    }

    /// All connection witnesses on bispecials of length at most `maxlen`.
    /// Only defined when the order condition holds there.
    pub fn connections(&self, pair: &OrderPair, maxlen: usize) -> Result<Vec<Connection>> {
        match self.order_condition(pair, maxlen)? {
            OcVerdict::Holds => {}
            OcVerdict::Violated(v) => return Err(Error::OrderConditionViolated(v)),
        }
        let a_letters = pair.order_a().ascending();
        let d_letters = pair.order_d().ascending();
        let mut out = Vec::new();
        for w in self.bispecials(maxlen)? {
            for aw in a_letters.windows(2) {
                for dw in d_letters.windows(2) {
                    let (a, a_next) = (aw[0], aw[1]);
                    let (b, b_next) = (dw[0], dw[1]);
                    let awb = self.two_sided(a, &w, b);
                    let anwbn = self.two_sided(a_next, &w, b_next);
                    let awbn = self.two_sided(a, &w, b_next);
                    let anwb = self.two_sided(a_next, &w, b);
                    if awb && anwbn && !awbn && !anwb {
                        out.push(Connection { bispecial: w.clone(), a, a_next, b, b_next });
                    }
                }
            }
        }
        Ok(out)
    }

    fn two_sided(&self, x: char, w: &Word, y: char) -> bool {
        let mut letters = Vec::with_capacity(w.len() + 2);
        letters.push(x);
        letters.extend_from_slice(w.letters());
        letters.push(y);
        self.contains(&Word::new(letters))
    }

    /// All full return words of `w` discoverable within depth: the words
    /// starting and ending with `w` and containing exactly two occurrences
    /// of it. Errors if an occurrence at the materialization frontier has
    /// no completed return; finite-word sources should be materialized one
    /// level past their longest word so the frontier level is empty.
    pub fn full_return_words(&self, w: &Word) -> Result<BTreeSet<Word>> {
        if !self.contains(w) {
            return Err(Error::WordNotInLanguage { word: w.clone() });
        }
        let mut out = BTreeSet::new();
        for n in w.len() + 1..=self.depth {
            for z in &self.sets[n] {
                if z.starts_with(w) && z.ends_with(w) && z.occurrences(w).len() == 2 {
                    out.insert(z.clone());
                }
            }
        }
        // a frontier word starting with w but never re-meeting it may still
        // close beyond the horizon
        for z in &self.sets[self.depth] {
            if z.starts_with(w) && z.occurrences(w).len() == 1 {
                return Err(Error::DepthExhausted { word: w.clone() });
            }
        }
        Ok(out)
    }

    /// Suffix (resp. prefix) return words of `w`: full returns with the
    /// leading (resp. trailing) `w` removed.
    pub fn return_words(&self, w: &Word, kind: ReturnKind) -> Result<BTreeSet<Word>> {
        let full = self.full_return_words(w)?;
        Ok(full
            .into_iter()
            .map(|z| match kind {
                ReturnKind::Suffix => z.subword(w.len(), z.len()),
                ReturnKind::Prefix => z.subword(0, z.len() - w.len()),
            })
            .collect())
    }

    /// Check that every full return word to every palindrome of length at
    /// most `maxlen` is itself a palindrome.
    pub fn richness_check(&self, maxlen: usize) -> Result<RichVerdict> {
        if maxlen * 2 > self.depth {
            return Err(Error::InsufficientDepth { needed: maxlen * 2, depth: self.depth });
        }
        for n in 0..=maxlen {
            let palindromes: Vec<&Word> =
                self.sets[n].iter().filter(|w| w.is_palindrome()).collect();
            for p in palindromes {
                for z in self.full_return_words(p)? {
                    if !z.is_palindrome() {
                        return Ok(RichVerdict::Counterexample {
                            palindrome: p.clone(),
                            full_return: z,
                        });
                    }
                }
            }
        }
        Ok(RichVerdict::RichUpTo(maxlen))
    }

    /// Extend `v` by unique extensions (right while not right special,
    /// then left while not left special, alternating) until bispecial.
    pub fn shortest_bispecial_extension(&self, v: &Word, cap: usize) -> Result<BispecialClosure> {
        if !self.contains(v) {
            return Err(Error::WordNotInLanguage { word: v.clone() });
        }
        let mut current = v.clone();
        loop {
            if current.len() > cap {
                return Ok(BispecialClosure::Abandoned(AbandonReason::CapExceeded));
            }
            if current.len() + 1 > self.depth {
                return Ok(BispecialClosure::Abandoned(AbandonReason::DepthExhausted));
            }
            let (left, right) = self.extensions(&current)?;
            if left.len() >= 2 && right.len() >= 2 {
                return Ok(BispecialClosure::Found(current));
            }
            if right.len() < 2 {
                match right.iter().next() {
                    Some(&y) => {
                        let mut letters = current.letters().to_vec();
                        letters.push(y);
                        current = Word::new(letters);
                    }
                    None => return Ok(BispecialClosure::Abandoned(AbandonReason::NoExtension)),
                }
            } else {
                match left.iter().next() {
                    Some(&x) => {
                        let mut letters = vec![x];
                        letters.extend_from_slice(current.letters());
                        current = Word::new(letters);
                    }
                    None => return Ok(BispecialClosure::Abandoned(AbandonReason::NoExtension)),
                }
            }
        }
    }
}

/// Whether a return word attaches after (`Suffix`) or before (`Prefix`)
/// the base word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReturnKind {
    Suffix,
    Prefix,
}

/// Verdict of an order-condition check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OcVerdict {
    Holds,
    Violated(OcViolation),
}

/// A concrete crossing witness: two extension edges of one bispecial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OcViolation {
    pub bispecial: Word,
    pub first: (char, char),
    pub second: (char, char),
}

impl fmt::Display for OcViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "bispecial \"{}\" has crossing edges ({},{}) and ({},{})",
            self.bispecial, self.first.0, self.first.1, self.second.0, self.second.1
        )
    }
}

/// A connection: consecutive letters on both sides with both crossing
/// completions absent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Connection {
    pub bispecial: Word,
    pub a: char,
    pub a_next: char,
    pub b: char,
    pub b_next: char,
}

impl fmt::Display for Connection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "connection at \"{}\": {}·w·{} and {}·w·{} present, crossings absent",
            self.bispecial, self.a, self.b, self.a_next, self.b_next
        )
    }
}

/// Verdict of a richness check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RichVerdict {
    RichUpTo(usize),
    Counterexample { palindrome: Word, full_return: Word },
}

/// Result of a shortest-bispecial-extension walk.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BispecialClosure {
    Found(Word),
    Abandoned(AbandonReason),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AbandonReason {
    CapExceeded,
    NoExtension,
    DepthExhausted,
}

/// The ordered bilateral extension graph of a word: left extensions on
/// one line sorted by `<_A`, right extensions on the other sorted by
/// `<_D`, an edge `(x, y)` for each observed `xwy`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionGraph {
    word: Word,
    pair: OrderPair,
    left: Vec<char>,
    right: Vec<char>,
    edges: BTreeSet<(char, char)>,
}

impl ExtensionGraph {
    pub fn new(
        word: Word,
        pair: OrderPair,
        left: Vec<char>,
        right: Vec<char>,
        edges: BTreeSet<(char, char)>,
    ) -> Result<Self> {
        let mut left = left;
        let mut right = right;
        for &c in left.iter().chain(right.iter()) {
            if !pair.alphabet().contains(c) {
                return Err(Error::LetterOutsideAlphabet { letter: c });
            }
        }
        pair.order_a().sort(&mut left);
        pair.order_d().sort(&mut right);
        for &(x, y) in &edges {
            if !left.contains(&x) || !right.contains(&y) {
                return Err(Error::Internal {
                    message: alloc::format!("edge ({x},{y}) has an endpoint off the vertex lists"),
                });
            }
        }
        Ok(Self { word, pair, left, right, edges })
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn pair(&self) -> &OrderPair {
        &self.pair
    }

    pub fn left_vertices(&self) -> &[char] {
        &self.left
    }

    pub fn right_vertices(&self) -> &[char] {
        &self.right
    }

    pub fn edges(&self) -> &BTreeSet<(char, char)> {
        &self.edges
    }

    /// Two edges cross when they disagree between the two orders; edges
    /// sharing an endpoint never cross.
    pub fn edges_cross(&self, e1: (char, char), e2: (char, char)) -> bool {
        if e1.0 == e2.0 || e1.1 == e2.1 {
            return false;
        }
        self.pair.order_a().lt(e1.0, e2.0) != self.pair.order_d().lt(e1.1, e2.1)
    }

    pub fn find_crossing(&self) -> Option<((char, char), (char, char))> {
        let edges: Vec<(char, char)> = self.edges.iter().copied().collect();
        for (i, &e1) in edges.iter().enumerate() {
            for &e2 in &edges[i + 1..] {
                if self.edges_cross(e1, e2) {
                    return Some((e1, e2));
                }
            }
        }
        None
    }

    /// True when every vertex on both sides meets at least one edge.
    pub fn all_vertices_covered(&self) -> bool {
        self.left.iter().all(|&x| self.edges.iter().any(|&(a, _)| a == x))
            && self.right.iter().all(|&y| self.edges.iter().any(|&(_, b)| b == y))
    }

    /// The graph of the reversed word in a reversal-closed language:
    /// vertex sides swap and every edge flips.
    pub fn mirrored(&self) -> Result<ExtensionGraph> {
        ExtensionGraph::new(
            self.word.reverse(),
            self.pair.clone(),
            self.right.clone(),
            self.left.clone(),
            self.edges.iter().map(|&(x, y)| (y, x)).collect(),
        )
    }

    pub fn with_edges(&self, edges: BTreeSet<(char, char)>) -> Result<ExtensionGraph> {
        ExtensionGraph::new(
            self.word.clone(),
            self.pair.clone(),
            self.left.clone(),
            self.right.clone(),
            edges,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(s: &str) -> OrderPair {
        s.parse().unwrap()
    }

    fn words(list: &[&str]) -> Vec<Word> {
        list.iter().map(|&s| Word::from(s)).collect()
    }

    fn power(w: &str, depth: usize) -> FactorialLanguage {
        build_language(&LanguageSource::PowerWord(Word::from(w)), depth).unwrap()
    }

    fn finite(list: &[&str], depth: usize) -> FactorialLanguage {
        build_language(&LanguageSource::FiniteWords(words(list)), depth).unwrap()
    }

    fn set(list: &[&str]) -> BTreeSet<Word> {
        list.iter().map(|&s| Word::from(s)).collect()
    }

    /// The period-doubling word prefix: fixed point of 0 -> 01, 1 -> 00.
    fn period_doubling_prefix(iterations: usize) -> Word {
        let mut w = Word::from("0");
        for _ in 0..iterations {
            let mut next = Vec::new();
            for &c in w.letters() {
                match c {
                    '0' => next.extend(['0', '1']),
                    _ => next.extend(['0', '0']),
                }
            }
            w = Word::new(next);
        }
        w
    }

    #[test]
    fn build_power_word() {
        let lang = power("1312", 3);
        assert_eq!(*lang.factor_set(3).unwrap(), set(&["131", "312", "121", "213"]));
        assert_eq!(lang.factor_complexity(0).unwrap(), 1);
    }

    #[test]
    fn build_finite_words() {
        let lang = finite(&["11", "22"], 2);
        assert_eq!(*lang.factor_set(2).unwrap(), set(&["11", "22"]));
        assert!(!lang.is_extendable());
    }

    #[test]
    fn build_bi_infinite_example() {
        // the two bi-infinite words of the non-reversal-closed example
        let entries = vec![
            EventuallyPeriodicWord::new(Word::from("1312"), Word::empty(), Word::from("212"))
                .unwrap(),
            EventuallyPeriodicWord::new(Word::from("3121"), Word::empty(), Word::from("221"))
                .unwrap(),
        ];
        let lang = build_language(&LanguageSource::BiInfinite(entries), 2).unwrap();
        assert_eq!(*lang.factor_set(2).unwrap(), set(&["13", "31", "12", "21", "22"]));
    }

    #[test]
    fn depth_cap_enforced() {
        let r = build_language(&LanguageSource::PowerWord(Word::from("1")), 65);
        assert!(matches!(r, Err(Error::DepthCap { requested: 65, cap: 64 })));
    }

    #[test]
    fn extensions_examples() {
        let lang = power("1312", 4);
        let (l, r) = lang.extensions(&Word::from("1")).unwrap();
        assert_eq!(l, BTreeSet::from(['2', '3']));
        assert_eq!(r, BTreeSet::from(['2', '3']));
        let (l, r) = lang.extensions(&Word::from("13")).unwrap();
        assert_eq!(l, BTreeSet::from(['2']));
        assert_eq!(r, BTreeSet::from(['1']));
        let lang2 = finite(&["11", "22"], 2);
        let (l, r) = lang2.extensions(&Word::from("1")).unwrap();
        assert_eq!(l, BTreeSet::from(['1']));
        assert_eq!(r, BTreeSet::from(['1']));
        // absent word: empty extensions, not an error
        let (l, r) = lang.extensions(&Word::from("33")).unwrap();
        assert!(l.is_empty() && r.is_empty());
    }

    #[test]
    fn bispecials_examples() {
        let lang = power("1312", 4);
        assert_eq!(lang.bispecials(2).unwrap(), words(&["", "1"]));
        let lang2 = finite(&["11", "22"], 5);
        assert_eq!(lang2.bispecials(3).unwrap(), words(&[""]));
        let pd = finite(
            &[&alloc::format!("{}", period_doubling_prefix(6))],
            16,
        );
        let bis = pd.bispecials(1).unwrap();
        assert!(bis.contains(&Word::empty()));
        assert!(bis.contains(&Word::from("0")));
    }

    #[test]
    fn bispecials_depth_guard() {
        let lang = power("1312", 4);
        assert!(matches!(lang.bispecials(3), Err(Error::InsufficientDepth { .. })));
    }

    #[test]
    fn extension_graph_examples() {
        let lang = finite(&["11", "22"], 2);
        let g = lang.extension_graph(&Word::empty(), &pair("12|12")).unwrap();
        assert_eq!(g.left_vertices(), &['1', '2']);
        assert_eq!(g.right_vertices(), &['1', '2']);
        assert_eq!(*g.edges(), BTreeSet::from([('1', '1'), ('2', '2')]));

        let lang2 = power("1312", 4);
        let g2 = lang2.extension_graph(&Word::from("1"), &pair("321|123")).unwrap();
        assert_eq!(*g2.edges(), BTreeSet::from([('2', '3'), ('3', '2')]));
        // vertices sorted by the pair's orders
        assert_eq!(g2.left_vertices(), &['3', '2']);
        assert_eq!(g2.right_vertices(), &['2', '3']);

        let g3 = lang2.extension_graph(&Word::from("33"), &pair("321|123")).unwrap();
        assert!(g3.edges().is_empty());
    }

    #[test]
    fn order_condition_examples() {
        let lang = finite(&["3322"], 4);
        assert_eq!(lang.order_condition(&pair("231|123"), 2).unwrap(), OcVerdict::Holds);

        let lang_ee = finite(&["3122", "1212"], 4);
        assert_eq!(lang_ee.order_condition(&pair("321|123"), 2).unwrap(), OcVerdict::Holds);
        let lang_ee_rev = finite(&["3122", "1212", "2213", "2121"], 4);
        assert!(matches!(
            lang_ee_rev.order_condition(&pair("321|123"), 2).unwrap(),
            OcVerdict::Violated(_)
        ));

        let lang_1312 = power("1312", 4);
        assert_eq!(lang_1312.order_condition(&pair("321|123"), 2).unwrap(), OcVerdict::Holds);
    }

    #[test]
    fn order_pairs_trivial() {
        let lang = finite(&["1"], 1);
        assert_eq!(lang.order_pairs_satisfying(0).err().unwrap(),
            Error::InsufficientDepth { needed: 2, depth: 1 });
        let lang = finite(&["1"], 3);
        assert_eq!(lang.order_pairs_satisfying(1).unwrap().len(), 1);
    }

    #[test]
    fn order_pairs_period_doubling_has_no_symmetric_pair() {
        let pd = finite(&[&alloc::format!("{}", period_doubling_prefix(6))], 8);
        let sat = pd.order_pairs_satisfying(3).unwrap();
        assert!(sat.iter().all(|p| !p.is_symmetric()));
    }

    #[test]
    fn connections_examples() {
        // the coding of (1312)^ω has connections
        let lang = power("1312", 12);
        let c = lang.connections(&pair("321|123"), 10).unwrap();
        assert!(!c.is_empty());
        assert!(c.iter().any(|w| w.bispecial == Word::empty()));
        assert!(c.iter().any(|w| w.bispecial == Word::from("1")));

        // the sublanguage generated by (1312)^ω and (221)^ω has its
        // connections exactly on the bispecials 12 and 21
        let entries = vec![
            EventuallyPeriodicWord::new(Word::from("1312"), Word::empty(), Word::from("1312"))
                .unwrap(),
            EventuallyPeriodicWord::new(Word::from("221"), Word::empty(), Word::from("221"))
                .unwrap(),
        ];
        let lp = build_language(&LanguageSource::BiInfinite(entries), 12).unwrap();
        let cp = lp.connections(&pair("321|123"), 8).unwrap();
        assert!(!cp.is_empty());
        let on: BTreeSet<Word> = cp.iter().map(|w| w.bispecial.clone()).collect();
        assert_eq!(on, set(&["12", "21"]));

        // the full bi-infinite example has no connection
        let entries = vec![
            EventuallyPeriodicWord::new(Word::from("1312"), Word::empty(), Word::from("212"))
                .unwrap(),
            EventuallyPeriodicWord::new(Word::from("3121"), Word::empty(), Word::from("221"))
                .unwrap(),
        ];
        let le = build_language(&LanguageSource::BiInfinite(entries), 12).unwrap();
        assert!(le.connections(&pair("321|123"), 8).unwrap().is_empty());
    }

    #[test]
    fn connections_require_order_condition() {
        let lang = finite(&["3122", "1212", "2213", "2121"], 4);
        assert!(matches!(
            lang.connections(&pair("321|123"), 2),
            Err(Error::OrderConditionViolated(_))
        ));
    }

    #[test]
    fn return_words_examples() {
        let lang = power("1312", 10);
        let suffix = lang.return_words(&Word::from("1"), ReturnKind::Suffix).unwrap();
        assert_eq!(suffix, set(&["31", "21"]));
        let lang2 = power("11", 4);
        assert_eq!(
            lang2.return_words(&Word::from("1"), ReturnKind::Suffix).unwrap(),
            set(&["1"])
        );
        // prefix returns of the same word
        let prefix = lang.return_words(&Word::from("1"), ReturnKind::Prefix).unwrap();
        assert_eq!(prefix, set(&["13", "12"]));
    }

    #[test]
    fn return_words_depth_exhaustion() {
        let lang = power("1312", 2);
        assert!(matches!(
            lang.full_return_words(&Word::from("1")),
            Err(Error::DepthExhausted { .. })
        ));
    }

    #[test]
    fn return_words_close_in_finite_languages_with_margin() {
        // at depth 2 the frontier word "12" leaves the return of "1" open;
        // one extra level shows the language simply ends there
        let tight = finite(&["11", "22", "12"], 2);
        assert!(matches!(
            tight.full_return_words(&Word::from("1")),
            Err(Error::DepthExhausted { .. })
        ));
        let roomy = finite(&["11", "22", "12"], 3);
        assert_eq!(roomy.full_return_words(&Word::from("1")).unwrap(), set(&["11"]));
    }

    #[test]
    fn richness_examples() {
        let lang = power("1312", 8);
        assert_eq!(lang.richness_check(3).unwrap(), RichVerdict::RichUpTo(3));
        let full = lang.full_return_words(&Word::from("1")).unwrap();
        assert_eq!(full, set(&["131", "121"]));

        let pd = finite(&[&alloc::format!("{}", period_doubling_prefix(8))], 40);
        assert_eq!(pd.richness_check(8).unwrap(), RichVerdict::RichUpTo(8));
    }

    #[test]
    fn complexity_examples() {
        let lang = power("1312", 6);
        // three distinct letters, then the four factors of a period-4 word
        assert_eq!(lang.factor_complexity(1).unwrap(), 3);
        for n in 2..=3 {
            assert_eq!(lang.factor_complexity(n).unwrap(), 4);
        }
        assert_eq!(lang.factor_complexity(0).unwrap(), 1);
        assert_eq!(lang.palindromic_complexity(0).unwrap(), 1);
        assert_eq!(lang.palindromic_complexity(2).unwrap(), 0);
        assert_eq!(lang.palindromic_complexity(3).unwrap(), 2);
    }

    #[test]
    fn bispecial_closure_examples() {
        let lang = power("1312", 6);
        // already bispecial stays put
        assert_eq!(
            lang.shortest_bispecial_extension(&Word::from("1"), 10).unwrap(),
            BispecialClosure::Found(Word::from("1"))
        );
        // in a periodic language nothing of length >= 2 is right special,
        // so the walk from "3" extends right until it runs out of room
        assert_eq!(
            lang.shortest_bispecial_extension(&Word::from("3"), 10).unwrap(),
            BispecialClosure::Abandoned(AbandonReason::DepthExhausted)
        );
        assert_eq!(
            lang.shortest_bispecial_extension(&Word::from("3"), 4).unwrap(),
            BispecialClosure::Abandoned(AbandonReason::CapExceeded)
        );
    }

    #[test]
    fn factor_closure_validated() {
        let alphabet = Alphabet::new("12".chars()).unwrap();
        let mut sets = vec![BTreeSet::from([Word::empty()]), BTreeSet::new(), BTreeSet::new()];
        sets[1].insert(Word::from("1"));
        sets[2].insert(Word::from("12"));
        assert!(matches!(
            FactorialLanguage::from_sets(alphabet, sets, true),
            Err(Error::Internal { .. })
        ));
    }
}
