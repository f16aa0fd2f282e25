//! Alphabets, total orders on them, and order pairs.
//!
//! An interval exchange is described here by a pair of total orders
//! `(<_A, <_D)` on its alphabet: `<_D` is the left-to-right order of the
//! defining intervals, `<_A` of the image intervals. The pair is symmetric
//! when the two orders are mutual reverses. Orders serialize as the string
//! of their letters in ascending order, pairs as `"ordA|ordD"` (so
//! `"321|123"` reads "3 < 2 < 1 on the image side, 1 < 2 < 3 on the
//! defining side").

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use crate::error::Error;
use crate::word::Word;
use crate::Result;

/// Guard for enumerations that are factorial in the alphabet size.
pub const ENUMERATION_GUARD: usize = 6;

/// A finite set of single-character letters, stored sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Alphabet {
    letters: Vec<char>,
}

impl Alphabet {
    pub fn new(letters: impl IntoIterator<Item = char>) -> Result<Self> {
        let mut letters: Vec<char> = letters.into_iter().collect();
        letters.sort_unstable();
        for pair in letters.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateLetter { letter: pair[0] });
            }
        }
        if letters.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        Ok(Self { letters })
    }

    /// The distinct letters occurring in `w`.
    pub fn of_word(w: &Word) -> Result<Self> {
        let mut letters: Vec<char> = w.letters().to_vec();
        letters.sort_unstable();
        letters.dedup();
        if letters.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok(Self { letters })
    }

    /// The distinct letters occurring in any of the given words.
    pub fn of_words<'a>(words: impl IntoIterator<Item = &'a Word>) -> Result<Self> {
        let mut letters: Vec<char> = Vec::new();
        for w in words {
            letters.extend_from_slice(w.letters());
        }
        letters.sort_unstable();
        letters.dedup();
        if letters.is_empty() {
            return Err(Error::EmptyWordSet);
        }
        Ok(Self { letters })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn contains(&self, letter: char) -> bool {
        self.letters.binary_search(&letter).is_ok()
    }

    /// Letters in their canonical (sorted) order. This order carries no
    /// dynamical meaning; comparisons go through [`TotalOrder`].
    pub fn letters(&self) -> &[char] {
        &self.letters
    }

    pub fn is_subset_of(&self, other: &Alphabet) -> bool {
        self.letters.iter().all(|&c| other.contains(c))
    }

    pub fn check_word(&self, w: &Word) -> Result<()> {
        for &c in w.letters() {
            if !self.contains(c) {
                return Err(Error::LetterOutsideAlphabet { letter: c });
            }
        }
        Ok(())
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.letters {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// A strict total order on an alphabet, kept as the letters in ascending
/// order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TotalOrder {
    alphabet: Alphabet,
    ascending: Vec<char>,
}

impl TotalOrder {
    pub fn new(ascending: impl IntoIterator<Item = char>) -> Result<Self> {
        let ascending: Vec<char> = ascending.into_iter().collect();
        let alphabet = Alphabet::new(ascending.iter().copied())?;
        Ok(Self { alphabet, ascending })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// Letters from smallest to largest.
    pub fn ascending(&self) -> &[char] {
        &self.ascending
    }

    pub fn rank(&self, letter: char) -> Result<usize> {
        self.ascending
            .iter()
            .position(|&c| c == letter)
            .ok_or(Error::LetterOutsideAlphabet { letter })
    }

    /// Compare two letters already known to be in the alphabet.
    pub fn cmp_letters(&self, a: char, b: char) -> Ordering {
        let ra = self.rank(a).expect("letter validated against alphabet");
        let rb = self.rank(b).expect("letter validated against alphabet");
        ra.cmp(&rb)
    }

    pub fn lt(&self, a: char, b: char) -> bool {
        self.cmp_letters(a, b) == Ordering::Less
    }

    /// Lexicographic comparison of words under this order.
    pub fn lex_cmp(&self, u: &[char], v: &[char]) -> Ordering {
        for (a, b) in u.iter().zip(v.iter()) {
            match self.cmp_letters(*a, *b) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        u.len().cmp(&v.len())
    }

    pub fn reversed(&self) -> TotalOrder {
        let mut ascending = self.ascending.clone();
        ascending.reverse();
        TotalOrder { alphabet: self.alphabet.clone(), ascending }
    }

    /// Sort letters ascending under this order.
    pub fn sort(&self, letters: &mut [char]) {
        letters.sort_by(|&a, &b| self.cmp_letters(a, b));
    }

    /// All `r!` total orders on the alphabet, in a deterministic order.
    pub fn all_orders(alphabet: &Alphabet) -> Result<Vec<TotalOrder>> {
        if alphabet.len() > ENUMERATION_GUARD {
            return Err(Error::EnumerationTooLarge {
                size: alphabet.len(),
                cap: ENUMERATION_GUARD,
            });
        }
        let mut out = Vec::new();
        let mut current: Vec<char> = Vec::new();
        let mut pool: Vec<char> = alphabet.letters().to_vec();
        permute(&mut current, &mut pool, &mut out, alphabet);
        Ok(out)
    }
}

fn permute(current: &mut Vec<char>, pool: &mut Vec<char>, out: &mut Vec<TotalOrder>, alphabet: &Alphabet) {
    if pool.is_empty() {
        out.push(TotalOrder { alphabet: alphabet.clone(), ascending: current.clone() });
        return;
    }
    for i in 0..pool.len() {
        let c = pool.remove(i);
        current.push(c);
        permute(current, pool, out, alphabet);
        current.pop();
        pool.insert(i, c);
    }
}

impl fmt::Display for TotalOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.ascending {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for TotalOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TotalOrder::new(s.chars())
    }
}

/// The pair of orders `(<_A, <_D)` defining clustering and interval
/// exchanges; both orders are over the same alphabet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderPair {
    order_a: TotalOrder,
    order_d: TotalOrder,
}

impl OrderPair {
    pub fn new(order_a: TotalOrder, order_d: TotalOrder) -> Result<Self> {
        if order_a.alphabet() != order_d.alphabet() {
            return Err(Error::AlphabetMismatch);
        }
        Ok(Self { order_a, order_d })
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.order_a.alphabet()
    }

    pub fn order_a(&self) -> &TotalOrder {
        &self.order_a
    }

    pub fn order_d(&self) -> &TotalOrder {
        &self.order_d
    }

    /// True when `<_A` is the exact reverse of `<_D`.
    pub fn is_symmetric(&self) -> bool {
        let ra = self.order_a.ascending();
        let rd = self.order_d.ascending();
        ra.iter().rev().zip(rd.iter()).all(|(a, b)| a == b)
    }

    pub fn reversed(&self) -> OrderPair {
        OrderPair { order_a: self.order_a.reversed(), order_d: self.order_d.reversed() }
    }

    /// Restrict both orders to a sub-alphabet, keeping their relative
    /// rankings.
    pub fn restricted_to(&self, alphabet: &Alphabet) -> Result<OrderPair> {
        if !alphabet.is_subset_of(self.alphabet()) {
            return Err(Error::AlphabetMismatch);
        }
        let keep = |o: &TotalOrder| {
            TotalOrder::new(o.ascending().iter().copied().filter(|&c| alphabet.contains(c)))
        };
        OrderPair::new(keep(&self.order_a)?, keep(&self.order_d)?)
    }

    /// All `r!^2` pairs on the alphabet.
    pub fn all_pairs(alphabet: &Alphabet) -> Result<Vec<OrderPair>> {
        let orders = TotalOrder::all_orders(alphabet)?;
        let mut out = Vec::with_capacity(orders.len() * orders.len());
        for a in &orders {
            for d in &orders {
                out.push(OrderPair { order_a: a.clone(), order_d: d.clone() });
            }
        }
        Ok(out)
    }

    /// The `r!` symmetric pairs on the alphabet.
    pub fn symmetric_pairs(alphabet: &Alphabet) -> Result<Vec<OrderPair>> {
        let orders = TotalOrder::all_orders(alphabet)?;
        Ok(orders
            .into_iter()
            .map(|d| OrderPair { order_a: d.reversed(), order_d: d })
            .collect())
    }
}

impl fmt::Display for OrderPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.order_a, self.order_d)
    }
}

impl FromStr for OrderPair {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (a, d) = s.split_once('|').ok_or_else(|| Error::Parse {
            message: String::from("order pair must be \"ordA|ordD\""),
        })?;
        OrderPair::new(a.parse()?, d.parse()?)
    }
}
