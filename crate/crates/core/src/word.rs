//! Finite words over single-character letters.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::Error;
use crate::Result;

/// A finite sequence of letters. The derived `Ord` is the plain `char`
/// lexicographic order and is only used for deterministic storage; all
/// dynamically meaningful comparisons go through a
/// [`TotalOrder`](crate::alphabet::TotalOrder).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word {
    letters: Vec<char>,
}

impl Word {
    pub fn new(letters: Vec<char>) -> Self {
        Self { letters }
    }

    pub fn empty() -> Self {
        Self { letters: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[char] {
        &self.letters
    }

    pub fn get(&self, i: usize) -> Option<char> {
        self.letters.get(i).copied()
    }

    /// The reverse `w̄` of the word.
    pub fn reverse(&self) -> Word {
        Word { letters: self.letters.iter().rev().copied().collect() }
    }

    /// True iff the word equals its reverse. The empty word is a palindrome.
    pub fn is_palindrome(&self) -> bool {
        let n = self.letters.len();
        (0..n / 2).all(|i| self.letters[i] == self.letters[n - 1 - i])
    }

    /// True iff the word is not a proper power of a shorter word.
    pub fn is_primitive(&self) -> Result<bool> {
        let n = self.letters.len();
        if n == 0 {
            return Err(Error::EmptyWord);
        }
        for d in 1..n {
            if n.is_multiple_of(d) && (d..n).all(|i| self.letters[i] == self.letters[i % d]) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    pub fn repeat(&self, times: usize) -> Word {
        let mut letters = Vec::with_capacity(self.letters.len() * times);
        for _ in 0..times {
            letters.extend_from_slice(&self.letters);
        }
        Word { letters }
    }

    pub fn subword(&self, start: usize, end: usize) -> Word {
        Word { letters: self.letters[start..end].to_vec() }
    }

    pub fn starts_with(&self, prefix: &Word) -> bool {
        self.letters.starts_with(&prefix.letters)
    }

    pub fn ends_with(&self, suffix: &Word) -> bool {
        self.letters.ends_with(&suffix.letters)
    }

    /// All (possibly overlapping) occurrence positions of `sub` in `self`.
    /// The empty word occurs at every position `0..=len`.
    pub fn occurrences(&self, sub: &Word) -> Vec<usize> {
        let n = self.letters.len();
        let m = sub.letters.len();
        if m > n {
            return Vec::new();
        }
        (0..=n - m)
            .filter(|&i| self.letters[i..i + m] == sub.letters[..])
            .collect()
    }

    pub fn contains_factor(&self, sub: &Word) -> bool {
        !self.occurrences(sub).is_empty()
    }

    /// All distinct factors of length `n`.
    pub fn factors(&self, n: usize) -> Vec<Word> {
        if n > self.letters.len() {
            return Vec::new();
        }
        let mut out: Vec<Word> = (0..=self.letters.len() - n)
            .map(|i| self.subword(i, i + n))
            .collect();
        out.sort();
        out.dedup();
        out
    }
}

/// Reverse of a word; `reverse(reverse(w)) == w`.
pub fn reverse(w: &Word) -> Word {
    w.reverse()
}

pub fn is_palindrome(w: &Word) -> bool {
    w.is_palindrome()
}

pub fn is_primitive(w: &Word) -> Result<bool> {
    w.is_primitive()
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.letters {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(Word { letters: s.chars().collect() })
    }
}

impl From<&str> for Word {
    fn from(s: &str) -> Self {
        Word { letters: s.chars().collect() }
    }
}

impl From<String> for Word {
    fn from(s: String) -> Self {
        Word { letters: s.chars().collect() }
    }
}
