//! Return-word morphisms, derived orders, and derived words.
//!
//! Given distinct return words `U_1, ..., U_s` of a word `w`, the full
//! return words `z_i` (each starting and ending with `w`) carry two
//! orders: `<_Dw` compares them lexicographically under `<_D` and `<_Aw`
//! antilexicographically (right-aligned) under `<_A`. Return-word
//! validity guarantees no `z_i` is a prefix or suffix of another, so both
//! comparison indices exist. The same recipe covers suffix and prefix
//! return words, which label the same set of full returns from opposite
//! ends.

use alloc::collections::BTreeMap;
use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::alphabet::{Alphabet, OrderPair, TotalOrder};
use crate::error::Error;
use crate::language::{build_language, LanguageSource, OcVerdict, ReturnKind};
use crate::word::Word;
use crate::Result;

/// A morphism from a label alphabet to words, `a_i -> U_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    source: Alphabet,
    images: BTreeMap<char, Word>,
}

impl Morphism {
    /// Images must be nonempty and pairwise distinct.
    pub fn new(images: Vec<(char, Word)>) -> Result<Self> {
        let source = Alphabet::new(images.iter().map(|(c, _)| *c))?;
        let mut seen: BTreeSet<&Word> = BTreeSet::new();
        for (_, u) in &images {
            if u.is_empty() {
                return Err(Error::EmptyWord);
            }
            if !seen.insert(u) {
                return Err(Error::DuplicateReturnWord { word: u.clone() });
            }
        }
        Ok(Self { source, images: images.into_iter().collect() })
    }

    pub fn source_alphabet(&self) -> &Alphabet {
        &self.source
    }

    pub fn image(&self, letter: char) -> Result<&Word> {
        self.images.get(&letter).ok_or(Error::LetterOutsideAlphabet { letter })
    }

    /// Images in label order.
    pub fn images(&self) -> impl Iterator<Item = (char, &Word)> {
        self.images.iter().map(|(&c, w)| (c, w))
    }

    /// Apply to a word over the source alphabet.
    pub fn apply(&self, v: &Word) -> Result<Word> {
        let mut letters = Vec::new();
        for &c in v.letters() {
            letters.extend_from_slice(self.image(c)?.letters());
        }
        Ok(Word::new(letters))
    }

    /// The label whose image is `u`, if any.
    pub fn label_of(&self, u: &Word) -> Option<char> {
        self.images.iter().find(|(_, img)| *img == u).map(|(&c, _)| c)
    }
}

/// Apply a morphism to a word.
pub fn apply_morphism(phi: &Morphism, v: &Word) -> Result<Word> {
    phi.apply(v)
}

/// Per-pair comparison indices used when computing derived orders:
/// `lex_index` is the first disagreeing position (1-based from the left)
/// of the two full return words, `antilex_index` the first disagreeing
/// position counted 1-based from the right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairComparison {
    pub first: char,
    pub second: char,
    pub lex_index: usize,
    pub antilex_index: usize,
}

/// The derived order pair on the return-word labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedOrderResult {
    pub pair: OrderPair,
    pub labels: Vec<(char, Word)>,
    pub comparisons: Vec<PairComparison>,
}

/// Check that `ret` is a return word of `w` of the given kind and hand
/// back the full return word.
fn full_return(w: &Word, ret: &Word, kind: ReturnKind) -> Result<Word> {
    let full = match kind {
        ReturnKind::Suffix => w.concat(ret),
        ReturnKind::Prefix => ret.concat(w),
    };
    let occ = full.occurrences(w);
    if occ.len() != 2 || occ[0] != 0 || occ[1] != full.len() - w.len() {
        let bad = occ
            .iter()
            .copied()
            .find(|&p| p != 0 && p != full.len() - w.len())
            .unwrap_or(0);
        return Err(Error::NotAReturnWord { word: ret.clone(), of: w.clone(), position: bad + 1 });
    }
    Ok(full)
}

/// Derived orders with respect to `w`: labels `a, b, c, ...` are assigned
/// to the given return words in order; `<_Dw` sorts them by `<_D`-lex on
/// the full return words, `<_Aw` by `<_A`-antilex.
pub fn derived_orders(
    w: &Word,
    returns: &[Word],
    pair: &OrderPair,
    kind: ReturnKind,
) -> Result<DerivedOrderResult> {
    if returns.is_empty() {
        return Err(Error::EmptyWordSet);
    }
    pair.alphabet().check_word(w)?;
    let mut fulls = Vec::with_capacity(returns.len());
    let mut seen: BTreeSet<&Word> = BTreeSet::new();
    for ret in returns {
        pair.alphabet().check_word(ret)?;
        if !seen.insert(ret) {
            return Err(Error::DuplicateReturnWord { word: ret.clone() });
        }
        fulls.push(full_return(w, ret, kind)?);
    }
    for (i, zi) in fulls.iter().enumerate() {
        for zj in fulls.iter().skip(i + 1) {
            let (short, long) = if zi.len() <= zj.len() { (zi, zj) } else { (zj, zi) };
            if long.starts_with(short) || long.ends_with(short) {
                return Err(Error::ComparisonIndexMissing { first: zi.clone(), second: zj.clone() });
            }
        }
    }

    let labels: Vec<char> = (0..returns.len())
        .map(|i| char::from(b'a' + u8::try_from(i).expect("at most 26 return words")))
        .collect();

    let lex = |i: usize, j: usize| -> Ordering {
        pair.order_d().lex_cmp(fulls[i].letters(), fulls[j].letters())
    };
    let antilex = |i: usize, j: usize| -> Ordering {
        let ri: Vec<char> = fulls[i].letters().iter().rev().copied().collect();
        let rj: Vec<char> = fulls[j].letters().iter().rev().copied().collect();
        pair.order_a().lex_cmp(&ri, &rj)
    };

    let mut by_d: Vec<usize> = (0..returns.len()).collect();
    by_d.sort_by(|&i, &j| lex(i, j));
    let mut by_a: Vec<usize> = (0..returns.len()).collect();
    by_a.sort_by(|&i, &j| antilex(i, j));

    let order_d = TotalOrder::new(by_d.into_iter().map(|i| labels[i]))?;
    let order_a = TotalOrder::new(by_a.into_iter().map(|i| labels[i]))?;

    let mut comparisons = Vec::new();
    for i in 0..returns.len() {
        for j in i + 1..returns.len() {
            let zi = fulls[i].letters();
            let zj = fulls[j].letters();
            let t = zi
                .iter()
                .zip(zj.iter())
                .position(|(a, b)| a != b)
                .expect("distinct, prefix-free full returns");
            let u = zi
                .iter()
                .rev()
                .zip(zj.iter().rev())
                .position(|(a, b)| a != b)
                .expect("distinct, suffix-free full returns");
            comparisons.push(PairComparison {
                first: labels[i],
                second: labels[j],
                lex_index: t + 1,
                antilex_index: u + 1,
            });
        }
    }

    Ok(DerivedOrderResult {
        pair: OrderPair::new(order_a, order_d)?,
        labels: labels.into_iter().zip(fulls.iter().map(|z| strip(z, w, kind))).collect(),
        comparisons,
    })
}

fn strip(full: &Word, w: &Word, kind: ReturnKind) -> Word {
    match kind {
        ReturnKind::Suffix => full.subword(w.len(), full.len()),
        ReturnKind::Prefix => full.subword(0, full.len() - w.len()),
    }
}

/// Factor `x` over the images of `phi` at the occurrences of `w` and
/// return the label sequence. For the suffix kind `x` must read
/// `w·U_{i_1}···U_{i_k}`, for the prefix kind `U_{i_1}···U_{i_k}·w`.
pub fn derive_word(x: &Word, w: &Word, phi: &Morphism, kind: ReturnKind) -> Result<Word> {
    if !x.starts_with(w) {
        return Err(Error::NotFactorizable { position: 1 });
    }
    if !x.ends_with(w) {
        return Err(Error::NotFactorizable { position: x.len().saturating_sub(w.len()) + 1 });
    }
    let occ = x.occurrences(w);
    let mut letters = Vec::new();
    for pair in occ.windows(2) {
        let (p, q) = (pair[0], pair[1]);
        let chunk = match kind {
            ReturnKind::Suffix => x.subword(p + w.len(), q + w.len()),
            ReturnKind::Prefix => x.subword(p, q),
        };
        match phi.label_of(&chunk) {
            Some(c) => letters.push(c),
            None => return Err(Error::NotFactorizable { position: p + 1 }),
        }
    }
    Ok(Word::new(letters))
}

/// Both sides of the order-condition transfer: the condition on
/// `F(w·φv)` (resp. `F(φv·w)`) under the base pair, and on `F(v)` under
/// the derived pair. The two booleans agree.
pub fn transfer_order_condition(
    w: &Word,
    phi: &Morphism,
    pair: &OrderPair,
    v: &Word,
    kind: ReturnKind,
) -> Result<(bool, bool)> {
    let returns: Vec<Word> = phi.images().map(|(_, u)| u.clone()).collect();
    let derived = derived_orders(w, &returns, pair, kind)?;

    let image = phi.apply(v)?;
    let big = match kind {
        ReturnKind::Suffix => w.concat(&image),
        ReturnKind::Prefix => image.concat(w),
    };
    let base_holds = oc_of_finite_word(&big, pair)?;
    let derived_holds = oc_of_finite_word(v, &derived.pair)?;
    Ok((base_holds, derived_holds))
}

fn oc_of_finite_word(u: &Word, pair: &OrderPair) -> Result<bool> {
    if u.is_empty() {
        return Ok(true);
    }
    let depth = u.len().max(2);
    let lang = build_language(&LanguageSource::FiniteWords(alloc::vec![u.clone()]), depth)?;
    Ok(lang.order_condition(pair, depth - 2)? == OcVerdict::Holds)
}
