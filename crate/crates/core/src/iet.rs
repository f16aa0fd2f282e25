//! Exact-rational interval exchange transformations.
//!
//! Everything here works on half-open intervals `[left, right)`: a point
//! sitting on a branch endpoint belongs to the branch on its right. An
//! IET is stored together with its defining intervals (the coding depends
//! on them, not just on the map); branches are ordered lists of strictly
//! increasing affine pieces, so standard IETs are the special case of one
//! slope-1 piece per letter. All arithmetic is exact; emptiness of a
//! cylinder is a decided question, never an approximation.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use alloc::vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::alphabet::{Alphabet, OrderPair, TotalOrder};
use crate::error::Error;
use crate::language::{Connection, FactorialLanguage, DEPTH_CAP};
use crate::rat::Rat;
use crate::word::Word;
use crate::Result;

/// Half-open interval `[left, right)`; empty iff `left == right`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    left: Rat,
    right: Rat,
}

impl Interval {
    pub fn new(left: Rat, right: Rat) -> Result<Self> {
        if left > right {
            return Err(Error::InvalidInterval);
        }
        Ok(Self { left, right })
    }

    /// The canonical empty interval `[0, 0)`.
    pub fn empty() -> Self {
        Self { left: Rat::zero(), right: Rat::zero() }
    }

    pub fn unit() -> Self {
        Self { left: Rat::zero(), right: Rat::one() }
    }

    pub fn left(&self) -> &Rat {
        &self.left
    }

    pub fn right(&self) -> &Rat {
        &self.right
    }

    pub fn is_empty(&self) -> bool {
        self.left == self.right
    }

    pub fn length(&self) -> Rat {
        &self.right - &self.left
    }

    pub fn contains(&self, x: &Rat) -> bool {
        *x >= self.left && *x < self.right
    }

    pub fn contains_closure(&self, x: &Rat) -> bool {
        *x >= self.left && *x <= self.right
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        other.is_empty() || (other.left >= self.left && other.right <= self.right)
    }

    pub fn intersect(&self, other: &Interval) -> Interval {
        let left = self.left.clone().max(other.left.clone());
        let right = self.right.clone().min(other.right.clone());
        if left >= right {
            Interval::empty()
        } else {
            Interval { left, right }
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {})", self.left, self.right)
    }
}

/// One strictly increasing affine piece `x -> slope·x + offset` on
/// `source`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffinePiece {
    source: Interval,
    slope: Rat,
    offset: Rat,
}

impl AffinePiece {
    pub fn new(source: Interval, slope: Rat, offset: Rat) -> Result<Self> {
        if slope <= Rat::zero() {
            return Err(Error::InvalidIet { message: String::from("slope must be positive") });
        }
        Ok(Self { source, slope, offset })
    }

    pub fn source(&self) -> &Interval {
        &self.source
    }

    pub fn slope(&self) -> &Rat {
        &self.slope
    }

    pub fn offset(&self) -> &Rat {
        &self.offset
    }

    pub fn apply(&self, x: &Rat) -> Rat {
        &self.slope * x + &self.offset
    }

    pub fn inverse(&self, y: &Rat) -> Rat {
        (y - &self.offset) / &self.slope
    }

    pub fn image(&self) -> Interval {
        Interval { left: self.apply(&self.source.left), right: self.apply(&self.source.right) }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Inverse,
}

/// A generalized interval exchange with piecewise-affine increasing
/// branches, given together with its defining intervals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiecewiseAffineIet {
    alphabet: Alphabet,
    pair: OrderPair,
    domain: Interval,
    defining: BTreeMap<char, Interval>,
    images: BTreeMap<char, Interval>,
    branches: BTreeMap<char, Vec<AffinePiece>>,
}

impl PiecewiseAffineIet {
    /// Build and validate. The defining intervals must tile an interval in
    /// `<_D` order; each branch must be continuous, strictly increasing,
    /// and cover its defining interval; the branch images must then tile
    /// the same interval in `<_A` order.
    pub fn new(
        pair: OrderPair,
        defining: BTreeMap<char, Interval>,
        branches: BTreeMap<char, Vec<AffinePiece>>,
    ) -> Result<Self> {
        let alphabet = pair.alphabet().clone();
        for &c in alphabet.letters() {
            if !defining.contains_key(&c) {
                return Err(Error::InvalidIet {
                    message: alloc::format!("letter '{c}' has no defining interval"),
                });
            }
            if !branches.contains_key(&c) {
                return Err(Error::InvalidIet {
                    message: alloc::format!("letter '{c}' has no branch"),
                });
            }
        }
        if defining.len() != alphabet.len() || branches.len() != alphabet.len() {
            return Err(Error::InvalidIet { message: String::from("stray letters") });
        }

        // defining intervals tile the domain in <_D order
        let d_letters = pair.order_d().ascending().to_vec();
        let domain_left = defining[&d_letters[0]].left.clone();
        let mut cursor = domain_left.clone();
        for &e in &d_letters {
            let iv = &defining[&e];
            if iv.left != cursor {
                return Err(Error::InvalidIet {
                    message: alloc::format!("defining intervals leave a gap before '{e}'"),
                });
            }
            cursor = iv.right.clone();
        }
        let domain = Interval::new(domain_left, cursor)?;
        if domain.is_empty() {
            return Err(Error::InvalidIet { message: String::from("empty domain") });
        }

        // branches cover their defining intervals continuously
        for (&e, pieces) in &branches {
            let iv = &defining[&e];
            if iv.is_empty() {
                if !pieces.is_empty() {
                    return Err(Error::InvalidIet {
                        message: alloc::format!("letter '{e}' is empty but has branch pieces"),
                    });
                }
                continue;
            }
            if pieces.is_empty() {
                return Err(Error::InvalidIet {
                    message: alloc::format!("letter '{e}' has no branch pieces"),
                });
            }
            if pieces[0].source.left != iv.left
                || pieces[pieces.len() - 1].source.right != iv.right
            {
                return Err(Error::InvalidIet {
                    message: alloc::format!("branch of '{e}' does not cover its interval"),
                });
            }
            for pairw in pieces.windows(2) {
                if pairw[0].source.right != pairw[1].source.left {
                    return Err(Error::InvalidIet {
                        message: alloc::format!("branch of '{e}' has a source gap"),
                    });
                }
                if pairw[0].apply(&pairw[0].source.right)
                    != pairw[1].apply(&pairw[1].source.left)
                {
                    return Err(Error::InvalidIet {
                        message: alloc::format!("branch of '{e}' is discontinuous"),
                    });
                }
            }
            for p in pieces {
                if p.source.is_empty() {
                    return Err(Error::InvalidIet {
                        message: alloc::format!("branch of '{e}' has an empty piece"),
                    });
                }
            }
        }

        // image intervals tile the domain in <_A order
        let a_letters = pair.order_a().ascending().to_vec();
        let mut images = BTreeMap::new();
        let mut cursor = domain.left.clone();
        for &e in &a_letters {
            let pieces = &branches[&e];
            if defining[&e].is_empty() {
                images.insert(e, Interval { left: cursor.clone(), right: cursor.clone() });
                continue;
            }
            let img_left = pieces[0].apply(&pieces[0].source.left);
            let img_right = pieces[pieces.len() - 1].apply(&pieces[pieces.len() - 1].source.right);
            if img_left != cursor {
                return Err(Error::InvalidIet {
                    message: alloc::format!("image of '{e}' does not start where expected"),
                });
            }
            images.insert(e, Interval::new(img_left, img_right.clone())?);
            cursor = img_right;
        }
        if cursor != domain.right {
            return Err(Error::InvalidIet {
                message: String::from("images do not tile the domain"),
            });
        }

        Ok(Self { alphabet, pair, domain, defining, images, branches })
    }

    /// A standard IET on `[0, 1)`: slope-1 branches laid out by the pair.
    pub fn make_standard(pair: OrderPair, lengths: &BTreeMap<char, Rat>) -> Result<Self> {
        let alphabet = pair.alphabet().clone();
        let mut sum = Rat::zero();
        for &e in alphabet.letters() {
            let len = lengths.get(&e).ok_or(Error::LetterOutsideAlphabet { letter: e })?;
            if *len <= Rat::zero() {
                return Err(Error::NonPositiveLength { letter: e });
            }
            sum += len;
        }
        if sum != Rat::one() {
            return Err(Error::LengthsDoNotSumToOne);
        }

        let mut defining = BTreeMap::new();
        let mut cursor = Rat::zero();
        for &e in pair.order_d().ascending() {
            let next = &cursor + &lengths[&e];
            defining.insert(e, Interval { left: cursor.clone(), right: next.clone() });
            cursor = next;
        }
        let mut image_start = BTreeMap::new();
        let mut cursor = Rat::zero();
        for &e in pair.order_a().ascending() {
            image_start.insert(e, cursor.clone());
            cursor = &cursor + &lengths[&e];
        }
        let mut branches = BTreeMap::new();
        for &e in alphabet.letters() {
            let src = defining[&e].clone();
            let offset = &image_start[&e] - &src.left;
            branches.insert(e, vec![AffinePiece::new(src, Rat::one(), offset)?]);
        }
        Self::new(pair, defining, branches)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn pair(&self) -> &OrderPair {
        &self.pair
    }

    pub fn domain(&self) -> &Interval {
        &self.domain
    }

    pub fn defining_interval(&self, e: char) -> Result<&Interval> {
        self.defining.get(&e).ok_or(Error::LetterOutsideAlphabet { letter: e })
    }

    pub fn image_interval(&self, e: char) -> Result<&Interval> {
        self.images.get(&e).ok_or(Error::LetterOutsideAlphabet { letter: e })
    }

    pub fn branch(&self, e: char) -> Result<&[AffinePiece]> {
        self.branches
            .get(&e)
            .map(Vec::as_slice)
            .ok_or(Error::LetterOutsideAlphabet { letter: e })
    }

    pub fn is_standard(&self) -> bool {
        self.branches
            .values()
            .all(|ps| ps.len() <= 1 && ps.iter().all(|p| p.slope == Rat::one()))
    }

    /// True iff the two orders of the pair are mutual reverses.
    pub fn is_symmetric(&self) -> bool {
        self.pair.is_symmetric()
    }

    /// The letter whose defining interval contains `x`.
    pub fn letter_at(&self, x: &Rat) -> Option<char> {
        self.alphabet
            .letters()
            .iter()
            .copied()
            .find(|&e| self.defining[&e].contains(x))
    }

    pub fn defining_map(&self) -> &BTreeMap<char, Interval> {
        &self.defining
    }

    pub fn branch_map(&self) -> &BTreeMap<char, Vec<AffinePiece>> {
        &self.branches
    }

    /// Branch value, defined on the closure of the defining interval
    /// (the right endpoint maps to the image's right endpoint).
    pub(crate) fn branch_value(&self, e: char, x: &Rat) -> Rat {
        let pieces = &self.branches[&e];
        for p in pieces {
            if p.source.contains(x) {
                return p.apply(x);
            }
        }
        let last = pieces.last().expect("nonempty branch");
        debug_assert_eq!(*x, last.source.right);
        last.apply(x)
    }

    /// Inverse branch value on the closure of the image interval.
    pub(crate) fn branch_inverse_value(&self, e: char, y: &Rat) -> Rat {
        let pieces = &self.branches[&e];
        for p in pieces {
            let img = p.image();
            if img.contains(y) {
                return p.inverse(y);
            }
        }
        let last = pieces.last().expect("nonempty branch");
        debug_assert_eq!(*y, last.image().right);
        last.inverse(y)
    }

    /// Apply the map (or its inverse) to a point of the domain.
    pub fn apply_point(&self, x: &Rat, direction: Direction) -> Result<Rat> {
        if !self.domain.contains(x) {
            return Err(Error::PointOutsideDomain);
        }
        match direction {
            Direction::Forward => {
                let e = self.letter_at(x).ok_or(Error::PointOutsideDomain)?;
                Ok(self.branch_value(e, x))
            }
            Direction::Inverse => {
                let e = self
                    .alphabet
                    .letters()
                    .iter()
                    .copied()
                    .find(|&e| self.images[&e].contains(x))
                    .ok_or(Error::PointOutsideDomain)?;
                Ok(self.branch_inverse_value(e, x))
            }
        }
    }

    /// The cylinder `[w] = {x : T^i x ∈ I_{w_i}}`, computed by backward
    /// recursion; always a single (possibly empty) interval.
    pub fn cylinder(&self, w: &Word) -> Result<Interval> {
        self.alphabet.check_word(w)?;
        let letters = w.letters();
        if letters.is_empty() {
            return Ok(self.domain.clone());
        }
        let mut j = self.defining[&letters[letters.len() - 1]].clone();
        for &e in letters[..letters.len() - 1].iter().rev() {
            if j.is_empty() {
                return Ok(Interval::empty());
            }
            let k = j.intersect(&self.images[&e]);
            if k.is_empty() {
                return Ok(Interval::empty());
            }
            j = Interval {
                left: self.branch_inverse_value(e, &k.left),
                right: self.branch_inverse_value(e, &k.right),
            };
        }
        if j.is_empty() {
            return Ok(Interval::empty());
        }
        Ok(j)
    }

    /// Factor sets of the natural coding up to length `n`: breadth-first
    /// extension keeping the forward image of each live cylinder.
    pub fn coding_factors(&self, n: usize) -> Result<Vec<BTreeSet<Word>>> {
        if n > DEPTH_CAP {
            return Err(Error::DepthCap { requested: n, cap: DEPTH_CAP });
        }
        let mut sets: Vec<BTreeSet<Word>> = vec![BTreeSet::new(); n + 1];
        sets[0].insert(Word::empty());
        let mut frontier: Vec<(Word, Interval)> = vec![(Word::empty(), self.domain.clone())];
        for level in 1..=n {
            let mut next = Vec::new();
            for (u, k) in &frontier {
                for &e in self.alphabet.letters() {
                    let ke = k.intersect(&self.defining[&e]);
                    if ke.is_empty() {
                        continue;
                    }
                    let img = Interval {
                        left: self.branch_value(e, &ke.left),
                        right: self.branch_value(e, &ke.right),
                    };
                    let mut letters = u.letters().to_vec();
                    letters.push(e);
                    let w = Word::new(letters);
                    sets[level].insert(w.clone());
                    next.push((w, img));
                }
            }
            frontier = next;
        }
        Ok(sets)
    }

    /// Connection witnesses of the natural coding at the given depth.
    pub fn detect_connection(&self, depth: usize) -> Result<Vec<Connection>> {
        let sets = self.coding_factors(depth)?;
        let lang = FactorialLanguage::from_sets(self.alphabet.clone(), sets, true)?;
        if depth < 2 {
            return Err(Error::InsufficientDepth { needed: 2, depth });
        }
        lang.connections(&self.pair, depth - 2)
    }

    /// First-return map of the IET to the cylinder `[w]`, computed
    /// symbolically: a worklist of subintervals of `[w]` is pushed forward,
    /// split at branch breakpoints and at the cylinder's endpoints; a piece
    /// terminates when its image lands inside `[w]`, its accumulated coding
    /// then spelling a suffix return word of `w`.
    pub fn induce(&self, w: &Word, cap: usize) -> Result<InducedResult> {
        let base = self.cylinder(w)?;
        if base.is_empty() {
            return Err(Error::EmptyCylinder { word: w.clone() });
        }
        let g = w.len();

        struct Piece {
            j: Interval,
            k: Interval,
            slope: Rat,
            offset: Rat,
            word: Word,
        }
        struct DonePiece {
            j: Interval,
            k: Interval,
            slope: Rat,
            offset: Rat,
            ret: Word,
        }

        let mut work = vec![Piece {
            j: base.clone(),
            k: base.clone(),
            slope: Rat::one(),
            offset: Rat::zero(),
            word: Word::empty(),
        }];
        let mut done: Vec<DonePiece> = Vec::new();

        for _step in 1..=cap {
            if work.is_empty() {
                break;
            }
            let mut next = Vec::new();
            for piece in work {
                for &e in self.alphabet.letters() {
                    let ke = piece.k.intersect(&self.defining[&e]);
                    if ke.is_empty() {
                        continue;
                    }
                    for p in &self.branches[&e] {
                        let s = ke.intersect(&p.source);
                        if s.is_empty() {
                            continue;
                        }
                        let slope = &p.slope * &piece.slope;
                        let offset = &p.slope * &piece.offset + &p.offset;
                        let img = Interval { left: p.apply(&s.left), right: p.apply(&s.right) };
                        let mut letters = piece.word.letters().to_vec();
                        letters.push(e);
                        let word = Word::new(letters);

                        // split the image at the base cylinder's endpoints
                        let pull = |y: &Rat| (y - &offset) / &slope;
                        let push_part = |part: Interval, returned: bool,
                                             next: &mut Vec<Piece>,
                                             done: &mut Vec<DonePiece>| {
                            if part.is_empty() {
                                return;
                            }
                            let jpart = Interval { left: pull(&part.left), right: pull(&part.right) };
                            if returned {
                                let full = word.concat(w);
                                let ret = full.subword(g, full.len());
                                done.push(DonePiece {
                                    j: jpart,
                                    k: part,
                                    slope: slope.clone(),
                                    offset: offset.clone(),
                                    ret,
                                });
                            } else {
                                next.push(Piece {
                                    j: jpart,
                                    k: part,
                                    slope: slope.clone(),
                                    offset: offset.clone(),
                                    word: word.clone(),
                                });
                            }
                        };

                        let inside = img.intersect(&base);
                        if img.left < base.left {
                            let part = Interval {
                                left: img.left.clone(),
                                right: img.right.clone().min(base.left.clone()),
                            };
                            push_part(part, false, &mut next, &mut done);
                        }
                        push_part(inside, true, &mut next, &mut done);
                        if img.right > base.right {
                            let part = Interval {
                                left: img.left.clone().max(base.right.clone()),
                                right: img.right.clone(),
                            };
                            push_part(part, false, &mut next, &mut done);
                        }
                    }
                }
            }
            work = next;
        }

        if !work.is_empty() {
            return Err(Error::IterationCapExceeded {
                survivors: work.into_iter().map(|p| (p.j, p.word)).collect(),
            });
        }

        // assemble the induced IET
        done.sort_by(|a, b| a.j.left.cmp(&b.j.left));
        let mut cursor = base.left.clone();
        for d in &done {
            if d.j.left != cursor {
                return Err(Error::Internal {
                    message: String::from("returned pieces do not tile the base cylinder"),
                });
            }
            cursor = d.j.right.clone();
        }
        if cursor != base.right {
            return Err(Error::Internal {
                message: String::from("returned pieces do not tile the base cylinder"),
            });
        }

        // group adjacent pieces sharing a return word (a branch split at an
        // affine breakpoint stays one defining interval)
        let mut groups: Vec<(Word, Vec<DonePiece>)> = Vec::new();
        for d in done {
            match groups.last_mut() {
                Some((ret, pieces)) if *ret == d.ret => pieces.push(d),
                _ => groups.push((d.ret.clone(), vec![d])),
            }
        }
        if groups.len() > self.alphabet.len() {
            return Err(Error::Internal {
                message: String::from("induced map has more intervals than letters"),
            });
        }
        {
            let mut seen = BTreeSet::new();
            for (ret, _) in &groups {
                if !seen.insert(ret.clone()) {
                    return Err(Error::Internal {
                        message: String::from("a return word spans non-adjacent pieces"),
                    });
                }
            }
        }

        let labels: Vec<char> = (0..groups.len())
            .map(|i| char::from(b'a' + u8::try_from(i).expect("at most 26 labels")))
            .collect();
        let mut defining = BTreeMap::new();
        let mut branches = BTreeMap::new();
        let mut return_words = Vec::new();
        let mut image_lefts: Vec<(char, Rat)> = Vec::new();
        for (label, (ret, pieces)) in labels.iter().copied().zip(groups) {
            let iv = Interval::new(
                pieces[0].j.left.clone(),
                pieces[pieces.len() - 1].j.right.clone(),
            )?;
            for pw in pieces.windows(2) {
                if pw[0].k.right != pw[1].k.left {
                    return Err(Error::Internal {
                        message: String::from("discontinuous pieces within one return word"),
                    });
                }
            }
            image_lefts.push((label, pieces[0].k.left.clone()));
            defining.insert(label, iv);
            branches.insert(
                label,
                pieces
                    .into_iter()
                    .map(|d| AffinePiece::new(d.j, d.slope, d.offset))
                    .collect::<Result<Vec<_>>>()?,
            );
            return_words.push((label, ret));
        }

        let order_d = TotalOrder::new(labels.iter().copied())?;
        image_lefts.sort_by(|a, b| a.1.cmp(&b.1));
        let order_a = TotalOrder::new(image_lefts.iter().map(|(c, _)| *c))?;
        let induced = PiecewiseAffineIet::new(OrderPair::new(order_a, order_d)?, defining, branches)?;

        Ok(InducedResult { induced, return_words, base_cylinder: base })
    }
}

/// Outcome of inducing on a cylinder: the first-return IET, the suffix
/// return word behind each new letter (in left-to-right order), and the
/// base cylinder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedResult {
    pub induced: PiecewiseAffineIet,
    pub return_words: Vec<(char, Word)>,
    pub base_cylinder: Interval,
}
