//! JSON file formats for IET specs and language sources.
//!
//! Rationals serialize as `"p/q"` strings (plain `"p"` for integers),
//! bit-exact. A standard IET is `{"type":"standard","pair":"321|123",
//! "lengths":["5/13","4/13","4/13"]}` with the lengths listed for the
//! letters in `<_D`-ascending order; a general one is
//! `{"type":"affine","pair":...,"branches":[{"letter":"1",
//! "source":["0","1/3"],"pieces":[{"src":["0","1/6"],"slope":"2",
//! "offset":"0"}]}]}`. Language sources are `{"type":"words"|"power"|
//! "biinfinite"|"iet", ...}`; an `iet` source references an IET spec
//! file by path, resolved relative to the source file.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use iet_words::iet::{AffinePiece, Interval, PiecewiseAffineIet};
use iet_words::language::{EventuallyPeriodicWord, LanguageSource};
use iet_words::rat::{format_rat, parse_rat, Rat};
use iet_words::{OrderPair, Word};

use crate::CliError;

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum IetSpec {
    Standard { pair: String, lengths: Vec<String> },
    Affine { pair: String, branches: Vec<BranchSpec> },
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct BranchSpec {
    pub letter: char,
    pub source: [String; 2],
    pub pieces: Vec<PieceSpec>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct PieceSpec {
    pub src: [String; 2],
    pub slope: String,
    pub offset: String,
}

impl IetSpec {
    pub fn to_iet(&self) -> Result<PiecewiseAffineIet, CliError> {
        match self {
            IetSpec::Standard { pair, lengths } => {
                let pair: OrderPair = pair.parse()?;
                let letters = pair.order_d().ascending().to_vec();
                if letters.len() != lengths.len() {
                    return Err(CliError::msg(format!(
                        "{} lengths for {} letters",
                        lengths.len(),
                        letters.len()
                    )));
                }
                let map: BTreeMap<char, Rat> = letters
                    .iter()
                    .zip(lengths.iter())
                    .map(|(&c, s)| Ok((c, parse_rat(s)?)))
                    .collect::<Result<_, CliError>>()?;
                Ok(PiecewiseAffineIet::make_standard(pair, &map)?)
            }
            IetSpec::Affine { pair, branches } => {
                let pair: OrderPair = pair.parse()?;
                let mut defining = BTreeMap::new();
                let mut branch_map = BTreeMap::new();
                for b in branches {
                    let iv = Interval::new(parse_rat(&b.source[0])?, parse_rat(&b.source[1])?)?;
                    defining.insert(b.letter, iv);
                    let pieces = b
                        .pieces
                        .iter()
                        .map(|p| {
                            AffinePiece::new(
                                Interval::new(parse_rat(&p.src[0])?, parse_rat(&p.src[1])?)?,
                                parse_rat(&p.slope)?,
                                parse_rat(&p.offset)?,
                            )
                            .map_err(CliError::from)
                        })
                        .collect::<Result<Vec<_>, CliError>>()?;
                    branch_map.insert(b.letter, pieces);
                }
                Ok(PiecewiseAffineIet::new(pair, defining, branch_map)?)
            }
        }
    }

    /// Standard IETs on the unit interval serialize in the compact
    /// standard form, everything else as explicit branches.
    pub fn from_iet(t: &PiecewiseAffineIet) -> IetSpec {
        let unit_domain = *t.domain().left() == iet_words::rat::rat_int(0)
            && *t.domain().right() == iet_words::rat::rat_int(1);
        if t.is_standard() && unit_domain {
            let lengths = t
                .pair()
                .order_d()
                .ascending()
                .iter()
                .map(|&c| format_rat(&t.defining_interval(c).expect("letter").length()))
                .collect();
            return IetSpec::Standard { pair: t.pair().to_string(), lengths };
        }
        let branches = t
            .pair()
            .order_d()
            .ascending()
            .iter()
            .map(|&c| {
                let iv = t.defining_interval(c).expect("letter");
                BranchSpec {
                    letter: c,
                    source: [format_rat(iv.left()), format_rat(iv.right())],
                    pieces: t
                        .branch(c)
                        .expect("letter")
                        .iter()
                        .map(|p| PieceSpec {
                            src: [
                                format_rat(p.source().left()),
                                format_rat(p.source().right()),
                            ],
                            slope: format_rat(p.slope()),
                            offset: format_rat(p.offset()),
                        })
                        .collect(),
                }
            })
            .collect();
        IetSpec::Affine { pair: t.pair().to_string(), branches }
    }
}

pub fn load_iet(path: &Path) -> Result<PiecewiseAffineIet, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::msg(format!("cannot read {}: {e}", path.display())))?;
    let spec: IetSpec = serde_json::from_str(&text)
        .map_err(|e| CliError::msg(format!("bad IET spec {}: {e}", path.display())))?;
    spec.to_iet()
}

pub fn iet_to_json(t: &PiecewiseAffineIet) -> String {
    serde_json::to_string_pretty(&IetSpec::from_iet(t)).expect("serializable")
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum SourceSpec {
    Words { words: Vec<String> },
    Power { word: String },
    Biinfinite { words: Vec<BiInfiniteSpec> },
    Iet { iet: String },
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct BiInfiniteSpec {
    pub left: String,
    pub center: String,
    pub right: String,
}

impl SourceSpec {
    /// `base` is the directory referenced IET paths resolve against.
    pub fn to_source(&self, base: &Path) -> Result<LanguageSource, CliError> {
        Ok(match self {
            SourceSpec::Words { words } => {
                LanguageSource::FiniteWords(words.iter().map(|s| Word::from(s.as_str())).collect())
            }
            SourceSpec::Power { word } => LanguageSource::PowerWord(Word::from(word.as_str())),
            SourceSpec::Biinfinite { words } => LanguageSource::BiInfinite(
                words
                    .iter()
                    .map(|b| {
                        EventuallyPeriodicWord::new(
                            Word::from(b.left.as_str()),
                            Word::from(b.center.as_str()),
                            Word::from(b.right.as_str()),
                        )
                        .map_err(CliError::from)
                    })
                    .collect::<Result<Vec<_>, CliError>>()?,
            ),
            SourceSpec::Iet { iet } => {
                LanguageSource::IetCoding(Box::new(load_iet(&base.join(iet))?))
            }
        })
    }
}

pub fn load_source(path: &Path) -> Result<LanguageSource, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::msg(format!("cannot read {}: {e}", path.display())))?;
    let spec: SourceSpec = serde_json::from_str(&text)
        .map_err(|e| CliError::msg(format!("bad language source {}: {e}", path.display())))?;
    let base = path.parent().unwrap_or_else(|| Path::new("."));
    spec.to_source(base)
}
