//! Command-line front end for the `iet-words` library.
//!
//! Every subcommand maps to one library operation. Exit code 0 means a
//! verdict was produced (including "false" verdicts like `does not
//! cluster` or `none`); nonzero means an operational error. `--structured`
//! switches the output to machine-readable JSON with full witnesses.

pub mod formats;

use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use iet_words::bwt;
use iet_words::construct;
use iet_words::derive::{self, Morphism};
use iet_words::language::{
    build_language, Connection, FactorialLanguage, LanguageSource, OcVerdict, ReturnKind,
    RichVerdict,
};
use iet_words::{OrderPair, TotalOrder, Word};

use formats::{iet_to_json, load_iet, load_source};

/// Operational error carrying the message the user sees on stderr.
#[derive(Debug)]
pub struct CliError(String);

impl CliError {
    pub fn msg(m: impl Into<String>) -> Self {
        CliError(m.into())
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<iet_words::Error> for CliError {
    fn from(e: iet_words::Error) -> Self {
        CliError(e.to_string())
    }
}

#[derive(Parser, Debug)]
#[command(name = "iet-words", version, about = "Burrows-Wheeler clustering, order conditions, and interval exchange languages")]
struct Cli {
    /// Emit machine-readable JSON instead of text
    #[arg(long, global = true)]
    structured: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    Suffix,
    Prefix,
}

impl From<KindArg> for ReturnKind {
    fn from(k: KindArg) -> ReturnKind {
        match k {
            KindArg::Suffix => ReturnKind::Suffix,
            KindArg::Prefix => ReturnKind::Prefix,
        }
    }
}

#[derive(Args, Debug)]
struct SourceArgs {
    /// Language source spec file (JSON)
    #[arg(long)]
    source: PathBuf,
    /// Materialization depth
    #[arg(long)]
    depth: usize,
}

impl SourceArgs {
    fn build(&self) -> Result<FactorialLanguage, CliError> {
        let source = load_source(&self.source)?;
        Ok(build_language(&source, self.depth)?)
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Burrows-Wheeler transform of a word
    Bwt {
        word: String,
        /// Sorting order, letters ascending (e.g. "123")
        #[arg(long)]
        order: String,
    },
    /// Does the word cluster for the pair of orders?
    Cluster {
        word: String,
        /// Order pair "ordA|ordD" (e.g. "321|123")
        #[arg(long)]
        pair: String,
    },
    /// All order pairs on the word's alphabet for which it clusters
    Pairs { word: String },
    /// Check the order condition of a language
    OrderCheck {
        /// Comma-separated word list or @file (builds F(W))
        #[arg(long, conflicts_with = "source")]
        words: Option<String>,
        /// Language source spec file (JSON)
        #[arg(long)]
        source: Option<PathBuf>,
        #[arg(long)]
        pair: String,
        /// Largest bispecial length to check (default: depth - 2)
        #[arg(long)]
        maxlen: Option<usize>,
        /// Materialization depth (default for --words: longest word)
        #[arg(long)]
        depth: Option<usize>,
        /// Close the word set under reversal before building F(W)
        #[arg(long)]
        closure_reversal: bool,
    },
    /// List connection witnesses of a language
    Connections {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        pair: String,
        /// Largest bispecial length to check (default: depth - 2)
        #[arg(long)]
        maxlen: Option<usize>,
    },
    /// Return words of a word in a language
    Returns {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        word: String,
        #[arg(long, value_enum, default_value_t = KindArg::Suffix)]
        kind: KindArg,
    },
    /// Derived orders from explicit return words
    DeriveOrders {
        #[arg(long)]
        word: String,
        /// Comma-separated return words, labelled a, b, c, ... in order
        #[arg(long)]
        returns: String,
        #[arg(long)]
        pair: String,
        #[arg(long, value_enum, default_value_t = KindArg::Suffix)]
        kind: KindArg,
    },
    /// Apply a morphism like "a=12,b=1312,c=212" to a word
    ApplyMorphism {
        #[arg(long)]
        morphism: String,
        #[arg(long)]
        word: String,
    },
    /// Check that full returns to palindromes are palindromes
    Rich {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        maxlen: usize,
    },
    /// Factor and palindromic complexity table
    Palcx {
        #[command(flatten)]
        source: SourceArgs,
        /// Largest length to report (default: depth)
        #[arg(long)]
        max: Option<usize>,
    },
    /// Build and emit a standard IET spec
    IetMake {
        #[arg(long)]
        pair: String,
        /// Comma-separated lengths in <_D order, e.g. "5/13,4/13,4/13"
        #[arg(long)]
        lengths: String,
        /// Write the spec to a file instead of stdout
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Cylinder of a word under an IET
    IetCylinder {
        #[arg(long)]
        iet: PathBuf,
        #[arg(long)]
        word: String,
    },
    /// Factor sets of the natural coding of an IET
    IetFactors {
        #[arg(long)]
        iet: PathBuf,
        #[arg(long)]
        depth: usize,
    },
    /// First-return map of an IET to the cylinder of a word
    IetInduce {
        #[arg(long)]
        iet: PathBuf,
        #[arg(long)]
        word: String,
        /// Iteration cap for the symbolic first-return computation
        #[arg(long, default_value_t = 1000)]
        cap: usize,
        /// Write the induced IET spec to a file
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Saturate the ordered extension graph of a word in F(W)
    Saturate {
        /// Comma-separated word list or @file
        #[arg(long)]
        words: String,
        #[arg(long)]
        pair: String,
        /// The word whose graph is saturated (default: the empty word)
        #[arg(long, default_value = "")]
        word: String,
        /// Mirror additions (word must equal its reverse); also prints
        /// the mirrored graph of the reversed word otherwise
        #[arg(long)]
        symmetric: bool,
    },
    /// Grow a connection-free language containing F(W)
    Extend {
        #[arg(long)]
        words: String,
        #[arg(long)]
        pair: String,
        #[arg(long)]
        horizon: usize,
        #[arg(long)]
        symmetric: bool,
    },
    /// Build an affine IET whose coding reproduces the extension of W
    BuildAffine {
        #[arg(long)]
        words: String,
        #[arg(long)]
        pair: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decide production by a standard symmetric IET
    DecideSymmetric {
        #[arg(long, conflicts_with = "words")]
        word: Option<String>,
        #[arg(long)]
        words: Option<String>,
        #[arg(long)]
        pair: String,
    },
    /// Grid search for a standard IET producing the words
    SearchStandard {
        #[arg(long)]
        words: String,
        #[arg(long)]
        pair: String,
        #[arg(long = "max-den")]
        max_den: usize,
        #[arg(long)]
        depth: usize,
    },
}

/// Run the CLI on explicit arguments, writing to `out`; returns the
/// process exit code.
pub fn run<W: Write>(args: &[String], out: &mut W) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    eprintln!("{e}");
                    2
                }
            };
        }
    };
    match dispatch(&cli, out) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn parse_words(spec: &str) -> Result<Vec<Word>, CliError> {
    let items: Vec<String> = if let Some(path) = spec.strip_prefix('@') {
        fs::read_to_string(Path::new(path))
            .map_err(|e| CliError::msg(format!("cannot read {path}: {e}")))?
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(String::from)
            .collect()
    } else {
        spec.split(',').map(str::trim).filter(|l| !l.is_empty()).map(String::from).collect()
    };
    if items.is_empty() {
        return Err(CliError::msg("empty word list"));
    }
    Ok(items.iter().map(|s| Word::from(s.as_str())).collect())
}

fn parse_morphism(spec: &str) -> Result<Morphism, CliError> {
    let mut images = Vec::new();
    for item in spec.split(',') {
        let (label, image) = item
            .split_once('=')
            .ok_or_else(|| CliError::msg(format!("bad morphism entry \"{item}\"")))?;
        let mut chars = label.trim().chars();
        let letter = chars
            .next()
            .filter(|_| chars.next().is_none())
            .ok_or_else(|| CliError::msg(format!("morphism label \"{label}\" is not a letter")))?;
        images.push((letter, Word::from(image.trim())));
    }
    Ok(Morphism::new(images)?)
}

fn connection_json(c: &Connection) -> serde_json::Value {
    json!({
        "bispecial": c.bispecial.to_string(),
        "a": c.a, "a_next": c.a_next, "b": c.b, "b_next": c.b_next,
    })
}

fn emit<W: Write>(out: &mut W, value: serde_json::Value) -> Result<(), CliError> {
    writeln!(out, "{}", serde_json::to_string_pretty(&value).expect("serializable"))
        .map_err(|e| CliError::msg(e.to_string()))
}

fn write_or_print<W: Write>(
    out: &mut W,
    output: &Option<PathBuf>,
    text: &str,
) -> Result<(), CliError> {
    match output {
        Some(path) => fs::write(path, format!("{text}\n"))
            .map_err(|e| CliError::msg(format!("cannot write {}: {e}", path.display()))),
        None => writeln!(out, "{text}").map_err(|e| CliError::msg(e.to_string())),
    }
}

fn dispatch<W: Write>(cli: &Cli, out: &mut W) -> Result<(), CliError> {
    let structured = cli.structured;
    match &cli.command {
        Command::Bwt { word, order } => {
            let order: TotalOrder = order.parse()?;
            let b = bwt::bwt(&Word::from(word.as_str()), &order)?;
            if structured {
                emit(out, json!({ "bwt": b.to_string() }))?;
            } else {
                writeln!(out, "{b}").map_err(|e| CliError::msg(e.to_string()))?;
            }
        }
        Command::Cluster { word, pair } => {
            let pair: OrderPair = pair.parse()?;
            let clusters = bwt::clusters_for(&Word::from(word.as_str()), &pair)?;
            if structured {
                emit(out, json!({ "clusters": clusters }))?;
            } else {
                writeln!(out, "{}", if clusters { "clusters" } else { "does not cluster" })
                    .map_err(|e| CliError::msg(e.to_string()))?;
            }
        }
        Command::Pairs { word } => {
            let pairs = bwt::clustering_pairs(&Word::from(word.as_str()))?;
            if structured {
                let list: Vec<String> = pairs.iter().map(|p| p.to_string()).collect();
                emit(out, json!({ "clustering_pairs": list }))?;
            } else if pairs.is_empty() {
                writeln!(out, "(none)").map_err(|e| CliError::msg(e.to_string()))?;
            } else {
                for p in pairs {
                    writeln!(out, "{p}").map_err(|e| CliError::msg(e.to_string()))?;
                }
            }
        }
        Command::OrderCheck { words, source, pair, maxlen, depth, closure_reversal } => {
            let pair: OrderPair = pair.parse()?;
            let lang = match (words, source) {
                (Some(spec), None) => {
                    let mut list = parse_words(spec)?;
                    if *closure_reversal {
                        let mut extra: Vec<Word> =
                            list.iter().map(Word::reverse).filter(|r| !list.contains(r)).collect();
                        list.append(&mut extra);
                    }
                    let natural = list.iter().map(Word::len).max().unwrap_or(1).max(2);
                    build_language(
                        &LanguageSource::FiniteWords(list),
                        depth.unwrap_or(natural),
                    )?
                }
                (None, Some(path)) => {
                    let depth = depth
                        .ok_or_else(|| CliError::msg("--depth is required with --source"))?;
                    build_language(&load_source(path)?, depth)?
                }
                _ => return Err(CliError::msg("exactly one of --words/--source required")),
            };
            let maxlen = maxlen.unwrap_or_else(|| lang.depth().saturating_sub(2));
            match lang.order_condition(&pair, maxlen)? {
                OcVerdict::Holds => {
                    if structured {
                        emit(out, json!({ "verdict": "holds" }))?;
                    } else {
                        writeln!(out, "holds").map_err(|e| CliError::msg(e.to_string()))?;
                    }
                }
                OcVerdict::Violated(v) => {
                    if structured {
                        emit(
                            out,
                            json!({
                                "verdict": "violated",
                                "bispecial": v.bispecial.to_string(),
                                "first": [v.first.0, v.first.1],
                                "second": [v.second.0, v.second.1],
                            }),
                        )?;
                    } else {
                        writeln!(out, "violated: {v}").map_err(|e| CliError::msg(e.to_string()))?;
                    }
                }
            }
        }
        Command::Connections { source, pair, maxlen } => {
            let pair: OrderPair = pair.parse()?;
            let lang = source.build()?;
            let maxlen = maxlen.unwrap_or_else(|| lang.depth().saturating_sub(2));
            let found = lang.connections(&pair, maxlen)?;
            if structured {
                let list: Vec<serde_json::Value> = found.iter().map(connection_json).collect();
                emit(out, json!({ "connections": list }))?;
            } else if found.is_empty() {
                writeln!(out, "(none)").map_err(|e| CliError::msg(e.to_string()))?;
            } else {
                for c in found {
                    writeln!(out, "{c}").map_err(|e| CliError::msg(e.to_string()))?;
                }
            }
        }
        Command::Returns { source, word, kind } => {
            let lang = source.build()?;
            let found = lang.return_words(&Word::from(word.as_str()), (*kind).into())?;
            if structured {
                let list: Vec<String> = found.iter().map(|w| w.to_string()).collect();
                emit(out, json!({ "returns": list }))?;
            } else {
                for w in found {
                    writeln!(out, "{w}").map_err(|e| CliError::msg(e.to_string()))?;
                }
            }
        }
        Command::DeriveOrders { word, returns, pair, kind } => {
            let pair: OrderPair = pair.parse()?;
            let returns = parse_words(returns)?;
            let res = derive::derived_orders(
                &Word::from(word.as_str()),
                &returns,
                &pair,
                (*kind).into(),
            )?;
            if structured {
                let labels: Vec<serde_json::Value> = res
                    .labels
                    .iter()
                    .map(|(c, w)| json!({ "label": c, "return": w.to_string() }))
                    .collect();
                let comparisons: Vec<serde_json::Value> = res
                    .comparisons
                    .iter()
                    .map(|c| {
                        json!({
                            "first": c.first, "second": c.second,
                            "t": c.lex_index, "u": c.antilex_index,
                        })
                    })
                    .collect();
                emit(
                    out,
                    json!({
                        "pair": res.pair.to_string(),
                        "labels": labels,
                        "comparisons": comparisons,
                    }),
                )?;
            } else {
                writeln!(out, "derived pair: {}", res.pair)
                    .map_err(|e| CliError::msg(e.to_string()))?;
                for (c, w) in &res.labels {
                    writeln!(out, "{c} = {w}").map_err(|e| CliError::msg(e.to_string()))?;
                }
                for c in &res.comparisons {
                    writeln!(out, "compare {},{}: t={} u={}", c.first, c.second, c.lex_index, c.antilex_index)
                        .map_err(|e| CliError::msg(e.to_string()))?;
                }
            }
        }
        Command::ApplyMorphism { morphism, word } => {
            let phi = parse_morphism(morphism)?;
            let image = phi.apply(&Word::from(word.as_str()))?;
            if structured {
                emit(out, json!({ "image": image.to_string() }))?;
            } else {
                writeln!(out, "{image}").map_err(|e| CliError::msg(e.to_string()))?;
            }
        }
        Command::Rich { source, maxlen } => {
            let lang = source.build()?;
            match lang.richness_check(*maxlen)? {
                RichVerdict::RichUpTo(n) => {
                    if structured {
                        emit(out, json!({ "verdict": "rich", "maxlen": n }))?;
                    } else {
                        writeln!(out, "rich up to {n}").map_err(|e| CliError::msg(e.to_string()))?;
                    }
                }
                RichVerdict::Counterexample { palindrome, full_return } => {
                    if structured {
                        emit(
                            out,
                            json!({
                                "verdict": "counterexample",
                                "palindrome": palindrome.to_string(),
                                "full_return": full_return.to_string(),
                            }),
                        )?;
                    } else {
                        writeln!(
                            out,
                            "counterexample: palindrome \"{palindrome}\" has non-palindromic full return \"{full_return}\""
                        )
                        .map_err(|e| CliError::msg(e.to_string()))?;
                    }
                }
            }
        }
        Command::Palcx { source, max } => {
            let lang = source.build()?;
            let max = max.unwrap_or_else(|| lang.depth());
            if max > lang.depth() {
                return Err(CliError::msg(format!(
                    "--max {max} exceeds depth {}",
                    lang.depth()
                )));
            }
            if structured {
                let rows: Vec<serde_json::Value> = (0..=max)
                    .map(|n| {
                        Ok(json!({
                            "n": n,
                            "p": lang.factor_complexity(n)?,
                            "pc": lang.palindromic_complexity(n)?,
                        }))
                    })
                    .collect::<Result<_, iet_words::Error>>()?;
                emit(out, json!({ "complexity": rows }))?;
            } else {
                writeln!(out, "n p(n) PC(n)").map_err(|e| CliError::msg(e.to_string()))?;
                for n in 0..=max {
                    writeln!(
                        out,
                        "{n} {} {}",
                        lang.factor_complexity(n)?,
                        lang.palindromic_complexity(n)?
                    )
                    .map_err(|e| CliError::msg(e.to_string()))?;
                }
            }
        }
        Command::IetMake { pair, lengths, output } => {
            let pair: OrderPair = pair.parse()?;
            let letters = pair.order_d().ascending().to_vec();
            let parts: Vec<&str> =
                lengths.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
            if parts.len() != letters.len() {
                return Err(CliError::msg(format!(
                    "{} lengths for {} letters",
                    parts.len(),
                    letters.len()
                )));
            }
            let map = letters
                .iter()
                .zip(parts.iter())
                .map(|(&c, s)| Ok((c, iet_words::rat::parse_rat(s)?)))
                .collect::<Result<_, CliError>>()?;
            let t = iet_words::iet::PiecewiseAffineIet::make_standard(pair, &map)?;
            write_or_print(out, output, &iet_to_json(&t))?;
        }
        Command::IetCylinder { iet, word } => {
            let t = load_iet(iet)?;
            let j = t.cylinder(&Word::from(word.as_str()))?;
            if structured {
                emit(
                    out,
                    json!({
                        "empty": j.is_empty(),
                        "left": iet_words::rat::format_rat(j.left()),
                        "right": iet_words::rat::format_rat(j.right()),
                    }),
                )?;
            } else if j.is_empty() {
                writeln!(out, "empty").map_err(|e| CliError::msg(e.to_string()))?;
            } else {
                writeln!(out, "{j}").map_err(|e| CliError::msg(e.to_string()))?;
            }
        }
        Command::IetFactors { iet, depth } => {
            let t = load_iet(iet)?;
            let sets = t.coding_factors(*depth)?;
            if structured {
                let levels: Vec<serde_json::Value> = sets
                    .iter()
                    .enumerate()
                    .skip(1)
                    .map(|(n, set)| {
                        json!({
                            "length": n,
                            "words": set.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
                        })
                    })
                    .collect();
                emit(out, json!({ "factors": levels }))?;
            } else {
                for (n, set) in sets.iter().enumerate().skip(1) {
                    let words: Vec<String> = set.iter().map(|w| w.to_string()).collect();
                    writeln!(out, "{n}: {}", words.join(" "))
                        .map_err(|e| CliError::msg(e.to_string()))?;
                }
            }
        }
        Command::IetInduce { iet, word, cap, output } => {
            let t = load_iet(iet)?;
            let res = t.induce(&Word::from(word.as_str()), *cap)?;
            let spec = iet_to_json(&res.induced);
            if structured {
                let returns: Vec<serde_json::Value> = res
                    .return_words
                    .iter()
                    .map(|(c, w)| json!({ "label": c, "return": w.to_string() }))
                    .collect();
                emit(
                    out,
                    json!({
                        "base_cylinder": {
                            "left": iet_words::rat::format_rat(res.base_cylinder.left()),
                            "right": iet_words::rat::format_rat(res.base_cylinder.right()),
                        },
                        "returns": returns,
                        "pair": res.induced.pair().to_string(),
                        "induced": serde_json::from_str::<serde_json::Value>(&spec).expect("json"),
                    }),
                )?;
            } else {
                writeln!(out, "base cylinder: {}", res.base_cylinder)
                    .map_err(|e| CliError::msg(e.to_string()))?;
                for (c, w) in &res.return_words {
                    writeln!(out, "{c} = {w}").map_err(|e| CliError::msg(e.to_string()))?;
                }
                writeln!(out, "induced pair: {}", res.induced.pair())
                    .map_err(|e| CliError::msg(e.to_string()))?;
                match output {
                    Some(_) => {}
                    None => writeln!(out, "{spec}").map_err(|e| CliError::msg(e.to_string()))?,
                }
            }
            if let Some(path) = output {
                fs::write(path, format!("{spec}\n"))
                    .map_err(|e| CliError::msg(format!("cannot write {}: {e}", path.display())))?;
            }
        }
        Command::Saturate { words, pair, word, symmetric } => {
            let pair: OrderPair = pair.parse()?;
            let list = parse_words(words)?;
            let w = Word::from(word.as_str());
            let depth = list.iter().map(Word::len).max().unwrap_or(2).max(w.len() + 2);
            let lang = build_language(&LanguageSource::FiniteWords(list), depth)?;
            let rpair = pair.restricted_to(lang.alphabet())?;
            let g = lang.extension_graph(&w, &rpair)?;
            let print_edges = |out: &mut W, g: &iet_words::language::ExtensionGraph| {
                for &(x, y) in g.edges() {
                    writeln!(out, "{x} -> {y}").map_err(|e| CliError::msg(e.to_string()))?;
                }
                Ok::<(), CliError>(())
            };
            if *symmetric && w == w.reverse() {
                let sat = construct::saturate_symmetric(&g)?;
                if structured {
                    let edges: Vec<serde_json::Value> =
                        sat.edges().iter().map(|&(x, y)| json!([x, y])).collect();
                    emit(out, json!({ "word": w.to_string(), "edges": edges }))?;
                } else {
                    print_edges(out, &sat)?;
                }
            } else {
                let sat = construct::saturate(&g)?;
                if *symmetric {
                    let mirror = sat.mirrored()?;
                    if structured {
                        let edges: Vec<serde_json::Value> =
                            sat.edges().iter().map(|&(x, y)| json!([x, y])).collect();
                        let medges: Vec<serde_json::Value> =
                            mirror.edges().iter().map(|&(x, y)| json!([x, y])).collect();
                        emit(
                            out,
                            json!({
                                "word": w.to_string(), "edges": edges,
                                "mirror_word": mirror.word().to_string(), "mirror_edges": medges,
                            }),
                        )?;
                    } else {
                        print_edges(out, &sat)?;
                        writeln!(out, "mirror graph of \"{}\":", mirror.word())
                            .map_err(|e| CliError::msg(e.to_string()))?;
                        print_edges(out, &mirror)?;
                    }
                } else if structured {
                    let edges: Vec<serde_json::Value> =
                        sat.edges().iter().map(|&(x, y)| json!([x, y])).collect();
                    emit(out, json!({ "word": w.to_string(), "edges": edges }))?;
                } else {
                    print_edges(out, &sat)?;
                }
            }
        }
        Command::Extend { words, pair, horizon, symmetric } => {
            let pair: OrderPair = pair.parse()?;
            let list = parse_words(words)?;
            let lang = construct::extend_language(&list, &pair, *horizon, *symmetric)?;
            if structured {
                let levels: Vec<serde_json::Value> = (1..=lang.depth())
                    .map(|n| {
                        Ok(json!({
                            "length": n,
                            "words": lang
                                .factor_set(n)?
                                .iter()
                                .map(|w| w.to_string())
                                .collect::<Vec<_>>(),
                        }))
                    })
                    .collect::<Result<_, iet_words::Error>>()?;
                emit(out, json!({ "language": levels }))?;
            } else {
                for n in 1..=lang.depth() {
                    let words: Vec<String> =
                        lang.factor_set(n)?.iter().map(|w| w.to_string()).collect();
                    writeln!(out, "{n}: {}", words.join(" "))
                        .map_err(|e| CliError::msg(e.to_string()))?;
                }
            }
        }
        Command::BuildAffine { words, pair, output } => {
            let pair: OrderPair = pair.parse()?;
            let list = parse_words(words)?;
            let t = construct::build_affine(&list, &pair)?;
            write_or_print(out, output, &iet_to_json(&t))?;
        }
        Command::DecideSymmetric { word, words, pair } => {
            let pair: OrderPair = pair.parse()?;
            let list = match (word, words) {
                (Some(w), None) => vec![Word::from(w.as_str())],
                (None, Some(spec)) => parse_words(spec)?,
                _ => return Err(CliError::msg("exactly one of --word/--words required")),
            };
            match construct::decide_standard_symmetric(&list, &pair)? {
                construct::SymmetricVerdict::Producible => {
                    if structured {
                        emit(out, json!({ "verdict": "producible" }))?;
                    } else {
                        writeln!(out, "producible").map_err(|e| CliError::msg(e.to_string()))?;
                    }
                }
                construct::SymmetricVerdict::NotProducible(v) => {
                    if structured {
                        emit(
                            out,
                            json!({
                                "verdict": "not producible",
                                "bispecial": v.bispecial.to_string(),
                                "first": [v.first.0, v.first.1],
                                "second": [v.second.0, v.second.1],
                            }),
                        )?;
                    } else {
                        writeln!(out, "not producible: {v}")
                            .map_err(|e| CliError::msg(e.to_string()))?;
                    }
                }
            }
        }
        Command::SearchStandard { words, pair, max_den, depth } => {
            let pair: OrderPair = pair.parse()?;
            let list = parse_words(words)?;
            match construct::standard_iet_search(&list, &pair, *max_den, *depth)? {
                Some(t) => {
                    let spec = iet_to_json(&t);
                    if structured {
                        emit(
                            out,
                            json!({
                                "verdict": "found",
                                "iet": serde_json::from_str::<serde_json::Value>(&spec)
                                    .expect("json"),
                            }),
                        )?;
                    } else {
                        writeln!(out, "{spec}").map_err(|e| CliError::msg(e.to_string()))?;
                    }
                }
                None => {
                    if structured {
                        emit(out, json!({ "verdict": "none" }))?;
                    } else {
                        writeln!(out, "none").map_err(|e| CliError::msg(e.to_string()))?;
                    }
                }
            }
        }
    }
    Ok(())
}
