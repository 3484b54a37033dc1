//! Terminal front end: count avoiders, reproduce the reference tables,
//! classify patterns into Wilf classes, explore cut-pair classes and Dyck
//! paths, and run the verification suites.
//!
//! Exit codes: 0 on success, 1 on a verification mismatch, 2 on usage or
//! parse errors.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use zigzag::counting::{
    build_table, count_avoiders, uses_recurrence_convention_at_n1, wilf_class_letter,
    wilf_partition, Parity,
};
use zigzag::formulas::{predicted_count, ExactInt, Prediction, Provenance};
use zigzag::patterns::{all_patterns, VincularPattern};
use zigzag::structure::{
    class_members, class_to_dyck, class_word_count, dyck_to_class, enumerate_classes, CutClass,
    CutPair, DyckPath,
};
use zigzag::words::Orientation;

mod verify;

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "zigzag",
    version,
    about = "Exact counts of pattern-avoiding alternating (zigzag) words",
    long_about = "Counts alternating words over {1, ..., k} that avoid a length-3 pattern, \
                  cross-checks brute-force enumeration against closed forms, and explores the \
                  cut-pair classes of 123-avoiding up-down words and their Dyck paths.\n\n\
                  Patterns are dash-separated digit blocks: letters in a block must be adjacent \
                  in an occurrence (\"132\" is consecutive, \"1-32\" glues only 32, \"1-3-2\" is \
                  classical)."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrientationArg {
    UpDown,
    DownUp,
}

impl From<OrientationArg> for Orientation {
    fn from(o: OrientationArg) -> Orientation {
        match o {
            OrientationArg::UpDown => Orientation::UpDown,
            OrientationArg::DownUp => Orientation::DownUp,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Brute,
    Formula,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Plain,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ParityArg {
    Even,
    Odd,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Count length-n alternating words over {1, ..., k} avoiding a pattern
    Count {
        /// Pattern, e.g. "132", "1-32", "1-3-2"
        pattern: String,
        #[arg(short, long)]
        k: u8,
        #[arg(short, long)]
        n: usize,
        #[arg(long, value_enum, default_value = "up-down")]
        orientation: OrientationArg,
        /// brute enumerates; formula evaluates the predicted count; both
        /// prints the two values and a MATCH/MISMATCH verdict
        #[arg(long, value_enum, default_value = "brute")]
        method: Method,
    },
    /// Print the avoider-count grid for 2 <= k <= K_MAX, 0 <= n <= N_MAX
    Table {
        pattern: String,
        k_max: u8,
        n_max: usize,
        #[arg(long, value_enum, default_value = "up-down")]
        orientation: OrientationArg,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Group all 24 length-3 patterns by their empirical avoider counts and
    /// compare with the known class letters
    Wilf {
        #[arg(long, default_value_t = 5)]
        k_max: u8,
        /// Largest word length; each parity uses its own lengths up to this
        #[arg(long, default_value_t = 9)]
        n_max: usize,
        #[arg(long, value_enum, default_value = "both")]
        parity: ParityArg,
    },
    /// List the cut-equivalence classes of 123-avoiding up-down words of
    /// even length over {1, ..., k}
    Classes {
        k: u8,
        /// Also report how many words of length 2i each class holds
        #[arg(long)]
        i: Option<usize>,
        /// Print every member word (requires --i)
        #[arg(long)]
        list_members: bool,
    },
    /// Convert between Dyck paths and cut-pair classes
    Dyck {
        /// Alphabet size; paths have semi-length k - 2
        #[arg(short, long)]
        k: u8,
        /// A path over U/D, e.g. "UUDUDD" (converts path -> class)
        path: Option<String>,
        /// Cut-pairs like "34,23" or "3:4,2:3" (converts class -> path)
        #[arg(long)]
        pairs: Option<String>,
    },
    /// Run the verification suites
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: verify::Suite,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Count {
            pattern,
            k,
            n,
            orientation,
            method,
        } => cmd_count(&pattern, k, n, orientation.into(), method),
        Command::Table {
            pattern,
            k_max,
            n_max,
            orientation,
            format,
        } => cmd_table(&pattern, k_max, n_max, orientation.into(), format),
        Command::Wilf {
            k_max,
            n_max,
            parity,
        } => cmd_wilf(k_max, n_max, parity),
        Command::Classes { k, i, list_members } => cmd_classes(k, i, list_members),
        Command::Dyck { k, path, pairs } => cmd_dyck(k, path.as_deref(), pairs.as_deref()),
        Command::Verify { suite } => verify::run(suite),
    }
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn parse_pattern(s: &str) -> Result<VincularPattern, ExitCode> {
    s.parse::<VincularPattern>()
        .map_err(|e| usage_error(&format!("bad pattern `{s}`: {e}")))
}

/// The predicted count for either orientation: down-up counts equal up-down
/// counts of the complemented pattern.
fn predict(p: &VincularPattern, k: u8, n: usize, o: Orientation) -> Prediction {
    match o {
        Orientation::UpDown => predicted_count(p, k, n),
        Orientation::DownUp => predicted_count(&p.complement(), k, n),
    }
}

fn cmd_count(pattern: &str, k: u8, n: usize, o: Orientation, method: Method) -> ExitCode {
    let p = match parse_pattern(pattern) {
        Ok(p) => p,
        Err(code) => return code,
    };
    if k == 0 {
        return usage_error("alphabet size k must be at least 1");
    }
    match method {
        Method::Brute => {
            println!("{}", count_avoiders(k, n, &p, o));
            ExitCode::SUCCESS
        }
        Method::Formula => {
            if k < 2 {
                return usage_error("the formula method needs k >= 2");
            }
            let prediction = predict(&p, k, n, o);
            println!("{}", prediction.value);
            if prediction.provenance == Provenance::BruteForce {
                eprintln!("note: no closed form for this case; value obtained by enumeration");
            }
            ExitCode::SUCCESS
        }
        Method::Both => {
            if k < 2 {
                return usage_error("the formula method needs k >= 2");
            }
            let brute = ExactInt::from(count_avoiders(k, n, &p, o));
            let prediction = predict(&p, k, n, o);
            println!("brute-force: {brute}");
            println!(
                "formula:     {} ({})",
                prediction.value, prediction.provenance
            );
            if brute == prediction.value {
                println!("MATCH");
                ExitCode::SUCCESS
            } else {
                println!("MISMATCH");
                ExitCode::from(EXIT_MISMATCH)
            }
        }
    }
}

fn cmd_table(pattern: &str, k_max: u8, n_max: usize, o: Orientation, format: Format) -> ExitCode {
    let p = match parse_pattern(pattern) {
        Ok(p) => p,
        Err(code) => return code,
    };
    if k_max < 2 {
        return usage_error("k_max must be at least 2");
    }
    let table = build_table(&p, o, k_max, n_max);
    match format {
        Format::Plain => {
            let flagged = uses_recurrence_convention_at_n1(&p) && n_max >= 1;
            println!("avoiders of {p} among {o} words");
            print!("{:>4}", "k\\n");
            for n in 0..=n_max {
                let marker = if flagged && n == 1 { "*" } else { "" };
                print!(" {:>8}", format!("{n}{marker}"));
            }
            println!();
            for k in 2..=k_max {
                print!("{k:>4}");
                for n in 0..=n_max {
                    print!(" {:>8}", table.get(k, n).unwrap());
                }
                println!();
            }
            if flagged {
                println!(
                    "* true count of length-1 words (k); the odd-length recurrence \
                     bookkeeps this entry as k - 1"
                );
            }
        }
        Format::Csv => {
            println!("k,n,count");
            for (k, n, count) in table.iter() {
                println!("{k},{n},{count}");
            }
        }
        Format::Json => {
            println!("{}", serde_json::to_string_pretty(&table.to_doc()).unwrap());
        }
    }
    ExitCode::SUCCESS
}

/// Outcome of comparing an empirical partition with the known class letters.
enum WilfVerdict {
    Match,
    Inconclusive(Vec<String>),
    Mismatch(Vec<String>),
}

fn classify_partition(partition: &[Vec<VincularPattern>], parity: Parity) -> WilfVerdict {
    let mut splits = Vec::new();
    let mut merges = Vec::new();
    let mut seen_letters: Vec<(char, usize)> = Vec::new();
    for (idx, block) in partition.iter().enumerate() {
        let mut letters: Vec<char> = block
            .iter()
            .filter_map(|p| wilf_class_letter(p, parity))
            .collect();
        letters.sort_unstable();
        letters.dedup();
        if letters.len() > 1 {
            merges.push(format!(
                "classes {} share all tested counts",
                letters
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join("/")
            ));
        }
        for &letter in &letters {
            if let Some(&(_, first_idx)) = seen_letters.iter().find(|&&(l, _)| l == letter) {
                if first_idx != idx {
                    splits.push(format!("class {letter} split across blocks"));
                }
            } else {
                seen_letters.push((letter, idx));
            }
        }
    }
    if !splits.is_empty() {
        WilfVerdict::Mismatch(splits)
    } else if !merges.is_empty() {
        WilfVerdict::Inconclusive(merges)
    } else {
        WilfVerdict::Match
    }
}

fn cmd_wilf(k_max: u8, n_max: usize, parity: ParityArg) -> ExitCode {
    if k_max < 2 {
        return usage_error("k_max must be at least 2");
    }
    let parities: &[Parity] = match parity {
        ParityArg::Even => &[Parity::Even],
        ParityArg::Odd => &[Parity::Odd],
        ParityArg::Both => &[Parity::Even, Parity::Odd],
    };
    let patterns = all_patterns();
    let mut worst = 0u8;
    for &par in parities {
        let (label, cap) = match par {
            Parity::Even => ("even", n_max - n_max % 2),
            Parity::Odd => (
                "odd",
                if n_max % 2 == 1 {
                    n_max
                } else {
                    n_max.saturating_sub(1)
                },
            ),
        };
        println!("{label} lengths (k <= {k_max}, n <= {cap}):");
        let partition = wilf_partition(&patterns, Orientation::UpDown, k_max, n_max, par);
        for block in &partition {
            let letters: Vec<char> = block
                .iter()
                .filter_map(|p| wilf_class_letter(p, par))
                .collect();
            let label = match letters.first() {
                Some(&l) if letters.iter().all(|&x| x == l) => format!("class {l}"),
                Some(_) => "mixed  ".to_string(),
                None => "other  ".to_string(),
            };
            let members: Vec<String> = block
                .iter()
                .map(|p| {
                    if p.is_classical() {
                        format!("{p} (classical)")
                    } else {
                        p.to_string()
                    }
                })
                .collect();
            println!("  {label}: {}", members.join("  "));
        }
        match classify_partition(&partition, par) {
            WilfVerdict::Match => println!("  verdict: MATCH"),
            WilfVerdict::Inconclusive(notes) => {
                println!("  verdict: INCONCLUSIVE at this scale");
                for note in notes {
                    println!("    {note}");
                }
            }
            WilfVerdict::Mismatch(notes) => {
                println!("  verdict: MISMATCH");
                for note in notes {
                    println!("    {note}");
                }
                worst = worst.max(EXIT_MISMATCH);
            }
        }
    }
    ExitCode::from(worst)
}

fn cmd_classes(k: u8, i: Option<usize>, list_members: bool) -> ExitCode {
    if k < 2 {
        return usage_error("k must be at least 2");
    }
    if list_members && i.is_none() {
        return usage_error("--list-members needs --i to fix the word length");
    }
    let classes = enumerate_classes(k);
    println!("{} cut-equivalence classes for k = {k}", classes.len());
    let mut total = ExactInt::from(0u8);
    for (idx, class) in classes.iter().enumerate() {
        let path = class_to_dyck(class);
        let path_str = if path.steps().is_empty() {
            "(empty)".to_string()
        } else {
            path.to_string()
        };
        print!(
            "{:>3}. pairs {:<16} path {:<18} valleys {}",
            idx + 1,
            class.to_string(),
            path_str,
            path.valleys()
        );
        if let Some(i) = i {
            let count = class_word_count(class, i);
            total += &count;
            print!("  words(2i={}) {}", 2 * i, count);
        }
        println!();
        if list_members {
            for word in class_members(class, i.unwrap()) {
                println!("       {word}");
            }
        }
    }
    if let Some(i) = i {
        println!("total words of length {}: {total}", 2 * i);
    }
    ExitCode::SUCCESS
}

fn parse_pairs(s: &str, k: u8) -> Result<CutClass, String> {
    let trimmed = s.trim();
    let mut pairs = Vec::new();
    if !trimmed.is_empty() {
        for token in trimmed.split(',') {
            let token = token.trim();
            let (b, t) = if let Some((b, t)) = token.split_once(':') {
                (
                    b.parse::<u8>().map_err(|_| format!("bad bottom `{b}`"))?,
                    t.parse::<u8>().map_err(|_| format!("bad top `{t}`"))?,
                )
            } else {
                let digits: Vec<char> = token.chars().collect();
                if digits.len() != 2 {
                    return Err(format!("pair `{token}` is not two digits or b:t"));
                }
                let b = digits[0]
                    .to_digit(10)
                    .ok_or(format!("bad digit `{}`", digits[0]))?;
                let t = digits[1]
                    .to_digit(10)
                    .ok_or(format!("bad digit `{}`", digits[1]))?;
                (b as u8, t as u8)
            };
            pairs.push(CutPair { b, t });
        }
    }
    CutClass::new(k, pairs).map_err(|e| e.to_string())
}

fn cmd_dyck(k: u8, path: Option<&str>, pairs: Option<&str>) -> ExitCode {
    if k < 2 {
        return usage_error("k must be at least 2");
    }
    match (path, pairs) {
        (Some(path_str), None) => {
            let path: DyckPath = match path_str.parse() {
                Ok(p) => p,
                Err(e) => return usage_error(&format!("bad path `{path_str}`: {e}")),
            };
            match dyck_to_class(&path, k) {
                Ok(class) => {
                    println!("class {class}");
                    println!("valleys {}", path.valleys());
                    ExitCode::SUCCESS
                }
                Err(e) => usage_error(&e.to_string()),
            }
        }
        (None, Some(pair_str)) => match parse_pairs(pair_str, k) {
            Ok(class) => {
                let path = class_to_dyck(&class);
                let path_str = if path.steps().is_empty() {
                    "(empty)".to_string()
                } else {
                    path.to_string()
                };
                println!("path {path_str}");
                println!("valleys {}", path.valleys());
                ExitCode::SUCCESS
            }
            Err(e) => usage_error(&e),
        },
        _ => usage_error("give exactly one of a path argument or --pairs"),
    }
}
