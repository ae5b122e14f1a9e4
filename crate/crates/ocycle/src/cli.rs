//! Command line interface.
//!
//! Five subcommands: `gen` builds a cycle file for a family, `verify`
//! re-checks one, `check` runs the sweep suites, `siteswap` classifies a
//! juggling pattern, and `diagram` draws one. Exit codes are part of the
//! contract:
//!
//! * `0`: success (including `--help`/`--version`).
//! * `1`: usage or parse errors of any kind.
//! * `2`: the requested cycle provably does not exist.
//! * `3`: a verification failure: findings on `verify`, an in-scope
//!   disagreement or failed lemma on `check`, an invalid pattern on
//!   `siteswap`.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::cycle::{assemble_ocycle, existence_predicate, verify_ocycle};
use crate::cycle_file::CycleFile;
use crate::diagram::{ascii_diagram, pattern_name, svg_diagram};
use crate::digraph::build_digraph;
use crate::error::ParameterError;
use crate::harness::{
    check_juggling_theorem, check_k_perm_construction, check_perm_theorem, check_strings_theorem,
    lemma_property_suite, FamilyParams, SweepCaps, SweepResult,
};
use crate::juggling::{permutation_sequence, validate_juggling, JugglingSequence};
use crate::word::{gcd, MultisetSpec, Word};

const EXIT_OK: i32 = 0;
const EXIT_USAGE: i32 = 1;
const EXIT_INFEASIBLE: i32 = 2;
const EXIT_VERIFY: i32 = 3;

#[derive(Parser)]
#[command(
    name = "ocycle",
    version,
    about = "Construct and verify overlap cycles for combinatorial families",
    arg_required_else_help = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an overlap cycle and print it as a cycle file
    Gen(GenArgs),
    /// Re-verify a cycle file against its regenerated object family
    Verify(VerifyArgs),
    /// Sweep parameter grids comparing the existence criterion with the
    /// Euler oracle
    Check(CheckArgs),
    /// Classify a juggling pattern
    Siteswap(SiteswapArgs),
    /// Draw a juggling pattern as an arc diagram
    Diagram(DiagramArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    Perms,
    Msetperms,
    Kperms,
    Surjections,
    Juggling,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum DiagramFormat {
    #[default]
    Ascii,
    Svg,
}

#[derive(Args)]
struct GenArgs {
    /// Object family to cover
    #[arg(long, value_enum)]
    family: Family,
    /// Word length; ground set size for kperms, period for juggling
    #[arg(long)]
    n: Option<usize>,
    /// Selection size (kperms only)
    #[arg(long)]
    k: Option<usize>,
    /// Alphabet size (surjections only)
    #[arg(long)]
    h: Option<u32>,
    /// Maximum ball count (juggling only)
    #[arg(long)]
    b: Option<u32>,
    /// Overlap between consecutive words
    #[arg(long)]
    s: usize,
    /// Multiset symbols for msetperms, e.g. "0,0,1,2" or "0012"
    #[arg(long)]
    multiset: Option<String>,
    #[arg(long, value_enum, default_value_t)]
    format: OutputFormat,
    /// Write to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Embed the decoded object listing in the cycle file
    #[arg(long)]
    objects: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Cycle file to verify, or - for stdin
    file: PathBuf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    Perms,
    Juggling,
    Strings,
    Kperms,
    Lemmas,
    All,
}

#[derive(Args)]
struct CheckArgs {
    /// Which sweep to run
    #[arg(value_enum)]
    suite: Suite,
    /// Cap overrides as KEY=VALUE (e.g. perm-n-max=5 trials=200)
    #[arg(value_name = "KEY=VALUE")]
    overrides: Vec<String>,
    /// Comma-separated cap overrides, same keys as the positionals
    #[arg(long)]
    caps: Option<String>,
    /// Seed for the randomized lemma trials
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum, default_value_t)]
    format: OutputFormat,
}

#[derive(Args)]
struct SiteswapArgs {
    /// Throw heights, as one token ("015") or separate integers
    #[arg(required = true)]
    heights: Vec<String>,
}

#[derive(Args)]
struct DiagramArgs {
    /// Throw heights, as one token ("015") or separate integers
    #[arg(required = true)]
    heights: Vec<String>,
    /// How many repetitions of the pattern to draw
    #[arg(long, default_value_t = 2)]
    periods: usize,
    #[arg(long, value_enum, default_value_t)]
    format: DiagramFormat,
    /// Write to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Parses and runs a full command line (the leading element is the program
/// name, as in `std::env::args_os`), returning the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp
                | ErrorKind::DisplayVersion
                | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = err.print();
            return code;
        }
    };
    match cli.command {
        Command::Gen(args) => cmd_gen(&args),
        Command::Verify(args) => cmd_verify(&args),
        Command::Check(args) => cmd_check(&args),
        Command::Siteswap(args) => cmd_siteswap(&args),
        Command::Diagram(args) => cmd_diagram(&args),
    }
}

fn usage_error(message: &str) -> i32 {
    eprintln!("error: {message}");
    EXIT_USAGE
}

fn emit(text: &str, out: Option<&Path>) -> i32 {
    match out {
        None => {
            print!("{text}");
            EXIT_OK
        }
        Some(path) => match fs::write(path, text) {
            Ok(()) => EXIT_OK,
            Err(err) => usage_error(&format!("cannot write {}: {err}", path.display())),
        },
    }
}

/// Resolves `gen` arguments into family parameters, the family-level size,
/// and the enumerated objects.
fn resolve_family(args: &GenArgs) -> Result<(FamilyParams, usize, Vec<Word>), String> {
    let need = |name: &str, ok: bool| {
        if ok {
            Ok(())
        } else {
            Err(format!("--family {:?} requires --{name}", args.family).to_lowercase())
        }
    };
    match args.family {
        Family::Perms => {
            need("n", args.n.is_some())?;
            let n = args.n.unwrap();
            let spec = MultisetSpec::all_distinct(n).map_err(|e| e.to_string())?;
            let params = FamilyParams::MultisetPermutations {
                symbols: spec.sorted_symbols(),
            };
            let objects = crate::enumerate::multiset_permutations(&spec).collect();
            Ok((params, n, objects))
        }
        Family::Msetperms => {
            need("multiset", args.multiset.is_some())?;
            let word: Word = args
                .multiset
                .as_ref()
                .unwrap()
                .parse()
                .map_err(|e: ParameterError| e.to_string())?;
            let spec = MultisetSpec::from_symbols(word.symbols()).map_err(|e| e.to_string())?;
            let n = spec.size();
            if let Some(given) = args.n {
                if given != n {
                    return Err(format!(
                        "--n {given} conflicts with the {n} symbols in --multiset"
                    ));
                }
            }
            let params = FamilyParams::MultisetPermutations {
                symbols: spec.sorted_symbols(),
            };
            let objects = crate::enumerate::multiset_permutations(&spec).collect();
            Ok((params, n, objects))
        }
        Family::Kperms => {
            need("n", args.n.is_some())?;
            need("k", args.k.is_some())?;
            let (n, k) = (args.n.unwrap(), args.k.unwrap());
            let objects = crate::enumerate::k_permutations(n, k)
                .map_err(|e| e.to_string())?
                .collect();
            Ok((FamilyParams::KPermutations { ground: n, k }, n, objects))
        }
        Family::Surjections => {
            need("n", args.n.is_some())?;
            need("h", args.h.is_some())?;
            let (n, h) = (args.n.unwrap(), args.h.unwrap());
            let objects = crate::enumerate::surjective_strings(n, h)
                .map_err(|e| e.to_string())?
                .collect();
            Ok((FamilyParams::SurjectiveStrings { alphabet: h }, n, objects))
        }
        Family::Juggling => {
            need("n", args.n.is_some())?;
            need("b", args.b.is_some())?;
            let (n, b) = (args.n.unwrap(), args.b.unwrap());
            let objects = crate::enumerate::enumerate_juggling_sequences(n, b)
                .map_err(|e| e.to_string())?
                .into_iter()
                .map(|j| j.into_word())
                .collect();
            Ok((FamilyParams::JugglingSequences { max_balls: b }, n, objects))
        }
    }
}

fn cmd_gen(args: &GenArgs) -> i32 {
    let (params, n, objects) = match resolve_family(args) {
        Ok(resolved) => resolved,
        Err(message) => return usage_error(&message),
    };
    let word_len = objects.first().map_or(0, Word::len);
    let graph = match build_digraph(&objects, args.s) {
        Ok(graph) => graph,
        Err(err) => return usage_error(&err.to_string()),
    };
    let tour = match graph.euler_tour() {
        Ok(tour) => tour,
        Err(err) => {
            eprintln!("no {}-overlap cycle exists for this family: {err}", args.s);
            let iff_family = matches!(params, FamilyParams::MultisetPermutations { .. })
                || matches!(params, FamilyParams::JugglingSequences { .. });
            if iff_family && !existence_predicate(word_len, args.s).unwrap_or(true) {
                let d = gcd(word_len, args.s);
                eprintln!(
                    "note: n - s = {} = gcd(n, s) = {d}; existence requires n - s > gcd(n, s)",
                    word_len - args.s
                );
            }
            return EXIT_INFEASIBLE;
        }
    };
    let cycle = assemble_ocycle(&tour, args.s);
    let report = verify_ocycle(&cycle, &objects).expect("objects are well formed");
    if !report.pass() {
        eprint!("{report}");
        return EXIT_VERIFY;
    }
    let file = CycleFile::new(&params, n, &cycle, args.objects);
    let text = match args.format {
        OutputFormat::Text => file.to_text(),
        OutputFormat::Json => file.to_json(),
    };
    emit(&text, args.out.as_deref())
}

fn cmd_verify(args: &VerifyArgs) -> i32 {
    let content = if args.file == Path::new("-") {
        let mut buffer = String::new();
        match std::io::stdin().read_to_string(&mut buffer) {
            Ok(_) => buffer,
            Err(err) => return usage_error(&format!("cannot read stdin: {err}")),
        }
    } else {
        match fs::read_to_string(&args.file) {
            Ok(content) => content,
            Err(err) => {
                return usage_error(&format!("cannot read {}: {err}", args.file.display()))
            }
        }
    };
    let file = match CycleFile::parse(&content) {
        Ok(file) => file,
        Err(err) => return usage_error(&err.to_string()),
    };
    let expected = match file.header.expected_objects() {
        Ok(expected) => expected,
        Err(err) => return usage_error(&err.to_string()),
    };
    let cycle = match file.cycle() {
        Ok(cycle) => cycle,
        Err(err) => return usage_error(&err.to_string()),
    };
    match verify_ocycle(&cycle, &expected) {
        Ok(report) if report.pass() => {
            println!(
                "ok: cycle covers all {} objects of family {} with overlap {}",
                expected.len(),
                file.header.family,
                file.header.s
            );
            EXIT_OK
        }
        Ok(report) => {
            print!("{report}");
            EXIT_VERIFY
        }
        Err(err) => usage_error(&err.to_string()),
    }
}

fn apply_cap_override(caps: &mut SweepCaps, key: &str, value: &str) -> Result<(), String> {
    let parse_usize = || value.parse::<usize>().map_err(|_| {
        format!("cannot parse {value:?} as an integer for {key}")
    });
    match key.replace('-', "_").as_str() {
        "perm_n_max" => caps.perm_n_max = parse_usize()?,
        "juggling_n_max" => caps.juggling_n_max = parse_usize()?,
        "juggling_b_max" => {
            caps.juggling_b_max = value
                .parse()
                .map_err(|_| format!("cannot parse {value:?} as an integer for {key}"))?
        }
        "strings_n_max" => caps.strings_n_max = parse_usize()?,
        "kperm_n_max" => caps.kperm_n_max = parse_usize()?,
        "trials" => caps.trials = parse_usize()?,
        "lemma_n_max" => caps.lemma_n_max = parse_usize()?,
        "seed" => {
            caps.seed = value
                .parse()
                .map_err(|_| format!("cannot parse {value:?} as an integer for {key}"))?
        }
        other => return Err(format!("unknown cap {other:?}")),
    }
    Ok(())
}

fn resolve_caps(args: &CheckArgs) -> Result<SweepCaps, String> {
    let mut caps = SweepCaps::default();
    let mut pairs: Vec<String> = Vec::new();
    if let Some(flag) = &args.caps {
        pairs.extend(flag.split(',').map(str::to_owned));
    }
    pairs.extend(args.overrides.iter().cloned());
    for pair in pairs {
        let pair = pair.trim();
        if pair.is_empty() {
            continue;
        }
        let (key, value) = pair
            .split_once('=')
            .ok_or_else(|| format!("expected KEY=VALUE, got {pair:?}"))?;
        apply_cap_override(&mut caps, key.trim(), value.trim())?;
    }
    if let Some(seed) = args.seed {
        caps.seed = seed;
    }
    Ok(caps)
}

fn yes_no(value: bool) -> &'static str {
    if value {
        "yes"
    } else {
        "no"
    }
}

fn sweep_table(rows: &[SweepResult]) -> String {
    let family_width = rows
        .iter()
        .map(|r| r.family.to_string().len())
        .max()
        .unwrap_or(6)
        .max("family".len());
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<family_width$}  {:>3}  {:>3}  {:>9}  {:>8}  {:>5}  {:>5}  {:>7}  {:>8}",
        "family", "n", "s", "predicted", "observed", "agree", "scope", "objects", "verified"
    );
    for row in rows {
        let predicted = row.predicted.map_or("-", yes_no);
        let verified = row.verified.map_or("-", yes_no);
        let _ = writeln!(
            out,
            "{:<family_width$}  {:>3}  {:>3}  {:>9}  {:>8}  {:>5}  {:>5}  {:>7}  {:>8}",
            row.family.to_string(),
            row.n,
            row.s,
            predicted,
            yes_no(row.observed),
            yes_no(row.agreement),
            yes_no(row.in_theorem_scope),
            row.object_count,
            verified
        );
        if let Some(witness) = &row.witness {
            let _ = writeln!(out, "{:family_width$}  witness: {witness}", "");
        }
        if !row.in_theorem_scope {
            let note = if row.predicted.is_none() {
                "no claim is made for this row"
            } else {
                "single rotation class: the converse argument needs two, \
                 so the criterion does not apply"
            };
            let _ = writeln!(out, "{:family_width$}  note: {note}", "");
        }
    }
    out
}

fn cmd_check(args: &CheckArgs) -> i32 {
    let caps = match resolve_caps(args) {
        Ok(caps) => caps,
        Err(message) => return usage_error(&message),
    };

    let mut rows: Vec<SweepResult> = Vec::new();
    let mut sections: Vec<(&str, usize)> = Vec::new();
    let mut collect = |name: &'static str, section: Vec<SweepResult>| {
        sections.push((name, section.len()));
        rows.extend(section);
    };
    if matches!(args.suite, Suite::Perms | Suite::All) {
        collect("perms", check_perm_theorem(caps.perm_n_max, &[]));
    }
    if matches!(args.suite, Suite::Juggling | Suite::All) {
        collect(
            "juggling",
            check_juggling_theorem(caps.juggling_n_max, caps.juggling_b_max),
        );
    }
    if matches!(args.suite, Suite::Strings | Suite::All) {
        collect("strings", check_strings_theorem(caps.strings_n_max));
    }
    if matches!(args.suite, Suite::Kperms | Suite::All) {
        collect("kperms", check_k_perm_construction(caps.kperm_n_max));
    }
    let lemmas = matches!(args.suite, Suite::Lemmas | Suite::All)
        .then(|| lemma_property_suite(caps.trials, caps.lemma_n_max, caps.seed));

    let rows_ok = rows.iter().all(SweepResult::acceptable);
    let lemmas_ok = lemmas.as_ref().is_none_or(|report| report.pass());

    match args.format {
        OutputFormat::Json => {
            #[derive(serde::Serialize)]
            struct CheckOutput<'a> {
                caps: &'a SweepCaps,
                rows: &'a [SweepResult],
                #[serde(skip_serializing_if = "Option::is_none")]
                lemma_findings: Option<Vec<String>>,
                pass: bool,
            }
            let output = CheckOutput {
                caps: &caps,
                rows: &rows,
                lemma_findings: lemmas
                    .as_ref()
                    .map(|r| r.findings.iter().map(|f| f.to_string()).collect()),
                pass: rows_ok && lemmas_ok,
            };
            println!(
                "{}",
                serde_json::to_string(&output).expect("output serializes")
            );
        }
        OutputFormat::Text => {
            if !rows.is_empty() {
                print!("{}", sweep_table(&rows));
            }
            for (name, count) in &sections {
                let section_ok = rows
                    .iter()
                    .filter(|r| section_of(r) == *name)
                    .all(SweepResult::acceptable);
                println!(
                    "suite {name}: {count} rows, {}",
                    if section_ok { "ok" } else { "FAILED" }
                );
            }
            if let Some(report) = &lemmas {
                if report.pass() {
                    println!(
                        "suite lemmas: {} random trials with seed {}, ok",
                        caps.trials, caps.seed
                    );
                } else {
                    print!("{report}");
                    println!("suite lemmas: FAILED");
                }
            }
            println!("result: {}", if rows_ok && lemmas_ok { "pass" } else { "FAIL" });
        }
    }
    if rows_ok && lemmas_ok {
        EXIT_OK
    } else {
        EXIT_VERIFY
    }
}

fn section_of(row: &SweepResult) -> &'static str {
    match row.family {
        FamilyParams::MultisetPermutations { .. } => "perms",
        FamilyParams::JugglingSequences { .. } => "juggling",
        FamilyParams::SurjectiveStrings { .. } => "strings",
        FamilyParams::KPermutations { .. } => "kperms",
    }
}

fn parse_heights(tokens: &[String]) -> Result<Word, ParameterError> {
    tokens.join(" ").parse()
}

fn cmd_siteswap(args: &SiteswapArgs) -> i32 {
    let word = match parse_heights(&args.heights) {
        Ok(word) => word,
        Err(err) => return usage_error(&err.to_string()),
    };
    let perm = permutation_sequence(&word);
    println!("pattern: {}", pattern_name(&word));
    println!("heights: {word}");
    println!("landing slots: {}", perm.word());
    if validate_juggling(&word) {
        let sequence = JugglingSequence::new(word).expect("validated");
        println!("valid: yes");
        println!("balls: {}", sequence.ball_count());
        EXIT_OK
    } else {
        let n = word.len();
        let mut seen: Vec<Option<usize>> = vec![None; n];
        let mut clash = None;
        for i in 0..n {
            let slot = perm.get(i).expect("index in range") as usize;
            match seen[slot] {
                Some(earlier) => {
                    clash = Some((earlier, i, slot));
                    break;
                }
                None => seen[slot] = Some(i),
            }
        }
        match clash {
            Some((a, b, slot)) => println!(
                "valid: no (throws at beats {a} and {b} both land at slot {slot} mod {n})"
            ),
            None => println!("valid: no"),
        }
        EXIT_VERIFY
    }
}

fn cmd_diagram(args: &DiagramArgs) -> i32 {
    let word = match parse_heights(&args.heights) {
        Ok(word) => word,
        Err(err) => return usage_error(&err.to_string()),
    };
    let rendered = match args.format {
        DiagramFormat::Ascii => ascii_diagram(&word, args.periods),
        DiagramFormat::Svg => svg_diagram(&word, args.periods),
    };
    match rendered {
        Ok(text) => emit(&text, args.out.as_deref()),
        Err(err) => usage_error(&err.to_string()),
    }
}
