//! Command-line interface: search, classify, vanishing-sum tools, prime
//! graphs, character-table checks, and the one-shot verification manifest.
//!
//! Stdout is deterministic for fixed inputs and flags (independent of
//! `--jobs`); timing diagnostics go to stderr. Exit codes: 0 success,
//! 1 verification failure, 2 usage error.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cyclochar::abelian::AbelianGroup;
use cyclochar::chartable::{parse_table_file, TableFile};
use cyclochar::cyclotomic::parse_cyclotomic;
use cyclochar::genchar::{Classification, GeneralizedCharacter};
use cyclochar::prime_graph::{
    check_components_respect_partition, check_gamma_prime_disconnected, pi_partition,
    DisconnectionCheck, PrimeGraph,
};
use cyclochar::search::{search_two_root, SearchConfig};
use cyclochar::vanishing::{decompose, enumerate_minimal_vanishing, RootSum};

use cyclochar_cli::{claim_list, render_manifest, run_all, VerifyOptions};

#[derive(Parser)]
#[command(
    name = "cyclochar",
    version,
    about = "Exact verification toolkit for two-root generalized characters of abelian groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Human-readable output.
    #[default]
    Human,
    /// One key=value record per line.
    Records,
}

#[derive(Args)]
struct SearchArgs {
    /// Group as invariant factors, e.g. `12` or `2x6`.
    #[arg(long)]
    group: String,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Largest group order the search accepts.
    #[arg(long, default_value_t = 24)]
    max_order: u64,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
    /// Also print the witness decomposition map of each solution.
    #[arg(long)]
    witnesses: bool,
}

#[derive(Args)]
struct ClassifyArgs {
    #[arg(long)]
    group: String,
    /// Coefficient vector over the irreducibles in enumeration order.
    #[arg(long = "char")]
    character: String,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate all two-root generalized characters of an abelian group.
    Search(SearchArgs),
    /// Classify one generalized character given by its coefficient vector.
    Classify(ClassifyArgs),
    /// Decompose a vanishing sum of roots of unity into minimal parts.
    Sumdecomp {
        /// Comma-separated root-of-unity expressions, e.g. `E(5),E(5)^2,-1`.
        #[arg(long)]
        terms: String,
    },
    /// Enumerate minimal vanishing sums of a given weight up to rotation.
    Sumenum {
        #[arg(long)]
        weight: usize,
        #[arg(long)]
        order_bound: u64,
    },
    /// Prime graph of an order spectrum or of a character table.
    Primegraph {
        /// Comma-separated element orders, e.g. `1,2,3,5,15`.
        #[arg(long, conflicts_with = "table")]
        spectrum: Option<String>,
        /// Vertices to remove before reporting, e.g. `2`.
        #[arg(long)]
        remove: Option<String>,
        /// Table file; reports the degree partition and both checkers.
        #[arg(long, requires = "degree")]
        table: Option<PathBuf>,
        #[arg(long)]
        degree: Option<i64>,
    },
    /// Character-table operations on a table file.
    Table {
        #[command(subcommand)]
        action: TableAction,
    },
    /// Run the full verification manifest.
    VerifyPaper {
        /// List the claim identifiers and statements without running.
        #[arg(long)]
        list: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, default_value_t = 24)]
        max_order: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum TableAction {
    /// Parse and validate a table file.
    Check { file: PathBuf },
    /// Test a bundled class function for being a generalized character.
    Genchar {
        file: PathBuf,
        #[arg(long)]
        fun: String,
    },
    /// Test a bundled class function for two-root values off the identity.
    Tworoot {
        file: PathBuf,
        #[arg(long)]
        fun: String,
    },
}

fn parse_group(spec: &str) -> Result<AbelianGroup, String> {
    let factors: Result<Vec<u64>, _> = spec.split('x').map(|p| p.trim().parse::<u64>()).collect();
    match factors {
        Ok(fs) if !fs.is_empty() && fs.iter().all(|&f| f >= 1) => {
            let group = AbelianGroup::new(&fs);
            if group.order() > 2048 {
                return Err(format!(
                    "group order {} is beyond desk scale (limit 2048)",
                    group.order()
                ));
            }
            Ok(group)
        }
        _ => Err(format!("invalid group spec '{spec}': use e.g. 12 or 2x6")),
    }
}

fn parse_coeffs(spec: &str) -> Result<Vec<i64>, String> {
    spec.split(',')
        .map(|p| {
            p.trim()
                .parse::<i64>()
                .map_err(|_| format!("invalid coefficient '{p}'"))
        })
        .collect()
}

fn load_table(path: &PathBuf) -> Result<TableFile, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse_table_file(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn usage_error(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Search(args) => run_search(args),
        Command::Classify(args) => run_classify(args),
        Command::Sumdecomp { terms } => run_sumdecomp(&terms),
        Command::Sumenum {
            weight,
            order_bound,
        } => run_sumenum(weight, order_bound),
        Command::Primegraph {
            spectrum,
            remove,
            table,
            degree,
        } => run_primegraph(spectrum, remove, table, degree),
        Command::Table { action } => run_table(action),
        Command::VerifyPaper {
            list,
            jobs,
            max_order,
            format,
        } => run_verify(list, jobs, max_order, format),
    }
}

fn run_search(args: SearchArgs) -> ExitCode {
    let group = match parse_group(&args.group) {
        Ok(g) => g,
        Err(e) => return usage_error(&e),
    };
    let config = SearchConfig {
        max_order: args.max_order,
        jobs: args.jobs,
    };
    let report = match search_two_root(&group, &config) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    let elems = group.elements();
    match args.format {
        Format::Records => {
            println!(
                "group={} order={} solutions={}",
                group,
                group.order(),
                report.solutions.len()
            );
            for (i, s) in report.solutions.iter().enumerate() {
                let coeffs: Vec<String> = s.coeffs.iter().map(|c| c.to_string()).collect();
                let negation = s.negation_of.map_or("-".to_string(), |j| j.to_string());
                println!(
                    "solution index={} coeffs={} {} type=({},{}) typebase={} negation={}",
                    i,
                    coeffs.join(","),
                    s.classification,
                    s.type_kl.k,
                    s.type_kl.ell,
                    s.type_kl.base,
                    negation
                );
                if args.witnesses {
                    for (gi, w) in &s.witnesses {
                        println!("witness solution={} g={} decomp={}", i, elems[*gi], w);
                    }
                }
            }
            println!(
                "stats candidates={} fp_rejected={} fp_false_positives={} audited_rejects={}",
                report.stats.candidates,
                report.stats.fp_rejected,
                report.stats.fp_false_positives,
                report.stats.audited_rejects
            );
        }
        Format::Human => {
            println!(
                "group {} (order {}): {} two-root solutions up to regular shifts",
                group,
                group.order(),
                report.solutions.len()
            );
            for (i, s) in report.solutions.iter().enumerate() {
                let coeffs: Vec<String> = s.coeffs.iter().map(|c| c.to_string()).collect();
                println!(
                    "  #{:<4} [{}]  {}  type ({},{})",
                    i,
                    coeffs.join(","),
                    s.classification,
                    s.type_kl.k,
                    s.type_kl.ell
                );
                if args.witnesses {
                    for (gi, w) in &s.witnesses {
                        println!("        {} -> {}", elems[*gi], w);
                    }
                }
            }
            println!(
                "candidates {} / fp rejected {} / exact solutions {}",
                report.stats.candidates, report.stats.fp_rejected, report.stats.solutions
            );
        }
    }
    eprintln!("search elapsed: {:?}", report.stats.elapsed);
    ExitCode::SUCCESS
}

fn run_classify(args: ClassifyArgs) -> ExitCode {
    let group = match parse_group(&args.group) {
        Ok(g) => g,
        Err(e) => return usage_error(&e),
    };
    let coeffs = match parse_coeffs(&args.character) {
        Ok(c) => c,
        Err(e) => return usage_error(&e),
    };
    if coeffs.len() as u64 != group.order() {
        return usage_error(&format!(
            "expected {} coefficients for group {}, got {}",
            group.order(),
            group,
            coeffs.len()
        ));
    }
    let chi = GeneralizedCharacter::new(group.clone(), coeffs);
    match chi.classify() {
        Ok(classification) => {
            if args.format == Format::Human {
                println!(
                    "character of degree {} on the group {} (order {})",
                    chi.degree(),
                    group,
                    group.order()
                );
            }
            println!("group={} degree={}", group, chi.degree());
            println!("{classification}");
            if !matches!(classification, Classification::NotTwoRoot) {
                if let Some(t) = chi.type_of() {
                    println!("type=({},{}) typebase={}", t.k, t.ell, t.base);
                }
                let witnesses = chi
                    .two_root_values()
                    .expect("classified characters are two-root");
                let elems = group.elements();
                for (gi, w) in &witnesses {
                    println!(
                        "witness g={} value={} decomp={}",
                        elems[*gi],
                        chi.evaluate(&elems[*gi]),
                        w
                    );
                }
            }
            ExitCode::SUCCESS
        }
        Err(violation) => {
            println!("{violation}");
            ExitCode::from(1)
        }
    }
}

fn run_sumdecomp(terms: &str) -> ExitCode {
    let mut roots = Vec::new();
    for part in terms.split(',') {
        let value = match parse_cyclotomic(part) {
            Ok(v) => v,
            Err(e) => return usage_error(&format!("term '{part}': {e}")),
        };
        match value.as_root_of_unity() {
            Some(r) => roots.push(r),
            None => return usage_error(&format!("term '{part}' is not a root of unity")),
        }
    }
    let sum = RootSum::new(roots);
    match decompose(&sum) {
        Ok(d) => {
            println!("terms [{sum}] weight {}", sum.weight());
            println!("{d}");
            ExitCode::SUCCESS
        }
        Err(cyclochar::vanishing::VanishingError::NotVanishing) => {
            println!("not vanishing: sum is {}", sum.sum_value());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run_sumenum(weight: usize, order_bound: u64) -> ExitCode {
    match enumerate_minimal_vanishing(weight, order_bound) {
        Ok(classes) => {
            println!(
                "minimal vanishing sums of weight {weight}, orders dividing {order_bound}: {} classes",
                classes.len()
            );
            for (i, class) in classes.iter().enumerate() {
                println!("class {i}: [{class}]");
            }
            ExitCode::SUCCESS
        }
        Err(e) => usage_error(&e.to_string()),
    }
}

fn run_primegraph(
    spectrum: Option<String>,
    remove: Option<String>,
    table: Option<PathBuf>,
    degree: Option<i64>,
) -> ExitCode {
    let graph = if let Some(spec) = &spectrum {
        let orders: Result<BTreeSet<u64>, _> =
            spec.split(',').map(|p| p.trim().parse::<u64>()).collect();
        let orders = match orders {
            Ok(o) => o,
            Err(_) => return usage_error("invalid spectrum list"),
        };
        match PrimeGraph::from_spectrum(&orders) {
            Ok(g) => g,
            Err(e) => return usage_error(&e.to_string()),
        }
    } else if let Some(path) = &table {
        let file = match load_table(path) {
            Ok(f) => f,
            Err(e) => return usage_error(&e),
        };
        if let Err(e) = file.table.validate() {
            eprintln!("error: table invalid: {e}");
            return ExitCode::from(1);
        }
        match PrimeGraph::from_spectrum(&file.table.spectrum()) {
            Ok(g) => g,
            Err(e) => return usage_error(&e.to_string()),
        }
    } else {
        return usage_error("provide --spectrum or --table");
    };

    let graph = if let Some(rm) = &remove {
        let vs: Result<BTreeSet<u64>, _> = rm.split(',').map(|p| p.trim().parse::<u64>()).collect();
        match vs {
            Ok(vs) => graph.induced_without(&vs),
            Err(_) => return usage_error("invalid remove list"),
        }
    } else {
        graph
    };

    println!("{graph}");
    let comps = graph.components();
    let rendered: Vec<String> = comps
        .iter()
        .map(|c| {
            let vs: Vec<String> = c.iter().map(|v| v.to_string()).collect();
            format!("{{{}}}", vs.join(","))
        })
        .collect();
    println!("components: {}", rendered.join(" "));

    if let Some(d) = degree {
        let vertices: BTreeSet<u64> = graph
            .gamma_double_prime()
            .vertices()
            .iter()
            .copied()
            .collect();
        let partition = pi_partition(d, &vertices);
        for (p, label) in &partition.labels {
            println!("pi p={p} label={label}");
        }
        for (p, residue) in &partition.missing {
            println!("pi p={p} label=none residue={residue}");
        }
        if partition.is_total() {
            match check_components_respect_partition(&graph, &partition) {
                Ok(check) if check.holds => println!("component-check: holds"),
                Ok(check) => println!("component-check: crossing edges {:?}", check.crossing_edges),
                Err(e) => println!("component-check: {e}"),
            }
            match check_gamma_prime_disconnected(&graph, &partition) {
                Ok(DisconnectionCheck::NotApplicable) => {
                    println!("disconnection-check: not-applicable")
                }
                Ok(DisconnectionCheck::DisconnectedConfirmed { components }) => println!(
                    "disconnection-check: disconnected-confirmed ({} components)",
                    components.len()
                ),
                Ok(DisconnectionCheck::Violation { .. }) => {
                    println!("disconnection-check: VIOLATION")
                }
                Err(e) => println!("disconnection-check: {e}"),
            }
        } else {
            println!("component-check: partition not total");
        }
    }
    ExitCode::SUCCESS
}

fn run_table(action: TableAction) -> ExitCode {
    match action {
        TableAction::Check { file } => {
            let parsed = match load_table(&file) {
                Ok(f) => f,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(1);
                }
            };
            match parsed.table.validate() {
                Ok(()) => {
                    println!(
                        "table {} valid: order {} classes {} functions {}",
                        parsed.table.name,
                        parsed.table.order,
                        parsed.table.class_count(),
                        parsed.functions.len()
                    );
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    println!("table {} INVALID: {e}", parsed.table.name);
                    ExitCode::from(1)
                }
            }
        }
        TableAction::Genchar { file, fun } => {
            let parsed = match load_table(&file) {
                Ok(f) => f,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(1);
                }
            };
            if let Err(e) = parsed.table.validate() {
                eprintln!("error: table invalid: {e}");
                return ExitCode::from(1);
            }
            let Some(f) = parsed.function(&fun) else {
                return usage_error(&format!("no class function named '{fun}' in the file"));
            };
            match parsed.table.is_generalized_character(f) {
                Ok(Some(coeffs)) => {
                    let cs: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
                    println!("fun={fun} genchar=yes coeffs={}", cs.join(","));
                    ExitCode::SUCCESS
                }
                Ok(None) => {
                    println!("fun={fun} genchar=no");
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(1)
                }
            }
        }
        TableAction::Tworoot { file, fun } => {
            let parsed = match load_table(&file) {
                Ok(f) => f,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(1);
                }
            };
            if let Err(e) = parsed.table.validate() {
                eprintln!("error: table invalid: {e}");
                return ExitCode::from(1);
            }
            let Some(f) = parsed.function(&fun) else {
                return usage_error(&format!("no class function named '{fun}' in the file"));
            };
            match parsed.table.two_root_on_nonidentity(f) {
                Ok(Some(witnesses)) => {
                    println!("fun={fun} tworoot=yes");
                    for (class, w) in &witnesses {
                        println!(
                            "witness class={class} value={} decomp={w}",
                            f.values()[*class]
                        );
                    }
                    ExitCode::SUCCESS
                }
                Ok(None) => {
                    println!("fun={fun} tworoot=no");
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(1)
                }
            }
        }
    }
}

fn run_verify(list: bool, jobs: usize, max_order: u64, format: Format) -> ExitCode {
    if list {
        for (id, statement) in claim_list() {
            match format {
                Format::Records => println!("claim={id} statement={statement}"),
                Format::Human => println!("{id}\n    {statement}"),
            }
        }
        return ExitCode::SUCCESS;
    }
    let manifest = run_all(&VerifyOptions { jobs, max_order });
    print!("{}", render_manifest(&manifest, format == Format::Records));
    for claim in &manifest.claims {
        eprintln!("claim {} elapsed {:?}", claim.id, claim.elapsed);
    }
    if manifest.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
