//! `hopftab`: batch front end for the permutation and tableau Hopf algebras.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use hopftab::hopf::{self, PosetFamily};
use hopftab::linear::{Coeff, LinComb, TensorComb};
use hopftab::perm::{self, Permutation};
use hopftab::poset::{self, FinitePoset};
use hopftab::tableau::{self, StandardTableau};
use hopftab::verify;

/// Largest rank for which posets are built without `--force`.
const POSET_LIMIT: usize = 7;
/// Largest rank for plain enumerations without `--force`.
const ENUM_LIMIT: usize = 10;

#[derive(Parser, Debug)]
#[command(
    name = "hopftab",
    version,
    about = "Exact computations with permutations, tableaux and their Hopf algebras"
)]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    /// Draw tableaux in French convention (first row at the bottom).
    #[arg(long, global = true)]
    french: bool,
    /// Lift the rank guard rails.
    #[arg(long, global = true)]
    force: bool,
    /// Write tensors with `ox` instead of `⊗`.
    #[arg(long, global = true)]
    ascii: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Insertion and recording tableaux of a permutation.
    Rsk { perm: String },
    /// All permutations with the given insertion tableau.
    Class { tableau: String },
    /// Product of two permutations or two tableaux.
    Product(ProductArgs),
    /// Coproduct of a permutation or tableau.
    Coproduct {
        x: String,
        #[arg(long)]
        tableaux: bool,
    },
    /// Möbius function of the weak order on S_n, or of the order on T_n.
    Mobius {
        n: usize,
        x: String,
        y: String,
        #[arg(long)]
        tableaux: bool,
    },
    /// Expansion of the monomial element M_x in the fundamental basis.
    Mbasis {
        x: String,
        #[arg(long)]
        tableaux: bool,
    },
    /// The △-indecomposable tableaux of rank n, which index the primitive M-elements.
    Primitives { n: usize },
    /// Number of △-indecomposable tableaux of ranks 1..=nmax.
    CountIndec { nmax: usize },
    /// M_{P(123)} * M_{P(123)} in the monomial basis.
    Saliola,
    /// Run a verification suite.
    Verify {
        suite: String,
        #[arg(long, default_value_t = 5)]
        nmax: usize,
    },
    /// Cover relations of the weak order on S_n or of the order on T_n.
    Poset {
        n: usize,
        #[arg(long)]
        tableaux: bool,
        /// Output file; standard output if absent.
        #[arg(long)]
        export: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct ProductArgs {
    x: String,
    y: String,
    /// Destandardized concatenation (default).
    #[arg(long, group = "op")]
    star: bool,
    /// Right shifted concatenation x □ y.
    #[arg(long = "box", group = "op")]
    box_: bool,
    /// Left shifted concatenation x △ y.
    #[arg(long, group = "op")]
    triangle: bool,
    /// Shifted shuffle.
    #[arg(long, group = "op")]
    shuffle: bool,
    #[arg(long)]
    tableaux: bool,
}

enum Failure {
    Usage(String),
    Verification(String),
    Guard(String),
}

impl From<hopftab::Error> for Failure {
    fn from(e: hopftab::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(out) => {
            if !out.is_empty() {
                println!("{out}");
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}\n\nFor more information, try '--help'.");
            ExitCode::from(1)
        }
        Err(Failure::Verification(report)) => {
            println!("{report}");
            ExitCode::from(2)
        }
        Err(Failure::Guard(msg)) => {
            eprintln!("refused: {msg}");
            ExitCode::from(3)
        }
    }
}

fn guard(cli: &Cli, n: usize, limit: usize, what: &str) -> Result<(), Failure> {
    if n > limit && !cli.force {
        return Err(Failure::Guard(format!(
            "rank {n} exceeds {limit} for {what}; pass --force to run anyway"
        )));
    }
    Ok(())
}

fn to_json(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("values serialize")
}

fn looks_like_tableau(s: &str) -> bool {
    s.contains('/') || s.trim_start().starts_with("P(")
}

fn parse<T: std::str::FromStr<Err = hopftab::Error>>(s: &str) -> Result<T, Failure> {
    Ok(s.parse()?)
}

fn tensor_text<B: Ord + std::fmt::Display>(cli: &Cli, t: &TensorComb<B>) -> String {
    if cli.ascii {
        t.to_ascii()
    } else {
        t.to_string()
    }
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Rsk { perm } => rsk(cli, &parse(perm)?),
        Command::Class { tableau } => class(cli, &parse(tableau)?),
        Command::Product(args) => product(cli, args),
        Command::Coproduct { x, tableaux } => coproduct(cli, x, *tableaux),
        Command::Mobius { n, x, y, tableaux } => mobius(cli, *n, x, y, *tableaux),
        Command::Mbasis { x, tableaux } => mbasis(cli, x, *tableaux),
        Command::Primitives { n } => primitives(cli, *n),
        Command::CountIndec { nmax } => count_indec(cli, *nmax),
        Command::Saliola => saliola(cli),
        Command::Verify { suite, nmax } => run_verify(cli, suite, *nmax),
        Command::Poset {
            n,
            tableaux,
            export,
        } => export_poset(cli, *n, *tableaux, export.as_ref()),
    }
}

fn rsk(cli: &Cli, sigma: &Permutation) -> Outcome {
    let (p, q) = tableau::rsk(sigma);
    if cli.json {
        return Ok(to_json(&json!({ "perm": sigma, "P": p, "Q": q })));
    }
    Ok(format!(
        "P = {p}\nQ = {q}\n\nP:\n{}\n\nQ:\n{}",
        p.render(cli.french),
        q.render(cli.french)
    ))
}

fn class(cli: &Cli, t: &StandardTableau) -> Outcome {
    guard(cli, t.size(), ENUM_LIMIT, "plactic class enumeration")?;
    let class = t.plactic_class();
    if cli.json {
        return Ok(to_json(&class));
    }
    Ok(class
        .iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .join("\n"))
}

fn product(cli: &Cli, a: &ProductArgs) -> Outcome {
    let tab = a.tableaux || looks_like_tableau(&a.x) || looks_like_tableau(&a.y);
    if tab {
        let (x, y): (StandardTableau, StandardTableau) = (parse(&a.x)?, parse(&a.y)?);
        let n = x.size() + y.size();
        if a.box_ {
            return single(cli, tableau::box_tab(&x, &y));
        }
        if a.triangle {
            return single(cli, tableau::triangle_tab(&x, &y));
        }
        let result = if a.shuffle {
            guard(cli, n, POSET_LIMIT, "the tableau order")?;
            hopf::shifted_shuffle_tab(&x, &y, &PosetFamily::new(n))?
        } else {
            guard(cli, n, ENUM_LIMIT, "products")?;
            hopf::star_tab(&x, &y)
        };
        combination(cli, &result)
    } else {
        let (x, y): (Permutation, Permutation) = (parse(&a.x)?, parse(&a.y)?);
        if a.box_ {
            return single(cli, perm::box_product(&x, &y));
        }
        if a.triangle {
            return single(cli, perm::triangle(&x, &y));
        }
        guard(cli, x.size() + y.size(), ENUM_LIMIT, "products")?;
        let result = if a.shuffle {
            hopf::shifted_shuffle_perm(&x, &y)
        } else {
            hopf::star_perm(&x, &y)
        };
        combination(cli, &result)
    }
}

fn single<T: std::fmt::Display + serde::Serialize>(cli: &Cli, x: T) -> Outcome {
    Ok(if cli.json { to_json(&x) } else { x.to_string() })
}

fn combination<B: Ord + Clone + std::fmt::Display>(cli: &Cli, x: &LinComb<B>) -> Outcome {
    Ok(if cli.json { to_json(x) } else { x.to_string() })
}

fn coproduct(cli: &Cli, x: &str, tableaux: bool) -> Outcome {
    if tableaux || looks_like_tableau(x) {
        let d = hopf::delta_tab(&parse(x)?);
        Ok(if cli.json {
            to_json(&d)
        } else {
            tensor_text(cli, &d)
        })
    } else {
        let d = hopf::delta_perm(&parse(x)?);
        Ok(if cli.json {
            to_json(&d)
        } else {
            tensor_text(cli, &d)
        })
    }
}

fn check_rank(n: usize, got: usize, key: &str) -> Result<(), Failure> {
    if n != got {
        return Err(Failure::Usage(format!(
            "{key} has rank {got}, expected {n}"
        )));
    }
    Ok(())
}

fn mobius(cli: &Cli, n: usize, x: &str, y: &str, tableaux: bool) -> Outcome {
    guard(cli, n, POSET_LIMIT, "poset construction")?;
    let mu = if tableaux || looks_like_tableau(x) || looks_like_tableau(y) {
        let (a, b): (StandardTableau, StandardTableau) = (parse(x)?, parse(y)?);
        check_rank(n, a.size(), x)?;
        check_rank(n, b.size(), y)?;
        poset::taskin_poset(n)?.mobius(&a, &b)?
    } else {
        let (a, b): (Permutation, Permutation) = (parse(x)?, parse(y)?);
        check_rank(n, a.size(), x)?;
        check_rank(n, b.size(), y)?;
        poset::weak_order_poset(n).mobius(&a, &b)?
    };
    Ok(if cli.json {
        json!(mu.to_string()).to_string()
    } else {
        mu.to_string()
    })
}

fn mbasis(cli: &Cli, x: &str, tableaux: bool) -> Outcome {
    if tableaux || looks_like_tableau(x) {
        let t: StandardTableau = parse(x)?;
        guard(cli, t.size(), POSET_LIMIT, "poset construction")?;
        combination(cli, &PosetFamily::new(t.size()).monomial_element(&t)?)
    } else {
        let s: Permutation = parse(x)?;
        guard(cli, s.size(), POSET_LIMIT, "poset construction")?;
        combination(cli, &PosetFamily::new(s.size()).monomial_element(&s)?)
    }
}

fn primitives(cli: &Cli, n: usize) -> Outcome {
    guard(cli, n, ENUM_LIMIT, "tableau enumeration")?;
    let basis = hopf::primitive_basis_tab(n);
    if cli.json {
        return Ok(to_json(&basis));
    }
    Ok(basis
        .iter()
        .map(|t| t.to_string())
        .collect::<Vec<_>>()
        .join("\n"))
}

fn count_indec(cli: &Cli, nmax: usize) -> Outcome {
    guard(cli, nmax, ENUM_LIMIT, "tableau enumeration")?;
    let counts: Vec<usize> = (1..=nmax).map(tableau::count_indecomposable).collect();
    if cli.json {
        return Ok(to_json(&counts));
    }
    Ok(counts
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(" "))
}

/// Display order and representatives for the expansion. The usual listing
/// has `351236`, which repeats a letter; `351246` gives the intended tableau.
const SALIOLA_ORDER: [&str; 14] = [
    "123456", "241356", "251346", "261345", "351246", "361245", "461235", "256134", "346125",
    "356124", "456123", "362514", "462513", "543126",
];

fn saliola(cli: &Cli) -> Outcome {
    let a: StandardTableau = "P(123)".parse()?;
    let family = PosetFamily::new(6);
    let m = hopf::m_structure_constants_tab(&a, &a, &family)?;
    let mut terms: Vec<(String, StandardTableau, Coeff)> = Vec::new();
    for rep in SALIOLA_ORDER {
        let sigma: Permutation = rep.parse()?;
        let t = tableau::insertion_tableau(&sigma);
        let c = m.coeff(&t);
        terms.push((format!("P({rep})"), t, c));
    }
    for (t, c) in m.coords().iter() {
        if !terms.iter().any(|(_, u, _)| u == t) {
            terms.push((t.to_string(), t.clone(), c.clone()));
        }
    }
    terms.retain(|(_, _, c)| *c != Coeff::from(0));
    if cli.json {
        let rows: Vec<Value> = terms
            .iter()
            .map(|(key, t, c)| json!({ "coeff": c.to_string(), "key": key, "tableau": t.to_string() }))
            .collect();
        return Ok(to_json(&rows));
    }
    let mut out = String::new();
    for (i, (key, _, c)) in terms.iter().enumerate() {
        let negative = *c < Coeff::from(0);
        let sign = if negative { "-" } else { "+" };
        let mag = if negative { -c } else { c.clone() };
        match (i, sign) {
            (0, "+") => out.push_str(&format!("{mag}*M[{key}]")),
            (0, _) => out.push_str(&format!("-{mag}*M[{key}]")),
            _ => out.push_str(&format!(" {sign} {mag}*M[{key}]")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    Ok(out)
}

fn run_verify(cli: &Cli, suite: &str, nmax: usize) -> Outcome {
    guard(cli, nmax, POSET_LIMIT, "verification suites")?;
    let reports = verify::run(suite, nmax)?;
    let failed = reports.iter().any(|r| !r.passed());
    let out = if cli.json {
        let rows: Vec<Value> = reports
            .iter()
            .map(|r| {
                json!({
                    "suite": r.name,
                    "nmax": r.nmax,
                    "checks": r.checks,
                    "passed": r.passed(),
                    "failure": r.failure,
                })
            })
            .collect();
        to_json(&rows)
    } else {
        reports
            .iter()
            .map(|r| r.to_string())
            .collect::<Vec<_>>()
            .join("\n")
    };
    if failed {
        Err(Failure::Verification(out))
    } else {
        Ok(out)
    }
}

fn export_poset(cli: &Cli, n: usize, tableaux: bool, path: Option<&PathBuf>) -> Outcome {
    guard(cli, n, POSET_LIMIT, "poset construction")?;
    let (edges, elements, covers) = if tableaux {
        summary(&poset::taskin_poset(n)?)
    } else {
        summary(&poset::weak_order_poset(n))
    };
    match path {
        None => Ok(edges.trim_end().to_string()),
        Some(p) => {
            fs::write(p, &edges)
                .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", p.display())))?;
            if cli.json {
                return Ok(to_json(&json!({
                    "path": p.display().to_string(),
                    "elements": elements,
                    "covers": covers,
                })));
            }
            Ok(format!(
                "{covers} cover relations on {elements} elements written to {}",
                p.display()
            ))
        }
    }
}

fn summary<K>(p: &FinitePoset<K>) -> (String, usize, usize)
where
    K: Clone + Eq + std::hash::Hash + std::fmt::Display,
{
    (p.edge_list(), p.len(), p.covers().count())
}
