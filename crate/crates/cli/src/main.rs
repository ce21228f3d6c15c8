//! `leaper`: command-line front end for the leaper library.
//!
//! Exit status is 0 for an affirmative answer, 1 for a negative one
//! (disconnected, no tour, infeasible) and 2 for usage or input errors.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use leaper::board::gcd;
use leaper::certify::{bound_thm2, bound_thm3, bound_thm7_area, certify, validate_certificate, Certificate};
use leaper::connectivity::{diameter, predict_connected, Diameter, DisconnectionWitness};
use leaper::construction::{construct_thm4, construct_thm5, construct_thm6};
use leaper::search::{search_hamiltonian, Mode, SearchOptions, SearchOutcome, Symmetry, Target};
use leaper::tour::{verify_tour, Tour};
use leaper::tourio::{encode_grid, export_tsplib, parse_grid, render_svg};
use leaper::{build_graph, Board, BoardGraph, LeaperSpec};

#[derive(Parser)]
#[command(name = "leaper", version, about = "Generalised knight graphs on rectangular boards")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the leaper graph is connected.
    Connect(BoardArgs),
    /// Build a circuit from one of the explicit layouts.
    Construct(ConstructArgs),
    /// Search exhaustively for a circuit or path.
    Search(SearchArgs),
    /// Check a tour in grid format.
    Verify(InputArgs),
    /// Emit a certificate that no circuit exists, or check one.
    Certify(CertifyArgs),
    /// Print the board-size lower bounds for one value of r.
    Bounds(BoundsArgs),
    /// Write the graph as a TSPLIB instance.
    ExportTsplib(ExportArgs),
    /// Draw a tour in grid format as SVG.
    Render(RenderArgs),
    /// Print the diameter of the leaper graph.
    Diameter(BoardArgs),
}

#[derive(Args)]
struct BoardArgs {
    #[arg(long)]
    r: usize,
    #[arg(long)]
    s: usize,
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
}

impl BoardArgs {
    fn parse(&self) -> Result<(LeaperSpec, Board), Failure> {
        Ok((LeaperSpec::new(self.r, self.s)?, Board::new(self.m, self.n)?))
    }

    fn graph(&self) -> Result<BoardGraph, Failure> {
        let (spec, board) = self.parse()?;
        Ok(build_graph(spec, board))
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Thm4,
    Thm5,
    Thm6,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Grid,
    Svg,
}

#[derive(Args)]
struct OutputArgs {
    /// Write here instead of standard output.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct TourFormat {
    #[arg(long, value_enum, default_value = "grid")]
    format: Format,
    /// Radix of the grid digits, 9 or 10.
    #[arg(long, default_value_t = 10)]
    radix: u32,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long, value_enum)]
    method: Method,
    /// Leaper parameter for `thm4`, which builds `{r,r+1}` on `(4r+2) x (4r+2)`.
    #[arg(long, required_if_eq("method", "thm4"), conflicts_with = "k")]
    r: Option<usize>,
    /// Leaper parameter for `thm5` (`{1,2k}` on `(4k+2) x (4k+2)`) and `thm6`
    /// (`{1,2k}` on `(4k+1) x (4k+2)`).
    #[arg(long, required_if_eq_any([("method", "thm5"), ("method", "thm6")]))]
    k: Option<usize>,
    #[command(flatten)]
    format: TourFormat,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct SearchArgs {
    #[command(flatten)]
    board: BoardArgs,
    /// Look for an open path instead of a circuit.
    #[arg(long)]
    path: bool,
    /// Only consider tours fixed by the half turn.
    #[arg(long)]
    symmetric: bool,
    /// Count every tour instead of stopping at the first.
    #[arg(long)]
    count: bool,
    /// Nodes to expand before giving up.
    #[arg(long, default_value_t = 100_000_000)]
    budget: u64,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    workers: u64,
    #[command(flatten)]
    format: TourFormat,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct InputArgs {
    /// Grid file, or `-` for standard input.
    file: PathBuf,
}

#[derive(Args)]
struct CertifyArgs {
    #[command(flatten)]
    board: BoardArgs,
    /// Validate this certificate file against the board instead of producing one.
    #[arg(long)]
    check: Option<PathBuf>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long)]
    r: usize,
}

#[derive(Args)]
struct ExportArgs {
    #[command(flatten)]
    board: BoardArgs,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct RenderArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    out: OutputArgs,
}

/// A usage, input or I/O error; always exit status 2.
struct Failure(String);

impl From<leaper::Error> for Failure {
    fn from(e: leaper::Error) -> Self {
        Failure(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure(e.to_string())
    }
}

/// Text to emit and whether the answer was affirmative.
struct Answer {
    text: String,
    affirmative: bool,
}

impl Answer {
    fn yes(text: String) -> Self {
        Answer {
            text,
            affirmative: true,
        }
    }

    fn no(text: String) -> Self {
        Answer {
            text,
            affirmative: false,
        }
    }
}

fn read_input(path: &PathBuf) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure(format!("{}: {e}", path.display()))),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

fn format_tour(tour: &Tour, f: &TourFormat) -> Result<String, Failure> {
    match f.format {
        Format::Grid => Ok(encode_grid(tour, f.radix)?),
        Format::Svg => Ok(render_svg(tour)),
    }
}

fn connect(args: &BoardArgs) -> Result<Answer, Failure> {
    let (spec, _) = args.parse()?;
    let (r, s, m, n) = (spec.r(), spec.s(), args.m, args.n);
    let (lo, hi) = (m.min(n), m.max(n));
    let v = predict_connected(spec, m, n);
    let mark = |ok: bool| if ok { "ok" } else { "fails" };
    let g = gcd(r + s, s - r);
    let mut text = String::new();
    text.push_str(if v.connected { "CONNECTED\n" } else { "DISCONNECTED\n" });
    text.push_str(&format!("leaper {spec} board {m}x{n}\n"));
    text.push_str(&format!("gcd(r+s, s-r) = {g}: {}\n", mark(g == 1)));
    text.push_str(&format!("long side {hi} >= 2s = {}: {}\n", 2 * s, mark(hi >= 2 * s)));
    text.push_str(&format!("short side {lo} >= r+s = {}: {}\n", r + s, mark(lo >= r + s)));
    text.push_str(&format!("reason {}\n", v.reason));
    match v.witness {
        Some(DisconnectionWitness::CommonDivisor { divisor, from, to }) => {
            text.push_str(&format!(
                "witness every leap keeps x+y mod {divisor}; {from} cannot reach {to}\n"
            ));
        }
        Some(DisconnectionWitness::IsolatedCell(c)) => {
            text.push_str(&format!("witness {c} has no leaps\n"));
        }
        Some(DisconnectionWitness::Separated { from, to }) => {
            text.push_str(&format!("witness {from} cannot reach {to}\n"));
        }
        None => {}
    }
    Ok(if v.connected {
        Answer::yes(text)
    } else {
        Answer::no(text)
    })
}

fn construct(args: &ConstructArgs) -> Result<Answer, Failure> {
    let tour = match args.method {
        Method::Thm4 => construct_thm4(args.r.expect("required by clap"))?,
        Method::Thm5 => construct_thm5(args.k.expect("required by clap"))?,
        Method::Thm6 => construct_thm6(args.k.expect("required by clap"))?,
    };
    let text = format_tour(&tour, &args.format)?;
    emit(&text, args.out.output.as_ref())?;
    Ok(Answer::yes(String::new()))
}

fn search(args: &SearchArgs) -> Result<Answer, Failure> {
    let graph = args.board.graph()?;
    let mut opts = SearchOptions::circuit()
        .with_budget(args.budget)
        .with_workers(args.workers as usize);
    if args.path {
        opts.target = Target::Path;
    }
    if args.symmetric {
        opts = opts.with_symmetry(Symmetry::Rot180);
    }
    if args.count {
        opts = opts.with_mode(Mode::Count);
    }
    let report = search_hamiltonian(&graph, &opts)?;
    let (text, yes) = match &report.outcome {
        SearchOutcome::Found(tour) => (format_tour(tour, &args.format)?, true),
        SearchOutcome::Counted(c) => (format!("COUNT {c}\n"), *c > 0),
        SearchOutcome::Exhausted => ("NO TOUR (exhausted)\n".to_string(), false),
        SearchOutcome::BudgetExceeded => ("INCONCLUSIVE (budget)\n".to_string(), false),
    };
    emit(&text, args.out.output.as_ref())?;
    eprintln!("nodes {}", report.nodes);
    Ok(Answer {
        text: String::new(),
        affirmative: yes,
    })
}

fn verify(args: &InputArgs) -> Result<Answer, Failure> {
    let tour = parse_grid(&read_input(&args.file)?)?;
    let graph = build_graph(tour.spec(), tour.board());
    let kind = if tour.closed() { "closed" } else { "open" };
    Ok(match verify_tour(&graph, &tour) {
        Ok(()) => Answer::yes(format!(
            "VALID {kind} tour, leaper {} board {}\n",
            tour.spec(),
            tour.board()
        )),
        Err(v) => Answer::no(format!("INVALID {v}\n")),
    })
}

fn run_certify(args: &CertifyArgs) -> Result<Answer, Failure> {
    let (spec, board) = args.board.parse()?;
    if let Some(path) = &args.check {
        let cert = Certificate::parse(&read_input(path)?)?;
        if cert.spec != spec || cert.board != board {
            return Err(Failure(format!(
                "certificate is for leaper {} board {}, not leaper {spec} board {board}",
                cert.spec, cert.board
            )));
        }
        let graph = build_graph(spec, board);
        return Ok(if validate_certificate(&graph, &cert) {
            Answer::yes(format!("VALID {}\n", cert.summary()))
        } else {
            Answer::no(format!("INVALID {}\n", cert.summary()))
        });
    }
    match certify(spec, board.m(), board.n())? {
        Some(cert) => {
            emit(&cert.to_text(), args.out.output.as_ref())?;
            Ok(Answer::no(String::new()))
        }
        None => {
            emit("UNKNOWN\n", args.out.output.as_ref())?;
            Ok(Answer::yes(String::new()))
        }
    }
}

fn bounds(args: &BoundsArgs) -> Result<Answer, Failure> {
    let r = args.r;
    if r == 0 {
        return Err(Failure("r must be at least 1".into()));
    }
    let mut text = format!("r {r}\n");
    match bound_thm2(r) {
        Ok(b) => text.push_str(&format!("width {{{r},{}}} beyond {} ranks: {b}\n", r + 1, 2 * r + 1)),
        Err(_) => text.push_str("width: n/a (needs r > 2)\n"),
    }
    match (bound_thm3(r, false), bound_thm3(r, true)) {
        (Ok(base), Ok(improved)) => text.push_str(&format!(
            "file-count {{{r},{}}} on {} ranks: base {base} improved {improved}\n",
            r + 1,
            2 * r + 1
        )),
        _ => text.push_str("file-count: n/a (needs r > 3)\n"),
    }
    let area = bound_thm7_area(r)?;
    text.push_str(&format!("area {{1,{}}}: {area}\n", 2 * r));
    Ok(Answer::yes(text))
}

fn export(args: &ExportArgs) -> Result<Answer, Failure> {
    let graph = args.board.graph()?;
    emit(&export_tsplib(&graph), args.out.output.as_ref())?;
    Ok(Answer::yes(String::new()))
}

fn render(args: &RenderArgs) -> Result<Answer, Failure> {
    let tour = parse_grid(&read_input(&args.input.file)?)?;
    emit(&render_svg(&tour), args.out.output.as_ref())?;
    Ok(Answer::yes(String::new()))
}

fn run_diameter(args: &BoardArgs) -> Result<Answer, Failure> {
    let graph = args.graph()?;
    Ok(match diameter(&graph) {
        Diameter::Finite(d) => Answer::yes(format!("{d}\n")),
        Diameter::Infinite => Answer::no("INFINITE\n".to_string()),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Connect(a) => connect(a),
        Command::Construct(a) => construct(a),
        Command::Search(a) => search(a),
        Command::Verify(a) => verify(a),
        Command::Certify(a) => run_certify(a),
        Command::Bounds(a) => bounds(a),
        Command::ExportTsplib(a) => export(a),
        Command::Render(a) => render(a),
        Command::Diameter(a) => run_diameter(a),
    };
    match result {
        Ok(answer) => {
            if emit(&answer.text, None).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::from(if answer.affirmative { 0 } else { 1 })
        }
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
