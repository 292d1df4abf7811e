use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use pawncgt::analysis::{analyze, fuzz, oracle_outcome, AnalysisOptions, AnalysisReport, FuzzParams, DEFAULT_ORACLE_BUDGET};
use pawncgt::board::{parse_fen, Board, Side};
use pawncgt::corpus;
use pawncgt::exec::Exec;
use pawncgt::kernel::{format_canonical, format_value, parse_value_expr, recognize, Game};
use pawncgt::valuation::{EpRule, ValuationOptions};

/// Combinatorial game values of pawn endgames.
#[derive(Parser)]
#[command(name = "pawncgt", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose a position, value each part and decide the winner.
    Analyze {
        #[command(flatten)]
        position: Position,
        /// Value of any chunk the pawn model cannot see, e.g. "-1".
        #[arg(long, allow_hyphen_values = true)]
        offset: Option<String>,
        /// Play without en passant captures.
        #[arg(long)]
        no_ep: bool,
        /// Tempo value of a promotion.
        #[arg(long, default_value_t = 1000)]
        offscale: i64,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Canonical form, name and outcome of a value, or compare two values.
    Value {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(allow_hyphen_values = true)]
        other: Option<String>,
    },
    /// Exit 0 if the position is a mutual zugzwang, 1 otherwise.
    Mzz {
        #[command(flatten)]
        position: Position,
        #[arg(long, allow_hyphen_values = true)]
        offset: Option<String>,
    },
    /// Solve the whole board by brute force.
    Oracle {
        #[command(flatten)]
        position: Position,
        /// Side to move.
        #[arg(long, value_enum)]
        side: SideArg,
        #[arg(long)]
        no_ep: bool,
        #[arg(long, default_value_t = DEFAULT_ORACLE_BUDGET)]
        budget: u64,
    },
    /// Cross-check analysis against the oracle on random boards.
    Fuzz {
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value_t = 8)]
        height: usize,
        #[arg(long, default_value_t = 8)]
        width: usize,
        #[arg(long, default_value_t = 3)]
        max_files: usize,
        #[arg(long, default_value_t = 6)]
        max_pawns: usize,
        /// Run cases one after another.
        #[arg(long)]
        sequential: bool,
    },
}

#[derive(Args)]
struct Position {
    /// Piece placement in FEN; letters other than P and p are walls.
    #[arg(required_unless_present = "corpus")]
    fen: Option<String>,
    /// Use a shipped diagram instead, e.g. "d5".
    #[arg(long, conflicts_with = "fen")]
    corpus: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    W,
    B,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::W => Side::White,
            SideArg::B => Side::Black,
        }
    }
}

struct Failure {
    code: u8,
    message: String,
}

fn input_error(e: impl std::fmt::Display) -> Failure {
    Failure { code: 2, message: e.to_string() }
}

impl Position {
    fn board(&self) -> Result<Board, Failure> {
        match (&self.fen, &self.corpus) {
            (_, Some(name)) => corpus::find(name).map(|e| e.board()).ok_or_else(|| {
                let names: Vec<&str> = corpus::corpus().iter().map(|e| e.name.as_str()).collect();
                input_error(format!("unknown diagram '{name}'; known: {}", names.join(", ")))
            }),
            (Some(fen), None) => parse_fen(fen).map_err(input_error),
            (None, None) => Err(input_error("a FEN or --corpus is required")),
        }
    }
}

fn print_report(r: &AnalysisReport) {
    println!("board: {}", r.board);
    let values: Vec<String> = r.components.iter().map(|c| format_value(c.value.game)).collect();
    println!("components: {}", values.join(", "));
    for c in &r.components {
        let v = &c.value;
        println!("  {:<5} {:<12} {}", c.label(), format_value(v.game), v.name.describe());
    }
    if !r.offset.is_zero() {
        println!("offset: {}", format_value(r.offset));
    }
    println!("total: {} ; {}", r.total_name, r.verdict());
    for side in [Side::White, Side::Black] {
        let moves: Vec<String> = r.winning_moves(side).iter().map(|m| m.to_string()).collect();
        println!("winning moves ({side}): {}", if moves.is_empty() { "none".to_string() } else { moves.join(" ") });
    }
    for w in &r.warnings {
        println!("warning: {w}");
    }
}

fn describe(g: Game) -> String {
    let name = recognize(g);
    if name.is_named() {
        format!("{} ({}), {}", format_value(g), name.describe(), g.outcome())
    } else {
        format!("{}, {}", format_value(g), g.outcome())
    }
}

fn relation(a: Game, b: Game) -> &'static str {
    match (a.leq(b), b.leq(a)) {
        (true, true) => "=",
        (true, false) => "<",
        (false, true) => ">",
        (false, false) => "‖",
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Analyze { position, offset, no_ep, offscale, json } => {
            let board = position.board()?;
            let ep_rule = if no_ep { EpRule::Off } else { EpRule::Standard };
            let opts = AnalysisOptions { valuation: ValuationOptions { offscale, ep_rule, ..Default::default() }, ..Default::default() };
            let report = analyze(&board, offset.as_deref(), &opts).map_err(input_error)?;
            if json {
                println!("{}", report.to_document().to_json());
            } else {
                print_report(&report);
            }
            Ok(0)
        }
        Command::Value { expr, other } => {
            let a = parse_value_expr(&expr).map_err(input_error)?;
            println!("{}", describe(a));
            println!("canonical: {}", format_canonical(a));
            if let Some(other) = other {
                let b = parse_value_expr(&other).map_err(input_error)?;
                println!("{}", describe(b));
                println!("canonical: {}", format_canonical(b));
                println!("{} {} {}", format_value(a), relation(a, b), format_value(b));
            }
            Ok(0)
        }
        Command::Mzz { position, offset } => {
            let board = position.board()?;
            let report = analyze(&board, offset.as_deref(), &AnalysisOptions::default()).map_err(input_error)?;
            println!("{}", report.total_name);
            Ok(if report.mzz { 0 } else { 1 })
        }
        Command::Oracle { position, side, no_ep, budget } => {
            let board = position.board()?;
            let verdict = oracle_outcome(&board, !no_ep, budget).map_err(input_error)?;
            let winner = match Side::from(side) {
                Side::White => verdict.white_to_move,
                Side::Black => verdict.black_to_move,
            };
            println!("{winner}");
            println!("nodes: {} depth: {}", verdict.nodes, verdict.depth);
            Ok(0)
        }
        Command::Fuzz { seed, count, height, width, max_files, max_pawns, sequential } => {
            let params = FuzzParams { height, width, max_files, max_pawns };
            if !(4..=255).contains(&height) || !(1..=26).contains(&width) {
                return Err(input_error("board must be 4..=255 ranks high and 1..=26 files wide"));
            }
            let exec = if sequential { Exec::Sequential } else { Exec::Parallel };
            let summary = fuzz(&params, seed, count, &AnalysisOptions { exec, ..Default::default() });
            print!("{summary}");
            Ok(if summary.unflagged_disagreements() > 0 { 3 } else { 0 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
