mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use pcdual::dualize::{Window, DEFAULT_DUALIZER};
use pcdual::elimination::DEFAULT_DETERMINANT;

use commands::Failure;

/// Parallel-coordinates duals of planar algebraic curves.
#[derive(Parser, Debug)]
#[command(name = "pcdual", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute the dual of f(x1, x2) = 0 symbolically.
    Dual {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        strategy: Strategy,
    },
    /// Closed-form dual of the conic with matrix entries A1..A6.
    #[command(allow_negative_numbers = true)]
    ConicDual {
        /// A1 A2 A3 A4 A5 A6, as integers, fractions or decimals.
        #[arg(num_args = 6, required = true, value_names = ["A1", "A2", "A3", "A4", "A5", "A6"])]
        coefficients: Vec<String>,
    },
    /// Check the computed dual against tangent-line images of sampled points.
    Verify {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        strategy: Strategy,
        #[command(flatten)]
        view: View,
    },
    /// Draw the curve and its dual side by side as SVG.
    Plot {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        strategy: Strategy,
        #[command(flatten)]
        view: View,
        #[command(flatten)]
        output: Output,
    },
    /// Draw the image line of every sampled point; together they envelope the dual.
    PlotEnvelope {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        view: View,
        #[command(flatten)]
        output: Output,
    },
    /// Evaluate a polynomial exactly at `var=value` bindings.
    Eval {
        #[command(flatten)]
        input: Input,
        /// Bindings such as x1=1/2 or y=-3.
        bindings: Vec<String>,
    },
}

#[derive(Args, Debug)]
struct Input {
    /// Polynomial text, or "-" to read it from stdin.
    #[arg(allow_hyphen_values = true)]
    polynomial: String,
}

#[derive(Args, Debug)]
struct Strategy {
    /// Determinant algorithm for the resultant.
    #[arg(long, default_value = DEFAULT_DETERMINANT)]
    det: String,
    /// Dualization method.
    #[arg(long, default_value = DEFAULT_DUALIZER)]
    method: String,
}

#[derive(Args, Debug)]
struct View {
    /// Sampling and plotting rectangle.
    #[arg(long, value_name = "XMIN,XMAX,YMIN,YMAX", value_parser = parse_window, allow_hyphen_values = true, default_value = "-3,3,-3,3")]
    window: Window,
    /// Marching-squares cells per side.
    #[arg(long, default_value_t = 256)]
    grid: usize,
    /// Number of curve samples.
    #[arg(long, default_value_t = 100)]
    samples: usize,
    /// Distance between the parallel axes.
    #[arg(long, default_value_t = 1.0)]
    spacing: f64,
}

#[derive(Args, Debug)]
struct Output {
    /// Write the SVG here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_window(s: &str) -> Result<Window, String> {
    let parts: Vec<f64> = s
        .split(',')
        .map(|p| p.trim().parse::<f64>().map_err(|e| format!("{p:?}: {e}")))
        .collect::<Result<_, _>>()?;
    let [xmin, xmax, ymin, ymax] = parts[..] else {
        return Err(format!("expected 4 numbers, got {}", parts.len()));
    };
    Window::new(xmin, xmax, ymin, ymax).map_err(|e| e.to_string())
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Dual { input, strategy } => commands::dual(
            &commands::read_input(&input.polynomial)?,
            &strategy.det,
            &strategy.method,
        ),
        Command::ConicDual { coefficients } => commands::conic_dual(&coefficients),
        Command::Verify {
            input,
            strategy,
            view,
        } => commands::verify(
            &commands::read_input(&input.polynomial)?,
            &strategy.det,
            &strategy.method,
            &view.window,
            view.samples,
        ),
        Command::Plot {
            input,
            strategy,
            view,
            output,
        } => {
            let svg = commands::plot(
                &commands::read_input(&input.polynomial)?,
                &strategy.det,
                &strategy.method,
                &view.window,
                view.grid,
                view.samples,
                view.spacing,
            )?;
            commands::emit(svg, output.out.as_deref())
        }
        Command::PlotEnvelope {
            input,
            view,
            output,
        } => {
            let svg = commands::plot_envelope(
                &commands::read_input(&input.polynomial)?,
                &view.window,
                view.grid,
                view.samples,
                view.spacing,
            )?;
            commands::emit(svg, output.out.as_deref())
        }
        Command::Eval { input, bindings } => {
            commands::eval(&commands::read_input(&input.polynomial)?, &bindings)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(stdout) => {
            print!("{stdout}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            print!("{}", f.stdout);
            if !f.message.is_empty() {
                eprintln!("pcdual: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}
