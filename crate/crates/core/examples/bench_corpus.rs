//! Runs the benchmark over the bundled corpus and prints a Markdown report.
//!
//! `cargo run --release --example bench_corpus -- [ITERATIONS]`

use xsdminify::bench::{render_report, run_bench, BenchConfig, ReportFormat};
use xsdminify::corpus;
use xsdminify::pipeline::Pipeline;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let iterations = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(100);
    let config = BenchConfig {
        iterations,
        warmup: iterations / 10,
        ..BenchConfig::default()
    };
    let codec = Pipeline::idmef()?.codec;
    let report = run_bench(&corpus::named_messages(), &codec, &config)?;
    print!("{}", String::from_utf8_lossy(&render_report(&report, ReportFormat::Markdown)));
    Ok(())
}
