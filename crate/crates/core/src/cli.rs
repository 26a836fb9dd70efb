//! The `xsdminify` command line. Exit status: 0 on success, 1 for usage
//! errors, 2 when processing fails.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::SystemTime;

use clap::{Args, Parser, Subcommand};

use crate::bench::{render_report, run_bench, BenchConfig, ReportFormat};
use crate::binding::emit::{emit_source, TemplateSet};
use crate::binding::{build_manifest, BindingManifest};
use crate::codec::{analyze_structure, Codec, Compression, Encoding, WireMessage};
use crate::corpus;
use crate::minify::minify_set;
use crate::pipeline::{load_schema_file, minification_outputs, read_file, read_minification, Pipeline};
use crate::transport;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FAILURE: i32 = 2;

type Failure = Box<dyn std::error::Error>;

#[derive(Debug, Parser)]
#[command(name = "xsdminify", version, about = "Schema-driven XML minification and transcoding")]
#[command(arg_required_else_help = true)]
struct Cli {
    /// Suppress progress messages on stderr.
    #[arg(short, long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Minify a schema set and write the minified schemas and dictionary.
    Minify {
        /// Root schema file.
        input: PathBuf,
        #[arg(long)]
        out_dir: PathBuf,
        /// Rewrite outputs even when they are newer than every input.
        #[arg(long)]
        force: bool,
    },
    /// Build the binding manifest from a schema and its minified outputs.
    Manifest {
        #[arg(long)]
        schema: PathBuf,
        /// Directory holding the output of `minify`.
        #[arg(long)]
        min_dir: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Generate Rust bindings from a manifest.
    Emit {
        #[arg(long)]
        manifest: PathBuf,
        /// Directory of `.tmpl` files replacing the built-in Rust templates.
        #[arg(long)]
        templates: Option<PathBuf>,
        #[arg(long)]
        out_dir: PathBuf,
    },
    /// Convert a message between encodings.
    Transcode {
        #[arg(long = "in")]
        input: PathBuf,
        /// Encoding of the input; gzip input is detected.
        #[arg(long, default_value = "xml")]
        from: Encoding,
        #[arg(long)]
        to: Encoding,
        #[arg(long)]
        gzip: bool,
        #[command(flatten)]
        codec: CodecArgs,
        /// Output file; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print structure metrics of XML messages.
    Analyze {
        files: Vec<PathBuf>,
        /// Analyze every `*.xml` file in this directory.
        #[arg(long, conflicts_with = "files")]
        corpus: Option<PathBuf>,
        #[command(flatten)]
        codec: CodecArgs,
    },
    /// Measure sizes and timings of every encoding over a corpus.
    Bench {
        /// Directory of `*.xml` messages; the bundled corpus when absent.
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[command(flatten)]
        codec: CodecArgs,
        /// Report file; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 6)]
        gzip_level: u32,
        #[arg(long, default_value_t = 500)]
        iterations: usize,
        #[arg(long, default_value_t = 50)]
        warmup: usize,
        #[arg(long, default_value = "json")]
        format: ReportFormat,
    },
    /// Run the HTTP receiver until interrupted.
    Serve {
        #[arg(long, default_value = "127.0.0.1:8080")]
        bind: String,
        #[command(flatten)]
        codec: CodecArgs,
    },
    /// Send corpus messages to a running receiver.
    Send {
        #[arg(long)]
        endpoint: String,
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long)]
        encoding: Encoding,
        #[arg(long)]
        gzip: bool,
        /// Copies of each message.
        #[arg(short = 'n', default_value_t = 1)]
        n: usize,
        #[command(flatten)]
        codec: CodecArgs,
    },
}

/// Schema and manifest selection. Without `--schema` the bundled IDMEF
/// schema is used; without `--manifest` one is derived in-process.
#[derive(Debug, Args)]
struct CodecArgs {
    #[arg(long)]
    schema: Option<PathBuf>,
    #[arg(long)]
    manifest: Option<PathBuf>,
}

impl CodecArgs {
    fn codec(&self) -> Result<Codec, Failure> {
        let pipeline = match &self.schema {
            Some(path) => Pipeline::from_file(path)?,
            None => Pipeline::idmef()?,
        };
        match &self.manifest {
            None => Ok(pipeline.codec),
            Some(path) => {
                let manifest = BindingManifest::from_json(&read_file(path)?)?;
                Ok(Codec::new(pipeline.schema().clone(), manifest)?)
            }
        }
    }
}

struct Ui {
    quiet: bool,
}

impl Ui {
    fn note(&self, msg: impl std::fmt::Display) {
        if !self.quiet {
            eprintln!("{msg}");
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
        }
    };
    let ui = Ui { quiet: cli.quiet };
    match execute(cli.command, &ui) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e}");
            let mut source = e.source();
            while let Some(s) = source {
                eprintln!("  caused by: {s}");
                source = s.source();
            }
            EXIT_FAILURE
        }
    }
}

fn execute(command: Command, ui: &Ui) -> Result<(), Failure> {
    match command {
        Command::Minify { input, out_dir, force } => minify(&input, &out_dir, force, ui),
        Command::Manifest { schema, min_dir, out } => {
            let schema = load_schema_file(&schema)?;
            let result = read_minification(&schema, &min_dir)?;
            let manifest = build_manifest(&schema, &result)?;
            write_file(&out, &manifest.to_json())?;
            ui.note(format_args!(
                "wrote {} ({} types, {} globals)",
                out.display(),
                manifest.types.len(),
                manifest.globals.len()
            ));
            Ok(())
        }
        Command::Emit {
            manifest,
            templates,
            out_dir,
        } => {
            let manifest = BindingManifest::from_json(&read_file(&manifest)?)?;
            let templates = match templates {
                Some(dir) => TemplateSet::from_dir(&dir)?,
                None => TemplateSet::rust(),
            };
            for (name, bytes) in emit_source(&manifest, &templates)? {
                let path = out_dir.join(name);
                write_file(&path, &bytes)?;
                ui.note(format_args!("wrote {}", path.display()));
            }
            Ok(())
        }
        Command::Transcode {
            input,
            from,
            to,
            gzip,
            codec,
            out,
        } => {
            let codec = codec.codec()?;
            let payload = read_file(&input)?;
            let compression = if payload.starts_with(&[0x1f, 0x8b]) {
                Compression::Gzip
            } else {
                Compression::None
            };
            let tree = codec.decode(&WireMessage {
                payload,
                encoding: from,
                compression,
            })?;
            let target = if gzip { Compression::Gzip } else { Compression::None };
            let message = codec.encode(&tree, to, target)?;
            ui.note(format_args!("{from} -> {to}/{target}: {} bytes", message.payload.len()));
            emit_output(out.as_deref(), &message.payload)
        }
        Command::Analyze { files, corpus, codec } => {
            let codec = codec.codec()?;
            let messages = match corpus {
                Some(dir) => read_corpus(&dir)?,
                None if files.is_empty() => corpus::named_messages(),
                None => files
                    .iter()
                    .map(|f| Ok((f.display().to_string(), read_file(f)?)))
                    .collect::<Result<_, Failure>>()?,
            };
            let mut out = String::from("message\tbytes\tnodes\tattributes\tdepth\n");
            for (name, xml) in messages {
                let tree = codec.parse(&xml).map_err(|e| format!("{name}: {e}"))?;
                let m = analyze_structure(&tree, &codec.to_xml(&tree));
                out.push_str(&format!(
                    "{name}\t{}\t{}\t{}\t{}\n",
                    m.byte_size, m.node_count, m.attribute_count, m.depth
                ));
            }
            emit_output(None, out.as_bytes())
        }
        Command::Bench {
            corpus,
            codec,
            out,
            gzip_level,
            iterations,
            warmup,
            format,
        } => {
            let codec = codec.codec()?;
            let messages = match corpus {
                Some(dir) => read_corpus(&dir)?,
                None => corpus::named_messages(),
            };
            let config = BenchConfig {
                iterations,
                warmup,
                gzip_level,
            };
            ui.note(format_args!(
                "benchmarking {} messages, {iterations} iterations",
                messages.len()
            ));
            let report = run_bench(&messages, &codec, &config)?;
            ui.note(format_args!(
                "mean reduction {:.2}% (gzip {:.2}%)",
                report.mean_reduction_percent(),
                report.mean_gzip_reduction_percent()
            ));
            emit_output(out.as_deref(), &render_report(&report, format))
        }
        Command::Serve { bind, codec } => {
            let handle = transport::serve(&bind, codec.codec()?)?;
            ui.note(format_args!("listening on {}", handle.url()));
            tokio::runtime::Builder::new_current_thread()
                .enable_all()
                .build()?
                .block_on(tokio::signal::ctrl_c())?;
            ui.note("shutting down");
            handle.shutdown();
            Ok(())
        }
        Command::Send {
            endpoint,
            corpus,
            encoding,
            gzip,
            n,
            codec,
        } => {
            let codec = codec.codec()?;
            let messages = match corpus {
                Some(dir) => read_corpus(&dir)?,
                None => corpus::named_messages(),
            };
            let compression = if gzip { Compression::Gzip } else { Compression::None };
            let burst = transport::send_burst(&endpoint, &messages, &codec, encoding, compression, n)?;
            println!(
                "sent {} of {}, {} failures, {} digest mismatches, mean round trip {:.1} us",
                burst.sent,
                burst.requested,
                burst.failures,
                burst.digest_mismatches,
                burst.mean_round_trip_us()
            );
            if burst.failures > 0 || burst.digest_mismatches > 0 {
                return Err("receiver rejected or altered messages".into());
            }
            Ok(())
        }
    }
}

fn minify(input: &Path, out_dir: &Path, force: bool, ui: &Ui) -> Result<(), Failure> {
    let schema = load_schema_file(input)?;
    let result = minify_set(schema.documents.clone())?;
    let outputs = minification_outputs(&schema, &result);
    if !force {
        let newest_input = schema
            .documents
            .iter()
            .map(|d| modified(Path::new(&d.location)))
            .max()
            .flatten();
        let oldest_output = outputs.iter().map(|(rel, _)| modified(&out_dir.join(rel))).min().flatten();
        if let (Some(i), Some(o)) = (newest_input, oldest_output) {
            if o >= i {
                ui.note(format_args!("{} is up to date", out_dir.display()));
                return Ok(());
            }
        }
    }
    for (rel, bytes) in &outputs {
        let path = out_dir.join(rel);
        write_file(&path, bytes)?;
        ui.note(format_args!("wrote {}", path.display()));
    }
    ui.note(format_args!("{} dictionary entries", result.dictionary.len()));
    Ok(())
}

/// `None` when the file is missing or its time is unavailable.
fn modified(path: &Path) -> Option<SystemTime> {
    std::fs::metadata(path).and_then(|m| m.modified()).ok()
}

fn read_corpus(dir: &Path) -> Result<Vec<(String, Vec<u8>)>, Failure> {
    let messages = corpus::read_dir(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
    if messages.is_empty() {
        return Err(format!("{}: no .xml files", dir.display()).into());
    }
    Ok(messages)
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<(), Failure> {
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        std::fs::create_dir_all(parent).map_err(|e| format!("{}: {e}", parent.display()))?;
    }
    std::fs::write(path, bytes).map_err(|e| format!("{}: {e}", path.display()).into())
}

fn emit_output(path: Option<&Path>, bytes: &[u8]) -> Result<(), Failure> {
    match path {
        Some(p) => write_file(p, bytes),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(bytes)?;
            stdout.flush()?;
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clap_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn usage_errors_exit_with_one() {
        assert_eq!(run(["xsdminify"]), EXIT_USAGE);
        assert_eq!(run(["xsdminify", "frobnicate"]), EXIT_USAGE);
        assert_eq!(run(["xsdminify", "transcode", "--in", "x.xml", "--to", "yaml"]), EXIT_USAGE);
    }

    #[test]
    fn processing_errors_exit_with_two() {
        assert_eq!(
            run(["xsdminify", "-q", "transcode", "--in", "/nonexistent.xml", "--to", "json"]),
            EXIT_FAILURE
        );
    }
}
