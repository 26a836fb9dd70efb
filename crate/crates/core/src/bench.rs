//! Size and timing measurements over a message corpus.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::codec::{analyze_structure, Codec, CodecError, Compression, Encoding, InstanceTree, StructureMetrics};
use crate::compress::{gzip_compress, gzip_decompress, DEFAULT_LEVEL};

/// Timed operations, in report order. `De` rows decode what the row above
/// encodes.
pub const LABELS: [&str; 8] = [
    "XML",
    "De XML",
    "GZip XML",
    "De GZip XML",
    "Min JSON",
    "De Min JSON",
    "GZip Min JSON",
    "De GZip Min JSON",
];

/// Present only when the `xmill` feature is on and the binary is found.
pub const XMILL_LABEL: &str = "XMill";

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("message '{message}': {source}")]
    Codec {
        message: String,
        #[source]
        source: CodecError,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchConfig {
    pub iterations: usize,
    pub warmup: usize,
    pub gzip_level: u32,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            iterations: 500,
            warmup: 50,
            gzip_level: DEFAULT_LEVEL,
        }
    }
}

/// Summary of one operation's samples, in microseconds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TimingStats {
    pub min: f64,
    pub max: f64,
    pub mean: f64,
    pub median: f64,
    pub stddev: f64,
}

impl TimingStats {
    /// Population statistics of `samples`, which must be non-empty.
    pub fn from_samples(samples: &[f64]) -> Self {
        assert!(!samples.is_empty(), "no samples");
        let mut sorted = samples.to_vec();
        sorted.sort_by(f64::total_cmp);
        let n = sorted.len();
        let mean = sorted.iter().sum::<f64>() / n as f64;
        let median = if n % 2 == 1 {
            sorted[n / 2]
        } else {
            (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0
        };
        let var = sorted.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / n as f64;
        Self {
            min: sorted[0],
            max: sorted[n - 1],
            mean,
            median,
            stddev: var.sqrt(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MessageReport {
    pub name: String,
    pub structure: StructureMetrics,
    /// Payload bytes keyed `encoding/compression`, e.g. `min_json/gzip`.
    pub sizes: BTreeMap<String, usize>,
    pub timings: BTreeMap<String, TimingStats>,
}

pub fn size_key(encoding: Encoding, compression: Compression) -> String {
    format!("{encoding}/{compression}")
}

impl MessageReport {
    pub fn size(&self, encoding: Encoding, compression: Compression) -> usize {
        self.sizes[&size_key(encoding, compression)]
    }

    /// Percent saved by raw min JSON relative to canonical XML.
    pub fn reduction_percent(&self) -> f64 {
        reduction(self.size(Encoding::Xml, Compression::None), self.size(Encoding::MinJson, Compression::None))
    }

    /// Percent saved by gzip-compressed min JSON relative to raw XML.
    pub fn gzip_reduction_percent(&self) -> f64 {
        reduction(self.size(Encoding::Xml, Compression::None), self.size(Encoding::MinJson, Compression::Gzip))
    }
}

pub fn reduction(from: usize, to: usize) -> f64 {
    if from == 0 {
        return 0.0;
    }
    100.0 * (from as f64 - to as f64) / from as f64
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunMetadata {
    pub iterations: usize,
    pub warmup: usize,
    pub gzip_level: u32,
    pub host: String,
    pub xmill: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    pub metadata: RunMetadata,
    pub messages: Vec<MessageReport>,
}

impl BenchReport {
    pub fn mean_reduction_percent(&self) -> f64 {
        mean(self.messages.iter().map(MessageReport::reduction_percent))
    }

    pub fn mean_gzip_reduction_percent(&self) -> f64 {
        mean(self.messages.iter().map(MessageReport::gzip_reduction_percent))
    }
}

fn mean(values: impl Iterator<Item = f64>) -> f64 {
    let (sum, n) = values.fold((0.0, 0usize), |(s, n), v| (s + v, n + 1));
    if n == 0 {
        0.0
    } else {
        sum / n as f64
    }
}

fn host_description() -> String {
    let cpus = std::thread::available_parallelism().map_or(1, |n| n.get());
    format!("{}-{}, {cpus} logical CPUs", std::env::consts::OS, std::env::consts::ARCH)
}

/// Times `op` `config.iterations` times after `config.warmup` untimed runs.
fn time<T>(config: &BenchConfig, mut op: impl FnMut() -> Result<T, CodecError>) -> Result<TimingStats, CodecError> {
    for _ in 0..config.warmup {
        std::hint::black_box(op()?);
    }
    let mut samples = Vec::with_capacity(config.iterations);
    for _ in 0..config.iterations {
        let start = Instant::now();
        let out = op()?;
        let end = Instant::now();
        std::hint::black_box(out);
        assert!(end >= start, "monotonic clock went backwards");
        samples.push((end - start).as_secs_f64() * 1e6);
    }
    Ok(TimingStats::from_samples(&samples))
}

/// Measures every corpus message. Messages are parsed against the codec's
/// schema first; the first failure aborts the run.
pub fn run_bench(corpus: &[(String, Vec<u8>)], codec: &Codec, config: &BenchConfig) -> Result<BenchReport, BenchError> {
    if config.iterations == 0 {
        return Err(BenchError::InvalidConfig("iterations must be at least 1".into()));
    }
    if !(1..=9).contains(&config.gzip_level) {
        return Err(BenchError::InvalidConfig(format!("gzip level {} is outside 1..=9", config.gzip_level)));
    }
    let codec = codec.clone().with_gzip_level(config.gzip_level).map_err(|e| BenchError::InvalidConfig(e.to_string()))?;
    let xmill = xmill_available();
    let mut messages = Vec::with_capacity(corpus.len());
    for (name, xml) in corpus {
        let wrap = |source: CodecError| BenchError::Codec {
            message: name.clone(),
            source,
        };
        let tree = codec.parse(xml).map_err(wrap)?;
        messages.push(measure(name, &tree, &codec, config, xmill).map_err(wrap)?);
    }
    Ok(BenchReport {
        metadata: RunMetadata {
            iterations: config.iterations,
            warmup: config.warmup,
            gzip_level: config.gzip_level,
            host: host_description(),
            xmill,
        },
        messages,
    })
}

fn measure(name: &str, tree: &InstanceTree, codec: &Codec, config: &BenchConfig, xmill: bool) -> Result<MessageReport, CodecError> {
    let mut sizes = BTreeMap::new();
    let mut payloads = BTreeMap::new();
    for encoding in Encoding::ALL {
        for compression in [Compression::None, Compression::Gzip] {
            let wire = codec.encode(tree, encoding, compression)?;
            sizes.insert(size_key(encoding, compression), wire.payload.len());
            payloads.insert((encoding, compression), wire.payload);
        }
    }
    let xml = codec.to_xml(tree);
    let structure = analyze_structure(tree, &xml);
    let level = config.gzip_level;

    let mut timings = BTreeMap::new();
    let gz_xml = &payloads[&(Encoding::Xml, Compression::Gzip)];
    let min_json = &payloads[&(Encoding::MinJson, Compression::None)];
    let gz_min_json = &payloads[&(Encoding::MinJson, Compression::Gzip)];
    timings.insert(LABELS[0], time(config, || Ok(codec.to_xml(tree)))?);
    timings.insert(LABELS[1], time(config, || codec.parse(&xml))?);
    timings.insert(LABELS[2], time(config, || Ok(gzip_compress(&codec.to_xml(tree), level)?))?);
    timings.insert(LABELS[3], time(config, || codec.parse(&gzip_decompress(gz_xml)?))?);
    timings.insert(LABELS[4], time(config, || codec.to_min_json(tree))?);
    timings.insert(LABELS[5], time(config, || codec.from_min_json(min_json))?);
    timings.insert(
        LABELS[6],
        time(config, || Ok(gzip_compress(&codec.to_min_json(tree)?, level)?))?,
    );
    timings.insert(LABELS[7], time(config, || codec.from_min_json(&gzip_decompress(gz_min_json)?))?);
    if xmill {
        xmill_rows(&xml, config, &mut sizes, &mut timings);
    }
    Ok(MessageReport {
        name: name.to_string(),
        structure,
        sizes,
        timings: timings.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
    })
}

#[cfg(feature = "xmill")]
fn xmill_available() -> bool {
    crate::compress::xmill::binary().is_some()
}

#[cfg(not(feature = "xmill"))]
fn xmill_available() -> bool {
    false
}

#[cfg(feature = "xmill")]
fn xmill_rows(
    xml: &[u8],
    config: &BenchConfig,
    sizes: &mut BTreeMap<String, usize>,
    timings: &mut BTreeMap<&'static str, TimingStats>,
) {
    // Informational only: a failing external tool drops the rows.
    if let Some(out) = crate::compress::xmill::compress(xml) {
        sizes.insert("xml/xmill".into(), out.len());
        let quick = BenchConfig {
            iterations: config.iterations.min(20),
            warmup: 0,
            ..*config
        };
        if let Ok(t) = time(&quick, || Ok(crate::compress::xmill::compress(xml))) {
            timings.insert(XMILL_LABEL, t);
        }
    }
}

#[cfg(not(feature = "xmill"))]
fn xmill_rows(_: &[u8], _: &BenchConfig, _: &mut BTreeMap<String, usize>, _: &mut BTreeMap<&'static str, TimingStats>) {}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
    Markdown,
}

impl std::str::FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Self::Json),
            "csv" => Ok(Self::Csv),
            "markdown" | "md" => Ok(Self::Markdown),
            other => Err(format!("unknown report format '{other}' (expected json, csv or markdown)")),
        }
    }
}

/// Columns of the CSV rendering, one row per message. Sizes are bytes;
/// timing columns hold the mean and median in microseconds.
pub fn csv_columns() -> Vec<String> {
    let mut cols: Vec<String> = [
        "message",
        "node_count",
        "attribute_count",
        "depth",
        "xml_bytes",
        "min_xml_bytes",
        "json_bytes",
        "min_json_bytes",
        "gzip_xml_bytes",
        "gzip_min_json_bytes",
        "reduction_pct",
        "gzip_reduction_pct",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    for label in LABELS {
        let key = label.to_ascii_lowercase().replace(' ', "_");
        cols.push(format!("{key}_mean_us"));
        cols.push(format!("{key}_median_us"));
    }
    cols
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn render_report(report: &BenchReport, format: ReportFormat) -> Vec<u8> {
    match format {
        ReportFormat::Json => {
            let mut out = serde_json::to_vec_pretty(report).expect("report serializes");
            out.push(b'\n');
            out
        }
        ReportFormat::Csv => render_csv(report).into_bytes(),
        ReportFormat::Markdown => render_markdown(report).into_bytes(),
    }
}

fn render_csv(report: &BenchReport) -> String {
    let mut out = csv_columns().join(",");
    out.push('\n');
    for m in &report.messages {
        let mut row = vec![
            csv_field(&m.name),
            m.structure.node_count.to_string(),
            m.structure.attribute_count.to_string(),
            m.structure.depth.to_string(),
        ];
        for (e, c) in [
            (Encoding::Xml, Compression::None),
            (Encoding::MinXml, Compression::None),
            (Encoding::Json, Compression::None),
            (Encoding::MinJson, Compression::None),
            (Encoding::Xml, Compression::Gzip),
            (Encoding::MinJson, Compression::Gzip),
        ] {
            row.push(m.size(e, c).to_string());
        }
        row.push(format!("{:.2}", m.reduction_percent()));
        row.push(format!("{:.2}", m.gzip_reduction_percent()));
        for label in LABELS {
            let t = m.timings.get(label);
            row.push(t.map_or(String::new(), |t| format!("{:.3}", t.mean)));
            row.push(t.map_or(String::new(), |t| format!("{:.3}", t.median)));
        }
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

fn render_markdown(report: &BenchReport) -> String {
    let md = &report.metadata;
    let mut out = String::new();
    let _ = writeln!(out, "# Benchmark report\n");
    let _ = writeln!(
        out,
        "{} timed iterations after {} warmup runs, gzip level {}, host {}.\n",
        md.iterations, md.warmup, md.gzip_level, md.host
    );

    out.push_str("## Message structure\n\n| Message | Size (bytes) | Nodes | Attributes | Depth |\n|---|---:|---:|---:|---:|\n");
    for m in &report.messages {
        let s = &m.structure;
        let _ = writeln!(out, "| {} | {} | {} | {} | {} |", m.name, s.byte_size, s.node_count, s.attribute_count, s.depth);
    }

    out.push_str("\n## Size reduction\n\n| Message | XML (bytes) | Min JSON (bytes) | Reduction (%) |\n|---|---:|---:|---:|\n");
    for m in &report.messages {
        let _ = writeln!(
            out,
            "| {} | {} | {} | {:.2} |",
            m.name,
            m.size(Encoding::Xml, Compression::None),
            m.size(Encoding::MinJson, Compression::None),
            m.reduction_percent()
        );
    }
    if !report.messages.is_empty() {
        let _ = writeln!(out, "| **Mean** | | | {:.2} |", report.mean_reduction_percent());
    }

    let mut labels: Vec<&str> = LABELS.to_vec();
    if md.xmill {
        labels.push(XMILL_LABEL);
    }
    out.push_str("\n## Mean execution time (ms)\n\n| Message |");
    for l in &labels {
        let _ = write!(out, " {l} |");
    }
    out.push_str("\n|---|");
    out.push_str(&"---:|".repeat(labels.len()));
    out.push('\n');
    for m in &report.messages {
        let _ = write!(out, "| {} |", m.name);
        for l in &labels {
            match m.timings.get(*l) {
                Some(t) => {
                    let _ = write!(out, " {:.4} |", t.mean / 1000.0);
                }
                None => out.push_str(" |"),
            }
        }
        out.push('\n');
    }

    out.push_str("\n## Payload size (bytes)\n\n| Message | XML | GZip XML | Min JSON | GZip Min JSON |");
    if md.xmill {
        out.push_str(" XMill |");
    }
    out.push_str("\n|---|---:|---:|---:|---:|");
    if md.xmill {
        out.push_str("---:|");
    }
    out.push('\n');
    for m in &report.messages {
        let _ = write!(
            out,
            "| {} | {} | {} | {} | {} |",
            m.name,
            m.size(Encoding::Xml, Compression::None),
            m.size(Encoding::Xml, Compression::Gzip),
            m.size(Encoding::MinJson, Compression::None),
            m.size(Encoding::MinJson, Compression::Gzip)
        );
        if md.xmill {
            match m.sizes.get("xml/xmill") {
                Some(n) => {
                    let _ = write!(out, " {n} |");
                }
                None => out.push_str(" |"),
            }
        }
        out.push('\n');
    }
    out
}
