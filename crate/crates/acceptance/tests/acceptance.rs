//! Acceptance checks over the bundled IDMEF corpus. Prints one PASS/FAIL
//! line per criterion and exits non-zero if any criterion fails.

#[path = "../../core/tests/support/mod.rs"]
mod support;

use std::path::Path;

use rand::rngs::StdRng;
use rand::SeedableRng;

use xsdminify::bench::{reduction, run_bench, BenchConfig, LABELS};
use xsdminify::codec::{analyze_structure, to_xml, Codec, Compression, Encoding, WireMessage};
use xsdminify::cli;
use xsdminify::corpus;
use xsdminify::minify::{parse_dictionary, write_dictionary, write_minified_schema};
use xsdminify::pipeline::Pipeline;
use xsdminify::schema::{parse_schema, write_schema};
use xsdminify::transport::{fetch_stats, send_burst, serve};

/// Reference measurements per message: XML bytes, nodes, attributes, depth,
/// and the reference minified JSON bytes.
const REFERENCE: [(&str, usize, usize, usize, usize, usize); 14] = [
    ("Empty Alert", 558, 5, 7, 3, 450),
    ("Complete Alert", 5219, 107, 70, 6, 2592),
    ("Tear Drop", 1461, 23, 20, 6, 1096),
    ("Ping Of Death", 1387, 25, 22, 6, 1274),
    ("Port Scanning 1", 1623, 30, 26, 6, 1061),
    ("Port Scanning 2", 1304, 22, 19, 6, 957),
    ("Load Module 1", 1076, 19, 17, 6, 894),
    ("Load Module 2", 1581, 35, 22, 6, 1092),
    ("phf", 1450, 27, 19, 6, 996),
    ("File Modification", 2352, 51, 31, 7, 1450),
    ("System Policy Violation", 1618, 30, 23, 6, 1066),
    ("Correlated Alerts", 1674, 31, 21, 6, 1185),
    ("Analyzer Assessments", 1772, 37, 20, 6, 1195),
    ("Heartbeat", 736, 11, 9, 5, 404),
];

/// Published per-message reductions span this range, in percent.
const REDUCTION_RANGE: (f64, f64) = (8.15, 50.34);
const REDUCTION_SLACK_PP: f64 = 10.0;
const MEAN_REDUCTION_MIN: f64 = 25.0;
const HEARTBEAT_XML: f64 = 736.0;
const HEARTBEAT_MIN_JSON: f64 = 404.0;
const HEARTBEAT_TOLERANCE: f64 = 0.15;
const GZIP_MEAN_REDUCTION_MIN: f64 = 55.0;
const BYTE_SIZE_TOLERANCE: f64 = 0.15;
const MIN_JSON_ROUND_TRIP_MAX_US: f64 = 5000.0;
const GZIP_OVERHEAD_MAX_US: f64 = 2000.0;
const RANDOM_INSTANCES: u64 = 1000;
const BURST: usize = 500;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn within(value: f64, target: f64, tolerance: f64) -> bool {
    (value - target).abs() <= target * tolerance
}

struct Measured {
    title: &'static str,
    xml: usize,
    json: usize,
    min_json: usize,
    gzip_xml: usize,
    gzip_min_json: usize,
}

fn measure(codec: &Codec) -> Vec<Measured> {
    corpus::MESSAGES
        .iter()
        .map(|m| {
            let tree = codec.parse(m.xml).unwrap();
            let size = |e, c| codec.encode(&tree, e, c).unwrap().payload.len();
            Measured {
                title: m.title,
                xml: size(Encoding::Xml, Compression::None),
                json: size(Encoding::Json, Compression::None),
                min_json: size(Encoding::MinJson, Compression::None),
                gzip_xml: size(Encoding::Xml, Compression::Gzip),
                gzip_min_json: size(Encoding::MinJson, Compression::Gzip),
            }
        })
        .collect()
}

fn size_reduction(measured: &[Measured]) -> Outcome {
    let (lo, hi) = (REDUCTION_RANGE.0 - REDUCTION_SLACK_PP, REDUCTION_RANGE.1 + REDUCTION_SLACK_PP);
    let mut out_of_range = Vec::new();
    let mut total = 0.0;
    for m in measured {
        let r = reduction(m.xml, m.min_json);
        let reference = REFERENCE.iter().find(|r| r.0 == m.title).unwrap();
        let published = reduction(reference.1, reference.5);
        println!(
            "    {:<24} {:>6.2}%  (reference {:>5.2}%, {:+6.2} pp)",
            m.title,
            r,
            published,
            r - published
        );
        if !(lo..=hi).contains(&r) {
            out_of_range.push(format!("{} {r:.2}%", m.title));
        }
        total += r;
    }
    let mean = total / measured.len() as f64;
    outcome(
        out_of_range.is_empty() && mean >= MEAN_REDUCTION_MIN,
        format!(
            "mean {mean:.2}% (need >= {MEAN_REDUCTION_MIN}%), per-message range [{lo:.2}%, {hi:.2}%], outside: {out_of_range:?}"
        ),
    )
}

fn heartbeat(measured: &[Measured]) -> Outcome {
    let h = measured.iter().find(|m| m.title == "Heartbeat").unwrap();
    let xml_ok = within(h.xml as f64, HEARTBEAT_XML, HEARTBEAT_TOLERANCE);
    let min_ok = within(h.min_json as f64, HEARTBEAT_MIN_JSON, HEARTBEAT_TOLERANCE);
    let order_ok = h.min_json < h.json && h.json < h.xml;
    outcome(
        xml_ok && min_ok && order_ok,
        format!(
            "xml {} (target {HEARTBEAT_XML}±15%: {}), min_json {} (target {HEARTBEAT_MIN_JSON}±15%: {}), json {}, ordering min_json < json < xml: {}",
            h.xml,
            ok(xml_ok),
            h.min_json,
            ok(min_ok),
            h.json,
            ok(order_ok)
        ),
    )
}

fn ok(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "MISS"
    }
}

fn gzip_stacking(measured: &[Measured]) -> Outcome {
    let mean = measured.iter().map(|m| reduction(m.xml, m.gzip_min_json)).sum::<f64>() / measured.len() as f64;
    let worse: Vec<&str> = measured
        .iter()
        .filter(|m| m.gzip_min_json >= m.gzip_xml)
        .map(|m| m.title)
        .collect();
    outcome(
        mean >= GZIP_MEAN_REDUCTION_MIN && worse.is_empty(),
        format!("mean gzip(min_json) reduction {mean:.2}% (need >= {GZIP_MEAN_REDUCTION_MIN}%), gzip(min_json) >= gzip(xml) for: {worse:?}"),
    )
}

fn structure(codec: &Codec) -> Outcome {
    let mut problems = Vec::new();
    for m in &corpus::MESSAGES {
        let tree = codec.parse(m.xml).unwrap();
        let s = analyze_structure(&tree, &codec.to_xml(&tree));
        let r = REFERENCE.iter().find(|r| r.0 == m.title).unwrap();
        if (s.node_count, s.attribute_count, s.depth) != (r.2, r.3, r.4) {
            problems.push(format!(
                "{}: {}/{}/{} vs {}/{}/{}",
                m.title, s.node_count, s.attribute_count, s.depth, r.2, r.3, r.4
            ));
        }
        if !within(s.byte_size as f64, r.1 as f64, BYTE_SIZE_TOLERANCE) {
            problems.push(format!("{}: {} bytes vs {}", m.title, s.byte_size, r.1));
        }
    }
    outcome(
        problems.is_empty(),
        format!("counts exact and bytes within ±15% for 14 messages; problems: {problems:?}"),
    )
}

fn timing(codec: &Codec) -> Outcome {
    let config = BenchConfig {
        iterations: 200,
        warmup: 20,
        ..BenchConfig::default()
    };
    let report = run_bench(&corpus::named_messages(), codec, &config).unwrap();
    let mean = |m: &xsdminify::bench::MessageReport, label: &str| m.timings[label].mean;
    let mut worst_plain: f64 = 0.0;
    let mut worst_overhead: f64 = 0.0;
    for m in &report.messages {
        let plain = mean(m, LABELS[4]) + mean(m, LABELS[5]);
        let gzip = mean(m, LABELS[6]) + mean(m, LABELS[7]);
        worst_plain = worst_plain.max(plain);
        worst_overhead = worst_overhead.max(gzip - plain);
    }
    outcome(
        worst_plain <= MIN_JSON_ROUND_TRIP_MAX_US && worst_overhead <= GZIP_OVERHEAD_MAX_US,
        format!(
            "worst min_json encode+decode {:.3} ms (limit 5 ms), worst gzip overhead {:.3} ms (limit 2 ms)",
            worst_plain / 1000.0,
            worst_overhead / 1000.0
        ),
    )
}

fn round_trips(pipeline: &Pipeline) -> Outcome {
    let codec = &pipeline.codec;
    let mut failures = Vec::new();
    let mut check = |label: String, tree: &xsdminify::codec::InstanceTree| {
        for encoding in Encoding::ALL {
            for compression in [Compression::None, Compression::Gzip] {
                let result = codec
                    .encode(tree, encoding, compression)
                    .and_then(|m| codec.decode(&WireMessage { ..m }));
                match result {
                    Ok(back) if &back == tree => {}
                    Ok(_) => failures.push(format!("{label} {encoding}/{compression}: tree differs")),
                    Err(e) => failures.push(format!("{label} {encoding}/{compression}: {e}")),
                }
            }
        }
    };
    for m in &corpus::MESSAGES {
        check(m.title.to_string(), &codec.parse(m.xml).unwrap());
    }
    let mut rejected = 0;
    for seed in 0..RANDOM_INSTANCES {
        let raw = support::instance(codec.schema(), &mut StdRng::seed_from_u64(seed), 5);
        match codec.parse(&to_xml(&raw)) {
            Ok(tree) => check(format!("seed {seed}"), &tree),
            Err(_) => rejected += 1,
        }
    }
    let dic = write_dictionary(&pipeline.minification.dictionary);
    let dictionary_ok = parse_dictionary(&dic).ok().as_ref() == Some(&pipeline.minification.dictionary);
    let schema_ok = write_minified_schema(&pipeline.minification)
        .iter()
        .all(|(loc, bytes)| parse_schema(bytes, loc).is_ok_and(|d| &write_schema(&d, false) == bytes));
    outcome(
        failures.is_empty() && rejected == 0 && dictionary_ok && schema_ok,
        format!(
            "14 corpus + {RANDOM_INSTANCES} random instances x 8 encodings: {} failures, {rejected} invalid instances; dictionary round trip {}, minified schema re-parse {}{}",
            failures.len(),
            ok(dictionary_ok),
            ok(schema_ok),
            failures.first().map(|f| format!("; first: {f}")).unwrap_or_default()
        ),
    )
}

/// minify → manifest → transcode of the whole corpus through the CLI, in a
/// fresh directory; returns every produced file.
fn pipeline_run(root: &Path) -> Vec<(String, Vec<u8>)> {
    let run = |args: &[&str]| {
        let argv = ["xsdminify", "-q"].iter().chain(args);
        assert_eq!(cli::run(argv), cli::EXIT_OK, "{args:?}");
    };
    let s = |p: &Path| p.to_str().unwrap().to_string();
    let xsd = root.join("idmef.xsd");
    std::fs::write(&xsd, corpus::IDMEF_XSD).unwrap();
    let min = root.join("min");
    run(&["minify", &s(&xsd), "--out-dir", &s(&min)]);
    let manifest = root.join("manifest.json");
    run(&["manifest", "--schema", &s(&xsd), "--min-dir", &s(&min), "--out", &s(&manifest)]);
    let wire = root.join("wire");
    for m in &corpus::MESSAGES {
        let input = root.join(format!("{}.xml", m.file));
        std::fs::write(&input, m.xml).unwrap();
        for e in Encoding::ALL {
            for gzip in [false, true] {
                let out = wire.join(format!("{}.{e}{}", m.file, if gzip { ".gz" } else { "" }));
                let mut args = vec![
                    "transcode".to_string(),
                    "--in".into(),
                    s(&input),
                    "--to".into(),
                    e.to_string(),
                    "--schema".into(),
                    s(&xsd),
                    "--manifest".into(),
                    s(&manifest),
                    "--out".into(),
                    s(&out),
                ];
                if gzip {
                    args.push("--gzip".into());
                }
                run(&args.iter().map(String::as_str).collect::<Vec<_>>());
            }
        }
    }
    let mut files = Vec::new();
    collect(root, root, &mut files);
    files.sort();
    files
}

fn collect(base: &Path, dir: &Path, out: &mut Vec<(String, Vec<u8>)>) {
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        if path.is_dir() {
            collect(base, &path, out);
        } else {
            let rel = path.strip_prefix(base).unwrap().to_string_lossy().into_owned();
            out.push((rel, std::fs::read(&path).unwrap()));
        }
    }
}

fn determinism() -> Outcome {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    let first = pipeline_run(a.path());
    let second = pipeline_run(b.path());
    let differing: Vec<&str> = first
        .iter()
        .zip(&second)
        .filter(|(x, y)| x != y)
        .map(|(x, _)| x.0.as_str())
        .collect();
    outcome(
        first.len() == second.len() && differing.is_empty(),
        format!("{} artifacts per run, differing: {differing:?}", first.len()),
    )
}

/// Bursts are sent in interleaved rounds with a rotating encoding order, so
/// drift in loopback latency over the run affects every encoding alike.
fn transport(codec: &Codec) -> Outcome {
    const ROUNDS: usize = 50;
    let server = serve("127.0.0.1:0", codec.clone()).unwrap();
    let url = server.url();
    let heartbeat = vec![("Heartbeat".to_string(), corpus::heartbeat().xml.to_vec())];
    let mut totals: Vec<(Encoding, usize, usize, usize, Vec<f64>)> =
        Encoding::ALL.iter().map(|&e| (e, 0, 0, 0, Vec::new())).collect();
    for round in 0..ROUNDS {
        for k in 0..totals.len() {
            let slot = &mut totals[(round + k) % Encoding::ALL.len()];
            let burst = send_burst(&url, &heartbeat, codec, slot.0, Compression::None, BURST / ROUNDS).unwrap();
            slot.1 += burst.sent;
            slot.2 += burst.failures;
            slot.3 += burst.digest_mismatches;
            slot.4.extend(burst.samples.iter().map(|s| s.round_trip_us));
        }
    }
    let stats = fetch_stats(&url).unwrap();
    server.shutdown();
    let mut problems = Vec::new();
    let mut means = Vec::new();
    for (encoding, sent, failures, mismatches, samples) in &totals {
        let s = stats.get(*encoding);
        if *sent != BURST || s.received != *sent as u64 || s.decode_failures != 0 || *failures != 0 {
            problems.push(format!("{encoding}: sent {sent} received {} failures {}", s.received, s.decode_failures));
        }
        if *mismatches != 0 {
            problems.push(format!("{encoding}: {mismatches} digest mismatches"));
        }
        means.push((*encoding, samples.iter().sum::<f64>() / samples.len() as f64));
    }
    let mean_of = |e| means.iter().find(|(x, _)| *x == e).unwrap().1;
    let directional = mean_of(Encoding::MinJson) <= mean_of(Encoding::Xml);
    let listing: Vec<String> = means.iter().map(|(e, m)| format!("{e} {m:.0} us")).collect();
    outcome(
        problems.is_empty() && directional,
        format!(
            "{BURST} Heartbeats per encoding, mean round trip {}; min_json <= xml: {}; problems: {problems:?}",
            listing.join(", "),
            ok(directional)
        ),
    )
}

fn main() {
    let pipeline = Pipeline::idmef().unwrap();
    let codec = &pipeline.codec;
    let measured = measure(codec);
    type Check<'a> = Box<dyn Fn() -> Outcome + 'a>;
    let criteria: Vec<(&str, Check)> = vec![
        ("1 size reduction", Box::new(|| size_reduction(&measured))),
        ("2 heartbeat sizes", Box::new(|| heartbeat(&measured))),
        ("3 gzip stacking", Box::new(|| gzip_stacking(&measured))),
        ("4 structure metrics", Box::new(|| structure(codec))),
        ("5 timing", Box::new(|| timing(codec))),
        ("6 round trips", Box::new(|| round_trips(&pipeline))),
        ("7 determinism", Box::new(determinism)),
        ("8 transport conservation", Box::new(|| transport(codec))),
    ];
    let mut failed = 0;
    for (name, check) in &criteria {
        let o = check();
        println!("{} criterion {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        failed += usize::from(!o.pass);
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
