//! Loopback ingest service and burst sender.
//!
//! `POST /ingest` takes one wire message. The encoding comes from
//! `X-Min-Encoding` (`min_xml`, `min_json`) or else from `Content-Type`
//! (`application/xml`, `application/json`); `Content-Encoding: gzip` marks a
//! compressed body. A decoded message is answered with the SHA-256 of its
//! canonical XML rendering, which the sender checks. `GET /stats` returns
//! [`IngestStats`]; `POST /round-trip` lets a sender record its timings.

use std::collections::BTreeMap;
use std::net::{SocketAddr, TcpListener};
use std::sync::{Arc, Mutex, OnceLock};
use std::thread::JoinHandle;
use std::time::{Duration, Instant};

use axum::body::Bytes;
use axum::extract::State;
use axum::http::{header, HeaderMap, StatusCode};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;
use tokio::sync::oneshot;

use crate::codec::{Codec, Compression, Encoding, InstanceTree, WireMessage};

pub const MIN_ENCODING_HEADER: &str = "x-min-encoding";

#[derive(Debug, Error)]
pub enum TransportError {
    #[error("cannot bind {address}: {message}")]
    Bind { address: String, message: String },
    #[error("connection failure after {} of {} sends: {message}", .partial.sent, .partial.requested)]
    ConnectionFailure { message: String, partial: Box<BurstResult> },
    #[error("invalid request: {0}")]
    InvalidRequest(String),
    #[error("server answered {status}: {body}")]
    Status { status: u16, body: String },
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct EncodingStats {
    /// Messages decoded successfully.
    pub received: u64,
    pub decode_failures: u64,
    /// Payload bytes over all requests, failed ones included.
    pub total_bytes: u64,
    /// Mean sender-side round trip in microseconds, as reported by senders.
    pub mean_round_trip_us: Option<f64>,
    #[serde(skip)]
    rtt_total_us: f64,
    #[serde(skip)]
    rtt_samples: u64,
}

/// Counters keyed by encoding name (`xml`, `min_json`, ...).
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct IngestStats {
    pub encodings: BTreeMap<String, EncodingStats>,
}

impl IngestStats {
    pub fn get(&self, encoding: Encoding) -> EncodingStats {
        self.encodings.get(encoding.as_str()).cloned().unwrap_or_default()
    }

    pub fn total_received(&self) -> u64 {
        self.encodings.values().map(|s| s.received).sum()
    }

    pub fn total_failures(&self) -> u64 {
        self.encodings.values().map(|s| s.decode_failures).sum()
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct RoundTripReport {
    encoding: Encoding,
    samples: u64,
    total_us: f64,
}

struct ServerState {
    codec: Codec,
    stats: Mutex<IngestStats>,
}

/// Hex SHA-256 of the canonical XML rendering; equal trees give equal digests.
pub fn tree_digest(tree: &InstanceTree) -> String {
    hex::encode(Sha256::digest(crate::codec::to_xml(tree)))
}

/// A running ingest service. Dropping it shuts the service down.
pub struct ServerHandle {
    addr: SocketAddr,
    shutdown: Option<oneshot::Sender<()>>,
    thread: Option<JoinHandle<()>>,
}

impl ServerHandle {
    pub fn addr(&self) -> SocketAddr {
        self.addr
    }

    pub fn url(&self) -> String {
        format!("http://{}", self.addr)
    }

    /// Stops accepting connections, lets in-flight requests finish and waits
    /// for the server thread.
    pub fn shutdown(mut self) {
        self.stop();
    }

    /// Blocks until the server stops on its own.
    pub fn wait(mut self) {
        if let Some(t) = self.thread.take() {
            let _ = t.join();
        }
    }

    fn stop(&mut self) {
        if let Some(tx) = self.shutdown.take() {
            let _ = tx.send(());
        }
        if let Some(t) = self.thread.take() {
            let _ = t.join();
        }
    }
}

impl Drop for ServerHandle {
    fn drop(&mut self) {
        self.stop();
    }
}

pub fn router(codec: Codec) -> Router {
    let state = Arc::new(ServerState {
        codec,
        stats: Mutex::new(IngestStats::default()),
    });
    Router::new()
        .route("/ingest", post(ingest))
        .route("/stats", get(stats))
        .route("/round-trip", post(round_trip))
        .with_state(state)
}

/// Binds `bind` (e.g. `127.0.0.1:0`) and serves on a background thread.
pub fn serve(bind: &str, codec: Codec) -> Result<ServerHandle, TransportError> {
    let bind_err = |message: String| TransportError::Bind {
        address: bind.to_string(),
        message,
    };
    let listener = TcpListener::bind(bind).map_err(|e| bind_err(e.to_string()))?;
    listener.set_nonblocking(true).map_err(|e| bind_err(e.to_string()))?;
    let addr = listener.local_addr().map_err(|e| bind_err(e.to_string()))?;
    let runtime = tokio::runtime::Builder::new_multi_thread()
        .enable_all()
        .build()
        .map_err(|e| bind_err(e.to_string()))?;
    let (tx, rx) = oneshot::channel::<()>();
    let app = router(codec);
    let thread = std::thread::Builder::new()
        .name("ingest-server".into())
        .spawn(move || {
            runtime.block_on(async move {
                let listener = tokio::net::TcpListener::from_std(listener).expect("listener registers with runtime");
                let _ = axum::serve(listener, app)
                    .with_graceful_shutdown(async {
                        let _ = rx.await;
                    })
                    .await;
            });
        })
        .map_err(|e| bind_err(e.to_string()))?;
    Ok(ServerHandle {
        addr,
        shutdown: Some(tx),
        thread: Some(thread),
    })
}

/// Encoding and compression named by request headers; `None` means the
/// headers name something unsupported.
pub fn wire_format(headers: &HeaderMap) -> Option<(Encoding, Compression)> {
    let text = |name| headers.get(name).and_then(|v| v.to_str().ok()).map(str::trim);
    let encoding = match text(MIN_ENCODING_HEADER) {
        Some(v) => match v {
            "min_xml" => Encoding::MinXml,
            "min_json" => Encoding::MinJson,
            _ => return None,
        },
        None => {
            let ct = text(header::CONTENT_TYPE.as_str())?;
            match ct.split(';').next().unwrap_or("").trim().to_ascii_lowercase().as_str() {
                "application/xml" | "text/xml" => Encoding::Xml,
                "application/json" => Encoding::Json,
                _ => return None,
            }
        }
    };
    let compression = match text(header::CONTENT_ENCODING.as_str()) {
        None | Some("identity") => Compression::None,
        Some(v) if v.eq_ignore_ascii_case("gzip") => Compression::Gzip,
        Some(_) => return None,
    };
    Some((encoding, compression))
}

async fn ingest(State(state): State<Arc<ServerState>>, headers: HeaderMap, body: Bytes) -> (StatusCode, String) {
    let Some((encoding, compression)) = wire_format(&headers) else {
        return (StatusCode::UNSUPPORTED_MEDIA_TYPE, "unsupported encoding headers\n".into());
    };
    let message = WireMessage {
        payload: body.to_vec(),
        encoding,
        compression,
    };
    let result = state.codec.decode(&message);
    let mut stats = state.stats.lock().expect("stats lock");
    let entry = stats.encodings.entry(encoding.as_str().to_string()).or_default();
    entry.total_bytes += message.payload.len() as u64;
    match result {
        Ok(tree) => {
            entry.received += 1;
            drop(stats);
            (StatusCode::OK, tree_digest(&tree))
        }
        Err(e) => {
            entry.decode_failures += 1;
            (StatusCode::BAD_REQUEST, format!("{e}\n"))
        }
    }
}

async fn stats(State(state): State<Arc<ServerState>>) -> Json<IngestStats> {
    Json(state.stats.lock().expect("stats lock").clone())
}

async fn round_trip(State(state): State<Arc<ServerState>>, Json(report): Json<RoundTripReport>) -> StatusCode {
    let mut stats = state.stats.lock().expect("stats lock");
    let entry = stats.encodings.entry(report.encoding.as_str().to_string()).or_default();
    entry.rtt_total_us += report.total_us;
    entry.rtt_samples += report.samples;
    if entry.rtt_samples > 0 {
        entry.mean_round_trip_us = Some(entry.rtt_total_us / entry.rtt_samples as f64);
    }
    StatusCode::NO_CONTENT
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Sample {
    pub message: String,
    /// Encode, send and response read, in microseconds.
    pub round_trip_us: f64,
    pub status: u16,
    /// The receiver's digest matched the sender's tree.
    pub digest_ok: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct BurstResult {
    pub encoding: Option<Encoding>,
    pub compression: Option<Compression>,
    pub requested: usize,
    pub sent: usize,
    /// Non-200 answers.
    pub failures: usize,
    pub digest_mismatches: usize,
    pub samples: Vec<Sample>,
}

impl BurstResult {
    pub fn mean_round_trip_us(&self) -> f64 {
        if self.samples.is_empty() {
            return 0.0;
        }
        self.samples.iter().map(|s| s.round_trip_us).sum::<f64>() / self.samples.len() as f64
    }
}

fn base_url(endpoint: &str) -> String {
    let e = endpoint.trim_end_matches('/');
    e.strip_suffix("/ingest").unwrap_or(e).to_string()
}

/// One pooled client per process, so consecutive bursts reuse connections.
fn client() -> Result<reqwest::blocking::Client, TransportError> {
    static CLIENT: OnceLock<reqwest::blocking::Client> = OnceLock::new();
    if let Some(c) = CLIENT.get() {
        return Ok(c.clone());
    }
    let c = reqwest::blocking::Client::builder()
        .timeout(Duration::from_secs(30))
        .build()
        .map_err(|e| TransportError::InvalidRequest(e.to_string()))?;
    Ok(CLIENT.get_or_init(|| c).clone())
}

/// Sends `n` copies of each corpus message, one request at a time, and
/// records per-request round trips. Messages must parse against the
/// codec's schema.
pub fn send_burst(
    endpoint: &str,
    corpus: &[(String, Vec<u8>)],
    codec: &Codec,
    encoding: Encoding,
    compression: Compression,
    n: usize,
) -> Result<BurstResult, TransportError> {
    let base = base_url(endpoint);
    let url = format!("{base}/ingest");
    let client = client()?;
    let mut trees = Vec::with_capacity(corpus.len());
    for (name, xml) in corpus {
        let tree = codec
            .parse(xml)
            .map_err(|e| TransportError::InvalidRequest(format!("{name}: {e}")))?;
        let digest = tree_digest(&tree);
        trees.push((name, tree, digest));
    }
    let mut result = BurstResult {
        encoding: Some(encoding),
        compression: Some(compression),
        requested: n * corpus.len(),
        ..BurstResult::default()
    };
    for _ in 0..n {
        for (name, tree, digest) in &trees {
            let start = Instant::now();
            let wire = codec
                .encode(tree, encoding, compression)
                .map_err(|e| TransportError::InvalidRequest(format!("{name}: {e}")))?;
            let mut req = client
                .post(&url)
                .header(header::CONTENT_TYPE.as_str(), encoding.content_type());
            if encoding.is_minified() {
                req = req.header(MIN_ENCODING_HEADER, encoding.as_str());
            }
            if compression == Compression::Gzip {
                req = req.header(header::CONTENT_ENCODING.as_str(), "gzip");
            }
            let response = req.body(wire.payload).send().and_then(|r| {
                let status = r.status().as_u16();
                r.text().map(|body| (status, body))
            });
            let (status, body) = match response {
                Ok(x) => x,
                Err(e) => {
                    return Err(TransportError::ConnectionFailure {
                        message: e.to_string(),
                        partial: Box::new(result),
                    })
                }
            };
            let round_trip_us = start.elapsed().as_secs_f64() * 1e6;
            result.sent += 1;
            let digest_ok = status == 200 && body.trim() == digest;
            if status != 200 {
                result.failures += 1;
            } else if !digest_ok {
                result.digest_mismatches += 1;
            }
            result.samples.push(Sample {
                message: name.to_string(),
                round_trip_us,
                status,
                digest_ok,
            });
        }
    }
    let report = RoundTripReport {
        encoding,
        samples: result.samples.len() as u64,
        total_us: result.samples.iter().map(|s| s.round_trip_us).sum(),
    };
    if let Err(e) = client
        .post(format!("{base}/round-trip"))
        .header(header::CONTENT_TYPE.as_str(), "application/json")
        .body(serde_json::to_vec(&report).expect("report serializes"))
        .send() {
        return Err(TransportError::ConnectionFailure {
            message: e.to_string(),
            partial: Box::new(result),
        });
    }
    Ok(result)
}

/// Posts one raw payload with the headers for `encoding`/`compression`;
/// returns the status and body.
pub fn post_raw(endpoint: &str, payload: Vec<u8>, headers: &[(&str, &str)]) -> Result<(u16, String), TransportError> {
    let mut req = client()?.post(format!("{}/ingest", base_url(endpoint)));
    for (k, v) in headers {
        req = req.header(*k, *v);
    }
    let r = req.body(payload).send().map_err(|e| TransportError::ConnectionFailure {
        message: e.to_string(),
        partial: Box::default(),
    })?;
    let status = r.status().as_u16();
    let body = r.text().unwrap_or_default();
    Ok((status, body))
}

pub fn fetch_stats(endpoint: &str) -> Result<IngestStats, TransportError> {
    let r = client()?
        .get(format!("{}/stats", base_url(endpoint)))
        .send()
        .map_err(|e| TransportError::ConnectionFailure {
            message: e.to_string(),
            partial: Box::default(),
        })?;
    let status = r.status().as_u16();
    let body = r.text().unwrap_or_default();
    if status != 200 {
        return Err(TransportError::Status { status, body });
    }
    serde_json::from_str(&body).map_err(|e| TransportError::InvalidRequest(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use axum::http::HeaderValue;

    fn headers(pairs: &[(&'static str, &'static str)]) -> HeaderMap {
        let mut h = HeaderMap::new();
        for (k, v) in pairs {
            h.insert(*k, HeaderValue::from_static(v));
        }
        h
    }

    #[test]
    fn header_selection() {
        assert_eq!(
            wire_format(&headers(&[("content-type", "application/xml; charset=utf-8")])),
            Some((Encoding::Xml, Compression::None))
        );
        assert_eq!(
            wire_format(&headers(&[
                ("content-type", "application/json"),
                ("x-min-encoding", "min_json"),
                ("content-encoding", "gzip")
            ])),
            Some((Encoding::MinJson, Compression::Gzip))
        );
        assert_eq!(wire_format(&headers(&[("content-type", "text/plain")])), None);
        assert_eq!(wire_format(&headers(&[("x-min-encoding", "min_yaml")])), None);
        assert_eq!(
            wire_format(&headers(&[("content-type", "application/xml"), ("content-encoding", "br")])),
            None
        );
        assert_eq!(wire_format(&HeaderMap::new()), None);
    }

    #[test]
    fn endpoint_normalization() {
        assert_eq!(base_url("http://h:1/ingest"), "http://h:1");
        assert_eq!(base_url("http://h:1/"), "http://h:1");
    }
}
