use xsdminify::codec::{Compression, Encoding};
use xsdminify::corpus;
use xsdminify::pipeline::Pipeline;
use xsdminify::transport::{fetch_stats, post_raw, send_burst, serve, TransportError, MIN_ENCODING_HEADER};

fn heartbeat() -> Vec<(String, Vec<u8>)> {
    vec![("Heartbeat".to_string(), corpus::heartbeat().xml.to_vec())]
}

#[test]
fn valid_message_is_counted() {
    let codec = Pipeline::idmef().unwrap().codec;
    let server = serve("127.0.0.1:0", codec.clone()).unwrap();
    let before = fetch_stats(&server.url()).unwrap();
    let burst = send_burst(&server.url(), &heartbeat(), &codec, Encoding::MinJson, Compression::None, 1).unwrap();
    assert_eq!((burst.sent, burst.failures, burst.digest_mismatches), (1, 0, 0));
    assert_eq!(burst.samples.len(), 1);
    let after = fetch_stats(&server.url()).unwrap();
    assert_eq!(after.get(Encoding::MinJson).received, before.get(Encoding::MinJson).received + 1);
}

#[test]
fn unknown_wire_key_is_rejected_and_counted() {
    let server = serve("127.0.0.1:0", Pipeline::idmef().unwrap().codec).unwrap();
    let (status, _) = post_raw(
        &format!("{}/ingest", server.url()),
        br#"{"a":{"a":"1.0","zz":[]}}"#.to_vec(),
        &[("content-type", "application/json"), (MIN_ENCODING_HEADER, "min_json")],
    )
    .unwrap();
    assert_eq!(status, 400);
    let stats = fetch_stats(&server.url()).unwrap();
    assert_eq!(stats.get(Encoding::MinJson).decode_failures, 1);
    assert_eq!(stats.get(Encoding::MinJson).received, 0);
}

#[test]
fn stats_sum_over_encodings() {
    let codec = Pipeline::idmef().unwrap().codec;
    let server = serve("127.0.0.1:0", codec.clone()).unwrap();
    for (encoding, compression) in [
        (Encoding::Xml, Compression::None),
        (Encoding::MinXml, Compression::Gzip),
        (Encoding::Json, Compression::None),
    ] {
        send_burst(&server.url(), &heartbeat(), &codec, encoding, compression, 1).unwrap();
    }
    let stats = fetch_stats(&server.url()).unwrap();
    assert_eq!(stats.total_received(), 3);
    assert_eq!(stats.total_failures(), 0);
    assert_eq!(stats.get(Encoding::MinXml).received, 1);
}

#[test]
fn missing_encoding_header_is_unsupported_media_type() {
    let server = serve("127.0.0.1:0", Pipeline::idmef().unwrap().codec).unwrap();
    let (status, _) = post_raw(
        &format!("{}/ingest", server.url()),
        corpus::heartbeat().xml.to_vec(),
        &[("content-type", "text/plain")],
    )
    .unwrap();
    assert_eq!(status, 415);
}

#[test]
fn closed_port_is_a_connection_failure() {
    let port = std::net::TcpListener::bind("127.0.0.1:0").unwrap().local_addr().unwrap().port();
    let codec = Pipeline::idmef().unwrap().codec;
    let err = send_burst(
        &format!("http://127.0.0.1:{port}"),
        &heartbeat(),
        &codec,
        Encoding::Xml,
        Compression::None,
        1,
    )
    .unwrap_err();
    match err {
        TransportError::ConnectionFailure { partial, .. } => assert_eq!(partial.sent, 0),
        other => panic!("expected ConnectionFailure, got {other:?}"),
    }
}

#[test]
fn conservation_holds_for_a_mixed_corpus() {
    let codec = Pipeline::idmef().unwrap().codec;
    let server = serve("127.0.0.1:0", codec.clone()).unwrap();
    let corpus = corpus::named_messages();
    let burst = send_burst(&server.url(), &corpus, &codec, Encoding::MinXml, Compression::Gzip, 2).unwrap();
    let stats = fetch_stats(&server.url()).unwrap();
    let s = stats.get(Encoding::MinXml);
    assert_eq!(burst.sent, 28);
    assert_eq!(burst.sent as u64, s.received + s.decode_failures);
    assert_eq!(burst.digest_mismatches, 0);
}
