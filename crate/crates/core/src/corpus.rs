//! The bundled IDMEF schema and the 14-message evaluation corpus.

use crate::schema::{parse_schema, CompiledSchema, SchemaDocument, SchemaError};

pub const IDMEF_XSD: &str = include_str!("../corpus/idmef.xsd");
pub const IDMEF_LOCATION: &str = "idmef.xsd";
pub const IDMEF_NAMESPACE: &str = "http://iana.org/idmef";

#[derive(Debug, Clone, Copy)]
pub struct CorpusMessage {
    /// File stem under `corpus/messages`.
    pub file: &'static str,
    /// Display title used in reports.
    pub title: &'static str,
    pub xml: &'static [u8],
}

macro_rules! message {
    ($file:literal, $title:literal) => {
        CorpusMessage {
            file: $file,
            title: $title,
            xml: include_bytes!(concat!("../corpus/messages/", $file, ".xml")),
        }
    };
}

pub const MESSAGES: [CorpusMessage; 14] = [
    message!("01-empty-alert", "Empty Alert"),
    message!("02-complete-alert", "Complete Alert"),
    message!("03-tear-drop", "Tear Drop"),
    message!("04-ping-of-death", "Ping Of Death"),
    message!("05-port-scanning-1", "Port Scanning 1"),
    message!("06-port-scanning-2", "Port Scanning 2"),
    message!("07-load-module-1", "Load Module 1"),
    message!("08-load-module-2", "Load Module 2"),
    message!("09-phf", "phf"),
    message!("10-file-modification", "File Modification"),
    message!("11-system-policy-violation", "System Policy Violation"),
    message!("12-correlated-alerts", "Correlated Alerts"),
    message!("13-analyzer-assessments", "Analyzer Assessments"),
    message!("14-heartbeat", "Heartbeat"),
];

pub fn message(file: &str) -> Option<&'static CorpusMessage> {
    MESSAGES.iter().find(|m| m.file == file)
}

pub fn message_by_title(title: &str) -> Option<&'static CorpusMessage> {
    MESSAGES.iter().find(|m| m.title == title)
}

pub fn heartbeat() -> &'static CorpusMessage {
    &MESSAGES[13]
}

pub fn idmef_document() -> Result<SchemaDocument, SchemaError> {
    parse_schema(IDMEF_XSD.as_bytes(), IDMEF_LOCATION)
}

/// The IDMEF schema, resolved and compiled. It references no other schemas.
pub fn idmef_schema() -> Result<CompiledSchema, SchemaError> {
    CompiledSchema::compile(vec![idmef_document()?])
}

/// Every `*.xml` file directly inside `dir`, sorted by file name and
/// named by file stem.
pub fn read_dir(dir: &std::path::Path) -> std::io::Result<Vec<(String, Vec<u8>)>> {
    let mut paths = Vec::new();
    for entry in std::fs::read_dir(dir)? {
        let path = entry?.path();
        if path.is_file() && path.extension().is_some_and(|e| e == "xml") {
            paths.push(path);
        }
    }
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let name = p.file_stem().unwrap_or_default().to_string_lossy().into_owned();
            Ok((name, std::fs::read(&p)?))
        })
        .collect()
}

/// (title, xml) pairs in corpus order.
pub fn named_messages() -> Vec<(String, Vec<u8>)> {
    MESSAGES
        .iter()
        .map(|m| (m.title.to_string(), m.xml.to_vec()))
        .collect()
}
