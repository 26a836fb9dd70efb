//! Instance codec: parses schema-valid XML into an [`InstanceTree`] and
//! transcodes it between XML, minified XML, JSON and minified JSON.

mod instance;
mod json;
mod metrics;
mod render;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use instance::{parse_instance, validate, InstanceTree};
pub use metrics::{analyze_structure, StructureMetrics};
pub use render::{to_min_xml_whitespace, to_xml};

use crate::binding::{BindingManifest, BoundMember, MemberKind};
use crate::compress::{gzip_compress, gzip_decompress, CompressError, DEFAULT_LEVEL};
use crate::minify::minified_namespace;
use crate::schema::{CompiledSchema, TypeId};
use crate::xml::MalformedXml;

#[derive(Debug, Error)]
pub enum CodecError {
    #[error(transparent)]
    MalformedXml(#[from] MalformedXml),
    #[error("schema violation at {path}: {message}")]
    SchemaViolation { path: String, message: String },
    #[error("mixed content at {path}")]
    MixedContent { path: String },
    #[error("JSON syntax: {0}")]
    JsonSyntax(String),
    #[error("unexpected JSON shape at {path}: {message}")]
    JsonShape { path: String, message: String },
    #[error("unknown member '{key}' in type {type_name}")]
    UnknownMember { key: String, type_name: String },
    #[error("unknown wire member '{key}' in type {type_name}")]
    UnknownWireMember { key: String, type_name: String },
    #[error("enumeration value '{value}' out of range for {type_name}")]
    EnumOutOfRange { value: String, type_name: String },
    #[error("manifest does not match the schema: {0}")]
    ManifestMismatch(String),
    #[error(transparent)]
    Compression(#[from] CompressError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Encoding {
    Xml,
    MinXml,
    Json,
    MinJson,
}

impl Encoding {
    pub const ALL: [Encoding; 4] = [Encoding::Xml, Encoding::MinXml, Encoding::Json, Encoding::MinJson];

    pub fn as_str(self) -> &'static str {
        match self {
            Encoding::Xml => "xml",
            Encoding::MinXml => "min_xml",
            Encoding::Json => "json",
            Encoding::MinJson => "min_json",
        }
    }

    pub fn content_type(self) -> &'static str {
        match self {
            Encoding::Xml | Encoding::MinXml => "application/xml",
            Encoding::Json | Encoding::MinJson => "application/json",
        }
    }

    pub fn is_minified(self) -> bool {
        matches!(self, Encoding::MinXml | Encoding::MinJson)
    }
}

impl fmt::Display for Encoding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Encoding {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Encoding::ALL
            .into_iter()
            .find(|e| e.as_str() == s)
            .ok_or_else(|| format!("unknown encoding '{s}' (expected xml, min_xml, json or min_json)"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Compression {
    None,
    Gzip,
}

impl Compression {
    pub fn as_str(self) -> &'static str {
        match self {
            Compression::None => "none",
            Compression::Gzip => "gzip",
        }
    }
}

impl fmt::Display for Compression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WireMessage {
    pub payload: Vec<u8>,
    pub encoding: Encoding,
    pub compression: Compression,
}

/// A member slot of a complex type, in canonical member order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Slot {
    Attribute(usize),
    Text,
    Element(usize),
    Any,
}

#[derive(Debug, Clone)]
pub(crate) struct WireMember {
    pub slot: Slot,
    pub readable: String,
    pub wire: String,
}

#[derive(Debug, Clone, Default)]
pub(crate) struct TypeTable {
    pub type_name: String,
    pub members: Vec<WireMember>,
    pub by_readable: HashMap<String, usize>,
    pub by_wire: HashMap<String, usize>,
}

impl TypeTable {
    pub fn member(&self, slot: Slot) -> Option<&WireMember> {
        self.members.iter().find(|m| m.slot == slot)
    }
}

/// Per-schema name tables derived from a binding manifest.
#[derive(Debug, Clone)]
pub(crate) struct WireTables {
    pub complex: Vec<TypeTable>,
    /// Wire name of each global element.
    pub globals: Vec<String>,
    /// Original namespace to minified namespace.
    pub namespaces: HashMap<String, String>,
    pub reverse_namespaces: HashMap<String, String>,
}

impl WireTables {
    fn build(schema: &CompiledSchema, manifest: &BindingManifest) -> Result<Self, CodecError> {
        let mismatch = |m: String| CodecError::ManifestMismatch(m);
        if manifest.schema_namespace != schema.target_namespace {
            return Err(mismatch(format!(
                "manifest namespace '{}' but schema namespace '{}'",
                manifest.schema_namespace, schema.target_namespace
            )));
        }
        let global_paths: HashMap<&str, &BoundMember> =
            manifest.globals.iter().map(|m| (m.path.as_str(), m)).collect();
        let mut globals = Vec::new();
        for e in &schema.global_elements {
            let m = global_paths
                .get(e.path.to_string().as_str())
                .ok_or_else(|| mismatch(format!("no binding for global element {}", e.name)))?;
            globals.push(m.wire_name.clone());
        }

        let mut complex = Vec::new();
        for def in &schema.complex_types {
            let path = def.path.to_string();
            let bound = manifest
                .type_by_path(&path)
                .ok_or_else(|| mismatch(format!("no binding for type at {path}")))?;
            let by_path: HashMap<&str, &BoundMember> = bound.members.iter().map(|m| (m.path.as_str(), m)).collect();
            let mut slots = Vec::new();
            for (i, a) in def.attributes.iter().enumerate() {
                slots.push((Slot::Attribute(i), a.path.to_string(), MemberKind::Attribute));
            }
            if let Some(p) = &def.text_path {
                slots.push((Slot::Text, p.to_string(), MemberKind::TextContent));
            }
            for (i, e) in def.elements.iter().enumerate() {
                slots.push((Slot::Element(i), e.path.to_string(), MemberKind::ChildElement));
            }
            if let Some(a) = &def.any {
                slots.push((Slot::Any, a.path.to_string(), MemberKind::Any));
            }
            if slots.len() != bound.members.len() {
                return Err(mismatch(format!(
                    "type {} has {} members, manifest lists {}",
                    bound.readable_name,
                    slots.len(),
                    bound.members.len()
                )));
            }
            let mut table = TypeTable {
                type_name: bound.readable_name.clone(),
                ..TypeTable::default()
            };
            for (slot, p, kind) in slots {
                let m = by_path
                    .get(p.as_str())
                    .filter(|m| m.kind == kind)
                    .ok_or_else(|| mismatch(format!("no binding for member {p}")))?;
                let index = table.members.len();
                if table.by_readable.insert(m.readable_name.clone(), index).is_some()
                    || table.by_wire.insert(m.wire_name.clone(), index).is_some()
                {
                    return Err(mismatch(format!("duplicate member name in type {}", bound.readable_name)));
                }
                table.members.push(WireMember {
                    slot,
                    readable: m.readable_name.clone(),
                    wire: m.wire_name.clone(),
                });
            }
            complex.push(table);
        }

        // Enumeration wire values are positional.
        for (i, st) in schema.simple_types.iter().enumerate() {
            if st.values_inherited {
                continue;
            }
            let Some(values) = &st.values else { continue };
            let bound = manifest
                .type_by_path(&st.path.to_string())
                .ok_or_else(|| mismatch(format!("no binding for simple type at {}", st.path)))?;
            let listed = bound.enum_values.as_deref().unwrap_or(&[]);
            let positional = listed.len() == values.len()
                && listed
                    .iter()
                    .enumerate()
                    .all(|(k, v)| v.wire == k.to_string() && v.readable == values[k]);
            if !positional {
                return Err(mismatch(format!("enumeration values of simple type #{i} ({})", bound.readable_name)));
            }
        }

        let mut namespaces = HashMap::new();
        let mut reverse_namespaces = HashMap::new();
        for ns in schema.namespaces() {
            let min = minified_namespace(ns);
            namespaces.insert(ns.to_string(), min.clone());
            reverse_namespaces.insert(min, ns.to_string());
        }
        if namespaces.get(&schema.target_namespace) != Some(&manifest.minified_namespace) {
            return Err(mismatch(format!("minified namespace '{}'", manifest.minified_namespace)));
        }
        Ok(Self {
            complex,
            globals,
            namespaces,
            reverse_namespaces,
        })
    }
}

/// Readable name of the type, for error messages.
pub(crate) fn type_label(schema: &CompiledSchema, tables: &WireTables, t: &TypeId) -> String {
    match t {
        TypeId::Builtin(local) => format!("xsd:{local}"),
        TypeId::Complex(i) => tables.complex[*i].type_name.clone(),
        TypeId::Simple(i) => {
            let st = schema.simple(*i);
            st.name.as_ref().map_or_else(|| st.path.to_string(), |n| n.local.clone())
        }
    }
}

/// Transcoder bound to one compiled schema and its binding manifest.
/// Immutable after construction, so it can be shared across threads.
#[derive(Debug, Clone)]
pub struct Codec {
    schema: CompiledSchema,
    manifest: BindingManifest,
    tables: WireTables,
    gzip_level: u32,
}

impl Codec {
    pub fn new(schema: CompiledSchema, manifest: BindingManifest) -> Result<Self, CodecError> {
        let tables = WireTables::build(&schema, &manifest)?;
        Ok(Self {
            schema,
            manifest,
            tables,
            gzip_level: DEFAULT_LEVEL,
        })
    }

    pub fn with_gzip_level(mut self, level: u32) -> Result<Self, CodecError> {
        gzip_compress(b"", level)?;
        self.gzip_level = level;
        Ok(self)
    }

    pub fn gzip_level(&self) -> u32 {
        self.gzip_level
    }

    pub fn schema(&self) -> &CompiledSchema {
        &self.schema
    }

    pub fn manifest(&self) -> &BindingManifest {
        &self.manifest
    }

    pub fn parse(&self, xml: &[u8]) -> Result<InstanceTree, CodecError> {
        parse_instance(xml, &self.schema)
    }

    pub fn to_xml(&self, tree: &InstanceTree) -> Vec<u8> {
        to_xml(tree)
    }

    /// Compact XML using wire names and the minified namespace.
    pub fn to_min_xml(&self, tree: &InstanceTree) -> Result<Vec<u8>, CodecError> {
        let min = render::minify_tree(&self.schema, &self.tables, tree)?;
        Ok(render::render(&min, false))
    }

    pub fn from_min_xml(&self, bytes: &[u8]) -> Result<InstanceTree, CodecError> {
        let raw = instance::parse_generic(bytes)?;
        let tree = render::expand_tree(&self.schema, &self.tables, raw)?;
        validate(tree, &self.schema)
    }

    pub fn to_json(&self, tree: &InstanceTree) -> Result<Vec<u8>, CodecError> {
        json::encode(&self.schema, &self.tables, tree, false)
    }

    pub fn from_json(&self, bytes: &[u8]) -> Result<InstanceTree, CodecError> {
        json::decode(&self.schema, &self.tables, bytes, false)
    }

    pub fn to_min_json(&self, tree: &InstanceTree) -> Result<Vec<u8>, CodecError> {
        json::encode(&self.schema, &self.tables, tree, true)
    }

    pub fn from_min_json(&self, bytes: &[u8]) -> Result<InstanceTree, CodecError> {
        json::decode(&self.schema, &self.tables, bytes, true)
    }

    /// Serializes `tree` in `encoding` without compression.
    pub fn serialize(&self, tree: &InstanceTree, encoding: Encoding) -> Result<Vec<u8>, CodecError> {
        match encoding {
            Encoding::Xml => Ok(self.to_xml(tree)),
            Encoding::MinXml => self.to_min_xml(tree),
            Encoding::Json => self.to_json(tree),
            Encoding::MinJson => self.to_min_json(tree),
        }
    }

    pub fn deserialize(&self, bytes: &[u8], encoding: Encoding) -> Result<InstanceTree, CodecError> {
        match encoding {
            Encoding::Xml => self.parse(bytes),
            Encoding::MinXml => self.from_min_xml(bytes),
            Encoding::Json => self.from_json(bytes),
            Encoding::MinJson => self.from_min_json(bytes),
        }
    }

    pub fn encode(&self, tree: &InstanceTree, encoding: Encoding, compression: Compression) -> Result<WireMessage, CodecError> {
        let raw = self.serialize(tree, encoding)?;
        let payload = match compression {
            Compression::None => raw,
            Compression::Gzip => gzip_compress(&raw, self.gzip_level)?,
        };
        Ok(WireMessage {
            payload,
            encoding,
            compression,
        })
    }

    pub fn decode(&self, message: &WireMessage) -> Result<InstanceTree, CodecError> {
        match message.compression {
            Compression::None => self.deserialize(&message.payload, message.encoding),
            Compression::Gzip => self.deserialize(&gzip_decompress(&message.payload)?, message.encoding),
        }
    }
}
