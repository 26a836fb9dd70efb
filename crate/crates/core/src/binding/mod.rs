//! Binding manifest: the contract pairing readable member names with the
//! minified wire names, plus enumeration value mappings. Source code is
//! generated from it by [`emit`].

pub mod emit;

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::minify::{minify_set, write_dictionary, write_minified_schema, MinificationResult, MinifyError};
use crate::schema::{CompiledSchema, ComponentPath, MaxOccurs, Occurs, QualifiedName, TypeId};

#[derive(Debug, Error)]
pub enum BindingError {
    #[error("dictionary checksum mismatch: expected {expected}, found {found}")]
    ChecksumMismatch { expected: String, found: String },
    #[error("minified schema '{0}' does not correspond to the original schema set")]
    SchemaMismatch(String),
    #[error("no dictionary entry for {0}")]
    MissingEntry(String),
    #[error(transparent)]
    Minify(#[from] MinifyError),
    #[error("manifest JSON: {0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MemberKind {
    Attribute,
    TextContent,
    ChildElement,
    /// Wildcard slot holding foreign elements verbatim.
    Any,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TypeKind {
    Complex,
    Simple,
}

/// Occurrence bounds; `max: null` means unbounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub min: u32,
    pub max: Option<u32>,
}

impl From<Occurs> for Bounds {
    fn from(o: Occurs) -> Self {
        Bounds {
            min: o.min,
            max: match o.max {
                MaxOccurs::Bounded(n) => Some(n),
                MaxOccurs::Unbounded => None,
            },
        }
    }
}

impl Bounds {
    pub fn is_repeated(&self) -> bool {
        self.max.is_none_or(|m| m > 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumValue {
    pub readable: String,
    pub wire: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundMember {
    pub readable_name: String,
    pub wire_name: String,
    pub kind: MemberKind,
    /// Readable name of the member's type (`xsd:*` for built-ins).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub type_ref: Option<String>,
    pub occurs: Bounds,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fixed: Option<String>,
    /// Namespace of a child element; wildcard constraint for `any`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub namespace: Option<String>,
    /// Original component path, as recorded in the dictionary.
    pub path: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundType {
    pub readable_name: String,
    /// Present for named types, which are renamed in the minified schema.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wire_name: Option<String>,
    pub kind: TypeKind,
    pub namespace: String,
    pub path: String,
    /// Base of a simple type.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<String>,
    pub members: Vec<BoundMember>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub enum_values: Option<Vec<EnumValue>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BindingManifest {
    pub schema_namespace: String,
    pub minified_namespace: String,
    /// SHA-256 of the dictionary file, lowercase hex.
    pub dictionary_checksum: String,
    /// Global element and attribute declarations.
    pub globals: Vec<BoundMember>,
    pub types: Vec<BoundType>,
}

impl BindingManifest {
    pub fn to_json(&self) -> Vec<u8> {
        let mut out = serde_json::to_vec_pretty(self).expect("manifest serializes");
        out.push(b'\n');
        out
    }

    pub fn from_json(bytes: &[u8]) -> Result<Self, BindingError> {
        Ok(serde_json::from_slice(bytes)?)
    }

    pub fn type_by_name(&self, readable: &str) -> Option<&BoundType> {
        self.types.iter().find(|t| t.readable_name == readable)
    }

    pub fn type_by_path(&self, path: &str) -> Option<&BoundType> {
        self.types.iter().find(|t| t.path == path)
    }

    /// Number of members, enumeration values and renamed types; equals the
    /// dictionary length for a manifest built from it.
    pub fn dictionary_entry_count(&self) -> usize {
        self.globals.len()
            + self
                .types
                .iter()
                .map(|t| {
                    t.members.len()
                        + t.enum_values.as_ref().map_or(0, Vec::len)
                        + usize::from(t.wire_name.is_some())
                })
                .sum::<usize>()
    }
}

pub fn checksum(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Builds the manifest for `original` from a minification result.
///
/// The result is checked against a fresh minification of `original`; a
/// dictionary or minified schema that does not correspond is rejected.
pub fn build_manifest(original: &CompiledSchema, result: &MinificationResult) -> Result<BindingManifest, BindingError> {
    let fresh = minify_set(original.documents.clone())?;
    let expected = checksum(&write_dictionary(&fresh.dictionary));
    let found = checksum(&write_dictionary(&result.dictionary));
    if expected != found {
        return Err(BindingError::ChecksumMismatch { expected, found });
    }
    let fresh_files = write_minified_schema(&fresh);
    let given_files = write_minified_schema(result);
    if fresh_files.len() != given_files.len() {
        return Err(BindingError::SchemaMismatch(format!("{} documents", given_files.len())));
    }
    for (f, g) in fresh_files.iter().zip(&given_files) {
        if f.1 != g.1 {
            return Err(BindingError::SchemaMismatch(g.0.clone()));
        }
    }

    let wire = result.dictionary.by_path();
    let lookup = |path: &ComponentPath| -> Result<String, BindingError> {
        wire.get(&path.to_string())
            .map(|s| s.to_string())
            .ok_or_else(|| BindingError::MissingEntry(path.to_string()))
    };
    let names = readable_type_names(original);
    let type_ref = |t: &TypeId| -> String {
        match t {
            TypeId::Builtin(local) => format!("xsd:{local}"),
            other => names[other].clone(),
        }
    };

    let mut globals = Vec::new();
    for a in &original.global_attributes {
        globals.push(BoundMember {
            readable_name: a.name.clone(),
            wire_name: lookup(&a.path)?,
            kind: MemberKind::Attribute,
            type_ref: Some(type_ref(&a.type_id)),
            occurs: Bounds { min: 0, max: Some(1) },
            fixed: a.fixed.clone(),
            namespace: None,
            path: a.path.to_string(),
        });
    }
    for e in &original.global_elements {
        globals.push(BoundMember {
            readable_name: e.name.local.clone(),
            wire_name: lookup(&e.path)?,
            kind: MemberKind::ChildElement,
            type_ref: Some(type_ref(&e.type_id)),
            occurs: Occurs::ONE.into(),
            fixed: e.fixed.clone(),
            namespace: Some(e.name.namespace.clone()),
            path: e.path.to_string(),
        });
    }

    // Types in schema order: simple and complex interleaved as declared.
    let mut order: Vec<(ComponentPath, TypeId)> = Vec::new();
    for (i, t) in original.simple_types.iter().enumerate() {
        order.push((t.path.clone(), TypeId::Simple(i)));
    }
    for (i, t) in original.complex_types.iter().enumerate() {
        order.push((t.path.clone(), TypeId::Complex(i)));
    }
    let position: HashMap<String, usize> = {
        let mut all = Vec::new();
        for d in &original.documents {
            d.walk(&mut |c| all.push(c.path.to_string()));
        }
        all.into_iter().enumerate().map(|(i, p)| (p, i)).collect()
    };
    order.sort_by_key(|(p, _)| position[&p.to_string()]);

    let mut types = Vec::new();
    for (_, id) in order {
        types.push(match id {
            TypeId::Simple(i) => {
                let t = &original.simple_types[i];
                let enum_values = match (&t.values, t.values_inherited) {
                    (Some(v), false) => Some(
                        v.iter()
                            .enumerate()
                            .map(|(i, r)| EnumValue {
                                readable: r.clone(),
                                wire: i.to_string(),
                            })
                            .collect(),
                    ),
                    _ => None,
                };
                let base = original
                    .named_type(&t.base)
                    .map(&type_ref)
                    .unwrap_or_else(|| format!("xsd:{}", t.base.local));
                BoundType {
                    readable_name: names[&id].clone(),
                    wire_name: t.name.as_ref().map(|_| lookup(&t.path)).transpose()?,
                    kind: TypeKind::Simple,
                    namespace: type_namespace(original, &t.path),
                    path: t.path.to_string(),
                    base: Some(base),
                    members: Vec::new(),
                    enum_values,
                }
            }
            TypeId::Complex(i) => {
                let t = &original.complex_types[i];
                let mut members = Vec::new();
                for a in &t.attributes {
                    members.push(BoundMember {
                        readable_name: a.name.clone(),
                        wire_name: lookup(&a.path)?,
                        kind: MemberKind::Attribute,
                        type_ref: Some(type_ref(&a.type_id)),
                        occurs: Bounds {
                            min: u32::from(a.required),
                            max: Some(1),
                        },
                        fixed: a.fixed.clone(),
                        namespace: None,
                        path: a.path.to_string(),
                    });
                }
                if let (Some(text), Some(path)) = (&t.text, &t.text_path) {
                    members.push(BoundMember {
                        readable_name: "value".into(),
                        wire_name: lookup(path)?,
                        kind: MemberKind::TextContent,
                        type_ref: Some(type_ref(text)),
                        occurs: Bounds { min: 0, max: Some(1) },
                        fixed: None,
                        namespace: None,
                        path: path.to_string(),
                    });
                }
                for e in &t.elements {
                    members.push(BoundMember {
                        readable_name: e.name.local.clone(),
                        wire_name: lookup(&e.path)?,
                        kind: MemberKind::ChildElement,
                        type_ref: Some(type_ref(&e.type_id)),
                        occurs: e.occurs.into(),
                        fixed: e.fixed.clone(),
                        namespace: Some(e.name.namespace.clone()),
                        path: e.path.to_string(),
                    });
                }
                if let Some(any) = &t.any {
                    members.push(BoundMember {
                        readable_name: "any".into(),
                        wire_name: lookup(&any.path)?,
                        kind: MemberKind::Any,
                        type_ref: None,
                        occurs: any.occurs.into(),
                        fixed: None,
                        namespace: Some(any.namespace.clone()),
                        path: any.path.to_string(),
                    });
                }
                BoundType {
                    readable_name: names[&id].clone(),
                    wire_name: t.name.as_ref().map(|_| lookup(&t.path)).transpose()?,
                    kind: TypeKind::Complex,
                    namespace: t.namespace.clone(),
                    path: t.path.to_string(),
                    base: None,
                    members,
                    enum_values: None,
                }
            }
            TypeId::Builtin(_) => unreachable!(),
        });
    }

    Ok(BindingManifest {
        schema_namespace: original.target_namespace.clone(),
        minified_namespace: result
            .namespace_map
            .get(&original.target_namespace)
            .cloned()
            .unwrap_or_default(),
        dictionary_checksum: found,
        globals,
        types,
    })
}

fn type_namespace(s: &CompiledSchema, path: &ComponentPath) -> String {
    for d in &s.documents {
        let mut found = false;
        d.walk(&mut |c| found |= c.path == *path);
        if found {
            return d.target_namespace.clone();
        }
    }
    String::new()
}

/// Readable names for every user type, unique across the manifest. Named
/// types keep their local name; anonymous types borrow the name of the
/// declaration that holds them. Clashes get a numeric suffix.
fn readable_type_names(s: &CompiledSchema) -> HashMap<TypeId, String> {
    let mut out = HashMap::new();
    let mut taken = HashSet::new();
    let claim = |base: String, taken: &mut HashSet<String>| -> String {
        let mut candidate = base.clone();
        let mut n = 2;
        while !taken.insert(candidate.clone()) {
            candidate = format!("{base}_{n}");
            n += 1;
        }
        candidate
    };
    let named = |q: &Option<QualifiedName>| q.as_ref().map(|q| q.local.clone());
    let holder = |p: &ComponentPath| match p.parent().and_then(|pp| pp.last().cloned()) {
        Some(seg) => match seg.label {
            crate::schema::SegmentLabel::Name(n) => n,
            _ => "Anonymous".to_string(),
        },
        None => "Anonymous".to_string(),
    };
    let mut anon = Vec::new();
    for (i, t) in s.simple_types.iter().enumerate() {
        match named(&t.name) {
            Some(n) => {
                out.insert(TypeId::Simple(i), claim(n, &mut taken));
            }
            None => anon.push((TypeId::Simple(i), holder(&t.path))),
        }
    }
    for (i, t) in s.complex_types.iter().enumerate() {
        match named(&t.name) {
            Some(n) => {
                out.insert(TypeId::Complex(i), claim(n, &mut taken));
            }
            None => anon.push((TypeId::Complex(i), holder(&t.path))),
        }
    }
    for (id, base) in anon {
        out.insert(id, claim(base, &mut taken));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schema::parse_schema;

    fn pipeline(body: &str) -> (CompiledSchema, MinificationResult) {
        let xsd = format!(
            r#"<xsd:schema xmlns:xsd="http://www.w3.org/2001/XMLSchema" xmlns:t="urn:t" targetNamespace="urn:t" elementFormDefault="qualified">{body}</xsd:schema>"#
        );
        let s = CompiledSchema::compile(vec![parse_schema(xsd.as_bytes(), "t.xsd").unwrap()]).unwrap();
        let r = minify_set(s.documents.clone()).unwrap();
        (s, r)
    }

    #[test]
    fn empty_schema_has_no_types() {
        let (s, r) = pipeline("");
        let m = build_manifest(&s, &r).unwrap();
        assert!(m.types.is_empty());
        assert!(m.globals.is_empty());
        assert_eq!(m.dictionary_checksum, checksum(b""));
    }

    #[test]
    fn idmef_heartbeat_binds_analyzer_to_b() {
        let s = crate::corpus::idmef_schema().unwrap();
        let r = minify_set(s.documents.clone()).unwrap();
        let m = build_manifest(&s, &r).unwrap();
        let hb = m.type_by_name("Heartbeat").unwrap();
        let analyzer = hb.members.iter().find(|m| m.readable_name == "Analyzer").unwrap();
        assert_eq!(analyzer.wire_name, "b");
        assert_eq!(analyzer.kind, MemberKind::ChildElement);
        let uc = m.type_by_name("usercategory").unwrap();
        let values: Vec<_> = uc
            .enum_values
            .as_ref()
            .unwrap()
            .iter()
            .map(|v| (v.readable.as_str(), v.wire.as_str()))
            .collect();
        assert_eq!(values, [("unknown", "0"), ("application", "1"), ("os-device", "2")]);
        assert_eq!(m.dictionary_entry_count(), r.dictionary.len());
        assert_eq!(m.dictionary_checksum, checksum(&write_dictionary(&r.dictionary)));
    }

    #[test]
    fn stale_dictionary_is_rejected() {
        let (s, mut r) = pipeline(r#"<xsd:element name="a" type="xsd:string"/><xsd:element name="b" type="xsd:string"/>"#);
        r.dictionary.entries.swap(0, 1);
        assert!(matches!(build_manifest(&s, &r), Err(BindingError::ChecksumMismatch { .. })));
    }

    #[test]
    fn anonymous_types_take_their_holder_name() {
        let (s, r) = pipeline(
            r#"<xsd:element name="Root"><xsd:complexType><xsd:attribute name="kind"><xsd:simpleType>
                 <xsd:restriction base="xsd:string"><xsd:enumeration value="x"/></xsd:restriction>
               </xsd:simpleType></xsd:attribute></xsd:complexType></xsd:element>
               <xsd:complexType name="Root"/>"#,
        );
        let m = build_manifest(&s, &r).unwrap();
        let names: Vec<_> = m.types.iter().map(|t| t.readable_name.as_str()).collect();
        assert_eq!(names, ["Root_2", "kind", "Root"]);
        assert_eq!(m.types[0].wire_name, None);
        assert_eq!(m.dictionary_entry_count(), r.dictionary.len());
    }

    #[test]
    fn manifest_json_round_trips() {
        let s = crate::corpus::idmef_schema().unwrap();
        let r = minify_set(s.documents.clone()).unwrap();
        let m = build_manifest(&s, &r).unwrap();
        let bytes = m.to_json();
        assert_eq!(BindingManifest::from_json(&bytes).unwrap(), m);
        let text = String::from_utf8(bytes).unwrap();
        let first_keys: Vec<_> = text.lines().skip(1).take(3).map(|l| l.trim().split(':').next().unwrap().to_string()).collect();
        assert_eq!(first_keys, ["\"schema_namespace\"", "\"minified_namespace\"", "\"dictionary_checksum\""]);
    }
}
