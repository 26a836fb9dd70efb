//! Template-driven source emission from a binding manifest.
//!
//! Templates are plain text with `{{placeholder}}` slots. The built-in set
//! targets Rust with serde: structs keep private fields named and renamed
//! after the wire names, and expose accessors under the readable names.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::path::Path;

use thiserror::Error;

use super::{BindingManifest, BoundMember, BoundType, MemberKind, TypeKind};

/// Name of the single file produced by the Rust template set.
pub const OUTPUT_FILE: &str = "generated.rs";

const REQUIRED: [&str; 9] = [
    "file",
    "struct",
    "field",
    "accessor",
    "enum",
    "variant",
    "readable_arm",
    "alias",
    "root_variant",
];

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TemplateError {
    #[error("template '{0}' is missing from the template set")]
    MissingTemplate(String),
    #[error("template '{template}' uses unknown placeholder '{{{{{placeholder}}}}}'")]
    MissingPlaceholder { template: String, placeholder: String },
    #[error("template '{template}' has an unterminated placeholder")]
    Unterminated { template: String },
    #[error("reading templates from {path}: {message}")]
    Io { path: String, message: String },
    #[error("manifest references unknown type '{0}'")]
    UnknownType(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TemplateSet {
    templates: BTreeMap<String, String>,
}

impl TemplateSet {
    pub fn new(templates: BTreeMap<String, String>) -> Self {
        Self { templates }
    }

    /// The bundled Rust templates.
    pub fn rust() -> Self {
        macro_rules! bundled {
            ($($name:literal),*) => {
                BTreeMap::from([$(
                    ($name.to_string(), include_str!(concat!("../../templates/rust/", $name, ".tmpl")).to_string()),
                )*])
            };
        }
        Self::new(bundled!(
            "file",
            "struct",
            "field",
            "accessor",
            "enum",
            "variant",
            "readable_arm",
            "alias",
            "root_variant"
        ))
    }

    /// Reads every `*.tmpl` file in `dir`; the file stem names the template.
    pub fn from_dir(dir: &Path) -> Result<Self, TemplateError> {
        let io = |e: std::io::Error| TemplateError::Io {
            path: dir.display().to_string(),
            message: e.to_string(),
        };
        let mut templates = BTreeMap::new();
        for entry in std::fs::read_dir(dir).map_err(io)? {
            let path = entry.map_err(io)?.path();
            if path.extension().and_then(|e| e.to_str()) != Some("tmpl") {
                continue;
            }
            let Some(stem) = path.file_stem().and_then(|s| s.to_str()) else { continue };
            let text = std::fs::read_to_string(&path).map_err(io)?;
            templates.insert(stem.to_string(), text);
        }
        Ok(Self::new(templates))
    }

    pub fn get(&self, name: &str) -> Option<&str> {
        self.templates.get(name).map(String::as_str)
    }

    fn expand(&self, name: &str, vars: &[(&str, &str)]) -> Result<String, TemplateError> {
        let template = self
            .get(name)
            .ok_or_else(|| TemplateError::MissingTemplate(name.to_string()))?;
        expand(name, template, vars)
    }
}

/// Substitutes `{{key}}` slots; every slot must have a value.
pub fn expand(name: &str, template: &str, vars: &[(&str, &str)]) -> Result<String, TemplateError> {
    let mut out = String::with_capacity(template.len());
    let mut rest = template;
    while let Some(start) = rest.find("{{") {
        out.push_str(&rest[..start]);
        let after = &rest[start + 2..];
        let end = after.find("}}").ok_or_else(|| TemplateError::Unterminated {
            template: name.to_string(),
        })?;
        let key = after[..end].trim();
        let value = vars
            .iter()
            .find(|(k, _)| *k == key)
            .map(|(_, v)| *v)
            .ok_or_else(|| TemplateError::MissingPlaceholder {
                template: name.to_string(),
                placeholder: key.to_string(),
            })?;
        out.push_str(value);
        rest = &after[end + 2..];
    }
    out.push_str(rest);
    Ok(out)
}

/// Expands `templates` over `manifest` into `(file name, contents)` pairs.
pub fn emit_source(manifest: &BindingManifest, templates: &TemplateSet) -> Result<Vec<(String, Vec<u8>)>, TemplateError> {
    for name in REQUIRED {
        if templates.get(name).is_none() {
            return Err(TemplateError::MissingTemplate(name.to_string()));
        }
    }
    let e = Emitter::new(manifest, templates);
    let mut items = String::new();
    for t in &manifest.types {
        items.push_str(&e.item(t)?);
    }
    let mut root_variants = String::new();
    let mut used = HashSet::new();
    for g in manifest.globals.iter().filter(|g| g.kind == MemberKind::ChildElement) {
        let variant = unique(type_ident(&g.readable_name), &mut used);
        root_variants.push_str(&templates.expand(
            "root_variant",
            &[
                ("wire_name", &g.wire_name),
                ("readable_name", &g.readable_name),
                ("variant_ident", &variant),
                ("field_type", &e.value_type(g.type_ref.as_deref())?),
            ],
        )?);
    }
    let file = templates.expand(
        "file",
        &[
            ("schema_namespace", &manifest.schema_namespace),
            ("minified_namespace", &manifest.minified_namespace),
            ("dictionary_checksum", &manifest.dictionary_checksum),
            ("items", &items),
            ("root_variants", &root_variants),
        ],
    )?;
    Ok(vec![(OUTPUT_FILE.to_string(), file.into_bytes())])
}

struct Emitter<'a> {
    templates: &'a TemplateSet,
    types: HashMap<&'a str, &'a BoundType>,
    idents: HashMap<&'a str, String>,
}

impl<'a> Emitter<'a> {
    fn new(manifest: &'a BindingManifest, templates: &'a TemplateSet) -> Self {
        let mut used = HashSet::from(["Document".to_string()]);
        let mut idents = HashMap::new();
        for t in &manifest.types {
            idents.insert(t.readable_name.as_str(), unique(type_ident(&t.readable_name), &mut used));
        }
        Self {
            templates,
            types: manifest.types.iter().map(|t| (t.readable_name.as_str(), t)).collect(),
            idents,
        }
    }

    /// Rust type carrying one value of `type_ref`.
    fn value_type(&self, type_ref: Option<&str>) -> Result<String, TemplateError> {
        let Some(name) = type_ref else {
            return Ok("serde_json::Value".into());
        };
        if name.starts_with("xsd:") {
            return Ok("String".into());
        }
        self.idents
            .get(name)
            .cloned()
            .ok_or_else(|| TemplateError::UnknownType(name.to_string()))
    }

    fn is_complex(&self, type_ref: Option<&str>) -> bool {
        type_ref
            .and_then(|n| self.types.get(n))
            .is_some_and(|t| t.kind == TypeKind::Complex)
    }

    fn item(&self, t: &BoundType) -> Result<String, TemplateError> {
        let ident = &self.idents[t.readable_name.as_str()];
        let wire = t.wire_name.as_deref().unwrap_or("(anonymous)");
        match t.kind {
            TypeKind::Simple => match &t.enum_values {
                Some(values) => self.enumeration(t, ident, values),
                None => {
                    let target = self.value_type(t.base.as_deref())?;
                    self.templates.expand(
                        "alias",
                        &[("readable_name", &t.readable_name), ("type_ident", ident), ("target", &target)],
                    )
                }
            },
            TypeKind::Complex => {
                let mut fields = String::new();
                let mut accessors = String::new();
                let mut used = HashSet::new();
                for m in &t.members {
                    let (field_type, serde_attribute) = self.field_type(m)?;
                    let field_ident = field_ident(&m.wire_name);
                    let method = unique(snake_ident(&m.readable_name), &mut used);
                    let setter = format!("set_{}", method.trim_start_matches("r#"));
                    let vars = [
                        ("readable_name", m.readable_name.as_str()),
                        ("wire_name", m.wire_name.as_str()),
                        ("field_ident", field_ident.as_str()),
                        ("field_type", field_type.as_str()),
                        ("serde_attribute", serde_attribute.as_str()),
                        ("getter", method.as_str()),
                        ("setter", setter.as_str()),
                    ];
                    fields.push_str(&self.templates.expand("field", &vars)?);
                    accessors.push_str(&self.templates.expand("accessor", &vars)?);
                }
                self.templates.expand(
                    "struct",
                    &[
                        ("readable_name", &t.readable_name),
                        ("wire_name", wire),
                        ("type_ident", ident),
                        ("fields", &fields),
                        ("accessors", &accessors),
                    ],
                )
            }
        }
    }

    fn field_type(&self, m: &BoundMember) -> Result<(String, String), TemplateError> {
        let value = self.value_type(m.type_ref.as_deref())?;
        let rename = format!("rename = \"{}\"", m.wire_name);
        Ok(if m.occurs.is_repeated() {
            (
                format!("Vec<{value}>"),
                format!("#[serde({rename}, default, skip_serializing_if = \"Vec::is_empty\")]"),
            )
        } else if m.occurs.min == 0 {
            let inner = if self.is_complex(m.type_ref.as_deref()) {
                format!("Box<{value}>")
            } else {
                value
            };
            (
                format!("Option<{inner}>"),
                format!("#[serde({rename}, default, skip_serializing_if = \"Option::is_none\")]"),
            )
        } else {
            (value, format!("#[serde({rename})]"))
        })
    }

    fn enumeration(&self, t: &BoundType, ident: &str, values: &[super::EnumValue]) -> Result<String, TemplateError> {
        let mut variants = String::new();
        let mut arms = String::new();
        let mut used = HashSet::new();
        for (i, v) in values.iter().enumerate() {
            let variant = unique(type_ident(&v.readable), &mut used);
            let readable = v.readable.replace('\\', "\\\\").replace('"', "\\\"");
            let vars = [
                ("default_attribute", if i == 0 { "#[default]\n    " } else { "" }),
                ("wire", v.wire.as_str()),
                ("variant_ident", variant.as_str()),
                ("discriminant", &i.to_string()),
                ("readable", readable.as_str()),
            ];
            variants.push_str(&self.templates.expand("variant", &vars)?);
            arms.push_str(&self.templates.expand("readable_arm", &vars)?);
        }
        self.templates.expand(
            "enum",
            &[
                ("readable_name", &t.readable_name),
                ("type_ident", ident),
                ("variants", &variants),
                ("readable_arms", &arms),
            ],
        )
    }
}

const KEYWORDS: [&str; 50] = [
    "abstract", "as", "async", "await", "become", "box", "break", "const", "continue", "crate", "do", "dyn", "else",
    "enum", "extern", "false", "final", "fn", "for", "gen", "if", "impl", "in", "let", "loop", "macro", "match", "mod",
    "move", "mut", "override", "priv", "pub", "ref", "return", "self", "static", "struct", "super", "trait", "true",
    "try", "type", "typeof", "unsafe", "unsized", "use", "virtual", "where", "while",
];

fn keyword_safe(s: String) -> String {
    match s.as_str() {
        "self" | "super" | "crate" | "Self" => format!("{s}_"),
        k if KEYWORDS.contains(&k) => format!("r#{s}"),
        _ => s,
    }
}

fn words(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let chars: Vec<char> = s.chars().collect();
    for (i, &c) in chars.iter().enumerate() {
        if !c.is_ascii_alphanumeric() {
            if !cur.is_empty() {
                out.push(std::mem::take(&mut cur));
            }
            continue;
        }
        let boundary = c.is_ascii_uppercase()
            && i > 0
            && (chars[i - 1].is_ascii_lowercase()
                || (chars[i - 1].is_ascii_uppercase() && chars.get(i + 1).is_some_and(|n| n.is_ascii_lowercase())));
        if boundary && !cur.is_empty() {
            out.push(std::mem::take(&mut cur));
        }
        cur.push(c);
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

/// `IDMEF-Message` → `IdmefMessage`, `os-device` → `OsDevice`.
pub fn type_ident(s: &str) -> String {
    let mut out: String = words(s)
        .iter()
        .map(|w| {
            let lower = w.to_ascii_lowercase();
            let mut c = lower.chars();
            c.next()
                .map(|f| f.to_ascii_uppercase().to_string() + c.as_str())
                .unwrap_or_default()
        })
        .collect();
    if out.is_empty() || out.starts_with(|c: char| c.is_ascii_digit()) {
        out.insert(0, 'V');
    }
    keyword_safe(out)
}

/// `HeartbeatInterval` → `heartbeat_interval`, `type` → `r#type`.
pub fn snake_ident(s: &str) -> String {
    let mut out = words(s)
        .iter()
        .map(|w| w.to_ascii_lowercase())
        .collect::<Vec<_>>()
        .join("_");
    if out.is_empty() || out.starts_with(|c: char| c.is_ascii_digit()) {
        out.insert(0, 'v');
    }
    keyword_safe(out)
}

fn field_ident(wire: &str) -> String {
    keyword_safe(wire.to_string())
}

fn unique(base: String, used: &mut HashSet<String>) -> String {
    let mut name = base.clone();
    let mut n = 2;
    while !used.insert(name.clone()) {
        name = format!("{base}{n}");
        n += 1;
    }
    name
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binding::{Bounds, EnumValue};

    fn member(readable: &str, wire: &str, kind: MemberKind, type_ref: &str, min: u32, max: Option<u32>) -> BoundMember {
        BoundMember {
            readable_name: readable.into(),
            wire_name: wire.into(),
            kind,
            type_ref: Some(type_ref.into()),
            occurs: Bounds { min, max },
            fixed: None,
            namespace: None,
            path: String::new(),
        }
    }

    fn manifest(types: Vec<BoundType>) -> BindingManifest {
        BindingManifest {
            schema_namespace: "urn:t".into(),
            minified_namespace: "urn:t-min".into(),
            dictionary_checksum: "00".into(),
            globals: vec![],
            types,
        }
    }

    #[test]
    fn one_type_one_member() {
        let m = manifest(vec![BoundType {
            readable_name: "Node".into(),
            wire_name: Some("b".into()),
            kind: TypeKind::Complex,
            namespace: "urn:t".into(),
            path: String::new(),
            base: None,
            members: vec![member("location", "a", MemberKind::Attribute, "xsd:string", 0, Some(1))],
            enum_values: None,
        }]);
        let files = emit_source(&m, &TemplateSet::rust()).unwrap();
        let text = String::from_utf8(files[0].1.clone()).unwrap();
        assert!(text.contains("rename = \"a\""));
        assert!(text.contains("pub fn location(&self)"));
        assert_eq!(files, emit_source(&m, &TemplateSet::rust()).unwrap());
    }

    #[test]
    fn enum_constants_are_positional() {
        let values = ["unknown", "application", "os-device"]
            .iter()
            .enumerate()
            .map(|(i, v)| EnumValue {
                readable: v.to_string(),
                wire: i.to_string(),
            })
            .collect();
        let m = manifest(vec![BoundType {
            readable_name: "usercategory".into(),
            wire_name: Some("a".into()),
            kind: TypeKind::Simple,
            namespace: "urn:t".into(),
            path: String::new(),
            base: Some("xsd:string".into()),
            members: vec![],
            enum_values: Some(values),
        }]);
        let text = String::from_utf8(emit_source(&m, &TemplateSet::rust()).unwrap().remove(0).1).unwrap();
        assert!(text.contains("OsDevice = 2,"), "{text}");
        assert!(text.contains("#[serde(rename = \"2\")]"));
        assert!(text.contains("Self::OsDevice => \"os-device\""));
    }

    #[test]
    fn unknown_placeholder_names_the_template() {
        let mut set = TemplateSet::rust();
        set.templates.insert("alias".into(), "pub type {{nope}};".into());
        let m = manifest(vec![BoundType {
            readable_name: "s".into(),
            wire_name: Some("a".into()),
            kind: TypeKind::Simple,
            namespace: "urn:t".into(),
            path: String::new(),
            base: Some("xsd:string".into()),
            members: vec![],
            enum_values: None,
        }]);
        assert_eq!(
            emit_source(&m, &set),
            Err(TemplateError::MissingPlaceholder {
                template: "alias".into(),
                placeholder: "nope".into()
            })
        );
        set.templates.remove("enum");
        assert_eq!(emit_source(&m, &set), Err(TemplateError::MissingTemplate("enum".into())));
    }

    #[test]
    fn identifiers() {
        assert_eq!(type_ident("IDMEF-Message"), "IdmefMessage");
        assert_eq!(type_ident("SNMPService"), "SnmpService");
        assert_eq!(type_ident("SHA2-256"), "Sha2256");
        assert_eq!(type_ident("3des"), "V3des");
        assert_eq!(snake_ident("HeartbeatInterval"), "heartbeat_interval");
        assert_eq!(snake_ident("messageProcessingModel"), "message_processing_model");
        assert_eq!(snake_ident("type"), "r#type");
        assert_eq!(snake_ident("c-major-device"), "c_major_device");
        assert_eq!(field_ident("as"), "r#as");
    }

    #[test]
    fn idmef_emission_is_deterministic() {
        let p = crate::pipeline::Pipeline::idmef().unwrap();
        let a = emit_source(p.manifest(), &TemplateSet::rust()).unwrap();
        let b = emit_source(p.manifest(), &TemplateSet::rust()).unwrap();
        assert_eq!(a, b);
        let text = String::from_utf8(a[0].1.clone()).unwrap();
        assert!(!text.contains("{{"));
    }
}
