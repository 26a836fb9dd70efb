use std::fmt;

use serde::{Deserialize, Serialize};

use super::SchemaError;

pub const XSD_NS: &str = "http://www.w3.org/2001/XMLSchema";

/// A namespace-qualified name.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QualifiedName {
    pub namespace: String,
    pub local: String,
}

impl QualifiedName {
    pub fn new(namespace: impl Into<String>, local: impl Into<String>) -> Result<Self, SchemaError> {
        let namespace = namespace.into();
        let local = local.into();
        if local.is_empty() || local.chars().any(|c| c.is_whitespace() || c == '/') {
            return Err(SchemaError::InvalidName {
                name: local,
                reason: "local names must be non-empty and contain no whitespace or '/'".into(),
            });
        }
        if !is_uri_reference(&namespace) {
            return Err(SchemaError::InvalidName {
                name: namespace,
                reason: "namespace is not a valid URI reference".into(),
            });
        }
        Ok(Self { namespace, local })
    }

    pub fn xsd(local: &str) -> Self {
        Self {
            namespace: XSD_NS.to_string(),
            local: local.to_string(),
        }
    }

    pub fn is_builtin(&self) -> bool {
        self.namespace == XSD_NS
    }
}

impl fmt::Display for QualifiedName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.namespace.is_empty() {
            f.write_str(&self.local)
        } else {
            write!(f, "{{{}}}{}", self.namespace, self.local)
        }
    }
}

/// Syntactic URI-reference check: printable, no whitespace, no characters
/// that RFC 3986 never allows unescaped.
pub fn is_uri_reference(s: &str) -> bool {
    s.chars().all(|c| {
        !c.is_whitespace() && !c.is_control() && !matches!(c, '<' | '>' | '"' | '{' | '}' | '|' | '\\' | '^' | '`')
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReferenceKind {
    Import,
    Include,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SchemaReference {
    pub kind: ReferenceKind,
    pub schema_location: String,
    /// Present iff `kind` is `Import`.
    pub namespace: Option<String>,
    pub line: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ComponentKind {
    Element,
    Attribute,
    ComplexType,
    SimpleType,
    Sequence,
    Choice,
    SimpleContent,
    Extension,
    Restriction,
    Enumeration,
    Any,
}

impl ComponentKind {
    /// The XSD tag name, as rendered in component paths.
    pub fn tag(self) -> &'static str {
        match self {
            ComponentKind::Element => "xsd:element",
            ComponentKind::Attribute => "xsd:attribute",
            ComponentKind::ComplexType => "xsd:complexType",
            ComponentKind::SimpleType => "xsd:simpleType",
            ComponentKind::Sequence => "xsd:sequence",
            ComponentKind::Choice => "xsd:choice",
            ComponentKind::SimpleContent => "xsd:simpleContent",
            ComponentKind::Extension => "xsd:extension",
            ComponentKind::Restriction => "xsd:restriction",
            ComponentKind::Enumeration => "xsd:enumeration",
            ComponentKind::Any => "xsd:any",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        Some(match tag {
            "xsd:element" => ComponentKind::Element,
            "xsd:attribute" => ComponentKind::Attribute,
            "xsd:complexType" => ComponentKind::ComplexType,
            "xsd:simpleType" => ComponentKind::SimpleType,
            "xsd:sequence" => ComponentKind::Sequence,
            "xsd:choice" => ComponentKind::Choice,
            "xsd:simpleContent" => ComponentKind::SimpleContent,
            "xsd:extension" => ComponentKind::Extension,
            "xsd:restriction" => ComponentKind::Restriction,
            "xsd:enumeration" => ComponentKind::Enumeration,
            "xsd:any" => ComponentKind::Any,
            _ => return None,
        })
    }

    pub fn is_named(self) -> bool {
        matches!(
            self,
            ComponentKind::Element
                | ComponentKind::Attribute
                | ComponentKind::ComplexType
                | ComponentKind::SimpleType
        )
    }

    pub fn is_group(self) -> bool {
        matches!(self, ComponentKind::Sequence | ComponentKind::Choice)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MaxOccurs {
    Bounded(u32),
    Unbounded,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Occurs {
    pub min: u32,
    pub max: MaxOccurs,
}

impl Occurs {
    pub const ONE: Occurs = Occurs {
        min: 1,
        max: MaxOccurs::Bounded(1),
    };
    pub const OPTIONAL: Occurs = Occurs {
        min: 0,
        max: MaxOccurs::Bounded(1),
    };

    pub fn is_repeated(&self) -> bool {
        match self.max {
            MaxOccurs::Bounded(n) => n > 1,
            MaxOccurs::Unbounded => true,
        }
    }

    pub fn allows(&self, count: usize) -> bool {
        let count = count as u64;
        count >= self.min as u64
            && match self.max {
                MaxOccurs::Bounded(n) => count <= n as u64,
                MaxOccurs::Unbounded => true,
            }
    }
}

impl Default for Occurs {
    fn default() -> Self {
        Occurs::ONE
    }
}

/// How a path segment is qualified.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SegmentLabel {
    Plain,
    Name(String),
    Value(String),
    Anon,
    Index(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathSegment {
    pub node_kind: String,
    pub label: SegmentLabel,
}

impl PathSegment {
    pub fn new(node_kind: impl Into<String>, label: SegmentLabel) -> Self {
        Self {
            node_kind: node_kind.into(),
            label,
        }
    }
}

impl fmt::Display for PathSegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.node_kind)?;
        match &self.label {
            SegmentLabel::Plain => Ok(()),
            SegmentLabel::Name(n) => write!(f, "[name={n}]"),
            SegmentLabel::Value(v) => write!(f, "[value={v}]"),
            SegmentLabel::Anon => f.write_str("[anon]"),
            SegmentLabel::Index(i) => write!(f, "[index={i}]"),
        }
    }
}

/// Location of a component from the schema root, rendered as
/// `xsd:schema/xsd:complexType[name=T]/xsd:attribute[name=a]`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ComponentPath {
    pub segments: Vec<PathSegment>,
}

impl ComponentPath {
    pub fn schema_root(document_label: Option<&str>) -> Self {
        let label = match document_label {
            Some(n) => SegmentLabel::Name(n.to_string()),
            None => SegmentLabel::Plain,
        };
        Self {
            segments: vec![PathSegment::new("xsd:schema", label)],
        }
    }

    pub fn child(&self, segment: PathSegment) -> Self {
        let mut segments = self.segments.clone();
        segments.push(segment);
        Self { segments }
    }

    pub fn parent(&self) -> Option<ComponentPath> {
        if self.segments.len() <= 1 {
            return None;
        }
        Some(Self {
            segments: self.segments[..self.segments.len() - 1].to_vec(),
        })
    }

    pub fn last(&self) -> Option<&PathSegment> {
        self.segments.last()
    }

    /// Parses the rendered form. Segment labels may not contain `/` or `]`.
    pub fn parse(s: &str) -> Result<Self, String> {
        if s.is_empty() {
            return Err("empty path".into());
        }
        let mut segments = Vec::new();
        for raw in s.split('/') {
            segments.push(parse_segment(raw)?);
        }
        if segments[0].node_kind != "xsd:schema" {
            return Err(format!("path must start at xsd:schema, found '{}'", segments[0].node_kind));
        }
        Ok(Self { segments })
    }
}

fn parse_segment(raw: &str) -> Result<PathSegment, String> {
    let (kind, label) = match raw.find('[') {
        None => (raw, SegmentLabel::Plain),
        Some(open) => {
            let inner = raw[open + 1..]
                .strip_suffix(']')
                .ok_or_else(|| format!("unterminated qualifier in '{raw}'"))?;
            let label = if inner == "anon" {
                SegmentLabel::Anon
            } else if let Some(n) = inner.strip_prefix("name=") {
                SegmentLabel::Name(n.to_string())
            } else if let Some(v) = inner.strip_prefix("value=") {
                SegmentLabel::Value(v.to_string())
            } else if let Some(i) = inner.strip_prefix("index=") {
                SegmentLabel::Index(i.parse().map_err(|_| format!("bad index in '{raw}'"))?)
            } else {
                return Err(format!("unknown qualifier '{inner}'"));
            };
            (&raw[..open], label)
        }
    };
    if kind.is_empty() || !kind.starts_with("xsd:") || kind.contains(']') {
        return Err(format!("bad node kind '{kind}'"));
    }
    match &label {
        SegmentLabel::Name(n) | SegmentLabel::Value(n) if n.is_empty() || n.contains(']') => {
            return Err(format!("bad label in '{raw}'"))
        }
        _ => {}
    }
    Ok(PathSegment::new(kind, label))
}

impl fmt::Display for ComponentPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.segments.iter().enumerate() {
            if i > 0 {
                f.write_str("/")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchemaComponent {
    pub kind: ComponentKind,
    /// Name for named components, value for enumeration facets.
    pub name_or_value: Option<String>,
    /// `type` of elements/attributes, `base` of extensions/restrictions.
    pub type_ref: Option<QualifiedName>,
    pub occurs: Occurs,
    pub fixed: Option<String>,
    pub default: Option<String>,
    /// `namespace` and `processContents` of `xsd:any`.
    pub any_namespace: Option<String>,
    pub process_contents: Option<String>,
    pub children: Vec<SchemaComponent>,
    pub path: ComponentPath,
    pub line: usize,
}

impl SchemaComponent {
    pub fn new(kind: ComponentKind, path: ComponentPath, line: usize) -> Self {
        Self {
            kind,
            name_or_value: None,
            type_ref: None,
            occurs: Occurs::ONE,
            fixed: None,
            default: None,
            any_namespace: None,
            process_contents: None,
            children: Vec::new(),
            path,
            line,
        }
    }

    pub fn name(&self) -> Option<&str> {
        self.name_or_value.as_deref()
    }

    /// Pre-order traversal of this component and its descendants.
    pub fn walk<'a>(&'a self, f: &mut dyn FnMut(&'a SchemaComponent)) {
        f(self);
        for c in &self.children {
            c.walk(f);
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchemaDocument {
    pub target_namespace: String,
    pub location: String,
    /// Namespace prefixes declared on the schema root (prefix, uri),
    /// excluding the XSD namespace itself.
    pub prefixes: Vec<(String, String)>,
    pub references: Vec<SchemaReference>,
    pub components: Vec<SchemaComponent>,
}

impl SchemaDocument {
    pub fn walk<'a>(&'a self, f: &mut dyn FnMut(&'a SchemaComponent)) {
        for c in &self.components {
            c.walk(f);
        }
    }

    pub fn top_level(&self, kind: ComponentKind, name: &str) -> Option<&SchemaComponent> {
        self.components
            .iter()
            .find(|c| c.kind == kind && c.name() == Some(name))
    }

    /// Preferred prefix for a namespace, taken from the schema's declarations.
    pub fn prefix_for(&self, namespace: &str) -> Option<&str> {
        self.prefixes
            .iter()
            .find(|(p, u)| u == namespace && !p.is_empty())
            .map(|(p, _)| p.as_str())
    }

    /// File stem of the location (`dir/idmef.xsd` -> `idmef`).
    pub fn stem(&self) -> &str {
        location_stem(&self.location)
    }
}

pub fn location_stem(location: &str) -> &str {
    let file = location.rsplit(['/', '\\']).next().unwrap_or(location);
    file.strip_suffix(".xsd").unwrap_or(file)
}
