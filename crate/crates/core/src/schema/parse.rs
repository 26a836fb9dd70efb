use std::collections::{HashMap, HashSet};

use super::model::*;
use super::SchemaError;
use crate::xml::{self, NamespaceScope, XmlElement};

/// Parses one XSD document of the supported subset.
///
/// Anything outside the subset is reported as `UnsupportedConstruct` rather
/// than skipped.
pub fn parse_schema(bytes: &[u8], location: &str) -> Result<SchemaDocument, SchemaError> {
    let doc = xml::parse_document(bytes)
        .map_err(|e| SchemaError::MalformedXml(e, location.to_string()))?;
    let root = &doc.root;
    let mut scope = NamespaceScope::new();
    scope.push(root);
    let p = Parser { location, scope };
    if p.xsd_local(root).as_deref() != Some("schema") {
        return Err(p.invalid(root.line, format!("root element must be xsd:schema, found '{}'", root.name)));
    }
    p.check_schema_attributes(root)?;
    let target_namespace = root.attribute("targetNamespace").unwrap_or("").to_string();
    if !is_uri_reference(&target_namespace) {
        return Err(SchemaError::InvalidName {
            name: target_namespace,
            reason: "targetNamespace is not a valid URI reference".into(),
        });
    }
    let prefixes = root
        .namespace_declarations()
        .filter(|(_, u)| *u != XSD_NS)
        .map(|(p, u)| (p.to_string(), u.to_string()))
        .collect();

    let mut references = Vec::new();
    let mut components = Vec::new();
    for child in root.child_elements() {
        let local = p.expect_xsd(child)?;
        match local.as_str() {
            "annotation" => {}
            "import" | "include" => {
                if !components.is_empty() {
                    return Err(p.invalid(child.line, format!("xsd:{local} must precede all declarations")));
                }
                references.push(p.reference(child, &local, &target_namespace)?);
            }
            "element" => components.push(p.element(child, true)?),
            "attribute" => components.push(p.attribute(child, true)?),
            "complexType" => components.push(p.complex_type(child, true)?),
            "simpleType" => components.push(p.simple_type(child, true)?),
            other => return Err(p.unsupported(other, child.line)),
        }
    }

    let mut doc = SchemaDocument {
        target_namespace,
        location: location.to_string(),
        prefixes,
        references,
        components,
    };
    check_top_level_names(&doc)?;
    assign_paths(&mut doc, None);
    check_unique_paths(&doc)?;
    Ok(doc)
}

/// Recomputes every component path of `doc`. `document_label` qualifies the
/// `xsd:schema` segment for documents outside the root namespace.
pub fn assign_paths(doc: &mut SchemaDocument, document_label: Option<&str>) {
    let root = ComponentPath::schema_root(document_label);
    assign_children(&mut doc.components, &root);
}

fn assign_children(children: &mut [SchemaComponent], parent: &ComponentPath) {
    let mut kind_counts: HashMap<ComponentKind, usize> = HashMap::new();
    for c in children.iter() {
        *kind_counts.entry(c.kind).or_default() += 1;
    }
    let mut seen: HashMap<ComponentKind, usize> = HashMap::new();
    for c in children.iter_mut() {
        let ordinal = {
            let n = seen.entry(c.kind).or_default();
            *n += 1;
            *n
        };
        let label = match (c.kind, &c.name_or_value) {
            (ComponentKind::Enumeration, Some(v)) => SegmentLabel::Value(v.clone()),
            (k, Some(n)) if k.is_named() => SegmentLabel::Name(n.clone()),
            (ComponentKind::ComplexType | ComponentKind::SimpleType, None) => SegmentLabel::Anon,
            _ if kind_counts[&c.kind] > 1 => SegmentLabel::Index(ordinal),
            _ => SegmentLabel::Plain,
        };
        c.path = parent.child(PathSegment::new(c.kind.tag(), label));
        let path = c.path.clone();
        assign_children(&mut c.children, &path);
    }
}

fn check_top_level_names(doc: &SchemaDocument) -> Result<(), SchemaError> {
    let mut seen = HashSet::new();
    for c in &doc.components {
        // complex and simple types share one symbol space
        let space = match c.kind {
            ComponentKind::SimpleType => ComponentKind::ComplexType,
            k => k,
        };
        if let Some(name) = c.name() {
            if !seen.insert((space, name)) {
                return Err(SchemaError::DuplicateName {
                    kind: kind_label(c.kind).into(),
                    name: name.to_string(),
                    location: doc.location.clone(),
                });
            }
        }
    }
    Ok(())
}

fn check_unique_paths(doc: &SchemaDocument) -> Result<(), SchemaError> {
    let mut seen = HashSet::new();
    let mut dup = None;
    doc.walk(&mut |c| {
        if dup.is_none() && !seen.insert(c.path.to_string()) {
            dup = Some(c);
        }
    });
    match dup {
        None => Ok(()),
        Some(c) => Err(SchemaError::DuplicateName {
            kind: kind_label(c.kind).into(),
            name: c.name_or_value.clone().unwrap_or_default(),
            location: doc.location.clone(),
        }),
    }
}

pub(crate) fn kind_label(kind: ComponentKind) -> &'static str {
    kind.tag().trim_start_matches("xsd:")
}

struct Parser<'a> {
    location: &'a str,
    scope: NamespaceScope,
}

impl Parser<'_> {
    fn xsd_local(&self, e: &XmlElement) -> Option<String> {
        match self.scope.resolve_element(&e.name) {
            Some((ns, local)) if ns == XSD_NS => Some(local),
            _ => None,
        }
    }

    fn expect_xsd(&self, e: &XmlElement) -> Result<String, SchemaError> {
        self.xsd_local(e).ok_or_else(|| {
            self.invalid(e.line, format!("unexpected non-schema element '{}'", e.name))
        })
    }

    fn invalid(&self, line: usize, message: String) -> SchemaError {
        SchemaError::InvalidSchema {
            message,
            line,
            location: self.location.to_string(),
        }
    }

    fn unsupported(&self, construct: &str, line: usize) -> SchemaError {
        SchemaError::UnsupportedConstruct {
            construct: construct.to_string(),
            line,
            location: self.location.to_string(),
        }
    }

    fn check_schema_attributes(&self, root: &XmlElement) -> Result<(), SchemaError> {
        if let Some(v) = root.attribute("elementFormDefault") {
            if v != "qualified" {
                return Err(self.unsupported(&format!("elementFormDefault=\"{v}\""), root.line));
            }
        }
        if let Some(v) = root.attribute("attributeFormDefault") {
            if v != "unqualified" {
                return Err(self.unsupported(&format!("attributeFormDefault=\"{v}\""), root.line));
            }
        }
        Ok(())
    }

    /// Rejects attributes whose semantics the subset does not model.
    fn reject_attributes(&self, e: &XmlElement, names: &[&str]) -> Result<(), SchemaError> {
        for n in names {
            if let Some(v) = e.attribute(n) {
                let construct = match *n {
                    "ref" => format!("{} ref", e.name.rsplit(':').next().unwrap_or(&e.name)),
                    "mixed" | "abstract" | "nillable" if v == "false" => continue,
                    _ => n.to_string(),
                };
                return Err(self.unsupported(&construct, e.line));
            }
        }
        Ok(())
    }

    fn required_name(&self, e: &XmlElement) -> Result<String, SchemaError> {
        let name = e
            .attribute("name")
            .ok_or_else(|| self.invalid(e.line, format!("'{}' requires a name", e.name)))?;
        validate_ncname(name)?;
        Ok(name.to_string())
    }

    fn qname(&self, e: &XmlElement, value: &str) -> Result<QualifiedName, SchemaError> {
        let (prefix, local) = xml::split_qname(value.trim());
        let ns = self.scope.lookup(prefix.unwrap_or("")).ok_or_else(|| {
            self.invalid(e.line, format!("undeclared namespace prefix in '{value}'"))
        })?;
        QualifiedName::new(ns, local)
    }

    fn occurs(&self, e: &XmlElement) -> Result<Occurs, SchemaError> {
        let min = match e.attribute("minOccurs") {
            None => 1,
            Some(v) => v
                .trim()
                .parse::<u32>()
                .map_err(|_| self.invalid(e.line, format!("bad minOccurs '{v}'")))?,
        };
        let max = match e.attribute("maxOccurs") {
            None => MaxOccurs::Bounded(1),
            Some(v) if v.trim() == "unbounded" => MaxOccurs::Unbounded,
            Some(v) => MaxOccurs::Bounded(
                v.trim()
                    .parse::<u32>()
                    .map_err(|_| self.invalid(e.line, format!("bad maxOccurs '{v}'")))?,
            ),
        };
        if let MaxOccurs::Bounded(m) = max {
            if m < min {
                return Err(self.invalid(e.line, format!("maxOccurs {m} is below minOccurs {min}")));
            }
        }
        Ok(Occurs { min, max })
    }

    fn component(&self, kind: ComponentKind, e: &XmlElement) -> SchemaComponent {
        SchemaComponent::new(kind, ComponentPath::default(), e.line)
    }

    fn reference(
        &self,
        e: &XmlElement,
        local: &str,
        target_namespace: &str,
    ) -> Result<SchemaReference, SchemaError> {
        let schema_location = e
            .attribute("schemaLocation")
            .ok_or_else(|| self.invalid(e.line, format!("xsd:{local} requires schemaLocation")))?
            .to_string();
        let (kind, namespace) = if local == "import" {
            let ns = e
                .attribute("namespace")
                .ok_or_else(|| self.invalid(e.line, "xsd:import requires a namespace".into()))?;
            if ns == target_namespace {
                return Err(self.invalid(
                    e.line,
                    "xsd:import namespace must differ from the target namespace".into(),
                ));
            }
            (ReferenceKind::Import, Some(ns.to_string()))
        } else {
            if e.attribute("namespace").is_some() {
                return Err(self.invalid(e.line, "xsd:include takes no namespace".into()));
            }
            (ReferenceKind::Include, None)
        };
        Ok(SchemaReference {
            kind,
            schema_location,
            namespace,
            line: e.line,
        })
    }

    fn element(&self, e: &XmlElement, top_level: bool) -> Result<SchemaComponent, SchemaError> {
        self.reject_attributes(e, &["ref", "substitutionGroup", "abstract", "nillable", "form"])?;
        let mut c = self.component(ComponentKind::Element, e);
        c.name_or_value = Some(self.required_name(e)?);
        if let Some(t) = e.attribute("type") {
            c.type_ref = Some(self.qname(e, t)?);
        }
        if top_level {
            if e.attribute("minOccurs").is_some() || e.attribute("maxOccurs").is_some() {
                return Err(self.invalid(e.line, "global elements take no occurrence bounds".into()));
            }
        } else {
            c.occurs = self.occurs(e)?;
        }
        c.fixed = e.attribute("fixed").map(str::to_string);
        c.default = e.attribute("default").map(str::to_string);
        for child in e.child_elements() {
            let local = self.expect_xsd(child)?;
            match local.as_str() {
                "annotation" => {}
                "complexType" => c.children.push(self.complex_type(child, false)?),
                "simpleType" => c.children.push(self.simple_type(child, false)?),
                other => return Err(self.unsupported(other, child.line)),
            }
        }
        if c.children.len() > 1 || (c.type_ref.is_some() && !c.children.is_empty()) {
            return Err(self.invalid(e.line, "element declares more than one type".into()));
        }
        if c.type_ref.is_none() && c.children.is_empty() {
            return Err(self.unsupported("element without a type", e.line));
        }
        Ok(c)
    }

    fn attribute(&self, e: &XmlElement, top_level: bool) -> Result<SchemaComponent, SchemaError> {
        self.reject_attributes(e, &["ref", "form"])?;
        let mut c = self.component(ComponentKind::Attribute, e);
        c.name_or_value = Some(self.required_name(e)?);
        if let Some(t) = e.attribute("type") {
            c.type_ref = Some(self.qname(e, t)?);
        }
        c.occurs = match e.attribute("use") {
            None | Some("optional") => Occurs::OPTIONAL,
            Some("required") if !top_level => Occurs::ONE,
            Some(other) => return Err(self.unsupported(&format!("use=\"{other}\""), e.line)),
        };
        c.fixed = e.attribute("fixed").map(str::to_string);
        c.default = e.attribute("default").map(str::to_string);
        for child in e.child_elements() {
            let local = self.expect_xsd(child)?;
            match local.as_str() {
                "annotation" => {}
                "simpleType" => c.children.push(self.simple_type(child, false)?),
                other => return Err(self.unsupported(other, child.line)),
            }
        }
        if c.children.len() > 1 || (c.type_ref.is_some() && !c.children.is_empty()) {
            return Err(self.invalid(e.line, "attribute declares more than one type".into()));
        }
        if c.type_ref.is_none() && c.children.is_empty() {
            c.type_ref = Some(QualifiedName::xsd("string"));
        }
        Ok(c)
    }

    fn complex_type(&self, e: &XmlElement, top_level: bool) -> Result<SchemaComponent, SchemaError> {
        self.reject_attributes(e, &["mixed", "abstract"])?;
        let mut c = self.component(ComponentKind::ComplexType, e);
        c.name_or_value = self.type_name(e, top_level)?;
        let mut saw_model = false;
        let mut saw_attribute = false;
        for child in e.child_elements() {
            let local = self.expect_xsd(child)?;
            match local.as_str() {
                "annotation" => {}
                "sequence" | "choice" | "simpleContent" => {
                    if saw_model || saw_attribute {
                        return Err(self.invalid(child.line, format!("misplaced xsd:{local}")));
                    }
                    saw_model = true;
                    c.children.push(if local == "simpleContent" {
                        self.simple_content(child)?
                    } else {
                        self.group(child, &local)?
                    });
                }
                "attribute" => {
                    if c.children.iter().any(|k| k.kind == ComponentKind::SimpleContent) {
                        return Err(self.invalid(child.line, "attributes of simple content belong in xsd:extension".into()));
                    }
                    saw_attribute = true;
                    c.children.push(self.attribute(child, false)?);
                }
                other => return Err(self.unsupported(other, child.line)),
            }
        }
        Ok(c)
    }

    fn type_name(&self, e: &XmlElement, top_level: bool) -> Result<Option<String>, SchemaError> {
        match (top_level, e.attribute("name")) {
            (true, Some(_)) => Ok(Some(self.required_name(e)?)),
            (true, None) => Err(self.invalid(e.line, "global types require a name".into())),
            (false, Some(_)) => Err(self.invalid(e.line, "local types must be anonymous".into())),
            (false, None) => Ok(None),
        }
    }

    fn group(&self, e: &XmlElement, local: &str) -> Result<SchemaComponent, SchemaError> {
        let kind = if local == "sequence" {
            ComponentKind::Sequence
        } else {
            ComponentKind::Choice
        };
        let mut c = self.component(kind, e);
        c.occurs = self.occurs(e)?;
        for child in e.child_elements() {
            let local = self.expect_xsd(child)?;
            match local.as_str() {
                "annotation" => {}
                "element" => c.children.push(self.element(child, false)?),
                "sequence" | "choice" => c.children.push(self.group(child, &local)?),
                "any" => c.children.push(self.any(child)?),
                other => return Err(self.unsupported(other, child.line)),
            }
        }
        Ok(c)
    }

    fn any(&self, e: &XmlElement) -> Result<SchemaComponent, SchemaError> {
        let mut c = self.component(ComponentKind::Any, e);
        c.occurs = self.occurs(e)?;
        c.any_namespace = Some(e.attribute("namespace").unwrap_or("##any").to_string());
        let pc = e.attribute("processContents").unwrap_or("strict");
        if !matches!(pc, "strict" | "lax" | "skip") {
            return Err(self.invalid(e.line, format!("bad processContents '{pc}'")));
        }
        c.process_contents = Some(pc.to_string());
        if e.child_elements().any(|k| self.xsd_local(k).as_deref() != Some("annotation")) {
            return Err(self.invalid(e.line, "xsd:any takes no content".into()));
        }
        Ok(c)
    }

    fn simple_content(&self, e: &XmlElement) -> Result<SchemaComponent, SchemaError> {
        let mut c = self.component(ComponentKind::SimpleContent, e);
        for child in e.child_elements() {
            let local = self.expect_xsd(child)?;
            match local.as_str() {
                "annotation" => {}
                "extension" if c.children.is_empty() => {
                    let mut ext = self.component(ComponentKind::Extension, child);
                    let base = child.attribute("base").ok_or_else(|| {
                        self.invalid(child.line, "xsd:extension requires a base".into())
                    })?;
                    ext.type_ref = Some(self.qname(child, base)?);
                    for a in child.child_elements() {
                        let local = self.expect_xsd(a)?;
                        match local.as_str() {
                            "annotation" => {}
                            "attribute" => ext.children.push(self.attribute(a, false)?),
                            other => return Err(self.unsupported(other, a.line)),
                        }
                    }
                    c.children.push(ext);
                }
                "extension" => return Err(self.invalid(child.line, "duplicate xsd:extension".into())),
                other => return Err(self.unsupported(&format!("simpleContent/{other}"), child.line)),
            }
        }
        if c.children.is_empty() {
            return Err(self.invalid(e.line, "xsd:simpleContent requires an xsd:extension".into()));
        }
        Ok(c)
    }

    fn simple_type(&self, e: &XmlElement, top_level: bool) -> Result<SchemaComponent, SchemaError> {
        let mut c = self.component(ComponentKind::SimpleType, e);
        c.name_or_value = self.type_name(e, top_level)?;
        for child in e.child_elements() {
            let local = self.expect_xsd(child)?;
            match local.as_str() {
                "annotation" => {}
                "restriction" if c.children.is_empty() => c.children.push(self.restriction(child)?),
                "restriction" => return Err(self.invalid(child.line, "duplicate xsd:restriction".into())),
                other => return Err(self.unsupported(other, child.line)),
            }
        }
        if c.children.is_empty() {
            return Err(self.invalid(e.line, "xsd:simpleType requires an xsd:restriction".into()));
        }
        Ok(c)
    }

    fn restriction(&self, e: &XmlElement) -> Result<SchemaComponent, SchemaError> {
        let mut c = self.component(ComponentKind::Restriction, e);
        let base = e
            .attribute("base")
            .ok_or_else(|| self.unsupported("restriction without a base", e.line))?;
        c.type_ref = Some(self.qname(e, base)?);
        for child in e.child_elements() {
            let local = self.expect_xsd(child)?;
            match local.as_str() {
                "annotation" => {}
                "enumeration" => {
                    let mut f = self.component(ComponentKind::Enumeration, child);
                    let value = child.attribute("value").ok_or_else(|| {
                        self.invalid(child.line, "xsd:enumeration requires a value".into())
                    })?;
                    if value.is_empty() || value.contains(']') || value.contains('/') || value.contains(',') {
                        return Err(SchemaError::InvalidName {
                            name: value.to_string(),
                            reason: "enumeration values must be non-empty and free of ']', '/' and ','".into(),
                        });
                    }
                    f.name_or_value = Some(value.to_string());
                    c.children.push(f);
                }
                other => return Err(self.unsupported(other, child.line)),
            }
        }
        Ok(c)
    }
}

fn validate_ncname(name: &str) -> Result<(), SchemaError> {
    let bad = name.is_empty()
        || name.contains(':')
        || name.chars().any(|c| c.is_whitespace() || matches!(c, '/' | '[' | ']' | ','));
    if bad {
        return Err(SchemaError::InvalidName {
            name: name.to_string(),
            reason: "component names must be non-empty NCNames free of '/', '[', ']' and ','".into(),
        });
    }
    Ok(())
}
