use super::instance::InstanceTree;
use super::{type_label, CodecError, Slot, WireTables};
use crate::schema::{CompiledSchema, QualifiedName, TypeId};
use crate::xml::{escape_attribute, escape_text, parse_document, XmlElement, XmlNode};

const DECLARATION: &str = r#"<?xml version="1.0" encoding="UTF-8"?>"#;

/// Canonical pretty rendering: XML declaration, default namespace
/// declarations, 2-space indent, LF line ends and a trailing newline.
pub fn to_xml(tree: &InstanceTree) -> Vec<u8> {
    render(tree, true)
}

pub(crate) fn render(tree: &InstanceTree, pretty: bool) -> Vec<u8> {
    let mut out = String::new();
    if pretty {
        out.push_str(DECLARATION);
        out.push('\n');
    }
    write_element(tree, "", 0, pretty, &mut out);
    if pretty {
        out.push('\n');
    }
    out.into_bytes()
}

fn write_element(t: &InstanceTree, default_ns: &str, depth: usize, pretty: bool, out: &mut String) {
    if pretty {
        for _ in 0..depth {
            out.push_str("  ");
        }
    }
    out.push('<');
    out.push_str(&t.element.local);
    for (k, v) in &t.attributes {
        out.push(' ');
        out.push_str(k);
        out.push_str("=\"");
        escape_attribute(v, out);
        out.push('"');
    }
    let ns = t.element.namespace.as_str();
    if ns != default_ns {
        out.push_str(" xmlns=\"");
        escape_attribute(ns, out);
        out.push('"');
    }
    if t.children.is_empty() {
        match &t.text {
            Some(text) if !text.is_empty() => {
                out.push('>');
                escape_text(text, out);
            }
            _ => {
                out.push_str("/>");
                return;
            }
        }
    } else {
        out.push('>');
        for c in &t.children {
            if pretty {
                out.push('\n');
            }
            write_element(c, ns, depth + 1, pretty, out);
        }
        if pretty {
            out.push('\n');
            for _ in 0..depth {
                out.push_str("  ");
            }
        }
    }
    out.push_str("</");
    out.push_str(&t.element.local);
    out.push('>');
}

/// Whitespace minification of arbitrary XML: drops comments, processing
/// instructions and whitespace between elements, and collapses empty
/// elements to `<x/>`. Names, prefixes and namespace declarations are kept.
pub fn to_min_xml_whitespace(bytes: &[u8]) -> Result<Vec<u8>, CodecError> {
    let doc = parse_document(bytes)?;
    let mut out = String::new();
    if let Some(d) = &doc.declaration {
        out.push_str("<?");
        out.push_str(d);
        out.push_str("?>");
    }
    write_raw(&doc.root, &mut out);
    Ok(out.into_bytes())
}

fn write_raw(e: &XmlElement, out: &mut String) {
    out.push('<');
    out.push_str(&e.name);
    for a in &e.attributes {
        out.push(' ');
        out.push_str(&a.name);
        out.push_str("=\"");
        escape_attribute(&a.value, out);
        out.push('"');
    }
    let element_only = e.has_element_children();
    let kept: Vec<&XmlNode> = e
        .children
        .iter()
        .filter(|c| match c {
            XmlNode::Text(t) => !t.is_empty() && !(element_only && t.trim().is_empty()),
            XmlNode::Element(_) => true,
        })
        .collect();
    if kept.is_empty() {
        out.push_str("/>");
        return;
    }
    out.push('>');
    for c in kept {
        match c {
            XmlNode::Text(t) => escape_text(t, out),
            XmlNode::Element(k) => write_raw(k, out),
        }
    }
    out.push_str("</");
    out.push_str(&e.name);
    out.push('>');
}

fn to_wire_value(schema: &CompiledSchema, tables: &WireTables, t: &TypeId, v: &str, path: &str) -> Result<String, CodecError> {
    match schema.enum_values(t) {
        None => Ok(v.to_string()),
        Some(values) => values
            .iter()
            .position(|x| x == v)
            .map(|i| i.to_string())
            .ok_or_else(|| CodecError::SchemaViolation {
                path: path.to_string(),
                message: format!("'{v}' is not a value of {}", type_label(schema, tables, t)),
            }),
    }
}

pub(crate) fn from_wire_value(schema: &CompiledSchema, tables: &WireTables, t: &TypeId, v: &str) -> Result<String, CodecError> {
    match schema.enum_values(t) {
        None => Ok(v.to_string()),
        Some(values) => {
            let index = if !v.is_empty() && v.bytes().all(|b| b.is_ascii_digit()) && (v == "0" || !v.starts_with('0')) {
                v.parse::<usize>().ok()
            } else {
                None
            };
            index
                .and_then(|i| values.get(i))
                .cloned()
                .ok_or_else(|| CodecError::EnumOutOfRange {
                    value: v.to_string(),
                    type_name: type_label(schema, tables, t),
                })
        }
    }
}

/// Renames a schema-valid tree to wire names in the minified namespace(s).
pub(crate) fn minify_tree(schema: &CompiledSchema, tables: &WireTables, tree: &InstanceTree) -> Result<InstanceTree, CodecError> {
    let gi = schema
        .global_elements
        .iter()
        .position(|e| e.name == tree.element)
        .ok_or_else(|| CodecError::SchemaViolation {
            path: format!("/{}", tree.element.local),
            message: format!("'{}' is not a global element of the schema", tree.element),
        })?;
    let decl = &schema.global_elements[gi];
    Minifier { schema, tables }.element(tree, &decl.type_id, tables.globals[gi].clone(), &format!("/{}", tree.element.local))
}

struct Minifier<'a> {
    schema: &'a CompiledSchema,
    tables: &'a WireTables,
}

impl Minifier<'_> {
    fn wire_qname(&self, name: &QualifiedName, local: String) -> QualifiedName {
        QualifiedName {
            namespace: self.tables.namespaces.get(&name.namespace).cloned().unwrap_or_default(),
            local,
        }
    }

    fn element(&self, t: &InstanceTree, type_id: &TypeId, wire: String, path: &str) -> Result<InstanceTree, CodecError> {
        let mut out = InstanceTree {
            element: self.wire_qname(&t.element, wire),
            attributes: Vec::with_capacity(t.attributes.len()),
            text: None,
            children: Vec::with_capacity(t.children.len()),
        };
        let violation = |message: String| CodecError::SchemaViolation {
            path: path.to_string(),
            message,
        };
        let TypeId::Complex(ci) = type_id else {
            out.text = t
                .text
                .as_deref()
                .map(|v| to_wire_value(self.schema, self.tables, type_id, v, path))
                .transpose()?;
            return Ok(out);
        };
        let def = self.schema.complex(*ci);
        let table = &self.tables.complex[*ci];
        for (k, v) in &t.attributes {
            let i = def
                .attribute_index(k)
                .ok_or_else(|| violation(format!("unexpected attribute '{k}'")))?;
            let wire = table.member(Slot::Attribute(i)).expect("attribute slot").wire.clone();
            let value = to_wire_value(self.schema, self.tables, &def.attributes[i].type_id, v, path)?;
            out.attributes.push((wire, value));
        }
        if let (Some(text), Some(tt)) = (&t.text, &def.text) {
            out.text = Some(to_wire_value(self.schema, self.tables, tt, text, path)?);
        }
        for c in &t.children {
            match def.element_index(&c.element.namespace, &c.element.local) {
                Some(i) => {
                    let wire = table.member(Slot::Element(i)).expect("element slot").wire.clone();
                    let p = format!("{path}/{}", c.element.local);
                    out.children.push(self.element(c, &def.elements[i].type_id, wire, &p)?);
                }
                None if def.any.is_some() => out.children.push(c.clone()),
                None => return Err(violation(format!("unexpected element '{}'", c.element.local))),
            }
        }
        Ok(out)
    }
}

/// Inverse of [`minify_tree`]; the result still needs validation.
pub(crate) fn expand_tree(schema: &CompiledSchema, tables: &WireTables, raw: InstanceTree) -> Result<InstanceTree, CodecError> {
    let unknown = |key: &str, type_name: &str| CodecError::UnknownWireMember {
        key: key.to_string(),
        type_name: type_name.to_string(),
    };
    let original_ns = tables
        .reverse_namespaces
        .get(&raw.element.namespace)
        .ok_or_else(|| unknown(&raw.element.to_string(), "(global)"))?;
    let gi = schema
        .global_elements
        .iter()
        .enumerate()
        .position(|(i, e)| tables.globals[i] == raw.element.local && e.name.namespace == *original_ns)
        .ok_or_else(|| unknown(&raw.element.local, "(global)"))?;
    let decl = &schema.global_elements[gi];
    Expander { schema, tables }.element(raw, decl.name.clone(), &decl.type_id)
}

struct Expander<'a> {
    schema: &'a CompiledSchema,
    tables: &'a WireTables,
}

impl Expander<'_> {
    fn element(&self, raw: InstanceTree, name: QualifiedName, type_id: &TypeId) -> Result<InstanceTree, CodecError> {
        let mut out = InstanceTree {
            element: name,
            attributes: Vec::with_capacity(raw.attributes.len()),
            text: None,
            children: Vec::with_capacity(raw.children.len()),
        };
        let TypeId::Complex(ci) = type_id else {
            if let Some((k, _)) = raw.attributes.first() {
                return Err(CodecError::UnknownWireMember {
                    key: k.clone(),
                    type_name: type_label(self.schema, self.tables, type_id),
                });
            }
            if !raw.children.is_empty() {
                return Err(CodecError::SchemaViolation {
                    path: format!("/{}", out.element.local),
                    message: "simple-typed element has child elements".into(),
                });
            }
            out.text = raw
                .text
                .as_deref()
                .map(|v| from_wire_value(self.schema, self.tables, type_id, v))
                .transpose()?;
            return Ok(out);
        };
        let def = self.schema.complex(*ci);
        let table = &self.tables.complex[*ci];
        let unknown = |key: &str| CodecError::UnknownWireMember {
            key: key.to_string(),
            type_name: table.type_name.clone(),
        };
        for (k, v) in raw.attributes {
            let i = match table.by_wire.get(&k).map(|&m| table.members[m].slot) {
                Some(Slot::Attribute(i)) => i,
                _ => return Err(unknown(&k)),
            };
            let a = &def.attributes[i];
            out.attributes.push((a.name.clone(), from_wire_value(self.schema, self.tables, &a.type_id, &v)?));
        }
        out.text = match (&def.text, raw.text) {
            (Some(tt), Some(v)) => Some(from_wire_value(self.schema, self.tables, tt, &v)?),
            (_, other) => other,
        };
        for c in raw.children {
            match self.tables.reverse_namespaces.get(&c.element.namespace) {
                Some(ns) => {
                    let i = match table.by_wire.get(&c.element.local).map(|&m| table.members[m].slot) {
                        Some(Slot::Element(i)) if def.elements[i].name.namespace == *ns => i,
                        _ => return Err(unknown(&c.element.local)),
                    };
                    let e = &def.elements[i];
                    out.children.push(self.element(c, e.name.clone(), &e.type_id)?);
                }
                None if def.any.is_some() => out.children.push(c),
                None => return Err(unknown(&c.element.to_string())),
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn whitespace_minifier_drops_indentation() {
        assert_eq!(to_min_xml_whitespace(b"<a>\n  <b/>\n</a>").unwrap(), b"<a><b/></a>");
    }

    #[test]
    fn whitespace_minifier_collapses_empty_elements() {
        assert_eq!(to_min_xml_whitespace(b"<x><y></y></x>").unwrap(), b"<x><y/></x>");
        assert_eq!(
            to_min_xml_whitespace(b"<?xml version=\"1.0\"?>\n<!-- c --><x a=\"1\"><?pi x?><y> t </y></x>").unwrap(),
            b"<?xml version=\"1.0\"?><x a=\"1\"><y> t </y></x>"
        );
    }

    #[test]
    fn whitespace_minified_heartbeat_reparses_equal() {
        let schema = crate::corpus::idmef_schema().unwrap();
        let original = crate::corpus::heartbeat().xml;
        let min = to_min_xml_whitespace(original).unwrap();
        assert!(min.len() < original.len());
        assert_eq!(
            super::super::parse_instance(&min, &schema).unwrap(),
            super::super::parse_instance(original, &schema).unwrap()
        );
    }

    #[test]
    fn canonical_rendering_layout() {
        let mut root = InstanceTree::new("urn:t", "a");
        root.attributes.push(("k".into(), "v&\"".into()));
        let mut b = InstanceTree::new("urn:t", "b");
        b.text = Some("x < y".into());
        root.children.push(b);
        root.children.push(InstanceTree::new("urn:f", "c"));
        let s = String::from_utf8(to_xml(&root)).unwrap();
        assert_eq!(
            s,
            "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<a k=\"v&amp;&quot;\" xmlns=\"urn:t\">\n  <b>x &lt; y</b>\n  <c xmlns=\"urn:f\"/>\n</a>\n"
        );
    }

    #[test]
    fn canonical_rendering_reparses_equal() {
        let schema = crate::corpus::idmef_schema().unwrap();
        for m in crate::corpus::MESSAGES.iter() {
            let tree = super::super::parse_instance(m.xml, &schema).unwrap();
            let again = super::super::parse_instance(&to_xml(&tree), &schema).unwrap();
            assert_eq!(again, tree, "{}", m.title);
        }
    }
}
