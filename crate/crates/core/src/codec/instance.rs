use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::CodecError;
use crate::schema::{CompiledSchema, ComplexTypeDef, ElementDecl, MaxOccurs, Particle, QualifiedName, TypeId};
use crate::xml::{self, NamespaceScope, XmlElement, XmlNode};

/// One element of a schema-valid document. Attributes are kept in schema
/// declaration order and children in content-model member order, so every
/// encoding decodes to the same tree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InstanceTree {
    pub element: QualifiedName,
    pub attributes: Vec<(String, String)>,
    /// Character content; empty content is `None`.
    pub text: Option<String>,
    pub children: Vec<InstanceTree>,
}

impl InstanceTree {
    pub fn new(namespace: &str, local: &str) -> Self {
        Self {
            element: QualifiedName {
                namespace: namespace.to_string(),
                local: local.to_string(),
            },
            attributes: Vec::new(),
            text: None,
            children: Vec::new(),
        }
    }

    pub fn attribute(&self, name: &str) -> Option<&str> {
        self.attributes
            .iter()
            .find(|(k, _)| k == name)
            .map(|(_, v)| v.as_str())
    }

    pub fn child(&self, local: &str) -> Option<&InstanceTree> {
        self.children.iter().find(|c| c.element.local == local)
    }

    /// Number of elements in the tree, this one included.
    pub fn node_count(&self) -> usize {
        1 + self.children.iter().map(InstanceTree::node_count).sum::<usize>()
    }
}

/// Parses an XML instance and validates it against `schema`.
pub fn parse_instance(bytes: &[u8], schema: &CompiledSchema) -> Result<InstanceTree, CodecError> {
    let raw = parse_generic(bytes)?;
    validate(raw, schema)
}

/// Parses XML into a tree without consulting a schema. Namespace
/// declarations are consumed; prefixed attributes keep a `{ns}local` name so
/// validation can reject them.
pub(crate) fn parse_generic(bytes: &[u8]) -> Result<InstanceTree, CodecError> {
    let doc = xml::parse_document(bytes)?;
    let mut scope = NamespaceScope::new();
    build(&doc.root, &mut scope, &mut String::new())
}

fn build(e: &XmlElement, scope: &mut NamespaceScope, path: &mut String) -> Result<InstanceTree, CodecError> {
    scope.push(e);
    let (ns, local) = scope.resolve_element(&e.name).ok_or_else(|| CodecError::SchemaViolation {
        path: path.clone(),
        message: format!("undeclared namespace prefix on '{}'", e.name),
    })?;
    let len = path.len();
    path.push('/');
    path.push_str(&local);

    let mut attributes = Vec::new();
    for a in &e.attributes {
        if xml::is_namespace_declaration(&a.name) {
            continue;
        }
        let (ans, alocal) = scope.resolve_attribute(&a.name).ok_or_else(|| CodecError::SchemaViolation {
            path: path.clone(),
            message: format!("undeclared namespace prefix on attribute '{}'", a.name),
        })?;
        let name = if ans.is_empty() { alocal } else { format!("{{{ans}}}{alocal}") };
        attributes.push((name, a.value.clone()));
    }

    let mut children = Vec::new();
    let mut text = String::new();
    for c in &e.children {
        match c {
            XmlNode::Element(k) => children.push(build(k, scope, path)?),
            XmlNode::Text(t) => text.push_str(t),
        }
    }
    let text = if children.is_empty() {
        (!text.is_empty()).then_some(text)
    } else if text.trim().is_empty() {
        None
    } else {
        return Err(CodecError::MixedContent { path: path.clone() });
    };
    path.truncate(len);
    scope.pop();
    Ok(InstanceTree {
        element: QualifiedName { namespace: ns, local },
        attributes,
        text,
        children,
    })
}

/// Checks `tree` against the schema and returns it in canonical order.
pub fn validate(tree: InstanceTree, schema: &CompiledSchema) -> Result<InstanceTree, CodecError> {
    let decl = schema
        .global_element(&tree.element.namespace, &tree.element.local)
        .ok_or_else(|| CodecError::SchemaViolation {
            path: format!("/{}", tree.element.local),
            message: format!("'{}' is not a global element of the schema", tree.element),
        })?;
    let mut path = String::new();
    Validator { schema }.element(tree, decl, &mut path)
}

struct Validator<'a> {
    schema: &'a CompiledSchema,
}

fn violation(path: &str, message: String) -> CodecError {
    CodecError::SchemaViolation {
        path: path.to_string(),
        message,
    }
}

impl Validator<'_> {
    fn element(&self, mut node: InstanceTree, decl: &ElementDecl, path: &mut String) -> Result<InstanceTree, CodecError> {
        let len = path.len();
        path.push('/');
        path.push_str(&node.element.local);
        match &decl.type_id {
            TypeId::Complex(i) => node = self.complex(node, self.schema.complex(*i), path)?,
            simple => {
                if let Some((name, _)) = node.attributes.first() {
                    return Err(violation(path, format!("unexpected attribute '{name}' on a simple-typed element")));
                }
                if !node.children.is_empty() {
                    return Err(violation(path, "simple-typed element has child elements".into()));
                }
                if let Some(t) = &node.text {
                    self.value(simple, t, path)?;
                }
            }
        }
        if let (Some(fixed), Some(text)) = (&decl.fixed, &node.text) {
            if fixed != text {
                return Err(violation(path, format!("value '{text}' differs from fixed value '{fixed}'")));
            }
        }
        path.truncate(len);
        Ok(node)
    }

    fn value(&self, t: &TypeId, v: &str, path: &str) -> Result<(), CodecError> {
        if let Some(values) = self.schema.enum_values(t) {
            if !values.iter().any(|x| x == v) {
                return Err(violation(
                    path,
                    format!("'{v}' is not one of the enumerated values {}", values.join(", ")),
                ));
            }
        }
        Ok(())
    }

    fn complex(&self, mut node: InstanceTree, def: &ComplexTypeDef, path: &mut String) -> Result<InstanceTree, CodecError> {
        // attributes
        let mut keyed = Vec::with_capacity(node.attributes.len());
        for (name, value) in std::mem::take(&mut node.attributes) {
            let i = def.attribute_index(&name).ok_or_else(|| CodecError::SchemaViolation {
                path: path.clone(),
                message: format!(
                    "unexpected attribute '{name}'; expected one of: {}",
                    def.attributes.iter().map(|a| a.name.as_str()).collect::<Vec<_>>().join(", ")
                ),
            })?;
            let a = &def.attributes[i];
            self.value(&a.type_id, &value, &format!("{path}/@{name}"))?;
            if let Some(f) = &a.fixed {
                if *f != value {
                    return Err(violation(path, format!("attribute '{name}' must be '{f}'")));
                }
            }
            keyed.push((i, name, value));
        }
        keyed.sort_by_key(|(i, _, _)| *i);
        for (i, a) in def.attributes.iter().enumerate() {
            if a.required && !keyed.iter().any(|(k, _, _)| *k == i) {
                return Err(violation(path, format!("missing required attribute '{}'", a.name)));
            }
        }
        node.attributes = keyed.into_iter().map(|(_, n, v)| (n, v)).collect();

        // character content
        match &def.text {
            Some(t) => {
                if !node.children.is_empty() {
                    return Err(violation(path, "simple-content element has child elements".into()));
                }
                if let Some(v) = &node.text {
                    self.value(t, v, path)?;
                }
            }
            None => {
                if let Some(t) = &node.text {
                    if !t.trim().is_empty() {
                        return Err(CodecError::MixedContent { path: path.clone() });
                    }
                    node.text = None;
                }
            }
        }

        // children: map to member slots, check ordering, canonicalize
        let any_index = def.any_index();
        let groups = repeat_groups(def);
        let mut keyed = Vec::with_capacity(node.children.len());
        for child in std::mem::take(&mut node.children) {
            let slot = match def.element_index(&child.element.namespace, &child.element.local) {
                Some(i) => i,
                None => match &def.any {
                    Some(any) if any.admits(&child.element.namespace, &def.namespace) => any_index,
                    _ => {
                        return Err(CodecError::SchemaViolation {
                            path: path.clone(),
                            message: format!(
                                "unexpected element '{}'; expected one of: {}",
                                child.element.local,
                                expected_members(def)
                            ),
                        })
                    }
                },
            };
            keyed.push((slot, child));
        }
        for w in keyed.windows(2) {
            let (a, b) = (w[0].0, w[1].0);
            if b < a && (groups[a].is_none() || groups[a] != groups[b]) {
                return Err(violation(
                    path,
                    format!(
                        "element '{}' is out of order after '{}'",
                        w[1].1.element.local, w[0].1.element.local
                    ),
                ));
            }
        }
        keyed.sort_by_key(|(slot, _)| *slot);
        let slots: Vec<usize> = keyed.iter().map(|(s, _)| *s).collect();
        let ok = match &def.content {
            None => slots.is_empty(),
            Some(p) => ends(p, &slots, 0, any_index).contains(&slots.len()),
        };
        if !ok {
            return Err(violation(
                path,
                format!("content does not match the content model; members: {}", expected_members(def)),
            ));
        }
        let mut children = Vec::with_capacity(keyed.len());
        for (slot, child) in keyed {
            children.push(if slot == any_index {
                foreign(child, path)?
            } else {
                self.element(child, &def.elements[slot], path)?
            });
        }
        node.children = children;
        Ok(node)
    }
}

fn expected_members(def: &ComplexTypeDef) -> String {
    let mut names: Vec<&str> = def.elements.iter().map(|e| e.name.local.as_str()).collect();
    if def.any.is_some() {
        names.push("(any foreign element)");
    }
    if names.is_empty() {
        "(none)".into()
    } else {
        names.join(", ")
    }
}

/// Wildcard content is carried verbatim; only the shapes the tree can
/// represent are accepted.
fn foreign(node: InstanceTree, path: &str) -> Result<InstanceTree, CodecError> {
    let here = format!("{path}/{}", node.element.local);
    if let Some((name, _)) = node.attributes.iter().find(|(n, _)| n.starts_with('{')) {
        return Err(violation(&here, format!("namespaced attribute '{name}' in foreign content")));
    }
    let mut node = node;
    let children = std::mem::take(&mut node.children);
    for c in children {
        node.children.push(foreign(c, &here)?);
    }
    Ok(node)
}

/// For each member slot, the id of the repeated choice it sits in, if any.
/// Members of one repeated choice may interleave in the document.
fn repeat_groups(def: &ComplexTypeDef) -> Vec<Option<usize>> {
    let mut out = vec![None; def.elements.len() + 1];
    fn walk(p: &Particle, current: Option<usize>, next: &mut usize, out: &mut [Option<usize>], any: usize) {
        match p {
            Particle::Element(i, _) => out[*i] = current,
            Particle::Any(_) => out[any] = current,
            Particle::Sequence(items, _) => items.iter().for_each(|k| walk(k, current, next, out, any)),
            Particle::Choice(items, o) => {
                let g = if current.is_none() && o.is_repeated() {
                    *next += 1;
                    Some(*next)
                } else {
                    current
                };
                items.iter().for_each(|k| walk(k, g, next, out, any));
            }
        }
    }
    if let Some(p) = &def.content {
        walk(p, None, &mut 0, &mut out, def.elements.len());
    }
    out
}

/// Positions where a match of `p` starting at `start` can end.
fn ends(p: &Particle, seq: &[usize], start: usize, any: usize) -> BTreeSet<usize> {
    let occ = p.occurs();
    let max_reps = match occ.max {
        MaxOccurs::Bounded(n) => n as usize,
        MaxOccurs::Unbounded => seq.len() - start + 1,
    };
    let mut result = BTreeSet::new();
    if occ.min == 0 {
        result.insert(start);
    }
    let mut current = BTreeSet::from([start]);
    for rep in 1..=max_reps {
        let mut next = BTreeSet::new();
        for &s in &current {
            next.extend(once(p, seq, s, any));
        }
        if next.is_empty() {
            break;
        }
        let stalled = next == current;
        if rep >= occ.min as usize || stalled {
            result.extend(next.iter().copied());
        }
        if stalled {
            break;
        }
        current = next;
    }
    result
}

fn once(p: &Particle, seq: &[usize], s: usize, any: usize) -> BTreeSet<usize> {
    match p {
        Particle::Element(i, _) => {
            if seq.get(s) == Some(i) {
                BTreeSet::from([s + 1])
            } else {
                BTreeSet::new()
            }
        }
        Particle::Any(_) => {
            if seq.get(s) == Some(&any) {
                BTreeSet::from([s + 1])
            } else {
                BTreeSet::new()
            }
        }
        Particle::Sequence(items, _) => {
            let mut positions = BTreeSet::from([s]);
            for item in items {
                let mut next = BTreeSet::new();
                for &q in &positions {
                    next.extend(ends(item, seq, q, any));
                }
                positions = next;
                if positions.is_empty() {
                    break;
                }
            }
            positions
        }
        Particle::Choice(items, _) => {
            let mut out = BTreeSet::new();
            for item in items {
                out.extend(ends(item, seq, s, any));
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schema::parse_schema;

    fn schema(body: &str) -> CompiledSchema {
        let xsd = format!(
            r#"<xsd:schema xmlns:xsd="http://www.w3.org/2001/XMLSchema" xmlns:t="urn:t" targetNamespace="urn:t" elementFormDefault="qualified">{body}</xsd:schema>"#
        );
        CompiledSchema::compile(vec![parse_schema(xsd.as_bytes(), "t.xsd").unwrap()]).unwrap()
    }

    #[test]
    fn empty_element() {
        let s = schema(r#"<xsd:element name="a"><xsd:complexType/></xsd:element>"#);
        let t = parse_instance(br#"<a xmlns="urn:t"/>"#, &s).unwrap();
        assert!(t.children.is_empty());
        assert_eq!(t.text, None);
        assert!(parse_instance(br#"<a xmlns="urn:t">x</a>"#, &s).is_err());
        assert!(matches!(parse_instance(br#"<a xmlns="urn:t"><b/></a>"#, &s), Err(CodecError::SchemaViolation { .. })));
    }

    #[test]
    fn heartbeat_parses_with_depth_five() {
        let s = crate::corpus::idmef_schema().unwrap();
        let t = parse_instance(crate::corpus::heartbeat().xml, &s).unwrap();
        assert_eq!(t.element.local, "IDMEF-Message");
        fn depth(t: &InstanceTree) -> usize {
            1 + t.children.iter().map(depth).max().unwrap_or(0)
        }
        assert_eq!(depth(&t), 5);
        let hb = &t.children[0];
        assert_eq!(hb.attribute("messageid"), Some("abc123456789"));
    }

    #[test]
    fn unexpected_attribute_is_named() {
        let s = crate::corpus::idmef_schema().unwrap();
        let xml = String::from_utf8(crate::corpus::heartbeat().xml.to_vec())
            .unwrap()
            .replace(r#"<Heartbeat messageid"#, r#"<Heartbeat bogus="1" messageid"#);
        match parse_instance(xml.as_bytes(), &s) {
            Err(CodecError::SchemaViolation { message, path }) => {
                assert!(message.contains("'bogus'"), "{message}");
                assert_eq!(path, "/IDMEF-Message/Heartbeat");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn repeated_choice_interleaving_is_canonicalized() {
        let s = schema(
            r#"<xsd:element name="r"><xsd:complexType><xsd:choice maxOccurs="unbounded">
                 <xsd:element name="x" type="xsd:string"/><xsd:element name="y" type="xsd:string"/>
               </xsd:choice></xsd:complexType></xsd:element>"#,
        );
        let t = parse_instance(br#"<r xmlns="urn:t"><y>1</y><x>2</x><y>3</y></r>"#, &s).unwrap();
        let order: Vec<_> = t.children.iter().map(|c| c.text.clone().unwrap()).collect();
        assert_eq!(order, ["2", "1", "3"]);
    }

    #[test]
    fn sequence_order_and_cardinality_are_enforced() {
        let s = schema(
            r#"<xsd:element name="r"><xsd:complexType><xsd:sequence>
                 <xsd:element name="x" type="xsd:string"/><xsd:element name="y" type="xsd:string" maxOccurs="2"/>
               </xsd:sequence></xsd:complexType></xsd:element>"#,
        );
        assert!(parse_instance(br#"<r xmlns="urn:t"><x/><y/><y/></r>"#, &s).is_ok());
        assert!(parse_instance(br#"<r xmlns="urn:t"><y/><x/></r>"#, &s).is_err());
        assert!(parse_instance(br#"<r xmlns="urn:t"><y/></r>"#, &s).is_err());
        assert!(parse_instance(br#"<r xmlns="urn:t"><x/><y/><y/><y/></r>"#, &s).is_err());
    }

    #[test]
    fn choice_allows_exactly_one_alternative() {
        let s = schema(
            r#"<xsd:element name="r"><xsd:complexType><xsd:choice>
                 <xsd:element name="x" type="xsd:string"/><xsd:element name="y" type="xsd:string"/>
               </xsd:choice></xsd:complexType></xsd:element>"#,
        );
        assert!(parse_instance(br#"<r xmlns="urn:t"><y/></r>"#, &s).is_ok());
        assert!(parse_instance(br#"<r xmlns="urn:t"><x/><y/></r>"#, &s).is_err());
        assert!(parse_instance(br#"<r xmlns="urn:t"></r>"#, &s).is_err());
    }

    #[test]
    fn enumerations_fixed_values_and_required_attributes() {
        let s = schema(
            r#"<xsd:element name="r"><xsd:complexType>
                 <xsd:attribute name="v" use="required" fixed="1.0"/>
                 <xsd:attribute name="c"><xsd:simpleType><xsd:restriction base="xsd:string">
                   <xsd:enumeration value="yes"/><xsd:enumeration value="no"/></xsd:restriction></xsd:simpleType></xsd:attribute>
               </xsd:complexType></xsd:element>"#,
        );
        let t = parse_instance(br#"<r xmlns="urn:t" c="no" v="1.0"/>"#, &s).unwrap();
        assert_eq!(t.attributes, [("v".to_string(), "1.0".to_string()), ("c".to_string(), "no".to_string())]);
        assert!(parse_instance(br#"<r xmlns="urn:t" c="maybe" v="1.0"/>"#, &s).is_err());
        assert!(parse_instance(br#"<r xmlns="urn:t" v="2.0"/>"#, &s).is_err());
        assert!(parse_instance(br#"<r xmlns="urn:t"/>"#, &s).is_err());
    }

    #[test]
    fn mixed_content_is_rejected() {
        let s = schema(
            r#"<xsd:element name="r"><xsd:complexType><xsd:sequence><xsd:element name="x" type="xsd:string"/></xsd:sequence></xsd:complexType></xsd:element>"#,
        );
        assert!(matches!(
            parse_instance(br#"<r xmlns="urn:t">hello<x/></r>"#, &s),
            Err(CodecError::MixedContent { .. })
        ));
    }

    #[test]
    fn wildcard_content_passes_through() {
        let s = schema(
            r###"<xsd:element name="r"><xsd:complexType><xsd:sequence>
                 <xsd:any namespace="##other" processContents="skip" minOccurs="0" maxOccurs="unbounded"/>
               </xsd:sequence></xsd:complexType></xsd:element>"###,
        );
        let t = parse_instance(br#"<r xmlns="urn:t"><f:doc xmlns:f="urn:f" k="v"><f:p>text</f:p></f:doc></r>"#, &s).unwrap();
        assert_eq!(t.children[0].element.namespace, "urn:f");
        assert_eq!(t.children[0].children[0].text.as_deref(), Some("text"));
        assert!(parse_instance(br#"<r xmlns="urn:t"><doc/></r>"#, &s).is_err());
    }
}
