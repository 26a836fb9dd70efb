use super::model::*;
use crate::xml::escape_attribute;

/// Serializes a schema document. `pretty` selects 2-space indentation;
/// otherwise no insignificant whitespace is written.
pub fn write_schema(doc: &SchemaDocument, pretty: bool) -> Vec<u8> {
    let mut prefixes: Vec<(String, String)> = doc.prefixes.clone();
    let mut needed = Vec::new();
    doc.walk(&mut |c| {
        if let Some(t) = &c.type_ref {
            if !t.is_builtin() && !t.namespace.is_empty() {
                needed.push(t.namespace.clone());
            }
        }
    });
    for ns in needed {
        if !prefixes.iter().any(|(p, u)| *u == ns && !p.is_empty()) {
            let p = format!("ns{}", prefixes.len());
            prefixes.push((p, ns));
        }
    }

    let mut w = Writer {
        out: String::new(),
        pretty,
        prefixes: &prefixes,
    };
    w.out.push_str(r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    w.newline();
    w.out.push_str(r#"<xsd:schema xmlns:xsd="http://www.w3.org/2001/XMLSchema""#);
    for (p, u) in &prefixes {
        if p.is_empty() {
            w.attr("xmlns", u);
        } else {
            w.attr(&format!("xmlns:{p}"), u);
        }
    }
    if !doc.target_namespace.is_empty() {
        w.attr("targetNamespace", &doc.target_namespace);
        w.attr("elementFormDefault", "qualified");
    }
    if doc.references.is_empty() && doc.components.is_empty() {
        w.out.push_str("/>");
        w.newline();
        return w.out.into_bytes();
    }
    w.out.push('>');
    for r in &doc.references {
        w.newline();
        w.indent(1);
        match r.kind {
            ReferenceKind::Import => {
                w.out.push_str("<xsd:import");
                w.attr("namespace", r.namespace.as_deref().unwrap_or(""));
            }
            ReferenceKind::Include => w.out.push_str("<xsd:include"),
        }
        w.attr("schemaLocation", &r.schema_location);
        w.out.push_str("/>");
    }
    for c in &doc.components {
        w.component(c, 1);
    }
    w.newline();
    w.out.push_str("</xsd:schema>");
    w.newline();
    w.out.into_bytes()
}

struct Writer<'a> {
    out: String,
    pretty: bool,
    prefixes: &'a [(String, String)],
}

impl Writer<'_> {
    fn newline(&mut self) {
        if self.pretty {
            self.out.push('\n');
        }
    }

    fn indent(&mut self, depth: usize) {
        if self.pretty {
            for _ in 0..depth {
                self.out.push_str("  ");
            }
        }
    }

    fn attr(&mut self, name: &str, value: &str) {
        self.out.push(' ');
        self.out.push_str(name);
        self.out.push_str("=\"");
        escape_attribute(value, &mut self.out);
        self.out.push('"');
    }

    fn qname(&self, q: &QualifiedName) -> String {
        if q.is_builtin() {
            return format!("xsd:{}", q.local);
        }
        match self
            .prefixes
            .iter()
            .find(|(p, u)| *u == q.namespace && !p.is_empty())
        {
            Some((p, _)) => format!("{p}:{}", q.local),
            None => q.local.clone(),
        }
    }

    fn occurs(&mut self, o: Occurs) {
        if o.min != 1 {
            self.attr("minOccurs", &o.min.to_string());
        }
        match o.max {
            MaxOccurs::Bounded(1) => {}
            MaxOccurs::Bounded(n) => self.attr("maxOccurs", &n.to_string()),
            MaxOccurs::Unbounded => self.attr("maxOccurs", "unbounded"),
        }
    }

    fn component(&mut self, c: &SchemaComponent, depth: usize) {
        self.newline();
        self.indent(depth);
        self.out.push('<');
        self.out.push_str(c.kind.tag());
        match c.kind {
            ComponentKind::Enumeration => self.attr("value", c.name().unwrap_or("")),
            _ => {
                if let Some(n) = c.name() {
                    self.attr("name", n);
                }
            }
        }
        if let Some(t) = &c.type_ref {
            let key = match c.kind {
                ComponentKind::Extension | ComponentKind::Restriction => "base",
                _ => "type",
            };
            let q = self.qname(t);
            self.attr(key, &q);
        }
        match c.kind {
            ComponentKind::Attribute => {
                if c.occurs.min >= 1 {
                    self.attr("use", "required");
                }
            }
            ComponentKind::Element | ComponentKind::Sequence | ComponentKind::Choice | ComponentKind::Any => {
                self.occurs(c.occurs)
            }
            _ => {}
        }
        if let Some(ns) = &c.any_namespace {
            if ns != "##any" {
                self.attr("namespace", ns);
            }
        }
        if let Some(pc) = &c.process_contents {
            if pc != "strict" {
                self.attr("processContents", pc);
            }
        }
        if let Some(f) = &c.fixed {
            self.attr("fixed", f);
        }
        if let Some(d) = &c.default {
            self.attr("default", d);
        }
        if c.children.is_empty() {
            self.out.push_str("/>");
            return;
        }
        self.out.push('>');
        for child in &c.children {
            self.component(child, depth + 1);
        }
        self.newline();
        self.indent(depth);
        self.out.push_str("</");
        self.out.push_str(c.kind.tag());
        self.out.push('>');
    }
}
