//! Minimal XML document model shared by the schema reader and the instance
//! codec.
//!
//! quick-xml does the tokenizing; this module assembles a small tree with
//! source line numbers and resolves namespace prefixes on demand.

use quick_xml::events::{BytesStart, Event};
use quick_xml::Reader;
use thiserror::Error;

pub const XMLNS_NS: &str = "http://www.w3.org/2000/xmlns/";
pub const XML_NS: &str = "http://www.w3.org/XML/1998/namespace";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("malformed XML at line {line}: {message}")]
pub struct MalformedXml {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XmlAttribute {
    pub name: String,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum XmlNode {
    Element(XmlElement),
    Text(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XmlElement {
    /// Name as written, including any prefix.
    pub name: String,
    pub attributes: Vec<XmlAttribute>,
    pub children: Vec<XmlNode>,
    pub line: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XmlDocument {
    /// Raw content of the `<?xml ...?>` declaration, if present.
    pub declaration: Option<String>,
    pub root: XmlElement,
}

impl XmlElement {
    pub fn attribute(&self, name: &str) -> Option<&str> {
        self.attributes
            .iter()
            .find(|a| a.name == name)
            .map(|a| a.value.as_str())
    }

    pub fn child_elements(&self) -> impl Iterator<Item = &XmlElement> {
        self.children.iter().filter_map(|c| match c {
            XmlNode::Element(e) => Some(e),
            XmlNode::Text(_) => None,
        })
    }

    /// Concatenated character data directly under this element.
    pub fn text(&self) -> String {
        let mut out = String::new();
        for c in &self.children {
            if let XmlNode::Text(t) = c {
                out.push_str(t);
            }
        }
        out
    }

    pub fn has_element_children(&self) -> bool {
        self.children
            .iter()
            .any(|c| matches!(c, XmlNode::Element(_)))
    }

    /// Namespace declarations made on this element, as (prefix, uri); the
    /// default namespace uses an empty prefix.
    pub fn namespace_declarations(&self) -> impl Iterator<Item = (&str, &str)> {
        self.attributes.iter().filter_map(|a| {
            if a.name == "xmlns" {
                Some(("", a.value.as_str()))
            } else {
                a.name
                    .strip_prefix("xmlns:")
                    .map(|p| (p, a.value.as_str()))
            }
        })
    }
}

pub fn is_namespace_declaration(name: &str) -> bool {
    name == "xmlns" || name.starts_with("xmlns:")
}

pub fn split_qname(name: &str) -> (Option<&str>, &str) {
    match name.split_once(':') {
        Some((p, l)) => (Some(p), l),
        None => (None, name),
    }
}

/// Stack of in-scope namespace bindings.
#[derive(Debug, Clone, Default)]
pub struct NamespaceScope {
    frames: Vec<Vec<(String, String)>>,
}

impl NamespaceScope {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, element: &XmlElement) {
        let frame = element
            .namespace_declarations()
            .map(|(p, u)| (p.to_string(), u.to_string()))
            .collect();
        self.frames.push(frame);
    }

    pub fn pop(&mut self) {
        self.frames.pop();
    }

    pub fn lookup(&self, prefix: &str) -> Option<&str> {
        if prefix == "xml" {
            return Some(XML_NS);
        }
        for frame in self.frames.iter().rev() {
            if let Some((_, uri)) = frame.iter().find(|(p, _)| p == prefix) {
                return Some(uri.as_str());
            }
        }
        if prefix.is_empty() {
            Some("")
        } else {
            None
        }
    }

    /// Resolves an element name (unprefixed names take the default namespace).
    pub fn resolve_element(&self, qname: &str) -> Option<(String, String)> {
        let (prefix, local) = split_qname(qname);
        let ns = self.lookup(prefix.unwrap_or(""))?;
        Some((ns.to_string(), local.to_string()))
    }

    /// Resolves an attribute name (unprefixed names have no namespace).
    pub fn resolve_attribute(&self, qname: &str) -> Option<(String, String)> {
        match split_qname(qname) {
            (None, local) => Some((String::new(), local.to_string())),
            (Some(p), local) => Some((self.lookup(p)?.to_string(), local.to_string())),
        }
    }
}

fn line_at(input: &[u8], offset: usize, cache: &mut (usize, usize)) -> usize {
    let offset = offset.min(input.len());
    let (mut pos, mut line) = *cache;
    if offset < pos {
        pos = 0;
        line = 1;
    }
    line += input[pos..offset].iter().filter(|&&b| b == b'\n').count();
    *cache = (offset, line);
    line
}

fn start_element(
    e: &BytesStart<'_>,
    line: usize,
    reader: &Reader<&[u8]>,
) -> Result<XmlElement, MalformedXml> {
    let name = std::str::from_utf8(e.name().as_ref())
        .map_err(|_| MalformedXml {
            line,
            message: "element name is not UTF-8".into(),
        })?
        .to_string();
    let mut attributes = Vec::new();
    for attr in e.attributes() {
        let attr = attr.map_err(|err| MalformedXml {
            line,
            message: err.to_string(),
        })?;
        let key = std::str::from_utf8(attr.key.as_ref())
            .map_err(|_| MalformedXml {
                line,
                message: "attribute name is not UTF-8".into(),
            })?
            .to_string();
        if attributes.iter().any(|a: &XmlAttribute| a.name == key) {
            return Err(MalformedXml {
                line,
                message: format!("duplicate attribute '{key}'"),
            });
        }
        let value = attr
            .decode_and_unescape_value(reader.decoder())
            .map_err(|err| MalformedXml {
                line,
                message: err.to_string(),
            })?
            .into_owned();
        attributes.push(XmlAttribute { name: key, value });
    }
    Ok(XmlElement {
        name,
        attributes,
        children: Vec::new(),
        line,
    })
}

/// Parses a complete document. Comments and processing instructions are
/// discarded; CDATA sections become text.
pub fn parse_document(input: &[u8]) -> Result<XmlDocument, MalformedXml> {
    if std::str::from_utf8(input).is_err() {
        return Err(MalformedXml {
            line: 1,
            message: "input is not valid UTF-8".into(),
        });
    }
    let mut reader = Reader::from_reader(input);
    reader.config_mut().trim_text(false);
    reader.config_mut().check_end_names = true;

    let mut line_cache = (0usize, 1usize);
    let mut declaration = None;
    let mut stack: Vec<XmlElement> = Vec::new();
    let mut root: Option<XmlElement> = None;

    loop {
        let offset = reader.buffer_position() as usize;
        let line = line_at(input, offset, &mut line_cache);
        let event = reader.read_event().map_err(|err| {
            let at = reader.error_position() as usize;
            MalformedXml {
                line: line_at(input, at, &mut (0, 1)),
                message: err.to_string(),
            }
        })?;
        match event {
            Event::Decl(d) => {
                if stack.is_empty() && root.is_none() {
                    declaration = Some(String::from_utf8_lossy(&d).trim().to_string());
                }
            }
            Event::Start(e) => {
                if root.is_some() && stack.is_empty() {
                    return Err(MalformedXml {
                        line,
                        message: "more than one root element".into(),
                    });
                }
                let el = start_element(&e, line, &reader)?;
                stack.push(el);
            }
            Event::Empty(e) => {
                let el = start_element(&e, line, &reader)?;
                match stack.last_mut() {
                    Some(parent) => parent.children.push(XmlNode::Element(el)),
                    None => {
                        if root.is_some() {
                            return Err(MalformedXml {
                                line,
                                message: "more than one root element".into(),
                            });
                        }
                        root = Some(el);
                    }
                }
            }
            Event::End(_) => {
                let el = stack.pop().ok_or_else(|| MalformedXml {
                    line,
                    message: "unexpected end tag".into(),
                })?;
                match stack.last_mut() {
                    Some(parent) => parent.children.push(XmlNode::Element(el)),
                    None => root = Some(el),
                }
            }
            Event::Text(t) => {
                let text = t
                    .unescape()
                    .map_err(|err| MalformedXml {
                        line,
                        message: err.to_string(),
                    })?
                    .into_owned();
                push_text(&mut stack, text, line)?;
            }
            Event::CData(c) => {
                let text = String::from_utf8_lossy(&c.into_inner()).into_owned();
                push_text(&mut stack, text, line)?;
            }
            Event::Comment(_) | Event::PI(_) | Event::DocType(_) => {}
            Event::Eof => break,
        }
    }
    if let Some(open) = stack.last() {
        return Err(MalformedXml {
            line: line_at(input, input.len(), &mut (0, 1)),
            message: format!("element '{}' is not closed", open.name),
        });
    }
    let root = root.ok_or(MalformedXml {
        line: 1,
        message: "document has no root element".into(),
    })?;
    Ok(XmlDocument { declaration, root })
}

fn push_text(stack: &mut [XmlElement], text: String, line: usize) -> Result<(), MalformedXml> {
    match stack.last_mut() {
        Some(parent) => {
            if let Some(XmlNode::Text(prev)) = parent.children.last_mut() {
                prev.push_str(&text);
            } else {
                parent.children.push(XmlNode::Text(text));
            }
            Ok(())
        }
        None if text.trim().is_empty() => Ok(()),
        None => Err(MalformedXml {
            line,
            message: "character data outside the root element".into(),
        }),
    }
}

pub fn escape_text(s: &str, out: &mut String) {
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '\r' => out.push_str("&#13;"),
            _ => out.push(c),
        }
    }
}

pub fn escape_attribute(s: &str, out: &mut String) {
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\n' => out.push_str("&#10;"),
            '\r' => out.push_str("&#13;"),
            '\t' => out.push_str("&#9;"),
            _ => out.push(c),
        }
    }
}
