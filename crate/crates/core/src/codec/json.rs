//! JSON shapes. The document is `{"<root>": value}`. A simple-typed element
//! is a string; a complex-typed element is an object whose members follow
//! member order, with repeated members always as arrays. Foreign content
//! under a wildcard is `{"#": "{ns}local", "@": [[k, v]], "$": text, "*": [...]}`.

use serde_json::Value;

use super::instance::{validate, InstanceTree};
use super::render::from_wire_value;
use super::{type_label, CodecError, Slot, WireTables};
use crate::schema::{CompiledSchema, QualifiedName, TypeId};

pub(crate) fn encode(schema: &CompiledSchema, tables: &WireTables, tree: &InstanceTree, minified: bool) -> Result<Vec<u8>, CodecError> {
    let gi = schema
        .global_elements
        .iter()
        .position(|e| e.name == tree.element)
        .ok_or_else(|| CodecError::SchemaViolation {
            path: format!("/{}", tree.element.local),
            message: format!("'{}' is not a global element of the schema", tree.element),
        })?;
    let key = if minified { &tables.globals[gi] } else { &tree.element.local };
    let enc = Encoder { schema, tables, minified };
    let mut out = Vec::with_capacity(256);
    out.push(b'{');
    string(&mut out, key);
    out.push(b':');
    let mut path = vec![tree.element.local.as_str()];
    enc.element(tree, &schema.global_elements[gi].type_id, &mut path, &mut out)?;
    out.push(b'}');
    Ok(out)
}

fn string(out: &mut Vec<u8>, s: &str) {
    serde_json::to_writer(out, s).expect("writing to a Vec cannot fail");
}

fn render_path(path: &[&str]) -> String {
    path.iter().map(|p| format!("/{p}")).collect()
}

/// Writes JSON straight into the output; element paths are only rendered
/// for error messages.
struct Encoder<'a> {
    schema: &'a CompiledSchema,
    tables: &'a WireTables,
    minified: bool,
}

impl Encoder<'_> {
    fn scalar(&self, t: &TypeId, v: &str, path: &[&str], out: &mut Vec<u8>) -> Result<(), CodecError> {
        match self.schema.enum_values(t).filter(|_| self.minified) {
            None => string(out, v),
            Some(values) => {
                let i = values.iter().position(|x| x == v).ok_or_else(|| CodecError::SchemaViolation {
                    path: render_path(path),
                    message: format!("'{v}' is not a value of {}", type_label(self.schema, self.tables, t)),
                })?;
                string(out, &i.to_string());
            }
        }
        Ok(())
    }

    fn element<'t>(&self, t: &'t InstanceTree, type_id: &TypeId, path: &mut Vec<&'t str>, out: &mut Vec<u8>) -> Result<(), CodecError> {
        let TypeId::Complex(ci) = type_id else {
            return self.scalar(type_id, t.text.as_deref().unwrap_or(""), path, out);
        };
        let def = self.schema.complex(*ci);
        let table = &self.tables.complex[*ci];
        out.push(b'{');
        let mut first = true;
        let mut member = |out: &mut Vec<u8>, key: &str| {
            if !std::mem::take(&mut first) {
                out.push(b',');
            }
            string(out, key);
            out.push(b':');
        };
        for m in &table.members {
            let key = if self.minified { &m.wire } else { &m.readable };
            match m.slot {
                Slot::Attribute(i) => {
                    let a = &def.attributes[i];
                    if let Some(v) = t.attribute(&a.name) {
                        member(out, key);
                        self.scalar(&a.type_id, v, path, out)?;
                    }
                }
                Slot::Text => {
                    if let (Some(v), Some(tt)) = (&t.text, &def.text) {
                        member(out, key);
                        self.scalar(tt, v, path, out)?;
                    }
                }
                Slot::Element(i) => {
                    let e = &def.elements[i];
                    let mut matching = t.children.iter().filter(|c| c.element == e.name).peekable();
                    if matching.peek().is_none() {
                        continue;
                    }
                    member(out, key);
                    path.push(&matching.peek().expect("peeked").element.local);
                    if e.occurs.is_repeated() {
                        out.push(b'[');
                        for (k, c) in matching.enumerate() {
                            if k > 0 {
                                out.push(b',');
                            }
                            self.element(c, &e.type_id, path, out)?;
                        }
                        out.push(b']');
                    } else {
                        let c = matching.last().expect("peeked");
                        self.element(c, &e.type_id, path, out)?;
                    }
                    path.pop();
                }
                Slot::Any => {
                    let any = def.any.as_ref().expect("any slot");
                    let mut foreign = t
                        .children
                        .iter()
                        .filter(|c| def.element_index(&c.element.namespace, &c.element.local).is_none())
                        .peekable();
                    if foreign.peek().is_none() {
                        continue;
                    }
                    member(out, key);
                    if any.occurs.is_repeated() {
                        out.push(b'[');
                        for (k, c) in foreign.enumerate() {
                            if k > 0 {
                                out.push(b',');
                            }
                            write_foreign(c, out);
                        }
                        out.push(b']');
                    } else {
                        write_foreign(foreign.last().expect("peeked"), out);
                    }
                }
            }
        }
        out.push(b'}');
        Ok(())
    }
}

fn write_foreign(t: &InstanceTree, out: &mut Vec<u8>) {
    out.extend_from_slice(br##"{"#":"##);
    string(out, &t.element.to_string());
    if !t.attributes.is_empty() {
        out.extend_from_slice(br##","@":["##);
        for (i, (k, v)) in t.attributes.iter().enumerate() {
            if i > 0 {
                out.push(b',');
            }
            out.push(b'[');
            string(out, k);
            out.push(b',');
            string(out, v);
            out.push(b']');
        }
        out.push(b']');
    }
    if let Some(text) = &t.text {
        out.extend_from_slice(br##","$":"##);
        string(out, text);
    }
    if !t.children.is_empty() {
        out.extend_from_slice(br##","*":["##);
        for (i, c) in t.children.iter().enumerate() {
            if i > 0 {
                out.push(b',');
            }
            write_foreign(c, out);
        }
        out.push(b']');
    }
    out.push(b'}');
}

pub(crate) fn decode(schema: &CompiledSchema, tables: &WireTables, bytes: &[u8], minified: bool) -> Result<InstanceTree, CodecError> {
    let value: Value = serde_json::from_slice(bytes).map_err(|e| CodecError::JsonSyntax(e.to_string()))?;
    let Value::Object(root) = value else {
        return Err(shape("/", "document must be an object with one member"));
    };
    if root.len() != 1 {
        return Err(shape("/", "document must be an object with one member"));
    }
    let (key, body) = root.into_iter().next().expect("one member");
    let gi = (0..schema.global_elements.len()).find(|&i| {
        if minified {
            tables.globals[i] == key
        } else {
            schema.global_elements[i].name.local == key
        }
    });
    let Some(gi) = gi else {
        return Err(unknown(minified, &key, "(global)"));
    };
    let decl = &schema.global_elements[gi];
    let dec = Decoder { schema, tables, minified };
    let tree = dec.element(decl.name.clone(), &decl.type_id, body, &format!("/{key}"))?;
    validate(tree, schema)
}

fn shape(path: &str, message: &str) -> CodecError {
    CodecError::JsonShape {
        path: path.to_string(),
        message: message.to_string(),
    }
}

fn unknown(minified: bool, key: &str, type_name: &str) -> CodecError {
    let (key, type_name) = (key.to_string(), type_name.to_string());
    if minified {
        CodecError::UnknownWireMember { key, type_name }
    } else {
        CodecError::UnknownMember { key, type_name }
    }
}

struct Decoder<'a> {
    schema: &'a CompiledSchema,
    tables: &'a WireTables,
    minified: bool,
}

impl Decoder<'_> {
    fn scalar(&self, t: &TypeId, v: Value, path: &str) -> Result<String, CodecError> {
        let Value::String(s) = v else {
            return Err(shape(path, "expected a string"));
        };
        if self.minified {
            from_wire_value(self.schema, self.tables, t, &s)
        } else {
            Ok(s)
        }
    }

    fn element(&self, name: QualifiedName, type_id: &TypeId, v: Value, path: &str) -> Result<InstanceTree, CodecError> {
        let mut out = InstanceTree {
            element: name,
            attributes: Vec::new(),
            text: None,
            children: Vec::new(),
        };
        let TypeId::Complex(ci) = type_id else {
            let s = self.scalar(type_id, v, path)?;
            out.text = (!s.is_empty()).then_some(s);
            return Ok(out);
        };
        let Value::Object(obj) = v else {
            return Err(shape(path, "expected an object"));
        };
        let def = self.schema.complex(*ci);
        let table = &self.tables.complex[*ci];
        let index = if self.minified { &table.by_wire } else { &table.by_readable };
        let mut slots = Vec::with_capacity(obj.len());
        for (k, v) in obj {
            let m = *index
                .get(&k)
                .ok_or_else(|| unknown(self.minified, &k, &table.type_name))?;
            slots.push((m, k, v));
        }
        // Members in member order regardless of key order in the input.
        slots.sort_by_key(|(m, _, _)| *m);
        for (m, k, v) in slots {
            let p = format!("{path}/{k}");
            match table.members[m].slot {
                Slot::Attribute(i) => {
                    let a = &def.attributes[i];
                    let s = self.scalar(&a.type_id, v, &p)?;
                    out.attributes.push((a.name.clone(), s));
                }
                Slot::Text => {
                    let s = self.scalar(def.text.as_ref().expect("text slot"), v, &p)?;
                    out.text = (!s.is_empty()).then_some(s);
                }
                Slot::Element(i) => {
                    let e = &def.elements[i];
                    for item in items(v, e.occurs.is_repeated(), &p)? {
                        out.children.push(self.element(e.name.clone(), &e.type_id, item, &p)?);
                    }
                }
                Slot::Any => {
                    let any = def.any.as_ref().expect("any slot");
                    for item in items(v, any.occurs.is_repeated(), &p)? {
                        out.children.push(foreign_from_json(item, &p)?);
                    }
                }
            }
        }
        Ok(out)
    }
}

fn items(v: Value, repeated: bool, path: &str) -> Result<Vec<Value>, CodecError> {
    match (repeated, v) {
        (true, Value::Array(a)) => Ok(a),
        (true, _) => Err(shape(path, "repeated member must be an array")),
        (false, Value::Array(_)) => Err(shape(path, "single member must not be an array")),
        (false, v) => Ok(vec![v]),
    }
}

fn foreign_from_json(v: Value, path: &str) -> Result<InstanceTree, CodecError> {
    let Value::Object(obj) = v else {
        return Err(shape(path, "foreign element must be an object"));
    };
    let mut name = None;
    let mut attributes = Vec::new();
    let mut text = None;
    let mut children = Vec::new();
    for (k, v) in obj {
        match (k.as_str(), v) {
            ("#", Value::String(s)) => name = Some(parse_clark(&s).ok_or_else(|| shape(path, "bad foreign element name"))?),
            ("@", Value::Array(pairs)) => {
                for pair in pairs {
                    match pair {
                        Value::Array(kv) if kv.len() == 2 => match (&kv[0], &kv[1]) {
                            (Value::String(k), Value::String(v)) => attributes.push((k.clone(), v.clone())),
                            _ => return Err(shape(path, "foreign attribute must be a pair of strings")),
                        },
                        _ => return Err(shape(path, "foreign attribute must be a pair of strings")),
                    }
                }
            }
            ("$", Value::String(s)) => text = (!s.is_empty()).then_some(s),
            ("*", Value::Array(kids)) => {
                for k in kids {
                    children.push(foreign_from_json(k, path)?);
                }
            }
            (k, _) => return Err(shape(path, &format!("unexpected foreign member '{k}'"))),
        }
    }
    let element = name.ok_or_else(|| shape(path, "foreign element without a name"))?;
    if text.is_some() && !children.is_empty() {
        return Err(CodecError::MixedContent { path: path.to_string() });
    }
    Ok(InstanceTree {
        element,
        attributes,
        text,
        children,
    })
}

/// `{ns}local` or a bare local name.
fn parse_clark(s: &str) -> Option<QualifiedName> {
    let (namespace, local) = match s.strip_prefix('{') {
        Some(rest) => rest.split_once('}')?,
        None => ("", s),
    };
    if local.is_empty() {
        return None;
    }
    Some(QualifiedName {
        namespace: namespace.to_string(),
        local: local.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use serde_json::json;

    use crate::codec::tests::idmef_codec;
    use crate::codec::CodecError;
    use crate::corpus;

    #[test]
    fn heartbeat_json_has_the_readable_shape() {
        let codec = idmef_codec();
        let tree = codec.parse(corpus::heartbeat().xml).unwrap();
        let v: serde_json::Value = serde_json::from_slice(&codec.to_json(&tree).unwrap()).unwrap();
        let hb = &v["IDMEF-Message"]["Heartbeat"][0];
        assert!(hb["CreateTime"]["ntpstamp"].is_string());
        assert!(hb["CreateTime"]["value"].is_string());
        assert_eq!(hb["AdditionalData"].as_array().unwrap().len(), 2);
        assert_eq!(hb["Analyzer"]["Node"]["location"], json!("Headquarters DMZ Network"));
    }

    #[test]
    fn json_has_no_insignificant_whitespace() {
        let codec = idmef_codec();
        let tree = codec.parse(corpus::heartbeat().xml).unwrap();
        let s = String::from_utf8(codec.to_min_json(&tree).unwrap()).unwrap();
        assert!(!s.contains('\n') && !s.contains("\": ") && !s.contains(", \""));
    }

    #[test]
    fn unknown_keys_are_rejected() {
        let codec = idmef_codec();
        let tree = codec.parse(corpus::heartbeat().xml).unwrap();
        let s = String::from_utf8(codec.to_json(&tree).unwrap()).unwrap();
        let bad = s.replace("\"ntpstamp\"", "\"ntpStamp\"");
        match codec.from_json(bad.as_bytes()) {
            Err(CodecError::UnknownMember { key, type_name }) => {
                assert_eq!(key, "ntpStamp");
                assert_eq!(type_name, "Time");
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(codec.from_json(b"{\"IDMEF-Message\":"), Err(CodecError::JsonSyntax(_))));
        assert!(matches!(codec.from_min_json(b"{\"zz\":{}}"), Err(CodecError::UnknownWireMember { .. })));
    }

    #[test]
    fn enum_values_are_digit_strings_and_range_checked() {
        let codec = idmef_codec();
        let tree = codec.parse(corpus::message("03-tear-drop").unwrap().xml).unwrap();
        let s = String::from_utf8(codec.to_json(&tree).unwrap()).unwrap();
        assert!(s.contains("\"origin\":\"bugtraqid\""), "{s}");
        let min = String::from_utf8(codec.to_min_json(&tree).unwrap()).unwrap();
        assert!(!min.contains("bugtraqid"));
        let (wire, value) = origin_value(&codec, &min);
        let reference = codec.manifest().type_by_name("Reference").unwrap();
        let origin_type = reference.members.iter().find(|m| m.readable_name == "origin").unwrap();
        let values = codec.manifest().type_by_name(origin_type.type_ref.as_deref().unwrap()).unwrap();
        let bugtraq = values.enum_values.as_ref().unwrap().iter().find(|v| v.readable == "bugtraqid").unwrap();
        assert_eq!(value, bugtraq.wire, "{wire}");
        let mutated = min.replacen(&format!("\"{wire}\":\"{value}\""), &format!("\"{wire}\":\"99\""), 1);
        assert!(matches!(codec.from_min_json(mutated.as_bytes()), Err(CodecError::EnumOutOfRange { .. })));
    }

    /// Wire name and wire value of the first Reference origin in `min`.
    fn origin_value(codec: &crate::codec::Codec, min: &str) -> (String, String) {
        let m = codec.manifest();
        let wire = |t: &str, n: &str| {
            let t = m.type_by_name(t).unwrap();
            t.members.iter().find(|x| x.readable_name == n).unwrap().wire_name.clone()
        };
        let root = &m.globals.iter().find(|g| g.readable_name == "IDMEF-Message").unwrap().wire_name;
        let v: serde_json::Value = serde_json::from_str(min).unwrap();
        let origin = wire("Reference", "origin");
        let value = &v[root][wire("IDMEF-Message", "Alert")][0][wire("Alert", "Classification")]
            [wire("Classification", "Reference")][0][&origin];
        (origin, value.as_str().unwrap().to_string())
    }

    #[test]
    fn repeated_member_must_be_an_array() {
        let codec = idmef_codec();
        let tree = codec.parse(corpus::heartbeat().xml).unwrap();
        let mut v: serde_json::Value = serde_json::from_slice(&codec.to_json(&tree).unwrap()).unwrap();
        let hb = v["IDMEF-Message"]["Heartbeat"][0].clone();
        v["IDMEF-Message"]["Heartbeat"] = hb;
        assert!(matches!(
            codec.from_json(&serde_json::to_vec(&v).unwrap()),
            Err(CodecError::JsonShape { .. })
        ));
    }
}
