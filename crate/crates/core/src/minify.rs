//! Two-pass schema minification.
//!
//! Pass one resolves the reference graph into a dependency-first stack. Pass
//! two pops documents off it, rewrites namespaces and schema locations, and
//! renames every named component: letters for element, attribute and type
//! names, decimal digits for enumeration values. The dictionary records each
//! renaming against the component's original path.

use std::collections::{BTreeMap, HashMap, HashSet};

use thiserror::Error;

use crate::schema::{
    assign_paths, location_stem, resolve_references, write_schema, CompiledSchema, ComponentKind,
    ComponentPath, Loader, QualifiedName, SchemaComponent, SchemaDocument, SchemaError, TypeId,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MinifyError {
    #[error(transparent)]
    Schema(#[from] SchemaError),
    #[error("short name '{short}' assigned twice in scope {scope}")]
    InternalCollision { short: String, scope: String },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("dictionary line {line}: {message}")]
pub struct DicSyntaxError {
    pub line: usize,
    pub message: String,
}

/// Bijective base-26 over `a..z`: 0 → a, 25 → z, 26 → aa, 27 → ab.
pub fn short_name(index: usize) -> String {
    let mut n = index + 1;
    let mut out = Vec::new();
    while n > 0 {
        n -= 1;
        out.push(b'a' + (n % 26) as u8);
        n /= 26;
    }
    out.reverse();
    String::from_utf8(out).expect("ascii")
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DictionaryEntry {
    pub short_name: String,
    pub path: ComponentPath,
}

/// Ordered mapping of short names to original component paths.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NameDictionary {
    pub entries: Vec<DictionaryEntry>,
}

impl NameDictionary {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Original path string → short name.
    pub fn by_path(&self) -> HashMap<String, &str> {
        self.entries
            .iter()
            .map(|e| (e.path.to_string(), e.short_name.as_str()))
            .collect()
    }
}

pub fn write_dictionary(dict: &NameDictionary) -> Vec<u8> {
    let mut out = String::new();
    for e in &dict.entries {
        out.push_str(&e.short_name);
        out.push(',');
        out.push_str(&e.path.to_string());
        out.push('\n');
    }
    out.into_bytes()
}

pub fn parse_dictionary(bytes: &[u8]) -> Result<NameDictionary, DicSyntaxError> {
    let text = std::str::from_utf8(bytes).map_err(|e| DicSyntaxError {
        line: 1 + bytes[..e.valid_up_to()].iter().filter(|b| **b == b'\n').count(),
        message: "not UTF-8".into(),
    })?;
    let mut entries = Vec::new();
    let body = text.strip_suffix('\n').unwrap_or(text);
    if body.is_empty() {
        return Ok(NameDictionary::default());
    }
    for (i, line) in body.split('\n').enumerate() {
        let err = |message: String| DicSyntaxError { line: i + 1, message };
        let (short, path) = line
            .split_once(',')
            .ok_or_else(|| err("expected 'short,path'".into()))?;
        let letters = !short.is_empty() && short.bytes().all(|b| b.is_ascii_lowercase());
        let digits = !short.is_empty() && short.bytes().all(|b| b.is_ascii_digit());
        if !letters && !digits {
            return Err(err(format!("bad short name '{short}'")));
        }
        let path = ComponentPath::parse(path).map_err(err)?;
        entries.push(DictionaryEntry {
            short_name: short.to_string(),
            path,
        });
    }
    Ok(NameDictionary { entries })
}

#[derive(Debug, Clone)]
pub struct MinificationResult {
    /// Minified documents, in the same dependency-first order as the input.
    pub minified_schemas: Vec<SchemaDocument>,
    pub dictionary: NameDictionary,
    /// Original target namespace → minified target namespace.
    pub namespace_map: BTreeMap<String, String>,
}

impl MinificationResult {
    pub fn root(&self) -> &SchemaDocument {
        self.minified_schemas.last().expect("non-empty schema set")
    }
}

/// Minified namespace: a `-min` suffix; the absent namespace stays absent.
pub fn minified_namespace(ns: &str) -> String {
    if ns.is_empty() {
        String::new()
    } else {
        format!("{ns}-min")
    }
}

/// `dir/name.xsd` → `dir/name.min.xsd`.
pub fn minified_location(location: &str) -> String {
    let stem = location_stem(location);
    let file_start = location.rfind(['/', '\\']).map(|i| i + 1).unwrap_or(0);
    format!("{}{stem}.min.xsd", &location[..file_start])
}

/// Name of the dictionary file written next to the minified root schema.
pub fn dictionary_file_name(root_location: &str) -> String {
    format!("{}.dic", location_stem(root_location))
}

pub fn minify(root: SchemaDocument, loader: &Loader<'_>) -> Result<MinificationResult, MinifyError> {
    minify_set(resolve_references(root, loader)?)
}

/// One slot of a name scope, in assignment order.
#[derive(Debug, Clone, Copy)]
pub(crate) enum ScopeSlot<'a> {
    Attribute(&'a SchemaComponent),
    Text(&'a SchemaComponent),
    Element(&'a SchemaComponent),
    Any(&'a SchemaComponent),
}

impl<'a> ScopeSlot<'a> {
    pub(crate) fn component(&self) -> &'a SchemaComponent {
        match self {
            ScopeSlot::Attribute(c) | ScopeSlot::Text(c) | ScopeSlot::Element(c) | ScopeSlot::Any(c) => c,
        }
    }
}

/// Members of a complex type's name scope: attributes, then the text slot,
/// then child elements through nested groups, then the wildcard.
pub(crate) fn scope_slots(complex_type: &SchemaComponent) -> Vec<ScopeSlot<'_>> {
    let mut attributes = Vec::new();
    let mut text = Vec::new();
    let mut elements = Vec::new();
    let mut any = Vec::new();
    for c in &complex_type.children {
        match c.kind {
            ComponentKind::Attribute => attributes.push(ScopeSlot::Attribute(c)),
            ComponentKind::SimpleContent => {
                text.push(ScopeSlot::Text(c));
                for ext in &c.children {
                    for a in &ext.children {
                        attributes.push(ScopeSlot::Attribute(a));
                    }
                }
            }
            ComponentKind::Sequence | ComponentKind::Choice => collect_from(c, &mut elements, &mut any),
            _ => {}
        }
    }
    attributes.into_iter().chain(text).chain(elements).chain(any).collect()
}

fn collect_from<'a>(group: &'a SchemaComponent, elements: &mut Vec<ScopeSlot<'a>>, any: &mut Vec<ScopeSlot<'a>>) {
    for k in &group.children {
        match k.kind {
            ComponentKind::Element => elements.push(ScopeSlot::Element(k)),
            ComponentKind::Any => any.push(ScopeSlot::Any(k)),
            ComponentKind::Sequence | ComponentKind::Choice => collect_from(k, elements, any),
            _ => {}
        }
    }
}

/// Dictionary entries of one document, in file order: global scope, type
/// names, then inner scopes in document pre-order.
struct Assigner {
    global_counters: HashMap<String, usize>,
    type_counters: HashMap<String, usize>,
    entries: Vec<DictionaryEntry>,
}

impl Assigner {
    fn push(&mut self, short: String, path: &ComponentPath) {
        self.entries.push(DictionaryEntry {
            short_name: short,
            path: path.clone(),
        });
    }

    fn document(&mut self, doc: &SchemaDocument) -> Result<(), MinifyError> {
        let ns = doc.target_namespace.clone();
        let globals = doc
            .components
            .iter()
            .filter(|c| c.kind == ComponentKind::Attribute)
            .chain(doc.components.iter().filter(|c| c.kind == ComponentKind::Element));
        for c in globals {
            let n = self.global_counters.entry(ns.clone()).or_default();
            let short = short_name(*n);
            *n += 1;
            self.push(short, &c.path);
        }
        for c in doc
            .components
            .iter()
            .filter(|c| matches!(c.kind, ComponentKind::ComplexType | ComponentKind::SimpleType))
        {
            let n = self.type_counters.entry(ns.clone()).or_default();
            let short = short_name(*n);
            *n += 1;
            self.push(short, &c.path);
        }
        let mut scopes = Vec::new();
        doc.walk(&mut |c| match c.kind {
            ComponentKind::ComplexType => scopes.push(c),
            ComponentKind::Restriction => scopes.push(c),
            _ => {}
        });
        for c in scopes {
            let mut used = HashSet::new();
            let shorts: Vec<(String, &ComponentPath)> = if c.kind == ComponentKind::ComplexType {
                scope_slots(c)
                    .iter()
                    .enumerate()
                    .map(|(i, s)| (short_name(i), &s.component().path))
                    .collect()
            } else {
                c.children
                    .iter()
                    .filter(|f| f.kind == ComponentKind::Enumeration)
                    .enumerate()
                    .map(|(i, f)| (i.to_string(), &f.path))
                    .collect()
            };
            for (short, path) in shorts {
                if !used.insert(short.clone()) {
                    return Err(MinifyError::InternalCollision {
                        short,
                        scope: c.path.to_string(),
                    });
                }
                self.push(short, path);
            }
        }
        Ok(())
    }
}

/// Minifies an already-resolved schema set (dependency-first order).
pub fn minify_set(documents: Vec<SchemaDocument>) -> Result<MinificationResult, MinifyError> {
    let compiled = CompiledSchema::compile(documents)?;
    let documents = &compiled.documents;
    let root_ns = compiled.target_namespace.clone();

    let mut assigner = Assigner {
        global_counters: HashMap::new(),
        type_counters: HashMap::new(),
        entries: Vec::new(),
    };
    for d in documents {
        assigner.document(d)?;
    }
    let dictionary = NameDictionary {
        entries: assigner.entries,
    };
    check_scopes(&dictionary)?;

    let mut namespace_map = BTreeMap::new();
    for d in documents {
        namespace_map.insert(d.target_namespace.clone(), minified_namespace(&d.target_namespace));
    }

    let renames: HashMap<ComponentPath, String> = dictionary
        .entries
        .iter()
        .map(|e| (e.path.clone(), e.short_name.clone()))
        .collect();
    let mut type_names: HashMap<QualifiedName, QualifiedName> = HashMap::new();
    for d in documents {
        for c in &d.components {
            if matches!(c.kind, ComponentKind::ComplexType | ComponentKind::SimpleType) {
                let original = QualifiedName::new(&d.target_namespace, c.name().unwrap_or_default())?;
                let renamed = QualifiedName::new(&namespace_map[&d.target_namespace], &renames[&c.path])?;
                type_names.insert(original, renamed);
            }
        }
    }
    let enum_values = enum_typed_declarations(&compiled);

    let mut minified_schemas = Vec::with_capacity(documents.len());
    let mut locations: HashMap<&str, String> = HashMap::new();
    for d in documents {
        locations.insert(&d.location, minified_location(&d.location));
    }
    for d in documents {
        let mut m = d.clone();
        m.location = locations[d.location.as_str()].clone();
        m.target_namespace = namespace_map[&d.target_namespace].clone();
        for (_, uri) in &mut m.prefixes {
            if let Some(mapped) = namespace_map.get(uri.as_str()) {
                *uri = mapped.clone();
            }
        }
        for r in &mut m.references {
            r.schema_location = minified_location(&r.schema_location);
            if let Some(ns) = &mut r.namespace {
                *ns = namespace_map.get(ns.as_str()).cloned().unwrap_or_else(|| ns.clone());
            }
        }
        for c in &mut m.components {
            rename(c, &renames, &type_names, &enum_values);
        }
        let label = (d.target_namespace != root_ns).then(|| location_stem(&m.location).to_string());
        assign_paths(&mut m, label.as_deref());
        minified_schemas.push(m);
    }

    Ok(MinificationResult {
        minified_schemas,
        dictionary,
        namespace_map,
    })
}

/// Path of every enumeration-typed element or attribute → its value list,
/// so fixed and default values can be rewritten to wire integers.
fn enum_typed_declarations(s: &CompiledSchema) -> HashMap<ComponentPath, Vec<String>> {
    let mut out = HashMap::new();
    let mut add = |path: &ComponentPath, t: &TypeId| {
        if let Some(v) = s.enum_values(t) {
            out.insert(path.clone(), v.to_vec());
        }
    };
    for e in &s.global_elements {
        add(&e.path, &e.type_id);
    }
    for a in &s.global_attributes {
        add(&a.path, &a.type_id);
    }
    for t in &s.complex_types {
        for a in &t.attributes {
            add(&a.path, &a.type_id);
        }
        for e in &t.elements {
            add(&e.path, &e.type_id);
        }
    }
    out
}

fn rename(
    c: &mut SchemaComponent,
    renames: &HashMap<ComponentPath, String>,
    type_names: &HashMap<QualifiedName, QualifiedName>,
    enum_values: &HashMap<ComponentPath, Vec<String>>,
) {
    // Text and wildcard slots have dictionary entries but no name attribute.
    let unnamed = matches!(c.kind, ComponentKind::SimpleContent | ComponentKind::Any);
    if let Some(short) = renames.get(&c.path).filter(|_| !unnamed) {
        c.name_or_value = Some(short.clone());
    }
    if let Some(t) = &c.type_ref {
        if let Some(renamed) = type_names.get(t) {
            c.type_ref = Some(renamed.clone());
        }
    }
    if let Some(values) = enum_values.get(&c.path) {
        for v in [&mut c.fixed, &mut c.default].into_iter().flatten() {
            if let Some(i) = values.iter().position(|x| x == v) {
                *v = i.to_string();
            }
        }
    }
    for k in &mut c.children {
        rename(k, renames, type_names, enum_values);
    }
}

/// Short names must be unique among entries sharing a parent path and
/// kind of scope (names or enumeration values).
fn check_scopes(dict: &NameDictionary) -> Result<(), MinifyError> {
    let mut seen = HashSet::new();
    for e in &dict.entries {
        let parent = scope_key(&e.path);
        if !seen.insert((parent.clone(), e.short_name.clone())) {
            return Err(MinifyError::InternalCollision {
                short: e.short_name.clone(),
                scope: parent,
            });
        }
    }
    Ok(())
}

/// The scope a dictionary path belongs to: the nearest enclosing complex
/// type or restriction, or the schema root split by global/type symbol
/// space.
pub(crate) fn scope_key(path: &ComponentPath) -> String {
    let segs = &path.segments;
    for i in (0..segs.len() - 1).rev() {
        let kind = segs[i].node_kind.as_str();
        if kind == "xsd:complexType" || kind == "xsd:restriction" {
            let parent = ComponentPath {
                segments: segs[..=i].to_vec(),
            };
            return parent.to_string();
        }
    }
    let root = segs[0].to_string();
    match segs.last().map(|s| s.node_kind.as_str()) {
        Some("xsd:complexType" | "xsd:simpleType") => format!("{root}#types"),
        _ => format!("{root}#globals"),
    }
}

/// Serializes every minified document without insignificant whitespace.
pub fn write_minified_schema(result: &MinificationResult) -> Vec<(String, Vec<u8>)> {
    result
        .minified_schemas
        .iter()
        .map(|d| (d.location.clone(), write_schema(d, false)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schema::parse_schema;

    fn doc(body: &str) -> SchemaDocument {
        let xsd = format!(
            r#"<xsd:schema xmlns:xsd="http://www.w3.org/2001/XMLSchema" xmlns:t="urn:t" targetNamespace="urn:t" elementFormDefault="qualified">{body}</xsd:schema>"#
        );
        parse_schema(xsd.as_bytes(), "t.xsd").unwrap()
    }

    fn lines(d: &NameDictionary) -> Vec<String> {
        d.entries.iter().map(|e| format!("{},{}", e.short_name, e.path)).collect()
    }

    #[test]
    fn short_names_follow_bijective_base_26() {
        assert_eq!(short_name(0), "a");
        assert_eq!(short_name(25), "z");
        assert_eq!(short_name(26), "aa");
        assert_eq!(short_name(27), "ab");
        assert_eq!(short_name(26 + 26 * 26), "aaa");
    }

    #[test]
    fn single_element_gets_a() {
        let r = minify_set(vec![doc(r#"<xsd:element name="IDMEF-Message" type="xsd:string"/>"#)]).unwrap();
        assert_eq!(lines(&r.dictionary), ["a,xsd:schema/xsd:element[name=IDMEF-Message]"]);
        let (name, bytes) = &write_minified_schema(&r)[0];
        assert_eq!(name, "t.min.xsd");
        let again = parse_schema(bytes, name).unwrap();
        assert_eq!(again.components[0].name(), Some("a"));
        assert_eq!(again.target_namespace, "urn:t-min");
    }

    #[test]
    fn enumeration_values_become_digits() {
        let r = minify_set(vec![doc(
            r#"<xsd:simpleType name="usercategory"><xsd:restriction base="xsd:string">
                 <xsd:enumeration value="unknown"/><xsd:enumeration value="application"/><xsd:enumeration value="os-device"/>
               </xsd:restriction></xsd:simpleType>"#,
        )])
        .unwrap();
        assert_eq!(
            lines(&r.dictionary)[1..],
            [
                "0,xsd:schema/xsd:simpleType[name=usercategory]/xsd:restriction/xsd:enumeration[value=unknown]",
                "1,xsd:schema/xsd:simpleType[name=usercategory]/xsd:restriction/xsd:enumeration[value=application]",
                "2,xsd:schema/xsd:simpleType[name=usercategory]/xsd:restriction/xsd:enumeration[value=os-device]",
            ]
        );
    }

    #[test]
    fn sibling_types_reuse_short_names() {
        let r = minify_set(vec![doc(
            r#"<xsd:complexType name="A"><xsd:attribute name="x"/></xsd:complexType>
               <xsd:complexType name="B"><xsd:attribute name="y"/></xsd:complexType>"#,
        )])
        .unwrap();
        assert_eq!(
            lines(&r.dictionary),
            [
                "a,xsd:schema/xsd:complexType[name=A]",
                "b,xsd:schema/xsd:complexType[name=B]",
                "a,xsd:schema/xsd:complexType[name=A]/xsd:attribute[name=x]",
                "a,xsd:schema/xsd:complexType[name=B]/xsd:attribute[name=y]",
            ]
        );
    }

    #[test]
    fn scope_order_is_attributes_text_elements_any() {
        let r = minify_set(vec![doc(
            r###"<xsd:complexType name="T"><xsd:sequence>
                 <xsd:element name="e1" type="xsd:string"/>
                 <xsd:any namespace="##other" processContents="skip"/>
                 <xsd:choice><xsd:element name="e2" type="xsd:string"/></xsd:choice>
               </xsd:sequence><xsd:attribute name="a1"/><xsd:attribute name="a2"/></xsd:complexType>
               <xsd:complexType name="S"><xsd:simpleContent><xsd:extension base="xsd:string">
                 <xsd:attribute name="ntpstamp"/></xsd:extension></xsd:simpleContent></xsd:complexType>"###,
        )])
        .unwrap();
        let got: Vec<_> = lines(&r.dictionary)[2..].to_vec();
        assert_eq!(
            got,
            [
                "a,xsd:schema/xsd:complexType[name=T]/xsd:attribute[name=a1]",
                "b,xsd:schema/xsd:complexType[name=T]/xsd:attribute[name=a2]",
                "c,xsd:schema/xsd:complexType[name=T]/xsd:sequence/xsd:element[name=e1]",
                "d,xsd:schema/xsd:complexType[name=T]/xsd:sequence/xsd:choice/xsd:element[name=e2]",
                "e,xsd:schema/xsd:complexType[name=T]/xsd:sequence/xsd:any",
                "a,xsd:schema/xsd:complexType[name=S]/xsd:simpleContent/xsd:extension/xsd:attribute[name=ntpstamp]",
                "b,xsd:schema/xsd:complexType[name=S]/xsd:simpleContent",
            ]
        );
    }

    #[test]
    fn type_references_follow_renamed_types() {
        let r = minify_set(vec![doc(
            r#"<xsd:element name="root" type="t:R"/>
               <xsd:complexType name="R"><xsd:attribute name="k" type="t:E" fixed="y"/></xsd:complexType>
               <xsd:simpleType name="E"><xsd:restriction base="xsd:string"><xsd:enumeration value="x"/><xsd:enumeration value="y"/></xsd:restriction></xsd:simpleType>"#,
        )])
        .unwrap();
        let m = r.root();
        assert_eq!(m.components[0].type_ref.as_ref().unwrap().to_string(), "{urn:t-min}a");
        let attr = &m.components[1].children[0];
        assert_eq!(attr.type_ref.as_ref().unwrap().to_string(), "{urn:t-min}b");
        assert_eq!(attr.fixed.as_deref(), Some("1"));
        // the written schema resolves against itself
        let bytes = &write_minified_schema(&r)[0].1;
        crate::schema::CompiledSchema::compile(vec![parse_schema(bytes, "t.min.xsd").unwrap()]).unwrap();
    }

    #[test]
    fn include_points_at_minified_file() {
        let root = parse_schema(
            br#"<xsd:schema xmlns:xsd="http://www.w3.org/2001/XMLSchema" targetNamespace="urn:t"><xsd:include schemaLocation="parts/child.xsd"/><xsd:element name="r" type="xsd:string"/></xsd:schema>"#,
            "main.xsd",
        )
        .unwrap();
        let child = br#"<xsd:schema xmlns:xsd="http://www.w3.org/2001/XMLSchema" targetNamespace="urn:t"><xsd:element name="c" type="xsd:string"/></xsd:schema>"#;
        let loader = |loc: &str| {
            if loc == "parts/child.xsd" {
                Ok(child.to_vec())
            } else {
                Err("missing".to_string())
            }
        };
        let r = minify(root, &loader).unwrap();
        let files = write_minified_schema(&r);
        assert_eq!(files[0].0, "parts/child.min.xsd");
        assert_eq!(files[1].0, "main.min.xsd");
        let main = String::from_utf8(files[1].1.clone()).unwrap();
        assert!(main.contains(r#"<xsd:include schemaLocation="parts/child.min.xsd"/>"#), "{main}");
        // the global scope continues across included documents
        assert_eq!(lines(&r.dictionary), ["a,xsd:schema/xsd:element[name=c]", "b,xsd:schema/xsd:element[name=r]"]);
    }

    #[test]
    fn dictionary_round_trip_and_errors() {
        assert!(write_dictionary(&NameDictionary::default()).is_empty());
        assert_eq!(parse_dictionary(b"").unwrap(), NameDictionary::default());
        let r = minify_set(vec![doc(
            r#"<xsd:complexType name="A"><xsd:attribute name="x"/></xsd:complexType>"#,
        )])
        .unwrap();
        let bytes = write_dictionary(&r.dictionary);
        assert_eq!(parse_dictionary(&bytes).unwrap(), r.dictionary);
        let err = parse_dictionary(b"a,xsd:schema/xsd:element[name=A]\nnocomma\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(parse_dictionary(b"A,xsd:schema\n").is_err());
        assert!(parse_dictionary(b"a,xsd:schema\r\n").is_err());
    }

    #[test]
    fn idmef_dictionary_starts_like_the_reference_sample() {
        let r = minify_set(vec![crate::corpus::idmef_document().unwrap()]).unwrap();
        let l = lines(&r.dictionary);
        assert_eq!(l[0], "a,xsd:schema/xsd:element[name=IDMEF-Message]");
        assert_eq!(l[1], "b,xsd:schema/xsd:element[name=Alert]");
        assert!(l.contains(&"a,xsd:schema/xsd:complexType[name=IDMEF-Message]/xsd:attribute[name=version]".to_string()));
    }
}
