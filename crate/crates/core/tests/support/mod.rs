//! Random schemas and schema-valid instances shared by the property and
//! acceptance tests.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;

use xsdminify::codec::InstanceTree;
use xsdminify::schema::{CompiledSchema, ComplexTypeDef, ElementDecl, MaxOccurs, Occurs, Particle, TypeId};

pub const FOREIGN_NS: &str = "urn:example:extension";

/// Characters that exercise escaping in every encoding.
const ALPHABET: &[char] = &[
    'a', 'b', 'Z', '0', '7', ' ', '.', '-', '<', '>', '&', '"', '\'', '{', '}', '[', ':', ',', '\\', '/', 'é', 'ß', '日',
    '🙂', '\t', '\n',
];

pub fn text<R: Rng>(rng: &mut R) -> String {
    let len = rng.gen_range(1..12);
    let s: String = (0..len).map(|_| *ALPHABET.choose(rng).unwrap()).collect();
    // Keep a visible character so whitespace-only text is never produced.
    format!("{}{s}", ['x', 'Q', '9'].choose(rng).unwrap())
}

/// A random instance of one of the schema's global elements. Repeats are
/// capped at `min + 2` and, past `max_depth`, optional content is left out.
pub fn instance<R: Rng>(schema: &CompiledSchema, rng: &mut R, max_depth: usize) -> InstanceTree {
    let decl = schema.global_elements.choose(rng).expect("schema has a global element");
    Generator { schema, max_depth }.element(decl, rng, 1)
}

struct Generator<'a> {
    schema: &'a CompiledSchema,
    max_depth: usize,
}

impl Generator<'_> {
    fn element<R: Rng>(&self, decl: &ElementDecl, rng: &mut R, depth: usize) -> InstanceTree {
        let mut t = InstanceTree::new(&decl.name.namespace, &decl.name.local);
        if let Some(f) = &decl.fixed {
            t.text = Some(f.clone());
            return t;
        }
        match &decl.type_id {
            TypeId::Complex(i) => self.complex(&self.schema.complex_types[*i], &mut t, rng, depth),
            other => t.text = Some(self.value(other, rng)),
        }
        t
    }

    fn value<R: Rng>(&self, type_id: &TypeId, rng: &mut R) -> String {
        match type_id {
            TypeId::Simple(i) => match &self.schema.simple_types[*i].values {
                Some(values) => values.choose(rng).unwrap().clone(),
                None => text(rng),
            },
            _ => text(rng),
        }
    }

    fn complex<R: Rng>(&self, ct: &ComplexTypeDef, t: &mut InstanceTree, rng: &mut R, depth: usize) {
        for a in &ct.attributes {
            if a.required || rng.gen_bool(0.6) {
                let v = a.fixed.clone().unwrap_or_else(|| self.value(&a.type_id, rng));
                t.attributes.push((a.name.clone(), v));
            }
        }
        if let Some(text_type) = &ct.text {
            t.text = Some(self.value(text_type, rng));
        }
        if let Some(content) = &ct.content {
            self.particle(ct, content, &mut t.children, rng, depth);
        }
    }

    fn count<R: Rng>(&self, occurs: Occurs, rng: &mut R, depth: usize) -> u32 {
        let cap = match occurs.max {
            MaxOccurs::Bounded(m) => m,
            MaxOccurs::Unbounded => u32::MAX,
        };
        if depth >= self.max_depth {
            return occurs.min;
        }
        rng.gen_range(occurs.min..=cap.min(occurs.min + 2))
    }

    fn particle<R: Rng>(&self, ct: &ComplexTypeDef, p: &Particle, out: &mut Vec<InstanceTree>, rng: &mut R, depth: usize) {
        for _ in 0..self.count(p.occurs(), rng, depth) {
            match p {
                Particle::Element(i, _) => out.push(self.element(&ct.elements[*i], rng, depth + 1)),
                Particle::Any(_) => out.push(foreign(rng, 2)),
                Particle::Sequence(items, _) => {
                    for item in items {
                        self.particle(ct, item, out, rng, depth);
                    }
                }
                Particle::Choice(items, _) => {
                    // Past the depth limit prefer a branch that can be empty.
                    let item = if depth >= self.max_depth {
                        items.iter().find(|i| i.occurs().min == 0).unwrap_or(&items[0])
                    } else {
                        items.choose(rng).unwrap()
                    };
                    self.particle(ct, item, out, rng, depth);
                }
            }
        }
    }
}

/// Arbitrary content outside the schema's namespace.
pub fn foreign<R: Rng>(rng: &mut R, depth: usize) -> InstanceTree {
    let local = ["note", "x", "item", "k-v"].choose(rng).unwrap();
    let mut t = InstanceTree::new(FOREIGN_NS, local);
    for name in ["id", "lang"] {
        if rng.gen_bool(0.4) {
            t.attributes.push((name.to_string(), text(rng)));
        }
    }
    if depth > 0 && rng.gen_bool(0.5) {
        for _ in 0..rng.gen_range(1..3) {
            t.children.push(foreign(rng, depth - 1));
        }
    } else if rng.gen_bool(0.7) {
        t.text = Some(text(rng));
    }
    t
}

/// An arbitrary tree, not tied to any schema.
pub fn any_tree<R: Rng>(rng: &mut R, depth: usize) -> InstanceTree {
    let mut t = InstanceTree::new("urn:t", ["a", "b", "c"].choose(rng).unwrap());
    for i in 0..rng.gen_range(0..4) {
        t.attributes.push((format!("a{i}"), text(rng)));
    }
    if depth > 0 {
        for _ in 0..rng.gen_range(0..4) {
            t.children.push(any_tree(rng, depth - 1));
        }
    }
    t
}

/// A generated single-document schema with the component counts it was
/// built from.
#[derive(Debug, Clone)]
pub struct RandomSchema {
    pub xsd: String,
    /// Named components: global and local elements, attributes, named types.
    pub named: usize,
    pub enum_values: usize,
    pub text_slots: usize,
    pub any_slots: usize,
    /// Named complex and simple types.
    pub named_types: usize,
    /// Largest number of members in one naming scope.
    pub widest_scope: usize,
}

pub const RANDOM_NS: &str = "urn:example:random";

const WORDS: &[&str] = &[
    "alpha", "beta", "gamma", "delta", "omega", "kappa", "sigma", "theta", "lambda", "zeta", "iota", "rho", "tau",
    "phi", "psi", "chi", "eta", "nu", "mu", "xi",
];

struct SchemaBuilder {
    named: usize,
    enum_values: usize,
    text_slots: usize,
    any_slots: usize,
    widest_scope: usize,
    enums: Vec<String>,
    complex: Vec<String>,
}

impl SchemaBuilder {
    /// A type reference for a member of complex type `owner`; only types
    /// declared later are referenced so no type requires itself.
    fn member_type<R: Rng>(&self, rng: &mut R, owner: usize) -> String {
        let later: Vec<&String> = self.complex.iter().skip(owner + 1).collect();
        match rng.gen_range(0..4) {
            0 if !self.enums.is_empty() => format!("r:{}", self.enums.choose(rng).unwrap()),
            1 if !later.is_empty() => format!("r:{}", later.choose(rng).unwrap()),
            2 => "xsd:int".into(),
            _ => "xsd:string".into(),
        }
    }

    fn attributes<R: Rng>(&mut self, rng: &mut R, out: &mut String) -> usize {
        let n = rng.gen_range(0..3);
        for i in 0..n {
            let ty = if !self.enums.is_empty() && rng.gen_bool(0.4) {
                format!("r:{}", self.enums.choose(rng).unwrap())
            } else {
                "xsd:string".into()
            };
            let usage = if rng.gen_bool(0.3) { r#" use="required""# } else { "" };
            out.push_str(&format!(r#"<xsd:attribute name="attr{i}" type="{ty}"{usage}/>"#));
        }
        self.named += n;
        n
    }

    fn occurs<R: Rng>(rng: &mut R) -> &'static str {
        [
            "",
            r#" minOccurs="0""#,
            r#" maxOccurs="unbounded""#,
            r#" minOccurs="0" maxOccurs="unbounded""#,
            r#" minOccurs="0" maxOccurs="2""#,
        ]
        .choose(rng)
        .unwrap()
    }

    fn complex_type<R: Rng>(&mut self, rng: &mut R, index: usize, out: &mut String) {
        out.push_str(&format!(r#"<xsd:complexType name="{}">"#, self.complex[index]));
        if rng.gen_bool(0.2) {
            let base = if !self.enums.is_empty() && rng.gen_bool(0.5) {
                format!("r:{}", self.enums.choose(rng).unwrap())
            } else {
                "xsd:string".into()
            };
            out.push_str(&format!(r#"<xsd:simpleContent><xsd:extension base="{base}">"#));
            let n = self.attributes(rng, out);
            out.push_str("</xsd:extension></xsd:simpleContent></xsd:complexType>");
            self.text_slots += 1;
            self.widest_scope = self.widest_scope.max(n + 1);
            return;
        }
        let group = if rng.gen_bool(0.3) { "choice" } else { "sequence" };
        let group_occurs = if group == "choice" && rng.gen_bool(0.5) {
            r#" minOccurs="0" maxOccurs="unbounded""#
        } else {
            ""
        };
        out.push_str(&format!("<xsd:{group}{group_occurs}>"));
        let n = rng.gen_range(1..5);
        let mut members = 0;
        for i in 0..n {
            if i == 1 && group == "sequence" && rng.gen_bool(0.3) {
                // A nested group of two elements.
                let inner = ["sequence", "choice"].choose(rng).unwrap();
                out.push_str(&format!(r#"<xsd:{inner} minOccurs="0">"#));
                for j in 0..2 {
                    let ty = self.member_type(rng, index);
                    out.push_str(&format!(r#"<xsd:element name="Nested{j}" type="{ty}"/>"#));
                }
                out.push_str(&format!("</xsd:{inner}>"));
                self.named += 2;
                members += 2;
                continue;
            }
            let occurs = if group == "choice" { "" } else { Self::occurs(rng) };
            if rng.gen_bool(0.2) {
                out.push_str(&format!(
                    r#"<xsd:element name="Inline{i}"{occurs}><xsd:complexType><xsd:sequence><xsd:element name="Leaf" type="xsd:string" maxOccurs="unbounded"/></xsd:sequence><xsd:attribute name="tag" type="xsd:string"/></xsd:complexType></xsd:element>"#
                ));
                self.named += 3;
                self.widest_scope = self.widest_scope.max(2);
            } else {
                let ty = self.member_type(rng, index);
                out.push_str(&format!(r#"<xsd:element name="Member{i}" type="{ty}"{occurs}/>"#));
                self.named += 1;
            }
            members += 1;
        }
        if group == "sequence" && rng.gen_bool(0.25) {
            out.push_str(r###"<xsd:any namespace="##other" processContents="lax" minOccurs="0" maxOccurs="unbounded"/>"###);
            self.any_slots += 1;
            members += 1;
        }
        out.push_str(&format!("</xsd:{group}>"));
        members += self.attributes(rng, out);
        out.push_str("</xsd:complexType>");
        self.widest_scope = self.widest_scope.max(members);
    }
}

pub fn random_schema<R: Rng>(rng: &mut R) -> RandomSchema {
    let n_enums = rng.gen_range(0..3);
    let n_complex = rng.gen_range(1..5);
    let mut b = SchemaBuilder {
        named: 0,
        enum_values: 0,
        text_slots: 0,
        any_slots: 0,
        widest_scope: 0,
        enums: (0..n_enums).map(|i| format!("Choice{i}Type")).collect(),
        complex: (0..n_complex).map(|i| format!("Record{i}Type")).collect(),
    };
    let mut body = String::new();
    let n_globals = rng.gen_range(1..4);
    for i in 0..n_globals {
        let ty = b.complex.choose(rng).unwrap().clone();
        body.push_str(&format!(r#"<xsd:element name="Root{i}" type="r:{ty}"/>"#));
    }
    b.named += n_globals;
    let mut globals = n_globals;
    for name in b.enums.clone() {
        let mut words = WORDS.to_vec();
        words.shuffle(rng);
        let k = rng.gen_range(1..6);
        body.push_str(&format!(r#"<xsd:simpleType name="{name}"><xsd:restriction base="xsd:string">"#));
        for w in &words[..k] {
            body.push_str(&format!(r#"<xsd:enumeration value="{w}"/>"#));
        }
        body.push_str("</xsd:restriction></xsd:simpleType>");
        b.enum_values += k;
        b.widest_scope = b.widest_scope.max(k);
    }
    for i in 0..n_complex {
        b.complex_type(rng, i, &mut body);
    }
    let named_types = n_enums + n_complex;
    b.named += named_types;
    globals += named_types;
    b.widest_scope = b.widest_scope.max(globals);
    RandomSchema {
        xsd: format!(
            r#"<?xml version="1.0" encoding="UTF-8"?>
<xsd:schema xmlns:xsd="http://www.w3.org/2001/XMLSchema" xmlns:r="{RANDOM_NS}" targetNamespace="{RANDOM_NS}" elementFormDefault="qualified">{body}</xsd:schema>
"#
        ),
        named: b.named,
        enum_values: b.enum_values,
        text_slots: b.text_slots,
        any_slots: b.any_slots,
        named_types,
        widest_scope: b.widest_scope,
    }
}
