// Generated from a binding manifest; do not edit by hand.
// Schema namespace: http://iana.org/idmef

use serde::{Deserialize, Serialize};

/// SHA-256 of the name dictionary these bindings were generated from.
pub const DICTIONARY_CHECKSUM: &str = "48f4607085b8b2de02b4b839ffb0c48a47017cf8c56690cee57d39449096b883";

pub const MINIFIED_NAMESPACE: &str = "http://iana.org/idmef-min";

/// `IDMEF-Message`, wire name `a`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct IdmefMessage {
    #[serde(rename = "a")]
    a: String,
    #[serde(rename = "b", default, skip_serializing_if = "Vec::is_empty")]
    b: Vec<Alert>,
    #[serde(rename = "c", default, skip_serializing_if = "Vec::is_empty")]
    c: Vec<Heartbeat>,
}

impl IdmefMessage {
    /// `version`, sent as `a`.
    pub fn version(&self) -> &String {
        &self.a
    }

    pub fn set_version(&mut self, value: String) {
        self.a = value;
    }
    /// `Alert`, sent as `b`.
    pub fn alert(&self) -> &Vec<Alert> {
        &self.b
    }

    pub fn set_alert(&mut self, value: Vec<Alert>) {
        self.b = value;
    }
    /// `Heartbeat`, sent as `c`.
    pub fn heartbeat(&self) -> &Vec<Heartbeat> {
        &self.c
    }

    pub fn set_heartbeat(&mut self, value: Vec<Heartbeat>) {
        self.c = value;
    }
}

/// `Alert`, wire name `b`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Alert {
    #[serde(rename = "a", default, skip_serializing_if = "Option::is_none")]
    a: Option<String>,
    #[serde(rename = "b")]
    b: Analyzer,
    #[serde(rename = "c")]
    c: Time,
    #[serde(rename = "d", default, skip_serializing_if = "Option::is_none")]
    d: Option<Box<Time>>,
    #[serde(rename = "e", default, skip_serializing_if = "Option::is_none")]
    e: Option<Box<Time>>,
    #[serde(rename = "f", default, skip_serializing_if = "Vec::is_empty")]
    f: Vec<Source>,
    #[serde(rename = "g", default, skip_serializing_if = "Vec::is_empty")]
    g: Vec<Target>,
    #[serde(rename = "h")]
    h: Classification,
    #[serde(rename = "i", default, skip_serializing_if = "Option::is_none")]
    i: Option<Box<Assessment>>,
    #[serde(rename = "j", default, skip_serializing_if = "Option::is_none")]
    j: Option<Box<ToolAlert>>,
    #[serde(rename = "k", default, skip_serializing_if = "Option::is_none")]
    k: Option<Box<OverflowAlert>>,
    #[serde(rename = "l", default, skip_serializing_if = "Option::is_none")]
    l: Option<Box<CorrelationAlert>>,
    #[serde(rename = "m", default, skip_serializing_if = "Vec::is_empty")]
    m: Vec<AdditionalData>,
}

impl Alert {
    /// `messageid`, sent as `a`.
    pub fn messageid(&self) -> &Option<String> {
        &self.a
    }

    pub fn set_messageid(&mut self, value: Option<String>) {
        self.a = value;
    }
    /// `Analyzer`, sent as `b`.
    pub fn analyzer(&self) -> &Analyzer {
        &self.b
    }

    pub fn set_analyzer(&mut self, value: Analyzer) {
        self.b = value;
    }
    /// `CreateTime`, sent as `c`.
    pub fn create_time(&self) -> &Time {
        &self.c
    }

    pub fn set_create_time(&mut self, value: Time) {
        self.c = value;
    }
    /// `DetectTime`, sent as `d`.
    pub fn detect_time(&self) -> &Option<Box<Time>> {
        &self.d
    }

    pub fn set_detect_time(&mut self, value: Option<Box<Time>>) {
        self.d = value;
    }
    /// `AnalyzerTime`, sent as `e`.
    pub fn analyzer_time(&self) -> &Option<Box<Time>> {
        &self.e
    }

    pub fn set_analyzer_time(&mut self, value: Option<Box<Time>>) {
        self.e = value;
    }
    /// `Source`, sent as `f`.
    pub fn source(&self) -> &Vec<Source> {
        &self.f
    }

    pub fn set_source(&mut self, value: Vec<Source>) {
        self.f = value;
    }
    /// `Target`, sent as `g`.
    pub fn target(&self) -> &Vec<Target> {
        &self.g
    }

    pub fn set_target(&mut self, value: Vec<Target>) {
        self.g = value;
    }
    /// `Classification`, sent as `h`.
    pub fn classification(&self) -> &Classification {
        &self.h
    }

    pub fn set_classification(&mut self, value: Classification) {
        self.h = value;
    }
    /// `Assessment`, sent as `i`.
    pub fn assessment(&self) -> &Option<Box<Assessment>> {
        &self.i
    }

    pub fn set_assessment(&mut self, value: Option<Box<Assessment>>) {
        self.i = value;
    }
    /// `ToolAlert`, sent as `j`.
    pub fn tool_alert(&self) -> &Option<Box<ToolAlert>> {
        &self.j
    }

    pub fn set_tool_alert(&mut self, value: Option<Box<ToolAlert>>) {
        self.j = value;
    }
    /// `OverflowAlert`, sent as `k`.
    pub fn overflow_alert(&self) -> &Option<Box<OverflowAlert>> {
        &self.k
    }

    pub fn set_overflow_alert(&mut self, value: Option<Box<OverflowAlert>>) {
        self.k = value;
    }
    /// `CorrelationAlert`, sent as `l`.
    pub fn correlation_alert(&self) -> &Option<Box<CorrelationAlert>> {
        &self.l
    }

    pub fn set_correlation_alert(&mut self, value: Option<Box<CorrelationAlert>>) {
        self.l = value;
    }
    /// `AdditionalData`, sent as `m`.
    pub fn additional_data(&self) -> &Vec<AdditionalData> {
        &self.m
    }

    pub fn set_additional_data(&mut self, value: Vec<AdditionalData>) {
        self.m = value;
    }
}

/// `Heartbeat`, wire name `c`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Heartbeat {
    #[serde(rename = "a", default, skip_serializing_if = "Option::is_none")]
    a: Option<String>,
    #[serde(rename = "b")]
    b: Analyzer,
    #[serde(rename = "c")]
    c: Time,
    #[serde(rename = "d", default, skip_serializing_if = "Option::is_none")]
    d: Option<String>,
    #[serde(rename = "e", default, skip_serializing_if = "Option::is_none")]
    e: Option<Box<Time>>,
    #[serde(rename = "f", default, skip_serializing_if = "Vec::is_empty")]
    f: Vec<AdditionalData>,
}

impl Heartbeat {
    /// `messageid`, sent as `a`.
    pub fn messageid(&self) -> &Option<String> {
        &self.a
    }

    pub fn set_messageid(&mut self, value: Option<String>) {
        self.a = value;
    }
    /// `Analyzer`, sent as `b`.
    pub fn analyzer(&self) -> &Analyzer {
        &self.b
    }

    pub fn set_analyzer(&mut self, value: Analyzer) {
        self.b = value;
    }
    /// `CreateTime`, sent as `c`.
    pub fn create_time(&self) -> &Time {
        &self.c
    }

    pub fn set_create_time(&mut self, value: Time) {
        self.c = value;
    }
    /// `HeartbeatInterval`, sent as `d`.
    pub fn heartbeat_interval(&self) -> &Option<String> {
        &self.d
    }

    pub fn set_heartbeat_interval(&mut self, value: Option<String>) {
        self.d = value;
    }
    /// `AnalyzerTime`, sent as `e`.
    pub fn analyzer_time(&self) -> &Option<Box<Time>> {
        &self.e
    }

    pub fn set_analyzer_time(&mut self, value: Option<Box<Time>>) {
        self.e = value;
    }
    /// `AdditionalData`, sent as `f`.
    pub fn additional_data(&self) -> &Vec<AdditionalData> {
        &self.f
    }

    pub fn set_additional_data(&mut self, value: Vec<AdditionalData>) {
        self.f = value;
    }
}

/// `Time`, wire name `d`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Time {
    #[serde(rename = "a")]
    a: String,
    #[serde(rename = "b", default, skip_serializing_if = "Option::is_none")]
    b: Option<String>,
}

impl Time {
    /// `ntpstamp`, sent as `a`.
    pub fn ntpstamp(&self) -> &String {
        &self.a
    }

    pub fn set_ntpstamp(&mut self, value: String) {
        self.a = value;
    }
    /// `value`, sent as `b`.
    pub fn value(&self) -> &Option<String> {
        &self.b
    }

    pub fn set_value(&mut self, value: Option<String>) {
        self.b = value;
    }
}

/// `Analyzer`, wire name `e`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Analyzer {
    #[serde(rename = "a", default, skip_serializing_if = "Option::is_none")]
    a: Option<String>,
    #[serde(rename = "b", default, skip_serializing_if = "Option::is_none")]
    b: Option<String>,
    #[serde(rename = "c", default, skip_serializing_if = "Option::is_none")]
    c: Option<String>,
    #[serde(rename = "d", default, skip_serializing_if = "Option::is_none")]
    d: Option<String>,
    #[serde(rename = "e", default, skip_serializing_if = "Option::is_none")]
    e: Option<String>,
    #[serde(rename = "f", default, skip_serializing_if = "Option::is_none")]
    f: Option<String>,
    #[serde(rename = "g", default, skip_serializing_if = "Option::is_none")]
    g: Option<String>,
    #[serde(rename = "h", default, skip_serializing_if = "Option::is_none")]
    h: Option<String>,
    #[serde(rename = "i", default, skip_serializing_if = "Option::is_none")]
    i: Option<Box<Node>>,
    #[serde(rename = "j", default, skip_serializing_if = "Option::is_none")]
    j: Option<Box<Process>>,
    #[serde(rename = "k", default, skip_serializing_if = "Option::is_none")]
    k: Option<Box<Analyzer>>,
}

impl Analyzer {
    /// `analyzerid`, sent as `a`.
    pub fn analyzerid(&self) -> &Option<String> {
        &self.a
    }

    pub fn set_analyzerid(&mut self, value: Option<String>) {
        self.a = value;
    }
    /// `name`, sent as `b`.
    pub fn name(&self) -> &Option<String> {
        &self.b
    }

    pub fn set_name(&mut self, value: Option<String>) {
        self.b = value;
    }
    /// `manufacturer`, sent as `c`.
    pub fn manufacturer(&self) -> &Option<String> {
        &self.c
    }

    pub fn set_manufacturer(&mut self, value: Option<String>) {
        self.c = value;
    }
    /// `model`, sent as `d`.
    pub fn model(&self) -> &Option<String> {
        &self.d
    }

    pub fn set_model(&mut self, value: Option<String>) {
        self.d = value;
    }
    /// `version`, sent as `e`.
    pub fn version(&self) -> &Option<String> {
        &self.e
    }

    pub fn set_version(&mut self, value: Option<String>) {
        self.e = value;
    }
    /// `class`, sent as `f`.
    pub fn class(&self) -> &Option<String> {
        &self.f
    }

    pub fn set_class(&mut self, value: Option<String>) {
        self.f = value;
    }
    /// `ostype`, sent as `g`.
    pub fn ostype(&self) -> &Option<String> {
        &self.g
    }

    pub fn set_ostype(&mut self, value: Option<String>) {
        self.g = value;
    }
    /// `osversion`, sent as `h`.
    pub fn osversion(&self) -> &Option<String> {
        &self.h
    }

    pub fn set_osversion(&mut self, value: Option<String>) {
        self.h = value;
    }
    /// `Node`, sent as `i`.
    pub fn node(&self) -> &Option<Box<Node>> {
        &self.i
    }

    pub fn set_node(&mut self, value: Option<Box<Node>>) {
        self.i = value;
    }
    /// `Process`, sent as `j`.
    pub fn process(&self) -> &Option<Box<Process>> {
        &self.j
    }

    pub fn set_process(&mut self, value: Option<Box<Process>>) {
        self.j = value;
    }
    /// `Analyzer`, sent as `k`.
    pub fn analyzer(&self) -> &Option<Box<Analyzer>> {
        &self.k
    }

    pub fn set_analyzer(&mut self, value: Option<Box<Analyzer>>) {
        self.k = value;
    }
}

/// `Classification`, wire name `f`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Classification {
    #[serde(rename = "a", default, skip_serializing_if = "Option::is_none")]
    a: Option<String>,
    #[serde(rename = "b")]
    b: String,
    #[serde(rename = "c", default, skip_serializing_if = "Vec::is_empty")]
    c: Vec<Reference>,
}

impl Classification {
    /// `ident`, sent as `a`.
    pub fn ident(&self) -> &Option<String> {
        &self.a
    }

    pub fn set_ident(&mut self, value: Option<String>) {
        self.a = value;
    }
    /// `text`, sent as `b`.
    pub fn text(&self) -> &String {
        &self.b
    }

    pub fn set_text(&mut self, value: String) {
        self.b = value;
    }
    /// `Reference`, sent as `c`.
    pub fn reference(&self) -> &Vec<Reference> {
        &self.c
    }

    pub fn set_reference(&mut self, value: Vec<Reference>) {
        self.c = value;
    }
}

/// `Reference`, wire name `g`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Reference {
    #[serde(rename = "a")]
    a: Referenceorigin,
    #[serde(rename = "b", default, skip_serializing_if = "Option::is_none")]
    b: Option<String>,
    #[serde(rename = "c")]
    c: String,
    #[serde(rename = "d")]
    d: String,
}

impl Reference {
    /// `origin`, sent as `a`.
    pub fn origin(&self) -> &Referenceorigin {
        &self.a
    }

    pub fn set_origin(&mut self, value: Referenceorigin) {
        self.a = value;
    }
    /// `meaning`, sent as `b`.
    pub fn meaning(&self) -> &Option<String> {
        &self.b
    }

    pub fn set_meaning(&mut self, value: Option<String>) {
        self.b = value;
    }
    /// `name`, sent as `c`.
    pub fn name(&self) -> &String {
        &self.c
    }

    pub fn set_name(&mut self, value: String) {
        self.c = value;
    }
    /// `url`, sent as `d`.
    pub fn url(&self) -> &String {
        &self.d
    }

    pub fn set_url(&mut self, value: String) {
        self.d = value;
    }
}

/// `Source`, wire name `h`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Source {
    #[serde(rename = "a", default, skip_serializing_if = "Option::is_none")]
    a: Option<String>,
    #[serde(rename = "b", default, skip_serializing_if = "Option::is_none")]
    b: Option<Yesno>,
    #[serde(rename = "c", default, skip_serializing_if = "Option::is_none")]
    c: Option<String>,
    #[serde(rename = "d", default, skip_serializing_if = "Option::is_none")]
    d: Option<Box<Node>>,
    #[serde(rename = "e", default, skip_serializing_if = "Option::is_none")]
    e: Option<Box<User>>,
    #[serde(rename = "f", default, skip_serializing_if = "Option::is_none")]
    f: Option<Box<Process>>,
    #[serde(rename = "g", default, skip_serializing_if = "Option::is_none")]
    g: Option<Box<Service>>,
}

impl Source {
    /// `ident`, sent as `a`.
    pub fn ident(&self) -> &Option<String> {
        &self.a
    }

    pub fn set_ident(&mut self, value: Option<String>) {
        self.a = value;
    }
    /// `spoofed`, sent as `b`.
    pub fn spoofed(&self) -> &Option<Yesno> {
        &self.b
    }

    pub fn set_spoofed(&mut self, value: Option<Yesno>) {
        self.b = value;
    }
    /// `interface`, sent as `c`.
    pub fn interface(&self) -> &Option<String> {
        &self.c
    }

    pub fn set_interface(&mut self, value: Option<String>) {
        self.c = value;
    }
    /// `Node`, sent as `d`.
    pub fn node(&self) -> &Option<Box<Node>> {
        &self.d
    }

    pub fn set_node(&mut self, value: Option<Box<Node>>) {
        self.d = value;
    }
    /// `User`, sent as `e`.
    pub fn user(&self) -> &Option<Box<User>> {
        &self.e
    }

    pub fn set_user(&mut self, value: Option<Box<User>>) {
        self.e = value;
    }
    /// `Process`, sent as `f`.
    pub fn process(&self) -> &Option<Box<Process>> {
        &self.f
    }

    pub fn set_process(&mut self, value: Option<Box<Process>>) {
        self.f = value;
    }
    /// `Service`, sent as `g`.
    pub fn service(&self) -> &Option<Box<Service>> {
        &self.g
    }

    pub fn set_service(&mut self, value: Option<Box<Service>>) {
        self.g = value;
    }
}

/// `Target`, wire name `i`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Target {
    #[serde(rename = "a", default, skip_serializing_if = "Option::is_none")]
    a: Option<String>,
    #[serde(rename = "b", default, skip_serializing_if = "Option::is_none")]
    b: Option<Yesno>,
    #[serde(rename = "c", default, skip_serializing_if = "Option::is_none")]
    c: Option<String>,
    #[serde(rename = "d", default, skip_serializing_if = "Option::is_none")]
    d: Option<Box<Node>>,
    #[serde(rename = "e", default, skip_serializing_if = "Option::is_none")]
    e: Option<Box<User>>,
    #[serde(rename = "f", default, skip_serializing_if = "Option::is_none")]
    f: Option<Box<Process>>,
    #[serde(rename = "g", default, skip_serializing_if = "Option::is_none")]
    g: Option<Box<Service>>,
    #[serde(rename = "h", default, skip_serializing_if = "Vec::is_empty")]
    h: Vec<File>,
}

impl Target {
    /// `ident`, sent as `a`.
    pub fn ident(&self) -> &Option<String> {
        &self.a
    }

    pub fn set_ident(&mut self, value: Option<String>) {
        self.a = value;
    }
    /// `decoy`, sent as `b`.
    pub fn decoy(&self) -> &Option<Yesno> {
        &self.b
    }

    pub fn set_decoy(&mut self, value: Option<Yesno>) {
        self.b = value;
    }
    /// `interface`, sent as `c`.
    pub fn interface(&self) -> &Option<String> {
        &self.c
    }

    pub fn set_interface(&mut self, value: Option<String>) {
        self.c = value;
    }
    /// `Node`, sent as `d`.
    pub fn node(&self) -> &Option<Box<Node>> {
        &self.d
    }

    pub fn set_node(&mut self, value: Option<Box<Node>>) {
        self.d = value;
    }
    /// `User`, sent as `e`.
    pub fn user(&self) -> &Option<Box<User>> {
        &self.e
    }

    pub fn set_user(&mut self, value: Option<Box<User>>) {
        self.e = value;
    }
    /// `Process`, sent as `f`.
    pub fn process(&self) -> &Option<Box<Process>> {
        &self.f
    }

    pub fn set_process(&mut self, value: Option<Box<Process>>) {
        self.f = value;
    }
    /// `Service`, sent as `g`.
    pub fn service(&self) -> &Option<Box<Service>> {
        &self.g
    }

    pub fn set_service(&mut self, value: Option<Box<Service>>) {
        self.g = value;
    }
    /// `File`, sent as `h`.
    pub fn file(&self) -> &Vec<File> {
        &self.h
    }

    pub fn set_file(&mut self, value: Vec<File>) {
        self.h = value;
    }
}

/// `Assessment`, wire name `j`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Assessment {
    #[serde(rename = "a", default, skip_serializing_if = "Option::is_none")]
    a: Option<Box<Impact>>,
    #[serde(rename = "b", default, skip_serializing_if = "Vec::is_empty")]
    b: Vec<Action>,
    #[serde(rename = "c", default, skip_serializing_if = "Option::is_none")]
    c: Option<Box<Confidence>>,
}

impl Assessment {
    /// `Impact`, sent as `a`.
    pub fn impact(&self) -> &Option<Box<Impact>> {
        &self.a
    }

    pub fn set_impact(&mut self, value: Option<Box<Impact>>) {
        self.a = value;
    }
    /// `Action`, sent as `b`.
    pub fn action(&self) -> &Vec<Action> {
        &self.b
    }

    pub fn set_action(&mut self, value: Vec<Action>) {
        self.b = value;
    }
    /// `Confidence`, sent as `c`.
    pub fn confidence(&self) -> &Option<Box<Confidence>> {
        &self.c
    }

    pub fn set_confidence(&mut self, value: Option<Box<Confidence>>) {
        self.c = value;
    }
}

/// `Impact`, wire name `k`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Impact {
    #[serde(rename = "a", default, skip_serializing_if = "Option::is_none")]
    a: Option<Impactseverity>,
    #[serde(rename = "b", default, skip_serializing_if = "Option::is_none")]
    b: Option<Impactcompletion>,
    #[serde(rename = "c", default, skip_serializing_if = "Option::is_none")]
    c: Option<Impacttype>,
    #[serde(rename = "d", default, skip_serializing_if = "Option::is_none")]
    d: Option<String>,
}

impl Impact {
    /// `severity`, sent as `a`.
    pub fn severity(&self) -> &Option<Impactseverity> {
        &self.a
    }

    pub fn set_severity(&mut self, value: Option<Impactseverity>) {
        self.a = value;
    }
    /// `completion`, sent as `b`.
    pub fn completion(&self) -> &Option<Impactcompletion> {
        &self.b
    }

    pub fn set_completion(&mut self, value: Option<Impactcompletion>) {
        self.b = value;
    }
    /// `type`, sent as `c`.
    pub fn r#type(&self) -> &Option<Impacttype> {
        &self.c
    }

    pub fn set_type(&mut self, value: Option<Impacttype>) {
        self.c = value;
    }
    /// `value`, sent as `d`.
    pub fn value(&self) -> &Option<String> {
        &self.d
    }

    pub fn set_value(&mut self, value: Option<String>) {
        self.d = value;
    }
}

/// `Action`, wire name `l`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Action {
    #[serde(rename = "a", default, skip_serializing_if = "Option::is_none")]
    a: Option<Actioncategory>,
    #[serde(rename = "b", default, skip_serializing_if = "Option::is_none")]
    b: Option<String>,
}

impl Action {
    /// `category`, sent as `a`.
    pub fn category(&self) -> &Option<Actioncategory> {
        &self.a
    }

    pub fn set_category(&mut self, value: Option<Actioncategory>) {
        self.a = value;
    }
    /// `value`, sent as `b`.
    pub fn value(&self) -> &Option<String> {
        &self.b
    }

    pub fn set_value(&mut self, value: Option<String>) {
        self.b = value;
    }
}

/// `Confidence`, wire name `m`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Confidence {
    #[serde(rename = "a")]
    a: Confidencerating,
    #[serde(rename = "b", default, skip_serializing_if = "Option::is_none")]
    b: Option<String>,
}

impl Confidence {
    /// `rating`, sent as `a`.
    pub fn rating(&self) -> &Confidencerating {
        &self.a
    }

    pub fn set_rating(&mut self, value: Confidencerating) {
        self.a = value;
    }
    /// `value`, sent as `b`.
    pub fn value(&self) -> &Option<String> {
        &self.b
    }

    pub fn set_value(&mut self, value: Option<String>) {
        self.b = value;
    }
}

/// `ToolAlert`, wire name `n`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct ToolAlert {
    #[serde(rename = "a")]
    a: String,
    #[serde(rename = "b", default, skip_serializing_if = "Option::is_none")]
    b: Option<String>,
    #[serde(rename = "c", default, skip_serializing_if = "Vec::is_empty")]
    c: Vec<Alertident>,
}

impl ToolAlert {
    /// `name`, sent as `a`.
    pub fn name(&self) -> &String {
        &self.a
    }

    pub fn set_name(&mut self, value: String) {
        self.a = value;
    }
    /// `command`, sent as `b`.
    pub fn command(&self) -> &Option<String> {
        &self.b
    }

    pub fn set_command(&mut self, value: Option<String>) {
        self.b = value;
    }
    /// `alertident`, sent as `c`.
    pub fn alertident(&self) -> &Vec<Alertident> {
        &self.c
    }

    pub fn set_alertident(&mut self, value: Vec<Alertident>) {
        self.c = value;
    }
}

/// `OverflowAlert`, wire name `o`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct OverflowAlert {
    #[serde(rename = "a")]
    a: String,
    #[serde(rename = "b", default, skip_serializing_if = "Option::is_none")]
    b: Option<String>,
    #[serde(rename = "c", default, skip_serializing_if = "Option::is_none")]
    c: Option<String>,
}

impl OverflowAlert {
    /// `program`, sent as `a`.
    pub fn program(&self) -> &String {
        &self.a
    }

    pub fn set_program(&mut self, value: String) {
        self.a = value;
    }
    /// `size`, sent as `b`.
    pub fn size(&self) -> &Option<String> {
        &self.b
    }

    pub fn set_size(&mut self, value: Option<String>) {
        self.b = value;
    }
    /// `buffer`, sent as `c`.
    pub fn buffer(&self) -> &Option<String> {
        &self.c
    }

    pub fn set_buffer(&mut self, value: Option<String>) {
        self.c = value;
    }
}

/// `CorrelationAlert`, wire name `p`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct CorrelationAlert {
    #[serde(rename = "a")]
    a: String,
    #[serde(rename = "b", default, skip_serializing_if = "Vec::is_empty")]
    b: Vec<Alertident>,
}

impl CorrelationAlert {
    /// `name`, sent as `a`.
    pub fn name(&self) -> &String {
        &self.a
    }

    pub fn set_name(&mut self, value: String) {
        self.a = value;
    }
    /// `alertident`, sent as `b`.
    pub fn alertident(&self) -> &Vec<Alertident> {
        &self.b
    }

    pub fn set_alertident(&mut self, value: Vec<Alertident>) {
        self.b = value;
    }
}

/// `alertident`, wire name `q`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Alertident {
    #[serde(rename = "a", default, skip_serializing_if = "Option::is_none")]
    a: Option<String>,
    #[serde(rename = "b", default, skip_serializing_if = "Option::is_none")]
    b: Option<String>,
}

impl Alertident {
    /// `analyzerid`, sent as `a`.
    pub fn analyzerid(&self) -> &Option<String> {
        &self.a
    }

    pub fn set_analyzerid(&mut self, value: Option<String>) {
        self.a = value;
    }
    /// `value`, sent as `b`.
    pub fn value(&self) -> &Option<String> {
        &self.b
    }

    pub fn set_value(&mut self, value: Option<String>) {
        self.b = value;
    }
}

/// `AdditionalData`, wire name `r`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct AdditionalData {
    #[serde(rename = "a", default, skip_serializing_if = "Option::is_none")]
    a: Option<Additionaldatatype>,
    #[serde(rename = "b", default, skip_serializing_if = "Option::is_none")]
    b: Option<String>,
    #[serde(rename = "c", default, skip_serializing_if = "Option::is_none")]
    c: Option<String>,
    #[serde(rename = "d", default, skip_serializing_if = "Option::is_none")]
    d: Option<String>,
    #[serde(rename = "e", default, skip_serializing_if = "Option::is_none")]
    e: Option<String>,
    #[serde(rename = "f", default, skip_serializing_if = "Option::is_none")]
    f: Option<String>,
    #[serde(rename = "g", default, skip_serializing_if = "Option::is_none")]
    g: Option<String>,
    #[serde(rename = "h", default, skip_serializing_if = "Option::is_none")]
    h: Option<String>,
    #[serde(rename = "i", default, skip_serializing_if = "Option::is_none")]
    i: Option<String>,
    #[serde(rename = "j", default, skip_serializing_if = "Option::is_none")]
    j: Option<String>,
    #[serde(rename = "k", default, skip_serializing_if = "Option::is_none")]
    k: Option<String>,
    #[serde(rename = "l", default, skip_serializing_if = "Option::is_none")]
    l: Option<String>,
    #[serde(rename = "m", default, skip_serializing_if = "Option::is_none")]
    m: Option<Box<Xmltext>>,
}

impl AdditionalData {
    /// `type`, sent as `a`.
    pub fn r#type(&self) -> &Option<Additionaldatatype> {
        &self.a
    }

    pub fn set_type(&mut self, value: Option<Additionaldatatype>) {
        self.a = value;
    }
    /// `meaning`, sent as `b`.
    pub fn meaning(&self) -> &Option<String> {
        &self.b
    }

    pub fn set_meaning(&mut self, value: Option<String>) {
        self.b = value;
    }
    /// `boolean`, sent as `c`.
    pub fn boolean(&self) -> &Option<String> {
        &self.c
    }

    pub fn set_boolean(&mut self, value: Option<String>) {
        self.c = value;
    }
    /// `byte`, sent as `d`.
    pub fn byte(&self) -> &Option<String> {
        &self.d
    }

    pub fn set_byte(&mut self, value: Option<String>) {
        self.d = value;
    }
    /// `character`, sent as `e`.
    pub fn character(&self) -> &Option<String> {
        &self.e
    }

    pub fn set_character(&mut self, value: Option<String>) {
        self.e = value;
    }
    /// `date-time`, sent as `f`.
    pub fn date_time(&self) -> &Option<String> {
        &self.f
    }

    pub fn set_date_time(&mut self, value: Option<String>) {
        self.f = value;
    }
    /// `integer`, sent as `g`.
    pub fn integer(&self) -> &Option<String> {
        &self.g
    }

    pub fn set_integer(&mut self, value: Option<String>) {
        self.g = value;
    }
    /// `ntpstamp`, sent as `h`.
    pub fn ntpstamp(&self) -> &Option<String> {
        &self.h
    }

    pub fn set_ntpstamp(&mut self, value: Option<String>) {
        self.h = value;
    }
    /// `portlist`, sent as `i`.
    pub fn portlist(&self) -> &Option<String> {
        &self.i
    }

    pub fn set_portlist(&mut self, value: Option<String>) {
        self.i = value;
    }
    /// `real`, sent as `j`.
    pub fn real(&self) -> &Option<String> {
        &self.j
    }

    pub fn set_real(&mut self, value: Option<String>) {
        self.j = value;
    }
    /// `string`, sent as `k`.
    pub fn string(&self) -> &Option<String> {
        &self.k
    }

    pub fn set_string(&mut self, value: Option<String>) {
        self.k = value;
    }
    /// `byte-string`, sent as `l`.
    pub fn byte_string(&self) -> &Option<String> {
        &self.l
    }

    pub fn set_byte_string(&mut self, value: Option<String>) {
        self.l = value;
    }
    /// `xmltext`, sent as `m`.
    pub fn xmltext(&self) -> &Option<Box<Xmltext>> {
        &self.m
    }

    pub fn set_xmltext(&mut self, value: Option<Box<Xmltext>>) {
        self.m = value;
    }
}

/// `xmltext`, wire name `s`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Xmltext {
    #[serde(rename = "a", default, skip_serializing_if = "Vec::is_empty")]
    a: Vec<serde_json::Value>,
}

impl Xmltext {
    /// `any`, sent as `a`.
    pub fn any(&self) -> &Vec<serde_json::Value> {
        &self.a
    }

    pub fn set_any(&mut self, value: Vec<serde_json::Value>) {
        self.a = value;
    }
}

/// `Node`, wire name `t`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Node {
    #[serde(rename = "a", default, skip_serializing_if = "Option::is_none")]
    a: Option<String>,
    #[serde(rename = "b", default, skip_serializing_if = "Option::is_none")]
    b: Option<Nodecategory>,
    #[serde(rename = "c", default, skip_serializing_if = "Option::is_none")]
    c: Option<String>,
    #[serde(rename = "d", default, skip_serializing_if = "Option::is_none")]
    d: Option<String>,
    #[serde(rename = "e", default, skip_serializing_if = "Vec::is_empty")]
    e: Vec<Address>,
}

impl Node {
    /// `ident`, sent as `a`.
    pub fn ident(&self) -> &Option<String> {
        &self.a
    }

    pub fn set_ident(&mut self, value: Option<String>) {
        self.a = value;
    }
    /// `category`, sent as `b`.
    pub fn category(&self) -> &Option<Nodecategory> {
        &self.b
    }

    pub fn set_category(&mut self, value: Option<Nodecategory>) {
        self.b = value;
    }
    /// `location`, sent as `c`.
    pub fn location(&self) -> &Option<String> {
        &self.c
    }

    pub fn set_location(&mut self, value: Option<String>) {
        self.c = value;
    }
    /// `name`, sent as `d`.
    pub fn name(&self) -> &Option<String> {
        &self.d
    }

    pub fn set_name(&mut self, value: Option<String>) {
        self.d = value;
    }
    /// `Address`, sent as `e`.
    pub fn address(&self) -> &Vec<Address> {
        &self.e
    }

    pub fn set_address(&mut self, value: Vec<Address>) {
        self.e = value;
    }
}

/// `Address`, wire name `u`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Address {
    #[serde(rename = "a", default, skip_serializing_if = "Option::is_none")]
    a: Option<String>,
    #[serde(rename = "b", default, skip_serializing_if = "Option::is_none")]
    b: Option<Addresscategory>,
    #[serde(rename = "c", default, skip_serializing_if = "Option::is_none")]
    c: Option<String>,
    #[serde(rename = "d", default, skip_serializing_if = "Option::is_none")]
    d: Option<String>,
    #[serde(rename = "e")]
    e: String,
    #[serde(rename = "f", default, skip_serializing_if = "Option::is_none")]
    f: Option<String>,
}

impl Address {
    /// `ident`, sent as `a`.
    pub fn ident(&self) -> &Option<String> {
        &self.a
    }

    pub fn set_ident(&mut self, value: Option<String>) {
        self.a = value;
    }
    /// `category`, sent as `b`.
    pub fn category(&self) -> &Option<Addresscategory> {
        &self.b
    }

    pub fn set_category(&mut self, value: Option<Addresscategory>) {
        self.b = value;
    }
    /// `vlan-name`, sent as `c`.
    pub fn vlan_name(&self) -> &Option<String> {
        &self.c
    }

    pub fn set_vlan_name(&mut self, value: Option<String>) {
        self.c = value;
    }
    /// `vlan-num`, sent as `d`.
    pub fn vlan_num(&self) -> &Option<String> {
        &self.d
    }

    pub fn set_vlan_num(&mut self, value: Option<String>) {
        self.d = value;
    }
    /// `address`, sent as `e`.
    pub fn address(&self) -> &String {
        &self.e
    }

    pub fn set_address(&mut self, value: String) {
        self.e = value;
    }
    /// `netmask`, sent as `f`.
    pub fn netmask(&self) -> &Option<String> {
        &self.f
    }

    pub fn set_netmask(&mut self, value: Option<String>) {
        self.f = value;
    }
}

/// `User`, wire name `v`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct User {
    #[serde(rename = "a", default, skip_serializing_if = "Option::is_none")]
    a: Option<String>,
    #[serde(rename = "b", default, skip_serializing_if = "Option::is_none")]
    b: Option<Usercategory>,
    #[serde(rename = "c", default, skip_serializing_if = "Vec::is_empty")]
    c: Vec<UserId>,
}

impl User {
    /// `ident`, sent as `a`.
    pub fn ident(&self) -> &Option<String> {
        &self.a
    }

    pub fn set_ident(&mut self, value: Option<String>) {
        self.a = value;
    }
    /// `category`, sent as `b`.
    pub fn category(&self) -> &Option<Usercategory> {
        &self.b
    }

    pub fn set_category(&mut self, value: Option<Usercategory>) {
        self.b = value;
    }
    /// `UserId`, sent as `c`.
    pub fn user_id(&self) -> &Vec<UserId> {
        &self.c
    }

    pub fn set_user_id(&mut self, value: Vec<UserId>) {
        self.c = value;
    }
}

/// `UserId`, wire name `w`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct UserId {
    #[serde(rename = "a", default, skip_serializing_if = "Option::is_none")]
    a: Option<String>,
    #[serde(rename = "b", default, skip_serializing_if = "Option::is_none")]
    b: Option<Useridtype>,
    #[serde(rename = "c", default, skip_serializing_if = "Option::is_none")]
    c: Option<String>,
    #[serde(rename = "d", default, skip_serializing_if = "Option::is_none")]
    d: Option<String>,
    #[serde(rename = "e", default, skip_serializing_if = "Option::is_none")]
    e: Option<String>,
}

impl UserId {
    /// `ident`, sent as `a`.
    pub fn ident(&self) -> &Option<String> {
        &self.a
    }

    pub fn set_ident(&mut self, value: Option<String>) {
        self.a = value;
    }
    /// `type`, sent as `b`.
    pub fn r#type(&self) -> &Option<Useridtype> {
        &self.b
    }

    pub fn set_type(&mut self, value: Option<Useridtype>) {
        self.b = value;
    }
    /// `tty`, sent as `c`.
    pub fn tty(&self) -> &Option<String> {
        &self.c
    }

    pub fn set_tty(&mut self, value: Option<String>) {
        self.c = value;
    }
    /// `name`, sent as `d`.
    pub fn name(&self) -> &Option<String> {
        &self.d
    }

    pub fn set_name(&mut self, value: Option<String>) {
        self.d = value;
    }
    /// `number`, sent as `e`.
    pub fn number(&self) -> &Option<String> {
        &self.e
    }

    pub fn set_number(&mut self, value: Option<String>) {
        self.e = value;
    }
}

/// `Process`, wire name `x`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Process {
    #[serde(rename = "a", default, skip_serializing_if = "Option::is_none")]
    a: Option<String>,
    #[serde(rename = "b")]
    b: String,
    #[serde(rename = "c", default, skip_serializing_if = "Option::is_none")]
    c: Option<String>,
    #[serde(rename = "d", default, skip_serializing_if = "Option::is_none")]
    d: Option<String>,
    #[serde(rename = "e", default, skip_serializing_if = "Vec::is_empty")]
    e: Vec<String>,
    #[serde(rename = "f", default, skip_serializing_if = "Vec::is_empty")]
    f: Vec<String>,
}

impl Process {
    /// `ident`, sent as `a`.
    pub fn ident(&self) -> &Option<String> {
        &self.a
    }

    pub fn set_ident(&mut self, value: Option<String>) {
        self.a = value;
    }
    /// `name`, sent as `b`.
    pub fn name(&self) -> &String {
        &self.b
    }

    pub fn set_name(&mut self, value: String) {
        self.b = value;
    }
    /// `pid`, sent as `c`.
    pub fn pid(&self) -> &Option<String> {
        &self.c
    }

    pub fn set_pid(&mut self, value: Option<String>) {
        self.c = value;
    }
    /// `path`, sent as `d`.
    pub fn path(&self) -> &Option<String> {
        &self.d
    }

    pub fn set_path(&mut self, value: Option<String>) {
        self.d = value;
    }
    /// `arg`, sent as `e`.
    pub fn arg(&self) -> &Vec<String> {
        &self.e
    }

    pub fn set_arg(&mut self, value: Vec<String>) {
        self.e = value;
    }
    /// `env`, sent as `f`.
    pub fn env(&self) -> &Vec<String> {
        &self.f
    }

    pub fn set_env(&mut self, value: Vec<String>) {
        self.f = value;
    }
}

/// `Service`, wire name `y`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Service {
    #[serde(rename = "a", default, skip_serializing_if = "Option::is_none")]
    a: Option<String>,
    #[serde(rename = "b", default, skip_serializing_if = "Option::is_none")]
    b: Option<String>,
    #[serde(rename = "c", default, skip_serializing_if = "Option::is_none")]
    c: Option<String>,
    #[serde(rename = "d", default, skip_serializing_if = "Option::is_none")]
    d: Option<String>,
    #[serde(rename = "e", default, skip_serializing_if = "Option::is_none")]
    e: Option<String>,
    #[serde(rename = "f", default, skip_serializing_if = "Option::is_none")]
    f: Option<String>,
    #[serde(rename = "g", default, skip_serializing_if = "Option::is_none")]
    g: Option<String>,
    #[serde(rename = "h", default, skip_serializing_if = "Option::is_none")]
    h: Option<String>,
    #[serde(rename = "i", default, skip_serializing_if = "Option::is_none")]
    i: Option<Box<SnmpService>>,
    #[serde(rename = "j", default, skip_serializing_if = "Option::is_none")]
    j: Option<Box<WebService>>,
}

impl Service {
    /// `ident`, sent as `a`.
    pub fn ident(&self) -> &Option<String> {
        &self.a
    }

    pub fn set_ident(&mut self, value: Option<String>) {
        self.a = value;
    }
    /// `ip_version`, sent as `b`.
    pub fn ip_version(&self) -> &Option<String> {
        &self.b
    }

    pub fn set_ip_version(&mut self, value: Option<String>) {
        self.b = value;
    }
    /// `iana_protocol_number`, sent as `c`.
    pub fn iana_protocol_number(&self) -> &Option<String> {
        &self.c
    }

    pub fn set_iana_protocol_number(&mut self, value: Option<String>) {
        self.c = value;
    }
    /// `iana_protocol_name`, sent as `d`.
    pub fn iana_protocol_name(&self) -> &Option<String> {
        &self.d
    }

    pub fn set_iana_protocol_name(&mut self, value: Option<String>) {
        self.d = value;
    }
    /// `name`, sent as `e`.
    pub fn name(&self) -> &Option<String> {
        &self.e
    }

    pub fn set_name(&mut self, value: Option<String>) {
        self.e = value;
    }
    /// `port`, sent as `f`.
    pub fn port(&self) -> &Option<String> {
        &self.f
    }

    pub fn set_port(&mut self, value: Option<String>) {
        self.f = value;
    }
    /// `portlist`, sent as `g`.
    pub fn portlist(&self) -> &Option<String> {
        &self.g
    }

    pub fn set_portlist(&mut self, value: Option<String>) {
        self.g = value;
    }
    /// `protocol`, sent as `h`.
    pub fn protocol(&self) -> &Option<String> {
        &self.h
    }

    pub fn set_protocol(&mut self, value: Option<String>) {
        self.h = value;
    }
    /// `SNMPService`, sent as `i`.
    pub fn snmp_service(&self) -> &Option<Box<SnmpService>> {
        &self.i
    }

    pub fn set_snmp_service(&mut self, value: Option<Box<SnmpService>>) {
        self.i = value;
    }
    /// `WebService`, sent as `j`.
    pub fn web_service(&self) -> &Option<Box<WebService>> {
        &self.j
    }

    pub fn set_web_service(&mut self, value: Option<Box<WebService>>) {
        self.j = value;
    }
}

/// `WebService`, wire name `z`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct WebService {
    #[serde(rename = "a")]
    a: String,
    #[serde(rename = "b", default, skip_serializing_if = "Option::is_none")]
    b: Option<String>,
    #[serde(rename = "c", default, skip_serializing_if = "Option::is_none")]
    c: Option<String>,
    #[serde(rename = "d", default, skip_serializing_if = "Vec::is_empty")]
    d: Vec<String>,
}

impl WebService {
    /// `url`, sent as `a`.
    pub fn url(&self) -> &String {
        &self.a
    }

    pub fn set_url(&mut self, value: String) {
        self.a = value;
    }
    /// `cgi`, sent as `b`.
    pub fn cgi(&self) -> &Option<String> {
        &self.b
    }

    pub fn set_cgi(&mut self, value: Option<String>) {
        self.b = value;
    }
    /// `http-method`, sent as `c`.
    pub fn http_method(&self) -> &Option<String> {
        &self.c
    }

    pub fn set_http_method(&mut self, value: Option<String>) {
        self.c = value;
    }
    /// `arg`, sent as `d`.
    pub fn arg(&self) -> &Vec<String> {
        &self.d
    }

    pub fn set_arg(&mut self, value: Vec<String>) {
        self.d = value;
    }
}

/// `SNMPService`, wire name `aa`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct SnmpService {
    #[serde(rename = "a", default, skip_serializing_if = "Option::is_none")]
    a: Option<String>,
    #[serde(rename = "b", default, skip_serializing_if = "Option::is_none")]
    b: Option<String>,
    #[serde(rename = "c", default, skip_serializing_if = "Option::is_none")]
    c: Option<String>,
    #[serde(rename = "d", default, skip_serializing_if = "Option::is_none")]
    d: Option<String>,
    #[serde(rename = "e", default, skip_serializing_if = "Option::is_none")]
    e: Option<String>,
    #[serde(rename = "f", default, skip_serializing_if = "Option::is_none")]
    f: Option<String>,
    #[serde(rename = "g", default, skip_serializing_if = "Option::is_none")]
    g: Option<String>,
    #[serde(rename = "h", default, skip_serializing_if = "Option::is_none")]
    h: Option<String>,
}

impl SnmpService {
    /// `oid`, sent as `a`.
    pub fn oid(&self) -> &Option<String> {
        &self.a
    }

    pub fn set_oid(&mut self, value: Option<String>) {
        self.a = value;
    }
    /// `messageProcessingModel`, sent as `b`.
    pub fn message_processing_model(&self) -> &Option<String> {
        &self.b
    }

    pub fn set_message_processing_model(&mut self, value: Option<String>) {
        self.b = value;
    }
    /// `securityModel`, sent as `c`.
    pub fn security_model(&self) -> &Option<String> {
        &self.c
    }

    pub fn set_security_model(&mut self, value: Option<String>) {
        self.c = value;
    }
    /// `securityName`, sent as `d`.
    pub fn security_name(&self) -> &Option<String> {
        &self.d
    }

    pub fn set_security_name(&mut self, value: Option<String>) {
        self.d = value;
    }
    /// `securityLevel`, sent as `e`.
    pub fn security_level(&self) -> &Option<String> {
        &self.e
    }

    pub fn set_security_level(&mut self, value: Option<String>) {
        self.e = value;
    }
    /// `contextName`, sent as `f`.
    pub fn context_name(&self) -> &Option<String> {
        &self.f
    }

    pub fn set_context_name(&mut self, value: Option<String>) {
        self.f = value;
    }
    /// `contextEngineID`, sent as `g`.
    pub fn context_engine_id(&self) -> &Option<String> {
        &self.g
    }

    pub fn set_context_engine_id(&mut self, value: Option<String>) {
        self.g = value;
    }
    /// `command`, sent as `h`.
    pub fn command(&self) -> &Option<String> {
        &self.h
    }

    pub fn set_command(&mut self, value: Option<String>) {
        self.h = value;
    }
}

/// `File`, wire name `ab`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct File {
    #[serde(rename = "a", default, skip_serializing_if = "Option::is_none")]
    a: Option<String>,
    #[serde(rename = "b")]
    b: Filecategory,
    #[serde(rename = "c", default, skip_serializing_if = "Option::is_none")]
    c: Option<String>,
    #[serde(rename = "d", default, skip_serializing_if = "Option::is_none")]
    d: Option<String>,
    #[serde(rename = "e")]
    e: String,
    #[serde(rename = "f")]
    f: String,
    #[serde(rename = "g", default, skip_serializing_if = "Option::is_none")]
    g: Option<String>,
    #[serde(rename = "h", default, skip_serializing_if = "Option::is_none")]
    h: Option<String>,
    #[serde(rename = "i", default, skip_serializing_if = "Option::is_none")]
    i: Option<String>,
    #[serde(rename = "j", default, skip_serializing_if = "Option::is_none")]
    j: Option<String>,
    #[serde(rename = "k", default, skip_serializing_if = "Option::is_none")]
    k: Option<String>,
    #[serde(rename = "l", default, skip_serializing_if = "Vec::is_empty")]
    l: Vec<FileAccess>,
    #[serde(rename = "m", default, skip_serializing_if = "Vec::is_empty")]
    m: Vec<Linkage>,
    #[serde(rename = "n", default, skip_serializing_if = "Option::is_none")]
    n: Option<Box<Inode>>,
    #[serde(rename = "o", default, skip_serializing_if = "Vec::is_empty")]
    o: Vec<Checksum>,
}

impl File {
    /// `ident`, sent as `a`.
    pub fn ident(&self) -> &Option<String> {
        &self.a
    }

    pub fn set_ident(&mut self, value: Option<String>) {
        self.a = value;
    }
    /// `category`, sent as `b`.
    pub fn category(&self) -> &Filecategory {
        &self.b
    }

    pub fn set_category(&mut self, value: Filecategory) {
        self.b = value;
    }
    /// `fstype`, sent as `c`.
    pub fn fstype(&self) -> &Option<String> {
        &self.c
    }

    pub fn set_fstype(&mut self, value: Option<String>) {
        self.c = value;
    }
    /// `file-type`, sent as `d`.
    pub fn file_type(&self) -> &Option<String> {
        &self.d
    }

    pub fn set_file_type(&mut self, value: Option<String>) {
        self.d = value;
    }
    /// `name`, sent as `e`.
    pub fn name(&self) -> &String {
        &self.e
    }

    pub fn set_name(&mut self, value: String) {
        self.e = value;
    }
    /// `path`, sent as `f`.
    pub fn path(&self) -> &String {
        &self.f
    }

    pub fn set_path(&mut self, value: String) {
        self.f = value;
    }
    /// `create-time`, sent as `g`.
    pub fn create_time(&self) -> &Option<String> {
        &self.g
    }

    pub fn set_create_time(&mut self, value: Option<String>) {
        self.g = value;
    }
    /// `modify-time`, sent as `h`.
    pub fn modify_time(&self) -> &Option<String> {
        &self.h
    }

    pub fn set_modify_time(&mut self, value: Option<String>) {
        self.h = value;
    }
    /// `access-time`, sent as `i`.
    pub fn access_time(&self) -> &Option<String> {
        &self.i
    }

    pub fn set_access_time(&mut self, value: Option<String>) {
        self.i = value;
    }
    /// `data-size`, sent as `j`.
    pub fn data_size(&self) -> &Option<String> {
        &self.j
    }

    pub fn set_data_size(&mut self, value: Option<String>) {
        self.j = value;
    }
    /// `disk-size`, sent as `k`.
    pub fn disk_size(&self) -> &Option<String> {
        &self.k
    }

    pub fn set_disk_size(&mut self, value: Option<String>) {
        self.k = value;
    }
    /// `FileAccess`, sent as `l`.
    pub fn file_access(&self) -> &Vec<FileAccess> {
        &self.l
    }

    pub fn set_file_access(&mut self, value: Vec<FileAccess>) {
        self.l = value;
    }
    /// `Linkage`, sent as `m`.
    pub fn linkage(&self) -> &Vec<Linkage> {
        &self.m
    }

    pub fn set_linkage(&mut self, value: Vec<Linkage>) {
        self.m = value;
    }
    /// `Inode`, sent as `n`.
    pub fn inode(&self) -> &Option<Box<Inode>> {
        &self.n
    }

    pub fn set_inode(&mut self, value: Option<Box<Inode>>) {
        self.n = value;
    }
    /// `Checksum`, sent as `o`.
    pub fn checksum(&self) -> &Vec<Checksum> {
        &self.o
    }

    pub fn set_checksum(&mut self, value: Vec<Checksum>) {
        self.o = value;
    }
}

/// `FileAccess`, wire name `ac`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct FileAccess {
    #[serde(rename = "a")]
    a: UserId,
    #[serde(rename = "b", default, skip_serializing_if = "Vec::is_empty")]
    b: Vec<Permission>,
}

impl FileAccess {
    /// `UserId`, sent as `a`.
    pub fn user_id(&self) -> &UserId {
        &self.a
    }

    pub fn set_user_id(&mut self, value: UserId) {
        self.a = value;
    }
    /// `Permission`, sent as `b`.
    pub fn permission(&self) -> &Vec<Permission> {
        &self.b
    }

    pub fn set_permission(&mut self, value: Vec<Permission>) {
        self.b = value;
    }
}

/// `Permission`, wire name `ad`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Permission {
    #[serde(rename = "a")]
    a: Permissiontype,
}

impl Permission {
    /// `perms`, sent as `a`.
    pub fn perms(&self) -> &Permissiontype {
        &self.a
    }

    pub fn set_perms(&mut self, value: Permissiontype) {
        self.a = value;
    }
}

/// `Linkage`, wire name `ae`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Linkage {
    #[serde(rename = "a")]
    a: Linkagecategory,
    #[serde(rename = "b")]
    b: String,
    #[serde(rename = "c")]
    c: String,
    #[serde(rename = "d")]
    d: File,
}

impl Linkage {
    /// `category`, sent as `a`.
    pub fn category(&self) -> &Linkagecategory {
        &self.a
    }

    pub fn set_category(&mut self, value: Linkagecategory) {
        self.a = value;
    }
    /// `name`, sent as `b`.
    pub fn name(&self) -> &String {
        &self.b
    }

    pub fn set_name(&mut self, value: String) {
        self.b = value;
    }
    /// `path`, sent as `c`.
    pub fn path(&self) -> &String {
        &self.c
    }

    pub fn set_path(&mut self, value: String) {
        self.c = value;
    }
    /// `File`, sent as `d`.
    pub fn file(&self) -> &File {
        &self.d
    }

    pub fn set_file(&mut self, value: File) {
        self.d = value;
    }
}

/// `Inode`, wire name `af`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Inode {
    #[serde(rename = "a", default, skip_serializing_if = "Option::is_none")]
    a: Option<String>,
    #[serde(rename = "b", default, skip_serializing_if = "Option::is_none")]
    b: Option<String>,
    #[serde(rename = "c", default, skip_serializing_if = "Option::is_none")]
    c: Option<String>,
    #[serde(rename = "d", default, skip_serializing_if = "Option::is_none")]
    d: Option<String>,
    #[serde(rename = "e", default, skip_serializing_if = "Option::is_none")]
    e: Option<String>,
    #[serde(rename = "f", default, skip_serializing_if = "Option::is_none")]
    f: Option<String>,
}

impl Inode {
    /// `change-time`, sent as `a`.
    pub fn change_time(&self) -> &Option<String> {
        &self.a
    }

    pub fn set_change_time(&mut self, value: Option<String>) {
        self.a = value;
    }
    /// `number`, sent as `b`.
    pub fn number(&self) -> &Option<String> {
        &self.b
    }

    pub fn set_number(&mut self, value: Option<String>) {
        self.b = value;
    }
    /// `major-device`, sent as `c`.
    pub fn major_device(&self) -> &Option<String> {
        &self.c
    }

    pub fn set_major_device(&mut self, value: Option<String>) {
        self.c = value;
    }
    /// `minor-device`, sent as `d`.
    pub fn minor_device(&self) -> &Option<String> {
        &self.d
    }

    pub fn set_minor_device(&mut self, value: Option<String>) {
        self.d = value;
    }
    /// `c-major-device`, sent as `e`.
    pub fn c_major_device(&self) -> &Option<String> {
        &self.e
    }

    pub fn set_c_major_device(&mut self, value: Option<String>) {
        self.e = value;
    }
    /// `c-minor-device`, sent as `f`.
    pub fn c_minor_device(&self) -> &Option<String> {
        &self.f
    }

    pub fn set_c_minor_device(&mut self, value: Option<String>) {
        self.f = value;
    }
}

/// `Checksum`, wire name `ag`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Checksum {
    #[serde(rename = "a")]
    a: Checksumalgorithm,
    #[serde(rename = "b")]
    b: String,
    #[serde(rename = "c", default, skip_serializing_if = "Option::is_none")]
    c: Option<String>,
}

impl Checksum {
    /// `algorithm`, sent as `a`.
    pub fn algorithm(&self) -> &Checksumalgorithm {
        &self.a
    }

    pub fn set_algorithm(&mut self, value: Checksumalgorithm) {
        self.a = value;
    }
    /// `value`, sent as `b`.
    pub fn value(&self) -> &String {
        &self.b
    }

    pub fn set_value(&mut self, value: String) {
        self.b = value;
    }
    /// `key`, sent as `c`.
    pub fn key(&self) -> &Option<String> {
        &self.c
    }

    pub fn set_key(&mut self, value: Option<String>) {
        self.c = value;
    }
}

/// `yesno`; values travel as their index.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Yesno {
    #[default]
    #[serde(rename = "0")]
    Unknown = 0,
    #[serde(rename = "1")]
    Yes = 1,
    #[serde(rename = "2")]
    No = 2,
}

impl Yesno {
    pub fn readable(self) -> &'static str {
        match self {
            Self::Unknown => "unknown",
            Self::Yes => "yes",
            Self::No => "no",
        }
    }
}

/// `nodecategory`; values travel as their index.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Nodecategory {
    #[default]
    #[serde(rename = "0")]
    Unknown = 0,
    #[serde(rename = "1")]
    Ads = 1,
    #[serde(rename = "2")]
    Afs = 2,
    #[serde(rename = "3")]
    Coda = 3,
    #[serde(rename = "4")]
    Dfs = 4,
    #[serde(rename = "5")]
    Dns = 5,
    #[serde(rename = "6")]
    Hosts = 6,
    #[serde(rename = "7")]
    Kerberos = 7,
    #[serde(rename = "8")]
    Nds = 8,
    #[serde(rename = "9")]
    Nis = 9,
    #[serde(rename = "10")]
    Nisplus = 10,
    #[serde(rename = "11")]
    Nt = 11,
    #[serde(rename = "12")]
    Wfw = 12,
}

impl Nodecategory {
    pub fn readable(self) -> &'static str {
        match self {
            Self::Unknown => "unknown",
            Self::Ads => "ads",
            Self::Afs => "afs",
            Self::Coda => "coda",
            Self::Dfs => "dfs",
            Self::Dns => "dns",
            Self::Hosts => "hosts",
            Self::Kerberos => "kerberos",
            Self::Nds => "nds",
            Self::Nis => "nis",
            Self::Nisplus => "nisplus",
            Self::Nt => "nt",
            Self::Wfw => "wfw",
        }
    }
}

/// `addresscategory`; values travel as their index.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Addresscategory {
    #[default]
    #[serde(rename = "0")]
    Unknown = 0,
    #[serde(rename = "1")]
    Atm = 1,
    #[serde(rename = "2")]
    EMail = 2,
    #[serde(rename = "3")]
    LotusNotes = 3,
    #[serde(rename = "4")]
    Mac = 4,
    #[serde(rename = "5")]
    Sna = 5,
    #[serde(rename = "6")]
    Vm = 6,
    #[serde(rename = "7")]
    Ipv4Addr = 7,
    #[serde(rename = "8")]
    Ipv4AddrHex = 8,
    #[serde(rename = "9")]
    Ipv4Net = 9,
    #[serde(rename = "10")]
    Ipv4NetMask = 10,
    #[serde(rename = "11")]
    Ipv6Addr = 11,
    #[serde(rename = "12")]
    Ipv6AddrHex = 12,
    #[serde(rename = "13")]
    Ipv6Net = 13,
    #[serde(rename = "14")]
    Ipv6NetMask = 14,
}

impl Addresscategory {
    pub fn readable(self) -> &'static str {
        match self {
            Self::Unknown => "unknown",
            Self::Atm => "atm",
            Self::EMail => "e-mail",
            Self::LotusNotes => "lotus-notes",
            Self::Mac => "mac",
            Self::Sna => "sna",
            Self::Vm => "vm",
            Self::Ipv4Addr => "ipv4-addr",
            Self::Ipv4AddrHex => "ipv4-addr-hex",
            Self::Ipv4Net => "ipv4-net",
            Self::Ipv4NetMask => "ipv4-net-mask",
            Self::Ipv6Addr => "ipv6-addr",
            Self::Ipv6AddrHex => "ipv6-addr-hex",
            Self::Ipv6Net => "ipv6-net",
            Self::Ipv6NetMask => "ipv6-net-mask",
        }
    }
}

/// `usercategory`; values travel as their index.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Usercategory {
    #[default]
    #[serde(rename = "0")]
    Unknown = 0,
    #[serde(rename = "1")]
    Application = 1,
    #[serde(rename = "2")]
    OsDevice = 2,
}

impl Usercategory {
    pub fn readable(self) -> &'static str {
        match self {
            Self::Unknown => "unknown",
            Self::Application => "application",
            Self::OsDevice => "os-device",
        }
    }
}

/// `useridtype`; values travel as their index.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Useridtype {
    #[default]
    #[serde(rename = "0")]
    CurrentUser = 0,
    #[serde(rename = "1")]
    OriginalUser = 1,
    #[serde(rename = "2")]
    TargetUser = 2,
    #[serde(rename = "3")]
    UserPrivs = 3,
    #[serde(rename = "4")]
    CurrentGroup = 4,
    #[serde(rename = "5")]
    GroupPrivs = 5,
    #[serde(rename = "6")]
    OtherPrivs = 6,
}

impl Useridtype {
    pub fn readable(self) -> &'static str {
        match self {
            Self::CurrentUser => "current-user",
            Self::OriginalUser => "original-user",
            Self::TargetUser => "target-user",
            Self::UserPrivs => "user-privs",
            Self::CurrentGroup => "current-group",
            Self::GroupPrivs => "group-privs",
            Self::OtherPrivs => "other-privs",
        }
    }
}

/// `filecategory`; values travel as their index.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Filecategory {
    #[default]
    #[serde(rename = "0")]
    Current = 0,
    #[serde(rename = "1")]
    Original = 1,
}

impl Filecategory {
    pub fn readable(self) -> &'static str {
        match self {
            Self::Current => "current",
            Self::Original => "original",
        }
    }
}

/// `permissiontype`; values travel as their index.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Permissiontype {
    #[default]
    #[serde(rename = "0")]
    NoAccess = 0,
    #[serde(rename = "1")]
    Read = 1,
    #[serde(rename = "2")]
    Write = 2,
    #[serde(rename = "3")]
    Execute = 3,
    #[serde(rename = "4")]
    Search = 4,
    #[serde(rename = "5")]
    Delete = 5,
    #[serde(rename = "6")]
    ExecuteAs = 6,
    #[serde(rename = "7")]
    ChangePermissions = 7,
    #[serde(rename = "8")]
    TakeOwnership = 8,
}

impl Permissiontype {
    pub fn readable(self) -> &'static str {
        match self {
            Self::NoAccess => "noAccess",
            Self::Read => "read",
            Self::Write => "write",
            Self::Execute => "execute",
            Self::Search => "search",
            Self::Delete => "delete",
            Self::ExecuteAs => "executeAs",
            Self::ChangePermissions => "changePermissions",
            Self::TakeOwnership => "takeOwnership",
        }
    }
}

/// `linkagecategory`; values travel as their index.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Linkagecategory {
    #[default]
    #[serde(rename = "0")]
    HardLink = 0,
    #[serde(rename = "1")]
    MountPoint = 1,
    #[serde(rename = "2")]
    ReparsePoint = 2,
    #[serde(rename = "3")]
    Shortcut = 3,
    #[serde(rename = "4")]
    Stream = 4,
    #[serde(rename = "5")]
    SymbolicLink = 5,
}

impl Linkagecategory {
    pub fn readable(self) -> &'static str {
        match self {
            Self::HardLink => "hard-link",
            Self::MountPoint => "mount-point",
            Self::ReparsePoint => "reparse-point",
            Self::Shortcut => "shortcut",
            Self::Stream => "stream",
            Self::SymbolicLink => "symbolic-link",
        }
    }
}

/// `checksumalgorithm`; values travel as their index.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Checksumalgorithm {
    #[default]
    #[serde(rename = "0")]
    Md4 = 0,
    #[serde(rename = "1")]
    Md5 = 1,
    #[serde(rename = "2")]
    Sha1 = 2,
    #[serde(rename = "3")]
    Sha2256 = 3,
    #[serde(rename = "4")]
    Sha2384 = 4,
    #[serde(rename = "5")]
    Sha2512 = 5,
    #[serde(rename = "6")]
    Crc32 = 6,
    #[serde(rename = "7")]
    Haval = 7,
    #[serde(rename = "8")]
    Tiger = 8,
    #[serde(rename = "9")]
    Gost = 9,
}

impl Checksumalgorithm {
    pub fn readable(self) -> &'static str {
        match self {
            Self::Md4 => "MD4",
            Self::Md5 => "MD5",
            Self::Sha1 => "SHA1",
            Self::Sha2256 => "SHA2-256",
            Self::Sha2384 => "SHA2-384",
            Self::Sha2512 => "SHA2-512",
            Self::Crc32 => "CRC-32",
            Self::Haval => "Haval",
            Self::Tiger => "Tiger",
            Self::Gost => "Gost",
        }
    }
}

/// `impactseverity`; values travel as their index.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Impactseverity {
    #[default]
    #[serde(rename = "0")]
    Info = 0,
    #[serde(rename = "1")]
    Low = 1,
    #[serde(rename = "2")]
    Medium = 2,
    #[serde(rename = "3")]
    High = 3,
}

impl Impactseverity {
    pub fn readable(self) -> &'static str {
        match self {
            Self::Info => "info",
            Self::Low => "low",
            Self::Medium => "medium",
            Self::High => "high",
        }
    }
}

/// `impactcompletion`; values travel as their index.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Impactcompletion {
    #[default]
    #[serde(rename = "0")]
    Failed = 0,
    #[serde(rename = "1")]
    Succeeded = 1,
}

impl Impactcompletion {
    pub fn readable(self) -> &'static str {
        match self {
            Self::Failed => "failed",
            Self::Succeeded => "succeeded",
        }
    }
}

/// `impacttype`; values travel as their index.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Impacttype {
    #[default]
    #[serde(rename = "0")]
    Admin = 0,
    #[serde(rename = "1")]
    Dos = 1,
    #[serde(rename = "2")]
    File = 2,
    #[serde(rename = "3")]
    Recon = 3,
    #[serde(rename = "4")]
    User = 4,
    #[serde(rename = "5")]
    Other = 5,
}

impl Impacttype {
    pub fn readable(self) -> &'static str {
        match self {
            Self::Admin => "admin",
            Self::Dos => "dos",
            Self::File => "file",
            Self::Recon => "recon",
            Self::User => "user",
            Self::Other => "other",
        }
    }
}

/// `actioncategory`; values travel as their index.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Actioncategory {
    #[default]
    #[serde(rename = "0")]
    BlockInstalled = 0,
    #[serde(rename = "1")]
    NotificationSent = 1,
    #[serde(rename = "2")]
    TakenOffline = 2,
    #[serde(rename = "3")]
    Other = 3,
}

impl Actioncategory {
    pub fn readable(self) -> &'static str {
        match self {
            Self::BlockInstalled => "block-installed",
            Self::NotificationSent => "notification-sent",
            Self::TakenOffline => "taken-offline",
            Self::Other => "other",
        }
    }
}

/// `confidencerating`; values travel as their index.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Confidencerating {
    #[default]
    #[serde(rename = "0")]
    Low = 0,
    #[serde(rename = "1")]
    Medium = 1,
    #[serde(rename = "2")]
    High = 2,
    #[serde(rename = "3")]
    Numeric = 3,
}

impl Confidencerating {
    pub fn readable(self) -> &'static str {
        match self {
            Self::Low => "low",
            Self::Medium => "medium",
            Self::High => "high",
            Self::Numeric => "numeric",
        }
    }
}

/// `referenceorigin`; values travel as their index.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Referenceorigin {
    #[default]
    #[serde(rename = "0")]
    Unknown = 0,
    #[serde(rename = "1")]
    VendorSpecific = 1,
    #[serde(rename = "2")]
    UserSpecific = 2,
    #[serde(rename = "3")]
    Bugtraqid = 3,
    #[serde(rename = "4")]
    Cve = 4,
    #[serde(rename = "5")]
    Osvdb = 5,
}

impl Referenceorigin {
    pub fn readable(self) -> &'static str {
        match self {
            Self::Unknown => "unknown",
            Self::VendorSpecific => "vendor-specific",
            Self::UserSpecific => "user-specific",
            Self::Bugtraqid => "bugtraqid",
            Self::Cve => "cve",
            Self::Osvdb => "osvdb",
        }
    }
}

/// `additionaldatatype`; values travel as their index.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Additionaldatatype {
    #[default]
    #[serde(rename = "0")]
    Boolean = 0,
    #[serde(rename = "1")]
    Byte = 1,
    #[serde(rename = "2")]
    Character = 2,
    #[serde(rename = "3")]
    DateTime = 3,
    #[serde(rename = "4")]
    Integer = 4,
    #[serde(rename = "5")]
    Ntpstamp = 5,
    #[serde(rename = "6")]
    Portlist = 6,
    #[serde(rename = "7")]
    Real = 7,
    #[serde(rename = "8")]
    String = 8,
    #[serde(rename = "9")]
    ByteString = 9,
    #[serde(rename = "10")]
    Xmltext = 10,
}

impl Additionaldatatype {
    pub fn readable(self) -> &'static str {
        match self {
            Self::Boolean => "boolean",
            Self::Byte => "byte",
            Self::Character => "character",
            Self::DateTime => "date-time",
            Self::Integer => "integer",
            Self::Ntpstamp => "ntpstamp",
            Self::Portlist => "portlist",
            Self::Real => "real",
            Self::String => "string",
            Self::ByteString => "byte-string",
            Self::Xmltext => "xmltext",
        }
    }
}

/// A whole document, keyed by the wire name of its root element.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum Document {
    #[serde(rename = "a")]
    IdmefMessage(IdmefMessage),
    #[serde(rename = "b")]
    Alert(Alert),
    #[serde(rename = "c")]
    Heartbeat(Heartbeat),
}
