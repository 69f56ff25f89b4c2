//! Serialized shapes of the command outputs and of the mutation input.

use serde::{Deserialize, Serialize};
use serde_json::Number;

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct Element {
    pub dims: Vec<usize>,
    pub shift: i32,
}

#[derive(Serialize, Debug, Clone)]
pub struct CountOut {
    #[serde(rename = "type")]
    pub ty: String,
    pub d: u32,
    pub fuss_catalan: Number,
    pub fuss_catalan_positive: Number,
}

#[derive(Serialize, Debug, Clone)]
pub struct EnumerateOut {
    #[serde(rename = "type")]
    pub ty: String,
    pub d: u32,
    pub kind: String,
    pub count: usize,
    pub sets: Vec<Vec<Element>>,
}

#[derive(Serialize, Debug, Clone)]
pub struct CountsOut {
    pub silting: u64,
    pub smc_minus_window: u64,
    pub smc_plain_window: u64,
    pub sms: u64,
    pub cluster_tilting: u64,
    pub fuss_catalan: u64,
    pub fuss_catalan_positive: u64,
}

#[derive(Serialize, Debug, Clone)]
pub struct CheckOut {
    pub name: String,
    pub pass: bool,
    pub witness: Option<String>,
}

#[derive(Serialize, Debug, Clone)]
pub struct ReportOut {
    #[serde(rename = "type")]
    pub ty: String,
    pub d: u32,
    pub counts: CountsOut,
    pub checks: Vec<CheckOut>,
}

#[derive(Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct MutateIn {
    #[serde(rename = "type")]
    pub ty: String,
    /// 1-based arrows; the default orientation when absent.
    #[serde(default)]
    pub orientation: Option<Vec<[usize; 2]>>,
    pub sequence: Vec<Element>,
    pub operations: Vec<Operation>,
}

#[derive(Deserialize, Serialize, Debug, Clone, Copy, PartialEq, Eq)]
#[serde(tag = "op", rename_all = "snake_case", deny_unknown_fields)]
pub enum Operation {
    /// Left mutation of the pair at `position`, `position + 1` (1-based).
    Left { position: usize },
    Right { position: usize },
    MuRev { sign: SignArg },
}

#[derive(Deserialize, Serialize, Debug, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum SignArg {
    Plus,
    Minus,
}

#[derive(Serialize, Debug, Clone)]
pub struct Step {
    pub operation: Operation,
    pub sequence: Vec<Element>,
}

#[derive(Serialize, Debug, Clone)]
pub struct MutateOut {
    #[serde(rename = "type")]
    pub ty: String,
    pub input: Vec<Element>,
    pub steps: Vec<Step>,
    pub result: Vec<Element>,
}

#[derive(Serialize, Debug, Clone)]
pub struct Node {
    pub id: usize,
    pub dims: Vec<usize>,
    pub shift: i32,
}

#[derive(Serialize, Debug, Clone)]
pub struct ArOut {
    #[serde(rename = "type")]
    pub ty: String,
    pub ambient: String,
    pub d: u32,
    pub nodes: Vec<Node>,
    pub arrows: Vec<[usize; 2]>,
}

#[derive(Serialize, Debug, Clone)]
pub struct Translate {
    pub shift: i32,
    pub id: usize,
}

#[derive(Serialize, Debug, Clone)]
pub struct Indecomposable {
    pub id: usize,
    pub dims: Vec<usize>,
    /// 1-based vertex `v` when this is `P(v)`.
    pub projective: Option<usize>,
    pub injective: Option<usize>,
    pub tau: Option<usize>,
    pub nu: Translate,
}

#[derive(Serialize, Debug, Clone)]
pub struct CatalogOut {
    #[serde(rename = "type")]
    pub ty: String,
    pub arrows: Vec<[usize; 2]>,
    pub indecomposables: Vec<Indecomposable>,
}
