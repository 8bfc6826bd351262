//! Machine-readable results. Every command emits the same object shape;
//! fields that do not apply are omitted.

use serde::{Deserialize, Serialize};

pub const FINITE: &str = "finite";
pub const INFINITE_OR_UNKNOWN: &str = "infinite_or_unknown";
pub const OK: &str = "ok";
pub const ACCEPTED: &str = "accepted";
pub const REJECTED: &str = "rejected";
pub const ERROR: &str = "error";

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub input: String,
    pub order: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dimension: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub groebner: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub commutative: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub self_injective: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tangent: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub knit_total: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub knit_sequence: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub presentation: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree_cap: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub verdict: String,
}

impl Report {
    pub fn new(command: &str, input: &str, order: &str) -> Self {
        Report {
            command: command.into(),
            input: input.into(),
            order: order.into(),
            verdict: OK.into(),
            ..Default::default()
        }
    }
}
