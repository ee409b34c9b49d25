//! The JSON line schema shared by `encode`, `decode` and `enumerate`.

use decindex::{reconstruct, BigIndex, BigTuple, BigUint, Mode};
use serde::{Deserialize, Serialize};

/// One output object. Big numbers are quoted numerals so consumers with
/// 64-bit number types read them intact. `value` is null when rendering
/// would exceed the render budget.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub index: String,
    pub sign: i8,
    pub n1: String,
    pub n2: String,
    pub n3: String,
    pub value: Option<String>,
    pub complexity: String,
    pub position: String,
    pub strict_canonical: bool,
}

impl Record {
    pub fn new(mode: Mode, index: &BigIndex, tuple: &BigTuple, max_render_digits: usize) -> Record {
        let located = mode.locate(index);
        Record {
            index: index.to_string(),
            sign: tuple.sign().as_i8(),
            n1: tuple.n1().to_string(),
            n2: tuple.n2().to_string(),
            n3: tuple.n3().to_string(),
            value: reconstruct(tuple, max_render_digits).ok(),
            complexity: located.level.to_string(),
            position: located.position.to_string(),
            strict_canonical: tuple.is_strict_canonical(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }

    pub fn index_value(&self) -> Option<BigUint> {
        self.index.parse().ok()
    }
}

/// Error line emitted in place of a record in JSON batch output.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ErrorRecord {
    pub line: usize,
    pub error: String,
    pub exit_code: i32,
}
