//! Versioned JSON envelopes. `serde_json` maps are ordered, so keys come out
//! sorted and identical inputs give identical bytes.

use serde::Serialize;
use serde_json::{json, Value};

pub const SCHEMA: &str = "monok/1";

pub fn envelope(command: &str, result: impl Serialize) -> Value {
    let result = serde_json::to_value(result).expect("report types serialize");
    json!({ "schema": SCHEMA, "command": command, "result": result })
}

pub fn render(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("values serialize");
    text.push('\n');
    text
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Serialize)]
    struct Body {
        zeta: u8,
        alpha: u8,
    }

    #[test]
    fn keys_are_sorted_at_every_level() {
        let text = render(&envelope("demo", Body { zeta: 1, alpha: 2 }));
        let pos = |s: &str| text.find(s).unwrap();
        assert!(pos("\"command\"") < pos("\"result\"") && pos("\"result\"") < pos("\"schema\""));
        assert!(pos("\"alpha\"") < pos("\"zeta\""));
        assert!(text.contains("\"schema\": \"monok/1\""));
    }
}
