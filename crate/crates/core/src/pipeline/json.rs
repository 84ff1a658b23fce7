use serde::Serialize;

pub const SCHEMA: &str = "burniat-report/1";

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    schema: &'static str,
    command: &'a str,
    passed: bool,
    result: &'a T,
}

/// Pretty-printed JSON with a fixed field order, so identical inputs give
/// identical bytes.
pub fn render_json<T: Serialize>(command: &str, passed: bool, result: &T) -> String {
    serde_json::to_string_pretty(&Envelope { schema: SCHEMA, command, passed, result })
        .expect("report types serialize")
}
