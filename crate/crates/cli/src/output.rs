//! JSON and aligned-text rendering.

use std::io;

use serde::Serialize;
use serde_json::ser::Formatter;
use serde_json::Value;

/// Single-line JSON with `": "` and `", "` between object members and compact arrays.
struct LineFormatter;

impl Formatter for LineFormatter {
    fn begin_object_key<W: ?Sized + io::Write>(&mut self, writer: &mut W, first: bool) -> io::Result<()> {
        if first {
            Ok(())
        } else {
            writer.write_all(b", ")
        }
    }

    fn begin_object_value<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        writer.write_all(b": ")
    }
}

pub fn json_line<T: Serialize>(value: &T) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, LineFormatter);
    value.serialize(&mut ser).expect("serializing to memory");
    String::from_utf8(buf).expect("JSON is UTF-8")
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) => items
            .iter()
            .map(|x| match x {
                Value::Array(_) | Value::Object(_) => None,
                _ => scalar(x),
            })
            .collect::<Option<Vec<_>>>()
            .map(|xs| format!("[{}]", xs.join(", "))),
        Value::Object(_) => None,
    }
}

fn render(v: &Value, indent: usize, out: &mut Vec<String>) {
    let pad = " ".repeat(indent);
    if let Some(s) = scalar(v) {
        out.push(format!("{pad}{s}"));
        return;
    }
    match v {
        Value::Object(map) => {
            let width = map.keys().map(|k| k.chars().count()).max().unwrap_or(0);
            for (k, x) in map {
                match scalar(x) {
                    Some(s) => out.push(format!("{pad}{k:<width$}  {s}")),
                    None => {
                        out.push(format!("{pad}{k}:"));
                        render(x, indent + 2, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                match scalar(x) {
                    Some(s) => out.push(format!("{pad}- {s}")),
                    None => {
                        out.push(format!("{pad}-"));
                        render(x, indent + 2, out);
                    }
                }
            }
        }
        _ => unreachable!("scalars handled above"),
    }
}

/// Human-readable rendering with aligned keys.
pub fn text<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("serializing to a value");
    let mut lines = Vec::new();
    render(&v, 0, &mut lines);
    lines.join("\n")
}
