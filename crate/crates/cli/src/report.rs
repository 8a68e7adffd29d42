//! Output envelope with byte-stable rendering.
//!
//! Every command emits the same envelope: the command name, the echoed
//! parameters, a list of result rows, and a meta block. JSON is the
//! canonical format; CSV is a projection of the result rows only. Keys keep
//! insertion order and every float is formatted to 12 significant digits, so
//! identical inputs render to identical bytes.

/// Significant digits used for every floating-point cell.
pub const SIG_DIGITS: usize = 12;

/// A JSON value with deterministic rendering.
#[derive(Debug, Clone)]
pub enum Json {
    Null,
    Bool(bool),
    UInt(u64),
    Float(f64),
    Str(String),
    Array(Vec<Json>),
    Object(Vec<(String, Json)>),
}

impl Json {
    fn render_into(&self, out: &mut String, indent: usize) {
        match self {
            Json::Null => out.push_str("null"),
            Json::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
            Json::UInt(u) => out.push_str(&u.to_string()),
            Json::Float(x) => out.push_str(&fmt_sig(*x, SIG_DIGITS)),
            Json::Str(s) => {
                out.push('"');
                for c in s.chars() {
                    match c {
                        '"' => out.push_str("\\\""),
                        '\\' => out.push_str("\\\\"),
                        '\n' => out.push_str("\\n"),
                        '\t' => out.push_str("\\t"),
                        '\r' => out.push_str("\\r"),
                        c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
                        c => out.push(c),
                    }
                }
                out.push('"');
            }
            Json::Array(items) => {
                if items.is_empty() {
                    out.push_str("[]");
                    return;
                }
                out.push_str("[\n");
                for (i, item) in items.iter().enumerate() {
                    out.push_str(&"  ".repeat(indent + 1));
                    item.render_into(out, indent + 1);
                    if i + 1 < items.len() {
                        out.push(',');
                    }
                    out.push('\n');
                }
                out.push_str(&"  ".repeat(indent));
                out.push(']');
            }
            Json::Object(fields) => {
                if fields.is_empty() {
                    out.push_str("{}");
                    return;
                }
                out.push_str("{\n");
                for (i, (key, value)) in fields.iter().enumerate() {
                    out.push_str(&"  ".repeat(indent + 1));
                    out.push('"');
                    out.push_str(key);
                    out.push_str("\": ");
                    value.render_into(out, indent + 1);
                    if i + 1 < fields.len() {
                        out.push(',');
                    }
                    out.push('\n');
                }
                out.push_str(&"  ".repeat(indent));
                out.push('}');
            }
        }
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        self.render_into(&mut out, 0);
        out
    }
}

/// Formats `x` with `sig` significant digits, choosing positional or
/// scientific notation the way `%g` does and trimming trailing zeros.
pub fn fmt_sig(x: f64, sig: usize) -> String {
    assert!(sig >= 1);
    if !x.is_finite() {
        return "null".into();
    }
    if x == 0.0 {
        return "0".into();
    }
    let negative = x < 0.0;
    let formatted = format!("{:.*e}", sig - 1, x.abs());
    let (mantissa, exp_str) = formatted.split_once('e').expect("scientific format");
    let exp: i32 = exp_str.parse().expect("integer exponent");
    let digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    let body = if exp < -4 || exp >= sig as i32 {
        let trimmed = digits.trim_end_matches('0');
        let trimmed = if trimmed.is_empty() { "0" } else { trimmed };
        if trimmed.len() == 1 {
            format!("{trimmed}e{exp}")
        } else {
            format!("{}.{}e{exp}", &trimmed[..1], &trimmed[1..])
        }
    } else if exp >= 0 {
        let split = exp as usize + 1;
        let frac = digits[split..].trim_end_matches('0');
        if frac.is_empty() {
            digits[..split].to_string()
        } else {
            format!("{}.{}", &digits[..split], frac)
        }
    } else {
        let zeros = "0".repeat((-exp - 1) as usize);
        format!("0.{zeros}{}", digits.trim_end_matches('0'))
    };
    if negative {
        format!("-{body}")
    } else {
        body
    }
}

/// One result row: ordered column → value.
pub type Row = Vec<(&'static str, Json)>;

/// The complete report of one command invocation.
#[derive(Debug, Clone)]
pub struct Envelope {
    pub command: &'static str,
    pub parameters: Vec<(&'static str, Json)>,
    pub results: Vec<Row>,
    pub seed: Option<u64>,
    pub n: Option<u64>,
}

impl Envelope {
    pub fn to_json(&self) -> String {
        let params = self
            .parameters
            .iter()
            .map(|(k, v)| (k.to_string(), v.clone()))
            .collect();
        let results = self
            .results
            .iter()
            .map(|row| Json::Object(row.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()))
            .collect();
        let meta = vec![
            ("seed".to_string(), self.seed.map_or(Json::Null, Json::UInt)),
            ("n".to_string(), self.n.map_or(Json::Null, Json::UInt)),
            ("tool_version".to_string(), Json::Str(env!("CARGO_PKG_VERSION").into())),
        ];
        let root = Json::Object(vec![
            ("command".to_string(), Json::Str(self.command.into())),
            ("parameters".to_string(), Json::Object(params)),
            ("results".to_string(), Json::Array(results)),
            ("meta".to_string(), Json::Object(meta)),
        ]);
        let mut text = root.render();
        text.push('\n');
        text
    }

    /// CSV projection of the result rows: a header line of column names
    /// followed by one line per row.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let Some(first) = self.results.first() else {
            return out;
        };
        let header: Vec<&str> = first.iter().map(|(k, _)| *k).collect();
        out.push_str(&header.join(","));
        out.push('\n');
        for row in &self.results {
            let cells: Vec<String> = row
                .iter()
                .map(|(_, v)| match v {
                    Json::Null => String::new(),
                    Json::Bool(b) => b.to_string(),
                    Json::UInt(u) => u.to_string(),
                    Json::Float(x) => fmt_sig(*x, SIG_DIGITS),
                    Json::Str(s) => s.clone(),
                    Json::Array(_) | Json::Object(_) => {
                        unreachable!("nested values do not appear in result rows")
                    }
                })
                .collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }
}
