use serde_json::{json, Map, Value};

use crate::fft::CertReport;
use crate::grp::GroupSpec;
use crate::poly::{Polynomial, SpaceSignature};

/// Output format of a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone)]
struct Field {
    key: &'static str,
    json: Option<Value>,
    text: Option<String>,
}

/// An ordered list of fields rendered either as a JSON object or as aligned
/// `key  value` lines.
#[derive(Debug, Clone, Default)]
pub struct Report {
    fields: Vec<Field>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    /// Header shared by every report.
    pub fn for_setting(spec: &GroupSpec, sig: SpaceSignature) -> Self {
        Self::new()
            .value("group", spec.family().name())
            .value("n", sig.n())
            .value("covectors", sig.covectors())
            .value("vectors", sig.vectors())
    }

    /// A field shown in both formats.
    pub fn value(mut self, key: &'static str, v: impl Into<Value>) -> Self {
        let v = v.into();
        let text = match &v {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        self.fields.push(Field {
            key,
            json: Some(v),
            text: Some(text),
        });
        self
    }

    /// A field with different renderings; `None` hides it from that format.
    pub fn custom(mut self, key: &'static str, json: Option<Value>, text: Option<String>) -> Self {
        self.fields.push(Field { key, json, text });
        self
    }

    pub fn poly(self, key: &'static str, p: &Polynomial) -> Self {
        self.custom(key, Some(poly_json(p)), Some(p.to_string()))
    }

    pub fn polys(self, key: &'static str, ps: &[Polynomial]) -> Self {
        let text = ps.iter().map(ToString::to_string).collect::<Vec<_>>();
        self.custom(
            key,
            Some(Value::Array(ps.iter().map(poly_json).collect())),
            Some(text.join("\n")),
        )
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut map = Map::new();
                for f in &self.fields {
                    if let Some(v) = &f.json {
                        map.insert(f.key.to_string(), v.clone());
                    }
                }
                let mut s = serde_json::to_string_pretty(&Value::Object(map)).expect("valid json");
                s.push('\n');
                s
            }
            Format::Text => {
                let width = self
                    .fields
                    .iter()
                    .filter(|f| f.text.is_some())
                    .map(|f| f.key.len())
                    .max()
                    .unwrap_or(0);
                let mut out = String::new();
                for f in &self.fields {
                    let Some(text) = &f.text else { continue };
                    if text.contains('\n')
                        || (text.is_empty() && f.json.as_ref().is_some_and(Value::is_array))
                    {
                        out.push_str(f.key);
                        out.push('\n');
                        for line in text.lines() {
                            out.push_str("  ");
                            out.push_str(line);
                            out.push('\n');
                        }
                    } else {
                        out.push_str(&format!("{:<width$}  {}\n", f.key, text));
                    }
                }
                out
            }
        }
    }
}

/// `[{"monomial": [["x[1,1]", 2], ...], "coeff": "p/q"}, ...]`, leading term
/// first.
pub fn poly_json(p: &Polynomial) -> Value {
    let sig = p.signature();
    Value::Array(
        p.terms()
            .rev()
            .map(|(m, c)| {
                let powers: Vec<Value> = m
                    .powers()
                    .map(|(v, e)| json!([sig.variable(v).to_string(), e]))
                    .collect();
                json!({ "monomial": powers, "coeff": c.to_string() })
            })
            .collect(),
    )
}

/// The certificate in the fixed field order. `elapsed_ms` is reported as 0
/// unless `timing` is set, so that identical commands give identical bytes.
pub fn cert_report(r: &CertReport, timing: bool) -> Report {
    let elapsed = if timing { r.elapsed_ms as u64 } else { 0 };
    Report::for_setting(&r.group, r.sig)
        .value("degree", r.degree)
        .value("dim_space", r.dim_space)
        .value("dim_kernel", r.dim_kernel)
        .value("dim_span", r.dim_span)
        .custom("free_count", None, Some(r.free_count.to_string()))
        .value("certified", r.certified)
        .value("samples_used", r.samples_used)
        .custom("stabilized", None, Some(r.stabilized.to_string()))
        .value("seed", r.seed)
        .value("elapsed_ms", elapsed)
}
