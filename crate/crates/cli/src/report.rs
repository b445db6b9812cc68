use std::collections::BTreeMap;
use std::time::Instant;

use grassmann_pentagon::gaussian::FormMatrix;
use grassmann_pentagon::{GrassmannElement, ModPoint, Ring};
use serde_json::{json, Map, Value};

use crate::args::Output;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Verified,
    Failed,
    /// Informational output with nothing to verify.
    Info,
}

impl Status {
    pub fn from_check(ok: bool) -> Self {
        if ok {
            Status::Verified
        } else {
            Status::Failed
        }
    }
}

/// A finished command: a text body, a structured body and an exit status.
pub struct Report {
    command: &'static str,
    config: Map<String, Value>,
    lines: Vec<String>,
    result: Map<String, Value>,
    status: Status,
    elapsed: Option<f64>,
}

impl Report {
    pub fn new(command: &'static str, config: Map<String, Value>) -> Self {
        Report {
            command,
            config,
            lines: Vec::new(),
            result: Map::new(),
            status: Status::Info,
            elapsed: None,
        }
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    pub fn set(&mut self, key: &str, v: Value) {
        self.result.insert(key.to_string(), v);
    }

    pub fn status(&mut self, status: Status) {
        self.status = status;
    }

    pub fn finish(mut self, start: Instant, timings: bool) -> Self {
        if timings {
            self.elapsed = Some(start.elapsed().as_secs_f64());
        }
        self
    }

    pub fn exit_code(&self) -> u8 {
        match self.status {
            Status::Verified | Status::Info => 0,
            Status::Failed => 1,
        }
    }

    pub fn render(&self, output: Output) -> String {
        match output {
            Output::Text => self.render_text(),
            Output::Structured => self.render_structured(),
        }
    }

    fn render_text(&self) -> String {
        let mut out = format!("command: {}\n", self.command);
        for (k, v) in &self.config {
            out.push_str(&format!("{k}: {}\n", plain(v)));
        }
        for l in &self.lines {
            out.push_str(l);
            out.push('\n');
        }
        match self.status {
            Status::Verified => out.push_str("status: verified\n"),
            Status::Failed => out.push_str("status: FAILED\n"),
            Status::Info => {}
        }
        if let Some(t) = self.elapsed {
            out.push_str(&format!("time: {t:.3} s\n"));
        }
        out
    }

    fn render_structured(&self) -> String {
        let mut doc = Map::new();
        doc.insert("command".into(), json!(self.command));
        doc.insert("config".into(), Value::Object(self.config.clone()));
        doc.insert("result".into(), Value::Object(self.result.clone()));
        let status = match self.status {
            Status::Verified => json!("verified"),
            Status::Failed => json!("failed"),
            Status::Info => Value::Null,
        };
        doc.insert("status".into(), status);
        if let Some(t) = self.elapsed {
            doc.insert("timings".into(), json!({ "total_seconds": t }));
        }
        let mut s = serde_json::to_string_pretty(&Value::Object(doc)).expect("serializable report");
        s.push('\n');
        s
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(plain).collect::<Vec<_>>().join(","),
        other => other.to_string(),
    }
}

/// `3:20, 5:4`, or `none` for the zero element.
pub fn degrees_text(d: &BTreeMap<usize, usize>) -> String {
    if d.is_empty() {
        return "none".into();
    }
    d.iter()
        .map(|(k, n)| format!("{k}:{n}"))
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn degrees_json(d: &BTreeMap<usize, usize>) -> Value {
    Value::Object(d.iter().map(|(k, n)| (k.to_string(), json!(n))).collect())
}

/// `(monomial, coefficient)` pairs of the first `limit` terms.
pub fn terms<R: Ring>(x: &GrassmannElement<R>, limit: usize) -> Vec<(String, String)> {
    x.terms()
        .take(limit)
        .map(|(m, c)| (m.to_string(), x.ring().render(c)))
        .collect()
}

pub fn terms_json(terms: &[(String, String)]) -> Value {
    Value::Array(
        terms
            .iter()
            .map(|(m, c)| json!({ "monomial": m, "coefficient": c }))
            .collect(),
    )
}

pub fn matrix_json<R: Ring>(m: &FormMatrix<R>) -> Value {
    let ring = m.ring();
    json!({
        "rows": m.rows().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
        "cols": m.cols().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
        "entries": m.grid().iter()
            .map(|row| row.iter().map(|e| ring.render(e)).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    })
}

pub fn point_text(p: &ModPoint) -> String {
    let z: Vec<String> = p.zeta.iter().map(|v| v.to_string()).collect();
    format!("z=({}) lambda={} mu={}", z.join(","), p.lambda, p.mu)
}

pub fn point_json(p: &ModPoint) -> Value {
    json!({ "zeta": p.zeta, "lambda": p.lambda, "mu": p.mu })
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
