use serde::Serialize;
use serde_json::Value;

use yoneda_core::error::Error;

/// Bumped only when a field is renamed or removed.
pub const SCHEMA_VERSION: &str = "1.0";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum InconclusiveKind {
    WindowTooSmall,
    BoundExceeded,
}

#[derive(Clone, Debug, Serialize)]
pub struct Instance {
    pub file: String,
    pub field: String,
    pub vertices: usize,
    pub arrows: usize,
    pub dim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema_version: &'static str,
    pub check: String,
    pub instance: Instance,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inconclusive: Option<InconclusiveKind>,
    /// Why the verdict is not `pass`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub bounds: Value,
    pub witnesses: Value,
    pub timing_ms: u64,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        match (self.verdict, self.inconclusive) {
            (Verdict::Pass, _) => 0,
            (Verdict::Fail, _) => 3,
            (Verdict::Inconclusive, Some(InconclusiveKind::BoundExceeded)) => 2,
            (Verdict::Inconclusive, _) => 4,
        }
    }
}

/// What a command produced before it is wrapped into a report.
pub struct Outcome {
    pub verdict: Verdict,
    pub inconclusive: Option<InconclusiveKind>,
    pub reason: Option<String>,
    pub bounds: Value,
    pub witnesses: Value,
}

impl Outcome {
    pub fn new(passed: bool, bounds: Value, witnesses: Value) -> Self {
        let verdict = if passed { Verdict::Pass } else { Verdict::Fail };
        Outcome {
            verdict,
            inconclusive: None,
            reason: None,
            bounds,
            witnesses,
        }
    }

    pub fn with_reason(mut self, reason: impl Into<String>) -> Self {
        if self.verdict != Verdict::Pass {
            self.reason = Some(reason.into());
        }
        self
    }

    pub fn inconclusive(kind: InconclusiveKind, reason: String, bounds: Value) -> Self {
        Outcome {
            verdict: Verdict::Inconclusive,
            inconclusive: Some(kind),
            reason: Some(reason),
            bounds,
            witnesses: Value::Object(Default::default()),
        }
    }

    pub fn with_witnesses(mut self, witnesses: Value) -> Self {
        self.witnesses = witnesses;
        self
    }

    /// Library errors become verdicts: resource limits are inconclusive,
    /// infinite global dimension and everything else is a failure.
    pub fn from_error(e: &Error, bounds: Value) -> Self {
        match e {
            Error::WindowTooSmall(m) => Outcome::inconclusive(
                InconclusiveKind::WindowTooSmall,
                format!("{m}; enlarge the window with --window LO..HI"),
                bounds,
            ),
            Error::BoundExceeded { .. } => Outcome::inconclusive(InconclusiveKind::BoundExceeded, e.to_string(), bounds),
            Error::InfiniteGlobalDimension(n) => Outcome::new(false, bounds, Value::Object(Default::default())).with_reason(
                format!("no finite projective resolution of the simples within {n} steps; the algebra is treated as having infinite global dimension"),
            ),
            _ => Outcome::new(false, bounds, Value::Object(Default::default())).with_reason(e.to_string()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn report(o: Outcome) -> Report {
        Report {
            schema_version: SCHEMA_VERSION,
            check: "t".into(),
            instance: Instance {
                file: "f".into(),
                field: "Q".into(),
                vertices: 0,
                arrows: 0,
                dim: 0,
            },
            verdict: o.verdict,
            inconclusive: o.inconclusive,
            reason: o.reason,
            bounds: o.bounds,
            witnesses: o.witnesses,
            timing_ms: 0,
        }
    }

    #[test]
    fn exit_codes_follow_the_contract() {
        assert_eq!(
            report(Outcome::new(true, json!({}), json!({}))).exit_code(),
            0
        );
        assert_eq!(
            report(Outcome::new(false, json!({}), json!({}))).exit_code(),
            3
        );
        let small = Outcome::from_error(&Error::WindowTooSmall("x".into()), json!({}));
        assert_eq!(report(small).exit_code(), 4);
        let big = Outcome::from_error(
            &Error::BoundExceeded {
                what: "n".into(),
                limit: 1,
            },
            json!({}),
        );
        assert_eq!(report(big).exit_code(), 2);
        assert_eq!(
            report(Outcome::from_error(
                &Error::InfiniteGlobalDimension(3),
                json!({})
            ))
            .exit_code(),
            3
        );
    }

    #[test]
    fn pass_has_no_reason() {
        let r = report(Outcome::new(true, json!({}), json!({})).with_reason("unused"));
        let v = serde_json::to_value(&r).unwrap();
        assert!(v.get("reason").is_none() && v.get("inconclusive").is_none());
    }
}
