//! Machine-readable verification results.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::rational::Rational;
use crate::series::{Monomial, Series};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// The first coefficient at which a failed identity check disagrees.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub monomial: Monomial,
    pub expected: Rational,
    pub actual: Rational,
}

/// Outcome of one identity check. A failing report always carries a witness;
/// a passing one never does.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ReportDocument {
    pub identity_name: String,
    pub parameters: BTreeMap<String, String>,
    pub order_checked: u32,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub elapsed_ms: u64,
}

impl ReportDocument {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// One-line rendering, stable apart from the elapsed time.
    pub fn summary_line(&self) -> String {
        let params = self
            .parameters
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ");
        let head = if params.is_empty() {
            format!("{} order={}", self.identity_name, self.order_checked)
        } else {
            format!(
                "{} {} order={}",
                self.identity_name, params, self.order_checked
            )
        };
        match &self.witness {
            None => format!("{head}: {}", self.status),
            Some(w) => format!(
                "{head}: {} at {} (expected {}, got {})",
                self.status, w.monomial, w.expected, w.actual
            ),
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Pass => write!(f, "pass"),
            Status::Fail => write!(f, "fail"),
        }
    }
}

/// Accumulates one identity check and stamps the elapsed time.
pub struct Check {
    name: String,
    parameters: BTreeMap<String, String>,
    started: Instant,
}

impl Check {
    pub fn new(name: &str) -> Self {
        Check {
            name: name.to_string(),
            parameters: BTreeMap::new(),
            started: Instant::now(),
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    pub fn pass(self, order: u32) -> ReportDocument {
        ReportDocument {
            identity_name: self.name,
            parameters: self.parameters,
            order_checked: order,
            status: Status::Pass,
            witness: None,
            elapsed_ms: self.started.elapsed().as_millis() as u64,
        }
    }

    pub fn fail(self, order: u32, witness: Witness) -> ReportDocument {
        ReportDocument {
            identity_name: self.name,
            parameters: self.parameters,
            order_checked: order,
            status: Status::Fail,
            witness: Some(witness),
            elapsed_ms: self.started.elapsed().as_millis() as u64,
        }
    }

    /// Compares `actual` against `expected` through `order` and closes the
    /// check; the witness is the smallest differing monomial.
    pub fn compare(self, expected: &Series, actual: &Series, order: u32) -> ReportDocument {
        match expected.first_difference(actual, order) {
            None => self.pass(order),
            Some((monomial, expected, actual)) => self.fail(
                order,
                Witness {
                    monomial,
                    expected,
                    actual,
                },
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witness_only_on_failure() {
        let s = Series::var(1, 0, 3);
        let r = Check::new("self").compare(&s, &s, 3);
        assert!(r.passed());
        assert!(r.witness.is_none());

        let t = s.scale(&Rational::from_int(2));
        let r = Check::new("scaled").compare(&s, &t, 3);
        assert!(!r.passed());
        let w = r.witness.expect("failing report carries a witness");
        assert_eq!(w.expected, Rational::one());
        assert_eq!(w.actual, Rational::from_int(2));
    }

    #[test]
    fn json_shape() {
        let s = Series::var(1, 0, 2);
        let r = Check::new("id")
            .param("kind", "geometric")
            .compare(&s, &s, 2);
        let v: serde_json::Value =
            serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        assert_eq!(v["status"], "pass");
        assert_eq!(v["parameters"]["kind"], "geometric");
        assert!(v.get("witness").is_none());
    }
}
