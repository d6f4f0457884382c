//! Machine-readable verdicts shared by the verification suites and the CLI.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

/// One checked identity: both sides are carried in canonical normal form so
/// failures are diffable.
#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub check: String,
    pub space: String,
    pub orientation: String,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub code: Option<String>,
}

impl Verdict {
    pub fn compare(
        check: impl Into<String>,
        space: impl Into<String>,
        orientation: impl Into<String>,
        lhs: impl std::fmt::Display,
        rhs: impl std::fmt::Display,
        equal: bool,
    ) -> Verdict {
        Verdict {
            check: check.into(),
            space: space.into(),
            orientation: orientation.into(),
            status: if equal { Status::Pass } else { Status::Fail },
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            code: None,
        }
    }

    pub fn error(
        check: impl Into<String>,
        space: impl Into<String>,
        orientation: impl Into<String>,
        err: &crate::error::EngineError,
    ) -> Verdict {
        Verdict {
            check: check.into(),
            space: space.into(),
            orientation: orientation.into(),
            status: Status::Error,
            lhs: String::new(),
            rhs: err.to_string(),
            code: Some(err.code().to_string()),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Summary line for a batch of verdicts.
pub fn summarize(name: &str, verdicts: &[Verdict]) -> String {
    let pass = verdicts.iter().filter(|v| v.passed()).count();
    format!("{name}: {pass}/{} pass", verdicts.len())
}
