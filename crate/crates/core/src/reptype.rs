use serde::{Deserialize, Serialize};
use std::fmt;

/// Representation type of a finite-dimensional algebra.
///
/// The derived order `Finite < Tame < Wild` is the one used for
/// monotonicity checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RepType {
    Finite,
    Tame,
    Wild,
}

impl RepType {
    pub fn as_str(self) -> &'static str {
        match self {
            RepType::Finite => "finite",
            RepType::Tame => "tame",
            RepType::Wild => "wild",
        }
    }
}

impl fmt::Display for RepType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}
