//! Logical file names: the absolute, path-like namespace of the file
//! catalog.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A validated logical file name. Always begins with `/`; every segment is
/// non-empty, matches `[A-Za-z0-9._-]+`, and is neither `.` nor `..`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Lfn(String);

/// Why a string is not a valid LFN.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LfnError {
    #[error("must begin with '/'")]
    NotAbsolute,
    #[error("empty segment")]
    EmptySegment,
    #[error("'.' and '..' segments are not allowed")]
    DotSegment,
    #[error("segment contains a character outside [A-Za-z0-9._-]")]
    BadCharacter,
}

impl Lfn {
    pub fn parse(raw: &str) -> Result<Lfn, LfnError> {
        let rest = raw.strip_prefix('/').ok_or(LfnError::NotAbsolute)?;
        for segment in rest.split('/') {
            if segment.is_empty() {
                return Err(LfnError::EmptySegment);
            }
            if segment == "." || segment == ".." {
                return Err(LfnError::DotSegment);
            }
            if !segment
                .chars()
                .all(|c| c.is_ascii_alphanumeric() || matches!(c, '.' | '_' | '-'))
            {
                return Err(LfnError::BadCharacter);
            }
        }
        Ok(Lfn(raw.to_owned()))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Final segment of the name.
    pub fn basename(&self) -> &str {
        self.0.rsplit('/').next().unwrap_or("")
    }

    /// Path of this LFN relative to `prefix`, when it lies under it.
    pub fn strip_prefix(&self, prefix: &str) -> Option<&str> {
        let rest = self.0.strip_prefix(prefix)?;
        rest.strip_prefix('/').or(if rest.is_empty() { None } else { Some(rest) })
    }
}

impl fmt::Display for Lfn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl TryFrom<String> for Lfn {
    type Error = LfnError;

    fn try_from(value: String) -> Result<Self, Self::Error> {
        Lfn::parse(&value)
    }
}

impl From<Lfn> for String {
    fn from(lfn: Lfn) -> String {
        lfn.0
    }
}
