//! JSON state files: one flat object with the six independent elements.
//!
//! ```json
//! {"rho11": 0.5, "rho22": 0, "rho33": 0, "rho44": 0.5,
//!  "rho14": {"re": 0.5, "im": 0}, "rho23": {"re": 0, "im": 0}}
//! ```

use std::path::Path;

use serde::{Deserialize, Serialize};
use xdiscord::{Complex64, RawElements, XState};

use crate::{write_atomic, CliError};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Coherence {
    pub re: f64,
    pub im: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateFile {
    pub rho11: f64,
    pub rho22: f64,
    pub rho33: f64,
    pub rho44: f64,
    pub rho14: Coherence,
    pub rho23: Coherence,
}

impl StateFile {
    pub fn raw(&self) -> RawElements {
        RawElements {
            rho11: self.rho11,
            rho22: self.rho22,
            rho33: self.rho33,
            rho44: self.rho44,
            rho14: complex(self.rho14),
            rho23: complex(self.rho23),
        }
    }

    pub fn to_state(&self) -> Result<XState, CliError> {
        Ok(XState::new(self.raw())?)
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("plain struct serializes");
        text.push('\n');
        text
    }
}

fn complex(c: Coherence) -> Complex64 {
    Complex64::new(c.re, c.im)
}

impl From<&XState> for StateFile {
    fn from(s: &XState) -> Self {
        StateFile {
            rho11: s.rho11(),
            rho22: s.rho22(),
            rho33: s.rho33(),
            rho44: s.rho44(),
            rho14: Coherence {
                re: s.rho14().re,
                im: s.rho14().im,
            },
            rho23: Coherence {
                re: s.rho23().re,
                im: s.rho23().im,
            },
        }
    }
}

pub fn parse(text: &str, path: &Path) -> Result<StateFile, CliError> {
    serde_json::from_str(text).map_err(|source| CliError::Parse {
        path: path.to_path_buf(),
        source,
    })
}

pub fn read(path: &Path) -> Result<StateFile, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    parse(&text, path)
}

pub fn write(path: &Path, state: &StateFile) -> Result<(), CliError> {
    write_atomic(path, state.to_json().as_bytes())
}
