//! The swap-log file format.
//!
//! One swap per line, two positive integers separated by whitespace, in
//! the order the swaps happened. `#` starts a comment; blank lines are
//! ignored.
//!
//! ```text
//! # body pairs, first swap first
//! 3 6
//! 3 7
//! ```

use std::fs;
use std::path::Path;

use mindswap_core::{Label, SwapSequence, Transposition};

use crate::CliError;

/// A parsed swap log, remembering the source line of every swap so errors
/// and verdicts can point back into the file.
pub struct SwapLog {
    swaps: Vec<Transposition>,
    lines: Vec<usize>,
}

impl SwapLog {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut swaps = Vec::new();
        let mut lines = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let mut tokens = content.split_whitespace();
            let (a, b) = match (tokens.next(), tokens.next(), tokens.next()) {
                (Some(a), Some(b), None) => (a, b),
                _ => {
                    return Err(CliError::Usage(format!(
                        "line {line_no}: expected exactly two labels, got '{content}'"
                    )))
                }
            };
            let parse = |s: &str| -> Result<Label, CliError> {
                let l: Label = s.parse().map_err(|_| {
                    CliError::Usage(format!("line {line_no}: '{s}' is not a positive integer"))
                })?;
                if l == 0 {
                    return Err(CliError::Usage(format!("line {line_no}: labels start at 1")));
                }
                Ok(l)
            };
            let (a, b) = (parse(a)?, parse(b)?);
            if a == b {
                return Err(CliError::Usage(format!(
                    "line {line_no}: a body cannot swap with itself"
                )));
            }
            swaps.push(Transposition::new(a, b));
            lines.push(line_no);
        }
        Ok(SwapLog { swaps, lines })
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
        SwapLog::parse(&text)
    }

    pub fn len(&self) -> usize {
        self.swaps.len()
    }

    /// Source line of the `index`-th swap.
    pub fn line_of(&self, index: usize) -> usize {
        self.lines[index]
    }

    pub fn to_sequence(&self) -> SwapSequence {
        SwapSequence::chronological(self.swaps.clone())
    }
}
