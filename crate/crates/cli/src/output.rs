use std::io::{self, StdoutLock, Write};

use serde_json::Value;

/// Line-oriented sink: a table row or one JSON object per record.
pub struct Records {
    json: bool,
    out: StdoutLock<'static>,
}

impl Records {
    pub fn stdout(json: bool) -> Self {
        Records {
            json,
            out: io::stdout().lock(),
        }
    }

    pub fn json(&self) -> bool {
        self.json
    }

    /// Writes `text` in table mode, `value` in JSON mode.
    pub fn emit(&mut self, text: impl AsRef<str>, value: Value) -> io::Result<()> {
        if self.json {
            writeln!(self.out, "{value}")
        } else {
            writeln!(self.out, "{}", text.as_ref())
        }
    }

    /// Table-only line (headers, comments); skipped in JSON mode.
    pub fn text(&mut self, line: impl AsRef<str>) -> io::Result<()> {
        if self.json {
            return Ok(());
        }
        writeln!(self.out, "{}", line.as_ref())
    }
}
