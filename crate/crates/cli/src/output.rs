use serde_json::{json, Value};

pub const FORMAT_VERSION: &str = "1.0.0";

/// Exit status beside success.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    /// An internal identity did not hold.
    CheckFailed,
    /// A floating-point residual exceeded its tolerance.
    Tolerance,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::CheckFailed => 1,
            Status::Tolerance => 3,
        }
    }
}

pub struct Outcome {
    pub command: String,
    pub params: Value,
    pub payload: Value,
    pub text: String,
    pub status: Status,
}

impl Outcome {
    pub fn new(command: &str, params: Value, payload: Value, text: String) -> Self {
        Outcome { command: command.to_string(), params, payload, text, status: Status::Ok }
    }

    pub fn with_status(mut self, status: Status) -> Self {
        self.status = status;
        self
    }

    pub fn envelope(&self) -> Value {
        json!({
            "command": self.command,
            "params": self.params,
            "format_version": FORMAT_VERSION,
            "payload": self.payload,
        })
    }
}

/// Left-aligned columns separated by two spaces.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let cols = header.len();
    let mut width: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, cell) in width.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| -> String {
        let mut s = String::new();
        for (i, c) in cells.iter().enumerate() {
            s.push_str(c);
            if i + 1 < cols {
                s.push_str(&" ".repeat(width[i] - c.chars().count() + 2));
            }
        }
        s.trim_end().to_string()
    };
    let mut out = line(header.to_vec());
    out.push('\n');
    for r in rows {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aligned_columns() {
        let t = table(&["n", "value"], &[vec!["1".into(), "t1".into()], vec!["10".into(), "x".into()]]);
        assert_eq!(t, "n   value\n1   t1\n10  x\n");
    }
}
