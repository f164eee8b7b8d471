use std::fmt;

use crate::GlobalOpts;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    VerificationFailed,
    Exhausted,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::VerificationFailed => 1,
            Status::Exhausted => 3,
        }
    }
}

/// Command echo, parameters, result lines and a final status line.
#[derive(Debug, Clone)]
pub struct Report {
    pub command: String,
    pub opts: GlobalOpts,
    pub lines: Vec<String>,
    pub status: Status,
}

impl Report {
    pub fn new(command: &str, opts: GlobalOpts) -> Report {
        Report {
            command: command.to_string(),
            opts,
            lines: Vec::new(),
            status: Status::Ok,
        }
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    pub fn block(&mut self, text: &str) {
        self.lines.extend(text.lines().map(String::from));
    }

    /// Keeps the worst status seen.
    pub fn mark(&mut self, status: Status) {
        let rank = |s: Status| match s {
            Status::Ok => 0,
            Status::Exhausted => 1,
            Status::VerificationFailed => 2,
        };
        if rank(status) > rank(self.status) {
            self.status = status;
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let o = &self.opts;
        writeln!(f, "command: {}", self.command)?;
        writeln!(
            f,
            "params: radius={} cutoff={} depth={} cap={} seed={}",
            o.radius, o.cutoff, o.depth, o.cap, o.seed
        )?;
        for l in &self.lines {
            writeln!(f, "{l}")?;
        }
        let status = match self.status {
            Status::Ok => "ok",
            Status::VerificationFailed => "verification-failed",
            Status::Exhausted => "resource-exhausted",
        };
        writeln!(f, "status: {status}")
    }
}
