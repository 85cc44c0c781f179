//! Reports: a list of named results with pass/fail marks, rendered as
//! plain text or JSON. Nothing here depends on wall-clock time or paths.

use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

#[derive(Clone, Debug, Serialize)]
pub struct Item {
    pub name: String,
    pub value: String,
    pub status: Status,
}

#[derive(Clone, Debug, Serialize)]
pub struct Input {
    pub name: String,
    pub sha256: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Vec<Input>,
    pub items: Vec<Item>,
    pub passed: bool,
}

pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            inputs: Vec::new(),
            items: Vec::new(),
            passed: true,
        }
    }

    pub fn input(&mut self, name: &str, bytes: &[u8]) {
        self.inputs.push(Input {
            name: name.to_string(),
            sha256: digest(bytes),
        });
    }

    pub fn info(&mut self, name: impl Into<String>, value: impl Into<String>) {
        self.items.push(Item {
            name: name.into(),
            value: value.into(),
            status: Status::Info,
        });
    }

    pub fn check(&mut self, name: impl Into<String>, value: impl Into<String>, ok: bool) {
        self.passed &= ok;
        self.items.push(Item {
            name: name.into(),
            value: value.into(),
            status: if ok { Status::Pass } else { Status::Fail },
        });
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("acw {}\n", self.command);
        for i in &self.inputs {
            out.push_str(&format!("input {} sha256:{}\n", i.name, i.sha256));
        }
        let width = self.items.iter().map(|i| i.name.chars().count()).max().unwrap_or(0);
        for item in &self.items {
            let mark = match item.status {
                Status::Pass => "  PASS",
                Status::Fail => "  FAIL",
                Status::Info => "",
            };
            let pad = width - item.name.chars().count();
            out.push_str(&format!("{}{} : {}{}\n", item.name, " ".repeat(pad), item.value, mark));
        }
        out.push_str(if self.passed { "status: PASS\n" } else { "status: FAIL\n" });
        out
    }

    pub fn render_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
