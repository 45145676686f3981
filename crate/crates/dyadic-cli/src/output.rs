//! Output plumbing: a sink writing to stdout or `--out`, and the JSONL
//! record shape shared by all subcommands.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use serde_json::{Map, Value};

pub struct Sink {
    inner: Box<dyn Write>,
}

impl Sink {
    pub fn open(out: Option<&PathBuf>) -> io::Result<Sink> {
        let inner: Box<dyn Write> = match out {
            Some(path) => Box::new(BufWriter::new(File::create(path)?)),
            None => Box::new(BufWriter::new(io::stdout())),
        };
        Ok(Sink { inner })
    }

    pub fn line(&mut self, text: impl AsRef<str>) -> io::Result<()> {
        writeln!(self.inner, "{}", text.as_ref())
    }

    pub fn finish(mut self) -> io::Result<()> {
        self.inner.flush()
    }
}

/// One JSONL record: `{"command": …, "params": {…}, "payload": …}` on a
/// single line. Parameter keys are emitted in sorted order.
pub struct Record {
    command: &'static str,
    params: Map<String, Value>,
    payload: Value,
}

impl Record {
    pub fn new(command: &'static str) -> Record {
        Record {
            command,
            params: Map::new(),
            payload: Value::Null,
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Record {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn payload(mut self, payload: impl Into<Value>) -> Record {
        self.payload = payload.into();
        self
    }

    pub fn to_line(&self) -> String {
        serde_json::json!({
            "command": self.command,
            "params": Value::Object(self.params.clone()),
            "payload": self.payload,
        })
        .to_string()
    }
}
