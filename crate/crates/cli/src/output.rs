use std::io::Write;
use std::path::Path;

use anyhow::Context;
use serde_json::Value;

/// A rendered result ready to be written out.
pub enum Artifact {
    Text(String),
    Json(Value),
}

impl Artifact {
    pub fn render(&self) -> anyhow::Result<String> {
        match self {
            Artifact::Text(s) => Ok(s.clone()),
            Artifact::Json(v) => {
                let mut s = serde_json::to_string_pretty(v)?;
                s.push('\n');
                Ok(s)
            }
        }
    }
}

pub fn emit(artifact: &Artifact, out: Option<&Path>) -> anyhow::Result<()> {
    let text = artifact.render()?;
    match out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

/// Builds CSV text with a header row and `\n` line endings.
pub struct Csv {
    text: String,
}

impl Csv {
    pub fn new(header: &[&str]) -> Self {
        let mut csv = Csv { text: String::new() };
        csv.row(header.iter().copied());
        csv
    }

    pub fn row<I, S>(&mut self, fields: I)
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut first = true;
        for f in fields {
            if !first {
                self.text.push(',');
            }
            first = false;
            push_field(&mut self.text, f.as_ref());
        }
        self.text.push('\n');
    }

    pub fn finish(self) -> Artifact {
        Artifact::Text(self.text)
    }
}

fn push_field(out: &mut String, f: &str) {
    if f.contains([',', '"', '\n']) {
        out.push('"');
        out.push_str(&f.replace('"', "\"\""));
        out.push('"');
    } else {
        out.push_str(f);
    }
}
