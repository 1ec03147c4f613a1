//! Text tables and tab-separated rows.

use clap::ValueEnum;
use modcat::exactnum::{encode_cyclotomic, Cyclotomic};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Rows,
}

/// Collects output so each command prints in one deterministic pass.
pub struct Out {
    pub format: Format,
    buf: String,
}

impl Out {
    pub fn new(format: Format) -> Self {
        Out {
            format,
            buf: String::new(),
        }
    }

    pub fn text(&self) -> bool {
        self.format == Format::Text
    }

    pub fn line(&mut self, s: impl AsRef<str>) {
        self.buf.push_str(s.as_ref());
        self.buf.push('\n');
    }

    /// A record in row mode; ignored in text mode.
    pub fn row(&mut self, fields: &[String]) {
        if !self.text() {
            self.line(fields.join("\t"));
        }
    }

    /// An aligned table in text mode; ignored in row mode.
    pub fn table(&mut self, header: &[&str], rows: &[Vec<String>]) {
        if !self.text() {
            return;
        }
        let mut width: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
        for r in rows {
            for (w, c) in width.iter_mut().zip(r) {
                *w = (*w).max(c.chars().count());
            }
        }
        let fmt = |cells: Vec<&str>| {
            let padded: Vec<String> = cells
                .iter()
                .zip(&width)
                .map(|(c, w)| format!("{c:<w$}", w = *w))
                .collect();
            padded.join("  ").trim_end().to_string()
        };
        self.line(fmt(header.to_vec()));
        for r in rows {
            self.line(fmt(r.iter().map(String::as_str).collect()));
        }
    }

    pub fn finish(self) -> String {
        self.buf
    }
}

/// `M:[[e,num,den],...]` at the value's minimal conductor `M`.
pub fn encode(x: &Cyclotomic) -> String {
    let x = x.reduced();
    let m = x.conductor();
    let v = encode_cyclotomic(&x, m).expect("own conductor");
    format!("{m}:{}", serde_json::to_string(&v).expect("json"))
}

/// Canonical encoding in row mode, human form in text mode.
pub fn value(out: &Out, x: &Cyclotomic) -> String {
    if out.text() {
        x.reduced().to_string()
    } else {
        encode(x)
    }
}
