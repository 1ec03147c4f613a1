//! The MDATA file format: JSON with `name`, `conductor`, `labels`, `S`
//! (cyclotomic triples), `T` (exponents) and optional cross-check blocks.

use serde::Deserialize;
use serde_json::Value;

use super::{ModularData, ModularError, ModularParts};
use crate::exactnum::{check_conductor, decode_cyclotomic, encode_cyclotomic, CycMatrix};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    name: String,
    conductor: u64,
    labels: Vec<String>,
    #[serde(rename = "S")]
    s: Vec<Vec<Value>>,
    #[serde(rename = "T")]
    t: Vec<i64>,
    #[serde(default)]
    expected_fusion: Option<Vec<Vec<Vec<u64>>>>,
    #[serde(default)]
    expected_dual: Option<Vec<usize>>,
}

/// Parses a file into unvalidated parts.
pub fn parse_mdata(text: &str) -> Result<ModularParts, ModularError> {
    let raw: RawFile = serde_json::from_str(text).map_err(|e| ModularError::Parse(e.to_string()))?;
    let m = check_conductor(raw.conductor).map_err(|e| ModularError::Conductor(e.to_string()))?;
    let r = raw.labels.len();
    if raw.s.len() != r || raw.s.iter().any(|row| row.len() != r) {
        return Err(ModularError::Parse(format!("S must be {r}x{r}")));
    }
    if raw.t.len() != r {
        return Err(ModularError::Parse(format!("T must have {r} entries")));
    }
    if let Some(e) = raw.t.iter().find(|e| **e < 0 || **e >= m as i64) {
        return Err(ModularError::Conductor(format!(
            "T exponent {e} needs 0 <= e < {m}; conductor too small or entry malformed"
        )));
    }
    let mut rows = Vec::with_capacity(r);
    for (i, row) in raw.s.iter().enumerate() {
        let mut out = Vec::with_capacity(r);
        for (j, v) in row.iter().enumerate() {
            let x = decode_cyclotomic(v, m).map_err(|e| ModularError::Parse(format!("S[{i}][{j}]: {e}")))?;
            out.push(x.lift(m));
        }
        rows.push(out);
    }
    Ok(ModularParts {
        name: raw.name,
        conductor: m,
        labels: raw.labels,
        s: CycMatrix::from_rows(rows),
        t: raw.t,
        expected_fusion: raw.expected_fusion,
        expected_dual: raw.expected_dual,
    })
}

/// Parses and validates.
pub fn load_mdata(text: &str) -> Result<ModularData, ModularError> {
    ModularData::new(parse_mdata(text)?)
}

/// Canonical text form; `parse_mdata` of the output gives back the same data.
pub fn emit_mdata(data: &ModularData) -> String {
    emit_parts(data.parts())
}

pub(crate) fn emit_parts(p: &ModularParts) -> String {
    let json = |v: &Value| serde_json::to_string(v).expect("json values serialize");
    let m = p.conductor;
    let mut out = String::from("{\n");
    out += &format!("  \"name\": {},\n", json(&Value::from(p.name.clone())));
    out += &format!("  \"conductor\": {m},\n");
    let labels: Vec<Value> = p.labels.iter().map(|l| Value::from(l.clone())).collect();
    out += &format!("  \"labels\": {},\n", json(&Value::from(labels)));
    out += "  \"S\": [\n";
    let r = p.labels.len();
    for i in 0..r {
        let row: Vec<String> = p
            .s
            .row(i)
            .iter()
            .map(|x| json(&encode_cyclotomic(x, m).expect("entries live in the conductor")))
            .collect();
        out += &format!("    [{}]{}\n", row.join(", "), if i + 1 < r { "," } else { "" });
    }
    out += "  ],\n";
    let t: Vec<String> = p.t.iter().map(|e| e.to_string()).collect();
    out += &format!("  \"T\": [{}]", t.join(", "));
    if let Some(f) = &p.expected_fusion {
        out += ",\n  \"expected_fusion\": [\n";
        for (a, mat) in f.iter().enumerate() {
            out += &format!(
                "    {}{}\n",
                serde_json::to_string(mat).expect("ints serialize"),
                if a + 1 < f.len() { "," } else { "" }
            );
        }
        out += "  ]";
    }
    if let Some(d) = &p.expected_dual {
        out += &format!(",\n  \"expected_dual\": {}", serde_json::to_string(d).expect("ints serialize"));
    }
    out += "\n}\n";
    out
}
