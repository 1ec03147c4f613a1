use std::fmt;

/// One failed identity, with the label indices where it fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub identity: String,
    pub indices: Vec<usize>,
    pub detail: String,
}

impl Violation {
    pub fn new(identity: &str, indices: &[usize], detail: impl Into<String>) -> Self {
        Violation {
            identity: identity.to_string(),
            indices: indices.to_vec(),
            detail: detail.into(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.indices.iter().map(|i| i.to_string()).collect();
        write!(f, "{} at ({}): {}", self.identity, idx.join(","), self.detail)
    }
}
