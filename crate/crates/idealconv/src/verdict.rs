//! Three-valued verdicts with replayable certificates.
//!
//! Every definitive answer produced by this crate carries a [`Certificate`]
//! naming the rule that decided it, so a reader (or a test) can replay the
//! decision. `Unknown` answers carry the horizon that was exhausted instead.

use std::fmt;

/// Truth value of a decision that may be undecidable at the configured horizon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Truth {
    True,
    False,
    Unknown,
}

impl Truth {
    pub fn is_true(self) -> bool {
        self == Truth::True
    }

    pub fn is_false(self) -> bool {
        self == Truth::False
    }

    pub fn is_definitive(self) -> bool {
        self != Truth::Unknown
    }
}

impl fmt::Display for Truth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Truth::True => write!(f, "true"),
            Truth::False => write!(f, "false"),
            Truth::Unknown => write!(f, "unknown"),
        }
    }
}

/// Structured text trace of the rule that decided a verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    /// Short identifier of the deciding rule, e.g. `density.exact`.
    pub rule: String,
    /// Free-form detail lines; deterministic content only.
    pub lines: Vec<String>,
}

impl Certificate {
    pub fn new(rule: impl Into<String>) -> Self {
        Certificate {
            rule: rule.into(),
            lines: Vec::new(),
        }
    }

    pub fn line(mut self, line: impl Into<String>) -> Self {
        self.lines.push(line.into());
        self
    }

    pub fn push(&mut self, line: impl Into<String>) {
        self.lines.push(line.into());
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rule {}", self.rule)?;
        for line in &self.lines {
            write!(f, "\n  {line}")?;
        }
        Ok(())
    }
}

/// A decision together with the evidence for it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub truth: Truth,
    /// Horizon reached; meaningful when `truth` is `Unknown`.
    pub horizon: Option<u64>,
    pub certificate: Certificate,
}

impl Verdict {
    pub fn truth(truth: Truth, certificate: Certificate) -> Self {
        Verdict {
            truth,
            horizon: None,
            certificate,
        }
    }

    pub fn yes(certificate: Certificate) -> Self {
        Self::truth(Truth::True, certificate)
    }

    pub fn no(certificate: Certificate) -> Self {
        Self::truth(Truth::False, certificate)
    }

    pub fn unknown(horizon: u64, certificate: Certificate) -> Self {
        Verdict {
            truth: Truth::Unknown,
            horizon: Some(horizon),
            certificate,
        }
    }

    pub fn is_true(&self) -> bool {
        self.truth.is_true()
    }

    pub fn is_false(&self) -> bool {
        self.truth.is_false()
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.truth)?;
        if let Some(h) = self.horizon {
            write!(f, " (horizon {h})")?;
        }
        write!(f, "; {}", self.certificate)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn definitive_verdicts_name_their_rule() {
        let v = Verdict::yes(Certificate::new("fin.finite").line("3 elements"));
        assert!(v.is_true());
        assert_eq!(v.certificate.rule, "fin.finite");
        assert!(v.horizon.is_none());
    }

    #[test]
    fn unknown_carries_horizon() {
        let v = Verdict::unknown(1 << 14, Certificate::new("sampled.horizon"));
        assert_eq!(v.truth, Truth::Unknown);
        assert_eq!(v.horizon, Some(1 << 14));
        let shown = v.to_string();
        assert!(shown.contains("unknown"));
        assert!(shown.contains("16384"));
    }
}
