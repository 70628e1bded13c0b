//! Reports: the aggregated check results with a content hash, as JSON or
//! Markdown.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::checks::{CheckResult, Status, SuiteConfig};

/// Witness polynomials longer than this are cut in the Markdown rendering.
pub const MARKDOWN_TERMS: usize = 40;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub config: SuiteConfig,
    pub checks: Vec<CheckResult>,
    pub overall: Status,
    pub hash: String,
}

impl Report {
    /// Overall status is pass iff no check failed; skipped checks do not count.
    pub fn new(config: SuiteConfig, checks: Vec<CheckResult>) -> Report {
        let overall = if checks.iter().any(|c| c.status == Status::Fail) { Status::Fail } else { Status::Pass };
        let mut r = Report { config, checks, overall, hash: String::new() };
        r.hash = r.body_hash();
        r
    }

    /// SHA-256 of the canonical JSON body: sorted keys, no hash field, no
    /// durations.
    pub fn body_hash(&self) -> String {
        let mut body = serde_json::json!({
            "config": self.config,
            "checks": self.checks,
            "overall": self.overall,
        });
        if let Some(checks) = body.get_mut("checks").and_then(|c| c.as_array_mut()) {
            for c in checks {
                if let Some(obj) = c.as_object_mut() {
                    obj.remove("duration_ms");
                }
            }
        }
        let text = serde_json::to_string(&body).expect("serializable report");
        hex::encode(Sha256::digest(text.as_bytes()))
    }

    pub fn passed(&self) -> bool {
        self.overall == Status::Pass
    }

    pub fn check(&self, id: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable report")
    }

    pub fn from_json(text: &str) -> Result<Report, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// Human-readable certificate. `json_link` points at the full report.
    pub fn to_markdown(&self, json_link: Option<&str>) -> String {
        let mut md = String::new();
        md.push_str("# Verification report\n\n");
        md.push_str(&format!("**Overall:** {}  \n", self.overall.as_str()));
        md.push_str(&format!("**Hash:** `{}`\n\n", self.hash));
        if let Some(link) = json_link {
            md.push_str(&format!("Full witnesses: [{link}]({link})\n\n"));
        }
        let c = &self.config;
        let lambda: Vec<String> = c.lambda.iter().map(ToString::to_string).collect();
        md.push_str("## Configuration\n\n| key | value |\n|---|---|\n");
        md.push_str(&format!("| lambda | {} |\n", lambda.join(", ")));
        md.push_str(&format!("| frame | {} |\n", serde_json::to_string(&c.frame).expect("frame")));
        md.push_str(&format!("| order | {} |\n| seed | {} |\n| planes | {} |\n\n", c.order, c.seed, c.planes));
        md.push_str("## Summary\n\n| check | status | ms |\n|---|---|---|\n");
        for r in &self.checks {
            md.push_str(&format!("| `{}` | {} | {} |\n", r.id, r.status.as_str(), r.duration_ms));
        }
        md.push_str("\n## Witnesses\n");
        for r in &self.checks {
            md.push_str(&format!("\n### `{}`: {}\n\n", r.id, r.status.as_str()));
            for w in &r.witnesses {
                md.push_str(&format!("- {}: `{}`\n", w.name, truncate_terms(&w.value, MARKDOWN_TERMS)));
            }
            if !r.notes.is_empty() {
                md.push_str(&format!("\n{}\n", r.notes));
            }
        }
        md.push_str(
            "\n## Scope\n\nThese are exact algebraic certificates of the premises of the two constructions. \
             A certified percolation margin asserts only that the degree inequalities are contradictory; \
             no statement is made about the hyperbolicity of any particular surface or about how small \
             the deformation parameter must be.\n",
        );
        md
    }
}

/// Keeps the first `max` top-level terms of a polynomial string.
pub fn truncate_terms(text: &str, max: usize) -> String {
    let bytes = text.as_bytes();
    let mut depth = 0i32;
    let mut terms = 1;
    for (i, &b) in bytes.iter().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'+' | b'-' if depth == 0 && i > 0 && bytes[i - 1] == b' ' && bytes.get(i + 1) == Some(&b' ') => {
                if terms == max {
                    let rest = 1 + count_terms(&text[i..]);
                    return format!("{} … ({rest} more terms)", text[..i].trim_end());
                }
                terms += 1;
            }
            _ => {}
        }
    }
    text.to_string()
}

fn count_terms(text: &str) -> usize {
    let bytes = text.as_bytes();
    let mut depth = 0i32;
    let mut n = 0;
    for (i, &b) in bytes.iter().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'+' | b'-' if depth == 0 && i > 0 && bytes[i - 1] == b' ' && bytes.get(i + 1) == Some(&b' ') => n += 1,
            _ => {}
        }
    }
    n
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn truncation() {
        let p: Vec<String> = (0..50).map(|i| format!("x^{i}")).collect();
        let text = p.join(" + ");
        let cut = truncate_terms(&text, 40);
        assert!(cut.starts_with("x^0 + x^1"));
        assert!(cut.ends_with("(10 more terms)"));
        assert_eq!(truncate_terms("x - (1 + i)*y", 1), "x … (1 more terms)");
        assert_eq!(truncate_terms("x - y", 40), "x - y");
    }

    #[test]
    fn hash_ignores_durations() {
        let mut c = CheckResult::new("a");
        let r1 = Report::new(SuiteConfig::default(), vec![c.clone()]);
        c.duration_ms = 99;
        let r2 = Report::new(SuiteConfig::default(), vec![c]);
        assert_eq!(r1.hash, r2.hash);
        let back = Report::from_json(&r1.to_json()).unwrap();
        assert_eq!(back, r1);
        assert_eq!(back.body_hash(), r1.hash);
    }
}
