//! Ring corpora: the built-in default family and a one-spec-per-line file
//! format.

use ringlab_core::{ActionKind, CoreError, RingSpec};

/// One corpus row: construction text (accepted by the spec parser) plus
/// whether the ring runs only in the slow tier.
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub text: String,
    pub spec: RingSpec,
    pub slow: bool,
}

#[derive(Debug, Clone, Default)]
pub struct Corpus {
    pub entries: Vec<CorpusEntry>,
}

impl Corpus {
    /// The entries that participate in a run at the given tier.
    pub fn active(&self, slow: bool) -> Vec<&CorpusEntry> {
        self.entries.iter().filter(|e| slow || !e.slow).collect()
    }
}

fn push(entries: &mut Vec<CorpusEntry>, spec: RingSpec, slow: bool) {
    entries.push(CorpusEntry { text: spec.to_string(), spec, slow });
}

/// The built-in corpus: every modular ring up to order 64, all two-factor
/// products over {Z2, Z3, Z4, Z5, Z8, Z9}, the three-factor products over
/// the same base set up to order 256, and a few quotients and
/// idealizations so every constructor is exercised. With `slow` set it
/// also includes the first-coordinate idealizations of Z8 x Z8 (order 128)
/// and Z8 x Z8 x Z8 (order 1024).
pub fn default_corpus(slow: bool) -> Corpus {
    const BASE: [usize; 6] = [2, 3, 4, 5, 8, 9];
    let mut entries = Vec::new();
    for n in 2..=64 {
        push(&mut entries, RingSpec::Zmod(n), false);
    }
    for (i, &a) in BASE.iter().enumerate() {
        for &b in &BASE[i..] {
            push(
                &mut entries,
                RingSpec::Product(vec![RingSpec::Zmod(a), RingSpec::Zmod(b)]),
                false,
            );
        }
    }
    for (i, &a) in BASE.iter().enumerate() {
        for (j, &b) in BASE[i..].iter().enumerate() {
            for &c in &BASE[i + j..] {
                if a * b * c <= 256 {
                    push(
                        &mut entries,
                        RingSpec::Product(vec![
                            RingSpec::Zmod(a),
                            RingSpec::Zmod(b),
                            RingSpec::Zmod(c),
                        ]),
                        false,
                    );
                }
            }
        }
    }
    push(&mut entries, RingSpec::Quotient(Box::new(RingSpec::Zmod(16)), vec![8]), false);
    push(&mut entries, RingSpec::Quotient(Box::new(RingSpec::Zmod(27)), vec![9]), false);
    push(
        &mut entries,
        RingSpec::Idealization(Box::new(RingSpec::Zmod(8)), ActionKind::Natural, vec![0, 4]),
        false,
    );
    push(
        &mut entries,
        RingSpec::Idealization(Box::new(RingSpec::Zmod(4)), ActionKind::Natural, vec![0, 2]),
        false,
    );
    if slow {
        for factors in [2, 3] {
            push(
                &mut entries,
                RingSpec::Idealization(
                    Box::new(RingSpec::Product(vec![RingSpec::Zmod(8); factors])),
                    ActionKind::FirstFactor,
                    vec![0, 4],
                ),
                true,
            );
        }
    }
    Corpus { entries }
}

/// Parses the one-spec-per-line corpus format: `#` starts a comment, blank
/// lines are skipped, and a whitespace-separated trailing `slow` word marks
/// the entry as slow-tier only.
pub fn parse_corpus(content: &str) -> Result<Corpus, CoreError> {
    let mut entries = Vec::new();
    for (lineno, raw) in content.lines().enumerate() {
        let uncommented = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let mut line = uncommented.trim();
        if line.is_empty() {
            continue;
        }
        let mut slow = false;
        if let Some(rest) = line.strip_suffix("slow") {
            if rest.ends_with(char::is_whitespace) {
                slow = true;
                line = rest.trim_end();
            }
        }
        let spec = RingSpec::parse(line).map_err(|e| match e {
            CoreError::InvalidSpec(msg) => {
                CoreError::InvalidSpec(format!("line {}: {msg}", lineno + 1))
            }
            other => other,
        })?;
        entries.push(CorpusEntry { text: line.to_string(), spec, slow });
    }
    Ok(Corpus { entries })
}
