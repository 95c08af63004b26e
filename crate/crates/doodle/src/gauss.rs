//! Signed Gauss codes: parsing, validation, canonical forms, and the
//! monogon/bigon rewriting moves.
//!
//! A code is stored as one linearization of its cyclic word. The stored
//! order is meaningful: the sign of a crossing says how the strand of the
//! *second* visit crosses the strand of the *first* visit (`+1` = left to
//! right), and "first" refers to the stored traversal order. Rotating the
//! stored word while keeping the signs (which is what [`SignedGaussCode::normalize`]
//! does) produces a code we treat as equal, but it generally describes a
//! different embedded curve; [`SignedGaussCode::rotate_basepoint`] is the
//! rotation that preserves the curve, flipping the sign of every crossing
//! whose visits it reorders. All invariant computations in the other modules
//! read the stored order directly.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// Sign of a crossing: `Plus` when the second-visit strand crosses the
/// first-visit strand from left to right.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn from_value(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+1"),
            Sign::Minus => write!(f, "-1"),
        }
    }
}

/// Errors raised while reading or editing a code. Token numbers are 1-based
/// over the token stream of the document (word tokens, then `|`, then one
/// token per sign entry).
#[derive(Debug, Error, PartialEq, Eq)]
pub enum CodeError {
    #[error("token {token}: label `{label}` appears more than twice")]
    LabelBeyondTwice { label: String, token: usize },
    #[error("token {token}: label `{label}` appears only once")]
    LabelAppearsOnce { label: String, token: usize },
    #[error("missing sign for label `{label}`")]
    MissingSign { label: String },
    #[error("sign given for label `{label}` that is not in the word")]
    SignForUnknownLabel { label: String },
    #[error("token {token}: duplicate sign for label `{label}`")]
    DuplicateSign { label: String, token: usize },
    #[error("token {token}: empty label")]
    EmptyToken { token: usize },
    #[error("token {token}: label `{label}` contains a reserved character")]
    ReservedChar { label: String, token: usize },
    #[error("token {token}: malformed sign entry `{text}` (expected `label=+1` or `label=-1`)")]
    MalformedSign { text: String, token: usize },
    #[error("token {token}: unexpected `|`")]
    UnexpectedPipe { token: usize },
    #[error("unknown label `{label}`")]
    UnknownLabel { label: String },
    #[error("position {position} out of range (word has {len} slots)")]
    InvalidPosition { position: usize, len: usize },
    #[error("move site is stale: the word no longer matches it")]
    StaleMoveSite,
    #[error("invalid json document: {0}")]
    Json(String),
}

/// Kind of a reduction move site.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MoveKind {
    Monogon,
    Bigon,
}

/// A place in the word where a monogon or bigon move applies.
///
/// For a monogon, `positions` holds the two cyclically adjacent occurrences
/// of the single label. For a bigon, it holds `[p, p+1, q, q+1]`: two
/// disjoint adjacent pairs, each containing one occurrence of each of the
/// two labels, whose signs are opposite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveSite {
    pub kind: MoveKind,
    pub labels: Vec<String>,
    pub positions: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct CodeDoc {
    word: Vec<String>,
    signs: BTreeMap<String, i64>,
}

/// A validated signed Gauss code. `n = 0` (the trivial doodle) is legal.
///
/// Labels are interned in order of first appearance; positions index the
/// stored linearization of the cyclic word.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedGaussCode {
    word: Vec<u32>,
    labels: Vec<String>,
    signs: Vec<Sign>,
    occ: Vec<[usize; 2]>,
}

/// Canonical label names used by `normalize` and the corpus generator:
/// `a`..`z`, then `aa`, `ab`, ...
pub fn canonical_label(mut i: usize) -> String {
    let mut out = Vec::new();
    loop {
        out.push(b'a' + (i % 26) as u8);
        i /= 26;
        if i == 0 {
            break;
        }
        i -= 1;
    }
    out.reverse();
    String::from_utf8(out).unwrap()
}

const RESERVED: &[char] = &['=', ',', '|', '#'];

impl SignedGaussCode {
    /// The empty code (trivial doodle).
    pub fn empty() -> Self {
        SignedGaussCode {
            word: Vec::new(),
            labels: Vec::new(),
            signs: Vec::new(),
            occ: Vec::new(),
        }
    }

    /// Build a code from a word of label names and a sign per label.
    pub fn from_parts(
        word: &[&str],
        signs: &BTreeMap<String, Sign>,
    ) -> Result<Self, CodeError> {
        let mut label_ids: BTreeMap<&str, u32> = BTreeMap::new();
        let mut labels: Vec<String> = Vec::new();
        let mut ids: Vec<u32> = Vec::with_capacity(word.len());
        let mut occ: Vec<Vec<usize>> = Vec::new();
        for (pos, name) in word.iter().enumerate() {
            let token = pos + 1;
            if name.is_empty() {
                return Err(CodeError::EmptyToken { token });
            }
            if name.chars().any(|c| RESERVED.contains(&c) || c.is_whitespace()) {
                return Err(CodeError::ReservedChar {
                    label: name.to_string(),
                    token,
                });
            }
            let id = *label_ids.entry(name).or_insert_with(|| {
                labels.push(name.to_string());
                occ.push(Vec::new());
                (labels.len() - 1) as u32
            });
            if occ[id as usize].len() == 2 {
                return Err(CodeError::LabelBeyondTwice {
                    label: name.to_string(),
                    token,
                });
            }
            occ[id as usize].push(pos);
            ids.push(id);
        }
        for (id, positions) in occ.iter().enumerate() {
            if positions.len() != 2 {
                // The defect is only established once the whole word has
                // been read, so point at its last token.
                return Err(CodeError::LabelAppearsOnce {
                    label: labels[id].clone(),
                    token: word.len(),
                });
            }
        }
        let mut sign_vec = Vec::with_capacity(labels.len());
        for name in &labels {
            match signs.get(name) {
                Some(s) => sign_vec.push(*s),
                None => return Err(CodeError::MissingSign { label: name.clone() }),
            }
        }
        for name in signs.keys() {
            if !label_ids.contains_key(name.as_str()) {
                return Err(CodeError::SignForUnknownLabel { label: name.clone() });
            }
        }
        Ok(SignedGaussCode {
            word: ids,
            labels,
            signs: sign_vec,
            occ: occ.into_iter().map(|v| [v[0], v[1]]).collect(),
        })
    }

    /// Parse the text format: `<word> | <label>=<sign>(, <label>=<sign>)*`
    /// with `#` starting a comment line. An empty document is the trivial
    /// doodle.
    pub fn parse(text: &str) -> Result<Self, CodeError> {
        let mut content = String::new();
        for line in text.lines() {
            let line = match line.find('#') {
                Some(i) => &line[..i],
                None => line,
            };
            content.push_str(line);
            content.push(' ');
        }
        let (word_part, sign_part, pipe_seen) = match content.find('|') {
            Some(i) => {
                let rest = &content[i + 1..];
                if let Some(j) = rest.find('|') {
                    let word_tokens = content[..i].split_whitespace().count();
                    let extra = rest[..j].split(',').count();
                    return Err(CodeError::UnexpectedPipe {
                        token: word_tokens + 1 + extra,
                    });
                }
                (&content[..i], rest, true)
            }
            None => (content.as_str(), "", false),
        };
        let word: Vec<&str> = word_part.split_whitespace().collect();
        let word_tokens = word.len();
        let mut signs: BTreeMap<String, Sign> = BTreeMap::new();
        let mut entry_token = word_tokens + if pipe_seen { 1 } else { 0 };
        for raw in sign_part.split(',') {
            let entry = raw.trim();
            if entry.is_empty() {
                continue;
            }
            entry_token += 1;
            let (label, sign_text) = match entry.split_once('=') {
                Some((l, s)) => (l.trim(), s.trim()),
                None => {
                    return Err(CodeError::MalformedSign {
                        text: entry.to_string(),
                        token: entry_token,
                    })
                }
            };
            if label.is_empty() {
                return Err(CodeError::EmptyToken { token: entry_token });
            }
            let sign = match sign_text {
                "+1" => Sign::Plus,
                "-1" | "\u{2212}1" => Sign::Minus,
                _ => {
                    return Err(CodeError::MalformedSign {
                        text: entry.to_string(),
                        token: entry_token,
                    })
                }
            };
            if signs.insert(label.to_string(), sign).is_some() {
                return Err(CodeError::DuplicateSign {
                    label: label.to_string(),
                    token: entry_token,
                });
            }
        }
        Self::from_parts(&word, &signs)
    }

    /// Render the text format. Signs are listed in first-appearance order.
    pub fn to_text(&self) -> String {
        if self.is_empty() {
            return String::new();
        }
        let word = self
            .word
            .iter()
            .map(|&id| self.labels[id as usize].as_str())
            .collect::<Vec<_>>()
            .join(" ");
        let signs = self
            .labels
            .iter()
            .zip(&self.signs)
            .map(|(l, s)| format!("{l}={s}"))
            .collect::<Vec<_>>()
            .join(", ");
        format!("{word} | {signs}")
    }

    /// Parse the structured (JSON) form `{"word": [...], "signs": {...}}`.
    pub fn from_json(text: &str) -> Result<Self, CodeError> {
        let doc: CodeDoc =
            serde_json::from_str(text).map_err(|e| CodeError::Json(e.to_string()))?;
        let mut signs = BTreeMap::new();
        for (label, v) in doc.signs {
            match Sign::from_value(v) {
                Some(s) => {
                    signs.insert(label, s);
                }
                None => {
                    return Err(CodeError::Json(format!(
                        "sign for `{label}` must be +1 or -1, got {v}"
                    )))
                }
            }
        }
        let word: Vec<&str> = doc.word.iter().map(|s| s.as_str()).collect();
        Self::from_parts(&word, &signs)
    }

    /// Render the structured (JSON) form; deterministic key order.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).unwrap()
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let doc = CodeDoc {
            word: self
                .word
                .iter()
                .map(|&id| self.labels[id as usize].clone())
                .collect(),
            signs: self
                .labels
                .iter()
                .zip(&self.signs)
                .map(|(l, s)| (l.clone(), s.value()))
                .collect(),
        };
        serde_json::to_value(doc).unwrap()
    }

    pub fn crossing_count(&self) -> usize {
        self.labels.len()
    }

    pub fn word_len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Label id at word position `pos`.
    pub fn at(&self, pos: usize) -> u32 {
        self.word[pos]
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    pub fn label_name(&self, id: u32) -> &str {
        &self.labels[id as usize]
    }

    pub fn label_id(&self, name: &str) -> Option<u32> {
        self.labels.iter().position(|l| l == name).map(|i| i as u32)
    }

    pub fn sign(&self, id: u32) -> Sign {
        self.signs[id as usize]
    }

    /// Occurrence positions of a label, in stored order: `[first, second]`.
    pub fn occurrences(&self, id: u32) -> [usize; 2] {
        self.occ[id as usize]
    }

    pub fn label_names(&self) -> impl Iterator<Item = &str> {
        self.labels.iter().map(|s| s.as_str())
    }

    /// Canonical representative of the rotation/relabeling orbit:
    /// lexicographically least word over all rotations with labels renamed
    /// in first-appearance order (ties broken by the sign vector, `+1`
    /// before `-1`). Signs stay attached to their labels.
    pub fn normalize(&self) -> Self {
        if self.is_empty() {
            return Self::empty();
        }
        let l = self.word.len();
        let mut best: Option<(Vec<u32>, Vec<Sign>)> = None;
        for r in 0..l {
            let mut relabel: Vec<Option<u32>> = vec![None; self.labels.len()];
            let mut next = 0u32;
            let mut ids = Vec::with_capacity(l);
            for k in 0..l {
                let old = self.word[(k + r) % l] as usize;
                let id = *relabel[old].get_or_insert_with(|| {
                    let id = next;
                    next += 1;
                    id
                });
                ids.push(id);
            }
            let mut signs = vec![Sign::Plus; self.labels.len()];
            for (old, new) in relabel.iter().enumerate() {
                signs[new.unwrap() as usize] = self.signs[old];
            }
            let cand = (ids, signs);
            if best.as_ref().map_or(true, |b| cand < *b) {
                best = Some(cand);
            }
        }
        let (ids, signs) = best.unwrap();
        let n = self.labels.len();
        let mut occ: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (pos, &id) in ids.iter().enumerate() {
            occ[id as usize].push(pos);
        }
        SignedGaussCode {
            word: ids,
            labels: (0..n).map(canonical_label).collect(),
            signs,
            occ: occ.into_iter().map(|v| [v[0], v[1]]).collect(),
        }
    }

    /// Complete list of monogon and bigon sites.
    pub fn find_moves(&self) -> Vec<MoveSite> {
        let l = self.word.len();
        let mut sites = Vec::new();
        if l == 0 {
            return sites;
        }
        let mut seen = std::collections::BTreeSet::new();
        for p in 0..l {
            let q = (p + 1) % l;
            if self.word[p] == self.word[q] {
                let key = if p < q { (p, q) } else { (q, p) };
                if seen.insert(key) {
                    sites.push(MoveSite {
                        kind: MoveKind::Monogon,
                        labels: vec![self.labels[self.word[p] as usize].clone()],
                        positions: vec![p, q],
                    });
                }
            }
        }
        for p in 0..l {
            let p1 = (p + 1) % l;
            let x = self.word[p];
            let y = self.word[p1];
            if x == y {
                continue;
            }
            if self.signs[x as usize] != self.signs[y as usize].flip() {
                continue;
            }
            for q in p + 1..l {
                let q1 = (q + 1) % l;
                if q == p1 || q1 == p || q1 == p1 {
                    continue;
                }
                let (u, v) = (self.word[q], self.word[q1]);
                if (u, v) != (x, y) && (u, v) != (y, x) {
                    continue;
                }
                sites.push(MoveSite {
                    kind: MoveKind::Bigon,
                    labels: vec![
                        self.labels[x as usize].clone(),
                        self.labels[y as usize].clone(),
                    ],
                    positions: vec![p, p1, q, q1],
                });
            }
        }
        sites
    }

    fn site_matches(&self, site: &MoveSite) -> bool {
        let l = self.word.len();
        match site.kind {
            MoveKind::Monogon => {
                if site.positions.len() != 2 || site.labels.len() != 1 {
                    return false;
                }
                let (p, q) = (site.positions[0], site.positions[1]);
                p < l && q == (p + 1) % l
                    && self.word[p] == self.word[q]
                    && self.labels[self.word[p] as usize] == site.labels[0]
            }
            MoveKind::Bigon => {
                if site.positions.len() != 4 || site.labels.len() != 2 {
                    return false;
                }
                let (p, p1, q, q1) = (
                    site.positions[0],
                    site.positions[1],
                    site.positions[2],
                    site.positions[3],
                );
                if p >= l || q >= l || p1 != (p + 1) % l || q1 != (q + 1) % l {
                    return false;
                }
                let mut distinct = std::collections::BTreeSet::new();
                for &pos in &site.positions {
                    distinct.insert(pos);
                }
                if distinct.len() != 4 {
                    return false;
                }
                let (x, y) = match (self.label_id(&site.labels[0]), self.label_id(&site.labels[1]))
                {
                    (Some(x), Some(y)) => (x, y),
                    _ => return false,
                };
                if self.signs[x as usize] != self.signs[y as usize].flip() {
                    return false;
                }
                let pair1 = (self.word[p], self.word[p1]);
                let pair2 = (self.word[q], self.word[q1]);
                (pair1 == (x, y) || pair1 == (y, x))
                    && (pair2 == (x, y) || pair2 == (y, x))
                    && pair1.0 != pair1.1
            }
        }
    }

    /// Delete the occurrences of `site`, dropping 1 (monogon) or 2 (bigon)
    /// crossings.
    pub fn apply_reduction_move(&self, site: &MoveSite) -> Result<Self, CodeError> {
        if !self.site_matches(site) {
            return Err(CodeError::StaleMoveSite);
        }
        let drop: std::collections::BTreeSet<usize> = site.positions.iter().copied().collect();
        let word: Vec<&str> = self
            .word
            .iter()
            .enumerate()
            .filter(|(pos, _)| !drop.contains(pos))
            .map(|(_, &id)| self.labels[id as usize].as_str())
            .collect();
        let signs: BTreeMap<String, Sign> = self
            .labels
            .iter()
            .zip(&self.signs)
            .filter(|(l, _)| !site.labels.contains(l))
            .map(|(l, s)| (l.clone(), *s))
            .collect();
        Self::from_parts(&word, &signs)
    }

    fn fresh_labels(&self, k: usize) -> Vec<String> {
        let mut out = Vec::with_capacity(k);
        let mut i = 0;
        while out.len() < k {
            let name = canonical_label(i);
            if self.label_id(&name).is_none() {
                out.push(name);
            }
            i += 1;
        }
        out
    }

    /// Insert a monogon (a fresh label twice, adjacently) at word slot
    /// `slot` (0..=len). Returns the new code and the fresh label.
    pub fn insert_monogon(&self, slot: usize, sign: Sign) -> Result<(Self, String), CodeError> {
        let l = self.word.len();
        if slot > l {
            return Err(CodeError::InvalidPosition {
                position: slot,
                len: l,
            });
        }
        let label = self.fresh_labels(1).pop().unwrap();
        let mut word: Vec<&str> = Vec::with_capacity(l + 2);
        for pos in 0..=l {
            if pos == slot {
                word.push(&label);
                word.push(&label);
            }
            if pos < l {
                word.push(self.labels[self.word[pos] as usize].as_str());
            }
        }
        let mut signs: BTreeMap<String, Sign> = self
            .labels
            .iter()
            .zip(&self.signs)
            .map(|(l, s)| (l.clone(), *s))
            .collect();
        signs.insert(label.clone(), sign);
        Ok((Self::from_parts(&word, &signs)?, label))
    }

    /// Insert a bigon: two fresh labels `x`, `y` with opposite signs, as the
    /// pair `x y` at `slot_first` and (`y x` if `parallel` is false, `x y`
    /// if true) at `slot_second`. Slots refer to the current word and may
    /// coincide, in which case the first pair precedes the second.
    pub fn insert_bigon(
        &self,
        slot_first: usize,
        slot_second: usize,
        parallel: bool,
        first_sign: Sign,
    ) -> Result<(Self, String, String), CodeError> {
        let l = self.word.len();
        for slot in [slot_first, slot_second] {
            if slot > l {
                return Err(CodeError::InvalidPosition {
                    position: slot,
                    len: l,
                });
            }
        }
        let fresh = self.fresh_labels(2);
        let (x, y) = (fresh[0].clone(), fresh[1].clone());
        let pair1 = [x.as_str(), y.as_str()];
        let pair2 = if parallel {
            [x.as_str(), y.as_str()]
        } else {
            [y.as_str(), x.as_str()]
        };
        let mut word: Vec<&str> = Vec::with_capacity(l + 4);
        for pos in 0..=l {
            if pos == slot_first {
                word.extend_from_slice(&pair1);
            }
            if pos == slot_second {
                word.extend_from_slice(&pair2);
            }
            if pos < l {
                word.push(self.labels[self.word[pos] as usize].as_str());
            }
        }
        let mut signs: BTreeMap<String, Sign> = self
            .labels
            .iter()
            .zip(&self.signs)
            .map(|(l, s)| (l.clone(), *s))
            .collect();
        signs.insert(x.clone(), first_sign);
        signs.insert(y.clone(), first_sign.flip());
        Ok((Self::from_parts(&word, &signs)?, x, y))
    }

    /// Flip the sign of one crossing; the word is unchanged. This models the
    /// rerouting of the crossing through an attached handle, and is an
    /// involution.
    pub fn virtualize(&self, label: &str) -> Result<Self, CodeError> {
        let id = self
            .label_id(label)
            .ok_or_else(|| CodeError::UnknownLabel {
                label: label.to_string(),
            })?;
        let mut out = self.clone();
        out.signs[id as usize] = out.signs[id as usize].flip();
        Ok(out)
    }

    /// Move the traversal basepoint forward by `k` occurrences without
    /// changing the underlying curve: the word rotates and every crossing
    /// with exactly one occurrence in the skipped prefix has its visit order
    /// reversed, so its sign flips.
    pub fn rotate_basepoint(&self, k: usize) -> Self {
        let l = self.word.len();
        if l == 0 {
            return Self::empty();
        }
        let k = k % l;
        let word: Vec<&str> = (0..l)
            .map(|pos| self.labels[self.word[(pos + k) % l] as usize].as_str())
            .collect();
        let mut passed = vec![0usize; self.labels.len()];
        for pos in 0..k {
            passed[self.word[pos] as usize] += 1;
        }
        let signs: BTreeMap<String, Sign> = self
            .labels
            .iter()
            .zip(&self.signs)
            .enumerate()
            .map(|(id, (l, s))| {
                let s = if passed[id] == 1 { s.flip() } else { *s };
                (l.clone(), s)
            })
            .collect();
        Self::from_parts(&word, &signs).expect("rotation preserves validity")
    }
}

impl fmt::Display for SignedGaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}
