//! Retrieval outputs: ranked lists, dissimilarity matrices, gain vectors.
//!
//! Run files hold one `query_id object_id score` record per line, lower
//! score meaning a better match. Lines starting with `#` are comments;
//! `# key: value` comments set run metadata (`name`, `method`,
//! `query_time_ms`, `descriptor_bytes`). Within a query, records are
//! ordered by (score ascending, object id ascending), so tied scores break
//! deterministically.
//!
//! Dissimilarity matrices come either as whitespace text (a line with `N`,
//! a line with `N` ids, then `N` rows of `N` values) or as CSV with ids in
//! the first row and first column. Row `i` sorted ascending, self excluded,
//! is query `i`'s ranking.

use std::fs;
use std::io;
use std::path::Path;

use indexmap::IndexMap;
use serde::Serialize;

use crate::dataset::{Classification, ObjectId};
use crate::diag::Diagnostic;

/// Ordered retrieval response to one query, best match first.
#[derive(Debug, Clone, PartialEq)]
pub struct RankedList {
    query: ObjectId,
    ranking: Vec<ObjectId>,
}

impl RankedList {
    /// Validates that the ranking has no duplicates and never contains the
    /// query itself.
    pub fn new(query: ObjectId, ranking: Vec<ObjectId>) -> Result<Self, RunError> {
        let mut seen = std::collections::HashSet::with_capacity(ranking.len());
        for id in &ranking {
            if id == &query {
                return Err(RunError::SelfMatch { query: query.as_str().to_string() });
            }
            if !seen.insert(id.clone()) {
                return Err(RunError::DuplicateEntry {
                    query: query.as_str().to_string(),
                    object: id.as_str().to_string(),
                    line: None,
                });
            }
        }
        Ok(RankedList { query, ranking })
    }

    pub fn query(&self) -> &ObjectId {
        &self.query
    }

    pub fn ranking(&self) -> &[ObjectId] {
        &self.ranking
    }

    pub fn len(&self) -> usize {
        self.ranking.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranking.is_empty()
    }
}

/// Optional metadata travelling with a run into reports: the submitter's
/// reported timing and descriptor footprint.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct RunMeta {
    pub reported_query_time_ms: Option<f64>,
    pub descriptor_bytes: Option<u64>,
}

/// One retrieval system's full output: a ranked list per query.
#[derive(Debug, Clone, PartialEq)]
pub struct Run {
    pub name: String,
    pub method_label: String,
    lists: IndexMap<ObjectId, RankedList>,
    pub meta: Option<RunMeta>,
}

impl Run {
    pub fn from_lists(
        name: impl Into<String>,
        method_label: impl Into<String>,
        lists: Vec<RankedList>,
    ) -> Result<Self, RunError> {
        let mut map = IndexMap::with_capacity(lists.len());
        for list in lists {
            let query = list.query().clone();
            if map.insert(query.clone(), list).is_some() {
                return Err(RunError::DuplicateQuery { query: query.as_str().to_string() });
            }
        }
        Ok(Run { name: name.into(), method_label: method_label.into(), lists: map, meta: None })
    }

    pub fn lists(&self) -> &IndexMap<ObjectId, RankedList> {
        &self.lists
    }

    pub fn list_for(&self, query: &ObjectId) -> Option<&RankedList> {
        self.lists.get(query)
    }

    pub fn query_count(&self) -> usize {
        self.lists.len()
    }
}

/// Square nonnegative dissimilarities; `value(i, j)` is how dissimilar
/// object `j` is to query `i`.
#[derive(Debug, Clone, PartialEq)]
pub struct DissimilarityMatrix {
    ids: Vec<ObjectId>,
    values: Vec<f64>,
}

impl DissimilarityMatrix {
    /// Validates shape, id uniqueness, and that every value is finite and
    /// nonnegative; offending values are reported with 1-based coordinates.
    pub fn new(ids: Vec<ObjectId>, rows: Vec<Vec<f64>>) -> Result<Self, RunError> {
        let n = ids.len();
        if rows.len() != n {
            return Err(RunError::MatrixShape { expected: n, found: rows.len() });
        }
        let mut seen = std::collections::HashSet::with_capacity(n);
        for id in &ids {
            if !seen.insert(id.clone()) {
                return Err(RunError::DuplicateMatrixId { id: id.as_str().to_string() });
            }
        }
        let mut values = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(RunError::MatrixRowLength { row: i + 1, expected: n, found: row.len() });
            }
            for (j, &v) in row.iter().enumerate() {
                if !v.is_finite() {
                    return Err(RunError::NonFiniteValue { row: i + 1, col: j + 1 });
                }
                if v < 0.0 {
                    return Err(RunError::NegativeValue { row: i + 1, col: j + 1, value: v });
                }
                values.push(v);
            }
        }
        Ok(DissimilarityMatrix { ids, values })
    }

    pub fn ids(&self) -> &[ObjectId] {
        &self.ids
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn value(&self, row: usize, col: usize) -> f64 {
        self.values[row * self.ids.len() + col]
    }

    /// Renders the whitespace text form (header, id line, value rows).
    pub fn to_text(&self) -> String {
        let n = self.ids.len();
        let mut out = String::new();
        out.push_str(&format!("{n}\n"));
        let id_line: Vec<&str> = self.ids.iter().map(ObjectId::as_str).collect();
        out.push_str(&id_line.join(" "));
        out.push('\n');
        for i in 0..n {
            let row: Vec<String> = (0..n).map(|j| format!("{}", self.value(i, j))).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Binary relevance sequence aligned to one ranked list.
///
/// `relevant_total` is `R`, the number of objects relevant to the query in
/// the whole database (the query's class size minus one — a query never
/// retrieves itself). Rankings may be shorter than the database; relevant
/// objects that were never retrieved simply contribute no 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GainVector {
    gains: Vec<u8>,
    relevant_total: usize,
}

impl GainVector {
    pub fn new(gains: Vec<u8>, relevant_total: usize) -> Result<Self, RunError> {
        if gains.iter().any(|&g| g > 1) {
            return Err(RunError::NonBinaryGain);
        }
        let ones = gains.iter().filter(|&&g| g == 1).count();
        if ones > relevant_total {
            return Err(RunError::GainOverflow { ones, relevant_total });
        }
        Ok(GainVector { gains, relevant_total })
    }

    /// The best achievable ordering: `r` ones followed by zeros.
    pub fn ideal(relevant_total: usize, len: usize) -> Self {
        let mut gains = vec![0u8; len];
        for g in gains.iter_mut().take(relevant_total) {
            *g = 1;
        }
        GainVector { gains, relevant_total }
    }

    pub fn gains(&self) -> &[u8] {
        &self.gains
    }

    pub fn relevant_total(&self) -> usize {
        self.relevant_total
    }

    pub fn len(&self) -> usize {
        self.gains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gains.is_empty()
    }

    /// Number of relevant objects in the first `k` ranks (ranks past the
    /// end of the list count as irrelevant).
    pub fn hits_at(&self, k: usize) -> usize {
        self.gains.iter().take(k).filter(|&&g| g == 1).count()
    }
}

/// What to do with ranked objects that are absent from the classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum UnclassifiedPolicy {
    /// Treat as irrelevant and emit a warning.
    #[default]
    WarnIrrelevant,
    /// Fail with [`RunError::UnclassifiedObject`].
    Error,
}

#[derive(Debug, thiserror::Error)]
pub enum RunError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: io::Error,
    },
    #[error("line {line}: malformed record: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("line {line}: non-numeric score {token:?}")]
    NonNumericScore { line: usize, token: String },
    #[error("duplicate result ({query}, {object}){}", line.map(|l| format!(" at line {l}")).unwrap_or_default())]
    DuplicateEntry { query: String, object: String, line: Option<usize> },
    #[error("query {query} appears more than once in run")]
    DuplicateQuery { query: String },
    #[error("query {query} listed as its own result")]
    SelfMatch { query: String },
    #[error("matrix declares {expected} rows but has {found}")]
    MatrixShape { expected: usize, found: usize },
    #[error("matrix row {row} has {found} values, expected {expected}")]
    MatrixRowLength { row: usize, expected: usize, found: usize },
    #[error("matrix id {id} is not unique")]
    DuplicateMatrixId { id: String },
    #[error("non-finite dissimilarity at row {row}, column {col}")]
    NonFiniteValue { row: usize, col: usize },
    #[error("negative dissimilarity {value} at row {row}, column {col}")]
    NegativeValue { row: usize, col: usize, value: f64 },
    #[error("gains must be binary (0 or 1)")]
    NonBinaryGain,
    #[error("gain vector has {ones} relevant entries but only {relevant_total} exist")]
    GainOverflow { ones: usize, relevant_total: usize },
    #[error("query {query} is not in the classification")]
    UnclassifiedQuery { query: String },
    #[error("object {object} ranked for query {query} is not in the classification")]
    UnclassifiedObject { query: String, object: String },
    #[error(transparent)]
    Id(#[from] crate::dataset::DatasetError),
}

/// One raw line of a run file, before grouping into ranked lists.
#[derive(Debug, Clone, PartialEq)]
pub struct RunEntry {
    pub query: ObjectId,
    pub object: ObjectId,
    pub score: f64,
    pub line: usize,
}

/// Metadata directives collected from `# key: value` comments.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct RunDirectives {
    pub name: Option<String>,
    pub method: Option<String>,
    pub query_time_ms: Option<f64>,
    pub descriptor_bytes: Option<u64>,
}

/// Parses run-file text into raw entries plus metadata directives, without
/// grouping or dropping anything.
pub fn parse_run_entries(text: &str) -> Result<(Vec<RunEntry>, RunDirectives), RunError> {
    let mut entries = Vec::new();
    let mut directives = RunDirectives::default();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            if let Some((key, value)) = comment.split_once(':') {
                let value = value.trim();
                match key.trim() {
                    "name" => directives.name = Some(value.to_string()),
                    "method" => directives.method = Some(value.to_string()),
                    "query_time_ms" => directives.query_time_ms = value.parse().ok(),
                    "descriptor_bytes" => directives.descriptor_bytes = value.parse().ok(),
                    _ => {}
                }
            }
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 3 {
            return Err(RunError::Malformed {
                line: line_no,
                reason: format!("expected `query_id object_id score`, got {} tokens", tokens.len()),
            });
        }
        let score: f64 = tokens[2].parse().map_err(|_| RunError::NonNumericScore {
            line: line_no,
            token: tokens[2].to_string(),
        })?;
        if !score.is_finite() {
            return Err(RunError::NonNumericScore { line: line_no, token: tokens[2].to_string() });
        }
        entries.push(RunEntry {
            query: ObjectId::new(tokens[0])?,
            object: ObjectId::new(tokens[1])?,
            score,
            line: line_no,
        });
    }
    Ok((entries, directives))
}

/// Parses run-file text into a [`Run`]. Self-matches are dropped with a
/// warning pushed onto `diags`; duplicate (query, object) pairs are errors.
pub fn parse_run_str(
    text: &str,
    default_name: &str,
    diags: &mut Vec<Diagnostic>,
) -> Result<Run, RunError> {
    let (entries, directives) = parse_run_entries(text)?;

    let mut grouped: IndexMap<ObjectId, Vec<(ObjectId, f64)>> = IndexMap::new();
    let mut seen_pairs = std::collections::HashSet::new();
    for entry in entries {
        if !seen_pairs.insert((entry.query.clone(), entry.object.clone())) {
            return Err(RunError::DuplicateEntry {
                query: entry.query.as_str().to_string(),
                object: entry.object.as_str().to_string(),
                line: Some(entry.line),
            });
        }
        if entry.query == entry.object {
            diags.push(Diagnostic::warning(format!(
                "line {}: query {} listed as its own result; dropped",
                entry.line, entry.query
            )));
            continue;
        }
        grouped.entry(entry.query).or_default().push((entry.object, entry.score));
    }

    let mut lists = Vec::with_capacity(grouped.len());
    for (query, mut scored) in grouped {
        scored.sort_by(|a, b| a.1.total_cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
        let ranking = scored.into_iter().map(|(id, _)| id).collect();
        lists.push(RankedList { query, ranking });
    }

    let name = directives.name.clone().unwrap_or_else(|| default_name.to_string());
    let method = directives.method.clone().unwrap_or_else(|| name.clone());
    let mut run = Run::from_lists(name, method, lists)?;
    if directives.query_time_ms.is_some() || directives.descriptor_bytes.is_some() {
        run.meta = Some(RunMeta {
            reported_query_time_ms: directives.query_time_ms,
            descriptor_bytes: directives.descriptor_bytes,
        });
    }
    Ok(run)
}

/// Loads a run file. The default run name is the file stem.
pub fn load_run(path: impl AsRef<Path>, diags: &mut Vec<Diagnostic>) -> Result<Run, RunError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path)
        .map_err(|source| RunError::Io { path: path.display().to_string(), source })?;
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("run");
    parse_run_str(&text, stem, diags)
}

/// Converts a dissimilarity matrix into a run: each row sorted ascending,
/// ties broken by ascending object id, the diagonal (self) excluded.
///
/// The ordering depends only on relative values, so adding a constant to or
/// scaling all entries by a positive factor leaves the result unchanged.
pub fn ranked_lists_from_matrix(m: &DissimilarityMatrix, name: &str) -> Run {
    let n = m.len();
    let mut lists = Vec::with_capacity(n);
    for i in 0..n {
        let mut scored: Vec<(usize, f64)> =
            (0..n).filter(|&j| j != i).map(|j| (j, m.value(i, j))).collect();
        scored.sort_by(|a, b| a.1.total_cmp(&b.1).then_with(|| m.ids()[a.0].cmp(&m.ids()[b.0])));
        let ranking = scored.into_iter().map(|(j, _)| m.ids()[j].clone()).collect();
        lists.push(RankedList { query: m.ids()[i].clone(), ranking });
    }
    Run::from_lists(name, name, lists).expect("matrix ids are unique")
}

/// Parses matrix text, accepting both the whitespace form and CSV with ids
/// in the first row and column. CSV is detected by a comma in the first
/// non-blank line.
pub fn parse_matrix_str(text: &str) -> Result<DissimilarityMatrix, RunError> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty());
    match first {
        Some(line) if line.contains(',') => parse_matrix_csv(text),
        _ => parse_matrix_text(text),
    }
}

/// Loads a dissimilarity matrix file (either accepted format).
pub fn load_matrix(path: impl AsRef<Path>) -> Result<DissimilarityMatrix, RunError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path)
        .map_err(|source| RunError::Io { path: path.display().to_string(), source })?;
    parse_matrix_str(&text)
}

fn parse_matrix_text(text: &str) -> Result<DissimilarityMatrix, RunError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(idx, raw)| (idx + 1, raw.trim()))
        .filter(|(_, line)| !line.is_empty());

    let (header_line, header) = lines
        .next()
        .ok_or(RunError::Malformed { line: 1, reason: "empty matrix file".to_string() })?;
    let n: usize = header.parse().map_err(|_| RunError::Malformed {
        line: header_line,
        reason: format!("expected object count, got {header:?}"),
    })?;

    let (id_line, id_text) = lines.next().ok_or(RunError::Malformed {
        line: header_line,
        reason: "missing id line".to_string(),
    })?;
    let ids: Vec<ObjectId> = id_text
        .split_whitespace()
        .map(ObjectId::new)
        .collect::<Result<_, _>>()?;
    if ids.len() != n {
        return Err(RunError::Malformed {
            line: id_line,
            reason: format!("expected {n} ids, found {}", ids.len()),
        });
    }

    let mut rows = Vec::with_capacity(n);
    for _ in 0..n {
        let (line_no, row_text) = lines.next().ok_or(RunError::MatrixShape {
            expected: n,
            found: rows.len(),
        })?;
        let row: Vec<f64> = row_text
            .split_whitespace()
            .map(|t| {
                t.parse::<f64>().map_err(|_| RunError::Malformed {
                    line: line_no,
                    reason: format!("non-numeric value {t:?}"),
                })
            })
            .collect::<Result<_, _>>()?;
        rows.push(row);
    }
    if lines.next().is_some() {
        return Err(RunError::MatrixShape { expected: n, found: n + 1 });
    }
    DissimilarityMatrix::new(ids, rows)
}

fn parse_matrix_csv(text: &str) -> Result<DissimilarityMatrix, RunError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .from_reader(text.as_bytes());
    let mut records = reader.records();

    let header = records
        .next()
        .transpose()
        .map_err(csv_error)?
        .ok_or(RunError::Malformed { line: 1, reason: "empty matrix file".to_string() })?;
    // First cell is the corner; the rest are column ids.
    let ids: Vec<ObjectId> = header
        .iter()
        .skip(1)
        .map(|t| ObjectId::new(t.trim()))
        .collect::<Result<_, _>>()?;
    let n = ids.len();

    let mut rows = Vec::with_capacity(n);
    for (i, record) in records.enumerate() {
        let record = record.map_err(csv_error)?;
        let line = i + 2;
        let row_id = record.get(0).map(str::trim).unwrap_or("");
        if row_id != ids.get(i).map(ObjectId::as_str).unwrap_or("") {
            return Err(RunError::Malformed {
                line,
                reason: format!(
                    "row id {row_id:?} does not match column id order (expected {:?})",
                    ids.get(i).map(ObjectId::as_str).unwrap_or("<none>")
                ),
            });
        }
        let row: Vec<f64> = record
            .iter()
            .skip(1)
            .map(|t| {
                t.trim().parse::<f64>().map_err(|_| RunError::Malformed {
                    line,
                    reason: format!("non-numeric value {t:?}"),
                })
            })
            .collect::<Result<_, _>>()?;
        rows.push(row);
    }
    DissimilarityMatrix::new(ids, rows)
}

fn csv_error(e: csv::Error) -> RunError {
    let line = e.position().map(|p| p.line() as usize).unwrap_or(0);
    RunError::Malformed { line, reason: e.to_string() }
}

/// Replaces object ids with binary relevance values for one ranked list.
///
/// `gains[k]` is 1 exactly when the object at rank `k+1` shares the query's
/// class; `relevant_total` is the query's class size minus one. Ranked
/// objects missing from the classification are handled per `policy`.
pub fn gain_vector(
    list: &RankedList,
    c: &Classification,
    policy: UnclassifiedPolicy,
    diags: &mut Vec<Diagnostic>,
) -> Result<GainVector, RunError> {
    let query_class = c.class_of(list.query()).ok_or_else(|| RunError::UnclassifiedQuery {
        query: list.query().as_str().to_string(),
    })?;
    let relevant_total = c.members(query_class).map(|m| m.len()).unwrap_or(1) - 1;

    let mut gains = Vec::with_capacity(list.len());
    for object in list.ranking() {
        match c.class_of(object) {
            Some(class) => gains.push(u8::from(class == query_class)),
            None => match policy {
                UnclassifiedPolicy::Error => {
                    return Err(RunError::UnclassifiedObject {
                        query: list.query().as_str().to_string(),
                        object: object.as_str().to_string(),
                    });
                }
                UnclassifiedPolicy::WarnIrrelevant => {
                    diags.push(Diagnostic::warning(format!(
                        "object {object} ranked for query {} is unclassified; treated as irrelevant",
                        list.query()
                    )));
                    gains.push(0);
                }
            },
        }
    }
    GainVector::new(gains, relevant_total)
}
