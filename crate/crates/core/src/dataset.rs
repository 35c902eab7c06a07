//! Ground-truth classifications: the benchmark's class structure.
//!
//! A [`Classification`] assigns every database object to exactly one class.
//! Two on-disk formats are supported:
//!
//! * **simple** — one record per line, `object_id <whitespace> class_label`.
//!   Blank lines are ignored; lines whose first non-blank character is `#`
//!   are comments. UTF-8, LF or CRLF.
//! * **cla** — Princeton Shape Benchmark compatible hierarchy: a `PSB <ver>`
//!   header, a `numClasses numModels` line, then per-class blocks of
//!   `name parent count` followed by `count` object-id lines. The hierarchy
//!   is flattened on load: parent links are ignored and classes declaring
//!   zero members are treated as structural nodes and dropped.

use std::fmt;
use std::fs;
use std::io;
use std::path::Path;

use indexmap::IndexMap;
use serde::Serialize;
use std::collections::BTreeMap;

use crate::diag::Diagnostic;

/// Identifier of one database object. Non-empty, no internal whitespace,
/// case-sensitive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct ObjectId(String);

impl ObjectId {
    pub fn new(value: impl Into<String>) -> Result<Self, DatasetError> {
        let value = value.into();
        if value.is_empty() || value.chars().any(char::is_whitespace) {
            return Err(DatasetError::InvalidToken { token: value });
        }
        Ok(ObjectId(value))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for ObjectId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Name of one ground-truth class. Same token rules as [`ObjectId`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct ClassLabel(String);

impl ClassLabel {
    pub fn new(value: impl Into<String>) -> Result<Self, DatasetError> {
        let value = value.into();
        if value.is_empty() || value.chars().any(char::is_whitespace) {
            return Err(DatasetError::InvalidToken { token: value });
        }
        Ok(ClassLabel(value))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// On-disk format of a classification file.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassificationFormat {
    Simple,
    Cla,
}

/// Format selector for [`load_classification`]. `Auto` sniffs the first
/// non-blank line: a `PSB` header means cla, anything else means simple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FormatChoice {
    #[default]
    Auto,
    Simple,
    Cla,
}

/// A complete ground-truth partition of the benchmark database.
///
/// Every object belongs to exactly one class; class order and member order
/// follow the source file, so loading is deterministic.
#[derive(Debug, Clone, PartialEq)]
pub struct Classification {
    entries: IndexMap<ObjectId, ClassLabel>,
    classes: IndexMap<ClassLabel, Vec<ObjectId>>,
    source_path: String,
    format_tag: ClassificationFormat,
}

impl Classification {
    /// Assembles a classification without checking any invariant. Intended
    /// for tests and for building values to feed [`validate_classification`];
    /// loaded classifications always satisfy the invariants.
    pub fn from_parts(
        entries: IndexMap<ObjectId, ClassLabel>,
        classes: IndexMap<ClassLabel, Vec<ObjectId>>,
        source_path: impl Into<String>,
        format_tag: ClassificationFormat,
    ) -> Self {
        Classification { entries, classes, source_path: source_path.into(), format_tag }
    }

    pub fn entries(&self) -> &IndexMap<ObjectId, ClassLabel> {
        &self.entries
    }

    pub fn classes(&self) -> &IndexMap<ClassLabel, Vec<ObjectId>> {
        &self.classes
    }

    pub fn source_path(&self) -> &str {
        &self.source_path
    }

    pub fn format_tag(&self) -> ClassificationFormat {
        self.format_tag
    }

    pub fn class_of(&self, id: &ObjectId) -> Option<&ClassLabel> {
        self.entries.get(id)
    }

    pub fn members(&self, label: &ClassLabel) -> Option<&[ObjectId]> {
        self.classes.get(label).map(Vec::as_slice)
    }

    /// Size of the class `id` belongs to, if classified.
    pub fn class_size_of(&self, id: &ObjectId) -> Option<usize> {
        self.class_of(id).and_then(|label| self.classes.get(label)).map(Vec::len)
    }

    pub fn object_count(&self) -> usize {
        self.entries.len()
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Objects in source-file order.
    pub fn objects(&self) -> impl Iterator<Item = &ObjectId> {
        self.entries.keys()
    }

    /// Renders the classification in the simple line format. Parsing the
    /// result yields an equal partition.
    pub fn to_simple_string(&self) -> String {
        let mut out = String::new();
        for (label, members) in &self.classes {
            for id in members {
                out.push_str(id.as_str());
                out.push(' ');
                out.push_str(label.as_str());
                out.push('\n');
            }
        }
        out
    }

    /// Renders the classification as a flat cla hierarchy (every class a
    /// root). Parsing the result yields an equal partition.
    pub fn to_cla_string(&self) -> String {
        let mut out = String::new();
        out.push_str("PSB 1\n");
        out.push_str(&format!("{} {}\n", self.class_count(), self.object_count()));
        for (label, members) in &self.classes {
            out.push_str(&format!("{} 0 {}\n", label, members.len()));
            for id in members {
                out.push_str(id.as_str());
                out.push('\n');
            }
        }
        out
    }
}

/// Shape of one loaded classification: counts and the class-size histogram.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassStats {
    pub class_count: usize,
    pub object_count: usize,
    /// Absent when there are no classes.
    pub min_class_size: Option<usize>,
    pub max_class_size: Option<usize>,
    /// class size -> number of classes of that size
    pub size_histogram: BTreeMap<usize, usize>,
}

#[derive(Debug, thiserror::Error)]
pub enum DatasetError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: io::Error,
    },
    #[error("{path}:{line}: malformed line: {reason}")]
    Malformed { path: String, line: usize, reason: String },
    #[error("{path}:{line}: object {id} already classified as {existing}")]
    DuplicateObject { path: String, line: usize, id: String, existing: String },
    #[error("{path}: no records found")]
    Empty { path: String },
    #[error("{path}:{line}: class {class} declares {declared} members but {found} follow")]
    RosterMismatch { path: String, line: usize, class: String, declared: usize, found: usize },
    #[error("{path}: header declares {declared} {what} but file contains {found}")]
    HeaderMismatch { path: String, what: &'static str, declared: usize, found: usize },
    #[error("invalid identifier token {token:?}: must be non-empty with no whitespace")]
    InvalidToken { token: String },
}

/// Loads and validates a classification file.
///
/// With [`FormatChoice::Auto`] the format is detected from the first
/// non-blank, non-comment line. Object order within classes and class order
/// both preserve file order; loading the same bytes twice yields equal
/// values.
pub fn load_classification(
    path: impl AsRef<Path>,
    format: FormatChoice,
) -> Result<Classification, DatasetError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path)
        .map_err(|source| DatasetError::Io { path: path.display().to_string(), source })?;
    parse_classification(&text, format, &path.display().to_string())
}

/// Parses classification text. `source_label` is used in error messages and
/// recorded as the source path.
pub fn parse_classification(
    text: &str,
    format: FormatChoice,
    source_label: &str,
) -> Result<Classification, DatasetError> {
    let format = match format {
        FormatChoice::Simple => ClassificationFormat::Simple,
        FormatChoice::Cla => ClassificationFormat::Cla,
        FormatChoice::Auto => detect_format(text),
    };
    match format {
        ClassificationFormat::Simple => parse_simple(text, source_label),
        ClassificationFormat::Cla => parse_cla(text, source_label),
    }
}

fn detect_format(text: &str) -> ClassificationFormat {
    for line in text.lines() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if trimmed.split_whitespace().next() == Some("PSB") {
            return ClassificationFormat::Cla;
        }
        break;
    }
    ClassificationFormat::Simple
}

struct Builder<'a> {
    entries: IndexMap<ObjectId, ClassLabel>,
    classes: IndexMap<ClassLabel, Vec<ObjectId>>,
    path: &'a str,
}

impl<'a> Builder<'a> {
    fn new(path: &'a str) -> Self {
        Builder { entries: IndexMap::new(), classes: IndexMap::new(), path }
    }

    fn insert(&mut self, id: ObjectId, label: ClassLabel, line: usize) -> Result<(), DatasetError> {
        if let Some(existing) = self.entries.get(&id) {
            return Err(DatasetError::DuplicateObject {
                path: self.path.to_string(),
                line,
                id: id.as_str().to_string(),
                existing: existing.as_str().to_string(),
            });
        }
        self.classes.entry(label.clone()).or_default().push(id.clone());
        self.entries.insert(id, label);
        Ok(())
    }

    fn finish(self, format_tag: ClassificationFormat) -> Result<Classification, DatasetError> {
        if self.entries.is_empty() {
            return Err(DatasetError::Empty { path: self.path.to_string() });
        }
        Ok(Classification {
            entries: self.entries,
            classes: self.classes,
            source_path: self.path.to_string(),
            format_tag,
        })
    }
}

fn parse_simple(text: &str, path: &str) -> Result<Classification, DatasetError> {
    let mut builder = Builder::new(path);
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let (id, label) = match (tokens.next(), tokens.next(), tokens.next()) {
            (Some(id), Some(label), None) => (id, label),
            (_, _, Some(extra)) => {
                return Err(DatasetError::Malformed {
                    path: path.to_string(),
                    line: line_no,
                    reason: format!("expected `object_id class_label`, found extra token {extra:?}"),
                });
            }
            _ => {
                return Err(DatasetError::Malformed {
                    path: path.to_string(),
                    line: line_no,
                    reason: "expected `object_id class_label`".to_string(),
                });
            }
        };
        builder.insert(ObjectId::new(id)?, ClassLabel::new(label)?, line_no)?;
    }
    builder.finish(ClassificationFormat::Simple)
}

fn parse_cla(text: &str, path: &str) -> Result<Classification, DatasetError> {
    // Non-blank lines with their 1-based numbers; cla has no comment syntax.
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(idx, raw)| (idx + 1, raw.trim()))
        .filter(|(_, line)| !line.is_empty());

    let malformed = |line: usize, reason: String| DatasetError::Malformed {
        path: path.to_string(),
        line,
        reason,
    };

    let (header_no, header) = lines
        .next()
        .ok_or_else(|| DatasetError::Empty { path: path.to_string() })?;
    let mut header_tokens = header.split_whitespace();
    if header_tokens.next() != Some("PSB") {
        return Err(malformed(header_no, "expected `PSB <version>` header".to_string()));
    }

    let (counts_no, counts) = lines
        .next()
        .ok_or_else(|| malformed(header_no, "missing `numClasses numModels` line".to_string()))?;
    let mut count_tokens = counts.split_whitespace();
    let parse_count = |token: Option<&str>, what: &str, line: usize| -> Result<usize, DatasetError> {
        token
            .and_then(|t| t.parse::<usize>().ok())
            .ok_or_else(|| malformed(line, format!("expected non-negative integer for {what}")))
    };
    let declared_classes = parse_count(count_tokens.next(), "numClasses", counts_no)?;
    let declared_models = parse_count(count_tokens.next(), "numModels", counts_no)?;

    let mut builder = Builder::new(path);
    let mut class_blocks = 0usize;
    while let Some((line_no, line)) = lines.next() {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 3 {
            return Err(malformed(
                line_no,
                format!("expected class header `name parent count`, got {line:?}"),
            ));
        }
        let label = ClassLabel::new(tokens[0])?;
        let declared: usize = tokens[2]
            .parse()
            .map_err(|_| malformed(line_no, format!("invalid member count {:?}", tokens[2])))?;
        class_blocks += 1;

        // Zero-member classes are inner hierarchy nodes; flattening drops them.
        for found in 0..declared {
            let Some((id_line, id_text)) = lines.next() else {
                return Err(DatasetError::RosterMismatch {
                    path: path.to_string(),
                    line: line_no,
                    class: label.as_str().to_string(),
                    declared,
                    found,
                });
            };
            if id_text.split_whitespace().count() != 1 {
                // A multi-token line here is the next class header arriving early.
                return Err(DatasetError::RosterMismatch {
                    path: path.to_string(),
                    line: id_line,
                    class: label.as_str().to_string(),
                    declared,
                    found,
                });
            }
            builder.insert(ObjectId::new(id_text)?, label.clone(), id_line)?;
        }
    }

    if class_blocks != declared_classes {
        return Err(DatasetError::HeaderMismatch {
            path: path.to_string(),
            what: "classes",
            declared: declared_classes,
            found: class_blocks,
        });
    }
    if builder.entries.len() != declared_models {
        return Err(DatasetError::HeaderMismatch {
            path: path.to_string(),
            what: "models",
            declared: declared_models,
            found: builder.entries.len(),
        });
    }
    builder.finish(ClassificationFormat::Cla)
}

/// Checks every classification invariant and returns findings instead of
/// failing. Loaded classifications produce at most warnings; hand-assembled
/// ones may surface errors.
///
/// Singleton classes get a warning: their only member has zero relevant
/// objects as a query, so every measure is undefined for it.
pub fn validate_classification(c: &Classification) -> Vec<Diagnostic> {
    let mut diags = Vec::new();

    for (label, members) in c.classes() {
        if members.is_empty() {
            diags.push(Diagnostic::error(format!("class {label} has no members")));
        } else if members.len() == 1 {
            diags.push(Diagnostic::warning(format!(
                "class {label} has a single member; its query has no relevant objects and will be excluded from aggregates"
            )));
        }
        let mut seen = std::collections::HashSet::new();
        for id in members {
            if !seen.insert(id) {
                diags.push(Diagnostic::error(format!(
                    "object {id} appears more than once in class {label}"
                )));
            }
            match c.entries().get(id) {
                None => diags.push(Diagnostic::error(format!(
                    "object {id} is listed in class {label} but assigned no class"
                ))),
                Some(assigned) if assigned != label => diags.push(Diagnostic::error(format!(
                    "object {id} is listed in class {label} but assigned to {assigned}"
                ))),
                Some(_) => {}
            }
        }
    }

    for (id, label) in c.entries() {
        let in_roster = c.members(label).is_some_and(|m| m.contains(id));
        if !in_roster {
            diags.push(Diagnostic::error(format!(
                "object {id} is assigned to {label} but missing from that class roster"
            )));
        }
    }

    let roster_total: usize = c.classes().values().map(Vec::len).sum();
    if roster_total != c.object_count() {
        diags.push(Diagnostic::error(format!(
            "class rosters hold {roster_total} objects but {count} are classified",
            count = c.object_count()
        )));
    }

    diags
}

/// Summarizes class sizes. Deterministic; an empty classification yields
/// zero counts with absent min/max.
pub fn class_stats(c: &Classification) -> ClassStats {
    let mut histogram = BTreeMap::new();
    for members in c.classes().values() {
        *histogram.entry(members.len()).or_insert(0usize) += 1;
    }
    ClassStats {
        class_count: c.class_count(),
        object_count: c.object_count(),
        min_class_size: histogram.keys().next().copied(),
        max_class_size: histogram.keys().next_back().copied(),
        size_histogram: histogram,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diag::Severity;

    fn oid(s: &str) -> ObjectId {
        ObjectId::new(s).unwrap()
    }

    fn label(s: &str) -> ClassLabel {
        ClassLabel::new(s).unwrap()
    }

    #[test]
    fn simple_two_classes() {
        let c = parse_classification("m1 chair\nm2 chair\nm3 table\n", FormatChoice::Auto, "t")
            .unwrap();
        assert_eq!(c.class_count(), 2);
        assert_eq!(c.members(&label("chair")).unwrap(), &[oid("m1"), oid("m2")]);
        assert_eq!(c.members(&label("table")).unwrap(), &[oid("m3")]);
        assert_eq!(c.format_tag(), ClassificationFormat::Simple);
    }

    #[test]
    fn simple_ignores_comments_and_blank_lines() {
        let text = "# ground truth\n\n  m1 chair\r\nm2 chair\n";
        let c = parse_classification(text, FormatChoice::Simple, "t").unwrap();
        assert_eq!(c.object_count(), 2);
        assert_eq!(c.class_of(&oid("m1")), Some(&label("chair")));
    }

    #[test]
    fn simple_duplicate_object_is_an_error() {
        let err = parse_classification("m1 chair\nm1 table\n", FormatChoice::Simple, "t")
            .unwrap_err();
        match err {
            DatasetError::DuplicateObject { id, line, .. } => {
                assert_eq!(id, "m1");
                assert_eq!(line, 2);
            }
            other => panic!("expected duplicate error, got {other}"),
        }
    }

    #[test]
    fn simple_malformed_line_reports_line_number() {
        let err =
            parse_classification("m1 chair\nm2\n", FormatChoice::Simple, "t").unwrap_err();
        match err {
            DatasetError::Malformed { line, .. } => assert_eq!(line, 2),
            other => panic!("expected malformed error, got {other}"),
        }
    }

    #[test]
    fn empty_file_is_an_error() {
        assert!(matches!(
            parse_classification("# nothing\n\n", FormatChoice::Simple, "t"),
            Err(DatasetError::Empty { .. })
        ));
    }

    fn cla_40x20() -> String {
        let mut text = String::from("PSB 1\n40 800\n");
        for class in 0..40 {
            text.push_str(&format!("c{class:02} 0 20\n"));
            for member in 0..20 {
                text.push_str(&format!("m{:03}\n", class * 20 + member));
            }
        }
        text
    }

    #[test]
    fn cla_forty_classes_of_twenty() {
        let c = parse_classification(&cla_40x20(), FormatChoice::Auto, "t").unwrap();
        assert_eq!(c.format_tag(), ClassificationFormat::Cla);
        assert_eq!(c.class_count(), 40);
        assert_eq!(c.object_count(), 800);
        assert!(c.classes().values().all(|m| m.len() == 20));
    }

    #[test]
    fn cla_roster_mismatch_reports_class() {
        let text = "PSB 1\n1 3\nchair 0 3\nm1\nm2\n";
        let err = parse_classification(text, FormatChoice::Cla, "t").unwrap_err();
        match err {
            DatasetError::RosterMismatch { class, declared, found, .. } => {
                assert_eq!(class, "chair");
                assert_eq!(declared, 3);
                assert_eq!(found, 2);
            }
            other => panic!("expected roster mismatch, got {other}"),
        }
    }

    #[test]
    fn cla_header_model_count_checked() {
        let text = "PSB 1\n1 5\nchair 0 2\nm1\nm2\n";
        assert!(matches!(
            parse_classification(text, FormatChoice::Cla, "t"),
            Err(DatasetError::HeaderMismatch { what: "models", declared: 5, found: 2, .. })
        ));
    }

    #[test]
    fn cla_zero_member_classes_are_dropped() {
        let text = "PSB 1\n2 2\nfurniture 0 0\nchair furniture 2\nm1\nm2\n";
        let c = parse_classification(text, FormatChoice::Cla, "t").unwrap();
        assert_eq!(c.class_count(), 1);
        assert_eq!(c.class_of(&oid("m1")), Some(&label("chair")));
    }

    #[test]
    fn validate_clean_classification_is_silent() {
        let c = parse_classification(&cla_40x20(), FormatChoice::Auto, "t").unwrap();
        assert!(validate_classification(&c).is_empty());
    }

    #[test]
    fn validate_flags_singleton_class() {
        let c = parse_classification("m1 chair\nm2 chair\nm3 lamp\n", FormatChoice::Simple, "t")
            .unwrap();
        let diags = validate_classification(&c);
        assert_eq!(diags.len(), 1);
        assert_eq!(diags[0].severity, Severity::Warning);
        assert!(diags[0].message.contains("lamp"));
    }

    #[test]
    fn validate_flags_roster_mismatch() {
        // m2 is on the chair roster but never assigned a class.
        let mut entries = IndexMap::new();
        entries.insert(oid("m1"), label("chair"));
        let mut classes = IndexMap::new();
        classes.insert(label("chair"), vec![oid("m1"), oid("m2")]);
        let c = Classification::from_parts(entries, classes, "t", ClassificationFormat::Simple);
        let errors: Vec<_> =
            validate_classification(&c).into_iter().filter(Diagnostic::is_error).collect();
        assert!(errors.iter().any(|d| d.message.contains("m2")));
    }

    #[test]
    fn stats_for_uniform_benchmark() {
        let c = parse_classification(&cla_40x20(), FormatChoice::Auto, "t").unwrap();
        let stats = class_stats(&c);
        assert_eq!(stats.class_count, 40);
        assert_eq!(stats.object_count, 800);
        assert_eq!(stats.min_class_size, Some(20));
        assert_eq!(stats.max_class_size, Some(20));
        assert_eq!(stats.size_histogram.get(&20), Some(&40));
    }

    #[test]
    fn stats_for_empty_classification() {
        let c = Classification::from_parts(
            IndexMap::new(),
            IndexMap::new(),
            "t",
            ClassificationFormat::Simple,
        );
        let stats = class_stats(&c);
        assert_eq!(stats.class_count, 0);
        assert_eq!(stats.object_count, 0);
        assert_eq!(stats.min_class_size, None);
        assert_eq!(stats.max_class_size, None);
    }

    #[test]
    fn stats_min_max_spread() {
        let mut text = String::new();
        for i in 0..11 {
            text.push_str(&format!("s{i} small\n"));
        }
        for i in 0..177 {
            text.push_str(&format!("b{i} big\n"));
        }
        let stats =
            class_stats(&parse_classification(&text, FormatChoice::Simple, "t").unwrap());
        assert_eq!(stats.min_class_size, Some(11));
        assert_eq!(stats.max_class_size, Some(177));
    }

    #[test]
    fn round_trip_both_formats() {
        let original = parse_classification(
            "m1 chair\nm2 chair\nm3 table\nm4 lamp\nm5 lamp\n",
            FormatChoice::Simple,
            "t",
        )
        .unwrap();

        let simple = parse_classification(&original.to_simple_string(), FormatChoice::Auto, "t2")
            .unwrap();
        assert_eq!(simple.entries(), original.entries());
        assert_eq!(simple.classes(), original.classes());

        let cla =
            parse_classification(&original.to_cla_string(), FormatChoice::Auto, "t3").unwrap();
        assert_eq!(cla.format_tag(), ClassificationFormat::Cla);
        assert_eq!(cla.entries(), original.entries());
        assert_eq!(cla.classes(), original.classes());
    }

    #[test]
    fn load_is_deterministic() {
        let text = cla_40x20();
        let a = parse_classification(&text, FormatChoice::Auto, "t").unwrap();
        let b = parse_classification(&text, FormatChoice::Auto, "t").unwrap();
        assert_eq!(a, b);
        // Insertion order matters too, not just set equality.
        assert!(a.classes().keys().eq(b.classes().keys()));
        assert!(a.entries().keys().eq(b.entries().keys()));
    }

    #[test]
    fn partition_property_holds_after_load() {
        let c = parse_classification(&cla_40x20(), FormatChoice::Auto, "t").unwrap();
        let total: usize = c.classes().values().map(Vec::len).sum();
        assert_eq!(total, c.entries().len());
        for (label, members) in c.classes() {
            for id in members {
                assert_eq!(c.class_of(id), Some(label));
            }
        }
    }

    #[test]
    fn identifier_tokens_reject_whitespace() {
        assert!(ObjectId::new("a b").is_err());
        assert!(ObjectId::new("").is_err());
        assert!(ClassLabel::new("c\t1").is_err());
    }
}
