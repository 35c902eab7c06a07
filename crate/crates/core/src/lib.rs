//! Evaluation toolkit for classification-based retrieval benchmarks.
//!
//! A benchmark here is a database of objects partitioned into ground-truth
//! classes. A retrieval system answers each query object with a ranked list
//! of the remaining database objects; an object is relevant to a query when
//! it belongs to the query's class. This crate ingests ground-truth
//! classifications and retrieval runs (explicit ranked lists or
//! dissimilarity matrices), scores every query with the standard measure
//! suite (nearest neighbor, first/second tier, E-measure, discounted
//! cumulative gain, average precision, precision-recall curves), aggregates
//! the scores into run summaries, compares runs, and estimates how reliably
//! a benchmark of a given class-set size separates two systems.
//!
//! Modules mirror the pipeline:
//!
//! * [`dataset`] — ground-truth classifications: loading, validation, stats.
//! * [`runs`] — ranked lists, dissimilarity matrices, gain vectors.
//! * [`metrics`] — single-query measures computed from a gain vector.
//! * [`analysis`] — run-level aggregation, run comparison, swap-rate
//!   reliability estimation.
//! * [`report`] — summary tables, CSV/JSON curve exports, SVG plots.
//! * [`synth`] — deterministic synthetic benchmarks for tests and benches.
//!
//! All computations are pure functions of their inputs; every source of
//! randomness takes an explicit seed, so identical inputs always produce
//! identical outputs.

pub mod analysis;
pub mod dataset;
pub mod diag;
pub mod metrics;
pub mod report;
pub mod runs;
pub mod synth;

pub use analysis::{ComparisonReport, MetricId, MetricSet, ReliabilityEstimate, RunSummary};
pub use dataset::{ClassLabel, ClassStats, Classification, ClassificationFormat, ObjectId};
pub use diag::{Diagnostic, Severity};
pub use metrics::{DcgCurve, FMeasureParams, PrCurve, TierScores};
pub use runs::{DissimilarityMatrix, GainVector, RankedList, Run, UnclassifiedPolicy};
