//! Rendering of results and reports, in human text or `key=value` records.
//!
//! Records lines are whitespace-separated `key=value` pairs with dot decimal
//! separators, safe for line-oriented test harnesses. Percentages in text
//! reports carry one decimal place; records expose the raw ratios at full
//! precision.

use rootpipe_core::eval::{DiffRow, EvalReport, FailureReason};
use rootpipe_core::letters::romanize;
use rootpipe_core::pipeline::{AreaReport, SimReport};
use rootpipe_core::stemmer::ExtractionResult;
use rootpipe_core::word::normalize_word;

/// Output style for the command-line surfaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Records,
}

/// `n/d` as a percentage with one decimal place, rounded at display time.
pub fn percent_one_decimal(numerator: usize, denominator: usize) -> String {
    if denominator == 0 {
        return "0.0".to_string();
    }
    format!("{:.1}", numerator as f64 / denominator as f64 * 100.0)
}

/// Renders a root string for display, optionally romanized.
pub fn render_root_text(root: &str, latin: bool) -> String {
    if !latin {
        return root.to_string();
    }
    match normalize_word(root) {
        Ok(w) => romanize(w.letters()),
        Err(_) => root.to_string(),
    }
}

/// The one-line result summary printed by the `stem` command.
pub fn stem_summary(result: &ExtractionResult, latin: bool) -> String {
    format!(
        "root={} size={} stage={}",
        result.render_root(latin),
        result.size_class,
        result.stage
    )
}

/// `stem` output: summary plus optional trace lines.
pub fn render_stem(result: &ExtractionResult, latin: bool, format: OutputFormat) -> Vec<String> {
    let mut lines = match format {
        OutputFormat::Text => vec![stem_summary(result, latin)],
        OutputFormat::Records => vec![
            format!("root={}", result.render_root(latin)),
            format!("size={}", result.size_class),
            format!("stage={}", result.stage),
        ],
    };
    lines.extend(result.render_trace(latin));
    lines
}

/// One `batch` line: `token<TAB>root-or-NOTFOUND<TAB>stage`.
pub fn batch_line(token: &str, outcome: &Result<ExtractionResult, String>, latin: bool) -> String {
    match outcome {
        Ok(result) => match &result.root {
            Some(_) => format!(
                "{token}\t{}\t{}",
                result.render_root(latin),
                result.stage
            ),
            None => format!("{token}\tNOTFOUND\t{}", result.stage),
        },
        Err(reason) => format!("{token}\tERROR:{reason}\terror"),
    }
}

/// Stable short code for an error in batch output.
pub fn error_code(err: &rootpipe_core::stemmer::ExtractError) -> String {
    use rootpipe_core::stemmer::ExtractError;
    use rootpipe_core::word::NormalizeError;
    match err {
        ExtractError::Normalize(NormalizeError::EmptyAfterNormalization) => {
            "EmptyAfterNormalization".into()
        }
        ExtractError::Normalize(NormalizeError::WordTooLong { .. }) => "WordTooLong".into(),
        ExtractError::Normalize(NormalizeError::NonArabicCharacter { .. }) => {
            "NonArabicCharacter".into()
        }
        ExtractError::NotAWord { .. } => "NotAWord".into(),
    }
}

/// Timing report lines, prefixed (`np_`/`p_`) so both modes can coexist.
pub fn render_sim_report(prefix: &str, report: &SimReport, format: OutputFormat) -> Vec<String> {
    match format {
        OutputFormat::Text => vec![
            format!(
                "[{prefix}] words={} cycles={} wall={:.6e} s throughput={:.1} Wps latency={} cycles",
                report.word_count,
                report.total_cycles,
                report.wall_seconds,
                report.throughput_wps,
                report.per_word_latency_cycles
            ),
        ],
        OutputFormat::Records => vec![
            format!("{prefix}_words={}", report.word_count),
            format!("{prefix}_cycles={}", report.total_cycles),
            format!("{prefix}_wall_seconds={}", report.wall_seconds),
            format!("{prefix}_throughput_wps={}", report.throughput_wps),
            format!("{prefix}_latency_cycles={}", report.per_word_latency_cycles),
        ],
    }
}

/// Area-ratio lines for one mode prefix.
pub fn render_area_report(prefix: &str, area: &AreaReport, format: OutputFormat) -> Vec<String> {
    match format {
        OutputFormat::Text => vec![format!(
            "[{prefix}] luts={} lrs={} throughput/LUT={:.2} Wps throughput/LR={:.2} Wps",
            area.luts, area.logic_registers, area.throughput_per_lut, area.throughput_per_lr
        )],
        OutputFormat::Records => vec![
            format!("{prefix}_luts={}", area.luts),
            format!("{prefix}_lrs={}", area.logic_registers),
            format!("{prefix}_throughput_per_lut={}", area.throughput_per_lut),
            format!("{prefix}_throughput_per_lr={}", area.throughput_per_lr),
        ],
    }
}

/// Evaluation report: headline counts, accuracy, failures, frequency table.
pub fn render_eval(report: &EvalReport, format: OutputFormat) -> Vec<String> {
    let mut lines = Vec::new();
    let accuracy = percent_one_decimal(report.extracted_gold_roots, report.gold_root_count);
    let errors = report
        .failures
        .iter()
        .filter(|(_, r)| matches!(r, FailureReason::Error(_)))
        .count();
    let not_found = report.failures.len() - errors;
    match format {
        OutputFormat::Text => {
            lines.push(format!("gold roots:            {}", report.gold_root_count));
            lines.push(format!(
                "extracted gold roots:  {}",
                report.extracted_gold_roots
            ));
            lines.push(format!("root-type accuracy:    {accuracy}%"));
            lines.push(format!(
                "tokens: {} extracted: {} failures: {} (notFound: {not_found}, errors: {errors})",
                report.token_count, report.succeeded, report.failures.len()
            ));
            lines.push(format!("truncation events:     {}", report.truncation_events));
            if let Some(level) = &report.token_level {
                lines.push(format!(
                    "token accuracy:        {}% ({} of {} mapped tokens)",
                    percent_one_decimal(level.correct, level.mapped_tokens),
                    level.correct,
                    level.mapped_tokens
                ));
            }
        }
        OutputFormat::Records => {
            lines.push(format!("gold_roots={}", report.gold_root_count));
            lines.push(format!(
                "extracted_gold_roots={}",
                report.extracted_gold_roots
            ));
            lines.push(format!("root_type_accuracy_pct={accuracy}"));
            lines.push(format!(
                "root_type_accuracy_raw={}",
                report.root_type_accuracy()
            ));
            lines.push(format!("tokens={}", report.token_count));
            lines.push(format!("extracted={}", report.succeeded));
            lines.push(format!("failures={}", report.failures.len()));
            lines.push(format!("failures_notfound={not_found}"));
            lines.push(format!("failures_error={errors}"));
            lines.push(format!("truncation_events={}", report.truncation_events));
            if let Some(level) = &report.token_level {
                lines.push(format!("token_mapped={}", level.mapped_tokens));
                lines.push(format!("token_correct={}", level.correct));
                lines.push(format!(
                    "token_accuracy_pct={}",
                    percent_one_decimal(level.correct, level.mapped_tokens)
                ));
            }
        }
    }
    lines
}

/// Per-root frequency lines, already sorted by the caller.
pub fn render_frequency(table: &[(String, u64)], format: OutputFormat) -> Vec<String> {
    table
        .iter()
        .map(|(root, count)| match format {
            OutputFormat::Text => format!("  {root}\t{count}"),
            OutputFormat::Records => format!("count root={root} n={count}"),
        })
        .collect()
}

/// Count-comparison rows with the percent difference rounded to an integer.
pub fn render_diff_rows(rows: &[DiffRow], format: OutputFormat) -> Vec<String> {
    let mut lines = Vec::new();
    if format == OutputFormat::Text {
        lines.push("root\tmine\treference\tactual\tdiff%".to_string());
    }
    for row in rows {
        let pct = row.abs_pct_diff.round() as i64;
        lines.push(match format {
            OutputFormat::Text => format!(
                "{}\t{}\t{}\t{}\t{pct}%",
                row.root, row.mine, row.reference, row.actual
            ),
            OutputFormat::Records => format!(
                "diff root={} mine={} reference={} actual={} pct={pct}",
                row.root, row.mine, row.reference, row.actual
            ),
        });
    }
    lines
}
