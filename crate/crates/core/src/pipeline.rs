//! Cycle-level timing model of the five-stage extraction processors.
//!
//! Both processor variants complete one word in five clock cycles. The
//! non-pipelined control unit admits the next word only after the current
//! one leaves stage 5, so N words take 5N cycles. The pipelined control unit
//! overlaps the stages: after a four-cycle fill a root comes out every cycle,
//! so N words take N + 4 cycles. Wall time and throughput follow analytically
//! from the clock frequency; nothing here runs in real time.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::infix;
use crate::lexicon::RootLexicon;
use crate::stemmer::{
    assemble_result, check_positions, compare_and_extract, generate_stems, produce_boundaries,
    word_for_extraction, BoundarySets, ExtractError, ExtractOptions, ExtractionResult,
    PositionBits, StemCandidates,
};
use crate::word::NormalizedWord;

/// Depth of both processors: five stages, five cycles per word.
pub const STAGE_COUNT: u64 = 5;

/// Control-unit scheme.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProcessorMode {
    NonPipelined,
    Pipelined,
}

impl fmt::Display for ProcessorMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::NonPipelined => "nonPipelined",
            Self::Pipelined => "pipelined",
        })
    }
}

/// A processor variant running at a fixed clock frequency.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProcessorModel {
    pub mode: ProcessorMode,
    pub fmax_hz: f64,
}

impl ProcessorModel {
    pub fn new(mode: ProcessorMode, fmax_hz: f64) -> Result<Self, SimError> {
        if fmax_hz <= 0.0 || fmax_hz.is_nan() {
            return Err(SimError::InvalidFrequency { hz: fmax_hz });
        }
        Ok(Self { mode, fmax_hz })
    }
}

/// Timing figures for one run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimReport {
    pub word_count: u64,
    pub total_cycles: u64,
    pub wall_seconds: f64,
    pub throughput_wps: f64,
    pub per_word_latency_cycles: u64,
}

/// Throughput-to-area ratios for externally supplied resource counts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AreaReport {
    pub luts: u64,
    pub logic_registers: u64,
    pub throughput_per_lut: f64,
    pub throughput_per_lr: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SimError {
    ZeroWords,
    MismatchedWordCount { left: u64, right: u64 },
    ZeroArea,
    InvalidFrequency { hz: f64 },
}

impl fmt::Display for SimError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::ZeroWords => write!(f, "word count must be at least 1"),
            Self::MismatchedWordCount { left, right } => {
                write!(f, "reports cover different word counts ({left} vs {right})")
            }
            Self::ZeroArea => write!(f, "area counts must be positive"),
            Self::InvalidFrequency { hz } => write!(f, "invalid clock frequency {hz} Hz"),
        }
    }
}

impl core::error::Error for SimError {}

/// Total cycles to process `word_count` words.
pub fn cycles_for(mode: ProcessorMode, word_count: u64) -> Result<u64, SimError> {
    if word_count == 0 {
        return Err(SimError::ZeroWords);
    }
    Ok(match mode {
        ProcessorMode::NonPipelined => STAGE_COUNT * word_count,
        ProcessorMode::Pipelined => word_count + (STAGE_COUNT - 1),
    })
}

/// Closed-form timing report for a processor model.
pub fn report(model: &ProcessorModel, word_count: u64) -> Result<SimReport, SimError> {
    let total_cycles = cycles_for(model.mode, word_count)?;
    let wall_seconds = total_cycles as f64 / model.fmax_hz;
    Ok(SimReport {
        word_count,
        total_cycles,
        wall_seconds,
        throughput_wps: word_count as f64 / wall_seconds,
        per_word_latency_cycles: STAGE_COUNT,
    })
}

/// Throughput ratio of two reports over the same word count.
pub fn speedup(numerator: &SimReport, denominator: &SimReport) -> Result<f64, SimError> {
    if numerator.word_count != denominator.word_count {
        return Err(SimError::MismatchedWordCount {
            left: numerator.word_count,
            right: denominator.word_count,
        });
    }
    Ok(numerator.throughput_wps / denominator.throughput_wps)
}

/// Divides a report's throughput by externally supplied resource counts.
pub fn area_ratios(report: &SimReport, luts: u64, logic_registers: u64) -> Result<AreaReport, SimError> {
    if luts == 0 || logic_registers == 0 {
        return Err(SimError::ZeroArea);
    }
    Ok(AreaReport {
        luts,
        logic_registers,
        throughput_per_lut: report.throughput_wps / luts as f64,
        throughput_per_lr: report.throughput_wps / logic_registers as f64,
    })
}

/// One stage-occupancy observation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleEvent {
    pub cycle: u64,
    /// Stage number, 1..=5.
    pub stage: u8,
    pub word_index: usize,
    pub token: String,
    pub summary: String,
}

impl CycleEvent {
    /// Trace-log line: `cyc=<n> S<k> word=<token> out=<summary>`.
    pub fn render(&self) -> String {
        format!(
            "cyc={} S{} word={} out={}",
            self.cycle, self.stage, self.token, self.summary
        )
    }

    /// Structured record with every field as a `key=value` pair.
    pub fn render_record(&self) -> String {
        format!(
            "cycle={} stage={} index={} word={} out={}",
            self.cycle, self.stage, self.word_index, self.token, self.summary
        )
    }
}

/// A finished simulation: timing report, per-cycle log, per-word results.
#[derive(Debug, Clone, PartialEq)]
pub struct SimRun {
    pub report: SimReport,
    pub log: Vec<CycleEvent>,
    pub results: Vec<Result<ExtractionResult, ExtractError>>,
}

// Per-word register state as it moves through the stage slots.
#[derive(Default)]
struct Lane {
    word: Option<NormalizedWord>,
    error: Option<ExtractError>,
    bits: Option<PositionBits>,
    bounds: Option<BoundarySets>,
    candidates: Option<StemCandidates>,
    compared: Option<(Option<NormalizedWord>, Option<NormalizedWord>)>,
    result: Option<Result<ExtractionResult, ExtractError>>,
}

fn set_string(items: &[String]) -> String {
    format!("{{{}}}", items.join(","))
}

fn run_stage(
    lane: &mut Lane,
    stage: u8,
    token: &str,
    lexicon: &RootLexicon,
    options: &ExtractOptions,
) -> String {
    if let Some(err) = &lane.error {
        if stage == 5 {
            lane.result = Some(Err(*err));
        }
        return format!("error={err}");
    }
    match stage {
        1 => match word_for_extraction(token) {
            Ok(word) => {
                let bits = check_positions(&word);
                let summary = format!(
                    "prefixBits={},suffixBits={}",
                    bits.prefix_pattern(),
                    bits.suffix_pattern()
                );
                lane.word = Some(word);
                lane.bits = Some(bits);
                summary
            }
            Err(e) => {
                lane.error = Some(e);
                format!("error={e}")
            }
        },
        2 => {
            let bounds =
                produce_boundaries(lane.bits.as_ref().unwrap(), lane.word.as_ref().unwrap());
            let p: Vec<String> = bounds.prefix_ends.iter().map(|v| v.to_string()).collect();
            let s: Vec<String> = bounds.suffix_starts.iter().map(|v| v.to_string()).collect();
            let summary = format!("P={},S={}", set_string(&p), set_string(&s));
            lane.bounds = Some(bounds);
            summary
        }
        3 => {
            let candidates = generate_stems(
                lane.word.as_ref().unwrap(),
                lane.bounds.as_ref().unwrap(),
                options.capacity,
            );
            let summary = format!("tri={},quad={}", candidates.tri.len(), candidates.quad.len());
            lane.candidates = Some(candidates);
            summary
        }
        4 => {
            let (root3, root4) = compare_and_extract(lane.candidates.as_ref().unwrap(), lexicon);
            let fmt_opt = |r: &Option<NormalizedWord>| {
                r.as_ref().map_or_else(|| "-".to_string(), |w| w.to_string())
            };
            let summary = format!("root3={},root4={}", fmt_opt(&root3), fmt_opt(&root4));
            lane.compared = Some((root3, root4));
            summary
        }
        5 => {
            let candidates = lane.candidates.take().unwrap();
            let (root3, root4) = lane.compared.take().unwrap();
            let fallback = (root3.is_none() && root4.is_none() && options.infix_processing)
                .then(|| infix::fallback_extract(&candidates, lexicon, options.infix_letters()));
            let result = assemble_result(
                candidates,
                root3,
                root4,
                fallback,
                lane.bits.take().unwrap(),
                lane.bounds.take().unwrap(),
                options,
            );
            let summary = format!("stage={},root={}", result.stage, result.render_root(false));
            lane.result = Some(Ok(result));
            summary
        }
        _ => unreachable!(),
    }
}

/// Advances the five stage slots one clock at a time, running each word's
/// stage computation in its occupying cycle. In pipelined mode a new word
/// enters stage 1 every cycle; in non-pipelined mode the next word enters
/// only after the current one leaves stage 5. Normalization failures ride
/// through the slots as errors without halting the run, and the final
/// results match [`crate::stemmer::extract_root`] word for word.
pub fn simulate_trace(
    model: &ProcessorModel,
    tokens: &[&str],
    lexicon: &RootLexicon,
    options: &ExtractOptions,
) -> Result<SimRun, SimError> {
    let n = tokens.len() as u64;
    let report = report(model, n)?;
    let mut lanes: Vec<Lane> = tokens.iter().map(|_| Lane::default()).collect();
    let mut log = Vec::new();

    for cycle in 1..=report.total_cycles {
        for stage in 1..=STAGE_COUNT as u8 {
            let index = match model.mode {
                ProcessorMode::Pipelined => {
                    let Some(i) = cycle.checked_sub(stage as u64) else {
                        continue;
                    };
                    if i >= n {
                        continue;
                    }
                    i as usize
                }
                ProcessorMode::NonPipelined => {
                    if (cycle - 1) % STAGE_COUNT + 1 != stage as u64 {
                        continue;
                    }
                    ((cycle - 1) / STAGE_COUNT) as usize
                }
            };
            let summary = run_stage(&mut lanes[index], stage, tokens[index], lexicon, options);
            log.push(CycleEvent {
                cycle,
                stage,
                word_index: index,
                token: tokens[index].to_string(),
                summary,
            });
        }
    }

    let results = lanes
        .into_iter()
        .map(|lane| lane.result.expect("every lane completes stage 5"))
        .collect();
    Ok(SimRun {
        report,
        log,
        results,
    })
}
