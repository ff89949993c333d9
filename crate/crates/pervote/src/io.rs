//! Transcript serialization.
//!
//! A play serializes to a JSON document carrying the params, per-round
//! approvals as arrays of sorted option indices, the decisions, the
//! dissatisfaction vector, and optional run metadata (strategy,
//! adversary, seed, and the learning rate when one was used — the
//! certificate check needs it). The same per-round profile shape, on its
//! own, is the scripted-adversary file format. A flat CSV view lists one
//! row per round with per-agent satisfied flags.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::game::{ApprovalProfile, GameParams, OptionSet, PlayRecord};

/// Run provenance embedded in a transcript.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunMeta {
    pub strategy: String,
    pub adversary: String,
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<f64>,
}

#[derive(Serialize, Deserialize)]
struct TranscriptDoc {
    params: GameParams,
    profiles: Vec<Vec<Vec<u32>>>,
    decisions: Vec<u32>,
    dissatisfaction: Vec<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    meta: Option<RunMeta>,
}

/// The profiles of a play in script shape: rounds, then agents, then
/// sorted option indices.
pub fn profiles_as_lists(play: &PlayRecord) -> Vec<Vec<Vec<u32>>> {
    play.profiles
        .iter()
        .map(|p| p.approvals.iter().map(|s| s.to_vec()).collect())
        .collect()
}

pub fn transcript_to_json(play: &PlayRecord, meta: Option<&RunMeta>) -> String {
    let doc = TranscriptDoc {
        params: play.params,
        profiles: profiles_as_lists(play),
        decisions: play.decisions.clone(),
        dissatisfaction: play.dissatisfaction.clone(),
        meta: meta.cloned(),
    };
    serde_json::to_string_pretty(&doc).expect("transcript serializes")
}

/// Parses and structurally validates a transcript (shape, ranges, and
/// the dissatisfaction recount).
pub fn transcript_from_json(text: &str, origin: &str) -> Result<(PlayRecord, Option<RunMeta>)> {
    let doc: TranscriptDoc = serde_json::from_str(text).map_err(|e| Error::Parse {
        path: origin.to_string(),
        message: e.to_string(),
    })?;
    let mut profiles = Vec::with_capacity(doc.profiles.len());
    for (i, sets) in doc.profiles.iter().enumerate() {
        let mut approvals = Vec::with_capacity(sets.len());
        for options in sets {
            approvals.push(OptionSet::from_options(options)?);
        }
        profiles.push(ApprovalProfile::new(i as u32 + 1, approvals));
    }
    let play = PlayRecord {
        params: doc.params,
        profiles,
        decisions: doc.decisions,
        dissatisfaction: doc.dissatisfaction,
    };
    play.validate()?;
    Ok((play, doc.meta))
}

pub fn write_transcript(path: &Path, play: &PlayRecord, meta: Option<&RunMeta>) -> Result<()> {
    std::fs::write(path, transcript_to_json(play, meta))?;
    Ok(())
}

pub fn read_transcript(path: &Path) -> Result<(PlayRecord, Option<RunMeta>)> {
    let text = std::fs::read_to_string(path)?;
    transcript_from_json(&text, &path.display().to_string())
}

/// Writes just the profiles, i.e. a file the scripted adversary replays.
pub fn write_script(path: &Path, play: &PlayRecord) -> Result<()> {
    let text =
        serde_json::to_string_pretty(&profiles_as_lists(play)).expect("profiles serialize");
    std::fs::write(path, text)?;
    Ok(())
}

/// CSV view: `round,decision,agent_1,...,agent_N` with 1 when the agent
/// approved that round's decision.
pub fn play_to_csv(play: &PlayRecord) -> String {
    let mut out = String::from("round,decision");
    for agent in 1..=play.params.agents {
        out.push_str(&format!(",agent_{agent}"));
    }
    out.push('\n');
    for (profile, &decision) in play.profiles.iter().zip(&play.decisions) {
        out.push_str(&format!("{},{}", profile.round, decision));
        for set in &profile.approvals {
            out.push_str(if set.contains(decision) { ",1" } else { ",0" });
        }
        out.push('\n');
    }
    out
}
