//! Reconstruction-session scoring: compares an answered arrangement of the
//! 12 pieces against a reference wheel and reports how many landed in the
//! right slot and how far the misplaced ones drifted around the ring.

use serde::{Deserialize, Serialize};

use crate::colorwheel::Hue;
use crate::error::{Error, Result};

pub const SESSION_VERSION: &str = "1";

/// Slot-to-piece placement. Slot `i` is wheel position `i` (the slot whose
/// correct piece is hue `i` on the canonical wheel); empty slots record an
/// abandoned or partial attempt. Serializes as a bare 12-entry array of hue
/// names or nulls.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Arrangement {
    pub slots: [Option<Hue>; 12],
}

impl Arrangement {
    /// The correct wheel: slot `i` holds hue `i`.
    pub fn canonical() -> Arrangement {
        let mut slots = [None; 12];
        for hue in Hue::ALL {
            slots[hue.index()] = Some(hue);
        }
        Arrangement { slots }
    }

    pub fn placed_count(&self) -> usize {
        self.slots.iter().filter(|s| s.is_some()).count()
    }

    pub fn is_complete(&self) -> bool {
        self.placed_count() == 12
    }

    /// No piece may appear in two slots.
    pub fn validate(&self) -> Result<()> {
        let mut seen = [false; 12];
        for hue in self.slots.iter().flatten() {
            if seen[hue.index()] {
                return Err(Error::DuplicatePiece(*hue));
            }
            seen[hue.index()] = true;
        }
        Ok(())
    }

    /// Slot where `hue` sits, if placed.
    pub fn slot_of(&self, hue: Hue) -> Option<usize> {
        self.slots.iter().position(|s| *s == Some(hue))
    }
}

/// A recorded session: the answered arrangement plus optional timing notes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Session {
    pub version: String,
    pub answer: Arrangement,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub duration_s: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub notes: Option<String>,
}

impl Session {
    pub fn new(answer: Arrangement) -> Session {
        Session {
            version: SESSION_VERSION.to_string(),
            answer,
            duration_s: None,
            notes: None,
        }
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("session serializes");
        s.push('\n');
        s
    }

    pub fn from_json_str(json: &str) -> Result<Session> {
        let session: Session = serde_json::from_str(json)
            .map_err(|e| Error::MalformedSession(e.to_string()))?;
        if session.version != SESSION_VERSION {
            return Err(Error::MalformedSession(format!(
                "unsupported session version {:?}, expected {:?}",
                session.version, SESSION_VERSION
            )));
        }
        Ok(session)
    }
}

/// Ring-wrapped slot distance: being off by one clockwise or
/// counterclockwise is the same severity, and the maximum is 6 (antipodal).
pub fn circular_distance(a: usize, b: usize) -> usize {
    debug_assert!(a < 12 && b < 12);
    let d = a.abs_diff(b) % 12;
    d.min(12 - d)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Confusion {
    pub slot: usize,
    pub expected: Hue,
    pub placed: Hue,
    pub distance: usize,
}

/// Correctness metrics for one answered arrangement.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScoreReport {
    pub n_correct: usize,
    pub placed: usize,
    /// Placement count per circular distance 0..=6; index 0 is `n_correct`.
    pub histogram: [usize; 7],
    pub confusions: Vec<Confusion>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub duration_s: Option<f64>,
}

impl ScoreReport {
    pub fn with_duration(mut self, duration_s: Option<f64>) -> ScoreReport {
        self.duration_s = duration_s;
        self
    }
}

/// Scores `answer` against `reference`. The reference must be a complete,
/// duplicate-free wheel; each placed piece contributes its circular distance
/// from the slot the reference assigns it.
pub fn score_arrangement(answer: &Arrangement, reference: &Arrangement) -> Result<ScoreReport> {
    answer.validate()?;
    reference.validate()?;
    if !reference.is_complete() {
        return Err(Error::IncompleteReference);
    }
    let mut histogram = [0usize; 7];
    let mut confusions = Vec::new();
    for (slot, placed) in answer.slots.iter().enumerate() {
        let Some(placed) = *placed else { continue };
        let correct_slot = reference.slot_of(placed).expect("complete reference");
        let distance = circular_distance(slot, correct_slot);
        histogram[distance] += 1;
        if distance > 0 {
            confusions.push(Confusion {
                slot,
                expected: reference.slots[slot].expect("complete reference"),
                placed,
                distance,
            });
        }
    }
    Ok(ScoreReport {
        n_correct: histogram[0],
        placed: answer.placed_count(),
        histogram,
        confusions,
        duration_s: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circular_distance_examples() {
        assert_eq!(circular_distance(0, 0), 0);
        assert_eq!(circular_distance(1, 11), 2);
        assert_eq!(circular_distance(3, 9), 6);
        assert_eq!(circular_distance(9, 3), 6);
        for a in 0..12 {
            for b in 0..12 {
                assert!(circular_distance(a, b) <= 6);
                assert_eq!(circular_distance(a, b), circular_distance(b, a));
            }
        }
    }

    #[test]
    fn identity_scores_twelve() {
        let report =
            score_arrangement(&Arrangement::canonical(), &Arrangement::canonical()).unwrap();
        assert_eq!(report.n_correct, 12);
        assert_eq!(report.placed, 12);
        assert_eq!(report.histogram, [12, 0, 0, 0, 0, 0, 0]);
        assert!(report.confusions.is_empty());
    }

    #[test]
    fn blue_purple_swap_costs_two_at_distance_two() {
        let mut answer = Arrangement::canonical();
        answer.slots.swap(Hue::Blue.index(), Hue::Purple.index());
        let report = score_arrangement(&answer, &Arrangement::canonical()).unwrap();
        assert_eq!(report.n_correct, 10);
        assert_eq!(report.histogram[2], 2);
        assert_eq!(report.confusions.len(), 2);
        let in_blue_slot = report
            .confusions
            .iter()
            .find(|c| c.slot == Hue::Blue.index())
            .unwrap();
        assert_eq!(in_blue_slot.expected, Hue::Blue);
        assert_eq!(in_blue_slot.placed, Hue::Purple);
    }

    #[test]
    fn partial_arrangements_are_allowed() {
        let mut answer = Arrangement { slots: [None; 12] };
        answer.slots[0] = Some(Hue::Yellow);
        answer.slots[5] = Some(Hue::Red);
        let report = score_arrangement(&answer, &Arrangement::canonical()).unwrap();
        assert_eq!(report.placed, 2);
        assert_eq!(report.n_correct, 1);
        assert_eq!(report.histogram.iter().sum::<usize>(), 2);
    }

    #[test]
    fn duplicate_piece_is_rejected() {
        let mut answer = Arrangement::canonical();
        answer.slots[3] = Some(Hue::Yellow);
        assert_eq!(
            score_arrangement(&answer, &Arrangement::canonical()),
            Err(Error::DuplicatePiece(Hue::Yellow))
        );
    }

    #[test]
    fn incomplete_reference_is_rejected() {
        let mut reference = Arrangement::canonical();
        reference.slots[7] = None;
        assert_eq!(
            score_arrangement(&Arrangement::canonical(), &reference),
            Err(Error::IncompleteReference)
        );
    }

    #[test]
    fn self_score_counts_all_placed_pieces() {
        let mut a = Arrangement { slots: [None; 12] };
        a.slots[2] = Some(Hue::Green);
        a.slots[8] = Some(Hue::Yellow);
        a.slots[11] = Some(Hue::Red);
        let report = score_arrangement(&a, &Arrangement::canonical());
        // Against itself as reference it would be incomplete; against the
        // canonical wheel all three land at nonzero distances.
        assert_eq!(report.unwrap().n_correct, 0);
    }

    #[test]
    fn relabeling_both_sides_preserves_the_score() {
        let mut answer = Arrangement::canonical();
        answer.slots.swap(1, 6);
        answer.slots.swap(3, 9);
        let base = score_arrangement(&answer, &Arrangement::canonical()).unwrap();

        // Apply the same hue permutation (rotate by 5) to answer and reference.
        let permute = |h: Hue| Hue::from_index((h.index() + 5) % 12).unwrap();
        let map = |a: &Arrangement| Arrangement {
            slots: a.slots.map(|s| s.map(permute)),
        };
        let relabeled =
            score_arrangement(&map(&answer), &map(&Arrangement::canonical())).unwrap();
        assert_eq!(relabeled.n_correct, base.n_correct);
    }

    #[test]
    fn session_json_round_trip() {
        let mut session = Session::new(Arrangement::canonical());
        session.duration_s = Some(390.0);
        session.notes = Some("example".into());
        let json = session.to_json_string();
        assert_eq!(Session::from_json_str(&json).unwrap(), session);
    }

    #[test]
    fn session_with_wrong_version_is_rejected() {
        let json = Session::new(Arrangement::canonical())
            .to_json_string()
            .replacen("\"version\": \"1\"", "\"version\": \"7\"", 1);
        assert!(matches!(
            Session::from_json_str(&json),
            Err(Error::MalformedSession(_))
        ));
    }
}
