use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Passing a positive hyperbolic point of type ac, cc or aa, seen from the
/// c-circles near a distinguished binding component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoherenceEvent {
    /// (1) an a-arc splits off an incoherent c-circle.
    AcSplit,
    /// (2) a coherent c-circle merges into an a-arc.
    AcMerge,
    /// (3-a) an incoherent circle splits into two incoherent ones.
    CcSplitIncoherent,
    /// (3-b) a coherent circle splits into a coherent and an incoherent one.
    CcSplitCoherent,
    /// (4-a) two coherent circles merge into one coherent circle.
    CcMergeCoherent,
    /// (4-b) a coherent and an incoherent circle merge into an incoherent one.
    CcMergeMixed,
    /// aa-tiles do not touch c-circles.
    Aa,
}

impl CoherenceEvent {
    pub const ALL: [CoherenceEvent; 7] = [
        CoherenceEvent::AcSplit,
        CoherenceEvent::AcMerge,
        CoherenceEvent::CcSplitIncoherent,
        CoherenceEvent::CcSplitCoherent,
        CoherenceEvent::CcMergeCoherent,
        CoherenceEvent::CcMergeMixed,
        CoherenceEvent::Aa,
    ];

    pub fn label(self) -> &'static str {
        match self {
            CoherenceEvent::AcSplit => "1",
            CoherenceEvent::AcMerge => "2",
            CoherenceEvent::CcSplitIncoherent => "3a",
            CoherenceEvent::CcSplitCoherent => "3b",
            CoherenceEvent::CcMergeCoherent => "4a",
            CoherenceEvent::CcMergeMixed => "4b",
            CoherenceEvent::Aa => "aa",
        }
    }

    /// Circles consumed: `(coherent, incoherent)`.
    pub fn consumes(self) -> (u64, u64) {
        match self {
            CoherenceEvent::AcSplit | CoherenceEvent::Aa => (0, 0),
            CoherenceEvent::AcMerge | CoherenceEvent::CcSplitCoherent => (1, 0),
            CoherenceEvent::CcSplitIncoherent => (0, 1),
            CoherenceEvent::CcMergeCoherent => (2, 0),
            CoherenceEvent::CcMergeMixed => (1, 1),
        }
    }

    /// Circles produced: `(coherent, incoherent)`.
    pub fn produces(self) -> (u64, u64) {
        match self {
            CoherenceEvent::AcMerge | CoherenceEvent::Aa => (0, 0),
            CoherenceEvent::AcSplit | CoherenceEvent::CcMergeMixed => (0, 1),
            CoherenceEvent::CcSplitIncoherent => (0, 2),
            CoherenceEvent::CcSplitCoherent => (1, 1),
            CoherenceEvent::CcMergeCoherent => (1, 0),
        }
    }

    /// Net change `(Δ coherent, Δ incoherent)`.
    pub fn delta(self) -> (i64, i64) {
        let (c0, i0) = self.consumes();
        let (c1, i1) = self.produces();
        (c1 as i64 - c0 as i64, i1 as i64 - i0 as i64)
    }
}

impl fmt::Display for CoherenceEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for CoherenceEvent {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')').replace('-', "");
        CoherenceEvent::ALL
            .into_iter()
            .find(|e| e.label() == t)
            .ok_or_else(|| Error::Malformed(format!("unknown coherence event '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CoherenceState {
    pub coherent: u64,
    pub incoherent: u64,
}

impl CoherenceState {
    pub fn apply(self, e: CoherenceEvent, step: usize) -> Result<CoherenceState, Error> {
        let (c0, i0) = e.consumes();
        let (c1, i1) = e.produces();
        if self.coherent < c0 || self.incoherent < i0 {
            let needed = match (self.coherent < c0, self.incoherent < i0) {
                (true, true) => "coherent and incoherent",
                (true, false) => "coherent",
                _ => "incoherent",
            };
            return Err(Error::EmptyCirclePool {
                step,
                event: e.label().to_string(),
                needed: needed.to_string(),
            });
        }
        Ok(CoherenceState {
            coherent: self.coherent - c0 + c1,
            incoherent: self.incoherent - i0 + i1,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoherenceRun {
    /// States before the first event and after each one.
    pub history: Vec<CoherenceState>,
    pub incoherent_monotone: bool,
    /// `N(0) = N(1)` for the incoherent count, forced by the monodromy
    /// identifying the pages `S_1` and `S_0`.
    pub incoherent_closes: bool,
    /// The same condition for the coherent count.
    pub coherent_closes: bool,
}

impl CoherenceRun {
    pub fn closure_holds(&self) -> bool {
        self.incoherent_closes && self.coherent_closes
    }

    pub fn final_state(&self) -> CoherenceState {
        *self.history.last().expect("history starts with the initial state")
    }
}

pub fn coherence_run(initial: CoherenceState, events: &[CoherenceEvent]) -> Result<CoherenceRun, Error> {
    let mut history = vec![initial];
    let mut cur = initial;
    for (step, &e) in events.iter().enumerate() {
        cur = cur.apply(e, step + 1)?;
        history.push(cur);
    }
    Ok(CoherenceRun {
        incoherent_monotone: history.windows(2).all(|p| p[0].incoherent <= p[1].incoherent),
        incoherent_closes: cur.incoherent == initial.incoherent,
        coherent_closes: cur.coherent == initial.coherent,
        history,
    })
}
