use std::fmt;

use crate::complex::{FaceId, SimplicialComplex};
use crate::face::Face;

use super::{MorseEvent, MorseTrace, TraceError};

/// A failed axiom of a monotone discrete Morse function, located at the
/// 0-based step of the trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomViolation {
    /// (i) a face was removed while one of its cofaces was still present.
    CofacePresent { step: usize, face: Face, coface: Face },
    /// (ii)/(iii) the two faces of a step are not nested with codimension one.
    NotNested { step: usize, free: Face, coface: Face },
    /// (iv) the dimension of the larger face went up.
    DimensionIncrease { step: usize, from: usize, to: usize },
    /// (v) a face was removed twice.
    Repeated { step: usize, face: Face },
    /// (v) a face was never removed.
    Missing { face: Face },
    /// (vi) a critical face was taken while a free face one dimension lower
    /// was available.
    FreeFaceAvailable { step: usize, critical: Face, free: Face },
}

impl AxiomViolation {
    /// Axiom label, (i) to (vi).
    pub fn axiom(&self) -> &'static str {
        match self {
            AxiomViolation::CofacePresent { .. } => "i",
            AxiomViolation::NotNested { .. } => "iii",
            AxiomViolation::DimensionIncrease { .. } => "iv",
            AxiomViolation::Repeated { .. } | AxiomViolation::Missing { .. } => "v",
            AxiomViolation::FreeFaceAvailable { .. } => "vi",
        }
    }
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "axiom ({}): ", self.axiom())?;
        match self {
            AxiomViolation::CofacePresent { step, face, coface } => {
                write!(f, "step {step} removes {face} while {coface} is present")
            }
            AxiomViolation::NotNested { step, free, coface } => {
                write!(f, "step {step} pairs {free} with {coface}, which is not a facet-coface pair")
            }
            AxiomViolation::DimensionIncrease { step, from, to } => {
                write!(f, "step {step} raises the dimension from {from} to {to}")
            }
            AxiomViolation::Repeated { step, face } => write!(f, "step {step} removes {face} a second time"),
            AxiomViolation::Missing { face } => write!(f, "face {face} is never removed"),
            AxiomViolation::FreeFaceAvailable { step, critical, free } => {
                write!(f, "step {step} declares {critical} critical while {free} is free")
            }
        }
    }
}

struct Replay<'a> {
    k: &'a SimplicialComplex,
    offsets: Vec<usize>,
    alive: Vec<bool>,
}

impl Replay<'_> {
    fn gid(&self, id: FaceId) -> usize {
        self.offsets[id.dim as usize] + id.index as usize
    }

    fn live_cofaces(&self, id: FaceId) -> impl Iterator<Item = FaceId> + '_ {
        let up = id.dim as usize + 1;
        self.k
            .cofaces(id)
            .iter()
            .map(move |&c| FaceId::new(up, c as usize))
            .filter(move |&c| self.alive[self.gid(c)])
    }

    /// A live face whose only live proper coface is one face of the next
    /// dimension. Since the live faces form a subcomplex, that coface must
    /// itself have no live cofaces.
    fn is_free(&self, id: FaceId) -> bool {
        let mut it = self.live_cofaces(id);
        match (it.next(), it.next()) {
            (Some(c), None) => self.live_cofaces(c).next().is_none(),
            _ => false,
        }
    }
}

/// Replays `trace` on `k` and checks that it defines a monotone discrete
/// Morse function: every face is removed once, only after its cofaces;
/// paired faces are a free face and its unique coface; the dimension of the
/// larger face never increases; and no face is taken as critical while a
/// free face of one dimension lower exists.
pub fn check_monotone_trace(k: &SimplicialComplex, trace: &MorseTrace) -> Result<Vec<AxiomViolation>, TraceError> {
    let in_range = |id: FaceId| !k.is_empty() && (id.dim as usize) <= k.dim() && (id.index as usize) < k.num_faces(id.dim as usize);
    for e in &trace.events {
        let ids = match *e {
            MorseEvent::Collapse { free, coface } => [Some(free), Some(coface)],
            MorseEvent::Critical(f) => [Some(f), None],
        };
        if let Some(bad) = ids.into_iter().flatten().find(|&id| !in_range(id)) {
            return Err(TraceError::UnknownFaceId(bad));
        }
    }
    let mut offsets = vec![0];
    if !k.is_empty() {
        for j in 0..=k.dim() {
            offsets.push(offsets[j] + k.num_faces(j));
        }
    }
    let total = *offsets.last().expect("offsets");
    let mut r = Replay { k, offsets, alive: vec![true; total] };
    let mut removed = vec![false; total];
    let mut out = Vec::new();
    let mut last_dim = usize::MAX;

    for (step, e) in trace.events.iter().enumerate() {
        let (small, big) = match *e {
            MorseEvent::Collapse { free, coface } => (Some(free), coface),
            MorseEvent::Critical(f) => (None, f),
        };
        let big_dim = big.dim as usize;
        if big_dim > last_dim {
            out.push(AxiomViolation::DimensionIncrease { step, from: last_dim, to: big_dim });
        }
        last_dim = big_dim;

        for id in small.into_iter().chain([big]) {
            let g = r.gid(id);
            if removed[g] {
                out.push(AxiomViolation::Repeated { step, face: k.face_owned(id) });
            }
        }

        match small {
            Some(sigma) => {
                let nested = sigma.dim + 1 == big.dim
                    && k.cofaces(sigma).contains(&big.index);
                if !nested {
                    out.push(AxiomViolation::NotNested { step, free: k.face_owned(sigma), coface: k.face_owned(big) });
                }
                if let Some(c) = r.live_cofaces(big).next() {
                    out.push(AxiomViolation::CofacePresent { step, face: k.face_owned(big), coface: k.face_owned(c) });
                }
                if let Some(c) = r.live_cofaces(sigma).find(|&c| c != big) {
                    out.push(AxiomViolation::CofacePresent { step, face: k.face_owned(sigma), coface: k.face_owned(c) });
                }
            }
            None => {
                if let Some(c) = r.live_cofaces(big).next() {
                    out.push(AxiomViolation::CofacePresent { step, face: k.face_owned(big), coface: k.face_owned(c) });
                }
                if big_dim > 0 {
                    let low = big_dim - 1;
                    if let Some(i) = (0..k.num_faces(low)).find(|&i| {
                        let id = FaceId::new(low, i);
                        r.alive[r.gid(id)] && r.is_free(id)
                    }) {
                        out.push(AxiomViolation::FreeFaceAvailable {
                            step,
                            critical: k.face_owned(big),
                            free: k.face_owned(FaceId::new(low, i)),
                        });
                    }
                }
            }
        }
        for id in small.into_iter().chain([big]) {
            let g = r.gid(id);
            removed[g] = true;
            r.alive[g] = false;
        }
    }
    for id in k.face_ids() {
        if !removed[r.gid(id)] {
            out.push(AxiomViolation::Missing { face: k.face_owned(id) });
        }
    }
    Ok(out)
}
