//! Reidemeister I and II moves on Gauss codes, with their inverses.

use super::{Arc, Crossing, CrossingId, Diagram, DiagramError, Pass, PassKind, PassLoc, Sign};

/// Order of the two passes of a new R1 kink along the strand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KinkOrder {
    OverUnder,
    UnderOver,
}

/// Which of the two R2 sites carries the over-strand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strand {
    A,
    B,
}

/// Relative orientation of the two strands in an R2 bigon.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum R2Orientation {
    /// Strands run in opposite directions: the second strand meets the
    /// crossings in reverse order.
    Opposite,
    /// Strands run in the same direction.
    Parallel,
}

/// Shape of an inserted R2 bigon. With `over = A`, `sign = ε` and
/// `Opposite`, site A receives `(O a ε, O b −ε)` and site B receives
/// `(U b −ε, U a ε)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct R2Variant {
    pub sign: Sign,
    pub over: Strand,
    pub orientation: R2Orientation,
}

impl Default for R2Variant {
    fn default() -> Self {
        Self {
            sign: Sign::Positive,
            over: Strand::A,
            orientation: R2Orientation::Opposite,
        }
    }
}

fn insertion_index(d: &Diagram, arc: Arc) -> usize {
    if d.components[arc.component].is_empty() {
        0
    } else {
        arc.position + 1
    }
}

fn cyclic_next(len: usize, p: usize) -> usize {
    (p + 1) % len
}

impl Diagram {
    /// Adds a one-crossing kink on `arc`.
    pub fn r1_insert(
        &self,
        arc: Arc,
        sign: Sign,
        order: KinkOrder,
    ) -> Result<Diagram, DiagramError> {
        self.check_arc(arc)?;
        let id = self.fresh_id();
        let (first, second) = match order {
            KinkOrder::OverUnder => (Pass::over(id, sign), Pass::under(id, sign)),
            KinkOrder::UnderOver => (Pass::under(id, sign), Pass::over(id, sign)),
        };
        let at = insertion_index(self, arc);
        let mut comps = self.clone().into_components();
        comps[arc.component].splice(at..at, [first, second]);
        Diagram::new(comps)
    }

    /// Removes a kink: a real crossing whose two passes are cyclically
    /// adjacent on one component.
    pub fn r1_remove(&self, id: CrossingId) -> Result<Diagram, DiagramError> {
        let not_kink = || DiagramError::NotApplicable(format!("crossing {id} is not an R1 kink"));
        let Some(Crossing::Real { over, under, .. }) = self.crossing(id) else {
            return Err(not_kink());
        };
        if !(self.adjacent(*over, *under) || self.adjacent(*under, *over)) {
            return Err(not_kink());
        }
        self.delete_passes(&[*over, *under])
    }

    /// Adds an R2 bigon between the strands at `site_a` and `site_b`.
    pub fn r2_insert(
        &self,
        site_a: Arc,
        site_b: Arc,
        variant: R2Variant,
    ) -> Result<Diagram, DiagramError> {
        self.check_arc(site_a)?;
        self.check_arc(site_b)?;
        if site_a == site_b {
            return Err(DiagramError::NotApplicable(
                "R2 sites must be distinct arcs".into(),
            ));
        }
        let a = self.fresh_id();
        let b = a + 1;
        let eps = variant.sign;
        let (kind_a, kind_b) = match variant.over {
            Strand::A => (PassKind::Over, PassKind::Under),
            Strand::B => (PassKind::Under, PassKind::Over),
        };
        let pass = |kind, id, sign| Pass {
            kind,
            crossing: CrossingId(id),
            sign: Some(sign),
        };
        let at_a = [pass(kind_a, a, eps), pass(kind_a, b, eps.flip())];
        let at_b = match variant.orientation {
            R2Orientation::Opposite => [pass(kind_b, b, eps.flip()), pass(kind_b, a, eps)],
            R2Orientation::Parallel => [pass(kind_b, a, eps), pass(kind_b, b, eps.flip())],
        };
        let ia = insertion_index(self, site_a);
        let ib = insertion_index(self, site_b);
        let mut comps = self.clone().into_components();
        // Insert the later position first so the earlier index stays valid.
        let mut edits = [(site_a.component, ia, at_a), (site_b.component, ib, at_b)];
        edits.sort_by_key(|e| std::cmp::Reverse((e.0, e.1)));
        for (c, at, passes) in edits {
            comps[c].splice(at..at, passes);
        }
        Diagram::new(comps)
    }

    /// Removes an R2 bigon formed by crossings `a` and `b`: opposite signs,
    /// the two over passes adjacent on one strand and the two under passes
    /// adjacent on another.
    pub fn r2_remove(&self, a: CrossingId, b: CrossingId) -> Result<Diagram, DiagramError> {
        let not_pair = || {
            DiagramError::NotApplicable(format!("crossings {a} and {b} do not form an R2 bigon"))
        };
        let (
            Some(Crossing::Real {
                sign: sa,
                over: oa,
                under: ua,
            }),
            Some(Crossing::Real {
                sign: sb,
                over: ob,
                under: ub,
            }),
        ) = (self.crossing(a), self.crossing(b))
        else {
            return Err(not_pair());
        };
        if a == b || *sa != sb.flip() {
            return Err(not_pair());
        }
        let overs = self.adjacent(*oa, *ob) || self.adjacent(*ob, *oa);
        let unders = self.adjacent(*ua, *ub) || self.adjacent(*ub, *ua);
        if !(overs && unders) {
            return Err(not_pair());
        }
        self.delete_passes(&[*oa, *ob, *ua, *ub])
    }

    /// Crossings removable by `r1_remove`.
    pub fn r1_candidates(&self) -> Vec<CrossingId> {
        self.crossings
            .keys()
            .copied()
            .filter(|&id| self.r1_remove(id).is_ok())
            .collect()
    }

    /// Pairs removable by `r2_remove`, with the smaller id first.
    pub fn r2_candidates(&self) -> Vec<(CrossingId, CrossingId)> {
        let ids: Vec<CrossingId> = self.crossings.keys().copied().collect();
        let mut out = Vec::new();
        for (i, &a) in ids.iter().enumerate() {
            for &b in &ids[i + 1..] {
                if self.r2_remove(a, b).is_ok() {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// `y` immediately follows `x` on the same component.
    fn adjacent(&self, x: PassLoc, y: PassLoc) -> bool {
        if x.component != y.component {
            return false;
        }
        let len = self.components[x.component].len();
        len >= 2 && cyclic_next(len, x.position) == y.position
    }

    fn delete_passes(&self, locs: &[PassLoc]) -> Result<Diagram, DiagramError> {
        let comps = self
            .components
            .iter()
            .enumerate()
            .map(|(c, comp)| {
                comp.iter()
                    .enumerate()
                    .filter(|&(p, _)| {
                        !locs.contains(&PassLoc {
                            component: c,
                            position: p,
                        })
                    })
                    .map(|(_, pass)| *pass)
                    .collect()
            })
            .collect();
        Diagram::new(comps)
    }
}
