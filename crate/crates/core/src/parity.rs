//! Even/odd/link classification of real crossings.
//!
//! A self-crossing of component `c` is odd when an odd number of passes lie
//! strictly between its two occurrences in `c`'s sequence, counting only
//! passes of other self-crossings of `c`. Virtual passes and passes of link
//! crossings are skipped. For a knot this is the usual Gauss-code parity.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::diagram::{Crossing, CrossingId, Diagram, PassLoc};

/// Parity class of one real crossing. Component indices are 0-based;
/// `Display` prints them 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even {
        component: usize,
    },
    Odd {
        component: usize,
    },
    /// Crossing between components `i < j`.
    Link(usize, usize),
}

impl Parity {
    pub fn is_odd(&self) -> bool {
        matches!(self, Parity::Odd { .. })
    }

    pub fn is_even(&self) -> bool {
        matches!(self, Parity::Even { .. })
    }

    pub fn is_link(&self) -> bool {
        matches!(self, Parity::Link(..))
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even { .. } => f.write_str("even"),
            Parity::Odd { .. } => f.write_str("odd"),
            Parity::Link(i, j) => write!(f, "link({},{})", i + 1, j + 1),
        }
    }
}

impl Serialize for Parity {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Labels for every real crossing of a diagram.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct ParityLabeling {
    labels: BTreeMap<CrossingId, Parity>,
}

impl ParityLabeling {
    pub fn get(&self, id: CrossingId) -> Option<Parity> {
        self.labels.get(&id).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (CrossingId, Parity)> + '_ {
        self.labels.iter().map(|(k, v)| (*k, *v))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn odd_count(&self) -> usize {
        self.labels.values().filter(|p| p.is_odd()).count()
    }

    pub fn has_odd(&self) -> bool {
        self.labels.values().any(Parity::is_odd)
    }
}

/// Between-counts for one self-crossing, measured along both arcs of its
/// component between the two occurrences.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BetweenCounts {
    pub inner: usize,
    pub outer: usize,
}

impl BetweenCounts {
    pub fn consistent(&self) -> bool {
        self.inner % 2 == self.outer % 2
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct WellDefinedReport {
    pub counts: BTreeMap<CrossingId, BetweenCounts>,
}

impl WellDefinedReport {
    pub fn passed(&self) -> bool {
        self.counts.values().all(BetweenCounts::consistent)
    }
}

fn self_crossing(c: &Crossing) -> Option<(PassLoc, PassLoc)> {
    match *c {
        Crossing::Real { over, under, .. } if over.component == under.component => {
            Some(if over.position < under.position {
                (over, under)
            } else {
                (under, over)
            })
        }
        _ => None,
    }
}

/// Positions on each component that belong to self-crossings of that
/// component; these are the only passes that count.
fn counting_mask(d: &Diagram) -> Vec<Vec<bool>> {
    let mut mask: Vec<Vec<bool>> = d
        .components()
        .iter()
        .map(|c| vec![false; c.len()])
        .collect();
    for c in d.crossings().values() {
        if let Some((a, b)) = self_crossing(c) {
            mask[a.component][a.position] = true;
            mask[b.component][b.position] = true;
        }
    }
    mask
}

fn between_counts(d: &Diagram, mask: &[Vec<bool>]) -> BTreeMap<CrossingId, BetweenCounts> {
    let mut out = BTreeMap::new();
    for (id, c) in d.crossings() {
        if let Some((a, b)) = self_crossing(c) {
            let row = &mask[a.component];
            let inner = row[a.position + 1..b.position]
                .iter()
                .filter(|&&m| m)
                .count();
            let total = row.iter().filter(|&&m| m).count();
            out.insert(
                *id,
                BetweenCounts {
                    inner,
                    outer: total - inner - 2,
                },
            );
        }
    }
    out
}

pub fn classify(d: &Diagram) -> ParityLabeling {
    let mask = counting_mask(d);
    let counts = between_counts(d, &mask);
    let mut labels = BTreeMap::new();
    for (id, c) in d.crossings() {
        let Crossing::Real { over, under, .. } = *c else {
            continue;
        };
        let label = if over.component != under.component {
            let (i, j) = (over.component, under.component);
            Parity::Link(i.min(j), i.max(j))
        } else if counts[id].inner % 2 == 1 {
            Parity::Odd {
                component: over.component,
            }
        } else {
            Parity::Even {
                component: over.component,
            }
        };
        labels.insert(*id, label);
    }
    ParityLabeling { labels }
}

/// Checks that both complementary between-counts of every self-crossing have
/// the same parity, so the classification does not depend on which arc of
/// the cycle is read.
pub fn check_well_defined(d: &Diagram) -> WellDefinedReport {
    WellDefinedReport {
        counts: between_counts(d, &counting_mask(d)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::ParseOptions;

    fn labels(d: &Diagram) -> Vec<(u32, String)> {
        classify(d)
            .iter()
            .map(|(id, p)| (id.0, p.to_string()))
            .collect()
    }

    #[test]
    fn knot_3_1() {
        let d = Diagram::parse("O1-,O2-,U1-,O3+,U2-,U3+").unwrap();
        assert_eq!(
            labels(&d),
            [(1, "odd".into()), (2, "even".into()), (3, "odd".into())]
        );
        let report = check_well_defined(&d);
        assert!(report.passed());
        assert_eq!(
            report.counts[&CrossingId(1)],
            BetweenCounts { inner: 1, outer: 3 }
        );
        assert_eq!(
            report.counts[&CrossingId(2)],
            BetweenCounts { inner: 2, outer: 2 }
        );
    }

    #[test]
    fn two_component_link() {
        let d = Diagram::parse_with(
            "O1,O7,O3,U1,U2,U3,O2;U4,O5,U6,U5,O4,O6,U7",
            ParseOptions {
                permissive_signs: true,
            },
        )
        .unwrap();
        let l = classify(&d);
        for id in [1, 2, 4, 5] {
            assert!(l.get(CrossingId(id)).unwrap().is_odd(), "crossing {id}");
        }
        for id in [3, 6] {
            assert!(l.get(CrossingId(id)).unwrap().is_even(), "crossing {id}");
        }
        assert_eq!(l.get(CrossingId(7)), Some(Parity::Link(0, 1)));
        assert_eq!(l.get(CrossingId(7)).unwrap().to_string(), "link(1,2)");
        assert_eq!(l.get(CrossingId(4)), Some(Parity::Odd { component: 1 }));
    }

    #[test]
    fn empty_and_kink() {
        assert!(classify(&Diagram::unknot()).is_empty());
        let d = Diagram::parse("O1+,U1+").unwrap();
        assert!(classify(&d).get(CrossingId(1)).unwrap().is_even());
        assert_eq!(
            check_well_defined(&d).counts[&CrossingId(1)],
            BetweenCounts { inner: 0, outer: 0 }
        );
    }

    #[test]
    fn virtual_passes_are_skipped() {
        let d = Diagram::parse("O1-,V9,O2-,U1-,V9,O3+,U2-,U3+").unwrap();
        assert_eq!(classify(&d), classify(&d.without_virtual()));
        assert_eq!(classify(&d).len(), 3);
    }
}
