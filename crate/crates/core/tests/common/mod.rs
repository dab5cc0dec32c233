#![allow(dead_code)]

use pbq_core::diagram::{Arc, Diagram, KinkOrder, Pass, R2Orientation, R2Variant, Sign, Strand};
use pbq_core::engine::{canonical, raw_determinant, Options, PolyValue};
use pbq_core::ring::{Coefficient, IntPoly, Integer, LaurentPoly, Matrix, Monomial, Var};
use pbq_core::switches::{verify_ruleset, Family, RuleSet, Switch};
use rand::seq::SliceRandom;
use rand::Rng;

pub const KNOT_3_1: &str = "O1-,O2-,U1-,O3+,U2-,U3+";
pub const KNOT_4_96: &str = "O1-,O2-,U3+,U1-,O4-,U2-,O3+,U4-";
pub const LINK_7: &str = "O1-,O7-,O3+,U1-,U2-,U3+,O2-;U4-,O5+,U6-,U5+,O4-,O6-,U7-";
pub const KNOT_3_1_VIRTUAL: &str = "O1-,V4,V5,O2-,V4,U1-,O3+,V5,U2-,U3+";

pub fn diagram(code: &str) -> Diagram {
    Diagram::parse(code).unwrap()
}

/// Laplace expansion along the first row.
pub fn cofactor_det<R: Coefficient>(m: &Matrix<R>) -> LaurentPoly<R> {
    let n = m.rows();
    match n {
        0 => LaurentPoly::one(),
        1 => m.get(0, 0).clone(),
        _ => {
            let mut acc = LaurentPoly::zero();
            for c in 0..n {
                if m.get(0, c).is_zero() {
                    continue;
                }
                let term = m.get(0, c) * &cofactor_det(&m.minor(0, c));
                acc = if c % 2 == 0 {
                    &acc + &term
                } else {
                    &acc - &term
                };
            }
            acc
        }
    }
}

pub fn random_int_poly<G: Rng>(rng: &mut G, max_terms: usize, vars: &[Var]) -> IntPoly {
    let terms = rng.gen_range(0..=max_terms);
    LaurentPoly::from_terms((0..terms).map(|_| {
        let mono = Monomial::from_powers(vars.iter().map(|&v| (v, rng.gen_range(-2..=2))));
        (mono, rng.gen_range(-3i64..=3).into())
    }))
}

pub fn random_int_matrix<G: Rng>(rng: &mut G, n: usize, vars: &[Var]) -> Matrix<Integer> {
    let mut m = Matrix::zeros(n, n);
    for r in 0..n {
        for c in 0..n {
            m.set(r, c, random_int_poly(rng, 3, vars));
        }
    }
    m
}

fn random_sign<G: Rng>(rng: &mut G) -> Sign {
    if rng.gen() {
        Sign::Positive
    } else {
        Sign::Negative
    }
}

/// A random Gauss code: `real` real crossings, `virt` virtual crossings,
/// passes shuffled over `components` (possibly empty) components.
pub fn random_diagram<G: Rng>(rng: &mut G, real: u32, virt: u32, components: usize) -> Diagram {
    let mut passes = Vec::new();
    for id in 1..=real {
        let sign = random_sign(rng);
        passes.push(Pass::over(id, sign));
        passes.push(Pass::under(id, sign));
    }
    for id in real + 1..=real + virt {
        passes.push(Pass::virtual_pass(id));
        passes.push(Pass::virtual_pass(id));
    }
    passes.shuffle(rng);
    let mut comps = vec![Vec::new(); components];
    for p in passes {
        comps[rng.gen_range(0..components)].push(p);
    }
    Diagram::new(comps).unwrap()
}

pub fn random_arc<G: Rng>(rng: &mut G, d: &Diagram) -> Arc {
    let component = rng.gen_range(0..d.component_count());
    let len = d.components()[component].len();
    Arc {
        component,
        position: if len == 0 { 0 } else { rng.gen_range(0..len) },
    }
}

pub fn random_r2_variant<G: Rng>(rng: &mut G) -> R2Variant {
    R2Variant {
        sign: random_sign(rng),
        over: if rng.gen() { Strand::A } else { Strand::B },
        orientation: if rng.gen() {
            R2Orientation::Opposite
        } else {
            R2Orientation::Parallel
        },
    }
}

/// Applies one random R1/R2 insertion or removal; `None` when the chosen
/// move has no site.
pub fn random_move<G: Rng>(rng: &mut G, d: &Diagram) -> Option<(String, Diagram)> {
    match rng.gen_range(0..4) {
        0 => {
            let arc = random_arc(rng, d);
            let sign = random_sign(rng);
            let order = if rng.gen() {
                KinkOrder::OverUnder
            } else {
                KinkOrder::UnderOver
            };
            let e = d.r1_insert(arc, sign, order).ok()?;
            Some((format!("r1+ {arc:?} {sign:?} {order:?}"), e))
        }
        1 => {
            let id = *d.r1_candidates().choose(rng)?;
            Some((format!("r1- {id}"), d.r1_remove(id).ok()?))
        }
        2 => {
            let a = random_arc(rng, d);
            let b = random_arc(rng, d);
            let v = random_r2_variant(rng);
            let e = d.r2_insert(a, b, v).ok()?;
            Some((format!("r2+ {a:?} {b:?} {v:?}"), e))
        }
        _ => {
            let (a, b) = *d.r2_candidates().choose(rng)?;
            Some((format!("r2- {a} {b}"), d.r2_remove(a, b).ok()?))
        }
    }
}

fn names<R: Coefficient>(rs: &RuleSet<R>) -> Vec<String> {
    let mut out: Vec<String> = rs
        .even
        .iter()
        .chain(&rs.odd)
        .chain(rs.link.values())
        .chain(rs.virtual_map.as_ref())
        .map(|s| s.name.clone())
        .collect();
    out.sort();
    out.dedup();
    out
}

fn substitute<R: Coefficient>(rs: &RuleSet<R>, name: &str, mutant: &Switch<R>) -> RuleSet<R> {
    let swap = |s: &Switch<R>| {
        if s.name == name {
            mutant.clone()
        } else {
            s.clone()
        }
    };
    RuleSet {
        family: rs.family,
        even: rs.even.iter().map(swap).collect(),
        odd: rs.odd.iter().map(swap).collect(),
        link: rs.link.iter().map(|(k, s)| (*k, swap(s))).collect(),
        virtual_map: rs.virtual_map.as_ref().map(swap),
    }
}

fn find<'a, R: Coefficient>(rs: &'a RuleSet<R>, name: &str) -> &'a Switch<R> {
    rs.even
        .iter()
        .chain(&rs.odd)
        .chain(rs.link.values())
        .chain(rs.virtual_map.as_ref())
        .find(|s| s.name == name)
        .unwrap()
}

pub struct MutantOutcome {
    pub name: String,
    /// Every Yang-Baxter identity still holds.
    pub ybe_holds: bool,
    /// The whole rule set report still passes.
    pub passed: bool,
}

/// Every one-entry `+1` mutant of every switch in `rs`, substituted for the
/// original wherever it occurs.
pub fn mutants<R: Coefficient>(
    rs: &RuleSet<R>,
    rebuild: impl Fn(&Switch<R>) -> Switch<R>,
) -> Vec<MutantOutcome> {
    let mut out = Vec::new();
    for name in names(rs) {
        let original = find(rs, &name);
        for (r, c) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            let mutant = rebuild(&original.perturbed(r, c, &LaurentPoly::one()));
            let report = verify_ruleset(&substitute(rs, &name, &mutant));
            out.push(MutantOutcome {
                name: mutant.name.clone(),
                ybe_holds: report.equations.iter().all(|e| e.holds),
                passed: report.passed(),
            });
        }
    }
    out
}

pub fn with_fresh_inverse(s: &Switch<Integer>) -> Switch<Integer> {
    Switch::from_forward(s.name.clone(), s.forward.clone()).unwrap_or_else(|_| s.clone())
}

pub const SEQUENCES_PER_DIAGRAM: usize = 70;
const MAX_CROSSINGS: usize = 11;

pub fn families(d: &Diagram, with_quaternions: bool) -> Vec<Family> {
    Family::ALL
        .into_iter()
        .filter(|f| f.applies_to(d.component_count()))
        .filter(|f| with_quaternions || !f.is_quaternionic())
        .collect()
}

pub fn values(d: &Diagram, fams: &[Family]) -> Vec<PolyValue> {
    fams.iter()
        .map(|&f| canonical(d, f, &Options::default()).unwrap())
        .collect()
}

/// Determinant shifted to minimal `s`, `t` exponents, without the writhe
/// sign.
pub fn unsigned(d: &Diagram, fams: &[Family]) -> Vec<PolyValue> {
    fams.iter()
        .map(|&f| {
            raw_determinant(d, f, &Options::default())
                .unwrap()
                .normalized(false)
        })
        .collect()
}

/// Random R1/R2 sequences of one to four moves on each base code. Every
/// canonical value must agree up to sign and every unsigned determinant
/// exactly; quaternionic families are evaluated on every fifth sequence.
/// Returns the number of sequences checked.
pub fn check_random_sequences<G: Rng>(
    rng: &mut G,
    codes: &[&str],
    per_code: usize,
) -> Result<usize, String> {
    let mut sequences = 0;
    for &code in codes {
        let base = diagram(code);
        let all = families(&base, true);
        let cheap = families(&base, false);
        let expected = values(&base, &all);
        let expected_raw = unsigned(&base, &all);
        for k in 0..per_code {
            let mut d = base.clone();
            let mut log = Vec::new();
            let steps = rng.gen_range(1..=4);
            while log.len() < steps {
                let Some((step, next)) = random_move(rng, &d) else {
                    continue;
                };
                if next.real_crossing_count() > MAX_CROSSINGS {
                    continue;
                }
                log.push(step);
                d = next;
            }
            let fams = if k % 5 == 0 { &all } else { &cheap };
            let got = values(&d, fams);
            let got_raw = unsigned(&d, fams);
            for (j, f) in fams.iter().enumerate() {
                let i = all.iter().position(|g| g == f).unwrap();
                if !got[j].eq_up_to_sign(&expected[i]) || got_raw[j] != expected_raw[i] {
                    return Err(format!(
                        "{code} {f} after {log:?}: {d}: {} vs {}",
                        got[j], expected[i]
                    ));
                }
            }
            sequences += 1;
        }
    }
    Ok(sequences)
}
