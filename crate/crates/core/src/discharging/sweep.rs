//! Symbolic check of the per-degree charge arithmetic.
//!
//! Instead of concrete graphs, the sweep enumerates *neighbour-degree
//! profiles*: for a vertex `u` of degree `d`, how many neighbours fall in
//! each degree class. A profile is kept only if it is consistent with the
//! forbidden-configuration predicates (using the largest degree each class
//! allows, which is the most permissive choice). For every kept profile the
//! final charge of `u` is computed with the least favourable behaviour of
//! its neighbours and compared against `4 − 1/c`.
//!
//! Degree classes, for a fixed `c` and `Δ`:
//!
//! | class | degrees        |
//! |-------|----------------|
//! | two   | 2              |
//! | three | 3              |
//! | mid   | 4 ..= 4c − 1   |
//! | big   | 4c ..= 8c − 3  |
//! | huge  | 8c − 2 ..= Δ   |
//!
//! For `d ≥ 4` a neighbour of degree `4..=8c − 3` never sends charge to `u`,
//! so `mid` and `big` are merged and counted in `mid` with maximum degree
//! `8c − 3`.
//!
//! All arithmetic is done in units of `1/(2c)`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::Thresholds;
use crate::error::DischargeError;
use crate::ratio::{self, Rational};

/// The seven degree cases of the charge analysis, split by sub-case.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CaseId {
    /// `d ≥ 8c − 2`
    #[serde(rename = "1")]
    C1,
    /// `4c ≤ d ≤ 8c − 3`, no 2-neighbour
    #[serde(rename = "2")]
    C2,
    /// `6c − 1 ≤ d ≤ 8c − 3` with a 2-neighbour
    #[serde(rename = "3a")]
    C3a,
    /// `4c ≤ d ≤ 6c − 2`, a 2-neighbour, exactly one 4⁺-neighbour
    #[serde(rename = "3b")]
    C3b,
    /// `4c ≤ d ≤ 6c − 2`, a 2-neighbour, at least two 4⁺-neighbours
    #[serde(rename = "3c")]
    C3c,
    /// `2c + 1 ≤ d < 4c`, no 2-neighbour
    #[serde(rename = "4")]
    C4,
    /// `2c + 1 ≤ d < 4c`, a 2-neighbour, exactly two 4⁺-neighbours
    #[serde(rename = "4a")]
    C4a,
    /// `2c + 1 ≤ d < 4c`, a 2-neighbour, at least three 4⁺-neighbours
    #[serde(rename = "4b")]
    C4b,
    /// `4 ≤ d < 2c + 1`, no 2-neighbour
    #[serde(rename = "5")]
    C5,
    /// `4 ≤ d < 2c + 1`, between 1 and `d − 4` 2-neighbours
    #[serde(rename = "5a")]
    C5a,
    /// `4 ≤ d < 2c + 1`, at least `d − 3` 2-neighbours
    #[serde(rename = "5b")]
    C5b,
    /// `d = 3`
    #[serde(rename = "6")]
    C6,
    /// `d = 2`
    #[serde(rename = "7")]
    C7,
}

impl CaseId {
    /// The top-level case number `1..=7`.
    pub fn number(&self) -> u8 {
        match self {
            CaseId::C1 => 1,
            CaseId::C2 => 2,
            CaseId::C3a | CaseId::C3b | CaseId::C3c => 3,
            CaseId::C4 | CaseId::C4a | CaseId::C4b => 4,
            CaseId::C5 | CaseId::C5a | CaseId::C5b => 5,
            CaseId::C6 => 6,
            CaseId::C7 => 7,
        }
    }
}

/// Which case a vertex of degree `d` with `two` 2-neighbours and
/// `four_plus` 4⁺-neighbours falls under. `None` when no case applies
/// (degree below 2, or a sub-case combination the analysis rules out).
pub fn classify(c: i64, d: usize, two: usize, four_plus: usize) -> Option<CaseId> {
    let c = c as usize;
    Some(match d {
        0 | 1 => return None,
        2 => CaseId::C7,
        3 => CaseId::C6,
        _ if d >= 8 * c - 2 => CaseId::C1,
        _ if d >= 4 * c => match (two, four_plus) {
            (0, _) => CaseId::C2,
            _ if d >= 6 * c - 1 => CaseId::C3a,
            (_, 1) => CaseId::C3b,
            (_, f) if f >= 2 => CaseId::C3c,
            _ => return None,
        },
        _ if d > 2 * c => match (two, four_plus) {
            (0, _) => CaseId::C4,
            (_, 2) => CaseId::C4a,
            (_, f) if f >= 3 => CaseId::C4b,
            _ => return None,
        },
        _ => match two {
            0 => CaseId::C5,
            t if t + 4 <= d => CaseId::C5a,
            _ => CaseId::C5b,
        },
    })
}

/// Neighbour counts per degree class.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Profile {
    pub degree: usize,
    pub two: usize,
    pub three: usize,
    pub mid: usize,
    pub big: usize,
    pub huge: usize,
}

impl Profile {
    pub fn four_plus(&self) -> usize {
        self.mid + self.big + self.huge
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeMin {
    pub degree: usize,
    #[serde(with = "ratio::serde_pq")]
    pub min_charge: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseSummary {
    pub case: CaseId,
    /// Profiles in this case consistent with the predicates.
    pub profiles: u64,
    #[serde(with = "ratio::serde_pq")]
    pub min_charge: Rational,
    pub argmin: Profile,
    pub violations: u64,
    pub first_violation: Option<Profile>,
    pub min_by_degree: Vec<DegreeMin>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRun {
    pub c: i64,
    pub delta: usize,
    #[serde(with = "ratio::serde_pq")]
    pub threshold: Rational,
    pub enumerated: u64,
    /// Profiles ruled out by the predicates.
    pub excluded: u64,
    /// Consistent profiles that no case covers.
    pub uncovered: u64,
    pub first_uncovered: Option<Profile>,
    pub cases: Vec<CaseSummary>,
}

impl SweepRun {
    pub fn violations(&self) -> u64 {
        self.cases.iter().map(|c| c.violations).sum()
    }

    pub fn case(&self, id: CaseId) -> Option<&CaseSummary> {
        self.cases.iter().find(|c| c.case == id)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseSweepReport {
    pub runs: Vec<SweepRun>,
    pub total_violations: u64,
    pub total_uncovered: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub c_min: i64,
    pub c_max: i64,
    /// Also sweep `Δ = 14c − 7 + 1 ..= 14c − 7 + delta_extra`.
    pub delta_extra: usize,
}

impl SweepConfig {
    pub fn new(c_min: i64, c_max: i64) -> Self {
        SweepConfig {
            c_min,
            c_max,
            delta_extra: 0,
        }
    }
}

#[derive(Default)]
struct Acc {
    profiles: u64,
    min: Option<(i64, Profile)>,
    violations: u64,
    first_violation: Option<Profile>,
    by_degree: BTreeMap<usize, i64>,
}

/// Scaled constants for one `(c, Δ)` pair.
struct Scale {
    t: Thresholds,
    c: usize,
    delta: usize,
    half: i64,
    full: i64,
    target: i64,
}

impl Scale {
    fn new(t: Thresholds, delta: usize) -> Self {
        let c = t.c;
        Scale {
            t,
            c: c as usize,
            delta,
            half: 2 * c - 1,
            full: 2 * c - 2,
            target: 8 * c - 2,
        }
    }

    /// Predicates evaluated at a vertex of degree `d` whose neighbour-degree
    /// sum can be at most `max_sum`.
    fn consistent_at(&self, d: usize, two: usize, four_plus: usize, max_sum: usize) -> bool {
        if two == 0 {
            return true;
        }
        if max_sum < 2 * self.delta {
            return false;
        }
        if 3 * d <= 2 * self.delta && four_plus < 1 {
            return false;
        }
        if 3 * d <= self.delta && four_plus < 2 {
            return false;
        }
        !(d == 2 && two > 0)
    }

    fn class_max(&self) -> [usize; 5] {
        [2, 3, 4 * self.c - 1, 8 * self.c - 3, self.delta]
    }

    /// Least charge a 2-vertex can receive from a neighbour of the given
    /// class (`0..5` = two, three, mid, big, huge), over all configurations
    /// of that neighbour consistent with the predicates. `None` if none is.
    fn least_sent_to_two_vertex(&self, class: usize) -> Option<i64> {
        let maxes = self.class_max();
        match class {
            0 => None,
            1 => {
                // x has degree 3: u plus two further neighbours of classes a <= b
                let mut best: Option<i64> = None;
                for a in 0..5 {
                    for b in a..5 {
                        let mut counts = [0usize; 5];
                        counts[a] += 1;
                        counts[b] += 1;
                        let two = 1 + counts[0];
                        let four_plus = counts[2] + counts[3] + counts[4];
                        let max_sum = 2 + maxes[a] + maxes[b];
                        let l34 = counts[3] + counts[4] >= 1;
                        if !l34 || !self.consistent_at(3, two, four_plus, max_sum) {
                            continue;
                        }
                        let sends = if counts[4] == 2 && two == 1 {
                            self.half
                        } else {
                            0
                        };
                        best = Some(best.map_or(sends, |x| x.min(sends)));
                    }
                }
                best
            }
            2 => {
                // 4 <= d(x) < 4c; x sends under R4 only
                let mut best: Option<i64> = None;
                for dx in 4..self.t.big() {
                    for f in 0..dx {
                        let max_sum = 2 + f * self.delta + 3 * (dx - 1 - f);
                        if !self.consistent_at(dx, 1, f, max_sum) {
                            continue;
                        }
                        let sends = if f >= 2 { self.half } else { 0 };
                        best = Some(best.map_or(sends, |x| x.min(sends)));
                    }
                }
                best
            }
            _ => Some(self.half),
        }
    }

    fn record(
        &self,
        accs: &mut BTreeMap<CaseId, Acc>,
        run: &mut SweepRun,
        p: Profile,
        charge: i64,
    ) {
        let Some(case) = classify(self.t.c, p.degree, p.two, p.four_plus()) else {
            run.uncovered += 1;
            run.first_uncovered.get_or_insert(p);
            return;
        };
        let acc = accs.entry(case).or_default();
        acc.profiles += 1;
        if acc.min.is_none_or(|(m, _)| charge < m) {
            acc.min = Some((charge, p));
        }
        let slot = acc.by_degree.entry(p.degree).or_insert(charge);
        *slot = (*slot).min(charge);
        if charge < self.target {
            acc.violations += 1;
            acc.first_violation.get_or_insert(p);
        }
    }

    fn run(&self) -> SweepRun {
        let c = self.c;
        let mut run = SweepRun {
            c: self.t.c,
            delta: self.delta,
            threshold: self.t.target(),
            enumerated: 0,
            excluded: 0,
            uncovered: 0,
            first_uncovered: None,
            cases: Vec::new(),
        };
        let mut accs: BTreeMap<CaseId, Acc> = BTreeMap::new();
        let maxes = self.class_max();
        let base = |d: usize| 2 * c as i64 * d as i64;

        // d = 2: both neighbours' sending behaviour matters
        for a in 0..5 {
            for b in a..5 {
                run.enumerated += 1;
                let mut p = Profile {
                    degree: 2,
                    ..Default::default()
                };
                for cl in [a, b] {
                    match cl {
                        0 => p.two += 1,
                        1 => p.three += 1,
                        2 => p.mid += 1,
                        3 => p.big += 1,
                        _ => p.huge += 1,
                    }
                }
                let received = if p.two > 0 {
                    None
                } else {
                    self.least_sent_to_two_vertex(a)
                        .zip(self.least_sent_to_two_vertex(b))
                        .map(|(x, y)| x + y)
                };
                match received {
                    Some(r) => self.record(&mut accs, &mut run, p, base(2) + r),
                    None => run.excluded += 1,
                }
            }
        }

        // d = 3
        for two in 0..=3 {
            for three in 0..=3 - two {
                for mid in 0..=3 - two - three {
                    for big in 0..=3 - two - three - mid {
                        let huge = 3 - two - three - mid - big;
                        run.enumerated += 1;
                        let p = Profile {
                            degree: 3,
                            two,
                            three,
                            mid,
                            big,
                            huge,
                        };
                        let max_sum =
                            2 * two + 3 * three + maxes[2] * mid + maxes[3] * big + maxes[4] * huge;
                        if big + huge == 0 || !self.consistent_at(3, two, p.four_plus(), max_sum) {
                            run.excluded += 1;
                            continue;
                        }
                        let sent = if huge == 2 && two == 1 { self.half } else { 0 };
                        let received = huge as i64 * self.half + big as i64 * self.full;
                        self.record(&mut accs, &mut run, p, base(3) - sent + received);
                    }
                }
            }
        }

        // d >= 4: mid covers 4..=8c-3
        for d in 4..=self.delta {
            for two in 0..=d {
                for three in 0..=d - two {
                    for huge in 0..=d - two - three {
                        let mid = d - two - three - huge;
                        run.enumerated += 1;
                        let p = Profile {
                            degree: d,
                            two,
                            three,
                            mid,
                            big: 0,
                            huge,
                        };
                        let four_plus = mid + huge;
                        let max_sum = 2 * two + 3 * three + (8 * c - 3) * mid + self.delta * huge;
                        if !self.consistent_at(d, two, four_plus, max_sum) {
                            run.excluded += 1;
                            continue;
                        }
                        let sent = if d >= self.t.huge() {
                            d as i64 * self.half
                        } else if d >= self.t.big() {
                            two as i64 * self.half + three as i64 * self.full
                        } else if four_plus >= 2 {
                            two as i64 * self.half
                        } else {
                            0
                        };
                        let received = huge as i64 * self.half;
                        self.record(&mut accs, &mut run, p, base(d) - sent + received);
                    }
                }
            }
        }

        let scale = 2 * self.t.c;
        run.cases = accs
            .into_iter()
            .map(|(case, acc)| {
                let (min, argmin) = acc.min.expect("every recorded case has a minimum");
                CaseSummary {
                    case,
                    profiles: acc.profiles,
                    min_charge: ratio::frac(min, scale),
                    argmin,
                    violations: acc.violations,
                    first_violation: acc.first_violation,
                    min_by_degree: acc
                        .by_degree
                        .into_iter()
                        .map(|(degree, m)| DegreeMin {
                            degree,
                            min_charge: ratio::frac(m, scale),
                        })
                        .collect(),
                }
            })
            .collect();
        run
    }
}

/// Sweep at a single `(c, Δ)` pair.
pub fn sweep_at(c: i64, delta: usize) -> Result<SweepRun, DischargeError> {
    let t = Thresholds::new(c)?;
    Ok(Scale::new(t, delta).run())
}

/// Sweeps every `c` in `c_min..=c_max` at `Δ = 14c − 7` (plus the optional band).
pub fn case_sweep(cfg: SweepConfig) -> Result<CaseSweepReport, DischargeError> {
    if cfg.c_min < 2 || cfg.c_min > cfg.c_max {
        return Err(DischargeError::InvalidRange {
            c_min: cfg.c_min,
            c_max: cfg.c_max,
        });
    }
    let mut runs = Vec::new();
    for c in cfg.c_min..=cfg.c_max {
        let t = Thresholds::new(c)?;
        for delta in t.min_delta()..=t.min_delta() + cfg.delta_extra {
            runs.push(Scale::new(t, delta).run());
        }
    }
    let total_violations = runs.iter().map(SweepRun::violations).sum();
    let total_uncovered = runs.iter().map(|r| r.uncovered).sum();
    Ok(CaseSweepReport {
        runs,
        total_violations,
        total_uncovered,
    })
}
