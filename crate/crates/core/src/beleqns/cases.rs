use std::fmt;

use super::curve::CurveModel;
use super::rr::RRData;
use crate::error::{Error, Result};
use crate::passports::{enumerate_partitions, rh_genus, RamificationType};

/// Guard on the number of cases one call may enumerate.
pub const MAX_CASES: usize = 500_000;

/// An auxiliary point of the system: zeros `P`, ones `Q`, poles `R` and the
/// cancelling points `Y`. Indices start at 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    P(usize),
    Q(usize),
    R(usize),
    Y(usize),
}

impl Label {
    pub fn is_branch(self) -> bool {
        !matches!(self, Label::Y(_))
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::P(i) => write!(f, "P{i}"),
            Label::Q(i) => write!(f, "Q{i}"),
            Label::R(i) => write!(f, "R{i}"),
            Label::Y(i) => write!(f, "Y{i}"),
        }
    }
}

/// Name of the `s`-th support point of `D0` (0-based `s`).
pub fn support_name(s: usize) -> String {
    format!("D0{}", s + 1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Identification {
    /// Equal to a support point of `D0` (0-based index).
    Support(usize),
    /// A cancelling point placed on a branch point.
    Point(Label),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Chart {
    /// Every free point is affine and `x − x(Z)` is a uniformizer there.
    Standard,
    /// Needs another chart or uniformizer; enumerated but not built.
    TransformRequested { point: Label, reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemCase {
    pub k: usize,
    pub l: usize,
    pub m: usize,
    pub mu: Vec<usize>,
    /// Labels not listed here are free and pairwise distinct.
    pub pattern: Vec<(Label, Identification)>,
    pub chart: Chart,
}

impl SystemCase {
    pub fn s(&self) -> usize {
        self.mu.len()
    }

    pub fn identification(&self, label: Label) -> Option<&Identification> {
        self.pattern.iter().find(|(l, _)| *l == label).map(|(_, i)| i)
    }

    pub fn is_general(&self, n: usize) -> bool {
        self.k == n && self.l == n && self.pattern.is_empty() && self.chart == Chart::Standard
    }

    pub fn pattern_text(&self) -> String {
        if self.pattern.is_empty() {
            return "distinct".into();
        }
        self.pattern
            .iter()
            .map(|(l, i)| match i {
                Identification::Support(s) => format!("{l}={}", support_name(*s)),
                Identification::Point(p) => format!("{l}={p}"),
            })
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn chart_text(&self) -> String {
        match &self.chart {
            Chart::Standard => "standard".into(),
            Chart::TransformRequested { point, reason } => format!("transform requested at {point}: {reason}"),
        }
    }
}

impl fmt::Display for SystemCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mu: Vec<String> = self.mu.iter().map(|x| x.to_string()).collect();
        write!(
            f,
            "k={} l={} m={} mu=({}) pattern={} chart={}",
            self.k,
            self.l,
            self.m,
            mu.join(","),
            self.pattern_text(),
            self.chart_text()
        )
    }
}

/// Labels in system order for a type and a partition `mu`.
pub fn labels(lambda: &RamificationType, s: usize) -> Vec<Label> {
    let (r0, r1, rinf) = lambda.part_counts();
    let mut out = Vec::with_capacity(r0 + r1 + rinf + s);
    out.extend((1..=r0).map(Label::P));
    out.extend((1..=r1).map(Label::Q));
    out.extend((1..=rinf).map(Label::R));
    out.extend((1..=s).map(Label::Y));
    out
}

fn patterns(labels: &[Label], supports: usize) -> Vec<Vec<(Label, Identification)>> {
    fn rec(
        labels: &[Label],
        supports: usize,
        i: usize,
        branch_at: &mut Vec<bool>,
        y_at: &mut Vec<bool>,
        current: &mut Vec<(Label, Identification)>,
        out: &mut Vec<Vec<(Label, Identification)>>,
    ) {
        if i == labels.len() {
            out.push(current.clone());
            return;
        }
        let label = labels[i];
        rec(labels, supports, i + 1, branch_at, y_at, current, out);
        let taken = if label.is_branch() { &*branch_at } else { &*y_at };
        let free: Vec<usize> = (0..supports).filter(|&s| !taken[s]).collect();
        for s in free {
            if label.is_branch() {
                branch_at[s] = true;
            } else {
                y_at[s] = true;
            }
            current.push((label, Identification::Support(s)));
            rec(labels, supports, i + 1, branch_at, y_at, current, out);
            current.pop();
            if label.is_branch() {
                branch_at[s] = false;
            } else {
                y_at[s] = false;
            }
        }
        if !label.is_branch() {
            for &b in labels.iter().filter(|b| b.is_branch()) {
                let b_free = !current.iter().any(|(l, _)| *l == b);
                let b_used = current.iter().any(|(_, id)| *id == Identification::Point(b));
                if b_free && !b_used {
                    current.push((label, Identification::Point(b)));
                    rec(labels, supports, i + 1, branch_at, y_at, current, out);
                    current.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    rec(
        labels,
        supports,
        0,
        &mut vec![false; supports],
        &mut vec![false; supports],
        &mut Vec::new(),
        &mut out,
    );
    out
}

/// Partitions of `n` in reverse-lexicographic order; `[[]]` for `n = 0`.
fn partitions_or_empty(n: usize) -> Result<Vec<Vec<usize>>> {
    if n == 0 {
        return Ok(vec![Vec::new()]);
    }
    Ok(enumerate_partitions(n)?.into_iter().map(|p| p.parts().to_vec()).collect())
}

/// Every case of the system for maps of type `lambda` on `curve`: cut
/// indices `k, l`, partitions `mu` of `m·d0 − d`, coincidences with the
/// support of `D0`, and chart variants. The general case comes first.
/// Empty when the type's genus is not the curve's.
pub fn enumerate_cases(curve: &CurveModel, rr: &RRData, lambda: &RamificationType) -> Result<Vec<SystemCase>> {
    if rh_genus(lambda) != Some(curve.genus()) {
        return Ok(Vec::new());
    }
    let n = rr.n();
    let d = lambda.degree();
    let d0 = rr.d0();
    let supports = rr.support().len();
    let mut out = Vec::new();
    for k in (1..=n).rev() {
        for l in (1..=n).rev() {
            let m = rr.tiers()[k - 1].max(rr.tiers()[l - 1]) as usize;
            let Some(extra) = (m * d0).checked_sub(d) else {
                continue;
            };
            for mu in partitions_or_empty(extra)? {
                let labels = labels(lambda, mu.len());
                for pattern in patterns(&labels, supports) {
                    let base = SystemCase {
                        k,
                        l,
                        m,
                        mu: mu.clone(),
                        pattern,
                        chart: Chart::Standard,
                    };
                    let unseparated = base.pattern.iter().find_map(|(lab, id)| match id {
                        Identification::Support(s) if !rr.support()[*s].separates_basis() => Some((*lab, *s)),
                        _ => None,
                    });
                    if let Some((lab, s)) = unseparated {
                        out.push(SystemCase {
                            chart: Chart::TransformRequested {
                                point: lab,
                                reason: format!("pole orders at {} do not separate the basis", support_name(s)),
                            },
                            ..base
                        });
                    } else {
                        let free: Vec<Label> = labels
                            .iter()
                            .copied()
                            .filter(|lab| base.identification(*lab).is_none())
                            .collect();
                        out.push(base.clone());
                        for lab in free {
                            out.push(SystemCase {
                                chart: Chart::TransformRequested {
                                    point: lab,
                                    reason: "on the line at infinity or x - x(Z) not a uniformizer".into(),
                                },
                                ..base.clone()
                            });
                        }
                    }
                    if out.len() > MAX_CASES {
                        return Err(Error::ResourceLimit {
                            operation: "enumerate_cases",
                            limit: MAX_CASES,
                            requested: out.len(),
                        });
                    }
                }
            }
        }
    }
    Ok(out)
}

/// The first enumerated case: all points distinct, `k = l = n`.
pub fn general_case(curve: &CurveModel, rr: &RRData, lambda: &RamificationType) -> Result<Option<SystemCase>> {
    Ok(enumerate_cases(curve, rr, lambda)?
        .into_iter()
        .next()
        .filter(|c| c.is_general(rr.n())))
}
