//! Partitions, ramification types and the Riemann–Hurwitz filter.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::CycleType;

/// Largest `d` accepted by partition enumeration.
pub const PARTITION_MAX_DEGREE: usize = 40;

/// Partitions of `d`, reverse-lexicographic: `(4), (3,1), (2,2), (2,1,1), (1,1,1,1)`.
pub fn enumerate_partitions(d: usize) -> Result<Vec<CycleType>> {
    if d > PARTITION_MAX_DEGREE {
        return Err(Error::ResourceLimit {
            operation: "enumerate_partitions",
            limit: PARTITION_MAX_DEGREE,
            requested: d,
        });
    }
    if d == 0 {
        return Err(Error::InvalidArgument("partitions need d >= 1".into()));
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    partitions_rec(d, d, &mut current, &mut out);
    Ok(out)
}

fn partitions_rec(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<CycleType>) {
    if remaining == 0 {
        out.push(CycleType::from_sorted(current.clone()));
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        partitions_rec(remaining - part, part, current, out);
        current.pop();
    }
}

/// A triple of partitions of `d`, recording the cycle structure over 0, 1 and ∞.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct RamificationType {
    degree: usize,
    lambda0: CycleType,
    lambda1: CycleType,
    lambda_inf: CycleType,
}

impl RamificationType {
    pub fn new(lambda0: CycleType, lambda1: CycleType, lambda_inf: CycleType) -> Result<Self> {
        let d = lambda0.degree();
        if lambda1.degree() != d || lambda_inf.degree() != d {
            return Err(Error::InvalidArgument(format!(
                "partitions {lambda0} / {lambda1} / {lambda_inf} do not share a common sum"
            )));
        }
        Ok(RamificationType {
            degree: d,
            lambda0,
            lambda1,
            lambda_inf,
        })
    }

    pub fn from_parts(p0: &[usize], p1: &[usize], pinf: &[usize]) -> Result<Self> {
        Self::new(
            CycleType::new(p0.to_vec())?,
            CycleType::new(p1.to_vec())?,
            CycleType::new(pinf.to_vec())?,
        )
    }

    pub fn degree(&self) -> usize {
        self.degree
    }
    pub fn lambda0(&self) -> &CycleType {
        &self.lambda0
    }
    pub fn lambda1(&self) -> &CycleType {
        &self.lambda1
    }
    pub fn lambda_inf(&self) -> &CycleType {
        &self.lambda_inf
    }

    /// `(r₀, r₁, r∞)`.
    pub fn part_counts(&self) -> (usize, usize, usize) {
        (self.lambda0.len(), self.lambda1.len(), self.lambda_inf.len())
    }

    pub fn components(&self) -> [&CycleType; 3] {
        [&self.lambda0, &self.lambda1, &self.lambda_inf]
    }

    /// JSON array form `[[7],[7],[7]]`.
    pub fn to_json_array(&self) -> serde_json::Value {
        serde_json::json!([self.lambda0.parts(), self.lambda1.parts(), self.lambda_inf.parts()])
    }
}

/// `d: [7][7][7]`.
impl fmt::Display for RamificationType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: [{}][{}][{}]",
            self.degree, self.lambda0, self.lambda1, self.lambda_inf
        )
    }
}

/// Parses `"7/7/7"` or `"2,1/2,1/3"` (parts may also be separated by `+`).
/// A leading `"d:"` and the bracket form `"[7][7][7]"` are accepted as well.
impl FromStr for RamificationType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut text = s.trim();
        let mut declared = None;
        if let Some((d, rest)) = text.split_once(':') {
            declared = Some(
                d.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad degree in {s:?}")))?,
            );
            text = rest.trim();
        }
        let pieces: Vec<String> = if text.starts_with('[') {
            text.trim_start_matches('[')
                .trim_end_matches(']')
                .split("][")
                .map(str::to_string)
                .collect()
        } else {
            text.split('/').map(str::to_string).collect()
        };
        if pieces.len() != 3 {
            return Err(Error::Parse(format!(
                "ramification type {s:?} must have three partitions"
            )));
        }
        let mut parts = Vec::with_capacity(3);
        for piece in &pieces {
            let p: Vec<usize> = piece
                .split(|c: char| c == ',' || c == '+' || c.is_whitespace())
                .filter(|x| !x.is_empty())
                .map(|x| {
                    x.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad part {x:?} in {s:?}")))
                })
                .collect::<Result<_>>()?;
            parts.push(CycleType::new(p)?);
        }
        let inf = parts.pop().unwrap();
        let one = parts.pop().unwrap();
        let zero = parts.pop().unwrap();
        let lambda = RamificationType::new(zero, one, inf)?;
        if let Some(d) = declared {
            if d != lambda.degree() {
                return Err(Error::Parse(format!(
                    "declared degree {d} but partitions sum to {}",
                    lambda.degree()
                )));
            }
        }
        Ok(lambda)
    }
}

/// Genus forced by Riemann–Hurwitz, `2g − 2 = d − r₀ − r₁ − r∞`, or `None`
/// when the right side is odd or below −2 (no Belyi map has this type).
pub fn rh_genus(lambda: &RamificationType) -> Option<usize> {
    let (r0, r1, rinf) = lambda.part_counts();
    let rhs = lambda.degree() as i64 - (r0 + r1 + rinf) as i64;
    if rhs < -2 || rhs % 2 != 0 {
        return None;
    }
    Some(((rhs + 2) / 2) as usize)
}

/// All ramification types of degree `d` whose Riemann–Hurwitz genus is `g`,
/// ordered by the reverse-lexicographic partition order on (λ₀, λ₁, λ∞).
pub fn types_with_genus(d: usize, g: usize) -> Result<Vec<RamificationType>> {
    let partitions = enumerate_partitions(d)?;
    // r₀ + r₁ + r∞ = d + 2 − 2g
    let Some(total_parts) = (d + 2).checked_sub(2 * g) else {
        return Ok(Vec::new());
    };
    let mut out = Vec::new();
    for l0 in &partitions {
        for l1 in &partitions {
            let used = l0.len() + l1.len();
            if used >= total_parts {
                continue;
            }
            let want = total_parts - used;
            for linf in partitions.iter().filter(|p| p.len() == want) {
                out.push(RamificationType {
                    degree: d,
                    lambda0: l0.clone(),
                    lambda1: l1.clone(),
                    lambda_inf: linf.clone(),
                });
            }
        }
    }
    Ok(out)
}

/// Every Belyi map on a genus-`g` curve has degree at least `2g + 1`.
pub fn lower_bound_from_genus(g: usize) -> usize {
    2 * g + 1
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CurveFamily {
    /// `xⁿ + yⁿ = zⁿ`, with the map `(x:y:z) ↦ (xⁿ:zⁿ)` of degree `n²`.
    Fermat,
    /// `y² − y = x^d` for odd `d`, where `y` itself is a Belyi map of degree `d`.
    CyclicSuperelliptic,
}

impl FromStr for CurveFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fermat" => Ok(CurveFamily::Fermat),
            "cyclic_superelliptic" | "cyclic-superelliptic" => Ok(CurveFamily::CyclicSuperelliptic),
            other => Err(Error::Parse(format!("unknown curve family {other:?}"))),
        }
    }
}

/// Degree of a known Belyi map on a member of a catalogued family.
pub fn family_upper_bound(family: CurveFamily, param: usize) -> Result<usize> {
    if param == 0 {
        return Err(Error::InvalidArgument("family parameter must be positive".into()));
    }
    match family {
        CurveFamily::Fermat => Ok(param * param),
        CurveFamily::CyclicSuperelliptic => {
            if param.is_multiple_of(2) {
                Err(Error::InvalidArgument(format!(
                    "y^2 - y = x^d needs odd d, got {param}"
                )))
            } else {
                Ok(param)
            }
        }
    }
}
