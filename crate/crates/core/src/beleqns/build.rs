use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;

use super::cases::{labels, support_name, Chart, Identification, Label, SystemCase};
use super::curve::CurveModel;
use super::rr::{RRData, SupportPoint};
use crate::error::{Error, Result};
use crate::passports::RamificationType;
use crate::polysolve::{MultiPoly, PolynomialSystem};

/// Which of `a`, `b`, `a − b` an equation constrains.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Form {
    A,
    B,
    AMinusB,
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Form::A => "a",
            Form::B => "b",
            Form::AMinusB => "a-b",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EquationKind {
    Membership(String),
    Vanishing { at: String, form: Form, j: usize },
    /// A coefficient forced to zero by the pole bound at a support point.
    Coefficient { at: String, form: Form, index: usize },
    Distinct(String, String),
    Equal(String, String),
    /// `w·a_k − 1`.
    Nonvanishing,
    ChartGuard(String),
}

impl EquationKind {
    /// Belongs to the system proper rather than to the added encodings.
    pub fn is_core(&self) -> bool {
        !matches!(self, EquationKind::Nonvanishing | EquationKind::ChartGuard(_))
    }

    pub fn tag(&self) -> &'static str {
        match self {
            EquationKind::Membership(_) => "membership",
            EquationKind::Vanishing { .. } => "vanishing",
            EquationKind::Coefficient { .. } => "coefficient",
            EquationKind::Distinct(..) => "distinct",
            EquationKind::Equal(..) => "equal",
            EquationKind::Nonvanishing => "nonvanishing",
            EquationKind::ChartGuard(_) => "chart-guard",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BuildOptions {
    /// Adds `u_Z·D(Z)·f_y(Z) − 1` for each free point `Z`, so that solutions
    /// stay inside the declared chart.
    pub chart_guards: bool,
}

#[derive(Clone, Debug)]
pub struct BuiltSystem {
    pub system: PolynomialSystem,
    pub kinds: Vec<EquationKind>,
    /// Variables added by the encodings: `w` and any chart guards.
    pub extra_variables: usize,
}

impl BuiltSystem {
    /// Variable and equation counts without the nonvanishing gadget and
    /// chart guards.
    pub fn core_counts(&self) -> (usize, usize) {
        let eqs = self.kinds.iter().filter(|k| k.is_core()).count();
        (self.system.num_variables() - self.extra_variables, eqs)
    }

    pub fn counts(&self) -> (usize, usize) {
        (self.system.num_variables(), self.system.num_equations())
    }

    /// Equation counts per kind tag, in first-appearance order.
    pub fn itemized(&self) -> Vec<(&'static str, usize)> {
        let mut out: Vec<(&'static str, usize)> = Vec::new();
        for k in &self.kinds {
            match out.iter_mut().find(|(t, _)| *t == k.tag()) {
                Some((_, c)) => *c += 1,
                None => out.push((k.tag(), 1)),
            }
        }
        out
    }
}

/// `f(x_Z, y_Z)` in a ring of `arity` variables.
pub fn membership_equation(curve: &CurveModel, point: (usize, usize), arity: usize) -> MultiPoly {
    curve.defining_polynomial().embed(&[point.0, point.1], arity)
}

/// Equations `T_j(x_Z, y_Z) = 0`, `j < order`, for the form `Σ c_i g_i`
/// whose cleared numerator is `Σ c_i H_i`. Here `T_j` is the numerator of
/// the `j`-th derivative along the curve with respect to `x`, so the
/// equations say the form vanishes to order `order` at `Z` when `x − x(Z)`
/// is a uniformizer and the common denominator is nonzero there. The
/// membership equation is separate.
pub fn vanishing_equations(
    curve: &CurveModel,
    numerators: &[MultiPoly],
    coeffs: &[MultiPoly],
    point: (usize, usize),
    order: usize,
) -> Result<Vec<MultiPoly>> {
    let table: Vec<Vec<MultiPoly>> = derivative_table(curve, numerators, order)?;
    Ok(combine(&table, coeffs, point, 0..order))
}

fn derivative_table(curve: &CurveModel, numerators: &[MultiPoly], order: usize) -> Result<Vec<Vec<MultiPoly>>> {
    if order > 1 && curve.defining_polynomial().derivative(1).is_zero() {
        return Err(Error::ChartFailure(format!(
            "{}: df/dy vanishes identically, cannot differentiate along x",
            curve.name
        )));
    }
    Ok(numerators.iter().map(|h| curve.derivative_numerators(h, order)).collect())
}

fn combine(
    table: &[Vec<MultiPoly>],
    coeffs: &[MultiPoly],
    point: (usize, usize),
    js: std::ops::Range<usize>,
) -> Vec<MultiPoly> {
    let arity = coeffs.first().map_or(0, |c| c.arity());
    js.map(|j| {
        let mut acc = MultiPoly::zero(arity);
        for (row, c) in table.iter().zip(coeffs) {
            if c.is_zero() {
                continue;
            }
            let t = row[j].embed(&[point.0, point.1], arity);
            acc = &acc + &(&t * c);
        }
        acc
    })
    .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AuxKind {
    Branch,
    Cancelling,
    /// A point of `D0` with fixed coordinates, or `None` at infinity.
    Support(Option<(BigRational, BigRational)>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuxPoint {
    pub name: String,
    pub kind: AuxKind,
}

impl AuxPoint {
    pub fn new(name: impl Into<String>, kind: AuxKind) -> Self {
        AuxPoint { name: name.into(), kind }
    }
}

/// Distinctness and identification constraints among auxiliary points.
///
/// Points joined (transitively) by `identified` share a location and get
/// coordinate equalities; one product constraint
/// `((x_Z − x_W)·z_ZW − 1)((y_Z − y_W)·z_ZW − 1)` is emitted for each pair of
/// distinct locations, using the first point of each. Two branch points, two
/// cancelling points or two support points may not be identified. Support
/// points carry constants instead of variables; pairs of support points and
/// points at infinity get no constraint.
pub fn distinctness_constraints(points: &[AuxPoint], identified: &[(usize, usize)]) -> Result<PolynomialSystem> {
    let n = points.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while p[r] != r {
            r = p[r];
        }
        p[i] = r;
        r
    }
    for &(i, j) in identified {
        if i >= n || j >= n || i == j {
            return Err(Error::ContradictoryPattern(format!("bad identification ({i}, {j})")));
        }
        let (a, b) = (find(&mut parent, i), find(&mut parent, j));
        let (lo, hi) = (a.min(b), a.max(b));
        parent[hi] = lo;
    }
    let roots: Vec<usize> = (0..n).map(|i| find(&mut parent, i)).collect();
    for r in 0..n {
        let members: Vec<&AuxPoint> = (0..n).filter(|&i| roots[i] == r).map(|i| &points[i]).collect();
        let count = |f: fn(&AuxKind) -> bool| members.iter().filter(|p| f(&p.kind)).count();
        if count(|k| *k == AuxKind::Branch) > 1
            || count(|k| *k == AuxKind::Cancelling) > 1
            || count(|k| matches!(k, AuxKind::Support(_))) > 1
        {
            let names: Vec<&str> = members.iter().map(|p| p.name.as_str()).collect();
            return Err(Error::ContradictoryPattern(format!(
                "{} are required to be distinct",
                names.join(" and ")
            )));
        }
    }

    let mut variables = Vec::new();
    let mut coord_index = vec![None; n];
    for (i, p) in points.iter().enumerate() {
        if !matches!(p.kind, AuxKind::Support(_)) {
            coord_index[i] = Some(variables.len());
            variables.push(format!("x_{}", p.name));
            variables.push(format!("y_{}", p.name));
        }
    }
    let reps: Vec<usize> = (0..n).filter(|&i| roots[i] == i).collect();
    let mut pairs = Vec::new();
    for (a, &i) in reps.iter().enumerate() {
        for &j in &reps[a + 1..] {
            let both_support = matches!(points[i].kind, AuxKind::Support(_)) && matches!(points[j].kind, AuxKind::Support(_));
            let at_infinity = [i, j].iter().any(|&t| points[t].kind == AuxKind::Support(None));
            if !both_support && !at_infinity {
                pairs.push((i, j));
            }
        }
    }
    let first_z = variables.len();
    for (i, j) in &pairs {
        variables.push(format!("z_{}_{}", points[*i].name, points[*j].name));
    }
    let arity = variables.len();
    let coord = |i: usize, c: usize| -> MultiPoly {
        match (&points[i].kind, coord_index[i]) {
            (AuxKind::Support(Some((x, y))), _) => MultiPoly::constant(arity, if c == 0 { x.clone() } else { y.clone() }),
            (_, Some(v)) => MultiPoly::var(arity, v + c),
            _ => unreachable!("point at infinity has no coordinates"),
        }
    };
    let one = MultiPoly::one(arity);
    let mut equations = Vec::new();
    for i in 0..n {
        let r = roots[i];
        if r == i {
            continue;
        }
        if points[i].kind == AuxKind::Support(None) || points[r].kind == AuxKind::Support(None) {
            return Err(Error::ChartFailure(format!(
                "{} is identified with a point at infinity",
                points[i].name
            )));
        }
        for c in 0..2 {
            equations.push(&coord(i, c) - &coord(r, c));
        }
    }
    for (t, &(i, j)) in pairs.iter().enumerate() {
        let z = MultiPoly::var(arity, first_z + t);
        let fx = &(&(&coord(i, 0) - &coord(j, 0)) * &z) - &one;
        let fy = &(&(&coord(i, 1) - &coord(j, 1)) * &z) - &one;
        equations.push(&fx * &fy);
    }
    PolynomialSystem::new(variables, equations)
}

/// Vanishing orders of `a`, `b` and `a − b` at one location.
#[derive(Clone, Debug, Default)]
struct Orders {
    labels: Vec<Label>,
    a: usize,
    b: usize,
    c: usize,
}

impl Orders {
    fn add(&mut self, label: Label, lambda: &RamificationType, mu: &[usize]) {
        self.labels.push(label);
        match label {
            Label::P(i) => self.a += lambda.lambda0().parts()[i - 1],
            Label::Q(i) => self.c += lambda.lambda1().parts()[i - 1],
            Label::R(i) => self.b += lambda.lambda_inf().parts()[i - 1],
            Label::Y(i) => {
                self.a += mu[i - 1];
                self.b += mu[i - 1];
                self.c += mu[i - 1];
            }
        }
    }

    /// `(form, from, to)`: the form must vanish to order `to`, and orders
    /// below `from` already follow from the other two.
    fn requirements(&self) -> Vec<(Form, usize, usize)> {
        let mut out = Vec::new();
        if self.a > 0 {
            out.push((Form::A, 0, self.a));
        }
        if self.b > 0 {
            out.push((Form::B, 0, self.b));
        }
        let floor = self.a.min(self.b);
        if self.c > floor {
            out.push((Form::AMinusB, floor, self.c));
        }
        out
    }
}

/// Builds the polynomial system of one case.
///
/// Variables are `a1..ak`, `b1..b(l-1)` (with `b_l = 1`), the coordinates
/// of every auxiliary point not placed on `D0`, the distinctness variables
/// `z_ZW`, then `w` with `w·a_k − 1 = 0`, then optional chart guards.
pub fn build_system(
    curve: &CurveModel,
    rr: &RRData,
    lambda: &RamificationType,
    case: &SystemCase,
    options: BuildOptions,
) -> Result<BuiltSystem> {
    if let Chart::TransformRequested { point, reason } = &case.chart {
        return Err(Error::ChartFailure(format!("case needs a chart transformation at {point}: {reason}")));
    }
    let n = rr.n();
    if case.k == 0 || case.l == 0 || case.k > n || case.l > n {
        return Err(Error::InvalidArgument(format!("k = {}, l = {} outside 1..={n}", case.k, case.l)));
    }
    let d = lambda.degree();
    if case.mu.iter().sum::<usize>() + d != case.m * rr.d0() {
        return Err(Error::InvalidArgument("mu does not sum to m·d0 − d".into()));
    }
    let all = labels(lambda, case.s());

    // locations: free points in label order, then support points
    let mut free: Vec<(Label, Orders)> = Vec::new();
    let mut at_support: BTreeMap<usize, Orders> = BTreeMap::new();
    let mut aux = Vec::new();
    let mut identified = Vec::new();
    let mut aux_index: BTreeMap<Label, usize> = BTreeMap::new();
    for &lab in &all {
        match case.identification(lab) {
            None => {
                let mut o = Orders::default();
                o.add(lab, lambda, &case.mu);
                free.push((lab, o));
                aux_index.insert(lab, aux.len());
                let kind = if lab.is_branch() { AuxKind::Branch } else { AuxKind::Cancelling };
                aux.push(AuxPoint::new(lab.to_string(), kind));
            }
            Some(Identification::Support(s)) => {
                if *s >= rr.support().len() {
                    return Err(Error::InvalidArgument(format!("{lab} placed on a missing support point")));
                }
                at_support.entry(*s).or_default().add(lab, lambda, &case.mu);
            }
            Some(Identification::Point(b)) => {
                let host = free
                    .iter_mut()
                    .find(|(l, _)| l == b)
                    .ok_or_else(|| Error::ContradictoryPattern(format!("{lab} placed on {b}, which is not free")))?;
                host.1.add(lab, lambda, &case.mu);
                identified.push((aux_index[b], aux.len()));
                aux.push(AuxPoint::new(lab.to_string(), AuxKind::Cancelling));
            }
        }
    }
    for (s, e) in rr.support().iter().enumerate() {
        if let SupportPoint::Affine(x, y) = &e.point {
            aux.push(AuxPoint::new(support_name(s), AuxKind::Support(Some((x.clone(), y.clone())))));
        }
    }
    let dist = distinctness_constraints(&aux, &identified)?;

    let mut variables: Vec<String> = (1..=case.k).map(|i| format!("a{i}")).collect();
    variables.extend((1..case.l).map(|i| format!("b{i}")));
    let coef_vars = variables.len();
    variables.extend(dist.variables.iter().cloned());
    variables.push("w".into());
    let guard_start = variables.len();
    if options.chart_guards {
        variables.extend(free.iter().map(|(l, _)| format!("u_{l}")));
    }
    let arity = variables.len();
    let var = |name: &str| variables.iter().position(|v| v == name).expect("declared");

    let a: Vec<MultiPoly> = (0..n)
        .map(|i| if i < case.k { MultiPoly::var(arity, i) } else { MultiPoly::zero(arity) })
        .collect();
    let b: Vec<MultiPoly> = (0..n)
        .map(|i| match (i + 1).cmp(&case.l) {
            std::cmp::Ordering::Less => MultiPoly::var(arity, case.k + i),
            std::cmp::Ordering::Equal => MultiPoly::one(arity),
            std::cmp::Ordering::Greater => MultiPoly::zero(arity),
        })
        .collect();
    let amb: Vec<MultiPoly> = a.iter().zip(&b).map(|(x, y)| x - y).collect();
    let coeffs = |f: Form| match f {
        Form::A => &a,
        Form::B => &b,
        Form::AMinusB => &amb,
    };

    let (den, numerators) = rr.cleared_numerators();
    let max_order = free
        .iter()
        .flat_map(|(_, o)| [o.a, o.b, o.c])
        .max()
        .unwrap_or(0);
    let table = derivative_table(curve, &numerators, max_order)?;

    let mut equations = Vec::new();
    let mut kinds = Vec::new();
    for (lab, o) in &free {
        let name = lab.to_string();
        let pt = (var(&format!("x_{name}")), var(&format!("y_{name}")));
        equations.push(membership_equation(curve, pt, arity));
        kinds.push(EquationKind::Membership(name.clone()));
        for (form, from, to) in o.requirements() {
            for (j, e) in (from..to).zip(combine(&table, coeffs(form), pt, from..to)) {
                equations.push(e);
                kinds.push(EquationKind::Vanishing {
                    at: name.clone(),
                    form,
                    j,
                });
            }
        }
    }
    for (s, o) in &at_support {
        let entry = &rr.support()[*s];
        let bound = (case.m * entry.multiplicity) as i64;
        for (form, _, to) in o.requirements() {
            // ord_s(Σ c_i g_i) = −max{pole_i : c_i ≠ 0} when the poles separate the basis
            for (i, c) in coeffs(form).iter().enumerate() {
                if (entry.pole_orders[i] as i64) > bound - to as i64 && !c.is_zero() {
                    equations.push(c.clone());
                    kinds.push(EquationKind::Coefficient {
                        at: support_name(*s),
                        form,
                        index: i + 1,
                    });
                }
            }
        }
    }
    let dist_map: Vec<usize> = dist.variables.iter().map(|v| var(v)).collect();
    let mut pair_names = Vec::new();
    for v in dist.variables.iter().filter(|v| v.starts_with("z_")) {
        let rest = &v[2..];
        let (p, q) = rest.split_once('_').expect("z_P_Q");
        pair_names.push((p.to_string(), q.to_string()));
    }
    let n_equal = dist.equations.len() - pair_names.len();
    for (t, e) in dist.equations.iter().enumerate() {
        equations.push(e.embed(&dist_map, arity));
        if t < n_equal {
            let (i, r) = identified[t / 2];
            kinds.push(EquationKind::Equal(aux[r].name.clone(), aux[i].name.clone()));
        } else {
            let (p, q) = &pair_names[t - n_equal];
            kinds.push(EquationKind::Distinct(p.clone(), q.clone()));
        }
    }
    let w = MultiPoly::var(arity, var("w"));
    equations.push(&(&w * &a[case.k - 1]) - &MultiPoly::one(arity));
    kinds.push(EquationKind::Nonvanishing);
    if options.chart_guards {
        let fy = curve.defining_polynomial().derivative(1);
        let guard = &den * &fy;
        for (t, (lab, _)) in free.iter().enumerate() {
            let name = lab.to_string();
            let pt = [var(&format!("x_{name}")), var(&format!("y_{name}"))];
            let u = MultiPoly::var(arity, guard_start + t);
            equations.push(&(&u * &guard.embed(&pt, arity)) - &MultiPoly::one(arity));
            kinds.push(EquationKind::ChartGuard(name));
        }
    }

    let extra = arity - coef_vars - dist.variables.len();
    let mut system = PolynomialSystem::new(variables, equations)?;
    let (core_v, core_e) = {
        let e = kinds.iter().filter(|k| k.is_core()).count();
        (arity - extra, e)
    };
    system.metadata = vec![
        ("curve".into(), curve.name.clone()),
        ("degree".into(), d.to_string()),
        ("lambda".into(), lambda.to_string()),
        ("case".into(), case.to_string()),
        ("core variables".into(), core_v.to_string()),
        ("core equations".into(), core_e.to_string()),
        ("nonvanishing gadget".into(), "w*a_k - 1 (1 variable, 1 equation)".into()),
    ];
    if options.chart_guards {
        system
            .metadata
            .push(("chart guards".into(), format!("{} variables, {} equations", free.len(), free.len())));
    }
    Ok(BuiltSystem {
        system,
        kinds,
        extra_variables: extra,
    })
}
