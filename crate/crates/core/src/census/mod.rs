//! Belyi maps of a given degree and ramification type, counted as
//! transitive permutation triples `σ₀σ₁σ∞ = 1` up to simultaneous conjugation.

mod canonical;
pub mod fermat;

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::passports::{rh_genus, types_with_genus, RamificationType};
use crate::perm::{
    centralizer_order, conjugacy_class, factorial, group_order, is_transitive, CycleType, Permutation,
};

pub use fermat::{verify_fermat4, Evidence, FermatCertificate};

/// Largest degree the exhaustive census accepts.
pub const CENSUS_MAX_DEGREE: usize = 9;

/// Environment variable read for the number of census workers.
pub const WORKERS_ENV: &str = "BELYI_WORKERS";

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct BelyiTriple {
    sigma0: Permutation,
    sigma1: Permutation,
    sigma_inf: Permutation,
}

impl BelyiTriple {
    /// Checks `σ₀σ₁σ∞ = 1` and transitivity of `⟨σ₀, σ₁⟩`.
    pub fn new(sigma0: Permutation, sigma1: Permutation, sigma_inf: Permutation) -> Result<Self> {
        let product = sigma0.compose(&sigma1.compose(&sigma_inf)?)?;
        if !product.is_identity() {
            return Err(Error::InvalidArgument(format!(
                "σ₀σ₁σ∞ = {product}, not the identity"
            )));
        }
        if !is_transitive(&[sigma0.clone(), sigma1.clone()], sigma0.degree()) {
            return Err(Error::InvalidArgument(format!(
                "⟨{sigma0}, {sigma1}⟩ is not transitive"
            )));
        }
        Ok(BelyiTriple {
            sigma0,
            sigma1,
            sigma_inf,
        })
    }

    /// Completes the pair with `σ∞ = (σ₀σ₁)⁻¹`.
    pub fn from_pair(sigma0: Permutation, sigma1: Permutation) -> Result<Self> {
        let sigma_inf = sigma0.compose(&sigma1)?.inverse();
        Self::new(sigma0, sigma1, sigma_inf)
    }

    fn from_pair_unchecked(sigma0: Permutation, sigma1: Permutation) -> Self {
        let sigma_inf = sigma0.compose_unchecked(&sigma1).inverse();
        BelyiTriple {
            sigma0,
            sigma1,
            sigma_inf,
        }
    }

    pub fn degree(&self) -> usize {
        self.sigma0.degree()
    }
    pub fn sigma0(&self) -> &Permutation {
        &self.sigma0
    }
    pub fn sigma1(&self) -> &Permutation {
        &self.sigma1
    }
    pub fn sigma_inf(&self) -> &Permutation {
        &self.sigma_inf
    }

    pub fn generators(&self) -> [Permutation; 2] {
        [self.sigma0.clone(), self.sigma1.clone()]
    }

    pub fn ramification_type(&self) -> RamificationType {
        RamificationType::new(
            self.sigma0.cycle_type(),
            self.sigma1.cycle_type(),
            self.sigma_inf.cycle_type(),
        )
        .expect("components share a degree")
    }

    /// Genus of the covering curve read off the cycle counts.
    pub fn genus(&self) -> usize {
        let d = self.degree() as i64;
        let cycles =
            (self.sigma0.cycle_count() + self.sigma1.cycle_count() + self.sigma_inf.cycle_count()) as i64;
        ((d - cycles + 2) / 2) as usize
    }

    /// Simultaneous conjugation by `g`.
    pub fn conjugate(&self, g: &Permutation) -> Result<Self> {
        Ok(BelyiTriple {
            sigma0: self.sigma0.conjugate(g)?,
            sigma1: self.sigma1.conjugate(g)?,
            sigma_inf: self.sigma_inf.conjugate(g)?,
        })
    }

    /// Image sequence of `(σ₀, σ₁)` concatenated; the canonical form minimises it.
    pub fn key(&self) -> Vec<u32> {
        let mut k = self.sigma0.images().to_vec();
        k.extend_from_slice(self.sigma1.images());
        k
    }

    /// The lexicographically minimal simultaneous conjugate.
    pub fn canonical(&self) -> BelyiTriple {
        let g = canonical::conjugator_to_canonical(&self.sigma0);
        let ct = self.sigma0.cycle_type();
        let sigma1 = self.sigma1.conjugate_unchecked(&g);
        canonical_from_relabelled(&ct, &sigma1)
    }
}

fn canonical_from_relabelled(ct: &CycleType, sigma1: &Permutation) -> BelyiTriple {
    let images = canonical::minimize_over_centralizer(ct, sigma1);
    let sigma1 = Permutation::from_images(images).expect("conjugate is a permutation");
    BelyiTriple::from_pair_unchecked(ct.canonical_permutation(), sigma1)
}

impl fmt::Display for BelyiTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.sigma0, self.sigma1, self.sigma_inf)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonodromyTag {
    Cyclic,
    Alternating,
    Symmetric,
    Other(BigUint),
}

impl fmt::Display for MonodromyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonodromyTag::Cyclic => write!(f, "cyclic"),
            MonodromyTag::Alternating => write!(f, "alternating"),
            MonodromyTag::Symmetric => write!(f, "symmetric"),
            MonodromyTag::Other(order) => write!(f, "other({order})"),
        }
    }
}

/// Tags the monodromy group `⟨σ₀, σ₁⟩` and returns it with the group order.
pub fn classify_monodromy(t: &BelyiTriple) -> Result<(MonodromyTag, BigUint)> {
    let gens = t.generators();
    let order = group_order(&gens)?;
    let d = t.degree();
    let d_big = BigUint::from(d);
    let abelian = gens[0].compose_unchecked(&gens[1]) == gens[1].compose_unchecked(&gens[0]);
    let exponent = gens[0].order().lcm(&gens[1].order());
    let full = factorial(d);
    let tag = if order == d_big && abelian && BigUint::from(exponent) == d_big {
        MonodromyTag::Cyclic
    } else if d >= 2 && order == &full / 2u32 && gens.iter().all(Permutation::is_even) {
        MonodromyTag::Alternating
    } else if order == full {
        MonodromyTag::Symmetric
    } else {
        MonodromyTag::Other(order.clone())
    };
    Ok((tag, order))
}

pub fn worker_count() -> usize {
    std::env::var(WORKERS_ENV)
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n > 0)
        .unwrap_or_else(rayon::current_num_threads)
}

fn check_census_guard(d: usize) -> Result<()> {
    if d > CENSUS_MAX_DEGREE {
        return Err(Error::ResourceLimit {
            operation: "census",
            limit: CENSUS_MAX_DEGREE,
            requested: d,
        });
    }
    Ok(())
}

/// One canonical triple per class, ordered by canonical key. Worker count is
/// taken from `BELYI_WORKERS` when set.
pub fn enumerate_classes(lambda: &RamificationType) -> Result<Vec<BelyiTriple>> {
    enumerate_classes_with_workers(lambda, worker_count())
}

/// Same as [`enumerate_classes`] with an explicit worker count. The output
/// does not depend on `workers`.
pub fn enumerate_classes_with_workers(lambda: &RamificationType, workers: usize) -> Result<Vec<BelyiTriple>> {
    let d = lambda.degree();
    check_census_guard(d)?;
    if rh_genus(lambda).is_none() {
        return Ok(Vec::new());
    }
    let ct0 = lambda.lambda0().clone();
    let sigma0 = ct0.canonical_permutation();
    let candidates = conjugacy_class(lambda.lambda1());

    let visit = |sigma1: &Permutation| -> Option<Vec<u32>> {
        let sigma_inf = sigma0.compose_unchecked(sigma1).inverse();
        if sigma_inf.cycle_type() != *lambda.lambda_inf() {
            return None;
        }
        if !is_transitive(&[sigma0.clone(), sigma1.clone()], d) {
            return None;
        }
        Some(canonical_from_relabelled(&ct0, sigma1).key())
    };

    let keys: BTreeSet<Vec<u32>> = if workers <= 1 {
        candidates.iter().filter_map(visit).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
        let chunk = candidates.len().div_ceil(workers * 4).max(1);
        pool.install(|| {
            candidates
                .par_chunks(chunk)
                .map(|c| c.iter().filter_map(visit).collect::<BTreeSet<_>>())
                .reduce(BTreeSet::new, |mut a, b| {
                    a.extend(b);
                    a
                })
        })
    };

    Ok(keys
        .into_iter()
        .map(|k| {
            let (s0, s1) = k.split_at(d);
            BelyiTriple::from_pair_unchecked(
                Permutation::from_images(s0.to_vec()).unwrap(),
                Permutation::from_images(s1.to_vec()).unwrap(),
            )
        })
        .collect())
}

#[derive(Clone, Debug)]
pub struct ClassInfo {
    pub triple: BelyiTriple,
    pub monodromy_order: BigUint,
    pub monodromy_tag: MonodromyTag,
    pub automorphism_count: BigUint,
}

#[derive(Clone, Debug)]
pub struct PassportEntry {
    pub lambda: RamificationType,
    pub genus: usize,
    pub class_count: usize,
    pub classes: Vec<ClassInfo>,
}

impl PassportEntry {
    pub fn build(lambda: &RamificationType) -> Result<Self> {
        Self::build_with_workers(lambda, worker_count())
    }

    pub fn build_with_workers(lambda: &RamificationType, workers: usize) -> Result<Self> {
        let genus = rh_genus(lambda).ok_or_else(|| {
            Error::InvalidArgument(format!("{lambda} fails Riemann–Hurwitz; no passport"))
        })?;
        let classes = enumerate_classes_with_workers(lambda, workers)?
            .into_iter()
            .map(|triple| {
                let (tag, order) = classify_monodromy(&triple)?;
                let aut = centralizer_order(&triple.generators())?;
                Ok(ClassInfo {
                    triple,
                    monodromy_order: order,
                    monodromy_tag: tag,
                    automorphism_count: aut,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PassportEntry {
            lambda: lambda.clone(),
            genus,
            class_count: classes.len(),
            classes,
        })
    }

    pub fn cyclic_count(&self) -> usize {
        self.classes
            .iter()
            .filter(|c| c.monodromy_tag == MonodromyTag::Cyclic)
            .count()
    }

    pub fn noncyclic_count(&self) -> usize {
        self.class_count - self.cyclic_count()
    }

    /// `Σ 1/|Aut|` over the classes, as a reduced fraction `(num, den)`.
    pub fn mass(&self) -> (BigUint, BigUint) {
        let mut num = BigUint::from(0u32);
        let mut den = BigUint::one();
        for c in &self.classes {
            // num/den + 1/a
            let a = &c.automorphism_count;
            num = num * a + &den;
            den *= a;
            let g = num.gcd(&den);
            num /= &g;
            den /= &g;
        }
        (num, den)
    }

    pub fn to_json(&self) -> Value {
        let (mn, md) = self.mass();
        json!({
            "lambda": self.lambda.to_json_array(),
            "type": self.lambda.to_string(),
            "genus": self.genus,
            "class_count": self.class_count,
            "cyclic_count": self.cyclic_count(),
            "noncyclic_count": self.noncyclic_count(),
            "mass": format!("{mn}/{md}"),
            "classes": self.classes.iter().map(ClassInfo::to_json).collect::<Vec<_>>(),
        })
    }
}

pub(crate) fn big_to_json(n: &BigUint) -> Value {
    match n.to_u64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

impl ClassInfo {
    pub fn to_json(&self) -> Value {
        json!({
            "cycles": [
                self.triple.sigma0().to_string(),
                self.triple.sigma1().to_string(),
                self.triple.sigma_inf().to_string(),
            ],
            "order": big_to_json(&self.monodromy_order),
            "tag": self.monodromy_tag.to_string(),
            "automorphisms": big_to_json(&self.automorphism_count),
        })
    }
}

/// Full passport data for every type of degree `d` and genus `g`.
pub fn passport_report(d: usize, g: usize) -> Result<Vec<PassportEntry>> {
    check_census_guard(d)?;
    types_with_genus(d, g)?
        .iter()
        .map(PassportEntry::build)
        .collect()
}

/// True when a single Belyi map on the curve would force more classes than
/// exist: with trivial centralizers and prime degree, `Aut(X)` acts freely on
/// the curve's Belyi maps of this passport, producing `autOrder` distinct
/// classes.
pub fn free_action_obstruction(
    class_count: usize,
    aut_order: u64,
    all_centralizers_trivial: bool,
    degree_prime: bool,
) -> bool {
    all_centralizers_trivial && degree_prime && aut_order > class_count as u64
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|k| k * k <= n).all(|k| !n.is_multiple_of(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::all_permutations;

    fn ty(s: &str) -> RamificationType {
        s.parse().unwrap()
    }

    #[test]
    fn trivial_degrees() {
        let one = enumerate_classes(&ty("1/1/1")).unwrap();
        assert_eq!(one.len(), 1);
        assert!(one[0].sigma0().is_identity());

        let two = enumerate_classes(&ty("2/1,1/2")).unwrap();
        assert_eq!(two.len(), 1);
        assert_eq!(two[0].sigma0().to_string(), "(1 2)");
        assert!(two[0].sigma1().is_identity());
        assert_eq!(two[0].sigma_inf().to_string(), "(1 2)");
    }

    #[test]
    fn rh_failures_have_no_classes() {
        assert!(enumerate_classes(&ty("2/2/2")).unwrap().is_empty());
        assert!(enumerate_classes(&ty("10/10/10")).unwrap_err().is_resource_limit());
    }

    #[test]
    fn triple_validation() {
        let c = Permutation::parse_cycles("(1 2 3)", 3).unwrap();
        assert!(BelyiTriple::new(c.clone(), c.clone(), c.clone()).is_ok());
        assert!(BelyiTriple::new(c.clone(), c.clone(), c.inverse()).is_err());
        let a = Permutation::parse_cycles("(1 2)", 4).unwrap();
        let b = Permutation::parse_cycles("(3 4)", 4).unwrap();
        assert!(BelyiTriple::from_pair(a, b).is_err());
    }

    #[test]
    fn canonical_form_is_lex_min_over_all_conjugates() {
        let perms = all_permutations(5);
        let sigma0 = Permutation::parse_cycles("(1 2)(3 4 5)", 5).unwrap();
        for sigma1 in perms.iter().step_by(13) {
            let Ok(t) = BelyiTriple::from_pair(sigma0.clone(), sigma1.clone()) else {
                continue;
            };
            let brute = perms
                .iter()
                .map(|g| t.conjugate(g).unwrap().key())
                .min()
                .unwrap();
            assert_eq!(t.canonical().key(), brute, "{t}");
        }
    }

    #[test]
    fn canonical_form_with_many_fixed_points() {
        // σ₀ with a large centralizer exercises the branching search
        let perms = all_permutations(6);
        let sigma0 = Permutation::parse_cycles("(1 2)", 6).unwrap();
        let mut seen = 0;
        for sigma1 in perms.iter().step_by(7) {
            let Ok(t) = BelyiTriple::from_pair(sigma0.clone(), sigma1.clone()) else {
                continue;
            };
            seen += 1;
            let brute = perms.iter().map(|g| t.conjugate(g).unwrap().key()).min().unwrap();
            assert_eq!(t.canonical().key(), brute, "{t}");
        }
        assert!(seen > 0);
    }

    #[test]
    fn monodromy_tags() {
        let c7 = Permutation::parse_cycles("(1 2 3 4 5 6 7)", 7).unwrap();
        let t = BelyiTriple::from_pair(c7.clone(), c7.clone()).unwrap();
        let (tag, order) = classify_monodromy(&t).unwrap();
        assert_eq!(tag, MonodromyTag::Cyclic);
        assert_eq!(order, BigUint::from(7u32));

        let s3 = BelyiTriple::from_pair(
            Permutation::parse_cycles("(1 2)", 3).unwrap(),
            Permutation::parse_cycles("(2 3)", 3).unwrap(),
        )
        .unwrap();
        assert_eq!(classify_monodromy(&s3).unwrap().0, MonodromyTag::Symmetric);
    }

    #[test]
    fn obstruction_examples() {
        assert!(free_action_obstruction(25, 96, true, true));
        assert!(!free_action_obstruction(25, 6, true, true));
        assert!(!free_action_obstruction(25, 96, false, true));
        assert!(!free_action_obstruction(25, 96, true, false));
    }

    #[test]
    fn small_passports() {
        let one = passport_report(1, 0).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].class_count, 1);

        let three = passport_report(3, 1).unwrap();
        assert_eq!(three.len(), 1);
        assert_eq!(three[0].lambda, ty("3/3/3"));
        assert_eq!(three[0].class_count, 1);
        assert_eq!(three[0].cyclic_count(), 1);
    }

    #[test]
    fn worker_count_does_not_change_output() {
        for s in ["7/7/7", "3,2,1/3,3/4,1,1", "4,4/4,4/2,2,2,2"] {
            let l = ty(s);
            assert_eq!(
                enumerate_classes_with_workers(&l, 1).unwrap(),
                enumerate_classes_with_workers(&l, 4).unwrap()
            );
        }
    }

    #[test]
    fn primes() {
        let ps: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(ps, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }
}
