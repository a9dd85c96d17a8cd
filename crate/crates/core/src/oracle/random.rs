use num_integer::Integer;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactnum::{GaussRat, Rational};
use crate::puiseux::{Branch, Curve, PuiseuxSeries, Term};

/// Bounds for random curves: exponents are `j/κ` in `[1, max_exponent]`
/// with `κ <= max_kappa` per branch.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CurveSpec {
    pub max_branches: usize,
    pub max_exponent: i64,
    pub max_kappa: i64,
    pub max_new_terms: usize,
}

impl Default for CurveSpec {
    fn default() -> Self {
        CurveSpec {
            max_branches: 6,
            max_exponent: 6,
            max_kappa: 8,
            max_new_terms: 3,
        }
    }
}

fn coeff<R: Rng>(rng: &mut R) -> GaussRat {
    let nonzero = |rng: &mut R| loop {
        let v = rng.gen_range(-3i64..=3);
        if v != 0 {
            return v;
        }
    };
    let re = GaussRat::from_int(nonzero(rng));
    if rng.gen_bool(0.2) {
        re + GaussRat::i().scale(&Rational::from_integer(nonzero(rng).into()))
    } else {
        re
    }
}

/// Grid exponents `j/kappa` in `(after, max]`, or `[1, max]` without `after`.
fn grid(kappa: i64, max: i64, after: Option<&Rational>) -> Vec<Rational> {
    (kappa..=max * kappa)
        .map(|j| Rational::new(j.into(), kappa.into()))
        .filter(|e| after.is_none_or(|a| e > a))
        .collect()
}

fn fresh_terms<R: Rng>(rng: &mut R, kappa: i64, spec: &CurveSpec, after: Option<&Rational>) -> Vec<Term> {
    let mut exps = grid(kappa, spec.max_exponent, after);
    exps.shuffle(rng);
    let n = rng.gen_range(0..=spec.max_new_terms.min(exps.len()));
    exps.truncate(n);
    exps.into_iter().map(|e| Term::new(e, coeff(rng))).collect()
}

fn divisors_up_to(base: i64, max: i64) -> Vec<i64> {
    (1..=max).filter(|k| k.is_multiple_of(&base)).collect()
}

fn random_branch<R: Rng>(rng: &mut R, spec: &CurveSpec, parent: Option<&PuiseuxSeries>) -> PuiseuxSeries {
    let Some(parent) = parent else {
        let kappa = rng.gen_range(1..=spec.max_kappa);
        let terms = fresh_terms(rng, kappa, spec, None);
        return PuiseuxSeries::new(terms).expect("grid exponents are distinct");
    };
    // Copy a prefix of the parent, then differ exactly at `split`.
    let pe: Vec<Rational> = parent.exponents().cloned().collect();
    let cut = rng.gen_range(0..=pe.len());
    let prefix: Vec<Term> = parent.terms()[..cut].to_vec();
    let base = prefix.iter().fold(1i64, |acc, t| {
        acc.lcm(&i64::try_from(t.exponent.denom()).expect("small"))
    });
    let kappa = *divisors_up_to(base, spec.max_kappa).choose(rng).expect("base <= max");
    let after = prefix.last().map(|t| t.exponent.clone());
    let candidates = grid(kappa, spec.max_exponent, after.as_ref());
    let Some(split) = candidates.choose(rng).cloned() else {
        return parent.clone();
    };
    let old = parent.coeff_at(&split);
    let mut c = coeff(rng);
    while c == old {
        c = coeff(rng);
    }
    let mut terms = prefix;
    terms.push(Term::new(split.clone(), c));
    terms.extend(fresh_terms(rng, kappa, spec, Some(&split)));
    PuiseuxSeries::new(terms).expect("grid exponents are distinct")
}

/// A random curve; later branches often share a prefix with an earlier one.
pub fn random_curve<R: Rng>(rng: &mut R, spec: &CurveSpec) -> Curve {
    loop {
        let n = rng.gen_range(1..=spec.max_branches);
        let mut series: Vec<PuiseuxSeries> = Vec::with_capacity(n);
        for _ in 0..n {
            let parent = if series.is_empty() || rng.gen_bool(0.3) {
                None
            } else {
                series.choose(rng)
            };
            let s = random_branch(rng, spec, parent);
            series.push(s);
        }
        let branches = series
            .into_iter()
            .enumerate()
            .map(|(i, s)| Branch::new(format!("C{}", i + 1), s))
            .collect();
        if let Ok(c) = Curve::new(branches) {
            return c;
        }
    }
}

/// Ramification steps `k_1, k_2, ...` (each at least 2) with product at
/// most `max_kappa`.
fn random_ks<R: Rng>(rng: &mut R, max_kappa: i64) -> Vec<i64> {
    let mut ks = Vec::new();
    let mut product = 1;
    while rng.gen_bool(0.7) {
        let options: Vec<i64> = (2..=max_kappa / product).collect();
        let Some(&k) = options.choose(rng) else { break };
        ks.push(k);
        product *= k;
    }
    ks
}

/// A single random branch with `κ <= spec.max_kappa`. The characteristic
/// exponents are drawn first; the remaining terms never add ramification.
pub fn random_irreducible<R: Rng>(rng: &mut R, spec: &CurveSpec) -> Curve {
    'retry: loop {
        let ks = random_ks(rng, spec.max_kappa);
        let mut terms = Vec::new();
        let mut ramification = 1i64;
        let mut last: Option<Rational> = None;
        for k in &ks {
            let next = ramification * k;
            let choices: Vec<Rational> = grid(next, spec.max_exponent, last.as_ref())
                .into_iter()
                .filter(|e| i64::try_from(e.denom()).expect("small").lcm(&ramification) == next)
                .collect();
            let Some(e) = choices.choose(rng).cloned() else {
                continue 'retry;
            };
            terms.push(Term::new(e.clone(), coeff(rng)));
            ramification = next;
            last = Some(e);
        }
        for _ in 0..rng.gen_range(0..=spec.max_new_terms) {
            let e = grid(ramification, spec.max_exponent, None)
                .choose(rng)
                .cloned()
                .expect("nonempty grid");
            if terms.iter().any(|t: &Term| t.exponent == e) {
                continue;
            }
            terms.push(Term::new(e, coeff(rng)));
        }
        let series = PuiseuxSeries::new(terms).expect("distinct exponents");
        if series.puiseux_pairs().len() == ks.len() {
            return Curve::new(vec![Branch::new("C1", series)]).expect("one branch");
        }
    }
}

/// `count` curves from a fixed seed.
pub fn random_curves(seed: u64, count: usize, spec: &CurveSpec) -> Vec<Curve> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_curve(&mut rng, spec)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::lcm_denominators;

    #[test]
    fn deterministic() {
        let spec = CurveSpec::default();
        assert_eq!(random_curves(7, 10, &spec), random_curves(7, 10, &spec));
        assert_ne!(random_curves(7, 10, &spec), random_curves(8, 10, &spec));
    }

    #[test]
    fn within_bounds() {
        let spec = CurveSpec::default();
        let curves = random_curves(1, 200, &spec);
        let mut shared = 0;
        for c in &curves {
            assert!(c.len() <= 6);
            for b in c.branches() {
                assert!(b
                    .series
                    .exponents()
                    .all(|e| *e >= Rational::from_integer(1.into()) && *e <= Rational::from_integer(6.into())));
                assert!(lcm_denominators(b.series.exponents()) <= 8.into());
            }
            for i in 0..c.len() {
                for j in i + 1..c.len() {
                    if c.contact(i, j) > Rational::from_integer(1.into()) {
                        shared += 1;
                    }
                }
            }
        }
        assert!(shared > 50, "generator should produce nontrivial contacts");
    }

    #[test]
    fn irreducible_pairs() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let spec = CurveSpec::default();
        let mut seen = [false; 4];
        for _ in 0..200 {
            let c = random_irreducible(&mut rng, &spec);
            let pairs = c.branches()[0].series.puiseux_pairs().len();
            assert!(pairs <= 3);
            seen[pairs] = true;
        }
        assert_eq!(seen, [true; 4]);
    }
}
