//! Truncated formal q-expansions with rational exponents.
//!
//! A [`Series`] stores finitely many nonzero terms together with an order
//! `O`: every coefficient of `q^e` with `e < O` is known (absent means zero),
//! and nothing is claimed at or beyond `O`. Every operation propagates the
//! tightest order it can justify, and lookups past the order are errors.

use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::lattice::{Lattice, RationalVector};
use crate::scalar::{format_rational, int, parse_rational, rat, Rational, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub struct Series<C> {
    terms: BTreeMap<Rational, C>,
    order: Rational,
}

impl<C: Scalar> Series<C> {
    /// The zero series, known up to `order`.
    pub fn zero(order: Rational) -> Self {
        Series { terms: BTreeMap::new(), order }
    }

    pub fn one(order: Rational) -> Self {
        Self::monomial(Rational::zero(), C::one(), order)
    }

    pub fn monomial(exponent: Rational, coeff: C, order: Rational) -> Self {
        Self::from_terms([(exponent, coeff)], order)
    }

    /// Collects terms, summing repeated exponents and dropping zeros and
    /// anything at or past `order`.
    pub fn from_terms(terms: impl IntoIterator<Item = (Rational, C)>, order: Rational) -> Self {
        let mut map: BTreeMap<Rational, C> = BTreeMap::new();
        for (e, c) in terms {
            if e >= order {
                continue;
            }
            let slot = map.entry(e).or_insert_with(C::zero);
            *slot = slot.clone() + c;
        }
        map.retain(|_, c| !c.is_zero());
        Series { terms: map, order }
    }

    pub fn order(&self) -> &Rational {
        &self.order
    }

    pub fn terms(&self) -> &BTreeMap<Rational, C> {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Rational, &C)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, e: &Rational) -> Result<C> {
        if *e >= self.order {
            return Err(Error::BeyondOrder { requested: e.clone(), order: self.order.clone() });
        }
        Ok(self.terms.get(e).cloned().unwrap_or_else(C::zero))
    }

    pub fn leading(&self) -> Option<(&Rational, &C)> {
        self.terms.iter().next()
    }

    /// Lowest exponent that may be nonzero: the leading exponent, or the
    /// order when no term is known.
    pub fn valuation_bound(&self) -> Rational {
        self.leading().map_or_else(|| self.order.clone(), |(e, _)| e.clone())
    }

    /// Exact comparison of all coefficients below `upto`.
    pub fn eq_to_order(&self, other: &Self, upto: &Rational) -> Result<bool> {
        for s in [self, other] {
            if *upto > s.order {
                return Err(Error::BeyondOrder { requested: upto.clone(), order: s.order.clone() });
            }
        }
        let a = self.terms.range(..upto.clone());
        let b = other.terms.range(..upto.clone());
        Ok(a.eq(b))
    }

    /// Forgets everything at or beyond `order` (no-op if already lower).
    pub fn truncate(&self, order: &Rational) -> Self {
        let order = order.min(&self.order).clone();
        Series {
            terms: self.terms.range(..order.clone()).map(|(e, c)| (e.clone(), c.clone())).collect(),
            order,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order.clone().min(other.order.clone());
        Self::from_terms(
            self.terms.iter().chain(other.terms.iter()).map(|(e, c)| (e.clone(), c.clone())),
            order,
        )
    }

    pub fn neg(&self) -> Self {
        Series {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
            order: self.order.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &C) -> Self {
        Self::from_terms(
            self.terms.iter().map(|(e, c)| (e.clone(), c.clone() * s.clone())),
            self.order.clone(),
        )
    }

    /// Multiplication by `q^e`.
    pub fn shift(&self, e: &Rational) -> Self {
        Series {
            terms: self.terms.iter().map(|(k, c)| (k + e, c.clone())).collect(),
            order: &self.order + e,
        }
    }

    /// Cauchy product with order `min(a.order + v(b), b.order + v(a))`.
    pub fn mul(&self, other: &Self) -> Self {
        let order = (&self.order + other.valuation_bound())
            .min(&other.order + self.valuation_bound());
        let mut acc: BTreeMap<Rational, C> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea + eb;
                if e >= order {
                    break;
                }
                let slot = acc.entry(e).or_insert_with(C::zero);
                *slot = slot.clone() + ca.clone() * cb.clone();
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Series { terms: acc, order }
    }

    /// `self^k` by repeated squaring, `k ≥ 1`.
    pub fn pow(&self, k: u32) -> Self {
        assert!(k >= 1, "pow needs a positive exponent");
        let mut base = self.clone();
        let mut acc: Option<Self> = None;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => a.mul(&base),
                });
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc.expect("k >= 1")
    }
}

/// Number of partitions of `n` into parts of `colors` colours, for
/// `n = 0..=nmax`; the graded dimensions of a rank-`colors` Heisenberg Fock space.
pub fn colored_partitions(colors: usize, nmax: usize) -> Vec<BigUint> {
    let mut p = vec![BigUint::zero(); nmax + 1];
    p[0] = BigUint::one();
    for _ in 0..colors {
        for part in 1..=nmax {
            for n in part..=nmax {
                let add = p[n - part].clone();
                p[n] += add;
            }
        }
    }
    p
}

/// Euler's pentagonal series `∏(1 − qⁿ) = Σ_k (−1)^k q^{k(3k−1)/2}`, dense up to `q^nmax`.
fn pentagonal(nmax: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::zero(); nmax + 1];
    c[0] = BigInt::one();
    for k in 1i64.. {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let e1 = (k * (3 * k - 1) / 2) as usize;
        let e2 = (k * (3 * k + 1) / 2) as usize;
        if e1 > nmax {
            break;
        }
        c[e1] += sign;
        if e2 <= nmax {
            c[e2] += sign;
        }
    }
    c
}

/// Number of integer exponent steps needed so that `start + n < order` is covered.
fn steps_below(start: &Rational, order: &Rational) -> Option<usize> {
    let span = order - start;
    if !span.is_positive() {
        return None;
    }
    // largest n with n < span
    (span.ceil().to_integer() - BigInt::one()).to_usize()
}

/// `η(q)^l` with `η(q) = q^{1/24} ∏(1 − qⁿ)`, known below `order`.
///
/// Positive powers come from repeated products of the pentagonal series;
/// negative powers from colored-partition counts.
pub fn eta_power<C: Scalar>(l: i64, order: &Rational) -> Series<C> {
    if l == 0 {
        return Series::one(order.clone());
    }
    let lead = rat(l, 24);
    let Some(nmax) = steps_below(&lead, order) else {
        return Series::zero(order.clone());
    };
    let coeffs: Vec<BigInt> = if l > 0 {
        let p = pentagonal(nmax);
        let mut acc = p.clone();
        for _ in 1..l {
            let mut next = vec![BigInt::zero(); nmax + 1];
            for (i, a) in acc.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, b) in p.iter().enumerate().take(nmax + 1 - i) {
                    if !b.is_zero() {
                        next[i + j] += a * b;
                    }
                }
            }
            acc = next;
        }
        acc
    } else {
        colored_partitions(l.unsigned_abs() as usize, nmax)
            .into_iter()
            .map(BigInt::from)
            .collect()
    };
    Series::from_terms(
        coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| (&lead + int(n as i64), C::from_integer(c))),
        order.clone(),
    )
}

/// Theta function of the coset `L − h`: `Σ_{α ∈ L} q^{(α − h, α − h)/2}`, below `order`.
///
/// The lattice is split into orthogonal summands; each summand's series is
/// enumerated once and identical summands (same Gram block, same centre)
/// are combined with [`Series::pow`].
pub fn theta_coset<C: Scalar>(
    lattice: &Lattice,
    h: &RationalVector,
    order: &Rational,
) -> Result<Series<C>> {
    if h.len() != lattice.rank() {
        return Err(Error::DimensionMismatch { expected: lattice.rank(), found: h.len() });
    }
    if lattice.components().len() == 1 {
        return theta_block(lattice, h, order);
    }
    let mut groups: Vec<(Lattice, RationalVector, u32)> = Vec::new();
    for comp in lattice.components() {
        let sub = lattice.sublattice(comp);
        let center = h.select(comp);
        match groups.iter_mut().find(|(l, c, _)| *l == sub && *c == center) {
            Some(g) => g.2 += 1,
            None => groups.push((sub, center, 1)),
        }
    }
    let mut acc: Option<Series<C>> = None;
    for (sub, center, mult) in &groups {
        let s = theta_block::<C>(sub, center, order)?.pow(*mult);
        acc = Some(match acc {
            None => s,
            Some(a) => a.mul(&s),
        });
    }
    Ok(acc.expect("at least one component").truncate(order))
}

fn theta_block<C: Scalar>(
    lattice: &Lattice,
    h: &RationalVector,
    order: &Rational,
) -> Result<Series<C>> {
    if !order.is_positive() {
        return Ok(Series::zero(order.clone()));
    }
    let bound = order * int(2);
    let points = lattice.enumerate_in_ellipsoid(h, &bound)?;
    let mut counts: HashMap<Rational, u64> = HashMap::new();
    for beta in &points {
        let d = RationalVector::from_integers(beta).sub(h);
        let half_norm = lattice.inner_unchecked(&d, &d) / int(2);
        if half_norm < *order {
            *counts.entry(half_norm).or_default() += 1;
        }
    }
    Ok(Series::from_terms(
        counts.into_iter().map(|(e, n)| (e, C::from_integer(&BigInt::from(n)))),
        order.clone(),
    ))
}

/// `{"order": "p/q", "terms": [["exp", "coeff"], ...]}`, exponents ascending.
pub fn series_to_json(s: &Series<Rational>) -> Value {
    let terms: Vec<Value> = s
        .iter()
        .map(|(e, c)| json!([format_rational(e), format_rational(c)]))
        .collect();
    json!({ "order": format_rational(s.order()), "terms": terms })
}

pub fn series_from_json(v: &Value) -> Result<Series<Rational>> {
    let bad = |m: &str| Error::Parse(format!("q-series JSON: {m}"));
    let order = v
        .get("order")
        .and_then(Value::as_str)
        .ok_or_else(|| bad("missing \"order\""))
        .and_then(parse_rational)?;
    let terms = v.get("terms").and_then(Value::as_array).ok_or_else(|| bad("missing \"terms\""))?;
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        let pair = t.as_array().filter(|p| p.len() == 2).ok_or_else(|| bad("term is not a pair"))?;
        let e = pair[0].as_str().ok_or_else(|| bad("exponent is not a string"))?;
        let c = pair[1].as_str().ok_or_else(|| bad("coefficient is not a string"))?;
        out.push((parse_rational(e)?, parse_rational(c)?));
    }
    Ok(Series::from_terms(out, order))
}
