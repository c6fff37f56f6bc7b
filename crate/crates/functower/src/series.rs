//! Truncated multivariate formal power series with exact rational
//! coefficients.
//!
//! A [`Series`] lives in variables `x_1 .. x_m` (the arity variables) plus a
//! degree marker `q` whose exponent may be negative (a Laurent direction).
//! Truncation is by *total arity degree* across all arity variables; `q`
//! exponents are never truncated.
//!
//! Invariants:
//! - no stored term has total arity degree above `truncation_order`
//! - no stored coefficient is zero (dropped eagerly on every operation)
//! - a series is *reduced* when it has no terms of arity degree 0
//!
//! Values are immutable after construction and all operations are pure, so
//! they can be shared or sent across threads freely.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::rational::Rational;

/// Exponent vector of a single term: one exponent per arity variable plus a
/// signed exponent for the degree marker `q`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Monomial {
    /// Exponents of the arity variables, one per variable.
    #[serde(rename = "x")]
    pub arity_exponents: Vec<u32>,
    /// Exponent of the degree marker; negative values are allowed.
    #[serde(rename = "q")]
    pub q_exponent: i64,
}

impl Monomial {
    pub fn new(arity_exponents: Vec<u32>, q_exponent: i64) -> Self {
        Monomial {
            arity_exponents,
            q_exponent,
        }
    }

    /// The unit monomial (all exponents zero) on `num_vars` variables.
    pub fn unit(num_vars: usize) -> Self {
        Monomial::new(vec![0; num_vars], 0)
    }

    /// The monomial `x_i`.
    pub fn var(num_vars: usize, i: usize) -> Self {
        assert!(
            i < num_vars,
            "variable index {i} out of range for {num_vars} variables"
        );
        let mut e = vec![0; num_vars];
        e[i] = 1;
        Monomial::new(e, 0)
    }

    /// Sum of the arity exponents.
    pub fn arity_degree(&self) -> u32 {
        self.arity_exponents.iter().sum()
    }

    fn combine(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity_exponents.len(), other.arity_exponents.len());
        Monomial::new(
            self.arity_exponents
                .iter()
                .zip(&other.arity_exponents)
                .map(|(a, b)| a + b)
                .collect(),
            self.q_exponent + other.q_exponent,
        )
    }

    fn render(&self, out: &mut String) {
        let m = self.arity_exponents.len();
        if self.q_exponent != 0 {
            out.push('q');
            if self.q_exponent != 1 {
                out.push_str(&format!("^{}", self.q_exponent));
            }
        }
        for (i, &e) in self.arity_exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !out.is_empty() {
                out.push('*');
            }
            out.push_str(&var_name(m, i));
            if e != 1 {
                out.push_str(&format!("^{e}"));
            }
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.render(&mut s);
        if s.is_empty() {
            s.push('1');
        }
        write!(f, "{s}")
    }
}

/// Variable names used for rendering: `x, y, z` for up to three variables,
/// `x1, x2, ...` beyond that. `w` is an alias people use informally for the
/// single variable of a word-length series; rendering sticks to `x`.
fn var_name(num_vars: usize, i: usize) -> String {
    if num_vars <= 3 {
        ["x", "y", "z"][i].to_string()
    } else {
        format!("x{}", i + 1)
    }
}

/// Sparse truncated power series. See the module docs for the invariants.
#[derive(Clone, PartialEq, Eq)]
pub struct Series {
    num_vars: usize,
    truncation_order: u32,
    terms: BTreeMap<Monomial, Rational>,
}

impl Series {
    /// The zero series.
    pub fn zero(num_vars: usize, order: u32) -> Self {
        assert!(num_vars >= 1, "a series needs at least one arity variable");
        Series {
            num_vars,
            truncation_order: order,
            terms: BTreeMap::new(),
        }
    }

    /// The constant series 1.
    pub fn one(num_vars: usize, order: u32) -> Self {
        Series::constant(num_vars, order, Rational::one())
    }

    /// A constant series (arity degree 0, q-degree 0).
    pub fn constant(num_vars: usize, order: u32, value: Rational) -> Self {
        let mut s = Series::zero(num_vars, order);
        if !value.is_zero() {
            s.terms.insert(Monomial::unit(num_vars), value);
        }
        s
    }

    /// The variable `x_i` as a series.
    pub fn var(num_vars: usize, i: usize, order: u32) -> Self {
        Series::monomial(num_vars, order, Monomial::var(num_vars, i), Rational::one())
    }

    /// A single-term series. Terms beyond the truncation order vanish.
    pub fn monomial(num_vars: usize, order: u32, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.arity_exponents.len(), num_vars, "monomial width mismatch");
        let mut s = Series::zero(num_vars, order);
        if !c.is_zero() && m.arity_degree() <= order {
            s.terms.insert(m, c);
        }
        s
    }

    /// Builds a series from raw terms, merging duplicates and dropping zero
    /// coefficients and terms beyond the truncation order.
    pub fn from_terms<I>(num_vars: usize, order: u32, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut s = Series::zero(num_vars, order);
        for (m, c) in terms {
            assert_eq!(m.arity_exponents.len(), num_vars, "monomial width mismatch");
            if m.arity_degree() > order || c.is_zero() {
                continue;
            }
            let entry = s.terms.entry(m);
            match entry {
                std::collections::btree_map::Entry::Vacant(v) => {
                    v.insert(c);
                }
                std::collections::btree_map::Entry::Occupied(mut o) => {
                    let sum = o.get() + &c;
                    if sum.is_zero() {
                        o.remove();
                    } else {
                        *o.get_mut() = sum;
                    }
                }
            }
        }
        s
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn truncation_order(&self) -> u32 {
        self.truncation_order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when no term has arity degree 0 (q-only terms count as degree 0).
    pub fn is_reduced(&self) -> bool {
        self.terms.keys().all(|m| m.arity_degree() > 0)
    }

    /// Iterates over the stored (nonzero) terms in monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Exact coefficient lookup; absent monomials are zero.
    pub fn coefficient(&self, m: &Monomial) -> Rational {
        assert_eq!(
            m.arity_exponents.len(),
            self.num_vars,
            "monomial width mismatch"
        );
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficient of `x_1^{e_1} ... x_m^{e_m} q^k`.
    pub fn coefficient_of(&self, arity_exponents: &[u32], q_exponent: i64) -> Rational {
        self.coefficient(&Monomial::new(arity_exponents.to_vec(), q_exponent))
    }

    /// Coefficient of `x^k` in a univariate series (q-degree 0).
    pub fn univariate_coefficient(&self, k: u32) -> Rational {
        assert_eq!(
            self.num_vars, 1,
            "univariate_coefficient on a multivariate series"
        );
        self.coefficient_of(&[k], 0)
    }

    /// Equality of every coefficient of total arity degree at most `order`.
    /// Panics if `order` exceeds either truncation order, since coefficients
    /// past the truncation are unknown.
    pub fn equal_through(&self, other: &Series, order: u32) -> bool {
        assert_eq!(self.num_vars, other.num_vars, "variable count mismatch");
        assert!(
            order <= self.truncation_order && order <= other.truncation_order,
            "comparison order {order} exceeds a truncation order ({}, {})",
            self.truncation_order,
            other.truncation_order
        );
        self.first_difference(other, order).is_none()
    }

    /// The smallest monomial (by arity degree, then lexicographically) of
    /// degree at most `order` where the two series differ, with both
    /// coefficients. `None` means they agree through `order`.
    pub fn first_difference(
        &self,
        other: &Series,
        order: u32,
    ) -> Option<(Monomial, Rational, Rational)> {
        assert_eq!(self.num_vars, other.num_vars, "variable count mismatch");
        let mut keys: Vec<&Monomial> = self
            .terms
            .keys()
            .chain(other.terms.keys())
            .filter(|m| m.arity_degree() <= order)
            .collect();
        keys.sort_by_key(|m| (m.arity_degree(), (*m).clone()));
        keys.dedup();
        for m in keys {
            let a = self.coefficient(m);
            let b = other.coefficient(m);
            if a != b {
                return Some((m.clone(), a, b));
            }
        }
        None
    }

    /// Copy truncated to a lower order.
    pub fn truncated(&self, order: u32) -> Series {
        let order = order.min(self.truncation_order);
        Series {
            num_vars: self.num_vars,
            truncation_order: order,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.arity_degree() <= order)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &Rational) -> Series {
        if c.is_zero() {
            return Series::zero(self.num_vars, self.truncation_order);
        }
        Series {
            num_vars: self.num_vars,
            truncation_order: self.truncation_order,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Shifts every q exponent by `k` (suspension for positive `k`,
    /// desuspension for negative).
    pub fn shift_q(&self, k: i64) -> Series {
        Series {
            num_vars: self.num_vars,
            truncation_order: self.truncation_order,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    (
                        Monomial::new(m.arity_exponents.clone(), m.q_exponent + k),
                        c.clone(),
                    )
                })
                .collect(),
        }
    }

    /// Specializes the degree marker: `q -> value`. A zero value is allowed
    /// only when no negative q exponents are present.
    pub fn eval_q(&self, value: &Rational) -> Series {
        let mut out = Series::zero(self.num_vars, self.truncation_order);
        for (m, c) in &self.terms {
            let factor = if m.q_exponent == 0 {
                Rational::one()
            } else {
                value.pow(i32::try_from(m.q_exponent).expect("q exponent fits in i32"))
            };
            let key = Monomial::new(m.arity_exponents.clone(), 0);
            let add = c * &factor;
            if add.is_zero() {
                continue;
            }
            let cur = out.terms.remove(&key).unwrap_or_else(Rational::zero) + add;
            if !cur.is_zero() {
                out.terms.insert(key, cur);
            }
        }
        out
    }

    /// k-th multiplicative power.
    pub fn pow(&self, k: u32) -> Series {
        let mut acc = Series::one(self.num_vars, self.truncation_order);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Re-embeds a univariate series into an `num_vars`-variable ring with
    /// its variable placed at `slot`.
    pub fn embed(&self, num_vars: usize, slot: usize) -> Series {
        assert_eq!(self.num_vars, 1, "embed expects a univariate series");
        self.rename_vars(num_vars, &[slot])
    }

    /// Relabels the variables into a (possibly wider) ring: variable `i`
    /// becomes variable `mapping[i]`. Pure re-indexing, no arithmetic.
    pub fn rename_vars(&self, num_vars: usize, mapping: &[usize]) -> Series {
        assert_eq!(mapping.len(), self.num_vars, "need one target per variable");
        assert!(
            mapping.iter().all(|&t| t < num_vars),
            "target slot out of range"
        );
        {
            let mut seen = vec![false; num_vars];
            for &t in mapping {
                assert!(!seen[t], "target slots must be distinct");
                seen[t] = true;
            }
        }
        Series {
            num_vars,
            truncation_order: self.truncation_order,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = vec![0; num_vars];
                    for (i, &exp) in m.arity_exponents.iter().enumerate() {
                        e[mapping[i]] = exp;
                    }
                    (Monomial::new(e, m.q_exponent), c.clone())
                })
                .collect(),
        }
    }

    /// Substitutes the sum of `args` for the single variable of `self`:
    /// `f(g_1 + g_2 + ...)`. Every argument must be reduced, so the
    /// composite is well defined and exact through the common order.
    pub fn substitute(&self, args: &[Series]) -> Result<Series, Error> {
        assert_eq!(self.num_vars, 1, "substitute expects a univariate series");
        assert!(!args.is_empty(), "substitute needs at least one argument");
        let mut sum = args[0].clone();
        for g in &args[1..] {
            assert_eq!(g.num_vars(), sum.num_vars(), "variable count mismatch");
            sum = &sum + g;
        }
        self.substitute_per_var(std::slice::from_ref(&sum))
    }

    /// General composition: one reduced argument per variable of `self`.
    pub fn substitute_per_var(&self, args: &[Series]) -> Result<Series, Error> {
        assert_eq!(args.len(), self.num_vars, "need one argument per variable");
        let out_vars = args[0].num_vars();
        let mut order = self.truncation_order;
        for g in args {
            assert_eq!(g.num_vars(), out_vars, "argument variable counts differ");
            if !g.is_reduced() {
                return Err(Error::NotReduced {
                    context: "substitute",
                });
            }
            order = order.min(g.truncation_order());
        }
        // Power tables, grown on demand. Since every argument is reduced, a
        // term with arity exponent e_i contributes degree >= e_i, so
        // exponents above `order` never matter.
        let mut powers: Vec<Vec<Series>> = args
            .iter()
            .map(|_| vec![Series::one(out_vars, order)])
            .collect();
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in &self.terms {
            if m.arity_degree() > order {
                continue;
            }
            let mut term = Series::constant(out_vars, order, c.clone()).shift_q(m.q_exponent);
            for (i, &e) in m.arity_exponents.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * &args[i];
                    powers[i].push(next);
                }
                term = &term * &powers[i][e as usize];
            }
            for (tm, tc) in term.terms {
                match acc.entry(tm) {
                    std::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(tc);
                    }
                    std::collections::btree_map::Entry::Occupied(mut o) => {
                        let sum = o.get() + &tc;
                        if sum.is_zero() {
                            o.remove();
                        } else {
                            *o.get_mut() = sum;
                        }
                    }
                }
            }
        }
        Ok(Series {
            num_vars: out_vars,
            truncation_order: order,
            terms: acc,
        })
    }

    /// `1/(1 - f)` for reduced `f`: the unique `g` with `(1 - f) g = 1`
    /// through the truncation order.
    pub fn geometric_inverse(&self) -> Result<Series, Error> {
        if !self.is_reduced() {
            return Err(Error::NotReduced {
                context: "geometric_inverse",
            });
        }
        let mut acc = Series::one(self.num_vars, self.truncation_order);
        let one = Series::one(self.num_vars, self.truncation_order);
        for _ in 0..self.truncation_order {
            acc = &(&acc * self) + &one;
        }
        Ok(acc)
    }

    /// `exp(f) = sum f^k / k!` for reduced `f`. Includes the constant term 1.
    pub fn exp(&self) -> Result<Series, Error> {
        if !self.is_reduced() {
            return Err(Error::NotReduced { context: "exp" });
        }
        let n = self.truncation_order;
        let one = Series::one(self.num_vars, n);
        let mut acc = one.clone();
        for k in (1..=n.max(1)).rev() {
            let scaled = (&acc * self).scale(&Rational::new(1, i64::from(k)));
            acc = &scaled + &one;
        }
        Ok(acc)
    }

    /// `log(g)` for `g` whose arity-degree-0 part is exactly 1:
    /// `sum (-1)^{k+1} (g-1)^k / k`.
    pub fn log(&self) -> Result<Series, Error> {
        let one = Series::one(self.num_vars, self.truncation_order);
        let h = self - &one;
        if !h.is_reduced() {
            return Err(Error::ConstantTermNotOne);
        }
        let n = self.truncation_order;
        let mut acc = Series::zero(self.num_vars, n);
        for k in (1..=n).rev() {
            let sign = if k % 2 == 1 { 1 } else { -1 };
            let c = Series::constant(self.num_vars, n, Rational::new(sign, i64::from(k)));
            acc = &(&acc * &h) + &c;
        }
        Ok(&acc * &h)
    }

    /// Multiplies every exponent (arity and q) by `m`; terms pushed past the
    /// truncation order are dropped. This is the degree-scaling used by
    /// plethysm.
    pub fn frobenius(&self, m: u32) -> Series {
        let mut out = Series::zero(self.num_vars, self.truncation_order);
        for (mono, c) in &self.terms {
            if mono.arity_degree() * m > self.truncation_order {
                continue;
            }
            let scaled = Monomial::new(
                mono.arity_exponents.iter().map(|e| e * m).collect(),
                mono.q_exponent * i64::from(m),
            );
            out.terms.insert(scaled, c.clone());
        }
        out
    }

    fn add_impl(&self, other: &Series, negate: bool) -> Series {
        assert_eq!(self.num_vars, other.num_vars, "variable count mismatch");
        let order = self.truncation_order.min(other.truncation_order);
        let mut terms: BTreeMap<Monomial, Rational> = self
            .terms
            .iter()
            .filter(|(m, _)| m.arity_degree() <= order)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        for (m, c) in &other.terms {
            if m.arity_degree() > order {
                continue;
            }
            let add = if negate { -c } else { c.clone() };
            match terms.remove(m) {
                None => {
                    terms.insert(m.clone(), add);
                }
                Some(cur) => {
                    let sum = cur + add;
                    if !sum.is_zero() {
                        terms.insert(m.clone(), sum);
                    }
                }
            }
        }
        Series {
            num_vars: self.num_vars,
            truncation_order: order,
            terms,
        }
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        self.add_impl(rhs, false)
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        self.add_impl(rhs, true)
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series {
            num_vars: self.num_vars,
            truncation_order: self.truncation_order,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &Series {
    type Output = Series;

    /// Cauchy product truncated by total arity degree; q exponents add.
    fn mul(self, rhs: &Series) -> Series {
        assert_eq!(self.num_vars, rhs.num_vars, "variable count mismatch");
        let order = self.truncation_order.min(rhs.truncation_order);
        let mut terms: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            let da = ma.arity_degree();
            if da > order {
                continue;
            }
            for (mb, cb) in &rhs.terms {
                if da + mb.arity_degree() > order {
                    continue;
                }
                let m = ma.combine(mb);
                let prod = ca * cb;
                match terms.remove(&m) {
                    None => {
                        terms.insert(m, prod);
                    }
                    Some(cur) => {
                        let sum = cur + prod;
                        if !sum.is_zero() {
                            terms.insert(m, sum);
                        }
                    }
                }
            }
        }
        Series {
            num_vars: self.num_vars,
            truncation_order: order,
            terms,
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<&Monomial> = self.terms.keys().collect();
        keys.sort_by_key(|m| (m.arity_degree(), (*m).clone()));
        let mut out = String::new();
        for (idx, m) in keys.iter().enumerate() {
            let c = &self.terms[*m];
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut mono = String::new();
            m.render(&mut mono);
            if mono.is_empty() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{abs}*{mono}"));
            }
        }
        write!(f, "{out}")
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Series[{} vars, O({})]({})",
            self.num_vars, self.truncation_order, self
        )
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    vars: usize,
    order: u32,
    terms: Vec<TermRepr>,
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    x: Vec<u32>,
    q: i64,
    c: String,
}

impl Serialize for Series {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let repr = SeriesRepr {
            vars: self.num_vars,
            order: self.truncation_order,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| TermRepr {
                    x: m.arity_exponents.clone(),
                    q: m.q_exponent,
                    c: c.fraction_string(),
                })
                .collect(),
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Series {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = SeriesRepr::deserialize(deserializer)?;
        if repr.vars == 0 {
            return Err(serde::de::Error::custom(
                "series needs at least one variable",
            ));
        }
        let mut terms = Vec::with_capacity(repr.terms.len());
        for t in repr.terms {
            if t.x.len() != repr.vars {
                return Err(serde::de::Error::custom(format!(
                    "term has {} exponents, expected {}",
                    t.x.len(),
                    repr.vars
                )));
            }
            let c: Rational = t.c.parse().map_err(serde::de::Error::custom)?;
            terms.push((Monomial::new(t.x, t.q), c));
        }
        Ok(Series::from_terms(repr.vars, repr.order, terms))
    }
}
