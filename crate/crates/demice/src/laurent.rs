//! Sparse Laurent polynomials in `z_1, .., z_r` with big-integer coefficients,
//! and the isobaric Demazure operators acting on them.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weyl::Permutation;

/// Exponent vector of a monomial.
pub type Exponents = Vec<i64>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    rank: usize,
    terms: BTreeMap<Exponents, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero(rank: usize) -> Self {
        LaurentPolynomial { rank, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize) -> Self {
        Self::monomial(vec![0; rank])
    }

    pub fn monomial(exponents: Exponents) -> Self {
        Self::term(exponents, BigInt::one())
    }

    pub fn term(exponents: Exponents, coeff: BigInt) -> Self {
        let mut p = Self::zero(exponents.len());
        p.add_term(exponents, coeff);
        p
    }

    pub fn constant(rank: usize, c: i64) -> Self {
        Self::term(vec![0; rank], BigInt::from(c))
    }

    /// The variable `z_i`, 1-based.
    pub fn variable(rank: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= rank, "variable index out of range");
        let mut e = vec![0; rank];
        e[i - 1] = 1;
        Self::monomial(e)
    }

    /// Builds a polynomial from `(exponents, coeff)` pairs, merging repeats.
    pub fn from_terms<I>(rank: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponents, BigInt)>,
    {
        let mut p = Self::zero(rank);
        for (e, c) in terms {
            if e.len() != rank {
                return Err(Error::RankMismatch { expected: rank, got: e.len() });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lexicographic order of exponents.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exponents: &[i64]) -> BigInt {
        self.terms.get(exponents).cloned().unwrap_or_default()
    }

    /// Sum of all coefficients.
    pub fn mass(&self) -> BigInt {
        self.terms.values().sum()
    }

    fn add_term(&mut self, e: Exponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_rank(&self, other: &Self) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch { expected: self.rank, got: other.rank });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut p = self.clone();
        for (e, c) in &other.terms {
            p.add_term(e.clone(), c.clone());
        }
        Ok(p)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut p = self.clone();
        for (e, c) in &other.terms {
            p.add_term(e.clone(), -c.clone());
        }
        Ok(p)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut p = Self::zero(self.rank);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                p.add_term(e, c1 * c2);
            }
        }
        Ok(p)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut p = Self::zero(self.rank);
        for (e, c0) in &self.terms {
            p.add_term(e.clone(), c0 * c);
        }
        p
    }

    /// Multiplies by the monomial `z^shift`.
    pub fn shift(&self, shift: &[i64]) -> Result<Self> {
        if shift.len() != self.rank {
            return Err(Error::RankMismatch { expected: self.rank, got: shift.len() });
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
            .collect();
        Ok(LaurentPolynomial { rank: self.rank, terms })
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: Self) -> LaurentPolynomial {
        self.try_add(rhs).expect("rank mismatch in add")
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: Self) -> LaurentPolynomial {
        self.try_sub(rhs).expect("rank mismatch in sub")
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: Self) -> LaurentPolynomial {
        self.try_mul(rhs).expect("rank mismatch in mul")
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        self.scale(&BigInt::from(-1))
    }
}

impl Add for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: Self) -> LaurentPolynomial {
        &self + &rhs
    }
}

impl Sub for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: Self) -> LaurentPolynomial {
        &self - &rhs
    }
}

impl Mul for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: Self) -> LaurentPolynomial {
        &self * &rhs
    }
}

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        -&self
    }
}

pub fn add(p: &LaurentPolynomial, q: &LaurentPolynomial) -> Result<LaurentPolynomial> {
    p.try_add(q)
}

pub fn sub(p: &LaurentPolynomial, q: &LaurentPolynomial) -> Result<LaurentPolynomial> {
    p.try_sub(q)
}

pub fn mul(p: &LaurentPolynomial, q: &LaurentPolynomial) -> Result<LaurentPolynomial> {
    p.try_mul(q)
}

/// Substitutes `z_i -> z_{w(i)}`, so `z^mu` goes to `z^{w mu}`.
pub fn permute_variables(w: &Permutation, p: &LaurentPolynomial) -> Result<LaurentPolynomial> {
    if w.degree() != p.rank {
        return Err(Error::RankMismatch { expected: p.rank, got: w.degree() });
    }
    let terms = p.terms.iter().map(|(e, c)| (w.act(e), c.clone())).collect();
    Ok(LaurentPolynomial { rank: p.rank, terms })
}

fn check_index(i: usize, rank: usize) -> Result<()> {
    if i == 0 || i >= rank {
        return Err(Error::IndexOutOfRange { index: i, max: rank.saturating_sub(1) });
    }
    Ok(())
}

/// Isobaric Demazure operator `∂_i`, evaluated term by term.
pub fn demazure(i: usize, p: &LaurentPolynomial) -> Result<LaurentPolynomial> {
    check_index(i, p.rank)?;
    let mut out = LaurentPolynomial::zero(p.rank);
    for (mu, c) in &p.terms {
        let k = mu[i - 1] - mu[i];
        // walk from z^mu down to z^{s_i mu}, or from z^{mu+alpha} up to
        // z^{s_i(mu+alpha)} with a sign; nothing when k = -1
        let (mut m, count, c, step) = if k >= 0 {
            (mu.clone(), k + 1, c.clone(), -1)
        } else {
            let mut m = mu.clone();
            m[i - 1] += 1;
            m[i] -= 1;
            (m, -k - 1, -c.clone(), 1)
        };
        for _ in 0..count {
            out.add_term(m.clone(), c.clone());
            m[i - 1] += step;
            m[i] -= step;
        }
    }
    Ok(out)
}

/// `∂°_i = ∂_i - 1`.
pub fn demazure_atom_op(i: usize, p: &LaurentPolynomial) -> Result<LaurentPolynomial> {
    demazure(i, p)?.try_sub(p)
}

/// `∂_w` (or `∂°_w` when `atom`) along the canonical reduced word of `w`.
pub fn demazure_w(w: &Permutation, p: &LaurentPolynomial, atom: bool) -> Result<LaurentPolynomial> {
    demazure_word(&w.reduced_word(), p, atom)
}

/// Applies `∂_{i_1} ⋯ ∂_{i_k}` to `p`, rightmost first.
pub fn demazure_word(word: &[usize], p: &LaurentPolynomial, atom: bool) -> Result<LaurentPolynomial> {
    let mut q = p.clone();
    for &i in word.iter().rev() {
        q = if atom { demazure_atom_op(i, &q)? } else { demazure(i, &q)? };
    }
    Ok(q)
}

/// Schur polynomial `s_λ(z_1..z_r)` as a sum over semistandard tableaux.
pub fn schur(lambda: &[usize], r: usize) -> Result<LaurentPolynomial> {
    let mut out = LaurentPolynomial::zero(r);
    for t in crate::crystal::enumerate_tableaux(lambda, r)? {
        let e = t.weight().into_iter().map(|x| x as i64).collect();
        out.add_term(e, BigInt::one());
    }
    Ok(out)
}

/// `z^ρ` with `ρ = (r-1, .., 0)`.
pub fn rho(r: usize) -> Exponents {
    (0..r).map(|i| (r - 1 - i) as i64).collect()
}

fn write_monomial(f: &mut fmt::Formatter<'_>, e: &[i64], mut first: bool) -> fmt::Result {
    for (k, &a) in e.iter().enumerate() {
        if a == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if a == 1 {
            write!(f, "z{}", k + 1)?;
        } else {
            write!(f, "z{}^{}", k + 1, a)?;
        }
    }
    Ok(())
}

/// Text form, terms in descending lexicographic order: `3*z1^2*z2 - z3^-1 + 1`.
impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let constant = e.iter().all(|&x| x == 0);
            if constant {
                write!(f, "{}", a)?;
            } else if a.is_one() {
                write_monomial(f, e, true)?;
            } else {
                write!(f, "{}", a)?;
                write_monomial(f, e, false)?;
            }
        }
        Ok(())
    }
}

impl LaurentPolynomial {
    /// Parses the text form with an explicit rank.
    pub fn parse(s: &str, rank: usize) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s == "0" {
            return Ok(Self::zero(rank));
        }
        let mut p = Self::zero(rank);
        let mut chunks = Vec::new();
        let mut cur = String::new();
        for (k, ch) in s.char_indices() {
            let prev = s[..k].chars().last();
            if (ch == '+' || ch == '-') && k > 0 && prev != Some('^') {
                chunks.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        chunks.push(cur);
        for chunk in chunks {
            let (sign, body) = match chunk.strip_prefix('-') {
                Some(b) => (-1, b),
                None => (1, chunk.strip_prefix('+').unwrap_or(&chunk)),
            };
            if body.is_empty() {
                return Err(Error::Parse(format!("empty term in {s:?}")));
            }
            let mut coeff = BigInt::from(sign);
            let mut e = vec![0i64; rank];
            for factor in body.split('*') {
                if let Some(v) = factor.strip_prefix('z') {
                    let (idx, pow) = match v.split_once('^') {
                        Some((a, b)) => (a, b.parse::<i64>().map_err(|x| Error::Parse(x.to_string()))?),
                        None => (v, 1),
                    };
                    let idx: usize = idx.parse().map_err(|_| Error::Parse(format!("bad variable {factor:?}")))?;
                    if idx == 0 || idx > rank {
                        return Err(Error::IndexOutOfRange { index: idx, max: rank });
                    }
                    e[idx - 1] += pow;
                } else {
                    let c = BigInt::from_str(factor).map_err(|_| Error::Parse(format!("bad factor {factor:?}")))?;
                    coeff *= c;
                }
            }
            p.add_term(e, coeff);
        }
        Ok(p)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exponents: Exponents,
    coeff: serde_json::Value,
}

fn coeff_to_json(c: &BigInt) -> serde_json::Value {
    match c.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::String(c.to_string()),
    }
}

/// JSON: a list of `{exponents, coeff}` in descending lexicographic order.
impl Serialize for LaurentPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in self.terms.iter().rev() {
            seq.serialize_element(&TermJson { exponents: e.clone(), coeff: coeff_to_json(c) })?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<TermJson> = Vec::deserialize(d)?;
        let rank = raw.first().map(|t| t.exponents.len()).unwrap_or(0);
        let mut terms = Vec::new();
        for t in raw {
            let c = match &t.coeff {
                serde_json::Value::Number(n) => BigInt::from_str(&n.to_string()).map_err(de::Error::custom)?,
                serde_json::Value::String(s) => BigInt::from_str(s).map_err(de::Error::custom)?,
                _ => return Err(de::Error::custom("coeff must be an integer")),
            };
            terms.push((t.exponents, c));
        }
        LaurentPolynomial::from_terms(rank, terms).map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, r: usize) -> LaurentPolynomial {
        LaurentPolynomial::parse(s, r).unwrap()
    }

    #[test]
    fn arithmetic() {
        assert_eq!(&p("z1+z2", 2) * &p("z1-z2", 2), p("z1^2-z2^2", 2));
        assert_eq!(&p("z1", 2) - &p("z1", 2), LaurentPolynomial::zero(2));
        assert_eq!(&p("z1^-1", 1) * &p("z1", 1), LaurentPolynomial::one(1));
        assert!(add(&p("z1", 1), &p("z1", 2)).is_err());
    }

    #[test]
    fn text_round_trip() {
        let q = p("3*z1^2*z2 - z3^-1 + 1 - 12345678901234567890123*z2", 3);
        assert_eq!(p(&q.to_string(), 3), q);
        assert_eq!(q.to_string(), "3*z1^2*z2 - 12345678901234567890123*z2 + 1 - z3^-1");
        assert_eq!(LaurentPolynomial::zero(2).to_string(), "0");
    }

    #[test]
    fn json_round_trip() {
        let q = p("-2*z1*z2^3 + 7", 2);
        let s = serde_json::to_string(&q).unwrap();
        assert_eq!(s, r#"[{"exponents":[1,3],"coeff":-2},{"exponents":[0,0],"coeff":7}]"#);
        let back: LaurentPolynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, q);
    }

    #[test]
    fn permute_examples() {
        let s1 = Permutation::simple(2, 1).unwrap();
        assert_eq!(permute_variables(&s1, &p("z1", 2)).unwrap(), p("z2", 2));
        let w0 = Permutation::longest(3);
        assert_eq!(permute_variables(&w0, &p("z1^2*z2", 3)).unwrap(), p("z3^2*z2", 3));
        assert!(permute_variables(&w0, &p("z1", 2)).is_err());
    }

    #[test]
    fn demazure_cases() {
        assert_eq!(demazure(1, &p("z1", 2)).unwrap(), p("z1+z2", 2));
        assert_eq!(demazure(1, &p("z2", 2)).unwrap(), LaurentPolynomial::zero(2));
        assert_eq!(demazure(1, &p("1", 2)).unwrap(), p("1", 2));
        // k = -3: -(z^{mu+alpha} + z^{s(mu+alpha)})
        assert_eq!(demazure(1, &p("z2^3", 2)).unwrap(), p("-z1*z2^2 - z1^2*z2", 2));
        assert_eq!(demazure_atom_op(1, &p("z1", 2)).unwrap(), p("z2", 2));
        assert_eq!(demazure_atom_op(1, &p("1", 2)).unwrap(), LaurentPolynomial::zero(2));
        assert_eq!(demazure_atom_op(1, &p("z2", 2)).unwrap(), p("-z2", 2));
        assert!(demazure(2, &p("z1", 2)).is_err());
        assert!(demazure(0, &p("z1", 2)).is_err());
    }

    #[test]
    fn demazure_w_examples() {
        let lam = LaurentPolynomial::monomial(vec![2, 1, 0]);
        let w0 = Permutation::longest(3);
        assert_eq!(demazure_w(&w0, &lam, false).unwrap(), schur(&[2, 1, 0], 3).unwrap());
        let w = Permutation::from_word(3, &[1, 2]).unwrap();
        assert_eq!(demazure_w(&w, &lam, true).unwrap(), p("z1*z2*z3 + z2^2*z3", 3));
        let id = Permutation::identity(3);
        assert_eq!(demazure_w(&id, &lam, true).unwrap(), lam);
    }

    #[test]
    fn schur_examples() {
        assert_eq!(schur(&[1, 0], 2).unwrap(), p("z1+z2", 2));
        assert_eq!(schur(&[2, 1, 0], 3).unwrap().mass(), BigInt::from(8));
        assert_eq!(schur(&[0, 0, 0], 3).unwrap(), LaurentPolynomial::one(3));
    }

    fn arb_poly() -> impl proptest::strategy::Strategy<Value = LaurentPolynomial> {
        use proptest::prelude::*;
        proptest::collection::vec((proptest::collection::vec(-3i64..4, 3), -5i64..6), 0..6).prop_map(|ts| {
            LaurentPolynomial::from_terms(3, ts.into_iter().map(|(e, c)| (e, BigInt::from(c)))).unwrap()
        })
    }

    proptest::proptest! {
        /// Checks against the divided-difference form `(z_i - z_{i+1}) ∂_i f = z_i f - z_{i+1} s_i f`.
        #[test]
        fn divided_difference_form(f in arb_poly(), i in 1usize..3) {
            let zi = LaurentPolynomial::variable(3, i);
            let zj = LaurentPolynomial::variable(3, i + 1);
            let si = Permutation::simple(3, i).unwrap();
            let lhs = &(&zi - &zj) * &demazure(i, &f).unwrap();
            let rhs = &(&zi * &f) - &(&zj * &permute_variables(&si, &f).unwrap());
            proptest::prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn hecke_relations(f in arb_poly()) {
            let d = |i, g: &LaurentPolynomial, atom| demazure_word(&[i], g, atom).unwrap();
            for i in 1..3 {
                proptest::prop_assert_eq!(d(i, &d(i, &f, false), false), d(i, &f, false));
                proptest::prop_assert_eq!(d(i, &d(i, &f, true), true), -d(i, &f, true));
            }
            for atom in [false, true] {
                let a = demazure_word(&[1, 2, 1], &f, atom).unwrap();
                let b = demazure_word(&[2, 1, 2], &f, atom).unwrap();
                proptest::prop_assert_eq!(a, b);
            }
        }
    }
}
