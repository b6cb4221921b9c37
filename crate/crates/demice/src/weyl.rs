//! The symmetric group `S_r` as a Weyl group.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Sequence of simple reflection indices `s_{i_1}, .., s_{i_k}`.
pub type ReflectionSequence = Vec<usize>;

/// A permutation in one-line notation, images of `1..=r`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let r = images.len();
        let mut seen = vec![false; r + 1];
        for &x in &images {
            if x == 0 || x > r || seen[x] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection of 1..={r}")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(r: usize) -> Self {
        Permutation { images: (1..=r).collect() }
    }

    pub fn longest(r: usize) -> Self {
        Permutation { images: (1..=r).rev().collect() }
    }

    pub fn simple(r: usize, i: usize) -> Result<Self> {
        check_index(r, i)?;
        let mut p = Self::identity(r);
        p.images.swap(i - 1, i);
        Ok(p)
    }

    /// Product `s_{i_1} ⋯ s_{i_k}`; need not be reduced.
    pub fn from_word(r: usize, word: &[usize]) -> Result<Self> {
        let mut p = Self::identity(r);
        for &i in word {
            check_index(r, i)?;
            p.images.swap(i - 1, i);
        }
        Ok(p)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `w(i)`, 1-based.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &x)| x == k + 1)
    }

    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(Permutation { images: other.images.iter().map(|&j| self.images[j - 1]).collect() })
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.degree()];
        for (k, &x) in self.images.iter().enumerate() {
            inv[x - 1] = k + 1;
        }
        Permutation { images: inv }
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let n = self.images.len();
        let mut l = 0;
        for a in 0..n {
            for b in a + 1..n {
                if self.images[a] > self.images[b] {
                    l += 1;
                }
            }
        }
        l
    }

    /// `ℓ(w s_i) < ℓ(w)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.images[i - 1] > self.images[i]
    }

    /// `ℓ(s_i w) < ℓ(w)`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let a = self.images.iter().position(|&x| x == i).unwrap();
        let b = self.images.iter().position(|&x| x == i + 1).unwrap();
        a > b
    }

    /// `w s_i`.
    pub fn mul_right(&self, i: usize) -> Self {
        let mut p = self.clone();
        p.images.swap(i - 1, i);
        p
    }

    /// `s_i w`.
    pub fn mul_left(&self, i: usize) -> Self {
        let images = self
            .images
            .iter()
            .map(|&x| if x == i { i + 1 } else if x == i + 1 { i } else { x })
            .collect();
        Permutation { images }
    }

    /// Lexicographically smallest reduced word.
    pub fn reduced_word(&self) -> ReflectionSequence {
        let mut w = self.clone();
        let mut word = Vec::new();
        while let Some(i) = (1..w.degree()).find(|&i| w.has_left_descent(i)) {
            word.push(i);
            w = w.mul_left(i);
        }
        word
    }

    /// `(w mu)_i = mu_{w^{-1}(i)}`.
    pub fn act<T: Clone>(&self, mu: &[T]) -> Vec<T> {
        let mut out = mu.to_vec();
        for (k, x) in mu.iter().enumerate() {
            out[self.images[k] - 1] = x.clone();
        }
        out
    }

    /// All of `S_r`, lexicographic in one-line notation.
    pub fn all(r: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=r).collect();
        loop {
            out.push(Permutation { images: cur.clone() });
            // next lexicographic permutation
            let Some(k) = (0..r.saturating_sub(1)).rev().find(|&k| cur[k] < cur[k + 1]) else {
                break;
            };
            let l = (k + 1..r).rev().find(|&l| cur[l] > cur[k]).unwrap();
            cur.swap(k, l);
            cur[k + 1..].reverse();
        }
        out
    }

    /// Parses `[3,1,2]` or `s1*s2` (`e`/`id` for the identity).
    pub fn parse(s: &str, r: usize) -> Result<Self> {
        let t = s.trim();
        if t.starts_with('[') {
            let inner = t.trim_start_matches('[').trim_end_matches(']');
            let images = inner
                .split(',')
                .filter(|x| !x.trim().is_empty())
                .map(|x| x.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad image {x:?}"))))
                .collect::<Result<Vec<_>>>()?;
            let p = Self::new(images)?;
            if p.degree() != r {
                return Err(Error::DegreeMismatch(p.degree(), r));
            }
            return Ok(p);
        }
        if t.is_empty() || t == "e" || t == "id" || t == "1" {
            return Ok(Self::identity(r));
        }
        let word = t
            .split('*')
            .map(|g| {
                g.trim()
                    .strip_prefix('s')
                    .and_then(|d| d.parse::<usize>().ok())
                    .ok_or_else(|| Error::Parse(format!("bad generator {g:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_word(r, &word)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, x) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

/// Word form such as `s1*s2`, or `e` for the identity.
pub fn word_string(w: &Permutation) -> String {
    let word = w.reduced_word();
    if word.is_empty() {
        return "e".into();
    }
    word.iter().map(|i| format!("s{i}")).collect::<Vec<_>>().join("*")
}

#[derive(Serialize, Deserialize)]
struct PermJson {
    one_line: Vec<usize>,
    word: Vec<usize>,
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PermJson { one_line: self.images.clone(), word: self.reduced_word() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = PermJson::deserialize(d)?;
        Permutation::new(j.one_line).map_err(serde::de::Error::custom)
    }
}

fn check_index(r: usize, i: usize) -> Result<()> {
    if i == 0 || i >= r {
        return Err(Error::IndexOutOfRange { index: i, max: r.saturating_sub(1) });
    }
    Ok(())
}

pub fn compose(u: &Permutation, v: &Permutation) -> Result<Permutation> {
    u.compose(v)
}

pub fn inverse(u: &Permutation) -> Permutation {
    u.inverse()
}

pub fn longest_element(r: usize) -> Permutation {
    Permutation::longest(r)
}

pub fn length(w: &Permutation) -> usize {
    w.length()
}

pub fn reduced_word(w: &Permutation) -> ReflectionSequence {
    w.reduced_word()
}

/// Strong Bruhat order by comparing sorted prefixes of one-line notation.
pub fn bruhat_leq(y: &Permutation, w: &Permutation) -> Result<bool> {
    if y.degree() != w.degree() {
        return Err(Error::DegreeMismatch(y.degree(), w.degree()));
    }
    let r = y.degree();
    let mut a = [0usize; 32];
    let mut b = [0usize; 32];
    let (a, b): (&mut [usize], &mut [usize]) = if r <= 32 {
        (&mut a[..r], &mut b[..r])
    } else {
        return Ok(bruhat_leq_slow(y, w));
    };
    for k in 0..r {
        a[k] = y.images[k];
        b[k] = w.images[k];
        a[..=k].sort_unstable();
        b[..=k].sort_unstable();
        if a[..=k].iter().zip(&b[..=k]).any(|(x, z)| x > z) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn bruhat_leq_slow(y: &Permutation, w: &Permutation) -> bool {
    let r = y.degree();
    (1..=r).all(|k| {
        let mut a = y.images[..k].to_vec();
        let mut b = w.images[..k].to_vec();
        a.sort_unstable();
        b.sort_unstable();
        a.iter().zip(&b).all(|(x, z)| x <= z)
    })
}

/// Basis index of the 0-Hecke product `S_{i_1} ⋯ S_{i_k}`.
pub fn demazure_product(r: usize, seq: &[usize]) -> Result<Permutation> {
    let mut w = Permutation::identity(r);
    for &i in seq {
        check_index(r, i)?;
        if !w.has_right_descent(i) {
            w = w.mul_right(i);
        }
    }
    Ok(w)
}

/// Nondescending product: from the right, `π <- s_i π` whenever that is longer.
pub fn pi_nd(r: usize, seq: &[usize]) -> Result<Permutation> {
    let mut p = Permutation::identity(r);
    for &i in seq.iter().rev() {
        check_index(r, i)?;
        if !p.has_left_descent(i) {
            p = p.mul_left(i);
        }
    }
    Ok(p)
}

/// Generators `s_i` of the stabilizer of `lambda`.
pub fn stabilizer_generators(lambda: &[i64]) -> Vec<usize> {
    (1..lambda.len()).filter(|&i| lambda[i - 1] == lambda[i]).collect()
}

/// The coset `w W_λ`.
pub fn coset(w: &Permutation, lambda: &[i64]) -> Result<BTreeSet<Permutation>> {
    if w.degree() != lambda.len() {
        return Err(Error::DegreeMismatch(w.degree(), lambda.len()));
    }
    let gens = stabilizer_generators(lambda);
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::from([w.clone()]);
    seen.insert(w.clone());
    while let Some(x) = queue.pop_front() {
        for &i in &gens {
            let y = x.mul_right(i);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    Ok(seen)
}

/// Shortest and longest elements of `w W_λ`.
pub fn coset_extremes(w: &Permutation, lambda: &[i64]) -> Result<(Permutation, Permutation)> {
    let c = coset(w, lambda)?;
    let short = c.iter().min_by_key(|x| x.length()).unwrap().clone();
    let long = c.iter().max_by_key(|x| x.length()).unwrap().clone();
    Ok((short, long))
}

/// All `y <= w`, sorted.
pub fn bruhat_interval(w: &Permutation) -> Vec<Permutation> {
    Permutation::all(w.degree())
        .into_iter()
        .filter(|y| bruhat_leq(y, w).unwrap())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(r: usize, word: &[usize]) -> Permutation {
        Permutation::from_word(r, word).unwrap()
    }

    /// Subword oracle: all products of subwords of a reduced word.
    fn subword_products(x: &Permutation) -> BTreeSet<Permutation> {
        let word = x.reduced_word();
        let mut out = BTreeSet::new();
        for mask in 0u32..(1 << word.len()) {
            let sub: Vec<usize> = (0..word.len()).filter(|k| mask >> k & 1 == 1).map(|k| word[k]).collect();
            out.insert(Permutation::from_word(x.degree(), &sub).unwrap());
        }
        out
    }

    #[test]
    fn compose_examples() {
        let w0 = Permutation::longest(4);
        assert_eq!(w0.compose(&w(4, &[2, 1])).unwrap(), w(4, &[1, 2, 3, 2]));
        assert_eq!(w0.compose(&w(4, &[2, 3])).unwrap(), w(4, &[3, 1, 2, 1]));
        let u = Permutation::new(vec![3, 1, 4, 2]).unwrap();
        assert!(u.compose(&u.inverse()).unwrap().is_identity());
        assert!(u.compose(&Permutation::identity(3)).is_err());
        assert_eq!(Permutation::longest(4).images(), &[4, 3, 2, 1]);
    }

    #[test]
    fn length_and_words() {
        assert_eq!(Permutation::identity(4).length(), 0);
        for r in 1..6 {
            assert_eq!(Permutation::longest(r).length(), r * (r - 1) / 2);
        }
        assert_eq!(w(4, &[1, 2, 3, 2]).length(), 4);
        assert!(Permutation::identity(3).reduced_word().is_empty());
        assert_eq!(w(3, &[1]).reduced_word(), vec![1]);
        assert_eq!(Permutation::longest(3).reduced_word(), vec![1, 2, 1]);
        assert!(Permutation::new(vec![1, 1, 2]).is_err());
    }

    #[test]
    fn bruhat_examples() {
        let w3 = Permutation::all(3);
        for x in &w3 {
            assert!(bruhat_leq(&Permutation::identity(3), x).unwrap());
            if *x != Permutation::longest(3) {
                assert!(!bruhat_leq(&Permutation::longest(3), x).unwrap());
            }
        }
        assert!(bruhat_leq(&w(3, &[1]), &w(3, &[2, 1, 2])).unwrap());
        assert!(bruhat_leq(&w(3, &[1]), &w(4, &[1])).is_err());
    }

    #[test]
    fn bruhat_matches_subword_oracle() {
        for r in 1..=5 {
            let all = Permutation::all(r);
            for x in &all {
                let below = subword_products(x);
                for y in &all {
                    assert_eq!(bruhat_leq(y, x).unwrap(), below.contains(y), "{y} <= {x}");
                }
            }
        }
    }

    #[test]
    fn products() {
        assert_eq!(demazure_product(2, &[1, 1]).unwrap(), w(2, &[1]));
        assert_eq!(demazure_product(3, &[1, 2, 1]).unwrap(), Permutation::longest(3));
        assert!(demazure_product(3, &[]).unwrap().is_identity());
        assert_eq!(pi_nd(2, &[1, 1]).unwrap(), w(2, &[1]));
        assert_eq!(pi_nd(4, &[2, 1]).unwrap(), w(4, &[2, 1]));
        assert_eq!(pi_nd(4, &[2, 3]).unwrap(), w(4, &[2, 3]));
        assert!(pi_nd(3, &[3]).is_err());
    }

    #[test]
    fn cosets() {
        let x = w(3, &[1, 2]);
        assert_eq!(coset_extremes(&x, &[3, 2, 1]).unwrap(), (x.clone(), x));
        assert_eq!(
            coset_extremes(&Permutation::identity(2), &[1, 1]).unwrap(),
            (Permutation::identity(2), w(2, &[1]))
        );
        assert_eq!(coset_extremes(&w(3, &[1]), &[2, 1, 1]).unwrap(), (w(3, &[1]), w(3, &[1, 2])));
    }

    #[test]
    fn intervals() {
        assert_eq!(bruhat_interval(&Permutation::identity(3)), vec![Permutation::identity(3)]);
        assert_eq!(bruhat_interval(&w(3, &[1])).len(), 2);
        assert_eq!(bruhat_interval(&Permutation::longest(3)).len(), 6);
    }

    #[test]
    fn partial_order_and_property_z() {
        for r in 1..=4 {
            let all = Permutation::all(r);
            let leq = |a: &Permutation, b: &Permutation| bruhat_leq(a, b).unwrap();
            for x in &all {
                assert!(leq(x, x));
                for y in &all {
                    if leq(x, y) && leq(y, x) {
                        assert_eq!(x, y);
                    }
                    if leq(y, x) {
                        assert!(y.length() <= x.length());
                    }
                    for z in &all {
                        if leq(x, y) && leq(y, z) {
                            assert!(leq(x, z));
                        }
                    }
                    for i in 1..r {
                        let (sx, sy) = (x.mul_left(i), y.mul_left(i));
                        if sx.length() > x.length() && sy.length() > y.length() {
                            let a = leq(y, x);
                            assert_eq!(a, leq(y, &sx));
                            assert_eq!(a, leq(&sy, &sx));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn mobius_identity() {
        for r in 1..=4 {
            let all = Permutation::all(r);
            for wv in &all {
                for x in &all {
                    let s: i64 = bruhat_interval(wv)
                        .iter()
                        .map(|y| {
                            let sign = if (wv.length() - y.length()) % 2 == 0 { 1 } else { -1 };
                            if bruhat_leq(x, y).unwrap() { sign } else { 0 }
                        })
                        .sum();
                    assert_eq!(s, i64::from(x == wv));
                }
            }
        }
    }

    #[test]
    fn reduced_words_are_fixed_by_hecke_product() {
        for r in 1..=5 {
            for x in Permutation::all(r) {
                let word = x.reduced_word();
                assert_eq!(word.len(), x.length());
                assert_eq!(Permutation::from_word(r, &word).unwrap(), x);
                assert_eq!(demazure_product(r, &word).unwrap(), x);
            }
        }
    }

    #[test]
    fn act_matches_composition() {
        let mu = [5, 3, 1, 0];
        let s1 = w(4, &[1]);
        assert_eq!(s1.act(&mu), vec![3, 5, 1, 0]);
        let x = w(4, &[3, 1, 2, 1]);
        assert_eq!(x.act(&mu), vec![1, 3, 0, 5]);
    }

    #[test]
    fn parse_forms() {
        assert_eq!(Permutation::parse("[3,1,2]", 3).unwrap().images(), &[3, 1, 2]);
        assert_eq!(Permutation::parse("s1*s2", 3).unwrap(), w(3, &[1, 2]));
        assert!(Permutation::parse("s3", 3).is_err());
        assert!(Permutation::parse("[1,2]", 3).is_err());
        assert_eq!(word_string(&w(3, &[2, 1])), "s2*s1");
    }

    fn seq_strategy() -> impl Strategy<Value = (usize, Vec<usize>)> {
        (2usize..=5).prop_flat_map(|r| (Just(r), proptest::collection::vec(1..r, 0..16)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn pi_nd_equals_demazure_product((r, seq) in seq_strategy()) {
            prop_assert_eq!(pi_nd(r, &seq).unwrap(), demazure_product(r, &seq).unwrap());
        }

        #[test]
        fn act_is_a_group_action((r, a) in seq_strategy(), b in proptest::collection::vec(1usize..2, 0..4)) {
            let u = Permutation::from_word(r, &a).unwrap();
            let v = Permutation::from_word(r, &b).unwrap();
            let mu: Vec<i64> = (0..r as i64).map(|k| 10 * k + 1).collect();
            prop_assert_eq!(v.act(&u.act(&mu)), v.compose(&u).unwrap().act(&mu));
        }
    }
}
