//! Permutations of `{1..n}` in one-line notation and words in the simple
//! reflections `s_1..s_{n-1}`.
//!
//! Composition convention: a word `[a_1, .., a_k]` denotes the product
//! `s_{a_1} s_{a_2} .. s_{a_k}`, read as function composition, so the
//! rightmost letter acts first. A permutation acts on basis vectors by
//! `e_i -> e_{w(i)}`; `s_i` swaps `i` and `i + 1`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::ops::Deref;
use core::str::FromStr;

use crate::error::{Error, Result};

/// A permutation in one-line notation: position `i` (1-indexed) holds `w(i)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    image: Vec<usize>,
}

/// A word in the simple reflections; letters are indices `1..n-1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<usize>);

impl Deref for Word {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

impl From<Vec<usize>> for Word {
    fn from(letters: Vec<usize>) -> Self {
        Word(letters)
    }
}

impl Permutation {
    /// Builds a permutation from its 1-indexed one-line image.
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty".to_string()));
        }
        let mut seen = alloc::vec![false; n + 1];
        for &v in &image {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format_image(&image)));
            }
            seen[v] = true;
        }
        Ok(Permutation { image })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { image: (1..=n).collect() }
    }

    /// The longest element `w0(i) = n - i + 1`.
    pub fn longest(n: usize) -> Self {
        Permutation { image: (1..=n).rev().collect() }
    }

    /// The simple transposition `s_i` in `S_n`.
    pub fn simple(n: usize, i: usize) -> Result<Self> {
        check_letter(n, i)?;
        let mut w = Self::identity(n);
        w.image.swap(i - 1, i);
        Ok(w)
    }

    /// Product of a word, `s_{a_1} .. s_{a_k}`; the empty word is the identity.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Self> {
        let mut w = Self::identity(n);
        for &a in word {
            check_letter(n, a)?;
            // w * s_a swaps the entries at positions a, a+1.
            w.image.swap(a - 1, a);
        }
        Ok(w)
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// `w(i)` for 1-indexed `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.image[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.image;
        let mut inv = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    pub fn inverse(&self) -> Self {
        let mut inv = alloc::vec![0; self.n()];
        for (k, &v) in self.image.iter().enumerate() {
            inv[v - 1] = k + 1;
        }
        Permutation { image: inv }
    }

    /// The composition `self ∘ other`, i.e. `other` acts first.
    pub fn multiply(&self, other: &Permutation) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::RankMismatch { expected: self.n(), got: other.n() });
        }
        Ok(Permutation {
            image: other.image.iter().map(|&v| self.image[v - 1]).collect(),
        })
    }

    /// `s_i w`: swaps the values `i` and `i + 1`.
    pub fn left_mul_simple(&self, i: usize) -> Result<Self> {
        check_letter(self.n(), i)?;
        let image = self
            .image
            .iter()
            .map(|&v| if v == i { i + 1 } else if v == i + 1 { i } else { v })
            .collect();
        Ok(Permutation { image })
    }

    /// `w s_i`: swaps the positions `i` and `i + 1`.
    pub fn right_mul_simple(&self, i: usize) -> Result<Self> {
        check_letter(self.n(), i)?;
        let mut w = self.clone();
        w.image.swap(i - 1, i);
        Ok(w)
    }

    /// `l(s_i w) < l(w)`, equivalently `w^{-1}(i) > w^{-1}(i + 1)`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let pos = |v: usize| self.image.iter().position(|&x| x == v).unwrap_or(0);
        i >= 1 && i < self.n() && pos(i) > pos(i + 1)
    }

    /// `l(w s_i) < l(w)`, equivalently `w(i) > w(i + 1)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        i >= 1 && i < self.n() && self.image[i - 1] > self.image[i]
    }

    /// `w0 w w0^{-1}`.
    pub fn w0_conjugate(&self) -> Self {
        let n = self.n();
        let image = (1..=n).map(|i| n + 1 - self.image[n - i]).collect();
        Permutation { image }
    }

    /// A reduced word, built by peeling off the leftmost right descent.
    pub fn reduced_word(&self) -> Word {
        let mut w = self.clone();
        let mut rev = Vec::with_capacity(self.length());
        while let Some(i) = (1..w.n()).find(|&i| w.has_right_descent(i)) {
            w.image.swap(i - 1, i);
            rev.push(i);
        }
        rev.reverse();
        Word(rev)
    }

    /// Every reduced word of `self`, sorted lexicographically.
    pub fn reduced_words(&self) -> Vec<Word> {
        let mut out = Vec::new();
        let mut suffix = Vec::new();
        collect_reduced_words(self, &mut suffix, &mut out);
        out.sort();
        out
    }

    /// All of `S_n` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation { image: cur.clone() });
            if !next_permutation(&mut cur) {
                break;
            }
        }
        out
    }
}

fn collect_reduced_words(w: &Permutation, suffix: &mut Vec<usize>, out: &mut Vec<Word>) {
    if w.is_identity() {
        out.push(Word(suffix.iter().rev().copied().collect()));
        return;
    }
    for i in 1..w.n() {
        if w.has_right_descent(i) {
            let mut shorter = w.clone();
            shorter.image.swap(i - 1, i);
            suffix.push(i);
            collect_reduced_words(&shorter, suffix, out);
            suffix.pop();
        }
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn check_letter(n: usize, a: usize) -> Result<()> {
    if a == 0 || a >= n {
        Err(Error::LetterOutOfRange { letter: a, n })
    } else {
        Ok(())
    }
}

fn format_image(image: &[usize]) -> String {
    let parts: Vec<String> = image.iter().map(|v| v.to_string()).collect();
    parts.join(",")
}

/// `true` iff the word's length equals the length of its product.
pub fn is_reduced(n: usize, word: &[usize]) -> Result<bool> {
    Ok(Permutation::from_word(n, word)?.length() == word.len())
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_image(&self.image))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses comma-separated one-line notation, e.g. `3,2,1`.
    fn from_str(s: &str) -> Result<Self> {
        let image = parse_list(s).map_err(|_| Error::InvalidPermutation(s.to_string()))?;
        Permutation::new(image)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_image(&self.0))
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = parse_list(s).map_err(|_| Error::InvalidPermutation(s.to_string()))?;
        Ok(Word(letters))
    }
}

fn parse_list(s: &str) -> core::result::Result<Vec<usize>, core::num::ParseIntError> {
    let s = s.trim().trim_start_matches('[').trim_end_matches(']');
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|p| p.trim().parse::<usize>()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    fn brute_inversions(w: &Permutation) -> usize {
        let mut c = 0;
        for i in 1..=w.n() {
            for j in i + 1..=w.n() {
                if w.apply(i) > w.apply(j) {
                    c += 1;
                }
            }
        }
        c
    }

    #[test]
    fn lengths() {
        assert_eq!(Permutation::identity(4).length(), 0);
        assert_eq!(p(&[3, 2, 1]).length(), 3);
        assert_eq!(p(&[2, 1, 4, 3]).length(), brute_inversions(&p(&[2, 1, 4, 3])));
        assert_eq!(p(&[2, 1, 4, 3]).length(), 2);
    }

    #[test]
    fn words() {
        assert!(Permutation::from_word(3, &[]).unwrap().is_identity());
        assert_eq!(Permutation::from_word(3, &[1, 2, 1]).unwrap(), p(&[3, 2, 1]));
        assert!(Permutation::from_word(3, &[1, 1]).unwrap().is_identity());
        assert!(matches!(
            Permutation::from_word(3, &[3]),
            Err(Error::LetterOutOfRange { letter: 3, n: 3 })
        ));
        // s_2 s_1 sends 1 -> 3, so its one-line form is [3,1,2].
        assert_eq!(Permutation::from_word(3, &[2, 1]).unwrap(), p(&[3, 1, 2]));
    }

    #[test]
    fn reducedness() {
        assert!(is_reduced(3, &[1, 2, 1]).unwrap());
        assert!(!is_reduced(3, &[1, 1]).unwrap());
        assert!(is_reduced(3, &[]).unwrap());
    }

    #[test]
    fn conjugation_by_w0() {
        assert!(Permutation::identity(3).w0_conjugate().is_identity());
        assert_eq!(Permutation::simple(3, 1).unwrap().w0_conjugate(), Permutation::simple(3, 2).unwrap());
        assert_eq!(p(&[2, 3, 1]).w0_conjugate(), p(&[3, 1, 2]));
        let w0 = Permutation::longest(4);
        for w in Permutation::all(4) {
            let direct = w0.multiply(&w).unwrap().multiply(&w0.inverse()).unwrap();
            assert_eq!(w.w0_conjugate(), direct);
            assert_eq!(w.w0_conjugate().length(), w.length());
        }
    }

    #[test]
    fn descents_match_lengths() {
        for w in Permutation::all(4) {
            for i in 1..4 {
                let sw = w.left_mul_simple(i).unwrap();
                assert_eq!(w.has_left_descent(i), sw.length() < w.length());
                assert_eq!(sw, Permutation::simple(4, i).unwrap().multiply(&w).unwrap());
                let ws = w.right_mul_simple(i).unwrap();
                assert_eq!(w.has_right_descent(i), ws.length() < w.length());
            }
        }
    }

    #[test]
    fn inverse_and_length() {
        for w in Permutation::all(5) {
            assert_eq!(w.length(), w.inverse().length());
            assert!(w.multiply(&w.inverse()).unwrap().is_identity());
        }
    }

    #[test]
    fn involution_and_braid() {
        for n in 2..=5 {
            for i in 1..n {
                assert!(Permutation::from_word(n, &[i, i]).unwrap().is_identity());
                if i + 1 < n {
                    assert_eq!(
                        Permutation::from_word(n, &[i, i + 1, i]).unwrap(),
                        Permutation::from_word(n, &[i + 1, i, i + 1]).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn reduced_words_are_reduced_and_complete() {
        for w in Permutation::all(4) {
            let rw = w.reduced_word();
            assert_eq!(Permutation::from_word(4, &rw).unwrap(), w);
            assert_eq!(rw.len(), w.length());
            for word in w.reduced_words() {
                assert_eq!(Permutation::from_word(4, &word).unwrap(), w);
                assert!(is_reduced(4, &word).unwrap());
            }
        }
        assert_eq!(Permutation::longest(3).reduced_words(), vec![Word(vec![1, 2, 1]), Word(vec![2, 1, 2])]);
    }

    /// A word is reduced iff no shorter word has the same product.
    #[test]
    fn reduced_iff_no_shorter_word() {
        let n = 3;
        let mut shortest: alloc::collections::BTreeMap<Permutation, usize> = Default::default();
        let mut words: Vec<Vec<usize>> = vec![vec![]];
        for len in 0..=5 {
            for word in &words {
                let w = Permutation::from_word(n, word).unwrap();
                shortest.entry(w).or_insert(len);
            }
            for word in &words {
                let w = Permutation::from_word(n, word).unwrap();
                assert_eq!(is_reduced(n, word).unwrap(), shortest[&w] == len);
            }
            words = words
                .iter()
                .flat_map(|w| (1..n).map(move |a| {
                    let mut v = w.clone();
                    v.push(a);
                    v
                }))
                .collect();
        }
    }

    #[test]
    fn parse_and_display() {
        let w: Permutation = "3, 1, 2".parse().unwrap();
        assert_eq!(w, p(&[3, 1, 2]));
        assert_eq!(w.to_string(), "3,1,2");
        assert!("1,1,2".parse::<Permutation>().is_err());
        assert!("1,x".parse::<Permutation>().is_err());
        let word: Word = "1,2,1".parse().unwrap();
        assert_eq!(word.0, vec![1, 2, 1]);
    }

    #[test]
    fn enumerates_symmetric_group() {
        assert_eq!(Permutation::all(4).len(), 24);
        assert_eq!(Permutation::all(1).len(), 1);
    }
}
