//! Words in a free monoid over indexed generators.
//!
//! Words are run-length encoded as `(generator, exponent)` pairs with
//! exponents at least 1 and adjacent runs over distinct generators, so the
//! representation is canonical.  The total order used everywhere (term maps,
//! printing, sampling) is graded: first by total letter length, then
//! lexicographically by generator index.

use std::cmp::Ordering;

/// Index of a generator inside its presentation.
pub type GenId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    runs: Vec<(GenId, u32)>,
}

impl Word {
    /// The empty word (the monoid unit).
    pub fn one() -> Word {
        Word { runs: Vec::new() }
    }

    pub fn gen(g: GenId) -> Word {
        Word { runs: vec![(g, 1)] }
    }

    /// `g^k`; `k = 0` gives the empty word.
    pub fn power(g: GenId, k: u32) -> Word {
        if k == 0 {
            Word::one()
        } else {
            Word { runs: vec![(g, k)] }
        }
    }

    /// Build from run-length pairs, merging adjacent runs and dropping
    /// zero exponents.
    pub fn from_runs<I: IntoIterator<Item = (GenId, u32)>>(runs: I) -> Word {
        let mut out: Vec<(GenId, u32)> = Vec::new();
        for (g, e) in runs {
            if e == 0 {
                continue;
            }
            match out.last_mut() {
                Some((g0, e0)) if *g0 == g => *e0 += e,
                _ => out.push((g, e)),
            }
        }
        Word { runs: out }
    }

    pub fn from_letters<I: IntoIterator<Item = GenId>>(letters: I) -> Word {
        Word::from_runs(letters.into_iter().map(|g| (g, 1)))
    }

    pub fn runs(&self) -> &[(GenId, u32)] {
        &self.runs
    }

    pub fn is_one(&self) -> bool {
        self.runs.is_empty()
    }

    /// Total letter count.
    pub fn len(&self) -> usize {
        self.runs.iter().map(|&(_, e)| e as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    /// Expanded letter stream, left to right.
    pub fn letters(&self) -> impl Iterator<Item = GenId> + '_ {
        self.runs
            .iter()
            .flat_map(|&(g, e)| std::iter::repeat_n(g, e as usize))
    }

    pub fn letter_vec(&self) -> Vec<GenId> {
        self.letters().collect()
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word::from_runs(self.runs.iter().chain(other.runs.iter()).copied())
    }

    /// The word read backwards.
    pub fn reverse(&self) -> Word {
        Word {
            runs: self.runs.iter().rev().copied().collect(),
        }
    }

    /// Largest generator index mentioned, if any.
    pub fn max_gen(&self) -> Option<GenId> {
        self.runs.iter().map(|&(g, _)| g).max()
    }

    /// Does `pattern` occur at letter position `pos`?
    pub fn matches_at(&self, pattern: &Word, pos: usize) -> bool {
        let letters = self.letter_vec();
        let pat = pattern.letter_vec();
        pos + pat.len() <= letters.len() && letters[pos..pos + pat.len()] == pat[..]
    }

    /// Replace `len` letters starting at `pos` with `replacement`.
    pub fn splice(&self, pos: usize, len: usize, replacement: &Word) -> Word {
        let letters = self.letter_vec();
        debug_assert!(pos + len <= letters.len());
        Word::from_letters(
            letters[..pos]
                .iter()
                .copied()
                .chain(replacement.letters())
                .chain(letters[pos + len..].iter().copied()),
        )
    }

    /// First `k` letters.
    pub fn prefix(&self, k: usize) -> Word {
        Word::from_letters(self.letters().take(k))
    }

    /// Last `k` letters.
    pub fn suffix(&self, k: usize) -> Word {
        let n = self.len();
        Word::from_letters(self.letters().skip(n - k))
    }

    /// Render with the given generator names (`a^2*b` style).
    pub fn format(&self, names: &[String]) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        self.runs
            .iter()
            .map(|&(g, e)| {
                let name = names.get(g).map(String::as_str).unwrap_or("?");
                if e == 1 {
                    name.to_string()
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.letters().cmp(other.letters()))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn runs_merge_on_concat() {
        let w = Word::power(0, 2)
            .concat(&Word::gen(0))
            .concat(&Word::gen(1));
        assert_eq!(w.runs(), &[(0, 3), (1, 1)]);
        assert_eq!(w.len(), 4);
    }

    #[test]
    fn order_is_graded_then_lex() {
        let ba = Word::from_letters([1, 0]);
        let aab = Word::from_letters([0, 0, 1]);
        let ab = Word::from_letters([0, 1]);
        assert!(ba < aab, "shorter words come first");
        assert!(ab < ba, "equal length falls back to lex");
        assert!(Word::one() < ab);
    }

    #[test]
    fn splice_replaces_letter_range() {
        // a b a, replace the middle letter with the empty word
        let w = Word::from_letters([0, 1, 0]);
        let spliced = w.splice(1, 1, &Word::one());
        assert_eq!(spliced.runs(), &[(0, 2)]);
    }

    #[test]
    fn reverse_reverses_runs() {
        let w = Word::from_runs([(0, 2), (1, 1)]);
        assert_eq!(w.reverse().runs(), &[(1, 1), (0, 2)]);
    }
}
