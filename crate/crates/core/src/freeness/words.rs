//! Freely reduced words in `A, A^-1, B, B^-1` and the identity-word search.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::GeneratorPair;
use crate::hermitian::Matrix3;
use crate::scalars::{ParseError, Scalar, DEFAULT_TOL};

/// Largest word length the search accepts unless configured otherwise.
pub const DEFAULT_SEARCH_BUDGET: usize = 12;

/// A generator or its inverse. The derived order `A < a < B < b` is the
/// tie-break order of the search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    A,
    AInv,
    B,
    BInv,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::A, Letter::AInv, Letter::B, Letter::BInv];

    pub fn inverse(self) -> Self {
        match self {
            Letter::A => Letter::AInv,
            Letter::AInv => Letter::A,
            Letter::B => Letter::BInv,
            Letter::BInv => Letter::B,
        }
    }

    /// `A`, `B` for generators; `a`, `b` for their inverses.
    pub fn symbol(self) -> char {
        match self {
            Letter::A => 'A',
            Letter::AInv => 'a',
            Letter::B => 'B',
            Letter::BInv => 'b',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("letters {position} and {} cancel", position + 1)]
    NotReduced { position: usize },
}

/// A freely reduced word: no letter is followed by its inverse.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ReducedWord(Vec<Letter>);

impl ReducedWord {
    pub fn new(letters: Vec<Letter>) -> Result<Self, WordError> {
        if let Some(position) = letters.windows(2).position(|w| w[1] == w[0].inverse()) {
            return Err(WordError::NotReduced { position });
        }
        Ok(Self(letters))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        self.0.iter().try_for_each(|l| write!(f, "{}", l.symbol()))
    }
}

/// Accepts `A`, `a`, `B`, `b`, and the spelled-out inverses `A^-1`,
/// `A⁻¹`; whitespace is ignored and `1` (or nothing) is the empty word.
impl FromStr for ReducedWord {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let compact = compact.replace("^-1", "'").replace("⁻¹", "'");
        if compact.is_empty() || compact == "1" {
            return Ok(Self::empty());
        }
        let mut letters = Vec::new();
        let mut chars = compact.chars().peekable();
        while let Some(c) = chars.next() {
            let base = match c {
                'A' => Letter::A,
                'a' => Letter::AInv,
                'B' => Letter::B,
                'b' => Letter::BInv,
                other => {
                    return Err(ParseError::new(
                        "ReducedWord",
                        s,
                        format!("unknown letter {other:?}"),
                    ))
                }
            };
            if chars.peek() == Some(&'\'') {
                chars.next();
                letters.push(base.inverse());
            } else {
                letters.push(base);
            }
        }
        Self::new(letters).map_err(|e| ParseError::new("ReducedWord", s, e.to_string()))
    }
}

/// Left-to-right product of the generator matrices; the empty word is `I`.
pub fn word_evaluate<S: Scalar>(pair: &GeneratorPair<S>, w: &ReducedWord) -> Matrix3<S> {
    w.letters()
        .iter()
        .fold(Matrix3::identity(), |acc, &l| acc.mul(pair.matrix(l)))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("search length must be at least 1")]
    ZeroLength,
    #[error("search length {requested} exceeds the budget of {budget}")]
    BudgetExceeded { requested: usize, budget: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchConfig {
    pub max_len: usize,
    /// Threads used; the first letter partitions the work.
    pub workers: usize,
    pub budget: usize,
    /// Only used on the floating path.
    pub tol: f64,
}

impl SearchConfig {
    pub fn new(max_len: usize) -> Self {
        Self {
            max_len,
            workers: 1,
            budget: DEFAULT_SEARCH_BUDGET,
            tol: DEFAULT_TOL,
        }
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers.max(1);
        self
    }

    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = budget;
        self
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }
}

/// Shortest freely reduced nonempty word of length `<= max_len` that is a
/// projective identity; ties go to the lexicographically first word.
pub fn identity_word_search<S: Scalar>(
    pair: &GeneratorPair<S>,
    max_len: usize,
) -> Result<Option<ReducedWord>, SearchError> {
    identity_word_search_with(pair, &SearchConfig::new(max_len))
}

pub fn identity_word_search_with<S: Scalar>(
    pair: &GeneratorPair<S>,
    config: &SearchConfig,
) -> Result<Option<ReducedWord>, SearchError> {
    if config.max_len == 0 {
        return Err(SearchError::ZeroLength);
    }
    if config.max_len > config.budget {
        return Err(SearchError::BudgetExceeded {
            requested: config.max_len,
            budget: config.budget,
        });
    }
    let per_letter: Vec<Option<Vec<Letter>>> = if config.workers <= 1 {
        Letter::ALL
            .iter()
            .map(|&l| search_subtree(pair, l, config.max_len, config.tol))
            .collect()
    } else {
        let workers = config.workers.min(Letter::ALL.len());
        let mut results = vec![None; Letter::ALL.len()];
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    scope.spawn(move || {
                        (w..Letter::ALL.len())
                            .step_by(workers)
                            .map(|k| {
                                (
                                    k,
                                    search_subtree(
                                        pair,
                                        Letter::ALL[k],
                                        config.max_len,
                                        config.tol,
                                    ),
                                )
                            })
                            .collect::<Vec<_>>()
                    })
                })
                .collect();
            for h in handles {
                for (k, found) in h.join().expect("search worker panicked") {
                    results[k] = found;
                }
            }
        });
        results
    };
    // subtrees are already in letter order, so the first minimum is the
    // lexicographic winner
    let best = per_letter
        .into_iter()
        .flatten()
        .fold(None::<Vec<Letter>>, |best, w| match best {
            Some(b) if b.len() <= w.len() => Some(b),
            _ => Some(w),
        });
    Ok(best.map(ReducedWord))
}

/// Depth-first search over reduced words starting with `first`, visiting
/// words in lexicographic order. Once a witness of length `L` is known only
/// strictly shorter words are explored.
fn search_subtree<S: Scalar>(
    pair: &GeneratorPair<S>,
    first: Letter,
    max_len: usize,
    tol: f64,
) -> Option<Vec<Letter>> {
    struct State<'a, S: Scalar> {
        pair: &'a GeneratorPair<S>,
        word: Vec<Letter>,
        bound: usize,
        best: Option<Vec<Letter>>,
        tol: f64,
    }

    fn visit<S: Scalar>(st: &mut State<'_, S>, m: &Matrix3<S>) {
        if m.is_projective_identity(st.tol) {
            st.best = Some(st.word.clone());
            st.bound = st.word.len() - 1;
            return;
        }
        if st.word.len() >= st.bound {
            return;
        }
        let last = *st.word.last().expect("nonempty");
        for l in Letter::ALL {
            if l == last.inverse() {
                continue;
            }
            let next = m.mul(st.pair.matrix(l));
            st.word.push(l);
            visit(st, &next);
            st.word.pop();
            if st.word.len() >= st.bound {
                return;
            }
        }
    }

    let mut st = State {
        pair,
        word: vec![first],
        bound: max_len,
        best: None,
        tol,
    };
    let m = pair.matrix(first).clone();
    visit(&mut st, &m);
    st.best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freeness::generator_pair;
    use crate::scalars::ExactComplex;

    #[test]
    fn reduced_word_invariant() {
        assert!(ReducedWord::new(vec![Letter::A, Letter::AInv]).is_err());
        assert_eq!(
            "AB".parse::<ReducedWord>().unwrap().letters(),
            &[Letter::A, Letter::B]
        );
        assert!("A A^-1".parse::<ReducedWord>().is_err());
        assert!("Aa".parse::<ReducedWord>().is_err());
        let w: ReducedWord = "A B⁻¹ A^-1".parse().unwrap();
        assert_eq!(w.to_string(), "Aba");
        assert_eq!("1".parse::<ReducedWord>().unwrap(), ReducedWord::empty());
        assert!("AC".parse::<ReducedWord>().is_err());
    }

    #[test]
    fn evaluate_basics() {
        let pair = generator_pair(ExactComplex::from_ratios((-3, 4), (0, 1)));
        assert_eq!(
            word_evaluate(&pair, &ReducedWord::empty()),
            Matrix3::identity()
        );
        let ab: ReducedWord = "AB".parse().unwrap();
        assert_eq!(word_evaluate(&pair, &ab), pair.a.mul(&pair.b));
        let inv: ReducedWord = "ab".parse().unwrap();
        assert_eq!(
            word_evaluate(&pair, &inv).mul(&word_evaluate(&pair, &"BA".parse().unwrap())),
            Matrix3::identity()
        );
    }

    #[test]
    fn search_limits() {
        let pair = generator_pair(ExactComplex::from(-1));
        assert_eq!(identity_word_search(&pair, 0), Err(SearchError::ZeroLength));
        assert_eq!(
            identity_word_search(&pair, 13),
            Err(SearchError::BudgetExceeded {
                requested: 13,
                budget: 12
            })
        );
    }

    #[test]
    fn trivial_generator_has_length_one_witness() {
        // B(0) = I
        let pair = generator_pair(ExactComplex::zero());
        let w = identity_word_search(&pair, 3).unwrap().unwrap();
        assert_eq!(w.to_string(), "B");
    }
}
