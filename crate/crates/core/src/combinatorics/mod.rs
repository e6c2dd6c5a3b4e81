//! Permutations, words and the 0-Hecke monoid, compositions, flags and key
//! tableaux.

mod composition;
mod flag;
mod key;
mod perm;
mod word;

pub use composition::{bruhat_le_orbit, Composition};
pub use flag::FlagVector;
pub use key::KeyTableau;
pub use perm::{perm_basics, Permutation};
pub use word::Word;

pub(crate) fn parse_int_list(s: &str) -> crate::Result<Vec<u32>> {
    let s = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
    if s.is_empty() {
        return Ok(Vec::new());
    }
    if s.contains(',') {
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|e| crate::Error::Parse(format!("{t:?}: {e}")))
            })
            .collect()
    } else {
        s.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| {
                c.to_digit(10)
                    .ok_or_else(|| crate::Error::Parse(format!("unexpected character {c:?}")))
            })
            .collect()
    }
}
