//! The Gray map to Z4 vectors of doubled length and Lee weights.
//!
//! A word over `R + uR` of length `N` is handled in the `[a | b]` slot
//! layout of `canon`: coordinates `a_i + u b_i` with the a-parts in slots
//! `0..N` and the u-parts in slots `N..2N`. The Gray image is
//! `(b_0..b_(N-1), a_0+b_0 .. a_(N-1)+b_(N-1))` and the Lee weight of a
//! coordinate is `lee(b) + lee(a+b)` with the usual Z4 Lee weights
//! `(0,1,2,1)`.

use crate::canon::CanonModule;
use crate::error::{Error, Result};
use num_traits::ToPrimitive;
use std::collections::BTreeMap;

/// Lee weight on Z/4: 0, 1, 2, 1.
pub fn lee_weight_z4(c: u8) -> u64 {
    match c & 3 {
        0 => 0,
        2 => 2,
        _ => 1,
    }
}

/// Lee weight of one coordinate `a + ub`.
pub fn lee_weight_pair(a: u8, b: u8) -> u64 {
    lee_weight_z4(b) + lee_weight_z4((a + b) & 3)
}

/// Gray image of a word in `[a | b]` layout: `(b, a + b)` over Z/4.
pub fn gray_map(word: &[u8]) -> Vec<u8> {
    assert!(
        word.len().is_multiple_of(2),
        "words over R + uR have even rank"
    );
    let n = word.len() / 2;
    let mut out = vec![0u8; 2 * n];
    for i in 0..n {
        out[i] = word[n + i];
        out[n + i] = (word[i] + word[n + i]) & 3;
    }
    out
}

/// Lee weight of a word in `[a | b]` layout.
pub fn lee_weight_word(word: &[u8]) -> u64 {
    let n = word.len() / 2;
    (0..n).map(|i| lee_weight_pair(word[i], word[n + i])).sum()
}

/// Lee weight of a plain Z/4 vector.
pub fn lee_weight_z4_vec(v: &[u8]) -> u64 {
    v.iter().map(|&c| lee_weight_z4(c)).sum()
}

/// Exact Lee weight distribution of a code, walked from its canonical
/// rows. Guarded to at most 2^20 codewords.
pub fn lee_weight_enumerator(code: &CanonModule) -> Result<BTreeMap<u64, u64>> {
    let card = code.cardinality();
    if card.to_u64().is_none_or(|c| c > 1 << 20) {
        return Err(Error::EnumerationTooLarge(format!(
            "code has {card} words, the walk guard is 2^20"
        )));
    }
    let mut dist = BTreeMap::new();
    for word in code.codewords() {
        *dist.entry(lee_weight_word(&word)).or_insert(0u64) += 1;
    }
    Ok(dist)
}
