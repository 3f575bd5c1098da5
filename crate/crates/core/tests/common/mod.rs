#![allow(dead_code)]

use cncode::{rational, Code, Rational, Word};
use rand::Rng;

pub fn r_set() -> Vec<Rational> {
    vec![
        rational(1, 1),
        rational(3, 2),
        rational(2, 1),
        rational(5, 1),
    ]
}

pub fn random_word<R: Rng>(rng: &mut R, n: usize) -> Word {
    Word::from_fn(n, |_| rng.gen()).unwrap()
}

/// `k` distinct random words of length `n`; needs `k ≤ 2^n`.
pub fn random_code<R: Rng>(rng: &mut R, n: usize, k: usize) -> Code {
    let mut words = std::collections::BTreeSet::new();
    while words.len() < k {
        words.insert(random_word(rng, n));
    }
    Code::new(words.into_iter().collect()).unwrap()
}

/// Span of random generator rows, deduplicated.
pub fn random_linear_code<R: Rng>(rng: &mut R, n: usize, dim: usize) -> Code {
    let gens: Vec<Word> = (0..dim).map(|_| random_word(rng, n)).collect();
    let mut span = std::collections::BTreeSet::new();
    for mask in 0u32..1 << dim {
        let mut w = Word::zeros(n).unwrap();
        for (i, g) in gens.iter().enumerate() {
            if mask >> i & 1 == 1 {
                w = w.xor(g).unwrap();
            }
        }
        span.insert(w);
    }
    Code::new(span.into_iter().collect()).unwrap()
}

/// Bit-by-bit `r·d10 + d01`.
pub fn naive_delta(y: &Word, x: &Word, r: &Rational) -> Rational {
    let (mut d10, mut d01) = (0i64, 0i64);
    for i in 0..y.len() {
        match (y.get(i), x.get(i)) {
            (true, false) => d10 += 1,
            (false, true) => d01 += 1,
            _ => {}
        }
    }
    r * rational(d10, 1) + rational(d01, 1)
}

/// Minimum over all ordered pairs of distinct words.
pub fn naive_min_delta(code: &Code, r: &Rational) -> Rational {
    let w = code.words();
    let mut best: Option<Rational> = None;
    for i in 0..w.len() {
        for j in 0..w.len() {
            if i != j {
                let d = naive_delta(&w[i], &w[j], r);
                if best.as_ref().is_none_or(|b| d < *b) {
                    best = Some(d);
                }
            }
        }
    }
    best.unwrap()
}

/// `W_f(y) = Σ_x (-1)^(f(x) + x·y)` by direct summation.
pub fn naive_walsh(table: &[bool]) -> Vec<i64> {
    let size = table.len();
    (0..size)
        .map(|y| {
            (0..size)
                .map(|x| {
                    let e = table[x] as u32 + (x & y).count_ones();
                    if e.is_multiple_of(2) {
                        1
                    } else {
                        -1
                    }
                })
                .sum()
        })
        .collect()
}

fn code_from_strings(rows: &[&str]) -> Code {
    Code::new(rows.iter().map(|s| s.parse().unwrap()).collect()).unwrap()
}

fn span(gens: &[Word]) -> Code {
    let n = gens[0].len();
    let words = (0u32..1 << gens.len())
        .map(|mask| {
            gens.iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .fold(Word::zeros(n).unwrap(), |acc, (_, g)| acc.xor(g).unwrap())
        })
        .collect();
    Code::new(words).unwrap()
}

/// The [7,4,3] Hamming code.
pub fn hamming_7_4() -> Code {
    let gens: Vec<Word> = ["1000110", "0100101", "0010011", "0001111"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    span(&gens)
}

/// The [23,12,7] binary Golay code, generated by the cyclic shifts of
/// `g(x) = 1 + x^2 + x^4 + x^5 + x^6 + x^10 + x^11`.
pub fn golay_23() -> Code {
    let g = [0usize, 2, 4, 5, 6, 10, 11];
    let gens: Vec<Word> = (0..12)
        .map(|s| Word::from_fn(23, |i| g.iter().any(|&e| e + s == i)).unwrap())
        .collect();
    span(&gens)
}

pub fn two_words(a: &str, b: &str) -> Code {
    code_from_strings(&[a, b])
}
