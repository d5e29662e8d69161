//! Deliberately naive reference implementations over `Vec<u8>` bits. They
//! share no code with the library and exist only to check it.
#![allow(dead_code)]

use dccodes::RingElement;

pub fn bits_of(x: u64, m: usize) -> Vec<u8> {
    (0..m).map(|i| ((x >> i) & 1) as u8).collect()
}

pub fn ring(m: usize, x: u64) -> RingElement {
    RingElement::from_u64(m, x).unwrap()
}

/// Free schoolbook product, then fold `x^m -> 1`.
pub fn schoolbook_cyclic(a: &[u8], b: &[u8]) -> Vec<u8> {
    let m = a.len();
    let mut full = vec![0u8; 2 * m];
    for i in 0..m {
        for j in 0..m {
            full[i + j] ^= a[i] & b[j];
        }
    }
    (0..m).map(|k| full[k] ^ full[k + m]).collect()
}

/// Row `i` is the first row rotated right by `i`.
pub fn dense_circulant(first: &[u8]) -> Vec<Vec<u8>> {
    let m = first.len();
    (0..m)
        .map(|i| (0..m).map(|j| first[(j + m - i) % m]).collect())
        .collect()
}

pub fn dot(a: &[u8], b: &[u8]) -> u8 {
    a.iter().zip(b).fold(0, |acc, (x, y)| acc ^ (x & y))
}

pub fn gram(rows: &[Vec<u8>]) -> Vec<Vec<u8>> {
    rows.iter()
        .map(|a| rows.iter().map(|b| dot(a, b)).collect())
        .collect()
}

pub fn is_identity(m: &[Vec<u8>]) -> bool {
    m.iter()
        .enumerate()
        .all(|(i, r)| r.iter().enumerate().all(|(j, &v)| v == (i == j) as u8))
}

pub fn rank(rows: &[Vec<u8>]) -> usize {
    let mut rows: Vec<Vec<u8>> = rows.to_vec();
    let cols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        if let Some(p) = (r..rows.len()).find(|&i| rows[i][c] == 1) {
            rows.swap(r, p);
            for i in 0..rows.len() {
                if i != r && rows[i][c] == 1 {
                    let pr = rows[r].clone();
                    for (x, y) in rows[i].iter_mut().zip(pr) {
                        *x ^= y;
                    }
                }
            }
            r += 1;
        }
    }
    r
}

/// Generator rows `[I_m | A]` for the DC code of `f`.
pub fn dc_rows(f: u64, m: usize) -> Vec<Vec<u8>> {
    let a = dense_circulant(&bits_of(f, m));
    (0..m)
        .map(|i| {
            let mut row = vec![0u8; 2 * m];
            row[i] = 1;
            row[m..].copy_from_slice(&a[i]);
            row
        })
        .collect()
}

/// Generator rows `[I_{m+1} | A']` for the bordered code of `f`.
pub fn bordered_rows(f: u64, m: usize, alpha: u8) -> Vec<Vec<u8>> {
    let a = dense_circulant(&bits_of(f, m));
    let k = m + 1;
    (0..k)
        .map(|i| {
            let mut row = vec![0u8; 2 * k];
            row[i] = 1;
            if i == 0 {
                row[k] = alpha;
                for c in 1..k {
                    row[k + c] = 1;
                }
            } else {
                row[k] = 1;
                row[k + 1..].copy_from_slice(&a[i - 1]);
            }
            row
        })
        .collect()
}

/// All codewords by straight binary counting.
pub fn codewords(rows: &[Vec<u8>]) -> Vec<Vec<u8>> {
    let n = rows[0].len();
    (0..1u64 << rows.len())
        .map(|msg| {
            let mut cw = vec![0u8; n];
            for (i, r) in rows.iter().enumerate() {
                if (msg >> i) & 1 == 1 {
                    for (c, x) in cw.iter_mut().zip(r) {
                        *c ^= x;
                    }
                }
            }
            cw
        })
        .collect()
}

pub fn weight_distribution(rows: &[Vec<u8>]) -> Vec<u64> {
    let n = rows[0].len();
    let mut dist = vec![0u64; n + 1];
    for cw in codewords(rows) {
        dist[cw.iter().filter(|&&b| b == 1).count()] += 1;
    }
    dist
}

pub fn min_distance(rows: &[Vec<u8>]) -> usize {
    weight_distribution(rows)
        .iter()
        .enumerate()
        .skip(1)
        .find(|(_, &c)| c > 0)
        .map(|(w, _)| w)
        .unwrap()
}

/// `C ∩ C^perp = {0}` by definition: every nonzero codeword has some
/// codeword with odd inner product.
pub fn is_lcd_by_definition(rows: &[Vec<u8>]) -> bool {
    let words = codewords(rows);
    words
        .iter()
        .filter(|c| c.contains(&1))
        .all(|c| words.iter().any(|d| dot(c, d) == 1))
}

/// The extremal bound, restated.
pub fn bound(n: usize) -> usize {
    let b = 4 * (n / 24) + 4;
    if n % 24 == 22 {
        b + 2
    } else {
        b
    }
}
