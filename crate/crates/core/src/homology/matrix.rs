//! Exact matrices over a prime field or the rationals, and their ranks.
//!
//! Characteristic 2 uses bit-packed rows; odd primes use `u64` residues;
//! characteristic 0 uses arbitrary-precision rationals. Every route is
//! plain dense Gaussian elimination.

use num::{BigRational, One, Zero};

use crate::error::{Error, Result};

/// The coefficient field: the rationals (characteristic 0) or `GF(p)` for a
/// prime `p < 2^31`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    characteristic: u32,
}

impl FieldSpec {
    pub const GF2: FieldSpec = FieldSpec { characteristic: 2 };
    pub const RATIONALS: FieldSpec = FieldSpec { characteristic: 0 };

    pub fn new(characteristic: u64) -> Result<Self> {
        if characteristic == 0 || (characteristic < 1 << 31 && is_prime(characteristic)) {
            Ok(FieldSpec {
                characteristic: characteristic as u32,
            })
        } else {
            Err(Error::InvalidField(characteristic))
        }
    }

    pub fn characteristic(self) -> u32 {
        self.characteristic
    }
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::GF2
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Dense row-major integer matrix, used for boundary maps before they are
/// reduced into a field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_rows(rows: usize, cols: usize, data: Vec<i64>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count does not match shape");
        IntMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: i64) {
        self.data[r * self.cols + c] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// `self * other`.
    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    out.data[r * other.cols + c] += a * other.get(k, c);
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Storage {
    // one packed bit-vector per row
    Gf2 { words: usize, bits: Vec<u64> },
    ModP { p: u64, data: Vec<u64> },
    Rational(Vec<BigRational>),
}

/// A matrix with entries in the field named by its [`FieldSpec`], always
/// held in canonical reduced form.
#[derive(Clone, Debug, PartialEq)]
pub struct FieldMatrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    storage: Storage,
}

impl FieldMatrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        FieldMatrix::from_int(field, &IntMatrix::zeros(rows, cols))
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        FieldMatrix::from_int(field, &m)
    }

    /// Reduces an integer matrix into `field`.
    pub fn from_int(field: FieldSpec, m: &IntMatrix) -> Self {
        let (rows, cols) = (m.rows, m.cols);
        let storage = match field.characteristic {
            0 => Storage::Rational(
                m.data
                    .iter()
                    .map(|&x| BigRational::from_integer(x.into()))
                    .collect(),
            ),
            2 => {
                let words = cols.div_ceil(64);
                let mut bits = vec![0u64; rows * words];
                for r in 0..rows {
                    for c in 0..cols {
                        if m.get(r, c) & 1 != 0 {
                            bits[r * words + c / 64] |= 1 << (c % 64);
                        }
                    }
                }
                Storage::Gf2 { words, bits }
            }
            p => {
                let p = p as u64;
                Storage::ModP {
                    p,
                    data: m
                        .data
                        .iter()
                        .map(|&x| x.rem_euclid(p as i64) as u64)
                        .collect(),
                }
            }
        };
        FieldMatrix {
            rows,
            cols,
            field,
            storage,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// Rank over the field, by exact elimination on a copy.
    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        match &self.storage {
            Storage::Gf2 { words, bits } => rank_gf2(*words, bits),
            Storage::ModP { p, data } => rank_mod_p(*p, self.rows, self.cols, data.clone()),
            Storage::Rational(data) => rank_rational(self.rows, self.cols, data.clone()),
        }
    }
}

/// Rank of `m` over its field.
pub fn matrix_rank(m: &FieldMatrix) -> usize {
    m.rank()
}

fn rank_gf2(words: usize, bits: &[u64]) -> usize {
    // Pivot rows in insertion order; each is already reduced against all
    // earlier pivots, so one forward pass clears every pivot column.
    let mut pivots: Vec<(usize, Vec<u64>)> = Vec::new();
    for row in bits.chunks(words) {
        let mut row = row.to_vec();
        for (col, p) in &pivots {
            if row[col / 64] >> (col % 64) & 1 == 1 {
                for (a, b) in row.iter_mut().zip(p) {
                    *a ^= b;
                }
            }
        }
        if let Some(w) = row.iter().position(|&x| x != 0) {
            let col = w * 64 + row[w].trailing_zeros() as usize;
            pivots.push((col, row));
        }
    }
    pivots.len()
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2)
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn rank_mod_p(p: u64, rows: usize, cols: usize, mut a: Vec<u64>) -> usize {
    let mut rank = 0;
    for c in 0..cols {
        let Some(pr) = (rank..rows).find(|&r| a[r * cols + c] != 0) else {
            continue;
        };
        if pr != rank {
            for k in 0..cols {
                a.swap(pr * cols + k, rank * cols + k);
            }
        }
        let inv = inv_mod(a[rank * cols + c], p);
        for k in c..cols {
            a[rank * cols + k] = a[rank * cols + k] * inv % p;
        }
        for r in rank + 1..rows {
            let f = a[r * cols + c];
            if f == 0 {
                continue;
            }
            for k in c..cols {
                let sub = f * a[rank * cols + k] % p;
                a[r * cols + k] = (a[r * cols + k] + p - sub) % p;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

fn rank_rational(rows: usize, cols: usize, mut a: Vec<BigRational>) -> usize {
    let mut rank = 0;
    for c in 0..cols {
        let Some(pr) = (rank..rows).find(|&r| !a[r * cols + c].is_zero()) else {
            continue;
        };
        if pr != rank {
            for k in 0..cols {
                a.swap(pr * cols + k, rank * cols + k);
            }
        }
        let inv = BigRational::one() / &a[rank * cols + c];
        for k in c..cols {
            a[rank * cols + k] = &a[rank * cols + k] * &inv;
        }
        for r in rank + 1..rows {
            if a[r * cols + c].is_zero() {
                continue;
            }
            let f = a[r * cols + c].clone();
            for k in c..cols {
                let sub = &f * &a[rank * cols + k];
                a[r * cols + k] -= sub;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}
