//! Linear code families: q-ary Hamming, binary and ternary Golay,
//! Reed–Solomon and seeded random codes, with syndrome computation and
//! coset-leader decoding.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::gf::Field;
use crate::matrix::Matrix;

/// Largest Hamming length accepted by [`Code::hamming`].
pub const MAX_HAMMING_LENGTH: u64 = 1 << 20;

/// Coset tables are only built when the syndrome space has at most this many
/// elements.
pub const MAX_TABLE_SIZE: u64 = 1 << 22;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CodeFamily {
    Hamming,
    Golay23,
    Golay11,
    ReedSolomon,
    Random { seed: u64 },
    /// Parity check supplied by the caller (e.g. read from a file).
    Imported,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GolayVariant {
    Binary,
    Ternary,
}

/// Parameters of an `[n, k, d]_q` code with covering radius `rho`.
/// `d` and `rho` are `None` when unknown.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeSpec {
    pub field: Field,
    pub n: usize,
    pub k: usize,
    pub d: Option<usize>,
    pub rho: Option<usize>,
    pub family: CodeFamily,
}

impl CodeSpec {
    pub fn q(&self) -> u32 {
        self.field.q()
    }

    /// `n − k`, the syndrome length.
    pub fn redundancy(&self) -> usize {
        self.n - self.k
    }

    pub fn is_perfect_family(&self) -> bool {
        matches!(
            self.family,
            CodeFamily::Hamming | CodeFamily::Golay23 | CodeFamily::Golay11
        )
    }

    /// Sphere-packing equality `Σ_{i≤ρ} (q−1)^i C(n,i) = q^{n−k}`.
    pub fn sphere_packing_equality(&self) -> bool {
        let Some(rho) = self.rho else { return false };
        let q = self.q() as u128;
        let lhs = ball_volume(q, self.n as u64, rho as u64);
        Some(lhs) == checked_pow(q, self.redundancy() as u32)
    }
}

/// Number of vectors of weight ≤ `radius` in `F_q^len`.
pub fn ball_volume(q: u128, len: u64, radius: u64) -> u128 {
    (0..=radius.min(len))
        .map(|i| (q - 1).pow(i as u32) * binomial(len, i))
        .sum()
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

pub(crate) fn checked_pow(base: u128, exp: u32) -> Option<u128> {
    base.checked_pow(exp)
}

/// A parity-check matrix with full row rank.
#[derive(Clone, PartialEq, Eq)]
pub struct ParityCheckMatrix(Matrix);

impl ParityCheckMatrix {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if matrix.rows() > matrix.cols() || !matrix.is_full_row_rank() {
            return Err(Error::Domain(format!(
                "parity check of shape {}x{} does not have full row rank",
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(Self(matrix))
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn field(&self) -> &Field {
        self.0.field()
    }

    pub fn rows(&self) -> usize {
        self.0.rows()
    }

    pub fn cols(&self) -> usize {
        self.0.cols()
    }

    /// Text grid: header `q n k`, then `n − k` rows of space-separated symbols.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{} {} {}\n",
            self.field().q(),
            self.cols(),
            self.cols() - self.rows()
        );
        for r in 0..self.rows() {
            let row: Vec<String> = self.0.row(r).iter().map(u32::to_string).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty matrix file".into()))?;
        let header: Vec<u64> = parse_numbers(header)?;
        let [q, n, k] = header[..] else {
            return Err(Error::Parse("matrix header must be `q n k`".into()));
        };
        if k > n {
            return Err(Error::Parse(format!("k = {k} exceeds n = {n}")));
        }
        let field = Field::new(q as u32)?;
        let rows: Vec<Vec<u32>> = lines
            .map(|l| parse_numbers(l).map(|v| v.into_iter().map(|x| x as u32).collect()))
            .collect::<Result<_>>()?;
        if rows.len() as u64 != n - k {
            return Err(Error::Parse(format!(
                "expected {} rows, found {}",
                n - k,
                rows.len()
            )));
        }
        if let Some(bad) = rows.iter().find(|r| r.len() as u64 != n) {
            return Err(Error::Parse(format!(
                "row has {} entries, expected {n}",
                bad.len()
            )));
        }
        let matrix = if rows.is_empty() {
            Matrix::zeros(field, 0, n as usize)
        } else {
            Matrix::from_rows(field, &rows)?
        };
        Self::new(matrix)
    }
}

fn parse_numbers(line: &str) -> Result<Vec<u64>> {
    line.split_whitespace()
        .map(|t| {
            t.parse::<u64>()
                .map_err(|e| Error::Parse(format!("bad integer {t:?}: {e}")))
        })
        .collect()
}

impl fmt::Debug for ParityCheckMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Syndrome(Vec<u32>);

impl Syndrome {
    pub fn new(symbols: Vec<u32>) -> Self {
        Self(symbols)
    }

    pub fn symbols(&self) -> &[u32] {
        &self.0
    }

    pub fn into_symbols(self) -> Vec<u32> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&s| s == 0)
    }
}

/// Minimum-weight representative of every coset, found by breadth-first
/// search over the syndrome space.
struct CosetTable {
    weight: Vec<u8>,
    // (column, coefficient, parent syndrome key) of the last step.
    step: Vec<(u32, u32, u32)>,
    covering_radius: usize,
}

const UNREACHED: u8 = u8::MAX;

impl CosetTable {
    fn build(h: &Matrix) -> Option<Self> {
        let f = h.field();
        let q = f.q() as u64;
        let r = h.rows();
        let size = q.checked_pow(r as u32).filter(|&s| s <= MAX_TABLE_SIZE)? as usize;
        let moves: Vec<(u32, u32, Vec<u32>)> = (0..h.cols())
            .flat_map(|c| {
                let col = h.column(c);
                (1..f.q()).map(move |a| (c as u32, a, col.clone()))
            })
            .map(|(c, a, col)| (c, a, col.iter().map(|&v| f.mul(a, v)).collect()))
            .collect();
        let mut weight = vec![UNREACHED; size];
        let mut step = vec![(0, 0, 0); size];
        weight[0] = 0;
        let mut queue = VecDeque::from([0usize]);
        let mut radius = 0;
        while let Some(key) = queue.pop_front() {
            let w = weight[key];
            radius = radius.max(w as usize);
            let s = key_to_symbols(key as u64, f.q(), r);
            for (c, a, delta) in &moves {
                let next: Vec<u32> = s.iter().zip(delta).map(|(&x, &d)| f.add(x, d)).collect();
                let nk = symbols_to_key(&next, f.q()) as usize;
                if weight[nk] == UNREACHED {
                    weight[nk] = w + 1;
                    step[nk] = (*c, *a, key as u32);
                    queue.push_back(nk);
                }
            }
        }
        if weight.contains(&UNREACHED) {
            return None;
        }
        Some(Self {
            weight,
            step,
            covering_radius: radius,
        })
    }

    fn leader(&self, key: usize, n: usize) -> Vec<u32> {
        let mut e = vec![0; n];
        let mut k = key;
        while self.weight[k] > 0 {
            let (c, a, parent) = self.step[k];
            e[c as usize] = a;
            k = parent as usize;
        }
        e
    }
}

/// Syndrome as an integer, first symbol most significant.
pub fn symbols_to_key(s: &[u32], q: u32) -> u64 {
    s.iter().fold(0u64, |acc, &v| acc * q as u64 + v as u64)
}

pub fn key_to_symbols(mut key: u64, q: u32, len: usize) -> Vec<u32> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = (key % q as u64) as u32;
        key /= q as u64;
    }
    out
}

#[derive(Clone)]
enum Decoder {
    /// Normalized column → column index.
    Hamming(Arc<HashMap<u64, usize>>),
    Table(Arc<CosetTable>),
    None,
}

/// A code together with its parity check and decoder.
#[derive(Clone)]
pub struct Code {
    spec: CodeSpec,
    h: ParityCheckMatrix,
    decoder: Decoder,
}

impl fmt::Debug for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Code").field("spec", &self.spec).finish()
    }
}

impl Code {
    /// The `[(q^p−1)/(q−1), n−p, 3]_q` Hamming code. Columns of `H` are the
    /// nonzero vectors of `F_q^p` whose first nonzero entry is 1, in
    /// lexicographic order.
    pub fn hamming(field: Field, p: usize) -> Result<Self> {
        if p < 2 {
            return Err(Error::Usage(format!("Hamming redundancy p = {p} must be ≥ 2")));
        }
        let q = field.q() as u64;
        let n = q
            .checked_pow(p as u32)
            .map(|qp| (qp - 1) / (q - 1))
            .filter(|&n| n <= MAX_HAMMING_LENGTH)
            .ok_or_else(|| {
                Error::SizeLimit(format!("Hamming code over GF({q}) with p = {p} is too long"))
            })? as usize;
        let mut h = Matrix::zeros(field.clone(), p, n);
        let mut lookup = HashMap::with_capacity(n);
        let mut col = 0;
        for t in 1..q.pow(p as u32) {
            let v = key_to_symbols(t, field.q(), p);
            if v.iter().find(|&&x| x != 0) != Some(&1) {
                continue;
            }
            for (r, &x) in v.iter().enumerate() {
                h.set(r, col, x);
            }
            lookup.insert(t, col);
            col += 1;
        }
        debug_assert_eq!(col, n);
        Ok(Self {
            spec: CodeSpec {
                field,
                n,
                k: n - p,
                d: Some(3),
                rho: Some(1),
                family: CodeFamily::Hamming,
            },
            h: ParityCheckMatrix(h),
            decoder: Decoder::Hamming(Arc::new(lookup)),
        })
    }

    /// Golay codes from the bordered-circulant generator `[I | B]` of the
    /// extended code, punctured on the last coordinate. Binary: `B` borders
    /// the 11×11 circulant whose first row marks {0} ∪ QR(11). Ternary: the
    /// classical 6×6 bordered matrix over QR(5).
    pub fn golay(variant: GolayVariant) -> Self {
        let (field, b, d, rho, family) = match variant {
            GolayVariant::Binary => {
                const QR11: [usize; 5] = [1, 3, 4, 5, 9];
                let mut b = vec![vec![1u32; 12]; 12];
                b[0][0] = 0;
                for i in 0..11 {
                    for j in 0..11 {
                        let diff = (j + 11 - i) % 11;
                        b[i + 1][j + 1] = u32::from(diff == 0 || QR11.contains(&diff));
                    }
                }
                (Field::gf2(), b, 7, 3, CodeFamily::Golay23)
            }
            GolayVariant::Ternary => {
                let b = vec![
                    vec![0, 1, 1, 1, 1, 1],
                    vec![1, 0, 1, 2, 2, 1],
                    vec![1, 1, 0, 1, 2, 2],
                    vec![1, 2, 1, 0, 1, 2],
                    vec![1, 2, 2, 1, 0, 1],
                    vec![1, 1, 2, 2, 1, 0],
                ];
                (Field::gf3(), b, 5, 2, CodeFamily::Golay11)
            }
        };
        let k = b.len();
        let r = b[0].len() - 1;
        let n = k + r;
        // H = [−Aᵗ | I] for the punctured generator [I | A].
        let mut h = Matrix::zeros(field.clone(), r, n);
        for i in 0..r {
            for j in 0..k {
                h.set(i, j, field.neg(b[j][i]));
            }
            h.set(i, k + i, 1);
        }
        let table = CosetTable::build(&h).expect("Golay syndrome space is small");
        Self {
            spec: CodeSpec {
                field,
                n,
                k,
                d: Some(d),
                rho: Some(rho),
                family,
            },
            h: ParityCheckMatrix(h),
            decoder: Decoder::Table(Arc::new(table)),
        }
    }

    /// Reed–Solomon code of length `n ≤ q` and dimension `dim`, with the
    /// `(n−dim)×n` Vandermonde parity check `H[i][j] = a_j^i` on the points
    /// `0, 1, α, α², …`.
    pub fn reed_solomon(field: Field, n: usize, dim: usize) -> Result<Self> {
        if n as u64 > field.q() as u64 {
            return Err(Error::SizeLimit(format!(
                "Reed–Solomon length {n} exceeds field size {}",
                field.q()
            )));
        }
        if dim > n {
            return Err(Error::Usage(format!("dimension {dim} exceeds length {n}")));
        }
        let h = rs_parity_check(&field, n, n - dim);
        let redundancy = n - dim;
        let decoder = match CosetTable::build(&h) {
            Some(t) => Decoder::Table(Arc::new(t)),
            None => Decoder::None,
        };
        Ok(Self {
            spec: CodeSpec {
                field,
                n,
                k: dim,
                d: Some(redundancy + 1),
                rho: Some(redundancy),
                family: CodeFamily::ReedSolomon,
            },
            h: ParityCheckMatrix(h),
            decoder,
        })
    }

    /// Uniformly random `rows × cols` parity check from a seeded stream,
    /// redrawn until it has full row rank.
    pub fn random(field: Field, rows: usize, cols: usize, seed: u64) -> Result<Self> {
        if rows > cols {
            return Err(Error::Usage(format!(
                "random parity check needs rows ≤ cols, got {rows}x{cols}"
            )));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = loop {
            let m = random_matrix(&field, rows, cols, &mut rng);
            if m.is_full_row_rank() {
                break m;
            }
        };
        let mut code = Self::from_parity_check(ParityCheckMatrix(h));
        code.spec.family = CodeFamily::Random { seed };
        Ok(code)
    }

    pub fn from_parity_check(h: ParityCheckMatrix) -> Self {
        let n = h.cols();
        let k = n - h.rows();
        let table = CosetTable::build(h.matrix());
        let rho = table.as_ref().map(|t| t.covering_radius);
        Self {
            spec: CodeSpec {
                field: h.field().clone(),
                n,
                k,
                d: None,
                rho,
                family: CodeFamily::Imported,
            },
            h,
            decoder: table.map_or(Decoder::None, |t| Decoder::Table(Arc::new(t))),
        }
    }

    pub fn spec(&self) -> &CodeSpec {
        &self.spec
    }

    pub fn parity_check(&self) -> &ParityCheckMatrix {
        &self.h
    }

    pub fn field(&self) -> &Field {
        &self.spec.field
    }

    pub fn n(&self) -> usize {
        self.spec.n
    }

    pub fn k(&self) -> usize {
        self.spec.k
    }

    pub fn redundancy(&self) -> usize {
        self.spec.redundancy()
    }

    /// `x Hᵗ`.
    pub fn syndrome(&self, x: &[u32]) -> Result<Syndrome> {
        self.h.matrix().mul_transposed(x).map(Syndrome)
    }

    /// A minimum-weight error vector whose syndrome is `s`.
    pub fn coset_decode(&self, s: &Syndrome) -> Result<Vec<u32>> {
        let r = self.redundancy();
        if s.0.len() != r {
            return Err(Error::LengthMismatch {
                expected: r,
                actual: s.0.len(),
            });
        }
        let f = self.field();
        let n = self.n();
        match &self.decoder {
            Decoder::Hamming(lookup) => {
                let mut e = vec![0; n];
                let Some(&lead) = s.0.iter().find(|&&v| v != 0) else {
                    return Ok(e);
                };
                let inv = f.inv(lead)?;
                let normalized: Vec<u32> = s.0.iter().map(|&v| f.mul(v, inv)).collect();
                let col = lookup[&symbols_to_key(&normalized, f.q())];
                e[col] = lead;
                Ok(e)
            }
            Decoder::Table(table) => Ok(table.leader(symbols_to_key(&s.0, f.q()) as usize, n)),
            Decoder::None => {
                if s.is_zero() {
                    Ok(vec![0; n])
                } else {
                    Err(Error::DecodeFailure)
                }
            }
        }
    }

    /// Average coset-leader weight under uniformly distributed syndromes,
    /// when it can be computed.
    pub fn average_leader_weight(&self) -> Option<f64> {
        let q = self.field().q() as f64;
        let total = q.powi(self.redundancy() as i32);
        match &self.decoder {
            Decoder::Hamming(_) => Some(1.0 - 1.0 / total),
            Decoder::Table(t) => {
                Some(t.weight.iter().map(|&w| w as f64).sum::<f64>() / t.weight.len() as f64)
            }
            Decoder::None => None,
        }
    }
}

/// The `rows × n` Vandermonde matrix `H[i][j] = a_j^i` over the points
/// `0, 1, α, …, α^{n−2}`.
pub fn rs_parity_check(field: &Field, n: usize, rows: usize) -> Matrix {
    let alpha = field.primitive_element();
    let points: Vec<u32> = (0..n)
        .map(|j| if j == 0 { 0 } else { field.pow(alpha, j as u64 - 1) })
        .collect();
    let mut h = Matrix::zeros(field.clone(), rows, n);
    for (j, &a) in points.iter().enumerate() {
        let mut v = 1;
        for i in 0..rows {
            h.set(i, j, v);
            v = field.mul(v, a);
        }
    }
    h
}

pub fn random_matrix<R: Rng>(field: &Field, rows: usize, cols: usize, rng: &mut R) -> Matrix {
    let mut m = Matrix::zeros(field.clone(), rows, cols);
    for r in 0..rows {
        for c in 0..cols {
            m.set(r, c, rng.gen_range(0..field.q()));
        }
    }
    m
}
