//! Layered embedding with in-band parameters.
//!
//! `n` binary columns of `2^p − 1` bits each are processed in three layers:
//!
//! * **H1** – every feasible column gets randomized Hamming(2, p) embedding:
//!   the first `p − r` syndrome bits carry a target symbol, the last `r` are
//!   free.
//! * **Hq** – the `n` column symbols (first `p − r` syndrome bits, read as
//!   elements of `GF(2^{p−r})`) form a wet channel; failed columns are wet.
//!   A Reed–Solomon `[n, f]` parity check carries `(n − f)` payload symbols.
//! * **H2** – the column parities `v` carry `r` and `f` through a
//!   Hamming(2, u) wet embedding whose dry positions are the failed columns.
//!
//! A parity flip in a failed column must not disturb that column's Hq
//! symbol, so it is realized by a change that leaves the first `p − r`
//! syndrome bits alone: a single dry bit at 1-based index `< 2^r`, or a dry
//! triple `{a, b, a ⊕ b}` whose syndrome contributions cancel.
//!
//! Bit packing: payload bits fill `GF(2^{p−r})` symbols most significant bit
//! first, symbols in Reed–Solomon message order. The H2 message is
//! `r − r_min` on the high `⌈log2 r_max⌉` bits followed by `f / 2^{u−o}` on
//! the low `o` bits.

use crate::codes::{rs_parity_check, Code};
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::wpc::{min_r_counting, solve_randomized, solve_wet_unbounded, CoverObject};

/// Design parameters. Everything is derived from `r_max` and the precision
/// `o` of the transmitted failure ratio.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZzwParams {
    pub r_max: usize,
    pub o: usize,
    /// `⌈log2 r_max⌉`, the width of the transmitted `r`.
    pub r_bits: usize,
    pub u: usize,
    pub p: usize,
    /// Number of columns, `2^u − 1`.
    pub n: usize,
    pub column_len: usize,
}

impl ZzwParams {
    pub fn new(r_max: usize, o: usize) -> Result<Self> {
        if r_max == 0 {
            return Err(Error::Usage("r_max must be ≥ 1".into()));
        }
        if o < 2 {
            return Err(Error::Usage(
                "o must be ≥ 2: with one bit the only f_u ≥ 1/2 is the failure marker".into(),
            ));
        }
        let r_bits = ceil_log2(r_max as u64) as usize;
        let u = r_bits + o;
        let p = r_max + u;
        let params = Self {
            r_max,
            o,
            r_bits,
            u,
            p,
            n: (1 << u) - 1,
            column_len: (1 << p) - 1,
        };
        if p > 20 || p - params.r_min() > 16 {
            return Err(Error::SizeLimit(format!(
                "r_max = {r_max}, o = {o} gives p = {p}; columns or symbol field too large"
            )));
        }
        Ok(params)
    }

    /// Smallest transmissible `r`: `⌈log2 r_max⌉` bits hold `2^{r_bits}`
    /// values ending at `r_max`.
    pub fn r_min(&self) -> usize {
        (self.r_max + 1).saturating_sub(1 << self.r_bits)
    }

    /// `f` is always a multiple of this.
    pub fn f_unit(&self) -> usize {
        1 << (self.u - self.o)
    }

    /// Lower bound `2^{u−1}` on the number of failed columns.
    pub fn f_min(&self) -> usize {
        1 << (self.u - 1)
    }

    /// Largest `f` whose `o`-bit code is not the all-ones failure marker.
    pub fn f_max(&self) -> usize {
        ((1 << self.o) - 2) * self.f_unit()
    }

    fn failure_code(&self) -> u32 {
        (1 << self.o) - 1
    }
}

pub(crate) fn ceil_log2(x: u64) -> u32 {
    if x <= 1 {
        0
    } else {
        64 - (x - 1).leading_zeros()
    }
}

/// One cover column and its wet positions (0-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnBlock {
    bits: Vec<u8>,
    wet: Vec<usize>,
}

impl ColumnBlock {
    pub fn new(bits: Vec<u8>, wet: Vec<usize>) -> Result<Self> {
        if bits.iter().any(|&b| b > 1) {
            return Err(Error::Usage("column bits must be 0 or 1".into()));
        }
        let cover = CoverObject::new(vec![0; bits.len()], wet)?;
        Ok(Self {
            bits,
            wet: cover.wet().to_vec(),
        })
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn wet(&self) -> &[usize] {
        &self.wet
    }

    pub fn wet_count(&self) -> usize {
        self.wet.len()
    }

    pub fn dry_count(&self) -> usize {
        self.bits.len() - self.wet.len()
    }

    fn wet_mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.bits.len()];
        for &i in &self.wet {
            mask[i] = true;
        }
        mask
    }
}

/// Per-run choices made by [`ZzwScheme::plan`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZzwPlan {
    pub r: usize,
    /// Columns that receive an H1 embedding.
    pub feasible: Vec<usize>,
    /// Columns wet for the Hq layer, including the artificially wetted ones.
    pub failed: Vec<usize>,
    /// Feasible columns declared wet to reach a valid `f`.
    pub artificial: Vec<usize>,
    pub f: usize,
    /// `f_u = f / 2^u` as an `o`-bit fixed-point integer.
    pub f_code: u32,
}

impl ZzwPlan {
    pub fn f_u(&self, params: &ZzwParams) -> f64 {
        self.f_code as f64 / (1u64 << params.o) as f64
    }

    /// `(n − f)(p − r)` payload bits.
    pub fn capacity_bits(&self, params: &ZzwParams) -> usize {
        (params.n - self.f) * (params.p - self.r)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extraction {
    pub r: usize,
    pub f: usize,
    /// All `(n − f)(p − r)` carried bits; an embedded payload is a prefix.
    pub payload: Vec<u8>,
}

/// Parameters plus the two Hamming codes they induce.
#[derive(Debug, Clone)]
pub struct ZzwScheme {
    params: ZzwParams,
    h1: Code,
    h2: Code,
}

impl ZzwScheme {
    pub fn new(params: ZzwParams) -> Result<Self> {
        Ok(Self {
            h1: Code::hamming(Field::gf2(), params.p)?,
            h2: Code::hamming(Field::gf2(), params.u)?,
            params,
        })
    }

    pub fn params(&self) -> &ZzwParams {
        &self.params
    }

    /// Chooses `r` maximizing `(n − f(r))(p − r)`, smaller `r` on ties, and
    /// wets the feasible columns with fewest dry bits until `f` is valid.
    pub fn plan(&self, columns: &[ColumnBlock]) -> Result<ZzwPlan> {
        let pr = &self.params;
        self.check_blocks(columns)?;
        let needed_r: Vec<usize> = columns
            .iter()
            .map(|c| {
                min_r_counting(2, pr.column_len, pr.p, 1, c.wet_count())
                    .expect("r = p always suffices")
            })
            .collect();
        let mut best: Option<(usize, usize, usize)> = None; // (payload, r, f)
        for r in pr.r_min()..=pr.r_max {
            let natural = needed_r.iter().filter(|&&need| need > r).count();
            let f = natural.max(pr.f_min()).div_ceil(pr.f_unit()) * pr.f_unit();
            if f > pr.f_max() || f >= pr.n {
                continue;
            }
            let payload = (pr.n - f) * (pr.p - r);
            if best.is_none_or(|(b, _, _)| payload > b) {
                best = Some((payload, r, f));
            }
        }
        let (_, r, f) = best.ok_or(Error::NoFeasiblePlan)?;
        let mut failed: Vec<usize> = (0..pr.n).filter(|&i| needed_r[i] > r).collect();
        let mut candidates: Vec<usize> = (0..pr.n).filter(|&i| needed_r[i] <= r).collect();
        candidates.sort_by_key(|&i| (columns[i].dry_count(), i));
        let mut artificial: Vec<usize> = candidates[..f - failed.len()].to_vec();
        artificial.sort_unstable();
        failed.extend_from_slice(&artificial);
        failed.sort_unstable();
        let feasible = (0..pr.n).filter(|i| failed.binary_search(i).is_err()).collect();
        Ok(ZzwPlan {
            r,
            feasible,
            failed,
            artificial,
            f,
            f_code: (f / pr.f_unit()) as u32,
        })
    }

    /// Embeds `payload` (bits, at most the plan's capacity) and returns the
    /// stego columns.
    pub fn embed(
        &self,
        columns: &[ColumnBlock],
        payload: &[u8],
        plan: &ZzwPlan,
    ) -> Result<Vec<Vec<u8>>> {
        let pr = &self.params;
        self.check_blocks(columns)?;
        self.check_plan(plan)?;
        if payload.iter().any(|&b| b > 1) {
            return Err(Error::Usage("payload bits must be 0 or 1".into()));
        }
        let capacity = plan.capacity_bits(pr);
        if payload.len() > capacity {
            return Err(Error::Usage(format!(
                "payload of {} bits exceeds capacity {capacity}",
                payload.len()
            )));
        }
        let r = plan.r;
        let sym_bits = pr.p - r;
        let field = Field::gf2m(sym_bits as u32);

        // Hq: target symbols for every column.
        let symbols: Vec<u32> = columns
            .iter()
            .map(|c| column_syndrome(&c.bits) >> r)
            .collect();
        let message = pack_symbols(payload, sym_bits);
        let targets = crate::wpc::rs_wet_embed(&field, &symbols, &message, &plan.failed)?;

        // H1: steer each feasible column to its target.
        let mut stego: Vec<Vec<u8>> = columns.iter().map(|c| c.bits.clone()).collect();
        for &i in &plan.feasible {
            let col = &columns[i];
            let cover = CoverObject::new(
                col.bits.iter().map(|&b| b as u32).collect(),
                col.wet.clone(),
            )?;
            let t = unpack_bits(targets[i] as u64, sym_bits);
            let t: Vec<u32> = t.into_iter().map(u32::from).collect();
            let sol = solve_randomized(&self.h1, &cover, &t, r)?;
            stego[i] = sol.y.iter().map(|&v| v as u8).collect();
        }

        // H2: parameters on the parity vector.
        let mut h2_message = unpack_bits((r - pr.r_min()) as u64, pr.r_bits);
        h2_message.extend(unpack_bits(plan.f_code as u64, pr.o));
        let flips: Vec<Option<Vec<usize>>> = (0..pr.n)
            .map(|i| {
                if plan.failed.binary_search(&i).is_ok() {
                    parity_flip(&stego[i], &columns[i].wet_mask(), r)
                } else {
                    None
                }
            })
            .collect();
        self.embed_parity(&mut stego, &h2_message, &flips)?;
        Ok(stego)
    }

    /// Writes the all-ones `f_u` marker so the recipient learns that
    /// embedding failed. A parity flip here is the lowest-index dry bit.
    pub fn mark_failure(&self, columns: &[ColumnBlock]) -> Result<Vec<Vec<u8>>> {
        let pr = &self.params;
        self.check_blocks(columns)?;
        let mut stego: Vec<Vec<u8>> = columns.iter().map(|c| c.bits.clone()).collect();
        let mut message = vec![0u8; pr.r_bits];
        message.extend(unpack_bits(pr.failure_code() as u64, pr.o));
        let flips: Vec<Option<Vec<usize>>> = columns
            .iter()
            .map(|c| {
                let mask = c.wet_mask();
                (0..mask.len()).find(|&j| !mask[j]).map(|j| vec![j])
            })
            .collect();
        self.embed_parity(&mut stego, &message, &flips)?;
        Ok(stego)
    }

    fn embed_parity(
        &self,
        stego: &mut [Vec<u8>],
        message: &[u8],
        flips: &[Option<Vec<usize>>],
    ) -> Result<()> {
        let v: Vec<u32> = stego.iter().map(|c| parity(c) as u32).collect();
        let wet: Vec<usize> = (0..flips.len()).filter(|&i| flips[i].is_none()).collect();
        let cover = CoverObject::new(v.clone(), wet)?;
        let m: Vec<u32> = message.iter().map(|&b| b as u32).collect();
        let sol = solve_wet_unbounded(self.h2.parity_check().matrix(), &cover, &m)?;
        for (i, (&old, &new)) in v.iter().zip(&sol.y).enumerate() {
            if old != new {
                for &j in flips[i].as_ref().expect("only dry parities change") {
                    stego[i][j] ^= 1;
                }
            }
        }
        Ok(())
    }

    /// Recovers `r`, `f` and the payload. Wet masks are not needed.
    pub fn extract(&self, columns: &[Vec<u8>]) -> Result<Extraction> {
        let pr = &self.params;
        self.check_columns(columns)?;
        let v: Vec<u32> = columns.iter().map(|c| parity(c) as u32).collect();
        let s = self.h2.syndrome(&v)?.into_symbols();
        let bits: Vec<u8> = s.iter().map(|&b| b as u8).collect();
        let r_code = pack_bits(&bits[..pr.r_bits]) as usize;
        let f_code = pack_bits(&bits[pr.r_bits..]) as u32;
        if f_code == pr.failure_code() {
            return Err(Error::EmbeddingFailure);
        }
        if f_code < 1 << (pr.o - 1) {
            return Err(Error::Parse(format!(
                "transmitted f_u = {f_code}/2^{} is below 1/2",
                pr.o
            )));
        }
        let r = pr.r_min() + r_code;
        let f = f_code as usize * pr.f_unit();
        let payload = self.extract_payload(columns, r, f)?;
        Ok(Extraction { r, f, payload })
    }

    /// The Hq/H1 part of extraction for known `r` and `f`.
    pub fn extract_payload(&self, columns: &[Vec<u8>], r: usize, f: usize) -> Result<Vec<u8>> {
        let pr = &self.params;
        self.check_columns(columns)?;
        if r > pr.r_max || f >= pr.n {
            return Err(Error::Usage(format!("r = {r}, f = {f} out of range")));
        }
        let sym_bits = pr.p - r;
        let field = Field::gf2m(sym_bits as u32);
        let symbols: Vec<u32> = columns.iter().map(|c| column_syndrome(c) >> r).collect();
        let hq = rs_parity_check(&field, pr.n, pr.n - f);
        let message = hq.mul_transposed(&symbols)?;
        Ok(message
            .iter()
            .flat_map(|&s| unpack_bits(s as u64, sym_bits))
            .collect())
    }

    fn check_blocks(&self, columns: &[ColumnBlock]) -> Result<()> {
        let pr = &self.params;
        if columns.len() != pr.n {
            return Err(Error::LengthMismatch {
                expected: pr.n,
                actual: columns.len(),
            });
        }
        for c in columns {
            if c.bits.len() != pr.column_len {
                return Err(Error::LengthMismatch {
                    expected: pr.column_len,
                    actual: c.bits.len(),
                });
            }
        }
        Ok(())
    }

    fn check_columns(&self, columns: &[Vec<u8>]) -> Result<()> {
        let pr = &self.params;
        if columns.len() != pr.n {
            return Err(Error::LengthMismatch {
                expected: pr.n,
                actual: columns.len(),
            });
        }
        if let Some(c) = columns.iter().find(|c| c.len() != pr.column_len) {
            return Err(Error::LengthMismatch {
                expected: pr.column_len,
                actual: c.len(),
            });
        }
        Ok(())
    }

    fn check_plan(&self, plan: &ZzwPlan) -> Result<()> {
        let pr = &self.params;
        let ok = (pr.r_min()..=pr.r_max).contains(&plan.r)
            && plan.f == plan.failed.len()
            && plan.f >= pr.f_min()
            && plan.f <= pr.f_max()
            && plan.f.is_multiple_of(pr.f_unit())
            && plan.f_code as usize * pr.f_unit() == plan.f
            && plan.feasible.len() + plan.failed.len() == pr.n;
        if ok {
            Ok(())
        } else {
            Err(Error::Usage("inconsistent plan for these parameters".into()))
        }
    }
}

/// Hamming(2, p) syndrome of a column as an integer: the XOR of the 1-based
/// indices of its set bits. Bit `p − 1 − i` is syndrome coordinate `i`.
pub fn column_syndrome(bits: &[u8]) -> u32 {
    bits.iter()
        .enumerate()
        .filter(|(_, &b)| b == 1)
        .fold(0, |acc, (i, _)| acc ^ (i as u32 + 1))
}

pub fn parity(bits: &[u8]) -> u8 {
    bits.iter().fold(0, |acc, &b| acc ^ b)
}

/// An odd-weight change of dry bits that keeps the first `p − r` syndrome
/// bits: the lowest dry bit with 1-based index below `2^r`, else the first
/// dry triple `{a, b, a ⊕ b}`.
pub fn parity_flip(bits: &[u8], wet: &[bool], r: usize) -> Option<Vec<usize>> {
    let len = bits.len();
    let single_limit = (1usize << r).min(len + 1);
    if let Some(j) = (1..single_limit).find(|&j| !wet[j - 1]) {
        return Some(vec![j - 1]);
    }
    let dry: Vec<usize> = (1..=len).filter(|&j| !wet[j - 1]).collect();
    for (ia, &a) in dry.iter().enumerate() {
        for &b in &dry[ia + 1..] {
            let c = a ^ b;
            if c > b && c <= len && !wet[c - 1] {
                return Some(vec![a - 1, b - 1, c - 1]);
            }
        }
    }
    None
}

/// `bits` (MSB first) grouped into `width`-bit symbols; the last symbol is
/// zero-padded.
pub fn pack_symbols(bits: &[u8], width: usize) -> Vec<u32> {
    bits.chunks(width)
        .map(|chunk| {
            let v = pack_bits(chunk) as u32;
            v << (width - chunk.len())
        })
        .collect()
}

fn pack_bits(bits: &[u8]) -> u64 {
    bits.iter().fold(0, |acc, &b| (acc << 1) | b as u64)
}

fn unpack_bits(value: u64, width: usize) -> Vec<u8> {
    (0..width)
        .rev()
        .map(|i| ((value >> i) & 1) as u8)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::index::sample;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_blocks(params: &ZzwParams, rng: &mut ChaCha8Rng, max_wet: usize) -> Vec<ColumnBlock> {
        (0..params.n)
            .map(|_| {
                let bits = (0..params.column_len).map(|_| rng.gen_range(0..2)).collect();
                let k = rng.gen_range(0..=max_wet);
                let wet = sample(rng, params.column_len, k).into_vec();
                ColumnBlock::new(bits, wet).unwrap()
            })
            .collect()
    }

    #[test]
    fn derived_parameters() {
        let p = ZzwParams::new(2, 2).unwrap();
        assert_eq!((p.u, p.p, p.n, p.column_len), (3, 5, 7, 31));
        assert_eq!((p.f_min(), p.f_unit(), p.f_max(), p.r_min()), (4, 2, 4, 1));
        let p = ZzwParams::new(3, 1);
        assert!(p.is_err());
        let p = ZzwParams::new(3, 2).unwrap();
        assert_eq!((p.r_bits, p.u, p.p, p.n, p.r_min()), (2, 4, 7, 15, 0));
        assert_eq!((p.f_min(), p.f_unit(), p.f_max()), (8, 4, 8));
        let p = ZzwParams::new(1, 3).unwrap();
        assert_eq!((p.r_bits, p.u, p.p, p.r_min()), (0, 3, 4, 1));
        assert!(ZzwParams::new(0, 2).is_err());
        assert!(ZzwParams::new(10, 6).is_err());
    }

    #[test]
    fn syndrome_integer_matches_matrix() {
        let code = Code::hamming(Field::gf2(), 5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let bits: Vec<u8> = (0..31).map(|_| rng.gen_range(0..2)).collect();
            let x: Vec<u32> = bits.iter().map(|&b| b as u32).collect();
            let s = code.syndrome(&x).unwrap().into_symbols();
            assert_eq!(crate::codes::symbols_to_key(&s, 2) as u32, column_syndrome(&bits));
        }
    }

    #[test]
    fn feasibility_threshold() {
        // three wet bits need r ≥ 2
        for (wet, need) in [(0, 0), (1, 1), (2, 2), (3, 2), (4, 3), (7, 3), (8, 4)] {
            assert_eq!(min_r_counting(2, 31, 5, 1, wet).unwrap(), need, "ℓ = {wet}");
        }
    }

    #[test]
    fn plan_fully_dry() {
        let params = ZzwParams::new(3, 1 + 1).unwrap();
        let scheme = ZzwScheme::new(params).unwrap();
        let blocks: Vec<ColumnBlock> = (0..params.n)
            .map(|_| ColumnBlock::new(vec![0; params.column_len], vec![]).unwrap())
            .collect();
        let plan = scheme.plan(&blocks).unwrap();
        assert_eq!(plan.r, 0);
        assert_eq!(plan.f, params.f_min());
        assert_eq!(plan.artificial.len(), plan.f);
        assert_eq!(plan.f_u(&params), 0.5);
    }

    #[test]
    fn plan_prefers_payload_then_small_r() {
        let params = ZzwParams::new(2, 2).unwrap();
        let scheme = ZzwScheme::new(params).unwrap();
        let mut blocks: Vec<ColumnBlock> = (0..7)
            .map(|_| ColumnBlock::new(vec![0; 31], vec![]).unwrap())
            .collect();
        let plan = scheme.plan(&blocks).unwrap();
        assert_eq!((plan.r, plan.f), (1, 4));
        assert_eq!(plan.capacity_bits(&params), 12);
        // five columns with three wet bits: r = 1 leaves only two feasible
        for b in blocks.iter_mut().take(5) {
            *b = ColumnBlock::new(vec![0; 31], vec![0, 1, 2]).unwrap();
        }
        let plan = scheme.plan(&blocks).unwrap();
        assert_eq!((plan.r, plan.f), (2, 4));
        // artificially wetted columns are those with fewest dry bits
        assert_eq!(plan.artificial, vec![0, 1, 2, 3]);
        // every column too wet even at r_max
        let wet_all: Vec<ColumnBlock> = (0..7)
            .map(|_| ColumnBlock::new(vec![0; 31], (0..10).collect()).unwrap())
            .collect();
        assert!(matches!(scheme.plan(&wet_all), Err(Error::NoFeasiblePlan)));
    }

    #[test]
    fn roundtrip_with_parameters() {
        let params = ZzwParams::new(2, 2).unwrap();
        let scheme = ZzwScheme::new(params).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..50 {
            let blocks = random_blocks(&params, &mut rng, 3);
            let plan = scheme.plan(&blocks).unwrap();
            let cap = plan.capacity_bits(&params);
            let payload: Vec<u8> = (0..cap).map(|_| rng.gen_range(0..2)).collect();
            let stego = scheme.embed(&blocks, &payload, &plan).unwrap();
            for (b, s) in blocks.iter().zip(&stego) {
                for &w in b.wet() {
                    assert_eq!(b.bits()[w], s[w]);
                }
            }
            let out = scheme.extract(&stego).unwrap();
            assert_eq!((out.r, out.f), (plan.r, plan.f));
            assert_eq!(out.payload, payload);
        }
    }

    #[test]
    fn empty_payload_only_touches_failed_columns() {
        let params = ZzwParams::new(2, 2).unwrap();
        let scheme = ZzwScheme::new(params).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let blocks = random_blocks(&params, &mut rng, 3);
        let plan = scheme.plan(&blocks).unwrap();
        let stego = scheme.embed(&blocks, &[], &plan).unwrap();
        for &i in &plan.feasible {
            assert_eq!(stego[i], blocks[i].bits());
        }
        let out = scheme.extract(&stego).unwrap();
        assert_eq!((out.r, out.f), (plan.r, plan.f));
    }

    #[test]
    fn short_payload_is_prefix() {
        let params = ZzwParams::new(2, 2).unwrap();
        let scheme = ZzwScheme::new(params).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let blocks = random_blocks(&params, &mut rng, 3);
        let plan = scheme.plan(&blocks).unwrap();
        let payload = vec![1, 0, 1, 1, 0];
        let stego = scheme.embed(&blocks, &payload, &plan).unwrap();
        let out = scheme.extract(&stego).unwrap();
        assert_eq!(&out.payload[..5], &payload[..]);
        let too_long = vec![0; plan.capacity_bits(&params) + 1];
        assert!(matches!(scheme.embed(&blocks, &too_long, &plan), Err(Error::Usage(_))));
    }

    #[test]
    fn failure_marker_is_reported() {
        let params = ZzwParams::new(2, 2).unwrap();
        let scheme = ZzwScheme::new(params).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let blocks = random_blocks(&params, &mut rng, 3);
        let stego = scheme.mark_failure(&blocks).unwrap();
        assert!(matches!(scheme.extract(&stego), Err(Error::EmbeddingFailure)));
    }

    #[test]
    fn flips_keep_message_prefix() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for r in 0..=2 {
            for _ in 0..200 {
                let bits: Vec<u8> = (0..31).map(|_| rng.gen_range(0..2)).collect();
                let k = rng.gen_range(0..28);
                let mut wet = vec![false; 31];
                for i in sample(&mut rng, 31, k) {
                    wet[i] = true;
                }
                if let Some(flip) = parity_flip(&bits, &wet, r) {
                    let mut after = bits.clone();
                    for &j in &flip {
                        assert!(!wet[j]);
                        after[j] ^= 1;
                    }
                    assert_eq!(flip.len() % 2, 1);
                    assert_eq!(column_syndrome(&after) >> r, column_syndrome(&bits) >> r);
                    assert_ne!(parity(&after), parity(&bits));
                }
            }
        }
        // fully wet column has no flip
        assert!(parity_flip(&[0; 7], &[true; 7], 2).is_none());
    }

    #[test]
    fn bit_packing() {
        assert_eq!(pack_symbols(&[1, 0, 1, 1, 1], 3), vec![0b101, 0b110]);
        assert_eq!(unpack_bits(0b101, 4), vec![0, 1, 0, 1]);
        assert_eq!(ceil_log2(1), 0);
        assert_eq!(ceil_log2(2), 1);
        assert_eq!(ceil_log2(5), 3);
    }
}
