//! Syndrome-coding solvers: plain, bounded, unbounded wet paper, and the
//! randomized wet-paper solver that cannot fail on perfect codes once the
//! random tail is long enough.

use crate::codes::{ball_volume, checked_pow, Code, CodeSpec, Syndrome};
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::matrix::Matrix;

/// Cover vector plus the positions that must not change.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverObject {
    x: Vec<u32>,
    wet: Vec<usize>,
}

impl CoverObject {
    /// `wet` holds 0-based indices; they are sorted and must be distinct
    /// and in range.
    pub fn new(x: Vec<u32>, mut wet: Vec<usize>) -> Result<Self> {
        wet.sort_unstable();
        if wet.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Usage("duplicate wet index".into()));
        }
        if let Some(&i) = wet.last().filter(|&&i| i >= x.len()) {
            return Err(Error::Usage(format!(
                "wet index {i} out of range for length {}",
                x.len()
            )));
        }
        Ok(Self { x, wet })
    }

    pub fn dry(x: Vec<u32>) -> Self {
        Self { x, wet: Vec::new() }
    }

    pub fn x(&self) -> &[u32] {
        &self.x
    }

    pub fn wet(&self) -> &[usize] {
        &self.wet
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    pub fn wet_count(&self) -> usize {
        self.wet.len()
    }

    pub fn wet_mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.x.len()];
        for &i in &self.wet {
            mask[i] = true;
        }
        mask
    }

    pub fn dry_positions(&self) -> Vec<usize> {
        let mask = self.wet_mask();
        (0..self.x.len()).filter(|&i| !mask[i]).collect()
    }

    fn check_field(&self, field: &Field) -> Result<()> {
        match self.x.iter().find(|&&v| !field.contains(v)) {
            Some(v) => Err(Error::Domain(format!("{v} is not in GF({})", field.q()))),
            None => Ok(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbedSolution {
    pub y: Vec<u32>,
    pub changes: usize,
    /// Syndrome symbols past the message; empty for non-randomized solvers.
    pub random_tail: Vec<u32>,
}

impl EmbedSolution {
    fn new(x: &[u32], y: Vec<u32>, random_tail: Vec<u32>) -> Self {
        let changes = hamming_distance(x, &y);
        Self {
            y,
            changes,
            random_tail,
        }
    }
}

pub fn hamming_distance(a: &[u32], b: &[u32]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

fn check_len(expected: usize, actual: usize) -> Result<()> {
    if expected != actual {
        return Err(Error::LengthMismatch { expected, actual });
    }
    Ok(())
}

fn check_message(field: &Field, m: &[u32]) -> Result<()> {
    match m.iter().find(|&&v| !field.contains(v)) {
        Some(v) => Err(Error::Domain(format!("{v} is not in GF({})", field.q()))),
        None => Ok(()),
    }
}

/// `y = x + D(m − xHᵗ)` with no wet positions.
pub fn solve_plain(code: &Code, cover: &CoverObject, m: &[u32]) -> Result<EmbedSolution> {
    if cover.wet_count() != 0 {
        return Err(Error::Usage("plain syndrome coding takes no wet positions".into()));
    }
    check_len(code.n(), cover.len())?;
    check_len(code.redundancy(), m.len())?;
    cover.check_field(code.field())?;
    check_message(code.field(), m)?;
    let f = code.field();
    let s = code.syndrome(cover.x())?;
    let target: Vec<u32> = m.iter().zip(s.symbols()).map(|(&a, &b)| f.sub(a, b)).collect();
    let e = code.coset_decode(&Syndrome::new(target))?;
    let y = cover.x().iter().zip(&e).map(|(&a, &b)| f.add(a, b)).collect();
    Ok(EmbedSolution::new(cover.x(), y, Vec::new()))
}

/// As [`solve_plain`], failing when more than `max_changes` symbols would change.
pub fn solve_bounded(
    code: &Code,
    cover: &CoverObject,
    m: &[u32],
    max_changes: usize,
) -> Result<EmbedSolution> {
    let sol = solve_plain(code, cover, m)?;
    if sol.changes > max_changes {
        return Err(Error::BoundExceeded {
            needed: sol.changes,
            bound: max_changes,
        });
    }
    Ok(sol)
}

/// Unbounded wet-paper coding: solve `y_dry H_dryᵗ = m − x_wet H_wetᵗ` by
/// elimination. Free dry symbols keep their cover values.
pub fn solve_wet_unbounded(h: &Matrix, cover: &CoverObject, m: &[u32]) -> Result<EmbedSolution> {
    check_len(h.cols(), cover.len())?;
    check_len(h.rows(), m.len())?;
    cover.check_field(h.field())?;
    check_message(h.field(), m)?;
    let f = h.field();
    let wet = cover.wet();
    let dry = cover.dry_positions();
    let mut wet_only = vec![0; cover.len()];
    for &i in wet {
        wet_only[i] = cover.x()[i];
    }
    let wet_part = h.mul_transposed(&wet_only)?;
    let rhs: Vec<u32> = m.iter().zip(&wet_part).map(|(&a, &b)| f.sub(a, b)).collect();
    let defaults: Vec<u32> = dry.iter().map(|&i| cover.x()[i]).collect();
    let z = h.select_columns(&dry).solve(&rhs, &defaults)?;
    let mut y = cover.x().to_vec();
    for (&i, v) in dry.iter().zip(z) {
        y[i] = v;
    }
    Ok(EmbedSolution::new(cover.x(), y, Vec::new()))
}

/// Randomized wet-paper coding: find `y` with `yHᵗ = (m ‖ R)` for some tail
/// `R` of length `r`, keeping wet symbols and changing at most `ρ` symbols.
///
/// Dry-supported error patterns are tried by increasing weight, then by
/// support in lexicographic order, then by symbol values, so the returned
/// solution changes as few symbols as possible.
pub fn solve_randomized(
    code: &Code,
    cover: &CoverObject,
    m: &[u32],
    r: usize,
) -> Result<EmbedSolution> {
    let red = code.redundancy();
    if r >= red && !(r == red && m.is_empty()) {
        return Err(Error::Usage(format!(
            "random tail r = {r} leaves no message symbols (n − k = {red})"
        )));
    }
    check_len(code.n(), cover.len())?;
    check_len(red - r, m.len())?;
    cover.check_field(code.field())?;
    check_message(code.field(), m)?;
    let rho = code
        .spec()
        .rho
        .ok_or_else(|| Error::Unsupported("covering radius unknown".into()))?;
    let f = code.field();
    let mlen = m.len();
    if cover.wet_count() == cover.len() && mlen > 0 {
        return Err(Error::Infeasible("every position is wet".into()));
    }
    let s = code.syndrome(cover.x())?.into_symbols();
    // Required change of the message part.
    let delta: Vec<u32> = m.iter().zip(&s).map(|(&a, &b)| f.sub(a, b)).collect();
    let h = code.parity_check().matrix();
    let dry = cover.dry_positions();
    let columns: Vec<Vec<u32>> = dry.iter().map(|&j| h.column(j)).collect();

    let found = search_patterns(f, &columns, rho, |acc| acc[..mlen] == delta[..]);
    let Some(pattern) = found else {
        return Err(Error::Infeasible(format!(
            "no pattern of weight ≤ {rho} on {} dry positions reaches the message with r = {r}",
            dry.len()
        )));
    };
    let mut y = cover.x().to_vec();
    for (idx, a) in pattern {
        let j = dry[idx];
        y[j] = f.add(y[j], a);
    }
    let tail = code.syndrome(&y)?.into_symbols()[mlen..].to_vec();
    Ok(EmbedSolution::new(cover.x(), y, tail))
}

/// Enumerates `(position, value)` patterns over `columns` by weight,
/// support (lexicographic) and values, returning the first whose syndrome
/// satisfies `accept`.
fn search_patterns(
    f: &Field,
    columns: &[Vec<u32>],
    max_weight: usize,
    accept: impl Fn(&[u32]) -> bool,
) -> Option<Vec<(usize, u32)>> {
    let rows = columns.first().map_or(0, Vec::len);
    let zero = vec![0; rows];
    if accept(&zero) {
        return Some(Vec::new());
    }
    let mut support = Vec::new();
    let mut values = Vec::new();
    for w in 1..=max_weight.min(columns.len()) {
        support.clear();
        support.extend(0..w);
        loop {
            values.clear();
            values.resize(w, 1u32);
            loop {
                let mut acc = zero.clone();
                for (&j, &a) in support.iter().zip(&values) {
                    for (slot, &h) in acc.iter_mut().zip(&columns[j]) {
                        *slot = f.add(*slot, f.mul(a, h));
                    }
                }
                if accept(&acc) {
                    return Some(support.iter().copied().zip(values.iter().copied()).collect());
                }
                if !next_values(&mut values, f.q()) {
                    break;
                }
            }
            if !next_combination(&mut support, columns.len()) {
                break;
            }
        }
    }
    None
}

fn next_values(values: &mut [u32], q: u32) -> bool {
    for v in values.iter_mut().rev() {
        if *v + 1 < q {
            *v += 1;
            return true;
        }
        *v = 1;
    }
    false
}

pub(crate) fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Least `r ≥ 0` with `q^{n−k} + 1 ≤ q^r + Σ_{i≤ρ} (q−1)^i C(n−ℓ, i)`.
pub fn min_r_for(spec: &CodeSpec, wet: usize) -> Result<usize> {
    if !spec.is_perfect_family() {
        return Err(Error::Unsupported(format!(
            "randomization bound needs a perfect code, got {:?}",
            spec.family
        )));
    }
    if wet > spec.n {
        return Err(Error::Usage(format!("ℓ = {wet} exceeds n = {}", spec.n)));
    }
    let rho = spec.rho.expect("perfect families know their covering radius");
    Ok(min_r_counting(spec.q(), spec.n, spec.redundancy(), rho, wet)
        .expect("r = n − k always satisfies the bound"))
}

pub fn min_r(code: &Code, wet: usize) -> Result<usize> {
    min_r_for(code.spec(), wet)
}

/// Smallest `r ≤ n − k` satisfying the counting condition, or `None` when
/// even `r = n − k` fails.
pub fn min_r_counting(q: u32, n: usize, redundancy: usize, rho: usize, wet: usize) -> Option<usize> {
    let q = q as u128;
    let total = checked_pow(q, redundancy as u32)?;
    let reachable = ball_volume(q, (n - wet) as u64, rho as u64);
    (0..=redundancy).find(|&r| total < q.pow(r as u32) + reachable)
}

/// Largest ℓ for which the Hamming code `(q, p)` still carries at least one
/// message symbol after randomization.
pub fn max_wet_for_one_symbol(field: &Field, p: usize) -> Result<usize> {
    if p < 2 {
        return Err(Error::Usage(format!("p = {p} must be ≥ 2")));
    }
    let q = field.q() as u64;
    let n = ((q.pow(p as u32) - 1) / (q - 1)) as usize;
    let best = (0..=n)
        .take_while(|&l| {
            min_r_counting(field.q(), n, p, 1, l).is_some_and(|r| p - r >= 1)
        })
        .last()
        .expect("ℓ = 0 needs no randomization");
    Ok(best)
}

/// Symbols that can always be embedded with ℓ wet positions using a code
/// `g` away from the Singleton bound.
pub fn guaranteed_symbols(n: usize, wet: usize, g: usize) -> usize {
    n.saturating_sub(wet).saturating_sub(g)
}

/// Reed–Solomon wet embedding over `field`: returns `y` with
/// `y H_rsᵗ = m` for the `(n−ℓ)`-row Vandermonde parity check, `y = x` on
/// the wet set. Never fails for valid input because every `n−ℓ` columns
/// of that matrix are independent.
///
/// A shorter message constrains only the leading rows.
pub fn rs_wet_embed(field: &Field, x: &[u32], m: &[u32], wet: &[usize]) -> Result<Vec<u32>> {
    let n = x.len();
    if n as u64 > field.q() as u64 {
        return Err(Error::SizeLimit(format!(
            "length {n} exceeds field size {}",
            field.q()
        )));
    }
    let cover = CoverObject::new(x.to_vec(), wet.to_vec())?;
    let capacity = n - cover.wet_count();
    if m.len() > capacity {
        return Err(Error::Usage(format!(
            "message of {} symbols exceeds capacity {capacity}",
            m.len()
        )));
    }
    let h = crate::codes::rs_parity_check(field, n, m.len());
    Ok(solve_wet_unbounded(&h, &cover, m)?.y)
}

/// Lower bound on the probability that a random `nrow × ncol` matrix over
/// `F_q` has full rank `nrow`.
pub fn rank_lower_bound(q: u32, ncol: usize, nrow: usize) -> Result<f64> {
    if ncol < nrow {
        return Err(Error::Domain(format!("ncol = {ncol} < nrow = {nrow}")));
    }
    if q == 2 && ncol == nrow {
        return Ok(0.288);
    }
    let q = q as f64;
    Ok(1.0 - 1.0 / (q.powi((ncol - nrow) as i32) * (q - 1.0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::GolayVariant;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ham23() -> Code {
        Code::hamming(Field::gf2(), 3).unwrap()
    }

    #[test]
    fn plain_examples() {
        let c = ham23();
        let x = vec![1, 0, 1, 1, 0, 0, 1];
        let m = c.syndrome(&x).unwrap().into_symbols();
        let sol = solve_plain(&c, &CoverObject::dry(x.clone()), &m).unwrap();
        assert_eq!((sol.y, sol.changes), (x, 0));
        for j in 0..7 {
            let col = c.parity_check().matrix().column(j);
            let sol = solve_plain(&c, &CoverObject::dry(vec![0; 7]), &col).unwrap();
            assert_eq!(sol.changes, 1);
            assert_eq!(sol.y[j], 1);
        }
        let wet = CoverObject::new(vec![0; 7], vec![0]).unwrap();
        assert!(matches!(solve_plain(&c, &wet, &[0, 0, 0]), Err(Error::Usage(_))));
        assert!(solve_plain(&c, &CoverObject::dry(vec![0; 7]), &[0, 0]).is_err());
    }

    #[test]
    fn golay23_plain_within_radius() {
        let c = Code::golay(GolayVariant::Binary);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..1000 {
            let x: Vec<u32> = (0..23).map(|_| rng.gen_range(0..2)).collect();
            let m: Vec<u32> = (0..11).map(|_| rng.gen_range(0..2)).collect();
            let sol = solve_plain(&c, &CoverObject::dry(x), &m).unwrap();
            assert!(sol.changes <= 3);
            assert_eq!(c.syndrome(&sol.y).unwrap().symbols(), m.as_slice());
        }
    }

    #[test]
    fn bounded_examples() {
        let c = ham23();
        let cover = CoverObject::dry(vec![0; 7]);
        assert!(matches!(
            solve_bounded(&c, &cover, &[1, 0, 0], 0),
            Err(Error::BoundExceeded { needed: 1, bound: 0 })
        ));
        assert!(solve_bounded(&c, &cover, &[1, 0, 0], 1).is_ok());
    }

    #[test]
    fn golay23_bound_two_fails_exactly_on_weight_three_leaders() {
        let c = Code::golay(GolayVariant::Binary);
        let cover = CoverObject::dry(vec![0; 23]);
        let mut failures = 0;
        for key in 0..2048u64 {
            let m = crate::codes::key_to_symbols(key, 2, 11);
            let leader = c.coset_decode(&Syndrome::new(m.clone())).unwrap();
            let w = leader.iter().filter(|&&v| v != 0).count();
            match solve_bounded(&c, &cover, &m, 2) {
                Ok(sol) => assert!(w <= 2 && sol.changes == w),
                Err(Error::BoundExceeded { needed: 3, bound: 2 }) => {
                    assert_eq!(w, 3);
                    failures += 1;
                }
                Err(e) => panic!("{e}"),
            }
        }
        assert_eq!(failures, 1771);
    }

    #[test]
    fn wet_unbounded_examples() {
        let c = ham23();
        let h = c.parity_check().matrix();
        let x = vec![1, 1, 0, 1, 0, 0, 1];
        let m = [1, 0, 1];
        let sol = solve_wet_unbounded(h, &CoverObject::dry(x.clone()), &m).unwrap();
        assert_eq!(c.syndrome(&sol.y).unwrap().symbols(), &m);
        // one dry column (index 6 → column 111): only syndromes in its span
        let cover = CoverObject::new(x.clone(), (0..6).collect()).unwrap();
        let s = c.syndrome(&x).unwrap().into_symbols();
        let bad = [s[0] ^ 1, s[1], s[2]];
        assert!(matches!(
            solve_wet_unbounded(h, &cover, &bad),
            Err(Error::RankDeficient { rank: 1, required: 3 })
        ));
        let fine = [s[0] ^ 1, s[1] ^ 1, s[2] ^ 1];
        let sol = solve_wet_unbounded(h, &cover, &fine).unwrap();
        assert_eq!(&sol.y[..6], &x[..6]);
    }

    #[test]
    fn randomized_degenerates_to_plain() {
        let c = ham23();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let x: Vec<u32> = (0..7).map(|_| rng.gen_range(0..2)).collect();
            let m: Vec<u32> = (0..3).map(|_| rng.gen_range(0..2)).collect();
            let a = solve_plain(&c, &CoverObject::dry(x.clone()), &m).unwrap();
            let b = solve_randomized(&c, &CoverObject::dry(x), &m, 0).unwrap();
            assert_eq!(a.y, b.y);
            assert!(b.random_tail.is_empty());
        }
    }

    #[test]
    fn randomized_hamming_2_3_three_wet_exhaustive() {
        let c = ham23();
        let mut cases = 0;
        for xk in 0..128u64 {
            let x = crate::codes::key_to_symbols(xk, 2, 7);
            for a in 0..7 {
                for b in a + 1..7 {
                    for d in b + 1..7 {
                        for m in 0..2 {
                            let cover = CoverObject::new(x.clone(), vec![a, b, d]).unwrap();
                            let sol = solve_randomized(&c, &cover, &[m], 2).unwrap();
                            assert!(sol.changes <= 1);
                            assert_eq!(sol.y[a], x[a]);
                            assert_eq!(sol.y[b], x[b]);
                            assert_eq!(sol.y[d], x[d]);
                            let s = c.syndrome(&sol.y).unwrap().into_symbols();
                            assert_eq!(s[0], m);
                            assert_eq!(sol.random_tail, s[1..].to_vec());
                            cases += 1;
                        }
                    }
                }
            }
        }
        assert_eq!(cases, 128 * 35 * 2);
    }

    #[test]
    fn randomized_golay23_one_wet() {
        let c = Code::golay(GolayVariant::Binary);
        assert_eq!(min_r(&c, 1).unwrap(), 8);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..1000 {
            let x: Vec<u32> = (0..23).map(|_| rng.gen_range(0..2)).collect();
            let wet = rng.gen_range(0..23);
            let m: Vec<u32> = (0..3).map(|_| rng.gen_range(0..2)).collect();
            let cover = CoverObject::new(x.clone(), vec![wet]).unwrap();
            let sol = solve_randomized(&c, &cover, &m, 8).unwrap();
            assert!(sol.changes <= 3);
            assert_eq!(sol.y[wet], x[wet]);
            assert_eq!(&c.syndrome(&sol.y).unwrap().symbols()[..3], m.as_slice());
        }
    }

    #[test]
    fn randomized_rejects_bad_r_and_all_wet() {
        let c = ham23();
        let cover = CoverObject::new(vec![0; 7], (0..7).collect()).unwrap();
        assert!(matches!(solve_randomized(&c, &cover, &[1], 2), Err(Error::Infeasible(_))));
        assert!(matches!(
            solve_randomized(&c, &CoverObject::dry(vec![0; 7]), &[], 4),
            Err(Error::Usage(_))
        ));
        // below min_r the search may fail
        let cover = CoverObject::new(vec![0; 7], vec![0, 1, 2, 3, 4]).unwrap();
        assert!(matches!(solve_randomized(&c, &cover, &[0, 0, 1], 0), Err(Error::Infeasible(_))));
    }

    #[test]
    fn min_r_examples() {
        let c = ham23();
        assert_eq!(min_r(&c, 0).unwrap(), 0);
        assert_eq!(min_r(&c, 3).unwrap(), 2);
        assert_eq!(min_r(&Code::golay(GolayVariant::Binary), 1).unwrap(), 8);
        assert_eq!(min_r(&Code::golay(GolayVariant::Ternary), 1).unwrap(), 4);
        let rs = Code::reed_solomon(Field::gf2m(3), 7, 3).unwrap();
        assert!(matches!(min_r(&rs, 0), Err(Error::Unsupported(_))));
        assert!(min_r(&c, 8).is_err());
    }

    #[test]
    fn max_wet_examples() {
        assert_eq!(max_wet_for_one_symbol(&Field::gf2(), 3).unwrap(), 3);
        assert_eq!(max_wet_for_one_symbol(&Field::gf2(), 5).unwrap(), 15);
        assert_eq!(max_wet_for_one_symbol(&Field::gf3(), 3).unwrap(), 4);
        for q in [2u32, 3] {
            for p in 2..=6usize {
                let f = Field::new(q).unwrap();
                let closed = (q.pow(p as u32 - 1) - 1) / (q - 1);
                assert_eq!(max_wet_for_one_symbol(&f, p).unwrap(), closed as usize);
            }
        }
    }

    #[test]
    fn guaranteed_examples() {
        assert_eq!(guaranteed_symbols(15, 4, 0), 11);
        assert_eq!(guaranteed_symbols(9, 9, 0), 0);
        assert_eq!(guaranteed_symbols(23, 10, 2), 11);
        assert_eq!(guaranteed_symbols(3, 2, 5), 0);
    }

    #[test]
    fn rs_wet_examples() {
        let f8 = Field::gf2m(3);
        let x = vec![3, 1, 4, 1, 5, 2, 6];
        let m = vec![7, 0, 2, 5, 1, 1, 3];
        let y = rs_wet_embed(&f8, &x, &m, &[]).unwrap();
        let h = crate::codes::rs_parity_check(&f8, 7, 7);
        assert_eq!(h.mul_transposed(&y).unwrap(), m);
        assert_eq!(rs_wet_embed(&f8, &x, &[], &(0..7).collect::<Vec<_>>()).unwrap(), x);
        assert!(rs_wet_embed(&f8, &x, &[1], &(0..7).collect::<Vec<_>>()).is_err());
        assert!(rs_wet_embed(&f8, &[0; 9], &[], &[]).is_err());
    }

    #[test]
    fn rank_bound_examples() {
        assert_eq!(rank_lower_bound(2, 10, 10).unwrap(), 0.288);
        assert_eq!(rank_lower_bound(2, 13, 10).unwrap(), 0.875);
        assert_eq!(rank_lower_bound(3, 10, 10).unwrap(), 0.5);
        assert!(rank_lower_bound(2, 9, 10).is_err());
    }

    #[test]
    fn cover_validation() {
        assert!(CoverObject::new(vec![0; 3], vec![1, 1]).is_err());
        assert!(CoverObject::new(vec![0; 3], vec![3]).is_err());
        assert_eq!(CoverObject::new(vec![0; 3], vec![2, 0]).unwrap().wet(), &[0, 2]);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn solvers_keep_wet_symbols_and_hit_message(
                x in proptest::collection::vec(0u32..3, 11),
                wet in proptest::collection::btree_set(0usize..11, 0..=3),
                m in proptest::collection::vec(0u32..3, 5),
            ) {
                let c = Code::golay(GolayVariant::Ternary);
                let wet: Vec<usize> = wet.into_iter().collect();
                let r = min_r(&c, wet.len()).unwrap();
                let cover = CoverObject::new(x.clone(), wet.clone()).unwrap();
                let msg = &m[..5 - r];
                let sol = solve_randomized(&c, &cover, msg, r).unwrap();
                prop_assert!(sol.changes <= 2);
                for &i in &wet {
                    prop_assert_eq!(sol.y[i], x[i]);
                }
                let s = c.syndrome(&sol.y).unwrap().into_symbols();
                prop_assert_eq!(&s[..5 - r], msg);

                match solve_wet_unbounded(c.parity_check().matrix(), &cover, &m) {
                    Ok(sol) => {
                        for &i in &wet {
                            prop_assert_eq!(sol.y[i], x[i]);
                        }
                        prop_assert_eq!(c.syndrome(&sol.y).unwrap().into_symbols(), m.clone());
                    }
                    Err(e) => prop_assert!(matches!(e, Error::RankDeficient { .. }), "{}", e),
                }
            }

            #[test]
            fn min_r_nondecreasing(p in 2usize..=6, q in prop_oneof![Just(2u32), Just(3u32)]) {
                let n = ((q.pow(p as u32) - 1) / (q - 1)) as usize;
                let mut prev = 0;
                for l in 0..=n {
                    let r = min_r_counting(q, n, p, 1, l).unwrap();
                    prop_assert!(r >= prev);
                    prev = r;
                }
            }
        }
    }
}
