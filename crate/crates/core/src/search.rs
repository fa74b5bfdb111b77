//! Bounded exhaustive searches.
//!
//! Results only ever certify the scanned range; `SearchReport::exhaustive`
//! records whether that range was covered completely.

use std::time::{Duration, Instant};

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize, Serializer};

use crate::arith::{binomial_row, ExactRational};
use crate::error::{invalid, Result};
use crate::param::{to_params, RationalTriple};
use crate::poly::{build_flt_poly, rational_root_test, UniPoly};

/// Default bound on `k` for the special-case Diophantine scan.
pub const DEFAULT_LEMMA31_BOUND: u64 = 10_000;
/// Default height bound for rational scans.
pub const DEFAULT_HEIGHT_BOUND: u64 = 50;

/// Number of `k` values per scan partition.
const RANGE_WIDTH: u64 = 250;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PythagoreanTriple {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub primitive: bool,
}

impl PythagoreanTriple {
    pub fn to_rational(&self) -> RationalTriple {
        RationalTriple::from_ints(self.a as i64, self.b as i64, self.c as i64)
    }
}

/// Coprime `k > l > 0`, standing for `h = k/l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DiophantineCandidate {
    pub k: u64,
    pub l: u64,
}

/// A rational point `P_n(g, h) = 0` with `g > 0`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RationalHit {
    pub h: ExactRational,
    pub g: ExactRational,
}

/// One partition of a scan: `k` in `[k_lo, k_hi]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RangeRecord {
    pub k_lo: u64,
    pub k_hi: u64,
    pub candidates: u64,
    pub hits: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchReport<H> {
    pub n: u32,
    pub bound: u64,
    pub hits: Vec<H>,
    pub candidates: u64,
    pub ranges: Vec<RangeRecord>,
    #[serde(rename = "elapsed_ms", serialize_with = "millis")]
    pub elapsed: Duration,
    pub exhaustive: bool,
}

fn millis<S: Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_u64(d.as_millis() as u64)
}

impl<H: Serialize + PartialEq> SearchReport<H> {
    /// Equal in everything except wall-clock time.
    pub fn same_outcome(&self, other: &Self) -> bool {
        self.n == other.n
            && self.bound == other.bound
            && self.hits == other.hits
            && self.candidates == other.candidates
            && self.ranges == other.ranges
            && self.exhaustive == other.exhaustive
    }

    /// One JSON record per scanned range followed by a summary record.
    pub fn to_json_lines(&self) -> serde_json::Result<String> {
        let mut out = String::new();
        for r in &self.ranges {
            let mut v = serde_json::to_value(r)?;
            v["record"] = "range".into();
            out.push_str(&serde_json::to_string(&v)?);
            out.push('\n');
        }
        let mut summary = serde_json::to_value(self)?;
        summary.as_object_mut().expect("struct").remove("ranges");
        summary["record"] = "summary".into();
        out.push_str(&serde_json::to_string(&summary)?);
        out.push('\n');
        Ok(out)
    }
}

/// Runs `scan_k` over `k = k_min..=bound` in fixed partitions, in parallel,
/// merging in ascending `k` regardless of scheduling.
fn partitioned_scan<H, F>(k_min: u64, bound: u64, scan_k: F) -> (Vec<H>, Vec<RangeRecord>)
where
    H: Send,
    F: Fn(u64) -> Result<(u64, Vec<H>)> + Sync,
{
    let starts: Vec<u64> = (k_min..=bound).step_by(RANGE_WIDTH as usize).collect();
    let parts: Vec<(RangeRecord, Vec<H>)> = starts
        .into_par_iter()
        .map(|k_lo| {
            let k_hi = (k_lo + RANGE_WIDTH - 1).min(bound);
            let mut candidates = 0;
            let mut hits = Vec::new();
            for k in k_lo..=k_hi {
                let (c, h) = scan_k(k).expect("scan step on validated input");
                candidates += c;
                hits.extend(h);
            }
            let record = RangeRecord {
                k_lo,
                k_hi,
                candidates,
                hits: hits.len(),
            };
            (record, hits)
        })
        .collect();
    let mut all_hits = Vec::new();
    let mut ranges = Vec::new();
    for (r, h) in parts {
        ranges.push(r);
        all_hits.extend(h);
    }
    (all_hits, ranges)
}

fn covers(ranges: &[RangeRecord], k_min: u64, bound: u64) -> bool {
    let mut next = k_min;
    for r in ranges {
        if r.k_lo != next {
            return false;
        }
        next = r.k_hi + 1;
    }
    next == bound + 1
}

/// All primitive triples with `c <= limit`, each in both leg orders, from
/// `(m^2 - r^2, 2mr, m^2 + r^2)` with `m > r >= 1` coprime of opposite parity.
pub fn gen_pythagorean(limit: u64) -> Result<Vec<PythagoreanTriple>> {
    if limit < 5 {
        return invalid(format!("limit {limit} < 5"));
    }
    let mut out = Vec::new();
    let mut m = 2u64;
    while m * m < limit {
        for r in 1..m {
            let c = m * m + r * r;
            if c > limit {
                break;
            }
            if (m - r) % 2 == 1 && m.gcd(&r) == 1 {
                let (x, y) = (m * m - r * r, 2 * m * r);
                out.push(PythagoreanTriple {
                    a: x,
                    b: y,
                    c,
                    primitive: true,
                });
                out.push(PythagoreanTriple {
                    a: y,
                    b: x,
                    c,
                    primitive: true,
                });
            }
        }
        m += 1;
    }
    out.sort_by_key(|t| (t.c, t.a));
    Ok(out)
}

/// Whether the triple's parameters satisfy `g = 2(h - 1)`.
pub fn check_n2_law(t: &PythagoreanTriple) -> Result<bool> {
    let p = to_params(&t.to_rational())?;
    let two = ExactRational::from(2);
    Ok(p.g == two * (&p.h - &ExactRational::one()))
}

fn lemma31_equation(k: u64, l: u64) -> bool {
    let (k, l) = (k as u128, l as u128);
    l * l * l == 6 * k * (k - l) * (k - l)
}

/// Euler's totient for `0..=n`.
fn totients(n: u64) -> Vec<u64> {
    let mut phi: Vec<u64> = (0..=n).collect();
    for p in 2..=n as usize {
        if phi[p] == p as u64 {
            for m in (p..=n as usize).step_by(p) {
                phi[m] -= phi[m] / p as u64;
            }
        }
    }
    phi
}

/// Scans every coprime `k > l > 0` with `k <= bound` for
/// `l^3 = 6 k (k - l)^2`.
pub fn lemma31_search(bound: u64) -> Result<SearchReport<DiophantineCandidate>> {
    if bound < 2 {
        return invalid(format!("bound {bound} < 2"));
    }
    let start = Instant::now();
    let phi = totients(bound);
    let (hits, ranges) = partitioned_scan(2, bound, |k| {
        // The equation test is cheaper than gcd, so it runs first; there are
        // phi(k) coprime candidates for each k.
        let hits = (1..k)
            .filter(|&l| lemma31_equation(k, l) && k.gcd(&l) == 1)
            .map(|l| DiophantineCandidate { k, l })
            .collect();
        Ok((phi[k as usize], hits))
    });
    let candidates = ranges.iter().map(|r| r.candidates).sum();
    let exhaustive = covers(&ranges, 2, bound);
    Ok(SearchReport {
        n: 3,
        bound,
        hits,
        candidates,
        ranges,
        elapsed: start.elapsed(),
        exhaustive,
    })
}

/// Independent second strategy for the same equation.
///
/// A solution forces `k | l^3`, hence `rad(k) | l`; only those `l` are
/// visited, each still tested for coprimality and the equation. For `k >= 2`
/// every visited `l` shares the factor `rad(k)` with `k`.
pub fn lemma31_divisibility_shortcut(bound: u64) -> Result<Vec<DiophantineCandidate>> {
    if bound < 2 {
        return invalid(format!("bound {bound} < 2"));
    }
    let mut radical = vec![1u64; bound as usize + 1];
    for p in 2..=bound as usize {
        if radical[p] == 1 {
            for m in (p..=bound as usize).step_by(p) {
                radical[m] *= p as u64;
            }
        }
    }
    let mut hits = Vec::new();
    for k in 2..=bound {
        let rad = radical[k as usize];
        for l in (rad..k).step_by(rad as usize) {
            if k.gcd(&l) == 1 && lemma31_equation(k, l) {
                hits.push(DiophantineCandidate { k, l });
            }
        }
    }
    Ok(hits)
}

/// `Q_n(h) = (h - 1)^(n-1) P_n(1/(h - 1), h)`, a polynomial in `h`:
/// `1 - sum_{i=1}^{n-1} C(n,i) (h^(n-i) - 1) (h - 1)^i`.
pub fn special_case_poly(n: u32) -> Result<UniPoly> {
    if n < 2 {
        return invalid(format!("exponent n = {n}, need n >= 2"));
    }
    let row = binomial_row(n);
    let one = UniPoly::constant(ExactRational::one());
    let h_minus_1 = UniPoly::from_ints(&[-1, 1]);
    let mut out = one.clone();
    for i in 1..n {
        let hk = &UniPoly::monomial(ExactRational::one(), (n - i) as usize) - &one;
        let term = (&hk * &h_minus_1.pow(i)).scale(&ExactRational::from(row[i as usize].clone()));
        out = &out - &term;
    }
    Ok(out)
}

/// For every `h = k/l` with `k > l >= 1`, `gcd(k, l) = 1`, `k <= height_bound`,
/// collects the positive rational roots `g` of `P_n(., h)`.
pub fn rational_solution_search(n: u32, height_bound: u64) -> Result<SearchReport<RationalHit>> {
    if n < 2 {
        return invalid(format!("exponent n = {n}, need n >= 2"));
    }
    if height_bound < 2 {
        return invalid(format!("height bound {height_bound} < 2"));
    }
    let start = Instant::now();
    let (hits, ranges) = partitioned_scan(2, height_bound, |k| {
        let mut hits = Vec::new();
        let mut candidates = 0;
        for l in (1..k).filter(|&l| k.gcd(&l) == 1) {
            candidates += 1;
            let h = ExactRational::new(k, l)?;
            for g in rational_root_test(&build_flt_poly(n, &h)?)? {
                if g.is_positive() {
                    hits.push(RationalHit { h: h.clone(), g });
                }
            }
        }
        Ok((candidates, hits))
    });
    let candidates = ranges.iter().map(|r| r.candidates).sum();
    let exhaustive = covers(&ranges, 2, height_bound);
    Ok(SearchReport {
        n,
        bound: height_bound,
        hits,
        candidates,
        ranges,
        elapsed: start.elapsed(),
        exhaustive,
    })
}
