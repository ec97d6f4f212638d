//! Exact-integer lower bound on the Wiener index from order, size and
//! diameter, plus the Moore bound used to trade the diameter for the maximum
//! degree.
//!
//! For a connected graph with `n` vertices, `m` edges and diameter `d >= 2`:
//!
//! ```text
//! W(G) >= n(n-1) - m + d(d-1)(d-2)/6 + (n-d-1) * z(d)
//! z(d) = ((d-3)/2)^2      for odd d
//!        (d-2)(d-4)/4     for even d
//! ```
//!
//! `n(n-1) - m` is what every pair contributes if counted at distance 2
//! (edges pay one less). The second term is the surplus of pairs on a
//! diametral path; the third is the guaranteed surplus between each
//! off-path vertex and the path. Every division is exact.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metrics;

fn exact_div(num: u128, den: u128) -> u128 {
    assert_eq!(num % den, 0, "non-integral bound term {num}/{den}");
    num / den
}

fn narrow(v: u128, what: &'static str) -> Result<u64> {
    u64::try_from(v).map_err(|_| Error::Overflow(what))
}

/// Surplus `Σ (dist - 2)` over pairs on a diametral path of length `d`:
/// `d(d-1)(d-2)/6`.
///
/// Panics if the value exceeds `u64` (d above roughly 4.8 million).
pub fn x_excess(d: u64) -> u64 {
    checked_x_excess(d).expect("x_excess overflows u64")
}

fn checked_x_excess(d: u64) -> Result<u64> {
    if d < 2 {
        return Ok(0);
    }
    let d = d as u128;
    let product = (d * (d - 1))
        .checked_mul(d - 2)
        .ok_or(Error::Overflow("x_excess"))?;
    narrow(exact_div(product, 6), "x_excess")
}

/// Guaranteed surplus between one off-path vertex and a diametral path of
/// length `d`.
pub fn z_excess_per_vertex(d: u64) -> Result<u64> {
    if d < 2 {
        return Err(Error::NotApplicable(format!(
            "off-path surplus needs diameter >= 2, got {d}"
        )));
    }
    let d = d as u128;
    let v = if d % 2 == 1 {
        let half = exact_div(d - 3, 2);
        half * half
    } else if d == 2 {
        0
    } else {
        exact_div((d - 2) * (d - 4), 4)
    };
    narrow(v, "z_excess_per_vertex")
}

fn check_order_size(n: u64, m: u64) -> Result<()> {
    let max_m = n as u128 * (n as u128).saturating_sub(1) / 2;
    if (m as u128) > max_m {
        return Err(Error::InconsistentInputs(format!(
            "size {m} exceeds C({n}, 2) = {max_m}"
        )));
    }
    if n >= 1 && m < n - 1 {
        return Err(Error::InconsistentInputs(format!(
            "size {m} below n - 1 = {}; no connected graph exists",
            n - 1
        )));
    }
    Ok(())
}

/// The lower bound on `W(G)` for order `n`, size `m`, diameter `d >= 2`.
pub fn theorem1_bound(n: u64, m: u64, d: u64) -> Result<u64> {
    if d < 2 {
        return Err(Error::NotApplicable(format!(
            "the bound requires diameter d >= 2, got d = {d}"
        )));
    }
    if n <= d {
        return Err(Error::InconsistentInputs(format!(
            "order {n} cannot carry diameter {d}"
        )));
    }
    check_order_size(n, m)?;
    let (n128, m128) = (n as u128, m as u128);
    let base = n128 * (n128 - 1) - m128;
    let off_path = (n - d - 1) as u128;
    let total = off_path
        .checked_mul(z_excess_per_vertex(d)? as u128)
        .and_then(|z| z.checked_add(base))
        .and_then(|t| t.checked_add(checked_x_excess(d).ok()? as u128))
        .ok_or(Error::Overflow("theorem1_bound"))?;
    narrow(total, "theorem1_bound")
}

/// `n(n-1) - m`; the exact Wiener index whenever the diameter is 2.
pub fn d2_exact_wiener(n: u64, m: u64) -> u64 {
    (n * n.saturating_sub(1)).saturating_sub(m)
}

/// Maximum order admitted by maximum degree `delta` and diameter `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MooreResult {
    pub delta: u64,
    pub d: u64,
    pub n_max: u128,
}

/// `1 + Δ Σ_{i<d} (Δ-1)^i`, saturating at `u128::MAX`.
fn moore_n_max(delta: u64, d: u64) -> u128 {
    let branch = (delta - 1) as u128;
    let mut layer: u128 = delta as u128;
    let mut total: u128 = 1;
    for _ in 0..d {
        total = total.saturating_add(layer);
        layer = layer.saturating_mul(branch);
    }
    total
}

pub fn moore_bound(delta: u64, d: u64) -> Result<MooreResult> {
    if delta < 2 {
        return Err(Error::NotApplicable(format!(
            "Moore bound needs maximum degree >= 2, got {delta}"
        )));
    }
    if d < 1 {
        return Err(Error::InvalidParameter("Moore bound needs d >= 1".into()));
    }
    let n_max = moore_n_max(delta, d);
    if n_max == u128::MAX {
        return Err(Error::Overflow("moore_bound"));
    }
    Ok(MooreResult { delta, d, n_max })
}

/// Smallest `d >= 1` whose Moore bound admits `n` vertices.
pub fn diameter_lb_from_moore(n: u64, delta: u64) -> Result<u64> {
    if delta < 2 {
        return Err(Error::NotApplicable(format!(
            "Moore bound needs maximum degree >= 2, got {delta}"
        )));
    }
    if n < 2 {
        return Err(Error::InvalidParameter(format!("order {n} below 2")));
    }
    let mut d = 1;
    while moore_n_max(delta, d) < n as u128 {
        d += 1;
    }
    Ok(d)
}

/// Lower bound on `W(G)` from order, size and maximum degree alone.
///
/// The diameter lower bound from the Moore bound is raised to 2 unless the
/// graph could be complete (`m = C(n, 2)`), which has diameter 1.
pub fn bound_from_nm_delta(n: u64, m: u64, delta: u64) -> Result<u64> {
    let d_min = diameter_lb_from_moore(n, delta)?;
    theorem1_bound(n, m, clamped_diameter(n, m, d_min)?)
}

/// The diameter fed into [`theorem1_bound`] by [`bound_from_nm_delta`].
pub fn clamped_diameter(n: u64, m: u64, d_min: u64) -> Result<u64> {
    if d_min >= 2 {
        return Ok(d_min);
    }
    check_order_size(n, m)?;
    if m as u128 == n as u128 * (n as u128 - 1) / 2 {
        return Err(Error::NotApplicable(format!(
            "m = C({n}, 2): the graph may be complete (diameter 1)"
        )));
    }
    Ok(2)
}

/// Wiener index against the bound for one connected graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub n: u64,
    pub m: u64,
    pub d: u64,
    pub wiener: u64,
    /// `None` when the bound does not apply (`d < 2`).
    pub bound: Option<u64>,
    pub gap: Option<i64>,
    pub tight: bool,
    pub applicable: bool,
}

impl BoundReport {
    /// Assembles a report from already-computed invariants.
    pub fn from_parts(n: u64, m: u64, d: u64, wiener: u64) -> Result<Self> {
        let applicable = d >= 2;
        let bound = if applicable {
            Some(theorem1_bound(n, m, d)?)
        } else {
            None
        };
        let gap = bound.map(|b| wiener as i64 - b as i64);
        Ok(Self {
            n,
            m,
            d,
            wiener,
            bound,
            gap,
            tight: gap == Some(0),
            applicable,
        })
    }

    pub fn is_violation(&self) -> bool {
        self.gap.is_some_and(|g| g < 0)
    }
}

pub fn evaluate(g: &Graph) -> Result<BoundReport> {
    let dist = metrics::distance_distribution(g)?;
    BoundReport::from_parts(
        g.order() as u64,
        g.size() as u64,
        dist.diameter() as u64,
        dist.wiener_index(),
    )
}

pub fn evaluate_par(g: &Graph) -> Result<BoundReport> {
    let dist = metrics::distance_distribution_par(g)?;
    BoundReport::from_parts(
        g.order() as u64,
        g.size() as u64,
        dist.diameter() as u64,
        dist.wiener_index(),
    )
}
