//! Symmetric Newton polygons of `g`-dimensional abelian varieties.
//!
//! A polygon is stored as its `2g` slopes in nondecreasing order. It runs from
//! `(0,0)` to `(2g, g)`, the slope multiset is invariant under `s -> 1 - s`,
//! and every breakpoint has integral coordinates. Because breakpoints are
//! integral, comparing heights at `x = 0..=2g` decides whether one polygon
//! lies above another.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Slope = Ratio<i64>;

/// Largest genus for which the full poset is enumerated.
pub const MAX_ENUM_GENUS: usize = 12;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NewtonPolygon {
    g: usize,
    slopes: Vec<Slope>,
}

/// Validate `2g` slopes (in any order) as a symmetric Newton polygon.
pub fn np_validate(mut slopes: Vec<Slope>) -> Result<NewtonPolygon> {
    if slopes.is_empty() || !slopes.len().is_multiple_of(2) {
        return Err(Error::OutOfRange(format!(
            "need a positive even number of slopes, got {}",
            slopes.len()
        )));
    }
    let zero = Slope::zero();
    let one = Slope::one();
    if let Some(s) = slopes.iter().find(|s| **s < zero || **s > one) {
        return Err(Error::OutOfRange(format!("slope {s} outside [0,1]")));
    }
    slopes.sort();
    let n = slopes.len();
    if (0..n).any(|i| slopes[i] + slopes[n - 1 - i] != one) {
        return Err(Error::NotSymmetric);
    }
    let mut height = Slope::zero();
    for i in 0..n {
        if i > 0 && slopes[i] != slopes[i - 1] && !height.is_integer() {
            return Err(Error::NonIntegralBreakpoint(i));
        }
        height += slopes[i];
    }
    Ok(NewtonPolygon { g: n / 2, slopes })
}

impl NewtonPolygon {
    /// `g` slopes 0 and `g` slopes 1.
    pub fn ordinary(g: usize) -> NewtonPolygon {
        let mut slopes = vec![Slope::zero(); g];
        slopes.extend(vec![Slope::one(); g]);
        NewtonPolygon { g, slopes }
    }

    /// All `2g` slopes equal to 1/2.
    pub fn supersingular(g: usize) -> NewtonPolygon {
        NewtonPolygon {
            g,
            slopes: vec![Slope::new(1, 2); 2 * g],
        }
    }

    /// Slope `a/b` and `1 - a/b`, each with multiplicity `mult`.
    pub fn pair(a: i64, b: i64, mult: usize) -> Result<NewtonPolygon> {
        let s = Slope::new(a, b);
        let mut slopes = vec![s; mult];
        slopes.extend(vec![Slope::one() - s; mult]);
        np_validate(slopes)
    }

    pub fn genus(&self) -> usize {
        self.g
    }

    pub fn slopes(&self) -> &[Slope] {
        &self.slopes
    }

    /// Heights at `x = 0..=2g`.
    pub fn heights(&self) -> Vec<Slope> {
        let mut out = Vec::with_capacity(self.slopes.len() + 1);
        let mut h = Slope::zero();
        out.push(h);
        for s in &self.slopes {
            h += s;
            out.push(h);
        }
        out
    }

    /// Multiplicity of slope 0.
    pub fn p_rank(&self) -> usize {
        self.slopes.iter().take_while(|s| s.is_zero()).count()
    }

    pub fn is_supersingular(&self) -> bool {
        self.slopes.iter().all(|s| *s == Slope::new(1, 2))
    }

    /// Whether every slope, in lowest terms, has denominator at least
    /// `threshold`.
    pub fn has_large_denominators(&self, threshold: i64) -> bool {
        self.slopes.iter().all(|s| *s.denom() >= threshold)
    }

    /// Multiset union of slopes; always a valid polygon of genus `g' + g''`.
    pub fn concat(&self, other: &NewtonPolygon) -> NewtonPolygon {
        let mut slopes = self.slopes.clone();
        slopes.extend_from_slice(&other.slopes);
        np_validate(slopes).expect("union of symmetric polygons is symmetric and integral")
    }

    /// True when no point of `self` lies below `other` (same genus).
    pub fn lies_on_or_above(&self, other: &NewtonPolygon) -> bool {
        self.g == other.g
            && self
                .heights()
                .iter()
                .zip(other.heights())
                .all(|(a, b)| *a >= b)
    }

    /// Run-length form, e.g. `"5/11x11,6/11x11"`.
    pub fn compact(&self) -> String {
        let mut runs: Vec<(Slope, usize)> = Vec::new();
        for s in &self.slopes {
            match runs.last_mut() {
                Some((t, n)) if t == s => *n += 1,
                _ => runs.push((*s, 1)),
            }
        }
        runs.iter()
            .map(|(s, n)| format!("{s}x{n}"))
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for NewtonPolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.slopes.iter().map(|s| s.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for NewtonPolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NP[{}]", self.compact())
    }
}

/// Parse `"0,1/2,1/2,1"` or the run-length form `"5/11x11,6/11x11"`.
pub fn parse_slopes(s: &str) -> Result<Vec<Slope>> {
    let mut out = Vec::new();
    for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let (value, mult) = match item.split_once(['x', '*']) {
            Some((v, m)) => (
                v,
                m.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad multiplicity in {item:?}")))?,
            ),
            None => (item, 1),
        };
        let slope = match value.split_once('/') {
            Some((a, b)) => {
                let a: i64 = a.parse().map_err(|_| Error::Parse(format!("{item:?}")))?;
                let b: i64 = b.parse().map_err(|_| Error::Parse(format!("{item:?}")))?;
                if b == 0 {
                    return Err(Error::Parse(format!("zero denominator in {item:?}")));
                }
                Slope::new(a, b)
            }
            None => Slope::from_integer(
                value
                    .parse()
                    .map_err(|_| Error::Parse(format!("{item:?}")))?,
            ),
        };
        out.extend(std::iter::repeat_n(slope, mult));
    }
    Ok(out)
}

/// All symmetric Newton polygons of genus `g` with the "lies above" order.
pub struct NPPoset {
    g: usize,
    nodes: Vec<NewtonPolygon>,
    /// `above[i][j]`: node `i` lies on or above node `j`.
    above: Vec<Vec<bool>>,
}

/// Enumerate every symmetric polygon of genus `g`: choose the part of slope
/// below 1/2 as segments `a/b` of length a multiple of `b`, fill the middle
/// with slope 1/2, and mirror.
pub fn np_enumerate(g: usize) -> Result<NPPoset> {
    if g == 0 {
        return Err(Error::OutOfRange("genus must be at least 1".into()));
    }
    if g > MAX_ENUM_GENUS {
        return Err(Error::TooLarge(format!(
            "genus {g} exceeds enumeration bound {MAX_ENUM_GENUS}"
        )));
    }
    let half = Slope::new(1, 2);
    let mut candidates: Vec<Slope> = (1..=g as i64)
        .flat_map(|b| (0..b).map(move |a| (a, b)))
        .filter(|(a, b)| a.gcd(b) == 1)
        .map(|(a, b)| Slope::new(a, b))
        .filter(|s| *s < half)
        .collect();
    candidates.sort();
    candidates.dedup();

    let mut nodes = Vec::new();
    let mut lower = Vec::new();
    collect_lower(&candidates, 0, g, &mut lower, &mut nodes);
    nodes.sort();
    let n = nodes.len();
    let heights: Vec<Vec<Slope>> = nodes.iter().map(|p| p.heights()).collect();
    let above = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| heights[i].iter().zip(&heights[j]).all(|(a, b)| a >= b))
                .collect()
        })
        .collect();
    Ok(NPPoset { g, nodes, above })
}

fn collect_lower(
    cands: &[Slope],
    used: usize,
    g: usize,
    lower: &mut Vec<Slope>,
    out: &mut Vec<NewtonPolygon>,
) {
    let Some((&s, rest)) = cands.split_first() else {
        let mut slopes = lower.clone();
        slopes.extend(vec![Slope::new(1, 2); 2 * (g - used)]);
        slopes.extend(lower.iter().map(|t| Slope::one() - t));
        out.push(np_validate(slopes).expect("constructed polygon is valid"));
        return;
    };
    let b = *s.denom() as usize;
    let mut len = 0;
    while used + len <= g {
        let mark = lower.len();
        lower.extend(std::iter::repeat_n(s, len));
        collect_lower(rest, used + len, g, lower, out);
        lower.truncate(mark);
        len += b;
    }
}

impl NPPoset {
    pub fn genus(&self) -> usize {
        self.g
    }

    pub fn nodes(&self) -> &[NewtonPolygon] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn index_of(&self, p: &NewtonPolygon) -> Option<usize> {
        self.nodes.binary_search(p).ok()
    }

    /// Node `i` lies on or above node `j`.
    pub fn lies_on_or_above(&self, i: usize, j: usize) -> bool {
        self.above[i][j]
    }

    /// Elements lying on or below every other element.
    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| (0..self.len()).all(|j| self.above[j][i]))
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| (0..self.len()).all(|j| self.above[i][j]))
            .collect()
    }

    /// Cover relations `(upper, lower)` of the Hasse diagram.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let strict = |i: usize, j: usize| i != j && self.above[i][j];
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if strict(i, j) && !(0..n).any(|m| strict(i, m) && strict(m, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Hasse diagram in Graphviz DOT, edges pointing downwards.
    pub fn to_dot(&self) -> String {
        let mut s = format!("digraph newton_polygons_g{} {{\n", self.g);
        for (i, node) in self.nodes.iter().enumerate() {
            s.push_str(&format!("  n{i} [label=\"{}\"];\n", node.compact()));
        }
        for (a, b) in self.covers() {
            s.push_str(&format!("  n{a} -> n{b};\n"));
        }
        s.push_str("}\n");
        s
    }
}

/// Length of the longest chain from `from` down to `to`, where `to` must lie
/// on or below `from`. Chains are counted in edges.
pub fn np_longest_chain(
    poset: &NPPoset,
    from: &NewtonPolygon,
    to: &NewtonPolygon,
) -> Result<usize> {
    let (Some(top), Some(bottom)) = (poset.index_of(from), poset.index_of(to)) else {
        return Err(Error::Invalid("polygon not in poset".into()));
    };
    if !poset.lies_on_or_above(top, bottom) {
        return Err(Error::NotComparable);
    }
    let mut interval: Vec<usize> = (0..poset.len())
        .filter(|&i| poset.lies_on_or_above(top, i) && poset.lies_on_or_above(i, bottom))
        .collect();
    // a strictly lower polygon has strictly smaller total height
    let area = |i: usize| -> Slope { poset.nodes[i].heights().iter().sum() };
    let areas: BTreeMap<usize, Slope> = interval.iter().map(|&i| (i, area(i))).collect();
    interval.sort_by(|a, b| areas[a].cmp(&areas[b]));
    let mut best: BTreeMap<usize, usize> = BTreeMap::new();
    for (pos, &i) in interval.iter().enumerate() {
        let len = interval[..pos]
            .iter()
            .filter(|&&j| j != i && poset.lies_on_or_above(i, j))
            .filter_map(|j| best.get(j).map(|l| l + 1))
            .max()
            .unwrap_or(0);
        best.insert(i, if i == bottom { 0 } else { len });
    }
    Ok(best[&top])
}
