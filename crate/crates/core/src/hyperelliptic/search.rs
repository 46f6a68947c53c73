use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{cartier_matrix, CartierData, HyperellipticCurve};
use crate::error::{Error, Result};
use crate::field::{Elem, Field, Poly};

/// `H_p(t) = sum_{i=0}^{e} binom(e, i)^2 t^i` with `e = (p-1)/2`, over the
/// given field.
pub fn hasse_polynomial(field: &Field) -> Poly {
    let p = field.p();
    let e = ((p - 1) / 2) as usize;
    let mut row = vec![1u64];
    for _ in 0..e {
        let mut next = vec![1u64; row.len() + 1];
        for i in 1..row.len() {
            next[i] = (row[i - 1] + row[i]) % p;
        }
        row = next;
    }
    Poly::new(
        field,
        row.iter()
            .map(|&b| field.from_int((b * b % p) as i64))
            .collect(),
    )
}

/// Roots of the Hasse polynomial in `F_{p^k}`, ascending. These are the
/// `lambda` for which `y^2 = x(x-1)(x-lambda)` is supersingular.
pub fn supersingular_lambdas(p: u64, k: usize) -> Result<(Field, Vec<Elem>)> {
    if p < 3 {
        return Err(Error::Invalid(
            "supersingular Legendre values need p >= 3".into(),
        ));
    }
    let field = Field::new(p, k)?;
    let roots = hasse_polynomial(&field).roots()?;
    Ok((field, roots))
}

/// `y^2 = x(x-1)(x-l1)(x-l2)(x-l3)`; branch points `0, 1, inf, l1, l2, l3`.
pub fn triple_curve(field: &Field, lambdas: [Elem; 3]) -> Result<HyperellipticCurve> {
    let mut roots = vec![field.zero(), field.one()];
    roots.extend_from_slice(&lambdas);
    HyperellipticCurve::new(Poly::from_roots(field, &roots))
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TriplePredicate {
    Ordinary,
    #[serde(rename = "prank0")]
    PRankZero,
}

impl TriplePredicate {
    pub fn holds(self, data: &CartierData, genus: usize) -> bool {
        match self {
            TriplePredicate::Ordinary => data.p_rank == genus,
            TriplePredicate::PRankZero => data.p_rank == 0,
        }
    }
}

#[derive(Clone, Debug)]
pub struct TripleSearch {
    pub p: u64,
    pub field: Field,
    pub predicate: TriplePredicate,
    /// Supersingular values in `F_{p^2}`, ascending.
    pub lambdas: Vec<Elem>,
    pub triples_total: usize,
    /// Triples checked up to and including the witness.
    pub examined: usize,
    pub witness: Option<[Elem; 3]>,
}

/// All unordered triples of distinct supersingular values, in ascending
/// lexicographic order of their sorted entries.
pub fn lambda_triples(lambdas: &[Elem]) -> Vec<[Elem; 3]> {
    let n = lambdas.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for l in j + 1..n {
                out.push([lambdas[i], lambdas[j], lambdas[l]]);
            }
        }
    }
    out
}

/// First triple (in canonical order) whose genus-2 curve satisfies the
/// predicate, searching the supersingular values rational over `F_{p^2}`.
pub fn search_triple(p: u64, predicate: TriplePredicate) -> Result<TripleSearch> {
    let (field, lambdas) = supersingular_lambdas(p, 2)?;
    let triples = lambda_triples(&lambdas);
    let hit = triples.par_iter().position_first(|&t| {
        let curve = triple_curve(&field, t).expect("distinct values outside {0,1}");
        predicate.holds(&cartier_matrix(&curve), 2)
    });
    Ok(TripleSearch {
        p,
        predicate,
        triples_total: triples.len(),
        examined: hit.map_or(triples.len(), |i| i + 1),
        witness: hit.map(|i| triples[i]),
        field,
        lambdas,
    })
}

pub fn search_ordinary_triple(p: u64) -> Result<TripleSearch> {
    search_triple(p, TriplePredicate::Ordinary)
}

pub fn search_prank0_triple(p: u64) -> Result<TripleSearch> {
    search_triple(p, TriplePredicate::PRankZero)
}

#[derive(Clone, Debug)]
pub struct WitnessEntry {
    pub p_rank: usize,
    /// A curve with this p-rank, if one was found within budget.
    pub curve: Option<HyperellipticCurve>,
}

#[derive(Clone, Debug)]
pub struct WitnessTable {
    pub p: u64,
    pub g: usize,
    pub entries: Vec<WitnessEntry>,
    pub examined: u64,
}

impl WitnessTable {
    pub fn is_complete(&self) -> bool {
        self.entries.iter().all(|e| e.curve.is_some())
    }
}

/// For every `0 <= f <= g`, look for `y^2 = h(x)` with `h` monic of degree
/// `2g+1` and p-rank `f`: first every such `h` over `F_p` in index order,
/// then seeded random `h` over `F_{p^2}`. At most `budget` candidates are
/// tested; entries not found stay empty.
pub fn prank_witness_table(p: u64, g: usize, budget: u64, seed: u64) -> Result<WitnessTable> {
    if p == 2 {
        return Err(Error::Invalid("odd characteristic required".into()));
    }
    if !(1..=3).contains(&g) {
        return Err(Error::OutOfRange(format!("genus {g} not in 1..=3")));
    }
    let deg = 2 * g + 1;
    let mut entries: Vec<WitnessEntry> = (0..=g)
        .map(|f| WitnessEntry {
            p_rank: f,
            curve: None,
        })
        .collect();
    let mut examined = 0u64;
    let mut missing = g + 1;
    let consider = |h: Poly, entries: &mut Vec<WitnessEntry>, missing: &mut usize| {
        if let Ok(curve) = HyperellipticCurve::new(h) {
            let r = cartier_matrix(&curve).p_rank;
            if entries[r].curve.is_none() {
                entries[r].curve = Some(curve);
                *missing -= 1;
            }
        }
    };

    let fp = Field::prime(p)?;
    let total = p.checked_pow(deg as u32).unwrap_or(u64::MAX);
    let mut idx = 0u64;
    while idx < total && examined < budget && missing > 0 {
        let mut coeffs = Vec::with_capacity(deg + 1);
        let mut v = idx;
        for _ in 0..deg {
            coeffs.push(fp.from_int((v % p) as i64));
            v /= p;
        }
        coeffs.push(fp.one());
        consider(Poly::new(&fp, coeffs), &mut entries, &mut missing);
        examined += 1;
        idx += 1;
    }

    if missing > 0 && examined < budget {
        let fq = Field::new(p, 2)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        while examined < budget && missing > 0 {
            let mut coeffs: Vec<Elem> = (0..deg)
                .map(|_| fq.elem(rng.gen_range(0..fq.order())).unwrap())
                .collect();
            coeffs.push(fq.one());
            consider(Poly::new(&fq, coeffs), &mut entries, &mut missing);
            examined += 1;
        }
    }
    Ok(WitnessTable {
        p,
        g,
        entries,
        examined,
    })
}

#[derive(Clone, Debug)]
pub struct KleinPart {
    pub curve: HyperellipticCurve,
    pub cartier: CartierData,
}

/// Invariants of the three hyperelliptic quotients of the `(Z/2)^2`-cover
/// defined by `y1^2 = f1`, `y2^2 = f2`. The sums are an aggregate over the
/// quotients; they equal the invariants of the cover itself only under
/// hypotheses this function does not check.
#[derive(Clone, Debug)]
pub struct KleinReport {
    pub parts: Vec<KleinPart>,
    pub p_rank_sum: usize,
    pub a_number_sum: usize,
    pub genus_sum: usize,
    pub common_factor_degree: usize,
}

impl KleinReport {
    pub const LABEL: &'static str = "aggregate of quotients";
}

pub fn klein_quotient_invariants(f1: &Poly, f2: &Poly) -> Result<KleinReport> {
    if f1.field() != f2.field() {
        return Err(Error::FieldMismatch);
    }
    let common = f1.gcd(f2);
    let f3 = (f1 * f2).divrem(&(&common * &common)).0;
    let mut parts = Vec::with_capacity(3);
    for (name, f) in [("f1", f1.clone()), ("f2", f2.clone()), ("f1*f2/gcd^2", f3)] {
        let curve = HyperellipticCurve::new(f.clone())
            .map_err(|e| Error::DegenerateQuotient(format!("{name} = {f}: {e}")))?;
        let cartier = cartier_matrix(&curve);
        parts.push(KleinPart { curve, cartier });
    }
    Ok(KleinReport {
        p_rank_sum: parts.iter().map(|p| p.cartier.p_rank).sum(),
        a_number_sum: parts.iter().map(|p| p.cartier.a_number).sum(),
        genus_sum: parts.iter().map(|p| p.curve.genus()).sum(),
        common_factor_degree: common.degree().unwrap_or(0),
        parts,
    })
}
