//! Dieudonné modules of p-torsion group schemes: `k[F,V]`-modules with `F`
//! semilinear for Frobenius, `V` semilinear for its inverse, and `FV = VF = 0`.
//!
//! Matrices act on coordinate columns: `F(x) = M_F · σ(x)`, `V(x) = M_V · σ⁻¹(x)`.
//! Column `j` of `M_F` is the image of basis vector `j`.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{semilinear_product, Elem, Field, Matrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DieudonneModule {
    field: Field,
    f: Matrix,
    v: Matrix,
    label: Option<String>,
}

impl DieudonneModule {
    pub fn new(f: Matrix, v: Matrix, label: Option<String>) -> Result<DieudonneModule> {
        let n = f.rows();
        if f.cols() != n || v.rows() != n || v.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "F is {}x{}, V is {}x{}",
                f.rows(),
                f.cols(),
                v.rows(),
                v.cols()
            )));
        }
        if f.field() != v.field() {
            return Err(Error::FieldMismatch);
        }
        let m = DieudonneModule {
            field: f.field().clone(),
            f,
            v,
            label,
        };
        if !m.fv().is_zero() || !m.vf().is_zero() {
            return Err(Error::Invalid("FV and VF must vanish".into()));
        }
        Ok(m)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.f.rows()
    }

    pub fn f_matrix(&self) -> &Matrix {
        &self.f
    }

    pub fn v_matrix(&self) -> &Matrix {
        &self.v
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn with_label(mut self, label: impl Into<String>) -> DieudonneModule {
        self.label = Some(label.into());
        self
    }

    /// Matrix of the linear map `F∘V`.
    pub fn fv(&self) -> Matrix {
        semilinear_product(&self.f, 1, &self.v, -1).unwrap().0
    }

    /// Matrix of the linear map `V∘F`.
    pub fn vf(&self) -> Matrix {
        semilinear_product(&self.v, -1, &self.f, 1).unwrap().0
    }

    /// `F(x) = 0  <=>  σ⁻¹(M_F) x = 0`.
    fn f_kernel_matrix(&self) -> Matrix {
        self.f.twist(-1)
    }

    fn v_kernel_matrix(&self) -> Matrix {
        self.v.twist(1)
    }

    pub fn ker_f_dim(&self) -> usize {
        self.dim() - self.f.rank()
    }

    pub fn ker_v_dim(&self) -> usize {
        self.dim() - self.v.rank()
    }

    /// `dim (ker F ∩ ker V)`.
    pub fn a_number(&self) -> usize {
        let stacked = self
            .f_kernel_matrix()
            .vstack(&self.v_kernel_matrix())
            .unwrap();
        self.dim() - stacked.rank()
    }

    /// Dimension of the stable image `∩ Im F^n`, reached by `n = dim`.
    pub fn p_rank(&self) -> usize {
        let n = self.dim();
        if n == 0 {
            return 0;
        }
        let mut acc = (self.f.clone(), 1i64);
        for _ in 1..n {
            acc = semilinear_product(&acc.0, acc.1, &self.f, 1).unwrap();
        }
        acc.0.rank()
    }

    /// `dim (Im F + Im V)`. Semilinear images are the column spaces.
    pub fn image_sum_dim(&self) -> usize {
        self.f.hstack(&self.v).unwrap().rank()
    }

    pub fn direct_sum(&self, other: &DieudonneModule) -> Result<DieudonneModule> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let label = match (&self.label, &other.label) {
            (Some(a), Some(b)) => Some(format!("{a}+{b}")),
            _ => None,
        };
        DieudonneModule::new(
            self.f.block_diag(&other.f)?,
            self.v.block_diag(&other.v)?,
            label,
        )
    }

    pub fn power(&self, n: usize) -> Result<DieudonneModule> {
        let mut out = DieudonneModule::new(
            Matrix::zero(&self.field, 0, 0),
            Matrix::zero(&self.field, 0, 0),
            None,
        )?;
        for _ in 0..n {
            out = out.direct_sum(self)?;
        }
        if let Some(l) = &self.label {
            out.label = Some(if n == 1 {
                l.clone()
            } else {
                format!("{l}^{n}")
            });
        }
        Ok(out)
    }
}

impl fmt::Display for DieudonneModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} dim={} p_rank={} a_number={} F={} V={}",
            self.label.as_deref().unwrap_or("D"),
            self.dim(),
            self.p_rank(),
            self.a_number(),
            self.f,
            self.v
        )
    }
}

/// Relation sets that generate the supported cyclic modules `k[F,V]/(R)`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Presentation {
    /// `(V, 1-F)`: multiplicative type.
    Multiplicative,
    /// `(F, 1-V)`: the constant étale group.
    Etale,
    /// `(F, V)`.
    Alpha,
    /// `(F^2, V^2, F+V)`: p-torsion of a supersingular elliptic curve.
    Supersingular,
    /// `(F^a, V^a, F^(a-1) - V^(a-1))` for `a` in `2..=4`.
    Truncated(usize),
}

impl Presentation {
    pub fn relations(self) -> String {
        match self {
            Presentation::Multiplicative => "V,1-F".into(),
            Presentation::Etale => "F,1-V".into(),
            Presentation::Alpha => "F,V".into(),
            Presentation::Supersingular => "F^2,V^2,F+V".into(),
            Presentation::Truncated(a) => format!("F^{a},V^{a},F^{}-V^{}", a - 1, a - 1),
        }
    }

    /// Parses a relation list such as `{F^3, V^3, F^2 - V^2}`. Only the shapes
    /// listed in [`Presentation`] are recognised.
    pub fn parse(text: &str) -> Result<Presentation> {
        let norm: String = text
            .chars()
            .filter(|c| !c.is_whitespace() && !matches!(c, '{' | '}' | '(' | ')'))
            .map(|c| c.to_ascii_uppercase())
            .collect();
        let mut rels: Vec<String> = norm
            .split(',')
            .map(|r| r.replace("^1", "").replace("−", "-"))
            .collect();
        rels.sort();
        let unsupported = || Error::UnsupportedPresentation(text.to_string());
        let is = |want: &[&str]| {
            let mut w: Vec<String> = want.iter().map(|s| s.to_string()).collect();
            w.sort();
            w == rels
        };
        for p in [
            Presentation::Multiplicative,
            Presentation::Etale,
            Presentation::Alpha,
            Presentation::Supersingular,
        ] {
            let r = p.relations();
            if is(&r.split(',').collect::<Vec<_>>()) {
                return Ok(p);
            }
        }
        if is(&["V+F", "F^2", "V^2"]) || is(&["-F-V", "F^2", "V^2"]) {
            return Ok(Presentation::Supersingular);
        }
        for a in 2..=4 {
            let lower = if a == 2 {
                ("F-V".to_string(), "V-F".to_string())
            } else {
                (
                    format!("F^{}-V^{}", a - 1, a - 1),
                    format!("V^{}-F^{}", a - 1, a - 1),
                )
            };
            let pa = format!("F^{a}");
            let va = format!("V^{a}");
            if is(&[&pa, &va, &lower.0]) || is(&[&pa, &va, &lower.1]) {
                return Ok(Presentation::Truncated(a));
            }
        }
        Err(unsupported())
    }
}

/// Builds `k[F,V]/(R)` on its monomial basis. For `Truncated(a)` the basis is
/// `1, F, .., F^(a-1), V, .., V^(a-2)` with `V^(a-1) = F^(a-1)`.
pub fn dm_from_presentation(field: &Field, pres: Presentation) -> Result<DieudonneModule> {
    let one = field.one();
    type Images = Vec<(usize, usize, Elem)>;
    let (n, f_images, v_images): (usize, Images, Images) = match pres {
        Presentation::Multiplicative => (1, vec![(0, 0, one)], vec![]),
        Presentation::Etale => (1, vec![], vec![(0, 0, one)]),
        Presentation::Alpha => (1, vec![], vec![]),
        // basis 1, F; V·1 = -F
        Presentation::Supersingular => (2, vec![(1, 0, one)], vec![(1, 0, field.neg(one))]),
        Presentation::Truncated(a) => {
            if !(2..=4).contains(&a) {
                return Err(Error::UnsupportedPresentation(pres.relations()));
            }
            // indices: F^i -> i for 0 <= i < a; V^j -> a + j - 1 for 1 <= j <= a-2
            let n = 2 * a - 2;
            let top = a - 1;
            let v_index = |j: usize| if j == a - 1 { top } else { a + j - 1 };
            let mut fs = Vec::new();
            for i in 0..a - 1 {
                fs.push((i + 1, i, one));
            }
            let mut vs = vec![(v_index(1), 0, one)];
            for j in 1..a - 1 {
                vs.push((v_index(j + 1), v_index(j), one));
            }
            (n, fs, vs)
        }
    };
    let build = |entries: &[(usize, usize, _)]| {
        let mut m = Matrix::zero(field, n, n);
        for &(r, c, x) in entries {
            m.set(r, c, x);
        }
        m
    };
    DieudonneModule::new(
        build(&f_images),
        build(&v_images),
        Some(preset_name(pres).into()),
    )
}

fn preset_name(pres: Presentation) -> &'static str {
    match pres {
        Presentation::Multiplicative => "mup",
        Presentation::Etale => "Zp",
        Presentation::Alpha => "alphap",
        Presentation::Supersingular => "M",
        Presentation::Truncated(2) => "T2",
        Presentation::Truncated(3) => "N",
        Presentation::Truncated(4) => "Q",
        Presentation::Truncated(_) => "T",
    }
}

pub const PRESET_NAMES: [&str; 6] = ["mup", "Zp", "alphap", "M", "N", "Q"];

pub fn preset(field: &Field, name: &str) -> Result<DieudonneModule> {
    let pres = match name {
        "mup" | "mu_p" | "mu" => Presentation::Multiplicative,
        "Zp" | "Z/p" | "zp" => Presentation::Etale,
        "alphap" | "alpha_p" | "alpha" => Presentation::Alpha,
        "M" => Presentation::Supersingular,
        "N" => Presentation::Truncated(3),
        "Q" => Presentation::Truncated(4),
        "T2" => Presentation::Truncated(2),
        other => return Presentation::parse(other).and_then(|p| dm_from_presentation(field, p)),
    };
    dm_from_presentation(field, pres)
}

/// Direct sum of presets separated by `,` or `+`; a summand may carry a
/// multiplicity as `M^3`.
pub fn parse_sum(field: &Field, text: &str) -> Result<DieudonneModule> {
    let mut out: Option<DieudonneModule> = None;
    for item in text
        .split([',', '+'])
        .map(str::trim)
        .filter(|s| !s.is_empty())
    {
        let (name, mult) = match item.split_once('^') {
            Some((n, e)) => (
                n.trim(),
                e.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad multiplicity in {item:?}")))?,
            ),
            None => (item, 1),
        };
        let part = preset(field, name)?.power(mult)?;
        out = Some(match out {
            None => part,
            Some(acc) => acc.direct_sum(&part)?,
        });
    }
    let mut m = out.ok_or_else(|| Error::Parse("empty sum".into()))?;
    m.label = Some(text.trim().to_string());
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    #[test]
    fn basic_presets() {
        let f = fp(5);
        let inv = |n: &str| {
            let m = preset(&f, n).unwrap();
            (m.dim(), m.p_rank(), m.a_number())
        };
        assert_eq!(inv("mup"), (1, 1, 0));
        assert_eq!(inv("Zp"), (1, 0, 0));
        assert_eq!(inv("alphap"), (1, 0, 1));
        assert_eq!(inv("M"), (2, 0, 1));
        assert_eq!(inv("N"), (4, 0, 1));
        assert_eq!(inv("Q"), (6, 0, 1));
    }

    #[test]
    fn n_kernels_and_images() {
        let n = preset(&fp(3), "N").unwrap();
        assert_eq!((n.ker_f_dim(), n.ker_v_dim()), (2, 2));
        assert_eq!(n.a_number(), 1);
        assert_eq!(n.image_sum_dim(), 3);
    }

    #[test]
    fn parse_relations() {
        assert_eq!(
            Presentation::parse("{F^3, V^3, F^2 - V^2}").unwrap(),
            Presentation::Truncated(3)
        );
        assert_eq!(
            Presentation::parse("(V, 1-F)").unwrap(),
            Presentation::Multiplicative
        );
        assert_eq!(
            Presentation::parse("F+V,F^2,V^2").unwrap(),
            Presentation::Supersingular
        );
        assert!(matches!(
            Presentation::parse("F^3,V^2"),
            Err(Error::UnsupportedPresentation(_))
        ));
    }

    #[test]
    fn sums_are_additive() {
        let f = fp(7);
        let m = parse_sum(&f, "M,M,Zp+mup").unwrap();
        assert_eq!((m.dim(), m.p_rank(), m.a_number()), (6, 1, 2));
        let m3 = parse_sum(&f, "M^3").unwrap();
        assert_eq!((m3.p_rank(), m3.a_number()), (0, 3));
    }

    #[test]
    fn rejects_nonzero_fv() {
        let f = fp(3);
        let one = Matrix::identity(&f, 1);
        assert!(DieudonneModule::new(one.clone(), one, None).is_err());
    }

    #[test]
    fn works_over_extension_fields() {
        let f = Field::new(3, 2).unwrap();
        let q = preset(&f, "Q").unwrap();
        assert_eq!((q.p_rank(), q.a_number()), (0, 1));
        let s = parse_sum(&f, "Zp+mup").unwrap();
        assert_eq!((s.p_rank(), s.a_number()), (1, 0));
    }
}
