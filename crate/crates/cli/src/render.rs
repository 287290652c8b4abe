//! Canonical JSON and plain-text renderings of library results.
//!
//! JSON coefficients use the library's exact serialization (integer
//! coefficient lists of numerator and denominator in α). With `--alpha`
//! every coefficient is evaluated and printed as a rational string instead.

use std::io::Write;

use clap::ValueEnum;
use num_rational::BigRational;
use serde_json::{json, Value};

use vvjack_core::coeffield::AlphaFraction;
use vvjack_core::combinatorics::{Filling, Rst};
use vvjack_core::jack::{sym_coefficients, CoefficientKind, VanishingPattern, VanishingVector};
use vvjack_core::vvpoly::VvPoly;
use vvjack_core::ybgraph::{spectral_vector, ComponentHT, EdgeLabel};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// One command result in both renderings.
pub struct Doc {
    pub json: Value,
    pub text: String,
}

pub struct Renderer {
    pub format: Format,
    alpha: Option<BigRational>,
}

impl Renderer {
    pub fn new(format: Format, alpha: Option<BigRational>) -> Self {
        Renderer { format, alpha }
    }

    pub fn emit(&self, out: &mut impl Write, doc: &Doc) -> Result<(), CliError> {
        let body = match self.format {
            Format::Json => serde_json::to_string_pretty(&doc.json).map_err(|e| CliError::Domain(e.to_string()))?,
            Format::Text => doc.text.trim_end().to_string(),
        };
        writeln!(out, "{body}").map_err(|e| CliError::Domain(e.to_string()))
    }

    fn evaluate(&self, x: &AlphaFraction) -> Result<Option<BigRational>, CliError> {
        self.alpha.as_ref().map(|a| x.evaluate(a)).transpose().map_err(CliError::from)
    }

    pub fn scalar(&self, x: &AlphaFraction) -> Result<Value, CliError> {
        Ok(match self.evaluate(x)? {
            Some(q) => Value::String(q.to_string()),
            None => serde_json::to_value(x).map_err(|e| CliError::Domain(e.to_string()))?,
        })
    }

    pub fn scalar_text(&self, x: &AlphaFraction) -> Result<String, CliError> {
        Ok(match self.evaluate(x)? {
            Some(q) => q.to_string(),
            None => x.to_text(),
        })
    }

    fn scalars(&self, xs: &[AlphaFraction]) -> Result<Vec<Value>, CliError> {
        xs.iter().map(|x| self.scalar(x)).collect()
    }

    fn scalars_text(&self, xs: &[AlphaFraction]) -> Result<String, CliError> {
        let parts: Result<Vec<String>, CliError> = xs.iter().map(|x| self.scalar_text(x)).collect();
        Ok(format!("[{}]", parts?.join(", ")))
    }

    /// The `{"weight", "tableau", "spectral"}` block identifying `J_{v,τ}`.
    pub fn metadata(&self, v: &[u32], tau: &Rst) -> Result<Value, CliError> {
        let mut m = json!({
            "weight": v,
            "tableau": tau.to_text(),
            "spectral": self.scalars(&spectral_vector(tau, v))?,
        });
        if let Some(a) = &self.alpha {
            m["alpha"] = Value::String(a.to_string());
        }
        Ok(m)
    }

    fn metadata_text(&self, v: &[u32], tau: &Rst) -> Result<String, CliError> {
        Ok(format!(
            "weight: {}\ntableau: {}\nspectral: {}\n",
            join(v),
            tau.to_text(),
            self.scalars_text(&spectral_vector(tau, v))?
        ))
    }

    /// The polynomial in the library's JSON schema, evaluated if requested.
    pub fn poly(&self, p: &VvPoly) -> Result<Value, CliError> {
        if self.alpha.is_none() {
            return serde_json::to_value(p.to_json()).map_err(|e| CliError::Domain(e.to_string()));
        }
        let mut terms = Vec::new();
        for (u, k, c) in p.sorted_terms() {
            let q = self.evaluate(c)?.expect("alpha is set");
            if q != BigRational::from_integer(0.into()) {
                terms.push(json!({ "exp": u, "tableau": k, "coeff": q.to_string() }));
            }
        }
        Ok(json!({ "shape": p.shape().parts(), "N": p.n(), "terms": terms }))
    }

    fn poly_text(&self, p: &VvPoly) -> Result<String, CliError> {
        if p.is_zero() {
            return Ok("0\n".into());
        }
        let mut s = String::new();
        let tabs = p.context().tableaux();
        for (u, k, c) in p.sorted_terms() {
            let coeff = self.scalar_text(c)?;
            s.push_str(&format!("({coeff}) x^[{}] ⊗ {}\n", join(u), tabs[k].to_text()));
        }
        Ok(s)
    }

    /// A polynomial indexed by `(v, τ)`: metadata merged with the schema.
    pub fn jack(&self, p: &VvPoly, v: &[u32], tau: &Rst) -> Result<Doc, CliError> {
        let mut json = self.poly(p)?;
        json["metadata"] = self.metadata(v, tau)?;
        let text = format!("{}{}", self.metadata_text(v, tau)?, self.poly_text(p)?);
        Ok(Doc { json, text })
    }

    /// A symmetrized polynomial together with its coefficient table. With
    /// `normalize` both are divided by the sink coefficient.
    pub fn symmetrized(
        &self,
        p: &VvPoly,
        t: &Filling,
        kind: CoefficientKind,
        normalize: bool,
    ) -> Result<Doc, CliError> {
        let table = sym_coefficients(t, kind)?;
        let comp = &table.component;
        let (p, values) = if normalize {
            let inv = table.sink_value().inv()?;
            (p.scale(&inv), table.values.iter().map(|c| c * &inv).collect())
        } else {
            (p.clone(), table.values.clone())
        };
        let mut coefficients = Vec::new();
        let mut text = format!("filling: {}\ncoefficients ({kind:?}):\n", t.to_text());
        for (x, c) in comp.vertices.iter().zip(&values) {
            coefficients.push(json!({
                "weight": x.weight,
                "tableau": x.tableau.to_text(),
                "coeff": self.scalar(c)?,
            }));
            text.push_str(&format!(
                "  {} | {} : {}\n",
                x.tableau.to_text(),
                join(&x.weight),
                self.scalar_text(c)?
            ));
        }
        let mut json = self.poly(&p)?;
        json["metadata"] = json!({
            "filling": t.to_text(),
            "kind": format!("{kind:?}"),
            "normalized": normalize,
            "coefficients": coefficients,
        });
        text.push_str(&self.poly_text(&p)?);
        Ok(Doc { json, text })
    }

    /// Vertices as `[tableau, weight, spectral, rank]`, edges as
    /// `[from, to, kind, i]`.
    pub fn component(&self, comp: &ComponentHT) -> Result<Doc, CliError> {
        let mut vertices = Vec::new();
        let mut text = format!("filling: {}\nvertices:\n", comp.filling.to_text());
        for (k, x) in comp.vertices.iter().enumerate() {
            vertices.push(json!([x.tableau.to_text(), x.weight, self.scalars(&x.spectral)?, x.rank]));
            text.push_str(&format!(
                "  {k}: {} | {} | {} | [{}]\n",
                x.tableau.to_text(),
                join(&x.weight),
                self.scalars_text(&x.spectral)?,
                join(&x.rank)
            ));
        }
        text.push_str("edges:\n");
        let mut edges = Vec::new();
        for &(f, t, l) in &comp.edges {
            let (kind, i) = match l {
                EdgeLabel::Step(i) => ("step", Some(i)),
                EdgeLabel::Jump(i) => ("jump", Some(i)),
                EdgeLabel::Fall(i) => ("fall", Some(i)),
                EdgeLabel::Affine => ("affine", None),
            };
            edges.push(json!([f, t, kind, i]));
            text.push_str(&format!("  {f} -> {t} {l}\n"));
        }
        let json = json!({
            "filling": comp.filling.to_text(),
            "root": comp.root,
            "sink": comp.sink,
            "vertices": vertices,
            "edges": edges,
        });
        Ok(Doc { json, text })
    }

    /// The vanishing vector with its pivot, then the vanishing points
    /// (`null` marks a free coordinate) and the outcome of substituting each
    /// into the shifted Jack polynomial.
    pub fn vanishing(
        &self,
        v: &[u32],
        tau: &Rst,
        vector: Option<&VanishingVector>,
        points: &[VanishingPattern],
        vanishes: &[bool],
    ) -> Result<Doc, CliError> {
        let mut list = Vec::new();
        let mut text = self.metadata_text(v, tau)?;
        let mut json = json!({ "metadata": self.metadata(v, tau)? });
        if let Some(vv) = vector {
            json["vector"] = Value::Array(self.scalars(&vv.entries)?);
            json["pivot"] = json!(vv.pivot);
            text.push_str(&format!("vector: {} (pivot {})\n", self.scalars_text(&vv.entries)?, vv.pivot));
        }
        for (p, &z) in points.iter().zip(vanishes) {
            let mut coords = Vec::new();
            let mut shown = Vec::new();
            for x in p {
                match x {
                    Some(x) => {
                        coords.push(self.scalar(x)?);
                        shown.push(self.scalar_text(x)?);
                    }
                    None => {
                        coords.push(Value::Null);
                        shown.push("*".into());
                    }
                }
            }
            list.push(json!({ "point": coords, "vanishes": z }));
            text.push_str(&format!("[{}] vanishes: {z}\n", shown.join(", ")));
        }
        json["points"] = Value::Array(list);
        Ok(Doc { json, text })
    }
}

pub fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}
