//! JSON files for arrangements and pencils. Polynomials are stored as text in
//! the polynomial grammar over `z0..z3`.

use serde::{Deserialize, Serialize};

use super::arrangement::{Arrangement, Pencil, PencilKind, Provenance};
use super::frame::LinForm;
use super::octic::coord_ctx;
use crate::arith::Rat;
use crate::error::ModelError;
use crate::poly::MPoly;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrangementFile {
    pub forms: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quintic: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PencilFile {
    pub kind: PencilKind,
    pub base: String,
    pub deformer: String,
    pub exponent: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<[Rat; 4]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

pub fn arrangement_file(arr: &Arrangement, quintic: Option<&MPoly>) -> ArrangementFile {
    let ctx = coord_ctx();
    ArrangementFile {
        forms: arr.forms.iter().map(|f| f.to_poly(&ctx).to_string()).collect(),
        seed: match arr.provenance {
            Provenance::Seed(s) => Some(s),
            _ => None,
        },
        quintic: quintic.map(MPoly::to_string),
    }
}

fn parse_linear(text: &str) -> Result<LinForm, ModelError> {
    let p = MPoly::parse(text, &coord_ctx())?;
    if p.total_degree() != Some(1) || !p.is_homogeneous() {
        return Err(ModelError::File(format!("not a linear form: {text}")));
    }
    LinForm::from_linear(&p)
}

/// Reads an arrangement (and optional quintic) from JSON text.
pub fn load_arrangement(json: &str, source: &str) -> Result<(Arrangement, Option<MPoly>), ModelError> {
    let file: ArrangementFile = serde_json::from_str(json).map_err(|e| ModelError::File(e.to_string()))?;
    let forms = file.forms.iter().map(|s| parse_linear(s)).collect::<Result<Vec<_>, _>>()?;
    let arr = Arrangement::new(forms, Provenance::File(source.to_string()))?;
    let quintic = file.quintic.as_deref().map(|q| MPoly::parse(q, &coord_ctx())).transpose()?;
    Ok((arr, quintic))
}

pub fn pencil_file(p: &Pencil, lambda: Option<[Rat; 4]>, seed: Option<u64>) -> PencilFile {
    PencilFile {
        kind: p.kind,
        base: p.base.to_string(),
        deformer: p.deformer.to_string(),
        exponent: p.exponent,
        lambda,
        seed,
    }
}

pub fn load_pencil(json: &str) -> Result<Pencil, ModelError> {
    let file: PencilFile = serde_json::from_str(json).map_err(|e| ModelError::File(e.to_string()))?;
    let ctx = coord_ctx();
    let base = MPoly::parse(&file.base, &ctx)?;
    let deformer = MPoly::parse(&file.deformer, &ctx)?;
    let p = Pencil { kind: file.kind, base, deformer, exponent: file.exponent, description: String::new() };
    let want = p.deformer.total_degree().unwrap_or(0) * p.exponent;
    if p.degree() != want {
        return Err(ModelError::DegreeMismatch { base: p.degree(), deformer: want });
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{build_arrangement, draw_quintic};

    #[test]
    fn arrangement_round_trip() {
        let arr = build_arrangement(6, 7).unwrap();
        let q = draw_quintic(7, 0);
        let text = serde_json::to_string(&arrangement_file(&arr, Some(&q))).unwrap();
        let (back, q2) = load_arrangement(&text, "mem").unwrap();
        assert_eq!(back.forms, arr.forms);
        assert_eq!(q2, Some(q));
        assert!(load_arrangement(r#"{"forms": ["z0^2"]}"#, "x").is_err());
    }
}
