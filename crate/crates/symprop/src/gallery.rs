//! Built-in operators with embedded operator-description documents, so every
//! analysis can run without external files.
//!
//! Names accepted by the CLI operator argument as `gallery:<name>`:
//!
//! * `heat` — ∂²ₓ (symbol −ξ²)
//! * `backward-heat` — −∂²ₓ (symbol +ξ², Petrovskii-violating)
//! * `schrodinger` — i∂²ₓ (symbol −iξ², unitary per mode)
//! * `transport` / `transport(c)` — c·∂ₓ, default c = 1
//! * `wave` — [[0, 1], [∂²ₓ, 0]] (u_tt = u_xx as a first-order system)
//! * `wave-companion` — the same system built from the Q-form
//!   (Q₂ = 1, Q₁ = 0, Q₀ = −ζ²) through the companion reduction
//! * `wave-energy` — [[0, ∂ₓ], [∂ₓ, 0]], the wave equation in energy
//!   variables; the symbol is skew-adjoint, so propagation is unitary

use serde::Serialize;
use symprop_core::{companion_operator, parse_operator, poly_from, MultiPoly,
    PolyMatrixOperator};

use crate::SolverError;

const HEAT_DOC: &str =
    r#"{"m":1,"n":1,"entries":[{"row":0,"col":0,"terms":[{"coeff":[1.0,0.0],"alpha":[2]}]}]}"#;
const BACKWARD_HEAT_DOC: &str =
    r#"{"m":1,"n":1,"entries":[{"row":0,"col":0,"terms":[{"coeff":[-1.0,0.0],"alpha":[2]}]}]}"#;
const SCHRODINGER_DOC: &str =
    r#"{"m":1,"n":1,"entries":[{"row":0,"col":0,"terms":[{"coeff":[0.0,1.0],"alpha":[2]}]}]}"#;
const WAVE_DOC: &str = r#"{"m":2,"n":1,"entries":[{"row":0,"col":1,"terms":[{"coeff":[1.0,0.0],"alpha":[0]}]},{"row":1,"col":0,"terms":[{"coeff":[1.0,0.0],"alpha":[2]}]}]}"#;
const WAVE_ENERGY_DOC: &str = r#"{"m":2,"n":1,"entries":[{"row":0,"col":1,"terms":[{"coeff":[1.0,0.0],"alpha":[1]}]},{"row":1,"col":0,"terms":[{"coeff":[1.0,0.0],"alpha":[1]}]}]}"#;

pub const GALLERY_NAMES: [&str; 7] = [
    "heat",
    "backward-heat",
    "schrodinger",
    "transport",
    "wave",
    "wave-companion",
    "wave-energy",
];

#[derive(Clone, Debug, Serialize)]
pub struct GalleryEntry {
    pub name: String,
    pub description: String,
    /// The operator-description document (JSON, parseable by the operator
    /// argument machinery).
    pub document: String,
}

/// The scalar wave equation u_tt = u_xx in Q-form: Q₀ = −ζ², Q₁ = 0, Q₂ = 1.
fn wave_q_form() -> Vec<MultiPoly> {
    vec![
        poly_from(1, &[(-1.0, 0.0, &[2])]).expect("static polynomial"),
        MultiPoly::zero(1),
        MultiPoly::one(1),
    ]
}

fn transport_operator(c: f64) -> PolyMatrixOperator {
    PolyMatrixOperator::from_entries(
        1,
        1,
        [(0, 0, poly_from(1, &[(c, 0.0, &[1])]).expect("static polynomial"))],
    )
    .expect("static operator")
}

/// Looks up a gallery operator; `transport(c)` carries a literal speed.
pub fn gallery_operator(name: &str) -> Result<PolyMatrixOperator, SolverError> {
    let parse_embedded = |doc: &str| parse_operator(doc).map_err(SolverError::from);
    match name {
        "heat" => parse_embedded(HEAT_DOC),
        "backward-heat" => parse_embedded(BACKWARD_HEAT_DOC),
        "schrodinger" => parse_embedded(SCHRODINGER_DOC),
        "transport" => Ok(transport_operator(1.0)),
        "wave" => parse_embedded(WAVE_DOC),
        "wave-companion" => {
            companion_operator(&wave_q_form()).map_err(SolverError::from)
        }
        "wave-energy" => parse_embedded(WAVE_ENERGY_DOC),
        other => {
            if let Some(inner) = other.strip_prefix("transport(").and_then(|s| s.strip_suffix(')'))
            {
                let c: f64 = inner
                    .parse()
                    .map_err(|_| SolverError::UnknownGallery(other.to_string()))?;
                if !c.is_finite() {
                    return Err(SolverError::UnknownGallery(other.to_string()));
                }
                return Ok(transport_operator(c));
            }
            Err(SolverError::UnknownGallery(other.to_string()))
        }
    }
}

/// All built-in entries with their embedded documents.
pub fn gallery_entries() -> Vec<GalleryEntry> {
    GALLERY_NAMES
        .iter()
        .map(|&name| {
            let op = gallery_operator(name).expect("gallery entries are static");
            let description = match name {
                "heat" => "second derivative; symbol -xi^2, bounded, not hyperbolic",
                "backward-heat" => "negated second derivative; symbol +xi^2, Petrovskii violated",
                "schrodinger" => "i times the second derivative; unimodular multiplier e^{-it xi^2}",
                "transport" => "first derivative scaled by the speed c (default 1); accepts transport(c)",
                "wave" => "u_tt = u_xx as a first-order 2x2 system",
                "wave-companion" => "the wave system built from Q-form coefficients via the companion reduction",
                "wave-energy" => "wave equation in energy variables; skew-adjoint symbol, unitary propagation",
                _ => unreachable!(),
            };
            GalleryEntry {
                name: name.to_string(),
                description: description.to_string(),
                document: op.to_document(),
            }
        })
        .collect()
}

/// Resolves a CLI operator argument: `gallery:<name>` or a path to an
/// operator-description document.
pub fn resolve_operator(arg: &str) -> Result<(PolyMatrixOperator, String), SolverError> {
    if let Some(name) = arg.strip_prefix("gallery:") {
        let op = gallery_operator(name)?;
        let doc = op.to_document();
        Ok((op, doc))
    } else {
        let text = std::fs::read_to_string(arg)?;
        let op = parse_operator(&text)?;
        let doc = op.to_document();
        Ok((op, doc))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_round_trips_through_its_document() {
        for entry in gallery_entries() {
            let op = parse_operator(&entry.document).unwrap();
            assert_eq!(op.to_document(), entry.document, "{}", entry.name);
        }
    }

    #[test]
    fn wave_and_companion_agree() {
        let wave = gallery_operator("wave").unwrap();
        let companion = gallery_operator("wave-companion").unwrap();
        assert_eq!(wave, companion);
    }

    #[test]
    fn parameterized_transport() {
        let op = gallery_operator("transport(2.5)").unwrap();
        let sym = op.symbol_at(&[2.0]).unwrap();
        // c·(iξ) = 5i
        assert!((sym[(0, 0)] - num_complex::Complex64::new(0.0, 5.0)).norm() < 1e-14);
        assert!(matches!(
            gallery_operator("transport(fast)"),
            Err(SolverError::UnknownGallery(_))
        ));
    }
}
