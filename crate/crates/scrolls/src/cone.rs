//! Hyperplane sections of cones: a scroll with `k >= 1` zero parts is a
//! cone over the scroll of its positive parts, with vertex a `P^(k-1)`.
//! The section type is decided by how the hyperplane meets the vertex.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::FieldConfig;
use crate::form::BinaryForm;
use crate::scroll::ScrollType;
use crate::syzygy::{analyze_section_form, SectionDecomposition, SectionForm};

/// The three possible section types of a cone.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "case")]
pub enum ConeSectionResult {
    /// The hyperplane misses the vertex (only possible for a point
    /// vertex): the section is the base itself.
    #[serde(rename = "BASE")]
    Base { scroll: ScrollType },
    /// The hyperplane meets the vertex properly: a cone over the base
    /// with a smaller vertex.
    #[serde(rename = "SMALLER_CONE")]
    SmallerCone { scroll: ScrollType },
    /// The hyperplane contains the vertex: a cone over a hyperplane
    /// section of the base, which is analyzed recursively.
    #[serde(rename = "CONE_OVER_SECTION")]
    ConeOverSection { analysis: SectionDecomposition },
}

/// Classifies the hyperplane section of the cone `S(a)` cut out by
/// `L = c_1 s_1 + ... + c_k s_k + (rest over the positive parts)`,
/// where the `c_i` are the scalar coefficients on the vertex slots.
///
/// All vertex coefficients zero means the vertex lies in the
/// hyperplane (case CONE_OVER_SECTION); otherwise the vertex is cut
/// down, leaving the base itself when it was a single point (BASE) or
/// a cone with one zero part fewer (SMALLER_CONE).
pub fn classify_cone_section(
    cfg: &FieldConfig,
    a: &ScrollType,
    vertex_coeffs: &[u64],
    rest: &[BinaryForm],
) -> Result<ConeSectionResult> {
    let k = a.zero_count();
    if k == 0 {
        return Err(Error::ConeInput { detail: format!("{a} has no zero parts") });
    }
    if vertex_coeffs.len() != k {
        return Err(Error::ConeInput {
            detail: format!("expected {k} vertex coefficients, got {}", vertex_coeffs.len()),
        });
    }
    let base = a.positive_part()?;
    if rest.len() != base.dim() {
        return Err(Error::ConeInput {
            detail: format!("expected {} coefficient forms, got {}", base.dim(), rest.len()),
        });
    }
    for (i, form) in rest.iter().enumerate() {
        if form.degree() != base.parts()[i] {
            return Err(Error::DegreeMismatch { left: form.degree(), right: base.parts()[i] });
        }
    }

    let vertex_hit = vertex_coeffs.iter().any(|&c| c % cfg.p() != 0);
    if !vertex_hit {
        if rest.iter().all(|f| f.is_zero()) {
            return Err(Error::AllZero);
        }
        let section = SectionForm::new(base, rest.to_vec())?;
        let analysis = analyze_section_form(cfg, &section)?;
        return Ok(ConeSectionResult::ConeOverSection { analysis });
    }
    if k == 1 {
        return Ok(ConeSectionResult::Base { scroll: base });
    }
    let mut parts = vec![0usize; k - 1];
    parts.extend_from_slice(base.parts());
    Ok(ConeSectionResult::SmallerCone { scroll: ScrollType::new(parts)? })
}
