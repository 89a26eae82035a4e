//! Group parameters as given on the command line.

use std::sync::Arc;

use suzuki_core::{Family, FieldContext, GroupParams};

use crate::Failure;

/// Parses `1,0,1` or `[1, 0, 1]`.
pub fn parse_list(s: &str) -> Result<Vec<u32>, String> {
    let body = s.trim().trim_start_matches('[').trim_end_matches(']');
    if body.trim().is_empty() {
        return Ok(Vec::new());
    }
    body.split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|e| format!("bad list entry {t:?}: {e}")))
        .collect()
}

/// Family, field and twist parameters before validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub family: Family,
    pub p: u32,
    pub m: u32,
    pub l: u32,
    /// Either an enumeration index (`3`) or an ascending coefficient list
    /// (`1,1` or `[1,1]`).
    pub epsilon: Option<String>,
    /// Ascending coefficients of the field modulus, leading 1 included.
    pub modulus: Option<Vec<u32>>,
}

impl GroupSpec {
    pub fn new(family: Family, p: u32, m: u32, l: u32, epsilon: Option<u32>) -> Self {
        GroupSpec { family, p, m, l, epsilon: epsilon.map(|e| e.to_string()), modulus: None }
    }

    pub fn build(&self) -> Result<GroupParams, Failure> {
        let bad = |e: suzuki_core::Error| Failure::Params(e.to_string());
        let ctx = Arc::new(FieldContext::new(self.p, self.m, self.modulus.as_deref()).map_err(bad)?);
        let eps = match self.epsilon.as_deref() {
            None => None,
            Some(s) if s.contains(',') || s.contains('[') => {
                let coeffs = parse_list(s).map_err(Failure::Params)?;
                if coeffs.len() != self.m as usize {
                    return Err(Failure::Params(format!(
                        "epsilon needs {} coefficients, got {}",
                        self.m,
                        coeffs.len()
                    )));
                }
                Some(ctx.from_coeffs(&coeffs).map_err(bad)?)
            }
            Some(s) => {
                let i = s.trim().parse::<u32>().map_err(|e| Failure::Params(format!("bad epsilon {s:?}: {e}")))?;
                Some(ctx.element(i).map_err(bad)?)
            }
        };
        GroupParams::new(self.family, ctx, self.l, eps).map_err(bad)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lists() {
        assert_eq!(parse_list("1,0,1").unwrap(), vec![1, 0, 1]);
        assert_eq!(parse_list("[1, 1]").unwrap(), vec![1, 1]);
        assert!(parse_list("1,x").is_err());
    }

    #[test]
    fn epsilon_forms_agree() {
        let by_index = GroupSpec::new(Family::B, 2, 2, 1, Some(2)).build().unwrap();
        let coeffs = by_index.field().coeffs(by_index.epsilon().unwrap());
        let list = coeffs.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        let spec = GroupSpec { epsilon: Some(list), ..GroupSpec::new(Family::B, 2, 2, 1, None) };
        assert_eq!(spec.build().unwrap(), by_index);
    }

    #[test]
    fn theta_one_is_rejected() {
        let e = GroupSpec::new(Family::A, 2, 3, 3, None).build().unwrap_err();
        assert_eq!(e.exit_code(), 2);
        assert!(e.to_string().contains("θ ≠ 1"), "{e}");
    }

    #[test]
    fn custom_modulus() {
        let spec = GroupSpec { modulus: Some(vec![1, 0, 1, 1]), ..GroupSpec::new(Family::A, 2, 3, 1, None) };
        let g = spec.build().unwrap();
        assert_eq!(g.field().modulus(), &[1, 0, 1, 1]);
        let spec = GroupSpec { modulus: Some(vec![1, 1, 1, 1]), ..spec };
        assert!(spec.build().is_err());
    }
}
