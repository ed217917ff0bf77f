use crate::error::{Error, Result};

/// Upper bound on candidate evaluations an exhaustive solver may perform.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget(pub u64);

impl Default for Budget {
    fn default() -> Self {
        Budget(1 << 26)
    }
}

impl Budget {
    /// Fails unless `base^exponent` candidates fit in the budget.
    pub fn check(self, base: usize, exponent: usize) -> Result<u64> {
        let mut total: u128 = 1;
        for _ in 0..exponent {
            total = total.saturating_mul(base as u128);
            if total > self.0 as u128 {
                return Err(Error::Budget { needed: format!("{base}^{exponent}"), budget: self.0 });
            }
        }
        Ok(total as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn refuses_with_explicit_bound() {
        let err = Budget(1000).check(2, 10).unwrap_err();
        assert_eq!(err, Error::Budget { needed: "2^10".into(), budget: 1000 });
        assert_eq!(Budget(1024).check(2, 10).unwrap(), 1024);
        assert_eq!(Budget::default().check(2, 26).unwrap(), 1 << 26);
        assert!(Budget::default().check(3, 0).is_ok());
    }
}
