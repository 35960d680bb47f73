use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Construction parameters.
///
/// `mu` is the heaviness threshold (a node is heavy when its degree is at
/// least `mu`), `g` the gray-edge budget handed to the CSSSP stage.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Params {
    pub mu: usize,
    pub g: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<f64>,
    pub seed: u64,
}

/// `ceil(n^{2/5} * ln(n)^{1/5})`, with `ln 1` taken as 1.
pub fn default_mu(n: usize) -> usize {
    let n = n.max(1) as f64;
    let log = if n <= 1.0 { 1.0 } else { n.ln() };
    let mu = (n.powf(0.4) * log.powf(0.2)).ceil() as usize;
    mu.max(1)
}

/// `ceil(mu^3 / n) + 2`.
pub fn gray_budget(n: usize, mu: usize) -> usize {
    let n = n.max(1) as u128;
    let cube = (mu as u128).pow(3);
    (cube.div_ceil(n) + 2) as usize
}

/// Default parameters for an `n`-node graph, seed 0 and no epsilon.
pub fn default_params(n: usize) -> Params {
    let mu = default_mu(n);
    Params {
        mu,
        g: gray_budget(n, mu),
        epsilon: None,
        seed: 0,
    }
}

impl Params {
    /// Parameters with an explicit `mu`; `g` is derived from it.
    pub fn with_mu(n: usize, mu: usize) -> Result<Self> {
        if mu == 0 {
            return Err(Error::InvalidParams("mu must be at least 1".into()));
        }
        Ok(Params {
            mu,
            g: gray_budget(n, mu),
            epsilon: None,
            seed: 0,
        })
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn epsilon(mut self, epsilon: f64) -> Self {
        self.epsilon = Some(epsilon);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.mu < 1 {
            return Err(Error::InvalidParams(format!("mu={} < 1", self.mu)));
        }
        if self.g < 2 {
            return Err(Error::InvalidParams(format!("g={} < 2", self.g)));
        }
        if let Some(eps) = self.epsilon {
            if !(eps > 0.0 && eps < 1.0) {
                return Err(Error::InvalidParams(format!("epsilon={eps} not in (0,1)")));
            }
        }
        Ok(())
    }

    /// `mu^3 / n` as an exact rational comparison helper: true iff
    /// `count <= mu^3 / n`.
    pub(crate) fn within_heavy_budget(&self, n: usize, count: usize) -> bool {
        (count as u128) * (n as u128) <= (self.mu as u128).pow(3)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mu_for_1024() {
        // 16 * ln(1024)^{1/5} = 16 * 6.9315^{0.2} ~ 23.56
        let p = default_params(1024);
        assert_eq!(p.mu, 24);
        // 24^3 / 1024 = 13.5
        assert_eq!(p.g, 16);
    }

    #[test]
    fn mu_for_one_node() {
        let p = default_params(1);
        assert_eq!((p.mu, p.g), (1, 3));
    }

    #[test]
    fn mu_for_100k() {
        // 100000^{0.4} = 100, ln(100000)^{0.2} ~ 1.6309
        assert_eq!(default_mu(100_000), 164);
    }

    #[test]
    fn g_rounds_up() {
        assert_eq!(gray_budget(400, 16), 13); // 4096/400 = 10.24
        assert_eq!(gray_budget(8, 2), 3); // 8/8 = 1 exactly
    }

    #[test]
    fn validation() {
        assert!(default_params(50).validate().is_ok());
        assert!(Params::with_mu(10, 0).is_err());
        assert!(default_params(50).epsilon(1.0).validate().is_err());
        assert!(default_params(50).epsilon(0.0).validate().is_err());
        assert!(default_params(50).epsilon(0.5).validate().is_ok());
        let bad = Params {
            g: 1,
            ..default_params(50)
        };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn heavy_budget_is_exact() {
        let p = Params::with_mu(400, 16).unwrap(); // 4096/400 = 10.24
        assert!(p.within_heavy_budget(400, 10));
        assert!(!p.within_heavy_budget(400, 11));
    }
}
