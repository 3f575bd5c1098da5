use super::BooleanFunction;

/// Unnormalized Walsh spectrum `W_f(y) = Σ_x (-1)^(f(x) + x·y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalshSpectrum {
    m: u32,
    values: Vec<i64>,
}

impl WalshSpectrum {
    /// In-place butterfly over the ±1 sign vector, `O(m·2^m)`.
    pub fn of(f: &BooleanFunction) -> Self {
        let size = f.size();
        let mut values: Vec<i64> = (0..size as u32).map(|x| f.sign(x)).collect();
        let mut h = 1;
        while h < size {
            for block in values.chunks_mut(2 * h) {
                let (lo, hi) = block.split_at_mut(h);
                for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                    let (u, v) = (*a, *b);
                    *a = u + v;
                    *b = u - v;
                }
            }
            h *= 2;
        }
        WalshSpectrum {
            m: f.vars(),
            values,
        }
    }

    pub fn vars(&self) -> u32 {
        self.m
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn get(&self, y: u32) -> i64 {
        self.values[y as usize]
    }

    /// `Σ_y W_f(y)^2`.
    pub fn energy(&self) -> i128 {
        self.values.iter().map(|&w| (w as i128) * (w as i128)).sum()
    }

    /// Parseval: energy equals `2^(2m)`.
    pub fn parseval_holds(&self) -> bool {
        self.energy() == 1i128 << (2 * self.m)
    }

    /// Every coefficient has the parity of `2^m` (even, since `m ≥ 1`).
    pub fn parity_consistent(&self) -> bool {
        self.values.iter().all(|w| w % 2 == 0)
    }

    /// `m` even and `|W_f(y)| = 2^(m/2)` for all `y`.
    pub fn is_bent(&self) -> bool {
        if !self.m.is_multiple_of(2) {
            return false;
        }
        let target = 1i64 << (self.m / 2);
        self.values.iter().all(|w| w.abs() == target)
    }

    /// `ε` from `W_f(0) = −ε·2^(m/2)`, when bent.
    pub fn bent_sign(&self) -> Option<i8> {
        self.is_bent()
            .then(|| if self.values[0] < 0 { 1 } else { -1 })
    }

    pub fn max_abs(&self) -> i64 {
        self.values.iter().map(|w| w.abs()).max().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolean::parse_anf;

    #[test]
    fn zero_function_is_a_delta() {
        let w = BooleanFunction::zero(2).unwrap().walsh();
        assert_eq!(w.values(), &[4, 0, 0, 0]);
    }

    #[test]
    fn and_gate_spectrum() {
        // Naive 4x4 sum: W(y) = Σ_x (-1)^(x1 x2 + x·y).
        let w = parse_anf("x1*x2", 2).unwrap().walsh();
        assert_eq!(w.values(), &[2, 2, 2, -2]);
        assert_eq!(w.bent_sign(), Some(-1));
    }

    #[test]
    fn bent_signs() {
        let f = parse_anf("x1*x2+x3*x4", 4).unwrap();
        assert_eq!(f.bent_sign(), Some(-1));
        assert_eq!(f.support().len(), 6);
        let g = parse_anf("x1*x2+x3*x4+1", 4).unwrap();
        assert_eq!(g.bent_sign(), Some(1));
        assert_eq!(g.support().len(), 10);
    }

    #[test]
    fn affine_is_not_bent() {
        let w = parse_anf("x1+x2", 2).unwrap().walsh();
        assert!(!w.is_bent());
        assert_eq!(w.max_abs(), 4);
        assert!(!parse_anf("x1*x2*x3", 3).unwrap().is_bent());
    }

    #[test]
    fn parseval_and_parity() {
        let w = parse_anf("x1*x2*x3 + x4 + x2*x5", 5).unwrap().walsh();
        assert!(w.parseval_holds());
        assert!(w.parity_consistent());
    }
}
