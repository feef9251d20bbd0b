//! Compensated summation.
//!
//! Every reduction in the crate (integrals, inner products, norms) goes
//! through [`NeumaierSum`] in a fixed left-to-right order so that results are
//! bitwise reproducible regardless of thread count.

/// Neumaier variant of Kahan summation.
#[derive(Debug, Clone, Copy, Default)]
pub struct NeumaierSum {
    sum: f64,
    compensation: f64,
}

impl NeumaierSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, value: f64) {
        let t = self.sum + value;
        if self.sum.abs() >= value.abs() {
            self.compensation += (self.sum - t) + value;
        } else {
            self.compensation += (value - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

/// Compensated sum of an iterator, in iteration order.
pub fn sum<I: IntoIterator<Item = f64>>(iter: I) -> f64 {
    let mut acc = NeumaierSum::new();
    for v in iter {
        acc.add(v);
    }
    acc.value()
}

/// Compensated dot product of two slices.
pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = NeumaierSum::new();
    for (x, y) in a.iter().zip(b) {
        acc.add(x * y);
    }
    acc.value()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compensates_cancellation() {
        // 1 + 1e16 - 1e16 loses the 1 under naive summation order.
        let vals = [1.0, 1e16, -1e16];
        assert_eq!(sum(vals.iter().copied()), 1.0);
    }

    #[test]
    fn matches_exact_on_small_ints() {
        let vals: Vec<f64> = (0..1000).map(|i| i as f64).collect();
        assert_eq!(sum(vals.iter().copied()), 499500.0);
    }

    #[test]
    fn dot_is_deterministic() {
        let a: Vec<f64> = (0..512).map(|i| ((i * 37) % 101) as f64 * 0.01).collect();
        let b: Vec<f64> = (0..512).map(|i| ((i * 53) % 97) as f64 * 0.02).collect();
        assert_eq!(dot(&a, &b), dot(&a, &b));
    }
}
