//! Exact integer helpers for the closed-form bounds.

/// `⌈a / b⌉` for nonnegative `a` and positive `b`.
pub fn ceil_div(a: usize, b: usize) -> usize {
    assert!(b > 0, "division by zero");
    a.div_ceil(b)
}

/// `⌈a / b⌉` for signed `a` and positive `b`.
pub fn ceil_div_signed(a: i64, b: i64) -> i64 {
    assert!(b > 0, "division by zero");
    a.div_euclid(b) + i64::from(a.rem_euclid(b) != 0)
}

pub fn binomial2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ceilings() {
        assert_eq!(ceil_div(10, 3), 4);
        assert_eq!(ceil_div(9, 3), 3);
        assert_eq!(ceil_div(0, 7), 0);
        assert_eq!(ceil_div_signed(-7, 2), -3);
        assert_eq!(ceil_div_signed(7, 2), 4);
        assert_eq!(ceil_div_signed(-6, 3), -2);
    }
}
