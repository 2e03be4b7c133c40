//! Fibonacci and Lucas numbers with F_0 = 0, F_1 = 1, L_0 = 2, L_1 = 1.

/// F_n; exact for n ≤ 186.
pub fn fibonacci(n: u32) -> u128 {
    let (mut a, mut b) = (0u128, 1u128);
    for _ in 0..n {
        (a, b) = (b, a + b);
    }
    a
}

/// L_n = F_{n+1} + F_{n-1}.
pub fn lucas(n: u32) -> u128 {
    if n == 0 {
        2
    } else {
        fibonacci(n + 1) + fibonacci(n - 1)
    }
}
