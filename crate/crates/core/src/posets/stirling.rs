use crate::error::{Error, Result};

/// Stirling number of the second kind `S(n, k)`.
pub fn stirling2(n: u32, k: u32) -> Result<u128> {
    let overflow = || Error::Overflow(format!("S({n},{k})"));
    let mut row = vec![0u128; k as usize + 1];
    row[0] = 1;
    for i in 1..=n {
        for j in (1..=k.min(i) as usize).rev() {
            row[j] = (j as u128)
                .checked_mul(row[j])
                .and_then(|x| x.checked_add(row[j - 1]))
                .ok_or_else(overflow)?;
        }
        row[0] = 0;
    }
    Ok(row[k as usize])
}

/// Number of stabilization components of `S(n, m)`: `sum_{k=1}^{m} S(n, k)`.
pub fn component_count_formula(n: u32, m: u32) -> Result<u128> {
    let mut total = 0u128;
    for k in 1..=m.min(n) {
        total = total
            .checked_add(stirling2(n, k)?)
            .ok_or_else(|| Error::Overflow(format!("component count for ({n},{m})")))?;
    }
    Ok(total)
}
