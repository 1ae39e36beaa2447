use crate::eip::{lex_profile_table, theta0_m3, theta1_m3};
use crate::error::Result;
use crate::oracle::{Scope, VerificationReport, Witness};

/// Checks that `f` on `Z_N` (`N = f.len()`) has `f(0) = 0` and
/// `f((x+y) mod N) <= f(x) + f(y)` for all `x, y`; with `strong`, the
/// inequality must be strict whenever `x` and `y` are both nonzero.
pub fn check_subadditive(f: &[u64], strong: bool) -> VerificationReport {
    let claim = if strong { "strongly-subadditive" } else { "subadditive" };
    let n = f.len();
    let scope = Scope {
        ell_range: Some((0, n.saturating_sub(1) as u64)),
        ..Scope::default()
    };
    if n == 0 {
        return VerificationReport::verified(claim, scope, 0, "empty domain");
    }
    if f[0] != 0 {
        let w = Witness {
            ell: Some(0),
            expected: Some(0),
            observed: Some(f[0] as i64),
            detail: "f(0) must be 0".into(),
            ..Witness::default()
        };
        return VerificationReport::counterexample(claim, scope, 1, w, "f(0) != 0");
    }
    let mut checked = 1;
    for x in 0..n {
        for y in x..n {
            checked += 1;
            let lhs = f[(x + y) % n];
            let rhs = f[x] + f[y];
            let ok = if strong && x != 0 && y != 0 { lhs < rhs } else { lhs <= rhs };
            if !ok {
                let w = Witness {
                    expected: Some(rhs as i64),
                    observed: Some(lhs as i64),
                    detail: format!("x={x}, y={y}: f((x+y) mod {n}) = {lhs}, f(x) + f(y) = {rhs}"),
                    ..Witness::default()
                };
                return VerificationReport::counterexample(claim, scope, checked, w, "");
            }
        }
    }
    VerificationReport::verified(claim, scope, checked, format!("{checked} pairs"))
}

/// The Lex profile of `S(n, 3)` restricted to `Z_{3^n}`.
pub fn lex_profile_cyclic_m3(n: u32) -> Result<Vec<u64>> {
    let mut v = lex_profile_table(n, 3)?.values;
    v.pop();
    Ok(v)
}

/// Tally of an exhaustive identity or inequality check.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Tally {
    pub checked: u64,
    pub violations: u64,
    pub first: Option<Witness>,
}

impl Tally {
    pub(crate) fn record(&mut self, ok: bool, witness: impl FnOnce() -> Witness) {
        self.checked += 1;
        if !ok {
            self.violations += 1;
            if self.first.is_none() {
                self.first = Some(witness());
            }
        }
    }

    /// Sums counts; keeps `self`'s first witness ahead of `other`'s.
    pub fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        self.violations += other.violations;
        if self.first.is_none() {
            self.first = other.first;
        }
        self
    }

    pub fn report(self, claim: &str, scope: Scope) -> VerificationReport {
        let detail = format!("{} violations in {} cases", self.violations, self.checked);
        match self.first {
            None => VerificationReport::verified(claim, scope, self.checked, detail),
            Some(w) => VerificationReport::counterexample(claim, scope, self.checked, w, detail),
        }
    }
}

fn pow3(k: u32) -> u64 {
    3u64.pow(k)
}

fn scope_n(n_max: u32) -> Scope {
    Scope {
        n: Some(n_max),
        m: Some(3),
        ..Scope::default()
    }
}

fn eq_witness(n: u32, j: Option<u32>, ell: u64, expected: u64, observed: u64, what: &str) -> Witness {
    let j = j.map_or(String::new(), |j| format!(", j={j}"));
    Witness {
        ell: Some(ell),
        expected: Some(expected as i64),
        observed: Some(observed as i64),
        detail: format!("n={n}{j}, l={ell}: {what}"),
        ..Witness::default()
    }
}

/// `Theta0 + Theta1` equals the Lex profile, for `1 <= n <= n_max`.
pub fn tally_recursion(n_max: u32) -> Result<Tally> {
    let mut t = Tally::default();
    for n in 1..=n_max {
        let f = lex_profile_table(n, 3)?.values;
        for (ell, &fv) in f.iter().enumerate() {
            let ell = ell as u64;
            let r = theta0_m3(n, ell)? + theta1_m3(n, ell)?;
            t.record(r == fv, || eq_witness(n, None, ell, fv, r, "Theta0 + Theta1 vs profile"));
        }
    }
    Ok(t)
}

/// For `1 <= j < n` and `3^(j-1)/2 < l < 3^j/2`:
/// `Theta1(n, l) = Theta1(j, l) + 1`.
pub fn tally_theta1_low_range(n_max: u32) -> Result<Tally> {
    let mut t = Tally::default();
    for n in 1..=n_max {
        for j in 1..n {
            for ell in 1..pow3(j) {
                if pow3(j - 1) < 2 * ell && 2 * ell < pow3(j) {
                    let lhs = theta1_m3(n, ell)?;
                    let rhs = theta1_m3(j, ell)? + 1;
                    t.record(lhs == rhs, || eq_witness(n, Some(j), ell, rhs, lhs, "Theta1(n,l) vs Theta1(j,l)+1"));
                }
            }
        }
    }
    Ok(t)
}

/// Which domain the half-range identity for `Theta1` is checked on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HalfRangeDomain {
    /// `0 <= j <= n` and `3^n/2 - 3^j/2 <= l < 3^n/2`, both right-hand forms.
    AsStated,
    /// `1 <= j < n`, `3^n/2 - 3^j/2 < l < 3^n/2` and `x > 3^(j-1)/2` where
    /// `x = l - (3^n - 3^j)/2`; first right-hand form only.
    Restricted,
}

/// `Theta1(n, l) = Theta1(j, x) + (n - j)` with `x = l - (3^n - 3^j)/2`, and
/// (as stated) also `= Theta1(j, l mod 3^j) + (n - j)`.
pub fn tally_theta1_half_range(n_max: u32, domain: HalfRangeDomain) -> Result<Tally> {
    let mut t = Tally::default();
    for n in 1..=n_max {
        let full = pow3(n);
        for j in 0..=n {
            let shift = (full - pow3(j)) / 2;
            for ell in 0..full {
                let in_domain = match domain {
                    HalfRangeDomain::AsStated => shift <= ell && 2 * ell < full,
                    HalfRangeDomain::Restricted => {
                        j >= 1 && j < n && shift < ell && 2 * ell < full && 2 * (ell - shift) > pow3(j - 1)
                    }
                };
                if !in_domain {
                    continue;
                }
                let lhs = theta1_m3(n, ell)?;
                let a = theta1_m3(j, ell - shift)? + (n - j) as u64;
                let ok = match domain {
                    HalfRangeDomain::AsStated => {
                        let b = theta1_m3(j, ell % pow3(j))? + (n - j) as u64;
                        lhs == a && lhs == b
                    }
                    HalfRangeDomain::Restricted => lhs == a,
                };
                t.record(ok, || eq_witness(n, Some(j), ell, a, lhs, "Theta1(n,l) vs Theta1(j,x)+(n-j)"));
            }
        }
    }
    Ok(t)
}

/// `f` subadditive on `Z_N`, recorded as one case per pair.
fn tally_subadditive(t: &mut Tally, f: &[u64], label: &str) {
    let n = f.len();
    for x in 0..n {
        for y in x..n {
            let (lhs, rhs) = (f[(x + y) % n], f[x] + f[y]);
            t.record(lhs <= rhs, || Witness {
                expected: Some(rhs as i64),
                observed: Some(lhs as i64),
                detail: format!("{label}: x={x}, y={y}"),
                ..Witness::default()
            });
        }
    }
}

/// `Theta0(n, .)` is subadditive on `Z_{3^n}`.
pub fn tally_theta0_subadditive(n_max: u32) -> Result<Tally> {
    let mut t = Tally::default();
    for n in 1..=n_max {
        let f: Vec<u64> = (0..pow3(n)).map(|l| theta0_m3(n, l)).collect::<Result<_>>()?;
        tally_subadditive(&mut t, &f, &format!("Theta0 n={n}"));
    }
    Ok(t)
}

/// `Theta1(n+1, .)` is subadditive on `Z_{3^(n+1)}`.
pub fn tally_theta1_subadditive(n_max: u32) -> Result<Tally> {
    let mut t = Tally::default();
    for n in 1..=n_max {
        let f: Vec<u64> = (0..pow3(n + 1)).map(|l| theta1_m3(n + 1, l)).collect::<Result<_>>()?;
        tally_subadditive(&mut t, &f, &format!("Theta1 n={}", n + 1));
    }
    Ok(t)
}

/// `0 < k <= l < 3^n/2` and `k + l > 3^n/2` imply `f(k) + f(l) >= f(k+l) + 2`.
pub fn tally_middle_gap(n_max: u32) -> Result<Tally> {
    let mut t = Tally::default();
    for n in 1..=n_max {
        let f = lex_profile_table(n, 3)?.values;
        let full = pow3(n);
        for k in 1..full {
            for l in k..full {
                if 2 * l < full && 2 * (k + l) > full {
                    let (lhs, rhs) = (f[k as usize] + f[l as usize], f[(k + l) as usize] + 2);
                    t.record(lhs >= rhs, || Witness {
                        expected: Some(rhs as i64),
                        observed: Some(lhs as i64),
                        detail: format!("n={n}, k={k}, l={l}"),
                        ..Witness::default()
                    });
                }
            }
        }
    }
    Ok(t)
}

/// `3^n/2 < k <= l < 3^n` and `k + l < 3^(n+1)/2` imply
/// `f(k) + f(l) >= f(k + l - 3^n) + 2`.
pub fn tally_upper_gap(n_max: u32) -> Result<Tally> {
    let mut t = Tally::default();
    for n in 1..=n_max {
        let f = lex_profile_table(n, 3)?.values;
        let full = pow3(n);
        for k in 1..full {
            for l in k..full {
                if full < 2 * k && 2 * (k + l) < 3 * full {
                    let (lhs, rhs) = (f[k as usize] + f[l as usize], f[(k + l - full) as usize] + 2);
                    t.record(lhs >= rhs, || Witness {
                        expected: Some(rhs as i64),
                        observed: Some(lhs as i64),
                        detail: format!("n={n}, k={k}, l={l}"),
                        ..Witness::default()
                    });
                }
            }
        }
    }
    Ok(t)
}

/// Strong subadditivity of the `m = 3` Lex profile for `1 <= n <= n_max`.
pub fn verify_strong_subadditivity(n_max: u32) -> Result<VerificationReport> {
    let mut checked = 0;
    for n in 1..=n_max {
        let r = check_subadditive(&lex_profile_cyclic_m3(n)?, true);
        checked += r.checked;
        if !r.is_verified() {
            return Ok(VerificationReport { scope: scope_n(n), ..r });
        }
    }
    Ok(VerificationReport::verified(
        "strongly-subadditive",
        scope_n(n_max),
        checked,
        format!("{checked} pairs over n=1..{n_max}"),
    ))
}

/// All subadditivity-related claims for `m = 3` up to `n_max`, as reports.
pub fn subadditivity_suite(n_max: u32) -> Result<Vec<VerificationReport>> {
    let s = || scope_n(n_max);
    Ok(vec![
        verify_strong_subadditivity(n_max + 1)?,
        tally_recursion(n_max)?.report("profile-recursion", s()),
        tally_theta1_low_range(n_max)?.report("theta1-low-range", s()),
        tally_theta1_half_range(n_max, HalfRangeDomain::AsStated)?.report("theta1-half-range", s()),
        tally_theta1_half_range(n_max, HalfRangeDomain::Restricted)?
            .report("theta1-half-range-restricted", s()),
        tally_theta0_subadditive(n_max)?.report("theta0-subadditive", s()),
        tally_theta1_subadditive(n_max)?.report("theta1-subadditive", s()),
        tally_middle_gap(n_max)?.report("middle-gap", s()),
        tally_upper_gap(n_max)?.report("upper-gap", s()),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::Status;

    #[test]
    fn trivial_functions() {
        let zero = vec![0u64; 7];
        assert!(check_subadditive(&zero, false).is_verified());
        assert_eq!(check_subadditive(&zero, true).status, Status::Counterexample);
        let r = check_subadditive(&[1, 0, 0], false);
        assert_eq!(r.witness.unwrap().ell, Some(0));
    }

    #[test]
    fn lex_profile_strongly_subadditive_small() {
        for n in 1..=4 {
            assert!(check_subadditive(&lex_profile_cyclic_m3(n).unwrap(), true).is_verified());
        }
    }

    #[test]
    fn pair_counts() {
        let r = verify_strong_subadditivity(6).unwrap();
        assert!(r.is_verified());
        // 1 + N(N+1)/2 per n.
        let expect: u64 = (1..=6).map(|n| 1 + pow3(n) * (pow3(n) + 1) / 2).sum();
        assert_eq!(r.checked, expect);
    }

    #[test]
    fn gap_inequalities_hold() {
        let a = tally_middle_gap(5).unwrap();
        let b = tally_upper_gap(5).unwrap();
        assert_eq!((a.checked, a.violations), (1 + 6 + 49 + 420 + 3721, 0));
        assert_eq!((b.checked, b.violations), (1 + 6 + 49 + 420 + 3721, 0));
    }
}
