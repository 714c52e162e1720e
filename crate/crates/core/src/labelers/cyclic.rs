use crate::error::{Error, Result};
use crate::families::{generate, FamilySpec};
use crate::graph::Labeling;

use super::{contract_one_max, label_path};

fn lab(labels: Vec<usize>) -> Labeling {
    Labeling::new(labels).expect("closed-form labeling is a bijection")
}

/// Gear graph `G_n`: identity, except for `n = 1 (mod 3)` where the last two
/// odd rim vertices `2n-1` and `2n+1` swap labels.
pub fn label_gear(n: usize) -> Result<Labeling> {
    if n < 3 {
        return Err(Error::InvalidSpec("gear needs n >= 3".into()));
    }
    let mut labels: Vec<usize> = (1..=2 * n + 1).collect();
    if n % 3 == 1 {
        labels.swap(2 * n - 2, 2 * n);
    }
    Ok(lab(labels))
}

/// The family of parameters for which the trace-path labeling of `S_{k,n}`
/// (k >= 6) closes the neighborhood of the last trace vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SnakeCase {
    /// `k = 1 (mod 4)`, `n = 2^l + 1`, `l >= 1`.
    KOneMod4NPow2Plus1,
    /// `k = 0 (mod 4)`, `n = 2^l`, `l >= 2`.
    KZeroMod4NPow2,
    /// `k = 0 (mod 4)`, `n = 2^l + 1`, `l >= 1`.
    KZeroMod4NPow2Plus1,
    /// `k = 2^l + 2`, `l >= 2`, `n = 3 (mod 4)`.
    KPow2Plus2NThreeMod4,
    /// `k` even, `n = 3`.
    KEvenNThree,
    /// `k = 2^l + 3`, `l >= 2`, `n` even.
    KPow2Plus3NEven,
}

fn pow2_at_least(x: usize, min: usize) -> bool {
    x >= min && x.is_power_of_two()
}

/// First matching case for `k >= 6, n >= 3`, or `None`.
pub fn snake_case(k: usize, n: usize) -> Option<SnakeCase> {
    if k < 6 || n < 3 {
        return None;
    }
    use SnakeCase::*;
    if k % 4 == 1 && pow2_at_least(n - 1, 2) {
        Some(KOneMod4NPow2Plus1)
    } else if k % 4 == 0 && pow2_at_least(n, 4) {
        Some(KZeroMod4NPow2)
    } else if k % 4 == 0 && pow2_at_least(n - 1, 2) {
        Some(KZeroMod4NPow2Plus1)
    } else if pow2_at_least(k - 2, 4) && n % 4 == 3 {
        Some(KPow2Plus2NThreeMod4)
    } else if k % 2 == 0 && n == 3 {
        Some(KEvenNThree)
    } else if k >= 7 && pow2_at_least(k - 3, 4) && n % 2 == 0 {
        Some(KPow2Plus3NEven)
    } else {
        None
    }
}

/// Polygonal snake `S_{k,n}` over the trace numbering.
///
/// k = 3 is the identity, k = 4 swaps the two interior vertices of every
/// cell, k = 5 uses the `4i` pattern with the `i = 0 (mod 3)` reassignment,
/// and k >= 6 lays the path labeling along the whole trace.
pub fn label_snake(k: usize, n: usize) -> Result<Labeling> {
    if k < 3 || n < 2 {
        return Err(Error::InvalidSpec("snake needs k >= 3 and n >= 2".into()));
    }
    let m = (n - 1) * (k - 1) + 1;
    match k {
        3 => Ok(Labeling::identity(m)),
        4 => {
            let mut labels: Vec<usize> = (1..=m).collect();
            for cell in 0..n - 1 {
                labels.swap(3 * cell + 1, 3 * cell + 2);
            }
            Ok(lab(labels))
        }
        5 => {
            let mut labels = vec![0; m];
            // Trace index of u_i is 4i-3; v_i, w_i, x_i follow it.
            for i in 1..=n {
                let reassigned = i % 3 == 0 && i < n;
                labels[4 * i - 4] = if reassigned { 4 * i - 1 } else { 4 * i - 3 };
                if i < n {
                    labels[4 * i - 3] = if i % 3 == 0 { 4 * i - 3 } else { 4 * i - 1 };
                    labels[4 * i - 2] = 4 * i;
                    labels[4 * i - 1] = 4 * i - 2;
                }
            }
            Ok(lab(labels))
        }
        _ => match snake_case(k, n) {
            Some(_) => Ok(label_path(m)),
            None => Err(Error::UnsupportedParameters(format!(
                "no constructive labeling for the {k}-gonal snake of length {n}"
            ))),
        },
    }
}

/// Star `(k,n)`-gon for `k` in {3,4,5}: the snake of length `n+1` contracted
/// at its end base vertices.
pub fn label_star_gon(k: usize, n: usize) -> Result<Labeling> {
    if !(3..=5).contains(&k) {
        return Err(Error::UnsupportedParameters(format!(
            "no constructive labeling for the star ({k},{n})-gon"
        )));
    }
    if n < 3 {
        return Err(Error::InvalidSpec("stargon needs n >= 3".into()));
    }
    let snake = generate(&FamilySpec::Snake { k, n: n + 1 })?;
    let f = label_snake(k, n + 1)?;
    let m = snake.vertex_count();
    let (_, g) = contract_one_max(&snake, &f, 1, m)?;
    Ok(g)
}

/// Pentagonal book `B_{5,n}`.
pub fn label_book5(n: usize) -> Result<Labeling> {
    if n < 1 {
        return Err(Error::InvalidSpec("book needs n >= 1".into()));
    }
    let mut labels = vec![0; 3 * n + 2];
    // u1, u2, then page 1 as (v1, w1, x1).
    labels[..5].copy_from_slice(&[3, 1, 2, 4, 5]);
    for i in 2..=n {
        let v = 3 * i; // vertex id of v_i
        let (w, x) = if i % 2 == 1 {
            (3 * i + 1, 3 * i + 2)
        } else {
            (3 * i + 2, 3 * i + 1)
        };
        labels[v - 1] = 3 * i;
        labels[v] = w;
        labels[v + 1] = x;
    }
    Ok(lab(labels))
}

/// Möbius ladder `M_{2n}`: `f(u_i) = 2i-1`, `f(v_i) = 2i`.
pub fn label_mobius(n: usize) -> Result<Labeling> {
    if n < 3 {
        return Err(Error::InvalidSpec("mobius needs n >= 3".into()));
    }
    let mut labels = vec![0; 2 * n];
    for i in 1..=n {
        labels[i - 1] = 2 * i - 1;
        labels[n + i - 1] = 2 * i;
    }
    Ok(lab(labels))
}
