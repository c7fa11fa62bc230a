use crate::error::{Error, Result};

/// Values with their fractional (tie-averaged) ranks, 1-based.
#[derive(Debug, Clone, PartialEq)]
pub struct RankedSeries {
    pub values: Vec<f64>,
    pub ranks: Vec<f64>,
}

impl RankedSeries {
    pub fn new(values: &[f64]) -> RankedSeries {
        let n = values.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
        let mut ranks = vec![0.0; n];
        let mut i = 0;
        while i < n {
            let mut j = i + 1;
            while j < n && values[order[j]] == values[order[i]] {
                j += 1;
            }
            // positions i..j share the mean of ranks i+1..=j
            let rank = (i + 1 + j) as f64 / 2.0;
            for &k in &order[i..j] {
                ranks[k] = rank;
            }
            i = j;
        }
        RankedSeries {
            values: values.to_vec(),
            ranks,
        }
    }
}

pub fn pearson(x: &[f64], y: &[f64]) -> Result<f64> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch(x.len(), y.len()));
    }
    if x.len() < 2 {
        return Err(Error::Undefined(
            "correlation needs at least 2 points".into(),
        ));
    }
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let (mut sxx, mut syy, mut sxy) = (0.0, 0.0, 0.0);
    for (a, b) in x.iter().zip(y) {
        let (dx, dy) = (a - mx, b - my);
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if sxx == 0.0 || syy == 0.0 {
        return Err(Error::Undefined("correlation of a constant series".into()));
    }
    // sqrt of the product gives exactly 1 for identical series
    Ok((sxy / (sxx * syy).sqrt()).clamp(-1.0, 1.0))
}

/// Spearman's rank correlation with average ranks for ties.
pub fn spearman(x: &[f64], y: &[f64]) -> Result<f64> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch(x.len(), y.len()));
    }
    pearson(&RankedSeries::new(x).ranks, &RankedSeries::new(y).ranks)
}

/// Spearman over the positions where both values are defined. Returns the
/// coefficient (or the reason it is undefined) and the number of dropped pairs.
pub fn spearman_pairwise(x: &[Option<f64>], y: &[Option<f64>]) -> (Result<f64>, usize) {
    if x.len() != y.len() {
        return (Err(Error::LengthMismatch(x.len(), y.len())), 0);
    }
    let (xs, ys): (Vec<f64>, Vec<f64>) = x
        .iter()
        .zip(y)
        .filter_map(|(a, b)| Some(((*a)?, (*b)?)))
        .unzip();
    let dropped = x.len() - xs.len();
    (spearman(&xs, &ys), dropped)
}
