use super::LinComb;

/// Rank over ℚ of the matrix whose columns are `cols`, by Gaussian elimination.
pub fn rank<K: Ord + Clone>(cols: &[LinComb<K>]) -> usize {
    let mut pivots: Vec<(K, LinComb<K>)> = Vec::new();
    for col in cols {
        let mut v = col.clone();
        for (key, p) in &pivots {
            let c = v.coeff(key);
            if !c.is_zero() {
                v = &v - &p.scale(&c);
            }
        }
        if let Some((key, c)) = v.terms().next().map(|(k, c)| (k.clone(), c.clone())) {
            let inv = c.recip().expect("nonzero pivot");
            let p = v.scale(&inv);
            // keep earlier pivots reduced against the new one
            for (_, q) in pivots.iter_mut() {
                let d = q.coeff(&key);
                if !d.is_zero() {
                    *q = &*q - &p.scale(&d);
                }
            }
            pivots.push((key, p));
        }
    }
    pivots.len()
}
