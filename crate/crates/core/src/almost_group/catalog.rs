//! Small almost groups used throughout the tests, the CLI and the demo.

use super::AlmostGroup;

/// The cyclic group `Z/n` on labels `0..n`.
pub fn cyclic(n: usize) -> AlmostGroup {
    assert!(n >= 1);
    let table: Vec<Vec<usize>> = (0..n)
        .map(|x| (0..n).map(|y| (x + y) % n).collect())
        .collect();
    AlmostGroup::from_group(&table, 0).expect("cyclic table is a group")
}

/// The symmetric group on `n` letters, permutations in lexicographic order and
/// labelled by one-line notation.
pub fn symmetric(n: usize) -> AlmostGroup {
    assert!((1..=6).contains(&n));
    let mut perms: Vec<Vec<usize>> = Vec::new();
    permutations(&mut (0..n).collect(), 0, &mut perms);
    perms.sort();
    let index = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
    // (p·q)(k) = p(q(k))
    let table: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| {
            perms
                .iter()
                .map(|q| index(&q.iter().map(|&k| p[k]).collect::<Vec<_>>()))
                .collect()
        })
        .collect();
    let labels = perms
        .iter()
        .map(|p| p.iter().map(|k| (k + 1).to_string()).collect::<String>())
        .collect();
    AlmostGroup::from_group(&table, 0)
        .and_then(|g| g.with_labels(labels))
        .expect("permutation table is a group")
}

fn permutations(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == items.len() {
        out.push(items.clone());
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, out);
        items.swap(k, i);
    }
}

/// `Z/2 × Z/2` as a group.
pub fn klein_four() -> AlmostGroup {
    AlmostGroup::direct_product(&cyclic(2), &cyclic(2)).expect("product of groups")
}

/// `{a, b, c}` with every product equal to `a`, `x^i = x` and `J = {a, b}`.
pub fn constant_product() -> AlmostGroup {
    AlmostGroup::build(
        vec!["a".into(), "b".into(), "c".into()],
        vec![vec![0; 3]; 3],
        vec![0, 1, 2],
        vec![0, 1],
    )
    .unwrap()
}

/// `{a, b, c}` where `a` is a two-sided unit, all other products are `b`,
/// `x^i = x` and `J = {a, b}`.
pub fn unit_and_absorbing() -> AlmostGroup {
    AlmostGroup::build(
        vec!["a".into(), "b".into(), "c".into()],
        vec![vec![0, 1, 2], vec![1, 1, 1], vec![2, 1, 1]],
        vec![0, 1, 2],
        vec![0, 1],
    )
    .unwrap()
}

/// `A × A` with the swap involution, for an abelian group `A`.
pub fn swap_pair(a: &AlmostGroup) -> AlmostGroup {
    AlmostGroup::pair_construction(a).expect("abelian group")
}

/// The named structures exercised by the acceptance suite: `Z/n` for
/// `n ≤ 12`, `S3`, both three-element examples, and `A×A` for
/// `A ∈ {Z/2, Z/3, Z/4, Z/2×Z/2}`.
pub fn standard_structures() -> Vec<(String, AlmostGroup)> {
    let mut out: Vec<(String, AlmostGroup)> =
        (1..=12).map(|n| (format!("Z/{n}"), cyclic(n))).collect();
    out.push(("S3".into(), symmetric(3)));
    out.push(("constant-product".into(), constant_product()));
    out.push(("unit-and-absorbing".into(), unit_and_absorbing()));
    out.push(("pair(Z/2)".into(), swap_pair(&cyclic(2))));
    out.push(("pair(Z/3)".into(), swap_pair(&cyclic(3))));
    out.push(("pair(Z/4)".into(), swap_pair(&cyclic(4))));
    out.push(("pair(Z/2xZ/2)".into(), swap_pair(&klein_four())));
    out
}
