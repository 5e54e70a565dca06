#![allow(dead_code)]

use nlrep::partitions::enumerate_partitions;
use nlrep::tableaux::{SkewShape, SkewTableau};
use nlrep::Partition;

pub fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

pub fn partitions_of(n: u32) -> Vec<Partition> {
    enumerate_partitions(n, None, None).unwrap()
}

pub fn partitions_up_to(n: u32) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

/// p(0..=n) from Euler's pentagonal number recurrence.
pub fn partition_counts(n: usize) -> Vec<u64> {
    let mut counts = vec![0i64; n + 1];
    counts[0] = 1;
    for m in 1..=n as i64 {
        let mut total = 0i64;
        let mut k = 1i64;
        loop {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > m {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            total += sign * counts[(m - g1) as usize];
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= m {
                total += sign * counts[(m - g2) as usize];
            }
            k += 1;
        }
        counts[m as usize] = total;
    }
    counts.into_iter().map(|c| c as u64).collect()
}

/// Every function from the boxes of `shape` to `1..=alphabet`, as tableaux.
pub fn all_fillings(shape: &SkewShape, alphabet: u32) -> Vec<SkewTableau> {
    let lens: Vec<usize> = (0..shape.rows()).map(|r| shape.row_len(r)).collect();
    let total: usize = lens.iter().sum();
    let mut out = Vec::new();
    let mut flat = vec![1u32; total];
    loop {
        let mut rows = Vec::with_capacity(lens.len());
        let mut at = 0;
        for &len in &lens {
            rows.push(flat[at..at + len].to_vec());
            at += len;
        }
        out.push(SkewTableau::new(shape.clone(), rows).unwrap());
        // odometer increment
        let mut i = 0;
        loop {
            if i == total {
                return out;
            }
            if flat[i] < alphabet {
                flat[i] += 1;
                break;
            }
            flat[i] = 1;
            i += 1;
        }
    }
}

/// c^nu_{lambda mu} by filtering all fillings of nu/lambda.
pub fn brute_force_lr(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() + mu.size() != nu.size() || !lambda.is_contained_in(nu) {
        return 0;
    }
    let shape = SkewShape::new(nu.clone(), lambda.clone()).unwrap();
    let alphabet = mu.length().max(1) as u32;
    all_fillings(&shape, alphabet)
        .into_iter()
        .filter(|t| t.is_lr_tableau() && t.content() == mu.parts())
        .count() as u64
}
