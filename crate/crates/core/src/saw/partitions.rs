use crate::scalar::Count;

/// `P_D(0..=max)`: partitions into distinct positive parts, `P_D(0) = 1`.
pub fn partitions_distinct_table<C: Count>(max: usize) -> Vec<C> {
    let mut p = vec![C::zero(); max + 1];
    p[0] = C::one();
    for part in 1..=max {
        for total in (part..=max).rev() {
            p[total] = p[total].checked_sum(&p[total - part]);
        }
    }
    p
}

pub fn partitions_distinct<C: Count>(a: usize) -> C {
    partitions_distinct_table::<C>(a).pop().unwrap()
}
