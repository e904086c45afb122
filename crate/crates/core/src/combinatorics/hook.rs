use std::collections::HashMap;
use std::sync::RwLock;

use num_bigint::BigUint;
use num_traits::One;

use super::partition::Partition;

/// Number of standard Young tableaux of shape `λ` by the hook-length formula
/// `d_λ = |λ|! / Π h(i,j)`, in exact integer arithmetic.
pub fn hook_dim(lambda: &Partition) -> BigUint {
    let n = lambda.size();
    let conj = lambda.conjugate();
    let mut hooks = BigUint::one();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = conj.parts()[j] - i - 1;
            hooks *= (arm + leg + 1) as u64;
        }
    }
    let mut fact = BigUint::one();
    for k in 2..=n as u64 {
        fact *= k;
    }
    fact / hooks
}

/// Thread-safe memo table for [`hook_dim`].
#[derive(Debug, Default)]
pub struct HookCache {
    table: RwLock<HashMap<Partition, BigUint>>,
}

impl HookCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, lambda: &Partition) -> BigUint {
        if let Some(d) = self.table.read().unwrap().get(lambda) {
            return d.clone();
        }
        let d = hook_dim(lambda);
        self.table.write().unwrap().insert(lambda.clone(), d.clone());
        d
    }

    pub fn len(&self) -> usize {
        self.table.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
