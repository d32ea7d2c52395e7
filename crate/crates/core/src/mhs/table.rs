//! Memoized harmonic-sum values at a fixed prime.

use std::collections::HashMap;

use crate::composition::Composition;
use crate::mhs::eval::{eval_mod_p, SumKind};
use crate::modp::{PrimeCtx, Residue};

/// Caches (kind, composition) → residue for one prime context. Intended
/// to be instantiated per worker; methods take `&mut self`.
pub struct SumTable<'a> {
    ctx: &'a PrimeCtx,
    map: HashMap<(SumKind, Composition), u64>,
    hits: u64,
    evaluations: u64,
}

impl<'a> SumTable<'a> {
    pub fn new(ctx: &'a PrimeCtx) -> Self {
        SumTable { ctx, map: HashMap::new(), hits: 0, evaluations: 0 }
    }

    pub fn ctx(&self) -> &'a PrimeCtx {
        self.ctx
    }

    pub fn value(&mut self, kind: SumKind, i: &Composition) -> Residue {
        if let Some(&v) = self.map.get(&(kind, i.clone())) {
            self.hits += 1;
            return self.ctx.res(v);
        }
        self.evaluations += 1;
        let v = eval_mod_p(kind, i, self.ctx);
        self.map.insert((kind, i.clone()), v.value());
        v
    }

    /// (cache hits, fresh evaluations)
    pub fn stats(&self) -> (u64, u64) {
        (self.hits, self.evaluations)
    }
}
