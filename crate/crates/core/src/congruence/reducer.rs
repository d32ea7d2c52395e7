//! The table pipeline: rewrites every S_I of a given weight as a rational
//! combination of that weight's generators, by a fixpoint over
//!
//!   * vanishing rules (length 1, repeated parts, self-reversed odd
//!     weight, self-dual),
//!   * the shipped table rows,
//!   * the reversal/duality orbit,
//!   * the double/triple closed forms,
//!   * the length-4 (even weight) and length-5 (odd weight) recursions,
//!     whose product terms recurse into lower weights,
//!   * the symmetric-sum relation over rearrangements.
//!
//! Anything left unresolved is reported; the verifier treats that as a
//! completeness failure for the weight table.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use crate::composition::{compositions_of_weight, Composition};
use crate::mhs::SumKind;
use crate::modp::ExactRational;

use super::combo::GenCombo;
use super::genexpr::GenExpr;
use super::reduce::{reduce_double, reduce_quad_even, reduce_quint_odd, reduce_triple};
use super::tables::{TableSet, WeightTable};

pub struct Reducer {
    resolved: HashMap<Composition, GenCombo>,
    unresolved: BTreeMap<u32, Vec<Composition>>,
    max_weight: u32,
}

impl Reducer {
    /// Builds reduction expressions for every composition of weight
    /// 1..=max_weight (the tables' top weight by default).
    pub fn new(tables: &TableSet) -> Reducer {
        Self::up_to(tables, tables.max_weight())
    }

    pub fn up_to(tables: &TableSet, max_weight: u32) -> Reducer {
        let mut reducer = Reducer {
            resolved: HashMap::new(),
            unresolved: BTreeMap::new(),
            max_weight,
        };
        for n in 1..=max_weight {
            reducer.build_weight(n, tables);
        }
        reducer
    }

    pub fn max_weight(&self) -> u32 {
        self.max_weight
    }

    /// The generator expression of S_I, when the pipeline reached one.
    pub fn reduce(&self, i: &Composition) -> Option<&GenCombo> {
        self.resolved.get(i)
    }

    /// Compositions of one weight the pipeline could not express.
    pub fn unresolved(&self, weight: u32) -> &[Composition] {
        self.unresolved.get(&weight).map_or(&[], Vec::as_slice)
    }

    fn build_weight(&mut self, n: u32, tables: &TableSet) {
        let fallback = empty_table(n);
        let table = tables.get(n).unwrap_or(&fallback);
        // Generators that are plain sums resolve to themselves.
        for g in &table.generators {
            if let Some((SumKind::Weak, comp)) = g.as_single() {
                self.resolved.insert(comp.clone(), GenCombo::from_expr(g.clone()));
            }
        }
        let comps = compositions_of_weight(n);
        loop {
            let mut progress = false;
            for i in &comps {
                if self.resolved.contains_key(i) {
                    continue;
                }
                if let Some(combo) = self.try_rules(i, n, table) {
                    self.resolved.insert(i.clone(), combo);
                    progress = true;
                }
            }
            if !progress {
                break;
            }
        }
        let missing: Vec<Composition> = comps
            .iter()
            .filter(|i| !self.resolved.contains_key(*i))
            .cloned()
            .collect();
        if !missing.is_empty() {
            self.unresolved.insert(n, missing);
        }
    }

    fn try_rules(&self, i: &Composition, n: u32, table: &WeightTable) -> Option<GenCombo> {
        let len = i.len();
        // Vanishing: length 1 and repeated parts give 0 for p > n+1;
        // self-reversed odd weight and self-dual compositions force
        // S_I ≡ −S_I.
        if i.parts().iter().all(|&p| p == i.parts()[0]) {
            return Some(GenCombo::zero());
        }
        if n % 2 == 1 && i.reverse() == *i {
            return Some(GenCombo::zero());
        }
        if i.dual().map_or(false, |d| d == *i) {
            return Some(GenCombo::zero());
        }
        // Shipped table row.
        if let Some(row) = table.row(&GenExpr::weak(i.clone())) {
            return Some(row.clone());
        }
        // Reversal/duality orbit: S_I ≡ (−1)^n S_Ī ≡ −S_{I*} ≡ (−1)^(n+1) S_Ī*.
        let sign_n = sign(n % 2 == 0);
        let dual = i.dual().expect("nonempty");
        let orbit: [(Composition, ExactRational); 3] = [
            (i.reverse(), sign_n.clone()),
            (dual.clone(), -one()),
            (dual.reverse(), -sign_n),
        ];
        for (mate, coeff) in orbit {
            if let Some(combo) = self.resolved.get(&mate) {
                return Some(combo.scale(&coeff));
            }
        }
        // Closed forms and recursions by length.
        let parts = i.parts();
        match (len, n % 2) {
            (2, _) => {
                let congruence = reduce_double(parts[0], parts[1]);
                self.resolve_combo(&congruence.rhs, table)
            }
            (3, 1) => {
                let congruence = reduce_triple(parts[0], parts[1], parts[2]).ok()?;
                self.resolve_combo(&congruence.rhs, table)
            }
            (4, 0) => {
                let congruence =
                    reduce_quad_even(parts[0], parts[1], parts[2], parts[3]).ok()?;
                self.resolve_combo(&congruence.rhs, table)
            }
            (5, 1) => {
                let congruence =
                    reduce_quint_odd(parts[0], parts[1], parts[2], parts[3], parts[4]).ok()?;
                self.resolve_combo(&congruence.rhs, table)
            }
            _ => self.symmetric_rule(i, n),
        }
        .or_else(|| self.symmetric_rule(i, n))
    }

    /// Rewrites an arbitrary combination (whose terms may be same-weight
    /// sums, lower-weight sums, or products of them) in terms of weight-n
    /// generators. Returns None if any piece is not yet resolved.
    fn resolve_combo(&self, combo: &GenCombo, table: &WeightTable) -> Option<GenCombo> {
        let mut acc = GenCombo::zero();
        for (expr, coeff) in combo.terms() {
            let mut expanded = GenCombo::from_term(one(), GenExpr::new(Vec::new()));
            for (kind, comp) in expr.factors() {
                debug_assert_eq!(*kind, SumKind::Weak);
                let factor = self.resolved.get(comp)?;
                expanded = expanded.mul(factor);
            }
            for (prod, c) in expanded.terms() {
                let normalized = self.normalize_expr(prod, table)?;
                acc = acc.add(&normalized.scale(&(coeff * c)));
            }
        }
        Some(acc)
    }

    /// Maps a product of generator atoms onto the weight table: either it
    /// is itself a declared generator, or a product row rewrites it.
    fn normalize_expr(&self, expr: &GenExpr, table: &WeightTable) -> Option<GenCombo> {
        if expr.factors().is_empty() {
            // Constant 1 can only arise with weight-0 content; treat as
            // unresolvable at positive weight.
            return None;
        }
        if table.is_generator(expr) {
            return Some(GenCombo::from_expr(expr.clone()));
        }
        if let Some(row) = table.row(expr) {
            return Some(row.clone());
        }
        None
    }

    /// Σ over distinct rearrangements τ of S_τ ≡ 0 (p > n+1). Solves for
    /// S_I when every other arrangement is resolved, folding S_Ī through
    /// reversal when needed.
    fn symmetric_rule(&self, i: &Composition, n: u32) -> Option<GenCombo> {
        let rev = i.reverse();
        let sign_rev = sign(n % 2 == 0);
        let mut self_coeff = ExactRational::zero();
        let mut acc = GenCombo::zero();
        for arr in i.rearrangements() {
            if arr == *i {
                self_coeff += one();
            } else if arr == rev {
                self_coeff += sign_rev.clone();
            } else if let Some(combo) = self.resolved.get(&arr) {
                acc = acc.add(combo);
            } else {
                return None;
            }
        }
        if self_coeff.is_zero() {
            return None;
        }
        Some(acc.scale(&(-one() / self_coeff)))
    }
}

fn one() -> ExactRational {
    ExactRational::from(num_bigint::BigInt::from(1))
}

fn sign(positive: bool) -> ExactRational {
    if positive {
        one()
    } else {
        -one()
    }
}

fn empty_table(weight: u32) -> WeightTable {
    WeightTable {
        weight,
        bound: weight as u64 + 1,
        generators: Vec::new(),
        rows: Vec::new(),
    }
}
