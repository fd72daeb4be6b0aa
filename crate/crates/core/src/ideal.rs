//! Gröbner bases, normal forms, and the decision procedures built on them:
//! unit-ideal test, radical membership via Rabinowitsch's trick, the
//! finiteness criterion, and standard-monomial bases.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use thiserror::Error;

use crate::coeff::Scalar;
use crate::poly::{Monomial, PolyError, Polynomial, Ring};

/// Default limit on S-pair reductions.
pub const DEFAULT_BUDGET: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("an ideal needs at least one generator")]
    NoGenerators,
    #[error("Gröbner computation exceeded its budget of {0} pair reductions")]
    BudgetExceeded(usize),
    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,
    #[error("invalid monomial order: {0}")]
    InvalidOrder(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderKind {
    Lex,
    GrevLex,
}

/// A monomial order on a fixed number of variables.
///
/// `var_order[0]` is the most significant variable. With `eliminate = Some(t)`
/// the exponent of `X_t` is compared first (a block order with `{X_t}` as the
/// first block), then the remaining comparison applies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialOrder {
    kind: OrderKind,
    var_order: Vec<usize>,
    eliminate: Option<usize>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, var_order: Vec<usize>) -> Result<Self, IdealError> {
        let mut seen = vec![false; var_order.len()];
        for &v in &var_order {
            if v >= seen.len() || seen[v] {
                return Err(IdealError::InvalidOrder(format!("{var_order:?} is not a permutation")));
            }
            seen[v] = true;
        }
        Ok(MonomialOrder { kind, var_order, eliminate: None })
    }

    pub fn lex(nvars: usize) -> Self {
        MonomialOrder { kind: OrderKind::Lex, var_order: (0..nvars).collect(), eliminate: None }
    }

    pub fn grevlex(nvars: usize) -> Self {
        MonomialOrder { kind: OrderKind::GrevLex, var_order: (0..nvars).collect(), eliminate: None }
    }

    /// The same order with `X_var` compared before everything else.
    pub fn eliminating(mut self, var: usize) -> Result<Self, IdealError> {
        if var >= self.var_order.len() {
            return Err(IdealError::InvalidOrder(format!("variable {var} out of range")));
        }
        self.eliminate = Some(var);
        Ok(self)
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn var_order(&self) -> &[usize] {
        &self.var_order
    }

    pub fn nvars(&self) -> usize {
        self.var_order.len()
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (x, y) = (a.exps(), b.exps());
        if let Some(t) = self.eliminate {
            match x[t].cmp(&y[t]) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        match self.kind {
            OrderKind::Lex => {
                for &v in &self.var_order {
                    match x[v].cmp(&y[v]) {
                        Ordering::Equal => {}
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            OrderKind::GrevLex => {
                match a.degree().cmp(&b.degree()) {
                    Ordering::Equal => {}
                    o => return o,
                }
                for &v in self.var_order.iter().rev() {
                    match x[v].cmp(&y[v]) {
                        Ordering::Equal => {}
                        o => return o.reverse(),
                    }
                }
                Ordering::Equal
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerConfig {
    pub order: MonomialOrder,
    pub budget: usize,
}

impl GroebnerConfig {
    pub fn new(order: MonomialOrder) -> Self {
        GroebnerConfig { order, budget: DEFAULT_BUDGET }
    }

    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = budget;
        self
    }
}

/// Terms sorted ascending in the order, leading term last.
#[derive(Debug, Clone)]
struct OPoly {
    terms: Vec<(Monomial, Scalar)>,
}

impl OPoly {
    fn from_poly(f: &Polynomial, order: &MonomialOrder) -> Self {
        let mut terms: Vec<(Monomial, Scalar)> = f.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.sort_by(|a, b| order.cmp(&a.0, &b.0));
        OPoly { terms }
    }

    fn to_poly(&self, ring: &Arc<Ring>) -> Polynomial {
        Polynomial::from_terms(ring, self.terms.iter().cloned()).expect("terms of this ring")
    }

    fn lead(&self) -> Option<&(Monomial, Scalar)> {
        self.terms.last()
    }

    fn lm(&self) -> &Monomial {
        &self.terms.last().expect("nonzero").0
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn monic(mut self) -> Self {
        if let Some((_, l)) = self.terms.last() {
            let inv = l.inv().expect("nonzero lead");
            for (_, c) in &mut self.terms {
                *c = &*c * &inv;
            }
        }
        self
    }

    /// `self − c · m · g`, merging two ascending lists.
    fn sub_scaled(&self, c: &Scalar, m: &Monomial, g: &OPoly, order: &MonomialOrder) -> OPoly {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = g.terms.iter().map(|(gm, gc)| (gm.mul(m), gc * c)).peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (Some(x), Some(y)) => order.cmp(&x.0, &y.0),
            };
            match ord {
                Ordering::Less => out.push(a.next().expect("peeked").clone()),
                Ordering::Greater => {
                    let (mm, cc) = b.next().expect("peeked");
                    out.push((mm, -cc));
                }
                Ordering::Equal => {
                    let (mm, x) = a.next().expect("peeked");
                    let (_, y) = b.next().expect("peeked");
                    let v = x - &y;
                    if !v.is_zero() {
                        out.push((mm.clone(), v));
                    }
                }
            }
        }
        OPoly { terms: out }
    }
}

/// A monomial ordered by a runtime [`MonomialOrder`].
struct Keyed<'a> {
    m: Monomial,
    order: &'a MonomialOrder,
}

impl PartialEq for Keyed<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m
    }
}

impl Eq for Keyed<'_> {}

impl PartialOrd for Keyed<'_> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Keyed<'_> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order.cmp(&self.m, &other.m)
    }
}

/// Full reduction of `f` by `basis`; every term of the result is irreducible.
fn reduce(f: &OPoly, basis: &[OPoly], order: &MonomialOrder) -> OPoly {
    let mut p: BTreeMap<Keyed<'_>, Scalar> =
        f.terms.iter().map(|(m, c)| (Keyed { m: m.clone(), order }, c.clone())).collect();
    let mut rem: Vec<(Monomial, Scalar)> = Vec::new();
    while let Some((Keyed { m, .. }, c)) = p.pop_last() {
        match basis.iter().find(|g| g.lm().divides(&m)) {
            Some(g) => {
                let (gm, gc) = g.lead().expect("nonzero");
                let q = m.div(gm).expect("divides");
                let coef = c.checked_div(gc).expect("nonzero lead");
                for (tm, tc) in &g.terms[..g.terms.len() - 1] {
                    let delta = tc * &coef;
                    match p.entry(Keyed { m: tm.mul(&q), order }) {
                        Entry::Occupied(mut e) => {
                            let v = e.get() - &delta;
                            if v.is_zero() {
                                e.remove();
                            } else {
                                *e.get_mut() = v;
                            }
                        }
                        Entry::Vacant(e) => {
                            e.insert(-delta);
                        }
                    }
                }
            }
            None => rem.push((m, c)),
        }
    }
    rem.reverse();
    OPoly { terms: rem }
}

/// Reduced Gröbner basis: monic, inter-reduced, sorted by decreasing leading monomial.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    ring: Arc<Ring>,
    order: MonomialOrder,
    gens: Vec<OPoly>,
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.order == other.order && self.generators() == other.generators()
    }
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn generators(&self) -> Vec<Polynomial> {
        self.gens.iter().map(|g| g.to_poly(&self.ring)).collect()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.gens.iter().map(|g| g.lm().clone()).collect()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].lm().is_one()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial, IdealError> {
        check_ring(&self.ring, f)?;
        Ok(reduce(&OPoly::from_poly(f, &self.order), &self.gens, &self.order).to_poly(&self.ring))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool, IdealError> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Leading monomial of `f` in this basis' order.
    pub fn leading_monomial(&self, f: &Polynomial) -> Option<Monomial> {
        f.terms().map(|(m, _)| m).max_by(|a, b| self.order.cmp(a, b)).cloned()
    }

    /// For each variable, the smallest `k` with `X_i^k` a leading monomial.
    fn pure_power_bounds(&self) -> Vec<Option<u32>> {
        let n = self.ring.nvars();
        let mut bounds = vec![None; n];
        for g in &self.gens {
            let e = g.lm().exps();
            let support: Vec<usize> = (0..n).filter(|&i| e[i] > 0).collect();
            if let [i] = support[..] {
                bounds[i] = Some(bounds[i].map_or(e[i], |b: u32| b.min(e[i])));
            }
        }
        bounds
    }
}

fn check_ring(ring: &Arc<Ring>, f: &Polynomial) -> Result<(), IdealError> {
    if f.field() != ring.field() {
        return Err(PolyError::FieldMismatch(ring.field(), f.field()).into());
    }
    if f.ring().vars() != ring.vars() {
        return Err(PolyError::VariableMismatch.into());
    }
    Ok(())
}

fn common_ring(gens: &[Polynomial]) -> Result<Arc<Ring>, IdealError> {
    let first = gens.first().ok_or(IdealError::NoGenerators)?;
    let ring = first.ring().clone();
    for g in &gens[1..] {
        check_ring(&ring, g)?;
    }
    Ok(ring)
}

fn spoly(f: &OPoly, g: &OPoly, order: &MonomialOrder) -> OPoly {
    let (fm, fc) = f.lead().expect("nonzero");
    let (gm, gc) = g.lead().expect("nonzero");
    let l = fm.lcm(gm);
    let one = Scalar::one(fc.field());
    let zero = OPoly { terms: Vec::new() };
    let a = zero.sub_scaled(&one.checked_div(fc).expect("nonzero"), &l.div(fm).expect("lcm"), f, order);
    // a = −(l/fm)·f/fc; subtracting −(l/gm)·g/gc gives the S-polynomial up to sign
    a.sub_scaled(&(-&one.checked_div(gc).expect("nonzero")), &l.div(gm).expect("lcm"), g, order)
}

/// Buchberger's algorithm with the normal selection strategy and both of
/// Buchberger's criteria, followed by inter-reduction.
pub fn buchberger(gens: &[Polynomial], order: &MonomialOrder) -> Result<GroebnerBasis, IdealError> {
    buchberger_with(gens, &GroebnerConfig::new(order.clone()))
}

pub fn buchberger_with(gens: &[Polynomial], config: &GroebnerConfig) -> Result<GroebnerBasis, IdealError> {
    let ring = common_ring(gens)?;
    let order = &config.order;
    if order.nvars() != ring.nvars() {
        return Err(IdealError::InvalidOrder(format!(
            "order has {} variables, ring has {}",
            order.nvars(),
            ring.nvars()
        )));
    }
    let unit = |ring: &Arc<Ring>| GroebnerBasis {
        ring: ring.clone(),
        order: order.clone(),
        gens: vec![OPoly::from_poly(&Polynomial::one(ring), order)],
    };
    let mut basis: Vec<OPoly> = Vec::new();
    for g in gens {
        let h = reduce(&OPoly::from_poly(g, order), &basis, order);
        if h.is_zero() {
            continue;
        }
        let h = h.monic();
        if h.lm().is_one() {
            return Ok(unit(&ring));
        }
        basis.push(h);
    }
    let mut pending: BTreeSet<(u64, usize, usize)> = BTreeSet::new();
    let mut done: BTreeSet<(usize, usize)> = BTreeSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pending.insert((basis[i].lm().lcm(basis[j].lm()).degree(), i, j));
        }
    }
    let mut reductions = 0usize;
    while let Some(&key) = pending.iter().next() {
        pending.remove(&key);
        let (_, i, j) = key;
        done.insert((i, j));
        let (li, lj) = (basis[i].lm().clone(), basis[j].lm().clone());
        if li.is_coprime(&lj) {
            continue;
        }
        let l = li.lcm(&lj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lm().divides(&l)
                && done.contains(&(i.min(k), i.max(k)))
                && done.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        reductions += 1;
        if reductions > config.budget {
            return Err(IdealError::BudgetExceeded(config.budget));
        }
        let h = reduce(&spoly(&basis[i], &basis[j], order), &basis, order);
        if h.is_zero() {
            continue;
        }
        let h = h.monic();
        if h.lm().is_one() {
            return Ok(unit(&ring));
        }
        let new = basis.len();
        for (k, g) in basis.iter().enumerate() {
            pending.insert((g.lm().lcm(h.lm()).degree(), k, new));
        }
        basis.push(h);
    }
    Ok(GroebnerBasis { ring: ring.clone(), order: order.clone(), gens: interreduce(basis, order) })
}

fn interreduce(basis: Vec<OPoly>, order: &MonomialOrder) -> Vec<OPoly> {
    // drop generators whose leading monomial is divisible by another's
    let mut minimal: Vec<OPoly> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let redundant =
            basis.iter().enumerate().any(|(l, h)| l != k && h.lm().divides(g.lm()) && (h.lm() != g.lm() || l < k));
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<OPoly> = minimal.iter().enumerate().filter(|&(l, _)| l != k).map(|(_, h)| h.clone()).collect();
        reduced.push(reduce(&minimal[k], &others, order).monic());
    }
    reduced.sort_by(|a, b| order.cmp(b.lm(), a.lm()));
    reduced
}

pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial, IdealError> {
    gb.normal_form(f)
}

/// Default order for ideal computations: grevlex in the ring's variable order.
pub fn default_order(ring: &Ring) -> MonomialOrder {
    MonomialOrder::grevlex(ring.nvars())
}

/// True iff `1 ∈ ⟨gens⟩`, i.e. the gens have no common zero over the algebraic closure.
pub fn is_unit_ideal(gens: &[Polynomial]) -> Result<bool, IdealError> {
    let ring = common_ring(gens)?;
    Ok(buchberger(gens, &default_order(&ring))?.is_unit())
}

/// Tests `f ∈ √⟨gens⟩` by checking whether `gens ∪ {1 − t·f}` generates the
/// unit ideal, with a fresh variable `t` appended last.
pub fn radical_membership(f: &Polynomial, gens: &[Polynomial]) -> Result<bool, IdealError> {
    radical_membership_with(f, gens, DEFAULT_BUDGET)
}

pub fn radical_membership_with(f: &Polynomial, gens: &[Polynomial], budget: usize) -> Result<bool, IdealError> {
    let ring = common_ring(gens)?;
    check_ring(&ring, f)?;
    let n = ring.nvars();
    let big = ring.with_var(ring.fresh_name("t"))?;
    let mut lifted = gens.iter().map(|g| g.extend_to(&big)).collect::<Result<Vec<_>, _>>()?;
    let t = Polynomial::var(&big, n);
    let rab = &Polynomial::one(&big) - &(&t * &f.extend_to(&big)?);
    lifted.push(rab);
    let order = MonomialOrder::grevlex(n + 1).eliminating(n)?;
    let gb = buchberger_with(&lifted, &GroebnerConfig::new(order).with_budget(budget))?;
    Ok(gb.is_unit())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Finiteness {
    /// The quotient has this dimension; `0` for the unit ideal.
    Finite {
        dim: usize,
    },
    Infinite,
}

pub fn finiteness_check(gens: &[Polynomial]) -> Result<Finiteness, IdealError> {
    let ring = common_ring(gens)?;
    finiteness_of(&buchberger(gens, &default_order(&ring))?)
}

/// Finiteness read off a Gröbner basis: every variable needs a pure-power leading monomial.
pub fn finiteness_of(gb: &GroebnerBasis) -> Result<Finiteness, IdealError> {
    if gb.is_unit() {
        return Ok(Finiteness::Finite { dim: 0 });
    }
    if gb.pure_power_bounds().iter().any(Option::is_none) {
        return Ok(Finiteness::Infinite);
    }
    Ok(Finiteness::Finite { dim: quotient_basis(gb)?.len() })
}

/// Standard monomials of a zero-dimensional ideal, ascending in graded-lex order.
pub fn quotient_basis(gb: &GroebnerBasis) -> Result<Vec<Monomial>, IdealError> {
    if gb.is_unit() {
        return Ok(Vec::new());
    }
    let bounds: Vec<u32> =
        gb.pure_power_bounds().into_iter().collect::<Option<Vec<_>>>().ok_or(IdealError::NotZeroDimensional)?;
    let leads = gb.leading_monomials();
    let mut out = Vec::new();
    let mut exps = vec![0u32; bounds.len()];
    loop {
        let m = Monomial::new(exps.clone());
        if !leads.iter().any(|l| l.divides(&m)) {
            out.push(m);
        }
        // odometer over the box ∏ [0, bound_i)
        let mut i = 0;
        loop {
            if i == exps.len() {
                out.sort();
                return Ok(out);
            }
            exps[i] += 1;
            if exps[i] < bounds[i] {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}
