//! Finite posets, their order and chain polytopes, the transfer map between
//! them, and piecewise-linear rowmotion.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactgeom::{HPolytope, Rat};

/// Values indexed by poset element.
pub type PosetFunction = Vec<Rat>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    size: usize,
    covers: Vec<(usize, usize)>,
    upper: Vec<Vec<usize>>,
    lower: Vec<Vec<usize>>,
    leq: Vec<Vec<bool>>,
    /// Bottom-to-top order.
    extension: Vec<usize>,
    chains_shape: Option<(usize, usize)>,
}

#[allow(clippy::needless_range_loop)]
fn closure(size: usize, pairs: &[(usize, usize)]) -> Result<Vec<Vec<bool>>> {
    let mut leq = vec![vec![false; size]; size];
    for (p, row) in leq.iter_mut().enumerate() {
        row[p] = true;
    }
    for &(p, q) in pairs {
        if p >= size || q >= size {
            return Err(Error::InvalidInput(format!(
                "relation ({p}, {q}) out of range"
            )));
        }
        leq[p][q] = true;
    }
    for k in 0..size {
        for i in 0..size {
            if leq[i][k] {
                for j in 0..size {
                    if leq[k][j] {
                        leq[i][j] = true;
                    }
                }
            }
        }
    }
    for i in 0..size {
        for j in 0..i {
            if leq[i][j] && leq[j][i] {
                return Err(Error::InvalidInput("relations contain a cycle".into()));
            }
        }
    }
    Ok(leq)
}

impl Poset {
    /// Poset generated by cover relations `p ⋖ q`, which must be irredundant.
    pub fn new(size: usize, covers: &[(usize, usize)]) -> Result<Self> {
        let poset = Poset::from_relations(size, covers)?;
        let mut given = covers.to_vec();
        given.sort_unstable();
        given.dedup();
        if given != poset.covers {
            return Err(Error::InvalidInput(
                "cover relations are not irredundant".into(),
            ));
        }
        Ok(poset)
    }

    /// Poset generated by arbitrary relations `p < q`.
    pub fn from_relations(size: usize, relations: &[(usize, usize)]) -> Result<Self> {
        let leq = closure(size, relations)?;
        let lt = |p: usize, q: usize| p != q && leq[p][q];
        let mut covers = Vec::new();
        for p in 0..size {
            for q in 0..size {
                if lt(p, q) && !(0..size).any(|r| lt(p, r) && lt(r, q)) {
                    covers.push((p, q));
                }
            }
        }
        let mut upper = vec![Vec::new(); size];
        let mut lower = vec![Vec::new(); size];
        for &(p, q) in &covers {
            upper[p].push(q);
            lower[q].push(p);
        }
        let mut extension: Vec<usize> = (0..size).collect();
        extension.sort_by_key(|&p| (0..size).filter(|&q| lt(q, p)).count());
        Ok(Poset {
            size,
            covers,
            upper,
            lower,
            leq,
            extension,
            chains_shape: None,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn upper_covers(&self, p: usize) -> &[usize] {
        &self.upper[p]
    }

    pub fn lower_covers(&self, p: usize) -> &[usize] {
        &self.lower[p]
    }

    pub fn leq(&self, p: usize, q: usize) -> bool {
        self.leq[p][q]
    }

    pub fn comparable(&self, p: usize, q: usize) -> bool {
        self.leq[p][q] || self.leq[q][p]
    }

    /// A linear extension, listed from bottom to top.
    pub fn linear_extension(&self) -> &[usize] {
        &self.extension
    }

    pub fn is_linear_extension(&self, order: &[usize]) -> bool {
        let mut pos = vec![usize::MAX; self.size];
        for (i, &p) in order.iter().enumerate() {
            if p >= self.size || pos[p] != usize::MAX {
                return false;
            }
            pos[p] = i;
        }
        order.len() == self.size && self.covers.iter().all(|&(p, q)| pos[p] < pos[q])
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.size)
            .filter(|&p| self.lower[p].is_empty())
            .collect()
    }

    pub fn maximal_chains(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut stack: Vec<Vec<usize>> = self
            .minimal_elements()
            .into_iter()
            .map(|p| vec![p])
            .collect();
        while let Some(chain) = stack.pop() {
            let top = *chain.last().unwrap();
            if self.upper[top].is_empty() {
                out.push(chain);
                continue;
            }
            for &q in self.upper[top].iter().rev() {
                let mut next = chain.clone();
                next.push(q);
                stack.push(next);
            }
        }
        out.sort();
        out
    }

    /// `(n, m)` when this poset was built as `[n] x [m]`.
    pub fn chains_shape(&self) -> Option<(usize, usize)> {
        self.chains_shape
    }

    pub fn is_antichain(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &p)| set[i + 1..].iter().all(|&q| !self.comparable(p, q)))
    }

    pub fn is_order_filter(&self, set: &[bool]) -> bool {
        self.covers.iter().all(|&(p, q)| !set[p] || set[q])
    }

    pub fn in_order_polytope(&self, f: &[Rat]) -> bool {
        f.len() == self.size
            && f.iter().all(|v| !v.is_negative_value() && *v <= Rat::one())
            && self.covers.iter().all(|&(p, q)| f[p] <= f[q])
    }

    pub fn in_chain_polytope(&self, g: &[Rat]) -> bool {
        g.len() == self.size
            && g.iter().all(|v| !v.is_negative_value())
            && self.max_chain_sums(g).iter().all(|s| *s <= Rat::one())
    }

    /// For every `p`, the largest sum of `g` over a chain ending at `p`.
    fn max_chain_sums(&self, g: &[Rat]) -> Vec<Rat> {
        let mut h = vec![Rat::zero(); self.size];
        for &p in &self.extension {
            let below = self.lower[p]
                .iter()
                .map(|&q| h[q].clone())
                .max()
                .unwrap_or_else(Rat::zero);
            h[p] = below + &g[p];
        }
        h
    }
}

trait NegativeValue {
    fn is_negative_value(&self) -> bool;
}

impl NegativeValue for Rat {
    fn is_negative_value(&self) -> bool {
        *self < Rat::zero()
    }
}

/// `[n] x [m]` with element `(i, j)` at index `i * m + j` (0-based).
pub fn product_of_chains(n: usize, m: usize) -> Poset {
    assert!(n >= 1 && m >= 1, "chains must be nonempty");
    let mut covers = Vec::new();
    for i in 0..n {
        for j in 0..m {
            if i + 1 < n {
                covers.push((i * m + j, (i + 1) * m + j));
            }
            if j + 1 < m {
                covers.push((i * m + j, i * m + j + 1));
            }
        }
    }
    let mut poset = Poset::new(n * m, &covers).expect("product of chains is a poset");
    poset.chains_shape = Some((n, m));
    poset
}

/// `0 <= f <= 1` and `f(p) <= f(q)` for every cover `p ⋖ q`.
pub fn order_polytope(poset: &Poset) -> HPolytope {
    let mut h = HPolytope::new(poset.size);
    for p in 0..poset.size {
        h.add_sparse_inequality(&[(p, -1)], Rat::zero());
        h.add_sparse_inequality(&[(p, 1)], Rat::one());
    }
    for &(p, q) in &poset.covers {
        h.add_sparse_inequality(&[(p, 1), (q, -1)], Rat::zero());
    }
    h
}

/// `g >= 0` and `g` sums to at most 1 along every maximal chain.
pub fn chain_polytope(poset: &Poset) -> HPolytope {
    let mut h = HPolytope::new(poset.size);
    for p in 0..poset.size {
        h.add_sparse_inequality(&[(p, -1)], Rat::zero());
    }
    for chain in poset.maximal_chains() {
        let terms: Vec<(usize, i64)> = chain.into_iter().map(|p| (p, 1)).collect();
        h.add_sparse_inequality(&terms, Rat::one());
    }
    h
}

/// `phi(f)(p) = f(p) - max{f(q) : q ⋖ p}`, or `f(p)` at minimal `p`.
pub fn transfer(poset: &Poset, f: &[Rat]) -> Result<PosetFunction> {
    if !poset.in_order_polytope(f) {
        return Err(Error::NotInOrderPolytope);
    }
    Ok(transfer_unchecked(poset, f))
}

fn transfer_unchecked(poset: &Poset, f: &[Rat]) -> PosetFunction {
    (0..poset.size)
        .map(|p| {
            let below = poset.lower[p].iter().map(|&q| &f[q]).max();
            match below {
                Some(b) => &f[p] - b,
                None => f[p].clone(),
            }
        })
        .collect()
}

/// `phi^{-1}(g)(p)` is the largest sum of `g` over a chain ending at `p`.
pub fn transfer_inverse(poset: &Poset, g: &[Rat]) -> Result<PosetFunction> {
    if !poset.in_chain_polytope(g) {
        return Err(Error::NotInChainPolytope);
    }
    Ok(poset.max_chain_sums(g))
}

/// `phi^{-1}` extended homogeneously to `k C(P)`, where it lands in `k O(P)`.
pub fn transfer_inverse_dilated(poset: &Poset, g: &[Rat], k: u64) -> Result<PosetFunction> {
    if k == 0 {
        return Err(Error::InvalidInput(
            "dilation factor must be positive".into(),
        ));
    }
    let inv = Rat::new(1.into(), k.into());
    let scaled: Vec<Rat> = g.iter().map(|v| v * &inv).collect();
    if !poset.in_chain_polytope(&scaled) {
        return Err(Error::NotInChainPolytope);
    }
    Ok(poset.max_chain_sums(g))
}

/// The piecewise-linear toggle at `p`, with 1 above the top and 0 below the bottom.
pub fn toggle(poset: &Poset, f: &[Rat], p: usize) -> PosetFunction {
    let hi = poset.upper[p]
        .iter()
        .map(|&q| f[q].clone())
        .min()
        .unwrap_or_else(Rat::one);
    let lo = poset.lower[p]
        .iter()
        .map(|&q| f[q].clone())
        .max()
        .unwrap_or_else(Rat::zero);
    let mut out = f.to_vec();
    out[p] = hi + lo - &f[p];
    out
}

/// Toggles every element, top to bottom along `extension` (listed bottom to top).
pub fn rowmotion_order_with(
    poset: &Poset,
    f: &[Rat],
    extension: &[usize],
) -> Result<PosetFunction> {
    if !poset.in_order_polytope(f) {
        return Err(Error::NotInOrderPolytope);
    }
    if !poset.is_linear_extension(extension) {
        return Err(Error::InvalidInput("not a linear extension".into()));
    }
    let mut g = f.to_vec();
    for &p in extension.iter().rev() {
        g = toggle(poset, &g, p);
    }
    Ok(g)
}

pub fn rowmotion_order(poset: &Poset, f: &[Rat]) -> Result<PosetFunction> {
    rowmotion_order_with(poset, f, &poset.extension)
}

/// Rowmotion on the chain polytope, conjugated through the transfer map.
pub fn rowmotion_chain(poset: &Poset, g: &[Rat]) -> Result<PosetFunction> {
    let f = transfer_inverse(poset, g)?;
    let f = rowmotion_order(poset, &f)?;
    Ok(transfer_unchecked(poset, &f))
}

/// Iterates `step` from `start` until it returns; errors past `max_len` steps.
pub fn orbit(
    start: &[Rat],
    max_len: usize,
    step: impl Fn(&[Rat]) -> Result<PosetFunction>,
) -> Result<Vec<PosetFunction>> {
    let mut out = vec![start.to_vec()];
    loop {
        let next = step(out.last().unwrap())?;
        if next == start {
            return Ok(out);
        }
        if out.len() >= max_len {
            return Err(Error::BudgetExceeded(format!(
                "orbit longer than {max_len}"
            )));
        }
        out.push(next);
    }
}

/// Row sums of `g` followed by one minus its column sums, on `[n] x [m]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct STWord(pub Vec<Rat>);

impl Serialize for STWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(|v| v.to_string()))
    }
}

impl STWord {
    /// The word shifted so that entry `i + 1` moves to position `i`.
    pub fn rotated_left(&self) -> STWord {
        let mut w = self.0.clone();
        w.rotate_left(1);
        STWord(w)
    }

    pub fn rotated_right(&self) -> STWord {
        let mut w = self.0.clone();
        w.rotate_right(1);
        STWord(w)
    }
}

impl Serialize for Poset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        (self.size, &self.covers).serialize(s)
    }
}

pub fn stanley_thomas_word(poset: &Poset, g: &[Rat]) -> Result<STWord> {
    let (n, m) = poset.chains_shape.ok_or(Error::NotProductOfChains)?;
    if g.len() != n * m {
        return Err(Error::InvalidInput("function has the wrong length".into()));
    }
    let mut w = Vec::with_capacity(n + m);
    for i in 0..n {
        w.push(g[i * m..(i + 1) * m].iter().sum());
    }
    for j in 0..m {
        let col: Rat = (0..n).map(|i| &g[i * m + j]).sum();
        w.push(Rat::one() - col);
    }
    Ok(STWord(w))
}

/// Rowmotion on the chain polytope moves the word one step to the right.
pub const ST_ROTATES_RIGHT: bool = true;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::birkhoff::{build_restricted_birkhoff, BirkhoffSpec};
    use crate::exactgeom::{int, lattice_points, rat, vertices, RatMatrix};
    use proptest::prelude::*;
    use rand::{rngs::StdRng, Rng, SeedableRng};
    use std::collections::BTreeSet;

    fn ints(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| int(x)).collect()
    }

    fn subsets(m: usize) -> impl Iterator<Item = Vec<bool>> {
        (0u32..1 << m).map(move |mask| (0..m).map(|i| mask >> i & 1 == 1).collect())
    }

    fn sorted_points(h: &HPolytope) -> BTreeSet<Vec<Rat>> {
        vertices(h)
            .unwrap()
            .vertices
            .into_iter()
            .map(|v| v.0)
            .collect()
    }

    #[test]
    fn products_of_chains() {
        let p = product_of_chains(2, 2);
        assert_eq!((p.size(), p.covers().len()), (4, 4));
        assert_eq!(product_of_chains(1, 1).size(), 1);
        for n in 1..=5 {
            let expected = (1..n).fold(1usize, |acc, i| acc * (n - 1 + i) / i);
            assert_eq!(product_of_chains(n, n).maximal_chains().len(), expected);
        }
        assert!(Poset::new(3, &[(0, 1), (1, 2), (0, 2)]).is_err());
        assert!(Poset::new(2, &[(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn polytope_vertices_are_indicators() {
        let p = product_of_chains(2, 2);
        let antichains: BTreeSet<Vec<Rat>> = subsets(4)
            .filter(|s| {
                let set: Vec<usize> = (0..4).filter(|&i| s[i]).collect();
                p.is_antichain(&set)
            })
            .map(|s| s.iter().map(|&b| int(b as i64)).collect())
            .collect();
        assert_eq!(antichains.len(), 6);
        assert_eq!(sorted_points(&chain_polytope(&p)), antichains);
        let filters: BTreeSet<Vec<Rat>> = subsets(4)
            .filter(|s| p.is_order_filter(s))
            .map(|s| s.iter().map(|&b| int(b as i64)).collect())
            .collect();
        assert_eq!(filters.len(), 6);
        assert_eq!(sorted_points(&order_polytope(&p)), filters);
    }

    #[test]
    fn birkhoff_inside_chain_polytope() {
        let (n, k) = (3, 2);
        let mut h = chain_polytope(&product_of_chains(n, n)).dilate(k);
        for i in 0..n {
            h.add_sparse_equality(&(0..n).map(|j| (i * n + j, 1)).collect::<Vec<_>>(), int(1));
            h.add_sparse_equality(&(0..n).map(|j| (j * n + i, 1)).collect::<Vec<_>>(), int(1));
        }
        let b = build_restricted_birkhoff(BirkhoffSpec::new(n, k).unwrap());
        assert_eq!(sorted_points(&h), sorted_points(&b));
    }

    #[test]
    fn transfer_examples() {
        let p = product_of_chains(2, 2);
        let filter = ints(&[0, 1, 1, 1]);
        assert_eq!(transfer(&p, &filter).unwrap(), ints(&[0, 1, 1, 0]));
        assert_eq!(transfer(&p, &ints(&[0; 4])).unwrap(), ints(&[0; 4]));
        assert_eq!(
            transfer_inverse(&p, &ints(&[0, 1, 0, 0])).unwrap(),
            ints(&[0, 1, 0, 1])
        );
        assert_eq!(
            transfer(&p, &ints(&[1, 0, 0, 0])),
            Err(Error::NotInOrderPolytope)
        );
        assert_eq!(
            transfer_inverse(&p, &ints(&[1, 0, 0, 1])),
            Err(Error::NotInChainPolytope)
        );

        let (a, b, c, d) = (rat(1, 5), rat(1, 7), rat(1, 3), rat(1, 11));
        let f = transfer_inverse(&p, &[a.clone(), b.clone(), c.clone(), d.clone()]).unwrap();
        assert_eq!(f[0], a);
        assert_eq!(f[3], &a + &d + std::cmp::max(&b, &c));
    }

    #[test]
    fn transfer_inverse_leaves_m22() {
        // X = [[a, 1-a], [1-a, a]] with a = 1/4.
        let p = product_of_chains(2, 2);
        let a = rat(1, 4);
        let one_minus = Rat::one() - &a;
        let x = vec![a.clone(), one_minus.clone(), one_minus, a];
        assert_eq!(transfer_inverse(&p, &x), Err(Error::NotInChainPolytope));
        let y = transfer_inverse_dilated(&p, &x, 2).unwrap();
        let main: Rat = &y[0] + &y[3];
        assert_eq!(main, rat(3, 2));
        assert_ne!(main, int(2));
    }

    fn random_poset(rng: &mut StdRng, size: usize) -> Poset {
        let mut rel = Vec::new();
        for p in 0..size {
            for q in p + 1..size {
                if rng.gen_bool(0.3) {
                    rel.push((p, q));
                }
            }
        }
        Poset::from_relations(size, &rel).unwrap()
    }

    fn scaled_points(h: &HPolytope, t: u64) -> BTreeSet<Vec<Rat>> {
        let inv = Rat::new(1.into(), (t as i64).into());
        lattice_points(&h.dilate(t))
            .unwrap()
            .into_iter()
            .map(|v| v.iter().map(|x| x * &inv).collect())
            .collect()
    }

    #[test]
    fn transfer_bijects_lattice_points() {
        let mut rng = StdRng::seed_from_u64(7);
        for trial in 0..12 {
            let size = 1 + trial % 6;
            let p = random_poset(&mut rng, size);
            for t in 1..=3 {
                let o = scaled_points(&order_polytope(&p), t);
                let c = scaled_points(&chain_polytope(&p), t);
                let image: BTreeSet<Vec<Rat>> =
                    o.iter().map(|f| transfer(&p, f).unwrap()).collect();
                assert_eq!(image, c);
                for g in &c {
                    assert_eq!(&transfer(&p, &transfer_inverse(&p, g).unwrap()).unwrap(), g);
                }
            }
        }
    }

    #[test]
    fn st_word_examples() {
        let p = product_of_chains(2, 2);
        let w = stanley_thomas_word(&p, &ints(&[0, 1, 0, 0])).unwrap();
        assert_eq!(w.0, ints(&[1, 0, 1, 0]));
        let w = stanley_thomas_word(&p, &ints(&[0; 4])).unwrap();
        assert_eq!(w.0, ints(&[0, 0, 1, 1]));
        let chain = Poset::new(2, &[(0, 1)]).unwrap();
        assert_eq!(
            stanley_thomas_word(&chain, &ints(&[0, 0])),
            Err(Error::NotProductOfChains)
        );
        let x = RatMatrix::from_int_rows(&[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]);
        // x / 2 lies in B_3^2; halve it once more.
        let half: Vec<Rat> = x.entries().iter().map(|v| v / int(4)).collect();
        let w = stanley_thomas_word(&product_of_chains(3, 3), &half).unwrap();
        assert!(w.0.iter().all(|v| *v == rat(1, 2)));
    }

    #[test]
    fn rowmotion_on_indicators() {
        // Toggling top to bottom removes the minimal elements of a filter.
        let p = product_of_chains(2, 2);
        let f = ints(&[0, 1, 1, 1]);
        assert_eq!(rowmotion_order(&p, &f).unwrap(), ints(&[0, 0, 0, 1]));
        assert_eq!(
            rowmotion_order(&p, &ints(&[1; 4])).unwrap(),
            ints(&[0, 1, 1, 1])
        );
        assert_eq!(rowmotion_order(&p, &ints(&[0; 4])).unwrap(), ints(&[1; 4]));
        let zero_orbit = orbit(&ints(&[0; 4]), 10, |g| rowmotion_chain(&p, g)).unwrap();
        assert_eq!(4 % zero_orbit.len(), 0);
    }

    fn random_order_point(rng: &mut StdRng, p: &Poset, denom: i64) -> Vec<Rat> {
        let mut f = vec![Rat::zero(); p.size()];
        for &q in p.linear_extension() {
            let lo = p
                .lower_covers(q)
                .iter()
                .map(|&r| f[r].clone())
                .max()
                .unwrap_or_else(Rat::zero);
            let lo_num = (&lo * Rat::from_integer(denom.into())).to_integer();
            let lo_num: i64 = lo_num.try_into().unwrap();
            f[q] = rat(rng.gen_range(lo_num..=denom), denom);
        }
        f
    }

    #[test]
    fn rowmotion_order_is_n_plus_m() {
        let mut rng = StdRng::seed_from_u64(11);
        for (n, m) in [(2, 2), (2, 3), (3, 3), (1, 4), (3, 4)] {
            let p = product_of_chains(n, m);
            for _ in 0..20 {
                let f = random_order_point(&mut rng, &p, 12);
                let orb = orbit(&f, n + m, |g| rowmotion_order(&p, g)).unwrap();
                assert_eq!((n + m) % orb.len(), 0);
            }
        }
    }

    #[test]
    fn extension_independence_and_commuting_toggles() {
        let mut rng = StdRng::seed_from_u64(5);
        let p = product_of_chains(3, 3);
        // Row-by-row and column-by-column extensions.
        let rows: Vec<usize> = (0..9).collect();
        let cols: Vec<usize> = (0..3)
            .flat_map(|j| (0..3).map(move |i| i * 3 + j))
            .collect();
        for _ in 0..20 {
            let f = random_order_point(&mut rng, &p, 10);
            assert_eq!(
                rowmotion_order_with(&p, &f, &rows).unwrap(),
                rowmotion_order_with(&p, &f, &cols).unwrap()
            );
            for a in 0..9 {
                for b in 0..9 {
                    if !p.comparable(a, b) {
                        let ab = toggle(&p, &toggle(&p, &f, a), b);
                        let ba = toggle(&p, &toggle(&p, &f, b), a);
                        assert_eq!(ab, ba);
                    }
                }
            }
        }
    }

    fn rotate(w: &STWord) -> STWord {
        if ST_ROTATES_RIGHT {
            w.rotated_right()
        } else {
            w.rotated_left()
        }
    }

    #[test]
    fn chain_rowmotion_on_half_birkhoff() {
        for n in 2..=3 {
            let p = product_of_chains(n, n);
            let b = build_restricted_birkhoff(BirkhoffSpec::new(n, 2).unwrap());
            for t in 1..=2u64 {
                let pts = scaled_points(&b, t);
                let half: BTreeSet<Vec<Rat>> = pts
                    .iter()
                    .map(|x| x.iter().map(|v| v / int(2)).collect())
                    .collect();
                for g in &half {
                    let next = rowmotion_chain(&p, g).unwrap();
                    assert!(half.contains(&next));
                    let orb = orbit(g, 2 * n, |h| rowmotion_chain(&p, h)).unwrap();
                    assert_eq!((2 * n) % orb.len(), 0);
                }
            }
        }
    }

    proptest! {
        #[test]
        fn st_word_rotates(
            (n, m) in (1usize..=3, 1usize..=3),
            seed in any::<u64>(),
        ) {
            let mut rng = StdRng::seed_from_u64(seed);
            let p = product_of_chains(n, m);
            let f = random_order_point(&mut rng, &p, 6);
            let g = transfer(&p, &f).unwrap();
            let next = rowmotion_chain(&p, &g).unwrap();
            prop_assert!(p.in_chain_polytope(&next));
            let w = stanley_thomas_word(&p, &g).unwrap();
            prop_assert_eq!(stanley_thomas_word(&p, &next).unwrap(), rotate(&w));
        }
    }
}
