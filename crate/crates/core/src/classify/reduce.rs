//! Branching reducer for the classification systems. The equations coming
//! out of the compatibility and self-distributivity identities in dimension
//! 2 are sums of products of affine factors, so three moves suffice:
//! eliminate a variable with an affine equation, split on a variable that
//! divides every monomial of some equation, and drop equations that became
//! zero. Anything outside this fragment aborts with "enumeration
//! incomplete" instead of guessing.

use num_rational::BigRational;
use num_traits::Zero;

use super::poly::{Poly, NVARS};
use crate::error::{Error, Result};

/// Affine solution component in coefficient space: the set
/// { base + sum_i t_i dir_i | t_i in Q } (directions empty = isolated point).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineComponent {
    pub base: [BigRational; NVARS],
    pub directions: Vec<[BigRational; NVARS]>,
}

impl AffineComponent {
    pub fn is_point(&self) -> bool {
        self.directions.is_empty()
    }

    pub fn instantiate(&self, params: &[BigRational]) -> [BigRational; NVARS] {
        assert_eq!(params.len(), self.directions.len());
        let mut out = self.base.clone();
        for (t, dir) in params.iter().zip(&self.directions) {
            for v in 0..NVARS {
                out[v] += t * &dir[v];
            }
        }
        out
    }

    /// Does the component contain a given point?
    pub fn contains_point(&self, point: &[BigRational; NVARS]) -> bool {
        let diff: Vec<BigRational> = (0..NVARS).map(|v| &point[v] - &self.base[v]).collect();
        in_span(&self.directions, &diff)
    }

    /// Is this component a subset of the other?
    pub fn subset_of(&self, other: &AffineComponent) -> bool {
        if !other.contains_point(&self.base) {
            return false;
        }
        self.directions
            .iter()
            .all(|d| in_span(&other.directions, &d[..]))
    }
}

/// Membership of a vector in the rational span of the given directions,
/// by Gaussian elimination on the transposed system.
fn in_span(dirs: &[[BigRational; NVARS]], v: &[BigRational]) -> bool {
    if v.iter().all(|x| x.is_zero()) {
        return true;
    }
    if dirs.is_empty() {
        return false;
    }
    // rows: NVARS equations, columns: dirs coefficients, rhs v
    let cols = dirs.len();
    let mut aug: Vec<Vec<BigRational>> = (0..NVARS)
        .map(|r| {
            let mut row: Vec<BigRational> = dirs.iter().map(|d| d[r].clone()).collect();
            row.push(v[r].clone());
            row
        })
        .collect();
    let mut pivot_row = 0;
    for col in 0..cols {
        let Some(p) = (pivot_row..NVARS).find(|&r| !aug[r][col].is_zero()) else {
            continue;
        };
        aug.swap(pivot_row, p);
        let inv = aug[pivot_row][col].recip();
        for c in col..=cols {
            aug[pivot_row][c] = &aug[pivot_row][c] * &inv;
        }
        for r in 0..NVARS {
            if r != pivot_row && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for c in col..=cols {
                    aug[r][c] = &aug[r][c] - &(&f * &aug[pivot_row][c]);
                }
            }
        }
        pivot_row += 1;
    }
    // consistent iff no row reduces to 0 = nonzero
    aug.iter()
        .all(|row| !(row[..cols].iter().all(|x| x.is_zero()) && !row[cols].is_zero()))
}

#[derive(Clone)]
struct Branch {
    /// solved[v] = Some(affine poly in the still-free variables)
    solved: [Option<Poly>; NVARS],
    eqs: Vec<Poly>,
}

/// Reduces a polynomial system to affine components covering its variety.
pub fn reduce_system(eqs: Vec<Poly>) -> Result<Vec<AffineComponent>> {
    let mut components = Vec::new();
    let branch = Branch {
        solved: Default::default(),
        eqs,
    };
    walk(branch, 0, &mut components)?;
    // drop components contained in another (branching overlaps)
    let mut keep: Vec<AffineComponent> = Vec::new();
    'outer: for c in components {
        keep.retain(|k| !k.subset_of(&c) || *k == c);
        for k in &keep {
            if c.subset_of(k) {
                continue 'outer;
            }
        }
        keep.push(c);
    }
    keep.sort_by(|a, b| (&a.base, &a.directions).cmp(&(&b.base, &b.directions)));
    Ok(keep)
}

const MAX_DEPTH: usize = 96;

fn walk(mut branch: Branch, depth: usize, out: &mut Vec<AffineComponent>) -> Result<()> {
    if depth > MAX_DEPTH {
        return Err(Error::EnumerationIncomplete(
            "reducer recursion limit reached".into(),
        ));
    }
    // constant equations decide the branch; zero ones vanish
    let mut eqs = Vec::with_capacity(branch.eqs.len());
    for e in branch.eqs.drain(..) {
        match e.as_constant() {
            Some(c) if c.is_zero() => {}
            Some(_) => return Ok(()), // 0 = nonzero: dead branch
            None => eqs.push(e),
        }
    }
    eqs.sort();
    eqs.dedup();
    branch.eqs = eqs;

    if branch.eqs.is_empty() {
        out.push(emit(&branch));
        return Ok(());
    }

    // move 1: an affine equation eliminates a variable
    if let Some((idx, v, expr)) = find_affine(&branch.eqs) {
        branch.eqs.swap_remove(idx);
        substitute_everywhere(&mut branch, v, &expr);
        return walk(branch, depth + 1, out);
    }

    // move 2: split on a content variable
    if let Some((idx, v)) = branch
        .eqs
        .iter()
        .enumerate()
        .find_map(|(i, e)| e.content_var().map(|v| (i, v)))
    {
        // branch A: v = 0
        let mut zero_branch = branch.clone();
        substitute_everywhere(&mut zero_branch, v, &Poly::zero());
        walk(zero_branch, depth + 1, out)?;
        // branch B: divide the equation by v
        let mut div_branch = branch.clone();
        div_branch.eqs[idx] = div_branch.eqs[idx].divide_by_var(v);
        return walk(div_branch, depth + 1, out);
    }

    Err(Error::EnumerationIncomplete(format!(
        "no affine equation and no content variable in {}",
        branch.eqs[0]
    )))
}

/// Finds an equation that is affine with at least one nonzero linear
/// coefficient and solves it for the lowest such variable.
fn find_affine(eqs: &[Poly]) -> Option<(usize, usize, Poly)> {
    for (idx, e) in eqs.iter().enumerate() {
        if let Some((constant, coeffs)) = e.as_affine() {
            if let Some(v) = coeffs.iter().position(|c| !c.is_zero()) {
                // c_v v + rest = 0  =>  v = -(rest)/c_v
                let inv = -coeffs[v].clone().recip();
                let mut expr = Poly::constant(&constant * &inv);
                for (w, c) in coeffs.iter().enumerate() {
                    if w != v && !c.is_zero() {
                        expr = expr.add(&Poly::var(w).scale(&(c * &inv)));
                    }
                }
                return Some((idx, v, expr));
            }
        }
    }
    None
}

fn substitute_everywhere(branch: &mut Branch, v: usize, expr: &Poly) {
    for e in &mut branch.eqs {
        *e = e.substitute(v, expr);
    }
    for s in branch.solved.iter_mut().flatten() {
        *s = s.substitute(v, expr);
    }
    branch.solved[v] = Some(expr.clone());
}

fn emit(branch: &Branch) -> AffineComponent {
    let free: Vec<usize> = (0..NVARS).filter(|&v| branch.solved[v].is_none()).collect();
    let zeros: [BigRational; NVARS] = std::array::from_fn(|_| BigRational::zero());
    let value_at = |assign: &[BigRational; NVARS]| -> [BigRational; NVARS] {
        std::array::from_fn(|v| match &branch.solved[v] {
            Some(p) => p.eval(assign),
            None => assign[v].clone(),
        })
    };
    let base = value_at(&zeros);
    let directions = free
        .iter()
        .map(|&f| {
            let mut probe = zeros.clone();
            probe[f] = BigRational::from_integer(1.into());
            let at = value_at(&probe);
            std::array::from_fn(|v| &at[v] - &base[v])
        })
        .collect();
    AffineComponent { base, directions }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn br(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn solves_a_union_of_lines() {
        // b1 * c1 = 0 with all six other variables pinned to zero
        let mut eqs = vec![Poly::var(2).mul(&Poly::var(4))];
        for v in [0usize, 1, 3, 5, 6, 7] {
            eqs.push(Poly::var(v));
        }
        let comps = reduce_system(eqs).unwrap();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.directions.len() == 1));
    }

    #[test]
    fn detects_inconsistency() {
        // a1 = 0 and a1 = 1
        let eqs = vec![Poly::var(0), Poly::var(0).sub(&Poly::from_i64(1))];
        assert_eq!(reduce_system(eqs).unwrap(), vec![]);
    }

    #[test]
    fn idempotent_variable_splits_into_points() {
        // a1^2 = a1, everything else zero
        let a1 = Poly::var(0);
        let mut eqs = vec![a1.mul(&a1).sub(&a1)];
        for v in 1..NVARS {
            eqs.push(Poly::var(v));
        }
        let comps = reduce_system(eqs).unwrap();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.is_point()));
        let values: Vec<BigRational> = comps.iter().map(|c| c.base[0].clone()).collect();
        assert!(values.contains(&br(0)) && values.contains(&br(1)));
    }

    #[test]
    fn containment_dedup() {
        let point = AffineComponent {
            base: std::array::from_fn(|_| br(0)),
            directions: vec![],
        };
        let mut dir = std::array::from_fn(|_| br(0));
        dir[5] = br(1);
        let line = AffineComponent {
            base: std::array::from_fn(|_| br(0)),
            directions: vec![dir],
        };
        assert!(point.subset_of(&line));
        assert!(!line.subset_of(&point));
        let mut p2: [BigRational; NVARS] = std::array::from_fn(|_| br(0));
        p2[5] = br(7);
        assert!(line.contains_point(&p2));
        p2[4] = br(1);
        assert!(!line.contains_point(&p2));
    }
}
