//! Basis cells and finite integer chains.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use crate::{Error, Result, Sign};

/// Identifier of a prescribed basis element.
///
/// Simplex bases are increasing vertex tuples; anything else (for example the
/// adjoined cells of `W`) carries a reserved name. The derived order puts
/// tuples first, lexicographically, then names.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Cell {
    Tuple(Vec<u32>),
    Named(String),
}

impl Cell {
    pub fn tuple<I: IntoIterator<Item = u32>>(vertices: I) -> Cell {
        Cell::Tuple(vertices.into_iter().collect())
    }

    pub fn named(name: impl Into<String>) -> Cell {
        Cell::Named(name.into())
    }

    pub fn as_tuple(&self) -> Option<&[u32]> {
        match self {
            Cell::Tuple(t) => Some(t),
            Cell::Named(_) => None,
        }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::Tuple(t) => {
                f.write_str("[")?;
                for (i, v) in t.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{v}")?;
                }
                f.write_str("]")
            }
            Cell::Named(s) => f.write_str(s),
        }
    }
}

impl FromStr for Cell {
    type Err = Error;

    fn from_str(s: &str) -> Result<Cell> {
        if let Some(inner) = s.strip_prefix('[') {
            let inner = inner
                .strip_suffix(']')
                .ok_or_else(|| Error::Input(format!("unterminated tuple label {s:?}")))?;
            let vertices = inner
                .split(',')
                .map(|v| {
                    v.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::Input(format!("bad vertex {v:?} in label {s:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Cell::Tuple(vertices))
        } else if s.is_empty() {
            Err(Error::Input("empty basis label".into()))
        } else {
            Ok(Cell::Named(s.to_string()))
        }
    }
}

/// A basis element together with its dimension.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisElement {
    pub dim: usize,
    pub cell: Cell,
}

impl BasisElement {
    pub fn new(dim: usize, cell: Cell) -> Self {
        BasisElement { dim, cell }
    }

    /// The basis element `[v_0, …, v_q]` of a simplex.
    pub fn simplex(vertices: &[u32]) -> Self {
        assert!(!vertices.is_empty(), "a simplex needs at least one vertex");
        BasisElement { dim: vertices.len() - 1, cell: Cell::tuple(vertices.iter().copied()) }
    }
}

impl fmt::Display for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.cell.fmt(f)
    }
}

/// A finite integer combination of basis elements of one dimension.
///
/// Zero coefficients are never stored, so structural equality is equality of
/// chains. Arithmetic is overflow-checked and panics rather than wrapping.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chain {
    dim: usize,
    terms: BTreeMap<Cell, i64>,
}

fn checked(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("chain coefficient overflow")
}

impl Chain {
    pub fn zero(dim: usize) -> Chain {
        Chain { dim, terms: BTreeMap::new() }
    }

    pub fn from_basis(b: &BasisElement) -> Chain {
        Chain::cell(b.dim, b.cell.clone())
    }

    pub fn cell(dim: usize, cell: Cell) -> Chain {
        let mut terms = BTreeMap::new();
        terms.insert(cell, 1);
        Chain { dim, terms }
    }

    /// Shorthand for the simplex generator `[v_0, …, v_q]`.
    pub fn simplex(vertices: &[u32]) -> Chain {
        Chain::from_basis(&BasisElement::simplex(vertices))
    }

    /// Collects terms, summing repeated cells and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Cell, i64)>>(dim: usize, terms: I) -> Chain {
        let mut c = Chain::zero(dim);
        for (cell, k) in terms {
            c.add_term(cell, k);
        }
        c
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, cell: &Cell) -> i64 {
        self.terms.get(cell).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Cell, i64)> + '_ {
        self.terms.iter().map(|(c, &k)| (c, k))
    }

    pub fn basis_terms(&self) -> impl Iterator<Item = (BasisElement, i64)> + '_ {
        let dim = self.dim;
        self.terms.iter().map(move |(c, &k)| (BasisElement::new(dim, c.clone()), k))
    }

    pub fn support(&self) -> impl Iterator<Item = &Cell> + '_ {
        self.terms.keys()
    }

    pub fn contains(&self, cell: &Cell) -> bool {
        self.terms.contains_key(cell)
    }

    /// `true` when every coefficient is non-negative, i.e. the chain is a sum
    /// of basis elements.
    pub fn is_sum_of_basis(&self) -> bool {
        self.terms.values().all(|&k| k > 0)
    }

    pub fn max_coeff(&self) -> i64 {
        self.terms.values().copied().max().unwrap_or(0)
    }

    pub fn add_term(&mut self, cell: Cell, k: i64) {
        if k == 0 {
            return;
        }
        let entry = self.terms.entry(cell).or_insert(0);
        *entry = checked(*entry, k);
        if *entry == 0 {
            self.terms.retain(|_, v| *v != 0);
        }
    }

    /// `self += k · other`.
    pub fn add_scaled(&mut self, other: &Chain, k: i64) {
        if k == 0 || other.is_zero() {
            return;
        }
        self.merge_dim(other);
        for (cell, &c) in &other.terms {
            let prod = c.checked_mul(k).expect("chain coefficient overflow");
            let entry = self.terms.entry(cell.clone()).or_insert(0);
            *entry = checked(*entry, prod);
        }
        self.terms.retain(|_, v| *v != 0);
    }

    pub fn scaled(&self, k: i64) -> Chain {
        let mut out = Chain::zero(self.dim);
        out.add_scaled(self, k);
        out
    }

    /// The part with the given sign: `Plus` keeps positive coefficients,
    /// `Minus` keeps the negated negative ones. Both results are sums of basis
    /// elements with disjoint supports.
    pub fn signed_part(&self, sign: Sign) -> Chain {
        let terms = self
            .terms
            .iter()
            .filter_map(|(c, &k)| match sign {
                Sign::Plus if k > 0 => Some((c.clone(), k)),
                Sign::Minus if k < 0 => Some((c.clone(), -k)),
                _ => None,
            })
            .collect();
        Chain { dim: self.dim, terms }
    }

    fn merge_dim(&mut self, other: &Chain) {
        if self.dim != other.dim {
            assert!(
                self.is_zero(),
                "adding chains of dimensions {} and {}",
                self.dim,
                other.dim
            );
            self.dim = other.dim;
        }
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (cell, &k)) in self.terms.iter().enumerate() {
            let (neg, mag) = (k < 0, k.unsigned_abs());
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if mag != 1 {
                write!(f, "{mag}·")?;
            }
            write!(f, "{cell}")?;
        }
        Ok(())
    }
}

impl Add for &Chain {
    type Output = Chain;
    fn add(self, rhs: &Chain) -> Chain {
        let mut out = self.clone();
        out.add_scaled(rhs, 1);
        out
    }
}

impl Sub for &Chain {
    type Output = Chain;
    fn sub(self, rhs: &Chain) -> Chain {
        let mut out = self.clone();
        out.add_scaled(rhs, -1);
        out
    }
}

impl Neg for &Chain {
    type Output = Chain;
    fn neg(self) -> Chain {
        self.scaled(-1)
    }
}
