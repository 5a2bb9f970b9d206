//! Finite unital rings, finite groups, and finite modules, all stored as
//! dense operation tables over element indices `0..n`.
//!
//! Composite constructors fix their index layouts so that every downstream
//! listing is reproducible:
//!
//! * `direct_product`: `(r, s) -> r * |S| + s`
//! * `polynomial_quotient`: coefficient tuples, little endian in `|base|`
//! * `algebra_over_zn`: coefficient vectors, little endian in `n`
//! * `group_ring`: coefficient of group element `g` is digit `g` in `|base|`
//! * `idealization`: `(r, m) -> r * |M| + m`

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bitset::ElemSet;
use crate::error::Error;
use crate::limits::Limits;
use crate::Result;

fn invalid(reason: String) -> Error {
    Error::InvalidConstruction { reason }
}

fn check_cap(requested: Option<usize>, limits: &Limits) -> Result<usize> {
    match requested {
        Some(n) if n <= limits.ring_size => Ok(n),
        Some(n) => Err(Error::SizeLimit { requested: n, cap: limits.ring_size }),
        None => Err(Error::SizeLimit { requested: usize::MAX, cap: limits.ring_size }),
    }
}

/// Wraps a coefficient label in parentheses when it is not atomic.
fn coefficient(label: &str) -> String {
    if label.contains(['+', ',', ' ']) || label.starts_with('(') {
        format!("({label})")
    } else {
        label.to_string()
    }
}

/// Renders `sum coeff_i * name_i`, skipping zero coefficients. `unit_name`
/// marks the basis element printed as a bare coefficient.
fn linear_label(coeffs: &[usize], ring: &FiniteRing, names: &[String], unit_name: usize) -> String {
    let mut terms = Vec::new();
    for (i, &c) in coeffs.iter().enumerate() {
        if c == ring.zero {
            continue;
        }
        let term = if i == unit_name {
            ring.labels[c].clone()
        } else if c == ring.one {
            names[i].clone()
        } else {
            format!("{}{}", coefficient(&ring.labels[c]), names[i])
        };
        terms.push(term);
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

// ---------------------------------------------------------------------------
// Groups

/// A finite group given by its Cayley table.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    size: usize,
    op: Vec<usize>,
    identity: usize,
    inv: Vec<usize>,
    names: Vec<String>,
    description: String,
}

impl FiniteGroup {
    /// Validates a Cayley table (row `a`, column `b` holds `a * b`).
    pub fn from_table(table: &[Vec<usize>], names: Option<Vec<String>>, description: &str) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(invalid("a group needs at least one element".into()));
        }
        let mut op = Vec::with_capacity(n * n);
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(invalid(format!("Cayley table row {a} has {} entries, expected {n}", row.len())));
            }
            for &c in row {
                if c >= n {
                    return Err(invalid(format!("Cayley table entry {c} out of range")));
                }
                op.push(c);
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| op[e * n + x] == x && op[x * n + e] == x))
            .ok_or_else(|| invalid("Cayley table has no identity".into()))?;
        let mut inv = vec![0; n];
        for (a, slot) in inv.iter_mut().enumerate() {
            *slot = (0..n)
                .find(|&b| op[a * n + b] == identity && op[b * n + a] == identity)
                .ok_or_else(|| invalid(format!("element {a} has no inverse")))?;
        }
        for a in 0..n {
            for b in 0..n {
                let ab = op[a * n + b];
                for c in 0..n {
                    if op[ab * n + c] != op[a * n + op[b * n + c]] {
                        return Err(invalid(format!("group operation not associative at ({a},{b},{c})")));
                    }
                }
            }
        }
        let names = match names {
            Some(v) if v.len() == n => v,
            Some(v) => return Err(invalid(format!("{} group names for {n} elements", v.len()))),
            None => (0..n).map(|i| if i == identity { "e".into() } else { format!("g{i}") }).collect(),
        };
        Ok(FiniteGroup { size: n, op, identity, inv, names, description: description.into() })
    }

    /// The cyclic group `C_n` with generator `g`; element `k` is `g^k`.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(invalid("cyclic group of order 0".into()));
        }
        let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let names = (0..n)
            .map(|k| match k {
                0 => "e".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{k}"),
            })
            .collect();
        Self::from_table(&table, Some(names), &format!("C_{n}"))
    }

    /// `G x H` with `(g, h) -> g * |H| + h`.
    pub fn product(a: &FiniteGroup, b: &FiniteGroup) -> Result<Self> {
        let n = a.size * b.size;
        let table: Vec<Vec<usize>> = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| a.op(x / b.size, y / b.size) * b.size + b.op(x % b.size, y % b.size))
                    .collect()
            })
            .collect();
        let names = (0..n)
            .map(|x| {
                if x == a.identity * b.size + b.identity {
                    "e".to_string()
                } else {
                    format!("({},{})", a.names[x / b.size], b.names[x % b.size])
                }
            })
            .collect();
        Self::from_table(&table, Some(names), &format!("{} x {}", a.description, b.description))
    }

    /// The dihedral group of order `2n`; index `i + n*j` is `r^i s^j`.
    pub fn dihedral(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(invalid("dihedral group needs n >= 2".into()));
        }
        let size = 2 * n;
        let table: Vec<Vec<usize>> = (0..size)
            .map(|x| {
                let (a, b) = (x % n, x / n);
                (0..size)
                    .map(|y| {
                        let (c, d) = (y % n, y / n);
                        let rot = if b == 0 { (a + c) % n } else { (a + n - c) % n };
                        rot + n * ((b + d) % 2)
                    })
                    .collect()
            })
            .collect();
        let names = (0..size)
            .map(|x| {
                let (i, j) = (x % n, x / n);
                let r = match i {
                    0 => String::new(),
                    1 => "r".into(),
                    _ => format!("r^{i}"),
                };
                let s = if j == 1 { "s" } else { "" };
                if r.is_empty() && s.is_empty() {
                    "e".into()
                } else {
                    format!("{r}{s}")
                }
            })
            .collect();
        Self::from_table(&table, Some(names), &format!("D_{n}"))
    }

    /// The symmetric group on `n <= 5` points, permutations in lexicographic
    /// order (identity first) and named in cycle notation.
    pub fn symmetric(n: usize) -> Result<Self> {
        if n == 0 || n > 5 {
            return Err(invalid("symmetric groups are supported for 1 <= n <= 5".into()));
        }
        let mut perms: Vec<Vec<usize>> = Vec::new();
        let mut current: Vec<usize> = (0..n).collect();
        loop {
            perms.push(current.clone());
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
            current.swap(i, j);
            current[i + 1..].reverse();
        }
        let index_of = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
        // (p * q)(x) = p(q(x)): apply q first.
        let table: Vec<Vec<usize>> = perms
            .iter()
            .map(|p| {
                perms
                    .iter()
                    .map(|q| {
                        let composed: Vec<usize> = (0..n).map(|x| p[q[x]]).collect();
                        index_of(&composed)
                    })
                    .collect()
            })
            .collect();
        let names = perms.iter().map(|p| cycle_notation(p)).collect();
        Self::from_table(&table, Some(names), &format!("S_{n}"))
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.op[a * self.size + b]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.size).all(|a| (0..self.size).all(|b| self.op(a, b) == self.op(b, a)))
    }

    /// Whether `subset` is a subgroup.
    pub fn is_subgroup(&self, subset: &[usize]) -> bool {
        subset.contains(&self.identity)
            && subset
                .iter()
                .all(|&a| subset.contains(&self.inv[a]) && subset.iter().all(|&b| subset.contains(&self.op(a, b))))
    }
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push(x.to_string());
            x = p[x];
        }
        out.push_str(&format!("({})", cycle.join(" ")));
    }
    if out.is_empty() {
        "e".into()
    } else {
        out
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.description, self.size)
    }
}

// ---------------------------------------------------------------------------
// Rings

/// How a ring was built. Gradings and the theorem suite dispatch on this.
#[derive(Clone)]
pub enum Construction {
    Cyclic { n: usize },
    Product { left: Arc<FiniteRing>, right: Arc<FiniteRing> },
    PolyQuotient { base: Arc<FiniteRing>, modulus: Vec<usize> },
    Algebra { modulus: usize, dim: usize },
    GroupRing { base: Arc<FiniteRing>, group: Arc<FiniteGroup> },
    Idealization { base: Arc<FiniteRing>, module: Arc<FiniteModule> },
    Subring { parent: Arc<FiniteRing>, embedding: Vec<usize> },
    Tables,
}

impl Construction {
    pub fn kind(&self) -> &'static str {
        match self {
            Construction::Cyclic { .. } => "zn",
            Construction::Product { .. } => "product",
            Construction::PolyQuotient { .. } => "poly_quotient",
            Construction::Algebra { .. } => "algebra",
            Construction::GroupRing { .. } => "group_ring",
            Construction::Idealization { .. } => "idealization",
            Construction::Subring { .. } => "subring",
            Construction::Tables => "tables",
        }
    }
}

/// A finite associative ring with `1 != 0`.
#[derive(Clone)]
pub struct FiniteRing {
    size: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
    neg: Vec<usize>,
    zero: usize,
    one: usize,
    commutative: bool,
    labels: Vec<String>,
    description: String,
    construction: Construction,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteRing({}, {} elements)", self.description, self.size)
    }
}

impl FiniteRing {
    /// Builds a ring from flat row-major tables and validates every axiom
    /// exhaustively. Zero and one are located from the tables.
    pub fn from_tables(
        add: Vec<usize>,
        mul: Vec<usize>,
        labels: Vec<String>,
        description: String,
        construction: Construction,
    ) -> Result<Self> {
        let size = labels.len();
        if size == 0 || add.len() != size * size || mul.len() != size * size {
            return Err(invalid(format!("tables do not match {size} labels")));
        }
        if let Some(&bad) = add.iter().chain(&mul).find(|&&x| x >= size) {
            return Err(invalid(format!("table entry {bad} out of range")));
        }
        let zero = (0..size)
            .find(|&z| (0..size).all(|x| add[z * size + x] == x))
            .ok_or_else(|| invalid("addition has no identity".into()))?;
        let one = (0..size)
            .find(|&u| (0..size).all(|x| mul[u * size + x] == x && mul[x * size + u] == x))
            .ok_or_else(|| invalid("multiplication has no two-sided identity".into()))?;
        let mut neg = vec![usize::MAX; size];
        for (a, slot) in neg.iter_mut().enumerate() {
            *slot = (0..size)
                .find(|&b| add[a * size + b] == zero)
                .ok_or_else(|| invalid(format!("element {a} has no additive inverse")))?;
        }
        let commutative = (0..size).all(|a| (0..size).all(|b| mul[a * size + b] == mul[b * size + a]));
        let ring = FiniteRing { size, add, mul, neg, zero, one, commutative, labels, description, construction };
        ring.validate()?;
        Ok(ring)
    }

    /// Re-checks the full axiom set. Every constructor calls this.
    pub fn validate(&self) -> Result<()> {
        let n = self.size;
        if self.one == self.zero {
            return Err(invalid("unity equals zero".into()));
        }
        for a in 0..n {
            if self.add(a, self.neg[a]) != self.zero {
                return Err(invalid(format!("{a} + neg({a}) != 0")));
            }
            if self.add(self.zero, a) != a || self.mul(self.one, a) != a || self.mul(a, self.one) != a {
                return Err(invalid(format!("identity law fails at {a}")));
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return Err(invalid(format!("addition not commutative at ({a},{b})")));
                }
                let (ab_sum, ab_prod) = (self.add(a, b), self.mul(a, b));
                for c in 0..n {
                    if self.add(ab_sum, c) != self.add(a, self.add(b, c)) {
                        return Err(invalid(format!("addition not associative at ({a},{b},{c})")));
                    }
                    if self.mul(ab_prod, c) != self.mul(a, self.mul(b, c)) {
                        return Err(invalid(format!("multiplication not associative at ({a},{b},{c})")));
                    }
                    if self.mul(a, self.add(b, c)) != self.add(ab_prod, self.mul(a, c)) {
                        return Err(invalid(format!("left distributivity fails at ({a},{b},{c})")));
                    }
                    if self.mul(ab_sum, c) != self.add(self.mul(a, c), self.mul(b, c)) {
                        return Err(invalid(format!("right distributivity fails at ({a},{b},{c})")));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b]
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size + b]
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg[b])
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Looks an element up by its label.
    pub fn element(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    pub fn construction(&self) -> &Construction {
        &self.construction
    }

    pub fn elements(&self) -> core::ops::Range<usize> {
        0..self.size
    }

    pub fn empty_set(&self) -> ElemSet {
        ElemSet::empty(self.size)
    }

    /// The additive subgroup generated by `gens`.
    pub fn additive_span<I: IntoIterator<Item = usize>>(&self, gens: I) -> ElemSet {
        let mut span = ElemSet::singleton(self.size, self.zero);
        let mut members = vec![self.zero];
        for g in gens {
            if span.contains(g) {
                continue;
            }
            // span + <g>: add multiples of g to every existing member
            let existing = members.clone();
            let mut multiple = g;
            while !span.contains(multiple) {
                for &m in &existing {
                    let s = self.add(m, multiple);
                    if span.insert(s) {
                        members.push(s);
                    }
                }
                multiple = self.add(multiple, g);
            }
        }
        span
    }

    /// True iff `x` has a two-sided inverse.
    pub fn is_unit(&self, x: usize) -> bool {
        (0..self.size).any(|y| self.mul(x, y) == self.one && self.mul(y, x) == self.one)
    }

    pub fn is_nilpotent(&self, x: usize) -> bool {
        let mut p = x;
        for _ in 0..=self.size {
            if p == self.zero {
                return true;
            }
            p = self.mul(p, x);
        }
        false
    }

    fn tables_equal(&self, other: &FiniteRing) -> bool {
        self.size == other.size && self.add == other.add && self.mul == other.mul
    }
}

/// `Z_n` with the usual residue arithmetic.
pub fn make_cyclic_ring(n: usize, limits: &Limits) -> Result<FiniteRing> {
    if n < 2 {
        return Err(invalid(format!("Z_{n} has 1 = 0")));
    }
    check_cap(Some(n), limits)?;
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            add.push((a + b) % n);
            mul.push(a * b % n);
        }
    }
    let labels = (0..n).map(|x| x.to_string()).collect();
    FiniteRing::from_tables(add, mul, labels, format!("Z_{n}"), Construction::Cyclic { n })
}

/// `R x S` with componentwise operations.
pub fn direct_product(r: &Arc<FiniteRing>, s: &Arc<FiniteRing>, limits: &Limits) -> Result<FiniteRing> {
    let size = check_cap(r.size.checked_mul(s.size), limits)?;
    let m = s.size;
    let mut add = Vec::with_capacity(size * size);
    let mut mul = Vec::with_capacity(size * size);
    for x in 0..size {
        for y in 0..size {
            let (x1, x2, y1, y2) = (x / m, x % m, y / m, y % m);
            add.push(r.add(x1, y1) * m + s.add(x2, y2));
            mul.push(r.mul(x1, y1) * m + s.mul(x2, y2));
        }
    }
    let labels = (0..size).map(|x| format!("({},{})", r.labels[x / m], s.labels[x % m])).collect();
    let description = format!("{} x {}", r.description, s.description);
    FiniteRing::from_tables(
        add,
        mul,
        labels,
        description,
        Construction::Product { left: r.clone(), right: s.clone() },
    )
}

fn digits(mut x: usize, radix: usize, len: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(x % radix);
        x /= radix;
    }
    out
}

fn from_digits(ds: &[usize], radix: usize) -> usize {
    ds.iter().rev().fold(0, |acc, &d| acc * radix + d)
}

fn monomial_names(var: &str, d: usize) -> Vec<String> {
    (0..d)
        .map(|k| match k {
            0 => "1".to_string(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        })
        .collect()
}

/// `base[x] / (modulus)` where `modulus` lists coefficients from the
/// constant term up and must be monic of degree at least one.
pub fn polynomial_quotient(base: &Arc<FiniteRing>, modulus: &[usize], limits: &Limits) -> Result<FiniteRing> {
    if !base.commutative {
        return Err(invalid("polynomial quotients need a commutative base".into()));
    }
    if modulus.len() < 2 {
        return Err(invalid("modulus must have degree at least 1".into()));
    }
    if let Some(&c) = modulus.iter().find(|&&c| c >= base.size) {
        return Err(invalid(format!("modulus coefficient {c} is not an element of {}", base.description)));
    }
    let d = modulus.len() - 1;
    if modulus[d] != base.one {
        return Err(invalid("modulus is not monic".into()));
    }
    let b = base.size;
    let size = check_cap(b.checked_pow(d as u32), limits)?;
    let coeffs: Vec<Vec<usize>> = (0..size).map(|x| digits(x, b, d)).collect();
    let mut add = Vec::with_capacity(size * size);
    let mut mul = Vec::with_capacity(size * size);
    let mut prod = vec![base.zero; 2 * d - 1];
    for x in 0..size {
        for y in 0..size {
            let (cx, cy) = (&coeffs[x], &coeffs[y]);
            let sum: Vec<usize> = (0..d).map(|i| base.add(cx[i], cy[i])).collect();
            add.push(from_digits(&sum, b));

            prod.iter_mut().for_each(|p| *p = base.zero);
            for i in 0..d {
                for j in 0..d {
                    prod[i + j] = base.add(prod[i + j], base.mul(cx[i], cy[j]));
                }
            }
            // x^d = -(m_0 + m_1 x + ... + m_{d-1} x^{d-1})
            for k in (d..2 * d - 1).rev() {
                let c = prod[k];
                if c == base.zero {
                    continue;
                }
                for (i, &m) in modulus.iter().take(d).enumerate() {
                    prod[k - d + i] = base.sub(prod[k - d + i], base.mul(c, m));
                }
                prod[k] = base.zero;
            }
            mul.push(from_digits(&prod[..d], b));
        }
    }
    let names = monomial_names("x", d);
    let labels = coeffs.iter().map(|c| linear_label(c, base, &names, 0)).collect();
    let modulus_label = {
        let mut names = monomial_names("x", d + 1);
        names[d] = if d == 1 { "x".into() } else { format!("x^{d}") };
        linear_label(modulus, base, &names, 0)
    };
    let description = format!("{}[x]/({})", base.description, modulus_label);
    FiniteRing::from_tables(
        add,
        mul,
        labels,
        description,
        Construction::PolyQuotient { base: base.clone(), modulus: modulus.to_vec() },
    )
}

/// A free `Z_n`-module of rank `dim` with the product given by
/// `structure[i][j]` = coordinates of `b_i * b_j`. Basis element 0 must be
/// the unity.
pub fn algebra_over_zn(
    n: usize,
    dim: usize,
    structure: &[Vec<Vec<usize>>],
    basis_names: Option<Vec<String>>,
    limits: &Limits,
) -> Result<FiniteRing> {
    if n < 2 || dim == 0 {
        return Err(invalid("algebra needs n >= 2 and dim >= 1".into()));
    }
    if structure.len() != dim || structure.iter().any(|row| row.len() != dim || row.iter().any(|v| v.len() != dim)) {
        return Err(invalid(format!("structure constants must form a {dim}x{dim} table of {dim}-vectors")));
    }
    let size = check_cap(n.checked_pow(dim as u32), limits)?;
    let names = match basis_names {
        Some(v) if v.len() == dim => v,
        Some(v) => return Err(invalid(format!("{} basis names for dimension {dim}", v.len()))),
        None => (0..dim).map(|i| if i == 0 { "1".into() } else { format!("e{i}") }).collect(),
    };
    let coeffs: Vec<Vec<usize>> = (0..size).map(|x| digits(x, n, dim)).collect();
    let mut add = Vec::with_capacity(size * size);
    let mut mul = Vec::with_capacity(size * size);
    let mut acc = vec![0usize; dim];
    for x in 0..size {
        for y in 0..size {
            let (cx, cy) = (&coeffs[x], &coeffs[y]);
            let sum: Vec<usize> = (0..dim).map(|i| (cx[i] + cy[i]) % n).collect();
            add.push(from_digits(&sum, n));
            acc.iter_mut().for_each(|a| *a = 0);
            for i in 0..dim {
                if cx[i] == 0 {
                    continue;
                }
                for j in 0..dim {
                    let w = cx[i] * cy[j] % n;
                    if w == 0 {
                        continue;
                    }
                    for (k, a) in acc.iter_mut().enumerate() {
                        *a = (*a + w * (structure[i][j][k] % n)) % n;
                    }
                }
            }
            mul.push(from_digits(&acc, n));
        }
    }
    let zn = make_cyclic_ring(n, &Limits { ring_size: n, ..*limits })?;
    let labels: Vec<String> = coeffs.iter().map(|c| linear_label(c, &zn, &names, 0)).collect();
    let description = format!("Z_{n}{{{}}}", names.join(","));
    let ring = FiniteRing::from_tables(add, mul, labels, description, Construction::Algebra { modulus: n, dim })?;
    if ring.one != 1 {
        return Err(invalid("basis element 0 is not the unity".into()));
    }
    Ok(ring)
}

/// The group ring `base[G]` with convolution product.
pub fn group_ring(base: &Arc<FiniteRing>, group: &Arc<FiniteGroup>, limits: &Limits) -> Result<FiniteRing> {
    let b = base.size;
    let g = group.size;
    let size = check_cap(b.checked_pow(g as u32), limits)?;
    let coeffs: Vec<Vec<usize>> = (0..size).map(|x| digits(x, b, g)).collect();
    let mut add = Vec::with_capacity(size * size);
    let mut mul = Vec::with_capacity(size * size);
    let mut acc = vec![base.zero; g];
    for x in 0..size {
        for y in 0..size {
            let (cx, cy) = (&coeffs[x], &coeffs[y]);
            let sum: Vec<usize> = (0..g).map(|i| base.add(cx[i], cy[i])).collect();
            add.push(from_digits(&sum, b));
            acc.iter_mut().for_each(|a| *a = base.zero);
            for (s, &a) in cx.iter().enumerate() {
                if a == base.zero {
                    continue;
                }
                for (t, &c) in cy.iter().enumerate() {
                    let k = group.op(s, t);
                    acc[k] = base.add(acc[k], base.mul(a, c));
                }
            }
            mul.push(from_digits(&acc, b));
        }
    }
    let names: Vec<String> = (0..g).map(|s| group.names[s].clone()).collect();
    let labels = coeffs.iter().map(|c| linear_label(c, base, &names, group.identity)).collect();
    let description = format!("{}[{}]", base.description, group.description);
    FiniteRing::from_tables(
        add,
        mul,
        labels,
        description,
        Construction::GroupRing { base: base.clone(), group: group.clone() },
    )
}

/// The idealization `R(+)M`: `(r,m)(r',m') = (rr', rm' + r'm)`.
pub fn idealization(base: &Arc<FiniteRing>, module: &Arc<FiniteModule>, limits: &Limits) -> Result<FiniteRing> {
    if !base.commutative {
        return Err(invalid("idealization needs a commutative base ring".into()));
    }
    if !module.ring.tables_equal(base) {
        return Err(invalid("module is not a module over the base ring".into()));
    }
    let m = module.size;
    let size = check_cap(base.size.checked_mul(m), limits)?;
    let mut add = Vec::with_capacity(size * size);
    let mut mul = Vec::with_capacity(size * size);
    for x in 0..size {
        let (r, mx) = (x / m, x % m);
        for y in 0..size {
            let (s, my) = (y / m, y % m);
            add.push(base.add(r, s) * m + module.add(mx, my));
            let cross = module.add(module.act(r, my), module.act(s, mx));
            mul.push(base.mul(r, s) * m + cross);
        }
    }
    let labels = (0..size)
        .map(|x| format!("({},{})", base.labels[x / m], module.labels[x % m]))
        .collect();
    let description = format!("{}(+){}", base.description, module.description);
    FiniteRing::from_tables(
        add,
        mul,
        labels,
        description,
        Construction::Idealization { base: base.clone(), module: module.clone() },
    )
}

/// Re-indexes the subring on `subset` (ascending order). The second value
/// maps new indices to old ones.
pub fn subring_on(ring: &Arc<FiniteRing>, subset: &ElemSet) -> Result<(FiniteRing, Vec<usize>)> {
    let not_sub = |reason: String| Error::NotASubring { reason };
    if !subset.contains(ring.zero) {
        return Err(not_sub("subset misses zero".into()));
    }
    if !subset.contains(ring.one) {
        return Err(not_sub("subset misses one".into()));
    }
    let embedding: Vec<usize> = subset.iter().collect();
    let mut position = vec![usize::MAX; ring.size];
    for (i, &x) in embedding.iter().enumerate() {
        position[x] = i;
    }
    let k = embedding.len();
    let mut add = Vec::with_capacity(k * k);
    let mut mul = Vec::with_capacity(k * k);
    for &a in &embedding {
        if !subset.contains(ring.neg(a)) {
            return Err(not_sub(format!("-{} escapes", ring.labels[a])));
        }
        for &b in &embedding {
            let (s, p) = (ring.add(a, b), ring.mul(a, b));
            if !subset.contains(s) {
                return Err(not_sub(format!("{} + {} escapes", ring.labels[a], ring.labels[b])));
            }
            if !subset.contains(p) {
                return Err(not_sub(format!("{} * {} escapes", ring.labels[a], ring.labels[b])));
            }
            add.push(position[s]);
            mul.push(position[p]);
        }
    }
    let labels = embedding.iter().map(|&x| ring.labels[x].clone()).collect();
    let description = format!("subring of {}", ring.description);
    let sub = FiniteRing::from_tables(
        add,
        mul,
        labels,
        description,
        Construction::Subring { parent: ring.clone(), embedding: embedding.clone() },
    )?;
    Ok((sub, embedding))
}

// ---------------------------------------------------------------------------
// Modules

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModuleKind {
    SelfModule,
    Quotient,
    DirectSum,
    Tables,
}

/// A finite left module over a finite ring.
#[derive(Clone)]
pub struct FiniteModule {
    ring: Arc<FiniteRing>,
    size: usize,
    add: Vec<usize>,
    neg: Vec<usize>,
    zero: usize,
    action: Vec<usize>,
    labels: Vec<String>,
    description: String,
    kind: ModuleKind,
}

impl fmt::Debug for FiniteModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteModule({}, {} elements)", self.description, self.size)
    }
}

impl FiniteModule {
    /// Validates an abelian group table plus a left action table
    /// (`action[r * size + m] = r . m`).
    pub fn from_tables(
        ring: &Arc<FiniteRing>,
        add: Vec<usize>,
        action: Vec<usize>,
        labels: Vec<String>,
        description: String,
        kind: ModuleKind,
    ) -> Result<Self> {
        let n = labels.len();
        let r = ring.size;
        if n == 0 || add.len() != n * n || action.len() != r * n {
            return Err(invalid("module tables have the wrong shape".into()));
        }
        if add.iter().chain(&action).any(|&x| x >= n) {
            return Err(invalid("module table entry out of range".into()));
        }
        let zero = (0..n)
            .find(|&z| (0..n).all(|x| add[z * n + x] == x))
            .ok_or_else(|| invalid("module addition has no identity".into()))?;
        let mut neg = vec![0; n];
        for (a, slot) in neg.iter_mut().enumerate() {
            *slot = (0..n)
                .find(|&b| add[a * n + b] == zero)
                .ok_or_else(|| invalid(format!("module element {a} has no inverse")))?;
        }
        let module = FiniteModule { ring: ring.clone(), size: n, add, neg, zero, action, labels, description, kind };
        module.validate()?;
        Ok(module)
    }

    pub fn validate(&self) -> Result<()> {
        let (n, ring) = (self.size, &*self.ring);
        for a in 0..n {
            if self.act(ring.one, a) != a {
                return Err(invalid(format!("1 . {a} != {a}")));
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return Err(invalid(format!("module addition not commutative at ({a},{b})")));
                }
                for c in 0..n {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return Err(invalid(format!("module addition not associative at ({a},{b},{c})")));
                    }
                }
                for s in 0..ring.size {
                    if self.act(s, self.add(a, b)) != self.add(self.act(s, a), self.act(s, b)) {
                        return Err(invalid(format!("action not additive in the module at ({s},{a},{b})")));
                    }
                }
            }
        }
        for s in 0..ring.size {
            for t in 0..ring.size {
                for m in 0..n {
                    if self.act(ring.add(s, t), m) != self.add(self.act(s, m), self.act(t, m)) {
                        return Err(invalid(format!("action not additive in the ring at ({s},{t},{m})")));
                    }
                    if self.act(ring.mul(s, t), m) != self.act(s, self.act(t, m)) {
                        return Err(invalid(format!("action not compatible at ({s},{t},{m})")));
                    }
                }
            }
        }
        Ok(())
    }

    /// `R` as a left module over itself.
    pub fn self_module(ring: &Arc<FiniteRing>) -> Result<Self> {
        Self::from_tables(
            ring,
            ring.add.clone(),
            ring.mul.clone(),
            ring.labels.clone(),
            ring.description.clone(),
            ModuleKind::SelfModule,
        )
    }

    /// `R / I` for a left ideal `I`; cosets are indexed by ascending least
    /// representative and labelled by it.
    pub fn quotient(ring: &Arc<FiniteRing>, ideal: &ElemSet) -> Result<Self> {
        let r = ring.size;
        if !ideal.contains(ring.zero)
            || ideal.iter().any(|a| ideal.iter().any(|b| !ideal.contains(ring.add(a, b))))
            || ideal.iter().any(|a| (0..r).any(|s| !ideal.contains(ring.mul(s, a))))
        {
            return Err(invalid("quotient module needs a left ideal".into()));
        }
        let mut class = vec![usize::MAX; r];
        let mut reps = Vec::new();
        for x in 0..r {
            if class[x] != usize::MAX {
                continue;
            }
            for i in ideal.iter() {
                class[ring.add(x, i)] = reps.len();
            }
            reps.push(x);
        }
        let n = reps.len();
        let mut add = Vec::with_capacity(n * n);
        for &a in &reps {
            for &b in &reps {
                add.push(class[ring.add(a, b)]);
            }
        }
        let mut action = Vec::with_capacity(r * n);
        for s in 0..r {
            for &m in &reps {
                action.push(class[ring.mul(s, m)]);
            }
        }
        let labels = reps.iter().map(|&x| ring.labels[x].clone()).collect();
        let gens: Vec<&str> = ideal.iter().filter(|&x| x != ring.zero).map(|x| ring.label(x)).collect();
        let description = if gens.is_empty() {
            ring.description.clone()
        } else {
            format!("{}/({})", ring.description, ideal_generator_hint(ring, ideal))
        };
        Self::from_tables(ring, add, action, labels, description, ModuleKind::Quotient)
    }

    /// `A (+) B` with `(a, b) -> a * |B| + b`.
    pub fn direct_sum(a: &FiniteModule, b: &FiniteModule) -> Result<Self> {
        if !a.ring.tables_equal(&b.ring) {
            return Err(invalid("direct sum of modules over different rings".into()));
        }
        let m = b.size;
        let n = a.size * m;
        let mut add = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                add.push(a.add(x / m, y / m) * m + b.add(x % m, y % m));
            }
        }
        let mut action = Vec::with_capacity(a.ring.size * n);
        for s in 0..a.ring.size {
            for x in 0..n {
                action.push(a.act(s, x / m) * m + b.act(s, x % m));
            }
        }
        let labels = (0..n).map(|x| format!("({},{})", a.labels[x / m], b.labels[x % m])).collect();
        let description = format!("{}+{}", a.description, b.description);
        Self::from_tables(&a.ring, add, action, labels, description, ModuleKind::DirectSum)
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b]
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    /// `r . m`
    #[inline]
    pub fn act(&self, r: usize, m: usize) -> usize {
        self.action[r * self.size + m]
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn label(&self, m: usize) -> &str {
        &self.labels[m]
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    pub fn kind(&self) -> ModuleKind {
        self.kind
    }

    /// The submodule generated by `gens`.
    pub fn generated_submodule<I: IntoIterator<Item = usize>>(&self, gens: I) -> ElemSet {
        let mut sub = ElemSet::singleton(self.size, self.zero);
        for g in gens {
            if sub.contains(g) {
                continue;
            }
            let cyclic: Vec<usize> = (0..self.ring.size).map(|r| self.act(r, g)).collect();
            let current: Vec<usize> = sub.iter().collect();
            for a in current {
                for &c in &cyclic {
                    sub.insert(self.add(a, c));
                }
            }
        }
        sub
    }

    /// Every submodule, ordered like ideal lists (size, then members).
    pub fn submodules(&self) -> Vec<ElemSet> {
        let cyclic: alloc::collections::BTreeSet<ElemSet> =
            (0..self.size).map(|m| self.generated_submodule([m])).collect();
        let mut found: alloc::collections::BTreeSet<ElemSet> = alloc::collections::BTreeSet::new();
        let mut queue = vec![ElemSet::singleton(self.size, self.zero)];
        found.insert(queue[0].clone());
        while let Some(s) = queue.pop() {
            for c in &cyclic {
                if c.is_subset(&s) {
                    continue;
                }
                let gens: Vec<usize> = s.iter().chain(c.iter()).collect();
                let t = self.generated_submodule(gens);
                if found.insert(t.clone()) {
                    queue.push(t);
                }
            }
        }
        found.into_iter().collect()
    }

    /// No proper nonzero submodule and `M != 0`.
    pub fn is_simple(&self) -> bool {
        self.size > 1 && self.submodules().len() == 2
    }
}

/// Short generator description used in quotient-module names.
fn ideal_generator_hint(ring: &FiniteRing, ideal: &ElemSet) -> String {
    let mut gens: Vec<usize> = Vec::new();
    let mut span = ElemSet::singleton(ring.size, ring.zero);
    for x in ideal.iter() {
        if span.contains(x) {
            continue;
        }
        gens.push(x);
        let mut next = span.clone();
        for s in 0..ring.size {
            let rx = ring.mul(s, x);
            for a in span.iter() {
                next.insert(ring.add(a, rx));
            }
        }
        span = next;
    }
    gens.iter().map(|&g| ring.label(g)).collect::<Vec<_>>().join(",")
}
