//! Finite groups by multiplication table, with the structural queries the
//! double's formulas consume: conjugation, centralizers, conjugacy classes,
//! and classes of commuting pairs under simultaneous conjugation.
//!
//! Element indexing is stable and deterministic so fixtures reproduce across
//! runs: permutation groups are enumerated breadth-first from the identity
//! with generators in input order.

use std::collections::HashMap;

use once_cell::sync::OnceCell;

use crate::cyclo::lcm_u32;
use crate::{Error, Result};

/// Cap on the order of groups generated from permutations.
pub const DEFAULT_ORDER_CAP: usize = 2000;

/// A finite group given by its Cayley table.
#[derive(Clone)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
    names: Vec<String>,
    classes: ConjClassData,
    element_orders: Vec<u32>,
    exponent: u32,
    pair_classes: OnceCell<CommutingPairClasses>,
}

/// Conjugacy class data, computed eagerly at construction.
#[derive(Clone, Debug)]
pub struct ConjClassData {
    /// The classes as sorted element lists; class 0 is the class of `e`.
    pub classes: Vec<Vec<usize>>,
    /// `class_of[g]` = index into `classes`.
    pub class_of: Vec<usize>,
    /// Smallest element of each class.
    pub representatives: Vec<usize>,
}

/// Orbits of commuting pairs `(g, x)` under simultaneous conjugation.
#[derive(Clone, Debug)]
pub struct CommutingPairClasses {
    /// All commuting pairs, lexicographically sorted.
    pub pairs: Vec<(usize, usize)>,
    /// Orbits under `(g, x) -> (h g h^-1, h x h^-1)`, each sorted.
    pub orbits: Vec<Vec<(usize, usize)>>,
    /// Smallest pair of each orbit.
    pub representatives: Vec<(usize, usize)>,
}

/// A subgroup together with its own table and the inclusion map.
#[derive(Clone)]
pub struct Subgroup {
    /// Parent indices of the subgroup elements, sorted ascending.
    pub elements: Vec<usize>,
    /// The subgroup as a standalone group; element `i` is `elements[i]`.
    pub group: FiniteGroup,
    /// Parent index -> subgroup index.
    index_of: HashMap<usize, usize>,
}

impl Subgroup {
    /// Subgroup index of a parent element, if it lies in the subgroup.
    pub fn index_of(&self, parent_elt: usize) -> Option<usize> {
        self.index_of.get(&parent_elt).copied()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

impl FiniteGroup {
    /// Validate a Cayley table and build the group.
    ///
    /// Rejects anything that is not a group: missing identity or inverses,
    /// or a non-associative table (reported with a witness triple).
    pub fn from_table(table: Vec<Vec<usize>>, names: Option<Vec<String>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotAGroup(format!("row {i} has length {}", row.len())));
            }
            for &v in row {
                if v >= n {
                    return Err(Error::BadElement(v, n));
                }
            }
        }
        let flat: Vec<usize> = table.iter().flatten().copied().collect();
        let at = |a: usize, b: usize| flat[a * n + b];
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| at(e, a) == a && at(a, e) == a))
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
        let mut inverse = vec![usize::MAX; n];
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| at(a, b) == identity && at(b, a) == identity)
                .ok_or_else(|| Error::NotAGroup(format!("element {a} has no inverse")))?;
            inverse[a] = inv;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if at(at(a, b), c) != at(a, at(b, c)) {
                        return Err(Error::NotAGroup(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let names = match names {
            Some(v) if v.len() == n => v,
            Some(v) => {
                return Err(Error::NotAGroup(format!(
                    "expected {n} names, got {}",
                    v.len()
                )))
            }
            None => (0..n).map(|i| format!("g{i}")).collect(),
        };
        Ok(Self::finish(n, flat, identity, inverse, names))
    }

    /// Close a set of permutation generators into a group.
    ///
    /// Elements are enumerated breadth-first from the identity, multiplying on
    /// the right by each generator in input order, so the indexing is
    /// deterministic.
    pub fn from_permutations(gens: &[Vec<usize>], cap: usize) -> Result<Self> {
        let m = gens.iter().map(|p| p.len()).max().unwrap_or(1);
        let mut padded: Vec<Vec<usize>> = Vec::with_capacity(gens.len());
        for p in gens {
            let mut q: Vec<usize> = p.clone();
            q.extend(q.len()..m);
            let mut seen = vec![false; m];
            for &v in &q {
                if v >= m || seen[v] {
                    return Err(Error::NotAGroup(format!(
                        "generator {q:?} is not a permutation"
                    )));
                }
                seen[v] = true;
            }
            padded.push(q);
        }
        let compose = |p: &[usize], q: &[usize]| -> Vec<usize> {
            // (p * q)(i) = p(q(i))
            (0..m).map(|i| p[q[i]]).collect()
        };
        let id: Vec<usize> = (0..m).collect();
        let mut elements: Vec<Vec<usize>> = vec![id.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
        index.insert(id, 0);
        let mut head = 0;
        while head < elements.len() {
            let current = elements[head].clone();
            for g in &padded {
                let next = compose(&current, g);
                if !index.contains_key(&next) {
                    if elements.len() >= cap {
                        return Err(Error::OrderCapExceeded {
                            order: elements.len() + 1,
                            cap,
                        });
                    }
                    index.insert(next.clone(), elements.len());
                    elements.push(next);
                }
            }
            head += 1;
        }
        let n = elements.len();
        let mut flat = vec![0usize; n * n];
        for a in 0..n {
            for b in 0..n {
                let prod = compose(&elements[a], &elements[b]);
                flat[a * n + b] = index[&prod];
            }
        }
        let identity = 0;
        let mut inverse = vec![usize::MAX; n];
        for a in 0..n {
            inverse[a] = (0..n)
                .find(|&b| flat[a * n + b] == identity)
                .expect("permutation groups have inverses");
        }
        let names = elements.iter().map(|p| cycle_notation(p)).collect();
        Ok(Self::finish(n, flat, identity, inverse, names))
    }

    fn finish(
        order: usize,
        table: Vec<usize>,
        identity: usize,
        inverse: Vec<usize>,
        names: Vec<String>,
    ) -> Self {
        let at = |a: usize, b: usize| table[a * order + b];
        // Conjugacy classes by orbit scan.
        let mut class_of = vec![usize::MAX; order];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for g in 0..order {
            if class_of[g] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut class: Vec<usize> = (0..order)
                .map(|h| at(at(h, g), inverse[h]))
                .collect();
            class.sort_unstable();
            class.dedup();
            for &m in &class {
                class_of[m] = id;
            }
            classes.push(class);
        }
        let representatives = classes.iter().map(|c| c[0]).collect();
        // Element orders and exponent.
        let mut element_orders = vec![0u32; order];
        for g in 0..order {
            let mut k = 1u32;
            let mut x = g;
            while x != identity {
                x = at(x, g);
                k += 1;
            }
            element_orders[g] = k;
        }
        let exponent = element_orders.iter().fold(1u32, |acc, &o| lcm_u32(acc, o));
        FiniteGroup {
            order,
            table,
            identity,
            inverse,
            names,
            classes: ConjClassData {
                classes,
                class_of,
                representatives,
            },
            element_orders,
            exponent,
            pair_classes: OnceCell::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `a b a^-1`.
    pub fn conj(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.inverse[a])
    }

    /// Commutator `[g, h] = g h g^-1 h^-1`.
    pub fn commutator(&self, g: usize, h: usize) -> usize {
        self.mul(self.conj(g, h), self.inverse[h])
    }

    pub fn power(&self, g: usize, k: i64) -> usize {
        let o = self.element_orders[g] as i64;
        let mut k = k.rem_euclid(o) as u32;
        let mut acc = self.identity;
        let mut base = g;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn element_order(&self, g: usize) -> u32 {
        self.element_orders[g]
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn name(&self, g: usize) -> &str {
        &self.names[g]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn conjugacy_classes(&self) -> &ConjClassData {
        &self.classes
    }

    /// The centralizer `Z(g)` as a subgroup.
    pub fn centralizer(&self, g: usize) -> Subgroup {
        let elems: Vec<usize> = (0..self.order)
            .filter(|&x| self.mul(x, g) == self.mul(g, x))
            .collect();
        self.subgroup(elems).expect("centralizers are subgroups")
    }

    /// `Z(g, h) = Z(g) n Z(h)`.
    pub fn pair_centralizer(&self, g: usize, h: usize) -> Subgroup {
        let elems: Vec<usize> = (0..self.order)
            .filter(|&x| {
                self.mul(x, g) == self.mul(g, x) && self.mul(x, h) == self.mul(h, x)
            })
            .collect();
        self.subgroup(elems).expect("centralizers are subgroups")
    }

    /// Build the subgroup on the given (closed) element set.
    pub fn subgroup(&self, mut elements: Vec<usize>) -> Result<Subgroup> {
        elements.sort_unstable();
        elements.dedup();
        let index_of: HashMap<usize, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, &e)| (e, i))
            .collect();
        let k = elements.len();
        let mut table = vec![vec![0usize; k]; k];
        for i in 0..k {
            for j in 0..k {
                let p = self.mul(elements[i], elements[j]);
                let Some(&pi) = index_of.get(&p) else {
                    return Err(Error::NotAGroup(format!(
                        "subset not closed: {} * {} escapes",
                        self.names[elements[i]], self.names[elements[j]]
                    )));
                };
                table[i][j] = pi;
            }
        }
        let names = elements.iter().map(|&e| self.names[e].clone()).collect();
        let group = FiniteGroup::from_table(table, Some(names))?;
        Ok(Subgroup {
            elements,
            group,
            index_of,
        })
    }

    /// Orbits of commuting pairs under simultaneous conjugation, cached.
    pub fn commuting_pair_classes(&self) -> &CommutingPairClasses {
        self.pair_classes.get_or_init(|| {
            let mut pairs = Vec::new();
            for g in 0..self.order {
                for x in 0..self.order {
                    if self.mul(g, x) == self.mul(x, g) {
                        pairs.push((g, x));
                    }
                }
            }
            let mut orbit_of: HashMap<(usize, usize), usize> = HashMap::new();
            let mut orbits: Vec<Vec<(usize, usize)>> = Vec::new();
            for &(g, x) in &pairs {
                if orbit_of.contains_key(&(g, x)) {
                    continue;
                }
                let id = orbits.len();
                let mut orbit: Vec<(usize, usize)> = (0..self.order)
                    .map(|h| (self.conj(h, g), self.conj(h, x)))
                    .collect();
                orbit.sort_unstable();
                orbit.dedup();
                for &p in &orbit {
                    orbit_of.insert(p, id);
                }
                orbits.push(orbit);
            }
            let representatives = orbits.iter().map(|o| o[0]).collect();
            CommutingPairClasses {
                pairs,
                orbits,
                representatives,
            }
        })
    }

    /// Left cosets of a subgroup; each coset is sorted, and the list is
    /// ordered by smallest representative. Returns (reps, coset_of, shift)
    /// where `shift[g]` expresses `g = reps[coset_of[g]] * shift[g]` with
    /// `shift[g]` in the subgroup.
    pub fn left_cosets(&self, sub: &Subgroup) -> (Vec<usize>, Vec<usize>, Vec<usize>) {
        let mut coset_of = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        let mut shift = vec![usize::MAX; self.order];
        for g in 0..self.order {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(g);
            for &z in &sub.elements {
                let m = self.mul(g, z);
                coset_of[m] = id;
                shift[m] = z;
            }
        }
        (reps, coset_of, shift)
    }

    /// Direct product `self x other` with elements ordered `(a, b) -> a * |B| + b`.
    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        let n = self.order * other.order;
        let mut table = vec![vec![0usize; n]; n];
        let enc = |a: usize, b: usize| a * other.order + b;
        for a1 in 0..self.order {
            for b1 in 0..other.order {
                for a2 in 0..self.order {
                    for b2 in 0..other.order {
                        table[enc(a1, b1)][enc(a2, b2)] =
                            enc(self.mul(a1, a2), other.mul(b1, b2));
                    }
                }
            }
        }
        let names = (0..n)
            .map(|i| {
                format!(
                    "({},{})",
                    self.names[i / other.order],
                    other.names[i % other.order]
                )
            })
            .collect();
        FiniteGroup::from_table(table, Some(names)).expect("product of groups is a group")
    }

    /// Brute-force isomorphism search by table relabeling, for order <= 12.
    pub fn find_isomorphism(&self, other: &FiniteGroup) -> Option<Vec<usize>> {
        if self.order != other.order || self.order > 12 {
            return None;
        }
        let n = self.order;
        let mut ours: Vec<u32> = self.element_orders.clone();
        let mut theirs: Vec<u32> = other.element_orders.clone();
        ours.sort_unstable();
        theirs.sort_unstable();
        if ours != theirs {
            return None;
        }
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        map[self.identity] = other.identity;
        used[other.identity] = true;
        // Assign images in element order with multiplication-consistency pruning.
        fn assign(
            a: &FiniteGroup,
            b: &FiniteGroup,
            map: &mut Vec<usize>,
            used: &mut Vec<bool>,
            next: usize,
        ) -> bool {
            let n = a.order;
            let next = (next..n).find(|&x| map[x] == usize::MAX);
            let Some(x) = next else { return true };
            for y in 0..n {
                if used[y] || a.element_orders[x] != b.element_orders[y] {
                    continue;
                }
                map[x] = y;
                used[y] = true;
                let consistent = (0..n).all(|u| {
                    if map[u] == usize::MAX {
                        return true;
                    }
                    let p1 = a.mul(u, x);
                    let p2 = a.mul(x, u);
                    (map[p1] == usize::MAX || map[p1] == b.mul(map[u], y))
                        && (map[p2] == usize::MAX || map[p2] == b.mul(y, map[u]))
                });
                if consistent && assign(a, b, map, used, x + 1) {
                    return true;
                }
                map[x] = usize::MAX;
                used[y] = false;
            }
            false
        }
        if assign(self, other, &mut map, &mut used, 0) {
            // Verify the full relabeling before returning it.
            let good = (0..n)
                .all(|u| (0..n).all(|v| map[self.mul(u, v)] == other.mul(map[u], map[v])));
            if good {
                return Some(map);
            }
        }
        None
    }
}

fn cycle_notation(p: &[usize]) -> String {
    let m = p.len();
    let mut seen = vec![false; m];
    let mut out = String::new();
    for start in 0..m {
        if seen[start] || p[start] == start {
            seen[start] = true;
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut cur = p[start];
        while cur != start {
            seen[cur] = true;
            cycle.push(cur);
            cur = p[cur];
        }
        out.push('(');
        out.push_str(
            &cycle
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" "),
        );
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

// ---------------------------------------------------------------------------
// File formats.
// ---------------------------------------------------------------------------

/// Parse a group file.
///
/// Table format: line 1 `order n`, then `n` lines of `n` whitespace-separated
/// 0-based indices, then an optional `names ...` line. Permutation format:
/// one generator per line in cycle notation, e.g. `(0 1)(2 3)`. Blank lines
/// and `#` comments are ignored.
pub fn parse_group_file(text: &str) -> Result<FiniteGroup> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();
    if lines.is_empty() {
        return Err(Error::parse(1, "empty group file"));
    }
    let (first_no, first) = lines[0];
    if first.starts_with('(') {
        // Permutation format.
        let mut gens = Vec::new();
        for &(no, line) in &lines {
            gens.push(parse_cycles(no, line)?);
        }
        let degree = gens.iter().map(|g| g.len()).max().unwrap_or(1);
        let gens: Vec<Vec<usize>> = gens
            .into_iter()
            .map(|mut g| {
                g.extend(g.len()..degree);
                g
            })
            .collect();
        return FiniteGroup::from_permutations(&gens, DEFAULT_ORDER_CAP);
    }
    let mut parts = first.split_whitespace();
    if parts.next() != Some("order") {
        return Err(Error::parse(first_no, "expected `order n` or cycle notation"));
    }
    let n: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::parse(first_no, "bad order"))?;
    if lines.len() < n + 1 {
        return Err(Error::parse(
            first_no,
            format!("expected {n} table rows, found {}", lines.len() - 1),
        ));
    }
    let mut table = Vec::with_capacity(n);
    for &(no, line) in &lines[1..=n] {
        let row: std::result::Result<Vec<usize>, _> =
            line.split_whitespace().map(|t| t.parse::<usize>()).collect();
        let row = row.map_err(|_| Error::parse(no, "bad table entry"))?;
        if row.len() != n {
            return Err(Error::parse(no, format!("expected {n} entries")));
        }
        table.push(row);
    }
    let mut names = None;
    if let Some(&(no, line)) = lines.get(n + 1) {
        let mut parts = line.split_whitespace();
        if parts.next() != Some("names") {
            return Err(Error::parse(no, "expected `names ...`"));
        }
        let v: Vec<String> = parts.map(|s| s.to_string()).collect();
        if v.len() != n {
            return Err(Error::parse(no, format!("expected {n} names")));
        }
        names = Some(v);
    }
    FiniteGroup::from_table(table, names)
}

fn parse_cycles(line_no: usize, s: &str) -> Result<Vec<usize>> {
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut rest = s;
    while !rest.is_empty() {
        let Some(open) = rest.find('(') else {
            return Err(Error::parse(line_no, "expected `(`"));
        };
        let Some(close) = rest.find(')') else {
            return Err(Error::parse(line_no, "unmatched `(`"));
        };
        if close < open {
            return Err(Error::parse(line_no, "unmatched `)`"));
        }
        let inner = &rest[open + 1..close];
        let cycle: std::result::Result<Vec<usize>, _> = inner
            .split([' ', ','])
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>())
            .collect();
        let cycle = cycle.map_err(|_| Error::parse(line_no, "bad cycle entry"))?;
        cycles.push(cycle);
        rest = rest[close + 1..].trim();
    }
    let degree = cycles
        .iter()
        .flatten()
        .max()
        .map(|&m| m + 1)
        .unwrap_or(1);
    let mut p: Vec<usize> = (0..degree).collect();
    for cycle in &cycles {
        if cycle.len() < 2 {
            continue;
        }
        for w in 0..cycle.len() {
            let from = cycle[w];
            let to = cycle[(w + 1) % cycle.len()];
            if p[from] != from && p[from] != to {
                return Err(Error::parse(line_no, "point repeated across cycles"));
            }
            p[from] = to;
        }
    }
    Ok(p)
}

/// Render a group in the table file format.
pub fn format_group_file(g: &FiniteGroup) -> String {
    let n = g.order();
    let mut out = format!("order {n}\n");
    for a in 0..n {
        let row: Vec<String> = (0..n).map(|b| g.mul(a, b).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

// ---------------------------------------------------------------------------
// Stock groups used throughout the tests and the CLI docs.
// ---------------------------------------------------------------------------

pub mod presets {
    use super::FiniteGroup;

    pub fn trivial() -> FiniteGroup {
        FiniteGroup::from_table(vec![vec![0]], Some(vec!["e".into()])).unwrap()
    }

    pub fn cyclic(n: usize) -> FiniteGroup {
        assert!(n >= 1);
        if n == 1 {
            return trivial();
        }
        let gen: Vec<usize> = (1..n).chain([0]).collect();
        FiniteGroup::from_permutations(&[gen], n + 1).unwrap()
    }

    pub fn klein_four() -> FiniteGroup {
        cyclic(2).direct_product(&cyclic(2))
    }

    pub fn symmetric_3() -> FiniteGroup {
        FiniteGroup::from_permutations(&[vec![1, 0, 2], vec![1, 2, 0]], 10).unwrap()
    }

    /// Dihedral group of order 8 (symmetries of the square).
    pub fn dihedral_8() -> FiniteGroup {
        FiniteGroup::from_permutations(&[vec![1, 2, 3, 0], vec![0, 3, 2, 1]], 10).unwrap()
    }

    /// Quaternion group, via its left-regular permutation action on
    /// `{1, i, -1, -i, j, k, -j, -k}`.
    pub fn quaternion_8() -> FiniteGroup {
        let i = vec![1, 2, 3, 0, 5, 6, 7, 4];
        let j = vec![4, 7, 6, 5, 2, 1, 0, 3];
        FiniteGroup::from_permutations(&[i, j], 10).unwrap()
    }

    pub fn cyclic_6() -> FiniteGroup {
        cyclic(6)
    }
}

#[cfg(test)]
mod tests {
    use super::presets::*;
    use super::*;

    #[test]
    fn table_construction_and_rejection() {
        let t = FiniteGroup::from_table(vec![vec![0]], None).unwrap();
        assert_eq!(t.order(), 1);
        let z2 = FiniteGroup::from_table(vec![vec![0, 1], vec![1, 0]], None).unwrap();
        assert_eq!(z2.order(), 2);
        // Z/4 with one corrupted entry fails validation.
        let mut rows = vec![
            vec![0, 1, 2, 3],
            vec![1, 2, 3, 0],
            vec![2, 3, 0, 1],
            vec![3, 0, 1, 2],
        ];
        rows[1][1] = 3;
        assert!(FiniteGroup::from_table(rows, None).is_err());
    }

    #[test]
    fn permutation_closure_orders() {
        assert_eq!(FiniteGroup::from_permutations(&[vec![1, 0]], 10).unwrap().order(), 2);
        assert_eq!(symmetric_3().order(), 6);
        assert_eq!(dihedral_8().order(), 8);
        assert_eq!(quaternion_8().order(), 8);
        assert_eq!(cyclic(5).order(), 5);
        assert!(FiniteGroup::from_permutations(&[(1..30).chain([0]).collect()], 10).is_err());
    }

    #[test]
    fn quaternion_structure() {
        let q = quaternion_8();
        assert_eq!(q.exponent(), 4);
        let orders: Vec<u32> = q.elements().map(|g| q.element_order(g)).collect();
        assert_eq!(orders.iter().filter(|&&o| o == 4).count(), 6);
        assert_eq!(orders.iter().filter(|&&o| o == 2).count(), 1);
        // Center has order 2; 5 conjugacy classes.
        assert_eq!(q.conjugacy_classes().classes.len(), 5);
        assert!(!q.is_abelian());
    }

    #[test]
    fn centralizers_in_s3() {
        let s3 = symmetric_3();
        // Identity centralizes everything.
        assert_eq!(s3.centralizer(s3.identity()).order(), 6);
        // A transposition has centralizer of order 2, a 3-cycle of order 3.
        for g in s3.elements() {
            match s3.element_order(g) {
                2 => assert_eq!(s3.centralizer(g).order(), 2),
                3 => assert_eq!(s3.centralizer(g).order(), 3),
                _ => {}
            }
        }
        // Class equation: |class| * |Z(g)| = |G|.
        for g in s3.elements() {
            let class = &s3.conjugacy_classes().classes[s3.conjugacy_classes().class_of[g]];
            assert_eq!(class.len() * s3.centralizer(g).order(), 6);
        }
        assert_eq!(s3.conjugacy_classes().classes.len(), 3);
        let sizes: Vec<usize> = s3
            .conjugacy_classes()
            .classes
            .iter()
            .map(|c| c.len())
            .collect();
        assert_eq!(sizes.iter().sum::<usize>(), 6);
        assert!(sizes.contains(&1) && sizes.contains(&2) && sizes.contains(&3));
    }

    #[test]
    fn pair_centralizers() {
        let s3 = symmetric_3();
        assert_eq!(s3.pair_centralizer(0, 0).order(), 6);
        let t = s3.elements().find(|&g| s3.element_order(g) == 2).unwrap();
        assert_eq!(s3.pair_centralizer(t, t).order(), 2);
        let q = quaternion_8();
        let i = q.elements().find(|&g| q.element_order(g) == 4).unwrap();
        let j = q
            .elements()
            .find(|&g| q.element_order(g) == 4 && g != i && q.mul(i, g) != q.mul(g, i))
            .unwrap();
        // Z(i) n Z(j) is the center {1, -1}.
        assert_eq!(q.pair_centralizer(i, j).order(), 2);
    }

    #[test]
    fn commuting_pair_orbits_s3() {
        let s3 = symmetric_3();
        let cp = s3.commuting_pair_classes();
        // 18 commuting pairs fall into 8 orbits; cross-check against
        // sum over class reps of #classes of Z(g) = 3 + 2 + 3.
        assert_eq!(cp.pairs.len(), 18);
        assert_eq!(cp.orbits.len(), 8);
        let mut total = 0;
        for &g in &s3.conjugacy_classes().representatives {
            let z = s3.centralizer(g);
            total += z.group.conjugacy_classes().classes.len();
        }
        assert_eq!(total, 8);
    }

    #[test]
    fn abelian_classes_are_singletons() {
        let z4 = cyclic(4);
        assert_eq!(z4.conjugacy_classes().classes.len(), 4);
        assert!(z4
            .conjugacy_classes()
            .classes
            .iter()
            .all(|c| c.len() == 1));
    }

    #[test]
    fn commutator_convention() {
        let s3 = symmetric_3();
        for g in s3.elements() {
            for h in s3.elements() {
                let lhs = s3.commutator(g, h);
                let rhs = s3.mul(
                    s3.mul(g, h),
                    s3.mul(s3.inv(g), s3.inv(h)),
                );
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn isomorphism_search() {
        let s3_perm = symmetric_3();
        let s3_table = FiniteGroup::from_table(
            (0..6)
                .map(|a| (0..6).map(|b| s3_perm.mul(a, b)).collect())
                .collect(),
            None,
        )
        .unwrap();
        let iso = s3_perm.find_isomorphism(&s3_table);
        assert!(iso.is_some());
        // Z/4 and the Klein four group are not isomorphic.
        assert!(cyclic(4).find_isomorphism(&klein_four()).is_none());
        // D4 and Q8 have different order profiles.
        assert!(dihedral_8().find_isomorphism(&quaternion_8()).is_none());
    }

    #[test]
    fn group_file_round_trip() {
        let s3 = symmetric_3();
        let text = format_group_file(&s3);
        let back = parse_group_file(&text).unwrap();
        assert_eq!(back.order(), 6);
        assert!(back.find_isomorphism(&s3).is_some());
        // Permutation file.
        let perm = "(0 1)\n(0 1 2)\n";
        let g = parse_group_file(perm).unwrap();
        assert_eq!(g.order(), 6);
        // Parse errors carry line numbers.
        let bad = "order 2\n0 1\n1 2\n";
        assert!(parse_group_file(bad).is_err());
        let err = parse_group_file("order x\n").unwrap_err();
        assert!(err.to_string().contains("line 1"));
    }

    #[test]
    fn left_cosets_are_a_partition() {
        let s3 = symmetric_3();
        let t = s3.elements().find(|&g| s3.element_order(g) == 2).unwrap();
        let z = s3.centralizer(t);
        let (reps, coset_of, shift) = s3.left_cosets(&z);
        assert_eq!(reps.len(), 3);
        for g in s3.elements() {
            let r = reps[coset_of[g]];
            assert_eq!(s3.mul(r, shift[g]), g);
            assert!(z.index_of(shift[g]).is_some());
        }
    }
}
