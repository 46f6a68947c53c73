//! Branch-cycle tuples in permutation groups: product-one generating tuples
//! in prescribed classes, Riemann–Hurwitz genus, braid moves and Nielsen
//! classes.
//!
//! Permutations act on `0..n` and compose left to right: `(st)(i) = t(s(i))`.
//! The braid move `Q_i` sends `(s_i, s_{i+1})` to `(s_i s_{i+1} s_i^-1, s_i)`.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};

pub const GROUP_ORDER_BOUND: usize = 100_000;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm((0..n as u8).collect())
    }

    pub fn from_images(images: Vec<u8>) -> Result<Perm> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            match seen.get_mut(i as usize) {
                Some(s) if !*s => *s = true,
                _ => return Err(Error::Invalid(format!("{images:?} is not a permutation"))),
            }
        }
        Ok(Perm(images))
    }

    /// Builds from 1-based cycles, e.g. `[[1, 2, 3]]`.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Perm> {
        let mut img: Vec<u8> = (0..n as u8).collect();
        for c in cycles {
            for (k, &a) in c.iter().enumerate() {
                let b = c[(k + 1) % c.len()];
                if a == 0 || a > n || b == 0 || b > n {
                    return Err(Error::OutOfRange(format!("point {a} not in 1..={n}")));
                }
                img[a - 1] = (b - 1) as u8;
            }
        }
        Perm::from_images(img)
    }

    /// Parses 1-based cycle notation such as `"(1,2,3)(4,5)"`; `"()"` is the
    /// identity.
    pub fn parse(n: usize, text: &str) -> Result<Perm> {
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = t
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("{text:?} is not in cycle notation")))?;
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        for part in inner.split(")(").filter(|c| !c.is_empty()) {
            let c = part
                .split(',')
                .map(|x| {
                    x.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad point {x:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            cycles.push(c);
        }
        let mut used = vec![false; n + 1];
        for &a in cycles.iter().flatten() {
            if a >= 1 && a <= n && std::mem::replace(&mut used[a], true) {
                return Err(Error::Parse(format!("point {a} repeated in {text:?}")));
            }
        }
        let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
        Perm::from_cycles(n, &refs)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&i| other.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Perm(inv)
    }

    /// `g^-1 self g`.
    pub fn conjugate_by(&self, g: &Perm) -> Perm {
        g.inverse().then(self).then(g)
    }

    /// Cycle lengths, descending, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for s in 0..self.0.len() {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i] as usize;
                len += 1;
            }
            out.push(len);
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    pub fn cycle_count(&self) -> usize {
        self.cycle_type().len()
    }

    pub fn is_even(&self) -> bool {
        (self.degree() - self.cycle_count()).is_multiple_of(2)
    }
}

impl fmt::Display for Perm {
    /// 1-based cycle notation; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.0.len()];
        let mut any = false;
        for s in 0..self.0.len() {
            if seen[s] || self.0[s] as usize == s {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut i = s;
            let mut first = true;
            while !seen[i] {
                seen[i] = true;
                if !first {
                    write!(f, ",")?;
                }
                write!(f, "{}", i + 1)?;
                first = false;
                i = self.0[i] as usize;
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Order of the group generated by `gens`, stopping early once it exceeds
/// `stop_at`.
pub fn generated_order(n: usize, gens: &[Perm], stop_at: usize) -> usize {
    let mut seen: HashSet<Perm> = HashSet::new();
    let id = Perm::identity(n);
    let mut queue = VecDeque::from([id.clone()]);
    seen.insert(id);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.then(g);
            if seen.insert(y.clone()) {
                if seen.len() > stop_at {
                    return seen.len();
                }
                queue.push_back(y);
            }
        }
    }
    seen.len()
}

#[derive(Clone, Debug)]
pub struct PermGroup {
    name: String,
    n: usize,
    generators: Vec<Perm>,
    /// Ascending.
    elements: Vec<Perm>,
    index: HashMap<Perm, u32>,
}

impl PermGroup {
    pub fn from_generators(name: &str, n: usize, generators: Vec<Perm>) -> Result<PermGroup> {
        if generators.iter().any(|g| g.degree() != n) {
            return Err(Error::DimensionMismatch("generator of wrong degree".into()));
        }
        let mut seen: HashSet<Perm> = HashSet::new();
        let id = Perm::identity(n);
        let mut queue = VecDeque::from([id.clone()]);
        seen.insert(id);
        while let Some(x) = queue.pop_front() {
            for g in &generators {
                let y = x.then(g);
                if seen.insert(y.clone()) {
                    if seen.len() > GROUP_ORDER_BOUND {
                        return Err(Error::TooLarge(format!(
                            "group order exceeds {GROUP_ORDER_BOUND}"
                        )));
                    }
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Perm> = seen.into_iter().collect();
        elements.sort();
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as u32))
            .collect();
        Ok(PermGroup {
            name: name.to_string(),
            n,
            generators,
            elements,
            index,
        })
    }

    pub fn symmetric(n: usize) -> Result<PermGroup> {
        if n == 0 || n > 12 {
            return Err(Error::OutOfRange(format!("degree {n}")));
        }
        let mut gens = Vec::new();
        if n > 1 {
            gens.push(Perm::from_cycles(n, &[&[1, 2]])?);
            let all: Vec<usize> = (1..=n).collect();
            gens.push(Perm::from_cycles(n, &[&all])?);
        }
        PermGroup::from_generators(&format!("S{n}"), n, gens)
    }

    pub fn alternating(n: usize) -> Result<PermGroup> {
        if n == 0 || n > 12 {
            return Err(Error::OutOfRange(format!("degree {n}")));
        }
        let gens = (3..=n)
            .map(|k| Perm::from_cycles(n, &[&[1, 2, k]]))
            .collect::<Result<Vec<_>>>()?;
        PermGroup::from_generators(&format!("A{n}"), n, gens)
    }

    /// `"S5"`, `"A5"` and so on.
    pub fn named(name: &str) -> Result<PermGroup> {
        let (kind, deg) = name.split_at(1.min(name.len()));
        let n: usize = deg
            .parse()
            .map_err(|_| Error::Parse(format!("unknown group {name:?}")))?;
        match kind {
            "S" | "s" => PermGroup::symmetric(n),
            "A" | "a" => PermGroup::alternating(n),
            _ => Err(Error::Parse(format!("unknown group {name:?}"))),
        }
    }

    /// A name accepted by [`PermGroup::named`], or generators in cycle
    /// notation separated by `;` acting on `1..=degree`.
    pub fn parse(text: &str, degree: Option<usize>) -> Result<PermGroup> {
        if !text.contains('(') {
            return PermGroup::named(text.trim());
        }
        let parts: Vec<&str> = text
            .split(';')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .collect();
        let n = match degree {
            Some(n) => n,
            None => text
                .split(|c: char| !c.is_ascii_digit())
                .filter_map(|x| x.parse::<usize>().ok())
                .max()
                .unwrap_or(1),
        };
        if n == 0 || n > 255 {
            return Err(Error::OutOfRange(format!("degree {n}")));
        }
        let gens = parts
            .iter()
            .map(|g| Perm::parse(n, g))
            .collect::<Result<Vec<_>>>()?;
        PermGroup::from_generators(&format!("<{}>", parts.join(", ")), n, gens)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.index.contains_key(p)
    }

    pub fn index_of(&self, p: &Perm) -> Option<u32> {
        self.index.get(p).copied()
    }

    pub fn is_transitive(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for g in &self.generators {
                let j = g.apply(i);
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn generates(&self, perms: &[Perm]) -> bool {
        perms.iter().all(|p| self.contains(p))
            && generated_order(self.n, perms, self.order()) == self.order()
    }

    /// Elements with the given cycle type (a union of conjugacy classes of the
    /// group when a class of `S_n` splits), ascending.
    pub fn elements_of_type(&self, ty: &CycleType) -> Vec<Perm> {
        let want = ty.full(self.n);
        self.elements
            .iter()
            .filter(|p| p.cycle_type() == want)
            .cloned()
            .collect()
    }
}

/// Nontrivial cycle lengths, descending; fixed points implied.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycleType(pub Vec<usize>);

impl CycleType {
    pub fn full(&self, n: usize) -> Vec<usize> {
        let mut v: Vec<usize> = self.0.iter().copied().filter(|&c| c > 1).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        let moved: usize = v.iter().sum();
        v.extend(std::iter::repeat_n(1, n.saturating_sub(moved)));
        v
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() == 1 {
            write!(f, "{}cyc", self.0[0])
        } else {
            let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
            write!(f, "{}", parts.join("."))
        }
    }
}

/// Parses class lists such as `"3cyc^5"` or `"2cyc^2,2.2,3cyc"`: items
/// separated by commas or spaces, each a cycle type (`kcyc` for a single
/// k-cycle, or lengths joined by dots) with an optional multiplicity.
pub fn parse_classes(text: &str) -> Result<Vec<CycleType>> {
    let mut out = Vec::new();
    for item in text
        .split([',', ' '])
        .map(str::trim)
        .filter(|s| !s.is_empty())
    {
        let (ty, mult) = match item.split_once('^') {
            Some((t, m)) => (
                t,
                m.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad multiplicity in {item:?}")))?,
            ),
            None => (item, 1),
        };
        let lengths: Vec<usize> = if let Some(k) = ty.strip_suffix("cyc") {
            vec![k
                .parse()
                .map_err(|_| Error::Parse(format!("bad cycle type {ty:?}")))?]
        } else {
            ty.split('.')
                .map(|c| {
                    c.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad cycle type {ty:?}")))
                })
                .collect::<Result<_>>()?
        };
        if lengths.iter().any(|&c| c < 2) {
            return Err(Error::Parse(format!(
                "cycle lengths in {ty:?} must be at least 2"
            )));
        }
        let mut lengths = lengths;
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        out.extend(std::iter::repeat_n(CycleType(lengths), mult));
    }
    if out.is_empty() {
        return Err(Error::Parse("empty class list".into()));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermTuple {
    pub perms: Vec<Perm>,
    pub product_one: bool,
    pub generates: bool,
}

impl PermTuple {
    pub fn new(group: &PermGroup, perms: Vec<Perm>) -> PermTuple {
        let n = group.degree();
        let product_one = perms
            .iter()
            .fold(Perm::identity(n), |acc, p| acc.then(p))
            .is_identity();
        let generates = group.generates(&perms);
        PermTuple {
            perms,
            product_one,
            generates,
        }
    }

    pub fn len(&self) -> usize {
        self.perms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perms.is_empty()
    }

    pub fn product(&self) -> Perm {
        let n = self.perms.first().map_or(0, Perm::degree);
        self.perms
            .iter()
            .fold(Perm::identity(n), |acc, p| acc.then(p))
    }

    /// Drops identity entries.
    pub fn effective(&self) -> Vec<Perm> {
        self.perms
            .iter()
            .filter(|p| !p.is_identity())
            .cloned()
            .collect()
    }

    pub fn cycle_types(&self) -> Vec<Vec<usize>> {
        let mut v: Vec<_> = self.perms.iter().map(Perm::cycle_type).collect();
        v.sort();
        v
    }
}

impl fmt::Display for PermTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.perms.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// `g` with `2g - 2 = -2n + sum (n - #cycles(s_i))`. Negative values mean the
/// tuple cannot describe a connected cover.
pub fn rh_genus(n: usize, tuple: &PermTuple) -> Result<i64> {
    if !tuple.product_one {
        return Err(Error::NotProductOne);
    }
    let ram: i64 = tuple
        .perms
        .iter()
        .map(|p| (n - p.cycle_count()) as i64)
        .sum();
    let twice = ram - 2 * n as i64 + 2;
    if twice % 2 != 0 {
        return Err(Error::Invalid("odd ramification total".into()));
    }
    Ok(twice / 2)
}

/// All tuples `(s_1, .., s_r)` with `s_i` of the given cycle types and
/// product one, in lexicographic order. With `require_generation` only
/// generating tuples are kept.
pub fn enumerate_tuples(
    group: &PermGroup,
    classes: &[CycleType],
    require_generation: bool,
    budget: u64,
) -> Result<Vec<PermTuple>> {
    let r = classes.len();
    if r == 0 {
        return Err(Error::Invalid("empty class list".into()));
    }
    let lists: Vec<Vec<Perm>> = classes.iter().map(|c| group.elements_of_type(c)).collect();
    let space = lists[..r - 1]
        .iter()
        .try_fold(1u64, |acc, l| acc.checked_mul(l.len() as u64))
        .filter(|&s| s <= budget)
        .ok_or_else(|| Error::BudgetExceeded(format!("more than {budget} partial tuples")))?;
    if lists.iter().any(Vec::is_empty) || space == 0 {
        return Ok(vec![]);
    }
    let last: HashSet<&Perm> = lists[r - 1].iter().collect();
    let n = group.degree();

    let first: Vec<Perm> = if r == 1 {
        vec![Perm::identity(n)]
    } else {
        lists[0].clone()
    };
    let out: Vec<PermTuple> = first
        .par_iter()
        .flat_map_iter(|s1| {
            let mut found = Vec::new();
            let mut prefix: Vec<Perm> = if r == 1 { vec![] } else { vec![s1.clone()] };
            let start = if r == 1 {
                Perm::identity(n)
            } else {
                s1.clone()
            };
            extend(
                group,
                &lists,
                &last,
                &mut prefix,
                start,
                require_generation,
                &mut found,
            );
            found
        })
        .collect();
    Ok(out)
}

fn extend(
    group: &PermGroup,
    lists: &[Vec<Perm>],
    last: &HashSet<&Perm>,
    prefix: &mut Vec<Perm>,
    acc: Perm,
    require_generation: bool,
    found: &mut Vec<PermTuple>,
) {
    let r = lists.len();
    if prefix.len() == r - 1 {
        let closing = acc.inverse();
        if last.contains(&closing) {
            let mut perms = prefix.clone();
            perms.push(closing);
            let t = PermTuple::new(group, perms);
            if t.generates || !require_generation {
                found.push(t);
            }
        }
        return;
    }
    for s in &lists[prefix.len()] {
        prefix.push(s.clone());
        extend(
            group,
            lists,
            last,
            prefix,
            acc.then(s),
            require_generation,
            found,
        );
        prefix.pop();
    }
}

/// `Q_i` for `1 <= i < r`. The product and the generated subgroup are
/// unchanged, so the flags carry over.
pub fn braid_action(tuple: &PermTuple, i: usize) -> Result<PermTuple> {
    check_index(tuple, i)?;
    let mut perms = tuple.perms.clone();
    let (a, b) = (&tuple.perms[i - 1], &tuple.perms[i]);
    perms[i - 1] = a.then(b).then(&a.inverse());
    perms[i] = a.clone();
    Ok(PermTuple {
        perms,
        ..tuple.clone()
    })
}

/// `Q_i^-1`: `(s_i, s_{i+1}) -> (s_{i+1}, s_{i+1}^-1 s_i s_{i+1})`.
pub fn braid_inverse(tuple: &PermTuple, i: usize) -> Result<PermTuple> {
    check_index(tuple, i)?;
    let mut perms = tuple.perms.clone();
    let (a, b) = (&tuple.perms[i - 1], &tuple.perms[i]);
    perms[i - 1] = b.clone();
    perms[i] = b.inverse().then(a).then(b);
    Ok(PermTuple {
        perms,
        ..tuple.clone()
    })
}

fn check_index(tuple: &PermTuple, i: usize) -> Result<()> {
    if i == 0 || i >= tuple.len() {
        return Err(Error::OutOfRange(format!(
            "braid index {i} not in 1..{}",
            tuple.len()
        )));
    }
    Ok(())
}

/// Replaces `(s_i, s_{i+1})` by `s_i s_{i+1}` and re-tests generation.
pub fn degenerate_tuple(group: &PermGroup, tuple: &PermTuple, i: usize) -> Result<PermTuple> {
    check_index(tuple, i)?;
    let mut perms = tuple.perms.clone();
    let merged = perms[i - 1].then(&perms[i]);
    perms[i - 1] = merged;
    perms.remove(i);
    Ok(PermTuple::new(group, perms))
}

/// Lexicographically least simultaneous conjugate `(g^-1 s_i g)_i`, `g` in
/// the group.
pub fn canonical_conjugate(group: &PermGroup, perms: &[Perm]) -> Vec<Perm> {
    group
        .elements()
        .iter()
        .map(|g| perms.iter().map(|s| s.conjugate_by(g)).collect::<Vec<_>>())
        .min()
        .unwrap_or_default()
}

#[derive(Clone, Debug)]
pub struct NielsenReport {
    pub tuple_count: usize,
    /// Enumerated tuples up to simultaneous conjugation.
    pub class_count: usize,
    /// Classes reached by braid moves from the enumerated ones; equal to
    /// `class_count` whenever the class list is constant.
    pub closure_class_count: usize,
    pub orbit_count: usize,
    /// Descending by size, ties by representative.
    pub orbit_sizes: Vec<usize>,
    /// Least member of each orbit, aligned with `orbit_sizes`.
    pub representatives: Vec<Vec<Perm>>,
}

/// Braid orbits on conjugation classes of the given tuples. Every orbit is
/// closed under all `Q_i^(+-1)`; representatives are least members, so the
/// result does not depend on input order.
pub fn braid_orbits(group: &PermGroup, tuples: &[PermTuple]) -> NielsenReport {
    let classes: BTreeSet<Vec<Perm>> = tuples
        .par_iter()
        .map(|t| canonical_conjugate(group, &t.perms))
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    let mut assigned: HashSet<Vec<Perm>> = HashSet::new();
    let mut orbits: Vec<(usize, Vec<Perm>)> = Vec::new();
    for start in &classes {
        if assigned.contains(start) {
            continue;
        }
        let mut members = vec![start.clone()];
        assigned.insert(start.clone());
        let mut queue = VecDeque::from([start.clone()]);
        while let Some(cur) = queue.pop_front() {
            let t = PermTuple {
                perms: cur,
                product_one: true,
                generates: true,
            };
            for i in 1..t.len() {
                for next in [braid_action(&t, i), braid_inverse(&t, i)] {
                    let c = canonical_conjugate(group, &next.expect("index in range").perms);
                    if assigned.insert(c.clone()) {
                        members.push(c.clone());
                        queue.push_back(c);
                    }
                }
            }
        }
        let rep = members.iter().min().unwrap().clone();
        orbits.push((members.len(), rep));
    }
    orbits.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.cmp(&b.1)));
    NielsenReport {
        tuple_count: tuples.len(),
        class_count: classes.len(),
        closure_class_count: assigned.len(),
        orbit_count: orbits.len(),
        orbit_sizes: orbits.iter().map(|o| o.0).collect(),
        representatives: orbits.into_iter().map(|o| o.1).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, c: &[usize]) -> Perm {
        Perm::from_cycles(n, &[c]).unwrap()
    }

    #[test]
    fn composition_is_left_to_right() {
        let a = cyc(3, &[1, 2]);
        let b = cyc(3, &[2, 3]);
        // 1 -a-> 2 -b-> 3
        assert_eq!(a.then(&b).apply(0), 2);
        assert_eq!(a.then(&b).to_string(), "(1,3,2)");
        assert_eq!(Perm::identity(4).to_string(), "()");
    }

    #[test]
    fn cycle_notation_round_trip() {
        let p = Perm::parse(5, "(1,3)(2,4,5)").unwrap();
        assert_eq!(p.to_string(), "(1,3)(2,4,5)");
        assert!(Perm::parse(3, "()").unwrap().is_identity());
        assert!(Perm::parse(3, "(1,1)").is_err());
        assert!(Perm::parse(3, "(1,4)").is_err());
        let g = PermGroup::parse("(1,2,3,4);(1,2)", None).unwrap();
        assert_eq!(g.order(), 24);
        assert_eq!(PermGroup::parse("(1,2)", Some(3)).unwrap().order(), 2);
    }

    #[test]
    fn group_orders() {
        assert_eq!(PermGroup::named("S5").unwrap().order(), 120);
        assert_eq!(PermGroup::named("A5").unwrap().order(), 60);
        assert_eq!(PermGroup::named("A4").unwrap().order(), 12);
        assert!(PermGroup::named("A5").unwrap().is_transitive());
        assert!(PermGroup::named("X5").is_err());
    }

    #[test]
    fn class_parsing() {
        let c = parse_classes("3cyc^5").unwrap();
        assert_eq!(c.len(), 5);
        assert_eq!(c[0], CycleType(vec![3]));
        let c = parse_classes("2.2, 3cyc^2").unwrap();
        assert_eq!(c[0], CycleType(vec![2, 2]));
        assert_eq!(c[0].to_string(), "2.2");
        assert!(parse_classes("1cyc").is_err());
    }

    #[test]
    fn a5_five_three_cycles_have_genus_one() {
        let g = PermGroup::alternating(5).unwrap();
        let ts = enumerate_tuples(&g, &parse_classes("3cyc^5").unwrap(), true, 1 << 20).unwrap();
        assert!(!ts.is_empty());
        for t in &ts {
            assert!(t.product_one && t.generates);
            assert_eq!(rh_genus(5, t).unwrap(), 1);
        }
    }

    #[test]
    fn sign_obstruction() {
        let g = PermGroup::symmetric(4).unwrap();
        let ts = enumerate_tuples(&g, &parse_classes("2cyc^3").unwrap(), false, 1 << 20).unwrap();
        assert!(ts.is_empty());
    }

    #[test]
    fn braid_moves_invert() {
        let g = PermGroup::alternating(5).unwrap();
        let ts = enumerate_tuples(&g, &parse_classes("3cyc^5").unwrap(), true, 1 << 20).unwrap();
        let t = &ts[7];
        for i in 1..5 {
            let q = braid_action(t, i).unwrap();
            assert_eq!(q.product(), Perm::identity(5));
            assert_eq!(&braid_inverse(&q, i).unwrap(), t);
        }
        assert!(braid_action(t, 5).is_err());
    }

    #[test]
    fn degeneration() {
        let g = PermGroup::symmetric(2).unwrap();
        let s = cyc(2, &[1, 2]);
        let t = PermTuple::new(&g, vec![s.clone(), s]);
        assert_eq!(rh_genus(2, &t).unwrap(), 0);
        let d = degenerate_tuple(&g, &t, 1).unwrap();
        assert_eq!(d.len(), 1);
        assert!(d.perms[0].is_identity() && d.product_one && !d.generates);
    }

    #[test]
    fn rh_requires_product_one() {
        let g = PermGroup::symmetric(3).unwrap();
        let t = PermTuple::new(&g, vec![cyc(3, &[1, 2])]);
        assert_eq!(rh_genus(3, &t), Err(Error::NotProductOne));
    }

    #[test]
    fn orbit_sizes_sum_to_classes() {
        let g = PermGroup::symmetric(4).unwrap();
        let ts = enumerate_tuples(&g, &parse_classes("2cyc^6").unwrap(), true, 1 << 20).unwrap();
        let r = braid_orbits(&g, &ts);
        assert_eq!(r.orbit_sizes.iter().sum::<usize>(), r.class_count);
        assert_eq!(r.class_count, r.closure_class_count);
        // transposition tuples in S_n form a single braid orbit
        assert_eq!(r.orbit_count, 1);
    }
}
