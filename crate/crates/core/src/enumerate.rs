//! Brute-force generators used as ground truth for the closed forms.
//!
//! Type-B partitions are built by inserting `1, 2, ..., n` in turn. Element
//! `i` either joins the zero block, joins one of the `k` existing
//! representative blocks with either sign (`2k` choices), or opens a new
//! representative block as a positive singleton. Every partition arises from
//! exactly one choice sequence, and the generated blocks come out already in
//! standard presentation.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub const MAX_PARTITIONS_B: usize = 10;
pub const MAX_ORDERED_PARTITIONS_B: usize = 6;
pub const MAX_SIGNED_PERMUTATIONS: usize = 7;
pub const MAX_PARTITIONS_A: usize = 12;
pub const MAX_PERMUTATIONS: usize = 9;

fn budget(what: &'static str, n: usize, max: usize) -> Result<()> {
    if n > max {
        return Err(Error::BudgetExceeded { what, n, max });
    }
    Ok(())
}

/// A set partition of `[n]` of type B in standard presentation.
///
/// The zero block `{±i : i in C}` is stored as the sorted set `C`. Each
/// representative block is sorted by absolute value and starts with its
/// positive minimal element; blocks are ordered by that minimal element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedPartition {
    n: usize,
    zero_block: Vec<u32>,
    blocks: Vec<Vec<i32>>,
}

impl SignedPartition {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn zero_block(&self) -> &[u32] {
        &self.zero_block
    }

    pub fn blocks(&self) -> &[Vec<i32>] {
        &self.blocks
    }

    /// Number of representative non-zero blocks.
    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Checks every structural invariant of the standard presentation.
    pub fn is_valid(&self) -> bool {
        let mut seen = vec![false; self.n + 1];
        let mut mark = |a: u32| {
            let a = a as usize;
            if a == 0 || a > self.n || seen[a] {
                return false;
            }
            seen[a] = true;
            true
        };
        if !self.zero_block.windows(2).all(|w| w[0] < w[1]) {
            return false;
        }
        if !self.zero_block.iter().all(|&a| mark(a)) {
            return false;
        }
        for b in &self.blocks {
            if b.is_empty() || b[0] <= 0 {
                return false;
            }
            if !b.windows(2).all(|w| w[0].unsigned_abs() < w[1].unsigned_abs()) {
                return false;
            }
            if !b.iter().all(|&e| mark(e.unsigned_abs())) {
                return false;
            }
        }
        if !self.blocks.windows(2).all(|w| w[0][0] < w[1][0]) {
            return false;
        }
        seen[1..].iter().all(|&s| s)
    }

    fn canonical(n: usize, mut zero_block: Vec<u32>, mut blocks: Vec<Vec<i32>>) -> Self {
        zero_block.sort_unstable();
        for b in &mut blocks {
            b.sort_unstable_by_key(|e| e.unsigned_abs());
            if b[0] < 0 {
                b.iter_mut().for_each(|e| *e = -*e);
            }
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        SignedPartition { n, zero_block, blocks }
    }
}

fn write_set(f: &mut fmt::Formatter<'_>, elems: impl IntoIterator<Item = i64>) -> fmt::Result {
    f.write_str("{")?;
    for (i, e) in elems.into_iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{e}")?;
    }
    f.write_str("}")
}

fn zero_elems(zero: &[u32]) -> impl Iterator<Item = i64> + '_ {
    zero.iter().flat_map(|&a| [a as i64, -(a as i64)])
}

/// Standard text form, e.g. `{1,-1,4,-4},{2,3,-5},{6}`; the empty partition
/// is `{}`.
impl fmt::Display for SignedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n == 0 {
            return f.write_str("{}");
        }
        let mut first = true;
        if !self.zero_block.is_empty() {
            write_set(f, zero_elems(&self.zero_block))?;
            first = false;
        }
        for b in &self.blocks {
            if !first {
                f.write_str(",")?;
            }
            write_set(f, b.iter().map(|&e| e as i64))?;
            first = false;
        }
        Ok(())
    }
}

pub fn format_standard(p: &SignedPartition) -> String {
    p.to_string()
}

impl FromStr for SignedPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_standard(s)
    }
}

struct RawBlock {
    column: usize,
    elems: Vec<(i64, usize)>,
}

fn perr(column: usize, message: impl Into<String>) -> Error {
    Error::Partition { column, message: message.into() }
}

fn lex_blocks(text: &str) -> Result<Vec<RawBlock>> {
    let chars: Vec<char> = text.chars().collect();
    let mut pos = 0;
    let skip_ws = |pos: &mut usize| {
        while *pos < chars.len() && chars[*pos].is_whitespace() {
            *pos += 1;
        }
    };
    let mut blocks = Vec::new();
    loop {
        skip_ws(&mut pos);
        if pos >= chars.len() || chars[pos] != '{' {
            return Err(perr(pos + 1, "expected `{`"));
        }
        let column = pos + 1;
        pos += 1;
        let mut elems = Vec::new();
        skip_ws(&mut pos);
        if pos < chars.len() && chars[pos] == '}' {
            pos += 1;
        } else {
            loop {
                skip_ws(&mut pos);
                let start = pos;
                if pos < chars.len() && chars[pos] == '-' {
                    pos += 1;
                }
                let digits = pos;
                while pos < chars.len() && chars[pos].is_ascii_digit() {
                    pos += 1;
                }
                if pos == digits {
                    return Err(perr(start + 1, "expected an integer"));
                }
                let lit: String = chars[start..pos].iter().collect();
                let value: i64 = lit.parse().map_err(|_| perr(start + 1, format!("integer `{lit}` out of range")))?;
                elems.push((value, start + 1));
                skip_ws(&mut pos);
                match chars.get(pos) {
                    Some(',') => pos += 1,
                    Some('}') => {
                        pos += 1;
                        break;
                    }
                    _ => return Err(perr(pos + 1, "expected `,` or `}`")),
                }
            }
        }
        blocks.push(RawBlock { column, elems });
        skip_ws(&mut pos);
        match chars.get(pos) {
            None => break,
            Some(',') => pos += 1,
            Some(_) => return Err(perr(pos + 1, "expected `,` between blocks")),
        }
    }
    Ok(blocks)
}

/// Parse the standard text form. The ground set is `[n]` with `n` the
/// largest absolute value present; `{}` alone is the empty partition.
pub fn parse_standard(text: &str) -> Result<SignedPartition> {
    let raw = lex_blocks(text)?;
    if raw.len() == 1 && raw[0].elems.is_empty() {
        return Ok(SignedPartition { n: 0, zero_block: Vec::new(), blocks: Vec::new() });
    }
    let mut owner: Vec<Option<usize>> = Vec::new();
    let mut zero_block: Option<Vec<u32>> = None;
    let mut blocks = Vec::new();
    for (bi, block) in raw.iter().enumerate() {
        if block.elems.is_empty() {
            return Err(perr(block.column, "empty block"));
        }
        let values: HashSet<i64> = block.elems.iter().map(|&(v, _)| v).collect();
        let has_pair = values.iter().any(|&v| values.contains(&-v));
        let mut in_block = HashSet::new();
        for &(v, col) in &block.elems {
            if v == 0 {
                return Err(perr(col, "0 is not an element of [±n]"));
            }
            if !in_block.insert(v) {
                return Err(perr(col, format!("element {v} repeated")));
            }
            let a = v.unsigned_abs() as usize;
            if a > u32::MAX as usize / 2 {
                return Err(perr(col, format!("element {v} too large")));
            }
            if owner.len() <= a {
                owner.resize(a + 1, None);
            }
            let closed_pair = has_pair && owner[a] == Some(bi) && values.contains(&-v);
            match owner[a] {
                Some(_) if closed_pair => {}
                Some(_) => return Err(perr(col, format!("absolute value {a} appears more than once"))),
                None => owner[a] = Some(bi),
            }
        }
        if has_pair {
            if let Some(&(v, col)) = block.elems.iter().find(|&&(v, _)| !values.contains(&-v)) {
                return Err(perr(col, format!("block contains a pair ±i but not -({v}); only the zero block may meet its negation")));
            }
            if zero_block.is_some() {
                return Err(perr(block.column, "more than one zero block"));
            }
            let mut abs: Vec<u32> = values.iter().filter(|&&v| v > 0).map(|&v| v as u32).collect();
            abs.sort_unstable();
            zero_block = Some(abs);
        } else {
            let &(min, col) = block.elems.iter().min_by_key(|(v, _)| v.unsigned_abs()).unwrap();
            if min < 0 {
                return Err(perr(col, format!("representative block must contain its minimal element as a positive number, found {min}")));
            }
            blocks.push(block.elems.iter().map(|&(v, _)| v as i32).collect::<Vec<_>>());
        }
    }
    let n = owner.len().saturating_sub(1);
    if let Some(missing) = (1..=n).find(|&a| owner[a].is_none()) {
        return Err(perr(text.chars().count() + 1, format!("element {missing} of [{n}] is missing")));
    }
    Ok(SignedPartition::canonical(n, zero_block.unwrap_or_default(), blocks))
}

/// Choice sequences of the insertion recursion, in odometer order.
struct InsertionOdometer {
    choices: Vec<usize>,
    options: fn(usize) -> usize,
    new_block: fn(usize) -> usize,
    started: bool,
    done: bool,
}

impl InsertionOdometer {
    /// `options(k)` choices exist when `k` blocks are open; choosing
    /// `new_block(k)` opens one more.
    fn new(n: usize, options: fn(usize) -> usize, new_block: fn(usize) -> usize) -> Self {
        InsertionOdometer { choices: vec![0; n], options, new_block, started: false, done: false }
    }

    fn advance(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.choices);
        }
        let mut open = Vec::with_capacity(self.choices.len());
        let mut k = 0;
        for &c in &self.choices {
            open.push(k);
            if c == (self.new_block)(k) {
                k += 1;
            }
        }
        for i in (0..self.choices.len()).rev() {
            if self.choices[i] + 1 < (self.options)(open[i]) {
                self.choices[i] += 1;
                self.choices[i + 1..].iter_mut().for_each(|c| *c = 0);
                return Some(&self.choices);
            }
        }
        self.done = true;
        None
    }
}

fn build_partition_b(choices: &[usize]) -> SignedPartition {
    let mut zero_block = Vec::new();
    let mut blocks: Vec<Vec<i32>> = Vec::new();
    for (i, &c) in choices.iter().enumerate() {
        let elem = i as i32 + 1;
        let k = blocks.len();
        if c == 0 {
            zero_block.push(elem as u32);
        } else if c <= 2 * k {
            let sign = if (c - 1) % 2 == 0 { 1 } else { -1 };
            blocks[(c - 1) / 2].push(sign * elem);
        } else {
            blocks.push(vec![elem]);
        }
    }
    SignedPartition { n: choices.len(), zero_block, blocks }
}

/// Every type-B partition of `[n]` exactly once.
pub fn gen_partitions_b(n: usize) -> Result<impl Iterator<Item = SignedPartition>> {
    budget("partitions of type B", n, MAX_PARTITIONS_B)?;
    let mut odo = InsertionOdometer::new(n, |k| 2 * k + 2, |k| 2 * k + 1);
    Ok(std::iter::from_fn(move || odo.advance().map(build_partition_b)))
}

/// Histogram `h[k]` of partitions with `k` representative blocks.
pub fn count_partitions_b_by_blocks(n: usize) -> Result<Vec<u64>> {
    let mut hist = vec![0u64; n + 1];
    for p in gen_partitions_b(n)? {
        hist[p.num_blocks()] += 1;
    }
    Ok(hist)
}

/// An ordered type-B partition `(S_0, S_1, S_2, ..., S_2k)` with
/// `S_2j = -S_(2j-1)`. Only `S_0` and the odd-indexed sets are stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderedSignedPartition {
    pub zero_block: Vec<u32>,
    pub leading: Vec<Vec<i32>>,
}

impl OrderedSignedPartition {
    pub fn num_blocks(&self) -> usize {
        self.leading.len()
    }
}

/// `({1,-1},{2,-3},{-2,3})`: all `2k + 1` sets in order, `S_0` always shown.
impl fmt::Display for OrderedSignedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        write_set(f, zero_elems(&self.zero_block))?;
        for s in &self.leading {
            f.write_str(",")?;
            write_set(f, s.iter().map(|&e| e as i64))?;
            f.write_str(",")?;
            write_set(f, s.iter().map(|&e| -(e as i64)))?;
        }
        f.write_str(")")
    }
}

/// Every ordering of the block pairs of every partition, with either member
/// of each pair placed first.
pub fn gen_ordered_partitions_b(n: usize) -> Result<impl Iterator<Item = OrderedSignedPartition>> {
    budget("ordered partitions of type B", n, MAX_ORDERED_PARTITIONS_B)?;
    let parts = gen_partitions_b(n)?;
    Ok(parts.flat_map(|p| {
        let k = p.num_blocks();
        let orders: Vec<Vec<usize>> = Permutations::new((0..k).collect()).collect();
        orders.into_iter().flat_map(move |order| {
            let p = p.clone();
            (0u32..1 << k).map(move |mask| {
                let leading = order
                    .iter()
                    .enumerate()
                    .map(|(slot, &b)| {
                        let sign = if mask >> slot & 1 == 1 { -1 } else { 1 };
                        p.blocks[b].iter().map(|&e| sign * e).collect()
                    })
                    .collect();
                OrderedSignedPartition { zero_block: p.zero_block.clone(), leading }
            })
        })
    }))
}

/// Histogram of distinct ordered partitions by number of block pairs.
pub fn count_ordered_partitions_b(n: usize) -> Result<Vec<u64>> {
    let mut seen = HashSet::new();
    let mut hist = vec![0u64; n + 1];
    for p in gen_ordered_partitions_b(n)? {
        let k = p.num_blocks();
        if !seen.insert(p) {
            return Err(Error::Inconsistent {
                what: "ordered partitions",
                detail: "generator emitted a duplicate".into(),
            });
        }
        hist[k] += 1;
    }
    Ok(hist)
}

/// Outcome of classifying type-B partitions of `[n+1]` by where `n+1` sits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InsertionReplay {
    /// `n + 1` lies in the zero block.
    pub in_zero_block: u64,
    /// `by_rest[k]`: `n + 1` shares a non-zero block with exactly `n - k`
    /// other elements.
    pub by_rest: Vec<u64>,
}

pub fn insertion_replay(n: usize) -> Result<InsertionReplay> {
    let top = n as u32 + 1;
    let mut replay = InsertionReplay { in_zero_block: 0, by_rest: vec![0; n + 1] };
    for p in gen_partitions_b(n + 1)? {
        if p.zero_block.contains(&top) {
            replay.in_zero_block += 1;
            continue;
        }
        let block = p
            .blocks
            .iter()
            .find(|b| b.iter().any(|e| e.unsigned_abs() == top))
            .expect("every element is placed");
        replay.by_rest[n + 1 - block.len()] += 1;
    }
    Ok(replay)
}

/// Set partitions of `[n]`, blocks in order of their minima.
pub fn gen_partitions_a(n: usize) -> Result<impl Iterator<Item = Vec<Vec<u32>>>> {
    budget("set partitions", n, MAX_PARTITIONS_A)?;
    let mut odo = InsertionOdometer::new(n, |k| k + 1, |k| k);
    Ok(std::iter::from_fn(move || {
        odo.advance().map(|choices| {
            let mut blocks: Vec<Vec<u32>> = Vec::new();
            for (i, &c) in choices.iter().enumerate() {
                if c == blocks.len() {
                    blocks.push(vec![i as u32 + 1]);
                } else {
                    blocks[c].push(i as u32 + 1);
                }
            }
            blocks
        })
    }))
}

pub fn count_partitions_a_by_blocks(n: usize) -> Result<Vec<u64>> {
    let mut hist = vec![0u64; n + 1];
    for p in gen_partitions_a(n)? {
        hist[p.len()] += 1;
    }
    Ok(hist)
}

/// Permutations of a vector in lexicographic order of positions.
struct Permutations<T> {
    items: Vec<T>,
    idx: Vec<usize>,
    first: bool,
}

impl<T: Clone> Permutations<T> {
    fn new(items: Vec<T>) -> Self {
        let idx = (0..items.len()).collect();
        Permutations { items, idx, first: true }
    }
}

impl<T: Clone> Iterator for Permutations<T> {
    type Item = Vec<T>;

    fn next(&mut self) -> Option<Vec<T>> {
        if self.first {
            self.first = false;
        } else {
            let n = self.idx.len();
            let i = (1..n).rev().find(|&i| self.idx[i - 1] < self.idx[i])?;
            let j = (i..n).rev().find(|&j| self.idx[j] > self.idx[i - 1]).unwrap();
            self.idx.swap(i - 1, j);
            self.idx[i..].reverse();
        }
        Some(self.idx.iter().map(|&i| self.items[i].clone()).collect())
    }
}

/// All permutations of `[n]` in one-line notation, lexicographic order.
pub fn gen_permutations(n: usize) -> Result<impl Iterator<Item = Vec<u32>>> {
    budget("permutations", n, MAX_PERMUTATIONS)?;
    Ok(Permutations::new((1..=n as u32).collect()))
}

/// Number of `i` in `1..n` with `perm(i) > perm(i+1)`.
pub fn descents_a(perm: &[u32]) -> usize {
    perm.windows(2).filter(|w| w[0] > w[1]).count()
}

/// Element of the hyperoctahedral group in window notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    window: Vec<i32>,
}

impl SignedPermutation {
    pub fn new(window: Vec<i32>) -> Result<Self> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &w in &window {
            let a = w.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(Error::Domain { what: "signed permutation window", n });
            }
            seen[a] = true;
        }
        Ok(SignedPermutation { window })
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    /// Descents at `i in 0..n` with `w(i) > w(i+1)` and the sentinel `w(0) = 0`.
    pub fn descents(&self) -> usize {
        descents_b(self)
    }
}

pub fn descents_b(w: &SignedPermutation) -> usize {
    std::iter::once(0)
        .chain(w.window.iter().copied())
        .collect::<Vec<_>>()
        .windows(2)
        .filter(|p| p[0] > p[1])
        .count()
}

/// All `2^n n!` signed permutations of `[n]`.
pub fn gen_signed_permutations(n: usize) -> Result<impl Iterator<Item = SignedPermutation>> {
    budget("signed permutations", n, MAX_SIGNED_PERMUTATIONS)?;
    Ok(Permutations::new((1..=n as i32).collect()).flat_map(move |perm| {
        (0u32..1 << n).map(move |mask| SignedPermutation {
            window: perm
                .iter()
                .enumerate()
                .map(|(i, &v)| if mask >> i & 1 == 1 { -v } else { v })
                .collect(),
        })
    }))
}

pub fn descent_histogram_b(n: usize) -> Result<Vec<u64>> {
    let mut hist = vec![0u64; n + 1];
    for w in gen_signed_permutations(n)? {
        hist[w.descents()] += 1;
    }
    Ok(hist)
}

/// `h[d]` counts permutations of `[n]` with `d` descents.
pub fn descent_histogram_a(n: usize) -> Result<Vec<u64>> {
    let mut hist = vec![0u64; n.max(1)];
    for p in gen_permutations(n)? {
        hist[descents_a(&p)] += 1;
    }
    Ok(hist)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn listing(n: usize) -> Vec<String> {
        gen_partitions_b(n).unwrap().map(|p| p.to_string()).collect()
    }

    #[test]
    fn small_type_b_listings() {
        assert_eq!(listing(0), vec!["{}"]);
        assert_eq!(listing(1), vec!["{1,-1}", "{1}"]);
        let mut two = listing(2);
        two.sort();
        let mut expected = vec!["{1,-1,2,-2}", "{1,-1},{2}", "{2,-2},{1}", "{1,2}", "{1,-2}", "{1},{2}"];
        expected.sort();
        assert_eq!(two, expected);
    }

    #[test]
    fn block_histograms() {
        assert_eq!(count_partitions_b_by_blocks(0).unwrap(), vec![1]);
        assert_eq!(count_partitions_b_by_blocks(2).unwrap(), vec![1, 4, 1]);
        assert_eq!(count_partitions_b_by_blocks(3).unwrap(), vec![1, 13, 9, 1]);
    }

    #[test]
    fn ordered_histograms() {
        assert_eq!(count_ordered_partitions_b(0).unwrap(), vec![1]);
        assert_eq!(count_ordered_partitions_b(1).unwrap(), vec![1, 2]);
        assert_eq!(count_ordered_partitions_b(2).unwrap(), vec![1, 8, 8]);
        assert!(matches!(count_ordered_partitions_b(7), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn documented_example_parses() {
        let p = parse_standard("{1,-1,4,-4},{2,3,-5},{6}").unwrap();
        assert_eq!(p.n(), 6);
        assert_eq!(p.zero_block(), &[1, 4]);
        assert_eq!(p.blocks(), &[vec![2, 3, -5], vec![6]]);
        assert_eq!(p.to_string(), "{1,-1,4,-4},{2,3,-5},{6}");
        let q = parse_standard(" { 6 } , {2, -5, 3}, {-4,4,-1,1}").unwrap();
        assert_eq!(q, p);
    }

    #[test]
    fn parse_empty() {
        let p = parse_standard("{}").unwrap();
        assert_eq!(p.n(), 0);
        assert_eq!(p.num_blocks(), 0);
    }

    #[test]
    fn parse_rejections() {
        let cases = [
            ("{-2,5},{1}", 2),
            ("{1},{1}", 6),
            ("{1,-1},{2,-2}", 8),
            ("{1,-1,2}", 7),
            ("{1},{3}", 8),
            ("{1,-1,1}", 7),
            ("{1,}", 4),
            ("{1}{2}", 4),
            ("{0}", 2),
            ("{1},{}", 5),
            ("", 1),
        ];
        for (text, col) in cases {
            match parse_standard(text) {
                Err(Error::Partition { column, .. }) => assert_eq!(column, col, "{text}"),
                other => panic!("{text}: expected rejection, got {other:?}"),
            }
        }
    }

    #[test]
    fn signed_permutations() {
        let w: Vec<_> = gen_signed_permutations(1).unwrap().map(|w| w.window().to_vec()).collect();
        assert_eq!(w, vec![vec![1], vec![-1]]);
        assert_eq!(gen_signed_permutations(2).unwrap().count(), 8);
        assert_eq!(gen_signed_permutations(0).unwrap().count(), 1);
        assert!(gen_signed_permutations(8).is_err());
        assert_eq!(SignedPermutation::new(vec![1, 2, 3]).unwrap().descents(), 0);
        assert_eq!(SignedPermutation::new(vec![-1]).unwrap().descents(), 1);
        assert!(SignedPermutation::new(vec![1, -1]).is_err());
        assert_eq!(descent_histogram_b(2).unwrap(), vec![1, 6, 1]);
    }

    #[test]
    fn type_a_mirrors() {
        assert_eq!(descents_a(&[1, 2, 3]), 0);
        assert_eq!(descent_histogram_a(3).unwrap(), vec![1, 4, 1]);
        assert_eq!(gen_partitions_a(3).unwrap().count(), 5);
        assert_eq!(count_partitions_a_by_blocks(4).unwrap(), vec![0, 1, 7, 6, 1]);
        assert_eq!(gen_permutations(0).unwrap().count(), 1);
    }

    #[test]
    fn replay_small() {
        let r = insertion_replay(1).unwrap();
        // partitions of [2]: n+1 = 2 in zero block twice ({±1,±2}, {1}{±2})
        assert_eq!(r.in_zero_block, 2);
        assert_eq!(r.by_rest, vec![2, 2]);
    }
}
