//! Reference implementations that share no code with the crate's tensor rule.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, VecDeque};

/// A factor `(2j, 2m)`.
pub type Letter = (i32, i32);

/// All words of the product of spins `twice_js`, first factor slowest.
pub fn all_words(twice_js: &[i32]) -> Vec<Vec<Letter>> {
    let mut out = vec![Vec::new()];
    for &j in twice_js {
        let mut next = Vec::new();
        for w in &out {
            for m in (-j..=j).rev().step_by(2) {
                let mut w2 = w.clone();
                w2.push((j, m));
                next.push(w2);
            }
        }
        out = next;
    }
    out
}

/// Signature rule: factor `i` contributes `−^{(j−m)} +^{(j+m)}`; every `+`
/// cancels the nearest uncancelled `−` to its right. Returns the factor
/// indices of the surviving `−` and `+` signs in reading order.
fn reduced(word: &[Letter]) -> (Vec<usize>, Vec<usize>) {
    let mut signs: Vec<(usize, bool)> = Vec::new();
    for (i, &(j, m)) in word.iter().enumerate() {
        for _ in 0..(j - m) / 2 {
            signs.push((i, false));
        }
        for _ in 0..(j + m) / 2 {
            signs.push((i, true));
        }
    }
    let mut stack: Vec<(usize, bool)> = Vec::new();
    for s in signs {
        if !s.1 && stack.last().is_some_and(|t| t.1) {
            stack.pop();
        } else {
            stack.push(s);
        }
    }
    let minus = stack.iter().filter(|s| !s.1).map(|s| s.0).collect();
    let plus = stack.iter().filter(|s| s.1).map(|s| s.0).collect();
    (minus, plus)
}

pub fn sig_raise(word: &[Letter]) -> Option<Vec<Letter>> {
    let (minus, _) = reduced(word);
    let &i = minus.last()?;
    let mut w = word.to_vec();
    w[i].1 += 2;
    Some(w)
}

pub fn sig_lower(word: &[Letter]) -> Option<Vec<Letter>> {
    let (_, plus) = reduced(word);
    let &i = plus.first()?;
    let mut w = word.to_vec();
    w[i].1 -= 2;
    Some(w)
}

pub fn weight(word: &[Letter]) -> i32 {
    word.iter().map(|l| l.1).sum()
}

/// Connected components of the product crystal, found by breadth-first
/// search over both edge directions. Each vertex maps to `2J` of its
/// component, where `J` is the largest weight in it.
pub fn graph_spins(twice_js: &[i32]) -> BTreeMap<Vec<Letter>, i32> {
    let words = all_words(twice_js);
    let mut seen: BTreeSet<Vec<Letter>> = BTreeSet::new();
    let mut out = BTreeMap::new();
    for start in words {
        if seen.contains(&start) {
            continue;
        }
        let mut members = Vec::new();
        let mut queue = VecDeque::from([start.clone()]);
        seen.insert(start);
        while let Some(w) = queue.pop_front() {
            for n in [sig_raise(&w), sig_lower(&w)].into_iter().flatten() {
                if seen.insert(n.clone()) {
                    queue.push_back(n);
                }
            }
            members.push(w);
        }
        let top = members.iter().map(|w| weight(w)).max().unwrap();
        for w in members {
            out.insert(w, top);
        }
    }
    out
}

/// The 64 codon labels computed by the signature rule, as
/// `(2J_H, 2J_V, 2m_H, 2m_V)` keyed by codon string.
pub fn codon_labels(codon: &str) -> (i32, i32, i32, i32) {
    let letters: Vec<(i32, i32)> = codon
        .chars()
        .map(|c| match c {
            'C' => (1, 1),
            'U' => (-1, 1),
            'G' => (1, -1),
            'A' => (-1, -1),
            _ => panic!("bad letter {c}"),
        })
        .collect();
    let h: Vec<Letter> = letters.iter().map(|l| (1, l.0)).collect();
    let v: Vec<Letter> = letters.iter().map(|l| (1, l.1)).collect();
    let top = |mut w: Vec<Letter>| {
        while let Some(n) = sig_raise(&w) {
            w = n;
        }
        weight(&w)
    };
    (top(h.clone()), top(v.clone()), weight(&h), weight(&v))
}
