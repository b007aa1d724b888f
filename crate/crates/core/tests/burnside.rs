//! Closed forms against Burnside's lemma evaluated over explicit group
//! elements, with fixed points counted from cycle structure.

use nagumo_atlas::counting::{self, class_count, Count};
use nagumo_atlas::numtheory;
use nagumo_atlas::words::{Alphabet, GroupKind};

/// Position maps of the rotations and reflections of an `n`-cycle.
fn position_maps(n: usize, reflections: bool) -> Vec<Vec<usize>> {
    let mut maps: Vec<Vec<usize>> = (0..n)
        .map(|k| (0..n).map(|i| (i + k) % n).collect())
        .collect();
    if reflections {
        maps.extend((0..n).map(|k| (0..n).map(|i| (n + k - i) % n).collect()));
    }
    maps
}

fn cycle_lengths(map: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; map.len()];
    let mut lengths = Vec::new();
    for start in 0..map.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = map[i];
            len += 1;
        }
        lengths.push(len);
    }
    lengths
}

/// Letters fixed by the `len`-th power of the letter map: all of them
/// without π, and under π the swap fixes only `a` on odd cycles.
fn letters_fixed(alphabet: Alphabet, swap: bool, len: usize) -> Count {
    let k = Count::from(alphabet.size());
    if !swap || len.is_multiple_of(2) {
        k
    } else {
        k - 2
    }
}

fn burnside(alphabet: Alphabet, group: GroupKind, n: usize) -> Count {
    let dihedral = matches!(group, GroupKind::Dihedral | GroupKind::DihedralPi);
    let swaps: &[bool] = if matches!(group, GroupKind::CyclicPi | GroupKind::DihedralPi) {
        &[false, true]
    } else {
        &[false]
    };
    let maps = position_maps(n, dihedral);
    let mut fixed: Count = 0;
    for &swap in swaps {
        for map in &maps {
            fixed += cycle_lengths(map)
                .into_iter()
                .map(|len| letters_fixed(alphabet, swap, len))
                .product::<Count>();
        }
    }
    let order = (maps.len() * swaps.len()) as Count;
    assert_eq!(fixed % order, 0, "Burnside sum not divisible by |G|");
    fixed / order
}

/// Aperiodic classes by Möbius inversion over the primitive period.
fn burnside_lyndon(alphabet: Alphabet, group: GroupKind, n: usize) -> Count {
    numtheory::divisors(n as u64)
        .unwrap()
        .into_iter()
        .map(|m| {
            Count::from(numtheory::mobius(n as u64 / m).unwrap())
                * burnside(alphabet, group, m as usize)
        })
        .sum()
}

#[test]
fn closed_forms_match_burnside() {
    for alphabet in [Alphabet::A2, Alphabet::A3] {
        for group in GroupKind::ALL {
            for n in 1..=20 {
                assert_eq!(
                    class_count(alphabet, group, false, n as u64).unwrap(),
                    burnside(alphabet, group, n),
                    "{alphabet} {group} n={n}"
                );
                assert_eq!(
                    class_count(alphabet, group, true, n as u64).unwrap(),
                    burnside_lyndon(alphabet, group, n),
                    "{alphabet} {group} lyndon n={n}"
                );
            }
        }
    }
}

#[test]
fn plain_necklaces_for_larger_alphabets() {
    for k in 2..=5u32 {
        for n in 1..=12u64 {
            let expected: Count = numtheory::divisors(n)
                .unwrap()
                .into_iter()
                .map(|d| {
                    Count::from(numtheory::euler_phi(d).unwrap() as i64)
                        * Count::from(k).pow((n / d) as u32)
                })
                .sum::<Count>()
                / Count::from(n as i64);
            assert_eq!(counting::necklaces(k, n).unwrap(), expected);
        }
    }
}
