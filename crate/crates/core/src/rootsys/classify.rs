use super::{sort_components, Component, Family};
use crate::error::{Error, Result};

/// Cartan matrix of a simple type with `A[i][j] = <α_i^∨, α_j>`.
///
/// Node numbering follows Bourbaki: for `B_l` the last node is short, for
/// `C_l` the last node is long, for `D_l` nodes `l-1` and `l` hang off `l-2`,
/// and for `G2` node 1 is short.
pub fn standard_cartan(c: Component) -> Vec<Vec<i64>> {
    let l = c.rank;
    let mut a = vec![vec![0i64; l]; l];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let link = |a: &mut Vec<Vec<i64>>, i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match c.family {
        Family::A => (1..l).for_each(|i| link(&mut a, i - 1, i)),
        Family::B | Family::C => {
            (1..l).for_each(|i| link(&mut a, i - 1, i));
            if l >= 2 {
                // <α_l^∨, α_{l-1}> = -2 when α_l is short
                if c.family == Family::B {
                    a[l - 1][l - 2] = -2;
                } else {
                    a[l - 2][l - 1] = -2;
                }
            }
        }
        Family::D => {
            (1..l - 1).for_each(|i| link(&mut a, i - 1, i));
            if l >= 3 {
                link(&mut a, l - 3, l - 1);
            }
        }
        Family::G => {
            a[0][1] = -3;
            a[1][0] = -1;
        }
        Family::F => {
            link(&mut a, 0, 1);
            link(&mut a, 2, 3);
            a[1][2] = -2;
            a[2][1] = -1;
        }
        Family::E => {
            // 1-3-4-5-6(-7-8), with 2 attached to 4
            link(&mut a, 0, 2);
            link(&mut a, 1, 3);
            for i in 3..l {
                link(&mut a, i - 1, i);
            }
        }
    }
    a
}

/// Identifies the type of a Cartan matrix (possibly decomposable).
///
/// Rank-2 components with a double bond are isomorphic as `B2` and `C2`; the
/// label is `C2` when `prefer_c` is set and `B2` otherwise. Every recognised
/// component is re-checked by an explicit isomorphism with the standard matrix.
pub fn classify_cartan(a: &[Vec<i64>], prefer_c: bool) -> Result<Vec<Component>> {
    let n = a.len();
    let mut seen = vec![false; n];
    let mut comps = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut nodes = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < nodes.len() {
            let i = nodes[k];
            for j in 0..n {
                if !seen[j] && a[i][j] != 0 {
                    seen[j] = true;
                    nodes.push(j);
                }
            }
            k += 1;
        }
        nodes.sort_unstable();
        let sub: Vec<Vec<i64>> = nodes
            .iter()
            .map(|&i| nodes.iter().map(|&j| a[i][j]).collect())
            .collect();
        let comp = classify_simple(&sub, prefer_c)?;
        if !isomorphic(&sub, &standard_cartan(comp)) {
            return Err(Error::consistency(format!(
                "Cartan matrix {sub:?} recognised as {comp} but is not isomorphic to it"
            )));
        }
        comps.push(comp);
    }
    sort_components(&mut comps);
    Ok(comps)
}

fn classify_simple(a: &[Vec<i64>], prefer_c: bool) -> Result<Component> {
    let l = a.len();
    let unrecognised = || Error::consistency(format!("unrecognised Cartan matrix {a:?}"));
    if l == 1 {
        return Ok(Component { family: Family::A, rank: 1 });
    }
    let neighbours: Vec<Vec<usize>> = (0..l)
        .map(|i| (0..l).filter(|&j| j != i && a[i][j] != 0).collect())
        .collect();
    let edges: usize = neighbours.iter().map(Vec::len).sum::<usize>() / 2;
    if edges != l - 1 {
        return Err(unrecognised());
    }
    let mut multi = None;
    for i in 0..l {
        for &j in &neighbours[i] {
            let m = a[i][j] * a[j][i];
            if m > 1 && i < j {
                if multi.is_some() {
                    return Err(unrecognised());
                }
                multi = Some((i, j, m));
            }
        }
    }
    let max_deg = neighbours.iter().map(Vec::len).max().unwrap_or(0);
    match multi {
        Some((_, _, 3)) if l == 2 => Ok(Component { family: Family::G, rank: 2 }),
        Some((_, _, 2)) if l == 2 => Ok(Component {
            family: if prefer_c { Family::C } else { Family::B },
            rank: 2,
        }),
        Some((i, j, 2)) if max_deg <= 2 => {
            let (end, other) = if neighbours[i].len() == 1 {
                (i, j)
            } else if neighbours[j].len() == 1 {
                (j, i)
            } else if l == 4 {
                return Ok(Component { family: Family::F, rank: 4 });
            } else {
                return Err(unrecognised());
            };
            // <α_end^∨, α_other> = -2 means α_end is the short one
            let family = if a[end][other] == -2 { Family::B } else { Family::C };
            Ok(Component { family, rank: l })
        }
        Some(_) => Err(unrecognised()),
        None if max_deg <= 2 => Ok(Component { family: Family::A, rank: l }),
        None if max_deg == 3 => {
            let branch = (0..l).find(|&i| neighbours[i].len() == 3).unwrap();
            let mut arms: Vec<usize> = neighbours[branch]
                .iter()
                .map(|&start| {
                    let (mut prev, mut cur, mut len) = (branch, start, 1);
                    loop {
                        let next: Vec<usize> =
                            neighbours[cur].iter().copied().filter(|&x| x != prev).collect();
                        match next.as_slice() {
                            [] => break len,
                            [nx] => {
                                prev = cur;
                                cur = *nx;
                                len += 1;
                            }
                            _ => break usize::MAX,
                        }
                    }
                })
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => Ok(Component { family: Family::D, rank: l }),
                [1, 2, 2] | [1, 2, 3] | [1, 2, 4] => Ok(Component { family: Family::E, rank: l }),
                _ => Err(unrecognised()),
            }
        }
        None => Err(unrecognised()),
    }
}

/// Whether two Cartan matrices agree up to a simultaneous permutation.
pub(crate) fn isomorphic(a: &[Vec<i64>], b: &[Vec<i64>]) -> bool {
    let n = a.len();
    if b.len() != n {
        return false;
    }
    fn extend(a: &[Vec<i64>], b: &[Vec<i64>], map: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let k = map.len();
        if k == a.len() {
            return true;
        }
        for cand in 0..a.len() {
            if used[cand] {
                continue;
            }
            let ok = (0..k).all(|p| a[k][p] == b[cand][map[p]] && a[p][k] == b[map[p]][cand])
                && a[k][k] == b[cand][cand];
            if ok {
                used[cand] = true;
                map.push(cand);
                if extend(a, b, map, used) {
                    return true;
                }
                map.pop();
                used[cand] = false;
            }
        }
        false
    }
    extend(a, b, &mut Vec::with_capacity(n), &mut vec![false; n])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(family: Family, rank: usize) -> Component {
        Component { family, rank }
    }

    #[test]
    fn standard_types_classify_to_themselves() {
        for comp in [
            c(Family::A, 1),
            c(Family::A, 4),
            c(Family::B, 3),
            c(Family::C, 3),
            c(Family::C, 4),
            c(Family::D, 4),
            c(Family::D, 5),
            c(Family::G, 2),
            c(Family::F, 4),
            c(Family::E, 6),
        ] {
            let a = standard_cartan(comp);
            assert_eq!(classify_cartan(&a, comp.family == Family::C).unwrap(), vec![comp]);
        }
    }

    #[test]
    fn rank_two_double_bond_follows_preference() {
        let b2 = standard_cartan(c(Family::B, 2));
        assert_eq!(classify_cartan(&b2, false).unwrap(), vec![c(Family::B, 2)]);
        assert_eq!(classify_cartan(&b2, true).unwrap(), vec![c(Family::C, 2)]);
    }

    #[test]
    fn permuted_and_decomposable() {
        // A2 x A1 with the A1 node in the middle
        let a = vec![vec![2, 0, -1], vec![0, 2, 0], vec![-1, 0, 2]];
        assert_eq!(
            classify_cartan(&a, false).unwrap(),
            vec![c(Family::A, 2), c(Family::A, 1)]
        );
        // B3 with reversed node order
        let b3 = vec![vec![2, -2, 0], vec![-1, 2, -1], vec![0, -1, 2]];
        assert_eq!(classify_cartan(&b3, false).unwrap(), vec![c(Family::B, 3)]);
    }

    #[test]
    fn cycles_are_rejected() {
        let a = vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]];
        assert!(classify_cartan(&a, false).is_err());
    }
}
