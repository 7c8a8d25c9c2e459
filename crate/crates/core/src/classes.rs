//! Conjugacy classes of an enumerable permutation group.

use std::collections::HashMap;
use std::sync::Arc;

use num::Integer;

use crate::error::Result;
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::Limits;

/// Conjugacy classes with power maps.
///
/// Classes are ordered with the identity first, then by
/// `(size, smallest moved point of rep, rep)`. The representative of a class
/// is its lexicographically least element.
#[derive(Debug)]
pub struct ClassData {
    group: PermGroup,
    elements: Arc<Vec<Permutation>>,
    position: HashMap<Permutation, u32>,
    class_of_position: Vec<u32>,
    reps: Vec<Permutation>,
    sizes: Vec<u64>,
    orders: Vec<u64>,
    /// `powers[c][j]` is the class of `rep_c^j` for `j < orders[c]`.
    powers: Vec<Vec<u32>>,
    exponent: u64,
}

impl ClassData {
    pub fn new(group: &PermGroup, limits: &Limits) -> Result<Arc<Self>> {
        let elements = group.elements(limits)?;
        let position: HashMap<Permutation, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, x)| (x.clone(), i as u32))
            .collect();
        let gens: Vec<(Permutation, Permutation)> =
            group.generators().iter().map(|s| (s.clone(), s.inverse())).collect();

        let unassigned = u32::MAX;
        let mut raw_class = vec![unassigned; elements.len()];
        let mut members: Vec<Vec<u32>> = Vec::new();
        for start in 0..elements.len() {
            if raw_class[start] != unassigned {
                continue;
            }
            let id = members.len() as u32;
            raw_class[start] = id;
            let mut orbit = vec![start as u32];
            let mut i = 0;
            while i < orbit.len() {
                let x = &elements[orbit[i] as usize];
                for (s, _) in &gens {
                    let y = s.conj_unchecked(x);
                    let py = position[&y];
                    if raw_class[py as usize] == unassigned {
                        raw_class[py as usize] = id;
                        orbit.push(py);
                    }
                }
                i += 1;
            }
            members.push(orbit);
        }

        let mut classes: Vec<(Permutation, Vec<u32>)> = members
            .into_iter()
            .map(|m| {
                let rep = m.iter().map(|&i| &elements[i as usize]).min().unwrap().clone();
                (rep, m)
            })
            .collect();
        classes.sort_by(|(ra, ma), (rb, mb)| {
            let key = |r: &Permutation, m: &Vec<u32>| {
                (
                    !r.is_identity(),
                    m.len(),
                    r.smallest_moved_point().unwrap_or(0),
                    r.clone(),
                )
            };
            key(ra, ma).cmp(&key(rb, mb))
        });

        let mut class_of_position = vec![0u32; elements.len()];
        for (c, (_, m)) in classes.iter().enumerate() {
            for &i in m {
                class_of_position[i as usize] = c as u32;
            }
        }
        let sizes: Vec<u64> = classes.iter().map(|(_, m)| m.len() as u64).collect();
        let reps: Vec<Permutation> = classes.into_iter().map(|(r, _)| r).collect();
        let orders: Vec<u64> = reps.iter().map(Permutation::order).collect();
        let powers = reps
            .iter()
            .zip(&orders)
            .map(|(r, &o)| {
                let mut x = Permutation::identity(group.degree());
                (0..o)
                    .map(|_| {
                        let c = class_of_position[position[&x] as usize];
                        x = x.mul_unchecked(r);
                        c
                    })
                    .collect()
            })
            .collect();
        let exponent = orders.iter().fold(1u64, |a, b| a.lcm(b));
        Ok(Arc::new(ClassData {
            group: group.clone(),
            elements,
            position,
            class_of_position,
            reps,
            sizes,
            orders,
            powers,
            exponent,
        }))
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn group_order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn reps(&self) -> &[Permutation] {
        &self.reps
    }

    pub fn sizes(&self) -> &[u64] {
        &self.sizes
    }

    /// Element orders of the representatives.
    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    /// Class index of an element, or `None` if it is not in the group.
    pub fn class_of(&self, x: &Permutation) -> Option<usize> {
        self.position
            .get(x)
            .map(|&i| self.class_of_position[i as usize] as usize)
    }

    /// Class index of the `i`-th element of [`ClassData::elements`].
    pub fn class_of_index(&self, i: usize) -> usize {
        self.class_of_position[i] as usize
    }

    /// Class of `rep_c^k`; negative `k` allowed.
    pub fn power_map(&self, c: usize, k: i64) -> usize {
        let o = self.orders[c] as i64;
        self.powers[c][k.rem_euclid(o) as usize] as usize
    }

    pub fn inverse_class(&self, c: usize) -> usize {
        self.power_map(c, -1)
    }

    /// True when every element is conjugate to its inverse.
    pub fn is_ambivalent(&self) -> bool {
        (0..self.len()).all(|c| self.inverse_class(c) == c)
    }
}
