//! Grid-graph connectivity of digital sets under 4- and 8-adjacency.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{DigitalSet, LatticePoint};

/// Strongest connectivity class a set satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConnectivityClass {
    Connected4,
    /// 4-connected once `witness` is removed; `witness` is 8-adjacent to the rest.
    Almost4 { witness: LatticePoint },
    Connected8Only,
    Disconnected,
}

/// Class tag without the witness. Ordered from weakest to strongest.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConnectivityTag {
    Disconnected,
    Connected8,
    Almost4,
    Connected4,
}

impl ConnectivityTag {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Connected4 => "connected4",
            Self::Almost4 => "almost4",
            Self::Connected8 => "connected8",
            Self::Disconnected => "disconnected",
        }
    }
}

impl fmt::Display for ConnectivityTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Connected4 => "4-connected",
            Self::Almost4 => "almost 4-connected",
            Self::Connected8 => "8-connected only",
            Self::Disconnected => "disconnected",
        })
    }
}

impl ConnectivityClass {
    pub fn tag(&self) -> ConnectivityTag {
        match self {
            Self::Connected4 => ConnectivityTag::Connected4,
            Self::Almost4 { .. } => ConnectivityTag::Almost4,
            Self::Connected8Only => ConnectivityTag::Connected8,
            Self::Disconnected => ConnectivityTag::Disconnected,
        }
    }

    pub fn witness(&self) -> Option<LatticePoint> {
        match self {
            Self::Almost4 { witness } => Some(*witness),
            _ => None,
        }
    }

    /// Connected4 or Almost4.
    pub fn is_almost_4(&self) -> bool {
        self.tag() >= ConnectivityTag::Almost4
    }
}

struct UnionFind {
    parent: Vec<u32>,
    size: Vec<u32>,
    components: usize,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self { parent: (0..n as u32).collect(), size: vec![1; n], components: n }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let next = self.parent[x as usize];
            self.parent[x as usize] = self.parent[next as usize];
            x = next;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        if self.size[ra as usize] < self.size[rb as usize] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb as usize] = ra;
        self.size[ra as usize] += self.size[rb as usize];
        self.components -= 1;
    }
}

const FORWARD_4: [(i64, i64); 2] = [(0, 1), (1, 0)];
const FORWARD_8: [(i64, i64); 4] = [(0, 1), (1, -1), (1, 0), (1, 1)];

/// Union-find over the sorted points; each point links to its forward
/// neighbors, found by binary search.
fn components(s: &DigitalSet, forward: &[(i64, i64)]) -> UnionFind {
    let pts = s.points();
    let mut uf = UnionFind::new(pts.len());
    for (i, p) in pts.iter().enumerate() {
        for &(dx, dy) in forward {
            let q = LatticePoint::new(p.x + dx, p.y + dy);
            // (x, y+1) is the next element whenever it is present.
            let j = if dx == 0 { (pts.get(i + 1) == Some(&q)).then_some(i + 1) } else { s.index_of(q) };
            if let Some(j) = j {
                uf.union(i as u32, j as u32);
            }
        }
    }
    uf
}

pub fn is_4_connected(s: &DigitalSet) -> Result<bool> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(components(s, &FORWARD_4).components == 1)
}

pub fn is_8_connected(s: &DigitalSet) -> Result<bool> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(components(s, &FORWARD_8).components == 1)
}

/// Classifies `s` by its strongest connectivity.
///
/// Removing a point never merges 4-components, so an almost 4-connected set
/// that is not 4-connected has exactly two components, one of them a single
/// point. The witness is the lexicographically smallest such point that is
/// 8-adjacent to the other component.
pub fn classify(s: &DigitalSet) -> Result<ConnectivityClass> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut uf = components(s, &FORWARD_4);
    match uf.components {
        1 => return Ok(ConnectivityClass::Connected4),
        2 => {
            let pts = s.points();
            // Points are visited in lexicographic order, so the first hit is minimal.
            for (i, &p) in pts.iter().enumerate() {
                let root = uf.find(i as u32);
                if uf.size[root as usize] != 1 {
                    continue;
                }
                let touches_rest = (-1..=1)
                    .flat_map(|dx| (-1..=1).map(move |dy| (dx, dy)))
                    .any(|(dx, dy)| (dx, dy) != (0, 0) && s.contains(p.offset(dx, dy)));
                if touches_rest {
                    return Ok(ConnectivityClass::Almost4 { witness: p });
                }
            }
        }
        _ => {}
    }
    Ok(if is_8_connected(s)? { ConnectivityClass::Connected8Only } else { ConnectivityClass::Disconnected })
}
