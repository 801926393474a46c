use crate::error::{Error, Result};

/// A finite group given by its full multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    identity: usize,
    table: Vec<usize>,
}

/// Shipped group tables: `(name, file contents)`.
pub const SHIPPED_TABLES: &[(&str, &str)] = &[
    ("z9", include_str!("../../data/groups/z9.txt")),
    ("z3xz3", include_str!("../../data/groups/z3xz3.txt")),
    ("z15", include_str!("../../data/groups/z15.txt")),
    ("z21", include_str!("../../data/groups/z21.txt")),
    ("z7sz3", include_str!("../../data/groups/z7sz3.txt")),
    ("z25", include_str!("../../data/groups/z25.txt")),
    ("z5xz5", include_str!("../../data/groups/z5xz5.txt")),
    ("z27", include_str!("../../data/groups/z27.txt")),
];

impl GroupTable {
    /// Builds a table and verifies closure, identity, inverses and associativity.
    pub fn new(order: usize, identity: usize, table: Vec<usize>) -> Result<GroupTable> {
        let bad = |msg: String| Err(Error::GroupTable(msg));
        if order == 0 {
            return bad("order must be positive".into());
        }
        if identity >= order {
            return bad(format!("identity {identity} out of range"));
        }
        if table.len() != order * order {
            return bad(format!("expected {} entries, found {}", order * order, table.len()));
        }
        if let Some(&x) = table.iter().find(|&&x| x >= order) {
            return bad(format!("entry {x} out of range"));
        }
        let t = GroupTable { order, identity, table };
        for a in 0..order {
            if t.mul(identity, a) != a || t.mul(a, identity) != a {
                return bad(format!("{identity} is not a two-sided identity for {a}"));
            }
            let has_inverse = (0..order).any(|b| t.mul(a, b) == identity && t.mul(b, a) == identity);
            if !has_inverse {
                return bad(format!("element {a} has no inverse"));
            }
        }
        for a in 0..order {
            for b in 0..order {
                let ab = t.mul(a, b);
                for c in 0..order {
                    if t.mul(ab, c) != t.mul(a, t.mul(b, c)) {
                        return bad(format!("associativity fails at ({a},{b},{c})"));
                    }
                }
            }
        }
        Ok(t)
    }

    /// Parses the text format: `order m identity e`, then `m` rows of `m`
    /// indices (row `g`, column `h` holds `g·h`), then `S: ` and element indices.
    pub fn parse(text: &str) -> Result<(GroupTable, Vec<usize>)> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::GroupTable("empty table".into()))?;
        let words: Vec<&str> = header.split_whitespace().collect();
        let (order, identity) = match words.as_slice() {
            ["order", m, "identity", e] => (parse_index(m)?, parse_index(e)?),
            _ => return Err(Error::GroupTable(format!("bad header line: {header:?}"))),
        };
        let mut table = Vec::with_capacity(order * order);
        for row in 0..order {
            let line = lines.next().ok_or_else(|| Error::GroupTable(format!("missing row {row}")))?;
            let entries = line.split_whitespace().map(parse_index).collect::<Result<Vec<_>>>()?;
            if entries.len() != order {
                return Err(Error::GroupTable(format!("row {row} has {} entries", entries.len())));
            }
            table.extend(entries);
        }
        let s_line = lines.next().ok_or_else(|| Error::GroupTable("missing S line".into()))?;
        let s_text = s_line
            .strip_prefix("S:")
            .ok_or_else(|| Error::GroupTable(format!("expected `S:` line, found {s_line:?}")))?;
        let connection = s_text.split_whitespace().map(parse_index).collect::<Result<Vec<_>>>()?;
        if let Some(extra) = lines.next() {
            return Err(Error::GroupTable(format!("trailing content: {extra:?}")));
        }
        Ok((GroupTable::new(order, identity, table)?, connection))
    }

    pub fn shipped(name: &str) -> Result<(GroupTable, Vec<usize>)> {
        let (_, text) = SHIPPED_TABLES
            .iter()
            .find(|(n, _)| *n == name)
            .ok_or_else(|| Error::GroupTable(format!("no shipped table named {name:?}")))?;
        Self::parse(text)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order).find(|&b| self.mul(a, b) == self.identity).expect("validated table")
    }

    /// Whether every element is a product of elements of `s`.
    pub fn generates(&self, s: &[usize]) -> bool {
        let mut reached = vec![false; self.order];
        reached[self.identity] = true;
        let mut stack = vec![self.identity];
        while let Some(g) = stack.pop() {
            for &x in s {
                let h = self.mul(g, x);
                if !reached[h] {
                    reached[h] = true;
                    stack.push(h);
                }
            }
        }
        reached.into_iter().all(|r| r)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}

fn parse_index(s: &str) -> Result<usize> {
    s.parse().map_err(|_| Error::GroupTable(format!("not an index: {s:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_tables_validate() {
        for (name, _) in SHIPPED_TABLES {
            let (t, s) = GroupTable::shipped(name).unwrap();
            assert!(t.generates(&s), "{name}");
        }
        assert!(!GroupTable::shipped("z7sz3").unwrap().0.is_abelian());
        assert!(GroupTable::shipped("z3xz3").unwrap().0.is_abelian());
    }

    #[test]
    fn rejects_broken_tables() {
        // not associative: a Latin square that is not a group
        let bad = "order 3 identity 0\n0 1 2\n1 0 2\n2 2 0\nS: 1\n";
        assert!(GroupTable::parse(bad).is_err());
        assert!(GroupTable::parse("order 2 identity 0\n0 1\nS: 1\n").is_err());
        assert!(GroupTable::parse("order 2 identity 5\n0 1\n1 0\nS: 1\n").is_err());
        assert!(GroupTable::parse("order 2 identity 0\n0 1\n1 0\n").is_err());
        assert!(GroupTable::parse("order 2 identity 0\n0 1\n1 0\nS: 1\nextra\n").is_err());
    }
}
