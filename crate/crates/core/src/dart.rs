use std::fmt;

/// An edge traversed in one direction: `+e` runs `u → v`, `−e` runs `v → u`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dart(usize);

impl Dart {
    pub fn new(edge: usize, forward: bool) -> Dart {
        Dart(2 * edge + usize::from(!forward))
    }

    pub fn forward(edge: usize) -> Dart {
        Dart::new(edge, true)
    }

    pub fn backward(edge: usize) -> Dart {
        Dart::new(edge, false)
    }

    pub fn from_index(i: usize) -> Dart {
        Dart(i)
    }

    /// Dense index `2·edge + direction`; darts sort by this index.
    pub fn index(self) -> usize {
        self.0
    }

    pub fn edge(self) -> usize {
        self.0 / 2
    }

    pub fn is_forward(self) -> bool {
        self.0.is_multiple_of(2)
    }

    pub fn reverse(self) -> Dart {
        Dart(self.0 ^ 1)
    }

    pub fn tail(self, edges: &[(usize, usize)]) -> usize {
        let (u, v) = edges[self.edge()];
        if self.is_forward() {
            u
        } else {
            v
        }
    }

    pub fn head(self, edges: &[(usize, usize)]) -> usize {
        self.reverse().tail(edges)
    }
}

impl fmt::Debug for Dart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `+3` / `-3`, as written in SCF files.
impl fmt::Display for Dart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", if self.is_forward() { '+' } else { '-' }, self.edge())
    }
}

impl std::str::FromStr for Dart {
    type Err = String;

    fn from_str(s: &str) -> Result<Dart, String> {
        let (forward, rest) = match s.as_bytes().first() {
            Some(b'+') => (true, &s[1..]),
            Some(b'-') => (false, &s[1..]),
            _ => return Err(format!("dart {s:?} must start with + or -")),
        };
        let edge = rest.parse::<usize>().map_err(|_| format!("bad dart {s:?}"))?;
        Ok(Dart::new(edge, forward))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reverse_is_involution() {
        for i in 0..10 {
            let d = Dart::from_index(i);
            assert_eq!(d.reverse().reverse(), d);
            assert_ne!(d.reverse(), d);
            assert_eq!(d.reverse().edge(), d.edge());
        }
    }

    #[test]
    fn endpoints_and_text() {
        let edges = [(0, 1), (1, 2)];
        let d = Dart::backward(1);
        assert_eq!((d.tail(&edges), d.head(&edges)), (2, 1));
        assert_eq!(d.to_string(), "-1");
        assert_eq!("+1".parse::<Dart>().unwrap(), Dart::forward(1));
        assert!("1".parse::<Dart>().is_err());
    }
}
