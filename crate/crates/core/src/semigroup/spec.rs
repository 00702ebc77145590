use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::{exact_root, factorize, gcd};
use crate::error::{Error, Result};

/// Generating set of a [`SemigroupSpec::Generators`] semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Generators {
    /// Strictly increasing, every entry `>= 2`.
    List(Vec<u64>),
    /// All primes, enumerated up to the sieve bound on demand.
    Primes,
}

/// Symbolic description of a multiplicative subsemigroup of ℕ containing 1.
///
/// Parses from and prints to a compact expression language:
/// `full`, `trivial`, `gen(2,3)`, `gen(primes)`, `powers(2)`, `coprime(6)`,
/// `sum2sq`, `and(coprime(2),coprime(3))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SemigroupSpec {
    Full,
    Trivial,
    Generators(Generators),
    /// `{ n^m : n >= 1 }`.
    Powers(u64),
    /// `{ n : gcd(n, m) = 1 }`; `CoprimeTo(1)` is all of ℕ.
    CoprimeTo(u64),
    /// Integers whose primes `≡ 3 (mod 4)` occur to even exponents, i.e.
    /// `x² + y²` with `x, y >= 0`.
    SumOfTwoSquares,
    /// Empty intersection is all of ℕ.
    Intersection(Vec<SemigroupSpec>),
}

impl SemigroupSpec {
    /// Semigroup generated by `gens`; sorts and rejects entries below 2 or duplicates.
    pub fn generators(gens: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut list: Vec<u64> = gens.into_iter().collect();
        if list.iter().any(|&q| q < 2) {
            return Err(Error::GeneratorsNotDistinct);
        }
        list.sort_unstable();
        if list.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::GeneratorsNotDistinct);
        }
        Ok(SemigroupSpec::Generators(Generators::List(list)))
    }

    pub fn powers(m: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::Domain("powers(m) needs m >= 1".into()));
        }
        Ok(SemigroupSpec::Powers(m))
    }

    pub fn coprime_to(m: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::Domain("coprime(m) needs m >= 1".into()));
        }
        Ok(SemigroupSpec::CoprimeTo(m))
    }

    /// Membership test straight from the defining predicate.
    pub fn contains(&self, n: u64) -> bool {
        assert!(n >= 1, "semigroup membership is defined for n >= 1");
        match self {
            SemigroupSpec::Full => true,
            SemigroupSpec::Trivial => n == 1,
            SemigroupSpec::Generators(Generators::Primes) => true,
            SemigroupSpec::Generators(Generators::List(gens)) => {
                generated_by(n, gens, &mut HashMap::new())
            }
            SemigroupSpec::Powers(m) => exact_root(n, *m as u32).is_some(),
            SemigroupSpec::CoprimeTo(m) => gcd(n, *m) == 1,
            SemigroupSpec::SumOfTwoSquares => factorize(n)
                .iter()
                .all(|&(p, e)| p % 4 != 3 || e % 2 == 0),
            SemigroupSpec::Intersection(parts) => parts.iter().all(|s| s.contains(n)),
        }
    }
}

fn generated_by(n: u64, gens: &[u64], memo: &mut HashMap<u64, bool>) -> bool {
    if n == 1 {
        return true;
    }
    if let Some(&hit) = memo.get(&n) {
        return hit;
    }
    let hit = gens
        .iter()
        .take_while(|&&q| q <= n)
        .any(|&q| n.is_multiple_of(q) && generated_by(n / q, gens, memo));
    memo.insert(n, hit);
    hit
}

fn join(values: &[u64]) -> String {
    values.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for SemigroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SemigroupSpec::Full => write!(f, "full"),
            SemigroupSpec::Trivial => write!(f, "trivial"),
            SemigroupSpec::Generators(Generators::Primes) => write!(f, "gen(primes)"),
            SemigroupSpec::Generators(Generators::List(g)) => write!(f, "gen({})", join(g)),
            SemigroupSpec::Powers(m) => write!(f, "powers({m})"),
            SemigroupSpec::CoprimeTo(m) => write!(f, "coprime({m})"),
            SemigroupSpec::SumOfTwoSquares => write!(f, "sum2sq"),
            SemigroupSpec::Intersection(parts) => {
                let inner: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "and({})", inner.join(","))
            }
        }
    }
}

/// Either a semigroup expression or an ad-hoc member list, `set(1,2,3)` or `{1,2,3}`.
///
/// Ad-hoc sets exist so closure checks can be run on sets that are not semigroups.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SetExpr {
    Spec(SemigroupSpec),
    Set(Vec<u64>),
}

impl fmt::Display for SetExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SetExpr::Spec(s) => s.fmt(f),
            SetExpr::Set(members) => write!(f, "set({})", join(members)),
        }
    }
}

impl FromStr for SetExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser::new(s);
        let out = p.set_expr()?;
        p.finish()?;
        Ok(out)
    }
}

impl FromStr for SemigroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser::new(s);
        let out = p.spec()?;
        p.finish()?;
        Ok(out)
    }
}

impl Serialize for SemigroupSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for SemigroupSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, pos: 0 }
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {} in {:?}", self.pos, self.src))
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected '{c}'")))
        }
    }

    fn ident(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .unwrap_or(rest.len());
        if len == 0 {
            return Err(self.err("expected a name"));
        }
        self.pos += len;
        Ok(&rest[..len])
    }

    fn number(&mut self) -> Result<u64> {
        let word = self.ident()?;
        word.parse().map_err(|_| self.err(&format!("bad integer {word:?}")))
    }

    fn numbers(&mut self) -> Result<Vec<u64>> {
        self.delimited('(', ')')
    }

    fn delimited(&mut self, open: char, close: char) -> Result<Vec<u64>> {
        self.expect(open)?;
        let mut out = Vec::new();
        if self.peek() == Some(close) {
            self.pos += 1;
            return Ok(out);
        }
        loop {
            out.push(self.number()?);
            match self.peek() {
                Some(',') => self.pos += 1,
                Some(c) if c == close => {
                    self.pos += 1;
                    return Ok(out);
                }
                _ => return Err(self.err(&format!("expected ',' or '{close}'"))),
            }
        }
    }

    fn single(&mut self) -> Result<u64> {
        let v = self.numbers()?;
        match v.as_slice() {
            [m] => Ok(*m),
            _ => Err(self.err("expected exactly one argument")),
        }
    }

    fn set_expr(&mut self) -> Result<SetExpr> {
        let save = self.pos;
        let braces = self.peek() == Some('{');
        if braces || self.ident()? == "set" {
            let mut members = if braces { self.delimited('{', '}')? } else { self.numbers()? };
            if members.contains(&0) {
                return Err(self.err("set members must be >= 1"));
            }
            members.sort_unstable();
            members.dedup();
            return Ok(SetExpr::Set(members));
        }
        self.pos = save;
        Ok(SetExpr::Spec(self.spec()?))
    }

    fn spec(&mut self) -> Result<SemigroupSpec> {
        let name = self.ident()?;
        match name {
            "full" => Ok(SemigroupSpec::Full),
            "trivial" => Ok(SemigroupSpec::Trivial),
            "sum2sq" => Ok(SemigroupSpec::SumOfTwoSquares),
            "powers" => SemigroupSpec::powers(self.single()?),
            "coprime" => SemigroupSpec::coprime_to(self.single()?),
            "gen" => {
                self.expect('(')?;
                let save = self.pos;
                if self.ident().ok() == Some("primes") {
                    self.expect(')')?;
                    return Ok(SemigroupSpec::Generators(Generators::Primes));
                }
                self.pos = save - 1;
                SemigroupSpec::generators(self.numbers()?)
            }
            "and" => {
                self.expect('(')?;
                let mut parts = Vec::new();
                if self.peek() == Some(')') {
                    self.pos += 1;
                    return Ok(SemigroupSpec::Intersection(parts));
                }
                loop {
                    parts.push(self.spec()?);
                    match self.peek() {
                        Some(',') => self.pos += 1,
                        Some(')') => {
                            self.pos += 1;
                            return Ok(SemigroupSpec::Intersection(parts));
                        }
                        _ => return Err(self.err("expected ',' or ')'")),
                    }
                }
            }
            other => Err(Error::Parse(format!("unknown semigroup {other:?}"))),
        }
    }

    fn finish(&mut self) -> Result<()> {
        if self.peek().is_some() {
            Err(self.err("trailing input"))
        } else {
            Ok(())
        }
    }
}
