//! Name resolution: turns parsed statements into rings, ideals and typed
//! commands, enforcing declare-before-use and unique names per kind.

use std::collections::BTreeMap;
use std::fmt;

use vfilt_core::{Exp, FiltrationKind, Monomial, MonomialIdeal, Ring};

use crate::syntax::{self, CommandSyntax, IdealDecl, Mono, Name, ParseError, Pos, RingDecl, Stmt};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColonBy {
    Monomial(Monomial),
    Ideal(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Op {
    MinGens { ideal: String },
    Colon { ideal: String, by: ColonBy },
    Ass { ideal: String },
    Min { ideal: String },
    IrrDec { ideal: String },
    Vnum { ideal: String },
    Power { ideal: String, k: u32 },
    Symb { ideal: String, kind: FiltrationKind, k: u32 },
    IntClos { ideal: String, k: u32 },
    VerifyExpansion { kind: FiltrationKind, k: u32, i: String, j: String },
    VerifyTheorem { kind: FiltrationKind, k: u32, i: String, j: String },
    CheckProperty { kind: FiltrationKind, k: u32, cap: Option<u32>, ideal: String },
    Ntf { k: u32, ideal: String },
}

impl Op {
    pub fn name(&self) -> &'static str {
        match self {
            Op::MinGens { .. } => "mingens",
            Op::Colon { .. } => "colon",
            Op::Ass { .. } => "ass",
            Op::Min { .. } => "min",
            Op::IrrDec { .. } => "irrdec",
            Op::Vnum { .. } => "vnum",
            Op::Power { .. } => "power",
            Op::Symb { .. } => "symb",
            Op::IntClos { .. } => "intclos",
            Op::VerifyExpansion { .. } => "verify-expansion",
            Op::VerifyTheorem { .. } => "verify-theorem",
            Op::CheckProperty { .. } => "check-property",
            Op::Ntf { .. } => "ntf",
        }
    }

    pub fn kind(&self) -> Option<FiltrationKind> {
        match self {
            Op::Symb { kind, .. }
            | Op::VerifyExpansion { kind, .. }
            | Op::VerifyTheorem { kind, .. }
            | Op::CheckProperty { kind, .. } => Some(*kind),
            Op::IntClos { .. } => Some(FiltrationKind::IntegralClosure),
            Op::Power { .. } => Some(FiltrationKind::Ordinary),
            _ => None,
        }
    }

    pub fn k(&self) -> Option<u32> {
        match self {
            Op::Power { k, .. }
            | Op::Symb { k, .. }
            | Op::IntClos { k, .. }
            | Op::VerifyExpansion { k, .. }
            | Op::VerifyTheorem { k, .. }
            | Op::CheckProperty { k, .. }
            | Op::Ntf { k, .. } => Some(*k),
            _ => None,
        }
    }

    /// Ideal names referenced, in argument order.
    pub fn ideals(&self) -> Vec<&str> {
        match self {
            Op::Colon { ideal, by: ColonBy::Ideal(other) } => vec![ideal, other],
            Op::VerifyExpansion { i, j, .. } | Op::VerifyTheorem { i, j, .. } => vec![i, j],
            Op::MinGens { ideal }
            | Op::Colon { ideal, .. }
            | Op::Ass { ideal }
            | Op::Min { ideal }
            | Op::IrrDec { ideal }
            | Op::Vnum { ideal }
            | Op::Power { ideal, .. }
            | Op::Symb { ideal, .. }
            | Op::IntClos { ideal, .. }
            | Op::CheckProperty { ideal, .. }
            | Op::Ntf { ideal, .. } => vec![ideal],
        }
    }
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())?;
        match self {
            Op::Colon { ideal, by: ColonBy::Monomial(m) } => write!(f, " {ideal} {m}"),
            Op::Colon { ideal, by: ColonBy::Ideal(other) } => write!(f, " {ideal} {other}"),
            Op::Power { ideal, k } | Op::IntClos { ideal, k } => write!(f, " k={k} {ideal}"),
            Op::Symb { ideal, kind, k } => write!(f, " kind={kind} k={k} {ideal}"),
            Op::VerifyExpansion { kind, k, i, j } | Op::VerifyTheorem { kind, k, i, j } => {
                write!(f, " kind={kind} k={k} {i} {j}")
            }
            Op::CheckProperty { kind, k, cap, ideal } => {
                write!(f, " kind={kind} k={k}")?;
                if let Some(cap) = cap {
                    write!(f, " cap={cap}")?;
                }
                write!(f, " {ideal}")
            }
            Op::Ntf { k, ideal } => write!(f, " k={k} {ideal}"),
            Op::MinGens { ideal } | Op::Ass { ideal } | Op::Min { ideal } | Op::IrrDec { ideal } | Op::Vnum { ideal } => {
                write!(f, " {ideal}")
            }
        }
    }
}

#[derive(Clone, Debug, Eq)]
pub struct Command {
    pub op: Op,
    pub pos: Pos,
}

/// Positions are not part of a command's identity.
impl PartialEq for Command {
    fn eq(&self, other: &Self) -> bool {
        self.op == other.op
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Session {
    pub rings: Vec<Ring>,
    /// Declaration order.
    pub ideals: Vec<(String, MonomialIdeal)>,
    pub commands: Vec<Command>,
}

impl Session {
    pub fn ideal(&self, name: &str) -> Option<&MonomialIdeal> {
        self.ideals.iter().find(|(n, _)| n == name).map(|(_, l)| l)
    }
}

/// Prints a canonical source form that parses back to an equal session.
impl fmt::Display for Session {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rings {
            writeln!(f, "ring {} = [{}];", r.name(), r.vars().join(", "))?;
        }
        for (name, l) in &self.ideals {
            writeln!(f, "ideal {name} in {} = {l};", l.ring().name())?;
        }
        for c in &self.commands {
            writeln!(f, "{};", c.op)?;
        }
        Ok(())
    }
}

#[derive(Default)]
struct Resolver {
    session: Session,
    rings: BTreeMap<String, Ring>,
    ideals: BTreeMap<String, MonomialIdeal>,
}

fn plain_name(n: &Name, what: &str) -> Result<(), ParseError> {
    if n.text.contains('-') {
        return Err(ParseError::new(n.pos, format!("{what} name `{}` may not contain `-`", n.text)));
    }
    Ok(())
}

impl Resolver {
    fn ring(&mut self, d: RingDecl) -> Result<(), ParseError> {
        plain_name(&d.name, "ring")?;
        if self.rings.contains_key(&d.name.text) {
            return Err(ParseError::new(d.name.pos, format!("ring {} is already declared", d.name.text)));
        }
        for (i, v) in d.vars.iter().enumerate() {
            plain_name(v, "variable")?;
            if d.vars[..i].iter().any(|w| w.text == v.text) {
                return Err(ParseError::new(v.pos, format!("duplicate variable {} in ring {}", v.text, d.name.text)));
            }
        }
        let ring = Ring::new(d.name.text.clone(), d.vars.iter().map(|v| v.text.clone()))
            .map_err(|e| ParseError::new(d.name.pos, e.to_string()))?;
        self.rings.insert(d.name.text, ring.clone());
        self.session.rings.push(ring);
        Ok(())
    }

    fn monomial(ring: &Ring, m: &Mono) -> Result<Monomial, ParseError> {
        let mut exp: Vec<Exp> = vec![0; ring.nvars()];
        for t in &m.terms {
            let Some(i) = ring.var_index(&t.var.text) else {
                return Err(ParseError::new(
                    t.var.pos,
                    format!("unknown variable {} in ring {}", t.var.text, ring.name()),
                ));
            };
            exp[i] = exp[i].checked_add(t.exp).ok_or_else(|| ParseError::new(t.var.pos, "exponent overflow"))?;
        }
        Ok(ring.monomial(exp).expect("length matches ring"))
    }

    fn ideal(&mut self, d: IdealDecl) -> Result<(), ParseError> {
        plain_name(&d.name, "ideal")?;
        if self.ideals.contains_key(&d.name.text) {
            return Err(ParseError::new(d.name.pos, format!("ideal {} is already declared", d.name.text)));
        }
        let Some(ring) = self.rings.get(&d.ring.text) else {
            return Err(ParseError::new(d.ring.pos, format!("unknown ring {}", d.ring.text)));
        };
        let gens = d.gens.iter().map(|m| Self::monomial(ring, m)).collect::<Result<Vec<_>, _>>()?;
        let l = MonomialIdeal::new(ring, gens).expect("monomials built in this ring");
        self.ideals.insert(d.name.text.clone(), l.clone());
        self.session.ideals.push((d.name.text, l));
        Ok(())
    }

    fn ideal_ref(&self, m: &Mono) -> Result<String, ParseError> {
        let Some(name) = m.as_word() else {
            return Err(ParseError::new(m.pos, "expected an ideal name"));
        };
        if !self.ideals.contains_key(&name.text) {
            return Err(ParseError::new(name.pos, format!("unknown ideal {}", name.text)));
        }
        Ok(name.text.clone())
    }

    fn command(&mut self, c: CommandSyntax) -> Result<(), ParseError> {
        let pos = c.name.pos;
        let cmd = c.name.text.as_str();
        let allowed: &[&str] = match cmd {
            "mingens" | "colon" | "ass" | "min" | "irrdec" | "vnum" => &[],
            "power" | "ntf" | "intclos" => &["k"],
            "symb" | "verify-expansion" | "verify-theorem" => &["kind", "k"],
            "check-property" => &["kind", "k", "cap"],
            _ => return Err(ParseError::new(pos, format!("unknown command {cmd}"))),
        };
        let mut named: BTreeMap<&str, &Name> = BTreeMap::new();
        for a in &c.named {
            if !allowed.contains(&a.key.text.as_str()) {
                return Err(ParseError::new(a.key.pos, format!("unknown argument {} for {cmd}", a.key.text)));
            }
            if named.insert(&a.key.text, &a.value).is_some() {
                return Err(ParseError::new(a.key.pos, format!("argument {} given twice", a.key.text)));
            }
        }
        let nat = |key: &str| -> Result<Option<u32>, ParseError> {
            named
                .get(key)
                .map(|v| v.text.parse().map_err(|_| ParseError::new(v.pos, format!("{key} must be a natural number, found {}", v.text))))
                .transpose()
        };
        let required = |key: &str, v: Option<u32>| v.ok_or_else(|| ParseError::new(pos, format!("{cmd} requires {key}=")));
        let kind = || -> Result<FiltrationKind, ParseError> {
            let v = named.get("kind").ok_or_else(|| ParseError::new(pos, format!("{cmd} requires kind=")))?;
            v.text.parse().map_err(|e: String| ParseError::new(v.pos, e))
        };
        let arity = |n: usize| {
            if c.positional.len() == n {
                Ok(())
            } else {
                let at = c.positional.get(n).map_or(pos, |m| m.pos);
                let noun = if n == 1 { "argument" } else { "arguments" };
                Err(ParseError::new(at, format!("{cmd} takes {n} positional {noun}, found {}", c.positional.len())))
            }
        };
        let one = |this: &Self| -> Result<String, ParseError> {
            arity(1)?;
            this.ideal_ref(&c.positional[0])
        };
        let op = match cmd {
            "mingens" => Op::MinGens { ideal: one(self)? },
            "ass" => Op::Ass { ideal: one(self)? },
            "min" => Op::Min { ideal: one(self)? },
            "irrdec" => Op::IrrDec { ideal: one(self)? },
            "vnum" => Op::Vnum { ideal: one(self)? },
            "colon" => {
                arity(2)?;
                let ideal = self.ideal_ref(&c.positional[0])?;
                let ring = self.ideals[&ideal].ring().clone();
                let arg = &c.positional[1];
                let by = match arg.as_word() {
                    Some(w) if self.ideals.contains_key(&w.text) && ring.var_index(&w.text).is_none() => {
                        ColonBy::Ideal(w.text.clone())
                    }
                    _ => ColonBy::Monomial(Self::monomial(&ring, arg)?),
                };
                Op::Colon { ideal, by }
            }
            "power" => Op::Power { k: required("k", nat("k")?)?, ideal: one(self)? },
            "intclos" => Op::IntClos { k: nat("k")?.unwrap_or(1), ideal: one(self)? },
            "ntf" => Op::Ntf { k: required("k", nat("k")?)?, ideal: one(self)? },
            "symb" => {
                let kind = kind()?;
                if !matches!(kind, FiltrationKind::SymbolicAss | FiltrationKind::SymbolicMin) {
                    let at = named["kind"].pos;
                    return Err(ParseError::new(at, format!("symb expects kind=symb-ass or kind=symb-min, found {kind}")));
                }
                Op::Symb { kind, k: required("k", nat("k")?)?, ideal: one(self)? }
            }
            "check-property" => Op::CheckProperty { kind: kind()?, k: required("k", nat("k")?)?, cap: nat("cap")?, ideal: one(self)? },
            _ => {
                let (kind, k) = (kind()?, required("k", nat("k")?)?);
                if k == 0 && cmd == "verify-theorem" {
                    return Err(ParseError::new(named["k"].pos, "verify-theorem needs k >= 1"));
                }
                arity(2)?;
                let (i, j) = (self.ideal_ref(&c.positional[0])?, self.ideal_ref(&c.positional[1])?);
                if cmd == "verify-expansion" {
                    Op::VerifyExpansion { kind, k, i, j }
                } else {
                    Op::VerifyTheorem { kind, k, i, j }
                }
            }
        };
        self.session.commands.push(Command { op, pos });
        Ok(())
    }
}

/// Parses and resolves a whole session.
pub fn parse_session(text: &str) -> Result<Session, ParseError> {
    let mut r = Resolver::default();
    for stmt in syntax::parse(text)? {
        match stmt {
            Stmt::Ring(d) => r.ring(d)?,
            Stmt::Ideal(d) => r.ideal(d)?,
            Stmt::Command(c) => r.command(c)?,
        }
    }
    Ok(r.session)
}
