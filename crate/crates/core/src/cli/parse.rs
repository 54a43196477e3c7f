//! Text syntax for rings, polynomials and sequences.
//!
//! ```text
//! ring      := Z | Q | Zmod:<m>
//! poly      := [c0,c1,...,cN]            coefficients low to high
//! sequence  := ring=<ring>; p=<poly>; init=[a0,...,a{N-1}]
//! raw       := ring=<ring>; terms=[t0,t1,...]
//! ```
//!
//! Whitespace around separators is ignored. Errors carry the byte offset
//! of the offending token.

use crate::error::{Error, Result};
use crate::linrec::LinRec;
use crate::polymat::Poly;
use crate::ring::{BaseRing, RingSpec};

pub fn parse_ring(text: &str) -> Result<RingSpec> {
    text.parse()
}

/// A bracketed list, returned as `(offset, item)` pairs.
fn parse_list(text: &str, offset: usize) -> Result<Vec<(usize, &str)>> {
    let lead = text.len() - text.trim_start().len();
    let t = text.trim();
    let start = offset + lead;
    let inner = t
        .strip_prefix('[')
        .ok_or_else(|| Error::parse(start, "expected `[`"))?
        .strip_suffix(']')
        .ok_or_else(|| Error::parse(start + t.len().saturating_sub(1), "expected `]`"))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut items = Vec::new();
    let mut pos = start + 1;
    for item in inner.split(',') {
        let skip = item.len() - item.trim_start().len();
        let trimmed = item.trim();
        if trimmed.is_empty() {
            return Err(Error::parse(pos + skip, "empty list element"));
        }
        items.push((pos + skip, trimmed));
        pos += item.len() + 1;
    }
    Ok(items)
}

fn parse_elems<R: BaseRing>(ring: &R, text: &str, offset: usize) -> Result<Vec<R::Elem>> {
    parse_list(text, offset)?
        .into_iter()
        .map(|(pos, item)| ring.parse_elem(item).map_err(|msg| Error::parse(pos, msg)))
        .collect()
}

/// Any polynomial, zero allowed.
pub fn parse_poly<R: BaseRing>(ring: &R, text: &str) -> Result<Poly<R>> {
    parse_poly_at(ring, text, 0)
}

fn parse_poly_at<R: BaseRing>(ring: &R, text: &str, offset: usize) -> Result<Poly<R>> {
    Ok(Poly::new(ring.clone(), parse_elems(ring, text, offset)?))
}

/// A polynomial in characteristic position: monic of degree at least one.
pub fn parse_charpoly<R: BaseRing>(ring: &R, text: &str) -> Result<Poly<R>> {
    let p = parse_poly(ring, text)?;
    p.ensure_characteristic()?;
    Ok(p)
}

/// Parsed `key=value` fields of a sequence literal, before the ring is
/// instantiated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceText {
    pub ring: RingSpec,
    charpoly: Option<(usize, String)>,
    init: Option<(usize, String)>,
    terms: Option<(usize, String)>,
}

impl SequenceText {
    pub fn parse(text: &str) -> Result<Self> {
        let mut ring = None;
        let mut charpoly = None;
        let mut init = None;
        let mut terms = None;
        let mut pos = 0;
        for field in text.split(';') {
            let field_pos = pos;
            pos += field.len() + 1;
            if field.trim().is_empty() {
                continue;
            }
            let lead = field.len() - field.trim_start().len();
            let (key, value) = field
                .split_once('=')
                .ok_or_else(|| Error::parse(field_pos + lead, "expected `key=value`"))?;
            let value_pos = field_pos + key.len() + 1;
            let slot = match key.trim() {
                "ring" => {
                    if ring.is_some() {
                        return Err(Error::parse(field_pos + lead, "duplicate `ring`"));
                    }
                    ring = Some(parse_ring(value).map_err(|e| shift(e, value_pos))?);
                    continue;
                }
                "p" => &mut charpoly,
                "init" => &mut init,
                "terms" => &mut terms,
                other => return Err(Error::parse(field_pos + lead, format!("unknown key `{other}`"))),
            };
            if slot.is_some() {
                return Err(Error::parse(field_pos + lead, format!("duplicate `{}`", key.trim())));
            }
            *slot = Some((value_pos, value.to_string()));
        }
        let ring = ring.ok_or_else(|| Error::parse(0, "missing `ring=`"))?;
        Ok(SequenceText { ring, charpoly, init, terms })
    }

    pub fn is_raw(&self) -> bool {
        self.terms.is_some()
    }

    /// Builds the recurrence. `ring` must match the literal's ring.
    pub fn linrec<R: BaseRing>(&self, ring: &R) -> Result<LinRec<R>> {
        self.check_ring(ring)?;
        if let Some((pos, _)) = &self.terms {
            return Err(Error::parse(*pos, "expected `p=` and `init=`, found raw `terms=`"));
        }
        let (p_pos, p_text) = self.charpoly.as_ref().ok_or_else(|| Error::parse(0, "missing `p=`"))?;
        let (i_pos, i_text) = self.init.as_ref().ok_or_else(|| Error::parse(0, "missing `init=`"))?;
        let p = parse_poly_at(ring, p_text, *p_pos)?;
        p.ensure_characteristic()?;
        let init = parse_elems(ring, i_text, *i_pos)?;
        LinRec::new(p, init)
    }

    /// Terms of a raw literal, or the initial terms of a recurrence.
    pub fn raw_terms<R: BaseRing>(&self, ring: &R) -> Result<Vec<R::Elem>> {
        self.check_ring(ring)?;
        match (&self.terms, &self.init) {
            (Some((pos, text)), _) => parse_elems(ring, text, *pos),
            (None, Some((pos, text))) => parse_elems(ring, text, *pos),
            (None, None) => Err(Error::parse(0, "missing `terms=`")),
        }
    }

    fn check_ring<R: BaseRing>(&self, ring: &R) -> Result<()> {
        if ring.spec() != self.ring {
            return Err(Error::RingMismatch { left: self.ring.to_string(), right: ring.spec().to_string() });
        }
        Ok(())
    }
}

fn shift(e: Error, by: usize) -> Error {
    match e {
        Error::Parse { pos, msg } => Error::Parse { pos: pos + by, msg },
        other => other,
    }
}

/// Parses a sequence literal over `ring`.
pub fn parse_sequence<R: BaseRing>(ring: &R, text: &str) -> Result<LinRec<R>> {
    SequenceText::parse(text)?.linrec(ring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Integers, ModRing, Rationals};
    use proptest::prelude::*;

    #[test]
    fn fibonacci_over_q() {
        let q = Rationals::default();
        let s = parse_sequence(&q, "ring=Q;p=[-1,-1,1];init=[0,1]").unwrap();
        assert_eq!(s, LinRec::from_i64s(q, &[-1, -1, 1], &[0, 1]).unwrap());
        let s = parse_sequence(&q, " ring = Q ; p = [ -1, -1, 1 ] ; init = [0, 1] ").unwrap();
        assert_eq!(s.order(), 2);
    }

    #[test]
    fn errors() {
        assert!(matches!(SequenceText::parse("ring=Zmod:1;p=[0,1];init=[1]"), Err(Error::Parse { .. })));
        let z = Integers::default();
        assert!(matches!(parse_charpoly(&z, "[-1,-1,2]"), Err(Error::NotMonic(_))));
        assert_eq!(
            parse_sequence(&z, "ring=Z;p=[-1,-1,1];init=[0]"),
            Err(Error::InitLength { expected: 2, found: 1 })
        );
        assert!(matches!(parse_sequence(&z, "ring=Q;p=[0,1];init=[1]"), Err(Error::RingMismatch { .. })));
        assert!(matches!(parse_sequence(&z, "ring=Z;p=[0,1];init=[1];x=3"), Err(Error::Parse { .. })));
        assert!(matches!(parse_sequence(&z, "ring=Z;p=[0,1]"), Err(Error::Parse { .. })));
        match parse_sequence(&z, "ring=Z;p=[0,x,1];init=[1,2]") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 12),
            other => panic!("{other:?}"),
        }
        match parse_poly(&z, "[1,,2]") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 3),
            other => panic!("{other:?}"),
        }
        assert!(parse_poly(&z, "1,2").is_err());
    }

    #[test]
    fn raw_sequences() {
        let r = ModRing::new(7).unwrap();
        let s = SequenceText::parse("ring=Zmod:7;terms=[1,2,9]").unwrap();
        assert!(s.is_raw());
        assert_eq!(s.raw_terms(&r).unwrap(), [1, 2, 2].map(num_bigint::BigInt::from).to_vec());
        assert!(s.linrec(&r).is_err());
    }

    fn small_linrec() -> impl Strategy<Value = (Vec<i64>, Vec<i64>, u8)> {
        (1usize..5).prop_flat_map(|n| {
            (
                proptest::collection::vec(-50i64..50, n),
                proptest::collection::vec(-50i64..50, n),
                0u8..3,
            )
        })
    }

    proptest! {
        #[test]
        fn print_parse_round_trip((coeffs, init, which) in small_linrec()) {
            let mut p = coeffs.clone();
            p.push(1);
            match which {
                0 => {
                    let s = LinRec::from_i64s(Integers::default(), &p, &init).unwrap();
                    prop_assert_eq!(parse_sequence(&Integers::default(), &s.to_string()).unwrap(), s);
                }
                1 => {
                    let s = LinRec::from_i64s(Rationals::default(), &p, &init).unwrap();
                    let s = crate::linrec::hadamard(&s, &LinRec::geometric(Rationals::default(), &num_rational::BigRational::new(1.into(), 3.into()))).unwrap();
                    prop_assert_eq!(parse_sequence(&Rationals::default(), &s.to_string()).unwrap(), s);
                }
                _ => {
                    let r = ModRing::new(97).unwrap();
                    let s = LinRec::from_i64s(r.clone(), &p, &init).unwrap();
                    prop_assert_eq!(parse_sequence(&r, &s.to_string()).unwrap(), s);
                }
            }
        }
    }
}
