use crate::error::{Error, Result};
use crate::linrec::LinRec;
use crate::ring::Ring;

#[derive(Clone, Debug)]
enum Source<R: Ring> {
    Recurrence(LinRec<R>),
    Raw,
}

/// A lazily extended prefix of a sequence.
///
/// Streams backed by a [`LinRec`] extend without bound; raw streams hold a
/// fixed list of terms. Terms already computed never change.
#[derive(Clone, Debug)]
pub struct TermStream<R: Ring> {
    ring: R,
    source: Source<R>,
    computed: Vec<R::Elem>,
}

impl<R: Ring> TermStream<R> {
    pub fn from_linrec(seq: LinRec<R>) -> Self {
        let ring = seq.ring().clone();
        let computed = seq.initial().to_vec();
        TermStream { ring, source: Source::Recurrence(seq), computed }
    }

    pub fn from_terms(ring: R, terms: Vec<R::Elem>) -> Self {
        TermStream { ring, source: Source::Raw, computed: terms }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    /// The recurrence behind the stream, if any.
    pub fn linrec(&self) -> Option<&LinRec<R>> {
        match &self.source {
            Source::Recurrence(s) => Some(s),
            Source::Raw => None,
        }
    }

    /// Number of terms computed so far.
    pub fn computed_len(&self) -> usize {
        self.computed.len()
    }

    pub fn extend_to(&mut self, len: usize) -> Result<()> {
        if len <= self.computed.len() {
            return Ok(());
        }
        match &self.source {
            Source::Raw => Err(Error::PrefixExhausted { requested: len, available: self.computed.len() }),
            Source::Recurrence(seq) => {
                let h = seq.recurrence_coeffs();
                let ring = &self.ring;
                while self.computed.len() < len {
                    let n = self.computed.len();
                    let next = h.iter().enumerate().fold(ring.zero(), |acc, (i, hi)| {
                        ring.add(&acc, &ring.mul(hi, &self.computed[n - 1 - i]))
                    });
                    self.computed.push(next);
                }
                Ok(())
            }
        }
    }

    pub fn prefix(&mut self, len: usize) -> Result<&[R::Elem]> {
        self.extend_to(len)?;
        Ok(&self.computed[..len])
    }

    pub fn get(&mut self, n: usize) -> Result<R::Elem> {
        Ok(self.prefix(n + 1)?[n].clone())
    }

    pub fn computed(&self) -> &[R::Elem] {
        &self.computed
    }

    pub fn into_terms(self) -> Vec<R::Elem> {
        self.computed
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Integers;
    use num_bigint::BigInt;

    #[test]
    fn recurrence_stream_extends() {
        let fib = LinRec::from_i64s(Integers::default(), &[-1, -1, 1], &[0, 1]).unwrap();
        let mut s = fib.stream();
        let first: Vec<BigInt> = s.prefix(5).unwrap().to_vec();
        assert_eq!(s.get(20).unwrap(), BigInt::from(6765));
        assert_eq!(&s.computed()[..5], &first[..]);
        assert_eq!(s.computed(), &fib.terms(21)[..]);
        assert!(s.linrec().is_some());
    }

    #[test]
    fn raw_stream_is_bounded() {
        let terms: Vec<BigInt> = (1..=4).map(BigInt::from).collect();
        let mut s = TermStream::from_terms(Integers::default(), terms);
        assert_eq!(s.prefix(4).unwrap().len(), 4);
        assert_eq!(s.prefix(5), Err(Error::PrefixExhausted { requested: 5, available: 4 }));
        assert_eq!(s.computed_len(), 4);
    }
}
