//! The common view of a finite semigroup and a finite biact: a carrier with
//! a left action and a right action, each given by a finite set of actors.

/// A finite carrier acted on from both sides.
///
/// A semigroup is viewed as its regular biact (both actions are the
/// multiplication). `left_edges`/`right_edges` list the actors whose
/// translations generate the action; for table-given objects that is every
/// element, for generated semigroups it is the generating set.
pub trait Actions {
    fn size(&self) -> usize;
    fn left_order(&self) -> usize;
    fn right_order(&self) -> usize;
    fn act_left(&self, s: usize, a: usize) -> usize;
    fn act_right(&self, a: usize, t: usize) -> usize;
    fn left_edges(&self) -> &[usize];
    fn right_edges(&self) -> &[usize];
}
