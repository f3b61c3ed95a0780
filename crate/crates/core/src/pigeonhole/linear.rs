use crate::set::Subset;
use crate::zoo::LinearRep;

/// Dependent, or the reduced echelon basis of `span(X) ∩ span(E - U)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LinearSignature {
    Dependent,
    Independent(Vec<Vec<u32>>),
}

pub fn linear_signature(rep: &LinearRep, u: Subset, x: Subset) -> LinearSignature {
    let field = rep.field();
    let xs = rep.columns_of(x);
    if field.rank(&xs) < xs.len() {
        return LinearSignature::Dependent;
    }
    let rest = Subset::full(rep.num_columns()).difference(u);
    LinearSignature::Independent(field.span_intersection(&xs, &rep.columns_of(rest)))
}
