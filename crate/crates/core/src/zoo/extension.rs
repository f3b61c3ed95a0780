use crate::error::{Error, Result};
use crate::matroid::{is_flat, Matroid, SharedMatroid};
use crate::set::{GroundSet, Subset};

/// `M +_F e`: a new element placed freely on the flat `F`.
pub struct PrincipalExtension {
    base: SharedMatroid,
    flat: Subset,
    ground: GroundSet,
    /// Position of the new element in the extended ground set.
    new_pos: usize,
    /// Base position of each extended position other than `new_pos`.
    to_base: Vec<usize>,
}

impl PrincipalExtension {
    pub fn new_element(&self) -> u32 {
        self.ground.id(self.new_pos)
    }
}

impl Matroid for PrincipalExtension {
    fn ground(&self) -> &GroundSet {
        &self.ground
    }

    fn is_independent(&self, x: Subset) -> bool {
        let base_x =
            Subset::from_positions(x.without(self.new_pos).iter().map(|p| self.to_base[p]));
        if !self.base.is_independent(base_x) {
            return false;
        }
        if !x.contains(self.new_pos) {
            return true;
        }
        // For independent X, F ⊆ cl(X) iff X + f is dependent for every f in F - X.
        self.flat
            .difference(base_x)
            .iter()
            .any(|f| self.base.is_independent(base_x.with(f)))
    }
}

/// Extends `m` by the element `new_id` (default: one more than the largest id)
/// freely placed on the flat with ids `flat`.
pub fn principal_extension(
    m: SharedMatroid,
    flat: &[u32],
    new_id: Option<u32>,
) -> Result<PrincipalExtension> {
    let g = m.ground();
    let f = g.subset_of_ids(flat.iter().copied())?;
    if !is_flat(&*m, f)? {
        return Err(Error::domain(format!("{} is not a flat", g.display(f))));
    }
    let e = new_id.unwrap_or_else(|| g.ids().last().map_or(1, |&x| x + 1));
    if g.position(e).is_some() {
        return Err(Error::domain(format!("element {e} already exists")));
    }
    let mut ids = g.ids().to_vec();
    ids.push(e);
    let ground = GroundSet::new(ids)?;
    let new_pos = ground.position(e).unwrap();
    let to_base = (0..ground.len())
        .map(|p| {
            if p == new_pos {
                usize::MAX
            } else {
                g.position(ground.id(p)).unwrap()
            }
        })
        .collect();
    Ok(PrincipalExtension {
        base: m,
        flat: f,
        ground,
        new_pos,
        to_base,
    })
}
