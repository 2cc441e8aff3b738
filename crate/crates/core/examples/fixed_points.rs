//! Torus fixed points of each kind of space with their tangent Euler
//! classes.

use grassint::spaces::{enumerate_fixed_points, euler_class, restricted_roots, SpaceDescriptor};

fn main() {
    for space in ["grass:2,4", "lg:2", "og:2,odd", "flag:2,3"] {
        let space: SpaceDescriptor = space.parse().unwrap();
        println!("{space} (dimension {})", space.complex_dimension());
        for p in enumerate_fixed_points(&space) {
            let roots: Vec<String> = restricted_roots(&space, &p)
                .unwrap()
                .iter()
                .map(|r| r.to_string())
                .collect();
            println!(
                "  {p:<10} roots [{}]  euler {}",
                roots.join(", "),
                euler_class(&space, &p).unwrap()
            );
        }
    }
}
