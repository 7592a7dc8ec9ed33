use heisfree::heisenberg::HeisPoint;
use heisfree::hermitian::{
    classify_vector, herm_inner, projective_coords, siegel_membership, standard_lift, Vector3,
};
use heisfree::scalars::{ExactComplex, ExactScalar};

type C = ExactComplex;

fn main() {
    let origin = Vector3::<C>::origin();
    let infinity = Vector3::<C>::infinity();
    println!("<o, inf> = {}", herm_inner(&origin, &infinity));

    let p = HeisPoint::new(C::from_ratios((1, 2), (-1, 3)), ExactScalar::ratio(5, 7));
    let lift = standard_lift(&p);
    println!("lift of {p} = {lift}");
    println!("class: {:?}", classify_vector(&lift).unwrap());

    let inside = Vector3::new(C::from(-1), C::zero(), C::one());
    println!("(-1, 0, 1) is {:?}", classify_vector(&inside).unwrap());
    let (w1, w2) = projective_coords(&inside).unwrap();
    println!(
        "Siegel region of ({w1}, {w2}): {:?}",
        siegel_membership(&w1, &w2)
    );
}
