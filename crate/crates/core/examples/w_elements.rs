//! Prints `w(Id_k)` and the four slide images `φ_v(Id_k)` for small `k`.

use skein::sliding::{phi, w_id, SlideVariant};

fn main() {
    for k in 2..=4 {
        println!("w(Id{k}) = {}", w_id(k).unwrap());
    }
    for v in SlideVariant::ALL {
        let x = phi(v, 4).unwrap();
        println!("phi[{v}](Id4): {} terms, Id4 coefficient {}", x.len(), x.coeff(&skein::tl::Diagram::identity(4)));
    }
}
