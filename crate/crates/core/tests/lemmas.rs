use suzuki_core::verify::lemmas::{f_map_lemmas, gcd_lemma, q_form_identity};

#[test]
fn q_form_polarization_up_to_r8() {
    for r in 1..=8 {
        q_form_identity(r).unwrap();
    }
}

#[test]
fn gcd_of_p_power_plus_one() {
    for p in [2, 3, 5] {
        for m in 1..=12 {
            gcd_lemma(p, m).unwrap();
        }
    }
}

#[test]
fn f_map_images_char_2() {
    for m in 2..=6 {
        f_map_lemmas(2, m).unwrap();
    }
}

#[test]
fn f_map_images_odd_char() {
    for m in 2..=6 {
        f_map_lemmas(3, m).unwrap();
    }
    for m in 2..=3 {
        f_map_lemmas(5, m).unwrap();
    }
}
