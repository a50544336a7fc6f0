use clme::*;
fn main() {
    let params = ModelParams64::case_i(0.15, 0.5).unwrap();
    let state = HermiteGaussState64::new(0, 0.6).unwrap();
    let ev = EvolvedDensity64::new(state, params).unwrap();
    for t in [0.0, 0.25, 0.5] {
        let cf = ev.closed_form_at(t);
        let (qkk, qkr, qrr) = cf.real_quad();
        println!("t={t}: qkk={qkk:.6} qkr={qkr:.6} qrr={qrr:.6}");
        // pieces
        let roots = params.char_roots();
        let map = clme::model::backmap_coeffs(t, &roots, 1.0);
        println!("  map kk={:?} kr={:?} rk={:?} rr={:?}", map.kk, map.kr, map.rk, map.rr);
        let e = clme::model::exponent_quadratic(t, &params);
        println!("  exp kk={:?} kr={:?} rr={:?}", e.kk, e.kr, e.rr);
    }
}
