use heegner_core::heegner::*;
fn main() {
    for p in [384usize, 768, 1536] {
        let (s, conj) = trace_point(41, 1, p).unwrap();
        let s = s.normalized();
        println!("p={p} n_conj={} x={} y={}", conj.len(), format!("{:e}+{:e}i", s.x.re_f64(), s.x.im_f64()), format!("{:e}+{:e}i", s.y.re_f64(), s.y.im_f64()));
        for c in &conj { println!("  {} res={:.1}", c.x, c.residual_log2); }
    }
}
