//! Quantized disk indicators: diagonal in the Fock basis, summing to the identity,
//! yet chi+ * chi- does not vanish.

use cvbell::moyal::{dequantize_with, quantize, star_via_operators_with, DequantizeOptions, FockMatrix, Resummation};
use cvbell::phasespace::{characteristic_symbol, PhasePoint, Region, Sign};

fn main() -> cvbell::Result<()> {
    let disk = Region::disk(1.0)?;
    let plus = characteristic_symbol(&disk, Sign::Plus);
    let minus = characteristic_symbol(&disk, Sign::Minus);
    let a = quantize(&minus, 60)?;
    let diag: Vec<String> = a.diagonal_values().iter().take(6).map(|z| format!("{:.6}", z.re)).collect();
    println!("diag of chi- (disk 1): {} ..", diag.join(" "));
    let sum = a.sum(&quantize(&plus, 60)?)?;
    let defect = sum.sum(&FockMatrix::identity(60).scaled(-1.0))?.max_abs();
    println!("max |chi+ + chi- - 1| = {defect:.2e}");

    let cesaro = DequantizeOptions::unchecked(Resummation::Cesaro);
    for s in [0.25, 0.5, 2.0] {
        let back = dequantize_with(&a, PhasePoint::new(s, 0.0), &cesaro)?;
        println!("dequantized chi- at |x| = {s}: {:.4}", back.re);
    }
    let cross = star_via_operators_with(&plus, &minus, 60, PhasePoint::ORIGIN, &cesaro)?;
    println!("chi+ * chi- at the origin: {:.4}", cross.re);
    Ok(())
}
