//! 10-point Gauss / 21-point Kronrod pair.

use super::Scalar;

/// Kronrod abscissae on [−1, 1], descending; odd indices are the Gauss nodes.
pub(crate) const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];

pub(crate) const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_208_980_223_551,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

/// Gauss weights for the nodes `XGK[1], XGK[3], …, XGK[9]`.
pub(crate) const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

/// One panel estimate.
#[derive(Debug, Clone, Copy)]
pub(crate) struct PanelEstimate<T> {
    pub value: T,
    pub err: f64,
    /// Integral of |f| over the panel, used for the roundoff floor.
    pub resabs: f64,
}

/// Kronrod estimate on [a, b] with the usual error scaling: the raw
/// Gauss/Kronrod difference is mapped through `(200 d / resasc)^{3/2}`
/// and floored at `50 ε resabs`.
pub(crate) fn gk21<T: Scalar, F: Fn(f64) -> T + ?Sized>(f: &F, a: f64, b: f64) -> PanelEstimate<T> {
    let centre = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let abs_half = half.abs();

    let fc = f(centre);
    let mut res_gauss = T::zero();
    let mut res_kronrod = fc * WGK[10];
    let mut resabs = WGK[10] * fc.modulus();

    let mut f_lo = [T::zero(); 10];
    let mut f_hi = [T::zero(); 10];
    for j in 0..10 {
        let dx = half * XGK[j];
        let lo = f(centre - dx);
        let hi = f(centre + dx);
        f_lo[j] = lo;
        f_hi[j] = hi;
        res_kronrod += (lo + hi) * WGK[j];
        resabs += WGK[j] * (lo.modulus() + hi.modulus());
        if j % 2 == 1 {
            res_gauss += (lo + hi) * WG[j / 2];
        }
    }

    let mean = res_kronrod * 0.5;
    let mut resasc = WGK[10] * (fc - mean).modulus();
    for j in 0..10 {
        resasc += WGK[j] * ((f_lo[j] - mean).modulus() + (f_hi[j] - mean).modulus());
    }

    let value = res_kronrod * half;
    resabs *= abs_half;
    resasc *= abs_half;
    let mut err = ((res_kronrod - res_gauss) * half).modulus();
    if resasc != 0.0 && err != 0.0 {
        err = resasc * (200.0 * err / resasc).powf(1.5).min(1.0);
    }
    if resabs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * resabs);
    }
    PanelEstimate { value, err, resabs }
}
