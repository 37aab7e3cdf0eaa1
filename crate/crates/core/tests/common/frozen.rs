#![allow(clippy::excessive_precision)]

//! Constants frozen from the symbolic oracle in `tests/oracles/example_pairs.py`.

use mannheim_core::lorentz::Vec3L;
use mannheim_core::mannheim::*;

pub struct Frozen {
    pub pair_type: MannheimPairType,
    pub kappa: f64,
    pub tau: f64,
    pub kappa_star: f64,
    pub tau_star: f64,
    pub rho: f64,
    pub theta: f64,
    pub rate_n: f64,
    pub rate_bstar: f64,
    pub mu: f64,
    pub ratio: f64,
    pub indicatrix_sign: f64,
    pub n0: Vec3L,
    pub t0: Vec3L,
    /// Reported residuals by identity name.
    pub residuals: [(&'static str, f64); 11],
}

pub fn frozen(n: u8) -> Frozen {
    match n {
        1 => Frozen {
            pair_type: MannheimPairType::Type3,
            kappa: 0.0446209359403356429137858512994,
            tau: 0.00223160476796386197246424517837,
            kappa_star: 0.5,
            tau_star: 1.11803398874989484820458683437,
            rho: 0.500624922128661273544715076330,
            theta: 1.52610474575854393294196516450,
            rate_n: 0.0446767051608770286647492538454,
            rate_bstar: 1.11803398874989484820458683437,
            mu: 18.1951128310552519070182708042,
            ratio: 1.07042023255155386080405697287,
            indicatrix_sign: -1.0,
            n0: Vec3L::new(-1.0002500937890795975, 0.022366272042129221711, 0.0),
            t0: Vec3L::new(-0.022338352580438514332, 0.99900149750436713941, 0.049950074875218356971),
            residuals: [
                (TORSION_PRODUCT, 0.118284020007709790465649582372),
                (LINEAR_CURVATURE_RELATION, 1.85181441825928951513707880076),
                (ANGLE_RATE_CURVATURE, 0.5),
                (PARTNER_TORSION_COMBINATION, 1.21044175268766152429972596618),
                (CURVATURE_PROJECTION, 2.40546226268965210153179492647),
                (TORSION_PROJECTION, 2.69089068733259204616801236364),
                (TORSION_SQUARE, 1.25198604786435113804327472799),
                (TORSION_SQUARE_LITERAL, 1.11604794088554371016131210638),
                (INDICATRIX_CURVATURE, 1.19266931716332177051838856997),
                (INDICATRIX_TORSION, 2.35885173186753680417057836801),
                (MU_CONSTANCY, 0.0),
            ],
        },
        2 => Frozen {
            pair_type: MannheimPairType::Type1,
            kappa: 0.0288433969404346666311005925267,
            tau: -0.00144457948921507697541905449667,
            kappa_star: 2.0,
            tau_star: 1.73205080756887729352744634151,
            rho: 2.00250679020473074442453474553,
            theta: -0.0288755362249849841338555514206,
            rate_n: 0.0288795491128953878037564494354,
            rate_bstar: 1.73205080756887729352744634151,
            mu: -0.577350269189625764509148780502,
            ratio: 16.9199924701992081061128929029,
            indicatrix_sign: 1.0,
            n0: Vec3L::new(-1.0016708449412667070, 0.057831493196624022225, 0.0),
            t0: Vec3L::new(0.057759098225790775608, -1.0004169272643102058, 0.050020846363215510290),
            residuals: [
                (TORSION_PRODUCT, 0.733718865444081475539338398908),
                (LINEAR_CURVATURE_RELATION, 0.422298032834342530597337607347),
                (ANGLE_RATE_CURVATURE, 2.0),
                (PARTNER_TORSION_COMBINATION, 1.70315366622555656996226178696),
                (CURVATURE_PROJECTION, 1.70392954983328860159428637360),
                (TORSION_PROJECTION, 0.0514654258524305872651302625026),
                (TORSION_SQUARE, 2.99917014526283718500474053649),
                (TORSION_SQUARE_LITERAL, 1.73122095283171447853218687800),
                (INDICATRIX_CURVATURE, 0.00166875333401080198615762315101),
                (INDICATRIX_TORSION, 0.0789003954761108980934676574414),
                (MU_CONSTANCY, 0.0),
            ],
        },
        _ => unreachable!(),
    }
}
