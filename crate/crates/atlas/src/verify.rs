use classify::{dolgachev_numbers, template, DeformationClass};
use grading::wpl_grading;
use mftwo::{koszul_mf, singularity_from_mf, CompleteIntersection, Convention, MF2};
use polycore::{
    det2, rat, substitute, wpl_vars, MonomialMap, MultiPoly, Rational, WplPresentation,
};

use crate::cases::{instantiate, CaseId, CaseInstance, XYZ};
use crate::AtlasError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub case: CaseId,
    pub p: [u32; 3],
    pub m: u32,
    pub lambdas: Vec<Rational>,
    /// Dolgachev numbers of the deformation.
    pub signature: Vec<u32>,
    /// Signature of the target weighted projective line.
    pub enlarged: Vec<u32>,
    pub index: usize,
    pub instance: CaseInstance,
    pub equations: Vec<MultiPoly>,
    /// Parameters of the target line under which both equations vanish.
    pub lambda_tilde: Option<Vec<Rational>>,
    /// Normal forms of the images of the equations: for `lambda_tilde` when
    /// found, for the source λ otherwise.
    pub residues: Vec<MultiPoly>,
}

impl VerificationReport {
    pub fn success(&self) -> bool {
        self.lambda_tilde.is_some()
    }
}

/// The factorization `q₁ = M` of a case instance, with `f = det M`.
pub fn case_mf(inst: &CaseInstance) -> Result<MF2, AtlasError> {
    let m = &inst.matrix;
    let f = template(inst.case.kind(), inst.p, inst.m, &inst.lambdas, &XYZ);
    let det = det2(m);
    if det != f && det != -&f {
        return Err(AtlasError::Determinant {
            case: inst.case,
            det: det.to_string(),
            f: f.to_string(),
        });
    }
    Ok(koszul_mf(&m[0][0], &m[0][1], &m[1][1], &-&m[1][0])?)
}

fn permutations<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head.clone());
            out.push(tail);
        }
    }
    out
}

fn image_map(inst: &CaseInstance, ci: &CompleteIntersection) -> MonomialMap {
    let xs = wpl_vars(inst.m as usize + 2);
    let mut map = MonomialMap::new(&xs);
    let names = ["x", "y", "z", ci.w.as_str()];
    for (name, e) in names.iter().zip(&inst.mapping) {
        map = map.assign(name, rat(1), e.clone());
    }
    map
}

/// Every term of each equation must map into one class of `L(Ã)`.
fn check_homogeneous(
    inst: &CaseInstance,
    ci: &CompleteIntersection,
    enlarged: &[u32],
) -> Result<(), AtlasError> {
    let g = wpl_grading(enlarged)?;
    let names = ["x", "y", "z", ci.w.as_str()];
    let idx: Vec<usize> = ci
        .vars
        .iter()
        .map(|v| names.iter().position(|n| n == v).expect("known variable"))
        .collect();
    for (k, eq) in ci.equations.iter().enumerate() {
        let mut classes = eq.terms().map(|(e, _)| {
            let mut v = vec![0i64; enlarged.len()];
            for (j, &a) in e.iter().enumerate() {
                for (t, x) in v.iter_mut().zip(&inst.mapping[idx[j]]) {
                    *t += i64::from(a) * x;
                }
            }
            g.class_of(&v)
        });
        if let Some(first) = classes.next() {
            if classes.any(|c| c != first) {
                return Err(AtlasError::InhomogeneousMapping {
                    case: inst.case,
                    equation: k + 1,
                });
            }
        }
    }
    Ok(())
}

/// Checks that the mapping of `inst` sends each equation of its complete
/// intersection into a single degree of `L(enlarged)`.
pub fn mapping_homogeneous(inst: &CaseInstance, enlarged: &[u32]) -> Result<(), AtlasError> {
    let ci = singularity_from_mf(&case_mf(inst)?, Convention::Q1);
    check_homogeneous(inst, &ci, enlarged)
}

/// Instantiates the case, checks the factorization and the homogeneity of
/// the mapping, then searches the parameters of the enlarged weighted
/// projective line under which both equations reduce to zero.
pub fn theorem_verify(
    case: CaseId,
    p: [u32; 3],
    m: u32,
    lambdas: &[Rational],
    arm: Option<usize>,
) -> Result<VerificationReport, AtlasError> {
    if !case.condition_holds(p, m)? {
        return Err(AtlasError::ConditionFails { case, p, m });
    }
    let inst = instantiate(case, p, m, lambdas, arm)?;
    let mf = case_mf(&inst)?;
    let ci = singularity_from_mf(&mf, Convention::Q1);
    let class = DeformationClass::new(case.kind(), p, m, lambdas.to_vec())?;
    let signature = dolgachev_numbers(&class)?.alphas().to_vec();
    let mut enlarged = signature.clone();
    enlarged[inst.index - 1] += 1;
    check_homogeneous(&inst, &ci, &enlarged)?;
    let map = image_map(&inst, &ci);
    let images = ci
        .equations
        .iter()
        .map(|e| substitute(e, &map))
        .collect::<Result<Vec<_>, _>>()?;
    let residues_for = |l: &[Rational]| -> Result<Vec<MultiPoly>, AtlasError> {
        let w = WplPresentation::new(enlarged.clone(), l.to_vec())?;
        Ok(images.iter().map(|e| w.normal_form(e)).collect())
    };
    let mut report = VerificationReport {
        case,
        p,
        m,
        lambdas: lambdas.to_vec(),
        signature,
        enlarged: enlarged.clone(),
        index: inst.index,
        instance: inst.clone(),
        equations: ci.equations.clone(),
        lambda_tilde: None,
        residues: residues_for(lambdas)?,
    };
    for cand in permutations(lambdas) {
        let res = residues_for(&cand)?;
        if res.iter().all(MultiPoly::is_zero) {
            report.lambda_tilde = Some(cand);
            report.residues = res;
            return Ok(report);
        }
    }
    Err(AtlasError::ResidueNonzero(Box::new(report)))
}

/// Verification with `λ = (1, 2, …, m)`.
pub fn theorem_verify_default(
    case: CaseId,
    p: [u32; 3],
    m: u32,
) -> Result<VerificationReport, AtlasError> {
    let lambdas: Vec<Rational> = (1..=i64::from(m)).map(rat).collect();
    theorem_verify(case, p, m, &lambdas, None)
}
