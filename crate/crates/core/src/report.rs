use serde::Serialize;

use crate::linalg::{Matrix, Scalar};

/// One failed identity, evaluated on a basis tuple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: String,
    /// Basis indices of the input tuple, one per tensor leg of the domain.
    pub indices: Vec<usize>,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub pass: bool,
    pub violations: Vec<Violation>,
}

impl Default for AxiomReport {
    fn default() -> Self {
        AxiomReport::new()
    }
}

impl AxiomReport {
    pub fn new() -> Self {
        AxiomReport {
            pass: true,
            violations: Vec::new(),
        }
    }

    pub fn push(&mut self, v: Violation) {
        self.pass = false;
        self.violations.push(v);
    }

    /// Records a failure that has no basis witness (e.g. a non-invertible map).
    pub fn fail(&mut self, axiom: &str, detail: &str) {
        self.push(Violation {
            axiom: axiom.to_string(),
            indices: Vec::new(),
            lhs: vec![detail.to_string()],
            rhs: Vec::new(),
        });
    }

    pub fn merge(&mut self, other: AxiomReport) {
        for v in other.violations {
            self.push(v);
        }
    }

    pub fn is_pass(&self) -> bool {
        self.pass
    }

    /// Distinct names of the violated axioms, in first-seen order.
    pub fn failed_axioms(&self) -> Vec<&str> {
        let mut names: Vec<&str> = Vec::new();
        for v in &self.violations {
            if !names.contains(&v.axiom.as_str()) {
                names.push(&v.axiom);
            }
        }
        names
    }

    pub fn violates(&self, axiom: &str) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }

    pub fn summary(&self) -> String {
        if self.pass {
            "all axioms hold".to_string()
        } else {
            format!(
                "{} violation(s) of {}",
                self.violations.len(),
                self.failed_axioms().join(", ")
            )
        }
    }

    /// Compares two matrices of the same map column by column and records a
    /// violation for every input basis tuple where they differ. `dims` are the
    /// leg dimensions of the domain, used to decode column indices.
    pub fn check_equal(&mut self, axiom: &str, lhs: &Matrix, rhs: &Matrix, dims: &[usize]) {
        if lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols() {
            self.fail(
                axiom,
                &format!("shape {}x{} vs {}x{}", lhs.rows(), lhs.cols(), rhs.rows(), rhs.cols()),
            );
            return;
        }
        for c in 0..lhs.cols() {
            let l = lhs.column(c);
            let r = rhs.column(c);
            if l != r {
                self.push(Violation {
                    axiom: axiom.to_string(),
                    indices: decode_index(c, dims),
                    lhs: strings(&l),
                    rhs: strings(&r),
                });
            }
        }
    }
}

pub(crate) fn strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

/// Multi-index of flat position `i` over legs `dims`, major leg first.
pub fn decode_index(mut i: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for (slot, &d) in out.iter_mut().zip(dims).rev() {
        *slot = i % d.max(1);
        i /= d.max(1);
    }
    out
}
