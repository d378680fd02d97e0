#pragma once

#include <Eigen/Dense>

#include "metastab/measure.hpp"
#include "metastab/operators.hpp"

namespace metastab {

// Dominant eigenpairs, sorted by descending real part (ties: ascending
// imaginary part, then the flat index of the eigenvector peak).
// Eigenvectors have unit discrete weighted 2-norm and the entry of largest
// magnitude is rotated to the positive real axis, so output is deterministic.
struct SpectrumResult {
    OperatorKind kind = OperatorKind::Generator;
    double t = 0.0;
    Eigen::VectorXcd eigenvalues;
    Eigen::MatrixXcd eigenvectors_nodal;     // one column per eigenpair
    Eigen::MatrixXcd eigenvectors_weighted;  // nodal values times f_Q (Lebesgue representation)
    Eigen::VectorXd residuals;               // ||A v - lambda v||_2 per pair

    // element data the eigenvectors refer to
    Eigen::MatrixXd coords;
    Eigen::VectorXd weights;
    Eigen::VectorXd f_q;

    int n_pairs() const { return static_cast<int>(eigenvalues.size()); }
};

// Top-k eigenpairs of a collocation operator. Generator/Taylor/Exponential
// matrices are similarity-transformed with W = diag(sqrt(w)) first, which
// makes them symmetric up to the spectral discretization remainder; the
// symmetric part is then solved and eigenvectors are mapped back.
SpectrumResult solve_spectrum(const OperatorMatrix& op, int k, const NodalMeasure& nodal);

// Relative symmetrization defect ||W A W^-1 - (W A W^-1)^T||_F / ||A||_F.
double symmetrization_defect(const Eigen::MatrixXd& matrix, const Eigen::VectorXd& weights);

// Shared by the Ulam path: top-k right eigenpairs of a general real matrix
// with the same ordering/normalization conventions.
SpectrumResult solve_general_spectrum(const Eigen::MatrixXd& matrix, int k,
                                      const NodalMeasure& nodal, OperatorKind kind, double t);

}  // namespace metastab
