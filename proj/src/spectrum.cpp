#include "metastab/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace metastab {

namespace {

int peak_index(const Eigen::VectorXcd& v) {
    int best = 0;
    double best_mag = -1.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double m = std::abs(v[i]);
        if (m > best_mag) {
            best_mag = m;
            best = static_cast<int>(i);
        }
    }
    return best;
}

// weighted norm normalization + deterministic phase fixing
void canonicalize(Eigen::VectorXcd& v, const Eigen::VectorXd& weights) {
    double norm2 = 0.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) norm2 += weights[i] * std::norm(v[i]);
    if (norm2 > 0.0) v /= std::sqrt(norm2);
    const int p = peak_index(v);
    const std::complex<double> peak = v[p];
    const double mag = std::abs(peak);
    if (mag > 0.0) v *= std::conj(peak) / mag;
}

SpectrumResult assemble_result(const Eigen::VectorXcd& all_values, const Eigen::MatrixXcd& all_vectors,
                               const Eigen::MatrixXd& matrix, int k, const NodalMeasure& nodal,
                               OperatorKind kind, double t) {
    const Eigen::Index n = all_values.size();
    if (k < 1 || k > n)
        throw std::invalid_argument("solve_spectrum: k must be in [1, matrix size]");

    Eigen::MatrixXcd vectors = all_vectors;
    for (Eigen::Index j = 0; j < n; ++j) {
        Eigen::VectorXcd col = vectors.col(j);
        canonicalize(col, nodal.weights);
        vectors.col(j) = col;
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> peaks(n);
    for (Eigen::Index j = 0; j < n; ++j) peaks[j] = peak_index(vectors.col(j));
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const std::complex<double> la = all_values[a];
        const std::complex<double> lb = all_values[b];
        if (la.real() != lb.real()) return la.real() > lb.real();
        if (la.imag() != lb.imag()) return la.imag() < lb.imag();
        return peaks[a] < peaks[b];
    });

    SpectrumResult r;
    r.kind = kind;
    r.t = t;
    r.eigenvalues.resize(k);
    r.eigenvectors_nodal.resize(n, k);
    r.eigenvectors_weighted.resize(n, k);
    r.residuals.resize(k);
    for (int j = 0; j < k; ++j) {
        const int src = order[j];
        r.eigenvalues[j] = all_values[src];
        r.eigenvectors_nodal.col(j) = vectors.col(src);
        r.eigenvectors_weighted.col(j) =
            vectors.col(src).cwiseProduct(nodal.f_q.cast<std::complex<double>>());
        r.residuals[j] =
            (matrix.cast<std::complex<double>>() * vectors.col(src) - all_values[src] * vectors.col(src))
                .norm();
    }
    r.coords = nodal.coords;
    r.weights = nodal.weights;
    r.f_q = nodal.f_q;
    return r;
}

}  // namespace

double symmetrization_defect(const Eigen::MatrixXd& matrix, const Eigen::VectorXd& weights) {
    const Eigen::VectorXd w_sqrt = weights.cwiseSqrt();
    const Eigen::MatrixXd s =
        w_sqrt.asDiagonal() * matrix * w_sqrt.cwiseInverse().asDiagonal();
    return (s - s.transpose()).norm() / matrix.norm();
}

SpectrumResult solve_spectrum(const OperatorMatrix& op, int k, const NodalMeasure& nodal) {
    const Eigen::Index n = op.matrix.rows();
    if (nodal.weights.size() != n)
        throw std::invalid_argument("solve_spectrum: weights/matrix size mismatch");

    const bool symmetrizable = op.kind == OperatorKind::Generator ||
                               op.kind == OperatorKind::Taylor ||
                               op.kind == OperatorKind::Exponential;
    if (!symmetrizable) return solve_general_spectrum(op.matrix, k, nodal, op.kind, op.t);

    const Eigen::VectorXd w_sqrt = nodal.weights.cwiseSqrt();
    const Eigen::VectorXd w_sqrt_inv = w_sqrt.cwiseInverse();
    Eigen::MatrixXd s = w_sqrt.asDiagonal() * op.matrix * w_sqrt_inv.asDiagonal();
    s = 0.5 * (s + s.transpose()).eval();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(s);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("solve_spectrum: symmetric eigensolver failed to converge (info=" +
                                 std::to_string(static_cast<int>(solver.info())) + ", n=" +
                                 std::to_string(n) + ")");

    Eigen::VectorXcd values = solver.eigenvalues().cast<std::complex<double>>();
    Eigen::MatrixXcd vectors =
        (w_sqrt_inv.asDiagonal() * solver.eigenvectors()).cast<std::complex<double>>();
    return assemble_result(values, vectors, op.matrix, k, nodal, op.kind, op.t);
}

SpectrumResult solve_general_spectrum(const Eigen::MatrixXd& matrix, int k,
                                      const NodalMeasure& nodal, OperatorKind kind, double t) {
    if (nodal.weights.size() != matrix.rows())
        throw std::invalid_argument("solve_general_spectrum: weights/matrix size mismatch");
    Eigen::EigenSolver<Eigen::MatrixXd> solver(matrix);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("solve_general_spectrum: eigensolver failed to converge (info=" +
                                 std::to_string(static_cast<int>(solver.info())) + ", n=" +
                                 std::to_string(matrix.rows()) + ")");
    return assemble_result(solver.eigenvalues(), solver.eigenvectors(), matrix, k, nodal, kind, t);
}

}  // namespace metastab
