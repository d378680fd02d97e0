#pragma once

#include <Eigen/Dense>

#include "metastab/potential.hpp"

namespace metastab {

// Position marginal of the canonical ensemble: f_Q = exp(-beta V) / Z_Q on
// the torus. Z_Q comes from a uniform tensor-grid rule, which is the
// trapezoid rule on the torus and converges spectrally for smooth V.
class CanonicalMeasure {
public:
    CanonicalMeasure(const PotentialSpec& spec, double beta, int quad_points_per_axis = 0);

    int dim() const { return compiled_.dim(); }
    double beta() const { return beta_; }
    const CompiledPotential& compiled() const { return compiled_; }
    const PotentialSpec& spec() const { return spec_; }

    double boltzmann_weight(const double* q) const;  // exp(-beta V(q))
    double boltzmann_weight(const Eigen::VectorXd& q) const { return boltzmann_weight(q.data()); }
    double partition_function() const { return z_q_; }
    double density(const double* q) const { return boltzmann_weight(q) / z_q_; }
    double density(const Eigen::VectorXd& q) const { return density(q.data()); }

    // integral of f_Q over an axis-aligned box, per-axis 8-point
    // Gauss-Legendre panels
    double box_mass(const Eigen::VectorXd& lo, const Eigen::VectorXd& hi) const;

    // unnormalized version (integral of exp(-beta V))
    double box_weight_integral(const Eigen::VectorXd& lo, const Eigen::VectorXd& hi) const;

    // Z_Q recomputed at an explicit resolution (used by convergence tests).
    double partition_function_at(int points_per_axis) const;

private:
    PotentialSpec spec_;
    CompiledPotential compiled_;
    double beta_;
    double z_q_;
};

// Nodal data shared by spectrum/partition/bound computations: coordinates,
// normalized quadrature weights (discrete mu_Q) and f_Q values per element.
struct NodalMeasure {
    Eigen::MatrixXd coords;   // n_elements x dim
    Eigen::VectorXd weights;  // sums to 1
    Eigen::VectorXd f_q;      // continuum-normalized density at elements
};

}  // namespace metastab
