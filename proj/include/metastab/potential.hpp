#pragma once

#include <Eigen/Dense>

#include <vector>

namespace metastab {

// One cosine factor on one axis: cos(2*pi*freq*q - phase)^power.
// freq = 0 makes the factor a constant (the axis does not participate).
struct AxisFactor {
    int freq = 0;
    double phase = 0.0;
    int power = 1;
};

// coef * prod_i cos(2*pi*freq_i*q_i - phase_i)^power_i
struct TrigTerm {
    double coef = 0.0;
    std::vector<AxisFactor> axes;  // exactly dim entries
};

// Smooth 1-periodic potential on the unit torus [0,1)^dim, given as a
// trigonometric polynomial. Integer frequencies keep periodicity exact and
// gradients are available in closed form.
struct PotentialSpec {
    int dim = 1;
    double constant = 0.0;
    std::vector<TrigTerm> terms;

    void validate() const;
};

double eval_potential(const PotentialSpec& spec, const Eigen::VectorXd& q);
Eigen::VectorXd eval_gradient(const PotentialSpec& spec, const Eigen::VectorXd& q);

// 1 + 3cos(2 pi q) + 3cos^2(2 pi q) - cos^3(2 pi q), two wells separated by
// barriers at q = 0 and q = 0.5.
PotentialSpec builtin_double_well();

// Sum of two double-well axes plus a phase-shifted cross term
// cos(2 pi q2 - pi/3); four wells of different depth.
PotentialSpec builtin_four_well();

// Evaluator with per-axis trig factors deduplicated, for hot loops
// (integrators, samplers). Constant factors (freq == 0) are folded into the
// term coefficient at construction.
class CompiledPotential {
public:
    explicit CompiledPotential(const PotentialSpec& spec);

    int dim() const { return dim_; }

    // q must point to dim() coordinates; reduction mod 1 is done internally.
    double value(const double* q) const;
    void gradient(const double* q, double* grad) const;

    double value(const Eigen::VectorXd& q) const { return value(q.data()); }

private:
    struct Factor {
        int angle_index;  // into the flat angle table
        int axis;
        int power;
    };
    struct Term {
        double coef;
        int first_factor;
        int n_factors;
    };
    struct Angle {
        double two_pi_freq;
        double phase;
        int axis;
    };

    void eval_angles(const double* q, double* c, double* s) const;

    int dim_ = 1;
    double constant_ = 0.0;
    std::vector<Angle> angles_;
    std::vector<Factor> factors_;
    std::vector<Term> terms_;
    int max_angles_ = 0;
};

}  // namespace metastab
