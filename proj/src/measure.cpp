#include "metastab/measure.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace metastab {

namespace {

// 8-point Gauss-Legendre rule on [-1, 1]
constexpr int kGlPoints = 8;
constexpr double kGlNode[kGlPoints] = {
    -0.9602898564975363, -0.7966664774136267, -0.5255324099163290, -0.1834346424956498,
    0.1834346424956498,  0.5255324099163290,  0.7966664774136267,  0.9602898564975363};
constexpr double kGlWeight[kGlPoints] = {
    0.1012285362903763, 0.2223810344533745, 0.3137066458778873, 0.3626837833783620,
    0.3626837833783620, 0.3137066458778873, 0.2223810344533745, 0.1012285362903763};

int default_points_per_axis(int dim) {
    switch (dim) {
        case 1: return 4096;
        case 2: return 512;
        default: return 64;
    }
}

}  // namespace

CanonicalMeasure::CanonicalMeasure(const PotentialSpec& spec, double beta, int quad_points_per_axis)
    : spec_(spec), compiled_(spec), beta_(beta) {
    if (!(beta > 0.0)) throw std::invalid_argument("CanonicalMeasure: beta must be > 0");
    const int n = quad_points_per_axis > 0 ? quad_points_per_axis : default_points_per_axis(spec.dim);
    z_q_ = partition_function_at(n);
    if (!(z_q_ > 0.0) || !std::isfinite(z_q_))
        throw std::runtime_error("CanonicalMeasure: partition function is not positive/finite");
}

double CanonicalMeasure::boltzmann_weight(const double* q) const {
    return std::exp(-beta_ * compiled_.value(q));
}

double CanonicalMeasure::partition_function_at(int points_per_axis) const {
    if (points_per_axis < 2)
        throw std::invalid_argument("partition_function_at: need at least 2 points per axis");
    const int d = compiled_.dim();
    const double h = 1.0 / points_per_axis;
    std::vector<double> q(d, 0.0);
    std::vector<int> idx(d, 0);
    double sum = 0.0;
    const long total = static_cast<long>(std::pow(static_cast<double>(points_per_axis), d));
    for (long it = 0; it < total; ++it) {
        for (int a = 0; a < d; ++a) q[a] = idx[a] * h;
        sum += boltzmann_weight(q.data());
        for (int a = 0; a < d; ++a) {
            if (++idx[a] < points_per_axis) break;
            idx[a] = 0;
        }
    }
    return sum * std::pow(h, d);
}

double CanonicalMeasure::box_weight_integral(const Eigen::VectorXd& lo, const Eigen::VectorXd& hi) const {
    const int d = compiled_.dim();
    if (lo.size() != d || hi.size() != d)
        throw std::invalid_argument("box_weight_integral: box dimension mismatch");
    std::vector<double> q(d, 0.0);
    std::vector<int> idx(d, 0);
    double sum = 0.0;
    long total = 1;
    for (int a = 0; a < d; ++a) total *= kGlPoints;
    for (long it = 0; it < total; ++it) {
        double w = 1.0;
        for (int a = 0; a < d; ++a) {
            const double half = 0.5 * (hi[a] - lo[a]);
            q[a] = lo[a] + half * (1.0 + kGlNode[idx[a]]);
            w *= half * kGlWeight[idx[a]];
        }
        sum += w * boltzmann_weight(q.data());
        for (int a = 0; a < d; ++a) {
            if (++idx[a] < kGlPoints) break;
            idx[a] = 0;
        }
    }
    return sum;
}

double CanonicalMeasure::box_mass(const Eigen::VectorXd& lo, const Eigen::VectorXd& hi) const {
    return box_weight_integral(lo, hi) / z_q_;
}

}  // namespace metastab
