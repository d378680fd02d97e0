#include "metastab/potential.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace metastab {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

inline double wrap_unit(double x) { return x - std::floor(x); }

inline double ipow(double base, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= base;
    return r;
}

void check_dim(const PotentialSpec& spec, const Eigen::VectorXd& q, const char* who) {
    if (q.size() != spec.dim)
        throw std::invalid_argument(std::string(who) + ": point has dimension " +
                                    std::to_string(q.size()) + ", potential has dimension " +
                                    std::to_string(spec.dim));
}

}  // namespace

void PotentialSpec::validate() const {
    if (dim < 1) throw std::invalid_argument("PotentialSpec: dim must be >= 1");
    for (std::size_t t = 0; t < terms.size(); ++t) {
        const TrigTerm& term = terms[t];
        if (static_cast<int>(term.axes.size()) != dim)
            throw std::invalid_argument("PotentialSpec: term " + std::to_string(t) + " has " +
                                        std::to_string(term.axes.size()) + " axis factors, expected " +
                                        std::to_string(dim));
        for (const AxisFactor& f : term.axes)
            if (f.power < 1)
                throw std::invalid_argument("PotentialSpec: term " + std::to_string(t) +
                                            ": power must be a positive integer");
    }
}

double eval_potential(const PotentialSpec& spec, const Eigen::VectorXd& q) {
    check_dim(spec, q, "eval_potential");
    double v = spec.constant;
    for (const TrigTerm& term : spec.terms) {
        double prod = term.coef;
        for (int a = 0; a < spec.dim; ++a) {
            const AxisFactor& f = term.axes[a];
            const double qa = wrap_unit(q[a]);
            prod *= ipow(std::cos(kTwoPi * f.freq * qa - f.phase), f.power);
        }
        v += prod;
    }
    return v;
}

Eigen::VectorXd eval_gradient(const PotentialSpec& spec, const Eigen::VectorXd& q) {
    check_dim(spec, q, "eval_gradient");
    Eigen::VectorXd g = Eigen::VectorXd::Zero(spec.dim);
    for (const TrigTerm& term : spec.terms) {
        for (int j = 0; j < spec.dim; ++j) {
            const AxisFactor& fj = term.axes[j];
            if (fj.freq == 0) continue;  // factor constant in q_j
            double d = term.coef;
            for (int a = 0; a < spec.dim; ++a) {
                const AxisFactor& f = term.axes[a];
                const double theta = kTwoPi * f.freq * wrap_unit(q[a]) - f.phase;
                const double c = std::cos(theta);
                if (a == j) {
                    // d/dq cos^p(theta(q)) = -p cos^{p-1} sin * 2 pi f
                    d *= static_cast<double>(f.power) * ipow(c, f.power - 1) *
                         (-std::sin(theta)) * kTwoPi * f.freq;
                } else {
                    d *= ipow(c, f.power);
                }
            }
            g[j] += d;
        }
    }
    return g;
}

namespace {

// the 1D double-well terms on a given axis of a dim-dimensional spec
void append_double_well_axis(PotentialSpec& spec, int axis) {
    const double coefs[3] = {3.0, 3.0, -1.0};
    for (int p = 1; p <= 3; ++p) {
        TrigTerm term;
        term.coef = coefs[p - 1];
        term.axes.assign(spec.dim, AxisFactor{0, 0.0, 1});
        term.axes[axis] = AxisFactor{1, 0.0, p};
        spec.terms.push_back(term);
    }
}

}  // namespace

PotentialSpec builtin_double_well() {
    PotentialSpec spec;
    spec.dim = 1;
    spec.constant = 1.0;
    append_double_well_axis(spec, 0);
    return spec;
}

PotentialSpec builtin_four_well() {
    PotentialSpec spec;
    spec.dim = 2;
    spec.constant = 2.0;
    append_double_well_axis(spec, 0);
    append_double_well_axis(spec, 1);
    TrigTerm cross;
    cross.coef = 1.0;
    cross.axes.assign(2, AxisFactor{0, 0.0, 1});
    cross.axes[1] = AxisFactor{1, M_PI / 3.0, 1};
    spec.terms.push_back(cross);
    return spec;
}

CompiledPotential::CompiledPotential(const PotentialSpec& spec) {
    spec.validate();
    dim_ = spec.dim;
    constant_ = spec.constant;
    for (const TrigTerm& term : spec.terms) {
        Term ct;
        ct.coef = term.coef;
        ct.first_factor = static_cast<int>(factors_.size());
        ct.n_factors = 0;
        for (int a = 0; a < dim_; ++a) {
            const AxisFactor& f = term.axes[a];
            if (f.freq == 0) {
                // constant factor, fold into the coefficient
                ct.coef *= ipow(std::cos(-f.phase), f.power);
                continue;
            }
            int idx = -1;
            for (std::size_t k = 0; k < angles_.size(); ++k) {
                if (angles_[k].axis == a && angles_[k].phase == f.phase &&
                    angles_[k].two_pi_freq == kTwoPi * f.freq) {
                    idx = static_cast<int>(k);
                    break;
                }
            }
            if (idx < 0) {
                idx = static_cast<int>(angles_.size());
                angles_.push_back(Angle{kTwoPi * f.freq, f.phase, a});
            }
            factors_.push_back(Factor{idx, a, f.power});
            ++ct.n_factors;
        }
        if (ct.n_factors == 0 && ct.coef == 0.0) continue;
        if (ct.n_factors == 0) {
            constant_ += ct.coef;
            continue;
        }
        terms_.push_back(ct);
    }
    max_angles_ = static_cast<int>(angles_.size());
}

void CompiledPotential::eval_angles(const double* q, double* c, double* s) const {
    for (std::size_t k = 0; k < angles_.size(); ++k) {
        const Angle& a = angles_[k];
        const double theta = a.two_pi_freq * wrap_unit(q[a.axis]) - a.phase;
        c[k] = std::cos(theta);
        s[k] = std::sin(theta);
    }
}

double CompiledPotential::value(const double* q) const {
    double c[16], s[16];
    std::vector<double> cbuf, sbuf;
    double* cp = c;
    double* sp = s;
    if (max_angles_ > 16) {
        cbuf.resize(max_angles_);
        sbuf.resize(max_angles_);
        cp = cbuf.data();
        sp = sbuf.data();
    }
    eval_angles(q, cp, sp);
    double v = constant_;
    for (const Term& t : terms_) {
        double prod = t.coef;
        for (int f = 0; f < t.n_factors; ++f) {
            const Factor& fac = factors_[t.first_factor + f];
            prod *= ipow(cp[fac.angle_index], fac.power);
        }
        v += prod;
    }
    return v;
}

void CompiledPotential::gradient(const double* q, double* grad) const {
    double c[16], s[16];
    std::vector<double> cbuf, sbuf;
    double* cp = c;
    double* sp = s;
    if (max_angles_ > 16) {
        cbuf.resize(max_angles_);
        sbuf.resize(max_angles_);
        cp = cbuf.data();
        sp = sbuf.data();
    }
    eval_angles(q, cp, sp);
    for (int a = 0; a < dim_; ++a) grad[a] = 0.0;
    for (const Term& t : terms_) {
        for (int fd = 0; fd < t.n_factors; ++fd) {
            const Factor& dfac = factors_[t.first_factor + fd];
            double d = t.coef;
            for (int f = 0; f < t.n_factors; ++f) {
                const Factor& fac = factors_[t.first_factor + f];
                if (f == fd) {
                    d *= static_cast<double>(fac.power) * ipow(cp[fac.angle_index], fac.power - 1) *
                         (-sp[fac.angle_index]) * angles_[fac.angle_index].two_pi_freq;
                } else {
                    d *= ipow(cp[fac.angle_index], fac.power);
                }
            }
            grad[dfac.axis] += d;
        }
    }
}

}  // namespace metastab
