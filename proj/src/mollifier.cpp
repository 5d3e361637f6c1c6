#include "sievekit/mollifier.hpp"

#include <cmath>
#include <sstream>

namespace skv {

namespace {

// integral of the quintic smoothstep 6v^5 - 15v^4 + 10v^3 from 0 to v
inline double smoothstep_int(double v) { return ((v - 3.0) * v + 2.5) * v * v * v * v; }
inline double smoothstep(double v) { return ((6.0 * v - 15.0) * v + 10.0) * v * v * v; }

}  // namespace

smooth_ramp::smooth_ramp(double delta) {
    if (!(delta > 0) || !(delta < 10.0)) throw domain_error("smooth_ramp: width out of range");
    c = 0.9 * delta / (1.0 + 0.9 * delta);
}

double smooth_ramp::value(double u) const {
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return 1.0;
    double s = 1.0 / (1.0 - c);
    if (u < c) return s * c * smoothstep_int(u / c);
    if (u <= 1.0 - c) return s * c * 0.5 + s * (u - c);
    return 1.0 - s * c * smoothstep_int((1.0 - u) / c);
}

double smooth_ramp::slope(double u) const {
    if (u <= 0.0 || u >= 1.0) return 0.0;
    double s = 1.0 / (1.0 - c);
    if (u < c) return s * smoothstep(u / c);
    if (u <= 1.0 - c) return s;
    return s * smoothstep((1.0 - u) / c);
}

mollifier::mollifier(int k, const sieve_params& p)
    : k_(k), p_(p), ramp1_(p.delta1), ramp2_(p.delta2), ramp3_(p.delta3) {
    if (k < 1 || k > 64) throw domain_error("mollifier: k out of range");
    if (!(p.delta2 < p.T) || !(p.delta3 < p.T - p.delta2))
        throw domain_error("mollifier: cutoff widths exceed [0, T]");
}

double mollifier::h1(const double* t) const {
    double s = 0.0;
    for (int j = 0; j < k_; ++j) s += t[j];
    return ramp1_.value((1.0 - s) / p_.delta1);
}

double mollifier::h2(double u) const {
    if (u <= 0.0 || u >= p_.T) return 0.0;
    if (u < p_.delta3) return ramp3_.value(u / p_.delta3);
    if (u > p_.T - p_.delta2) return ramp2_.value((p_.T - u) / p_.delta2);
    return 1.0;
}

double mollifier::h2_plateau(double u) const {
    if (u < 0.0 || u >= p_.T) return 0.0;
    if (u > p_.T - p_.delta2) return ramp2_.value((p_.T - u) / p_.delta2);
    return 1.0;
}

double mollifier::F(const double* t) const {
    double prod = h1(t);
    if (prod == 0.0) return 0.0;
    double sc = double(k_);
    for (int j = 0; j < k_; ++j) {
        prod *= h2(sc * t[j]) / (1.0 + sc * p_.A * t[j]);
        if (prod == 0.0) return 0.0;
    }
    return prod;
}

double mollifier::Fcirc(const double* t) const {
    double prod = 1.0;
    double sc = double(k_);
    for (int j = 0; j < k_; ++j) {
        double u = sc * t[j];
        if (u < 0.0 || u > p_.T) return 0.0;
        prod /= 1.0 + sc * p_.A * t[j];
    }
    return prod;
}

void mollifier::verify_ramp_bounds(int samples_per_ramp) const {
    struct probe {
        const smooth_ramp* r;
        double width;
        const char* what;
    } probes[] = {{&ramp1_, p_.delta1, "h1 simplex ramp"},
                  {&ramp2_, p_.delta2, "h2 upper ramp"},
                  {&ramp3_, p_.delta3, "h2 lower ramp"}};
    for (const auto& pr : probes) {
        double budget = 1.0 / pr.width + 1.0;
        for (int i = 0; i <= samples_per_ramp; ++i) {
            double u = double(i) / double(samples_per_ramp);
            double v = pr.r->value(u);
            double sl = pr.r->slope(u) / pr.width;
            if (!(v >= 0.0 && v <= 1.0) || !(std::abs(sl) <= budget)) {
                std::ostringstream os;
                os << "mollifier: " << pr.what << " violates bounds at u=" << u << " (value " << v
                   << ", slope " << sl << ", budget " << budget << ")";
                throw invariant_error(os.str());
            }
        }
    }
}

}  // namespace skv
