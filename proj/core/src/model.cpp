#include "gdh/model.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "gdh/io.hpp"

namespace gdh {

namespace {

// sigma_q(u) = |u|^{q-1} u, the odd extension of u^q.
double sigma(double u, double q) {
    if (u == 0.0) return 0.0;
    return std::pow(std::abs(u), q - 1.0) * u;
}

} // namespace

double ModelParams::f(double u) const {
    return a * sigma(u, p) + b * sigma(u, 2.0 * p - 1.0);
}

double ModelParams::f1(double u) const {
    const double au = std::abs(u);
    return a * p * std::pow(au, p - 1.0) + b * (2.0 * p - 1.0) * std::pow(au, 2.0 * p - 2.0);
}

double ModelParams::f2(double u) const {
    if (u == 0.0) {
        if (p < 2.0) return std::numeric_limits<double>::quiet_NaN();
        return 0.0;
    }
    const double au = std::abs(u);
    const double sgn = u > 0.0 ? 1.0 : -1.0;
    return sgn * (a * p * (p - 1.0) * std::pow(au, p - 2.0)
                  + b * (2.0 * p - 1.0) * (2.0 * p - 2.0) * std::pow(au, 2.0 * p - 3.0));
}

double ModelParams::potentialF(double s) const {
    return w * s * s / 2.0 + a * std::pow(s, p + 1.0) / (p + 1.0)
           + b * std::pow(s, 2.0 * p) / (2.0 * p);
}

const char* to_string(RegimeTag tag) {
    switch (tag) {
        case RegimeTag::PositiveB: return "PositiveB";
        case RegimeTag::NegativeB: return "NegativeB";
        case RegimeTag::ZeroB: return "ZeroB";
    }
    return "?";
}

double negative_b_upper_bound(const ModelParams& prm) {
    // -p a^2/((p+1)^2 b), divide-first for extreme magnitudes
    const double r = prm.a / (prm.p + 1.0);
    return -(r * (prm.a / (prm.p + 1.0)) / prm.b) * prm.p;
}

Regime validate(const ModelParams& prm) {
    if (!(prm.p > 1.0)) throw RegimeViolation("p <= 1");
    if (!(prm.a > 0.0)) throw RegimeViolation("a <= 0");
    const double minusW = -prm.w;
    const double lower = prm.Z * prm.Z / 4.0;
    if (!(lower < minusW)) throw RegimeViolation("Z^2/4 >= -w");

    if (prm.b > 0.0) return {RegimeTag::PositiveB, lower, std::nullopt};
    if (prm.b == 0.0) return {RegimeTag::ZeroB, lower, std::nullopt};

    const double upper = negative_b_upper_bound(prm);
    if (!(minusW < upper)) {
        throw RegimeViolation("-w >= " + format_real(upper));
    }
    return {RegimeTag::NegativeB, lower, upper};
}

ModelParams from_huxley(double beta1, double gamma1, double p) {
    if (!(beta1 > 0.0)) throw std::invalid_argument("from_huxley: beta1 must be > 0");
    if (!(gamma1 > 0.0 && gamma1 < 1.0))
        throw std::invalid_argument("from_huxley: gamma1 must be in (0,1)");
    ModelParams prm;
    prm.a = beta1 * (1.0 + gamma1);
    prm.b = -beta1;
    prm.w = -gamma1 * beta1;
    prm.Z = 0.0;
    prm.p = p;
    return prm;
}

} // namespace gdh
