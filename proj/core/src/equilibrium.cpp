#include "gdh/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gdh/defaults.hpp"
#include "gdh/io.hpp"

namespace gdh {

namespace {

double theta(const ModelParams& prm) { return (prm.p - 1.0) * prm.kappa(); }

double ampA(const ModelParams& prm) {
    return std::sqrt(prm.alpha() * prm.alpha() - prm.betaQ() * prm.w);
}

// log(alpha + A cosh(u)) without overflow; exact rewrite through e^{-|u|}.
double log_denominator(double u, double alpha, double A) {
    const double au = std::abs(u);
    if (au < 30.0) return std::log(alpha + A * std::cosh(u));
    const double em = std::exp(-au);
    return au + std::log(A / 2.0 * (1.0 + em * em) + alpha * em);
}

} // namespace

double R_of(double s, const ModelParams& prm) {
    const double alpha = prm.alpha();
    const double A = ampA(prm);
    const double u = theta(prm) * s;
    const double au = std::abs(u);
    if (au < 30.0) {
        return A * std::sinh(u) / (alpha + A * std::cosh(u));
    }
    const double em = std::exp(-au);
    const double sgn = u > 0.0 ? 1.0 : -1.0;
    return sgn * A * (1.0 - em * em) / (A * (1.0 + em * em) + 2.0 * alpha * em);
}

namespace {

// dR/ds = theta A (alpha cosh u + A) / (alpha + A cosh u)^2
double R_prime(double s, const ModelParams& prm) {
    const double alpha = prm.alpha();
    const double A = ampA(prm);
    const double u = theta(prm) * s;
    const double au = std::abs(u);
    if (au < 30.0) {
        const double den = alpha + A * std::cosh(u);
        return theta(prm) * A * (alpha * std::cosh(u) + A) / (den * den);
    }
    // far out: R' ~ theta * 4 alpha A e^{-|u|} / A^2-ish; assemble via logs
    const double em = std::exp(-au);
    const double ch = (1.0 + em * em) / (2.0 * em); // cosh(u) * e^{-|u|} / e^{-|u|}... kept scaled:
    // work with t = e^{-|u|}: den = e^{|u|} (A(1+t^2)/2 + alpha t), num = alpha cosh u + A
    const double denScaled = A * (1.0 + em * em) / 2.0 + alpha * em; // den * e^{-|u|}
    const double numScaled = alpha * (1.0 + em * em) / 2.0 + A * em; // num * e^{-|u|}
    (void)ch;
    return theta(prm) * A * numScaled * em / (denScaled * denScaled);
}

} // namespace

ShiftSolve solve_shift(const ModelParams& prm) {
    const Regime regime = validate(prm); // guarantees |Z| < 2 sqrt(-w)
    (void)regime;
    const double r = -prm.Z / (2.0 * prm.kappa());
    ShiftSolve out;
    out.target = r;
    if (r == 0.0) {
        out.s = 0.0;
        out.residual = 0.0;
        return out;
    }
    const double alpha = prm.alpha();
    const double A = ampA(prm);
    // A sinh u - r A cosh u = r alpha  =>  u = artanh(r) + asinh(r alpha / (A sqrt(1-r^2)))
    const double u = std::atanh(r) + std::asinh(r * alpha / (A * std::sqrt(1.0 - r * r)));
    out.s = u / theta(prm);
    out.residual = std::abs(R_of(out.s, prm) - r);
    if (std::abs(r) > defaults::shift_newton_cutover ||
        out.residual > defaults::shift_residual_tol * std::max(1.0, std::abs(r))) {
        out.method = ShiftSolve::Method::Newton;
        for (int it = 0; it < 50; ++it) {
            const double g = R_of(out.s, prm) - r;
            if (std::abs(g) <= 1e-15 * std::max(1.0, std::abs(r))) break;
            const double gp = R_prime(out.s, prm);
            if (gp <= 0.0) break;
            out.s -= g / gp;
        }
        out.residual = std::abs(R_of(out.s, prm) - r);
        if (out.residual > defaults::shift_residual_tol * std::max(1.0, std::abs(r)))
            throw NoConvergence("solve_shift: Newton refinement stalled, residual " +
                                format_real(out.residual));
    }
    return out;
}

EquilibriumProfile::EquilibriumProfile(const ModelParams& prm, Regime regime, ShiftSolve solve)
    : prm_(prm), regime_(regime), solve_(solve), amp_(ampA(prm)) {
    peak_ = value(0.0);
}

EquilibriumProfile EquilibriumProfile::build(const ModelParams& prm) {
    Regime regime = validate(prm);
    ShiftSolve solve = solve_shift(prm);
    return EquilibriumProfile(prm, regime, solve);
}

double EquilibriumProfile::unshifted(double xi) const {
    const double u = theta(prm_) * xi;
    const double logden = log_denominator(u, prm_.alpha(), amp_);
    return std::exp((std::log(-prm_.w) - logden) / (prm_.p - 1.0));
}

double EquilibriumProfile::value(double x) const {
    return unshifted(std::abs(x) - solve_.s);
}

double EquilibriumProfile::derivative(double x) const {
    // d/dx phi(|x|-s) = sgn(x) phi'(|x|-s), phi'(xi) = -kappa R(xi) phi(xi);
    // signbit distinguishes +-0 for the one-sided limits at the origin.
    const double sgn = std::signbit(x) ? -1.0 : 1.0;
    const double xi = std::abs(x) - solve_.s;
    return sgn * (-prm_.kappa()) * R_of(xi, prm_) * unshifted(xi);
}

std::vector<double> EquilibriumProfile::samples(const Grid& grid) const {
    std::vector<double> out(grid.interior());
    for (int i = 0; i < grid.interior(); ++i) out[i] = value(grid.interiorNode(i));
    return out;
}

std::vector<double> EquilibriumProfile::derivativeSamples(const Grid& grid) const {
    std::vector<double> out(grid.interior());
    for (int i = 0; i < grid.interior(); ++i) out[i] = derivative(grid.interiorNode(i));
    return out;
}

double stationary_residual(const EquilibriumProfile& profile, std::span<const double> xs,
                           double hFd) {
    const ModelParams& prm = profile.params();
    double worst = 0.0;
    for (double x : xs) {
        if (std::abs(x) <= 2.0 * hFd)
            throw std::invalid_argument("stationary_residual: stencil would cross the origin");
        const double pm2 = profile.value(x - 2.0 * hFd);
        const double pm1 = profile.value(x - hFd);
        const double p0 = profile.value(x);
        const double pp1 = profile.value(x + hFd);
        const double pp2 = profile.value(x + 2.0 * hFd);
        const double d2 = (-pm2 + 16.0 * pm1 - 30.0 * p0 + 16.0 * pp1 - pp2) / (12.0 * hFd * hFd);
        worst = std::max(worst, std::abs(d2 + prm.w * p0 + prm.f(p0)));
    }
    return worst;
}

double first_integral_residual(const EquilibriumProfile& profile, std::span<const double> xs) {
    const ModelParams& prm = profile.params();
    double worst = 0.0;
    for (double x : xs) {
        const double v = profile.value(x);
        const double d = profile.derivative(x);
        const double r = d * d + 2.0 * prm.potentialF(v);
        worst = std::max(worst, std::abs(r) / (d * d));
    }
    return worst;
}

double jump_residual(const EquilibriumProfile& profile) {
    const double dPlus = profile.derivative(+0.0);
    const double dMinus = profile.derivative(-0.0);
    const double Z = profile.params().Z;
    const double phi0 = profile.peak();
    const double denom = (Z != 0.0 ? std::abs(Z) : profile.kappa()) * phi0;
    return std::abs(dPlus - dMinus + Z * phi0) / denom;
}

double b0_profile_at(double x, const ModelParams& prm) {
    if (prm.b != 0.0) throw std::invalid_argument("b0_profile_at: requires b = 0");
    validate(prm);
    const double kap = prm.kappa();
    const double base = (prm.p + 1.0) * (-prm.w) / (2.0 * prm.a);
    const double arg = (prm.p - 1.0) * kap * std::abs(x) / 2.0 + std::atanh(prm.Z / (2.0 * kap));
    const double aarg = std::abs(arg);
    // sech^2 via logs once cosh would lose range
    double logSech2;
    if (aarg < 20.0) {
        logSech2 = -2.0 * std::log(std::cosh(arg));
    } else {
        const double em = std::exp(-2.0 * aarg);
        logSech2 = 2.0 * (std::log(2.0) - aarg - std::log1p(em));
    }
    return std::exp((std::log(base) + logSech2) / (prm.p - 1.0));
}

namespace {

struct Ode2State {
    double y;  // phi
    double dy; // phi'
};

// One RK4 step of y'' = -w y - f(y), downward step h < 0.
Ode2State rk4_step(const Ode2State& st, double h, const ModelParams& prm) {
    auto acc = [&prm](const Ode2State& s) { return -prm.w * s.y - prm.f(s.y); };
    const double k1y = st.dy, k1v = acc(st);
    const Ode2State s2{st.y + 0.5 * h * k1y, st.dy + 0.5 * h * k1v};
    const double k2y = s2.dy, k2v = acc(s2);
    const Ode2State s3{st.y + 0.5 * h * k2y, st.dy + 0.5 * h * k2v};
    const double k3y = s3.dy, k3v = acc(s3);
    const Ode2State s4{st.y + h * k3y, st.dy + h * k3v};
    const double k4y = s4.dy, k4v = acc(s4);
    return {st.y + h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y),
            st.dy + h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v)};
}

// Integrate from xFar down to 0; optionally record at the sample grid
// xs[j] = j * L / nOut (descending fill).
Ode2State integrate_down(double tailAmp, double xFar, double L, int nOut, double hOde,
                         const ModelParams& prm, ShootingResult* record) {
    const double kap = prm.kappa();
    Ode2State st{tailAmp * std::exp(-kap * xFar), -kap * tailAmp * std::exp(-kap * xFar)};
    const double dxOut = L / nOut;
    int nextSample = nOut; // first sample at x = L
    double x = xFar;
    auto recordAt = [&](int j, const Ode2State& s) {
        if (!record) return;
        record->xs[j] = j * dxOut;
        record->phi[j] = s.y;
        record->phiPrime[j] = s.dy;
    };
    while (nextSample >= 0) {
        const double xTarget = nextSample * dxOut;
        const double span = x - xTarget;
        const int nSteps = std::max(1, static_cast<int>(std::ceil(span / hOde)));
        const double h = -span / nSteps;
        for (int i = 0; i < nSteps; ++i) st = rk4_step(st, h, prm);
        x = xTarget;
        recordAt(nextSample, st);
        --nextSample;
    }
    return st;
}

} // namespace

ShootingResult shooting_oracle(const ModelParams& prm, double L, double tol) {
    const EquilibriumProfile closedForm = EquilibriumProfile::build(prm); // validates regime
    const double kap = prm.kappa();
    const double xFar = L + 12.0 / kap;
    // closed-form tail coefficient of phi(x - s): (-2w/A)^{1/(p-1)} e^{kappa s}
    const double cTail = std::pow(-2.0 * prm.w / closedForm.amp(), 1.0 / (prm.p - 1.0)) *
                         std::exp(kap * closedForm.shift());
    const double hOde = std::min(5e-4, tol); // RK4 global error ~ h^4, far below tol

    auto criterion = [&](double T) {
        const Ode2State at0 = integrate_down(T, xFar, L, 600, hOde, prm, nullptr);
        return at0.dy + prm.Z / 2.0 * at0.y;
    };

    double lo = 0.1 * cTail, hi = 10.0 * cTail;
    double gLo = criterion(lo), gHi = criterion(hi);
    if (std::signbit(gLo) == std::signbit(gHi)) {
        throw NoConvergence("shooting_oracle: no sign change on bracket [" + format_real(lo) +
                            ", " + format_real(hi) + "], criterion [" + format_real(gLo) + ", " +
                            format_real(gHi) + "]");
    }
    for (int it = 0; it < 90 && (hi - lo) > 1e-16 * cTail; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double gMid = criterion(mid);
        if (gMid == 0.0) {
            lo = hi = mid;
            break;
        }
        if (std::signbit(gMid) == std::signbit(gLo)) {
            lo = mid;
            gLo = gMid;
        } else {
            hi = mid;
        }
    }
    const double tailAmp = 0.5 * (lo + hi);
    ShootingResult out;
    out.tailAmplitude = tailAmp;
    out.xs.resize(601);
    out.phi.resize(601);
    out.phiPrime.resize(601);
    integrate_down(tailAmp, xFar, L, 600, hOde, prm, &out);
    return out;
}

} // namespace gdh
