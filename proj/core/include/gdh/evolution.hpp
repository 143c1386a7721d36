#pragma once

#include <limits>
#include <span>
#include <vector>

#include "gdh/equilibrium.hpp"
#include "gdh/grid.hpp"
#include "gdh/model.hpp"

namespace gdh {

/// First-order IMEX step for u_t = -(A_Z - w) u + f(u):
///   (I + dt (A_Z - w)) u+ = u + dt f(u)
/// Diffusion and the delta are implicit (one tridiagonal solve, factored
/// once), the nonlinearity explicit. Dirichlet ends. The matrix is an
/// M-matrix at the default dt, so nonnegative data stay nonnegative.
class Stepper {
public:
    Stepper(const ModelParams& prm, const Grid& grid, double dt);

    void step(std::vector<double>& u) const; // in place
    const Grid& grid() const { return grid_; }
    double dt() const { return dt_; }

private:
    ModelParams prm_;
    Grid grid_;
    double dt_;
    std::vector<double> ldlD_; // LDL^T factors of I + dt (A_Z - w)
    std::vector<double> ldlL_;
    mutable std::vector<double> rhs_;
};

struct EvolutionConfig {
    Grid grid;
    double dt = 1e-3;
    double Tmax = 1.0;
    double blowThreshold = 1e6; // h-weighted L2 cap
    int recordEvery = 1;

    /// Optional reference state (e.g. the equilibrium): records deviation
    /// norms and enables the InstabilitySaturated terminal at deviationCap.
    std::vector<double> reference;
    double deviationCap = std::numeric_limits<double>::infinity();

    /// Optional h-orthonormal directions whose deviation components
    /// <u - reference, mode_k>_h are recorded (modal growth-rate fits).
    std::vector<std::vector<double>> modes;
};

enum class Terminal { Completed, Blowup, InstabilitySaturated };

struct EvolutionTrace {
    std::vector<double> times;
    std::vector<double> l2;     // h-weighted
    std::vector<double> h1z;    // energy-equivalent H1 norm
    std::vector<double> energy; // S
    std::vector<double> R;      // weighted mass, 0 when Z <= 0
    std::vector<double> deviation;            // empty without reference
    std::vector<std::vector<double>> modal;   // modal[k][record]
    std::vector<bool> positive; // min u >= -1e-10 max|u| at the record

    Terminal terminal = Terminal::Completed;
    double tDetect = 0.0;       // time of the last finite record
    std::vector<double> finalState;
};

std::vector<double> step(std::span<const double> u, const ModelParams& prm,
                         const EvolutionConfig& config);

/// Repeated stepping with trace recording; terminates at Tmax, at the
/// blow-up threshold, on non-finite values (recorded as a Blowup terminal,
/// not an error), or at deviationCap.
EvolutionTrace simulate(std::vector<double> g, const ModelParams& prm,
                        const EvolutionConfig& config);

/// Trapezoidal quadrature of u e^{-Z|x|/2} (Dirichlet ends). Requires Z > 0.
double weighted_R(std::span<const double> u, double Z, const Grid& grid);

/// Discrete S(u) = h sum[(Du)^2/2 - w u^2/2 - a P(u)/(p+1) - b Q(u)/(2p)]
/// - Z u(0)^2/2 with P(u) = u sigma_p(u), Q(u) = u sigma_{2p-1}(u); the
/// scheme is the h-weighted L2 gradient flow of S up to the explicit
/// nonlinearity, so S decreases along non-blow-up traces.
double energy_S(std::span<const double> u, const ModelParams& prm, const Grid& grid);

/// Energy-equivalent H1 norm: sqrt(h sum (Du)^2 + (-w + a1) h sum u^2
/// - Z u(0)^2) with a1 = max(0, Z^2/4 + w) + 1.
double h1z_norm(std::span<const double> u, const ModelParams& prm, const Grid& grid);

/// Constants of the weighted-mass differential inequality
///   lambda R + beta R^p + gamma R^{2p-1} <= R'
/// for Z > 0, a,b > 0: lambda = w + Z^2/4 < 0 and the Hoelder constants
/// beta = a (Z/4)^{p-1}, gamma = b (Z/4)^{2(p-1)} (= a ||Psi||_1^{1-p} and
/// b ||Psi||_1^{2(1-p)} with ||Psi||_1 = 4/Z). R1 is the positive root of
/// lambda + beta y + gamma y^2 in y = R^{p-1}; initial weighted mass above
/// R1 forces blow-up no later than Tbound(R0) = int_{R0}^inf ds / h(s).
struct BlowupCertificate {
    double lambda = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double z1 = 0.0;
    double R1 = 0.0;
    double R0 = 0.0;
    double Tbound = std::numeric_limits<double>::infinity();
    bool finite = false; // false when R0 <= R1

    double hOf(double s) const; // lambda s + beta s^p + gamma s^{2p-1}
};

BlowupCertificate blowup_certificate(const ModelParams& prm, double R0);

struct SlackReport {
    double minSlack = 0.0;  // min over records of R' - h(R)
    double tolSlack = 0.0;  // 1e-2 max|R'|
    bool positivityLost = false;
    int recordsChecked = 0;
};

/// Centered-difference R' against the certificate's h(R) over the records
/// where positivity held.
SlackReport check_R_inequality(const EvolutionTrace& trace, const BlowupCertificate& cert);

/// Least-squares slope of log||u - phi|| over the records with deviation in
/// [10 eps, 1e-2 ||phi||] (eps = initial deviation). Matches the largest
/// eigenvalue of L_Z within 5%. Throws WindowTooShort below 10 records.
double growth_rate(const EvolutionTrace& trace, const EquilibriumProfile& profile);

/// Same fit on the k-th recorded modal amplitude; resolves subdominant
/// unstable directions that the norm-based fit cannot (the leading mode is
/// reseeded at O(eps^2) by the nonlinearity and overtakes the norm window).
double growth_rate_modal(const EvolutionTrace& trace, std::size_t k,
                         const EquilibriumProfile& profile);

/// Slope of log(deviation) from the start until the deviation first stops
/// decreasing; the honest window for perturbations along stable directions.
double decay_slope(const EvolutionTrace& trace);

} // namespace gdh
