#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "lftrack/errors.hpp"

namespace lftrack {

/// Protocol gains: estimator coupling gamma in (0,1) and control gain k > 0.
struct GainParameters {
    double gamma;
    double k;

    GainParameters(double gamma_, double k_) : gamma(gamma_), k(k_) {
        if (!(gamma > 0.0 && gamma < 1.0)) {
            throw ValidationError("gamma must lie in (0,1), got " + std::to_string(gamma_));
        }
        if (!(k > 0.0)) {
            throw ValidationError("k must be positive, got " + std::to_string(k_));
        }
    }
};

enum class CertificateMode { fixed, switching };

/// Outcome of the quadratic-form stability check at a chosen gain.
///
/// `q_min_eig` is the minimum eigenvalue of the symmetric matrix Q-tilde (the
/// decay form with the positive time-varying scalar factored out); the
/// certificate is valid exactly when it is positive, which happens exactly
/// when k > k_min.
struct GainCertificate {
    CertificateMode mode;
    std::optional<Eigen::MatrixXd> p_bar;   // fixed mode only
    std::optional<double> lambda_bar;       // switching mode only
    double k;
    double k_min;
    double q_min_eig;
    bool valid;
};

/// True iff every eigenvalue of H has real part above tolerance (1e-9).
bool positive_stability(const Eigen::MatrixXd& coupling);

/// Solve H^T P + P H = I for symmetric positive definite P by vectorizing the
/// unknown into a dense n^2 x n^2 linear system. Requires H positive stable.
Eigen::MatrixXd solve_lyapunov(const Eigen::MatrixXd& coupling);

/// Minimum over the given coupling matrices of the minimum eigenvalue of H + H^T.
double min_symmetric_eigenvalue(const std::vector<Eigen::MatrixXd>& couplings);

/// Fixed-topology gain bound: k_min = lambda_max(P) / (2 gamma (1 - gamma^2)).
double gain_bound_fixed(const Eigen::MatrixXd& p_bar, double gamma);

/// Switching-topology gain bound: k_min = 1 / (2 gamma (1 - gamma^2) lambda_bar).
/// Throws CertificateUnavailableError when lambda_bar <= 0.
double gain_bound_switching(double lambda_bar, double gamma);

/// Fixed-mode certificate: checks [[k(1-g^2) I, -P],[-P, 2 g P]] > 0.
GainCertificate verify_q_positive_definite(const GainParameters& params,
                                           const Eigen::MatrixXd& p_bar);

/// Switching-mode certificate: checks [[k(1-g^2)(H+H^T), -I],[-I, 2 g I]] > 0
/// for every topology; reports the worst (minimum) eigenvalue.
GainCertificate verify_q_positive_definite(const GainParameters& params,
                                           const std::vector<Eigen::MatrixXd>& couplings);

/// Minimum eigenvalue of a nominally-symmetric matrix; the input is
/// symmetrized as (M + M^T)/2 first to suppress round-off asymmetry.
double min_eigenvalue_symmetric(const Eigen::MatrixXd& m);
double max_eigenvalue_symmetric(const Eigen::MatrixXd& m);

} // namespace lftrack
