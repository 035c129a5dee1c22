#include "lftrack/spectral.hpp"

#include <string>

namespace lftrack {

namespace {
constexpr double kEigTol = 1e-9;

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> sym_eig(const Eigen::MatrixXd& m) {
    const Eigen::MatrixXd s = 0.5 * (m + m.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
        throw ValidationError("symmetric eigenvalue decomposition failed");
    }
    return es;
}
} // namespace

double min_eigenvalue_symmetric(const Eigen::MatrixXd& m) {
    return sym_eig(m).eigenvalues().minCoeff();
}

double max_eigenvalue_symmetric(const Eigen::MatrixXd& m) {
    return sym_eig(m).eigenvalues().maxCoeff();
}

bool positive_stability(const Eigen::MatrixXd& coupling) {
    if (coupling.rows() != coupling.cols()) {
        throw ValidationError("positive_stability requires a square matrix");
    }
    Eigen::EigenSolver<Eigen::MatrixXd> es(coupling, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success) {
        throw ValidationError("eigenvalue computation failed");
    }
    return (es.eigenvalues().real().array() > kEigTol).all();
}

Eigen::MatrixXd solve_lyapunov(const Eigen::MatrixXd& coupling) {
    if (!positive_stability(coupling)) {
        throw NotPositiveStableError(
            "Lyapunov solve requires a positive stable coupling matrix");
    }
    const Eigen::Index n = coupling.rows();
    const Eigen::MatrixXd ht = coupling.transpose();

    // Vectorized (column-major) form of H^T P + P H = I:
    //   (I (x) H^T + H^T (x) I) vec(P) = vec(I).
    Eigen::MatrixXd system = Eigen::MatrixXd::Zero(n * n, n * n);
    for (Eigen::Index j = 0; j < n; ++j) {
        system.block(j * n, j * n, n, n) += ht;           // I (x) H^T
        for (Eigen::Index i = 0; i < n; ++i) {
            for (Eigen::Index r = 0; r < n; ++r) {
                system(j * n + r, i * n + r) += ht(j, i); // H^T (x) I
            }
        }
    }
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n * n);
    for (Eigen::Index i = 0; i < n; ++i) rhs(i * n + i) = 1.0;

    const Eigen::VectorXd vec_p = system.partialPivLu().solve(rhs);
    Eigen::MatrixXd p = Eigen::Map<const Eigen::MatrixXd>(vec_p.data(), n, n);
    p = 0.5 * (p + p.transpose().eval());
    return p;
}

double min_symmetric_eigenvalue(const std::vector<Eigen::MatrixXd>& couplings) {
    if (couplings.empty()) {
        throw ValidationError("min_symmetric_eigenvalue requires at least one matrix");
    }
    double lambda_bar = std::numeric_limits<double>::infinity();
    for (const auto& h : couplings) {
        lambda_bar = std::min(lambda_bar, min_eigenvalue_symmetric(h + h.transpose()));
    }
    return lambda_bar;
}

double gain_bound_fixed(const Eigen::MatrixXd& p_bar, double gamma) {
    if (!(gamma > 0.0 && gamma < 1.0)) {
        throw ValidationError("gamma must lie in (0,1), got " + std::to_string(gamma));
    }
    return max_eigenvalue_symmetric(p_bar) / (2.0 * gamma * (1.0 - gamma * gamma));
}

double gain_bound_switching(double lambda_bar, double gamma) {
    if (!(gamma > 0.0 && gamma < 1.0)) {
        throw ValidationError("gamma must lie in (0,1), got " + std::to_string(gamma));
    }
    if (!(lambda_bar > 0.0)) {
        throw CertificateUnavailableError(
            "switching gain bound needs lambda_bar > 0 (every H + H^T positive definite), got " +
            std::to_string(lambda_bar));
    }
    return 1.0 / (2.0 * gamma * (1.0 - gamma * gamma) * lambda_bar);
}

GainCertificate verify_q_positive_definite(const GainParameters& params,
                                           const Eigen::MatrixXd& p_bar) {
    const Eigen::Index n = p_bar.rows();
    const double g = params.gamma;

    Eigen::MatrixXd q(2 * n, 2 * n);
    q.topLeftCorner(n, n) = params.k * (1.0 - g * g) * Eigen::MatrixXd::Identity(n, n);
    q.topRightCorner(n, n) = -p_bar;
    q.bottomLeftCorner(n, n) = -p_bar;
    q.bottomRightCorner(n, n) = 2.0 * g * p_bar;

    const double q_min = min_eigenvalue_symmetric(q);
    return GainCertificate{CertificateMode::fixed, p_bar,          std::nullopt, params.k,
                           gain_bound_fixed(p_bar, g), q_min, q_min > 0.0};
}

GainCertificate verify_q_positive_definite(const GainParameters& params,
                                           const std::vector<Eigen::MatrixXd>& couplings) {
    const double lambda_bar = min_symmetric_eigenvalue(couplings);
    const double g = params.gamma;

    double q_min = std::numeric_limits<double>::infinity();
    for (const auto& h : couplings) {
        const Eigen::Index n = h.rows();
        Eigen::MatrixXd q(2 * n, 2 * n);
        q.topLeftCorner(n, n) = params.k * (1.0 - g * g) * (h + h.transpose());
        q.topRightCorner(n, n) = -Eigen::MatrixXd::Identity(n, n);
        q.bottomLeftCorner(n, n) = -Eigen::MatrixXd::Identity(n, n);
        q.bottomRightCorner(n, n) = 2.0 * g * Eigen::MatrixXd::Identity(n, n);
        q_min = std::min(q_min, min_eigenvalue_symmetric(q));
    }

    const double k_min = lambda_bar > 0.0
                             ? gain_bound_switching(lambda_bar, g)
                             : std::numeric_limits<double>::infinity();
    return GainCertificate{CertificateMode::switching, std::nullopt, lambda_bar, params.k,
                           k_min, q_min, q_min > 0.0};
}

} // namespace lftrack
