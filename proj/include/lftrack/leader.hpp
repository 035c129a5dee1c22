#pragma once

#include <string>
#include <vector>

#include "lftrack/errors.hpp"

namespace lftrack {

/// Decreasing decomposition gain from the power family
///     alpha(t) = c / (t + t0 + 1)^p,  t >= 0,
/// with analytic derivative. The pair of integral conditions (divergent
/// integral of alpha, convergent integral of alpha^2) holds exactly for
/// 1/2 < p <= 1; `upper_bound()` returns mu = c.
class AlphaFunction {
public:
    AlphaFunction(double scale, double exponent, double offset);

    double operator()(double t) const;
    double derivative(double t) const;

    double scale() const noexcept { return scale_; }
    double exponent() const noexcept { return exponent_; }
    double offset() const noexcept { return offset_; }
    double upper_bound() const noexcept { return scale_; }

    bool admissible() const noexcept;
    /// Closed-form value of the integral of alpha^2 over [0, inf); +inf when
    /// the exponent is <= 1/2.
    double square_integral() const noexcept;

private:
    double scale_;
    double exponent_;
    double offset_;
};

struct AdmissibilityReport {
    bool admissible;
    double mu;
    double square_integral;
};

AdmissibilityReport check_admissible(const AlphaFunction& alpha);

/// Nominal velocity / nominal acceleration pair for the leader, with d/dt of
/// the nominal velocity equal to the nominal acceleration by construction for
/// every family (the tabulated family interpolates with cubic Hermite pieces
/// whose slopes are the tabulated accelerations).
class LeaderProfile {
public:
    enum class Family { constant, sinusoid, tabulated };

    static LeaderProfile constant(double initial_position, double nominal_velocity);
    static LeaderProfile sinusoid(double initial_position, double amplitude, double omega,
                                  double phase = 0.0);
    static LeaderProfile tabulated(double initial_position, std::vector<double> times,
                                   std::vector<double> velocities,
                                   std::vector<double> accelerations);

    double nominal_velocity(double t) const;
    double nominal_acceleration(double t) const;
    double initial_position() const noexcept { return initial_position_; }
    Family family() const noexcept { return family_; }

    double constant_velocity() const noexcept { return p0_; }
    double amplitude() const noexcept { return p0_; }
    double omega() const noexcept { return p1_; }
    double phase() const noexcept { return p2_; }
    const std::vector<double>& table_times() const noexcept { return times_; }
    const std::vector<double>& table_velocities() const noexcept { return values_; }
    const std::vector<double>& table_accelerations() const noexcept { return slopes_; }

private:
    LeaderProfile(Family family, double initial_position)
        : family_(family), initial_position_(initial_position) {}

    Family family_;
    double initial_position_;
    double p0_ = 0.0, p1_ = 0.0, p2_ = 0.0;
    std::vector<double> times_, values_, slopes_;
};

/// a0(t) = alpha'(t) v_nom(t) + alpha(t) a_nom(t).
double true_acceleration(const AlphaFunction& alpha, const LeaderProfile& profile, double t);

struct LeaderState {
    double position;
    double velocity;
    double acceleration;
};

/// Leader state at time t: velocity alpha(t) * v_nom(t), position from the
/// closed-form integral where one exists (constant nominal velocity) and from
/// adaptive Gauss-Kronrod quadrature (abs error <= 1e-9) otherwise.
LeaderState leader_state(const AlphaFunction& alpha, const LeaderProfile& profile, double t);

} // namespace lftrack
