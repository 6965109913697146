#pragma once

// Test-only reference implementations, independent of the discretization
// code they are used to check. Continuous systems are integrated with a
// classical 4th-order Runge-Kutta scheme at a much finer step.

#include <cmath>
#include <functional>
#include <vector>

#include "dsp/poly.hpp"

namespace sdvisc::test {

// Continuous LTI simulator built from ascending-power num/den coefficients
// via the controllable canonical form. Proper transfer functions only.
class ContinuousTf {
  public:
    ContinuousTf(std::vector<double> num, std::vector<double> den) {
        int n = static_cast<int>(den.size()) - 1;
        while (n > 0 && den[static_cast<size_t>(n)] == 0.0) --n;
        num.resize(static_cast<size_t>(n) + 1, 0.0);
        const double lead = den[static_cast<size_t>(n)];
        for (auto& c : num) c /= lead;
        for (auto& c : den) c /= lead;
        n_ = n;
        d_ = num[static_cast<size_t>(n)];
        a_.assign(static_cast<size_t>(n), 0.0);
        c_.assign(static_cast<size_t>(n), 0.0);
        for (int i = 0; i < n; ++i) {
            a_[static_cast<size_t>(i)] = den[static_cast<size_t>(i)];
            c_[static_cast<size_t>(i)] =
                num[static_cast<size_t>(i)] - d_ * den[static_cast<size_t>(i)];
        }
        x_.assign(static_cast<size_t>(n), 0.0);
    }

    void reset() { std::fill(x_.begin(), x_.end(), 0.0); }

    double output(double u) const {
        double y = d_ * u;
        for (size_t i = 0; i < c_.size(); ++i) y += c_[i] * x_[i];
        return y;
    }

    // Advances by dt using RK4 with u(t) evaluated at substep times.
    void advance(const std::function<double(double)>& u, double t, double dt) {
        if (n_ == 0) return;
        const auto deriv = [&](const std::vector<double>& x, double tt) {
            std::vector<double> dx(x.size());
            for (size_t i = 0; i + 1 < x.size(); ++i) dx[i] = x[i + 1];
            double top = u(tt);
            for (size_t i = 0; i < x.size(); ++i) top -= a_[i] * x[i];
            dx[x.size() - 1] = top;
            return dx;
        };
        const auto axpy = [](const std::vector<double>& x, double s,
                             const std::vector<double>& k) {
            std::vector<double> r(x.size());
            for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] + s * k[i];
            return r;
        };
        const auto k1 = deriv(x_, t);
        const auto k2 = deriv(axpy(x_, dt / 2, k1), t + dt / 2);
        const auto k3 = deriv(axpy(x_, dt / 2, k2), t + dt / 2);
        const auto k4 = deriv(axpy(x_, dt, k3), t + dt);
        for (size_t i = 0; i < x_.size(); ++i)
            x_[i] += dt / 6.0 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    }

    // Samples the response y(k*ts) to u(t), integrating substeps per sample.
    std::vector<double> sampled_response(const std::function<double(double)>& u,
                                         double ts, int samples, int substeps) {
        reset();
        std::vector<double> y;
        y.reserve(static_cast<size_t>(samples));
        const double dt = ts / substeps;
        for (int k = 0; k < samples; ++k) {
            const double t0 = k * ts;
            y.push_back(output(u(t0)));
            for (int s = 0; s < substeps; ++s) advance(u, t0 + s * dt, dt);
        }
        return y;
    }

  private:
    int n_ = 0;
    double d_ = 0.0;
    std::vector<double> a_, c_, x_;
};

// Continuous PI: g(t) = kp e(t) + ki * integral(e).
inline std::vector<double> continuous_pi_response(double kp, double ki,
                                                  const std::function<double(double)>& e,
                                                  double ts, int samples, int substeps) {
    std::vector<double> g;
    g.reserve(static_cast<size_t>(samples));
    double integral = 0.0;
    const double dt = ts / substeps;
    for (int k = 0; k < samples; ++k) {
        const double t0 = k * ts;
        g.push_back(kp * e(t0) + ki * integral);
        for (int s = 0; s < substeps; ++s) {
            // RK4 on the scalar integral
            const double t = t0 + s * dt;
            const double k1 = e(t);
            const double k2 = e(t + dt / 2);
            const double k4 = e(t + dt);
            integral += dt / 6.0 * (k1 + 4 * k2 + k4);
        }
    }
    return g;
}

// Continuous swing block: 2H w' = terr - D w, delta' = w + ws(t).
// Matches the phase-angle transfer function with torque and reference
// frequency channels kept separate.
struct SwingOracle {
    double h, d;
    double omega_t = 0.0;  // torque-driven speed component
    double delta = 0.0;

    void advance(const std::function<double(double)>& terr,
                 const std::function<double(double)>& ws, double t, double dt) {
        const auto f = [&](double w, double tt) { return (terr(tt) - d * w) / (2 * h); };
        const double k1 = f(omega_t, t);
        const double k2 = f(omega_t + dt / 2 * k1, t + dt / 2);
        const double k3 = f(omega_t + dt / 2 * k2, t + dt / 2);
        const double k4 = f(omega_t + dt * k3, t + dt);
        // delta integrates omega_t + ws alongside
        const double w0 = omega_t;
        const double w1 = omega_t + dt / 2 * k1;
        const double w2 = omega_t + dt / 2 * k2;
        const double w3 = omega_t + dt * k3;
        delta += dt / 6.0 *
                 ((w0 + ws(t)) + 2 * (w1 + ws(t + dt / 2)) + 2 * (w2 + ws(t + dt / 2)) +
                  (w3 + ws(t + dt)));
        omega_t += dt / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
    }

    double omega(double ws_now) const { return omega_t + ws_now; }
};

}  // namespace sdvisc::test
