#pragma once

#include <cstdint>

#include "dsp/errors.hpp"

namespace sdvisc::dsp {

struct PiParams {
    double kp = 0.0;  // pu/pu
    double ki = 0.0;  // pu/(pu*s), >= 0
};

// One bilinear-rule PI update. Depends only on the previous error and the
// previous output; no cumulative state exists.
//   g = g_prev + (ts/2)*ki*(e_now + e_prev) + kp*(e_now - e_prev)
inline double pi_tustin_step(const PiParams& p, double e_now, double e_prev,
                             double g_prev, double ts) {
    return g_prev + 0.5 * ts * p.ki * (e_now + e_prev) + p.kp * (e_now - e_prev);
}

// Cumulative-sum PI: the baseline form that recomputes the output from the
// whole error history each step,
//   g(n) = kp*e(n) + ts*ki*((e(0)+e(n))/2 + sum_{k=1..n-1} e(k)).
// The running sum is the state the recursive form above does not need.
class TrapezoidalPi {
  public:
    TrapezoidalPi(PiParams params, double ts) : params_(params), ts_(ts) {}

    double step(double e_now, bool accumulate = true) {
        if (!have_e0_) {
            e0_ = e_now;
            have_e0_ = true;
        }
        const double g =
            params_.kp * e_now + ts_ * params_.ki * (0.5 * (e0_ + e_now) + sum_);
        if (n_ >= 1 && accumulate) sum_ += e_now;
        ++n_;
        return g;
    }

    // Explicit hook for the documented round-off injection experiments.
    void perturb_sum(double delta) { sum_ += delta; }

    // Chooses a sum so the next zero-increment output equals g0 at error e0.
    void seed(double e0, double g0) {
        have_e0_ = true;
        e0_ = e0;
        n_ = 1;
        sum_ = params_.ki > 0.0 ? (g0 - params_.kp * e0) / (ts_ * params_.ki) - e0 : 0.0;
    }

    double sum() const { return sum_; }
    std::uint64_t steps() const { return n_; }

  private:
    PiParams params_;
    double ts_;
    double e0_ = 0.0;
    double sum_ = 0.0;
    std::uint64_t n_ = 0;
    bool have_e0_ = false;
};

enum class Discretizer { Tustin, Trapezoidal };

// PI engine used by the controller stack: same contract under either rule,
// with conditional integration for anti-windup.
class PiEngine {
  public:
    PiEngine(PiParams params, double ts, Discretizer rule)
        : params_(params), ts_(ts), rule_(rule), trap_(params, ts) {}

    double step(double e_now, bool freeze_integral = false) {
        if (rule_ == Discretizer::Tustin) {
            double g = g_prev_ + params_.kp * (e_now - e_prev_);
            if (!freeze_integral) g += 0.5 * ts_ * params_.ki * (e_now + e_prev_);
            e_prev_ = e_now;
            g_prev_ = g;
            return g;
        }
        // Frozen trapezoidal step evaluates the formula without accumulating
        // the error into the stored history.
        return trap_.step(e_now, !freeze_integral);
    }

    void seed(double e0, double g0) {
        e_prev_ = e0;
        g_prev_ = g0;
        trap_.seed(e0, g0);
    }

    void perturb_stored_state(double delta) {
        if (rule_ == Discretizer::Trapezoidal) trap_.perturb_sum(delta);
    }

    double stored_sum() const { return trap_.sum(); }
    Discretizer rule() const { return rule_; }

  private:
    PiParams params_;
    double ts_;
    Discretizer rule_;
    double e_prev_ = 0.0;
    double g_prev_ = 0.0;
    TrapezoidalPi trap_;
};

}  // namespace sdvisc::dsp
