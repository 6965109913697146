#pragma once

#include <cmath>

#include "dsp/errors.hpp"

namespace sdvisc::dsp {

struct InertiaParams {
    double h;  // inertia constant, seconds, > 0
    double d;  // damping, pu torque per pu speed deviation, >= 0
    double k;  // 2/ts, stored so a mismatched sampling period is detectable

    static InertiaParams for_ts(double h, double d, double ts) {
        return {h, d, 2.0 / ts};
    }
};

// Numerator applied to the reference-frequency channel. The published
// recursion's (1 - z^-2)/K form cancels the integrator pole exactly only
// when d == 0; Exact keeps the bilinear-consistent numerator for d != 0.
enum class InertiaWPath { Paper, Exact };

struct InertiaOutput {
    double delta;  // integral of pu frequency (multiply by omega_base for rad)
    double omega;  // pu
};

// Second-order swing recursion producing phase angle and speed:
//   delta(k) = c1 delta(k-1) - c2 delta(k-2)
//            + [terr(k) + 2 terr(k-1) + terr(k-2)] / (2HK^2 + DK)
//            + w-path(omega_s)
//   omega(k) = (delta(k) - delta(k-1)) / ts
// with terr = tm - te and tm = 0 (no mechanical input).
class InertiaEmulator {
  public:
    InertiaEmulator(InertiaParams params, double ts,
                    InertiaWPath path = InertiaWPath::Paper)
        : ts_(ts), path_(path) {
        if (ts <= 0.0) throw Error("InertiaEmulator: ts must be > 0");
        if (params.h <= 0.0) throw Error("InertiaEmulator: h must be > 0");
        if (std::abs(params.k * ts - 2.0) > 16.0 * 2.2e-16)
            throw InconsistentK("InertiaEmulator: params.k != 2/ts");
        const double k = params.k;
        const double a = 2.0 * params.h * k * k;  // 2HK^2
        const double b = params.d * k;            // DK
        den_ = a + b;
        c1_ = 2.0 * a / den_;
        c2_ = (a - b) / den_;
        if (path == InertiaWPath::Paper) {
            w0_ = 1.0 / k;
            w1_ = 0.0;
            w2_ = -1.0 / k;
        } else {
            w0_ = 1.0 / k;
            w1_ = 2.0 * b / (k * den_);
            w2_ = (b - a) / (k * den_);
        }
    }

    InertiaOutput step(double te_now, double omega_s_now) {
        const double terr = -te_now;
        const double delta = c1_ * delta1_ - c2_ * delta2_ +
                             (terr + 2.0 * terr1_ + terr2_) / den_ +
                             w0_ * omega_s_now + w1_ * ws1_ + w2_ * ws2_;
        const double omega = (delta - delta1_) / ts_;
        delta2_ = delta1_;
        delta1_ = delta;
        terr2_ = terr1_;
        terr1_ = terr;
        ws2_ = ws1_;
        ws1_ = omega_s_now;
        return {delta, omega};
    }

    // Ramp-consistent seeding: the next step continues rotating at omega0.
    void seed(double delta0, double omega0, double te0, double omega_s0) {
        delta1_ = delta0;
        delta2_ = delta0 - omega0 * ts_;
        terr1_ = terr2_ = -te0;
        ws1_ = ws2_ = omega_s0;
    }

    double delta() const { return delta1_; }
    double ts() const { return ts_; }
    InertiaWPath path() const { return path_; }

  private:
    double ts_;
    InertiaWPath path_;
    double den_, c1_, c2_, w0_, w1_, w2_;
    double delta1_ = 0.0, delta2_ = 0.0;
    double terr1_ = 0.0, terr2_ = 0.0;
    double ws1_ = 0.0, ws2_ = 0.0;
};

// Single-shot form mirroring the recursion with explicit histories:
// te = {te(k), te(k-1), te(k-2)}, omega_s = {w(k), w(k-1), w(k-2)},
// delta_hist = {delta(k-1), delta(k-2)}. The Paper w-path ignores w(k-1).
inline InertiaOutput inertia_step(const InertiaParams& params, const double te[3],
                                  const double omega_s[3], const double delta_hist[2],
                                  double ts, InertiaWPath path = InertiaWPath::Paper) {
    if (std::abs(params.k * ts - 2.0) > 16.0 * 2.2e-16)
        throw InconsistentK("inertia_step: params.k != 2/ts");
    const double k = params.k;
    const double a = 2.0 * params.h * k * k;
    const double b = params.d * k;
    const double den = a + b;
    const double c1 = 2.0 * a / den;
    const double c2 = (a - b) / den;
    double w0 = 1.0 / k, w1 = 0.0, w2 = -1.0 / k;
    if (path == InertiaWPath::Exact) {
        w1 = 2.0 * b / (k * den);
        w2 = (b - a) / (k * den);
    }
    const double delta = c1 * delta_hist[0] - c2 * delta_hist[1] +
                         (-te[0] - 2.0 * te[1] - te[2]) / den + w0 * omega_s[0] +
                         w1 * omega_s[1] + w2 * omega_s[2];
    return {delta, (delta - delta_hist[0]) / ts};
}

}  // namespace sdvisc::dsp
