#pragma once

#include <complex>
#include <string>
#include <vector>

#include "dsp/errors.hpp"
#include "dsp/poly.hpp"

namespace sdvisc::dsp {

// Continuous-time rational transfer function, coefficients in ascending
// powers of s. Must be proper: deg(num) <= deg(den).
struct RationalTf {
    Poly num;
    Poly den;
    std::string label;

    RationalTf(Poly n, Poly d, std::string lbl = "");

    int num_degree() const { return poly_degree(num); }
    int den_degree() const { return poly_degree(den); }

    // Gain at s = 0; infinite gains (den[0] == 0) return +/-inf.
    double dc_gain() const { return num.front() / den.front(); }

    static RationalTf integrator() { return {{1.0}, {0.0, 1.0}, "1/s"}; }
    static RationalTf pi(double kp, double ki) { return {{ki, kp}, {0.0, 1.0}, "pi"}; }
    static RationalTf first_order_lag(double gain, double tau) {
        return {{gain}, {1.0, tau}, "lag"};
    }
    static RationalTf washout(double gain, double tau) {
        return {{0.0, gain}, {1.0, tau}, "washout"};
    }
    static RationalTf lead_lag(double t1, double t2) {
        return {{1.0, t1}, {1.0, t2}, "leadlag"};
    }
};

// Normalized recursive difference equation
//   y(k) = sum_i b[i] u(k-i) - sum_{j>=1} a[j] y(k-j),   a[0] == 1.
// Histories are bounded and seeded to a caller-supplied operating point so a
// block enabled mid-run starts from the current measurement instead of zero.
class DiscreteBlock {
  public:
    DiscreteBlock(std::vector<double> b, std::vector<double> a, double ts,
                  double u0 = 0.0, double y0 = 0.0);

    double step(double u);

    // Re-seeds all histories with a steady operating point.
    void seed(double u0, double y0);

    std::complex<double> eval(std::complex<double> z) const;
    double dc_gain() const { return eval(1.0).real(); }

    const std::vector<double>& b() const { return b_; }
    const std::vector<double>& a() const { return a_; }
    double ts() const { return ts_; }
    double last_output() const { return y_hist_.empty() ? last_y_ : y_hist_.front(); }

  private:
    std::vector<double> b_, a_;
    std::vector<double> u_hist_;  // u(k-1) .. u(k-m)
    std::vector<double> y_hist_;  // y(k-1) .. y(k-n)
    double ts_;
    double last_y_ = 0.0;  // for order-zero blocks
};

inline double step_block(DiscreteBlock& block, double u) { return block.step(u); }

// Bilinear map s = (2/ts)(z-1)/(z+1). Preserves DC gain and stability of the
// continuous prototype. Throws ImproperTf / DegenerateDenominator.
DiscreteBlock tustin_discretize(const RationalTf& tf, double ts, double u0 = 0.0,
                                double y0 = 0.0);

enum class StabilityClass { Stable, Marginal, Unstable };

// Classifies the block by the roots of its feedback polynomial in z.
// Roots strictly inside the unit circle => Stable; roots on the circle
// (within tolerance) => Marginal; anything outside => Unstable.
StabilityClass check_stability(const DiscreteBlock& block);

inline bool is_stable(const DiscreteBlock& block) {
    return check_stability(block) == StabilityClass::Stable;
}

// Roots of a real-coefficient polynomial (ascending powers) via the
// Durand-Kerner iteration. Degrees here are tiny; non-convergence signals a
// malformed block and throws RootFindingFailed.
std::vector<std::complex<double>> poly_roots(const Poly& p);

}  // namespace sdvisc::dsp
