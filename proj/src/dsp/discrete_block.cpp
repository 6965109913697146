#include "dsp/discrete_block.hpp"

#include <algorithm>
#include <cmath>

namespace sdvisc::dsp {

RationalTf::RationalTf(Poly n, Poly d, std::string lbl)
    : num(std::move(n)), den(std::move(d)), label(std::move(lbl)) {
    if (num.empty()) num = {0.0};
    if (poly_degree(den) < 0)
        throw DegenerateDenominator("transfer function '" + label +
                                    "': denominator has no nonzero coefficient");
    if (poly_degree(num) > poly_degree(den))
        throw ImproperTf("transfer function '" + label + "': deg(num) " +
                         std::to_string(poly_degree(num)) + " > deg(den) " +
                         std::to_string(poly_degree(den)));
}

DiscreteBlock::DiscreteBlock(std::vector<double> b, std::vector<double> a, double ts,
                             double u0, double y0)
    : b_(std::move(b)), a_(std::move(a)), ts_(ts) {
    if (ts_ <= 0.0) throw Error("DiscreteBlock: ts must be > 0");
    if (a_.empty() || a_[0] == 0.0)
        throw DegenerateDenominator("DiscreteBlock: a0 must be nonzero");
    // Normalize once at construction; step() stays branch-free.
    const double a0 = a_[0];
    for (auto& c : b_) c /= a0;
    for (auto& c : a_) c /= a0;
    a_[0] = 1.0;
    u_hist_.assign(b_.size() > 0 ? b_.size() - 1 : 0, u0);
    y_hist_.assign(a_.size() - 1, y0);
    last_y_ = y0;
}

void DiscreteBlock::seed(double u0, double y0) {
    std::fill(u_hist_.begin(), u_hist_.end(), u0);
    std::fill(y_hist_.begin(), y_hist_.end(), y0);
    last_y_ = y0;
}

double DiscreteBlock::step(double u) {
    double y = b_[0] * u;
    for (size_t i = 1; i < b_.size(); ++i) y += b_[i] * u_hist_[i - 1];
    for (size_t j = 1; j < a_.size(); ++j) y -= a_[j] * y_hist_[j - 1];
    if (!u_hist_.empty()) {
        for (size_t i = u_hist_.size(); i-- > 1;) u_hist_[i] = u_hist_[i - 1];
        u_hist_[0] = u;
    }
    if (!y_hist_.empty()) {
        for (size_t j = y_hist_.size(); j-- > 1;) y_hist_[j] = y_hist_[j - 1];
        y_hist_[0] = y;
    }
    last_y_ = y;
    return y;
}

std::complex<double> DiscreteBlock::eval(std::complex<double> z) const {
    const std::complex<double> zi = 1.0 / z;
    std::complex<double> num = 0.0, den = 0.0, p = 1.0;
    for (size_t i = 0; i < std::max(b_.size(), a_.size()); ++i) {
        if (i < b_.size()) num += b_[i] * p;
        if (i < a_.size()) den += a_[i] * p;
        p *= zi;
    }
    return num / den;
}

DiscreteBlock tustin_discretize(const RationalTf& tf, double ts, double u0, double y0) {
    if (ts <= 0.0) throw Error("tustin_discretize: ts must be > 0");
    const Poly num = tf.num;
    const Poly den = tf.den;
    const int n = poly_degree(den);
    if (poly_degree(num) > n)
        throw ImproperTf("tustin_discretize('" + tf.label + "'): improper tf");

    const double k = 2.0 / ts;
    // N(s), D(s) -> polynomials in z after multiplying through by (z+1)^n:
    //   sum_i c_i k^i (z-1)^i (z+1)^(n-i)
    const auto mapped = [&](const Poly& c) {
        Poly out{0.0};
        double ki = 1.0;
        for (int i = 0; i <= n; ++i) {
            if (i < static_cast<int>(c.size()) && c[static_cast<size_t>(i)] != 0.0) {
                Poly term = poly_mul(poly_binomial_power(-1.0, static_cast<unsigned>(i)),
                                     poly_binomial_power(1.0, static_cast<unsigned>(n - i)));
                poly_axpy(out, c[static_cast<size_t>(i)] * ki, term);
            }
            ki *= k;
        }
        out.resize(static_cast<size_t>(n) + 1, 0.0);
        return out;
    };

    const Poly bz = mapped(num);
    const Poly az = mapped(den);

    double scale = 0.0;
    for (double c : az) scale = std::max(scale, std::abs(c));
    if (scale == 0.0)
        throw DegenerateDenominator("tustin_discretize('" + tf.label +
                                    "'): mapped denominator is identically zero");
    // a0 of the difference equation is the z^n coefficient, i.e. D(s = 2/ts).
    if (std::abs(az[static_cast<size_t>(n)]) < 1e-12 * scale)
        throw DegenerateDenominator("tustin_discretize('" + tf.label +
                                    "'): continuous pole at s = 2/ts");

    // z^(n-j) coefficient becomes the z^-j tap.
    std::vector<double> b(static_cast<size_t>(n) + 1), a(static_cast<size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
        b[static_cast<size_t>(j)] = bz[static_cast<size_t>(n - j)];
        a[static_cast<size_t>(j)] = az[static_cast<size_t>(n - j)];
    }
    return DiscreteBlock(std::move(b), std::move(a), ts, u0, y0);
}

std::vector<std::complex<double>> poly_roots(const Poly& p_in) {
    Poly p = poly_trim(p_in);
    const int deg = poly_degree(p);
    if (deg <= 0) return {};
    // Monic form.
    const double lead = p.back();
    for (auto& c : p) c /= lead;

    using C = std::complex<double>;
    std::vector<C> r(static_cast<size_t>(deg));
    const C seed(0.4, 0.9);
    C w = 1.0;
    for (auto& ri : r) {
        w *= seed;
        ri = w;
    }
    const auto eval = [&](C z) { return poly_eval(p, z); };
    for (int it = 0; it < 500; ++it) {
        double move = 0.0;
        for (size_t i = 0; i < r.size(); ++i) {
            C denom = 1.0;
            for (size_t j = 0; j < r.size(); ++j)
                if (j != i) denom *= (r[i] - r[j]);
            const C delta = eval(r[i]) / denom;
            r[i] -= delta;
            move = std::max(move, std::abs(delta));
        }
        if (move < 1e-13) return r;
    }
    throw RootFindingFailed("poly_roots: Durand-Kerner did not converge");
}

StabilityClass check_stability(const DiscreteBlock& block) {
    // a(z^-1) taps reversed give the ascending polynomial in z.
    Poly q(block.a().rbegin(), block.a().rend());
    const auto roots = poly_roots(q);
    constexpr double kTol = 1e-7;
    bool marginal = false;
    for (const auto& root : roots) {
        const double m = std::abs(root);
        if (m > 1.0 + kTol) return StabilityClass::Unstable;
        if (m >= 1.0 - kTol) marginal = true;
    }
    return marginal ? StabilityClass::Marginal : StabilityClass::Stable;
}

}  // namespace sdvisc::dsp
