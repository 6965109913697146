#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace sdvisc::dsp {

// Dense polynomial in ascending powers: p[0] + p[1]*x + ...
using Poly = std::vector<double>;

inline Poly poly_trim(Poly p, double eps = 0.0) {
    while (p.size() > 1 && std::abs(p.back()) <= eps) p.pop_back();
    return p;
}

inline int poly_degree(const Poly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[static_cast<size_t>(i)] != 0.0) return i;
    return -1;  // zero polynomial
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    Poly r(a.size() + b.size() - 1, 0.0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

inline void poly_axpy(Poly& acc, double k, const Poly& p) {
    if (acc.size() < p.size()) acc.resize(p.size(), 0.0);
    for (size_t i = 0; i < p.size(); ++i) acc[i] += k * p[i];
}

inline double poly_eval(const Poly& p, double x) {
    double r = 0.0;
    for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
    return r;
}

inline std::complex<double> poly_eval(const Poly& p, std::complex<double> x) {
    std::complex<double> r = 0.0;
    for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
    return r;
}

// (x + c)^n with integer-exact coefficients for small n.
inline Poly poly_binomial_power(double c, unsigned n) {
    Poly r{1.0};
    const Poly f{c, 1.0};
    for (unsigned i = 0; i < n; ++i) r = poly_mul(r, f);
    return r;
}

}  // namespace sdvisc::dsp
