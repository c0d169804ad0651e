#pragma once

#include <cstddef>
#include <functional>

namespace qwalk {

/// Compensated (Kahan) accumulator for long sums of small terms.
class KahanSum {
public:
    void add(double x) {
        double y = x - comp_;
        double t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// x^n by repeated squaring (deterministic across libm implementations).
double integer_power(double x, int n);

/// Adaptive Simpson quadrature of f on [a, b] to absolute tolerance tol.
double adaptive_simpson(const std::function<double(double)>& f,
                        double a, double b, double tol, int max_depth = 48);

}  // namespace qwalk
