#pragma once

#include <cmath>

namespace copairs {

// Kahan-Babuska (Neumaier) compensated accumulator. Keeps the rounding
// error of a long sum near one ulp of the result instead of growing with
// the term count.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }

    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// x^n by repeated multiplication; deterministic across libms, exact for
// the small integer exponents used here.
inline double powi(double x, unsigned n) {
    double r = 1.0;
    while (n > 0) {
        if (n & 1u) r *= x;
        x *= x;
        n >>= 1u;
    }
    return r;
}

}  // namespace copairs
