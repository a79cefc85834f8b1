#pragma once

#include <cmath>

namespace graphon {

/// Neumaier-compensated accumulator. The block functionals are cubic sums
/// checked against 1e-10 tolerances, so plain summation is not enough.
class KahanSum {
public:
    void add(double x) {
        double t = sum_ + x;
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

}  // namespace graphon
