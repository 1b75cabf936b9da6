#pragma once

#include <cmath>

namespace qpart::detail {

// Neumaier compensated sum.
template <class Real>
class CompensatedSum {
public:
    void add(Real x)
    {
        Real t = sum_ + x;
        if (abs_(sum_) >= abs_(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    Real value() const { return sum_ + comp_; }

private:
    static Real abs_(const Real& x) { return x < 0 ? -x : x; }
    Real sum_ = 0;
    Real comp_ = 0;
};

}  // namespace qpart::detail
