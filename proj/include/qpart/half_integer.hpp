#pragma once

#include <compare>
#include <string>

namespace qpart {

// Element of Z + 1/2, stored as the odd integer 2r.
class HalfInteger {
public:
    static HalfInteger from_twice(int twice);
    // n + 1/2
    static HalfInteger above(int n) { return from_twice(2 * n + 1); }
    // n - 1/2
    static HalfInteger below(int n) { return from_twice(2 * n - 1); }

    int twice() const { return twice_; }
    double value() const { return 0.5 * twice_; }
    // r + 1/2 and r - 1/2 as integers
    int up() const { return (twice_ + 1) / 2; }
    int down() const { return (twice_ - 1) / 2; }

    HalfInteger operator+(int k) const { return HalfInteger(twice_ + 2 * k); }
    HalfInteger operator-(int k) const { return HalfInteger(twice_ - 2 * k); }
    HalfInteger operator-() const { return HalfInteger(-twice_); }

    auto operator<=>(const HalfInteger&) const = default;

    std::string str() const;

private:
    explicit HalfInteger(int twice) : twice_(twice) {}
    int twice_;
};

}  // namespace qpart
