#include <cmath>
#include <cstdlib>
#include <string>

#include "qpart/errors.hpp"
#include "qpart/half_integer.hpp"
#include "qpart/qparams.hpp"

namespace qpart {

SeriesControl SeriesControl::from_environment()
{
    SeriesControl c;
    if (const char* s = std::getenv("QPART_MAX_TERMS")) {
        char* end = nullptr;
        long v = std::strtol(s, &end, 10);
        if (end == s || *end != '\0')
            throw DomainError("QPART_MAX_TERMS is not an integer: " + std::string(s));
        c.max_terms = static_cast<int>(v);
    }
    if (const char* s = std::getenv("QPART_TAIL_TOL")) {
        char* end = nullptr;
        double v = std::strtod(s, &end);
        if (end == s || *end != '\0')
            throw DomainError("QPART_TAIL_TOL is not a number: " + std::string(s));
        c.tail_tol = v;
    }
    c.validate();
    return c;
}

void SeriesControl::validate() const
{
    if (!(tail_tol > 0.0))
        throw DomainError("tail_tol must be positive");
    if (max_terms < 1)
        throw DomainError("max_terms must be at least 1");
}

QParams::QParams(double q, double xi, SeriesControl control) : q_(q), xi_(xi), control_(control)
{
    if (!(q >= 0.0 && q < 1.0))
        throw DomainError("q must satisfy 0 <= q < 1 (got " + std::to_string(q) + ")");
    if (!(xi >= 0.0 && xi < 1.0))
        throw DomainError("xi must satisfy 0 <= xi < 1 (got " + std::to_string(xi) + ")");
    control_.validate();
}

HalfInteger HalfInteger::from_twice(int twice)
{
    if (twice % 2 == 0)
        throw DomainError("half-integer needs an odd doubled value, got " + std::to_string(twice));
    return HalfInteger(twice);
}

std::string HalfInteger::str() const
{
    return std::to_string(twice_) + "/2";
}

}  // namespace qpart
