#pragma once

#include <string>
#include <vector>

#include "qpart/qparams.hpp"

namespace qpart {

enum class Suite { special, measures, kernels, gap, painleve, all };

// One tolerance check. measured <= tolerance passes; count-type checks use tolerance 0.
struct Check {
    std::string check_id;
    std::string reference;  // the identity or property being exercised
    double measured;
    double tolerance;
    bool pass;
    std::string note;
};

Suite parse_suite(const std::string& name);
std::string suite_name(Suite s);

// Checks sorted by check_id. Painleve checks are reported as skipped when xi = 0.
std::vector<Check> run_suite(Suite s, const QParams& p);

}  // namespace qpart
