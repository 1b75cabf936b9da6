#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qpart/half_integer.hpp"

namespace qpart {

using BigInt = boost::multiprecision::cpp_int;

class Partition {
public:
    Partition() = default;
    // Throws DomainError unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    // lambda_i for i >= 1, zero beyond the length
    int part(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }
    Partition transpose() const;
    std::string str() const;

    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// Partitions of size 0..max_size, by size and then lexicographically descending.
class PartitionStream {
public:
    explicit PartitionStream(int max_size);
    std::optional<Partition> next();

private:
    int max_size_;
    int n_ = 0;
    std::vector<int> cur_;
    bool started_ = false;
};

constexpr int kMaxEnumerationSize = 60;

void enumerate_partitions(int max_size, const std::function<void(const Partition&)>& visit);
std::vector<Partition> enumerate_partitions(int max_size);
std::vector<Partition> partitions_of(int n);

struct CellStats {
    // hook[i][j] and content[i][j] for the cell in row i+1, column j+1
    std::vector<std::vector<int>> hook;
    std::vector<std::vector<int>> content;
    long long b_of_lambda = 0;
    BigInt dim_lambda = 1;
};

CellStats cell_stats(const Partition& lambda);
// sum_i (i-1) lambda_i
long long b_of(const Partition& lambda);
// exact number of standard tableaux
BigInt dimension(const Partition& lambda);

// First `depth` entries of {lambda_i - i + 1/2}.
std::vector<HalfInteger> fermionic_coordinates(const Partition& lambda, int depth);

struct PrincipalSpec {
    double xi;
    double q;
};
struct ExponentialSpec {
    double xi;
};
using Specialization = std::variant<PrincipalSpec, ExponentialSpec>;

double schur_specialized(const Partition& lambda, const Specialization& spec);

}  // namespace qpart
