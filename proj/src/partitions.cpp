#include "qpart/partitions.hpp"

#include <cmath>

#include "qpart/errors.hpp"

namespace qpart {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw DomainError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw DomainError("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

Partition Partition::transpose() const
{
    std::vector<int> t(part(1), 0);
    for (int j = 1; j <= part(1); ++j) {
        int c = 0;
        while (c < length() && parts_[c] >= j)
            ++c;
        t[j - 1] = c;
    }
    return Partition(std::move(t));
}

std::string Partition::str() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

PartitionStream::PartitionStream(int max_size) : max_size_(max_size)
{
    if (max_size < 0)
        throw DomainError("enumerate_partitions: max_size must be nonnegative");
    if (max_size > kMaxEnumerationSize)
        throw LimitExceeded("enumerate_partitions: max_size above " + std::to_string(kMaxEnumerationSize));
}

std::optional<Partition> PartitionStream::next()
{
    if (!started_) {
        started_ = true;
        n_ = 0;
        cur_.clear();
        return Partition();
    }
    if (n_ > max_size_)
        return std::nullopt;
    int rem = 0;
    while (!cur_.empty() && cur_.back() == 1) {
        cur_.pop_back();
        ++rem;
    }
    if (cur_.empty()) {
        ++n_;
        if (n_ > max_size_)
            return std::nullopt;
        cur_.assign(1, n_);
        return Partition(cur_);
    }
    const int k = --cur_.back();
    ++rem;
    while (rem > 0) {
        const int p = std::min(k, rem);
        cur_.push_back(p);
        rem -= p;
    }
    return Partition(cur_);
}

void enumerate_partitions(int max_size, const std::function<void(const Partition&)>& visit)
{
    PartitionStream s(max_size);
    while (auto p = s.next())
        visit(*p);
}

std::vector<Partition> enumerate_partitions(int max_size)
{
    std::vector<Partition> out;
    enumerate_partitions(max_size, [&](const Partition& p) { out.push_back(p); });
    return out;
}

std::vector<Partition> partitions_of(int n)
{
    std::vector<Partition> out;
    enumerate_partitions(n, [&](const Partition& p) {
        if (p.size() == n)
            out.push_back(p);
    });
    return out;
}

long long b_of(const Partition& lambda)
{
    long long b = 0;
    for (int i = 1; i <= lambda.length(); ++i)
        b += static_cast<long long>(i - 1) * lambda.part(i);
    return b;
}

CellStats cell_stats(const Partition& lambda)
{
    CellStats s;
    const Partition t = lambda.transpose();
    BigInt hprod = 1;
    for (int i = 1; i <= lambda.length(); ++i) {
        std::vector<int> h, c;
        for (int j = 1; j <= lambda.part(i); ++j) {
            h.push_back(lambda.part(i) + t.part(j) - i - j + 1);
            c.push_back(j - i);
            hprod *= h.back();
        }
        s.hook.push_back(std::move(h));
        s.content.push_back(std::move(c));
    }
    s.b_of_lambda = b_of(lambda);
    BigInt fact = 1;
    for (int k = 2; k <= lambda.size(); ++k)
        fact *= k;
    s.dim_lambda = fact / hprod;
    return s;
}

BigInt dimension(const Partition& lambda)
{
    return cell_stats(lambda).dim_lambda;
}

std::vector<HalfInteger> fermionic_coordinates(const Partition& lambda, int depth)
{
    std::vector<HalfInteger> out;
    out.reserve(depth);
    for (int i = 1; i <= depth; ++i)
        out.push_back(HalfInteger::above(lambda.part(i) - i));
    return out;
}

double schur_specialized(const Partition& lambda, const Specialization& spec)
{
    const CellStats cs = cell_stats(lambda);
    if (const auto* p = std::get_if<PrincipalSpec>(&spec)) {
        if (!(p->q >= 0.0 && p->q < 1.0))
            throw DomainError("schur_specialized: q must lie in [0,1)");
        double v = std::pow(p->xi * std::sqrt(p->q), lambda.size()) * std::pow(p->q, static_cast<double>(cs.b_of_lambda));
        for (const auto& row : cs.hook)
            for (int h : row)
                v /= 1.0 - std::pow(p->q, h);
        return v;
    }
    const auto& e = std::get<ExponentialSpec>(spec);
    double v = std::pow(e.xi, lambda.size());
    for (const auto& row : cs.hook)
        for (int h : row)
            v /= h;
    return v;
}

}  // namespace qpart
