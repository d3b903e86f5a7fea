#include "altmin/oracle.hpp"

#include "altmin/errors.hpp"

#include <cmath>
#include <string>

namespace altmin {

void Oracle::check_dim(const Point& x) const {
    if (x.size() != dim())
        raise(ErrorCode::DimensionMismatch,
              "point has dimension " + std::to_string(x.size()) + ", oracle expects " + std::to_string(dim()));
}

double Oracle::value(const Point& x) const {
    check_dim(x);
    value_calls_.fetch_add(1, std::memory_order_relaxed);
    const double f = do_value(x);
    if (!std::isfinite(f)) raise(ErrorCode::NonFiniteValue, "objective value is not finite");
    return f;
}

Vector Oracle::gradient(const Point& x) const {
    check_dim(x);
    gradient_calls_.fetch_add(1, std::memory_order_relaxed);
    Vector g = do_gradient(x);
    if (!g.allFinite()) raise(ErrorCode::NonFiniteValue, "gradient is not finite");
    return g;
}

std::pair<double, Vector> Oracle::value_and_gradient(const Point& x) const {
    check_dim(x);
    value_calls_.fetch_add(1, std::memory_order_relaxed);
    gradient_calls_.fetch_add(1, std::memory_order_relaxed);
    auto out = do_value_and_gradient(x);
    if (!std::isfinite(out.first) || !out.second.allFinite())
        raise(ErrorCode::NonFiniteValue, "objective or gradient is not finite");
    return out;
}

std::pair<double, Vector> Oracle::monitor(const Point& x) const {
    check_dim(x);
    monitor_calls_.fetch_add(1, std::memory_order_relaxed);
    return do_value_and_gradient(x);
}

double Oracle::monitor_value(const Point& x) const {
    check_dim(x);
    monitor_calls_.fetch_add(1, std::memory_order_relaxed);
    return do_value(x);
}

Point Oracle::block_minimize(const Point& x, std::size_t i) const {
    check_dim(x);
    if (!has_block_minimizer()) raise(ErrorCode::Unsupported, "oracle has no exact block minimizer");
    if (i >= block_count(*this)) raise(ErrorCode::InvalidArgument, "block index out of range");
    block_min_calls_.fetch_add(1, std::memory_order_relaxed);
    Point out = do_block_minimize(x, i);
    if (!out.allFinite()) raise(ErrorCode::NonFiniteValue, "block minimizer is not finite");
    return out;
}

Point Oracle::do_block_minimize(const Point&, std::size_t) const {
    raise(ErrorCode::Unsupported, "oracle has no exact block minimizer");
}

OracleCounts Oracle::counts() const noexcept {
    OracleCounts c;
    c.value = value_calls_.load(std::memory_order_relaxed);
    c.gradient = gradient_calls_.load(std::memory_order_relaxed);
    c.block_min = block_min_calls_.load(std::memory_order_relaxed);
    c.monitor = monitor_calls_.load(std::memory_order_relaxed);
    return c;
}

void Oracle::reset_counts() noexcept {
    value_calls_ = 0;
    gradient_calls_ = 0;
    block_min_calls_ = 0;
    monitor_calls_ = 0;
}

std::size_t block_count(const Oracle& oracle) {
    const BlockPartition* p = oracle.partition();
    return p ? p->size() : 1;
}

}  // namespace altmin
