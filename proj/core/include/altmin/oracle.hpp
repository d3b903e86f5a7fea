#pragma once

#include "altmin/partition.hpp"
#include "altmin/types.hpp"

#include <atomic>
#include <cstdint>
#include <optional>
#include <utility>

namespace altmin {

struct OracleCounts {
    std::int64_t value = 0;
    std::int64_t gradient = 0;
    std::int64_t block_min = 0;
    /// Evaluations made only to fill traces; never part of a method's cost.
    std::int64_t monitor = 0;

    /// Cost unit used on comparison axes: one full gradient or one exact
    /// block update (both are a single pass over the problem data).
    std::int64_t gradient_equivalent() const noexcept { return gradient + block_min; }
};

/// Problem interface: f, its gradient and, optionally, a block structure with
/// exact block minimizers.
///
/// Public entry points count calls and check for non-finite output, then
/// forward to the protected do_* hooks. value/gradient must be safe to call
/// concurrently.
class Oracle {
public:
    virtual ~Oracle() = default;
    Oracle() = default;
    /// Copies describe the same problem with fresh call counters.
    Oracle(const Oracle&) noexcept {}
    Oracle& operator=(const Oracle&) = delete;

    virtual int dim() const = 0;

    double value(const Point& x) const;
    Vector gradient(const Point& x) const;
    std::pair<double, Vector> value_and_gradient(const Point& x) const;

    /// Trace-only evaluation, counted under `monitor`.
    std::pair<double, Vector> monitor(const Point& x) const;
    double monitor_value(const Point& x) const;

    /// Exact minimizer of f over block `i` with the other blocks fixed.
    /// Only coordinates of block `i` change.
    Point block_minimize(const Point& x, std::size_t i) const;

    virtual const BlockPartition* partition() const { return nullptr; }
    virtual bool has_block_minimizer() const { return false; }
    virtual std::optional<double> known_L() const { return std::nullopt; }
    virtual std::optional<double> known_mu() const { return std::nullopt; }

    OracleCounts counts() const noexcept;
    void reset_counts() noexcept;

protected:
    virtual double do_value(const Point& x) const = 0;
    virtual Vector do_gradient(const Point& x) const = 0;
    virtual std::pair<double, Vector> do_value_and_gradient(const Point& x) const {
        return {do_value(x), do_gradient(x)};
    }
    virtual Point do_block_minimize(const Point& x, std::size_t i) const;

private:
    void check_dim(const Point& x) const;

    mutable std::atomic<std::int64_t> value_calls_{0};
    mutable std::atomic<std::int64_t> gradient_calls_{0};
    mutable std::atomic<std::int64_t> block_min_calls_{0};
    mutable std::atomic<std::int64_t> monitor_calls_{0};
};

/// Number of blocks the oracle exposes (1 when it has no partition).
std::size_t block_count(const Oracle& oracle);

/// Wraps plain callables as an oracle; mainly for tests and small examples.
class FunctionOracle final : public Oracle {
public:
    using ValueFn = std::function<double(const Point&)>;
    using GradientFn = std::function<Vector(const Point&)>;

    FunctionOracle(int dim, ValueFn value, GradientFn gradient,
                   std::optional<double> L = std::nullopt, std::optional<double> mu = std::nullopt)
        : dim_(dim), value_(std::move(value)), gradient_(std::move(gradient)), L_(L), mu_(mu) {}

    int dim() const override { return dim_; }
    std::optional<double> known_L() const override { return L_; }
    std::optional<double> known_mu() const override { return mu_; }

protected:
    double do_value(const Point& x) const override { return value_(x); }
    Vector do_gradient(const Point& x) const override { return gradient_(x); }

private:
    int dim_;
    ValueFn value_;
    GradientFn gradient_;
    std::optional<double> L_;
    std::optional<double> mu_;
};

}  // namespace altmin
