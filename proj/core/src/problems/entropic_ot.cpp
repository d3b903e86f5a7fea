#include "altmin/problems/entropic_ot.hpp"

#include "altmin/errors.hpp"

#include <cmath>
#include <random>

namespace altmin::problems {
namespace {

// Row-wise log-sum-exp of M.
Vector log_sum_exp_rows(const Matrix& M) {
    const Vector m = M.rowwise().maxCoeff();
    return m.array() + (M.colwise() - m).array().exp().rowwise().sum().log();
}

}  // namespace

EntropicOTDual::EntropicOTDual(Matrix cost, Vector r, Vector c, double gamma)
    : cost_(std::move(cost)),
      r_(std::move(r)),
      c_(std::move(c)),
      gamma_(gamma),
      partition_(BlockPartition::contiguous({std::max<int>(1, static_cast<int>(r_.size())),
                                             std::max<int>(1, static_cast<int>(r_.size()))})) {
    const Eigen::Index n = r_.size();
    if (n == 0 || cost_.rows() != n || cost_.cols() != n || c_.size() != n)
        raise(ErrorCode::DimensionMismatch, "cost must be N x N with marginals of length N");
    if (!(gamma_ > 0.0) || !std::isfinite(gamma_)) raise(ErrorCode::InvalidArgument, "gamma must be positive");
    if (!cost_.allFinite() || cost_.minCoeff() < 0.0)
        raise(ErrorCode::InvalidArgument, "cost must be finite and nonnegative");
    for (const Vector* m : {&r_, &c_}) {
        if (!m->allFinite() || m->minCoeff() < 1e-300)
            raise(ErrorCode::InvalidArgument, "marginals must have entries >= 1e-300");
        if (std::abs(m->sum() - 1.0) > 1e-12) raise(ErrorCode::InvalidArgument, "marginals must sum to 1");
    }
    neg_cost_over_gamma_ = -cost_ / gamma_;
    log_r_ = r_.array().log();
    log_c_ = c_.array().log();
}

Point EntropicOTDual::stack(const Vector& u, const Vector& v) const {
    if (u.size() != size() || v.size() != size()) raise(ErrorCode::DimensionMismatch, "u and v must have length N");
    Point p(dim());
    p << u, v;
    return p;
}

Point EntropicOTDual::canonicalize(const Point& p) const {
    const double t = 0.5 * (p.head(size()).mean() - p.tail(size()).mean());
    Point out = p;
    out.head(size()).array() -= t;
    out.tail(size()).array() += t;
    return out;
}

double EntropicOTDual::do_value(const Point& p) const { return do_value_and_gradient(p).first; }

Vector EntropicOTDual::do_gradient(const Point& p) const { return do_value_and_gradient(p).second; }

std::pair<double, Vector> EntropicOTDual::do_value_and_gradient(const Point& p) const {
    const int n = size();
    const auto u = p.head(n);
    const auto v = p.tail(n);
    Matrix M = neg_cost_over_gamma_;
    M.colwise() += u;
    M.rowwise() += v.transpose();
    const double shift = M.maxCoeff();
    const Matrix E = (M.array() - shift).exp().matrix();
    const Vector rows = E.rowwise().sum();
    const Vector cols = E.colwise().sum().transpose();
    const double total = rows.sum();
    const double value = gamma_ * (shift + std::log(total) - u.dot(r_) - v.dot(c_));
    Vector g(2 * n);
    g.head(n) = gamma_ * (rows / total - r_);
    g.tail(n) = gamma_ * (cols / total - c_);
    return {value, std::move(g)};
}

Point EntropicOTDual::do_block_minimize(const Point& p, std::size_t block) const {
    const int n = size();
    Point out = p;
    if (block == 0) {
        Matrix M = neg_cost_over_gamma_;
        M.rowwise() += p.tail(n).transpose();
        out.head(n) = log_r_ - log_sum_exp_rows(M);
    } else {
        Matrix M = neg_cost_over_gamma_.transpose();
        M.rowwise() += p.head(n).transpose();
        out.tail(n) = log_c_ - log_sum_exp_rows(M);
    }
    return out;
}

Matrix grid_cost_1d(int N) {
    if (N <= 0) raise(ErrorCode::InvalidArgument, "grid size must be positive");
    Matrix C = Matrix::Zero(N, N);
    if (N == 1) return C;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            const double d = static_cast<double>(i - j) / (N - 1);
            C(i, j) = d * d;
        }
    return C / C.maxCoeff();
}

Vector smoothed_histogram(int N, std::uint64_t seed) {
    if (N <= 0) raise(ErrorCode::InvalidArgument, "histogram size must be positive");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    Vector h(N);
    for (int i = 0; i < N; ++i) h[i] = unif(rng);
    // Two Gaussian bumps on top of the noise.
    for (int bump = 0; bump < 2; ++bump) {
        const double center = unif(rng) * (N - 1);
        const double width = 0.05 * N + 0.1 * N * unif(rng);
        const double height = 2.0 + 3.0 * unif(rng);
        for (int i = 0; i < N; ++i) {
            const double t = (i - center) / width;
            h[i] += height * std::exp(-0.5 * t * t);
        }
    }
    for (int pass = 0; pass < 3 && N > 2; ++pass) {
        Vector s = h;
        for (int i = 0; i < N; ++i) {
            const double left = h[std::max(i - 1, 0)];
            const double right = h[std::min(i + 1, N - 1)];
            s[i] = 0.25 * left + 0.5 * h[i] + 0.25 * right;
        }
        h = s;
    }
    h.array() += 1e-3 * h.maxCoeff();
    return h / h.sum();
}

EntropicOTDual make_desk_eot(int N, double gamma, std::uint64_t seed) {
    return EntropicOTDual(grid_cost_1d(N), smoothed_histogram(N, 2 * seed + 1), smoothed_histogram(N, 2 * seed + 2),
                          gamma);
}

EntropicOTDual make_random_eot(int N, double gamma, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    Matrix C(N, N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) C(i, j) = unif(rng);
    Vector r(N), c(N);
    for (int i = 0; i < N; ++i) r[i] = 0.1 + unif(rng);
    for (int i = 0; i < N; ++i) c[i] = 0.1 + unif(rng);
    return EntropicOTDual(C, r / r.sum(), c / c.sum(), gamma);
}

}  // namespace altmin::problems
