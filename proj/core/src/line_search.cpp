#include "altmin/line_search.hpp"

#include "altmin/errors.hpp"

#include <cmath>

namespace altmin {
namespace {

constexpr double kInvPhi = 0.6180339887498948482;  // (sqrt(5) - 1) / 2

class Evaluator {
public:
    Evaluator(const ScalarFunction& phi, LineSearchResult& best) : phi_(phi), best_(best) {}

    double operator()(double t) {
        const double val = phi_(t);
        ++best_.evaluations;
        if (!std::isfinite(val)) raise(ErrorCode::NonFiniteValue, "line-search function is not finite");
        if (val < best_.value) {
            best_.value = val;
            best_.arg = t;
        }
        return val;
    }

private:
    const ScalarFunction& phi_;
    LineSearchResult& best_;
};

// Golden-section search on [a, b]; the evaluator keeps the best point seen.
void golden_section(Evaluator& eval, double a, double b, double tol_abs, int max_evals) {
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = eval(c);
    double fd = eval(d);
    int evals = 2;
    while (b - a > tol_abs && evals < max_evals) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            if (!(c > a && c < d)) break;
            fc = eval(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            if (!(d > c && d < b)) break;
            fd = eval(d);
        }
        ++evals;
    }
}

void check_options(const LineSearchOptions& opts) {
    if (!(opts.tol > 0.0)) raise(ErrorCode::InvalidArgument, "line-search tolerance must be positive");
    if (opts.max_evaluations < 3) raise(ErrorCode::InvalidArgument, "line search needs at least 3 evaluations");
}

}  // namespace

LineSearchResult line_search_unit_interval(const ScalarFunction& phi, const LineSearchOptions& opts) {
    check_options(opts);
    LineSearchResult best;
    best.value = HUGE_VAL;
    Evaluator eval(phi, best);
    // phi(0) first: ties keep the left endpoint.
    const double f0 = eval(0.0);
    const double f1 = eval(1.0);
    (void)f0;
    (void)f1;
    golden_section(eval, 0.0, 1.0, opts.tol, opts.max_evaluations - 2);
    return best;
}

LineSearchResult line_search_ray(const ScalarFunction& phi, const LineSearchOptions& opts) {
    check_options(opts);
    if (!(opts.initial_step > 0.0)) raise(ErrorCode::InvalidArgument, "initial step must be positive");
    LineSearchResult best;
    best.value = HUGE_VAL;
    Evaluator eval(phi, best);

    const double f0 = eval(0.0);
    double lo = 0.0;
    double mid = opts.initial_step;
    double hi = 0.0;
    double fmid = eval(mid);

    if (fmid < f0) {
        bool bracketed = false;
        for (int i = 0; i < opts.max_doublings; ++i) {
            hi = 2.0 * mid;
            const double fhi = eval(hi);
            if (fhi >= fmid) {
                bracketed = true;
                break;
            }
            lo = mid;
            mid = hi;
            fmid = fhi;
        }
        if (!bracketed)
            raise(ErrorCode::BracketFailure, "function still decreasing after step doubling budget");
    } else {
        hi = mid;
        bool found = false;
        for (int i = 0; i < opts.max_doublings; ++i) {
            mid = 0.5 * hi;
            fmid = eval(mid);
            if (fmid < f0) {
                found = true;
                break;
            }
            hi = mid;
        }
        if (!found) return best;  // best is h = 0
    }
    golden_section(eval, lo, hi, opts.tol * mid, opts.max_evaluations);
    return best;
}

}  // namespace altmin
