#include "altmin/finite_diff.hpp"

#include "altmin/errors.hpp"

#include <cmath>

namespace altmin {

Vector finite_diff_gradient(const Oracle& oracle, const Point& x, double h) {
    if (!(h > 0.0)) raise(ErrorCode::InvalidArgument, "finite-difference step must be positive");
    Vector g(x.size());
    Point xp = x;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        const double xi = x[i];
        xp[i] = xi + h;
        const double fp = oracle.monitor_value(xp);
        xp[i] = xi - h;
        const double fm = oracle.monitor_value(xp);
        xp[i] = xi;
        if (!std::isfinite(fp) || !std::isfinite(fm))
            raise(ErrorCode::NonFiniteValue, "objective not finite near the point");
        g[i] = (fp - fm) / (2.0 * h);
    }
    return g;
}

}  // namespace altmin
