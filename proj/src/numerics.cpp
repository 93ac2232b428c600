#include "numerics.hpp"

#include <stdexcept>

namespace qppg {

std::vector<double> finite_diff_grad(const std::function<double(const std::vector<double>&)>& f,
                                     const std::vector<double>& x, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("finite_diff_grad: h must be positive");
    std::vector<double> grad(x.size());
    std::vector<double> probe = x;
    for (size_t i = 0; i < x.size(); ++i) {
        probe[i] = x[i] + h;
        double fp = f(probe);
        probe[i] = x[i] - h;
        double fm = f(probe);
        probe[i] = x[i];
        grad[i] = (fp - fm) / (2.0 * h);
    }
    return grad;
}

}  // namespace qppg
