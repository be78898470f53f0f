#ifndef SYZKIT_QUADRATURE_HPP
#define SYZKIT_QUADRATURE_HPP

#include <complex>
#include <vector>

namespace syzkit {

// Product grid for the cycle integrals: Gauss-Legendre along the z-interval
// (never samples the endpoints), uniform/trapezoid along the circle.
struct QuadratureParams {
  int n_t = 32;
  int n_theta = 128;
};

struct GaussLegendreRule {
  std::vector<double> nodes;    // on (0,1)
  std::vector<double> weights;  // sum to 1
};

// Nodes and weights by Newton iteration on the Legendre recurrence.
GaussLegendreRule gauss_legendre_01(int n);

// Compensated (Kahan) accumulator; summation order is fixed by the caller,
// so results are bit-reproducible.
template <typename T>
class KahanSum {
 public:
  void add(const T& x) {
    T y = x - carry_;
    T t = sum_ + y;
    carry_ = (t - sum_) - y;
    sum_ = t;
  }
  T value() const { return sum_; }

 private:
  T sum_{};
  T carry_{};
};

}  // namespace syzkit

#endif
