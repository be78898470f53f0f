#ifndef SYZKIT_ERRORS_HPP
#define SYZKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace syzkit {

// Data-dependent mathematical failures. The CLI maps these to exit code 2,
// as opposed to usage errors (std::invalid_argument and friends -> exit 1).
enum class errc {
  boundary_ray,
  non_proportional,
  empty_polytope,
  redundant_facet,
  kahler_mismatch,
  degenerate_interval,
  quadrature_divergence,
  zero_fiber_coordinate,
  not_normalized,
  root_separation,
};

const char* errc_name(errc c);

class MathError : public std::runtime_error {
 public:
  MathError(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

}  // namespace syzkit

#endif
