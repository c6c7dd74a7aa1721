#ifndef CAYLEY_ERROR_HPP
#define CAYLEY_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cayley {

// Size limits applied by constructors and enumerations. Exceeding one throws
// CapExceeded rather than attempting the computation.
struct Limits {
  std::size_t max_order = 4096;   // any group table
  std::size_t max_aut = 10000;    // automorphism enumeration
  std::size_t max_homs = 100000;  // hom-set enumeration
};

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cayley

#endif  // CAYLEY_ERROR_HPP
