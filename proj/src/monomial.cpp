#include "staircase/monomial.hpp"

#include <sstream>

namespace staircase {

std::string Monomial::str() const {
  if (a == 0 && b == 0) return "1";
  std::ostringstream out;
  if (a > 0) {
    out << 'x';
    if (a > 1) out << '^' << a;
  }
  if (b > 0) {
    if (a > 0) out << '*';
    out << 'y';
    if (b > 1) out << '^' << b;
  }
  return out.str();
}

}  // namespace staircase
