#include "mirrorq/rational.hpp"

#include <ostream>

namespace mirrorq {

std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.str(); }

}  // namespace mirrorq
