#include "pellredei/projective.hpp"

#include <ostream>

#include "pellredei/errors.hpp"

namespace pellredei {

ProjectiveRational ProjectiveRational::ratio(const BigRational& n, const BigRational& d) {
  if (d.is_zero()) {
    if (n.is_zero()) throw DomainError("0/0 is not a point of the projective line");
    return kInfinity;
  }
  return n / d;
}

const BigRational& ProjectiveRational::value() const {
  if (const auto* v = std::get_if<BigRational>(&v_)) return *v;
  throw DomainError("value() called on the point at infinity");
}

std::string ProjectiveRational::to_string() const {
  return is_infinite() ? std::string("INF") : value().to_string();
}

std::ostream& operator<<(std::ostream& os, const ProjectiveRational& v) { return os << v.to_string(); }

}  // namespace pellredei
