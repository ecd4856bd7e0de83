#include "affmon/scalar.hpp"

namespace affmon {

IntVector clear_denominators(const RatVector& v) {
  Integer l = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) l = lcm(l, denominator(v(i)));
  IntVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = numerator(v(i)) * (l / denominator(v(i)));
  return primitive(out);
}

std::string to_string(const IntVector& v) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += v(i).str();
  }
  return out + ")";
}

}  // namespace affmon
