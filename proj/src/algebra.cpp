#include "qstack/algebra.hpp"

namespace qstack {

std::string format_relation(const Quiver& q, const Relation& r) {
  std::string s;
  for (size_t i = 0; i < r.terms.size(); ++i) {
    const auto& [p, c] = r.terms[i];
    Rational a = c;
    if (i > 0) {
      s += a < Rational(0) ? " - " : " + ";
      if (a < Rational(0)) a = -a;
    } else if (a < Rational(0)) {
      s += "-";
      a = -a;
    }
    if (a != Rational(1)) s += a.str() + " ";
    s += format_path(q, p);
  }
  return s;
}

Relation parse_relation(const Quiver& q, const std::string& text) {
  auto minus = text.find(" - ");
  if (minus == std::string::npos) return Relation::monomial(parse_path(q, text));
  return Relation::binomial(parse_path(q, text.substr(0, minus)), parse_path(q, text.substr(minus + 3)));
}

}  // namespace qstack
