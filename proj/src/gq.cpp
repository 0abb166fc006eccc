#include "jf/gq.hpp"

#include <cctype>

namespace jf {

Q parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Q q(parse_rational(s.substr(0, slash)) / parse_rational(s.substr(slash + 1)));
    return q;
  }
  std::size_t i = 0;
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') neg = (s[i++] == '-');
  mpz_class mant = 0;
  long scale = 0;
  bool digits = false, dot = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mant = mant * 10 + (c - '0');
      if (dot) --scale;
      digits = true;
    } else if (c == '.' && !dot) {
      dot = true;
    } else {
      break;
    }
  }
  if (!digits) throw std::invalid_argument("parse_rational: no digits in '" + s + "'");
  if (i < s.size()) {
    if (s[i] != 'e' && s[i] != 'E') throw std::invalid_argument("parse_rational: bad literal '" + s + "'");
    std::string ex = s.substr(i + 1);
    if (ex.empty()) throw std::invalid_argument("parse_rational: bad exponent in '" + s + "'");
    std::size_t used = 0;
    long e = std::stol(ex, &used);
    if (used != ex.size()) throw std::invalid_argument("parse_rational: bad exponent in '" + s + "'");
    scale += e;
  }
  Q q(mant);
  q *= qpow(Q(10), scale);
  q.canonicalize();
  return neg ? Q(-q) : q;
}

}  // namespace jf
