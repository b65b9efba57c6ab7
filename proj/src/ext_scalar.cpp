#include "maxmin/ext_scalar.hpp"

#include <ostream>
#include <sstream>

namespace maxmin {

ExtScalar::ExtScalar(long num, long den) {
  if (den == 0) throw ParseError("zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

ExtScalar ExtScalar::parse(std::string_view text) {
  std::string s(text);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
  std::size_t start = s.find_first_not_of(" \t");
  if (start == std::string::npos) throw ParseError("empty scalar");
  s = s.substr(start);
  if (s == "-inf") return neg_inf();
  if (s == "+inf" || s == "inf") return pos_inf();

  // mpq_class accepts "a/b" but also tolerates things we do not want (a
  // leading '+', whitespace around '/'), so validate the shape first.
  std::size_t i = 0;
  if (s[i] == '-') ++i;
  const std::size_t num_begin = i;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
  if (i == num_begin) throw ParseError("malformed scalar '" + s + "'");
  if (i < s.size()) {
    if (s[i] != '/') throw ParseError("malformed scalar '" + s + "'");
    const std::size_t den_begin = ++i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    if (i == den_begin || i != s.size()) throw ParseError("malformed scalar '" + s + "'");
    if (s.find_first_not_of('0', den_begin) == std::string::npos) {
      throw ParseError("zero denominator in '" + s + "'");
    }
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw ParseError("malformed scalar '" + s + "'");
  q.canonicalize();
  return ExtScalar(std::move(q));
}

std::string ExtScalar::to_string() const {
  switch (kind_) {
    case Kind::NegInf:
      return "-inf";
    case Kind::PosInf:
      return "+inf";
    case Kind::Finite:
      break;
  }
  return value_.get_str();
}

ExtScalar operator+(const ExtScalar& a, const ExtScalar& b) {
  using K = ExtScalar::Kind;
  if (a.kind_ == K::Finite && b.kind_ == K::Finite) return ExtScalar(mpq_class(a.value_ + b.value_));
  if ((a.kind_ == K::NegInf && b.kind_ == K::PosInf) ||
      (a.kind_ == K::PosInf && b.kind_ == K::NegInf)) {
    throw UndefinedInfinitySum();
  }
  return a.is_finite() ? b : a;
}

ExtScalar operator-(const ExtScalar& a, const ExtScalar& b) { return a + (-b); }

ExtScalar ExtScalar::operator-() const {
  switch (kind_) {
    case Kind::NegInf:
      return pos_inf();
    case Kind::PosInf:
      return neg_inf();
    case Kind::Finite:
      break;
  }
  return ExtScalar(mpq_class(-value_));
}

ExtScalar ExtScalar::divided_by(long d) const {
  if (d <= 0) throw std::invalid_argument("divisor must be positive");
  if (!is_finite()) return *this;
  mpq_class q = value_ / mpq_class(d);
  return ExtScalar(std::move(q));
}

std::ostream& operator<<(std::ostream& os, const ExtScalar& s) { return os << s.to_string(); }

std::string to_string(const Vector& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ']';
  return os.str();
}

Vector shifted(const Vector& x, const ExtScalar& c) {
  Vector out;
  out.reserve(x.size());
  for (const auto& v : x) out.push_back(v + c);
  return out;
}

}  // namespace maxmin
