#include "symip/rational.hpp"

#include <cctype>

namespace symip {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = (s[0] == '-');
    s.erase(0, 1);
  }
  if (s.empty()) throw ParseError("empty number in '" + text + "'");

  Rational value;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string p = s.substr(0, slash);
    std::string q = s.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q))
      throw ParseError("malformed fraction '" + text + "'");
    Integer num(p, 10), den(q, 10);
    if (den == 0) throw ParseError("zero denominator in '" + text + "'");
    value = Rational(num, den);
    value.canonicalize();
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!all_digits(whole) || !all_digits(frac))
      throw ParseError("malformed decimal '" + text + "'");
    Integer num(whole + frac, 10);
    Integer den = 1;
    for (size_t i = 0; i < frac.size(); ++i) den *= 10;
    value = Rational(num, den);
    value.canonicalize();
  } else {
    if (!all_digits(s)) throw ParseError("malformed number '" + text + "'");
    value = Rational(Integer(s, 10));
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const RatVector& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

bool is_integral(const Rational& q) { return q.get_den() == 1; }

bool is_integral(const RatVector& v) {
  for (const auto& q : v)
    if (!is_integral(q)) return false;
  return true;
}

IntVector to_int_vector(const RatVector& v) {
  IntVector out;
  out.reserve(v.size());
  for (const auto& q : v) {
    if (!is_integral(q)) throw DimensionError("point is not integral: " + to_string(q));
    if (!q.get_num().fits_slong_p())
      throw std::overflow_error("integer coordinate out of range");
    out.push_back(q.get_num().get_si());
  }
  return out;
}

RatVector to_rat_vector(const IntVector& v) {
  RatVector out;
  out.reserve(v.size());
  for (long long x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

Rational inner_product(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw DimensionError("inner product length mismatch");
  Rational sum = 0;
  for (size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

Rational squared_norm(const RatVector& v) { return inner_product(v, v); }

}  // namespace symip
