#include "tdq/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace tdq {

namespace {

bool is_integer_text(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Scalar make_scalar(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Scalar s(num, den);
  s.canonicalize();
  return s;
}

Scalar parse_scalar(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_text(text, true)) {
      throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    return Scalar(parse_integer(text));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_integer_text(num, true) || !is_integer_text(den, false)) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  mpz_class d = parse_integer(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Scalar s(parse_integer(num), d);
  s.canonicalize();
  return s;
}

std::string to_string(const Scalar& s) {
  if (s.get_den() == 1) return s.get_num().get_str();
  return s.get_num().get_str() + "/" + s.get_den().get_str();
}

Scalar pow(const Scalar& x, int exponent) {
  if (exponent < 0) {
    if (x == 0) throw std::domain_error("negative power of zero");
    return pow(Scalar(1 / x), -exponent);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  Scalar r(num, den);
  r.canonicalize();
  return r;
}

FieldConfig::FieldConfig(Scalar q) : q_(std::move(q)) {
  q_.canonicalize();
  if (q_ == 0 || q_ == 1 || q_ == -1) {
    throw std::invalid_argument("q must not be 0, 1 or -1 (got " + to_string(q_) + ")");
  }
}

Scalar q_bracket(unsigned n, const FieldConfig& cfg) {
  const int e = static_cast<int>(n);
  return Scalar((cfg.qpow(e) - cfg.qpow(-e)) / cfg.q_minus_qinv());
}

}  // namespace tdq
