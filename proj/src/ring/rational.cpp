#include "hamloc/rational.hpp"

#include <cctype>

#include "hamloc/error.hpp"

namespace hamloc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OrderMismatch: return "order-mismatch";
    case ErrorCode::NotAUnit: return "not-a-unit";
    case ErrorCode::UnsupportedShape: return "unsupported-shape";
    case ErrorCode::MalformedEulerClass: return "malformed-euler-class";
    case ErrorCode::InvalidWeight: return "invalid-weight";
    case ErrorCode::Precondition: return "precondition";
    case ErrorCode::DivisionByZero: return "division-by-zero";
    case ErrorCode::InternalInvariant: return "internal-invariant";
    case ErrorCode::Parse: return "parse";
  }
  return "unknown";
}

std::string format_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  std::string_view digits = num;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (!all_digits(digits) || !all_digits(den))
    throw Error(ErrorCode::Parse, "not a rational: '" + std::string(text) + "'");

  BigInt p(std::string(num.front() == '+' ? num.substr(1) : num));
  BigInt q{std::string(den)};
  if (q == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace hamloc
