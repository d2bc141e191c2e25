#include "dsaudit/rational.hpp"

#include <cctype>
#include <ostream>

#include "dsaudit/error.hpp"

namespace dsaudit {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad_number(std::string_view text, const char* why) {
  throw Error(ErrorKind::Parse, "invalid rational '" + std::string(text) + "': " + why);
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorKind::Parse, "zero denominator");
  value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (body.empty()) bad_number(text, "empty");

  mpq_class value;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const auto num = body.substr(0, slash);
    const auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_number(text, "expected p/q");
    const mpz_class d(std::string(den), 10);
    if (d == 0) bad_number(text, "zero denominator");
    value = mpq_class(mpz_class(std::string(num), 10), d);
  } else if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    const auto whole = body.substr(0, dot);
    const auto frac = body.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) {
      bad_number(text, "expected decimal digits");
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    const mpz_class digits(std::string(whole) + std::string(frac), 10);
    value = mpq_class(digits, scale);
  } else {
    if (!all_digits(body)) bad_number(text, "expected integer, p/q or decimal");
    value = mpq_class(mpz_class(std::string(body), 10));
  }
  value.canonicalize();
  if (negative) value = -value;
  return Rational(std::move(value));
}

std::string Rational::to_string() const { return value_.get_str(); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorKind::InternalConsistency, "division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateLabel: return "duplicate label";
    case ErrorKind::EmptyFrame: return "empty frame";
    case ErrorKind::FrameTooLarge: return "frame too large";
    case ErrorKind::UnknownLabel: return "unknown label";
    case ErrorKind::FrameMismatch: return "frame mismatch";
    case ErrorKind::MassOnEmptySet: return "mass on empty set";
    case ErrorKind::NegativeMass: return "negative mass";
    case ErrorKind::MassSumNotOne: return "masses do not sum to 1";
    case ErrorKind::DuplicateFocalSet: return "duplicate focal set";
    case ErrorKind::NotABeliefFunction: return "not a belief function";
    case ErrorKind::TotalConflict: return "total conflict";
    case ErrorKind::ParameterOutOfRange: return "parameter out of range";
    case ErrorKind::InternalConsistency: return "internal consistency failure";
    case ErrorKind::Parse: return "parse error";
  }
  return "unknown error";
}

}  // namespace dsaudit
