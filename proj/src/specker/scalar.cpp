#include "specker/scalar.hpp"

#include <cctype>
#include <ostream>

#include "specker/error.hpp"

namespace specker {

const char* domain_name(Domain d) {
  return d == Domain::integer ? "integer" : "rational";
}

Domain parse_domain(std::string_view name) {
  if (name == "integer" || name == "Z") return Domain::integer;
  if (name == "rational" || name == "Q") return Domain::rational;
  fail(ErrorCode::invalid_argument, "unknown domain '" + std::string(name) + "'");
}

namespace {

std::size_t scan_digits(std::string_view text, std::size_t pos) {
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  return pos;
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && text[pos] == '-') {
    negative = true;
    ++pos;
  }
  std::size_t num_end = scan_digits(text, pos);
  if (num_end == pos) {
    throw Error(ErrorCode::parse, "malformed scalar '" + std::string(text) + "'", num_end);
  }
  mpz_class num(std::string(text.substr(pos, num_end - pos)), 10);
  mpz_class den = 1;
  pos = num_end;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    std::size_t den_end = scan_digits(text, pos);
    if (den_end == pos) {
      throw Error(ErrorCode::parse, "malformed scalar '" + std::string(text) + "'", den_end);
    }
    den = mpz_class(std::string(text.substr(pos, den_end - pos)), 10);
    pos = den_end;
    if (den == 0) fail(ErrorCode::domain, "zero denominator in '" + std::string(text) + "'");
  }
  if (pos != text.size()) {
    throw Error(ErrorCode::parse, "malformed scalar '" + std::string(text) + "'", pos);
  }
  if (negative) num = -num;
  return Scalar(mpq_class(num, den));
}

std::string Scalar::to_string() const { return q_.get_str(10); }

Scalar parse_scalar(std::string_view text, Domain domain) {
  Scalar s = Scalar::parse(text);
  require_in_domain(s, domain);
  return s;
}

void require_in_domain(const Scalar& s, Domain domain) {
  if (domain == Domain::integer && !s.is_integer()) {
    fail(ErrorCode::domain, "scalar " + s.to_string() + " is not an integer");
  }
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace specker
