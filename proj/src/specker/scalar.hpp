#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace specker {

/// Which totally ordered domain an algebra's coefficients live in.
enum class Domain { integer, rational };

const char* domain_name(Domain d);
Domain parse_domain(std::string_view name);

/**
 * Exact element of a totally ordered domain. Values are stored as GMP
 * rationals in lowest terms with a positive denominator; integers are the
 * rationals with denominator 1.
 */
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses `-?digits(/digits)?`. Throws Error{parse} on malformed text and
  /// Error{domain} on a zero denominator.
  static Scalar parse(std::string_view text);

  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  const mpq_class& raw() const { return q_; }

  /// Canonical text: `n` or `p/q`.
  std::string to_string() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b) { return Scalar(mpq_class(a.q_ + b.q_)); }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return Scalar(mpq_class(a.q_ - b.q_)); }
  friend Scalar operator*(const Scalar& a, const Scalar& b) { return Scalar(mpq_class(a.q_ * b.q_)); }
  Scalar operator-() const { return Scalar(mpq_class(-q_)); }
  Scalar& operator+=(const Scalar& o) { q_ += o.q_; return *this; }
  Scalar& operator*=(const Scalar& o) { q_ *= o.q_; return *this; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

inline const Scalar& min(const Scalar& a, const Scalar& b) { return b < a ? b : a; }
inline const Scalar& max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

/// parse_scalar with a domain restriction: integer domains reject p/q with q != 1.
Scalar parse_scalar(std::string_view text, Domain domain = Domain::rational);

/// Throws Error{domain} if `s` is not a member of `domain`.
void require_in_domain(const Scalar& s, Domain domain);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace specker
