#pragma once

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hexcount {

/// Arbitrary-precision signed integer. Every count and determinant is one.
using ExactInt = boost::multiprecision::cpp_int;

/// Raised when an argument lies outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when an exhaustive search would exceed its work budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a geometric object (tiling, path family) is inconsistent.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string to_decimal(const ExactInt& value) { return value.str(); }

/// Parses an optionally signed decimal string. Throws DomainError on malformed input.
inline ExactInt parse_decimal(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) {
    throw DomainError("empty decimal literal");
  }
  ExactInt value = 0;
  for (; pos < text.size(); ++pos) {
    const char ch = text[pos];
    if (ch < '0' || ch > '9') {
      throw DomainError("malformed decimal literal: " + std::string(text));
    }
    value *= 10;
    value += ch - '0';
  }
  return negative ? ExactInt(-value) : value;
}

namespace detail {

// Shared memo of n! and prod_{k<=n} k!. Grows on demand; lookups take a
// shared lock, growth takes the exclusive one.
class FactorialTable {
 public:
  static FactorialTable& instance() {
    static FactorialTable table;
    return table;
  }

  ExactInt factorial(std::int64_t n) {
    ensure(n);
    std::shared_lock lock(mutex_);
    return factorials_[static_cast<std::size_t>(n)];
  }

  ExactInt superfactorial(std::int64_t n) {
    ensure(n);
    std::shared_lock lock(mutex_);
    return superfactorials_[static_cast<std::size_t>(n)];
  }

 private:
  FactorialTable() : factorials_{1}, superfactorials_{1} {}

  void ensure(std::int64_t n) {
    {
      std::shared_lock lock(mutex_);
      if (static_cast<std::size_t>(n) < factorials_.size()) return;
    }
    std::unique_lock lock(mutex_);
    while (factorials_.size() <= static_cast<std::size_t>(n)) {
      const auto k = static_cast<std::int64_t>(factorials_.size());
      factorials_.push_back(factorials_.back() * k);
      superfactorials_.push_back(superfactorials_.back() * factorials_.back());
    }
  }

  std::shared_mutex mutex_;
  std::vector<ExactInt> factorials_;
  std::vector<ExactInt> superfactorials_;
};

}  // namespace detail

inline ExactInt factorial(std::int64_t n) {
  if (n < 0) throw DomainError("factorial of negative number " + std::to_string(n));
  return detail::FactorialTable::instance().factorial(n);
}

/// Rising factorial (a)_n = a(a+1)...(a+n-1); (a)_0 = 1. Any integer base.
inline ExactInt pochhammer(std::int64_t a, std::int64_t n) {
  if (n < 0) throw DomainError("pochhammer length must be nonnegative, got " + std::to_string(n));
  ExactInt result = 1;
  for (std::int64_t i = 0; i < n; ++i) {
    if (a + i == 0) return 0;
    result *= a + i;
  }
  return result;
}

/// C(n,k) with the zero convention outside 0 <= k <= n. A negative upper
/// index is rejected.
inline ExactInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw DomainError("binomial with negative upper index " + std::to_string(n));
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  ExactInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: result is C(n-k+i, i) here
  }
  return result;
}

/// prod_{k=0}^{n} k!
inline ExactInt superfactorial(std::int64_t n) {
  if (n < 0) throw DomainError("superfactorial of negative number " + std::to_string(n));
  return detail::FactorialTable::instance().superfactorial(n);
}

/// prod_{k=0}^{last} k!, with the empty product (last < 0) equal to 1.
inline ExactInt factorial_product(std::int64_t last) {
  return last < 0 ? ExactInt(1) : superfactorial(last);
}

/// Exact quotient; throws std::logic_error if the division leaves a remainder.
inline ExactInt exact_quotient(const ExactInt& numerator, const ExactInt& denominator,
                               std::string_view what) {
  if (denominator == 0) throw DomainError(std::string(what) + ": zero denominator");
  ExactInt quotient;
  ExactInt remainder;
  boost::multiprecision::divide_qr(numerator, denominator, quotient, remainder);
  if (remainder != 0) {
    throw std::logic_error(std::string(what) + ": inexact division " + to_decimal(numerator) +
                           " / " + to_decimal(denominator));
  }
  return quotient;
}

}  // namespace hexcount
