#pragma once

// Exact rational numbers over 64-bit integers.
//
// Every intermediate product is formed in 128 bits and reduced before being
// narrowed back; a result that still does not fit throws std::overflow_error
// rather than silently wrapping.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <compare>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fdist {

class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit on purpose
  Rational(std::int64_t n, std::int64_t d) { assign(n, d); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  explicit operator double() const { return to_double(); }

  // Parses "3", "-0.0625", "1.5e-2" or "1/16".
  static Rational parse(std::string_view text);

  // Exact conversion of a finite double (every double is a dyadic rational).
  static Rational from_double(double v);

  // "1/16"-style exact text; integers print without a denominator.
  std::string to_fraction_string() const;
  // Exact decimal text when the denominator is of the form 2^a 5^b, else
  // the fraction form.
  std::string to_string() const;
  bool is_terminating_decimal() const;

  friend Rational operator+(const Rational& a, const Rational& b) {
    using i128 = __int128;
    std::int64_t g = std::gcd(a.den_, b.den_);
    i128 n = static_cast<i128>(a.num_) * (b.den_ / g) + static_cast<i128>(b.num_) * (a.den_ / g);
    i128 d = static_cast<i128>(a.den_ / g) * b.den_;
    return from_wide(n, d);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    using i128 = __int128;
    return from_wide(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    using i128 = __int128;
    return from_wide(static_cast<i128>(a.num_) * b.den_, static_cast<i128>(a.den_) * b.num_);
  }
  Rational operator-() const {
    Rational r;
    if (num_ == INT64_MIN) throw std::overflow_error("rational overflow");
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    using i128 = __int128;
    i128 l = static_cast<i128>(a.num_) * b.den_;
    i128 r = static_cast<i128>(b.num_) * a.den_;
    return l <=> r;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  void assign(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    from_wide_into(*this, n, d);
  }

  static Rational from_wide(__int128 n, __int128 d) {
    Rational r;
    from_wide_into(r, n, d);
    return r;
  }

  static __int128 wide_gcd(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static void from_wide_into(Rational& r, __int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 g = wide_gcd(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (n == 0) d = 1;
    if (n > INT64_MAX || n < -static_cast<__int128>(INT64_MAX) || d > INT64_MAX)
      throw std::overflow_error("rational overflow");
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Rational abs(const Rational& r) { return r < Rational(0) ? -r : r; }

inline Rational Rational::parse(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  };
  std::string_view s = text;
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (s.empty()) return fail();

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Rational n = parse(s.substr(0, slash));
    Rational d = parse(s.substr(slash + 1));
    if (d == Rational(0)) return fail();
    return n / d;
  }

  bool negative = false;
  std::size_t i = 0;
  if (s[i] == '+' || s[i] == '-') {
    negative = s[i] == '-';
    ++i;
  }
  __int128 mantissa = 0;
  int scale = 0;  // value = mantissa * 10^scale
  bool any_digit = false;
  bool seen_point = false;
  const __int128 limit = static_cast<__int128>(1) << 100;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c >= '0' && c <= '9') {
      any_digit = true;
      mantissa = mantissa * 10 + (c - '0');
      if (mantissa > limit) throw std::overflow_error("number has too many digits: '" + std::string(text) + "'");
      if (seen_point) --scale;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (c == 'e' || c == 'E') {
      break;
    } else {
      return fail();
    }
  }
  if (!any_digit) return fail();
  if (i < s.size()) {
    std::string exp_text(s.substr(i + 1));
    if (exp_text.empty()) return fail();
    char* end = nullptr;
    long e = std::strtol(exp_text.c_str(), &end, 10);
    if (*end != '\0' || e > 30 || e < -30) return fail();
    scale += static_cast<int>(e);
  }
  __int128 num = negative ? -mantissa : mantissa;
  __int128 den = 1;
  for (; scale > 0; --scale) num *= 10;
  for (; scale < 0; ++scale) den *= 10;
  return from_wide(num, den);
}

inline Rational Rational::from_double(double v) {
  if (!std::isfinite(v)) throw std::domain_error("non-finite value");
  int exp = 0;
  double frac = std::frexp(v, &exp);  // v = frac * 2^exp, |frac| in [0.5, 1)
  // 53 significant bits suffice.
  auto mant = static_cast<std::int64_t>(std::ldexp(frac, 53));
  exp -= 53;
  Rational r(mant);
  Rational two(2);
  for (; exp > 0; --exp) r *= two;
  // Strip factors of two before dividing to keep the denominator in range.
  while (exp < 0 && (r.num_ % 2 == 0) && r.num_ != 0) {
    r.num_ /= 2;
    ++exp;
  }
  for (; exp < 0; ++exp) r /= two;
  return r;
}

inline std::string Rational::to_fraction_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

inline bool Rational::is_terminating_decimal() const {
  std::int64_t d = den_;
  while (d % 2 == 0) d /= 2;
  while (d % 5 == 0) d /= 5;
  return d == 1;
}

inline std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  if (!is_terminating_decimal()) return to_fraction_string();
  // Scale to a power of ten; digits = number of places needed.
  std::int64_t d = den_;
  int twos = 0, fives = 0;
  while (d % 2 == 0) { d /= 2; ++twos; }
  while (d % 5 == 0) { d /= 5; ++fives; }
  int places = std::max(twos, fives);
  if (places > 36) return to_fraction_string();
  __int128 scaled = static_cast<__int128>(num_);
  // num/den = num * (10^places / den) / 10^places
  __int128 pow10 = 1;
  for (int k = 0; k < places; ++k) pow10 *= 10;
  scaled = scaled * (pow10 / den_);
  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  __int128 whole = scaled / pow10;
  __int128 rest = scaled % pow10;
  std::string frac_digits(static_cast<std::size_t>(places), '0');
  for (int k = places - 1; k >= 0; --k) {
    frac_digits[static_cast<std::size_t>(k)] = static_cast<char>('0' + static_cast<int>(rest % 10));
    rest /= 10;
  }
  while (!frac_digits.empty() && frac_digits.back() == '0') frac_digits.pop_back();
  std::string out = negative ? "-" : "";
  out += std::to_string(static_cast<std::int64_t>(whole));
  if (!frac_digits.empty()) out += "." + frac_digits;
  return out;
}

}  // namespace fdist
