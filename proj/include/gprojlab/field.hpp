#pragma once

// Scalar fields used by the library: exact rationals (GMP) and prime fields Z/p.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gprojlab {

using Rational = mpq_class;

/// Element of the prime field Z/P.
template <std::uint32_t P>
class Zp {
  static_assert(P >= 2, "modulus must be at least 2");

 public:
  Zp() = default;
  Zp(std::int64_t v) : value_(normalize(v)) {}  // NOLINT: implicit like an integer literal

  std::uint32_t value() const { return value_; }

  friend Zp operator+(Zp a, Zp b) { return Zp(raw((std::uint64_t{a.value_} + b.value_) % P)); }
  friend Zp operator-(Zp a, Zp b) { return Zp(raw((std::uint64_t{a.value_} + P - b.value_) % P)); }
  friend Zp operator*(Zp a, Zp b) { return Zp(raw((std::uint64_t{a.value_} * b.value_) % P)); }
  friend Zp operator/(Zp a, Zp b) { return a * b.inverse(); }
  Zp operator-() const { return Zp(raw((P - value_) % P)); }
  Zp& operator+=(Zp b) { return *this = *this + b; }
  Zp& operator-=(Zp b) { return *this = *this - b; }
  Zp& operator*=(Zp b) { return *this = *this * b; }
  Zp& operator/=(Zp b) { return *this = *this / b; }
  friend bool operator==(Zp a, Zp b) { return a.value_ == b.value_; }
  friend bool operator!=(Zp a, Zp b) { return a.value_ != b.value_; }

  Zp inverse() const {
    if (value_ == 0) throw std::domain_error("division by zero in Z/p");
    // Fermat: a^(p-2).
    std::uint64_t result = 1, base = value_, e = P - 2;
    while (e) {
      if (e & 1) result = result * base % P;
      base = base * base % P;
      e >>= 1;
    }
    return Zp(raw(result));
  }

 private:
  struct raw {
    explicit raw(std::uint64_t v) : v(static_cast<std::uint32_t>(v)) {}
    std::uint32_t v;
  };
  explicit Zp(raw r) : value_(r.v) {}

  static std::uint32_t normalize(std::int64_t v) {
    std::int64_t m = v % static_cast<std::int64_t>(P);
    if (m < 0) m += P;
    return static_cast<std::uint32_t>(m);
  }

  std::uint32_t value_ = 0;
};

/// Prime used by the CLI's `--field p` mode.
inline constexpr std::uint32_t kDefaultPrime = 32003;
using PrimeField = Zp<kDefaultPrime>;

template <class K>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static constexpr std::uint32_t characteristic = 0;
  static std::string name() { return "rat"; }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static std::string to_string(const Rational& x) { return x.get_str(); }

  /// Parses `p/q` or an integer. Throws std::invalid_argument.
  static Rational parse(std::string_view text) {
    if (!valid_literal(text)) throw std::invalid_argument("not a rational literal: " + std::string(text));
    Rational r;
    if (r.set_str(std::string(text), 10) != 0) throw std::invalid_argument("not a rational literal: " + std::string(text));
    if (sgn(r.get_den()) == 0) throw std::invalid_argument("zero denominator");
    r.canonicalize();
    return r;
  }

  static bool valid_literal(std::string_view text) {
    std::size_t i = 0;
    auto digits = [&] {
      std::size_t start = i;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
      return i > start;
    };
    if (i < text.size() && text[i] == '-') ++i;
    if (!digits()) return false;
    if (i < text.size() && text[i] == '/') {
      ++i;
      if (!digits()) return false;
      if (text.find_first_not_of('0', text.find('/') + 1) == std::string_view::npos) return false;
    }
    return i == text.size();
  }
};

template <std::uint32_t P>
struct FieldTraits<Zp<P>> {
  static constexpr std::uint32_t characteristic = P;
  static std::string name() { return "p" + std::to_string(P); }
  static bool is_zero(Zp<P> x) { return x.value() == 0; }
  static std::string to_string(Zp<P> x) { return std::to_string(x.value()); }

  static Zp<P> parse(std::string_view text) {
    Rational r = FieldTraits<Rational>::parse(text);
    mpz_class num = r.get_num() % P, den = r.get_den() % P;
    if (num < 0) num += P;
    if (den == 0) throw std::invalid_argument("denominator vanishes modulo p");
    return Zp<P>(num.get_si()) / Zp<P>(den.get_si());
  }
};

template <class K>
bool is_zero(const K& x) {
  return FieldTraits<K>::is_zero(x);
}

template <class K>
std::string to_string(const K& x) {
  return FieldTraits<K>::to_string(x);
}

/// Uniform integer in [lo, hi] lifted to the field.
template <class K>
K random_scalar(std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  return K(static_cast<long>(dist(rng)));
}

}  // namespace gprojlab
