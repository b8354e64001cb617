/*
 * ring.hpp
 * --------
 * Exact arithmetic kernels.
 *
 *   LaurentZ      integer Laurent polynomials in one variable x
 *   SignedLaurent P(x) + s P'(x) with s^2 = 1; x stands for q^r and s for (-1)^r
 *   FractionSL    num/den over SignedLaurent, compared by cross-multiplication
 *   LaurentQQ     integer Laurent polynomials in two independent variables q, qt
 *   RationalQQ    num/den over LaurentQQ
 *
 * All coefficients are arbitrary-precision integers.
 */
#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace qsc {

using BigInt = boost::multiprecision::cpp_int;

class LaurentZ {
 public:
  LaurentZ() = default;
  LaurentZ(long long c);  // NOLINT: constants convert implicitly
  LaurentZ(const BigInt& c);  // NOLINT

  static LaurentZ monomial(int exp, const BigInt& c = 1);

  const std::map<int, BigInt>& coeffs() const { return c_; }
  BigInt coeff(int exp) const;
  bool is_zero() const { return c_.empty(); }
  int min_degree() const;
  int max_degree() const;

  // x -> x^{-1}
  LaurentZ reflected() const;
  // Quotient if this is divisible by d in Z[x^{+-1}].
  std::optional<LaurentZ> exact_div(const LaurentZ& d) const;

  LaurentZ operator-() const;
  LaurentZ& operator+=(const LaurentZ& o);
  LaurentZ& operator-=(const LaurentZ& o);
  friend LaurentZ operator+(LaurentZ a, const LaurentZ& b) { return a += b; }
  friend LaurentZ operator-(LaurentZ a, const LaurentZ& b) { return a -= b; }
  friend LaurentZ operator*(const LaurentZ& a, const LaurentZ& b);
  friend bool operator==(const LaurentZ& a, const LaurentZ& b) { return a.c_ == b.c_; }

  // Renders with the given base, e.g. base "q^r" gives "q^2r + 1 + q^-2r".
  std::string to_string(std::string_view base = "x") const;

 private:
  void add_term(int exp, const BigInt& c);
  std::map<int, BigInt> c_;
};

// [m]_x = x^{m-1} + x^{m-3} + ... + x^{1-m}; throws std::invalid_argument for m < 0.
LaurentZ quantum_int(int m);
// (x^m - x^{-m}) / (x - x^{-1}) for any integer m, i.e. [m]_x with [-m]_x = -[m]_x.
LaurentZ quantum_int_signed(int m);

class SignedLaurent {
 public:
  SignedLaurent() = default;
  SignedLaurent(long long c) : even_(c) {}  // NOLINT
  SignedLaurent(LaurentZ even) : even_(std::move(even)) {}  // NOLINT
  SignedLaurent(LaurentZ even, LaurentZ odd) : even_(std::move(even)), odd_(std::move(odd)) {}

  static SignedLaurent sigma() { return {LaurentZ{}, LaurentZ{1}}; }
  static SignedLaurent x_pow(int k) { return LaurentZ::monomial(k); }

  const LaurentZ& even() const { return even_; }
  const LaurentZ& odd() const { return odd_; }
  bool is_zero() const { return even_.is_zero() && odd_.is_zero(); }

  // P - s P'
  SignedLaurent conjugate() const { return {even_, -odd_}; }
  // (P + sP')(P - sP') = P^2 - P'^2
  LaurentZ norm() const { return even_ * even_ - odd_ * odd_; }
  bool is_zero_divisor() const { return norm().is_zero(); }
  // Value at a concrete parity of r: s = +1 (r even) or s = -1 (r odd).
  LaurentZ at_sigma(int s) const { return s > 0 ? even_ + odd_ : even_ - odd_; }
  SignedLaurent reflected() const { return {even_.reflected(), odd_.reflected()}; }

  std::optional<SignedLaurent> exact_div(const SignedLaurent& d) const;

  SignedLaurent operator-() const { return {-even_, -odd_}; }
  SignedLaurent& operator+=(const SignedLaurent& o);
  SignedLaurent& operator-=(const SignedLaurent& o);
  friend SignedLaurent operator+(SignedLaurent a, const SignedLaurent& b) { return a += b; }
  friend SignedLaurent operator-(SignedLaurent a, const SignedLaurent& b) { return a -= b; }
  friend SignedLaurent operator*(const SignedLaurent& a, const SignedLaurent& b);
  friend bool operator==(const SignedLaurent& a, const SignedLaurent& b) = default;

  // "q^r + q^-r", "(-1)^r", "-(-1)^r(q^r + q^-r)", ...
  std::string to_string() const;

 private:
  LaurentZ even_;
  LaurentZ odd_;
};

SignedLaurent sl_mul(const SignedLaurent& a, const SignedLaurent& b);

class FractionSL {
 public:
  FractionSL(SignedLaurent num = {}, SignedLaurent den = SignedLaurent{1});

  const SignedLaurent& num() const { return num_; }
  const SignedLaurent& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend FractionSL operator+(const FractionSL& a, const FractionSL& b);
  friend FractionSL operator-(const FractionSL& a, const FractionSL& b);
  friend FractionSL operator*(const FractionSL& a, const FractionSL& b);
  friend bool operator==(const FractionSL& a, const FractionSL& b);

 private:
  SignedLaurent num_;
  SignedLaurent den_;
};

bool fraction_eq(const FractionSL& a, const FractionSL& b);

// Sparse map (exp_q, exp_qt) -> coefficient.
class LaurentQQ {
 public:
  using Key = std::pair<int, int>;
  LaurentQQ() = default;
  LaurentQQ(long long c);  // NOLINT
  static LaurentQQ monomial(int exp_q, int exp_qt, const BigInt& c = 1);

  const std::map<Key, BigInt>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  // Substitute qt = -q^{-1}.
  LaurentZ at_qt_neg_qinv() const;

  LaurentQQ operator-() const;
  LaurentQQ& operator+=(const LaurentQQ& o);
  friend LaurentQQ operator+(LaurentQQ a, const LaurentQQ& b) { return a += b; }
  friend LaurentQQ operator-(LaurentQQ a, const LaurentQQ& b) { return a += -b; }
  friend LaurentQQ operator*(const LaurentQQ& a, const LaurentQQ& b);
  friend bool operator==(const LaurentQQ& a, const LaurentQQ& b) { return a.c_ == b.c_; }

  std::string to_string() const;

 private:
  void add_term(Key k, const BigInt& c);
  std::map<Key, BigInt> c_;
};

class RationalQQ {
 public:
  RationalQQ(LaurentQQ num = {}, LaurentQQ den = LaurentQQ{1});
  const LaurentQQ& num() const { return num_; }
  const LaurentQQ& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  friend bool operator==(const RationalQQ& a, const RationalQQ& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }
  std::string to_string() const;

 private:
  LaurentQQ num_;
  LaurentQQ den_;
};

}  // namespace qsc
