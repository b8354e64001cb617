// The l-weight ring Y(eps) for standard eps_{M|N}: Laurent monomials in
// Y[i,a] (1 <= i <= M), Yt[j,a] (M < j <= n-1) and D, with Yt[M,a] always
// rewritten as D * Y[M,-a]^-1.
#pragma once

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsc/ring.hpp"

namespace qsc {

// orbit_scalar * sign * q^exp. Distinct orbits never have a ratio in +-q^Z.
struct Spec {
  int orbit = 0;
  int sign = 1;  // +1 or -1
  int exp = 0;

  static Spec q(int k) { return {0, 1, k}; }
  static Spec neg_q(int k) { return {0, -1, k}; }

  Spec neg() const { return {orbit, -sign, exp}; }
  Spec times_q(int m) const { return {orbit, sign, exp + m}; }
  // qt = -q^{-1}
  Spec times_qt(int m) const { return {orbit, (m % 2 == 0) ? sign : -sign, exp - m}; }

  std::string to_string() const;
  friend auto operator<=>(const Spec&, const Spec&) = default;
};

Spec parse_spec(const std::string& s);

enum class VarKind { Y = 0, Yt = 1, D = 2 };

struct VarKey {
  VarKind kind = VarKind::D;
  int node = 0;  // 0 for D
  Spec a{};
  friend auto operator<=>(const VarKey&, const VarKey&) = default;
};

struct Shape {
  int M = 0;
  int N = 0;
  int n() const { return M + N; }
  int rank() const { return M + N - 1; }
  friend bool operator==(const Shape&, const Shape&) = default;
};

class Monomial {
 public:
  Monomial() = default;

  static Monomial D(int e = 1);
  // Raw variable; callers go through Shape-aware constructors below.
  static Monomial var(const VarKey& k, int e = 1);

  const std::map<VarKey, int>& exps() const { return e_; }
  int exp_of(const VarKey& k) const;
  int d_exp() const { return exp_of(VarKey{}); }
  bool is_one() const { return e_.empty(); }

  Monomial inverse() const;
  Monomial pow(int k) const;
  Monomial& operator*=(const Monomial& o);
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::map<VarKey, int> e_;
};

Monomial Y(const Shape& s, int i, const Spec& a, int e = 1);
// Yt at node M is canonicalized: Yt[M,a]^e = (D * Y[M,-a]^-1)^e.
Monomial Yt(const Shape& s, int j, const Spec& a, int e = 1);
Monomial canonicalize_yt_M(const Shape& s, const Spec& a, int e);

// A_{i,a}^{-1}
Monomial a_inverse(const Shape& s, int i, const Spec& a);

using Weight = std::vector<int>;  // coefficients on delta_1..delta_n
Weight weight(const Shape& s, const Monomial& m);
// c with wt(hw) - wt(m) = sum c_i alpha_i
std::optional<std::vector<int>> height_from(const Shape& s, const Monomial& hw, const Monomial& m);

bool dominant_nonM(const Shape& s, const Monomial& m, int i);
// Positive monomial in Y, Yt (including Yt_M) and D.
bool is_dominant_hw(const Shape& s, const Monomial& m);

// Canonical serialization, e.g. "Y[1,q^0] Yt[4,-q^-1]^-1 D^2"; "1" for the identity.
std::string format(const Monomial& m);
// Rewrites D^-1 Y[M,a] as Yt[M,-a]^-1 (and D Y[M,a]^-1 as Yt[M,-a]) where that helps.
std::string format_display(const Shape& s, const Monomial& m);
Monomial parse_monomial(const Shape& s, const std::string& text);

struct ParseError : std::runtime_error {
  size_t pos;
  ParseError(const std::string& what, size_t p) : std::runtime_error(what), pos(p) {}
};

// Finite sum of monomials with positive multiplicities.
class QChar {
 public:
  QChar() = default;
  void add(const Monomial& m, long long mult = 1);
  const std::map<Monomial, long long>& terms() const { return t_; }
  size_t size() const { return t_.size(); }
  long long dimension() const;
  long long mult(const Monomial& m) const;
  bool contains(const Monomial& m) const { return t_.count(m) > 0; }
  friend QChar operator*(const QChar& a, const QChar& b);
  friend bool operator==(const QChar&, const QChar&) = default;

 private:
  std::map<Monomial, long long> t_;
};

std::string qchar_to_json(const QChar& c);
QChar qchar_from_json(const Shape& s, const std::string& text);

}  // namespace qsc
