// Restriction to an interval J of nodes: the naive map beta_J (drop every
// variable outside J) and the refined homomorphism tau_J, which remembers the
// dropped part through Z-variables built from the p/p' tables.
//
// Restricted monomials keep the original node labels.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "qsc/lweights.hpp"

namespace qsc {

struct NodeInterval {
  int lo = 1;
  int hi = 1;  // inclusive
  bool contains(int i) const { return lo <= i && i <= hi; }
  static NodeInterval parse(const std::string& s);  // "2" or "1..3"
};

struct ZKey {
  int j = 0;
  Spec b;
  friend auto operator<=>(const ZKey&, const ZKey&) = default;
};

using ZMonomial = std::map<ZKey, int>;

struct RestrictedMonomial {
  Monomial inner;
  ZMonomial z;
  friend bool operator==(const RestrictedMonomial&, const RestrictedMonomial&) = default;
  friend auto operator<=>(const RestrictedMonomial&, const RestrictedMonomial&) = default;
};

// Placement of p and p' for tau_J(Yt[i,a]):
//   Literal   (-p', -p) at (aq^k, -aq^k) iff i in J, else (-p, -p')
//   AlwaysSwap (-p', -p) for every i
//   SwapAtM   (-p', -p) iff i = M        (default; the only one with tau(D) = D)
enum class TauReading { Literal, AlwaysSwap, SwapAtM };

class Restrictor {
 public:
  Restrictor(const Shape& sh, NodeInterval J, TauReading reading = TauReading::SwapAtM);

  const Shape& shape() const { return sh_; }
  const NodeInterval& interval() const { return J_; }

  Monomial beta(const Monomial& m) const;
  RestrictedMonomial tau(const Monomial& m) const;

  // Images of single generators; Yt at node M is allowed here.
  RestrictedMonomial tau_Y(int i, const Spec& a) const;
  RestrictedMonomial tau_Yt(int i, const Spec& a) const;

 private:
  void add_z(ZMonomial& z, int i, const Spec& a, int e, bool tilde) const;

  Shape sh_;
  NodeInterval J_;
  TauReading reading_;
  // p tables indexed [i-1][j-1]
  std::vector<std::vector<std::map<int, BigInt>>> p_, pp_;
};

RestrictedMonomial operator*(const RestrictedMonomial& a, const RestrictedMonomial& b);
RestrictedMonomial pow(const RestrictedMonomial& a, int e);

struct ZGroup {
  QChar P;
  ZMonomial Q;
};
std::vector<ZGroup> group_by_z(const Restrictor& r, const QChar& chi);

// Peels simple rank-1 characters off P (highest first); true iff P is a
// nonnegative sum of them. Only meaningful for J = {j}.
bool is_sum_of_rank1_chars(const Shape& sh, int j, const QChar& P);

std::string format_z(const ZMonomial& z);

}  // namespace qsc
