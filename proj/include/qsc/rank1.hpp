// Rank-1 q-characters: strings for the even nodes (sl2 type, q^2 or qt^2
// lattice) and the odd node M (U(01) type). Each character is returned as a
// list of A^{-1} lift multisets so that the FM engine can lift terms back.
#pragma once

#include <cstdint>
#include <vector>

#include "qsc/lweights.hpp"

namespace qsc {

enum class Lattice { Q2, QT2 };

// start, start*step, ..., start*step^{len-1} with step q^2 (Q2) or qt^2 (QT2).
struct QString {
  Spec start;
  int len = 1;
  Lattice lattice = Lattice::Q2;

  Spec at(int k) const;
  // start * q^{2len-1} (Q2) or start * qt^{2len-1} (QT2)
  Spec lift() const;
  friend auto operator<=>(const QString&, const QString&) = default;
};

// S_{i,j}(a)
struct SKac {
  int i = 0;
  int j = 0;
  Spec a;
};

struct Rank1Term {
  long long coef = 1;
  std::vector<Spec> lifts;  // sorted
  friend auto operator<=>(const Rank1Term&, const Rank1Term&) = default;
};

struct Rank1Char {
  Monomial base;
  std::vector<Rank1Term> terms;  // sorted by (|lifts|, lifts); terms[0] is the trivial one
  size_t raw_terms = 0;          // before merging coinciding lift multisets
  long long dimension() const;
};

enum class MergeOrder { LowFirst, HighFirst };

bool general_position(const SKac& s1, const SKac& s2);

// Two sl2 strings are in special position when their union is a string
// properly containing both.
bool sl2_special_position(const QString& a, const QString& b);
// seed != 0 picks merge candidates in a pseudo-random order (the result must not depend on it).
std::vector<QString> sl2_decompose(const std::map<Spec, int>& exps, Lattice lat, std::uint64_t seed = 0);
Rank1Char sl2_simple_qchar(const std::vector<QString>& strings);

// D^{-s} * prod Y-strings * prod Yt-strings at node M.
struct U01Normal {
  int s = 0;
  std::vector<QString> ystrings;   // Q2 lattice
  std::vector<QString> ytstrings;  // QT2 lattice
};

SKac as_skac(const QString& str);
bool u01_special_position(const QString& a, const QString& b);
U01Normal u01_normal_form(const Shape& sh, const Monomial& m, MergeOrder order = MergeOrder::LowFirst);
Monomial u01_reassemble(const Shape& sh, const U01Normal& nf);
Rank1Char u01_qchar(const Shape& sh, const Monomial& m, MergeOrder order = MergeOrder::LowFirst);

// beta_{i}(m): the factors of m living at node i (and D when i = M).
Monomial restrict_to_node(const Shape& sh, const Monomial& m, int i);
// Character of L(beta_{i}(m)); throws std::domain_error when i != M and beta_{i}(m) is not dominant.
Rank1Char rank1_char(const Shape& sh, const Monomial& m, int i);

}  // namespace qsc
