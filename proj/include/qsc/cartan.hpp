// Epsilon sequences, root pairings and (q, qt)-deformed Cartan matrices.
//
// Nodes are 1-based throughout (1..n-1), matching the usual labelling of
// simple roots alpha_i = delta_i - delta_{i+1}.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "qsc/ring.hpp"

namespace qsc {

struct EpsilonSeq {
  std::vector<int> bits;  // each 0 or 1
  int M = 0;              // number of 0s
  int N = 0;              // number of 1s

  explicit EpsilonSeq(std::vector<int> b);
  static EpsilonSeq standard(int M, int N);
  static EpsilonSeq parse(const std::string& s);  // "0011"

  int n() const { return static_cast<int>(bits.size()); }
  int rank() const { return n() - 1; }
  bool is_standard() const;
  // 1-based access
  int at(int k) const { return bits.at(k - 1); }
  std::string to_string() const;
};

// q^u qt^v
struct BiExp {
  int u = 0;
  int v = 0;
  friend bool operator==(const BiExp&, const BiExp&) = default;
};

using MatrixQQ = std::vector<std::vector<RationalQQ>>;
using MatrixSL = std::vector<std::vector<SignedLaurent>>;
using MatrixFrac = std::vector<std::vector<FractionSL>>;

BiExp pairing_exp(const EpsilonSeq& eps, int i, int j);

MatrixQQ deformed_cartan(const EpsilonSeq& eps);
// C(q^r, (-q^{-1})^r) with x = q^r, sigma = (-1)^r.
MatrixSL specialized_cartan(const EpsilonSeq& eps);
// diag((-1)^{r eps_i}), i = 1..n-1
MatrixSL sign_diagonal(const EpsilonSeq& eps);

MatrixSL mat_mul(const MatrixSL& a, const MatrixSL& b);
MatrixSL identity_sl(int size);
SignedLaurent determinant(const MatrixSL& a);
MatrixSL adjugate(const MatrixSL& a);
// C^{-1} = adj(C)/det(C); throws if det(C) is a zero divisor.
MatrixFrac adjugate_inverse(const MatrixSL& c);

struct DetResult {
  SignedLaurent value;        // closed form
  bool matches_cofactor = false;
};
DetResult det_specialized(int M, int N);

// (i, j) entry of d * D^r * C~^r from the case formulas (equal to adj(C D)).
SignedLaurent inv_entry_closed(int M, int N, int i, int j);
MatrixSL closed_inverse_matrix(int M, int N);

struct PTable {
  std::map<int, BigInt> p;        // coefficient of q^{rk}
  std::map<int, BigInt> p_prime;  // coefficient of (-1)^r q^{rk}
};
PTable p_coeff_tables(int M, int N, int i, int j);

// C * (D * closed / d) == Id over FractionSL.
bool verify_inverse(int M, int N);

std::string render_matrix(const MatrixSL& m);
std::string render_matrix(const MatrixQQ& m);

}  // namespace qsc
