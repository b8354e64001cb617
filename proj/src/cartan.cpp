#include "qsc/cartan.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace qsc {

EpsilonSeq::EpsilonSeq(std::vector<int> b) : bits(std::move(b)) {
  if (bits.size() < 2) throw std::invalid_argument("epsilon sequence needs n >= 2");
  for (int v : bits) {
    if (v != 0 && v != 1) throw std::invalid_argument("epsilon entries must be 0 or 1");
    (v == 0 ? M : N)++;
  }
}

EpsilonSeq EpsilonSeq::standard(int M, int N) {
  if (M < 0 || N < 0) throw std::invalid_argument("negative M or N");
  std::vector<int> b(M, 0);
  b.insert(b.end(), N, 1);
  return EpsilonSeq(std::move(b));
}

EpsilonSeq EpsilonSeq::parse(const std::string& s) {
  std::vector<int> b;
  for (char c : s) {
    if (c == '0' || c == '1')
      b.push_back(c - '0');
    else if (c != ' ' && c != ',' && c != '(' && c != ')')
      throw std::invalid_argument("bad epsilon sequence: " + s);
  }
  return EpsilonSeq(std::move(b));
}

bool EpsilonSeq::is_standard() const { return std::is_sorted(bits.begin(), bits.end()); }

std::string EpsilonSeq::to_string() const {
  std::string s;
  for (int v : bits) s += char('0' + v);
  return s;
}

static void check_node(const EpsilonSeq& eps, int i) {
  if (i < 1 || i > eps.rank()) throw std::out_of_range("node out of range: " + std::to_string(i));
}

BiExp pairing_exp(const EpsilonSeq& eps, int i, int j) {
  check_node(eps, i);
  check_node(eps, j);
  // alpha_i = delta_i - delta_{i+1}; sum lambda_k mu_k split by parity of position k.
  BiExp r;
  for (int k = 1; k <= eps.n(); ++k) {
    int l = (k == i) - (k == i + 1);
    int m = (k == j) - (k == j + 1);
    (eps.at(k) == 0 ? r.u : r.v) += l * m;
  }
  return r;
}

static LaurentQQ qq_pow(BiExp e) { return LaurentQQ::monomial(e.u, e.v); }

MatrixQQ deformed_cartan(const EpsilonSeq& eps) {
  const int r = eps.rank();
  MatrixQQ c(r, std::vector<RationalQQ>(r));
  for (int i = 1; i <= r; ++i) {
    BiExp qi = eps.at(i) == 0 ? BiExp{1, 0} : BiExp{0, 1};
    LaurentQQ den = qq_pow(qi) - qq_pow({-qi.u, -qi.v});
    for (int j = 1; j <= r; ++j) {
      BiExp e = pairing_exp(eps, i, j);
      LaurentQQ num = qq_pow(e) - qq_pow({-e.u, -e.v});
      c[i - 1][j - 1] = RationalQQ(num, den);
    }
  }
  return c;
}

static SignedLaurent sigma_pow(int v) {
  return (v % 2 == 0) ? SignedLaurent(1) : SignedLaurent::sigma();
}

MatrixSL specialized_cartan(const EpsilonSeq& eps) {
  const int r = eps.rank();
  MatrixSL c(r, std::vector<SignedLaurent>(r));
  for (int i = 1; i <= r; ++i) {
    for (int j = 1; j <= r; ++j) {
      BiExp e = pairing_exp(eps, i, j);
      // (q^u qt^v)^r at qt = -q^{-1} is sigma^v x^{u-v}; the numerator over
      // (x - x^{-1}) is sigma^v [u-v]. For eps_i = 1 the denominator is -sigma(x - x^{-1}).
      SignedLaurent entry = sigma_pow(e.v) * SignedLaurent(quantum_int_signed(e.u - e.v));
      if (eps.at(i) == 1) entry = -(entry * SignedLaurent::sigma());
      c[i - 1][j - 1] = entry;
    }
  }
  return c;
}

MatrixSL sign_diagonal(const EpsilonSeq& eps) {
  const int r = eps.rank();
  MatrixSL d(r, std::vector<SignedLaurent>(r));
  for (int i = 1; i <= r; ++i) d[i - 1][i - 1] = sigma_pow(eps.at(i));
  return d;
}

MatrixSL identity_sl(int size) {
  MatrixSL m(size, std::vector<SignedLaurent>(size));
  for (int i = 0; i < size; ++i) m[i][i] = SignedLaurent(1);
  return m;
}

MatrixSL mat_mul(const MatrixSL& a, const MatrixSL& b) {
  const size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  MatrixSL c(n, std::vector<SignedLaurent>(m));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (size_t j = 0; j < m; ++j)
        if (!b[l][j].is_zero()) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

namespace {

// Laplace expansion down the rows, memoised on the set of used columns.
struct DetSolver {
  const MatrixSL& a;
  std::unordered_map<unsigned, SignedLaurent> memo;

  SignedLaurent solve(size_t row, unsigned used) {
    if (row == a.size()) return SignedLaurent(1);
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    SignedLaurent acc;
    int parity = 0;  // number of free columns passed so far
    for (size_t c = 0; c < a.size(); ++c) {
      if (used & (1u << c)) continue;
      if (!a[row][c].is_zero()) {
        SignedLaurent t = a[row][c] * solve(row + 1, used | (1u << c));
        if (parity % 2) acc -= t; else acc += t;
      }
      ++parity;
    }
    memo.emplace(used, acc);
    return acc;
  }
};

}  // namespace

SignedLaurent determinant(const MatrixSL& a) {
  if (a.empty()) return SignedLaurent(1);
  if (a.size() > 24) throw std::invalid_argument("determinant: matrix too large");
  DetSolver s{a, {}};
  return s.solve(0, 0);
}

MatrixSL adjugate(const MatrixSL& a) {
  const size_t n = a.size();
  MatrixSL adj(n, std::vector<SignedLaurent>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      // delete row j, column i
      MatrixSL minor;
      for (size_t r = 0; r < n; ++r) {
        if (r == j) continue;
        std::vector<SignedLaurent> row;
        for (size_t c = 0; c < n; ++c)
          if (c != i) row.push_back(a[r][c]);
        minor.push_back(std::move(row));
      }
      SignedLaurent d = determinant(minor);
      adj[i][j] = ((i + j) % 2) ? -d : d;
    }
  return adj;
}

MatrixFrac adjugate_inverse(const MatrixSL& c) {
  SignedLaurent d = determinant(c);
  if (d.is_zero_divisor()) throw std::domain_error("determinant is a zero divisor");
  MatrixSL adj = adjugate(c);
  MatrixFrac inv(c.size());
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = 0; j < c.size(); ++j) inv[i].emplace_back(adj[i][j], d);
  return inv;
}

static void check_mn(int M, int N) {
  if (M <= 0 || N <= 0) throw std::invalid_argument("M and N must be positive");
  if (M == N) throw std::invalid_argument("M = N is not supported");
}

DetResult det_specialized(int M, int N) {
  check_mn(M, N);
  DetResult r;
  r.value = -SignedLaurent(quantum_int_signed(M - N));
  EpsilonSeq eps = EpsilonSeq::standard(M, N);
  SignedLaurent cof = determinant(mat_mul(specialized_cartan(eps), sign_diagonal(eps)));
  r.matches_cofactor = (cof == r.value);
  return r;
}

SignedLaurent inv_entry_closed(int M, int N, int i, int j) {
  check_mn(M, N);
  const int n = M + N;
  if (i < 1 || i >= n || j < 1 || j >= n) throw std::out_of_range("inv_entry_closed: index");
  const int lo = std::min(i, j), hi = std::max(i, j);
  auto qi = [](int m) { return SignedLaurent(quantum_int_signed(m)); };
  if (j <= M) {
    if (i <= M) return -(qi(lo) * qi(M - N - hi));
    return sigma_pow(i - M - 1) * qi(j) * qi(N - i + M);
  }
  if (i > M) return -(sigma_pow(j - i) * qi(2 * M - lo) * qi(M + N - hi));
  return -(sigma_pow(j - M - 1) * qi(i) * qi(M + N - j));
}

MatrixSL closed_inverse_matrix(int M, int N) {
  const int r = M + N - 1;
  MatrixSL m(r, std::vector<SignedLaurent>(r));
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j) m[i - 1][j - 1] = inv_entry_closed(M, N, i, j);
  return m;
}

PTable p_coeff_tables(int M, int N, int i, int j) {
  SignedLaurent e = inv_entry_closed(M, N, i, j);
  PTable t;
  for (const auto& [k, c] : e.even().coeffs()) t.p[k] = c;
  for (const auto& [k, c] : e.odd().coeffs()) t.p_prime[k] = c;
  return t;
}

bool verify_inverse(int M, int N) {
  check_mn(M, N);
  EpsilonSeq eps = EpsilonSeq::standard(M, N);
  MatrixSL c = specialized_cartan(eps);
  MatrixSL dc = mat_mul(sign_diagonal(eps), closed_inverse_matrix(M, N));
  SignedLaurent d = det_specialized(M, N).value;
  if (d.is_zero_divisor()) return false;
  MatrixSL prod = mat_mul(c, dc);
  const int r = eps.rank();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      FractionSL lhs(prod[i][j], d);
      FractionSL rhs(SignedLaurent(i == j ? 1 : 0));
      if (!(lhs == rhs)) return false;
    }
  return true;
}

namespace {

template <class Mat, class F>
std::string render_aligned(const Mat& m, F&& str) {
  std::vector<std::vector<std::string>> cells;
  std::vector<size_t> width;
  for (const auto& row : m) {
    std::vector<std::string> r;
    for (size_t j = 0; j < row.size(); ++j) {
      r.push_back(str(row[j]));
      if (width.size() <= j) width.push_back(0);
      width[j] = std::max(width[j], r.back().size());
    }
    cells.push_back(std::move(r));
  }
  std::ostringstream os;
  for (const auto& r : cells) {
    os << "[ ";
    for (size_t j = 0; j < r.size(); ++j) {
      os << r[j] << std::string(width[j] - r[j].size(), ' ');
      os << (j + 1 < r.size() ? " | " : " ]");
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace

std::string render_matrix(const MatrixSL& m) {
  return render_aligned(m, [](const SignedLaurent& s) { return s.to_string(); });
}

std::string render_matrix(const MatrixQQ& m) {
  return render_aligned(m, [](const RationalQQ& s) { return s.to_string(); });
}

}  // namespace qsc
