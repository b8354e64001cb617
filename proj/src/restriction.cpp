#include "qsc/restriction.hpp"

#include <algorithm>
#include <stdexcept>

#include "qsc/cartan.hpp"
#include "qsc/rank1.hpp"

namespace qsc {

NodeInterval NodeInterval::parse(const std::string& s) {
  try {
    auto dots = s.find("..");
    if (dots == std::string::npos) {
      int v = std::stoi(s);
      return {v, v};
    }
    NodeInterval J{std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
    if (J.lo > J.hi) throw std::invalid_argument("empty interval");
    return J;
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad node interval: " + s);
  }
}

Restrictor::Restrictor(const Shape& sh, NodeInterval J, TauReading reading)
    : sh_(sh), J_(J), reading_(reading) {
  if (J.lo < 1 || J.hi > sh.rank() || J.lo > J.hi) throw std::out_of_range("interval outside the Dynkin diagram");
  const int r = sh.rank();
  p_.assign(r, std::vector<std::map<int, BigInt>>(r));
  pp_ = p_;
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j) {
      if (J.contains(j)) continue;
      PTable t = p_coeff_tables(sh.M, sh.N, i, j);
      p_[i - 1][j - 1] = std::move(t.p);
      pp_[i - 1][j - 1] = std::move(t.p_prime);
    }
}

static void bump(ZMonomial& z, const ZKey& k, int e) {
  if (e == 0) return;
  int v = (z[k] += e);
  if (v == 0) z.erase(k);
}

void Restrictor::add_z(ZMonomial& z, int i, const Spec& a, int e, bool tilde) const {
  bool swap = false;
  if (tilde) {
    switch (reading_) {
      case TauReading::Literal: swap = J_.contains(i); break;
      case TauReading::AlwaysSwap: swap = true; break;
      case TauReading::SwapAtM: swap = (i == sh_.M); break;
    }
  }
  const int sgn = tilde ? -1 : 1;
  for (int j = 1; j <= sh_.rank(); ++j) {
    if (J_.contains(j)) continue;
    const auto& at_a = swap ? pp_[i - 1][j - 1] : p_[i - 1][j - 1];
    const auto& at_neg = swap ? p_[i - 1][j - 1] : pp_[i - 1][j - 1];
    for (const auto& [k, c] : at_a) bump(z, {j, a.times_q(k)}, sgn * e * static_cast<int>(c));
    for (const auto& [k, c] : at_neg) bump(z, {j, a.neg().times_q(k)}, sgn * e * static_cast<int>(c));
  }
}

RestrictedMonomial Restrictor::tau_Y(int i, const Spec& a) const {
  RestrictedMonomial r;
  if (J_.contains(i)) r.inner = Y(sh_, i, a);
  add_z(r.z, i, a, 1, false);
  return r;
}

RestrictedMonomial Restrictor::tau_Yt(int i, const Spec& a) const {
  RestrictedMonomial r;
  if (J_.contains(i)) r.inner = Yt(sh_, i, a);
  add_z(r.z, i, a, 1, true);
  return r;
}

RestrictedMonomial operator*(const RestrictedMonomial& a, const RestrictedMonomial& b) {
  RestrictedMonomial r = a;
  r.inner *= b.inner;
  for (const auto& [k, e] : b.z) bump(r.z, k, e);
  return r;
}

RestrictedMonomial pow(const RestrictedMonomial& a, int e) {
  RestrictedMonomial r;
  r.inner = a.inner.pow(e);
  if (e != 0)
    for (const auto& [k, v] : a.z) r.z[k] = v * e;
  return r;
}

Monomial Restrictor::beta(const Monomial& m) const {
  Monomial r;
  for (const auto& [k, e] : m.exps()) {
    bool keep = k.kind == VarKind::D ? J_.contains(sh_.M) : J_.contains(k.node);
    if (keep) r *= Monomial::var(k, e);
  }
  return r;
}

RestrictedMonomial Restrictor::tau(const Monomial& m) const {
  RestrictedMonomial r;
  for (const auto& [k, e] : m.exps()) {
    RestrictedMonomial g;
    switch (k.kind) {
      case VarKind::Y: g = tau_Y(k.node, k.a); break;
      case VarKind::Yt: g = tau_Yt(k.node, k.a); break;
      case VarKind::D: g = tau_Y(sh_.M, Spec::q(0)) * tau_Yt(sh_.M, Spec::neg_q(0)); break;
    }
    r = r * pow(g, e);
  }
  return r;
}

std::vector<ZGroup> group_by_z(const Restrictor& r, const QChar& chi) {
  std::map<ZMonomial, QChar> groups;
  for (const auto& [m, c] : chi.terms()) {
    RestrictedMonomial t = r.tau(m);
    groups[t.z].add(t.inner, c);
  }
  std::vector<ZGroup> out;
  for (auto& [z, P] : groups) out.push_back({std::move(P), z});
  return out;
}

bool is_sum_of_rank1_chars(const Shape& sh, int j, const QChar& P) {
  std::map<Monomial, long long> rest = P.terms();
  // Pairing with a coweight that A_j^{-1} lowers by one. Yt[j] only touches
  // delta_{j+1}..delta_n, so past M the suffix is the one that sees it.
  auto level = [&](const Monomial& m) {
    Weight w = weight(sh, m);
    int s = 0;
    if (j <= sh.M)
      for (int t = 0; t < j; ++t) s += w[t];
    else
      for (int t = j; t < sh.n(); ++t) s -= w[t];
    return s;
  };
  while (!rest.empty()) {
    auto top = std::max_element(rest.begin(), rest.end(), [&](const auto& a, const auto& b) {
      return level(a.first) < level(b.first);
    });
    Monomial hw = top->first;
    long long k = top->second;
    if (k < 0) return false;
    Rank1Char ch;
    try {
      ch = rank1_char(sh, hw, j);
    } catch (const std::domain_error&) {
      return false;
    }
    for (const auto& t : ch.terms) {
      Monomial m = hw;
      for (const auto& b : t.lifts) m *= restrict_to_node(sh, a_inverse(sh, j, b), j);
      auto it = rest.find(m);
      if (it == rest.end() || it->second < k * t.coef) return false;
      if ((it->second -= k * t.coef) == 0) rest.erase(it);
    }
  }
  return true;
}

std::string format_z(const ZMonomial& z) {
  if (z.empty()) return "1";
  std::string out;
  for (const auto& [k, e] : z) {
    if (!out.empty()) out += ' ';
    out += "Z[" + std::to_string(k.j) + "," + k.b.to_string() + "]";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace qsc
