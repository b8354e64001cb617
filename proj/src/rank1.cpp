#include "qsc/rank1.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <tuple>

namespace qsc {

namespace {

// Points of one lattice class (orbit, sign, exponent parity) are indexed by
// pos = exp (Q2) or -exp (QT2), so that "next along the string" is pos + 2.
using ClassKey = std::tuple<int, int, int>;

ClassKey class_of(const Spec& a) { return {a.orbit, a.sign, ((a.exp % 2) + 2) % 2}; }
int pos_of(const Spec& a, Lattice lat) { return lat == Lattice::Q2 ? a.exp : -a.exp; }
Spec spec_at(const ClassKey& c, int pos, Lattice lat) {
  return {std::get<0>(c), std::get<1>(c), lat == Lattice::Q2 ? pos : -pos};
}

struct Interval {
  int lo, hi;  // inclusive, same parity
};

Interval interval_of(const QString& s) {
  int p = pos_of(s.start, s.lattice);
  return {p, p + 2 * (s.len - 1)};
}

QString string_of(const ClassKey& c, Interval iv, Lattice lat) {
  return {spec_at(c, iv.lo, lat), (iv.hi - iv.lo) / 2 + 1, lat};
}

std::map<ClassKey, std::map<int, int>> bucket(const std::map<Spec, int>& exps, Lattice lat) {
  std::map<ClassKey, std::map<int, int>> b;
  for (const auto& [a, e] : exps) {
    if (e < 0) throw std::invalid_argument("string decomposition of a non-dominant monomial");
    if (e > 0) b[class_of(a)][pos_of(a, lat)] += e;
  }
  return b;
}

std::vector<Spec> sorted(std::vector<Spec> v) {
  std::sort(v.begin(), v.end());
  return v;
}

Rank1Char finish(std::map<std::vector<Spec>, long long> acc, size_t raw) {
  Rank1Char r;
  r.raw_terms = raw;
  for (auto& [lifts, c] : acc) r.terms.push_back({c, lifts});
  std::sort(r.terms.begin(), r.terms.end(), [](const Rank1Term& a, const Rank1Term& b) {
    if (a.lifts.size() != b.lifts.size()) return a.lifts.size() < b.lifts.size();
    return a.lifts < b.lifts;
  });
  return r;
}

}  // namespace

Spec QString::at(int k) const {
  return lattice == Lattice::Q2 ? start.times_q(2 * k) : start.times_qt(2 * k);
}

Spec QString::lift() const {
  return lattice == Lattice::Q2 ? start.times_q(2 * len - 1) : start.times_qt(2 * len - 1);
}

long long Rank1Char::dimension() const {
  long long d = 0;
  for (const auto& t : terms) d += t.coef;
  return d;
}

bool general_position(const SKac& s1, const SKac& s2) {
  if ((s1.i == 1 && s1.j == -1) || (s2.i == 1 && s2.j == -1)) return true;
  if (s1.a.orbit != s2.a.orbit) return true;
  // a/b against (q^{i+i'} qt^{-j-j'})^{+-1}; qt = -q^{-1}
  int sign = s1.a.sign * s2.a.sign;
  int exp = s1.a.exp - s2.a.exp;
  int jj = s1.j + s2.j;
  int tsign = (jj % 2 == 0) ? 1 : -1;
  int texp = s1.i + s2.i + jj;
  if (sign == tsign && (exp == texp || exp == -texp)) return false;
  return true;
}

bool sl2_special_position(const QString& a, const QString& b) {
  if (a.lattice != b.lattice || class_of(a.start) != class_of(b.start)) return false;
  Interval x = interval_of(a), y = interval_of(b);
  bool union_is_string = y.lo <= x.hi + 2 && x.lo <= y.hi + 2;
  bool nested = (x.lo <= y.lo && y.hi <= x.hi) || (y.lo <= x.lo && x.hi <= y.hi);
  return union_is_string && !nested;
}

std::vector<QString> sl2_decompose(const std::map<Spec, int>& exps, Lattice lat, std::uint64_t seed) {
  std::vector<QString> strs;
  for (const auto& [cls, pts] : bucket(exps, lat))
    for (const auto& [p, e] : pts)
      for (int k = 0; k < e; ++k) strs.push_back(string_of(cls, {p, p}, lat));

  std::mt19937_64 rng(seed);
  for (;;) {
    std::vector<std::pair<size_t, size_t>> cand;
    for (size_t i = 0; i < strs.size(); ++i)
      for (size_t j = i + 1; j < strs.size(); ++j)
        if (sl2_special_position(strs[i], strs[j])) cand.emplace_back(i, j);
    if (cand.empty()) break;
    auto [i, j] = seed ? cand[rng() % cand.size()] : cand.front();
    Interval x = interval_of(strs[i]), y = interval_of(strs[j]);
    ClassKey cls = class_of(strs[i].start);
    Interval uni{std::min(x.lo, y.lo), std::max(x.hi, y.hi)};
    Interval cap{std::max(x.lo, y.lo), std::min(x.hi, y.hi)};
    strs[i] = string_of(cls, uni, lat);
    if (cap.lo <= cap.hi)
      strs[j] = string_of(cls, cap, lat);
    else
      strs.erase(strs.begin() + static_cast<long>(j));
  }
  std::sort(strs.begin(), strs.end());
  return strs;
}

Rank1Char sl2_simple_qchar(const std::vector<QString>& strings) {
  std::map<std::vector<Spec>, long long> acc{{{}, 1}};
  size_t raw = 1;
  for (const auto& s : strings) {
    std::map<std::vector<Spec>, long long> next;
    for (const auto& [lifts, c] : acc) {
      std::vector<Spec> cur = lifts;
      next[cur] += c;
      for (int t = 1; t <= s.len; ++t) {
        // t-th rung adds start * step^{2len - 2t + 1}
        Spec a = s.lattice == Lattice::Q2 ? s.start.times_q(2 * s.len - 2 * t + 1)
                                          : s.start.times_qt(2 * s.len - 2 * t + 1);
        cur.push_back(a);
        next[sorted(cur)] += c;
      }
    }
    acc = std::move(next);
    raw *= static_cast<size_t>(s.len + 1);
  }
  return finish(std::move(acc), raw);
}

SKac as_skac(const QString& str) {
  if (str.lattice == Lattice::Q2) return {str.len, 0, str.start.times_q(str.len - 1)};
  return {0, -str.len, str.start.times_qt(str.len - 1)};
}

bool u01_special_position(const QString& a, const QString& b) {
  return !general_position(as_skac(a), as_skac(b));
}

namespace {

// Maximal concatenations, built from the lowest (or highest) free point.
std::vector<QString> greedy_strings(const std::map<Spec, int>& exps, Lattice lat, MergeOrder order) {
  std::vector<QString> out;
  for (auto [cls, pts] : bucket(exps, lat)) {
    while (!pts.empty()) {
      int p = order == MergeOrder::LowFirst ? pts.begin()->first : pts.rbegin()->first;
      int step = order == MergeOrder::LowFirst ? 2 : -2;
      int q = p;
      while (pts.count(q)) {
        if (--pts[q] == 0) pts.erase(q);
        q += step;
      }
      q -= step;
      out.push_back(string_of(cls, {std::min(p, q), std::max(p, q)}, lat));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

U01Normal u01_normal_form(const Shape& sh, const Monomial& m, MergeOrder order) {
  std::map<Spec, int> ys, yts;
  int t = 0;
  for (const auto& [k, e] : m.exps()) {
    if (k.kind == VarKind::D) {
      t += e;
    } else if (k.kind == VarKind::Y && k.node == sh.M) {
      if (e > 0) {
        ys[k.a] += e;
      } else {
        // Y_a^{-1} = D^{-1} Yt_{-a}
        yts[k.a.neg()] += -e;
        t += e;
      }
    }
  }
  U01Normal nf;
  nf.s = -t;
  nf.ystrings = greedy_strings(ys, Lattice::Q2, order);
  nf.ytstrings = greedy_strings(yts, Lattice::QT2, order);
  return nf;
}

Monomial u01_reassemble(const Shape& sh, const U01Normal& nf) {
  Monomial m = Monomial::D(-nf.s);
  for (const auto& s : nf.ystrings)
    for (int k = 0; k < s.len; ++k) m *= Y(sh, sh.M, s.at(k));
  for (const auto& s : nf.ytstrings)
    for (int k = 0; k < s.len; ++k) m *= Yt(sh, sh.M, s.at(k));
  return m;
}

Rank1Char u01_qchar(const Shape& sh, const Monomial& m, MergeOrder order) {
  U01Normal nf = u01_normal_form(sh, m, order);
  std::vector<Spec> lifts;
  for (const auto& s : nf.ystrings) lifts.push_back(s.lift());
  for (const auto& s : nf.ytstrings) lifts.push_back(s.lift());
  if (lifts.size() > 24) throw std::length_error("u01_qchar: too many strings");
  std::map<std::vector<Spec>, long long> acc;
  const size_t k = lifts.size();
  for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
    std::vector<Spec> sub;
    for (size_t b = 0; b < k; ++b)
      if (mask >> b & 1) sub.push_back(lifts[b]);
    acc[sorted(sub)] += 1;
  }
  Rank1Char r = finish(std::move(acc), size_t{1} << k);
  r.base = restrict_to_node(sh, m, sh.M);
  return r;
}

Monomial restrict_to_node(const Shape& sh, const Monomial& m, int i) {
  VarKind kind = i <= sh.M ? VarKind::Y : VarKind::Yt;
  Monomial r;
  for (const auto& [k, e] : m.exps())
    if ((k.kind == kind && k.node == i) || (k.kind == VarKind::D && i == sh.M)) r *= Monomial::var(k, e);
  return r;
}

Rank1Char rank1_char(const Shape& sh, const Monomial& m, int i) {
  if (i < 1 || i > sh.rank()) throw std::out_of_range("rank1_char: node out of range");
  if (i == sh.M) return u01_qchar(sh, m);
  if (!dominant_nonM(sh, m, i)) throw std::domain_error("restriction is not dominant");
  Monomial base = restrict_to_node(sh, m, i);
  std::map<Spec, int> exps;
  for (const auto& [k, e] : base.exps()) exps[k.a] += e;
  Rank1Char r = sl2_simple_qchar(sl2_decompose(exps, i < sh.M ? Lattice::Q2 : Lattice::QT2));
  r.base = base;
  return r;
}

}  // namespace qsc
