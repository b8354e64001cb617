#include "qsc/lweights.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

namespace qsc {

std::string Spec::to_string() const {
  std::string s = (sign < 0 ? "-q^" : "q^") + std::to_string(exp);
  if (orbit != 0) s += "@" + std::to_string(orbit);
  return s;
}

// ------------------------------------------------------------------ Monomial

Monomial Monomial::D(int e) { return var(VarKey{}, e); }

Monomial Monomial::var(const VarKey& k, int e) {
  Monomial m;
  if (e != 0) m.e_[k] = e;
  return m;
}

int Monomial::exp_of(const VarKey& k) const {
  auto it = e_.find(k);
  return it == e_.end() ? 0 : it->second;
}

Monomial Monomial::inverse() const { return pow(-1); }

Monomial Monomial::pow(int k) const {
  Monomial r;
  if (k == 0) return r;
  for (const auto& [key, e] : e_) r.e_[key] = e * k;
  return r;
}

Monomial& Monomial::operator*=(const Monomial& o) {
  for (const auto& [k, e] : o.e_) {
    int v = (e_[k] += e);
    if (v == 0) e_.erase(k);
  }
  return *this;
}

Monomial Y(const Shape& s, int i, const Spec& a, int e) {
  if (i < 1 || i > s.M) throw std::out_of_range("Y node out of range: " + std::to_string(i));
  return Monomial::var({VarKind::Y, i, a}, e);
}

Monomial canonicalize_yt_M(const Shape& s, const Spec& a, int e) {
  return (Monomial::D() * Y(s, s.M, a.neg(), -1)).pow(e);
}

Monomial Yt(const Shape& s, int j, const Spec& a, int e) {
  if (j == s.M) return canonicalize_yt_M(s, a, e);
  if (j <= s.M || j >= s.n()) throw std::out_of_range("Yt node out of range: " + std::to_string(j));
  return Monomial::var({VarKind::Yt, j, a}, e);
}

Monomial a_inverse(const Shape& s, int i, const Spec& a) {
  if (i < 1 || i > s.rank()) throw std::out_of_range("a_inverse: node out of range");
  Monomial r;
  if (i < s.M) {
    r *= Y(s, i, a.times_q(1), -1) * Y(s, i, a.times_q(-1), -1);
    if (i > 1) r *= Y(s, i - 1, a);
    r *= Y(s, i + 1, a);
  } else if (i == s.M) {
    r *= Monomial::D(-1);
    if (i > 1) r *= Y(s, i - 1, a);
    if (i + 1 < s.n()) r *= Yt(s, i + 1, a);
  } else {
    r *= Yt(s, i, a.times_qt(1), -1) * Yt(s, i, a.times_qt(-1), -1);
    r *= Yt(s, i - 1, a);
    if (i + 1 < s.n()) r *= Yt(s, i + 1, a);
  }
  return r;
}

Weight weight(const Shape& s, const Monomial& m) {
  Weight w(s.n(), 0);
  for (const auto& [k, e] : m.exps()) {
    switch (k.kind) {
      case VarKind::Y:
        for (int t = 0; t < k.node; ++t) w[t] += e;
        break;
      case VarKind::Yt:
        for (int t = k.node; t < s.n(); ++t) w[t] -= e;
        break;
      case VarKind::D:
        for (int t = 0; t < s.n(); ++t) w[t] += (t < s.M ? e : -e);
        break;
    }
  }
  return w;
}

std::optional<std::vector<int>> height_from(const Shape& s, const Monomial& hw, const Monomial& m) {
  Weight a = weight(s, hw), b = weight(s, m);
  std::vector<int> c;
  int acc = 0;
  for (int t = 0; t < s.n(); ++t) {
    acc += a[t] - b[t];
    if (t + 1 < s.n()) c.push_back(acc);
  }
  if (acc != 0) return std::nullopt;
  return c;
}

bool dominant_nonM(const Shape& s, const Monomial& m, int i) {
  if (i == s.M) throw std::invalid_argument("dominant_nonM: node M needs the rank-1 normal form");
  if (i < 1 || i > s.rank()) throw std::out_of_range("dominant_nonM: node out of range");
  VarKind kind = i < s.M ? VarKind::Y : VarKind::Yt;
  for (const auto& [k, e] : m.exps())
    if (k.kind == kind && k.node == i && e < 0) return false;
  return true;
}

bool is_dominant_hw(const Shape& s, const Monomial& m) {
  int need = 0;
  for (const auto& [k, e] : m.exps()) {
    if (k.kind == VarKind::Y && k.node == s.M) {
      if (e < 0) need += -e;
    } else if (k.kind != VarKind::D && e < 0) {
      return false;
    }
  }
  return m.d_exp() >= need;
}

// ---------------------------------------------------------------- formatting

static std::string term_text(const std::string& var, int e) {
  return e == 1 ? var : var + "^" + std::to_string(e);
}

static std::string key_text(const VarKey& k) {
  switch (k.kind) {
    case VarKind::Y: return "Y[" + std::to_string(k.node) + "," + k.a.to_string() + "]";
    case VarKind::Yt: return "Yt[" + std::to_string(k.node) + "," + k.a.to_string() + "]";
    case VarKind::D: return "D";
  }
  return "?";
}

std::string format(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (const auto& [k, e] : m.exps()) {
    if (!out.empty()) out += ' ';
    out += term_text(key_text(k), e);
  }
  return out;
}

std::string format_display(const Shape& s, const Monomial& m) {
  // Pair D^{-1} with positive Y_M (or D with negative Y_M) into Yt_M factors.
  int d = m.d_exp();
  std::map<VarKey, int> rest = m.exps();
  rest.erase(VarKey{});
  std::map<Spec, int> ytM;  // Yt[M,b] exponents
  for (auto it = rest.begin(); it != rest.end() && d != 0;) {
    const VarKey k = it->first;
    int& e = it->second;
    if (k.kind == VarKind::Y && k.node == s.M && ((d < 0 && e > 0) || (d > 0 && e < 0))) {
      int take = std::min(std::abs(d), std::abs(e));
      int sgn = d < 0 ? -1 : 1;
      ytM[k.a.neg()] += sgn * take;
      d -= sgn * take;
      e += sgn * take;
      if (e == 0) {
        it = rest.erase(it);
        continue;
      }
    }
    ++it;
  }
  std::vector<std::string> parts;
  auto yt_begin = std::find_if(rest.begin(), rest.end(), [](const auto& kv) { return kv.first.kind != VarKind::Y; });
  for (auto it = rest.begin(); it != yt_begin; ++it) parts.push_back(term_text(key_text(it->first), it->second));
  for (const auto& [b, e] : ytM)
    parts.push_back(term_text("Yt[" + std::to_string(s.M) + "," + b.to_string() + "]", e));
  for (auto it = yt_begin; it != rest.end(); ++it) parts.push_back(term_text(key_text(it->first), it->second));
  if (d != 0) parts.push_back(term_text("D", d));
  if (parts.empty()) return "1";
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : " ") + p;
  return out;
}

// ------------------------------------------------------------------- parsing

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;

  bool done() { skip_ws(); return i >= s.size(); }
  void skip_ws() {
    while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == '*')) ++i;
  }
  bool eat(const std::string& lit) {
    if (s.compare(i, lit.size(), lit) == 0) {
      i += lit.size();
      return true;
    }
    return false;
  }
  void expect(const std::string& lit) {
    if (!eat(lit)) fail("expected '" + lit + "'");
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg + " at position " + std::to_string(i), i);
  }
  int integer() {
    size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    size_t digits = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == digits) {
      i = start;
      fail("expected integer");
    }
    return std::stoi(s.substr(start, i - start));
  }
  Spec spec() {
    int sign = eat("-") ? -1 : 1;
    Spec a;
    if (eat("qt")) {
      int k = eat("^") ? integer() : 1;
      a = Spec::q(0).times_qt(k);
    } else if (eat("q")) {
      int k = eat("^") ? integer() : 1;
      a = Spec::q(k);
    } else if (eat("1")) {
      a = Spec::q(0);
    } else {
      fail("expected spectral parameter");
    }
    if (sign < 0) a = a.neg();
    if (eat("@")) a.orbit = integer();
    return a;
  }
};

}  // namespace

Spec parse_spec(const std::string& text) {
  Cursor c{text};
  c.skip_ws();
  Spec a = c.spec();
  if (!c.done()) c.fail("trailing input");
  return a;
}

Monomial parse_monomial(const Shape& s, const std::string& text) {
  Cursor c{text};
  Monomial m;
  if (c.done()) c.fail("empty monomial");
  if (c.s.substr(c.i) == "1") return m;
  while (!c.done()) {
    size_t at = c.i;
    Monomial factor;
    if (c.eat("Yt[") || c.eat("Y[")) {
      bool tilde = c.s.compare(at, 3, "Yt[") == 0;
      int node = c.integer();
      c.expect(",");
      Spec a = c.spec();
      c.expect("]");
      try {
        factor = tilde ? Yt(s, node, a) : Y(s, node, a);
      } catch (const std::out_of_range& e) {
        throw ParseError(std::string(e.what()) + " at position " + std::to_string(at), at);
      }
    } else if (c.eat("D")) {
      factor = Monomial::D();
    } else {
      c.fail("expected Y[, Yt[ or D");
    }
    int e = c.eat("^") ? c.integer() : 1;
    m *= factor.pow(e);
  }
  return m;
}

// --------------------------------------------------------------------- QChar

void QChar::add(const Monomial& m, long long mult) {
  if (mult == 0) return;
  long long v = (t_[m] += mult);
  if (v == 0) t_.erase(m);
}

long long QChar::dimension() const {
  long long d = 0;
  for (const auto& kv : t_) d += kv.second;
  return d;
}

long long QChar::mult(const Monomial& m) const {
  auto it = t_.find(m);
  return it == t_.end() ? 0 : it->second;
}

QChar operator*(const QChar& a, const QChar& b) {
  QChar r;
  for (const auto& [ma, ca] : a.t_)
    for (const auto& [mb, cb] : b.t_) r.add(ma * mb, ca * cb);
  return r;
}

std::string qchar_to_json(const QChar& c) {
  nlohmann::ordered_json j;
  j["terms"] = nlohmann::ordered_json::array();
  for (const auto& [m, k] : c.terms()) j["terms"].push_back({{"m", format(m)}, {"mult", k}});
  return j.dump(2);
}

QChar qchar_from_json(const Shape& s, const std::string& text) {
  auto j = nlohmann::json::parse(text);
  QChar c;
  for (const auto& t : j.at("terms")) c.add(parse_monomial(s, t.at("m").get<std::string>()), t.at("mult").get<long long>());
  return c;
}

}  // namespace qsc
