#include "qsc/ring.hpp"

#include <sstream>
#include <stdexcept>

namespace qsc {

// ---------------------------------------------------------------- LaurentZ

LaurentZ::LaurentZ(long long c) {
  if (c != 0) c_[0] = c;
}

LaurentZ::LaurentZ(const BigInt& c) {
  if (c != 0) c_[0] = c;
}

LaurentZ LaurentZ::monomial(int exp, const BigInt& c) {
  LaurentZ r;
  r.add_term(exp, c);
  return r;
}

void LaurentZ::add_term(int exp, const BigInt& c) {
  if (c == 0) return;
  auto it = c_.find(exp);
  if (it == c_.end()) {
    c_.emplace(exp, c);
    return;
  }
  it->second += c;
  if (it->second == 0) c_.erase(it);
}

BigInt LaurentZ::coeff(int exp) const {
  auto it = c_.find(exp);
  return it == c_.end() ? BigInt(0) : it->second;
}

int LaurentZ::min_degree() const {
  if (c_.empty()) throw std::logic_error("degree of zero polynomial");
  return c_.begin()->first;
}

int LaurentZ::max_degree() const {
  if (c_.empty()) throw std::logic_error("degree of zero polynomial");
  return c_.rbegin()->first;
}

LaurentZ LaurentZ::reflected() const {
  LaurentZ r;
  for (const auto& [e, c] : c_) r.c_.emplace(-e, c);
  return r;
}

LaurentZ LaurentZ::operator-() const {
  LaurentZ r = *this;
  for (auto& kv : r.c_) kv.second = -kv.second;
  return r;
}

LaurentZ& LaurentZ::operator+=(const LaurentZ& o) {
  for (const auto& [e, c] : o.c_) add_term(e, c);
  return *this;
}

LaurentZ& LaurentZ::operator-=(const LaurentZ& o) {
  for (const auto& [e, c] : o.c_) add_term(e, -c);
  return *this;
}

LaurentZ operator*(const LaurentZ& a, const LaurentZ& b) {
  LaurentZ r;
  for (const auto& [ea, ca] : a.c_)
    for (const auto& [eb, cb] : b.c_) r.add_term(ea + eb, ca * cb);
  return r;
}

std::optional<LaurentZ> LaurentZ::exact_div(const LaurentZ& d) const {
  if (d.is_zero()) return std::nullopt;
  LaurentZ rem = *this;
  LaurentZ quot;
  const int dtop = d.max_degree();
  const int dlow = d.min_degree();
  const BigInt& lead = d.c_.rbegin()->second;
  // Long division from the top; the remainder's span shrinks every step.
  while (!rem.is_zero()) {
    if (rem.max_degree() - rem.min_degree() < dtop - dlow) return std::nullopt;
    const BigInt& top = rem.c_.rbegin()->second;
    if (top % lead != 0) return std::nullopt;
    LaurentZ t = monomial(rem.max_degree() - dtop, top / lead);
    quot += t;
    rem -= t * d;
  }
  return quot;
}

namespace {

std::string power_text(std::string_view base, int e) {
  if (e == 0) return "1";
  std::string b(base);
  // "q^r" style bases put the exponent in front of the trailing symbol.
  auto caret = b.find('^');
  if (caret != std::string::npos) {
    std::string head = b.substr(0, caret + 1);
    std::string tail = b.substr(caret + 1);
    if (e == 1) return b;
    if (e == -1) return head + "-" + tail;
    return head + std::to_string(e) + tail;
  }
  if (e == 1) return b;
  return b + "^" + std::to_string(e);
}

}  // namespace

std::string LaurentZ::to_string(std::string_view base) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    BigInt c = it->second;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (it->first == 0) {
      os << c;
    } else {
      if (c != 1) os << c;
      os << power_text(base, it->first);
    }
  }
  return os.str();
}

LaurentZ quantum_int(int m) {
  if (m < 0) throw std::invalid_argument("quantum_int: negative argument");
  LaurentZ r;
  for (int k = m - 1; k >= 1 - m; k -= 2) r += LaurentZ::monomial(k);
  return r;
}

LaurentZ quantum_int_signed(int m) {
  return m >= 0 ? quantum_int(m) : -quantum_int(-m);
}

// ----------------------------------------------------------- SignedLaurent

SignedLaurent& SignedLaurent::operator+=(const SignedLaurent& o) {
  even_ += o.even_;
  odd_ += o.odd_;
  return *this;
}

SignedLaurent& SignedLaurent::operator-=(const SignedLaurent& o) {
  even_ -= o.even_;
  odd_ -= o.odd_;
  return *this;
}

SignedLaurent operator*(const SignedLaurent& a, const SignedLaurent& b) {
  return {a.even_ * b.even_ + a.odd_ * b.odd_, a.even_ * b.odd_ + a.odd_ * b.even_};
}

SignedLaurent sl_mul(const SignedLaurent& a, const SignedLaurent& b) { return a * b; }

std::optional<SignedLaurent> SignedLaurent::exact_div(const SignedLaurent& d) const {
  LaurentZ n = d.norm();
  if (n.is_zero()) return std::nullopt;
  SignedLaurent t = *this * d.conjugate();
  auto e = t.even_.exact_div(n);
  auto o = t.odd_.exact_div(n);
  if (!e || !o) return std::nullopt;
  return SignedLaurent(*e, *o);
}

std::string SignedLaurent::to_string() const {
  const std::string base = "q^r";
  if (odd_.is_zero()) return even_.to_string(base);
  std::string s;
  if (odd_ == LaurentZ(1))
    s = "(-1)^r";
  else if (odd_ == LaurentZ(-1))
    s = "-(-1)^r";
  else
    s = "(-1)^r(" + odd_.to_string(base) + ")";
  if (even_.is_zero()) return s;
  std::string e = even_.to_string(base);
  if (s[0] == '-') return e + " - " + s.substr(1);
  return e + " + " + s;
}

// -------------------------------------------------------------- FractionSL

FractionSL::FractionSL(SignedLaurent num, SignedLaurent den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("FractionSL: zero denominator");
}

FractionSL operator+(const FractionSL& a, const FractionSL& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

FractionSL operator-(const FractionSL& a, const FractionSL& b) {
  if (a.den_ == b.den_) return {a.num_ - b.num_, a.den_};
  return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

FractionSL operator*(const FractionSL& a, const FractionSL& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

bool operator==(const FractionSL& a, const FractionSL& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

bool fraction_eq(const FractionSL& a, const FractionSL& b) { return a == b; }

// --------------------------------------------------------------- LaurentQQ

LaurentQQ::LaurentQQ(long long c) {
  if (c != 0) c_[{0, 0}] = c;
}

LaurentQQ LaurentQQ::monomial(int exp_q, int exp_qt, const BigInt& c) {
  LaurentQQ r;
  r.add_term({exp_q, exp_qt}, c);
  return r;
}

void LaurentQQ::add_term(Key k, const BigInt& c) {
  if (c == 0) return;
  auto [it, fresh] = c_.emplace(k, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) c_.erase(it);
}

LaurentQQ LaurentQQ::operator-() const {
  LaurentQQ r = *this;
  for (auto& kv : r.c_) kv.second = -kv.second;
  return r;
}

LaurentQQ& LaurentQQ::operator+=(const LaurentQQ& o) {
  for (const auto& [k, c] : o.c_) add_term(k, c);
  return *this;
}

LaurentQQ operator*(const LaurentQQ& a, const LaurentQQ& b) {
  LaurentQQ r;
  for (const auto& [ka, ca] : a.c_)
    for (const auto& [kb, cb] : b.c_)
      r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
  return r;
}

LaurentZ LaurentQQ::at_qt_neg_qinv() const {
  LaurentZ r;
  for (const auto& [k, c] : c_) {
    // q^u qt^v -> (-1)^v q^{u-v}
    r += LaurentZ::monomial(k.first - k.second, (k.second % 2 == 0) ? c : BigInt(-c));
  }
  return r;
}

std::string LaurentQQ::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    BigInt c = it->second;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    auto [u, v] = it->first;
    bool unit = (u == 0 && v == 0);
    if (unit || c != 1) os << c;
    if (u != 0) os << (u == 1 ? "q" : "q^" + std::to_string(u));
    if (v != 0) os << (v == 1 ? "qt" : "qt^" + std::to_string(v));
  }
  return os.str();
}

RationalQQ::RationalQQ(LaurentQQ num, LaurentQQ den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("RationalQQ: zero denominator");
}

std::string RationalQQ::to_string() const {
  if (den_ == LaurentQQ(1)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace qsc
