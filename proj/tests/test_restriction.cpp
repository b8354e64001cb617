#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "qsc/fm.hpp"
#include "qsc/restriction.hpp"

using namespace qsc;

namespace {

const Shape s32{3, 2};
const Shape s21{2, 1};

Monomial P(const Shape& sh, const std::string& t) { return parse_monomial(sh, t); }

std::vector<NodeInterval> intervals(const Shape& sh) {
  std::vector<NodeInterval> v;
  for (int lo = 1; lo <= sh.rank(); ++lo)
    for (int hi = lo; hi <= sh.rank(); ++hi) v.push_back({lo, hi});
  return v;
}

Monomial random_monomial(const Shape& sh, std::mt19937_64& rng, bool with_d = true) {
  std::uniform_int_distribution<int> node(1, sh.rank()), ex(-4, 4), e(-2, 2), sign(0, 1), count(1, 5);
  Monomial m = with_d ? Monomial::D(e(rng)) : Monomial{};
  for (int k = count(rng); k > 0; --k) {
    int i = node(rng);
    Spec a{0, sign(rng) ? 1 : -1, ex(rng)};
    m *= (i <= sh.M && sign(rng)) ? Y(sh, i, a, e(rng)) : (i >= sh.M ? Yt(sh, i, a, e(rng)) : Y(sh, i, a, e(rng)));
  }
  return m;
}

}  // namespace

TEST_CASE("node intervals") {
  NodeInterval J = NodeInterval::parse("2..4");
  CHECK(J.lo == 2);
  CHECK(J.hi == 4);
  CHECK(NodeInterval::parse("3").contains(3));
  CHECK_THROWS(NodeInterval::parse("4..2"));
  CHECK_THROWS(NodeInterval::parse("x"));
  CHECK_THROWS(Restrictor(s21, {1, 3}));
}

TEST_CASE("naive restriction") {
  CHECK(Restrictor(s32, {1, 1}).beta(P(s32, "Y[1,q^2]^-1 Y[2,q^1]")) == P(s32, "Y[1,q^2]^-1"));
  CHECK(Restrictor(s32, {3, 3}).beta(a_inverse(s32, 3, Spec::q(1))) == Monomial::D(-1));
  CHECK(Restrictor(s21, {1, 2}).beta(P(s21, "Y[1,q^0]")) == P(s21, "Y[1,q^0]"));
  CHECK(Restrictor(s32, {1, 2}).beta(Monomial::D()).is_one());
}

TEST_CASE("tau on generators") {
  Restrictor R(s21, {1, 1});
  Spec a = Spec::q(5);
  RestrictedMonomial y1 = R.tau_Y(1, a);
  CHECK(y1.inner == Y(s21, 1, a));
  CHECK(y1.z == ZMonomial{{{2, a}, 1}});
  RestrictedMonomial y2 = R.tau_Y(2, a);
  CHECK(y2.inner.is_one());
  CHECK(y2.z == ZMonomial{{{2, a.times_q(1)}, 1}, {{2, a.times_q(-1)}, 1}});
  CHECK(format_z(y2.z) == "Z[2,q^4] Z[2,q^6]");
}

TEST_CASE("tau(D) has no Z part exactly for the chosen Yt reading") {
  for (const Shape& sh : {s21, s32, Shape{2, 3}, Shape{1, 3}, Shape{4, 1}})
    for (const auto& J : intervals(sh)) {
      RestrictedMonomial d = Restrictor(sh, J).tau(Monomial::D());
      CHECK(d.z.empty());
      CHECK(d.inner == Restrictor(sh, J).beta(Monomial::D()));
    }
  // The literal reading breaks well-definedness as soon as M lies outside J.
  bool literal_breaks = false;
  for (const auto& J : intervals(s32))
    if (!Restrictor(s32, J, TauReading::Literal).tau(Monomial::D()).z.empty()) literal_breaks = true;
  CHECK(literal_breaks);
}

TEST_CASE("forgetting Z recovers beta") {
  std::mt19937_64 rng(17);
  for (const Shape& sh : {s21, s32, Shape{2, 3}})
    for (const auto& J : intervals(sh)) {
      Restrictor R(sh, J);
      for (int t = 0; t < 50; ++t) {
        Monomial m = random_monomial(sh, rng);
        CHECK(R.tau(m).inner == R.beta(m));
      }
    }
}

TEST_CASE("tau is multiplicative") {
  std::mt19937_64 rng(19);
  Restrictor R(s32, {2, 3});
  for (int t = 0; t < 100; ++t) {
    Monomial a = random_monomial(s32, rng), b = random_monomial(s32, rng);
    CHECK(R.tau(a * b) == R.tau(a) * R.tau(b));
    CHECK(R.tau(a.inverse()) == pow(R.tau(a), -1));
  }
}

TEST_CASE("commutative square with A^-1") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> ex(-5, 5);
  for (const Shape& sh : {s21, s32, Shape{2, 3}, Shape{1, 2}})
    for (const auto& J : intervals(sh)) {
      Restrictor R(sh, J);
      for (int j = J.lo; j <= J.hi; ++j) {
        Spec a = Spec::q(ex(rng));
        Monomial m = random_monomial(sh, rng);
        RestrictedMonomial lhs = R.tau(m * a_inverse(sh, j, a));
        RestrictedMonomial rhs = R.tau(m) * RestrictedMonomial{R.beta(a_inverse(sh, j, a)), {}};
        CHECK(lhs == rhs);
      }
    }
}

TEST_CASE("kernel witness at node M") {
  for (const Shape& sh : {s32, Shape{2, 3}, Shape{3, 4}}) {
    Restrictor R(sh, {sh.M, sh.M});
    for (int k = -5; k <= 4; ++k) {
      Spec a = k % 2 ? Spec::neg_q(k) : Spec::q(k);
      RestrictedMonomial r = R.tau(Y(sh, sh.M - 1, a) * Yt(sh, sh.M + 1, a));
      CHECK(r.inner.is_one());
      CHECK(r.z.empty());
    }
  }
}

// D itself lies in the kernel whenever M is outside J, so only monomials with no D
// in canonical form (Yt[M] contributes one) are compared.
TEST_CASE("tau at a single non-M node is injective on random monomials") {
  std::mt19937_64 rng(29);
  Restrictor R(s32, {1, 1});
  std::set<Monomial> seen;
  std::set<RestrictedMonomial> images;
  while (seen.size() < 1000) {
    Monomial m = random_monomial(s32, rng, false);
    if (m.d_exp() == 0 && seen.insert(m).second) images.insert(R.tau(m));
  }
  CHECK(images.size() == seen.size());
}

TEST_CASE("grouping a character by Z") {
  FMResult r = run(s32, Y(s32, 1, Spec::q(0)));
  REQUIRE(r.status == FMStatus::Success);
  auto groups = group_by_z(Restrictor(s32, {1, 1}), r.qchar);
  std::vector<size_t> sizes;
  for (const auto& g : groups) {
    sizes.push_back(g.P.size());
    CHECK(is_sum_of_rank1_chars(s32, 1, g.P));
  }
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<size_t>{1, 1, 1, 2});

  auto mgroups = group_by_z(Restrictor(s32, {3, 3}), r.qchar);
  for (const auto& g : mgroups) {
    CHECK(g.P.size() <= 2);
    if (g.P.size() == 2) {
      auto it = g.P.terms().begin();
      Monomial a = it->first, b = std::next(it)->first;
      CHECK((a * b.inverse() == Monomial::D() || b * a.inverse() == Monomial::D()));
    }
  }

  QChar single;
  single.add(Y(s32, 1, Spec::q(0)));
  CHECK(group_by_z(Restrictor(s32, {2, 2}), single).size() == 1);
}

TEST_CASE("rank-1 peeling rejects non-characters") {
  QChar bad;
  bad.add(Y(s32, 1, Spec::q(0)));
  CHECK_FALSE(is_sum_of_rank1_chars(s32, 1, bad));
  bad.add(Y(s32, 1, Spec::q(2), -1));
  CHECK(is_sum_of_rank1_chars(s32, 1, bad));
}

TEST_CASE("rank-1 peeling past node M") {
  // 1|2, node 2: Yt[2,q] + Yt[2,q^-1]^-1 is one qt^2 string
  Shape s12{1, 2};
  QChar P;
  P.add(Yt(s12, 2, Spec::q(-1), -1));
  P.add(Yt(s12, 2, Spec::q(1)));
  CHECK(is_sum_of_rank1_chars(s12, 2, P));
  P.add(Yt(s12, 2, Spec::q(-1), -1));
  CHECK_FALSE(is_sum_of_rank1_chars(s12, 2, P));

  for (const Shape& sh : {s12, s32, Shape{1, 3}, Shape{2, 3}}) {
    FMResult r = run(sh, Y(sh, 1, Spec::q(0)));
    REQUIRE(r.status == FMStatus::Success);
    for (int j = sh.M + 1; j <= sh.rank(); ++j)
      for (const auto& g : group_by_z(Restrictor(sh, {j, j}), r.qchar)) CHECK(is_sum_of_rank1_chars(sh, j, g.P));
  }
}
