#include "qsc/fixtures.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qsc {

namespace fs = std::filesystem;
using nlohmann::json;

std::string fixture_dir() {
  if (const char* env = std::getenv("QSC_FIXTURES"); env && *env) return env;
  return QSC_FIXTURE_DIR;
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  for (const auto& e : fs::directory_iterator(fixture_dir()))
    if (e.is_regular_file() && e.path().extension() == ".json") names.push_back(e.path().stem().string());
  std::sort(names.begin(), names.end());
  return names;
}

static FMStatus parse_status(const std::string& s) {
  if (s == "Success") return FMStatus::Success;
  if (s == "Failed") return FMStatus::Failed;
  if (s == "LimitExceeded") return FMStatus::LimitExceeded;
  throw std::invalid_argument("unknown status " + s);
}

Fixture load_fixture_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j = json::parse(in);

  Fixture f;
  f.name = j.at("name").get<std::string>();
  f.description = j.value("description", "");
  f.shape = Shape{j.at("M").get<int>(), j.at("N").get<int>()};
  const Shape& sh = f.shape;
  f.hw = parse_monomial(sh, j.at("hw").get<std::string>());
  f.status = parse_status(j.value("status", "Success"));

  if (j.contains("terms")) {
    f.has_terms = true;
    for (const auto& t : j.at("terms")) {
      std::optional<Monomial> m;
      if (t.contains("m")) m = parse_monomial(sh, t.at("m").get<std::string>());
      if (t.contains("ainv")) {
        Monomial w = f.hw;
        for (const auto& step : t.at("ainv"))
          w *= a_inverse(sh, step.at(0).get<int>(), parse_spec(step.at(1).get<std::string>()));
        if (m && *m != w)
          f.problems.push_back("term " + format(*m) + " disagrees with its A^-1 factors (" + format(w) + ")");
        m = w;
      }
      if (!m) throw std::invalid_argument(f.name + ": term without m or ainv");
      f.expected.add(*m, t.value("mult", 1LL));
    }
  }
  if (j.contains("edges")) {
    f.has_edges = true;
    for (const auto& e : j.at("edges"))
      f.edges.insert({parse_monomial(sh, e.at("from").get<std::string>()), e.at("i").get<int>(),
                      parse_spec(e.at("a").get<std::string>()), parse_monomial(sh, e.at("to").get<std::string>())});
  }
  if (j.contains("failed_at")) f.failed_at = parse_monomial(sh, j.at("failed_at").get<std::string>());
  f.direction = j.value("direction", 0);
  if (j.contains("missing")) f.missing = parse_monomial(sh, j.at("missing").get<std::string>());
  if (j.contains("notes"))
    for (const auto& n : j.at("notes")) f.notes.push_back(n.get<std::string>());
  return f;
}

Fixture fixture(const std::string& name) {
  fs::path p = fs::path(fixture_dir()) / (name + ".json");
  if (!fs::exists(p)) throw std::out_of_range("unknown fixture " + name);
  return load_fixture_file(p.string());
}

std::vector<std::string> check_fixture_data(const Fixture& f) {
  std::vector<std::string> bad = f.problems;
  const Shape& sh = f.shape;
  for (const auto& [m, c] : f.expected.terms()) {
    auto h = height_from(sh, f.hw, m);
    if (!h) {
      bad.push_back("term outside the cone: " + format(m));
      continue;
    }
    bool top = std::all_of(h->begin(), h->end(), [](int x) { return x == 0; });
    if (top && m != f.hw) bad.push_back("second term of height 0: " + format(m));
    if (std::any_of(h->begin(), h->end(), [](int x) { return x < 0; }))
      bad.push_back("term above the highest weight: " + format(m));
    if (c <= 0) bad.push_back("non-positive multiplicity on " + format(m));
  }
  if (f.has_terms && f.expected.mult(f.hw) != 1) bad.push_back("highest weight must have multiplicity 1");
  for (const auto& e : f.edges) {
    if (e.to != e.from * a_inverse(sh, e.i, e.a))
      bad.push_back("edge " + format(e.from) + " -(" + std::to_string(e.i) + "," + e.a.to_string() + ")-> " +
                    format(e.to) + " is not an A^-1 step");
    if (f.has_terms && (!f.expected.contains(e.from) || !f.expected.contains(e.to)))
      bad.push_back("edge endpoint missing from the term list: " + format(e.from) + " -> " + format(e.to));
  }
  return bad;
}

FixtureReport verify_fixture(const Fixture& f, const FMLimits& limits) {
  FixtureReport rep;
  rep.name = f.name;
  auto fail = [&](const std::string& msg) {
    rep.ok = false;
    rep.messages.push_back(msg);
  };
  for (const auto& p : check_fixture_data(f)) fail("data: " + p);

  FMResult r = run(f.shape, f.hw, limits);
  if (r.status != f.status)
    fail(std::string("status ") + status_name(r.status) + ", expected " + status_name(f.status));
  if (f.has_terms) {
    for (const auto& [m, c] : f.expected.terms())
      if (r.qchar.mult(m) != c)
        fail("term " + format(m) + ": got mult " + std::to_string(r.qchar.mult(m)) + ", expected " + std::to_string(c));
    for (const auto& [m, c] : r.qchar.terms())
      if (!f.expected.contains(m)) fail("unexpected term " + format(m));
  }
  if (f.has_edges && r.edges != f.edges) {
    for (const auto& e : f.edges)
      if (!r.edges.count(e)) fail("missing edge " + format(e.from) + " -(" + std::to_string(e.i) + "," + e.a.to_string() + ")-> " + format(e.to));
    for (const auto& e : r.edges)
      if (!f.edges.count(e)) fail("unexpected edge " + format(e.from) + " -(" + std::to_string(e.i) + "," + e.a.to_string() + ")-> " + format(e.to));
  }
  if (f.failed_at && (r.status != FMStatus::Failed || r.fail_at != *f.failed_at || r.fail_direction != f.direction))
    fail("failure reported at " + format(r.fail_at) + " direction " + std::to_string(r.fail_direction));
  if (f.missing && r.qchar.contains(*f.missing)) fail("missing l-weight " + format(*f.missing) + " was produced");
  return rep;
}

Monomial fund_lweight_of_column(const Shape& sh, int i, const Spec& a) {
  if (i < 1 || i > sh.M) throw std::out_of_range("fund_lweight_of_column: need 1 <= i <= M");
  Spec b = a.times_q(sh.N - sh.M);
  if ((i + 1 + sh.M) % 2 != 0) b = b.neg();
  return Y(sh, i, b);
}

Monomial fund_lweight_dual(const Shape& sh, int i, const Spec& a) {
  if (i < 1 || i > sh.N) throw std::out_of_range("fund_lweight_dual: need 1 <= i <= N");
  const int node = sh.n() - i;
  Spec b = a.times_q(2 * sh.N - 2 * sh.M);
  if ((node + 1) % 2 != 0) b = b.neg();
  return Yt(sh, node, b);
}

}  // namespace qsc
