// qsc: command-line front end.
//
//   qsc cartan 0011 [--specialized] [--invert] [--json]
//   qsc qchar --eps-std 3,2 --hw "Y[1,q^0]" [--dot f] [--json f] [--max-steps n]
//   qsc restrict --eps-std 3,2 --J 1..2 --mode tau (--m "<monomial>" | --qchar f.json)
//   qsc rank1 --eps-std 2,1 --node 2 --m "<monomial>"
//   qsc verify [--filter substr]
//
// Exit codes: 0 ok, 1 runtime error, 2 FM failure, 3 limit exceeded, 64 usage.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsc/cartan.hpp"
#include "qsc/fixtures.hpp"
#include "qsc/fm.hpp"
#include "qsc/rank1.hpp"
#include "qsc/restriction.hpp"

namespace {

using namespace qsc;
using ojson = nlohmann::ordered_json;

constexpr int kExitUsage = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Shape parse_shape(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) throw UsageError("--eps-std expects M,N");
  Shape sh;
  try {
    sh = {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
  } catch (const std::logic_error&) {
    throw UsageError("--eps-std expects M,N");
  }
  if (sh.M < 1 || sh.N < 1 || sh.M == sh.N) throw UsageError("--eps-std needs M, N >= 1 and M != N");
  return sh;
}

Monomial parse_or_usage(const Shape& sh, const std::string& text) {
  try {
    return parse_monomial(sh, text);
  } catch (const ParseError& e) {
    throw UsageError(std::string("bad monomial: ") + e.what());
  }
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << body;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string edge_text(const FMEdge& e) {
  return format(e.from) + " -(" + std::to_string(e.i) + "," + e.a.to_string() + ")-> " + format(e.to);
}

// ------------------------------------------------------------------ cartan

struct CartanOpts {
  std::string eps;
  bool specialized = false;
  bool invert = false;
  bool json = false;
};

ojson matrix_json(const MatrixSL& m) {
  ojson rows = ojson::array();
  for (const auto& row : m) {
    ojson r = ojson::array();
    for (const auto& x : row) r.push_back(x.to_string());
    rows.push_back(r);
  }
  return rows;
}

ojson matrix_json(const MatrixQQ& m) {
  ojson rows = ojson::array();
  for (const auto& row : m) {
    ojson r = ojson::array();
    for (const auto& x : row) r.push_back(x.to_string());
    rows.push_back(r);
  }
  return rows;
}

int cmd_cartan(const CartanOpts& o) {
  EpsilonSeq eps = [&] {
    try {
      return EpsilonSeq::parse(o.eps);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  if (o.invert && (!eps.is_standard() || eps.M == eps.N || eps.M == 0 || eps.N == 0))
    throw UsageError("--invert needs a standard sequence 0^M 1^N with M != N");

  ojson j;
  j["eps"] = eps.to_string();
  std::ostringstream txt;
  if (o.specialized || o.invert) {
    MatrixSL c = specialized_cartan(eps);
    j["specialized"] = matrix_json(c);
    txt << "C(q^r, qt^r), qt = -q^-1:\n" << render_matrix(c);
  } else {
    MatrixQQ c = deformed_cartan(eps);
    j["deformed"] = matrix_json(c);
    txt << "C(q, qt):\n" << render_matrix(c);
  }
  if (o.invert) {
    DetResult d = det_specialized(eps.M, eps.N);
    MatrixSL inv = closed_inverse_matrix(eps.M, eps.N);
    bool ok = verify_inverse(eps.M, eps.N);
    j["det"] = d.value.to_string();
    j["det_matches_cofactor"] = d.matches_cofactor;
    j["d_D_inverse"] = matrix_json(inv);
    j["verified"] = ok;
    txt << "\nd = det C = " << d.value.to_string() << (d.matches_cofactor ? "" : "  (cofactor expansion disagrees)")
        << "\n\nd * D^r * C^-1:\n" << render_matrix(inv) << "\nC * (D^r closed / d) == Id: " << (ok ? "yes" : "no")
        << "\n";
  }
  std::cout << (o.json ? j.dump(2) + "\n" : txt.str());
  return 0;
}

// ------------------------------------------------------------------- qchar

struct QCharOpts {
  std::string eps;
  std::string hw;
  std::string dot, json;
  size_t max_steps = FMLimits{}.max_steps;
  size_t max_monomials = FMLimits{}.max_monomials;
};

int cmd_qchar(const QCharOpts& o) {
  Shape sh = parse_shape(o.eps);
  Monomial hw = parse_or_usage(sh, o.hw);
  if (!is_dominant_hw(sh, hw)) throw UsageError("highest l-weight is not dominant: " + format(hw));
  FMResult r = run(sh, hw, FMLimits{o.max_monomials, o.max_steps});

  std::cout << "status: " << status_name(r.status) << "\n";
  std::cout << "highest: " << format(hw) << "\n";
  if (r.status == FMStatus::Failed)
    std::cout << "failed at: " << format(r.fail_at) << " (direction " << r.fail_direction << ")\n";
  if (r.status == FMStatus::LimitExceeded) std::cout << "steps: " << r.steps << "\n";
  auto terms = ordered_terms(sh, r);
  std::cout << "terms: " << terms.size() << " (dimension " << r.qchar.dimension() << ")\n";
  for (const auto& [m, c] : terms) {
    std::cout << "  " << format(m);
    if (c > 1) std::cout << "  x" << c;
    std::cout << "\n";
  }
  std::vector<std::string> edges;
  for (const auto& e : r.edges) edges.push_back(edge_text(e));
  std::sort(edges.begin(), edges.end());
  std::cout << "edges: " << edges.size() << "\n";
  for (const auto& e : edges) std::cout << "  " << e << "\n";

  if (!o.dot.empty()) write_file(o.dot, to_dot(sh, r));
  if (!o.json.empty()) write_file(o.json, to_json(sh, r) + "\n");
  switch (r.status) {
    case FMStatus::Success: return 0;
    case FMStatus::Failed: return 2;
    case FMStatus::LimitExceeded: return 3;
  }
  return 1;
}

// ---------------------------------------------------------------- restrict

struct RestrictOpts {
  std::string eps;
  std::string J;
  std::string mode = "tau";
  std::string reading = "swap-at-M";
  std::string m, qchar;
};

int cmd_restrict(const RestrictOpts& o) {
  Shape sh = parse_shape(o.eps);
  NodeInterval J;
  try {
    J = NodeInterval::parse(o.J);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (J.lo < 1 || J.hi > sh.rank()) throw UsageError("--J outside 1.." + std::to_string(sh.rank()));
  if (o.m.empty() == o.qchar.empty()) throw UsageError("give exactly one of --m and --qchar");
  TauReading reading = o.reading == "literal"       ? TauReading::Literal
                       : o.reading == "always-swap" ? TauReading::AlwaysSwap
                                                    : TauReading::SwapAtM;

  QChar in;
  if (!o.m.empty()) {
    in.add(parse_or_usage(sh, o.m));
  } else {
    try {
      in = qchar_from_json(sh, read_file(o.qchar));
    } catch (const ParseError& e) {
      throw UsageError(std::string("bad monomial in ") + o.qchar + ": " + e.what());
    }
  }

  Restrictor R(sh, J, reading);
  ojson j;
  j["eps"] = {sh.M, sh.N};
  j["J"] = std::to_string(J.lo) + ".." + std::to_string(J.hi);
  j["mode"] = o.mode;
  j["terms"] = ojson::array();
  for (const auto& [m, c] : in.terms()) {
    ojson t;
    t["m"] = format(m);
    t["mult"] = c;
    if (o.mode == "beta") {
      t["image"] = format(R.beta(m));
    } else {
      RestrictedMonomial rm = R.tau(m);
      t["inner"] = format(rm.inner);
      t["z"] = format_z(rm.z);
    }
    j["terms"].push_back(t);
  }
  if (o.mode == "tau" && in.size() > 1) {
    j["groups"] = ojson::array();
    for (const auto& g : group_by_z(R, in)) {
      ojson gj;
      gj["z"] = format_z(g.Q);
      gj["P"] = ojson::array();
      for (const auto& [m, c] : g.P.terms()) gj["P"].push_back({{"m", format(m)}, {"mult", c}});
      if (J.lo == J.hi && J.lo != sh.M) gj["sum_of_rank1"] = is_sum_of_rank1_chars(sh, J.lo, g.P);
      j["groups"].push_back(gj);
    }
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

// ------------------------------------------------------------------- rank1

struct Rank1Opts {
  std::string eps;
  int node = 1;
  std::string m;
};

std::string strings_text(const std::vector<QString>& v) {
  std::string out;
  for (const auto& s : v) {
    if (!out.empty()) out += ' ';
    out += "(" + s.start.to_string() + ",len " + std::to_string(s.len) + ")";
  }
  return out.empty() ? "-" : out;
}

int cmd_rank1(const Rank1Opts& o) {
  Shape sh = parse_shape(o.eps);
  if (o.node < 1 || o.node > sh.rank()) throw UsageError("--node outside 1.." + std::to_string(sh.rank()));
  Monomial m = restrict_to_node(sh, parse_or_usage(sh, o.m), o.node);
  std::cout << "node " << o.node << (o.node == sh.M ? " (odd, U(01))" : o.node < sh.M ? " (q^2 strings)" : " (qt^2 strings)")
            << "\nrestriction: " << format(m) << "\n";
  if (o.node == sh.M) {
    U01Normal nf = u01_normal_form(sh, m);
    std::cout << "normal form: D^" << -nf.s << "  Y-strings " << strings_text(nf.ystrings) << "  Yt-strings "
              << strings_text(nf.ytstrings) << "\n";
  } else if (!dominant_nonM(sh, m, o.node)) {
    std::cerr << "qsc: restriction is not dominant\n";
    return 1;
  } else {
    std::map<Spec, int> exps;
    for (const auto& [k, e] : m.exps()) exps[k.a] += e;
    std::cout << "strings: " << strings_text(sl2_decompose(exps, o.node < sh.M ? Lattice::Q2 : Lattice::QT2)) << "\n";
  }
  Rank1Char ch = rank1_char(sh, m, o.node);
  std::cout << "terms: " << ch.terms.size() << " (dimension " << ch.dimension() << ")\n";
  for (const auto& t : ch.terms) {
    Monomial mu = m;
    std::string lifts;
    for (const auto& b : t.lifts) {
      mu *= restrict_to_node(sh, a_inverse(sh, o.node, b), o.node);
      lifts += (lifts.empty() ? "" : " ") + b.to_string();
    }
    std::cout << "  " << t.coef << "  [" << lifts << "]  " << format(mu) << "\n";
  }
  return 0;
}

// ------------------------------------------------------------------ verify

int cmd_verify(const std::string& filter) {
  int bad = 0, total = 0;
  for (const auto& name : fixture_names()) {
    if (!filter.empty() && name.find(filter) == std::string::npos) continue;
    ++total;
    FixtureReport rep = verify_fixture(fixture(name));
    std::cout << (rep.ok ? "PASS " : "FAIL ") << name << "\n";
    for (const auto& m : rep.messages) std::cout << "  " << m << "\n";
    if (!rep.ok) ++bad;
  }
  std::cout << total - bad << "/" << total << " fixtures pass\n";
  return bad == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"q-characters over U(eps_{M|N})"};
  app.require_subcommand(1);

  CartanOpts co;
  auto* cartan = app.add_subcommand("cartan", "deformed Cartan matrix and its inverse");
  cartan->add_option("eps", co.eps, "01-sequence, e.g. 0011")->required();
  cartan->add_flag("--specialized", co.specialized, "specialize qt = -q^-1 at q^r");
  cartan->add_flag("--invert", co.invert, "closed-form inverse (standard sequences)");
  cartan->add_flag("--json", co.json, "JSON output");

  QCharOpts qo;
  auto* qchar = app.add_subcommand("qchar", "run the FM algorithm");
  qchar->add_option("--eps-std", qo.eps, "M,N")->required();
  qchar->add_option("--hw", qo.hw, "highest l-weight")->required();
  qchar->add_option("--dot", qo.dot, "write a DOT graph");
  qchar->add_option("--json", qo.json, "write JSON");
  qchar->add_option("--max-steps", qo.max_steps, "step limit");
  qchar->add_option("--max-monomials", qo.max_monomials, "monomial limit");

  RestrictOpts ro;
  auto* restrict = app.add_subcommand("restrict", "beta_J / tau_J of a monomial or a q-character");
  restrict->add_option("--eps-std", ro.eps, "M,N")->required();
  restrict->add_option("--J", ro.J, "node interval p..p'")->required();
  restrict->add_option("--mode", ro.mode, "beta or tau")->check(CLI::IsMember({"beta", "tau"}));
  restrict->add_option("--reading", ro.reading, "Yt placement")->check(CLI::IsMember({"swap-at-M", "literal", "always-swap"}));
  restrict->add_option("--m", ro.m, "monomial");
  restrict->add_option("--qchar", ro.qchar, "q-character JSON file");

  Rank1Opts r1;
  auto* rank1 = app.add_subcommand("rank1", "rank-1 normal form and character at one node");
  rank1->add_option("--eps-std", r1.eps, "M,N")->required();
  rank1->add_option("--node", r1.node, "node")->required();
  rank1->add_option("--m", r1.m, "monomial")->required();

  std::string filter;
  auto* verify = app.add_subcommand("verify", "check the engine against the shipped fixtures");
  verify->add_option("--filter", filter, "only fixtures whose name contains this");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*cartan) return cmd_cartan(co);
    if (*qchar) return cmd_qchar(qo);
    if (*restrict) return cmd_restrict(ro);
    if (*rank1) return cmd_rank1(r1);
    if (*verify) return cmd_verify(filter);
  } catch (const UsageError& e) {
    std::cerr << "qsc: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "qsc: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
