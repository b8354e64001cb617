#include "qsc/fm.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qsc/rank1.hpp"

namespace qsc {

const char* status_name(FMStatus s) {
  switch (s) {
    case FMStatus::Success: return "Success";
    case FMStatus::Failed: return "Failed";
    case FMStatus::LimitExceeded: return "LimitExceeded";
  }
  return "?";
}

namespace {

struct Colored {
  std::vector<long long> color;
  long long mult = 0;
  bool saturated() const {
    return std::all_of(color.begin(), color.end(), [&](long long c) { return c == mult; });
  }
};

// Processing order: height below hw, then canonical text.
using QueueKey = std::pair<int, std::string>;

int height_of(const Shape& sh, const Monomial& hw, const Monomial& m) {
  auto c = height_from(sh, hw, m);
  if (!c) throw std::logic_error("monomial left the cone of " + format(hw));
  return std::accumulate(c->begin(), c->end(), 0);
}

}  // namespace

FMResult run(const Shape& sh, const Monomial& hw, const FMLimits& limits) {
  if (sh.M <= 0 || sh.N <= 0 || sh.M == sh.N) throw std::invalid_argument("run: need M, N > 0 and M != N");
  if (!is_dominant_hw(sh, hw)) throw std::invalid_argument("highest l-weight is not dominant: " + format(hw));
  const int rank = sh.rank();

  FMResult res;
  res.hw = hw;
  std::map<Monomial, Colored> state;
  std::map<QueueKey, Monomial> queue;

  auto enqueue = [&](const Monomial& m) {
    queue.emplace(QueueKey{height_of(sh, hw, m), format(m)}, m);
  };

  state[hw] = Colored{std::vector<long long>(rank, 0), 1};
  enqueue(hw);

  auto finish = [&](FMStatus st) {
    res.status = st;
    res.saturated = true;
    for (const auto& [m, c] : state) {
      res.qchar.add(m, c.mult);
      if (!c.saturated()) res.saturated = false;
    }
    return res;
  };

  while (!queue.empty()) {
    auto node = queue.begin();
    const Monomial m = node->second;
    queue.erase(node);
    if (state.at(m).saturated()) continue;

    for (int i = 1; i <= rank; ++i) {
      Colored& cm = state.at(m);
      const long long s = cm.mult, si = cm.color[i - 1];
      if (si >= s) continue;
      if (i != sh.M && !dominant_nonM(sh, m, i)) {
        res.fail_at = m;
        res.fail_direction = i;
        return finish(FMStatus::Failed);
      }
      Rank1Char ch = rank1_char(sh, m, i);

      std::map<std::vector<Spec>, Monomial> images;
      for (const auto& t : ch.terms) {
        Monomial mu = m;
        for (const auto& b : t.lifts) mu *= a_inverse(sh, i, b);
        images.emplace(t.lifts, mu);
        if (t.lifts.empty()) continue;

        if (++res.steps > limits.max_steps) return finish(FMStatus::LimitExceeded);
        const long long add = (s - si) * t.coef;
        auto it = state.find(mu);
        if (it == state.end()) {
          if (state.size() >= limits.max_monomials) return finish(FMStatus::LimitExceeded);
          Colored c{std::vector<long long>(rank, 0), add};
          c.color[i - 1] = add;
          state.emplace(mu, std::move(c));
        } else {
          Colored& c = it->second;
          c.color[i - 1] += add;
          c.mult = std::max(c.mult, c.color[i - 1]);
        }
        if (!state.at(mu).saturated()) enqueue(mu);
      }

      // Edge L \ {b} -> L for every removable b, when both are terms.
      for (const auto& [lifts, to] : images) {
        for (size_t k = 0; k < lifts.size(); ++k) {
          if (k > 0 && lifts[k] == lifts[k - 1]) continue;
          std::vector<Spec> smaller = lifts;
          smaller.erase(smaller.begin() + static_cast<long>(k));
          auto from = images.find(smaller);
          if (from != images.end()) res.edges.insert({from->second, i, lifts[k], to});
        }
      }
      state.at(m).color[i - 1] = state.at(m).mult;
    }
  }
  return finish(FMStatus::Success);
}

std::vector<std::pair<Monomial, long long>> ordered_terms(const Shape& sh, const FMResult& r) {
  std::vector<std::tuple<int, std::string, Monomial, long long>> rows;
  for (const auto& [m, c] : r.qchar.terms()) rows.emplace_back(height_of(sh, r.hw, m), format(m), m, c);
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
  });
  std::vector<std::pair<Monomial, long long>> out;
  for (auto& row : rows) out.emplace_back(std::get<2>(row), std::get<3>(row));
  return out;
}

static std::string dot_escape(const std::string& s) {
  std::string o;
  for (char c : s) {
    if (c == '"' || c == '\\') o += '\\';
    o += c;
  }
  return o;
}

std::string to_dot(const Shape& sh, const FMResult& r) {
  auto terms = ordered_terms(sh, r);
  std::map<Monomial, size_t> id;
  std::ostringstream os;
  os << "digraph qchar {\n";
  for (const auto& [m, c] : terms) {
    size_t k = id.size();
    id[m] = k;
    std::string label = format_display(sh, m);
    if (c > 1) label += " (×" + std::to_string(c) + ")";
    os << "  n" << k << " [label=\"" << dot_escape(label) << "\"];\n";
  }
  std::vector<std::tuple<size_t, size_t, int, std::string>> edges;
  for (const auto& e : r.edges) {
    auto f = id.find(e.from), t = id.find(e.to);
    if (f == id.end() || t == id.end()) continue;
    edges.emplace_back(f->second, t->second, e.i, e.a.to_string());
  }
  std::sort(edges.begin(), edges.end());
  for (const auto& [f, t, i, a] : edges)
    os << "  n" << f << " -> n" << t << " [label=\"" << i << "," << a << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string to_json(const Shape& sh, const FMResult& r) {
  nlohmann::ordered_json j;
  j["status"] = status_name(r.status);
  j["eps"] = {sh.M, sh.N};
  j["highest"] = format(r.hw);
  if (r.status == FMStatus::Failed) {
    j["failed_at"] = format(r.fail_at);
    j["direction"] = r.fail_direction;
  }
  if (r.status == FMStatus::LimitExceeded) j["steps"] = r.steps;
  j["terms"] = nlohmann::ordered_json::array();
  for (const auto& [m, c] : ordered_terms(sh, r)) j["terms"].push_back({{"m", format(m)}, {"mult", c}});
  std::vector<std::tuple<std::string, int, std::string, std::string>> edges;
  for (const auto& e : r.edges) edges.emplace_back(format(e.from), e.i, e.a.to_string(), format(e.to));
  std::sort(edges.begin(), edges.end());
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& [f, i, a, t] : edges) j["edges"].push_back({{"from", f}, {"i", i}, {"a", a}, {"to", t}});
  return j.dump(2);
}

}  // namespace qsc
