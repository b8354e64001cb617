// Golden data shipped as JSON under fixtures/, plus the closed-form highest
// l-weights of the fundamental (column) representations.
//
// A term may be given as a monomial ("m"), as a list of A^{-1} factors below
// the highest weight ("ainv"), or both; when both are present they must agree.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsc/fm.hpp"
#include "qsc/lweights.hpp"

namespace qsc {

struct Fixture {
  std::string name;
  std::string description;
  Shape shape;
  Monomial hw;
  FMStatus status = FMStatus::Success;

  QChar expected;  // full character, or the partial one for Failed
  bool has_terms = false;
  std::set<FMEdge> edges;
  bool has_edges = false;

  std::optional<Monomial> failed_at;
  int direction = 0;
  std::optional<Monomial> missing;  // must not show up in the partial output

  std::vector<std::string> notes;
  std::vector<std::string> problems;  // inconsistencies found while loading
};

// $QSC_FIXTURES if set, else the source tree's fixtures/ directory.
std::string fixture_dir();
std::vector<std::string> fixture_names();
Fixture load_fixture_file(const std::string& path);
// Throws std::out_of_range for an unknown name.
Fixture fixture(const std::string& name);

// Checks that need no engine: cone property of every term, every edge is
// to = from * A^{-1}, the highest weight is the unique top term.
std::vector<std::string> check_fixture_data(const Fixture& f);

struct FixtureReport {
  std::string name;
  bool ok = true;
  std::vector<std::string> messages;
};
// Data checks plus a comparison against run().
FixtureReport verify_fixture(const Fixture& f, const FMLimits& limits = {});

// Highest l-weight of V(1^i)_a: Y[i, (-1)^{i+1+M} q^{N-M} a], 1 <= i <= M.
Monomial fund_lweight_of_column(const Shape& sh, int i, const Spec& a);
// Highest l-weight of V(-i)_a: Yt[n-i, (-1)^{n-i+1} q^{2N-2M} a], 1 <= i <= N.
Monomial fund_lweight_dual(const Shape& sh, int i, const Spec& a);

}  // namespace qsc
