// Frenkel-Mukhin type algorithm over U(eps_{M|N}).
//
// Colored monomials are expanded direction by direction with the rank-1
// oracles, processing the cone from the top (minimal A^{-1}-height first).
#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "qsc/lweights.hpp"

namespace qsc {

struct FMLimits {
  size_t max_monomials = 100000;
  size_t max_steps = 1000000;
};

enum class FMStatus { Success, Failed, LimitExceeded };
const char* status_name(FMStatus s);

struct FMEdge {
  Monomial from;
  int i = 0;
  Spec a;
  Monomial to;
  friend auto operator<=>(const FMEdge&, const FMEdge&) = default;
};

struct FMResult {
  FMStatus status = FMStatus::Success;
  Monomial hw;
  Monomial fail_at;  // Failed only
  int fail_direction = 0;
  size_t steps = 0;
  QChar qchar;  // partial unless Success
  std::set<FMEdge> edges;
  bool saturated = false;  // every color equals its multiplicity
};

// Throws std::invalid_argument if hw is not a dominant highest l-weight.
FMResult run(const Shape& sh, const Monomial& hw, const FMLimits& limits = {});

// Terms ordered by (height below hw, serialization).
std::vector<std::pair<Monomial, long long>> ordered_terms(const Shape& sh, const FMResult& r);

std::string to_dot(const Shape& sh, const FMResult& r);
std::string to_json(const Shape& sh, const FMResult& r);

}  // namespace qsc
