#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cubeprobe/extensions.hpp"
#include "cubeprobe/poset.hpp"

namespace cubeprobe {

// CNF whose models are the linear extensions of a poset.
//
// One variable per unordered pair {a,b}, a < b in label order, numbered
// 1..C(k,2) in row-major upper-triangle order; it is true iff a precedes b.
// Type-1 clauses are units forcing every relation of the closed order;
// type-2 clauses (not ab or not bc or ac) enforce transitivity over all
// P(k,3) ordered triples of distinct elements.
struct CnfFormula {
  std::size_t num_vars = 0;
  std::vector<std::vector<int>> clauses;
  std::size_t type1_count = 0;
  std::size_t type2_count = 0;
};

// DIMACS variable for the pair (a,b), a < b.
int pair_variable(std::size_t k, std::size_t a, std::size_t b);

CnfFormula encode_cnf(const Poset& p);

// "p cnf <vars> <clauses>" followed by one 0-terminated clause per line.
std::string to_dimacs(const CnfFormula& f);

bool satisfies(const CnfFormula& f, const std::vector<bool>& assignment);

// Reads an assignment (index v-1 holds variable v) back as an order of k
// elements; nullopt when the pair orientations are not transitive.
std::optional<LinearExtension> decode_assignment(std::size_t k, const std::vector<bool>& assignment);

}  // namespace cubeprobe
