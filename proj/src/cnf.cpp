#include "cubeprobe/cnf.hpp"

#include <cstdlib>
#include <sstream>

#include "cubeprobe/errors.hpp"

namespace cubeprobe {

int pair_variable(std::size_t k, std::size_t a, std::size_t b) {
  if (!(a < b && b < k)) throw InvalidParameter("pair_variable needs a < b < k");
  // Rows 0..a-1 contribute (k-1) + (k-2) + ... + (k-a) variables.
  const std::size_t before = a * (2 * k - a - 1) / 2;
  return static_cast<int>(before + (b - a - 1) + 1);
}

namespace {

// Literal for "a precedes b" with a != b.
int precedes_literal(std::size_t k, std::size_t a, std::size_t b) {
  return a < b ? pair_variable(k, a, b) : -pair_variable(k, b, a);
}

}  // namespace

CnfFormula encode_cnf(const Poset& p) {
  const std::size_t k = p.size();
  CnfFormula f;
  f.num_vars = k * (k - (k > 0 ? 1 : 0)) / 2;
  for (const auto& [a, b] : p.relations()) {
    f.clauses.push_back({precedes_literal(k, a, b)});
    ++f.type1_count;
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (b == a) continue;
      for (std::size_t c = 0; c < k; ++c) {
        if (c == a || c == b) continue;
        f.clauses.push_back({-precedes_literal(k, a, b), -precedes_literal(k, b, c),
                             precedes_literal(k, a, c)});
        ++f.type2_count;
      }
    }
  }
  return f;
}

std::string to_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const auto& clause : f.clauses) {
    for (int lit : clause) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

bool satisfies(const CnfFormula& f, const std::vector<bool>& assignment) {
  if (assignment.size() != f.num_vars) throw DimensionMismatch("assignment has the wrong length");
  for (const auto& clause : f.clauses) {
    bool sat = false;
    for (int lit : clause) {
      const bool value = assignment[static_cast<std::size_t>(std::abs(lit)) - 1];
      if ((lit > 0) == value) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

std::optional<LinearExtension> decode_assignment(std::size_t k, const std::vector<bool>& assignment) {
  if (assignment.size() != k * (k - (k > 0 ? 1 : 0)) / 2) {
    throw DimensionMismatch("assignment has the wrong length");
  }
  auto before = [&](std::size_t a, std::size_t b) {
    const int lit = precedes_literal(k, a, b);
    return assignment[static_cast<std::size_t>(std::abs(lit)) - 1] == (lit > 0);
  };
  // A transitive tournament ranks each element by how many elements precede it.
  LinearExtension e;
  e.order.assign(k, k);
  for (std::size_t x = 0; x < k; ++x) {
    std::size_t rank = 0;
    for (std::size_t y = 0; y < k; ++y) {
      if (y != x && before(y, x)) ++rank;
    }
    if (e.order[rank] != k) return std::nullopt;
    e.order[rank] = x;
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (!before(e.order[i], e.order[j])) return std::nullopt;
    }
  }
  return e;
}

}  // namespace cubeprobe
