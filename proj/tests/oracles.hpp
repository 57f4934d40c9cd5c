#pragma once

// Test-only oracles, kept independent of the search engine they check.

#include <functional>
#include <optional>

#include "dss/lift.hpp"

namespace dss_test {

using namespace dss;

// Enumerate-everything lifting oracle: tries every complete assignment of
// the missing generators (no candidate filtering, no pruning) and checks the
// resulting map from scratch.
inline std::optional<DecMap> naive_lift(const LiftingProblem& p) {
  const SimplicialSet& B = *p.left.dst.ss;
  const SimplicialSet& X = *p.right.src.ss;
  std::vector<SimplexRef> assigned(B.gen_count());
  std::vector<char> fixed(B.gen_count(), 0);
  for (GenId a = 0; a < p.left.src.ss->gen_count(); ++a) {
    const SimplexRef& im = p.left.map.assign[a];
    assigned[im.gen] = p.top.map.assign[a];
    fixed[im.gen] = 1;
  }
  std::vector<GenId> free;
  for (int k = 0; k <= B.dims(); ++k)
    for (GenId g : B.gens[k])
      if (!fixed[g]) free.push_back(g);

  std::optional<DecMap> found;
  std::function<void(size_t)> rec = [&](size_t idx) {
    if (found) return;
    if (idx == free.size()) {
      SimplicialMap cand{p.left.dst.ss, p.right.src.ss, assigned};
      DecMap diag{p.left.dst, p.right.src, cand};
      try {
        diag.validate();
      } catch (const error&) {
        return;
      }
      if (compose_maps(diag.map, p.left.map).assign != p.top.map.assign)
        return;
      if (compose_maps(p.right.map, diag.map).assign != p.bottom.map.assign)
        return;
      found = diag;
      return;
    }
    GenId g = free[idx];
    for (const auto& cand : X.all_simplices(B.gen_dim[g])) {
      assigned[g] = cand;
      rec(idx + 1);
      if (found) return;
    }
  };
  rec(0);
  return found;
}

}  // namespace dss_test
