#pragma once

// Functors from the rigidified simplex into marked-scaled simplicial sets,
// presented by object values and full product action maps.

#include <functional>

#include "dss/gray.hpp"
#include "dss/poset.hpp"

namespace dss {

// The flag of poset elements of a nerve simplex, expanded to length m+1.
inline std::vector<uint32_t> expand_flag(const NerveResult& nv,
                                         const FinPoset& p,
                                         const SimplexRef& w, int m) {
  Surj s = nv.ss->surj(w);
  require(static_cast<int>(s.size()) == m + 1, "expand_flag: dim mismatch");
  std::vector<uint32_t> out;
  out.reserve(m + 1);
  for (int t = 0; t <= m; ++t)
    out.push_back(
        static_cast<uint32_t>(p.elems[nv.gen_chain[w.gen][s[t]]]));
  return out;
}

// The nerve simplex spanned by a weakly increasing word of poset elements.
inline SimplexRef nerve_word_ref(const NerveResult& nv, const FinPoset& p,
                                 const std::vector<uint32_t>& word) {
  std::vector<int> idx;
  idx.reserve(word.size());
  for (uint32_t e : word) idx.push_back(p.index_of(e));
  std::vector<int> uniq = idx;
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  Surj s;
  for (int v : idx)
    s.push_back(static_cast<int>(
        std::find(uniq.begin(), uniq.end(), v) - uniq.begin()));
  return nv.ss->make(nv.of(uniq), s);
}

struct OnFunctor {
  int n = 0;
  std::vector<DecSSet> values;  // marked-scaled, values[i] for i in [n]

  struct Action {
    FinPoset o;           // O(i, j)
    NerveResult o_nerve;  // its (fully scaled, flat marked) nerve
    ProductResult prod;   // N O(i,j) x values[i]
    SimplicialMap map;    // into values[j]
  };
  // action[i][j] defined for i <= j with values[i] nonempty
  std::vector<std::vector<std::optional<Action>>> action;

  const Action& act(int i, int j) const {
    require(action[i][j].has_value(), "OnFunctor: missing action");
    return *action[i][j];
  }

  // Apply the action to an aligned pair of simplices of equal dimension.
  SimplexRef apply_action(int i, int j, const SimplexRef& w,
                          const SimplexRef& x) const {
    const Action& a = act(i, j);
    auto [core, joint] = pair_normal_form(*a.o_nerve.ss, *values[i].ss, w, x);
    SimplexRef pr{a.prod.of(core), joint};
    return a.map.apply(pr);
  }
};

inline DecSSet o_nerve_dec(const NerveResult& nv) {
  return DecSSet{nv.ss, Flavor::MarkedScaled, {}, all_of_dim(*nv.ss, 2), {}};
}

// Build an action whose value on a product generator is computed from the
// expanded O-flag and the value simplex.
inline OnFunctor::Action build_action(
    int n, int i, int j, const DecSSet& from, const DecSSet& to,
    const std::function<SimplexRef(const std::vector<uint32_t>&,
                                   const SimplexRef&)>& on_gen) {
  OnFunctor::Action a;
  a.o = o_cat(n, i, j);
  a.o_nerve = nerve(a.o, std::max(0, j - i));
  a.prod = product(a.o_nerve.ss, from.ss);
  a.map = SimplicialMap{a.prod.ss, to.ss, {}};
  for (GenId g = 0; g < a.prod.ss->gen_count(); ++g) {
    const auto& [w, x] = a.prod.gen_pair[g];
    int m = a.prod.ss->gen_dim[g];
    a.map.assign.push_back(on_gen(expand_flag(a.o_nerve, a.o, w, m), x));
  }
  return a;
}

// Structural checks: units, decoration preservation, associativity on all
// generators of the triple products.
inline void validate_onfun(const OnFunctor& f) {
  int n = f.n;
  require(static_cast<int>(f.values.size()) == n + 1,
          "OnFunctor: value count mismatch");
  for (int i = 0; i <= n; ++i) f.values[i].validate();

  for (int i = 0; i <= n; ++i) {
    if (f.values[i].ss->gen_count() == 0) continue;
    for (int j = i; j <= n; ++j) {
      const auto& a = f.act(i, j);
      a.map.validate();
      PairDecoration pd =
          product_decoration(a.prod, o_nerve_dec(a.o_nerve), f.values[i]);
      for (GenId g : pd.marked)
        require(f.values[j].is_marked(a.map.assign[g]),
                "OnFunctor: action drops a marked edge");
      for (GenId g : pd.thin)
        require(f.values[j].is_thin(a.map.assign[g]),
                "OnFunctor: action drops a thin triangle");
      if (j == i) {
        int sing = a.o.index_of(bit(i));
        GenId sv = a.o_nerve.of({sing});
        for (GenId x = 0; x < f.values[i].ss->gen_count(); ++x) {
          int k = f.values[i].ss->gen_dim[x];
          SimplexRef w{sv, std::vector<int>(k)};
          std::iota(w.deg.begin(), w.deg.end(), 0);
          require(f.apply_action(i, i, w, SimplexRef{x, {}}) ==
                      SimplexRef{x, {}},
                  "OnFunctor: unit fails");
        }
      }
    }
  }

  for (int i = 0; i <= n; ++i) {
    if (f.values[i].ss->gen_count() == 0) continue;
    for (int j = i; j <= n; ++j)
      for (int k = j; k <= n; ++k) {
        const auto& aij = f.act(i, j);
        const auto& ajk = f.act(j, k);
        const auto& aik = f.act(i, k);
        ProductResult inner = product(ajk.o_nerve.ss, f.values[i].ss);
        ProductResult triple = product(aij.o_nerve.ss, inner.ss);
        for (GenId g = 0; g < triple.ss->gen_count(); ++g) {
          const auto& [w1, rest] = triple.gen_pair[g];
          SimplexRef w2 = inner.proj1.apply(rest);
          SimplexRef x = inner.proj2.apply(rest);
          SimplexRef r1 =
              f.apply_action(j, k, w2, f.apply_action(i, j, w1, x));
          int m = triple.ss->gen_dim[g];
          std::vector<uint32_t> f1 = expand_flag(aij.o_nerve, aij.o, w1, m);
          std::vector<uint32_t> f2 = expand_flag(ajk.o_nerve, ajk.o, w2, m);
          std::vector<uint32_t> fu(m + 1);
          for (int t = 0; t <= m; ++t) fu[t] = f1[t] | f2[t];
          SimplexRef wu = nerve_word_ref(aik.o_nerve, aik.o, fu);
          SimplexRef r2 = f.apply_action(i, k, wu, x);
          require(r1 == r2, "OnFunctor: associativity fails");
        }
      }
  }
}

}  // namespace dss
