#pragma once

// Test-only reference implementations. Nothing here calls the library's
// algorithm for the property it is used to check: functions are plain
// vectors, club membership is read off the definitions, closures are built by
// breadth-first search, and terms are reduced innermost-first.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "clubcomb/clubcomb.hpp"

namespace oracle {

// A function m -> n as (n, 1-based table).
using Table = std::pair<std::size_t, std::vector<std::size_t>>;

inline Table table_of(const clubcomb::FinFun& f) { return {f.cod(), f.table()}; }

/// Every function m -> n, tables in lexicographic order.
inline std::vector<Table> all_functions(std::size_t m, std::size_t n) {
  std::vector<Table> out;
  if (m > 0 && n == 0) return out;
  std::vector<std::size_t> t(m, 1);
  for (;;) {
    out.push_back({n, t});
    std::size_t k = m;
    while (k > 0 && t[k - 1] == n) t[--k] = 1;
    if (k == 0) break;
    ++t[k - 1];
  }
  return out;
}

inline std::vector<clubcomb::FinFun> all_finfuns(std::size_t max_size) {
  std::vector<clubcomb::FinFun> out;
  for (std::size_t m = 0; m <= max_size; ++m) {
    for (std::size_t n = 0; n <= max_size; ++n) {
      for (const auto& [cod, t] : all_functions(m, n)) out.emplace_back(cod, t);
    }
  }
  return out;
}

/// Club membership straight from the "consists of" definitions.
inline bool in_club(clubcomb::Club c, const Table& f) {
  const auto& [n, t] = f;
  const std::size_t m = t.size();
  bool injective = true, monotone = true, identity = m == n;
  std::set<std::size_t> image(t.begin(), t.end());
  injective = image.size() == m;
  const bool surjective = image.size() == n;
  for (std::size_t j = 0; j < m; ++j) {
    if (j > 0 && t[j - 1] > t[j]) monotone = false;
    if (t[j] != j + 1) identity = false;
  }
  using clubcomb::Club;
  switch (c) {
    case Club::Id: return identity;
    case Club::Bij: return injective && surjective;
    case Club::Minj: return monotone && injective;
    case Club::Msrj: return monotone && surjective;
    case Club::Inj: return injective;
    case Club::Srj: return surjective;
    case Club::Mfun: return monotone;
    case Club::Fun: return true;
  }
  return false;
}

inline std::vector<std::size_t> compose_tables(const std::vector<std::size_t>& g,
                                               const std::vector<std::size_t>& f) {
  std::vector<std::size_t> out(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) out[j] = g[f[j] - 1];
  return out;
}

// Generator tables written out from their case formulas.
inline Table tau(std::size_t n, std::size_t i) {
  std::vector<std::size_t> t(n);
  for (std::size_t x = 1; x <= n; ++x) t[x - 1] = x == i ? i + 1 : x == i + 1 ? i : x;
  return {n, t};
}
inline Table sigma(std::size_t n, std::size_t i) {
  std::vector<std::size_t> t(n + 1);
  for (std::size_t x = 1; x <= n + 1; ++x) t[x - 1] = x <= i ? x : x - 1;
  return {n, t};
}
inline Table delta(std::size_t n, std::size_t i) {
  std::vector<std::size_t> t(n - 1);
  for (std::size_t x = 1; x < n; ++x) t[x - 1] = x < i ? x : x + 1;
  return {n, t};
}

/// Closure of the identities under post-composition with the club's
/// generators, restricted to objects <= max_size.
inline std::set<Table> generated(clubcomb::Club c, std::size_t max_size) {
  const bool use_tau = c == clubcomb::Club::Bij || c == clubcomb::Club::Inj ||
                       c == clubcomb::Club::Srj || c == clubcomb::Club::Fun;
  const bool use_sigma = c == clubcomb::Club::Msrj || c == clubcomb::Club::Srj ||
                         c == clubcomb::Club::Mfun || c == clubcomb::Club::Fun;
  const bool use_delta = c == clubcomb::Club::Minj || c == clubcomb::Club::Inj ||
                         c == clubcomb::Club::Mfun || c == clubcomb::Club::Fun;
  std::vector<Table> gens;
  for (std::size_t n = 1; n <= max_size; ++n) {
    for (std::size_t i = 1; i <= n; ++i) {
      if (use_tau && i < n) gens.push_back(tau(n, i));
      if (use_sigma && n + 1 <= max_size) gens.push_back(sigma(n, i));
      if (use_delta) gens.push_back(delta(n, i));
    }
  }
  std::set<Table> seen;
  std::deque<Table> queue;
  for (std::size_t m = 0; m <= max_size; ++m) {
    std::vector<std::size_t> id(m);
    for (std::size_t x = 0; x < m; ++x) id[x] = x + 1;
    queue.push_back({m, id});
    seen.insert(queue.back());
  }
  while (!queue.empty()) {
    Table f = queue.front();
    queue.pop_front();
    for (const Table& g : gens) {
      if (g.second.size() != f.first) continue;  // g.dom must equal f.cod
      Table h{g.first, compose_tables(g.second, f.second)};
      if (seen.insert(h).second) queue.push_back(std::move(h));
    }
  }
  return seen;
}

/// Wreath product computed by thickening each line directly.
inline Table thicken(const Table& a, const std::vector<std::size_t>& ks) {
  std::vector<std::size_t> start(ks.size() + 1, 0);
  for (std::size_t i = 0; i < ks.size(); ++i) start[i + 1] = start[i] + ks[i];
  std::vector<std::size_t> t;
  for (std::size_t target : a.second) {
    for (std::size_t k = 1; k <= ks[target - 1]; ++k) t.push_back(start[target - 1] + k);
  }
  return {start.back(), t};
}

// ---------------------------------------------------------------------------
// Reduction oracle: innermost-first normalization, counting contractions.
// Only meaningful for strongly normalizing terms.

struct InnermostResult {
  clubcomb::CombTerm term;
  std::size_t steps;
  bool exhausted;
};

inline InnermostResult innermost_normalize(const clubcomb::CombTerm& t, std::size_t fuel) {
  using clubcomb::CombTerm;
  using clubcomb::Prim;
  std::size_t steps = 0;
  bool exhausted = false;
  auto go = [&](auto& self, const CombTerm& u) -> CombTerm {
    if (exhausted || !u.is_app()) return u;
    CombTerm l = self(self, u.left());
    CombTerm r = self(self, u.right());
    // l and r are normal; the only possible redex is at the root.
    std::vector<CombTerm> args{r};
    const CombTerm* head = &l;
    while (head->is_app()) {
      args.insert(args.begin(), head->right());
      head = &head->left();
    }
    if (!head->is_prim()) return CombTerm::app(l, r);
    const auto& a = args;
    std::optional<CombTerm> reduct;
    std::size_t used = 0;
    switch (head->prim_value()) {
      case Prim::B:
        if (a.size() >= 3) reduct = CombTerm::app(a[0], CombTerm::app(a[1], a[2])), used = 3;
        break;
      case Prim::C:
        if (a.size() >= 3) reduct = CombTerm::app(CombTerm::app(a[0], a[2]), a[1]), used = 3;
        break;
      case Prim::K:
        if (a.size() >= 2) reduct = a[0], used = 2;
        break;
      case Prim::W:
        if (a.size() >= 2) reduct = CombTerm::app(CombTerm::app(a[0], a[1]), a[1]), used = 2;
        break;
      case Prim::I:
        if (a.size() >= 1) reduct = a[0], used = 1;
        break;
    }
    if (!reduct) return CombTerm::app(l, r);
    if (++steps > fuel) {
      exhausted = true;
      return u;
    }
    CombTerm next = *reduct;
    for (std::size_t k = used; k < a.size(); ++k) next = CombTerm::app(next, a[k]);
    return self(self, next);
  };
  CombTerm out = go(go, t);
  return {out, steps, exhausted};
}

/// Does `candidate v1 .. vn` reduce (innermost) to the polynomial's image?
inline bool computes(const clubcomb::CombTerm& candidate, const clubcomb::Sequent& s) {
  using clubcomb::CombTerm;
  std::vector<CombTerm> vars;
  for (std::size_t i = 1; i <= s.context_size(); ++i) {
    vars.push_back(CombTerm::sym("oracle_v" + std::to_string(i)));
  }
  CombTerm applied = candidate;
  for (const CombTerm& v : vars) applied = CombTerm::app(applied, v);
  auto embed = [&](auto& self, const clubcomb::PolyTerm& t) -> CombTerm {
    if (t.is_var()) return vars[t.index() - 1];
    return CombTerm::app(self(self, t.left()), self(self, t.right()));
  };
  const auto r = innermost_normalize(applied, 1'000'000);
  return !r.exhausted && r.term == embed(embed, s.term());
}

// ---------------------------------------------------------------------------
// Random sequents

inline clubcomb::PolyTerm random_term(std::mt19937_64& rng, std::size_t context,
                                      std::size_t max_depth) {
  std::uniform_int_distribution<std::size_t> var(1, context);
  std::bernoulli_distribution branch(0.55);
  if (max_depth == 0 || !branch(rng)) return clubcomb::PolyTerm::var(var(rng));
  auto l = random_term(rng, context, max_depth - 1);
  auto r = random_term(rng, context, max_depth - 1);
  return clubcomb::PolyTerm::app(std::move(l), std::move(r));
}

inline clubcomb::Sequent random_sequent(std::mt19937_64& rng, std::size_t max_context,
                                        std::size_t max_depth) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_context)(rng);
  return clubcomb::Sequent(n, random_term(rng, n, max_depth));
}

inline clubcomb::FinFun random_finfun(std::mt19937_64& rng, std::size_t dom,
                                      std::size_t cod) {
  std::uniform_int_distribution<std::size_t> e(1, cod);
  std::vector<std::size_t> t(dom);
  for (auto& x : t) x = e(rng);
  return clubcomb::FinFun(cod, t);
}

}  // namespace oracle
