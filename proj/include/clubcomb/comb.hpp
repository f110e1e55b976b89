#pragma once

// Combinator terms over the primitives B, C, K, W, I and free symbols, with a
// fuel-bounded leftmost-outermost reducer for the defining equations
//
//   B x y z = x (y z)    C x y z = x z y    K x y = x
//   W x y   = x y y      I x     = x
//
// and symbolic verification of a closed term against a polynomial.

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "clubcomb/error.hpp"
#include "clubcomb/poly.hpp"

namespace clubcomb {

enum class Prim { B, C, K, W, I };

constexpr char prim_letter(Prim p) {
  switch (p) {
    case Prim::B: return 'B';
    case Prim::C: return 'C';
    case Prim::K: return 'K';
    case Prim::W: return 'W';
    case Prim::I: return 'I';
  }
  return '?';
}

/// Number of arguments a primitive consumes in one contraction.
constexpr std::size_t prim_arity(Prim p) {
  switch (p) {
    case Prim::B:
    case Prim::C: return 3;
    case Prim::K:
    case Prim::W: return 2;
    case Prim::I: return 1;
  }
  return 0;
}

inline std::optional<Prim> prim_from_letter(char c) {
  switch (c) {
    case 'B': return Prim::B;
    case 'C': return Prim::C;
    case 'K': return Prim::K;
    case 'W': return Prim::W;
    case 'I': return Prim::I;
    default: return std::nullopt;
  }
}

class CombTerm {
 public:
  enum class Kind { Prim, Sym, App };

  static CombTerm prim(Prim p);
  static CombTerm sym(std::string name);
  static CombTerm app(CombTerm left, CombTerm right);

  Kind kind() const;
  bool is_prim() const { return kind() == Kind::Prim; }
  bool is_sym() const { return kind() == Kind::Sym; }
  bool is_app() const { return kind() == Kind::App; }
  Prim prim_value() const;
  const std::string& name() const;
  const CombTerm& left() const;
  const CombTerm& right() const;

  friend bool operator==(const CombTerm& a, const CombTerm& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
      case Kind::Prim: return a.prim_value() == b.prim_value();
      case Kind::Sym: return a.name() == b.name();
      case Kind::App: return a.left() == b.left() && a.right() == b.right();
    }
    return false;
  }

 private:
  struct Node;
  CombTerm() = default;
  explicit CombTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct CombTerm::Node {
  Kind kind;
  Prim prim;
  std::string name;
  CombTerm left;
  CombTerm right;
};

inline CombTerm CombTerm::prim(Prim p) {
  return CombTerm(std::make_shared<const Node>(Node{Kind::Prim, p, {}, {}, {}}));
}
inline CombTerm CombTerm::sym(std::string name) {
  if (name.empty()) throw Error(ErrorKind::SyntaxError, "empty symbol name");
  return CombTerm(
      std::make_shared<const Node>(Node{Kind::Sym, Prim::I, std::move(name), {}, {}}));
}
inline CombTerm CombTerm::app(CombTerm left, CombTerm right) {
  return CombTerm(std::make_shared<const Node>(
      Node{Kind::App, Prim::I, {}, std::move(left), std::move(right)}));
}

inline CombTerm::Kind CombTerm::kind() const { return node_->kind; }
inline Prim CombTerm::prim_value() const { return node_->prim; }
inline const std::string& CombTerm::name() const { return node_->name; }
inline const CombTerm& CombTerm::left() const { return node_->left; }
inline const CombTerm& CombTerm::right() const { return node_->right; }

namespace comb {
inline const CombTerm B = CombTerm::prim(Prim::B);
inline const CombTerm C = CombTerm::prim(Prim::C);
inline const CombTerm K = CombTerm::prim(Prim::K);
inline const CombTerm W = CombTerm::prim(Prim::W);
inline const CombTerm I = CombTerm::prim(Prim::I);
}  // namespace comb

/// Left fold of application: apply(t, {x, y}) = (t x) y.
inline CombTerm apply(CombTerm head, std::span<const CombTerm> args) {
  for (const CombTerm& a : args) head = CombTerm::app(std::move(head), a);
  return head;
}

inline CombTerm apply(CombTerm head, std::initializer_list<CombTerm> args) {
  return apply(std::move(head), std::span<const CombTerm>(args.begin(), args.size()));
}

/// B^0 = I, B^1 = B, B^{n+1} = B B (B^n).
inline CombTerm b_power(std::size_t n) {
  if (n == 0) return comb::I;
  CombTerm acc = comb::B;
  for (std::size_t k = 1; k < n; ++k) acc = apply(comb::B, {comb::B, acc});
  return acc;
}

inline std::size_t size(const CombTerm& t) {
  return t.is_app() ? size(t.left()) + size(t.right()) : 1;
}

/// Primitive letters occurring in t, in the order B, C, K, W, I.
inline std::string primitives_of(const CombTerm& t) {
  bool seen[5] = {};
  auto go = [&](auto& self, const CombTerm& u) -> void {
    if (u.is_prim()) seen[static_cast<int>(u.prim_value())] = true;
    if (u.is_app()) {
      self(self, u.left());
      self(self, u.right());
    }
  };
  go(go, t);
  std::string out;
  for (Prim p : {Prim::B, Prim::C, Prim::K, Prim::W, Prim::I}) {
    if (seen[static_cast<int>(p)]) out += prim_letter(p);
  }
  return out;
}

inline std::set<std::string> free_symbols(const CombTerm& t) {
  std::set<std::string> out;
  auto go = [&](auto& self, const CombTerm& u) -> void {
    if (u.is_sym()) out.insert(u.name());
    if (u.is_app()) {
      self(self, u.left());
      self(self, u.right());
    }
  };
  go(go, t);
  return out;
}

// ---------------------------------------------------------------------------
// Reduction

namespace detail {
inline CombTerm contract(Prim p, std::span<const CombTerm> a) {
  switch (p) {
    case Prim::B: return CombTerm::app(a[0], CombTerm::app(a[1], a[2]));
    case Prim::C: return apply(a[0], {a[2], a[1]});
    case Prim::K: return a[0];
    case Prim::W: return apply(a[0], {a[1], a[1]});
    case Prim::I: return a[0];
  }
  return a[0];
}
}  // namespace detail

/// One leftmost-outermost contraction, or nullopt if t is in normal form.
inline std::optional<CombTerm> step(const CombTerm& t) {
  std::vector<CombTerm> args;
  const CombTerm* head = &t;
  while (head->is_app()) {
    args.push_back(head->right());
    head = &head->left();
  }
  std::reverse(args.begin(), args.end());

  if (head->is_prim() && args.size() >= prim_arity(head->prim_value())) {
    const std::size_t k = prim_arity(head->prim_value());
    CombTerm reduct = detail::contract(head->prim_value(), std::span(args).first(k));
    return apply(std::move(reduct), std::span<const CombTerm>(args).subspan(k));
  }
  for (std::size_t j = 0; j < args.size(); ++j) {
    if (auto reduced = step(args[j])) {
      args[j] = std::move(*reduced);
      return clubcomb::apply(*head, args);
    }
  }
  return std::nullopt;
}

enum class ReductionStatus { Normal, FuelExhausted };

struct ReductionResult {
  CombTerm term;
  std::size_t steps;
  ReductionStatus status;
};

inline constexpr std::size_t default_fuel = 1'000'000;

inline ReductionResult normalize(CombTerm t, std::size_t fuel = default_fuel) {
  std::size_t steps = 0;
  while (auto next = step(t)) {
    if (steps == fuel) return {std::move(t), steps, ReductionStatus::FuelExhausted};
    t = std::move(*next);
    ++steps;
  }
  return {std::move(t), steps, ReductionStatus::Normal};
}

// ---------------------------------------------------------------------------
// Verification

namespace detail {
inline CombTerm embed(const PolyTerm& t, std::span<const CombTerm> vars) {
  if (t.is_var()) return vars[t.index() - 1];
  return CombTerm::app(embed(t.left(), vars), embed(t.right(), vars));
}

// Symbols v1..vn (or v_1.., v__1.., ...) that do not clash with the candidate.
inline std::vector<CombTerm> fresh_symbols(const CombTerm& avoid, std::size_t n) {
  const auto taken = free_symbols(avoid);
  std::string prefix = "v";
  for (;;) {
    bool clash = false;
    for (std::size_t i = 1; i <= n && !clash; ++i) {
      clash = taken.contains(prefix + std::to_string(i));
    }
    if (!clash) break;
    prefix += '_';
  }
  std::vector<CombTerm> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) out.push_back(CombTerm::sym(prefix + std::to_string(i)));
  return out;
}
}  // namespace detail

struct VerifyOutcome {
  bool ok;
  std::size_t steps;
};

/// Checks candidate v1 ... vn ->* t[v1..vn / x1..xn]. Running out of fuel is
/// an error, not a negative answer.
inline VerifyOutcome verify_detailed(const CombTerm& candidate, const Sequent& s,
                                     std::size_t fuel = default_fuel) {
  if (s.context_size() == 0) {
    throw Error(ErrorKind::ArityZero, "computability needs at least one argument");
  }
  const auto vars = detail::fresh_symbols(candidate, s.context_size());
  const ReductionResult r = normalize(clubcomb::apply(candidate, vars), fuel);
  if (r.status == ReductionStatus::FuelExhausted) {
    throw Error(ErrorKind::FuelExhausted,
                "no normal form within " + std::to_string(fuel) + " steps");
  }
  return {r.term == detail::embed(s.term(), vars), r.steps};
}

inline bool verify(const CombTerm& candidate, const Sequent& s,
                   std::size_t fuel = default_fuel) {
  return verify_detailed(candidate, s, fuel).ok;
}

// ---------------------------------------------------------------------------
// Text

inline void print_comb(std::string& out, const CombTerm& t) {
  switch (t.kind()) {
    case CombTerm::Kind::Prim: out += prim_letter(t.prim_value()); return;
    case CombTerm::Kind::Sym: out += t.name(); return;
    case CombTerm::Kind::App:
      print_comb(out, t.left());
      out += ' ';
      if (t.right().is_app()) {
        out += '(';
        print_comb(out, t.right());
        out += ')';
      } else {
        print_comb(out, t.right());
      }
      return;
  }
}

inline std::string to_string(const CombTerm& t) {
  std::string out;
  print_comb(out, t);
  return out;
}

/// Single uppercase B, C, K, W, I are primitives; every other identifier is a
/// free symbol.
inline CombTerm parse_comb(std::string_view text) {
  const auto tokens = detail::tokenize(text);
  auto resolve = [](const detail::Token& tok) {
    if (tok.text.size() == 1) {
      if (auto p = prim_from_letter(tok.text[0])) return CombTerm::prim(*p);
    }
    return CombTerm::sym(tok.text);
  };
  detail::ApplicativeParser<CombTerm, decltype(resolve)> parser(tokens, 0, resolve);
  CombTerm t = parser.parse_term();
  detail::expect_end(tokens, parser.position());
  return t;
}

}  // namespace clubcomb
