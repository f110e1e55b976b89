#pragma once

// Club-parameterized bracket abstraction. A polynomial t factors as
// [B(x1..xm)]u with B its bracketing skeleton and u its usage function. The
// linear part B is compiled over {B, I} by contracting one leaf pair at a
// time; u is then factored into transpositions, degeneracies and faces, and
// each generator is absorbed by prefixing B^{i-1} C, B^{i-1} W or B^{i-1} K.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "clubcomb/comb.hpp"
#include "clubcomb/error.hpp"
#include "clubcomb/finord.hpp"
#include "clubcomb/poly.hpp"

namespace clubcomb {

namespace detail {

// Leftmost node whose children are both leaves: returns the 1-based index of
// its left leaf and the bracketing with that node collapsed to a leaf.
inline std::pair<std::size_t, Bracketing> contract_leftmost_pair(const Bracketing& b) {
  std::size_t leaves = 0;
  std::optional<std::size_t> found;
  auto go = [&](auto& self, const Bracketing& node) -> Bracketing {
    if (node.is_leaf()) {
      ++leaves;
      return node;
    }
    if (!found && node.left().is_leaf() && node.right().is_leaf()) {
      found = leaves + 1;
      leaves += 2;
      return Bracketing::leaf();
    }
    Bracketing l = self(self, node.left());
    Bracketing r = self(self, node.right());
    return Bracketing::node(std::move(l), std::move(r));
  };
  Bracketing contracted = go(go, b);
  return {*found, std::move(contracted)};
}

}  // namespace detail

/// Closed {B, I} term a with a x1 ... xm = B(x1, ..., xm).
inline CombTerm compile_bracketing(const Bracketing& b) {
  if (b.is_leaf()) return comb::I;
  auto [i, smaller] = detail::contract_leftmost_pair(b);
  return apply(b_power(i - 1), {comb::B, compile_bracketing(smaller)});
}

/// From a computing f (arity n) to a term computing [f]tau^n_i.
inline CombTerm lift_transposition(const CombTerm& a, std::size_t n, std::size_t i) {
  if (i < 1 || i >= n) {
    throw Error(ErrorKind::IndexOutOfRange, "transposition index " + std::to_string(i) +
                                                " needs 1 <= i < " + std::to_string(n));
  }
  return apply(b_power(i - 1), {comb::C, a});
}

/// From a computing f (arity n-1) to a term computing [f]delta^n_i.
inline CombTerm lift_face(const CombTerm& a, std::size_t n, std::size_t i) {
  if (n <= 1) {
    throw Error(ErrorKind::ArityZero,
                "face map into " + std::to_string(n) + " would lift an arity-0 map");
  }
  if (i < 1 || i > n) {
    throw Error(ErrorKind::IndexOutOfRange, "face index " + std::to_string(i) +
                                                " needs 1 <= i <= " + std::to_string(n));
  }
  return apply(b_power(i - 1), {comb::K, a});
}

/// From a computing f (arity n+1) to a term computing [f]sigma^n_i.
inline CombTerm lift_degeneracy(const CombTerm& a, std::size_t n, std::size_t i) {
  if (i < 1 || i > n) {
    throw Error(ErrorKind::IndexOutOfRange, "degeneracy index " + std::to_string(i) +
                                                " needs 1 <= i <= " + std::to_string(n));
  }
  return apply(b_power(i - 1), {comb::W, a});
}

inline CombTerm lift(const CombTerm& a, const Generator& g) {
  switch (g.kind) {
    case GeneratorKind::Transposition: return lift_transposition(a, g.n, g.i);
    case GeneratorKind::Degeneracy: return lift_degeneracy(a, g.n, g.i);
    case GeneratorKind::Face: return lift_face(a, g.n, g.i);
  }
  return a;
}

struct CompileOptions {
  std::optional<Club> club;  // defaults to the minimal club of the usage
  bool verify = true;
  std::size_t fuel = default_fuel;
  bool constants = false;  // only consulted by compile_text
};

struct CompileReport {
  Sequent input;
  Bracketing skeleton;
  FinFun usage;
  Club minimal_club;
  Club club_used;
  std::vector<Generator> generator_chain;
  CombTerm output;
  bool verified = false;
  std::size_t steps = 0;
  // Constant occurrences hoisted into the leading context positions; output
  // has already been applied to them.
  std::vector<std::string> constants;
};

inline CompileReport compile(const Sequent& s, const CompileOptions& opts = {}) {
  if (s.context_size() == 0) {
    throw Error(ErrorKind::ArityZero, "a polynomial needs at least one variable");
  }
  UsageDecomposition dec = usage(s);
  const Club least = minimal_club(dec.usage);
  const Club club = opts.club.value_or(least);
  if (!contains(club, dec.usage)) {
    throw Error(ErrorKind::ClubViolation,
                "usage " + to_string(dec.usage) + " is not in club " +
                    std::string(club_name(club)) + "; minimal club is " +
                    std::string(club_name(least)),
                least);
  }

  std::vector<Generator> chain = factor(dec.usage, club);
  CombTerm term = compile_bracketing(dec.skeleton);
  std::size_t arity = dec.usage.dom();
  for (const Generator& g : chain) {
    if (g.dom() != arity) {
      throw Error(ErrorKind::InvariantFailure,
                  "generator " + to_string(g) + " applied at arity " + std::to_string(arity));
    }
    term = lift(term, g);
    arity = g.cod();
  }
  if (arity != s.context_size()) {
    throw Error(ErrorKind::InvariantFailure, "generator chain ends at arity " +
                                                 std::to_string(arity));
  }

  CompileReport report{s,     std::move(dec.skeleton), std::move(dec.usage), least, club,
                       std::move(chain), std::move(term), false, 0, {}};
  if (opts.verify) {
    const VerifyOutcome v = verify_detailed(report.output, s, opts.fuel);
    report.verified = v.ok;
    report.steps = v.steps;
  }
  return report;
}

/// Compiles the hoisted sequent, then applies the result to the constants.
inline CompileReport compile(const ExtendedSequent& ext, const CompileOptions& opts = {}) {
  if (ext.declared_context == 0) {
    throw Error(ErrorKind::ArityZero, "a polynomial needs at least one variable");
  }
  std::vector<CombTerm> consts;
  for (const std::string& name : ext.constants) {
    if (name.size() == 1 && prim_from_letter(name[0])) {
      throw Error(ErrorKind::SyntaxError,
                  "'" + name + "' is a reserved combinator and cannot be a constant");
    }
    consts.push_back(CombTerm::sym(name));
  }
  CompileReport report = compile(ext.sequent, opts);
  report.output = clubcomb::apply(report.output, consts);
  report.constants = ext.constants;
  return report;
}

/// Parses and compiles a sequent. Without opts.constants, identifiers missing
/// from the context are rejected; an empty context is always ArityZero.
inline CompileReport compile_text(std::string_view text, const CompileOptions& opts = {}) {
  ExtendedSequent ext = parse_sequent_with_constants(text);
  if (ext.declared_context == 0) {
    throw Error(ErrorKind::ArityZero, "a polynomial needs at least one variable");
  }
  if (opts.constants) return compile(ext, opts);
  if (!ext.constants.empty()) {
    throw Error(ErrorKind::UndeclaredVariable,
                "'" + ext.constants.front() + "' is not declared in the context");
  }
  return compile(parse_sequent(text), opts);
}

}  // namespace clubcomb
