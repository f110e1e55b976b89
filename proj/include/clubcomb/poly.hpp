#pragma once

// Polynomials over an applicative system: terms built from context variables
// and binary application, read as sequents x1,...,xn |- t. The club action
// [t]a renames variables along a finite function; every term factors as an
// ordered linear term (its bracketing skeleton) acted on by its usage
// function.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "clubcomb/error.hpp"
#include "clubcomb/finord.hpp"

namespace clubcomb {

class PolyTerm {
 public:
  static PolyTerm var(std::size_t index);
  static PolyTerm app(PolyTerm left, PolyTerm right);

  bool is_var() const;
  /// 1-based context position; only meaningful for variables.
  std::size_t index() const;
  const PolyTerm& left() const;
  const PolyTerm& right() const;

  friend bool operator==(const PolyTerm& a, const PolyTerm& b) {
    if (a.node_ == b.node_) return true;
    if (a.is_var() || b.is_var()) return a.index() == b.index();
    return a.left() == b.left() && a.right() == b.right();
  }

 private:
  struct Node;
  PolyTerm() = default;
  explicit PolyTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct PolyTerm::Node {
  std::size_t index;  // 0 marks an application node
  PolyTerm left;
  PolyTerm right;
};

inline PolyTerm PolyTerm::var(std::size_t index) {
  if (index == 0) throw Error(ErrorKind::IndexOutOfRange, "variable index 0");
  return PolyTerm(std::make_shared<const Node>(Node{index, {}, {}}));
}
inline PolyTerm PolyTerm::app(PolyTerm left, PolyTerm right) {
  return PolyTerm(std::make_shared<const Node>(Node{0, std::move(left), std::move(right)}));
}

inline bool PolyTerm::is_var() const { return node_->index != 0; }
inline std::size_t PolyTerm::index() const { return node_->index; }
inline const PolyTerm& PolyTerm::left() const { return node_->left; }
inline const PolyTerm& PolyTerm::right() const { return node_->right; }

inline std::size_t max_var(const PolyTerm& t) {
  if (t.is_var()) return t.index();
  return std::max(max_var(t.left()), max_var(t.right()));
}

inline std::size_t occurrences(const PolyTerm& t) {
  if (t.is_var()) return 1;
  return occurrences(t.left()) + occurrences(t.right());
}

inline std::size_t depth(const PolyTerm& t) {
  if (t.is_var()) return 0;
  return 1 + std::max(depth(t.left()), depth(t.right()));
}

/// Left-nested application of a head to arguments.
inline PolyTerm apply(PolyTerm head, std::span<const PolyTerm> args) {
  for (const PolyTerm& a : args) head = PolyTerm::app(std::move(head), a);
  return head;
}

/// Gamma |- t with Gamma = x1..x_{context_size}. Every variable of t is in
/// scope; not every context variable has to occur.
class Sequent {
 public:
  Sequent(std::size_t context_size, PolyTerm term)
      : context_size_(context_size), term_(std::move(term)) {
    if (max_var(term_) > context_size_) {
      throw Error(ErrorKind::UndeclaredVariable,
                  "variable x" + std::to_string(max_var(term_)) +
                      " outside a context of size " + std::to_string(context_size_));
    }
  }

  std::size_t context_size() const noexcept { return context_size_; }
  const PolyTerm& term() const noexcept { return term_; }

  friend bool operator==(const Sequent&, const Sequent&) = default;

 private:
  std::size_t context_size_;
  PolyTerm term_;
};

// ---------------------------------------------------------------------------
// Printing

inline void print_term(std::string& out, const PolyTerm& t,
                       std::span<const std::string> names) {
  if (t.is_var()) {
    out += names.empty() ? "x" + std::to_string(t.index()) : names[t.index() - 1];
    return;
  }
  print_term(out, t.left(), names);
  out += ' ';
  if (t.right().is_var()) {
    print_term(out, t.right(), names);
  } else {
    out += '(';
    print_term(out, t.right(), names);
    out += ')';
  }
}

inline std::string to_string(const PolyTerm& t) {
  std::string out;
  print_term(out, t, {});
  return out;
}

/// Canonical form "x1,x2 |- x1 (x2 x1)".
inline std::string to_string(const Sequent& s) {
  std::string out;
  for (std::size_t i = 1; i <= s.context_size(); ++i) {
    if (i > 1) out += ',';
    out += "x" + std::to_string(i);
  }
  out += s.context_size() == 0 ? "|- " : " |- ";
  print_term(out, s.term(), {});
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

struct Token {
  enum Kind { Ident, LParen, RParen, Comma, Turnstile, End } kind;
  std::string text;
  std::size_t offset;
};

inline std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const unsigned char ch = static_cast<unsigned char>(text[pos]);
    if (std::isspace(ch)) {
      ++pos;
    } else if (std::isalpha(ch)) {
      const std::size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
        ++pos;
      }
      out.push_back({Token::Ident, std::string(text.substr(start, pos - start)), start});
    } else if (ch == '(') {
      out.push_back({Token::LParen, "(", pos++});
    } else if (ch == ')') {
      out.push_back({Token::RParen, ")", pos++});
    } else if (ch == ',') {
      out.push_back({Token::Comma, ",", pos++});
    } else if (text.substr(pos, 2) == "|-") {
      out.push_back({Token::Turnstile, "|-", pos});
      pos += 2;
    } else {
      throw Error(ErrorKind::SyntaxError, "unexpected character '" +
                                              std::string(1, text[pos]) +
                                              "' at offset " + std::to_string(pos));
    }
  }
  out.push_back({Token::End, "", text.size()});
  return out;
}

// Applicative terms over named atoms; shared with the combinator parser.
template <typename Term, typename Resolve>
class ApplicativeParser {
 public:
  ApplicativeParser(const std::vector<Token>& tokens, std::size_t pos, Resolve resolve)
      : tokens_(tokens), pos_(pos), resolve_(std::move(resolve)) {}

  Term parse_term() {
    Term acc = parse_atom();
    while (starts_atom()) acc = Term::app(std::move(acc), parse_atom());
    return acc;
  }

  std::size_t position() const { return pos_; }

 private:
  bool starts_atom() const {
    const auto k = tokens_[pos_].kind;
    return k == Token::Ident || k == Token::LParen;
  }

  Term parse_atom() {
    const Token& tok = tokens_[pos_];
    if (tok.kind == Token::Ident) {
      ++pos_;
      return resolve_(tok);
    }
    if (tok.kind == Token::LParen) {
      ++pos_;
      Term inner = parse_term();
      if (tokens_[pos_].kind != Token::RParen) {
        throw Error(ErrorKind::SyntaxError,
                    "expected ')' at offset " + std::to_string(tokens_[pos_].offset));
      }
      ++pos_;
      return inner;
    }
    throw Error(ErrorKind::SyntaxError,
                tok.kind == Token::End
                    ? std::string("unexpected end of input")
                    : "unexpected '" + tok.text + "' at offset " +
                          std::to_string(tok.offset));
  }

  const std::vector<Token>& tokens_;
  std::size_t pos_;
  Resolve resolve_;
};

struct ParsedContext {
  std::vector<std::string> names;
  std::size_t next;  // token index after the turnstile
};

inline ParsedContext parse_context(const std::vector<Token>& tokens) {
  ParsedContext ctx{{}, 0};
  std::size_t pos = 0;
  if (tokens[pos].kind == Token::Ident) {
    ctx.names.push_back(tokens[pos++].text);
    while (tokens[pos].kind == Token::Comma) {
      ++pos;
      if (tokens[pos].kind != Token::Ident) {
        throw Error(ErrorKind::SyntaxError, "expected identifier at offset " +
                                                std::to_string(tokens[pos].offset));
      }
      ctx.names.push_back(tokens[pos++].text);
    }
  }
  if (tokens[pos].kind != Token::Turnstile) {
    throw Error(ErrorKind::SyntaxError,
                "expected '|-' at offset " + std::to_string(tokens[pos].offset));
  }
  for (std::size_t i = 0; i < ctx.names.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (ctx.names[i] == ctx.names[j]) {
        throw Error(ErrorKind::DuplicateContextVariable,
                    "'" + ctx.names[i] + "' appears twice in the context");
      }
    }
  }
  ctx.next = pos + 1;
  return ctx;
}

inline void expect_end(const std::vector<Token>& tokens, std::size_t pos) {
  if (tokens[pos].kind != Token::End) {
    throw Error(ErrorKind::SyntaxError, "unexpected '" + tokens[pos].text +
                                            "' at offset " +
                                            std::to_string(tokens[pos].offset));
  }
}

}  // namespace detail

/// Parses "context |- term". Context names are erased: the i-th declared name
/// becomes Var i.
inline Sequent parse_sequent(std::string_view text) {
  const auto tokens = detail::tokenize(text);
  const auto ctx = detail::parse_context(tokens);
  auto resolve = [&](const detail::Token& tok) {
    for (std::size_t i = 0; i < ctx.names.size(); ++i) {
      if (ctx.names[i] == tok.text) return PolyTerm::var(i + 1);
    }
    throw Error(ErrorKind::UndeclaredVariable,
                "'" + tok.text + "' is not declared in the context");
  };
  detail::ApplicativeParser<PolyTerm, decltype(resolve)> parser(tokens, ctx.next, resolve);
  PolyTerm term = parser.parse_term();
  detail::expect_end(tokens, parser.position());
  return Sequent(ctx.names.size(), std::move(term));
}

/// A sequent whose undeclared identifiers were treated as constants: each
/// constant occurrence became a fresh variable placed ahead of the declared
/// context, in left-to-right order of occurrence.
struct ExtendedSequent {
  Sequent sequent;
  std::vector<std::string> constants;  // one entry per occurrence
  std::size_t declared_context;
};

inline ExtendedSequent parse_sequent_with_constants(std::string_view text) {
  const auto tokens = detail::tokenize(text);
  const auto ctx = detail::parse_context(tokens);

  // First pass counts constant occurrences so declared variables can be
  // shifted past them.
  std::size_t constant_count = 0;
  for (std::size_t p = ctx.next; tokens[p].kind != detail::Token::End; ++p) {
    if (tokens[p].kind != detail::Token::Ident) continue;
    if (std::find(ctx.names.begin(), ctx.names.end(), tokens[p].text) == ctx.names.end()) {
      ++constant_count;
    }
  }

  std::vector<std::string> constants;
  auto resolve = [&](const detail::Token& tok) {
    for (std::size_t i = 0; i < ctx.names.size(); ++i) {
      if (ctx.names[i] == tok.text) return PolyTerm::var(constant_count + i + 1);
    }
    constants.push_back(tok.text);
    return PolyTerm::var(constants.size());
  };
  detail::ApplicativeParser<PolyTerm, decltype(resolve)> parser(tokens, ctx.next, resolve);
  PolyTerm term = parser.parse_term();
  detail::expect_end(tokens, parser.position());
  return ExtendedSequent{Sequent(constant_count + ctx.names.size(), std::move(term)),
                         std::move(constants), ctx.names.size()};
}

// ---------------------------------------------------------------------------
// Multicategory structure

namespace detail {
inline PolyTerm shift(const PolyTerm& t, std::size_t offset) {
  if (t.is_var()) return PolyTerm::var(t.index() + offset);
  return PolyTerm::app(shift(t.left(), offset), shift(t.right(), offset));
}

inline PolyTerm replace_vars(const PolyTerm& t, std::span<const PolyTerm> images) {
  if (t.is_var()) return images[t.index() - 1];
  return PolyTerm::app(replace_vars(t.left(), images), replace_vars(t.right(), images));
}
}  // namespace detail

/// Multicategory composition: outer[inner_1, ..., inner_n / x_1, ..., x_n],
/// over the concatenated inner contexts.
inline Sequent substitute(const Sequent& outer, std::span<const Sequent> inners) {
  if (inners.size() != outer.context_size()) {
    throw Error(ErrorKind::ArityMismatch,
                "substitution needs " + std::to_string(outer.context_size()) +
                    " sequents, got " + std::to_string(inners.size()));
  }
  std::vector<PolyTerm> images;
  images.reserve(inners.size());
  std::size_t offset = 0;
  for (const Sequent& s : inners) {
    images.push_back(detail::shift(s.term(), offset));
    offset += s.context_size();
  }
  return Sequent(offset, detail::replace_vars(outer.term(), images));
}

/// [t]a: every Var i becomes Var a(i).
inline Sequent act(const Sequent& s, const FinFun& a) {
  if (a.dom() != s.context_size()) {
    throw Error(ErrorKind::ArityMismatch,
                "cannot act by " + to_string(a) + " on a context of size " +
                    std::to_string(s.context_size()));
  }
  std::vector<PolyTerm> images;
  images.reserve(a.dom());
  for (std::size_t i = 1; i <= a.dom(); ++i) images.push_back(PolyTerm::var(a(i)));
  return Sequent(a.cod(), detail::replace_vars(s.term(), images));
}

// ---------------------------------------------------------------------------
// Bracketings

/// Binary tree shape over anonymous leaves.
class Bracketing {
 public:
  static Bracketing leaf() { return Bracketing(nullptr); }
  static Bracketing node(Bracketing left, Bracketing right);

  bool is_leaf() const { return node_ == nullptr; }
  const Bracketing& left() const;
  const Bracketing& right() const;

  friend bool operator==(const Bracketing& a, const Bracketing& b) {
    if (a.is_leaf() || b.is_leaf()) return a.is_leaf() && b.is_leaf();
    return a.left() == b.left() && a.right() == b.right();
  }

 private:
  struct Node;
  explicit Bracketing(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct Bracketing::Node {
  Bracketing left;
  Bracketing right;
};

inline Bracketing Bracketing::node(Bracketing left, Bracketing right) {
  return Bracketing(std::make_shared<const Node>(Node{std::move(left), std::move(right)}));
}
inline const Bracketing& Bracketing::left() const { return node_->left; }
inline const Bracketing& Bracketing::right() const { return node_->right; }

inline std::size_t length(const Bracketing& b) {
  return b.is_leaf() ? 1 : length(b.left()) + length(b.right());
}

inline std::string to_string(const Bracketing& b) {
  if (b.is_leaf()) return "□";
  return "(" + to_string(b.left()) + to_string(b.right()) + ")";
}

/// B(t_1, ..., t_n): the i-th leaf from the left is replaced by terms[i].
inline PolyTerm fill(const Bracketing& b, std::span<const PolyTerm> terms) {
  std::size_t next = 0;
  auto go = [&](auto& self, const Bracketing& node) -> PolyTerm {
    if (node.is_leaf()) return terms[next++];
    PolyTerm l = self(self, node.left());
    PolyTerm r = self(self, node.right());
    return PolyTerm::app(std::move(l), std::move(r));
  };
  if (terms.size() != length(b)) {
    throw Error(ErrorKind::ArityMismatch,
                "bracketing of length " + std::to_string(length(b)) + " given " +
                    std::to_string(terms.size()) + " terms");
  }
  return go(go, b);
}

/// x1, ..., xm |- B(x1, ..., xm).
inline Sequent linear_sequent(const Bracketing& b) {
  const std::size_t m = length(b);
  std::vector<PolyTerm> vars;
  vars.reserve(m);
  for (std::size_t i = 1; i <= m; ++i) vars.push_back(PolyTerm::var(i));
  return Sequent(m, fill(b, vars));
}

/// i |> B: the i-th leaf (1-based) becomes a pair of leaves.
inline Bracketing split_leaf(const Bracketing& b, std::size_t i) {
  if (i < 1 || i > length(b)) {
    throw Error(ErrorKind::IndexOutOfRange,
                "leaf " + std::to_string(i) + " outside 1.." + std::to_string(length(b)));
  }
  std::size_t seen = 0;
  auto go = [&](auto& self, const Bracketing& node) -> Bracketing {
    if (node.is_leaf()) {
      return ++seen == i ? Bracketing::node(Bracketing::leaf(), Bracketing::leaf())
                         : node;
    }
    Bracketing l = self(self, node.left());
    Bracketing r = self(self, node.right());
    return Bracketing::node(std::move(l), std::move(r));
  };
  return go(go, b);
}

/// All bracketings of the given length, in a fixed order (split point of the
/// root ascending, then recursively).
inline std::vector<Bracketing> enumerate_bracketings(std::size_t len) {
  std::vector<std::vector<Bracketing>> table(len + 1);
  if (len >= 1) table[1] = {Bracketing::leaf()};
  for (std::size_t n = 2; n <= len; ++n) {
    for (std::size_t k = 1; k < n; ++k) {
      for (const Bracketing& l : table[k]) {
        for (const Bracketing& r : table[n - k]) table[n].push_back(Bracketing::node(l, r));
      }
    }
  }
  return len == 0 ? std::vector<Bracketing>{} : table[len];
}

// ---------------------------------------------------------------------------
// Usage analysis

struct UsageDecomposition {
  Bracketing skeleton;
  FinFun usage;  // occurrence j (left to right) -> context position
};

inline Bracketing skeleton_of(const PolyTerm& t) {
  if (t.is_var()) return Bracketing::leaf();
  return Bracketing::node(skeleton_of(t.left()), skeleton_of(t.right()));
}

/// s == act(linear_sequent(skeleton), usage).
inline UsageDecomposition usage(const Sequent& s) {
  std::vector<std::size_t> occ;
  auto scan = [&](auto& self, const PolyTerm& t) -> void {
    if (t.is_var()) {
      occ.push_back(t.index());
      return;
    }
    self(self, t.left());
    self(self, t.right());
  };
  scan(scan, s.term());
  if (occ.empty()) throw Error(ErrorKind::EmptyTerm, "term has no variables");
  return {skeleton_of(s.term()), FinFun(s.context_size(), occ)};
}

inline Club minimal_club_of(const Sequent& s) { return minimal_club(usage(s).usage); }

}  // namespace clubcomb
