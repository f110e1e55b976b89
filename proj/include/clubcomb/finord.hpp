#pragma once

// The category of finite ordinals {1..n} and all functions between them,
// together with the monoidal sum, coproduct structure, wreath product, the
// transposition/degeneracy/face generators, and the eight faithful cartesian
// clubs used to classify variable usage.

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "clubcomb/error.hpp"

namespace clubcomb {

/// A function between finite ordinals, dom -> cod.
///
/// The public interface is 1-based: entry j (1 <= j <= dom) is the image of j
/// and lies in 1..cod. Internally the images are kept 0-based.
class FinFun {
 public:
  FinFun() = default;

  /// Builds m -> cod from a 1-based table of length m.
  FinFun(std::size_t cod, std::span<const std::size_t> table) : cod_(cod) {
    images_.reserve(table.size());
    for (std::size_t j = 0; j < table.size(); ++j) {
      const std::size_t e = table[j];
      if (e < 1 || e > cod) {
        throw Error(ErrorKind::IndexOutOfRange,
                    "entry " + std::to_string(j + 1) + " = " +
                        std::to_string(e) + " outside 1.." +
                        std::to_string(cod));
      }
      images_.push_back(e - 1);
    }
  }

  FinFun(std::size_t cod, std::initializer_list<std::size_t> table)
      : FinFun(cod, std::span<const std::size_t>(table.begin(), table.size())) {}

  std::size_t dom() const noexcept { return images_.size(); }
  std::size_t cod() const noexcept { return cod_; }

  /// Image of x, both 1-based.
  std::size_t operator()(std::size_t x) const { return images_.at(x - 1) + 1; }

  std::vector<std::size_t> table() const {
    std::vector<std::size_t> out(images_.size());
    std::transform(images_.begin(), images_.end(), out.begin(),
                   [](std::size_t e) { return e + 1; });
    return out;
  }

  friend bool operator==(const FinFun&, const FinFun&) = default;
  friend auto operator<=>(const FinFun& a, const FinFun& b) {
    if (auto c = a.cod_ <=> b.cod_; c != 0) return c;
    return a.images_ <=> b.images_;
  }

 private:
  std::size_t cod_ = 0;
  std::vector<std::size_t> images_;
};

inline FinFun identity(std::size_t n) {
  std::vector<std::size_t> t(n);
  std::iota(t.begin(), t.end(), std::size_t{1});
  return FinFun(n, t);
}

/// g . f, i.e. f applied first.
inline FinFun compose(const FinFun& g, const FinFun& f) {
  if (f.cod() != g.dom()) {
    throw Error(ErrorKind::ArityMismatch,
                "cannot compose: inner codomain " + std::to_string(f.cod()) +
                    " != outer domain " + std::to_string(g.dom()));
  }
  std::vector<std::size_t> t(f.dom());
  for (std::size_t j = 1; j <= f.dom(); ++j) t[j - 1] = g(f(j));
  return FinFun(g.cod(), t);
}

inline FinFun sum(const FinFun& a, const FinFun& b) {
  std::vector<std::size_t> t = a.table();
  t.reserve(a.dom() + b.dom());
  for (std::size_t x = 1; x <= b.dom(); ++x) t.push_back(b(x) + a.cod());
  return FinFun(a.cod() + b.cod(), t);
}

/// a_1 + ... + a_n; the empty sum is the identity on 0.
inline FinFun sum(std::span<const FinFun> parts) {
  FinFun acc = identity(0);
  for (const FinFun& p : parts) acc = sum(acc, p);
  return acc;
}

/// The j-th coproduct injection k_j -> k_1 + ... + k_n (j is 1-based).
inline FinFun injection(std::size_t j, std::span<const std::size_t> ks) {
  if (j < 1 || j > ks.size()) {
    throw Error(ErrorKind::IndexOutOfRange,
                "injection index " + std::to_string(j) + " outside 1.." +
                    std::to_string(ks.size()));
  }
  const std::size_t total = std::accumulate(ks.begin(), ks.end(), std::size_t{0});
  const std::size_t offset =
      std::accumulate(ks.begin(), ks.begin() + static_cast<std::ptrdiff_t>(j - 1),
                      std::size_t{0});
  std::vector<std::size_t> t(ks[j - 1]);
  for (std::size_t x = 1; x <= t.size(); ++x) t[x - 1] = x + offset;
  return FinFun(total, t);
}

/// Copairing <f_1 | ... | f_n> of maps sharing codomain `cod`.
inline FinFun copair(std::span<const FinFun> fs, std::size_t cod) {
  std::vector<std::size_t> t;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (fs[i].cod() != cod) {
      throw Error(ErrorKind::CodomainMismatch,
                  "copair member " + std::to_string(i + 1) + " has codomain " +
                      std::to_string(fs[i].cod()) + ", expected " +
                      std::to_string(cod));
    }
    const auto part = fs[i].table();
    t.insert(t.end(), part.begin(), part.end());
  }
  return FinFun(cod, t);
}

/// Wreath product a ~ (k_1..k_n): thickens dot i of the codomain into k_i dots
/// and each domain dot j into k_{a(j)} dots mapped in order onto block a(j).
inline FinFun wreath(const FinFun& a, std::span<const std::size_t> ks) {
  if (ks.size() != a.cod()) {
    throw Error(ErrorKind::ArityMismatch,
                "wreath needs " + std::to_string(a.cod()) + " widths, got " +
                    std::to_string(ks.size()));
  }
  std::vector<FinFun> blocks;
  blocks.reserve(a.dom());
  for (std::size_t j = 1; j <= a.dom(); ++j) blocks.push_back(injection(a(j), ks));
  return copair(blocks, std::accumulate(ks.begin(), ks.end(), std::size_t{0}));
}

// ---------------------------------------------------------------------------
// Generators

enum class GeneratorKind { Transposition, Degeneracy, Face };

/// tau^n_i : n -> n, sigma^n_i : n+1 -> n, delta^n_i : n-1 -> n.
struct Generator {
  GeneratorKind kind;
  std::size_t n;
  std::size_t i;

  friend bool operator==(const Generator&, const Generator&) = default;

  std::size_t dom() const {
    switch (kind) {
      case GeneratorKind::Transposition: return n;
      case GeneratorKind::Degeneracy: return n + 1;
      case GeneratorKind::Face: return n - 1;
    }
    return n;
  }
  std::size_t cod() const { return n; }
};

inline Generator transposition(std::size_t n, std::size_t i) {
  return {GeneratorKind::Transposition, n, i};
}
inline Generator degeneracy(std::size_t n, std::size_t i) {
  return {GeneratorKind::Degeneracy, n, i};
}
inline Generator face(std::size_t n, std::size_t i) {
  return {GeneratorKind::Face, n, i};
}

/// Short form used on the command line: t(n,i), s(n,i), d(n,i).
inline std::string to_string(const Generator& g) {
  const char tag = g.kind == GeneratorKind::Transposition ? 't'
                   : g.kind == GeneratorKind::Degeneracy  ? 's'
                                                          : 'd';
  return std::string(1, tag) + "(" + std::to_string(g.n) + "," +
         std::to_string(g.i) + ")";
}

inline std::string_view kind_name(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::Transposition: return "transposition";
    case GeneratorKind::Degeneracy: return "degeneracy";
    case GeneratorKind::Face: return "face";
  }
  return "";
}

inline bool is_valid(const Generator& g) {
  switch (g.kind) {
    case GeneratorKind::Transposition: return g.n > 1 && g.i >= 1 && g.i < g.n;
    case GeneratorKind::Degeneracy:
    case GeneratorKind::Face: return g.n >= 1 && g.i >= 1 && g.i <= g.n;
  }
  return false;
}

inline FinFun make_generator(const Generator& g) {
  if (!is_valid(g)) {
    throw Error(ErrorKind::IndexOutOfRange, "invalid generator " + to_string(g));
  }
  std::vector<std::size_t> t(g.dom());
  for (std::size_t x = 1; x <= t.size(); ++x) {
    switch (g.kind) {
      case GeneratorKind::Transposition:
        t[x - 1] = x == g.i ? x + 1 : x == g.i + 1 ? x - 1 : x;
        break;
      case GeneratorKind::Degeneracy:
        t[x - 1] = x <= g.i ? x : x - 1;
        break;
      case GeneratorKind::Face:
        t[x - 1] = x < g.i ? x : x + 1;
        break;
    }
  }
  return FinFun(g.n, t);
}

/// Composite of a generator chain in application order (first element applied
/// first), starting from the identity on `dom`.
inline FinFun recompose(std::span<const Generator> chain, std::size_t dom) {
  FinFun acc = identity(dom);
  for (const Generator& g : chain) acc = compose(make_generator(g), acc);
  return acc;
}

// ---------------------------------------------------------------------------
// Clubs

struct Classification {
  bool injective;
  bool surjective;
  bool monotone;
  bool bijective;
  bool identity;

  friend bool operator==(const Classification&, const Classification&) = default;
};

inline Classification classify(const FinFun& f) {
  std::vector<bool> hit(f.cod(), false);
  bool injective = true;
  bool monotone = true;
  bool is_identity = f.dom() == f.cod();
  for (std::size_t x = 1; x <= f.dom(); ++x) {
    const std::size_t e = f(x);
    if (hit[e - 1]) injective = false;
    hit[e - 1] = true;
    if (x > 1 && f(x - 1) > e) monotone = false;
    if (e != x) is_identity = false;
  }
  const bool surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  return {injective, surjective, monotone, injective && surjective, is_identity};
}

enum class Club { Id, Bij, Minj, Msrj, Inj, Srj, Mfun, Fun };

inline constexpr std::array<Club, 8> all_clubs = {
    Club::Id, Club::Bij, Club::Minj, Club::Msrj,
    Club::Inj, Club::Srj, Club::Mfun, Club::Fun};

constexpr std::string_view club_name(Club c) {
  switch (c) {
    case Club::Id: return "Id";
    case Club::Bij: return "Bij";
    case Club::Minj: return "Minj";
    case Club::Msrj: return "Msrj";
    case Club::Inj: return "Inj";
    case Club::Srj: return "Srj";
    case Club::Mfun: return "Mfun";
    case Club::Fun: return "Fun";
  }
  return "";
}

/// Lowercase command-line spelling.
inline std::string club_short_name(Club c) {
  std::string s(club_name(c));
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  return s;
}

inline std::optional<Club> club_from_short_name(std::string_view name) {
  for (Club c : all_clubs) {
    if (club_short_name(c) == name) return c;
  }
  return std::nullopt;
}

namespace detail {
// Which of the three generator families a club is generated by. Every club in
// the table is determined by this triple, and inclusion of clubs is inclusion
// of the triples.
struct GeneratorSet {
  bool transpositions;
  bool degeneracies;
  bool faces;
};

constexpr GeneratorSet generator_set(Club c) {
  switch (c) {
    case Club::Id: return {false, false, false};
    case Club::Bij: return {true, false, false};
    case Club::Minj: return {false, false, true};
    case Club::Msrj: return {false, true, false};
    case Club::Inj: return {true, false, true};
    case Club::Srj: return {true, true, false};
    case Club::Mfun: return {false, true, true};
    case Club::Fun: return {true, true, true};
  }
  return {};
}
}  // namespace detail

inline bool allows(Club c, GeneratorKind k) {
  const auto gs = detail::generator_set(c);
  switch (k) {
    case GeneratorKind::Transposition: return gs.transpositions;
    case GeneratorKind::Degeneracy: return gs.degeneracies;
    case GeneratorKind::Face: return gs.faces;
  }
  return false;
}

/// Lattice order: inclusion of the function classes.
constexpr bool leq(Club a, Club b) {
  const auto x = detail::generator_set(a);
  const auto y = detail::generator_set(b);
  return (!x.transpositions || y.transpositions) &&
         (!x.degeneracies || y.degeneracies) && (!x.faces || y.faces);
}

inline bool contains(Club c, const FinFun& f) {
  const Classification k = classify(f);
  switch (c) {
    case Club::Id: return k.identity;
    case Club::Bij: return k.bijective;
    case Club::Minj: return k.monotone && k.injective;
    case Club::Msrj: return k.monotone && k.surjective;
    case Club::Inj: return k.injective;
    case Club::Srj: return k.surjective;
    case Club::Mfun: return k.monotone;
    case Club::Fun: return true;
  }
  return false;
}

inline Club minimal_club(const FinFun& f) {
  const Classification k = classify(f);
  if (k.identity) return Club::Id;
  if (k.bijective) return Club::Bij;
  if (k.monotone && k.injective) return Club::Minj;
  if (k.monotone && k.surjective) return Club::Msrj;
  if (k.injective) return Club::Inj;
  if (k.surjective) return Club::Srj;
  if (k.monotone) return Club::Mfun;
  return Club::Fun;
}

/// Combinator basis characterising the club, as a string of primitive letters
/// in the fixed order B, C, K, W, I.
inline std::string basis(Club c) {
  const auto gs = detail::generator_set(c);
  std::string out = "B";
  if (gs.transpositions) out += 'C';
  if (gs.faces) out += 'K';
  if (gs.degeneracies) out += 'W';
  out += 'I';
  return out;
}

// ---------------------------------------------------------------------------
// Factorization

/// Writes f as a chain of generators allowed by c, in application order.
///
/// f = mono . perm, where perm stably sorts domain positions by image and is
/// bubble-sorted into adjacent transpositions; mono splits into its monotone
/// surjective part (degeneracies) followed by its monotone injective part
/// (faces).
inline std::vector<Generator> factor(const FinFun& f, Club c) {
  if (!contains(c, f)) {
    throw Error(ErrorKind::NotInClub,
                "function is not in club " + std::string(club_name(c)) +
                    "; minimal club is " + std::string(club_name(minimal_club(f))),
                minimal_club(f));
  }
  const std::size_t m = f.dom();
  std::vector<Generator> chain;

  // Permutation part. order[r] is the domain position ranked r-th.
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{1});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return f(a) < f(b); });
  std::vector<std::size_t> perm(m);  // perm[j-1] = rank of j, 1-based
  for (std::size_t r = 0; r < m; ++r) perm[order[r] - 1] = r + 1;
  // perm . tau_{s1} . ... . tau_{sk} = id  implies  perm = tau_{sk} . ... . tau_{s1}
  for (std::size_t pass = 0; pass + 1 < m; ++pass) {
    for (std::size_t x = 0; x + 1 < m - pass; ++x) {
      if (perm[x] > perm[x + 1]) {
        std::swap(perm[x], perm[x + 1]);
        chain.push_back(transposition(m, x + 1));
      }
    }
  }

  // Monotone part: sorted images.
  std::vector<std::size_t> mono(m);
  for (std::size_t r = 0; r < m; ++r) mono[r] = f(order[r]);

  // Degeneracies: merge the leftmost equal neighbours until injective.
  std::size_t width = m;
  for (std::size_t x = 0; x + 1 < mono.size();) {
    if (mono[x] == mono[x + 1]) {
      chain.push_back(degeneracy(width - 1, x + 1));
      mono.erase(mono.begin() + static_cast<std::ptrdiff_t>(x + 1));
      --width;
    } else {
      ++x;
    }
  }

  // Faces: skip the missing codomain values in ascending order.
  std::vector<bool> hit(f.cod(), false);
  for (std::size_t e : mono) hit[e - 1] = true;
  for (std::size_t v = 1; v <= f.cod(); ++v) {
    if (!hit[v - 1]) {
      ++width;
      chain.push_back(face(width, v));
    }
  }
  return chain;
}

// ---------------------------------------------------------------------------
// Text format  m->n:[e1,...,em]

inline std::string to_string(const FinFun& f) {
  std::string out = std::to_string(f.dom()) + "->" + std::to_string(f.cod()) + ":[";
  for (std::size_t x = 1; x <= f.dom(); ++x) {
    if (x > 1) out += ',';
    out += std::to_string(f(x));
  }
  out += ']';
  return out;
}

namespace detail {
inline std::size_t read_natural(std::string_view text, std::size_t& pos) {
  const auto* begin = text.data() + pos;
  const auto* end = text.data() + text.size();
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr == begin) {
    throw Error(ErrorKind::SyntaxError,
                "expected a natural number at offset " + std::to_string(pos));
  }
  if (*begin == '0' && ptr - begin > 1) {
    throw Error(ErrorKind::SyntaxError,
                "leading zero at offset " + std::to_string(pos));
  }
  pos += static_cast<std::size_t>(ptr - begin);
  return value;
}

inline void expect(std::string_view text, std::size_t& pos, std::string_view lit) {
  if (text.substr(pos, lit.size()) != lit) {
    throw Error(ErrorKind::SyntaxError, "expected '" + std::string(lit) +
                                            "' at offset " + std::to_string(pos));
  }
  pos += lit.size();
}
}  // namespace detail

/// Strict parser for the canonical text form; to_string(parse_finfun(s)) == s
/// for every accepted s.
inline FinFun parse_finfun(std::string_view text) {
  std::size_t pos = 0;
  const std::size_t m = detail::read_natural(text, pos);
  detail::expect(text, pos, "->");
  const std::size_t n = detail::read_natural(text, pos);
  detail::expect(text, pos, ":[");
  std::vector<std::size_t> t;
  if (pos < text.size() && text[pos] != ']') {
    t.push_back(detail::read_natural(text, pos));
    while (pos < text.size() && text[pos] == ',') {
      ++pos;
      t.push_back(detail::read_natural(text, pos));
    }
  }
  detail::expect(text, pos, "]");
  if (pos != text.size()) {
    throw Error(ErrorKind::SyntaxError,
                "trailing characters at offset " + std::to_string(pos));
  }
  if (t.size() != m) {
    throw Error(ErrorKind::ArityMismatch, "declared domain " + std::to_string(m) +
                                              " but table has " +
                                              std::to_string(t.size()) + " entries");
  }
  return FinFun(n, t);
}

}  // namespace clubcomb
