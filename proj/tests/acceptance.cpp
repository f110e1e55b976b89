// Acceptance gate: one line per criterion, exit status 0 only if all pass.
//
//   acceptance                 run every criterion
//   acceptance --write-golden  regenerate the CLI golden files, then run

#include <algorithm>
#include <chrono>
#include <optional>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "clubcomb/clubcomb.hpp"
#include "oracles.hpp"

using namespace clubcomb;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Largest number of reduction steps seen by any check in criteria 1-9.
std::size_t max_steps = 0;

void note_steps(std::size_t n) { max_steps = std::max(max_steps, n); }

bool uses_only(const CombTerm& t, std::string_view allowed) {
  for (char c : primitives_of(t)) {
    if (allowed.find(c) == std::string_view::npos) return false;
  }
  return true;
}

// Verification by the library's reducer and by the independent innermost one.
bool verified_both_ways(const CombTerm& t, const Sequent& s) {
  const VerifyOutcome v = verify_detailed(t, s);
  note_steps(v.steps);
  return v.ok && oracle::computes(t, s);
}

struct Result {
  bool pass;
  std::string detail;
};

Result club_generator_oracle() {
  const auto start = Clock::now();
  std::size_t total = 0;
  for (Club c : all_clubs) {
    const std::set<oracle::Table> closure = oracle::generated(c, 4);
    std::set<oracle::Table> by_predicate, by_library;
    for (std::size_t m = 0; m <= 4; ++m) {
      for (std::size_t n = 0; n <= 4; ++n) {
        for (const oracle::Table& t : oracle::all_functions(m, n)) {
          if (oracle::in_club(c, t)) by_predicate.insert(t);
          if (contains(c, FinFun(t.first, t.second))) by_library.insert(t);
        }
      }
    }
    if (closure != by_predicate || closure != by_library) {
      return {false, std::string(club_name(c)) + ": closure has " +
                         std::to_string(closure.size()) + " maps, predicate class " +
                         std::to_string(by_predicate.size())};
    }
    total += closure.size();
  }
  const double t = seconds_since(start);
  std::ostringstream d;
  d << "8 clubs, " << total << " maps in total, " << t << " s";
  return {t < 10.0, d.str()};
}

Result factorization_roundtrip() {
  std::size_t pairs = 0;
  for (const FinFun& f : oracle::all_finfuns(4)) {
    for (Club c : all_clubs) {
      if (!contains(c, f)) continue;
      const auto chain = factor(f, c);
      for (const Generator& g : chain) {
        if (!allows(c, g.kind)) {
          return {false, to_string(g) + " outside " + std::string(club_name(c))};
        }
      }
      // Fold with the oracle's generator tables.
      std::vector<std::size_t> acc(f.dom());
      for (std::size_t x = 0; x < acc.size(); ++x) acc[x] = x + 1;
      std::size_t cod = f.dom();
      for (const Generator& g : chain) {
        const oracle::Table t = g.kind == GeneratorKind::Transposition ? oracle::tau(g.n, g.i)
                                : g.kind == GeneratorKind::Degeneracy ? oracle::sigma(g.n, g.i)
                                                                      : oracle::delta(g.n, g.i);
        if (t.second.size() != cod) return {false, "chain mis-typed for " + to_string(f)};
        acc = oracle::compose_tables(t.second, acc);
        cod = t.first;
      }
      if (cod != f.cod() || acc != f.table()) {
        return {false,
                to_string(f) + " in " + std::string(club_name(c)) + " does not recompose"};
      }
      ++pairs;
    }
  }
  return {true, std::to_string(pairs) + " (function, club) pairs"};
}

Result act_axioms() {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<std::size_t> size(1, 4);
  for (int k = 0; k < 1000; ++k) {
    // identity and composition
    const Sequent s = oracle::random_sequent(rng, 4, 5);
    if (act(s, identity(s.context_size())) != s) {
      return {false, "identity law: " + to_string(s)};
    }
    const FinFun a = oracle::random_finfun(rng, s.context_size(), size(rng));
    const FinFun b = oracle::random_finfun(rng, a.cod(), size(rng));
    if (act(act(s, a), b) != act(s, compose(b, a))) {
      return {false, "composition law: " + to_string(s)};
    }

    // action on the inner sequents is action by the sum
    const Sequent g = oracle::random_sequent(rng, 4, 5);
    std::vector<Sequent> fs, acted;
    std::vector<FinFun> as;
    for (std::size_t i = 0; i < g.context_size(); ++i) {
      fs.push_back(oracle::random_sequent(rng, 4, 5));
      as.push_back(oracle::random_finfun(rng, fs.back().context_size(), size(rng)));
      acted.push_back(act(fs.back(), as.back()));
    }
    if (substitute(g, acted) != act(substitute(g, fs), sum(as))) {
      return {false, "sum law: " + to_string(g)};
    }

    // action on the outer sequent is action by the wreath product
    const FinFun w = oracle::random_finfun(rng, g.context_size(), size(rng));
    std::vector<Sequent> hs, pulled;
    std::vector<std::size_t> arities;
    for (std::size_t i = 0; i < w.cod(); ++i) {
      hs.push_back(oracle::random_sequent(rng, 4, 5));
      arities.push_back(hs.back().context_size());
    }
    for (std::size_t j = 1; j <= w.dom(); ++j) pulled.push_back(hs[w(j) - 1]);
    if (substitute(act(g, w), hs) != act(substitute(g, pulled), wreath(w, arities))) {
      return {false, "wreath law: " + to_string(g)};
    }
  }
  return {true, "1000 cases x 4 laws"};
}

Result b_power_feeding() {
  const auto start = Clock::now();
  for (std::size_t n = 0; n <= 6; ++n) {
    std::vector<CombTerm> xs;
    for (std::size_t i = 1; i <= n; ++i) xs.push_back(CombTerm::sym("x" + std::to_string(i)));
    std::vector<CombTerm> args{CombTerm::sym("b"), CombTerm::sym("a")};
    args.insert(args.end(), xs.begin(), xs.end());
    const ReductionResult r = normalize(clubcomb::apply(b_power(n), args));
    note_steps(r.steps);
    const CombTerm expect =
        CombTerm::app(CombTerm::sym("b"), clubcomb::apply(CombTerm::sym("a"), xs));
    if (r.status != ReductionStatus::Normal || r.term != expect) {
      return {false, "n = " + std::to_string(n) + " gave " + to_string(r.term)};
    }
  }
  const double t = seconds_since(start);
  std::ostringstream d;
  d << "n = 0..6, " << t << " s";
  return {t < 1.0, d.str()};
}

Result linear_compilation() {
  std::size_t shapes = 0;
  for (std::size_t len = 1; len <= 6; ++len) {
    for (const Bracketing& b : enumerate_bracketings(len)) {
      const CombTerm t = compile_bracketing(b);
      if (!uses_only(t, "BI")) return {false, to_string(b) + " used " + primitives_of(t)};
      if (!verified_both_ways(t, linear_sequent(b))) return {false, to_string(b)};
      ++shapes;
    }
  }
  return {true, std::to_string(shapes) + " shapes of length 1..6"};
}

Result generator_lifts() {
  std::size_t lifts = 0;
  for (std::size_t len = 1; len <= 4; ++len) {
    for (const Bracketing& b : enumerate_bracketings(len)) {
      const Sequent s = linear_sequent(b);
      const CombTerm a = compile_bracketing(b);
      std::vector<Generator> gens;
      for (std::size_t i = 1; i < len; ++i) gens.push_back(transposition(len, i));
      for (std::size_t i = 1; i + 1 <= len; ++i) gens.push_back(degeneracy(len - 1, i));
      for (std::size_t i = 1; i <= len + 1; ++i) gens.push_back(face(len + 1, i));
      for (const Generator& g : gens) {
        const CombTerm t = lift(a, g);
        const std::string_view allowed = g.kind == GeneratorKind::Transposition ? "BCI"
                                         : g.kind == GeneratorKind::Degeneracy  ? "BWI"
                                                                                : "BKI";
        if (!uses_only(t, allowed)) return {false, to_string(g) + " on " + to_string(b)};
        if (!verified_both_ways(t, act(s, make_generator(g)))) {
          return {false, to_string(g) + " on " + to_string(b)};
        }
        ++lifts;
      }
    }
  }
  return {true, std::to_string(lifts) + " lifted terms"};
}

Result exhaustive_compilation() {
  const auto start = Clock::now();
  std::size_t count = 0;
  for (std::size_t occ = 1; occ <= 4; ++occ) {
    for (std::size_t ctx = 1; ctx <= 4; ++ctx) {
      for (const Bracketing& b : enumerate_bracketings(occ)) {
        const Sequent lin = linear_sequent(b);
        for (const auto& [cod, table] : oracle::all_functions(occ, ctx)) {
          const Sequent s = act(lin, FinFun(cod, table));
          const CompileReport r = compile(s);
          note_steps(r.steps);
          if (!r.verified || !oracle::computes(r.output, s)) return {false, to_string(s)};
          if (r.club_used != minimal_club_of(s) || !uses_only(r.output, basis(r.club_used))) {
            return {false, to_string(s) + " left basis " + basis(r.club_used)};
          }
          ++count;
        }
      }
    }
  }
  const double t = seconds_since(start);
  std::ostringstream d;
  d << count << " sequents, " << t << " s";
  return {t < 60.0, d.str()};
}

Result defining_equations() {
  const CombTerm x = CombTerm::sym("x"), y = CombTerm::sym("y"), z = CombTerm::sym("z");
  const auto ap = [](CombTerm l, CombTerm r) { return CombTerm::app(std::move(l), std::move(r)); };
  const std::pair<CombTerm, CombTerm> cases[] = {
      {apply(comb::B, {x, y, z}), ap(x, ap(y, z))},
      {apply(comb::C, {x, y, z}), ap(ap(x, z), y)},
      {apply(comb::K, {x, y}), x},
      {apply(comb::W, {x, y}), ap(ap(x, y), y)},
      {apply(comb::I, {x}), x},
  };
  for (const auto& [in, out] : cases) {
    const ReductionResult r = normalize(in, 3);
    note_steps(r.steps);
    if (r.status != ReductionStatus::Normal || r.term != out || r.steps > 3) {
      return {false, to_string(in)};
    }
  }
  return {true, "B C K W I, 1 step each"};
}

Result negative_control() {
  const auto violation = [](const char* text, Club club) -> std::optional<Club> {
    CompileOptions opts;
    opts.club = club;
    try {
      compile_text(text, opts);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::ClubViolation) return e.minimal_club();
    }
    return std::nullopt;
  };
  if (violation("x1,x2 |- x2 x1", Club::Id) != Club::Bij) return {false, "swap under Id"};
  if (violation("x1,x2 |- x1", Club::Bij) != Club::Minj) return {false, "drop under Bij"};
  return {true, "Id rejects a swap (Bij), Bij rejects a drop (Minj)"};
}

Result divergence_guard() {
  const ReductionResult r = normalize(parse_comb("W W W"), 100);
  if (r.status != ReductionStatus::FuelExhausted || r.steps != 100) {
    return {false, "W W W did not exhaust its fuel"};
  }
  return {max_steps <= default_fuel,
          "W W W exhausts 100 steps; largest reduction elsewhere " + std::to_string(max_steps) +
              " steps"};
}

struct Captured {
  int code;
  std::string out;
  std::string err;
};

Captured run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string golden_text(const Captured& c) {
  return "exit: " + std::to_string(c.code) + "\n--- stdout\n" + c.out + "--- stderr\n" + c.err;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Result cli_golden(bool write) {
  const std::string dir = CLUBCOMB_GOLDEN_DIR;
  const auto corpus = nlohmann::json::parse(read_file(dir + "/corpus.json"));
  std::size_t cases = 0;
  for (const auto& entry : corpus) {
    const std::string name = entry["name"];
    const auto args = entry["args"].get<std::vector<std::string>>();
    const Captured first = run_cli(args);
    const Captured second = run_cli(args);
    const std::string text = golden_text(first);
    const std::string path = dir + "/" + name + ".golden";
    if (write) std::ofstream(path, std::ios::binary) << text;
    if (golden_text(second) != text) return {false, name + " differs between runs"};
    if (read_file(path) != text) return {false, name + " differs from " + name + ".golden"};
    ++cases;
  }
  if (cases != 12) return {false, "corpus has " + std::to_string(cases) + " cases"};
  return {true, "12 cases, stdout, stderr and exit codes match"};
}

}  // namespace

int main(int argc, char** argv) {
  const bool write = argc > 1 && std::string(argv[1]) == "--write-golden";

  const std::vector<std::pair<std::string, std::function<Result()>>> criteria = {
      {"club/generator oracle", club_generator_oracle},
      {"factorization roundtrip", factorization_roundtrip},
      {"act axioms", act_axioms},
      {"B-power argument feeding", b_power_feeding},
      {"linear terms over {B,I}", linear_compilation},
      {"generator lifts", generator_lifts},
      {"exhaustive compilation", exhaustive_compilation},
      {"combinator equations", defining_equations},
      {"negative control", negative_control},
      {"divergence guard", divergence_guard},
      {"CLI golden corpus", [write] { return cli_golden(write); }},
  };

  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Result r{false, ""};
    try {
      r = criteria[k].second();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    failures += !r.pass;
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << k + 1 << ". " << criteria[k].first
              << ": " << r.detail << '\n';
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " failed")
            << '\n';
  return failures == 0 ? 0 : 1;
}
