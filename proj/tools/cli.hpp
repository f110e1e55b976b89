#pragma once

// Command-line front end. run() is the whole program minus process plumbing so
// tests can drive it in-process.
//
// Exit codes: 0 success, 1 usage or syntax error, 2 club violation,
// 3 fuel exhausted, 4 internal invariant failure.

#include <algorithm>
#include <cstddef>
#include <exception>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "clubcomb/clubcomb.hpp"

namespace clubcomb::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kClubViolation = 2,
  kFuelExhausted = 3,
  kInternal = 4,
};

struct Invocation {
  std::string command;
  std::string input;
  std::optional<Club> club;
  bool verify = true;
  std::size_t fuel = default_fuel;
  bool json = false;
  bool constants = false;
};

using Json = nlohmann::ordered_json;

inline int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ClubViolation:
    case ErrorKind::NotInClub: return kClubViolation;
    case ErrorKind::FuelExhausted: return kFuelExhausted;
    case ErrorKind::InvariantFailure: return kInternal;
    default: return kUsage;
  }
}

namespace detail {

inline Json usage_json(const FinFun& f) {
  return Json{{"dom", f.dom()}, {"cod", f.cod()}, {"table", f.table()}};
}

inline Json generators_json(const std::vector<Generator>& chain) {
  Json arr = Json::array();
  for (const Generator& g : chain) {
    arr.push_back(Json{{"kind", kind_name(g.kind)}, {"n", g.n}, {"i", g.i}});
  }
  return arr;
}

inline std::string chain_text(const std::vector<Generator>& chain) {
  if (chain.empty()) return "(none)";
  std::string out;
  for (const Generator& g : chain) {
    if (!out.empty()) out += ' ';
    out += to_string(g);
  }
  return out;
}

inline void line(std::ostream& out, const std::string& label, const std::string& value) {
  std::string padded = label + ":";
  padded.resize(std::max<std::size_t>(padded.size() + 1, 14), ' ');
  out << padded << value << '\n';
}

inline int analyze(const Invocation& inv, std::ostream& out, Json& doc) {
  const Sequent s = parse_sequent(inv.input);
  const UsageDecomposition dec = usage(s);
  const Club least = minimal_club(dec.usage);
  if (inv.json) {
    doc["usage"] = usage_json(dec.usage);
    doc["skeleton"] = to_string(dec.skeleton);
    doc["minimal_club"] = club_name(least);
    return kOk;
  }
  line(out, "sequent", to_string(s));
  line(out, "usage", to_string(dec.usage));
  line(out, "skeleton", to_string(dec.skeleton));
  line(out, "minimal club", std::string(club_name(least)));
  out << "diagram:\n" << render_diagram(dec.usage);
  return kOk;
}

inline int compile(const Invocation& inv, std::ostream& out, Json& doc) {
  CompileOptions opts;
  opts.club = inv.club;
  opts.verify = inv.verify;
  opts.fuel = inv.fuel;
  opts.constants = inv.constants;
  const CompileReport r = compile_text(inv.input, opts);
  const int code = !inv.verify || r.verified ? kOk : kInternal;
  if (inv.json) {
    doc["usage"] = usage_json(r.usage);
    doc["skeleton"] = to_string(r.skeleton);
    doc["minimal_club"] = club_name(r.minimal_club);
    doc["club_used"] = club_name(r.club_used);
    doc["generators"] = generators_json(r.generator_chain);
    doc["term"] = to_string(r.output);
    doc["verified"] = r.verified;
    if (inv.verify) doc["steps"] = r.steps;
    if (code != kOk) doc["error"] = "InvariantFailure: output does not verify";
    return code;
  }
  line(out, "sequent", to_string(r.input));
  if (!r.constants.empty()) {
    std::string cs;
    for (const std::string& c : r.constants) cs += (cs.empty() ? "" : " ") + c;
    line(out, "constants", cs);
  }
  line(out, "usage", to_string(r.usage));
  line(out, "skeleton", to_string(r.skeleton));
  line(out, "minimal club", std::string(club_name(r.minimal_club)));
  line(out, "club used", std::string(club_name(r.club_used)));
  line(out, "generators", chain_text(r.generator_chain));
  line(out, "term", to_string(r.output));
  if (!inv.verify) {
    line(out, "verified", "skipped");
  } else {
    line(out, "verified",
         (r.verified ? "yes (" : "NO (") + std::to_string(r.steps) + " steps)");
  }
  return code;
}

inline int eval(const Invocation& inv, std::ostream& out, Json& doc) {
  const CombTerm t = parse_comb(inv.input);
  const ReductionResult r = normalize(t, inv.fuel);
  const bool normal = r.status == ReductionStatus::Normal;
  if (inv.json) {
    doc["term"] = to_string(r.term);
    doc["steps"] = r.steps;
    if (!normal) {
      doc["error"] = "FuelExhausted: no normal form within " + std::to_string(inv.fuel) +
                     " steps";
    }
  } else {
    line(out, "term", to_string(r.term));
    line(out, "steps", std::to_string(r.steps));
    line(out, "status", normal ? "normal" : "FuelExhausted");
  }
  return normal ? kOk : kFuelExhausted;
}

inline int factor(const Invocation& inv, std::ostream& out, Json& doc) {
  const FinFun f = parse_finfun(inv.input);
  const Club club = inv.club.value_or(minimal_club(f));
  const std::vector<Generator> chain = clubcomb::factor(f, club);
  if (recompose(chain, f.dom()) != f) {
    throw Error(ErrorKind::InvariantFailure, "generator chain does not recompose");
  }
  if (inv.json) {
    doc["usage"] = usage_json(f);
    doc["minimal_club"] = club_name(minimal_club(f));
    doc["club_used"] = club_name(club);
    doc["generators"] = generators_json(chain);
  } else {
    out << chain_text(chain) << '\n';
  }
  return kOk;
}

inline int diagram(const Invocation& inv, std::ostream& out, Json& doc) {
  const FinFun f = parse_finfun(inv.input);
  if (inv.json) {
    doc["usage"] = usage_json(f);
  } else {
    out << render_diagram(f);
  }
  return kOk;
}

}  // namespace detail

/// Runs one command. Errors go to err in text mode and into the "error" field
/// in JSON mode.
inline int execute(const Invocation& inv, std::ostream& out, std::ostream& err) {
  Json doc;
  doc["command"] = inv.command;
  doc["input"] = inv.input;
  int code = kOk;
  try {
    if (inv.command == "analyze") {
      code = detail::analyze(inv, out, doc);
    } else if (inv.command == "compile") {
      code = detail::compile(inv, out, doc);
    } else if (inv.command == "eval") {
      code = detail::eval(inv, out, doc);
    } else if (inv.command == "factor") {
      code = detail::factor(inv, out, doc);
    } else if (inv.command == "diagram") {
      code = detail::diagram(inv, out, doc);
    } else {
      err << "error: unknown command '" << inv.command << "'\n";
      return kUsage;
    }
  } catch (const Error& e) {
    code = exit_code_for(e.kind());
    if (inv.json) {
      doc["error"] = e.what();
      if (e.minimal_club()) doc["minimal_club"] = club_name(*e.minimal_club());
    } else {
      err << "error: " << e.what() << '\n';
      if (e.minimal_club()) {
        err << "hint: the least club accepting this input is "
            << club_name(*e.minimal_club()) << " (--club "
            << club_short_name(*e.minimal_club()) << ")\n";
      }
    }
  } catch (const std::exception& e) {
    code = kInternal;
    if (inv.json) {
      doc["error"] = std::string("internal: ") + e.what();
    } else {
      err << "internal error: " << e.what() << '\n';
    }
  }
  if (inv.json) out << doc.dump(2) << '\n';
  return code;
}

/// Parses argv-style arguments (without the program name) and executes.
inline int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Club-parameterized combinatory completeness: analyze, compile and "
               "verify polynomials over B, C, K, W, I.",
               "clubcomb"};
  app.require_subcommand(1);

  std::vector<std::string> club_names;
  for (Club c : all_clubs) club_names.push_back(club_short_name(c));

  Invocation inv;
  std::string club_text;
  bool no_verify = false;
  app.add_option("--club", club_text, "Club to compile or factor in")
      ->check(CLI::IsMember(club_names));
  app.add_flag("--no-verify", no_verify, "Skip symbolic verification of compiled terms");
  app.add_option("--fuel", inv.fuel, "Reduction step budget")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_flag("--json", inv.json, "Emit a JSON record instead of text");
  app.add_flag("--constants", inv.constants,
               "Treat undeclared identifiers as constants (compile only)");

  struct Sub {
    const char* name;
    const char* help;
    const char* input_help;
  };
  const Sub subs[] = {
      {"analyze", "Show usage function, skeleton and minimal club of a sequent",
       "sequent, e.g. \"x, y |- x (y x)\""},
      {"compile", "Compile a sequent to a combinator term", "sequent"},
      {"eval", "Normalize a combinator term", "combinator term, e.g. \"B a b c\""},
      {"factor", "Factor a finite function into generators", "finite function m->n:[...]"},
      {"diagram", "Draw a finite function as dots and lines", "finite function m->n:[...]"},
  };
  for (const Sub& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->fallthrough();
    sub->add_option("input", inv.input, s.input_help)->required();
    sub->callback([&inv, name = std::string(s.name)] { inv.command = name; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  inv.verify = !no_verify;
  if (!club_text.empty()) inv.club = club_from_short_name(club_text);
  return execute(inv, out, err);
}

}  // namespace clubcomb::cli
