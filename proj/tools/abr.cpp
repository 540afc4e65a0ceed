// abr: generate point sequences, color them, check structure and search
// for long monochromatic subsets.
//
// Exit codes: 0 success, 2 usage or malformed input, 3 generation failure,
// 4 degenerate input, 5 violated check, 6 search budget exhausted.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "abr/ab_coloring.hpp"
#include "abr/combinatorics.hpp"
#include "abr/constructions.hpp"
#include "abr/error.hpp"
#include "abr/io.hpp"
#include "abr/ordered_colorings.hpp"
#include "abr/random.hpp"
#include "abr/validate.hpp"

namespace {

using namespace abr;

enum Exit : int {
  kOk = 0,
  kUsage = 2,
  kGeneration = 3,
  kDegenerate = 4,
  kViolation = 5,
  kBudget = 6,
};

std::string format_tuple(const std::vector<int>& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) out += (i ? "," : "") + std::to_string(t[i]);
  return out + ")";
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvariantError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Primary output goes to --out when given, else to stdout. Reports go to
// stdout when the primary output is a file and to stderr otherwise, so
// stdout stays machine-readable.
struct Output {
  std::string path;

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvariantError("cannot write " + path);
    out << text;
  }
  std::ostream& report() const { return path.empty() ? std::cerr : std::cout; }
};

bool looks_like_sequence(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  return first != std::string::npos && text[first] == '{' &&
         text.find("\"kind\"") != std::string::npos;
}

// Resolves a sequence input to a lifted sequence. Planar inputs are lifted
// to the moment curve in dimension d.
LiftedSequence lifted_input(const AnySequence& s, int d) {
  if (const auto* lifted = std::get_if<LiftedSequence>(&s)) return *lifted;
  if (d < 2) throw InvariantError("planar input needs --d >= 2");
  return moment_lift(std::get<PlanarSequence>(s), d);
}

ColoringTable table_of_sequence(const AnySequence& s, int d) {
  if (const auto* planar = std::get_if<PlanarSequence>(&s)) {
    if (d < 2) throw InvariantError("planar input needs --d >= 2");
    return divided_difference_table(*planar, d);
  }
  return color_table(std::get<LiftedSequence>(s));
}

ColoringTable table_input(const std::string& path, int d) {
  const std::string text = read_input(path);
  if (looks_like_sequence(text)) return table_of_sequence(parse_sequence(text), d);
  return parse_table(text);
}

std::string validation_summary(const ValidationReport& r) {
  std::string out(to_string(r.status));
  if (!r.failures.empty())
    out += " (" + std::string(to_string(r.failures.front().reason)) + " at " +
           format_tuple(r.failures.front().witness) + ")";
  return out;
}

// ---- generate ---------------------------------------------------------------

struct GenerateArgs {
  int n = 0;
  int d = 3;
  int m = 3;
  int k = 4;
  int l = 0;
  std::uint64_t seed = 0;
  int bits = 16;
  int off_curve_bits = 0;
  bool planar = false;
  std::string heights = "power";
  std::string base_start = "2";
  std::uint64_t budget = 0;
  Output out;
};

int emit_planar(const PlanarSequence& p, int d, const GenerateArgs& a) {
  a.out.write(serialize_sequence(p));
  std::string status = "n/a";
  if (static_cast<int>(p.size()) >= d + 1) status = validation_summary(validate_d_general_position(p, d));
  a.out.report() << "n: " << p.size() << "\nkind: planar\nd: " << d << "\nvalidation: " << status
                 << "\n";
  return kOk;
}

int emit_lifted(const LiftedSequence& s, const GenerateArgs& a) {
  a.out.write(serialize_sequence(s));
  const int d = s.dimension();
  std::string cyclic = "n/a", general = "n/a";
  if (static_cast<int>(s.size()) >= d) cyclic = validation_summary(validate_cyclic_projections(s));
  if (static_cast<int>(s.size()) >= d + 1) general = validation_summary(validate_general_position(s));
  a.out.report() << "n: " << s.size() << "\nkind: lifted\nd: " << d
                 << "\ncyclic projections: " << cyclic << "\ngeneral position: " << general << "\n";
  return kOk;
}

int generate_moment(const GenerateArgs& a) {
  if (a.n < 1) throw InvariantError("--n must be at least 1");
  Rng rng(a.seed);
  std::vector<PlanarPoint> pts;
  for (int i = 0; i < a.n; ++i) {
    const Rational t = i;
    Rational h;
    if (a.heights == "zero") {
      h = 0;
    } else if (a.heights == "cubic") {
      h = t * t * t;
    } else if (a.heights == "power") {
      h = 1;
      for (int e = 0; e < a.d; ++e) h *= t;
    } else {
      h = rng.rational(a.bits);
    }
    pts.push_back({t, h});
  }
  return emit_lifted(moment_lift(PlanarSequence(std::move(pts)), a.d), a);
}

int generate_random(const GenerateArgs& a) {
  if (a.planar) {
    if (a.n < 1) throw InvariantError("--n must be at least 1");
    return emit_planar(random_planar(a.n, a.seed, a.bits), a.d, a);
  }
  RandomInstanceOptions options;
  options.bits = a.bits;
  options.off_curve_bits = a.off_curve_bits;
  return emit_lifted(random_cyclic_instance(a.d, a.n, a.seed, options), a);
}

int generate_em(const GenerateArgs& a) {
  EmSearchOptions options;
  options.base_start = Integer(a.base_start);
  options.budget = a.budget;
  const EmConstruction c = em_construction(a.m, options);
  a.out.write(serialize_sequence(c.points));
  a.out.report() << "n: " << c.points.size() << "\nkind: planar\nm: " << a.m
                 << "\nbase: " << c.params.base.get_str() << "\n";
  for (std::size_t i = 0; i < c.params.levels.size(); ++i) {
    const auto& l = c.params.levels[i];
    a.out.report() << "level " << i + 2 << ": epsilon " << to_string(l.epsilon) << ", delta "
                   << to_string(l.delta) << ", steepness " << to_string(l.steepness)
                   << ", bend " << l.bend << "\n";
  }
  return kOk;
}

int generate_cupcap(const GenerateArgs& a) {
  const PlanarSequence p = cupcap_set(a.k, a.l ? a.l : a.k);
  return emit_planar(p, 2, a);
}

// ---- color ------------------------------------------------------------------

struct ColorArgs {
  std::string input;
  int d = 0;
  bool reverse = false;
  bool cross_check = false;
  std::string format = "csv";
  Output out;
};

int run_color(const ColorArgs& a) {
  LiftedSequence s = lifted_input(parse_sequence(read_input(a.input)), a.d);
  const int d = s.dimension();
  if (static_cast<int>(s.size()) < d + 1) throw TooFewPoints("need at least d+1 points to color");

  const ValidationReport cyclic = validate_cyclic_projections(s);
  if (!cyclic.valid()) {
    const auto& f = cyclic.failures.front();
    if (f.reason == FailureReason::WrongOrientation && a.reverse) {
      s = s.reversed();
      a.out.report() << "orientation: reversed (table indexes the reversed sequence)\n";
    } else if (f.reason == FailureReason::WrongOrientation) {
      throw WrongOrientation("projections have reversed cyclic orientation; rerun with --reverse-orientation",
                             f.witness);
    } else {
      throw DegenerateError("projections are not cyclic: " + std::string(to_string(f.reason)),
                            f.witness);
    }
  }

  const ColoringTable table = color_table(s);
  a.out.write(a.format == "json" ? table_to_json(table) : table_to_csv(table));
  a.out.report() << "tuples: " << table.size() << "\n";
  if (!a.cross_check) return kOk;

  std::uint64_t mismatches = 0, crossing_checked = 0;
  std::vector<int> first_mismatch;
  for_each_combination(static_cast<int>(s.size()), d + 1, [&](std::span<const int> t) {
    const auto pts = s.select(t);
    const Color expected = table.color(t);
    bool agree = true;
    try {
      agree = color_by_heights(pts).color == expected;
      if (d == 3) {
        agree = agree && color_by_crossing(pts) == expected;
        ++crossing_checked;
      }
    } catch (const DegenerateError&) {
      agree = false;
    }
    if (!agree) {
      if (first_mismatch.empty()) first_mismatch.assign(t.begin(), t.end());
      ++mismatches;
    }
  });
  a.out.report() << "cross-check: heights" << (d == 3 ? " and crossing" : "") << "\n"
                 << "mismatches: " << mismatches << "\n";
  if (mismatches) {
    std::cerr << "first mismatch at " << format_tuple(first_mismatch) << "\n";
    return kViolation;
  }
  return kOk;
}

// ---- check ------------------------------------------------------------------

struct CheckArgs {
  std::string input;
  int d = 0;
  int m = 0;
  std::uint64_t budget = 0;
};

int check_recognizer(const CheckArgs& a, bool monotone) {
  const ColoringTable table = table_input(a.input, a.d);
  const RecognizerResult r = monotone ? is_monotone(table) : is_transitive(table);
  const char* name = monotone ? "monotone" : "transitive";
  if (r.holds) {
    std::cout << name << ": pass (n " << table.n() << ", r " << table.r() << ")\n";
    return kOk;
  }
  std::cout << name << ": FAIL at " << format_tuple(*r.witness) << "\n";
  return kViolation;
}

int check_one_switch(const CheckArgs& a) {
  const LiftedSequence s = lifted_input(parse_sequence(read_input(a.input)), a.d);
  const int d = s.dimension();
  const int n = static_cast<int>(s.size());
  if (n < d + 2) throw TooFewPoints("one-switch check needs at least d+2 points");
  std::uint64_t checked = 0;
  int max_switches = 0;
  for (std::vector<int> t = first_combination(d + 2);; ) {
    const OneSwitchCertificate c = one_switch_certificate(s.select(t));
    ++checked;
    if (c.status == CertificateStatus::Degenerate) {
      std::cout << "one-switch: degenerate at " << format_tuple(t) << ": " << c.failure << "\n";
      return kDegenerate;
    }
    if (!c.verified()) {
      std::cout << "one-switch: FAIL at " << format_tuple(t) << ": " << c.failure << "\n";
      return kViolation;
    }
    max_switches = std::max(max_switches, c.switch_count);
    if (!next_combination(t, n)) break;
  }
  std::cout << "one-switch: pass (" << checked << " tuples, max switches " << max_switches << ")\n";
  return kOk;
}

int check_identities(const CheckArgs& a) {
  const AnySequence seq = parse_sequence(read_input(a.input));
  std::uint64_t checked = 0;
  if (const auto* p = std::get_if<PlanarSequence>(&seq)) {
    const int d = a.d >= 1 ? a.d : 2;
    const int n = static_cast<int>(p->size());
    if (n < d + 1) throw TooFewPoints("identity check needs at least d+1 points");
    for (std::vector<int> t = first_combination(d + 1);; ) {
      const auto pts = p->select(t);
      divided_difference(pts);
      const Rational residual = vandermonde_divdiff_residual(pts);
      ++checked;
      if (residual != 0) {
        std::cout << "identities: FAIL at " << format_tuple(t) << ": Vandermonde residual "
                  << to_string(residual) << "\n";
        return kViolation;
      }
      if (!next_combination(t, n)) break;
    }
    std::cout << "identities: pass (" << checked << " tuples, divided differences and Vandermonde, d "
              << d << ")\n";
    return kOk;
  }

  const auto& s = std::get<LiftedSequence>(seq);
  const int d = s.dimension();
  const int n = static_cast<int>(s.size());
  if (n < d + 2) throw TooFewPoints("identity check needs at least d+2 points");
  for (std::vector<int> t = first_combination(d + 2);; ) {
    const auto pts = s.select(t);
    const Matrix affine = affine_matrix(pts);
    const auto kernel = signed_minor_kernel(affine);
    for (const auto& v : affine * kernel)
      if (v != 0) {
        std::cout << "identities: FAIL at " << format_tuple(t) << ": kernel vector\n";
        return kViolation;
      }
    const MinorTable delta = complementary_minors(projection_matrix(pts));
    for (std::vector<int> q = first_combination(4);; ) {
      const Rational residual = plucker_residual(delta, q[0], q[1], q[2], q[3]);
      if (residual != 0) {
        std::cout << "identities: FAIL at " << format_tuple(t) << ": Plucker residual "
                  << to_string(residual) << "\n";
        return kViolation;
      }
      if (!next_combination(q, d + 2)) break;
    }
    ++checked;
    if (!next_combination(t, n)) break;
  }
  std::cout << "identities: pass (" << checked << " tuples, kernel and Plucker)\n";
  return kOk;
}

int check_em(const CheckArgs& a) {
  const AnySequence seq = parse_sequence(read_input(a.input));
  const auto* p = std::get_if<PlanarSequence>(&seq);
  if (!p) throw InvariantError("em check needs a planar sequence");
  int m = a.m;
  if (m < 1) {
    // Infer m from n = 2^(2^(m-1)).
    for (int cand = 1; cand <= 6 && m < 1; ++cand)
      if (p->size() == (std::size_t{1} << (std::size_t{1} << (cand - 1)))) m = cand;
    if (m < 1) throw InvariantError("size is not 2^(2^(m-1)); pass --m");
  }
  const EmReport r = em_verify(*p, m, a.budget);
  std::cout << em_report_to_json(r);
  if (!r.exhaustive) return kBudget;
  return r.holds ? kOk : kViolation;
}

// ---- search -----------------------------------------------------------------

struct SearchArgs {
  std::string input;
  int d = 0;
  int k = 0;
  std::uint64_t budget = 0;
  bool best_effort = false;
  Output out;
};

int run_search(const SearchArgs& a) {
  const ColoringTable table = table_input(a.input, a.d);
  SearchOptions options;
  options.budget = a.budget;
  options.target = a.k;
  const SearchResult r = longest_monochromatic(table, options);
  a.out.write(search_result_to_json(r));
  if (!r.exhaustive && !a.best_effort) {
    std::cerr << "search budget of " << a.budget << " nodes exhausted; best size " << r.size << "\n";
    return kBudget;
  }
  return kOk;
}

// ---- ramsey -----------------------------------------------------------------

struct RamseyArgs {
  int r = 2;
  int k = 3;
  int n_max = 10;
  std::string cls = "monotone";
  std::uint64_t max_tuples = 64;
};

int run_ramsey(const RamseyArgs& a) {
  RamseyOptions options;
  options.max_tuples = a.max_tuples;
  const RamseyResult res = ramsey_search_tiny(
      a.r, a.k, a.n_max, a.cls == "transitive" ? ColoringClass::Transitive : ColoringClass::Monotone,
      options);
  for (const auto& [n, avoids] : res.avoiders)
    std::cout << "n " << n << ": " << (avoids ? "avoiding coloring exists" : "forced") << "\n";
  std::cout << "result: " << (res.n ? std::to_string(*res.n) : std::string("unknown")) << "\n";
  return kOk;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"Above-below colorings, ordered colorings and their constructions"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write a point sequence as JSON");
  generate->require_subcommand(1);
  auto add_out = [](CLI::App* c, Output& out) {
    c->add_option("-o,--out", out.path, "Output file (default: stdout)");
  };

  auto* g_moment = generate->add_subcommand("moment", "Points t = 0..n-1 on the moment curve");
  g_moment->add_option("--n", gen.n, "Number of points")->required();
  g_moment->add_option("--d", gen.d, "Dimension")->check(CLI::Range(2, 64));
  g_moment->add_option("--heights", gen.heights, "zero | cubic | power (t^d) | random")
      ->check(CLI::IsMember({"zero", "cubic", "power", "random"}));
  g_moment->add_option("--seed", gen.seed, "Seed for random heights");
  g_moment->add_option("--bits", gen.bits, "Bit width of random heights")->check(CLI::Range(1, 62));
  add_out(g_moment, gen.out);

  auto* g_random = generate->add_subcommand("random", "Random cyclic instance");
  g_random->add_option("--n", gen.n, "Number of points")->required();
  g_random->add_option("--d", gen.d, "Dimension")->check(CLI::Range(2, 64));
  g_random->add_option("--seed", gen.seed, "Seed");
  g_random->add_option("--bits", gen.bits, "Bit width of random rationals")->check(CLI::Range(1, 62));
  g_random->add_option("--off-curve-bits", gen.off_curve_bits,
                       "Perturb projections off the moment curve by 2^-bits")
      ->check(CLI::Range(0, 62));
  g_random->add_flag("--planar", gen.planar, "Random planar sequence (no validation re-draws)");
  add_out(g_random, gen.out);

  auto* g_em = generate->add_subcommand("em", "Doubly exponential construction of depth m");
  g_em->add_option("--m", gen.m, "Depth")->required()->check(CLI::Range(1, 4));
  g_em->add_option("--base-start", gen.base_start, "First base tried");
  g_em->add_option("--budget", gen.budget, "Search node budget per verification");
  add_out(g_em, gen.out);

  auto* g_cupcap = generate->add_subcommand("cupcap", "Set with no k-cup and no l-cap");
  g_cupcap->add_option("--k", gen.k, "Cup size")->required()->check(CLI::Range(3, 12));
  g_cupcap->add_option("--l", gen.l, "Cap size (default k)")->check(CLI::Range(3, 12));
  add_out(g_cupcap, gen.out);

  ColorArgs col;
  auto* color = app.add_subcommand("color", "Above-below color table of a sequence");
  color->add_option("input", col.input, "Sequence file, or - for stdin")->required();
  color->add_option("--d", col.d, "Lift dimension for planar input")->check(CLI::Range(2, 64));
  color->add_flag("--reverse-orientation", col.reverse, "Reverse a sequence with negative orientation");
  color->add_flag("--cross-check", col.cross_check, "Recompute every tuple through heights and crossings");
  color->add_option("--format", col.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  add_out(color, col.out);

  CheckArgs chk;
  auto* check = app.add_subcommand("check", "Structure and identity checks");
  check->require_subcommand(1);
  std::vector<std::pair<std::string, CLI::App*>> checks;
  const std::pair<const char*, const char*> check_kinds[] = {
      {"monotone", "Colors of each (r+1)-set switch at most once"},
      {"transitive", "Agreeing consecutive r-sets force a monochromatic (r+1)-set"},
      {"one-switch", "One-switch certificate on every (d+2)-subtuple"},
      {"identities", "Kernel, Plucker and divided-difference identities"},
      {"em", "Longest third-order monotone subsequence against 2m"},
  };
  for (const auto& [what, about] : check_kinds) {
    auto* c = check->add_subcommand(what, about);
    c->add_option("input", chk.input, "Input file, or - for stdin")->required();
    c->add_option("--d", chk.d, "Dimension for planar input");
    checks.emplace_back(what, c);
  }
  checks.back().second->add_option("--m", chk.m, "Depth (default inferred from size)");
  checks.back().second->add_option("--budget", chk.budget, "Search node budget");

  SearchArgs srch;
  auto* search = app.add_subcommand("search", "Longest monochromatic subset of a table");
  search->add_option("input", srch.input, "Table or sequence file, or - for stdin")->required();
  search->add_option("--d", srch.d, "Dimension for planar input");
  search->add_option("--k", srch.k, "Stop once a monochromatic k-set is found");
  search->add_option("--budget", srch.budget, "Node budget (0 = unlimited)");
  search->add_flag("--best-effort", srch.best_effort, "Exit 0 with the best set when the budget runs out");
  add_out(search, srch.out);

  RamseyArgs ram;
  auto* ramsey = app.add_subcommand("ramsey", "Tiny ordered Ramsey numbers by exhaustive search");
  ramsey->add_option("--r", ram.r, "Uniformity")->check(CLI::Range(2, 8));
  ramsey->add_option("--k", ram.k, "Monochromatic set size")->check(CLI::Range(2, 16));
  ramsey->add_option("--n-max", ram.n_max, "Largest n tried")->check(CLI::Range(2, 64));
  ramsey->add_option("--class", ram.cls, "monotone | transitive")
      ->check(CLI::IsMember({"monotone", "transitive"}));
  ramsey->add_option("--max-tuples", ram.max_tuples, "Refuse n with more tuples than this");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (*g_moment) return generate_moment(gen);
  if (*g_random) return generate_random(gen);
  if (*g_em) return generate_em(gen);
  if (*g_cupcap) return generate_cupcap(gen);
  if (*color) return run_color(col);
  if (*search) return run_search(srch);
  if (*ramsey) return run_ramsey(ram);
  for (const auto& [what, c] : checks) {
    if (!*c) continue;
    if (what == "monotone") return check_recognizer(chk, true);
    if (what == "transitive") return check_recognizer(chk, false);
    if (what == "one-switch") return check_one_switch(chk);
    if (what == "identities") return check_identities(chk);
    return check_em(chk);
  }
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const abr::WrongOrientation& e) {
    std::cerr << "error: " << e.what() << "\nwitness: " << format_tuple(e.witness()) << "\n";
    return kDegenerate;
  } catch (const abr::DegenerateError& e) {
    std::cerr << "error: " << e.what() << "\nwitness: " << format_tuple(e.witness()) << "\n";
    return kDegenerate;
  } catch (const abr::ParameterSearchFailed& e) {
    std::cerr << "error: " << e.what() << "\nlast witness: " << format_tuple(e.witness()) << "\n";
    return kGeneration;
  } catch (const abr::GenerationFailed& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kGeneration;
  } catch (const abr::IdentityViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kViolation;
  } catch (const abr::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
