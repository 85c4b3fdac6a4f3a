#include "madic/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "madic/conjugacy.hpp"
#include "madic/contraction.hpp"
#include "madic/error.hpp"
#include "madic/quotient.hpp"
#include "madic/spinal.hpp"

namespace madic::cli {

namespace {

using nlohmann::json;

constexpr const char* kSchema = "madic/1";
constexpr std::size_t kMaxCensus = 200'000;

GroupSpec load_spec(const std::string& arg) {
  if (arg.rfind("fixture:", 0) == 0) {
    const auto name = arg.substr(8);
    auto data = fixture(name);
    if (!data) throw ParseError("unknown fixture '" + name + "'");
    return *data;
  }
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') return parse_group_spec(std::string_view(arg));
  std::ifstream in(arg);
  if (!in) throw ParseError("cannot read '" + arg + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  return parse_group_spec(std::string_view(text));
}

MultiGGSData load_multi_ggs(const std::string& arg) {
  const auto spec = load_spec(arg);
  if (const auto* d = std::get_if<MultiGGSData>(&spec)) return *d;
  auto recognized = as_multi_ggs(std::get<PolyspinalData>(spec));
  if (const auto* bad = std::get_if<NotMultiGGS>(&recognized)) {
    throw ParseError("'" + arg + "' is not a multi-GGS group: " + bad->reason);
  }
  return std::get<MultiGGSData>(recognized);
}

json matrix_json(const ZmodMatrix& M) {
  json rows = json::array();
  for (const auto& r : M.row_list()) rows.push_back(r);
  return rows;
}

json verdict_json(const Verdict& v) {
  json out;
  out["schema"] = kSchema;
  out["outcome"] = outcome_name(v);
  if (const auto* c = std::get_if<Conjugate>(&v)) {
    out["u"] = c->witness.u.value();
    out["iota"] = matrix_json(c->witness.iota);
    out["kappa"] = to_string(c->witness.kappa);
    out["verified_depth"] = c->witness.verified_depth;
  } else if (const auto* n = std::get_if<NotConjugate>(&v)) {
    out["reason"] = n->reason;
    json cert = json::array();
    for (const auto& f : n->units) {
      cert.push_back({{"u", f.u.value()},
                      {"span_a", matrix_json(f.span_a.as_matrix())},
                      {"span_b", matrix_json(f.span_b.as_matrix())}});
    }
    out["certificate"] = std::move(cert);
  } else if (const auto* r = std::get_if<Refuted>(&v)) {
    out["level"] = r->level ? json(*r->level) : json(nullptr);
    out["detail"] = r->detail;
  } else if (const auto* c = std::get_if<Consistent>(&v)) {
    json table = json::array();
    for (const auto& [k, count] : c->solutions) table.push_back({k, count});
    out["solutions"] = std::move(table);
    out["detail"] = c->detail;
  } else {
    out["reason"] = std::get<Inconclusive>(v).reason;
  }
  return out;
}

std::string census_label(const ZmodMatrix& E) {
  if (E.cols() != 1) return E.to_string();
  std::string out = "(";
  for (std::size_t r = 0; r < E.rows(); ++r) {
    if (r > 0) out += ',';
    out += std::to_string(E(r, 0));
  }
  return out + ")";
}

std::pair<std::size_t, std::size_t> parse_window(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const auto n = std::stoul(text);
      return {n, n};
    }
    return {std::stoul(text.substr(0, dots)), std::stoul(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw ParseError("window must look like 1..4");
  }
}

std::string portrait_line(const Portrait& p) {
  std::string out;
  for (const auto& l : p.labels()) {
    if (!out.empty()) out += ' ';
    out += to_one_line(l);
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Computations with spinal and polyspinal groups acting on the m-adic tree"};
  app.name("madic");
  app.require_subcommand(1);

  // validate
  std::string spec_a, spec_b, word, vertex;
  std::size_t cap = kDefaultDirectedCap;
  bool as_json = false;
  auto* validate_cmd = app.add_subcommand("validate", "Check defining data");
  validate_cmd->add_option("spec", spec_a, "Group spec: file, inline JSON or fixture:name")->required();
  validate_cmd->add_option("--cap", cap, "Bound on directed group orders");
  validate_cmd->add_flag("--json", as_json, "JSON output");

  // portrait
  std::size_t depth = 3;
  std::size_t max_labels = kDefaultMaxPortraitLabels;
  std::string format = "text";
  auto* portrait_cmd = app.add_subcommand("portrait", "Portrait of a word");
  portrait_cmd->add_option("spec", spec_a)->required();
  portrait_cmd->add_option("word", word)->required();
  portrait_cmd->add_option("--depth", depth, "Number of levels");
  portrait_cmd->add_option("--format", format, "text, dot or json")
      ->check(CLI::IsMember({"text", "dot", "json"}));
  portrait_cmd->add_option("--max-labels", max_labels, "Bound on the number of labels");

  // section
  auto* section_cmd = app.add_subcommand("section", "Section of a word at a vertex");
  section_cmd->add_option("spec", spec_a)->required();
  section_cmd->add_option("word", word)->required();
  section_cmd->add_option("vertex", vertex, "Vertex such as 021, or - for the root")->required();

  // reduce
  bool selftest = false;
  std::size_t samples = 200;
  std::size_t reduce_depth = 12;
  std::uint64_t seed = 1;
  auto* reduce_cmd = app.add_subcommand("reduce", "Syllable form of a word, or the reduction selftest");
  reduce_cmd->add_option("spec", spec_a)->required();
  reduce_cmd->add_option("word", word);
  reduce_cmd->add_flag("--selftest", selftest, "Check random words against the nuclear sequence");
  reduce_cmd->add_option("--samples", samples);
  reduce_cmd->add_option("--depth", reduce_depth);
  reduce_cmd->add_option("--seed", seed);

  // wordproblem
  bool trace = false;
  std::size_t max_states = kDefaultWordProblemStates;
  auto* word_cmd = app.add_subcommand("wordproblem", "Decide whether a word is the identity");
  word_cmd->add_option("spec", spec_a)->required();
  word_cmd->add_option("word", word)->required();
  word_cmd->add_flag("--trace", trace, "Print the explored section states");
  word_cmd->add_option("--max-states", max_states);

  // nucleus
  std::size_t nucleus_cap = 50;
  auto* nucleus_cmd = app.add_subcommand("nucleus", "Closure of generators under sections of products");
  nucleus_cmd->add_option("spec", spec_a)->required();
  nucleus_cmd->add_option("--cap", nucleus_cap);

  // invariants
  std::size_t inv_depth = 3;
  std::size_t max_points = kDefaultLevelPoints;
  auto* inv_cmd = app.add_subcommand("invariants", "Level quotient orders, transitivity and orbits");
  inv_cmd->add_option("spec", spec_a)->required();
  inv_cmd->add_option("--depth", inv_depth);
  inv_cmd->add_option("--max-points", max_points);

  // decide-mggs
  std::size_t verify_depth = 6;
  bool no_verify = false;
  auto* decide_cmd = app.add_subcommand("decide-mggs", "Decide conjugacy of two multi-GGS groups");
  decide_cmd->add_option("a", spec_a)->required();
  decide_cmd->add_option("b", spec_b)->required();
  decide_cmd->add_option("--verify-depth", verify_depth);
  decide_cmd->add_flag("--no-verify", no_verify);

  // refute
  std::string mode = "spinal";
  std::string window = "1..4";
  RefuterCaps caps;
  auto* refute_cmd = app.add_subcommand("refute", "Test necessary conditions for conjugacy");
  refute_cmd->add_option("a", spec_a)->required();
  refute_cmd->add_option("b", spec_b)->required();
  refute_cmd->add_option("--mode", mode)->check(CLI::IsMember({"spinal", "multiegs"}));
  refute_cmd->add_option("--window", window, "Levels, e.g. 1..4");
  refute_cmd->add_option("--max-degree", caps.max_degree);
  refute_cmd->add_option("--max-directed", caps.max_directed_order);

  // census
  std::size_t census_m = 3, census_s = 1;
  auto* census_cmd = app.add_subcommand("census", "Conjugacy classes of all multi-GGS groups of a shape");
  census_cmd->add_option("--m", census_m)->required();
  census_cmd->add_option("--s", census_s)->required();
  census_cmd->add_option("--verify-depth", verify_depth);
  census_cmd->add_flag("--no-verify", no_verify);
  census_cmd->add_flag("--json", as_json);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (validate_cmd->parsed()) {
      const auto data = to_polyspinal(load_spec(spec_a));
      const auto report = validate(data, cap);
      if (as_json) {
        json j;
        j["schema"] = kSchema;
        j["status"] = report.valid() ? "valid"
                      : report.status == Validity::Invalid ? "invalid"
                                                           : "inconclusive";
        j["summary"] = report.summary();
        j["problems"] = report.problems;
        j["warnings"] = report.warnings;
        json data_json = json::array();
        for (const auto& d : report.data) {
          data_json.push_back({{"path", d.path},
                               {"order", d.order ? json(*d.order) : json(nullptr)},
                               {"transitive", d.transitive},
                               {"faithful", d.faithful}});
        }
        j["directed"] = std::move(data_json);
        out << j.dump(2) << '\n';
      } else {
        out << report.summary() << '\n';
        for (const auto& w : report.warnings) err << "warning: " << w << '\n';
      }
      return report.valid() ? 0 : 2;
    }

    if (validate_cmd->parsed() || portrait_cmd->parsed() || section_cmd->parsed() ||
        reduce_cmd->parsed() || word_cmd->parsed()) {
      const auto group = SpinalGroup::create(to_polyspinal(load_spec(spec_a)), cap);

      if (portrait_cmd->parsed()) {
        const auto p = portrait(group->parse_word(word), depth, max_labels);
        if (format == "dot") {
          out << to_dot(p);
        } else if (format == "json") {
          json j;
          j["schema"] = kSchema;
          j["m"] = p.degree();
          j["depth"] = p.depth();
          json labels = json::array();
          for (const auto& l : p.labels()) labels.push_back(to_one_line(l));
          j["labels"] = std::move(labels);
          out << j.dump(2) << '\n';
        } else {
          out << to_text(p);
        }
        return 0;
      }

      if (section_cmd->parsed()) {
        const Element g = group->parse_word(word);
        const Vertex v = parse_vertex(vertex, group->degree());
        const Element s = to_element(to_syllable_form(section(g, v)));
        out << "section " << group->format(s) << '\n';
        out << "label " << to_cycles(label(g, v)) << '\n';
        out << "image " << (v.empty() ? std::string("-") : to_string(apply(g, v), group->degree()))
            << '\n';
        return 0;
      }

      if (reduce_cmd->parsed()) {
        if (selftest) {
          const auto report = reducing_selftest(group->data(), samples, reduce_depth, seed);
          out << "selftest " << report.passed << "/" << report.samples << " passed, deepest level "
              << report.deepest << '\n';
          for (const auto& f : report.failures) out << "counterexample: " << f << '\n';
          return report.passed == report.samples ? 0 : 1;
        }
        if (word.empty()) throw ParseError("reduce needs a word or --selftest");
        const auto f = to_syllable_form(group->parse_word(word));
        out << "syllables " << f.length() << ": " << to_string(f) << '\n';
        std::size_t worst = 0;
        const std::size_t m = group->degree();
        for (std::size_t r = 0; r < m * m; ++r) {
          worst = std::max(worst, syllable_sections(f, vertex_from_rank(r, 2, m)).length());
        }
        out << "longest depth-2 section: " << worst << " syllables\n";
        return 0;
      }

      if (word_cmd->parsed()) {
        const auto result = solve_word_problem(group->parse_word(word), max_states, trace);
        out << to_string(result.truth) << '\n';
        if (trace) {
          for (const auto& line : result.trace) out << "  " << line << '\n';
          out << "  " << result.states << " states, deepest level " << result.depth << '\n';
        }
        return result.truth == Truth::Inconclusive ? 2 : 0;
      }
    }

    if (nucleus_cmd->parsed()) {
      const auto data = to_polyspinal(load_spec(spec_a));
      const auto group = SpinalGroup::create(data);
      const auto result = nucleus(data, nucleus_cap);
      out << (result.exceeded ? "exceeds cap " + std::to_string(nucleus_cap) + " after "
                              : std::string("nucleus of "))
          << result.elements.size() << " elements\n";
      for (const auto& e : result.elements) {
        // Elements come from a fresh group; reprint through this one.
        const auto name = group->format(e);
        out << name << "  " << portrait_line(portrait(e, 3)) << '\n';
      }
      if (result.inconclusive) err << "warning: some equality tests were inconclusive\n";
      return result.exceeded ? 2 : 0;
    }

    if (inv_cmd->parsed()) {
      const auto data = to_polyspinal(load_spec(spec_a));
      json j;
      j["schema"] = kSchema;
      j["m"] = data.m;
      json levels = json::array();
      for (std::size_t n = 1; n <= inv_depth; ++n) {
        levels.push_back({{"n", n},
                          {"order", group_order_level(data, n, max_points).str()},
                          {"transitive", spherically_transitive(data, n, max_points)},
                          {"orbits", orbits_level(data, n, max_points)}});
      }
      j["levels"] = std::move(levels);
      out << j.dump(2) << '\n';
      return 0;
    }

    if (decide_cmd->parsed()) {
      const auto v = decide_multi_ggs(load_multi_ggs(spec_a), load_multi_ggs(spec_b),
                                      no_verify ? 0 : verify_depth);
      out << verdict_json(v).dump(2) << '\n';
      return exit_code(v);
    }

    if (refute_cmd->parsed()) {
      const auto a = to_polyspinal(load_spec(spec_a));
      const auto b = to_polyspinal(load_spec(spec_b));
      const auto [lo, hi] = parse_window(window);
      const Verdict v = mode == "spinal" ? refute_spinal_necessary(a, b, lo, hi, caps)
                                         : refute_multi_egs_necessary(a, b);
      out << verdict_json(v).dump(2) << '\n';
      return exit_code(v);
    }

    if (census_cmd->parsed()) {
      if (census_m < 2 || census_m > kMaxDeciderDegree || census_s == 0) {
        throw ParseError("census needs 2 <= m <= 64 and s >= 1");
      }
      const std::size_t entries = (census_m - 1) * census_s;
      std::size_t total = 1;
      for (std::size_t i = 0; i < entries; ++i) {
        total *= census_m;
        if (total > kMaxCensus) throw CapExceeded("census over more than 200000 matrices");
      }
      std::vector<ZmodMatrix> valid;
      for (std::size_t k = 0; k < total; ++k) {
        ZmodMatrix E(census_m, census_m - 1, census_s);
        std::size_t rest = k;
        // First column, first row varies fastest.
        for (std::size_t c = 0; c < census_s; ++c) {
          for (std::size_t r = 0; r + 1 < census_m; ++r) {
            E.set(r, c, static_cast<Residue>(rest % census_m));
            rest /= census_m;
          }
        }
        if (multi_ggs_problems(E).empty()) valid.push_back(std::move(E));
      }
      std::vector<std::vector<std::size_t>> classes;
      for (std::size_t i = 0; i < valid.size(); ++i) {
        bool placed = false;
        for (auto& c : classes) {
          const auto v = decide_multi_ggs(MultiGGSData{valid[c.front()]}, MultiGGSData{valid[i]},
                                          no_verify ? 0 : verify_depth);
          if (std::holds_alternative<Inconclusive>(v)) {
            throw Error("census: " + std::get<Inconclusive>(v).reason);
          }
          if (std::holds_alternative<Conjugate>(v)) {
            c.push_back(i);
            placed = true;
            break;
          }
        }
        if (!placed) classes.push_back({i});
      }
      if (as_json) {
        json j;
        j["schema"] = kSchema;
        j["m"] = census_m;
        j["s"] = census_s;
        j["valid"] = valid.size();
        json cls = json::array();
        for (const auto& c : classes) {
          json members = json::array();
          for (std::size_t i : c) members.push_back(matrix_json(valid[i]));
          cls.push_back(std::move(members));
        }
        j["classes"] = std::move(cls);
        out << j.dump(2) << '\n';
      } else {
        out << "m=" << census_m << " s=" << census_s << ": " << valid.size()
            << " valid matrices, " << classes.size() << " classes\n";
        for (std::size_t k = 0; k < classes.size(); ++k) {
          out << "class " << k + 1 << " (" << classes[k].size() << "):";
          for (std::size_t i : classes[k]) out << ' ' << census_label(valid[i]);
          out << '\n';
        }
      }
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace madic::cli
