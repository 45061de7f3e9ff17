// markov-words: command-line front end for the slope-indexed word, sequence,
// tree and matrix constructions.
//
// Exit codes: 0 success, 1 usage error, 2 verification failure,
// 3 resource limit.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "markov/cohnwords.hpp"
#include "markov/fenceposet.hpp"
#include "markov/lattice.hpp"
#include "markov/matrix2.hpp"
#include "markov/serialize.hpp"
#include "markov/signseq.hpp"
#include "markov/svg.hpp"
#include "markov/verify.hpp"
#include "markov/words.hpp"

namespace {

using namespace markov;

constexpr int kExitUsage = 1;
constexpr int kExitVerify = 2;
constexpr int kExitResource = 3;

struct CliConfig {
  std::string t;
  std::string k = "0,0,0";
  std::string sigma = "1,2,3";
  bool completed = false;
  unsigned depth = 3;
  std::string format;  // empty: per-command default
  std::string out;

  ExtRational slope() const {
    if (t.empty()) throw Error(ErrorKind::Parse, "--t is required");
    return ExtRational::parse(t);
  }
  GMParams params() const {
    const auto kk = GMParams::parse_k(k);
    return GMParams(kk[0], kk[1], kk[2], Permutation::parse(sigma));
  }
  bool json() const { return format == "json"; }
};

unsigned max_depth_from_env() {
  if (const char* env = std::getenv("MARKOV_WORDS_MAX_DEPTH")) {
    try {
      return static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, std::string("bad MARKOV_WORDS_MAX_DEPTH '") + env + "'");
    }
  }
  return kDefaultMaxFareyDepth;
}

void emit(const CliConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw Error(ErrorKind::Resource, "cannot open output file " + cfg.out);
  f << text;
  if (text.empty() || text.back() != '\n') f << '\n';
}

void emit_json(const CliConfig& cfg, const Json& j) { emit(cfg, j.dump()); }

void add_common(CLI::App* cmd, CliConfig& cfg, bool with_params) {
  cmd->add_option("--t", cfg.t, "slope p/q");
  if (with_params) {
    cmd->add_option("--k", cfg.k, "coefficients k1,k2,k3")->capture_default_str();
    cmd->add_option("--sigma", cfg.sigma, "permutation images s1,s2,s3")->capture_default_str();
  }
  cmd->add_option("--format", cfg.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", cfg.out, "write output to this file");
}

int cmd_word(const CliConfig& cfg) {
  const ExtRational t = cfg.slope();
  FreeWord w;
  if (cfg.completed) {
    require_interior(t, "word --completed");
    w = omega_completed(t, CompletionMode::Geometric);
  } else {
    w = omega_geometric(t);
  }
  if (cfg.json()) {
    emit_json(cfg, Json{{"t", t.str()}, {"completed", cfg.completed}, {"word", w.str()}});
  } else {
    emit(cfg, w.str());
  }
  return 0;
}

int cmd_events(const CliConfig& cfg) {
  emit_json(cfg, to_json(crossing_events({cfg.slope(), cfg.completed})));
  return 0;
}

int cmd_matrix(const CliConfig& cfg, const std::string& which, const std::string& route) {
  const ExtRational t = cfg.slope();
  const GMParams params = cfg.params();
  Mat2 m;
  if (which == "monodromy") {
    m = monodromy(t, params);
  } else if (which == "completed") {
    m = completed_matrix(t, params);
  } else if (route == "explicit") {
    m = gc_explicit(t, params);
  } else if (route == "sequence") {
    m = gc_from_sequence(t, params);
  } else if (route == "completed") {
    m = gc_from_completed(t, params);
  } else {
    m = gc_recursive(t, params);
  }
  if (cfg.format == "text") {
    emit(cfg, m.str());
  } else {
    emit_json(cfg, to_json(m));
  }
  return 0;
}

int cmd_sequence(const CliConfig& cfg) {
  const ExtRational t = cfg.slope();
  const GMParams params = cfg.params();
  const RunLengthSequence s = cfg.completed ? strongly_admissible(t, params) : gm_sequence(t, params);
  if (cfg.json()) {
    emit_json(cfg, to_json(s));
  } else {
    emit(cfg, s.str());
  }
  return 0;
}

int cmd_cohnword(const CliConfig& cfg, const std::string& method) {
  const ExtRational t = cfg.slope();
  CohnWord c;
  if (method == "tree") {
    c = cohn_tree(t);
  } else if (method == "omega") {
    c = cohn_from_omega(omega_geometric(t), t);
  } else {
    c = christoffel(t);
  }
  if (cfg.json()) {
    emit_json(cfg, Json{{"t", t.str()}, {"cohn", c.letters}});
  } else {
    emit(cfg, c.letters);
  }
  return 0;
}

std::string triple_text(const LabeledTriple& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < 3; ++i) {
    if (i) s += ",";
    s += "(" + v.entries[i].m.get_str() + "," + std::to_string(v.entries[i].label) + ")";
  }
  return s + ")";
}

int cmd_gmtree(const CliConfig& cfg) {
  const GMParams params = cfg.params();
  if (!cfg.t.empty()) {
    const ExtRational t = cfg.slope();
    const LabeledTriple v = gm_vertex(t, params);
    const mpz_class u = characteristic(t, params);
    const long k = k_of(t, params);
    if (cfg.json()) {
      emit_json(cfg, Json{{"t", t.str()}, {"vertex", to_json(v)}, {"m", v.mid().m.get_str()},
                          {"label", v.mid().label}, {"u", u.get_str()}, {"k", k}});
    } else {
      emit(cfg, triple_text(v) + " m=" + v.mid().m.get_str() + " i=" +
                    std::to_string(v.mid().label) + " u=" + u.get_str() + " k=" + std::to_string(k));
    }
    return 0;
  }
  const unsigned limit = max_depth_from_env();
  const auto farey = farey_enumerate(cfg.depth, limit);
  const auto tree = gm_enumerate(cfg.depth, params, limit);
  if (cfg.json()) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < tree.size(); ++i) {
      arr.push_back(Json{{"t", farey[i].mid.str()}, {"vertex", to_json(tree[i])}});
    }
    emit_json(cfg, arr);
  } else {
    std::ostringstream os;
    for (std::size_t i = 0; i < tree.size(); ++i) {
      os << farey[i].mid.str() << "\t" << triple_text(tree[i]) << "\n";
    }
    emit(cfg, os.str());
  }
  return 0;
}

std::vector<long> parse_sequence(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string field;
  while (std::getline(ss, field, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(field, &used);
      if (used != field.size()) throw std::invalid_argument(field);
      out.push_back(v);
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, "cannot parse sequence '" + text + "'");
    }
  }
  return out;
}

int cmd_ideals(const CliConfig& cfg, const std::string& seq_text, bool enumerate) {
  const std::vector<long> seq = seq_text.empty() ? std::vector<long>{} : parse_sequence(seq_text);
  const FencePoset poset = fence_from_sequence(seq);
  const mpz_class n = count_ideals(poset);
  if (enumerate) {
    const auto ideals = enumerate_ideals(poset);
    if (ideals.size() != n.get_ui()) {
      throw Error(ErrorKind::Consistency, "brute-force enumeration found " +
                                              std::to_string(ideals.size()) + " ideals, DP found " +
                                              n.get_str());
    }
  }
  if (cfg.json()) {
    const auto [num, den] = cf_numden(seq);
    emit_json(cfg, Json{{"poset", to_json(poset)}, {"ideals", n.get_str()},
                        {"cf_num", num.get_str()}, {"cf_den", den.get_str()}});
  } else {
    emit(cfg, n.get_str());
  }
  return 0;
}

Json report_json(const VerifyReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json j{{"name", c.name}, {"passed", c.passed}};
    if (c.conjecture) j["conjecture"] = true;
    if (!c.detail.empty()) j["detail"] = c.detail;
    checks.push_back(std::move(j));
  }
  return Json{{"t", r.t.str()}, {"params", r.params.str()},
              {"status", r.passed() ? "PASS" : "FAIL"}, {"checks", std::move(checks)}};
}

int cmd_verify(const CliConfig& cfg, unsigned max_sum) {
  const GMParams params = cfg.params();
  std::vector<ExtRational> slopes;
  if (max_sum > 0) {
    slopes = slopes_up_to(max_sum);
  } else {
    slopes.push_back(cfg.slope());
    require_interior(slopes.front(), "verify");
  }
  std::vector<VerifyReport> reports;
  reports.reserve(slopes.size());
  for (const ExtRational& t : slopes) reports.push_back(verify_slope(t, params));

  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passed();

  if (cfg.json()) {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(report_json(r));
    emit_json(cfg, slopes.size() == 1 ? arr.front() : arr);
  } else {
    std::ostringstream os;
    for (const auto& r : reports) {
      for (const auto& c : r.checks) {
        os << (c.passed ? "PASS" : (c.conjecture ? "WARN" : "FAIL")) << "  t=" << r.t.str() << "  "
           << c.name;
        if (!c.detail.empty()) os << "  (" << c.detail << ")";
        os << "\n";
      }
    }
    os << (ok ? "PASS" : "FAIL") << " " << params.str() << " (" << reports.size() << " slope"
       << (reports.size() == 1 ? "" : "s") << ")\n";
    emit(cfg, os.str());
  }
  if (!ok) {
    for (const auto& r : reports) {
      if (auto f = r.first_failure()) {
        std::cerr << Json{{"status", "FAIL"}, {"t", r.t.str()}, {"params", r.params.str()},
                          {"check", f->name}, {"detail", f->detail}}
                         .dump()
                  << "\n";
        break;
      }
    }
    return kExitVerify;
  }
  return 0;
}

int cmd_svg(const CliConfig& cfg, bool signs) {
  SvgOptions opts{cfg.slope(), cfg.params(), cfg.completed, signs};
  emit(cfg, render_svg(opts).text);
  return 0;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BoundarySlope:
    case ErrorKind::Range:
    case ErrorKind::Regime:
    case ErrorKind::Parse:
    case ErrorKind::Structure:
    case ErrorKind::Malformed:
      return kExitUsage;
    case ErrorKind::Resource:
      return kExitResource;
    case ErrorKind::Integrality:
    case ErrorKind::Consistency:
      return kExitVerify;
  }
  return kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Words, sequences and matrices attached to rational slopes"};
  app.require_subcommand(1);

  CliConfig cfg;
  std::string which = "cohn";
  std::string route = "recursive";
  std::string method = "geometric";
  std::string seq_text;
  bool enumerate = false;
  bool signs = false;
  unsigned max_sum = 0;

  auto* word = app.add_subcommand("word", "print omega_t, or the endpoint-completed word");
  add_common(word, cfg, false);
  word->add_flag("--completed", cfg.completed, "read the shifted segment");

  auto* events = app.add_subcommand("events", "print the crossing-event stream as JSON");
  add_common(events, cfg, false);
  events->add_flag("--completed", cfg.completed, "use the shifted segment");

  auto* matrix = app.add_subcommand("matrix", "print M_t, the completed matrix, or C_t");
  add_common(matrix, cfg, true);
  matrix->add_option("which", which, "monodromy | completed | cohn")
      ->check(CLI::IsMember({"monodromy", "completed", "cohn"}))
      ->capture_default_str();
  matrix->add_option("--route", route, "construction used for cohn")
      ->check(CLI::IsMember({"recursive", "explicit", "sequence", "completed"}))
      ->capture_default_str();

  auto* sequence = app.add_subcommand("sequence", "print the GM or strongly admissible sequence");
  add_common(sequence, cfg, true);
  sequence->add_flag("--completed", cfg.completed, "read the shifted segment");

  auto* cohnword = app.add_subcommand("cohnword", "print the Cohn word c_t");
  add_common(cohnword, cfg, false);
  cohnword->add_option("--method", method, "geometric | tree | omega")
      ->check(CLI::IsMember({"geometric", "tree", "omega"}))
      ->capture_default_str();

  auto* gmtree = app.add_subcommand("gmtree", "dump the labeled GM tree, or one vertex with --t");
  add_common(gmtree, cfg, true);
  gmtree->add_option("--depth", cfg.depth, "tree depth (root = 0)")->capture_default_str();

  auto* ideals = app.add_subcommand("ideals", "count order ideals of the fence poset of a sequence");
  add_common(ideals, cfg, false);
  ideals->add_option("seq", seq_text, "comma-separated positive integers");
  ideals->add_flag("--enumerate", enumerate, "cross-check against brute-force enumeration");

  auto* verify = app.add_subcommand("verify", "check every cross-identity for one slope or a range");
  add_common(verify, cfg, true);
  verify->add_option("--max-sum", max_sum, "verify every p/q with p + q <= N instead of --t");

  auto* svg = app.add_subcommand("svg", "render the segment with letters or signs as SVG");
  add_common(svg, cfg, true);
  svg->add_flag("--completed", cfg.completed, "draw the shifted segment");
  svg->add_flag("--signs", signs, "annotate signs instead of letters");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*word) return cmd_word(cfg);
    if (*events) return cmd_events(cfg);
    if (*matrix) return cmd_matrix(cfg, which, route);
    if (*sequence) return cmd_sequence(cfg);
    if (*cohnword) return cmd_cohnword(cfg, method);
    if (*gmtree) return cmd_gmtree(cfg);
    if (*ideals) return cmd_ideals(cfg, seq_text, enumerate);
    if (*verify) return cmd_verify(cfg, max_sum);
    if (*svg) return cmd_svg(cfg, signs);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return kExitUsage;
}
