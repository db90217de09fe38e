// Command-line front end: family construction, spectral radius, enumeration
// and the verification harness. Exit codes: 0 pass, 1 a check failed,
// 2 usage or input error.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "alpha_extremal.hpp"
#include "json.hpp"

namespace ae = alpha_extremal;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

/// "full", "upper" or a comma list of values in [0,1).
std::vector<double> parse_alphas(const std::string& text) {
  if (text == "full") return ae::full_alpha_grid();
  if (text == "upper") return ae::upper_alpha_grid();
  std::vector<double> out;
  for (const auto& item : split_list(text)) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw UsageError("bad alpha value '" + item + "'");
    }
    if (used != item.size()) throw UsageError("bad alpha value '" + item + "'");
    try {
      out.push_back(ae::Alpha(v).value());
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (out.empty()) throw UsageError("empty alpha list");
  return out;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  for (const auto& item : split_list(text)) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw UsageError("bad integer '" + item + "'");
    }
    if (used != item.size()) throw UsageError("bad integer '" + item + "'");
    out.push_back(v);
  }
  return out;
}

void print_summary(const std::vector<ae::VerificationReport>& reports) {
  std::map<std::string, std::map<ae::Status, int>> tally;
  for (const auto& r : reports) ++tally[r.theorem_id][r.status];
  for (const auto& [id, counts] : tally) {
    auto get = [&](ae::Status s) {
      auto it = counts.find(s);
      return it == counts.end() ? 0 : it->second;
    };
    std::printf("%-28s pass=%d fail=%d skipped=%d out-of-hypothesis=%d\n", id.c_str(), get(ae::Status::kPass),
                get(ae::Status::kFail), get(ae::Status::kSkipped), get(ae::Status::kSkippedOutOfHypothesis));
  }
  for (const auto& r : reports) {
    if (r.status != ae::Status::kFail) continue;
    std::printf("FAIL %s n=%d parameter=%d alpha=%g winner=%s margin=%s\n", r.theorem_id.c_str(), r.n, r.parameter,
                r.alpha, r.winner_canonical_key.c_str(), r.margin ? std::to_string(*r.margin).c_str() : "null");
  }
}

ae::ReportFormat parse_format(const std::string& s) {
  if (s == "json") return ae::ReportFormat::kJson;
  if (s == "csv") return ae::ReportFormat::kCsv;
  throw UsageError("format must be json or csv");
}

int run_family(const std::string& name, const std::string& params, const std::string& out) {
  auto family = ae::parse_family_name(name);
  if (!family) throw UsageError("unknown family '" + name + "'");
  const ae::Graph g = ae::build_family({*family, parse_ints(params)});
  if (out.empty() || out == "-") {
    ae::write_edge_list(std::cout, g);
  } else {
    ae::write_edge_list(out, g);
  }
  return kExitPass;
}

int run_rho(const std::string& path, double alpha_value, bool perron, bool bounds) {
  const ae::Graph g = path == "-" ? ae::read_edge_list(std::cin) : ae::read_edge_list(path);
  const ae::Alpha a(alpha_value);
  const auto res = ae::spectral_radius(g, a);
  nlohmann::json j{{"rho", res.rho}, {"residual", res.residual}, {"iterations", res.iterations}};
  if (perron) j["perron"] = res.perron;
  if (bounds) {
    const auto lo = ae::lower_bounds(g, a);
    nlohmann::json b{{"average_degree", lo.average_degree}, {"max_degree", lo.max_degree}};
    if (g.order() >= 2) {
      const auto hi = ae::upper_bounds(g, a);
      b["degree_average"] = hi.degree_average;
      b["edge_degree"] = hi.edge_degree;
    }
    j["bounds"] = b;
  }
  std::cout << j.dump(2) << "\n";
  return kExitPass;
}

int run_enumerate(int rank, int n, std::optional<int> girth, std::optional<int> pendants,
                  const std::string& subclass, bool count_only, const std::string& out_dir) {
  ae::ClassFilter f{.rank = rank, .n = n, .girth = girth, .pendants = pendants};
  if (!subclass.empty()) {
    if (subclass == "B1") f.subclass = ae::BicyclicSubclass::kB1;
    else if (subclass == "B2") f.subclass = ae::BicyclicSubclass::kB2;
    else throw UsageError("subclass must be B1 or B2");
  }
  if (count_only) {
    std::cout << ae::count(f) << "\n";
    return kExitPass;
  }
  const auto graphs = ae::enumerate(f);
  if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
  for (const auto& g : graphs) {
    const std::string key = ae::canonical_key(g);
    if (out_dir.empty()) {
      std::cout << key << "\n";
    } else {
      ae::write_edge_list((std::filesystem::path(out_dir) / (key + ".txt")).string(), g);
    }
  }
  if (!out_dir.empty()) std::cout << graphs.size() << " graphs written to " << out_dir << "\n";
  return kExitPass;
}

int finish(const std::vector<ae::VerificationReport>& reports, const std::string& report_path,
           const std::string& format) {
  print_summary(reports);
  if (!report_path.empty()) ae::report_write(reports, report_path, parse_format(format));
  return ae::any_failed(reports) ? kExitFail : kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"A_alpha spectral extremal graph toolkit"};
  app.require_subcommand(1);

  std::string family_name, family_params, family_out;
  auto* family = app.add_subcommand("family", "write a family member as an edge list");
  family->add_option("--name", family_name, "Cycle, Path, U_g, U_tk, Theta, ThetaPendant, B1_g, FrakB1_k, FrakB2_k, Fig1")
      ->required();
  family->add_option("--params", family_params, "comma-separated integer parameters")->required();
  family->add_option("--out", family_out, "output file (stdout if omitted)");

  std::string rho_graph;
  double rho_alpha = 0.0;
  bool rho_perron = false, rho_bounds = false;
  auto* rho_cmd = app.add_subcommand("rho", "spectral radius of an edge-list graph as JSON");
  rho_cmd->add_option("--graph", rho_graph, "edge-list file, '-' for stdin")->required();
  rho_cmd->add_option("--alpha", rho_alpha, "alpha in [0,1)")->required();
  rho_cmd->add_flag("--perron", rho_perron, "include the Perron vector");
  rho_cmd->add_flag("--bounds", rho_bounds, "include the degree bounds");

  int en_rank = 1, en_n = 0;
  std::optional<int> en_girth, en_pendants;
  std::string en_subclass, en_out;
  bool en_count = false;
  auto* en = app.add_subcommand("enumerate", "list one graph per isomorphism class");
  en->add_option("--rank", en_rank, "cycle rank: 0 (trees), 1 or 2")->required();
  en->add_option("--n", en_n, "order")->required();
  auto* girth_opt = en->add_option("--girth", en_girth, "girth filter");
  en->add_option("--pendants", en_pendants, "pendant-count filter")->excludes(girth_opt);
  en->add_option("--subclass", en_subclass, "B1 or B2 (rank 2)");
  en->add_flag("--count-only", en_count, "print only the number of classes");
  en->add_option("--out", en_out, "directory for <canonical-key>.txt files");

  std::string vf_theorem, vf_alphas = "full", vf_report, vf_format = "json";
  int vf_min = 4, vf_max = 0;
  auto* vf = app.add_subcommand("verify", "exhaustive argmax check of an extremal theorem");
  vf->add_option("--theorem", vf_theorem,
                 "uni-girth, uni-pendant, bi-girth-B1, bi-girth, bi-pendant-B1, bi-pendant-B2, bi-pendant")
      ->required();
  vf->add_option("--n-min", vf_min, "smallest order")->capture_default_str();
  vf->add_option("--n-max", vf_max, "largest order")->required();
  vf->add_option("--alphas", vf_alphas, "comma list, 'full' or 'upper'")->capture_default_str();
  vf->add_option("--report", vf_report, "report file");
  vf->add_option("--format", vf_format, "json or csv")->capture_default_str();

  std::string lm_ids = "all", lm_alphas = "full", lm_scope = "exhaustive-small", lm_report, lm_format = "json";
  int lm_max = 7;
  bool lm_verbose = false;
  auto* lm = app.add_subcommand("check-lemmas", "check lemma inequalities on generated instances");
  lm->add_option("--ids", lm_ids, "comma list of lemma ids (L2.1 ... L3.4) or 'all'")->capture_default_str();
  lm->add_option("--n-max", lm_max, "largest order")->capture_default_str();
  lm->add_option("--alphas", lm_alphas, "comma list, 'full' or 'upper'")->capture_default_str();
  lm->add_option("--scope", lm_scope, "exhaustive-small or family-instances")->capture_default_str();
  lm->add_option("--report", lm_report, "report file");
  lm->add_option("--format", lm_format, "json or csv")->capture_default_str();
  lm->add_flag("--verbose", lm_verbose, "print every violating instance");

  std::string pc_alphas = "full", pc_report, pc_format = "json";
  auto* pc = app.add_subcommand("polycheck", "polynomial root, closed-form and sign checks");
  pc->add_option("--alphas", pc_alphas, "comma list, 'full' or 'upper'")->capture_default_str();
  pc->add_option("--report", pc_report, "report file");
  pc->add_option("--format", pc_format, "json or csv")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*family) return run_family(family_name, family_params, family_out);
    if (*rho_cmd) return run_rho(rho_graph, rho_alpha, rho_perron, rho_bounds);
    if (*en) return run_enumerate(en_rank, en_n, en_girth, en_pendants, en_subclass, en_count, en_out);
    if (*vf) {
      auto id = ae::parse_theorem_id(vf_theorem);
      if (!id) throw UsageError("unknown theorem '" + vf_theorem + "'");
      if (vf_min > vf_max) throw UsageError("--n-min exceeds --n-max");
      parse_format(vf_format);
      return finish(ae::verify_theorem(*id, vf_min, vf_max, parse_alphas(vf_alphas)), vf_report, vf_format);
    }
    if (*lm) {
      std::vector<ae::LemmaId> ids;
      if (lm_ids == "all") {
        ids = ae::all_lemmas();
      } else {
        for (const auto& s : split_list(lm_ids)) {
          auto id = ae::parse_lemma_id(s);
          if (!id) throw UsageError("unknown lemma '" + s + "'");
          ids.push_back(*id);
        }
      }
      ae::LemmaScope scope;
      if (lm_scope == "exhaustive-small") scope = ae::LemmaScope::kExhaustiveSmall;
      else if (lm_scope == "family-instances") scope = ae::LemmaScope::kFamilyInstances;
      else throw UsageError("scope must be exhaustive-small or family-instances");
      if (lm_max < 2 || lm_max > 12) throw UsageError("--n-max must be in [2, 12]");
      parse_format(lm_format);
      const auto alphas = parse_alphas(lm_alphas);
      std::vector<ae::VerificationReport> all;
      std::vector<std::string> violations;
      for (auto id : ids) {
        auto part = ae::verify_lemma(id, scope, lm_max, alphas, &violations);
        all.insert(all.end(), part.begin(), part.end());
      }
      if (lm_verbose) {
        for (const auto& v : violations) std::printf("violation: %s\n", v.c_str());
      }
      return finish(all, lm_report, lm_format);
    }
    if (*pc) {
      parse_format(pc_format);
      return finish(ae::polycheck(parse_alphas(pc_alphas)), pc_report, pc_format);
    }
  } catch (const UsageError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return kExitUsage;
  } catch (const ae::ParseError& e) {
    std::fprintf(stderr, "input error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "invalid argument: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
