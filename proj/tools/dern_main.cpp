#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dern.h"

namespace {

using Json = nlohmann::json;

struct Common {
  std::string output = "json";
  std::string out_path;
  unsigned long long seed = 20240824ULL;
};

struct AlgebraHandle {
  dern_algebra* p = nullptr;
  ~AlgebraHandle() { dern_algebra_free(p); }
};

std::string take(char* s) {
  std::string r = s ? s : "";
  dern_string_free(s);
  return r;
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream f(path);
  if (!f) return false;
  std::stringstream ss;
  ss << f.rdbuf();
  out = ss.str();
  return true;
}

int input_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return 1;
}

// spec is a catalog name, or @path pointing at a dern-algebra document
int load_algebra(const std::string& spec, AlgebraHandle& h) {
  int rc;
  if (!spec.empty() && spec[0] == '@') {
    std::string text;
    if (!read_file(spec.substr(1), text))
      return input_error("cannot read '" + spec.substr(1) + "'");
    rc = dern_algebra_from_json(text.c_str(), &h.p);
  } else {
    rc = dern_build(spec.c_str(), &h.p);
  }
  if (rc != DERN_OK) return input_error(dern_last_error());
  return 0;
}

int emit(const std::string& text, const Common& c) {
  if (c.out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(c.out_path);
  if (!f) return input_error("cannot write '" + c.out_path + "'");
  f << text;
  return 0;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_tuple(const Json& arr) {
  std::string s = "(";
  for (size_t i = 0; i < arr.size(); ++i) {
    if (i) s += ", ";
    s += arr[i].get<std::string>();
  }
  return s + ")";
}

std::string markdown_build(const Json& doc) {
  std::ostringstream md;
  md << "# algebra " << doc.value("name", "custom") << "\n\n";
  md << "| field | value |\n|---|---|\n";
  md << "| family | " << doc.value("family", "custom") << " |\n";
  md << "| dim | " << doc["dim"].get<int>() << " |\n";
  md << "| basis labels | " << doc["labels"].size() << " |\n";
  md << "| structure constants | " << doc["structure_constants"].size() << " |\n";
  return md.str();
}

std::string markdown_roots(const Json& rep) {
  const Json& r = rep["roots"];
  std::ostringstream md;
  md << "# restricted roots: " << rep["algebra"]["name"].get<std::string>() << "\n\n";
  md << "- rank: " << r["rank"].get<int>() << "\n";
  md << "- decomposable: " << yes_no(r["decomposable"].get<bool>()) << "\n";
  md << "- positive roots: " << r["positive_count"].get<int>() << "\n";
  md << "- dim n: " << r["n_dim"].get<int>() << "\n";
  md << "- dim m: " << r["m_dim"].get<int>() << "\n";
  md << "- dim a: " << r["a_dim"].get<int>() << "\n\n";
  md << "| root | in simple roots | height | mult | norm^2 | notes |\n";
  md << "|---|---|---|---|---|---|\n";
  for (const Json& e : r["positive"]) {
    std::string notes;
    if (e["simple"].get<bool>()) notes = "simple";
    if (e["highest"].get<bool>()) notes += notes.empty() ? "highest" : ", highest";
    md << "| " << join_tuple(e["coords"]) << " | " << join_tuple(e["simple_coords"]) << " | "
       << e["height"].get<int>() << " | " << e["mult"].get<int>() << " | "
       << e["norm2"].get<std::string>() << " | " << notes << " |\n";
  }
  return md.str();
}

std::string markdown_solve(const Json& rep) {
  const Json& d = rep["derivations"];
  std::ostringstream md;
  md << "# derivations of n: " << rep["algebra"]["name"].get<std::string>() << " (mode "
     << d["mode"].get<std::string>() << ")\n\n";
  md << "- dim n: " << d["n_dim"].get<int>() << "\n";
  md << "- solution dimension: " << d["dim"].get<int>() << "\n";
  if (d.contains("sym_dim")) {
    md << "- symmetric part: " << d["sym_dim"].get<int>() << "\n";
    md << "- skew part: " << d["skew_dim"].get<int>() << "\n";
  }
  return md.str();
}

std::string markdown_verify(const Json& rep) {
  const Json& v = rep["verdict"];
  std::ostringstream md;
  md << "# derivation verdict: " << rep["algebra"]["name"].get<std::string>() << "\n\n";
  md << "| algebra | dim Der(n) | dim ad(m+a) | equal | expected exception | matches |\n";
  md << "|---|---|---|---|---|---|\n";
  md << "| " << rep["algebra"]["name"].get<std::string>() << " | " << v["dim_der"].get<int>()
     << " | " << v["dim_ad"].get<int>() << " | " << yes_no(v["equal"].get<bool>()) << " | "
     << yes_no(v["exceptional_expected"].get<bool>()) << " | "
     << yes_no(v["matches_expectation"].get<bool>()) << " |\n";
  return md.str();
}

std::string markdown_htype(const Json& rep) {
  const Json& h = rep["htype"];
  std::ostringstream md;
  md << "# two-step metric algebra check\n\n";
  md << "- dim v: " << rep["two_step"]["v_dim"].get<int>() << "\n";
  md << "- dim z: " << rep["two_step"]["z_dim"].get<int>() << "\n";
  md << "- H-type: " << yes_no(h["is_htype"].get<bool>()) << "\n";
  if (!h["witness"].get<std::string>().empty())
    md << "- witness: " << h["witness"].get<std::string>() << "\n";
  md << "- sampled identity failures: " << h["sampled_identity"]["failures"].get<int>() << "/"
     << h["sampled_identity"]["samples"].get<int>() << "\n";
  return md.str();
}

int run_build(const std::string& spec, const Common& c) {
  AlgebraHandle h;
  if (int rc = load_algebra(spec, h)) return rc;
  char* text = nullptr;
  if (dern_algebra_to_json(h.p, &text) != DERN_OK) return input_error(dern_last_error());
  std::string doc = take(text);
  if (c.output == "markdown") return emit(markdown_build(Json::parse(doc)), c);
  return emit(doc, c);
}

int run_roots(const std::string& spec, const Common& c) {
  AlgebraHandle h;
  if (int rc = load_algebra(spec, h)) return rc;
  char* text = nullptr;
  if (dern_roots_report(h.p, &text) != DERN_OK) return input_error(dern_last_error());
  std::string rep = take(text);
  if (c.output == "markdown") return emit(markdown_roots(Json::parse(rep)), c);
  return emit(rep, c);
}

int run_solve(const std::string& spec, const std::string& mode, const Common& c) {
  AlgebraHandle h;
  if (int rc = load_algebra(spec, h)) return rc;
  char* text = nullptr;
  if (dern_solve_report(h.p, mode.c_str(), &text) != DERN_OK)
    return input_error(dern_last_error());
  std::string rep = take(text);
  if (c.output == "markdown") return emit(markdown_solve(Json::parse(rep)), c);
  return emit(rep, c);
}

int run_verify(const std::string& spec, const Common& c) {
  AlgebraHandle h;
  if (int rc = load_algebra(spec, h)) return rc;
  char* text = nullptr;
  if (dern_verify_report(h.p, &text) != DERN_OK) return input_error(dern_last_error());
  std::string rep = take(text);
  Json parsed = Json::parse(rep);
  int rc = parsed["verdict"]["matches_expectation"].get<bool>() ? 0 : 2;
  if (c.output == "markdown") {
    if (int erc = emit(markdown_verify(parsed), c)) return erc;
  } else {
    if (int erc = emit(rep, c)) return erc;
  }
  return rc;
}

int run_htype(const std::string& path, const Common& c) {
  std::string doc;
  if (!read_file(path, doc)) return input_error("cannot read '" + path + "'");
  char* text = nullptr;
  if (dern_htype_check(doc.c_str(), c.seed, &text) != DERN_OK)
    return input_error(dern_last_error());
  std::string rep = take(text);
  if (c.output == "markdown") return emit(markdown_htype(Json::parse(rep)), c);
  return emit(rep, c);
}

int run_batch(const std::string& path, const Common& c) {
  std::ifstream f(path);
  if (!f) return input_error("cannot read '" + path + "'");
  Json entries = Json::array();
  int mismatches = 0, errors = 0;
  std::string line;
  while (std::getline(f, line)) {
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    size_t b = line.find_last_not_of(" \t\r");
    std::string spec = line.substr(a, b - a + 1);
    if (spec[0] == '#') continue;
    Json entry;
    entry["algebra"] = spec;
    AlgebraHandle h;
    int rc;
    if (spec[0] == '@') {
      std::string text;
      if (read_file(spec.substr(1), text)) {
        rc = dern_algebra_from_json(text.c_str(), &h.p);
      } else {
        entry["error"] = "cannot read '" + spec.substr(1) + "'";
        rc = -1;
      }
    } else {
      rc = dern_build(spec.c_str(), &h.p);
    }
    char* rep_text = nullptr;
    if (rc == DERN_OK) rc = dern_verify_report(h.p, &rep_text);
    if (rc != DERN_OK) {
      if (!entry.contains("error")) entry["error"] = dern_last_error();
      ++errors;
    } else {
      Json v = Json::parse(take(rep_text))["verdict"];
      entry["dim_der"] = v["dim_der"];
      entry["dim_ad"] = v["dim_ad"];
      entry["equal"] = v["equal"];
      entry["exceptional_expected"] = v["exceptional_expected"];
      entry["matches_expectation"] = v["matches_expectation"];
      if (!v["matches_expectation"].get<bool>()) ++mismatches;
    }
    entries.push_back(std::move(entry));
  }
  int exit_code = mismatches ? 2 : errors ? 1 : 0;

  if (c.output == "markdown") {
    std::ostringstream md;
    md << "# derivation verdicts\n\n";
    md << "| algebra | dim Der(n) | dim ad(m+a) | equal | expected exception | status |\n";
    md << "|---|---|---|---|---|---|\n";
    for (const Json& e : entries) {
      md << "| " << e["algebra"].get<std::string>() << " | ";
      if (e.contains("error")) {
        md << " | | | | error: " << e["error"].get<std::string>() << " |\n";
      } else {
        md << e["dim_der"].get<int>() << " | " << e["dim_ad"].get<int>() << " | "
           << yes_no(e["equal"].get<bool>()) << " | "
           << yes_no(e["exceptional_expected"].get<bool>()) << " | "
           << (e["matches_expectation"].get<bool>() ? "ok" : "mismatch") << " |\n";
      }
    }
    if (int erc = emit(md.str(), c)) return erc;
    return exit_code;
  }

  nlohmann::ordered_json rep;
  rep["tool"] = {{"name", "dern"}, {"version", dern_version()}};
  nlohmann::ordered_json batch;
  batch["count"] = entries.size();
  batch["mismatches"] = mismatches;
  batch["errors"] = errors;
  batch["entries"] = std::move(entries);
  rep["batch"] = std::move(batch);
  if (int erc = emit(rep.dump(2) + "\n", c)) return erc;
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact structure computations for real semisimple Lie algebras"};
  app.set_version_flag("--version", std::string("dern ") + dern_version());
  app.require_subcommand(1);

  Common common;
  std::string spec, mode = "rootspace", file;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--output", common.output, "report format")
        ->check(CLI::IsMember({"json", "markdown"}))
        ->capture_default_str();
    cmd->add_option("--out", common.out_path, "write the report to a file instead of stdout");
    cmd->add_option("--seed", common.seed, "seed for sampled checks")->capture_default_str();
  };
  const char* spec_help =
      "catalog name like sl3R, so(1,4), su(2,3), sp(1,2), split-G2; "
      "@file reads a saved dern-algebra document";

  CLI::App* build = app.add_subcommand("build", "construct an algebra and print its document");
  build->add_option("algebra", spec, spec_help)->required();
  add_common(build);

  CLI::App* roots = app.add_subcommand("roots", "restricted-root decomposition report");
  roots->add_option("algebra", spec, spec_help)->required();
  add_common(roots);

  CLI::App* htype = app.add_subcommand("htype", "two-step metric algebra checks");
  htype->require_subcommand(1);
  CLI::App* htcheck =
      htype->add_subcommand("check", "Kaplan / Clifford verdict for a dern-two-step file");
  htcheck->add_option("file", file, "dern-two-step JSON document")->required();
  add_common(htcheck);

  CLI::App* der = app.add_subcommand("der", "derivations of the Iwasawa nilpotent part");
  der->require_subcommand(1);
  CLI::App* solve = der->add_subcommand("solve", "solve for derivations of n");
  solve->add_option("algebra", spec, spec_help)->required();
  solve->add_option("--mode", mode, "constraint mode: all, grading, or rootspace")
      ->check(CLI::IsMember({"all", "grading", "rootspace"}))
      ->capture_default_str();
  add_common(solve);
  CLI::App* verify = der->add_subcommand("verify", "compare Der(n) against ad(m + a)");
  verify->add_option("algebra", spec, spec_help)->required();
  add_common(verify);
  CLI::App* batch =
      der->add_subcommand("batch", "verify every spec in a list file, one per line");
  batch->add_option("file", file, "list of algebra specs; # starts a comment")->required();
  add_common(batch);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  if (build->parsed()) return run_build(spec, common);
  if (roots->parsed()) return run_roots(spec, common);
  if (htcheck->parsed()) return run_htype(file, common);
  if (solve->parsed()) return run_solve(spec, mode, common);
  if (verify->parsed()) return run_verify(spec, common);
  if (batch->parsed()) return run_batch(file, common);
  return 1;
}
