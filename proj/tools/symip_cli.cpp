// Command-line front end. Links only the public C API.

#include <cstdio>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "symip.h"

using json = nlohmann::json;

namespace {

// Exit codes: 0 optimal/success, 2 infeasible, 3 unbounded,
// 4 not applicable, 1 any error.
constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitUnbounded = 3;
constexpr int kExitNotApplicable = 4;

struct InstanceDeleter {
  void operator()(symip_instance* p) const { symip_instance_free(p); }
};
struct GroupDeleter {
  void operator()(symip_group* p) const { symip_group_free(p); }
};
using InstancePtr = std::unique_ptr<symip_instance, InstanceDeleter>;
using GroupPtr = std::unique_ptr<symip_group, GroupDeleter>;

struct Options {
  std::string instance_path;
  std::string group_path;
  std::vector<long long> box;
  long long cap = 0;
  bool json_output = false;
  bool fallback_oracle = false;
  bool assume_applicable = false;
  bool orbits = false;
  long long k = 0;
  long long from_k = 0;
  long long to_k = 0;
};

char g_errbuf[1024];

[[noreturn]] void fail(const std::string& msg) {
  std::fprintf(stderr, "error: %s\n", msg.c_str());
  std::exit(kExitError);
}

InstancePtr load_instance(const Options& opt) {
  symip_instance* inst = nullptr;
  if (symip_instance_load(opt.instance_path.c_str(), &inst, g_errbuf,
                          sizeof g_errbuf) != SYMIP_OK)
    fail(g_errbuf);
  return InstancePtr(inst);
}

GroupPtr load_group(const Options& opt, const symip_instance* inst) {
  symip_group* group = nullptr;
  int rc;
  if (!opt.group_path.empty()) {
    rc = symip_group_load(opt.group_path.c_str(), symip_instance_dim(inst),
                          &group, g_errbuf, sizeof g_errbuf);
  } else {
    rc = symip_group_detect(inst, 10, &group, g_errbuf, sizeof g_errbuf);
    if (rc == SYMIP_ERR_CAP)
      fail(std::string(g_errbuf) +
           " (pass --group <file> for large dimensions)");
  }
  if (rc != SYMIP_OK) fail(g_errbuf);
  return GroupPtr(group);
}

// lo/hi arrays from --box: one value -> cube [0, v]^n; n values -> uppers;
// 2n values -> lowers then uppers.
struct BoxArrays {
  std::vector<long long> lo, hi;
  const long long* lo_ptr = nullptr;
  const long long* hi_ptr = nullptr;
};

BoxArrays resolve_box(const Options& opt, int n) {
  BoxArrays out;
  if (opt.box.empty()) return out;  // library default
  if (opt.box.size() == 1) {
    out.lo.assign(n, 0);
    out.hi.assign(n, opt.box[0]);
  } else if (static_cast<int>(opt.box.size()) == n) {
    out.lo.assign(n, 0);
    out.hi = opt.box;
  } else if (static_cast<int>(opt.box.size()) == 2 * n) {
    out.lo.assign(opt.box.begin(), opt.box.begin() + n);
    out.hi.assign(opt.box.begin() + n, opt.box.end());
  } else {
    fail("--box expects 1, n, or 2n integers");
  }
  out.lo_ptr = out.lo.data();
  out.hi_ptr = out.hi.data();
  return out;
}

json call_json(int rc, char** raw) {
  if (rc != SYMIP_OK) fail(g_errbuf);
  json j = json::parse(*raw);
  symip_string_free(*raw);
  return j;
}

void emit(const Options& opt, const json& j, const std::string& text) {
  if (opt.json_output)
    std::printf("%s\n", j.dump().c_str());
  else
    std::printf("%s", text.c_str());
}

std::string format_point(const json& arr) {
  std::string out = "(";
  for (size_t i = 0; i < arr.size(); ++i) {
    if (i) out += ", ";
    if (arr[i].is_string())
      out += arr[i].get<std::string>();
    else
      out += std::to_string(arr[i].get<long long>());
  }
  return out + ")";
}

int status_exit_code(const std::string& status) {
  if (status == SYMIP_STATUS_OPTIMAL) return 0;
  if (status == SYMIP_STATUS_INFEASIBLE) return kExitInfeasible;
  if (status == SYMIP_STATUS_UNBOUNDED) return kExitUnbounded;
  return kExitNotApplicable;
}

std::string describe_solve(const json& j) {
  std::string out = "status: " + j["status"].get<std::string>() + "\n";
  if (j.contains("value")) {
    out += "value: " + j["value"].get<std::string>() + "\n";
    out += "point: " + format_point(j["point"]) + "\n";
    out += "layer: " + std::to_string(j["layer"].get<long long>()) + "\n";
  }
  if (j.contains("witness_layer"))
    out += "witness layer (first infeasible center): " +
           std::to_string(j["witness_layer"].get<long long>()) + "\n";
  if (j.contains("line_infeasible"))
    out += "fixed line misses the feasible region\n";
  out += "layers visited: " +
         std::to_string(j["layers_visited"].get<long long>()) + "\n";
  const auto& app = j["applicability"];
  out += "applicability: ";
  out += app["ok"].get<bool>() ? "ok" : (app["assumed"].get<bool>()
                                             ? "assumed by user"
                                             : app["reason"].get<std::string>());
  out += "\n";
  if (j.contains("note")) out += "note: " + j["note"].get<std::string>() + "\n";
  return out;
}

int cmd_solve(const Options& opt) {
  auto inst = load_instance(opt);
  auto group = load_group(opt, inst.get());
  char* raw = nullptr;
  json j = call_json(symip_solve(inst.get(), group.get(),
                                 opt.assume_applicable ? 1 : 0, &raw, g_errbuf,
                                 sizeof g_errbuf),
                     &raw);
  std::string status = j["status"];
  if (status == SYMIP_STATUS_NOT_APPLICABLE && opt.fallback_oracle) {
    auto box = resolve_box(opt, symip_instance_dim(inst.get()));
    char* oraw = nullptr;
    json oj = call_json(
        symip_oracle_solve(inst.get(), box.lo_ptr, box.hi_ptr, opt.cap, &oraw,
                           g_errbuf, sizeof g_errbuf),
        &oraw);
    oj["fallback"] = "oracle";
    std::string text = "sifting not applicable; oracle fallback\n";
    text += "status: " + oj["status"].get<std::string>() + " (box-relative)\n";
    if (oj.contains("value")) {
      text += "value: " + oj["value"].get<std::string>() + "\n";
      for (const auto& p : oj["argmax"])
        text += "point: " + format_point(p) + "\n";
    }
    emit(opt, oj, text);
    return status_exit_code(oj["status"]);
  }
  emit(opt, j, describe_solve(j));
  return status_exit_code(status);
}

int cmd_symmetry(const Options& opt) {
  auto inst = load_instance(opt);
  auto group = load_group(opt, inst.get());
  char* raw = nullptr;
  json j = call_json(symip_symmetry_report(inst.get(), group.get(), &raw,
                                           g_errbuf, sizeof g_errbuf),
                     &raw);
  std::string text;
  text += "degree: " + std::to_string(j["degree"].get<int>()) + "\n";
  text += "generators:";
  for (const auto& g : j["generators"]) text += " " + g.get<std::string>();
  if (j["generators"].empty()) text += " (trivial)";
  text += "\n";
  text += "order: " + (j["order"].is_null()
                           ? std::string("> enumeration cap")
                           : std::to_string(j["order"].get<long long>())) +
          "\n";
  text += "transitive up to degree: " +
          std::to_string(j["transitivity_degree"].get<int>()) + "\n";
  text += "homogeneous up to degree: " +
          std::to_string(j["homogeneity_degree"].get<int>()) + "\n";
  text += std::string("sifting applicable: ") +
          (j["applicable"].get<bool>() ? "yes" : "no") + "\n";
  emit(opt, j, text);
  return 0;
}

int cmd_layers(const Options& opt) {
  auto inst = load_instance(opt);
  char* raw = nullptr;
  json j = call_json(symip_layers_report(inst.get(), opt.from_k, opt.to_k, &raw,
                                         g_errbuf, sizeof g_errbuf),
                     &raw);
  std::string text = "c' = " + format_point(j["cprime"]) + ", " +
                     j["layers_per_period"].get<std::string>() +
                     " layers per period\n";
  for (const auto& row : j["layers"]) {
    text += "k=" + std::to_string(row["k"].get<long long>());
    text += "  t=" + row["t"].get<std::string>();
    text += "  utility=" + row["utility"].get<std::string>();
    if (row.contains("center"))
      text += "  center=" + format_point(row["center"]);
    if (row.contains("neighbor_count"))
      text += "  neighbors=" + row["neighbor_count"].get<std::string>();
    text += "\n";
  }
  emit(opt, j, text);
  return 0;
}

int cmd_neighbors(const Options& opt) {
  auto inst = load_instance(opt);
  GroupPtr group;
  if (opt.orbits) group = load_group(opt, inst.get());
  char* raw = nullptr;
  json j = call_json(
      symip_neighbors_report(inst.get(), group.get(), opt.k, opt.cap, &raw,
                             g_errbuf, sizeof g_errbuf),
      &raw);
  std::string text = "layer k=" + std::to_string(opt.k) + ": " +
                     j["count"].get<std::string>() + " neighbors\n";
  for (const auto& p : j["neighbors"]) text += "  " + format_point(p) + "\n";
  if (j.contains("orbits")) {
    text += "orbits:\n";
    for (const auto& o : j["orbits"])
      text += "  rep " + format_point(o["representative"]) + " size " +
              std::to_string(o["size"].get<long long>()) + "\n";
  }
  emit(opt, j, text);
  return 0;
}

int cmd_check(const Options& opt) {
  auto inst = load_instance(opt);
  auto group = load_group(opt, inst.get());
  auto box = resolve_box(opt, symip_instance_dim(inst.get()));
  char* raw = nullptr;
  json j = call_json(
      symip_cross_validate(inst.get(), group.get(), box.lo_ptr, box.hi_ptr,
                           opt.cap, &raw, g_errbuf, sizeof g_errbuf),
      &raw);
  std::string text =
      std::string(j["agree"].get<bool>() ? "AGREE" : "DISAGREE") + ": " +
      j["detail"].get<std::string>() + "\n";
  if (j["sift"].contains("value"))
    text += "value: " + j["sift"]["value"].get<std::string>() + "\n";
  text += "note: optimality certification is relative to the box\n";
  for (const auto& la : j["layers"]) {
    text += "k=" + std::to_string(la["k"].get<long long>());
    text += la["consistent"].get<bool>() ? " consistent" : " INCONSISTENT";
    text += "\n";
  }
  emit(opt, j, text);
  return j["agree"].get<bool>() ? 0 : kExitInfeasible;
}

int cmd_oracle(const Options& opt) {
  auto inst = load_instance(opt);
  auto box = resolve_box(opt, symip_instance_dim(inst.get()));
  char* raw = nullptr;
  json j = call_json(
      symip_oracle_solve(inst.get(), box.lo_ptr, box.hi_ptr, opt.cap, &raw,
                         g_errbuf, sizeof g_errbuf),
      &raw);
  std::string text = "status: " + j["status"].get<std::string>() +
                     " (box-relative)\n";
  if (j.contains("value")) {
    text += "value: " + j["value"].get<std::string>() + "\n";
    for (const auto& p : j["argmax"]) text += "point: " + format_point(p) + "\n";
  }
  emit(opt, j, text);
  return status_exit_code(j["status"]);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver for integer programs with highly transitive "
               "coordinate symmetry"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* cmd, bool needs_group) {
    cmd->add_option("instance", opt.instance_path, "instance file (.ip)")
        ->required();
    cmd->add_flag("--json", opt.json_output, "machine-readable output");
    cmd->add_option("--cap", opt.cap, "enumeration cap");
    if (needs_group)
      cmd->add_option("--group", opt.group_path,
                      "generator file (default: auto-detect for n <= 10)");
  };

  auto* solve = app.add_subcommand("solve", "run the sifting solver");
  add_common(solve, true);
  solve->add_flag("--fallback-oracle", opt.fallback_oracle,
                  "fall back to brute force when not applicable");
  solve->add_flag("--assume-applicable", opt.assume_applicable,
                  "skip the transitivity check");
  solve->add_option("--box", opt.box, "box for the oracle fallback");

  auto* symmetry = app.add_subcommand("symmetry", "report the symmetry group");
  add_common(symmetry, true);

  auto* layers = app.add_subcommand("layers", "list c-layers");
  add_common(layers, false);
  layers->add_option("--from", opt.from_k, "first layer index")->required();
  layers->add_option("--to", opt.to_k, "last layer index")->required();

  auto* neighbors = app.add_subcommand("neighbors", "list layer neighbors");
  add_common(neighbors, true);
  neighbors->add_option("-k,--layer", opt.k, "layer index")->required();
  neighbors->add_flag("--orbits", opt.orbits, "partition into group orbits");

  auto* check = app.add_subcommand("check", "cross-validate against the oracle");
  add_common(check, true);
  check->add_option("--box", opt.box, "enumeration box");

  auto* oracle = app.add_subcommand("oracle", "brute-force solve over a box");
  add_common(oracle, false);
  oracle->add_option("--box", opt.box, "enumeration box");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return cmd_solve(opt);
    if (symmetry->parsed()) return cmd_symmetry(opt);
    if (layers->parsed()) return cmd_layers(opt);
    if (neighbors->parsed()) return cmd_neighbors(opt);
    if (check->parsed()) return cmd_check(opt);
    if (oracle->parsed()) return cmd_oracle(opt);
  } catch (const std::exception& e) {
    fail(e.what());
  }
  return kExitError;
}
