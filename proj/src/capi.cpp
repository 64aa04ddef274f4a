#include "symip.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "json.hpp"
#include "symip/oracle.hpp"

using json = nlohmann::json;
using namespace symip;

struct symip_instance {
  IpInstance inst;
};

struct symip_group {
  PermGroup group;
  // Populated by detection only; empty otherwise.
  std::vector<Permutation> elements;
};

namespace {

void set_err(char* errbuf, size_t errlen, const std::string& msg) {
  if (!errbuf || errlen == 0) return;
  std::snprintf(errbuf, errlen, "%s", msg.c_str());
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
int guarded(char* errbuf, size_t errlen, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    set_err(errbuf, errlen, e.what());
    return SYMIP_ERR_PARSE;
  } catch (const DimensionError& e) {
    set_err(errbuf, errlen, e.what());
    return SYMIP_ERR_DIMENSION;
  } catch (const std::invalid_argument& e) {
    set_err(errbuf, errlen, e.what());
    return SYMIP_ERR_INVALID;
  } catch (const std::runtime_error& e) {
    set_err(errbuf, errlen, e.what());
    std::string msg = e.what();
    return msg.find("cap exceeded") != std::string::npos ? SYMIP_ERR_CAP
                                                         : SYMIP_ERR_INTERNAL;
  } catch (const std::exception& e) {
    set_err(errbuf, errlen, e.what());
    return SYMIP_ERR_INTERNAL;
  }
}

json point_json(const Point& x) {
  json arr = json::array();
  for (const auto& q : x) arr.push_back(to_string(q));
  return arr;
}

json point_json(const IntVector& x) {
  json arr = json::array();
  for (long long v : x) arr.push_back(v);
  return arr;
}

json solve_report_json(const SolveReport& r) {
  json j;
  switch (r.status) {
    case SolveStatus::Optimal:
      j["status"] = SYMIP_STATUS_OPTIMAL;
      j["value"] = to_string(r.value);
      j["point"] = point_json(to_rat_vector(r.point));
      j["layer"] = r.layer;
      break;
    case SolveStatus::Infeasible:
      j["status"] = SYMIP_STATUS_INFEASIBLE;
      if (r.has_witness_layer) j["witness_layer"] = r.witness_layer;
      if (r.exhausted_layers) j["exhausted_layers"] = true;
      if (r.line_infeasible) j["line_infeasible"] = true;
      break;
    case SolveStatus::Unbounded:
      j["status"] = SYMIP_STATUS_UNBOUNDED;
      break;
    case SolveStatus::NotApplicable:
      j["status"] = SYMIP_STATUS_NOT_APPLICABLE;
      break;
  }
  j["layers_visited"] = r.stats.layers_visited;
  j["feasibility_checks"] = r.stats.feasibility_checks;
  j["applicability"] = {{"ok", r.applicability.ok},
                        {"assumed", r.applicability.assumed},
                        {"reason", r.applicability.reason}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

json oracle_report_json(const OracleReport& r, const Box& box) {
  json j;
  j["status"] = r.feasible ? SYMIP_STATUS_OPTIMAL : SYMIP_STATUS_INFEASIBLE;
  if (r.feasible) {
    j["value"] = to_string(r.value);
    json pts = json::array();
    for (const auto& p : r.argmax) pts.push_back(point_json(p));
    j["argmax"] = pts;
  }
  j["points_enumerated"] = r.points_enumerated;
  j["box"] = {{"lo", box.lo}, {"hi", box.hi}};
  return j;
}

Box resolve_box(const IpInstance& inst, const long long* lo,
                const long long* hi) {
  if (!lo && !hi) return default_box(inst);
  if (!lo || !hi) throw std::invalid_argument("box bounds must both be given");
  Box box;
  box.lo.assign(lo, lo + inst.n);
  box.hi.assign(hi, hi + inst.n);
  return box;
}

}  // namespace

extern "C" {

int symip_instance_parse(const char* text, symip_instance** out, char* errbuf,
                         size_t errlen) {
  return guarded(errbuf, errlen, [&] {
    auto inst = parse_instance(text);
    *out = new symip_instance{std::move(inst)};
    return SYMIP_OK;
  });
}

int symip_instance_load(const char* path, symip_instance** out, char* errbuf,
                        size_t errlen) {
  return guarded(errbuf, errlen, [&] {
    auto inst = load_instance(path);
    *out = new symip_instance{std::move(inst)};
    return SYMIP_OK;
  });
}

void symip_instance_free(symip_instance* inst) { delete inst; }

int symip_instance_dim(const symip_instance* inst) { return inst->inst.n; }
int symip_instance_rows(const symip_instance* inst) { return inst->inst.m; }

int symip_instance_serialize(const symip_instance* inst, char** out_text,
                             char* errbuf, size_t errlen) {
  return guarded(errbuf, errlen, [&] {
    *out_text = dup_string(serialize_instance(inst->inst));
    return SYMIP_OK;
  });
}

int symip_group_parse(const char* text, int degree, symip_group** out,
                      char* errbuf, size_t errlen) {
  return guarded(errbuf, errlen, [&] {
    *out = new symip_group{PermGroup::parse_generators(text, degree), {}};
    return SYMIP_OK;
  });
}

int symip_group_load(const char* path, int degree, symip_group** out,
                     char* errbuf, size_t errlen) {
  return guarded(errbuf, errlen, [&] {
    *out = new symip_group{PermGroup::load_generators(path, degree), {}};
    return SYMIP_OK;
  });
}

int symip_group_detect(const symip_instance* inst, int cap, symip_group** out,
                       char* errbuf, size_t errlen) {
  return guarded(errbuf, errlen, [&] {
    try {
      auto result = full_symmetry_group(inst->inst, cap > 0 ? cap : 10);
      *out = new symip_group{std::move(result.group), std::move(result.elements)};
      return SYMIP_OK;
    } catch (const std::runtime_error& e) {
      set_err(errbuf, errlen, e.what());
      return SYMIP_ERR_CAP;
    }
  });
}

void symip_group_free(symip_group* group) { delete group; }

int symip_solve(const symip_instance* inst, const symip_group* group,
                int assume_applicable, char** out_json, char* errbuf,
                size_t errlen) {
  return guarded(errbuf, errlen, [&] {
    auto report = sift_solve(inst->inst, group->group, assume_applicable != 0);
    *out_json = dup_string(solve_report_json(report).dump());
    return SYMIP_OK;
  });
}

int symip_oracle_solve(const symip_instance* inst, const long long* lo,
                       const long long* hi, long long cap, char** out_json,
                       char* errbuf, size_t errlen) {
  return guarded(errbuf, errlen, [&] {
    Box box = resolve_box(inst->inst, lo, hi);
    auto report = brute_force_solve(inst->inst, box,
                                    cap > 0 ? cap : kDefaultEnumerationCap);
    *out_json = dup_string(oracle_report_json(report, box).dump());
    return SYMIP_OK;
  });
}

int symip_cross_validate(const symip_instance* inst, const symip_group* group,
                         const long long* lo, const long long* hi,
                         long long cap, char** out_json, char* errbuf,
                         size_t errlen) {
  return guarded(errbuf, errlen, [&] {
    Box box = resolve_box(inst->inst, lo, hi);
    auto cv = cross_validate(inst->inst, group->group, box,
                             cap > 0 ? cap : kDefaultEnumerationCap);
    json j;
    j["agree"] = cv.agree;
    j["detail"] = cv.detail;
    j["sift"] = solve_report_json(cv.sift);
    j["oracle"] = oracle_report_json(cv.brute, box);
    json layers = json::array();
    for (const auto& la : cv.layers)
      layers.push_back({{"k", la.k},
                        {"center_feasible", la.center_feasible},
                        {"neighbor_feasible", la.neighbor_feasible},
                        {"brute_feasible", la.brute_feasible},
                        {"lp_feasible", la.lp_feasible},
                        {"consistent", la.consistent()}});
    j["layers"] = layers;
    *out_json = dup_string(j.dump());
    return SYMIP_OK;
  });
}

int symip_symmetry_report(const symip_instance* inst, const symip_group* group,
                          char** out_json, char* errbuf, size_t errlen) {
  return guarded(errbuf, errlen, [&] {
    const PermGroup& G = group->group;
    json j;
    j["degree"] = G.degree;
    json gens = json::array();
    for (const auto& g : G.generators) gens.push_back(g.cycle_str());
    j["generators"] = gens;
    try {
      j["order"] = group->elements.empty() ? G.elements().size()
                                           : group->elements.size();
    } catch (const std::runtime_error&) {
      j["order"] = nullptr;  // beyond enumeration cap
    }
    int max_t = 0, max_h = 0;
    for (int k = 1; k <= G.degree; ++k) {
      if (!is_k_transitive(G, k)) break;
      max_t = k;
    }
    for (int k = 1; k <= G.degree; ++k) {
      if (!is_k_homogeneous(G, k)) break;
      max_h = k;
    }
    j["transitivity_degree"] = max_t;
    j["homogeneity_degree"] = max_h;
    j["applicable"] =
        check_applicability(inst->inst, G).ok;
    *out_json = dup_string(j.dump());
    return SYMIP_OK;
  });
}

int symip_layers_report(const symip_instance* inst, long long from_k,
                        long long to_k, char** out_json, char* errbuf,
                        size_t errlen) {
  return guarded(errbuf, errlen, [&] {
    if (from_k > to_k) throw std::invalid_argument("--from must be <= --to");
    const IpInstance& ip = inst->inst;
    auto cprime = coprime_multiple(ip.c);
    // gamma with c = gamma * c'.
    Rational gamma;
    for (int i = 0; i < ip.n; ++i)
      if (cprime.vec[i] != 0) {
        gamma = ip.c[i] / Rational(cprime.vec[i]);
        break;
      }
    bool transitive_case = cprime.is_all_ones();

    json j;
    j["cprime"] = [&] {
      json arr = json::array();
      for (const auto& e : cprime.vec) arr.push_back(e.get_str());
      return arr;
    }();
    j["layers_per_period"] = layers_per_period(cprime).get_str();
    json rows = json::array();
    for (long long k = from_k; k <= to_k; ++k) {
      json row;
      row["k"] = k;
      row["t"] = to_string(layer_parameter(cprime, k));
      row["utility"] = to_string(gamma * Rational(static_cast<long>(k)));
      if (transitive_case) {
        row["center"] = point_json(center(ip.n, k));
        row["neighbor_count"] = neighbor_set(ip.n, k).cardinality().get_str();
      }
      rows.push_back(row);
    }
    j["layers"] = rows;
    *out_json = dup_string(j.dump());
    return SYMIP_OK;
  });
}

int symip_neighbors_report(const symip_instance* inst,
                           const symip_group* group_or_null, long long k,
                           long long cap, char** out_json, char* errbuf,
                           size_t errlen) {
  return guarded(errbuf, errlen, [&] {
    const IpInstance& ip = inst->inst;
    if (!coprime_multiple(ip.c).is_all_ones())
      throw std::invalid_argument(
          "neighbors are defined only for c parallel to (1,...,1)");
    auto ns = neighbor_set(ip.n, k);
    size_t limit = cap > 0 ? static_cast<size_t>(cap) : 1000000;
    if (ns.cardinality() > Integer(static_cast<unsigned long>(limit)))
      throw std::runtime_error("neighbor enumeration cap exceeded");

    json j;
    j["k"] = k;
    j["count"] = ns.cardinality().get_str();
    json members = json::array();
    ns.for_each([&](const IntVector& x) {
      members.push_back(point_json(x));
      return true;
    });
    j["neighbors"] = members;
    if (group_or_null) {
      json orbits = json::array();
      for (const auto& orb :
           neighbor_orbits(group_or_null->group, ip.n, k, limit))
        orbits.push_back({{"representative", point_json(orb.representative)},
                          {"size", orb.size}});
      j["orbits"] = orbits;
    }
    *out_json = dup_string(j.dump());
    return SYMIP_OK;
  });
}

void symip_string_free(char* s) { std::free(s); }

}  // extern "C"
