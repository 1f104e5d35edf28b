#include "fpair/cli.hpp"

#include <chrono>

#include "fpair/compatible.hpp"
#include "fpair/criteria.hpp"
#include "fpair/errors.hpp"
#include "fpair/parse.hpp"
#include "fpair/testideal.hpp"
#include "fpair/thresholds.hpp"

namespace fpair {

namespace {

using Json = nlohmann::ordered_json;

const char* kReducedWarning = "S/I is assumed reduced; reducedness is not checked";

RingPresentation ring_of(const Problem& pr) {
  return RingPresentation(pr.p, pr.vars, Ideal(pr.p, pr.vars.size(), pr.defining));
}

PairSpec pair_of(const Problem& pr) { return PairSpec(ring_of(pr), Ideal(pr.p, pr.vars.size(), pr.a), pr.t); }

Json polys(const std::vector<Polynomial>& v, const std::vector<std::string>& names) {
  Json out = Json::array();
  for (const auto& f : v) out.push_back(f.str(names));
  return out;
}

Json point_json(const std::vector<std::uint64_t>& pt) {
  Json out = Json::array();
  for (auto c : pt) out.push_back(c);
  return out;
}

Ideal maximal_ideal(const Problem& pr, const std::vector<std::uint64_t>& pt) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < pt.size(); ++i) {
    gens.push_back(Polynomial::variable(i, pr.p, pr.vars.size()) -
                   Polynomial::constant(static_cast<std::int64_t>(pt[i]), pr.p, pr.vars.size()));
  }
  return Ideal(pr.p, pr.vars.size(), gens);
}

std::vector<std::uint64_t> origin(const Problem& pr) { return std::vector<std::uint64_t>(pr.vars.size(), 0); }

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::Yes:
      return kExitYes;
    case Verdict::No:
      return kExitNo;
    case Verdict::Unknown:
      return kExitUnknown;
  }
  return kExitUnknown;
}

Json header(const Problem& pr) {
  Json j;
  j["command"] = pr.cmd;
  j["ring"]["p"] = pr.p;
  j["ring"]["vars"] = pr.vars;
  j["ring"]["I"] = polys(pr.defining, pr.vars);
  j["a"] = polys(pr.a, pr.vars);
  j["t"] = pr.t.str();
  return j;
}

void put_check(Json& j, const CheckReport& r, const std::vector<std::string>& names) {
  j["verdict"] = std::string(to_string(r.verdict));
  j["method"] = r.method;
  j["level_e"] = r.level_e ? Json(*r.level_e) : Json(nullptr);
  if (r.point) j["point"] = point_json(*r.point);
  if (r.multiplier) j["d"] = r.multiplier->str(names);
  Json w = Json::array();
  for (const auto& s : r.witnesses) {
    Json x;
    x["g"] = s.g.str(names);
    x["a"] = s.a.str(names);
    w.push_back(x);
  }
  j["witnesses"] = w;
  j["bounds"]["e_max"] = r.bounds.e_max;
  j["bounds"]["degree_bound"] = r.bounds.degree_bound ? Json(*r.bounds.degree_bound) : Json(nullptr);
  j["notes"] = r.notes;
}

Outcome run_fpure(const Problem& pr) {
  PairSpec pair = pair_of(pr);
  const std::uint64_t e_max = pr.e_max.value_or(3);
  Json j = header(pr);
  CheckReport r = pr.points.empty() && !pr.local
                      ? is_locally_sharply_F_pure(pair, e_max)
                      : local_check_at_maximal(pair, maximal_ideal(pr, pr.points.empty() ? origin(pr) : pr.points[0]),
                                               e_max, pr.d);
  put_check(j, r, pr.vars);
  return {exit_for(r.verdict), j};
}

Outcome run_fpure_old(const Problem& pr, std::uint64_t seed) {
  PairSpec pair = pair_of(pr);
  const std::uint64_t e_max = pr.e_max.value_or(2);
  const std::uint64_t bound = pr.degree_bound.value_or(default_degree_bound(pair));
  Json j = header(pr);
  CheckReport r = is_sharply_F_pure_old(pair, e_max, bound, seed);
  put_check(j, r, pr.vars);
  j["seed"] = seed;
  return {exit_for(r.verdict), j};
}

Outcome run_sfr(const Problem& pr) {
  PairSpec pair = pair_of(pr);
  const std::uint64_t e_max = pr.e_max.value_or(3);
  std::vector<Polynomial> ds;
  std::string hypothesis;
  if (pr.d) {
    ds = {*pr.d};
    hypothesis = "d = " + pr.d->str(pr.vars) + " is assumed to be a test element";
  } else if (pr.test_element) {
    ds = {*pr.test_element};
    hypothesis = "c = " + pr.test_element->str(pr.vars) + " is assumed to be a test element";
  } else {
    ds = default_d_candidates(pair);
    hypothesis = "the probed d (1, Jacobian minors, generators of a) stand in for all of R°";
  }
  auto probes = is_locally_strongly_F_regular(pair, ds, e_max);
  Json j = header(pr);
  Verdict v = Verdict::Yes;
  Json arr = Json::array();
  for (const auto& pb : probes) {
    Json x;
    put_check(x, pb.report, pr.vars);
    x["d"] = pb.d.str(pr.vars);
    arr.push_back(x);
    if (pb.report.verdict == Verdict::No) v = Verdict::No;
    if (pb.report.verdict == Verdict::Unknown && v == Verdict::Yes) v = Verdict::Unknown;
  }
  j["verdict"] = std::string(to_string(v));
  j["hypothesis"] = hypothesis;
  j["bounds"]["e_max"] = e_max;
  j["probes"] = arr;
  return {exit_for(v), j};
}

Outcome run_testideal(const Problem& pr) {
  PairSpec pair = pair_of(pr);
  const std::uint64_t e_cap = pr.e_cap.value_or(pr.e_max.value_or(3));
  Json j = header(pr);
  TestIdealResult r{Ideal(pr.p, pr.vars.size()), 0, 0, Exactness::LowerBound, {}};
  if (pr.defining.empty() && !pr.test_element && !pair.a_is_unit()) {
    r = test_ideal_regular(pair.a, pr.t, e_cap);
    j["path"] = "regular";
    j["test_element"] = nullptr;
    j["hypothesis"] = nullptr;
  } else {
    Polynomial c = pr.test_element ? *pr.test_element : pair_test_element(pair);
    r = test_ideal_quotient(pair, c, e_cap);
    j["path"] = "quotient";
    j["test_element"] = c.str(pr.vars);
    j["hypothesis"] = pr.test_element ? "user-supplied c is assumed to lie in the test ideal and in R°"
                                      : "c (Jacobian minor times a power of a generator of a) is assumed to lie "
                                        "in the test ideal";
  }
  j["verdict"] = std::string(to_string(r.exactness));
  j["tau"] = polys(r.tau.canonical().generators(), pr.vars);
  j["contains_one"] = r.tau.contains_one();
  j["stabilized_at_e"] = r.stabilized_at_e;
  j["e_cap"] = r.e_cap;
  j["notes"] = r.notes;
  return {r.exactness == Exactness::Exact ? kExitYes : kExitUnknown, j};
}

Outcome run_fpt(const Problem& pr) {
  RingPresentation ring = ring_of(pr);
  Ideal a(pr.p, pr.vars.size(), pr.a);
  const std::uint64_t e_max = pr.e_max.value_or(4);
  std::vector<Ideal> ms;
  if (pr.points.empty()) {
    ms.push_back(maximal_ideal(pr, origin(pr)));
  } else {
    for (const auto& pt : pr.points) ms.push_back(maximal_ideal(pr, pt));
  }
  FptInterval iv = ms.size() == 1 ? fpt_interval(ring, a, ms[0], e_max) : fpt_interval_global(ring, a, ms, e_max);
  Json j = header(pr);
  j.erase("t");
  j["verdict"] = "complete";
  j["mode"] = ms.size() == 1 ? "local" : "global";
  j["point"] = point_json(iv.nus.point);
  j["lower"] = iv.lower.str();
  j["upper"] = iv.upper.str();
  j["generators"] = iv.generators;
  Json nus = Json::array();
  for (const auto& en : iv.nus.entries) {
    Json x;
    x["e"] = en.e;
    x["q"] = en.q;
    x["nu"] = en.nu;
    nus.push_back(x);
  }
  j["nu"] = nus;
  j["bounds"]["e_max"] = e_max;
  return {kExitYes, j};
}

Outcome run_compatible(const Problem& pr) {
  if (!pr.j && pr.candidates.empty()) throw ContractError("compatible needs J or candidates");
  PairSpec pair = pair_of(pr);
  const std::uint64_t e_max = pr.e_max.value_or(2);
  Json j = header(pr);
  int code = kExitYes;
  if (pr.j) {
    Ideal jj(pr.p, pr.vars.size(), *pr.j);
    CheckReport r = is_uniformly_compatible(pair, jj, e_max);
    j["J"] = polys(*pr.j, pr.vars);
    put_check(j, r, pr.vars);
    code = exit_for(r.verdict);
    if (r.verdict == Verdict::Yes && !jj.contains_one()) {
      try {
        CheckReport q = quotient_F_pure_check(pair, jj, e_max);
        j["quotient_fpure"] = std::string(to_string(q.verdict));
      } catch (const ContractError& e) {
        j["quotient_fpure"] = std::string("skipped: ") + e.what();
      }
    } else {
      j["quotient_fpure"] = "skipped";
    }
  }
  if (!pr.candidates.empty()) {
    Json arr = Json::array();
    for (const auto& cand : pr.candidates) {
      Ideal ci(pr.p, pr.vars.size(), cand);
      Json x;
      x["ideal"] = polys(cand, pr.vars);
      x["verdict"] = std::string(to_string(is_uniformly_compatible(pair, ci, e_max).verdict));
      arr.push_back(x);
    }
    j["centers"] = arr;
    if (!pr.j) {
      j["verdict"] = "complete";
      j["bounds"]["e_max"] = e_max;
    }
  }
  return {code, j};
}

Outcome run_closure(const Problem& pr) {
  if (!pr.j || !pr.z) throw ContractError("closure needs J and z");
  PairSpec pair = pair_of(pr);
  const std::uint64_t e_min = pr.e_min.value_or(1);
  const std::uint64_t e_max = pr.e_max.value_or(3);
  ClosureReport r = frobenius_closure_membership(pair, Ideal(pr.p, pr.vars.size(), *pr.j), *pr.z, e_min, e_max);
  Json j = header(pr);
  j["J"] = polys(*pr.j, pr.vars);
  j["z"] = pr.z->str(pr.vars);
  j["verdict"] = std::string(to_string(r.verdict));
  j["failing_e"] = r.failing_e ? Json(*r.failing_e) : Json(nullptr);
  j["split_e"] = r.split_e ? Json(*r.split_e) : Json(nullptr);
  j["bounds"]["e_min"] = e_min;
  j["bounds"]["e_max"] = e_max;
  j["notes"] = r.notes;
  int code = r.verdict == ClosureVerdict::InClosure ? kExitYes
             : r.verdict == ClosureVerdict::NotInClosure ? kExitNo
                                                         : kExitUnknown;
  return {code, j};
}

void flatten(const Json& j, const std::string& prefix, std::string& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    }
  } else if (j.is_array()) {
    if (j.empty()) out += prefix + ": []\n";
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else if (j.is_string()) {
    out += prefix + ": " + j.get<std::string>() + "\n";
  } else if (j.is_null()) {
    out += prefix + ": -\n";
  } else {
    out += prefix + ": " + j.dump() + "\n";
  }
}

}  // namespace

Problem apply_options(Problem pr, const RunOptions& o) {
  if (o.cmd) {
    const auto& cmds = problem_commands();
    if (std::find(cmds.begin(), cmds.end(), *o.cmd) == cmds.end()) throw ContractError("unknown command '" + *o.cmd + "'");
    pr.cmd = *o.cmd;
  }
  if (o.e_max) {
    pr.e_max = *o.e_max;
    if (pr.cmd == "testideal") pr.e_cap = *o.e_max;
  }
  if (o.degree_bound) pr.degree_bound = *o.degree_bound;
  if (o.test_element) pr.test_element = parse_polynomial(*o.test_element, pr.vars, pr.p, 0);
  if (o.point) pr.points = {parse_point(*o.point, pr.p, pr.vars.size(), 0)};
  return pr;
}

Outcome run_problem(const Problem& pr, const RunOptions& o) {
  auto start = std::chrono::steady_clock::now();
  Outcome out{kExitError, Json()};
  if (pr.cmd.empty()) throw ContractError("no command given (cmd=... or a command argument)");
  if (pr.cmd == "fpure") {
    out = run_fpure(pr);
  } else if (pr.cmd == "fpure-old") {
    out = run_fpure_old(pr, o.seed);
  } else if (pr.cmd == "sfr") {
    out = run_sfr(pr);
  } else if (pr.cmd == "testideal") {
    out = run_testideal(pr);
  } else if (pr.cmd == "fpt") {
    out = run_fpt(pr);
  } else if (pr.cmd == "compatible") {
    out = run_compatible(pr);
  } else if (pr.cmd == "closure") {
    out = run_closure(pr);
  } else {
    throw ContractError("command '" + pr.cmd + "' takes a corpus file");
  }
  Json warnings = Json::array();
  if (!pr.defining.empty()) warnings.push_back(kReducedWarning);
  out.report["warnings"] = warnings;
  out.report["exit_code"] = out.exit_code;
  if (o.timing) {
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out.report["timing_ms"] = static_cast<std::int64_t>(ms);
  }
  return out;
}

Outcome run_hunt(const std::vector<Problem>& corpus, const RunOptions& o) {
  auto start = std::chrono::steady_clock::now();
  std::uint64_t e_max = o.e_max.value_or(2);
  std::vector<CorpusItem> items;
  std::uint64_t bound = o.degree_bound.value_or(0);
  for (const auto& pr : corpus) {
    items.push_back({pair_of(pr), pr.local});
    if (!o.degree_bound) bound = std::max(bound, pr.degree_bound.value_or(default_degree_bound(items.back().pair)));
  }
  DiscrepancySearch s = search_discrepancy(items, e_max, bound, o.seed);
  Json j;
  j["command"] = "hunt";
  j["verdict"] = "complete";
  j["corpus_size"] = corpus.size();
  j["bounds"]["e_max"] = e_max;
  j["bounds"]["degree_bound"] = bound;
  j["seed"] = o.seed;
  Json found = Json::array();
  for (const auto& c : s.candidates) {
    Json x;
    x["index"] = c.index;
    std::string one = print_problem(corpus[c.index]);
    one.pop_back();
    for (auto& ch : one) {
      if (ch == '\n') ch = ';';
    }
    x["problem"] = one;
    x["new_verdict"] = std::string(to_string(c.new_report.verdict));
    x["new_level_e"] = c.new_report.level_e ? Json(*c.new_report.level_e) : Json(nullptr);
    x["old_verdict"] = std::string(to_string(c.old_report.verdict));
    x["seed"] = c.seed;
    found.push_back(x);
  }
  j["findings"] = found;
  j["log"] = s.log;
  j["exit_code"] = kExitYes;
  if (o.timing) {
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    j["timing_ms"] = static_cast<std::int64_t>(ms);
  }
  return {kExitYes, j};
}

Outcome error_outcome(const std::string& code, const std::string& message) {
  Json j;
  j["error"]["code"] = code;
  j["error"]["message"] = message;
  j["exit_code"] = kExitError;
  return {kExitError, j};
}

std::string render_text(const Report& report) {
  std::string out;
  flatten(report, "", out);
  return out;
}

}  // namespace fpair
