// Acceptance run: one PASS/FAIL line per criterion.
//
// A criterion can fail because the statement it checks is false as printed.
// Those failures are listed in kKnownDefects by check name; the process exits
// 0 when every failing check is listed and every listed check still fails, so
// any new failure, or a listed one that stops reproducing, breaks the run.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "dicograph/decomposition.hpp"
#include "dicograph/miner.hpp"
#include "dicograph/patterns.hpp"
#include "dicograph/recognizers.hpp"

using namespace dicograph;

namespace {

const std::map<std::string, std::string> kKnownDefects = {
    // theorems
    {"ferres", "C3 is an anticircuit with x = y but has no D1, K2bidir or 2-switch"},
    // hierarchy: OT and OCTP are the same class
    {"OT < OCTP", "OT = OCTP (identity suite)"},
    {"OCWQT || OCTP", "OCTP = OT and OT < OCWQT"},
    {"OSC || OCTP", "OCTP = OT and OT < OSC"},
    {"DT || OCTP", "OCTP = OT and OT < DT"},
    {"FD || OCTP", "OCTP = OT and OT < FD"},
    {"TD || OCTP", "OCTP = OT and OT < DT < TD"},
    {"OTP || OCTP", "OCTP = OT and OT < OTP"},
    {"OCTP || DSC", "OCTP = OT and OT < DSC"},
    {"OCTP || DCSC", "OCTP = OT and OT < DCSC"},
    {"OCTP || DTP", "OCTP = OT and OT < DTP"},
    {"OCTP || OWQT", "OCTP = OT and OT is inside OWQT"},
    {"OCTP || DWQT", "OCTP = OT and OT is inside DWQT"},
    {"OCTP || DCWQT", "OCTP = OT and OT < DCSC < DCWQT"},
    // hierarchy: nested pairs drawn without a path
    {"OT || OWQT", "every obstruction of OWQT contains one of OT"},
    {"OCWQT || OWQT", "every obstruction of OWQT contains one of OCWQT"},
    {"OCWQT || DWQT", "every obstruction of DWQT contains one of OCWQT"},
    {"OSC || OWQT", "every obstruction of OWQT contains one of OSC"},
    {"OTP || OWQT", "every obstruction of OWQT contains one of OTP"},
    {"OTP || DWQT", "every obstruction of DWQT contains one of OTP"},
    {"DTP || DWQT", "every obstruction of DWQT contains one of DTP"},
    {"DCTP || DCWQT", "every obstruction of DCWQT contains one of DCTP"},
    {"OSC || FD", "OSC is inside FD on every digraph tested"},
    {"OSC || TD", "OSC is inside TD on every digraph tested"},
    {"FD || TD", "a 2-switch and C3 are both anticircuits"},
    {"undirected TP || CSC", "joins with K are joins with single vertices"},
    {"undirected CSC || WQT", "every obstruction of WQT contains one of CSC"},
};

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failing;  // check names
};

int unexplained = 0;

void report(int number, const std::string& title, const Outcome& o, double seconds) {
  std::printf("criterion %2d %-28s %s  (%.1fs)  %s\n", number, title.c_str(), o.pass ? "PASS" : "FAIL", seconds,
              o.detail.c_str());
  for (const auto& name : o.failing) {
    auto it = kKnownDefects.find(name);
    if (it != kKnownDefects.end()) {
      std::printf("    known defect: %s  [%s]\n", name.c_str(), it->second.c_str());
    } else {
      std::printf("    UNEXPECTED: %s\n", name.c_str());
      ++unexplained;
    }
  }
}

Outcome from_report(const VerificationReport& r) {
  Outcome o;
  std::size_t passed = 0;
  for (const auto& c : r.checks) {
    if (c.passed) {
      ++passed;
      if (kKnownDefects.count(c.name)) {
        std::printf("    listed defect no longer fails: %s\n", c.name.c_str());
        ++unexplained;
      }
    } else {
      o.failing.push_back(c.name);
    }
  }
  o.pass = o.failing.empty();
  o.detail = std::to_string(passed) + "/" + std::to_string(r.checks.size()) + " checks";
  return o;
}

template <typename F>
void run(int number, const std::string& title, F body) {
  const auto t0 = std::chrono::steady_clock::now();
  const Outcome o = body();
  report(number, title, o, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  std::fflush(stdout);
}

Outcome obstruction_sets() {
  Outcome o;
  const std::map<ClassId, int> anchors = {
      {ClassId::DC, 8}, {ClassId::OC, 4}, {ClassId::DT, 18}, {ClassId::DTP, 15}, {ClassId::OT, 6}};
  int classes = 0;
  int confirmed = 0;
  for (ClassId id : kAllClasses) {
    if (!has_constructive_definition(id)) continue;
    ++classes;
    const ObstructionReport r = minimal_forbidden(id, 5);
    confirmed += r.count(ObstructionVerdict::Confirmed);
    bool ok = r.all_confirmed();
    if (auto a = anchors.find(id); a != anchors.end() && r.count(ObstructionVerdict::Confirmed) != a->second) {
      ok = false;
    }
    for (const auto& x : r.entries) {
      for (const auto& y : r.entries) {
        if (x.code != y.code && contains_induced(digraph_from_code(y.code), digraph_from_code(x.code))) ok = false;
      }
    }
    if (!ok) o.failing.push_back("mine " + std::string(to_string(id)));
  }
  o.pass = o.failing.empty();
  o.detail = std::to_string(classes) + " classes, " + std::to_string(confirmed) + " obstructions confirmed";
  return o;
}

Outcome six_vertex() {
  Outcome o = from_report(verify_six_vertex_patterns());
  std::set<std::string> covered;
  for (const auto& c : verify_six_vertex_patterns().checks) covered.insert(c.name.substr(0, c.name.find(' ')));
  for (const char* n : {"Q3", "Q7", "coQ3", "coQ7", "D21", "D22", "D23"}) {
    if (!covered.count(n)) {
      o.pass = false;
      o.failing.push_back(std::string(n) + " not checked");
    }
  }
  return o;
}

// A directed threshold digraph with about 4n arcs: position i gets a
// non-zero digit with probability 4/i, which adds i or 2i arcs.
std::vector<Arc> threshold_instance(int n, std::mt19937& rng) {
  std::uniform_real_distribution<double> unit(0, 1);
  std::uniform_int_distribution<int> kind(1, 3);
  std::string digits = "1";
  for (int i = 1; i < n; ++i) digits += unit(rng) < 4.0 / i ? static_cast<char>('0' + kind(rng)) : '0';
  std::vector<Arc> arcs = replay_arcs(digits);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (auto& [u, v] : arcs) {
    u = perm[u];
    v = perm[v];
  }
  std::shuffle(arcs.begin(), arcs.end(), rng);
  return arcs;
}

Outcome creation_sequence_scaling() {
  Outcome o;
  std::mt19937 rng(2024);
  std::vector<double> per_item;
  std::string detail;
  for (int n : {1000, 10000, 100000}) {
    const auto arcs = threshold_instance(n, rng);
    const double size = n + static_cast<double>(arcs.size());
    const int reps = std::max(1, static_cast<int>(4e6 / size));
    double best = 1e30;
    for (int round = 0; round < 5; ++round) {
      const auto t0 = std::chrono::steady_clock::now();
      for (int r = 0; r < reps; ++r) {
        if (!creation_sequence(n, arcs, true)) {
          o.failing.push_back("generated digraph on " + std::to_string(n) + " vertices rejected");
          o.pass = false;
          return o;
        }
      }
      best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps);
    }
    per_item.push_back(best / size * 1e9);
    char buf[96];
    std::snprintf(buf, sizeof buf, "n=%d m=%zu %.1fns/(n+m); ", n, arcs.size(), per_item.back());
    detail += buf;
  }
  const double ratio = per_item.back() / per_item.front();
  char buf[48];
  std::snprintf(buf, sizeof buf, "ratio %.2f (limit 3)", ratio);
  o.detail = detail + buf;
  o.pass = ratio <= 3.0;
  if (!o.pass) o.failing.push_back("creation-sequence scaling");
  return o;
}

}  // namespace

int main() {
  run(1, "obstruction sets", obstruction_sets);
  run(2, "route agreement", [] { return from_report(verify_route_agreement(5)); });
  run(3, "six-vertex minimality", six_vertex);
  run(4, "theorem suite", [] { return from_report(verify_theorems(5)); });
  run(5, "closure suite", [] { return from_report(verify_closures(5)); });
  run(6, "hierarchy suite", [] { return from_report(verify_hierarchy(5)); });
  run(7, "identity suite", [] { return from_report(verify_identities(5)); });
  run(8, "orientation suite", [] { return from_report(verify_orientations(5)); });
  run(9, "projection suite", [] { return from_report(verify_projections(5)); });
  run(10, "creation-sequence scaling", creation_sequence_scaling);
  if (unexplained) {
    std::printf("%d failure(s) not accounted for\n", unexplained);
    return 1;
  }
  std::printf("every failing check is a listed defect of the source statements\n");
  return 0;
}
