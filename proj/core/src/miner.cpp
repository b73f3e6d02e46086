#include "dicograph/miner.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "dicograph/decomposition.hpp"
#include "dicograph/patterns.hpp"
#include "dicograph/recognizers.hpp"
#include "dicograph/undirected.hpp"

namespace dicograph {

// ---------------------------------------------------------------------------
// Enumeration

namespace {

class Deadline {
 public:
  explicit Deadline(double seconds)
      : limited_(seconds > 0),
        end_(std::chrono::steady_clock::now() +
             std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                 std::chrono::duration<double>(seconds))) {}
  bool passed() const { return limited_ && std::chrono::steady_clock::now() > end_; }

 private:
  bool limited_;
  std::chrono::steady_clock::time_point end_;
};

int worker_count(const RunOptions& opts) {
  if (opts.jobs > 0) return opts.jobs;
  return std::max(1U, std::thread::hardware_concurrency());
}

// Labeled digraph from a base-4 code: pair (u, v), u < v, in lexicographic
// order takes state 0 none, 1 u->v, 2 v->u, 3 both.
Digraph labeled_digraph(int n, std::uint64_t code) {
  Digraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const unsigned s = code & 3U;
      code >>= 2;
      if (s & 1U) g.add_arc(u, v);
      if (s & 2U) g.add_arc(v, u);
    }
  }
  return g;
}

void sort_unique(std::vector<std::uint64_t>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Runs body(begin, end, out) over [0, total) in contiguous chunks and merges
// the per-chunk outputs into one sorted, duplicate-free vector.
template <typename Body>
std::vector<std::uint64_t> chunked(std::uint64_t total, int jobs, Body body) {
  const std::uint64_t chunks = std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs), total);
  std::vector<std::vector<std::uint64_t>> parts(chunks);
  std::vector<std::thread> threads;
  for (std::uint64_t c = 0; c < chunks; ++c) {
    const std::uint64_t begin = total * c / chunks;
    const std::uint64_t end = total * (c + 1) / chunks;
    auto run = [&, c, begin, end] {
      body(begin, end, parts[c]);
      sort_unique(parts[c]);
    };
    if (chunks == 1) {
      run();
    } else {
      threads.emplace_back(run);
    }
  }
  for (auto& t : threads) t.join();
  std::vector<std::uint64_t> merged;
  for (auto& p : parts) merged.insert(merged.end(), p.begin(), p.end());
  sort_unique(merged);
  return merged;
}

std::vector<std::uint64_t> enumerate_labeled(int n, const RunOptions& opts) {
  const int pairs = n * (n - 1) / 2;
  const std::uint64_t total = std::uint64_t{1} << (2 * pairs);
  return chunked(total, worker_count(opts), [n](std::uint64_t b, std::uint64_t e, auto& out) {
    for (std::uint64_t code = b; code < e; ++code) out.push_back(canonical_code(labeled_digraph(n, code)));
  });
}

// One-vertex extensions of the given representatives, deduplicated. `keep`
// filters candidates before canonicalization.
template <typename Keep>
std::vector<std::uint64_t> extend_by_one(const std::vector<std::uint64_t>& reps, const RunOptions& opts,
                                         Keep keep, bool& out_of_time) {
  Deadline deadline(opts.budget_seconds);
  std::atomic<bool> expired{false};
  auto result = chunked(reps.size(), worker_count(opts), [&](std::uint64_t b, std::uint64_t e, auto& out) {
    for (std::uint64_t i = b; i < e; ++i) {
      if (expired.load(std::memory_order_relaxed)) return;
      if ((i & 63U) == 0 && deadline.passed()) {
        expired = true;
        return;
      }
      const Digraph base = digraph_from_code(reps[i]);
      const int k = base.order();
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << (2 * k)); ++m) {
        Digraph g(k + 1);
        for (auto [u, v] : base.arcs()) g.add_arc(u, v);
        for (int u = 0; u < k; ++u) {
          const unsigned s = (m >> (2 * u)) & 3U;
          if (s & 1U) g.add_arc(u, k);
          if (s & 2U) g.add_arc(k, u);
        }
        if (keep(g)) out.push_back(canonical_code(g));
      }
    }
  });
  out_of_time = expired.load();
  return result;
}

std::mutex& enum_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

const std::vector<std::uint64_t>& enumerate_digraphs(int n, const RunOptions& opts) {
  if (n < 1 || n > 6) throw std::invalid_argument("enumerate_digraphs supports 1 <= n <= 6");
  static std::array<std::vector<std::uint64_t>, 7> cache;
  {
    std::lock_guard lock(enum_mutex());
    if (!cache[n].empty()) return cache[n];
  }
  std::vector<std::uint64_t> reps;
  if (n <= 5) {
    reps = enumerate_labeled(n, opts);
  } else {
    const auto& five = enumerate_digraphs(5, opts);
    bool out_of_time = false;
    reps = extend_by_one(five, opts, [](const Digraph&) { return true; }, out_of_time);
    if (out_of_time) throw BudgetExceeded("enumeration of 6-vertex digraphs ran out of time");
  }
  std::lock_guard lock(enum_mutex());
  if (cache[n].empty()) cache[n] = std::move(reps);
  return cache[n];
}

std::vector<UndirectedGraph> enumerate_undirected(int n) {
  if (n < 1 || n > 7) throw std::invalid_argument("enumerate_undirected supports 1 <= n <= 7");
  const int pairs = n * (n - 1) / 2;
  std::vector<std::uint64_t> codes;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    Digraph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v, ++bit) {
        if ((mask >> bit) & 1U) {
          g.add_arc(u, v);
          g.add_arc(v, u);
        }
      }
    }
    codes.push_back(canonical_code(g));
  }
  sort_unique(codes);
  std::vector<UndirectedGraph> out;
  out.reserve(codes.size());
  for (std::uint64_t c : codes) out.push_back(underlying(digraph_from_code(c)));
  return out;
}

bool member(const Digraph& g, ClassId id) {
  if (has_constructive_definition(id)) return member_constructive(g, id).member;
  return member_by_patterns(g, id).member;
}

// ---------------------------------------------------------------------------
// Obstruction mining

std::string_view to_string(ObstructionVerdict v) {
  switch (v) {
    case ObstructionVerdict::Confirmed: return "confirmed";
    case ObstructionVerdict::Missing: return "missing";
    case ObstructionVerdict::Extra: return "extra";
  }
  return "?";
}

int ObstructionReport::count(ObstructionVerdict v) const {
  return static_cast<int>(std::count_if(entries.begin(), entries.end(),
                                        [v](const ObstructionEntry& e) { return e.verdict == v; }));
}

bool ObstructionReport::all_confirmed() const {
  return !budget_exceeded && count(ObstructionVerdict::Missing) == 0 && count(ObstructionVerdict::Extra) == 0;
}

namespace {

bool deletions_inside(const Digraph& g, ClassId id) {
  for (int v = 0; v < g.order(); ++v) {
    if (!member(delete_vertex(g, v), id)) return false;
  }
  return true;
}

}  // namespace

ObstructionReport minimal_forbidden(ClassId id, int n_max, const RunOptions& opts) {
  if (!has_constructive_definition(id)) {
    throw std::invalid_argument(std::string(to_string(id)) + " has no recursive definition to mine");
  }
  if (n_max < 1 || n_max > 6) throw std::invalid_argument("mining supports 1 <= n_max <= 6");
  ObstructionReport report;
  report.id = id;
  report.n_max = n_max;

  std::vector<std::uint64_t> found;
  std::vector<std::uint64_t> members5;
  for (int n = 2; n <= std::min(n_max, 5); ++n) {
    for (std::uint64_t code : enumerate_digraphs(n, opts)) {
      const Digraph g = digraph_from_code(code);
      if (member(g, id)) {
        if (n == 5) members5.push_back(code);
        continue;
      }
      if (deletions_inside(g, id)) found.push_back(code);
    }
  }
  if (n_max == 6) {
    // A 6-vertex minimal obstruction has every 5-vertex induced subdigraph in
    // the class, so extending class members is enough.
    bool out_of_time = false;
    auto six = extend_by_one(
        members5, opts, [id](const Digraph& g) { return !member(g, id) && deletions_inside(g, id); },
        out_of_time);
    found.insert(found.end(), six.begin(), six.end());
    report.budget_exceeded = out_of_time;
  }
  sort_unique(found);

  std::map<std::uint64_t, std::string> expected;
  for (const Pattern* p : catalog(id).patterns) {
    if (p->graph.order() > n_max) {
      report.beyond_bound.push_back(p->name);
    } else {
      expected.emplace(canonical_code(p->graph), p->name);
    }
  }
  for (std::uint64_t code : found) {
    auto it = expected.find(code);
    if (it != expected.end()) {
      report.entries.push_back({ObstructionVerdict::Confirmed, it->second, code});
      expected.erase(it);
    } else {
      report.entries.push_back({ObstructionVerdict::Extra, "", code});
    }
  }
  // A partial report cannot call anything missing.
  if (!report.budget_exceeded) {
    for (const auto& [code, name] : expected) report.entries.push_back({ObstructionVerdict::Missing, name, code});
  }
  return report;
}

// ---------------------------------------------------------------------------
// Verification suites

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

namespace {

std::string text_of(const Digraph& g) { return canonical_text(g); }

// A digraph with its pattern containment profile, computed once.
struct Sample {
  Digraph g;
  UndirectedGraph un;
  std::uint64_t contains = 0;  // bit i: all_patterns()[i] occurs
};

Sample make_sample(const Digraph& g) {
  Sample s{g, underlying(g), 0};
  const auto& pats = all_patterns();
  for (std::size_t i = 0; i < pats.size(); ++i) {
    if (contains_induced(g, pats[i].graph)) s.contains |= std::uint64_t{1} << i;
  }
  return s;
}

const std::vector<Sample>& samples(int n_max) {
  static std::mutex m;
  static std::vector<Sample> cache;
  static int cached_n = 0;
  std::lock_guard lock(m);
  for (int n = cached_n + 1; n <= n_max; ++n) {
    for (std::uint64_t code : enumerate_digraphs(n)) cache.push_back(make_sample(digraph_from_code(code)));
    cached_n = n;
  }
  static std::vector<Sample> view;
  view.assign(cache.begin(),
              std::find_if(cache.begin(), cache.end(), [n_max](const Sample& s) { return s.g.order() > n_max; }));
  return view;
}

using Pred = std::function<bool(const Sample&)>;

std::uint64_t pattern_bits(const std::vector<std::string_view>& names) {
  const auto& pats = all_patterns();
  std::uint64_t bits = 0;
  for (std::string_view n : names) {
    const Pattern* p = &pattern(n);
    bits |= std::uint64_t{1} << (p - pats.data());
  }
  return bits;
}

Pred free_of(const std::vector<std::string_view>& names) {
  const std::uint64_t bits = pattern_bits(names);
  return [bits](const Sample& s) { return (s.contains & bits) == 0; };
}

Pred in_class(ClassId id) {
  return [id](const Sample& s) { return member(s.g, id); };
}

Pred un_free(std::initializer_list<UPattern> ps) {
  std::vector<UPattern> list(ps);
  return [list](const Sample& s) {
    return std::none_of(list.begin(), list.end(), [&](UPattern p) { return contains_induced_u(s.un, p); });
  };
}

Pred un_in(UClassId id) {
  return [id](const Sample& s) { return member_u(s.un, id); };
}

Pred transitive() {
  return [](const Sample& s) { return is_transitive(s.g); };
}

Pred both(Pred a, Pred b) {
  return [a, b](const Sample& s) { return a(s) && b(s); };
}

struct Theorem {
  std::string name;
  std::vector<std::pair<std::string, Pred>> items;
  Pred domain;  // empty = every digraph
};

Check check_theorem(const Theorem& t, const std::vector<Sample>& pool) {
  Check c{t.name, true, "-", ""};
  std::size_t tested = 0;
  std::size_t failures = 0;
  for (const Sample& s : pool) {
    if (t.domain && !t.domain(s)) continue;
    ++tested;
    const bool first = t.items[0].second(s);
    for (std::size_t i = 1; i < t.items.size(); ++i) {
      const bool other = t.items[i].second(s);
      if (other == first) continue;
      if (failures++ == 0) {
        c.canonical = text_of(s.g);
        c.details = "item " + t.items[0].first + "=" + (first ? "true" : "false") + " but item " +
                    t.items[i].first + "=" + (other ? "true" : "false");
      }
      break;
    }
  }
  c.passed = failures == 0;
  std::string items;
  for (const auto& [label, _] : t.items) items += (items.empty() ? "" : ",") + label;
  if (c.passed) {
    c.details = "items " + items + " agree on " + std::to_string(tested) + " digraphs";
  } else {
    c.details += "; " + std::to_string(failures) + " of " + std::to_string(tested) + " digraphs disagree";
  }
  return c;
}

Check implication(const std::string& name, const std::vector<Sample>& pool, const Pred& premise,
                  const Pred& conclusion) {
  Check c{name, true, "-", ""};
  std::size_t tested = 0;
  for (const Sample& s : pool) {
    if (!premise(s)) continue;
    ++tested;
    if (!conclusion(s)) {
      c.passed = false;
      c.canonical = text_of(s.g);
      c.details = "premise holds, conclusion fails";
      return c;
    }
  }
  c.details = "holds on " + std::to_string(tested) + " digraphs meeting the premise";
  return c;
}

// Builds `g` by repeatedly adding a vertex of one kind: true for sources
// adjacent to all earlier vertices, false for such sinks.
bool built_by_dominating(const Digraph& g, bool source) {
  VertexMask alive = g.all_vertices();
  while (std::popcount(alive) > 1) {
    bool peeled = false;
    for (VertexMask m = alive; m; m &= m - 1) {
      const int v = std::countr_zero(m);
      const VertexMask others = alive & ~(VertexMask{1} << v);
      const VertexMask out = g.out_mask(v) & others;
      const VertexMask in = g.in_mask(v) & others;
      if ((source && out == others && !in) || (!source && in == others && !out)) {
        alive = others;
        peeled = true;
        break;
      }
    }
    if (!peeled) return false;
  }
  return true;
}

std::vector<Theorem> theorems() {
  using C = ClassId;
  using U = UPattern;
  std::vector<Theorem> t;
  t.push_back({"th-ch-dco",
               {{"1", in_class(C::DC)},
                {"2", free_of({"D1", "D2", "D3", "D4", "D5", "D6", "D7", "D8"})},
                {"2aa", both(free_of({"D1", "D2", "D3", "D4", "D5", "D6"}), un_free({U::P4}))},
                {"2a", both(free_of({"D1", "D2", "D3", "D4", "D5", "D6"}), un_in(UClassId::C))}},
               {}});
  t.push_back({"th-ch-oco",
               {{"1", in_class(C::OC)},
                {"2", free_of({"D1", "D5", "D8", "K2bidir"})},
                {"3a", both(free_of({"D1", "D5", "K2bidir"}), un_free({U::P4}))},
                {"3", both(free_of({"D1", "D5", "K2bidir"}), un_in(UClassId::C))},
                {"6", both(transitive(), free_of({"K2bidir", "D8"}))}},
               {}});
  const std::vector<std::string_view> dtp_core = {"D1", "D2", "D3", "D4", "D5", "D6", "D10", "D11", "D13", "D14", "D15"};
  t.push_back({"ch-dtp",
               {{"1", in_class(C::DTP)},
                {"2", free_of({"D1", "D2", "D3", "D4", "D5", "D6", "D7", "D8", "D9", "D10", "D11", "D12",
                               "D13", "D14", "D15"})},
                {"4", both(free_of(dtp_core), un_free({U::C4, U::P4}))},
                {"3", both(free_of(dtp_core), un_in(UClassId::TP))}},
               {}});
  const std::vector<std::string_view> dctp_core = {"D1", "D2", "D3", "D4", "D5", "D6", "D12", "D13", "D14", "D15"};
  t.push_back({"dctp",
               {{"1", in_class(C::DCTP)},
                {"2", free_of({"D1", "D2", "D3", "D4", "D5", "D6", "D7", "D8", "coD11", "coD10", "coD9", "D12",
                               "D13", "D14", "D15"})},
                {"3", both(free_of(dctp_core), un_free({U::P4, U::TwoK2}))},
                {"4", both(free_of(dctp_core), un_in(UClassId::CTP))}},
               {}});
  t.push_back({"char-otop",
               {{"1", in_class(C::OTP)},
                {"2", free_of({"D1", "D5", "D8", "D12", "K2bidir"})},
                {"3a", both(free_of({"D1", "D5", "K2bidir"}), un_free({U::C4, U::P4}))},
                {"3", both(free_of({"D1", "D5", "K2bidir"}), un_in(UClassId::TP))},
                {"4", both(transitive(), free_of({"K2bidir", "D8", "D12"}))}},
               {}});
  const std::vector<std::string_view> dwqt_core = {"D1", "D2", "D3", "D4", "D5", "D6", "Q1", "Q2", "Q4", "Q5", "Q6"};
  t.push_back({"char-dwqt",
               {{"1", in_class(C::DWQT)},
                {"2", free_of({"D1", "D2", "D3", "D4", "D5", "D6", "D7", "D8", "Q1", "Q2", "Q3", "Q4", "Q5",
                               "Q6", "Q7"})},
                {"3", both(free_of(dwqt_core), un_free({U::P4, U::CoTwoP3}))},
                {"4", both(free_of(dwqt_core), un_in(UClassId::WQT))}},
               {}});
  t.push_back({"char-owqt",
               {{"1", in_class(C::OWQT)},
                {"2", free_of({"D1", "D5", "D8", "K2bidir", "Q7"})},
                {"3", both(free_of({"D8", "K2bidir", "Q7"}), transitive())},
                {"4", both(free_of({"D1", "D5", "K2bidir"}), un_in(UClassId::WQT))}},
               {}});
  t.push_back({"char-dcwqt",
               {{"1", in_class(C::DCWQT)},
                {"2", free_of({"D1", "D2", "D3", "D4", "D5", "D6", "D7", "D8", "coQ1", "coQ2", "coQ3", "coQ4",
                               "coQ5", "coQ6", "coQ7"})}},
               {}});
  t.push_back({"char-ocwqt",
               {{"1", in_class(C::OCWQT)},
                {"2", free_of({"D1", "D5", "D8", "K2bidir", "D12", "D21", "D22", "D23"})},
                {"3", both(in_class(C::OC), free_of({"D12", "D21", "D22", "D23"}))},
                {"4", both(free_of({"D8", "K2bidir", "D12", "D21", "D22", "D23"}), transitive())}},
               {}});
  const std::vector<std::string_view> dc_q = {"D1", "D2", "D3", "D4", "D5", "D6", "D7", "D8",
                     "Q1", "Q2", "Q3", "Q4", "Q5", "Q6", "Q7"};
  t.push_back({"char-dsc",
               {{"1", in_class(C::DSC)},
                {"2", free_of({"D1", "D2", "D3", "D4", "D5", "D6", "D7", "D8", "Q1", "Q2", "Q3", "Q4", "Q5",
                               "Q6", "Q7", "coD9", "coD10", "coD11"})},
                {"3", both(free_of(dc_q), un_free({U::P4, U::CoTwoP3, U::TwoK2}))},
                {"4", both(free_of(dc_q), un_in(UClassId::SC))}},
               {}});
  t.push_back({"char-osc",
               {{"1", in_class(C::OSC)},
                {"2", free_of({"D1", "D5", "D8", "Q7", "coD11", "K2bidir"})},
                {"3", both(free_of({"D8", "Q7", "coD11", "K2bidir"}), transitive())}},
               {}});
  t.push_back({"char-dcsc",
               {{"1", in_class(C::DCSC)},
                {"2", free_of({"D1", "D2", "D3", "D4", "D5", "D6", "D7", "D8", "coQ1", "coQ2", "coQ3", "coQ4",
                               "coQ5", "coQ6", "coQ7", "Q1", "D9", "D10"})},
                {"3", both(free_of({"D1", "D2", "D3", "D4", "D5", "D6", "D7", "D8", "coQ1", "coQ4", "coQ5",
                                    "coQ6", "Q1", "D10"}),
                           un_in(UClassId::CSC))}},
               {}});
  t.push_back({"t-dtp",
               {{"1", in_class(C::DT)},
                {"2", free_of({"D1", "D2", "D3", "D4", "D5", "D6", "D7", "D8", "D9", "D10", "D11", "D12", "D13",
                               "D14", "D15", "coD11", "coD10", "coD9"})},
                {"2aa", both(free_of(dtp_core), un_free({U::P4, U::TwoK2, U::C4}))},
                {"2a", both(free_of(dtp_core), un_in(UClassId::T))},
                {"8", [](const Sample& s) {
                   return member(s.g, C::DTP) && member(complement(s.g), C::DTP);
                 }}},
               {}});
  t.push_back({"oriented-threshold",
               {{"1", in_class(C::OT)},
                {"2", both(free_of({"D1", "D5"}), un_free({U::TwoK2, U::C4, U::P4}))},
                {"3", both(transitive(), un_in(UClassId::T))},
                {"4", [](const Sample& s) { return creation_sequence(s.g, false).has_value(); }}},
               [](const Sample& s) { return is_oriented(s.g); }});
  t.push_back({"char-oc",
               {{"1", in_class(C::OT)},
                {"1a", in_class(C::OCTP)},
                {"2", free_of({"D1", "D5", "D8", "D12", "2P2", "K2bidir"})},
                {"3", both(free_of({"D1", "D5", "K2bidir"}), un_free({U::TwoK2, U::C4, U::P4}))},
                {"4", both(free_of({"D1", "D5", "K2bidir"}), un_in(UClassId::T))},
                {"6", both(free_of({"D1", "D5", "D12", "K2bidir"}), un_free({U::P4, U::TwoK2}))},
                {"7", both(free_of({"D1", "D5", "D12", "K2bidir"}), un_in(UClassId::CTP))},
                {"8", both(free_of({"D1", "D5", "D12", "2P2", "K2bidir"}), un_free({U::P4}))},
                {"9", both(free_of({"D1", "D5", "D12", "2P2", "K2bidir"}), un_in(UClassId::C))},
                {"5", both(transitive(), free_of({"D8", "D12", "2P2", "K2bidir"}))}},
               {}});
  t.push_back({"le-tt",
               {{"1", [](const Sample& s) { return is_tournament(s.g) && is_transitive(s.g); }},
                {"2", [](const Sample& s) { return is_tournament(s.g) && is_acyclic(s.g); }},
                {"3", [](const Sample& s) { return is_tournament(s.g) && !contains_induced(s.g, pattern("D5").graph); }},
                {"4", [](const Sample& s) { return built_by_dominating(s.g, true); }},
                {"5", [](const Sample& s) { return built_by_dominating(s.g, false); }}},
               {}});
  t.push_back({"creation-sequence",
               {{"DT", in_class(C::DT)},
                {"greedy", [](const Sample& s) { return creation_sequence(s.g, true).has_value(); }},
                {"exhaustive", [](const Sample& s) { return creation_sequence_exists_exhaustive(s.g, true); }}},
               {}});
  t.push_back({"creation-sequence-oriented",
               {{"OT", in_class(C::OT)},
                {"greedy", [](const Sample& s) { return creation_sequence(s.g, false).has_value(); }},
                {"exhaustive", [](const Sample& s) { return creation_sequence_exists_exhaustive(s.g, false); }}},
               {}});
  t.push_back({"ferres",
               {{"no-anticircuit", [](const Sample& s) {
                  return !match_partial(s.g, alternating_anticircuit()).has_value();
                }},
                {"free(D1,K2bidir)+no-2-switch", [](const Sample& s) {
                   return (s.contains & pattern_bits({"D1", "K2bidir"})) == 0 &&
                          !match_partial(s.g, two_switch()).has_value();
                 }}},
               {}});
  // The form above misses C3, which is an anticircuit with x = y; adding D5
  // to the forbidden set repairs it.
  t.push_back({"ferres-with-D5",
               {{"no-anticircuit", [](const Sample& s) {
                  return !match_partial(s.g, alternating_anticircuit()).has_value();
                }},
                {"free(D1,D5,K2bidir)+no-2-switch", [](const Sample& s) {
                   return (s.contains & pattern_bits({"D1", "D5", "K2bidir"})) == 0 &&
                          !match_partial(s.g, two_switch()).has_value();
                 }}},
               {}});
  return t;
}

std::vector<Sample> tournaments(int n) {
  std::vector<Sample> out;
  const int pairs = n * (n - 1) / 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    Digraph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v, ++bit) {
        if ((mask >> bit) & 1U) {
          g.add_arc(u, v);
        } else {
          g.add_arc(v, u);
        }
      }
    }
    out.push_back(make_sample(g));
  }
  return out;
}

}  // namespace

VerificationReport verify_theorems(int n_max) {
  VerificationReport r{"theorems", {}};
  const auto& pool = samples(n_max);
  for (const Theorem& t : theorems()) {
    r.checks.push_back(check_theorem(t, pool));
    if (t.name == "le-tt") {
      Theorem on_tournaments = t;
      on_tournaments.name = "le-tt (tournaments, 6 vertices)";
      r.checks.push_back(check_theorem(on_tournaments, tournaments(6)));
    }
  }
  r.checks.push_back(implication("le-co-t", pool, free_of({"K2bidir", "D1", "D5"}), transitive()));
  r.checks.push_back(implication("oc-acyclic", pool, in_class(ClassId::OC),
                                 [](const Sample& s) { return is_acyclic(s.g); }));
  r.checks.push_back(implication("dt-no-2-switch", pool, in_class(ClassId::DT), [](const Sample& s) {
    return !match_partial(s.g, two_switch()).has_value();
  }));
  return r;
}

// ---------------------------------------------------------------------------

namespace {

struct Diagram {
  std::vector<std::string> nodes;
  std::vector<std::pair<std::string, std::string>> edges;
};

Diagram directed_diagram() {
  return {{"OT", "OCWQT", "OSC", "DT", "FD", "TD", "OTP", "OCTP", "DSC", "OWQT", "DCSC", "DTP", "DCTP", "OC",
           "DWQT", "DCWQT", "DC"},
          {{"OT", "DT"},      {"OCWQT", "OTP"}, {"OT", "OTP"},    {"OSC", "DSC"},   {"OSC", "OC"},
           {"DT", "DTP"},     {"OTP", "DTP"},   {"OCTP", "DCTP"}, {"OTP", "OC"},    {"OCTP", "OC"},
           {"DSC", "DWQT"},   {"OWQT", "DWQT"}, {"OWQT", "OC"},   {"DCSC", "DCWQT"}, {"DTP", "DC"},
           {"DCTP", "DC"},    {"OC", "DC"},     {"DWQT", "DC"},   {"DCWQT", "DC"},  {"DT", "DSC"},
           {"DT", "DCSC"},    {"OT", "OSC"},    {"OT", "OCWQT"},  {"DT", "DCTP"},   {"OT", "OCTP"},
           {"OT", "FD"},      {"DT", "TD"}}};
}

Diagram undirected_diagram() {
  return {{"T", "TP", "SC", "CSC", "WQT", "CTP", "CWQT", "C"},
          {{"T", "TP"}, {"T", "SC"}, {"T", "CSC"}, {"TP", "WQT"}, {"SC", "WQT"}, {"SC", "CTP"},
           {"CSC", "CWQT"}, {"WQT", "C"}, {"CTP", "CWQT"}, {"CWQT", "C"}}};
}

// Checks every figure edge and every unconnected pair. Witnesses are looked
// up in `pool` first and then in `larger()`, built on first use.
template <typename Item, typename Member, typename Show>
void check_diagram(const Diagram& d, const std::vector<Item>& pool, std::function<std::vector<Item>()> larger,
                   Member member_of, Show show, const std::function<std::string(const std::string&, const std::string&)>& prove,
                   const std::string& prefix, VerificationReport& r) {
  const std::size_t k = d.nodes.size();
  auto index = [&](const std::string& name) {
    return static_cast<std::size_t>(std::find(d.nodes.begin(), d.nodes.end(), name) - d.nodes.begin());
  };
  auto matrix = [&](const std::vector<Item>& items) {
    std::vector<std::vector<char>> in(items.size(), std::vector<char>(k));
    for (std::size_t i = 0; i < items.size(); ++i) {
      for (std::size_t c = 0; c < k; ++c) in[i][c] = member_of(items[i], d.nodes[c]);
    }
    return in;
  };
  const auto in = matrix(pool);
  std::vector<Item> big;
  std::vector<std::vector<char>> in_big;
  bool big_ready = !larger;

  std::vector<std::vector<char>> reach(k, std::vector<char>(k, 0));
  for (const auto& [a, b] : d.edges) reach[index(a)][index(b)] = 1;
  for (std::size_t m = 0; m < k; ++m)
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b)
        if (reach[a][m] && reach[m][b]) reach[a][b] = 1;

  auto first_in_a_not_b = [&](std::size_t a, std::size_t b) -> std::optional<std::string> {
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (in[i][a] && !in[i][b]) return show(pool[i]);
    }
    if (!big_ready) {
      big = larger();
      in_big = matrix(big);
      big_ready = true;
    }
    for (std::size_t i = 0; i < big.size(); ++i) {
      if (in_big[i][a] && !in_big[i][b]) return show(big[i]);
    }
    return std::nullopt;
  };

  for (const auto& [an, bn] : d.edges) {
    const std::size_t a = index(an), b = index(bn);
    Check c{prefix + an + " < " + bn, true, "-", ""};
    if (auto bad = first_in_a_not_b(a, b)) {
      c.passed = false;
      c.canonical = *bad;
      c.details = "member of " + an + " outside " + bn;
    } else if (auto wit = first_in_a_not_b(b, a)) {
      c.canonical = *wit;
      c.details = "inclusion holds; strictness witness in " + bn + " only";
    } else {
      c.passed = false;
      c.details = "inclusion holds but no strictness witness: the classes agree on every tested graph";
    }
    r.checks.push_back(c);
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      if (reach[a][b] || reach[b][a]) continue;
      Check c{prefix + d.nodes[a] + " || " + d.nodes[b], true, "-", ""};
      const auto ab = first_in_a_not_b(a, b);
      const auto ba = first_in_a_not_b(b, a);
      if (ab && ba) {
        c.canonical = *ab + " ; " + *ba;
        c.details = "witnesses in " + d.nodes[a] + " only and in " + d.nodes[b] + " only";
      } else {
        c.passed = false;
        if (ab) c.canonical = *ab;
        if (ba) c.canonical = *ba;
        c.details = !ab && !ba ? "no witness either way: the classes agree on every tested graph"
                    : !ab      ? d.nodes[a] + " is contained in " + d.nodes[b] + " on every tested graph"
                               : d.nodes[b] + " is contained in " + d.nodes[a] + " on every tested graph";
        if (!ab) c.details += prove(d.nodes[a], d.nodes[b]);
        if (!ba) c.details += prove(d.nodes[b], d.nodes[a]);
      }
      r.checks.push_back(c);
    }
  }
}

// "; proved ..." when every obstruction of `big` contains one of `small`,
// which makes small a subclass of big at every order.
std::string prove_directed(const std::string& small, const std::string& big) {
  const Catalog cs = catalog(*parse_class(small));
  const Catalog cb = catalog(*parse_class(big));
  if (cs.partial || cb.partial) return "";
  for (const Pattern* q : cb.patterns) {
    const bool covered = std::any_of(cs.patterns.begin(), cs.patterns.end(),
                                     [&](const Pattern* p) { return contains_induced(q->graph, p->graph).has_value(); });
    if (!covered) return "";
  }
  return "; proved: every obstruction of " + big + " contains one of " + small;
}

std::string prove_undirected(const std::string& small, const std::string& big) {
  const auto fs = forb_u(*parse_uclass(small));
  for (UPattern q : forb_u(*parse_uclass(big))) {
    const UndirectedGraph qg = make_upattern(q);
    if (std::none_of(fs.begin(), fs.end(), [&](UPattern p) { return contains_induced_u(qg, p); })) return "";
  }
  return "; proved: every obstruction of " + big + " contains one of " + small;
}

// 6-vertex directed co-graphs, up to isomorphism. Every class of the diagram
// other than TD and FD lies inside DC, and all are hereditary, so these hold
// every 6-vertex witness those classes can have.
std::vector<Sample> six_vertex_co_graphs() {
  std::vector<std::uint64_t> members;
  for (std::uint64_t code : enumerate_digraphs(5)) {
    if (member(digraph_from_code(code), ClassId::DC)) members.push_back(code);
  }
  bool out_of_time = false;
  const auto codes = extend_by_one(
      members, {}, [](const Digraph& g) { return member(g, ClassId::DC); }, out_of_time);
  std::vector<Sample> out;
  for (std::uint64_t c : codes) {
    const Digraph g = digraph_from_code(c);
    out.push_back({g, underlying(g), 0});
  }
  return out;
}

}  // namespace

VerificationReport verify_hierarchy(int n_max, int n_max_undirected) {
  VerificationReport r{"hierarchy", {}};
  const auto& pool = samples(n_max);
  std::function<std::vector<Sample>()> larger;
  if (n_max == 5) larger = six_vertex_co_graphs;
  check_diagram(
      directed_diagram(), pool, larger,
      [](const Sample& s, const std::string& name) { return member(s.g, *parse_class(name)); },
      [](const Sample& s) { return text_of(s.g); }, prove_directed, "", r);

  std::vector<UndirectedGraph> graphs;
  for (int n = 1; n <= n_max_undirected; ++n) {
    auto layer = enumerate_undirected(n);
    graphs.insert(graphs.end(), layer.begin(), layer.end());
  }
  check_diagram(
      undirected_diagram(), graphs, std::function<std::vector<UndirectedGraph>()>{},
      [](const UndirectedGraph& g, const std::string& name) { return member_u(g, *parse_uclass(name)); },
      [](const UndirectedGraph& g) { return text_of(g.as_symmetric_digraph()); }, prove_undirected, "undirected ",
      r);
  return r;
}

// ---------------------------------------------------------------------------

namespace {

Check pointwise(const std::string& name, const std::vector<Sample>& pool,
                const std::function<bool(const Digraph&)>& lhs, const std::function<bool(const Digraph&)>& rhs) {
  for (const Sample& s : pool) {
    if (lhs(s.g) != rhs(s.g)) {
      return {name, false, text_of(s.g), "the two sides differ"};
    }
  }
  return {name, true, "-", "equal on " + std::to_string(pool.size()) + " digraphs"};
}

Check non_closure(const std::string& name, const std::vector<Sample>& pool, ClassId id) {
  for (const Sample& s : pool) {
    if (member(s.g, id) && !member(complement(s.g), id)) {
      return {name, true, text_of(s.g), "member whose complement is not a member"};
    }
  }
  return {name, false, "-", "no member with a non-member complement"};
}

std::vector<std::uint64_t> codes_of(std::initializer_list<std::string_view> names, bool complemented) {
  std::vector<std::uint64_t> out;
  for (std::string_view n : names) {
    const Digraph& g = pattern(n).graph;
    out.push_back(canonical_code(complemented ? complement(g) : g));
  }
  sort_unique(out);
  return out;
}

}  // namespace

VerificationReport verify_closures(int n_max) {
  VerificationReport r{"closures", {}};
  const auto& pool = samples(n_max);
  auto in = [](ClassId id) { return [id](const Digraph& g) { return member(g, id); }; };
  auto in_co = [](ClassId id) { return [id](const Digraph& g) { return member(complement(g), id); }; };
  r.checks.push_back(pointwise("DC = co-DC", pool, in(ClassId::DC), in_co(ClassId::DC)));
  r.checks.push_back(pointwise("DT = co-DT", pool, in(ClassId::DT), in_co(ClassId::DT)));
  r.checks.push_back(pointwise("DC closed under converse", pool, in(ClassId::DC),
                               [](const Digraph& g) { return member(converse(g), ClassId::DC); }));
  r.checks.push_back(non_closure("DTP != co-DTP", pool, ClassId::DTP));
  r.checks.push_back(non_closure("DWQT != co-DWQT", pool, ClassId::DWQT));

  auto set_check = [&](const std::string& name, std::initializer_list<std::string_view> names) {
    const bool equal = codes_of(names, false) == codes_of(names, true);
    r.checks.push_back({name, equal, "-", equal ? "complements permute the set" : "complement leaves the set"});
  };
  set_check("co{D1..D8} = {D1..D8}", {"D1", "D2", "D3", "D4", "D5", "D6", "D7", "D8"});
  set_check("co{D12..D15} = {D12..D15}", {"D12", "D13", "D14", "D15"});
  return r;
}

VerificationReport verify_identities(int n_max) {
  VerificationReport r{"identities", {}};
  const auto& pool = samples(n_max);
  auto same = [&](ClassId a, ClassId b) {
    const std::string name = std::string(to_string(a)) + " = " + std::string(to_string(b));
    for (const Sample& s : pool) {
      const bool ca = member_constructive(s.g, a).member;
      const bool cb = member_constructive(s.g, b).member;
      const bool pa = member_by_patterns(s.g, a).member;
      const bool pb = member_by_patterns(s.g, b).member;
      const std::uint64_t code = canonical_code(s.g);
      const bool oa = oracle_members(a, s.g.order()).count(code) > 0;
      const bool ob = oracle_members(b, s.g.order()).count(code) > 0;
      if (!(ca == cb && pa == pb && oa == ob && ca == pa && ca == oa)) {
        r.checks.push_back({name, false, text_of(s.g), "membership differs between the classes or routes"});
        return;
      }
    }
    r.checks.push_back({name, true, "-",
                        "recursive definitions, obstruction sets and literal oracles agree on " +
                            std::to_string(pool.size()) + " digraphs"});
  };
  same(ClassId::OCTP, ClassId::OT);
  same(ClassId::OCSC, ClassId::OCWQT);
  return r;
}

VerificationReport verify_orientations(int n_max) {
  VerificationReport r{"orientations", {}};
  std::vector<UndirectedGraph> graphs;
  for (int n = 1; n <= n_max; ++n) {
    auto layer = enumerate_undirected(n);
    graphs.insert(graphs.end(), layer.begin(), layer.end());
  }
  auto run = [&](UClassId u, ClassId d) {
    const std::string name =
        std::string(to_string(u)) + " = graphs with an orientation in " + std::string(to_string(d));
    for (const auto& h : graphs) {
      const auto edges = h.edges();
      bool found = false;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()) && !found; ++mask) {
        Digraph g(h.order());
        for (std::size_t i = 0; i < edges.size(); ++i) {
          const auto [a, b] = edges[i];
          if ((mask >> i) & 1U) {
            g.add_arc(b, a);
          } else {
            g.add_arc(a, b);
          }
        }
        found = member(g, d);
      }
      if (found != member_u(h, u)) {
        r.checks.push_back({name, false, text_of(h.as_symmetric_digraph()),
                            found ? "orientation exists but graph outside class" : "class member without orientation"});
        return;
      }
    }
    r.checks.push_back({name, true, "-", "holds on " + std::to_string(graphs.size()) + " graphs"});
  };
  run(UClassId::C, ClassId::OC);
  run(UClassId::TP, ClassId::OTP);
  run(UClassId::T, ClassId::OT);
  return r;
}

VerificationReport verify_projections(int n_max) {
  VerificationReport r{"projections", {}};
  const auto& pool = samples(n_max);
  auto un_check = [&](ClassId d, UClassId u) {
    r.checks.push_back(implication("un(" + std::string(to_string(d)) + ") in " + std::string(to_string(u)), pool,
                                   in_class(d), un_in(u)));
  };
  un_check(ClassId::DC, UClassId::C);
  un_check(ClassId::OC, UClassId::C);
  un_check(ClassId::DTP, UClassId::TP);
  un_check(ClassId::OTP, UClassId::TP);
  un_check(ClassId::DWQT, UClassId::WQT);
  un_check(ClassId::DSC, UClassId::SC);
  un_check(ClassId::DT, UClassId::T);
  un_check(ClassId::OT, UClassId::C);

  auto parts_check = [&](ClassId d, UClassId sym, ClassId asym) {
    const std::string name = "sym/asym parts of " + std::string(to_string(d));
    r.checks.push_back(implication(name, pool, in_class(d), [sym, asym](const Sample& s) {
      const auto parts = sym_asym_parts(s.g);
      return member_u(underlying(parts.symmetric), sym) && member(parts.asymmetric, asym);
    }));
  };
  parts_check(ClassId::DC, UClassId::C, ClassId::OC);
  parts_check(ClassId::DTP, UClassId::TP, ClassId::OTP);
  parts_check(ClassId::DWQT, UClassId::WQT, ClassId::OWQT);
  parts_check(ClassId::DSC, UClassId::SC, ClassId::OSC);
  parts_check(ClassId::DT, UClassId::T, ClassId::OT);

  r.checks.push_back(implication("di-co-tree round trip", pool, in_class(ClassId::DC), [](const Sample& s) {
    const auto tree = di_co_tree_labeled(s.g);
    return tree && relabel(s.g, tree->leaf_vertices) == evaluate(tree->expression) &&
           isomorphic(evaluate(parse_expression(format(tree->expression))), s.g).has_value();
  }));
  r.checks.push_back(pointwise("di-co-tree exists iff free(D1..D8)", pool,
                               [](const Digraph& g) { return di_co_tree(g).has_value(); },
                               [](const Digraph& g) { return member_by_patterns(g, ClassId::DC).member; }));
  return r;
}

VerificationReport verify_route_agreement(int n_max) {
  VerificationReport r{"routes", {}};
  const auto& pool = samples(n_max);
  for (ClassId id : kAllClasses) {
    if (!has_constructive_definition(id)) continue;
    Check c{std::string(to_string(id)), true, "-", ""};
    std::size_t members = 0;
    for (const Sample& s : pool) {
      const bool a = member_constructive(s.g, id).member;
      const bool b = member_by_patterns(s.g, id).member;
      const bool o = oracle_members(id, s.g.order()).count(canonical_code(s.g)) > 0;
      members += a;
      if (a != b || a != o) {
        c.passed = false;
        c.canonical = text_of(s.g);
        c.details = std::string("constructive=") + (a ? "1" : "0") + " patterns=" + (b ? "1" : "0") +
                    " oracle=" + (o ? "1" : "0");
        break;
      }
    }
    if (c.passed) {
      c.details = "three routes agree on " + std::to_string(pool.size()) + " digraphs (" +
                  std::to_string(members) + " members)";
    }
    r.checks.push_back(c);
  }
  return r;
}

VerificationReport verify_six_vertex_patterns() {
  VerificationReport r{"six-vertex", {}};
  for (ClassId id : kAllClasses) {
    if (!has_constructive_definition(id)) continue;
    for (const Pattern* p : catalog(id).patterns) {
      if (p->graph.order() != 6) continue;
      Check c{p->name + " in forb(" + std::string(to_string(id)) + ")", true, text_of(p->graph), ""};
      if (member(p->graph, id)) {
        c.passed = false;
        c.details = "pattern is a member";
      } else if (!deletions_inside(p->graph, id)) {
        c.passed = false;
        c.details = "some one-vertex deletion is outside the class";
      } else {
        c.details = "outside the class, all 6 deletions inside";
      }
      r.checks.push_back(c);
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Output

std::string to_text(const ObstructionReport& r) {
  std::ostringstream out;
  out << "class " << to_string(r.id) << ", minimal obstructions with at most " << r.n_max << " vertices\n";
  for (const auto& e : r.entries) {
    const Digraph g = digraph_from_code(e.code);
    out << "  " << to_string(e.verdict) << "  " << (e.name.empty() ? "-" : e.name) << "  " << canonical_text(g)
        << "\n";
  }
  out << "confirmed " << r.count(ObstructionVerdict::Confirmed) << ", missing "
      << r.count(ObstructionVerdict::Missing) << ", extra " << r.count(ObstructionVerdict::Extra) << "\n";
  if (!r.beyond_bound.empty()) {
    out << "not reachable at this bound:";
    for (const auto& n : r.beyond_bound) out << " " << n;
    out << "\n";
  }
  if (r.budget_exceeded) out << "time budget exceeded: report is partial\n";
  out << "obstructions with more than " << r.n_max << " vertices are not searched\n";
  return out.str();
}

std::string to_tsv(const ObstructionReport& r) {
  std::ostringstream out;
  for (const auto& e : r.entries) {
    out << to_string(r.id) << '\t' << to_string(e.verdict) << '\t' << canonical_text(digraph_from_code(e.code))
        << '\t' << (e.name.empty() ? "-" : e.name) << '\n';
  }
  return out.str();
}

std::string to_text(const VerificationReport& r) {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const auto& c : r.checks) {
    passed += c.passed;
    out << (c.passed ? "ok    " : "FAIL  ") << c.name << ": " << c.details;
    if (c.canonical != "-") out << " [" << c.canonical << "]";
    out << "\n";
  }
  out << r.suite << ": " << passed << " of " << r.checks.size() << " checks passed\n";
  return out.str();
}

std::string to_tsv(const VerificationReport& r) {
  std::ostringstream out;
  for (const auto& c : r.checks) {
    out << c.name << '\t' << (c.passed ? "confirmed" : "failed") << '\t' << c.canonical << '\t' << c.details
        << '\n';
  }
  return out.str();
}

}  // namespace dicograph
