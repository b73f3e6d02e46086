#include "dicograph/patterns.hpp"

#include <algorithm>
#include <stdexcept>

#include "dicograph/expression.hpp"
#include "embedding.hpp"

namespace dicograph {

namespace {

Digraph from_expr(std::string_view text) { return evaluate(parse_expression(text)); }

// Y1..Y4 as expression text, reused by the Q and X constructions.
constexpr std::string_view kY1 = "series(v, v)";
constexpr std::string_view kY2 = "order(v, v)";
constexpr std::string_view kY3 = "union(series(v, v), v)";
constexpr std::string_view kY4 = "union(order(v, v), v)";
constexpr std::string_view kX1 = "order(union(v, v), v)";
constexpr std::string_view kX2 = "order(v, union(v, v))";

std::string op(std::string_view name, std::string_view a, std::string_view b) {
  return std::string(name) + "(" + std::string(a) + ", " + std::string(b) + ")";
}

std::vector<Pattern> build_patterns() {
  std::vector<Pattern> out;
  auto add = [&](std::string name, Digraph g) { out.push_back({std::move(name), std::move(g)}); };

  add("D1", Digraph(3, {{0, 1}, {1, 2}}));
  add("D2", Digraph(3, {{0, 1}, {1, 0}, {1, 2}}));
  add("D3", Digraph(3, {{0, 1}, {1, 0}, {2, 1}}));
  add("D4", Digraph(3, {{0, 1}, {1, 2}, {2, 1}, {2, 0}}));
  add("D5", Digraph(3, {{0, 1}, {1, 2}, {2, 0}}));
  add("D6", Digraph(4, {{0, 1}, {0, 2}, {2, 0}, {0, 3}, {3, 0}, {1, 2}, {2, 1}, {3, 1}, {3, 2}}));
  add("D7", Digraph(4, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 3}, {3, 2}}));
  add("D8", Digraph(4, {{0, 1}, {0, 2}, {3, 1}}));
  add("D9", from_expr("series(union(v, v), union(v, v))"));
  add("D10", from_expr(op("series", kY2, "union(v, v)")));
  add("D11", from_expr(op("series", kY2, kY2)));
  add("D12", from_expr("order(union(v, v), union(v, v))"));
  add("D13", from_expr(op("order", "union(v, v)", kY1)));
  add("D14", from_expr(op("order", kY1, "union(v, v)")));
  add("D15", from_expr(op("order", kY1, kY1)));
  for (int i = 9; i <= 11; ++i) add("coD" + std::to_string(i), complement(out[i - 1].graph));

  add("Q1", from_expr(op("series", kY2, kY2)));
  add("Q2", from_expr(op("order", kY1, kY1)));
  add("Q3", from_expr(op("series", kY3, kY3)));
  add("Q4", from_expr(op("series", kY2, kY3)));
  add("Q5", from_expr(op("order", kY1, kY4)));
  add("Q6", from_expr(op("order", kY4, kY1)));
  add("Q7", from_expr(op("order", kY4, kY4)));
  const std::size_t q_begin = out.size() - 7;
  for (std::size_t i = 0; i < 7; ++i) add("co" + out[q_begin + i].name, complement(out[q_begin + i].graph));

  add("D21", from_expr(op("union", kX1, kX1)));
  add("D22", from_expr(op("union", kX2, kX2)));
  add("D23", from_expr(op("union", kX2, kX1)));

  add("K2bidir", from_expr(kY1));
  add("2P2", from_expr(op("union", kY2, kY2)));
  add("X1", from_expr(kX1));
  add("X2", from_expr(kX2));
  add("Y1", from_expr(kY1));
  add("Y2", from_expr(kY2));
  add("Y3", from_expr(kY3));
  add("Y4", from_expr(kY4));

  add("I2", Digraph(2));
  add("I3", Digraph(3));
  add("P2", from_expr(kY2));
  add("K3bidir", from_expr("series(v, v, v)"));
  add("P3bidir", Digraph(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}}));
  add("coP3bidir", from_expr(kY3));
  return out;
}

std::vector<std::string_view> catalog_names(ClassId id) {
  using V = std::vector<std::string_view>;
  const V dc = {"D1", "D2", "D3", "D4", "D5", "D6", "D7", "D8"};
  const V oc = {"D1", "D5", "D8", "K2bidir"};
  auto cat = [](V a, const V& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  const V d9_15 = {"D9", "D10", "D11", "D12", "D13", "D14", "D15"};
  const V d12_15 = {"D12", "D13", "D14", "D15"};
  const V co_d = {"coD11", "coD10", "coD9"};
  const V q = {"Q1", "Q2", "Q3", "Q4", "Q5", "Q6", "Q7"};
  const V coq = {"coQ1", "coQ2", "coQ3", "coQ4", "coQ5", "coQ6", "coQ7"};
  switch (id) {
    case ClassId::DC: return dc;
    case ClassId::OC: return oc;
    case ClassId::DTP: return cat(dc, d9_15);
    case ClassId::OTP: return cat(oc, {"D12"});
    case ClassId::DCTP: return cat(cat(dc, d12_15), co_d);
    case ClassId::OCTP: return {"D1", "D5", "D8", "D12", "coD11", "K2bidir"};
    case ClassId::DT: return cat(cat(dc, d9_15), co_d);
    case ClassId::OT: return cat(oc, {"D12", "coD11"});
    case ClassId::DWQT: return cat(dc, q);
    case ClassId::OWQT: return cat(oc, {"Q7"});
    case ClassId::DCWQT: return cat(dc, coq);
    case ClassId::OCWQT:
    case ClassId::OCSC: return cat(oc, {"D12", "D21", "D22", "D23"});
    case ClassId::DSC: return cat(cat(dc, q), {"coD9", "coD10", "coD11"});
    case ClassId::OSC: return cat(oc, {"Q7", "coD11"});
    case ClassId::DCSC: return cat(cat(cat(dc, {"Q1"}), coq), {"D9", "D10"});
    case ClassId::TT: return {"I2", "K2bidir", "D5"};
    case ClassId::TD: return {"D5"};
    case ClassId::FD: return {"D1", "K2bidir"};
    case ClassId::EdgelessD: return {"P2", "K2bidir"};
    case ClassId::BidirComplete: return {"P2", "I2"};
    case ClassId::TwoBidirCliques: return {"P3bidir", "P2", "I3"};
    case ClassId::BidirCompleteBipartite: return {"coP3bidir", "P2", "K3bidir"};
    case ClassId::SeriesOfStableSets: return {"coP3bidir", "P2"};
    case ClassId::UnionOfBidirCliques: return {"P3bidir", "P2"};
  }
  return {};
}

bool role_images_ok(const Digraph& g, const PartialPattern& pp, const std::vector<int>& img, int upto) {
  auto assigned = [&](int r) { return r <= upto; };
  for (auto [a, b] : pp.distinct) {
    if (assigned(a) && assigned(b) && img[a] == img[b]) return false;
  }
  for (auto [a, b] : pp.required) {
    if (assigned(a) && assigned(b) && (img[a] == img[b] || !g.has_arc(img[a], img[b]))) return false;
  }
  for (auto [a, b] : pp.forbidden) {
    if (assigned(a) && assigned(b) && img[a] != img[b] && g.has_arc(img[a], img[b])) return false;
  }
  return true;
}

bool assign_roles(const Digraph& g, const PartialPattern& pp, std::vector<int>& img, int role) {
  if (role == pp.roles) return true;
  for (int v = 0; v < g.order(); ++v) {
    img[role] = v;
    if (role_images_ok(g, pp, img, role) && assign_roles(g, pp, img, role + 1)) return true;
  }
  img[role] = -1;
  return false;
}

}  // namespace

const std::vector<Pattern>& all_patterns() {
  static const std::vector<Pattern> patterns = build_patterns();
  return patterns;
}

const Pattern* find_pattern(std::string_view name) {
  for (const auto& p : all_patterns()) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

const Pattern& pattern(std::string_view name) {
  if (const Pattern* p = find_pattern(name)) return *p;
  throw std::out_of_range("unknown pattern " + std::string(name));
}

const PartialPattern& two_switch() {
  static const PartialPattern pp{
      "2-switch", 4, {{0, 1}, {2, 3}}, {{0, 3}, {2, 1}},
      {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  return pp;
}

const PartialPattern& alternating_anticircuit() {
  static const PartialPattern pp{
      "alternating 4-anticircuit", 4, {{0, 1}, {2, 3}}, {{0, 3}, {2, 1}}, {{0, 2}, {1, 3}}};
  return pp;
}

std::optional<std::vector<int>> match_partial(const Digraph& g, const PartialPattern& pp) {
  std::vector<int> img(pp.roles, -1);
  if (assign_roles(g, pp, img, 0)) return img;
  return std::nullopt;
}

Catalog catalog(ClassId id) {
  Catalog c;
  for (std::string_view name : catalog_names(id)) c.patterns.push_back(&pattern(name));
  if (id == ClassId::TD) c.partial = &two_switch();
  if (id == ClassId::FD) c.partial = &alternating_anticircuit();
  return c;
}

std::optional<std::vector<int>> contains_induced(const Digraph& g, const Digraph& p) {
  detail::EmbeddingSearch search(p, g, /*exact=*/false);
  return search.find();
}

std::optional<Occurrence> contains_induced(const Digraph& g, const Pattern& p) {
  auto m = contains_induced(g, p.graph);
  if (!m) return std::nullopt;
  return Occurrence{p.name, std::move(*m)};
}

std::optional<Occurrence> first_occurrence(const Digraph& g, std::span<const Pattern* const> patterns) {
  for (const Pattern* p : patterns) {
    if (auto occ = contains_induced(g, *p)) return occ;
  }
  return std::nullopt;
}

bool is_free(const Digraph& g, std::span<const Pattern* const> patterns) {
  return !first_occurrence(g, patterns).has_value();
}

}  // namespace dicograph
