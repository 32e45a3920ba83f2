#include "sz/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>
#include <tuple>

#include "sz/bounds.hpp"
#include "sz/cdepth.hpp"
#include "sz/chartable.hpp"
#include "sz/context.hpp"
#include "sz/error.hpp"
#include "sz/odepth.hpp"
#include "sz/s2lab.hpp"

namespace sz {

namespace {

// Collects named sub-checks of one claim.
class Checks {
 public:
  explicit Checks(ClaimRecord& rec) : rec_(rec) {}
  void require(const std::string& name, bool ok) {
    if (!ok) rec_.failures.push_back(name);
  }

 private:
  ClaimRecord& rec_;
};

struct Session {
  const SuzukiContext& ctx;
  NamedSubgroups named;
  VerifyOptions options;
  std::map<std::string, DepthProfile> profiles;
  std::optional<CharacterTable> table;

  const GroupTable& g() const { return ctx.group(); }
  const Subgroup& sub(const std::string& name) const { return subgroup_by_name(named, name); }

  const DepthProfile& profile(const std::string& name) {
    auto it = profiles.find(name);
    if (it == profiles.end()) it = profiles.emplace(name, dc_min(g(), sub(name), options.jobs)).first;
    return it->second;
  }
  const CharacterTable& group_table() {
    if (!table) table = character_table(g(), {.jobs = options.jobs});
    return *table;
  }
};

// The subgroups of the depth claims, in report order.
const std::vector<std::pair<std::string, std::uint32_t>>& expected_dc() {
  static const std::vector<std::pair<std::string, std::uint32_t>> v = {
      {"NF", 5}, {"B0", 4}, {"B1", 4}, {"B2", 4}, {"F", 3},      {"H", 3}, {"A1", 3},
      {"A2", 3}, {"ZF", 3}, {"ORDER2", 3}, {"C4", 3}, {"K4", 4}, {"L", 4},
  };
  return v;
}

void claim_construction(Session& s, ClaimRecord& rec, Checks& c) {
  const GroupTable& g = s.g();
  const Ovoid& ovoid = s.ctx.ovoid();
  const std::uint64_t q = s.ctx.q();
  const std::uint64_t formula = q * q * (q * q + 1) * (q - 1);
  c.require("order", g.order() == 29120 && g.order() == formula);
  c.require("ovoid_size", ovoid.size() == q * q + 1);

  std::size_t collinear_triples = 0;
  const std::size_t n = ovoid.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (collinear(ovoid.field(), ovoid.point(i), ovoid.point(j), ovoid.point(k))) ++collinear_triples;
      }
    }
  }
  c.require("no_three_collinear", collinear_triples == 0);

  std::vector<bool> pairs(n * n, false);
  std::size_t max_fixed = 0;
  bool some_two = false;
  for (ElementId x = 0; x < g.order(); ++x) {
    const auto im = g.images(x);
    pairs[im[0] * n + im[1]] = true;
    if (x == GroupTable::identity()) continue;
    const std::size_t fixed = g.element(x).fixed_point_count();
    max_fixed = std::max(max_fixed, fixed);
    some_two = some_two || fixed == 2;
  }
  const auto pair_images = static_cast<std::size_t>(std::count(pairs.begin(), pairs.end(), true));
  c.require("two_transitive", pair_images == n * (n - 1));
  c.require("fixed_points_at_most_two", max_fixed <= 2);
  c.require("some_element_fixes_two", some_two);

  rec.expected = {{"order", 29120}, {"ovoid_size", 65}, {"collinear_triples", 0}, {"ordered_pair_images", 65 * 64},
                  {"max_fixed_points", 2}};
  rec.computed = {{"order", g.order()},
                  {"ovoid_size", ovoid.size()},
                  {"collinear_triples", collinear_triples},
                  {"ordered_pair_images", pair_images},
                  {"max_fixed_points", max_fixed},
                  {"some_element_fixes_two", some_two}};
}

void claim_catalogue(Session& s, ClaimRecord& rec, Checks& c) {
  const GroupTable& g = s.g();
  const std::map<std::string, std::size_t> orders = {{"F", 64},  {"ZF", 8}, {"H", 7},  {"NF", 448}, {"B0", 14},
                                                     {"A1", 13}, {"A2", 5}, {"B1", 52}, {"B2", 20}};
  nlohmann::json computed_orders;
  for (const auto& [name, want] : orders) {
    computed_orders[name] = s.sub(name).order();
    c.require("order_" + name, s.sub(name).order() == want);
  }
  const Subgroup& f = s.sub("F");
  std::uint32_t exponent = 1;
  Bitset involutions(g.order());
  involutions.set(GroupTable::identity());
  for (const auto x : f.elements()) {
    exponent = std::max(exponent, g.element_order(x));
    if (g.element_order(x) == 2) involutions.set(x);
  }
  const int nil = nilpotency_class(g, f);
  c.require("F_exponent_4", exponent == 4);
  c.require("F_class_2", nil == 2);
  c.require("F_involutions_are_ZF", involutions == s.sub("ZF").members());
  nlohmann::json ti;
  for (const char* name : {"F", "H", "A1", "A2"}) {
    const bool t = is_trivial_intersection(g, s.sub(name));
    ti[name] = t;
    c.require(std::string("TI_") + name, t);
  }
  const PartitionReport part = partition_check(g, s.named);
  c.require("partition_tiles", part.tiles);
  c.require("partition_count", part.count == 29120);

  rec.expected = {{"orders", orders},
                  {"F_exponent", 4},
                  {"F_class", 2},
                  {"TI", {{"F", true}, {"H", true}, {"A1", true}, {"A2", true}}},
                  {"partition_count", 29120}};
  rec.computed = {{"orders", computed_orders},
                  {"F_exponent", exponent},
                  {"F_class", nil},
                  {"F_involutions_are_ZF", involutions == s.sub("ZF").members()},
                  {"TI", ti},
                  {"partition_count", part.count},
                  {"partition_tiles", part.tiles}};
}

void claim_combinatorial(Session& s, ClaimRecord& rec, Checks& c) {
  nlohmann::json expected;
  nlohmann::json computed;
  for (const auto& [name, want] : expected_dc()) {
    const DepthProfile& p = s.profile(name);
    expected[name] = want;
    computed[name] = p.dc;
    c.require("dc_" + name, p.dc == want);
  }
  const DepthProfile& nf = s.profile("NF");
  c.require("NF_deltas", nf.delta_star == 3 && nf.delta == 3 && nf.delta_upper_star == 3);

  // Z(F) is elementary abelian of order 8 at q = 8.
  const Subgroup& zf = s.sub("ZF");
  bool elementary = zf.order() == 8;
  for (const auto x : zf.elements()) {
    if (x != GroupTable::identity() && s.g().element_order(x) != 2) elementary = false;
  }
  c.require("ZF_elementary_abelian", elementary);
  c.require("L_order_4_in_ZF", s.sub("L").order() == 4 && s.sub("L").is_subgroup_of(zf));

  rec.expected = {{"dc", expected}, {"NF_deltas", {3, 3, 3}}, {"ZF_elementary_abelian_order", 8}};
  rec.computed = {{"dc", computed},
                  {"NF_deltas", {nf.delta_star, nf.delta, nf.delta_upper_star}},
                  {"ZF_elementary_abelian_order", elementary ? zf.order() : 0}};
}

void claim_sandwich(Session& s, ClaimRecord& rec, Checks& c) {
  nlohmann::json computed;
  for (const auto& [name, want] : expected_dc()) {
    const DepthProfile& p = s.profile(name);
    c.require("dc_sandwich_" + name, p.sandwich_dc);
    c.require("delta_sandwich_" + name, p.sandwich_delta);
    c.require("ti_rule_" + name, p.ti_rule);
    c.require("witnesses_" + name, p.witnesses_sound);
    computed[name] = {{"delta_star", p.delta_star},
                      {"delta", p.delta},
                      {"delta_upper_star", p.delta_upper_star},
                      {"dc", p.dc},
                      {"conjugates", p.conjugates},
                      {"trivial_intersection", p.trivial_intersection}};
  }
  rec.expected = "2δ*-1 <= dc <= 2δ; δ* <= δ <= δ^* <= |G:N_G(H)|; TI => dc <= 3";
  rec.computed = computed;
}

void claim_tables(Session& s, ClaimRecord& rec, Checks& c) {
  const CharacterTable& t = s.group_table();
  const TableChecks checks = check_table(t);
  auto degrees = t.degrees;
  std::sort(degrees.begin(), degrees.end());
  const std::vector<std::int64_t> want = {1, 14, 14, 35, 35, 35, 64, 65, 65, 65, 91};
  c.require("class_count", t.size() == 11);
  c.require("degrees", degrees == want);
  c.require("degree_square_sum", checks.degree_square_sum == 29120);
  c.require("row_orthogonality", checks.row_orthogonal);
  c.require("column_orthogonality", checks.column_orthogonal);
  nlohmann::json subs;
  for (const auto& name : subgroup_names()) {
    const SubgroupTable st = standalone(s.g(), s.sub(name));
    const CharacterTable th = character_table(st.table, {.jobs = s.options.jobs});
    const TableChecks tc = check_table(th);
    class_fusion(st, th, t);
    subs[name] = {{"classes", th.size()}, {"checks", tc.all_pass()}};
    c.require("subgroup_table_" + name, tc.all_pass());
  }
  rec.expected = {{"classes", 11}, {"degrees", want}, {"degree_square_sum", 29120}};
  rec.computed = {{"classes", t.size()},
                  {"degrees", degrees},
                  {"degree_square_sum", checks.degree_square_sum},
                  {"row_orthogonal", checks.row_orthogonal},
                  {"column_orthogonal", checks.column_orthogonal},
                  {"subgroups", subs}};
}

void claim_ordinary(Session& s, ClaimRecord& rec, Checks& c) {
  const CharacterTable& tg = s.group_table();
  nlohmann::json expected;
  nlohmann::json computed;
  for (const auto& name : subgroup_names()) {
    const DepthProfile& p = s.profile(name);
    const OrdinaryDepthReport r = ordinary_depth(s.g(), s.sub(name), tg, p.delta_star, p.core_central, s.options.jobs);
    const std::uint32_t want = name == "NF" ? 5 : 3;
    expected[name] = want;
    computed[name] = {{"depth_matrix", r.depth_matrix},
                      {"depth_graph", r.depth_graph},
                      {"dc", p.dc},
                      {"bound_core", r.bound_core},
                      {"m_trivial", r.m_trivial}};
    c.require("depth_" + name, r.depth_matrix == want);
    c.require("matrix_equals_graph_" + name, r.depth_matrix == r.depth_graph);
    c.require("depth_at_most_dc_" + name, r.depth_matrix <= p.dc);
    c.require("depth_at_most_core_bound_" + name, r.depth_matrix <= r.bound_core);
    c.require("degree_identities_" + name, r.degree_identities);
    c.require("nontrivial_depth_at_least_3_" + name, r.depth_matrix >= 3);
    if (name == "NF") c.require("NF_m_trivial_at_least_2", r.m_trivial != kInfiniteDistance && r.m_trivial >= 2);
  }
  rec.expected = {{"depth", expected}, {"NF_m_trivial_min", 2}};
  rec.computed = computed;
}

void claim_sylow(Session& s, ClaimRecord& rec, Checks& c) {
  const auto start = std::chrono::steady_clock::now();
  const SylowLabReport lab = sylow_lab(Field::standard(9), 3, s.options.jobs);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.require("ns_s1_size_qs", lab.ns_s1_size == 4096);
  c.require("ns_s1_closed_form", lab.ns_matches_closed_form);
  c.require("ns_s1_proper", lab.ns_proper);
  c.require("coset_normalizers_equal", lab.coset_normalizers_equal);
  c.require("census_two_subgroups", lab.census_ok);
  c.require("center_closed_form", lab.center_matches);
  c.require("s1_closed", lab.s1_closed);
  c.require("predicate_equivalence", lab.predicate_equivalence);
  c.require("under_60_seconds", seconds < 60);

  const UGroup small(s.ctx.field());
  const IsoCheck iso = iso_check_with_F(small, s.g(), s.ctx.ovoid(), s.sub("F"));
  c.require("isomorphic_to_F", iso.ok());

  rec.expected = {{"ns_s1_size", 4096},
                  {"census", {{{"subgroup", "Z(S1)"}, {"order", 8}}, {{"subgroup", "S1"}, {"order", 64}}}},
                  {"isomorphic_to_F", true}};
  rec.computed = lab.to_json();
  rec.computed["isomorphic_to_F"] = iso.ok();
}

void claim_field(Session&, ClaimRecord& rec, Checks& c) {
  nlohmann::json computed;
  for (int n : {3, 5, 9}) {
    const Field f = Field::standard(n);
    bool squaring = true;
    std::vector<std::uint32_t> kernel;
    bool one_in_image = false;
    for (const auto x : f.elements()) {
      if (f.frobenius_pi(f.frobenius_pi(x)) != f.square(x)) squaring = false;
      const FieldElement y = f.id_plus_pi(x);
      if (y == f.zero()) kernel.push_back(x.bits);
      if (y == f.one()) one_in_image = true;
    }
    const std::string key = "GF(" + std::to_string(f.order()) + ")";
    computed[key] = {{"pi_squared_is_squaring", squaring}, {"kernel", kernel}, {"one_in_image", one_in_image}};
    c.require("pi_squared_" + key, squaring);
    c.require("kernel_" + key, kernel == std::vector<std::uint32_t>{0, 1});
    c.require("one_not_in_image_" + key, !one_in_image);
  }
  const Field small = Field::standard(3);
  const Field big = Field::standard(9);
  const auto emb = subfield_embedding(small, big);
  bool restricts = true;
  for (const auto x : small.elements()) {
    if (big.frobenius_pi(emb[x.bits]) != emb[small.frobenius_pi(x).bits]) restricts = false;
  }
  c.require("pi_restricts_to_subfield", restricts);
  computed["pi_restricts_to_GF(8)_in_GF(512)"] = restricts;
  rec.expected = {{"kernel", {0, 1}}, {"one_in_image", false}, {"pi_squared_is_squaring", true}};
  rec.computed = computed;
}

void claim_bounds(Session&, ClaimRecord& rec, Checks& c) {
  nlohmann::json computed = nlohmann::json::array();
  for (const auto& [s, t] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{8, 3}, {8, 5}, {8, 7}, {32, 3}, {32, 5}}) {
    const std::string key = "(" + std::to_string(s) + "," + std::to_string(t) + ")";
    try {
      const BoundReport b = counting_bounds(s, t);
      c.require("inequality_" + key, b.inequality_holds);
      if (s == 8 && t == 5) c.require("dominance_(8,5)", b.dominance_holds);
      computed.push_back({{"s", s}, {"t", t}, {"inequality_holds", b.inequality_holds},
                          {"dominance_holds", b.dominance_holds}, {"margin", b.margin.get_str()}});
    } catch (const BoundsError& e) {
      c.require("exact_divisions_" + key, false);
      computed.push_back({{"s", s}, {"t", t}, {"error", e.what()}});
    }
  }
  rec.expected = {{"inequality_holds", true}, {"dominance_(8,5)", true}, {"exact_divisions", true}};
  rec.computed = computed;
}

void claim_intersection(Session& s, ClaimRecord& rec, Checks& c) {
  const Subgroup& zf = s.sub("ZF");
  const auto subs = all_subgroups(s.g(), zf);
  std::size_t f = 0;
  while ((std::size_t{1} << f) < zf.order()) ++f;
  std::size_t pairs = 0;
  std::size_t violations = 0;
  for (const auto& a : subs) {
    for (const auto& b : subs) {
      const std::size_t m1 = static_cast<std::size_t>(std::countr_zero(a.order()));
      const std::size_t m2 = static_cast<std::size_t>(std::countr_zero(b.order()));
      if (m1 < 1 || m2 < 1) continue;
      ++pairs;
      const std::size_t meet = intersect(s.g(), a, b).order();
      if (m1 + m2 > f && meet < (std::size_t{1} << (m1 + m2 - f))) ++violations;
    }
  }
  c.require("subgroup_count", subs.size() == 16);
  c.require("no_violations", violations == 0);
  rec.expected = {{"subgroups_of_ZF", 16}, {"violations", 0}};
  rec.computed = {{"subgroups_of_ZF", subs.size()}, {"ordered_pairs", pairs}, {"violations", violations}};
}

using ClaimFn = void (*)(Session&, ClaimRecord&, Checks&);

}  // namespace

std::size_t VerifyReport::passed() const {
  return static_cast<std::size_t>(std::count_if(claims.begin(), claims.end(), [](const auto& c) { return c.pass; }));
}

const ClaimRecord& VerifyReport::claim(const std::string& id) const {
  for (const auto& c : claims) {
    if (c.id == id) return c;
  }
  throw UsageError("unknown claim " + id);
}

VerifyReport run_verification(const VerifyOptions& options) {
  ContextOptions ctx_options;
  ctx_options.q = 8;
  ctx_options.cache_dir = options.cache_dir;
  const SuzukiContext ctx = SuzukiContext::build(ctx_options);
  Session session{ctx, ctx.named(), options, {}, {}};
  if (options.corrupt_b0) {
    const std::vector<ElementId> seeds = {ctx.named().H.generators()[0], ctx.named().ORDER2.generators()[0]};
    session.named.B0 = closure(ctx.group(), seeds);
  }

  const std::vector<std::tuple<const char*, const char*, ClaimFn>> claims = {
      {"AC1", "construction of Sz(8) on its ovoid", claim_construction},
      {"AC2", "subgroup catalogue and partition", claim_catalogue},
      {"AC3", "combinatorial depth values", claim_combinatorial},
      {"AC4", "depth sandwich invariants", claim_sandwich},
      {"AC5", "character tables", claim_tables},
      {"AC6", "ordinary depth", claim_ordinary},
      {"AC7", "Sylow 2-subgroup lab at q=512, s=8", claim_sylow},
      {"AC8", "field automorphism pi", claim_field},
      {"AC9", "counting bounds and existence inequality", claim_bounds},
      {"AC10", "intersections of subgroups of Z(F)", claim_intersection},
  };

  VerifyReport report;
  report.moduli = {{"GF(8)", format_modulus(Field::default_modulus(3))},
                   {"GF(32)", format_modulus(Field::default_modulus(5))},
                   {"GF(512)", format_modulus(Field::default_modulus(9))}};
  for (const auto& [id, title, fn] : claims) {
    ClaimRecord rec;
    rec.id = id;
    rec.title = title;
    Checks checks(rec);
    const auto start = std::chrono::steady_clock::now();
    try {
      fn(session, rec, checks);
    } catch (const Error& e) {
      rec.failures.push_back(std::string("error: ") + e.what());
    }
    rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    rec.pass = rec.failures.empty();
    report.claims.push_back(std::move(rec));
  }
  return report;
}

nlohmann::json VerifyReport::to_json(bool timings) const {
  nlohmann::json out;
  out["schema_version"] = kSchemaVersion;
  out["tool_version"] = kToolVersion;
  out["q"] = 8;
  out["moduli"] = moduli;
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : claims) {
    nlohmann::json j = {{"id", c.id},
                        {"claim", c.title},
                        {"expected", c.expected},
                        {"computed", c.computed},
                        {"pass", c.pass},
                        {"failed_checks", c.failures}};
    if (timings) j["runtime_seconds"] = c.seconds;
    list.push_back(std::move(j));
  }
  out["claims"] = std::move(list);
  out["summary"] = {{"passed", passed()}, {"failed", failed()}, {"total", claims.size()}};
  return out;
}

std::string VerifyReport::to_table(bool timings) const {
  std::ostringstream out;
  for (const auto& c : claims) {
    out << std::left << std::setw(6) << c.id << (c.pass ? "PASS" : "FAIL") << "  " << c.title;
    if (timings) out << "  (" << std::fixed << std::setprecision(2) << c.seconds << " s)";
    if (!c.pass) {
      out << "  [failed:";
      for (const auto& f : c.failures) out << ' ' << f;
      out << ']';
    }
    out << '\n';
  }
  out << passed() << '/' << claims.size() << " claims pass\n";
  return out.str();
}

}  // namespace sz
