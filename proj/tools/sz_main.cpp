// sz: command-line front end for the Suzuki group engine.

#include <bit>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sz/bounds.hpp"
#include "sz/cache.hpp"
#include "sz/cdepth.hpp"
#include "sz/chartable.hpp"
#include "sz/context.hpp"
#include "sz/error.hpp"
#include "sz/odepth.hpp"
#include "sz/s2lab.hpp"
#include "sz/verify.hpp"

namespace {

constexpr int kExitClaimFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitComputation = 3;

struct CommonFlags {
  std::uint32_t q = 8;
  std::string modulus;
  std::string cache_dir;
  std::string format = "json";
  unsigned jobs = 1;
};

std::optional<std::filesystem::path> resolve_cache_dir(const CommonFlags& f) {
  if (!f.cache_dir.empty()) return std::filesystem::path(f.cache_dir);
  if (const char* env = std::getenv("SZ_CACHE_DIR"); env != nullptr && *env != '\0') return std::filesystem::path(env);
  return std::nullopt;
}

std::uint32_t checked_modulus(const CommonFlags& f) {
  try {
    const std::uint32_t mod = sz::parse_modulus(f.modulus);
    sz::Field(sz::field_degree_of(f.q), mod);
    return mod;
  } catch (const sz::FieldError& e) {
    throw sz::UsageError(std::string("bad --modulus: ") + e.what());
  }
}

sz::ContextOptions context_options(const CommonFlags& f) {
  sz::ContextOptions o;
  o.q = f.q;
  if (!f.modulus.empty()) o.modulus = checked_modulus(f);
  o.cache_dir = resolve_cache_dir(f);
  return o;
}

void print_json(nlohmann::json j) {
  j["schema_version"] = sz::kSchemaVersion;
  std::cout << j.dump(2) << '\n';
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw sz::UsageError("unsupported --format " + format + " for this command");
}

void add_common(CLI::App* cmd, CommonFlags& f, bool with_q = true) {
  if (with_q) cmd->add_option("--q", f.q, "field size q = 2^(2m+1)");
  cmd->add_option("--modulus", f.modulus, "field modulus as exponents, e.g. 3,1,0");
  cmd->add_option("--cache-dir", f.cache_dir, "group cache directory (default: $SZ_CACHE_DIR)");
  cmd->add_option("--format", f.format, "json or csv");
  cmd->add_option("--jobs", f.jobs, "worker threads")->check(CLI::Range(1U, 256U));
}

int cmd_build(const CommonFlags& f) {
  require_format(f.format, {"json"});
  const auto options = context_options(f);
  const auto ctx = sz::SuzukiContext::build(options);
  nlohmann::json out = {{"q", ctx.q()},
                        {"modulus", sz::format_modulus(ctx.field().modulus())},
                        {"order", ctx.group().order()},
                        {"degree", ctx.group().degree()},
                        {"digest", ctx.group().digest()},
                        {"from_cache", ctx.from_cache()}};
  if (options.cache_dir) out["cache_file"] = sz::cache_file(*options.cache_dir, ctx.q(), ctx.field().modulus()).string();
  print_json(out);
  return 0;
}

int cmd_subgroups(const CommonFlags& f) {
  require_format(f.format, {"json", "csv"});
  const auto ctx = sz::SuzukiContext::build(context_options(f));
  const auto& g = ctx.group();
  if (f.format == "csv") {
    std::cout << "name,order,normalizer_order,normal,trivial_intersection\n";
  }
  nlohmann::json list = nlohmann::json::array();
  for (const auto& name : sz::subgroup_names()) {
    const auto& h = sz::subgroup_by_name(ctx.named(), name);
    const auto n = sz::normalizer(g, h).order();
    const bool normal = sz::is_normal(g, h);
    const bool ti = sz::is_trivial_intersection(g, h);
    if (f.format == "csv") {
      std::cout << name << ',' << h.order() << ',' << n << ',' << (normal ? "true" : "false") << ','
                << (ti ? "true" : "false") << '\n';
    }
    list.push_back({{"name", name},
                    {"order", h.order()},
                    {"normalizer_order", n},
                    {"normal", normal},
                    {"trivial_intersection", ti}});
  }
  if (f.format == "json") print_json({{"q", ctx.q()}, {"subgroups", list}});
  return 0;
}

int cmd_depth(const std::string& kind, const std::string& subgroup, const CommonFlags& f) {
  if (subgroup.empty()) throw sz::UsageError("--subgroup is required");
  const auto ctx = sz::SuzukiContext::build(context_options(f));
  const auto& g = ctx.group();
  const auto& h = sz::subgroup_by_name(ctx.named(), subgroup);
  const sz::DepthProfile p = sz::dc_min(g, h, f.jobs);
  if (kind == "comb") {
    require_format(f.format, {"json"});
    nlohmann::json out = p.to_json();
    out["subgroup"] = subgroup;
    print_json(out);
    return 0;
  }
  require_format(f.format, {"json", "csv"});
  const auto tg = sz::character_table(g, {.jobs = f.jobs});
  const auto r = sz::ordinary_depth(g, h, tg, p.delta_star, p.core_central, f.jobs);
  if (f.format == "csv") {
    std::cout << sz::inclusion_to_csv(r.matrix);
    return 0;
  }
  nlohmann::json out = r.to_json();
  out["subgroup"] = subgroup;
  print_json(out);
  return 0;
}

int cmd_chartable(const std::string& subgroup, const CommonFlags& f) {
  require_format(f.format, {"json", "csv"});
  const auto ctx = sz::SuzukiContext::build(context_options(f));
  const auto& g = ctx.group();
  sz::CharacterTable t;
  if (subgroup.empty()) {
    t = sz::character_table(g, {.jobs = f.jobs});
  } else {
    const auto st = sz::standalone(g, sz::subgroup_by_name(ctx.named(), subgroup));
    t = sz::character_table(st.table, {.jobs = f.jobs});
  }
  if (f.format == "csv") {
    std::cout << sz::table_to_csv(t);
  } else {
    nlohmann::json out = sz::table_to_json(t);
    out["subgroup"] = subgroup.empty() ? "G" : subgroup;
    print_json(out);
  }
  return 0;
}

int cmd_sylowlab(std::uint32_t s, const CommonFlags& f) {
  require_format(f.format, {"json"});
  if (f.q != 8 && f.q != 32 && f.q != 512) throw sz::UsageError("sylowlab supports q in {8, 32, 512}");
  const int n = sz::field_degree_of(f.q);
  if (s < 2 || !std::has_single_bit(s)) throw sz::UsageError("--s must be a power of 2");
  const int d = std::countr_zero(s);
  const sz::Field field = f.modulus.empty() ? sz::Field::standard(n) : sz::Field(n, checked_modulus(f));
  try {
    const auto report = sz::sylow_lab(field, d, f.jobs);
    print_json(report.to_json());
    return report.ok() ? 0 : kExitClaimFailure;
  } catch (const sz::FieldError& e) {
    throw sz::UsageError(e.what());
  }
}

int cmd_bounds(std::uint64_t s, std::uint64_t t, bool sweep, std::uint64_t s_max, std::uint64_t t_max,
               const CommonFlags& f) {
  if (sweep) {
    require_format(f.format, {"csv", "json"});
    const auto reports = sz::bounds_sweep(s_max, t_max);
    if (f.format == "csv") {
      std::cout << sz::sweep_to_csv(reports);
    } else {
      nlohmann::json list = nlohmann::json::array();
      for (const auto& r : reports) list.push_back(r.to_json());
      print_json({{"reports", list}});
    }
    return 0;
  }
  require_format(f.format, {"json"});
  try {
    print_json(sz::counting_bounds(s, t).to_json());
  } catch (const sz::BoundsError& e) {
    if (std::string(e.what()).find("inexact") != std::string::npos) throw;
    throw sz::UsageError(e.what());
  }
  return 0;
}

int cmd_verify(bool timings, bool corrupt_b0, const CommonFlags& f) {
  if (f.q != 8) throw sz::UsageError("verify runs at q = 8 only");
  require_format(f.format, {"json", "table"});
  sz::VerifyOptions options;
  options.jobs = f.jobs;
  options.cache_dir = resolve_cache_dir(f);
  options.corrupt_b0 = corrupt_b0;
  const auto report = sz::run_verification(options);
  if (f.format == "table") {
    std::cout << report.to_table(timings);
  } else {
    std::cout << report.to_json(timings).dump(2) << '\n';
  }
  return report.all_pass() ? 0 : kExitClaimFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the Suzuki groups Sz(q)"};
  app.require_subcommand(1);
  CommonFlags flags;

  auto* build = app.add_subcommand("build", "enumerate Sz(q) and write the group cache");
  add_common(build, flags);

  auto* subgroups = app.add_subcommand("subgroups", "list the named subgroups");
  add_common(subgroups, flags);

  std::string kind;
  std::string subgroup;
  auto* depth = app.add_subcommand("depth", "combinatorial or ordinary depth of a named subgroup");
  depth->add_option("kind", kind, "comb or ord")->required()->check(CLI::IsMember({"comb", "ord"}));
  depth->add_option("--subgroup", subgroup, "subgroup name")->required();
  add_common(depth, flags);

  auto* chartable = app.add_subcommand("chartable", "character table of G or of a named subgroup");
  chartable->add_option("--subgroup", subgroup, "subgroup name (default: the whole group)");
  add_common(chartable, flags);

  std::uint32_t s_small = 8;
  auto* sylowlab = app.add_subcommand("sylowlab", "Sylow 2-subgroup checks from the u(a,b) law");
  sylowlab->add_option("--s", s_small, "subfield size s");
  add_common(sylowlab, flags);

  std::uint64_t bs = 8;
  std::uint64_t bt = 3;
  bool sweep = false;
  std::uint64_t s_max = 128;
  std::uint64_t t_max = 9;
  auto* bounds = app.add_subcommand("bounds", "counting bounds and the existence inequality");
  bounds->add_option("--s", bs, "subfield size s");
  bounds->add_option("--t", bt, "q = s^t");
  bounds->add_flag("--sweep", sweep, "evaluate every admissible (s, t) up to the limits");
  bounds->add_option("--s-max", s_max, "largest s in a sweep");
  bounds->add_option("--t-max", t_max, "largest t in a sweep");
  bounds->add_option("--format", flags.format, "json or csv");

  bool timings = false;
  bool corrupt_b0 = false;
  auto* verify = app.add_subcommand("verify", "evaluate every acceptance claim at q = 8");
  verify->add_flag("--timings", timings, "include runtimes (makes output run-dependent)");
  verify->add_flag("--corrupt-b0", corrupt_b0, "fault injection: build B0 from a wrong generating set");
  add_common(verify, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (bounds->parsed() && sweep && flags.format == "json" && !bounds->count("--format")) flags.format = "csv";
  if (verify->parsed() && !verify->count("--format")) flags.format = "table";

  try {
    if (build->parsed()) return cmd_build(flags);
    if (subgroups->parsed()) return cmd_subgroups(flags);
    if (depth->parsed()) return cmd_depth(kind, subgroup, flags);
    if (chartable->parsed()) return cmd_chartable(subgroup, flags);
    if (sylowlab->parsed()) return cmd_sylowlab(s_small, flags);
    if (bounds->parsed()) return cmd_bounds(bs, bt, sweep, s_max, t_max, flags);
    if (verify->parsed()) return cmd_verify(timings, corrupt_b0, flags);
  } catch (const sz::UsageError& e) {
    std::cerr << "sz: " << e.what() << '\n';
    return kExitUsage;
  } catch (const sz::Error& e) {
    std::cerr << "sz: " << e.what() << '\n';
    return kExitComputation;
  } catch (const std::exception& e) {
    std::cerr << "sz: " << e.what() << '\n';
    return kExitComputation;
  }
  return kExitUsage;
}
