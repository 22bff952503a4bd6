#include "qcubes/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <map>
#include <optional>
#include <ostream>
#include <set>

#include "qcubes/errors.hpp"
#include "qcubes/lattice.hpp"
#include "qcubes/qcalc.hpp"

namespace qcubes::cli {

namespace {

Exponent parse_int(std::string_view s, const std::string& context) {
  Exponent v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || s.empty()) throw InvalidParams("malformed integer in " + context);
  return v;
}

/// Parameter names used anywhere in the catalog; each becomes a --<name> flag.
std::set<std::string> catalog_param_names() {
  std::set<std::string> names;
  for (const auto& d : list_identities()) names.insert(d.params.begin(), d.params.end());
  return names;
}

struct Options {
  std::vector<std::string> ids;
  bool all = false;
  std::vector<std::string> ranges;
  std::string format = "text";
  std::string side = "both";
  bool timing = false;
  bool verbose = false;
  unsigned threads = 0;
  Exponent lattice_n = 0;
  bool hooks = false;
  bool regions = false;
  std::map<std::string, std::optional<Exponent>> values;
};

Assignment collect_params(const IdentityDescriptor& d, const Options& o) {
  Assignment a;
  for (const auto& name : d.params) {
    auto it = o.values.find(name);
    if (it == o.values.end() || !it->second) throw InvalidParams(d.id + " requires --" + name);
    a.set(name, *it->second);
  }
  for (const auto& [name, value] : o.values) {
    if (value && !a.has(name)) throw InvalidParams(d.id + " has no parameter " + name);
  }
  return a;
}

int cmd_list(std::ostream& out) {
  for (const auto& d : list_identities()) {
    std::string params;
    for (const auto& p : d.params) params += (params.empty() ? "" : ",") + p;
    out << d.id << '\t' << d.label << '\t' << params << '\n';
  }
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.all == !o.ids.empty()) throw InvalidParams("verify needs exactly one of --id or --all");
  if (o.all && !o.ranges.empty()) throw InvalidParams("--range cannot be combined with --all");

  std::vector<const IdentityDescriptor*> targets;
  if (o.all) {
    for (const auto& d : list_identities()) targets.push_back(&d);
  } else {
    for (const auto& id : o.ids) targets.push_back(&find_identity(id));
  }
  std::vector<ParamRange> ranges;
  for (const auto& r : o.ranges) ranges.push_back(parse_range(r));

  // Validate every grid before running anything so usage errors exit early.
  std::vector<std::vector<ParamRange>> plans;
  for (const auto* d : targets) {
    plans.push_back(ranges.empty() ? d->default_ranges : ranges);
    expand_grid(*d, plans.back());
  }

  bool all_passed = true;
  nlohmann::ordered_json reports = nlohmann::ordered_json::array();
  for (std::size_t t = 0; t < targets.size(); ++t) {
    const GridReport grid = verify_grid(targets[t]->id, plans[t], o.threads);
    all_passed = all_passed && grid.passed();
    for (const auto& r : grid.instances) {
      if (o.format == "json") {
        reports.push_back(to_json(r, o.timing));
        continue;
      }
      out << to_text_line(r);
      if (o.timing) out << ' ' << r.elapsed_ms << "ms";
      out << '\n';
      if (o.verbose && r.outcome == Outcome::kFail) {
        out << "  lhs: " << r.lhs << "\n  rhs: " << r.rhs << '\n';
      }
      if (o.verbose && !r.error.empty()) out << "  " << r.error << '\n';
    }
  }
  if (o.format == "json") out << reports.dump(2) << '\n';
  return all_passed ? 0 : 1;
}

std::string render_side(const RationalFn& r) { return to_string(r); }

int cmd_show(const Options& o, std::ostream& out) {
  if (o.ids.size() != 1) throw InvalidParams("show needs exactly one --id");
  const IdentityDescriptor& d = find_identity(o.ids.front());
  const Assignment a = collect_params(d, o);
  if (o.side == "lhs" || o.side == "both") {
    const std::string text = render_side(build_side(d.id, Side::kLhs, a));
    out << (o.side == "both" ? "lhs: " : "") << text << '\n';
  }
  if (o.side == "rhs" || o.side == "both") {
    const std::string text = render_side(build_side(d.id, Side::kRhs, a));
    out << (o.side == "both" ? "rhs: " : "") << text << '\n';
  }
  return 0;
}

// Cell labels: index of the hook (or region) containing each point.
void render_membership(std::ostream& out, Exponent side, const std::vector<PointSet>& parts) {
  std::vector<std::vector<std::size_t>> label(static_cast<std::size_t>(side),
                                              std::vector<std::size_t>(static_cast<std::size_t>(side), 0));
  for (std::size_t idx = 0; idx < parts.size(); ++idx) {
    for (const auto& p : parts[idx]) label[static_cast<std::size_t>(p.j)][static_cast<std::size_t>(p.i)] = idx + 1;
  }
  for (const auto& row : label) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? " " : "") << row[c];
    out << '\n';
  }
}

int cmd_lattice(const Options& o, std::ostream& out) {
  const Exponent n = o.lattice_n;
  if (n < 1) throw InvalidParams("lattice needs --n >= 1");
  out << render_weight_matrix(n);
  if (o.hooks) {
    std::vector<PointSet> hooks;
    for (Exponent k = 1; k <= n; ++k) hooks.push_back(hook_points(k, n));
    out << "\nhooks of S_" << n << ":\n";
    render_membership(out, n, hooks);
    for (Exponent k = 1; k <= n; ++k) {
      out << "w(h_" << k << ") = " << to_string(weight_of(hooks[static_cast<std::size_t>(k - 1)], n)) << '\n';
    }
  }
  if (o.regions) {
    const Exponent side = triangular(n);
    std::vector<PointSet> regions;
    for (Exponent j = 1; j <= n; ++j) regions.push_back(region_points(j, n));
    out << "\nregions of S_" << side << ":\n";
    render_membership(out, side, regions);
    for (Exponent j = 1; j <= n; ++j) {
      out << "w(R_" << j << ") = " << to_string(weight_of(regions[static_cast<std::size_t>(j - 1)], side)) << '\n';
    }
  }
  return 0;
}

int cmd_limits(const Options& o, std::ostream& out) {
  if (o.ids.size() != 1) throw InvalidParams("limits needs exactly one --id");
  const IdentityDescriptor& d = find_identity(o.ids.front());
  const VerificationReport r = classical_limit_check(d.id, collect_params(d, o));
  out << to_text_line(r) << '\n';
  const Assignment a = collect_params(d, o);
  if (r.outcome != Outcome::kError) out << "  " << d.classical << "  [" << d.classical_value(a).get_str() << "]\n";
  if (!r.error.empty()) out << "  " << r.error << '\n';
  return r.passed() ? 0 : 1;
}

}  // namespace

ParamRange parse_range(const std::string& text) {
  const auto eq = text.find('=');
  const auto dots = text.find("..", eq == std::string::npos ? 0 : eq);
  if (eq == std::string::npos || eq == 0 || dots == std::string::npos) {
    throw InvalidParams("malformed range '" + text + "', expected name=lo..hi");
  }
  ParamRange r;
  r.name = text.substr(0, eq);
  r.lo = parse_int(std::string_view(text).substr(eq + 1, dots - eq - 1), text);
  r.hi = parse_int(std::string_view(text).substr(dots + 2), text);
  if (r.lo > r.hi) throw InvalidParams("empty range '" + text + "'");
  return r;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of q-analogues of sum-of-cubes identities", "qcubes"};
  app.require_subcommand(1);
  Options o;

  auto* list = app.add_subcommand("list", "List the identity catalog");

  auto* verify = app.add_subcommand("verify", "Verify identities over parameter grids");
  verify->add_option("--id", o.ids, "Identity id (repeatable)");
  verify->add_flag("--all", o.all, "Verify the whole catalog over its default grids");
  verify->add_option("--range", o.ranges, "Parameter range name=lo..hi (repeatable)");
  verify->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--timing", o.timing, "Report elapsed time per instance");
  verify->add_option("--threads", o.threads, "Worker threads (0 = hardware concurrency)");
  verify->add_flag("-v,--verbose", o.verbose, "Print failing sides and error details");

  auto* show = app.add_subcommand("show", "Print one side of an identity instance");
  show->add_option("--id", o.ids, "Identity id")->required();
  show->add_option("--side", o.side, "lhs, rhs or both")->check(CLI::IsMember({"lhs", "rhs", "both"}));

  auto* limits = app.add_subcommand("limits", "Check the q = 1 specialisation");
  limits->add_option("--id", o.ids, "Identity id")->required();

  for (const auto& name : catalog_param_names()) {
    o.values[name];
  }
  for (auto& [name, value] : o.values) {
    show->add_option("--" + name, value, "Value of parameter " + name);
    limits->add_option("--" + name, value, "Value of parameter " + name);
  }

  auto* lattice = app.add_subcommand("lattice", "Print the weighted square S_n");
  lattice->add_option("--n", o.lattice_n, "Side length")->required();
  lattice->add_flag("--hooks", o.hooks, "Also print hook membership and weights");
  lattice->add_flag("--regions", o.regions, "Also print the regions of S_T(n)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (list->parsed()) return cmd_list(out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (show->parsed()) return cmd_show(o, out);
    if (lattice->parsed()) return cmd_lattice(o, out);
    if (limits->parsed()) return cmd_limits(o, out);
  } catch (const UnknownIdentity& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const InvalidParams& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const IndexOutOfRange& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace qcubes::cli
