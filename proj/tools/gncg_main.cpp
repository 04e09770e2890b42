// Command-line front door: build groups, enumerate subgroups, construct and
// analyze the relative g-noncommuting graph, export DOT/CSV/JSON, and run
// the verification suites.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gncg/delta.hpp"
#include "gncg/descriptor.hpp"
#include "gncg/dot.hpp"
#include "gncg/parallel.hpp"
#include "gncg/report.hpp"
#include "gncg/subgroup_enum.hpp"
#include "gncg/sweep.hpp"
#include "gncg/verify.hpp"

namespace {

// Exit codes: 0 ok, 1 verification failures, 2 usage (CLI11), 3 bad
// descriptor/argument, 4 size cap exceeded, 5 unknown element name.
enum ExitCode { kOk = 0, kVerifyFailed = 1, kBadArgument = 3, kSizeCap = 4, kUnknownName = 5 };

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  f << content;
  if (!f) throw std::invalid_argument("cannot write output file: " + path);
}

std::string subgroup_display(const gncg::GroupTable& g, const gncg::Subgroup& h) {
  std::string members = "{";
  for (std::size_t i = 0; i < h.members.size(); ++i) {
    if (i) members += ",";
    members += g.name(h.members[i]);
  }
  members += "}";
  return members;
}

gncg::Subgroup resolve_single_subgroup(const gncg::GroupTable& g, const std::string& selector,
                                       int max_order) {
  std::vector<gncg::Subgroup> matches = gncg::select_subgroups(g, selector, max_order);
  if (matches.size() != 1)
    throw std::invalid_argument("subgroup selector '" + selector + "' matches " +
                                std::to_string(matches.size()) + " subgroups; need exactly one");
  return matches.front();
}

nlohmann::json graph_report_json(const gncg::GroupTable& g, const gncg::GraphReport& rep) {
  nlohmann::json degree = nlohmann::json::object();
  for (std::size_t i = 0; i < rep.labels.size(); ++i)
    degree[g.name(rep.labels[i])] = rep.degree[i];
  nlohmann::json isolated = nlohmann::json::array();
  for (gncg::Elem e : rep.isolated) isolated.push_back(g.name(e));
  return nlohmann::json{{"n_vertices", rep.n_vertices},
                        {"n_edges", rep.n_edges},
                        {"connected", rep.connected},
                        {"diameter", rep.diameter ? nlohmann::json(*rep.diameter) : nlohmann::json("inf")},
                        {"is_tree", rep.is_tree},
                        {"is_star", rep.is_star},
                        {"is_complete", rep.is_complete},
                        {"is_empty_edgeset", rep.is_empty_edgeset},
                        {"isolated", isolated},
                        {"degree", degree}};
}

int cmd_info(const std::string& group_desc, const std::string& format, const std::string& out) {
  gncg::GroupTable g = gncg::make_group(group_desc);
  gncg::Subgroup z = gncg::center(g);
  auto classes = gncg::conjugacy_classes(g);
  if (format == "json") {
    nlohmann::json jz = nlohmann::json::array();
    for (gncg::Elem e : z.members) jz.push_back(g.name(e));
    nlohmann::json jc = nlohmann::json::array();
    for (const auto& cls : classes) {
      nlohmann::json c = nlohmann::json::array();
      for (gncg::Elem e : cls) c.push_back(g.name(e));
      jc.push_back(c);
    }
    nlohmann::json orders = nlohmann::json::object();
    for (gncg::Elem e = 0; e < g.order(); ++e) orders[g.name(e)] = g.element_order(e);
    write_output(out, nlohmann::json{{"schema", 1},
                                     {"group", g.tag().descriptor},
                                     {"order", g.order()},
                                     {"abelian", g.is_abelian()},
                                     {"center", jz},
                                     {"conjugacy_classes", jc},
                                     {"element_orders", orders}}
                          .dump(2) +
                          "\n");
    return kOk;
  }
  std::ostringstream os;
  os << "group " << g.tag().descriptor << ": order " << g.order()
     << (g.is_abelian() ? ", abelian" : ", non-abelian") << "\n";
  os << "center (" << z.size() << "): " << subgroup_display(g, z) << "\n";
  os << "conjugacy classes (" << classes.size() << "):\n";
  for (const auto& cls : classes) {
    os << "  size " << cls.size() << ": {";
    for (std::size_t i = 0; i < cls.size(); ++i) {
      if (i) os << ",";
      os << g.name(cls[i]);
    }
    os << "}\n";
  }
  write_output(out, os.str());
  return kOk;
}

int cmd_subgroups(const std::string& group_desc, const std::string& selector, const std::string& format,
                  const std::string& out, int max_order) {
  gncg::GroupTable g = gncg::make_group(group_desc);
  std::vector<gncg::Subgroup> subs = gncg::select_subgroups(g, selector, max_order);
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const gncg::Subgroup& h : subs) {
      nlohmann::json members = nlohmann::json::array();
      for (gncg::Elem e : h.members) members.push_back(g.name(e));
      nlohmann::json gens = nlohmann::json::array();
      for (gncg::Elem e : gncg::minimal_generators(g, h)) gens.push_back(g.name(e));
      arr.push_back(nlohmann::json{{"order", h.size()}, {"generators", gens}, {"members", members}});
    }
    write_output(out, nlohmann::json{{"schema", 1}, {"group", g.tag().descriptor}, {"subgroups", arr}}
                          .dump(2) +
                          "\n");
    return kOk;
  }
  std::ostringstream os;
  os << g.tag().descriptor << ": " << subs.size() << " subgroup(s)\n";
  for (const gncg::Subgroup& h : subs) {
    os << "  order " << h.size() << "  gen:";
    auto gens = gncg::minimal_generators(g, h);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (i) os << ",";
      os << g.name(gens[i]);
    }
    os << "  " << subgroup_display(g, h) << "\n";
  }
  write_output(out, os.str());
  return kOk;
}

int cmd_delta(const std::string& group_desc, const std::string& selector, const std::string& g_name,
              const std::string& format, const std::string& out, int max_order) {
  gncg::GroupTable g = gncg::make_group(group_desc);
  gncg::Subgroup h = resolve_single_subgroup(g, selector, max_order);
  gncg::Elem el = gncg::parse_element(g, g_name);
  gncg::DeltaGraphSpec spec = gncg::make_delta_spec(g, h, el);
  gncg::UGraph graph = gncg::build_delta(spec);
  gncg::GraphReport rep = gncg::analyze(graph);
  if (format == "json") {
    nlohmann::json j = nlohmann::json{{"schema", 1},
                                      {"group", g.tag().descriptor},
                                      {"subgroup", subgroup_display(g, h)},
                                      {"g", g.name(el)},
                                      {"admissibility", std::string(to_string(admissibility(spec)))},
                                      {"z_hg_size", spec.z_hg.size()},
                                      {"k_hg_size", spec.k_hg.size()},
                                      {"report", graph_report_json(g, rep)}};
    write_output(out, j.dump(2) + "\n");
    return kOk;
  }
  std::ostringstream os;
  os << "delta graph for " << g.tag().descriptor << ", H=" << subgroup_display(g, h)
     << ", g=" << g.name(el) << "\n";
  os << "admissibility: " << to_string(admissibility(spec)) << "  |Z(H,G)|=" << spec.z_hg.size()
     << "  |K(H,G)|=" << spec.k_hg.size() << "\n";
  os << "vertices=" << rep.n_vertices << " edges=" << rep.n_edges
     << " connected=" << (rep.connected ? "true" : "false")
     << " diameter=" << (rep.diameter ? std::to_string(*rep.diameter) : "inf")
     << " tree=" << (rep.is_tree ? "true" : "false") << " star=" << (rep.is_star ? "true" : "false")
     << " complete=" << (rep.is_complete ? "true" : "false") << "\n";
  if (!rep.isolated.empty()) {
    os << "isolated:";
    for (gncg::Elem e : rep.isolated) os << " " << g.name(e);
    os << "\n";
  }
  write_output(out, os.str());
  return kOk;
}

int cmd_sweep(const std::string& group_desc, const std::string& selector, const std::string& g_sel,
              const std::string& out, int max_order) {
  gncg::GroupTable g = gncg::make_group(group_desc);
  std::vector<gncg::Subgroup> subs = gncg::select_subgroups(g, selector, max_order);
  std::vector<gncg::SweepRow> rows = gncg::sweep_rows(g, subs, g_sel);
  write_output(out, gncg::sweep_csv(rows));
  return kOk;
}

int cmd_export(const std::string& group_desc, const std::string& selector, const std::string& g_name,
               const std::string& out, int max_order) {
  gncg::GroupTable g = gncg::make_group(group_desc);
  gncg::Subgroup h = resolve_single_subgroup(g, selector, max_order);
  gncg::Elem el = gncg::parse_element(g, g_name);
  gncg::DeltaGraphSpec spec = gncg::make_delta_spec(g, h, el);
  gncg::UGraph graph = gncg::build_delta(spec);
  write_output(out, gncg::to_dot(g, graph, g.tag().descriptor, gncg::minimal_generators(g, h), el));
  return kOk;
}

int cmd_verify(const std::vector<std::string>& suites, int jobs, const std::string& out,
               const std::string& figures_dir) {
  gncg::verify::Options opts;
  opts.jobs = jobs;
  opts.figures_dir = figures_dir;
  std::vector<gncg::VerificationReport> reports = gncg::verify::run_suites(suites, opts);
  std::cout << gncg::verify::summary_table(reports);
  if (!out.empty()) write_output(out, gncg::reports_to_json(reports).dump(2) + "\n");
  for (const auto& r : reports)
    if (r.status() == gncg::VerificationReport::Status::Fail) return kVerifyFailed;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"relative g-noncommuting graph toolkit"};
  app.require_subcommand(1);

  std::string group_desc, out_path;
  std::string subgroup_sel = "all";
  std::string g_sel = "1";
  std::string format = "text";
  int jobs = gncg::default_jobs();
  int max_order = 200;
  std::vector<std::string> suites;
  std::string figures_dir = "figures";

  auto add_group_opt = [&](CLI::App* cmd, bool required = true) {
    auto* o = cmd->add_option("--group", group_desc, "group descriptor (D:12, Q:8, A:4, S:4, C:6, P:D:6xC:2)");
    if (required) o->required();
  };

  CLI::App* info = app.add_subcommand("info", "order, center and conjugacy class data");
  add_group_opt(info);
  info->add_option("--format", format, "text|json");
  info->add_option("--out", out_path, "output path (default stdout)");

  CLI::App* subgroups = app.add_subcommand("subgroups", "list the subgroup catalog");
  add_group_opt(subgroups);
  subgroups->add_option("--subgroup", subgroup_sel, "all | order:<k> | gen:<names>");
  subgroups->add_option("--format", format, "text|json");
  subgroups->add_option("--out", out_path, "output path");
  subgroups->add_option("--max-order", max_order, "subgroup enumeration order cap");

  CLI::App* delta = app.add_subcommand("delta", "build one graph and print its report");
  add_group_opt(delta);
  delta->add_option("--subgroup", subgroup_sel, "selector resolving to exactly one subgroup")->required();
  delta->add_option("--g", g_sel, "element name, e.g. a^2 (identity: 1)");
  delta->add_option("--format", format, "text|json");
  delta->add_option("--out", out_path, "output path");
  delta->add_option("--max-order", max_order, "subgroup enumeration order cap");

  CLI::App* sweep = app.add_subcommand("sweep", "CSV row per (H, g) case");
  add_group_opt(sweep);
  sweep->add_option("--subgroup", subgroup_sel, "all | order:<k> | gen:<names>");
  std::string sweep_g = "all-admissible";
  sweep->add_option("--g", sweep_g, "all-admissible | all | element name");
  sweep->add_option("--out", out_path, "output path");
  sweep->add_option("--max-order", max_order, "subgroup enumeration order cap");

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("suites", suites, "suite names or theorem ids (default: all)");
  verify->add_option("--jobs", jobs, "worker threads (default: GNCG_JOBS or 1)");
  verify->add_option("--out", out_path, "write JSON reports here");
  verify->add_option("--figures-dir", figures_dir, "directory for DOT figure exports");

  CLI::App* exp = app.add_subcommand("export", "write one graph as DOT");
  add_group_opt(exp);
  exp->add_option("--subgroup", subgroup_sel, "selector resolving to exactly one subgroup")->required();
  exp->add_option("--g", g_sel, "element name");
  exp->add_option("--out", out_path, "output path (default stdout)");
  exp->add_option("--max-order", max_order, "subgroup enumeration order cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (info->parsed()) return cmd_info(group_desc, format, out_path);
    if (subgroups->parsed()) return cmd_subgroups(group_desc, subgroup_sel, format, out_path, max_order);
    if (delta->parsed()) return cmd_delta(group_desc, subgroup_sel, g_sel, format, out_path, max_order);
    if (sweep->parsed()) return cmd_sweep(group_desc, subgroup_sel, sweep_g, out_path, max_order);
    if (verify->parsed()) return cmd_verify(suites, jobs, out_path, figures_dir);
    if (exp->parsed()) return cmd_export(group_desc, subgroup_sel, g_sel, out_path, max_order);
  } catch (const gncg::SizeCapError& e) {
    std::cerr << "size cap exceeded: " << e.what() << "\n";
    return kSizeCap;
  } catch (const gncg::NameLookupError& e) {
    std::cerr << "unknown name: " << e.what() << "\n";
    return kUnknownName;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kBadArgument;
  }
  return kOk;
}
