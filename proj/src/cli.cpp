#include "togglekit/cli.hpp"

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "togglekit/chain_stats.hpp"
#include "togglekit/ehrhart.hpp"
#include "togglekit/json_io.hpp"
#include "togglekit/moon.hpp"
#include "togglekit/program.hpp"
#include "togglekit/render.hpp"
#include "togglekit/verify.hpp"

namespace togglekit {

namespace {

using nlohmann::json;

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

std::vector<int> parse_ints(const std::string& text, size_t count, const std::string& what) {
  std::vector<int> values;
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    size_t used = 0;
    values.push_back(std::stoi(part, &used));
    if (used != part.size()) throw std::invalid_argument(what + ": bad integer '" + part + "'");
  }
  if (values.size() != count)
    throw std::invalid_argument(what + ": expected " + std::to_string(count) + " integers");
  return values;
}

json rect_json(const MaxRect& rect) {
  return json{{"i1", rect.i1}, {"i2", rect.i2}, {"j1", rect.j1}, {"j2", rect.j2}};
}

std::string rect_pretty(const MaxRect& rect) {
  std::ostringstream out;
  out << "[" << rect.i1 << "," << rect.i2 << "]x[" << rect.j1 << "," << rect.j2 << "]";
  return out.str();
}

int do_apply(std::ostream& out, const std::string& map_text, const std::string& in_path,
             bool pretty) {
  MapProgram prog = parse_program(map_text);
  Labeling x = labeling_from_json(read_json_file(in_path));
  Labeling y = apply_program(x, prog);
  if (pretty)
    out << render_labeling_ascii(y);
  else
    emit(out, labeling_to_json(y));
  return 0;
}

int do_chains(std::ostream& out, const std::string& in_path, const std::string& rect_text, int k,
              bool oracle, bool pretty) {
  std::vector<int> rect = parse_ints(rect_text, 4, "--rect");
  Labeling x = labeling_from_json(read_json_file(in_path));
  PathFamilySpec spec{rect[0], rect[1], rect[2], rect[3], k};
  Rat value = max_weight(x, spec);
  json j{{"rect", rect}, {"k", k}, {"value", rat_str(value)}};
  int code = 0;
  if (oracle) {
    Rat brute = brute_force_max_weight(x, spec);
    j["oracle"] = rat_str(brute);
    j["ok"] = brute == value;
    if (brute != value) code = 1;
  }
  if (pretty) {
    out << "H_{" << rect[0] << "," << rect[1] << "}^{" << rect[2] << "," << rect[3] << "}(x;" << k
        << ") = " << rat_str(value) << '\n';
    if (oracle) out << "oracle = " << j["oracle"].get<std::string>() << '\n';
  } else {
    emit(out, j);
  }
  return code;
}

int do_moon_validate(std::ostream& out, const std::string& from_path, bool pretty) {
  MoonPoly m = moon_from_json(read_json_file(from_path));
  MoonReport report = validate_moon(m);
  if (pretty)
    out << (report.ok ? "valid moon polyomino" : "invalid: " + report.reason) << '\n';
  else
    emit(out, json{{"ok", report.ok}, {"reason", report.reason}});
  return report.ok ? 0 : 1;
}

int do_moon_rects(std::ostream& out, const std::string& from_path, bool pretty) {
  MoonPoly m = moon_from_json(read_json_file(from_path));
  std::vector<MaxRect> rects = maximal_rectangles(m);
  if (pretty) {
    for (const MaxRect& rect : rects) out << rect_pretty(rect) << '\n';
  } else {
    json arr = json::array();
    for (const MaxRect& rect : rects) arr.push_back(rect_json(rect));
    emit(out, json{{"rectangles", std::move(arr)}});
  }
  return 0;
}

int do_moon_straighten(std::ostream& out, const std::string& from_path, bool pretty) {
  MoonPoly m = moon_from_json(read_json_file(from_path));
  Straightening st = straighten(m);
  if (pretty) {
    for (const ShiftStep& step : st.steps)
      out << "shift " << (step.axis == ShiftAxis::DownDiagonals ? "down" : "up") << " "
          << rect_pretty(step.rect) << '\n';
    out << "lambda =";
    for (int part : st.lambda) out << ' ' << part;
    out << '\n';
  } else {
    json steps = json::array();
    for (const ShiftStep& step : st.steps)
      steps.push_back(json{{"rect", rect_json(step.rect)},
                           {"axis", step.axis == ShiftAxis::DownDiagonals ? "down" : "up"}});
    emit(out, json{{"lambda", st.lambda},
                   {"steps", std::move(steps)},
                   {"result", moon_to_json(st.result)}});
  }
  return 0;
}

int do_moon_map(std::ostream& out, const std::string& from_path, const std::string& to_path,
                const std::string& in_path, bool pretty) {
  Filling x = filling_from_json(read_json_file(in_path));
  if (!from_path.empty()) {
    MoonPoly m = moon_from_json(read_json_file(from_path));
    if (!(m == x.poly))
      throw std::invalid_argument("--from polyomino does not match the filling's cells");
  }
  MoonPoly n = moon_from_json(read_json_file(to_path));
  Filling y = omega_path(x, n);
  if (pretty)
    out << render_filling_ascii(y);
  else
    emit(out, filling_to_json(y));
  return 0;
}

int do_moon_stats(std::ostream& out, const std::string& in_path, int k, bool pretty) {
  Filling x = filling_from_json(read_json_file(in_path));
  Rat ne = ne_chain_max(x, k);
  int se = se_chain_max(x);
  if (pretty)
    out << "ne_chain_max(k=" << k << ") = " << rat_str(ne) << "\nse_chain_max = " << se << '\n';
  else
    emit(out, json{{"k", k}, {"ne_chain_max", rat_str(ne)}, {"se_chain_max", se}});
  return 0;
}

int do_ehrhart(std::ostream& out, const std::string& moon_path, int max_k, bool oracle,
               bool check_collapse, bool check_syt, bool pretty) {
  MoonPoly m = moon_from_json(read_json_file(moon_path));
  EhrhartTable table = ehrhart_table(m, max_k, false);
  int code = 0;
  json j;
  json counts = json::array();
  for (const Int& c : table.counts) counts.push_back(c.get_str());
  j["counts"] = std::move(counts);
  if (!table.coefficients.empty()) {
    json coeffs = json::array();
    for (const Rat& c : table.coefficients) coeffs.push_back(rat_str(c));
    j["coefficients"] = std::move(coeffs);
  }
  j["syt"] = table.syt.get_str();
  if (oracle) {
    json oracle_counts = json::array();
    bool ok = true;
    for (int k = 0; k <= max_k; ++k) {
      Int c = count_dilate_oracle(m, k);
      ok = ok && c == table.counts[static_cast<size_t>(k)];
      oracle_counts.push_back(c.get_str());
    }
    j["oracle_counts"] = std::move(oracle_counts);
    j["ok"] = ok;
    if (!ok) code = 1;
  }
  if (check_collapse) {
    CollapseReport report = period_collapse_check(m);
    json predicted = json::array(), actual = json::array();
    for (const Int& c : report.predicted) predicted.push_back(c.get_str());
    for (const Int& c : report.actual) actual.push_back(c.get_str());
    j["collapse"] = json{{"ok", report.ok},
                         {"first_mismatch", report.first_mismatch},
                         {"predicted", std::move(predicted)},
                         {"actual", std::move(actual)}};
    if (!report.ok) code = 1;
  }
  if (check_syt) {
    SytReport report = syt_volume_check(m);
    j["syt_check"] = json{{"ok", report.ok},
                          {"syt", report.syt.get_str()},
                          {"leading", rat_str(report.leading)},
                          {"scaled_leading", rat_str(report.scaled_leading)}};
    if (!report.ok) code = 1;
  }
  if (pretty) {
    for (size_t k = 0; k < table.counts.size(); ++k)
      out << "k=" << k << "  " << table.counts[k].get_str() << '\n';
    if (!table.coefficients.empty()) {
      out << "coefficients:";
      for (const Rat& c : table.coefficients) out << ' ' << rat_str(c);
      out << '\n';
    }
  } else {
    emit(out, j);
  }
  return code;
}

int do_verify(std::ostream& out, const std::string& property, bool list, int trials,
              std::uint64_t seed, const std::string& shape_text, bool pretty) {
  if (list) {
    emit(out, json{{"properties", verify_property_names()}});
    return 0;
  }
  if (property.empty()) throw CLI::ValidationError("verify", "property name required");
  std::vector<int> shape = parse_ints(shape_text, 2, "--shape");
  VerifyOptions opt;
  opt.trials = trials;
  opt.seed = seed;
  opt.r = shape[0];
  opt.s = shape[1];
  VerifyResult result = run_verify(property, opt);
  if (pretty) {
    out << result.property << ": " << (result.ok ? "ok" : "FAILED") << " (" << result.trials_run
        << " trials)\n";
    if (!result.ok) out << result.failure_message << '\n' << result.counterexample.dump(2) << '\n';
  } else {
    emit(out, verify_result_to_json(result));
  }
  return result.ok ? 0 : 1;
}

int do_render(std::ostream& out, const std::string& in_path, const std::string& format) {
  json j = read_json_file(in_path);
  bool tikz = format == "tikz";
  if (j.contains("shape")) {
    Labeling x = labeling_from_json(j);
    out << (tikz ? render_labeling_tikz(x) : render_labeling_ascii(x));
  } else if (j.contains("values")) {
    Filling x = filling_from_json(j);
    out << (tikz ? render_filling_tikz(x) : render_filling_ascii(x));
  } else if (j.contains("cells")) {
    MoonPoly m = moon_from_json(j);
    out << (tikz ? render_moon_tikz(m) : render_moon_ascii(m));
  } else {
    throw std::invalid_argument("input JSON is neither a labeling, polyomino, nor filling");
  }
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact toggles, toggle-RSK and moon-polyomino statistics"};
  app.require_subcommand(1);
  int code = 0;

  // apply
  auto* apply_cmd = app.add_subcommand("apply", "apply a map program to a labeling");
  std::string apply_map, apply_in;
  bool apply_pretty = false;
  apply_cmd->add_option("--map", apply_map, "map program, composed right-to-left with '.'")
      ->required();
  apply_cmd->add_option("--in", apply_in, "input labeling JSON")->required();
  apply_cmd->add_flag("--pretty", apply_pretty, "human-readable grid");
  apply_cmd->callback([&] { code = do_apply(out, apply_map, apply_in, apply_pretty); });

  // chains
  auto* chains_cmd = app.add_subcommand("chains", "evaluate a chain-family statistic");
  std::string chains_in, chains_rect;
  int chains_k = 1;
  bool chains_oracle = false, chains_pretty = false;
  chains_cmd->add_option("--in", chains_in, "input labeling JSON")->required();
  chains_cmd->add_option("--rect", chains_rect, "window u1,v1,u2,v2")->required();
  chains_cmd->add_option("--k", chains_k, "number of disjoint chains")->required();
  chains_cmd->add_flag("--oracle", chains_oracle, "cross-check against brute force");
  chains_cmd->add_flag("--pretty", chains_pretty, "human-readable value");
  chains_cmd->callback(
      [&] { code = do_chains(out, chains_in, chains_rect, chains_k, chains_oracle, chains_pretty); });

  // moon
  auto* moon_cmd = app.add_subcommand("moon", "moon polyomino operations");
  moon_cmd->require_subcommand(1);

  auto* mv = moon_cmd->add_subcommand("validate", "check the moon conditions");
  std::string mv_from;
  bool mv_pretty = false;
  mv->add_option("--from", mv_from, "polyomino JSON")->required();
  mv->add_flag("--pretty", mv_pretty, "human-readable report");
  mv->callback([&] { code = do_moon_validate(out, mv_from, mv_pretty); });

  auto* mr = moon_cmd->add_subcommand("rects", "list maximal rectangles");
  std::string mr_from;
  bool mr_pretty = false;
  mr->add_option("--from", mr_from, "polyomino JSON")->required();
  mr->add_flag("--pretty", mr_pretty, "human-readable list");
  mr->callback([&] { code = do_moon_rects(out, mr_from, mr_pretty); });

  auto* ms = moon_cmd->add_subcommand("straighten", "content-shift down to a partition");
  std::string ms_from;
  bool ms_pretty = false;
  ms->add_option("--from", ms_from, "polyomino JSON")->required();
  ms->add_flag("--pretty", ms_pretty, "human-readable steps");
  ms->callback([&] { code = do_moon_straighten(out, ms_from, ms_pretty); });

  auto* mm = moon_cmd->add_subcommand("map", "transport a filling to an equivalent polyomino");
  std::string mm_from, mm_to, mm_in;
  bool mm_pretty = false;
  mm->add_option("--from", mm_from, "source polyomino JSON (checked against the filling)");
  mm->add_option("--to", mm_to, "target polyomino JSON")->required();
  mm->add_option("--in", mm_in, "input filling JSON")->required();
  mm->add_flag("--pretty", mm_pretty, "human-readable grid");
  mm->callback([&] { code = do_moon_map(out, mm_from, mm_to, mm_in, mm_pretty); });

  auto* mst = moon_cmd->add_subcommand("stats", "chain statistics of a filling");
  std::string mst_in;
  int mst_k = 1;
  bool mst_pretty = false;
  mst->add_option("--in", mst_in, "input filling JSON")->required();
  mst->add_option("--k", mst_k, "number of disjoint chains")->required();
  mst->add_flag("--pretty", mst_pretty, "human-readable values");
  mst->callback([&] { code = do_moon_stats(out, mst_in, mst_k, mst_pretty); });

  // ehrhart
  auto* ehr = app.add_subcommand("ehrhart", "Ehrhart counts of QSTAB(M)");
  std::string ehr_moon;
  int ehr_max_k = 0;
  bool ehr_oracle = false, ehr_collapse = false, ehr_syt = false, ehr_pretty = false;
  ehr->add_option("--moon", ehr_moon, "polyomino JSON")->required();
  ehr->add_option("--max-k", ehr_max_k, "largest dilate")->required();
  ehr->add_flag("--oracle", ehr_oracle, "cross-check counts by enumeration");
  ehr->add_flag("--check-collapse", ehr_collapse, "verify the interpolant beyond degree");
  ehr->add_flag("--check-syt", ehr_syt, "verify leading coefficient * |M|! = SYT count");
  ehr->add_flag("--pretty", ehr_pretty, "human-readable table");
  ehr->callback([&] {
    code = do_ehrhart(out, ehr_moon, ehr_max_k, ehr_oracle, ehr_collapse, ehr_syt, ehr_pretty);
  });

  // verify
  auto* ver = app.add_subcommand("verify", "randomized property checking");
  std::string ver_property, ver_shape = "3,3";
  int ver_trials = 200;
  std::uint64_t ver_seed = 1;
  bool ver_list = false, ver_pretty = false;
  ver->add_option("property", ver_property, "property suite name");
  ver->add_option("--trials", ver_trials, "number of seeded trials");
  ver->add_option("--seed", ver_seed, "root seed");
  ver->add_option("--shape", ver_shape, "rectangle r,s");
  ver->add_flag("--list", ver_list, "list property names");
  ver->add_flag("--pretty", ver_pretty, "human-readable summary");
  ver->callback([&] {
    code = do_verify(out, ver_property, ver_list, ver_trials, ver_seed, ver_shape, ver_pretty);
  });

  // render
  auto* ren = app.add_subcommand("render", "ASCII or TikZ picture of a JSON object");
  std::string ren_in, ren_format = "ascii";
  ren->add_option("--in", ren_in, "labeling, polyomino, or filling JSON")->required();
  ren->add_option("--format", ren_format, "ascii or tikz")
      ->check(CLI::IsMember({"ascii", "tikz"}));
  ren->callback([&] { code = do_render(out, ren_in, ren_format); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int parse_code = app.exit(e, out, err);
    return parse_code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return code;
}

}  // namespace togglekit
