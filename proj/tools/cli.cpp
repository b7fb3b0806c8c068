#include "cli.hpp"

#include "dpq/exactgeo.hpp"
#include "dpq/mmp.hpp"
#include "dpq/quotient.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

namespace dpq::cli {

namespace {

Error usage(const std::string& msg, Json detail = Json::object()) { return Error("usage", msg, std::move(detail)); }

std::string format_name(Format f) {
  switch (f) {
    case Format::Json: return "json";
    case Format::Csv: return "csv";
    case Format::Text: return "text";
  }
  return "json";
}

// --- output ---

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string scalar(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

using Table = std::vector<std::vector<std::string>>;  // first row is the header

void write_csv(const Table& t, std::ostream& out) {
  for (const auto& row : t) {
    for (size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
    out << "\n";
  }
}

bool flat(const Json& j) {
  return std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); });
}

void write_text(const Json& j, std::ostream& out, int indent = 0) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_primitive() || (v.is_array() && flat(v))) {
        out << pad << k << ": ";
        if (v.is_array()) {
          for (size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar(v[i]);
        } else {
          out << scalar(v);
        }
        out << "\n";
      } else {
        out << pad << k << ":\n";
        write_text(v, out, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_primitive()) {
        out << pad << "- " << scalar(v) << "\n";
      } else {
        out << pad << "-\n";
        write_text(v, out, indent + 2);
      }
    }
  } else {
    out << pad << scalar(j) << "\n";
  }
}

struct Output {
  Json json;
  std::optional<Table> table;
};

void emit(const RunConfig& cfg, const Output& o, std::ostream& out) {
  switch (cfg.format) {
    case Format::Json: out << o.json.dump(2) << "\n"; break;
    case Format::Text: write_text(o.json, out); break;
    case Format::Csv:
      if (!o.table) throw usage("csv output is not available for " + cfg.command);
      write_csv(*o.table, out);
      break;
  }
}

// --- validation ---

int need_degree(const RunConfig& cfg) {
  if (!cfg.degree) throw usage(cfg.command + " needs --degree");
  const int d = *cfg.degree;
  if (d < 4 || d > 9) throw usage("--degree must be in 4..9, got " + std::to_string(d));
  if (cfg.quadric && d != 8) throw usage("--quadric only applies to degree 8");
  return d;
}

void need_args(const RunConfig& cfg, size_t n, const std::string& what) {
  if (cfg.args.size() != n) throw usage(cfg.command + " takes " + what);
}

std::vector<std::string> words_or_empty(const std::optional<std::vector<std::string>>& w) {
  return w ? *w : std::vector<std::string>{};
}

// --- commands ---

Output cmd_weyl_order(const RunConfig& cfg) {
  const int d = need_degree(cfg);
  const ActionGroup& w = weyl_group(d, cfg.quadric);
  Json j{{"degree", d}, {"surface", w.lattice().surface_type()}, {"order", w.order()}};
  return {j, Table{{"degree", "surface", "order"}, {std::to_string(d), w.lattice().surface_type(), std::to_string(w.order())}}};
}

Output cmd_lines(const RunConfig& cfg) {
  const int d = need_degree(cfg);
  const PicardLattice lat = PicardLattice::del_pezzo(d, cfg.quadric);
  const auto curves = enumerate_minus_one_curves(lat);
  Json arr = Json::array();
  Table t{{"label", "class", "meets"}};
  std::vector<int> valency;
  for (const auto& c : curves) {
    int meets = 0;
    for (const auto& o : curves) meets += intersect(lat, c, o) == 1;
    valency.push_back(meets);
    arr.push_back(Json{{"label", curve_label(lat, c)}, {"class", dpq::to_json(c)}, {"meets", meets}});
    t.push_back({curve_label(lat, c), to_string(c), std::to_string(meets)});
  }
  Json j{{"degree", d}, {"surface", lat.surface_type()}, {"count", curves.size()}};
  const bool regular = !valency.empty() && std::all_of(valency.begin(), valency.end(), [&](int v) { return v == valency[0]; });
  j["regular_valency"] = regular ? Json(valency[0]) : Json(nullptr);
  j["curves"] = arr;
  return {j, t};
}

EquivariantSurface surface_from(const RunConfig& cfg) {
  const int d = need_degree(cfg);
  return EquivariantSurface::from_words(d, words_or_empty(cfg.group), words_or_empty(cfg.galois), cfg.has_point,
                                        cfg.quadric);
}

Output cmd_orbits(const RunConfig& cfg) {
  const EquivariantSurface s = surface_from(cfg);
  Json arr = Json::array();
  Table t{{"orbit", "size", "pairwise_disjoint", "curves"}};
  int k = 0;
  for (const auto& o : orbits_on_curves(s.group, s.curves)) {
    std::vector<std::string> labels;
    for (const auto& c : o.curves) labels.push_back(s.label(c));
    arr.push_back(Json{{"curves", labels}, {"pairwise_disjoint", o.pairwise_disjoint}});
    std::string joined;
    for (const auto& l : labels) joined += (joined.empty() ? "" : " ") + l;
    t.push_back({std::to_string(k++), std::to_string(labels.size()), o.pairwise_disjoint ? "true" : "false", joined});
  }
  Json j{{"degree", s.lattice.degree()},
         {"group_order", s.g_subgroup.order()},
         {"combined_order", s.group.order()},
         {"rho", s.rho_h()},
         {"orbits", arr}};
  return {j, t};
}

Output cmd_verdict(const RunConfig& cfg) {
  if (!cfg.group) throw usage("verdict needs --group (use \"\" for the trivial group)");
  const EquivariantSurface s = surface_from(cfg);
  Json j = main_verdict(s).to_json();
  return {j, std::nullopt};
}

Output cmd_table1(const RunConfig&) {
  Json arr = Json::array();
  Table t{{"m", "q", "name", "chain", "delta_K2", "delta_C2", "delta_D2"}};
  for (const auto& r : table1()) {
    Json row = r.to_json();
    row["name"] = r.type.name();
    arr.push_back(row);
    std::string chain;
    for (int a : r.chain) chain += (chain.empty() ? "" : " ") + std::to_string(a);
    t.push_back({std::to_string(r.type.m), std::to_string(r.type.q), r.type.name(), chain, to_string(r.delta_K2),
                 to_string(r.delta_C2), to_string(r.delta_D2)});
  }
  return {arr, t};
}

long long parse_ll(const std::string& s, const std::string& what) {
  size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw usage(what + " must be an integer, got \"" + s + "\"");
  }
  if (pos != s.size()) throw usage(what + " must be an integer, got \"" + s + "\"");
  return v;
}

Output cmd_hj(const RunConfig& cfg) {
  need_args(cfg, 2, "two integers m q");
  const long long m = parse_ll(cfg.args[0], "m"), q = parse_ll(cfg.args[1], "q");
  if (m < 2) throw usage("m must be at least 2");
  const ResolutionData r = hj_resolve(m, q);
  Json j = r.to_json();
  j["name"] = r.type.name();
  std::string chain;
  for (int a : r.chain) chain += (chain.empty() ? "" : " ") + std::to_string(a);
  return {j, Table{{"m", "q", "name", "chain", "delta_K2", "delta_C2", "delta_D2"},
                   {std::to_string(r.type.m), std::to_string(r.type.q), r.type.name(), chain, to_string(r.delta_K2),
                    to_string(r.delta_C2), to_string(r.delta_D2)}}};
}

void check_id(const std::string& id, const std::vector<std::string>& ids, const std::string& kind) {
  if (std::find(ids.begin(), ids.end(), id) == ids.end())
    throw Error("unknown_" + kind, "unknown " + kind + " id \"" + id + "\"", Json{{"available", ids}});
}

// Runs f over ids with `jobs` workers; results come back in id order.
template <class F>
std::vector<Json> parallel_map(const std::vector<std::string>& ids, int jobs, F f) {
  std::vector<Json> out(ids.size());
  std::vector<std::string> errors(ids.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < ids.size(); i = next++) {
      try {
        out[i] = f(ids[i]);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int k = 1; k < std::min<int>(jobs, static_cast<int>(ids.size())); ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (size_t i = 0; i < ids.size(); ++i)
    if (!errors[i].empty()) throw Error("internal", ids[i] + ": " + errors[i]);
  return out;
}

Table check_table(const std::vector<Json>& reports, const char* id_key, const char* list_key, const char* name_key) {
  Table t{{"id", name_key, "ok", "annotation", "expected", "computed"}};
  for (const auto& r : reports)
    for (const auto& s : r.at(list_key))
      t.push_back({r.at(id_key).get<std::string>(), s.at(name_key).get<std::string>(), s.at("ok").dump(),
                   s.contains("annotation") ? "true" : "false", s.at("expected").dump(), s.at("computed").dump()});
  return t;
}

bool all_ok(const std::vector<Json>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const Json& r) { return r.at("ok").get<bool>(); });
}

std::pair<Output, bool> cmd_replay(const RunConfig& cfg) {
  std::vector<std::string> ids;
  if (cfg.all) {
    if (!cfg.args.empty()) throw usage("replay takes either a lemma id or --all");
    ids = replay_ids();
  } else {
    need_args(cfg, 1, "one lemma id (or --all)");
    check_id(cfg.args[0], replay_ids(), "lemma");
    ids = cfg.args;
  }
  auto reports = parallel_map(ids, cfg.jobs, [](const std::string& id) { return replay(id).to_json(); });
  const bool ok = all_ok(reports);
  Json j = cfg.all ? Json{{"ok", ok}, {"reports", reports}} : reports[0];
  return {{j, check_table(reports, "lemma_id", "steps", "op")}, ok};
}

std::pair<Output, bool> cmd_verify_example(const RunConfig& cfg) {
  std::vector<std::string> ids;
  if (cfg.all) {
    if (!cfg.args.empty()) throw usage("verify-example takes either an example id or --all");
    ids = example_ids();
  } else {
    need_args(cfg, 1, "one example id (or --all)");
    check_id(cfg.args[0], example_ids(), "example");
    ids = cfg.args;
  }
  auto reports = parallel_map(ids, cfg.jobs, [](const std::string& id) { return verify_example(id).to_json(); });
  const bool ok = all_ok(reports);
  Json j = cfg.all ? Json{{"ok", ok}, {"reports", reports}} : reports[0];
  return {{j, check_table(reports, "id", "checks", "name")}, ok};
}

std::pair<Output, bool> cmd_s5_lemma(const RunConfig&) {
  const S5LemmaReport r = verify_s5_normal_subgroup_lemma();
  return {{r.to_json(), std::nullopt}, r.ok};
}

std::pair<Output, bool> cmd_cremona(const RunConfig&) {
  const CremonaReport r = verify_cremona_order5();
  Table t{{"name", "ok", "annotation", "expected", "computed"}};
  for (const auto& c : r.checks)
    t.push_back({c.name, c.ok ? "true" : "false", c.assertion ? "false" : "true", c.expected.dump(), c.computed.dump()});
  return {{r.to_json(), t}, r.ok()};
}

Output cmd_sweep(const RunConfig& cfg) {
  const int d = need_degree(cfg);
  if (d != 4 && d != 5) throw usage("sweep covers degrees 4 and 5");
  const SweepReport r = d == 4 ? dp4_verdict_sweep() : dp5_verdict_sweep();
  Json j{{"degree", d}};
  j.update(r.to_json());
  return {j, std::nullopt};
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> c{"lines",          "weyl-order", "orbits",   "verdict", "replay", "table1",
                                          "hj",             "verify-example", "s5-lemma", "cremona", "sweep"};
  return c;
}

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "text") return Format::Text;
  throw usage("--format must be json, csv or text, got \"" + s + "\"");
}

std::vector<std::string> split_words(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (depth == 0 && (c == ',' || c == ' ')) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

void RunConfig::merge_json(const Json& j) {
  // long names are accepted as aliases of the short ones
  static const std::vector<std::pair<std::string, std::string>> alias{
      {"group_spec", "group"}, {"galois_spec", "galois"}, {"output_format", "format"}};
  static const std::vector<std::string> known{"command", "degree", "quadric", "group", "galois", "has_point",
                                              "format",  "args",   "all",     "jobs"};
  if (!j.is_object()) throw usage("config must be a JSON object");
  Json c = Json::object();
  for (const auto& [k, v] : j.items()) {
    std::string key = k;
    for (const auto& [a, b] : alias)
      if (k == a) key = b;
    if (std::find(known.begin(), known.end(), key) == known.end()) throw usage("unknown config field \"" + k + "\"");
    if (c.contains(key)) throw usage("config field \"" + key + "\" given twice");
    c[key] = v;
  }
  try {
    auto words = [&](const Json& v) {
      if (v.is_object()) {
        // {"degree": 4, "generators": [...]}
        for (const auto& [k, x] : v.items())
          if (k != "degree" && k != "generators") throw usage("unknown group spec field \"" + k + "\"");
        if (v.contains("degree")) {
          const int d = v["degree"].get<int>();
          if (degree && *degree != d) throw usage("group spec degree disagrees with degree");
          degree = d;
        }
        return v.value("generators", std::vector<std::string>{});
      }
      return v.is_string() ? split_words(v.get<std::string>()) : v.get<std::vector<std::string>>();
    };
    if (c.contains("command")) command = c["command"].get<std::string>();
    if (c.contains("degree")) degree = c["degree"].get<int>();
    if (c.contains("quadric")) quadric = c["quadric"].get<bool>();
    if (c.contains("group")) group = words(c["group"]);
    if (c.contains("galois")) galois = words(c["galois"]);
    if (c.contains("has_point")) has_point = c["has_point"].get<bool>();
    if (c.contains("format")) format = parse_format(c["format"].get<std::string>());
    if (c.contains("args")) args = c["args"].get<std::vector<std::string>>();
    if (c.contains("all")) all = c["all"].get<bool>();
    if (c.contains("jobs")) jobs = c["jobs"].get<int>();
  } catch (const Json::exception& e) {
    throw usage(std::string("bad config: ") + e.what());
  }
}

Json RunConfig::to_json() const {
  Json j{{"command", command}};
  if (degree) j["degree"] = *degree;
  j["quadric"] = quadric;
  if (group) j["group"] = *group;
  if (galois) j["galois"] = *galois;
  j["has_point"] = has_point;
  j["format"] = format_name(format);
  j["args"] = args;
  j["all"] = all;
  j["jobs"] = jobs;
  return j;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.jobs < 1) throw usage("--jobs must be at least 1");
    const std::string& c = cfg.command;
    if (c.empty()) throw usage("no command given", Json{{"commands", commands()}});
    std::pair<Output, bool> r;
    if (c == "weyl-order") r = {cmd_weyl_order(cfg), true};
    else if (c == "lines") r = {cmd_lines(cfg), true};
    else if (c == "orbits") r = {cmd_orbits(cfg), true};
    else if (c == "verdict") r = {cmd_verdict(cfg), true};
    else if (c == "table1") r = {cmd_table1(cfg), true};
    else if (c == "hj") r = {cmd_hj(cfg), true};
    else if (c == "sweep") r = {cmd_sweep(cfg), true};
    else if (c == "replay") r = cmd_replay(cfg);
    else if (c == "verify-example") r = cmd_verify_example(cfg);
    else if (c == "s5-lemma") r = cmd_s5_lemma(cfg);
    else if (c == "cremona") r = cmd_cremona(cfg);
    else throw usage("unknown command \"" + c + "\"", Json{{"commands", commands()}});
    emit(cfg, r.first, out);
    return r.second ? 0 : 2;
  } catch (const Error& e) {
    err << e.to_json().dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << Json{{"code", "internal"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
}

int main_with_args(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact del Pezzo quotient toolkit"};
  app.require_subcommand(0, 1);
  std::string config_path;
  std::optional<std::string> format, group, galois;
  std::optional<int> degree;
  bool quadric = false, has_point = false, all = false;
  int jobs = 0;
  std::vector<std::string> args;

  app.add_option("--config", config_path, "JSON file with RunConfig fields");
  app.add_option("--format", format, "json, csv or text");

  auto common = [&](CLI::App* s, bool deg, bool groups) {
    s->add_option("--format", format, "json, csv or text");
    if (deg) {
      s->add_option("--degree", degree, "K^2 of the surface, 4..9");
      s->add_flag("--quadric", quadric, "degree 8: P1xP1 instead of the blowup of P2");
    }
    if (groups) {
      s->add_option("--group", group, "generator words of G, comma separated");
      s->add_option("--galois", galois, "generator words of the Galois image, comma separated");
      s->add_flag("--has-point", has_point, "the surface has a k-point");
    }
  };
  std::map<std::string, CLI::App*> subs;
  subs["lines"] = app.add_subcommand("lines", "(-1)-curves of a del Pezzo lattice");
  common(subs["lines"], true, false);
  subs["weyl-order"] = app.add_subcommand("weyl-order", "order of the Weyl group");
  common(subs["weyl-order"], true, false);
  subs["orbits"] = app.add_subcommand("orbits", "orbits of G and Galois on (-1)-curves");
  common(subs["orbits"], true, true);
  subs["verdict"] = app.add_subcommand("verdict", "rationality verdict for the quotient");
  common(subs["verdict"], true, true);
  subs["replay"] = app.add_subcommand("replay", "replay a lemma's intersection arithmetic");
  common(subs["replay"], false, false);
  subs["replay"]->add_option("lemma", args, "lemma id");
  subs["replay"]->add_flag("--all", all, "every lemma in catalogue order");
  subs["replay"]->add_option("--jobs", jobs, "worker threads");
  subs["table1"] = app.add_subcommand("table1", "resolution data for m <= 5");
  common(subs["table1"], false, false);
  subs["hj"] = app.add_subcommand("hj", "Hirzebruch-Jung resolution of 1/m(1,q)");
  common(subs["hj"], false, false);
  subs["hj"]->add_option("m_q", args, "m q")->expected(2);
  subs["verify-example"] = app.add_subcommand("verify-example", "check an explicit quartic example");
  common(subs["verify-example"], false, false);
  subs["verify-example"]->add_option("example", args, "example id");
  subs["verify-example"]->add_flag("--all", all, "every example");
  subs["verify-example"]->add_option("--jobs", jobs, "worker threads");
  subs["s5-lemma"] = app.add_subcommand("s5-lemma", "normal-subgroup witnesses for subgroups of S5");
  common(subs["s5-lemma"], false, false);
  subs["cremona"] = app.add_subcommand("cremona", "order-5 Cremona map checks");
  common(subs["cremona"], false, false);
  subs["sweep"] = app.add_subcommand("sweep", "verdicts over all small subgroups");
  common(subs["sweep"], true, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << Json{{"error", "usage"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }

  RunConfig cfg;
  try {
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw usage("cannot read config " + config_path);
      Json j;
      try {
        j = Json::parse(in);
      } catch (const Json::exception& e) {
        throw usage("config " + config_path + " is not JSON: " + e.what());
      }
      cfg.merge_json(j);
    }
    for (const auto& [name, sub] : subs)
      if (sub->parsed()) cfg.command = name;
    if (format) cfg.format = parse_format(*format);
    if (degree) cfg.degree = degree;
    if (quadric) cfg.quadric = true;
    if (group) cfg.group = split_words(*group);
    if (galois) cfg.galois = split_words(*galois);
    if (has_point) cfg.has_point = true;
    if (all) cfg.all = true;
    if (jobs != 0) cfg.jobs = jobs;
    if (!args.empty()) cfg.args = args;
  } catch (const Error& e) {
    err << e.to_json().dump() << "\n";
    return 1;
  }
  return run(cfg, out, err);
}

}  // namespace dpq::cli
