// Command-line front end. Talks to the library only through flipgraph.h.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "flipgraph/flipgraph.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct TriDeleter {
  void operator()(fg_triangulation* t) const { fg_tri_free(t); }
};
struct CatalogDeleter {
  void operator()(fg_catalog* c) const { fg_catalog_free(c); }
};
struct MallocDeleter {
  void operator()(void* p) const { fg_free(p); }
};
using Tri = std::unique_ptr<fg_triangulation, TriDeleter>;
using Catalog = std::unique_ptr<fg_catalog, CatalogDeleter>;
template <class T>
using Buffer = std::unique_ptr<T, MallocDeleter>;

// Failure reported by the library or by input handling; exit code 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad combination of arguments that CLI11 cannot catch; exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void check(fg_status status) {
  if (status != FG_OK) {
    const std::string detail = fg_last_error();
    throw DomainError(detail.empty() ? fg_status_name(status) : detail);
  }
}

std::string owned_string(char* s) {
  Buffer<char> holder(s);
  return s ? std::string(s) : std::string();
}

std::vector<int> owned_ints(int* data, std::size_t count) {
  Buffer<int> holder(data);
  return data ? std::vector<int>(data, data + count) : std::vector<int>();
}

std::string read_all(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::optional<fg_family> family_from_name(const std::string& name) {
  if (name == "g1") return FG_FAMILY_G1;
  if (name == "g2") return FG_FAMILY_G2;
  if (name == "host") return FG_FAMILY_HOST;
  return std::nullopt;
}

Tri generate(fg_family family, int n) {
  fg_triangulation* raw = nullptr;
  check(fg_generate(family, n, &raw));
  return Tri(raw);
}

// A path, `-` for stdin, or `<family>:<n>` to generate in place.
Tri load_triangulation(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon != std::string::npos) {
    const auto family = family_from_name(spec.substr(0, colon));
    if (family) {
      int n = 0;
      try {
        std::size_t used = 0;
        n = std::stoi(spec.substr(colon + 1), &used);
        if (used != spec.size() - colon - 1) throw std::invalid_argument(spec);
      } catch (const std::exception&) {
        throw UsageError("bad generator spec '" + spec + "'");
      }
      return generate(*family, n);
    }
  }
  const std::string text = read_all(spec);
  fg_triangulation* raw = nullptr;
  check(fg_tri_parse(text.data(), text.size(), &raw));
  return Tri(raw);
}

std::string format_tri(const fg_triangulation* t) {
  char* text = nullptr;
  check(fg_tri_format(t, &text));
  return owned_string(text);
}

// Text output and machine record are rendered from the same data, so every
// number shown in text is also present in the record.
class Result {
 public:
  explicit Result(std::string command) : command_(std::move(command)) {}

  void set_n(long long n) { n_ = n; }
  void value(const std::string& key, json v) { values_.push_back({key, std::move(v), true}); }
  // Recorded but left out of the key/value text (the witness header shows it).
  void quiet_value(const std::string& key, json v) { values_.push_back({key, std::move(v), false}); }
  void mode(const std::string& key, json v) { mode_[key] = std::move(v); }
  void timing(const std::string& key, json v) { timings_[key] = std::move(v); }
  void witness(const std::string& key, json v) { witnesses_[key] = std::move(v); }
  // Appended verbatim to the text output after the key/value lines.
  void body(std::string text) { body_ += std::move(text); }
  // Text output consisting only of `text` (triangulations for piping).
  void raw(std::string text) { raw_ = std::move(text); }

  json record() const {
    json r;
    r["command"] = command_;
    r["n"] = n_ ? json(*n_) : json(nullptr);
    json values = json::object();
    for (const auto& e : values_) values[e.key] = e.value;
    r["values"] = values;
    r["witnesses"] = witnesses_.empty() ? json::object() : witnesses_;
    r["timings"] = timings_.empty() ? json::object() : timings_;
    r["mode"] = mode_.empty() ? json::object() : mode_;
    return r;
  }

  std::string text() const {
    if (raw_) return *raw_;
    std::ostringstream out;
    for (const auto& [k, v, shown] : values_) {
      if (!shown) continue;
      out << k << ": ";
      if (v.is_boolean()) {
        out << (v.get<bool>() ? "yes" : "no");
      } else if (v.is_string()) {
        out << v.get<std::string>();
      } else {
        out << v.dump();
      }
      out << '\n';
    }
    for (const auto& [k, v] : timings_.items()) out << k << ": " << v.dump() << '\n';
    out << body_;
    return out.str();
  }

 private:
  std::string command_;
  std::optional<long long> n_;
  struct Entry {
    std::string key;
    json value;
    bool shown;
  };
  std::vector<Entry> values_;
  json witnesses_ = json::object();
  json timings_ = json::object();
  json mode_ = json::object();
  std::string body_;
  std::optional<std::string> raw_;
};

std::string witness_text(int c, const std::vector<int>& gamma) {
  std::ostringstream out;
  out << "c=" << c << '\n';
  for (std::size_t i = 0; i < gamma.size(); ++i) out << "γ: " << i << " -> " << gamma[i] << '\n';
  return out.str();
}

struct Options {
  int n = 0;
  std::string family;
  std::string mirror = "on";
  bool exact = false;
  long long budget_ms = 10000;
  unsigned long long node_budget = 0;
  unsigned long long max_nodes = 2'000'000;
  int workers = 1;
  bool json_out = false;
  bool timings = false;
  std::string out = "-";
  std::string catalog;
  std::vector<std::string> inputs;
  int max_soundness_n = 7;
  int max_g1_n = 300;

  bool mirror_on() const { return mirror == "on"; }
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_flag("--json", o.json_out, "Print the machine record instead of text");
  cmd->add_flag("--timings", o.timings, "Include wall-clock timings");
  cmd->add_option("--out", o.out, "Output path (- for stdout)");
}

void add_mirror(CLI::App* cmd, Options& o) {
  cmd->add_option("--mirror", o.mirror, "Identify mirror images")
      ->check(CLI::IsMember({"on", "off"}));
}

void add_workers(CLI::App* cmd, Options& o) {
  cmd->add_option("--workers", o.workers, "Worker threads")->check(CLI::Range(1, 256));
}

Catalog obtain_catalog(const Options& o, int n, Result& r) {
  fg_catalog* raw = nullptr;
  if (!o.catalog.empty()) {
    check(fg_catalog_load(o.catalog.c_str(), o.mirror_on() ? 1 : 0, &raw));
    Catalog c(raw);
    if (n > 0 && fg_catalog_n(c.get()) != n) {
      throw DomainError("catalog holds n=" + std::to_string(fg_catalog_n(c.get())) +
                        ", input has n=" + std::to_string(n));
    }
    return c;
  }
  if (n <= 0) throw UsageError("need --catalog or --n");
  fg_enumerate_options eo;
  fg_enumerate_options_init(&eo);
  eo.mirror_mode = o.mirror_on() ? 1 : 0;
  eo.workers = o.workers;
  eo.max_nodes = o.max_nodes;
  check(fg_catalog_enumerate(n, &eo, &raw, nullptr));
  r.mode("enumerated", true);
  return Catalog(raw);
}

// ---- subcommands ---------------------------------------------------------

Result cmd_gen(const Options& o) {
  const auto family = family_from_name(o.family);
  if (!family) throw UsageError("--family must be g1, g2 or host");
  Tri t = generate(*family, o.n);
  Result r("gen");
  r.set_n(o.n);
  r.mode("family", o.family);
  const std::string text = format_tri(t.get());
  r.value("edges", fg_tri_edge_count(t.get()));
  r.value("max_degree", fg_tri_max_degree(t.get()));
  if (fg_tri_blue_count(t.get()) >= 0) r.value("blue_count", fg_tri_blue_count(t.get()));
  if (*family == FG_FAMILY_G2) {
    int a = 0;
    int b = 0;
    check(fg_g2_apexes(t.get(), &a, &b));
    r.value("apex_a", a);
    r.value("apex_b", b);
  }
  r.witness("triangulation", text);
  r.raw(text);
  return r;
}

Result cmd_validate(const Options& o) {
  Tri t = load_triangulation(o.inputs.at(0));
  Result r("validate");
  r.set_n(fg_tri_vertex_count(t.get()));
  r.value("valid", true);
  r.value("vertices", fg_tri_vertex_count(t.get()));
  r.value("edges", fg_tri_edge_count(t.get()));
  r.value("faces", fg_tri_face_count(t.get()));
  r.value("max_degree", fg_tri_max_degree(t.get()));
  if (fg_tri_blue_count(t.get()) >= 0) {
    r.value("blue_count", fg_tri_blue_count(t.get()));
    fg_lemma2_report rep;
    char* violations = nullptr;
    check(fg_check_lemma2(t.get(), &rep, &violations));
    const std::string v = owned_string(violations);
    r.value("coloring_ok", rep.passed != 0);
    if (!v.empty()) r.body(v);
  }
  return r;
}

Result cmd_flip(const Options& o) {
  if (o.inputs.size() != 3) throw UsageError("flip expects <input> <a> <b>");
  Tri t = load_triangulation(o.inputs[0]);
  int a = 0;
  int b = 0;
  try {
    a = std::stoi(o.inputs[1]);
    b = std::stoi(o.inputs[2]);
  } catch (const std::exception&) {
    throw UsageError("flip expects integer vertex ids");
  }
  fg_triangulation* raw = nullptr;
  int u = -1;
  int v = -1;
  check(fg_tri_flip(t.get(), a, b, &raw, &u, &v));
  Tri flipped(raw);
  Result r("flip");
  r.set_n(fg_tri_vertex_count(flipped.get()));
  r.value("removed", json::array({std::min(a, b), std::max(a, b)}));
  r.value("inserted", json::array({u, v}));
  const std::string text = format_tri(flipped.get());
  r.witness("triangulation", text);
  r.raw("# flip " + std::to_string(std::min(a, b)) + " " + std::to_string(std::max(a, b)) +
        " -> " + std::to_string(u) + " " + std::to_string(v) + "\n" + text);
  return r;
}

// One flip per line: two vertex ids; blank lines and `#` comments ignored.
std::vector<int> parse_sequence(const std::string& text) {
  std::vector<int> pairs;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    int a = 0;
    int b = 0;
    std::string extra;
    if (!(fields >> a >> b) || (fields >> extra)) {
      throw DomainError("sequence line " + std::to_string(line_no) + ": expected two vertex ids");
    }
    pairs.push_back(a);
    pairs.push_back(b);
  }
  return pairs;
}

Result cmd_apply(const Options& o) {
  if (o.inputs.size() != 2) throw UsageError("apply expects <input> <sequence>");
  if (o.inputs[0] == "-" && o.inputs[1] == "-") throw UsageError("only one input may be stdin");
  Tri t = load_triangulation(o.inputs[0]);
  const auto pairs = parse_sequence(read_all(o.inputs[1]));
  fg_triangulation* raw = nullptr;
  std::size_t failed = 0;
  const fg_status s = fg_tri_apply(t.get(), pairs.data(), pairs.size() / 2, &raw, &failed);
  if (s != FG_OK) {
    throw DomainError("flip #" + std::to_string(failed) + " failed: " + fg_last_error());
  }
  Tri result(raw);
  Result r("apply");
  r.set_n(fg_tri_vertex_count(result.get()));
  r.value("flips", static_cast<long long>(pairs.size() / 2));
  const std::string text = format_tri(result.get());
  r.witness("triangulation", text);
  r.raw("# flips " + std::to_string(pairs.size() / 2) + "\n" + text);
  return r;
}

Result cmd_canon(const Options& o) {
  Tri t = load_triangulation(o.inputs.at(0));
  int* code = nullptr;
  std::size_t length = 0;
  check(fg_tri_canonical_code(t.get(), o.mirror_on() ? 1 : 0, &code, &length));
  const auto values = owned_ints(code, length);
  std::string joined;
  for (const int c : values) joined += (joined.empty() ? "" : " ") + std::to_string(c);
  Result r("canon");
  r.set_n(fg_tri_vertex_count(t.get()));
  r.mode("mirror", o.mirror_on());
  r.value("code", joined);
  if (!o.catalog.empty()) {
    Catalog c = obtain_catalog(o, fg_tri_vertex_count(t.get()), r);
    std::uint32_t id = 0;
    check(fg_catalog_find(c.get(), t.get(), &id));
    r.value("node", id);
  }
  r.witness("code", values);
  return r;
}

Result cmd_enumerate(const Options& o) {
  Result r("enumerate");
  r.set_n(o.n);
  r.mode("mirror", o.mirror_on());
  fg_enumerate_options eo;
  fg_enumerate_options_init(&eo);
  eo.mirror_mode = o.mirror_on() ? 1 : 0;
  eo.workers = o.workers;
  eo.max_nodes = o.max_nodes;
  fg_catalog* raw = nullptr;
  std::uint64_t found = 0;
  const auto start = std::chrono::steady_clock::now();
  const fg_status s = fg_catalog_enumerate(o.n, &eo, &raw, &found);
  if (s == FG_ERR_RESOURCE_LIMIT) {
    // A cap is a budget, not an error: report the partial count.
    r.value("complete", false);
    r.value("nodes_found", found);
    r.value("max_nodes", o.max_nodes);
    return r;
  }
  check(s);
  Catalog c(raw);
  const auto elapsed = std::chrono::steady_clock::now() - start;
  r.value("complete", true);
  r.value("nodes", fg_catalog_node_count(c.get()));
  r.value("edges", fg_catalog_edge_count(c.get()));
  r.value("seed", fg_catalog_seed(c.get()));
  if (!o.catalog.empty()) {
    check(fg_catalog_save(c.get(), o.catalog.c_str()));
    r.value("catalog", o.catalog);
  }
  if (o.timings) {
    r.timing("elapsed_ms",
             std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count());
  }
  return r;
}

Result cmd_distance(const Options& o) {
  if (o.inputs.size() != 2) throw UsageError("distance expects <a> <b>");
  if (o.inputs[0] == "-" && o.inputs[1] == "-") throw UsageError("only one input may be stdin");
  Tri a = load_triangulation(o.inputs[0]);
  Tri b = load_triangulation(o.inputs[1]);
  const int n = fg_tri_vertex_count(a.get());
  if (fg_tri_vertex_count(b.get()) != n) throw DomainError("vertex counts differ");
  Result r("distance");
  r.set_n(n);
  r.mode("mirror", o.mirror_on());
  Catalog c = obtain_catalog(o, n, r);
  std::uint32_t ia = 0;
  std::uint32_t ib = 0;
  check(fg_catalog_find(c.get(), a.get(), &ia));
  check(fg_catalog_find(c.get(), b.get(), &ib));
  int d = 0;
  check(fg_catalog_distance(c.get(), a.get(), b.get(), &d));
  r.value("node_a", ia);
  r.value("node_b", ib);
  r.value("distance", d);
  return r;
}

Result cmd_diameter(const Options& o) {
  Result r("diameter");
  r.mode("mirror", o.mirror_on());
  Catalog c = obtain_catalog(o, o.n, r);
  r.set_n(fg_catalog_n(c.get()));
  int d = 0;
  std::uint32_t from = 0;
  std::uint32_t to = 0;
  check(fg_catalog_diameter(c.get(), o.workers, &d, &from, &to));
  r.value("nodes", fg_catalog_node_count(c.get()));
  r.value("diameter", d);
  r.value("from", from);
  r.value("to", to);
  return r;
}

Result cmd_maxcommon(const Options& o) {
  if (o.inputs.size() != 2) throw UsageError("maxcommon expects <first> <second>");
  if (o.inputs[0] == "-" && o.inputs[1] == "-") throw UsageError("only one input may be stdin");
  Tri a = load_triangulation(o.inputs[0]);
  Tri b = load_triangulation(o.inputs[1]);
  fg_maxcommon_options mo;
  fg_maxcommon_options_init(&mo);
  mo.workers = o.workers;
  mo.time_budget_ms = o.exact ? 0 : o.budget_ms;
  mo.node_budget = o.exact ? 0 : o.node_budget;
  fg_maxcommon_result res;
  int* witness = nullptr;
  const auto start = std::chrono::steady_clock::now();
  check(fg_max_common_edges(a.get(), b.get(), &mo, &res, &witness));
  const auto elapsed = std::chrono::steady_clock::now() - start;
  const auto gamma = owned_ints(witness, static_cast<std::size_t>(fg_tri_vertex_count(a.get())));
  Result r("maxcommon");
  r.set_n(fg_tri_vertex_count(a.get()));
  r.mode("exact_required", o.exact);
  r.mode("budget_ms", mo.time_budget_ms);
  r.value("lower", res.lower);
  r.value("upper", res.upper);
  r.value("exact", res.exact != 0);
  r.value("flip_lower_bound", res.flip_lower_bound);
  r.quiet_value("c", res.lower);
  r.witness("gamma", gamma);
  r.body(witness_text(res.lower, gamma));
  if (o.timings) {
    r.timing("elapsed_ms",
             std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count());
    r.timing("nodes_explored", res.nodes_explored);
  }
  return r;
}

Result cmd_bound(const Options& o) {
  fg_theorem_bound b;
  check(fg_theorem_bound_compute(o.n, &b));
  Result r("bound");
  r.set_n(o.n);
  r.value("common_edge_bound", b.common_edge_bound);
  r.value("flip_bound", b.flip_bound);
  r.value("relaxed_bound_times_three", b.relaxed_times_three);
  r.value("relaxed_bound", b.relaxed_ceil);
  r.value("holds", b.holds != 0);
  if (o.n >= 6) {
    Tri g1 = generate(FG_FAMILY_G1, static_cast<int>(o.n));
    fg_lemma2_report rep;
    char* violations = nullptr;
    check(fg_check_lemma2(g1.get(), &rep, &violations));
    const std::string v = owned_string(violations);
    r.value("blue_count", rep.blue_count);
    r.value("max_degree", rep.max_degree);
    r.value("max_blue_neighbors", rep.max_blue_neighbors);
    r.value("max_red_neighbors", rep.max_red_neighbors);
    r.value("red_independent", rep.red_independent != 0);
    r.value("structure_ok", rep.passed != 0);
    if (!v.empty()) r.body(v);
  }
  return r;
}

Result cmd_pathcover(const Options& o) {
  Tri h = load_triangulation(o.inputs.at(0));
  const int n = fg_tri_vertex_count(h.get());
  int* vertices = nullptr;
  int* lengths = nullptr;
  std::size_t count = 0;
  check(fg_path_cover(h.get(), o.exact ? 1 : 0, &vertices, &lengths, &count));
  const auto flat = owned_ints(vertices, static_cast<std::size_t>(n));
  const auto sizes = owned_ints(lengths, count);
  fg_path_mapping m;
  int* forward = nullptr;
  check(fg_path_cover_mapping(h.get(), o.exact ? 1 : 0, &m, &forward));
  const auto gamma = owned_ints(forward, static_cast<std::size_t>(n));

  Result r("pathcover");
  r.set_n(n);
  r.mode("exact", o.exact);
  r.value("paths", m.paths);
  r.value("guaranteed", m.guaranteed);
  r.quiet_value("c", m.common);
  json paths = json::array();
  std::string text;
  std::size_t at = 0;
  for (const int len : sizes) {
    std::vector<int> p(flat.begin() + static_cast<std::ptrdiff_t>(at),
                       flat.begin() + static_cast<std::ptrdiff_t>(at + len));
    at += static_cast<std::size_t>(len);
    text += "path:";
    for (const int v : p) text += " " + std::to_string(v);
    text += '\n';
    paths.push_back(p);
  }
  r.witness("paths", paths);
  r.witness("gamma", gamma);
  r.body(text + witness_text(m.common, gamma));
  return r;
}

Result cmd_matching(const Options& o) {
  if (o.inputs.empty() || o.inputs.size() > 2) throw UsageError("matching expects <input> [<other>]");
  if (o.inputs.size() == 2 && o.inputs[0] == "-" && o.inputs[1] == "-") {
    throw UsageError("only one input may be stdin");
  }
  Tri a = load_triangulation(o.inputs[0]);
  int* pairs = nullptr;
  std::size_t count = 0;
  check(fg_max_matching(a.get(), &pairs, &count));
  const auto flat = owned_ints(pairs, 2 * count);
  Result r("matching");
  const int n = fg_tri_vertex_count(a.get());
  r.set_n(n);
  r.value("size", static_cast<long long>(count));
  json edges = json::array();
  std::string text;
  for (std::size_t i = 0; i < count; ++i) {
    edges.push_back({flat[2 * i], flat[2 * i + 1]});
    text += "pair: " + std::to_string(flat[2 * i]) + " " + std::to_string(flat[2 * i + 1]) + "\n";
  }
  r.witness("matching", edges);
  if (o.inputs.size() == 2) {
    Tri b = load_triangulation(o.inputs[1]);
    int k = 0;
    int c = 0;
    int* forward = nullptr;
    check(fg_matching_mapping(a.get(), b.get(), &k, &c, &forward));
    const auto gamma = owned_ints(forward, static_cast<std::size_t>(n));
    r.value("paired", k);
    r.quiet_value("c", c);
    r.witness("gamma", gamma);
    text += witness_text(c, gamma);
  }
  r.body(text);
  return r;
}

Result cmd_verify(const Options& o, bool& all_passed) {
  fg_verify_options vo;
  fg_verify_options_init(&vo);
  if (o.n > 0) vo.max_enumerate_n = o.n;
  vo.max_soundness_n = o.max_soundness_n;
  vo.max_g1_n = o.max_g1_n;
  vo.mirror_mode = o.mirror_on() ? 1 : 0;
  vo.workers = o.workers;
  char* report = nullptr;
  int ok = 0;
  check(fg_verify(&vo, &report, &ok));
  const std::string text = owned_string(report);
  Result r("verify");
  r.mode("mirror", o.mirror_on());
  r.mode("max_enumerate_n", vo.max_enumerate_n);
  r.mode("max_soundness_n", vo.max_soundness_n);
  r.mode("max_g1_n", vo.max_g1_n);
  json rows = json::array();
  std::istringstream in(text);
  std::string line;
  std::string table;
  while (std::getline(in, line)) {
    const auto t1 = line.find('\t');
    const auto t2 = line.find('\t', t1 + 1);
    const std::string check_name = line.substr(0, t1);
    const std::string status = line.substr(t1 + 1, t2 - t1 - 1);
    const std::string detail = line.substr(t2 + 1);
    rows.push_back({{"check", check_name}, {"passed", status == "pass"}, {"detail", detail}});
    char buf[64];
    std::snprintf(buf, sizeof buf, "%-20s %-5s ", check_name.c_str(), status.c_str());
    table += buf + detail + "\n";
  }
  r.value("all_passed", ok != 0);
  r.witness("rows", rows);
  r.body(table);
  all_passed = ok != 0;
  return r;
}

void emit(const Result& r, const Options& o) {
  const std::string payload = o.json_out ? r.record().dump(2) + "\n" : r.text();
  if (o.out == "-") {
    std::cout << payload << std::flush;
    return;
  }
  std::ofstream out(o.out, std::ios::binary);
  if (!out || !(out << payload)) throw DomainError("cannot write " + o.out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triangulations of the sphere, their flip graph, and flip-distance bounds",
               "flipgraph"};
  app.require_subcommand(1);
  app.set_version_flag("--version", fg_version());
  Options o;

  auto* gen = app.add_subcommand("gen", "Generate G1, G2 or the bounded-degree host");
  gen->add_option("--family", o.family, "g1, g2 or host")
      ->required()
      ->check(CLI::IsMember({"g1", "g2", "host"}));
  gen->add_option("--n", o.n, "Vertex count")->required();
  add_common(gen, o);

  auto* validate = app.add_subcommand("validate", "Parse and validate a triangulation");
  validate->add_option("input", o.inputs, "Path, - or family:n")->required()->expected(1);
  add_common(validate, o);

  auto* flipc = app.add_subcommand("flip", "Flip one edge");
  flipc->add_option("args", o.inputs, "<input> <a> <b>")->required()->expected(3);
  add_common(flipc, o);

  auto* apply = app.add_subcommand("apply", "Apply a flip sequence");
  apply->add_option("args", o.inputs, "<input> <sequence>")->required()->expected(2);
  add_common(apply, o);

  auto* canon = app.add_subcommand("canon", "Canonical code");
  canon->add_option("input", o.inputs, "Path, - or family:n")->required()->expected(1);
  canon->add_option("--catalog", o.catalog, "Also report the catalog node id");
  add_mirror(canon, o);
  add_common(canon, o);

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate the flip graph");
  enumerate->add_option("--n", o.n, "Vertex count")->required()->check(CLI::Range(4, 64));
  enumerate->add_option("--catalog", o.catalog, "Write the catalog file here");
  enumerate->add_option("--max-nodes", o.max_nodes, "Node cap");
  add_mirror(enumerate, o);
  add_workers(enumerate, o);
  add_common(enumerate, o);

  auto* distance = app.add_subcommand("distance", "Exact flip distance");
  distance->add_option("args", o.inputs, "<a> <b>")->required()->expected(2);
  distance->add_option("--catalog", o.catalog, "Catalog file (enumerated on the fly if absent)");
  distance->add_option("--max-nodes", o.max_nodes, "Node cap for on-the-fly enumeration");
  add_mirror(distance, o);
  add_workers(distance, o);
  add_common(distance, o);

  auto* diameter = app.add_subcommand("diameter", "Flip graph diameter");
  diameter->add_option("--n", o.n, "Vertex count (enumerated on the fly)");
  diameter->add_option("--catalog", o.catalog, "Catalog file");
  diameter->add_option("--max-nodes", o.max_nodes, "Node cap for on-the-fly enumeration");
  add_mirror(diameter, o);
  add_workers(diameter, o);
  add_common(diameter, o);

  auto* maxcommon = app.add_subcommand("maxcommon", "Maximum common edges over bijections");
  maxcommon->add_option("args", o.inputs, "<first> <second>")->required()->expected(2);
  maxcommon->add_flag("--exact", o.exact, "Search without budgets");
  maxcommon->add_option("--budget-ms", o.budget_ms, "Time budget in milliseconds (0: none)")
      ->check(CLI::NonNegativeNumber);
  maxcommon->add_option("--node-budget", o.node_budget, "Search node budget (0: none)");
  add_workers(maxcommon, o);
  add_common(maxcommon, o);

  auto* bound = app.add_subcommand("bound", "Flip-distance lower bound for G1 and G2");
  bound->add_option("--n", o.n, "Vertex count")->required();
  add_common(bound, o);

  auto* pathcover = app.add_subcommand("pathcover", "Path cover and its bijection onto G2");
  pathcover->add_option("input", o.inputs, "Path, - or family:n")->required()->expected(1);
  pathcover->add_flag("--exact", o.exact, "Minimum cover (small n)");
  add_common(pathcover, o);

  auto* matching = app.add_subcommand("matching", "Maximum matching, optionally mapped");
  matching->add_option("args", o.inputs, "<input> [<other>]")->required()->expected(1, 2);
  add_common(matching, o);

  auto* verify = app.add_subcommand("verify", "Small-n soundness checks");
  verify->add_option("--n", o.n, "Largest n to enumerate");
  verify->add_option("--soundness-n", o.max_soundness_n, "Largest n for all-pairs checks");
  verify->add_option("--g1-n", o.max_g1_n, "Largest n for G1 structure checks");
  add_mirror(verify, o);
  add_workers(verify, o);
  add_common(verify, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    bool ok = true;
    std::optional<Result> r;
    const auto* cmd = app.get_subcommands().front();
    const std::string name = cmd->get_name();
    if (name == "gen") r = cmd_gen(o);
    else if (name == "validate") r = cmd_validate(o);
    else if (name == "flip") r = cmd_flip(o);
    else if (name == "apply") r = cmd_apply(o);
    else if (name == "canon") r = cmd_canon(o);
    else if (name == "enumerate") r = cmd_enumerate(o);
    else if (name == "distance") r = cmd_distance(o);
    else if (name == "diameter") r = cmd_diameter(o);
    else if (name == "maxcommon") r = cmd_maxcommon(o);
    else if (name == "bound") r = cmd_bound(o);
    else if (name == "pathcover") r = cmd_pathcover(o);
    else if (name == "matching") r = cmd_matching(o);
    else if (name == "verify") r = cmd_verify(o, ok);
    emit(*r, o);
    return ok ? kExitOk : kExitDomain;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}
