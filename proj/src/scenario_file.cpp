#include "ckosc/scenario_file.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

namespace ckosc {

const std::vector<std::string>& output_columns() {
  static const std::vector<std::string> columns = {
      "t",          "Q",       "Qdot",    "P",       "P_k",
      "E_classical", "E_quantum", "zero_point", "delta_q", "delta_p",
      "uncertainty_product", "f_of_t"};
  return columns;
}

namespace {

struct Entry {
  std::string value;
  int line = 0;
};

using Section = std::map<std::string, Entry>;

[[noreturn]] void parse_fail(int line, const std::string& message) {
  std::ostringstream os;
  if (line > 0) os << "line " << line << ": ";
  os << message;
  throw Error(ErrorCode::ParseError, os.str());
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  while (true) {
    const auto comma = s.find(',');
    out.emplace_back(trim(s.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

double to_number(const std::string& text, int line, const std::string& key) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    parse_fail(line, "key '" + key + "': '" + text + "' is not a number");
  }
  return value;
}

std::string format_number(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

class Reader {
 public:
  Reader(const std::map<std::string, Section>& sections, const std::map<std::string, int>& headers)
      : sections_(sections), headers_(headers) {}

  bool has_section(const std::string& name) const { return sections_.count(name) != 0; }

  /// Marks the allowed key set for a section and rejects anything else.
  void allow(const std::string& section, std::initializer_list<const char*> keys) const {
    auto it = sections_.find(section);
    if (it == sections_.end()) return;
    const std::set<std::string> allowed(keys.begin(), keys.end());
    for (const auto& [key, entry] : it->second) {
      if (!allowed.count(key)) {
        parse_fail(entry.line, "unknown key '" + key + "' in [" + section + "]");
      }
    }
  }

  const Entry* find(const std::string& section, const std::string& key) const {
    auto it = sections_.find(section);
    if (it == sections_.end()) return nullptr;
    auto kt = it->second.find(key);
    return kt == it->second.end() ? nullptr : &kt->second;
  }

  double number(const std::string& section, const std::string& key) const {
    const Entry* e = find(section, key);
    if (!e) {
      auto h = headers_.find(section);
      parse_fail(h == headers_.end() ? 0 : h->second,
                 "missing required key '" + key + "' in [" + section + "]");
    }
    return to_number(e->value, e->line, key);
  }

  double number_or(const std::string& section, const std::string& key, double fallback) const {
    const Entry* e = find(section, key);
    return e ? to_number(e->value, e->line, key) : fallback;
  }

  std::vector<double> numbers(const std::string& section, const std::string& key) const {
    const Entry* e = find(section, key);
    if (!e) parse_fail(0, "missing required key '" + key + "' in [" + section + "]");
    std::vector<double> out;
    for (const auto& item : split_list(e->value)) out.push_back(to_number(item, e->line, key));
    return out;
  }

 private:
  const std::map<std::string, Section>& sections_;
  const std::map<std::string, int>& headers_;
};

ForceModel read_force(const Reader& r, double oscillator_mass) {
  const Entry* type = r.find("force", "type");
  if (!type) parse_fail(0, "missing required key 'type' in [force]");
  const std::string& t = type->value;
  if (t == "zero") {
    r.allow("force", {"type"});
    return ZeroForce{};
  }
  if (t == "constant") {
    r.allow("force", {"type", "f0"});
    return ConstantForce{r.number("force", "f0")};
  }
  if (t == "tmafm") {
    r.allow("force", {"type", "F_ext", "k", "D0", "a0", "omega_d", "m_eff"});
    TmafmForce f;
    f.F_ext = r.number("force", "F_ext");
    f.k = r.number("force", "k");
    f.D0 = r.number("force", "D0");
    f.a0 = r.number("force", "a0");
    f.omega_d = r.number("force", "omega_d");
    f.m_eff = r.number("force", "m_eff");
    return f;
  }
  if (t == "sawtooth") {
    r.allow("force", {"type", "f0", "m", "omega_d", "n_terms"});
    SawtoothForce f;
    f.f0 = r.number("force", "f0");
    f.m = r.number_or("force", "m", oscillator_mass);
    f.omega_d = r.number("force", "omega_d");
    const double n = r.number_or("force", "n_terms", 1000.0);
    if (n != std::floor(n) || n < 1.0 || n > 1e7) {
      parse_fail(r.find("force", "n_terms")->line, "key 'n_terms' must be a positive integer");
    }
    f.n_terms = static_cast<int>(n);
    return f;
  }
  if (t == "tabulated") {
    r.allow("force", {"type", "t", "f"});
    return TabulatedForce{r.numbers("force", "t"), r.numbers("force", "f")};
  }
  parse_fail(type->line, "key 'type': unknown force type '" + t + "'");
}

}  // namespace

ScenarioFile parse_scenario(std::string_view text) {
  static const std::set<std::string> known_sections = {"oscillator", "initial", "force", "grid",
                                                       "output"};
  std::map<std::string, Section> sections;
  std::map<std::string, int> headers;
  std::string current;
  int line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;

    const auto comment = line.find_first_of("#;");
    line = trim(line.substr(0, comment));
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') parse_fail(line_no, "malformed section header");
      current = std::string(trim(line.substr(1, line.size() - 2)));
      if (!known_sections.count(current)) parse_fail(line_no, "unknown section [" + current + "]");
      if (headers.count(current)) parse_fail(line_no, "duplicate section [" + current + "]");
      headers[current] = line_no;
      sections[current];
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) parse_fail(line_no, "expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (current.empty()) parse_fail(line_no, "key '" + key + "' outside of any section");
    if (key.empty()) parse_fail(line_no, "empty key");
    auto& section = sections[current];
    if (section.count(key)) parse_fail(line_no, "duplicate key '" + key + "' in [" + current + "]");
    section[key] = Entry{value, line_no};
  }

  const Reader r(sections, headers);
  r.allow("oscillator", {"m", "omega0", "gamma", "hbar"});
  r.allow("initial", {"Q0", "varphi", "chi"});
  r.allow("grid", {"t_end", "dt"});
  r.allow("output", {"columns", "format"});

  for (const char* required : {"oscillator", "initial", "force", "grid"}) {
    if (!sections.count(required)) {
      parse_fail(0, std::string("missing section [") + required + "]");
    }
  }

  ScenarioFile file;
  Scenario& s = file.scenario;
  s.params.m = r.number("oscillator", "m");
  s.params.omega0 = r.number("oscillator", "omega0");
  s.params.gamma = r.number("oscillator", "gamma");
  s.params.hbar = r.number_or("oscillator", "hbar", 1.0);
  s.init.Q0 = r.number("initial", "Q0");
  s.init.varphi = r.number_or("initial", "varphi", 0.0);
  s.chi = r.number_or("initial", "chi", std::numbers::pi / 2);
  s.force = read_force(r, s.params.m);
  s.grid.t_end = r.number("grid", "t_end");
  s.grid.dt = r.number("grid", "dt");

  if (const Entry* e = r.find("output", "columns")) {
    file.columns = split_list(e->value);
    const auto& all = output_columns();
    std::set<std::string> seen;
    for (const auto& c : file.columns) {
      if (std::find(all.begin(), all.end(), c) == all.end()) {
        parse_fail(e->line, "key 'columns': unknown column '" + c + "'");
      }
      if (!seen.insert(c).second) parse_fail(e->line, "key 'columns': duplicate column '" + c + "'");
    }
  }
  if (const Entry* e = r.find("output", "format")) {
    if (e->value != "csv") parse_fail(e->line, "key 'format': only 'csv' is supported");
    file.format = e->value;
  }

  file.scenario = validate_scenario(s);
  return file;
}

ScenarioFile load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read scenario file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

std::string format_scenario(const ScenarioFile& file) {
  const Scenario& s = file.scenario;
  std::ostringstream os;
  auto kv = [&os](const char* key, double v) { os << key << " = " << format_number(v) << '\n'; };
  auto list = [&os](const char* key, const std::vector<double>& v) {
    os << key << " = ";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << format_number(v[i]);
    os << '\n';
  };

  os << "[oscillator]\n";
  kv("m", s.params.m);
  kv("omega0", s.params.omega0);
  kv("gamma", s.params.gamma);
  kv("hbar", s.params.hbar);

  os << "\n[initial]\n";
  kv("Q0", s.init.Q0);
  kv("varphi", s.init.varphi);
  kv("chi", s.chi);

  os << "\n[force]\n";
  os << "type = " << force_name(s.force) << '\n';
  if (const auto* c = std::get_if<ConstantForce>(&s.force)) {
    kv("f0", c->f0);
  } else if (const auto* f = std::get_if<TmafmForce>(&s.force)) {
    kv("F_ext", f->F_ext);
    kv("k", f->k);
    kv("D0", f->D0);
    kv("a0", f->a0);
    kv("omega_d", f->omega_d);
    kv("m_eff", f->m_eff);
  } else if (const auto* f = std::get_if<SawtoothForce>(&s.force)) {
    kv("f0", f->f0);
    kv("m", f->m);
    kv("omega_d", f->omega_d);
    os << "n_terms = " << f->n_terms << '\n';
  } else if (const auto* f = std::get_if<TabulatedForce>(&s.force)) {
    list("t", f->t);
    list("f", f->f);
  }

  os << "\n[grid]\n";
  kv("t_end", s.grid.t_end);
  kv("dt", s.grid.dt);

  os << "\n[output]\ncolumns = ";
  for (std::size_t i = 0; i < file.columns.size(); ++i) os << (i ? "," : "") << file.columns[i];
  os << "\nformat = " << file.format << '\n';
  return os.str();
}

}  // namespace ckosc
