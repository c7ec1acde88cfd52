#include "arrayldpc/io.hpp"

#include <fstream>
#include <sstream>

#include "arrayldpc/error.hpp"

namespace arrayldpc::io {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(Errc::parse_error, what); }

template <typename T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    parse_fail(std::string("field '") + key + "': " + e.what());
  }
}

ModRational rational_from_json(const json& j) {
  if (j.is_number_integer()) return ModRational(j.get<Int>());
  if (j.is_string()) {
    try {
      return ModRational::parse(j.get<std::string>());
    } catch (const Error& e) {
      parse_fail(e.what());
    }
  }
  parse_fail("template entries must be strings like \"-3/2\" or integers");
}

}  // namespace

json to_json(const SupportMatrix& sm) {
  json cols = json::array();
  for (const ColumnXY& c : sm.columns()) cols.push_back({{"x", c.x}, {"y", c.y}});
  return {{"q", sm.q()}, {"m", sm.m()}, {"columns", cols}};
}

SupportMatrix support_from_json(const json& j) {
  const Int q = field<Int>(j, "q");
  const Int m = field<Int>(j, "m");
  const json cols = field<json>(j, "columns");
  if (!cols.is_array()) parse_fail("'columns' must be an array");
  std::vector<ColumnXY> out;
  for (const json& c : cols) out.push_back({field<Int>(c, "x"), field<Int>(c, "y")});
  return SupportMatrix(q, m, std::move(out));
}

json to_json(const TemplateSupportMatrix& t) {
  json cols = json::array();
  for (std::size_t c = 0; c < t.weight(); ++c) {
    const auto& col = t.column(c);
    if (col) {
      cols.push_back({{"x", col->x.to_string()}, {"y", col->y.to_string()}});
    } else {
      cols.push_back(nullptr);
    }
  }
  return {{"m", t.m()}, {"w", t.weight()}, {"q0", t.q0() ? json(*t.q0()) : json(nullptr)}, {"columns", cols}};
}

TemplateSupportMatrix template_from_json(const json& j) {
  const Int m = field<Int>(j, "m");
  const json cols = field<json>(j, "columns");
  if (!cols.is_array()) parse_fail("'columns' must be an array");
  TemplateSupportMatrix t(m, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].is_null()) continue;
    t.set_column(c, {rational_from_json(field<json>(cols[c], "x")), rational_from_json(field<json>(cols[c], "y"))});
  }
  if (j.contains("w") && field<std::size_t>(j, "w") != cols.size()) parse_fail("'w' does not match the column count");
  if (j.contains("q0") && !j.at("q0").is_null()) t.set_q0(field<Int>(j, "q0"));
  return t;
}

json to_json(const ColumnPermutation& pi) {
  json out = json::array();
  for (const auto& v : pi.map) out.push_back(v ? json(*v) : json(nullptr));
  return out;
}

json to_json(const Cycle& c) {
  return {{"i", c.row_i}, {"j", c.row_j}, {"length", c.length()}, {"labels", c.labels}};
}

json to_json(const DistanceResult& r) {
  json out = {{"kind", std::string(to_string(r.kind))},
              {"value", r.value},
              {"witness", r.witness},
              {"effort", r.effort},
              {"method", r.method}};
  if (r.seed) out["seed"] = *r.seed;
  return out;
}

json to_json(const VerificationReport& r) {
  json th = json::array();
  for (const RowThreshold& t : r.thresholds) {
    th.push_back({{"row", t.row}, {"lambda", t.lambda}, {"mu", t.mu}, {"threshold", t.t}});
  }
  json exceptions = json::array();
  for (const PrimeOutcome& o : r.outcomes) {
    if (o.status == PrimeStatus::clean) continue;
    json e = {{"q", o.q},
              {"status", std::string(to_string(o.status))},
              {"distinct_columns", o.distinct_columns},
              {"effective_weight", o.effective_weight},
              {"reason", o.reason}};
    exceptions.push_back(std::move(e));
  }
  std::size_t clean = 0;
  for (const PrimeOutcome& o : r.outcomes) clean += o.status == PrimeStatus::clean;
  return {{"mode", std::string(to_string(r.mode))},
          {"m", r.m},
          {"w", r.w},
          {"valid", r.valid()},
          {"q0", r.q0 ? json(*r.q0) : json(nullptr)},
          {"bound_from", r.bound_from ? json(*r.bound_from) : json(nullptr)},
          {"numeric_sweep_max", r.numeric_sweep_max},
          {"primes_checked", r.outcomes.size()},
          {"primes_clean", clean},
          {"symbolic_multiplicities", r.symbolic_multiplicities},
          {"thresholds", th},
          {"exceptional_primes", r.exceptional_primes},
          {"exceptions", exceptions}};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::parse_error, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::parse_error, "cannot write " + path.string());
  out << text;
}

SupportMatrix parse_support(const std::string& text, std::optional<Int> q, std::optional<Int> m) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      parse_fail(e.what());
    }
    SupportMatrix sm = support_from_json(j);
    if ((q && *q != sm.q()) || (m && *m != sm.m())) {
      throw Error(Errc::invalid_parameter, "q/m flags disagree with the support file");
    }
    return sm;
  }
  if (!q || !m) throw Error(Errc::invalid_parameter, "index-list supports need --q and --m");
  const ArrayCode code(*q, *m);
  std::vector<std::size_t> idx;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(line.substr(b), &used);
    } catch (const std::exception&) {
      parse_fail("bad index line '" + line + "'");
    }
    if (v < 0) parse_fail("negative column index " + std::to_string(v));
    if (line.find_first_not_of(" \t\r", b + used) != std::string::npos) parse_fail("bad index line '" + line + "'");
    idx.push_back(static_cast<std::size_t>(v));
  }
  return support_matrix_from_set(code, idx);
}

SupportMatrix read_support(const std::filesystem::path& path, std::optional<Int> q, std::optional<Int> m) {
  return parse_support(read_file(path), q, m);
}

TemplateSupportMatrix read_template(const std::filesystem::path& path) {
  try {
    return template_from_json(json::parse(read_file(path)));
  } catch (const json::exception& e) {
    parse_fail(e.what());
  }
}

}  // namespace arrayldpc::io
