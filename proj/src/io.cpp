#include "secants/io.hpp"

#include "secants/builtin_data.hpp"

#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace secants {

namespace {

using nlohmann::json;

std::string indent_str(int n) { return std::string(std::size_t(n), ' '); }

// One complex value as a JSON fragment: [re, im] raw numbers.
std::string complex_json(const cplx& z) {
  return "[" + format_double(z.real()) + ", " + format_double(z.imag()) + "]";
}

std::string point_json(const SolutionPoint& p) {
  std::ostringstream os;
  os << "{\"t1\": " << complex_json(p.t1) << ", \"t2\": " << complex_json(p.t2)
     << ", \"s1\": " << complex_json(p.s1) << ", \"s2\": " << complex_json(p.s2) << "}";
  return os.str();
}

std::string census_json(const TripleCount& t) {
  std::ostringstream os;
  os << "{\"n_t\": " << t.n_t << ", \"n_p\": " << t.n_p << ", \"n_m\": " << t.n_m
     << ", \"n_R\": " << t.n_real() << "}";
  return os.str();
}

// Matrix entry as the writer emits it: a retained decimal string verbatim, a
// 17-digit string for plain reals, or a ["re", "im"] pair.
std::string entry_json(const ParameterMatrix& M, int i, int j) {
  if (M.has_decimals()) {
    const DecimalEntry& d = M.decimals()[std::size_t(i)][std::size_t(j)];
    if (d.im.empty()) return "\"" + json_escape(d.re) + "\"";
    return "[\"" + json_escape(d.re) + "\", \"" + json_escape(d.im) + "\"]";
  }
  cplx z = M.entry(i, j);
  if (z.imag() == 0.0) return "\"" + format_double(z.real()) + "\"";
  return "[\"" + format_double(z.real()) + "\", \"" + format_double(z.imag()) + "\"]";
}

// Accepts a decimal string, a number, or an [re, im] pair of either; always
// normalizes to decimal text so the parsed matrix can be re-emitted verbatim
// and certified from the exact printed values.
DecimalEntry decimal_from_json(const json& e, const std::string& where) {
  auto component = [&](const json& c) -> std::string {
    if (c.is_string()) {
      std::string s = c.get<std::string>();
      if (s.empty()) throw IOError("matrix JSON: empty decimal string at " + where);
      return s;
    }
    if (c.is_number_integer()) return std::to_string(c.get<long long>());
    if (c.is_number()) return format_double(c.get<double>());
    throw IOError("matrix JSON: entry at " + where +
                  " must be a decimal string, number, or [re, im] pair");
  };
  if (e.is_array()) {
    if (e.size() != 2)
      throw IOError("matrix JSON: complex entry at " + where + " must be [re, im]");
    return DecimalEntry{component(e[0]), component(e[1])};
  }
  return DecimalEntry{component(e), ""};
}

ParameterMatrix matrix_from_json(const json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("rows"))
    throw IOError("matrix JSON: missing \"rows\" at " + where);
  const json& rows = j["rows"];
  if (!rows.is_array() || rows.size() != 4)
    throw IOError("matrix JSON: \"rows\" at " + where + " must hold 4 rows");
  DecimalGrid g;
  for (std::size_t i = 0; i < 4; ++i) {
    const json& row = rows[i];
    if (!row.is_array() || row.size() != 4) {
      std::ostringstream os;
      os << "matrix JSON: row " << i << " at " << where << " must hold 4 entries";
      throw IOError(os.str());
    }
    for (std::size_t k = 0; k < 4; ++k) {
      std::ostringstream os;
      os << where << ".rows[" << i << "][" << k << "]";
      g[i][k] = decimal_from_json(row[k], os.str());
    }
  }
  return ParameterMatrix::from_decimals(g);
}

json parse_or_throw(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw IOError(what + ": " + e.what());
  }
}

std::string sanitize_csv_field(std::string s) {
  for (char& c : s) {
    if (c == ',') c = ';';
    if (c == '\n' || c == '\r') c = ' ';
    if (c == '"') c = '\'';
  }
  return s;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(cur);
  return fields;
}

long parse_long_field(const std::string& s, const std::string& what, long line_no) {
  try {
    std::size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    std::ostringstream os;
    os << "records CSV line " << line_no << ": bad " << what << " '" << s << "'";
    throw IOError(os.str());
  }
}

}  // namespace

std::string format_double(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::ostringstream os;
  for (unsigned char c : s) {
    switch (c) {
      case '"': os << "\\\""; break;
      case '\\': os << "\\\\"; break;
      case '\n': os << "\\n"; break;
      case '\r': os << "\\r"; break;
      case '\t': os << "\\t"; break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          os << buf;
        } else {
          os << char(c);
        }
    }
  }
  return os.str();
}

std::string now_utc_iso8601() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

RunManifest make_manifest(const std::string& subcommand, std::uint64_t seed,
                          std::map<std::string, std::string> options) {
  RunManifest m;
  m.subcommand = subcommand;
  m.seed = seed;
  m.options = std::move(options);
  m.timestamp = now_utc_iso8601();
  return m;
}

std::string manifest_to_json(const RunManifest& m, int indent) {
  const std::string pad = indent_str(indent);
  const std::string in = indent_str(indent + 2);
  std::ostringstream os;
  os << "{\n";
  os << in << "\"subcommand\": \"" << json_escape(m.subcommand) << "\",\n";
  os << in << "\"tool_version\": \"" << json_escape(m.tool_version) << "\",\n";
  os << in << "\"seed\": " << m.seed << ",\n";
  os << in << "\"options\": {";
  bool first = true;
  for (const auto& [k, v] : m.options) {
    os << (first ? "" : ", ") << "\"" << json_escape(k) << "\": \"" << json_escape(v) << "\"";
    first = false;
  }
  os << "},\n";
  os << in << "\"timestamp\": \"" << json_escape(m.timestamp) << "\"\n";
  os << pad << "}";
  return os.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IOError("cannot open '" + path + "' for reading");
  std::ostringstream os;
  os << in.rdbuf();
  if (in.bad()) throw IOError("read error on '" + path + "'");
  return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IOError("cannot open '" + path + "' for writing");
  out << text;
  out.flush();
  if (!out) throw IOError("write error on '" + path + "'");
}

ParameterMatrix parse_matrix_json(const std::string& text) {
  json j = parse_or_throw(text, "matrix JSON parse error");
  return matrix_from_json(j, "$");
}

ParameterMatrix read_matrix_file(const std::string& path) {
  return parse_matrix_json(read_text_file(path));
}

std::string matrix_json_fragment(const ParameterMatrix& M, int indent) {
  const std::string in = indent_str(indent);
  std::ostringstream os;
  os << "{\n" << in << "  \"rows\": [\n";
  for (int i = 0; i < 4; ++i) {
    os << in << "    [";
    for (int j = 0; j < 4; ++j) os << (j ? ", " : "") << entry_json(M, i, j);
    os << "]" << (i < 3 ? "," : "") << "\n";
  }
  os << in << "  ]\n" << in << "}";
  return os.str();
}

std::string matrix_to_json(const ParameterMatrix& M) {
  return matrix_json_fragment(M, 0) + "\n";
}

void write_matrix_file(const std::string& path, const ParameterMatrix& M) {
  write_text_file(path, matrix_to_json(M));
}

TriangleLoop parse_loop_json(const std::string& text) {
  json j = parse_or_throw(text, "loop JSON parse error");
  if (!j.is_object() || !j.contains("vertices"))
    throw IOError("loop JSON: missing \"vertices\"");
  const json& vs = j["vertices"];
  if (!vs.is_array() || vs.size() != 3)
    throw IOError("loop JSON: \"vertices\" must hold exactly 3 matrices");
  std::string label = j.value("label", std::string("loop"));
  auto vertex = [&](std::size_t k) {
    std::ostringstream os;
    os << "$.vertices[" << k << "]";
    return matrix_from_json(vs[k], os.str());
  };
  return TriangleLoop{{vertex(0), vertex(1), vertex(2)}, label};
}

TriangleLoop read_loop_file(const std::string& path) {
  return parse_loop_json(read_text_file(path));
}

std::string solution_to_json(const std::vector<OrbitRecord>& orbits,
                             const TripleCount& counts, const RunManifest& manifest) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"manifest\": " << manifest_to_json(manifest, 2) << ",\n";
  os << "  \"census\": " << census_json(counts) << ",\n";
  os << "  \"orbits\": [\n";
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    const OrbitRecord& rec = orbits[i];
    os << "    {\n";
    os << "      \"representative\": " << point_json(rec.representative) << ",\n";
    os << "      \"orbit\": [\n";
    for (int k = 0; k < 4; ++k)
      os << "        " << point_json(rec.orbit[std::size_t(k)]) << (k < 3 ? "," : "") << "\n";
    os << "      ],\n";
    os << "      \"residual\": " << format_double(rec.residual) << ",\n";
    os << "      \"status\": \"" << to_string(rec.secant_class) << "\",\n";
    os << "      \"conjugate_partner\": ";
    if (rec.conjugate_partner)
      os << *rec.conjugate_partner;
    else
      os << "null";
    os << "\n    }" << (i + 1 < orbits.size() ? "," : "") << "\n";
  }
  os << "  ]\n}\n";
  return os.str();
}

std::string certificate_to_json(const CertificationReport& report,
                                const std::vector<RealityFlag>& point_reality,
                                const RunManifest& manifest) {
  if (point_reality.size() != report.certificates.size())
    throw Error("certificate_to_json: one reality flag per certificate required");
  std::ostringstream os;
  os << "{\n";
  os << "  \"manifest\": " << manifest_to_json(manifest, 2) << ",\n";
  os << "  \"points\": [\n";
  for (std::size_t i = 0; i < report.certificates.size(); ++i) {
    const AlphaCertificate& c = report.certificates[i];
    os << "    {\"alpha\": " << format_double(c.alpha) << ", \"beta\": "
       << format_double(c.beta) << ", \"gamma_bound\": " << format_double(c.gamma_bound)
       << ", \"certified\": " << (c.certified ? "true" : "false") << ", \"reality\": \""
       << to_string(point_reality[i]) << "\"}" << (i + 1 < report.certificates.size() ? "," : "")
       << "\n";
  }
  os << "  ],\n";
  os << "  \"distinct\": " << (report.distinct ? "true" : "false") << ",\n";
  os << "  \"orbit_classes\": [";
  for (std::size_t i = 0; i < report.certified_class.size(); ++i) {
    os << (i ? ", " : "");
    if (report.certified_class[i])
      os << "\"" << to_string(*report.certified_class[i]) << "\"";
    else
      os << "null";
  }
  os << "],\n";
  os << "  \"refinement_rounds\": " << report.refinement_rounds << ",\n";
  os << "  \"census_certified\": ";
  if (report.census_certified)
    os << census_json(*report.census_certified);
  else
    os << "null";
  os << "\n}\n";
  return os.str();
}

std::string records_to_csv(const std::vector<SampleRecord>& records) {
  std::ostringstream os;
  os << "index,n_t,n_p,n_m,n_R,status,certified\n";
  for (const SampleRecord& rec : records) {
    os << rec.index << ",";
    if (rec.triple) {
      os << rec.triple->n_t << "," << rec.triple->n_p << "," << rec.triple->n_m << ","
         << rec.triple->n_real() << ",";
    } else {
      os << ",,,,";
    }
    os << sanitize_csv_field(rec.status) << "," << (rec.certified ? "true" : "false") << "\n";
  }
  return os.str();
}

std::string frequency_to_csv(const FrequencyTable& table) {
  std::ostringstream os;
  os << "n_t,n_p,n_m,count\n";
  for (const auto& [t, count] : table.by_triple)
    os << t.n_t << "," << t.n_p << "," << t.n_m << "," << count << "\n";
  return os.str();
}

std::string ledger_to_json(const RealizabilityLedger& ledger) {
  std::ostringstream os;
  os << "{\n";
  bool first = true;
  for (const auto& [t, entry] : ledger) {
    if (!first) os << ",\n";
    first = false;
    os << "  \"" << t.n_t << "," << t.n_p << "," << t.n_m << "\": {\"witness\": \""
       << json_escape(entry.witness) << "\", \"count\": " << entry.count << "}";
  }
  os << "\n}\n";
  return os.str();
}

std::vector<RecordRow> read_records_csv(const std::string& path) {
  std::string text = read_text_file(path);
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) return {};
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "index,n_t,n_p,n_m,n_R,status,certified")
    throw IOError("records CSV: unexpected header '" + line + "'");

  std::vector<RecordRow> rows;
  long line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> f = split_csv_line(line);
    if (f.size() != 7) {
      std::ostringstream os;
      os << "records CSV line " << line_no << ": expected 7 fields, got " << f.size();
      throw IOError(os.str());
    }
    RecordRow row;
    row.index = parse_long_field(f[0], "index", line_no);
    const bool has_counts = !(f[1].empty() && f[2].empty() && f[3].empty() && f[4].empty());
    if (has_counts) {
      TripleCount t;
      t.n_t = int(parse_long_field(f[1], "n_t", line_no));
      t.n_p = int(parse_long_field(f[2], "n_p", line_no));
      t.n_m = int(parse_long_field(f[3], "n_m", line_no));
      long n_R = parse_long_field(f[4], "n_R", line_no);
      std::ostringstream os;
      os << "records CSV line " << line_no << ": ";
      if (t.n_t < 0 || t.n_p < 0 || t.n_m < 0) {
        os << "negative count";
        throw IOError(os.str());
      }
      if (n_R != t.n_real()) {
        os << "n_R " << n_R << " disagrees with n_t+n_p+n_m = " << t.n_real();
        throw IOError(os.str());
      }
      if (t.n_real() > 10) {
        os << "n_R " << n_R << " exceeds 10";
        throw IOError(os.str());
      }
      if (n_R % 2 != 0) {
        os << "odd n_R " << n_R << " (10 - n_R must be even)";
        throw IOError(os.str());
      }
      row.triple = t;
    }
    row.status = f[5];
    if (f[6] == "true")
      row.certified = true;
    else if (f[6] == "false")
      row.certified = false;
    else {
      std::ostringstream os;
      os << "records CSV line " << line_no << ": bad certified flag '" << f[6] << "'";
      throw IOError(os.str());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string constants_to_json() {
  std::ostringstream os;
  os << "{\n";
  os << "  \"base_matrix\": " << matrix_json_fragment(data::base_matrix(), 2) << ",\n";

  os << "  \"base_representatives\": [\n";
  const auto& reps = data::base_representatives();
  for (std::size_t i = 0; i < reps.size(); ++i)
    os << "    " << point_json(reps[i]) << (i + 1 < reps.size() ? "," : "") << "\n";
  os << "  ],\n";

  os << "  \"loops\": [\n";
  for (int loop = 1; loop <= 2; ++loop) {
    os << "    {\n";
    os << "      \"vertices\": [\n";
    const ParameterMatrix* vs[3] = {&data::base_matrix(), &data::loop_vertex(loop, 1),
                                    &data::loop_vertex(loop, 2)};
    for (int v = 0; v < 3; ++v)
      os << "        " << matrix_json_fragment(*vs[v], 8) << (v < 2 ? "," : "") << "\n";
    os << "      ],\n";
    os << "      \"edge_roots\": [\n";
    const auto& edges = data::loop_edge_roots(loop);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      os << "        [";
      for (std::size_t r = 0; r < edges[e].size(); ++r)
        os << (r ? ", " : "") << complex_json(edges[e][r]);
      os << "]" << (e + 1 < edges.size() ? "," : "") << "\n";
    }
    os << "      ],\n";
    os << "      \"permutation\": [";
    const auto& sigma = data::reference_loop_permutations()[std::size_t(loop - 1)];
    for (std::size_t i = 0; i < sigma.size(); ++i) os << (i ? ", " : "") << sigma[i];
    os << "]\n";
    os << "    }" << (loop < 2 ? "," : "") << "\n";
  }
  os << "  ],\n";

  os << "  \"census_gallery\": [\n";
  const auto& gallery = data::census_gallery();
  for (std::size_t g = 0; g < gallery.size(); ++g) {
    const auto& entry = gallery[g];
    os << "    {\n";
    os << "      \"triple\": [" << entry.triple[0] << ", " << entry.triple[1] << ", "
       << entry.triple[2] << "],\n";
    os << "      \"matrix\": " << matrix_json_fragment(entry.matrix, 6) << ",\n";
    os << "      \"listed_reps\": [";
    for (std::size_t i = 0; i < entry.listed_reps.size(); ++i) {
      os << (i ? "," : "") << "\n        " << point_json(entry.listed_reps[i]);
    }
    if (!entry.listed_reps.empty()) os << "\n      ";
    os << "]\n";
    os << "    }" << (g + 1 < gallery.size() ? "," : "") << "\n";
  }
  os << "  ],\n";

  os << "  \"realized_tuples\": [\n";
  const auto& realized = data::realized_tuples_reference();
  for (std::size_t i = 0; i < realized.size(); ++i)
    os << "    [" << realized[i][0] << ", " << realized[i][1] << ", " << realized[i][2]
       << "]" << (i + 1 < realized.size() ? "," : "") << "\n";
  os << "  ],\n";

  os << "  \"top_triples\": [\n";
  const auto& top = data::top_triples_reference();
  for (std::size_t i = 0; i < top.size(); ++i)
    os << "    {\"triple\": [" << top[i].first[0] << ", " << top[i].first[1] << ", "
       << top[i].first[2] << "], \"count\": " << top[i].second << "}"
       << (i + 1 < top.size() ? "," : "") << "\n";
  os << "  ],\n";

  os << "  \"frequency_reference\": [\n";
  const auto& freq = data::frequency_reference();
  for (std::size_t i = 0; i < freq.size(); ++i)
    os << "    {\"n_R\": " << freq[i].first << ", \"count\": " << freq[i].second << "}"
       << (i + 1 < freq.size() ? "," : "") << "\n";
  os << "  ]\n}\n";
  return os.str();
}

}  // namespace secants
