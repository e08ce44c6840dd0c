#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "secants/certifier.hpp"
#include "secants/classifier.hpp"
#include "secants/monodromy.hpp"
#include "secants/parameter_matrix.hpp"
#include "secants/sampler.hpp"

// File formats. Writers are hand-rolled so output bytes are deterministic and
// every floating-point value is serialized with 17 significant digits (exact
// double round-trip); readers sit on a JSON parser and accept a superset.
namespace secants {

inline constexpr const char* kToolVersion = "0.1.0";

std::string format_double(double x);  // "%.17g"; non-finite becomes "null"
std::string json_escape(const std::string& s);
std::string now_utc_iso8601();

// Provenance block carried by every output file: embedded in JSON payloads,
// written alongside CSVs as <out>.manifest.json. The timestamp is the only
// field allowed to differ between reruns of one configuration.
struct RunManifest {
  std::string subcommand;
  std::string tool_version = kToolVersion;
  std::uint64_t seed = 0;
  std::map<std::string, std::string> options;  // effective option snapshot
  std::string timestamp;                       // UTC, ISO-8601
};

RunManifest make_manifest(const std::string& subcommand, std::uint64_t seed,
                          std::map<std::string, std::string> options);
std::string manifest_to_json(const RunManifest& m, int indent = 0);

std::string read_text_file(const std::string& path);  // throws IOError
void write_text_file(const std::string& path, const std::string& text);

// Matrix files: {"rows": [[entry x4] x4]}. An entry is a decimal string, a
// plain number, or an [re, im] pair of either. Decimal strings are retained
// verbatim; the writer re-emits them unchanged, and converts anything else to
// a 17-digit decimal string.
ParameterMatrix parse_matrix_json(const std::string& text);
ParameterMatrix read_matrix_file(const std::string& path);
std::string matrix_to_json(const ParameterMatrix& M);
// Same object without the trailing newline, indented for embedding: the
// opening brace is emitted bare, inner lines are indented by `indent`+2.
std::string matrix_json_fragment(const ParameterMatrix& M, int indent);
void write_matrix_file(const std::string& path, const ParameterMatrix& M);

// Loop files: {"label": optional string, "vertices": [matrix x3]} with each
// vertex in matrix-file form.
TriangleLoop parse_loop_json(const std::string& text);
TriangleLoop read_loop_file(const std::string& path);

// Solution file: {"manifest", "census", "orbits"} where "orbits" is the array
// of orbit records {"representative", "orbit", "residual", "status",
// "conjugate_partner"}.
std::string solution_to_json(const std::vector<OrbitRecord>& orbits,
                             const TripleCount& counts, const RunManifest& manifest);

// Certificate file: per-point {alpha, beta, gamma_bound, certified, reality}
// plus distinctness, per-orbit classes, and the certified census (null when
// unavailable). point_reality must have one flag per certificate.
std::string certificate_to_json(const CertificationReport& report,
                                const std::vector<RealityFlag>& point_reality,
                                const RunManifest& manifest);

// records.csv: index,n_t,n_p,n_m,n_R,status,certified (numeric fields empty
// on failed samples; commas in status are sanitized away).
std::string records_to_csv(const std::vector<SampleRecord>& records);
// freq.csv: n_t,n_p,n_m,count, lexicographically sorted.
std::string frequency_to_csv(const FrequencyTable& table);
// Ledger: JSON map "n_t,n_p,n_m" -> {"witness", "count"}.
std::string ledger_to_json(const RealizabilityLedger& ledger);

struct RecordRow {
  long index = 0;
  std::optional<TripleCount> triple;  // absent on failure rows
  std::string status;
  bool certified = false;
};

// Parses records.csv back. Throws IOError on structural or consistency
// defects: wrong header or field count, unparseable numbers, a stored n_R
// that disagrees with the triple, negative counts, sums over 10, odd n_R.
std::vector<RecordRow> read_records_csv(const std::string& path);

// One JSON document holding every compiled-in reference table (base instance,
// loops with expected roots and permutations, gallery, realizability and
// frequency tables), for snapshotting against data/constants.json.
std::string constants_to_json();

}  // namespace secants
