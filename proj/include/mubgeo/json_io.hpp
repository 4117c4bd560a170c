#pragma once

// Serialization of every structure the command-line tool emits, plus the
// matching parsers so round-tripping is testable.  JSON uses
// nlohmann::ordered_json to keep key order deterministic; CSV doubles
// are printed with %.17g so values survive the round trip exactly.
//
// Conventions mirrored everywhere: basis labels serialize as "CB" or a
// residue integer; complex numbers as [re, im]; matrices as row-major
// arrays of arrays; tables in the library's canonical orders (Wigner
// rows m-ddot major, Radon columns CB first).  Parsers throw
// std::invalid_argument on malformed input.

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "mubgeo/incidence.hpp"
#include "mubgeo/linalg.hpp"
#include "mubgeo/lineops.hpp"
#include "mubgeo/phasespace.hpp"
#include "mubgeo/twoparticle.hpp"

namespace mubgeo {

using json = nlohmann::ordered_json;

std::string format_double(double v);  // %.17g
json parse_json_text(const std::string& text);

json basis_label_to_json(const BasisLabel& b);
BasisLabel basis_label_from_json(const json& j, long long d);

json incidence_to_json(const Incidence& g);
Incidence incidence_from_json(const json& j);

json mat_to_json(const Mat& m);
Mat mat_from_json(const json& j);

// One basis: {"b": ..., "states": [state_m ...]} with state components
// indexed by n; the bundle carries all d+1 bases in canonical order.
json basis_to_json(long long d, const BasisLabel& b);
json mub_bundle_to_json(long long d);

json line_operator_to_json(const LineOperator& op);

// {"d", "family": {"r","s"}, "operators": [...]} in m_ddot-major order.
json line_family_bundle_to_json(long long d, const LineFamily& family);

// {"d": n, "matrix": [[[re,im],...],...]}; the matrix is returned as-is,
// physical validation is DensityMatrix::from_matrix's job.
Mat density_from_json(const json& j);

std::string wigner_to_csv(const PhaseTable& w);
PhaseTable wigner_from_csv(const std::string& text);

std::string radon_to_csv(const RadonTable& r);
RadonTable radon_from_csv(const std::string& text);

std::string protocol_name(Protocol p);
Protocol parse_protocol(const std::string& name);

json transcript_to_json(const Transcript& t);
Transcript transcript_from_json(const json& j);
json summary_to_json(const BatchSummary& s);

// One transcript per line, then a final summary line.
std::string batch_to_jsonl(const std::vector<Transcript>& transcripts,
                           const BatchSummary& summary);
std::pair<std::vector<Transcript>, BatchSummary> batch_from_jsonl(const std::string& text);

std::string read_text_file(const std::string& path);   // throws std::invalid_argument
void write_text_file(const std::string& path, const std::string& content);

}  // namespace mubgeo
