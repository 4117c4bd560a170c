#include "mubgeo/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "mubgeo/mub.hpp"

namespace mubgeo {

namespace {

json cplx_to_json(const cplx& z) { return json::array({z.real(), z.imag()}); }

cplx cplx_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw std::invalid_argument("expected a complex number as [re, im]");
    }
    return cplx(j[0].get<double>(), j[1].get<double>());
}

const json& require(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) {
        throw std::invalid_argument(std::string("missing key \"") + key + "\"");
    }
    return *it;
}

long long require_int(const json& j, const char* key) {
    const json& v = require(j, key);
    if (!v.is_number_integer()) {
        throw std::invalid_argument(std::string("key \"") + key + "\" must be an integer");
    }
    return v.get<long long>();
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

std::vector<std::string> split_csv_row(const std::string& line) {
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

double parse_csv_double(const std::string& s) {
    size_t pos = 0;
    double v;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad numeric field \"" + s + "\"");
    }
    if (pos != s.size()) throw std::invalid_argument("bad numeric field \"" + s + "\"");
    return v;
}

long long parse_csv_int(const std::string& s) {
    size_t pos = 0;
    long long v;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad integer field \"" + s + "\"");
    }
    if (pos != s.size()) throw std::invalid_argument("bad integer field \"" + s + "\"");
    return v;
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("JSON parse error: ") + e.what());
    }
}

json basis_label_to_json(const BasisLabel& b) {
    if (b.is_cb()) return json("CB");
    return json(b.residue().value());
}

BasisLabel basis_label_from_json(const json& j, long long d) {
    if (j.is_string()) {
        if (j.get<std::string>() == "CB") return BasisLabel::cb(d);
        throw std::invalid_argument("basis label string must be \"CB\"");
    }
    if (j.is_number_integer()) {
        long long b = j.get<long long>();
        if (b < 0 || b >= d) throw std::invalid_argument("basis residue out of range");
        return BasisLabel::residue(b, d);
    }
    throw std::invalid_argument("basis label must be \"CB\" or a residue integer");
}

json incidence_to_json(const Incidence& g) {
    json j;
    j["kind"] = kind_name(g.kind);
    j["d"] = g.d;
    j["num_points"] = g.num_points;
    j["num_lines"] = g.num_lines;

    json points = json::array();
    for (long long p = 0; p < g.num_points; ++p) {
        if (g.kind == GeometryKind::APG && !g.apg_points.empty()) {
            const ApgPoint& pt = g.apg_points[static_cast<size_t>(p)];
            points.push_back(json{{"x", pt.x}, {"y", pt.y}});
        } else if (g.kind == GeometryKind::DAPG && !g.dapg_points.empty()) {
            const DapgPoint& pt = g.dapg_points[static_cast<size_t>(p)];
            points.push_back(json{{"m", pt.m}, {"b", basis_label_to_json(pt.b)}});
        } else {
            points.push_back(json{{"index", p}});
        }
    }
    j["points"] = std::move(points);

    json lines = json::array();
    for (long long l = 0; l < g.num_lines; ++l) {
        if (g.kind == GeometryKind::APG && !g.apg_lines.empty()) {
            const ApgLine& ln = g.apg_lines[static_cast<size_t>(l)];
            if (ln.vertical) {
                lines.push_back(json{{"type", "vertical"}, {"s", ln.s}});
            } else {
                lines.push_back(json{{"type", "slant"}, {"r", ln.r}, {"s", ln.s}});
            }
        } else if (g.kind == GeometryKind::DAPG && !g.dapg_lines.empty()) {
            const DapgLine& ln = g.dapg_lines[static_cast<size_t>(l)];
            lines.push_back(json{{"m_ddot", ln.m_ddot}, {"m0", ln.m0}});
        } else {
            lines.push_back(json{{"index", l}});
        }
    }
    j["lines"] = std::move(lines);

    json membership = json::array();
    for (long long p = 0; p < g.num_points; ++p) {
        json row = json::array();
        for (long long l = 0; l < g.num_lines; ++l) {
            row.push_back(g.incident(p, l) ? 1 : 0);
        }
        membership.push_back(std::move(row));
    }
    j["membership"] = std::move(membership);
    return j;
}

Incidence incidence_from_json(const json& j) {
    Incidence g;
    g.kind = parse_kind(require(j, "kind").get<std::string>());
    g.d = require_int(j, "d");
    g.num_points = require_int(j, "num_points");
    g.num_lines = require_int(j, "num_lines");
    if (g.num_points <= 0 || g.num_lines <= 0) {
        throw std::invalid_argument("incidence structure needs positive counts");
    }
    const json& membership = require(j, "membership");
    if (!membership.is_array() ||
        membership.size() != static_cast<size_t>(g.num_points)) {
        throw std::invalid_argument("membership must have one row per point");
    }
    g.membership.assign(static_cast<size_t>(g.num_points * g.num_lines), 0);
    for (long long p = 0; p < g.num_points; ++p) {
        const json& row = membership[static_cast<size_t>(p)];
        if (!row.is_array() || row.size() != static_cast<size_t>(g.num_lines)) {
            throw std::invalid_argument("membership row has the wrong length");
        }
        for (long long l = 0; l < g.num_lines; ++l) {
            long long bit = row[static_cast<size_t>(l)].get<long long>();
            if (bit != 0 && bit != 1) {
                throw std::invalid_argument("membership entries must be 0 or 1");
            }
            g.set_incident(p, l, bit == 1);
        }
    }

    const json& points = require(j, "points");
    const json& lines = require(j, "lines");
    if (points.size() != static_cast<size_t>(g.num_points) ||
        lines.size() != static_cast<size_t>(g.num_lines)) {
        throw std::invalid_argument("point or line label count mismatch");
    }
    if (g.kind == GeometryKind::APG && !points.empty() && points[0].contains("x")) {
        for (const json& pt : points) {
            g.apg_points.push_back(ApgPoint{require_int(pt, "x"), require_int(pt, "y")});
        }
        for (const json& ln : lines) {
            std::string type = require(ln, "type").get<std::string>();
            if (type == "vertical") {
                g.apg_lines.push_back(ApgLine{true, 0, require_int(ln, "s")});
            } else if (type == "slant") {
                g.apg_lines.push_back(
                    ApgLine{false, require_int(ln, "r"), require_int(ln, "s")});
            } else {
                throw std::invalid_argument("unknown line type \"" + type + "\"");
            }
        }
    } else if (g.kind == GeometryKind::DAPG && !points.empty() && points[0].contains("m")) {
        for (const json& pt : points) {
            g.dapg_points.push_back(DapgPoint{
                require_int(pt, "m"), basis_label_from_json(require(pt, "b"), g.d)});
        }
        for (const json& ln : lines) {
            g.dapg_lines.push_back(
                DapgLine{require_int(ln, "m_ddot"), require_int(ln, "m0")});
        }
    }
    return g;
}

json mat_to_json(const Mat& m) {
    json rows = json::array();
    for (long long i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (long long k = 0; k < m.dim(); ++k) row.push_back(cplx_to_json(m.at(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat mat_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a non-empty array");
    long long n = static_cast<long long>(j.size());
    Mat m(n);
    for (long long i = 0; i < n; ++i) {
        const json& row = j[static_cast<size_t>(i)];
        if (!row.is_array() || row.size() != static_cast<size_t>(n)) {
            throw std::invalid_argument("matrix rows must all have the matrix dimension");
        }
        for (long long k = 0; k < n; ++k) {
            m.at(i, k) = cplx_from_json(row[static_cast<size_t>(k)]);
        }
    }
    return m;
}

json basis_to_json(long long d, const BasisLabel& b) {
    json states = json::array();
    for (long long m = 0; m < d; ++m) {
        Vec v = mub_state(b, fe(m, d));
        json comps = json::array();
        for (long long n = 0; n < d; ++n) comps.push_back(cplx_to_json(v[n]));
        states.push_back(std::move(comps));
    }
    return json{{"b", basis_label_to_json(b)}, {"states", std::move(states)}};
}

json mub_bundle_to_json(long long d) {
    json bases = json::array();
    for (const BasisLabel& b : BasisLabel::all(d)) bases.push_back(basis_to_json(d, b));
    return json{{"d", d}, {"bases", std::move(bases)}};
}

json line_operator_to_json(const LineOperator& op) {
    return json{{"d", op.m_ddot.modulus()},
                {"family", json{{"r", op.family.r.value()}, {"s", op.family.s.value()}}},
                {"m_ddot", op.m_ddot.value()},
                {"m0", op.m0.value()},
                {"matrix", mat_to_json(op.matrix)}};
}

json line_family_bundle_to_json(long long d, const LineFamily& family) {
    json ops = json::array();
    for (long long md = 0; md < d; ++md) {
        for (long long m0 = 0; m0 < d; ++m0) {
            LineOperator op = family.r == fe(1, d) && family.s == fe(0, d)
                                  ? line_operator_closed(fe(md, d), fe(m0, d))
                                  : general_family_line(family, fe(md, d), fe(m0, d));
            ops.push_back(json{{"m_ddot", md},
                               {"m0", m0},
                               {"matrix", mat_to_json(op.matrix)}});
        }
    }
    return json{{"d", d},
                {"family", json{{"r", family.r.value()}, {"s", family.s.value()}}},
                {"operators", std::move(ops)}};
}

Mat density_from_json(const json& j) {
    long long d = require_int(j, "d");
    Mat m = mat_from_json(require(j, "matrix"));
    if (m.dim() != d) {
        throw std::invalid_argument("matrix dimension disagrees with \"d\"");
    }
    return m;
}

std::string wigner_to_csv(const PhaseTable& w) {
    std::string out = "m_ddot,m0,value\n";
    for (long long md = 0; md < w.d; ++md) {
        for (long long m0 = 0; m0 < w.d; ++m0) {
            out += std::to_string(md) + "," + std::to_string(m0) + "," +
                   format_double(w.at(md, m0)) + "\n";
        }
    }
    return out;
}

PhaseTable wigner_from_csv(const std::string& text) {
    std::vector<std::string> lines = split_lines(text);
    if (lines.empty() || lines[0] != "m_ddot,m0,value") {
        throw std::invalid_argument("expected header \"m_ddot,m0,value\"");
    }
    long long cells = static_cast<long long>(lines.size()) - 1;
    long long d = 0;
    while (d * d < cells) ++d;
    if (d * d != cells || !check_odd_prime(d)) {
        throw std::invalid_argument("phase table must hold d^2 rows for an odd prime d");
    }
    PhaseTable w;
    w.d = d;
    w.values.assign(static_cast<size_t>(d * d), 0.0);
    std::vector<bool> seen(static_cast<size_t>(d * d), false);
    for (size_t i = 1; i < lines.size(); ++i) {
        std::vector<std::string> f = split_csv_row(lines[i]);
        if (f.size() != 3) throw std::invalid_argument("phase table rows need 3 fields");
        long long md = parse_csv_int(f[0]), m0 = parse_csv_int(f[1]);
        if (md < 0 || md >= d || m0 < 0 || m0 >= d) {
            throw std::invalid_argument("phase-point index out of range");
        }
        size_t idx = static_cast<size_t>(md * d + m0);
        if (seen[idx]) throw std::invalid_argument("duplicate phase-point row");
        seen[idx] = true;
        w.values[idx] = parse_csv_double(f[2]);
    }
    return w;
}

std::string radon_to_csv(const RadonTable& r) {
    std::string out = "m,b,value\n";
    for (const BasisLabel& b : BasisLabel::all(r.d)) {
        for (long long m = 0; m < r.d; ++m) {
            out += std::to_string(m) + "," + b.str() + "," + format_double(r.at(m, b)) + "\n";
        }
    }
    return out;
}

RadonTable radon_from_csv(const std::string& text) {
    std::vector<std::string> lines = split_lines(text);
    if (lines.empty() || lines[0] != "m,b,value") {
        throw std::invalid_argument("expected header \"m,b,value\"");
    }
    long long cells = static_cast<long long>(lines.size()) - 1;
    long long d = 0;
    while (d * (d + 1) < cells) ++d;
    if (d * (d + 1) != cells || !check_odd_prime(d)) {
        throw std::invalid_argument("Radon table must hold d(d+1) rows for an odd prime d");
    }
    RadonTable r;
    r.d = d;
    r.values.assign(static_cast<size_t>(cells), 0.0);
    std::vector<bool> seen(static_cast<size_t>(cells), false);
    for (size_t i = 1; i < lines.size(); ++i) {
        std::vector<std::string> f = split_csv_row(lines[i]);
        if (f.size() != 3) throw std::invalid_argument("Radon rows need 3 fields");
        long long m = parse_csv_int(f[0]);
        if (m < 0 || m >= d) throw std::invalid_argument("outcome index out of range");
        BasisLabel b = f[1] == "CB" ? BasisLabel::cb(d)
                                    : BasisLabel::residue(parse_csv_int(f[1]), d);
        size_t idx = static_cast<size_t>(RadonTable::index(d, m, b));
        if (seen[idx]) throw std::invalid_argument("duplicate Radon row");
        seen[idx] = true;
        r.values[idx] = parse_csv_double(f[2]);
    }
    return r;
}

std::string protocol_name(Protocol p) {
    return p == Protocol::MKP ? "MKP" : "TMK";
}

Protocol parse_protocol(const std::string& name) {
    if (name == "MKP" || name == "mkp") return Protocol::MKP;
    if (name == "TMK" || name == "tmk") return Protocol::TMK;
    throw std::invalid_argument("unknown protocol \"" + name + "\"");
}

json transcript_to_json(const Transcript& t) {
    json j{{"protocol", protocol_name(t.protocol)},
           {"d", t.d},
           {"seed", t.seed},
           {"b", basis_label_to_json(t.b)},
           {"m", t.m},
           {"alice", json{{"m_ddot", t.alice_m_ddot}, {"m0", t.alice_m0}}}};
    if (t.protocol == Protocol::MKP) {
        j["inference"] = t.inferred_m;
    } else if (t.undetermined) {
        j["inference"] = "UNDETERMINED";
    } else {
        j["inference"] = basis_label_to_json(*t.inferred_b);
    }
    j["correct"] = t.correct;
    return j;
}

Transcript transcript_from_json(const json& j) {
    long long d = require_int(j, "d");
    Protocol p = parse_protocol(require(j, "protocol").get<std::string>());
    BasisLabel b = basis_label_from_json(require(j, "b"), d);
    const json& alice = require(j, "alice");
    Transcript t{p,
                 d,
                 require(j, "seed").get<std::uint64_t>(),
                 b,
                 require_int(j, "m"),
                 require_int(alice, "m_ddot"),
                 require_int(alice, "m0"),
                 -1,
                 std::nullopt,
                 false,
                 require(j, "correct").get<bool>()};
    const json& inference = require(j, "inference");
    if (p == Protocol::MKP) {
        t.inferred_m = inference.get<long long>();
    } else if (inference.is_string() && inference.get<std::string>() == "UNDETERMINED") {
        t.undetermined = true;
    } else {
        t.inferred_b = basis_label_from_json(inference, d);
    }
    return t;
}

json summary_to_json(const BatchSummary& s) {
    return json{{"rounds", s.rounds},
                {"correct", s.correct},
                {"undetermined", s.undetermined},
                {"failure_rate", s.failure_rate}};
}

std::string batch_to_jsonl(const std::vector<Transcript>& transcripts,
                           const BatchSummary& summary) {
    std::string out;
    for (const Transcript& t : transcripts) {
        out += transcript_to_json(t).dump() + "\n";
    }
    out += summary_to_json(summary).dump() + "\n";
    return out;
}

std::pair<std::vector<Transcript>, BatchSummary> batch_from_jsonl(const std::string& text) {
    std::vector<Transcript> ts;
    BatchSummary summary;
    bool have_summary = false;
    for (const std::string& line : split_lines(text)) {
        if (line.empty()) continue;
        json j = parse_json_text(line);
        if (j.contains("protocol")) {
            ts.push_back(transcript_from_json(j));
        } else if (j.contains("rounds")) {
            summary.rounds = require_int(j, "rounds");
            summary.correct = require_int(j, "correct");
            summary.undetermined = require_int(j, "undetermined");
            summary.failure_rate = require(j, "failure_rate").get<double>();
            have_summary = true;
        } else {
            throw std::invalid_argument("unrecognized transcript line");
        }
    }
    if (!have_summary) throw std::invalid_argument("transcript log has no summary line");
    return {std::move(ts), summary};
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open \"" + path + "\" for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open \"" + path + "\" for writing");
    out << content;
    if (!out.good()) throw std::invalid_argument("write to \"" + path + "\" failed");
}

}  // namespace mubgeo
