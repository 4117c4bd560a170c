#include "mubgeo/incidence.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>

namespace mubgeo {

std::string kind_name(GeometryKind kind) {
    switch (kind) {
        case GeometryKind::APG: return "APG";
        case GeometryKind::DAPG: return "DAPG";
        case GeometryKind::FPP: return "FPP";
    }
    throw std::logic_error("unknown geometry kind");
}

GeometryKind parse_kind(const std::string& name) {
    std::string s;
    for (char c : name) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s == "apg") return GeometryKind::APG;
    if (s == "dapg") return GeometryKind::DAPG;
    if (s == "fpp") return GeometryKind::FPP;
    throw std::invalid_argument("unknown geometry kind '" + name + "' (expected apg, dapg or fpp)");
}

std::vector<long long> Incidence::line_points(long long l) const {
    std::vector<long long> pts;
    for (long long p = 0; p < num_points; ++p)
        if (incident(p, l)) pts.push_back(p);
    return pts;
}

std::vector<long long> Incidence::point_lines(long long p) const {
    std::vector<long long> ls;
    for (long long l = 0; l < num_lines; ++l)
        if (incident(p, l)) ls.push_back(l);
    return ls;
}

long long Incidence::k_line() const {
    long long k = -1;
    for (long long l = 0; l < num_lines; ++l) {
        long long c = 0;
        for (long long p = 0; p < num_points; ++p) c += incident(p, l) ? 1 : 0;
        if (k < 0) k = c;
        else if (k != c) throw std::domain_error("points-per-line is not uniform");
    }
    return k;
}

long long Incidence::r_point() const {
    long long r = -1;
    for (long long p = 0; p < num_points; ++p) {
        long long c = 0;
        for (long long l = 0; l < num_lines; ++l) c += incident(p, l) ? 1 : 0;
        if (r < 0) r = c;
        else if (r != c) throw std::domain_error("lines-per-point is not uniform");
    }
    return r;
}

long long apg_point_index(long long d, long long x, long long y) { return x * d + y; }
long long apg_slant_index(long long d, long long r, long long s) { return r * d + s; }
long long apg_vertical_index(long long d, long long s) { return d * d + s; }

long long dapg_point_index(long long d, long long m, const BasisLabel& b) {
    long long col = b.is_cb() ? 0 : 1 + b.residue().value();
    return col * d + m;
}

long long dapg_line_index(long long d, long long m_ddot, long long m0) {
    return m_ddot * d + m0;
}

namespace {

void require_dimension(long long d) {
    if (!check_odd_prime(d))
        throw std::invalid_argument("geometry dimension must be an odd prime, got " +
                                    std::to_string(d));
}

}  // namespace

Incidence build_apg(long long d) {
    require_dimension(d);
    Incidence g;
    g.kind = GeometryKind::APG;
    g.d = d;
    g.num_points = d * d;
    g.num_lines = d * (d + 1);
    g.membership.assign(static_cast<size_t>(g.num_points * g.num_lines), 0);

    g.apg_points.reserve(static_cast<size_t>(g.num_points));
    for (long long x = 0; x < d; ++x)
        for (long long y = 0; y < d; ++y) g.apg_points.push_back({x, y});

    g.apg_lines.reserve(static_cast<size_t>(g.num_lines));
    for (long long r = 0; r < d; ++r)
        for (long long s = 0; s < d; ++s) g.apg_lines.push_back({false, r, s});
    for (long long s = 0; s < d; ++s) g.apg_lines.push_back({true, 0, s});

    for (long long r = 0; r < d; ++r)
        for (long long s = 0; s < d; ++s) {
            long long l = apg_slant_index(d, r, s);
            for (long long x = 0; x < d; ++x) {
                long long y = (r * x + s) % d;
                g.set_incident(apg_point_index(d, x, y), l, true);
            }
        }
    for (long long s = 0; s < d; ++s) {
        long long l = apg_vertical_index(d, s);
        for (long long y = 0; y < d; ++y) g.set_incident(apg_point_index(d, s, y), l, true);
    }
    return g;
}

Incidence build_dapg(long long d) {
    require_dimension(d);
    Incidence g;
    g.kind = GeometryKind::DAPG;
    g.d = d;
    g.num_points = d * (d + 1);
    g.num_lines = d * d;
    g.membership.assign(static_cast<size_t>(g.num_points * g.num_lines), 0);

    g.dapg_points.reserve(static_cast<size_t>(g.num_points));
    for (const BasisLabel& b : BasisLabel::all(d))
        for (long long m = 0; m < d; ++m) g.dapg_points.push_back({m, b});

    g.dapg_lines.reserve(static_cast<size_t>(g.num_lines));
    for (long long md = 0; md < d; ++md)
        for (long long m0 = 0; m0 < d; ++m0) g.dapg_lines.push_back({md, m0});

    // Line (m-ddot, m0) holds the CB point m-ddot and, in the column of
    // residue b, the point m(b) = m0 + b*m-ddot - b/2.
    for (long long md = 0; md < d; ++md)
        for (long long m0 = 0; m0 < d; ++m0) {
            long long l = dapg_line_index(d, md, m0);
            g.set_incident(dapg_point_index(d, md, BasisLabel::cb(d)), l, true);
            for (long long b = 0; b < d; ++b) {
                FieldElement fb(b, d);
                FieldElement m = FieldElement(m0, d) + fb * FieldElement(md, d) - fb.half();
                g.set_incident(dapg_point_index(d, m.value(), BasisLabel::residue(fb)), l, true);
            }
        }
    return g;
}

Incidence complete_to_fpp(const Incidence& g) {
    if (g.kind == GeometryKind::FPP)
        throw std::invalid_argument("complete_to_fpp: input is already projective");
    AxiomReport rep = check_axioms(g);
    if (!rep.all_pass()) {
        for (const AxiomCheck& c : rep.checks)
            if (!c.pass)
                throw std::invalid_argument("complete_to_fpp: input fails \"" + c.name +
                                            "\" (" + c.witness + ")");
    }
    std::vector<std::vector<long long>> pcls = pencils(g);
    long long np = static_cast<long long>(pcls.size());

    Incidence f;
    f.kind = GeometryKind::FPP;
    f.d = g.d;

    if (g.kind == GeometryKind::APG) {
        // One new point per pencil of parallel lines, one new line (at
        // infinity) through exactly those points.
        f.num_points = g.num_points + np;
        f.num_lines = g.num_lines + 1;
        f.membership.assign(static_cast<size_t>(f.num_points * f.num_lines), 0);
        for (long long p = 0; p < g.num_points; ++p)
            for (long long l = 0; l < g.num_lines; ++l)
                if (g.incident(p, l)) f.set_incident(p, l, true);
        for (long long c = 0; c < np; ++c) {
            long long newp = g.num_points + c;
            for (long long l : pcls[static_cast<size_t>(c)]) f.set_incident(newp, l, true);
            f.set_incident(newp, g.num_lines, true);
        }
        return f;
    }

    // DAPG: one new line per pencil of unconnected points, all passing
    // through one new point.
    f.num_points = g.num_points + 1;
    f.num_lines = g.num_lines + np;
    f.membership.assign(static_cast<size_t>(f.num_points * f.num_lines), 0);
    for (long long p = 0; p < g.num_points; ++p)
        for (long long l = 0; l < g.num_lines; ++l)
            if (g.incident(p, l)) f.set_incident(p, l, true);
    long long omega = g.num_points;
    for (long long c = 0; c < np; ++c) {
        long long newl = g.num_lines + c;
        for (long long p : pcls[static_cast<size_t>(c)]) f.set_incident(p, newl, true);
        f.set_incident(omega, newl, true);
    }
    return f;
}

Incidence remove_line_and_points(const Incidence& g, long long line_index) {
    if (g.kind != GeometryKind::FPP)
        throw std::invalid_argument("remove_line_and_points expects a projective plane");
    if (line_index < 0 || line_index >= g.num_lines)
        throw std::invalid_argument("line index out of range");

    std::vector<long long> keep_points, keep_lines;
    for (long long p = 0; p < g.num_points; ++p)
        if (!g.incident(p, line_index)) keep_points.push_back(p);
    for (long long l = 0; l < g.num_lines; ++l)
        if (l != line_index) keep_lines.push_back(l);

    Incidence r;
    r.kind = GeometryKind::APG;
    r.d = g.d;
    r.num_points = static_cast<long long>(keep_points.size());
    r.num_lines = static_cast<long long>(keep_lines.size());
    r.membership.assign(static_cast<size_t>(r.num_points * r.num_lines), 0);
    for (long long pi = 0; pi < r.num_points; ++pi)
        for (long long li = 0; li < r.num_lines; ++li)
            if (g.incident(keep_points[static_cast<size_t>(pi)], keep_lines[static_cast<size_t>(li)]))
                r.set_incident(pi, li, true);
    return r;
}

Incidence dual_incidence(const Incidence& g) {
    Incidence r;
    r.kind = g.kind == GeometryKind::APG    ? GeometryKind::DAPG
             : g.kind == GeometryKind::DAPG ? GeometryKind::APG
                                            : GeometryKind::FPP;
    r.d = g.d;
    r.num_points = g.num_lines;
    r.num_lines = g.num_points;
    r.membership.assign(static_cast<size_t>(r.num_points * r.num_lines), 0);
    for (long long p = 0; p < g.num_points; ++p)
        for (long long l = 0; l < g.num_lines; ++l)
            if (g.incident(p, l)) r.set_incident(l, p, true);
    return r;
}

bool AxiomReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

namespace {

// Point sets of lines packed into 64-bit words for cheap intersection.
struct LineSets {
    long long words;
    std::vector<std::uint64_t> bits;  // line-major

    LineSets(const Incidence& g) : words((g.num_points + 63) / 64) {
        bits.assign(static_cast<size_t>(g.num_lines * words), 0);
        for (long long l = 0; l < g.num_lines; ++l)
            for (long long p = 0; p < g.num_points; ++p)
                if (g.incident(p, l))
                    bits[static_cast<size_t>(l * words + p / 64)] |= 1ull << (p % 64);
    }

    long long common(long long l1, long long l2) const {
        long long c = 0;
        for (long long w = 0; w < words; ++w)
            c += std::popcount(bits[static_cast<size_t>(l1 * words + w)] &
                               bits[static_cast<size_t>(l2 * words + w)]);
        return c;
    }
};

long long common_line_count(const std::vector<std::vector<long long>>& point_lines,
                            long long p, long long q) {
    const auto& a = point_lines[static_cast<size_t>(p)];
    const auto& b = point_lines[static_cast<size_t>(q)];
    long long c = 0;
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) { ++c; ++i; ++j; }
        else if (a[i] < b[j]) ++i;
        else ++j;
    }
    return c;
}

std::string pt(long long p) { return "point " + std::to_string(p); }
std::string ln(long long l) { return "line " + std::to_string(l); }

AxiomCheck check_unique_joining_line(const Incidence& g,
                                     const std::vector<std::vector<long long>>& pls) {
    for (long long p = 0; p < g.num_points; ++p)
        for (long long q = p + 1; q < g.num_points; ++q) {
            long long c = common_line_count(pls, p, q);
            if (c != 1)
                return {"lambda1: unique line through two points", false,
                        pt(p) + " and " + pt(q) + " share " + std::to_string(c) + " lines"};
        }
    return {"lambda1: unique line through two points", true, ""};
}

AxiomCheck check_point_on_two_lines(const Incidence& g,
                                    const std::vector<std::vector<long long>>& pls) {
    for (long long p = 0; p < g.num_points; ++p)
        if (pls[static_cast<size_t>(p)].size() < 2)
            return {"lambda1: every point on at least two lines", false,
                    pt(p) + " lies on " + std::to_string(pls[static_cast<size_t>(p)].size()) +
                        " lines"};
    return {"lambda1: every point on at least two lines", true, ""};
}

AxiomCheck check_line_has_two_points(const Incidence& g, const char* name) {
    for (long long l = 0; l < g.num_lines; ++l) {
        long long c = static_cast<long long>(g.line_points(l).size());
        if (c < 2)
            return {name, false, ln(l) + " holds " + std::to_string(c) + " points"};
    }
    return {name, true, ""};
}

bool collinear(const Incidence& g, const std::vector<std::vector<long long>>& pls,
               long long a, long long b, long long c) {
    for (long long l : pls[static_cast<size_t>(a)])
        if (g.incident(b, l) && g.incident(c, l)) return true;
    return false;
}

AxiomCheck check_noncollinear_triple(const Incidence& g,
                                     const std::vector<std::vector<long long>>& pls) {
    const char* name = "lambda2: three non-collinear points exist";
    for (long long a = 0; a < g.num_points; ++a)
        for (long long b = a + 1; b < g.num_points; ++b)
            for (long long c = b + 1; c < g.num_points; ++c)
                if (!collinear(g, pls, a, b, c)) return {name, true, ""};
    return {name, false, "every point triple is collinear"};
}

AxiomCheck check_parallel_axiom(const Incidence& g, const LineSets& ls,
                                const std::vector<std::vector<long long>>& pls) {
    const char* name = "A: unique parallel through an external point";
    for (long long l = 0; l < g.num_lines; ++l)
        for (long long p = 0; p < g.num_points; ++p) {
            if (g.incident(p, l)) continue;
            long long parallels = 0;
            for (long long lp : pls[static_cast<size_t>(p)])
                if (ls.common(lp, l) == 0) ++parallels;
            if (parallels != 1)
                return {name, false,
                        ln(l) + " and external " + pt(p) + " admit " +
                            std::to_string(parallels) + " parallels"};
        }
    return {name, true, ""};
}

AxiomCheck check_unique_meeting_point(const Incidence& g, const LineSets& ls) {
    const char* name = "dual lambda1: unique point common to two lines";
    for (long long l1 = 0; l1 < g.num_lines; ++l1)
        for (long long l2 = l1 + 1; l2 < g.num_lines; ++l2) {
            long long c = ls.common(l1, l2);
            if (c != 1)
                return {name, false,
                        ln(l1) + " and " + ln(l2) + " share " + std::to_string(c) + " points"};
        }
    return {name, true, ""};
}

AxiomCheck check_two_lines_with_common_point(const Incidence& g, const LineSets& ls) {
    const char* name = "dual lambda2: two lines with a common point exist";
    for (long long l1 = 0; l1 < g.num_lines; ++l1)
        for (long long l2 = l1 + 1; l2 < g.num_lines; ++l2)
            if (ls.common(l1, l2) >= 1) return {name, true, ""};
    return {name, false, "all line pairs are disjoint"};
}

AxiomCheck check_three_lines_no_common_point(const Incidence& g) {
    const char* name = "dual lambda2: three lines without threefold point exist";
    for (long long l1 = 0; l1 < g.num_lines; ++l1)
        for (long long l2 = l1 + 1; l2 < g.num_lines; ++l2)
            for (long long l3 = l2 + 1; l3 < g.num_lines; ++l3) {
                bool threefold = false;
                for (long long p = 0; p < g.num_points && !threefold; ++p)
                    threefold = g.incident(p, l1) && g.incident(p, l2) && g.incident(p, l3);
                if (!threefold) return {name, true, ""};
            }
    return {name, false, "every line triple shares a point"};
}

AxiomCheck check_dual_parallel_axiom(const Incidence& g,
                                     const std::vector<std::vector<long long>>& pls) {
    const char* name = "dual A: unique unconnected point on an external line";
    for (long long p = 0; p < g.num_points; ++p)
        for (long long l = 0; l < g.num_lines; ++l) {
            if (g.incident(p, l)) continue;
            long long unconnected = 0;
            for (long long q : g.line_points(l))
                if (common_line_count(pls, p, q) == 0) ++unconnected;
            if (unconnected != 1)
                return {name, false,
                        pt(p) + " off " + ln(l) + " has " + std::to_string(unconnected) +
                            " unconnected points on it"};
        }
    return {name, true, ""};
}

AxiomCheck check_lines_meet(const Incidence& g, const LineSets& ls) {
    const char* name = "P1: any two lines meet";
    for (long long l1 = 0; l1 < g.num_lines; ++l1)
        for (long long l2 = l1 + 1; l2 < g.num_lines; ++l2)
            if (ls.common(l1, l2) == 0)
                return {name, false, ln(l1) + " and " + ln(l2) + " are disjoint"};
    return {name, true, ""};
}

AxiomCheck check_quadrangle(const Incidence& g, const LineSets& ls,
                            const std::vector<std::vector<long long>>& pls) {
    const char* name = "P2: four points in general position exist";
    for (long long l1 = 0; l1 < g.num_lines; ++l1) {
        std::vector<long long> a = g.line_points(l1);
        if (a.size() < 3) continue;
        for (long long l2 = l1 + 1; l2 < g.num_lines; ++l2) {
            if (ls.common(l1, l2) != 1) continue;
            std::vector<long long> b = g.line_points(l2);
            if (b.size() < 3) continue;
            std::vector<long long> pa, pb;
            for (long long p : a)
                if (!g.incident(p, l2)) pa.push_back(p);
            for (long long p : b)
                if (!g.incident(p, l1)) pb.push_back(p);
            if (pa.size() < 2 || pb.size() < 2) continue;
            long long p1 = pa[0], p2 = pa[1], q1 = pb[0], q2 = pb[1];
            if (!collinear(g, pls, p1, p2, q1) && !collinear(g, pls, p1, p2, q2) &&
                !collinear(g, pls, p1, q1, q2) && !collinear(g, pls, p2, q1, q2))
                return {name, true, ""};
        }
    }
    return {name, false, "no quadrangle found"};
}

}  // namespace

AxiomReport check_axioms(const Incidence& g) {
    LineSets ls(g);
    std::vector<std::vector<long long>> pls;
    pls.reserve(static_cast<size_t>(g.num_points));
    for (long long p = 0; p < g.num_points; ++p) pls.push_back(g.point_lines(p));

    AxiomReport rep;
    switch (g.kind) {
        case GeometryKind::APG:
            rep.checks.push_back(check_unique_joining_line(g, pls));
            rep.checks.push_back(check_point_on_two_lines(g, pls));
            rep.checks.push_back(check_line_has_two_points(g, "lambda2: every line holds two points"));
            rep.checks.push_back(check_noncollinear_triple(g, pls));
            rep.checks.push_back(check_parallel_axiom(g, ls, pls));
            break;
        case GeometryKind::DAPG:
            rep.checks.push_back(check_unique_meeting_point(g, ls));
            rep.checks.push_back(check_line_has_two_points(g, "dual lambda1: every line holds two points"));
            rep.checks.push_back(check_two_lines_with_common_point(g, ls));
            rep.checks.push_back(check_three_lines_no_common_point(g));
            rep.checks.push_back(check_dual_parallel_axiom(g, pls));
            break;
        case GeometryKind::FPP:
            rep.checks.push_back(check_unique_joining_line(g, pls));
            rep.checks.push_back(check_point_on_two_lines(g, pls));
            rep.checks.push_back(check_line_has_two_points(g, "lambda2: every line holds two points"));
            rep.checks.push_back(check_noncollinear_triple(g, pls));
            rep.checks.push_back(check_lines_meet(g, ls));
            rep.checks.push_back(check_quadrangle(g, ls, pls));
            break;
    }
    return rep;
}

std::vector<std::vector<long long>> pencils(const Incidence& g) {
    if (g.kind == GeometryKind::FPP)
        throw std::invalid_argument("FPP has no pencils: every two lines meet");

    std::vector<std::vector<long long>> classes;

    if (g.kind == GeometryKind::APG) {
        LineSets ls(g);
        std::vector<char> assigned(static_cast<size_t>(g.num_lines), 0);
        for (long long l = 0; l < g.num_lines; ++l) {
            if (assigned[static_cast<size_t>(l)]) continue;
            std::vector<long long> cls{l};
            assigned[static_cast<size_t>(l)] = 1;
            for (long long m = l + 1; m < g.num_lines; ++m) {
                if (assigned[static_cast<size_t>(m)]) continue;
                if (ls.common(l, m) == 0) {
                    cls.push_back(m);
                    assigned[static_cast<size_t>(m)] = 1;
                }
            }
            classes.push_back(std::move(cls));
        }
        for (const auto& cls : classes)
            for (size_t i = 0; i < cls.size(); ++i)
                for (size_t j = i + 1; j < cls.size(); ++j)
                    if (ls.common(cls[i], cls[j]) != 0)
                        throw std::domain_error("parallelism is not transitive on this structure");
        if (static_cast<long long>(classes.size()) != g.d + 1)
            throw std::domain_error("expected d+1 pencils of parallel lines");
        for (const auto& cls : classes)
            if (static_cast<long long>(cls.size()) != g.d)
                throw std::domain_error("expected d lines per pencil");
        return classes;
    }

    // DAPG: group points by the unconnectedness relation.
    std::vector<std::vector<long long>> pls;
    pls.reserve(static_cast<size_t>(g.num_points));
    for (long long p = 0; p < g.num_points; ++p) pls.push_back(g.point_lines(p));

    std::vector<char> assigned(static_cast<size_t>(g.num_points), 0);
    for (long long p = 0; p < g.num_points; ++p) {
        if (assigned[static_cast<size_t>(p)]) continue;
        std::vector<long long> cls{p};
        assigned[static_cast<size_t>(p)] = 1;
        for (long long q = p + 1; q < g.num_points; ++q) {
            if (assigned[static_cast<size_t>(q)]) continue;
            if (common_line_count(pls, p, q) == 0) {
                cls.push_back(q);
                assigned[static_cast<size_t>(q)] = 1;
            }
        }
        classes.push_back(std::move(cls));
    }
    for (const auto& cls : classes)
        for (size_t i = 0; i < cls.size(); ++i)
            for (size_t j = i + 1; j < cls.size(); ++j)
                if (common_line_count(pls, cls[i], cls[j]) != 0)
                    throw std::domain_error("unconnectedness is not transitive on this structure");
    if (static_cast<long long>(classes.size()) != g.d + 1)
        throw std::domain_error("expected d+1 pencils of points");
    for (const auto& cls : classes)
        if (static_cast<long long>(cls.size()) != g.d)
            throw std::domain_error("expected d points per pencil");
    return classes;
}

std::pair<long long, long long> counting_identity(const Incidence& g) {
    long long by_lines = 0, by_points = 0;
    for (long long l = 0; l < g.num_lines; ++l)
        by_lines += static_cast<long long>(g.line_points(l).size());
    for (long long p = 0; p < g.num_points; ++p)
        by_points += static_cast<long long>(g.point_lines(p).size());
    return {by_lines, by_points};
}

std::pair<long long, long long> deduce_parameters(long long nu, long long k_l) {
    if (!check_odd_prime(k_l))
        throw std::invalid_argument("points-per-line must be an odd prime, got " +
                                    std::to_string(k_l));
    if (nu != k_l * k_l)
        throw std::invalid_argument("point count must equal the square of points-per-line");
    return {k_l * (k_l + 1), k_l + 1};
}

}  // namespace mubgeo
