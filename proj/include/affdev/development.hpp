#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "affdev/errors.hpp"
#include "affdev/geometry.hpp"
#include "affdev/interval.hpp"

namespace affdev {

struct CornerRef {
    int face = -1;
    int corner = -1;

    auto operator<=>(const CornerRef&) const = default;
};

/// Edge e of face f joins corner e to corner e+1 (mod corner count).
struct EdgeSlot {
    int face = -1;
    int edge = -1;

    auto operator<=>(const EdgeSlot&) const = default;
};

struct Gluing {
    EdgeSlot a, b;
};

struct ValidationIssue {
    enum class Kind {
        LengthMismatch,
        NonConvexFace,
        Disconnected,
        InconsistentVertexClass,
        NonManifoldStar,
    };
    Kind kind;
    std::string detail;
};

inline const char* to_string(ValidationIssue::Kind k)
{
    switch (k) {
    case ValidationIssue::Kind::LengthMismatch: return "LengthMismatch";
    case ValidationIssue::Kind::NonConvexFace: return "NonConvexFace";
    case ValidationIssue::Kind::Disconnected: return "Disconnected";
    case ValidationIssue::Kind::InconsistentVertexClass: return "InconsistentVertexClass";
    case ValidationIssue::Kind::NonManifoldStar: return "NonManifoldStar";
    }
    return "?";
}

/// A natural development: planar convex face polygons, edge gluings, and a
/// partition of face corners into development vertices. Immutable once
/// constructed; all geometric queries are const.
class Development {
public:
    struct Face {
        std::string id;
        PlanarPolygon polygon;
    };
    struct VertexClass {
        std::string id;
        std::vector<CornerRef> corners;
    };
    /// One edge of the development: the one or two face slots that realize
    /// it, plus its endpoint vertex classes.
    struct DevEdge {
        std::vector<EdgeSlot> slots;
        std::vector<int> endpoints;  // 1 or 2 distinct class indices
    };
    /// Faces around a vertex in star order. For a closed (interior) star of
    /// m faces there are m rim vertices, rim[i] across edge i, with face i
    /// lying between edges i and i+1 (mod m). For a boundary star of m faces
    /// there are m+1 edges and rim entries.
    struct Star {
        bool valid = false;
        bool closed = false;
        std::vector<int> faces;
        std::vector<int> rim;    // other endpoint class of each star edge
        std::vector<int> edges;  // development edge indices, same order as rim
    };

    Development(std::vector<Face> faces, std::vector<Gluing> gluings,
                std::vector<VertexClass> classes)
        : faces_(std::move(faces)), gluings_(std::move(gluings)), classes_(std::move(classes))
    {
        build();
    }

    static Development parse(const std::string& text);
    std::string serialize() const;

    int face_count() const { return static_cast<int>(faces_.size()); }
    const Face& face(int f) const { return faces_[std::size_t(f)]; }
    int face_index(const std::string& id) const
    {
        auto it = face_index_.find(id);
        if (it == face_index_.end()) raise(Errc::DanglingReference, "unknown face '" + id + "'");
        return it->second;
    }

    int vertex_count() const { return static_cast<int>(classes_.size()); }
    const VertexClass& vertex(int v) const { return classes_[std::size_t(v)]; }
    int vertex_index(const std::string& id) const
    {
        auto it = class_index_.find(id);
        if (it == class_index_.end()) raise(Errc::UnknownVertex, "unknown vertex '" + id + "'");
        return it->second;
    }

    const std::vector<Gluing>& gluings() const { return gluings_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const DevEdge& edge(int e) const { return edges_[std::size_t(e)]; }

    int corner_class(int f, int c) const
    {
        return corner_class_[std::size_t(f)][std::size_t(c)];
    }
    /// Gluing partner of a slot, if any.
    std::optional<EdgeSlot> partner(EdgeSlot s) const
    {
        const int g = slot_gluing_[std::size_t(s.face)][std::size_t(s.edge)];
        if (g < 0) return std::nullopt;
        const Gluing& gl = gluings_[std::size_t(g)];
        return (gl.a == s) ? gl.b : gl.a;
    }

    bool closed() const { return closed_; }
    double longest_edge() const { return longest_edge_; }

    int valency(int v) const
    {
        require_vertex(v);
        return static_cast<int>(vertex_edges_[std::size_t(v)].size());
    }

    const std::vector<int>& vertex_faces(int v) const
    {
        require_vertex(v);
        return vertex_faces_[std::size_t(v)];
    }

    const Star& star(int v) const
    {
        require_vertex(v);
        return stars_[std::size_t(v)];
    }

    /// 2*pi minus the sum of face angles at the vertex.
    double vertex_curvature(int v) const
    {
        require_vertex(v);
        double sum = 0.0;
        for (const CornerRef& c : classes_[std::size_t(v)].corners)
            sum += interior_angle(faces_[std::size_t(c.face)].polygon, c.corner);
        return 2.0 * std::numbers::pi - sum;
    }

    /// Distance between two vertices measured inside a shared face. All
    /// shared faces must agree within eps_len (relative to the longest
    /// edge); the returned value is the mean of the measurements.
    double cofacial_distance(int a, int b, double eps_len = 1e-9) const
    {
        if (a == b) return 0.0;
        const auto m = cofacial_measurements(a, b);
        if (m.empty())
            raise(Errc::NotCofacial,
                  "vertices '" + vertex(a).id + "' and '" + vertex(b).id + "' share no face");
        const double tol = eps_len * std::max(longest_edge_, 1e-300);
        const auto [lo, hi] = std::minmax_element(m.begin(), m.end());
        if (*hi - *lo > tol)
            raise(Errc::InconsistentDistance,
                  "shared faces disagree on d(" + vertex(a).id + "," + vertex(b).id + ")");
        double s = 0.0;
        for (double x : m) s += x;
        return s / double(m.size());
    }

    bool cofacial(int a, int b) const { return a == b || !cofacial_measurements(a, b).empty(); }

    /// Conservative enclosure of the squared cofacial distance (hull over
    /// all shared-face measurements). Feeds the certified solver path.
    Interval cofacial_distance2(int a, int b) const
    {
        if (a == b) return Interval(0.0);
        std::optional<Interval> acc;
        for_each_cofacial_pair(a, b, [&](int f, int ca, int cb) {
            const Vec2 p = faces_[std::size_t(f)].polygon.corner(ca);
            const Vec2 q = faces_[std::size_t(f)].polygon.corner(cb);
            const Interval dx = Interval(p.x) - Interval(q.x);
            const Interval dy = Interval(p.y) - Interval(q.y);
            const Interval d2 = square(dx) + square(dy);
            acc = acc ? Interval::hull(*acc, d2) : d2;
        });
        if (!acc)
            raise(Errc::NotCofacial,
                  "vertices '" + vertex(a).id + "' and '" + vertex(b).id + "' share no face");
        return *acc;
    }

    std::vector<ValidationIssue> validate(double eps_len = 1e-9) const;

    bool operator==(const Development& o) const
    {
        if (faces_.size() != o.faces_.size() || gluings_.size() != o.gluings_.size()
            || classes_.size() != o.classes_.size())
            return false;
        for (std::size_t i = 0; i < faces_.size(); ++i) {
            if (faces_[i].id != o.faces_[i].id) return false;
            const auto& va = faces_[i].polygon.vertices;
            const auto& vb = o.faces_[i].polygon.vertices;
            if (va.size() != vb.size()) return false;
            for (std::size_t j = 0; j < va.size(); ++j)
                if (va[j].x != vb[j].x || va[j].y != vb[j].y) return false;
        }
        auto norm_gluing = [](const Gluing& g) {
            return g.a < g.b ? std::pair(g.a, g.b) : std::pair(g.b, g.a);
        };
        std::set<std::pair<EdgeSlot, EdgeSlot>> ga, gb;
        for (const auto& g : gluings_) ga.insert(norm_gluing(g));
        for (const auto& g : o.gluings_) gb.insert(norm_gluing(g));
        if (ga != gb) return false;
        for (std::size_t i = 0; i < classes_.size(); ++i) {
            if (classes_[i].id != o.classes_[i].id) return false;
            std::set<CornerRef> ca(classes_[i].corners.begin(), classes_[i].corners.end());
            std::set<CornerRef> cb(o.classes_[i].corners.begin(), o.classes_[i].corners.end());
            if (ca != cb) return false;
        }
        return true;
    }

private:
    std::vector<Face> faces_;
    std::vector<Gluing> gluings_;
    std::vector<VertexClass> classes_;

    std::map<std::string, int> face_index_, class_index_;
    std::vector<std::vector<int>> corner_class_;  // face -> corner -> class or -1
    std::vector<std::vector<int>> slot_gluing_;   // face -> edge -> gluing index or -1
    std::vector<DevEdge> edges_;
    std::vector<std::vector<int>> vertex_edges_;
    std::vector<std::vector<int>> vertex_faces_;
    std::vector<Star> stars_;
    bool closed_ = false;
    double longest_edge_ = 0.0;

    void require_vertex(int v) const
    {
        if (v < 0 || v >= vertex_count()) raise(Errc::UnknownVertex, "vertex index out of range");
    }

    template <class F>
    void for_each_cofacial_pair(int a, int b, F&& fn) const
    {
        for (const CornerRef& ca : classes_[std::size_t(a)].corners)
            for (const CornerRef& cb : classes_[std::size_t(b)].corners)
                if (ca.face == cb.face && ca.corner != cb.corner)
                    fn(ca.face, ca.corner, cb.corner);
    }

    std::vector<double> cofacial_measurements(int a, int b) const
    {
        std::vector<double> m;
        for_each_cofacial_pair(a, b, [&](int f, int ca, int cb) {
            m.push_back(norm(faces_[std::size_t(f)].polygon.corner(ca)
                             - faces_[std::size_t(f)].polygon.corner(cb)));
        });
        return m;
    }

    void build();
    void build_star(int v);
};

inline void Development::build()
{
    for (int f = 0; f < face_count(); ++f) {
        const auto& fd = faces_[std::size_t(f)];
        if (fd.polygon.size() < 3)
            raise(Errc::ParseError, "face '" + fd.id + "' has fewer than 3 vertices");
        if (!face_index_.emplace(fd.id, f).second)
            raise(Errc::ParseError, "duplicate face id '" + fd.id + "'");
    }
    for (int v = 0; v < vertex_count(); ++v)
        if (!class_index_.emplace(classes_[std::size_t(v)].id, v).second)
            raise(Errc::ParseError, "duplicate vertex id '" + classes_[std::size_t(v)].id + "'");

    corner_class_.assign(faces_.size(), {});
    slot_gluing_.assign(faces_.size(), {});
    for (int f = 0; f < face_count(); ++f) {
        corner_class_[std::size_t(f)].assign(std::size_t(faces_[std::size_t(f)].polygon.size()), -1);
        slot_gluing_[std::size_t(f)].assign(std::size_t(faces_[std::size_t(f)].polygon.size()), -1);
    }

    for (int v = 0; v < vertex_count(); ++v) {
        for (const CornerRef& c : classes_[std::size_t(v)].corners) {
            if (c.face < 0 || c.face >= face_count()
                || c.corner < 0 || c.corner >= faces_[std::size_t(c.face)].polygon.size())
                raise(Errc::DanglingReference,
                      "vertex class '" + classes_[std::size_t(v)].id + "' references a missing corner");
            int& slot = corner_class_[std::size_t(c.face)][std::size_t(c.corner)];
            if (slot != -1)
                raise(Errc::ParseError, "corner listed in two vertex classes");
            slot = v;
        }
    }
    for (int f = 0; f < face_count(); ++f)
        for (int c = 0; c < faces_[std::size_t(f)].polygon.size(); ++c)
            if (corner_class_[std::size_t(f)][std::size_t(c)] == -1)
                raise(Errc::ParseError,
                      "corner " + std::to_string(c) + " of face '" + faces_[std::size_t(f)].id
                          + "' belongs to no vertex class");

    auto check_slot = [&](EdgeSlot s) {
        if (s.face < 0 || s.face >= face_count()
            || s.edge < 0 || s.edge >= faces_[std::size_t(s.face)].polygon.size())
            raise(Errc::DanglingReference, "gluing references a missing edge");
    };
    for (int g = 0; g < static_cast<int>(gluings_.size()); ++g) {
        const Gluing& gl = gluings_[std::size_t(g)];
        check_slot(gl.a);
        check_slot(gl.b);
        if (gl.a == gl.b) raise(Errc::ParseError, "edge glued to itself");
        for (EdgeSlot s : {gl.a, gl.b}) {
            int& slot = slot_gluing_[std::size_t(s.face)][std::size_t(s.edge)];
            if (slot != -1) raise(Errc::ParseError, "edge appears in two gluings");
            slot = g;
        }
    }

    // Development edges: one per gluing plus one per unglued slot.
    auto endpoints_of = [&](EdgeSlot s) {
        const int m = faces_[std::size_t(s.face)].polygon.size();
        return std::pair(corner_class_[std::size_t(s.face)][std::size_t(s.edge)],
                         corner_class_[std::size_t(s.face)][std::size_t((s.edge + 1) % m)]);
    };
    closed_ = true;
    for (const Gluing& gl : gluings_) {
        DevEdge e;
        e.slots = {gl.a, gl.b};
        auto [p, q] = endpoints_of(gl.a);
        auto [r, s] = endpoints_of(gl.b);
        std::set<int> ends{p, q, r, s};
        e.endpoints.assign(ends.begin(), ends.end());
        edges_.push_back(std::move(e));
    }
    for (int f = 0; f < face_count(); ++f)
        for (int c = 0; c < faces_[std::size_t(f)].polygon.size(); ++c)
            if (slot_gluing_[std::size_t(f)][std::size_t(c)] < 0) {
                closed_ = false;
                DevEdge e;
                e.slots = {EdgeSlot{f, c}};
                auto [p, q] = endpoints_of({f, c});
                std::set<int> ends{p, q};
                e.endpoints.assign(ends.begin(), ends.end());
                edges_.push_back(std::move(e));
            }

    vertex_edges_.assign(classes_.size(), {});
    for (int e = 0; e < edge_count(); ++e)
        for (int v : edges_[std::size_t(e)].endpoints)
            vertex_edges_[std::size_t(v)].push_back(e);

    vertex_faces_.assign(classes_.size(), {});
    for (int v = 0; v < vertex_count(); ++v) {
        std::set<int> fs;
        for (const CornerRef& c : classes_[std::size_t(v)].corners) fs.insert(c.face);
        vertex_faces_[std::size_t(v)].assign(fs.begin(), fs.end());
    }

    longest_edge_ = 0.0;
    for (int f = 0; f < face_count(); ++f)
        for (int c = 0; c < faces_[std::size_t(f)].polygon.size(); ++c)
            longest_edge_ = std::max(longest_edge_, faces_[std::size_t(f)].polygon.edge_length(c));

    stars_.assign(classes_.size(), {});
    for (int v = 0; v < vertex_count(); ++v) build_star(v);
}

inline void Development::build_star(int v)
{
    Star& st = stars_[std::size_t(v)];
    const auto& corners = classes_[std::size_t(v)].corners;
    if (corners.empty()) return;

    // Wing slots of a corner: edge c-1 (side 0) and edge c (side 1). Gluings
    // link wings of different nodes; a gluing may attach either side to
    // either side, since face orientations are not required to agree.
    struct Node {
        CornerRef corner;
        EdgeSlot wing[2];
        int nb_node[2] = {-1, -1};
        int nb_side[2] = {-1, -1};
        bool used = false;
    };
    std::vector<Node> nodes;
    std::map<EdgeSlot, std::pair<int, int>> by_slot;  // slot -> (node, wing side)
    for (const CornerRef& c : corners) {
        const int m = faces_[std::size_t(c.face)].polygon.size();
        Node nd;
        nd.corner = c;
        nd.wing[0] = {c.face, (c.corner + m - 1) % m};
        nd.wing[1] = {c.face, c.corner};
        const int idx = static_cast<int>(nodes.size());
        for (int s = 0; s < 2; ++s)
            if (!by_slot.emplace(nd.wing[s], std::pair(idx, s)).second) return;  // degenerate
        nodes.push_back(nd);
    }
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
        for (int s = 0; s < 2; ++s) {
            auto p = partner(nodes[std::size_t(i)].wing[s]);
            if (!p) continue;
            auto it = by_slot.find(*p);
            if (it == by_slot.end()) return;  // gluing leaves the vertex: classes inconsistent
            nodes[std::size_t(i)].nb_node[s] = it->second.first;
            nodes[std::size_t(i)].nb_side[s] = it->second.second;
        }
    }

    // Deterministic start: a node with an unglued wing (boundary star) and
    // the lowest corner, else the lowest corner overall.
    int start = -1, entry = 0;
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
        for (int s = 0; s < 2; ++s)
            if (nodes[std::size_t(i)].nb_node[s] < 0)
                if (start < 0 || nodes[std::size_t(i)].corner < nodes[std::size_t(start)].corner) {
                    start = i;
                    entry = s;
                }
    const bool is_closed = (start < 0);
    if (start < 0) {
        start = 0;
        for (int i = 1; i < static_cast<int>(nodes.size()); ++i)
            if (nodes[std::size_t(i)].corner < nodes[std::size_t(start)].corner) start = i;
        entry = 0;
    }

    auto rim_class = [&](EdgeSlot s) {
        const int f = s.face;
        const int m = faces_[std::size_t(f)].polygon.size();
        const int c0 = corner_class_[std::size_t(f)][std::size_t(s.edge)];
        const int c1 = corner_class_[std::size_t(f)][std::size_t((s.edge + 1) % m)];
        return (c0 == v) ? c1 : c0;
    };
    auto edge_of_slot = [&](EdgeSlot s) {
        const int g = slot_gluing_[std::size_t(s.face)][std::size_t(s.edge)];
        if (g >= 0) return g;
        for (int e = static_cast<int>(gluings_.size()); e < edge_count(); ++e)
            if (edges_[std::size_t(e)].slots[0] == s) return e;
        return -1;
    };

    int cur = start, enter = entry;
    while (true) {
        Node& nd = nodes[std::size_t(cur)];
        if (nd.used) return;  // revisits a face: not a simple fan
        nd.used = true;
        st.faces.push_back(nd.corner.face);
        st.rim.push_back(rim_class(nd.wing[enter]));
        st.edges.push_back(edge_of_slot(nd.wing[enter]));
        const int exit = 1 - enter;
        const int next = nd.nb_node[exit];
        if (next < 0) {
            st.rim.push_back(rim_class(nd.wing[exit]));
            st.edges.push_back(edge_of_slot(nd.wing[exit]));
            break;  // boundary star ends
        }
        const int next_enter = nd.nb_side[exit];
        if (next == start && next_enter == entry) break;  // closed star came around
        cur = next;
        enter = next_enter;
    }
    if (st.faces.size() != corners.size()) {
        st = Star{};  // disconnected fan: leave invalid
        return;
    }
    st.closed = is_closed;
    st.valid = true;
}

inline std::vector<ValidationIssue> Development::validate(double eps_len) const
{
    std::vector<ValidationIssue> issues;
    const double tol = eps_len * std::max(longest_edge_, 1e-300);

    auto slot_name = [&](EdgeSlot s) {
        return "(" + faces_[std::size_t(s.face)].id + "," + std::to_string(s.edge) + ")";
    };
    auto slot_len = [&](EdgeSlot s) {
        return faces_[std::size_t(s.face)].polygon.edge_length(s.edge);
    };

    for (const Gluing& g : gluings_) {
        const double la = slot_len(g.a), lb = slot_len(g.b);
        if (std::fabs(la - lb) > tol)
            issues.push_back({ValidationIssue::Kind::LengthMismatch,
                              "glued edges " + slot_name(g.a) + " and " + slot_name(g.b)
                                  + " have lengths " + std::to_string(la) + " vs "
                                  + std::to_string(lb)});
    }

    for (int f = 0; f < face_count(); ++f)
        if (!strictly_convex(faces_[std::size_t(f)].polygon))
            issues.push_back({ValidationIssue::Kind::NonConvexFace,
                              "face '" + faces_[std::size_t(f)].id + "' is not strictly convex"});

    if (face_count() > 0) {
        std::vector<bool> seen(faces_.size(), false);
        std::queue<int> bfs;
        bfs.push(0);
        seen[0] = true;
        while (!bfs.empty()) {
            const int f = bfs.front();
            bfs.pop();
            for (int c = 0; c < faces_[std::size_t(f)].polygon.size(); ++c) {
                auto p = partner({f, c});
                if (p && !seen[std::size_t(p->face)]) {
                    seen[std::size_t(p->face)] = true;
                    bfs.push(p->face);
                }
            }
        }
        for (int f = 0; f < face_count(); ++f)
            if (!seen[std::size_t(f)])
                issues.push_back({ValidationIssue::Kind::Disconnected,
                                  "face '" + faces_[std::size_t(f)].id
                                      + "' is unreachable by crossing glued edges"});
    }

    // Corners identified by a gluing must match in one of the two endpoint
    // pairings.
    for (const Gluing& g : gluings_) {
        const int ma = faces_[std::size_t(g.a.face)].polygon.size();
        const int mb = faces_[std::size_t(g.b.face)].polygon.size();
        const int a0 = corner_class_[std::size_t(g.a.face)][std::size_t(g.a.edge)];
        const int a1 = corner_class_[std::size_t(g.a.face)][std::size_t((g.a.edge + 1) % ma)];
        const int b0 = corner_class_[std::size_t(g.b.face)][std::size_t(g.b.edge)];
        const int b1 = corner_class_[std::size_t(g.b.face)][std::size_t((g.b.edge + 1) % mb)];
        const bool aligned = (a0 == b0 && a1 == b1);
        const bool reversed = (a0 == b1 && a1 == b0);
        if (!aligned && !reversed)
            issues.push_back({ValidationIssue::Kind::InconsistentVertexClass,
                              "gluing " + slot_name(g.a) + " ~ " + slot_name(g.b)
                                  + " does not identify matching vertex classes"});
    }

    for (int v = 0; v < vertex_count(); ++v)
        if (!classes_[std::size_t(v)].corners.empty() && !stars_[std::size_t(v)].valid)
            issues.push_back({ValidationIssue::Kind::NonManifoldStar,
                              "faces at vertex '" + classes_[std::size_t(v)].id
                                  + "' do not form a single fan"});

    return issues;
}

// --- JSON ------------------------------------------------------------------

inline Development Development::parse(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        raise(Errc::ParseError, e.what());
    }
    try {
        std::vector<Face> faces;
        std::map<std::string, int> face_idx;
        for (const auto& jf : j.at("faces")) {
            Face f;
            f.id = jf.at("id").get<std::string>();
            for (const auto& jv : jf.at("vertices"))
                f.polygon.vertices.push_back({jv.at(0).get<double>(), jv.at(1).get<double>()});
            face_idx.emplace(f.id, static_cast<int>(faces.size()));
            faces.push_back(std::move(f));
        }
        auto face_of = [&](const std::string& id) {
            auto it = face_idx.find(id);
            if (it == face_idx.end())
                raise(Errc::DanglingReference, "unknown face '" + id + "'");
            return it->second;
        };
        std::vector<Gluing> gluings;
        if (j.contains("gluings"))
            for (const auto& jg : j.at("gluings")) {
                Gluing g;
                g.a = {face_of(jg.at(0).at(0).get<std::string>()), jg.at(0).at(1).get<int>()};
                g.b = {face_of(jg.at(1).at(0).get<std::string>()), jg.at(1).at(1).get<int>()};
                gluings.push_back(g);
            }
        std::vector<VertexClass> classes;
        if (j.contains("vertexClasses"))
            for (const auto& jc : j.at("vertexClasses")) {
                VertexClass c;
                c.id = jc.at("id").get<std::string>();
                for (const auto& jr : jc.at("corners"))
                    c.corners.push_back(
                        {face_of(jr.at(0).get<std::string>()), jr.at(1).get<int>()});
                classes.push_back(std::move(c));
            }
        return Development(std::move(faces), std::move(gluings), std::move(classes));
    } catch (const nlohmann::json::exception& e) {
        raise(Errc::ParseError, e.what());
    }
}

inline std::string Development::serialize() const
{
    nlohmann::ordered_json j;
    j["faces"] = nlohmann::ordered_json::array();
    for (const auto& f : faces_) {
        nlohmann::ordered_json jf;
        jf["id"] = f.id;
        auto& jv = jf["vertices"] = nlohmann::ordered_json::array();
        for (const auto& p : f.polygon.vertices) jv.push_back({p.x, p.y});
        j["faces"].push_back(std::move(jf));
    }
    auto& jg = j["gluings"] = nlohmann::ordered_json::array();
    for (const auto& g : gluings_)
        jg.push_back({{faces_[std::size_t(g.a.face)].id, g.a.edge},
                      {faces_[std::size_t(g.b.face)].id, g.b.edge}});
    auto& jc = j["vertexClasses"] = nlohmann::ordered_json::array();
    for (const auto& c : classes_) {
        nlohmann::ordered_json e;
        e["id"] = c.id;
        auto& cr = e["corners"] = nlohmann::ordered_json::array();
        for (const auto& r : c.corners) cr.push_back({faces_[std::size_t(r.face)].id, r.corner});
        jc.push_back(std::move(e));
    }
    return j.dump(2);
}

}  // namespace affdev
