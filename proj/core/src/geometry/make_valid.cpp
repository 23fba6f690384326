// Copyright 2026 The Voirie Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Geometry repair.
//
// Cadastral data is routinely dirty: unclosed rings, duplicate vertices,
// reversed orientation, and the occasional self-intersecting ("bow-tie")
// ring.  Repair interprets each ring under the even-odd rule:
//
//   1. normalize rings (close, drop coincident vertices, fix orientation);
//   2. a self-intersecting ring becomes a small planar arrangement: its
//      segments are split at every self-intersection, spikes are pruned,
//      and the faces are traced with the half-edge structure;
//   3. crossing any edge flips even-odd parity, so a breadth-first walk
//      of the face adjacency graph starting outside labels every face
//      inside or outside — no numeric probing involved;
//   4. the boundary between inside and outside faces is traced into outer
//      rings and holes, which IS the ring's well-defined interior;
//   5. repaired holes are subtracted from the repaired shell, polygons of
//      a multipolygon unioned.
//
// Collinear overlapping edges within one ring are not untangled; they do
// not occur in parcel data at the snap tolerance.

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>
#include <utility>
#include <vector>

#include "src/geometry/boost_glue.hpp"
#include "voirie/error.hpp"
#include "voirie/geometry/ops.hpp"

namespace voirie::geom {

namespace {

namespace bg = boost::geometry;
using detail::BMultiPolygon;
using detail::BPolygon;

// Two points within this distance are the same arrangement node.
constexpr double node_merge_tolerance = 1e-7;

double signed_ring_area(const Ring& ring) {
    double twice = 0.0;
    for (std::size_t i = 1; i < ring.size(); ++i) {
        twice += ring[i - 1].x * ring[i].y - ring[i].x * ring[i - 1].y;
    }
    return twice / 2.0;
}

// Closes the ring and drops consecutive vertices within the snap tolerance.
// Returns an empty ring when fewer than 3 distinct vertices remain.
Ring clean_ring(const Ring& ring) {
    Ring out;
    out.reserve(ring.size() + 1);
    for (const Point& p : ring) {
        if (!out.empty() && std::hypot(p.x - out.back().x, p.y - out.back().y) <= snap_tolerance_m)
            continue;
        out.push_back(p);
    }
    if (out.size() >= 2 &&
        std::hypot(out.front().x - out.back().x, out.front().y - out.back().y) <=
            snap_tolerance_m) {
        out.pop_back();
    }
    if (out.size() < 3) return {};
    out.push_back(out.front());
    return out;
}

// Proper intersection of segments ab and cd, if any (endpoint touches are
// reported too; collinear overlaps are ignored).
bool segment_intersection(const Point& a, const Point& b, const Point& c, const Point& d,
                          double& t_ab, double& t_cd, Point& at) {
    const double rx = b.x - a.x, ry = b.y - a.y;
    const double sx = d.x - c.x, sy = d.y - c.y;
    const double denom = rx * sy - ry * sx;
    if (std::abs(denom) < 1e-15) return false;
    const double qpx = c.x - a.x, qpy = c.y - a.y;
    t_ab = (qpx * sy - qpy * sx) / denom;
    t_cd = (qpx * ry - qpy * rx) / denom;
    if (t_ab < -1e-12 || t_ab > 1.0 + 1e-12 || t_cd < -1e-12 || t_cd > 1.0 + 1e-12) return false;
    at = {a.x + t_ab * rx, a.y + t_ab * ry};
    return true;
}

// Even-odd point-in-ring test (half-open crossing rule).
bool point_in_ring(const Point& q, const Ring& ring) {
    bool inside = false;
    for (std::size_t i = 1; i < ring.size(); ++i) {
        const Point& a = ring[i - 1];
        const Point& b = ring[i];
        if ((a.y <= q.y) == (b.y <= q.y)) continue;
        const double x_cross = a.x + (q.y - a.y) * (b.x - a.x) / (b.y - a.y);
        if (q.x < x_cross) inside = !inside;
    }
    return inside;
}

// Planar arrangement of one closed walk: nodes at vertices and crossing
// points, half-edges between consecutive nodes, faces traced with the
// interior on the left.
class RingArrangement {
public:
    explicit RingArrangement(const Ring& closed_ring) {
        build_walk(closed_ring);
        prune_spikes();
        build_half_edges();
        trace_faces();
        label_parity();
    }

    /// The even-odd interior as polygons: outer rings counter-clockwise
    /// with their holes.  Empty when nothing has an interior.
    std::vector<PolygonWithHoles> interior() const {
        // Boundary half-edges keep the interior on their left.  A loop
        // that revisits a node is two lobes touching there; OGC rings may
        // not self-touch, so such loops are split at the repeated node.
        std::vector<Ring> outers;
        std::vector<Ring> holes;
        std::vector<bool> visited(half_targets_.size(), false);
        for (std::size_t start = 0; start < half_targets_.size(); ++start) {
            if (visited[start] || !is_boundary(start)) continue;
            std::vector<std::size_t> cycle;
            std::size_t he = start;
            do {
                visited[he] = true;
                cycle.push_back(half_targets_[he]);
                he = next_boundary(he);
            } while (he != start && !visited[he]);
            if (he != start) continue;
            for (const std::vector<std::size_t>& simple : split_at_repeated_nodes(cycle)) {
                Ring loop;
                loop.reserve(simple.size() + 1);
                for (std::size_t node : simple) loop.push_back(nodes_[node]);
                loop.push_back(loop.front());
                const double area = signed_ring_area(loop);
                if (area > node_merge_tolerance * node_merge_tolerance) {
                    outers.push_back(std::move(loop));
                } else if (area < -node_merge_tolerance * node_merge_tolerance) {
                    holes.push_back(std::move(loop));
                }
            }
        }

        std::vector<PolygonWithHoles> polygons;
        polygons.reserve(outers.size());
        for (Ring& outer : outers) polygons.push_back({std::move(outer), {}});
        for (Ring& hole : holes) {
            // A hole edge midpoint lies strictly inside its owning outer.
            const Point probe{(hole[0].x + hole[1].x) / 2.0, (hole[0].y + hole[1].y) / 2.0};
            for (PolygonWithHoles& polygon : polygons) {
                if (point_in_ring(probe, polygon.outer)) {
                    polygon.inners.push_back(std::move(hole));
                    break;
                }
            }
        }
        return polygons;
    }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    // Splits a node cycle at repeated nodes: every time an id recurs, the
    // enclosed stretch pops off as one simple cycle.
    static std::vector<std::vector<std::size_t>> split_at_repeated_nodes(
        const std::vector<std::size_t>& cycle) {
        std::vector<std::vector<std::size_t>> out;
        std::vector<std::size_t> path;
        for (std::size_t node : cycle) {
            const auto it = std::find(path.begin(), path.end(), node);
            if (it == path.end()) {
                path.push_back(node);
                continue;
            }
            if (path.end() - it >= 3) out.emplace_back(it, path.end());
            path.erase(it + 1, path.end());
        }
        if (path.size() >= 3) out.push_back(std::move(path));
        return out;
    }

    std::size_t node_of(const Point& p) {
        for (std::size_t i = 0; i < nodes_.size(); ++i) {
            if (std::hypot(p.x - nodes_[i].x, p.y - nodes_[i].y) <= node_merge_tolerance) return i;
        }
        nodes_.push_back(p);
        return nodes_.size() - 1;
    }

    void build_walk(const Ring& closed_ring) {
        struct Split {
            double t;
            Point at;
        };
        const std::size_t n = closed_ring.size() - 1;  // closed: last repeats first
        std::vector<std::vector<Split>> splits(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
                if (adjacent) continue;
                double ti = 0.0, tj = 0.0;
                Point at;
                if (segment_intersection(closed_ring[i], closed_ring[i + 1], closed_ring[j],
                                         closed_ring[j + 1], ti, tj, at)) {
                    splits[i].push_back({ti, at});
                    splits[j].push_back({tj, at});
                }
            }
        }
        std::vector<std::size_t> walk;
        for (std::size_t i = 0; i < n; ++i) {
            walk.push_back(node_of(closed_ring[i]));
            std::sort(splits[i].begin(), splits[i].end(),
                      [](const Split& a, const Split& b) { return a.t < b.t; });
            for (const Split& s : splits[i]) {
                const std::size_t node = node_of(s.at);
                if (walk.back() != node) walk.push_back(node);
            }
        }
        walk.push_back(walk.front());
        for (std::size_t i = 1; i < walk.size(); ++i) {
            if (walk[i - 1] != walk[i]) edges_.emplace_back(walk[i - 1], walk[i]);
        }
    }

    // Spikes carry no area and crossing them twice never changes parity.
    void prune_spikes() {
        std::vector<int> degree(nodes_.size(), 0);
        std::vector<bool> alive(edges_.size(), true);
        for (const auto& [u, v] : edges_) {
            ++degree[u];
            ++degree[v];
        }
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t e = 0; e < edges_.size(); ++e) {
                if (!alive[e]) continue;
                const auto [u, v] = edges_[e];
                if (degree[u] == 1 || degree[v] == 1) {
                    alive[e] = false;
                    --degree[u];
                    --degree[v];
                    changed = true;
                }
            }
        }
        std::vector<std::pair<std::size_t, std::size_t>> kept;
        kept.reserve(edges_.size());
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            if (alive[e]) kept.push_back(edges_[e]);
        }
        edges_ = std::move(kept);
    }

    void build_half_edges() {
        // Half-edge 2e runs edges_[e].first -> .second, 2e+1 the reverse.
        half_targets_.assign(edges_.size() * 2, npos);
        outgoing_.assign(nodes_.size(), {});
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            half_targets_[2 * e] = edges_[e].second;
            half_targets_[2 * e + 1] = edges_[e].first;
            outgoing_[edges_[e].first].push_back(2 * e);
            outgoing_[edges_[e].second].push_back(2 * e + 1);
        }
        auto angle_of = [&](std::size_t he) {
            const Point& from = nodes_[half_targets_[he ^ 1]];
            const Point& to = nodes_[half_targets_[he]];
            return std::atan2(to.y - from.y, to.x - from.x);
        };
        for (auto& list : outgoing_) {
            std::sort(list.begin(), list.end(),
                      [&](std::size_t a, std::size_t b) { return angle_of(a) < angle_of(b); });
        }
        // Interior-on-the-left tracing: the successor of u->v is the
        // clockwise neighbor of v->u among v's outgoing half-edges.
        next_.assign(half_targets_.size(), npos);
        for (std::size_t he = 0; he < half_targets_.size(); ++he) {
            next_[he] = rotate_clockwise(he ^ 1);
        }
    }

    std::size_t rotate_clockwise(std::size_t outgoing_he) const {
        const std::size_t node = half_targets_[outgoing_he ^ 1];
        const auto& list = outgoing_[node];
        const auto it = std::find(list.begin(), list.end(), outgoing_he);
        const std::size_t pos = static_cast<std::size_t>(it - list.begin());
        return list[(pos + list.size() - 1) % list.size()];
    }

    void trace_faces() {
        face_of_.assign(half_targets_.size(), npos);
        std::size_t face_count = 0;
        std::vector<double> face_area;
        for (std::size_t start = 0; start < half_targets_.size(); ++start) {
            if (face_of_[start] != npos || half_targets_[start] == npos) continue;
            const std::size_t face = face_count++;
            double twice_area = 0.0;
            std::size_t he = start;
            do {
                face_of_[he] = face;
                const Point& from = nodes_[half_targets_[he ^ 1]];
                const Point& to = nodes_[half_targets_[he]];
                twice_area += from.x * to.y - to.x * from.y;
                he = next_[he];
            } while (he != start && face_of_[he] == npos);
            face_area.push_back(twice_area / 2.0);
        }
        // The unique unbounded face has negative net cycle area.
        unbounded_face_ = 0;
        for (std::size_t f = 1; f < face_area.size(); ++f) {
            if (face_area[f] < face_area[unbounded_face_]) unbounded_face_ = f;
        }
        face_count_ = face_count;
    }

    void label_parity() {
        face_inside_.assign(face_count_, false);
        std::vector<char> seen(face_count_, 0);
        std::deque<std::size_t> queue;
        seen[unbounded_face_] = 1;
        queue.push_back(unbounded_face_);
        while (!queue.empty()) {
            const std::size_t face = queue.front();
            queue.pop_front();
            for (std::size_t he = 0; he < half_targets_.size(); ++he) {
                if (face_of_[he] != face) continue;
                const std::size_t neighbor = face_of_[he ^ 1];
                if (neighbor == npos || seen[neighbor]) continue;
                seen[neighbor] = 1;
                face_inside_[neighbor] = !face_inside_[face];
                queue.push_back(neighbor);
            }
        }
    }

    bool is_boundary(std::size_t he) const {
        return face_inside_[face_of_[he]] && !face_inside_[face_of_[he ^ 1]];
    }

    // Next boundary half-edge, merging across edges internal to the
    // region: rotate clockwise from the twin until a boundary edge shows.
    std::size_t next_boundary(std::size_t he) const {
        std::size_t candidate = he ^ 1;
        const std::size_t guard = outgoing_[half_targets_[he]].size() + 1;
        for (std::size_t step = 0; step < guard; ++step) {
            candidate = rotate_clockwise(candidate);
            if (is_boundary(candidate)) return candidate;
        }
        return he ^ 1;  // defensive; cannot happen on consistent labels
    }

    std::vector<Point> nodes_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    std::vector<std::size_t> half_targets_;         // half-edge -> target node
    std::vector<std::size_t> next_;                 // half-edge -> face successor
    std::vector<std::vector<std::size_t>> outgoing_;  // node -> sorted half-edges
    std::vector<std::size_t> face_of_;              // half-edge -> face id
    std::vector<bool> face_inside_;                 // face id -> even-odd parity
    std::size_t face_count_ = 0;
    std::size_t unbounded_face_ = 0;
};

// Even-odd region covered by one dirty ring, as a valid multipolygon.
BMultiPolygon repair_ring(const Ring& ring) {
    const Ring cleaned = clean_ring(ring);
    if (cleaned.empty()) return {};

    BPolygon candidate;
    candidate.outer() = detail::to_boost(cleaned);
    bg::correct(candidate);
    if (bg::is_valid(candidate)) {
        BMultiPolygon mp;
        mp.push_back(std::move(candidate));
        return mp;
    }

    AreaGeometry region;
    region.polygons = RingArrangement(cleaned).interior();
    BMultiPolygon out = detail::to_boost(region);
    bg::correct(out);
    return out;
}

}  // namespace

AreaGeometry make_valid(const AreaGeometry& g) {
    if (g.empty()) {
        throw Error(ErrorKind::repair_failed, "cannot repair an empty ring list");
    }
    if (is_valid(g)) return g;

    BMultiPolygon result;
    for (const PolygonWithHoles& poly : g.polygons) {
        BMultiPolygon shell = repair_ring(poly.outer);
        for (const Ring& inner : poly.inners) {
            BMultiPolygon hole = repair_ring(inner);
            BMultiPolygon remaining;
            bg::difference(shell, hole, remaining);
            shell = detail::normalized(remaining);
        }
        BMultiPolygon merged;
        bg::union_(result, shell, merged);
        result = detail::normalized(merged);
    }

    if (bg::area(result) <= 0.0) {
        throw Error(ErrorKind::repair_failed,
                    "geometry has no well-defined interior (zero-area degenerate)");
    }
    AreaGeometry repaired = detail::from_boost(result);
    std::string reason;
    if (!is_valid(repaired, reason)) {
        throw Error(ErrorKind::repair_failed, "repair did not converge: " + reason);
    }
    return repaired;
}

}  // namespace voirie::geom
