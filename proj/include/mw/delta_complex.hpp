#pragma once

// Dimension-generic Delta complexes: top-simplex gluing data plus the
// derived skeleton. Simplex classes of every dimension are equivalence
// classes of (top simplex, vertex subset) under the closure of the gluings,
// the bijection on a glued face being the unique order-preserving one.

#include <algorithm>
#include <bit>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mw/cyclotomic.hpp"

namespace mw {

struct SlotRef {
    int top = 0;
    int face = 0;
    friend bool operator==(const SlotRef&, const SlotRef&) = default;
};

struct GluingPair {
    SlotRef a;
    SlotRef b;
};

struct OrientationResult {
    bool orientable = false;
    std::vector<int> signs;          // per top simplex, +1/-1
    std::vector<int> conflict_tops;  // witness walk when non-orientable
};

struct ValidationReport {
    bool is_pseudo_manifold = false;
    bool is_closed = false;
    bool orientable = false;
    std::vector<long> class_counts;  // per dimension 0..dim
    int boundary_slot_count = 0;
};

struct BoundaryInfo {
    std::vector<int> boundary_slots;
    int internal_vertex_count = 0;
    int internal_facet_classes = 0;
};

class DeltaComplex {
public:
    static DeltaComplex build(int dim, int top_count,
                              const std::vector<GluingPair>& gluings,
                              std::string name = "") {
        if (dim < 1) throw input_error("complex dimension must be >= 1");
        if (dim > 20) throw input_error("complex dimension out of supported range");
        if (top_count < 1) throw input_error("complex needs at least one top simplex");
        DeltaComplex x;
        x.dim_ = dim;
        x.top_count_ = top_count;
        x.name_ = std::move(name);
        x.partner_.assign(static_cast<std::size_t>(top_count * (dim + 1)), -1);
        for (const GluingPair& g : gluings) {
            const int sa = x.checked_slot(g.a);
            const int sb = x.checked_slot(g.b);
            if (sa == sb)
                throw input_error("slot glued to itself: top " + std::to_string(g.a.top) +
                                  " face " + std::to_string(g.a.face));
            for (int s : {sa, sb})
                if (x.partner_[static_cast<std::size_t>(s)] != -1)
                    throw input_error("slot glued twice: top " + std::to_string(s / (dim + 1)) +
                                      " face " + std::to_string(s % (dim + 1)));
            x.partner_[static_cast<std::size_t>(sa)] = sb;
            x.partner_[static_cast<std::size_t>(sb)] = sa;
        }
        x.derive_skeleton();
        return x;
    }

    int dim() const { return dim_; }
    int top_count() const { return top_count_; }
    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    int slot_count() const { return top_count_ * (dim_ + 1); }
    int slot_index(int top, int face) const { return top * (dim_ + 1) + face; }
    SlotRef slot_ref(int slot) const { return {slot / (dim_ + 1), slot % (dim_ + 1)}; }
    int partner(int slot) const { return partner_.at(static_cast<std::size_t>(slot)); }

    /// Canonical list of gluing pairs (each once, lower slot first).
    std::vector<GluingPair> gluing_pairs() const {
        std::vector<GluingPair> out;
        for (int s = 0; s < slot_count(); ++s) {
            int p = partner_[static_cast<std::size_t>(s)];
            if (p > s) out.push_back({slot_ref(s), slot_ref(p)});
        }
        return out;
    }

    /// Dense class id of the simplex spanned by `mask` inside top simplex t;
    /// ids are dense per dimension (popcount(mask) - 1).
    int class_of(int top, unsigned mask) const {
        return class_id_.at(node_index(top, mask));
    }
    int vertex_class(int top, int v) const { return class_of(top, 1u << v); }
    int facet_class_of_slot(int slot) const {
        const SlotRef s = slot_ref(slot);
        return class_of(s.top, face_mask(s.face));
    }

    const std::vector<long>& class_counts() const { return class_counts_; }
    long euler_characteristic() const {
        long chi = 0;
        for (std::size_t k = 0; k < class_counts_.size(); ++k)
            chi += (k % 2 == 0 ? 1 : -1) * class_counts_[k];
        return chi;
    }

    const std::vector<int>& boundary_slots() const { return boundary_slots_; }
    bool is_closed() const { return boundary_slots_.empty(); }
    bool is_pseudo_manifold() const { return true; }  // enforced by construction

    /// Slots incident to each (dim-1)-class (size 1 or 2).
    const std::vector<std::vector<int>>& facet_class_slots() const { return facet_slots_; }

    bool vertex_class_internal(int vclass) const {
        return !vertex_on_boundary_.at(static_cast<std::size_t>(vclass));
    }
    int internal_vertex_count() const {
        int c = 0;
        for (bool b : vertex_on_boundary_)
            if (!b) ++c;
        return c;
    }

    BoundaryInfo boundary_info() const {
        BoundaryInfo info;
        info.boundary_slots = boundary_slots_;
        info.internal_vertex_count = internal_vertex_count();
        info.internal_facet_classes = 0;
        for (const auto& slots : facet_slots_)
            if (slots.size() == 2) ++info.internal_facet_classes;
        return info;
    }

    /// Deterministic orientation: +1 on the lowest-indexed top simplex of
    /// each dual-graph component, propagated across gluings.
    OrientationResult orient() const {
        OrientationResult res;
        std::vector<int> sign(static_cast<std::size_t>(top_count_), 0);
        std::vector<int> parent(static_cast<std::size_t>(top_count_), -1);
        for (int start = 0; start < top_count_; ++start) {
            if (sign[static_cast<std::size_t>(start)] != 0) continue;
            sign[static_cast<std::size_t>(start)] = 1;
            std::vector<int> queue{start};
            for (std::size_t qi = 0; qi < queue.size(); ++qi) {
                const int t = queue[qi];
                for (int i = 0; i <= dim_; ++i) {
                    const int p = partner_[static_cast<std::size_t>(slot_index(t, i))];
                    if (p < 0) continue;
                    const SlotRef pr = slot_ref(p);
                    const int want = -parity(i) * parity(pr.face) * sign[static_cast<std::size_t>(t)];
                    int& s = sign[static_cast<std::size_t>(pr.top)];
                    if (s == 0) {
                        s = want;
                        parent[static_cast<std::size_t>(pr.top)] = t;
                        queue.push_back(pr.top);
                    } else if (s != want) {
                        res.orientable = false;
                        res.conflict_tops = witness_walk(parent, t, pr.top);
                        return res;
                    }
                }
            }
        }
        res.orientable = true;
        res.signs = std::move(sign);
        return res;
    }

    const std::optional<std::vector<int>>& signs() const { return signs_; }

    /// Attach an explicit sign assignment; validated against every internal
    /// (dim-1)-class: (-1)^i eps(t) = -(-1)^i' eps(t').
    void set_signs(std::vector<int> signs) {
        if (static_cast<int>(signs.size()) != top_count_)
            throw input_error("sign assignment has wrong length");
        for (int s : signs)
            if (s != 1 && s != -1) throw input_error("signs must be +1 or -1");
        for (const auto& slots : facet_slots_) {
            if (slots.size() != 2) continue;
            const SlotRef a = slot_ref(slots[0]);
            const SlotRef b = slot_ref(slots[1]);
            if (parity(a.face) * signs[static_cast<std::size_t>(a.top)] !=
                -parity(b.face) * signs[static_cast<std::size_t>(b.top)])
                throw input_error("sign assignment violates the face condition");
        }
        signs_ = std::move(signs);
    }

    /// Compute and store the deterministic orientation; false if

    /// non-orientable.
    bool ensure_oriented() {
        if (signs_) return true;
        OrientationResult res = orient();
        if (!res.orientable) return false;
        signs_ = std::move(res.signs);
        return true;
    }

    void flip_orientation() {
        if (!signs_) throw std::logic_error("flip_orientation: no signs assigned");
        for (int& s : *signs_) s = -s;
    }

    ValidationReport validate() const {
        ValidationReport rep;
        rep.is_pseudo_manifold = true;
        rep.is_closed = is_closed();
        rep.orientable = orient().orientable;
        rep.class_counts = class_counts_;
        rep.boundary_slot_count = static_cast<int>(boundary_slots_.size());
        return rep;
    }

    static int parity(int i) { return (i % 2 == 0) ? 1 : -1; }

    unsigned face_mask(int face) const {
        const unsigned full = (1u << (dim_ + 1)) - 1u;
        return full & ~(1u << face);
    }

private:
    DeltaComplex() = default;

    int checked_slot(const SlotRef& s) const {
        if (s.top < 0 || s.top >= top_count_ || s.face < 0 || s.face > dim_)
            throw input_error("slot out of range: top " + std::to_string(s.top) +
                              " face " + std::to_string(s.face));
        return s.top * (dim_ + 1) + s.face;
    }

    std::size_t node_index(int top, unsigned mask) const {
        return (static_cast<std::size_t>(top) << (dim_ + 1)) | mask;
    }

    void derive_skeleton() {
        const int width = dim_ + 1;
        const std::size_t nodes = static_cast<std::size_t>(top_count_) << width;
        std::vector<int> uf(nodes);
        for (std::size_t i = 0; i < nodes; ++i) uf[i] = static_cast<int>(i);
        auto find = [&](int x) {
            while (uf[static_cast<std::size_t>(x)] != x) {
                uf[static_cast<std::size_t>(x)] =
                    uf[static_cast<std::size_t>(uf[static_cast<std::size_t>(x)])];
                x = uf[static_cast<std::size_t>(x)];
            }
            return x;
        };
        auto unite = [&](std::size_t a, std::size_t b) {
            int ra = find(static_cast<int>(a));
            int rb = find(static_cast<int>(b));
            if (ra != rb) uf[static_cast<std::size_t>(ra)] = rb;
        };

        for (int s = 0; s < slot_count(); ++s) {
            const int p = partner_[static_cast<std::size_t>(s)];
            if (p < s) continue;  // each pair once; p == -1 skipped
            const SlotRef a = slot_ref(s);
            const SlotRef b = slot_ref(p);
            // order-preserving vertex bijection between the two faces
            int map_ab[24];
            {
                int va = 0, vb = 0;
                for (int r = 0; r < dim_; ++r) {
                    if (va == a.face) ++va;
                    if (vb == b.face) ++vb;
                    map_ab[va] = vb;
                    ++va;
                    ++vb;
                }
            }
            const unsigned fm = face_mask(a.face);
            for (unsigned sub = fm; sub != 0; sub = (sub - 1) & fm) {
                unsigned mapped = 0;
                unsigned rest = sub;
                while (rest) {
                    const int v = std::countr_zero(rest);
                    rest &= rest - 1;
                    mapped |= 1u << map_ab[v];
                }
                unite(node_index(a.top, sub), node_index(b.top, mapped));
            }
        }

        // dense class ids per dimension
        class_id_.assign(nodes, -1);
        class_counts_.assign(static_cast<std::size_t>(dim_ + 1), 0);
        std::vector<int> root_id(nodes, -1);
        for (int t = 0; t < top_count_; ++t) {
            const unsigned full = (1u << width) - 1u;
            for (unsigned mask = 1; mask <= full; ++mask) {
                const std::size_t node = node_index(t, mask);
                const int k = std::popcount(mask) - 1;
                const int root = find(static_cast<int>(node));
                if (root_id[static_cast<std::size_t>(root)] < 0) {
                    root_id[static_cast<std::size_t>(root)] =
                        static_cast<int>(class_counts_[static_cast<std::size_t>(k)]++);
                }
                class_id_[node] = root_id[static_cast<std::size_t>(root)];
            }
        }

        boundary_slots_.clear();
        for (int s = 0; s < slot_count(); ++s)
            if (partner_[static_cast<std::size_t>(s)] < 0) boundary_slots_.push_back(s);

        facet_slots_.assign(static_cast<std::size_t>(class_counts_[static_cast<std::size_t>(dim_ - 1)]),
                            {});
        for (int s = 0; s < slot_count(); ++s)
            facet_slots_[static_cast<std::size_t>(facet_class_of_slot(s))].push_back(s);
        for (const auto& slots : facet_slots_)
            if (slots.empty() || slots.size() > 2)
                throw std::logic_error("facet class with invalid slot multiplicity");

        vertex_on_boundary_.assign(static_cast<std::size_t>(class_counts_[0]), false);
        for (int s : boundary_slots_) {
            const SlotRef r = slot_ref(s);
            const unsigned fm = face_mask(r.face);
            unsigned rest = fm;
            while (rest) {
                const int v = std::countr_zero(rest);
                rest &= rest - 1;
                vertex_on_boundary_[static_cast<std::size_t>(vertex_class(r.top, v))] = true;
            }
        }
    }

    std::vector<int> witness_walk(const std::vector<int>& parent, int t, int u) const {
        // walk both tops to the BFS root; the concatenation witnesses the
        // orientation conflict cycle
        std::vector<int> left, right;
        for (int x = t; x != -1; x = parent[static_cast<std::size_t>(x)]) left.push_back(x);
        for (int x = u; x != -1; x = parent[static_cast<std::size_t>(x)]) right.push_back(x);
        std::reverse(left.begin(), left.end());
        left.insert(left.end(), right.begin(), right.end());
        return left;
    }

    int dim_ = 0;
    int top_count_ = 0;
    std::string name_;
    std::vector<int> partner_;
    std::vector<int> class_id_;
    std::vector<long> class_counts_;
    std::vector<std::vector<int>> facet_slots_;
    std::vector<int> boundary_slots_;
    std::vector<bool> vertex_on_boundary_;
    std::optional<std::vector<int>> signs_;
};

/// build_complex: spec-level constructor entry point.
inline DeltaComplex build_complex(int dim, int top_count,
                                  const std::vector<GluingPair>& gluings,
                                  std::string name = "") {
    return DeltaComplex::build(dim, top_count, gluings, std::move(name));
}

}  // namespace mw
