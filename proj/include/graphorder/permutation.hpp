#pragma once

#include <vector>

#include "graphorder/edge_list.hpp"

namespace graphorder {

// Bijective relabeling over [0, V). Both directions are kept so kernels can
// remap roots (old -> new) and layouts can be walked in new-id order
// (new -> old) without inverting on the fly.
class Permutation {
public:
    Permutation() = default;

    static Permutation identity(VertexId n);
    // Validates bijectivity; throws InvariantViolation otherwise.
    static Permutation from_old_to_new(std::vector<VertexId> old_to_new);
    static Permutation from_new_to_old(std::vector<VertexId> new_to_old);

    VertexId size() const { return static_cast<VertexId>(old_to_new_.size()); }
    VertexId to_new(VertexId old_id) const { return old_to_new_[old_id]; }
    VertexId to_old(VertexId new_id) const { return new_to_old_[new_id]; }

    const std::vector<VertexId>& old_to_new() const { return old_to_new_; }
    const std::vector<VertexId>& new_to_old() const { return new_to_old_; }

    Permutation inverse() const;
    bool is_identity() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<VertexId> old_to_new_;
    std::vector<VertexId> new_to_old_;
};

} // namespace graphorder
