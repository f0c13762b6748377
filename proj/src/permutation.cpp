#include "graphorder/permutation.hpp"

#include <numeric>

#include "graphorder/error.hpp"

namespace graphorder {

namespace {

std::vector<VertexId> invert(const std::vector<VertexId>& forward) {
    const auto n = static_cast<VertexId>(forward.size());
    std::vector<VertexId> inverse(n, n); // n marks "unassigned"
    for (VertexId v = 0; v < n; ++v) {
        VertexId image = forward[v];
        if (image >= n)
            throw InvariantViolation("permutation image " + std::to_string(image) +
                                     " out of range for V=" + std::to_string(n));
        if (inverse[image] != n)
            throw InvariantViolation("permutation maps two vertices to " + std::to_string(image));
        inverse[image] = v;
    }
    return inverse;
}

} // namespace

Permutation Permutation::identity(VertexId n) {
    Permutation p;
    p.old_to_new_.resize(n);
    std::iota(p.old_to_new_.begin(), p.old_to_new_.end(), VertexId{0});
    p.new_to_old_ = p.old_to_new_;
    return p;
}

Permutation Permutation::from_old_to_new(std::vector<VertexId> old_to_new) {
    Permutation p;
    p.new_to_old_ = invert(old_to_new);
    p.old_to_new_ = std::move(old_to_new);
    return p;
}

Permutation Permutation::from_new_to_old(std::vector<VertexId> new_to_old) {
    Permutation p;
    p.old_to_new_ = invert(new_to_old);
    p.new_to_old_ = std::move(new_to_old);
    return p;
}

Permutation Permutation::inverse() const {
    Permutation p;
    p.old_to_new_ = new_to_old_;
    p.new_to_old_ = old_to_new_;
    return p;
}

bool Permutation::is_identity() const {
    for (VertexId v = 0; v < size(); ++v)
        if (old_to_new_[v] != v) return false;
    return true;
}

} // namespace graphorder
