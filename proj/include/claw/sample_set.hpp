#pragma once

#include <cassert>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "claw/graph.hpp"
#include "claw/rng.hpp"

namespace claw {

/// Shrink-only set over {0..n-1} with O(1) uniform sampling, deletion and
/// membership. Two arrays: the members occupy the first size() cells of a1,
/// and a2 maps each element to its cell in a1 (-1 when absent). Starts full,
/// with a1[i] = a2[i] = i; there is no insertion.
class SampleSet {
public:
    static constexpr std::int64_t kAbsent = -1;

    explicit SampleSet(Vertex n) : a1_(n), a2_(n), size_(n) {
        for (Vertex i = 0; i < n; ++i) {
            a1_[i] = i;
            a2_[i] = i;
        }
    }

    Vertex capacity() const { return static_cast<Vertex>(a2_.size()); }
    Vertex size() const { return size_; }
    bool empty() const { return size_ == 0; }

    bool contains(Vertex i) const {
        if (i >= capacity()) throw std::invalid_argument("SampleSet::contains: element out of range");
        return a2_.data()[i] != kAbsent;
    }

    /// Swap-with-last deletion: the member in the last occupied cell moves
    /// into the vacated cell. Removing a non-member is an algorithm bug.
    void remove(Vertex i) {
        if (i >= capacity()) throw std::logic_error("SampleSet::remove: element is not a member");
        const std::int64_t cell = a2_.data()[i];
        if (cell == kAbsent) throw std::logic_error("SampleSet::remove: element is not a member");
        const Vertex last = a1_[size_ - 1];
        a1_[cell] = last;
        a2_[last] = cell;
        a2_.data()[i] = kAbsent;
        --size_;
        assert(check_invariants());
    }

    Vertex sample(Rng& rng) const {
        if (size_ == 0) throw std::logic_error("SampleSet::sample: set is empty");
        return a1_[uniform_below(rng, size_)];
    }

    /// Members in storage order (the first size() cells of a1).
    std::span<const Vertex> members() const { return {a1_.data(), size_}; }

    /// Cell of i in a1, or kAbsent.
    std::int64_t position_of(Vertex i) const {
        if (i >= capacity()) throw std::invalid_argument("SampleSet::position_of: element out of range");
        return a2_[i];
    }

    /// Full O(n) audit of the two-array invariants.
    bool check_invariants() const {
        if (size_ > capacity()) return false;
        std::uint64_t present = 0;
        for (Vertex i = 0; i < capacity(); ++i) {
            const std::int64_t cell = a2_[i];
            if (cell == kAbsent) continue;
            ++present;
            if (cell < 0 || static_cast<Vertex>(cell) >= size_ || a1_[cell] != i) return false;
        }
        if (present != size_) return false;
        for (Vertex cell = 0; cell < size_; ++cell)
            if (a2_[a1_[cell]] != static_cast<std::int64_t>(cell)) return false;
        return true;
    }

private:
    std::vector<Vertex> a1_;
    std::vector<std::int64_t> a2_;
    Vertex size_ = 0;
};

}  // namespace claw
