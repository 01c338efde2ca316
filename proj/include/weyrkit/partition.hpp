#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace weyrkit {

/// Non-increasing sequence of positive integers.
///
/// part(i) is 1-based and returns 0 for i > length(), matching the usual
/// zero-extension convention for characteristics.
class Partition {
public:
    Partition() = default;
    // Throws std::invalid_argument unless parts is non-increasing and positive.
    explicit Partition(std::vector<std::size_t> parts);
    Partition(std::initializer_list<std::size_t> parts)
        : Partition(std::vector<std::size_t>(parts)) {}

    const std::vector<std::size_t>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    std::size_t weight() const { return weight_; }
    bool empty() const { return parts_.empty(); }

    std::size_t part(std::size_t i) const {
        return (i >= 1 && i <= parts_.size()) ? parts_[i - 1] : 0;
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<std::size_t> parts_;
    std::size_t weight_ = 0;
};

// "(2,2,1)"; the empty partition prints as "()".
std::string to_string(const Partition& p);

// Conjugate partition (transpose of the Young diagram).
Partition dual_partition(const Partition& p);

// Every partition of n, in reverse lexicographic order ((n) first).
std::vector<Partition> partitions_of(std::size_t n);

}  // namespace weyrkit
