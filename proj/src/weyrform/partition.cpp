#include "weyrkit/partition.hpp"

#include <numeric>
#include <stdexcept>

namespace weyrkit {

Partition::Partition(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0) {
            throw std::invalid_argument("partition parts must be positive");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("partition parts must be non-increasing");
        }
    }
    weight_ = std::accumulate(parts_.begin(), parts_.end(), std::size_t{0});
}

std::string to_string(const Partition& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.length(); ++i) {
        s += (i ? "," : "") + std::to_string(p.parts()[i]);
    }
    return s + ")";
}

Partition dual_partition(const Partition& p) {
    std::vector<std::size_t> dual(p.empty() ? 0 : p.parts().front(), 0);
    for (std::size_t part : p.parts()) {
        for (std::size_t c = 0; c < part; ++c) {
            ++dual[c];
        }
    }
    return Partition(std::move(dual));
}

std::vector<Partition> partitions_of(std::size_t n) {
    std::vector<Partition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<std::size_t> current{n};
    for (;;) {
        out.emplace_back(current);
        // Next partition in reverse lexicographic order.
        std::size_t ones = 0;
        while (!current.empty() && current.back() == 1) {
            current.pop_back();
            ++ones;
        }
        if (current.empty()) {
            return out;
        }
        const std::size_t k = --current.back();
        std::size_t remaining = ones + 1;
        while (remaining > k) {
            current.push_back(k);
            remaining -= k;
        }
        if (remaining > 0) {
            current.push_back(remaining);
        }
    }
}

}  // namespace weyrkit
