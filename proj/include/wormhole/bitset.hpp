#pragma once

#include <cstdint>
#include <vector>

namespace wormhole {

/// Fixed-size bitmap over node ids. Bit i lives in byte i/8, LSB first --
/// the same layout the decomposition file stores.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::uint64_t size) : size_(size), bytes_((size + 7) / 8, 0) {}

    std::uint64_t size() const { return size_; }

    bool test(std::uint64_t i) const {
        return (bytes_[i >> 3] >> (i & 7)) & 1u;
    }
    void set(std::uint64_t i) { bytes_[i >> 3] |= static_cast<std::uint8_t>(1u << (i & 7)); }
    void reset(std::uint64_t i) { bytes_[i >> 3] &= static_cast<std::uint8_t>(~(1u << (i & 7))); }

    std::uint64_t count() const {
        std::uint64_t total = 0;
        for (std::uint8_t b : bytes_) total += static_cast<std::uint64_t>(__builtin_popcount(b));
        return total;
    }

    const std::vector<std::uint8_t>& bytes() const { return bytes_; }
    std::vector<std::uint8_t>& bytes() { return bytes_; }

    bool operator==(const Bitset&) const = default;

private:
    std::uint64_t size_ = 0;
    std::vector<std::uint8_t> bytes_;
};

}  // namespace wormhole
