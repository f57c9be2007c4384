#ifndef TAUCORE_VERTEX_SET_HPP
#define TAUCORE_VERTEX_SET_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace tauv {

/// Subset of a ground set of size <= 63, one bit per position.
/// Position i corresponds to the 1-based vertex label i+1 in I/O.
class VertexSet {
  public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static VertexSet from_labels(const std::vector<int>& labels_1based) {
        std::uint64_t b = 0;
        for (int v : labels_1based) b |= std::uint64_t(1) << (v - 1);
        return VertexSet(b);
    }
    static constexpr VertexSet full(int n) {
        return VertexSet(n == 0 ? 0 : (~std::uint64_t(0) >> (64 - n)));
    }
    static constexpr VertexSet single(int pos) { return VertexSet(std::uint64_t(1) << pos); }

    constexpr std::uint64_t bits() const { return bits_; }
    int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool contains(int pos) const { return (bits_ >> pos) & 1; }
    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr bool operator==(const VertexSet&) const = default;
    constexpr auto operator<=>(const VertexSet&) const = default;

    VertexSet with(int pos) const { return VertexSet(bits_ | (std::uint64_t(1) << pos)); }
    VertexSet without(int pos) const { return VertexSet(bits_ & ~(std::uint64_t(1) << pos)); }
    int lowest() const { return std::countr_zero(bits_); }

    std::vector<int> positions() const {
        std::vector<int> out;
        for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }
    std::vector<int> labels_1based() const {
        std::vector<int> out;
        for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
        return out;
    }
    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int v : labels_1based()) {
            if (!first) s += ",";
            s += std::to_string(v);
            first = false;
        }
        return s + "}";
    }

  private:
    std::uint64_t bits_ = 0;
};

}  // namespace tauv

#endif
