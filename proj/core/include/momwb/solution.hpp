#pragma once

#include <cstddef>
#include <cstdint>
#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace momwb {

/// Fixed-length bit string over a matroid ground set. Bit e set means
/// element e is selected.
class Solution {
public:
    Solution() = default;
    explicit Solution(std::size_t size);

    /// Parses a string of '0'/'1' characters, element 0 first.
    static Solution from_string(std::string_view bits);
    static Solution from_elements(std::size_t size, std::span<const std::size_t> elements);
    static Solution from_elements(std::size_t size, std::initializer_list<std::size_t> elements);

    [[nodiscard]] std::size_t size() const noexcept { return size_; }
    [[nodiscard]] bool test(std::size_t e) const noexcept
    {
        return (words_[e >> 6] >> (e & 63)) & 1U;
    }
    void set(std::size_t e, bool value = true) noexcept;
    void flip(std::size_t e) noexcept { words_[e >> 6] ^= std::uint64_t{1} << (e & 63); }

    /// Number of selected elements |x|.
    [[nodiscard]] std::size_t count() const noexcept;
    /// |x ⊗ y|, the Hamming distance. Sizes must match.
    [[nodiscard]] std::size_t hamming_distance(const Solution& other) const;
    [[nodiscard]] std::vector<std::size_t> elements() const;
    [[nodiscard]] std::string to_string() const;

    [[nodiscard]] std::span<const std::uint64_t> words() const noexcept { return words_; }
    [[nodiscard]] std::span<std::uint64_t> words() noexcept { return words_; }

    friend bool operator==(const Solution&, const Solution&) = default;
    friend auto operator<=>(const Solution& a, const Solution& b)
    {
        if (auto c = a.size_ <=> b.size_; c != 0) {
            return c;
        }
        return a.words_ <=> b.words_;
    }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

struct SolutionHash {
    std::size_t operator()(const Solution& s) const noexcept;
};

}  // namespace momwb
