#include "momwb/solution.hpp"

#include <bit>
#include <stdexcept>

namespace momwb {

Solution::Solution(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

Solution Solution::from_string(std::string_view bits)
{
    Solution s(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            s.set(i);
        } else if (bits[i] != '0') {
            throw std::invalid_argument("solution string must contain only '0' and '1'");
        }
    }
    return s;
}

Solution Solution::from_elements(std::size_t size, std::span<const std::size_t> elements)
{
    Solution s(size);
    for (auto e : elements) {
        if (e >= size) {
            throw std::out_of_range("element index outside the ground set");
        }
        s.set(e);
    }
    return s;
}

Solution Solution::from_elements(std::size_t size, std::initializer_list<std::size_t> elements)
{
    return from_elements(size, std::span<const std::size_t>(elements.begin(), elements.size()));
}

void Solution::set(std::size_t e, bool value) noexcept
{
    auto const mask = std::uint64_t{1} << (e & 63);
    if (value) {
        words_[e >> 6] |= mask;
    } else {
        words_[e >> 6] &= ~mask;
    }
}

std::size_t Solution::count() const noexcept
{
    std::size_t c = 0;
    for (auto w : words_) {
        c += static_cast<std::size_t>(std::popcount(w));
    }
    return c;
}

std::size_t Solution::hamming_distance(const Solution& other) const
{
    if (other.size_ != size_) {
        throw std::invalid_argument("hamming_distance: solutions have different lengths");
    }
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        c += static_cast<std::size_t>(std::popcount(words_[i] ^ other.words_[i]));
    }
    return c;
}

std::vector<std::size_t> Solution::elements() const
{
    std::vector<std::size_t> out;
    for (std::size_t e = 0; e < size_; ++e) {
        if (test(e)) {
            out.push_back(e);
        }
    }
    return out;
}

std::string Solution::to_string() const
{
    std::string out(size_, '0');
    for (std::size_t e = 0; e < size_; ++e) {
        if (test(e)) {
            out[e] = '1';
        }
    }
    return out;
}

std::size_t SolutionHash::operator()(const Solution& s) const noexcept
{
    // FNV-1a over the packed words.
    std::uint64_t h = 1469598103934665603ULL ^ s.size();
    for (auto w : s.words()) {
        h ^= w;
        h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
}

}  // namespace momwb
