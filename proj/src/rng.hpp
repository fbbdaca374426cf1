#pragma once

#include <cstdint>
#include <limits>

namespace levylab::detail {

/// SplitMix64 generator; one instance per (seed, sample index) stream.
class SplitMix {
public:
    using result_type = std::uint64_t;

    explicit SplitMix(std::uint64_t state) : state_(state) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
    SplitMix a(seed);
    const std::uint64_t s = a();
    SplitMix b(s ^ (index * 0xd1b54a32d192ed03ULL + 0x632be59bd9b4e019ULL));
    return b();
}

}  // namespace levylab::detail
