#ifndef GPOS_SRC_BITS_HH
#define GPOS_SRC_BITS_HH

#include <bit>
#include <cstdint>

namespace gpos::detail::bits
{
    using Word = std::uint64_t;

    constexpr auto words_for(int n) -> int
    {
        return (n + 63) / 64;
    }

    inline auto set(Word * b, int i) -> void
    {
        b[i >> 6] |= Word{ 1 } << (i & 63);
    }

    inline auto reset(Word * b, int i) -> void
    {
        b[i >> 6] &= ~(Word{ 1 } << (i & 63));
    }

    inline auto test(const Word * b, int i) -> bool
    {
        return (b[i >> 6] >> (i & 63)) & 1;
    }

    inline auto count(const Word * b, int words) -> int
    {
        int c = 0;
        for (int w = 0; w < words; ++w)
            c += std::popcount(b[w]);
        return c;
    }

    /// -1 when empty.
    inline auto first(const Word * b, int words) -> int
    {
        for (int w = 0; w < words; ++w)
            if (b[w])
                return (w << 6) + std::countr_zero(b[w]);
        return -1;
    }

    inline auto intersect(Word * into, const Word * other, int words) -> void
    {
        for (int w = 0; w < words; ++w)
            into[w] &= other[w];
    }

    inline auto subtract(Word * into, const Word * other, int words) -> void
    {
        for (int w = 0; w < words; ++w)
            into[w] &= ~other[w];
    }

    template <typename F>
    inline auto for_each(const Word * b, int words, F && f) -> void
    {
        for (int w = 0; w < words; ++w)
            for (auto x = b[w]; x; x &= x - 1)
                f((w << 6) + std::countr_zero(x));
    }
}

#endif
