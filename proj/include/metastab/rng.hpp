#pragma once

#include <cmath>
#include <cstdint>

namespace metastab {

// splitmix64 finalizer; used to derive well-mixed keys from user seeds.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Philox4x32-10 counter-based generator (Salmon et al.). One engine per
// walker, addressed by (key, stream): the stream id occupies the upper
// counter words, the block index the lower ones, so all walkers draw from
// provably disjoint counter ranges no matter how work is scheduled.
class Philox {
public:
    Philox(std::uint64_t key, std::uint64_t stream)
        : key0_(static_cast<std::uint32_t>(key)),
          key1_(static_cast<std::uint32_t>(key >> 32)),
          stream_lo_(static_cast<std::uint32_t>(stream)),
          stream_hi_(static_cast<std::uint32_t>(stream >> 32)) {}

    std::uint32_t next_u32() {
        if (pos_ == 4) {
            generate_block();
            pos_ = 0;
        }
        return block_[pos_++];
    }

    std::uint64_t next_u64() {
        const std::uint64_t lo = next_u32();
        const std::uint64_t hi = next_u32();
        return lo | (hi << 32);
    }

    // uniform on [0,1) with 53 random bits
    double next_uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // standard normal via Box-Muller; one spare value cached
    double next_normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - next_uniform();  // (0,1], keeps log finite
        const double u2 = next_uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    static void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
        const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
        hi = static_cast<std::uint32_t>(p >> 32);
        lo = static_cast<std::uint32_t>(p);
    }

    void generate_block() {
        std::uint32_t x0 = static_cast<std::uint32_t>(ctr_lo_);
        std::uint32_t x1 = static_cast<std::uint32_t>(ctr_lo_ >> 32);
        std::uint32_t x2 = stream_lo_;
        std::uint32_t x3 = stream_hi_;
        std::uint32_t k0 = key0_;
        std::uint32_t k1 = key1_;
        for (int round = 0; round < 10; ++round) {
            std::uint32_t hi0, lo0, hi1, lo1;
            mulhilo(0xD2511F53u, x0, hi0, lo0);
            mulhilo(0xCD9E8D57u, x2, hi1, lo1);
            x0 = hi1 ^ x1 ^ k0;
            x1 = lo1;
            x2 = hi0 ^ x3 ^ k1;
            x3 = lo0;
            k0 += 0x9E3779B9u;
            k1 += 0xBB67AE85u;
        }
        block_[0] = x0;
        block_[1] = x1;
        block_[2] = x2;
        block_[3] = x3;
        ++ctr_lo_;
    }

    std::uint32_t key0_, key1_;
    std::uint32_t stream_lo_, stream_hi_;
    std::uint64_t ctr_lo_ = 0;
    std::uint32_t block_[4] = {0, 0, 0, 0};
    int pos_ = 4;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace metastab
