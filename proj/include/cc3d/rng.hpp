#pragma once

#include <cmath>
#include <cstdint>

#include "cc3d/common.hpp"

namespace cc3d {

// Philox4x32-10 counter-based generator. Streams are cheap to split by key,
// so parallel consumers (rays, pixels, steps) each derive an independent
// stream from (seed, stream_id) and results do not depend on thread count.
class Philox {
public:
    Philox(u64 seed, u64 stream) : key0_(u32(seed)), key1_(u32(seed >> 32)) {
        ctr_[2] = u32(stream);
        ctr_[3] = u32(stream >> 32);
    }

    u32 next_u32() {
        if (idx_ == 4) {
            block();
            idx_ = 0;
        }
        return out_[idx_++];
    }

    u64 next_u64() {
        u64 lo = next_u32();
        u64 hi = next_u32();
        return (hi << 32) | lo;
    }

    // Uniform in [0, 1).
    double uniform() { return double(next_u32()) * (1.0 / 4294967296.0); }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    i64 uniform_int(i64 n) { return i64(next_u64() % u64(n)); }

    // Box-Muller; caches the second draw.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        while (u1 <= 1e-12) u1 = uniform();
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    static u32 mulhi(u32 a, u32 b) { return u32((u64(a) * u64(b)) >> 32); }
    static u32 mullo(u32 a, u32 b) { return a * b; }

    void block() {
        u32 c0 = ctr_[0], c1 = ctr_[1], c2 = ctr_[2], c3 = ctr_[3];
        u32 k0 = key0_, k1 = key1_;
        for (int round = 0; round < 10; ++round) {
            u32 hi0 = mulhi(0xD2511F53u, c0), lo0 = mullo(0xD2511F53u, c0);
            u32 hi1 = mulhi(0xCD9E8D57u, c2), lo1 = mullo(0xCD9E8D57u, c2);
            u32 n0 = hi1 ^ c1 ^ k0;
            u32 n1 = lo1;
            u32 n2 = hi0 ^ c3 ^ k1;
            u32 n3 = lo0;
            c0 = n0;
            c1 = n1;
            c2 = n2;
            c3 = n3;
            k0 += 0x9E3779B9u;
            k1 += 0xBB67AE85u;
        }
        out_[0] = c0;
        out_[1] = c1;
        out_[2] = c2;
        out_[3] = c3;
        if (++ctr_[0] == 0 && ++ctr_[1] == 0) ++ctr_[2];
    }

    u32 key0_, key1_;
    u32 ctr_[4] = {0, 0, 0, 0};
    u32 out_[4] = {0, 0, 0, 0};
    int idx_ = 4;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// FNV-1a, used both for content hashing and for deriving rng stream ids
// from structured names ("camera", scene_id, step, ...).
inline u64 fnv1a(const void* data, std::size_t n, u64 h = 14695981039346656037ull) {
    const unsigned char* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

inline u64 fnv1a_str(const std::string& s, u64 h = 14695981039346656037ull) {
    return fnv1a(s.data(), s.size(), h);
}

inline u64 stream_id(const std::string& purpose, u64 a = 0, u64 b = 0) {
    u64 h = fnv1a_str(purpose);
    h = fnv1a(&a, sizeof a, h);
    h = fnv1a(&b, sizeof b, h);
    return h;
}

}  // namespace cc3d
