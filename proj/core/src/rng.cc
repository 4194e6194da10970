#include "qid/rng.h"

#include <cmath>
#include <numbers>

namespace qid {

namespace {

constexpr uint32_t kPhiloxM0 = 0xD2511F53;
constexpr uint32_t kPhiloxM1 = 0xCD9E8D57;
constexpr uint32_t kPhiloxW0 = 0x9E3779B9;
constexpr uint32_t kPhiloxW1 = 0xBB67AE85;

inline void mulhilo(uint32_t a, uint32_t b, uint32_t &lo, uint32_t &hi) {
    uint64_t p = static_cast<uint64_t>(a) * b;
    lo = static_cast<uint32_t>(p);
    hi = static_cast<uint32_t>(p >> 32);
}

}  // namespace

std::array<uint32_t, 4> philox4x32(std::array<uint32_t, 4> ctr, std::array<uint32_t, 2> key) {
    for (int round = 0; round < 10; round++) {
        uint32_t lo0, hi0, lo1, hi1;
        mulhilo(kPhiloxM0, ctr[0], lo0, hi0);
        mulhilo(kPhiloxM1, ctr[2], lo1, hi1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        key[0] += kPhiloxW0;
        key[1] += kPhiloxW1;
    }
    return ctr;
}

RngStream::RngStream(uint64_t seed, uint64_t stream_id)
    : key_{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32)}, stream_id_(stream_id) {}

void RngStream::refill() {
    buffer_ = philox4x32({static_cast<uint32_t>(block_), static_cast<uint32_t>(block_ >> 32),
                          static_cast<uint32_t>(stream_id_), static_cast<uint32_t>(stream_id_ >> 32)},
                         key_);
    block_++;
    used_ = 0;
}

uint32_t RngStream::next_u32() {
    if (used_ == 4) {
        refill();
    }
    return buffer_[used_++];
}

uint64_t RngStream::next_u64() {
    uint64_t hi = next_u32();
    return (hi << 32) | next_u32();
}

double RngStream::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double RngStream::normal() {
    if (has_spare_normal_) {
        has_spare_normal_ = false;
        return spare_normal_;
    }
    // 1 - uniform() lies in (0, 1], so the log is finite.
    double r = std::sqrt(-2.0 * std::log(1.0 - uniform()));
    double theta = 2.0 * std::numbers::pi * uniform();
    spare_normal_ = r * std::sin(theta);
    has_spare_normal_ = true;
    return r * std::cos(theta);
}

cd RngStream::complex_normal() {
    double re = normal();
    double im = normal();
    return {re, im};
}

uint64_t RngStream::below(uint64_t n) {
    // Rejection sampling avoids modulo bias.
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t x;
    do {
        x = next_u64();
    } while (x >= limit);
    return x % n;
}

SingleQuditState sample_haar(int d, RngStream &stream) {
    std::vector<cd> amps(d);
    for (auto &a : amps) {
        a = stream.complex_normal();
    }
    return SingleQuditState::normalized(std::move(amps));
}

}  // namespace qid
