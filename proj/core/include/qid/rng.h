#ifndef QID_RNG_H
#define QID_RNG_H

#include <array>
#include <cstdint>

#include "qid/tensor_core.h"

namespace qid {

/// Philox4x32-10 block function (Salmon et al., SC'11). Maps a 128-bit
/// counter and a 64-bit key to 128 pseudo-random bits.
std::array<uint32_t, 4> philox4x32(std::array<uint32_t, 4> counter, std::array<uint32_t, 2> key);

/// Counter-based random stream keyed by (seed, stream id). Two streams with
/// the same key produce the same sequence no matter which thread runs them
/// or in what order, which is what makes parallel experiments reproducible.
class RngStream {
   public:
    RngStream(uint64_t seed, uint64_t stream_id);

    uint32_t next_u32();
    uint64_t next_u64();
    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    /// Standard normal via Box-Muller.
    double normal();
    /// Real and imaginary parts i.i.d. standard normal.
    cd complex_normal();
    /// Uniform integer on [0, n).
    uint64_t below(uint64_t n);

   private:
    void refill();

    std::array<uint32_t, 2> key_;
    uint64_t stream_id_;
    uint64_t block_ = 0;
    std::array<uint32_t, 4> buffer_{};
    int used_ = 4;
    bool has_spare_normal_ = false;
    double spare_normal_ = 0;
};

/// Haar-random pure state of one qudit: i.i.d. standard complex Gaussian
/// amplitudes, normalized.
SingleQuditState sample_haar(int d, RngStream &stream);

}  // namespace qid

#endif
