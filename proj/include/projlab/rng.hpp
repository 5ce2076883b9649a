#pragma once

#include <complex>
#include <cstdint>
#include <array>

#include "projlab/linalg.hpp"

namespace projlab {

// Immutable stream descriptor. Identical (master_seed, stream_index) yields
// an identical value sequence no matter how many other streams exist.
// Parallel workers derive disjoint streams by index.
struct RngStream {
    std::uint64_t master_seed = 0;
    std::uint64_t stream_index = 0;

    RngStream derive(std::uint64_t index) const {
        return RngStream{master_seed, index};
    }
};

// xoshiro256++ seeded through splitmix64 from a stream descriptor.
class Rng {
  public:
    explicit Rng(RngStream stream);

    std::uint64_t next_u64();

    // Uniform on the open interval (0,1), 53 significant bits.
    double uniform();

    // Standard normal via Box-Muller; the spare deviate is cached.
    double gaussian();

    // Independent standard normal real and imaginary parts.
    std::complex<double> complex_gaussian();

  private:
    std::array<std::uint64_t, 4> state_{};
    double spare_ = 0.0;
    bool has_spare_ = false;
};

// Haar-distributed unitary via QR of a complex Ginibre matrix with the
// phase of each triangular diagonal entry pushed into the corresponding
// column of Q (plain QR alone is not Haar).
Matrix haar_unitary(int n, RngStream stream);

// n x m matrix of independent complex standard Gaussians.
Matrix ginibre(int rows, int cols, Rng& rng);

}  // namespace projlab
