#pragma once

#include <cstdint>
#include <vector>

#include "qpg/hardy_littlewood.hpp"
#include "qpg/numtheory.hpp"
#include "qpg/symplectic.hpp"

// Serial reference implementations of every parallel kernel. These exist so
// the tests (and the benchmark target) can check that the OpenMP versions
// produce identical results; they are deliberately simple single-threaded
// loops sharing no code with the parallel paths beyond the scalar helpers.
namespace qpg::ref {

hl::ScanReport theorem1_scan_serial(std::uint64_t limit,
                                    const nt::PrimeTable& pt);

hl::ScanReport prop2_scan_serial(std::uint64_t limit, const nt::PrimeTable& pt);

std::vector<std::vector<std::uint64_t>> atg_table_serial(
    std::uint64_t max_index, std::uint64_t max_n, const nt::PrimeTable& pt);

std::vector<std::uint64_t> maximal_g_set_serial(std::uint64_t limit,
                                                const nt::PrimeTable& pt);

std::vector<std::uint64_t> gd_champions_serial(std::uint64_t limit,
                                               const nt::PrimeTable& pt);

std::vector<std::uint64_t> x_champions_serial(std::uint64_t limit,
                                              const nt::PrimeTable& pt);

std::vector<symplectic::IsotropicLine> enumerate_isotropic_lines_serial(
    std::uint32_t q);

// Second, independent route to the unordered pair count: a boolean
// convolution over the prime indicator.
std::uint64_t pair_count_convolution(std::uint64_t n, const nt::PrimeTable& pt);

}  // namespace qpg::ref
