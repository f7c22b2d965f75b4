#pragma once

// Serial direct-summation transforms. Every output sample is an explicit
// triple sum of bracketed kernel products evaluated with kernel_eval /
// kernel_inverse_eval; nothing is factored or cached. These are the test
// oracles for the sweep kernels in woct/transforms.hpp and the baseline of
// the benchmark. Only non-degenerate matrices are accepted.

#include "woct/transforms.hpp"

namespace woct::reference {

SampledField3D oft_forward(const SampledField3D& f, const Grid3D& omega_grid);

SampledField3D oclct_forward(const SampledField3D& f, const LctParams3& params,
                             const Grid3D& omega_grid);

SampledField3D oclct_inverse(const SampledField3D& spectrum, const LctParams3& params,
                             const Grid3D& t_grid, KernelOrder order = KernelOrder::Reversed);

WoclctResult woclct_forward(const SampledField3D& f, const WindowSpec& window,
                            const LctParams3& params, const Grid3D& omega_grid,
                            const Grid3D& mu_grid);

SampledField3D woclct_inverse(const WoclctResult& g, const WindowSpec& window,
                              const LctParams3& params, const Grid3D& t_grid,
                              KernelOrder order = KernelOrder::Reversed);

}  // namespace woct::reference
