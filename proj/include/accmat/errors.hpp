// Copyright 2026 The accmat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ACCMAT_ERRORS_HPP
#define ACCMAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace accmat {

/// A direction was queried that lies (partially) outside the span of the
/// POVM's Bloch vectors, so its outcome distribution cannot be recovered.
struct NotReconstructiveError : std::domain_error {
    explicit NotReconstructiveError(const std::string& what) : std::domain_error(what) {}
};

/// An outcome distribution is not in the affine image of the Bloch ball
/// under the POVM's probability map (residual too large).
struct InconsistentDistributionError : std::domain_error {
    explicit InconsistentDistributionError(const std::string& what) : std::domain_error(what) {}
};

/// A rejection-sampling generator exhausted its retry budget.
struct SamplingExhaustedError : std::runtime_error {
    explicit SamplingExhaustedError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace accmat

#endif
