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

#ifndef ACCMAT_ACCMAT_HPP
#define ACCMAT_ACCMAT_HPP

#include "accmat/accuracy.hpp"
#include "accmat/cloning.hpp"
#include "accmat/errors.hpp"
#include "accmat/estimation.hpp"
#include "accmat/joint.hpp"
#include "accmat/json_io.hpp"
#include "accmat/operators.hpp"
#include "accmat/povm.hpp"
#include "accmat/quadrature.hpp"
#include "accmat/reconstruction.hpp"
#include "accmat/sampling.hpp"
#include "accmat/tolerances.hpp"
#include "accmat/tradeoff.hpp"
#include "accmat/transition.hpp"
#include "accmat/vec3.hpp"

#endif
