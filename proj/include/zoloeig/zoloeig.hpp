// Copyright 2026 The ZoloEig Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ZOLOEIG_ZOLOEIG_HPP
#define ZOLOEIG_ZOLOEIG_HPP

#include "zoloeig/band_factor.hpp"
#include "zoloeig/dense.hpp"
#include "zoloeig/dense_eig.hpp"
#include "zoloeig/eigensolver.hpp"
#include "zoloeig/error.hpp"
#include "zoloeig/filter_design.hpp"
#include "zoloeig/filter_engine.hpp"
#include "zoloeig/gmres.hpp"
#include "zoloeig/hamiltonian.hpp"
#include "zoloeig/matrix_market.hpp"
#include "zoloeig/mobius.hpp"
#include "zoloeig/rcm.hpp"
#include "zoloeig/sparse.hpp"
#include "zoloeig/specfun.hpp"
#include "zoloeig/window.hpp"
#include "zoloeig/zolotarev.hpp"

namespace zoloeig {
inline constexpr const char* kVersion = "0.1.0";
}

#endif  // ZOLOEIG_ZOLOEIG_HPP
