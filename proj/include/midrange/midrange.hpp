// Copyright 2026 The midrange Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Umbrella header.

#ifndef MIDRANGE_MIDRANGE_HPP_
#define MIDRANGE_MIDRANGE_HPP_

#include "midrange/analytic.hpp"
#include "midrange/drawing.hpp"
#include "midrange/exact.hpp"
#include "midrange/geom.hpp"
#include "midrange/io.hpp"
#include "midrange/montecarlo.hpp"
#include "midrange/parallel.hpp"
#include "midrange/planar.hpp"
#include "midrange/projection.hpp"
#include "midrange/quadrature.hpp"
#include "midrange/sampling.hpp"
#include "midrange/selftest.hpp"

#endif  // MIDRANGE_MIDRANGE_HPP_
