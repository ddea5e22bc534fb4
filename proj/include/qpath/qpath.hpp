// Copyright 2026 The qpath Authors
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

// Umbrella header for the whole library (the CLI layer excluded).

#ifndef QPATH_QPATH_HPP
#define QPATH_QPATH_HPP

#include "qpath/errors.hpp"
#include "qpath/algebra/modint.hpp"
#include "qpath/algebra/fields.hpp"
#include "qpath/algebra/polynomial.hpp"
#include "qpath/algebra/kahler.hpp"
#include "qpath/algebra/amplitude.hpp"
#include "qpath/algebra/mod_matrix.hpp"
#include "qpath/circuit/circuit.hpp"
#include "qpath/circuit/labeling.hpp"
#include "qpath/pathsum/phase.hpp"
#include "qpath/pathsum/gauss.hpp"
#include "qpath/pathsum/amplitudes.hpp"
#include "qpath/densesim/dense.hpp"
#include "qpath/phasespace/symplectic.hpp"
#include "qpath/phasespace/wigner.hpp"
#include "qpath/action/genfun.hpp"
#include "qpath/action/paths.hpp"
#include "qpath/action/action.hpp"
#include "qpath/cv/cv.hpp"
#include "qpath/parallel.hpp"
#include "qpath/random.hpp"

#endif
