// Copyright 2026 The galois-qudits Authors
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

// Everything at once.

#pragma once

#include "gq/bases.hpp"
#include "gq/bits.hpp"
#include "gq/css.hpp"
#include "gq/error.hpp"
#include "gq/fq_matrix.hpp"
#include "gq/gates.hpp"
#include "gq/gf2e.hpp"
#include "gq/grs.hpp"
#include "gq/io.hpp"
#include "gq/oracle.hpp"
#include "gq/pauli.hpp"
#include "gq/poly.hpp"
#include "gq/q2b.hpp"
#include "gq/tableau.hpp"
#include "gq/verify.hpp"
