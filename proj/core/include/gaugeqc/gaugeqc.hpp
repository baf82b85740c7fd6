// Copyright 2026 The gaugeqc Authors
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
#pragma once

#include "gaugeqc/circuit.hpp"
#include "gaugeqc/deutsch_jozsa.hpp"
#include "gaugeqc/dynamics.hpp"
#include "gaugeqc/errors.hpp"
#include "gaugeqc/gauge_state.hpp"
#include "gaugeqc/io.hpp"
#include "gaugeqc/linalg.hpp"
#include "gaugeqc/random.hpp"
#include "gaugeqc/spectral_triple.hpp"
