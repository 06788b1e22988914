// Copyright 2026 The causal-capacity Authors
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

#pragma once

#include "causal/bounds.hpp"
#include "causal/channel.hpp"
#include "causal/channel_json.hpp"
#include "causal/eigen.hpp"
#include "causal/matrix.hpp"
#include "causal/nelder_mead.hpp"
#include "causal/pdm.hpp"
#include "causal/random.hpp"
#include "causal/suites.hpp"
#include "causal/sweep.hpp"
#include "causal/verify.hpp"
