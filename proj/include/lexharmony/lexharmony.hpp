// Copyright 2026 The lexharmony Authors
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

// Umbrella header. The review HTTP binding (review_server.hpp) and the
// network trainer (joint_trainer.hpp, needs Eigen) are included separately.

#include "lexharmony/corpus.hpp"
#include "lexharmony/distance.hpp"
#include "lexharmony/error.hpp"
#include "lexharmony/g2p.hpp"
#include "lexharmony/lm.hpp"
#include "lexharmony/miner.hpp"
#include "lexharmony/normalizer.hpp"
#include "lexharmony/pron_stats.hpp"
#include "lexharmony/review_api.hpp"
#include "lexharmony/rules.hpp"
#include "lexharmony/session.hpp"
#include "lexharmony/unicode.hpp"
