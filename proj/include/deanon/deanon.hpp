// Copyright 2026 The deanon Authors.
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

// Umbrella header: the whole library.

#ifndef DEANON_DEANON_HPP_
#define DEANON_DEANON_HPP_

#include "deanon/anonymize/graph_anonymizer.hpp"
#include "deanon/anonymize/text_anonymizer.hpp"
#include "deanon/attack/attack.hpp"
#include "deanon/attack/attack_config.hpp"
#include "deanon/attack/batch.hpp"
#include "deanon/attack/features.hpp"
#include "deanon/core/dataset.hpp"
#include "deanon/core/graph.hpp"
#include "deanon/core/ground_truth.hpp"
#include "deanon/core/io.hpp"
#include "deanon/core/post.hpp"
#include "deanon/core/term_stats.hpp"
#include "deanon/core/tokenize.hpp"
#include "deanon/core/user_id.hpp"
#include "deanon/digest.hpp"
#include "deanon/error.hpp"
#include "deanon/harness/case_matrix.hpp"
#include "deanon/harness/cases.hpp"
#include "deanon/harness/experiment_config.hpp"
#include "deanon/harness/mapping_io.hpp"
#include "deanon/harness/metrics.hpp"
#include "deanon/harness/release.hpp"
#include "deanon/harness/synthetic.hpp"
#include "deanon/numeric.hpp"
#include "deanon/platform/platform_client.hpp"
#include "deanon/platform/platform_index.hpp"
#include "deanon/platform/platform_store.hpp"
#include "deanon/platform/query_log.hpp"
#include "deanon/random.hpp"
#include "deanon/version.hpp"

#endif  // DEANON_DEANON_HPP_
