// Copyright 2026 The qlrc Authors
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

#ifndef QLRC_PARALLEL_H
#define QLRC_PARALLEL_H

#include <cstddef>
#include <functional>

namespace qlrc {

/// Worker count used when a caller passes threads = 0.
size_t default_thread_count();

/// Runs fn(i) for every i in [0, count) on up to `threads` workers
/// (0 = default_thread_count()). Items are handed out dynamically; callers
/// write results into per-item slots so output never depends on scheduling.
/// The first exception thrown by any item is rethrown after all workers stop.
void parallel_for(size_t count, size_t threads, const std::function<void(size_t)> &fn);

}  // namespace qlrc

#endif
