// Copyright 2023 The Authors.
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

#ifndef POSITROID_PARALLEL_HPP_
#define POSITROID_PARALLEL_HPP_

#include <functional>

namespace positroid {

// POSITROID_THREADS if set and positive, else the hardware count.
int thread_count();

// Runs fn(0), ..., fn(tasks - 1) on up to `threads` workers (0 means
// thread_count()). Exceptions from fn are rethrown in the caller.
void parallel_for(int tasks, const std::function<void(int)>& fn, int threads = 0);

}  // namespace positroid

#endif  // POSITROID_PARALLEL_HPP_
