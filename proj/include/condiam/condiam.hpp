// Copyright 2026 The condiam Authors.
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

#ifndef CONDIAM_CONDIAM_HPP_
#define CONDIAM_CONDIAM_HPP_

#include "condiam/canonical.hpp"
#include "condiam/conditional_diameter.hpp"
#include "condiam/extremal_search.hpp"
#include "condiam/families.hpp"
#include "condiam/graph.hpp"
#include "condiam/graph6.hpp"
#include "condiam/invariants.hpp"
#include "condiam/random_graphs.hpp"
#include "condiam/transform_checks.hpp"
#include "condiam/transforms.hpp"

#endif  // CONDIAM_CONDIAM_HPP_
