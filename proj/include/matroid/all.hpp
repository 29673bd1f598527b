// Copyright 2026 The Authors.
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

#ifndef MATROID_ALL_HPP_
#define MATROID_ALL_HPP_

#include "matroid/bijection.hpp"
#include "matroid/catalog_io.hpp"
#include "matroid/enumeration.hpp"
#include "matroid/error.hpp"
#include "matroid/free_product.hpp"
#include "matroid/iso.hpp"
#include "matroid/literal.hpp"
#include "matroid/matroid.hpp"
#include "matroid/subset_mask.hpp"
#include "matroid/verify.hpp"
#include "matroid/weak_map.hpp"

#endif  // MATROID_ALL_HPP_
