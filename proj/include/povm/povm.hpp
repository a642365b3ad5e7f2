// Copyright 2026 The povmkit Authors
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

// Umbrella header. cli.hpp is separate because it pulls in CLI11.

#include "povm/error.hpp"
#include "povm/herm.hpp"
#include "povm/random.hpp"
#include "povm/bases.hpp"
#include "povm/model.hpp"
#include "povm/construct.hpp"
#include "povm/conditions.hpp"
#include "povm/geometry.hpp"
#include "povm/io.hpp"
