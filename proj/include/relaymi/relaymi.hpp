// SPDX-License-Identifier: Apache-2.0
//
// relay-mi: asymptotic mutual-information statistics of two-hop AF MIMO relay channels
// Copyright (C) 2026 The relay-mi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef relaymi_relaymi_H
#define relaymi_relaymi_H

#include "cli.hpp"
#include "complexio.hpp"
#include "config.hpp"
#include "covariance.hpp"
#include "errors.hpp"
#include "linalg.hpp"
#include "montecarlo.hpp"
#include "replica.hpp"
#include "rng.hpp"
#include "saddle.hpp"

#endif
